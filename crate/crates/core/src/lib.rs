//! Local models of even unramified unitary similitude groups over finite
//! fields, their Schubert cell decompositions and the Iwahori-Hecke algebra.
//!
//! The crate is organised bottom-up: [`gfring`] supplies field and lattice
//! arithmetic, [`forms`] hermitian pairings and lifting, [`weyl`] the
//! Iwahori-Weyl group, [`latmodel`] point enumeration and [`hecke`] the
//! symbolic side.

pub mod error;
pub mod forms;
pub mod gfring;
pub mod hecke;
pub mod latmodel;
pub mod weyl;

pub use error::{Error, Result};
