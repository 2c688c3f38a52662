//! The Iwahori-Weyl group of even unitary similitude groups.

pub mod admissible;
pub mod element;
pub mod group;

pub use admissible::{admissible, dominant_in_window, finite_orbit};
pub use element::{Cocharacter, WeylElement};
pub use group::{equivariant_perms, GroupCtx, Wall};
