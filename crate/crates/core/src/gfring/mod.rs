//! Finite fields, truncated series rings and their submodules.

pub mod field;
pub mod linalg;
pub mod matrix;
pub mod series;
pub mod submodule;

pub use field::{Fe, FieldCtx, FieldHeader};
pub use matrix::TruncMatrix;
pub use series::{SeriesRing, TruncSeries};
pub use submodule::{Submodule, SubmoduleJson};
