//! Hermitian forms, dual lattices, form conversion, classification and lifting.

pub mod classify;
pub mod convert;
pub mod hensel;
pub mod hermitian;

pub use classify::{isometry_class, isometry_class_int, IsometryClass, LocalFieldScalar};
pub use convert::{convert_form, default_zeta, Direction, FormGram, FormKind};
pub use hensel::{hensel_unitarize, is_similitude, similitude_defect};
pub use hermitian::HermitianForm;
