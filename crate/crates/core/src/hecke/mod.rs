//! The Iwahori-Hecke algebra with Laurent coefficients, Bernstein elements
//! and the centre.

pub mod algebra;
pub mod bernstein;
pub mod characterize;
pub mod fit;
pub mod laurent;

pub use algebra::{HeckeAlgebra, HeckeElement, HeckeTermJson, ParameterSystem};
pub use bernstein::regular_dominant;
pub use characterize::{central_from_characterization, Characterization};
pub use fit::{fit_parameters, FitCount, ParameterFit};
pub use laurent::Laurent;
