//! Points of local models over finite fields and their cell decomposition.

pub mod census;
pub mod chain;
pub mod convolution;
pub mod enumerate;
pub mod iwahori;
pub mod relpos;
pub mod window;

pub use census::{cell_census, Cell, Census, CensusOptions, ClosureReport};
pub use chain::{is_local_model_point, standard_chain, ChainJson, LatticeChain, PointDiagnostics};
pub use convolution::{check_representable, convolution_count, convolution_row, count_against};
pub use enumerate::{enumerate_points, gaussian_binomial, member_candidates, work_estimate};
pub use iwahori::{iwahori_generators, IwahoriSampler};
pub use relpos::{relative_position, relative_position_to_base, standard_full_chain, translate_standard};
pub use window::{ModelCtx, ModelWindow};
