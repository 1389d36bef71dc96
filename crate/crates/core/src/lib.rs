//! Exact computations for finite-dimensional BiHom-associative trialgebras
//! given by structure constants over the Gaussian rationals.

pub mod algebra;
pub mod catalog;
pub mod centroids;
pub mod derivations;
pub mod error;
pub mod exactnum;
pub mod quadric;
pub mod spaces;
pub mod transforms;

pub use algebra::{AxiomId, AxiomReport, BiHomTrialgebra, LinearMap, MulTensor, Role};
pub use error::{Error, Result};
pub use exactnum::{Matrix, Rational, Scalar};
