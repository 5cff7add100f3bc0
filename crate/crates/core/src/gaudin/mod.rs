//! Gaudin models with irregular singularities: divisors, Takiff generators, the bosonic,
//! fermionic and quantum realisations, realised Lax matrices and the duality verifiers.

pub mod divisor;
pub mod duality;
pub mod generators;
pub mod lax;
pub mod realize;
pub mod takiff;

pub use divisor::{Divisor, DivisorError};
pub use realize::{AlgebraSide, Bosonic, Fault, Fermionic, FermionicVerbatim, Flavor, Quantum, Realization};
pub use takiff::{takiff_bracket, Point, TakiffGenerator};

use crate::matrix::MatrixError;
use crate::ratfunc::RatFuncError;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GaudinError {
    #[error(transparent)]
    Divisor(#[from] DivisorError),
    #[error("generator index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("residual pole of order {order} at {point} in {context}")]
    ResidualPole { context: String, point: Rational, order: u32 },
    #[error("quadratic Hamiltonians need a regular divisor (all τ_i = 1)")]
    RequiresRegularDivisor,
    #[error("size limit exceeded: {0}")]
    TooLarge(String),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    RatFunc(#[from] RatFuncError),
}
