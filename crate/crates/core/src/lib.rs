//! Exact symbolic verification of (gl_M, gl_N)-dualities between Gaudin models with irregular
//! singularities, in classical bosonic, classical fermionic, quantum bosonic and ℤ₂-cyclotomic forms.

pub mod poly;
pub mod ratfunc;
pub mod rational;
pub mod ring;
pub mod weyl;
pub mod cyclotomic;
pub mod bivariate;
pub mod gaudin;
pub mod report;
pub mod runner;
pub mod grassmann;
pub mod matrix;
pub mod poisson;

pub use poly::{Monomial, MultiPoly, Var};
pub use ratfunc::{PartialFractions, RatFunc, RatFuncError};
pub use rational::{parse_rational, rat, ratio, Rational};
pub use ring::Ring;
pub use weyl::{DzLeft, OrderedDiffOp, Side, SideTag, WeylElement, WeylError, WeylMonomial, ZLeft};
pub use grassmann::{GrassmannElement, GrassmannError};
pub use matrix::{berezinian_identity_check, jordan_block, jordan_block_inverse, Corner, ManinCheck, Matrix, MatrixError};
pub use poisson::{poisson_bracket, PoissonElement};
