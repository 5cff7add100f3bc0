//! The ℤ₂-cyclotomic gl_M Gaudin model attached to the diagram automorphism, its sp_2N dual
//! and the Neumann model as the N = 1 special case.

pub mod lax;
pub mod neumann;
pub mod realize;
pub mod sp2n;

pub use lax::{
    cyclotomic_lax, lax_algebra_cyclotomic, lax_algebra_sp2n, quantum_candidate, sp2n_lax, verify_cyclotomic_duality,
    CyclotomicDualityReport, LaxAlgebraReport, QuantumCandidateReport,
};
pub use neumann::{neumann_artifacts, NeumannArtifacts, NeumannReport};
pub use realize::{verify_gl_m_homomorphism, verify_sp2n_homomorphism, CycloFault, CycloHomomorphismReport};

use crate::matrix::{Matrix, MatrixError};
use crate::poly::{MultiPoly, Var};
use crate::rational::{format_rational, rat, Rational};
use serde::Serialize;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CycloError {
    #[error("degree constraint τ_0 + Σ τ_i = N violated: N = {expected}, τ_0 + Σ τ_i = {got}")]
    DegreeMismatch { expected: usize, got: usize },
    #[error("Takiff degree must be positive")]
    ZeroDegree,
    #[error("bad points: {0}")]
    BadPoints(String),
    #[error("frequencies must have pairwise distinct squares: {0}")]
    DuplicateFrequency(String),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("residual pole of order {order} at {point} in {context}")]
    ResidualPole { context: String, point: Rational, order: u32 },
    #[error("size limit exceeded: {0}")]
    TooLarge(String),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

/// The parameter µ: an exact rational or a free spectator variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Mu {
    Value(Rational),
    Symbolic,
}

impl Mu {
    pub fn as_poly(&self) -> MultiPoly {
        match self {
            Mu::Value(v) => MultiPoly::constant(v.clone()),
            Mu::Symbolic => MultiPoly::var(Var::Mu),
        }
    }
}

impl fmt::Display for Mu {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mu::Value(v) => write!(f, "{}", format_rational(v)),
            Mu::Symbolic => write!(f, "symbolic"),
        }
    }
}

impl Serialize for Mu {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// `2τ₀·0 + Σ τ_i·z_i + Σ τ_i·(−z_i) + 2·∞`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycloDivisor {
    tau0: usize,
    points: Vec<(Rational, usize)>,
}

impl CycloDivisor {
    pub fn new(tau0: usize, points: Vec<(Rational, usize)>) -> Result<Self, CycloError> {
        if tau0 == 0 || points.iter().any(|(_, t)| *t == 0) {
            return Err(CycloError::ZeroDegree);
        }
        for (i, (zi, _)) in points.iter().enumerate() {
            if *zi == rat(0) {
                return Err(CycloError::BadPoints("z_i = 0".into()));
            }
            for (zj, _) in &points[..i] {
                if zi == zj || *zi == -zj.clone() {
                    return Err(CycloError::BadPoints(format!(
                        "z = {} and z = {} are not in distinct orbits of z ↦ −z",
                        format_rational(zj),
                        format_rational(zi)
                    )));
                }
            }
        }
        Ok(CycloDivisor { tau0, points })
    }

    pub fn tau0(&self) -> usize {
        self.tau0
    }

    pub fn points(&self) -> &[(Rational, usize)] {
        &self.points
    }

    /// `τ₀ + Σ τ_i`.
    pub fn total_degree(&self) -> usize {
        self.tau0 + self.points.iter().map(|(_, t)| t).sum::<usize>()
    }

    /// `ν_i = Σ_{j<i} τ_j` for i = 1..n, counting τ₀ first.
    pub fn block_offsets(&self) -> Vec<usize> {
        let mut acc = self.tau0;
        self.points
            .iter()
            .map(|(_, t)| {
                let v = acc;
                acc += t;
                v
            })
            .collect()
    }

    pub fn check_total(&self, n: usize) -> Result<(), CycloError> {
        let got = self.total_degree();
        if got != n {
            return Err(CycloError::DegreeMismatch { expected: n, got });
        }
        Ok(())
    }

    /// `z^{2τ₀} ∏ (z − z_i)^{τ_i} (z + z_i)^{τ_i}` as its list of roots.
    pub fn prefactor_roots(&self) -> Vec<(Rational, usize)> {
        let mut out = vec![(rat(0), 2 * self.tau0)];
        for (zi, t) in &self.points {
            out.push((zi.clone(), *t));
            out.push((-zi.clone(), *t));
        }
        out
    }
}

impl fmt::Display for CycloDivisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*[0]", 2 * self.tau0)?;
        for (z, t) in &self.points {
            write!(f, " + {t}*[{}] + {t}*[{}]", format_rational(z), format_rational(&-z.clone()))?;
        }
        write!(f, " + 2*[inf]")
    }
}

/// A cyclotomic instance: gl_M with divisor C, the sp_2N dual with simple poles at λ_a, and µ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycloInstance {
    pub m: usize,
    pub n: usize,
    pub divisor: CycloDivisor,
    pub lambdas: Vec<Rational>,
    pub mu: Mu,
}

impl CycloInstance {
    pub const MAX_RANK: usize = 8;

    pub fn new(m: usize, n: usize, divisor: CycloDivisor, lambdas: Vec<Rational>, mu: Mu) -> Result<Self, CycloError> {
        if m == 0 || n == 0 || m > Self::MAX_RANK || n > Self::MAX_RANK {
            return Err(CycloError::TooLarge(format!("M = {m}, N = {n} must lie in 1..={}", Self::MAX_RANK)));
        }
        divisor.check_total(n)?;
        if lambdas.len() != m {
            return Err(CycloError::BadPoints(format!("expected {m} points λ_a, got {}", lambdas.len())));
        }
        for (i, l) in lambdas.iter().enumerate() {
            if lambdas[..i].contains(l) {
                return Err(CycloError::BadPoints(format!("λ = {} appears twice", format_rational(l))));
            }
        }
        Ok(CycloInstance { m, n, divisor, lambdas, mu })
    }

    /// Integer-point convenience constructor.
    pub fn from_ints(m: usize, tau0: usize, points: &[(i64, usize)], lambdas: &[i64], mu: Mu) -> Result<Self, CycloError> {
        let divisor = CycloDivisor::new(tau0, points.iter().map(|(z, t)| (rat(*z), *t)).collect())?;
        let n = divisor.total_degree();
        Self::new(m, n, divisor, lambdas.iter().map(|l| rat(*l)).collect(), mu)
    }
}

/// `σ(E_ab) = −E_ba`, extended linearly: `σ(X) = −Xᵗ`.
pub fn diagram_automorphism(x: &Matrix<Rational>) -> Matrix<Rational> {
    x.transpose().neg()
}

/// `Π_(r) X = X − (−1)^r Xᵗ`, so `Π_(r) E_ab = E_ab − (−1)^r E_ba`.
pub fn projector(r: usize, x: &Matrix<Rational>) -> Matrix<Rational> {
    let t = x.transpose();
    if r % 2 == 0 {
        x.sub(&t).expect("square")
    } else {
        x.add(&t).expect("square")
    }
}

/// The matrix unit `E_ab` of size M (1-based indices).
pub fn unit(m: usize, a: usize, b: usize) -> Matrix<Rational> {
    Matrix::from_fn(m, m, |i, j| if i + 1 == a && j + 1 == b { rat(1) } else { rat(0) })
}

pub(crate) fn commutator(x: &Matrix<Rational>, y: &Matrix<Rational>) -> Matrix<Rational> {
    x.mul(y).expect("square").sub(&y.mul(x).expect("square")).expect("square")
}
