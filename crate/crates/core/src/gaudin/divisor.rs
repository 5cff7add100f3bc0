//! Effective divisors `Σ τ_i·z_i + 2·∞` and their block offsets.

use crate::rational::{format_rational, Rational};
use std::fmt;

/// Finite part of an effective divisor; the double pole at infinity is implicit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Divisor {
    points: Vec<(Rational, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DivisorError {
    #[error("divisor has no finite points")]
    Empty,
    #[error("point {0} has Takiff degree 0")]
    ZeroDegree(String),
    #[error("point {0} appears twice")]
    DuplicatePoint(String),
    #[error("degree constraint Σ {symbol} = {target} violated: {target} = {expected}, Σ {symbol} = {got}")]
    DegreeMismatch { symbol: &'static str, target: &'static str, expected: usize, got: usize },
}

impl Divisor {
    pub fn new(points: Vec<(Rational, usize)>) -> Result<Self, DivisorError> {
        if points.is_empty() {
            return Err(DivisorError::Empty);
        }
        for (k, (p, d)) in points.iter().enumerate() {
            if *d == 0 {
                return Err(DivisorError::ZeroDegree(format_rational(p)));
            }
            if points[..k].iter().any(|(q, _)| q == p) {
                return Err(DivisorError::DuplicatePoint(format_rational(p)));
            }
        }
        Ok(Divisor { points })
    }

    /// Convenience constructor from integer points.
    pub fn from_ints(points: &[(i64, usize)]) -> Result<Self, DivisorError> {
        Self::new(points.iter().map(|&(p, d)| (Rational::from_integer(p.into()), d)).collect())
    }

    pub fn points(&self) -> &[(Rational, usize)] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn location(&self, i: usize) -> &Rational {
        &self.points[i].0
    }

    pub fn degree(&self, i: usize) -> usize {
        self.points[i].1
    }

    /// Σ of the finite Takiff degrees (the +2 at infinity is not counted).
    pub fn total_degree(&self) -> usize {
        self.points.iter().map(|p| p.1).sum()
    }

    pub fn max_degree(&self) -> usize {
        self.points.iter().map(|p| p.1).max().unwrap_or(0)
    }

    /// `ν_i = Σ_{j<i} τ_j`, zero-based.
    pub fn block_offsets(&self) -> Vec<usize> {
        self.points
            .iter()
            .scan(0, |acc, p| {
                let nu = *acc;
                *acc += p.1;
                Some(nu)
            })
            .collect()
    }

    /// Point index owning the (one-based) position `k` in `1..=total_degree()`.
    pub fn block_of(&self, k: usize) -> usize {
        let mut acc = 0;
        for (i, p) in self.points.iter().enumerate() {
            acc += p.1;
            if k <= acc {
                return i;
            }
        }
        panic!("position {k} beyond divisor degree {acc}");
    }

    pub fn is_regular(&self) -> bool {
        self.points.iter().all(|p| p.1 == 1)
    }

    pub fn check_total(&self, symbol: &'static str, target: &'static str, expected: usize) -> Result<(), DivisorError> {
        let got = self.total_degree();
        if got != expected {
            return Err(DivisorError::DegreeMismatch { symbol, target, expected, got });
        }
        Ok(())
    }
}

impl fmt::Display for Divisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.points.iter().map(|(p, d)| format!("{d}*[{}]", format_rational(p))).collect();
        write!(f, "{} + 2*[inf]", parts.join(" + "))
    }
}
