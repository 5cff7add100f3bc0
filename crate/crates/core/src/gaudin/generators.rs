//! Extraction of Gaudin-algebra generators, commutativity checks and the quadratic Hamiltonians.

use super::duality::{quantum_operator_gl_m, quantum_operator_gl_n, spectral_gl_m, spectral_gl_n};
use super::realize::{Flavor, Quantum, Realization};
use super::GaudinError;
use crate::bivariate::{self, Bivariate};
use crate::ratfunc::RatFunc;
use crate::rational::Rational;
use crate::ring::Ring;
use crate::weyl::{OrderedDiffOp, SideTag, WeylElement};
use serde::Serialize;

/// Polynomial-part and pole coefficients of `f`, against its own reduced denominator.
fn partial_fraction_coefficients<C: Ring>(f: &RatFunc<C>) -> Result<Vec<C>, GaudinError> {
    let red = f.reduce();
    let poles: Vec<(Rational, u32)> = red.denominator().iter().map(|(r, m)| (r.clone(), *m)).collect();
    Ok(red.partial_fractions(&poles)?.coefficients())
}

fn push_unique<C: Ring>(out: &mut Vec<C>, c: C) {
    if !c.is_zero() && !out.iter().any(|o| o.equals(&c)) {
        out.push(c);
    }
}

/// Partial-fraction coefficients in z of every λ^k coefficient.
pub fn generators_in_z<C: Ring>(f: &Bivariate<C>) -> Result<Vec<C>, GaudinError> {
    let coeffs = bivariate::lambda_coefficients(f).map_err(|p| GaudinError::ResidualPole {
        context: "lambda coefficients".into(),
        point: p.point,
        order: p.order,
    })?;
    let mut out = Vec::new();
    for c in coeffs {
        for g in partial_fraction_coefficients(&c)? {
            push_unique(&mut out, g);
        }
    }
    Ok(out)
}

/// Partial-fraction coefficients in λ of every z^k coefficient.
pub fn generators_in_lambda<C: Ring>(f: &Bivariate<C>) -> Result<Vec<C>, GaudinError> {
    let coeffs = bivariate::z_coefficients(f).map_err(|p| GaudinError::ResidualPole {
        context: "z coefficients".into(),
        point: p.point,
        order: p.order,
    })?;
    let mut out = Vec::new();
    for c in coeffs {
        for g in partial_fraction_coefficients(&c)? {
            push_unique(&mut out, g);
        }
    }
    Ok(out)
}

/// Generators read off both spectral curves `∏(z−z_i)^{τ_i} det(λ − L^D(z))` and
/// `∏(λ−λ_a)^{τ̃_a} det(z − L^D̃(λ))`.
pub fn extract_classical_generators<F: Flavor>(real: &Realization) -> Result<Vec<F::Elem>, GaudinError> {
    let mut out = generators_in_z(&spectral_gl_m::<F>(real)?)?;
    for g in generators_in_lambda(&spectral_gl_n::<F>(real)?)? {
        push_unique(&mut out, g);
    }
    Ok(out)
}

fn operator_generators<S: SideTag>(op: &OrderedDiffOp<S>, out: &mut Vec<WeylElement>) -> Result<(), GaudinError> {
    for f in op.terms().values() {
        for g in partial_fraction_coefficients(f)? {
            push_unique(out, g);
        }
    }
    Ok(())
}

/// Partial-fraction coefficients of every `S_k` on both sides of the quantum duality.
pub fn extract_quantum_generators(real: &Realization) -> Result<Vec<WeylElement>, GaudinError> {
    let mut out = Vec::new();
    operator_generators(&quantum_operator_gl_m(real)?, &mut out)?;
    operator_generators(&quantum_operator_gl_n(real)?, &mut out)?;
    Ok(out)
}

#[derive(Debug, Clone, Serialize)]
pub struct CommutativityReport {
    pub generators: usize,
    pub pairs_checked: usize,
    /// Indices of the first non-commuting pair and their bracket.
    pub failure: Option<(usize, usize, String)>,
}

impl CommutativityReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// Brackets every unordered pair (including each generator with itself).
pub fn check_commutativity<F: Flavor>(gens: &[F::Elem]) -> CommutativityReport {
    let mut pairs_checked = 0;
    for (i, a) in gens.iter().enumerate() {
        for (j, b) in gens.iter().enumerate().skip(i) {
            pairs_checked += 1;
            let br = F::bracket(a, b);
            if !br.is_zero() {
                return CommutativityReport { generators: gens.len(), pairs_checked, failure: Some((i, j, br.to_string())) };
            }
        }
    }
    CommutativityReport { generators: gens.len(), pairs_checked, failure: None }
}

/// `ℋ_i = Σ_{j≠i} Σ_{a,b} x^a_i ∂^b_i x^b_j ∂^a_j / (z_i − z_j) + Σ_a λ_a x^a_i ∂^a_i`.
pub fn build_quadratic_hamiltonians(real: &Realization) -> Result<Vec<WeylElement>, GaudinError> {
    if !real.divisor.is_regular() || !real.dual.is_regular() {
        return Err(GaudinError::RequiresRegularDivisor);
    }
    let e = |i: usize, a: usize, b: usize| WeylElement::x(a, i).mul(&WeylElement::d(b, i));
    let mut out = Vec::with_capacity(real.n);
    for i in 1..=real.n {
        let mut h = WeylElement::zero();
        for j in (1..=real.n).filter(|&j| j != i) {
            let w = Rational::from_integer(1.into()) / (real.z_point(i - 1) - real.z_point(j - 1));
            for a in 1..=real.m {
                for b in 1..=real.m {
                    h = h.add(&e(i, a, b).mul(&e(j, b, a)).scale(&w));
                }
            }
        }
        for a in 1..=real.m {
            h = h.add(&e(i, a, a).scale(real.lambda_point(a - 1)));
        }
        out.push(h);
    }
    Ok(out)
}

/// Checks that each Hamiltonian commutes with every generator; returns the first failure.
pub fn hamiltonians_in_commutant(hams: &[WeylElement], gens: &[WeylElement]) -> Option<(usize, usize)> {
    for (i, h) in hams.iter().enumerate() {
        for (j, g) in gens.iter().enumerate() {
            if !Quantum::bracket(h, g).is_zero() {
                return Some((i, j));
            }
        }
    }
    None
}
