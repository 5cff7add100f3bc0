//! The classical bosonic, classical fermionic and quantum duality verifiers.

use super::lax::realized_lax;
use super::realize::{AlgebraSide, Bosonic, Flavor, Quantum, Realization};
use super::GaudinError;
use crate::bivariate::{self, Bivariate, SpectralPole};
use crate::grassmann::GrassmannElement;
use crate::matrix::{jordan_block, ManinCheck, Matrix};
use crate::poly::MultiPoly;
use crate::rational::rat;
use crate::ring::Ring;
use crate::weyl::{DzLeft, OrderedDiffOp, WeylElement, WeylError, ZLeft};
use serde::Serialize;

fn pole_error(context: &str, p: SpectralPole) -> GaudinError {
    GaudinError::ResidualPole { context: format!("{context} ({})", p.variable), point: p.point, order: p.order }
}

/// `∏(z−z_i)^{τ_i} det(λ1 − L^D(z))` as a bivariate rational function.
pub fn spectral_gl_m<F: Flavor>(real: &Realization) -> Result<Bivariate<F::Elem>, GaudinError> {
    let det = det_gl_m::<F>(real)?;
    let pre = bivariate::in_z(&bivariate::divisor_polynomial::<F::Elem>(real.divisor.points()));
    Ok(pre.mul(&det))
}

/// `∏(λ−λ_a)^{τ̃_a} det(z1 − L^D̃(λ))` as a bivariate rational function.
pub fn spectral_gl_n<F: Flavor>(real: &Realization) -> Result<Bivariate<F::Elem>, GaudinError> {
    let det = det_gl_n::<F>(real)?;
    let pre = bivariate::in_lambda(&bivariate::divisor_polynomial::<F::Elem>(real.dual.points()));
    Ok(pre.mul(&det))
}

/// `det(λ1 − L^D(z))`.
pub fn det_gl_m<F: Flavor>(real: &Realization) -> Result<Bivariate<F::Elem>, GaudinError> {
    Ok(bivariate::char_det_in_z(&realized_lax::<F>(real, AlgebraSide::GlM)?)?)
}

/// `det(z1 − L^D̃(λ))`.
pub fn det_gl_n<F: Flavor>(real: &Realization) -> Result<Bivariate<F::Elem>, GaudinError> {
    Ok(bivariate::char_det_in_lambda(&realized_lax::<F>(real, AlgebraSide::GlN)?)?)
}

/// The gl_M side of the classical bosonic duality as a polynomial in x, p, z, λ.
pub fn classical_polynomial_gl_m(real: &Realization) -> Result<MultiPoly, GaudinError> {
    bivariate::to_multipoly(&spectral_gl_m::<Bosonic>(real)?).map_err(|p| pole_error("gl_M spectral polynomial", p))
}

/// The gl_N side of the classical bosonic duality as a polynomial in x, p, z, λ.
pub fn classical_polynomial_gl_n(real: &Realization) -> Result<MultiPoly, GaudinError> {
    bivariate::to_multipoly(&spectral_gl_n::<Bosonic>(real)?).map_err(|p| pole_error("gl_N spectral polynomial", p))
}

/// First monomial at which two polynomials differ, rendered for a report.
pub fn polynomial_witness(lhs: &MultiPoly, rhs: &MultiPoly) -> Option<String> {
    let diff = lhs.sub(rhs);
    diff.terms().iter().next().map(|(m, _)| {
        format!(
            "monomial {}: lhs coefficient {}, rhs coefficient {}",
            MultiPoly::term(m.clone(), rat(1)),
            lhs.coefficient(m),
            rhs.coefficient(m)
        )
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassicalDualityReport {
    pub equal: bool,
    pub lhs_terms: usize,
    pub rhs_terms: usize,
    /// The common polynomial when both sides agree.
    #[serde(serialize_with = "crate::report::display_option")]
    pub common: Option<MultiPoly>,
    pub witness: Option<String>,
}

pub fn verify_classical_bosonic_duality(real: &Realization) -> Result<ClassicalDualityReport, GaudinError> {
    let (lhs, rhs) = match (classical_polynomial_gl_m(real), classical_polynomial_gl_n(real)) {
        (Ok(l), Ok(r)) => (l, r),
        (Err(e @ GaudinError::ResidualPole { .. }), _) | (_, Err(e @ GaudinError::ResidualPole { .. })) => {
            return Ok(ClassicalDualityReport { equal: false, lhs_terms: 0, rhs_terms: 0, common: None, witness: Some(e.to_string()) });
        }
        (Err(e), _) | (_, Err(e)) => return Err(e),
    };
    let witness = polynomial_witness(&lhs, &rhs);
    let equal = witness.is_none();
    Ok(ClassicalDualityReport {
        equal,
        lhs_terms: lhs.len(),
        rhs_terms: rhs.len(),
        common: equal.then_some(lhs),
        witness,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct FermionicDualityReport {
    pub equal: bool,
    pub gl_m_terms: usize,
    pub gl_n_terms: usize,
    pub witness: Option<String>,
}

fn grassmann_size(f: &Bivariate<GrassmannElement>) -> usize {
    f.numerator().iter().flat_map(|g| g.numerator().iter()).map(|c| c.terms().len()).sum()
}

/// Checks `π_f det(λ − L^D(z)) · π̃_f det(z − L^D̃(λ)) = ∏(z−z_i)^{τ_i} ∏(λ−λ_a)^{τ̃_a}`.
pub fn verify_classical_fermionic_duality<F: Flavor<Elem = GrassmannElement>>(real: &Realization) -> Result<FermionicDualityReport, GaudinError> {
    let dm = det_gl_m::<F>(real)?;
    let dn = det_gl_n::<F>(real)?;
    let product = dm.mul(&dn);
    let target = bivariate::in_z(&bivariate::divisor_polynomial::<GrassmannElement>(real.divisor.points()))
        .mul(&bivariate::in_lambda(&bivariate::divisor_polynomial(real.dual.points())));
    let diff = product.sub(&target);
    let witness = if diff.is_zero() {
        None
    } else {
        Some(fermionic_witness(&diff))
    };
    Ok(FermionicDualityReport {
        equal: witness.is_none(),
        gl_m_terms: grassmann_size(&dm),
        gl_n_terms: grassmann_size(&dn),
        witness,
    })
}

fn fermionic_witness(diff: &Bivariate<GrassmannElement>) -> String {
    let red = diff.reduce();
    for (j, inner) in red.numerator().iter().enumerate() {
        let inner = inner.reduce();
        for (k, c) in inner.numerator().iter().enumerate() {
            if !c.is_zero() {
                return format!(
                    "product minus target has numerator term z^{j} lambda^{k} with coefficient {c} (denominators z: {}, lambda: {})",
                    red.denominator().len(),
                    inner.denominator().len()
                );
            }
        }
    }
    "nonzero difference".into()
}

/// `∏(z−z_i)^{τ_i} cdet(∂_z 1 − ᵗL^D(z))` in z-left form.
pub fn quantum_operator_gl_m(real: &Realization) -> Result<OrderedDiffOp<ZLeft>, GaudinError> {
    let lt = realized_lax::<Quantum>(real, AlgebraSide::GlM)?.transpose();
    let m = Matrix::from_fn(real.m, real.m, |r, c| {
        let e = OrderedDiffOp::<ZLeft>::coefficient(lt.get(r, c).clone()).neg();
        if r == c {
            e.add(&OrderedDiffOp::dz())
        } else {
            e
        }
    });
    let pre = OrderedDiffOp::<ZLeft>::coefficient(bivariate::divisor_polynomial(real.divisor.points()));
    Ok(pre.mul(&m.cdet()?))
}

/// `∏(∂_z−λ_a)^{τ̃_a} cdet(z 1 − L^D̃(∂_z))` in ∂_z-left form.
pub fn quantum_operator_gl_n(real: &Realization) -> Result<OrderedDiffOp<DzLeft>, GaudinError> {
    let l = realized_lax::<Quantum>(real, AlgebraSide::GlN)?;
    let m = Matrix::from_fn(real.n, real.n, |r, c| {
        let e = OrderedDiffOp::<DzLeft>::coefficient(l.get(r, c).clone()).neg();
        if r == c {
            e.add(&OrderedDiffOp::z())
        } else {
            e
        }
    });
    let pre = OrderedDiffOp::<DzLeft>::coefficient(bivariate::divisor_polynomial(real.dual.points()));
    Ok(pre.mul(&m.cdet()?))
}

fn residual(context: &str, e: WeylError) -> GaudinError {
    let WeylError::ResidualPole { point, order } = e;
    GaudinError::ResidualPole { context: context.into(), point, order }
}

/// The block matrix `[[⊕ ᵗJ(∂_z − λ_a), X], [ᵗD, ⊕ J(z − z_i)]]` over the Weyl algebra with (z, ∂_z).
pub fn quantum_block_matrix(real: &Realization) -> Matrix<WeylElement> {
    let lam_blocks: Vec<Matrix<WeylElement>> = real
        .dual
        .points()
        .iter()
        .map(|(p, k)| jordan_block(*k, &WeylElement::dz().sub(&WeylElement::constant(p.clone()))).transpose())
        .collect();
    let z_blocks: Vec<Matrix<WeylElement>> = real
        .divisor
        .points()
        .iter()
        .map(|(p, k)| jordan_block(*k, &WeylElement::z().sub(&WeylElement::constant(p.clone()))))
        .collect();
    let x = Matrix::from_fn(real.m, real.n, |a, i| WeylElement::x(a + 1, i + 1));
    let dt = Matrix::from_fn(real.n, real.m, |i, a| WeylElement::d(a + 1, i + 1));
    Matrix::from_blocks(&Matrix::direct_sum(&lam_blocks), &x, &dt, &Matrix::direct_sum(&z_blocks)).expect("block shapes agree")
}

/// `deg(symbol(q) − c) ≤ deg(c) − 2` in the total degree of x, p, z, λ: the normal-ordered quantum
/// operator reduces to the classical polynomial up to reordering corrections.
pub fn classical_limit_matches(q: &WeylElement, c: &MultiPoly) -> bool {
    let diff = q.symbol().sub(c);
    match (diff.total_degree(), c.total_degree()) {
        (None, _) => true,
        (Some(d), Some(top)) => d + 2 <= top,
        (Some(_), None) => false,
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct QuantumDualityReport {
    pub equal: bool,
    pub manin: bool,
    pub manin_witness: Option<[usize; 4]>,
    /// cdet of the block matrix equals the common operator.
    pub block_cdet_matches: bool,
    pub classical_limit: bool,
    pub lhs_terms: usize,
    pub rhs_terms: usize,
    #[serde(serialize_with = "crate::report::display_option")]
    pub common: Option<WeylElement>,
    pub witness: Option<String>,
}

impl QuantumDualityReport {
    pub fn passed(&self) -> bool {
        self.equal && self.manin && self.block_cdet_matches && self.classical_limit
    }
}

pub fn verify_quantum_duality(real: &Realization) -> Result<QuantumDualityReport, GaudinError> {
    let lhs = quantum_operator_gl_m(real)?.to_polynomial();
    let rhs = quantum_operator_gl_n(real)?.to_polynomial();
    let block = quantum_block_matrix(real);
    let manin = block.manin_check();
    let manin_witness = match manin {
        ManinCheck::Manin => None,
        ManinCheck::Violation { i, j, k, l } => Some([i, j, k, l]),
    };
    let (lhs, rhs) = match (lhs, rhs) {
        (Ok(l), Ok(r)) => (l, r),
        (Err(e), _) => {
            return Ok(failed_quantum(manin, manin_witness, residual("gl_M operator", e).to_string()));
        }
        (_, Err(e)) => {
            return Ok(failed_quantum(manin, manin_witness, residual("gl_N operator", e).to_string()));
        }
    };
    let diff = lhs.sub(&rhs);
    let witness = diff.terms().iter().next().map(|(m, c)| format!("normal-ordered word {m} differs by {c}"));
    let equal = witness.is_none();
    let block_cdet_matches = block.cdet()?.equals(&lhs);
    let classical = classical_polynomial_gl_m(real)?;
    let classical_limit = classical_limit_matches(&lhs, &classical) && classical_limit_matches(&rhs, &classical);
    Ok(QuantumDualityReport {
        equal,
        manin: manin.is_manin(),
        manin_witness,
        block_cdet_matches,
        classical_limit,
        lhs_terms: lhs.len(),
        rhs_terms: rhs.len(),
        common: equal.then_some(lhs),
        witness,
    })
}

fn failed_quantum(manin: ManinCheck, manin_witness: Option<[usize; 4]>, witness: String) -> QuantumDualityReport {
    QuantumDualityReport {
        equal: false,
        manin: manin.is_manin(),
        manin_witness,
        block_cdet_matches: false,
        classical_limit: false,
        lhs_terms: 0,
        rhs_terms: 0,
        common: None,
        witness: Some(witness),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gaudin::{Divisor, Fermionic, FermionicVerbatim};
    use crate::poly::Var;

    fn real(m: usize, n: usize, d: &[(i64, usize)], dd: &[(i64, usize)]) -> Realization {
        Realization::new(m, n, Divisor::from_ints(d).unwrap(), Divisor::from_ints(dd).unwrap()).unwrap()
    }

    fn zv() -> MultiPoly {
        MultiPoly::var(Var::Z)
    }
    fn lv() -> MultiPoly {
        MultiPoly::var(Var::Lambda)
    }

    #[test]
    fn classical_one_by_one() {
        let r = real(1, 1, &[(1, 1)], &[(5, 1)]);
        let rep = verify_classical_bosonic_duality(&r).unwrap();
        assert!(rep.equal);
        // (z − 1)(λ − 5) − x p
        let want = zv()
            .sub(&MultiPoly::constant(rat(1)))
            .mul(&lv().sub(&MultiPoly::constant(rat(5))))
            .sub(&MultiPoly::x(1, 1).mul(&MultiPoly::p(1, 1)));
        assert_eq!(rep.common.unwrap(), want);
    }

    #[test]
    fn classical_irregular() {
        let r = real(2, 2, &[(1, 2)], &[(5, 1), (7, 1)]);
        assert!(verify_classical_bosonic_duality(&r).unwrap().equal);
    }

    #[test]
    fn fermionic_small() {
        let r = real(1, 1, &[(1, 1)], &[(5, 1)]);
        assert!(verify_classical_fermionic_duality::<Fermionic>(&r).unwrap().equal);
        let r = real(2, 1, &[(1, 1)], &[(5, 2)]);
        assert!(verify_classical_fermionic_duality::<Fermionic>(&r).unwrap().equal);
        let bad = verify_classical_fermionic_duality::<FermionicVerbatim>(&r).unwrap();
        assert!(!bad.equal);
        assert!(bad.witness.is_some());
    }

    #[test]
    fn quantum_one_by_one() {
        let r = real(1, 1, &[(1, 1)], &[(5, 1)]);
        let rep = verify_quantum_duality(&r).unwrap();
        assert!(rep.passed(), "{rep:?}");
        // (z − 1)∂_z − 5z + 5 − x∂
        let z = WeylElement::z();
        let want = z
            .sub(&WeylElement::one())
            .mul(&WeylElement::dz())
            .sub(&z.scale(&rat(5)))
            .add(&WeylElement::constant(rat(5)))
            .sub(&WeylElement::x(1, 1).mul(&WeylElement::d(1, 1)));
        assert_eq!(rep.common.unwrap(), want);
    }

    #[test]
    fn quantum_irregular() {
        let r = real(1, 2, &[(1, 2)], &[(5, 1)]);
        assert!(verify_quantum_duality(&r).unwrap().passed());
    }
}
