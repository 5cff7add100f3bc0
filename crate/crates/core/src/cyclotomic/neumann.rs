//! The Neumann model: the cyclotomic instance N = 1, τ₀ = 1, no finite points, µ = −1, with
//! λ_a = ω_a².

use super::lax::{cyclotomic_lax, spectral_cyclotomic, sp2n_lax, verify_cyclotomic_duality};
use super::{CycloDivisor, CycloError, CycloInstance, Mu};
use crate::matrix::Matrix;
use crate::poisson::poisson_bracket;
use crate::poly::{MultiPoly, Var};
use crate::ratfunc::RatFunc;
use crate::rational::{format_rational, rat, Rational};
use crate::ring::Ring;
use serde::Serialize;

#[derive(Debug, Clone)]
pub struct NeumannArtifacts {
    pub instance: CycloInstance,
    pub frequencies: Vec<Rational>,
    /// The M × M Lax matrix L̃(z).
    pub gl_lax: Matrix<RatFunc<MultiPoly>>,
    /// The 2 × 2 Lax matrix L(λ), rows and columns ordered (−1, 1).
    pub sp_lax: Matrix<RatFunc<MultiPoly>>,
    pub hamiltonian: MultiPoly,
}

/// `x_a p_b − x_b p_a`.
pub fn angular_momentum(a: usize, b: usize) -> MultiPoly {
    MultiPoly::x(a, 1).mul(&MultiPoly::p(b, 1)).sub(&MultiPoly::x(b, 1).mul(&MultiPoly::p(a, 1)))
}

/// `H = ¼ Σ_{a≠b} (x_a p_b − x_b p_a)² + ½ Σ ω_a² x_a²`.
pub fn neumann_hamiltonian(omegas: &[Rational]) -> MultiPoly {
    let m = omegas.len();
    let mut h = MultiPoly::zero();
    for a in 1..=m {
        for b in (1..=m).filter(|&b| b != a) {
            h.add_assign(&angular_momentum(a, b).pow(2).scale(&Rational::new(1.into(), 4.into())));
        }
        let w2 = &omegas[a - 1] * &omegas[a - 1];
        h.add_assign(&MultiPoly::x(a, 1).pow(2).scale(&(w2 / rat(2))));
    }
    h
}

pub fn neumann_artifacts(omegas: &[Rational]) -> Result<NeumannArtifacts, CycloError> {
    let m = omegas.len();
    if m < 2 {
        return Err(CycloError::BadPoints("the Neumann model needs M ≥ 2".into()));
    }
    let lambdas: Vec<Rational> = omegas.iter().map(|w| w * w).collect();
    for (i, l) in lambdas.iter().enumerate() {
        if lambdas[..i].contains(l) {
            return Err(CycloError::DuplicateFrequency(format!("ω² = {} repeats", format_rational(l))));
        }
    }
    let divisor = CycloDivisor::new(1, vec![])?;
    let instance = CycloInstance::new(m, 1, divisor, lambdas, Mu::Value(rat(-1)))?;
    Ok(NeumannArtifacts {
        gl_lax: cyclotomic_lax(&instance),
        sp_lax: sp2n_lax(&instance),
        hamiltonian: neumann_hamiltonian(omegas),
        frequencies: omegas.to_vec(),
        instance,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct NeumannReport {
    pub m: usize,
    pub relation_holds: bool,
    #[serde(serialize_with = "crate::report::display_option")]
    pub common: Option<MultiPoly>,
    /// H = ½(C[λ^{M−2} z⁰] + (Σ λ_a) C[λ^{M−1} z⁰]) for the spectral polynomial C.
    pub hamiltonian_from_spectrum: bool,
    pub coefficients_checked: usize,
    pub hamiltonian_commutes: bool,
    pub sphere_constraint_central: bool,
    pub witness: Option<String>,
}

impl NeumannReport {
    pub fn passed(&self) -> bool {
        self.relation_holds && self.hamiltonian_from_spectrum && self.hamiltonian_commutes && self.sphere_constraint_central
    }
}

/// Coefficient of `z^j λ^k` in a polynomial in z, λ.
fn coefficient(c: &MultiPoly, j: u32, k: u32) -> MultiPoly {
    let by_lambda = c.collect(Var::Lambda);
    let Some(inner) = by_lambda.get(&k) else {
        return MultiPoly::zero();
    };
    inner.collect(Var::Z).get(&j).cloned().unwrap_or_else(MultiPoly::zero)
}

pub fn verify_neumann(art: &NeumannArtifacts) -> Result<NeumannReport, CycloError> {
    let m = art.instance.m;
    let duality = verify_cyclotomic_duality(&art.instance)?;
    let spectral = spectral_cyclotomic(&art.instance)?;
    let sum_lambda = art.instance.lambdas.iter().fold(rat(0), |acc, l| acc + l);
    let from_spectrum = coefficient(&spectral, 0, m as u32 - 2)
        .add(&coefficient(&spectral, 0, m as u32 - 1).scale(&sum_lambda))
        .scale(&Rational::new(1.into(), 2.into()));
    let hamiltonian_from_spectrum = from_spectrum.sub(&art.hamiltonian).is_zero();
    let mut witness = duality.witness.clone();
    let mut coefficients_checked = 0;
    let mut hamiltonian_commutes = true;
    for (k, by_z) in spectral.collect(Var::Lambda) {
        for (j, c) in by_z.collect(Var::Z) {
            coefficients_checked += 1;
            if !poisson_bracket(&art.hamiltonian, &c).is_zero() {
                hamiltonian_commutes = false;
                witness.get_or_insert_with(|| format!("H does not commute with the z^{j} λ^{k} coefficient"));
            }
        }
    }
    let sphere = (1..=m).fold(MultiPoly::zero(), |acc, a| acc.add(&MultiPoly::x(a, 1).pow(2)));
    let mut sphere_constraint_central = true;
    for a in 1..=m {
        for b in a + 1..=m {
            if !poisson_bracket(&sphere, &angular_momentum(a, b)).is_zero() {
                sphere_constraint_central = false;
            }
        }
    }
    if !hamiltonian_from_spectrum {
        witness.get_or_insert_with(|| "H is not the expected combination of spectral coefficients".into());
    }
    Ok(NeumannReport {
        m,
        relation_holds: duality.equal,
        common: duality.common,
        hamiltonian_from_spectrum,
        coefficients_checked,
        hamiltonian_commutes,
        sphere_constraint_central,
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn omegas(m: usize) -> Vec<Rational> {
        (1..=m as i64).map(rat).collect()
    }

    #[test]
    fn matches_displayed_lax_matrices() {
        let art = neumann_artifacts(&omegas(3)).unwrap();
        let m = 3;
        // Σ λ_a E_aa − z⁻¹ Σ (x_a p_b − x_b p_a) E_ab − z⁻² Σ x_a x_b E_ab
        for a in 1..=m {
            for b in 1..=m {
                let mut e = RatFunc::pole(angular_momentum(a, b).neg(), &rat(0), 1)
                    .add(&RatFunc::pole(MultiPoly::x(a, 1).mul(&MultiPoly::x(b, 1)).neg(), &rat(0), 2));
                if a == b {
                    e = e.add(&RatFunc::constant(MultiPoly::constant(rat((a * a) as i64))));
                }
                assert!(art.gl_lax.get(a - 1, b - 1).sub(&e).is_zero(), "({a},{b})");
            }
        }
        // [[−Σ x p/(λ−λ_a), −Σ x²/(λ−λ_a)], [1 + Σ p²/(λ−λ_a), Σ x p/(λ−λ_a)]]
        let sum = |f: &dyn Fn(usize) -> MultiPoly| {
            (1..=m).fold(RatFunc::zero(), |acc: RatFunc<MultiPoly>, a| acc.add(&RatFunc::pole(f(a), &rat((a * a) as i64), 1)))
        };
        let xp = sum(&|a| MultiPoly::x(a, 1).mul(&MultiPoly::p(a, 1)));
        let xx = sum(&|a| MultiPoly::x(a, 1).pow(2));
        let pp = sum(&|a| MultiPoly::p(a, 1).pow(2));
        assert!(art.sp_lax.get(0, 0).add(&xp).is_zero());
        assert!(art.sp_lax.get(0, 1).add(&xx).is_zero());
        assert!(art.sp_lax.get(1, 0).sub(&pp).sub(&RatFunc::one()).is_zero());
        assert!(art.sp_lax.get(1, 1).sub(&xp).is_zero());
    }

    #[test]
    fn relation_and_hamiltonian() {
        for m in 2..=3 {
            let art = neumann_artifacts(&omegas(m)).unwrap();
            let r = verify_neumann(&art).unwrap();
            assert!(r.passed(), "{r:?}");
        }
    }

    #[test]
    fn doubled_two_by_two_lax_breaks_the_relation() {
        // Doubling L(λ) changes det(z − L); flipping the sign of its traceless diagonal does not.
        let art = neumann_artifacts(&omegas(2)).unwrap();
        let det = |l: &Matrix<RatFunc<MultiPoly>>| {
            let z = crate::bivariate::z::<MultiPoly>();
            Matrix::from_fn(2, 2, |r, c| {
                let e = crate::bivariate::in_lambda(l.get(r, c)).neg();
                if r == c {
                    e.add(&z)
                } else {
                    e
                }
            })
            .det()
            .unwrap()
        };
        let base = det(&art.sp_lax);
        let flipped = Matrix::from_fn(2, 2, |r, c| if r == c { art.sp_lax.get(r, c).neg() } else { art.sp_lax.get(r, c).clone() });
        assert!(det(&flipped).sub(&base).is_zero());
        let doubled = art.sp_lax.scale(&rat(2));
        assert!(!det(&doubled).sub(&base).is_zero());
    }

    #[test]
    fn duplicate_frequencies() {
        let err = neumann_artifacts(&[rat(1), rat(-1)]).unwrap_err();
        assert!(matches!(err, CycloError::DuplicateFrequency(_)));
    }
}
