//! The realised cyclotomic gl_M and sp_2N Lax matrices, the spectral duality, the Lax-algebra
//! (r-matrix) identities and the non-Manin quantum candidate.

use super::realize::{finite_image, origin_image, sp_image_finite, sp_image_infinity, z0_matrix, CycloFault};
use super::sp2n::{array_index, basis_pairs, e_bar, e_bar_dual, sign};
use super::{CycloError, CycloInstance, Mu};
use crate::bivariate::{self, Bivariate, SpectralPole};
use crate::gaudin::duality::{polynomial_witness, ClassicalDualityReport};
use crate::matrix::{ManinCheck, Matrix};
use crate::poisson::poisson_bracket;
use crate::poly::MultiPoly;
use crate::ratfunc::RatFunc;
use crate::rational::{rat, Rational};
use crate::ring::Ring;
use crate::weyl::WeylElement;
use serde::Serialize;

pub type CyclotomicDualityReport = ClassicalDualityReport;

/// `π_b(L̃^C(z))`: entry (b, a) is `λ_a δ_ab + Σ_s π_b((Π_(s)E_ab)_s)/z^{s+1}
/// + Σ_{i,r} π_b(E^{(z_i)}_{ab,r})/(z−z_i)^{r+1} + (−1)^{r+1} π_b(E^{(z_i)}_{ba,r})/(z+z_i)^{r+1}`.
pub fn cyclotomic_lax(inst: &CycloInstance) -> Matrix<RatFunc<MultiPoly>> {
    let m = inst.m;
    let mut lax = Matrix::<RatFunc<MultiPoly>>::zeros(m, m);
    for a in 1..=m {
        for b in 1..=m {
            let mut x = if a == b { RatFunc::constant(MultiPoly::constant(inst.lambdas[a - 1].clone())) } else { RatFunc::zero() };
            for s in 0..2 * inst.divisor.tau0() {
                x = x.add(&RatFunc::pole(origin_image(inst, a, b, s, CycloFault::None), &rat(0), s as u32 + 1));
            }
            for (i, (zi, t)) in inst.divisor.points().iter().enumerate() {
                for r in 0..*t {
                    let k = r as u32 + 1;
                    x = x.add(&RatFunc::pole(finite_image(inst, i, a, b, r), zi, k));
                    let sgn = if r % 2 == 0 { rat(-1) } else { rat(1) };
                    x = x.add(&RatFunc::pole(finite_image(inst, i, b, a, r).scale(&sgn), &-zi.clone(), k));
                }
            }
            lax.set(b - 1, a - 1, x);
        }
    }
    lax
}

/// `π̄_b(L^D̄(λ)) = Σ_{(I,J)∈𝓘₂} Ē^IJ (π̄_b(Ē^{(∞)}_IJ) + Σ_a π̄_b(Ē^{(λ_a)}_IJ)/(λ−λ_a))`.
pub fn sp2n_lax(inst: &CycloInstance) -> Matrix<RatFunc<MultiPoly>> {
    let n = inst.n;
    let z0 = z0_matrix(inst);
    let mut lax = Matrix::<RatFunc<MultiPoly>>::zeros(2 * n, 2 * n);
    for (i, j) in basis_pairs(n) {
        let mut c = RatFunc::constant(sp_image_infinity(inst, &z0, i, j));
        for (a, la) in inst.lambdas.iter().enumerate() {
            c = c.add(&RatFunc::pole(sp_image_finite(a + 1, i, j), la, 1));
        }
        let dual = e_bar_dual(n, i, j);
        for r in 0..2 * n {
            for s in 0..2 * n {
                let w = dual.get(r, s);
                if *w != rat(0) {
                    let cur = lax.get(r, s).add(&c.scale(w));
                    lax.set(r, s, cur);
                }
            }
        }
    }
    lax
}

fn pole_error(context: &str, p: SpectralPole) -> CycloError {
    CycloError::ResidualPole { context: format!("{context} ({})", p.variable), point: p.point, order: p.order }
}

/// `z^{2τ₀} ∏(z−z_i)^{τ_i}(z+z_i)^{τ_i} det(λ1 − L̃(z))` for a realised (or sampled) L̃.
pub fn spectral_cyclotomic_from(inst: &CycloInstance, l: &Matrix<RatFunc<MultiPoly>>) -> Result<MultiPoly, CycloError> {
    let pre = bivariate::in_z(&bivariate::divisor_polynomial::<MultiPoly>(&inst.divisor.prefactor_roots()));
    bivariate::to_multipoly(&pre.mul(&bivariate::char_det_in_z(l)?)).map_err(|p| pole_error("cyclotomic gl_M spectral polynomial", p))
}

/// `∏(λ−λ_a) det(z1 − L(λ))` for a realised (or sampled) 2N × 2N sp_2N Lax matrix.
pub fn spectral_sp2n_from(inst: &CycloInstance, l: &Matrix<RatFunc<MultiPoly>>) -> Result<MultiPoly, CycloError> {
    let roots: Vec<(Rational, usize)> = inst.lambdas.iter().map(|l| (l.clone(), 1)).collect();
    let pre = bivariate::in_lambda(&bivariate::divisor_polynomial::<MultiPoly>(&roots));
    bivariate::to_multipoly(&pre.mul(&bivariate::char_det_in_lambda(l)?)).map_err(|p| pole_error("sp_2N spectral polynomial", p))
}

pub fn spectral_cyclotomic(inst: &CycloInstance) -> Result<MultiPoly, CycloError> {
    spectral_cyclotomic_from(inst, &cyclotomic_lax(inst))
}

pub fn spectral_sp2n(inst: &CycloInstance) -> Result<MultiPoly, CycloError> {
    spectral_sp2n_from(inst, &sp2n_lax(inst))
}

/// Compares the two spectral polynomials once computed.
pub fn compare_spectral(
    lhs: Result<MultiPoly, CycloError>,
    rhs: Result<MultiPoly, CycloError>,
) -> Result<CyclotomicDualityReport, CycloError> {
    let (lhs, rhs) = match (lhs, rhs) {
        (Ok(l), Ok(r)) => (l, r),
        (Err(e @ CycloError::ResidualPole { .. }), _) | (_, Err(e @ CycloError::ResidualPole { .. })) => {
            return Ok(ClassicalDualityReport { equal: false, lhs_terms: 0, rhs_terms: 0, common: None, witness: Some(e.to_string()) });
        }
        (Err(e), _) | (_, Err(e)) => return Err(e),
    };
    let witness = polynomial_witness(&lhs, &rhs);
    let equal = witness.is_none();
    Ok(ClassicalDualityReport { equal, lhs_terms: lhs.len(), rhs_terms: rhs.len(), common: equal.then_some(lhs), witness })
}

pub fn verify_cyclotomic_duality(inst: &CycloInstance) -> Result<CyclotomicDualityReport, CycloError> {
    compare_spectral(spectral_cyclotomic(inst), spectral_sp2n(inst))
}
#[derive(Debug, Clone, Serialize)]
pub struct LaxAlgebraReport {
    pub which: &'static str,
    pub entries_checked: usize,
    pub failure: Option<String>,
}

impl LaxAlgebraReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// `{f(z), g(w)}` for f a function of the first spectral variable and g of the second.
fn bracket_across(f: &RatFunc<MultiPoly>, g: &RatFunc<MultiPoly>) -> Bivariate<MultiPoly> {
    let outer: Vec<RatFunc<MultiPoly>> = f
        .numerator()
        .iter()
        .map(|fm| RatFunc::new(g.numerator().iter().map(|gn| poisson_bracket(fm, gn)).collect(), g.denominator().clone()))
        .collect();
    RatFunc::new(outer, f.denominator().clone())
}

fn constant(r: &Rational) -> Bivariate<MultiPoly> {
    RatFunc::constant(RatFunc::constant(MultiPoly::constant(r.clone())))
}

fn lift(m: &Matrix<Rational>) -> Matrix<Bivariate<MultiPoly>> {
    m.map(constant)
}

fn commutator(x: &Matrix<Bivariate<MultiPoly>>, y: &Matrix<Bivariate<MultiPoly>>) -> Matrix<Bivariate<MultiPoly>> {
    x.mul(y).expect("square").sub(&y.mul(x).expect("square")).expect("square")
}

/// `{L_1(z), L_2(w)}` on V ⊗ V, with row (i,k) and column (j,l) holding `{L_ij(z), L_kl(w)}`.
fn tensor_bracket(l: &Matrix<RatFunc<MultiPoly>>) -> Matrix<Bivariate<MultiPoly>> {
    let d = l.rows();
    Matrix::from_fn(d * d, d * d, |r, c| bracket_across(l.get(r / d, c / d), l.get(r % d, c % d)))
}

fn legs(l: &Matrix<RatFunc<MultiPoly>>) -> (Matrix<Bivariate<MultiPoly>>, Matrix<Bivariate<MultiPoly>>) {
    let id = Matrix::<Bivariate<MultiPoly>>::identity(l.rows());
    (l.map(bivariate::in_z).kronecker(&id), id.kronecker(&l.map(bivariate::in_lambda)))
}

fn compare(which: &'static str, lhs: &Matrix<Bivariate<MultiPoly>>, rhs: &Matrix<Bivariate<MultiPoly>>) -> LaxAlgebraReport {
    let d = lhs.rows();
    let mut report = LaxAlgebraReport { which, entries_checked: 0, failure: None };
    for r in 0..d {
        for c in 0..d {
            report.entries_checked += 1;
            if !lhs.get(r, c).sub(rhs.get(r, c)).is_zero() {
                report.failure = Some(format!("tensor entry ({r},{c}) differs"));
                return report;
            }
        }
    }
    report
}

/// `{L̃_1(z), L̃_2(w)} = [r_12(z,w), L̃_1(z)] − [r_21(w,z), L̃_2(w)]` with
/// `r_12(z,w) = Σ E_ba⊗E_ab/(w−z) − E_ba⊗E_ba/(w+z)`, checked after multiplying by w² − z².
pub fn lax_algebra_cyclotomic(inst: &CycloInstance) -> LaxAlgebraReport {
    let l = cyclotomic_lax(inst);
    let m = inst.m;
    let perm = Matrix::from_fn(m * m, m * m, |r, c| if r / m == c % m && r % m == c / m { rat(1) } else { rat(0) });
    let kmat = Matrix::from_fn(m * m, m * m, |r, c| if r / m == r % m && c / m == c % m { rat(1) } else { rat(0) });
    let (l1, l2) = legs(&l);
    let z = bivariate::z::<MultiPoly>();
    let w = bivariate::lambda::<MultiPoly>();
    let w2_z2 = w.mul(&w).sub(&z.mul(&z));
    let lhs = tensor_bracket(&l).map(|e| e.mul(&w2_z2));
    let plus = commutator(&lift(&perm), &l1.add(&l2).expect("size")).map(|e| e.mul(&w.add(&z)));
    let minus = commutator(&lift(&kmat), &l1.sub(&l2).expect("size")).map(|e| e.mul(&w.sub(&z)));
    compare("cyclotomic gl_M", &lhs, &plus.sub(&minus).expect("size"))
}

/// `{L_1(λ), L_2(µ)} = [r̄_12(λ,µ), L_1(λ) + L_2(µ)]` with `r̄_12 = Σ_{𝓘₂} Ē^IJ ⊗ Ē_IJ/(µ−λ)`,
/// checked after multiplying by µ − λ.
pub fn lax_algebra_sp2n(inst: &CycloInstance) -> LaxAlgebraReport {
    let l = sp2n_lax(inst);
    let n = inst.n;
    let mut omega = Matrix::<Rational>::zeros(4 * n * n, 4 * n * n);
    for (i, j) in basis_pairs(n) {
        omega = omega.add(&e_bar_dual(n, i, j).kronecker(&e_bar(n, i, j))).expect("size");
    }
    let (l1, l2) = legs(&l);
    let diff = bivariate::lambda::<MultiPoly>().sub(&bivariate::z());
    let lhs = tensor_bracket(&l).map(|e| e.mul(&diff));
    let rhs = commutator(&lift(&omega), &l1.add(&l2).expect("size"));
    compare("sp_2N", &lhs, &rhs)
}

/// The r-matrix `Σ_{𝓘₂} Ē^IJ ⊗ Ē_IJ` and its flip, for the skew-symmetry check.
pub fn sp2n_casimir(n: usize) -> (Matrix<Rational>, Matrix<Rational>) {
    let mut omega = Matrix::<Rational>::zeros(4 * n * n, 4 * n * n);
    let mut flipped = omega.clone();
    for (i, j) in basis_pairs(n) {
        omega = omega.add(&e_bar_dual(n, i, j).kronecker(&e_bar(n, i, j))).expect("size");
        flipped = flipped.add(&e_bar(n, i, j).kronecker(&e_bar_dual(n, i, j))).expect("size");
    }
    (omega, flipped)
}

#[derive(Debug, Clone, Serialize)]
pub struct QuantumCandidateReport {
    pub manin: bool,
    /// The failing quadruple (i, j, k, l), 0-based.
    pub witness: Option<[usize; 4]>,
    pub reason: Option<String>,
}

/// The block matrix `[[Λ, X], [ᵗP, Z]]` with p replaced by ∂, over the Weyl algebra with
/// λ adjoined as a central variable.
pub fn quantum_candidate(inst: &CycloInstance) -> Result<Matrix<RatFunc<WeylElement>>, CycloError> {
    let Mu::Value(mu) = &inst.mu else {
        return Err(CycloError::BadPoints("the quantum candidate needs a numeric µ".into()));
    };
    let (m, n) = (inst.m, inst.n);
    let qhat = |a: usize, i: i32| if i > 0 { WeylElement::x(a, i as usize) } else { WeylElement::d(a, (-i) as usize) };
    let mut inst0 = inst.clone();
    inst0.mu = Mu::Value(mu.clone());
    let z0 = z0_matrix(&inst0);
    let size = m + 2 * n;
    let mut out = Matrix::<RatFunc<WeylElement>>::zeros(size, size);
    for a in 1..=m {
        out.set(a - 1, a - 1, RatFunc::linear(&inst.lambdas[a - 1]));
        for &j in &super::sp2n::signed_indices(n) {
            let col = m + array_index(n, j);
            out.set(a - 1, col, RatFunc::constant(qhat(a, j)));
            out.set(col, a - 1, RatFunc::constant(qhat(a, -j).scale(&rat(sign(j)))));
        }
    }
    for r in 0..2 * n {
        for c in 0..2 * n {
            let mut e = WeylElement::constant(z0.get(r, c).constant_term());
            if r == c {
                e = e.add(&WeylElement::z());
            }
            out.set(m + r, m + c, RatFunc::constant(e));
        }
    }
    Ok(out)
}

pub fn check_quantum_candidate(inst: &CycloInstance) -> Result<QuantumCandidateReport, CycloError> {
    let mat = quantum_candidate(inst)?;
    Ok(match mat.manin_check() {
        ManinCheck::Manin => QuantumCandidateReport { manin: true, witness: None, reason: None },
        ManinCheck::Violation { i, j, k, l } => {
            let reason = if j == l {
                let c = mat.get(i, j).commutator(mat.get(k, j));
                format!("entries ({i},{j}) and ({k},{j}) of one column do not commute: commutator {}", c.display_in("lam"))
            } else {
                format!("[M_{i}{j}, M_{k}{l}] differs from [M_{k}{j}, M_{i}{l}]")
            };
            QuantumCandidateReport { manin: false, witness: Some([i, j, k, l]), reason: Some(reason) }
        }
    })
}
