//! The bosonic realisations π_b of the cyclotomic gl_M Takiff algebra and π̄_b of the sp_2N
//! algebra, with exhaustive homomorphism checks.

use super::sp2n::{array_index, basis_pairs, decompose, e_bar, q, sign};
use super::{commutator, projector, unit, CycloError, CycloInstance};
use crate::matrix::Matrix;
use crate::poisson::poisson_bracket;
use crate::poly::{MultiPoly, Var};
use crate::rational::{rat, Rational};
use crate::ring::Ring;
use serde::Serialize;

/// Deliberate corruption of π_b, used to show the homomorphism check can fail.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub enum CycloFault {
    #[default]
    None,
    /// Drops the sign (−1)^v from the µ-term at the origin.
    DropMuSign,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum CycloPoint {
    Origin,
    /// Index into the list of points z_i (0-based).
    Finite(usize),
    Infinity,
}

/// `(Π_(s)E_ab)^{(0)}_s` at the origin, `E^{(z_i)}_{ab,r}` at a finite point and `E^{+(∞)}_{ab,1}`
/// at infinity. Indices a, b are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct CycloGenerator {
    pub point: CycloPoint,
    pub depth: usize,
    pub row: usize,
    pub col: usize,
}

impl CycloGenerator {
    /// The gl_M matrix multiplying ε^depth.
    pub fn coefficient(&self, m: usize) -> Matrix<Rational> {
        let e = unit(m, self.row, self.col);
        match self.point {
            CycloPoint::Origin => projector(self.depth, &e),
            CycloPoint::Finite(_) => e,
            CycloPoint::Infinity => projector(1, &e),
        }
    }
}

fn truncation(inst: &CycloInstance, point: CycloPoint) -> usize {
    match point {
        CycloPoint::Origin => 2 * inst.divisor.tau0(),
        CycloPoint::Finite(i) => inst.divisor.points()[i].1,
        CycloPoint::Infinity => 2,
    }
}

pub fn gl_m_generators(inst: &CycloInstance) -> Vec<CycloGenerator> {
    let m = inst.m;
    let mut out = Vec::new();
    let mut push = |point: CycloPoint, depth: usize| {
        for a in 1..=m {
            for b in 1..=m {
                let g = CycloGenerator { point, depth, row: a, col: b };
                if g.coefficient(m).entries().iter().any(|c| *c != rat(0)) {
                    out.push(g);
                }
            }
        }
    };
    for s in 0..2 * inst.divisor.tau0() {
        push(CycloPoint::Origin, s);
    }
    for (i, (_, t)) in inst.divisor.points().iter().enumerate() {
        for r in 0..*t {
            push(CycloPoint::Finite(i), r);
        }
    }
    push(CycloPoint::Infinity, 1);
    out
}

/// `y^{ab}_s − µ Σ_{u+v=s+1} (−1)^v x^a_u x^b_v`.
pub fn origin_image(inst: &CycloInstance, a: usize, b: usize, s: usize, fault: CycloFault) -> MultiPoly {
    let tau0 = inst.divisor.tau0();
    let mut out = MultiPoly::zero();
    let sign_s = if s % 2 == 0 { rat(1) } else { rat(-1) };
    for u in 1..=tau0.saturating_sub(s) {
        out.add_assign(&MultiPoly::x(a, u + s).mul(&MultiPoly::p(b, u)));
        out.add_assign(&MultiPoly::x(b, u + s).mul(&MultiPoly::p(a, u)).scale(&-sign_s.clone()));
    }
    let mut mu_sum = MultiPoly::zero();
    for u in 1..=tau0 {
        if s + 1 <= u || s + 1 - u > tau0 {
            continue;
        }
        let v = s + 1 - u;
        let sv = if v % 2 == 0 || fault == CycloFault::DropMuSign { rat(1) } else { rat(-1) };
        mu_sum.add_assign(&MultiPoly::x(a, u).mul(&MultiPoly::x(b, v)).scale(&sv));
    }
    out.sub(&inst.mu.as_poly().mul(&mu_sum))
}

/// `Σ_{u=ν_i+1}^{ν_i+τ_i−r} x^a_{u+r} p^b_u`.
pub fn finite_image(inst: &CycloInstance, i: usize, a: usize, b: usize, r: usize) -> MultiPoly {
    let nu = inst.divisor.block_offsets()[i];
    let tau = inst.divisor.points()[i].1;
    let mut out = MultiPoly::zero();
    for u in nu + 1..=(nu + tau).saturating_sub(r) {
        out.add_assign(&MultiPoly::x(a, u + r).mul(&MultiPoly::p(b, u)));
    }
    out
}

fn check_generator(inst: &CycloInstance, g: &CycloGenerator) -> Result<(), CycloError> {
    let ok_index = (1..=inst.m).contains(&g.row) && (1..=inst.m).contains(&g.col);
    let ok_depth = match g.point {
        CycloPoint::Finite(i) => i < inst.divisor.points().len() && g.depth < truncation(inst, g.point),
        CycloPoint::Origin => g.depth < truncation(inst, g.point),
        CycloPoint::Infinity => g.depth == 1,
    };
    if !(ok_index && ok_depth) {
        return Err(CycloError::IndexOutOfRange(format!("{g:?}")));
    }
    Ok(())
}

/// π_b on a generator.
pub fn image_gl_m(inst: &CycloInstance, g: &CycloGenerator) -> Result<MultiPoly, CycloError> {
    check_generator(inst, g)?;
    Ok(image_with_fault(inst, g, CycloFault::None))
}

fn image_with_fault(inst: &CycloInstance, g: &CycloGenerator, fault: CycloFault) -> MultiPoly {
    let (a, b) = (g.row, g.col);
    match g.point {
        CycloPoint::Origin => origin_image(inst, a, b, g.depth, fault),
        CycloPoint::Finite(i) => finite_image(inst, i, a, b, g.depth),
        CycloPoint::Infinity => {
            if a == b {
                MultiPoly::constant(inst.lambdas[a - 1].clone())
            } else {
                MultiPoly::zero()
            }
        }
    }
}

/// π_b of `X ε^depth` at a point, for a σ-invariant coefficient matrix X.
fn image_element(inst: &CycloInstance, point: CycloPoint, depth: usize, x: &Matrix<Rational>, fault: CycloFault) -> MultiPoly {
    if depth >= truncation(inst, point) {
        return MultiPoly::zero();
    }
    // An invariant X equals ½ Σ X_ab Π_(depth) E_ab at the origin and at infinity.
    let weight = match point {
        CycloPoint::Finite(_) => rat(1),
        _ => Rational::new(1.into(), 2.into()),
    };
    let mut out = MultiPoly::zero();
    for a in 1..=inst.m {
        for b in 1..=inst.m {
            let c = x.get(a - 1, b - 1);
            if *c == rat(0) {
                continue;
            }
            let g = CycloGenerator { point, depth, row: a, col: b };
            out.add_assign(&image_with_fault(inst, &g, fault).scale(&(c * &weight)));
        }
    }
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct CycloHomomorphismReport {
    pub side: &'static str,
    pub generators: usize,
    pub pairs_checked: usize,
    pub failure: Option<String>,
}

impl CycloHomomorphismReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// Exhaustive check that π_b preserves brackets, together with the linear relation
/// `π_b(Π_(s)E_ba) = −(−1)^s π_b(Π_(s)E_ab)` that makes it well defined.
pub fn verify_gl_m_homomorphism(inst: &CycloInstance, fault: CycloFault) -> CycloHomomorphismReport {
    let gens = gl_m_generators(inst);
    let images: Vec<MultiPoly> = gens.iter().map(|g| image_with_fault(inst, g, fault)).collect();
    let mut report = CycloHomomorphismReport { side: "gl_M cyclotomic", generators: gens.len(), pairs_checked: 0, failure: None };
    for s in 0..2 * inst.divisor.tau0() {
        let sign = if s % 2 == 0 { rat(-1) } else { rat(1) };
        for a in 1..=inst.m {
            for b in 1..=inst.m {
                let ab = origin_image(inst, a, b, s, fault);
                let ba = origin_image(inst, b, a, s, fault);
                if !ba.sub(&ab.scale(&sign)).is_zero() {
                    report.failure = Some(format!("image of Π_({s})E_{b}{a} is not {sign} times that of Π_({s})E_{a}{b}"));
                    return report;
                }
            }
        }
    }
    for (i, g1) in gens.iter().enumerate() {
        for (j, g2) in gens.iter().enumerate().skip(i) {
            report.pairs_checked += 1;
            let lhs = poisson_bracket(&images[i], &images[j]);
            let rhs = if g1.point == g2.point {
                let c = commutator(&g1.coefficient(inst.m), &g2.coefficient(inst.m));
                image_element(inst, g1.point, g1.depth + g2.depth, &c, fault)
            } else {
                MultiPoly::zero()
            };
            if !lhs.sub(&rhs).is_zero() {
                report.failure = Some(format!("{g1:?} with {g2:?}: bracket of images {lhs}, image of bracket {rhs}"));
                return report;
            }
        }
    }
    report
}

/// `Z₀`: the matrix Z at z = 0, i.e. `⊕(−J_{τ_i}(−z_i)) ⊕ (−J_{τ₀}(0)) ⊕ J_{τ₀}(0) ⊕ J_{τ_i}(−z_i) + µẼ_{1,−1}`.
pub fn z0_matrix(inst: &CycloInstance) -> Matrix<MultiPoly> {
    let n = inst.n;
    let mut z0 = Matrix::<MultiPoly>::zeros(2 * n, 2 * n);
    let mut set = |i: i32, j: i32, v: MultiPoly| z0.set(array_index(n, i), array_index(n, j), v);
    let mut blocks = vec![(0usize, inst.divisor.tau0(), rat(0))];
    for ((zi, t), nu) in inst.divisor.points().iter().zip(inst.divisor.block_offsets()) {
        blocks.push((nu, *t, zi.clone()));
    }
    for (nu, t, zi) in blocks {
        for k in nu + 1..=nu + t {
            let k = k as i32;
            set(k, k, MultiPoly::constant(-zi.clone()));
            set(-k, -k, MultiPoly::constant(zi.clone()));
            if k < (nu + t) as i32 {
                set(k + 1, k, MultiPoly::constant(rat(-1)));
                set(-k, -(k + 1), MultiPoly::constant(rat(1)));
            }
        }
    }
    let cur = z0.get(array_index(n, 1), array_index(n, -1)).add(&inst.mu.as_poly());
    z0.set(array_index(n, 1), array_index(n, -1), cur);
    z0
}

/// π̄_b(Ē^{(λ_a)}_IJ) = σ_J q^a_I q^a_{−J}, with a 1-based.
pub fn sp_image_finite(a: usize, i: i32, j: i32) -> MultiPoly {
    q(a, i).mul(&q(a, -j)).scale(&rat(sign(j)))
}

/// π̄_b(Ē^{(∞)}_IJ) = −(Z₀)_{JI}.
pub fn sp_image_infinity(inst: &CycloInstance, z0: &Matrix<MultiPoly>, i: i32, j: i32) -> MultiPoly {
    z0.get(array_index(inst.n, j), array_index(inst.n, i)).neg()
}

/// Exhaustive check that π̄_b preserves the sp_2N brackets at every λ_a and respects
/// `Ē_{−J,−I} = −σ_Iσ_J Ē_IJ`. Generators at infinity span an abelian algebra and map to constants.
pub fn verify_sp2n_homomorphism(inst: &CycloInstance) -> CycloHomomorphismReport {
    let n = inst.n;
    let pairs = basis_pairs(n);
    let z0 = z0_matrix(inst);
    let mut report = CycloHomomorphismReport { side: "sp_2N", generators: pairs.len() * (inst.m + 1), pairs_checked: 0, failure: None };
    let idx = super::sp2n::signed_indices(n);
    for &i in &idx {
        for &j in &idx {
            let s = rat(-sign(i) * sign(j));
            let fin = sp_image_finite(1, -j, -i).sub(&sp_image_finite(1, i, j).scale(&s));
            let inf = sp_image_infinity(inst, &z0, -j, -i).sub(&sp_image_infinity(inst, &z0, i, j).scale(&s));
            if !fin.is_zero() || !inf.is_zero() {
                report.failure = Some(format!("relation Ē_{{-J,-I}} = -σ_Iσ_J Ē_IJ fails for I = {i}, J = {j}"));
                return report;
            }
        }
    }
    for &(i, j) in &pairs {
        if sp_image_infinity(inst, &z0, i, j).variables().iter().any(|v| matches!(v, Var::X(..) | Var::P(..))) {
            report.failure = Some(format!("image of Ē^(∞)_{i},{j} is not central"));
            return report;
        }
    }
    report.pairs_checked += pairs.len() * (pairs.len() + 1) / 2 * (inst.m + 1);
    for a in 1..=inst.m {
        for (x, &(i, j)) in pairs.iter().enumerate() {
            for &(k, l) in &pairs[x..] {
                let lhs = poisson_bracket(&sp_image_finite(a, i, j), &sp_image_finite(a, k, l));
                let c = e_bar(n, i, j).mul(&e_bar(n, k, l)).expect("square").sub(&e_bar(n, k, l).mul(&e_bar(n, i, j)).expect("square")).expect("square");
                let Some(coords) = decompose(n, &c) else {
                    report.failure = Some(format!("[Ē_{i},{j}, Ē_{k},{l}] left sp_2N"));
                    return report;
                };
                let mut rhs = MultiPoly::zero();
                for ((p, r), v) in coords {
                    rhs.add_assign(&sp_image_finite(a, p, r).scale(&v));
                }
                if !lhs.sub(&rhs).is_zero() {
                    report.failure = Some(format!("λ_{a}: Ē_({i},{j}) with Ē_({k},{l}): bracket of images {lhs}, image of bracket {rhs}"));
                    return report;
                }
            }
        }
        // Distinct points commute, and their images involve disjoint variables.
        for b in a + 1..=inst.m {
            for &(i, j) in &pairs {
                for &(k, l) in &pairs {
                    report.pairs_checked += 1;
                    if !poisson_bracket(&sp_image_finite(a, i, j), &sp_image_finite(b, k, l)).is_zero() {
                        report.failure = Some(format!("λ_{a} and λ_{b} images do not commute"));
                        return report;
                    }
                }
            }
        }
    }
    report
}
