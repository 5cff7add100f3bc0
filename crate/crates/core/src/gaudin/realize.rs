//! The realisations π_b, π̃_b (Poisson), π_f, π̃_f (graded Poisson) and π̂_b, π̂̃_b (Weyl) of the
//! Takiff algebras, and the exhaustive homomorphism check.

use super::divisor::Divisor;
use super::takiff::{enumerate_generators, takiff_bracket, Point, TakiffGenerator};
use super::GaudinError;
use crate::grassmann::GrassmannElement;
use crate::poisson::poisson_bracket;
use crate::poly::MultiPoly;
use crate::rational::{rat, Rational};
use crate::ring::Ring;
use crate::weyl::WeylElement;
use serde::Serialize;
use std::fmt;

/// Target algebra of a realisation together with its bilinear building blocks.
pub trait Flavor: Send + Sync + 'static {
    type Elem: Ring + fmt::Display;
    const NAME: &'static str;
    /// gl_M side: π(E_ab) is (ba)-indexed from the dual Jordan data when true, (ab) when false.
    const GL_M_INFINITY_TRANSPOSED: bool;
    /// gl_N side: π̃(Ẽ_ij) is (ji)-indexed from the Jordan data when true, (ij) when false.
    const GL_N_INFINITY_TRANSPOSED: bool;

    /// Summand of π(E_ab) pairing gl_N positions k (on the a-letter) and u (on the b-letter).
    fn gl_m_pair(a: usize, b: usize, k: usize, u: usize) -> Self::Elem;
    /// Summand of π̃(Ẽ_ij) pairing gl_M positions u (on the j-letter) and w (on the i-letter).
    fn gl_n_pair(i: usize, j: usize, u: usize, w: usize) -> Self::Elem;
    /// The Lie bracket of the target algebra.
    fn bracket(a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
}

/// Canonical pairs (x, p) with the Poisson bracket `{p, x} = 1`.
#[derive(Debug, Clone, Copy)]
pub struct Bosonic;

/// Grassmann pairs (ψ, π) with the graded bracket, using the (ba) placement at infinity on the
/// gl_M side that makes the Berezinian factorisation match `det(λ − L)`.
#[derive(Debug, Clone, Copy)]
pub struct Fermionic;

/// Grassmann pairs with the (ab) placement at infinity on the gl_M side, kept to exhibit the
/// mismatch it causes in the product identity.
#[derive(Debug, Clone, Copy)]
pub struct FermionicVerbatim;

/// Weyl algebra with `[∂, x] = 1`; π̂̃ places ∂ to the left of x.
#[derive(Debug, Clone, Copy)]
pub struct Quantum;

impl Flavor for Bosonic {
    type Elem = MultiPoly;
    const NAME: &'static str = "classical-bosonic";
    const GL_M_INFINITY_TRANSPOSED: bool = true;
    const GL_N_INFINITY_TRANSPOSED: bool = true;
    fn gl_m_pair(a: usize, b: usize, k: usize, u: usize) -> MultiPoly {
        MultiPoly::x(a, k).mul(&MultiPoly::p(b, u))
    }
    fn gl_n_pair(i: usize, j: usize, u: usize, w: usize) -> MultiPoly {
        MultiPoly::p(u, j).mul(&MultiPoly::x(w, i))
    }
    fn bracket(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
        poisson_bracket(a, b)
    }
}

impl Flavor for Fermionic {
    type Elem = GrassmannElement;
    const NAME: &'static str = "classical-fermionic";
    const GL_M_INFINITY_TRANSPOSED: bool = true;
    const GL_N_INFINITY_TRANSPOSED: bool = false;
    fn gl_m_pair(a: usize, b: usize, k: usize, u: usize) -> GrassmannElement {
        GrassmannElement::pi(a, k).mul(&GrassmannElement::psi(b, u))
    }
    fn gl_n_pair(i: usize, j: usize, u: usize, w: usize) -> GrassmannElement {
        GrassmannElement::psi(u, i).mul(&GrassmannElement::pi(w, j))
    }
    fn bracket(a: &GrassmannElement, b: &GrassmannElement) -> GrassmannElement {
        a.bracket(b).expect("realised generators are even")
    }
}

impl Flavor for FermionicVerbatim {
    type Elem = GrassmannElement;
    const NAME: &'static str = "classical-fermionic-ab-infinity";
    const GL_M_INFINITY_TRANSPOSED: bool = false;
    const GL_N_INFINITY_TRANSPOSED: bool = false;
    fn gl_m_pair(a: usize, b: usize, k: usize, u: usize) -> GrassmannElement {
        Fermionic::gl_m_pair(a, b, k, u)
    }
    fn gl_n_pair(i: usize, j: usize, u: usize, w: usize) -> GrassmannElement {
        Fermionic::gl_n_pair(i, j, u, w)
    }
    fn bracket(a: &GrassmannElement, b: &GrassmannElement) -> GrassmannElement {
        Fermionic::bracket(a, b)
    }
}

impl Flavor for Quantum {
    type Elem = WeylElement;
    const NAME: &'static str = "quantum-bosonic";
    const GL_M_INFINITY_TRANSPOSED: bool = true;
    const GL_N_INFINITY_TRANSPOSED: bool = true;
    fn gl_m_pair(a: usize, b: usize, k: usize, u: usize) -> WeylElement {
        WeylElement::x(a, k).mul(&WeylElement::d(b, u))
    }
    fn gl_n_pair(i: usize, j: usize, u: usize, w: usize) -> WeylElement {
        WeylElement::d(u, j).mul(&WeylElement::x(w, i))
    }
    fn bracket(a: &WeylElement, b: &WeylElement) -> WeylElement {
        a.commutator(b)
    }
}

/// Deliberate corruptions of the gl_M-side realisation, used to show the checks can fail.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub enum Fault {
    #[default]
    None,
    /// Negates the image of `E^{(z_1)}_{12,0}` (needs M ≥ 2).
    FlipSign,
    /// Ignores the depth shift, pairing index u with itself at every depth.
    DropShift,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum AlgebraSide {
    /// `gl_M^D`, spectral parameter z.
    GlM,
    /// `gl_N^D̃`, spectral parameter λ.
    GlN,
}

/// The data `(M, N, D, D̃)` fixing both realisations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Realization {
    pub m: usize,
    pub n: usize,
    pub divisor: Divisor,
    pub dual: Divisor,
    pub fault: Fault,
}

/// Largest M or N handled (the Grassmann monomial mask holds 8×8 pairs).
pub const MAX_RANK: usize = 8;

/// Entry (r, c) of `−⊕_k J_{τ_k}(−p_k)`: p_k on the diagonal, +1 on the subdiagonal.
fn neg_jordan_sum(divisor: &Divisor, r: usize, c: usize) -> Rational {
    let (br, bc) = (divisor.block_of(r), divisor.block_of(c));
    if br != bc {
        return rat(0);
    }
    if r == c {
        divisor.location(br).clone()
    } else if r == c + 1 {
        rat(1)
    } else {
        rat(0)
    }
}

impl Realization {
    pub fn new(m: usize, n: usize, divisor: Divisor, dual: Divisor) -> Result<Self, GaudinError> {
        if m == 0 || n == 0 || m > MAX_RANK || n > MAX_RANK {
            return Err(GaudinError::TooLarge(format!("M = {m}, N = {n} outside 1..={MAX_RANK}")));
        }
        divisor.check_total("τ_i", "N", n)?;
        dual.check_total("τ̃_a", "M", m)?;
        Ok(Realization { m, n, divisor, dual, fault: Fault::None })
    }

    pub fn with_fault(mut self, fault: Fault) -> Self {
        self.fault = fault;
        self
    }

    pub fn z_point(&self, i: usize) -> &Rational {
        self.divisor.location(i)
    }

    pub fn lambda_point(&self, a: usize) -> &Rational {
        self.dual.location(a)
    }

    fn check_indices(&self, g: &TakiffGenerator, size: usize, divisor: &Divisor) -> Result<(), GaudinError> {
        let ok_rc = (1..=size).contains(&g.row) && (1..=size).contains(&g.col);
        let ok_point = match g.point {
            Point::Finite(i) => i < divisor.len() && g.depth < divisor.degree(i),
            Point::Infinity => g.depth == 1,
        };
        if ok_rc && ok_point {
            Ok(())
        } else {
            Err(GaudinError::IndexOutOfRange(g.to_string()))
        }
    }

    /// π(g) for a generator of `gl_M^D`.
    pub fn image_m<F: Flavor>(&self, g: &TakiffGenerator) -> Result<F::Elem, GaudinError> {
        self.check_indices(g, self.m, &self.divisor)?;
        let (a, b) = (g.row, g.col);
        match g.point {
            Point::Infinity => {
                let v = if F::GL_M_INFINITY_TRANSPOSED {
                    neg_jordan_sum(&self.dual, b, a)
                } else {
                    neg_jordan_sum(&self.dual, a, b)
                };
                Ok(F::Elem::from_rational(&v))
            }
            Point::Finite(i) => {
                let nu = self.divisor.block_offsets()[i];
                let tau = self.divisor.degree(i);
                let r = g.depth;
                let shift = if self.fault == Fault::DropShift { 0 } else { r };
                let mut out = F::Elem::zero();
                for u in nu + 1..=nu + tau - r {
                    out = out.add(&F::gl_m_pair(a, b, u + shift, u));
                }
                if self.fault == Fault::FlipSign && i == 0 && r == 0 && (a, b) == (1, 2) {
                    out = out.neg();
                }
                Ok(out)
            }
        }
    }

    /// π̃(g) for a generator of `gl_N^D̃`.
    pub fn image_n<F: Flavor>(&self, g: &TakiffGenerator) -> Result<F::Elem, GaudinError> {
        self.check_indices(g, self.n, &self.dual)?;
        let (i, j) = (g.row, g.col);
        match g.point {
            Point::Infinity => {
                let v = if F::GL_N_INFINITY_TRANSPOSED {
                    neg_jordan_sum(&self.divisor, j, i)
                } else {
                    neg_jordan_sum(&self.divisor, i, j)
                };
                Ok(F::Elem::from_rational(&v))
            }
            Point::Finite(a) => {
                let nu = self.dual.block_offsets()[a];
                let tau = self.dual.degree(a);
                let s = g.depth;
                let mut out = F::Elem::zero();
                for u in nu + 1..=nu + tau - s {
                    out = out.add(&F::gl_n_pair(i, j, u, u + s));
                }
                Ok(out)
            }
        }
    }

    pub fn image<F: Flavor>(&self, side: AlgebraSide, g: &TakiffGenerator) -> Result<F::Elem, GaudinError> {
        match side {
            AlgebraSide::GlM => self.image_m::<F>(g),
            AlgebraSide::GlN => self.image_n::<F>(g),
        }
    }

    pub fn generators(&self, side: AlgebraSide) -> Vec<TakiffGenerator> {
        match side {
            AlgebraSide::GlM => enumerate_generators(self.m, &self.divisor),
            AlgebraSide::GlN => enumerate_generators(self.n, &self.dual),
        }
    }

    fn side_divisor(&self, side: AlgebraSide) -> &Divisor {
        match side {
            AlgebraSide::GlM => &self.divisor,
            AlgebraSide::GlN => &self.dual,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomomorphismFailure {
    pub left: TakiffGenerator,
    pub right: TakiffGenerator,
    pub bracket_of_images: String,
    pub image_of_bracket: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomomorphismReport {
    pub side: AlgebraSide,
    pub flavor: &'static str,
    pub pairs_checked: usize,
    pub failure: Option<HomomorphismFailure>,
}

impl HomomorphismReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// Compares `{π(g), π(h)}` with `π([g, h])` over every unordered pair of basis elements
/// (including g = h), stopping at the first mismatch.
pub fn verify_homomorphism<F: Flavor>(real: &Realization, side: AlgebraSide) -> Result<HomomorphismReport, GaudinError> {
    let gens = real.generators(side);
    let images: Vec<F::Elem> = gens.iter().map(|g| real.image::<F>(side, g)).collect::<Result<_, _>>()?;
    let divisor = real.side_divisor(side);
    let mut pairs_checked = 0;
    for (k, g) in gens.iter().enumerate() {
        for (l, h) in gens.iter().enumerate().skip(k) {
            pairs_checked += 1;
            let lhs = F::bracket(&images[k], &images[l]);
            let mut rhs = F::Elem::zero();
            for (e, c) in takiff_bracket(g, h, divisor) {
                let idx = gens.binary_search(&e).expect("bracket stays in the basis");
                rhs = rhs.add(&images[idx].scale(&c));
            }
            if !lhs.equals(&rhs) {
                return Ok(HomomorphismReport {
                    side,
                    flavor: F::NAME,
                    pairs_checked,
                    failure: Some(HomomorphismFailure {
                        left: *g,
                        right: *h,
                        bracket_of_images: lhs.to_string(),
                        image_of_bracket: rhs.to_string(),
                    }),
                });
            }
        }
    }
    Ok(HomomorphismReport { side, flavor: F::NAME, pairs_checked, failure: None })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Var;

    fn real(m: usize, n: usize, d: &[(i64, usize)], dd: &[(i64, usize)]) -> Realization {
        Realization::new(m, n, Divisor::from_ints(d).unwrap(), Divisor::from_ints(dd).unwrap()).unwrap()
    }

    #[test]
    fn single_point_images() {
        let r = real(2, 1, &[(1, 1)], &[(5, 2)]);
        let g = TakiffGenerator::finite(0, 1, 2, 0);
        let img = r.image_m::<Bosonic>(&g).unwrap();
        assert_eq!(img, MultiPoly::var(Var::X(1, 1)).mul(&MultiPoly::var(Var::P(2, 1))));
        assert_eq!(r.image_m::<Bosonic>(&TakiffGenerator::infinity(1, 2)).unwrap(), MultiPoly::one());
        assert!(r.image_m::<Bosonic>(&TakiffGenerator::infinity(2, 1)).unwrap().is_zero());
        assert_eq!(r.image_m::<Bosonic>(&TakiffGenerator::infinity(2, 2)).unwrap(), MultiPoly::constant(rat(5)));
    }

    #[test]
    fn quantum_dual_order() {
        let r = real(1, 2, &[(1, 1), (2, 1)], &[(5, 1)]);
        let img = r.image_n::<Quantum>(&TakiffGenerator::finite(0, 2, 1, 0)).unwrap();
        assert_eq!(img, WeylElement::d(1, 1).mul(&WeylElement::x(1, 2)));
        let diag = r.image_n::<Quantum>(&TakiffGenerator::finite(0, 1, 1, 0)).unwrap();
        assert_eq!(diag, WeylElement::x(1, 1).mul(&WeylElement::d(1, 1)).add(&WeylElement::one()));
        assert_eq!(r.image_n::<Quantum>(&TakiffGenerator::infinity(2, 2)).unwrap(), WeylElement::constant(rat(2)));
    }

    #[test]
    fn out_of_range() {
        let r = real(1, 1, &[(1, 1)], &[(5, 1)]);
        assert!(matches!(
            r.image_m::<Bosonic>(&TakiffGenerator::finite(0, 1, 1, 1)),
            Err(GaudinError::IndexOutOfRange(_))
        ));
        assert!(matches!(
            r.image_m::<Bosonic>(&TakiffGenerator::finite(0, 2, 1, 0)),
            Err(GaudinError::IndexOutOfRange(_))
        ));
    }

    #[test]
    fn degree_constraint() {
        let err = Realization::new(1, 2, Divisor::from_ints(&[(1, 1)]).unwrap(), Divisor::from_ints(&[(5, 1)]).unwrap());
        assert!(err.unwrap_err().to_string().contains("Σ τ_i = N violated: N = 2"));
    }

    #[test]
    fn homomorphisms_hold_and_mutations_fail() {
        let r = real(2, 2, &[(1, 2)], &[(5, 1), (7, 1)]);
        for side in [AlgebraSide::GlM, AlgebraSide::GlN] {
            assert!(verify_homomorphism::<Bosonic>(&r, side).unwrap().passed());
            assert!(verify_homomorphism::<Fermionic>(&r, side).unwrap().passed());
            assert!(verify_homomorphism::<Quantum>(&r, side).unwrap().passed());
        }
        let q = real(2, 3, &[(1, 2), (2, 1)], &[(5, 1), (7, 1)]);
        assert!(verify_homomorphism::<Quantum>(&q, AlgebraSide::GlM).unwrap().passed());
        assert!(verify_homomorphism::<Quantum>(&q, AlgebraSide::GlN).unwrap().passed());
        let bad = verify_homomorphism::<Quantum>(&q.clone().with_fault(Fault::DropShift), AlgebraSide::GlM).unwrap();
        assert!(bad.failure.is_some());
        let bad = verify_homomorphism::<Bosonic>(&r.with_fault(Fault::FlipSign), AlgebraSide::GlM).unwrap();
        assert!(bad.failure.is_some());
    }
}
