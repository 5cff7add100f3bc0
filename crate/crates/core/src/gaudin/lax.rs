//! Realised Lax matrices `L^D(z)` and `L^D̃(λ)`.

use super::realize::{AlgebraSide, Flavor, Realization};
use super::takiff::TakiffGenerator;
use super::GaudinError;
use crate::matrix::Matrix;
use crate::ratfunc::RatFunc;
use crate::ring::Ring;

/// Image of `E^∞_ab + Σ_i Σ_r E^{(p_i)}_{ab,r} / (t − p_i)^{r+1}` as a rational function of the
/// side's spectral parameter.
pub fn lax_current<F: Flavor>(real: &Realization, side: AlgebraSide, a: usize, b: usize) -> Result<RatFunc<F::Elem>, GaudinError> {
    let divisor = match side {
        AlgebraSide::GlM => &real.divisor,
        AlgebraSide::GlN => &real.dual,
    };
    let inf = real.image::<F>(side, &TakiffGenerator::infinity(a, b))?;
    let mut out = RatFunc::constant(inf);
    for (i, (p, tau)) in divisor.points().iter().enumerate() {
        for r in 0..*tau {
            let img = real.image::<F>(side, &TakiffGenerator::finite(i, a, b, r))?;
            if !img.is_zero() {
                out = out.add(&RatFunc::pole(img, p, r as u32 + 1));
            }
        }
    }
    Ok(out)
}

/// The Lax matrix with entry (b, a) equal to the current `X_ab`.
pub fn realized_lax<F: Flavor>(real: &Realization, side: AlgebraSide) -> Result<Matrix<RatFunc<F::Elem>>, GaudinError> {
    Ok(realized_lax_transpose::<F>(real, side)?.transpose())
}

/// The transposed Lax matrix, entry (a, b) equal to `X_ab`.
pub fn realized_lax_transpose<F: Flavor>(real: &Realization, side: AlgebraSide) -> Result<Matrix<RatFunc<F::Elem>>, GaudinError> {
    let size = match side {
        AlgebraSide::GlM => real.m,
        AlgebraSide::GlN => real.n,
    };
    let mut entries = Vec::with_capacity(size * size);
    for a in 1..=size {
        for b in 1..=size {
            entries.push(lax_current::<F>(real, side, a, b)?);
        }
    }
    Ok(Matrix::new(size, size, entries))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gaudin::{Bosonic, Divisor, Quantum};
    use crate::poly::MultiPoly;
    use crate::rational::rat;
    use crate::weyl::WeylElement;

    #[test]
    fn one_by_one() {
        let real = Realization::new(1, 1, Divisor::from_ints(&[(1, 1)]).unwrap(), Divisor::from_ints(&[(5, 1)]).unwrap()).unwrap();
        let l = realized_lax::<Bosonic>(&real, AlgebraSide::GlM).unwrap();
        let xp = MultiPoly::x(1, 1).mul(&MultiPoly::p(1, 1));
        let want = RatFunc::constant(MultiPoly::constant(rat(5))).add(&RatFunc::pole(xp, &rat(1), 1));
        assert_eq!(l.get(0, 0), &want);
        let lq = realized_lax::<Quantum>(&real, AlgebraSide::GlN).unwrap();
        let dx = WeylElement::x(1, 1).mul(&WeylElement::d(1, 1)).add(&WeylElement::one());
        let want = RatFunc::constant(WeylElement::constant(rat(1))).add(&RatFunc::pole(dx, &rat(5), 1));
        assert_eq!(lq.get(0, 0), &want);
    }

    #[test]
    fn pole_orders_bounded_by_takiff_degree() {
        let real = Realization::new(2, 3, Divisor::from_ints(&[(1, 2), (2, 1)]).unwrap(), Divisor::from_ints(&[(5, 2)]).unwrap()).unwrap();
        let l = realized_lax::<Bosonic>(&real, AlgebraSide::GlM).unwrap();
        for e in l.entries() {
            assert!(e.pole_order(&rat(1)) <= 2);
            assert!(e.pole_order(&rat(2)) <= 1);
        }
        let lt = realized_lax::<Bosonic>(&real, AlgebraSide::GlN).unwrap();
        assert!(lt.entries().iter().any(|e| e.pole_order(&rat(5)) == 2));
        assert!(lt.entries().iter().all(|e| e.pole_order(&rat(5)) <= 2));
    }
}
