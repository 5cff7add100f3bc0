//! Rational functions in two spectral variables, stored as `RatFunc<RatFunc<C>>`: the outer
//! variable is z and the inner one is λ.

use crate::matrix::{Matrix, MatrixError};
use crate::poly::{Monomial, MultiPoly, Var};
use crate::ratfunc::RatFunc;
use crate::rational::Rational;
use crate::ring::Ring;
use std::collections::BTreeMap;

pub type Bivariate<C> = RatFunc<RatFunc<C>>;

/// Which spectral variable a surviving pole belongs to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectralPole {
    pub variable: &'static str,
    pub point: Rational,
    pub order: u32,
}

pub fn z<C: Ring>() -> Bivariate<C> {
    RatFunc::var()
}

pub fn lambda<C: Ring>() -> Bivariate<C> {
    RatFunc::constant(RatFunc::var())
}

/// Embeds a function of z.
pub fn in_z<C: Ring>(f: &RatFunc<C>) -> Bivariate<C> {
    f.map_coeffs(|c| RatFunc::constant(c.clone()))
}

/// Embeds a function of λ.
pub fn in_lambda<C: Ring>(f: &RatFunc<C>) -> Bivariate<C> {
    RatFunc::constant(f.clone())
}

/// `det(λ1 − L(z))` for a square matrix of functions of z with central coefficients.
pub fn char_det_in_z<C: Ring>(l: &Matrix<RatFunc<C>>) -> Result<Bivariate<C>, MatrixError> {
    let lam = lambda::<C>();
    let n = l.rows();
    Matrix::from_fn(n, n, |r, c| {
        let e = in_z(l.get(r, c)).neg();
        if r == c {
            e.add(&lam)
        } else {
            e
        }
    })
    .det()
}

/// `det(z1 − L(λ))` for a square matrix of functions of λ with central coefficients.
pub fn char_det_in_lambda<C: Ring>(l: &Matrix<RatFunc<C>>) -> Result<Bivariate<C>, MatrixError> {
    let zz = z::<C>();
    let n = l.rows();
    Matrix::from_fn(n, n, |r, c| {
        let e = in_lambda(l.get(r, c)).neg();
        if r == c {
            e.add(&zz)
        } else {
            e
        }
    })
    .det()
}

/// `∏ (t − p)^k` over the listed points as a polynomial in one variable.
pub fn divisor_polynomial<C: Ring>(points: &[(Rational, usize)]) -> RatFunc<C> {
    let mut acc = RatFunc::one();
    for (p, k) in points {
        acc = acc.mul(&RatFunc::linear(p).pow(*k as u32));
    }
    acc
}

/// Coefficients `c_{jk}` of `Σ c_{jk} z^j λ^k`, or the first pole that does not cancel.
pub fn coefficient_grid<C: Ring>(f: &Bivariate<C>) -> Result<BTreeMap<(u32, u32), C>, SpectralPole> {
    let outer = f
        .to_polynomial()
        .map_err(|(point, order)| SpectralPole { variable: "z", point, order })?;
    let mut grid = BTreeMap::new();
    for (j, inner) in outer.iter().enumerate() {
        let coeffs = inner
            .to_polynomial()
            .map_err(|(point, order)| SpectralPole { variable: "lambda", point, order })?;
        for (k, c) in coeffs.into_iter().enumerate() {
            if !c.is_zero() {
                grid.insert((j as u32, k as u32), c);
            }
        }
    }
    Ok(grid)
}

/// Flattens to a polynomial in the variables z and λ.
pub fn to_multipoly(f: &Bivariate<MultiPoly>) -> Result<MultiPoly, SpectralPole> {
    let mut out = MultiPoly::zero();
    for ((j, k), c) in coefficient_grid(f)? {
        let m = Monomial::from_pairs([(Var::Z, j), (Var::Lambda, k)]);
        out.add_assign(&c.mul_monomial(&m, &crate::rational::rat(1)));
    }
    Ok(out)
}

/// Coefficients of λ^k as rational functions of z; the λ-dependence must be polynomial.
pub fn lambda_coefficients<C: Ring>(f: &Bivariate<C>) -> Result<Vec<RatFunc<C>>, SpectralPole> {
    let mut rows: Vec<Vec<C>> = Vec::new();
    for inner in f.numerator() {
        let coeffs = inner
            .to_polynomial()
            .map_err(|(point, order)| SpectralPole { variable: "lambda", point, order })?;
        rows.push(coeffs);
    }
    let degree = rows.iter().map(Vec::len).max().unwrap_or(0);
    Ok((0..degree)
        .map(|k| {
            let num: Vec<C> = rows.iter().map(|r| r.get(k).cloned().unwrap_or_else(C::zero)).collect();
            RatFunc::new(num, f.denominator().clone())
        })
        .collect())
}

/// Coefficients of z^j as rational functions of λ; the z-dependence must cancel to a polynomial.
pub fn z_coefficients<C: Ring>(f: &Bivariate<C>) -> Result<Vec<RatFunc<C>>, SpectralPole> {
    f.to_polynomial().map_err(|(point, order)| SpectralPole { variable: "z", point, order })
}
