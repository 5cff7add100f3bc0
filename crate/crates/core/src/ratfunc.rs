//! Univariate rational functions whose denominators are kept factored over known rational roots.
//!
//! The numerator is a dense polynomial with coefficients in any [`Ring`] (possibly noncommutative);
//! the denominator is a monic scalar polynomial stored as a multiset of roots, so products and
//! derivatives never need root-finding and cancellation is exact synthetic division.

use crate::rational::{binomial, is_zero, rat, Rational};
use crate::ring::Ring;
use num_bigint::BigInt;
use num_traits::Signed;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RatFuncError {
    #[error("cannot invert the zero rational function")]
    ZeroInverse,
    #[error("numerator does not split over the rationals; cannot keep the denominator factored")]
    NotSplit,
    #[error("denominator has a pole at {point} of order {order} not covered by the pole list")]
    UnlistedPole { point: Rational, order: u32 },
}

/// A rational function `num(t) / ∏ (t - r)^m`.
#[derive(Debug, Clone)]
pub struct RatFunc<C> {
    num: Vec<C>,
    den: BTreeMap<Rational, u32>,
}

/// Scalar polynomial helpers (coefficients low degree first).
pub(crate) fn linear_power(r: &Rational, k: u32) -> Vec<Rational> {
    let mut out = vec![rat(1)];
    for _ in 0..k {
        let mut next = vec![rat(0); out.len() + 1];
        for (j, c) in out.iter().enumerate() {
            next[j + 1] += c;
            next[j] -= c * r;
        }
        out = next;
    }
    out
}

pub(crate) fn roots_poly(den: &BTreeMap<Rational, u32>) -> Vec<Rational> {
    let mut out = vec![rat(1)];
    for (r, m) in den {
        out = scalar_mul(&out, &linear_power(r, *m));
    }
    out
}

fn scalar_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![rat(0); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn mul_by_scalar_poly<C: Ring>(a: &[C], s: &[Rational]) -> Vec<C> {
    if a.is_empty() || s.is_empty() {
        return Vec::new();
    }
    let mut out = vec![C::zero(); a.len() + s.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in s.iter().enumerate() {
            if !is_zero(y) {
                out[i + j] = out[i + j].add(&x.scale(y));
            }
        }
    }
    out
}

fn trim<C: Ring>(v: &mut Vec<C>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

/// Coefficients of `p(r + s)` as a polynomial in `s`.
fn taylor_shift<C: Ring>(p: &[C], r: &Rational) -> Vec<C> {
    let mut out = vec![C::zero(); p.len()];
    for (j, c) in p.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mut rp = rat(1);
        for k in (0..=j).rev() {
            let factor = Rational::from_integer(binomial(j as u32, k as u32)) * &rp;
            out[k] = out[k].add(&c.scale(&factor));
            rp *= r;
        }
    }
    out
}

impl<C: Ring> RatFunc<C> {
    pub fn new(num: Vec<C>, den: BTreeMap<Rational, u32>) -> Self {
        let mut num = num;
        trim(&mut num);
        let den = if num.is_empty() {
            BTreeMap::new()
        } else {
            den.into_iter().filter(|(_, m)| *m > 0).collect()
        };
        RatFunc { num, den }
    }

    pub fn polynomial(coeffs: Vec<C>) -> Self {
        Self::new(coeffs, BTreeMap::new())
    }

    pub fn constant(c: C) -> Self {
        Self::polynomial(vec![c])
    }

    /// The spectral variable `t` itself.
    pub fn var() -> Self {
        Self::polynomial(vec![C::zero(), C::one()])
    }

    /// `c * t^k`.
    pub fn monomial(c: C, k: usize) -> Self {
        let mut v = vec![C::zero(); k + 1];
        v[k] = c;
        Self::polynomial(v)
    }

    /// `c / (t - r)^k`.
    pub fn pole(c: C, r: &Rational, k: u32) -> Self {
        Self::new(vec![c], BTreeMap::from([(r.clone(), k)]))
    }

    /// `t - r`.
    pub fn linear(r: &Rational) -> Self {
        Self::polynomial(vec![C::from_rational(&-r.clone()), C::one()])
    }

    pub fn from_scalar(f: &RatFunc<Rational>) -> Self {
        f.map_coeffs(C::from_rational)
    }

    pub fn map_coeffs<D: Ring>(&self, f: impl Fn(&C) -> D) -> RatFunc<D> {
        RatFunc::new(self.num.iter().map(f).collect(), self.den.clone())
    }

    pub fn numerator(&self) -> &[C] {
        &self.num
    }

    pub fn denominator(&self) -> &BTreeMap<Rational, u32> {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_empty()
    }

    pub fn numerator_degree(&self) -> Option<usize> {
        self.num.len().checked_sub(1)
    }

    pub fn eval_numerator(&self, r: &Rational) -> C {
        let mut acc = C::zero();
        for c in self.num.iter().rev() {
            acc = acc.scale(r).add(c);
        }
        acc
    }

    /// Cancels every common factor `(t - r)` between numerator and denominator.
    pub fn reduce(&self) -> Self {
        let mut num = self.num.clone();
        let mut den = self.den.clone();
        for (r, m) in den.iter_mut() {
            while *m > 0 && !num.is_empty() {
                let mut acc = C::zero();
                for c in num.iter().rev() {
                    acc = acc.scale(r).add(c);
                }
                if !acc.is_zero() {
                    break;
                }
                num = divide_linear(&num, r);
                *m -= 1;
            }
        }
        Self::new(num, den)
    }

    /// Polynomial coefficients after cancellation, or the first surviving pole.
    pub fn to_polynomial(&self) -> Result<Vec<C>, (Rational, u32)> {
        let red = self.reduce();
        match red.den.iter().next() {
            Some((r, m)) => Err((r.clone(), *m)),
            None => Ok(red.num),
        }
    }

    /// Value at `t = value`, or `None` when it is a genuine pole.
    pub fn evaluate(&self, value: &Rational) -> Option<C> {
        let f = if self.den.contains_key(value) { self.reduce() } else { self.clone() };
        if f.den.contains_key(value) {
            return None;
        }
        let mut d = rat(1);
        for (r, m) in &f.den {
            d *= crate::rational::rat_pow(&(value - r), *m);
        }
        Some(f.eval_numerator(value).scale(&(rat(1) / d)))
    }

    pub fn derivative(&self) -> Self {
        let dn: Vec<C> = self
            .num
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c.scale(&rat(k as i64)))
            .collect();
        if self.den.is_empty() {
            return Self::polynomial(dn);
        }
        let roots: BTreeMap<Rational, u32> = self.den.keys().map(|r| (r.clone(), 1)).collect();
        let rp = roots_poly(&roots);
        let mut s = vec![rat(0)];
        for (r, m) in &self.den {
            let mut others = roots.clone();
            others.remove(r);
            let term: Vec<Rational> = roots_poly(&others).iter().map(|c| c * rat(*m as i64)).collect();
            if s.len() < term.len() {
                s.resize(term.len(), rat(0));
            }
            for (k, c) in term.into_iter().enumerate() {
                s[k] += c;
            }
        }
        let a = mul_by_scalar_poly(&dn, &rp);
        let b = mul_by_scalar_poly(&self.num, &s);
        let num = poly_sub(&a, &b);
        let den = self.den.iter().map(|(r, m)| (r.clone(), m + 1)).collect();
        Self::new(num, den)
    }

    /// Partial-fraction decomposition against an allowed pole list.
    pub fn partial_fractions(
        &self,
        poles: &[(Rational, u32)],
    ) -> Result<PartialFractions<C>, RatFuncError> {
        let f = self.reduce();
        for (r, m) in &f.den {
            let allowed = poles.iter().find(|(p, _)| p == r).map(|(_, k)| *k).unwrap_or(0);
            if *m > allowed {
                return Err(RatFuncError::UnlistedPole { point: r.clone(), order: *m });
            }
        }
        let d = roots_poly(&f.den);
        let (quotient, _) = divide_monic(&f.num, &d);
        let mut terms = BTreeMap::new();
        for (r, m) in &f.den {
            let mut rest = f.den.clone();
            rest.remove(r);
            let q = taylor_shift(&roots_poly(&rest), r);
            let m = *m as usize;
            let mut inv = vec![rat(0); m];
            inv[0] = rat(1) / &q[0];
            for k in 1..m {
                let mut acc = rat(0);
                for i in 1..=k.min(q.len() - 1) {
                    acc += &q[i] * &inv[k - i];
                }
                inv[k] = -acc * &inv[0];
            }
            let shifted = taylor_shift(&f.num, r);
            for j in 0..m {
                let mut g = C::zero();
                for i in 0..=j {
                    if i < shifted.len() && !is_zero(&inv[j - i]) {
                        g = g.add(&shifted[i].scale(&inv[j - i]));
                    }
                }
                if !g.is_zero() {
                    terms.insert((r.clone(), (m - j) as u32), g);
                }
            }
        }
        let mut polynomial = quotient;
        trim(&mut polynomial);
        Ok(PartialFractions { polynomial, terms })
    }

    /// Largest pole order at `r` after cancellation.
    pub fn pole_order(&self, r: &Rational) -> u32 {
        self.reduce().den.get(r).copied().unwrap_or(0)
    }

    pub fn display_in(&self, var: &str) -> String
    where
        C: fmt::Display,
    {
        let mut s = String::new();
        let mut first = true;
        for (k, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                s.push_str(" + ");
            }
            first = false;
            match k {
                0 => s.push_str(&format!("({c})")),
                1 => s.push_str(&format!("({c})*{var}")),
                _ => s.push_str(&format!("({c})*{var}^{k}")),
            }
        }
        if first {
            s.push('0');
        }
        if !self.den.is_empty() {
            let factors: Vec<String> = self
                .den
                .iter()
                .map(|(r, m)| {
                    let base = if is_zero(r) {
                        var.to_string()
                    } else if r.is_negative() {
                        format!("({var} + {})", -r.clone())
                    } else {
                        format!("({var} - {r})")
                    };
                    if *m == 1 { base } else { format!("{base}^{m}") }
                })
                .collect();
            s = format!("[{s}] / [{}]", factors.join("*"));
        }
        s
    }
}

fn divide_linear<C: Ring>(num: &[C], r: &Rational) -> Vec<C> {
    let n = num.len();
    if n <= 1 {
        return Vec::new();
    }
    let mut q = vec![C::zero(); n - 1];
    q[n - 2] = num[n - 1].clone();
    for k in (1..n - 1).rev() {
        q[k - 1] = num[k].add(&q[k].scale(r));
    }
    q
}

/// Long division by a monic scalar polynomial; returns (quotient, remainder).
fn divide_monic<C: Ring>(num: &[C], d: &[Rational]) -> (Vec<C>, Vec<C>) {
    let dd = d.len() - 1;
    if num.len() <= dd {
        return (Vec::new(), num.to_vec());
    }
    let mut rem = num.to_vec();
    let mut q = vec![C::zero(); num.len() - dd];
    for k in (0..q.len()).rev() {
        let lead = rem[k + dd].clone();
        if lead.is_zero() {
            continue;
        }
        for (j, c) in d.iter().enumerate() {
            if !is_zero(c) {
                rem[k + j] = rem[k + j].sub(&lead.scale(c));
            }
        }
        q[k] = lead;
    }
    rem.truncate(dd);
    (q, rem)
}

fn poly_add<C: Ring>(a: &[C], b: &[C]) -> Vec<C> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|k| match (a.get(k), b.get(k)) {
            (Some(x), Some(y)) => x.add(y),
            (Some(x), None) => x.clone(),
            (None, Some(y)) => y.clone(),
            (None, None) => unreachable!(),
        })
        .collect()
}

fn poly_sub<C: Ring>(a: &[C], b: &[C]) -> Vec<C> {
    let nb: Vec<C> = b.iter().map(Ring::neg).collect();
    poly_add(a, &nb)
}

fn poly_mul<C: Ring>(a: &[C], b: &[C]) -> Vec<C> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![C::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] = out[i + j].add(&x.mul(y));
            }
        }
    }
    out
}

impl<C: Ring> Ring for RatFunc<C> {
    fn zero() -> Self {
        RatFunc { num: Vec::new(), den: BTreeMap::new() }
    }
    fn one() -> Self {
        Self::constant(C::one())
    }
    fn is_zero(&self) -> bool {
        self.num.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let mut den = self.den.clone();
        for (r, m) in &other.den {
            let e = den.entry(r.clone()).or_insert(0);
            *e = (*e).max(*m);
        }
        let lift = |f: &Self| -> Vec<C> {
            let missing: BTreeMap<Rational, u32> = den
                .iter()
                .map(|(r, m)| (r.clone(), m - f.den.get(r).copied().unwrap_or(0)))
                .filter(|(_, m)| *m > 0)
                .collect();
            if missing.is_empty() {
                f.num.clone()
            } else {
                mul_by_scalar_poly(&f.num, &roots_poly(&missing))
            }
        };
        Self::new(poly_add(&lift(self), &lift(other)), den)
    }
    fn neg(&self) -> Self {
        RatFunc { num: self.num.iter().map(Ring::neg).collect(), den: self.den.clone() }
    }
    fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut den = self.den.clone();
        for (r, m) in &other.den {
            *den.entry(r.clone()).or_insert(0) += m;
        }
        Self::new(poly_mul(&self.num, &other.num), den)
    }
    fn scale(&self, c: &Rational) -> Self {
        if is_zero(c) {
            return Self::zero();
        }
        RatFunc { num: self.num.iter().map(|x| x.scale(c)).collect(), den: self.den.clone() }
    }
    fn is_central(&self) -> bool {
        self.num.iter().all(Ring::is_central)
    }
}

impl<C: Ring> PartialEq for RatFunc<C> {
    fn eq(&self, other: &Self) -> bool {
        self.equals(other)
    }
}

impl<C: Ring + fmt::Display> fmt::Display for RatFunc<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_in("t"))
    }
}

/// Result of [`RatFunc::partial_fractions`]: `f = polynomial + Σ terms[(r,k)] / (t - r)^k`.
#[derive(Debug, Clone)]
pub struct PartialFractions<C> {
    pub polynomial: Vec<C>,
    pub terms: BTreeMap<(Rational, u32), C>,
}

impl<C: Ring> PartialFractions<C> {
    pub fn recombine(&self) -> RatFunc<C> {
        let mut acc = RatFunc::polynomial(self.polynomial.clone());
        for ((r, k), c) in &self.terms {
            acc = acc.add(&RatFunc::pole(c.clone(), r, *k));
        }
        acc
    }

    /// Every nonzero coefficient, polynomial part first.
    pub fn coefficients(&self) -> Vec<C> {
        self.polynomial
            .iter()
            .filter(|c| !c.is_zero())
            .cloned()
            .chain(self.terms.values().cloned())
            .collect()
    }
}

impl RatFunc<Rational> {
    /// Multiplicative inverse. The numerator must split into rational linear factors.
    pub fn invert(&self) -> Result<Self, RatFuncError> {
        if self.is_zero() {
            return Err(RatFuncError::ZeroInverse);
        }
        let (lead, roots) = split_over_q(&self.num).ok_or(RatFuncError::NotSplit)?;
        let num = roots_poly(&self.den).into_iter().map(|c| c / &lead).collect();
        Ok(RatFunc::new(num, roots))
    }
}

/// Factors a scalar polynomial as `lead * ∏ (t - r)^m` when all roots are rational.
fn split_over_q(p: &[Rational]) -> Option<(Rational, BTreeMap<Rational, u32>)> {
    let lead = p.last()?.clone();
    let mut rest: Vec<Rational> = p.iter().map(|c| c / &lead).collect();
    let mut roots: BTreeMap<Rational, u32> = BTreeMap::new();
    while rest.len() > 1 && is_zero(&rest[0]) {
        rest.remove(0);
        *roots.entry(rat(0)).or_insert(0) += 1;
    }
    while rest.len() > 1 {
        let lcm = rest.iter().fold(BigInt::from(1), |acc, c| num_integer::Integer::lcm(&acc, c.denom()));
        let ints: Vec<BigInt> = rest.iter().map(|c| (c * Rational::from_integer(lcm.clone())).to_integer()).collect();
        let a0 = ints[0].abs();
        let an = ints[ints.len() - 1].abs();
        let limit = BigInt::from(1u64 << 40);
        if a0 > limit || an > limit {
            return None;
        }
        let mut found = None;
        'search: for p in divisors(&a0) {
            for q in divisors(&an) {
                for sign in [1, -1] {
                    let cand = Rational::new(p.clone() * sign, q.clone());
                    let mut acc = rat(0);
                    for c in rest.iter().rev() {
                        acc = acc * &cand + c;
                    }
                    if is_zero(&acc) {
                        found = Some(cand);
                        break 'search;
                    }
                }
            }
        }
        let r = found?;
        rest = divide_linear(&rest, &r);
        *roots.entry(r).or_insert(0) += 1;
    }
    Some((lead, roots))
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut out = Vec::new();
    let mut d = BigInt::from(1);
    while &d * &d <= *n {
        if (n % &d) == BigInt::from(0) {
            out.push(d.clone());
            let other = n / &d;
            if other != d {
                out.push(other);
            }
        }
        d += 1;
    }
    out
}
