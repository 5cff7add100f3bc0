//! Sparse commutative polynomials over the rationals in a fixed global variable table.

use crate::rational::{is_zero, rat, Rational};
use crate::ring::Ring;
use serde::Serialize;
use smallvec::SmallVec;
use std::collections::BTreeMap;
use std::fmt;

/// A commuting indeterminate. The derived order is the global lexicographic table:
/// x's, then p's, then z, λ, µ, then auxiliary symbols.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Var {
    /// x^a_i with (a, i) 1-based.
    X(u8, u8),
    /// p^a_i, canonically conjugate to x^a_i.
    P(u8, u8),
    Z,
    Lambda,
    Mu,
    Sym(u16),
}

impl Var {
    pub fn x(a: usize, i: usize) -> Var {
        Var::X(a as u8, i as u8)
    }

    pub fn p(a: usize, i: usize) -> Var {
        Var::P(a as u8, i as u8)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::X(a, i) => write!(f, "x{a}_{i}"),
            Var::P(a, i) => write!(f, "p{a}_{i}"),
            Var::Z => write!(f, "z"),
            Var::Lambda => write!(f, "lam"),
            Var::Mu => write!(f, "mu"),
            Var::Sym(k) => write!(f, "s{k}"),
        }
    }
}

/// Exponent vector stored sparsely as (variable, exponent > 0), sorted by variable.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial(SmallVec<[(Var, u32); 4]>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(SmallVec::new())
    }

    pub fn var(v: Var, e: u32) -> Self {
        if e == 0 {
            Monomial::one()
        } else {
            Monomial(smallvec::smallvec![(v, e)])
        }
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (Var, u32)>) -> Self {
        let mut acc = Monomial::one();
        for (v, e) in pairs {
            acc = acc.mul(&Monomial::var(v, e));
        }
        acc
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn factors(&self) -> &[(Var, u32)] {
        &self.0
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.0
            .binary_search_by(|(w, _)| w.cmp(&v))
            .map(|k| self.0[k].1)
            .unwrap_or(0)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = SmallVec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            let (a, b) = (self.0[i], other.0[j]);
            match a.0.cmp(&b.0) {
                std::cmp::Ordering::Less => {
                    out.push(a);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((a.0, a.1 + b.1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Monomial(out)
    }

    /// Removes `v` entirely, returning its former exponent.
    pub fn without(&self, v: Var) -> (Monomial, u32) {
        let e = self.exponent(v);
        let rest = self.0.iter().copied().filter(|(w, _)| *w != v).collect();
        (Monomial(rest), e)
    }

    fn with_exponent(&self, v: Var, e: u32) -> Monomial {
        let (rest, _) = self.without(v);
        rest.mul(&Monomial::var(v, e))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (k, (v, e)) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Sparse polynomial: no stored zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn constant(c: Rational) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !is_zero(&c) {
            terms.insert(m, c);
        }
        MultiPoly { terms }
    }

    pub fn var(v: Var) -> Self {
        Self::term(Monomial::var(v, 1), rat(1))
    }

    pub fn x(a: usize, i: usize) -> Self {
        Self::var(Var::x(a, i))
    }

    pub fn p(a: usize, i: usize) -> Self {
        Self::var(Var::p(a, i))
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Rational> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(|| rat(0))
    }

    pub fn constant_term(&self) -> Rational {
        self.coefficient(&Monomial::one())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exponent(v)).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, m: Monomial, c: &Rational) {
        if is_zero(c) {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if is_zero(e.get()) {
                    e.remove();
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &MultiPoly) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c);
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> MultiPoly {
        if is_zero(c) {
            return MultiPoly::default();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(k, v)| (k.mul(m), v * c)).collect(),
        }
    }

    /// Formal partial derivative.
    pub fn derivative(&self, v: Var) -> MultiPoly {
        let mut out = MultiPoly::default();
        for (m, c) in &self.terms {
            let e = m.exponent(v);
            if e > 0 {
                out.add_term(m.with_exponent(v, e - 1), &(c * rat(e as i64)));
            }
        }
        out
    }

    /// Substitutes a rational value for one variable.
    pub fn substitute(&self, v: Var, value: &Rational) -> MultiPoly {
        let mut out = MultiPoly::default();
        for (m, c) in &self.terms {
            let (rest, e) = m.without(v);
            out.add_term(rest, &(c * crate::rational::rat_pow(value, e)));
        }
        out
    }

    /// Substitutes a polynomial for one variable.
    pub fn compose(&self, v: Var, value: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::default();
        for (m, c) in &self.terms {
            let (rest, e) = m.without(v);
            out.add_assign(&value.pow(e).mul_monomial(&rest, c));
        }
        out
    }

    /// Groups terms by the exponent of `v`.
    pub fn collect(&self, v: Var) -> BTreeMap<u32, MultiPoly> {
        let mut out: BTreeMap<u32, MultiPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let (rest, e) = m.without(v);
            out.entry(e).or_default().add_term(rest, c);
        }
        out
    }

    pub fn variables(&self) -> Vec<Var> {
        let mut vs: Vec<Var> = self
            .terms
            .keys()
            .flat_map(|m| m.factors().iter().map(|(v, _)| *v))
            .collect();
        vs.sort();
        vs.dedup();
        vs
    }
}

impl Ring for MultiPoly {
    fn zero() -> Self {
        MultiPoly::default()
    }
    fn one() -> Self {
        MultiPoly::constant(rat(1))
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        let (big, small) = if self.len() >= other.len() { (self, other) } else { (other, self) };
        let mut out = big.clone();
        out.add_assign(small);
        out
    }
    fn neg(&self) -> Self {
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
    fn mul(&self, other: &Self) -> Self {
        let mut out = MultiPoly::default();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), &(c1 * c2));
            }
        }
        out
    }
    fn scale(&self, c: &Rational) -> Self {
        self.mul_monomial(&Monomial::one(), c)
    }
    fn is_central(&self) -> bool {
        true
    }
}

impl From<Rational> for MultiPoly {
    fn from(c: Rational) -> Self {
        MultiPoly::constant(c)
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.terms.iter().map(|(m, c)| (m.to_string(), c)))
    }
}

/// Shared "c*m + c*m" rendering for sparse term maps.
pub(crate) fn write_terms<'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (String, &'a Rational)>,
) -> fmt::Result {
    let mut first = true;
    for (m, c) in terms {
        let neg = c < &rat(0);
        let mag = if neg { -c.clone() } else { c.clone() };
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if neg { "-" } else { "+" })?;
        }
        first = false;
        if m == "1" {
            write!(f, "{mag}")?;
        } else if mag == rat(1) {
            write!(f, "{m}")?;
        } else {
            write!(f, "{mag}*{m}")?;
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}
