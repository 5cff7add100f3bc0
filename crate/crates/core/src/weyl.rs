//! The Weyl algebra on x^a_i, ∂^a_i extended by the canonical pair (z, ∂_z), and the ordered
//! differential-operator algebras U(z)[∂_z] and U(∂_z)[z].

use crate::poly::{write_terms, Monomial, MultiPoly, Var};
use crate::ratfunc::RatFunc;
use crate::rational::{binomial, factorial, is_zero, rat, Rational};
use crate::ring::Ring;
use num_bigint::BigInt;
use smallvec::SmallVec;
use std::collections::BTreeMap;
use std::fmt;
use std::marker::PhantomData;

/// Normal-ordered word `∏ x^α ∂^β · z^a ∂_z^b`: every x left of every ∂, z left of ∂_z.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct WeylMonomial {
    /// (a, i, x-exponent, ∂-exponent), sorted by (a, i), never both exponents zero.
    gens: SmallVec<[(u8, u8, u16, u16); 4]>,
    z: u16,
    dz: u16,
}

impl WeylMonomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn generator(a: usize, i: usize, xe: u16, de: u16) -> Self {
        let mut m = Self::one();
        if xe + de > 0 {
            m.gens.push((a as u8, i as u8, xe, de));
        }
        m
    }

    pub fn spectral(z: u16, dz: u16) -> Self {
        WeylMonomial { gens: SmallVec::new(), z, dz }
    }

    pub fn z_exponent(&self) -> u16 {
        self.z
    }

    pub fn dz_exponent(&self) -> u16 {
        self.dz
    }

    pub fn generators(&self) -> &[(u8, u8, u16, u16)] {
        &self.gens
    }

    /// Bernstein degree: total number of letters.
    pub fn degree(&self) -> u32 {
        self.gens.iter().map(|g| (g.2 + g.3) as u32).sum::<u32>() + (self.z + self.dz) as u32
    }

    /// True when no generator of one monomial has its conjugate in the other, so the two commute.
    fn commutes_with(&self, other: &WeylMonomial) -> bool {
        if (self.dz > 0 && other.z > 0) || (self.z > 0 && other.dz > 0) {
            return false;
        }
        let (mut i, mut j) = (0, 0);
        while let (Some(l), Some(r)) = (self.gens.get(i), other.gens.get(j)) {
            match (l.0, l.1).cmp(&(r.0, r.1)) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    if (l.3 > 0 && r.2 > 0) || (l.2 > 0 && r.3 > 0) {
                        return false;
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        true
    }

    /// Normal-ordered expansion of `self · other` with integer coefficients.
    fn times(&self, other: &WeylMonomial) -> Vec<(WeylMonomial, BigInt)> {
        let mut acc: Vec<(WeylMonomial, BigInt)> = vec![(WeylMonomial::one(), BigInt::from(1))];
        let (mut i, mut j) = (0, 0);
        loop {
            let (key, left, right) = match (self.gens.get(i), other.gens.get(j)) {
                (None, None) => break,
                (Some(l), None) => {
                    i += 1;
                    ((l.0, l.1), (l.2, l.3), (0, 0))
                }
                (None, Some(r)) => {
                    j += 1;
                    ((r.0, r.1), (0, 0), (r.2, r.3))
                }
                (Some(l), Some(r)) => match (l.0, l.1).cmp(&(r.0, r.1)) {
                    std::cmp::Ordering::Less => {
                        i += 1;
                        ((l.0, l.1), (l.2, l.3), (0, 0))
                    }
                    std::cmp::Ordering::Greater => {
                        j += 1;
                        ((r.0, r.1), (0, 0), (r.2, r.3))
                    }
                    std::cmp::Ordering::Equal => {
                        i += 1;
                        j += 1;
                        ((l.0, l.1), (l.2, l.3), (r.2, r.3))
                    }
                },
            };
            let options = reorder(left, right);
            let mut next = Vec::with_capacity(acc.len() * options.len());
            for (m, c) in &acc {
                for ((xe, de), k) in &options {
                    let mut m2 = m.clone();
                    if xe + de > 0 {
                        m2.gens.push((key.0, key.1, *xe, *de));
                    }
                    next.push((m2, c * k));
                }
            }
            acc = next;
        }
        let options = reorder((self.z, self.dz), (other.z, other.dz));
        let mut out = Vec::with_capacity(acc.len() * options.len());
        for (m, c) in acc {
            for ((ze, dze), k) in &options {
                let mut m2 = m.clone();
                m2.z = *ze;
                m2.dz = *dze;
                out.push((m2, &c * k));
            }
        }
        out
    }
}

/// `x^α ∂^β · x^γ ∂^δ = Σ_k k!·C(β,k)·C(γ,k) x^{α+γ-k} ∂^{β+δ-k}`.
fn reorder(left: (u16, u16), right: (u16, u16)) -> Vec<((u16, u16), BigInt)> {
    let (alpha, beta) = left;
    let (gamma, delta) = right;
    (0..=beta.min(gamma))
        .map(|k| {
            let c = factorial(k as u32) * binomial(beta as u32, k as u32) * binomial(gamma as u32, k as u32);
            ((alpha + gamma - k, beta + delta - k), c)
        })
        .collect()
}

impl fmt::Display for WeylMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        let pw = |name: String, e: u16| if e == 1 { name } else { format!("{name}^{e}") };
        for &(a, i, xe, _) in &self.gens {
            if xe > 0 {
                parts.push(pw(format!("x{a}_{i}"), xe));
            }
        }
        for &(a, i, _, de) in &self.gens {
            if de > 0 {
                parts.push(pw(format!("d{a}_{i}"), de));
            }
        }
        if self.z > 0 {
            parts.push(pw("z".into(), self.z));
        }
        if self.dz > 0 {
            parts.push(pw("dz".into(), self.dz));
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

/// Element of the Weyl algebra as a sparse sum of normal-ordered monomials.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct WeylElement {
    terms: BTreeMap<WeylMonomial, Rational>,
}

impl WeylElement {
    pub fn term(m: WeylMonomial, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !is_zero(&c) {
            terms.insert(m, c);
        }
        WeylElement { terms }
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(WeylMonomial::one(), c)
    }

    pub fn x(a: usize, i: usize) -> Self {
        Self::term(WeylMonomial::generator(a, i, 1, 0), rat(1))
    }

    pub fn d(a: usize, i: usize) -> Self {
        Self::term(WeylMonomial::generator(a, i, 0, 1), rat(1))
    }

    pub fn z() -> Self {
        Self::term(WeylMonomial::spectral(1, 0), rat(1))
    }

    pub fn dz() -> Self {
        Self::term(WeylMonomial::spectral(0, 1), rat(1))
    }

    pub fn terms(&self) -> &BTreeMap<WeylMonomial, Rational> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, m: WeylMonomial, c: &Rational) {
        if is_zero(c) {
            return;
        }
        let e = self.terms.entry(m).or_insert_with(|| rat(0));
        *e += c;
        if is_zero(e) {
            self.terms.retain(|_, v| !is_zero(v));
        }
    }

    /// Classical symbol: x → x, ∂ → p, z → z, ∂_z → λ, dropping the ordering.
    pub fn symbol(&self) -> MultiPoly {
        let mut out = MultiPoly::default();
        for (m, c) in &self.terms {
            let mut pairs: Vec<(Var, u32)> = Vec::new();
            for &(a, i, xe, de) in &m.gens {
                pairs.push((Var::X(a, i), xe as u32));
                pairs.push((Var::P(a, i), de as u32));
            }
            pairs.push((Var::Z, m.z as u32));
            pairs.push((Var::Lambda, m.dz as u32));
            out.add_term(Monomial::from_pairs(pairs), c);
        }
        out
    }

    /// Normal-ordered quantisation of a commutative polynomial (inverse of [`Self::symbol`]).
    pub fn from_symbol(p: &MultiPoly) -> Self {
        let mut out = WeylElement::default();
        for (m, c) in p.terms() {
            let mut word = WeylElement::constant(rat(1));
            let mut ds = WeylElement::constant(rat(1));
            for &(v, e) in m.factors() {
                let g = match v {
                    Var::X(a, i) => WeylElement::x(a as usize, i as usize),
                    Var::P(a, i) => WeylElement::d(a as usize, i as usize),
                    Var::Z => WeylElement::z(),
                    Var::Lambda => WeylElement::dz(),
                    _ => panic!("variable {v} has no Weyl counterpart"),
                };
                match v {
                    Var::P(..) | Var::Lambda => ds = ds.mul(&g.pow(e)),
                    _ => word = word.mul(&g.pow(e)),
                }
            }
            out = out.add(&word.mul(&ds).scale(c));
        }
        out
    }

    /// Largest Bernstein degree among the terms.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(WeylMonomial::degree).max()
    }

    pub fn has_spectral_part(&self) -> bool {
        self.terms.keys().any(|m| m.z > 0 || m.dz > 0)
    }
}

impl Ring for WeylElement {
    fn zero() -> Self {
        WeylElement::default()
    }
    fn one() -> Self {
        WeylElement::constant(rat(1))
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        out
    }
    fn neg(&self) -> Self {
        WeylElement { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
    fn mul(&self, other: &Self) -> Self {
        let mut acc: BTreeMap<WeylMonomial, Rational> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let c = c1 * c2;
                for (m, k) in m1.times(m2) {
                    *acc.entry(m).or_insert_with(|| rat(0)) += &c * Rational::from_integer(k);
                }
            }
        }
        acc.retain(|_, c| !is_zero(c));
        WeylElement { terms: acc }
    }
    fn scale(&self, c: &Rational) -> Self {
        if is_zero(c) {
            return WeylElement::default();
        }
        WeylElement { terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect() }
    }
    fn is_central(&self) -> bool {
        self.terms.keys().all(|m| *m == WeylMonomial::one())
    }
    fn commutator(&self, other: &Self) -> Self {
        let mut acc: BTreeMap<WeylMonomial, Rational> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                if m1.commutes_with(m2) {
                    continue;
                }
                let c = c1 * c2;
                let mut diff: BTreeMap<WeylMonomial, BigInt> = BTreeMap::new();
                for (m, k) in m1.times(m2) {
                    *diff.entry(m).or_default() += k;
                }
                for (m, k) in m2.times(m1) {
                    *diff.entry(m).or_default() -= k;
                }
                for (m, k) in diff {
                    if !num_traits::Zero::is_zero(&k) {
                        *acc.entry(m).or_insert_with(|| rat(0)) += &c * Rational::from_integer(k);
                    }
                }
            }
        }
        acc.retain(|_, c| !is_zero(c));
        WeylElement { terms: acc }
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.terms.iter().map(|(m, c)| (m.to_string(), c)))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WeylError {
    #[error("residual pole at {point} of order {order}: operator is not polynomial")]
    ResidualPole { point: Rational, order: u32 },
}

/// Which spectral letter sits on the left of each term.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// Terms `f(z) ∂_z^k`: coefficients rational in z.
    ZLeft,
    /// Terms `g(∂_z) z^k`: coefficients rational in ∂_z.
    DzLeft,
}

pub trait SideTag: Clone + fmt::Debug + Send + Sync + 'static {
    const SIDE: Side;
}

#[derive(Debug, Clone, Copy)]
pub struct ZLeft;
#[derive(Debug, Clone, Copy)]
pub struct DzLeft;

impl SideTag for ZLeft {
    const SIDE: Side = Side::ZLeft;
}
impl SideTag for DzLeft {
    const SIDE: Side = Side::DzLeft;
}

/// Ore polynomial `Σ_k c_k(t) D^k` over rational functions with Weyl coefficients, where
/// (t, D) = (z, ∂_z) in z-left form and (∂_z, z) in ∂_z-left form.
#[derive(Debug, Clone)]
pub struct OrderedDiffOp<S: SideTag> {
    terms: BTreeMap<u32, RatFunc<WeylElement>>,
    side: PhantomData<S>,
}

impl<S: SideTag> OrderedDiffOp<S> {
    fn from_terms(mut terms: BTreeMap<u32, RatFunc<WeylElement>>) -> Self {
        terms.retain(|_, c| !c.is_zero());
        OrderedDiffOp { terms, side: PhantomData }
    }

    /// `[D, t]`: +1 for (∂_z, z), −1 for (z, ∂_z).
    fn shift_sign() -> i64 {
        match S::SIDE {
            Side::ZLeft => 1,
            Side::DzLeft => -1,
        }
    }

    pub fn coefficient(f: RatFunc<WeylElement>) -> Self {
        Self::from_terms(BTreeMap::from([(0, f)]))
    }

    pub fn weyl(w: WeylElement) -> Self {
        assert!(!w.has_spectral_part(), "use from_weyl for elements containing z or dz");
        Self::coefficient(RatFunc::constant(w))
    }

    pub fn scalar(f: &RatFunc<Rational>) -> Self {
        Self::coefficient(RatFunc::from_scalar(f))
    }

    /// The ordering letter `D` (∂_z in z-left form, z in ∂_z-left form).
    pub fn shift() -> Self {
        Self::from_terms(BTreeMap::from([(1, RatFunc::one())]))
    }

    pub fn z() -> Self {
        match S::SIDE {
            Side::ZLeft => Self::coefficient(RatFunc::var()),
            Side::DzLeft => Self::shift(),
        }
    }

    pub fn dz() -> Self {
        match S::SIDE {
            Side::ZLeft => Self::shift(),
            Side::DzLeft => Self::coefficient(RatFunc::var()),
        }
    }

    pub fn side(&self) -> Side {
        S::SIDE
    }

    pub fn terms(&self) -> &BTreeMap<u32, RatFunc<WeylElement>> {
        &self.terms
    }

    /// Rewrites a normal-ordered Weyl element (z left of ∂_z) into this side's ordering.
    pub fn from_weyl(w: &WeylElement) -> Self {
        let mut terms: BTreeMap<u32, RatFunc<WeylElement>> = BTreeMap::new();
        for (m, c) in w.terms() {
            let mut core = m.clone();
            core.z = 0;
            core.dz = 0;
            let coeff = WeylElement::term(core, c.clone());
            let (a, b) = (m.z as u32, m.dz as u32);
            match S::SIDE {
                Side::ZLeft => {
                    let f = RatFunc::monomial(coeff, a as usize);
                    let e = terms.entry(b).or_insert_with(RatFunc::zero);
                    *e = e.add(&f);
                }
                Side::DzLeft => {
                    // z^a ∂_z^b = Σ_j (−1)^j j! C(a,j) C(b,j) ∂_z^{b−j} z^{a−j}
                    for j in 0..=a.min(b) {
                        let k = factorial(j) * binomial(a, j) * binomial(b, j);
                        let sign = if j % 2 == 0 { 1 } else { -1 };
                        let scaled = coeff.scale(&(Rational::from_integer(k) * rat(sign)));
                        let f = RatFunc::monomial(scaled, (b - j) as usize);
                        let e = terms.entry(a - j).or_insert_with(RatFunc::zero);
                        *e = e.add(&f);
                    }
                }
            }
        }
        Self::from_terms(terms)
    }

    /// Converts to a normal-ordered Weyl element once every denominator has cancelled.
    pub fn to_polynomial(&self) -> Result<WeylElement, WeylError> {
        let mut out = WeylElement::zero();
        for (k, f) in &self.terms {
            let coeffs = f
                .to_polynomial()
                .map_err(|(point, order)| WeylError::ResidualPole { point, order })?;
            for (j, c) in coeffs.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let word = match S::SIDE {
                    Side::ZLeft => WeylElement::term(WeylMonomial::spectral(j as u16, *k as u16), rat(1)),
                    Side::DzLeft => WeylElement::dz().pow(j as u32).mul(&WeylElement::z().pow(*k)),
                };
                out = out.add(&c.mul(&word));
            }
        }
        Ok(out)
    }

    pub fn order(&self) -> Option<u32> {
        self.terms.keys().next_back().copied()
    }
}

impl<S: SideTag> Ring for OrderedDiffOp<S> {
    fn zero() -> Self {
        Self::from_terms(BTreeMap::new())
    }
    fn one() -> Self {
        Self::coefficient(RatFunc::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (k, c) in &other.terms {
            let e = terms.entry(*k).or_insert_with(RatFunc::zero);
            *e = e.add(c);
        }
        Self::from_terms(terms)
    }
    fn neg(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(k, c)| (*k, c.neg())).collect())
    }
    fn mul(&self, other: &Self) -> Self {
        let s = Self::shift_sign();
        let mut terms: BTreeMap<u32, RatFunc<WeylElement>> = BTreeMap::new();
        for (l, g) in &other.terms {
            let mut deriv = g.clone();
            let max_k = self.terms.keys().next_back().copied().unwrap_or(0);
            let mut derivs = vec![g.clone()];
            for _ in 0..max_k {
                deriv = deriv.derivative();
                derivs.push(deriv.clone());
            }
            for (k, f) in &self.terms {
                for j in 0..=*k {
                    let dj = &derivs[j as usize];
                    if dj.is_zero() {
                        continue;
                    }
                    let sign = if j % 2 == 1 && s < 0 { -1 } else { 1 };
                    let c = Rational::from_integer(binomial(*k, j)) * rat(sign);
                    let prod = f.mul(dj).scale(&c);
                    let e = terms.entry(k - j + l).or_insert_with(RatFunc::zero);
                    *e = e.add(&prod);
                }
            }
        }
        Self::from_terms(terms)
    }
    fn scale(&self, c: &Rational) -> Self {
        Self::from_terms(self.terms.iter().map(|(k, f)| (*k, f.scale(c))).collect())
    }
    fn is_central(&self) -> bool {
        self.terms.keys().all(|k| *k == 0)
            && self.terms.values().all(|f| f.is_polynomial() && f.numerator().len() <= 1 && f.is_central())
    }
}

impl<S: SideTag> fmt::Display for OrderedDiffOp<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (t, d) = match S::SIDE {
            Side::ZLeft => ("z", "dz"),
            Side::DzLeft => ("dz", "z"),
        };
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(k, c)| match k {
                0 => format!("{{{}}}", c.display_in(t)),
                1 => format!("{{{}}}*{d}", c.display_in(t)),
                _ => format!("{{{}}}*{d}^{k}", c.display_in(t)),
            })
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> WeylElement {
        WeylElement::x(1, 1)
    }
    fn d() -> WeylElement {
        WeylElement::d(1, 1)
    }
    fn c(n: i64) -> WeylElement {
        WeylElement::constant(rat(n))
    }

    #[test]
    fn d_times_x() {
        assert_eq!(d().mul(&x()), x().mul(&d()).add(&c(1)));
        assert_eq!(x().mul(&d()).to_string(), "x1_1*d1_1");
    }

    #[test]
    fn d2_times_x2_by_iteration() {
        // ∂x = x∂ + 1 applied repeatedly: ∂²x² = x²∂² + 4x∂ + 2
        let lhs = d().pow(2).mul(&x().pow(2));
        let rhs = x().pow(2).mul(&d().pow(2)).add(&x().mul(&d()).scale(&rat(4))).add(&c(2));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn commutators() {
        assert_eq!(d().commutator(&x()), c(1));
        assert!(x().commutator(&WeylElement::x(2, 1)).is_zero());
        assert_eq!(x().mul(&d()).commutator(&x()), x());
        assert!(d().commutator(&WeylElement::x(1, 2)).is_zero());
        assert_eq!(WeylElement::dz().commutator(&WeylElement::z()), c(1));
        assert!(WeylElement::dz().commutator(&x()).is_zero());
    }

    #[test]
    fn symbol_round_trip() {
        let w = x().mul(&d()).mul(&WeylElement::z()).add(&WeylElement::dz().scale(&rat(3)));
        assert_eq!(WeylElement::from_symbol(&w.symbol()), w);
    }

    type Zl = OrderedDiffOp<ZLeft>;
    type Dl = OrderedDiffOp<DzLeft>;

    #[test]
    fn dz_times_pole() {
        let pole = Zl::coefficient(RatFunc::pole(c(1), &rat(1), 1));
        let lhs = Zl::dz().mul(&pole);
        let rhs = pole.mul(&Zl::dz()).sub(&Zl::coefficient(RatFunc::pole(c(1), &rat(1), 2)));
        assert!(lhs.equals(&rhs));
    }

    #[test]
    fn z_times_z() {
        assert!(Zl::z().mul(&Zl::z()).equals(&Zl::coefficient(RatFunc::monomial(c(1), 2))));
        assert!(Dl::z().mul(&Dl::z()).to_polynomial().unwrap().equals(&WeylElement::z().pow(2)));
    }

    #[test]
    fn single_commutation_z_left() {
        // (∂_z − λ)(z − z₁) = (z − z₁)∂_z − λ(z − z₁) + 1
        let lam = rat(5);
        let z1 = rat(2);
        let a = Zl::dz().sub(&Zl::weyl(WeylElement::constant(lam.clone())));
        let b = Zl::coefficient(RatFunc::linear(&z1));
        let got = a.mul(&b).to_polynomial().unwrap();
        let zz = WeylElement::z().sub(&WeylElement::constant(z1));
        let want = zz.mul(&WeylElement::dz()).sub(&zz.scale(&lam)).add(&c(1));
        assert_eq!(got, want);
    }

    #[test]
    fn dz_left_rule() {
        // z·g(∂_z) = g(∂_z)·z − g'(∂_z)
        let g = Dl::coefficient(RatFunc::pole(c(1), &rat(3), 1));
        let lhs = Dl::z().mul(&g);
        let rhs = g.mul(&Dl::z()).add(&Dl::coefficient(RatFunc::pole(c(1), &rat(3), 2)));
        assert!(lhs.equals(&rhs));
    }

    #[test]
    fn to_polynomial_cases() {
        let f = Zl::coefficient(RatFunc::linear(&rat(1)).mul(&RatFunc::pole(x(), &rat(1), 1)));
        assert_eq!(f.to_polynomial().unwrap(), x());
        let g = Zl::coefficient(RatFunc::pole(c(1), &rat(1), 1));
        assert_eq!(g.to_polynomial().unwrap_err(), WeylError::ResidualPole { point: rat(1), order: 1 });
    }

    #[test]
    fn side_round_trip() {
        let w = WeylElement::z()
            .pow(2)
            .mul(&WeylElement::dz().pow(3))
            .mul(&x())
            .add(&WeylElement::z().mul(&WeylElement::dz()));
        let dl = Dl::from_weyl(&w).to_polynomial().unwrap();
        assert_eq!(dl, w);
        assert_eq!(Zl::from_weyl(&dl).to_polynomial().unwrap(), w);
    }
}
