//! The exterior algebra on ψ^a_i, π^a_i with its ℤ₂-graded Poisson bracket.

use crate::poly::write_terms;
use crate::rational::{is_zero, rat, Rational};
use crate::ring::Ring;
use std::collections::BTreeMap;
use std::fmt;

/// Generator index into the 128-bit monomial mask. ψ's occupy bits 0..64, π's bits 64..128,
/// so a, i ≤ 8.
pub fn psi_bit(a: usize, i: usize) -> u32 {
    assert!((1..=8).contains(&a) && (1..=8).contains(&i), "Grassmann index out of range");
    ((a - 1) * 8 + (i - 1)) as u32
}

pub fn pi_bit(a: usize, i: usize) -> u32 {
    64 + psi_bit(a, i)
}

fn is_psi(bit: u32) -> bool {
    bit < 64
}

/// Partner generator under the canonical bracket: ψ^a_i ↔ π^a_i.
fn partner(bit: u32) -> u32 {
    if is_psi(bit) {
        bit + 64
    } else {
        bit - 64
    }
}

/// Sign of concatenating two increasing words into canonical order.
fn merge_sign(m1: u128, m2: u128) -> i64 {
    let mut swaps = 0u32;
    let mut rest = m2;
    while rest != 0 {
        let g = rest.trailing_zeros();
        rest &= rest - 1;
        let above = if g == 127 { 0 } else { m1 >> (g + 1) };
        swaps += above.count_ones();
    }
    if swaps % 2 == 0 {
        1
    } else {
        -1
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GrassmannError {
    #[error("bracket argument is not homogeneous in parity")]
    InhomogeneousInput,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct GrassmannElement {
    terms: BTreeMap<u128, Rational>,
}

impl GrassmannElement {
    pub fn term(mask: u128, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !is_zero(&c) {
            terms.insert(mask, c);
        }
        GrassmannElement { terms }
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(0, c)
    }

    pub fn psi(a: usize, i: usize) -> Self {
        Self::term(1u128 << psi_bit(a, i), rat(1))
    }

    pub fn pi(a: usize, i: usize) -> Self {
        Self::term(1u128 << pi_bit(a, i), rat(1))
    }

    pub fn terms(&self) -> &BTreeMap<u128, Rational> {
        &self.terms
    }

    fn add_term(&mut self, m: u128, c: Rational) {
        if is_zero(&c) {
            return;
        }
        let e = self.terms.entry(m).or_insert_with(|| rat(0));
        *e += c;
        if is_zero(e) {
            self.terms.remove(&m);
        }
    }

    /// `Some(0)` for even, `Some(1)` for odd, `None` for a mixed element. Zero counts as even.
    pub fn parity(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(|m| m.count_ones() % 2);
        let first = it.next().unwrap_or(0);
        it.all(|p| p == first).then_some(first)
    }

    pub fn is_even(&self) -> bool {
        self.parity() == Some(0)
    }

    /// Graded bracket `{u, v}_+` from `{π^a_i, ψ^b_j}_+ = {ψ^b_j, π^a_i}_+ = δ_ij δ_ab`, computed as
    /// `Σ_g (u ∂⃖/∂g)(∂⃗/∂ḡ v)` where ḡ is the canonical partner of g.
    pub fn bracket(&self, other: &Self) -> Result<Self, GrassmannError> {
        if self.parity().is_none() || other.parity().is_none() {
            return Err(GrassmannError::InhomogeneousInput);
        }
        let mut out = GrassmannElement::default();
        for (m1, c1) in &self.terms {
            let mut gens = *m1;
            while gens != 0 {
                let g = gens.trailing_zeros();
                gens &= gens - 1;
                let h = partner(g);
                let rest1 = m1 & !(1u128 << g);
                let right = if (m1 >> g >> 1).count_ones() % 2 == 0 { 1 } else { -1 };
                for (m2, c2) in &other.terms {
                    if m2 & (1u128 << h) == 0 {
                        continue;
                    }
                    let rest2 = m2 & !(1u128 << h);
                    if rest1 & rest2 != 0 {
                        continue;
                    }
                    let left = if (m2 & ((1u128 << h) - 1)).count_ones() % 2 == 0 { 1 } else { -1 };
                    let sign = right * left * merge_sign(rest1, rest2);
                    out.add_term(rest1 | rest2, c1 * c2 * rat(sign));
                }
            }
        }
        Ok(out)
    }
}

impl Ring for GrassmannElement {
    fn zero() -> Self {
        GrassmannElement::default()
    }
    fn one() -> Self {
        GrassmannElement::constant(rat(1))
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
    fn neg(&self) -> Self {
        GrassmannElement { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
    fn mul(&self, other: &Self) -> Self {
        let mut out = GrassmannElement::default();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                if m1 & m2 != 0 {
                    continue;
                }
                out.add_term(m1 | m2, c1 * c2 * rat(merge_sign(*m1, *m2)));
            }
        }
        out
    }
    fn scale(&self, c: &Rational) -> Self {
        if is_zero(c) {
            return GrassmannElement::default();
        }
        GrassmannElement { terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect() }
    }
    fn is_central(&self) -> bool {
        self.is_even()
    }
}

fn monomial_name(mut m: u128) -> String {
    if m == 0 {
        return "1".into();
    }
    let mut parts = Vec::new();
    while m != 0 {
        let g = m.trailing_zeros();
        m &= m - 1;
        let idx = g % 64;
        let kind = if is_psi(g) { "psi" } else { "pi" };
        parts.push(format!("{kind}{}_{}", idx / 8 + 1, idx % 8 + 1));
    }
    parts.join("*")
}

impl fmt::Display for GrassmannElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.terms.iter().map(|(m, c)| (monomial_name(*m), c)))
    }
}
