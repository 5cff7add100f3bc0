//! Basis elements of the Takiff algebras `gl^D` and their structure constants.

use super::divisor::Divisor;
use crate::rational::{rat, Rational};
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;

/// Location of a generator: a finite divisor point (zero-based index) or infinity.
/// Finite points sort before infinity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Point {
    Finite(usize),
    Infinity,
}

/// `E^{(p)}_{row col, depth}` with one-based row and column. Depth is 1 at infinity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct TakiffGenerator {
    pub point: Point,
    pub depth: usize,
    pub row: usize,
    pub col: usize,
}

impl TakiffGenerator {
    pub fn finite(i: usize, row: usize, col: usize, depth: usize) -> Self {
        TakiffGenerator { point: Point::Finite(i), depth, row, col }
    }

    pub fn infinity(row: usize, col: usize) -> Self {
        TakiffGenerator { point: Point::Infinity, depth: 1, row, col }
    }
}

impl fmt::Display for TakiffGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.point {
            Point::Finite(i) => write!(f, "E[p{}]_{}{},{}", i + 1, self.row, self.col, self.depth),
            Point::Infinity => write!(f, "E[inf]_{}{},1", self.row, self.col),
        }
    }
}

/// Every basis element of `gl_size^D`, ordered by point, depth, then (row, col); infinity last.
pub fn enumerate_generators(size: usize, divisor: &Divisor) -> Vec<TakiffGenerator> {
    let mut out = Vec::new();
    for (i, (_, tau)) in divisor.points().iter().enumerate() {
        for depth in 0..*tau {
            for row in 1..=size {
                for col in 1..=size {
                    out.push(TakiffGenerator::finite(i, row, col, depth));
                }
            }
        }
    }
    for row in 1..=size {
        for col in 1..=size {
            out.push(TakiffGenerator::infinity(row, col));
        }
    }
    out
}

/// `[E_{ab,r}, E_{cd,s}] = δ_ij (δ_bc E_{ad,r+s} − δ_ad E_{cb,r+s})`, truncated at depth τ_i;
/// generators at infinity are central.
pub fn takiff_bracket(g1: &TakiffGenerator, g2: &TakiffGenerator, divisor: &Divisor) -> BTreeMap<TakiffGenerator, Rational> {
    let mut out: BTreeMap<TakiffGenerator, Rational> = BTreeMap::new();
    let (Point::Finite(i), Point::Finite(j)) = (g1.point, g2.point) else {
        return out;
    };
    if i != j {
        return out;
    }
    let depth = g1.depth + g2.depth;
    if depth >= divisor.degree(i) {
        return out;
    }
    let (a, b, c, d) = (g1.row, g1.col, g2.row, g2.col);
    if b == c {
        *out.entry(TakiffGenerator::finite(i, a, d, depth)).or_insert_with(|| rat(0)) += rat(1);
    }
    if a == d {
        *out.entry(TakiffGenerator::finite(i, c, b, depth)).or_insert_with(|| rat(0)) -= rat(1);
    }
    out.retain(|_, v| *v != rat(0));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn structure_constants() {
        let d = Divisor::from_ints(&[(1, 2), (2, 1)]).unwrap();
        let e = |a, b, r| TakiffGenerator::finite(0, a, b, r);
        let br = takiff_bracket(&e(1, 2, 0), &e(2, 1, 0), &d);
        assert_eq!(br, BTreeMap::from([(e(1, 1, 0), rat(1)), (e(2, 2, 0), rat(-1))]));
        let other = TakiffGenerator::finite(1, 2, 1, 0);
        assert!(takiff_bracket(&e(1, 2, 0), &other, &d).is_empty());
        assert!(takiff_bracket(&e(1, 2, 1), &e(2, 1, 1), &d).is_empty());
        assert_eq!(takiff_bracket(&e(1, 2, 1), &e(2, 1, 0), &d).len(), 2);
        assert!(takiff_bracket(&TakiffGenerator::infinity(1, 2), &e(2, 1, 0), &d).is_empty());
    }

    #[test]
    fn enumeration_order() {
        let d = Divisor::from_ints(&[(1, 2)]).unwrap();
        let gens = enumerate_generators(2, &d);
        assert_eq!(gens.len(), 2 * 4 + 4);
        assert!(gens.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(gens.last().unwrap().point, Point::Infinity);
    }
}
