//! The coefficient-ring abstraction shared by polynomials, rational functions and matrices.

use crate::rational::Rational;
use std::fmt::Debug;

/// An associative unital algebra over the rationals.
pub trait Ring: Clone + Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn scale(&self, c: &Rational) -> Self;

    /// True when the element commutes with every element of the ring.
    fn is_central(&self) -> bool;

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    fn from_rational(c: &Rational) -> Self {
        Self::one().scale(c)
    }

    fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    fn equals(&self, other: &Self) -> bool {
        self.sub(other).is_zero()
    }

    fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }
}

impl Ring for Rational {
    fn zero() -> Self {
        <Rational as num_traits::Zero>::zero()
    }
    fn one() -> Self {
        <Rational as num_traits::One>::one()
    }
    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, c: &Rational) -> Self {
        self * c
    }
    fn is_central(&self) -> bool {
        true
    }
}
