//! Certified enclosures with exact rational endpoints.
//!
//! Addition, subtraction and multiplication of rational intervals are
//! exact; only square roots widen an interval, by at most `2^-prec`.
//! Every combinator here preserves the enclosure property, so a strict
//! sign read off an interval is a proof.

use num::bigint::{BigInt, BigUint};
use num::{One, Signed, Zero};

use crate::radical::Rational;

/// Closed interval `[lo, hi]` with rational endpoints.
#[derive(Clone, Debug, PartialEq)]
pub struct Interval {
    pub lo: Rational,
    pub hi: Rational,
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational) -> Self {
        debug_assert!(lo <= hi, "inverted interval");
        Self { lo, hi }
    }

    pub fn point(v: Rational) -> Self {
        Self {
            lo: v.clone(),
            hi: v,
        }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::point(Rational::from_integer(BigInt::from(n)))
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(&self.lo + &other.lo, &self.hi + &other.hi)
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::new(&self.lo - &other.hi, &self.hi - &other.lo)
    }

    pub fn neg(&self) -> Self {
        Self::new(-self.hi.clone(), -self.lo.clone())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let candidates = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let lo = candidates.iter().min().unwrap().clone();
        let hi = candidates.iter().max().unwrap().clone();
        Self::new(lo, hi)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_negative() {
            Self::new(c * &self.hi, c * &self.lo)
        } else {
            Self::new(c * &self.lo, c * &self.hi)
        }
    }

    /// Certified positive: every value in the interval is `> 0`.
    pub fn is_certainly_positive(&self) -> bool {
        self.lo.is_positive()
    }

    /// Certified negative: every value in the interval is `< 0`.
    pub fn is_certainly_negative(&self) -> bool {
        self.hi.is_negative()
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    /// Certified `self < other` (every point of self below every point of
    /// other).
    pub fn certainly_below(&self, other: &Self) -> bool {
        self.hi < other.lo
    }
}

/// Lower bound on `√r` at `prec` fractional bits (`r ≥ 0`).
pub fn sqrt_lower(r: &Rational, prec: u32) -> Rational {
    assert!(!r.is_negative(), "square root of a negative rational");
    if r.is_zero() {
        return Rational::zero();
    }
    // floor(√(num·4^p / den)) / 2^p ≤ √r: the integer floor division
    // under the root only lowers the value.
    let num: BigUint = r.numer().magnitude() << (2 * prec);
    let den = r.denom().magnitude();
    let root = (num / den).sqrt();
    Rational::new(BigInt::from(root), BigInt::one() << prec)
}

/// Upper bound on `√r` at `prec` fractional bits (`r ≥ 0`).
pub fn sqrt_upper(r: &Rational, prec: u32) -> Rational {
    assert!(!r.is_negative(), "square root of a negative rational");
    if r.is_zero() {
        return Rational::zero();
    }
    let num: BigUint = r.numer().magnitude() << (2 * prec);
    let den = r.denom().magnitude();
    // Ceiling division then ceiling square root.
    let q = (&num + den - BigUint::one()) / den;
    let root = q.sqrt();
    let root = if &root * &root == q { root } else { root + BigUint::one() };
    Rational::new(BigInt::from(root), BigInt::one() << prec)
}

/// Certified enclosure of `√r` for a nonnegative rational.
pub fn sqrt_interval(r: &Rational, prec: u32) -> Interval {
    Interval::new(sqrt_lower(r, prec), sqrt_upper(r, prec))
}

/// Certified enclosure of `√2` (used pervasively by the bound checks).
pub fn sqrt2(prec: u32) -> Interval {
    sqrt_interval(&Rational::from_integer(BigInt::from(2)), prec)
}
