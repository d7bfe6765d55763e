//! Exact arithmetic on finite sums `Σ qₘ·√m` with rational coefficients
//! and squarefree radicands.
//!
//! Square roots of distinct squarefree integers are linearly independent
//! over the rationals, so the canonical term map decides equality: two
//! values are equal iff their maps are identical, and a value is zero iff
//! its map is empty. Signs of nonzero values are decided by interval
//! evaluation with directed rounding, doubling the working precision
//! until the enclosure excludes zero.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num::bigint::{BigInt, BigUint};
use num::integer::Roots;
use num::{BigRational, One, Signed, Zero};
use thiserror::Error;

use crate::interval::Interval;

/// Arbitrary-precision rational; always stored reduced with a positive
/// denominator.
pub type Rational = BigRational;

/// Trial division bound for squarefree decomposition. Degree products in
/// this crate are at most 61·61 = 3721, so every radicand that reaches
/// the decomposer from graph data factors completely.
const TRIAL_LIMIT: u64 = 3721;

/// Largest cofactor (after trial division) we can still classify: below
/// `TRIAL_LIMIT³` a cofactor with no prime factor ≤ TRIAL_LIMIT is a
/// perfect square, a prime, or a product of two distinct primes.
const COFACTOR_LIMIT: u64 = TRIAL_LIMIT * TRIAL_LIMIT * TRIAL_LIMIT;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RadicalError {
    #[error("argument must be positive, got {0}")]
    NonPositive(i64),
    #[error("radicand {0} is too large to decompose into squarefree form")]
    Undecomposable(u64),
}

/// Writes `v = q²·s` with `s` squarefree; returns `(q, s)`.
///
/// `None` when `v` is too large for the bounded trial division to
/// guarantee a complete decomposition.
pub fn squarefree_decompose(v: u64) -> Option<(u64, u64)> {
    if v == 0 {
        return Some((0, 1));
    }
    let mut rest = v;
    let mut square_root = 1u64;
    let mut squarefree = 1u64;
    let mut p = 2u64;
    while p <= TRIAL_LIMIT && p * p <= rest {
        if rest.is_multiple_of(p) {
            let mut exp = 0u32;
            while rest.is_multiple_of(p) {
                rest /= p;
                exp += 1;
            }
            square_root *= p.pow(exp / 2);
            if exp % 2 == 1 {
                squarefree *= p;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        if rest <= TRIAL_LIMIT {
            // rest is prime (no divisor up to its own square root).
            squarefree *= rest;
        } else {
            let r = rest.sqrt();
            if r * r == rest {
                square_root *= r;
            } else if rest <= COFACTOR_LIMIT {
                // All prime factors of rest exceed TRIAL_LIMIT, it is not
                // a square, and it is below TRIAL_LIMIT³: squarefree.
                squarefree *= rest;
            } else {
                return None;
            }
        }
    }
    Some((square_root, squarefree))
}

/// Canonical exact value `Σ qₘ·√m` over squarefree `m ≥ 1` with nonzero
/// rational coefficients. The rational part is the `m = 1` term.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct RadicalSum {
    terms: BTreeMap<u64, Rational>,
}

impl RadicalSum {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_rational(q: Rational) -> Self {
        let mut s = Self::zero();
        s.add_term(1, q);
        s
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    /// `√k` in canonical form: `k = q²·s` gives `q·√s`.
    pub fn sqrt_integer(k: u64) -> Result<Self, RadicalError> {
        if k == 0 {
            return Ok(Self::zero());
        }
        let (q, s) = squarefree_decompose(k).ok_or(RadicalError::Undecomposable(k))?;
        let mut out = Self::zero();
        out.add_term(s, Rational::from_integer(BigInt::from(q)));
        Ok(out)
    }

    /// `1/√k` in canonical form: `k = q²·s` gives `(1/(q·s))·√s`.
    pub fn inv_sqrt(k: u64) -> Result<Self, RadicalError> {
        if k == 0 {
            return Err(RadicalError::NonPositive(0));
        }
        let (q, s) = squarefree_decompose(k).ok_or(RadicalError::Undecomposable(k))?;
        let mut out = Self::zero();
        out.add_term(s, Rational::new(BigInt::one(), BigInt::from(q * s)));
        Ok(out)
    }

    /// `√x` for a positive rational `x = p/q`: equals `√(p·q)/q`.
    ///
    /// `None` when `p·q` overflows or resists the bounded decomposition.
    pub fn sqrt_rational(x: &Rational) -> Option<Self> {
        if x.is_zero() {
            return Some(Self::zero());
        }
        if x.is_negative() {
            return None;
        }
        let p: u64 = u64::try_from(x.numer()).ok()?;
        let q: u64 = u64::try_from(x.denom()).ok()?;
        let prod = p.checked_mul(q)?;
        let (root, s) = squarefree_decompose(prod)?;
        let mut out = Self::zero();
        out.add_term(s, Rational::new(BigInt::from(root), BigInt::from(q)));
        Some(out)
    }

    /// Linear combination `ca·a + cb·b` in canonical form.
    pub fn combine(a: &Self, b: &Self, ca: &Rational, cb: &Rational) -> Self {
        let mut out = Self::zero();
        for (m, q) in &a.terms {
            out.add_term(*m, ca * q);
        }
        for (m, q) in &b.terms {
            out.add_term(*m, cb * q);
        }
        out
    }

    fn add_term(&mut self, m: u64, q: Rational) {
        if q.is_zero() {
            return;
        }
        debug_assert!(
            squarefree_decompose(m) == Some((1, m)),
            "radicand {m} is not squarefree"
        );
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(q);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += q;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (m, q) in &other.terms {
            self.add_term(*m, q.clone());
        }
    }

    pub fn sub_assign(&mut self, other: &Self) {
        for (m, q) in &other.terms {
            self.add_term(*m, -q.clone());
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero();
        for (m, q) in &self.terms {
            out.add_term(*m, c * q);
        }
        out
    }

    /// Term-by-term product, re-canonicalised. `None` when some product
    /// of radicands exceeds the decomposable range.
    pub fn try_mul(&self, other: &Self) -> Option<Self> {
        let mut out = Self::zero();
        for (ma, qa) in &self.terms {
            for (mb, qb) in &other.terms {
                let prod = ma.checked_mul(*mb)?;
                let (root, s) = squarefree_decompose(prod)?;
                out.add_term(s, qa * qb * Rational::from_integer(BigInt::from(root)));
            }
        }
        Some(out)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `√1`, i.e. the rational part.
    pub fn rational_part(&self) -> Rational {
        self.terms.get(&1).cloned().unwrap_or_else(Rational::zero)
    }

    /// `Some(q)` when the value is the plain rational `q` (no radicals).
    pub fn as_rational(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&1).cloned(),
            _ => None,
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (u64, &Rational)> {
        self.terms.iter().map(|(m, q)| (*m, q))
    }

    /// Exact sign: `0` iff the term map is empty, otherwise ±1 decided by
    /// interval refinement (128 bits, doubled per round). Interval
    /// refinement terminates on every nonzero value because such values
    /// are bounded away from zero.
    pub fn sign(&self) -> i32 {
        if self.terms.is_empty() {
            return 0;
        }
        // A sum of terms with coefficients of one sign has that sign.
        let mut pos = false;
        let mut neg = false;
        for q in self.terms.values() {
            if q.is_positive() {
                pos = true;
            } else {
                neg = true;
            }
        }
        if pos != neg {
            return if pos { 1 } else { -1 };
        }
        let mut prec = 128u32;
        loop {
            let (lo, hi) = self.eval_dyadic(prec);
            if lo.is_positive() {
                return 1;
            }
            if hi.is_negative() {
                return -1;
            }
            prec *= 2;
        }
    }

    /// Certified bounds on `value · 2^prec` as integers. All arithmetic
    /// is integral with directed rounding; no rational normalisation.
    fn eval_dyadic(&self, prec: u32) -> (BigInt, BigInt) {
        use num::Integer;
        let mut lo = BigInt::zero();
        let mut hi = BigInt::zero();
        for (m, q) in &self.terms {
            let a = q.numer();
            let b = q.denom(); // > 0 by representation
            if *m == 1 {
                let scaled: BigInt = a << prec;
                lo += scaled.div_floor(b);
                hi += scaled.div_ceil(b);
                continue;
            }
            let (slo, shi) = sqrt_mantissas(*m, prec);
            if a.is_negative() {
                lo += (a * &shi).div_floor(b);
                hi += (a * &slo).div_ceil(b);
            } else {
                lo += (a * &slo).div_floor(b);
                hi += (a * &shi).div_ceil(b);
            }
        }
        (lo, hi)
    }

    /// Compares two values exactly.
    pub fn cmp_exact(&self, other: &Self) -> std::cmp::Ordering {
        let mut diff = self.clone();
        diff.sub_assign(other);
        match diff.sign() {
            0 => std::cmp::Ordering::Equal,
            s if s > 0 => std::cmp::Ordering::Greater,
            _ => std::cmp::Ordering::Less,
        }
    }

    /// Certified enclosure of the value at roughly `prec` fractional bits.
    pub fn eval_interval(&self, prec: u32) -> Interval {
        let (lo, hi) = self.eval_dyadic(prec);
        let denom = BigInt::one() << prec;
        Interval::new(
            Rational::new(lo, denom.clone()),
            Rational::new(hi, denom),
        )
    }

    /// Decimal rendering, correctly rounded to `digits` fractional
    /// digits (ties, which only arise for rational values, round half to
    /// even).
    pub fn decimal(&self, digits: usize) -> String {
        let pow = BigInt::from(10u32).pow(digits as u32);
        let scaled_units = if let Some(q) = self.as_rational() {
            round_half_even(&(q * Rational::from_integer(pow.clone())))
        } else {
            // Irrational: refine until both endpoints round identically.
            let scale = Rational::from_integer(pow.clone());
            let mut prec = 128u32;
            loop {
                let iv = self.eval_interval(prec);
                let a = round_half_even(&(&iv.lo * &scale));
                let b = round_half_even(&(&iv.hi * &scale));
                if a == b {
                    break a;
                }
                prec *= 2;
            }
        };
        let negative = scaled_units.is_negative();
        let abs = scaled_units.magnitude().clone();
        let (int_part, frac_part) = (
            &abs / pow.magnitude(),
            &abs % pow.magnitude(),
        );
        let mut out = String::new();
        if negative {
            out.push('-');
        }
        out.push_str(&int_part.to_string());
        if digits > 0 {
            out.push('.');
            let frac = frac_part.to_string();
            for _ in frac.len()..digits {
                out.push('0');
            }
            out.push_str(&frac);
        }
        out
    }
}

impl std::ops::Add for &RadicalSum {
    type Output = RadicalSum;
    fn add(self, rhs: &RadicalSum) -> RadicalSum {
        let mut out = self.clone();
        out.add_assign(rhs);
        out
    }
}

impl std::ops::Sub for &RadicalSum {
    type Output = RadicalSum;
    fn sub(self, rhs: &RadicalSum) -> RadicalSum {
        let mut out = self.clone();
        out.sub_assign(rhs);
        out
    }
}

impl std::ops::Neg for &RadicalSum {
    type Output = RadicalSum;
    fn neg(self) -> RadicalSum {
        self.scale(&-Rational::one())
    }
}

impl fmt::Display for RadicalSum {
    /// Renders the exact term map, e.g. `1/2·√1 + 1·√2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, q)) in self.terms.iter().enumerate() {
            if i == 0 {
                write!(f, "{q}·√{m}")?;
            } else if q.is_negative() {
                write!(f, " - {}·√{m}", -q)?;
            } else {
                write!(f, " + {q}·√{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for RadicalSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RadicalSum({self})")
    }
}

/// Rounds a rational to the nearest integer, ties to even.
fn round_half_even(q: &Rational) -> BigInt {
    let floor = q.floor().to_integer();
    let frac = q - Rational::from_integer(floor.clone());
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    match frac.cmp(&half) {
        std::cmp::Ordering::Less => floor,
        std::cmp::Ordering::Greater => floor + 1,
        std::cmp::Ordering::Equal => {
            if (&floor % 2i32).is_zero() {
                floor
            } else {
                floor + 1
            }
        }
    }
}

thread_local! {
    static SQRT_CACHE: RefCell<HashMap<(u64, u32), (BigInt, BigInt)>> =
        RefCell::new(HashMap::new());
}

/// Certified mantissas `slo ≤ √m · 2^prec ≤ shi` with `shi = slo + 1`,
/// cached per thread. Squarefree keys `m ≥ 2` are never perfect squares,
/// so the floor square root is strict and `floor + 1` is a strict upper
/// bound.
fn sqrt_mantissas(m: u64, prec: u32) -> (BigInt, BigInt) {
    SQRT_CACHE.with(|cache| {
        if let Some(pair) = cache.borrow().get(&(m, prec)) {
            return pair.clone();
        }
        let scaled = BigUint::from(m) << (2 * prec);
        let root = scaled.sqrt();
        let lo = BigInt::from(root.clone());
        let hi = BigInt::from(root + BigUint::one());
        cache
            .borrow_mut()
            .insert((m, prec), (lo.clone(), hi.clone()));
        (lo, hi)
    })
}
