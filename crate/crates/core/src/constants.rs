//! Closed-form numeric objects behind the degree-growth argument: the
//! lower-bound function `h`, the auxiliary decay function `φ`, the
//! geometric sequence `b`, the maximum-degree bound in terms of block
//! length, and the final gap inequality.
//!
//! Everything is exact where the radicand decomposes; otherwise values
//! come back as certified interval enclosures whose endpoints are exact
//! rationals. The constants 2.9 and 7.4 are stored as 29/10 and 37/5 —
//! no floating point enters any verdict.

use num::{BigInt, One, Signed};
use thiserror::Error;

use crate::interval::{sqrt_interval, Interval};
use crate::radical::{RadicalSum, Rational};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConstantsError {
    #[error("argument must be positive")]
    NonPositive,
    #[error("block length must be at least 7, got {0}")]
    BlockTooShort(u64),
}

fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// `h(x) = (3/2)·√x − (3 − √2)/√x + 1/2`, evaluated exactly when the
/// radicand decomposes, as a certified enclosure otherwise.
#[derive(Clone, Debug, PartialEq)]
pub enum HValue {
    Exact(RadicalSum),
    Enclosure(Interval),
}

impl HValue {
    /// Certified enclosure regardless of representation.
    pub fn interval(&self, prec: u32) -> Interval {
        match self {
            HValue::Exact(v) => v.eval_interval(prec),
            HValue::Enclosure(iv) => iv.clone(),
        }
    }
}

/// `h(x)` for a positive rational `x`.
///
/// The exact route writes `√x = √(pq)/q` and `1/√x = √(pq)/p` for
/// `x = p/q`, so it needs the squarefree decomposition of `p·q`; when
/// that is out of reach (huge arguments) the result is a certified
/// enclosure at `prec` bits.
pub fn h(x: &Rational, prec: u32) -> Result<HValue, ConstantsError> {
    if !x.is_positive() {
        return Err(ConstantsError::NonPositive);
    }
    if let Some(sqrt_x) = RadicalSum::sqrt_rational(x) {
        let inv_x = x.recip();
        if let Some(inv_sqrt_x) = RadicalSum::sqrt_rational(&inv_x) {
            let mut out = sqrt_x.scale(&rat(3, 2));
            // −(3 − √2)/√x = (√2 − 3)·(1/√x)
            let mut factor = RadicalSum::sqrt_integer(2).unwrap();
            factor.sub_assign(&RadicalSum::from_integer(3));
            out.add_assign(&factor.try_mul(&inv_sqrt_x).expect("small radicands"));
            out.add_assign(&RadicalSum::from_rational(rat(1, 2)));
            return Ok(HValue::Exact(out));
        }
    }
    Ok(HValue::Enclosure(h_interval(x, prec)))
}

/// Certified enclosure of `h(x)`; works for arbitrarily large rationals.
pub fn h_interval(x: &Rational, prec: u32) -> Interval {
    let sqrt_x = sqrt_interval(x, prec);
    let inv_sqrt_x = sqrt_interval(&x.recip(), prec);
    let sqrt_two = sqrt_interval(&rat(2, 1), prec);
    let three_minus_sqrt2 = Interval::from_integer(3).sub(&sqrt_two);
    sqrt_x
        .scale(&rat(3, 2))
        .sub(&three_minus_sqrt2.mul(&inv_sqrt_x))
        .add(&Interval::point(rat(1, 2)))
}

/// Certified enclosure of `φ(x) = 1/√x + (2/x)·(1/√3 − 1/√x)` for
/// positive rational `x`.
pub fn phi(x: &Rational, prec: u32) -> Result<Interval, ConstantsError> {
    if !x.is_positive() {
        return Err(ConstantsError::NonPositive);
    }
    let inv_sqrt_x = sqrt_interval(&x.recip(), prec);
    let inv_sqrt_3 = sqrt_interval(&rat(1, 3), prec);
    let two_over_x = Interval::point(rat(2, 1) * x.recip());
    Ok(inv_sqrt_x.add(&two_over_x.mul(&inv_sqrt_3.sub(&inv_sqrt_x))))
}

/// The sequence `b₀ = 9`, `bᵢ = (29/10)(bᵢ₋₁ − 1)`, exactly.
pub fn b_seq(i: u32) -> Rational {
    let mut b = rat(9, 1);
    for _ in 0..i {
        b = (b - Rational::one()) * rat(29, 10);
    }
    b
}

/// Closed form `bᵢ = 29/19 + (142/19)·(29/10)ⁱ`, exactly.
pub fn b_closed_form(i: u32) -> Rational {
    let ratio = rat(29, 10);
    let mut pow = Rational::one();
    for _ in 0..i {
        pow *= &ratio;
    }
    rat(29, 19) + rat(142, 19) * pow
}

/// Maximum-degree lower bound `3/2 + (37/5)·(29/10)^⌈(k−6)/4⌉` for block
/// length `k ≥ 7`, exactly.
pub fn delta_bound(k: u64) -> Result<Rational, ConstantsError> {
    if k < 7 {
        return Err(ConstantsError::BlockTooShort(k));
    }
    let exponent = (k - 6).div_ceil(4);
    let ratio = rat(29, 10);
    let mut pow = Rational::one();
    for _ in 0..exponent {
        pow *= &ratio;
    }
    Ok(rat(3, 2) + rat(37, 5) * pow)
}

/// Certified enclosure of `h(delta_bound(k)) − (k+2)/2 − (√2 − 1)`;
/// positive for every admissible `k`, showing the degree growth beats
/// the diameter term.
pub fn final_gap(k: u64, prec: u32) -> Result<Interval, ConstantsError> {
    let bound = delta_bound(k)?;
    let hk = h_interval(&bound, prec);
    let sqrt_two = sqrt_interval(&rat(2, 1), prec);
    let k_term = Rational::new(BigInt::from(k + 2), BigInt::from(2));
    Ok(hk
        .sub(&Interval::point(k_term))
        .sub(&sqrt_two)
        .add(&Interval::from_integer(1)))
}
