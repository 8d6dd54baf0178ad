use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact rational number, always reduced with positive denominator.
pub type Rational = BigRational;

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn qi(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => {
            let n: BigInt = s.parse().map_err(|_| bad())?;
            Ok(Rational::from_integer(n))
        }
    }
}

/// Renders as `p/q`, or as `p` when the denominator is one.
pub fn fmt_rational(x: &Rational) -> String {
    x.to_string()
}

pub fn is_integer(x: &Rational) -> bool {
    x.denom().is_one()
}

pub fn to_i64(x: &Rational) -> Option<i64> {
    if is_integer(x) {
        x.numer().to_i64()
    } else {
        None
    }
}

/// Representative of `x` modulo `m` in `[0, m)`.
pub fn rem_euclid(x: &Rational, m: &Rational) -> Rational {
    let k = (x / m).floor();
    x - k * m
}

/// Smallest `y >= x` with `y ≡ class (mod 1)`.
pub fn ceil_in_class(x: &Rational, class: &Rational) -> Rational {
    let frac = rem_euclid(class, &Rational::one());
    let base = (x - &frac).ceil();
    base + frac
}

/// Bit size used as the pivot complexity measure in elimination.
pub fn complexity(x: &Rational) -> u64 {
    x.numer().abs().bits() + x.denom().bits()
}

pub fn lcm_u64(a: u64, b: u64) -> u64 {
    num_integer::lcm(a, b)
}

pub fn denom_u64(x: &Rational) -> Option<u64> {
    x.denom().to_u64()
}

pub fn sign(x: &Rational) -> i32 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}
