use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::rational::{q, qi, Rational};
use super::series::PuiseuxSeries;
use super::twovar::TwoVarCharacter;
use crate::error::{Error, Result};

/// `η(q) = q^{1/24} ∏_{n≥1} (1 − qⁿ)` to relative order `q_order`.
pub fn eta(q_order: &Rational) -> Result<PuiseuxSeries> {
    if q_order <= &Rational::zero() {
        return Err(Error::Domain("q_order must be positive".into()));
    }
    let m = q_order.ceil().to_integer().to_usize().unwrap_or(0);
    let mut poly = vec![BigInt::zero(); m.max(1)];
    poly[0] = BigInt::from(1);
    for n in 1..m {
        for j in (n..m).rev() {
            let t = poly[j - n].clone();
            poly[j] -= t;
        }
    }
    let lead = q(1, 24);
    let terms = poly
        .into_iter()
        .enumerate()
        .map(|(j, c)| (&lead + qi(j as i64), Rational::from_integer(c)));
    Ok(PuiseuxSeries::from_terms(terms, Some(&lead + q_order)))
}

/// `1/η(q)` to relative order `q_order`.
pub fn eta_inverse(q_order: &Rational) -> Result<PuiseuxSeries> {
    eta(q_order)?.inverse()
}

/// `δ(z²) = Σ_{n∈ℤ} z^{2n}` restricted to a finite window.
pub fn formal_delta(window: (Rational, Rational)) -> Result<TwoVarCharacter> {
    if window.0 > window.1 {
        return Err(Error::Domain("empty window".into()));
    }
    let mut ch = TwoVarCharacter::new(Rational::zero(), window);
    for z in ch.lattice_points() {
        ch.insert(z, PuiseuxSeries::one())?;
    }
    Ok(ch)
}
