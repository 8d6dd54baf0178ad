//! Admissible levels `k = −2 + u/v`, central charges, conformal weights and the
//! derived level pairs used by the coset and duality constructions.

use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{domain, Result};
use crate::exact::{q, qi, Rational};

/// Admissible level `k = −2 + u/v` with `u ≥ 2`, `v ≥ 1`, `gcd(u, v) = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct AdmissibleLevel {
    pub u: i64,
    pub v: i64,
}

pub fn level_from_uv(u: i64, v: i64) -> Result<AdmissibleLevel> {
    if u < 2 {
        return domain(format!("u = {u} must be at least 2"));
    }
    if v < 1 {
        return domain(format!("v = {v} must be at least 1"));
    }
    if u.gcd(&v) != 1 {
        return domain(format!("u = {u} and v = {v} are not coprime"));
    }
    Ok(AdmissibleLevel { u, v })
}

impl AdmissibleLevel {
    pub fn new(u: i64, v: i64) -> Result<Self> {
        level_from_uv(u, v)
    }

    /// `t = u/v = k + 2`
    pub fn t(&self) -> Rational {
        q(self.u, self.v)
    }

    pub fn k(&self) -> Rational {
        self.t() - qi(2)
    }

    pub fn c_vir(&self) -> Rational {
        c_vir(&self.t())
    }

    /// Sugawara central charge `3k/(k+2)`.
    pub fn c_sug(&self) -> Rational {
        qi(3) * self.k() / self.t()
    }

    /// Integral admissible levels are accepted but most operations need `v ≥ 2`.
    pub fn is_integral(&self) -> bool {
        self.v == 1
    }

    pub fn require_nonintegral(&self) -> Result<()> {
        if self.is_integral() {
            return domain(format!("level ({}, {}) is integral; v ≥ 2 required", self.u, self.v));
        }
        Ok(())
    }

    /// Minimal-model weight lattice bound `24·4uv` for q-exponents at this level.
    pub fn exponent_bound(&self) -> u64 {
        (96 * self.u * self.v) as u64
    }
}

impl std::fmt::Display for AdmissibleLevel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.u, self.v)
    }
}

/// `c(t) = 13 − 6t − 6/t`
pub fn c_vir(t: &Rational) -> Rational {
    qi(13) - qi(6) * t - qi(6) / t
}

/// `h_{r,s}(t) = (s²−1)t/4 − (rs−1)/2 + (r²−1)/(4t)`
pub fn virasoro_h(r: i64, s: i64, t: &Rational) -> Result<Rational> {
    if t.is_zero() {
        return domain("t must be nonzero");
    }
    if r < 1 || s < 1 {
        return domain(format!("r = {r}, s = {s} must be positive"));
    }
    Ok(qi(s * s - 1) * t / qi(4) - q(r * s - 1, 2) + qi(r * r - 1) / (qi(4) * t))
}

/// `(λ_{r,s}, Δ_{r,s})` with `λ_{r,s} = r − 1 − ts` and `Δ_{r,s} = ((vr−us)² − v²)/(4uv)`.
pub fn affine_weights(r: i64, s: i64, lvl: &AdmissibleLevel) -> Result<(Rational, Rational)> {
    let (u, v) = (lvl.u, lvl.v);
    if r < 1 || r > u - 1 || s < 1 || s > v - 1 {
        return domain(format!("(r, s) = ({r}, {s}) outside 1..{} × 1..{}", u - 1, v - 1));
    }
    let lam = qi(r - 1) - lvl.t() * qi(s);
    let x = v * r - u * s;
    let delta = q(x * x - v * v, 4 * u * v);
    Ok((lam, delta))
}

/// `λ_{r,s}` without the range check on `s` (used for label exclusions).
pub fn lambda_rs(r: i64, s: i64, lvl: &AdmissibleLevel) -> Rational {
    qi(r - 1) - lvl.t() * qi(s)
}

/// Level pair linked by `(ℓ+2)(k_w+1) = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualPair {
    pub l_side: AdmissibleLevel,
    pub k_w: Rational,
    pub c_n2: Rational,
}

pub fn dual_levels(lvl: &AdmissibleLevel) -> Result<DualPair> {
    let l = lvl.k();
    let l2 = &l + qi(2);
    if l2.is_zero() {
        return domain("critical level ℓ = −2");
    }
    Ok(DualPair { l_side: *lvl, k_w: Rational::one() / &l2 - Rational::one(), c_n2: qi(3) * &l / &l2 })
}

/// Dual level of a rational `ℓ`: `k_w = 1/(ℓ+2) − 1`.
pub fn dual_of(l: &Rational) -> Result<Rational> {
    let l2 = l + qi(2);
    if l2.is_zero() {
        return domain("critical level ℓ = −2");
    }
    Ok(Rational::one() / l2 - Rational::one())
}

/// Recovers `ℓ` from `k_w`: `ℓ = 1/(k_w+1) − 2`.
pub fn undual_of(k_w: &Rational) -> Result<Rational> {
    let k1 = k_w + Rational::one();
    if k1.is_zero() {
        return domain("k_w = −1 has no dual");
    }
    Ok(Rational::one() / k1 - qi(2))
}

/// N=2 central charge `3ℓ/(ℓ+2)`.
pub fn c_n2(l: &Rational) -> Result<Rational> {
    let l2 = l + qi(2);
    if l2.is_zero() {
        return domain("critical level ℓ = −2");
    }
    Ok(qi(3) * l / l2)
}

/// The levels `k`, `k+1` and `k' = (k+3)/(k+2) − 2` of the coset construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetTriple {
    pub base: AdmissibleLevel,
    pub shifted: AdmissibleLevel,
    /// Minimal-model pair `(u+v, u)`.
    pub minimal: (i64, i64),
}

impl CosetTriple {
    pub fn k_prime(&self) -> Rational {
        q(self.minimal.0, self.minimal.1) - qi(2)
    }
}

pub fn coset_triple(lvl: &AdmissibleLevel) -> Result<CosetTriple> {
    let shifted = level_from_uv(lvl.u + lvl.v, lvl.v)?;
    Ok(CosetTriple { base: *lvl, shifted, minimal: (lvl.u + lvl.v, lvl.u) })
}

/// `v ∈ {2, 3}` and `u ≡ −1 (mod v)`.
pub fn ribbon_known(lvl: &AdmissibleLevel) -> bool {
    (lvl.v == 2 || lvl.v == 3) && (lvl.u + 1).rem_euclid(lvl.v) == 0
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples_from_levels() {
        let l = level_from_uv(3, 2).unwrap();
        assert_eq!(l.k(), q(-1, 2));
        assert_eq!(l.t(), q(3, 2));
        assert_eq!(l.c_vir(), qi(0));
        assert_eq!(l.c_sug(), qi(-1));
        let ising = level_from_uv(4, 3).unwrap();
        assert_eq!(ising.c_vir(), q(1, 2));
        let integral = level_from_uv(2, 1).unwrap();
        assert_eq!(integral.k(), qi(0));
        assert!(integral.is_integral());
        assert!(level_from_uv(4, 2).is_err());
        assert!(level_from_uv(1, 2).is_err());
    }

    #[test]
    fn weights() {
        assert_eq!(virasoro_h(1, 1, &q(7, 3)).unwrap(), qi(0));
        assert_eq!(virasoro_h(2, 2, &q(4, 3)).unwrap(), q(1, 16));
        assert_eq!(virasoro_h(1, 2, &q(3, 2)).unwrap(), q(5, 8));
        assert!(virasoro_h(1, 1, &qi(0)).is_err());
        let l = level_from_uv(3, 2).unwrap();
        assert_eq!(affine_weights(1, 1, &l).unwrap(), (q(-3, 2), q(-1, 8)));
        let l53 = level_from_uv(5, 3).unwrap();
        assert_eq!(affine_weights(1, 1, &l53).unwrap().1, q(-1, 12));
        assert!(affine_weights(3, 1, &l).is_err());
    }

    #[test]
    fn derived_levels() {
        let l = level_from_uv(3, 2).unwrap();
        let d = dual_levels(&l).unwrap();
        assert_eq!(d.k_w, q(-1, 3));
        assert_eq!(d.c_n2, qi(-1));
        assert_eq!(undual_of(&d.k_w).unwrap(), l.k());
        let ct = coset_triple(&l).unwrap();
        assert_eq!((ct.shifted.u, ct.shifted.v), (5, 2));
        assert_eq!(ct.minimal, (5, 3));
        assert_eq!(ct.shifted.k(), l.k() + qi(1));
        assert_eq!(ct.k_prime() + qi(2), q(5, 3));
    }

    #[test]
    fn ribbon() {
        assert!(ribbon_known(&level_from_uv(3, 2).unwrap()));
        assert!(ribbon_known(&level_from_uv(5, 3).unwrap()));
        assert!(!ribbon_known(&level_from_uv(4, 3).unwrap()));
        assert!(!ribbon_known(&level_from_uv(7, 4).unwrap()));
    }
}
