use num_traits::Zero;

use super::label::{Kind, ModuleLabel};
use crate::error::{domain, Error, Result};
use crate::exact::rational::{denom_u64, lcm_u64};
use crate::exact::{eta_inverse, q, qi, Rational, TwoVarCharacter};
use crate::levels::AdmissibleLevel;
use crate::virasoro::{minimal_character, MinimalLabel};

/// q-order (relative to the leading exponent) and z half-width of a character.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Truncation {
    pub q_order: Rational,
    pub z_halfwidth: i64,
}

impl Default for Truncation {
    fn default() -> Self {
        Truncation { q_order: qi(8), z_halfwidth: 8 }
    }
}

impl Truncation {
    pub fn new(q_order: Rational, z_halfwidth: i64) -> Result<Self> {
        if q_order <= Rational::zero() || z_halfwidth < 0 {
            return domain("truncation needs a positive q-order and a non-negative z-window");
        }
        Ok(Truncation { q_order, z_halfwidth })
    }
}

/// Which character to compute.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CharacterTarget {
    Module(ModuleLabel),
    /// Integrable level-one module `L¹_a`, `a ∈ {1, 2}`.
    LevelOne(i64),
}

/// Exponent lattice large enough for relaxed characters of `λ` at `lvl` and their flows.
pub fn relaxed_bound(lvl: &AdmissibleLevel, lambda: &Rational) -> u64 {
    lcm_u64(lvl.exponent_bound(), 2 * denom_u64(lambda).unwrap_or(1))
}

/// `z^{−k+2λ}` anchor of an unflowed relaxed module.
pub fn relaxed_anchor(lvl: &AdmissibleLevel, lambda: &Rational) -> Rational {
    -lvl.k() + qi(2) * lambda
}

/// Unflowed `z^{−k+2λ} ch[M_{r,s}](q) δ(z²)/η(q)²` on an explicit z-window.
pub fn relaxed_character_on(
    lvl: &AdmissibleLevel,
    lambda: &Rational,
    r: i64,
    s: i64,
    q_order: &Rational,
    window: (Rational, Rational),
) -> Result<TwoVarCharacter> {
    let minimal = minimal_character(&MinimalLabel::new(lvl.u, lvl.v, r, s)?, q_order)?;
    let inv = eta_inverse(q_order)?;
    let bound = relaxed_bound(lvl, lambda);
    let f = minimal.mul(&inv.mul(&inv)?.with_bound(lvl.exponent_bound())?)?.with_bound(bound)?;
    let mut ch = TwoVarCharacter::new(relaxed_anchor(lvl, lambda), window);
    for z in ch.lattice_points() {
        ch.insert(z, f.clone())?;
    }
    Ok(ch)
}

/// Character of a (flowed) relaxed module, window centred on its anchor.
pub fn relaxed_character(x: &ModuleLabel, trunc: &Truncation) -> Result<TwoVarCharacter> {
    let Kind::E { lambda, r, s } = &x.kind else {
        return domain(format!("{x}: characters are provided for relaxed modules only"));
    };
    let lvl = x.level;
    let anchor = relaxed_anchor(&lvl, lambda);
    let w = qi(trunc.z_halfwidth);
    let ch = relaxed_character_on(&lvl, lambda, *r, *s, &trunc.q_order, (&anchor - &w, &anchor + &w))?;
    flow_character(&ch, x.flow, &lvl.k())
}

/// `Σ_n z^{2n} q^{n²} / η(q)` over `n ∈ ℤ` (`a = 1`) or `n ∈ ℤ + 1/2` (`a = 2`).
///
/// Every z-term shares the absolute cutoff `lead + q_order`; the window holds all
/// terms that start below it.
pub fn level1_character(a: i64, q_order: &Rational, bound: u64) -> Result<TwoVarCharacter> {
    if a != 1 && a != 2 {
        return domain(format!("level-one label a = {a} must be 1 or 2"));
    }
    if !bound.is_multiple_of(24) {
        return Err(Error::Lattice(format!("bound {bound} is not a multiple of 24")));
    }
    let half = q(a - 1, 2);
    let min_sq = &half * &half;
    let cutoff = &min_sq - q(1, 24) + q_order;
    let limit = &min_sq + q_order;
    let inv = eta_inverse(q_order)?;
    let mut n_max = half.clone();
    while &(&n_max + qi(1)) * &(&n_max + qi(1)) < limit {
        n_max += qi(1);
    }
    let mut ch = TwoVarCharacter::new(qi(a - 1), (-qi(2) * &n_max, qi(2) * &n_max));
    let mut n = -n_max.clone();
    while n <= n_max {
        let term = inv.shift(&(&n * &n))?.truncate(&cutoff).with_bound(bound)?;
        ch.insert(qi(2) * &n, term)?;
        n += qi(1);
    }
    Ok(ch)
}

/// `z^{kℓ} q^{kℓ²/4} ch(z q^{ℓ/2}, q)`.
pub fn flow_character(ch: &TwoVarCharacter, l: i64, k: &Rational) -> Result<TwoVarCharacter> {
    if ch.lattice_points().is_empty() {
        return Err(Error::Truncation("character window holds no z-exponent".into()));
    }
    ch.flow(l, k)
}

pub fn character(target: &CharacterTarget, trunc: &Truncation) -> Result<TwoVarCharacter> {
    match target {
        CharacterTarget::Module(x) => relaxed_character(x, trunc),
        CharacterTarget::LevelOne(a) => level1_character(*a, &trunc.q_order, 96),
    }
}

/// Leading q-exponent of each stored z-term.
pub fn leading_exponents(ch: &TwoVarCharacter) -> Vec<(Rational, Option<Rational>)> {
    ch.terms().map(|(z, f)| (z.clone(), f.leading_exponent().cloned())).collect()
}
