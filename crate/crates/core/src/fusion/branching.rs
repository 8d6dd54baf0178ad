use std::collections::BTreeMap;

use num_traits::Zero;
use serde_json::{json, Value};

use crate::affine::{level1_character, relaxed_bound, relaxed_character_on, Kind, ModuleLabel};
use crate::error::{domain, Result};
use crate::exact::rational::lcm_u64;
use crate::exact::{q, qi, PuiseuxSeries, Rational, TwoVarCharacter};
use crate::levels::{level_from_uv, AdmissibleLevel};
use crate::virasoro::{minimal_character, MinimalLabel};

/// `1` for odd `n`, `2` for even `n`.
pub fn underline(n: i64) -> i64 {
    if n.rem_euclid(2) == 1 {
        1
    } else {
        2
    }
}

/// Summands `X ⊗ M` with `X` at level `k+1` and `M` a minimal-model module at `k'`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchingDecomposition {
    /// Level-one module `L¹_a` on the left of the decomposition.
    pub level_one: i64,
    pub summands: BTreeMap<(ModuleLabel, MinimalLabel), u32>,
}

impl BranchingDecomposition {
    pub fn to_json(&self) -> Value {
        json!({
            "level_one": self.level_one,
            "summands": self.summands.iter().map(|((x, m), n)| json!({
                "label": x.to_string(),
                "coset": m.to_string(),
                "multiplicity": n,
            })).collect::<Vec<_>>(),
        })
    }
}

/// Level `k' = (k+3)/(k+2) − 2` as the pair `(u+v, u)`.
pub fn coset_pair(lvl: &AdmissibleLevel) -> (i64, i64) {
    (lvl.u + lvl.v, lvl.u)
}

/// Decomposition of `x ⊗ L¹_{a+ℓ}` for `x` at level `k`, with `m + r + s + a` odd.
///
/// `a ∈ {1, 2}` labels the level-one module before flow (`a = 1` is the vacuum).
/// Relaxed summands carry `λ + a/2`.
pub fn branch(x: &ModuleLabel, a: i64) -> Result<BranchingDecomposition> {
    let lvl = x.level;
    lvl.require_nonintegral()?;
    if a != 1 && a != 2 {
        return domain(format!("level-one label a = {a} must be 1 or 2"));
    }
    let up = level_from_uv(lvl.u + lvl.v, lvl.v)?;
    let (cu, cv) = coset_pair(&lvl);
    let r = x.kind.r();
    let Some(s) = x.kind.s() else {
        return domain(format!("{x}: branching of L-kinds is given through their D-presentation"));
    };
    let mut summands = BTreeMap::new();
    for m in 1..lvl.u + lvl.v {
        if (m + r + s + a) % 2 == 0 {
            continue;
        }
        let kind = match &x.kind {
            Kind::E { lambda, .. } => Kind::E { lambda: lambda + q(a, 2), r: m, s },
            other => other.with_r(m),
        };
        let y = ModuleLabel::new(up, x.flow, kind)?;
        summands.insert((y, MinimalLabel::new(cu, cv, m, r)?), 1);
    }
    Ok(BranchingDecomposition { level_one: underline(a + x.flow), summands })
}

/// Image of `x` (level `k+1`, first index 1) under induction by `L_r`.
///
/// With `a ≡ r + s` the parity rule keeps the odd `m`; each summand replaces the
/// first index of `x` by `m` and pairs it with `M_{m,r}` at `k'`. `L[1]` is accepted
/// with the rule of the vacuum coset.
pub fn induct_decompose(r: i64, x: &ModuleLabel) -> Result<BranchingDecomposition> {
    let up = x.level;
    let u = up.u - up.v;
    let base = level_from_uv(u, up.v)
        .map_err(|_| crate::Error::Domain(format!("{x}: level is not of the form k+1 for admissible k")))?;
    base.require_nonintegral()?;
    if r < 1 || r >= u {
        return domain(format!("r = {r} outside 1..{}", u - 1));
    }
    if x.kind.r() != 1 {
        return domain(format!("{x} is outside the subcategory of first index 1"));
    }
    let a = match x.kind.s() {
        Some(s) => (r + s).rem_euclid(2),
        None => r.rem_euclid(2),
    };
    let (cu, cv) = coset_pair(&base);
    let mut summands = BTreeMap::new();
    for m in (1..up.u).filter(|m| m % 2 == 1) {
        let y = ModuleLabel::new(up, x.flow, x.kind.with_r(m))?;
        summands.insert((y, MinimalLabel::new(cu, cv, m, r)?), 1);
    }
    Ok(BranchingDecomposition { level_one: underline(a + x.flow), summands })
}

/// Parameters of the relaxed branching identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchingParams {
    pub level: AdmissibleLevel,
    pub r: i64,
    pub s: i64,
    /// Level-one label before flow, `1` (vacuum) or `2`.
    pub a: i64,
    pub flow: i64,
    pub lambda: Rational,
}

/// Both sides of the identity and their difference, flowed by `ℓ` at level `k+1`.
#[derive(Clone, Debug)]
pub struct BranchingCheck {
    pub lhs: TwoVarCharacter,
    pub rhs: TwoVarCharacter,
    /// `lhs − rhs` on the z-coset of the left side.
    pub residual: TwoVarCharacter,
    /// Relative order every residual term must reach.
    pub q_order: Rational,
    /// Unflowed leading exponent of the left side.
    pub lhs_lead: Rational,
    /// Unflowed leading exponent of each right-hand summand, by `m`.
    pub summand_leads: Vec<(i64, Rational)>,
}

impl BranchingCheck {
    /// Every residual term vanishes and reaches `lead(lhs at z) + q_order`.
    pub fn is_identity(&self) -> bool {
        self.residual.terms().all(|(z, f)| {
            let lead = self.lhs.get(z).and_then(|g| g.leading_exponent()).cloned();
            let enough = match (lead, f.cutoff()) {
                (Some(l), Some(c)) => c >= &(l + &self.q_order),
                (None, _) => true,
                (_, None) => true,
            };
            enough && f.is_zero()
        }) && !self.residual.lattice_points().is_empty()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "identity": self.is_identity(),
            "q_order": crate::exact::fmt_rational(&self.q_order),
            "residual": self.residual.to_json(),
        })
    }
}

/// `ch[σ^ℓ E^k_{λ;r,s}]·ch[σ^ℓ L¹_a] − Σ_m ch[σ^ℓ E^{k+1}_{λ+a/2;m,s}]·ch[M^{k'}_{m,r}]`.
pub fn branching_char_verify(p: &BranchingParams, q_order: &Rational, z_halfwidth: i64) -> Result<BranchingCheck> {
    branching_residual(p, &(&p.lambda + q(p.a, 2)), true, q_order, z_halfwidth)
}

/// The same check with an explicit `λ` on the right and a choice of parity rule
/// (`odd = true` keeps `m + r + s + a` odd).
pub fn branching_residual(
    p: &BranchingParams,
    rhs_lambda: &Rational,
    odd: bool,
    q_order: &Rational,
    z_halfwidth: i64,
) -> Result<BranchingCheck> {
    let lvl = p.level;
    lvl.require_nonintegral()?;
    if q_order <= &Rational::zero() || z_halfwidth < 0 {
        return domain("branching check needs a positive q-order and a non-negative z-window");
    }
    let up = level_from_uv(lvl.u + lvl.v, lvl.v)?;
    let (cu, cv) = coset_pair(&lvl);
    let bound = [relaxed_bound(&lvl, &p.lambda), relaxed_bound(&up, rhs_lambda), (96 * cu * cv) as u64]
        .into_iter()
        .fold(96, lcm_u64);
    let l1 = level1_character(p.a, q_order, 96)?.with_bound(bound)?;
    let reach = l1.window().1.clone();
    let anchor = -lvl.k() + qi(2) * &p.lambda;
    let w = qi(z_halfwidth);
    let wide = (&anchor - &w - &reach, &anchor + &w + &reach);
    let e = relaxed_character_on(&lvl, &p.lambda, p.r, p.s, q_order, wide)?.with_bound(bound)?;
    let lhs = e.mul(&l1)?;
    let lhs_lead = lhs.terms().filter_map(|(_, f)| f.leading_exponent().cloned()).min().unwrap_or_default();

    let window = lhs.window().clone();
    let mut rhs: Option<TwoVarCharacter> = None;
    let mut summand_leads = Vec::new();
    for m in 1..lvl.u + lvl.v {
        if ((m + p.r + p.s + p.a) % 2 == 1) != odd {
            continue;
        }
        let em = relaxed_character_on(&up, rhs_lambda, m, p.s, q_order, window.clone())?.with_bound(bound)?;
        let mm = minimal_character(&MinimalLabel::new(cu, cv, m, p.r)?, q_order)?.with_bound(bound)?;
        let term = em.mul_series(&mm)?;
        if let Some(lead) = term.terms().filter_map(|(_, f)| f.leading_exponent().cloned()).min() {
            summand_leads.push((m, lead));
        }
        rhs = Some(match rhs {
            None => term,
            Some(acc) if acc.coset() == term.coset() => acc.add(&term)?,
            Some(acc) => acc,
        });
    }
    let rhs = rhs.unwrap_or_else(|| TwoVarCharacter::new(lhs.coset().clone(), window.clone()));

    let k1 = up.k();
    let lhs = lhs.flow(p.flow, &k1)?;
    let rhs = rhs.flow(p.flow, &k1)?;
    let residual = if lhs.coset() == rhs.coset() {
        lhs.sub(&rhs)?
    } else {
        lhs.clone()
    };
    Ok(BranchingCheck { lhs, rhs, residual, q_order: q_order.clone(), lhs_lead, summand_leads })
}

/// A single z-term as a plain series, for inspection.
pub fn residual_term(check: &BranchingCheck, z: &Rational) -> Option<PuiseuxSeries> {
    check.residual.get(z).cloned()
}
