use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use super::label::{Kind, ModuleLabel};
use super::normal::normal_form;
use crate::error::{domain, Error, Result};
use crate::exact::Rational;
use crate::levels::AdmissibleLevel;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BlockId {
    C { r: i64, n: i64 },
    Eblock { n: i64, r: i64, s: i64, lambda: Rational },
}

impl fmt::Display for BlockId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BlockId::C { r, n } => write!(f, "C[{r},{n}]"),
            BlockId::Eblock { n, r, s, lambda } => write!(f, "E^{n}[{r},{s};{lambda}]"),
        }
    }
}

impl Serialize for BlockId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

fn phi(lvl: &AdmissibleLevel, r: i64, l: i64) -> i64 {
    if l.is_even() {
        r
    } else {
        lvl.u - r
    }
}

/// The simple `L^{r,n}_M` of the block `C_{r,n}`, with `M = −ℓ(v−1) − m`, `0 ≤ m ≤ v−2`:
/// `σ^{−n−ℓv−m}(D⁺_{φ_{r,ℓ}, v−1−m})`, before normal form.
pub fn block_member_raw(lvl: &AdmissibleLevel, r: i64, n: i64, position: i64) -> Result<ModuleLabel> {
    lvl.require_nonintegral()?;
    if r < 1 || r >= lvl.u || n < 0 || n >= lvl.v {
        return domain(format!("block C[{r},{n}] does not exist at level {lvl}"));
    }
    let width = lvl.v - 1;
    let (l, m) = (-position).div_mod_floor(&width);
    ModuleLabel::dplus(*lvl, -n - l * lvl.v - m, phi(lvl, r, l), lvl.v - 1 - m)
}

pub fn block_member(lvl: &AdmissibleLevel, r: i64, n: i64, position: i64) -> Result<ModuleLabel> {
    Ok(normal_form(&block_member_raw(lvl, r, n, position)?))
}

/// Block and position of a simple module.
///
/// Relaxed simples sit alone in `E^n_{r,s,λ}`. For the others the defining
/// parametrization is searched over a window of positions around the expected one,
/// widened until a match appears.
pub fn block_of(x: &ModuleLabel) -> Result<(BlockId, i64)> {
    if !x.kind.is_simple() {
        return domain(format!("{x} is not simple"));
    }
    let lvl = x.level;
    lvl.require_nonintegral()?;
    let nf = normal_form(x);
    if let Kind::E { lambda, r, s } = &nf.kind {
        return Ok((BlockId::Eblock { n: nf.flow, r: *r, s: *s, lambda: lambda.clone() }, 0));
    }
    // The flow of L^{r,n}_M is about M·v/(v−1).
    let centre = nf.flow * (lvl.v - 1) / lvl.v;
    let mut radius = 2 * lvl.v;
    for _ in 0..8 {
        let mut hits = Vec::new();
        for position in centre - radius..=centre + radius {
            for r in 1..lvl.u {
                for n in 0..lvl.v {
                    if block_member(&lvl, r, n, position)? == nf {
                        hits.push((BlockId::C { r, n }, position));
                    }
                }
            }
        }
        match hits.len() {
            0 => radius *= 2,
            1 => return Ok(hits.pop().unwrap()),
            _ => {
                return Err(Error::Domain(format!(
                    "{x} matches {} block positions; parametrization is not injective",
                    hits.len()
                )))
            }
        }
    }
    domain(format!("no block position found for {x}"))
}
