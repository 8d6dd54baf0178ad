use std::collections::BTreeMap;

use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::Serialize;

use super::gram::simple_graded_dims;
use crate::error::{domain, Result};
use crate::exact::{q, qi, PuiseuxSeries, Rational};
use crate::levels::{c_vir, virasoro_h};

/// Minimal-model module `M_{r,s}` of the pair `(u, v)`, stored canonically under
/// `(r, s) ↔ (u−r, v−s)` by the lexicographically smaller `(s, r)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct MinimalLabel {
    pub u: i64,
    pub v: i64,
    pub r: i64,
    pub s: i64,
}

impl MinimalLabel {
    pub fn new(u: i64, v: i64, r: i64, s: i64) -> Result<Self> {
        if u < 2 || v < 2 || u.gcd(&v) != 1 {
            return domain(format!("({u}, {v}) is not a minimal-model pair"));
        }
        if r < 1 || r >= u || s < 1 || s >= v {
            return domain(format!("(r, s) = ({r}, {s}) outside 1..{} × 1..{}", u - 1, v - 1));
        }
        let (r2, s2) = (u - r, v - s);
        let (r, s) = if (s2, r2) < (s, r) { (r2, s2) } else { (r, s) };
        Ok(MinimalLabel { u, v, r, s })
    }

    pub fn t(&self) -> Rational {
        q(self.u, self.v)
    }

    pub fn c(&self) -> Rational {
        c_vir(&self.t())
    }

    pub fn h(&self) -> Rational {
        virasoro_h(self.r, self.s, &self.t()).expect("valid label")
    }

    /// All canonical labels of the model.
    pub fn all(u: i64, v: i64) -> Result<Vec<MinimalLabel>> {
        let mut out = Vec::new();
        for r in 1..u {
            for s in 1..v {
                let l = MinimalLabel::new(u, v, r, s)?;
                if !out.contains(&l) {
                    out.push(l);
                }
            }
        }
        out.sort();
        Ok(out)
    }
}

impl std::fmt::Display for MinimalLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "M[{},{}]@({},{})", self.r, self.s, self.u, self.v)
    }
}

/// `q^{h−c/24} Σ_n dim L(c,h)_n qⁿ` to relative order `q_order`.
pub fn minimal_character(lab: &MinimalLabel, q_order: &Rational) -> Result<PuiseuxSeries> {
    let lead = lab.h() - lab.c() / qi(24);
    let levels = q_order.ceil().to_integer().to_u32().unwrap_or(0);
    let dims = if levels == 0 { vec![] } else { simple_graded_dims(&lab.c(), &lab.h(), levels - 1) };
    let terms = dims
        .into_iter()
        .enumerate()
        .map(|(n, d)| (&lead + qi(n as i64), qi(d as i64)));
    PuiseuxSeries::from_terms(terms, Some(&lead + q_order)).with_bound((96 * lab.u * lab.v) as u64)
}

/// `N^{(p)}_{a,b}^{c}`: one iff `|a−b|+1 ≤ c ≤ min(a+b−1, 2p−a−b−1)` and `a+b+c` is odd.
pub fn n_coefficient(p: i64, a: i64, b: i64, c: i64) -> u32 {
    let lo = (a - b).abs() + 1;
    let hi = (a + b - 1).min(2 * p - a - b - 1);
    u32::from(c >= lo && c <= hi && (a + b + c) % 2 == 1)
}

/// Fusion of two minimal-model modules with multiplicities.
pub fn minimal_fusion(a: &MinimalLabel, b: &MinimalLabel) -> Result<BTreeMap<MinimalLabel, u32>> {
    if (a.u, a.v) != (b.u, b.v) {
        return domain(format!("fusing labels of different models ({},{}) and ({},{})", a.u, a.v, b.u, b.v));
    }
    let (u, v) = (a.u, a.v);
    let mut out = BTreeMap::new();
    for r in 1..u {
        for s in 1..v {
            let n = n_coefficient(u, a.r, b.r, r) * n_coefficient(v, a.s, b.s, s);
            if n > 0 {
                *out.entry(MinimalLabel::new(u, v, r, s)?).or_insert(0) += n;
            }
        }
    }
    Ok(out)
}
