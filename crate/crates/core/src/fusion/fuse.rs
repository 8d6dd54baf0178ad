use std::collections::BTreeMap;

use serde_json::{json, Value};

use crate::affine::{normal_form, structure_of, Kind, ModuleLabel};
use crate::error::{domain, Result};
use crate::exact::qi;
use crate::virasoro::n_coefficient;

/// Direct sum of modules with multiplicities; labels in normal form.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FusionDecomposition {
    pub summands: BTreeMap<ModuleLabel, u32>,
}

impl FusionDecomposition {
    pub fn add(&mut self, x: ModuleLabel, n: u32) {
        if n > 0 {
            *self.summands.entry(normal_form(&x)).or_insert(0) += n;
        }
    }

    pub fn merge(&mut self, other: &FusionDecomposition, times: u32) {
        for (x, n) in &other.summands {
            self.add(x.clone(), n * times);
        }
    }

    pub fn total(&self) -> u32 {
        self.summands.values().sum()
    }

    /// Simple factors with multiplicity, sorted; reducible summands are expanded.
    pub fn composition_factors(&self) -> Result<Vec<ModuleLabel>> {
        let mut out = Vec::new();
        for (x, n) in &self.summands {
            let factors = if x.kind.is_simple() { vec![x.clone()] } else { structure_of(x)?.composition_factors() };
            for _ in 0..*n {
                out.extend(factors.iter().cloned());
            }
        }
        out.sort();
        Ok(out)
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.summands
                .iter()
                .map(|(x, n)| json!({"label": x.to_string(), "multiplicity": n}))
                .collect(),
        )
    }
}

impl std::fmt::Display for FusionDecomposition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self
            .summands
            .iter()
            .map(|(x, n)| if *n == 1 { x.to_string() } else { format!("{n}·{x}") })
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" ⊕ "))
        }
    }
}

/// `L_r ⊠ x` for ordinary `L_r`.
///
/// The first index `r'` of `x` is replaced by every `r''` with `N^{(u)}_{r,r'}{}^{r''} = 1`;
/// relaxed modules also shift `λ` by `r − 1`. `E±` follow the same rule as their
/// factors, since fusing with `L_r` is exact.
pub fn fuse(r: i64, x: &ModuleLabel) -> Result<FusionDecomposition> {
    let u = x.level.u;
    if r < 1 || r >= u {
        return domain(format!("ordinary label r = {r} outside 1..{}", u - 1));
    }
    let rp = x.kind.r();
    let mut out = FusionDecomposition::default();
    for r2 in 1..u {
        let n = n_coefficient(u, r, rp, r2);
        if n == 0 {
            continue;
        }
        let kind = match &x.kind {
            Kind::E { lambda, s, .. } => Kind::E { lambda: lambda + qi(r - 1), r: r2, s: *s },
            other => other.with_r(r2),
        };
        out.add(ModuleLabel::new(x.level, x.flow, kind)?, n);
    }
    Ok(out)
}
