use std::collections::BTreeSet;

use super::label::{lambda_allowed, Kind, ModuleLabel};
use crate::exact::Rational;
use crate::levels::AdmissibleLevel;

/// Canonical representative under the identifications of simple modules.
///
/// `D⁻` disappears, `D⁺_{r,v−1}` becomes a flowed `L`, and `E` keeps the
/// lexicographically smaller `(s, r)` of `{(s, r), (v−s, u−r)}`. Non-simple kinds
/// are returned unchanged.
pub fn normal_form(x: &ModuleLabel) -> ModuleLabel {
    let (u, v) = (x.level.u, x.level.v);
    let l = x.flow;
    let make = |flow, kind| ModuleLabel { level: x.level, flow, kind };
    match &x.kind {
        Kind::Dplus { r, s } if *s == v - 1 => make(l + 1, Kind::L { r: u - r }),
        Kind::Dminus { r, s } if *s == v - 1 => make(l - 1, Kind::L { r: u - r }),
        Kind::Dminus { r, s } => make(l - 1, Kind::Dplus { r: u - r, s: v - s - 1 }),
        Kind::E { lambda, r, s } => {
            let (r2, s2) = (u - r, v - s);
            let (r, s) = if (s2, r2) < (*s, *r) { (r2, s2) } else { (*r, *s) };
            make(l, Kind::E { lambda: lambda.clone(), r, s })
        }
        _ => x.clone(),
    }
}

pub fn spectral_flow(x: &ModuleLabel, n: i64) -> ModuleLabel {
    normal_form(&x.with_flow(x.flow + n))
}

/// Every canonical simple with flow in `flows`; relaxed ones for each sample `λ`
/// that avoids the excluded values.
pub fn enumerate_simples(
    lvl: &AdmissibleLevel,
    flows: impl IntoIterator<Item = i64>,
    lambdas: &[Rational],
) -> Vec<ModuleLabel> {
    let (u, v) = (lvl.u, lvl.v);
    let mut out = BTreeSet::new();
    for flow in flows {
        let mut push = |kind| {
            out.insert(normal_form(&ModuleLabel { level: *lvl, flow, kind }));
        };
        for r in 1..u {
            push(Kind::L { r });
            for s in 1..v.saturating_sub(1) {
                push(Kind::Dplus { r, s });
            }
            for s in 1..v {
                for lambda in lambdas {
                    let lambda = crate::exact::rational::rem_euclid(lambda, &crate::exact::qi(2));
                    if lambda_allowed(lvl, &lambda, r, s) {
                        push(Kind::E { lambda, r, s });
                    }
                }
            }
        }
    }
    out.into_iter().collect()
}
