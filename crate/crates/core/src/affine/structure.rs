use serde_json::{json, Value};

use super::label::{Kind, ModuleLabel};
use super::normal::normal_form;
use crate::error::{domain, Result};

/// `sub ↪ module ↠ quotient`
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShortExact {
    pub sub: ModuleLabel,
    pub module: ModuleLabel,
    pub quotient: ModuleLabel,
}

/// Composition data of a reducible indecomposable.
///
/// `layers` runs from the top (head) down to the socle. `arrows` point from a
/// factor to one in the next layer down.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureData {
    pub module: ModuleLabel,
    pub sequences: Vec<ShortExact>,
    pub layers: Vec<Vec<ModuleLabel>>,
    pub arrows: Vec<(ModuleLabel, ModuleLabel)>,
}

impl StructureData {
    /// Simple factors with multiplicity, in normal form and sorted.
    pub fn composition_factors(&self) -> Vec<ModuleLabel> {
        let mut out: Vec<_> = self.layers.iter().flatten().map(normal_form).collect();
        out.sort();
        out
    }

    pub fn to_json(&self) -> Value {
        let s = |x: &ModuleLabel| x.to_string();
        json!({
            "module": s(&self.module),
            "sequences": self.sequences.iter().map(|e| json!({
                "sub": s(&e.sub), "module": s(&e.module), "quotient": s(&e.quotient)
            })).collect::<Vec<_>>(),
            "layers": self.layers.iter().map(|l| l.iter().map(s).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "arrows": self.arrows.iter().map(|(a, b)| [s(a), s(b)]).collect::<Vec<_>>(),
        })
    }
}

fn at(x: &ModuleLabel, flow: i64, kind: Kind) -> ModuleLabel {
    ModuleLabel { level: x.level, flow, kind }
}

fn two_layer(x: &ModuleLabel, sub: ModuleLabel, quotient: ModuleLabel) -> StructureData {
    StructureData {
        module: x.clone(),
        sequences: vec![ShortExact { sub: sub.clone(), module: x.clone(), quotient: quotient.clone() }],
        layers: vec![vec![quotient.clone()], vec![sub.clone()]],
        arrows: vec![(quotient, sub)],
    }
}

/// Exact sequences and Loewy layers of `E⁺`, `E⁻` and `P`.
///
/// `P[r,s]` at flow `ℓ` is the projective cover of `D⁺_{r,s}` at `ℓ`. Both of its
/// presentations, by `E⁺` and by `E⁻`, are listed.
pub fn structure_of(x: &ModuleLabel) -> Result<StructureData> {
    let (u, v) = (x.level.u, x.level.v);
    let l = x.flow;
    match x.kind {
        Kind::Eplus { r, s } => Ok(two_layer(
            x,
            at(x, l, Kind::Dplus { r, s }),
            at(x, l, Kind::Dminus { r: u - r, s: v - s }),
        )),
        Kind::Eminus { r, s } => Ok(two_layer(
            x,
            at(x, l, Kind::Dminus { r, s }),
            at(x, l, Kind::Dplus { r: u - r, s: v - s }),
        )),
        Kind::P { r, s } => {
            let head = at(x, l, Kind::Dplus { r, s });
            let (plus, minus, middle) = if s < v - 1 {
                let (r2, s2, l2) = (u - r, v - s - 1, l + 1);
                (
                    (at(x, l, Kind::Eplus { r, s }), at(x, l + 1, Kind::Eplus { r, s: s + 1 })),
                    (at(x, l2, Kind::Eminus { r: r2, s: s2 }), at(x, l2 - 1, Kind::Eminus { r: r2, s: s2 + 1 })),
                    vec![at(x, l, Kind::Dminus { r: u - r, s: v - s }), at(x, l + 1, Kind::Dplus { r, s: s + 1 })],
                )
            } else {
                let l2 = l + 2;
                (
                    (at(x, l, Kind::Eplus { r, s }), at(x, l + 2, Kind::Eplus { r: u - r, s: 1 })),
                    (at(x, l2, Kind::Eminus { r, s }), at(x, l2 - 2, Kind::Eminus { r: u - r, s: 1 })),
                    vec![at(x, l, Kind::Dminus { r: u - r, s: 1 }), at(x, l + 2, Kind::Dplus { r: u - r, s: 1 })],
                )
            };
            let minus_module = x.clone();
            let sequences = vec![
                ShortExact { sub: plus.0, module: x.clone(), quotient: plus.1 },
                ShortExact { sub: minus.0, module: minus_module, quotient: minus.1 },
            ];
            let arrows = middle
                .iter()
                .flat_map(|m| [(head.clone(), m.clone()), (m.clone(), head.clone())])
                .collect();
            Ok(StructureData {
                module: x.clone(),
                sequences,
                layers: vec![vec![head.clone()], middle, vec![head]],
                arrows,
            })
        }
        _ => domain(format!("{x} has no structure data; expected E+, E- or P")),
    }
}
