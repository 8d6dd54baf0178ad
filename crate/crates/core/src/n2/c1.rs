use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;

use super::checks::{pbw_words_min, FreeFieldSystem};
use super::module::{FFVector, FfMonomial, FreeFieldSpec};
use super::realization::{N2Generator, N2ModeOp};
use crate::error::{domain, Result};
use crate::exact::linalg::Echelon;
use crate::exact::{q, qi, Rational, SparseVec};
use crate::modekernel::{FieldArena, FieldId, ModeEngine};

/// A vacuum-module state of the N=2 algebra turned into a free field.
struct VacuumField {
    weight: Rational,
    charge: i64,
    field: FieldId,
}

/// `C₁` of a free-field module viewed as an N=2 module, level by level.
pub struct C1Space {
    sys: FreeFieldSystem,
    arena: FieldArena,
    fields: Vec<VacuumField>,
    built_to: Rational,
}

impl C1Space {
    pub fn new(spec: FreeFieldSpec) -> Result<Self> {
        let sys = FreeFieldSystem::new(spec)?;
        let arena = sys.real.arena.clone();
        Ok(C1Space { sys, arena, fields: Vec::new(), built_to: Rational::zero() })
    }

    pub fn system(&self) -> &FreeFieldSystem {
        &self.sys
    }

    /// Adds the states `T_{−A} J_{−C} G⁺_{−B} G⁻_{−B̃}|0⟩` with weight up to `wt`.
    fn extend_fields(&mut self, wt: &Rational) -> Result<()> {
        let mut d = &self.built_to + q(1, 2);
        while &d <= wt {
            for word in pbw_words_min(&d, 2, 1, 3)? {
                let charge = word
                    .iter()
                    .map(|op| match op.which {
                        N2Generator::Gplus => 1,
                        N2Generator::Gminus => -1,
                        _ => 0,
                    })
                    .sum();
                let w: Vec<_> = word.iter().map(|op| (self.sys.real.field(op.which), op.index.clone())).collect();
                let field = self.arena.state_field(&w)?;
                self.fields.push(VacuumField { weight: d.clone(), charge, field });
            }
            d += q(1, 2);
        }
        if wt > &self.built_to {
            self.built_to = wt.clone();
        }
        Ok(())
    }

    /// Echelon form of `C₁` at `(depth, charge)` in the monomial basis.
    fn span_at(&mut self, depth: &Rational, charge: i64) -> Result<(Vec<FfMonomial>, Echelon)> {
        self.extend_fields(depth)?;
        let basis = self.sys.module.basis(depth, Some(charge));
        let index: HashMap<&FfMonomial, usize> = basis.iter().enumerate().map(|(i, b)| (b, i)).collect();
        let engine = ModeEngine::new(&self.sys.module, &self.arena)?;
        let mut span = Echelon::new();
        for vf in &self.fields {
            if &vf.weight > depth {
                continue;
            }
            for w in self.sys.module.basis(&(depth - &vf.weight), Some(charge - vf.charge)) {
                let v = engine.mode(vf.field, &-vf.weight.clone(), &SparseVec::basis(w))?;
                span.insert(v.iter().map(|(b, c)| (index[b], c)));
            }
        }
        Ok((basis, span))
    }

    /// Whether a homogeneous vector lies in `C₁`.
    pub fn contains(&mut self, target: &FFVector) -> Result<bool> {
        let Some((first, _)) = target.iter().next() else {
            return Ok(true);
        };
        let (depth, charge) = (first.depth(), first.charge());
        if target.keys().any(|b| b.depth() != depth || b.charge() != charge) {
            return domain("target is not homogeneous in weight and charge");
        }
        let (basis, span) = self.span_at(&depth, charge)?;
        let index: HashMap<&FfMonomial, usize> = basis.iter().enumerate().map(|(i, b)| (b, i)).collect();
        let mut entries = Vec::new();
        for (b, c) in target.iter() {
            match index.get(b) {
                Some(&i) => entries.push((i, c)),
                None => return domain(format!("{b} is not a basis monomial of this module")),
            }
        }
        Ok(span.contains(entries))
    }

    /// `dim (M / C₁(M))` at every `(depth, charge)` with depth up to `depth_max`
    /// and nonzero dimension.
    pub fn quotient_dims(&mut self, depth_max: &Rational) -> Result<BTreeMap<(Rational, i64), usize>> {
        let mut out = BTreeMap::new();
        let mut d = Rational::zero();
        while &d <= depth_max {
            let mut charges: Vec<i64> = self.sys.module.basis(&d, None).iter().map(FfMonomial::charge).collect();
            charges.sort();
            charges.dedup();
            for ch in charges {
                let (basis, span) = self.span_at(&d, ch)?;
                let dim = basis.len() - span.rank();
                if dim > 0 {
                    out.insert((d.clone(), ch), dim);
                }
            }
            d += q(1, 2);
        }
        Ok(out)
    }
}

impl C1Space {
    /// Whether `vectors` together with `C₁` fill every level up to `depth_max`.
    pub fn spans_quotient(&mut self, vectors: &[FFVector], depth_max: &Rational) -> Result<bool> {
        for ((depth, charge), _) in self.quotient_dims(depth_max)? {
            let (basis, mut span) = self.span_at(&depth, charge)?;
            let index: HashMap<&FfMonomial, usize> = basis.iter().enumerate().map(|(i, b)| (b, i)).collect();
            for v in vectors {
                if v.keys().all(|b| b.depth() == depth && b.charge() == charge) {
                    span.insert(v.iter().map(|(b, c)| (index[b], c)));
                }
            }
            if span.rank() < basis.len() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

pub fn c1_membership(spec: FreeFieldSpec, target: &FFVector) -> Result<bool> {
    C1Space::new(spec)?.contains(target)
}

/// `T_{−1}^N G⁺_{−1/2} z`
pub fn step_one_target(sys: &FreeFieldSystem, n: u32) -> Result<FFVector> {
    let engine = sys.engine()?;
    let mut word = vec![N2ModeOp { which: N2Generator::T, index: qi(-1) }; n as usize];
    word.push(N2ModeOp { which: N2Generator::Gplus, index: q(-1, 2) });
    sys.apply_word(&engine, &word, &sys.top())
}

/// `T_{−1}^N G⁻_{−1/2} z`
pub fn step_two_target(sys: &FreeFieldSystem, n: u32) -> Result<FFVector> {
    let engine = sys.engine()?;
    let mut word = vec![N2ModeOp { which: N2Generator::T, index: qi(-1) }; n as usize];
    word.push(N2ModeOp { which: N2Generator::Gminus, index: q(-1, 2) });
    sys.apply_word(&engine, &word, &sys.top())
}

/// The spanning set `T_{−1}^n z`, `T_{−1}^m G^±_{−1/2} z`, `T_{−1}^m G⁺_{−1/2} G⁻_{−1/2} z`
/// (`n ≤ N`, `m < N`) for `Q / C₁(Q)` once `T_{−1}^N G^±_{−1/2} z ∈ C₁(Q)`.
pub fn step_three_spanning_set(sys: &FreeFieldSystem, n: u32) -> Result<Vec<FFVector>> {
    let engine = sys.engine()?;
    let t = N2ModeOp { which: N2Generator::T, index: qi(-1) };
    let gp = N2ModeOp { which: N2Generator::Gplus, index: q(-1, 2) };
    let gm = N2ModeOp { which: N2Generator::Gminus, index: q(-1, 2) };
    let mut out = Vec::new();
    for k in 0..=n {
        out.push(sys.apply_word(&engine, &vec![t.clone(); k as usize], &sys.top())?);
    }
    for tail in [vec![gp.clone()], vec![gm.clone()], vec![gp, gm]] {
        for k in 0..n {
            let mut word = vec![t.clone(); k as usize];
            word.extend(tail.iter().cloned());
            out.push(sys.apply_word(&engine, &word, &sys.top())?);
        }
    }
    Ok(out)
}
