use std::collections::HashMap;

use super::gram::singular_with;
use super::verma::{PbwVector, Verma};
use crate::error::{domain, Result};
use crate::exact::linalg::Echelon;
use crate::exact::partitions::{partitions, partitions_min, Partition};
use crate::exact::{qi, Rational, SparseVec};
use crate::modekernel::{FieldArena, ModeEngine};

/// Highest-weight module given as `V(c, h)` modulo the submodule generated by listed vectors.
#[derive(Clone, Debug)]
pub struct HighestWeightSpec {
    pub c: Rational,
    pub h: Rational,
    pub relations: Vec<PbwVector>,
}

impl HighestWeightSpec {
    pub fn verma(c: Rational, h: Rational) -> Self {
        HighestWeightSpec { c, h, relations: Vec::new() }
    }

    /// Verma module modulo its singular vector at `level` (error if there is none).
    pub fn modulo_singular(c: Rational, h: Rational, level: u32) -> Result<Self> {
        let verma = Verma::new(c.clone(), h.clone());
        let sv = singular_with(&verma, level);
        if sv.is_empty() {
            return domain(format!("no singular vector at level {level} for c = {c}, h = {h}"));
        }
        Ok(HighestWeightSpec { c, h, relations: sv })
    }
}

/// Per-level dimensions of `W / C₁(W)` for levels `0..=level_max`.
///
/// `C₁(W)_n` is spanned by `a_{(−1)} w` with `a = L_{−n₁}⋯L_{−n_k}|0⟩` (all `n_i ≥ 2`)
/// of weight at most `n` and `w` running over the PBW basis at level `n − wt a`.
pub fn c1_quotient_dims(spec: &HighestWeightSpec, level_max: u32) -> Result<Vec<usize>> {
    for r in &spec.relations {
        if r.c != spec.c || r.h != spec.h {
            return domain("relation vector belongs to a different Verma module");
        }
    }
    let verma = Verma::new(spec.c.clone(), spec.h.clone());
    let mut arena = FieldArena::new(verma_algebra(&verma));
    let l = arena.generator("L")?;
    let mut vacuum_fields: Vec<(u32, crate::modekernel::FieldId)> = Vec::new();
    for wt in 2..=level_max {
        for part in partitions_min(wt, 2) {
            let word: Vec<_> = part.iter().map(|&p| (l, qi(-(p as i64)))).collect();
            vacuum_fields.push((wt, arena.state_field(&word)?));
        }
    }
    let engine = ModeEngine::new(&verma, &arena)?;
    let mut dims = Vec::new();
    for n in 0..=level_max {
        let basis = partitions(n);
        let index: HashMap<&Partition, usize> = basis.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let mut span = Echelon::new();
        let add = |v: &SparseVec<Partition>, span: &mut Echelon| {
            span.insert(v.iter().map(|(p, c)| (index[p], c)));
        };
        for rel in &spec.relations {
            let m = rel.level().unwrap_or(0);
            if m > n {
                continue;
            }
            for i in partitions(n - m) {
                let v = verma.lower(&i, &rel.coeffs);
                add(&v, &mut span);
            }
        }
        for (wt, a) in &vacuum_fields {
            if *wt > n {
                continue;
            }
            for w in partitions(n - wt) {
                let v = engine.mode(*a, &qi(-(*wt as i64)), &SparseVec::basis(w))?;
                add(&v, &mut span);
            }
        }
        dims.push(basis.len() - span.rank());
    }
    Ok(dims)
}

fn verma_algebra(verma: &Verma) -> crate::modekernel::Algebra {
    use crate::modekernel::GradedModule;
    verma.algebra().clone()
}
