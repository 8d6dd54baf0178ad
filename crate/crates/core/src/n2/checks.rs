use std::collections::HashMap;

use num_traits::{One, Zero};
use serde_json::{json, Value};

use super::module::{check_ell, FFVector, FfMonomial, FreeFieldModule, FreeFieldSpec};
use super::realization::{N2Generator, N2ModeOp, N2Realization};
use crate::error::{domain, Error, Result};
use crate::exact::linalg::Echelon;
use crate::exact::partitions::{partitions, strict_odd_sets};
use crate::exact::{fmt_rational, q, qi, Rational, SparseVec};
use crate::modekernel::ModeEngine;

/// A free-field module together with the N=2 fields acting on it.
pub struct FreeFieldSystem {
    pub module: FreeFieldModule,
    pub real: N2Realization,
}

impl FreeFieldSystem {
    pub fn new(spec: FreeFieldSpec) -> Result<Self> {
        let module = FreeFieldModule::new(spec)?;
        let real = N2Realization::new(&module)?;
        Ok(FreeFieldSystem { module, real })
    }

    pub fn engine(&self) -> Result<ModeEngine<'_, FreeFieldModule>> {
        ModeEngine::new(&self.module, &self.real.arena)
    }

    /// `z = w ⊗ |0⟩ ⊗ |λ⟩`
    pub fn top(&self) -> FFVector {
        SparseVec::basis(FfMonomial::top())
    }

    /// `x¹ x² ⋯ xᵏ v`; the rightmost mode acts first.
    pub fn apply_word(&self, engine: &ModeEngine<'_, FreeFieldModule>, word: &[N2ModeOp], v: &FFVector) -> Result<FFVector> {
        let w: Vec<_> = word.iter().map(|op| (self.real.field(op.which), op.index.clone())).collect();
        engine.apply_word(&w, v)
    }
}

/// One N=2 mode on a free-field vector.
pub fn ff_apply(sys: &FreeFieldSystem, op: &N2ModeOp, v: &FFVector) -> Result<FFVector> {
    let engine = sys.engine()?;
    sys.real.apply(&engine, op, v)
}

/// `p_r(h, λ) = (ℓ+2)h − (r−1+ℓλ/4)² − (ℓ+1)(r−1+ℓλ/4)`
pub fn p_r(ell: &Rational, h: &Rational, lambda: &Rational, r: i64) -> Rational {
    let x = qi(r - 1) + ell * lambda / qi(4);
    (ell + qi(2)) * h - &x * &x - (ell + qi(1)) * &x
}

/// `λ^τ = −λ − 4(ℓ+2)/ℓ`
pub fn lambda_tau(ell: &Rational, lambda: &Rational) -> Result<Rational> {
    if ell.is_zero() {
        return domain("λ^τ needs ℓ ≠ 0");
    }
    Ok(-lambda - qi(4) * (ell + qi(2)) / ell)
}

/// No `p_r` with `r ≤ r_max` vanishes at `λ` or at `λ^τ`.
pub fn is_generic(ell: &Rational, h: &Rational, lambda: &Rational, r_max: i64) -> Result<bool> {
    let tau = lambda_tau(ell, lambda)?;
    Ok((1..=r_max).all(|r| !p_r(ell, h, lambda, r).is_zero() && !p_r(ell, h, &tau, r).is_zero()))
}

/// All modes of `g` with `|n| ≤ level_max`.
fn modes(g: N2Generator, level_max: &Rational) -> Vec<Rational> {
    let mut out = Vec::new();
    let mut n = -level_max.floor() - qi(1);
    if g.weight() != qi(2) && g.weight() != qi(1) {
        n += q(1, 2);
    }
    while &n <= level_max {
        if &-n.clone() <= level_max {
            out.push(n.clone());
        }
        n += qi(1);
    }
    out
}

#[derive(Clone, Debug)]
pub struct Mismatch {
    pub x: N2ModeOp,
    pub y: N2ModeOp,
    pub state: FfMonomial,
    /// `[x, y]v − (table)v`
    pub difference: FFVector,
}

#[derive(Clone, Debug, Default)]
pub struct RelationReport {
    pub checked: usize,
    pub mismatches: Vec<Mismatch>,
}

impl RelationReport {
    pub fn to_json(&self) -> Value {
        json!({
            "checked": self.checked,
            "mismatches": self.mismatches.iter().map(|m| json!({
                "x": m.x.to_string(),
                "y": m.y.to_string(),
                "state": m.state.to_string(),
                "difference": m.difference.iter().map(|(b, c)| json!({"monomial": b.to_string(), "coeff": fmt_rational(c)})).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
        })
    }
}

/// Compares every bracket `[x_m, y_n]` with `|m|, |n| ≤ level_max` against the N=2
/// table, as operators on all basis vectors of depth at most `level_max`.
pub fn verify_relations(ell: &Rational, h: &Rational, lambda: &Rational, level_max: &Rational) -> Result<RelationReport> {
    let sys = FreeFieldSystem::new(FreeFieldSpec::verma(ell.clone(), h.clone(), lambda.clone()))?;
    verify_relations_on(&sys, level_max)
}

pub fn verify_relations_on(sys: &FreeFieldSystem, level_max: &Rational) -> Result<RelationReport> {
    let engine = sys.engine()?;
    let table = sys.real.target_algebra();
    let basis = sys.module.basis_up_to(level_max);
    let mut report = RelationReport::default();
    for x in N2Generator::ALL {
        for y in N2Generator::ALL {
            for m in modes(x, level_max) {
                for n in modes(y, level_max) {
                    let br = table.bracket_idx(x.index(), &m, y.index(), &n);
                    for b in &basis {
                        let d = b.depth();
                        if &m + &n > d {
                            continue;
                        }
                        let v = SparseVec::basis(b.clone());
                        let lhs = engine.supercommutator(sys.real.field(x), &m, sys.real.field(y), &n, &v)?;
                        let mut rhs = v.scaled(&br.central);
                        for (g, p, c) in &br.terms {
                            let f = sys.real.field(N2Generator::ALL[*g]);
                            rhs.add_scaled(&engine.mode(f, p, &v)?, c);
                        }
                        report.checked += 1;
                        let diff = lhs.sub(&rhs);
                        if !diff.is_zero() {
                            report.mismatches.push(Mismatch {
                                x: N2ModeOp { which: x, index: m.clone() },
                                y: N2ModeOp { which: y, index: n.clone() },
                                state: b.clone(),
                                difference: diff,
                            });
                        }
                    }
                }
            }
        }
    }
    Ok(report)
}

/// `v = w ⊗ |0⟩ ⊗ |λ⟩ = ψ⁺_{−1/2} z`, the vector the free fermions see as their vacuum.
pub fn fermion_vacuum() -> FFVector {
    SparseVec::basis(FfMonomial { b: vec![1], ..FfMonomial::top() })
}

/// Converts a mode label read in the fermion grading (`ψ±` of weight 1/2, so `G⁺` of
/// weight 1/2 and `G⁻` of weight 5/2) to the N=2 grading used everywhere else.
pub fn from_fermion_grading(which: N2Generator, index: Rational) -> Result<N2ModeOp> {
    let shift = match which {
        N2Generator::Gplus => qi(-1),
        N2Generator::Gminus => qi(1),
        _ => Rational::zero(),
    };
    N2ModeOp::new(which, index + shift)
}

/// The displayed `G⁻` is `(ℓ+2)/2` times the normalized one.
pub fn gminus_scale(ell: &Rational) -> Rational {
    (ell + qi(2)) / qi(2)
}

/// `G⁻_{−D} v = ∏_{r ≤ |D|} p_r(h, λ) ψ⁻_{−D} v` for the ladder `D = {b, b−1, …, 1/2}`,
/// with the displayed normalization of `G⁻` and labels in the fermion grading.
pub fn gminus_factor_check(ell: &Rational, h: &Rational, lambda: &Rational, ladder: &[Rational]) -> Result<bool> {
    let len = ladder.len() as i64;
    for (i, d) in ladder.iter().enumerate() {
        if *d != q(2 * (len - i as i64) - 1, 2) {
            return domain("ladder must read b, b−1, …, 1/2");
        }
    }
    let sys = FreeFieldSystem::new(FreeFieldSpec::verma(ell.clone(), h.clone(), lambda.clone()))?;
    let engine = sys.engine()?;
    let scale = gminus_scale(ell);
    let psi_minus = sys.real.psi_minus();
    let mut lhs = fermion_vacuum();
    let mut rhs = fermion_vacuum();
    for d in ladder.iter().rev() {
        let op = from_fermion_grading(N2Generator::Gminus, -d.clone())?;
        lhs = sys.real.apply(&engine, &op, &lhs)?.scaled(&scale);
        rhs = engine.mode(psi_minus, &op.index, &rhs)?;
    }
    let coeff = (1..=len).fold(Rational::one(), |acc, r| acc * p_r(ell, h, lambda, r));
    Ok(lhs.sub(&rhs.scaled(&coeff)).is_zero())
}

/// Level of a monomial above `v` in the fermion grading.
pub fn fermion_level(b: &FfMonomial) -> Rational {
    b.depth() - qi(b.charge()) + q(1, 2)
}

/// Basis monomials at a given level of the fermion grading.
pub fn basis_at_fermion_level(module: &FreeFieldModule, level: &Rational) -> Vec<FfMonomial> {
    // a fermion charge n costs n²/2 in this grading
    let mut n_max = 0i64;
    while Rational::from_integer(((n_max + 1) * (n_max + 1)).into()) <= level * qi(2) {
        n_max += 1;
    }
    let mut out = Vec::new();
    for n in -n_max..=n_max {
        let ch = 1 - n;
        let depth = level + qi(ch) - q(1, 2);
        if depth >= Rational::zero() {
            out.extend(module.basis(&depth, Some(ch)));
        }
    }
    out.sort();
    out
}

/// Per level `d ≤ level_max` of the fermion grading: dimension of the span of all
/// N=2 mode words applied to `v`, against the dimension of the whole level.
pub fn generation_check(
    ell: &Rational,
    h: &Rational,
    lambda: &Rational,
    level_max: &Rational,
) -> Result<Vec<(Rational, usize, usize)>> {
    let sys = FreeFieldSystem::new(FreeFieldSpec::verma(ell.clone(), h.clone(), lambda.clone()))?;
    let engine = sys.engine()?;
    let mut levels = Vec::new();
    let mut d = Rational::zero();
    while &d <= level_max {
        levels.push(d.clone());
        d += q(1, 2);
    }
    let bases: Vec<Vec<FfMonomial>> = levels.iter().map(|d| basis_at_fermion_level(&sys.module, d)).collect();
    let index: Vec<HashMap<&FfMonomial, usize>> =
        bases.iter().map(|b| b.iter().enumerate().map(|(i, m)| (m, i)).collect()).collect();
    let slot = |b: &FfMonomial| levels.iter().position(|d| *d == fermion_level(b));
    let mut spans: Vec<Echelon> = levels.iter().map(|_| Echelon::new()).collect();
    let mut vectors: Vec<Vec<FFVector>> = levels.iter().map(|_| Vec::new()).collect();
    let v = fermion_vacuum();
    spans[0].insert(v.iter().map(|(b, c)| (index[0][b], c)));
    vectors[0].push(v);
    let top = qi(2) * level_max + qi(4);
    let mut frontier: Vec<(usize, usize)> = vec![(0, 0)];
    while let Some((lvl, i)) = frontier.pop() {
        let w = vectors[lvl][i].clone();
        for g in N2Generator::ALL {
            let mut n = -top.clone();
            if g.weight() == q(3, 2) {
                n += q(1, 2);
            }
            while n <= top {
                let image = sys.real.apply(&engine, &N2ModeOp { which: g, index: n.clone() }, &w)?;
                n += qi(1);
                let Some((first, _)) = image.iter().next() else { continue };
                let Some(k) = slot(first) else { continue };
                if spans[k].insert(image.iter().map(|(b, c)| (index[k][b], c))) {
                    vectors[k].push(image);
                    frontier.push((k, vectors[k].len() - 1));
                }
            }
        }
    }
    Ok(levels.into_iter().zip(spans).zip(&bases).map(|((d, s), b)| (d, s.rank(), b.len())).collect())
}

/// Ordered N=2 words `T_{−A} J_{−C} G⁺_{−B} G⁻_{−B̃}` of total weight `depth`, with
/// `T`-parts at least `t_min`, `J`-parts at least `j_min` and fermionic parts at
/// least `g_min_twice/2`, written so that the rightmost factor acts first.
pub(crate) fn pbw_words_min(depth: &Rational, t_min: u32, j_min: u32, g_min_twice: u32) -> Result<Vec<Vec<N2ModeOp>>> {
    let twice = (depth * qi(2)).to_integer();
    let twice: u32 = twice.try_into().map_err(|_| Error::Domain("negative depth".into()))?;
    let mut out = Vec::new();
    for ferm in 0..=twice {
        if (twice - ferm) % 2 == 1 {
            continue;
        }
        let bos = (twice - ferm) / 2;
        for fb in 0..=ferm {
            for b in strict_odd_sets(fb).into_iter().filter(|s| s.iter().all(|&x| x >= g_min_twice)) {
                for bt in strict_odd_sets(ferm - fb).into_iter().filter(|s| s.iter().all(|&x| x >= g_min_twice)) {
                    for na in 0..=bos {
                        for a in partitions(na).into_iter().filter(|p| p.iter().all(|&x| x >= t_min)) {
                            for c in partitions(bos - na).into_iter().filter(|p| p.iter().all(|&x| x >= j_min)) {
                                let mut w = Vec::new();
                                w.extend(a.iter().map(|&n| N2ModeOp { which: N2Generator::T, index: qi(-(n as i64)) }));
                                w.extend(c.iter().map(|&n| N2ModeOp { which: N2Generator::J, index: qi(-(n as i64)) }));
                                w.extend(b.iter().map(|&n| N2ModeOp { which: N2Generator::Gplus, index: q(-(n as i64), 2) }));
                                w.extend(bt.iter().map(|&n| N2ModeOp { which: N2Generator::Gminus, index: q(-(n as i64), 2) }));
                                out.push(w);
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Observed top data and the τ-symmetry comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TopData {
    pub delta: Rational,
    pub mu: Rational,
    pub lambda_tau: Rational,
    pub delta_tau: Rational,
    pub mu_tau: Rational,
}

impl TopData {
    pub fn delta_symmetric(&self) -> bool {
        self.delta == self.delta_tau
    }

    /// `μ(λ) + μ(λ^τ)`
    pub fn mu_sum(&self) -> Rational {
        &self.mu + &self.mu_tau
    }

    pub fn to_json(&self) -> Value {
        json!({
            "delta": fmt_rational(&self.delta),
            "mu": fmt_rational(&self.mu),
            "lambda_tau": fmt_rational(&self.lambda_tau),
            "delta_tau": fmt_rational(&self.delta_tau),
            "mu_tau": fmt_rational(&self.mu_tau),
            "delta_symmetric": self.delta_symmetric(),
            "mu_sum": fmt_rational(&self.mu_sum()),
        })
    }
}

/// `T₀` and `J₀` eigenvalues on `z`.
pub fn top_eigenvalues(ell: &Rational, h: &Rational, lambda: &Rational) -> Result<(Rational, Rational)> {
    let sys = FreeFieldSystem::new(FreeFieldSpec::verma(ell.clone(), h.clone(), lambda.clone()))?;
    let engine = sys.engine()?;
    let z = sys.top();
    let eig = |g: N2Generator| -> Result<Rational> {
        let v = sys.real.apply(&engine, &N2ModeOp { which: g, index: Rational::zero() }, &z)?;
        let c = v.get(&FfMonomial::top());
        if v.len() > usize::from(!c.is_zero()) {
            return Err(Error::Domain(format!("z is not an eigenvector of {}_0", g.name())));
        }
        Ok(c)
    };
    Ok((eig(N2Generator::T)?, eig(N2Generator::J)?))
}

pub fn top_data(ell: &Rational, h: &Rational, lambda: &Rational) -> Result<TopData> {
    check_ell(ell)?;
    let tau = lambda_tau(ell, lambda)?;
    let (delta, mu) = top_eigenvalues(ell, h, lambda)?;
    let (delta_tau, mu_tau) = top_eigenvalues(ell, h, &tau)?;
    Ok(TopData { delta, mu, lambda_tau: tau, delta_tau, mu_tau })
}
