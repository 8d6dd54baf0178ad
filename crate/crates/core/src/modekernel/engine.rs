use std::collections::HashMap;
use std::fmt::Debug;
use std::hash::Hash;
use std::sync::Mutex;

use num_traits::{One, Zero};

use super::algebra::Algebra;
use super::field::{FieldArena, FieldId, FieldNode};
use super::sign::koszul;
use crate::error::{Error, Result};
use crate::exact::rational::{ceil_in_class, is_integer};
use crate::exact::{Rational, SparseVec};

/// A graded module for the generators of an algebra.
///
/// `depth` is the conformal weight above the lowest weight; a mode `A_n` lowers it by `n`,
/// so `A_n b = 0` whenever `n > depth(b)`.
pub trait GradedModule {
    type Basis: Ord + Clone + Hash + Debug;

    fn algebra(&self) -> &Algebra;

    fn depth(&self, b: &Self::Basis) -> Rational;

    fn act_generator(&self, gen: usize, n: &Rational, b: &Self::Basis) -> Result<SparseVec<Self::Basis>>;

    fn lower_bounded(&self) -> bool {
        true
    }
}

type ModeCache<B> = Mutex<HashMap<(FieldId, Rational, B), SparseVec<B>>>;

/// Evaluates modes of composite fields on a lower-bounded module.
///
/// For `:AB:` with `A` of weight `Δ`, the `n`-th mode is
/// `Σ_{p < 1−Δ} A_p B_{n−p} + (−1)^{|A||B|} Σ_{p ≥ 1−Δ} B_{n−p} A_p`;
/// lower-boundedness truncates both sums.
pub struct ModeEngine<'a, M: GradedModule> {
    module: &'a M,
    fields: &'a FieldArena,
    cache: ModeCache<M::Basis>,
}

impl<'a, M: GradedModule> ModeEngine<'a, M> {
    pub fn new(module: &'a M, fields: &'a FieldArena) -> Result<Self> {
        if module.algebra().name() != fields.algebra().name() {
            return Err(Error::Domain(format!(
                "fields over {} cannot act on a module over {}",
                fields.algebra().name(),
                module.algebra().name()
            )));
        }
        if !module.lower_bounded() {
            return Err(Error::Domain("iterate expansion needs a lower-bounded module".into()));
        }
        Ok(ModeEngine { module, fields, cache: Mutex::new(HashMap::new()) })
    }

    pub fn module(&self) -> &M {
        self.module
    }

    pub fn fields(&self) -> &FieldArena {
        self.fields
    }

    /// `A_n v`
    pub fn mode(&self, a: FieldId, n: &Rational, v: &SparseVec<M::Basis>) -> Result<SparseVec<M::Basis>> {
        let w = self.fields.weight(a);
        if !is_integer(&(n - w)) {
            return Err(Error::Domain(format!("mode {n} of a weight-{w} field is not in its moding")));
        }
        v.map_linear(|b| self.mode_on_basis(a, n, b))
    }

    /// Applies the operator word `x₁ x₂ ⋯ x_k` (so `x_k` acts first).
    pub fn apply_word(&self, word: &[(FieldId, Rational)], v: &SparseVec<M::Basis>) -> Result<SparseVec<M::Basis>> {
        let mut cur = v.clone();
        for (a, n) in word.iter().rev() {
            if cur.is_zero() {
                break;
            }
            cur = self.mode(*a, n, &cur)?;
        }
        Ok(cur)
    }

    pub fn mode_on_basis(&self, a: FieldId, n: &Rational, b: &M::Basis) -> Result<SparseVec<M::Basis>> {
        let d = self.module.depth(b);
        if n > &d {
            return Ok(SparseVec::new());
        }
        match self.fields.node(a) {
            FieldNode::Gen(i) => self.module.act_generator(*i, n, b),
            FieldNode::Scale(c, x) => Ok(self.mode_on_basis(*x, n, b)?.scaled(c)),
            FieldNode::Sum(parts) => {
                let mut out = SparseVec::new();
                for x in parts {
                    out.add_assign(&self.mode_on_basis(*x, n, b)?);
                }
                Ok(out)
            }
            FieldNode::Deriv(x) => {
                let c = -(n + self.fields.weight(*x));
                if c.is_zero() {
                    return Ok(SparseVec::new());
                }
                Ok(self.mode_on_basis(*x, n, b)?.scaled(&c))
            }
            FieldNode::Normal(x, y) => {
                let key = (a, n.clone(), b.clone());
                if let Some(hit) = self.cache.lock().unwrap().get(&key) {
                    return Ok(hit.clone());
                }
                let out = self.normal_mode(*x, *y, n, b, &d)?;
                self.cache.lock().unwrap().insert(key, out.clone());
                Ok(out)
            }
        }
    }

    fn normal_mode(
        &self,
        x: FieldId,
        y: FieldId,
        n: &Rational,
        b: &M::Basis,
        d: &Rational,
    ) -> Result<SparseVec<M::Basis>> {
        let wx = self.fields.weight(x).clone();
        let split = Rational::one() - &wx;
        let eps = koszul(self.fields.parity(x), self.fields.parity(y));
        let mut out = SparseVec::new();
        let start = ceil_in_class(&(n - d), &wx);
        let mut p = start;
        while p < split {
            let inner = self.mode_on_basis(y, &(n - &p), b)?;
            if !inner.is_zero() {
                out.add_assign(&inner.map_linear(|bb| self.mode_on_basis(x, &p, bb))?);
            }
            p += Rational::one();
        }
        let mut p = ceil_in_class(&split, &wx);
        while &p <= d {
            let inner = self.mode_on_basis(x, &p, b)?;
            if !inner.is_zero() {
                let t = inner.map_linear(|bb| self.mode_on_basis(y, &(n - &p), bb))?;
                out.add_scaled(&t, &eps);
            }
            p += Rational::one();
        }
        Ok(out)
    }

    /// `[x_m, y_n] v` as a super-commutator of actions.
    pub fn supercommutator(
        &self,
        x: FieldId,
        m: &Rational,
        y: FieldId,
        n: &Rational,
        v: &SparseVec<M::Basis>,
    ) -> Result<SparseVec<M::Basis>> {
        let xy = self.mode(x, m, &self.mode(y, n, v)?)?;
        let yx = self.mode(y, n, &self.mode(x, m, v)?)?;
        let eps = koszul(self.fields.parity(x), self.fields.parity(y));
        let mut out = xy;
        out.add_scaled(&yx, &-eps);
        Ok(out)
    }

    pub fn cache_len(&self) -> usize {
        self.cache.lock().unwrap().len()
    }
}
