use std::collections::HashMap;
use std::sync::Mutex;

use num_traits::Zero;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exact::partitions::Partition;
use crate::exact::rational::{fmt_rational, to_i64};
use crate::exact::{qi, Rational, SparseVec};
use crate::modekernel::{Algebra, GradedModule};

/// Vector of a Verma module in the PBW basis `L_{−I} 1_{c,h}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PbwVector {
    pub c: Rational,
    pub h: Rational,
    pub coeffs: SparseVec<Partition>,
}

impl PbwVector {
    pub fn level(&self) -> Option<u32> {
        self.coeffs.keys().next().map(|p| p.iter().sum())
    }

    pub fn coeff(&self, p: &[u32]) -> Rational {
        self.coeffs.get(&p.to_vec())
    }

    /// `[{"partition": [..], "coeff": "p/q"}, ..]` sorted by partition.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.coeffs
                .iter()
                .map(|(p, c)| json!({"partition": p, "coeff": fmt_rational(c)}))
                .collect(),
        )
    }
}

impl std::fmt::Display for PbwVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (i, (p, c)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let word: Vec<String> = p.iter().map(|x| format!("L_{{-{x}}}")).collect();
            write!(f, "({c}) {}", word.join(""))?;
        }
        Ok(())
    }
}

/// Verma module `V(c, h)`; generator actions are straightened with the Virasoro bracket table.
pub struct Verma {
    c: Rational,
    h: Rational,
    algebra: Algebra,
    memo: Mutex<HashMap<(i64, Partition), SparseVec<Partition>>>,
}

impl Verma {
    pub fn new(c: Rational, h: Rational) -> Self {
        let algebra = Algebra::virasoro(c.clone());
        Verma { c, h, algebra, memo: Mutex::new(HashMap::new()) }
    }

    pub fn c(&self) -> &Rational {
        &self.c
    }

    pub fn h(&self) -> &Rational {
        &self.h
    }

    /// `L_n L_{−I} 1` in PBW form.
    pub fn act(&self, n: i64, p: &Partition) -> SparseVec<Partition> {
        let size: i64 = p.iter().map(|&x| x as i64).sum();
        if n == 0 {
            return SparseVec::term(p.clone(), &self.h + qi(size));
        }
        if n > size {
            return SparseVec::new();
        }
        if n < 0 && (p.is_empty() || -n >= p[0] as i64) {
            let mut q = Vec::with_capacity(p.len() + 1);
            q.push((-n) as u32);
            q.extend_from_slice(p);
            return SparseVec::basis(q);
        }
        let key = (n, p.clone());
        if let Some(hit) = self.memo.lock().unwrap().get(&key) {
            return hit.clone();
        }
        let a1 = p[0] as i64;
        let rest: Partition = p[1..].to_vec();
        // L_n L_{−a1} Y = L_{−a1} (L_n Y) + [L_n, L_{−a1}] Y
        let inner = self.act(n, &rest);
        let mut out = self.act_vec(-a1, &inner);
        let br = self.algebra.bracket_idx(0, &qi(n), 0, &qi(-a1));
        for (_, m, coeff) in &br.terms {
            let m = to_i64(m).expect("integer Virasoro mode");
            out.add_scaled(&self.act(m, &rest), coeff);
        }
        if !br.central.is_zero() {
            out.add_term(rest.clone(), br.central.clone());
        }
        self.memo.lock().unwrap().insert(key, out.clone());
        out
    }

    pub fn act_vec(&self, n: i64, v: &SparseVec<Partition>) -> SparseVec<Partition> {
        let mut out = SparseVec::new();
        for (p, c) in v.iter() {
            out.add_scaled(&self.act(n, p), c);
        }
        out
    }

    /// `L_{−I} v` with `I = (i₁ ≥ i₂ ≥ …)`; the rightmost factor acts first.
    pub fn lower(&self, part: &[u32], v: &SparseVec<Partition>) -> SparseVec<Partition> {
        let mut cur = v.clone();
        for &i in part.iter().rev() {
            cur = self.act_vec(-(i as i64), &cur);
        }
        cur
    }

    pub fn vector(&self, coeffs: SparseVec<Partition>) -> PbwVector {
        PbwVector { c: self.c.clone(), h: self.h.clone(), coeffs }
    }
}

impl GradedModule for Verma {
    type Basis = Partition;

    fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    fn depth(&self, b: &Partition) -> Rational {
        qi(b.iter().map(|&x| x as i64).sum())
    }

    fn act_generator(&self, gen: usize, n: &Rational, b: &Partition) -> Result<SparseVec<Partition>> {
        if gen != 0 {
            return Err(Error::Domain(format!("unknown generator index {gen} for the Virasoro algebra")));
        }
        let n = to_i64(n).ok_or_else(|| Error::Domain(format!("non-integer Virasoro mode {n}")))?;
        Ok(self.act(n, b))
    }
}
