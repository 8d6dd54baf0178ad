use std::collections::HashMap;
use std::sync::{Arc, LazyLock, Mutex};

use num_traits::{One, Zero};

use super::verma::{PbwVector, Verma};
use crate::exact::linalg::{self, Echelon};
use crate::exact::partitions::{partitions, Partition};
use crate::exact::{Rational, SparseVec};

type GramKey = (Rational, Rational, u32);
type Matrix = Arc<Vec<Vec<Rational>>>;

static GRAM_CACHE: LazyLock<Mutex<HashMap<GramKey, Matrix>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

/// Shapovalov form on level `n` of `V(c, h)`, rows and columns indexed by
/// [`partitions`]`(n)`.
///
/// Uses `⟨L_{−I}1, L_{−J}1⟩ = ⟨L_{−I'}1, L_{i₁} L_{−J}1⟩` with `I = (i₁, I')`,
/// recursing on lower levels.
pub fn gram_matrix(c: &Rational, h: &Rational, n: u32) -> Arc<Vec<Vec<Rational>>> {
    let verma = Verma::new(c.clone(), h.clone());
    gram_with(&verma, n)
}

pub(crate) fn gram_with(verma: &Verma, n: u32) -> Arc<Vec<Vec<Rational>>> {
    let key = (verma.c().clone(), verma.h().clone(), n);
    if let Some(hit) = GRAM_CACHE.lock().unwrap().get(&key) {
        return hit.clone();
    }
    let basis = partitions(n);
    let m = if n == 0 {
        vec![vec![Rational::one()]]
    } else {
        let mut m = vec![vec![Rational::zero(); basis.len()]; basis.len()];
        let mut lower: HashMap<u32, (Matrix, HashMap<Partition, usize>)> = HashMap::new();
        for (i, pi) in basis.iter().enumerate() {
            let i1 = pi[0];
            let rest: Partition = pi[1..].to_vec();
            let lvl = n - i1;
            let (g, index) = lower.entry(lvl).or_insert_with(|| {
                let idx = partitions(lvl).into_iter().enumerate().map(|(k, p)| (p, k)).collect();
                (gram_with(verma, lvl), idx)
            });
            let row_i = index[&rest];
            for (j, pj) in basis.iter().enumerate() {
                if j < i {
                    continue;
                }
                let raised = verma.act(i1 as i64, pj);
                let mut s = Rational::zero();
                for (k, x) in raised.iter() {
                    s += x * &g[row_i][index[k]];
                }
                m[i][j] = s.clone();
                m[j][i] = s;
            }
        }
        m
    };
    let m = Arc::new(m);
    GRAM_CACHE.lock().unwrap().entry(key).or_insert(m).clone()
}

/// Singular vectors at level `n`: the joint kernel of `L₁` and `L₂`, normalized to a unit
/// `L_{−1}^n` coefficient when that coefficient is nonzero.
pub fn find_singular_vectors(c: &Rational, h: &Rational, n: u32) -> Vec<PbwVector> {
    let verma = Verma::new(c.clone(), h.clone());
    singular_with(&verma, n)
}

pub(crate) fn singular_with(verma: &Verma, n: u32) -> Vec<PbwVector> {
    if n == 0 {
        return Vec::new();
    }
    let cols = partitions(n);
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for k in [1i64, 2] {
        if (k as u32) > n {
            continue;
        }
        let target = partitions(n - k as u32);
        let index: HashMap<&Partition, usize> = target.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let mut block = vec![vec![Rational::zero(); cols.len()]; target.len()];
        for (j, p) in cols.iter().enumerate() {
            for (q, x) in verma.act(k, p).iter() {
                block[index[q]][j] = x.clone();
            }
        }
        rows.extend(block);
    }
    let ones: Partition = vec![1; n as usize];
    linalg::kernel(&rows, cols.len())
        .into_iter()
        .map(|x| {
            let j1 = cols.iter().position(|p| *p == ones).unwrap();
            let norm = if !x[j1].is_zero() {
                x[j1].clone()
            } else {
                x.iter().find(|c| !c.is_zero()).cloned().unwrap()
            };
            let coeffs = cols.iter().cloned().zip(x.iter().map(|c| c / &norm)).collect();
            verma.vector(coeffs)
        })
        .collect()
}

/// Dimensions of the simple quotient `L(c, h)` at levels `0..=n_max` (ranks of the Gram matrices).
pub fn simple_graded_dims(c: &Rational, h: &Rational, n_max: u32) -> Vec<usize> {
    let verma = Verma::new(c.clone(), h.clone());
    (0..=n_max).map(|n| linalg::rank(&gram_with(&verma, n))).collect()
}

/// Radical of the Shapovalov form at one level, stored as reduced rows so that vectors
/// can be brought to a normal form modulo the maximal submodule.
#[derive(Clone, Debug)]
pub struct LevelRadical {
    basis: Vec<Partition>,
    rows: Vec<(Partition, SparseVec<Partition>)>,
}

impl LevelRadical {
    pub fn new(verma: &Verma, n: u32) -> Self {
        let basis = partitions(n);
        let g = gram_with(verma, n);
        let ker = linalg::kernel(&g, basis.len());
        let mut e = Echelon::new();
        for k in &ker {
            e.insert(k.iter().enumerate());
        }
        let rows = e
            .reduced_rows()
            .into_iter()
            .map(|(p, row)| {
                let v = row.into_iter().map(|(j, x)| (basis[j].clone(), x)).collect();
                (basis[p].clone(), v)
            })
            .collect();
        LevelRadical { basis, rows }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn quotient_dim(&self) -> usize {
        self.basis.len() - self.rows.len()
    }

    /// Representative with zero coefficients on the pivot partitions.
    pub fn reduce(&self, v: &SparseVec<Partition>) -> SparseVec<Partition> {
        let mut out = v.clone();
        for (p, row) in &self.rows {
            let c = out.get(p);
            if !c.is_zero() {
                out.add_scaled(row, &-c);
            }
        }
        out
    }

    pub fn is_pivot(&self, p: &Partition) -> bool {
        self.rows.iter().any(|(q, _)| q == p)
    }
}

/// Gram determinant at level `n`.
pub fn gram_determinant(c: &Rational, h: &Rational, n: u32) -> Rational {
    linalg::determinant(&gram_matrix(c, h, n))
}
