use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{domain, Error, Result};
use crate::exact::partitions::{partitions, strict_odd_sets, Partition};
use crate::exact::rational::{is_integer, to_i64};
use crate::exact::{q, qi, Rational, SparseVec};
use crate::modekernel::{reorder_sign, Algebra, GradedModule};
use crate::virasoro::{LevelRadical, Verma};

/// Which Virasoro module sits in the first tensor factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum VirasoroFactor {
    Verma,
    Simple,
}

/// `(ℓ, h, λ)` and the choice of Virasoro factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeFieldSpec {
    pub ell: Rational,
    pub h: Rational,
    pub lambda: Rational,
    pub factor: VirasoroFactor,
}

impl FreeFieldSpec {
    pub fn verma(ell: Rational, h: Rational, lambda: Rational) -> Self {
        FreeFieldSpec { ell, h, lambda, factor: VirasoroFactor::Verma }
    }

    pub fn simple(ell: Rational, h: Rational, lambda: Rational) -> Self {
        FreeFieldSpec { ell, h, lambda, factor: VirasoroFactor::Simple }
    }
}

/// `c_ℓ = 1 − 6(ℓ+1)²/(ℓ+2)`
pub fn c_ell(ell: &Rational) -> Rational {
    let e1 = ell + qi(1);
    qi(1) - qi(6) * &e1 * &e1 / (ell + qi(2))
}

/// Norm of `X`: `−8(ℓ+2)/ℓ²`.
pub fn x_norm(ell: &Rational) -> Rational {
    -qi(8) * (ell + qi(2)) / (ell * ell)
}

pub(crate) fn check_ell(ell: &Rational) -> Result<()> {
    if ell.is_zero() || *ell == qi(-2) {
        return domain(format!("ℓ = {ell} is critical; ℓ ∉ {{0, −2}} required"));
    }
    Ok(())
}

/// `L_{−A} X_{−C} ψ⁺_{−B} ψ⁻_{−B̃} z`; fermion sets are stored doubled and strictly decreasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FfMonomial {
    pub a: Partition,
    pub c: Partition,
    pub b: Vec<u32>,
    pub bt: Vec<u32>,
}

impl FfMonomial {
    pub fn top() -> Self {
        FfMonomial { a: vec![], c: vec![], b: vec![], bt: vec![] }
    }

    /// Weight above `z`.
    pub fn depth(&self) -> Rational {
        let ints: u32 = self.a.iter().chain(&self.c).sum();
        let halves: u32 = self.b.iter().chain(&self.bt).sum();
        qi(ints as i64) + q(halves as i64, 2)
    }

    /// `J₀`-charge relative to `z`.
    pub fn charge(&self) -> i64 {
        self.b.len() as i64 - self.bt.len() as i64
    }
}

fn fmt_half(x: u32) -> String {
    format!("{x}/2")
}

impl fmt::Display for FfMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        parts.extend(self.a.iter().map(|n| format!("L_{{-{n}}}")));
        parts.extend(self.c.iter().map(|n| format!("X_{{-{n}}}")));
        parts.extend(self.b.iter().map(|&n| format!("ψ+_{{-{}}}", fmt_half(n))));
        parts.extend(self.bt.iter().map(|&n| format!("ψ-_{{-{}}}", fmt_half(n))));
        parts.push("z".into());
        write!(f, "{}", parts.join(" "))
    }
}

pub type FFVector = SparseVec<FfMonomial>;

/// `M_h ⊗ F ⊗ π^X_λ` as a module for the free-field algebra, graded by the
/// N=2 conformal weight (`ψ⁺` of weight 3/2, `ψ⁻` of weight −1/2).
pub struct FreeFieldModule {
    spec: FreeFieldSpec,
    algebra: Algebra,
    verma: Verma,
    kappa: Rational,
    radicals: Mutex<HashMap<u32, Arc<LevelRadical>>>,
}

fn half_index(n: &Rational) -> Result<i64> {
    let d = n * qi(2);
    if !is_integer(&d) || is_integer(n) {
        return Err(Error::Domain(format!("fermion mode {n} is not half-integral")));
    }
    Ok(to_i64(&d).unwrap())
}

fn int_index(n: &Rational) -> Result<i64> {
    to_i64(n).ok_or_else(|| Error::Domain(format!("bosonic mode {n} is not integral")))
}

/// Inserts `x` into a strictly decreasing list; returns the number of entries passed.
fn insert_strict(set: &[u32], x: u32) -> Option<(Vec<u32>, usize)> {
    if set.contains(&x) {
        return None;
    }
    let pos = set.iter().take_while(|&&y| y > x).count();
    let mut out = set.to_vec();
    out.insert(pos, x);
    Some((out, pos))
}

fn remove_strict(set: &[u32], x: u32) -> Option<(Vec<u32>, usize)> {
    let pos = set.iter().position(|&y| y == x)?;
    let mut out = set.to_vec();
    out.remove(pos);
    Some((out, pos))
}

impl FreeFieldModule {
    pub fn new(spec: FreeFieldSpec) -> Result<Self> {
        check_ell(&spec.ell)?;
        let kappa = x_norm(&spec.ell);
        let c = c_ell(&spec.ell);
        Ok(FreeFieldModule {
            algebra: Algebra::free_field(c.clone(), kappa.clone()),
            verma: Verma::new(c, spec.h.clone()),
            kappa,
            spec,
            radicals: Mutex::new(HashMap::new()),
        })
    }

    pub fn spec(&self) -> &FreeFieldSpec {
        &self.spec
    }

    pub fn kappa(&self) -> &Rational {
        &self.kappa
    }

    fn radical(&self, n: u32) -> Arc<LevelRadical> {
        if let Some(r) = self.radicals.lock().unwrap().get(&n) {
            return r.clone();
        }
        let r = Arc::new(LevelRadical::new(&self.verma, n));
        self.radicals.lock().unwrap().insert(n, r.clone());
        r
    }

    /// L-parts allowed at level `n`: all partitions, or the non-pivot ones of the simple quotient.
    pub fn l_basis(&self, n: u32) -> Vec<Partition> {
        let all = partitions(n);
        match self.spec.factor {
            VirasoroFactor::Verma => all,
            VirasoroFactor::Simple => {
                let rad = self.radical(n);
                all.into_iter().filter(|p| !rad.is_pivot(p)).collect()
            }
        }
    }

    fn reduce_l(&self, v: SparseVec<Partition>) -> SparseVec<Partition> {
        match self.spec.factor {
            VirasoroFactor::Verma => v,
            VirasoroFactor::Simple => {
                let Some((p, _)) = v.iter().next() else { return v };
                let n: u32 = p.iter().sum();
                self.radical(n).reduce(&v)
            }
        }
    }

    /// Every basis monomial at `depth`, optionally of a fixed relative charge.
    pub fn basis(&self, depth: &Rational, charge: Option<i64>) -> Vec<FfMonomial> {
        let twice = (depth * qi(2)).to_integer().to_u32();
        let Some(twice) = twice.filter(|_| is_integer(&(depth * qi(2))) && depth >= &Rational::zero()) else {
            return vec![];
        };
        let mut out = Vec::new();
        for ferm in 0..=twice {
            if (twice - ferm) % 2 == 1 {
                continue;
            }
            let bos = (twice - ferm) / 2;
            for fb in 0..=ferm {
                let bsets = strict_odd_sets(fb);
                let btsets = strict_odd_sets(ferm - fb);
                for b in &bsets {
                    for bt in &btsets {
                        let ch = b.len() as i64 - bt.len() as i64;
                        if charge.is_some_and(|c| c != ch) {
                            continue;
                        }
                        for na in 0..=bos {
                            for a in self.l_basis(na) {
                                for c in partitions(bos - na) {
                                    out.push(FfMonomial { a: a.clone(), c, b: b.clone(), bt: bt.clone() });
                                }
                            }
                        }
                    }
                }
            }
        }
        out.sort();
        out
    }

    /// All monomials of depth at most `level_max` (a multiple of 1/2).
    pub fn basis_up_to(&self, level_max: &Rational) -> Vec<FfMonomial> {
        let mut out = Vec::new();
        let mut d = Rational::zero();
        while &d <= level_max {
            out.extend(self.basis(&d, None));
            d += q(1, 2);
        }
        out
    }

    fn act_l(&self, n: i64, m: &FfMonomial) -> FFVector {
        let v = self.reduce_l(self.verma.act(n, &m.a));
        v.iter()
            .map(|(a, c)| (FfMonomial { a: a.clone(), ..m.clone() }, c.clone()))
            .collect()
    }

    fn act_x(&self, n: i64, m: &FfMonomial) -> FFVector {
        match n {
            0 => SparseVec::term(m.clone(), self.spec.lambda.clone()),
            n if n < 0 => {
                let mut c = m.c.clone();
                let pos = c.iter().take_while(|&&y| y as i64 >= -n).count();
                c.insert(pos, (-n) as u32);
                SparseVec::basis(FfMonomial { c, ..m.clone() })
            }
            n => {
                let k = m.c.iter().filter(|&&y| y as i64 == n).count();
                if k == 0 {
                    return SparseVec::new();
                }
                let mut c = m.c.clone();
                let pos = c.iter().position(|&y| y as i64 == n).unwrap();
                c.remove(pos);
                SparseVec::term(FfMonomial { c, ..m.clone() }, &self.kappa * qi(n) * qi(k as i64))
            }
        }
    }

    fn act_psi_plus(&self, twice: i64, m: &FfMonomial) -> FFVector {
        if twice < 0 {
            match insert_strict(&m.b, (-twice) as u32) {
                Some((b, pos)) => SparseVec::term(FfMonomial { b, ..m.clone() }, reorder_sign(pos)),
                None => SparseVec::new(),
            }
        } else {
            match remove_strict(&m.bt, twice as u32) {
                Some((bt, pos)) => SparseVec::term(FfMonomial { bt, ..m.clone() }, reorder_sign(m.b.len() + pos)),
                None => SparseVec::new(),
            }
        }
    }

    fn act_psi_minus(&self, twice: i64, m: &FfMonomial) -> FFVector {
        if twice < 0 {
            match insert_strict(&m.bt, (-twice) as u32) {
                Some((bt, pos)) => SparseVec::term(FfMonomial { bt, ..m.clone() }, reorder_sign(m.b.len() + pos)),
                None => SparseVec::new(),
            }
        } else {
            match remove_strict(&m.b, twice as u32) {
                Some((b, pos)) => SparseVec::term(FfMonomial { b, ..m.clone() }, reorder_sign(pos)),
                None => SparseVec::new(),
            }
        }
    }
}

impl GradedModule for FreeFieldModule {
    type Basis = FfMonomial;

    fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    fn depth(&self, b: &FfMonomial) -> Rational {
        b.depth()
    }

    fn act_generator(&self, gen: usize, n: &Rational, b: &FfMonomial) -> Result<FFVector> {
        match gen {
            0 => Ok(self.act_l(int_index(n)?, b)),
            1 => Ok(self.act_x(int_index(n)?, b)),
            2 => Ok(self.act_psi_plus(half_index(n)?, b)),
            3 => Ok(self.act_psi_minus(half_index(n)?, b)),
            _ => Err(Error::Domain(format!("free-field generator index {gen} out of range"))),
        }
    }
}
