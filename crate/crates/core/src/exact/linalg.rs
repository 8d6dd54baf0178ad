//! Fraction-free exact linear algebra.
//!
//! Rows are cleared of denominators and kept primitive (content divided out), so
//! elimination never builds nested fractions. Pivots are chosen by the smallest
//! bit size among the candidate entries.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::Rational;

pub type IntRow = BTreeMap<usize, BigInt>;

fn make_primitive(row: &mut IntRow) {
    let mut g = BigInt::zero();
    for x in row.values() {
        g = g.gcd(x);
        if g.is_one() {
            break;
        }
    }
    if !g.is_zero() && !g.is_one() {
        for x in row.values_mut() {
            *x /= &g;
        }
    }
}

/// Clears denominators of a rational row and divides by the content.
pub fn to_int_row<'a, I>(entries: I) -> IntRow
where
    I: IntoIterator<Item = (usize, &'a Rational)>,
{
    let entries: Vec<(usize, &Rational)> = entries.into_iter().filter(|(_, x)| !x.is_zero()).collect();
    let mut l = BigInt::one();
    for (_, x) in &entries {
        l = l.lcm(x.denom());
    }
    let mut row: IntRow = entries
        .into_iter()
        .map(|(j, x)| (j, x.numer() * (&l / x.denom())))
        .collect();
    make_primitive(&mut row);
    row
}

/// Incrementally built echelon basis of a row space.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    /// `(pivot column, row)` in insertion order; each row vanishes at earlier pivot columns.
    rows: Vec<(usize, IntRow)>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.iter().map(|(p, _)| *p)
    }

    fn reduce(&self, mut row: IntRow) -> IntRow {
        for (p, prow) in &self.rows {
            let Some(a) = row.get(p).cloned() else { continue };
            let b = &prow[p];
            let g = a.gcd(b);
            let fa = b / &g;
            let fb = &a / &g;
            let mut out = IntRow::new();
            for (j, x) in &row {
                out.insert(*j, x * &fa);
            }
            for (j, y) in prow {
                let e = out.entry(*j).or_insert_with(BigInt::zero);
                *e -= y * &fb;
            }
            out.retain(|_, x| !x.is_zero());
            make_primitive(&mut out);
            row = out;
            if row.is_empty() {
                break;
            }
        }
        row
    }

    /// Adds a row; returns `true` when it enlarged the span.
    pub fn insert_int(&mut self, row: IntRow) -> bool {
        let row = self.reduce(row);
        if row.is_empty() {
            return false;
        }
        let pivot = row
            .iter()
            .min_by_key(|(j, x)| (x.abs().bits(), **j))
            .map(|(j, _)| *j)
            .unwrap();
        self.rows.push((pivot, row));
        true
    }

    pub fn insert<'a, I>(&mut self, entries: I) -> bool
    where
        I: IntoIterator<Item = (usize, &'a Rational)>,
    {
        self.insert_int(to_int_row(entries))
    }

    pub fn contains<'a, I>(&self, entries: I) -> bool
    where
        I: IntoIterator<Item = (usize, &'a Rational)>,
    {
        self.reduce(to_int_row(entries)).is_empty()
    }

    /// Fully reduced rational rows, one per pivot, each with 1 at its pivot and 0 at the other pivots.
    pub fn reduced_rows(&self) -> Vec<(usize, BTreeMap<usize, Rational>)> {
        let mut rows: Vec<(usize, BTreeMap<usize, Rational>)> = self
            .rows
            .iter()
            .map(|(p, r)| {
                let d = Rational::from_integer(r[p].clone());
                (*p, r.iter().map(|(j, x)| (*j, Rational::from_integer(x.clone()) / &d)).collect())
            })
            .collect();
        for i in (0..rows.len()).rev() {
            let (p, prow) = rows[i].clone();
            for (k, (_, row)) in rows.iter_mut().enumerate() {
                if k == i {
                    continue;
                }
                if let Some(a) = row.get(&p).cloned() {
                    for (j, y) in &prow {
                        let e = row.entry(*j).or_insert_with(Rational::zero);
                        *e -= &a * y;
                    }
                    row.retain(|_, x| !x.is_zero());
                }
            }
        }
        rows
    }
}

/// Rank of a dense rational matrix.
pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let mut e = Echelon::new();
    for r in rows {
        e.insert(r.iter().enumerate());
    }
    e.rank()
}

/// Basis of the right kernel `{x : A x = 0}` of a dense matrix with `ncols` columns.
pub fn kernel(rows: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    let mut e = Echelon::new();
    for r in rows {
        e.insert(r.iter().enumerate());
    }
    let reduced = e.reduced_rows();
    let pivots: Vec<usize> = reduced.iter().map(|(p, _)| *p).collect();
    let mut basis = Vec::new();
    for f in 0..ncols {
        if pivots.contains(&f) {
            continue;
        }
        let mut x = vec![Rational::zero(); ncols];
        x[f] = Rational::one();
        for (p, row) in &reduced {
            if let Some(a) = row.get(&f) {
                x[*p] = -a.clone();
            }
        }
        basis.push(x);
    }
    basis
}

/// Determinant by fraction-free (Bareiss) elimination.
pub fn determinant(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    if n == 0 {
        return Rational::one();
    }
    let mut scale = Rational::one();
    let mut a: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for row in m {
        let mut l = BigInt::one();
        for x in row {
            l = l.lcm(x.denom());
        }
        scale *= Rational::from_integer(l.clone());
        a.push(row.iter().map(|x| x.numer() * (&l / x.denom())).collect());
    }
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n {
        let piv = (k..n)
            .filter(|&i| !a[i][k].is_zero())
            .min_by_key(|&i| a[i][k].abs().bits());
        let Some(piv) = piv else { return Rational::zero() };
        if piv != k {
            a.swap(piv, k);
            sign = -sign;
        }
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let det = Rational::from_integer(a[n - 1][n - 1].clone()) / scale;
    if sign < 0 {
        -det
    } else {
        det
    }
}
