use std::collections::BTreeMap;

use num_traits::{One, ToPrimitive, Zero};
use serde_json::{json, Value};

use super::rational::{denom_u64, fmt_rational, lcm_u64, Rational};
use crate::error::{Error, Result};

/// Truncated formal series in `q` with rational exponents.
///
/// The series stores an absolute cutoff: every exponent `>= cutoff` is unknown.
/// A missing cutoff means the stored terms are exact (a finite sum). The
/// truncation order reported to callers is relative to the leading exponent.
/// An optional denominator bound fixes the exponent lattice `(1/D)ℤ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PuiseuxSeries {
    terms: BTreeMap<Rational, Rational>,
    cutoff: Option<Rational>,
    bound: Option<u64>,
}

fn merge_bounds(a: Option<u64>, b: Option<u64>) -> Result<Option<u64>> {
    match (a, b) {
        (Some(x), Some(y)) if x != y => Err(Error::Lattice(format!(
            "exponent denominators bounded by {x} and {y}"
        ))),
        (Some(x), _) | (_, Some(x)) => Ok(Some(x)),
        (None, None) => Ok(None),
    }
}

fn fits(e: &Rational, bound: Option<u64>) -> bool {
    match bound {
        None => true,
        Some(d) => match denom_u64(e) {
            Some(den) => d % den == 0,
            None => false,
        },
    }
}

fn min_opt(a: Option<Rational>, b: Option<Rational>) -> Option<Rational> {
    match (a, b) {
        (Some(x), Some(y)) => Some(if x < y { x } else { y }),
        (x, None) => x,
        (None, y) => y,
    }
}

impl PuiseuxSeries {
    /// The exact zero series.
    pub fn zero() -> Self {
        PuiseuxSeries { terms: BTreeMap::new(), cutoff: None, bound: None }
    }

    /// Zero known up to (not including) `q^cutoff`.
    pub fn zero_to(cutoff: Rational) -> Self {
        PuiseuxSeries { terms: BTreeMap::new(), cutoff: Some(cutoff), bound: None }
    }

    pub fn one() -> Self {
        Self::monomial(Rational::zero(), Rational::one())
    }

    pub fn monomial(exp: Rational, coeff: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        PuiseuxSeries { terms, cutoff: None, bound: None }
    }

    /// Builds a series from `(exponent, coefficient)` pairs; repeated exponents add up
    /// and terms at or beyond the cutoff are dropped.
    pub fn from_terms<I>(terms: I, cutoff: Option<Rational>) -> Self
    where
        I: IntoIterator<Item = (Rational, Rational)>,
    {
        let mut map: BTreeMap<Rational, Rational> = BTreeMap::new();
        for (e, c) in terms {
            if let Some(cut) = &cutoff {
                if &e >= cut {
                    continue;
                }
            }
            *map.entry(e).or_insert_with(Rational::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        PuiseuxSeries { terms: map, cutoff, bound: None }
    }

    /// Attaches a denominator bound after checking every exponent and the cutoff.
    pub fn with_bound(mut self, d: u64) -> Result<Self> {
        if let Some(old) = self.bound {
            if !d.is_multiple_of(old) {
                return Err(Error::Lattice(format!("bound {d} does not refine {old}")));
            }
        }
        for e in self.terms.keys().chain(self.cutoff.iter()) {
            if !fits(e, Some(d)) {
                return Err(Error::Lattice(format!(
                    "exponent {e} has denominator beyond bound {d}"
                )));
            }
        }
        self.bound = Some(d);
        Ok(self)
    }

    pub fn bound(&self) -> Option<u64> {
        self.bound
    }

    /// Absolute cutoff; `None` for exact finite sums.
    pub fn cutoff(&self) -> Option<&Rational> {
        self.cutoff.as_ref()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Rational, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: &Rational) -> Rational {
        self.terms.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading_exponent(&self) -> Option<&Rational> {
        self.terms.keys().next()
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.terms.values().next()
    }

    /// Truncation order relative to the leading exponent.
    pub fn truncation_order(&self) -> Option<Rational> {
        match (&self.cutoff, self.leading_exponent()) {
            (Some(c), Some(l)) => Some(c - l),
            _ => None,
        }
    }

    /// Lowers the cutoff to `cut` (never raises it).
    pub fn truncate(&self, cut: &Rational) -> Self {
        let cutoff = min_opt(self.cutoff.clone(), Some(cut.clone()));
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| *e < cut)
            .map(|(e, c)| (e.clone(), c.clone()))
            .collect();
        PuiseuxSeries { terms, cutoff, bound: self.bound }
    }

    /// Truncates to `order` above the leading exponent.
    pub fn truncate_relative(&self, order: &Rational) -> Self {
        match self.leading_exponent() {
            Some(l) => {
                let cut = l + order;
                self.truncate(&cut)
            }
            None => self.clone(),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let terms = if c.is_zero() {
            BTreeMap::new()
        } else {
            self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect()
        };
        PuiseuxSeries { terms, cutoff: self.cutoff.clone(), bound: self.bound }
    }

    /// Multiplication by `q^e`.
    pub fn shift(&self, e: &Rational) -> Result<Self> {
        let out = PuiseuxSeries {
            terms: self.terms.iter().map(|(x, c)| (x + e, c.clone())).collect(),
            cutoff: self.cutoff.as_ref().map(|c| c + e),
            bound: self.bound,
        };
        if let Some(b) = self.bound.filter(|_| !fits(e, self.bound)) {
            return Err(Error::Lattice(format!("shift by {e} leaves the lattice with bound {b}")));
        }
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let bound = merge_bounds(self.bound, other.bound)?;
        let cutoff = min_opt(self.cutoff.clone(), other.cutoff.clone());
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            *terms.entry(e.clone()).or_insert_with(Rational::zero) += c;
        }
        terms.retain(|e, c| !c.is_zero() && cutoff.as_ref().is_none_or(|cut| e < cut));
        Ok(PuiseuxSeries { terms, cutoff, bound })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    fn effective_lead(&self) -> Option<Rational> {
        self.leading_exponent().cloned().or_else(|| self.cutoff.clone())
    }

    /// Product truncated at `min(A + b0, B + a0)` where `A, B` are the cutoffs
    /// and `a0, b0` the leading exponents.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        let bound = merge_bounds(self.bound, other.bound)?;
        let (la, lb) = match (self.effective_lead(), other.effective_lead()) {
            (Some(a), Some(b)) => (a, b),
            _ => return Ok(PuiseuxSeries { terms: BTreeMap::new(), cutoff: None, bound }),
        };
        let ca = self.cutoff.as_ref().map(|a| a + &lb);
        let cb = other.cutoff.as_ref().map(|b| b + &la);
        let cutoff = min_opt(ca, cb);
        let mut terms: BTreeMap<Rational, Rational> = BTreeMap::new();
        for (ea, xa) in &self.terms {
            if let Some(cut) = &cutoff {
                if &(ea + &lb) >= cut {
                    break;
                }
            }
            for (eb, xb) in &other.terms {
                let e = ea + eb;
                if let Some(cut) = &cutoff {
                    if &e >= cut {
                        break;
                    }
                }
                *terms.entry(e).or_insert_with(Rational::zero) += xa * xb;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(PuiseuxSeries { terms, cutoff, bound })
    }

    /// Multiplicative inverse to relative order `order` (capped by the known order).
    pub fn inverse_to(&self, order: &Rational) -> Result<Self> {
        let a0 = self
            .leading_exponent()
            .cloned()
            .ok_or_else(|| Error::Domain("cannot invert a zero series".into()))?;
        let c0 = self.leading_coeff().cloned().unwrap();
        let order = match self.truncation_order() {
            Some(known) if &known < order => known,
            _ => order.clone(),
        };
        let mut d: u64 = 1;
        for e in self.terms.keys() {
            let rel = e - &a0;
            d = lcm_u64(d, denom_u64(&rel).ok_or_else(|| Error::Lattice("huge denominator".into()))?);
        }
        let dq = Rational::from_integer(d.into());
        let m = (&order * &dq).ceil().to_integer().to_usize().unwrap_or(0);
        let mut a = vec![Rational::zero(); m.max(1)];
        for (e, c) in &self.terms {
            let j = ((e - &a0) * &dq).to_integer().to_usize().unwrap();
            if j < a.len() {
                a[j] = c.clone();
            }
        }
        let inv0 = Rational::one() / &c0;
        let mut b: Vec<Rational> = Vec::with_capacity(m);
        for n in 0..m {
            if n == 0 {
                b.push(inv0.clone());
                continue;
            }
            let mut s = Rational::zero();
            for j in 1..=n {
                if !a[j].is_zero() && !b[n - j].is_zero() {
                    s += &a[j] * &b[n - j];
                }
            }
            b.push(-s * &inv0);
        }
        let terms = b
            .into_iter()
            .enumerate()
            .map(|(j, c)| (Rational::new((j as i64).into(), (d as i64).into()) - &a0, c));
        let out = Self::from_terms(terms, Some(-&a0 + &order));
        match self.bound {
            Some(bd) => out.with_bound(bd),
            None => Ok(out),
        }
    }

    /// Inverse to the known truncation order.
    pub fn inverse(&self) -> Result<Self> {
        let order = self
            .truncation_order()
            .ok_or_else(|| Error::Truncation("exact series needs an explicit order to invert".into()))?;
        self.inverse_to(&order)
    }

    /// JSON: list of `["exponent", "coefficient"]`, exponents ascending.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(e, c)| json!([fmt_rational(e), fmt_rational(c)]))
                .collect(),
        )
    }

    /// True when every stored coefficient vanishes; the cutoff says how far that is known.
    pub fn vanishes_below(&self, cut: &Rational) -> bool {
        self.terms.keys().all(|e| e >= cut) && self.cutoff.as_ref().is_none_or(|c| c >= cut)
    }
}

impl std::fmt::Display for PuiseuxSeries {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            write!(f, "0")?;
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})q^({e})")?;
        }
        if let Some(cut) = &self.cutoff {
            write!(f, " + O(q^({cut}))")?;
        }
        Ok(())
    }
}
