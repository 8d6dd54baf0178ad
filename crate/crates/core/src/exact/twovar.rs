use std::collections::BTreeMap;

use num_traits::One;
use serde_json::{json, Value};

use super::rational::{fmt_rational, is_integer, qi, rem_euclid, Rational};
use super::series::PuiseuxSeries;
use crate::error::{Error, Result};

/// Formal character `Σ_μ z^μ f_μ(q)` with `μ` in one coset `μ₀ + 2ℤ` inside a closed window.
///
/// z-exponents outside the window are unrepresented. Inside the window a missing
/// exponent means the coefficient is exactly zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoVarCharacter {
    coset: Rational,
    window: (Rational, Rational),
    terms: BTreeMap<Rational, PuiseuxSeries>,
}

impl TwoVarCharacter {
    pub fn new(coset: Rational, window: (Rational, Rational)) -> Self {
        let two = qi(2);
        TwoVarCharacter { coset: rem_euclid(&coset, &two), window, terms: BTreeMap::new() }
    }

    pub fn coset(&self) -> &Rational {
        &self.coset
    }

    pub fn window(&self) -> &(Rational, Rational) {
        &self.window
    }

    pub fn in_window(&self, z: &Rational) -> bool {
        z >= &self.window.0 && z <= &self.window.1
    }

    fn in_coset(&self, z: &Rational) -> bool {
        is_integer(&((z - &self.coset) / qi(2)))
    }

    /// The z-exponents of the coset lying in the window, ascending.
    pub fn lattice_points(&self) -> Vec<Rational> {
        let two = qi(2);
        let lo = &self.window.0;
        let k = ((lo - &self.coset) / &two).ceil();
        let mut z = &self.coset + k * &two;
        let mut out = Vec::new();
        while z <= self.window.1 {
            out.push(z.clone());
            z += &two;
        }
        out
    }

    pub fn insert(&mut self, z: Rational, f: PuiseuxSeries) -> Result<()> {
        if !self.in_coset(&z) {
            return Err(Error::Domain(format!("z-exponent {z} outside coset {} + 2Z", self.coset)));
        }
        if !self.in_window(&z) {
            return Err(Error::Domain(format!(
                "z-exponent {z} outside window [{}, {}]",
                self.window.0, self.window.1
            )));
        }
        self.terms.insert(z, f);
        Ok(())
    }

    pub fn get(&self, z: &Rational) -> Option<&PuiseuxSeries> {
        self.terms.get(z)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Rational, &PuiseuxSeries)> {
        self.terms.iter()
    }

    /// Restricts to a sub-window.
    pub fn crop(&self, window: (Rational, Rational)) -> Result<Self> {
        let lo = if window.0 > self.window.0 { window.0 } else { self.window.0.clone() };
        let hi = if window.1 < self.window.1 { window.1 } else { self.window.1.clone() };
        if lo > hi {
            return Err(Error::Truncation("empty z-window after cropping".into()));
        }
        let terms = self
            .terms
            .iter()
            .filter(|(z, _)| **z >= lo && **z <= hi)
            .map(|(z, f)| (z.clone(), f.clone()))
            .collect();
        Ok(TwoVarCharacter { coset: self.coset.clone(), window: (lo, hi), terms })
    }

    /// Multiplication by a z-free series; acts diagonally on z-exponents.
    pub fn mul_series(&self, f: &PuiseuxSeries) -> Result<Self> {
        let mut out = TwoVarCharacter { terms: BTreeMap::new(), ..self.clone() };
        for (z, g) in &self.terms {
            out.terms.insert(z.clone(), g.mul(f)?);
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = self.clone();
        for g in out.terms.values_mut() {
            *g = g.scale(c);
        }
        out
    }

    /// Multiplication by `z^e`.
    pub fn shift_z(&self, e: &Rational) -> Self {
        TwoVarCharacter {
            coset: rem_euclid(&(&self.coset + e), &qi(2)),
            window: (&self.window.0 + e, &self.window.1 + e),
            terms: self.terms.iter().map(|(z, f)| (z + e, f.clone())).collect(),
        }
    }

    /// Sum on the intersection of the two windows.
    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.coset != other.coset {
            return Err(Error::Domain(format!(
                "adding characters on different cosets {} and {}",
                self.coset, other.coset
            )));
        }
        let lo = if self.window.0 > other.window.0 { &self.window.0 } else { &other.window.0 };
        let hi = if self.window.1 < other.window.1 { &self.window.1 } else { &other.window.1 };
        if lo > hi {
            return Err(Error::Truncation("disjoint z-windows".into()));
        }
        let mut out = TwoVarCharacter::new(self.coset.clone(), (lo.clone(), hi.clone()));
        for z in out.lattice_points() {
            let f = match (self.terms.get(&z), other.terms.get(&z)) {
                (Some(a), Some(b)) => a.add(b)?,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => continue,
            };
            out.terms.insert(z, f);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-Rational::one()))
    }

    /// Product with a character whose unrepresented z-terms are negligible
    /// (for instance a theta quotient whose window covers every term below its cutoff).
    /// The result window is the range where every stored term of `other` meets the
    /// window of `self`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        let lo = &self.window.0 + &other.window.1;
        let hi = &self.window.1 + &other.window.0;
        if lo > hi {
            return Err(Error::Truncation(
                "z-window of the first factor is too narrow for the product".into(),
            ));
        }
        let mut out = TwoVarCharacter::new(&self.coset + &other.coset, (lo, hi));
        for z in out.lattice_points() {
            let mut acc: Option<PuiseuxSeries> = None;
            for (b, g) in &other.terms {
                let a = &z - b;
                if let Some(f) = self.terms.get(&a) {
                    let p = f.mul(g)?;
                    acc = Some(match acc {
                        Some(s) => s.add(&p)?,
                        None => p,
                    });
                }
            }
            if let Some(s) = acc {
                out.terms.insert(z, s);
            }
        }
        Ok(out)
    }

    /// Spectral-flow transform `z^{kℓ} q^{kℓ²/4} ch(z q^{ℓ/2}, q)`.
    pub fn flow(&self, l: i64, k: &Rational) -> Result<Self> {
        if l == 0 {
            return Ok(self.clone());
        }
        let lq = qi(l);
        let zshift = k * &lq;
        let qshift = k * &lq * &lq / qi(4);
        let half = &lq / qi(2);
        let mut out = TwoVarCharacter::new(
            &self.coset + &zshift,
            (&self.window.0 + &zshift, &self.window.1 + &zshift),
        );
        for (z, f) in &self.terms {
            let g = f.shift(&(&qshift + z * &half))?;
            out.terms.insert(z + &zshift, g);
        }
        Ok(out)
    }

    /// Lifts every stored series to the exponent lattice `(1/d)ℤ`.
    pub fn with_bound(&self, d: u64) -> Result<Self> {
        let mut out = self.clone();
        for g in out.terms.values_mut() {
            *g = g.clone().with_bound(d)?;
        }
        Ok(out)
    }

    /// True when every stored q-series vanishes below its own cutoff.
    pub fn is_zero(&self) -> bool {
        self.terms.values().all(|f| f.is_zero())
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(z, f)| {
                json!({
                    "z": fmt_rational(z),
                    "cutoff": f.cutoff().map(fmt_rational),
                    "q": f.to_json(),
                })
            })
            .collect();
        json!({
            "coset": fmt_rational(&self.coset),
            "window": [fmt_rational(&self.window.0), fmt_rational(&self.window.1)],
            "terms": terms,
        })
    }
}
