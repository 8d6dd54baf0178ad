use std::collections::BTreeMap;

use num_traits::Zero;

use super::rational::Rational;

/// Sparse vector over an ordered basis with exact coefficients; zero entries are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SparseVec<K: Ord> {
    entries: BTreeMap<K, Rational>,
}

impl<K: Ord> Default for SparseVec<K> {
    fn default() -> Self {
        SparseVec { entries: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> SparseVec<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn basis(k: K) -> Self {
        Self::term(k, Rational::from_integer(1.into()))
    }

    pub fn term(k: K, c: Rational) -> Self {
        let mut v = Self::new();
        v.add_term(k, c);
        v
    }

    pub fn add_term(&mut self, k: K, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.entries.get_mut(&k) {
            Some(x) => {
                *x += c;
                if x.is_zero() {
                    self.entries.remove(&k);
                }
            }
            None => {
                self.entries.insert(k, c);
            }
        }
    }

    /// `self += c · other`
    pub fn add_scaled(&mut self, other: &Self, c: &Rational) {
        if c.is_zero() {
            return;
        }
        for (k, x) in &other.entries {
            self.add_term(k.clone(), x * c);
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (k, x) in &other.entries {
            self.add_term(k.clone(), x.clone());
        }
    }

    pub fn scaled(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::new();
        }
        SparseVec { entries: self.entries.iter().map(|(k, x)| (k.clone(), x * c)).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &Rational::from_integer((-1).into()));
        out
    }

    pub fn get(&self, k: &K) -> Rational {
        self.entries.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &Rational)> {
        self.entries.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.entries.keys()
    }

    /// Applies a linear map given on basis elements.
    pub fn map_linear<K2: Ord + Clone, E>(
        &self,
        mut f: impl FnMut(&K) -> Result<SparseVec<K2>, E>,
    ) -> Result<SparseVec<K2>, E> {
        let mut out = SparseVec::new();
        for (k, c) in &self.entries {
            let img = f(k)?;
            out.add_scaled(&img, c);
        }
        Ok(out)
    }
}

impl<K: Ord + Clone> FromIterator<(K, Rational)> for SparseVec<K> {
    fn from_iter<I: IntoIterator<Item = (K, Rational)>>(iter: I) -> Self {
        let mut v = SparseVec::new();
        for (k, c) in iter {
            v.add_term(k, c);
        }
        v
    }
}
