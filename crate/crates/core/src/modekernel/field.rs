use num_traits::One;

use super::algebra::Algebra;
use super::sign::Parity;
use crate::error::{Error, Result};
use crate::exact::{qi, Rational};

/// Handle to a node of a [`FieldArena`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldId(pub(crate) usize);

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FieldNode {
    Gen(usize),
    Scale(Rational, FieldId),
    Sum(Vec<FieldId>),
    /// `:A B:`
    Normal(FieldId, FieldId),
    Deriv(FieldId),
}

#[derive(Clone, Debug)]
struct Node {
    node: FieldNode,
    weight: Rational,
    parity: Parity,
}

/// Composite fields built from the generators of one algebra.
///
/// Every node records its conformal weight and parity; weights add under normal
/// ordering and grow by one under the derivative.
#[derive(Clone, Debug)]
pub struct FieldArena {
    algebra: Algebra,
    nodes: Vec<Node>,
}

impl FieldArena {
    pub fn new(algebra: Algebra) -> Self {
        FieldArena { algebra, nodes: Vec::new() }
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    fn push(&mut self, node: FieldNode, weight: Rational, parity: Parity) -> FieldId {
        self.nodes.push(Node { node, weight, parity });
        FieldId(self.nodes.len() - 1)
    }

    pub fn node(&self, id: FieldId) -> &FieldNode {
        &self.nodes[id.0].node
    }

    pub fn weight(&self, id: FieldId) -> &Rational {
        &self.nodes[id.0].weight
    }

    pub fn parity(&self, id: FieldId) -> Parity {
        self.nodes[id.0].parity
    }

    pub fn generator(&mut self, name: &str) -> Result<FieldId> {
        let i = self.algebra.index_of(name)?;
        let spec = self.algebra.spec(i).clone();
        Ok(self.push(FieldNode::Gen(i), spec.weight, spec.parity))
    }

    pub fn scale(&mut self, c: Rational, a: FieldId) -> FieldId {
        let (w, p) = (self.weight(a).clone(), self.parity(a));
        self.push(FieldNode::Scale(c, a), w, p)
    }

    /// Sum of fields of equal weight and parity.
    pub fn sum(&mut self, parts: Vec<FieldId>) -> Result<FieldId> {
        let first = *parts.first().ok_or_else(|| Error::Domain("empty field sum".into()))?;
        let (w, p) = (self.weight(first).clone(), self.parity(first));
        for &x in &parts {
            if self.weight(x) != &w || self.parity(x) != p {
                return Err(Error::Domain("field sum of mismatched weight or parity".into()));
            }
        }
        Ok(self.push(FieldNode::Sum(parts), w, p))
    }

    pub fn normal(&mut self, a: FieldId, b: FieldId) -> FieldId {
        let w = self.weight(a) + self.weight(b);
        let p = self.parity(a).times(self.parity(b));
        self.push(FieldNode::Normal(a, b), w, p)
    }

    pub fn deriv(&mut self, a: FieldId) -> FieldId {
        let w = self.weight(a) + Rational::one();
        let p = self.parity(a);
        self.push(FieldNode::Deriv(a), w, p)
    }

    /// `∂^j A / j!`
    pub fn divided_deriv(&mut self, a: FieldId, j: u32) -> FieldId {
        let mut f = a;
        let mut fact = Rational::one();
        for i in 1..=j {
            f = self.deriv(f);
            fact *= qi(i as i64);
        }
        if j > 1 {
            self.scale(Rational::one() / fact, f)
        } else {
            f
        }
    }

    /// Field of the vacuum-module state `x¹_{n₁} x²_{n₂} ⋯ |0⟩` (weight-adjusted modes,
    /// each `n_i ≤ −Δ_i`), via `Y(a_{(−j−1)} b) = :(∂^j a / j!) Y(b):`.
    pub fn state_field(&mut self, word: &[(FieldId, Rational)]) -> Result<FieldId> {
        let (first, rest) = word
            .split_first()
            .ok_or_else(|| Error::Domain("the vacuum itself has no positive weight".into()))?;
        let (a, n) = first;
        let j = -(n + self.weight(*a));
        if !crate::exact::rational::is_integer(&j) || j < Rational::from_integer(0.into()) {
            return Err(Error::Domain(format!("mode {n} does not create from the vacuum")));
        }
        let j = crate::exact::rational::to_i64(&j).unwrap() as u32;
        let head = self.divided_deriv(*a, j);
        if rest.is_empty() {
            Ok(head)
        } else {
            let tail = self.state_field(rest)?;
            Ok(self.normal(head, tail))
        }
    }
}
