//! Mode calculus for lower-bounded modules: generator bracket tables, composite
//! fields (normal-ordered products, derivatives, sums, scalar multiples) and the
//! iterate expansion giving their modes.
//!
//! Modes are weight-adjusted throughout: for a field of weight `Δ`,
//! `A(z) = Σ A_n z^{−n−Δ}` and `A_n` lowers the conformal weight by `n`.

pub mod algebra;
pub mod engine;
pub mod field;
pub mod sign;

pub use algebra::{Algebra, Bracket, GeneratorSpec, Mode, ModeCombination, Moding};
pub use engine::{GradedModule, ModeEngine};
pub use field::{FieldArena, FieldId, FieldNode};
pub use sign::{koszul, reorder_sign, Parity};

#[cfg(test)]
mod tests;
