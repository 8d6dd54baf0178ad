//! Exact rational arithmetic, truncated formal series in `q` and `(z, q)`,
//! the special series `η` and `δ(z²)`, and fraction-free linear algebra.

pub mod linalg;
pub mod partitions;
pub mod rational;
pub mod series;
pub mod special;
pub mod twovar;
pub mod vector;

pub use rational::{fmt_rational, parse_rational, q, qi, Rational};
pub use series::PuiseuxSeries;
pub use special::{eta, eta_inverse, formal_delta};
pub use twovar::TwoVarCharacter;
pub use vector::SparseVec;
