//! Virasoro Verma modules in the PBW basis: Shapovalov forms, singular vectors,
//! graded dimensions of simple quotients, minimal-model characters and fusion,
//! and `C₁`-quotients of highest-weight modules.

mod c1;
mod gram;
mod minimal;
mod verma;

pub use c1::{c1_quotient_dims, HighestWeightSpec};
pub use gram::{find_singular_vectors, gram_determinant, gram_matrix, simple_graded_dims, LevelRadical};
pub use minimal::{minimal_character, minimal_fusion, n_coefficient, MinimalLabel};
pub use verma::{PbwVector, Verma};

#[cfg(test)]
mod tests;
