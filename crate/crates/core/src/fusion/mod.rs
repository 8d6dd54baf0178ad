//! Fusion with ordinary modules and the coset branching rules.

mod branching;
mod fuse;
#[cfg(test)]
mod tests;

pub use branching::{
    branch, branching_char_verify, branching_residual, coset_pair, induct_decompose, residual_term, underline,
    BranchingCheck, BranchingDecomposition, BranchingParams,
};
pub use fuse::{fuse, FusionDecomposition};
