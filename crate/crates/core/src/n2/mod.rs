//! The N=2 superconformal algebra realized on `M_h ⊗ F ⊗ π^X_λ`.
//!
//! The fermions are graded so that `ψ⁺` has weight `3/2` and `ψ⁻` weight `−1/2`;
//! `z` is the vector killed by all positive modes, and `G⁺ = ψ⁺`.

mod c1;
mod checks;
mod module;
mod realization;

#[cfg(test)]
mod tests;

pub use c1::{c1_membership, step_one_target, step_three_spanning_set, step_two_target, C1Space};
pub use checks::{
    ff_apply, generation_check, gminus_factor_check, is_generic, lambda_tau, p_r, top_data, top_eigenvalues,
    basis_at_fermion_level, fermion_level, fermion_vacuum, from_fermion_grading, gminus_scale,
    verify_relations, verify_relations_on, FreeFieldSystem, Mismatch, RelationReport, TopData,
};
pub use module::{c_ell, x_norm, FFVector, FfMonomial, FreeFieldModule, FreeFieldSpec, VirasoroFactor};
pub use realization::{n2_central_charge, N2Generator, N2ModeOp, N2Realization};
