//! Exact computations around weight modules of affine `sl₂` at admissible level.
//!
//! * [`exact`] rationals, truncated `q`- and `(z, q)`-series, fraction-free linear algebra
//! * [`modekernel`] bracket tables, composite fields and their modes
//! * [`levels`] admissible levels and central charges
//! * [`virasoro`] Verma modules, singular vectors, minimal models, `C₁`-quotients
//! * [`affine`] the module catalog: labels, spectral flow, blocks, structure, characters
//! * [`fusion`] fusion with ordinary modules and coset branching
//! * [`n2`] the N=2 free-field realization and its checks
//! * [`cli`] the command-line front end

pub mod error;
pub mod exact;
pub mod levels;
pub mod modekernel;
pub mod virasoro;
pub mod affine;
pub mod fusion;
pub mod n2;
pub mod cli;

pub use error::{Error, Result};
