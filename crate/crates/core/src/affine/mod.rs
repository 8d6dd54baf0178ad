//! Weight modules of `L_k(sl₂)` at admissible level: labels, identifications,
//! spectral flow, blocks, Loewy data and characters.

mod blocks;
mod characters;
mod label;
mod normal;
mod structure;

pub use blocks::{block_member, block_member_raw, block_of, BlockId};
pub use characters::{
    character, flow_character, leading_exponents, level1_character, relaxed_anchor, relaxed_bound,
    relaxed_character, relaxed_character_on, CharacterTarget, Truncation,
};
pub use label::{lambda_allowed, Kind, ModuleLabel};
pub use normal::{enumerate_simples, normal_form, spectral_flow};
pub use structure::{structure_of, ShortExact, StructureData};
