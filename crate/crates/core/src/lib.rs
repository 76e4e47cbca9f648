//! Exact character computations for simple Lie groups and their flag
//! varieties.
//!
//! Characters live in the group ring `Z[P]` of the weight lattice, written in
//! the fundamental-weight basis. Irreducible characters come from Demazure
//! operators, tensor products from Brauer's formula, and Euler characteristics
//! of homogeneous bundles on `G/B` from a single Demazure sweep. On top of that
//! sit the polyvector-field computations: `χ(∧•T_{G/B}) = ch(V(ρ) ⊗ V(ρ))`, the
//! support of `V(ρ) ⊗ V(ρ)` against the dominance interval below `2ρ`, and
//! lower bounds for the components of `H•(G/B, ∧•T)`.

pub mod bwb;
pub mod character;
pub mod cli;
mod decimal;
pub mod error;
pub mod flag_cohomology;
pub mod rep_theory;
pub mod root_system;

pub use bwb::{bwb_line_bundle, cohomology_support_candidates, BwbResult};
pub use character::{char_mul, demazure_apply, demazure_longest, demazure_word, diamond, CharacterElt};
pub use error::{Error, Result};
pub use flag_cohomology::{euler_characteristic, FlagVariety, GradedCharacter, HhReport, KostantReport};
pub use rep_theory::{
    decompose, freudenthal_character, irreducible_character, rho_character, tensor_character, weyl_dimension,
    Decomposition,
};
pub use root_system::{RootSystem, TypeLabel, Weight, WeylWord};
