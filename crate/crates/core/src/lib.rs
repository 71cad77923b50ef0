//! A decision procedure for Leśniewski's propositional ontology L₁ and its
//! Blass translation into the modal logic K.
//!
//! * [`syntax`]: formulas, parsing, printing, positive and negative parts
//! * [`tableau`]: normal tableaux and Hintikka formulas
//! * [`chains`]: chains, tails and rest of a Hintikka formula
//! * [`translate`]: the Blass and naive translations
//! * [`kripke`]: models, forcing, countermodels and frame audits
//! * [`modal_k`]: K-validity by tableau and by a depth-1 oracle
//! * [`corpus`]: formula enumeration and the faithfulness round trip

pub mod chains;
pub mod corpus;
pub mod kripke;
pub mod modal_k;
pub mod syntax;
pub mod tableau;
pub mod translate;

pub use chains::{
    analyze, chain_quotient, chain_relation, chains_ki, tails_of, ChainAnalysis, ChainError,
};
pub use kripke::{
    audit_variant, countermodel_k, countermodel_variant, forces, forces_at_star, frame_properties,
    KripkeModel,
};
pub use modal_k::{is_valid_k, is_valid_k_depth1, Verdict};
pub use syntax::{parse_l1, parse_modal, L1Formula, ModalFormula, NameVar};
pub use tableau::{build_normal_tableau, first_hintikka_formula, is_hintikka, is_provable_l1};
pub use translate::{blass, naive};
