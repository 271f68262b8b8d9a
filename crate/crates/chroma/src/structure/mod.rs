//! Typed representations of the two structures the colorers understand:
//! blowups of the emerald (and its distinguished induced subgraphs) and
//! 7-bracelets, plus realization and recognition.

pub mod bases;
pub mod blowup;
pub mod bracelet;
pub mod json;

pub use blowup::{p_value, recognize_emerald_blowup, BaseId, BlowupSpec};
pub use bracelet::{validate_bracelet, Bag, BraceletSpec, SubBag};

#[derive(Debug, thiserror::Error)]
pub enum StructureError {
    #[error("invalid spec: {0}")]
    InvalidSpec(String),
    #[error("expected base {expected}, got {got}")]
    WrongBase { expected: &'static str, got: &'static str },
}
