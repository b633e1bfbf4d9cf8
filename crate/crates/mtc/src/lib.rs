//! Exact verification toolkit for modular tensor categories.
//!
//! Everything is computed over cyclotomic fields ([`cyclo::CycloNumber`]):
//! modular data axioms, Verlinde fusion rules and fusion-ring analysis,
//! finite SL(2,Z) images, braid eigenvalues, a skeletal Drinfeld-center
//! evaluator for the ½E6 category, and Lie-theoretic exclusion arithmetic.

pub mod braid;
pub mod center;
pub mod data;
pub mod exec;
pub mod fusion;
pub mod liedata;
pub mod linalg;
pub mod moddata;
pub mod report;
pub mod reproduce;
pub mod sl2z;

pub use exec::Exec;
pub use fusion::FusionRing;
pub use linalg::{Field, Mat};
pub use moddata::ModularData;
pub use report::{Report, Status};

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("i/o error: {0}")]
    Io(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("invalid data: {0}")]
    Data(String),
    #[error("not expressible in the working field: {0}")]
    NotExpressible(String),
    #[error("cap of {0} elements exceeded")]
    CapExceeded(usize),
    #[error("unknown label {0}")]
    UnknownLabel(String),
}
