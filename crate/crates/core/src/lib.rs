//! Binary locally repairable codes with multi-erasure recovery.
//!
//! Codes are described by parity-check matrices over GF(2). The crate builds
//! the code families of [`constructions`], decides `(r, t)` sequential and
//! parallel recovery in [`recovery`], and evaluates block-length and rate
//! bounds in [`bounds`].

pub mod bounds;
pub mod code;
pub mod combinatorics;
pub mod constructions;
pub mod error;
pub mod field;
pub mod gf2;
pub mod recovery;
pub mod tables;

pub use code::{CodeReport, LinearCode, RecoveryMode, VerifiedStatus};
pub use constructions::{BuiltCode, Claim, ConstructionSpec, Expected};
pub use error::{LrcError, Result};
pub use gf2::{BitMatrix, BitVector};
pub use recovery::{
    check_parallel, verify_sequential, verify_sequential_sampled, ErasurePattern,
    RecoveryCertificate, VerificationReport,
};
