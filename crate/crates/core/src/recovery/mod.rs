//! Deciding `(r, t)` sequential and parallel recovery.
//!
//! Sequential recovery is decided by greedy peeling against every dual
//! codeword of weight at most `r + 1`; parallel recovery is a structural
//! check of the stored parity-check rows.

mod classify;
mod parallel;
mod peel;
mod verify;

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::code::{LinearCode, RecoveryMode};
use crate::error::{LrcError, Result};
use crate::gf2::BitVector;

pub use classify::{classify_rate_optimal_t2, RateOptimalClass};
pub use parallel::check_parallel;
pub use peel::{peel, DualIndex, PeelOutcome};
pub use verify::{
    verify_sequential, verify_sequential_sampled, verify_sequential_sampled_with,
    verify_sequential_with, VerifyOptions, DEFAULT_PATTERN_CAP,
};

/// Serde helpers that store 0-based indices as 1-based numbers.
pub(crate) mod one_based {
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &usize, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_u64(*v as u64 + 1)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<usize, D::Error> {
        let v = u64::deserialize(d)?;
        v.checked_sub(1)
            .map(|x| x as usize)
            .ok_or_else(|| serde::de::Error::custom("1-based index must be positive"))
    }
}

/// A set of erased positions, sorted and distinct, each below the block length.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ErasurePattern(Vec<usize>);

impl ErasurePattern {
    pub fn new(positions: impl IntoIterator<Item = usize>, n: usize) -> Result<Self> {
        let mut v: Vec<usize> = positions.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        if let Some(&bad) = v.iter().find(|&&p| p >= n) {
            return Err(LrcError::DimensionMismatch(format!(
                "erased position {bad} outside block length {n}"
            )));
        }
        Ok(Self(v))
    }

    pub(crate) fn from_sorted(v: Vec<usize>) -> Self {
        debug_assert!(v.windows(2).all(|w| w[0] < w[1]));
        Self(v)
    }

    pub fn positions(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.0.iter().map(|p| p + 1).collect()
    }
}

impl fmt::Display for ErasurePattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.one_based().iter().map(usize::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl Serialize for ErasurePattern {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.one_based().serialize(s)
    }
}

impl<'de> Deserialize<'de> for ErasurePattern {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        let mut zero = Vec::with_capacity(v.len());
        for p in v {
            zero.push(
                p.checked_sub(1)
                    .ok_or_else(|| serde::de::Error::custom("positions are 1-based"))?,
            );
        }
        if !zero.windows(2).all(|w| w[0] < w[1]) {
            return Err(serde::de::Error::custom(
                "positions must be strictly increasing",
            ));
        }
        Ok(Self(zero))
    }
}

/// One peeling step: `position` is recovered from dual codeword `word`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecoveryStep {
    #[serde(with = "one_based")]
    pub position: usize,
    pub word: BitVector,
}

/// Ordered witness that an erasure set is sequentially recoverable.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct RecoveryCertificate {
    pub steps: Vec<RecoveryStep>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ReplayError {
    #[error("step {step}: word weight {weight} exceeds r+1")]
    WordTooHeavy { step: usize, weight: usize },
    #[error("step {step}: word is not orthogonal to the code")]
    NotInDual { step: usize },
    #[error("step {step}: position is not currently erased")]
    PositionNotErased { step: usize },
    #[error("step {step}: position is outside the word's support")]
    PositionNotInSupport { step: usize },
    #[error("step {step}: word meets {hits} erased positions")]
    NotSingleIntersection { step: usize, hits: usize },
    #[error("{remaining} positions left unrecovered")]
    Incomplete { remaining: usize },
}

impl RecoveryCertificate {
    /// Re-checks every step from scratch against `code`, independently of
    /// how the certificate was produced.
    pub fn replay(
        &self,
        code: &LinearCode,
        erased: &ErasurePattern,
        r: usize,
    ) -> std::result::Result<(), ReplayError> {
        let n = code.n();
        let mut current = BitVector::from_support(n, erased.positions());
        let generator = code.generator();
        for (step, s) in self.steps.iter().enumerate() {
            let weight = s.word.weight();
            if weight > r + 1 {
                return Err(ReplayError::WordTooHeavy { step, weight });
            }
            if s.word.len() != n || generator.rows().iter().any(|g| g.dot(&s.word)) {
                return Err(ReplayError::NotInDual { step });
            }
            if s.position >= n || !current.get(s.position) {
                return Err(ReplayError::PositionNotErased { step });
            }
            if !s.word.get(s.position) {
                return Err(ReplayError::PositionNotInSupport { step });
            }
            let hits = s.word.and_weight(&current);
            if hits != 1 {
                return Err(ReplayError::NotSingleIntersection { step, hits });
            }
            current.set(s.position, false);
        }
        match current.weight() {
            0 => Ok(()),
            remaining => Err(ReplayError::Incomplete { remaining }),
        }
    }
}

/// A structural defect found by [`check_parallel`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ParallelViolation {
    RowWeight {
        #[serde(with = "one_based")]
        row: usize,
        weight: usize,
        expected: usize,
    },
    ColumnWeight {
        #[serde(with = "one_based")]
        column: usize,
        weight: usize,
        expected: usize,
    },
    RowOverlap {
        #[serde(with = "one_based")]
        row_a: usize,
        #[serde(with = "one_based")]
        row_b: usize,
        shared: usize,
    },
    CountIdentity {
        n: usize,
        t: usize,
        m: usize,
        r: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sampling {
    pub samples: u64,
    pub seed: u64,
    pub with_replacement: bool,
}

/// Outcome of a sequential or parallel verification run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub source: Option<String>,
    pub mode: RecoveryMode,
    pub r: usize,
    pub t: usize,
    pub passed: bool,
    pub total_patterns: u64,
    pub checked_patterns: u64,
    /// Failing erasure sets (sequential) or structural violations (parallel).
    pub failure_count: u64,
    /// Lowest-rank failing patterns, capped.
    pub failures: Vec<ErasurePattern>,
    pub violations: Vec<ParallelViolation>,
    pub dual_words: Option<usize>,
    pub elapsed_micros: u64,
    pub sampling: Option<Sampling>,
}

impl VerificationReport {
    pub fn with_source(mut self, source: impl Into<String>) -> Self {
        self.source = Some(source.into());
        self
    }
}
