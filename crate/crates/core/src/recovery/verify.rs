use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::code::{LinearCode, RecoveryMode};
use crate::combinatorics::{binomial, next_colex, BinomialTable};
use crate::error::{LrcError, Result};
use crate::gf2::DualEnumLimits;

use super::peel::{with_mask_table, DualIndex, ErasureMask, MaskTable};
use super::{ErasurePattern, Sampling, VerificationReport};

/// Default largest number of erasure patterns an exhaustive run will accept.
pub const DEFAULT_PATTERN_CAP: u64 = 100_000_000;

const SAMPLE_BLOCK: u64 = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Worker threads; `None` uses the global rayon pool.
    pub workers: Option<usize>,
    pub pattern_cap: u64,
    /// Failing patterns kept in the report.
    pub max_failures: usize,
    pub dual_limits: DualEnumLimits,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            workers: None,
            pattern_cap: DEFAULT_PATTERN_CAP,
            max_failures: 100,
            dual_limits: DualEnumLimits::default(),
        }
    }
}

impl VerifyOptions {
    fn install<T: Send>(&self, job: impl FnOnce() -> T + Send) -> T {
        match self.workers {
            Some(w) => rayon::ThreadPoolBuilder::new()
                .num_threads(w.max(1))
                .build()
                .expect("failed to build worker pool")
                .install(job),
            None => job(),
        }
    }
}

#[derive(Default)]
struct Tally {
    failures: Vec<ErasurePattern>,
    count: u64,
}

impl Tally {
    fn merge(mut self, other: Tally, cap: usize) -> Tally {
        let room = cap.saturating_sub(self.failures.len());
        self.failures.extend(other.failures.into_iter().take(room));
        self.count += other.count;
        self
    }
}

/// Exhaustive `(r, t)` sequential verification with default options.
pub fn verify_sequential(code: &LinearCode, r: usize, t: usize) -> Result<VerificationReport> {
    verify_sequential_with(code, r, t, &VerifyOptions::default())
}

/// Peels every erasure set of size exactly `min(t, n)` in colexicographic order.
///
/// Smaller sets need no separate check: a valid recovery order for a set
/// restricts to a valid order for any subset (drop the steps of positions
/// outside the subset; every remaining word still meets the shrunken erased
/// set in one position).
pub fn verify_sequential_with(
    code: &LinearCode,
    r: usize,
    t: usize,
    opts: &VerifyOptions,
) -> Result<VerificationReport> {
    let start = Instant::now();
    let n = code.n();
    let size = t.min(n);
    let total = binomial(n, size);
    if total > opts.pattern_cap as u128 {
        return Err(LrcError::PatternSpaceTooLarge {
            patterns: total,
            cap: opts.pattern_cap,
        });
    }
    let total = total as u64;
    let index = DualIndex::for_locality(code, r, opts.dual_limits)?;
    let table = BinomialTable::new(n, size);
    let chunk = (total / 1024).clamp(1024, 1 << 20);
    let chunks = total.div_ceil(chunk);
    let cap = opts.max_failures;

    let tally = opts.install(|| {
        with_mask_table!(&index, |masks| {
            (0..chunks)
                .into_par_iter()
                .map(|c| {
                    let lo = c * chunk;
                    let hi = (lo + chunk).min(total);
                    run_rank_range(&masks, &table, n, size, lo, hi, cap)
                })
                .collect::<Vec<_>>()
                .into_iter()
                .fold(Tally::default(), |acc, t| acc.merge(t, cap))
        })
    });

    Ok(VerificationReport {
        source: None,
        mode: RecoveryMode::Sequential,
        r,
        t,
        passed: tally.count == 0,
        total_patterns: total,
        checked_patterns: total,
        failure_count: tally.count,
        failures: tally.failures,
        violations: Vec::new(),
        dual_words: Some(index.words().len()),
        elapsed_micros: start.elapsed().as_micros() as u64,
        sampling: None,
    })
}

fn run_rank_range<M: ErasureMask>(
    masks: &MaskTable<'_, M>,
    table: &BinomialTable,
    n: usize,
    size: usize,
    lo: u64,
    hi: u64,
    cap: usize,
) -> Tally {
    let mut tally = Tally::default();
    let mut subset = vec![0usize; size];
    table.unrank_colex(lo, n, &mut subset);
    let mut scratch = Vec::with_capacity(size);
    for _ in lo..hi {
        scratch.clear();
        scratch.extend_from_slice(&subset);
        if !masks.peel(&mut scratch, |_, _| {}) {
            tally.count += 1;
            if tally.failures.len() < cap {
                tally
                    .failures
                    .push(ErasurePattern::from_sorted(subset.clone()));
            }
        }
        next_colex(&mut subset, n);
    }
    tally
}

/// Sampled `(r, t)` verification with default options.
pub fn verify_sequential_sampled(
    code: &LinearCode,
    r: usize,
    t: usize,
    samples: u64,
    seed: u64,
) -> Result<VerificationReport> {
    verify_sequential_sampled_with(code, r, t, samples, seed, &VerifyOptions::default())
}

/// Peels `samples` uniformly random erasure sets of size `min(t, n)`.
///
/// Draws are independent, so a set may repeat. Samples are generated in
/// fixed-size blocks, each from its own ChaCha stream keyed by `seed`, so the
/// result does not depend on the worker count.
pub fn verify_sequential_sampled_with(
    code: &LinearCode,
    r: usize,
    t: usize,
    samples: u64,
    seed: u64,
    opts: &VerifyOptions,
) -> Result<VerificationReport> {
    if samples == 0 {
        return Err(LrcError::ParameterConstraint(
            "samples must be at least 1".into(),
        ));
    }
    let start = Instant::now();
    let n = code.n();
    let size = t.min(n);
    let total = u64::try_from(binomial(n, size)).unwrap_or(u64::MAX);
    let index = DualIndex::for_locality(code, r, opts.dual_limits)?;
    let blocks = samples.div_ceil(SAMPLE_BLOCK);
    let cap = opts.max_failures;

    let tally = opts.install(|| {
        with_mask_table!(&index, |masks| {
            (0..blocks)
                .into_par_iter()
                .map(|b| {
                    let count = SAMPLE_BLOCK.min(samples - b * SAMPLE_BLOCK);
                    run_sample_block(&masks, n, size, seed, b, count, cap)
                })
                .collect::<Vec<_>>()
                .into_iter()
                .fold(Tally::default(), |acc, t| acc.merge(t, cap))
        })
    });

    Ok(VerificationReport {
        source: None,
        mode: RecoveryMode::Sequential,
        r,
        t,
        passed: tally.count == 0,
        total_patterns: total,
        checked_patterns: samples,
        failure_count: tally.count,
        failures: tally.failures,
        violations: Vec::new(),
        dual_words: Some(index.words().len()),
        elapsed_micros: start.elapsed().as_micros() as u64,
        sampling: Some(Sampling {
            samples,
            seed,
            with_replacement: true,
        }),
    })
}

fn run_sample_block<M: ErasureMask>(
    masks: &MaskTable<'_, M>,
    n: usize,
    size: usize,
    seed: u64,
    block: u64,
    count: u64,
    cap: usize,
) -> Tally {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(block);
    let mut tally = Tally::default();
    let mut scratch = Vec::with_capacity(size);
    for _ in 0..count {
        let mut subset = rand::seq::index::sample(&mut rng, n, size).into_vec();
        subset.sort_unstable();
        scratch.clear();
        scratch.extend_from_slice(&subset);
        if !masks.peel(&mut scratch, |_, _| {}) {
            tally.count += 1;
            if tally.failures.len() < cap {
                tally.failures.push(ErasurePattern::from_sorted(subset));
            }
        }
    }
    tally
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2::BitMatrix;

    fn eq3() -> LinearCode {
        LinearCode::from_parity_check(
            BitMatrix::from_text_rows(&[
                "10000011110000",
                "01000000001111",
                "00100011001100",
                "00010000110011",
                "00001010101010",
                "00000101010101",
            ])
            .unwrap(),
        )
    }

    #[test]
    fn eq3_passes_three_erasures() {
        let rep = verify_sequential(&eq3(), 4, 3).unwrap();
        assert!(rep.passed);
        assert_eq!(rep.total_patterns, 364);
        assert_eq!(rep.checked_patterns, 364);
        assert!(rep.failures.is_empty());
    }

    #[test]
    fn eq3_fails_four_erasures() {
        let code = eq3();
        let rep = verify_sequential(&code, 4, 4).unwrap();
        assert!(!rep.passed);
        assert!(rep.failure_count > 0);
        // some failure is the support of a weight-4 codeword
        let supports_cw = rep.failures.iter().any(|f| {
            let v = crate::gf2::BitVector::from_support(14, f.positions());
            code.parity_check().mul_vec(&v).is_zero()
        });
        assert!(supports_cw);
    }

    #[test]
    fn failures_sorted_by_rank_and_independent_of_workers() {
        let code = eq3();
        let one = VerifyOptions {
            workers: Some(1),
            max_failures: 5,
            ..Default::default()
        };
        let four = VerifyOptions {
            workers: Some(4),
            max_failures: 5,
            ..Default::default()
        };
        let a = verify_sequential_with(&code, 4, 5, &one).unwrap();
        let b = verify_sequential_with(&code, 4, 5, &four).unwrap();
        assert_eq!(a.failures, b.failures);
        assert_eq!(a.failure_count, b.failure_count);
        assert_eq!(a.failures.len(), 5);
    }

    #[test]
    fn pattern_cap_enforced() {
        let opts = VerifyOptions {
            pattern_cap: 100,
            ..Default::default()
        };
        assert_eq!(
            verify_sequential_with(&eq3(), 4, 3, &opts).unwrap_err(),
            LrcError::PatternSpaceTooLarge {
                patterns: 364,
                cap: 100
            }
        );
    }

    #[test]
    fn sampled_is_deterministic() {
        let code = eq3();
        let a = verify_sequential_sampled(&code, 4, 4, 5000, 7).unwrap();
        let b = verify_sequential_sampled_with(
            &code,
            4,
            4,
            5000,
            7,
            &VerifyOptions {
                workers: Some(1),
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(a.failures, b.failures);
        assert_eq!(a.failure_count, b.failure_count);
        assert!(!a.passed);
        let ok = verify_sequential_sampled(&code, 4, 3, 1000, 1).unwrap();
        assert!(ok.passed);
        assert_eq!(ok.sampling.unwrap().samples, 1000);
        assert!(verify_sequential_sampled(&code, 4, 3, 0, 1).is_err());
    }
}
