//! Exhaustive codeword and dual-codeword enumeration.

use rayon::prelude::*;

use crate::code::LinearCode;
use crate::combinatorics::binomial;
use crate::error::{LrcError, Result};

use super::bitvec::BitVector;
use super::matrix::BitMatrix;

/// Default largest dimension for which [`min_distance`] enumerates the message space.
pub const DEFAULT_MIN_DISTANCE_CAP: usize = 26;

/// Thresholds that decide how [`low_weight_dual_words`] enumerates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DualEnumLimits {
    /// Span enumeration is used while `rank(H)` stays at or below this.
    pub max_span_rank: usize,
    /// Support search is used while the largest `C(n, w)`, `w <= wmax`, stays at or below this.
    pub max_supports: u128,
}

impl Default for DualEnumLimits {
    fn default() -> Self {
        Self {
            max_span_rank: 24,
            max_supports: 10_000_000,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DualStrategy {
    /// Span enumeration when the rank allows it, otherwise support search.
    #[default]
    Auto,
    /// Walk all `2^rank` combinations of a row basis of `H`.
    RowSpan,
    /// Walk all supports of weight `<= wmax` and keep those orthogonal to the code.
    SupportSearch,
}

fn row_words(m: &BitMatrix) -> Vec<Vec<u64>> {
    m.rows().iter().map(|r| r.words().to_vec()).collect()
}

#[inline]
fn popcount(words: &[u64]) -> usize {
    words.iter().map(|w| w.count_ones() as usize).sum()
}

/// How many leading basis rows to fix per parallel task.
fn high_bits(k: usize) -> usize {
    if k >= 14 {
        8
    } else {
        0
    }
}

/// Visits every nonzero combination of `basis` whose top `high` rows are
/// selected by `prefix`, stepping through the remaining rows in Gray-code
/// order so each step costs one row XOR.
fn visit_span_chunk<F: FnMut(&[u64])>(
    basis: &[Vec<u64>],
    width: usize,
    high: usize,
    prefix: u64,
    mut f: F,
) {
    let low = basis.len() - high;
    let mut cur = vec![0u64; width];
    for (i, row) in basis[low..].iter().enumerate() {
        if (prefix >> i) & 1 == 1 {
            for (c, r) in cur.iter_mut().zip(row) {
                *c ^= r;
            }
        }
    }
    if prefix != 0 {
        f(&cur);
    }
    for step in 1u64..(1u64 << low) {
        let row = &basis[step.trailing_zeros() as usize];
        for (c, r) in cur.iter_mut().zip(row) {
            *c ^= r;
        }
        f(&cur);
    }
}

/// Minimum Hamming weight over the nonzero vectors spanned by the rows of `basis`,
/// which must be linearly independent.
pub(crate) fn span_min_weight(basis: &BitMatrix) -> Option<usize> {
    let k = basis.nrows();
    if k == 0 {
        return None;
    }
    let rows = row_words(basis);
    let width = rows[0].len();
    let high = high_bits(k);
    (0..1u64 << high)
        .into_par_iter()
        .map(|prefix| {
            let mut best = usize::MAX;
            visit_span_chunk(&rows, width, high, prefix, |w| {
                best = best.min(popcount(w));
            });
            best
        })
        .min()
}

/// Minimum distance of `code` by enumerating all `2^k - 1` nonzero codewords
/// through its generator basis.
pub fn min_distance(code: &LinearCode, cap: usize) -> Result<usize> {
    let k = code.k();
    if k > cap || k >= 64 {
        return Err(LrcError::CapExceeded { k, cap });
    }
    span_min_weight(code.generator()).ok_or(LrcError::TrivialCode)
}

/// Number of candidate supports the support search would have to consider.
pub fn support_search_size(n: usize, wmax: usize) -> u128 {
    (1..=wmax.min(n)).map(|w| binomial(n, w)).max().unwrap_or(0)
}

/// All nonzero dual codewords of weight `<= wmax`, using the default limits
/// and automatic strategy selection.
pub fn low_weight_dual_words(code: &LinearCode, wmax: usize) -> Result<Vec<BitVector>> {
    low_weight_dual_words_with(code, wmax, DualStrategy::Auto, DualEnumLimits::default())
}

/// All nonzero vectors in the row space of `H` with weight `<= wmax`, sorted by
/// weight and then lexicographically by support.
pub fn low_weight_dual_words_with(
    code: &LinearCode,
    wmax: usize,
    strategy: DualStrategy,
    limits: DualEnumLimits,
) -> Result<Vec<BitVector>> {
    let n = code.n();
    let rank = code.rank();
    let span_ok = rank <= limits.max_span_rank && rank < 64;
    let supports = support_search_size(n, wmax);
    let search_ok = supports <= limits.max_supports;
    let infeasible = || LrcError::EnumerationInfeasible {
        rank,
        max_rank: limits.max_span_rank,
        supports,
        max_supports: limits.max_supports,
    };
    let mut words = match strategy {
        DualStrategy::Auto if span_ok => span_words(code, wmax),
        DualStrategy::Auto if search_ok => search_words(code, wmax),
        DualStrategy::RowSpan if span_ok => span_words(code, wmax),
        DualStrategy::SupportSearch if search_ok => search_words(code, wmax),
        _ => return Err(infeasible()),
    };
    words.sort_by(|a, b| a.cmp_weight_support(b));
    words.dedup();
    Ok(words)
}

fn span_words(code: &LinearCode, wmax: usize) -> Vec<BitVector> {
    let (basis, _) = code.parity_check().rref();
    if basis.nrows() == 0 {
        return Vec::new();
    }
    let n = code.n();
    let rows = row_words(&basis);
    let width = rows[0].len();
    let high = high_bits(rows.len());
    (0..1u64 << high)
        .into_par_iter()
        .flat_map_iter(|prefix| {
            let mut found = Vec::new();
            visit_span_chunk(&rows, width, high, prefix, |w| {
                if popcount(w) <= wmax {
                    found.push(BitVector::from_words(n, w.to_vec()));
                }
            });
            found
        })
        .collect()
}

fn search_words(code: &LinearCode, wmax: usize) -> Vec<BitVector> {
    let n = code.n();
    // column j of G packed as a k-bit vector; a support is in the dual iff its columns XOR to zero
    let gen_cols = row_words(&code.generator().transpose());
    let width = gen_cols.first().map_or(0, Vec::len);
    let depth = wmax.min(n);
    if depth == 0 {
        return Vec::new();
    }
    (0..n)
        .into_par_iter()
        .flat_map_iter(|first| {
            let mut found = Vec::new();
            let mut support = vec![first];
            let acc = gen_cols[first].clone();
            extend_support(&gen_cols, width, n, depth, &mut support, acc, &mut found);
            found
        })
        .collect()
}

fn extend_support(
    cols: &[Vec<u64>],
    width: usize,
    n: usize,
    depth: usize,
    support: &mut Vec<usize>,
    acc: Vec<u64>,
    out: &mut Vec<BitVector>,
) {
    if acc.iter().all(|&w| w == 0) {
        out.push(BitVector::from_support(n, support));
    }
    if support.len() == depth {
        return;
    }
    let last = *support.last().expect("support is never empty here");
    for next in last + 1..n {
        let mut child = acc.clone();
        for (c, x) in child.iter_mut().zip(&cols[next]).take(width) {
            *c ^= x;
        }
        support.push(next);
        extend_support(cols, width, n, depth, support, child, out);
        support.pop();
    }
}
