use crate::code::LinearCode;
use crate::error::Result;
use crate::gf2::{low_weight_dual_words_with, BitVector, DualEnumLimits, DualStrategy};

use super::{ErasurePattern, RecoveryCertificate, RecoveryStep};

/// Low-weight dual codewords indexed by the columns they cover.
#[derive(Debug, Clone)]
pub struct DualIndex {
    n: usize,
    words: Vec<BitVector>,
    by_column: Vec<Vec<u32>>,
}

impl DualIndex {
    /// Indexes `words` as given; their order fixes the peeling tie-break.
    pub fn new(n: usize, words: Vec<BitVector>) -> Self {
        let mut by_column = vec![Vec::new(); n];
        for (w, word) in words.iter().enumerate() {
            for p in word.iter_ones() {
                by_column[p].push(w as u32);
            }
        }
        Self {
            n,
            words,
            by_column,
        }
    }

    /// Every dual codeword of weight at most `r + 1`.
    pub fn for_locality(code: &LinearCode, r: usize, limits: DualEnumLimits) -> Result<Self> {
        let words = low_weight_dual_words_with(code, r + 1, DualStrategy::Auto, limits)?;
        Ok(Self::new(code.n(), words))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn words(&self) -> &[BitVector] {
        &self.words
    }

    pub(crate) fn by_column(&self) -> &[Vec<u32>] {
        &self.by_column
    }
}

/// Fixed-width erased-position set used by the peeling hot loop.
pub(crate) trait ErasureMask: Clone + Send + Sync {
    fn empty(n: usize) -> Self;
    fn from_vector(v: &BitVector) -> Self;
    fn insert(&mut self, i: usize);
    fn remove(&mut self, i: usize);
    /// True when `self` meets `erased` exactly in `{pos}`.
    fn meets_only(&self, erased: &Self, pos: usize) -> bool;
}

impl ErasureMask for u64 {
    #[inline]
    fn empty(_: usize) -> Self {
        0
    }
    fn from_vector(v: &BitVector) -> Self {
        v.words().first().copied().unwrap_or(0)
    }
    #[inline]
    fn insert(&mut self, i: usize) {
        *self |= 1 << i;
    }
    #[inline]
    fn remove(&mut self, i: usize) {
        *self &= !(1 << i);
    }
    #[inline]
    fn meets_only(&self, erased: &Self, pos: usize) -> bool {
        self & erased == 1 << pos
    }
}

impl ErasureMask for u128 {
    #[inline]
    fn empty(_: usize) -> Self {
        0
    }
    fn from_vector(v: &BitVector) -> Self {
        let w = v.words();
        let lo = w.first().copied().unwrap_or(0) as u128;
        let hi = w.get(1).copied().unwrap_or(0) as u128;
        lo | (hi << 64)
    }
    #[inline]
    fn insert(&mut self, i: usize) {
        *self |= 1 << i;
    }
    #[inline]
    fn remove(&mut self, i: usize) {
        *self &= !(1 << i);
    }
    #[inline]
    fn meets_only(&self, erased: &Self, pos: usize) -> bool {
        self & erased == 1 << pos
    }
}

impl<const N: usize> ErasureMask for [u64; N] {
    #[inline]
    fn empty(_: usize) -> Self {
        [0; N]
    }
    fn from_vector(v: &BitVector) -> Self {
        let mut out = [0; N];
        for (o, w) in out.iter_mut().zip(v.words()) {
            *o = *w;
        }
        out
    }
    #[inline]
    fn insert(&mut self, i: usize) {
        self[i / 64] |= 1 << (i % 64);
    }
    #[inline]
    fn remove(&mut self, i: usize) {
        self[i / 64] &= !(1 << (i % 64));
    }
    #[inline]
    fn meets_only(&self, erased: &Self, pos: usize) -> bool {
        (0..N).all(|j| {
            let expect = if j == pos / 64 { 1 << (pos % 64) } else { 0 };
            self[j] & erased[j] == expect
        })
    }
}

impl ErasureMask for BitVector {
    fn empty(n: usize) -> Self {
        BitVector::zeros(n)
    }
    fn from_vector(v: &BitVector) -> Self {
        v.clone()
    }
    fn insert(&mut self, i: usize) {
        self.set(i, true);
    }
    fn remove(&mut self, i: usize) {
        self.set(i, false);
    }
    fn meets_only(&self, erased: &Self, pos: usize) -> bool {
        self.get(pos) && self.and_weight(erased) == 1
    }
}

/// Dual words converted to masks, ready for repeated peeling.
pub(crate) struct MaskTable<'a, M> {
    words: Vec<M>,
    by_column: &'a [Vec<u32>],
    n: usize,
}

impl<'a, M: ErasureMask> MaskTable<'a, M> {
    pub(crate) fn new(index: &'a DualIndex) -> Self {
        Self {
            words: index.words().iter().map(M::from_vector).collect(),
            by_column: index.by_column(),
            n: index.n(),
        }
    }

    /// Greedy peeling of `remaining` (sorted ascending), consuming it.
    ///
    /// Each step recovers the lowest erased position that some word meets
    /// alone, using the first such word in index order. Returns whether
    /// every position was recovered; on failure `remaining` holds the
    /// stuck residual.
    ///
    /// Greedy choice is complete: if any valid recovery order exists for a
    /// set E and greedy recovers p first with word h, take a valid order for
    /// E and delete p from it. Every word in that order met the erased set
    /// in one position; removing p from the erased set can only shrink those
    /// intersections, and the step that used to recover p drops out, so the
    /// shortened order is valid for E \ {p}. Induction on |E| shows greedy
    /// never stalls on a recoverable set.
    #[inline]
    pub(crate) fn peel(
        &self,
        remaining: &mut Vec<usize>,
        mut on_step: impl FnMut(usize, u32),
    ) -> bool {
        let mut erased = M::empty(self.n);
        for &p in remaining.iter() {
            erased.insert(p);
        }
        'steps: while !remaining.is_empty() {
            for idx in 0..remaining.len() {
                let p = remaining[idx];
                for &w in &self.by_column[p] {
                    if self.words[w as usize].meets_only(&erased, p) {
                        on_step(p, w);
                        erased.remove(p);
                        remaining.remove(idx);
                        continue 'steps;
                    }
                }
            }
            return false;
        }
        true
    }
}

/// Calls `$body` with a `MaskTable` of the narrowest mask type that holds `n` bits.
macro_rules! with_mask_table {
    ($index:expr, |$table:ident| $body:expr) => {{
        let index: &$crate::recovery::peel::DualIndex = $index;
        let n = index.n();
        if n <= 64 {
            let $table = $crate::recovery::peel::MaskTable::<u64>::new(index);
            $body
        } else if n <= 128 {
            let $table = $crate::recovery::peel::MaskTable::<u128>::new(index);
            $body
        } else if n <= 256 {
            let $table = $crate::recovery::peel::MaskTable::<[u64; 4]>::new(index);
            $body
        } else if n <= 512 {
            let $table = $crate::recovery::peel::MaskTable::<[u64; 8]>::new(index);
            $body
        } else {
            let $table = $crate::recovery::peel::MaskTable::<$crate::gf2::BitVector>::new(index);
            $body
        }
    }};
}
pub(crate) use with_mask_table;

/// Result of peeling one erasure pattern.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PeelOutcome {
    Recovered(RecoveryCertificate),
    /// Peeling stalled; `residual` could not be reduced further.
    Stuck {
        recovered: RecoveryCertificate,
        residual: ErasurePattern,
    },
}

impl PeelOutcome {
    pub fn is_recovered(&self) -> bool {
        matches!(self, PeelOutcome::Recovered(_))
    }

    pub fn certificate(&self) -> Option<&RecoveryCertificate> {
        match self {
            PeelOutcome::Recovered(c) => Some(c),
            PeelOutcome::Stuck { .. } => None,
        }
    }
}

/// Greedily peels `erased` with the words in `index`.
pub fn peel(index: &DualIndex, erased: &ErasurePattern) -> PeelOutcome {
    let mut remaining = erased.positions().to_vec();
    let mut steps = Vec::with_capacity(remaining.len());
    let done = with_mask_table!(index, |table| table.peel(&mut remaining, |p, w| {
        steps.push(RecoveryStep {
            position: p,
            word: index.words()[w as usize].clone(),
        })
    }));
    let cert = RecoveryCertificate { steps };
    if done {
        PeelOutcome::Recovered(cert)
    } else {
        PeelOutcome::Stuck {
            recovered: cert,
            residual: ErasurePattern::from_sorted(remaining),
        }
    }
}
