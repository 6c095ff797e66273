//! Binomial coefficients and colexicographic ranking of fixed-size subsets.

/// `C(n, k)`, saturating at `u128::MAX`.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) / (i + 1) stays integral at every step
        acc = match acc.checked_mul((n - i) as u128) {
            Some(v) => v / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}

/// Precomputed `C(i, j)` for `i <= n`, `j <= t`, used to rank subsets.
#[derive(Debug, Clone)]
pub struct BinomialTable {
    t: usize,
    table: Vec<u64>,
}

impl BinomialTable {
    /// Entries above `u64::MAX` saturate; unranking only ever compares them
    /// against ranks below the total, so saturation is harmless.
    pub fn new(n: usize, t: usize) -> Self {
        let mut table = vec![0u64; (n + 1) * (t + 1)];
        for i in 0..=n {
            for j in 0..=t {
                table[i * (t + 1) + j] = u64::try_from(binomial(i, j)).unwrap_or(u64::MAX);
            }
        }
        Self { t, table }
    }

    #[inline]
    pub fn get(&self, n: usize, k: usize) -> u64 {
        self.table[n * (self.t + 1) + k]
    }

    /// The subset of colex rank `rank`, written into `out` in increasing order.
    pub fn unrank_colex(&self, mut rank: u64, n: usize, out: &mut [usize]) {
        let mut hi = n;
        for i in (0..out.len()).rev() {
            let k = i + 1;
            // largest c < hi with C(c, k) <= rank
            let mut c = hi - 1;
            while self.get(c, k) > rank {
                c -= 1;
            }
            out[i] = c;
            rank -= self.get(c, k);
            hi = c;
        }
    }
}

/// Advances `c` to the next subset of `{0..n}` in colexicographic order.
/// Returns false after the last subset.
pub fn next_colex(c: &mut [usize], n: usize) -> bool {
    let t = c.len();
    for j in 0..t {
        let limit = if j + 1 < t { c[j + 1] } else { n };
        if c[j] + 1 < limit {
            c[j] += 1;
            for (i, slot) in c.iter_mut().enumerate().take(j) {
                *slot = i;
            }
            return true;
        }
    }
    false
}
