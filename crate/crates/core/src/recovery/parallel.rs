use std::time::Instant;

use crate::code::{LinearCode, RecoveryMode};

use super::{ParallelViolation, VerificationReport};

const MAX_VIOLATIONS: usize = 100;

/// Structural `(r, t)` parallel-recovery check on the stored rows of `H`.
///
/// Every row must have weight `r + 1`, every column weight `t`, and any two
/// rows may share at most one position, which makes the `t` rows through a
/// column pairwise meet only in that column. The count identity
/// `n t = m (r + 1)` is checked as well.
pub fn check_parallel(code: &LinearCode, r: usize, t: usize) -> VerificationReport {
    let start = Instant::now();
    let h = code.parity_check();
    let (m, n) = (h.nrows(), h.ncols());
    let mut violations = Vec::new();
    let mut count = 0u64;
    let mut record = |v: ParallelViolation| {
        count += 1;
        if violations.len() < MAX_VIOLATIONS {
            violations.push(v);
        }
    };

    for (row, vec) in h.rows().iter().enumerate() {
        let weight = vec.weight();
        if weight != r + 1 {
            record(ParallelViolation::RowWeight {
                row,
                weight,
                expected: r + 1,
            });
        }
    }
    let mut col_weight = vec![0usize; n];
    for vec in h.rows() {
        for c in vec.iter_ones() {
            col_weight[c] += 1;
        }
    }
    for (column, &weight) in col_weight.iter().enumerate() {
        if weight != t {
            record(ParallelViolation::ColumnWeight {
                column,
                weight,
                expected: t,
            });
        }
    }
    for a in 0..m {
        for b in a + 1..m {
            let shared = h.row(a).and_weight(h.row(b));
            if shared > 1 {
                record(ParallelViolation::RowOverlap {
                    row_a: a,
                    row_b: b,
                    shared,
                });
            }
        }
    }
    if n * t != m * (r + 1) {
        record(ParallelViolation::CountIdentity { n, t, m, r });
    }

    VerificationReport {
        source: None,
        mode: RecoveryMode::Parallel,
        r,
        t,
        passed: count == 0,
        total_patterns: 0,
        checked_patterns: 0,
        failure_count: count,
        failures: Vec::new(),
        violations,
        dual_words: None,
        elapsed_micros: start.elapsed().as_micros() as u64,
        sampling: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2::BitMatrix;

    #[test]
    fn identity_fails_row_weight() {
        let code = LinearCode::from_parity_check(BitMatrix::identity(3));
        let rep = check_parallel(&code, 1, 1);
        assert!(!rep.passed);
        assert!(matches!(
            rep.violations[0],
            ParallelViolation::RowWeight {
                row: 0,
                weight: 1,
                expected: 2
            }
        ));
    }

    #[test]
    fn fano_plane_passes() {
        // points x lines of PG(2,2)
        let h = BitMatrix::from_text_rows(&[
            "1101000", "0110100", "0011010", "0001101", "1000110", "0100011", "1010001",
        ])
        .unwrap();
        let rep = check_parallel(&LinearCode::from_parity_check(h), 2, 3);
        assert!(rep.passed, "{:?}", rep.violations);
    }

    #[test]
    fn overlapping_rows_are_flagged() {
        let h = BitMatrix::from_text_rows(&["1110", "1101"]).unwrap();
        let rep = check_parallel(&LinearCode::from_parity_check(h), 2, 2);
        assert!(rep
            .violations
            .iter()
            .any(|v| matches!(v, ParallelViolation::RowOverlap { shared: 2, .. })));
    }
}
