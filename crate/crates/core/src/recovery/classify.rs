use serde::{Deserialize, Serialize};

use crate::code::LinearCode;
use crate::error::{LrcError, Result};

/// Structural class of a rate-optimal `(r, 2)` sequential code.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "class", rename_all = "snake_case")]
pub enum RateOptimalClass {
    /// All row pairs share at most one position.
    RegularGraph,
    /// Rows pair up, each pair sharing all `r` of its weight-2 columns.
    MdsLocal,
    /// Both kinds of rows occur, on disjoint symbol sets.
    Product {
        graph_rows: Vec<usize>,
        mds_rows: Vec<usize>,
    },
    /// Two rows share `shared` positions with `1 < shared < r`.
    Violation {
        row_a: usize,
        row_b: usize,
        shared: usize,
    },
}

/// Classifies a binary code whose parity-check matrix is, up to column
/// permutation, `[I | H']` with weight-2 columns in `H'` and `r` ones per row
/// of `H'`.
///
/// Only the rows as stored are examined; pairwise support intersections
/// decide the class.
pub fn classify_rate_optimal_t2(code: &LinearCode, r: usize) -> Result<RateOptimalClass> {
    let h = code.parity_check();
    let m = h.nrows();
    let n = h.ncols();
    let mut col_weight = vec![0usize; n];
    for row in h.rows() {
        for c in row.iter_ones() {
            col_weight[c] += 1;
        }
    }
    if let Some(c) = col_weight.iter().position(|&w| w == 0 || w > 2) {
        return Err(LrcError::NotNormalForm(format!(
            "column {c} has weight {}",
            col_weight[c]
        )));
    }
    if !col_weight.contains(&2) {
        return Err(LrcError::NotNormalForm(
            "no weight-2 columns (k = 0)".into(),
        ));
    }
    for (i, row) in h.rows().iter().enumerate() {
        let unit = row.iter_ones().filter(|&c| col_weight[c] == 1).count();
        let pair = row.iter_ones().filter(|&c| col_weight[c] == 2).count();
        if unit != 1 {
            return Err(LrcError::NotNormalForm(format!(
                "row {i} has {unit} weight-1 columns, expected exactly 1"
            )));
        }
        if pair != r {
            return Err(LrcError::NotNormalForm(format!(
                "row {i} has {pair} weight-2 columns, expected r = {r}"
            )));
        }
    }

    let mut in_mds = vec![false; m];
    for a in 0..m {
        for b in a + 1..m {
            let shared = h.row(a).and_weight(h.row(b));
            if shared > 1 && shared < r {
                return Ok(RateOptimalClass::Violation {
                    row_a: a,
                    row_b: b,
                    shared,
                });
            }
            // with r = 1 a shared column is an ordinary graph edge
            if r >= 2 && shared == r {
                in_mds[a] = true;
                in_mds[b] = true;
            }
        }
    }
    let (mds_rows, graph_rows): (Vec<usize>, Vec<usize>) = (0..m).partition(|&i| in_mds[i]);
    Ok(match (graph_rows.is_empty(), mds_rows.is_empty()) {
        (_, true) => RateOptimalClass::RegularGraph,
        (true, false) => RateOptimalClass::MdsLocal,
        (false, false) => RateOptimalClass::Product {
            graph_rows,
            mds_rows,
        },
    })
}
