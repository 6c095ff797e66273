use std::fmt;
use std::str::FromStr;

use crate::error::{LrcError, Result};

use super::bitvec::BitVector;

/// Dense binary matrix stored as bit-packed rows.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BitMatrix {
    cols: usize,
    rows: Vec<BitVector>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            cols,
            rows: vec![BitVector::zeros(cols); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Builds a matrix from rows that must all have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<BitVector>) -> Result<Self> {
        if let Some((i, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != cols) {
            return Err(LrcError::DimensionMismatch(format!(
                "row {i} has length {}, expected {cols}",
                r.len()
            )));
        }
        Ok(Self { cols, rows })
    }

    /// Builds a matrix from `0`/`1` strings of equal length.
    pub fn from_text_rows(rows: &[&str]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        let parsed = rows
            .iter()
            .enumerate()
            .map(|(i, r)| {
                r.parse::<BitVector>().map_err(|_| LrcError::MatrixFormat {
                    line: i + 1,
                    msg: format!("row {i} is not a 0/1 string"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(cols, parsed)
    }

    #[inline]
    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    pub fn ncols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        self.rows[r].get(c)
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        self.rows[r].set(c, value)
    }

    #[inline]
    pub fn row(&self, r: usize) -> &BitVector {
        &self.rows[r]
    }

    #[inline]
    pub fn rows(&self) -> &[BitVector] {
        &self.rows
    }

    pub fn push_row(&mut self, row: BitVector) -> Result<()> {
        if row.len() != self.cols {
            return Err(LrcError::DimensionMismatch(format!(
                "row length {} does not match {} columns",
                row.len(),
                self.cols
            )));
        }
        self.rows.push(row);
        Ok(())
    }

    pub fn column_weight(&self, c: usize) -> usize {
        self.rows.iter().filter(|r| r.get(c)).count()
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut t = BitMatrix::zeros(self.cols, self.nrows());
        for (i, row) in self.rows.iter().enumerate() {
            for j in row.iter_ones() {
                t.set(j, i, true);
            }
        }
        t
    }

    /// Reduced row-echelon form together with its pivot columns.
    ///
    /// Zero rows are dropped, so the returned matrix has exactly `rank` rows.
    pub fn rref(&self) -> (BitMatrix, Vec<usize>) {
        let mut rows = self.rows.clone();
        let mut pivots = Vec::new();
        let mut next = 0;
        for col in 0..self.cols {
            if next == rows.len() {
                break;
            }
            let Some(p) = (next..rows.len()).find(|&i| rows[i].get(col)) else {
                continue;
            };
            rows.swap(next, p);
            let pivot_row = rows[next].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i != next && row.get(col) {
                    row.xor_assign(&pivot_row);
                }
            }
            pivots.push(col);
            next += 1;
        }
        rows.truncate(next);
        (
            BitMatrix {
                cols: self.cols,
                rows,
            },
            pivots,
        )
    }

    /// Dimension of the row space over GF(2).
    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{x : M x^T = 0}`, one row per free column in increasing order.
    pub fn nullspace_basis(&self) -> BitMatrix {
        let (reduced, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let basis = (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = BitVector::zeros(self.cols);
                v.set(free, true);
                for (row, &p) in reduced.rows.iter().zip(&pivots) {
                    if row.get(free) {
                        v.set(p, true);
                    }
                }
                v
            })
            .collect();
        BitMatrix {
            cols: self.cols,
            rows: basis,
        }
    }

    /// `M v^T`, one syndrome bit per row.
    pub fn mul_vec(&self, v: &BitVector) -> BitVector {
        let bits: Vec<bool> = self.rows.iter().map(|r| r.dot(v)).collect();
        BitVector::from_bits(&bits)
    }

    /// True if every row of `self` is orthogonal to every row of `other`.
    pub fn is_orthogonal_to(&self, other: &BitMatrix) -> bool {
        self.cols == other.cols
            && self
                .rows
                .iter()
                .all(|a| other.rows.iter().all(|b| !a.dot(b)))
    }

    /// Whether `v` lies in the row space.
    pub fn row_space_contains(&self, v: &BitVector) -> bool {
        let (reduced, pivots) = self.rref();
        let mut rest = v.clone();
        for (row, &p) in reduced.rows.iter().zip(&pivots) {
            if rest.get(p) {
                rest.xor_assign(row);
            }
        }
        rest.is_zero()
    }

    pub fn kronecker(a: &BitMatrix, b: &BitMatrix) -> BitMatrix {
        let cols = a.cols * b.cols;
        let mut rows = Vec::with_capacity(a.nrows() * b.nrows());
        for ra in &a.rows {
            let ones_a = ra.support();
            for rb in &b.rows {
                let ones_b = rb.support();
                let mut v = BitVector::zeros(cols);
                for &i in &ones_a {
                    for &j in &ones_b {
                        v.set(i * b.cols + j, true);
                    }
                }
                rows.push(v);
            }
        }
        BitMatrix { cols, rows }
    }

    /// Places `blocks` side by side; all must have the same row count.
    pub fn hconcat(blocks: &[&BitMatrix]) -> Result<BitMatrix> {
        let nrows = blocks.first().map_or(0, |b| b.nrows());
        if blocks.iter().any(|b| b.nrows() != nrows) {
            return Err(LrcError::DimensionMismatch(
                "horizontal concatenation needs equal row counts".into(),
            ));
        }
        let cols: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = BitMatrix::zeros(nrows, cols);
        let mut offset = 0;
        for b in blocks {
            for (i, row) in b.rows.iter().enumerate() {
                for j in row.iter_ones() {
                    out.set(i, offset + j, true);
                }
            }
            offset += b.cols;
        }
        Ok(out)
    }

    /// Stacks `blocks` vertically; all must have the same column count.
    pub fn vconcat(blocks: &[&BitMatrix]) -> Result<BitMatrix> {
        let cols = blocks.first().map_or(0, |b| b.cols);
        if blocks.iter().any(|b| b.cols != cols) {
            return Err(LrcError::DimensionMismatch(
                "vertical concatenation needs equal column counts".into(),
            ));
        }
        let rows = blocks.iter().flat_map(|b| b.rows.iter().cloned()).collect();
        Ok(BitMatrix { cols, rows })
    }

    /// Serializes to the `pchk-v1` text format.
    pub fn to_pchk(&self) -> String {
        let mut s = format!("{} {}\n", self.nrows(), self.cols);
        for row in &self.rows {
            s.push_str(&row.to_string());
            s.push('\n');
        }
        s
    }

    /// Parses the `pchk-v1` text format: a `rows cols` header, then one
    /// `0`/`1` line per row without separators.
    pub fn from_pchk(text: &str) -> Result<BitMatrix> {
        let mut lines = text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty());
        let (_, header) = lines.next().ok_or(LrcError::MatrixFormat {
            line: 1,
            msg: "missing `rows cols` header".into(),
        })?;
        let dims: Vec<usize> = header
            .split_whitespace()
            .map(|t| t.parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| LrcError::MatrixFormat {
                line: 1,
                msg: format!("bad header {header:?}"),
            })?;
        let [nrows, cols] = dims[..] else {
            return Err(LrcError::MatrixFormat {
                line: 1,
                msg: format!("header must be `rows cols`, got {header:?}"),
            });
        };
        let mut rows = Vec::with_capacity(nrows);
        for (idx, line) in lines {
            let line = line.trim();
            if line.len() != cols {
                return Err(LrcError::MatrixFormat {
                    line: idx + 1,
                    msg: format!("expected {cols} columns, found {}", line.len()),
                });
            }
            let row = line
                .parse::<BitVector>()
                .map_err(|_| LrcError::MatrixFormat {
                    line: idx + 1,
                    msg: "row must contain only 0 and 1".into(),
                })?;
            rows.push(row);
        }
        if rows.len() != nrows {
            return Err(LrcError::MatrixFormat {
                line: rows.len() + 2,
                msg: format!("expected {nrows} rows, found {}", rows.len()),
            });
        }
        Ok(BitMatrix { cols, rows })
    }
}

impl fmt::Display for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_pchk())
    }
}

impl FromStr for BitMatrix {
    type Err = LrcError;

    fn from_str(s: &str) -> Result<Self> {
        BitMatrix::from_pchk(s)
    }
}
