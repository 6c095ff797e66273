//! Sequential codes from mutually orthogonal Latin squares.

use crate::error::Result;
use crate::field::{mols_set, Field, LatinSquare};

use super::{
    constraint, finish, matrix_from_supports, BuiltCode, Claim, ConstructionSpec, Expected,
};

pub(super) fn params(r: usize, t: usize) -> Result<(Claim, Expected)> {
    if t < 2 {
        return Err(constraint(format!("mols: t >= 2 required, got t={t}")));
    }
    Field::new(r as u64)?;
    if t - 2 > r - 1 {
        return Err(crate::error::LrcError::TooManySquares {
            requested: t - 2,
            max: r - 1,
        });
    }
    // proven for even t; odd t keeps the weaker claim
    let claimed_t = if t.is_multiple_of(2) { t + 1 } else { t };
    Ok((
        Claim::seq(r, claimed_t),
        Expected {
            n: r * r + r * t + 1,
            k: r * r,
            d: None,
        },
    ))
}

/// `H = [A | I_{rt} | 0 ; 0 | 1_r 0 ... 0 | 1]`.
///
/// The squares are `L_1..L_{t-2}` from [`mols_set`] plus `L_{t-1}(a, b) = a`
/// and `L_t(a, b) = b`. Columns of `A` are cells `(a, b)` in lexicographic
/// order, and row `i` (1-based) of `A` marks the cells where
/// `L_{ceil(i/r)}(a, b) = (i mod r) + 1`. Each block of `r` rows therefore
/// partitions the cells by the value of one square.
pub fn mols_code(r: usize, t: usize) -> Result<BuiltCode> {
    let (_, exp) = params(r, t)?;
    let mut squares: Vec<LatinSquare> = mols_set(r as u64, t - 2)?;
    let rr = r as u32;
    squares.push((1..=rr).map(|a| vec![a; r]).collect());
    squares.push((0..r).map(|_| (1..=rr).collect()).collect());

    let cells = r * r;
    let mut rows = Vec::with_capacity(r * t + 1);
    for i in 1..=r * t {
        let square = &squares[i.div_ceil(r) - 1];
        let value = (i % r) as u32 + 1;
        let mut row: Vec<usize> = (0..cells)
            .filter(|&c| square[c / r][c % r] == value)
            .collect();
        row.push(cells + i - 1);
        rows.push(row);
    }
    let mut last: Vec<usize> = (cells..cells + r).collect();
    last.push(exp.n - 1);
    rows.push(last);
    finish(
        ConstructionSpec::Mols { r, t },
        matrix_from_supports(exp.n, &rows),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::LrcError;

    #[test]
    fn shape_and_weights() {
        let b = mols_code(3, 2).unwrap();
        assert_eq!((b.code.n(), b.code.k()), (16, 9));
        assert_eq!(b.claim.t, 3);
        let h = b.code.parity_check();
        assert_eq!(h.nrows(), 7);
        assert!(h.rows().iter().all(|row| row.weight() == 4));
    }

    #[test]
    fn rows_of_a_block_partition_the_cells() {
        let b = mols_code(4, 4).unwrap();
        let h = b.code.parity_check();
        for block in 0..4 {
            let mut seen = [0; 16];
            for row in &h.rows()[block * 4..block * 4 + 4] {
                for c in row.iter_ones().filter(|&c| c < 16) {
                    seen[c] += 1;
                }
            }
            assert_eq!(seen, [1; 16]);
        }
        // rows from different blocks meet in at most one cell
        for a in 0..16 {
            for c in 0..16 {
                if a / 4 != c / 4 {
                    assert!(h.row(a).and_weight(h.row(c)) <= 1);
                }
            }
        }
    }

    #[test]
    fn odd_t_claim_is_not_raised() {
        assert_eq!(mols_code(4, 3).unwrap().claim.t, 3);
    }

    #[test]
    fn errors() {
        assert_eq!(
            mols_code(3, 5).unwrap_err(),
            LrcError::TooManySquares {
                requested: 3,
                max: 2
            }
        );
        assert_eq!(mols_code(6, 2).unwrap_err(), LrcError::UnsupportedOrder(6));
        assert!(matches!(
            mols_code(3, 1),
            Err(LrcError::ParameterConstraint(_))
        ));
    }
}
