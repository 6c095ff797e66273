//! `(beta^2, 3)` sequential codes from the complete tripartite 3-uniform hypergraph.

use crate::error::Result;

use super::{finish, matrix_from_supports, BuiltCode, Claim, ConstructionSpec, Expected};

pub(super) fn params(beta: usize) -> Result<(Claim, Expected)> {
    if beta == 0 {
        return Err(super::constraint("hypergraph code needs beta >= 1"));
    }
    let k = beta.pow(3);
    Ok((
        Claim::seq(beta * beta, 3),
        Expected {
            n: k + 3 * beta,
            k,
            d: Some(4),
        },
    ))
}

/// Nodes are three groups of `beta` parities; every triple `(a, b, c)` with
/// one node per group, in lexicographic order, is an information symbol
/// checked by parities `a`, `beta + b` and `2 beta + c`. `H = [B | I_{3 beta}]`.
pub fn hypergraph_t3_code(beta: usize) -> Result<BuiltCode> {
    let (_, exp) = params(beta)?;
    let mut rows = vec![Vec::new(); 3 * beta];
    let mut col = 0;
    for a in 0..beta {
        for b in 0..beta {
            for c in 0..beta {
                rows[a].push(col);
                rows[beta + b].push(col);
                rows[2 * beta + c].push(col);
                col += 1;
            }
        }
    }
    for (i, row) in rows.iter_mut().enumerate() {
        row.push(exp.k + i);
    }
    finish(
        ConstructionSpec::Hypergraph { beta },
        matrix_from_supports(exp.n, &rows),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degenerate_and_small_cases() {
        let b = hypergraph_t3_code(1).unwrap();
        assert_eq!((b.code.n(), b.code.k()), (4, 1));
        let b = hypergraph_t3_code(2).unwrap();
        assert_eq!((b.code.n(), b.code.k()), (14, 8));
        assert_eq!(b.claim.r, 4);
        // every parity row has beta^2 information symbols plus itself
        assert!(b.code.parity_check().rows().iter().all(|r| r.weight() == 5));
        assert!(hypergraph_t3_code(0).is_err());
    }
}
