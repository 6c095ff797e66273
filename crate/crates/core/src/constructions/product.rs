//! Single parity check and simplex codes, and the product constructions built from them.

use crate::code::LinearCode;
use crate::error::Result;
use crate::gf2::{BitMatrix, BitVector};

use super::{constraint, BuiltCode, Claim, ConstructionSpec, Expected};

const MAX_SIMPLEX_M: usize = 12;

pub(super) fn spc_params(n: usize) -> Result<(Claim, Expected)> {
    if n < 2 {
        return Err(constraint(format!("spc: n >= 2 required, got n={n}")));
    }
    Ok((
        Claim::seq(n - 1, 1),
        Expected {
            n,
            k: n - 1,
            d: Some(2),
        },
    ))
}

/// `[n, n-1, 2]` code with the single all-ones parity row.
pub fn spc_code(n: usize) -> Result<BuiltCode> {
    spc_params(n)?;
    let h = BitMatrix::from_rows(
        n,
        vec![BitVector::from_support(n, &(0..n).collect::<Vec<_>>())],
    )?;
    super::finish(ConstructionSpec::Spc { n }, h)
}

pub(super) fn simplex_params(m: usize) -> Result<(Claim, Expected)> {
    if !(2..=MAX_SIMPLEX_M).contains(&m) {
        return Err(constraint(format!(
            "simplex: 2 <= m <= {MAX_SIMPLEX_M} required, got m={m}"
        )));
    }
    let half = 1 << (m - 1);
    Ok((
        // a set met by every weight-3 dual word through each of its points
        // twice has at least 2^(m-1) points
        Claim::seq(2, half - 1),
        Expected {
            n: (1 << m) - 1,
            k: m,
            d: Some(half),
        },
    ))
}

/// Generator columns are the nonzero vectors of `GF(2)^m` in increasing
/// integer order (bit `i` of column `j` is bit `i` of `j + 1`); `H` is a
/// nullspace basis, so the dual contains all weight-3 words `{x, y, x ^ y}`.
pub fn simplex_code(m: usize) -> Result<BuiltCode> {
    let (claim, expected) = simplex_params(m)?;
    let n = (1usize << m) - 1;
    let rows = (0..m)
        .map(|i| {
            let support: Vec<usize> = (0..n).filter(|j| (j + 1) >> i & 1 == 1).collect();
            BitVector::from_support(n, &support)
        })
        .collect();
    let g = BitMatrix::from_rows(n, rows)?;
    Ok(BuiltCode {
        code: LinearCode::from_generator(&g),
        spec: ConstructionSpec::Simplex { m },
        claim,
        expected,
    })
}

pub(super) fn product_params(a: (Claim, Expected), b: (Claim, Expected)) -> (Claim, Expected) {
    let ((ca, ea), (cb, eb)) = (a, b);
    (
        Claim::seq(ca.r.max(cb.r), (ca.t + 1) * (cb.t + 1) - 1),
        Expected {
            n: ea.n * eb.n,
            k: ea.k * eb.k,
            d: ea.d.zip(eb.d).map(|(x, y)| x * y),
        },
    )
}

/// Product code with generator `G_A ⊗ G_B`: position `i * n_B + j` holds
/// entry `(i, j)` of a codeword array whose rows lie in `B` and columns in
/// `A`. `H` is a nullspace basis of the generator; the low-weight checks
/// that give locality are recovered by dual-word enumeration.
pub fn product_code(a: &BuiltCode, b: &BuiltCode) -> Result<BuiltCode> {
    let (claim, expected) = product_params((a.claim, a.expected), (b.claim, b.expected));
    let g = BitMatrix::kronecker(a.code.generator(), b.code.generator());
    let code = LinearCode::from_generator(&g);
    debug_assert!(code.parity_check().is_orthogonal_to(&g));
    Ok(BuiltCode {
        code,
        spec: ConstructionSpec::Product {
            left: Box::new(a.spec.clone()),
            right: Box::new(b.spec.clone()),
        },
        claim,
        expected,
    })
}

pub(super) fn eq9_params(r: usize, inner: (Claim, Expected)) -> Result<(Claim, Expected)> {
    if r == 0 {
        return Err(constraint("eq9: r >= 1 required"));
    }
    let (c, e) = inner;
    Ok((
        Claim::seq(r.max(c.r), 2 * c.t + 1),
        Expected {
            n: (r + 1) * e.n,
            k: r * e.k,
            d: e.d.map(|d| 2 * d),
        },
    ))
}

/// `r` copies of the inner `H` on the block diagonal (the last block of
/// `n'` columns has none), above one row block `[I I ... I]` of `r + 1`
/// identities. This is the product of the `[r+1, r]` parity code with the
/// inner code, with block `j` holding the `j`-th row of the codeword array.
pub fn eq9_code(r: usize, inner: &BuiltCode) -> Result<BuiltCode> {
    let (claim, expected) = eq9_params(r, (inner.claim, inner.expected))?;
    let hi = inner.code.parity_check();
    let np = hi.ncols();
    let n = (r + 1) * np;
    let mut rows = Vec::with_capacity(r * hi.nrows() + np);
    for block in 0..r {
        for row in hi.rows() {
            let support: Vec<usize> = row.iter_ones().map(|c| block * np + c).collect();
            rows.push(BitVector::from_support(n, &support));
        }
    }
    for c in 0..np {
        let support: Vec<usize> = (0..=r).map(|block| block * np + c).collect();
        rows.push(BitVector::from_support(n, &support));
    }
    let h = BitMatrix::from_rows(n, rows)?;
    Ok(BuiltCode {
        code: LinearCode::from_parity_check(h),
        spec: ConstructionSpec::Eq9 {
            r,
            inner: Box::new(inner.spec.clone()),
        },
        claim,
        expected,
    })
}
