//! Parallel-recovery codes from point-line incidence structures.

use crate::error::Result;
use crate::field::Field;

use super::{
    constraint, finish, matrix_from_supports, BuiltCode, Claim, ConstructionSpec, Expected,
};

const MAX_PLANE_S: usize = 4;
const MAX_STS_S: usize = 10;

fn plane_order(s: usize) -> Result<usize> {
    if !(2..=MAX_PLANE_S).contains(&s) {
        return Err(constraint(format!(
            "plane constructions need 2 <= s <= {MAX_PLANE_S}, got s={s}"
        )));
    }
    Ok(1 << s)
}

pub(super) fn pg_params(s: usize) -> Result<(Claim, Expected)> {
    let q = plane_order(s)?;
    let n = q * q + q + 1;
    Ok((
        Claim::par(q, q + 1),
        Expected {
            n,
            k: q * q + q - 3usize.pow(s as u32),
            d: Some(q + 2),
        },
    ))
}

pub(super) fn ag_params(s: usize) -> Result<(Claim, Expected)> {
    let q = plane_order(s)?;
    Ok((
        Claim::par(q, q),
        Expected {
            n: q * q + q,
            k: q * q + q - 3usize.pow(s as u32),
            d: None,
        },
    ))
}

pub(super) fn sts_params(s: usize) -> Result<(Claim, Expected)> {
    if !(3..=MAX_STS_S).contains(&s) {
        return Err(constraint(format!(
            "Steiner triple construction needs 3 <= s <= {MAX_STS_S}, got s={s}"
        )));
    }
    let m = (1usize << s) - 1;
    let n = m * (m - 1) / 6;
    Ok((
        Claim::par((1 << (s - 1)) - 2, 3),
        Expected {
            n,
            k: n - m + s,
            d: Some(4),
        },
    ))
}

/// Nonzero vectors of `GF(q)^3` whose first nonzero entry is 1, in
/// lexicographic order: one representative per projective point.
fn projective_points(q: u32) -> Vec<[u32; 3]> {
    let mut pts = vec![[0, 0, 1]];
    pts.extend((0..q).map(|b| [0, 1, b]));
    pts.extend((0..q).flat_map(|a| (0..q).map(move |b| [1, a, b])));
    pts
}

/// Rows are the points of PG(2, 2^s), columns its lines (named by their
/// normal vectors, in the same order); `H(i, j) = 1` iff point `i` lies on
/// line `j`. The matrix is square and symmetric.
pub fn projective_plane_code(s: usize) -> Result<BuiltCode> {
    let (_, exp) = pg_params(s)?;
    let q = 1u32 << s;
    let field = Field::new(q as u64)?;
    let pts = projective_points(q);
    let dot =
        |p: &[u32; 3], l: &[u32; 3]| (0..3).fold(0, |acc, i| field.add(acc, field.mul(p[i], l[i])));
    let rows: Vec<Vec<usize>> = pts
        .iter()
        .map(|p| (0..pts.len()).filter(|&j| dot(p, &pts[j]) == 0).collect())
        .collect();
    finish(
        ConstructionSpec::ProjectivePlane { s },
        matrix_from_supports(exp.n, &rows),
    )
}

/// Rows are the `Q^2` points `(x, y)` of AG(2, Q) in lexicographic order;
/// columns are the lines `y = m x + c` ordered by `(m, c)`, then the
/// verticals `x = c`.
pub fn affine_plane_code(s: usize) -> Result<BuiltCode> {
    let (_, exp) = ag_params(s)?;
    let q = 1u32 << s;
    let field = Field::new(q as u64)?;
    let qs = q as usize;
    let mut rows = vec![Vec::new(); qs * qs];
    let point = |x: u32, y: u32| x as usize * qs + y as usize;
    let mut col = 0;
    for m in 0..q {
        for c in 0..q {
            for x in 0..q {
                let y = field.add(field.mul(m, x), c);
                rows[point(x, y)].push(col);
            }
            col += 1;
        }
    }
    for c in 0..q {
        for y in 0..q {
            rows[point(c, y)].push(col);
        }
        col += 1;
    }
    finish(
        ConstructionSpec::AffinePlane { s },
        matrix_from_supports(exp.n, &rows),
    )
}

/// Rows are the nonzero vectors of `GF(2)^s` (as integers `1..2^s`), columns
/// the triples `{x, y, x ^ y}` sorted internally and listed lexicographically.
pub fn steiner_triple_code(s: usize) -> Result<BuiltCode> {
    let (_, exp) = sts_params(s)?;
    let m = (1usize << s) - 1;
    let mut rows = vec![Vec::new(); m];
    let mut col = 0;
    for x in 1..=m {
        for y in x + 1..=m {
            let z = x ^ y;
            if z > y {
                for p in [x, y, z] {
                    rows[p - 1].push(col);
                }
                col += 1;
            }
        }
    }
    debug_assert_eq!(col, exp.n);
    finish(
        ConstructionSpec::SteinerTriple { s },
        matrix_from_supports(exp.n, &rows),
    )
}
