//! Layered parity graphs with locality 2 for `t = 4, 5, 6, 7`.
//!
//! Every parity symbol is the sum of two symbols in the layer below it, so
//! each row of `H` has weight 3. Indices below are 1-based as in the layer
//! definitions:
//!
//! - `P_i = I_i + I_{i+1}` for `i < k`, `P_k = I_1 + I_k`
//! - `Q_i = P_i + P_{i+k/2}` for `i <= k/2`
//! - `R_i = Q_{2i-1} + Q_{2i-1+k/4}` for `i <= k/8` (t >= 5)
//! - `S_i = Q_{2i} + Q_{2i+k/4}` and `T_i = P_{4i-2} + P_{4i}` for `i <= k/8` (t >= 6)
//! - `U_i = T_i + T_{i+k/16}` and `V_i = S_i + S_{i+k/16}` for `i <= k/16` (t = 7)
//!
//! Columns are ordered `I, P, Q, R, S, T, U, V`, rows likewise by the symbol they define.

use crate::error::Result;

use super::{
    constraint, finish, matrix_from_supports, BuiltCode, Claim, ConstructionSpec, Expected,
};

fn check(t: usize, k: usize) -> Result<()> {
    if !(4..=7).contains(&t) {
        return Err(constraint(format!(
            "r2chain: t must be in 4..=7, got t={t}"
        )));
    }
    if !k.is_multiple_of(4) || k < 8 {
        return Err(constraint(format!(
            "r2chain t={t}: k = 4l with l > 1 required, got k={k}"
        )));
    }
    if t >= 5 && !k.is_multiple_of(8) {
        return Err(constraint(format!(
            "r2chain t={t}: 8 | k required, got k={k}"
        )));
    }
    if t >= 6 && k < 16 {
        return Err(constraint(format!(
            "r2chain t={t}: k ≥ 16 required, got k={k}"
        )));
    }
    if t == 7 && !k.is_multiple_of(16) {
        return Err(constraint(format!(
            "r2chain t={t}: 16 | k required, got k={k}"
        )));
    }
    Ok(())
}

/// Sizes of the layers `I, P, Q, R, S, T, U, V`.
fn layer_sizes(t: usize, k: usize) -> [usize; 8] {
    let e = k / 8;
    let s = k / 16;
    [
        k,
        k,
        k / 2,
        if t >= 5 { e } else { 0 },
        if t >= 6 { e } else { 0 },
        if t >= 6 { e } else { 0 },
        if t == 7 { s } else { 0 },
        if t == 7 { s } else { 0 },
    ]
}

pub(super) fn params(t: usize, k: usize) -> Result<(Claim, Expected)> {
    check(t, k)?;
    Ok((
        Claim::seq(2, t),
        Expected {
            n: layer_sizes(t, k).iter().sum(),
            k,
            d: None,
        },
    ))
}

pub fn r2_chain_code(t: usize, k: usize) -> Result<BuiltCode> {
    let (_, exp) = params(t, k)?;
    let sizes = layer_sizes(t, k);
    let mut offset = [0usize; 8];
    for l in 1..8 {
        offset[l] = offset[l - 1] + sizes[l - 1];
    }
    // column of the 1-based symbol `i` in layer `l`
    let col = |l: usize, i: usize| {
        debug_assert!((1..=sizes[l]).contains(&i));
        offset[l] + i - 1
    };
    let (i_, p, q, r, s, tt, u, v) = (0, 1, 2, 3, 4, 5, 6, 7);
    let mut rows = Vec::new();
    for i in 1..=k {
        let next = if i < k { i + 1 } else { 1 };
        rows.push(vec![col(p, i), col(i_, i), col(i_, next)]);
    }
    for i in 1..=k / 2 {
        rows.push(vec![col(q, i), col(p, i), col(p, i + k / 2)]);
    }
    for i in 1..=sizes[r] {
        rows.push(vec![
            col(r, i),
            col(q, 2 * i - 1),
            col(q, 2 * i - 1 + k / 4),
        ]);
    }
    for i in 1..=sizes[s] {
        rows.push(vec![col(s, i), col(q, 2 * i), col(q, 2 * i + k / 4)]);
    }
    for i in 1..=sizes[tt] {
        rows.push(vec![col(tt, i), col(p, 4 * i - 2), col(p, 4 * i)]);
    }
    for i in 1..=sizes[u] {
        rows.push(vec![col(u, i), col(tt, i), col(tt, i + k / 16)]);
    }
    for i in 1..=sizes[v] {
        rows.push(vec![col(v, i), col(s, i), col(s, i + k / 16)]);
    }
    for row in &mut rows {
        row.sort_unstable();
    }
    finish(
        ConstructionSpec::R2Chain { t, k },
        matrix_from_supports(exp.n, &rows),
    )
}
