//! `(r, 2)` sequential codes from graphs: one information symbol per edge, one
//! parity per node.

use crate::error::{LrcError, Result};
use crate::gf2::BitMatrix;

use super::{finish, matrix_from_supports, BuiltCode, Claim, ConstructionSpec, Expected};

/// First `k` (1-based) at which the Erdős–Gallai inequality
/// `sum_{i<=k} d_i <= k(k-1) + sum_{i>k} min(d_i, k)` fails for the
/// non-increasing rearrangement of `degrees`, or `Some(0)` for an odd degree
/// sum. `None` means the sequence is graphical.
pub fn erdos_gallai_violation(degrees: &[usize]) -> Option<usize> {
    let mut d = degrees.to_vec();
    d.sort_unstable_by(|a, b| b.cmp(a));
    if d.iter().sum::<usize>() % 2 == 1 {
        return Some(0);
    }
    let mut prefix = 0;
    for k in 1..=d.len() {
        prefix += d[k - 1];
        let tail: usize = d[k..].iter().map(|&x| x.min(k)).sum();
        if prefix > k * (k - 1) + tail {
            return Some(k);
        }
    }
    None
}

/// Realizes a graphical degree sequence as a simple graph.
///
/// Repeatedly takes the node of highest remaining degree (lowest index on
/// ties) and joins it to the nodes of highest remaining degree after it,
/// again breaking ties by index. Edges come back as `(u, v)` with `u < v`,
/// sorted lexicographically.
pub fn havel_hakimi(degrees: &[usize]) -> Result<Vec<(usize, usize)>> {
    if let Some(index) = erdos_gallai_violation(degrees) {
        return Err(LrcError::InfeasibleDegreeSequence { index });
    }
    let mut rem = degrees.to_vec();
    let mut edges = Vec::with_capacity(degrees.iter().sum::<usize>() / 2);
    loop {
        let v = (0..rem.len())
            .max_by(|&a, &b| rem[a].cmp(&rem[b]).then(b.cmp(&a)))
            .filter(|&v| rem[v] > 0);
        let Some(v) = v else { break };
        let need = std::mem::take(&mut rem[v]);
        let mut others: Vec<usize> = (0..rem.len()).filter(|&u| u != v && rem[u] > 0).collect();
        others.sort_by(|&a, &b| rem[b].cmp(&rem[a]).then(a.cmp(&b)));
        // cannot happen for a graphical sequence
        assert!(
            others.len() >= need,
            "Havel-Hakimi stalled on a graphical sequence"
        );
        for &u in &others[..need] {
            rem[u] -= 1;
            edges.push((u.min(v), u.max(v)));
        }
    }
    edges.sort_unstable();
    Ok(edges)
}

/// Degree sequence for `2k = a r + b`: `a` nodes of degree `r`, then one of
/// degree `b` when `b > 0`.
fn degree_sequence(k: usize, r: usize) -> Vec<usize> {
    let (a, b) = ((2 * k) / r, (2 * k) % r);
    let mut d = vec![r; a];
    if b > 0 {
        d.push(b);
    }
    d
}

pub(super) fn params(k: usize, r: usize) -> Result<(Claim, Expected)> {
    if k == 0 || r == 0 {
        return Err(super::constraint("graph code needs k >= 1 and r >= 1"));
    }
    let d = degree_sequence(k, r);
    if let Some(index) = erdos_gallai_violation(&d) {
        return Err(LrcError::InfeasibleDegreeSequence { index });
    }
    Ok((
        Claim::seq(r, 2),
        Expected {
            n: k + d.len(),
            k,
            d: None,
        },
    ))
}

/// `H = [B | I_m]` with `B` the node-edge incidence matrix of a graph on
/// `m = ceil(2k/r)` nodes with `k` edges and all degrees `r`, except one
/// node of degree `b` when `r` does not divide `2k`.
pub fn regular_graph_code(k: usize, r: usize) -> Result<BuiltCode> {
    params(k, r)?;
    let degrees = degree_sequence(k, r);
    let edges = havel_hakimi(&degrees)?;
    let m = degrees.len();
    let mut rows = vec![Vec::new(); m];
    for (e, &(u, v)) in edges.iter().enumerate() {
        rows[u].push(e);
        rows[v].push(e);
    }
    for (node, row) in rows.iter_mut().enumerate() {
        row.push(k + node);
    }
    let h: BitMatrix = matrix_from_supports(k + m, &rows);
    finish(ConstructionSpec::RegularGraph { k, r }, h)
}
