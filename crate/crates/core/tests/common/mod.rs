//! Independent oracles shared by the property and acceptance suites.
//!
//! Everything here works on `u32` bit masks over at most 20 positions and
//! uses nothing from the library beyond reading a code's matrices.

#![allow(dead_code)]

use std::collections::HashMap;

use lrc_core::{BitMatrix, BitVector, ConstructionSpec, LinearCode};

pub fn mask_of(v: &BitVector) -> u32 {
    v.iter_ones().fold(0, |m, i| m | 1 << i)
}

pub fn vector_of(n: usize, mask: u32) -> BitVector {
    let support: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
    BitVector::from_support(n, &support)
}

/// Every nonzero `v` of weight `<= wmax` with `G v = 0`, found by walking all
/// `2^n` vectors. Sorted by weight, then by mask.
pub fn brute_dual_words(code: &LinearCode, wmax: usize) -> Vec<u32> {
    let n = code.n();
    assert!(n <= 20, "brute force limited to n <= 20");
    let gens: Vec<u32> = code.generator().rows().iter().map(mask_of).collect();
    let mut out: Vec<u32> = (1u32..1 << n)
        .filter(|v| v.count_ones() as usize <= wmax)
        .filter(|v| gens.iter().all(|g| (g & v).count_ones() % 2 == 0))
        .collect();
    out.sort_by_key(|&v| (v.count_ones(), v));
    out
}

/// Whether some ordering of single-intersection steps clears `erased`,
/// searched depth-first over every (position, word) choice.
pub fn dfs_recoverable(words: &[u32], erased: u32, memo: &mut HashMap<u32, bool>) -> bool {
    if erased == 0 {
        return true;
    }
    if let Some(&v) = memo.get(&erased) {
        return v;
    }
    let mut ok = false;
    for &w in words {
        let hit = w & erased;
        if hit.count_ones() == 1 && dfs_recoverable(words, erased & !hit, memo) {
            ok = true;
            break;
        }
    }
    memo.insert(erased, ok);
    ok
}

/// All subsets of `0..n` with exactly `size` elements, as masks.
pub fn subsets(n: usize, size: usize) -> impl Iterator<Item = u32> {
    (0u32..1 << n).filter(move |m| m.count_ones() as usize == size)
}

/// Built constructions and fixtures with `n <= 12`.
pub fn small_codes() -> Vec<(String, LinearCode, usize)> {
    [
        "fixture:item3_10_5",
        "spc:n=4",
        "simplex:m=3",
        "hypergraph:beta=1",
        "graph:k=4,r=2",
        "graph:k=6,r=3",
        "product:(spc:n=3)x(spc:n=3)",
        "eq9:r=2,inner=(spc:n=3)",
        "eq9:r=3,inner=(spc:n=3)",
    ]
    .iter()
    .map(|s| {
        let b = s.parse::<ConstructionSpec>().unwrap().build().unwrap();
        assert!(b.code.n() <= 12, "{s}");
        (s.to_string(), b.code, b.claim.r)
    })
    .collect()
}

/// A parity-check matrix from row masks.
pub fn matrix_of(n: usize, rows: &[u32]) -> BitMatrix {
    BitMatrix::from_rows(n, rows.iter().map(|&m| vector_of(n, m)).collect()).unwrap()
}
