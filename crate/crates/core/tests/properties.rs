mod common;

use std::collections::HashMap;

use common::*;
use lrc_core::gf2::{low_weight_dual_words_with, DualEnumLimits, DualStrategy};
use lrc_core::recovery::{peel, DualIndex, PeelOutcome};
use lrc_core::{ConstructionSpec, ErasurePattern, LinearCode};
use proptest::prelude::*;
use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn loose() -> DualEnumLimits {
    DualEnumLimits {
        max_span_rank: 63,
        max_supports: u128::MAX,
    }
}

fn pattern_of(n: usize, mask: u32) -> ErasurePattern {
    ErasurePattern::new((0..n).filter(|i| mask >> i & 1 == 1), n).unwrap()
}

/// Greedy peeling with the library's dual words agrees with DFS over
/// brute-force dual words on every erasure set of size `<= max_size`.
fn assert_greedy_matches_dfs(name: &str, code: &LinearCode, r: usize, max_size: usize) {
    let n = code.n();
    let index = DualIndex::for_locality(code, r, DualEnumLimits::default()).unwrap();
    let oracle_words = brute_dual_words(code, r + 1);
    let library_words: Vec<u32> = index.words().iter().map(mask_of).collect();
    let mut sorted = library_words.clone();
    sorted.sort_by_key(|&v| (v.count_ones(), v));
    assert_eq!(sorted, oracle_words, "{name}: dual words differ");
    let mut memo = HashMap::new();
    for size in 1..=max_size.min(n) {
        for erased in subsets(n, size) {
            let greedy = peel(&index, &pattern_of(n, erased)).is_recovered();
            let exhaustive = dfs_recoverable(&oracle_words, erased, &mut memo);
            assert_eq!(greedy, exhaustive, "{name}: r={r} erased={erased:#b}");
        }
    }
}

#[test]
fn greedy_matches_dfs_on_small_constructions() {
    for (name, code, r) in small_codes() {
        for r in [1, r, r + 1] {
            assert_greedy_matches_dfs(&name, &code, r, 4);
        }
    }
}

fn random_h() -> impl Strategy<Value = (usize, Vec<u32>)> {
    (4usize..=12).prop_flat_map(|n| (Just(n), prop::collection::vec(1u32..1 << n, 1..=6)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn greedy_matches_dfs_on_random_codes((n, rows) in random_h(), r in 1usize..=4) {
        let code = LinearCode::from_parity_check(matrix_of(n, &rows));
        assert_greedy_matches_dfs("random", &code, r, 4);
    }

    #[test]
    fn dual_strategies_agree(
        (n, rows) in (6usize..=20).prop_flat_map(|n| {
            (Just(n), prop::collection::vec(1u32..1 << n, 1..=8))
        }),
        wmax in 1usize..=5,
    ) {
        let code = LinearCode::from_parity_check(matrix_of(n, &rows));
        let span = low_weight_dual_words_with(&code, wmax, DualStrategy::RowSpan, loose()).unwrap();
        let search =
            low_weight_dual_words_with(&code, wmax, DualStrategy::SupportSearch, loose()).unwrap();
        prop_assert_eq!(&span, &search);
        if n <= 16 {
            let oracle: Vec<u32> = brute_dual_words(&code, wmax);
            let got: Vec<u32> = span.iter().map(mask_of).collect();
            let mut got_sorted = got.clone();
            got_sorted.sort_by_key(|&v| (v.count_ones(), v));
            prop_assert_eq!(got_sorted, oracle);
        }
    }

    #[test]
    fn generator_is_orthogonal_to_checks((n, rows) in (2usize..=20).prop_flat_map(|n| {
        (Just(n), prop::collection::vec(0u32..1 << n, 1..=10))
    })) {
        let code = LinearCode::from_parity_check(matrix_of(n, &rows));
        let h = code.parity_check();
        prop_assert_eq!(code.k(), n - h.rank());
        prop_assert_eq!(code.generator().nrows(), code.k());
        prop_assert!(h.is_orthogonal_to(code.generator()));
        prop_assert_eq!(code.generator().rank(), code.k());
    }
}

fn random_pattern(rng: &mut ChaCha8Rng, n: usize, size: usize) -> ErasurePattern {
    ErasurePattern::new(sample(rng, n, size), n).unwrap()
}

const REPLAY_CODES: &[&str] = &[
    "fixture:eq3_14_8",
    "hypergraph:beta=3",
    "r2chain:t=5,k=8",
    "mols:r=3,t=2",
    "pg:s=2",
    "sts:s=4",
    "product:(spc:n=3)x(spc:n=4)",
];

#[test]
fn replay_accepts_every_emitted_certificate() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut replayed = 0;
    for spec in REPLAY_CODES {
        let b = spec.parse::<ConstructionSpec>().unwrap().build().unwrap();
        let (r, t, n) = (b.claim.r, b.claim.t, b.code.n());
        let index = DualIndex::for_locality(&b.code, r, DualEnumLimits::default()).unwrap();
        for _ in 0..200 {
            let p = random_pattern(&mut rng, n, t);
            match peel(&index, &p) {
                PeelOutcome::Recovered(cert) => {
                    cert.replay(&b.code, &p, r).unwrap();
                    assert_eq!(cert.steps.len(), t);
                    replayed += 1;
                }
                PeelOutcome::Stuck { .. } => panic!("{spec}: {p} stuck"),
            }
        }
    }
    assert!(replayed >= 1000);
}

#[test]
fn replay_rejects_tampered_certificates() {
    let b = "hypergraph:beta=2"
        .parse::<ConstructionSpec>()
        .unwrap()
        .build()
        .unwrap();
    let index = DualIndex::for_locality(&b.code, 4, DualEnumLimits::default()).unwrap();
    let p = ErasurePattern::new([0, 1, 2], 14).unwrap();
    let PeelOutcome::Recovered(cert) = peel(&index, &p) else {
        panic!("expected recovery");
    };
    let mut short = cert.clone();
    short.steps.pop();
    assert!(short.replay(&b.code, &p, 4).is_err());
    let mut foreign = cert.clone();
    foreign.steps[0].word.toggle(13);
    foreign.steps[0].word.toggle(12);
    assert!(foreign.replay(&b.code, &p, 4).is_err());
    assert!(cert.replay(&b.code, &p, 1).is_err());
}

#[test]
fn subsets_of_recoverable_sets_are_recoverable() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for spec in [
        "fixture:item2_28_20",
        "r2chain:t=6,k=16",
        "mols:r=4,t=2",
        "hypergraph:beta=4",
    ] {
        let b = spec.parse::<ConstructionSpec>().unwrap().build().unwrap();
        let index = DualIndex::for_locality(&b.code, b.claim.r, DualEnumLimits::default()).unwrap();
        for size in 1..b.claim.t {
            for _ in 0..1000 {
                let p = random_pattern(&mut rng, b.code.n(), size);
                assert!(peel(&index, &p).is_recovered(), "{spec}: {p}");
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Dropping positions from a recoverable set never makes it stuck.
    #[test]
    fn peelability_is_monotone((n, rows) in random_h(), r in 1usize..=4, erased in any::<u32>(), drop in any::<u32>()) {
        let code = LinearCode::from_parity_check(matrix_of(n, &rows));
        let index = DualIndex::for_locality(&code, r, DualEnumLimits::default()).unwrap();
        let full = erased & ((1 << n) - 1);
        let sub = full & drop;
        if peel(&index, &pattern_of(n, full)).is_recovered() {
            prop_assert!(peel(&index, &pattern_of(n, sub)).is_recovered());
        }
    }
}
