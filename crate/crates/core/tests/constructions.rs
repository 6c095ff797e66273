use lrc_core::bounds::parallel_min_length;
use lrc_core::combinatorics::binomial;
use lrc_core::gf2::{low_weight_dual_words, min_distance, DualEnumLimits};
use lrc_core::recovery::{verify_sequential_with, VerifyOptions};
use lrc_core::{check_parallel, verify_sequential, BuiltCode, ConstructionSpec, RecoveryMode};

fn build(spec: &str) -> BuiltCode {
    spec.parse::<ConstructionSpec>()
        .unwrap_or_else(|e| panic!("{spec}: {e}"))
        .build()
        .unwrap_or_else(|e| panic!("{spec}: {e}"))
}

/// `(spec, n, k)` from the closed forms, written out independently of the builders.
fn closed_forms() -> Vec<(String, usize, usize)> {
    let mut v = Vec::new();
    for beta in 1..=5usize {
        v.push((
            format!("hypergraph:beta={beta}"),
            beta.pow(3) + 3 * beta,
            beta.pow(3),
        ));
    }
    for s in 2..=3u32 {
        let q = 2usize.pow(s);
        let three = 3usize.pow(s);
        v.push((format!("pg:s={s}"), q * q + q + 1, q * q + q - three));
        v.push((format!("ag:s={s}"), q * q + q, q * q + q - three));
    }
    for s in 3..=5u32 {
        let m = 2usize.pow(s) - 1;
        let n = m * (m - 1) / 6;
        v.push((format!("sts:s={s}"), n, n - m + s as usize));
    }
    for (t, k, n) in [
        (4, 8, 20),
        (4, 12, 30),
        (5, 8, 21),
        (5, 16, 42),
        (6, 16, 46),
        (7, 16, 48),
        (7, 32, 96),
    ] {
        v.push((format!("r2chain:t={t},k={k}"), n, k));
    }
    for (r, t) in [(3, 2), (4, 2), (4, 3), (4, 4), (5, 4), (7, 3)] {
        v.push((format!("mols:r={r},t={t}"), r * r + r * t + 1, r * r));
    }
    for (k, r) in [(6usize, 3usize), (7, 3), (10, 4), (12, 2), (12, 4)] {
        v.push((format!("graph:k={k},r={r}"), k + (2 * k).div_ceil(r), k));
    }
    v.push(("product:(spc:n=3)x(spc:n=3)".into(), 9, 4));
    v.push(("product:(spc:n=3)x(simplex:m=3)".into(), 21, 6));
    v.push(("eq9:r=2,inner=(spc:n=3)".into(), 9, 4));
    v.push(("eq9:r=2,inner=(hypergraph:beta=2)".into(), 42, 16));
    v.push(("fixture:eq3_14_8".into(), 14, 8));
    v.push(("fixture:item2_28_20".into(), 28, 20));
    v.push(("fixture:item3_10_5".into(), 10, 5));
    v
}

#[test]
fn dimensions_match_closed_forms() {
    for (spec, n, k) in closed_forms() {
        let b = build(&spec);
        assert_eq!((b.code.n(), b.code.k()), (n, k), "{spec}");
        assert_eq!((b.expected.n, b.expected.k), (n, k), "{spec}");
        assert_eq!(b.code.parity_check().ncols(), n, "{spec}");
    }
}

#[test]
fn sequential_claims_verify_within_budget() {
    let mut checked = 0;
    for (spec, _, _) in closed_forms() {
        let b = build(&spec);
        if b.claim.mode != RecoveryMode::Sequential {
            continue;
        }
        let (n, r, t) = (b.code.n(), b.claim.r, b.claim.t);
        if binomial(n, t) > 10_000_000 {
            continue;
        }
        let rep = verify_sequential(&b.code, r, t).unwrap();
        assert!(rep.passed, "{spec}: {:?}", rep.failures.first());
        assert_eq!(rep.checked_patterns as u128, binomial(n, t));
        // a code recovering any t erasures has d >= t + 1
        if b.code.k() <= 26 {
            assert!(min_distance(&b.code, 26).unwrap() > t, "{spec}");
        }
        checked += 1;
    }
    assert!(checked >= 25, "only {checked} claims checked");
}

#[test]
fn eq9_hypergraph_claim_holds() {
    let b = build("eq9:r=2,inner=(hypergraph:beta=2)");
    assert_eq!((b.claim.r, b.claim.t), (4, 7));
    let rep = verify_sequential(&b.code, 4, 7).unwrap();
    assert!(rep.passed);
    assert_eq!(rep.checked_patterns, 26_978_328);
}

#[test]
fn parallel_claims_hold_structurally() {
    for spec in [
        "pg:s=2", "pg:s=3", "ag:s=2", "ag:s=3", "sts:s=3", "sts:s=4", "sts:s=5",
    ] {
        let b = build(spec);
        assert_eq!(b.claim.mode, RecoveryMode::Parallel, "{spec}");
        let (r, t) = (b.claim.r, b.claim.t);
        let rep = check_parallel(&b.code, r, t);
        assert!(rep.passed, "{spec}: {:?}", rep.violations);
        // k/n >= 1 - t/(r+1), cross-multiplied
        assert!(b.code.k() * (r + 1) >= b.code.n() * (r + 1 - t), "{spec}");
        // parallel recovery implies sequential recovery
        if binomial(b.code.n(), t) <= 1_000_000 {
            // sts:s=5 has rank 26, past the default span limit
            let opts = VerifyOptions {
                dual_limits: DualEnumLimits {
                    max_span_rank: 26,
                    ..DualEnumLimits::default()
                },
                ..VerifyOptions::default()
            };
            let rep = verify_sequential_with(&b.code, r, t, &opts).unwrap();
            assert!(rep.passed, "{spec}");
        }
    }
}

#[test]
fn block_designs_meet_the_length_bound() {
    for spec in [
        "pg:s=2", "pg:s=3", "pg:s=4", "sts:s=3", "sts:s=4", "sts:s=5", "sts:s=6",
    ] {
        let b = build(spec);
        let p = parallel_min_length(b.claim.r as u64, b.claim.t as u64);
        assert!(p.exact, "{spec}");
        assert_eq!(p.n_min, b.code.n() as u64, "{spec}");
        assert_eq!(p.m_min, b.code.parity_check().nrows() as u64, "{spec}");
    }
}

#[test]
fn projective_plane_ranks() {
    for (s, rank) in [(2, 10), (3, 28), (4, 82)] {
        let b = build(&format!("pg:s={s}"));
        assert_eq!(b.code.rank(), rank);
    }
}

#[test]
fn known_distances() {
    for (spec, d) in [
        ("pg:s=2", 6),
        ("sts:s=4", 4),
        ("fixture:eq3_14_8", 4),
        ("hypergraph:beta=2", 4),
        ("product:(spc:n=3)x(spc:n=3)", 4),
        ("simplex:m=4", 8),
        ("r2chain:t=7,k=16", 8),
    ] {
        let b = build(spec);
        assert_eq!(min_distance(&b.code, 26).unwrap(), d, "{spec}");
    }
}

/// Lightest codeword found as a low-weight word of the dual code.
fn lightest_codeword(b: &BuiltCode, wmax: usize) -> Option<usize> {
    let dual = lrc_core::LinearCode::from_generator(b.code.parity_check());
    low_weight_dual_words(&dual, wmax)
        .unwrap()
        .first()
        .map(|w| w.weight())
}

#[test]
fn hypergraph_distance_beyond_enumeration_cap() {
    for beta in 2..=4 {
        let b = build(&format!("hypergraph:beta={beta}"));
        assert_eq!(lightest_codeword(&b, 4), Some(4), "beta={beta}");
    }
}

fn fnv1a(bytes: &[u8]) -> u64 {
    bytes.iter().fold(0xcbf2_9ce4_8422_2325, |h, &b| {
        (h ^ b as u64).wrapping_mul(0x0100_0000_01b3)
    })
}

#[test]
fn builds_are_deterministic() {
    for (spec, _, _) in closed_forms() {
        let a = build(&spec).code.parity_check().to_pchk();
        let b = build(&spec).code.parity_check().to_pchk();
        assert_eq!(a, b, "{spec}");
    }
    // pinned digests of the pchk text
    for (spec, digest) in GOLDEN {
        let text = build(spec).code.parity_check().to_pchk();
        assert_eq!(fnv1a(text.as_bytes()), *digest, "{spec}");
    }
}

const GOLDEN: &[(&str, u64)] = &[
    ("hypergraph:beta=2", 0xc8ac005dda0bfbd0),
    ("pg:s=2", 0xd6fe6918a1ab4db2),
    ("sts:s=4", 0xf39878b1425a18b4),
    ("r2chain:t=7,k=16", 0xdd55bfb5c26f14f6),
    ("mols:r=5,t=4", 0x3356da17efb0889e),
    ("graph:k=7,r=3", 0x509e2cdc762af922),
    ("product:(spc:n=3)x(spc:n=3)", 0xc383bf7e203557b0),
    ("eq9:r=2,inner=(spc:n=3)", 0xc48ceffa6d0627d6),
    ("simplex:m=3", 0x3289f8c9bf40c873),
    ("ag:s=2", 0xf21b08e98da71fa6),
];
