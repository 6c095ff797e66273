//! Lower bounds on block length and upper bounds on rate.
//!
//! Everything is exact integer or rational arithmetic; floating point only
//! seeds the square-root searches.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{One, Signed, ToPrimitive};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::code::format_decimal;

/// Minimum row count and block length of an `(r, t)` parallel-recovery code.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParallelMinLength {
    pub m_min: u64,
    pub n_min: u64,
    /// `t | r(r+1)`; otherwise `n_min` is a rounded-up value that no code meets
    /// with equality.
    pub exact: bool,
}

/// `m ≥ (t-1)(r+1) + 1` and `n ≥ (r+1)^2 - r(r+1)/t`.
pub fn parallel_min_length(r: u64, t: u64) -> ParallelMinLength {
    assert!(r >= 1 && t >= 1, "r and t must be positive");
    let (q, rem) = (r * (r + 1)).div_rem(&t);
    ParallelMinLength {
        m_min: (t - 1) * (r + 1) + 1,
        // ceil(a - x) = a - floor(x) for integer a
        n_min: (r + 1) * (r + 1) - q,
        exact: rem == 0,
    }
}

/// `k + ceil(2k / r)`, the shortest `(r, 2)` sequential code of dimension `k`.
pub fn seq_t2_min_length(k: u64, r: u64) -> u64 {
    assert!(r >= 1, "r must be positive");
    k + (2 * k).div_ceil(r)
}

/// `k + ceil((2k + ceil(k/r)) / r)`, the previously known `t = 3` bound.
pub fn song_t3_bound(k: u64, r: u64) -> u64 {
    assert!(r >= 1, "r must be positive");
    k + (2 * k + k.div_ceil(r)).div_ceil(r)
}

/// Evaluation of the minimax `t = 3` bound at its optimum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct NewT3Bound {
    pub n: u64,
    /// Smallest `s1` achieving the minimum.
    pub s1: u64,
    pub f1: u64,
    pub f2: u64,
}

/// Ceiling of the larger root of `m^2 + b m - c`, i.e. the least integer `m`
/// with `2m + b ≥ 0` and `m^2 + b m - c ≥ 0`. Requires `b^2 + 4c ≥ 0`.
pub fn quadratic_ceiling(b: i128, c: i128) -> i128 {
    let ok = |m: i128| 2 * m + b >= 0 && m * m + b * m - c >= 0;
    let disc = b * b + 4 * c;
    assert!(disc >= 0, "no real root");
    let mut m = ((-(b as f64) + (disc as f64).sqrt()) / 2.0).ceil() as i128;
    while !ok(m) {
        m += 1;
    }
    while ok(m - 1) {
        m -= 1;
    }
    m
}

/// `f1(s1)`: the least `m` with `m^2 + m(2r-5) - (6k + s1^2 - 5 s1) ≥ 0` past the larger root.
pub fn f1(k: u64, r: u64, s1: u64) -> u64 {
    let (k, r, s) = (k as i128, r as i128, s1 as i128);
    quadratic_ceiling(2 * r - 5, 6 * k + s * s - 5 * s) as u64
}

/// `f2(s1)`: the same for `m^2 + m(4r-4+2 s1) - (12k + 3 s1^2 - 4 s1 - 7) ≥ 0`.
pub fn f2(k: u64, r: u64, s1: u64) -> u64 {
    let (k, r, s) = (k as i128, r as i128, s1 as i128);
    quadratic_ceiling(4 * r - 4 + 2 * s, 12 * k + 3 * s * s - 4 * s - 7) as u64
}

/// `k + min over s1 ≥ 0 of max(f1(s1), f2(s1), s1)`.
///
/// The `s1` term is increasing, so the search stops once `s1` alone exceeds
/// the best value found.
pub fn new_t3_bound(k: u64, r: u64) -> NewT3Bound {
    assert!(k >= 1 && r >= 1, "k and r must be positive");
    let mut best: Option<(u64, u64, u64, u64)> = None;
    let mut s1 = 0;
    loop {
        if let Some((m, ..)) = best {
            if s1 > m {
                break;
            }
        }
        let (a, b) = (f1(k, r, s1), f2(k, r, s1));
        let m = a.max(b).max(s1);
        if best.is_none_or(|(bm, ..)| m < bm) {
            best = Some((m, s1, a, b));
        }
        s1 += 1;
    }
    let (m, s1, f1, f2) = best.expect("s1 = 0 always evaluated");
    NewT3Bound {
        n: k + m,
        s1,
        f1,
        f2,
    }
}

/// `r / (r + 2)`, the rate ceiling of `(r, 2)` sequential codes.
pub fn t2_rate_cap(r: u64) -> Ratio<u64> {
    assert!(r >= 1, "r must be positive");
    Ratio::new(r, r + 2)
}

/// `prod_{j=1..t} jr / (jr + 1)`, the availability rate ceiling.
pub fn availability_rate_cap(r: u64, t: u64) -> BigRational {
    assert!(r >= 1 && t >= 1, "r and t must be positive");
    (1..=t).fold(BigRational::one(), |acc, j| {
        let jr = BigInt::from(j * r);
        acc * BigRational::new(jr.clone(), jr + 1)
    })
}

/// Rounds a non-negative rational half-up to `places` decimals.
pub fn format_big_decimal(x: &BigRational, places: u32) -> String {
    assert!(!x.is_negative(), "negative rate");
    if let (Some(n), Some(d)) = (x.numer().to_u128(), x.denom().to_u128()) {
        if n.checked_mul(10u128.pow(places)).is_some() {
            return format_decimal(n, d, places);
        }
    }
    let scale = BigInt::from(10u32).pow(places);
    let (q, r) = (x.numer() * &scale).div_rem(x.denom());
    let scaled = if BigInt::from(2) * r >= *x.denom() {
        q + 1
    } else {
        q
    };
    let (int, frac) = scaled.div_rem(&scale);
    if places == 0 {
        return int.to_string();
    }
    format!(
        "{int}.{:0>width$}",
        frac.to_string(),
        width = places as usize
    )
}

/// Upper end of the `k` window in a bound sweep: `floor(r^(num/den)) - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct KRule {
    pub exp_num: u32,
    pub exp_den: u32,
}

impl Default for KRule {
    fn default() -> Self {
        Self {
            exp_num: 9,
            exp_den: 5,
        }
    }
}

impl KRule {
    /// Largest `k` in the window, computed as an exact integer root.
    pub fn k_max(&self, r: u64) -> u64 {
        let p = BigUint::from(r).pow(self.exp_num);
        let root = p.nth_root(self.exp_den);
        root.to_u64().expect("window fits in u64").saturating_sub(1)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct T3Row {
    pub r: u64,
    pub k: u64,
    pub song: u64,
    pub new: u64,
    pub delta: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct T3Comparison {
    pub rows: Vec<T3Row>,
    /// No row has the new bound below the old one.
    pub new_at_least_song: bool,
}

impl T3Comparison {
    pub fn to_csv(&self) -> String {
        let mut s = String::from("r,k,song,new,delta\n");
        for row in &self.rows {
            s.push_str(&format!(
                "{},{},{},{},{}\n",
                row.r, row.k, row.song, row.new, row.delta
            ));
        }
        s
    }
}

/// Both `t = 3` bounds for every `1 ≤ r ≤ r_max` and `r ≤ k ≤ rule.k_max(r)`.
pub fn compare_t3_bounds(r_max: u64, rule: KRule) -> T3Comparison {
    let rows: Vec<T3Row> = (1..=r_max)
        .into_par_iter()
        .flat_map_iter(|r| {
            (r..=rule.k_max(r)).map(move |k| {
                let song = song_t3_bound(k, r);
                let new = new_t3_bound(k, r).n;
                T3Row {
                    r,
                    k,
                    song,
                    new,
                    delta: new as i64 - song as i64,
                }
            })
        })
        .collect();
    let new_at_least_song = rows.iter().all(|row| row.delta >= 0);
    T3Comparison {
        rows,
        new_at_least_song,
    }
}

/// Rational as an exact fraction plus a 4-place decimal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RateValue {
    pub fraction: String,
    pub decimal: String,
}

impl RateValue {
    pub fn from_big(x: &BigRational) -> Self {
        Self {
            fraction: format!("{}/{}", x.numer(), x.denom()),
            decimal: format_big_decimal(x, 4),
        }
    }

    pub fn from_ratio(x: &Ratio<u64>) -> Self {
        Self::from_big(&BigRational::new(
            BigInt::from(*x.numer()),
            BigInt::from(*x.denom()),
        ))
    }
}

/// Every applicable bound for the given parameters.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsReport {
    pub k: Option<u64>,
    pub r: u64,
    pub t: Option<u64>,
    pub parallel: Option<ParallelMinLength>,
    pub n_min_seq_t2: Option<u64>,
    pub n_song_t3: Option<u64>,
    pub n_new_t3: Option<NewT3Bound>,
    pub rate_cap_t2: RateValue,
    pub rate_cap_availability: Option<RateValue>,
}

impl BoundsReport {
    /// Length bounds need `k`; `t`-dependent entries need `t`. The `t = 2`
    /// and `t = 3` length bounds are reported whenever `k` is given.
    pub fn evaluate(k: Option<u64>, r: u64, t: Option<u64>) -> Self {
        assert!(r >= 1, "r must be positive");
        Self {
            k,
            r,
            t,
            parallel: t.map(|t| parallel_min_length(r, t)),
            n_min_seq_t2: k.map(|k| seq_t2_min_length(k, r)),
            n_song_t3: k.map(|k| song_t3_bound(k, r)),
            n_new_t3: k.filter(|&k| k >= 1).map(|k| new_t3_bound(k, r)),
            rate_cap_t2: RateValue::from_ratio(&t2_rate_cap(r)),
            rate_cap_availability: t.map(|t| RateValue::from_big(&availability_rate_cap(r, t))),
        }
    }
}

/// `0 < x ≤ 1`.
pub fn is_rate(x: &BigRational) -> bool {
    x.is_positive() && *x <= BigRational::one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parallel_lengths() {
        assert_eq!(
            parallel_min_length(4, 5),
            ParallelMinLength {
                m_min: 21,
                n_min: 21,
                exact: true
            }
        );
        assert_eq!(parallel_min_length(6, 3).n_min, 35);
        let p = parallel_min_length(1, 1);
        assert_eq!((p.m_min, p.n_min, p.exact), (1, 2, true));
        let q = parallel_min_length(2, 4);
        assert_eq!((q.n_min, q.exact), (8, false));
    }

    #[test]
    fn sequential_t2_lengths() {
        assert_eq!(seq_t2_min_length(6, 3), 10);
        assert_eq!(seq_t2_min_length(12, 4), 18);
    }

    #[test]
    fn t3_bound_examples() {
        for (k, r, song, new) in [(8, 4, 13, 14), (5, 3, 9, 10), (20, 7, 27, 28)] {
            assert_eq!(song_t3_bound(k, r), song, "song({k},{r})");
            assert_eq!(new_t3_bound(k, r).n, new, "new({k},{r})");
        }
    }

    #[test]
    fn rate_caps() {
        assert_eq!(t2_rate_cap(2), Ratio::new(1, 2));
        assert_eq!(t2_rate_cap(3), Ratio::new(3, 5));
        assert_eq!(
            availability_rate_cap(1, 1),
            BigRational::new(1.into(), 2.into())
        );
        let table: Vec<String> = (4..=7)
            .map(|t| format_big_decimal(&availability_rate_cap(2, t), 4))
            .collect();
        assert_eq!(table, ["0.4063", "0.3694", "0.3410", "0.3183"]);
    }

    #[test]
    fn k_window_is_exact() {
        let rule = KRule::default();
        // 4^1.8 = 12.13, 3^1.8 = 7.22, 1^1.8 = 1
        assert_eq!(rule.k_max(4), 11);
        assert_eq!(rule.k_max(3), 6);
        assert_eq!(rule.k_max(1), 0);
        // 32^1.8 = 2^9 exactly
        assert_eq!(rule.k_max(32), 511);
    }

    #[test]
    fn sweep_contains_known_rows() {
        let cmp = compare_t3_bounds(4, KRule::default());
        assert!(cmp.rows.contains(&T3Row {
            r: 4,
            k: 8,
            song: 13,
            new: 14,
            delta: 1
        }));
        assert!(cmp.rows.contains(&T3Row {
            r: 3,
            k: 5,
            song: 9,
            new: 10,
            delta: 1
        }));
        assert!(cmp.to_csv().starts_with("r,k,song,new,delta\n"));
    }

    #[test]
    fn big_decimal_rounding() {
        let x = BigRational::new(BigInt::from(1) << 200, (BigInt::from(1) << 201) + 1);
        assert_eq!(format_big_decimal(&x, 4), "0.5000");
        assert_eq!(
            format_big_decimal(&BigRational::new(1.into(), 3.into()), 2),
            "0.33"
        );
        assert_eq!(format_big_decimal(&BigRational::one(), 4), "1.0000");
    }

    #[test]
    fn report_fields() {
        let rep = BoundsReport::evaluate(Some(8), 4, Some(3));
        assert_eq!(rep.n_song_t3, Some(13));
        assert_eq!(rep.n_new_t3.unwrap().n, 14);
        assert!(rep.n_new_t3.unwrap().n >= 9);
        let rep = BoundsReport::evaluate(None, 2, Some(7));
        assert_eq!(rep.rate_cap_availability.unwrap().decimal, "0.3183");
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(10_000))]

        #[test]
        fn f_values_are_least_solutions(k in 1u64..100_000, r in 1u64..500, s1 in 0u64..2_000) {
            let (ki, ri, si) = (k as i128, r as i128, s1 as i128);
            for (m, b, c) in [
                (f1(k, r, s1) as i128, 2 * ri - 5, 6 * ki + si * si - 5 * si),
                (f2(k, r, s1) as i128, 4 * ri - 4 + 2 * si, 12 * ki + 3 * si * si - 4 * si - 7),
            ] {
                let ok = |m: i128| 2 * m + b >= 0 && m * m + b * m - c >= 0;
                prop_assert!(ok(m));
                prop_assert!(!ok(m - 1));
            }
        }
    }

    #[test]
    fn availability_cap_monotone() {
        for r in 1..=20 {
            for t in 1..=20 {
                let cap = availability_rate_cap(r, t);
                assert!(is_rate(&cap));
                if t < 20 {
                    assert!(availability_rate_cap(r, t + 1) < cap);
                }
                if r < 20 {
                    assert!(availability_rate_cap(r + 1, t) > cap);
                }
            }
        }
    }
}
