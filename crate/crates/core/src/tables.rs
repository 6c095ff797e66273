//! CSV tables comparing construction parameters with the bounds.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::bounds::{availability_rate_cap, format_big_decimal, new_t3_bound};
use crate::constructions::ConstructionSpec;
use crate::error::Result;

fn ratio(num: u64, den: u64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Rates of the `r = 2` layered codes against the availability cap, `t = 4..=7`.
///
/// Three rows: the `t` header, the cap, and the construction at its smallest
/// admissible `k`.
pub fn r2_rate_table_csv() -> Result<String> {
    let ts = [4u64, 5, 6, 7];
    let mut caps = Vec::new();
    let mut rates = Vec::new();
    for t in ts {
        caps.push(format_big_decimal(&availability_rate_cap(2, t), 4));
        let k = if t >= 6 { 16 } else { 8 };
        let e = ConstructionSpec::R2Chain { t: t as usize, k }.expected()?;
        rates.push(format_big_decimal(&ratio(e.k as u64, e.n as u64), 4));
    }
    let join = |v: Vec<String>| v.join(",");
    Ok(format!(
        "t,{}\nbound,{}\nconstruction,{}\n",
        join(ts.iter().map(u64::to_string).collect()),
        join(caps),
        join(rates)
    ))
}

/// One row of a rate-versus-cap sweep for a parallel-recovery family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RateRow {
    pub s: u32,
    pub r: u64,
    pub t: u64,
    pub n: u64,
    pub k: u64,
    pub rate: String,
    pub cap: String,
    /// `1 - t/(r+1)`, the rate every minimum-length parallel code reaches.
    pub floor: String,
}

fn rate_row(s: u32, r: u64, t: u64, n: u64, k: u64) -> RateRow {
    let floor = BigRational::from_integer(1.into()) - ratio(t, r + 1);
    RateRow {
        s,
        r,
        t,
        n,
        k,
        rate: format_big_decimal(&ratio(k, n), 6),
        cap: format_big_decimal(&availability_rate_cap(r, t), 6),
        floor: format_big_decimal(&floor, 6),
    }
}

/// Projective-plane codes for `2 <= s <= s_max`, from their closed forms.
pub fn pg_rate_rows(s_max: u32) -> Vec<RateRow> {
    (2..=s_max)
        .map(|s| {
            let q = 1u64 << s;
            let n = q * q + q + 1;
            rate_row(s, q, q + 1, n, q * q + q - 3u64.pow(s))
        })
        .collect()
}

/// Steiner-triple codes for `3 <= s <= s_max`, from their closed forms.
pub fn sts_rate_rows(s_max: u32) -> Vec<RateRow> {
    (3..=s_max)
        .map(|s| {
            let m = (1u64 << s) - 1;
            let n = m * (m - 1) / 6;
            rate_row(s, (1 << (s - 1)) - 2, 3, n, n - m + s as u64)
        })
        .collect()
}

pub fn rate_rows_csv(rows: &[RateRow]) -> String {
    let mut out = String::from("s,r,t,n,k,rate,cap,floor\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{}\n",
            r.s, r.r, r.t, r.n, r.k, r.rate, r.cap, r.floor
        ));
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GapRow {
    pub beta: u64,
    pub n: u64,
    pub bound: u64,
    pub gap: u64,
}

/// Hypergraph code length `beta^3 + 3 beta` minus the `t = 3` minimax bound
/// at `k = beta^3`, `r = beta^2`.
pub fn hypergraph_gap_rows(beta_max: u64) -> Vec<GapRow> {
    use rayon::prelude::*;
    (1..=beta_max)
        .into_par_iter()
        .map(|beta| {
            let k = beta.pow(3);
            let n = k + 3 * beta;
            let bound = new_t3_bound(k, beta * beta).n;
            GapRow {
                beta,
                n,
                bound,
                gap: n - bound,
            }
        })
        .collect()
}

pub fn gap_rows_csv(rows: &[GapRow]) -> String {
    let mut out = String::from("beta,n,bound,gap\n");
    for r in rows {
        out.push_str(&format!("{},{},{},{}\n", r.beta, r.n, r.bound, r.gap));
    }
    out
}

/// Length and rate of the product of the `t = 7, k = 16` layered code with
/// three copies of the `[7, 3]` simplex code, set against the threefold
/// `[3, 2]` parity product cube `[3^9, 2^9]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompositeRate {
    pub n: u64,
    pub k: u64,
    pub rate: String,
    pub reference_n: u64,
    pub reference_k: u64,
    pub reference_rate: String,
    /// Exact comparison `k / n > reference_k / reference_n`.
    pub better: bool,
}

pub fn composite_rate() -> Result<CompositeRate> {
    let chain = ConstructionSpec::R2Chain { t: 7, k: 16 }.expected()?;
    let simplex = ConstructionSpec::Simplex { m: 3 }.expected()?;
    let n = (chain.n * simplex.n.pow(3)) as u64;
    let k = (chain.k * simplex.k.pow(3)) as u64;
    let (reference_n, reference_k) = (3u64.pow(9), 2u64.pow(9));
    Ok(CompositeRate {
        n,
        k,
        rate: format_big_decimal(&ratio(k, n), 9),
        reference_n,
        reference_k,
        reference_rate: format_big_decimal(&ratio(reference_k, reference_n), 9),
        better: ratio(k, n) > ratio(reference_k, reference_n),
    })
}
