//! Binary linear codes described by a parity-check matrix.

use std::sync::OnceLock;

use num_integer::Integer;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::gf2::BitMatrix;

/// A binary linear code, the nullspace of its parity-check matrix `H`.
///
/// `H` is kept verbatim, redundant rows included: for orthogonal-parity codes
/// the full row set carries the locality structure even when it is rank deficient.
#[derive(Debug)]
pub struct LinearCode {
    pchk: BitMatrix,
    rank: usize,
    generator: OnceLock<BitMatrix>,
}

impl Clone for LinearCode {
    fn clone(&self) -> Self {
        let generator = OnceLock::new();
        if let Some(g) = self.generator.get() {
            let _ = generator.set(g.clone());
        }
        Self {
            pchk: self.pchk.clone(),
            rank: self.rank,
            generator,
        }
    }
}

impl PartialEq for LinearCode {
    fn eq(&self, other: &Self) -> bool {
        self.pchk == other.pchk
    }
}

impl Eq for LinearCode {}

impl LinearCode {
    pub fn from_parity_check(pchk: BitMatrix) -> Self {
        let rank = pchk.rank();
        Self {
            pchk,
            rank,
            generator: OnceLock::new(),
        }
    }

    /// The code whose generator rows are `generator`; its parity-check matrix is
    /// a basis of the dual.
    pub fn from_generator(generator: &BitMatrix) -> Self {
        let code = Self::from_parity_check(generator.nullspace_basis());
        let (basis, _) = generator.rref();
        let _ = code.generator.set(basis);
        code
    }

    #[inline]
    pub fn parity_check(&self) -> &BitMatrix {
        &self.pchk
    }

    /// A basis of the code, computed on first use.
    pub fn generator(&self) -> &BitMatrix {
        self.generator.get_or_init(|| self.pchk.nullspace_basis())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.pchk.ncols()
    }

    #[inline]
    pub fn rank(&self) -> usize {
        self.rank
    }

    #[inline]
    pub fn k(&self) -> usize {
        self.n() - self.rank
    }

    /// `k / n` in lowest terms.
    pub fn rate(&self) -> Ratio<u64> {
        Ratio::new(self.k() as u64, self.n().max(1) as u64)
    }
}

/// Recovery model a code is claimed or checked against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RecoveryMode {
    Sequential,
    Parallel,
}

impl std::fmt::Display for RecoveryMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            RecoveryMode::Sequential => "sequential",
            RecoveryMode::Parallel => "parallel",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VerifiedStatus {
    Unverified,
    Pass,
    Fail,
}

/// Flat summary of a code's parameters, as printed by the CLI.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeReport {
    pub spec: Option<String>,
    pub n: usize,
    pub k: usize,
    pub d: Option<usize>,
    pub rate_num: u64,
    pub rate_den: u64,
    pub rate: String,
    pub r_claimed: Option<usize>,
    pub t_claimed: Option<usize>,
    pub mode: Option<RecoveryMode>,
    pub verified: VerifiedStatus,
}

impl CodeReport {
    pub fn new(code: &LinearCode) -> Self {
        let rate = code.rate();
        Self {
            spec: None,
            n: code.n(),
            k: code.k(),
            d: None,
            rate_num: *rate.numer(),
            rate_den: *rate.denom(),
            rate: format_decimal(*rate.numer() as u128, *rate.denom() as u128, 4),
            r_claimed: None,
            t_claimed: None,
            mode: None,
            verified: VerifiedStatus::Unverified,
        }
    }
}

/// Exact decimal rendering of `num / den` rounded half-up to `places` digits.
pub fn format_decimal(num: u128, den: u128, places: u32) -> String {
    assert!(den > 0, "zero denominator");
    let scale = 10u128.pow(places);
    let (q, r) = (num * scale).div_rem(&den);
    let scaled = if 2 * r >= den { q + 1 } else { q };
    let int = scaled / scale;
    if places == 0 {
        return int.to_string();
    }
    format!("{int}.{:0width$}", scaled % scale, width = places as usize)
}

/// [`format_decimal`] for a rational.
pub fn round_ratio(r: &Ratio<u64>, places: u32) -> String {
    format_decimal(*r.numer() as u128, *r.denom() as u128, places)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spc_parameters() {
        let c = LinearCode::from_parity_check(BitMatrix::from_text_rows(&["111"]).unwrap());
        assert_eq!((c.n(), c.k()), (3, 2));
        assert_eq!(c.rate(), Ratio::new(2, 3));
    }

    #[test]
    fn redundant_rows_are_kept() {
        let h = BitMatrix::from_text_rows(&["1100", "0011", "1111"]).unwrap();
        let c = LinearCode::from_parity_check(h.clone());
        assert_eq!(c.parity_check(), &h);
        assert_eq!((c.rank(), c.k()), (2, 2));
    }

    #[test]
    fn generator_is_orthogonal_to_parity_rows() {
        let h = BitMatrix::from_text_rows(&[
            "1000110011",
            "0100010010",
            "0010001011",
            "0001000101",
            "0000111100",
        ])
        .unwrap();
        let c = LinearCode::from_parity_check(h);
        assert_eq!((c.n(), c.k()), (10, 5));
        assert!(c.parity_check().is_orthogonal_to(c.generator()));
    }

    #[test]
    fn from_generator_round_trip() {
        let h = BitMatrix::from_text_rows(&["1101", "0111"]).unwrap();
        let c = LinearCode::from_parity_check(h);
        let back = LinearCode::from_generator(c.generator());
        assert_eq!(back.k(), c.k());
        assert!(back.parity_check().is_orthogonal_to(c.generator()));
    }

    #[test]
    fn decimal_rounding() {
        assert_eq!(format_decimal(8, 21, 4), "0.3810");
        assert_eq!(format_decimal(2, 5, 4), "0.4000");
        assert_eq!(format_decimal(1, 3, 4), "0.3333");
        assert_eq!(format_decimal(2, 3, 0), "1");
        assert_eq!(format_decimal(1, 8, 2), "0.13");
    }
}
