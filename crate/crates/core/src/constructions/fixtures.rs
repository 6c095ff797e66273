//! Explicit parity-check matrices of short minimum-length `(r, 3)` codes,
//! stored as pchk-v1 text.

use crate::error::{LrcError, Result};
use crate::gf2::BitMatrix;

use super::{finish, BuiltCode, Claim, ConstructionSpec, Expected};

struct Fixture {
    name: &'static str,
    text: &'static str,
    r: usize,
    t: usize,
    n: usize,
    k: usize,
    d: Option<usize>,
}

const FIXTURES: &[Fixture] = &[
    Fixture {
        name: "eq3_14_8",
        text: include_str!("../../fixtures/eq3_14_8.pchk"),
        r: 4,
        t: 3,
        n: 14,
        k: 8,
        d: Some(4),
    },
    Fixture {
        name: "item2_28_20",
        text: include_str!("../../fixtures/item2_28_20.pchk"),
        r: 7,
        t: 3,
        n: 28,
        k: 20,
        d: None,
    },
    Fixture {
        name: "item3_10_5",
        text: include_str!("../../fixtures/item3_10_5.pchk"),
        r: 3,
        t: 3,
        n: 10,
        k: 5,
        d: None,
    },
];

pub fn names() -> Vec<&'static str> {
    FIXTURES.iter().map(|f| f.name).collect()
}

fn lookup(name: &str) -> Result<&'static Fixture> {
    FIXTURES
        .iter()
        .find(|f| f.name == name)
        .ok_or_else(|| LrcError::UnknownFixture(name.to_owned()))
}

pub(super) fn params(name: &str) -> Result<(Claim, Expected)> {
    let f = lookup(name)?;
    Ok((
        Claim::seq(f.r, f.t),
        Expected {
            n: f.n,
            k: f.k,
            d: f.d,
        },
    ))
}

pub fn fixture(name: &str) -> Result<BuiltCode> {
    let f = lookup(name)?;
    let h = BitMatrix::from_pchk(f.text)?;
    finish(
        ConstructionSpec::Fixture {
            name: name.to_owned(),
        },
        h,
    )
}
