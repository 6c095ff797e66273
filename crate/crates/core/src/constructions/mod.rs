//! Deterministic builders for every code family, plus stored example matrices.
//!
//! Row and column orders are fixed (lexicographic unless a builder says
//! otherwise), so a spec always yields the same parity-check matrix.

mod chain;
mod fixtures;
mod geometry;
mod graph;
mod hypergraph;
mod mols;
mod product;
mod spec;

use serde::{Deserialize, Serialize};

use crate::code::{CodeReport, LinearCode, RecoveryMode};
use crate::error::{LrcError, Result};
use crate::gf2::{BitMatrix, BitVector};

pub use chain::r2_chain_code;
pub use fixtures::{fixture, names as fixture_names};
pub use geometry::{affine_plane_code, projective_plane_code, steiner_triple_code};
pub use graph::{erdos_gallai_violation, havel_hakimi, regular_graph_code};
pub use hypergraph::hypergraph_t3_code;
pub use mols::mols_code;
pub use product::{eq9_code, product_code, simplex_code, spc_code};

/// A code family together with its parameters.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ConstructionSpec {
    /// `[n, n-1, 2]` single parity check.
    Spc {
        n: usize,
    },
    /// `[2^m - 1, m, 2^(m-1)]` simplex code.
    Simplex {
        m: usize,
    },
    RegularGraph {
        k: usize,
        r: usize,
    },
    Hypergraph {
        beta: usize,
    },
    /// Point-line incidence of PG(2, 2^s).
    ProjectivePlane {
        s: usize,
    },
    /// Point-line incidence of AG(2, 2^s).
    AffinePlane {
        s: usize,
    },
    /// Lines of PG(s-1, 2) as a Steiner triple system.
    SteinerTriple {
        s: usize,
    },
    /// Layered `r = 2` parity graph for `t = 4..=7`.
    R2Chain {
        t: usize,
        k: usize,
    },
    Mols {
        r: usize,
        t: usize,
    },
    Product {
        left: Box<ConstructionSpec>,
        right: Box<ConstructionSpec>,
    },
    /// `r` diagonal copies of the inner parity-check matrix over a row of identities.
    Eq9 {
        r: usize,
        inner: Box<ConstructionSpec>,
    },
    Fixture {
        name: String,
    },
}

/// Recovery capability a construction is claimed to have.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Claim {
    pub r: usize,
    pub t: usize,
    pub mode: RecoveryMode,
}

impl Claim {
    fn seq(r: usize, t: usize) -> Self {
        Self {
            r,
            t,
            mode: RecoveryMode::Sequential,
        }
    }

    fn par(r: usize, t: usize) -> Self {
        Self {
            r,
            t,
            mode: RecoveryMode::Parallel,
        }
    }
}

/// Closed-form parameters; `d` only where it is known exactly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expected {
    pub n: usize,
    pub k: usize,
    pub d: Option<usize>,
}

/// A constructed code with its claim and closed-form parameters.
#[derive(Debug, Clone)]
pub struct BuiltCode {
    pub code: LinearCode,
    pub spec: ConstructionSpec,
    pub claim: Claim,
    pub expected: Expected,
}

impl BuiltCode {
    pub fn report(&self) -> CodeReport {
        let mut rep = CodeReport::new(&self.code);
        rep.spec = Some(self.spec.to_string());
        rep.d = self.expected.d;
        rep.r_claimed = Some(self.claim.r);
        rep.t_claimed = Some(self.claim.t);
        rep.mode = Some(self.claim.mode);
        rep
    }
}

impl ConstructionSpec {
    pub fn build(&self) -> Result<BuiltCode> {
        use ConstructionSpec::*;
        match self {
            Spc { n } => spc_code(*n),
            Simplex { m } => simplex_code(*m),
            RegularGraph { k, r } => regular_graph_code(*k, *r),
            Hypergraph { beta } => hypergraph_t3_code(*beta),
            ProjectivePlane { s } => projective_plane_code(*s),
            AffinePlane { s } => affine_plane_code(*s),
            SteinerTriple { s } => steiner_triple_code(*s),
            R2Chain { t, k } => r2_chain_code(*t, *k),
            Mols { r, t } => mols_code(*r, *t),
            Product { left, right } => product_code(&left.build()?, &right.build()?),
            Eq9 { r, inner } => eq9_code(*r, &inner.build()?),
            Fixture { name } => fixture(name),
        }
    }

    /// Closed-form `[n, k, d]` without building the matrix. Fails exactly when
    /// [`build`](Self::build) would fail on parameter checks.
    pub fn expected(&self) -> Result<Expected> {
        Ok(self.describe()?.1)
    }

    pub fn claim(&self) -> Result<Claim> {
        Ok(self.describe()?.0)
    }

    fn describe(&self) -> Result<(Claim, Expected)> {
        use ConstructionSpec::*;
        match self {
            Spc { n } => product::spc_params(*n),
            Simplex { m } => product::simplex_params(*m),
            RegularGraph { k, r } => graph::params(*k, *r),
            Hypergraph { beta } => hypergraph::params(*beta),
            ProjectivePlane { s } => geometry::pg_params(*s),
            AffinePlane { s } => geometry::ag_params(*s),
            SteinerTriple { s } => geometry::sts_params(*s),
            R2Chain { t, k } => chain::params(*t, *k),
            Mols { r, t } => mols::params(*r, *t),
            Product { left, right } => {
                let (a, b) = (left.describe()?, right.describe()?);
                Ok(product::product_params(a, b))
            }
            Eq9 { r, inner } => product::eq9_params(*r, inner.describe()?),
            Fixture { name } => fixtures::params(name),
        }
    }
}

/// Parity-check matrix whose row `i` has ones exactly at `rows[i]`.
pub(crate) fn matrix_from_supports(n: usize, rows: &[Vec<usize>]) -> BitMatrix {
    let rows = rows.iter().map(|s| BitVector::from_support(n, s)).collect();
    BitMatrix::from_rows(n, rows).expect("supports lie inside the block")
}

pub(crate) fn constraint(msg: impl Into<String>) -> LrcError {
    LrcError::ParameterConstraint(msg.into())
}

/// Builds the code and its record, checking the closed forms against the matrix.
pub(crate) fn finish(spec: ConstructionSpec, h: BitMatrix) -> Result<BuiltCode> {
    let (claim, expected) = spec.describe()?;
    let code = LinearCode::from_parity_check(h);
    debug_assert_eq!(
        (code.n(), code.k()),
        (expected.n, expected.k),
        "closed form disagrees with the matrix for {spec}"
    );
    Ok(BuiltCode {
        code,
        spec,
        claim,
        expected,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expected_matches_built_dimensions() {
        for s in [
            "spc:n=4",
            "simplex:m=3",
            "graph:k=6,r=3",
            "graph:k=5,r=2",
            "hypergraph:beta=3",
            "pg:s=2",
            "ag:s=2",
            "sts:s=4",
            "r2chain:t=4,k=8",
            "r2chain:t=7,k=16",
            "mols:r=3,t=2",
            "mols:r=4,t=3",
            "product:(spc:n=3)x(simplex:m=3)",
            "eq9:r=2,inner=(spc:n=3)",
            "fixture:item2_28_20",
        ] {
            let spec: ConstructionSpec = s.parse().unwrap();
            let built = spec.build().unwrap();
            let exp = spec.expected().unwrap();
            assert_eq!((built.code.n(), built.code.k()), (exp.n, exp.k), "{s}");
            assert_eq!(built.spec, spec);
            let rep = built.report();
            assert_eq!(rep.spec.as_deref(), Some(s));
        }
    }

    #[test]
    fn build_and_expected_fail_together() {
        for s in [
            "graph:k=4,r=4",
            "r2chain:t=6,k=8",
            "mols:r=3,t=5",
            "mols:r=6,t=2",
            "pg:s=5",
        ] {
            let spec: ConstructionSpec = s.parse().unwrap();
            let a = spec.build().unwrap_err();
            let b = spec.expected().unwrap_err();
            assert_eq!(a, b, "{s}");
            assert!(a.is_infeasible_construction(), "{s}: {a}");
        }
    }
}
