use thiserror::Error;

/// Errors raised by the code-construction, enumeration and verification routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LrcError {
    #[error("code dimension k={k} exceeds the enumeration cap {cap}")]
    CapExceeded { k: usize, cap: usize },

    #[error(
        "dual-word enumeration infeasible: rank {rank} > {max_rank} and \
         {supports} candidate supports > {max_supports}"
    )]
    EnumerationInfeasible {
        rank: usize,
        max_rank: usize,
        supports: u128,
        max_supports: u128,
    },

    #[error("pattern space of {patterns} erasure sets exceeds the cap {cap}; use sampled mode")]
    PatternSpaceTooLarge { patterns: u128, cap: u64 },

    #[error("code has dimension 0, so it has no nonzero codewords")]
    TrivialCode,

    #[error("unsupported field order {0}: only primes and 2^s with s <= 8 are built in")]
    UnsupportedOrder(u64),

    #[error("{requested} mutually orthogonal Latin squares requested, at most {max} exist for this order")]
    TooManySquares { requested: usize, max: usize },

    #[error("degree sequence is not graphical: Erdos-Gallai inequality fails at index {index}")]
    InfeasibleDegreeSequence { index: usize },

    #[error("parameter constraint violated: {0}")]
    ParameterConstraint(String),

    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),

    #[error("parity-check matrix is not of the form [I | H'] with weight-2 columns: {0}")]
    NotNormalForm(String),

    #[error("matrix format error at line {line}: {msg}")]
    MatrixFormat { line: usize, msg: String },

    #[error("cannot parse construction spec `{input}`: {msg}")]
    SpecParse { input: String, msg: String },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
}

impl LrcError {
    /// True for errors meaning a well-formed construction request has no realization.
    pub fn is_infeasible_construction(&self) -> bool {
        matches!(
            self,
            LrcError::UnsupportedOrder(_)
                | LrcError::TooManySquares { .. }
                | LrcError::InfeasibleDegreeSequence { .. }
                | LrcError::ParameterConstraint(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, LrcError>;
