use thiserror::Error;

use crate::maniplex::{Color, Flag};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("color {color} out of range for rank {rank}")]
    ColorOutOfRange { color: Color, rank: usize },

    #[error("flag {flag} out of range for {flag_count} flags")]
    FlagOutOfRange { flag: Flag, flag_count: usize },

    #[error("adjacency table has {actual} entries, expected {expected}")]
    TableShape { expected: usize, actual: usize },

    #[error("rank 0 requires exactly one flag, got {0}")]
    RankZeroFlagCount(usize),

    #[error("flag {flag} is its own {color}-adjacent flag")]
    FixedPoint { flag: Flag, color: Color },

    #[error("color {color} is not an involution at flag {flag}: {flag} -> {image} -> {back}")]
    NotInvolution {
        flag: Flag,
        color: Color,
        image: Flag,
        back: Flag,
    },

    #[error("expected i < j, got ({i}, {j})")]
    BadColorPair { i: Color, j: Color },

    #[error("operation requires rank >= {min}, got {rank}")]
    RankTooSmall { rank: usize, min: usize },

    #[error("maniplex is disconnected")]
    Disconnected,

    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),

    #[error("not a polytope: {0}")]
    NotPolytope(String),

    #[error("not facet-bipartite: odd cycle through flags {0:?}")]
    NotFacetBipartite(Vec<Flag>),

    #[error("not vertex-bipartite: odd cycle through flags {0:?}")]
    NotVertexBipartite(Vec<Flag>),

    #[error("parity of color {color} is ill-defined: odd cycle through flags {cycle:?}")]
    ParityUndefined { color: Color, cycle: Vec<Flag> },

    #[error("number of layers must be even, got {0}")]
    OddLayerCount(usize),

    #[error("number of layers must be at least {min}, got {k}")]
    TooFewLayers { k: usize, min: usize },

    #[error("facet coloring has {actual} entries, expected one per facet ({expected})")]
    ColoringLength { expected: usize, actual: usize },

    #[error("facet {facet} has color {color}, allowed colors are 1..={max}")]
    ColoringValue {
        facet: usize,
        color: usize,
        max: usize,
    },

    #[error("improper coloring: adjacent facets {0} and {1} share a color")]
    ImproperColoring(usize, usize),

    #[error("facet graph is not {colors}-colorable")]
    NotColorable { colors: usize },

    #[error("factorization has {factors} factors but the facet coloring needs {needed}")]
    FactorizationTooSmall { factors: usize, needed: usize },

    #[error("not a perfect 1-factorization: factors {0} and {1} do not form a Hamiltonian cycle")]
    NotPerfect(usize, usize),

    #[error("invalid 1-factorization: {0}")]
    InvalidFactorization(String),

    #[error("{0}")]
    NotPrime(String),

    #[error("mix parameter r = {r} out of bounds for ranks {left} and {right}")]
    MixOutOfBounds { r: usize, left: usize, right: usize },

    #[error("layer metadata mismatch: {0}")]
    LayerMismatch(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("{0} out of supported range")]
    OutOfRange(String),
}

impl Error {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}
