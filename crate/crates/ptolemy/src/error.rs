//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a polygon needs at least 2 vertices, got {0}")]
    PolygonTooSmall(u32),

    #[error("{a}-{a} is not a diagonal: endpoints coincide")]
    DegenerateDiagonal { a: u32 },

    #[error("{a}-{b} is not a proper diagonal of a polygon with {n_vertices} vertices")]
    NotAProperDiagonal { a: u32, b: u32, n_vertices: u32 },

    #[error("duplicate diagonal {a}-{b}")]
    DuplicateDiagonal { a: u32, b: u32 },

    #[error("not a Ptolemy diagram: a region with vertices {region:?} contains {present} of its {total} internal diagonals")]
    MixedRegion {
        region: Vec<u32>,
        present: usize,
        total: usize,
    },

    #[error("not a Ptolemy diagram: diagonal set is not the union of the skeleton and filled regions")]
    UnaccountedDiagonals,

    #[error("enumeration over a polygon with {n_vertices} vertices exceeds the limit of {limit}")]
    EnumerationLimit { n_vertices: u32, limit: u32 },

    #[error("brute force limit {limit} exceeds the hard cap of {cap} vertices")]
    BruteForceCap { limit: u32, cap: u32 },

    #[error("rotation order {order} is invalid for a polygon with {n_vertices} vertices: it must be at least 2 and divide {n_vertices}")]
    InvalidRotationOrder { order: u32, n_vertices: u32 },

    #[error("perpendicular power must be at least 1")]
    InvalidPerpPower,

    #[error("invalid count query: {0}")]
    InvalidQuery(String),

    #[error("multinomial part {0} is negative")]
    NegativePart(i64),

    #[error("series has a nonzero constant term; geometric inverse needs positive valuation")]
    NonzeroConstantTerm,

    #[error("polynomial is not constant modulo the {order}-th cyclotomic polynomial (residue degree {residue_degree})")]
    NonConstantResidue { order: u32, residue_degree: usize },

    #[error("orbit input is not closed under rotation: missing {0}")]
    NotRotationClosed(String),

    #[error("orbit input contains duplicate diagram {0}")]
    DuplicateDiagram(String),

    #[error("orbit input mixes polygon sizes: expected {expected} vertices, found {found}")]
    MixedPolygonSizes { expected: u32, found: u32 },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
