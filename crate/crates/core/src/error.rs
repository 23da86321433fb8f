//! Error types for construction and validation of spaces, operations,
//! subspaces, covers, maps, queries, and audits.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SpaceError {
    #[error("ground set is empty")]
    NoPoints,

    #[error("space has {0} points, maximum supported is {max}", max = crate::set::MAX_POINTS)]
    TooManyPoints(usize),

    #[error("duplicate point label {0:?}")]
    DuplicateLabel(String),

    #[error("open set references point index {0} outside the ground set")]
    SetOutOfSpace(usize),

    #[error("topology must contain the empty set and the whole space")]
    MissingEmptyOrFull,

    #[error("topology is not closed under union: {0} \u{222a} {1} is missing")]
    NotUnionClosed(String, String),

    #[error("topology is not closed under intersection: {0} \u{2229} {1} is missing")]
    NotIntersectionClosed(String, String),

    #[error("enumeration supports 1..=4 points, got {0}")]
    SizeTooLarge(usize),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OperationError {
    #[error("operation table has {got} entries, topology has {want} open sets")]
    TableLength { got: usize, want: usize },

    #[error("operation table has no entry for open set {0}")]
    MissingEntry(String),

    #[error("operation table has more than one entry for open set {0}")]
    DuplicateEntry(String),

    #[error("operation table key {0} is not an open set of the space")]
    EntryNotOpen(String),

    #[error("operation is not expansive: value {image} does not contain the open set {open}")]
    NotExpansive { open: String, image: String },

    #[error("operation value {0} is not a subset of the space")]
    ValueOutOfSpace(String),

    #[error("pivot point {0:?} is not in the space")]
    PivotNotInSpace(String),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SubspaceError {
    #[error("subspace carrier is empty")]
    EmptySubspace,

    #[error("subspace carrier is not a subset of the view")]
    CarrierOutOfView,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CoverError {
    #[error("cover member {0} is not gamma-open in the view")]
    MemberNotGammaOpen(usize),

    #[error("the given family does not cover the space")]
    NotACoverOfX,

    #[error("target is not covered by the gamma-closures of the whole family")]
    Uncoverable,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MapError {
    #[error("map table has {got} entries, domain has {want} points")]
    TableLength { got: usize, want: usize },

    #[error("map has no image for domain point {0:?}")]
    MissingPoint(String),

    #[error("map table key {0:?} is not a domain point")]
    UnknownDomainPoint(String),

    #[error("map sends {0:?} to {1:?}, which is not a codomain point")]
    ImageOutOfSpace(String, String),

    #[error("closure-image comparison requires a (gamma,beta)-continuous map")]
    NotContinuous,

    #[error("map enumeration supports at most 4 points per side, got {0}")]
    SizeTooLarge(usize),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum QueryError {
    #[error("unknown property name {0:?}")]
    UnknownProperty(String),

    #[error("malformed query: {0}")]
    Malformed(String),

    #[error("query size bound must be 1..=4, got {0}")]
    SizeTooLarge(usize),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AuditError {
    #[error("unknown theorem id {0:?}")]
    UnknownTheorem(String),

    #[error("theorem {theorem} supports size bounds 1..={max}, got {n}")]
    SizeTooLarge { theorem: String, n: usize, max: usize },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DocError {
    #[error("unknown point label {0:?}")]
    UnknownLabel(String),

    #[error(transparent)]
    Space(#[from] SpaceError),

    #[error(transparent)]
    Operation(#[from] OperationError),

    #[error(transparent)]
    Map(#[from] MapError),
}
