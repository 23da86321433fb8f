//! Finite-topology laboratory for operation-decorated spaces.
//!
//! A context pairs a finite topological space with an expansive operation
//! gamma from its open sets to arbitrary subsets. This crate decides the
//! gamma-flavored separation, compactness, and continuity properties of
//! such contexts, audits a bundled registry of implication statements over
//! exhaustively enumerated small models, and searches for counterexamples
//! to user-supplied property combinations. Ambiguous definitions are kept
//! as explicit variants (closed-set reading, open-operation direction,
//! cover target) so every verdict names the reading it was computed under.

pub mod audit;
pub mod cover;
pub mod error;
pub mod gamma;
pub mod json;
pub mod maps;
pub mod pool;
pub mod props;
pub mod query;
pub mod set;
pub mod space;
pub mod subspace;
pub mod worked;

pub use error::{
    AuditError, CoverError, DocError, MapError, OperationError, QueryError, SpaceError,
    SubspaceError,
};
pub use gamma::{ClosedVariant, GammaContext, GammaOperation, OpenDirection};
pub use props::CoverMode;
pub use set::{Point, PointSet};
pub use space::FiniteSpace;
