//! Finite groups as Cayley tables, the series obstruction and the
//! admissibility classifier.

pub mod abelian;
pub mod catalog;
pub mod cayley;
pub mod classify;
pub mod series;

pub use abelian::{abelian_basis, abelian_invariants, AbelianGroup};
pub use cayley::{CayleyGroup, Subgroup, DEFAULT_GROUP_BOUND};
pub use classify::{classify, FieldModel, GroupInput, NoSeriesProof, Reason, ResidueKind, Verdict};
pub use series::{
    abelian_obstruction_series, frattini_rank, obstruction_series, verify_series, AbelianSeries,
    NormalSeries,
};
