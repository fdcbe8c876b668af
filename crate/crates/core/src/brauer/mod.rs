//! Brauer classes of symbol algebras: over F_q(t) and over complete towers.

pub mod global;
pub mod random;
pub mod tower;

pub use global::{BrauerClassGlobal, LocalDatum, SignConvention, SymbolAlg};
pub use tower::{MonomialElem, PeelStep, TowerClass, TowerField, TowerIndex, TowerNormalForm};
