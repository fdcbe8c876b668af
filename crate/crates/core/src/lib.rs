//! Symbol algebras over function fields of finite fields: tame residues,
//! local and global indices, monomial towers, admissibility of finite groups
//! and certified division algebra constructions.

pub mod arith;
pub mod brauer;
pub mod constructions;
pub mod error;
pub mod ff;
pub mod groups;
pub mod parse;
pub mod poly;
pub mod ratfunc;
pub mod rng;

pub use error::{Error, Result};
pub use ff::{CyclicCharacter, FFElem, FiniteField};
pub use poly::Poly;
pub use ratfunc::{Place, RatFunc};
