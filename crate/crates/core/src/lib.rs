//! Which normal surface singularities are images of finite map germs
//! (ℂ², 0) → (ℂⁿ, 0)?
//!
//! Exactly the quotient singularities ℂ²/G for finite G ⊂ U(2). This crate
//! decides that from link data (Seifert invariants, a lens space, or a
//! plumbing graph) and, for the families with explicit representations,
//! produces a map `F = (p_1, …, p_n)` of invariant polynomials together
//! with exactly verified relations of its image.

pub mod error;
pub mod exactmath;
pub mod groups;
pub mod invariants;
pub mod linkdata;
pub mod pipeline;
pub mod relations;
pub mod resolution;
pub mod suites;

pub use error::{Error, Result};
