//! Exact computations on generalized flag manifolds of classical type with
//! invariant almost Hermitian structures.
//!
//! The pipeline runs from root data ([`rootsys`]) through the flag manifold
//! ([`flag`]), its invariant metric and almost complex structure
//! ([`ahstruct`]), the Levi-Civita connection and derived tensors
//! ([`geometry`]), Gray–Hervella classification ([`classify`]) and
//! invariant holomorphic submanifolds ([`submanifold`]). All arithmetic is
//! exact over `Q(sqrt 2, sqrt 3, ...)[i]`.

pub mod ahstruct;
pub mod classify;
pub mod error;
pub mod flag;
pub mod geometry;
pub mod rootsys;
pub mod scalar;
pub mod submanifold;

pub use error::{Error, Result};
