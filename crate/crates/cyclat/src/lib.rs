//! Exact-arithmetic toolkit for cyclic and permutation-invariant
//! sublattices of Z^N: construction, canonical Hermite-normal-form
//! identities, complete shortest-vector enumeration, well-roundedness
//! classification, and counting sweeps. No floating point anywhere;
//! every comparison is an integer or rational comparison.

#![allow(clippy::needless_range_loop)]

pub mod census;
pub mod cube;
pub mod cyclic;
pub mod error;
pub mod lattice;
pub mod matrix;
pub mod perm;
pub mod poly;
pub mod rational;
pub mod svp;
pub mod vector;

pub use error::{Error, Result};
pub use lattice::Lattice;
pub use matrix::{circulant, IntMat};
pub use poly::IntPoly;
pub use svp::SvpResult;
pub use vector::IntVec;
