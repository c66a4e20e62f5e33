//! Exact sparse linear algebra over the rationals: vectors, echelon
//! elimination, subspaces and kernels.

mod echelon;
mod vector;

pub use echelon::{kernel, rank, EchelonBuilder, Subspace};
pub use vector::Vector;
