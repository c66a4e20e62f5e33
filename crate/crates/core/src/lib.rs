//! Exact-arithmetic toolkit for Jordan homomorphisms of associative algebras.
//!
//! The crate is organised bottom-up: [`rational`] and [`linalg`] provide exact
//! sparse linear algebra, [`freealg`] handles noncommutative polynomials,
//! [`strucalg`] builds finite-dimensional algebras from structure constants,
//! [`jordanmaps`] verifies identities and decompositions of linear maps, and
//! [`counterex`] and [`semigroup`] build the explicit non-standard examples.
//! Loops over basis tuples run through [`par`], which uses rayon when the
//! `parallel` feature is enabled.

pub mod counterex;
pub mod error;
pub mod freealg;
pub mod jordanmaps;
pub mod linalg;
pub mod par;
pub mod rational;
pub mod semigroup;
pub mod strucalg;

pub use error::{Error, Result};
pub use rational::Rational;
