//! Finite-dimensional associative algebras given by structure constants.
//!
//! Elements are coordinate [`Vector`]s on the basis of their algebra, and
//! subspaces are canonical [`Subspace`]s, so every membership, inclusion and
//! equality question here is decided exactly.

mod algebra;
mod construct;
mod cube;
mod idempotents;
mod involution;
mod json;
mod polyext;
mod subspaces;
mod tideal;

use rand::Rng;

pub use algebra::StructureAlgebra;
pub use construct::{
    cocycle_extension, direct_sum, grassmann_algebra, ideal_violation, matrix_algebra, opposite,
    quotient, scalars, subalgebra_structure, unitization, upper_triangular, BilinearForm,
    QuotientMap,
};
pub use cube::{check_lema2, jordan_cube, CubeReport};
pub use idempotents::central_idempotents;
pub use involution::{
    involution_exchange, involution_symplectic, involution_transpose, InvolutionMap,
};
pub use json::{algebra_from_json, algebra_to_json, AlgebraDocument};
pub use polyext::{poly_derive, poly_mul, poly_slice_membership, PolyElement};
pub use subspaces::{
    annihilator, annihilator_within, center, commutator_ideal, ideal_span, is_subalgebra,
    jordan_closure_violation, product_span, sandwich_span, subalgebra_span,
};
pub use tideal::{evaluate, multilinear_value_span, tideal_value, IdealConvention};

use crate::linalg::{Subspace, Vector};
use crate::rational::Rational;

/// A pseudo-random element with small integer coordinates. Dense for
/// dimensions up to 64, otherwise supported on 8 random coordinates.
pub fn random_element(dim: usize, rng: &mut impl Rng) -> Vector {
    let coord = |rng: &mut dyn rand::RngCore| Rational::from_integer(rng.gen_range(-3i64..=3));
    if dim <= 64 {
        Vector::from_pairs((0..dim).map(|i| (i, coord(rng))).collect())
    } else {
        Vector::from_pairs(
            (0..8)
                .map(|_| (rng.gen_range(0..dim), coord(rng)))
                .collect(),
        )
    }
}

/// A random element of a subspace, as a random combination of its basis.
pub fn random_in(w: &Subspace, rng: &mut impl Rng) -> Vector {
    let coords = random_element(w.dim(), rng);
    w.element(&coords)
}
