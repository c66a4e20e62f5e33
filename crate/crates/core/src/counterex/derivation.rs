use std::sync::Arc;

use crate::error::{Error, Result};
use crate::jordanmaps::LinearMap;
use crate::linalg::Vector;
use crate::par;
use crate::strucalg::StructureAlgebra;

/// Checks `d(e_i e_j) = d(e_i) e_j + e_i d(e_j)` on all basis pairs.
pub fn verify_derivation(d: &LinearMap) -> Result<()> {
    let a = d.domain();
    if d.domain_space().is_some() || a.dim() != d.codomain().dim() {
        return Err(Error::DimensionMismatch(
            "a derivation maps an algebra to itself".into(),
        ));
    }
    let n = a.dim();
    let bad = par::find_first(n, |i| {
        (0..n)
            .find(|&j| {
                let lhs = d.apply_coords(&a.basis_product(i, j).cloned().unwrap_or_default());
                let rhs = a
                    .mul_basis_right(d.image(i), j)
                    .add(&a.mul_basis_left(i, d.image(j)));
                lhs != rhs
            })
            .map(|j| (i, j))
    });
    match bad {
        Some((i, j)) => Err(Error::NotDerivation(i, j)),
        None => Ok(()),
    }
}

/// `x -> [a, x]`.
pub fn inner_derivation(a: &Arc<StructureAlgebra>, element: &Vector) -> LinearMap {
    let d = LinearMap::from_fn(a.clone(), a.clone(), |i| a.commutator(element, &a.basis(i)))
        .expect("square");
    debug_assert!(verify_derivation(&d).is_ok());
    d
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::Rational;
    use crate::strucalg::{grassmann_algebra, matrix_algebra};

    #[test]
    fn inner_derivations() {
        let m2 = Arc::new(matrix_algebra(2));
        let d = inner_derivation(&m2, &m2.basis(1));
        assert!(verify_derivation(&d).is_ok());
        // [e12, e21] = e11 - e22
        assert_eq!(d.apply(&m2.basis(2)), m2.basis(0).sub(&m2.basis(3)));
        assert!(inner_derivation(&m2, &m2.one().unwrap())
            .columns()
            .iter()
            .all(Vector::is_zero));

        let g = Arc::new(grassmann_algebra(4));
        let d = inner_derivation(&g, &g.basis(1));
        assert_eq!(d.apply(&g.basis(2)), g.basis(3).scale(&Rational::from(2)));
    }

    #[test]
    fn rejects_non_derivations() {
        let m2 = Arc::new(matrix_algebra(2));
        let id = LinearMap::identity(m2);
        assert!(matches!(
            verify_derivation(&id),
            Err(Error::NotDerivation(0, 0))
        ));
    }
}
