use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::LinearMap;
use crate::linalg::Vector;
use crate::rational::Rational;
use crate::strucalg::{random_element, random_in};

/// `count` tuples of `arity` pseudo-random domain elements.
pub(crate) fn random_tuples(
    phi: &LinearMap,
    arity: usize,
    count: usize,
    seed: u64,
) -> Vec<Vec<Vector>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            (0..arity)
                .map(|_| match phi.domain_space() {
                    None => random_element(phi.domain().dim(), &mut rng),
                    Some(w) => random_in(w, &mut rng),
                })
                .collect()
        })
        .collect()
}

/// All `sum m_k b_k` over domain basis vectors `b_k` with `sum m_k = degree`.
pub(crate) fn lattice(phi: &LinearMap, degree: u32) -> Vec<Vector> {
    let d = phi.domain_dim();
    let mut out = Vec::new();
    let mut m = vec![0u32; d];
    fn rec(phi: &LinearMap, k: usize, left: u32, m: &mut Vec<u32>, out: &mut Vec<Vector>) {
        if k + 1 == m.len() {
            m[k] = left;
            let terms: Vec<(Rational, Vector)> = m
                .iter()
                .enumerate()
                .filter(|(_, c)| **c > 0)
                .map(|(i, c)| (Rational::from(*c as i64), phi.domain_basis(i)))
                .collect();
            out.push(Vector::combination(terms.iter().map(|(c, v)| (c, v))));
            return;
        }
        for take in (0..=left).rev() {
            m[k] = take;
            rec(phi, k + 1, left - take, m, out);
        }
        m[k] = 0;
    }
    if d > 0 {
        rec(phi, 0, degree, &mut m, &mut out);
    }
    out
}

/// Domain basis vectors in ambient coordinates.
pub(crate) fn basis(phi: &LinearMap) -> Vec<Vector> {
    (0..phi.domain_dim()).map(|k| phi.domain_basis(k)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::strucalg::matrix_algebra;
    use std::sync::Arc;

    #[test]
    fn lattice_sizes() {
        let phi = LinearMap::identity(Arc::new(matrix_algebra(2)));
        // C(n + 3, 3) points of degree n in four coordinates
        assert_eq!(lattice(&phi, 1).len(), 4);
        assert_eq!(lattice(&phi, 2).len(), 10);
        assert_eq!(lattice(&phi, 3).len(), 20);
        assert!(lattice(&phi, 2).iter().all(|v| !v.is_zero()));
        let a = random_tuples(&phi, 2, 5, 9);
        assert_eq!(a, random_tuples(&phi, 2, 5, 9));
        assert_ne!(a, random_tuples(&phi, 2, 5, 10));
    }
}
