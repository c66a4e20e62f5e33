use std::collections::BTreeMap;

use super::StructureAlgebra;
use crate::linalg::{Subspace, Vector};
use crate::rational::Rational;

/// An element of `A ⊗ Q[x1, x2]`: a finitely supported map from bidegrees
/// `(i, j)` (the monomial `x1^i x2^j`) to elements of `A`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PolyElement {
    terms: BTreeMap<(u32, u32), Vector>,
}

impl PolyElement {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `a ⊗ x1^i x2^j`.
    pub fn monomial(a: Vector, i: u32, j: u32) -> Self {
        let mut p = Self::zero();
        p.add_at((i, j), &a);
        p
    }

    fn add_at(&mut self, deg: (u32, u32), a: &Vector) {
        let cur = self.terms.remove(&deg).unwrap_or_default();
        let next = cur.add(a);
        if !next.is_zero() {
            self.terms.insert(deg, next);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, i: u32, j: u32) -> Vector {
        self.terms.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &Vector)> + '_ {
        self.terms.iter().map(|(d, v)| (*d, v))
    }

    pub fn add(&self, other: &PolyElement) -> PolyElement {
        let mut out = self.clone();
        for (d, v) in &other.terms {
            out.add_at(*d, v);
        }
        out
    }

    pub fn sub(&self, other: &PolyElement) -> PolyElement {
        let mut out = self.clone();
        for (d, v) in &other.terms {
            out.add_at(*d, &v.neg());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> PolyElement {
        let mut out = Self::zero();
        for (d, v) in &self.terms {
            out.add_at(*d, &v.scale(c));
        }
        out
    }
}

/// Product in `A ⊗ Q[x1, x2]`: bidegrees add, coefficients multiply in `A`.
pub fn poly_mul(a: &StructureAlgebra, p: &PolyElement, q: &PolyElement) -> PolyElement {
    let mut out = PolyElement::zero();
    for ((i, j), x) in &p.terms {
        for ((k, l), y) in &q.terms {
            out.add_at((i + k, j + l), &a.mul(x, y));
        }
    }
    out
}

/// `1 ⊗ ∂/∂x_axis` for `axis` in `{1, 2}`.
pub fn poly_derive(p: &PolyElement, axis: u8) -> PolyElement {
    assert!(axis == 1 || axis == 2, "axis must be 1 or 2");
    let mut out = PolyElement::zero();
    for ((i, j), x) in &p.terms {
        let (e, d) = if axis == 1 {
            (*i, (i.wrapping_sub(1), *j))
        } else {
            (*j, (*i, j.wrapping_sub(1)))
        };
        if e > 0 {
            out.add_at(d, &x.scale(&Rational::from_integer(e as i64)));
        }
    }
    out
}

/// Whether `p` lies in `W ⊗ Q[x1, x2]`, decided bidegree by bidegree.
pub fn poly_slice_membership(p: &PolyElement, w: &Subspace) -> bool {
    p.terms.values().all(|x| w.contains(x))
}
