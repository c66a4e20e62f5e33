use super::StructureAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{kernel, Subspace, Vector};
use crate::par;
use crate::rational::Rational;

/// A linear antiautomorphism of order two, given by the images of the basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvolutionMap {
    images: Vec<Vector>,
}

impl InvolutionMap {
    /// Validates `images` as an involution of `a`: order two on every basis
    /// element and `(e_i e_j)* = e_j* e_i*` on every basis pair.
    pub fn new(a: &StructureAlgebra, images: Vec<Vector>) -> Result<Self> {
        if images.len() != a.dim()
            || images
                .iter()
                .any(|v| v.max_index().is_some_and(|k| k >= a.dim()))
        {
            return Err(Error::DimensionMismatch(
                "involution matrix does not match the algebra".into(),
            ));
        }
        let inv = InvolutionMap { images };
        inv.validate(a)?;
        Ok(inv)
    }

    fn validate(&self, a: &StructureAlgebra) -> Result<()> {
        let n = a.dim();
        if let Some(i) = par::find_first(n, |i| {
            (self.apply(&self.images[i]) != Vector::unit(i)).then_some(i)
        }) {
            return Err(Error::NotAnInvolution(format!(
                "({})** != {}",
                a.label(i),
                a.label(i)
            )));
        }
        // rows[m] = basis indices j whose image involves e_m
        let mut rows: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (j, v) in self.images.iter().enumerate() {
            for (m, _) in v.iter() {
                rows[m].push(j);
            }
        }
        let bad = par::find_first(n, |i| {
            // Pairs with e_i e_j = 0 still need e_j* e_i* = 0; those can only
            // be nonzero when some basis product in the supports is nonzero.
            let mut js: Vec<usize> = a.right_support(i).collect();
            for (l, _) in self.images[i].iter() {
                for &m in a.left_support(l) {
                    js.extend_from_slice(&rows[m]);
                }
            }
            js.sort_unstable();
            js.dedup();
            js.into_iter().find_map(|j| {
                let lhs = self.apply(&a.basis_product(i, j).cloned().unwrap_or_default());
                let rhs = a.mul(&self.images[j], &self.images[i]);
                (lhs != rhs).then_some((i, j))
            })
        });
        match bad {
            Some((i, j)) => Err(Error::NotAnInvolution(format!(
                "({} {})* != {}* {}*",
                a.label(i),
                a.label(j),
                a.label(j),
                a.label(i)
            ))),
            None => Ok(()),
        }
    }

    pub fn dim(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[Vector] {
        &self.images
    }

    pub fn apply(&self, x: &Vector) -> Vector {
        Vector::combination(x.iter().map(|(i, c)| (c, &self.images[i])))
    }

    /// `H(A,*)`, the +1 eigenspace.
    pub fn symmetric_part(&self) -> Subspace {
        let images: Vec<Vector> = self
            .images
            .iter()
            .enumerate()
            .map(|(i, v)| v.sub(&Vector::unit(i)))
            .collect();
        kernel(self.dim(), &images)
    }

    /// The -1 eigenspace.
    pub fn skew_part(&self) -> Subspace {
        let images: Vec<Vector> = self
            .images
            .iter()
            .enumerate()
            .map(|(i, v)| v.add(&Vector::unit(i)))
            .collect();
        kernel(self.dim(), &images)
    }
}

/// Matrix transpose on `M_n` (basis indexed row-major).
pub fn involution_transpose(a: &StructureAlgebra, n: usize) -> Result<InvolutionMap> {
    if a.dim() != n * n {
        return Err(Error::DimensionMismatch(format!(
            "{} is not M{n}",
            a.name()
        )));
    }
    InvolutionMap::new(
        a,
        (0..n * n)
            .map(|k| Vector::unit((k % n) * n + k / n))
            .collect(),
    )
}

/// The symplectic involution on `M_2`: `[[a,b],[c,d]] -> [[d,-b],[-c,a]]`.
pub fn involution_symplectic(a: &StructureAlgebra) -> Result<InvolutionMap> {
    if a.dim() != 4 {
        return Err(Error::DimensionMismatch(format!("{} is not M2", a.name())));
    }
    let m = -Rational::ONE;
    InvolutionMap::new(
        a,
        vec![
            Vector::unit(3),
            Vector::single(1, m.clone()),
            Vector::single(2, m),
            Vector::unit(0),
        ],
    )
}

/// The exchange involution `a + b^op -> b + a^op` on `A ⊕ A^op`, where the
/// second summand occupies the upper half of the coordinates.
pub fn involution_exchange(a: &StructureAlgebra) -> Result<InvolutionMap> {
    if a.dim() % 2 != 0 {
        return Err(Error::DimensionMismatch(format!(
            "{} has odd dimension",
            a.name()
        )));
    }
    let h = a.dim() / 2;
    InvolutionMap::new(
        a,
        (0..a.dim())
            .map(|k| Vector::unit(if k < h { k + h } else { k - h }))
            .collect(),
    )
}
