use std::collections::BTreeSet;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{rank, Subspace, Vector};
use crate::rational::Rational;
use crate::strucalg::StructureAlgebra;

/// A linear map from an algebra (or a subspace of it, such as `H(A,*)`)
/// into an algebra, stored by the images of the domain basis.
///
/// When `domain_space` is set, domain elements are still written in the
/// coordinates of the ambient algebra and the columns are the images of the
/// echelon basis of the subspace.
#[derive(Clone, Debug)]
pub struct LinearMap {
    domain: Arc<StructureAlgebra>,
    domain_space: Option<Subspace>,
    codomain: Arc<StructureAlgebra>,
    columns: Vec<Vector>,
    // preimage[m] = domain basis indices whose image involves codomain e_m
    preimage: Vec<Vec<usize>>,
}

impl LinearMap {
    pub fn new(
        domain: Arc<StructureAlgebra>,
        codomain: Arc<StructureAlgebra>,
        columns: Vec<Vector>,
    ) -> Result<Self> {
        if columns.len() != domain.dim() {
            return Err(Error::DimensionMismatch(format!(
                "{} columns for a domain of dimension {}",
                columns.len(),
                domain.dim()
            )));
        }
        Self::build(domain, None, codomain, columns)
    }

    /// A map defined on the subspace `w` of `domain`; `columns[k]` is the
    /// image of the `k`-th echelon basis vector of `w`.
    pub fn on_subspace(
        domain: Arc<StructureAlgebra>,
        w: Subspace,
        codomain: Arc<StructureAlgebra>,
        columns: Vec<Vector>,
    ) -> Result<Self> {
        if w.ambient_dim() != domain.dim() || columns.len() != w.dim() {
            return Err(Error::DimensionMismatch("subspace map shape".into()));
        }
        Self::build(domain, Some(w), codomain, columns)
    }

    fn build(
        domain: Arc<StructureAlgebra>,
        domain_space: Option<Subspace>,
        codomain: Arc<StructureAlgebra>,
        columns: Vec<Vector>,
    ) -> Result<Self> {
        let m = codomain.dim();
        let mut preimage = vec![Vec::new(); m];
        for (j, c) in columns.iter().enumerate() {
            for (k, _) in c.iter() {
                if k >= m {
                    return Err(Error::DimensionMismatch(format!(
                        "image of basis element {j} too long"
                    )));
                }
                preimage[k].push(j);
            }
        }
        Ok(LinearMap {
            domain,
            domain_space,
            codomain,
            columns,
            preimage,
        })
    }

    pub fn identity(a: Arc<StructureAlgebra>) -> Self {
        let cols = (0..a.dim()).map(Vector::unit).collect();
        Self::new(a.clone(), a, cols).expect("square")
    }

    pub fn zero(domain: Arc<StructureAlgebra>, codomain: Arc<StructureAlgebra>) -> Self {
        let cols = vec![Vector::zero(); domain.dim()];
        Self::new(domain, codomain, cols).expect("shape")
    }

    /// The map sending basis element `i` to `f(i)`.
    pub fn from_fn(
        domain: Arc<StructureAlgebra>,
        codomain: Arc<StructureAlgebra>,
        f: impl Fn(usize) -> Vector,
    ) -> Result<Self> {
        let cols = (0..domain.dim()).map(f).collect();
        Self::new(domain, codomain, cols)
    }

    pub fn domain(&self) -> &Arc<StructureAlgebra> {
        &self.domain
    }

    pub fn codomain(&self) -> &Arc<StructureAlgebra> {
        &self.codomain
    }

    pub fn domain_space(&self) -> Option<&Subspace> {
        self.domain_space.as_ref()
    }

    pub fn columns(&self) -> &[Vector] {
        &self.columns
    }

    /// Number of domain basis vectors.
    pub fn domain_dim(&self) -> usize {
        self.columns.len()
    }

    /// The `k`-th domain basis vector in ambient coordinates.
    pub fn domain_basis(&self, k: usize) -> Vector {
        match &self.domain_space {
            None => Vector::unit(k),
            Some(w) => w.basis()[k].clone(),
        }
    }

    /// Whether the domain is closed under the associative product.
    pub fn domain_is_associative(&self) -> bool {
        match &self.domain_space {
            None => true,
            Some(w) => crate::strucalg::is_subalgebra(&self.domain, w),
        }
    }

    /// Coordinates of a domain element on the domain basis.
    pub fn coordinates(&self, x: &Vector) -> Result<Vector> {
        match &self.domain_space {
            None => Ok(x.clone()),
            Some(w) => w.coordinate_vector(x).ok_or_else(|| {
                Error::Invalid(format!("{} is outside the domain", self.domain.format(x)))
            }),
        }
    }

    pub fn try_apply(&self, x: &Vector) -> Result<Vector> {
        Ok(self.apply_coords(&self.coordinates(x)?))
    }

    /// Applies the map to a domain element. Elements outside a subspace
    /// domain are an error in the caller; use [`LinearMap::try_apply`] to
    /// check.
    pub fn apply(&self, x: &Vector) -> Vector {
        self.try_apply(x).expect("argument lies in the domain")
    }

    pub fn apply_coords(&self, c: &Vector) -> Vector {
        Vector::combination(c.iter().map(|(k, x)| (x, &self.columns[k])))
    }

    pub fn image(&self, k: usize) -> &Vector {
        &self.columns[k]
    }

    pub fn rank(&self) -> usize {
        rank(self.columns.iter())
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.codomain.dim()
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.domain_dim()
    }

    pub fn image_space(&self) -> Subspace {
        Subspace::span(self.codomain.dim(), self.columns.iter())
    }

    fn same_shape(&self, other: &LinearMap) -> Result<()> {
        if self.domain_dim() != other.domain_dim()
            || self.codomain.dim() != other.codomain.dim()
            || self.domain_space != other.domain_space
        {
            return Err(Error::DimensionMismatch(
                "maps have different shapes".into(),
            ));
        }
        Ok(())
    }

    fn with_columns(&self, columns: Vec<Vector>) -> LinearMap {
        Self::build(
            self.domain.clone(),
            self.domain_space.clone(),
            self.codomain.clone(),
            columns,
        )
        .expect("same shape")
    }

    pub fn add(&self, other: &LinearMap) -> Result<LinearMap> {
        self.same_shape(other)?;
        Ok(self.with_columns(
            self.columns
                .iter()
                .zip(&other.columns)
                .map(|(a, b)| a.add(b))
                .collect(),
        ))
    }

    pub fn sub(&self, other: &LinearMap) -> Result<LinearMap> {
        self.same_shape(other)?;
        Ok(self.with_columns(
            self.columns
                .iter()
                .zip(&other.columns)
                .map(|(a, b)| a.sub(b))
                .collect(),
        ))
    }

    pub fn scale(&self, c: &Rational) -> LinearMap {
        self.with_columns(self.columns.iter().map(|v| v.scale(c)).collect())
    }

    /// `x -> e φ(x)` for a codomain element `e`.
    pub fn left_multiply(&self, e: &Vector) -> LinearMap {
        self.with_columns(
            self.columns
                .iter()
                .map(|v| self.codomain.mul(e, v))
                .collect(),
        )
    }

    /// `ψ ∘ φ`; `ψ` must be defined on the whole codomain of `φ`.
    pub fn then(&self, psi: &LinearMap) -> Result<LinearMap> {
        if psi.domain_space.is_some() || psi.domain.dim() != self.codomain.dim() {
            return Err(Error::DimensionMismatch(
                "composition shapes do not match".into(),
            ));
        }
        let cols = self.columns.iter().map(|v| psi.apply_coords(v)).collect();
        Self::build(
            self.domain.clone(),
            self.domain_space.clone(),
            psi.codomain.clone(),
            cols,
        )
    }

    /// Restricts the codomain to a subalgebra `w`, re-expressed in the given
    /// structure on the echelon basis of `w`.
    pub fn corestrict(&self, w: &Subspace, target: Arc<StructureAlgebra>) -> Result<LinearMap> {
        let cols = self
            .columns
            .iter()
            .map(|v| {
                w.coordinate_vector(v)
                    .ok_or_else(|| Error::Invalid("image leaves the target subspace".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::build(self.domain.clone(), self.domain_space.clone(), target, cols)
    }

    fn support_right(&self, v: &Vector) -> BTreeSet<usize> {
        v.support()
            .flat_map(|l| self.codomain.right_support(l))
            .collect()
    }

    fn support_left(&self, v: &Vector) -> BTreeSet<usize> {
        v.support()
            .flat_map(|l| self.codomain.left_support(l).iter().copied())
            .collect()
    }

    fn preimages(&self, codomain_indices: &BTreeSet<usize>) -> BTreeSet<usize> {
        codomain_indices
            .iter()
            .flat_map(|m| self.preimage[*m].iter().copied())
            .collect()
    }

    /// Domain basis indices `x` for which `v φ(x)` may be nonzero.
    pub(crate) fn right_partners_of(&self, v: &Vector) -> BTreeSet<usize> {
        if self.domain_space.is_some() {
            return (0..self.domain_dim()).collect();
        }
        self.preimages(&self.support_right(v))
    }

    /// Domain basis indices `x` for which `φ(x) v` may be nonzero.
    pub(crate) fn left_partners_of(&self, v: &Vector) -> BTreeSet<usize> {
        if self.domain_space.is_some() {
            return (0..self.domain_dim()).collect();
        }
        self.preimages(&self.support_left(v))
    }

    /// Domain basis indices `j` such that one of `e_i e_j`, `e_j e_i`,
    /// `φ(e_i) φ(e_j)`, `φ(e_j) φ(e_i)` may be nonzero. Every bilinear
    /// identity built from these products holds trivially outside this set.
    pub(crate) fn pair_partners(&self, i: usize) -> Vec<usize> {
        if self.domain_space.is_some() {
            return (0..self.domain_dim()).collect();
        }
        let mut out: BTreeSet<usize> = self.domain.right_support(i).collect();
        out.extend(self.domain.left_support(i).iter().copied());
        out.extend(self.right_partners_of(&self.columns[i]));
        out.extend(self.left_partners_of(&self.columns[i]));
        out.into_iter().collect()
    }

    /// Product of domain basis elements `k` and `l`, in ambient coordinates.
    pub(crate) fn domain_product(&self, k: usize, l: usize) -> Vector {
        match &self.domain_space {
            None => self.domain.basis_product(k, l).cloned().unwrap_or_default(),
            Some(w) => self.domain.mul(&w.basis()[k], &w.basis()[l]),
        }
    }

    pub fn to_document(&self) -> MapDocument {
        let m = self.codomain.dim();
        let matrix = (0..m)
            .map(|row| self.columns.iter().map(|c| c.get(row)).collect())
            .collect();
        MapDocument {
            domain: self.domain.name().to_string(),
            codomain: self.codomain.name().to_string(),
            matrix,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_document()).expect("serializable")
    }

    /// Reads a map between the given algebras; names and shape must match.
    pub fn from_json(
        text: &str,
        domain: Arc<StructureAlgebra>,
        codomain: Arc<StructureAlgebra>,
    ) -> Result<Self> {
        let doc: MapDocument = serde_json::from_str(text)?;
        if doc.domain != domain.name() || doc.codomain != codomain.name() {
            return Err(Error::Invalid(format!(
                "map is from {} to {}, expected {} to {}",
                doc.domain,
                doc.codomain,
                domain.name(),
                codomain.name()
            )));
        }
        if doc.matrix.len() != codomain.dim() || doc.matrix.iter().any(|r| r.len() != domain.dim())
        {
            return Err(Error::DimensionMismatch(format!(
                "matrix must be {} x {}",
                codomain.dim(),
                domain.dim()
            )));
        }
        let cols = (0..domain.dim())
            .map(|j| {
                Vector::from_pairs(
                    doc.matrix
                        .iter()
                        .enumerate()
                        .map(|(i, r)| (i, r[j].clone()))
                        .collect(),
                )
            })
            .collect();
        Self::new(domain, codomain, cols)
    }
}

/// On-disk form of a linear map: `matrix[i][j]` is the coefficient of the
/// `i`-th codomain basis element in the image of the `j`-th domain one.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct MapDocument {
    pub domain: String,
    pub codomain: String,
    pub matrix: Vec<Vec<Rational>>,
}
