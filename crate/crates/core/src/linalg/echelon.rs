use std::collections::{BTreeMap, HashMap};

use super::Vector;
use crate::rational::Rational;

/// Incremental Gaussian elimination over sparse rows.
///
/// Rows are kept in semi-echelon form (each row starts at its own pivot with
/// coefficient 1 and contains no earlier pivot column). Optionally every row
/// carries a tag vector recording which inputs it was built from, which is how
/// kernels and linear dependencies are extracted.
#[derive(Clone, Debug)]
pub struct EchelonBuilder {
    dim: usize,
    rows: Vec<Vector>,
    tags: Option<Vec<Vector>>,
    pivot_row: HashMap<usize, usize>,
}

impl EchelonBuilder {
    pub fn new(dim: usize) -> Self {
        EchelonBuilder {
            dim,
            rows: Vec::new(),
            tags: None,
            pivot_row: HashMap::new(),
        }
    }

    pub fn tracked(dim: usize) -> Self {
        EchelonBuilder {
            tags: Some(Vec::new()),
            ..EchelonBuilder::new(dim)
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn reduce(&self, v: &Vector, mut tag: Option<Vector>) -> (Vector, Option<Vector>) {
        if self.rows.is_empty() || v.is_zero() {
            return (v.clone(), tag);
        }
        if !v.support().any(|c| self.pivot_row.contains_key(&c)) {
            return (v.clone(), tag);
        }
        let mut work: BTreeMap<usize, Rational> = v.iter().map(|(i, c)| (i, c.clone())).collect();
        let mut cursor = 0usize;
        loop {
            let Some((&col, _)) = work.range(cursor..).next() else {
                break;
            };
            if let Some(&r) = self.pivot_row.get(&col) {
                let c = work.remove(&col).expect("present");
                for (k, x) in self.rows[r].iter().skip(1) {
                    let e = work.entry(k).or_insert(Rational::ZERO);
                    *e -= &(&c * x);
                    if e.is_zero() {
                        work.remove(&k);
                    }
                }
                if let (Some(t), Some(tags)) = (tag.as_mut(), self.tags.as_ref()) {
                    *t = t.add_scaled(&-c, &tags[r]);
                }
            }
            cursor = col + 1;
        }
        (work.into_iter().collect(), tag)
    }

    fn push(&mut self, residual: Vector, tag: Option<Vector>) {
        let (pivot, lead) = residual.leading().expect("nonzero residual");
        let inv = lead.recip().expect("nonzero");
        let row = residual.scale(&inv);
        self.pivot_row.insert(pivot, self.rows.len());
        self.rows.push(row);
        if let (Some(tags), Some(t)) = (self.tags.as_mut(), tag) {
            tags.push(t.scale(&inv));
        }
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: &Vector) -> bool {
        let (residual, _) = self.reduce(v, None);
        if residual.is_zero() {
            false
        } else {
            self.push(residual, None);
            true
        }
    }

    /// Adds `v` carrying `tag`. When `v` is already in the span, returns the
    /// tag combination that reduces it to zero (a linear dependency).
    pub fn insert_tracked(&mut self, v: &Vector, tag: Vector) -> Option<Vector> {
        assert!(self.tags.is_some(), "builder is not tracked");
        let (residual, tag) = self.reduce(v, Some(tag));
        let tag = tag.expect("tracked");
        if residual.is_zero() {
            Some(tag)
        } else {
            self.push(residual, Some(tag));
            None
        }
    }

    /// Reduces `v` and reports the combination of inserted tags that cancels
    /// it, or `None` when `v` is outside the span.
    pub fn express(&self, v: &Vector) -> Option<Vector> {
        assert!(self.tags.is_some(), "builder is not tracked");
        let (residual, tag) = self.reduce(v, Some(Vector::zero()));
        residual.is_zero().then(|| tag.expect("tracked").neg())
    }

    pub fn contains(&self, v: &Vector) -> bool {
        self.reduce(v, None).0.is_zero()
    }

    pub fn into_subspace(self) -> Subspace {
        Subspace::from_semi_echelon(self.dim, self.rows)
    }
}

/// A linear subspace of `Q^n` stored by its reduced row-echelon basis.
///
/// The basis is canonical, so two subspaces are equal exactly when their
/// stored rows are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    rows: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            rows: (0..ambient).map(Vector::unit).collect(),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn span<'a>(ambient: usize, vectors: impl IntoIterator<Item = &'a Vector>) -> Self {
        let mut b = EchelonBuilder::new(ambient);
        for v in vectors {
            if b.rank() == ambient {
                break;
            }
            b.insert(v);
        }
        b.into_subspace()
    }

    fn from_semi_echelon(ambient: usize, mut rows: Vec<Vector>) -> Self {
        rows.sort_by_key(|r| r.leading().map(|(i, _)| i));
        let pivots: Vec<usize> = rows
            .iter()
            .map(|r| r.leading().expect("nonzero").0)
            .collect();
        // Back-substitute from the last pivot so each row is fully reduced
        // against every later one.
        for idx in (0..rows.len()).rev() {
            let row = &rows[idx];
            let needs: Vec<(usize, Rational)> = row
                .iter()
                .skip(1)
                .filter_map(|(c, x)| pivots.binary_search(&c).ok().map(|p| (p, x.clone())))
                .collect();
            if needs.is_empty() {
                continue;
            }
            let mut r = row.clone();
            for (p, x) in needs {
                r = r.add_scaled(&-x, &rows[p]);
            }
            rows[idx] = r;
        }
        Subspace {
            ambient,
            rows,
            pivots,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ambient
    }

    pub fn basis(&self) -> &[Vector] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// `v` minus its projection along the echelon basis; zero iff `v` lies in
    /// the subspace. The residual has no entries at pivot columns.
    pub fn reduce(&self, v: &Vector) -> Vector {
        let hits: Vec<(Rational, &Vector)> = v
            .iter()
            .filter_map(|(c, x)| {
                self.pivots
                    .binary_search(&c)
                    .ok()
                    .map(|p| (-x, &self.rows[p]))
            })
            .collect();
        if hits.is_empty() {
            return v.clone();
        }
        let mut out = v.clone();
        for (c, row) in hits {
            out = out.add_scaled(&c, row);
        }
        out
    }

    pub fn contains(&self, v: &Vector) -> bool {
        self.reduce(v).is_zero()
    }

    /// Coordinates of `v` in the echelon basis, if `v` is a member.
    pub fn coordinates(&self, v: &Vector) -> Option<Vec<Rational>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|p| v.get(*p)).collect())
    }

    /// Sparse form of [`Subspace::coordinates`].
    pub fn coordinate_vector(&self, v: &Vector) -> Option<Vector> {
        if !self.contains(v) {
            return None;
        }
        Some(
            v.iter()
                .filter_map(|(c, x)| self.pivots.binary_search(&c).ok().map(|p| (p, x.clone())))
                .collect(),
        )
    }

    /// The element with the given coordinates.
    pub fn element(&self, coords: &Vector) -> Vector {
        Vector::combination(coords.iter().map(|(k, c)| (c, &self.rows[k])))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        Subspace::span(self.ambient, self.rows.iter().chain(other.rows.iter()))
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.rows.iter().all(|v| self.contains(v))
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        // Kernel of (a, b) -> a - b over the concatenated bases.
        let n = self.dim();
        let images: Vec<Vector> = self
            .rows
            .iter()
            .cloned()
            .chain(other.rows.iter().map(|r| r.neg()))
            .collect();
        let ker = kernel(n + other.dim(), &images);
        Subspace::span(
            self.ambient,
            ker.basis()
                .iter()
                .map(|k| {
                    Vector::combination(
                        k.iter()
                            .filter(|(i, _)| *i < n)
                            .map(|(i, c)| (c, &self.rows[i])),
                    )
                })
                .collect::<Vec<_>>()
                .iter(),
        )
    }
}

/// Kernel of the linear map `Q^n -> Q^m` sending `e_i` to `images[i]`.
pub fn kernel(n: usize, images: &[Vector]) -> Subspace {
    assert_eq!(n, images.len());
    let mut b = EchelonBuilder::tracked(0);
    let mut deps = Vec::new();
    for (i, img) in images.iter().enumerate() {
        if let Some(dep) = b.insert_tracked(img, Vector::unit(i)) {
            deps.push(dep);
        }
    }
    Subspace::span(n, deps.iter())
}

/// Rank of a family of vectors.
pub fn rank<'a>(vectors: impl IntoIterator<Item = &'a Vector>) -> usize {
    let mut b = EchelonBuilder::new(0);
    vectors.into_iter().filter(|v| b.insert(v)).count()
}
