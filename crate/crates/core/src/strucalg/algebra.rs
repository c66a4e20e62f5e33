use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::linalg::Vector;
use crate::par;
use crate::rational::Rational;

/// A finite-dimensional associative algebra over the rationals.
///
/// `rows[i]` lists the nonzero basis products `e_i e_j` as `(j, e_i e_j)`
/// sorted by `j`; `cols[j]` lists every `i` with `e_i e_j != 0`. Elements of
/// the algebra are plain [`Vector`]s of coordinates; every operation that
/// needs the product takes the algebra explicitly.
#[derive(Clone, Debug)]
pub struct StructureAlgebra {
    name: String,
    labels: Vec<String>,
    rows: Vec<Vec<(usize, Vector)>>,
    cols: Vec<Vec<usize>>,
    unit: Option<Vector>,
}

impl PartialEq for StructureAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.rows == other.rows && self.unit == other.unit
    }
}

impl StructureAlgebra {
    /// Builds and validates an algebra from sparse structure constants
    /// `(i, j, k, c)` meaning `e_i e_j` has coefficient `c` at `e_k`.
    /// Repeated `(i, j, k)` entries are summed.
    pub fn new(
        name: impl Into<String>,
        labels: Vec<String>,
        structure: impl IntoIterator<Item = (usize, usize, usize, Rational)>,
        unit: Option<Vector>,
    ) -> Result<Self> {
        let dim = labels.len();
        let mut entries: Vec<(usize, usize, usize, Rational)> = structure.into_iter().collect();
        if let Some((i, j, k, _)) = entries
            .iter()
            .find(|(i, j, k, _)| *i >= dim || *j >= dim || *k >= dim)
        {
            return Err(Error::DimensionMismatch(format!(
                "structure constant ({i}, {j}, {k}) outside dimension {dim}"
            )));
        }
        entries.sort_by_key(|(i, j, _, _)| (*i, *j));
        let mut rows: Vec<Vec<(usize, Vector)>> = vec![Vec::new(); dim];
        for group in entries.chunk_by(|a, b| (a.0, a.1) == (b.0, b.1)) {
            let (i, j) = (group[0].0, group[0].1);
            let v = Vector::from_pairs(group.iter().map(|(_, _, k, c)| (*k, c.clone())).collect());
            rows[i].push((j, v));
        }
        let alg = Self::from_rows_unchecked(name, labels, rows, unit)?;
        alg.verify_associativity()?;
        alg.verify_unit()?;
        Ok(alg)
    }

    /// Builds an algebra from product rows without the associativity sweep.
    /// Used by constructions whose associativity follows from that of their
    /// inputs; tests re-run [`StructureAlgebra::verify_associativity`] on them.
    pub(crate) fn from_rows_unchecked(
        name: impl Into<String>,
        labels: Vec<String>,
        rows: Vec<Vec<(usize, Vector)>>,
        unit: Option<Vector>,
    ) -> Result<Self> {
        let dim = labels.len();
        if rows.len() != dim {
            return Err(Error::DimensionMismatch(format!(
                "{} product rows for {dim} labels",
                rows.len()
            )));
        }
        let mut clean: Vec<Vec<(usize, Vector)>> = Vec::with_capacity(dim);
        let mut cols: Vec<Vec<usize>> = vec![Vec::new(); dim];
        for (i, row) in rows.into_iter().enumerate() {
            let mut row: Vec<(usize, Vector)> =
                row.into_iter().filter(|(_, v)| !v.is_zero()).collect();
            row.sort_by_key(|(j, _)| *j);
            for w in row.windows(2) {
                if w[0].0 == w[1].0 {
                    return Err(Error::Invalid(format!(
                        "duplicate product e{i}*e{}",
                        w[0].0
                    )));
                }
            }
            for (j, v) in &row {
                if *j >= dim || v.max_index().is_some_and(|k| k >= dim) {
                    return Err(Error::DimensionMismatch(format!(
                        "product e{i}*e{j} outside dimension {dim}"
                    )));
                }
                cols[*j].push(i);
            }
            clean.push(row);
        }
        if let Some(u) = &unit {
            if u.max_index().is_some_and(|k| k >= dim) {
                return Err(Error::DimensionMismatch("unit vector too long".into()));
            }
        }
        Ok(StructureAlgebra {
            name: name.into(),
            labels,
            rows: clean,
            cols,
            unit,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn unit(&self) -> Option<&Vector> {
        self.unit.as_ref()
    }

    pub fn is_unital(&self) -> bool {
        self.unit.is_some()
    }

    pub fn one(&self) -> Result<Vector> {
        self.unit
            .clone()
            .ok_or_else(|| Error::Hypothesis(format!("algebra {} has no unit", self.name)))
    }

    pub fn basis(&self, i: usize) -> Vector {
        Vector::unit(i)
    }

    /// Nonzero products `e_i e_j`, sorted by `j`.
    pub fn row(&self, i: usize) -> &[(usize, Vector)] {
        &self.rows[i]
    }

    /// Indices `j` with `e_i e_j != 0`.
    pub fn right_support(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.rows[i].iter().map(|(j, _)| *j)
    }

    /// Indices `i` with `e_i e_j != 0`.
    pub fn left_support(&self, j: usize) -> &[usize] {
        &self.cols[j]
    }

    pub fn basis_product(&self, i: usize, j: usize) -> Option<&Vector> {
        let row = &self.rows[i];
        row.binary_search_by_key(&j, |(k, _)| *k)
            .ok()
            .map(|p| &row[p].1)
    }

    /// Number of nonzero basis products.
    pub fn nnz_products(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// All structure constants `(i, j, k, c)` in lexicographic order.
    pub fn structure_entries(&self) -> impl Iterator<Item = (usize, usize, usize, &Rational)> + '_ {
        self.rows.iter().enumerate().flat_map(|(i, row)| {
            row.iter()
                .flat_map(move |(j, v)| v.iter().map(move |(k, c)| (i, *j, k, c)))
        })
    }

    pub fn mul(&self, x: &Vector, y: &Vector) -> Vector {
        if x.is_zero() || y.is_zero() {
            return Vector::zero();
        }
        let mut acc: Vec<(usize, Rational)> = Vec::new();
        for (i, a) in x.iter() {
            let row = &self.rows[i];
            if row.is_empty() {
                continue;
            }
            if row.len() <= y.nnz() {
                for (j, p) in row {
                    let b = y.get(*j);
                    if b.is_zero() {
                        continue;
                    }
                    let ab = a * &b;
                    acc.extend(p.iter().map(|(k, c)| (k, &ab * c)));
                }
            } else {
                for (j, b) in y.iter() {
                    if let Ok(pos) = row.binary_search_by_key(&j, |(k, _)| *k) {
                        let ab = a * b;
                        acc.extend(row[pos].1.iter().map(|(k, c)| (k, &ab * c)));
                    }
                }
            }
        }
        Vector::from_pairs(acc)
    }

    /// `e_i * y`.
    pub fn mul_basis_left(&self, i: usize, y: &Vector) -> Vector {
        self.mul(&Vector::unit(i), y)
    }

    /// `x * e_j`.
    pub fn mul_basis_right(&self, x: &Vector, j: usize) -> Vector {
        self.mul(x, &Vector::unit(j))
    }

    pub fn mul3(&self, x: &Vector, y: &Vector, z: &Vector) -> Vector {
        self.mul(&self.mul(x, y), z)
    }

    pub fn commutator(&self, x: &Vector, y: &Vector) -> Vector {
        self.mul(x, y).sub(&self.mul(y, x))
    }

    pub fn jordan(&self, x: &Vector, y: &Vector) -> Vector {
        self.mul(x, y).add(&self.mul(y, x))
    }

    /// `x^n` for `n >= 1`; `x^0` is the unit and fails on non-unital algebras.
    pub fn pow(&self, x: &Vector, n: u32) -> Result<Vector> {
        if n == 0 {
            return self.one();
        }
        let mut acc = x.clone();
        for _ in 1..n {
            acc = self.mul(&acc, x);
        }
        Ok(acc)
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim()).all(|i| {
            self.rows[i]
                .iter()
                .all(|(j, p)| self.basis_product(*j, i) == Some(p))
                && self.cols[i].len() == self.rows[i].len()
        })
    }

    /// Checks `(e_i e_j) e_k = e_i (e_j e_k)` on every basis triple where
    /// either side can be nonzero; all other triples are trivially `0 = 0`.
    pub fn verify_associativity(&self) -> Result<()> {
        let n = self.dim();
        // Triples with e_i e_j != 0, scanned by i.
        let left = par::find_first(n, |i| {
            for (j, p) in &self.rows[i] {
                let mut ks: Vec<usize> = self.right_support(*j).collect();
                for (l, _) in p.iter() {
                    ks.extend(self.right_support(l));
                }
                ks.sort_unstable();
                ks.dedup();
                for k in ks {
                    let lhs = self.mul_basis_right(p, k);
                    let rhs = match self.basis_product(*j, k) {
                        Some(q) => self.mul_basis_left(i, q),
                        None => Vector::zero(),
                    };
                    if lhs != rhs {
                        return Some((i, *j, k));
                    }
                }
            }
            None
        });
        if let Some((i, j, k)) = left {
            return Err(Error::NonAssociative(i, j, k));
        }
        // Triples with e_i e_j = 0 and e_j e_k != 0, scanned by j.
        let right = par::find_first(n, |j| {
            for (k, q) in &self.rows[j] {
                let mut is: Vec<usize> = Vec::new();
                for (l, _) in q.iter() {
                    is.extend_from_slice(self.left_support(l));
                }
                is.sort_unstable();
                is.dedup();
                for i in is {
                    if self.basis_product(i, j).is_some() {
                        continue;
                    }
                    if !self.mul_basis_left(i, q).is_zero() {
                        return Some((i, j, *k));
                    }
                }
            }
            None
        });
        match right {
            Some((i, j, k)) => Err(Error::NonAssociative(i, j, k)),
            None => Ok(()),
        }
    }

    /// Checks `1 e_i = e_i 1 = e_i` for every basis element.
    pub fn verify_unit(&self) -> Result<()> {
        let Some(u) = &self.unit else {
            return Ok(());
        };
        let bad = par::find_first(self.dim(), |i| {
            let e = Vector::unit(i);
            (self.mul(u, &e) != e || self.mul(&e, u) != e).then_some(i)
        });
        match bad {
            Some(i) => Err(Error::UnitViolation(i)),
            None => Ok(()),
        }
    }

    /// Renders an element with the basis labels, e.g. `8*e1e2e3e4` or
    /// `e11 - e22`.
    pub fn format(&self, x: &Vector) -> String {
        if x.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (k, (i, c)) in x.iter().enumerate() {
            let neg = c.signum() < 0;
            let mag = c.abs();
            match (k, neg) {
                (0, true) => s.push('-'),
                (0, false) => {}
                (_, true) => s.push_str(" - "),
                (_, false) => s.push_str(" + "),
            }
            if mag.is_one() {
                s.push_str(&self.labels[i]);
            } else {
                let _ = write!(s, "{mag}*{}", self.labels[i]);
            }
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    fn m2_entries() -> Vec<(usize, usize, usize, Rational)> {
        let mut out = Vec::new();
        for i in 0..2 {
            for j in 0..2 {
                for l in 0..2 {
                    out.push((i * 2 + j, j * 2 + l, i * 2 + l, q(1)));
                }
            }
        }
        out
    }

    fn labels(n: usize) -> Vec<String> {
        (0..n).map(|i| format!("b{i}")).collect()
    }

    #[test]
    fn m2_from_constants() {
        let unit = Vector::from_pairs(vec![(0, q(1)), (3, q(1))]);
        let a = StructureAlgebra::new("M2", labels(4), m2_entries(), Some(unit)).unwrap();
        assert_eq!(a.dim(), 4);
        assert_eq!(a.mul(&a.basis(1), &a.basis(2)), a.basis(0));
        assert!(!a.is_commutative());
    }

    #[test]
    fn perturbed_m2_is_rejected() {
        let mut entries = m2_entries();
        // e12 * e21 = 2 e11 breaks (e12 e21) e12 = e12 e21 e12
        entries[4 + 2].3 = q(2);
        let err = StructureAlgebra::new("bad", labels(4), entries, None).unwrap_err();
        assert!(matches!(err, Error::NonAssociative(..)));
    }

    #[test]
    fn one_sided_zero_products_are_checked() {
        // e0 e0 = e1 but e1 e0 = e0: (e0 e0) e0 = e0 while e0 (e0 e0) = e0 e1 = 0.
        let entries = vec![(0, 0, 1, q(1)), (1, 0, 0, q(1))];
        assert!(StructureAlgebra::new("bad", labels(2), entries, None).is_err());
        // e0 e1 = 0, e1 e1 = e1, e0 e1 via producers: e0 (e1 e1) = 0 = (e0 e1) e1
        let ok = vec![(1, 1, 1, q(1)), (1, 0, 0, q(1))];
        assert!(StructureAlgebra::new("ok", labels(2), ok, None).is_ok());
        // {e1, e2} is the group algebra of Z/2 with e2 as identity, e0 e2 = e0
        // and e0 e1 = 0, so only e0 (e1 e1) = e0 exposes the failure.
        let bad = vec![
            (0, 2, 0, q(1)),
            (1, 1, 2, q(1)),
            (1, 2, 1, q(1)),
            (2, 1, 1, q(1)),
            (2, 2, 2, q(1)),
        ];
        assert_eq!(
            StructureAlgebra::new("bad2", labels(3), bad, None).unwrap_err(),
            Error::NonAssociative(0, 1, 1)
        );
    }

    #[test]
    fn unit_is_validated() {
        let wrong = Vector::unit(0);
        let err = StructureAlgebra::new("M2", labels(4), m2_entries(), Some(wrong)).unwrap_err();
        assert!(matches!(err, Error::UnitViolation(_)));
    }

    #[test]
    fn formatting() {
        let a = StructureAlgebra::new("M2", labels(4), m2_entries(), None).unwrap();
        let x = Vector::from_pairs(vec![(0, q(1)), (3, q(-1)), (1, Rational::new(-1, 2))]);
        assert_eq!(a.format(&x), "b0 - 1/2*b1 - b3");
        assert_eq!(a.format(&Vector::zero()), "0");
    }
}
