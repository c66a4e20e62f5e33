use std::collections::BTreeMap;

use super::StructureAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{Subspace, Vector};
use crate::rational::Rational;

fn matrix_label(n: usize, i: usize, j: usize) -> String {
    if n < 10 {
        format!("e{}{}", i + 1, j + 1)
    } else {
        format!("e{},{}", i + 1, j + 1)
    }
}

/// The full matrix algebra `M_n(Q)` on matrix units `e_ij`, indexed
/// row-major.
pub fn matrix_algebra(n: usize) -> StructureAlgebra {
    assert!(n >= 1);
    let labels = (0..n * n).map(|k| matrix_label(n, k / n, k % n)).collect();
    let rows = (0..n * n)
        .map(|a| {
            let (i, j) = (a / n, a % n);
            (0..n)
                .map(|l| (j * n + l, Vector::unit(i * n + l)))
                .collect()
        })
        .collect();
    let unit = Vector::from_pairs((0..n).map(|i| (i * n + i, Rational::ONE)).collect());
    StructureAlgebra::from_rows_unchecked(format!("M{n}"), labels, rows, Some(unit))
        .expect("matrix units are consistent")
}

/// The one-dimensional algebra `Q`.
pub fn scalars() -> StructureAlgebra {
    let a = matrix_algebra(1).with_name("F");
    relabel(a, vec!["1".into()])
}

fn relabel(a: StructureAlgebra, labels: Vec<String>) -> StructureAlgebra {
    let rows = (0..a.dim()).map(|i| a.row(i).to_vec()).collect();
    StructureAlgebra::from_rows_unchecked(a.name().to_string(), labels, rows, a.unit().cloned())
        .expect("same shape")
}

/// The Grassmann algebra on `n` generators. Basis element `k` is the
/// product of the generators whose bits are set in `k`, in increasing order.
pub fn grassmann_algebra(n: usize) -> StructureAlgebra {
    assert!(n < 16, "Grassmann algebra too large");
    let dim = 1usize << n;
    let labels = (0..dim)
        .map(|s| {
            if s == 0 {
                "1".to_string()
            } else {
                (0..n)
                    .filter(|b| s >> b & 1 == 1)
                    .map(|b| format!("e{}", b + 1))
                    .collect()
            }
        })
        .collect();
    let rows = (0..dim)
        .map(|s| {
            (0..dim)
                .filter(|t| s & t == 0)
                .map(|t| {
                    // sign of moving each generator of t past the larger ones of s
                    let inversions: u32 = (0..n)
                        .filter(|b| t >> b & 1 == 1)
                        .map(|b| (s >> (b + 1)).count_ones())
                        .sum();
                    let c = if inversions % 2 == 0 {
                        Rational::ONE
                    } else {
                        -Rational::ONE
                    };
                    (t, Vector::single(s | t, c))
                })
                .collect()
        })
        .collect();
    StructureAlgebra::from_rows_unchecked(format!("G{n}"), labels, rows, Some(Vector::unit(0)))
        .expect("exterior products are consistent")
}

/// Upper triangular `n x n` matrices, or strictly upper triangular ones when
/// `strict` is set (then non-unital). Basis `e_ij` with `i <= j` (`i < j`),
/// row-major.
pub fn upper_triangular(n: usize, strict: bool) -> StructureAlgebra {
    assert!(n >= 1);
    let pos: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i..n).map(move |j| (i, j)))
        .filter(|(i, j)| !strict || i < j)
        .collect();
    let index: BTreeMap<(usize, usize), usize> =
        pos.iter().enumerate().map(|(k, p)| (*p, k)).collect();
    let labels = pos.iter().map(|&(i, j)| matrix_label(n, i, j)).collect();
    let rows = pos
        .iter()
        .map(|&(i, j)| {
            pos.iter()
                .enumerate()
                .filter(|(_, (p, _))| *p == j)
                .filter_map(|(b, &(_, l))| index.get(&(i, l)).map(|&k| (b, Vector::unit(k))))
                .collect()
        })
        .collect();
    let unit = (!strict)
        .then(|| Vector::from_pairs((0..n).map(|i| (index[&(i, i)], Rational::ONE)).collect()));
    let name = if strict {
        format!("SUT{n}")
    } else {
        format!("UT{n}")
    };
    StructureAlgebra::from_rows_unchecked(name, labels, rows, unit)
        .expect("matrix units are consistent")
}

/// `A ⊕ B` with componentwise product; `A` occupies the first `dim A`
/// coordinates.
pub fn direct_sum(a: &StructureAlgebra, b: &StructureAlgebra) -> StructureAlgebra {
    let n = a.dim();
    let labels = a
        .labels()
        .iter()
        .map(|l| format!("({l},0)"))
        .chain(b.labels().iter().map(|l| format!("(0,{l})")))
        .collect();
    let rows = (0..n)
        .map(|i| a.row(i).to_vec())
        .chain((0..b.dim()).map(|i| {
            b.row(i)
                .iter()
                .map(|(j, v)| (j + n, v.reindex(|k| k + n)))
                .collect()
        }))
        .collect();
    let unit = match (a.unit(), b.unit()) {
        (Some(u), Some(w)) => Some(u.add(&w.reindex(|k| k + n))),
        _ => None,
    };
    StructureAlgebra::from_rows_unchecked(format!("{}x{}", a.name(), b.name()), labels, rows, unit)
        .expect("direct sum of valid algebras")
}

/// The opposite algebra, `e_i ·op e_j = e_j e_i`.
pub fn opposite(a: &StructureAlgebra) -> StructureAlgebra {
    let mut rows: Vec<Vec<(usize, Vector)>> = vec![Vec::new(); a.dim()];
    for i in 0..a.dim() {
        for (j, v) in a.row(i) {
            rows[*j].push((i, v.clone()));
        }
    }
    let labels = a
        .labels()
        .iter()
        .map(|l| match l.strip_suffix("^op") {
            Some(base) => base.to_string(),
            None => format!("{l}^op"),
        })
        .collect();
    let name = match a.name().strip_suffix("^op") {
        Some(base) => base.to_string(),
        None => format!("{}^op", a.name()),
    };
    StructureAlgebra::from_rows_unchecked(name, labels, rows, a.unit().cloned())
        .expect("opposite of a valid algebra")
}

/// The natural projection `A -> A/I`, with `A/I` represented on the basis
/// elements of `A` that are not pivot columns of `I`.
#[derive(Clone, Debug)]
pub struct QuotientMap {
    ideal: Subspace,
    kept: Vec<usize>,
    position: BTreeMap<usize, usize>,
}

impl QuotientMap {
    pub fn ideal(&self) -> &Subspace {
        &self.ideal
    }

    /// Basis indices of `A` whose classes form the basis of the quotient.
    pub fn kept(&self) -> &[usize] {
        &self.kept
    }

    pub fn project(&self, x: &Vector) -> Vector {
        let r = self.ideal.reduce(x);
        r.reindex(|k| self.position[&k])
    }

    /// The representative of a quotient element on the kept basis.
    pub fn lift(&self, y: &Vector) -> Vector {
        y.reindex(|k| self.kept[k])
    }
}

/// Finds a product `a i` or `i a` leaving the subspace, if any.
pub fn ideal_violation(a: &StructureAlgebra, ideal: &Subspace) -> Option<String> {
    for v in ideal.basis() {
        for (l, _) in v.iter() {
            for (k, _) in a.row(l) {
                let p = a.mul_basis_right(v, *k);
                if !ideal.contains(&p) {
                    return Some(format!(
                        "{} * {} is not in the ideal",
                        a.format(v),
                        a.label(*k)
                    ));
                }
            }
            for &k in a.left_support(l) {
                let p = a.mul_basis_left(k, v);
                if !ideal.contains(&p) {
                    return Some(format!(
                        "{} * {} is not in the ideal",
                        a.label(k),
                        a.format(v)
                    ));
                }
            }
        }
    }
    None
}

/// `A/I` together with the projection. Fails with a witness product when
/// `I` is not a two-sided ideal.
pub fn quotient(a: &StructureAlgebra, ideal: &Subspace) -> Result<(StructureAlgebra, QuotientMap)> {
    if ideal.ambient_dim() != a.dim() {
        return Err(Error::DimensionMismatch(
            "ideal lives in a different space".into(),
        ));
    }
    if let Some(w) = ideal_violation(a, ideal) {
        return Err(Error::NotAnIdeal(w));
    }
    let pivots = ideal.pivots();
    let kept: Vec<usize> = (0..a.dim())
        .filter(|k| pivots.binary_search(k).is_err())
        .collect();
    let position = kept.iter().enumerate().map(|(p, &k)| (k, p)).collect();
    let map = QuotientMap {
        ideal: ideal.clone(),
        kept,
        position,
    };
    let rows = map
        .kept
        .iter()
        .map(|&i| {
            a.row(i)
                .iter()
                .filter_map(|(j, v)| map.position.get(j).map(|&pj| (pj, map.project(v))))
                .collect()
        })
        .collect();
    let labels = map
        .kept
        .iter()
        .map(|&k| format!("[{}]", a.label(k)))
        .collect();
    let unit = a.unit().map(|u| map.project(u));
    let q = StructureAlgebra::from_rows_unchecked(format!("{}/I", a.name()), labels, rows, unit)?;
    Ok((q, map))
}

/// A bilinear form on the basis of an algebra, stored sparsely.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BilinearForm {
    entries: BTreeMap<(usize, usize), Rational>,
}

impl BilinearForm {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set(&mut self, i: usize, j: usize, c: Rational) {
        if c.is_zero() {
            self.entries.remove(&(i, j));
        } else {
            self.entries.insert((i, j), c);
        }
    }

    pub fn get(&self, i: usize, j: usize) -> Rational {
        self.entries.get(&(i, j)).cloned().unwrap_or(Rational::ZERO)
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Rational)> + '_ {
        self.entries.iter().map(|((i, j), c)| (*i, *j, c))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn eval(&self, x: &Vector, y: &Vector) -> Rational {
        let mut acc = Rational::ZERO;
        for (i, a) in x.iter() {
            for ((_, j), c) in self.entries.range((i, 0)..=(i, usize::MAX)) {
                let b = y.get(*j);
                if !b.is_zero() {
                    acc += &(&(a * &b) * c);
                }
            }
        }
        acc
    }
}

/// `Â = A ⊕ Fz` with `a·b = ab + f(a,b) z` and `z` annihilating everything.
/// The new coordinate `z` is the last one.
pub fn cocycle_extension(a: &StructureAlgebra, f: &BilinearForm) -> Result<StructureAlgebra> {
    let z = a.dim();
    for (i, j, _) in f.entries() {
        if i >= z || j >= z {
            return Err(Error::DimensionMismatch(format!(
                "form entry ({i}, {j}) outside dimension {z}"
            )));
        }
    }
    let mut rows: Vec<Vec<(usize, Vector)>> = (0..z).map(|i| a.row(i).to_vec()).collect();
    for (i, j, c) in f.entries() {
        let row = &mut rows[i];
        match row.binary_search_by_key(&j, |(k, _)| *k) {
            Ok(p) => row[p].1 = row[p].1.add(&Vector::single(z, c.clone())),
            Err(p) => row.insert(p, (j, Vector::single(z, c.clone()))),
        }
    }
    rows.push(Vec::new());
    let mut labels = a.labels().to_vec();
    labels.push("z".into());
    let ext =
        StructureAlgebra::from_rows_unchecked(format!("{}+Fz", a.name()), labels, rows, None)?;
    ext.verify_associativity().map_err(|e| match e {
        Error::NonAssociative(i, j, k) => Error::CocycleViolation(i, j, k),
        other => other,
    })?;
    Ok(ext)
}

/// `A ⊕ Q·1` with the adjoined unit as the last coordinate.
pub fn unitization(a: &StructureAlgebra) -> StructureAlgebra {
    let n = a.dim();
    let mut rows: Vec<Vec<(usize, Vector)>> = (0..n)
        .map(|i| {
            let mut r = a.row(i).to_vec();
            r.push((n, Vector::unit(i)));
            r
        })
        .collect();
    let mut last: Vec<(usize, Vector)> = (0..n).map(|j| (j, Vector::unit(j))).collect();
    last.push((n, Vector::unit(n)));
    rows.push(last);
    let mut labels = a.labels().to_vec();
    labels.push("1".into());
    StructureAlgebra::from_rows_unchecked(
        format!("{}^1", a.name()),
        labels,
        rows,
        Some(Vector::unit(n)),
    )
    .expect("unitization of a valid algebra")
}

/// The structure of a subalgebra `W` in the coordinates of its echelon
/// basis. Fails when `W` is not closed under the product.
pub fn subalgebra_structure(a: &StructureAlgebra, w: &Subspace) -> Result<StructureAlgebra> {
    let basis = w.basis();
    let mut rows = Vec::with_capacity(basis.len());
    for (p, x) in basis.iter().enumerate() {
        let mut row = Vec::new();
        for (q, y) in basis.iter().enumerate() {
            let prod = a.mul(x, y);
            let c = w.coordinate_vector(&prod).ok_or_else(|| {
                Error::NotSubalgebra(format!(
                    "product of basis elements {p} and {q} leaves the subspace"
                ))
            })?;
            if !c.is_zero() {
                row.push((q, c));
            }
        }
        rows.push(row);
    }
    let labels = basis.iter().map(|x| a.format(x)).collect();
    let unit = match a.unit() {
        Some(u) => w.coordinate_vector(u),
        None => None,
    };
    StructureAlgebra::from_rows_unchecked(format!("sub({})", a.name()), labels, rows, unit)
}
