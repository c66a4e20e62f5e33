use std::fmt;

use serde::{Deserialize, Serialize};

use crate::rational::Rational;

/// A sparse coordinate vector: strictly increasing indices, no stored zeros.
#[derive(Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Vector {
    entries: Vec<(usize, Rational)>,
}

impl Vector {
    pub fn zero() -> Self {
        Vector {
            entries: Vec::new(),
        }
    }

    pub fn unit(i: usize) -> Self {
        Vector {
            entries: vec![(i, Rational::ONE)],
        }
    }

    pub fn single(i: usize, c: Rational) -> Self {
        if c.is_zero() {
            Vector::zero()
        } else {
            Vector {
                entries: vec![(i, c)],
            }
        }
    }

    /// Builds a vector from arbitrary `(index, coefficient)` pairs, summing
    /// duplicates and dropping zeros.
    pub fn from_pairs(mut pairs: Vec<(usize, Rational)>) -> Self {
        pairs.sort_by_key(|(i, _)| *i);
        let mut entries: Vec<(usize, Rational)> = Vec::with_capacity(pairs.len());
        for (i, c) in pairs {
            match entries.last_mut() {
                Some((j, acc)) if *j == i => *acc += &c,
                _ => entries.push((i, c)),
            }
        }
        entries.retain(|(_, c)| !c.is_zero());
        Vector { entries }
    }

    pub fn from_dense(values: &[Rational]) -> Self {
        Vector {
            entries: values
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i, c.clone()))
                .collect(),
        }
    }

    pub fn to_dense(&self, dim: usize) -> Vec<Rational> {
        let mut out = vec![Rational::ZERO; dim];
        for (i, c) in &self.entries {
            out[*i] = c.clone();
        }
        out
    }

    pub fn get(&self, i: usize) -> Rational {
        match self.entries.binary_search_by_key(&i, |(j, _)| *j) {
            Ok(pos) => self.entries[pos].1.clone(),
            Err(_) => Rational::ZERO,
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Rational)> + '_ {
        self.entries.iter().map(|(i, c)| (*i, c))
    }

    pub fn entries(&self) -> &[(usize, Rational)] {
        &self.entries
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.entries.iter().map(|(i, _)| *i)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn leading(&self) -> Option<(usize, &Rational)> {
        self.entries.first().map(|(i, c)| (*i, c))
    }

    pub fn max_index(&self) -> Option<usize> {
        self.entries.last().map(|(i, _)| *i)
    }

    /// `self + c * other`.
    pub fn add_scaled(&self, c: &Rational, other: &Vector) -> Vector {
        if c.is_zero() || other.is_zero() {
            return self.clone();
        }
        let (a, b) = (&self.entries, &other.entries);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
            let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
            if take_a {
                out.push(a[i].clone());
                i += 1;
            } else if take_b {
                out.push((b[j].0, c * &b[j].1));
                j += 1;
            } else {
                let s = &a[i].1 + &(c * &b[j].1);
                if !s.is_zero() {
                    out.push((a[i].0, s));
                }
                i += 1;
                j += 1;
            }
        }
        Vector { entries: out }
    }

    pub fn add(&self, other: &Vector) -> Vector {
        self.add_scaled(&Rational::ONE, other)
    }

    pub fn sub(&self, other: &Vector) -> Vector {
        self.add_scaled(&-Rational::ONE, other)
    }

    pub fn scale(&self, c: &Rational) -> Vector {
        if c.is_zero() {
            return Vector::zero();
        }
        Vector {
            entries: self.entries.iter().map(|(i, x)| (*i, x * c)).collect(),
        }
    }

    pub fn neg(&self) -> Vector {
        Vector {
            entries: self.entries.iter().map(|(i, x)| (*i, -x)).collect(),
        }
    }

    /// Re-indexes every coordinate through `f`, which must be injective.
    pub fn reindex(&self, f: impl Fn(usize) -> usize) -> Vector {
        Vector::from_pairs(
            self.entries
                .iter()
                .map(|(i, c)| (f(*i), c.clone()))
                .collect(),
        )
    }

    /// Sum of `c_k * v_k`.
    pub fn combination<'a>(terms: impl IntoIterator<Item = (&'a Rational, &'a Vector)>) -> Vector {
        let mut pairs = Vec::new();
        for (c, v) in terms {
            if c.is_zero() {
                continue;
            }
            for (i, x) in v.iter() {
                pairs.push((i, c * x));
            }
        }
        Vector::from_pairs(pairs)
    }
}

impl fmt::Debug for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(self.entries.iter().map(|(i, c)| (i, c)))
            .finish()
    }
}

impl FromIterator<(usize, Rational)> for Vector {
    fn from_iter<T: IntoIterator<Item = (usize, Rational)>>(iter: T) -> Self {
        Vector::from_pairs(iter.into_iter().collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    #[test]
    fn from_pairs_merges_and_drops_zeros() {
        let v = Vector::from_pairs(vec![(3, q(1)), (1, q(2)), (3, q(-1)), (1, q(1))]);
        assert_eq!(v.entries(), &[(1, q(3))]);
    }

    #[test]
    fn add_scaled_cancels() {
        let a = Vector::from_pairs(vec![(0, q(1)), (2, q(2))]);
        let b = Vector::from_pairs(vec![(2, q(1)), (5, q(1))]);
        let c = a.add_scaled(&q(-2), &b);
        assert_eq!(c.entries(), &[(0, q(1)), (5, q(-2))]);
        assert!(a.sub(&a).is_zero());
    }
}
