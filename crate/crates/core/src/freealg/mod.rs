//! Exact arithmetic in the free associative algebra `Q<x1, x2, ...>`.
//!
//! Polynomials are finitely supported maps from [`Word`]s to nonzero
//! rationals, kept in degree-lexicographic order so printing and equality are
//! canonical. The empty word is the unit; callers that need the non-unital
//! free algebra restrict to positive-length words themselves.

mod linearize;
mod parse;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

pub use linearize::{full_linearization, partial_linearize, TIdealGenerator};
pub use parse::parse_poly;

use crate::error::{Error, Result};
use crate::rational::Rational;

/// A word in the generators, stored as 1-based generator indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<u32>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn new(letters: Vec<u32>) -> Self {
        assert!(
            letters.iter().all(|&l| l >= 1),
            "generator indices start at 1"
        );
        Word(letters)
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn degree_in(&self, var: u32) -> usize {
        self.0.iter().filter(|&&l| l == var).count()
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (k, l) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            write!(f, "x{l}")?;
        }
        Ok(())
    }
}

/// An element of the free algebra in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct FreePoly {
    terms: BTreeMap<Word, Rational>,
}

impl FreePoly {
    pub fn zero() -> Self {
        FreePoly::default()
    }

    pub fn one() -> Self {
        FreePoly::constant(Rational::ONE)
    }

    pub fn constant(c: Rational) -> Self {
        FreePoly::monomial(Word::empty(), c)
    }

    pub fn generator(i: u32) -> Self {
        FreePoly::monomial(Word::new(vec![i]), Rational::ONE)
    }

    pub fn monomial(w: Word, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(w, c);
        }
        FreePoly { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Word, Rational)>) -> Self {
        let mut p = FreePoly::zero();
        for (w, c) in terms {
            p.add_term(w, &c);
        }
        p
    }

    fn add_term(&mut self, w: Word, c: &Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(acc) => {
                *acc += c;
                if acc.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c.clone());
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, w: &Word) -> Rational {
        self.terms.get(w).cloned().unwrap_or(Rational::ZERO)
    }

    /// True iff the canonical form has empty support.
    pub fn is_identically_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &FreePoly) -> FreePoly {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &FreePoly) -> FreePoly {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), &-c);
        }
        out
    }

    pub fn neg(&self) -> FreePoly {
        self.scale(&-Rational::ONE)
    }

    pub fn scale(&self, c: &Rational) -> FreePoly {
        if c.is_zero() {
            return FreePoly::zero();
        }
        FreePoly {
            terms: self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect(),
        }
    }

    /// Bilinear extension of word concatenation.
    pub fn mul(&self, other: &FreePoly) -> FreePoly {
        let mut out = FreePoly::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                out.add_term(w1.concat(w2), &(c1 * c2));
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> FreePoly {
        let mut acc = FreePoly::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// The Jordan product `fg + gf`.
    pub fn jordan(&self, other: &FreePoly) -> FreePoly {
        self.mul(other).add(&other.mul(self))
    }

    /// The commutator `fg - gf`.
    pub fn lie(&self, other: &FreePoly) -> FreePoly {
        self.mul(other).sub(&other.mul(self))
    }

    /// Generators occurring in some term.
    pub fn variables(&self) -> BTreeSet<u32> {
        self.terms
            .keys()
            .flat_map(|w| w.letters().iter().copied())
            .collect()
    }

    pub fn max_variable(&self) -> u32 {
        self.variables().into_iter().max().unwrap_or(0)
    }

    /// Image under the algebra endomorphism `x_i -> assignment[i]`.
    pub fn substitute(&self, assignment: &BTreeMap<u32, FreePoly>) -> Result<FreePoly> {
        let mut out = FreePoly::zero();
        for (w, c) in &self.terms {
            let mut prod = FreePoly::constant(c.clone());
            for l in w.letters() {
                let img = assignment.get(l).ok_or(Error::UnassignedGenerator(*l))?;
                prod = prod.mul(img);
                if prod.is_identically_zero() {
                    break;
                }
            }
            out = out.add(&prod);
        }
        Ok(out)
    }

    /// Degree of every term in `var`, if all terms agree.
    pub fn homogeneous_degree_in(&self, var: u32) -> Option<usize> {
        let mut degs = self.terms.keys().map(|w| w.degree_in(var));
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    /// True when every term contains each variable of the polynomial exactly
    /// once.
    pub fn is_multilinear(&self) -> bool {
        let vars = self.variables();
        self.terms
            .keys()
            .all(|w| w.len() == vars.len() && vars.iter().all(|&v| w.degree_in(v) == 1))
    }

    /// Splits into multihomogeneous components keyed by the degree vector
    /// over [`FreePoly::variables`].
    pub fn multihomogeneous_components(&self) -> Vec<FreePoly> {
        let vars: Vec<u32> = self.variables().into_iter().collect();
        let mut parts: BTreeMap<Vec<usize>, FreePoly> = BTreeMap::new();
        for (w, c) in &self.terms {
            let key: Vec<usize> = vars.iter().map(|&v| w.degree_in(v)).collect();
            parts.entry(key).or_default().add_term(w.clone(), c);
        }
        parts.into_values().collect()
    }

    /// Drops the constant term, giving an element of the non-unital free
    /// algebra.
    pub fn without_constant(&self) -> FreePoly {
        let mut out = self.clone();
        out.terms.remove(&Word::empty());
        out
    }
}

impl fmt::Display for FreePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            let neg = c.signum() < 0;
            let mag = c.abs();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if w.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{w}")?;
            } else {
                write!(f, "{mag}*{w}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for FreePoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_poly(s)
    }
}
