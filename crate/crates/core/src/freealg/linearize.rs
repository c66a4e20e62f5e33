use itertools::Itertools;

use super::{FreePoly, Word};
use crate::error::{Error, Result};

/// The component of `f(var -> fresh_1 + ... + fresh_d)` that is linear in
/// every fresh variable, where `d = |fresh|` is the degree of `f` in `var`.
///
/// Each occurrence pattern of `var` in a word is replaced by every bijection
/// onto the fresh indices, so re-substituting `fresh_k -> var` multiplies `f`
/// by `d!`.
pub fn partial_linearize(f: &FreePoly, var: u32, fresh: &[u32]) -> Result<FreePoly> {
    let d = f
        .homogeneous_degree_in(var)
        .ok_or(Error::NotHomogeneous { var })?;
    if d == 0 {
        return Err(Error::Invalid(format!(
            "polynomial does not involve x{var}"
        )));
    }
    if fresh.len() != d {
        return Err(Error::Invalid(format!(
            "x{var} has degree {d} but {} fresh indices were given",
            fresh.len()
        )));
    }
    let used = f.variables();
    for (k, &v) in fresh.iter().enumerate() {
        if v == 0 || used.contains(&v) || fresh[..k].contains(&v) {
            return Err(Error::IndexCollision(v));
        }
    }
    let mut out = FreePoly::zero();
    for (w, c) in f.terms() {
        let positions: Vec<usize> = w
            .letters()
            .iter()
            .enumerate()
            .filter(|(_, &l)| l == var)
            .map(|(i, _)| i)
            .collect();
        for perm in fresh.iter().permutations(d) {
            let mut letters = w.letters().to_vec();
            for (&p, &&v) in positions.iter().zip(perm.iter()) {
                letters[p] = v;
            }
            out = out.add(&FreePoly::monomial(Word::new(letters), c.clone()));
        }
    }
    Ok(out)
}

/// Fully multilinearizes a multihomogeneous polynomial: every variable of
/// degree `d >= 2` is linearized with `d` fresh indices allocated above
/// `next_fresh`. Returns the result and the next unused index.
fn multilinearize_component(f: &FreePoly, mut next_fresh: u32) -> Result<(FreePoly, u32)> {
    let mut g = f.clone();
    for var in f.variables() {
        let d = g
            .homogeneous_degree_in(var)
            .ok_or(Error::NotHomogeneous { var })?;
        if d < 2 {
            continue;
        }
        let fresh: Vec<u32> = (next_fresh..next_fresh + d as u32).collect();
        next_fresh += d as u32;
        g = partial_linearize(&g, var, &fresh)?;
    }
    Ok((g, next_fresh))
}

/// The full multilinearization of every multihomogeneous component of `f`.
/// Zero components are dropped.
pub fn full_linearization(f: &FreePoly) -> Result<Vec<FreePoly>> {
    let base = f.max_variable() + 1;
    let mut out = Vec::new();
    for part in f.multihomogeneous_components() {
        let (lin, _) = multilinearize_component(&part, base)?;
        if !lin.is_identically_zero() && !out.contains(&lin) {
            out.push(lin);
        }
    }
    Ok(out)
}

/// A polynomial together with the multilinear family spanning the same
/// T-ideal values over a field of characteristic zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TIdealGenerator {
    generator: FreePoly,
    linearizations: Vec<FreePoly>,
}

impl TIdealGenerator {
    pub fn new(generator: FreePoly) -> Result<Self> {
        let linearizations = full_linearization(&generator)?;
        Ok(TIdealGenerator {
            generator,
            linearizations,
        })
    }

    pub fn generator(&self) -> &FreePoly {
        &self.generator
    }

    pub fn linearizations(&self) -> &[FreePoly] {
        &self.linearizations
    }

    /// Degree of the generator when it is itself multilinear.
    pub fn multilinear_degree(&self) -> Option<usize> {
        self.generator
            .is_multilinear()
            .then(|| self.generator.variables().len())
    }
}
