use std::sync::Arc;

use super::derivation::verify_derivation;
use crate::error::{Error, Result};
use crate::jordanmaps::{is_jordan_hom, JordanWitness, LinearMap};
use crate::linalg::{Subspace, Vector};
use crate::rational::Rational;
use crate::strucalg::{quotient, QuotientMap, StructureAlgebra};

/// `B = A × A/J` with `(x,u) ⋆ (y,v) = (xy, π(d(x)g(y)) + π(x)v + uπ(y))`
/// and the map `φ(x) = (x, ½π((dg)(x)))`.
#[derive(Clone, Debug)]
pub struct LappInstance {
    pub algebra: Arc<StructureAlgebra>,
    pub d: LinearMap,
    pub g: LinearMap,
    pub ideal: Subspace,
    pub projection: QuotientMap,
    /// `B`; basis elements `0..dim A` are `(e_i, 0)`, the rest `(0, [e_k])`
    /// for the kept indices of the projection.
    pub product: Arc<StructureAlgebra>,
    pub phi: LinearMap,
    pub witness: JordanWitness,
    /// The first `x` of the family `{e_i, e_i + e_j}` with
    /// `[g(x), d(x)] ∉ J`, if any.
    pub bracket_failure: Option<Vector>,
}

impl LappInstance {
    /// `(x, 0)` in `B`.
    pub fn left(&self, x: &Vector) -> Vector {
        x.clone()
    }

    /// `(0, π(x))` in `B`.
    pub fn right(&self, x: &Vector) -> Vector {
        let n = self.algebra.dim();
        self.projection.project(x).reindex(|k| k + n)
    }

    pub fn bracket_condition_holds(&self) -> bool {
        self.bracket_failure.is_none()
    }

    /// `g(s)d(t) − d(s)g(t)`.
    pub fn obstruction_value(&self, s: &Vector, t: &Vector) -> Vector {
        let a = &self.algebra;
        a.mul(&self.g.apply(s), &self.d.apply(t))
            .sub(&a.mul(&self.d.apply(s), &self.g.apply(t)))
    }
}

/// Whether `g(s)d(t) − d(s)g(t) ∉ J`, which rules out a standard
/// decomposition of `φ`.
pub fn lapp_obstruction(inst: &LappInstance, s: &Vector, t: &Vector) -> bool {
    !inst.ideal.contains(&inst.obstruction_value(s, t))
}

fn star_product(
    a: &StructureAlgebra,
    d: &LinearMap,
    g: &LinearMap,
    pi: &QuotientMap,
    kept: usize,
) -> Result<StructureAlgebra> {
    let n = a.dim();
    let shift = |v: Vector| v.reindex(|k| k + n);
    let mut rows: Vec<Vec<(usize, Vector)>> = Vec::with_capacity(n + kept);
    for i in 0..n {
        let mut row = Vec::new();
        for j in 0..n {
            let xy = a.basis_product(i, j).cloned().unwrap_or_default();
            let tail = shift(pi.project(&a.mul(d.image(i), g.image(j))));
            let v = xy.add(&tail);
            if !v.is_zero() {
                row.push((j, v));
            }
        }
        // (e_i, 0) ⋆ (0, [e_k]) = (0, π(e_i e_k))
        for (p, &k) in pi.kept().iter().enumerate() {
            let v = shift(pi.project(&a.basis_product(i, k).cloned().unwrap_or_default()));
            if !v.is_zero() {
                row.push((n + p, v));
            }
        }
        rows.push(row);
    }
    for &k in pi.kept() {
        let row = (0..n)
            .filter_map(|j| {
                let v = shift(pi.project(&a.basis_product(k, j).cloned().unwrap_or_default()));
                (!v.is_zero()).then_some((j, v))
            })
            .collect();
        rows.push(row);
    }
    let mut labels: Vec<String> = a.labels().iter().map(|l| format!("({l},0)")).collect();
    labels.extend(pi.kept().iter().map(|&k| format!("(0,[{}])", a.label(k))));
    let b = StructureAlgebra::from_rows_unchecked(
        format!("{}x{}/J", a.name(), a.name()),
        labels,
        rows,
        a.unit().cloned(),
    )?;
    b.verify_associativity()?;
    b.verify_unit()?;
    Ok(b)
}

/// First `x` in `{e_i} ∪ {e_i + e_j}` with `[g(x), d(x)] ∉ J`. The
/// condition is quadratic in `x`, so this family decides it for all `x`.
fn bracket_failure(
    a: &StructureAlgebra,
    d: &LinearMap,
    g: &LinearMap,
    j: &Subspace,
) -> Option<Vector> {
    let n = a.dim();
    let fails = |x: &Vector| !j.contains(&a.commutator(&g.apply(x), &d.apply(x)));
    (0..n)
        .flat_map(|p| (p..n).map(move |q| (p, q)))
        .find_map(|(p, q)| {
            let x = if p == q {
                a.basis(p)
            } else {
                a.basis(p).add(&a.basis(q))
            };
            fails(&x).then_some(x)
        })
}

/// Builds `B = A × A/J` under `⋆`, validates it, and classifies
/// `φ(x) = (x, ½π((dg)(x)))`.
pub fn build_lapp(
    a: Arc<StructureAlgebra>,
    d: LinearMap,
    g: LinearMap,
    j: Subspace,
) -> Result<LappInstance> {
    if !a.is_unital() {
        return Err(Error::Hypothesis("the algebra must be unital".into()));
    }
    verify_derivation(&d)?;
    verify_derivation(&g)?;
    let (_, pi) = quotient(&a, &j)?;
    let kept = pi.kept().len();
    let b = Arc::new(star_product(&a, &d, &g, &pi, kept)?);
    let n = a.dim();
    let half = Rational::new(1, 2);
    let phi = LinearMap::from_fn(a.clone(), b.clone(), |i| {
        let dg = d.apply(g.image(i));
        Vector::unit(i).add(&pi.project(&dg).reindex(|k| k + n).scale(&half))
    })?;
    let witness = is_jordan_hom(&phi)?;
    let bracket_failure = bracket_failure(&a, &d, &g, &j);
    Ok(LappInstance {
        algebra: a,
        d,
        g,
        ideal: j,
        projection: pi,
        product: b,
        phi,
        witness,
        bracket_failure,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counterex::inner_derivation;
    use crate::jordanmaps::is_hom;
    use crate::strucalg::{commutator_ideal, grassmann_algebra, matrix_algebra, upper_triangular};
    use rand::SeedableRng;

    #[test]
    fn zero_derivations_split() {
        let a = Arc::new(matrix_algebra(2));
        let zero = LinearMap::zero(a.clone(), a.clone());
        let inst = build_lapp(a.clone(), zero.clone(), zero, Subspace::zero(4)).unwrap();
        assert_eq!(inst.product.dim(), 8);
        assert!(inst.witness.classification.hom);
        assert!(is_hom(&inst.phi).passed);
        assert!(!lapp_obstruction(&inst, &a.basis(1), &a.basis(2)));
    }

    #[test]
    fn jordan_iff_bracket_condition() {
        let m2 = Arc::new(matrix_algebra(2));
        let ut = Arc::new(upper_triangular(2, false));
        let g3 = Arc::new(grassmann_algebra(3));
        let cases = vec![
            (m2.clone(), m2.basis(1), m2.basis(2), Subspace::zero(4)),
            (m2.clone(), m2.basis(1), m2.basis(1), Subspace::zero(4)),
            (ut.clone(), ut.basis(0), ut.basis(1), Subspace::zero(3)),
            (ut.clone(), ut.basis(0), ut.basis(1), commutator_ideal(&ut)),
            (g3.clone(), g3.basis(1), g3.basis(2), Subspace::zero(8)),
        ];
        let mut seen = [false, false];
        for (a, x, y, j) in cases {
            let inst = build_lapp(
                a.clone(),
                inner_derivation(&a, &x),
                inner_derivation(&a, &y),
                j,
            )
            .unwrap();
            assert_eq!(
                inst.witness.classification.jordan,
                inst.bracket_condition_holds(),
                "{}",
                a.name()
            );
            seen[inst.bracket_condition_holds() as usize] = true;
            // random full-space samples agree with the spanning family
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
            for _ in 0..20 {
                let z = crate::strucalg::random_element(a.dim(), &mut rng);
                let c = a.commutator(&inst.g.apply(&z), &inst.d.apply(&z));
                if inst.bracket_condition_holds() {
                    assert!(inst.ideal.contains(&c));
                }
            }
        }
        assert_eq!(seen, [true, true]);
    }

    #[test]
    fn obstruction_vanishes_for_equal_derivations_or_full_ideal() {
        let m2 = Arc::new(matrix_algebra(2));
        let d = inner_derivation(&m2, &m2.basis(1));
        let inst = build_lapp(m2.clone(), d.clone(), d.clone(), Subspace::zero(4)).unwrap();
        let full = build_lapp(
            m2.clone(),
            d.clone(),
            inner_derivation(&m2, &m2.basis(2)),
            Subspace::full(4),
        )
        .unwrap();
        assert_eq!(full.product.dim(), 4);
        for s in 0..4 {
            for t in 0..4 {
                assert!(!lapp_obstruction(&inst, &m2.basis(s), &m2.basis(t)));
                assert!(!lapp_obstruction(&full, &m2.basis(s), &m2.basis(t)));
            }
        }
    }
}
