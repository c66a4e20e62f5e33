use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::derivation::inner_derivation;
use super::lapp::{build_lapp, lapp_obstruction, LappInstance};
use crate::error::{Error, Result};
use crate::jordanmaps::{nearly_standard_report, CheckReport, LinearMap, Violation};
use crate::linalg::{Subspace, Vector};
use crate::par;
use crate::strucalg::{grassmann_algebra, random_element};

/// The Grassmann instance: `d = [e1, ·]`, `g = [e2, ·]`, `J = 0`, with the
/// checks of its non-standard but nearly-standard Jordan map.
#[derive(Clone, Debug)]
pub struct ExambInstance {
    pub lapp: LappInstance,
    /// `[a,x][b,x] = 0` on random triples.
    pub square_commutators: CheckReport,
    /// `d(x)g(x) = g(x)d(x) = 0` on the family `{e_i, e_i + e_j}`.
    pub products_vanish: bool,
    /// `dg = 0` as a matrix.
    pub dg_zero: bool,
    /// `g(e3)d(e4) − d(e3)g(e4)`.
    pub obstruction: Vector,
    pub obstructed: bool,
    pub phi1: LinearMap,
    pub phi2: LinearMap,
    pub nearly_standard: CheckReport,
}

impl ExambInstance {
    pub fn all_passed(&self) -> bool {
        self.square_commutators.passed
            && self.products_vanish
            && self.dg_zero
            && self.obstructed
            && self.lapp.witness.classification.jordan
            && self.nearly_standard.passed
    }
}

/// Builds the instance on the Grassmann algebra with `n >= 4` generators.
pub fn build_examb(n: usize, samples: usize, seed: u64) -> Result<ExambInstance> {
    if n < 4 {
        return Err(Error::Hypothesis(format!(
            "needs at least 4 generators, got {n}"
        )));
    }
    let a = Arc::new(grassmann_algebra(n));
    let dim = a.dim();
    let e = |k: usize| a.basis(1 << (k - 1));
    let d = inner_derivation(&a, &e(1));
    let g = inner_derivation(&a, &e(2));

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let triples: Vec<[Vector; 3]> = (0..samples)
        .map(|_| std::array::from_fn(|_| random_element(dim, &mut rng)))
        .collect();
    let bad = par::find_first(triples.len(), |s| {
        let [p, q, x] = &triples[s];
        let v = a.mul(&a.commutator(p, x), &a.commutator(q, x));
        (!v.is_zero()).then(|| Violation::new(&a, triples[s].to_vec(), "[a,x][b,x] ≠ 0"))
    });
    let square_commutators = CheckReport {
        name: "square-commutators".into(),
        passed: bad.is_none(),
        cases: samples as u64,
        exhaustive: false,
        violation: bad,
    };

    let products_vanish = (0..dim).all(|p| {
        (p..dim).all(|q| {
            let x = if p == q {
                a.basis(p)
            } else {
                a.basis(p).add(&a.basis(q))
            };
            let (dx, gx) = (d.apply(&x), g.apply(&x));
            a.mul(&dx, &gx).is_zero() && a.mul(&gx, &dx).is_zero()
        })
    });
    let dg_zero = g.then(&d)?.columns().iter().all(Vector::is_zero);

    let lapp = build_lapp(a.clone(), d, g, Subspace::zero(dim))?;
    let obstruction = lapp.obstruction_value(&e(3), &e(4));
    let obstructed = lapp_obstruction(&lapp, &e(3), &e(4));

    // φ1(x) = (x, e1[e2,x]), φ2(x) = (0, −e1[e2,x]); with J = 0 the second
    // component sits on indices dim..2dim
    let b = lapp.product.clone();
    let tail = |i: usize| {
        a.mul(&e(1), &a.commutator(&e(2), &a.basis(i)))
            .reindex(|k| k + dim)
    };
    let phi1 = LinearMap::from_fn(a.clone(), b.clone(), |i| Vector::unit(i).add(&tail(i)))?;
    let phi2 = LinearMap::from_fn(a.clone(), b.clone(), |i| tail(i).neg())?;
    let nearly_standard = nearly_standard_report(&lapp.phi, &phi1, &phi2);

    Ok(ExambInstance {
        lapp,
        square_commutators,
        products_vanish,
        dg_zero,
        obstruction,
        obstructed,
        phi1,
        phi2,
        nearly_standard,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jordanmaps::{check_nearly_standard_witness, is_antihom, is_hom};
    use crate::rational::Rational;

    #[test]
    fn four_generators() {
        let inst = build_examb(4, 100, 0).unwrap();
        assert!(inst.all_passed());
        // e1e2e3e4 is basis index 0b1111
        assert_eq!(inst.obstruction, Vector::single(15, Rational::from(8)));
        assert!(inst
            .lapp
            .phi
            .columns()
            .iter()
            .enumerate()
            .all(|(i, c)| *c == Vector::unit(i)));
        assert!(!inst.lapp.witness.classification.hom);
        assert!(!inst.lapp.witness.classification.antihom);
        assert!(!is_hom(&inst.phi1).passed || !is_antihom(&inst.phi2).passed);
        let zero = LinearMap::zero(inst.lapp.algebra.clone(), inst.lapp.product.clone());
        assert!(!check_nearly_standard_witness(
            &inst.lapp.phi,
            &inst.lapp.phi,
            &zero
        ));
    }

    #[test]
    fn five_generators_and_small_n() {
        let inst = build_examb(5, 20, 1).unwrap();
        assert!(inst.all_passed());
        assert!(matches!(build_examb(3, 10, 0), Err(Error::Hypothesis(_))));
    }
}
