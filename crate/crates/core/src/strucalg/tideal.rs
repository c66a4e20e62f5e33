use std::collections::BTreeMap;

use super::subspaces::{ideal_span, sandwich_span};
use super::StructureAlgebra;
use crate::error::{Error, Result};
use crate::freealg::{FreePoly, TIdealGenerator};
use crate::linalg::{EchelonBuilder, Subspace, Vector};
use crate::par;

/// Which ideal closure turns the set of values into a T-ideal value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum IdealConvention {
    /// The two-sided ideal generated by the values (multipliers include 1).
    #[default]
    Unital,
    /// `span{ x v y }` with `x, y` in the algebra, the non-unital reading.
    Strict,
}

/// Evaluates `f` at `x_i -> assignment[i]`. The empty word evaluates to the
/// unit and fails on non-unital algebras.
pub fn evaluate(
    a: &StructureAlgebra,
    f: &FreePoly,
    assignment: &BTreeMap<u32, Vector>,
) -> Result<Vector> {
    let mut pairs = Vec::new();
    for (w, c) in f.terms() {
        let mut acc = match w.letters().first() {
            None => a.one()?,
            Some(l) => assignment
                .get(l)
                .ok_or(Error::UnassignedGenerator(*l))?
                .clone(),
        };
        for l in w.letters().iter().skip(1) {
            if acc.is_zero() {
                break;
            }
            let x = assignment.get(l).ok_or(Error::UnassignedGenerator(*l))?;
            acc = a.mul(&acc, x);
        }
        pairs.extend(acc.iter().map(|(k, x)| (k, c * x)));
    }
    Ok(Vector::from_pairs(pairs))
}

/// Value of `f` on a tuple of basis elements, `x_{vars[p]} -> e_{idx[p]}`.
fn evaluate_basis(
    a: &StructureAlgebra,
    f: &FreePoly,
    slot: &BTreeMap<u32, usize>,
    idx: &[usize],
) -> Result<Vector> {
    let mut pairs = Vec::new();
    for (w, c) in f.terms() {
        let mut letters = w.letters().iter();
        let mut acc = match letters.next() {
            None => a.one()?,
            Some(l) => Vector::unit(idx[slot[l]]),
        };
        for l in letters {
            if acc.is_zero() {
                break;
            }
            acc = a.mul_basis_right(&acc, idx[slot[l]]);
        }
        pairs.extend(acc.iter().map(|(k, x)| (k, c * x)));
    }
    Ok(Vector::from_pairs(pairs))
}

/// Span of the values of a multilinear `f` on all basis tuples. By
/// multilinearity this is the span of all values of `f` on `A`.
pub fn multilinear_value_span(a: &StructureAlgebra, f: &FreePoly) -> Result<Subspace> {
    let n = a.dim();
    let vars: Vec<u32> = f.variables().into_iter().collect();
    let slot: BTreeMap<u32, usize> = vars.iter().enumerate().map(|(p, v)| (*v, p)).collect();
    if vars.is_empty() {
        let v = evaluate_basis(a, f, &slot, &[])?;
        return Ok(Subspace::span(n, [v].iter()));
    }
    let k = vars.len();
    // One task per choice of the first variable; each reduces its values
    // locally so only a basis is merged.
    let parts = par::map_range(n, |first| -> Result<Vec<Vector>> {
        let mut b = EchelonBuilder::new(n);
        let mut idx = vec![0usize; k];
        idx[0] = first;
        loop {
            let v = evaluate_basis(a, f, &slot, &idx)?;
            if !v.is_zero() {
                b.insert(&v);
                if b.rank() == n {
                    break;
                }
            }
            // odometer over positions 1..k
            let mut p = k;
            loop {
                if p == 1 {
                    return Ok(b.into_subspace().basis().to_vec());
                }
                p -= 1;
                idx[p] += 1;
                if idx[p] < n {
                    break;
                }
                idx[p] = 0;
            }
        }
        Ok(b.into_subspace().basis().to_vec())
    });
    let mut b = EchelonBuilder::new(n);
    for part in parts {
        for v in part? {
            b.insert(&v);
        }
    }
    Ok(b.into_subspace())
}

/// The value of the T-ideal generated by `gen` on `A`: the ideal generated
/// by all values of every member of the linearization family.
pub fn tideal_value(
    a: &StructureAlgebra,
    gen: &TIdealGenerator,
    convention: IdealConvention,
) -> Result<Subspace> {
    let mut values = Subspace::zero(a.dim());
    for lin in gen.linearizations() {
        values = values.sum(&multilinear_value_span(a, lin)?);
    }
    Ok(match convention {
        IdealConvention::Unital => ideal_span(a, values.basis()),
        IdealConvention::Strict => sandwich_span(a, values.basis()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::parse_poly;
    use crate::rational::Rational;
    use crate::strucalg::{commutator_ideal, grassmann_algebra, matrix_algebra, upper_triangular};

    fn hall() -> TIdealGenerator {
        TIdealGenerator::new(parse_poly("comm(comm(x1,x2)*comm(x1,x2),x3)").unwrap()).unwrap()
    }

    type Dense = Vec<Vec<Rational>>;

    fn dense_unit(n: usize, i: usize, j: usize) -> Dense {
        let mut m = vec![vec![Rational::ZERO; n]; n];
        m[i][j] = Rational::ONE;
        m
    }

    fn dmul(a: &Dense, b: &Dense) -> Dense {
        let n = a.len();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).map(|k| &a[i][k] * &b[k][j]).sum())
                    .collect()
            })
            .collect()
    }

    fn dsub(a: &Dense, b: &Dense) -> Dense {
        a.iter()
            .zip(b)
            .map(|(r, s)| r.iter().zip(s).map(|(x, y)| x - y).collect())
            .collect()
    }

    fn dcomm(a: &Dense, b: &Dense) -> Dense {
        dsub(&dmul(a, b), &dmul(b, a))
    }

    fn dense_hall(x: &Dense, y: &Dense, z: &Dense) -> Dense {
        let c = dcomm(x, y);
        dcomm(&dmul(&c, &c), z)
    }

    fn is_zero(m: &Dense) -> bool {
        m.iter().flatten().all(Rational::is_zero)
    }

    #[test]
    fn hall_vanishes_on_m2_by_dense_oracle() {
        // independent oracle: dense 2x2 matrices over all 4^3 basis triples and
        // the sums e_a + e_b needed for the quadratic variables
        let units: Vec<Dense> = (0..4).map(|k| dense_unit(2, k / 2, k % 2)).collect();
        let mut elems = units.clone();
        for a in 0..4 {
            for b in a + 1..4 {
                elems.push(
                    units[a]
                        .iter()
                        .zip(&units[b])
                        .map(|(r, s)| r.iter().zip(s).map(|(x, y)| x + y).collect())
                        .collect(),
                );
            }
        }
        for x in &elems {
            for y in &elems {
                for z in &units {
                    assert!(is_zero(&dense_hall(x, y, z)));
                }
            }
        }
        let m2 = matrix_algebra(2);
        assert!(tideal_value(&m2, &hall(), IdealConvention::Unital)
            .unwrap()
            .is_zero());
    }

    #[test]
    fn hall_is_nonzero_on_m3() {
        // dense oracle witness: x = e12, y = e21, z = e13 gives a nonzero value
        let (x, y, z) = (
            dense_unit(3, 0, 1),
            dense_unit(3, 1, 0),
            dense_unit(3, 0, 2),
        );
        let w = dense_hall(&x, &y, &z);
        assert!(!is_zero(&w));
        assert_eq!(w[0][2], Rational::ONE);
        let m3 = matrix_algebra(3);
        let v = tideal_value(&m3, &hall(), IdealConvention::Unital).unwrap();
        assert!(!v.is_zero());
        assert!(v.contains(&m3.basis(2)));
        let asg: BTreeMap<u32, Vector> = [(1, m3.basis(1)), (2, m3.basis(3)), (3, m3.basis(2))]
            .into_iter()
            .collect();
        assert_eq!(
            evaluate(&m3, hall().generator(), &asg).unwrap(),
            m3.basis(2)
        );
    }

    #[test]
    fn commutator_tideal_is_commutator_ideal() {
        let comm = TIdealGenerator::new(parse_poly("comm(x1,x2)").unwrap()).unwrap();
        for a in [
            matrix_algebra(2),
            upper_triangular(3, false),
            grassmann_algebra(3),
        ] {
            assert_eq!(
                tideal_value(&a, &comm, IdealConvention::Unital).unwrap(),
                commutator_ideal(&a),
                "{}",
                a.name()
            );
        }
        assert!(
            tideal_value(&matrix_algebra(2), &comm, IdealConvention::Unital)
                .unwrap()
                .is_full()
        );
    }

    #[test]
    fn conventions_differ_without_unit() {
        let sut = upper_triangular(3, true);
        let comm = TIdealGenerator::new(parse_poly("comm(x1,x2)").unwrap()).unwrap();
        let unital = tideal_value(&sut, &comm, IdealConvention::Unital).unwrap();
        let strict = tideal_value(&sut, &comm, IdealConvention::Strict).unwrap();
        assert_eq!(unital.dim(), 1);
        assert!(strict.is_zero());
    }

    #[test]
    fn constant_needs_unit() {
        let one = TIdealGenerator::new(FreePoly::one()).unwrap();
        assert!(
            tideal_value(&matrix_algebra(2), &one, IdealConvention::Unital)
                .unwrap()
                .is_full()
        );
        assert!(tideal_value(&upper_triangular(3, true), &one, IdealConvention::Unital).is_err());
    }
}
