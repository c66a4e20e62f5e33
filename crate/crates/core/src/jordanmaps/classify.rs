use serde::Serialize;

use super::inputs::random_tuples;
use super::report::{CheckReport, Violation};
use super::LinearMap;
use crate::error::{Error, Result};
use crate::linalg::Vector;
use crate::par;
use crate::strucalg::jordan_closure_violation;

/// Which multiplicative laws a map satisfies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub jordan: bool,
    pub hom: bool,
    pub antihom: bool,
}

/// A map together with its classification and the checks behind it.
#[derive(Clone, Debug)]
pub struct JordanWitness {
    pub map: LinearMap,
    pub classification: Classification,
    pub jordan: CheckReport,
    /// `None` when the domain is not closed under the associative product.
    pub hom: Option<CheckReport>,
    pub antihom: Option<CheckReport>,
    /// Sampled `φ(x²) = φ(x)²` and `φ(xyx) = φ(x)φ(y)φ(x)`, run when the
    /// map is Jordan on an associative domain.
    pub consequences: Option<CheckReport>,
}

impl JordanWitness {
    /// The first basis pair on which the Jordan law fails.
    pub fn counterexample(&self) -> Option<&Violation> {
        self.jordan.violation.as_ref()
    }

    pub fn reports(&self) -> Vec<&CheckReport> {
        [
            Some(&self.jordan),
            self.hom.as_ref(),
            self.antihom.as_ref(),
            self.consequences.as_ref(),
        ]
        .into_iter()
        .flatten()
        .collect()
    }
}

#[derive(Clone, Copy)]
enum Law {
    Jordan,
    Hom,
    Antihom,
}

fn image_of_product(phi: &LinearMap, k: usize, l: usize, law: Law) -> Result<Vector> {
    let p = match law {
        Law::Jordan => phi.domain_product(k, l).add(&phi.domain_product(l, k)),
        _ => phi.domain_product(k, l),
    };
    match phi.domain_space() {
        None => Ok(phi.apply_coords(&p)),
        Some(_) => phi.try_apply(&p),
    }
}

fn product_of_images(phi: &LinearMap, k: usize, l: usize, law: Law) -> Vector {
    let b = phi.codomain();
    let (x, y) = (phi.image(k), phi.image(l));
    match law {
        Law::Jordan => b.jordan(x, y),
        Law::Hom => b.mul(x, y),
        Law::Antihom => b.mul(y, x),
    }
}

fn check_law(phi: &LinearMap, law: Law) -> CheckReport {
    let d = phi.domain_dim();
    let name = match law {
        Law::Jordan => "jordan",
        Law::Hom => "hom",
        Law::Antihom => "antihom",
    };
    let violation = par::find_first(d, |k| {
        phi.pair_partners(k)
            .into_iter()
            .filter(|&l| !matches!(law, Law::Jordan) || l >= k)
            .find_map(|l| {
                let lhs = image_of_product(phi, k, l, law);
                let rhs = product_of_images(phi, k, l, law);
                let bad = match lhs {
                    Ok(lhs) if lhs == rhs => return None,
                    Ok(lhs) => format!(
                        "image of product is {} but product of images is {}",
                        phi.codomain().format(&lhs),
                        phi.codomain().format(&rhs)
                    ),
                    Err(e) => e.to_string(),
                };
                Some(Violation::new(
                    phi.domain(),
                    vec![phi.domain_basis(k), phi.domain_basis(l)],
                    bad,
                ))
            })
    });
    let cases = match law {
        Law::Jordan => d * (d + 1) / 2,
        _ => d * d,
    };
    CheckReport::from_search(name, cases as u64, true, violation)
}

/// Exhaustive check that `φ` preserves the associative product.
pub fn is_hom(phi: &LinearMap) -> CheckReport {
    check_law(phi, Law::Hom)
}

/// Exhaustive check that `φ` reverses the associative product.
pub fn is_antihom(phi: &LinearMap) -> CheckReport {
    check_law(phi, Law::Antihom)
}

fn check_consequences(phi: &LinearMap, samples: usize, seed: u64) -> CheckReport {
    let a = phi.domain();
    let b = phi.codomain();
    let tuples = random_tuples(phi, 2, samples, seed);
    let violation = par::find_first(tuples.len(), |s| {
        let (x, y) = (&tuples[s][0], &tuples[s][1]);
        let px = phi.apply(x);
        let py = phi.apply(y);
        if phi.apply(&a.mul(x, x)) != b.mul(&px, &px) {
            return Some(Violation::new(a, vec![x.clone()], "φ(x²) ≠ φ(x)²"));
        }
        if phi.apply(&a.mul3(x, y, x)) != b.mul3(&px, &py, &px) {
            return Some(Violation::new(
                a,
                vec![x.clone(), y.clone()],
                "φ(xyx) ≠ φ(x)φ(y)φ(x)",
            ));
        }
        None
    });
    CheckReport::from_search("jordan-consequences", samples as u64, false, violation)
}

/// Classifies `φ` as Jordan, homomorphism and antihomomorphism, each by an
/// exhaustive basis-pair check. The domain must be closed under `∘`.
pub fn is_jordan_hom(phi: &LinearMap) -> Result<JordanWitness> {
    if let Some(w) = phi.domain_space() {
        if let Some((p, q)) = jordan_closure_violation(phi.domain(), w) {
            return Err(Error::NotJordanClosed(format!(
                "domain basis elements {p} and {q}"
            )));
        }
    }
    let jordan = check_law(phi, Law::Jordan);
    let associative = phi.domain_is_associative();
    let (hom, antihom) = if associative {
        (Some(is_hom(phi)), Some(is_antihom(phi)))
    } else {
        (None, None)
    };
    let consequences = (associative && jordan.passed).then(|| check_consequences(phi, 50, 0));
    let classification = Classification {
        jordan: jordan.passed,
        hom: hom.as_ref().is_some_and(|r| r.passed),
        antihom: antihom.as_ref().is_some_and(|r| r.passed),
    };
    Ok(JordanWitness {
        map: phi.clone(),
        classification,
        jordan,
        hom,
        antihom,
        consequences,
    })
}
