use super::classify::{is_antihom, is_hom, is_jordan_hom};
use super::report::{CheckReport, Violation};
use super::LinearMap;
use crate::error::{Error, Result};
use crate::linalg::Vector;
use crate::par;
use crate::strucalg::{central_idempotents, commutator_ideal};

/// A central idempotent `ε` with `εφ` a homomorphism and `(1−ε)φ` an
/// antihomomorphism.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub epsilon: Vector,
    /// Every candidate that passed, in the order searched.
    pub passing: Vec<Vector>,
    pub candidates: usize,
    pub surjective: bool,
}

/// Checks `ψ₁(e_i) ψ₂(e_j) = ψ₂(e_j) ψ₁(e_i) = 0` on all basis pairs.
fn images_annihilate(psi1: &LinearMap, psi2: &LinearMap) -> bool {
    let b = psi1.codomain();
    let d = psi1.domain_dim();
    par::find_first(d, |i| {
        (0..d).find(|&j| {
            !b.mul(psi1.image(i), psi2.image(j)).is_zero()
                || !b.mul(psi2.image(j), psi1.image(i)).is_zero()
        })
    })
    .is_none()
}

/// Searches the central idempotents of the codomain for the splitting of a
/// Jordan homomorphism into a homomorphism plus an antihomomorphism.
///
/// Fails with `Inconclusive` when the center of the codomain does not split
/// over the rationals or when no candidate passes.
pub fn standard_decompose(phi: &LinearMap) -> Result<Decomposition> {
    if phi.domain_space().is_some() {
        return Err(Error::Hypothesis(
            "the domain must be a whole algebra".into(),
        ));
    }
    let w = is_jordan_hom(phi)?;
    if let Some(v) = w.counterexample() {
        return Err(Error::NotJordan(format!(
            "{} on ({})",
            v.detail,
            v.formatted.join(", ")
        )));
    }
    let surjective = phi.is_surjective();
    let candidates = central_idempotents(phi.codomain())?;
    let passing: Vec<Vector> = candidates
        .iter()
        .filter(|e| {
            let psi1 = phi.left_multiply(e);
            let psi2 = phi.sub(&psi1).expect("same shape");
            is_hom(&psi1).passed && is_antihom(&psi2).passed && images_annihilate(&psi1, &psi2)
        })
        .cloned()
        .collect();
    match passing.first() {
        Some(e) => Ok(Decomposition {
            epsilon: e.clone(),
            passing: passing.clone(),
            candidates: candidates.len(),
            surjective,
        }),
        None => {
            let a = phi.domain();
            let mut notes = Vec::new();
            if !surjective {
                notes.push("the map is not surjective".to_string());
            }
            if !a.is_unital() {
                notes.push("the domain has no unit".to_string());
            }
            if commutator_ideal(a).dim() != a.dim() {
                notes.push("the domain differs from its commutator ideal".to_string());
            }
            Err(Error::Inconclusive(format!(
                "none of the {} central idempotents splits the map{}{}",
                candidates.len(),
                if notes.is_empty() { "" } else { "; " },
                notes.join(", ")
            )))
        }
    }
}

/// Checks `φ = φ₁ + φ₂` and `φ(xy) = φ(x)φ₁(y) + φ₂(y)φ(x)` on all basis
/// pairs (the second identity is bilinear, so this is exhaustive).
pub fn nearly_standard_report(phi: &LinearMap, phi1: &LinearMap, phi2: &LinearMap) -> CheckReport {
    let d = phi.domain_dim();
    let cases = (d * d) as u64;
    let sum_ok = phi1
        .add(phi2)
        .map(|s| s.columns() == phi.columns() && phi.domain_space().is_none())
        .unwrap_or(false);
    if !sum_ok {
        let v = Violation::new(phi.domain(), Vec::new(), "φ ≠ φ₁ + φ₂");
        return CheckReport::from_search("nearly-standard", cases, true, Some(v));
    }
    let a = phi.domain();
    let b = phi.codomain();
    let violation = par::find_first(d, |i| {
        (0..d).find_map(|j| {
            let lhs = phi.apply_coords(&a.basis_product(i, j).cloned().unwrap_or_default());
            let rhs = b
                .mul(phi.image(i), phi1.image(j))
                .add(&b.mul(phi2.image(j), phi.image(i)));
            (lhs != rhs).then(|| {
                Violation::new(
                    a,
                    vec![a.basis(i), a.basis(j)],
                    "φ(xy) ≠ φ(x)φ₁(y) + φ₂(y)φ(x)",
                )
            })
        })
    });
    CheckReport::from_search("nearly-standard", cases, true, violation)
}

pub fn check_nearly_standard_witness(phi: &LinearMap, phi1: &LinearMap, phi2: &LinearMap) -> bool {
    nearly_standard_report(phi, phi1, phi2).passed
}
