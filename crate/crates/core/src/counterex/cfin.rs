use crate::error::{Error, Result};
use crate::linalg::{Subspace, Vector};
use crate::strucalg::{
    center, commutator_ideal, poly_derive, poly_mul, poly_slice_membership, PolyElement,
    StructureAlgebra,
};

/// The certificate that `A ⊗ F[x1,x2]` carries a non-standard Jordan
/// homomorphism: with `d = 1⊗∂₁`, `g = 1⊗∂₂`, `s = 1⊗x2`, `t = 1⊗x1`, the
/// element `g(s)d(t) − d(s)g(t) = 1⊗1` lies outside `J = K(A)⊗C`.
#[derive(Clone, Debug)]
pub struct CfinCReport {
    pub commutator_ideal: Subspace,
    pub value: PolyElement,
    pub value_is_one: bool,
    pub outside: bool,
}

impl CfinCReport {
    pub fn certified(&self) -> bool {
        self.value_is_one && self.outside
    }
}

fn require_unit(a: &StructureAlgebra) -> Result<Vector> {
    a.one()
        .map_err(|_| Error::Hypothesis(format!("{} has no unit", a.name())))
}

pub fn build_cfin_c(a: &StructureAlgebra) -> Result<CfinCReport> {
    let one = require_unit(a)?;
    let k = commutator_ideal(a);
    if k.is_full() {
        return Err(Error::Hypothesis(format!(
            "K({}) is the whole algebra",
            a.name()
        )));
    }
    let s = PolyElement::monomial(one.clone(), 0, 1);
    let t = PolyElement::monomial(one.clone(), 1, 0);
    let d = |p: &PolyElement| poly_derive(p, 1);
    let g = |p: &PolyElement| poly_derive(p, 2);
    let value = poly_mul(a, &g(&s), &d(&t)).sub(&poly_mul(a, &d(&s), &g(&t)));
    let value_is_one = value == PolyElement::monomial(one, 0, 0);
    let outside = !poly_slice_membership(&value, &k);
    Ok(CfinCReport {
        commutator_ideal: k,
        value,
        value_is_one,
        outside,
    })
}

/// Whether `a ∉ K(A) + Z(A)`, the membership the non-near-standardness
/// argument reduces to at bidegree `(0,0)`.
#[derive(Clone, Debug)]
pub struct CfinDReport {
    pub commutator_plus_center: Subspace,
    pub witness: bool,
}

pub fn build_cfin_d(a: &StructureAlgebra, element: &Vector) -> Result<CfinDReport> {
    require_unit(a)?;
    let kz = commutator_ideal(a).sum(&center(a));
    let lifted = PolyElement::monomial(element.clone(), 0, 0);
    let witness = !poly_slice_membership(&lifted, &kz);
    Ok(CfinDReport {
        commutator_plus_center: kz,
        witness,
    })
}
