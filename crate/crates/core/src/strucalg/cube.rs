use super::subspaces::{jordan_closure_violation, product_span};
use super::StructureAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{Subspace, Vector};

/// Outcome of checking `J I^3 ⊆ II` and `I^3 J ⊆ II`.
#[derive(Clone, Debug)]
pub struct CubeReport {
    /// `span{ u v u : u, v in I }`.
    pub cube: Subspace,
    /// `span{ (u∘v)∘w : u, v, w in I }`, kept for comparison.
    pub circ_cube: Subspace,
    /// `span{ u v : u, v in I }` in the associative algebra.
    pub square: Subspace,
    pub left_inclusion: bool,
    pub right_inclusion: bool,
}

impl CubeReport {
    pub fn holds(&self) -> bool {
        self.left_inclusion && self.right_inclusion
    }

    pub fn forms_agree(&self) -> bool {
        self.cube == self.circ_cube
    }
}

fn validate(a: &StructureAlgebra, j_amb: &Subspace, i: &Subspace) -> Result<()> {
    if let Some((p, q)) = jordan_closure_violation(a, j_amb) {
        return Err(Error::NotJordanClosed(format!(
            "basis elements {p} and {q} of the ambient subspace"
        )));
    }
    if !j_amb.contains_subspace(i) {
        return Err(Error::NotAnIdeal("I is not contained in J".into()));
    }
    for u in i.basis() {
        for x in j_amb.basis() {
            if !i.contains(&a.jordan(u, x)) {
                return Err(Error::NotAnIdeal(format!(
                    "{} ∘ {} leaves I",
                    a.format(u),
                    a.format(x)
                )));
            }
        }
    }
    Ok(())
}

/// `I^3 = span{ uvu }`, computed through the polarized family
/// `uvw + wvu` over basis elements of `I`.
pub fn jordan_cube(a: &StructureAlgebra, j_amb: &Subspace, i: &Subspace) -> Result<Subspace> {
    validate(a, j_amb, i)?;
    Ok(cube_span(a, i))
}

fn cube_span(a: &StructureAlgebra, i: &Subspace) -> Subspace {
    let b = i.basis();
    let mut vs: Vec<Vector> = Vec::new();
    for (p, u) in b.iter().enumerate() {
        for v in b {
            for w in &b[p..] {
                vs.push(a.mul3(u, v, w).add(&a.mul3(w, v, u)));
            }
        }
    }
    Subspace::span(a.dim(), vs.iter())
}

fn circ_cube_span(a: &StructureAlgebra, i: &Subspace) -> Subspace {
    let b = i.basis();
    let mut vs: Vec<Vector> = Vec::new();
    for u in b {
        for v in b {
            let uv = a.jordan(u, v);
            for w in b {
                vs.push(a.jordan(&uv, w));
            }
        }
    }
    Subspace::span(a.dim(), vs.iter())
}

/// Checks both inclusions of the cube lemma inside the associative algebra.
pub fn check_lema2(a: &StructureAlgebra, j_amb: &Subspace, i: &Subspace) -> Result<CubeReport> {
    validate(a, j_amb, i)?;
    let cube = cube_span(a, i);
    let square = product_span(a, i, i);
    let left_inclusion = square.contains_subspace(&product_span(a, j_amb, &cube));
    let right_inclusion = square.contains_subspace(&product_span(a, &cube, j_amb));
    Ok(CubeReport {
        circ_cube: circ_cube_span(a, i),
        cube,
        square,
        left_inclusion,
        right_inclusion,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::strucalg::{
        commutator_ideal, involution_transpose, matrix_algebra, upper_triangular,
    };

    #[test]
    fn triangular_commutator_ideal() {
        let a = upper_triangular(3, false);
        let full = Subspace::full(a.dim());
        let k = commutator_ideal(&a);
        let r = check_lema2(&a, &full, &k).unwrap();
        assert!(r.holds());
        // K(UT3) is the strictly upper part, where any triple product vanishes
        assert_eq!(r.cube.dim(), 0);
        let zero = Subspace::zero(a.dim());
        assert!(check_lema2(&a, &full, &zero).unwrap().holds());
    }

    #[test]
    fn symmetric_matrices() {
        let m2 = matrix_algebra(2);
        let h = involution_transpose(&m2, 2).unwrap().symmetric_part();
        let r = check_lema2(&m2, &h, &h).unwrap();
        assert!(r.holds());
        assert!(r.forms_agree());
        assert_eq!(r.cube, h);
    }

    #[test]
    fn rejects_non_ideals() {
        let m2 = matrix_algebra(2);
        let h = involution_transpose(&m2, 2).unwrap().symmetric_part();
        let e11 = Subspace::span(4, [m2.basis(0)].iter());
        assert!(matches!(
            check_lema2(&m2, &h, &e11),
            Err(Error::NotAnIdeal(_))
        ));
        let not_closed = Subspace::span(4, [m2.basis(1), m2.basis(2)].iter());
        assert!(matches!(
            jordan_cube(&m2, &not_closed, &not_closed),
            Err(Error::NotJordanClosed(_))
        ));
    }
}
