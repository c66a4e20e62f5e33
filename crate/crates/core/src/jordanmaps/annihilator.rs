use std::sync::Arc;

use super::LinearMap;
use crate::error::Result;
use crate::linalg::{Subspace, Vector};
use crate::strucalg::{
    annihilator_within, quotient, subalgebra_span, subalgebra_structure, QuotientMap,
    StructureAlgebra,
};

/// `B' = ⟨φ(J)⟩`, its annihilator, and the induced map into `B'/Ann(B')`.
#[derive(Clone, Debug)]
pub struct AnnQuotient {
    /// `B'` inside the codomain.
    pub generated: Subspace,
    /// `Ann(B')` inside the codomain.
    pub annihilator: Subspace,
    /// `B'` as an algebra on its echelon basis.
    pub generated_algebra: Arc<StructureAlgebra>,
    pub projection: QuotientMap,
    pub quotient: Arc<StructureAlgebra>,
    /// `φ̄ : J -> B'/Ann(B')`.
    pub induced: LinearMap,
}

impl AnnQuotient {
    /// The class in `B'/Ann(B')` of a codomain element lying in `B'`.
    pub fn class_of(&self, b: &Vector) -> Option<Vector> {
        self.generated
            .coordinate_vector(b)
            .map(|c| self.projection.project(&c))
    }
}

/// Computes `B' = ⟨φ(J)⟩`, `Ann(B') = { b in B' : bB' = B'b = 0 }`, the
/// quotient `B'/Ann(B')` and the map `φ̄` induced by `φ`.
pub fn ann_quotient_map(phi: &LinearMap) -> Result<AnnQuotient> {
    let b = phi.codomain();
    let gens: Vec<Vector> = phi
        .columns()
        .iter()
        .filter(|v| !v.is_zero())
        .cloned()
        .collect();
    let generated = subalgebra_span(b, &gens);
    // annihilating the generators is enough to annihilate all of B'
    let annihilator = annihilator_within(b, &generated, &gens);
    let generated_algebra =
        subalgebra_structure(b, &generated)?.with_name(format!("<{}>", b.name()));
    let ann_coords = Subspace::span(
        generated.dim(),
        annihilator
            .basis()
            .iter()
            .map(|v| {
                generated
                    .coordinate_vector(v)
                    .expect("annihilator lies in B'")
            })
            .collect::<Vec<_>>()
            .iter(),
    );
    let (q, projection) = quotient(&generated_algebra, &ann_coords)?;
    let quotient_alg = Arc::new(q.with_name(format!("<{}>/Ann", b.name())));
    let cols = phi
        .columns()
        .iter()
        .map(|v| projection.project(&generated.coordinate_vector(v).expect("image lies in B'")))
        .collect();
    let induced = match phi.domain_space() {
        None => LinearMap::new(phi.domain().clone(), quotient_alg.clone(), cols)?,
        Some(w) => {
            LinearMap::on_subspace(phi.domain().clone(), w.clone(), quotient_alg.clone(), cols)?
        }
    };
    Ok(AnnQuotient {
        generated,
        annihilator,
        generated_algebra: Arc::new(generated_algebra),
        projection,
        quotient: quotient_alg,
        induced,
    })
}
