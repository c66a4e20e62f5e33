//! Graded free-semigroup congruences, semigroup 2-cocycles and the truncated
//! matrix algebras built over them.

mod cocycle;
mod congruence;
mod pe;
mod presentation;

pub use cocycle::{build_cocycle, split_half, SemigroupCocycle};
pub use congruence::{
    congruence_closure, enumerate_words, find_leff1_witness, inner_congruence, GradedCongruence,
    Variant,
};
pub use pe::{
    build_pe1, build_pe2, Pe1Checks, Pe1Instance, Pe2Checks, Pe2Instance, StaircaseCertificate,
};
pub use presentation::{Presentation, RelationFamily, Word};
