//! Linear maps between structure algebras and verifiers for the identities
//! satisfied by Jordan homomorphisms.
//!
//! Bilinear laws (the Jordan law, homomorphism and antihomomorphism, the
//! Jacobson–Rickart and Smiley identities, the nearly-standard identity) are
//! checked on all basis tuples, with tuples that cannot produce a nonzero
//! term skipped by support. Identities of higher degree are checked on seeded
//! random samples, or on the polarization lattice with [`Sampling::Exhaustive`].

mod annihilator;
mod classify;
mod decompose;
mod identities;
mod inputs;
mod linear_map;
mod report;

pub use annihilator::{ann_quotient_map, AnnQuotient};
pub use classify::{is_antihom, is_hom, is_jordan_hom, Classification, JordanWitness};
pub use decompose::{
    check_nearly_standard_witness, nearly_standard_report, standard_decompose, Decomposition,
};
pub use identities::{
    check_deve, check_ene, check_jr_identities, check_jr_identities_polarized, check_le2,
    check_triple_identity, explore_le2_square,
};
pub use linear_map::{LinearMap, MapDocument};
pub use report::{CheckReport, Sampling, Violation};
