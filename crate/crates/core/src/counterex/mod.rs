//! Counterexample constructions: the `⋆`-product extension `A × A/J` with
//! its Jordan map, the Grassmann instance, and the polynomial-extension
//! certificates for non-standard and non-nearly-standard maps.

mod cfin;
mod derivation;
mod examb;
mod lapp;

pub use cfin::{build_cfin_c, build_cfin_d, CfinCReport, CfinDReport};
pub use derivation::{inner_derivation, verify_derivation};
pub use examb::{build_examb, ExambInstance};
pub use lapp::{build_lapp, lapp_obstruction, LappInstance};
