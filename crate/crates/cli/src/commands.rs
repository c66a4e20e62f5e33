use std::time::Instant;

use jordan_core::counterex::{build_cfin_c, build_cfin_d, build_examb};
use jordan_core::jordanmaps::{
    check_deve, check_ene, check_jr_identities, check_jr_identities_polarized, check_le2, check_triple_identity,
    explore_le2_square, is_jordan_hom, standard_decompose, Sampling,
};
use jordan_core::semigroup::{
    build_cocycle, build_pe1, build_pe2, congruence_closure, find_leff1_witness, inner_congruence,
};
use jordan_core::strucalg::{ideal_violation, tideal_value, IdealConvention, InvolutionMap};
use jordan_core::Error as CoreError;
use serde_json::json;

use crate::builtins;
use crate::error::{CliError, Result};
use crate::report::RunReport;

/// Flags shared by every command.
#[derive(Clone, Debug, Default)]
pub struct Options {
    pub seed: u64,
    pub samples: Option<usize>,
    pub max_length: Option<usize>,
    pub exhaustive: bool,
}

impl Options {
    pub fn samples_or(&self, default: usize) -> usize {
        self.samples.unwrap_or(default)
    }

    pub fn max_length_or(&self, default: usize) -> usize {
        self.max_length.unwrap_or(default)
    }

    fn sampling(&self) -> Sampling {
        if self.exhaustive {
            Sampling::Exhaustive
        } else {
            Sampling::Random {
                samples: self.samples_or(50),
                seed: self.seed,
            }
        }
    }

    fn describe_sampling(&self, r: &mut RunReport) {
        if self.exhaustive {
            r.param("sampling", "exhaustive");
        } else {
            r.param("samples", self.samples_or(50)).param("seed", self.seed);
        }
    }
}

/// Largest domain on which the polarized JR check runs by default; its
/// cost grows like the fourth power of the dimension.
pub const POLARIZED_MAX_DIM: usize = 16;

/// Upper bound on the input tuples `--exhaustive` may evaluate.
pub const EXHAUSTIVE_BUDGET: u128 = 100_000_000;

/// Points `sum m_k e_k` with `sum m_k = n` in dimension `d`.
fn lattice_size(d: usize, n: u32) -> u128 {
    (1..=n as u128).fold(1, |acc, k| acc * (d as u128 + k - 1) / k)
}

/// Input tuples of the exhaustive identity suite: the lattice pairs of the
/// `n = 5` identity dominate.
fn exhaustive_cost(d: usize) -> u128 {
    let le2: u128 = [1, 3, 4, 5].iter().map(|&n| lattice_size(d, n).pow(2) * d as u128).sum();
    let ene: u128 = (1..=4).map(|m| lattice_size(d, m) * d as u128).sum();
    le2 + ene + (d as u128).pow(3)
}

/// Errors that are outcomes of a check rather than bad input.
fn is_outcome(e: &CoreError) -> bool {
    matches!(
        e,
        CoreError::NotJordan(_)
            | CoreError::Inconclusive(_)
            | CoreError::Hypothesis(_)
            | CoreError::Verification(_)
            | CoreError::NotJordanClosed(_)
            | CoreError::CocycleViolation(..)
            | CoreError::NotAnInvolution(_)
    )
}

fn timed(mut r: RunReport, start: Instant) -> RunReport {
    r.finish(start.elapsed());
    r
}

/// The Jordan law and every identity a Jordan homomorphism must satisfy.
pub fn verify_identities(algebra: &str, map: &str, opts: &Options) -> Result<RunReport> {
    let start = Instant::now();
    let mut r = RunReport::new("verify-identities");
    r.param("algebra", algebra).param("map", map);
    opts.describe_sampling(&mut r);
    let a = builtins::algebra(algebra, opts.max_length_or(6), opts.seed)?;
    let phi = builtins::map(&a, map, opts.seed)?;
    let sampling = opts.sampling();
    if opts.exhaustive {
        let cost = exhaustive_cost(phi.domain_dim());
        if cost > EXHAUSTIVE_BUDGET {
            return Err(CliError::usage(format!(
                "--exhaustive would evaluate about {cost} input tuples on a {}-dimensional domain; \
                 use sampling instead",
                phi.domain_dim()
            )));
        }
    }
    let w = is_jordan_hom(&phi)?;
    r.add_report(&w.jordan);
    if let Some(c) = &w.consequences {
        r.add_report(c);
    }
    r.value("hom", w.classification.hom).value("antihom", w.classification.antihom);
    if phi.domain_is_associative() {
        r.add_report(&check_jr_identities(&phi)?);
        if opts.exhaustive || phi.domain_dim() <= POLARIZED_MAX_DIM {
            r.add_report(&check_jr_identities_polarized(&phi)?);
        } else {
            r.value(
                "jr_polarized",
                format!("skipped above dimension {POLARIZED_MAX_DIM}; pass --exhaustive to run it"),
            );
        }
        r.add_report(&check_le2(&phi, &[1, 3, 4, 5], sampling)?);
        let samples = opts.samples_or(50);
        let square = match explore_le2_square(&phi, samples, opts.seed)? {
            None => format!("holds on {samples} samples"),
            Some(v) => format!("fails at ({})", v.formatted.join(", ")),
        };
        r.value("le2_square", square);
    }
    r.add_report(&check_ene(&phi, 4, sampling)?);
    r.add_report(&check_deve(&phi, sampling)?);
    Ok(timed(r, start))
}

/// Searches for `ε` with `εφ` a homomorphism and `(1−ε)φ` an antihomomorphism.
pub fn decompose(algebra: &str, map: &str, opts: &Options) -> Result<RunReport> {
    let start = Instant::now();
    let mut r = RunReport::new("decompose");
    r.param("algebra", algebra).param("map", map);
    let a = builtins::algebra(algebra, opts.max_length_or(6), opts.seed)?;
    let phi = builtins::map(&a, map, opts.seed)?;
    match standard_decompose(&phi) {
        Ok(d) => {
            let b = phi.codomain();
            r.check("standard-decomposition", true);
            r.value("epsilon", b.format(&d.epsilon))
                .value("candidates", d.candidates)
                .value("passing", d.passing.iter().map(|e| b.format(e)).collect::<Vec<_>>())
                .value("surjective", d.surjective);
        }
        Err(e) if is_outcome(&e) => r.fail("standard-decomposition", e),
        Err(e) => return Err(e.into()),
    }
    Ok(timed(r, start))
}

/// The Grassmann counterexample: nearly standard but not standard.
pub fn grassmann_demo(n: usize, opts: &Options) -> Result<RunReport> {
    let start = Instant::now();
    let mut r = RunReport::new("grassmann-demo");
    let samples = opts.samples_or(100);
    r.param("n", n).param("samples", samples).param("seed", opts.seed);
    let inst = match build_examb(n, samples, opts.seed) {
        Ok(i) => i,
        Err(e) if is_outcome(&e) => {
            r.fail("construction", e);
            return Ok(timed(r, start));
        }
        Err(e) => return Err(e.into()),
    };
    let a = &inst.lapp.algebra;
    r.add_report(&inst.lapp.witness.jordan);
    r.add_report(&inst.square_commutators);
    r.check("dg-zero", inst.dg_zero);
    r.check("images-annihilate", inst.products_vanish);
    r.check("obstruction-nonzero", inst.obstructed);
    r.add_report(&inst.nearly_standard);
    r.value("obstruction", a.format(&inst.obstruction))
        .value("bracket_condition", inst.lapp.bracket_condition_holds())
        .value("hom", inst.lapp.witness.classification.hom)
        .value("antihom", inst.lapp.witness.classification.antihom)
        .value("codomain_dim", inst.lapp.product.dim());
    Ok(timed(r, start))
}

/// The semigroup-cocycle pipeline ending in the obstruction `(α(u) − α(v)) z`.
pub fn pe2_demo(presentation: &str, generator: &str, opts: &Options) -> Result<RunReport> {
    let start = Instant::now();
    let mut r = RunReport::new("pe2-demo");
    let max_len = opts.max_length_or(6);
    r.param("presentation", presentation)
        .param("generator", generator)
        .param("max_length", max_len)
        .param("seed", opts.seed);
    let pres = builtins::presentation(presentation)?;
    let gen = builtins::generator(generator)?;
    let pe1 = match build_pe1(&pres, &gen, max_len, opts.seed) {
        Ok(p) => p,
        Err(e) if is_outcome(&e) => {
            r.fail("leff1-witness", e);
            return Ok(timed(r, start));
        }
        Err(e) => return Err(e.into()),
    };
    let (u, v) = &pe1.witness;
    let fmt = |w: &[u8]| pres.format_word(w);
    r.check("leff1-witness", true).witness = vec![fmt(u), fmt(v)];
    let c = &pe1.checks;
    r.check("staircase-membership", c.staircase);
    r.check("a1b1 = a2b2", c.products_agree);
    r.check("b1a1 = b2a2", c.reversed_products_agree);
    r.check("f(b1,a1) = f(b2,a2) = 0", c.reversed_form_vanishes);
    r.check("f(a1,b1) != f(a2,b2)", c.form_differs);
    let (u1, u2, v1, v2) = &pe1.split;
    r.value("split", json!([fmt(u1), fmt(u2), fmt(v1), fmt(v2)]))
        .value("alpha_u", pe1.cocycle.alpha(u).to_string())
        .value("alpha_v", pe1.cocycle.alpha(v).to_string())
        .value("f(a1,b1)", pe1.form_value(&pe1.a1, &pe1.b1).to_string())
        .value("f(a2,b2)", pe1.form_value(&pe1.a2, &pe1.b2).to_string())
        .value("dim_A", pe1.algebra.dim());
    if !c.all() {
        return Ok(timed(r, start));
    }
    let pe2 = match build_pe2(pe1) {
        Ok(p) => p,
        Err(e) if is_outcome(&e) => {
            r.fail("second-stage", e);
            return Ok(timed(r, start));
        }
        Err(e) => return Err(e.into()),
    };
    let c = &pe2.checks;
    r.check("extended-cocycle-laws", c.extended_form);
    r.check("involution", true);
    r.add_report(&pe2.jordan.jordan);
    r.check("injective", c.injective);
    r.check("image-symmetric", c.image_symmetric);
    r.check("onto-H(B,*)", c.onto_symmetric);
    r.check("obstruction = (f(a1,b1) - f(a2,b2)) z", c.obstruction_matches);
    r.check("obstruction-nonzero", c.obstruction_nonzero);
    r.value("dim_B", pe2.algebra.dim())
        .value("dim_H", pe2.symmetric_dim)
        .value("obstruction", pe2.algebra.format(&pe2.obstruction))
        .value("hom", pe2.jordan.classification.hom)
        .value("antihom", pe2.jordan.classification.antihom);
    Ok(timed(r, start))
}

/// The value of the T-ideal generated by a polynomial on an algebra.
pub fn tideal(generator: &str, algebra: &str, strict: bool, opts: &Options) -> Result<RunReport> {
    let start = Instant::now();
    let mut r = RunReport::new("tideal");
    r.param("generator", generator)
        .param("algebra", algebra)
        .param("convention", if strict { "strict" } else { "unital" });
    let gen = builtins::generator(generator)?;
    let a = builtins::algebra(algebra, opts.max_length_or(4), opts.seed)?;
    let convention = if strict { IdealConvention::Strict } else { IdealConvention::Unital };
    let value = tideal_value(&a.algebra, &gen, convention)?;
    let violation = ideal_violation(&a.algebra, &value);
    r.check_absent("value-is-ideal", violation);
    r.value("dimension", value.dim())
        .value("algebra_dimension", a.algebra.dim())
        .value("zero", value.is_zero())
        .value("whole_algebra", value.is_full())
        .value("linearizations", gen.linearizations().len());
    let basis: Vec<String> = value.basis().iter().take(16).map(|v| a.algebra.format(v)).collect();
    r.value("basis", basis);
    Ok(timed(r, start))
}

/// Class counts of the congruence and its inner variant, with soundness checks.
pub fn congruence(presentation: &str, opts: &Options) -> Result<RunReport> {
    let start = Instant::now();
    let mut r = RunReport::new("congruence");
    let max_len = opts.max_length_or(6);
    r.param("presentation", presentation).param("max_length", max_len);
    let pres = builtins::presentation(presentation)?;
    let full = congruence_closure(&pres, max_len)?;
    let inner = inner_congruence(&full);
    let counts: Vec<_> = (1..=max_len)
        .map(|l| json!({"length": l, "classes": full.num_classes(l), "inner_classes": inner.num_classes(l)}))
        .collect();
    r.check("compatible", full.verify_compatibility().is_ok());
    r.check("inner-compatible", inner.verify_compatibility().is_ok());
    r.check("inner-refines-full", inner.refines(&full));
    match build_cocycle(&pres, max_len, opts.seed) {
        Ok(_) => {
            r.check("cocycle-law", true);
        }
        Err(e) if is_outcome(&e) => r.fail("cocycle-law", e),
        Err(e) => return Err(e.into()),
    }
    let witness = find_leff1_witness(&full, &inner, 1)
        .map(|(u, v)| json!([pres.format_word(&u), pres.format_word(&v)]))
        .unwrap_or(serde_json::Value::Null);
    r.value("presentation", pres.to_string())
        .value("classes", counts)
        .value("leff1_witness", witness);
    Ok(timed(r, start))
}

/// Associativity, unit, involution and the triple identity on one algebra.
pub fn validate(algebra: &str, opts: &Options) -> Result<RunReport> {
    let start = Instant::now();
    let mut r = RunReport::new("validate");
    let samples = opts.samples_or(100);
    r.param("algebra", algebra).param("samples", samples).param("seed", opts.seed);
    let a = builtins::algebra(algebra, opts.max_length_or(4), opts.seed)?;
    let alg = &a.algebra;
    let assoc = alg.verify_associativity().err().map(|e| e.to_string());
    r.check_absent("associativity", assoc);
    if alg.is_unital() {
        r.check("unit", alg.verify_unit().is_ok());
    }
    if let Some(inv) = &a.involution {
        let again = InvolutionMap::new(alg, inv.images().to_vec()).err().map(|e| e.to_string());
        r.check_absent("involution", again);
        r.value("symmetric_dim", inv.symmetric_part().dim());
    }
    r.add_report(&check_triple_identity(alg, samples, opts.seed));
    r.value("dimension", alg.dim()).value("commutative", alg.is_commutative());
    Ok(timed(r, start))
}

/// The polynomial-coefficient certificates: `1⊗1 ∉ K(A)⊗C` and, for a
/// given basis element, membership outside `K(A) + Z(A)`.
pub fn cfin(algebra: &str, element: Option<&str>, opts: &Options) -> Result<RunReport> {
    let start = Instant::now();
    let mut r = RunReport::new("cfin");
    r.param("algebra", algebra);
    let a = builtins::algebra(algebra, opts.max_length_or(4), opts.seed)?;
    let alg = &a.algebra;
    match build_cfin_c(alg) {
        Ok(c) => {
            r.check("commutator-certificate", c.certified());
            r.value("commutator_ideal_dim", c.commutator_ideal.dim());
        }
        Err(e) if is_outcome(&e) => r.fail("commutator-certificate", e),
        Err(e) => return Err(e.into()),
    }
    if let Some(label) = element {
        r.param("element", label);
        let i = alg
            .index_of(label)
            .ok_or_else(|| crate::error::CliError::usage(format!("`{label}` is not a basis label of {algebra}")))?;
        match build_cfin_d(alg, &alg.basis(i)) {
            Ok(d) => {
                r.check("center-certificate", d.witness);
                r.value("commutator_plus_center_dim", d.commutator_plus_center.dim());
            }
            Err(e) if is_outcome(&e) => r.fail("center-certificate", e),
            Err(e) => return Err(e.into()),
        }
    }
    Ok(timed(r, start))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lattice_counts() {
        assert_eq!(lattice_size(4, 2), 10);
        assert_eq!(lattice_size(16, 5), 15504);
        assert!(exhaustive_cost(4) < EXHAUSTIVE_BUDGET);
        assert!(exhaustive_cost(16) > EXHAUSTIVE_BUDGET);
    }

    #[test]
    fn exhaustive_suite_on_m2() {
        let opts = Options {
            exhaustive: true,
            ..Options::default()
        };
        let r = verify_identities("m2", "symplectic", &opts).unwrap();
        assert!(r.passed(), "{}", r.render_text());
        assert!(r.checks.iter().filter(|c| c.name != "jordan-consequences").all(|c| c.exhaustive != Some(false)));
        assert!(matches!(verify_identities("g4", "identity", &opts), Err(CliError::Usage(_))));
    }
}
