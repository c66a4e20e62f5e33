//! Acceptance suite: one PASS/FAIL line per criterion, with wall-clock
//! budgets. Runs as a plain binary so the lines are always shown.

use std::collections::BTreeMap;
use std::sync::Arc;
use std::time::{Duration, Instant};

use jordan_cli::builtins;
use jordan_cli::commands::{self, Options};
use jordan_core::counterex::{build_cfin_c, build_cfin_d, build_examb};
use jordan_core::freealg::{parse_poly, TIdealGenerator};
use jordan_core::jordanmaps::{
    check_jr_identities, check_le2, check_triple_identity, is_jordan_hom, standard_decompose, LinearMap, Sampling,
};
use jordan_core::linalg::{Subspace, Vector};
use jordan_core::semigroup::{
    build_cocycle, build_pe1, build_pe2, congruence_closure, enumerate_words, inner_congruence, Presentation,
};
use jordan_core::strucalg::{
    check_lema2, commutator_ideal, evaluate, involution_transpose, matrix_algebra, random_element, tideal_value,
    upper_triangular, IdealConvention, InvolutionMap, StructureAlgebra,
};
use jordan_core::{Error, Rational};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn named_map(algebra: &str, map: &str) -> Result<LinearMap, String> {
    let a = builtins::algebra(algebra, 6, 0).map_err(|e| e.to_string())?;
    builtins::map(&a, map, 0).map_err(|e| e.to_string())
}

fn grassmann_obstruction() -> Outcome {
    let inst = build_examb(4, 100, 0).map_err(|e| e.to_string())?;
    let expected = Vector::single(15, Rational::from(8));
    ensure(inst.obstruction == expected, || {
        format!("obstruction is {}", inst.lapp.algebra.format(&inst.obstruction))
    })?;
    ensure(inst.dg_zero, || "dg != 0".into())?;
    ensure(inst.square_commutators.passed && inst.square_commutators.cases == 100, || {
        format!("{:?}", inst.square_commutators.violation)
    })?;
    ensure(inst.nearly_standard.passed, || "nearly-standard witness rejected".into())?;
    let r = commands::grassmann_demo(4, &Options::default()).map_err(|e| e.to_string())?;
    ensure(r.passed(), || r.render_text())?;
    let shown = r.get("obstruction").and_then(|v| v.as_str()).unwrap_or_default().to_string();
    ensure(shown == "8*e1e2e3e4", || format!("grassmann-demo printed {shown}"))?;
    Ok(format!("obstruction {shown}"))
}

fn jr_identities() -> Outcome {
    let cases = [
        ("m2", "identity"),
        ("m2", "transpose"),
        ("m3", "transpose"),
        ("m2xm2", "swap-transpose"),
        ("pe2-default", "pe2"),
    ];
    let mut total = 0;
    for (alg, map) in cases {
        let phi = named_map(alg, map)?;
        let r = check_jr_identities(&phi).map_err(|e| e.to_string())?;
        ensure(r.passed && r.exhaustive, || format!("{alg} {map}: {:?}", r.violation))?;
        total += r.cases;
    }
    Ok(format!("{} maps, {total} basis pairs", cases.len()))
}

fn le2_on_small_algebras() -> Outcome {
    let cases = [
        ("m2", "identity"),
        ("m2", "transpose"),
        ("m2", "symplectic"),
        ("m3", "identity"),
        ("m3", "transpose"),
        ("g4", "identity"),
        ("g4", "reversion"),
        ("g4", "examb"),
    ];
    let sampling = Sampling::Random { samples: 50, seed: 0 };
    for (alg, map) in cases {
        let phi = named_map(alg, map)?;
        let w = is_jordan_hom(&phi).map_err(|e| e.to_string())?;
        ensure(w.classification.jordan, || format!("{alg} {map} is not Jordan"))?;
        let r = check_le2(&phi, &[1, 3, 4, 5], sampling).map_err(|e| e.to_string())?;
        ensure(r.passed && r.cases == 200, || format!("{alg} {map}: {:?}", r.violation))?;
    }
    // a map that is not Jordan must be caught
    let m2 = Arc::new(matrix_algebra(2));
    let doubled = LinearMap::identity(m2).scale(&Rational::from(2));
    let r = check_le2(&doubled, &[1, 3, 4, 5], sampling).map_err(|e| e.to_string())?;
    ensure(!r.passed, || "2·id passed".into())?;
    Ok(format!("{} maps x 4 exponents x 50 samples", cases.len()))
}

fn decomposition() -> Outcome {
    let d = standard_decompose(&named_map("m2xm2", "swap-transpose")?).map_err(|e| e.to_string())?;
    let first = Vector::from_pairs(vec![(0, Rational::ONE), (3, Rational::ONE)]);
    ensure(d.epsilon == first, || format!("epsilon {:?}", d.epsilon))?;
    ensure(d.candidates == 4 && d.passing.len() == 1, || {
        format!("{} candidates, {} passing", d.candidates, d.passing.len())
    })?;
    let id = standard_decompose(&named_map("m2", "identity")?).map_err(|e| e.to_string())?;
    ensure(id.epsilon == matrix_algebra(2).one().unwrap(), || "identity: epsilon != 1".into())?;
    let t = standard_decompose(&named_map("m2", "transpose")?).map_err(|e| e.to_string())?;
    ensure(t.epsilon.is_zero(), || "transpose: epsilon != 0".into())?;
    Ok("eps = (1,0), 1, 0".into())
}

/// Span of the generator's values on every basis tuple, closed to an ideal.
fn brute_tideal(a: &StructureAlgebra, text: &str, vars: u32) -> Subspace {
    let f = parse_poly(text).unwrap();
    let n = a.dim();
    let mut values = Vec::new();
    let mut idx = vec![0usize; vars as usize];
    loop {
        let assignment: BTreeMap<u32, Vector> = (0..vars).map(|k| (k + 1, a.basis(idx[k as usize]))).collect();
        values.push(evaluate(a, &f, &assignment).unwrap());
        let mut p = 0;
        loop {
            if p == idx.len() {
                return jordan_core::strucalg::ideal_span(a, &values);
            }
            idx[p] += 1;
            if idx[p] < n {
                break;
            }
            idx[p] = 0;
            p += 1;
        }
    }
}

fn tideal_values() -> Outcome {
    let hall = TIdealGenerator::new(parse_poly(builtins::HALL).unwrap()).unwrap();
    let comm = TIdealGenerator::new(parse_poly(builtins::COMMUTATOR).unwrap()).unwrap();
    let m2 = matrix_algebra(2);
    let m3 = matrix_algebra(3);
    let t = |a: &StructureAlgebra, g: &TIdealGenerator| tideal_value(a, g, IdealConvention::Unital).unwrap();
    let on_m2 = t(&m2, &hall);
    let on_m3 = t(&m3, &hall);
    ensure(on_m2.is_zero(), || format!("hall on M2 has dimension {}", on_m2.dim()))?;
    ensure(!on_m3.is_zero(), || "hall on M3 is zero".into())?;
    // basis evaluations: zero on M2, inside the computed value on M3
    let oracle2 = brute_tideal(&m2, builtins::HALL, 3);
    let oracle3 = brute_tideal(&m3, builtins::HALL, 3);
    ensure(oracle2.is_zero(), || "basis evaluation of hall on M2 is nonzero".into())?;
    ensure(!oracle3.is_zero() && on_m3.contains_subspace(&oracle3), || "M3 oracle disagrees".into())?;
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let f = parse_poly(builtins::HALL).unwrap();
    for _ in 0..50 {
        let assignment: BTreeMap<u32, Vector> = (1..=3).map(|k| (k, random_element(4, &mut rng))).collect();
        ensure(evaluate(&m2, &f, &assignment).unwrap().is_zero(), || "hall fails on M2".into())?;
    }
    let c = t(&m2, &comm);
    ensure(c.is_full() && c == commutator_ideal(&m2), || format!("[x1,x2] on M2 has dimension {}", c.dim()))?;
    Ok(format!("hall: M2 -> 0, M3 -> {}; [x1,x2]: M2 -> 4", on_m3.dim()))
}

fn pe2_pipeline() -> Outcome {
    let p = Presentation::default_family();
    let gen = TIdealGenerator::new(parse_poly(builtins::COMMUTATOR).unwrap()).unwrap();
    let pe1 = build_pe1(&p, &gen, 6, 0).map_err(|e| e.to_string())?;
    let (u, v) = pe1.witness.clone();
    let c = &pe1.cocycle;
    ensure(u.len() >= 4 && c.full().equivalent(&u, &v) && !c.inner().equivalent(&u, &v), || {
        format!("bad witness {u:?} {v:?}")
    })?;
    ensure(pe1.checks.all(), || format!("{:?}", pe1.checks))?;
    let diff = pe1.form_value(&pe1.a1, &pe1.b1) - pe1.form_value(&pe1.a2, &pe1.b2);
    ensure(diff == c.alpha(&u) - c.alpha(&v), || "f difference != alpha(u) - alpha(v)".into())?;
    let words = (p.format_word(&u), p.format_word(&v));
    let pe2 = build_pe2(pe1).map_err(|e| e.to_string())?;
    ensure(pe2.checks.all(), || format!("{:?}", pe2.checks))?;
    let expected = pe2.z().scale(&pe2.obstruction_coefficient);
    ensure(pe2.obstruction == expected && !diff.is_zero(), || "obstruction mismatch".into())?;
    Ok(format!("witness ({}, {}), obstruction {}", words.0, words.1, pe2.algebra.format(&pe2.obstruction)))
}

fn cfin_witnesses() -> Outcome {
    let ut2 = upper_triangular(2, false);
    let m2 = matrix_algebra(2);
    ensure(build_cfin_c(&ut2).map(|r| r.certified()).unwrap_or(false), || "UT2 not certified".into())?;
    ensure(matches!(build_cfin_c(&m2), Err(Error::Hypothesis(_))), || "M2 accepted".into())?;
    let e11 = ut2.basis(ut2.index_of("e11").expect("e11"));
    ensure(build_cfin_d(&ut2, &e11).map(|r| r.witness).unwrap_or(false), || "no witness for UT2".into())?;
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let mut tries: Vec<Vector> = (0..4).map(|i| m2.basis(i)).collect();
    tries.extend((0..20).map(|_| random_element(4, &mut rng)));
    for x in &tries {
        let w = build_cfin_d(&m2, x).map(|r| r.witness).unwrap_or(false);
        ensure(!w, || format!("M2 witness at {}", m2.format(x)))?;
    }
    Ok(format!("UT2 certified; M2 rejected on {} elements", tries.len()))
}

fn structural_suite() -> Outcome {
    let mut names: Vec<&str> = builtins::structural_names().to_vec();
    names.push("pe2-default");
    for name in &names {
        let a = builtins::algebra(name, 4, 0).map_err(|e| e.to_string())?;
        a.algebra.verify_associativity().map_err(|e| format!("{name}: {e}"))?;
        if let Some(inv) = &a.involution {
            InvolutionMap::new(&a.algebra, inv.images().to_vec()).map_err(|e| format!("{name}: {e}"))?;
        }
        let r = check_triple_identity(&a.algebra, 100, 0);
        ensure(r.passed && r.cases == 100, || format!("{name}: triple {:?}", r.violation))?;
    }
    let ut3 = upper_triangular(3, false);
    let k = commutator_ideal(&ut3);
    let r = check_lema2(&ut3, &Subspace::full(ut3.dim()), &k).map_err(|e| e.to_string())?;
    ensure(r.holds(), || "UT3 inclusions fail".into())?;
    let m2 = matrix_algebra(2);
    let h = involution_transpose(&m2, 2).unwrap().symmetric_part();
    let r = check_lema2(&m2, &h, &h).map_err(|e| e.to_string())?;
    ensure(r.holds(), || "H(M2) inclusions fail".into())?;
    Ok(format!("{} algebras", names.len()))
}

/// Classes of the abelianization at length `l`, from letter counts.
fn letter_count_classes(l: usize) -> usize {
    let words = &enumerate_words(2, l)[l - 1];
    let mut seen: Vec<usize> = words.iter().map(|w| w.iter().filter(|&&x| x == 0).count()).collect();
    seen.sort_unstable();
    seen.dedup();
    seen.len()
}

fn congruence_soundness() -> Outcome {
    let max_len = 8;
    let comm = Presentation::commutative_pair();
    let full = congruence_closure(&comm, max_len).map_err(|e| e.to_string())?;
    for l in 1..=max_len {
        ensure(full.num_classes(l) == l + 1 && letter_count_classes(l) == l + 1, || {
            format!("length {l}: {} classes", full.num_classes(l))
        })?;
        let words = &enumerate_words(2, l)[l - 1];
        for u in words {
            for v in words {
                let same_counts = u.iter().filter(|&&x| x == 0).count() == v.iter().filter(|&&x| x == 0).count();
                ensure(full.equivalent(u, v) == same_counts, || format!("{u:?} vs {v:?}"))?;
            }
        }
    }
    let presentations = [
        Presentation::default_family(),
        comm.clone(),
        Presentation::free(&["a", "b", "c"]),
        "letters: a b\nrelations: (a a b, b a a)".parse().unwrap(),
    ];
    for p in &presentations {
        let full = congruence_closure(p, 6).map_err(|e| e.to_string())?;
        let inner = inner_congruence(&full);
        ensure(inner.refines(&full), || format!("inner not inside full for {p}"))?;
        build_cocycle(p, 6, 0).map_err(|e| format!("{p}: {e}"))?;
    }
    Ok(format!("l+1 classes up to {max_len}; {} presentations", presentations.len()))
}

fn main() {
    let criteria: [(&str, Duration, fn() -> Outcome); 9] = [
        ("grassmann obstruction", Duration::from_secs(5), grassmann_obstruction),
        ("JR identities", Duration::from_secs(30), jr_identities),
        ("commutator power identity", Duration::from_secs(60), le2_on_small_algebras),
        ("standard decomposition", Duration::from_secs(5), decomposition),
        ("T-ideal values", Duration::from_secs(60), tideal_values),
        ("pe2 pipeline", Duration::from_secs(120), pe2_pipeline),
        ("cfin witnesses", Duration::from_secs(5), cfin_witnesses),
        ("structural validation", Duration::from_secs(60), structural_suite),
        ("congruence soundness", Duration::from_secs(60), congruence_soundness),
    ];
    let mut failed = 0;
    for (k, (name, budget, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let took = start.elapsed();
        let outcome = outcome.and_then(|s| {
            if took <= *budget {
                Ok(s)
            } else {
                Err(format!("took {took:.1?}, budget {budget:?}"))
            }
        });
        match outcome {
            Ok(s) => println!("criterion {}: PASS {name} ({took:.2?}): {s}", k + 1),
            Err(e) => {
                failed += 1;
                println!("criterion {}: FAIL {name} ({took:.2?}): {e}", k + 1);
            }
        }
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
