use std::collections::BTreeSet;

use super::inputs::{basis, lattice, random_tuples};
use super::report::{CheckReport, Sampling, Violation};
use super::LinearMap;
use crate::error::{Error, Result};
use crate::linalg::Vector;
use crate::par;
use crate::strucalg::StructureAlgebra;

fn require_associative(phi: &LinearMap) -> Result<()> {
    if phi.domain_is_associative() {
        Ok(())
    } else {
        Err(Error::Hypothesis(
            "the domain is not closed under the associative product".into(),
        ))
    }
}

/// `a = φ(uv) − φ(u)φ(v)` and `b = φ(uv) − φ(v)φ(u)`.
fn defects(phi: &LinearMap, u: &Vector, v: &Vector) -> (Vector, Vector) {
    let b = phi.codomain();
    let (pu, pv) = (phi.apply(u), phi.apply(v));
    let puv = phi.apply(&phi.domain().mul(u, v));
    (puv.sub(&b.mul(&pu, &pv)), puv.sub(&b.mul(&pv, &pu)))
}

fn jr_violation(
    phi: &LinearMap,
    u: &Vector,
    v: &Vector,
    xs: impl Fn(&Vector, &Vector) -> Vec<usize>,
) -> Option<Violation> {
    let b = phi.codomain();
    let (da, db) = defects(phi, u, v);
    if da.is_zero() || db.is_zero() {
        return None;
    }
    let dom = phi.domain();
    if !b.mul(&da, &db).is_zero() {
        return Some(Violation::new(dom, vec![u.clone(), v.clone()], "ab ≠ 0"));
    }
    if !b.mul(&db, &da).is_zero() {
        return Some(Violation::new(dom, vec![u.clone(), v.clone()], "ba ≠ 0"));
    }
    xs(&da, &db).into_iter().find_map(|x| {
        let px = phi.image(x);
        let s = b.mul3(&da, px, &db).add(&b.mul3(&db, px, &da));
        (!s.is_zero()).then(|| {
            Violation::new(
                dom,
                vec![u.clone(), v.clone(), phi.domain_basis(x)],
                format!("aφ(x)b + bφ(x)a = {}", b.format(&s)),
            )
        })
    })
}

/// Domain basis `x` with `aφ(x)b` or `bφ(x)a` possibly nonzero.
fn sandwich_partners(phi: &LinearMap, da: &Vector, db: &Vector) -> Vec<usize> {
    let left: BTreeSet<usize> = phi
        .right_partners_of(da)
        .intersection(&phi.left_partners_of(db))
        .copied()
        .collect();
    let right: BTreeSet<usize> = phi
        .right_partners_of(db)
        .intersection(&phi.left_partners_of(da))
        .copied()
        .collect();
    left.union(&right).copied().collect()
}

/// With `a = φ(uv) − φ(u)φ(v)` and `b = φ(uv) − φ(v)φ(u)`, checks
/// `ab = ba = 0` and `aφ(x)b + bφ(x)a = 0` on all basis `u, v, x`.
/// Pairs and `x` that cannot produce a nonzero term are skipped by support.
///
/// Both sides are quadratic in `u` and in `v`, so basis pairs alone do not
/// prove the identity for all `u, v`; see [`check_jr_identities_polarized`].
pub fn check_jr_identities(phi: &LinearMap) -> Result<CheckReport> {
    require_associative(phi)?;
    let d = phi.domain_dim();
    let violation = par::find_first(d, |i| {
        let u = phi.domain_basis(i);
        phi.pair_partners(i).into_iter().find_map(|j| {
            let v = phi.domain_basis(j);
            jr_violation(phi, &u, &v, |da, db| sandwich_partners(phi, da, db))
        })
    });
    Ok(CheckReport::from_search(
        "jr-identities",
        (d * d) as u64,
        true,
        violation,
    ))
}

/// The same identities with `u, v` ranging over `{2e_i} ∪ {e_i + e_j}`,
/// which proves them for all `u, v`. Quadratic in the dimension per
/// argument; meant for small domains.
pub fn check_jr_identities_polarized(phi: &LinearMap) -> Result<CheckReport> {
    require_associative(phi)?;
    let family = lattice(phi, 2);
    let n = family.len();
    let all_x: Vec<usize> = (0..phi.domain_dim()).collect();
    let violation = par::find_first(n, |p| {
        (0..n).find_map(|q| jr_violation(phi, &family[p], &family[q], |_, _| all_x.clone()))
    });
    Ok(CheckReport::from_search(
        "jr-identities-polarized",
        (n * n) as u64,
        true,
        violation,
    ))
}

/// `y^i w y^j` with empty powers omitted; `ypow[k] = y^k` for `k >= 1`.
fn sandwich(a: &StructureAlgebra, ypow: &[Vector], w: &Vector, i: usize, j: usize) -> Vector {
    let mut acc = w.clone();
    if i > 0 {
        acc = a.mul(&ypow[i], &acc);
    }
    if j > 0 {
        acc = a.mul(&acc, &ypow[j]);
    }
    acc
}

fn powers(a: &StructureAlgebra, y: &Vector, top: usize) -> Vec<Vector> {
    let mut out = vec![Vector::zero(), y.clone()];
    for k in 2..=top {
        let next = a.mul(&out[k - 1], y);
        out.push(next);
    }
    out
}

fn ene_violation(phi: &LinearMap, y: &Vector, w: &Vector, m: usize) -> Option<Violation> {
    let (a, b) = (phi.domain(), phi.codomain());
    let ypow = powers(a, y, m);
    let py = phi.apply(y);
    let pypow = powers(b, &py, m);
    let pw = phi.apply(w);
    let inner = (0..=m).fold(Vector::zero(), |acc, i| {
        acc.add(&sandwich(a, &ypow, w, i, m - i))
    });
    let lhs = phi.apply(&inner);
    let rhs = (0..=m).fold(Vector::zero(), |acc, i| {
        acc.add(&sandwich(b, &pypow, &pw, i, m - i))
    });
    (lhs != rhs)
        .then(|| Violation::new(a, vec![y.clone(), w.clone()], format!("fails for m = {m}")))
}

/// `φ(Σ_{i=0}^m y^i w y^{m−i}) = Σ_{i=0}^m φ(y)^i φ(w) φ(y)^{m−i}` for all
/// `m <= m_max`.
pub fn check_ene(phi: &LinearMap, m_max: usize, sampling: Sampling) -> Result<CheckReport> {
    require_associative(phi)?;
    let (violation, cases, exhaustive) = match sampling {
        Sampling::Random { samples, seed } => {
            let t = random_tuples(phi, 2, samples, seed);
            let v = par::find_first(t.len(), |s| {
                (0..=m_max).find_map(|m| ene_violation(phi, &t[s][0], &t[s][1], m))
            });
            (v, samples * (m_max + 1), false)
        }
        Sampling::Exhaustive => {
            let ws = basis(phi);
            let mut found = None;
            let mut cases = 0;
            for m in 0..=m_max {
                let ys = if m == 0 {
                    vec![Vector::zero()]
                } else {
                    lattice(phi, m as u32)
                };
                cases += ys.len() * ws.len();
                found = par::find_first(ys.len(), |p| {
                    ws.iter().find_map(|w| ene_violation(phi, &ys[p], w, m))
                });
                if found.is_some() {
                    break;
                }
            }
            (found, cases, true)
        }
    };
    Ok(CheckReport::from_search(
        "ene",
        cases as u64,
        exhaustive,
        violation,
    ))
}

fn deve_violation(phi: &LinearMap, x: &Vector, u: &Vector, v: &Vector) -> Option<Violation> {
    let (a, b) = (phi.domain(), phi.codomain());
    let lhs = phi.apply(&a.commutator(x, &a.commutator(u, v)));
    let rhs = b.commutator(&phi.apply(x), &b.commutator(&phi.apply(u), &phi.apply(v)));
    (lhs != rhs).then(|| {
        Violation::new(
            a,
            vec![x.clone(), u.clone(), v.clone()],
            "φ([x,[u,v]]) ≠ [φ(x),[φ(u),φ(v)]]",
        )
    })
}

/// `φ([x,[u,v]]) = [φ(x),[φ(u),φ(v)]]`. Trilinear, so the exhaustive mode
/// runs over basis triples.
pub fn check_deve(phi: &LinearMap, sampling: Sampling) -> Result<CheckReport> {
    require_associative(phi)?;
    let (violation, cases, exhaustive) = match sampling {
        Sampling::Random { samples, seed } => {
            let t = random_tuples(phi, 3, samples, seed);
            let v = par::find_first(t.len(), |s| {
                deve_violation(phi, &t[s][0], &t[s][1], &t[s][2])
            });
            (v, samples, false)
        }
        Sampling::Exhaustive => {
            let bs = basis(phi);
            let d = bs.len();
            let v = par::find_first(d, |x| {
                bs.iter()
                    .find_map(|u| bs.iter().find_map(|v| deve_violation(phi, &bs[x], u, v)))
            });
            (v, d * d * d, true)
        }
    };
    Ok(CheckReport::from_search(
        "deve",
        cases as u64,
        exhaustive,
        violation,
    ))
}

/// `φ([x,yⁿ])` and `[φ(x), φ(y)^{n−1} ỹ]` for `y = [u,v]`, `ỹ = [φ(u),φ(v)]`.
fn le2_sides(phi: &LinearMap, u: &Vector, v: &Vector, x: &Vector, n: u32) -> (Vector, Vector) {
    let (a, b) = (phi.domain(), phi.codomain());
    let y = a.commutator(u, v);
    let yn = powers(a, &y, n as usize)[n as usize].clone();
    let lhs = phi.apply(&a.commutator(x, &yn));
    let yt = b.commutator(&phi.apply(u), &phi.apply(v));
    let mut right = yt;
    if n > 1 {
        let py = phi.apply(&y);
        right = b.mul(&powers(b, &py, n as usize - 1)[n as usize - 1], &right);
    }
    let rhs = b.commutator(&phi.apply(x), &right);
    (lhs, rhs)
}

fn le2_violation(phi: &LinearMap, u: &Vector, v: &Vector, x: &Vector, n: u32) -> Option<Violation> {
    let (lhs, rhs) = le2_sides(phi, u, v, x, n);
    (lhs != rhs).then(|| {
        let b = phi.codomain();
        Violation::new(
            phi.domain(),
            vec![u.clone(), v.clone(), x.clone()],
            format!(
                "n = {n}: left side {} , right side {}",
                b.format(&lhs),
                b.format(&rhs)
            ),
        )
    })
}

/// `φ([x,yⁿ]) = [φ(x), φ(y)^{n−1}ỹ]` with `y = [u,v]`, `ỹ = [φ(u),φ(v)]`,
/// for each `n` in `n_set`. `n = 2` is not covered by the identity and is
/// rejected; see [`explore_le2_square`].
pub fn check_le2(phi: &LinearMap, n_set: &[u32], sampling: Sampling) -> Result<CheckReport> {
    require_associative(phi)?;
    if let Some(n) = n_set.iter().find(|&&n| n == 0 || n == 2) {
        return Err(Error::Invalid(format!(
            "exponent {n} is outside the identity's range"
        )));
    }
    let (violation, cases, exhaustive) = match sampling {
        Sampling::Random { samples, seed } => {
            let t = random_tuples(phi, 3, samples, seed);
            let v = par::find_first(t.len(), |s| {
                n_set
                    .iter()
                    .find_map(|&n| le2_violation(phi, &t[s][0], &t[s][1], &t[s][2], n))
            });
            (v, samples * n_set.len(), false)
        }
        Sampling::Exhaustive => {
            let xs = basis(phi);
            let mut found = None;
            let mut cases = 0;
            for &n in n_set {
                let us = lattice(phi, n);
                cases += us.len() * us.len() * xs.len();
                found = par::find_first(us.len(), |p| {
                    us.iter()
                        .find_map(|v| xs.iter().find_map(|x| le2_violation(phi, &us[p], v, x, n)))
                });
                if found.is_some() {
                    break;
                }
            }
            (found, cases, true)
        }
    };
    Ok(CheckReport::from_search(
        "le2",
        cases as u64,
        exhaustive,
        violation,
    ))
}

/// Searches random `(u, v, x)` for a failure of the `n = 2` form of the
/// identity. Nothing is claimed either way about the outcome.
pub fn explore_le2_square(phi: &LinearMap, samples: usize, seed: u64) -> Result<Option<Violation>> {
    require_associative(phi)?;
    let t = random_tuples(phi, 3, samples, seed);
    Ok(par::find_first(t.len(), |s| {
        le2_violation(phi, &t[s][0], &t[s][1], &t[s][2], 2)
    }))
}

/// `[x,[u,v]] = (x∘u)∘v − (x∘v)∘u` on random triples of the domain algebra.
pub fn check_triple_identity(a: &StructureAlgebra, samples: usize, seed: u64) -> CheckReport {
    let phi = LinearMap::identity(std::sync::Arc::new(a.clone()));
    let t = random_tuples(&phi, 3, samples, seed);
    let violation = par::find_first(t.len(), |s| {
        let (x, u, v) = (&t[s][0], &t[s][1], &t[s][2]);
        let lhs = a.commutator(x, &a.commutator(u, v));
        let rhs = a
            .jordan(&a.jordan(x, u), v)
            .sub(&a.jordan(&a.jordan(x, v), u));
        (lhs != rhs).then(|| {
            Violation::new(
                a,
                vec![x.clone(), u.clone(), v.clone()],
                "[x,[u,v]] ≠ (x∘u)∘v − (x∘v)∘u",
            )
        })
    });
    CheckReport::from_search("triple", samples as u64, false, violation)
}
