use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};

use super::construct::{subalgebra_structure, unitization};
use super::subspaces::center;
use super::StructureAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{EchelonBuilder, Vector};
use crate::rational::Rational;

/// Dense univariate polynomial over the rationals, lowest degree first,
/// without trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Poly(Vec<Rational>);

impl Poly {
    fn trim(mut v: Vec<Rational>) -> Poly {
        while v.last().is_some_and(Rational::is_zero) {
            v.pop();
        }
        Poly(v)
    }

    fn one() -> Poly {
        Poly(vec![Rational::ONE])
    }

    /// `t - r`
    fn linear(r: &Rational) -> Poly {
        Poly(vec![-r, Rational::ONE])
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly(Vec::new());
        }
        let mut out = vec![Rational::ZERO; self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in o.0.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Poly::trim(out)
    }

    fn sub(&self, o: &Poly) -> Poly {
        let n = self.0.len().max(o.0.len());
        let get = |p: &Poly, i: usize| p.0.get(i).cloned().unwrap_or(Rational::ZERO);
        Poly::trim((0..n).map(|i| get(self, i) - get(o, i)).collect())
    }

    fn divrem(&self, d: &Poly) -> (Poly, Poly) {
        let lead =
            d.0.last()
                .expect("nonzero divisor")
                .recip()
                .expect("nonzero");
        let mut r = self.0.clone();
        if r.len() < d.0.len() {
            return (Poly(Vec::new()), self.clone());
        }
        let mut q = vec![Rational::ZERO; r.len() - d.0.len() + 1];
        for k in (0..q.len()).rev() {
            let c = &r[k + d.0.len() - 1] * &lead;
            if !c.is_zero() {
                for (i, x) in d.0.iter().enumerate() {
                    r[k + i] -= &(&c * x);
                }
            }
            q[k] = c;
        }
        (Poly::trim(q), Poly::trim(r))
    }

    /// `(g, s)` with `g = gcd(a, b)` monic and `s a ≡ g (mod b)`.
    fn ext_gcd(a: &Poly, b: &Poly) -> (Poly, Poly) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (Poly::one(), Poly(Vec::new()));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            let s = s0.sub(&q.mul(&s1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
        }
        let lead = r0.0.last().expect("nonzero gcd").recip().expect("nonzero");
        let scale = |p: &Poly| Poly::trim(p.0.iter().map(|x| x * &lead).collect());
        (scale(&r0), scale(&s0))
    }

    fn eval(&self, r: &Rational) -> Rational {
        self.0
            .iter()
            .rev()
            .fold(Rational::ZERO, |acc, c| &(&acc * r) + c)
    }
}

const ROOT_SEARCH_BOUND: u64 = 1_000_000;

fn divisors(n: &BigInt) -> Result<Vec<BigInt>> {
    let m = n
        .abs()
        .to_u64()
        .filter(|&m| m <= ROOT_SEARCH_BOUND)
        .ok_or_else(|| {
            Error::Inconclusive(format!(
                "coefficient {n} too large for the rational root search"
            ))
        })?;
    Ok((1..=m).filter(|d| m % d == 0).map(BigInt::from).collect())
}

/// Rational roots with multiplicity, and whether a factor without rational
/// roots remains.
fn rational_roots(p: &Poly) -> Result<(Vec<(Rational, usize)>, Poly)> {
    let mut rest = p.clone();
    let mut roots = Vec::new();
    let mut zero_mult = 0;
    while rest.0.first().is_some_and(Rational::is_zero) {
        rest = Poly(rest.0[1..].to_vec());
        zero_mult += 1;
    }
    if zero_mult > 0 {
        roots.push((Rational::ZERO, zero_mult));
    }
    if rest.degree() == 0 {
        return Ok((roots, rest));
    }
    // clear denominators to find integer coefficients
    let lcm = rest
        .0
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(&c.denom()));
    let ints: Vec<BigInt> = rest
        .0
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    let (a0, an) = (ints[0].clone(), ints.last().expect("nonconstant").clone());
    let mut candidates = Vec::new();
    for p in divisors(&a0)? {
        for q in divisors(&an)? {
            if p.gcd(&q).is_one() {
                let r = Rational::from(p.clone()) / Rational::from(q);
                candidates.push(r.clone());
                candidates.push(-r);
            }
        }
    }
    candidates.sort();
    candidates.dedup();
    for r in candidates {
        let mut mult = 0;
        while rest.degree() > 0 && rest.eval(&r).is_zero() {
            rest = rest.divrem(&Poly::linear(&r)).0;
            mult += 1;
        }
        if mult > 0 {
            roots.push((r, mult));
        }
    }
    roots.sort_by(|a, b| a.0.cmp(&b.0));
    Ok((roots, rest))
}

/// Minimal polynomial of `x` in the commutative algebra `c` with unit `e`.
fn min_poly(c: &StructureAlgebra, e: &Vector, x: &Vector) -> Poly {
    let mut b = EchelonBuilder::tracked(c.dim());
    let mut power = e.clone();
    let mut k = 0;
    loop {
        if let Some(dep) = b.insert_tracked(&power, Vector::unit(k)) {
            // dep cancels power: coefficients of the relation sum dep_i x^i = 0
            let mut coeffs = vec![Rational::ZERO; k + 1];
            for (i, d) in dep.iter() {
                coeffs[i] = d.clone();
            }
            let lead = coeffs[k].recip().expect("relation involves the new power");
            return Poly::trim(coeffs.iter().map(|x| x * &lead).collect());
        }
        power = c.mul(&power, x);
        k += 1;
    }
}

fn eval_poly_at(c: &StructureAlgebra, e: &Vector, p: &Poly, x: &Vector) -> Vector {
    let mut acc = Vector::zero();
    for coef in p.0.iter().rev() {
        acc = c.mul(&acc, x).add(&e.scale(coef));
    }
    acc
}

/// Splits the idempotent `e` of the commutative algebra `c` into primitive
/// idempotents.
fn split(c: &StructureAlgebra, e: Vector, out: &mut Vec<Vector>) -> Result<()> {
    for i in 0..c.dim() {
        let x = c.mul(&e, &c.basis(i));
        let m = min_poly(c, &e, &x);
        let (roots, rest) = rational_roots(&m)?;
        if rest.degree() > 0 {
            return Err(Error::Inconclusive(format!(
                "minimal polynomial of a central element has an irreducible factor of degree {}",
                rest.degree()
            )));
        }
        if roots.len() < 2 {
            continue;
        }
        // Chinese remainder idempotents for the coprime factors (t - r)^k.
        for (r, k) in &roots {
            let mut f = Poly::one();
            for _ in 0..*k {
                f = f.mul(&Poly::linear(r));
            }
            let g = m.divrem(&f).0;
            let (_, s) = Poly::ext_gcd(&g, &f);
            let idem_poly = s.mul(&g).divrem(&m).1;
            let piece = eval_poly_at(c, &e, &idem_poly, &x);
            split(c, piece, out)?;
        }
        return Ok(());
    }
    out.push(e);
    Ok(())
}

/// Every idempotent of the center of `A`: all sums of the primitive central
/// idempotents, sorted. Fails with [`Error::Inconclusive`] when the center
/// does not split over the rationals.
pub fn central_idempotents(a: &StructureAlgebra) -> Result<Vec<Vector>> {
    let z = center(a);
    if z.is_zero() {
        return Ok(vec![Vector::zero()]);
    }
    let zc = subalgebra_structure(a, &z)?;
    // work in a unital commutative algebra; drop the primitive piece carrying
    // the adjoined unit afterwards
    let (c, adjoined) = if zc.is_unital() {
        (zc, None)
    } else {
        let n = zc.dim();
        (unitization(&zc), Some(n))
    };
    let mut prims = Vec::new();
    split(&c, c.one()?, &mut prims)?;
    let prims: Vec<Vector> = prims
        .into_iter()
        .filter(|p| adjoined.is_none_or(|n| p.get(n).is_zero()))
        .map(|p| z.element(&p))
        .collect();
    let mut all = Vec::with_capacity(1 << prims.len());
    for mask in 0u64..(1u64 << prims.len()) {
        let e = Vector::combination(
            prims
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, p)| (&Rational::ONE, p)),
        );
        all.push(e);
    }
    for e in &all {
        if a.mul(e, e) != *e || !z.contains(e) {
            return Err(Error::Verification(format!(
                "{} is not a central idempotent",
                a.format(e)
            )));
        }
    }
    all.sort_by(|x, y| x.entries().cmp(y.entries()));
    Ok(all)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::strucalg::{direct_sum, grassmann_algebra, matrix_algebra, upper_triangular};

    fn q(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    #[test]
    fn roots_and_gcd() {
        // (t - 1)^2 (t + 1/2) t
        let p = Poly::linear(&q(1))
            .mul(&Poly::linear(&q(1)))
            .mul(&Poly::linear(&Rational::new(-1, 2)))
            .mul(&Poly::linear(&q(0)));
        let (roots, rest) = rational_roots(&p).unwrap();
        assert_eq!(rest.degree(), 0);
        assert_eq!(roots, vec![(Rational::new(-1, 2), 1), (q(0), 1), (q(1), 2)]);
        let irreducible = Poly(vec![q(-2), q(0), q(1)]);
        assert_eq!(rational_roots(&irreducible).unwrap().1.degree(), 2);
        let (g, s) = Poly::ext_gcd(&Poly::linear(&q(1)), &Poly::linear(&q(2)));
        assert_eq!(g, Poly::one());
        // s (t - 1) ≡ 1 mod (t - 2): s = 1
        assert_eq!(s, Poly::one());
    }

    #[test]
    fn idempotents_of_standard_algebras() {
        let m2 = matrix_algebra(2);
        assert_eq!(
            central_idempotents(&m2).unwrap(),
            vec![Vector::zero(), m2.one().unwrap()]
        );

        let s = direct_sum(&m2, &m2);
        let ids = central_idempotents(&s).unwrap();
        assert_eq!(ids.len(), 4);
        let left = m2.one().unwrap();
        let right = left.reindex(|k| k + 4);
        for e in [
            Vector::zero(),
            left.clone(),
            right.clone(),
            left.add(&right),
        ] {
            assert!(ids.contains(&e));
        }

        let g2 = grassmann_algebra(2);
        assert_eq!(
            central_idempotents(&g2).unwrap(),
            vec![Vector::zero(), g2.one().unwrap()]
        );

        let ut = upper_triangular(2, false);
        assert_eq!(central_idempotents(&ut).unwrap().len(), 2);
    }

    #[test]
    fn nonunital_and_inconclusive_centers() {
        // strictly upper triangular matrices: center is nilpotent, only 0
        assert_eq!(
            central_idempotents(&upper_triangular(3, true)).unwrap(),
            vec![Vector::zero()]
        );

        // Q(sqrt 2) as a 2-dimensional commutative algebra: 1, r with r^2 = 2
        let entries = vec![
            (0, 0, 0, q(1)),
            (0, 1, 1, q(1)),
            (1, 0, 1, q(1)),
            (1, 1, 0, q(2)),
        ];
        let k = StructureAlgebra::new(
            "Q(r)",
            vec!["1".into(), "r".into()],
            entries,
            Some(Vector::unit(0)),
        )
        .unwrap();
        assert!(matches!(
            central_idempotents(&k),
            Err(Error::Inconclusive(_))
        ));

        // Q x Q x Q with a non-diagonal basis still splits
        let entries = vec![
            (0, 0, 0, q(1)),
            (0, 1, 1, q(1)),
            (1, 0, 1, q(1)),
            (0, 2, 2, q(1)),
            (2, 0, 2, q(1)),
            // x = diag(1,2,3) written as e1, x^2 = diag(1,4,9) as e2
            // x^3 = diag(1,8,27) = 6 x^2 - 11 x + 6
            (1, 1, 2, q(1)),
            (1, 2, 2, q(6)),
            (1, 2, 1, q(-11)),
            (1, 2, 0, q(6)),
            (2, 1, 2, q(6)),
            (2, 1, 1, q(-11)),
            (2, 1, 0, q(6)),
            // x^4 = 6 x^3 - 11 x^2 + 6 x = 25 x^2 - 60 x + 36
            (2, 2, 2, q(25)),
            (2, 2, 1, q(-60)),
            (2, 2, 0, q(36)),
        ];
        let labels = vec!["1".into(), "x".into(), "x2".into()];
        let c = StructureAlgebra::new("Q3", labels, entries, Some(Vector::unit(0))).unwrap();
        let ids = central_idempotents(&c).unwrap();
        assert_eq!(ids.len(), 8);
        for e in &ids {
            assert_eq!(c.mul(e, e), *e);
        }
    }
}
