use std::collections::BTreeSet;

use super::StructureAlgebra;
use crate::linalg::{kernel, EchelonBuilder, Subspace, Vector};
use crate::par;

/// Closes a family under a rule producing new vectors from each accepted
/// member. `expand(v, members)` sees the accepted members up to and including
/// `v`.
fn close(
    dim: usize,
    seeds: impl IntoIterator<Item = Vector>,
    expand: impl Fn(&Vector, &[Vector]) -> Vec<Vector>,
) -> Subspace {
    let mut b = EchelonBuilder::new(dim);
    let mut members: Vec<Vector> = Vec::new();
    for s in seeds {
        if b.insert(&s) {
            members.push(s);
        }
    }
    let mut next = 0;
    while next < members.len() && b.rank() < dim {
        let produced = expand(&members[next], &members[..=next]);
        for p in produced {
            if b.insert(&p) {
                members.push(p);
            }
        }
        next += 1;
    }
    b.into_subspace()
}

/// The subalgebra generated by `gens`: the least subspace containing them
/// and closed under the product. Each new member is multiplied only by the
/// members whose support meets its left or right support.
pub fn subalgebra_span(a: &StructureAlgebra, gens: &[Vector]) -> Subspace {
    let dim = a.dim();
    let mut b = EchelonBuilder::new(dim);
    let mut members: Vec<Vector> = Vec::new();
    let mut holders: Vec<Vec<usize>> = vec![Vec::new(); dim];
    let accept = |v: Vector,
                  b: &mut EchelonBuilder,
                  members: &mut Vec<Vector>,
                  holders: &mut Vec<Vec<usize>>| {
        if b.insert(&v) {
            for l in v.support() {
                holders[l].push(members.len());
            }
            members.push(v);
        }
    };
    for g in gens {
        accept(g.clone(), &mut b, &mut members, &mut holders);
    }
    let mut next = 0;
    while next < members.len() && b.rank() < dim {
        let v = members[next].clone();
        let pick = |supp: BTreeSet<usize>| -> BTreeSet<usize> {
            supp.into_iter()
                .flat_map(|l| holders[l].iter().copied().filter(|&m| m <= next))
                .collect()
        };
        let right = pick(right_candidates(a, &v));
        let left = pick(left_candidates(a, &v));
        let mut produced: Vec<Vector> = right.into_iter().map(|m| a.mul(&v, &members[m])).collect();
        produced.extend(left.into_iter().map(|m| a.mul(&members[m], &v)));
        for p in produced {
            accept(p, &mut b, &mut members, &mut holders);
        }
        next += 1;
    }
    b.into_subspace()
}

fn left_candidates(a: &StructureAlgebra, v: &Vector) -> BTreeSet<usize> {
    v.support()
        .flat_map(|l| a.left_support(l).iter().copied())
        .collect()
}

fn right_candidates(a: &StructureAlgebra, v: &Vector) -> BTreeSet<usize> {
    v.support().flat_map(|l| a.right_support(l)).collect()
}

/// The two-sided ideal generated by `gens` (containing `gens` themselves).
pub fn ideal_span(a: &StructureAlgebra, gens: &[Vector]) -> Subspace {
    close(a.dim(), gens.iter().cloned(), |v, _| {
        let mut out: Vec<Vector> = left_candidates(a, v)
            .into_iter()
            .map(|k| a.mul_basis_left(k, v))
            .collect();
        out.extend(
            right_candidates(a, v)
                .into_iter()
                .map(|k| a.mul_basis_right(v, k)),
        );
        out
    })
}

/// `span{ x s y : x, y in A, s in gens }`, the ideal `A S A`.
pub fn sandwich_span(a: &StructureAlgebra, gens: &[Vector]) -> Subspace {
    let seeds = Subspace::span(a.dim(), gens.iter());
    let lefts: Vec<Vector> = seeds
        .basis()
        .iter()
        .flat_map(|s| {
            left_candidates(a, s)
                .into_iter()
                .map(|k| a.mul_basis_left(k, s))
                .collect::<Vec<_>>()
        })
        .filter(|v| !v.is_zero())
        .collect();
    let lefts = Subspace::span(a.dim(), lefts.iter());
    let both: Vec<Vector> = lefts
        .basis()
        .iter()
        .flat_map(|s| {
            right_candidates(a, s)
                .into_iter()
                .map(|k| a.mul_basis_right(s, k))
                .collect::<Vec<_>>()
        })
        .collect();
    Subspace::span(a.dim(), both.iter())
}

/// `K(A)`, the ideal generated by all commutators.
pub fn commutator_ideal(a: &StructureAlgebra) -> Subspace {
    let gens: Vec<Vector> = (0..a.dim())
        .flat_map(|i| {
            let partners: BTreeSet<usize> = a
                .right_support(i)
                .chain(a.left_support(i).iter().copied())
                .filter(|&j| j > i)
                .collect();
            partners
                .into_iter()
                .map(move |j| (i, j))
                .collect::<Vec<_>>()
        })
        .map(|(i, j)| a.commutator(&a.basis(i), &a.basis(j)))
        .filter(|c| !c.is_zero())
        .collect();
    ideal_span(a, &gens)
}

/// `Z(A) = { x : x e_i = e_i x for all i }`.
pub fn center(a: &StructureAlgebra) -> Subspace {
    let n = a.dim();
    let images = par::map_range(n, |b| {
        let partners: BTreeSet<usize> = a
            .right_support(b)
            .chain(a.left_support(b).iter().copied())
            .collect();
        let mut pairs = Vec::new();
        for i in partners {
            let c = a.commutator(&a.basis(b), &a.basis(i));
            pairs.extend(c.iter().map(|(k, x)| (i * n + k, x.clone())));
        }
        Vector::from_pairs(pairs)
    });
    kernel(n, &images)
}

/// `Ann(A) = { x : x A = A x = 0 }`.
pub fn annihilator(a: &StructureAlgebra) -> Subspace {
    let n = a.dim();
    let images = par::map_range(n, |b| {
        let mut pairs = Vec::new();
        for (i, p) in a.row(b) {
            pairs.extend(p.iter().map(|(k, x)| (2 * i * n + k, x.clone())));
        }
        for &i in a.left_support(b) {
            let p = a.basis_product(i, b).expect("indexed");
            pairs.extend(p.iter().map(|(k, x)| ((2 * i + 1) * n + k, x.clone())));
        }
        Vector::from_pairs(pairs)
    });
    kernel(n, &images)
}

/// `{ x in W : x t = t x = 0 for all t in tests }`.
pub fn annihilator_within(a: &StructureAlgebra, w: &Subspace, tests: &[Vector]) -> Subspace {
    let n = a.dim();
    let images = par::map_slice(w.basis(), |x| {
        let mut pairs = Vec::new();
        for (i, t) in tests.iter().enumerate() {
            pairs.extend(a.mul(x, t).iter().map(|(k, c)| (2 * i * n + k, c.clone())));
            pairs.extend(
                a.mul(t, x)
                    .iter()
                    .map(|(k, c)| ((2 * i + 1) * n + k, c.clone())),
            );
        }
        Vector::from_pairs(pairs)
    });
    let ker = kernel(w.dim(), &images);
    Subspace::span(
        n,
        ker.basis()
            .iter()
            .map(|c| w.element(c))
            .collect::<Vec<_>>()
            .iter(),
    )
}

/// `span{ x y : x in X, y in Y }` for subspaces `X`, `Y`.
pub fn product_span(a: &StructureAlgebra, x: &Subspace, y: &Subspace) -> Subspace {
    let prods: Vec<Vector> = x
        .basis()
        .iter()
        .flat_map(|u| y.basis().iter().map(move |v| (u, v)))
        .map(|(u, v)| a.mul(u, v))
        .collect();
    Subspace::span(a.dim(), prods.iter())
}

/// The first basis pair `(p, q)` of `W` whose Jordan product leaves `W`.
pub fn jordan_closure_violation(a: &StructureAlgebra, w: &Subspace) -> Option<(usize, usize)> {
    let basis = w.basis();
    par::find_first(basis.len(), |p| {
        (p..basis.len())
            .find(|&q| !w.contains(&a.jordan(&basis[p], &basis[q])))
            .map(|q| (p, q))
    })
}

/// Whether `W` is closed under the associative product.
pub fn is_subalgebra(a: &StructureAlgebra, w: &Subspace) -> bool {
    let basis = w.basis();
    basis
        .iter()
        .all(|x| basis.iter().all(|y| w.contains(&a.mul(x, y))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::strucalg::{
        construct::{cocycle_extension, BilinearForm},
        grassmann_algebra, matrix_algebra, upper_triangular,
    };

    /// Closure oracle: repeatedly multiply the whole current basis by every
    /// basis element until the dimension stops growing.
    fn brute_ideal(a: &StructureAlgebra, gens: &[Vector]) -> Subspace {
        let mut cur = Subspace::span(a.dim(), gens.iter());
        loop {
            let mut vs: Vec<Vector> = cur.basis().to_vec();
            for v in cur.basis() {
                for k in 0..a.dim() {
                    vs.push(a.mul(&a.basis(k), v));
                    vs.push(a.mul(v, &a.basis(k)));
                }
            }
            let next = Subspace::span(a.dim(), vs.iter());
            if next == cur {
                return cur;
            }
            cur = next;
        }
    }

    /// Oracle for the subalgebra span: add all pairwise products until stable.
    fn brute_subalgebra(a: &StructureAlgebra, gens: &[Vector]) -> Subspace {
        let mut cur = Subspace::span(a.dim(), gens.iter());
        loop {
            let mut vs: Vec<Vector> = cur.basis().to_vec();
            for x in cur.basis() {
                for y in cur.basis() {
                    vs.push(a.mul(x, y));
                }
            }
            let next = Subspace::span(a.dim(), vs.iter());
            if next == cur {
                return cur;
            }
            cur = next;
        }
    }

    #[test]
    fn subalgebra_span_matches_oracle() {
        let m3 = matrix_algebra(3);
        let g4 = grassmann_algebra(4);
        let cases: Vec<(&StructureAlgebra, Vec<Vector>)> = vec![
            (&m3, vec![m3.basis(1), m3.basis(5)]),
            (&m3, vec![m3.basis(1).add(&m3.basis(3))]),
            (
                &g4,
                vec![g4.basis(1).add(&g4.basis(2)), g4.basis(4).add(&g4.basis(8))],
            ),
            (&g4, vec![g4.basis(3), g4.basis(12)]),
        ];
        for (a, gens) in cases {
            assert_eq!(subalgebra_span(a, &gens), brute_subalgebra(a, &gens));
        }
    }

    #[test]
    fn ideals_in_m2_and_ut2() {
        let m2 = matrix_algebra(2);
        let c = m2.commutator(&m2.basis(0), &m2.basis(1));
        assert_eq!(ideal_span(&m2, &[c.clone()]), brute_ideal(&m2, &[c]));
        assert!(ideal_span(&m2, &[m2.basis(0)]).is_full());
        assert_eq!(
            subalgebra_span(&m2, &[m2.basis(1)]),
            Subspace::span(4, [m2.basis(1)].iter())
        );

        let ut = upper_triangular(2, false);
        let e12 = ut.basis(ut.index_of("e12").unwrap());
        let i = ideal_span(&ut, &[e12.clone()]);
        assert_eq!(i, brute_ideal(&ut, &[e12.clone()]));
        assert_eq!(i, Subspace::span(3, [e12.clone()].iter()));
        assert_eq!(commutator_ideal(&ut), Subspace::span(3, [e12].iter()));
        assert_eq!(commutator_ideal(&m2).dim(), 4);
        assert!(commutator_ideal(&grassmann_algebra(1)).is_zero());
    }

    #[test]
    fn commutator_ideal_matches_oracle() {
        for a in [
            upper_triangular(3, false),
            upper_triangular(4, true),
            grassmann_algebra(3),
        ] {
            let gens: Vec<Vector> = (0..a.dim())
                .flat_map(|i| (0..a.dim()).map(move |j| (i, j)))
                .map(|(i, j)| a.commutator(&a.basis(i), &a.basis(j)))
                .collect();
            assert_eq!(commutator_ideal(&a), brute_ideal(&a, &gens), "{}", a.name());
        }
    }

    #[test]
    fn center_and_annihilator() {
        let m2 = matrix_algebra(2);
        assert_eq!(center(&m2), Subspace::span(4, [m2.one().unwrap()].iter()));
        assert!(annihilator(&m2).is_zero());
        let ext = cocycle_extension(&m2, &BilinearForm::new()).unwrap();
        assert!(annihilator(&ext).contains(&ext.basis(4)));
        // Grassmann G2: center spanned by 1 and e1e2
        let g = grassmann_algebra(2);
        assert_eq!(
            center(&g),
            Subspace::span(4, [g.basis(0), g.basis(3)].iter())
        );
        assert!(annihilator(&g).is_zero());
        let sut = upper_triangular(3, true);
        let e13 = sut.basis(sut.index_of("e13").unwrap());
        assert_eq!(annihilator(&sut), Subspace::span(3, [e13].iter()));
    }

    #[test]
    fn strict_sandwich_differs_from_ideal_without_unit() {
        let sut = upper_triangular(3, true);
        let e12 = sut.basis(sut.index_of("e12").unwrap());
        // A e12 A = 0 in strictly upper triangular 3x3 matrices
        assert!(sandwich_span(&sut, &[e12.clone()]).is_zero());
        assert_eq!(ideal_span(&sut, &[e12]).dim(), 2);
        let m2 = matrix_algebra(2);
        assert_eq!(sandwich_span(&m2, &[m2.basis(1)]).dim(), 4);
    }

    #[test]
    fn jordan_closure() {
        let m2 = matrix_algebra(2);
        let sym = Subspace::span(
            4,
            [m2.basis(0), m2.basis(3), m2.basis(1).add(&m2.basis(2))].iter(),
        );
        assert_eq!(jordan_closure_violation(&m2, &sym), None);
        let bad = Subspace::span(4, [m2.basis(1), m2.basis(2)].iter());
        assert_eq!(jordan_closure_violation(&m2, &bad), Some((0, 1)));
        assert!(!is_subalgebra(&m2, &sym));
    }
}
