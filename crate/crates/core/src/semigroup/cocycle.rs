use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::congruence::{congruence_closure, enumerate_words, inner_congruence, GradedCongruence};
use super::presentation::{Presentation, Word};
use crate::error::{Error, Result};
use crate::rational::Rational;

/// An injective labelling `α` of the `∼_in`-classes of words of length
/// `<= L` and the induced 2-cocycle `h(u,v) = α(uv)` on `X*/∼`.
#[derive(Clone, Debug)]
pub struct SemigroupCocycle {
    full: GradedCongruence,
    inner: GradedCongruence,
    // alpha[l - 1][inner class id]
    alpha: Vec<Vec<Rational>>,
}

impl SemigroupCocycle {
    pub fn full(&self) -> &GradedCongruence {
        &self.full
    }

    pub fn inner(&self) -> &GradedCongruence {
        &self.inner
    }

    pub fn max_len(&self) -> usize {
        self.full.max_len()
    }

    pub fn alpha(&self, w: &[u8]) -> Rational {
        self.alpha[w.len() - 1][self.inner.class_of(w) as usize].clone()
    }

    /// `h(u,v) = α(uv)`, and `0` when `|uv|` exceeds the table.
    pub fn h(&self, u: &[u8], v: &[u8]) -> Rational {
        if u.len() + v.len() > self.max_len() {
            Rational::ZERO
        } else {
            self.alpha(&[u, v].concat())
        }
    }

    /// `h` on `∼`-classes, through their representatives.
    pub fn h_classes(&self, (l1, c1): (usize, u32), (l2, c2): (usize, u32)) -> Rational {
        self.h(
            &self.full.representative(l1, c1),
            &self.full.representative(l2, c2),
        )
    }

    /// Checks that `h(u,v)` depends only on the `∼`-classes of `u` and `v`
    /// for every pair of words, and the cocycle law `h(ab,c) = h(a,bc)` on
    /// every triple of classes, within the table.
    pub fn verify(&self) -> Result<()> {
        let k = self.full.alphabet_size();
        let len = self.max_len();
        let words = enumerate_words(k, len);
        for l1 in 1..len {
            for l2 in 1..=len - l1 {
                for u in &words[l1 - 1] {
                    let ru = self.full.representative(l1, self.full.class_of(u));
                    for v in &words[l2 - 1] {
                        let rv = self.full.representative(l2, self.full.class_of(v));
                        if self.h(u, v) != self.h(&ru, &rv) {
                            return Err(Error::Verification(format!(
                                "h is not well defined on the classes of {u:?} and {v:?}"
                            )));
                        }
                    }
                }
            }
        }
        let class_product = |a: (usize, u32), b: (usize, u32)| -> (usize, u32) {
            let w = [
                self.full.representative(a.0, a.1),
                self.full.representative(b.0, b.1),
            ]
            .concat();
            (w.len(), self.full.class_of(&w))
        };
        for l1 in 1..len {
            for l2 in 1..len - l1 {
                for l3 in 1..=len - l1 - l2 {
                    for c1 in 0..self.full.num_classes(l1) as u32 {
                        for c2 in 0..self.full.num_classes(l2) as u32 {
                            for c3 in 0..self.full.num_classes(l3) as u32 {
                                let (a, b, c) = ((l1, c1), (l2, c2), (l3, c3));
                                if self.h_classes(class_product(a, b), c)
                                    != self.h_classes(a, class_product(b, c))
                                {
                                    return Err(Error::CocycleViolation(
                                        c1 as usize,
                                        c2 as usize,
                                        c3 as usize,
                                    ));
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Number of `∼_in`-classes labelled.
    pub fn num_labels(&self) -> usize {
        self.alpha.iter().map(Vec::len).sum()
    }
}

/// Labels the `∼_in`-classes with `1, 2, 3, ...` in enumeration order
/// (length, then first member), permuted by `seed` when it is nonzero, and
/// validates the resulting cocycle.
pub fn build_cocycle(p: &Presentation, max_len: usize, seed: u64) -> Result<SemigroupCocycle> {
    let full = congruence_closure(p, max_len)?;
    let inner = inner_congruence(&full);
    let counts: Vec<usize> = (1..=max_len).map(|l| inner.num_classes(l)).collect();
    let total: usize = counts.iter().sum();
    let mut labels: Vec<i64> = (1..=total as i64).collect();
    if seed != 0 {
        labels.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    }
    let mut next = labels.into_iter().map(Rational::from);
    let alpha = counts
        .iter()
        .map(|&n| {
            (0..n)
                .map(|_| next.next().expect("enough labels"))
                .collect()
        })
        .collect();
    let c = SemigroupCocycle { full, inner, alpha };
    c.verify()?;
    Ok(c)
}

/// Splits `w` as `w'w''` with `|w'| = ⌈|w|/2⌉`.
pub fn split_half(w: &[u8]) -> (Word, Word) {
    let cut = w.len().div_ceil(2);
    (w[..cut].to_vec(), w[cut..].to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn labels_are_injective_on_inner_classes() {
        let p = Presentation::default_family();
        for seed in [0, 5] {
            let c = build_cocycle(&p, 5, seed).unwrap();
            let values: BTreeSet<Rational> = c.alpha.iter().flatten().cloned().collect();
            assert_eq!(values.len(), c.num_labels());
            let abbc = p.parse_word("abbc").unwrap();
            let cbba = p.parse_word("cbba").unwrap();
            assert_ne!(c.alpha(&abbc), c.alpha(&cbba));
            let (a, bc) = (p.parse_word("a").unwrap(), p.parse_word("bc").unwrap());
            let (ab, cc) = (p.parse_word("ab").unwrap(), p.parse_word("c").unwrap());
            assert_eq!(c.h(&a, &bc), c.h(&ab, &cc));
            assert_eq!(c.h(&a, &bc), c.alpha(&p.parse_word("abc").unwrap()));
        }
        let c0 = build_cocycle(&p, 3, 0).unwrap();
        assert_eq!(c0.alpha(&[0]), Rational::from(1));
        assert_eq!(c0.h(&[0, 0], &[0, 0]), Rational::ZERO);
    }

    #[test]
    fn equivalent_factorizations_share_h() {
        // ab·c and a·bc have ∼_in-equivalent products; so do x·(abc) and x·(cba)
        let p = Presentation::default_family();
        let c = build_cocycle(&p, 5, 0).unwrap();
        let w = |s: &str| p.parse_word(s).unwrap();
        assert_eq!(c.h(&w("a"), &w("abc")), c.h(&w("a"), &w("cba")));
        assert_eq!(c.h(&w("aab"), &w("c")), c.h(&w("a"), &w("cba")));
        assert_ne!(c.h(&w("ab"), &w("c")), c.h(&w("cb"), &w("a")));
    }

    #[test]
    fn cocycle_law_for_commutative_pair() {
        assert!(build_cocycle(&Presentation::commutative_pair(), 6, 0).is_ok());
        assert_eq!(split_half(&[1, 2, 3, 4, 5]), (vec![1, 2, 3], vec![4, 5]));
    }
}
