use std::collections::BTreeMap;

use petgraph::unionfind::UnionFind;
use serde::Serialize;

use super::presentation::{Presentation, Word};
use crate::error::{Error, Result};

/// Every word of each length `1..=max_len`, in lexicographic order.
pub fn enumerate_words(alphabet_size: usize, max_len: usize) -> Vec<Vec<Word>> {
    (1..=max_len)
        .map(|l| {
            (0..alphabet_size.pow(l as u32))
                .map(|i| word_at(alphabet_size, l, i))
                .collect()
        })
        .collect()
}

fn word_at(k: usize, len: usize, mut index: usize) -> Word {
    let mut w = vec![0u8; len];
    for slot in w.iter_mut().rev() {
        *slot = (index % k) as u8;
        index /= k;
    }
    w
}

fn index_of(k: usize, w: &[u8]) -> usize {
    w.iter().fold(0, |acc, &c| acc * k + c as usize)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Variant {
    Full,
    Inner,
}

/// Per-length partitions of the words of length `<= max_len`.
///
/// Class ids at each length are numbered by the lexicographically first
/// member, so tables are canonical.
#[derive(Clone, Debug)]
pub struct GradedCongruence {
    alphabet_size: usize,
    max_len: usize,
    variant: Variant,
    // class[l - 1][word index]
    class: Vec<Vec<u32>>,
    // members[l - 1][class id] = word indices, ascending
    members: Vec<Vec<Vec<usize>>>,
}

impl GradedCongruence {
    fn from_union_find(
        alphabet_size: usize,
        max_len: usize,
        variant: Variant,
        tables: Vec<UnionFind<usize>>,
    ) -> Self {
        let mut class = Vec::with_capacity(max_len);
        let mut members = Vec::with_capacity(max_len);
        for uf in tables {
            let n = uf.len();
            let mut ids: BTreeMap<usize, u32> = BTreeMap::new();
            let mut table = Vec::with_capacity(n);
            let mut groups: Vec<Vec<usize>> = Vec::new();
            for w in 0..n {
                let root = uf.find(w);
                let next = ids.len() as u32;
                let id = *ids.entry(root).or_insert(next);
                if id as usize == groups.len() {
                    groups.push(Vec::new());
                }
                groups[id as usize].push(w);
                table.push(id);
            }
            class.push(table);
            members.push(groups);
        }
        GradedCongruence {
            alphabet_size,
            max_len,
            variant,
            class,
            members,
        }
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn max_len(&self) -> usize {
        self.max_len
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    /// The class id of `w` among words of its length.
    pub fn class_of(&self, w: &[u8]) -> u32 {
        assert!(
            !w.is_empty() && w.len() <= self.max_len,
            "word length outside the table"
        );
        self.class[w.len() - 1][index_of(self.alphabet_size, w)]
    }

    pub fn equivalent(&self, u: &[u8], v: &[u8]) -> bool {
        u.len() == v.len() && self.class_of(u) == self.class_of(v)
    }

    pub fn num_classes(&self, len: usize) -> usize {
        self.members[len - 1].len()
    }

    /// Members of class `id` at length `len`, in lexicographic order.
    pub fn class_members(&self, len: usize, id: u32) -> Vec<Word> {
        self.members[len - 1][id as usize]
            .iter()
            .map(|&i| word_at(self.alphabet_size, len, i))
            .collect()
    }

    /// The lexicographically first member of class `id` at length `len`.
    pub fn representative(&self, len: usize, id: u32) -> Word {
        word_at(
            self.alphabet_size,
            len,
            self.members[len - 1][id as usize][0],
        )
    }

    /// Whether every class of `self` lies in a class of `other` at every
    /// length.
    pub fn refines(&self, other: &GradedCongruence) -> bool {
        self.max_len <= other.max_len
            && (1..=self.max_len).all(|l| {
                self.members[l - 1].iter().all(|group| {
                    let c = other.class[l - 1][group[0]];
                    group.iter().all(|&w| other.class[l - 1][w] == c)
                })
            })
    }

    /// Checks `u1 ∼ v1, u2 ∼ v2 ⟹ u1u2 ∼ v1v2` for all lengths within the
    /// table by comparing every product with the product of representatives.
    pub fn verify_compatibility(&self) -> Result<()> {
        let k = self.alphabet_size;
        for l1 in 1..self.max_len {
            for l2 in 1..=self.max_len - l1 {
                for i1 in 0..k.pow(l1 as u32) {
                    let u1 = word_at(k, l1, i1);
                    let r1 = self.representative(l1, self.class_of(&u1));
                    for i2 in 0..k.pow(l2 as u32) {
                        let u2 = word_at(k, l2, i2);
                        let r2 = self.representative(l2, self.class_of(&u2));
                        let c = self.class_of(&[u1.as_slice(), &u2].concat());
                        if c != self.class_of(&[r1.as_slice(), &u2].concat())
                            || c != self.class_of(&[u1.as_slice(), &r2].concat())
                        {
                            return Err(Error::Verification(format!(
                                "congruence fails on the product of words {u1:?} and {u2:?}"
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// `{length: [[members]]}` with words formatted by the presentation.
    pub fn to_json(&self, p: &Presentation) -> String {
        let table: BTreeMap<usize, Vec<Vec<String>>> = (1..=self.max_len)
            .map(|l| {
                let classes = (0..self.num_classes(l) as u32)
                    .map(|c| {
                        self.class_members(l, c)
                            .iter()
                            .map(|w| p.format_word(w))
                            .collect()
                    })
                    .collect();
                (l, classes)
            })
            .collect();
        serde_json::to_string_pretty(&table).expect("serializable")
    }
}

/// The least graded congruence containing the relations of `p`, on words of
/// length `<= max_len`: at each length, the union of one-step rewrites
/// `w' u w'' ↔ w' v w''`.
pub fn congruence_closure(p: &Presentation, max_len: usize) -> Result<GradedCongruence> {
    if max_len == 0 {
        return Err(Error::Invalid("maximal length must be positive".into()));
    }
    let k = p.alphabet().len();
    let rels = p.relations_up_to(max_len);
    let mut tables = Vec::with_capacity(max_len);
    for len in 1..=max_len {
        let mut uf = UnionFind::new(k.pow(len as u32));
        for (u, v) in rels.iter().filter(|(u, _)| u.len() <= len) {
            let r = u.len();
            for left in 0..=len - r {
                let right = len - r - left;
                for a in 0..k.pow(left as u32) {
                    for b in 0..k.pow(right as u32) {
                        let hi = a * k.pow((len - left) as u32);
                        let lo = b;
                        let shift = k.pow(right as u32);
                        let x = hi + index_of(k, u) * shift + lo;
                        let y = hi + index_of(k, v) * shift + lo;
                        uf.union(x, y);
                    }
                }
            }
        }
        tables.push(uf);
    }
    let c = GradedCongruence::from_union_find(k, max_len, Variant::Full, tables);
    c.verify_compatibility()?;
    Ok(c)
}

/// `∼_in`: at length `l`, the congruence generated by the pairs of `full`
/// of length `< l`. Every such pair sits inside a length-`(l-1)` pair of
/// `full` extended by one letter, so those extensions generate it.
pub fn inner_congruence(full: &GradedCongruence) -> GradedCongruence {
    let k = full.alphabet_size;
    let mut tables = Vec::with_capacity(full.max_len);
    tables.push(UnionFind::new(k));
    for len in 2..=full.max_len {
        let mut uf = UnionFind::new(k.pow(len as u32));
        let shorter = len - 1;
        for group in &full.members[shorter - 1] {
            for pair in group.windows(2) {
                let (s, t) = (pair[0], pair[1]);
                for x in 0..k {
                    // x·s ~ x·t and s·x ~ t·x
                    let top = x * k.pow(shorter as u32);
                    uf.union(top + s, top + t);
                    uf.union(s * k + x, t * k + x);
                }
            }
        }
        tables.push(uf);
    }
    GradedCongruence::from_union_find(k, full.max_len, Variant::Inner, tables)
}

/// A pair `u < v` with `u ∼ v` and `u ≁_in v`, of the smallest length
/// `>= min_len`, and lexicographically first at that length.
pub fn find_leff1_witness(
    full: &GradedCongruence,
    inner: &GradedCongruence,
    min_len: usize,
) -> Option<(Word, Word)> {
    let k = full.alphabet_size;
    (min_len.max(1)..=full.max_len).find_map(|len| {
        let (fc, ic) = (&full.class[len - 1], &inner.class[len - 1]);
        (0..k.pow(len as u32)).find_map(|u| {
            full.members[len - 1][fc[u] as usize]
                .iter()
                .find(|&&v| v > u && ic[v] != ic[u])
                .map(|&v| (word_at(k, len, u), word_at(k, len, v)))
        })
    })
}
