use jordan_core::semigroup::{build_cocycle, congruence_closure, inner_congruence, split_half, Presentation, Word};
use proptest::prelude::*;

fn word(len: usize) -> impl Strategy<Value = String> {
    prop::collection::vec(prop::sample::select(vec!['a', 'b']), len).prop_map(|w| w.into_iter().collect())
}

fn relation() -> impl Strategy<Value = String> {
    (2usize..=3).prop_flat_map(|n| (word(n), word(n))).prop_map(|(l, r)| format!("({l}, {r})"))
}

fn presentation() -> impl Strategy<Value = Presentation> {
    prop::collection::vec(relation(), 0..3).prop_map(|rels| {
        format!("letters: a b\nrelations: {}", rels.join("; ")).parse().unwrap()
    })
}

fn any_word(max: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0u8..2, 1..=max)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn congruences_are_compatible_and_nested(p in presentation()) {
        let full = congruence_closure(&p, 6).unwrap();
        full.verify_compatibility().unwrap();
        let inner = inner_congruence(&full);
        inner.verify_compatibility().unwrap();
        prop_assert!(inner.refines(&full));
        for (l, r) in p.relations_up_to(6) {
            prop_assert!(full.equivalent(&l, &r));
        }
        for len in 1..=6 {
            prop_assert!(inner.num_classes(len) >= full.num_classes(len));
            prop_assert!(full.num_classes(len) <= 1 << len);
        }
    }

    #[test]
    fn cocycle_law_holds(p in presentation(), seed in 0u64..4, u in any_word(3), v in any_word(3), w in any_word(3)) {
        let c = build_cocycle(&p, 6, seed).unwrap();
        c.verify().unwrap();
        let cat = |x: &Word, y: &Word| [x.as_slice(), y.as_slice()].concat();
        prop_assert_eq!(c.h(&cat(&u, &v), &w), c.h(&u, &cat(&v, &w)));
    }

    #[test]
    fn halves_concatenate_back(w in any_word(9)) {
        let (l, r) = split_half(&w);
        prop_assert_eq!(l.len(), w.len().div_ceil(2));
        prop_assert_eq!([l, r].concat(), w);
    }
}

#[test]
fn free_semigroup_has_singleton_classes() {
    let p = Presentation::free(&["a", "b"]);
    let full = congruence_closure(&p, 5).unwrap();
    for len in 1..=5 {
        assert_eq!(full.num_classes(len), 1 << len);
    }
}
