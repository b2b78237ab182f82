use proptest::prelude::*;

use cogebra::alg::EnumConfig;
use cogebra::grouphopf::{embedding_check, reduce, GroupAlgebraElement, GroupWord};
use cogebra::Field;

fn letters(n: i32) -> impl Strategy<Value = Vec<i32>> {
    prop::collection::vec(prop::sample::select((1..=n).flat_map(|x| [x, -x]).collect::<Vec<_>>()), 0..12)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn reduction_is_confluent_and_idempotent(a in letters(2), b in letters(2), c in letters(2)) {
        let whole: Vec<i32> = a.iter().chain(&b).chain(&c).copied().collect();
        let left: Vec<i32> = reduce(&[a.clone(), b.clone()].concat(), 2).unwrap().letters().iter().chain(&c).copied().collect();
        let right: Vec<i32> = a.iter().chain(reduce(&[b.clone(), c.clone()].concat(), 2).unwrap().letters()).copied().collect();
        let r = reduce(&whole, 2).unwrap();
        prop_assert_eq!(&reduce(&left, 2).unwrap(), &r);
        prop_assert_eq!(&reduce(&right, 2).unwrap(), &r);
        prop_assert_eq!(&reduce(r.letters(), 2).unwrap(), &r);
        prop_assert!(r.letters().windows(2).all(|w| w[0] != -w[1]));
    }

    #[test]
    fn hopf_axioms_on_random_elements(terms in prop::collection::vec((letters(2), 0i64..5), 0..6)) {
        let f = Field::prime(5).unwrap();
        let terms: Vec<(Vec<i32>, _)> = terms.into_iter().map(|(w, c)| (w, f.from_int(c))).collect();
        let x = GroupAlgebraElement::from_terms(&f, 2, &terms).unwrap();
        prop_assert!(x.satisfies_antipode_axiom());
        prop_assert_eq!(x.antipode().antipode(), x.clone());
    }

    #[test]
    fn antipode_reverses_products(a in letters(2), b in letters(2)) {
        let f = Field::prime(3).unwrap();
        let x = GroupAlgebraElement::word(&f, 2, reduce(&a, 2).unwrap());
        let y = GroupAlgebraElement::word(&f, 2, reduce(&b, 2).unwrap());
        prop_assert_eq!(x.multiply(&y).unwrap().antipode(), y.antipode().multiply(&x.antipode()).unwrap());
    }
}

#[test]
fn hopf_axioms_on_basis_words() {
    let f = Field::prime(2).unwrap();
    let mut layer = vec![GroupWord::empty()];
    for _ in 0..4 {
        let mut next = Vec::new();
        for w in &layer {
            let e = GroupAlgebraElement::word(&f, 2, w.clone());
            assert!(e.satisfies_antipode_axiom());
            for x in [1, -1, 2, -2] {
                next.push(w.mul(&reduce(&[x], 2).unwrap()));
            }
        }
        layer = next;
    }
}

#[test]
fn embedding_checks_agree() {
    let cfg = EnumConfig::default();
    for (q, s, d) in [(2u32, 1usize, 1usize), (2, 1, 2), (3, 1, 1), (3, 1, 2), (2, 2, 1), (2, 2, 2), (3, 2, 1), (3, 2, 2)] {
        let r = embedding_check(&Field::prime(q).unwrap(), s, d, &cfg).unwrap();
        assert!(r.equal, "q={q} |S|={s} d={d}: {} vs {}", r.all_words_dim, r.positive_words_dim);
    }
}
