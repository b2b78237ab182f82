use proptest::prelude::*;

use cogebra::alg::EnumConfig;
use cogebra::extlab::{
    generated_algebra_dimension, matrix_power_span_growth, run_experiment, transcendental_character_check,
    Experiment, WitnessReport,
};
use cogebra::{Elem, Embedding, Field, Matrix};

fn gf(p: u32, n: usize) -> Field {
    Field::gf(p, n).unwrap()
}

fn mat(f: &Field, codes: &[u32]) -> Matrix {
    let e = f.elements();
    Matrix::new(f, 2, 2, codes.iter().take(4).map(|&c| e[c as usize % e.len()].clone()).collect::<Vec<Elem>>())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn generated_dimension_is_monotone_and_basis_free(codes in prop::collection::vec(0u32..16, 12), change in prop::collection::vec(0u32..2, 4)) {
        let k = gf(2, 1);
        let kp = gf(2, 2);
        let e = Embedding::find(&k, &kp).unwrap();
        let gens = vec![mat(&kp, &codes), mat(&kp, &codes[4..]), mat(&kp, &codes[8..])];
        let dims: Vec<usize> = (0..=3).map(|n| generated_algebra_dimension(&e, &gens[..n], 64).unwrap()).collect();
        prop_assert!(dims.windows(2).all(|w| w[0] <= w[1]));
        // replace the first two generators by an invertible k-combination
        let c: Vec<Elem> = change.iter().map(|&x| k.from_int(x as i64)).collect();
        let a = Matrix::new(&k, 2, 2, c.clone());
        prop_assume!(a.is_invertible());
        let lift = |x: &Elem| e.map(x);
        let g0 = gens[0].scale(&lift(&c[0])).add(&gens[1].scale(&lift(&c[1])));
        let g1 = gens[0].scale(&lift(&c[2])).add(&gens[1].scale(&lift(&c[3])));
        prop_assert_eq!(generated_algebra_dimension(&e, &[g0, g1], 64).unwrap(), dims[2]);
    }
}

#[test]
fn power_spans_grow_for_every_characteristic() {
    for p in [0u32, 2, 3, 5] {
        let dims = matrix_power_span_growth(p, 8).unwrap();
        assert_eq!(dims, (1..=8).collect::<Vec<_>>(), "p={p}");
    }
}

#[test]
fn transcendental_element_has_no_root() {
    for (p, d) in [(2u32, 4usize), (2, 8), (3, 4), (5, 3)] {
        let r = transcendental_character_check(p, d).unwrap();
        assert_eq!(r.checked as u64, (p as u64).pow(d as u32 + 1) - 1);
        assert!(r.zeros.is_empty());
    }
}

#[test]
fn reports_revalidate_after_reload() {
    let cfg = EnumConfig::default();
    let experiments = [
        Experiment::MatrixSpan { p: 2, n: 6 },
        Experiment::Nilpotent { p: 3, n: 5 },
        Experiment::Character { p: 2, degree: 4 },
        Experiment::Dualfields { p: 2, exts: vec![2, 3], d: 5, m: 6 },
    ];
    for x in experiments {
        let r = run_experiment(&x, &cfg).unwrap();
        let text = serde_json::to_string(&r).unwrap();
        let back: WitnessReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r);
        assert!(back.revalidate(&cfg).unwrap(), "{x:?}");
    }
}
