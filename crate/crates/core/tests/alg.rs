use proptest::prelude::*;

use cogebra::alg::{
    are_isomorphic, coefficient_span, conjugation_orbits, enumerate_representations, is_simple, EnumConfig,
    PresentedAlgebra, Representation,
};
use cogebra::comodprod::{dual_presentation, Family};
use cogebra::{Coalgebra, Elem, Field, Matrix};

fn gf(p: u32) -> Field {
    Field::prime(p).unwrap()
}

fn dihedral(f: &Field) -> PresentedAlgebra {
    let g = Coalgebra::grouplike(f, &["a", "b"]).unwrap();
    Family::new(vec![g.clone(), g]).unwrap().free_product().presentation.clone()
}

fn presentations(f: &Field) -> Vec<PresentedAlgebra> {
    vec![
        dihedral(f),
        dual_presentation(&Coalgebra::matrix(f, 2).unwrap()).unwrap().presentation,
        PresentedAlgebra::free_algebra(f, 1),
    ]
}

/// Exhaustive search for an invariant line, which is the only kind of
/// proper subspace in dimension 2.
fn oracle_simple(r: &Representation) -> bool {
    let f = r.field();
    if r.dim() == 1 {
        return true;
    }
    let elems = f.elements();
    for a in &elems {
        for b in &elems {
            let v = vec![a.clone(), b.clone()];
            if v.iter().all(|x| f.is_zero(x)) {
                continue;
            }
            let invariant = r.matrices().iter().all(|m| {
                let w = m.apply(&v);
                // w ∥ v  ⇔  det[v w] = 0
                let det = f.sub(&f.mul(&v[0], &w[1]), &f.mul(&v[1], &w[0]));
                f.is_zero(&det)
            });
            if invariant {
                return false;
            }
        }
    }
    true
}

#[test]
fn enumerated_reps_satisfy_relations_and_simplicity_agrees() {
    for q in [2u32, 3] {
        let f = gf(q);
        for p in presentations(&f) {
            for d in 1..=2 {
                let reps = enumerate_representations(&p, d, &EnumConfig::default()).unwrap();
                for r in &reps {
                    // direct evaluation of every relation, not Representation::validate
                    for rel in p.all_relations() {
                        assert!(r.eval(&rel).is_zero());
                    }
                    assert_eq!(is_simple(r).unwrap(), oracle_simple(r));
                }
            }
        }
    }
}

#[test]
fn isomorphism_is_an_equivalence_matching_orbits() {
    for q in [2u32, 3] {
        let f = gf(q);
        let p = dihedral(&f);
        for d in 1..=2 {
            let reps = enumerate_representations(&p, d, &EnumConfig::default()).unwrap();
            let n = reps.len();
            let iso: Vec<Vec<bool>> =
                (0..n).map(|i| (0..n).map(|j| are_isomorphic(&reps[i], &reps[j], 1 << 20).unwrap()).collect()).collect();
            for i in 0..n {
                assert!(iso[i][i]);
                for j in 0..n {
                    assert_eq!(iso[i][j], iso[j][i]);
                    if iso[i][j] {
                        assert!((0..n).all(|k| !iso[j][k] || iso[i][k]));
                    }
                }
            }
            let orbits = conjugation_orbits(&p, &reps).unwrap();
            for o in &orbits {
                for &i in o {
                    for j in 0..n {
                        assert_eq!(iso[o[0]][j], o.contains(&j) && iso[i][j]);
                    }
                }
            }
        }
    }
}

#[test]
fn parallel_and_serial_enumeration_agree() {
    let f = gf(3);
    let p = dihedral(&f);
    let par = enumerate_representations(&p, 2, &EnumConfig::default()).unwrap();
    let ser = enumerate_representations(&p, 2, &EnumConfig { parallel: false, ..EnumConfig::default() }).unwrap();
    assert_eq!(par, ser);
}

#[test]
fn budget_is_enforced() {
    let f = gf(2);
    let p = PresentedAlgebra::free_algebra(&f, 2);
    assert!(enumerate_representations(&p, 3, &EnumConfig::with_budget(1000)).is_err());
}

fn random_invertible(f: &Field, n: usize, codes: &[u32]) -> Matrix {
    let e = f.elements();
    let m = Matrix::new(f, n, n, codes.iter().take(n * n).map(|&c| e[c as usize % e.len()].clone()).collect::<Vec<Elem>>());
    if m.is_invertible() {
        m
    } else {
        Matrix::identity(f, n)
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn span_is_conjugation_invariant(q in prop::sample::select(vec![2u32, 3]), which in 0usize..3, codes in prop::collection::vec(0u32..9, 64), picks in prop::collection::vec(0usize..1000, 4)) {
        let f = gf(q);
        let p = presentations(&f).swap_remove(which);
        let reps = enumerate_representations(&p, 2, &EnumConfig::default()).unwrap();
        prop_assume!(!reps.is_empty());
        let chosen: Vec<Representation> = picks.iter().map(|&i| reps[i % reps.len()].clone()).collect();
        let moved: Vec<Representation> = chosen
            .iter()
            .enumerate()
            .map(|(i, r)| r.conjugate(&random_invertible(&f, 2, &codes[i * 4..])).unwrap())
            .collect();
        prop_assert_eq!(coefficient_span(&p, &chosen).unwrap().dim(), coefficient_span(&p, &moved).unwrap().dim());
    }
}

#[test]
fn span_is_monotone_in_d() {
    for q in [2u32, 3] {
        let f = gf(q);
        for p in presentations(&f) {
            let mut reps = Vec::new();
            let mut prev = 0;
            for d in 1..=2 {
                reps.extend(enumerate_representations(&p, d, &EnumConfig::default()).unwrap());
                if reps.is_empty() {
                    continue;
                }
                let dim = coefficient_span(&p, &reps).unwrap().dim();
                assert!(dim >= prev);
                prev = dim;
            }
        }
    }
}
