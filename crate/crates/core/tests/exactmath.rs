use proptest::prelude::*;

use cogebra::{Elem, Embedding, Field, Matrix, Subspace};

fn gf(p: u32, n: usize) -> Field {
    Field::gf(p, n).unwrap()
}

fn matrix(f: &Field, rows: usize, cols: usize, codes: &[u32]) -> Matrix {
    let elems = f.elements();
    let data = codes.iter().take(rows * cols).map(|&c| elems[c as usize % elems.len()].clone()).collect();
    Matrix::new(f, rows, cols, data)
}

fn codes(n: usize) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(0u32..64, n)
}

fn subspace(f: &Field, n: usize, k: usize, cs: &[u32]) -> Subspace {
    let m = matrix(f, k, n, cs);
    Subspace::from_vectors(f, n, m.row_vecs())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(q in prop::sample::select(vec![(2u32, 1usize), (3, 1), (2, 2), (2, 3), (3, 2), (5, 1)]), a in 0u32..64, b in 0u32..64, c in 0u32..64) {
        let f = gf(q.0, q.1);
        let e = f.elements();
        let (a, b, c) = (&e[a as usize % e.len()], &e[b as usize % e.len()], &e[c as usize % e.len()]);
        prop_assert_eq!(f.add(a, b), f.add(b, a));
        prop_assert_eq!(f.mul(a, b), f.mul(b, a));
        prop_assert_eq!(f.mul(&f.mul(a, b), c), f.mul(a, &f.mul(b, c)));
        prop_assert_eq!(f.mul(a, &f.add(b, c)), f.add(&f.mul(a, b), &f.mul(a, c)));
        prop_assert!(f.is_zero(&f.add(a, &f.neg(a))));
        if !f.is_zero(a) {
            prop_assert!(f.is_one(&f.mul(a, &f.inv(a))));
        }
        prop_assert_eq!(f.parse(&f.format(a)).unwrap(), a.clone());
    }

    #[test]
    fn rationals_are_exact(a in -50i64..50, b in 1i64..50, c in -50i64..50) {
        let q = Field::rationals();
        let x = f_div(&q, a, b);
        let y = f_div(&q, c, b);
        prop_assert_eq!(q.sub(&q.add(&x, &y), &y), x.clone());
        if a != 0 {
            prop_assert!(q.is_one(&q.mul(&x, &q.inv(&x))));
        }
    }

    #[test]
    fn rank_nullity(rows in 1usize..6, cols in 1usize..6, cs in codes(36), q in prop::sample::select(vec![2u32, 3, 4])) {
        let f = if q == 4 { gf(2, 2) } else { gf(q, 1) };
        let m = matrix(&f, rows, cols, &cs);
        prop_assert_eq!(m.rank() + m.kernel().dim(), cols);
        for v in m.kernel().vectors() {
            prop_assert!(m.apply(&v).iter().all(|x| f.is_zero(x)));
        }
    }

    #[test]
    fn rref_is_idempotent(rows in 1usize..6, cols in 1usize..6, cs in codes(36)) {
        let f = gf(3, 1);
        let (r, piv) = matrix(&f, rows, cols, &cs).rref();
        let (r2, piv2) = r.rref();
        prop_assert_eq!(r, r2);
        prop_assert_eq!(piv, piv2);
    }

    #[test]
    fn subspace_equality_is_basis_form_equality(cs in codes(16), t in codes(9)) {
        let f = gf(3, 1);
        let s = subspace(&f, 4, 3, &cs);
        // an invertible change of spanning vectors leaves the subspace unchanged
        let mut change = matrix(&f, 3, 3, &t);
        if !change.is_invertible() {
            change = Matrix::identity(&f, 3);
        }
        let vecs = matrix(&f, 3, 4, &cs);
        let moved = Subspace::from_vectors(&f, 4, change.mul(&vecs).row_vecs());
        prop_assert_eq!(&s, &moved);
        prop_assert_eq!(s.basis(), moved.basis());
    }

    #[test]
    fn scalar_extension_commutes(a in codes(16), b in codes(16), m in codes(20), ka in 0usize..4, kb in 0usize..4) {
        let f2 = gf(2, 1);
        let e = Embedding::find(&f2, &gf(2, 2)).unwrap();
        let u = subspace(&f2, 4, ka, &a);
        let v = subspace(&f2, 4, kb, &b);
        let ue = u.scalar_extend(&e).unwrap();
        let ve = v.scalar_extend(&e).unwrap();
        prop_assert_eq!(u.sum(&v).unwrap().scalar_extend(&e).unwrap(), ue.sum(&ve).unwrap());
        prop_assert_eq!(u.intersect(&v).unwrap().scalar_extend(&e).unwrap(), ue.intersect(&ve).unwrap());
        let mat = matrix(&f2, 5, 4, &m);
        let me = mat.map_entries(&e).unwrap();
        prop_assert_eq!(mat.kernel().scalar_extend(&e).unwrap(), me.kernel());
        prop_assert_eq!(mat.image().scalar_extend(&e).unwrap(), me.image());
    }

    #[test]
    fn embeddings_are_ring_maps(a in 0u32..16, b in 0u32..16) {
        let src = gf(2, 2);
        let tgt = gf(2, 4);
        let e = Embedding::find(&src, &tgt).unwrap();
        let el = src.elements();
        let (x, y) = (&el[a as usize % 4], &el[b as usize % 4]);
        prop_assert_eq!(e.map(&src.mul(x, y)), tgt.mul(&e.map(x), &e.map(y)));
        prop_assert_eq!(e.map(&src.add(x, y)), tgt.add(&e.map(x), &e.map(y)));
    }
}

fn f_div(q: &Field, a: i64, b: i64) -> Elem {
    q.div(&q.from_int(a), &q.from_int(b))
}

#[test]
fn determinant_is_multiplicative() {
    let f = gf(5, 1);
    let a = Matrix::from_ints(&f, &[&[1, 2, 3], &[0, 4, 1], &[2, 2, 2]]);
    let b = Matrix::from_ints(&f, &[&[3, 0, 1], &[1, 1, 1], &[4, 0, 2]]);
    assert_eq!(a.mul(&b).det(), f.mul(&a.det(), &b.det()));
    let inv = a.inverse().unwrap();
    assert!(a.mul(&inv).is_identity());
}
