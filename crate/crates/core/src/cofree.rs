//! Truncations of the cofree coalgebra on `V = k^m`, realized as the
//! coefficient coalgebra of the representations of the free algebra
//! `T(V*)` of dimension `≤ d`.

use crate::alg::{
    coefficient_span, conjugation_orbits, enumerate_representations, CoefficientSpan, EnumConfig, PresentedAlgebra,
    Representation, Word,
};
use crate::coalg::Coalgebra;
use crate::error::{Error, Result};
use crate::field::{Elem, Field};
use crate::linalg::Matrix;

#[derive(Clone, Debug)]
pub struct CofreeTruncation {
    pub m: usize,
    pub d: usize,
    pub presentation: PresentedAlgebra,
    pub span: CoefficientSpan,
    /// `None` when larger than the configured carrier cap.
    pub carrier: Option<Coalgebra>,
    /// `f ↦ (f(x_1), …, f(x_m))`, an `m × dim` matrix.
    pub structure_map: Matrix,
    pub reps: Vec<Representation>,
}

impl CofreeTruncation {
    pub fn dim(&self) -> usize {
        self.span.dim()
    }

    pub fn field(&self) -> &Field {
        self.span.field()
    }

    /// The inclusion of this carrier into a carrier built from more
    /// representations: a functional is sent to its values on the larger
    /// span's basis words.
    pub fn inclusion_into(&self, larger: &CofreeTruncation) -> Matrix {
        let f = self.field();
        let mut m = Matrix::zeros(f, larger.dim(), self.dim());
        for (j, w) in larger.span.words().iter().enumerate() {
            for (k, c) in self.span.word_coordinates(w).into_iter().enumerate() {
                m.set(j, k, c);
            }
        }
        m
    }
}

/// The degree-`d` truncation over a finite field.
pub fn cofree_truncated(field: &Field, m: usize, d: usize, cfg: &EnumConfig) -> Result<CofreeTruncation> {
    if d == 0 {
        return Err(Error::Precondition("degree bound must be at least 1".into()));
    }
    let p = PresentedAlgebra::free_algebra(field, m);
    let mut reps = Vec::new();
    for e in 1..=d {
        let all = enumerate_representations(&p, e, cfg)?;
        let orbits = conjugation_orbits(&p, &all)?;
        reps.extend(orbits.into_iter().map(|o| all[o[0]].clone()));
    }
    let span = coefficient_span(&p, &reps)?;
    let carrier = if span.dim() <= cfg.carrier_cap { Some(span.carrier()?) } else { None };
    let mut structure_map = Matrix::zeros(field, m, span.dim());
    for i in 0..m {
        for (k, c) in span.word_coordinates(&[i]).into_iter().enumerate() {
            structure_map.set(i, k, c);
        }
    }
    Ok(CofreeTruncation { m, d, presentation: p, span, carrier, structure_map, reps })
}

#[derive(Clone, Debug)]
pub struct OntoReport {
    pub onto: bool,
    /// For each standard basis vector of `V`, a carrier vector mapping to it.
    pub preimages: Vec<Vec<Elem>>,
}

pub fn structure_map_onto(t: &CofreeTruncation) -> OntoReport {
    let f = t.field();
    let mut preimages = Vec::new();
    for i in 0..t.m {
        let mut target = vec![f.zero(); t.m];
        target[i] = f.one();
        match t.structure_map.solve(&target) {
            Some(x) => preimages.push(x),
            None => return OntoReport { onto: false, preimages: vec![] },
        }
    }
    OntoReport { onto: true, preimages }
}

/// `Δ(x_k)` for each generator of a free algebra, as `(w, w', c)` with
/// `Δ(x_k) = Σ c w ⊗ w'`.
pub type Coproduct = Vec<Vec<(Word, Word, Elem)>>;

/// Generators indexed by the basis of `c`, with `Δ` transported from `c`.
pub fn coproduct_from_coalgebra(c: &Coalgebra) -> Coproduct {
    (0..c.dim())
        .map(|k| c.delta_of_basis(k).iter().map(|(i, j, x)| (vec![*i], vec![*j], x.clone())).collect())
        .collect()
}

/// Every generator primitive: `Δ(x) = x ⊗ 1 + 1 ⊗ x`.
pub fn primitive_coproduct(field: &Field, m: usize) -> Coproduct {
    (0..m).map(|k| vec![(vec![k], vec![], field.one()), (vec![], vec![k], field.one())]).collect()
}

/// The representation on `V_ρ ⊗ V_σ` through which products of coefficient
/// functionals factor: `x_k ↦ Σ c ρ(w) ⊗ σ(w')` over `Δ(x_k)`.
pub fn convolution_tensor_rep(
    p: &PresentedAlgebra,
    coproduct: &Coproduct,
    rho: &Representation,
    sigma: &Representation,
) -> Result<Representation> {
    let f = p.field();
    let g = p.generators().len();
    if coproduct.len() != g {
        return Err(Error::DimensionMismatch(format!("{} coproducts for {g} generators", coproduct.len())));
    }
    let n = rho.dim() * sigma.dim();
    let mats = coproduct
        .iter()
        .map(|terms| {
            terms.iter().fold(Matrix::zeros(f, n, n), |acc, (w, w2, c)| {
                acc.add(&rho.eval_word(w).kronecker(&sigma.eval_word(w2)).scale(c))
            })
        })
        .collect();
    Representation::of_dim(p, n, mats)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_truncations() {
        let f2 = Field::prime(2).unwrap();
        let cfg = EnumConfig::default();
        let t1 = cofree_truncated(&f2, 1, 1, &cfg).unwrap();
        assert_eq!(t1.dim(), 2);
        assert!(structure_map_onto(&t1).onto);
        let t2 = cofree_truncated(&f2, 1, 2, &cfg).unwrap();
        assert!(t2.dim() > t1.dim());
        let inc = t1.inclusion_into(&t2);
        assert_eq!(t2.structure_map.mul(&inc), t1.structure_map);
        assert!(t2.carrier.as_ref().unwrap().validate().is_ok());
    }

    #[test]
    fn grouplike_tensor_is_kronecker() {
        let f3 = Field::prime(3).unwrap();
        let p = PresentedAlgebra::free_algebra(&f3, 1);
        let a = Matrix::from_ints(&f3, &[&[1, 2], &[0, 1]]);
        let b = Matrix::from_ints(&f3, &[&[2]]);
        let r = Representation::new(&p, vec![a.clone()]).unwrap();
        let s = Representation::new(&p, vec![b.clone()]).unwrap();
        let c = Coalgebra::trivial(&f3);
        let t = convolution_tensor_rep(&p, &coproduct_from_coalgebra(&c), &r, &s).unwrap();
        assert_eq!(t.matrix(0), &a.kronecker(&b));
        let prim = convolution_tensor_rep(&p, &primitive_coproduct(&f3, 1), &r, &s).unwrap();
        let expected = a.kronecker(&Matrix::identity(&f3, 1)).add(&Matrix::identity(&f3, 2).kronecker(&b));
        assert_eq!(prim.matrix(0), &expected);
    }
}
