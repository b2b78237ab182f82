use serde::{Deserialize, Serialize};

use super::{PresentedAlgebra, Relation};
use crate::error::{Error, Result};
use crate::field::{Elem, Field};
use crate::linalg::Matrix;
use crate::spin;

/// Generator matrices of a representation, one per symbol of the
/// presentation (formal inverses included).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    dim: usize,
    field: Field,
    mats: Vec<Matrix>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedMatrix {
    pub name: String,
    pub rows: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepresentationJson {
    pub dim: usize,
    pub generators: Vec<NamedMatrix>,
}

impl Representation {
    /// Takes one matrix per generator and solves for the formal inverses.
    /// Relations are not checked here; see [`Representation::validate`].
    pub fn new(p: &PresentedAlgebra, gens: Vec<Matrix>) -> Result<Representation> {
        let field = p.field();
        if gens.len() != p.generators().len() {
            return Err(Error::DimensionMismatch(format!(
                "{} matrices for {} generators",
                gens.len(),
                p.generators().len()
            )));
        }
        let dim = match gens.first() {
            Some(m) => m.rows(),
            None => {
                return Err(Error::Precondition(
                    "use Representation::of_dim for presentations without generators".into(),
                ))
            }
        };
        Self::assemble(p, dim, gens, field)
    }

    /// A representation of a presentation whose generators may be absent.
    pub fn of_dim(p: &PresentedAlgebra, dim: usize, gens: Vec<Matrix>) -> Result<Representation> {
        Self::assemble(p, dim, gens, p.field())
    }

    fn assemble(p: &PresentedAlgebra, dim: usize, gens: Vec<Matrix>, field: &Field) -> Result<Representation> {
        for m in &gens {
            field.check_same(m.field())?;
            if m.rows() != dim || m.cols() != dim {
                return Err(Error::DimensionMismatch(format!("expected {dim}x{dim} generator matrices")));
            }
        }
        let mut mats = gens;
        for s in p.symbols().iter().skip(p.generators().len()) {
            let inv = mats[s.generator]
                .inverse()
                .ok_or_else(|| Error::Invalid(format!("generator {} is singular", p.generators()[s.generator].name)))?;
            mats.push(inv);
        }
        Ok(Representation { dim, field: field.clone(), mats })
    }

    pub(crate) fn from_parts(dim: usize, field: &Field, mats: Vec<Matrix>) -> Representation {
        Representation { dim, field: field.clone(), mats }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn matrix(&self, symbol: usize) -> &Matrix {
        &self.mats[symbol]
    }

    /// Matrices of all symbols.
    pub fn matrices(&self) -> &[Matrix] {
        &self.mats
    }

    pub fn eval_word(&self, w: &[usize]) -> Matrix {
        let mut acc = Matrix::identity(&self.field, self.dim);
        for &s in w {
            acc = acc.mul(&self.mats[s]);
        }
        acc
    }

    pub fn eval(&self, r: &Relation) -> Matrix {
        let mut acc = Matrix::zeros(&self.field, self.dim, self.dim);
        for (c, w) in r {
            acc = acc.add(&self.eval_word(w).scale(c));
        }
        acc
    }

    /// Checks every relation (inverse relations included).
    pub fn validate(&self, p: &PresentedAlgebra) -> Result<()> {
        if self.mats.len() != p.num_symbols() {
            return Err(Error::DimensionMismatch("symbol count".into()));
        }
        for (i, r) in p.all_relations().iter().enumerate() {
            if !self.eval(r).is_zero() {
                return Err(Error::Violation(format!("relation {i} ({}) fails", p.format_relation(r))));
            }
        }
        Ok(())
    }

    /// `T ρ(s) T⁻¹` for every symbol.
    pub fn conjugate(&self, t: &Matrix) -> Result<Representation> {
        let ti = t.inverse().ok_or_else(|| Error::Invalid("conjugating matrix is singular".into()))?;
        let mats = self.mats.iter().map(|m| t.mul(m).mul(&ti)).collect();
        Ok(Representation { dim: self.dim, field: self.field.clone(), mats })
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &Representation) -> Representation {
        let d = self.dim + other.dim;
        let mats = self
            .mats
            .iter()
            .zip(&other.mats)
            .map(|(a, b)| {
                let mut m = Matrix::zeros(&self.field, d, d);
                for i in 0..a.rows() {
                    for j in 0..a.cols() {
                        m.set(i, j, a.get(i, j).clone());
                    }
                }
                for i in 0..b.rows() {
                    for j in 0..b.cols() {
                        m.set(self.dim + i, self.dim + j, b.get(i, j).clone());
                    }
                }
                m
            })
            .collect();
        Representation { dim: d, field: self.field.clone(), mats }
    }

    pub fn scalar_extend(&self, e: &crate::field::Embedding) -> Result<Representation> {
        let mats = self.mats.iter().map(|m| m.map_entries(e)).collect::<Result<Vec<_>>>()?;
        Ok(Representation { dim: self.dim, field: e.target().clone(), mats })
    }

    /// Codes of the generator entries, row-major, generator by generator;
    /// the enumeration order compares these lexicographically.
    pub fn key(&self, num_generators: usize) -> Vec<u32> {
        self.mats[..num_generators].iter().flat_map(|m| m.data().iter().map(Elem::code)).collect()
    }

    pub fn to_json(&self, p: &PresentedAlgebra) -> RepresentationJson {
        RepresentationJson {
            dim: self.dim,
            generators: p
                .generators()
                .iter()
                .zip(&self.mats)
                .map(|(g, m)| NamedMatrix { name: g.name.clone(), rows: m.format_rows() })
                .collect(),
        }
    }

    pub fn from_json(p: &PresentedAlgebra, j: &RepresentationJson) -> Result<Representation> {
        let mut gens = Vec::with_capacity(p.generators().len());
        for g in p.generators() {
            let nm = j
                .generators
                .iter()
                .find(|m| m.name == g.name)
                .ok_or_else(|| Error::Parse(format!("missing matrix for generator {}", g.name)))?;
            let m = Matrix::parse_rows(p.field(), &nm.rows)?;
            gens.push(m);
        }
        Representation::of_dim(p, j.dim, gens)
    }
}

/// Whether no proper nonzero subspace is invariant under all symbols.
/// Exhaustive spinning from every projective point; finite fields only.
pub fn is_simple(r: &Representation) -> Result<bool> {
    if !r.field.is_finite() {
        return Err(Error::UnsupportedField(format!(
            "simplicity is certified by exhaustive spinning; {:?} is infinite",
            r.field
        )));
    }
    if r.dim == 1 {
        return Ok(true);
    }
    spin::is_simple_module(&r.field, r.dim, &r.mats)
}

/// The space of `T` with `T r(g) = s(g) T` for every symbol.
pub fn intertwiners(r: &Representation, s: &Representation) -> Result<Vec<Matrix>> {
    let f = &r.field;
    f.check_same(&s.field)?;
    if r.mats.len() != s.mats.len() {
        return Err(Error::DimensionMismatch("representations of different presentations".into()));
    }
    let (dr, ds) = (r.dim, s.dim);
    // unknown T is ds×dr, entry (a, b) at index a * dr + b
    let mut rows = Vec::new();
    for (rm, sm) in r.mats.iter().zip(&s.mats) {
        for i in 0..ds {
            for j in 0..dr {
                let mut row = vec![f.zero(); ds * dr];
                for a in 0..dr {
                    // (T r)_{ij} = Σ_a T_{ia} r_{aj}
                    let c = rm.get(a, j);
                    if !f.is_zero(c) {
                        row[i * dr + a] = f.add(&row[i * dr + a], c);
                    }
                }
                for a in 0..ds {
                    // (s T)_{ij} = Σ_a s_{ia} T_{aj}
                    let c = sm.get(i, a);
                    if !f.is_zero(c) {
                        row[a * dr + j] = f.sub(&row[a * dr + j], c);
                    }
                }
                rows.push(row);
            }
        }
    }
    let kernel = if rows.is_empty() {
        crate::linalg::Subspace::full(f, ds * dr)
    } else {
        Matrix::from_rows(f, rows).kernel()
    };
    Ok(kernel.vectors().into_iter().map(|v| Matrix::new(f, ds, dr, v)).collect())
}

/// Whether some intertwiner is invertible. The intertwiner space is searched
/// exhaustively when that is cheap; otherwise `det(Σ t_i B_i)` is evaluated
/// on a grid of `d + 1` values per coordinate, over an extension field when
/// the ground field is too small (isomorphism descends along field
/// extensions).
pub fn are_isomorphic(r: &Representation, s: &Representation, budget: u64) -> Result<bool> {
    if r.dim != s.dim {
        return Ok(false);
    }
    let d = r.dim;
    let basis = intertwiners(r, s)?;
    let k = basis.len();
    if k == 0 {
        return Ok(false);
    }
    let f = r.field.clone();
    if let Some(n) = f.size().and_then(|q| q.checked_pow(k as u32)) {
        if n <= budget {
            for coeffs in spin::projective_points(&f, k)? {
                if combine(&f, &coeffs, &basis).is_invertible() {
                    return Ok(true);
                }
            }
            return Ok(false);
        }
    }
    let grid = (d as u64 + 1).saturating_pow(k as u32);
    if grid > budget {
        return Err(Error::BudgetExceeded { budget, required: grid });
    }
    // a field with more than d elements containing f
    let (big, embed) = match f.size() {
        Some(q) if q <= d as u64 => {
            let p = f.characteristic();
            let deg = f.degree().unwrap();
            let mut m = 2;
            while (q as f64).powi(m as i32) <= d as f64 {
                m += 1;
            }
            let big = crate::field::Field::gf(p, deg * m)?;
            let e = crate::field::Embedding::find(&f, &big)?;
            (big, Some(e))
        }
        _ => (f.clone(), None),
    };
    let basis: Vec<Matrix> = match &embed {
        Some(e) => basis.iter().map(|b| b.map_entries(e)).collect::<Result<_>>()?,
        None => basis,
    };
    let values: Vec<Elem> = match big.size() {
        Some(_) => big.elements().into_iter().take(d + 1).collect(),
        None => (0..=d as i64).map(|i| big.from_int(i)).collect(),
    };
    let mut idx = vec![0usize; k];
    loop {
        let coeffs: Vec<Elem> = idx.iter().map(|&i| values[i].clone()).collect();
        if !big.is_zero(&combine(&big, &coeffs, &basis).det()) {
            return Ok(true);
        }
        let mut pos = 0;
        loop {
            if pos == k {
                return Ok(false);
            }
            idx[pos] += 1;
            if idx[pos] < values.len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

fn combine(f: &Field, coeffs: &[Elem], basis: &[Matrix]) -> Matrix {
    let mut acc = Matrix::zeros(f, basis[0].rows(), basis[0].cols());
    for (c, b) in coeffs.iter().zip(basis) {
        if !f.is_zero(c) {
            acc = acc.add(&b.scale(c));
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alg::FreeProduct;
    use crate::coalg::FinAlgebra;

    fn dihedral(p: u32) -> FreeProduct {
        let f = Field::prime(p).unwrap();
        let kk = FinAlgebra::diagonal(&f, 2);
        FreeProduct::new(&[kk.clone(), kk]).unwrap()
    }

    #[test]
    fn simple_pair_over_gf3() {
        let fp = dihedral(3);
        let f = fp.presentation.field().clone();
        // a1, b1 are the idempotents e0 of each factor
        let p = Matrix::from_ints(&f, &[&[1, 0], &[0, 0]]);
        // (1/2)[[1,1],[1,1]] = 2*[[1,1],[1,1]] over GF(3)
        let q = Matrix::from_ints(&f, &[&[2, 2], &[2, 2]]);
        let r = Representation::new(&fp.presentation, vec![p.clone(), q]).unwrap();
        r.validate(&fp.presentation).unwrap();
        assert!(is_simple(&r).unwrap());
        let s = Representation::new(&fp.presentation, vec![p.clone(), p]).unwrap();
        assert!(!is_simple(&s).unwrap());
        let t = Matrix::from_ints(&f, &[&[1, 1], &[0, 1]]);
        let rc = r.conjugate(&t).unwrap();
        assert!(are_isomorphic(&r, &rc, 1_000_000).unwrap());
        assert!(!are_isomorphic(&r, &s, 1_000_000).unwrap());
    }

    #[test]
    fn distinct_characters_are_not_isomorphic() {
        let fp = dihedral(2);
        let f = fp.presentation.field().clone();
        let zero = Representation::new(&fp.presentation, vec![Matrix::zeros(&f, 1, 1), Matrix::zeros(&f, 1, 1)]).unwrap();
        let one = Representation::new(&fp.presentation, vec![Matrix::identity(&f, 1), Matrix::zeros(&f, 1, 1)]).unwrap();
        assert!(!are_isomorphic(&zero, &one, 100).unwrap());
        assert!(are_isomorphic(&one, &one, 100).unwrap());
    }
}
