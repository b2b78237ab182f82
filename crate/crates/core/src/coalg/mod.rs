//! Finite-dimensional coalgebras given by structure constants.
//!
//! `Δ(e_k) = Σ μ_k^{ij} e_i ⊗ e_j` is stored sparsely per `k`; tensors
//! `e_i ⊗ e_j` are indexed by `i * n + j` whenever a dense vector is needed.

mod algebra;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Elem, Embedding, Field, FieldDescriptor};
use crate::linalg::{Matrix, Subspace};
pub use algebra::{FinAlgebra, RelativeBasis};

/// The first failure found by a structure check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "law", rename_all = "snake_case")]
pub enum Violation {
    /// `(Δ⊗id)Δ(e_k)` and `(id⊗Δ)Δ(e_k)` differ at `e_a⊗e_b⊗e_c`.
    Coassociativity { k: usize, at: (usize, usize, usize) },
    /// `(ε⊗id)Δ(e_k)` differs from `e_k` in coordinate `at`.
    LeftCounit { k: usize, at: usize },
    RightCounit { k: usize, at: usize },
    /// `(e_i e_j) e_l` and `e_i (e_j e_l)` differ.
    Associativity { at: (usize, usize, usize) },
    LeftUnit { at: usize },
    RightUnit { at: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Coassociativity { k, at } => {
                write!(f, "coassociativity fails for e{k} at e{}⊗e{}⊗e{}", at.0, at.1, at.2)
            }
            Violation::LeftCounit { k, at } => write!(f, "left counit law fails for e{k} at coordinate {at}"),
            Violation::RightCounit { k, at } => write!(f, "right counit law fails for e{k} at coordinate {at}"),
            Violation::Associativity { at } => {
                write!(f, "associativity fails for (e{}, e{}, e{})", at.0, at.1, at.2)
            }
            Violation::LeftUnit { at } => write!(f, "left unit law fails for e{at}"),
            Violation::RightUnit { at } => write!(f, "right unit law fails for e{at}"),
        }
    }
}

impl From<Violation> for Error {
    fn from(v: Violation) -> Error {
        Error::Violation(v.to_string())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coalgebra {
    field: Field,
    dim: usize,
    delta: Vec<Vec<(usize, usize, Elem)>>,
    counit: Vec<Elem>,
    labels: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoalgebraJson {
    pub field: FieldDescriptor,
    pub dim: usize,
    pub delta: Vec<(usize, usize, usize, String)>,
    pub counit: Vec<String>,
    #[serde(default)]
    pub labels: Vec<String>,
}

fn default_labels(prefix: &str, n: usize) -> Vec<String> {
    (0..n).map(|i| format!("{prefix}{i}")).collect()
}

impl Coalgebra {
    /// Assembles a coalgebra from `(k, i, j, μ_k^{ij})` entries; repeated
    /// index triples are summed and zeros dropped. Only shapes are checked.
    pub fn new(
        field: &Field,
        dim: usize,
        entries: impl IntoIterator<Item = (usize, usize, usize, Elem)>,
        counit: Vec<Elem>,
        labels: Option<Vec<String>>,
    ) -> Result<Coalgebra> {
        if counit.len() != dim {
            return Err(Error::DimensionMismatch(format!("counit has {} entries, dim is {dim}", counit.len())));
        }
        let mut acc: Vec<BTreeMap<(usize, usize), Elem>> = vec![BTreeMap::new(); dim];
        for (k, i, j, c) in entries {
            if k >= dim || i >= dim || j >= dim {
                return Err(Error::DimensionMismatch(format!("index ({k},{i},{j}) out of range for dim {dim}")));
            }
            let slot = acc[k].entry((i, j)).or_insert_with(|| field.zero());
            *slot = field.add(slot, &c);
        }
        let delta = acc
            .into_iter()
            .map(|m| m.into_iter().filter(|(_, c)| !field.is_zero(c)).map(|((i, j), c)| (i, j, c)).collect())
            .collect();
        let labels = match labels {
            Some(l) if l.len() == dim => l,
            Some(l) if l.is_empty() => default_labels("e", dim),
            Some(l) => {
                return Err(Error::DimensionMismatch(format!("{} labels for dim {dim}", l.len())));
            }
            None => default_labels("e", dim),
        };
        Ok(Coalgebra { field: field.clone(), dim, delta, counit, labels })
    }

    /// The zero coalgebra.
    pub fn zero(field: &Field) -> Coalgebra {
        Coalgebra { field: field.clone(), dim: 0, delta: vec![], counit: vec![], labels: vec![] }
    }

    /// The one-dimensional coalgebra spanned by a single grouplike.
    pub fn trivial(field: &Field) -> Coalgebra {
        Coalgebra::grouplike(field, &["1"]).expect("nonempty")
    }

    /// The coalgebra dual to `n×n` matrices, with basis `e_{ij}` at index
    /// `i * n + j`.
    pub fn matrix(field: &Field, n: usize) -> Result<Coalgebra> {
        if n == 0 {
            return Err(Error::Precondition("matrix coalgebra needs n ≥ 1".into()));
        }
        let idx = |i: usize, j: usize| i * n + j;
        let mut entries = Vec::new();
        let mut counit = vec![field.zero(); n * n];
        let mut labels = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    entries.push((idx(i, j), idx(i, k), idx(k, j), field.one()));
                }
                labels.push(format!("e{}{}", i + 1, j + 1));
            }
            counit[idx(i, i)] = field.one();
        }
        Coalgebra::new(field, n * n, entries, counit, Some(labels))
    }

    pub fn grouplike<S: AsRef<str>>(field: &Field, labels: &[S]) -> Result<Coalgebra> {
        if labels.is_empty() {
            return Err(Error::Precondition("grouplike coalgebra needs at least one label".into()));
        }
        let n = labels.len();
        let entries = (0..n).map(|k| (k, k, k, field.one()));
        let names = labels.iter().map(|s| s.as_ref().to_string()).collect();
        Coalgebra::new(field, n, entries, vec![field.one(); n], Some(names))
    }

    /// `k_i^*` as a coalgebra over `k`, for a finite extension `e: k → k_i`.
    /// The basis is dual to the power basis of `k_i` over `k`.
    pub fn dual_field(e: &Embedding) -> Result<Coalgebra> {
        let a = FinAlgebra::field_extension(e)?;
        let mut c = a.dual_coalgebra()?;
        c.labels = default_labels("f", c.dim);
        Ok(c)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn counit(&self) -> &[Elem] {
        &self.counit
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Nonzero `(i, j, μ_k^{ij})` for a fixed `k`, sorted.
    pub fn delta_of_basis(&self, k: usize) -> &[(usize, usize, Elem)] {
        &self.delta[k]
    }

    /// All nonzero `(k, i, j, μ_k^{ij})`, sorted lexicographically.
    pub fn entries(&self) -> Vec<(usize, usize, usize, Elem)> {
        self.delta
            .iter()
            .enumerate()
            .flat_map(|(k, d)| d.iter().map(move |(i, j, c)| (k, *i, *j, c.clone())))
            .collect()
    }

    /// `Δ(v)` as a dense vector of length `n²`.
    pub fn delta(&self, v: &[Elem]) -> Vec<Elem> {
        let f = &self.field;
        let n = self.dim;
        let mut out = vec![f.zero(); n * n];
        for (k, x) in v.iter().enumerate() {
            if f.is_zero(x) {
                continue;
            }
            for (i, j, c) in &self.delta[k] {
                let idx = i * n + j;
                out[idx] = f.add(&out[idx], &f.mul(x, c));
            }
        }
        out
    }

    /// `Δ` as an `n² × n` matrix.
    pub fn delta_matrix(&self) -> Matrix {
        let f = &self.field;
        let n = self.dim;
        let mut m = Matrix::zeros(f, n * n, n);
        for (k, d) in self.delta.iter().enumerate() {
            for (i, j, c) in d {
                m.set(i * n + j, k, c.clone());
            }
        }
        m
    }

    pub fn counit_of(&self, v: &[Elem]) -> Elem {
        let f = &self.field;
        v.iter().zip(&self.counit).fold(f.zero(), |acc, (x, e)| f.add(&acc, &f.mul(x, e)))
    }

    /// Whether the `target.dim() × self.dim()` matrix `m` is a coalgebra map:
    /// `(m ⊗ m)∘Δ = Δ'∘m` and `ε'∘m = ε`.
    pub fn is_morphism(&self, target: &Coalgebra, m: &Matrix) -> bool {
        let f = &self.field;
        if m.rows() != target.dim || m.cols() != self.dim || f.check_same(target.field()).is_err() {
            return false;
        }
        let mm = m.kronecker(m);
        (0..self.dim).all(|k| {
            let mut e = vec![f.zero(); self.dim];
            e[k] = f.one();
            let image = m.apply(&e);
            mm.apply(&self.delta(&e)) == target.delta(&image) && target.counit_of(&image) == self.counit[k]
        })
    }

    /// Checks coassociativity and both counit laws, basis element by basis
    /// element, reporting the first failure.
    pub fn validate(&self) -> std::result::Result<(), Violation> {
        let f = &self.field;
        for k in 0..self.dim {
            let mut left: BTreeMap<(usize, usize, usize), Elem> = BTreeMap::new();
            let mut right: BTreeMap<(usize, usize, usize), Elem> = BTreeMap::new();
            for (i, j, c) in &self.delta[k] {
                for (a, b, d) in &self.delta[*i] {
                    let s = left.entry((*a, *b, *j)).or_insert_with(|| f.zero());
                    *s = f.add(s, &f.mul(c, d));
                }
                for (a, b, d) in &self.delta[*j] {
                    let s = right.entry((*i, *a, *b)).or_insert_with(|| f.zero());
                    *s = f.add(s, &f.mul(c, d));
                }
            }
            let mut keys: Vec<&(usize, usize, usize)> = left.keys().chain(right.keys()).collect();
            keys.sort();
            keys.dedup();
            let zero = f.zero();
            for key in keys {
                let l = left.get(key).unwrap_or(&zero);
                let r = right.get(key).unwrap_or(&zero);
                if l != r {
                    return Err(Violation::Coassociativity { k, at: *key });
                }
            }
            let mut lc = vec![f.zero(); self.dim];
            let mut rc = vec![f.zero(); self.dim];
            for (i, j, c) in &self.delta[k] {
                lc[*j] = f.add(&lc[*j], &f.mul(&self.counit[*i], c));
                rc[*i] = f.add(&rc[*i], &f.mul(c, &self.counit[*j]));
            }
            let expect = |t: usize| if t == k { f.one() } else { f.zero() };
            if let Some(at) = (0..self.dim).find(|&t| lc[t] != expect(t)) {
                return Err(Violation::LeftCounit { k, at });
            }
            if let Some(at) = (0..self.dim).find(|&t| rc[t] != expect(t)) {
                return Err(Violation::RightCounit { k, at });
            }
        }
        Ok(())
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_ok()
    }

    /// The convolution algebra `C*` on the dual basis.
    pub fn dual_algebra(&self) -> Result<FinAlgebra> {
        self.validate()?;
        let n = self.dim;
        let mut table = vec![Vec::new(); n * n];
        for (k, d) in self.delta.iter().enumerate() {
            for (i, j, c) in d {
                table[i * n + j].push((k, c.clone()));
            }
        }
        let a = FinAlgebra::from_table(&self.field, n, table, self.counit.clone())?;
        a.validate()?;
        Ok(a)
    }

    pub fn direct_sum(&self, other: &Coalgebra) -> Result<Coalgebra> {
        self.field.check_same(&other.field)?;
        let n = self.dim;
        let mut entries = self.entries();
        entries.extend(other.entries().into_iter().map(|(k, i, j, c)| (k + n, i + n, j + n, c)));
        let mut counit = self.counit.clone();
        counit.extend(other.counit.iter().cloned());
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().cloned());
        if labels.iter().collect::<std::collections::BTreeSet<_>>().len() != labels.len() {
            labels = default_labels("e", n + other.dim);
        }
        Coalgebra::new(&self.field, n + other.dim, entries, counit, Some(labels))
    }

    pub fn scalar_extend(&self, e: &Embedding) -> Result<Coalgebra> {
        self.field.check_same(e.source())?;
        let t = e.target();
        let entries = self.entries().into_iter().map(|(k, i, j, c)| (k, i, j, e.map(&c)));
        let counit = self.counit.iter().map(|c| e.map(c)).collect();
        Coalgebra::new(t, self.dim, entries, counit, Some(self.labels.clone()))
    }

    /// Whether `Δ(D) ⊆ D⊗D`, checked vector by vector in `C⊗C`.
    pub fn is_subcoalgebra(&self, d: &Subspace) -> bool {
        let dd = d.tensor(d);
        d.vectors().iter().all(|v| dd.contains(&self.delta(v)))
    }

    /// The largest subcoalgebra contained in `w`, by the decreasing fixpoint
    /// `D_{k+1} = {x ∈ D_k : Δ(x) ∈ D_k ⊗ D_k}`.
    pub fn largest_subcoalgebra(&self, w: &Subspace) -> Result<Subspace> {
        self.field.check_same(w.field())?;
        if w.ambient() != self.dim {
            return Err(Error::DimensionMismatch(format!(
                "subspace of {}-space in a {}-dimensional coalgebra",
                w.ambient(),
                self.dim
            )));
        }
        let f = &self.field;
        let n = self.dim;
        let mut d = w.clone();
        loop {
            if d.is_zero() || d.is_full() {
                return Ok(d);
            }
            // Δx ∈ D⊗D  ⇔  (π⊗id)Δx = 0 and (id⊗π)Δx = 0, π: C → C/D
            let pi = d.complement_projection();
            let r = pi.rows();
            let basis = d.vectors();
            let mut cols = Vec::with_capacity(basis.len());
            for b in &basis {
                let dv = self.delta(b);
                let mut con = vec![f.zero(); 2 * r * n];
                for i in 0..n {
                    for j in 0..n {
                        let c = &dv[i * n + j];
                        if f.is_zero(c) {
                            continue;
                        }
                        for s in 0..r {
                            let pl = pi.get(s, i);
                            if !f.is_zero(pl) {
                                let idx = s * n + j;
                                con[idx] = f.add(&con[idx], &f.mul(pl, c));
                            }
                            let pr = pi.get(s, j);
                            if !f.is_zero(pr) {
                                let idx = r * n + i * r + s;
                                con[idx] = f.add(&con[idx], &f.mul(c, pr));
                            }
                        }
                    }
                }
                cols.push(con);
            }
            let system = Matrix::from_columns(f, 2 * r * n, &cols);
            let coeffs = system.kernel();
            let basis_m = Matrix::from_rows(f, basis);
            let next: Vec<Vec<Elem>> = coeffs.vectors().iter().map(|a| basis_m.apply_left(a)).collect();
            let next = Subspace::from_vectors(f, n, next);
            if next.dim() == d.dim() {
                return Ok(d);
            }
            d = next;
        }
    }

    /// Whether every simple comodule over the algebraic closure is
    /// one-dimensional: `C*` modulo its radical is commutative.
    pub fn is_geometrically_pointed(&self) -> Result<bool> {
        let a = self.dual_algebra()?;
        a.semisimple_quotient_is_commutative()
    }

    /// Grouplike elements, by exhaustive search over a finite field.
    pub fn grouplikes(&self) -> Result<Vec<Vec<Elem>>> {
        let f = &self.field;
        let n = self.dim;
        let mut out = Vec::new();
        for v in crate::spin::all_vectors(f, n)? {
            if !f.is_one(&self.counit_of(&v)) {
                continue;
            }
            let dv = self.delta(&v);
            let ok = (0..n).all(|i| (0..n).all(|j| dv[i * n + j] == f.mul(&v[i], &v[j])));
            if ok {
                out.push(v);
            }
        }
        Ok(out)
    }

    pub fn to_json(&self) -> CoalgebraJson {
        let f = &self.field;
        CoalgebraJson {
            field: f.descriptor().clone(),
            dim: self.dim,
            delta: self.entries().into_iter().map(|(k, i, j, c)| (k, i, j, f.format(&c))).collect(),
            counit: self.counit.iter().map(|c| f.format(c)).collect(),
            labels: self.labels.clone(),
        }
    }

    /// Reads the JSON form; shapes are checked but the axioms are not.
    pub fn from_json(j: &CoalgebraJson) -> Result<Coalgebra> {
        let f = Field::new(&j.field)?;
        let mut entries = Vec::with_capacity(j.delta.len());
        for (k, i, jj, c) in &j.delta {
            entries.push((*k, *i, *jj, f.parse(c)?));
        }
        let counit = j.counit.iter().map(|c| f.parse(c)).collect::<Result<Vec<_>>>()?;
        Coalgebra::new(&f, j.dim, entries, counit, Some(j.labels.clone()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> Field {
        Field::prime(2).unwrap()
    }

    #[test]
    fn matrix_coalgebra_shape() {
        let c = Coalgebra::matrix(&f2(), 2).unwrap();
        assert_eq!(c.dim(), 4);
        assert!(c.is_valid());
        // Δ(e12) = e11⊗e12 + e12⊗e22
        let d: Vec<(usize, usize)> = c.delta_of_basis(1).iter().map(|(i, j, _)| (*i, *j)).collect();
        assert_eq!(d, vec![(0, 1), (1, 3)]);
        assert_eq!(Coalgebra::matrix(&f2(), 0).unwrap_err(), Error::Precondition("matrix coalgebra needs n ≥ 1".into()));
    }

    #[test]
    fn zero_counit_is_reported_at_index_zero() {
        let f = f2();
        let c = Coalgebra::new(&f, 2, vec![(0, 0, 0, f.one()), (1, 1, 1, f.one())], vec![f.zero(); 2], None).unwrap();
        assert_eq!(c.validate(), Err(Violation::LeftCounit { k: 0, at: 0 }));
    }

    #[test]
    fn grouplike_dual_is_diagonal() {
        let f = Field::prime(3).unwrap();
        let a = Coalgebra::grouplike(&f, &["a", "b"]).unwrap().dual_algebra().unwrap();
        assert_eq!(a.mul_basis(0, 0), &[(0, f.one())]);
        assert!(a.mul_basis(0, 1).is_empty());
        assert_eq!(a.unit(), &[f.one(), f.one()]);
    }

    #[test]
    fn largest_subcoalgebra_examples() {
        let f = f2();
        let m = Coalgebra::matrix(&f, 2).unwrap();
        let w = Subspace::coordinate(&f, 4, &[0, 3, 1]);
        assert!(m.largest_subcoalgebra(&w).unwrap().is_zero());
        let full = Subspace::full(&f, 4);
        assert_eq!(m.largest_subcoalgebra(&full).unwrap(), full);
        let g = Coalgebra::grouplike(&f, &["a", "b", "c"]).unwrap();
        let w = Subspace::coordinate(&f, 3, &[0, 1]);
        assert_eq!(g.largest_subcoalgebra(&w).unwrap(), w);
    }

    #[test]
    fn json_roundtrip() {
        let c = Coalgebra::matrix(&Field::prime(3).unwrap(), 2).unwrap();
        let s = serde_json::to_string(&c.to_json()).unwrap();
        let back = Coalgebra::from_json(&serde_json::from_str(&s).unwrap()).unwrap();
        assert_eq!(back, c);
    }
}
