use super::{Coalgebra, Violation};
use crate::error::{Error, Result};
use crate::field::{Elem, Embedding, Field};
use crate::linalg::{Echelon, Matrix, Subspace};
use crate::spin;

/// A finite-dimensional associative unital algebra:
/// `e_i · e_j = Σ_k c_{ij}^k e_k`, stored sparsely at index `i * n + j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinAlgebra {
    field: Field,
    dim: usize,
    table: Vec<Vec<(usize, Elem)>>,
    unit: Vec<Elem>,
}

impl FinAlgebra {
    pub fn from_table(field: &Field, dim: usize, table: Vec<Vec<(usize, Elem)>>, unit: Vec<Elem>) -> Result<FinAlgebra> {
        if table.len() != dim * dim || unit.len() != dim {
            return Err(Error::DimensionMismatch(format!("algebra table for dim {dim}")));
        }
        let mut clean = Vec::with_capacity(table.len());
        for entry in table {
            let mut acc = vec![field.zero(); dim];
            for (k, c) in entry {
                if k >= dim {
                    return Err(Error::DimensionMismatch(format!("basis index {k} for dim {dim}")));
                }
                acc[k] = field.add(&acc[k], &c);
            }
            clean.push(acc.into_iter().enumerate().filter(|(_, c)| !field.is_zero(c)).collect());
        }
        Ok(FinAlgebra { field: field.clone(), dim, table: clean, unit })
    }

    /// Builds the table from a product function on basis indices returning
    /// dense coordinate vectors.
    pub fn from_fn(field: &Field, dim: usize, unit: Vec<Elem>, prod: impl Fn(usize, usize) -> Vec<Elem>) -> Result<FinAlgebra> {
        let mut table = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                table.push(prod(i, j).into_iter().enumerate().collect());
            }
        }
        FinAlgebra::from_table(field, dim, table, unit)
    }

    /// The ground field as a one-dimensional algebra.
    pub fn ground(field: &Field) -> FinAlgebra {
        FinAlgebra::diagonal(field, 1)
    }

    /// `k^n` with orthogonal idempotent basis.
    pub fn diagonal(field: &Field, n: usize) -> FinAlgebra {
        let table = (0..n * n)
            .map(|ij| if ij / n == ij % n { vec![(ij / n, field.one())] } else { vec![] })
            .collect();
        FinAlgebra { field: field.clone(), dim: n, table, unit: vec![field.one(); n] }
    }

    /// `n×n` matrices with matrix-unit basis `E_{ij}` at index `i * n + j`.
    pub fn matrix(field: &Field, n: usize) -> FinAlgebra {
        let d = n * n;
        let mut table = vec![Vec::new(); d * d];
        for i in 0..n {
            for j in 0..n {
                for l in 0..n {
                    table[(i * n + j) * d + j * n + l] = vec![(i * n + l, field.one())];
                }
            }
        }
        let mut unit = vec![field.zero(); d];
        for i in 0..n {
            unit[i * n + i] = field.one();
        }
        FinAlgebra { field: field.clone(), dim: d, table, unit }
    }

    /// The target of a finite embedding as an algebra over its source, on the
    /// power basis `1, θ, ..., θ^{b-1}` of a generator `θ`.
    pub fn field_extension(e: &Embedding) -> Result<FinAlgebra> {
        let rb = RelativeBasis::new(e)?;
        let k = e.source();
        let b = rb.degree();
        let t = e.target();
        let basis = rb.basis().to_vec();
        let mut unit = vec![k.zero(); b];
        unit[0] = k.one();
        FinAlgebra::from_fn(k, b, unit, |i, j| rb.coordinates(&t.mul(&basis[i], &basis[j])))
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &[Elem] {
        &self.unit
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &[(usize, Elem)] {
        &self.table[i * self.dim + j]
    }

    pub fn mul(&self, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
        let f = &self.field;
        let mut out = vec![f.zero(); self.dim];
        for (i, x) in a.iter().enumerate() {
            if f.is_zero(x) {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if f.is_zero(y) {
                    continue;
                }
                let xy = f.mul(x, y);
                for (k, c) in self.mul_basis(i, j) {
                    out[*k] = f.add(&out[*k], &f.mul(&xy, c));
                }
            }
        }
        out
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Elem> {
        let mut v = vec![self.field.zero(); self.dim];
        v[i] = self.field.one();
        v
    }

    /// Matrix of `x ↦ a x`.
    pub fn left_mult(&self, a: &[Elem]) -> Matrix {
        let cols: Vec<Vec<Elem>> = (0..self.dim).map(|j| self.mul(a, &self.basis_vector(j))).collect();
        Matrix::from_columns(&self.field, self.dim, &cols)
    }

    pub fn right_mult(&self, a: &[Elem]) -> Matrix {
        let cols: Vec<Vec<Elem>> = (0..self.dim).map(|j| self.mul(&self.basis_vector(j), a)).collect();
        Matrix::from_columns(&self.field, self.dim, &cols)
    }

    pub fn validate(&self) -> std::result::Result<(), Violation> {
        let n = self.dim;
        for i in 0..n {
            let ei = self.basis_vector(i);
            if self.mul(&self.unit, &ei) != ei {
                return Err(Violation::LeftUnit { at: i });
            }
            if self.mul(&ei, &self.unit) != ei {
                return Err(Violation::RightUnit { at: i });
            }
        }
        for i in 0..n {
            for j in 0..n {
                let ij: Vec<Elem> = self.mul(&self.basis_vector(i), &self.basis_vector(j));
                for l in 0..n {
                    let left = self.mul(&ij, &self.basis_vector(l));
                    let jl = self.mul(&self.basis_vector(j), &self.basis_vector(l));
                    let right = self.mul(&self.basis_vector(i), &jl);
                    if left != right {
                        return Err(Violation::Associativity { at: (i, j, l) });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (0..self.dim).all(|j| self.mul_basis(i, j) == self.mul_basis(j, i)))
    }

    /// The dual coalgebra on the dual basis: `Δ(e_k^*) = Σ c_{ij}^k e_i^*⊗e_j^*`.
    pub fn dual_coalgebra(&self) -> Result<Coalgebra> {
        self.validate()?;
        let n = self.dim;
        let mut entries = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for (k, c) in self.mul_basis(i, j) {
                    entries.push((*k, i, j, c.clone()));
                }
            }
        }
        let c = Coalgebra::new(&self.field, n, entries, self.unit.clone(), None)?;
        c.validate()?;
        Ok(c)
    }

    pub fn scalar_extend(&self, e: &Embedding) -> Result<FinAlgebra> {
        self.field.check_same(e.source())?;
        let table = self
            .table
            .iter()
            .map(|row| row.iter().map(|(k, c)| (*k, e.map(c))).collect())
            .collect();
        FinAlgebra::from_table(e.target(), self.dim, table, self.unit.iter().map(|c| e.map(c)).collect())
    }

    /// Jacobson radical. Over finite fields it is read off a composition
    /// series of the regular module (`J = {a : a M_i ⊆ M_{i-1}}`); over Q it
    /// is the kernel of the trace form.
    pub fn radical(&self) -> Result<Subspace> {
        let f = &self.field;
        let n = self.dim;
        if f.is_rationals() {
            let mults: Vec<Matrix> = (0..n).map(|i| self.left_mult(&self.basis_vector(i))).collect();
            let mut gram = Matrix::zeros(f, n, n);
            for s in 0..n {
                for t in 0..n {
                    let p = mults[s].mul(&mults[t]);
                    let tr = (0..n).fold(f.zero(), |acc, i| f.add(&acc, p.get(i, i)));
                    gram.set(s, t, tr);
                }
            }
            return Ok(gram.kernel());
        }
        if !f.is_finite() {
            return Err(Error::UnsupportedField(format!("radical over {:?}", f)));
        }
        let mults: Vec<Matrix> = (0..n).map(|i| self.left_mult(&self.basis_vector(i))).collect();
        let series = spin::composition_series(f, n, &mults)?;
        // rows: constraints on the coefficients of a = Σ a_t e_t
        let mut constraints: Vec<Vec<Elem>> = Vec::new();
        for w in series.windows(2) {
            let (lower, upper) = (&w[0], &w[1]);
            for m in upper.rows() {
                let images: Vec<Vec<Elem>> = mults.iter().map(|l| lower.reduce(&l.apply(m))).collect();
                for coord in 0..n {
                    let row: Vec<Elem> = images.iter().map(|v| v[coord].clone()).collect();
                    if row.iter().any(|x| !f.is_zero(x)) {
                        constraints.push(row);
                    }
                }
            }
        }
        if constraints.is_empty() {
            return Ok(Subspace::full(f, n));
        }
        Ok(Matrix::from_rows(f, constraints).kernel())
    }

    /// Checks that `j` is a nilpotent two-sided ideal.
    pub fn is_nilpotent_ideal(&self, j: &Subspace) -> bool {
        let n = self.dim;
        let basis = j.vectors();
        for v in &basis {
            for i in 0..n {
                let e = self.basis_vector(i);
                if !j.contains(&self.mul(&e, v)) || !j.contains(&self.mul(v, &e)) {
                    return false;
                }
            }
        }
        // J^k spans shrink to zero within n steps
        let mut power = j.clone();
        for _ in 0..=n {
            if power.is_zero() {
                return true;
            }
            let mut ech = Echelon::new(&self.field, n);
            for a in power.vectors() {
                for b in &basis {
                    ech.insert(&self.mul(&a, b));
                }
            }
            power = ech.to_subspace();
        }
        power.is_zero()
    }

    pub fn semisimple_quotient_is_commutative(&self) -> Result<bool> {
        let j = self.radical()?;
        for s in 0..self.dim {
            for t in s + 1..self.dim {
                let es = self.basis_vector(s);
                let et = self.basis_vector(t);
                let ab = self.mul(&es, &et);
                let ba = self.mul(&et, &es);
                let comm: Vec<Elem> = ab.iter().zip(&ba).map(|(x, y)| self.field.sub(x, y)).collect();
                if !j.contains(&comm) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Dimensions of the simple modules occurring in the regular module
    /// (every simple module does), sorted and deduplicated.
    pub fn simple_module_dims(&self) -> Result<Vec<usize>> {
        let mut dims: Vec<usize> = self.simple_modules()?.iter().map(|m| m[0].rows()).collect();
        dims.sort_unstable();
        dims.dedup();
        Ok(dims)
    }

    /// Composition factors of the regular module, each given by the action
    /// matrices of the basis elements.
    pub fn simple_modules(&self) -> Result<Vec<Vec<Matrix>>> {
        let f = &self.field;
        if !f.is_finite() {
            return Err(Error::UnsupportedField(format!("composition series over {:?}", f)));
        }
        let mults: Vec<Matrix> = (0..self.dim).map(|i| self.left_mult(&self.basis_vector(i))).collect();
        spin::composition_factors(f, self.dim, &mults)
    }
}

/// Coordinates of a finite extension `k → k'` over `k` in the power basis of
/// the generator of `k'`.
#[derive(Clone, Debug)]
pub struct RelativeBasis {
    e: Embedding,
    basis: Vec<Elem>,
    /// Inverse of the matrix whose columns are residues of `β_l θ^i`.
    solver: Matrix,
    source_basis: Vec<Elem>,
}

impl RelativeBasis {
    pub fn new(e: &Embedding) -> Result<RelativeBasis> {
        let k = e.source();
        let t = e.target();
        let (a, ab) = match (k.degree(), t.degree()) {
            (Some(a), Some(ab)) => (a, ab),
            _ => {
                return Err(Error::UnsupportedField(
                    "relative bases exist only for finite extensions of finite fields".into(),
                ))
            }
        };
        let b = ab / a;
        let p = t.characteristic();
        let prime = Field::prime(p)?;
        let theta = t.generator().unwrap_or_else(|| t.one());
        let source_basis: Vec<Elem> = (0..a)
            .map(|l| {
                let mut r = vec![0u32; a];
                r[l] = 1;
                k.from_residue(&r)
            })
            .collect();
        let mut basis = Vec::with_capacity(b);
        let mut pw = t.one();
        for _ in 0..b {
            basis.push(pw.clone());
            pw = t.mul(&pw, &theta);
        }
        let mut cols = Vec::with_capacity(ab);
        for th in &basis {
            for beta in &source_basis {
                let z = t.mul(&e.map(beta), th);
                cols.push(t.residue(&z).into_iter().map(Elem::Fin).collect::<Vec<_>>());
            }
        }
        let m = Matrix::from_columns(&prime, ab, &cols);
        let solver = m
            .inverse()
            .ok_or_else(|| Error::Invalid("generator does not give a relative basis".into()))?;
        Ok(RelativeBasis { e: e.clone(), basis, solver, source_basis })
    }

    pub fn degree(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Elem] {
        &self.basis
    }

    pub fn embedding(&self) -> &Embedding {
        &self.e
    }

    /// Coordinates of a target element over the source field.
    pub fn coordinates(&self, z: &Elem) -> Vec<Elem> {
        let k = self.e.source();
        let t = self.e.target();
        let r: Vec<Elem> = t.residue(z).into_iter().map(Elem::Fin).collect();
        let x = self.solver.apply(&r);
        let a = self.source_basis.len();
        (0..self.basis.len())
            .map(|i| {
                (0..a).fold(k.zero(), |acc, l| {
                    let c = k.from_int(x[i * a + l].code() as i64);
                    k.add(&acc, &k.mul(&c, &self.source_basis[l]))
                })
            })
            .collect()
    }
}
