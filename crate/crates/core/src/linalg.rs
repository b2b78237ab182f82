//! Dense exact matrices and subspaces in reduced row-echelon form.

use crate::error::{Error, Result};
use crate::field::{poly, Elem, Embedding, Field};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

impl Matrix {
    pub fn new(field: &Field, rows: usize, cols: usize, data: Vec<Elem>) -> Matrix {
        assert_eq!(data.len(), rows * cols, "matrix data has the wrong length");
        Matrix { field: field.clone(), rows, cols, data }
    }

    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Matrix {
        Matrix::new(field, rows, cols, vec![field.zero(); rows * cols])
    }

    pub fn identity(field: &Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn scalar(field: &Field, n: usize, c: &Elem) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, c.clone());
        }
        m
    }

    /// Matrix unit `E_{ij}` of size `n`.
    pub fn unit(field: &Field, n: usize, i: usize, j: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        m.set(i, j, field.one());
        m
    }

    /// Rows must share a common length; an empty list yields a 0×0 matrix.
    pub fn from_rows(field: &Field, rows: Vec<Vec<Elem>>) -> Matrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row);
        }
        Matrix::new(field, r, c, data)
    }

    pub fn from_ints(field: &Field, rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(
            field,
            rows.iter().map(|r| r.iter().map(|&x| field.from_int(x)).collect()).collect(),
        )
    }

    pub fn from_columns(field: &Field, rows: usize, cols: &[Vec<Elem>]) -> Matrix {
        let mut m = Matrix::zeros(field, rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows);
            for (i, x) in c.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    /// Companion matrix of a monic polynomial of degree `r`, acting on
    /// windows by `C (s_n, ..., s_{n+r-1})^T = (s_{n+1}, ..., s_{n+r})^T`.
    pub fn companion(field: &Field, monic: &[Elem]) -> Matrix {
        let r = monic.len() - 1;
        assert!(r >= 1 && field.is_one(&monic[r]), "companion needs a monic polynomial of degree ≥ 1");
        let mut m = Matrix::zeros(field, r, r);
        for i in 0..r - 1 {
            m.set(i, i + 1, field.one());
        }
        for j in 0..r {
            m.set(r - 1, j, field.neg(&monic[j]));
        }
        m
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn data(&self) -> &[Elem] {
        &self.data
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &Elem {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Elem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Elem> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vec<Elem>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| self.field.is_zero(x))
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = self.get(i, j);
                    if i == j {
                        self.field.is_one(x)
                    } else {
                        self.field.is_zero(x)
                    }
                })
            })
    }

    fn check_shape(&self, other: &Matrix, what: &str) -> Result<()> {
        self.field.check_same(&other.field)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{what}: {}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Matrix) -> Result<Matrix> {
        self.check_shape(other, "add")?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| self.field.add(a, b)).collect();
        Ok(Matrix::new(&self.field, self.rows, self.cols, data))
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        self.try_add(other).expect("matrix add")
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        self.check_shape(other, "sub").expect("matrix sub");
        let data = self.data.iter().zip(&other.data).map(|(a, b)| self.field.sub(a, b)).collect();
        Matrix::new(&self.field, self.rows, self.cols, data)
    }

    pub fn neg(&self) -> Matrix {
        let data = self.data.iter().map(|a| self.field.neg(a)).collect();
        Matrix::new(&self.field, self.rows, self.cols, data)
    }

    pub fn scale(&self, c: &Elem) -> Matrix {
        let data = self.data.iter().map(|a| self.field.mul(a, c)).collect();
        Matrix::new(&self.field, self.rows, self.cols, data)
    }

    pub fn try_mul(&self, other: &Matrix) -> Result<Matrix> {
        self.field.check_same(&other.field)?;
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "mul: {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if f.is_zero(b) {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.data[idx] = f.add(&out.data[idx], &f.mul(a, b));
                }
            }
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        self.try_mul(other).expect("matrix mul")
    }

    pub fn pow(&self, mut e: u64) -> Matrix {
        assert!(self.is_square());
        let mut acc = Matrix::identity(&self.field, self.rows);
        let mut b = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&b);
            }
            e >>= 1;
            if e > 0 {
                b = b.mul(&b);
            }
        }
        acc
    }

    /// `M v` for a column vector `v`.
    pub fn apply(&self, v: &[Elem]) -> Vec<Elem> {
        assert_eq!(v.len(), self.cols);
        let f = &self.field;
        (0..self.rows)
            .map(|i| {
                let mut acc = f.zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !f.is_zero(a) && !f.is_zero(b) {
                        acc = f.add(&acc, &f.mul(a, b));
                    }
                }
                acc
            })
            .collect()
    }

    /// `v^T M` for a row vector `v`.
    pub fn apply_left(&self, v: &[Elem]) -> Vec<Elem> {
        assert_eq!(v.len(), self.rows);
        let f = &self.field;
        let mut out = vec![f.zero(); self.cols];
        for (i, c) in v.iter().enumerate() {
            if f.is_zero(c) {
                continue;
            }
            for (j, a) in self.row(i).iter().enumerate() {
                if !f.is_zero(a) {
                    out[j] = f.add(&out[j], &f.mul(c, a));
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(&self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn kronecker(&self, other: &Matrix) -> Matrix {
        self.field.check_same(&other.field).expect("kronecker over different fields");
        let f = &self.field;
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        let mut out = Matrix::zeros(f, r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if f.is_zero(a) {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        out.set(i * other.rows + k, j * other.cols + l, f.mul(a, other.get(k, l)));
                    }
                }
            }
        }
        out
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix::new(&self.field, self.rows + other.rows, self.cols, data)
    }

    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        let mut out = Matrix::zeros(&self.field, self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
            for j in 0..other.cols {
                out.set(i, self.cols + j, other.get(i, j).clone());
            }
        }
        out
    }

    pub fn submatrix(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Matrix {
        let mut out = Matrix::zeros(&self.field, rows.len(), cols.len());
        for (a, i) in rows.clone().enumerate() {
            for (b, j) in cols.clone().enumerate() {
                out.set(a, b, self.get(i, j).clone());
            }
        }
        out
    }

    /// Reduced row-echelon form (zero rows dropped) and pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let f = &self.field;
        let mut rows = self.row_vecs();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            let Some(p) = (r..rows.len()).find(|&i| !f.is_zero(&rows[i][c])) else {
                continue;
            };
            rows.swap(r, p);
            let inv = f.inv(&rows[r][c]);
            if !f.is_one(&inv) {
                for x in rows[r].iter_mut().skip(c) {
                    *x = f.mul(x, &inv);
                }
            }
            let pivot_row = rows[r].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i == r || f.is_zero(&row[c]) {
                    continue;
                }
                let factor = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row).skip(c) {
                    if !f.is_zero(y) {
                        *x = f.sub(x, &f.mul(&factor, y));
                    }
                }
            }
            pivots.push(c);
            r += 1;
            if r == rows.len() {
                break;
            }
        }
        rows.truncate(r);
        let m = Matrix::new(f, r, self.cols, rows.into_iter().flatten().collect());
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// `{x : M x = 0}`.
    pub fn kernel(&self) -> Subspace {
        let f = &self.field;
        let (r, pivots) = self.rref();
        let mut basis = Vec::new();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![f.zero(); self.cols];
            v[free] = f.one();
            for (k, &p) in pivots.iter().enumerate() {
                v[p] = f.neg(r.get(k, free));
            }
            basis.push(v);
        }
        Subspace::from_vectors(f, self.cols, basis)
    }

    /// `{y : y^T M = 0}`.
    pub fn left_kernel(&self) -> Subspace {
        self.transpose().kernel()
    }

    /// Column space.
    pub fn image(&self) -> Subspace {
        Subspace::from_vectors(&self.field, self.rows, self.transpose().row_vecs())
    }

    pub fn row_space(&self) -> Subspace {
        Subspace::from_vectors(&self.field, self.cols, self.row_vecs())
    }

    /// Some `x` with `M x = b`, if one exists.
    pub fn solve(&self, b: &[Elem]) -> Option<Vec<Elem>> {
        assert_eq!(b.len(), self.rows);
        let f = &self.field;
        let col = Matrix::from_columns(f, self.rows, &[b.to_vec()]);
        let (r, pivots) = self.hstack(&col).rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![f.zero(); self.cols];
        for (k, &p) in pivots.iter().enumerate() {
            x[p] = r.get(k, self.cols).clone();
        }
        Some(x)
    }

    pub fn det(&self) -> Elem {
        assert!(self.is_square());
        let f = &self.field;
        let n = self.rows;
        let mut a = self.row_vecs();
        let mut det = f.one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !f.is_zero(&a[i][c])) else {
                return f.zero();
            };
            if p != c {
                a.swap(p, c);
                det = f.neg(&det);
            }
            det = f.mul(&det, &a[c][c]);
            let inv = f.inv(&a[c][c]);
            for i in c + 1..n {
                if f.is_zero(&a[i][c]) {
                    continue;
                }
                let factor = f.mul(&a[i][c], &inv);
                for j in c..n {
                    let t = f.mul(&factor, &a[c][j]);
                    a[i][j] = f.sub(&a[i][j], &t);
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Option<Matrix> {
        assert!(self.is_square());
        let n = self.rows;
        let (r, pivots) = self.hstack(&Matrix::identity(&self.field, n)).rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(r.submatrix(0..n, n..2 * n))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Characteristic polynomial `det(xI - M)`, monic, low degree first.
    /// Reduction to Hessenberg form followed by the standard recurrence.
    pub fn charpoly(&self) -> Vec<Elem> {
        assert!(self.is_square());
        let f = &self.field;
        let n = self.rows;
        let mut h = self.row_vecs();
        for m in 1..n.saturating_sub(1) {
            let Some(i) = (m..n).find(|&i| !f.is_zero(&h[i][m - 1])) else {
                continue;
            };
            if i != m {
                h.swap(i, m);
                for row in h.iter_mut() {
                    row.swap(i, m);
                }
            }
            let inv = f.inv(&h[m][m - 1]);
            for i in m + 1..n {
                if f.is_zero(&h[i][m - 1]) {
                    continue;
                }
                let u = f.mul(&h[i][m - 1], &inv);
                for j in 0..n {
                    let t = f.mul(&u, &h[m][j]);
                    h[i][j] = f.sub(&h[i][j], &t);
                }
                for row in h.iter_mut() {
                    let t = f.mul(&u, &row[i]);
                    row[m] = f.add(&row[m], &t);
                }
            }
        }
        // p_k = charpoly of the leading k×k block
        let mut ps: Vec<Vec<Elem>> = vec![vec![f.one()]];
        for k in 1..=n {
            let mut pk = poly::mul(f, &[f.neg(&h[k - 1][k - 1]), f.one()], &ps[k - 1]);
            let mut t = f.one();
            for i in 1..k {
                t = f.mul(&t, &h[k - i][k - i - 1]);
                let c = f.mul(&t, &h[k - i - 1][k - 1]);
                pk = poly::sub(f, &pk, &poly::scale(f, &ps[k - i - 1], &c));
            }
            ps.push(pk);
        }
        ps.pop().unwrap()
    }

    pub fn map_entries(&self, e: &Embedding) -> Result<Matrix> {
        self.field.check_same(e.source())?;
        let data = self.data.iter().map(|x| e.map(x)).collect();
        Ok(Matrix::new(e.target(), self.rows, self.cols, data))
    }

    pub fn format_rows(&self) -> Vec<Vec<String>> {
        (0..self.rows).map(|i| self.row(i).iter().map(|x| self.field.format(x)).collect()).collect()
    }

    pub fn parse_rows(field: &Field, rows: &[Vec<String>]) -> Result<Matrix> {
        let mut out = Vec::with_capacity(rows.len());
        for r in rows {
            out.push(r.iter().map(|s| field.parse(s)).collect::<Result<Vec<_>>>()?);
        }
        let c = out.first().map_or(0, |r| r.len());
        if out.iter().any(|r| r.len() != c) {
            return Err(Error::Parse("ragged matrix".into()));
        }
        Ok(Matrix::from_rows(field, out))
    }
}

/// A subspace of `field^ambient`, stored by its reduced row-echelon basis.
/// Equality of subspaces is equality of these canonical forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn from_vectors(field: &Field, ambient: usize, vectors: Vec<Vec<Elem>>) -> Subspace {
        let m = if vectors.is_empty() {
            Matrix::zeros(field, 0, ambient)
        } else {
            Matrix::from_rows(field, vectors)
        };
        assert_eq!(m.cols, ambient, "vector length differs from the ambient dimension");
        let (basis, pivots) = m.rref();
        Subspace { ambient, basis, pivots }
    }

    pub fn zero(field: &Field, ambient: usize) -> Subspace {
        Subspace::from_vectors(field, ambient, vec![])
    }

    pub fn full(field: &Field, ambient: usize) -> Subspace {
        Subspace {
            ambient,
            basis: Matrix::identity(field, ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// Span of the given standard basis vectors.
    pub fn coordinate(field: &Field, ambient: usize, coords: &[usize]) -> Subspace {
        let vecs = coords
            .iter()
            .map(|&c| {
                let mut v = vec![field.zero(); ambient];
                v[c] = field.one();
                v
            })
            .collect();
        Subspace::from_vectors(field, ambient, vecs)
    }

    pub fn field(&self) -> &Field {
        &self.basis.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn vectors(&self) -> Vec<Vec<Elem>> {
        self.basis.row_vecs()
    }

    fn check(&self, other: &Subspace) -> Result<()> {
        self.field().check_same(other.field())?;
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch(format!(
                "ambient dimensions {} and {}",
                self.ambient, other.ambient
            )));
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        let mut v = self.vectors();
        v.extend(other.vectors());
        Ok(Subspace::from_vectors(self.field(), self.ambient, v))
    }

    /// Intersection via the kernel of the stacked system `[A; -B]^T`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        let f = self.field();
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(f, self.ambient));
        }
        let stacked = self.basis.vstack(&other.basis.neg());
        let k = stacked.transpose().kernel();
        let a = self.dim();
        let vecs = k
            .vectors()
            .into_iter()
            .map(|coeffs| self.basis.apply_left(&coeffs[..a]))
            .collect();
        Ok(Subspace::from_vectors(f, self.ambient, vecs))
    }

    pub fn contains(&self, v: &[Elem]) -> bool {
        assert_eq!(v.len(), self.ambient);
        let f = self.field();
        let mut r = v.to_vec();
        for (k, &p) in self.pivots.iter().enumerate() {
            if f.is_zero(&r[p]) {
                continue;
            }
            let c = r[p].clone();
            for (x, b) in r.iter_mut().zip(self.basis.row(k)) {
                if !f.is_zero(b) {
                    *x = f.sub(x, &f.mul(&c, b));
                }
            }
        }
        r.iter().all(|x| f.is_zero(x))
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.vectors().iter().all(|v| self.contains(v))
    }

    /// Coordinates of `v` in the echelon basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Elem]) -> Option<Vec<Elem>> {
        let coords: Vec<Elem> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let back = self.basis.apply_left(&coords);
        (back == v).then_some(coords)
    }

    /// Residue of `v` modulo the subspace, expressed as the non-pivot
    /// coordinates after reduction: zero iff `v` is a member.
    pub fn reduce(&self, v: &[Elem]) -> Vec<Elem> {
        let f = self.field();
        let mut r = v.to_vec();
        for (k, &p) in self.pivots.iter().enumerate() {
            if f.is_zero(&r[p]) {
                continue;
            }
            let c = r[p].clone();
            for (x, b) in r.iter_mut().zip(self.basis.row(k)) {
                if !f.is_zero(b) {
                    *x = f.sub(x, &f.mul(&c, b));
                }
            }
        }
        r
    }

    /// Linear map `v ↦ reduce(v)` restricted to the non-pivot coordinates, as
    /// a matrix; its kernel is the subspace.
    pub fn complement_projection(&self) -> Matrix {
        let f = self.field();
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..self.ambient).filter(|&c| !is_pivot[c]).collect();
        let mut m = Matrix::zeros(f, free.len(), self.ambient);
        for j in 0..self.ambient {
            let mut e = vec![f.zero(); self.ambient];
            e[j] = f.one();
            let r = self.reduce(&e);
            for (i, &c) in free.iter().enumerate() {
                m.set(i, j, r[c].clone());
            }
        }
        m
    }

    pub fn image_under(&self, m: &Matrix) -> Subspace {
        assert_eq!(m.cols(), self.ambient);
        let vecs = self.vectors().iter().map(|v| m.apply(v)).collect();
        Subspace::from_vectors(self.field(), m.rows(), vecs)
    }

    pub fn is_invariant_under(&self, m: &Matrix) -> bool {
        self.vectors().iter().all(|v| self.contains(&m.apply(v)))
    }

    pub fn scalar_extend(&self, e: &Embedding) -> Result<Subspace> {
        let b = self.basis.map_entries(e)?;
        Ok(Subspace { ambient: self.ambient, basis: b, pivots: self.pivots.clone() })
    }

    /// Tensor product `self ⊗ other` inside the Kronecker ambient space.
    pub fn tensor(&self, other: &Subspace) -> Subspace {
        let f = self.field();
        let mut vecs = Vec::with_capacity(self.dim() * other.dim());
        for a in self.vectors() {
            for b in other.vectors() {
                let mut v = Vec::with_capacity(self.ambient * other.ambient);
                for x in &a {
                    for y in &b {
                        v.push(f.mul(x, y));
                    }
                }
                vecs.push(v);
            }
        }
        Subspace::from_vectors(f, self.ambient * other.ambient, vecs)
    }
}

/// Incrementally built semi-echelon basis: every stored row has a unit
/// pivot at which all later rows vanish.
#[derive(Clone, Debug)]
pub struct Echelon {
    field: Field,
    n: usize,
    rows: Vec<Vec<Elem>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(field: &Field, n: usize) -> Echelon {
        Echelon { field: field.clone(), n, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn reduce(&self, v: &[Elem]) -> Vec<Elem> {
        let f = &self.field;
        let mut r = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if f.is_zero(&r[p]) {
                continue;
            }
            let c = r[p].clone();
            for (x, b) in r.iter_mut().zip(row).skip(p) {
                if !f.is_zero(b) {
                    *x = f.sub(x, &f.mul(&c, b));
                }
            }
        }
        r
    }

    pub fn contains(&self, v: &[Elem]) -> bool {
        self.reduce(v).iter().all(|x| self.field.is_zero(x))
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, v: &[Elem]) -> bool {
        let mut r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !self.field.is_zero(x)) else {
            return false;
        };
        let inv = self.field.inv(&r[p]);
        for x in r.iter_mut().skip(p) {
            *x = self.field.mul(x, &inv);
        }
        self.rows.push(r);
        self.pivots.push(p);
        true
    }

    pub fn rows(&self) -> &[Vec<Elem>] {
        &self.rows
    }

    pub fn to_subspace(&self) -> Subspace {
        Subspace::from_vectors(&self.field, self.n, self.rows.clone())
    }
}
