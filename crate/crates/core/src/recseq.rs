//! Linearly recursive sequences: the finite dual of `k[x]`, with the
//! Hadamard product (x grouplike) and the Hurwitz product (x primitive).

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{poly, Elem, Field, FieldDescriptor};
use crate::linalg::Matrix;

/// A sequence given by its minimal polynomial (monic, low degree first) and
/// its first `deg` terms. Equality is equality of these two.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinRecSeq {
    field: Field,
    minpoly: Vec<Elem>,
    initial: Vec<Elem>,
}

/// Connection polynomial and linear complexity of `s`.
fn berlekamp_massey(f: &Field, s: &[Elem]) -> (Vec<Elem>, usize) {
    let mut c = vec![f.one()];
    let mut b = vec![f.one()];
    let mut l = 0usize;
    let mut m = 1usize;
    let mut bd = f.one();
    for n in 0..s.len() {
        let mut d = s[n].clone();
        for i in 1..=l.min(c.len() - 1) {
            d = f.add(&d, &f.mul(&c[i], &s[n - i]));
        }
        if f.is_zero(&d) {
            m += 1;
            continue;
        }
        let coef = f.div(&d, &bd);
        let mut shifted = vec![f.zero(); m];
        shifted.extend(b.iter().map(|x| f.mul(x, &coef)));
        let t = c.clone();
        c = poly::sub(f, &c, &shifted);
        if c.is_empty() {
            c = vec![f.zero()];
        }
        if 2 * l <= n {
            l = n + 1 - l;
            b = t;
            bd = d;
            m = 1;
        } else {
            m += 1;
        }
    }
    (c, l)
}

fn check_monic(f: &Field, p: &[Elem]) -> Result<()> {
    match p.last() {
        Some(lead) if f.is_one(lead) => Ok(()),
        _ => Err(Error::Invalid("recurrence polynomial must be monic".into())),
    }
}

/// Terms `0..n` of the sequence with annihilator `p` and initial terms.
fn run(f: &Field, p: &[Elem], initial: &[Elem], n: usize) -> Vec<Elem> {
    let r = p.len() - 1;
    let mut out: Vec<Elem> = initial[..r.min(n)].to_vec();
    if r == 0 {
        return vec![f.zero(); n];
    }
    while out.len() < n {
        let k = out.len() - r;
        let mut v = f.zero();
        for i in 0..r {
            v = f.sub(&v, &f.mul(&p[i], &out[k + i]));
        }
        out.push(v);
    }
    out
}

/// `C(n, k)` in the field; Lucas' theorem in positive characteristic.
pub fn binomial(f: &Field, n: u64, k: u64) -> Elem {
    if k > n {
        return f.zero();
    }
    let p = f.characteristic() as u64;
    if p == 0 {
        let mut acc = BigInt::from(1);
        for j in 0..k {
            acc = acc * BigInt::from(n - j) / BigInt::from(j + 1);
        }
        return f.from_bigint(&acc);
    }
    let (mut n, mut k) = (n, k);
    let mut acc = f.one();
    while n > 0 || k > 0 {
        let (ni, ki) = (n % p, k % p);
        if ki > ni {
            return f.zero();
        }
        for j in 1..=ki {
            acc = f.mul(&acc, &f.from_int((ni - ki + j) as i64));
            acc = f.div(&acc, &f.from_int(j as i64));
        }
        n /= p;
        k /= p;
    }
    acc
}

impl LinRecSeq {
    /// The sequence with annihilator `p` (monic, degree `r`) and the given
    /// first `r` terms; the minimal polynomial is found by Berlekamp–Massey
    /// on `2r` terms and checked to divide `p`.
    pub fn new(field: &Field, initial: Vec<Elem>, annihilator: Vec<Elem>) -> Result<LinRecSeq> {
        let f = field;
        check_monic(f, &annihilator)?;
        let r = annihilator.len() - 1;
        if initial.len() < r {
            return Err(Error::DimensionMismatch(format!("{} initial terms for a recurrence of order {r}", initial.len())));
        }
        let terms = run(f, &annihilator, &initial, 2 * r);
        let (c, l) = berlekamp_massey(f, &terms);
        let minpoly: Vec<Elem> = (0..=l).map(|i| c.get(l - i).cloned().unwrap_or_else(|| f.zero())).collect();
        if run(f, &minpoly, &terms, 2 * r) != terms {
            return Err(Error::Violation("minimal polynomial does not reproduce the sequence".into()));
        }
        let (_, rem) = poly::divrem(f, &annihilator, &minpoly);
        if !rem.is_empty() {
            return Err(Error::Violation("minimal polynomial does not divide the annihilator".into()));
        }
        let initial = terms[..l].to_vec();
        Ok(LinRecSeq { field: f.clone(), minpoly, initial })
    }

    pub fn constant(field: &Field, c: &Elem) -> LinRecSeq {
        LinRecSeq::new(field, vec![c.clone()], vec![field.neg(&field.one()), field.one()]).expect("order one")
    }

    pub fn geometric(field: &Field, a: &Elem) -> LinRecSeq {
        LinRecSeq::new(field, vec![field.one()], vec![field.neg(a), field.one()]).expect("order one")
    }

    /// `(1, 0, 0, …)`, annihilated by `x`.
    pub fn delta(field: &Field) -> LinRecSeq {
        LinRecSeq::new(field, vec![field.one()], vec![field.zero(), field.one()]).expect("order one")
    }

    /// `(0, 1, 1, 2, 3, …)`.
    pub fn fibonacci(field: &Field) -> LinRecSeq {
        let m1 = field.neg(&field.one());
        LinRecSeq::new(field, vec![field.zero(), field.one()], vec![m1.clone(), m1, field.one()]).expect("order two")
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn minimal_polynomial(&self) -> &[Elem] {
        &self.minpoly
    }

    pub fn order(&self) -> usize {
        self.minpoly.len() - 1
    }

    pub fn initial(&self) -> &[Elem] {
        &self.initial
    }

    pub fn terms(&self, n: usize) -> Vec<Elem> {
        run(&self.field, &self.minpoly, &self.initial, n)
    }

    pub fn term(&self, n: usize) -> Elem {
        self.terms(n + 1).pop().expect("at least one term")
    }

    /// `n ↦ f_{n+1}`.
    pub fn shift(&self) -> LinRecSeq {
        let r = self.order();
        LinRecSeq::new(&self.field, self.terms(r + 1)[1..].to_vec(), self.minpoly.clone()).expect("same recurrence")
    }

    fn companion(&self) -> Matrix {
        Matrix::companion(&self.field, &self.minpoly)
    }

    fn same_field(&self, g: &LinRecSeq) -> Result<()> {
        self.field.check_same(&g.field)
    }

    /// Termwise product; the annihilator is the characteristic polynomial of
    /// the Kronecker product of the companion matrices.
    pub fn hadamard_product(&self, g: &LinRecSeq) -> Result<LinRecSeq> {
        self.same_field(g)?;
        let f = &self.field;
        if self.order() == 0 || g.order() == 0 {
            return LinRecSeq::new(f, vec![], vec![f.one()]);
        }
        let ann = self.companion().kronecker(&g.companion()).charpoly();
        let n = ann.len() - 1;
        let terms = self.terms(n).iter().zip(g.terms(n)).map(|(a, b)| f.mul(a, &b)).collect();
        LinRecSeq::new(f, terms, ann)
    }

    /// Binomial convolution `Σ C(n,k) f_k g_{n-k}`; the annihilator comes
    /// from the Kronecker sum of the companion matrices.
    pub fn hurwitz_product(&self, g: &LinRecSeq) -> Result<LinRecSeq> {
        self.same_field(g)?;
        let f = &self.field;
        if self.order() == 0 || g.order() == 0 {
            return LinRecSeq::new(f, vec![], vec![f.one()]);
        }
        let a = self.companion();
        let b = g.companion();
        let sum = a
            .kronecker(&Matrix::identity(f, b.rows()))
            .add(&Matrix::identity(f, a.rows()).kronecker(&b));
        let ann = sum.charpoly();
        let n = ann.len() - 1;
        let (x, y) = (self.terms(n), g.terms(n));
        let terms = (0..n)
            .map(|m| {
                (0..=m).fold(f.zero(), |acc, k| {
                    let c = binomial(f, m as u64, k as u64);
                    f.add(&acc, &f.mul(&c, &f.mul(&x[k], &y[m - k])))
                })
            })
            .collect();
        LinRecSeq::new(f, terms, ann)
    }

    /// True iff the minimal polynomial has a nonzero constant term.
    pub fn is_bilaterally_extendable(&self) -> bool {
        !self.field.is_zero(&self.minpoly[0])
    }

    /// Solves the recurrence at `n = -1` for `f_{-1}`; `None` when the
    /// linear equation has no solution.
    pub fn predecessor(&self) -> Option<Elem> {
        let f = &self.field;
        let r = self.order();
        if r == 0 {
            return Some(f.zero());
        }
        let t = self.terms(r);
        let mut rest = f.zero();
        for i in 1..=r {
            rest = f.add(&rest, &f.mul(&self.minpoly[i], &t[i - 1]));
        }
        let m = Matrix::new(f, 1, 1, vec![self.minpoly[0].clone()]);
        m.solve(&[f.neg(&rest)]).map(|v| v[0].clone())
    }

    /// `n ↦ f_{-n}` on the bilateral extension.
    pub fn antipode(&self) -> Result<LinRecSeq> {
        if !self.is_bilaterally_extendable() {
            return Err(Error::Precondition("minimal polynomial has zero constant term; no bilateral extension".into()));
        }
        let f = &self.field;
        let r = self.order();
        let p = &self.minpoly;
        let inv0 = f.inv(&p[0]);
        // window[j] = f_{n+j}, walking n downwards
        let mut window = self.terms(r);
        let mut back = Vec::with_capacity(r);
        if r > 0 {
            back.push(window[0].clone());
        }
        for _ in 1..r {
            let mut s = f.zero();
            for i in 1..=r {
                s = f.add(&s, &f.mul(&p[i], &window[i - 1]));
            }
            let prev = f.neg(&f.mul(&s, &inv0));
            window.insert(0, prev.clone());
            window.truncate(r);
            back.push(prev);
        }
        let rev: Vec<Elem> = (0..=r).map(|i| f.mul(&p[r - i], &inv0)).collect();
        LinRecSeq::new(f, back, rev)
    }

    /// Pairs `(g_i, h_i)` with `f_{m+n} = Σ_i (g_i)_m (h_i)_n`, read off from
    /// `f_{m+n} = e_0ᵀ Cᵐ · Cⁿ s_0` for the companion matrix `C`: one pair per
    /// state coordinate.
    pub fn comultiplication_components(&self) -> Result<Vec<(LinRecSeq, LinRecSeq)>> {
        let f = &self.field;
        let r = self.order();
        if r == 0 {
            return Ok(vec![]);
        }
        let c = self.companion();
        let mut rows = Vec::with_capacity(r);
        let mut row = vec![f.zero(); r];
        row[0] = f.one();
        for _ in 0..r {
            rows.push(row.clone());
            row = c.apply_left(&row);
        }
        let ft = self.terms(r + r);
        let mut pairs = Vec::with_capacity(r);
        for i in 0..r {
            let g = LinRecSeq::new(f, rows.iter().map(|v| v[i].clone()).collect(), self.minpoly.clone())?;
            let h = LinRecSeq::new(f, ft[i..i + r].to_vec(), self.minpoly.clone())?;
            pairs.push((g, h));
        }
        let n = 2 * r;
        let all = self.terms(2 * n + 1);
        let gs: Vec<Vec<Elem>> = pairs.iter().map(|(g, _)| g.terms(n + 1)).collect();
        let hs: Vec<Vec<Elem>> = pairs.iter().map(|(_, h)| h.terms(n + 1)).collect();
        for m in 0..=n {
            for k in 0..=n {
                let s = (0..r).fold(f.zero(), |acc, i| f.add(&acc, &f.mul(&gs[i][m], &hs[i][k])));
                if s != all[m + k] {
                    return Err(Error::Violation(format!("comultiplication fails at ({m},{k})")));
                }
            }
        }
        Ok(pairs)
    }

    pub fn to_json(&self) -> LinRecSeqJson {
        LinRecSeqJson {
            field: self.field.descriptor().clone(),
            minpoly: self.minpoly.iter().map(|c| self.field.format(c)).collect(),
            initial: self.initial.iter().map(|c| self.field.format(c)).collect(),
        }
    }

    pub fn from_json(j: &LinRecSeqJson) -> Result<LinRecSeq> {
        let f = Field::new(&j.field)?;
        let p = j.minpoly.iter().map(|s| f.parse(s)).collect::<Result<Vec<_>>>()?;
        let init = j.initial.iter().map(|s| f.parse(s)).collect::<Result<Vec<_>>>()?;
        LinRecSeq::new(&f, init, p)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinRecSeqJson {
    pub field: FieldDescriptor,
    pub minpoly: Vec<String>,
    pub initial: Vec<String>,
}

/// Parses a polynomial such as `x^2-x-1` or `2*x^3 + x` (low degree first
/// on output). Coefficients use the field's element syntax.
pub fn parse_poly(field: &Field, s: &str, var: &str) -> Result<Vec<Elem>> {
    let f = field;
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut terms = Vec::new();
    let mut cur = String::new();
    let mut depth = 0i32;
    for ch in compact.chars() {
        match ch {
            '(' | '[' | '{' => depth += 1,
            ')' | ']' | '}' => depth -= 1,
            _ => {}
        }
        if (ch == '+' || ch == '-') && depth == 0 && !cur.is_empty() && !cur.ends_with('^') && !cur.ends_with('*') {
            terms.push(std::mem::take(&mut cur));
        }
        cur.push(ch);
    }
    terms.push(cur);
    let mut out: Vec<Elem> = Vec::new();
    for t in terms {
        let (neg, body) = match t.strip_prefix('-') {
            Some(b) => (true, b.to_string()),
            None => (false, t.strip_prefix('+').unwrap_or(&t).to_string()),
        };
        let (coef, exp) = match body.find(var) {
            None => (f.parse(strip_parens(&body))?, 0usize),
            Some(pos) => {
                let c = body[..pos].trim_end_matches('*');
                let c = if c.is_empty() { f.one() } else { f.parse(strip_parens(c))? };
                let rest = &body[pos + var.len()..];
                let e = match rest.strip_prefix('^') {
                    Some(e) => e.parse::<usize>().map_err(|_| Error::Parse(format!("bad exponent in {t}")))?,
                    None if rest.is_empty() => 1,
                    None => return Err(Error::Parse(format!("cannot parse term {t}"))),
                };
                (c, e)
            }
        };
        let coef = if neg { f.neg(&coef) } else { coef };
        if out.len() <= exp {
            out.resize(exp + 1, f.zero());
        }
        out[exp] = f.add(&out[exp], &coef);
    }
    poly::trim(f, &mut out);
    Ok(out)
}

fn strip_parens(s: &str) -> &str {
    s.strip_prefix('(').and_then(|t| t.strip_suffix(')')).unwrap_or(s)
}
