//! The span of matrix coefficient functions of a finite family of
//! representations, computed as the image `B` of the free algebra in the
//! direct sum of the endomorphism algebras. `B*` is the carrier of the
//! truncated cofree coalgebra; the coefficient functions of the family span
//! exactly `B*`.

use std::collections::VecDeque;
use std::sync::Arc;

use super::{PresentedAlgebra, Representation, Word};
use crate::coalg::Coalgebra;
use crate::error::{Error, Result};
use crate::field::finite::FiniteField;
use crate::field::{Elem, Field};

trait Scalars: Send + Sync {
    type E: Clone + PartialEq + Send + Sync;
    fn zero(&self) -> Self::E;
    fn one(&self) -> Self::E;
    fn is_zero(&self, a: &Self::E) -> bool;
    fn add(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn sub(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn inv(&self, a: &Self::E) -> Self::E;
    fn lift(&self, e: &Elem) -> Self::E;
    fn lower(&self, a: &Self::E) -> Elem;
}

struct Fin(FiniteField);

impl Scalars for Fin {
    type E = u32;
    fn zero(&self) -> u32 {
        0
    }
    fn one(&self) -> u32 {
        1
    }
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    fn add(&self, a: &u32, b: &u32) -> u32 {
        self.0.add(*a, *b)
    }
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        self.0.sub(*a, *b)
    }
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        self.0.mul(*a, *b)
    }
    fn inv(&self, a: &u32) -> u32 {
        self.0.inv(*a).expect("nonzero")
    }
    fn lift(&self, e: &Elem) -> u32 {
        e.code()
    }
    fn lower(&self, a: &u32) -> Elem {
        Elem::Fin(*a)
    }
}

struct Gen(Field);

impl Scalars for Gen {
    type E = Elem;
    fn zero(&self) -> Elem {
        self.0.zero()
    }
    fn one(&self) -> Elem {
        self.0.one()
    }
    fn is_zero(&self, a: &Elem) -> bool {
        self.0.is_zero(a)
    }
    fn add(&self, a: &Elem, b: &Elem) -> Elem {
        self.0.add(a, b)
    }
    fn sub(&self, a: &Elem, b: &Elem) -> Elem {
        self.0.sub(a, b)
    }
    fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        self.0.mul(a, b)
    }
    fn inv(&self, a: &Elem) -> Elem {
        self.0.inv(a)
    }
    fn lift(&self, e: &Elem) -> Elem {
        e.clone()
    }
    fn lower(&self, a: &Elem) -> Elem {
        a.clone()
    }
}

/// Elements of `⊕ End(V_ρ)` are stored as the concatenation of the blocks.
struct Engine<S: Scalars> {
    s: S,
    /// (offset, dimension) of each block.
    blocks: Vec<(usize, usize)>,
    ambient: usize,
    /// Image of every symbol.
    symbols: Vec<Vec<S::E>>,
    basis: Vec<Vec<S::E>>,
    rows: Vec<Vec<S::E>>,
    pivots: Vec<usize>,
    /// `rows[t] = Σ combos[t][i] basis[i]`.
    combos: Vec<Vec<S::E>>,
}

impl<S: Scalars> Engine<S> {
    fn new(s: S, reps: &[Representation]) -> Self {
        let mut blocks = Vec::new();
        let mut off = 0;
        for r in reps {
            blocks.push((off, r.dim()));
            off += r.dim() * r.dim();
        }
        let nsym = reps.first().map_or(0, |r| r.matrices().len());
        let symbols = (0..nsym)
            .map(|k| {
                reps.iter()
                    .flat_map(|r| r.matrix(k).data().iter().map(|e| s.lift(e)).collect::<Vec<_>>())
                    .collect()
            })
            .collect();
        Engine { s, blocks, ambient: off, symbols, basis: vec![], rows: vec![], pivots: vec![], combos: vec![] }
    }

    fn identity(&self) -> Vec<S::E> {
        let mut v = vec![self.s.zero(); self.ambient];
        for &(o, d) in &self.blocks {
            for i in 0..d {
                v[o + i * d + i] = self.s.one();
            }
        }
        v
    }

    fn mul(&self, a: &[S::E], b: &[S::E]) -> Vec<S::E> {
        let s = &self.s;
        let mut out = vec![s.zero(); self.ambient];
        for &(o, d) in &self.blocks {
            for i in 0..d {
                for k in 0..d {
                    let x = &a[o + i * d + k];
                    if s.is_zero(x) {
                        continue;
                    }
                    for j in 0..d {
                        let y = &b[o + k * d + j];
                        if !s.is_zero(y) {
                            let t = s.mul(x, y);
                            out[o + i * d + j] = s.add(&out[o + i * d + j], &t);
                        }
                    }
                }
            }
        }
        out
    }

    /// Reduces `v` against the echelon rows. Returns the remainder and the
    /// coefficients `c` with `v = remainder + Σ c_i basis[i]`.
    fn reduce(&self, v: &[S::E]) -> (Vec<S::E>, Vec<S::E>) {
        let s = &self.s;
        let mut r = v.to_vec();
        let mut coef = vec![s.zero(); self.basis.len()];
        for (t, row) in self.rows.iter().enumerate() {
            let p = self.pivots[t];
            if s.is_zero(&r[p]) {
                continue;
            }
            let c = r[p].clone();
            for j in p..self.ambient {
                if !s.is_zero(&row[j]) {
                    r[j] = s.sub(&r[j], &s.mul(&c, &row[j]));
                }
            }
            for (i, x) in self.combos[t].iter().enumerate() {
                if !s.is_zero(x) {
                    coef[i] = s.add(&coef[i], &s.mul(&c, x));
                }
            }
        }
        (r, coef)
    }

    fn insert(&mut self, v: Vec<S::E>) -> bool {
        let (mut r, coef) = self.reduce(&v);
        let Some(p) = r.iter().position(|x| !self.s.is_zero(x)) else {
            return false;
        };
        let s = &self.s;
        let inv = s.inv(&r[p]);
        for x in r.iter_mut().skip(p) {
            *x = s.mul(x, &inv);
        }
        // r = v - Σ coef_i b_i, so the normalized row is inv (b_new - Σ coef_i b_i)
        let mut combo: Vec<S::E> = coef.iter().map(|c| s.sub(&s.zero(), &s.mul(c, &inv))).collect();
        combo.push(inv);
        // keep rows sorted by pivot so reduction sweeps left to right
        let at = self.pivots.partition_point(|&q| q < p);
        self.rows.insert(at, r);
        self.pivots.insert(at, p);
        self.combos.insert(at, combo);
        self.basis.push(v);
        true
    }

    /// Breadth-first over words; returns the words of the basis and the
    /// longest of them.
    fn build(&mut self, gens: &[usize]) -> Vec<Word> {
        let mut words = Vec::new();
        let mut queue = VecDeque::new();
        let id = self.identity();
        if self.insert(id.clone()) {
            words.push(vec![]);
            queue.push_back((vec![], id));
        }
        while let Some((w, m)) = queue.pop_front() {
            for &g in gens {
                let next = self.mul(&m, &self.symbols[g]);
                if self.insert(next.clone()) {
                    let mut w2: Word = w.clone();
                    w2.push(g);
                    words.push(w2.clone());
                    queue.push_back((w2, next));
                }
            }
        }
        words
    }

    fn coordinates(&self, v: &[S::E]) -> Option<Vec<Elem>> {
        let (r, coef) = self.reduce(v);
        if r.iter().any(|x| !self.s.is_zero(x)) {
            return None;
        }
        Some(coef.iter().map(|c| self.s.lower(c)).collect())
    }

    fn word(&self, w: &[usize]) -> Vec<S::E> {
        let mut acc = self.identity();
        for &g in w {
            acc = self.mul(&acc, &self.symbols[g]);
        }
        acc
    }
}

trait SpanOps: Send + Sync {
    fn word_coordinates(&self, w: &[usize]) -> Vec<Elem>;
    fn product_coordinates(&self, i: usize, j: usize) -> Vec<Elem>;
    fn basis_entries(&self, i: usize) -> Vec<Elem>;
}

impl<S: Scalars> SpanOps for Engine<S> {
    fn word_coordinates(&self, w: &[usize]) -> Vec<Elem> {
        self.coordinates(&self.word(w)).expect("words lie in the span")
    }
    fn product_coordinates(&self, i: usize, j: usize) -> Vec<Elem> {
        self.coordinates(&self.mul(&self.basis[i], &self.basis[j])).expect("the span is closed")
    }
    fn basis_entries(&self, i: usize) -> Vec<Elem> {
        self.basis[i].iter().map(|x| self.s.lower(x)).collect()
    }
}

/// Basis of the algebra `B` generated by the image of a family of
/// representations. The dual basis of `B*` is indexed by the same words.
#[derive(Clone)]
pub struct CoefficientSpan {
    field: Field,
    words: Vec<Word>,
    labels: Vec<String>,
    length: usize,
    ops: Arc<dyn SpanOps>,
}

impl std::fmt::Debug for CoefficientSpan {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CoefficientSpan").field("dim", &self.words.len()).field("length", &self.length).finish()
    }
}

/// The span over all symbols of the presentation.
pub fn coefficient_span(p: &PresentedAlgebra, reps: &[Representation]) -> Result<CoefficientSpan> {
    let all: Vec<usize> = (0..p.num_symbols()).collect();
    coefficient_span_over(p, reps, &all)
}

/// The span of the words in the given symbols only.
pub fn coefficient_span_over(p: &PresentedAlgebra, reps: &[Representation], symbols: &[usize]) -> Result<CoefficientSpan> {
    let field = p.field();
    for r in reps {
        field.check_same(r.field())?;
        if r.matrices().len() != p.num_symbols() {
            return Err(Error::DimensionMismatch("representation does not match the presentation".into()));
        }
    }
    let (words, ops): (Vec<Word>, Arc<dyn SpanOps>) = match field.as_finite() {
        Some(ff) => {
            let mut e = Engine::new(Fin(ff.clone()), reps);
            let w = e.build(symbols);
            (w, Arc::new(e))
        }
        None => {
            let mut e = Engine::new(Gen(field.clone()), reps);
            let w = e.build(symbols);
            (w, Arc::new(e))
        }
    };
    let length = words.iter().map(Vec::len).max().unwrap_or(0);
    let labels = words.iter().map(|w| p.format_word(w)).collect();
    Ok(CoefficientSpan { field: field.clone(), words, labels, length, ops })
}

impl CoefficientSpan {
    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.words.len()
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Length of the longest basis word: words of this length already span.
    pub fn stabilization_length(&self) -> usize {
        self.length
    }

    /// Coordinates of the image of a word in the word basis.
    pub fn word_coordinates(&self, w: &[usize]) -> Vec<Elem> {
        self.ops.word_coordinates(w)
    }

    /// The stacked matrix entries of basis element `i`.
    pub fn basis_entries(&self, i: usize) -> Vec<Elem> {
        self.ops.basis_entries(i)
    }

    /// `b_i b_j` in the basis.
    pub fn product(&self, i: usize, j: usize) -> Vec<Elem> {
        self.ops.product_coordinates(i, j)
    }

    /// The carrier `B*` with `Δ(b_k*) = Σ μ^k_{ij} b_i* ⊗ b_j*` where
    /// `b_i b_j = Σ μ^k_{ij} b_k`, and `ε(b_k*) = b_k*(1)`.
    pub fn carrier(&self) -> Result<Coalgebra> {
        let n = self.dim();
        let f = &self.field;
        let mut entries = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for (k, c) in self.product(i, j).into_iter().enumerate() {
                    if !f.is_zero(&c) {
                        entries.push((k, i, j, c));
                    }
                }
            }
        }
        let counit = (0..n).map(|k| if k == 0 { f.one() } else { f.zero() }).collect();
        let labels = self.labels.iter().map(|l| format!("<{l}>")).collect();
        Coalgebra::new(f, n, entries, counit, Some(labels))
    }
}
