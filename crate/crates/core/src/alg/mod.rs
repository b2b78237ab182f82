//! Finitely presented algebras, their finite-dimensional representations, and
//! coefficient spans.

mod enumerate;
mod rep;
mod span;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::coalg::FinAlgebra;
use crate::error::{Error, Result};
use crate::field::{Elem, Field, FieldDescriptor};
use crate::linalg::{Echelon, Matrix};

pub use enumerate::{conjugation_orbits, enumerate_representations, EnumConfig, DEFAULT_BUDGET};
pub use rep::{are_isomorphic, is_simple, NamedMatrix, Representation, RepresentationJson};
pub use span::{coefficient_span, coefficient_span_over, CoefficientSpan};

/// A word in the symbols of a presentation (generators, then formal inverses).
pub type Word = Vec<usize>;

/// A noncommutative polynomial `Σ c_w w`, implicitly set to zero.
pub type Relation = Vec<(Elem, Word)>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Generator {
    pub name: String,
    pub invertible: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Symbol {
    pub name: String,
    pub generator: usize,
    pub inverse: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentedAlgebra {
    field: Field,
    generators: Vec<Generator>,
    symbols: Vec<Symbol>,
    /// Relations as given; the inverse relations are added on demand.
    relations: Vec<Relation>,
}

fn inverse_name(name: &str) -> String {
    format!("{name}^-1")
}

/// Combines like words and drops zero coefficients.
fn normalize(field: &Field, rel: Relation) -> Relation {
    let mut acc: BTreeMap<Word, Elem> = BTreeMap::new();
    for (c, w) in rel {
        let slot = acc.entry(w).or_insert_with(|| field.zero());
        *slot = field.add(slot, &c);
    }
    acc.into_iter().filter(|(_, c)| !field.is_zero(c)).map(|(w, c)| (c, w)).collect()
}

impl PresentedAlgebra {
    pub fn new(field: &Field, generators: Vec<Generator>, relations: Vec<Relation>) -> Result<PresentedAlgebra> {
        let mut symbols: Vec<Symbol> = generators
            .iter()
            .enumerate()
            .map(|(i, g)| Symbol { name: g.name.clone(), generator: i, inverse: false })
            .collect();
        for (i, g) in generators.iter().enumerate() {
            if g.invertible {
                symbols.push(Symbol { name: inverse_name(&g.name), generator: i, inverse: true });
            }
        }
        let mut seen = std::collections::BTreeSet::new();
        for s in &symbols {
            if !seen.insert(s.name.clone()) {
                return Err(Error::Invalid(format!("duplicate symbol {}", s.name)));
            }
        }
        let n = symbols.len();
        let mut rels = Vec::with_capacity(relations.len());
        for r in relations {
            for (c, w) in &r {
                if !field.contains(c) {
                    return Err(Error::Invalid("relation coefficient outside the field".into()));
                }
                if let Some(bad) = w.iter().find(|&&s| s >= n) {
                    return Err(Error::Invalid(format!("relation uses undeclared symbol {bad}")));
                }
            }
            let r = normalize(field, r);
            if !r.is_empty() {
                rels.push(r);
            }
        }
        Ok(PresentedAlgebra { field: field.clone(), generators, symbols, relations: rels })
    }

    /// The free algebra on `m` generators `x1, ..., xm`.
    pub fn free_algebra(field: &Field, m: usize) -> PresentedAlgebra {
        let gens = (1..=m).map(|i| Generator { name: format!("x{i}"), invertible: false }).collect();
        PresentedAlgebra::new(field, gens, vec![]).expect("free algebra")
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn num_symbols(&self) -> usize {
        self.symbols.len()
    }

    /// Symbol index of a generator's formal inverse.
    pub fn inverse_symbol(&self, generator: usize) -> Option<usize> {
        self.symbols.iter().position(|s| s.inverse && s.generator == generator)
    }

    pub fn symbol_index(&self, name: &str) -> Option<usize> {
        self.symbols.iter().position(|s| s.name == name)
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    /// The given relations followed by `s s⁻¹ − 1` and `s⁻¹ s − 1` for every
    /// invertible generator.
    pub fn all_relations(&self) -> Vec<Relation> {
        let f = &self.field;
        let mut out = self.relations.clone();
        for (g, gen) in self.generators.iter().enumerate() {
            if gen.invertible {
                let inv = self.inverse_symbol(g).unwrap();
                out.push(normalize(f, vec![(f.one(), vec![g, inv]), (f.neg(&f.one()), vec![])]));
                out.push(normalize(f, vec![(f.one(), vec![inv, g]), (f.neg(&f.one()), vec![])]));
            }
        }
        out
    }

    pub fn format_word(&self, w: &[usize]) -> String {
        if w.is_empty() {
            return "1".into();
        }
        w.iter().map(|&s| self.symbols[s].name.as_str()).collect::<Vec<_>>().join("*")
    }

    pub fn format_relation(&self, r: &Relation) -> String {
        let parts: Vec<String> = r
            .iter()
            .map(|(c, w)| format!("({})*{}", self.field.format(c), self.format_word(w)))
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }

    pub fn to_json(&self) -> PresentedAlgebraJson {
        PresentedAlgebraJson {
            field: self.field.descriptor().clone(),
            generators: self.generators.clone(),
            relations: self
                .relations
                .iter()
                .map(|r| {
                    r.iter()
                        .map(|(c, w)| {
                            (self.field.format(c), w.iter().map(|&s| self.symbols[s].name.clone()).collect())
                        })
                        .collect()
                })
                .collect(),
        }
    }

    pub fn from_json(j: &PresentedAlgebraJson) -> Result<PresentedAlgebra> {
        let field = Field::new(&j.field)?;
        let probe = PresentedAlgebra::new(&field, j.generators.clone(), vec![])?;
        let mut rels = Vec::with_capacity(j.relations.len());
        for r in &j.relations {
            let mut rel = Vec::with_capacity(r.len());
            for (c, w) in r {
                let word = w
                    .iter()
                    .map(|s| probe.symbol_index(s).ok_or_else(|| Error::Parse(format!("undeclared symbol {s:?}"))))
                    .collect::<Result<Word>>()?;
                rel.push((field.parse(c)?, word));
            }
            rels.push(rel);
        }
        PresentedAlgebra::new(&field, j.generators.clone(), rels)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentedAlgebraJson {
    pub field: FieldDescriptor,
    pub generators: Vec<Generator>,
    /// Each relation is a list of `(coefficient, word)` terms.
    pub relations: Vec<Vec<(String, Vec<String>)>>,
}

/// How one factor of a free product sits inside the presentation.
#[derive(Clone, Debug)]
pub struct FactorData {
    pub algebra: FinAlgebra,
    /// Symbols of the non-unit completed basis vectors, in order.
    pub symbols: Vec<usize>,
    /// Column `s` holds the completed basis vector `s` in original
    /// coordinates; column 0 is the unit.
    pub completed: Matrix,
    /// Inverse of `completed`: original basis vectors in completed
    /// coordinates.
    pub to_completed: Matrix,
}

/// A presentation of the free product of finite-dimensional algebras,
/// together with the data relating generators to each factor's basis.
#[derive(Clone, Debug)]
pub struct FreeProduct {
    pub presentation: PresentedAlgebra,
    pub factors: Vec<FactorData>,
}

fn factor_prefix(i: usize) -> String {
    // a, b, ..., z, aa, ab, ...
    let mut i = i;
    let mut s = Vec::new();
    loop {
        s.push((b'a' + (i % 26) as u8) as char);
        if i < 26 {
            break;
        }
        i = i / 26 - 1;
    }
    s.iter().rev().collect()
}

impl FreeProduct {
    /// Each factor's basis is completed so that the unit comes first; the
    /// remaining completed basis vectors become generators and every product
    /// of two of them is rewritten in the completed basis.
    pub fn new(factors: &[FinAlgebra]) -> Result<FreeProduct> {
        let field = match factors.first() {
            Some(a) => a.field().clone(),
            None => return Err(Error::Precondition("free product of no factors".into())),
        };
        let mut gens = Vec::new();
        let mut rels: Vec<Relation> = Vec::new();
        let mut data = Vec::new();
        for (fi, a) in factors.iter().enumerate() {
            field.check_same(a.field())?;
            a.validate()?;
            let n = a.dim();
            let mut ech = Echelon::new(&field, n);
            let mut cols = Vec::with_capacity(n);
            if !ech.insert(a.unit()) {
                return Err(Error::Invalid(format!("factor {fi} has zero unit")));
            }
            cols.push(a.unit().to_vec());
            for j in 0..n {
                let e = a.basis_vector(j);
                if ech.insert(&e) {
                    cols.push(e);
                }
            }
            let completed = Matrix::from_columns(&field, n, &cols);
            let to_completed = completed.inverse().expect("completed basis");
            let prefix = factor_prefix(fi);
            let first = gens.len();
            for s in 1..n {
                gens.push(Generator { name: format!("{prefix}{s}"), invertible: false });
            }
            let sym = |s: usize| first + s - 1;
            for s in 1..n {
                for t in 1..n {
                    let prod = a.mul(&cols[s], &cols[t]);
                    let coords = to_completed.apply(&prod);
                    let mut rel: Relation = vec![(field.one(), vec![sym(s), sym(t)])];
                    for (k, c) in coords.iter().enumerate() {
                        if field.is_zero(c) {
                            continue;
                        }
                        let w = if k == 0 { vec![] } else { vec![sym(k)] };
                        rel.push((field.neg(c), w));
                    }
                    rels.push(rel);
                }
            }
            data.push(FactorData {
                algebra: a.clone(),
                symbols: (1..n).map(sym).collect(),
                completed,
                to_completed,
            });
        }
        let presentation = PresentedAlgebra::new(&field, gens, rels)?;
        Ok(FreeProduct { presentation, factors: data })
    }

    /// Images of the factor's original basis vectors under a representation
    /// of the free product.
    pub fn factor_action(&self, r: &Representation, factor: usize) -> Vec<Matrix> {
        let fd = &self.factors[factor];
        let f = self.presentation.field();
        let d = r.dim();
        let n = fd.algebra.dim();
        let mut completed_images = vec![Matrix::identity(f, d)];
        for &s in &fd.symbols {
            completed_images.push(r.matrix(s).clone());
        }
        (0..n)
            .map(|j| {
                let mut acc = Matrix::zeros(f, d, d);
                for (s, img) in completed_images.iter().enumerate() {
                    let c = fd.to_completed.get(s, j);
                    if !f.is_zero(c) {
                        acc = acc.add(&img.scale(c));
                    }
                }
                acc
            })
            .collect()
    }

    /// Generator images for given actions of the factors' original bases
    /// (one list of matrices per factor).
    pub fn from_factor_actions(&self, actions: &[Vec<Matrix>]) -> Result<Representation> {
        let f = self.presentation.field();
        let d = actions
            .iter()
            .flat_map(|a| a.first())
            .map(|m| m.rows())
            .next()
            .ok_or_else(|| Error::Precondition("no factor actions".into()))?;
        let mut gens = vec![Matrix::zeros(f, d, d); self.presentation.generators().len()];
        for (fd, act) in self.factors.iter().zip(actions) {
            for (k, &s) in fd.symbols.iter().enumerate() {
                let col = k + 1;
                let mut acc = Matrix::zeros(f, d, d);
                for (j, m) in act.iter().enumerate() {
                    let c = fd.completed.get(j, col);
                    if !f.is_zero(c) {
                        acc = acc.add(&m.scale(c));
                    }
                }
                gens[s] = acc;
            }
        }
        Representation::of_dim(&self.presentation, d, gens)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagonal_factors_give_idempotents() {
        let f2 = Field::prime(2).unwrap();
        let kk = FinAlgebra::diagonal(&f2, 2);
        let fp = FreeProduct::new(&[kk.clone(), kk]).unwrap();
        let p = &fp.presentation;
        assert_eq!(p.generators().len(), 2);
        assert_eq!(p.format_relation(&p.relations()[0]), "(1)*a1 + (1)*a1*a1");
        assert_eq!(p.format_relation(&p.relations()[1]), "(1)*b1 + (1)*b1*b1");
    }

    #[test]
    fn json_roundtrip() {
        let f3 = Field::prime(3).unwrap();
        let p = PresentedAlgebra::new(
            &f3,
            vec![Generator { name: "s".into(), invertible: true }, Generator { name: "x".into(), invertible: false }],
            vec![vec![(f3.one(), vec![0, 1]), (f3.from_int(2), vec![2])]],
        )
        .unwrap();
        let s = serde_json::to_string(&p.to_json()).unwrap();
        let back = PresentedAlgebra::from_json(&serde_json::from_str(&s).unwrap()).unwrap();
        assert_eq!(back, p);
        assert_eq!(back.all_relations().len(), 3);
    }

    #[test]
    fn factor_prefixes() {
        assert_eq!(factor_prefix(0), "a");
        assert_eq!(factor_prefix(25), "z");
        assert_eq!(factor_prefix(26), "aa");
    }
}
