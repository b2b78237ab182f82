//! The group algebra of a free group, as the free Hopf algebra on a
//! grouplike coalgebra, and the comparison of coefficient spans on all
//! words against positive words.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::alg::{
    coefficient_span, coefficient_span_over, conjugation_orbits, enumerate_representations, EnumConfig, Generator,
    PresentedAlgebra, Representation,
};
use crate::error::{Error, Result};
use crate::field::{Elem, Field};

/// A reduced word; letter `i` is the `i`-th generator (from 1), `-i` its
/// inverse.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct GroupWord(Vec<i32>);

impl GroupWord {
    pub fn empty() -> GroupWord {
        GroupWord(vec![])
    }

    pub fn letters(&self) -> &[i32] {
        &self.0
    }

    pub fn inverse(&self) -> GroupWord {
        GroupWord(self.0.iter().rev().map(|x| -x).collect())
    }

    pub fn mul(&self, other: &GroupWord) -> GroupWord {
        let mut out = self.0.clone();
        for &x in &other.0 {
            if out.last() == Some(&-x) {
                out.pop();
            } else {
                out.push(x);
            }
        }
        GroupWord(out)
    }
}

/// Free reduction over an alphabet of `n` letters.
pub fn reduce(word: &[i32], n: usize) -> Result<GroupWord> {
    let mut out: Vec<i32> = Vec::with_capacity(word.len());
    for &x in word {
        if x == 0 || x.unsigned_abs() as usize > n {
            return Err(Error::Invalid(format!("letter {x} is not in an alphabet of size {n}")));
        }
        if out.last() == Some(&-x) {
            out.pop();
        } else {
            out.push(x);
        }
    }
    Ok(GroupWord(out))
}

/// A finitely supported combination of reduced words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAlgebraElement {
    field: Field,
    alphabet: usize,
    terms: BTreeMap<GroupWord, Elem>,
}

impl GroupAlgebraElement {
    pub fn zero(field: &Field, alphabet: usize) -> Self {
        GroupAlgebraElement { field: field.clone(), alphabet, terms: BTreeMap::new() }
    }

    pub fn unit(field: &Field, alphabet: usize) -> Self {
        Self::word(field, alphabet, GroupWord::empty())
    }

    pub fn word(field: &Field, alphabet: usize, w: GroupWord) -> Self {
        let mut e = Self::zero(field, alphabet);
        e.terms.insert(w, field.one());
        e
    }

    pub fn from_terms(field: &Field, alphabet: usize, terms: &[(Vec<i32>, Elem)]) -> Result<Self> {
        let mut e = Self::zero(field, alphabet);
        for (w, c) in terms {
            e.add_term(reduce(w, alphabet)?, c);
        }
        Ok(e)
    }

    fn add_term(&mut self, w: GroupWord, c: &Elem) {
        let f = &self.field;
        let v = match self.terms.get(&w) {
            Some(x) => f.add(x, c),
            None => c.clone(),
        };
        if f.is_zero(&v) {
            self.terms.remove(&w);
        } else {
            self.terms.insert(w, v);
        }
    }

    pub fn terms(&self) -> &BTreeMap<GroupWord, Elem> {
        &self.terms
    }

    fn check(&self, other: &Self) -> Result<()> {
        self.field.check_same(&other.field)?;
        if self.alphabet != other.alphabet {
            return Err(Error::DimensionMismatch("different alphabets".into()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c);
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Elem) -> Self {
        let mut out = Self::zero(&self.field, self.alphabet);
        for (w, x) in &self.terms {
            out.add_term(w.clone(), &self.field.mul(c, x));
        }
        out
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let f = &self.field;
        let mut out = Self::zero(f, self.alphabet);
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(u.mul(v), &f.mul(a, b));
            }
        }
        Ok(out)
    }

    pub fn antipode(&self) -> Self {
        let mut out = Self::zero(&self.field, self.alphabet);
        for (w, c) in &self.terms {
            out.add_term(w.inverse(), c);
        }
        out
    }

    pub fn counit(&self) -> Elem {
        let f = &self.field;
        self.terms.values().fold(f.zero(), |acc, c| f.add(&acc, c))
    }

    /// `Σ c_w w ⊗ w`.
    pub fn comultiply(&self) -> BTreeMap<(GroupWord, GroupWord), Elem> {
        self.terms.iter().map(|(w, c)| ((w.clone(), w.clone()), c.clone())).collect()
    }

    /// `m∘(S⊗id)∘Δ = m∘(id⊗S)∘Δ = ηε` on this element.
    pub fn satisfies_antipode_axiom(&self) -> bool {
        let f = &self.field;
        let expected = Self::unit(f, self.alphabet).scale(&self.counit());
        let mut left = Self::zero(f, self.alphabet);
        let mut right = Self::zero(f, self.alphabet);
        for ((a, b), c) in self.comultiply() {
            left.add_term(a.inverse().mul(&b), &c);
            right.add_term(a.mul(&b.inverse()), &c);
        }
        left == expected && right == expected
    }

    /// Words as signed index lists mapped to coefficient strings.
    pub fn to_json(&self) -> BTreeMap<String, String> {
        self.terms
            .iter()
            .map(|(w, c)| (serde_json::to_string(&w.0).expect("integers"), self.field.format(c)))
            .collect()
    }
}

/// `k⟨S^{±1}⟩`: invertible generators `s1, s2, …` and no other relations.
pub fn hopf_envelope_grouplike(field: &Field, alphabet: usize) -> Result<PresentedAlgebra> {
    let gens = (1..=alphabet).map(|i| Generator { name: format!("s{i}"), invertible: true }).collect();
    PresentedAlgebra::new(field, gens, vec![])
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddingCheckReport {
    pub alphabet: usize,
    pub d: usize,
    pub representations: usize,
    pub all_words_dim: usize,
    pub positive_words_dim: usize,
    pub stabilization_length: usize,
    pub equal: bool,
}

/// Coefficient spans of all representations of the free group of dimension
/// `≤ d`, evaluated on all reduced words and on positive words only.
pub fn embedding_check(field: &Field, alphabet: usize, d: usize, cfg: &EnumConfig) -> Result<EmbeddingCheckReport> {
    let p = hopf_envelope_grouplike(field, alphabet)?;
    let mut reps: Vec<Representation> = Vec::new();
    for e in 1..=d {
        let all = enumerate_representations(&p, e, cfg)?;
        let orbits = conjugation_orbits(&p, &all)?;
        reps.extend(orbits.into_iter().map(|o| all[o[0]].clone()));
    }
    let full = coefficient_span(&p, &reps)?;
    let positive: Vec<usize> = (0..alphabet).collect();
    let pos = coefficient_span_over(&p, &reps, &positive)?;
    Ok(EmbeddingCheckReport {
        alphabet,
        d,
        representations: reps.len(),
        all_words_dim: full.dim(),
        positive_words_dim: pos.dim(),
        stabilization_length: full.stabilization_length(),
        equal: full.dim() == pos.dim(),
    })
}
