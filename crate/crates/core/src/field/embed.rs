use serde::{Deserialize, Serialize};

use super::{poly, Elem, Field, FieldDescriptor};
use crate::error::{Error, Result};

/// A field homomorphism determined by the images of the source generators.
///
/// Supported shapes: finite into finite (image of the extension generator),
/// finite or rational into a rational-function field over a compatible base
/// (constants), and identities.
#[derive(Clone, Debug)]
pub struct Embedding {
    source: Field,
    target: Field,
    /// Image of the source generator (proper finite extensions only).
    gen_image: Option<Elem>,
    /// For a rational-function target, the embedding into its base field.
    into_base: Option<Box<Embedding>>,
    /// Full lookup table for small finite sources.
    table: Option<Vec<Elem>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddingJson {
    pub source: FieldDescriptor,
    pub target: FieldDescriptor,
    /// Residue coefficient vectors of the generator images.
    pub images: Vec<Vec<String>>,
}

impl Embedding {
    /// Builds an embedding from explicit generator images, verifying that the
    /// images satisfy the source relations.
    pub fn new(source: &Field, target: &Field, images: &[Elem]) -> Result<Embedding> {
        if source.characteristic() != target.characteristic() {
            return Err(Error::Embedding(format!(
                "{:?} and {:?} share no prime subfield",
                source, target
            )));
        }
        if let Some((base, _)) = target.ratfun_base() {
            if source == target {
                return Ok(Self::identity(source));
            }
            let inner = Embedding::new(source, base, images)?;
            return Ok(Embedding {
                source: source.clone(),
                target: target.clone(),
                gen_image: None,
                into_base: Some(Box::new(inner)),
                table: None,
            });
        }
        if source.ratfun_base().is_some() {
            if source == target {
                return Ok(Self::identity(source));
            }
            return Err(Error::Embedding("rational-function sources embed only identically".into()));
        }
        if source.is_rationals() {
            return if target.is_rationals() {
                Ok(Self::identity(source))
            } else {
                Err(Error::Embedding("Q embeds only into characteristic-zero fields".into()))
            };
        }
        let sff = source.as_finite().unwrap();
        let tff = target.as_finite().ok_or_else(|| Error::Embedding("target is not finite".into()))?;
        if tff.degree() % sff.degree() != 0 {
            return Err(Error::Embedding(format!("{:?} is not a subfield of {:?}", source, target)));
        }
        let gen_image = if sff.degree() == 1 {
            if !images.is_empty() {
                return Err(Error::Embedding("a prime field has no generators to map".into()));
            }
            None
        } else {
            if images.len() != 1 {
                return Err(Error::Embedding("expected exactly one generator image".into()));
            }
            let a = images[0].clone();
            if !target.contains(&a) {
                return Err(Error::Embedding("image is not a target element".into()));
            }
            let modulus: Vec<Elem> = sff.modulus().iter().map(|&c| target.from_int(c as i64)).collect();
            if !target.is_zero(&poly::eval(target, &modulus, &a)) {
                return Err(Error::Embedding("image is not a root of the source modulus".into()));
            }
            Some(a)
        };
        let mut e = Embedding {
            source: source.clone(),
            target: target.clone(),
            gen_image,
            into_base: None,
            table: None,
        };
        if sff.size() <= 1 << 16 {
            let t: Vec<Elem> = source.elements().iter().map(|x| e.map_slow(x)).collect();
            e.table = Some(t);
        }
        Ok(e)
    }

    pub fn identity(field: &Field) -> Embedding {
        Embedding {
            source: field.clone(),
            target: field.clone(),
            gen_image: None,
            into_base: None,
            table: None,
        }
    }

    fn is_identity(&self) -> bool {
        self.source == self.target && self.gen_image.is_none() && self.into_base.is_none() && self.table.is_none()
    }

    /// The first embedding in canonical order: the generator goes to the
    /// least root (by element code) of its modulus.
    pub fn find(source: &Field, target: &Field) -> Result<Embedding> {
        if source == target {
            return Ok(Self::identity(source));
        }
        if source.characteristic() != target.characteristic() {
            return Err(Error::Embedding(format!(
                "{:?} and {:?} share no prime subfield",
                source, target
            )));
        }
        let finite_target = match target.ratfun_base() {
            Some((base, _)) => {
                let inner = Embedding::find(source, base)?;
                return Ok(Embedding {
                    source: source.clone(),
                    target: target.clone(),
                    gen_image: None,
                    into_base: Some(Box::new(inner)),
                    table: None,
                });
            }
            None => target,
        };
        match (source.as_finite(), finite_target.as_finite()) {
            (Some(s), Some(_)) if s.degree() == 1 => Embedding::new(source, target, &[]),
            (Some(s), Some(_)) => {
                let modulus: Vec<Elem> = s.modulus().iter().map(|&c| target.from_int(c as i64)).collect();
                let root = target
                    .elements()
                    .into_iter()
                    .find(|a| target.is_zero(&poly::eval(target, &modulus, a)))
                    .ok_or_else(|| {
                        Error::Embedding(format!("no root of the modulus of {:?} in {:?}", source, target))
                    })?;
                Embedding::new(source, target, &[root])
            }
            _ => Embedding::new(source, target, &[]),
        }
    }

    /// All embeddings between two finite fields (one per root of the modulus).
    pub fn all(source: &Field, target: &Field) -> Result<Vec<Embedding>> {
        let s = source.as_finite().ok_or_else(|| Error::UnsupportedField("finite source expected".into()))?;
        if target.as_finite().is_none() {
            return Err(Error::UnsupportedField("finite target expected".into()));
        }
        if s.degree() == 1 {
            return Ok(vec![Embedding::new(source, target, &[])?]);
        }
        let modulus: Vec<Elem> = s.modulus().iter().map(|&c| target.from_int(c as i64)).collect();
        target
            .elements()
            .into_iter()
            .filter(|a| target.is_zero(&poly::eval(target, &modulus, a)))
            .map(|a| Embedding::new(source, target, &[a]))
            .collect()
    }

    pub fn source(&self) -> &Field {
        &self.source
    }

    pub fn target(&self) -> &Field {
        &self.target
    }

    pub fn generator_image(&self) -> Option<&Elem> {
        self.gen_image.as_ref()
    }

    /// Degree of the target over the source, when both are finite.
    pub fn degree(&self) -> Option<usize> {
        Some(self.target.degree()? / self.source.degree()?)
    }

    fn map_slow(&self, x: &Elem) -> Elem {
        if let Some(inner) = &self.into_base {
            let c = inner.map(x);
            return self.target.ratfun_from_poly(vec![c]);
        }
        match &self.gen_image {
            None => match x {
                Elem::Fin(c) => Elem::Fin(*c),
                other => other.clone(),
            },
            Some(a) => {
                let r = self.source.residue(x);
                let coeffs: Vec<Elem> = r.iter().map(|&c| self.target.from_int(c as i64)).collect();
                poly::eval(&self.target, &coeffs, a)
            }
        }
    }

    pub fn map(&self, x: &Elem) -> Elem {
        if self.is_identity() {
            return x.clone();
        }
        if let (Some(t), Elem::Fin(c)) = (&self.table, x) {
            return t[*c as usize].clone();
        }
        self.map_slow(x)
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &Embedding) -> Result<Embedding> {
        if self.target != other.source {
            return Err(Error::FieldMismatch(format!("{:?}", self.target), format!("{:?}", other.source)));
        }
        if self.is_identity() {
            return Ok(other.clone());
        }
        if other.is_identity() {
            return Ok(self.clone());
        }
        let images: Vec<Elem> = match &self.gen_image {
            Some(a) => vec![other.map(a)],
            None => vec![],
        };
        if let Some((base, _)) = other.target.ratfun_base() {
            let mid = match &other.into_base {
                Some(inner) => self.then(inner)?,
                None => Embedding::new(&self.source, base, &images)?,
            };
            return Ok(Embedding {
                source: self.source.clone(),
                target: other.target.clone(),
                gen_image: None,
                into_base: Some(Box::new(mid)),
                table: None,
            });
        }
        Embedding::new(&self.source, &other.target, &images)
    }

    pub fn to_json(&self) -> EmbeddingJson {
        let images = match (&self.gen_image, &self.into_base) {
            (Some(a), _) => vec![self.target.residue(a).iter().map(|c| c.to_string()).collect()],
            (None, Some(inner)) => inner.to_json().images,
            _ => vec![],
        };
        EmbeddingJson {
            source: self.source.descriptor().clone(),
            target: self.target.descriptor().clone(),
            images,
        }
    }

    pub fn from_json(j: &EmbeddingJson) -> Result<Embedding> {
        let source = Field::new(&j.source)?;
        let target = Field::new(&j.target)?;
        let finite_target = target.ratfun_base().map(|(b, _)| b.clone()).unwrap_or_else(|| target.clone());
        let mut images = Vec::new();
        for img in &j.images {
            let r: Vec<u32> = img
                .iter()
                .map(|s| s.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad residue {s:?}"))))
                .collect::<Result<_>>()?;
            images.push(finite_target.from_residue(&r));
        }
        if target.ratfun_base().is_some() && source != target {
            let inner = Embedding::new(&source, &finite_target, &images)?;
            return Ok(Embedding {
                source,
                target,
                gen_image: None,
                into_base: Some(Box::new(inner)),
                table: None,
            });
        }
        Embedding::new(&source, &target, &images)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf4() -> Field {
        Field::new(&FieldDescriptor::extension(FieldDescriptor::prime(2), vec![1, 1, 1])).unwrap()
    }

    #[test]
    fn prime_subfield_embedding_is_unique() {
        let f2 = Field::prime(2).unwrap();
        let all = Embedding::all(&f2, &gf4()).unwrap();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].map(&f2.one()), gf4().one());
    }

    #[test]
    fn gf4_into_gf16_roots_by_brute_force() {
        let gf16 = Field::gf(2, 4).unwrap();
        let roots: Vec<Elem> = gf16
            .elements()
            .into_iter()
            .filter(|a| {
                let v = gf16.add(&gf16.add(&gf16.mul(a, a), a), &gf16.one());
                gf16.is_zero(&v)
            })
            .collect();
        assert_eq!(roots.len(), 2);
        for r in &roots {
            let e = Embedding::new(&gf4(), &gf16, &[r.clone()]).unwrap();
            // ring homomorphism on all pairs
            let k = gf4();
            for a in k.elements() {
                for b in k.elements() {
                    assert_eq!(e.map(&k.mul(&a, &b)), gf16.mul(&e.map(&a), &e.map(&b)));
                    assert_eq!(e.map(&k.add(&a, &b)), gf16.add(&e.map(&a), &e.map(&b)));
                }
            }
        }
    }

    #[test]
    fn gf4_does_not_embed_in_gf8() {
        let gf8 = Field::gf(2, 3).unwrap();
        assert!(Embedding::find(&gf4(), &gf8).is_err());
        for a in gf8.elements() {
            assert!(Embedding::new(&gf4(), &gf8, &[a]).is_err());
        }
    }

    #[test]
    fn composition_and_json() {
        let f2 = Field::prime(2).unwrap();
        let gf16 = Field::gf(2, 4).unwrap();
        let a = Embedding::find(&f2, &gf4()).unwrap();
        let b = Embedding::find(&gf4(), &gf16).unwrap();
        let c = a.then(&b).unwrap();
        assert_eq!(c.map(&f2.one()), gf16.one());
        let back = Embedding::from_json(&b.to_json()).unwrap();
        for x in gf4().elements() {
            assert_eq!(back.map(&x), b.map(&x));
        }
    }

    #[test]
    fn constants_into_rational_functions() {
        let q = Field::rationals();
        let qt = Field::new(&FieldDescriptor::rational_functions(FieldDescriptor::Rationals, "t")).unwrap();
        let e = Embedding::find(&q, &qt).unwrap();
        let x = q.parse("3/4").unwrap();
        assert_eq!(qt.format(&e.map(&x)), "{3/4}");
    }
}
