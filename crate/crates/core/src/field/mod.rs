//! Exact fields: prime fields, flattened finite extensions, the rationals and
//! rational-function fields over either.
//!
//! A [`Field`] is a cheap, shareable handle; elements are plain [`Elem`]
//! values interpreted by the field that produced them.

mod embed;
pub mod finite;
pub mod poly;

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
pub use embed::Embedding;
use finite::FiniteField;

/// Serializable description of a field.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FieldDescriptor {
    Prime { p: u32 },
    /// `modulus` lists base-field element codes, low degree first.
    Extension { base: Box<FieldDescriptor>, modulus: Vec<u32> },
    Rationals,
    RationalFunctions { base: Box<FieldDescriptor>, var: String },
}

impl FieldDescriptor {
    pub fn prime(p: u32) -> Self {
        FieldDescriptor::Prime { p }
    }

    pub fn extension(base: FieldDescriptor, modulus: Vec<u32>) -> Self {
        FieldDescriptor::Extension { base: Box::new(base), modulus }
    }

    pub fn rational_functions(base: FieldDescriptor, var: &str) -> Self {
        FieldDescriptor::RationalFunctions { base: Box::new(base), var: var.to_string() }
    }
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDescriptor::Prime { p } => write!(f, "GF({p})"),
            FieldDescriptor::Extension { base, modulus } => {
                write!(f, "{base}[y]/(")?;
                let terms: Vec<String> = modulus.iter().map(|c| c.to_string()).collect();
                write!(f, "{})", terms.join(","))
            }
            FieldDescriptor::Rationals => write!(f, "Q"),
            FieldDescriptor::RationalFunctions { base, var } => write!(f, "{base}({var})"),
        }
    }
}

/// A reduced fraction of polynomials over the base field; the denominator is
/// monic and the pair is coprime, so structural equality is field equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RatFn {
    pub num: Vec<Elem>,
    pub den: Vec<Elem>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Elem {
    Fin(u32),
    Rat(Box<BigRational>),
    Fun(Box<RatFn>),
}

impl Elem {
    pub fn code(&self) -> u32 {
        match self {
            Elem::Fin(c) => *c,
            _ => panic!("element of an infinite field has no code"),
        }
    }
}

enum Kind {
    Finite {
        ff: FiniteField,
        /// For flattened towers: base field and the image of its generator.
        tower: Option<(Field, u32)>,
    },
    Rationals,
    RatFun { base: Field, var: String },
}

struct Inner {
    desc: FieldDescriptor,
    kind: Kind,
}

#[derive(Clone)]
pub struct Field(Arc<Inner>);

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.desc)
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.desc == other.0.desc
    }
}
impl Eq for Field {}

impl Field {
    /// Builds a field from its descriptor, verifying primality and
    /// irreducibility of moduli.
    pub fn new(desc: &FieldDescriptor) -> Result<Field> {
        let kind = match desc {
            FieldDescriptor::Prime { p } => {
                Kind::Finite { ff: FiniteField::prime(*p)?, tower: None }
            }
            FieldDescriptor::Rationals => Kind::Rationals,
            FieldDescriptor::RationalFunctions { base, var } => {
                let base = Field::new(base)?;
                match base.0.kind {
                    Kind::RatFun { .. } => {
                        return Err(Error::UnsupportedField(
                            "rational functions over a rational-function field".into(),
                        ))
                    }
                    _ => Kind::RatFun { base, var: var.clone() },
                }
            }
            FieldDescriptor::Extension { base, modulus } => {
                let base = Field::new(base)?;
                Self::extension_kind(&base, modulus)?
            }
        };
        Ok(Field(Arc::new(Inner { desc: desc.clone(), kind })))
    }

    pub fn prime(p: u32) -> Result<Field> {
        Field::new(&FieldDescriptor::Prime { p })
    }

    pub fn rationals() -> Field {
        Field::new(&FieldDescriptor::Rationals).expect("Q")
    }

    /// GF(p^n) with the first irreducible monic modulus of degree `n` in code
    /// order (a Conway-free but deterministic choice).
    pub fn gf(p: u32, n: usize) -> Result<Field> {
        if n == 1 {
            return Field::prime(p);
        }
        let base = Field::prime(p)?;
        let modulus = first_irreducible(&base, n)?;
        Field::new(&FieldDescriptor::extension(FieldDescriptor::prime(p), modulus))
    }

    fn extension_kind(base: &Field, modulus: &[u32]) -> Result<Kind> {
        let bff = match &base.0.kind {
            Kind::Finite { ff, .. } => ff,
            _ => {
                return Err(Error::UnsupportedField(
                    "extensions are supported over finite fields only".into(),
                ))
            }
        };
        if modulus.len() < 2 || *modulus.last().unwrap() != 1 {
            return Err(Error::BadModulus);
        }
        if modulus.iter().any(|&c| c >= bff.size()) {
            return Err(Error::BadModulus);
        }
        let g: Vec<Elem> = modulus.iter().map(|&c| Elem::Fin(c)).collect();
        if !poly::is_irreducible(base, &g) {
            return Err(Error::ReducibleModulus);
        }
        if bff.degree() == 1 {
            let ff = FiniteField::new(bff.characteristic(), modulus.to_vec())?;
            return Ok(Kind::Finite { ff, tower: None });
        }
        flatten_tower(base, &g)
    }

    pub fn descriptor(&self) -> &FieldDescriptor {
        &self.0.desc
    }

    pub fn as_finite(&self) -> Option<&FiniteField> {
        match &self.0.kind {
            Kind::Finite { ff, .. } => Some(ff),
            _ => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.as_finite().is_some()
    }

    pub fn is_rationals(&self) -> bool {
        matches!(self.0.kind, Kind::Rationals)
    }

    /// Base field and variable name of a rational-function field.
    pub fn ratfun_base(&self) -> Option<(&Field, &str)> {
        match &self.0.kind {
            Kind::RatFun { base, var } => Some((base, var.as_str())),
            _ => None,
        }
    }

    /// For a flattened tower, the base field and the image of its generator.
    pub fn tower_base(&self) -> Option<(&Field, Elem)> {
        match &self.0.kind {
            Kind::Finite { tower: Some((b, img)), .. } => Some((b, Elem::Fin(*img))),
            _ => None,
        }
    }

    pub fn characteristic(&self) -> u32 {
        match &self.0.kind {
            Kind::Finite { ff, .. } => ff.characteristic(),
            Kind::Rationals => 0,
            Kind::RatFun { base, .. } => base.characteristic(),
        }
    }

    /// Number of elements, for finite fields.
    pub fn size(&self) -> Option<u64> {
        self.as_finite().map(|f| f.size() as u64)
    }

    /// Degree over the prime field (finite fields only).
    pub fn degree(&self) -> Option<usize> {
        self.as_finite().map(|f| f.degree())
    }

    /// All elements in canonical order (finite fields only).
    pub fn elements(&self) -> Vec<Elem> {
        let q = self.size().expect("enumerating an infinite field") as u32;
        (0..q).map(Elem::Fin).collect()
    }

    /// The residue class of `y` for a proper extension.
    pub fn generator(&self) -> Option<Elem> {
        let ff = self.as_finite()?;
        if ff.degree() == 1 {
            None
        } else {
            Some(Elem::Fin(ff.characteristic()))
        }
    }

    pub fn primitive_element(&self) -> Option<Elem> {
        self.as_finite().map(|f| Elem::Fin(f.primitive()))
    }

    pub fn zero(&self) -> Elem {
        match &self.0.kind {
            Kind::Finite { .. } => Elem::Fin(0),
            Kind::Rationals => Elem::Rat(Box::new(BigRational::zero())),
            Kind::RatFun { .. } => Elem::Fun(Box::new(RatFn { num: vec![], den: vec![self.base_one()] })),
        }
    }

    pub fn one(&self) -> Elem {
        self.from_int(1)
    }

    fn base_one(&self) -> Elem {
        match &self.0.kind {
            Kind::RatFun { base, .. } => base.one(),
            _ => unreachable!(),
        }
    }

    pub fn from_int(&self, n: i64) -> Elem {
        match &self.0.kind {
            Kind::Finite { ff, .. } => Elem::Fin(ff.from_int(n)),
            Kind::Rationals => Elem::Rat(Box::new(BigRational::from_integer(BigInt::from(n)))),
            Kind::RatFun { base, .. } => {
                let mut num = vec![base.from_int(n)];
                poly::trim(base, &mut num);
                Elem::Fun(Box::new(RatFn { num, den: vec![base.one()] }))
            }
        }
    }

    pub fn from_bigint(&self, n: &BigInt) -> Elem {
        match &self.0.kind {
            Kind::Finite { ff, .. } => {
                let p = BigInt::from(ff.characteristic());
                let r = ((n % &p) + &p) % &p;
                let r: u32 = r.try_into().expect("residue fits");
                Elem::Fin(r)
            }
            Kind::Rationals => Elem::Rat(Box::new(BigRational::from_integer(n.clone()))),
            Kind::RatFun { base, .. } => {
                let mut num = vec![base.from_bigint(n)];
                poly::trim(base, &mut num);
                Elem::Fun(Box::new(RatFn { num, den: vec![base.one()] }))
            }
        }
    }

    pub fn from_rational(&self, r: &BigRational) -> Result<Elem> {
        let n = self.from_bigint(r.numer());
        let d = self.from_bigint(r.denom());
        self.try_inv(&d)
            .map(|di| self.mul(&n, &di))
            .ok_or_else(|| Error::Invalid(format!("denominator of {r} vanishes in {}", self.0.desc)))
    }

    /// The transcendental variable of a rational-function field.
    pub fn variable(&self) -> Option<Elem> {
        match &self.0.kind {
            Kind::RatFun { base, .. } => Some(Elem::Fun(Box::new(RatFn {
                num: vec![base.zero(), base.one()],
                den: vec![base.one()],
            }))),
            _ => None,
        }
    }

    /// Embeds a base-field polynomial into a rational-function field.
    pub fn ratfun_from_poly(&self, num: Vec<Elem>) -> Elem {
        let (base, _) = self.ratfun_base().expect("rational-function field");
        let mut num = num;
        poly::trim(base, &mut num);
        Elem::Fun(Box::new(RatFn { num, den: vec![base.one()] }))
    }

    pub fn ratfun_parts<'a>(&self, e: &'a Elem) -> (&'a [Elem], &'a [Elem]) {
        match e {
            Elem::Fun(r) => (&r.num, &r.den),
            _ => panic!("not a rational function"),
        }
    }

    pub fn is_zero(&self, a: &Elem) -> bool {
        match a {
            Elem::Fin(c) => *c == 0,
            Elem::Rat(r) => r.is_zero(),
            Elem::Fun(f) => f.num.is_empty(),
        }
    }

    pub fn is_one(&self, a: &Elem) -> bool {
        match a {
            Elem::Fin(c) => *c == 1,
            Elem::Rat(r) => r.is_one(),
            Elem::Fun(f) => {
                f.num.len() == 1 && f.den.len() == 1 && {
                    let (base, _) = self.ratfun_base().unwrap();
                    base.is_one(&f.num[0])
                }
            }
        }
    }

    pub fn add(&self, a: &Elem, b: &Elem) -> Elem {
        match (&self.0.kind, a, b) {
            (Kind::Finite { ff, .. }, Elem::Fin(x), Elem::Fin(y)) => Elem::Fin(ff.add(*x, *y)),
            (Kind::Rationals, Elem::Rat(x), Elem::Rat(y)) => Elem::Rat(Box::new(&**x + &**y)),
            (Kind::RatFun { base, .. }, Elem::Fun(x), Elem::Fun(y)) => {
                if x.den == y.den {
                    return Elem::Fun(Box::new(ratfn_normalize(base, poly::add(base, &x.num, &y.num), x.den.clone())));
                }
                let num = poly::add(base, &poly::mul(base, &x.num, &y.den), &poly::mul(base, &y.num, &x.den));
                let den = poly::mul(base, &x.den, &y.den);
                Elem::Fun(Box::new(ratfn_normalize(base, num, den)))
            }
            _ => panic!("element does not belong to {}", self.0.desc),
        }
    }

    pub fn neg(&self, a: &Elem) -> Elem {
        match (&self.0.kind, a) {
            (Kind::Finite { ff, .. }, Elem::Fin(x)) => Elem::Fin(ff.neg(*x)),
            (Kind::Rationals, Elem::Rat(x)) => Elem::Rat(Box::new(-&**x)),
            (Kind::RatFun { base, .. }, Elem::Fun(x)) => {
                Elem::Fun(Box::new(RatFn { num: poly::neg(base, &x.num), den: x.den.clone() }))
            }
            _ => panic!("element does not belong to {}", self.0.desc),
        }
    }

    pub fn sub(&self, a: &Elem, b: &Elem) -> Elem {
        match (&self.0.kind, a, b) {
            (Kind::Finite { ff, .. }, Elem::Fin(x), Elem::Fin(y)) => Elem::Fin(ff.sub(*x, *y)),
            (Kind::Rationals, Elem::Rat(x), Elem::Rat(y)) => Elem::Rat(Box::new(&**x - &**y)),
            _ => self.add(a, &self.neg(b)),
        }
    }

    pub fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        match (&self.0.kind, a, b) {
            (Kind::Finite { ff, .. }, Elem::Fin(x), Elem::Fin(y)) => Elem::Fin(ff.mul(*x, *y)),
            (Kind::Rationals, Elem::Rat(x), Elem::Rat(y)) => Elem::Rat(Box::new(&**x * &**y)),
            (Kind::RatFun { base, .. }, Elem::Fun(x), Elem::Fun(y)) => {
                if x.num.is_empty() || y.num.is_empty() {
                    return self.zero();
                }
                // cross-cancel before multiplying to keep degrees small
                let g1 = poly::gcd(base, &x.num, &y.den);
                let g2 = poly::gcd(base, &y.num, &x.den);
                let xn = poly::divrem(base, &x.num, &g1).0;
                let yd = poly::divrem(base, &y.den, &g1).0;
                let yn = poly::divrem(base, &y.num, &g2).0;
                let xd = poly::divrem(base, &x.den, &g2).0;
                let num = poly::mul(base, &xn, &yn);
                let den = poly::mul(base, &xd, &yd);
                Elem::Fun(Box::new(ratfn_make_monic(base, num, den)))
            }
            _ => panic!("element does not belong to {}", self.0.desc),
        }
    }

    pub fn try_inv(&self, a: &Elem) -> Option<Elem> {
        if self.is_zero(a) {
            return None;
        }
        Some(match (&self.0.kind, a) {
            (Kind::Finite { ff, .. }, Elem::Fin(x)) => Elem::Fin(ff.inv(*x)?),
            (Kind::Rationals, Elem::Rat(x)) => Elem::Rat(Box::new(x.recip())),
            (Kind::RatFun { base, .. }, Elem::Fun(x)) => {
                Elem::Fun(Box::new(ratfn_make_monic(base, x.den.clone(), x.num.clone())))
            }
            _ => panic!("element does not belong to {}", self.0.desc),
        })
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self, a: &Elem) -> Elem {
        self.try_inv(a).expect("division by zero")
    }

    pub fn div(&self, a: &Elem, b: &Elem) -> Elem {
        self.mul(a, &self.inv(b))
    }

    pub fn pow(&self, a: &Elem, e: u64) -> Elem {
        if let (Kind::Finite { ff, .. }, Elem::Fin(x)) = (&self.0.kind, a) {
            return Elem::Fin(ff.pow(*x, e));
        }
        let mut acc = self.one();
        let mut b = a.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &b);
            }
            e >>= 1;
            if e > 0 {
                b = self.mul(&b, &b);
            }
        }
        acc
    }

    /// Signed integer power; negative exponents invert.
    pub fn powi(&self, a: &Elem, e: i64) -> Elem {
        if e >= 0 {
            self.pow(a, e as u64)
        } else {
            self.inv(&self.pow(a, e.unsigned_abs()))
        }
    }

    /// Whether `a` is an element of this field (right variant and range).
    pub fn contains(&self, a: &Elem) -> bool {
        match (&self.0.kind, a) {
            (Kind::Finite { ff, .. }, Elem::Fin(x)) => *x < ff.size(),
            (Kind::Rationals, Elem::Rat(_)) => true,
            (Kind::RatFun { base, .. }, Elem::Fun(f)) => {
                f.num.iter().chain(f.den.iter()).all(|c| base.contains(c))
            }
            _ => false,
        }
    }

    /// Residue coefficients over the prime field (finite fields only).
    pub fn residue(&self, a: &Elem) -> Vec<u32> {
        self.as_finite().expect("finite field").residue(a.code())
    }

    pub fn from_residue(&self, r: &[u32]) -> Elem {
        Elem::Fin(self.as_finite().expect("finite field").from_residue(r))
    }

    /// Canonical string form: residues for finite fields (`"3"` for prime
    /// fields, `"[c0,c1,...]"` for extensions), `"a/b"` for rationals and
    /// `"{n0;n1;...}/{d0;...}"` for rational functions.
    pub fn format(&self, a: &Elem) -> String {
        match (&self.0.kind, a) {
            (Kind::Finite { ff, .. }, Elem::Fin(x)) => {
                if ff.degree() == 1 {
                    x.to_string()
                } else {
                    let r: Vec<String> = ff.residue(*x).iter().map(|c| c.to_string()).collect();
                    format!("[{}]", r.join(","))
                }
            }
            (Kind::Rationals, Elem::Rat(r)) => {
                if r.is_integer() {
                    r.numer().to_string()
                } else {
                    format!("{}/{}", r.numer(), r.denom())
                }
            }
            (Kind::RatFun { base, .. }, Elem::Fun(f)) => {
                let side = |p: &[Elem]| {
                    let parts: Vec<String> = p.iter().map(|c| base.format(c)).collect();
                    format!("{{{}}}", parts.join(";"))
                };
                if f.den.len() == 1 {
                    side(&f.num)
                } else {
                    format!("{}/{}", side(&f.num), side(&f.den))
                }
            }
            _ => panic!("element does not belong to {}", self.0.desc),
        }
    }

    /// Inverse of [`Field::format`]; also accepts plain (possibly negative)
    /// integers in every field and `"a/b"` fractions where they make sense.
    pub fn parse(&self, s: &str) -> Result<Elem> {
        let s = s.trim();
        let bad = || Error::Parse(format!("cannot read {s:?} as an element of {}", self.0.desc));
        match &self.0.kind {
            Kind::Finite { ff, .. } => {
                if let Some(inner) = s.strip_prefix('[').and_then(|t| t.strip_suffix(']')) {
                    let mut r = Vec::new();
                    for part in inner.split(',').filter(|t| !t.trim().is_empty()) {
                        let v: i64 = part.trim().parse().map_err(|_| bad())?;
                        r.push(v.rem_euclid(ff.characteristic() as i64) as u32);
                    }
                    if r.len() > ff.degree() {
                        return Err(bad());
                    }
                    Ok(Elem::Fin(ff.from_residue(&r)))
                } else if let Some((n, d)) = s.split_once('/') {
                    let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                    let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                    if d.is_zero() {
                        return Err(bad());
                    }
                    self.from_rational(&BigRational::new(n, d))
                } else {
                    let n: BigInt = s.parse().map_err(|_| bad())?;
                    Ok(self.from_bigint(&n))
                }
            }
            Kind::Rationals => {
                let r = if let Some((n, d)) = s.split_once('/') {
                    let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                    let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                    if d.is_zero() {
                        return Err(bad());
                    }
                    BigRational::new(n, d)
                } else {
                    BigRational::from_integer(s.parse::<BigInt>().map_err(|_| bad())?)
                };
                Ok(Elem::Rat(Box::new(r)))
            }
            Kind::RatFun { base, .. } => {
                let read_side = |t: &str| -> Result<Vec<Elem>> {
                    let inner = t.trim().strip_prefix('{').and_then(|t| t.strip_suffix('}')).ok_or_else(bad)?;
                    let mut out = Vec::new();
                    for part in inner.split(';').filter(|t| !t.trim().is_empty()) {
                        out.push(base.parse(part)?);
                    }
                    poly::trim(base, &mut out);
                    Ok(out)
                };
                if !s.starts_with('{') {
                    let c = base.parse(s)?;
                    let mut num = vec![c];
                    poly::trim(base, &mut num);
                    return Ok(Elem::Fun(Box::new(RatFn { num, den: vec![base.one()] })));
                }
                let (n, d) = match s.find("}/{") {
                    Some(i) => (read_side(&s[..=i])?, read_side(&s[i + 2..])?),
                    None => (read_side(s)?, vec![base.one()]),
                };
                if d.is_empty() {
                    return Err(bad());
                }
                Ok(Elem::Fun(Box::new(ratfn_normalize(base, n, d))))
            }
        }
    }

    pub fn check_same(&self, other: &Field) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::FieldMismatch(self.0.desc.to_string(), other.0.desc.to_string()))
        }
    }
}

fn ratfn_make_monic(base: &Field, num: Vec<Elem>, den: Vec<Elem>) -> RatFn {
    let lead = den.last().expect("nonzero denominator").clone();
    if base.is_one(&lead) {
        return RatFn { num, den };
    }
    let inv = base.inv(&lead);
    RatFn { num: poly::scale(base, &num, &inv), den: poly::scale(base, &den, &inv) }
}

fn ratfn_normalize(base: &Field, num: Vec<Elem>, den: Vec<Elem>) -> RatFn {
    if num.is_empty() {
        return RatFn { num, den: vec![base.one()] };
    }
    let g = poly::gcd(base, &num, &den);
    let (num, den) = if g.len() > 1 {
        (poly::divrem(base, &num, &g).0, poly::divrem(base, &den, &g).0)
    } else {
        (num, den)
    };
    ratfn_make_monic(base, num, den)
}

/// First monic irreducible polynomial of degree `n` over a finite field, in
/// code order of the coefficient vector.
pub fn first_irreducible(base: &Field, n: usize) -> Result<Vec<u32>> {
    let q = base.size().ok_or_else(|| Error::UnsupportedField("infinite base".into()))?;
    let total = q.checked_pow(n as u32).ok_or_else(|| Error::TooLarge("search space".into()))?;
    for idx in 0..total {
        let mut coeffs = Vec::with_capacity(n + 1);
        let mut t = idx;
        for _ in 0..n {
            coeffs.push((t % q) as u32);
            t /= q;
        }
        coeffs.push(1);
        let f: Vec<Elem> = coeffs.iter().map(|&c| Elem::Fin(c)).collect();
        if poly::is_irreducible(base, &f) {
            return Ok(coeffs);
        }
    }
    Err(Error::Invalid(format!("no irreducible polynomial of degree {n}")))
}

/// Rewrites `base[z]/(g)` as a single extension of the prime field.
fn flatten_tower(base: &Field, g: &[Elem]) -> Result<Kind> {
    let bff = base.as_finite().unwrap();
    let p = bff.characteristic();
    let m = bff.degree();
    let n = g.len() - 1;
    let total = m * n;
    let prime = Field::prime(p)?;
    // tower element (n base coefficients) -> prime-field coordinate vector
    let to_vec = |e: &[Elem]| -> Vec<Elem> {
        let mut out = Vec::with_capacity(total);
        for i in 0..n {
            let r = match e.get(i) {
                Some(c) => bff.residue(c.code()),
                None => vec![0; m],
            };
            out.extend(r.into_iter().map(Elem::Fin));
        }
        out
    };
    let tower_mul = |a: &[Elem], b: &[Elem]| poly::rem(base, &poly::mul(base, a, b), g);
    let q_total = (bff.size() as u64).pow(n as u32);
    for cand in 1..q_total {
        // candidate theta as a tower element
        let mut theta = Vec::with_capacity(n);
        let mut t = cand;
        for _ in 0..n {
            theta.push(Elem::Fin((t % bff.size() as u64) as u32));
            t /= bff.size() as u64;
        }
        poly::trim(base, &mut theta);
        let mut powers = vec![vec![base.one()]];
        for _ in 0..total {
            let next = tower_mul(powers.last().unwrap(), &theta);
            powers.push(next);
        }
        let rows: Vec<Vec<Elem>> = powers[..total].iter().map(|e| to_vec(e)).collect();
        let mat = crate::linalg::Matrix::from_rows(&prime, rows.clone());
        if mat.rank() < total {
            continue;
        }
        // theta^total = sum c_k theta^k: solve c * rows = to_vec(theta^total)
        let target = to_vec(&powers[total]);
        let coeffs = mat
            .transpose()
            .solve(&target)
            .ok_or_else(|| Error::Invalid("tower flattening failed".into()))?;
        let mut modulus: Vec<u32> = coeffs.iter().map(|c| prime.neg(c).code()).collect();
        modulus.push(1);
        let ff = FiniteField::new(p, modulus)?;
        // image of the base generator y (a constant tower element)
        let y = if m > 1 { Elem::Fin(p) } else { Elem::Fin(0) };
        let yv = to_vec(&[y]);
        let ycoeffs = mat.transpose().solve(&yv).unwrap();
        let img = ff.from_residue(&ycoeffs.iter().map(|c| c.code()).collect::<Vec<_>>());
        return Ok(Kind::Finite { ff, tower: Some((base.clone(), img)) });
    }
    Err(Error::ReducibleModulus)
}

/// Helper for rationals: the exact value of a rational-field element.
pub fn as_rational(e: &Elem) -> Option<&BigRational> {
    match e {
        Elem::Rat(r) => Some(r),
        _ => None,
    }
}

pub fn rational_is_negative(e: &Elem) -> bool {
    matches!(e, Elem::Rat(r) if r.is_negative())
}
