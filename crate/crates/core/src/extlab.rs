//! Experiments separating algebraic from transcendental extensions.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::alg::EnumConfig;
use crate::coalg::Coalgebra;
use crate::comodprod::{vanishing_check, Family};
use crate::error::{Error, Result};
use crate::field::{Elem, Embedding, Field, FieldDescriptor};
use crate::linalg::{Echelon, Matrix};

/// Dimension over `k` of the unital `k`-algebra generated by matrices over
/// a finite extension `k'` (the target of `e`). Entries are flattened to
/// prime-field coordinates; the span is kept closed under `k` by inserting
/// `β·w` for a prime-field basis `β` of `k`.
pub fn generated_algebra_dimension(e: &Embedding, gens: &[Matrix], cap: usize) -> Result<usize> {
    let k = e.source();
    let kp = e.target();
    if !kp.is_finite() || !k.is_finite() {
        return Err(Error::UnsupportedField("generated algebra dimension needs finite fields".into()));
    }
    let d = match gens.first() {
        Some(g) => g.rows(),
        None => 1,
    };
    for g in gens {
        kp.check_same(g.field())?;
        if g.rows() != d || g.cols() != d {
            return Err(Error::DimensionMismatch("generators must be square of one size".into()));
        }
    }
    let fp = Field::prime(kp.characteristic())?;
    let deg_k = k.degree().unwrap_or(1);
    let deg_kp = kp.degree().unwrap_or(1);
    let beta: Vec<Elem> = match k.generator() {
        Some(gk) => {
            let img = e.map(&gk);
            (0..deg_k).map(|i| kp.pow(&img, i as u64)).collect()
        }
        None => vec![kp.one()],
    };
    let flatten = |m: &Matrix| -> Vec<Elem> {
        m.data().iter().flat_map(|x| kp.residue(x)).map(Elem::Fin).collect()
    };
    let mut ech = Echelon::new(&fp, d * d * deg_kp);
    let mut queue = vec![Matrix::identity(kp, d)];
    while let Some(w) = queue.pop() {
        if !ech.insert(&flatten(&w)) {
            continue;
        }
        for b in beta.iter().skip(1) {
            ech.insert(&flatten(&w.scale(b)));
        }
        if ech.dim() / deg_k > cap {
            return Err(Error::TooLarge(format!("generated algebra exceeds {cap} dimensions")));
        }
        for g in gens {
            queue.push(w.mul(g));
        }
    }
    Ok(ech.dim() / deg_k)
}

fn ratfun_field(p: u32) -> Result<Field> {
    let base = if p == 0 { FieldDescriptor::Rationals } else { FieldDescriptor::prime(p) };
    Field::new(&FieldDescriptor::rational_functions(base, "t"))
}

/// Base-field coordinates of a matrix of polynomials in `t`, entry by
/// entry, padded to `len` coefficients.
fn poly_coordinates(f: &Field, m: &Matrix, len: usize) -> Result<Vec<Elem>> {
    let (base, _) = f.ratfun_base().expect("rational-function field");
    let mut out = Vec::with_capacity(m.data().len() * len);
    for x in m.data() {
        let (num, den) = f.ratfun_parts(x);
        if den.len() != 1 || num.len() > len {
            return Err(Error::Invalid("expected polynomial entries of bounded degree".into()));
        }
        let inv = base.inv(&den[0]);
        for i in 0..len {
            out.push(num.get(i).map_or_else(|| base.zero(), |c| base.mul(c, &inv)));
        }
    }
    Ok(out)
}

/// `M = [[t, -t+t²], [0, -t]]` over `GF(p)(t)` (`Q(t)` for `p = 0`).
pub fn power_witness_matrix(p: u32) -> Result<Matrix> {
    let f = ratfun_field(p)?;
    let (base, _) = f.ratfun_base().expect("rational-function field");
    let t = f.variable().expect("variable");
    let b = f.ratfun_from_poly(vec![base.zero(), base.from_int(-1), base.one()]);
    Ok(Matrix::new(&f, 2, 2, vec![t.clone(), b, f.zero(), f.neg(&t)]))
}

/// Dimensions over the base field of `span{M, …, Mⁿ}` for `n = 1..=N`.
pub fn matrix_power_span_growth(p: u32, n: usize) -> Result<Vec<usize>> {
    let m = power_witness_matrix(p)?;
    span_growth(&m, n, 2)
}

fn span_growth(m: &Matrix, n: usize, degree_per_power: usize) -> Result<Vec<usize>> {
    let f = m.field().clone();
    let (base, _) = f.ratfun_base().expect("rational-function field");
    let len = degree_per_power * n + 1;
    let mut ech = Echelon::new(base, m.data().len() * len);
    let mut power = m.clone();
    let mut dims = Vec::with_capacity(n);
    for _ in 0..n {
        ech.insert(&poly_coordinates(&f, &power, len)?);
        dims.push(ech.dim());
        power = power.mul(m);
    }
    Ok(dims)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NilpotentWitness {
    pub dims: Vec<usize>,
    pub x_square_zero: bool,
    pub conjugate_square_zero: bool,
    pub product_nilpotent: bool,
}

/// `x = e₁₂` and `x' = t·e₂₁` are square-zero while `x x' = t·e₁₁` is not
/// nilpotent; returns the base-field span dimensions of its powers.
pub fn nilpotent_witness_span(p: u32, n: usize) -> Result<NilpotentWitness> {
    let f = ratfun_field(p)?;
    let t = f.variable().expect("variable");
    let x = Matrix::unit(&f, 2, 0, 1);
    let xp = Matrix::unit(&f, 2, 1, 0).scale(&t);
    let y = x.mul(&xp);
    let dims = span_growth(&y, n, 1)?;
    Ok(NilpotentWitness {
        dims,
        x_square_zero: x.mul(&x).is_zero(),
        conjugate_square_zero: xp.mul(&xp).is_zero(),
        product_nilpotent: y.mul(&y).is_zero(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterCheck {
    pub checked: usize,
    /// Coefficient lists (low degree first) of polynomials vanishing at `t`.
    pub zeros: Vec<Vec<u32>>,
}

/// Evaluates every nonzero polynomial of degree `≤ D` over `GF(p)` at the
/// transcendental `t ∈ GF(p)(t)`.
pub fn transcendental_character_check(p: u32, degree: usize) -> Result<CharacterCheck> {
    let f = ratfun_field(p)?;
    let (base, _) = f.ratfun_base().expect("rational-function field");
    let t = f.variable().expect("variable");
    let count = (p as u64)
        .checked_pow(degree as u32 + 1)
        .filter(|&c| c <= 1 << 24)
        .ok_or_else(|| Error::TooLarge(format!("{p}^{} polynomials", degree + 1)))?;
    let mut zeros = Vec::new();
    for idx in 1..count {
        let mut coeffs = Vec::with_capacity(degree + 1);
        let mut r = idx;
        for _ in 0..=degree {
            coeffs.push((r % p as u64) as u32);
            r /= p as u64;
        }
        let mut v = f.zero();
        for c in coeffs.iter().rev() {
            v = f.add(&f.mul(&v, &t), &f.ratfun_from_poly(vec![base.from_int(*c as i64)]));
        }
        if f.is_zero(&v) {
            zeros.push(coeffs);
        }
    }
    Ok(CharacterCheck { checked: (count - 1) as usize, zeros })
}

/// The family `(GF(p^n)*)_{n ∈ exts}` of dual-field coalgebras over `GF(p)`.
pub fn dual_field_family(p: u32, exts: &[usize]) -> Result<Family> {
    let base = Field::prime(p)?;
    let mut members = Vec::new();
    let mut names = Vec::new();
    for &n in exts {
        let big = Field::gf(p, n)?;
        let e = Embedding::find(&base, &big)?;
        members.push(Coalgebra::dual_field(&e)?);
        names.push(format!("GF({}^{n})*", p));
    }
    Family::named(members, names)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "experiment", rename_all = "snake_case")]
pub enum Experiment {
    MatrixSpan { p: u32, n: usize },
    Nilpotent { p: u32, n: usize },
    Character { p: u32, degree: usize },
    /// The extended check runs at level 1 over `GF(p^m)`.
    Dualfields { p: u32, exts: Vec<usize>, d: usize, m: usize },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WitnessReport {
    pub experiment: Experiment,
    pub verdict: String,
    pub evidence: Value,
    pub witnesses: Value,
}

fn growth_verdict(dims: &[usize]) -> String {
    if dims.windows(2).all(|w| w[0] < w[1]) {
        format!("strictly increasing through N = {}", dims.len())
    } else {
        "not strictly increasing".into()
    }
}

pub fn run_experiment(x: &Experiment, cfg: &EnumConfig) -> Result<WitnessReport> {
    let (verdict, evidence, witnesses) = match x {
        Experiment::MatrixSpan { p, n } => {
            let dims = matrix_power_span_growth(*p, *n)?;
            let m = power_witness_matrix(*p)?;
            (growth_verdict(&dims), json!({ "dims": dims }), json!({ "matrix": m.format_rows() }))
        }
        Experiment::Nilpotent { p, n } => {
            let w = nilpotent_witness_span(*p, *n)?;
            let ok = w.x_square_zero && w.conjugate_square_zero && !w.product_nilpotent;
            let verdict = if ok { growth_verdict(&w.dims) } else { "witness matrices malformed".into() };
            (verdict, serde_json::to_value(&w).expect("plain data"), json!({ "x": "e12", "x_prime": "t*e21" }))
        }
        Experiment::Character { p, degree } => {
            let c = transcendental_character_check(*p, *degree)?;
            let verdict = if c.zeros.is_empty() {
                format!("not in the extended finite dual at level {degree}")
            } else {
                "character annihilates a polynomial".into()
            };
            (verdict, serde_json::to_value(&c).expect("plain data"), json!({ "character": "x -> t" }))
        }
        Experiment::Dualfields { p, exts, d, m } => {
            let fam = dual_field_family(*p, exts)?;
            let base = vanishing_check(&fam, *d, cfg)?;
            let big = Field::gf(*p, *m)?;
            let e = Embedding::find(fam.field(), &big)?;
            let ext_fam = fam.scalar_extend(&e)?;
            let ext = vanishing_check(&ext_fam, 1, cfg)?;
            let verdict = match (base.vanishes, ext.vanishes) {
                (true, false) => "vanishes over the base field, not after extension",
                (true, true) => "vanishes on both sides",
                (false, false) => "nonzero on both sides",
                (false, true) => "nonzero over the base field only",
            };
            let witness = |r: &Option<crate::alg::Representation>, fam: &Family| {
                r.as_ref().map(|r| serde_json::to_value(r.to_json(&fam.free_product().presentation)).expect("plain data"))
            };
            (
                verdict.to_string(),
                json!({
                    "base_level": d,
                    "base_vanishes": base.vanishes,
                    "extended_field": format!("GF({p}^{m})"),
                    "extended_level": 1,
                    "extended_vanishes": ext.vanishes,
                }),
                json!({ "base": witness(&base.witness, &fam), "extended": witness(&ext.witness, &ext_fam) }),
            )
        }
    };
    Ok(WitnessReport { experiment: x.clone(), verdict, evidence, witnesses })
}

impl WitnessReport {
    /// Reruns the experiment and compares every recorded field.
    pub fn revalidate(&self, cfg: &EnumConfig) -> Result<bool> {
        Ok(&run_experiment(&self.experiment, cfg)? == self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn m_squared_is_scalar() {
        let m = power_witness_matrix(2).unwrap();
        let f = m.field().clone();
        let t = f.variable().unwrap();
        assert_eq!(m.mul(&m), Matrix::scalar(&f, 2, &f.mul(&t, &t)));
    }

    #[test]
    fn growth_over_gf2() {
        assert_eq!(matrix_power_span_growth(2, 8).unwrap(), (1..=8).collect::<Vec<_>>());
        assert_eq!(nilpotent_witness_span(2, 6).unwrap().dims, (1..=6).collect::<Vec<_>>());
    }

    #[test]
    fn characters() {
        let c = transcendental_character_check(2, 3).unwrap();
        assert_eq!((c.checked, c.zeros.len()), (15, 0));
        let c = transcendental_character_check(3, 2).unwrap();
        assert_eq!((c.checked, c.zeros.len()), (26, 0));
    }

    #[test]
    fn generated_algebras() {
        let f2 = Field::prime(2).unwrap();
        let f4 = Field::gf(2, 2).unwrap();
        let e = Embedding::find(&f2, &f4).unwrap();
        let alpha = f4.generator().unwrap();
        let a = Matrix::scalar(&f4, 1, &alpha);
        assert_eq!(generated_algebra_dimension(&e, &[a], 16).unwrap(), 2);
        assert_eq!(generated_algebra_dimension(&e, &[Matrix::identity(&f4, 2)], 16).unwrap(), 1);
    }
}
