//! Comodules, joint comodules over a family of coalgebras, and the
//! dimension-truncated product of a family.
//!
//! A right `C`-comodule `V` with `ρ(x_a) = Σ (R_k)_{ba} x_b ⊗ e_k` is stored by
//! its slices `R_k`; `e_k*` then acts on `V` by `R_k`, which turns comodules
//! into modules over the dual algebra. Joint comodules of a family are the
//! representations of the free product of the dual algebras, and the
//! truncated product is the coefficient coalgebra of all of them up to a
//! dimension bound.

use serde::{Deserialize, Serialize};

use crate::alg::{
    coefficient_span, conjugation_orbits, enumerate_representations, is_simple, CoefficientSpan, EnumConfig,
    FreeProduct, Representation, RepresentationJson,
};
use crate::coalg::{Coalgebra, CoalgebraJson, FinAlgebra};
use crate::error::{Error, Result};
use crate::field::{Elem, Embedding, Field};
use crate::linalg::Matrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comodule {
    coalgebra: Coalgebra,
    dim: usize,
    slices: Vec<Matrix>,
}

impl Comodule {
    /// Builds and checks a comodule from its slices `R_0..R_{n-1}`.
    pub fn new(c: &Coalgebra, dim: usize, slices: Vec<Matrix>) -> Result<Comodule> {
        let v = Comodule { coalgebra: c.clone(), dim, slices };
        v.validate()?;
        Ok(v)
    }

    /// The coaction as a `(v·n) × v` matrix; row `b·n + k`, column `a` holds
    /// the coefficient of `x_b ⊗ e_k` in `ρ(x_a)`.
    pub fn coaction_matrix(&self) -> Matrix {
        let f = self.coalgebra.field();
        let n = self.coalgebra.dim();
        let mut m = Matrix::zeros(f, self.dim * n, self.dim);
        for (k, r) in self.slices.iter().enumerate() {
            for b in 0..self.dim {
                for a in 0..self.dim {
                    m.set(b * n + k, a, r.get(b, a).clone());
                }
            }
        }
        m
    }

    pub fn from_coaction_matrix(c: &Coalgebra, m: &Matrix) -> Result<Comodule> {
        let n = c.dim();
        let v = m.cols();
        if m.rows() != v * n {
            return Err(Error::DimensionMismatch(format!("coaction of shape {}x{}", m.rows(), m.cols())));
        }
        let slices = (0..n)
            .map(|k| {
                let mut r = Matrix::zeros(c.field(), v, v);
                for b in 0..v {
                    for a in 0..v {
                        r.set(b, a, m.get(b * n + k, a).clone());
                    }
                }
                r
            })
            .collect();
        Comodule::new(c, v, slices)
    }

    /// `C` coacting on itself by `Δ`.
    pub fn regular(c: &Coalgebra) -> Comodule {
        let f = c.field();
        let n = c.dim();
        let mut slices = vec![Matrix::zeros(f, n, n); n];
        for (a, b, k, x) in c.entries() {
            slices[k].set(b, a, x);
        }
        Comodule { coalgebra: c.clone(), dim: n, slices }
    }

    pub fn coalgebra(&self) -> &Coalgebra {
        &self.coalgebra
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn slices(&self) -> &[Matrix] {
        &self.slices
    }

    /// Coassociativity and counitality of the coaction, in the equivalent
    /// form `R_i R_j = Σ_k μ_k^{ij} R_k` and `Σ ε(e_k) R_k = 1`.
    pub fn validate(&self) -> Result<()> {
        let c = &self.coalgebra;
        let f = c.field();
        let n = c.dim();
        if self.slices.len() != n {
            return Err(Error::DimensionMismatch(format!("{} slices for a coalgebra of dim {n}", self.slices.len())));
        }
        for r in &self.slices {
            f.check_same(r.field())?;
            if r.rows() != self.dim || r.cols() != self.dim {
                return Err(Error::DimensionMismatch(format!("slice is not {0}x{0}", self.dim)));
            }
        }
        let v = self.dim;
        let mut expected = vec![vec![Matrix::zeros(f, v, v); n]; n];
        for (k, i, j, x) in c.entries() {
            expected[i][j] = expected[i][j].add(&self.slices[k].scale(&x));
        }
        for i in 0..n {
            for j in 0..n {
                if self.slices[i].mul(&self.slices[j]) != expected[i][j] {
                    return Err(Error::Violation(format!("coaction is not coassociative at ({i},{j})")));
                }
            }
        }
        let mut unit = Matrix::zeros(f, v, v);
        for (k, e) in c.counit().iter().enumerate() {
            unit = unit.add(&self.slices[k].scale(e));
        }
        if !unit.is_identity() {
            return Err(Error::Violation("coaction is not counital".into()));
        }
        Ok(())
    }

    pub fn to_json(&self) -> ComoduleJson {
        ComoduleJson {
            coalgebra: self.coalgebra.to_json(),
            dim: self.dim,
            slices: self.slices.iter().map(Matrix::format_rows).collect(),
        }
    }

    pub fn from_json(j: &ComoduleJson) -> Result<Comodule> {
        let c = Coalgebra::from_json(&j.coalgebra)?;
        let slices = j.slices.iter().map(|s| Matrix::parse_rows(c.field(), s)).collect::<Result<Vec<_>>>()?;
        if j.dim == 0 || slices.iter().any(|s| s.rows() != j.dim) {
            return Err(Error::Parse("slice shapes do not match dim".into()));
        }
        Comodule::new(&c, j.dim, slices)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComoduleJson {
    pub coalgebra: CoalgebraJson,
    pub dim: usize,
    pub slices: Vec<Vec<Vec<String>>>,
}

/// The presentation of `C*` whose representations are the `C`-comodules.
pub fn dual_presentation(c: &Coalgebra) -> Result<FreeProduct> {
    FreeProduct::new(&[c.dual_algebra()?])
}

/// The `C*`-module of a comodule, with `e_k*` acting by `R_k`.
pub fn comodule_to_rep(fp: &FreeProduct, v: &Comodule) -> Result<Representation> {
    check_factor(fp, 0, v.coalgebra())?;
    fp.from_factor_actions(&[v.slices.clone()])
}

pub fn rep_to_comodule(fp: &FreeProduct, c: &Coalgebra, r: &Representation) -> Result<Comodule> {
    check_factor(fp, 0, c)?;
    r.validate(&fp.presentation)?;
    Comodule::new(c, r.dim(), fp.factor_action(r, 0))
}

fn check_factor(fp: &FreeProduct, i: usize, c: &Coalgebra) -> Result<()> {
    let fd = fp
        .factors
        .get(i)
        .ok_or_else(|| Error::Precondition(format!("free product has no factor {i}")))?;
    if fd.algebra != c.dual_algebra()? {
        return Err(Error::Precondition(format!("factor {i} is not the dual algebra of the given coalgebra")));
    }
    Ok(())
}

/// A nonempty family of coalgebras over one field, with the presentation of
/// the free product of their dual algebras.
#[derive(Clone, Debug)]
pub struct Family {
    members: Vec<Coalgebra>,
    names: Vec<String>,
    product: FreeProduct,
}

impl Family {
    pub fn new(members: Vec<Coalgebra>) -> Result<Family> {
        let names = (0..members.len()).map(|i| format!("C{}", i + 1)).collect();
        Family::named(members, names)
    }

    pub fn named(members: Vec<Coalgebra>, names: Vec<String>) -> Result<Family> {
        if members.is_empty() {
            return Err(Error::Precondition("empty family; use the trivial coalgebra explicitly".into()));
        }
        if names.len() != members.len() {
            return Err(Error::DimensionMismatch("one name per family member".into()));
        }
        for c in &members {
            c.validate()?;
        }
        let duals = members.iter().map(Coalgebra::dual_algebra).collect::<Result<Vec<FinAlgebra>>>()?;
        let product = FreeProduct::new(&duals)?;
        Ok(Family { members, names, product })
    }

    pub fn field(&self) -> &Field {
        self.members[0].field()
    }

    pub fn members(&self) -> &[Coalgebra] {
        &self.members
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn free_product(&self) -> &FreeProduct {
        &self.product
    }

    /// The first `k` members.
    pub fn prefix(&self, k: usize) -> Result<Family> {
        Family::named(self.members[..k].to_vec(), self.names[..k].to_vec())
    }

    pub fn scalar_extend(&self, e: &Embedding) -> Result<Family> {
        let members = self.members.iter().map(|c| c.scalar_extend(e)).collect::<Result<Vec<_>>>()?;
        Family::named(members, self.names.clone())
    }

    /// Dimensions `e` admitting a module over every dual algebra: each must
    /// be a sum of that algebra's simple-module dimensions. Other dimensions
    /// carry no joint comodule, so they are never enumerated.
    pub fn admissible(&self, e: usize) -> Result<bool> {
        for fd in &self.product.factors {
            let dims = fd.algebra.simple_module_dims()?;
            let mut reach = vec![false; e + 1];
            reach[0] = true;
            for s in 1..=e {
                reach[s] = dims.iter().any(|&k| k <= s && reach[s - k]);
            }
            if !reach[e] {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// One comodule structure per family member on a shared space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JointComodule {
    pub dim: usize,
    pub structures: Vec<Comodule>,
}

impl JointComodule {
    pub fn new(structures: Vec<Comodule>) -> Result<JointComodule> {
        let dim = structures
            .first()
            .map(Comodule::dim)
            .ok_or_else(|| Error::Precondition("joint comodule over an empty family".into()))?;
        if structures.iter().any(|s| s.dim() != dim) {
            return Err(Error::DimensionMismatch("structures on spaces of different dimensions".into()));
        }
        Ok(JointComodule { dim, structures })
    }

    pub fn from_rep(fam: &Family, r: &Representation) -> Result<JointComodule> {
        let fp = fam.free_product();
        r.validate(&fp.presentation)?;
        let structures = fam
            .members
            .iter()
            .enumerate()
            .map(|(i, c)| Comodule::new(c, r.dim(), fp.factor_action(r, i)))
            .collect::<Result<Vec<_>>>()?;
        JointComodule::new(structures)
    }

    pub fn to_rep(&self, fam: &Family) -> Result<Representation> {
        let actions: Vec<Vec<Matrix>> = self.structures.iter().map(|s| s.slices.clone()).collect();
        if actions.len() != fam.members.len() {
            return Err(Error::DimensionMismatch("one structure per family member".into()));
        }
        let fp = fam.free_product();
        if fp.presentation.generators().is_empty() {
            return Representation::of_dim(&fp.presentation, self.dim, vec![]);
        }
        fp.from_factor_actions(&actions)
    }
}

/// Representatives of the conjugation classes of `e`-dimensional joint
/// comodules, each the lexicographically least member of its class.
pub fn class_representatives(fam: &Family, e: usize, cfg: &EnumConfig) -> Result<Vec<Representation>> {
    if !fam.admissible(e)? {
        return Ok(vec![]);
    }
    let p = &fam.free_product().presentation;
    let reps = enumerate_representations(p, e, cfg)?;
    let orbits = conjugation_orbits(p, &reps)?;
    Ok(orbits.into_iter().map(|o| reps[o[0]].clone()).collect())
}

#[derive(Clone, Debug)]
pub struct Census {
    /// `(e, classes)` for `e = 1..=d`, classes given by canonical representatives.
    pub levels: Vec<(usize, Vec<Representation>)>,
}

impl Census {
    pub fn count(&self, e: usize) -> usize {
        self.levels.iter().find(|(k, _)| *k == e).map_or(0, |(_, c)| c.len())
    }

    pub fn counts(&self) -> Vec<(usize, usize)> {
        self.levels.iter().map(|(e, c)| (*e, c.len())).collect()
    }
}

/// Isomorphism classes of simple joint comodules of each dimension up to
/// `d`. The enumerated set is closed under conjugation and the conjugation
/// search runs over generators of `GL_e`, so orbits are exactly the
/// isomorphism classes.
pub fn enumerate_simple_joint(fam: &Family, d: usize, cfg: &EnumConfig) -> Result<Census> {
    if !fam.field().is_finite() {
        return Err(Error::UnsupportedField("census needs a finite field".into()));
    }
    let mut levels = Vec::new();
    for e in 1..=d {
        let mut simple = Vec::new();
        for r in class_representatives(fam, e, cfg)? {
            if is_simple(&r)? {
                simple.push(r);
            }
        }
        levels.push((e, simple));
    }
    Ok(Census { levels })
}

#[derive(Clone, Debug)]
pub struct TruncatedProduct {
    pub d: usize,
    pub span: Option<CoefficientSpan>,
    /// `None` when the carrier is too large to materialize.
    pub carrier: Option<Coalgebra>,
    pub carrier_dim: usize,
    /// `π_i` as `dim C_i × carrier_dim` matrices.
    pub projections: Vec<Matrix>,
    /// Contributing representations (class representatives).
    pub provenance: Vec<Representation>,
    /// False when the representations were supplied rather than enumerated.
    pub exhaustive: bool,
}

impl TruncatedProduct {
    /// Whether every projection is a coalgebra morphism.
    pub fn projections_are_morphisms(&self, fam: &Family) -> Option<bool> {
        let carrier = self.carrier.as_ref()?;
        Some(fam.members.iter().zip(&self.projections).all(|(c, p)| carrier.is_morphism(c, p)))
    }
}

/// The coefficient coalgebra of all joint comodules of dimension `≤ d`.
pub fn truncated_product(fam: &Family, d: usize, cfg: &EnumConfig) -> Result<TruncatedProduct> {
    if d == 0 {
        return Err(Error::Precondition("degree bound must be at least 1".into()));
    }
    if !fam.field().is_finite() {
        return Err(Error::UnsupportedField(
            "enumeration needs a finite field; use truncated_product_of with supplied comodules".into(),
        ));
    }
    let mut reps = Vec::new();
    for e in 1..=d {
        reps.extend(class_representatives(fam, e, cfg)?);
    }
    assemble(fam, d, reps, cfg, true)
}

/// The truncated product relative to the supplied joint comodules, for
/// fields where enumeration is unavailable.
pub fn truncated_product_of(fam: &Family, joint: &[JointComodule], cfg: &EnumConfig) -> Result<TruncatedProduct> {
    let reps = joint.iter().map(|j| j.to_rep(fam)).collect::<Result<Vec<_>>>()?;
    let d = reps.iter().map(Representation::dim).max().unwrap_or(0);
    assemble(fam, d, reps, cfg, false)
}

fn assemble(fam: &Family, d: usize, reps: Vec<Representation>, cfg: &EnumConfig, exhaustive: bool) -> Result<TruncatedProduct> {
    let f = fam.field();
    let fp = fam.free_product();
    if reps.is_empty() {
        let projections = fam.members.iter().map(|c| Matrix::zeros(f, c.dim(), 0)).collect();
        return Ok(TruncatedProduct {
            d,
            span: None,
            carrier: Some(Coalgebra::zero(f)),
            carrier_dim: 0,
            projections,
            provenance: reps,
            exhaustive,
        });
    }
    let span = coefficient_span(&fp.presentation, &reps)?;
    let n = span.dim();
    let carrier = if n <= cfg.carrier_cap { Some(span.carrier()?) } else { None };
    let projections = fp
        .factors
        .iter()
        .map(|fd| {
            let m = fd.algebra.dim();
            let gen_coords: Vec<Vec<Elem>> = std::iter::once(span.word_coordinates(&[]))
                .chain(fd.symbols.iter().map(|&s| span.word_coordinates(&[s])))
                .collect();
            let mut pi = Matrix::zeros(f, m, n);
            for j in 0..m {
                for (s, coords) in gen_coords.iter().enumerate() {
                    let c = fd.to_completed.get(s, j);
                    if f.is_zero(c) {
                        continue;
                    }
                    for (k, x) in coords.iter().enumerate() {
                        let v = f.add(pi.get(j, k), &f.mul(c, x));
                        pi.set(j, k, v);
                    }
                }
            }
            pi
        })
        .collect();
    Ok(TruncatedProduct { d, span: Some(span), carrier, carrier_dim: n, projections, provenance: reps, exhaustive })
}

/// Carrier dimensions for `d = 1..=dmax`.
pub fn dimension_profile(fam: &Family, dmax: usize, cfg: &EnumConfig) -> Result<Vec<usize>> {
    let mut out = Vec::with_capacity(dmax);
    let mut reps = Vec::new();
    for e in 1..=dmax {
        reps.extend(class_representatives(fam, e, cfg)?);
        let dim = if reps.is_empty() {
            0
        } else {
            coefficient_span(&fam.free_product().presentation, &reps)?.dim()
        };
        out.push(dim);
    }
    Ok(out)
}

/// Whether a profile grows at every step of its window.
pub fn strictly_increasing(profile: &[usize]) -> bool {
    profile.windows(2).all(|w| w[0] < w[1])
}

#[derive(Clone, Debug)]
pub struct ExtensionReport {
    pub d: usize,
    /// Dimension of the source carrier, which scalar extension preserves.
    pub source_dim: usize,
    pub extended_dim: usize,
    pub equal: bool,
    /// Carrier of the extended source into the carrier of the extended
    /// family: restriction of coefficient functionals, as an
    /// `extended_dim × source_dim` matrix over the target field.
    pub comparison: Matrix,
    pub comparison_injective: bool,
}

/// Compares the degree-`d` truncation extended along `e` with the truncation
/// of the extended family.
pub fn extension_commutation_report(fam: &Family, e: &Embedding, d: usize, cfg: &EnumConfig) -> Result<ExtensionReport> {
    if e.degree().is_none() {
        return Err(Error::Precondition(
            "extension commutation needs a finite embedding; transcendental extensions are covered by extlab".into(),
        ));
    }
    let src = truncated_product(fam, d, cfg)?;
    let ext_fam = fam.scalar_extend(e)?;
    let ext = truncated_product(&ext_fam, d, cfg)?;
    let g = e.target();
    let mut comparison = Matrix::zeros(g, ext.carrier_dim, src.carrier_dim);
    if let (Some(ss), Some(es)) = (&src.span, &ext.span) {
        // column k: the functional b_k* of the source evaluated on the
        // basis words of the extended span
        for (j, w) in es.words().iter().enumerate() {
            for (k, c) in ss.word_coordinates(w).iter().enumerate() {
                comparison.set(j, k, e.map(c));
            }
        }
    }
    let comparison_injective = comparison.rank() == src.carrier_dim;
    Ok(ExtensionReport {
        d,
        source_dim: src.carrier_dim,
        extended_dim: ext.carrier_dim,
        equal: src.carrier_dim == ext.carrier_dim,
        comparison,
        comparison_injective,
    })
}

#[derive(Clone, Debug)]
pub struct VanishingReport {
    pub d: usize,
    pub vanishes: bool,
    /// The least joint comodule found, if any.
    pub witness: Option<Representation>,
}

/// True iff no nonzero joint comodule of dimension `≤ d` exists.
pub fn vanishing_check(fam: &Family, d: usize, cfg: &EnumConfig) -> Result<VanishingReport> {
    if !fam.field().is_finite() {
        return Err(Error::UnsupportedField("vanishing check needs a finite field".into()));
    }
    let p = &fam.free_product().presentation;
    for e in 1..=d {
        if !fam.admissible(e)? {
            continue;
        }
        if let Some(r) = enumerate_representations(p, e, cfg)?.into_iter().next() {
            return Ok(VanishingReport { d, vanishes: false, witness: Some(r) });
        }
    }
    Ok(VanishingReport { d, vanishes: true, witness: None })
}

/// Report layout shared by the command-line product commands.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductReportJson {
    pub family: Vec<String>,
    pub d: usize,
    pub carrier_dim: usize,
    pub profile: Vec<usize>,
    pub simple_census: std::collections::BTreeMap<String, usize>,
    pub witnesses: Vec<RepresentationJson>,
}
