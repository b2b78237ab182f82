//! Exhaustive enumeration of representations over a finite field.
//!
//! Generators are assigned in order by a depth-first search. At each level
//! the relations that become fully assigned and are linear in the new
//! generator cut the candidates down to an affine space; otherwise all
//! `q^{d²}` matrices are scanned. Candidates at every level are visited in
//! lexicographic order of their entry codes, so the output is sorted.

use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;

use super::{PresentedAlgebra, Representation};
use crate::error::{Error, Result};
use crate::field::finite::FiniteField;
use crate::field::{Elem, Field};
use crate::linalg::Matrix;

pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Clone, Debug)]
pub struct EnumConfig {
    /// Maximum number of candidate matrices examined.
    pub budget: u64,
    /// Split the search on the first generator across threads.
    pub parallel: bool,
    /// Largest carrier whose comultiplication is materialized.
    pub carrier_cap: usize,
}

impl Default for EnumConfig {
    fn default() -> Self {
        EnumConfig { budget: DEFAULT_BUDGET, parallel: true, carrier_cap: 256 }
    }
}

impl EnumConfig {
    pub fn with_budget(budget: u64) -> Self {
        EnumConfig { budget, ..Default::default() }
    }
}

type Mat = Vec<u32>;

pub(crate) fn fmul(ff: &FiniteField, a: &[u32], b: &[u32], d: usize) -> Mat {
    let mut out = vec![0u32; d * d];
    for i in 0..d {
        for k in 0..d {
            let x = a[i * d + k];
            if x == 0 {
                continue;
            }
            for j in 0..d {
                let y = b[k * d + j];
                if y != 0 {
                    out[i * d + j] = ff.add(out[i * d + j], ff.mul(x, y));
                }
            }
        }
    }
    out
}

pub(crate) fn finv(ff: &FiniteField, a: &[u32], d: usize) -> Option<Mat> {
    let w = 2 * d;
    let mut m = vec![0u32; d * w];
    for i in 0..d {
        m[i * w..i * w + d].copy_from_slice(&a[i * d..i * d + d]);
        m[i * w + d + i] = 1;
    }
    for c in 0..d {
        let p = (c..d).find(|&r| m[r * w + c] != 0)?;
        if p != c {
            for j in 0..w {
                m.swap(p * w + j, c * w + j);
            }
        }
        let inv = ff.inv(m[c * w + c])?;
        for j in 0..w {
            m[c * w + j] = ff.mul(m[c * w + j], inv);
        }
        for r in 0..d {
            if r == c || m[r * w + c] == 0 {
                continue;
            }
            let f = m[r * w + c];
            for j in 0..w {
                let t = ff.mul(f, m[c * w + j]);
                m[r * w + j] = ff.sub(m[r * w + j], t);
            }
        }
    }
    Some((0..d).flat_map(|i| m[i * w + d..i * w + w].to_vec()).collect())
}

fn identity(d: usize) -> Mat {
    let mut m = vec![0u32; d * d];
    for i in 0..d {
        m[i * d + i] = 1;
    }
    m
}

struct CRel {
    terms: Vec<(u32, Vec<usize>)>,
}

struct Ctx<'a> {
    ff: &'a FiniteField,
    field: &'a Field,
    d: usize,
    ngen: usize,
    /// Symbol index of each generator's inverse.
    inv_sym: Vec<Option<usize>>,
    rels: Vec<CRel>,
    /// Relations whose highest generator is the level.
    by_level: Vec<Vec<usize>>,
    /// Subset of `by_level` that is affine-linear in the level's matrix.
    linear: Vec<Vec<usize>>,
    /// Filtered candidates for generators constrained only by themselves.
    fixed: Vec<Option<Vec<Mat>>>,
    counter: AtomicU64,
    budget: u64,
}

impl Ctx<'_> {
    fn word(&self, mats: &[Mat], w: &[usize]) -> Mat {
        let mut acc = identity(self.d);
        for &s in w {
            acc = fmul(self.ff, &acc, &mats[s], self.d);
        }
        acc
    }

    fn holds(&self, mats: &[Mat], r: &CRel) -> bool {
        let d = self.d;
        let mut acc = vec![0u32; d * d];
        for (c, w) in &r.terms {
            let m = self.word(mats, w);
            for (a, x) in acc.iter_mut().zip(m) {
                if x != 0 {
                    *a = self.ff.add(*a, self.ff.mul(*c, x));
                }
            }
        }
        acc.iter().all(|&x| x == 0)
    }

    fn charge(&self, n: u64) -> Result<()> {
        let used = self.counter.fetch_add(n, Ordering::Relaxed) + n;
        if used > self.budget {
            Err(Error::BudgetExceeded { budget: self.budget, required: used })
        } else {
            Ok(())
        }
    }

    /// Candidates for generator `g`, sorted.
    fn candidates(&self, g: usize, mats: &[Mat]) -> Result<Vec<Mat>> {
        let d = self.d;
        let dd = d * d;
        let q = self.ff.size() as u64;
        let f = self.field;
        if self.linear[g].is_empty() {
            let total = q.checked_pow(dd as u32).unwrap_or(u64::MAX);
            if total > self.budget {
                return Err(Error::BudgetExceeded { budget: self.budget, required: total });
            }
            let mut out = Vec::with_capacity(total as usize);
            for mut idx in 0..total {
                let mut m = vec![0u32; dd];
                for x in m.iter_mut().rev() {
                    *x = (idx % q) as u32;
                    idx /= q;
                }
                out.push(m);
            }
            return Ok(out);
        }
        // Σ c U X V + const = 0, one equation per entry per relation
        let mut rows: Vec<Vec<Elem>> = Vec::new();
        let mut rhs: Vec<Elem> = Vec::new();
        for &ri in &self.linear[g] {
            let mut coef = vec![vec![0u32; dd]; dd];
            let mut cons = vec![0u32; dd];
            for (c, w) in &self.rels[ri].terms {
                match w.iter().position(|&s| s == g) {
                    None => {
                        let m = self.word(mats, w);
                        for (a, x) in cons.iter_mut().zip(m) {
                            *a = self.ff.add(*a, self.ff.mul(*c, x));
                        }
                    }
                    Some(pos) => {
                        let u = self.word(mats, &w[..pos]);
                        let v = self.word(mats, &w[pos + 1..]);
                        for i in 0..d {
                            for j in 0..d {
                                for a in 0..d {
                                    let ua = u[i * d + a];
                                    if ua == 0 {
                                        continue;
                                    }
                                    let cu = self.ff.mul(*c, ua);
                                    for b in 0..d {
                                        let vb = v[b * d + j];
                                        if vb != 0 {
                                            let e = &mut coef[i * d + j][a * d + b];
                                            *e = self.ff.add(*e, self.ff.mul(cu, vb));
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
            for (row, c) in coef.into_iter().zip(cons) {
                rows.push(row.into_iter().map(Elem::Fin).collect());
                rhs.push(Elem::Fin(self.ff.neg(c)));
            }
        }
        let sys = Matrix::from_rows(f, rows);
        let Some(x0) = sys.solve(&rhs) else {
            return Ok(vec![]);
        };
        let kernel = sys.kernel().vectors();
        let k = kernel.len();
        let total = q.checked_pow(k as u32).unwrap_or(u64::MAX);
        if total > self.budget {
            return Err(Error::BudgetExceeded { budget: self.budget, required: total });
        }
        let base: Vec<u32> = x0.iter().map(Elem::code).collect();
        let kern: Vec<Vec<u32>> = kernel.iter().map(|v| v.iter().map(Elem::code).collect()).collect();
        let mut out = Vec::with_capacity(total as usize);
        for mut idx in 0..total {
            let mut m = base.clone();
            for kv in &kern {
                let c = (idx % q) as u32;
                idx /= q;
                if c == 0 {
                    continue;
                }
                for (x, y) in m.iter_mut().zip(kv) {
                    *x = self.ff.add(*x, self.ff.mul(c, *y));
                }
            }
            out.push(m);
        }
        out.sort_unstable();
        Ok(out)
    }

    /// Installs candidate `m` for generator `g`; false if it is rejected.
    fn place(&self, g: usize, m: Mat, mats: &mut [Mat]) -> bool {
        if let Some(s) = self.inv_sym[g] {
            match finv(self.ff, &m, self.d) {
                Some(inv) => mats[s] = inv,
                None => return false,
            }
        }
        mats[g] = m;
        self.by_level[g].iter().all(|&ri| self.holds(mats, &self.rels[ri]))
    }

    fn dfs(&self, g: usize, mats: &mut Vec<Mat>, out: &mut Vec<Vec<Mat>>) -> Result<()> {
        if g == self.ngen {
            out.push(mats.clone());
            return Ok(());
        }
        if let Some(fixed) = &self.fixed[g] {
            for m in fixed {
                self.place(g, m.clone(), mats);
                self.dfs(g + 1, mats, out)?;
            }
            return Ok(());
        }
        let cands = self.candidates(g, mats)?;
        self.charge(cands.len() as u64)?;
        for m in cands {
            if self.place(g, m, mats) {
                self.dfs(g + 1, mats, out)?;
            }
        }
        Ok(())
    }
}

/// Every representation of dimension `d` in lexicographic order of the
/// generator entries. The budget bounds the number of candidate matrices
/// examined; exceeding it is an error, never a silent truncation.
pub fn enumerate_representations(p: &PresentedAlgebra, d: usize, cfg: &EnumConfig) -> Result<Vec<Representation>> {
    let field = p.field();
    let ff = field
        .as_finite()
        .ok_or_else(|| Error::UnsupportedField(format!("enumeration over {:?}", field)))?;
    if d == 0 {
        return Err(Error::Precondition("representation dimension must be at least 1".into()));
    }
    let ngen = p.generators().len();
    let nsym = p.num_symbols();
    let sym_gen: Vec<usize> = p.symbols().iter().map(|s| s.generator).collect();
    let inv_sym: Vec<Option<usize>> = (0..ngen).map(|g| p.inverse_symbol(g)).collect();
    let mut rels = Vec::new();
    let mut by_level = vec![Vec::new(); ngen.max(1)];
    let mut linear = vec![Vec::new(); ngen.max(1)];
    let mut constant_rels = Vec::new();
    for r in p.all_relations() {
        let terms: Vec<(u32, Vec<usize>)> = r.iter().map(|(c, w)| (c.code(), w.clone())).collect();
        let top = terms.iter().flat_map(|(_, w)| w.iter().map(|&s| sym_gen[s])).max();
        let idx = rels.len();
        match top {
            None => constant_rels.push(idx),
            Some(g) => {
                by_level[g].push(idx);
                let inv = inv_sym[g];
                let is_linear = terms.iter().all(|(_, w)| {
                    w.iter().filter(|&&s| s == g).count() <= 1 && inv.map_or(true, |i| !w.contains(&i))
                }) && terms.iter().any(|(_, w)| w.contains(&g));
                if is_linear {
                    linear[g].push(idx);
                }
            }
        }
        rels.push(CRel { terms });
    }
    let independent: Vec<bool> = (0..ngen)
        .map(|g| {
            g > 0
                && by_level[g].iter().all(|&ri| {
                    rels[ri].terms.iter().all(|(_, w)| w.iter().all(|&s| sym_gen[s] == g))
                })
        })
        .collect();
    let mut ctx = Ctx {
        ff,
        field,
        d,
        ngen,
        inv_sym,
        rels,
        by_level,
        linear,
        fixed: vec![None; ngen],
        counter: AtomicU64::new(0),
        budget: cfg.budget,
    };
    let empty: Vec<Mat> = vec![Vec::new(); nsym];
    for g in (0..ngen).filter(|&g| independent[g]) {
        let cands = ctx.candidates(g, &empty)?;
        ctx.charge(cands.len() as u64)?;
        let mut scratch = empty.clone();
        let kept: Vec<Mat> = cands.into_iter().filter(|m| ctx.place(g, m.clone(), &mut scratch)).collect();
        ctx.fixed[g] = Some(kept);
    }
    let ctx = ctx;
    // relations without generators: scalars that must vanish
    if constant_rels.iter().any(|&ri| !ctx.holds(&empty, &ctx.rels[ri])) {
        return Ok(vec![]);
    }
    let raw: Vec<Vec<Mat>> = if ngen == 0 {
        vec![empty]
    } else if cfg.parallel {
        let first = ctx.candidates(0, &empty)?;
        ctx.charge(first.len() as u64)?;
        let parts: Vec<Result<Vec<Vec<Mat>>>> = first
            .into_par_iter()
            .map(|m| {
                let mut mats = empty.clone();
                let mut out = Vec::new();
                if ctx.place(0, m, &mut mats) {
                    ctx.dfs(1, &mut mats, &mut out)?;
                }
                Ok(out)
            })
            .collect();
        let mut all = Vec::new();
        for part in parts {
            all.extend(part?);
        }
        all
    } else {
        let mut mats = empty;
        let mut out = Vec::new();
        ctx.dfs(0, &mut mats, &mut out)?;
        out
    };
    Ok(raw
        .into_iter()
        .map(|mats| {
            let ms = mats
                .into_iter()
                .map(|m| Matrix::new(field, d, d, m.into_iter().map(Elem::Fin).collect()))
                .collect();
            Representation::from_parts(d, field, ms)
        })
        .collect())
}

fn gl_generators(ff: &FiniteField, d: usize) -> Vec<(Mat, Mat)> {
    let mut gens = Vec::new();
    let zeta = ff.primitive();
    if zeta != 1 {
        let mut g = identity(d);
        g[0] = zeta;
        let gi = finv(ff, &g, d).unwrap();
        gens.push((g, gi));
    }
    if d >= 2 {
        let mut t = identity(d);
        t[1] = 1;
        let ti = finv(ff, &t, d).unwrap();
        gens.push((t, ti));
        let mut c = vec![0u32; d * d];
        for i in 0..d {
            c[((i + 1) % d) * d + i] = 1;
        }
        let ci = finv(ff, &c, d).unwrap();
        gens.push((c, ci));
    }
    if d >= 3 {
        let mut s = identity(d);
        s[0] = 0;
        s[d + 1] = 0;
        s[1] = 1;
        s[d] = 1;
        gens.push((s.clone(), s));
    }
    gens
}

/// Partition of `reps` (all of one dimension, over a finite field) into
/// conjugation orbits, each listed in input order. Conjugates that are not
/// in the input are not followed.
pub fn conjugation_orbits(p: &PresentedAlgebra, reps: &[Representation]) -> Result<Vec<Vec<usize>>> {
    let field = p.field();
    let ff = field
        .as_finite()
        .ok_or_else(|| Error::UnsupportedField(format!("orbits over {:?}", field)))?;
    let ngen = p.generators().len();
    let mut orbits = Vec::new();
    let mut by_dim: HashMap<usize, Vec<usize>> = HashMap::new();
    for (i, r) in reps.iter().enumerate() {
        by_dim.entry(r.dim()).or_default().push(i);
    }
    let mut dims: Vec<usize> = by_dim.keys().copied().collect();
    dims.sort_unstable();
    let mut seen = vec![false; reps.len()];
    for d in dims {
        let idxs = &by_dim[&d];
        let gl = gl_generators(ff, d);
        let index: HashMap<Vec<u32>, usize> = idxs.iter().map(|&i| (reps[i].key(ngen), i)).collect();
        for &start in idxs {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut orbit = vec![start];
            let mut queue = vec![start];
            while let Some(i) = queue.pop() {
                let key = reps[i].key(ngen);
                let mats: Vec<&[u32]> = key.chunks(d * d).collect();
                for (g, gi) in &gl {
                    let conj: Vec<u32> = mats
                        .iter()
                        .flat_map(|m| fmul(ff, &fmul(ff, g, m, d), gi, d))
                        .collect();
                    if let Some(&j) = index.get(&conj) {
                        if !seen[j] {
                            seen[j] = true;
                            orbit.push(j);
                            queue.push(j);
                        }
                    }
                }
            }
            orbit.sort_unstable();
            orbits.push(orbit);
        }
    }
    orbits.sort_by_key(|o| o[0]);
    Ok(orbits)
}
