//! Submodule spinning for modules given by generator matrices acting on
//! column vectors. Simplicity and composition series are certified by
//! exhaustive search over projective points, so everything here is restricted
//! to finite fields and desk-scale dimensions.

use crate::error::{Error, Result};
use crate::field::{Elem, Field};
use crate::linalg::{Echelon, Matrix};

/// Nonzero vectors of `field^m` whose first nonzero entry is one, in
/// lexicographic order of element codes.
pub fn projective_points(field: &Field, m: usize) -> Result<impl Iterator<Item = Vec<Elem>>> {
    let q = field
        .size()
        .ok_or_else(|| Error::UnsupportedField(format!("{:?} is infinite", field)))?;
    let total = q
        .checked_pow(m as u32)
        .ok_or_else(|| Error::TooLarge(format!("{q}^{m} projective points")))?;
    Ok((1..total).filter_map(move |mut idx| {
        let mut v = vec![0u32; m];
        for x in v.iter_mut().rev() {
            *x = (idx % q) as u32;
            idx /= q;
        }
        let first = v.iter().find(|&&c| c != 0)?;
        (*first == 1).then(|| v.into_iter().map(Elem::Fin).collect())
    }))
}

/// All vectors of `field^m` in lexicographic order.
pub fn all_vectors(field: &Field, m: usize) -> Result<impl Iterator<Item = Vec<Elem>>> {
    let q = field
        .size()
        .ok_or_else(|| Error::UnsupportedField(format!("{:?} is infinite", field)))?;
    let total = q
        .checked_pow(m as u32)
        .ok_or_else(|| Error::TooLarge(format!("{q}^{m} vectors")))?;
    Ok((0..total).map(move |mut idx| {
        let mut v = vec![Elem::Fin(0); m];
        for x in v.iter_mut().rev() {
            *x = Elem::Fin((idx % q) as u32);
            idx /= q;
        }
        v
    }))
}

/// The smallest subspace containing `seeds` and stable under `gens`.
pub fn spin(field: &Field, n: usize, gens: &[Matrix], seeds: &[Vec<Elem>]) -> Echelon {
    let mut ech = Echelon::new(field, n);
    let mut queue: Vec<Vec<Elem>> = Vec::new();
    for s in seeds {
        if ech.insert(s) {
            queue.push(s.clone());
        }
    }
    while let Some(v) = queue.pop() {
        for g in gens {
            let w = g.apply(&v);
            if ech.insert(&w) {
                queue.push(w);
            }
        }
        if ech.dim() == n {
            break;
        }
    }
    ech
}

/// Whether the module `field^n` with the given action has no proper nonzero
/// submodule. Every projective point is spun.
pub fn is_simple_module(field: &Field, n: usize, gens: &[Matrix]) -> Result<bool> {
    if n == 0 {
        return Ok(false);
    }
    for v in projective_points(field, n)? {
        if spin(field, n, gens, &[v]).dim() < n {
            return Ok(false);
        }
    }
    Ok(true)
}

fn combine(field: &Field, coeffs: &[Elem], vecs: &[Vec<Elem>], n: usize) -> Vec<Elem> {
    let mut out = vec![field.zero(); n];
    for (c, v) in coeffs.iter().zip(vecs) {
        if field.is_zero(c) {
            continue;
        }
        for (o, x) in out.iter_mut().zip(v) {
            *o = field.add(o, &field.mul(c, x));
        }
    }
    out
}

/// Vectors of `top` that extend a basis of `bottom` (assumed contained).
fn extension_basis(bottom: &Echelon, top: &Echelon) -> Vec<Vec<Elem>> {
    let mut e = bottom.clone();
    top.rows().iter().filter(|r| e.insert(r)).cloned().collect()
}

/// A submodule `S` with `base ⊊ S ⊆ within` and `S / base` simple.
fn minimal_over(field: &Field, n: usize, gens: &[Matrix], base: &Echelon, within: Echelon) -> Result<Echelon> {
    let mut cur = within;
    'outer: loop {
        let extras = extension_basis(base, &cur);
        for coeffs in projective_points(field, extras.len())? {
            let v = combine(field, &coeffs, &extras, n);
            let mut seeds: Vec<Vec<Elem>> = base.rows().to_vec();
            seeds.push(v);
            let s = spin(field, n, gens, &seeds);
            if s.dim() < cur.dim() {
                cur = s;
                continue 'outer;
            }
        }
        return Ok(cur);
    }
}

/// A composition series `0 = M_0 ⊂ M_1 ⊂ ... ⊂ M_r = field^n`.
pub fn composition_series(field: &Field, n: usize, gens: &[Matrix]) -> Result<Vec<Echelon>> {
    let full = {
        let mut e = Echelon::new(field, n);
        for i in 0..n {
            let mut v = vec![field.zero(); n];
            v[i] = field.one();
            e.insert(&v);
        }
        e
    };
    let mut series = vec![Echelon::new(field, n)];
    while series.last().unwrap().dim() < n {
        let next = minimal_over(field, n, gens, series.last().unwrap(), full.clone())?;
        series.push(next);
    }
    Ok(series)
}

/// Action matrices of each generator on each composition factor, bottom up.
pub fn composition_factors(field: &Field, n: usize, gens: &[Matrix]) -> Result<Vec<Vec<Matrix>>> {
    let series = composition_series(field, n, gens)?;
    let mut out = Vec::new();
    for w in series.windows(2) {
        let (lower, upper) = (&w[0], &w[1]);
        let extras = extension_basis(lower, upper);
        let k = extras.len();
        let mut cols: Vec<Vec<Elem>> = lower.rows().to_vec();
        cols.extend(extras.iter().cloned());
        let basis = Matrix::from_columns(field, n, &cols);
        let low = lower.dim();
        let mut mats = Vec::with_capacity(gens.len());
        for g in gens {
            let mut m = Matrix::zeros(field, k, k);
            for (j, x) in extras.iter().enumerate() {
                let gx = g.apply(x);
                let coords = basis.solve(&gx).expect("series members are submodules");
                for i in 0..k {
                    m.set(i, j, coords[low + i].clone());
                }
            }
            mats.push(m);
        }
        out.push(mats);
    }
    Ok(out)
}
