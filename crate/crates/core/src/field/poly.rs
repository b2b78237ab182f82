//! Dense univariate polynomials over a [`Field`], stored low degree first with
//! no trailing zeros (the zero polynomial is the empty vector).

use super::{Elem, Field};
use crate::field::finite::prime_factors;

pub type Poly = Vec<Elem>;

pub fn trim(field: &Field, f: &mut Poly) {
    while f.last().is_some_and(|c| field.is_zero(c)) {
        f.pop();
    }
}

pub fn degree(f: &[Elem]) -> Option<usize> {
    if f.is_empty() {
        None
    } else {
        Some(f.len() - 1)
    }
}

pub fn constant(field: &Field, c: Elem) -> Poly {
    let mut v = vec![c];
    trim(field, &mut v);
    v
}

pub fn x(field: &Field) -> Poly {
    vec![field.zero(), field.one()]
}

pub fn add(field: &Field, a: &[Elem], b: &[Elem]) -> Poly {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => out.push(field.add(x, y)),
            (Some(x), None) => out.push(x.clone()),
            (None, Some(y)) => out.push(y.clone()),
            (None, None) => unreachable!(),
        }
    }
    trim(field, &mut out);
    out
}

pub fn neg(field: &Field, a: &[Elem]) -> Poly {
    a.iter().map(|c| field.neg(c)).collect()
}

pub fn sub(field: &Field, a: &[Elem], b: &[Elem]) -> Poly {
    add(field, a, &neg(field, b))
}

pub fn scale(field: &Field, a: &[Elem], c: &Elem) -> Poly {
    let mut out: Poly = a.iter().map(|x| field.mul(x, c)).collect();
    trim(field, &mut out);
    out
}

pub fn mul(field: &Field, a: &[Elem], b: &[Elem]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![field.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if field.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            let t = field.mul(x, y);
            out[i + j] = field.add(&out[i + j], &t);
        }
    }
    trim(field, &mut out);
    out
}

/// Quotient and remainder; panics on a zero divisor.
pub fn divrem(field: &Field, a: &[Elem], b: &[Elem]) -> (Poly, Poly) {
    assert!(!b.is_empty(), "polynomial division by zero");
    let mut r: Poly = a.to_vec();
    trim(field, &mut r);
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let lead_inv = field.inv(b.last().unwrap());
    let mut q = vec![field.zero(); r.len() - b.len() + 1];
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let c = field.mul(r.last().unwrap(), &lead_inv);
        for (i, bc) in b.iter().enumerate() {
            let t = field.mul(&c, bc);
            r[shift + i] = field.sub(&r[shift + i], &t);
        }
        q[shift] = c;
        // the leading term cancels exactly
        r.pop();
        trim(field, &mut r);
    }
    trim(field, &mut q);
    (q, r)
}

pub fn rem(field: &Field, a: &[Elem], b: &[Elem]) -> Poly {
    divrem(field, a, b).1
}

pub fn monic(field: &Field, a: &[Elem]) -> Poly {
    match a.last() {
        None => Vec::new(),
        Some(l) => {
            let inv = field.inv(l);
            scale(field, a, &inv)
        }
    }
}

/// Monic greatest common divisor (zero if both inputs vanish).
pub fn gcd(field: &Field, a: &[Elem], b: &[Elem]) -> Poly {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(field, &mut x);
    trim(field, &mut y);
    while !y.is_empty() {
        let r = rem(field, &x, &y);
        x = y;
        y = r;
    }
    monic(field, &x)
}

pub fn eval(field: &Field, f: &[Elem], at: &Elem) -> Elem {
    let mut acc = field.zero();
    for c in f.iter().rev() {
        acc = field.add(&field.mul(&acc, at), c);
    }
    acc
}

pub fn powmod(field: &Field, base: &[Elem], mut e: u64, modulus: &[Elem]) -> Poly {
    let mut acc = rem(field, &[field.one()], modulus);
    let mut b = rem(field, base, modulus);
    while e > 0 {
        if e & 1 == 1 {
            acc = rem(field, &mul(field, &acc, &b), modulus);
        }
        b = rem(field, &mul(field, &b, &b), modulus);
        e >>= 1;
    }
    acc
}

/// Rabin's irreducibility test over a finite field.
pub fn is_irreducible(field: &Field, f: &[Elem]) -> bool {
    let q = field.size().expect("irreducibility test needs a finite field");
    let n = match degree(f) {
        None | Some(0) => return false,
        Some(n) => n,
    };
    if n == 1 {
        return true;
    }
    let xp = x(field);
    // h_k = x^{q^k} mod f
    let mut powers = Vec::with_capacity(n + 1);
    let mut h = rem(field, &xp, f);
    powers.push(h.clone());
    for _ in 0..n {
        h = powmod(field, &h, q, f);
        powers.push(h.clone());
    }
    if sub(field, &powers[n], &rem(field, &xp, f)).iter().any(|c| !field.is_zero(c)) {
        return false;
    }
    for r in prime_factors(n as u64) {
        let k = n / r as usize;
        let g = gcd(field, &sub(field, &powers[k], &xp), f);
        if g.len() != 1 {
            return false;
        }
    }
    true
}

/// Formats a polynomial in the variable `var`, highest degree first.
pub fn format(field: &Field, f: &[Elem], var: &str) -> String {
    if f.is_empty() {
        return "0".to_string();
    }
    let mut parts = Vec::new();
    for (i, c) in f.iter().enumerate().rev() {
        if field.is_zero(c) {
            continue;
        }
        let cs = field.format(c);
        let mono = match i {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{i}"),
        };
        if mono.is_empty() {
            parts.push(cs);
        } else if field.is_one(c) {
            parts.push(mono);
        } else {
            parts.push(format!("({cs})*{mono}"));
        }
    }
    parts.join(" + ")
}
