//! Table-driven arithmetic for GF(p^n).
//!
//! Elements are encoded as `u32` codes `c_0 + c_1 p + ... + c_{n-1} p^{n-1}`
//! where `c_0 + c_1 y + ... + c_{n-1} y^{n-1}` is the residue modulo the
//! (flattened) modulus. Code order is the canonical element order used by
//! every enumeration in the crate.

use crate::error::{Error, Result};

/// Largest field order for which log/exp tables are built.
pub const MAX_TABLE_SIZE: u64 = 1 << 22;

#[derive(Debug, Clone)]
pub struct FiniteField {
    p: u32,
    degree: usize,
    size: u32,
    /// Monic modulus over GF(p), low to high, length `degree + 1`.
    modulus: Vec<u32>,
    /// `exp[k] = g^k` for a primitive element `g`, `k < size - 1`.
    exp: Vec<u32>,
    /// `log[a]` for `a != 0`; `log[0]` is unused.
    log: Vec<u32>,
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

impl FiniteField {
    /// GF(p^n) with the given monic modulus over GF(p). Irreducibility is the
    /// caller's responsibility; a reducible modulus is detected here only
    /// through the failure to find a primitive element.
    pub(crate) fn new(p: u32, modulus: Vec<u32>) -> Result<Self> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        let degree = modulus.len() - 1;
        let size64 = (p as u64).checked_pow(degree as u32).unwrap_or(u64::MAX);
        if degree > 1 && size64 > MAX_TABLE_SIZE {
            return Err(Error::TooLarge(format!("GF({p}^{degree}) exceeds the table limit")));
        }
        if size64 > u32::MAX as u64 {
            return Err(Error::TooLarge(format!("GF({p}^{degree})")));
        }
        let size = size64 as u32;
        let mut f = FiniteField { p, degree, size, modulus, exp: Vec::new(), log: Vec::new() };
        if degree == 1 {
            if size64 <= MAX_TABLE_SIZE {
                f.build_tables()?;
            }
        } else {
            f.build_tables()?;
        }
        Ok(f)
    }

    pub fn prime(p: u32) -> Result<Self> {
        Self::new(p, vec![0, 1])
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn size(&self) -> u32 {
        self.size
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    fn digits(&self, mut a: u32) -> Vec<u32> {
        let mut d = vec![0; self.degree];
        for x in d.iter_mut() {
            *x = a % self.p;
            a /= self.p;
        }
        d
    }

    pub fn residue(&self, a: u32) -> Vec<u32> {
        self.digits(a)
    }

    pub fn from_residue(&self, r: &[u32]) -> u32 {
        // reduce if longer than degree
        let mut poly: Vec<u32> = r.iter().map(|c| c % self.p).collect();
        self.reduce_poly(&mut poly);
        let mut code = 0u32;
        for i in (0..self.degree).rev() {
            code = code * self.p + poly.get(i).copied().unwrap_or(0);
        }
        code
    }

    fn reduce_poly(&self, poly: &mut Vec<u32>) {
        let p = self.p as u64;
        let n = self.degree;
        while poly.len() > n {
            let lead = poly.pop().unwrap() as u64;
            if lead == 0 {
                continue;
            }
            let off = poly.len() - n;
            for i in 0..n {
                let m = self.modulus[i] as u64;
                let cur = poly[off + i] as u64;
                poly[off + i] = ((cur + p * p - (lead * m) % p) % p) as u32;
            }
        }
    }

    fn mul_slow(&self, a: u32, b: u32) -> u32 {
        if self.degree == 1 {
            return ((a as u64 * b as u64) % self.p as u64) as u32;
        }
        let da = self.digits(a);
        let db = self.digits(b);
        let p = self.p as u64;
        let mut prod = vec![0u32; 2 * self.degree - 1];
        for (i, &x) in da.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = ((prod[i + j] as u64 + x as u64 * y as u64) % p) as u32;
            }
        }
        self.from_residue(&prod)
    }

    fn build_tables(&mut self) -> Result<()> {
        let q = self.size as usize;
        if q == 2 {
            self.exp = vec![1];
            self.log = vec![0, 0];
            return Ok(());
        }
        let factors = prime_factors(q as u64 - 1);
        let order_is_full = |g: u32| -> bool {
            factors.iter().all(|&r| self.pow_slow(g, (q as u64 - 1) / r) != 1)
        };
        let mut gen = None;
        for g in 1..self.size {
            if order_is_full(g) {
                gen = Some(g);
                break;
            }
        }
        let g = gen.ok_or(Error::ReducibleModulus)?;
        let mut exp = Vec::with_capacity(q - 1);
        let mut log = vec![0u32; q];
        let mut x = 1u32;
        for k in 0..q - 1 {
            exp.push(x);
            if k > 0 && x == 1 {
                return Err(Error::ReducibleModulus);
            }
            log[x as usize] = k as u32;
            x = self.mul_slow(x, g);
        }
        if x != 1 {
            return Err(Error::ReducibleModulus);
        }
        self.exp = exp;
        self.log = log;
        Ok(())
    }

    fn pow_slow(&self, a: u32, mut e: u64) -> u32 {
        let mut base = a;
        let mut acc = 1u32;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_slow(acc, base);
            }
            base = self.mul_slow(base, base);
            e >>= 1;
        }
        acc
    }

    /// A primitive element (generator of the multiplicative group).
    pub fn primitive(&self) -> u32 {
        if !self.exp.is_empty() {
            return if self.exp.len() > 1 { self.exp[1] } else { 1 };
        }
        let q = self.size as u64;
        let factors = prime_factors(q - 1);
        (1..self.size)
            .find(|&g| factors.iter().all(|&r| self.pow_slow(g, (q - 1) / r) != 1))
            .unwrap_or(1)
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        if self.degree == 1 {
            let s = a as u64 + b as u64;
            let p = self.p as u64;
            return if s >= p { (s - p) as u32 } else { s as u32 };
        }
        if self.p == 2 {
            return a ^ b;
        }
        let p = self.p;
        let (mut a, mut b) = (a, b);
        let mut out = 0u32;
        let mut place = 1u32;
        for _ in 0..self.degree {
            let s = (a % p + b % p) % p;
            out += s * place;
            place = place.wrapping_mul(p);
            a /= p;
            b /= p;
        }
        out
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if self.degree == 1 {
            return if a == 0 { 0 } else { self.p - a };
        }
        if self.p == 2 {
            return a;
        }
        let p = self.p;
        let mut a = a;
        let mut out = 0u32;
        let mut place = 1u32;
        for _ in 0..self.degree {
            let c = a % p;
            out += ((p - c) % p) * place;
            place = place.wrapping_mul(p);
            a /= p;
        }
        out
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        if self.degree == 1 {
            return ((a as u64 * b as u64) % self.p as u64) as u32;
        }
        let n = self.size - 1;
        let s = self.log[a as usize] + self.log[b as usize];
        self.exp[(if s >= n { s - n } else { s }) as usize]
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        if !self.log.is_empty() {
            let n = self.size - 1;
            let l = self.log[a as usize];
            return Some(self.exp[((n - l) % n) as usize]);
        }
        // extended Euclid in the prime field
        let p = self.p as i64;
        let (mut r0, mut r1) = (p, a as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        Some(t0.rem_euclid(p) as u32)
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        if !self.log.is_empty() {
            let n = (self.size - 1) as u64;
            let l = self.log[a as usize] as u64;
            return self.exp[((l * (e % n)) % n) as usize];
        }
        self.pow_slow(a, e)
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> u32 {
        n.rem_euclid(self.p as i64) as u32
    }
}
