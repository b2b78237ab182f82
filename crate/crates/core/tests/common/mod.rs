//! Oracles shared by the integration tests. They avoid the crate's linear
//! algebra and structure code on purpose.

#![allow(dead_code)]

use cogebra::{Coalgebra, Elem, Field};

/// Rank of a matrix over `GF(p)`, `p` prime, by plain elimination.
pub fn rank_mod(p: u64, rows: &[Vec<u64>]) -> usize {
    let mut m: Vec<Vec<u64>> = rows.iter().map(|r| r.iter().map(|x| x % p).collect()).collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..m.len()).find(|&r| m[r][c] != 0) else { continue };
        m.swap(rank, piv);
        let inv = pow_mod(m[rank][c], p - 2, p);
        for x in m[rank].iter_mut() {
            *x = *x * inv % p;
        }
        for r in 0..m.len() {
            if r != rank && m[r][c] != 0 {
                let k = m[r][c];
                for j in 0..cols {
                    m[r][j] = (m[r][j] + p * p - k * m[rank][j] % p) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

pub fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * a % p;
        }
        a = a * a % p;
        e >>= 1;
    }
    r
}

/// `μ[k][i][j]` with `Δ(e_k) = Σ μ[k][i][j] e_i ⊗ e_j`.
pub fn dense_delta(c: &Coalgebra) -> Vec<Vec<Vec<Elem>>> {
    let f = c.field();
    let n = c.dim();
    let mut mu = vec![vec![vec![f.zero(); n]; n]; n];
    for (k, i, j, x) in c.entries() {
        mu[k][i][j] = f.add(&mu[k][i][j], &x);
    }
    mu
}

/// Coassociativity and both counit laws, checked entry by entry on the
/// dense tensor.
pub fn dense_axioms_hold(c: &Coalgebra) -> bool {
    let f = c.field();
    let n = c.dim();
    let mu = dense_delta(c);
    let eps = c.counit();
    for k in 0..n {
        for a in 0..n {
            for b in 0..n {
                for d in 0..n {
                    let mut lhs = f.zero();
                    let mut rhs = f.zero();
                    for m in 0..n {
                        lhs = f.add(&lhs, &f.mul(&mu[k][m][d], &mu[m][a][b]));
                        rhs = f.add(&rhs, &f.mul(&mu[k][a][m], &mu[m][b][d]));
                    }
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
        for j in 0..n {
            let mut left = f.zero();
            let mut right = f.zero();
            for i in 0..n {
                left = f.add(&left, &f.mul(&eps[i], &mu[k][i][j]));
                right = f.add(&right, &f.mul(&eps[i], &mu[k][j][i]));
            }
            let want = if j == k { f.one() } else { f.zero() };
            if left != want || right != want {
                return false;
            }
        }
    }
    true
}

/// `Δ(c_n) = Σ_{i+j=n} c_i ⊗ c_j`, `ε(c_n) = δ_{n0}`.
pub fn divided_powers(f: &Field, n: usize) -> Coalgebra {
    let entries = (0..n).flat_map(|k| (0..=k).map(move |i| (k, i, k - i)));
    let entries: Vec<_> = entries.map(|(k, i, j)| (k, i, j, f.one())).collect();
    let counit = (0..n).map(|i| if i == 0 { f.one() } else { f.zero() }).collect();
    Coalgebra::new(f, n, entries, counit, None).unwrap()
}

/// Grouplikes `g, h` and a `(g, h)`-skew primitive `x`.
pub fn skew_primitive(f: &Field) -> Coalgebra {
    let o = f.one();
    let entries = vec![(0, 0, 0, o.clone()), (1, 1, 1, o.clone()), (2, 0, 2, o.clone()), (2, 2, 1, o.clone())];
    Coalgebra::new(f, 3, entries, vec![o.clone(), o, f.zero()], None).unwrap()
}

/// `Δ(x) = Σ μ_x[i][j] e_i ⊗ e_j` lies in `D ⊗ D` iff every row and every
/// column of `μ_x` lies in `D`. `in_d` decides membership in `D`.
pub fn delta_lands_in(c: &Coalgebra, v: &[Elem], in_d: &dyn Fn(&[Elem]) -> bool) -> bool {
    let f = c.field();
    let n = c.dim();
    let mu = dense_delta(c);
    let mut m = vec![vec![f.zero(); n]; n];
    for (k, x) in v.iter().enumerate() {
        if f.is_zero(x) {
            continue;
        }
        for i in 0..n {
            for j in 0..n {
                m[i][j] = f.add(&m[i][j], &f.mul(x, &mu[k][i][j]));
            }
        }
    }
    let cols_ok = (0..n).all(|j| in_d(&(0..n).map(|i| m[i][j].clone()).collect::<Vec<_>>()));
    let rows_ok = m.iter().all(|r| in_d(r));
    cols_ok && rows_ok
}
