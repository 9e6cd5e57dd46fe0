//! Dense exact integer linear algebra for small systems: kernel lattice bases,
//! integer solves, and Smith normal form with unimodular transforms.
//!
//! Only used on desk-scale matrices (homology bases, induced maps, connecting
//! differentials); the big boundary matrices go through `snf::sparse_snf`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

pub type ZMat = Vec<Vec<BigInt>>; // row-major

pub fn zeros(nrows: usize, ncols: usize) -> ZMat {
    vec![vec![BigInt::zero(); ncols]; nrows]
}

pub fn identity(n: usize) -> ZMat {
    let mut m = zeros(n, n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = BigInt::from(1);
    }
    m
}

pub fn from_i64(rows: &[Vec<i64>]) -> ZMat {
    rows.iter()
        .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
        .collect()
}

pub fn mat_mul(a: &ZMat, b: &ZMat) -> ZMat {
    let n = a.len();
    let k = if n == 0 { 0 } else { a[0].len() };
    let m = if b.is_empty() { 0 } else { b[0].len() };
    let mut out = zeros(n, m);
    for i in 0..n {
        for l in 0..k {
            if a[i][l].is_zero() {
                continue;
            }
            for j in 0..m {
                if !b[l][j].is_zero() {
                    let t = &a[i][l] * &b[l][j];
                    out[i][j] += t;
                }
            }
        }
    }
    out
}

pub fn mat_vec(a: &ZMat, x: &[BigInt]) -> Vec<BigInt> {
    a.iter()
        .map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum())
        .collect()
}

/// Column echelon reduction with unimodular column tracking.
/// Returns (echelon matrix E = M*T, transform T). Zero columns of E sit at
/// the end; the corresponding columns of T form a basis of ker M.
fn column_echelon(m: &ZMat, ncols: usize) -> (ZMat, ZMat) {
    let nrows = m.len();
    let mut e = m.clone();
    let mut t = identity(ncols);
    let col_swap = |e: &mut ZMat, t: &mut ZMat, a: usize, b: usize| {
        for row in e.iter_mut() {
            row.swap(a, b);
        }
        for row in t.iter_mut() {
            row.swap(a, b);
        }
    };
    // col[dst] += q * col[src]
    let col_axpy = |e: &mut ZMat, t: &mut ZMat, dst: usize, src: usize, q: &BigInt| {
        for row in e.iter_mut() {
            let v = &row[src] * q;
            row[dst] += v;
        }
        for row in t.iter_mut() {
            let v = &row[src] * q;
            row[dst] += v;
        }
    };
    let mut lead = 0usize;
    for r in 0..nrows {
        if lead == ncols {
            break;
        }
        loop {
            // gcd-reduce row r across columns lead..ncols
            let Some(best) = (lead..ncols)
                .filter(|&c| !e[r][c].is_zero())
                .min_by_key(|&c| e[r][c].abs())
            else {
                break;
            };
            col_swap(&mut e, &mut t, lead, best);
            let mut again = false;
            let pivot = e[r][lead].clone();
            for c in lead + 1..ncols {
                if !e[r][c].is_zero() {
                    let q = -e[r][c].div_floor(&pivot);
                    col_axpy(&mut e, &mut t, c, lead, &q);
                    if !e[r][c].is_zero() {
                        again = true;
                    }
                }
            }
            if !again {
                lead += 1;
                break;
            }
        }
    }
    (e, t)
}

/// Basis of the integer kernel lattice of M (ncols must be passed explicitly
/// to handle matrices with zero rows). Each basis vector has length ncols.
pub fn kernel_basis(m: &ZMat, ncols: usize) -> Vec<Vec<BigInt>> {
    let (e, t) = column_echelon(m, ncols);
    (0..ncols)
        .filter(|&c| e.iter().all(|row| row[c].is_zero()))
        .map(|c| t.iter().map(|row| row[c].clone()).collect())
        .collect()
}

/// One integer solution x of M x = b, if any.
pub fn solve(m: &ZMat, ncols: usize, b: &[BigInt]) -> Option<Vec<BigInt>> {
    let (e, t) = column_echelon(m, ncols);
    let nrows = m.len();
    let mut residue: Vec<BigInt> = b.to_vec();
    let mut coeff = vec![BigInt::zero(); ncols];
    // echelon columns have strictly increasing leading-row indices
    for c in 0..ncols {
        let Some(r) = (0..nrows).find(|&r| !e[r][c].is_zero()) else {
            continue;
        };
        if residue[r].is_zero() {
            continue;
        }
        let (q, rem) = residue[r].div_mod_floor(&e[r][c]);
        if !rem.is_zero() {
            return None;
        }
        for i in 0..nrows {
            let v = &e[i][c] * &q;
            residue[i] -= v;
        }
        coeff[c] = q;
    }
    if residue.iter().any(|v| !v.is_zero()) {
        return None;
    }
    Some(mat_vec(&t, &coeff))
}

/// Smith normal form with transforms: returns (u, uinv, s, v) with
/// u * m * v = s diagonal (divisibility chain), u unimodular with inverse uinv.
pub fn snf_transforms(m: &ZMat, ncols: usize) -> (ZMat, ZMat, ZMat, ZMat) {
    let nrows = m.len();
    let mut s = m.clone();
    let mut u = identity(nrows);
    let mut uinv = identity(nrows);
    let mut v = identity(ncols);

    let mut k = 0usize;
    while k < nrows.min(ncols) {
        // find minimal nonzero entry in the remaining block
        let Some((pi, pj)) = (k..nrows)
            .flat_map(|i| (k..ncols).map(move |j| (i, j)))
            .filter(|&(i, j)| !s[i][j].is_zero())
            .min_by_key(|&(i, j)| s[i][j].abs())
        else {
            break;
        };
        // move to (k,k)
        s.swap(k, pi);
        u.swap(k, pi);
        uinv.iter_mut().for_each(|row| row.swap(k, pi));
        for row in s.iter_mut() {
            row.swap(k, pj);
        }
        for row in v.iter_mut() {
            row.swap(k, pj);
        }
        let mut clean = true;
        // clear column k
        for i in k + 1..nrows {
            if s[i][k].is_zero() {
                continue;
            }
            let q = s[i][k].div_floor(&s[k][k]);
            if !q.is_zero() {
                for j in 0..ncols {
                    let t = &s[k][j] * &q;
                    s[i][j] -= t;
                }
                for j in 0..nrows {
                    let t = &u[k][j] * &q;
                    u[i][j] -= t;
                    let t2 = &uinv[j][i] * &q;
                    uinv[j][k] += t2;
                }
            }
            if !s[i][k].is_zero() {
                clean = false;
            }
        }
        // clear row k
        for j in k + 1..ncols {
            if s[k][j].is_zero() {
                continue;
            }
            let q = s[k][j].div_floor(&s[k][k]);
            if !q.is_zero() {
                for i in 0..nrows {
                    let t = &s[i][k] * &q;
                    s[i][j] -= t;
                }
                for i in 0..ncols {
                    let t = &v[i][k] * &q;
                    v[i][j] -= t;
                }
            }
            if !s[k][j].is_zero() {
                clean = false;
            }
        }
        if !clean {
            continue; // smaller remainders appeared; re-pivot this block
        }
        // ensure s[k][k] divides the rest of the block
        if let Some((bi, bj)) = (k + 1..nrows)
            .flat_map(|i| (k + 1..ncols).map(move |j| (i, j)))
            .find(|&(i, j)| !s[i][j].mod_floor(&s[k][k]).is_zero())
        {
            let _ = bj;
            // add row bi to row k and restart the block
            for j in 0..ncols {
                let t = s[bi][j].clone();
                s[k][j] += t;
            }
            for j in 0..nrows {
                let t = u[bi][j].clone();
                u[k][j] += t;
                let t2 = uinv[j][k].clone();
                uinv[j][bi] -= t2;
            }
            continue;
        }
        if s[k][k].is_negative() {
            for j in 0..ncols {
                s[k][j] = -s[k][j].clone();
            }
            for j in 0..nrows {
                u[k][j] = -u[k][j].clone();
                uinv[j][k] = -uinv[j][k].clone();
            }
        }
        k += 1;
    }
    (u, uinv, s, v)
}
