//! Sparse column reduction over GF(p) for a small odd prime p: rank, span
//! membership, and kernel vectors with combination tracking.

use std::collections::BTreeMap;

fn inv_mod(a: u32, p: u32) -> u32 {
    // p is tiny; a^(p-2) by repeated multiplication
    let mut r = 1u64;
    for _ in 0..p - 2 {
        r = r * a as u64 % p as u64;
    }
    r as u32
}

fn normalize(col: &[(u32, i64)], p: u32) -> Vec<(u32, u32)> {
    let mut m: BTreeMap<u32, i64> = BTreeMap::new();
    for &(r, v) in col {
        *m.entry(r).or_insert(0) += v;
    }
    m.into_iter()
        .filter_map(|(r, v)| {
            let v = v.rem_euclid(p as i64) as u32;
            (v != 0).then_some((r, v))
        })
        .collect()
}

/// col -= c * other (mod p); both sorted by row.
fn subtract_scaled(col: &[(u32, u32)], other: &[(u32, u32)], c: u32, p: u32) -> Vec<(u32, u32)> {
    let mut out = Vec::with_capacity(col.len() + other.len());
    let (mut i, mut j) = (0, 0);
    while i < col.len() || j < other.len() {
        let (r, v) = if j >= other.len() || (i < col.len() && col[i].0 < other[j].0) {
            let e = col[i];
            i += 1;
            e
        } else if i >= col.len() || other[j].0 < col[i].0 {
            let e = (other[j].0, (p - c as u32 * other[j].1 % p) % p);
            j += 1;
            e
        } else {
            let e = (col[i].0, (col[i].1 + p - c * other[j].1 % p) % p);
            i += 1;
            j += 1;
            e
        };
        if v != 0 {
            out.push((r, v));
        }
    }
    out
}

/// Incremental sparse reducer over GF(p). Installed pivot columns are scaled
/// to pivot coefficient 1 and keyed by their smallest nonzero row.
pub struct SparseReducerP {
    p: u32,
    pivots: BTreeMap<u32, Vec<(u32, u32)>>,
}

impl SparseReducerP {
    pub fn new(p: u32) -> Self {
        assert!(p >= 2 && p < 256);
        SparseReducerP {
            p,
            pivots: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Remainder of a column after reduction against the installed pivots.
    pub fn reduce(&self, col: &[(u32, i64)]) -> Vec<(u32, u32)> {
        let mut cur = normalize(col, self.p);
        while let Some(&(row, coeff)) = cur.first() {
            match self.pivots.get(&row) {
                Some(pivot) => cur = subtract_scaled(&cur, pivot, coeff, self.p),
                None => break,
            }
        }
        cur
    }

    /// Feeds a column into the reducer; returns true if it reduced to zero
    /// (was already in the span of earlier columns).
    pub fn add_column(&mut self, col: &[(u32, i64)]) -> bool {
        let cur = self.reduce(col);
        match cur.first().copied() {
            None => true,
            Some((row, coeff)) => {
                let inv = inv_mod(coeff, self.p) as u64;
                let scaled: Vec<(u32, u32)> = cur
                    .into_iter()
                    .map(|(r, v)| (r, (v as u64 * inv % self.p as u64) as u32))
                    .collect();
                self.pivots.insert(row, scaled);
                false
            }
        }
    }

    /// True iff the column lies in the span of everything added so far.
    pub fn in_span(&self, col: &[(u32, i64)]) -> bool {
        self.reduce(col).is_empty()
    }
}

/// Like `SparseReducerP`, but tracks the combination of input columns behind
/// every pivot, so a column that reduces to zero yields an explicit kernel
/// vector of the matrix whose columns were fed in.
pub struct KernelReducerP {
    p: u32,
    /// pivot row -> (column, combination over input column indices)
    pivots: BTreeMap<u32, (Vec<(u32, u32)>, Vec<(u32, u32)>)>,
    next_index: u32,
}

impl KernelReducerP {
    pub fn new(p: u32) -> Self {
        assert!(p >= 2 && p < 256);
        KernelReducerP {
            p,
            pivots: BTreeMap::new(),
            next_index: 0,
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Feeds the next column. If it is dependent on the earlier ones, returns
    /// the combination c (indexed by input column number, including this one
    /// with a nonzero coefficient) such that the fed matrix times c is zero.
    pub fn add_column(&mut self, col: &[(u32, i64)]) -> Option<Vec<(u32, u32)>> {
        let p = self.p;
        let idx = self.next_index;
        self.next_index += 1;
        let mut cur = normalize(col, p);
        let mut combo: Vec<(u32, u32)> = vec![(idx, 1)];
        while let Some(&(row, coeff)) = cur.first() {
            match self.pivots.get(&row) {
                Some((pivot, pivot_combo)) => {
                    cur = subtract_scaled(&cur, pivot, coeff, p);
                    combo = subtract_scaled(&combo, pivot_combo, coeff, p);
                }
                None => break,
            }
        }
        match cur.first().copied() {
            None => Some(combo),
            Some((row, coeff)) => {
                let inv = inv_mod(coeff, p) as u64;
                let scale = |v: &[(u32, u32)]| {
                    v.iter()
                        .map(|&(r, x)| (r, (x as u64 * inv % p as u64) as u32))
                        .collect::<Vec<_>>()
                };
                self.pivots.insert(row, (scale(&cur), scale(&combo)));
                None
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn dense_rank_mod_p(m: &[Vec<i64>], p: i64) -> usize {
        let mut a: Vec<Vec<i64>> = m
            .iter()
            .map(|r| r.iter().map(|&x| x.rem_euclid(p)).collect())
            .collect();
        let (nr, nc) = (a.len(), a.first().map(|r| r.len()).unwrap_or(0));
        let mut rank = 0;
        for c in 0..nc {
            if let Some(pr) = (rank..nr).find(|&r| a[r][c] != 0) {
                a.swap(rank, pr);
                let inv = (1..p).find(|&x| x * a[rank][c] % p == 1).unwrap();
                for x in a[rank].iter_mut() {
                    *x = *x * inv % p;
                }
                for r in 0..nr {
                    if r != rank && a[r][c] != 0 {
                        let f = a[r][c];
                        for cc in 0..nc {
                            a[r][cc] = (a[r][cc] - f * a[rank][cc]).rem_euclid(p);
                        }
                    }
                }
                rank += 1;
            }
        }
        rank
    }

    fn columns(m: &[Vec<i64>]) -> Vec<Vec<(u32, i64)>> {
        let nc = m.first().map(|r| r.len()).unwrap_or(0);
        (0..nc)
            .map(|c| {
                m.iter()
                    .enumerate()
                    .filter(|(_, row)| row[c] != 0)
                    .map(|(r, row)| (r as u32, row[c]))
                    .collect()
            })
            .collect()
    }

    #[test]
    fn rank_matches_dense_random() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for p in [2u32, 3, 5, 7] {
            for _ in 0..20 {
                let nr = rng.gen_range(1..8);
                let nc = rng.gen_range(1..8);
                let m: Vec<Vec<i64>> = (0..nr)
                    .map(|_| (0..nc).map(|_| rng.gen_range(-6..7)).collect())
                    .collect();
                let mut red = SparseReducerP::new(p);
                for col in columns(&m) {
                    red.add_column(&col);
                }
                assert_eq!(red.rank(), dense_rank_mod_p(&m, p as i64), "p={p}");
            }
        }
    }

    #[test]
    fn kernel_vectors_are_kernel() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        let p = 3u32;
        for _ in 0..30 {
            let nr = rng.gen_range(1..7);
            let nc = rng.gen_range(1..9);
            let m: Vec<Vec<i64>> = (0..nr)
                .map(|_| (0..nc).map(|_| rng.gen_range(-4..5)).collect())
                .collect();
            let mut red = KernelReducerP::new(p);
            let mut kernels = Vec::new();
            for col in columns(&m) {
                if let Some(k) = red.add_column(&col) {
                    kernels.push(k);
                }
            }
            assert_eq!(kernels.len() + red.rank(), nc);
            for k in &kernels {
                // M k = 0 mod p, and k is nonzero
                assert!(!k.is_empty());
                for row in &m {
                    let s: i64 = k.iter().map(|&(j, v)| row[j as usize] * v as i64).sum();
                    assert_eq!(s.rem_euclid(p as i64), 0);
                }
            }
        }
    }

    #[test]
    fn membership() {
        let p = 3u32;
        // span of (1,1,0) and (0,1,2) mod 3
        let mut red = SparseReducerP::new(p);
        red.add_column(&[(0, 1), (1, 1)]);
        red.add_column(&[(1, 1), (2, 2)]);
        assert_eq!(red.rank(), 2);
        // 2*(1,1,0) + (0,1,2) = (2,0,2) mod 3
        assert!(red.in_span(&[(0, 2), (2, 2)]));
        assert!(!red.in_span(&[(0, 1)]));
        assert!(red.in_span(&[]));
    }
}
