//! GF(2) linear algebra: a dense packed-word matrix for desk-scale systems
//! and a sparse column reduction for the large boundary matrices.

/// Dense GF(2) matrix, rows packed into 64-bit words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat2 {
    pub nrows: usize,
    pub ncols: usize,
    words: usize,
    rows: Vec<u64>,
}

impl Mat2 {
    pub fn zero(nrows: usize, ncols: usize) -> Self {
        let words = ncols.div_ceil(64).max(1);
        Mat2 {
            nrows,
            ncols,
            words,
            rows: vec![0; nrows * words],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat2::zero(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Builds from sparse columns: `cols[j]` lists the rows with a 1 in column j.
    pub fn from_columns(nrows: usize, cols: &[Vec<usize>]) -> Self {
        let mut m = Mat2::zero(nrows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            for &i in col {
                m.set(i, j, true);
            }
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i * self.words + j / 64] >> (j % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, v: bool) {
        let w = &mut self.rows[i * self.words + j / 64];
        if v {
            *w |= 1 << (j % 64);
        } else {
            *w &= !(1 << (j % 64));
        }
    }

    fn xor_rows(&mut self, dst: usize, src: usize) {
        let (d, s) = (dst * self.words, src * self.words);
        for k in 0..self.words {
            let v = self.rows[s + k];
            self.rows[d + k] ^= v;
        }
    }

    pub fn rank(&self) -> usize {
        self.clone().row_reduce().len()
    }

    /// In-place row reduction to reduced row echelon form.
    /// Returns the pivot column of each nonzero row, in order.
    pub fn row_reduce(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.ncols {
            if row == self.nrows {
                break;
            }
            let Some(p) = (row..self.nrows).find(|&r| self.get(r, col)) else {
                continue;
            };
            self.swap_rows(row, p);
            for r in 0..self.nrows {
                if r != row && self.get(r, col) {
                    self.xor_rows(r, row);
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for k in 0..self.words {
            self.rows.swap(a * self.words + k, b * self.words + k);
        }
    }

    /// Basis of the right kernel {x : M x = 0}, one bit-vector (length ncols) each.
    pub fn kernel_basis(&self) -> Vec<Vec<bool>> {
        let mut m = self.clone();
        let pivots = m.row_reduce();
        let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        let mut basis = Vec::new();
        for free in 0..self.ncols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut x = vec![false; self.ncols];
            x[free] = true;
            for (r, &pc) in pivots.iter().enumerate() {
                if m.get(r, free) {
                    x[pc] = true;
                }
            }
            basis.push(x);
        }
        basis
    }

    /// Solves M x = b; returns one solution if consistent.
    pub fn solve(&self, b: &[bool]) -> Option<Vec<bool>> {
        assert_eq!(b.len(), self.nrows);
        let mut aug = Mat2::zero(self.nrows, self.ncols + 1);
        for i in 0..self.nrows {
            for w in 0..self.words {
                aug.rows[i * aug.words + w] = self.rows[i * self.words + w];
            }
            aug.set(i, self.ncols, b[i]);
        }
        let pivots = aug.row_reduce();
        if pivots.last() == Some(&self.ncols) {
            return None; // inconsistent
        }
        let mut x = vec![false; self.ncols];
        for (r, &pc) in pivots.iter().enumerate() {
            x[pc] = aug.get(r, self.ncols);
        }
        Some(x)
    }

    /// Matrix-vector product over GF(2).
    pub fn mul_vec(&self, x: &[bool]) -> Vec<bool> {
        assert_eq!(x.len(), self.ncols);
        let mut xw = vec![0u64; self.words];
        for (j, &v) in x.iter().enumerate() {
            if v {
                xw[j / 64] |= 1 << (j % 64);
            }
        }
        (0..self.nrows)
            .map(|i| {
                let mut acc = 0u64;
                for k in 0..self.words {
                    acc ^= self.rows[i * self.words + k] & xw[k];
                }
                acc.count_ones() % 2 == 1
            })
            .collect()
    }
}

/// Sparse GF(2) column reduction (the standard persistence-style algorithm).
///
/// Columns are strictly increasing row indices. Reduction repeatedly XORs a
/// column with the pivot column sharing its lowest (= maximal) row index.
pub struct SparseReducer {
    /// pivot row -> index into `reduced`
    pivot_of_low: Vec<u32>,
    reduced: Vec<Vec<u32>>,
    rank: usize,
}

const NO_PIVOT: u32 = u32::MAX;

fn xor_sorted(a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

impl SparseReducer {
    pub fn new(nrows: usize) -> Self {
        SparseReducer {
            pivot_of_low: vec![NO_PIVOT; nrows],
            reduced: Vec::new(),
            rank: 0,
        }
    }

    /// Feeds one column; returns `None` if it became a new pivot, or
    /// `Some(combination-is-dependent)` marker via the zero column.
    /// The return value is `true` iff the column reduced to zero.
    pub fn add_column(&mut self, mut col: Vec<u32>) -> bool {
        loop {
            let Some(&low) = col.last() else {
                return true;
            };
            let p = self.pivot_of_low[low as usize];
            if p == NO_PIVOT {
                self.pivot_of_low[low as usize] = self.reduced.len() as u32;
                self.reduced.push(col);
                self.rank += 1;
                return false;
            }
            col = xor_sorted(&col, &self.reduced[p as usize]);
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }
}

/// Rank of a sparse GF(2) matrix given as columns of strictly increasing row ids.
pub fn sparse_rank(nrows: usize, cols: impl IntoIterator<Item = Vec<u32>>) -> usize {
    let mut red = SparseReducer::new(nrows);
    for c in cols {
        red.add_column(c);
    }
    red.rank()
}

/// Decides whether the target row vector `t` lies in the row space of the
/// matrix whose columns are given (equivalently: whether t annihilates the
/// column kernel). `t` is given by its value on each column's index.
///
/// Each column carries an augmentation bit `t_j`; XORing columns XORs bits.
/// `t` is in the row space iff every column that reduces to zero has bit 0.
pub struct MembershipReducer {
    pivot_of_low: Vec<u32>,
    reduced: Vec<(Vec<u32>, bool)>,
    rank: usize,
    member: bool,
}

impl MembershipReducer {
    pub fn new(nrows: usize) -> Self {
        MembershipReducer {
            pivot_of_low: vec![NO_PIVOT; nrows],
            reduced: Vec::new(),
            rank: 0,
            member: true,
        }
    }

    pub fn add_column(&mut self, mut col: Vec<u32>, mut bit: bool) {
        loop {
            let Some(&low) = col.last() else {
                if bit {
                    self.member = false;
                }
                return;
            };
            let p = self.pivot_of_low[low as usize];
            if p == NO_PIVOT {
                self.pivot_of_low[low as usize] = self.reduced.len() as u32;
                self.reduced.push((col, bit));
                self.rank += 1;
                return;
            }
            let (pc, pb) = &self.reduced[p as usize];
            col = xor_sorted(&col, pc);
            bit ^= *pb;
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// True iff no kernel combination paired nontrivially with the target.
    pub fn in_row_space(&self) -> bool {
        self.member
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dense_rank_kernel_solve() {
        // boundary of a triangle: rank 2, kernel dim 1
        let cols = vec![vec![0, 1], vec![0, 2], vec![1, 2]];
        let m = Mat2::from_columns(3, &cols);
        assert_eq!(m.rank(), 2);
        let ker = m.kernel_basis();
        assert_eq!(ker.len(), 1);
        assert_eq!(ker[0], vec![true, true, true]);
        // b in image
        let b = vec![true, true, false];
        let x = m.solve(&b).unwrap();
        assert_eq!(m.mul_vec(&x), b);
        // b not in image (odd total parity per component)
        assert!(m.solve(&[true, false, false]).is_none());
    }

    #[test]
    fn sparse_matches_dense_rank() {
        let mut seed = 12345u64;
        let mut next = move || {
            seed ^= seed << 13;
            seed ^= seed >> 7;
            seed ^= seed << 17;
            seed
        };
        for _ in 0..50 {
            let nrows = 1 + (next() % 12) as usize;
            let ncols = 1 + (next() % 12) as usize;
            let cols: Vec<Vec<u32>> = (0..ncols)
                .map(|_| {
                    let mut c: Vec<u32> = (0..nrows as u32).filter(|_| next() % 3 == 0).collect();
                    c.sort();
                    c
                })
                .collect();
            let dense = Mat2::from_columns(
                nrows,
                &cols
                    .iter()
                    .map(|c| c.iter().map(|&x| x as usize).collect())
                    .collect::<Vec<_>>(),
            );
            assert_eq!(sparse_rank(nrows, cols.clone()), dense.rank());
        }
    }

    #[test]
    fn membership_reduction() {
        // columns of the triangle boundary; t = sum of rows (in row space)
        let cols = vec![vec![0u32, 1], vec![0, 2], vec![1, 2]];
        let mut r = MembershipReducer::new(3);
        // t = row 0 + row 1: t_j = parity of |col_j ∩ {0,1}|
        for c in &cols {
            let bit = c.iter().filter(|&&i| i <= 1).count() % 2 == 1;
            r.add_column(c.clone(), bit);
        }
        assert!(r.in_row_space());
        // t = indicator of column 0 only: t(col0)=1, others 0 — the kernel
        // vector (1,1,1) pairs to 1, so t is not in the row space
        let mut r = MembershipReducer::new(3);
        for (j, c) in cols.iter().enumerate() {
            r.add_column(c.clone(), j == 0);
        }
        assert!(!r.in_row_space());
    }
}
