//! Chain complexes of free modules with exact homology over F2 and Z,
//! cellular chains of Hom complexes (with product-of-simplices signs),
//! simplicial chains, chain maps induced by cellular/simplicial maps, and the
//! maps they induce on homology.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::hom::{HomComplex, Variance};
use crate::matrix::gf2::{Mat2, SparseReducer};
use crate::matrix::snf::sparse_snf;
use crate::matrix::zdense;
use crate::simplicial::SimplicialComplex;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// One graded piece of the boundary operator in CSR-by-column form.
#[derive(Debug, Clone, Default)]
pub struct Boundary {
    pub indptr: Vec<usize>,
    pub entries: Vec<(u32, i32)>,
}

impl Boundary {
    pub fn from_columns<I: IntoIterator<Item = Vec<(u32, i32)>>>(cols: I) -> Self {
        let mut indptr = vec![0usize];
        let mut entries = Vec::new();
        for col in cols {
            entries.extend(col);
            indptr.push(entries.len());
        }
        Boundary { indptr, entries }
    }

    pub fn ncols(&self) -> usize {
        self.indptr.len().saturating_sub(1)
    }

    pub fn col(&self, j: usize) -> &[(u32, i32)] {
        &self.entries[self.indptr[j]..self.indptr[j + 1]]
    }
}

/// A bounded chain complex of finitely generated free modules. `boundary[d]`
/// maps degree d to degree d-1; `boundary[0]` has empty columns.
#[derive(Debug, Clone)]
pub struct ChainComplex {
    pub dims: Vec<usize>,
    pub boundary: Vec<Boundary>,
}

/// One integral homology group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZGroup {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl ZGroup {
    pub fn free(r: usize) -> Self {
        ZGroup {
            free_rank: r,
            torsion: Vec::new(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }
}

impl std::fmt::Display for ZGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(format!("Z^{r}")),
        }
        for t in &self.torsion {
            parts.push(format!("Z/{t}"));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

impl ChainComplex {
    pub fn top_degree(&self) -> usize {
        self.dims.len().saturating_sub(1)
    }

    pub fn dim(&self, d: usize) -> usize {
        self.dims.get(d).copied().unwrap_or(0)
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.dims
            .iter()
            .enumerate()
            .map(|(d, &c)| if d % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum()
    }

    /// Exact check that the composite of consecutive boundaries vanishes.
    pub fn verify_boundary_squared(&self) -> bool {
        use std::collections::HashMap;
        for d in 2..self.boundary.len() {
            for j in 0..self.dim(d) {
                let mut acc: HashMap<u32, i64> = HashMap::new();
                for &(k, c1) in self.boundary[d].col(j) {
                    for &(i, c2) in self.boundary[d - 1].col(k as usize) {
                        *acc.entry(i).or_insert(0) += c1 as i64 * c2 as i64;
                    }
                }
                if acc.values().any(|&v| v != 0) {
                    return false;
                }
            }
        }
        true
    }

    /// Column j of boundary[d] reduced mod 2, as sorted row indices.
    pub fn col_f2(&self, d: usize, j: usize) -> Vec<u32> {
        let mut rows: Vec<u32> = self.boundary[d]
            .col(j)
            .iter()
            .filter(|&&(_, c)| c % 2 != 0)
            .map(|&(i, _)| i)
            .collect();
        rows.sort_unstable();
        rows
    }

    fn rank_f2(&self, d: usize) -> usize {
        if d == 0 || d >= self.boundary.len() {
            return 0;
        }
        let mut red = SparseReducer::new(self.dim(d - 1));
        for j in 0..self.dim(d) {
            red.add_column(self.col_f2(d, j));
        }
        red.rank()
    }

    /// Betti numbers over F2 per degree.
    pub fn homology_f2(&self) -> Vec<usize> {
        self.homology_f2_through(self.dims.len().saturating_sub(1))
    }

    /// Betti numbers over F2 in degrees 0..=max_d only (avoids reducing the
    /// boundaries above degree max_d + 1).
    pub fn homology_f2_through(&self, max_d: usize) -> Vec<usize> {
        let top = self.dims.len().min(max_d + 1);
        let ranks: Vec<usize> = (0..=top).map(|d| self.rank_f2(d)).collect();
        (0..top)
            .map(|d| self.dim(d) - ranks[d] - ranks[d + 1])
            .collect()
    }

    /// Integral homology per degree, via sparse Smith normal form.
    pub fn homology_z(&self) -> Vec<ZGroup> {
        self.homology_z_through(self.dims.len().saturating_sub(1))
    }

    /// Integral homology in degrees 0..=max_d only.
    pub fn homology_z_through(&self, max_d: usize) -> Vec<ZGroup> {
        if self.dims.is_empty() {
            return Vec::new();
        }
        let top = self.dims.len().min(max_d + 1);
        let mut rank = vec![0usize; top + 1];
        let mut torsion: Vec<Vec<BigInt>> = vec![Vec::new(); top + 1];
        for d in 1..=top.min(self.dims.len() - 1) {
            let entries = (0..self.dim(d)).flat_map(|j| {
                self.boundary[d]
                    .col(j)
                    .iter()
                    .map(move |&(i, c)| (i, j as u32, c as i64))
            });
            let snf = sparse_snf(self.dim(d - 1), self.dim(d), entries);
            rank[d] = snf.rank;
            torsion[d] = snf.torsion;
        }
        (0..top)
            .map(|d| ZGroup {
                free_rank: self.dim(d) - rank[d] - rank[d + 1],
                torsion: torsion[d + 1].clone(),
            })
            .collect()
    }

    /// Degree shift by s (degree d of the result is degree d-s of self).
    pub fn shifted(&self, s: usize) -> ChainComplex {
        let mut dims = vec![0usize; s];
        dims.extend_from_slice(&self.dims);
        let mut boundary = vec![Boundary::from_columns(std::iter::empty()); s];
        boundary.extend(self.boundary.iter().cloned());
        // degree s has no boundary into the padding
        if boundary.len() > s {
            boundary[s] = Boundary::from_columns((0..self.dim(0)).map(|_| Vec::new()));
        }
        ChainComplex { dims, boundary }
    }

    /// Splits along a degreewise subset of the basis: returns the subcomplex
    /// spanned by the flagged elements and the quotient by it, together with
    /// new-to-old index maps. Errors if the flagged span is not closed under
    /// the boundary.
    pub fn split(&self, in_sub: &[Vec<bool>]) -> Result<SplitComplex> {
        let top = self.dims.len();
        let flag = |d: usize, j: usize| -> bool {
            in_sub
                .get(d)
                .and_then(|v| v.get(j))
                .copied()
                .unwrap_or(false)
        };
        // old index -> local index within its side
        let mut sub_index: Vec<Vec<u32>> = Vec::with_capacity(top);
        let mut quot_index: Vec<Vec<u32>> = Vec::with_capacity(top);
        let mut local = Vec::with_capacity(top);
        for d in 0..top {
            let mut sloc = Vec::new();
            let mut qloc = Vec::new();
            let mut l = vec![0u32; self.dim(d)];
            for j in 0..self.dim(d) {
                if flag(d, j) {
                    l[j] = sloc.len() as u32;
                    sloc.push(j as u32);
                } else {
                    l[j] = qloc.len() as u32;
                    qloc.push(j as u32);
                }
            }
            sub_index.push(sloc);
            quot_index.push(qloc);
            local.push(l);
        }
        let mut sub_boundary = Vec::with_capacity(top);
        let mut quot_boundary = Vec::with_capacity(top);
        for d in 0..top {
            let mut scols = Vec::with_capacity(sub_index[d].len());
            for &j in &sub_index[d] {
                let mut col = Vec::new();
                for &(i, c) in self.boundary[d].col(j as usize) {
                    if d == 0 {
                        continue;
                    }
                    if !flag(d - 1, i as usize) {
                        return Err(Error::NotSubcomplex(j as usize));
                    }
                    col.push((local[d - 1][i as usize], c));
                }
                scols.push(col);
            }
            sub_boundary.push(Boundary::from_columns(scols));
            let mut qcols = Vec::with_capacity(quot_index[d].len());
            for &j in &quot_index[d] {
                let col = self.boundary[d]
                    .col(j as usize)
                    .iter()
                    .filter(|&&(i, _)| d > 0 && !flag(d - 1, i as usize))
                    .map(|&(i, c)| (local[d - 1][i as usize], c))
                    .collect();
                qcols.push(col);
            }
            quot_boundary.push(Boundary::from_columns(qcols));
        }
        Ok(SplitComplex {
            sub: ChainComplex {
                dims: sub_index.iter().map(|v| v.len()).collect(),
                boundary: sub_boundary,
            },
            quot: ChainComplex {
                dims: quot_index.iter().map(|v| v.len()).collect(),
                boundary: quot_boundary,
            },
            sub_index,
            quot_index,
        })
    }
}

#[derive(Debug, Clone)]
pub struct SplitComplex {
    pub sub: ChainComplex,
    pub quot: ChainComplex,
    /// per degree: local sub index -> original index
    pub sub_index: Vec<Vec<u32>>,
    /// per degree: local quotient index -> original index
    pub quot_index: Vec<Vec<u32>>,
}

/// Cellular chain complex of a Hom complex. Basis element j of degree d is
/// cell `x.dim_range(d).start + j`; each cell is a product of simplices
/// oriented by the vertex order of G and ascending colors, and boundaries
/// carry the product (Leibniz) signs.
pub fn cellular_chain(x: &HomComplex) -> Result<ChainComplex> {
    let top = x.max_dim();
    let dims: Vec<usize> = (0..=top).map(|d| x.dim_range(d).len()).collect();
    let mut boundary = Vec::with_capacity(top + 1);
    boundary.push(Boundary::from_columns((0..dims[0]).map(|_| Vec::new())));
    for d in 1..=top {
        let range = x.dim_range(d);
        let mut cols = Vec::with_capacity(range.len());
        for ci in range.clone() {
            let cell = &x.cells[ci];
            let mut col: Vec<(u32, i32)> = Vec::new();
            let mut prefix = 0usize; // sum of factor dimensions before current
            for (v, &m) in cell.lists.iter().enumerate() {
                let k = m.count_ones() as usize - 1;
                if k >= 1 {
                    for (j, c) in VertexSet(m).iter().enumerate() {
                        let mut key = cell.lists.clone();
                        key[v] = m & !(1u64 << c);
                        let face = x
                            .index_of(&key)
                            .ok_or_else(|| Error::Internal("missing face cell".into()))?;
                        let local = face as usize - x.dim_range(d - 1).start;
                        let sign = if (prefix + j) % 2 == 0 { 1 } else { -1 };
                        col.push((local as u32, sign));
                    }
                }
                prefix += k;
            }
            col.sort_unstable();
            cols.push(col);
        }
        boundary.push(Boundary::from_columns(cols));
    }
    let c = ChainComplex { dims, boundary };
    if !c.verify_boundary_squared() {
        return Err(Error::Internal("cellular boundary does not square to zero".into()));
    }
    Ok(c)
}

/// Simplicial chain complex; basis element j of degree d is
/// `k.simplices_of_dim(d)[j]`, with the standard alternating signs.
pub fn simplicial_chain(k: &SimplicialComplex) -> ChainComplex {
    let Some(top) = k.dim() else {
        return ChainComplex {
            dims: Vec::new(),
            boundary: Vec::new(),
        };
    };
    let dims: Vec<usize> = k.f_vector();
    let mut boundary = Vec::with_capacity(top + 1);
    boundary.push(Boundary::from_columns((0..dims[0]).map(|_| Vec::new())));
    for d in 1..=top {
        let cols = k.simplices_of_dim(d).iter().map(|s| {
            let mut col: Vec<(u32, i32)> = (0..s.len())
                .map(|i| {
                    let mut f = s.clone();
                    f.remove(i);
                    let idx = k.index_of(&f).expect("closed complex") as u32;
                    (idx, if i % 2 == 0 { 1 } else { -1 })
                })
                .collect();
            col.sort_unstable();
            col
        });
        boundary.push(Boundary::from_columns(cols));
    }
    ChainComplex { dims, boundary }
}

/// Augmented simplicial chain complex: degree d+1 holds the d-simplices and
/// degree 0 is the empty simplex, so reduced homology in degree d is the
/// homology of this complex in degree d+1.
pub fn augmented_chain(k: &SimplicialComplex) -> ChainComplex {
    let plain = simplicial_chain(k);
    let mut dims = vec![1usize];
    dims.extend_from_slice(&plain.dims);
    let mut boundary = vec![Boundary::from_columns(std::iter::once(Vec::new()))];
    if !plain.dims.is_empty() {
        boundary.push(Boundary::from_columns(
            (0..plain.dims[0]).map(|_| vec![(0u32, 1i32)]),
        ));
        boundary.extend(plain.boundary.into_iter().skip(1));
    }
    ChainComplex { dims, boundary }
}

/// Reduced integral homology of a simplicial complex, indexed from degree 0.
pub fn reduced_homology_z(k: &SimplicialComplex) -> Vec<ZGroup> {
    let mut h = augmented_chain(k).homology_z();
    if h.is_empty() {
        return h; // empty complex: no reduced homology recorded
    }
    h.remove(0);
    h
}

/// Reduced F2 Betti numbers, indexed from degree 0.
pub fn reduced_homology_f2(k: &SimplicialComplex) -> Vec<usize> {
    let mut b = augmented_chain(k).homology_f2();
    if b.is_empty() {
        return b;
    }
    b.remove(0);
    b
}

/// Homological connectivity proxy: -2 for the empty complex, otherwise the
/// largest k with reduced integral homology vanishing through degree k
/// (dim + 1 when all of it vanishes, i.e. the complex is Z-acyclic).
pub fn homological_connectivity(k: &SimplicialComplex) -> i64 {
    if k.is_empty() {
        return -2;
    }
    let h = reduced_homology_z(k);
    for (d, g) in h.iter().enumerate() {
        if !g.is_trivial() {
            return d as i64 - 1;
        }
    }
    k.dim().unwrap() as i64 + 1
}

/// A degree-preserving chain map; `cols[d][j]` lists the image of the j-th
/// source basis element of degree d in target coordinates.
#[derive(Debug, Clone)]
pub struct ChainMap {
    pub cols: Vec<Vec<Vec<(u32, i32)>>>,
}

impl ChainMap {
    /// Exact check that the map commutes with both boundaries.
    pub fn verify(&self, src: &ChainComplex, tgt: &ChainComplex) -> Result<()> {
        use std::collections::HashMap;
        for d in 1..src.dims.len() {
            for j in 0..src.dim(d) {
                let mut acc: HashMap<u32, i64> = HashMap::new();
                // target-boundary of the image
                if let Some(fcol) = self.cols.get(d).and_then(|c| c.get(j)) {
                    for &(t, c1) in fcol {
                        for &(i, c2) in tgt.boundary[d].col(t as usize) {
                            *acc.entry(i).or_insert(0) += c1 as i64 * c2 as i64;
                        }
                    }
                }
                // minus image of the source boundary
                for &(k, c1) in src.boundary[d].col(j) {
                    if let Some(fcol) = self.cols.get(d - 1).and_then(|c| c.get(k as usize)) {
                        for &(i, c2) in fcol {
                            *acc.entry(i).or_insert(0) -= c1 as i64 * c2 as i64;
                        }
                    }
                }
                if acc.values().any(|&v| v != 0) {
                    return Err(Error::NotChainMap(d));
                }
            }
        }
        Ok(())
    }

    /// Image of a degree-d vector (dense integer coordinates).
    pub fn apply_z(&self, d: usize, v: &[BigInt], tgt_dim: usize) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); tgt_dim];
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for &(i, c) in &self.cols[d][j] {
                out[i as usize] += x * BigInt::from(c);
            }
        }
        out
    }
}

fn block_permutation_sign(sizes_in_target_order: &[(usize, usize)]) -> i32 {
    // entries are (source position, factor dimension) listed in target order;
    // Koszul sign of sorting them back by source position
    let mut sign = 1i32;
    let v = sizes_in_target_order;
    for a in 0..v.len() {
        for b in a + 1..v.len() {
            if v[a].0 > v[b].0 && v[a].1 % 2 == 1 && v[b].1 % 2 == 1 {
                sign = -sign;
            }
        }
    }
    sign
}

fn sort_sign(vals: &[usize]) -> Option<i32> {
    // parity of the permutation sorting vals; None if a value repeats
    let mut sign = 1i32;
    for a in 0..vals.len() {
        for b in a + 1..vals.len() {
            match vals[a].cmp(&vals[b]) {
                std::cmp::Ordering::Equal => return None,
                std::cmp::Ordering::Greater => sign = -sign,
                std::cmp::Ordering::Less => {}
            }
        }
    }
    Some(sign)
}

/// The chain map induced by a graph homomorphism `phi` between two Hom
/// complexes, with orientation signs. Requires the cellular map to be
/// non-expanding (it never raises cell dimension); cells whose image drops in
/// dimension map to 0. The result is verified to commute with the boundary.
pub fn cellular_chain_map(
    phi: &[usize],
    phi_dom: &Graph,
    phi_cod: &Graph,
    variance: Variance,
    sx: &HomComplex,
    tx: &HomComplex,
    src_chain: &ChainComplex,
    tgt_chain: &ChainComplex,
) -> Result<ChainMap> {
    phi_dom.check_homomorphism(phi_cod, phi)?;
    let mut cols: Vec<Vec<Vec<(u32, i32)>>> = (0..src_chain.dims.len())
        .map(|d| vec![Vec::new(); sx.dim_range(d).len()])
        .collect();
    for d in 0..src_chain.dims.len() {
        let range = sx.dim_range(d);
        for ci in range.clone() {
            let cell = &sx.cells[ci];
            let (key, sign): (Vec<u64>, i32) = match variance {
                Variance::Covariant => {
                    let mut key = Vec::with_capacity(cell.lists.len());
                    let mut sign = 1i32;
                    let mut degenerate = false;
                    for &m in &cell.lists {
                        let imgs: Vec<usize> = VertexSet(m).iter().map(|c| phi[c]).collect();
                        match sort_sign(&imgs) {
                            None => {
                                degenerate = true;
                                break;
                            }
                            Some(s) => sign *= s,
                        }
                        key.push(imgs.iter().fold(0u64, |acc, &c| acc | (1 << c)));
                    }
                    if degenerate {
                        continue;
                    }
                    (key, sign)
                }
                Variance::Contravariant => {
                    let key: Vec<u64> = phi.iter().map(|&x| cell.lists[x]).collect();
                    let tdim: usize =
                        key.iter().map(|&m| m.count_ones() as usize - 1).sum();
                    if tdim > d {
                        return Err(Error::NotChainMap(d));
                    }
                    if tdim < d {
                        continue;
                    }
                    // equal dimension: every nontrivial source factor is hit
                    // exactly once; Koszul sign of the factor rearrangement
                    let blocks: Vec<(usize, usize)> = phi
                        .iter()
                        .map(|&x| (x, cell.lists[x].count_ones() as usize - 1))
                        .filter(|&(_, k)| k >= 1)
                        .collect();
                    (key, block_permutation_sign(&blocks))
                }
            };
            let tj = tx.index_of(&key).ok_or_else(|| {
                Error::Internal("image cell missing from target complex".into())
            })?;
            let tdim = tx.cells[tj as usize].dim();
            if tdim > d {
                return Err(Error::NotChainMap(d));
            }
            if tdim < d {
                continue;
            }
            let local = tj as usize - tx.dim_range(d).start;
            cols[d][ci - range.start] = vec![(local as u32, sign)];
        }
    }
    let f = ChainMap { cols };
    f.verify(src_chain, tgt_chain)?;
    Ok(f)
}

/// The chain map induced by a simplicial vertex map (degenerate simplices go
/// to 0), verified to commute with the boundary.
pub fn simplicial_chain_map(
    vertex_map: &[u32],
    sk: &SimplicialComplex,
    tk: &SimplicialComplex,
    src_chain: &ChainComplex,
    tgt_chain: &ChainComplex,
) -> Result<ChainMap> {
    let top = sk.dim().map(|d| d + 1).unwrap_or(0);
    let mut cols: Vec<Vec<Vec<(u32, i32)>>> = Vec::with_capacity(top);
    for d in 0..top {
        let mut level = Vec::with_capacity(sk.simplices_of_dim(d).len());
        for s in sk.simplices_of_dim(d) {
            let imgs: Vec<usize> = s.iter().map(|&v| vertex_map[v as usize] as usize).collect();
            match sort_sign(&imgs) {
                None => level.push(Vec::new()),
                Some(sign) => {
                    let mut t: Vec<u32> = imgs.iter().map(|&v| v as u32).collect();
                    t.sort_unstable();
                    let idx = tk.index_of(&t).ok_or_else(|| {
                        Error::Internal("simplex image missing from target".into())
                    })? as u32;
                    level.push(vec![(idx, sign)]);
                }
            }
        }
        cols.push(level);
    }
    let f = ChainMap { cols };
    f.verify(src_chain, tgt_chain)?;
    Ok(f)
}

/// Representatives of a basis of H_d(c; F2) as cycle supports, plus the rank
/// data needed to express classes in that basis. Dense; small complexes only.
pub struct HomologyBasisF2 {
    /// columns: first the boundary image basis, then the homology cycle reps
    solver: Mat2,
    image_rank: usize,
    pub cycles: Vec<Vec<usize>>,
}

pub fn homology_basis_f2(c: &ChainComplex, d: usize) -> HomologyBasisF2 {
    let n = c.dim(d);
    let rows_below = if d == 0 { 0 } else { c.dim(d - 1) };
    // kernel of boundary_d
    let mut bd = Mat2::zero(rows_below, n);
    if d > 0 {
        for j in 0..n {
            for i in c.col_f2(d, j) {
                bd.set(i as usize, j, true);
            }
        }
    }
    let kernel: Vec<Vec<bool>> = if d == 0 {
        (0..n)
            .map(|j| (0..n).map(|i| i == j).collect())
            .collect()
    } else {
        bd.kernel_basis()
    };
    // image of boundary_{d+1}
    let above = c.dim(d + 1);
    let img_cols: Vec<Vec<usize>> = (0..above)
        .map(|j| c.col_f2(d + 1, j).iter().map(|&i| i as usize).collect())
        .collect();
    // greedily extend an image basis to the kernel
    let mut selected: Vec<Vec<usize>> = Vec::new();
    let mut red = SparseReducer::new(n);
    for col in &img_cols {
        let mut v: Vec<u32> = col.iter().map(|&i| i as u32).collect();
        v.sort_unstable();
        if !red.add_column(v) {
            selected.push(col.clone());
        }
    }
    let image_rank = selected.len();
    let mut cycles = Vec::new();
    for kv in &kernel {
        let support: Vec<usize> = kv
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(i, _)| i)
            .collect();
        let mut v: Vec<u32> = support.iter().map(|&i| i as u32).collect();
        v.sort_unstable();
        if !red.add_column(v) {
            selected.push(support.clone());
            cycles.push(support);
        }
    }
    let solver = Mat2::from_columns(n, &selected);
    HomologyBasisF2 {
        solver,
        image_rank,
        cycles,
    }
}

impl HomologyBasisF2 {
    pub fn rank(&self) -> usize {
        self.cycles.len()
    }

    /// Coordinates of a cycle (given by support) in the homology basis.
    pub fn coordinates(&self, cycle_support: &[usize]) -> Option<Vec<bool>> {
        let nrows = if self.solver.ncols == 0 {
            return Some(Vec::new());
        } else {
            self.solver.nrows
        };
        let mut b = vec![false; nrows];
        for &i in cycle_support {
            b[i] ^= true;
        }
        let x = self.solver.solve(&b)?;
        Some(x[self.image_rank..].to_vec())
    }
}

/// Matrix of the map induced by `f` on H_d(-; F2), with respect to the bases
/// computed by `homology_basis_f2` on each side.
pub fn homology_matrix_f2(
    f: &ChainMap,
    src: &ChainComplex,
    tgt: &ChainComplex,
    d: usize,
) -> Result<Mat2> {
    let sb = homology_basis_f2(src, d);
    let tb = homology_basis_f2(tgt, d);
    let mut m = Mat2::zero(tb.rank(), sb.rank());
    for (j, cyc) in sb.cycles.iter().enumerate() {
        let mut img = vec![false; tgt.dim(d)];
        for &bj in cyc {
            for &(i, c) in &f.cols[d][bj] {
                if c % 2 != 0 {
                    img[i as usize] ^= true;
                }
            }
        }
        let support: Vec<usize> = img
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(i, _)| i)
            .collect();
        let coords = tb
            .coordinates(&support)
            .ok_or_else(|| Error::Internal("image is not a cycle".into()))?;
        for (i, &b) in coords.iter().enumerate() {
            if b {
                m.set(i, j, true);
            }
        }
    }
    Ok(m)
}

/// A basis of the free part of H_d(c; Z) with coordinate bookkeeping.
/// Dense arbitrary-precision; small complexes only.
pub struct HomologyBasisZ {
    pub group: ZGroup,
    /// generator cycles (free part first, then torsion generators), as dense
    /// degree-d vectors
    pub generators: Vec<Vec<BigInt>>,
    kernel: Vec<Vec<BigInt>>, // columns span ker boundary_d
    u: zdense::ZMat,          // from SNF of the lift of boundary_{d+1}
    rank_y: usize,
    torsion_rows: Vec<usize>,
}

pub fn homology_basis_z(c: &ChainComplex, d: usize) -> Result<HomologyBasisZ> {
    let n = c.dim(d);
    let rows_below = if d == 0 { 0 } else { c.dim(d - 1) };
    let mut bd = zdense::zeros(rows_below, n);
    if d > 0 {
        for j in 0..n {
            for &(i, cc) in c.boundary[d].col(j) {
                bd[i as usize][j] += BigInt::from(cc);
            }
        }
    }
    let kernel: Vec<Vec<BigInt>> = if d == 0 {
        (0..n)
            .map(|j| {
                (0..n)
                    .map(|i| if i == j { BigInt::one() } else { BigInt::zero() })
                    .collect()
            })
            .collect()
    } else {
        zdense::kernel_basis(&bd, n)
    };
    let k = kernel.len();
    // express boundary_{d+1} columns in the kernel basis: K * Y = B
    let kmat: zdense::ZMat = (0..n)
        .map(|i| (0..k).map(|j| kernel[j][i].clone()).collect())
        .collect();
    let above = c.dim(d + 1);
    let mut y = zdense::zeros(k, above);
    for j in 0..above {
        let b: Vec<BigInt> = {
            let mut v = vec![BigInt::zero(); n];
            for &(i, cc) in c.boundary[d + 1].col(j) {
                v[i as usize] += BigInt::from(cc);
            }
            v
        };
        let sol = zdense::solve(&kmat, k, &b)
            .ok_or_else(|| Error::Internal("boundary image escapes the kernel".into()))?;
        for i in 0..k {
            y[i][j] = sol[i].clone();
        }
    }
    let (u, uinv, s, _v) = zdense::snf_transforms(&y, above);
    let rank_y = (0..k.min(above)).filter(|&i| !s[i][i].is_zero()).count();
    let mut torsion = Vec::new();
    let mut torsion_rows: Vec<usize> = Vec::new();
    for i in 0..rank_y {
        if s[i][i].abs() > BigInt::one() {
            torsion.push(s[i][i].abs());
            torsion_rows.push(i);
        }
    }
    // generator i of H_d corresponds to column i of U^{-1} in the kernel basis
    let mut generators = Vec::new();
    for i in (rank_y..k).chain(torsion_rows.iter().copied()) {
        let coeffs: Vec<BigInt> = (0..k).map(|r| uinv[r][i].clone()).collect();
        let gen: Vec<BigInt> = (0..n)
            .map(|row| (0..k).map(|r| &kernel[r][row] * &coeffs[r]).sum())
            .collect();
        generators.push(gen);
    }
    Ok(HomologyBasisZ {
        group: ZGroup {
            free_rank: k - rank_y,
            torsion,
        },
        generators,
        kernel,
        u,
        rank_y,
        torsion_rows,
    })
}

impl HomologyBasisZ {
    /// Coordinates of a cycle in H_d: free coordinates (length free_rank)
    /// followed by torsion coordinates reduced mod the orders.
    pub fn coordinates(&self, cycle: &[BigInt]) -> Result<Vec<BigInt>> {
        use num_integer::Integer;
        let k = self.kernel.len();
        let n = cycle.len();
        let kmat: zdense::ZMat = (0..n)
            .map(|i| (0..k).map(|j| self.kernel[j][i].clone()).collect())
            .collect();
        let in_kernel = zdense::solve(&kmat, k, cycle)
            .ok_or_else(|| Error::Internal("vector is not a cycle".into()))?;
        // transform to the SNF-adapted basis: rows >= rank_y are free
        // coordinates, recorded torsion rows are read mod their order, and
        // unit-diagonal rows die in the quotient
        let adapted = zdense::mat_vec(&self.u, &in_kernel);
        let mut out: Vec<BigInt> = adapted[self.rank_y..].to_vec();
        for (ti, &row) in self.torsion_rows.iter().enumerate() {
            out.push(adapted[row].mod_floor(&self.group.torsion[ti]));
        }
        Ok(out)
    }
}

/// F2 Betti numbers agree with ranks predicted by universal coefficients:
/// b_d(F2) = free_d + #{even torsion in degree d} + #{even torsion in d-1}.
pub fn verify_universal_coefficients(c: &ChainComplex) -> bool {
    let f2 = c.homology_f2();
    let z = c.homology_z();
    let even = |g: &ZGroup| {
        g.torsion
            .iter()
            .filter(|t| (*t % BigInt::from(2)).is_zero())
            .count()
    };
    (0..f2.len()).all(|d| {
        let prev = if d == 0 { 0 } else { even(&z[d - 1]) };
        f2[d] == z[d].free_rank + even(&z[d]) + prev
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hom::{cycle_involution, DEFAULT_CELL_CAP};

    fn hom(gs: &str, hs: &str) -> HomComplex {
        HomComplex::build(
            &Graph::from_spec(gs).unwrap(),
            &Graph::from_spec(hs).unwrap(),
            None,
            DEFAULT_CELL_CAP,
        )
        .unwrap()
    }

    fn rp2() -> SimplicialComplex {
        // minimal 6-vertex triangulation
        SimplicialComplex::from_maximal(
            6,
            &[
                vec![0, 1, 4],
                vec![0, 1, 5],
                vec![0, 2, 3],
                vec![0, 2, 5],
                vec![0, 3, 4],
                vec![1, 2, 3],
                vec![1, 2, 4],
                vec![1, 3, 5],
                vec![2, 4, 5],
                vec![3, 4, 5],
            ],
        )
        .unwrap()
    }

    #[test]
    fn hexagon_and_sphere_homology() {
        let hexagon = cellular_chain(&hom("complete:2", "complete:3")).unwrap();
        assert_eq!(hexagon.homology_f2(), vec![1, 1]);
        let hz = hexagon.homology_z();
        assert_eq!(hz[0], ZGroup::free(1));
        assert_eq!(hz[1], ZGroup::free(1));

        // Hom(K2,K4) is a 2-sphere
        let s2 = cellular_chain(&hom("complete:2", "complete:4")).unwrap();
        let hz = s2.homology_z();
        assert_eq!(hz[0], ZGroup::free(1));
        assert_eq!(hz[1], ZGroup::free(0));
        assert_eq!(hz[2], ZGroup::free(1));
        assert!(verify_universal_coefficients(&s2));
    }

    #[test]
    fn projective_plane_oracle() {
        let k = rp2();
        assert_eq!(k.f_vector(), vec![6, 15, 10]);
        let c = simplicial_chain(&k);
        assert!(c.verify_boundary_squared());
        let hz = c.homology_z();
        assert_eq!(hz[0], ZGroup::free(1));
        assert_eq!(
            hz[1],
            ZGroup {
                free_rank: 0,
                torsion: vec![BigInt::from(2)]
            }
        );
        assert_eq!(hz[2], ZGroup::free(0));
        assert_eq!(c.homology_f2(), vec![1, 1, 1]);
        assert!(verify_universal_coefficients(&c));
        assert_eq!(reduced_homology_f2(&k), vec![0, 1, 1]);
        assert_eq!(homological_connectivity(&k), 0);
    }

    #[test]
    fn connectivity_edge_cases() {
        assert_eq!(homological_connectivity(&SimplicialComplex::empty(3)), -2);
        let two_points = SimplicialComplex::from_maximal(2, &[vec![0], vec![1]]).unwrap();
        assert_eq!(homological_connectivity(&two_points), -1);
        let circle =
            SimplicialComplex::from_maximal(3, &[vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        assert_eq!(homological_connectivity(&circle), 0);
        let disk = SimplicialComplex::from_maximal(3, &[vec![0, 1, 2]]).unwrap();
        assert_eq!(homological_connectivity(&disk), 3);
    }

    #[test]
    fn split_relative_homology_of_disk_mod_boundary() {
        let disk = SimplicialComplex::from_maximal(3, &[vec![0, 1, 2]]).unwrap();
        let c = simplicial_chain(&disk);
        // subcomplex: the boundary circle (all vertices and edges, no triangle)
        let in_sub = vec![vec![true; 3], vec![true; 3], vec![false; 1]];
        let s = c.split(&in_sub).unwrap();
        assert_eq!(s.sub.homology_f2(), vec![1, 1, 0]);
        // relative complex ~ S^2 minus a point's worth of cells
        assert_eq!(s.quot.homology_f2(), vec![0, 0, 1]);
        assert_eq!(s.quot.homology_z()[2], ZGroup::free(1));

        // non-closed flag set errors
        let bad = vec![vec![false; 3], vec![true; 3], vec![false; 1]];
        assert!(matches!(c.split(&bad), Err(Error::NotSubcomplex(_))));
    }

    #[test]
    fn cellular_vs_order_complex_f2() {
        for (g, h) in [
            ("complete:2", "complete:3"),
            ("complete:2", "complete:4"),
            ("cycle:5", "complete:3"),
        ] {
            let x = hom(g, h);
            let cellular = cellular_chain(&x).unwrap();
            let order = simplicial_chain(&x.order_complex());
            assert_eq!(cellular.homology_f2(), order.homology_f2(), "{g} {h}");
        }
    }

    #[test]
    fn involution_chain_map_verifies() {
        let x = hom("cycle:5", "complete:4");
        let inv = cycle_involution(&x).unwrap();
        let c = cellular_chain(&x).unwrap();
        let gamma: Vec<usize> = (0..5).map(|v| (5 - v) % 5).collect();
        let f = cellular_chain_map(
            &gamma,
            &x.source,
            &x.source,
            Variance::Contravariant,
            &x,
            &x,
            &c,
            &c,
        )
        .unwrap();
        // cell-level: f agrees with the involution's permutation up to sign
        for d in 0..=x.max_dim() {
            let range = x.dim_range(d);
            for j in 0..range.len() {
                let img = &f.cols[d][j];
                assert_eq!(img.len(), 1);
                assert_eq!(
                    img[0].0 as usize + x.dim_range(d).start,
                    inv.perm[range.start + j] as usize
                );
                assert!(img[0].1 == 1 || img[0].1 == -1);
            }
        }
    }

    #[test]
    fn homology_matrix_of_identity_and_fold() {
        let x = hom("cycle:5", "complete:3");
        let c = cellular_chain(&x).unwrap();
        let id = cellular_chain_map(
            &[0, 1, 2, 3, 4],
            &x.source,
            &x.source,
            Variance::Contravariant,
            &x,
            &x,
            &c,
            &c,
        )
        .unwrap();
        for d in 0..c.dims.len() {
            let m = homology_matrix_f2(&id, &c, &c, d).unwrap();
            assert_eq!(m, Mat2::identity(m.nrows));
        }
    }

    #[test]
    fn simplicial_chain_map_degenerates_and_verifies() {
        let circle =
            SimplicialComplex::from_maximal(3, &[vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        let point = SimplicialComplex::from_maximal(1, &[vec![0]]).unwrap();
        let cc = simplicial_chain(&circle);
        let cp = simplicial_chain(&point);
        let f = simplicial_chain_map(&[0, 0, 0], &circle, &point, &cc, &cp).unwrap();
        // all edges degenerate
        assert!(f.cols[1].iter().all(|c| c.is_empty()));
        // H_1 map is 0
        let m = homology_matrix_f2(&f, &cc, &cp, 1).unwrap();
        assert_eq!(m.ncols, 1);
        assert_eq!(m.nrows, 0);
    }

    #[test]
    fn z_basis_with_coordinates() {
        let circle =
            SimplicialComplex::from_maximal(3, &[vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        let c = simplicial_chain(&circle);
        let b = homology_basis_z(&c, 1).unwrap();
        assert_eq!(b.group, ZGroup::free(1));
        assert_eq!(b.generators.len(), 1);
        let coords = b.coordinates(&b.generators[0]).unwrap();
        assert_eq!(coords.len(), 1);
        assert_eq!(coords[0].abs(), BigInt::one());
        // doubled generator has coordinate +-2
        let doubled: Vec<BigInt> = b.generators[0].iter().map(|x| x * 2).collect();
        assert_eq!(b.coordinates(&doubled).unwrap()[0].abs(), BigInt::from(2));

        // torsion coordinates on RP^2
        let c = simplicial_chain(&rp2());
        let b = homology_basis_z(&c, 1).unwrap();
        assert_eq!(b.group.torsion, vec![BigInt::from(2)]);
        assert_eq!(b.group.free_rank, 0);
        let gen = &b.generators[0];
        let coords = b.coordinates(gen).unwrap();
        assert_eq!(coords, vec![BigInt::one()]);
        let doubled: Vec<BigInt> = gen.iter().map(|x| x * 2).collect();
        assert_eq!(b.coordinates(&doubled).unwrap(), vec![BigInt::zero()]);
    }

    #[test]
    fn shifted_complex() {
        let circle =
            SimplicialComplex::from_maximal(3, &[vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        let c = simplicial_chain(&circle).shifted(2);
        assert_eq!(c.dims, vec![0, 0, 3, 3]);
        let h = c.homology_f2();
        assert_eq!(h, vec![0, 0, 1, 1]);
    }
}
