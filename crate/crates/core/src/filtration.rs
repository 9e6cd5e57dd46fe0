//! The support filtration of C_*(Hom_+(G,K_n)), its E^1 page with connecting
//! maps, the based splitting of each graded piece into shifted cellular chain
//! complexes of induced-subgraph Hom complexes, and desk-scale spectral
//! sequence stabilization checks over F2.

use crate::chain::{
    cellular_chain, homology_basis_f2, simplicial_chain, ChainComplex, HomologyBasisF2, ZGroup,
};
use crate::error::{Error, Result};
use crate::graph::{k_subsets_lex, Graph, VertexSet};
use crate::hom::{build_hom_plus, simplex_support, HomComplex};
use crate::matrix::gf2::Mat2;
use crate::simplicial::SimplicialComplex;

/// The filtration F_k = <|supp eta| <= k+1> of Hom_+(G,K_n).
pub struct SupportFiltration {
    pub g: Graph,
    pub n: usize,
    pub plus: SimplicialComplex,
    pub chain: ChainComplex,
    /// per degree, per simplex: support cardinality
    pub supp: Vec<Vec<usize>>,
}

impl SupportFiltration {
    /// Index of the top filtration step (F_{|V(G)|-1} = everything).
    pub fn top_step(&self) -> usize {
        self.g.vertex_count().saturating_sub(1)
    }

    /// Membership flags of F_s per degree.
    pub fn flags(&self, s: isize) -> Vec<Vec<bool>> {
        self.supp
            .iter()
            .map(|level| {
                level
                    .iter()
                    .map(|&c| s >= 0 && c <= s as usize + 1)
                    .collect()
            })
            .collect()
    }
}

pub fn support_filtration(g: &Graph, n: usize, simplex_cap: usize) -> Result<SupportFiltration> {
    let kn = Graph::complete(n)?;
    let plus = build_hom_plus(g, &kn, simplex_cap)?;
    let chain = simplicial_chain(&plus);
    let supp: Vec<Vec<usize>> = (0..chain.dims.len())
        .map(|d| {
            plus.simplices_of_dim(d)
                .iter()
                .map(|s| simplex_support(s, n).len())
                .collect()
        })
        .collect();
    // boundary closure: support never grows under faces
    for d in 1..chain.dims.len() {
        for j in 0..chain.dim(d) {
            for &(i, _) in chain.boundary[d].col(j) {
                if supp[d - 1][i as usize] > supp[d][j] {
                    return Err(Error::Internal("support grew under a face".into()));
                }
            }
        }
    }
    // the last step exhausts the complex
    if supp
        .iter()
        .flatten()
        .any(|&c| c == 0 || c > g.vertex_count())
    {
        return Err(Error::Internal("support cardinality out of range".into()));
    }
    Ok(SupportFiltration {
        g: g.clone(),
        n,
        plus,
        chain,
        supp,
    })
}

/// One graded piece (F_s, F_{s-1}) as a chain complex plus bookkeeping.
struct RelativePiece {
    complex: ChainComplex,
    /// local index -> ambient index, per degree
    to_ambient: Vec<Vec<u32>>,
    /// ambient index -> local index where defined
    from_ambient: Vec<std::collections::HashMap<u32, u32>>,
    bases: Vec<HomologyBasisF2>,
}

fn relative_piece(f: &SupportFiltration, s: usize) -> Result<RelativePiece> {
    // restrict to F_s, then quotient by F_{s-1}
    let fs = f.flags(s as isize);
    let split_s = f.chain.split(&fs)?;
    let sub = split_s.sub;
    let prev_local: Vec<Vec<bool>> = (0..sub.dims.len())
        .map(|d| {
            split_s.sub_index[d]
                .iter()
                .map(|&amb| f.supp[d][amb as usize] <= s) // supp <= (s-1)+1
                .collect()
        })
        .collect();
    let rel = sub.split(&prev_local)?;
    let to_ambient: Vec<Vec<u32>> = (0..rel.quot.dims.len())
        .map(|d| {
            rel.quot_index[d]
                .iter()
                .map(|&loc| split_s.sub_index[d][loc as usize])
                .collect()
        })
        .collect();
    let from_ambient = to_ambient
        .iter()
        .map(|v| {
            v.iter()
                .enumerate()
                .map(|(loc, &amb)| (amb, loc as u32))
                .collect()
        })
        .collect();
    let bases = (0..rel.quot.dims.len())
        .map(|d| homology_basis_f2(&rel.quot, d))
        .collect();
    Ok(RelativePiece {
        complex: rel.quot,
        to_ambient,
        from_ambient,
        bases,
    })
}

/// The E^1 tableau with its connecting differentials over F2.
pub struct E1Page {
    /// ranks[s][d] = rank over F2 of E^1_{d,s}
    pub ranks_f2: Vec<Vec<usize>>,
    /// integral relative homology groups, same indexing
    pub groups_z: Vec<Vec<ZGroup>>,
    /// d1[s][d]: matrix E^1_{d,s} -> E^1_{d-1,s-1} in the computed bases
    pub d1: Vec<Vec<Mat2>>,
}

pub fn e1_page(f: &SupportFiltration) -> Result<E1Page> {
    let steps = f.top_step() + 1;
    let degs = f.chain.dims.len();
    let pieces: Vec<RelativePiece> = (0..steps)
        .map(|s| relative_piece(f, s))
        .collect::<Result<_>>()?;
    let ranks_f2: Vec<Vec<usize>> = pieces
        .iter()
        .map(|p| (0..degs).map(|d| p.bases.get(d).map(|b| b.rank()).unwrap_or(0)).collect())
        .collect();
    let groups_z: Vec<Vec<ZGroup>> = pieces
        .iter()
        .map(|p| {
            let mut h = p.complex.homology_z();
            h.resize(degs, ZGroup::free(0));
            h
        })
        .collect();

    // connecting map: lift a relative cycle, take the ambient boundary, read
    // it in the next piece down
    let mut d1: Vec<Vec<Mat2>> = Vec::with_capacity(steps);
    for s in 0..steps {
        let mut per_deg = Vec::with_capacity(degs);
        for d in 0..degs {
            let src_rank = ranks_f2[s][d];
            let tgt_rank = if s >= 1 && d >= 1 { ranks_f2[s - 1][d - 1] } else { 0 };
            let mut m = Mat2::zero(tgt_rank, src_rank);
            if s >= 1 && d >= 1 && src_rank > 0 && tgt_rank > 0 {
                let src = &pieces[s];
                let tgt = &pieces[s - 1];
                for (j, cyc) in src.bases[d].cycles.iter().enumerate() {
                    // ambient boundary of the canonical lift, mod 2
                    let mut acc: std::collections::HashSet<u32> = std::collections::HashSet::new();
                    for &loc in cyc {
                        let amb = src.to_ambient[d][loc] as usize;
                        for row in f.chain.col_f2(d, amb) {
                            if !acc.insert(row) {
                                acc.remove(&row);
                            }
                        }
                    }
                    let support: Vec<usize> = acc
                        .into_iter()
                        .filter_map(|amb| {
                            tgt.from_ambient[d - 1].get(&amb).map(|&loc| loc as usize)
                        })
                        .collect();
                    let coords = tgt.bases[d - 1]
                        .coordinates(&support)
                        .ok_or_else(|| Error::Internal("d1 image is not a relative cycle".into()))?;
                    for (i, &bit) in coords.iter().enumerate() {
                        if bit {
                            m.set(i, j, true);
                        }
                    }
                }
            }
            per_deg.push(m);
        }
        d1.push(per_deg);
    }
    // d1 o d1 = 0
    for s in 2..steps {
        for d in 2..degs {
            let a = &d1[s][d];
            let b = &d1[s - 1][d - 1];
            for j in 0..a.ncols {
                let mid: Vec<bool> = (0..a.nrows).map(|i| a.get(i, j)).collect();
                let out = b.mul_vec(&mid);
                if out.iter().any(|&x| x) {
                    return Err(Error::Internal("d1 does not square to zero".into()));
                }
            }
        }
    }
    Ok(E1Page {
        ranks_f2,
        groups_z,
        d1,
    })
}

impl E1Page {
    /// Euler consistency: the signed rank sum equals the Euler characteristic
    /// of the ambient complex.
    pub fn euler_characteristic(&self) -> i64 {
        self.ranks_f2
            .iter()
            .flat_map(|per_s| per_s.iter().enumerate())
            .map(|(d, &r)| if d % 2 == 0 { r as i64 } else { -(r as i64) })
            .sum()
    }

    /// E^2 ranks along the diagonal row d - s = r, indexed by s: homology of
    /// (E^1, d1) at (s + r, s).
    pub fn e2_row(&self, r: isize) -> Vec<usize> {
        let steps = self.ranks_f2.len();
        let degs = self.ranks_f2.first().map(|v| v.len()).unwrap_or(0);
        let rank_at = |s: isize, d: isize| -> usize {
            if s < 0 || d < 0 || s as usize >= steps || d as usize >= degs {
                0
            } else {
                self.ranks_f2[s as usize][d as usize]
            }
        };
        (0..steps)
            .map(|s| {
                let d = s as isize + r;
                if d < 0 || d as usize >= degs {
                    return 0;
                }
                let (s, d) = (s, d as usize);
                // outgoing: d1[s][d]; incoming: d1[s+1][d+1]
                let out_rank = self.d1[s][d].rank();
                let in_rank = if s + 1 < steps && d + 1 < degs {
                    self.d1[s + 1][d + 1].rank()
                } else {
                    0
                };
                rank_at(s as isize, d as isize) - out_rank - in_rank
            })
            .collect()
    }
}

/// Dimension over F2 of E^r_{s,d} computed directly from the filtered chain
/// complex (dense; desk scale). r = 1 must match the relative-homology page;
/// large r gives E^infinity.
pub fn er_dim(f: &SupportFiltration, r: usize, s: isize, d: usize) -> usize {
    let n_d = f.chain.dim(d);
    if n_d == 0 || s < 0 {
        return 0;
    }
    let in_step = |deg: usize, j: usize, step: isize| -> bool {
        step >= 0 && f.supp[deg][j] <= step as usize + 1
    };
    // basis vectors (ambient coordinates) of {x in F_s C_d : dx in F_{s-r} C_{d-1}}
    let z_basis = |deg: usize, step: isize, drop: isize| -> Vec<Vec<bool>> {
        let n = f.chain.dim(deg);
        let cols: Vec<usize> = (0..n).filter(|&j| in_step(deg, j, step)).collect();
        if deg == 0 {
            return cols
                .iter()
                .map(|&j| (0..n).map(|i| i == j).collect())
                .collect();
        }
        let below = f.chain.dim(deg - 1);
        let rows: Vec<usize> = (0..below).filter(|&i| !in_step(deg - 1, i, drop)).collect();
        let row_pos: std::collections::HashMap<usize, usize> =
            rows.iter().enumerate().map(|(k, &i)| (i, k)).collect();
        let mut m = Mat2::zero(rows.len(), cols.len());
        for (cj, &j) in cols.iter().enumerate() {
            for i in f.chain.col_f2(deg, j) {
                if let Some(&k) = row_pos.get(&(i as usize)) {
                    m.set(k, cj, true);
                }
            }
        }
        m.kernel_basis()
            .into_iter()
            .map(|kv| {
                let mut x = vec![false; n];
                for (cj, &j) in cols.iter().enumerate() {
                    if kv[cj] {
                        x[j] = true;
                    }
                }
                x
            })
            .collect()
    };
    let fs_basis = |deg: usize, step: isize| -> Vec<Vec<bool>> {
        (0..f.chain.dim(deg))
            .filter(|&j| in_step(deg, j, step))
            .map(|j| (0..f.chain.dim(deg)).map(|i| i == j).collect())
            .collect()
    };
    let rank_of = |vecs: &[Vec<bool>]| -> usize {
        if vecs.is_empty() {
            return 0;
        }
        let cols: Vec<Vec<usize>> = vecs
            .iter()
            .map(|v| v.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i).collect())
            .collect();
        Mat2::from_columns(n_d, &cols).rank()
    };
    let zr = z_basis(d, s, s - r as isize);
    let fprev = fs_basis(d, s - 1);
    let mut numerator = zr;
    numerator.extend(fprev.iter().cloned());
    let num = rank_of(&numerator);
    // boundaries of Z^{r-1}_{s+r-1, d+1}
    let zprev = z_basis(d + 1, s + r as isize - 1, s);
    let mut boundaries: Vec<Vec<bool>> = Vec::new();
    for x in &zprev {
        let mut b = vec![false; n_d];
        if d + 1 < f.chain.dims.len() {
            for (j, &bit) in x.iter().enumerate() {
                if bit {
                    for i in f.chain.col_f2(d + 1, j) {
                        b[i as usize] ^= true;
                    }
                }
            }
        }
        boundaries.push(b);
    }
    let mut denominator = boundaries;
    denominator.extend(fprev);
    let den = rank_of(&denominator);
    num - den
}

/// Checks the page computed by `er_dim` stabilizes and abuts to the total F2
/// homology of Hom_+(G,K_n) along every diagonal.
pub fn verify_abutment(f: &SupportFiltration) -> Result<bool> {
    let degs = f.chain.dims.len();
    let steps = f.top_step() + 1;
    let r_stab = steps + 1;
    // stabilization: one more page changes nothing
    for s in 0..steps {
        for d in 0..degs {
            if er_dim(f, r_stab, s as isize, d) != er_dim(f, r_stab + 1, s as isize, d) {
                return Ok(false);
            }
        }
    }
    let betti = f.chain.homology_f2();
    for (d, &b) in betti.iter().enumerate() {
        let total: usize = (0..steps).map(|s| er_dim(f, r_stab, s as isize, d)).sum();
        if total != b {
            return Ok(false);
        }
    }
    Ok(true)
}

fn epsilon_sign(lists: &[u64]) -> i32 {
    // diagonal sign of the splitting bijection: position-weighted parity of
    // the factor dimensions over the support
    let mut e = 0usize;
    let mut i = 0usize;
    for &m in lists {
        if m == 0 {
            continue;
        }
        e += i * (m.count_ones() as usize - 1);
        i += 1;
    }
    if e % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Verifies the based isomorphism F_s/F_{s-1} = sum over (s+1)-subsets S of
/// C_*(Hom(G[S],K_n))[s], including signs, by exact column comparison.
pub fn verify_e1_splitting(g: &Graph, n: usize, s: usize, simplex_cap: usize) -> Result<bool> {
    let f = support_filtration(g, n, simplex_cap)?;
    let piece = relative_piece(&f, s)?;
    let nv = g.vertex_count();
    if s >= nv {
        return Ok(piece.complex.dims.iter().all(|&c| c == 0));
    }
    // blocks: for each S, Hom(G[S],Kn) with its cellular chain, shifted by s
    struct Block {
        verts: Vec<usize>, // sorted members of S
        x: HomComplex,
        chain: ChainComplex,
        offset_in_degree: Vec<usize>,
    }
    let kn = Graph::complete(n)?;
    let mut blocks = Vec::new();
    for mask in k_subsets_lex(nv, s + 1) {
        let (sub, verts) = g.induced(VertexSet(mask));
        let x = HomComplex::build(&sub, &kn, None, simplex_cap)?;
        let chain = cellular_chain(&x)?;
        blocks.push(Block {
            verts,
            x,
            chain,
            offset_in_degree: Vec::new(),
        });
    }
    // degreewise offsets of each block in the direct sum (after the [s] shift)
    let degs = piece.complex.dims.len();
    let mut sum_dims = vec![0usize; degs];
    for b in blocks.iter_mut() {
        b.offset_in_degree = vec![0; degs];
        for d in 0..degs {
            b.offset_in_degree[d] = sum_dims[d];
            if d >= s {
                sum_dims[d] += b.chain.dim(d - s);
            }
        }
    }
    if sum_dims != piece.complex.dims {
        return Ok(false);
    }
    // the bijection: relative simplex -> (block of its support, cell, sign)
    let locate = |d: usize, loc: usize| -> Result<(usize, usize, i32)> {
        let amb = piece.to_ambient[d][loc] as usize;
        let simplex = &f.plus.simplices_of_dim(d)[amb];
        let support = simplex_support(simplex, n);
        let bi = blocks
            .iter()
            .position(|b| VertexSet::from_iter(b.verts.iter().copied()) == support)
            .ok_or_else(|| Error::Internal("support block missing".into()))?;
        let b = &blocks[bi];
        // color lists per vertex of G[S]
        let mut lists = vec![0u64; b.verts.len()];
        for &p in simplex.iter() {
            let (x, c) = (p as usize / n, p as usize % n);
            let xi = b.verts.iter().position(|&v| v == x).unwrap();
            lists[xi] |= 1 << c;
        }
        let cell = b
            .x
            .index_of(&lists)
            .ok_or_else(|| Error::Internal("cell missing in block".into()))?
            as usize;
        let local_cell = cell - b.x.dim_range(d - s).start;
        Ok((bi, local_cell, epsilon_sign(&lists)))
    };
    // exact column comparison: mapped relative boundary vs block boundary
    for d in 0..degs {
        for j in 0..piece.complex.dim(d) {
            let (bi, cell, sign) = locate(d, j)?;
            let b = &blocks[bi];
            // expected: sign * boundary of the block cell, pushed to sum coords
            let mut expected: Vec<(usize, i32)> = Vec::new();
            if d >= 1 && d - s < b.chain.dims.len() && d > s {
                for &(i, c) in b.chain.boundary[d - s].col(cell) {
                    expected.push((b.offset_in_degree[d - 1] + i as usize, sign * c));
                }
            }
            expected.sort_unstable();
            // actual: relative boundary mapped through the bijection
            let mut actual: Vec<(usize, i32)> = Vec::new();
            if d >= 1 {
                for &(i, c) in piece.complex.boundary[d].col(j) {
                    let (fbi, fcell, fsign) = locate(d - 1, i as usize)?;
                    if fbi != bi {
                        return Ok(false); // faces must stay in the same block
                    }
                    actual.push((
                        blocks[fbi].offset_in_degree[d - 1] + fcell,
                        fsign * c,
                    ));
                }
            }
            actual.sort_unstable();
            if expected != actual {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
