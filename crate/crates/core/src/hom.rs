//! The Hom complex Hom(G,H) as a graded cell poset, the simplicial variant
//! Hom_+(G,H), neighborhood and independence complexes, functorially induced
//! cellular maps, and the Z2-involutions coming from the symmetries of odd
//! cycles and complete graphs.

use crate::error::{Error, Result};
use crate::graph::{ComplementMode, Graph, VertexSet};
use crate::simplicial::SimplicialComplex;
use std::collections::{HashMap, HashSet};

/// A closed cell of Hom(G,H): one nonempty color list per vertex of G, such
/// that every edge of G sees only edges of H between the respective lists.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub lists: Vec<u64>,
}

impl Cell {
    pub fn dim(&self) -> usize {
        self.lists.iter().map(|m| m.count_ones() as usize - 1).sum()
    }

    /// Componentwise containment (the face relation of Def-style closure).
    pub fn is_face_of(&self, other: &Cell) -> bool {
        self.lists.len() == other.lists.len()
            && self
                .lists
                .iter()
                .zip(&other.lists)
                .all(|(a, b)| a & !b == 0)
    }
}

/// Hom(G,H) up to an optional dimension cap. Cells are deduplicated and
/// sorted by (dimension, lexicographic list tuple); all orderings downstream
/// derive from this canonical key.
#[derive(Debug, Clone)]
pub struct HomComplex {
    pub source: Graph,
    pub target: Graph,
    pub cells: Vec<Cell>,
    dim_offsets: Vec<usize>,
    /// (face, cell) pairs exactly one dimension apart
    pub cover: Vec<(u32, u32)>,
    pub dim_cap: Option<usize>,
    index: HashMap<Vec<u64>, u32>,
}

pub const DEFAULT_CELL_CAP: usize = 20_000_000;

impl HomComplex {
    /// Enumerates all cells of Hom(G,H) (up to `dim_cap` if given) by a
    /// backtracking sweep assigning each vertex of G an admissible nonempty
    /// color subset, then computes the exact cover relations.
    pub fn build(g: &Graph, h: &Graph, dim_cap: Option<usize>, cell_cap: usize) -> Result<Self> {
        let ng = g.vertex_count();
        let nh = h.vertex_count();
        let mut cells: Vec<Cell> = Vec::new();

        // looped colors of H (candidates when a G-vertex is looped)
        let looped: u64 = (0..nh)
            .filter(|&c| h.has_loop_at(c))
            .fold(0, |m, c| m | (1 << c));

        let mut lists = vec![0u64; ng];
        let full = VertexSet::full(nh).0;
        // recursion over vertices of G
        fn rec(
            g: &Graph,
            h: &Graph,
            x: usize,
            partial_dim: usize,
            dim_cap: Option<usize>,
            cell_cap: usize,
            full: u64,
            looped: u64,
            lists: &mut Vec<u64>,
            cells: &mut Vec<Cell>,
        ) -> Result<()> {
            let ng = g.vertex_count();
            if x == ng {
                if cells.len() >= cell_cap {
                    return Err(Error::ResourceCap(format!(
                        "Hom complex exceeded {cell_cap} cells"
                    )));
                }
                cells.push(Cell {
                    lists: lists.clone(),
                });
                return Ok(());
            }
            // colors individually compatible with all earlier-assigned neighbors
            let mut allowed = full;
            for y in 0..x {
                if g.has_edge(x, y) {
                    let mut ok = 0u64;
                    let mut m = allowed;
                    while m != 0 {
                        let c = m.trailing_zeros() as usize;
                        m &= m - 1;
                        if lists[y] & !h.neighbors(c) == 0 {
                            ok |= 1 << c;
                        }
                    }
                    allowed = ok;
                }
            }
            if g.has_loop_at(x) {
                allowed &= looped;
            }
            if allowed == 0 {
                return Ok(());
            }
            let budget = dim_cap.map(|cap| cap.saturating_sub(partial_dim) + 1);
            // enumerate nonempty subsets of `allowed` in increasing mask order
            let bits: Vec<usize> = VertexSet(allowed).iter().collect();
            let k = bits.len();
            for mask in 1u64..(1u64 << k) {
                let size = mask.count_ones() as usize;
                if let Some(b) = budget {
                    if size > b {
                        continue;
                    }
                }
                let set: u64 = (0..k).filter(|&i| mask >> i & 1 == 1).map(|i| 1u64 << bits[i]).sum();
                // a loop at x additionally requires all pairs inside the list
                if g.has_loop_at(x) {
                    let mut ok = true;
                    let mut m = set;
                    while m != 0 {
                        let c = m.trailing_zeros() as usize;
                        m &= m - 1;
                        if set & !h.neighbors(c) != 0 {
                            ok = false;
                            break;
                        }
                    }
                    if !ok {
                        continue;
                    }
                }
                lists[x] = set;
                rec(
                    g,
                    h,
                    x + 1,
                    partial_dim + size - 1,
                    dim_cap,
                    cell_cap,
                    full,
                    looped,
                    lists,
                    cells,
                )?;
            }
            lists[x] = 0;
            Ok(())
        }
        rec(g, h, 0, 0, dim_cap, cell_cap, full, looped, &mut lists, &mut cells)?;
        Ok(Self::from_cells(g.clone(), h.clone(), dim_cap, cells))
    }

    /// Rebuilds the canonical ordering, index and cover relations from a bare
    /// cell list (the inverse of cache serialization).
    pub fn from_cells(
        source: Graph,
        target: Graph,
        dim_cap: Option<usize>,
        mut cells: Vec<Cell>,
    ) -> Self {
        cells.sort_unstable_by(|a, b| (a.dim(), &a.lists).cmp(&(b.dim(), &b.lists)));
        let max_dim = cells.last().map(|c| c.dim()).unwrap_or(0);
        let mut dim_offsets = vec![0usize; max_dim + 2];
        for c in &cells {
            dim_offsets[c.dim() + 1] += 1;
        }
        for d in 0..max_dim + 1 {
            dim_offsets[d + 1] += dim_offsets[d];
        }
        let index: HashMap<Vec<u64>, u32> = cells
            .iter()
            .enumerate()
            .map(|(i, c)| (c.lists.clone(), i as u32))
            .collect();

        // cover relations: remove exactly one color from exactly one list
        let mut cover = Vec::new();
        for (i, c) in cells.iter().enumerate() {
            if c.dim() == 0 {
                continue;
            }
            for (x, &m) in c.lists.iter().enumerate() {
                if m.count_ones() < 2 {
                    continue;
                }
                let mut rest = m;
                while rest != 0 {
                    let bit = rest & rest.wrapping_neg();
                    rest &= rest - 1;
                    let mut key = c.lists.clone();
                    key[x] = m & !bit;
                    let j = index[&key];
                    cover.push((j, i as u32));
                }
            }
        }
        cover.sort_unstable();

        HomComplex {
            source,
            target,
            cells,
            dim_offsets,
            cover,
            dim_cap,
            index,
        }
    }

    /// Stable textual serialization for the complex cache.
    pub fn to_cache_string(&self) -> String {
        #[derive(serde::Serialize)]
        struct Repr<'a> {
            source: String,
            target: String,
            dim_cap: Option<usize>,
            cells: Vec<&'a [u64]>,
        }
        serde_json::to_string(&Repr {
            source: self.source.to_text(),
            target: self.target.to_text(),
            dim_cap: self.dim_cap,
            cells: self.cells.iter().map(|c| c.lists.as_slice()).collect(),
        })
        .expect("serialization cannot fail")
    }

    pub fn from_cache_string(s: &str) -> Result<Self> {
        #[derive(serde::Deserialize)]
        struct Repr {
            source: String,
            target: String,
            dim_cap: Option<usize>,
            cells: Vec<Vec<u64>>,
        }
        let r: Repr = serde_json::from_str(s).map_err(|e| Error::Parse {
            line: 0,
            msg: format!("bad cache entry: {e}"),
        })?;
        let source = Graph::from_text(&r.source)?;
        let target = Graph::from_text(&r.target)?;
        let x = Self::from_cells(
            source,
            target,
            r.dim_cap,
            r.cells.into_iter().map(|lists| Cell { lists }).collect(),
        );
        if !x.verify_edge_condition() {
            return Err(Error::Soundness("cached cells violate the edge condition".into()));
        }
        Ok(x)
    }

    pub fn cell_count(&self) -> usize {
        self.cells.len()
    }

    pub fn max_dim(&self) -> usize {
        self.dim_offsets.len().saturating_sub(2)
    }

    /// Index range of the cells of dimension d.
    pub fn dim_range(&self, d: usize) -> std::ops::Range<usize> {
        if d + 1 >= self.dim_offsets.len() {
            return 0..0;
        }
        self.dim_offsets[d]..self.dim_offsets[d + 1]
    }

    pub fn f_vector(&self) -> Vec<usize> {
        (0..=self.max_dim()).map(|d| self.dim_range(d).len()).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(d, &c)| if d % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum()
    }

    pub fn index_of(&self, lists: &[u64]) -> Option<u32> {
        self.index.get(lists).copied()
    }

    /// Full re-verification of the edge condition on every stored cell.
    pub fn verify_edge_condition(&self) -> bool {
        let h = &self.target;
        self.cells.iter().all(|cell| {
            (0..self.source.vertex_count()).all(|x| {
                (x..self.source.vertex_count()).all(|y| {
                    if !self.source.has_edge(x, y) {
                        return true;
                    }
                    VertexSet(cell.lists[x])
                        .iter()
                        .all(|a| cell.lists[y] & !h.neighbors(a) == 0)
                })
            })
        })
    }

    /// All strict faces of each cell, as sorted index lists.
    pub fn strict_faces(&self) -> Vec<Vec<u32>> {
        let mut out = vec![Vec::new(); self.cells.len()];
        for (i, c) in self.cells.iter().enumerate() {
            let mut faces = Vec::new();
            // product over vertices of nonempty sublists
            let subsets: Vec<Vec<u64>> = c
                .lists
                .iter()
                .map(|&m| {
                    let bits: Vec<u64> = VertexSet(m).iter().map(|b| 1u64 << b).collect();
                    (1u64..(1 << bits.len()))
                        .map(|mask| {
                            (0..bits.len())
                                .filter(|&i| mask >> i & 1 == 1)
                                .map(|i| bits[i])
                                .sum()
                        })
                        .collect()
                })
                .collect();
            let mut key = vec![0u64; c.lists.len()];
            fn rec(
                subsets: &[Vec<u64>],
                x: usize,
                key: &mut Vec<u64>,
                index: &HashMap<Vec<u64>, u32>,
                faces: &mut Vec<u32>,
            ) {
                if x == subsets.len() {
                    if let Some(&j) = index.get(key) {
                        faces.push(j);
                    }
                    return;
                }
                for &s in &subsets[x] {
                    key[x] = s;
                    rec(subsets, x + 1, key, index, faces);
                }
            }
            rec(&subsets, 0, &mut key, &self.index, &mut faces);
            faces.retain(|&j| j != i as u32);
            faces.sort_unstable();
            out[i] = faces;
        }
        out
    }

    /// Order complex of the cell poset (the barycentric subdivision):
    /// vertices are cell indices, simplices are chains of strict faces.
    /// Grows fast; intended for complexes of modest size.
    pub fn order_complex(&self) -> SimplicialComplex {
        let cofaces = self.strict_cofaces();
        let mut set: HashSet<Vec<u32>> = HashSet::new();
        let mut chain: Vec<u32> = Vec::new();
        fn rec(
            cofaces: &[Vec<u32>],
            last: u32,
            chain: &mut Vec<u32>,
            set: &mut HashSet<Vec<u32>>,
        ) {
            set.insert(chain.clone());
            for &next in &cofaces[last as usize] {
                chain.push(next);
                rec(cofaces, next, chain, set);
                chain.pop();
            }
        }
        for start in 0..self.cells.len() as u32 {
            chain.push(start);
            rec(&cofaces, start, &mut chain, &mut set);
            chain.pop();
        }
        SimplicialComplex::from_closed_set(self.cells.len(), set)
    }

    /// Strict cofaces, transposed from `strict_faces`.
    pub fn strict_cofaces(&self) -> Vec<Vec<u32>> {
        let faces = self.strict_faces();
        let mut out = vec![Vec::new(); self.cells.len()];
        for (i, fs) in faces.iter().enumerate() {
            for &j in fs {
                out[j as usize].push(i as u32);
            }
        }
        for l in out.iter_mut() {
            l.sort_unstable();
        }
        out
    }
}

/// Hom_+(G,H): like Hom but with empty lists allowed (not all empty), which
/// makes it simplicial on the vertex set V(G) x V(H); the pair (x, c) is the
/// vertex x * |V(H)| + c.
pub fn build_hom_plus(g: &Graph, h: &Graph, simplex_cap: usize) -> Result<SimplicialComplex> {
    let ng = g.vertex_count();
    let nh = h.vertex_count();
    let npairs = ng * nh;
    let mut set: HashSet<Vec<u32>> = HashSet::new();
    let mut lists = vec![0u64; ng];
    let mut current: Vec<u32> = Vec::new();

    fn admissible(g: &Graph, h: &Graph, lists: &[u64], x: usize, c: usize) -> bool {
        for y in 0..g.vertex_count() {
            if g.has_edge(x, y) {
                let mut other = lists[y];
                if y == x {
                    other |= 1 << c; // a loop constrains the new color against itself
                }
                if other & !h.neighbors(c) != 0 {
                    return false;
                }
            }
        }
        true
    }

    fn rec(
        g: &Graph,
        h: &Graph,
        nh: usize,
        start: usize,
        npairs: usize,
        simplex_cap: usize,
        lists: &mut Vec<u64>,
        current: &mut Vec<u32>,
        set: &mut HashSet<Vec<u32>>,
    ) -> Result<()> {
        if !current.is_empty() {
            if set.len() >= simplex_cap {
                return Err(Error::ResourceCap(format!(
                    "Hom_+ exceeded {simplex_cap} simplices"
                )));
            }
            set.insert(current.clone());
        }
        for p in start..npairs {
            let (x, c) = (p / nh, p % nh);
            if admissible(g, h, lists, x, c) {
                lists[x] |= 1 << c;
                current.push(p as u32);
                rec(g, h, nh, p + 1, npairs, simplex_cap, lists, current, set)?;
                current.pop();
                lists[x] &= !(1u64 << c);
            }
        }
        Ok(())
    }
    rec(g, h, nh, 0, npairs, simplex_cap, &mut lists, &mut current, &mut set)?;
    Ok(SimplicialComplex::from_closed_set(npairs, set))
}

/// Support of a Hom_+ cell: the G-vertices with a nonempty color list.
pub fn support(lists: &[u64]) -> VertexSet {
    VertexSet::from_iter(
        lists
            .iter()
            .enumerate()
            .filter(|(_, &m)| m != 0)
            .map(|(x, _)| x),
    )
}

/// Support of a Hom_+ simplex given as pair indices.
pub fn simplex_support(simplex: &[u32], nh: usize) -> VertexSet {
    VertexSet::from_iter(simplex.iter().map(|&p| p as usize / nh))
}

/// The neighborhood complex N(G): maximal simplices are the N(v).
pub fn neighborhood_complex(g: &Graph) -> SimplicialComplex {
    let gens: Vec<Vec<u32>> = (0..g.vertex_count())
        .map(|v| VertexSet(g.neighbors(v)).iter().map(|w| w as u32).collect())
        .filter(|s: &Vec<u32>| !s.is_empty())
        .collect();
    SimplicialComplex::from_maximal(g.vertex_count(), &gens).expect("valid vertices")
}

/// The independence complex Ind(G); a looped vertex is never independent.
pub fn independence_complex(g: &Graph) -> SimplicialComplex {
    let n = g.vertex_count();
    let mut set: HashSet<Vec<u32>> = HashSet::new();
    let mut current: Vec<u32> = Vec::new();
    fn rec(g: &Graph, start: usize, current: &mut Vec<u32>, set: &mut HashSet<Vec<u32>>) {
        if !current.is_empty() {
            set.insert(current.clone());
        }
        for v in start..g.vertex_count() {
            if g.has_loop_at(v) {
                continue;
            }
            if current.iter().all(|&u| !g.has_edge(u as usize, v)) {
                current.push(v as u32);
                rec(g, v + 1, current, set);
                current.pop();
            }
        }
    }
    rec(g, 0, &mut current, &mut set);
    SimplicialComplex::from_closed_set(n, set)
}

/// Checks Hom_+(G,H) == Ind(G x ¬H) under the canonical vertex bijection.
pub fn verify_hom_plus_iso(g: &Graph, h: &Graph, simplex_cap: usize) -> Result<bool> {
    let plus = build_hom_plus(g, h, simplex_cap)?;
    let prod = g.tensor_product(&h.complement(ComplementMode::Looped))?;
    let ind = independence_complex(&prod);
    Ok(plus == ind)
}

/// Which way a graph homomorphism acts on Hom complexes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variance {
    /// phi: G -> G' gives Hom(H,G) -> Hom(H,G'), lists mapped forward.
    Covariant,
    /// phi: G -> G' gives Hom(G',H) -> Hom(G,H), cells precomposed with phi.
    Contravariant,
}

/// A map of cell posets between two Hom complexes.
#[derive(Debug, Clone)]
pub struct CellularMap {
    /// target cell index for each source cell index
    pub cell_map: Vec<u32>,
}

/// The map on cells induced by a graph homomorphism `phi`.
///
/// Covariant: phi: G -> G', source = Hom(H,G), target = Hom(H,G'), and a cell
/// eta goes to x -> phi(eta(x)). Contravariant: phi: G -> G', source =
/// Hom(G',H), target = Hom(G,H), and eta goes to eta o phi.
pub fn induced_map(
    phi: &[usize],
    phi_dom: &Graph,
    phi_cod: &Graph,
    variance: Variance,
    source: &HomComplex,
    target: &HomComplex,
) -> Result<CellularMap> {
    phi_dom.check_homomorphism(phi_cod, phi)?;
    let mut cell_map = Vec::with_capacity(source.cell_count());
    for cell in &source.cells {
        let key: Vec<u64> = match variance {
            Variance::Covariant => cell
                .lists
                .iter()
                .map(|&m| VertexSet(m).iter().fold(0u64, |acc, c| acc | (1 << phi[c])))
                .collect(),
            Variance::Contravariant => phi.iter().map(|&x| cell.lists[x]).collect(),
        };
        let j = target.index_of(&key).ok_or_else(|| {
            Error::Internal("induced cell image missing from target complex".into())
        })?;
        cell_map.push(j);
    }
    Ok(CellularMap { cell_map })
}

/// A free cell-level Z2-action on a Hom complex.
#[derive(Debug, Clone)]
pub struct Involution {
    pub perm: Vec<u32>,
    pub free: bool,
}

impl Involution {
    pub fn from_cell_map(x: &HomComplex, map: CellularMap, require_free: bool) -> Result<Self> {
        let perm = map.cell_map;
        // order <= 2 and dimension preservation
        for (i, &j) in perm.iter().enumerate() {
            if perm[j as usize] as usize != i {
                return Err(Error::Internal("cell map is not an involution".into()));
            }
            if x.cells[i].dim() != x.cells[j as usize].dim() {
                return Err(Error::Internal("involution does not preserve dimension".into()));
            }
        }
        let fixed = perm.iter().enumerate().find(|(i, &j)| *i == j as usize);
        let free = fixed.is_none();
        if require_free {
            if let Some((i, _)) = fixed {
                return Err(Error::NotFree(i));
            }
        }
        Ok(Involution { perm, free })
    }

    /// Checks the involution is a poset automorphism (cover relations go to
    /// cover relations).
    pub fn respects_cover(&self, x: &HomComplex) -> bool {
        let set: HashSet<(u32, u32)> = x.cover.iter().copied().collect();
        x.cover
            .iter()
            .all(|&(f, c)| set.contains(&(self.perm[f as usize], self.perm[c as usize])))
    }

    pub fn orbit_count(&self) -> usize {
        self.perm
            .iter()
            .enumerate()
            .filter(|(i, &j)| *i as u32 <= j)
            .count()
    }
}

/// The involution of Hom(C_{2r+1}, H) induced by x -> -x on the cycle.
pub fn cycle_involution(x: &HomComplex) -> Result<Involution> {
    let n = x.source.vertex_count();
    if n < 3 || n % 2 == 0 || x.source != Graph::cycle(n)? {
        return Err(Error::BadParameter(
            "cycle_involution: source is not an odd cycle in canonical numbering".into(),
        ));
    }
    let gamma: Vec<usize> = (0..n).map(|v| (n - v) % n).collect();
    let map = induced_map(&gamma, &x.source, &x.source, Variance::Contravariant, x, x)?;
    Involution::from_cell_map(x, map, true)
}

/// The involution of Hom(K_m, H) induced by swapping the first two vertices.
pub fn complete_involution(x: &HomComplex) -> Result<Involution> {
    let m = x.source.vertex_count();
    if m < 2 || x.source != Graph::complete(m)? {
        return Err(Error::BadParameter(
            "complete_involution: source is not a complete graph on >= 2 vertices".into(),
        ));
    }
    let mut swap: Vec<usize> = (0..m).collect();
    swap.swap(0, 1);
    let map = induced_map(&swap, &x.source, &x.source, Variance::Contravariant, x, x)?;
    Involution::from_cell_map(x, map, true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn build(gspec: &str, hspec: &str) -> HomComplex {
        HomComplex::build(
            &Graph::from_spec(gspec).unwrap(),
            &Graph::from_spec(hspec).unwrap(),
            None,
            DEFAULT_CELL_CAP,
        )
        .unwrap()
    }

    #[test]
    fn hom_k2_k2_is_s0() {
        let x = build("complete:2", "complete:2");
        assert_eq!(x.f_vector(), vec![2]);
        assert!(x.cover.is_empty());
    }

    #[test]
    fn hom_k2_k3_is_hexagon() {
        let x = build("complete:2", "complete:3");
        assert_eq!(x.f_vector(), vec![6, 6]);
        // each 1-cell has exactly two covering pairs
        assert_eq!(x.cover.len(), 12);
        assert!(x.verify_edge_condition());
    }

    #[test]
    fn hom_c5_k4_vertex_count_matches_hom_enumeration() {
        let c5 = Graph::cycle(5).unwrap();
        let k4 = Graph::complete(4).unwrap();
        let x = HomComplex::build(&c5, &k4, None, DEFAULT_CELL_CAP).unwrap();
        let homs = c5.enumerate_homomorphisms(&k4, 10_000_000).unwrap();
        assert_eq!(x.dim_range(0).len(), homs.len());
        assert_eq!(x.dim_range(0).len(), 240);
        // 0-cells are exactly the homomorphisms
        for phi in &homs {
            let lists: Vec<u64> = phi.iter().map(|&c| 1u64 << c).collect();
            assert!(x.index_of(&lists).is_some());
        }
    }

    #[test]
    fn cover_relations_are_exact() {
        // exhaustive cross-check on a small complex
        let x = build("complete:2", "complete:3");
        let cover_set: HashSet<(u32, u32)> = x.cover.iter().copied().collect();
        for i in 0..x.cell_count() {
            for j in 0..x.cell_count() {
                let (a, b) = (&x.cells[i], &x.cells[j]);
                let is_cover = a.is_face_of(b) && a.dim() + 1 == b.dim();
                assert_eq!(cover_set.contains(&(i as u32, j as u32)), is_cover);
            }
        }
    }

    #[test]
    fn hom_k2_kn_f_vector_combinatorial_recount() {
        // f-vector of Hom(K2,Kn) = ordered pairs of disjoint nonempty subsets
        // of [n], graded by |A|+|B|-2
        for n in 2..=5usize {
            let x = build("complete:2", &format!("complete:{n}"));
            let mut expect = vec![0usize; 2 * n];
            for a in 1u64..(1 << n) {
                for b in 1u64..(1 << n) {
                    if a & b == 0 {
                        expect[(a.count_ones() + b.count_ones()) as usize - 2] += 1;
                    }
                }
            }
            while expect.last() == Some(&0) {
                expect.pop();
            }
            assert_eq!(x.f_vector(), expect, "n={n}");
        }
    }

    #[test]
    fn dim_cap_truncation() {
        let full = build("cycle:5", "complete:4");
        let c5 = Graph::cycle(5).unwrap();
        let k4 = Graph::complete(4).unwrap();
        let capped = HomComplex::build(&c5, &k4, Some(1), DEFAULT_CELL_CAP).unwrap();
        assert_eq!(capped.max_dim(), 1);
        assert_eq!(capped.f_vector(), full.f_vector()[..2].to_vec());
        // cover relations among kept cells survive
        let full_within: Vec<(u32, u32)> = full
            .cover
            .iter()
            .copied()
            .filter(|&(_, c)| full.cells[c as usize].dim() <= 1)
            .collect();
        assert_eq!(capped.cover.len(), full_within.len());
    }

    #[test]
    fn cell_cap_errors() {
        let c5 = Graph::cycle(5).unwrap();
        let k4 = Graph::complete(4).unwrap();
        assert!(matches!(
            HomComplex::build(&c5, &k4, None, 100),
            Err(Error::ResourceCap(_))
        ));
    }

    #[test]
    fn hom_plus_small_cases() {
        let k2 = Graph::complete(2).unwrap();
        let plus = build_hom_plus(&k2, &k2, 1_000_000).unwrap();
        // 4 vertices, 4 edges, no triangles: a 4-cycle
        assert_eq!(plus.f_vector(), vec![4, 4]);

        let k1 = Graph::complete(1).unwrap();
        for n in 2..=4usize {
            let kn = Graph::complete(n).unwrap();
            let full = build_hom_plus(&k1, &kn, 1_000_000).unwrap();
            // full (n-1)-simplex
            assert_eq!(full.simplices_of_dim(n - 1).len(), 1);
            assert_eq!(full.f_vector().iter().sum::<usize>(), (1 << n) - 1);
        }

        // vertex count |V(G)|*|V(H)| for small pairs
        for (gs, hs) in [("cycle:5", "complete:3"), ("path:3", "complete:2")] {
            let g = Graph::from_spec(gs).unwrap();
            let h = Graph::from_spec(hs).unwrap();
            let plus = build_hom_plus(&g, &h, 1_000_000).unwrap();
            assert_eq!(
                plus.simplices_of_dim(0).len(),
                g.vertex_count() * h.vertex_count()
            );
        }
    }

    #[test]
    fn neighborhood_complexes() {
        let c5 = Graph::cycle(5).unwrap();
        let n = neighborhood_complex(&c5);
        assert_eq!(n.f_vector(), vec![5, 5]);
        for i in 0..5u32 {
            let mut e = vec![(i + 4) % 5, (i + 1) % 5];
            e.sort_unstable();
            assert!(n.index_of(&e).is_some());
        }

        let k2 = Graph::complete(2).unwrap();
        assert_eq!(neighborhood_complex(&k2).f_vector(), vec![2]);

        for m in 3..=5usize {
            let kn = Graph::complete(m).unwrap();
            let n = neighborhood_complex(&kn);
            // boundary of the (m-1)-simplex
            let expect: Vec<usize> = (1..m).map(|k| binom(m, k)).collect();
            assert_eq!(n.f_vector(), expect);
        }
    }

    fn binom(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn independence_complexes() {
        let k2 = Graph::complete(2).unwrap();
        assert_eq!(independence_complex(&k2).f_vector(), vec![2]);
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(independence_complex(&c5).f_vector(), vec![5, 5]);
        let mut looped = Graph::path(3).unwrap();
        looped.add_edge(1, 1).unwrap();
        let ind = independence_complex(&looped);
        assert!(ind.all_simplices().all(|s| !s.contains(&1)));
    }

    #[test]
    fn hom_plus_iso_and_join() {
        let k2 = Graph::complete(2).unwrap();
        assert!(verify_hom_plus_iso(&k2, &k2, 1_000_000).unwrap());
        let c5 = Graph::cycle(5).unwrap();
        let k3 = Graph::complete(3).unwrap();
        assert!(verify_hom_plus_iso(&c5, &k3, 1_000_000).unwrap());
        let k1 = Graph::complete(1).unwrap();
        assert!(verify_hom_plus_iso(&k1, &k3, 1_000_000).unwrap());

        // Hom_+(K2,K2) = Ind(K2)^{*2} under (x, c) <-> (copy c, x)
        let plus = build_hom_plus(&k2, &k2, 1_000_000).unwrap();
        let joined = independence_complex(&k2).join_power(2).unwrap();
        // relabel: join vertex copy*2+orig -> pair orig*2+copy
        let relabeled: HashSet<Vec<u32>> = joined
            .all_simplices()
            .map(|s| {
                let mut t: Vec<u32> = s.iter().map(|&v| (v % 2) * 2 + v / 2).collect();
                t.sort_unstable();
                t
            })
            .collect();
        let plus_set: HashSet<Vec<u32>> = plus.all_simplices().cloned().collect();
        assert_eq!(relabeled, plus_set);
    }

    #[test]
    fn supports() {
        let eta = [0b10u64, 0, 0b1100];
        assert_eq!(support(&eta), VertexSet::from_iter([0, 2]));
        assert_eq!(simplex_support(&[1, 4, 5], 3), VertexSet::from_iter([0, 1]));
        assert_eq!(simplex_support(&[2], 3), VertexSet::from_iter([0]));
    }

    #[test]
    fn involutions_free_and_structural() {
        let x = build("cycle:5", "complete:4");
        let inv = cycle_involution(&x).unwrap();
        assert!(inv.free);
        assert!(inv.respects_cover(&x));
        assert_eq!(
            inv.perm.iter().enumerate().filter(|(i, &j)| *i == j as usize).count(),
            0
        );
        // 240 vertices -> 120 vertex orbits
        let vorbits = (0..x.dim_range(0).len())
            .filter(|&i| i as u32 <= inv.perm[i])
            .count();
        assert_eq!(vorbits, 120);

        let hex = build("complete:2", "complete:3");
        let swap = complete_involution(&hex).unwrap();
        assert!(swap.free);
        // antipodal on the hexagon: each vertex maps to its color-swapped partner
        for (i, &j) in swap.perm.iter().enumerate() {
            let c = &hex.cells[i];
            let expect: Vec<u64> = vec![c.lists[1], c.lists[0]];
            assert_eq!(hex.cells[j as usize].lists, expect);
        }

        // looped target: gamma fixes a homomorphism, action not free
        let mut looped = Graph::empty(1).unwrap();
        looped.add_edge(0, 0).unwrap();
        let c3 = Graph::cycle(3).unwrap();
        let y = HomComplex::build(&c3, &looped, None, DEFAULT_CELL_CAP).unwrap();
        assert!(matches!(cycle_involution(&y), Err(Error::NotFree(_))));
    }

    #[test]
    fn induced_map_composition_law() {
        // phi: K2 -> K3 (inclusion), psi: K3 -> K4 (inclusion)
        let k2 = Graph::complete(2).unwrap();
        let k3 = Graph::complete(3).unwrap();
        let k4 = Graph::complete(4).unwrap();
        let h = Graph::complete(2).unwrap();
        let hom_k2 = HomComplex::build(&h, &k2, None, DEFAULT_CELL_CAP).unwrap();
        let hom_k3 = HomComplex::build(&h, &k3, None, DEFAULT_CELL_CAP).unwrap();
        let hom_k4 = HomComplex::build(&h, &k4, None, DEFAULT_CELL_CAP).unwrap();
        let phi = vec![0usize, 1];
        let psi = vec![0usize, 1, 2];
        let f = induced_map(&phi, &k2, &k3, Variance::Covariant, &hom_k2, &hom_k3).unwrap();
        let g = induced_map(&psi, &k3, &k4, Variance::Covariant, &hom_k3, &hom_k4).unwrap();
        let comp: Vec<usize> = phi.iter().map(|&v| psi[v]).collect();
        let fg = induced_map(&comp, &k2, &k4, Variance::Covariant, &hom_k2, &hom_k4).unwrap();
        for i in 0..hom_k2.cell_count() {
            assert_eq!(
                g.cell_map[f.cell_map[i] as usize],
                fg.cell_map[i]
            );
        }

        // identity is the identity cellular map
        let id = induced_map(
            &[0, 1],
            &h,
            &h,
            Variance::Contravariant,
            &hom_k3,
            &hom_k3,
        )
        .unwrap();
        assert!(id.cell_map.iter().enumerate().all(|(i, &j)| i == j as usize));

        // contravariant restriction: iota: K2 -> C5 onto an edge
        let c5 = Graph::cycle(5).unwrap();
        let hom_c5_k4 = HomComplex::build(&c5, &k4, None, DEFAULT_CELL_CAP).unwrap();
        let hom_k2_k4 = HomComplex::build(&k2, &k4, None, DEFAULT_CELL_CAP).unwrap();
        let iota = vec![2usize, 3];
        let r = induced_map(
            &iota,
            &k2,
            &c5,
            Variance::Contravariant,
            &hom_c5_k4,
            &hom_k2_k4,
        )
        .unwrap();
        assert_eq!(r.cell_map.len(), hom_c5_k4.cell_count());
    }
}
