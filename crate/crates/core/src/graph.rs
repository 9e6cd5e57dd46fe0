//! Finite undirected graphs with loops, stored as symmetric bit-matrix adjacency.
//!
//! Vertices are dense indices `0..n` with `n <= 64`, which covers everything at
//! desk scale (the largest objects built here are tensor products like
//! C5 x ¬K5 on 25 vertices).

use crate::error::{Error, Result};
use std::fmt::Write as _;

pub const MAX_VERTICES: usize = 64;

/// A subset of the vertices of a fixed graph, as a bitmask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn from_iter<I: IntoIterator<Item = usize>>(it: I) -> Self {
        VertexSet(it.into_iter().fold(0u64, |m, v| m | (1 << v)))
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0 >> v & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        let mut m = self.0;
        std::iter::from_fn(move || {
            if m == 0 {
                None
            } else {
                let v = m.trailing_zeros() as usize;
                m &= m - 1;
                Some(v)
            }
        })
    }
}

/// Finite graph; the adjacency relation is kept symmetric by construction.
/// Loops are allowed: `(v,v)` may be an edge.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>, // adj[v] = bitmask of neighbors of v (v itself iff loop)
}

/// Complement flavor: `Looped` is ¬G (complement inside V x V),
/// `Unlooped` additionally removes the diagonal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComplementMode {
    Looped,
    Unlooped,
}

impl Graph {
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::BadParameter(format!(
                "at most {MAX_VERTICES} vertices supported, got {n}"
            )));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Adds the undirected edge (u,v); u == v adds a loop.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::BadParameter(format!(
                "edge ({u},{v}) out of range for {} vertices",
                self.n
            )));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    pub fn has_loop_at(&self, v: usize) -> bool {
        self.has_edge(v, v)
    }

    pub fn has_any_loop(&self) -> bool {
        (0..self.n).any(|v| self.has_loop_at(v))
    }

    /// Neighborhood mask N(v); contains v itself iff v is looped.
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Number of undirected adjacencies; a loop counts once.
    pub fn edge_count(&self) -> usize {
        let mut c = 0;
        for u in 0..self.n {
            for v in u..self.n {
                if self.has_edge(u, v) {
                    c += 1;
                }
            }
        }
        c
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|u| (0..self.n).all(|v| self.has_edge(u, v) == self.has_edge(v, u)))
    }

    // ---- named families ----

    pub fn complete(m: usize) -> Result<Self> {
        if m < 1 {
            return Err(Error::BadParameter("complete: need m >= 1".into()));
        }
        let mut g = Graph::empty(m)?;
        for u in 0..m {
            for v in u + 1..m {
                g.add_edge(u, v)?;
            }
        }
        Ok(g)
    }

    /// Cycle on n >= 3 vertices; vertices are residues 0..n-1 in cyclic order.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::BadParameter("cycle: need n >= 3".into()));
        }
        let mut g = Graph::empty(n)?;
        for v in 0..n {
            g.add_edge(v, (v + 1) % n)?;
        }
        Ok(g)
    }

    pub fn path(n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::BadParameter("path: need n >= 1".into()));
        }
        let mut g = Graph::empty(n)?;
        for v in 0..n.saturating_sub(1) {
            g.add_edge(v, v + 1)?;
        }
        Ok(g)
    }

    /// Kneser graph: vertices are the k-subsets of [n] in lexicographic order,
    /// edges are disjoint pairs.
    pub fn kneser(n: usize, k: usize) -> Result<Self> {
        if k < 1 || 2 * k > n {
            return Err(Error::BadParameter("kneser: need 1 <= k <= n/2".into()));
        }
        let subsets = k_subsets_lex(n, k);
        let mut g = Graph::empty(subsets.len())?;
        for i in 0..subsets.len() {
            for j in i + 1..subsets.len() {
                if subsets[i] & subsets[j] == 0 {
                    g.add_edge(i, j)?;
                }
            }
        }
        Ok(g)
    }

    /// Parses a family spec string: `complete:4`, `cycle:5`, `path:4`, `kneser:5,2`.
    pub fn from_spec(spec: &str) -> Result<Self> {
        let bad = || Error::BadParameter(format!("unknown family spec `{spec}`"));
        let (family, params) = spec.split_once(':').ok_or_else(bad)?;
        let nums: Vec<usize> = params
            .split(',')
            .map(|s| s.trim().parse::<usize>().map_err(|_| bad()))
            .collect::<Result<_>>()?;
        match (family, nums.as_slice()) {
            ("complete", [m]) => Graph::complete(*m),
            ("cycle", [n]) => Graph::cycle(*n),
            ("path", [n]) => Graph::path(*n),
            ("kneser", [n, k]) => Graph::kneser(*n, *k),
            _ => Err(bad()),
        }
    }

    // ---- operations ----

    pub fn complement(&self, mode: ComplementMode) -> Graph {
        let full = VertexSet::full(self.n).0;
        let adj = (0..self.n)
            .map(|v| {
                let mut row = full & !self.adj[v];
                if mode == ComplementMode::Unlooped {
                    row &= !(1 << v);
                }
                row
            })
            .collect();
        Graph { n: self.n, adj }
    }

    /// Induced subgraph on S, relabeled canonically (order of S preserved).
    /// Returns the graph and the list of original vertex ids per new index.
    pub fn induced(&self, s: VertexSet) -> (Graph, Vec<usize>) {
        let verts: Vec<usize> = s.iter().filter(|&v| v < self.n).collect();
        let mut g = Graph::empty(verts.len()).expect("subset of a valid graph");
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j).unwrap();
                }
            }
        }
        (g, verts)
    }

    /// Categorical (tensor) product: vertex (g,h) is g*|V(H)|+h, and
    /// ((g,h),(g',h')) is an edge iff both coordinates are edges.
    pub fn tensor_product(&self, other: &Graph) -> Result<Graph> {
        let n = self.n * other.n;
        let mut g = Graph::empty(n)?;
        for g1 in 0..self.n {
            for h1 in 0..other.n {
                for g2 in 0..self.n {
                    for h2 in 0..other.n {
                        if self.has_edge(g1, g2) && other.has_edge(h1, h2) {
                            g.add_edge(g1 * other.n + h1, g2 * other.n + h2)?;
                        }
                    }
                }
            }
        }
        Ok(g)
    }

    /// H+ : adds a looped base vertex (the last index) adjacent to everything.
    pub fn add_base_vertex(&self) -> Result<Graph> {
        let n = self.n + 1;
        let mut g = Graph::empty(n)?;
        for u in 0..self.n {
            for v in u..self.n {
                if self.has_edge(u, v) {
                    g.add_edge(u, v)?;
                }
            }
            g.add_edge(u, self.n)?;
        }
        g.add_edge(self.n, self.n)?;
        Ok(g)
    }

    /// All graph homomorphisms self -> other, in lexicographic order of the
    /// map as a tuple. `node_cap` bounds the number of search nodes.
    pub fn enumerate_homomorphisms(&self, other: &Graph, node_cap: usize) -> Result<Vec<Vec<usize>>> {
        let mut out = Vec::new();
        let mut assignment = vec![0usize; self.n];
        let mut nodes = 0usize;
        self.hom_backtrack(other, 0, &mut assignment, &mut out, &mut nodes, node_cap)?;
        Ok(out)
    }

    fn hom_backtrack(
        &self,
        other: &Graph,
        x: usize,
        assignment: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
        nodes: &mut usize,
        node_cap: usize,
    ) -> Result<()> {
        if x == self.n {
            out.push(assignment.clone());
            return Ok(());
        }
        // colors compatible with every already-assigned neighbor of x
        let mut allowed = VertexSet::full(other.n).0;
        for y in 0..x {
            if self.has_edge(x, y) {
                allowed &= other.neighbors(assignment[y]);
            }
        }
        if self.has_loop_at(x) {
            // color must be looped in the target
            allowed &= (0..other.n)
                .filter(|&c| other.has_loop_at(c))
                .fold(0u64, |m, c| m | (1 << c));
        }
        let mut m = allowed;
        while m != 0 {
            let c = m.trailing_zeros() as usize;
            m &= m - 1;
            *nodes += 1;
            if *nodes > node_cap {
                return Err(Error::ResourceCap(format!(
                    "homomorphism search exceeded {node_cap} nodes"
                )));
            }
            assignment[x] = c;
            self.hom_backtrack(other, x + 1, assignment, out, nodes, node_cap)?;
        }
        Ok(())
    }

    /// Checks that `phi` maps every edge of self to an edge of other.
    pub fn check_homomorphism(&self, other: &Graph, phi: &[usize]) -> Result<()> {
        if phi.len() != self.n || phi.iter().any(|&c| c >= other.n) {
            return Err(Error::BadParameter("homomorphism has wrong domain/range".into()));
        }
        for u in 0..self.n {
            for v in u..self.n {
                if self.has_edge(u, v) && !other.has_edge(phi[u], phi[v]) {
                    return Err(Error::NotHomomorphism(u, v));
                }
            }
        }
        Ok(())
    }

    /// All ordered pairs (u, v), u != v, with N(v) ⊆ N(u); such a v folds away.
    pub fn find_folds(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in 0..self.n {
                if u != v && self.adj[v] & !self.adj[u] == 0 {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Greedy upper bound on the chromatic number (descending-degree order).
    pub fn greedy_chromatic_upper(&self) -> Result<usize> {
        if let Some(v) = (0..self.n).find(|&v| self.has_loop_at(v)) {
            return Err(Error::LoopPresent(v));
        }
        if self.n == 0 {
            return Ok(0);
        }
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(self.degree(v)), v));
        let mut color = vec![usize::MAX; self.n];
        let mut used = 0usize;
        for &v in &order {
            let mut taken = 0u64;
            for u in VertexSet(self.adj[v]).iter() {
                if color[u] != usize::MAX {
                    taken |= 1 << color[u];
                }
            }
            let c = (!taken).trailing_zeros() as usize;
            color[v] = c;
            used = used.max(c + 1);
        }
        Ok(used.max(1))
    }

    /// Exact maximum independent set size, by branch and bound.
    /// Looped vertices are never independent.
    pub fn max_independent_set(&self) -> usize {
        let mut cand = 0u64;
        for v in 0..self.n {
            if !self.has_loop_at(v) {
                cand |= 1 << v;
            }
        }
        let mut best = 0;
        self.mis_branch(cand, 0, &mut best);
        best
    }

    fn mis_branch(&self, cand: u64, size: usize, best: &mut usize) {
        if size + cand.count_ones() as usize <= *best {
            return;
        }
        if cand == 0 {
            *best = (*best).max(size);
            return;
        }
        let v = cand.trailing_zeros() as usize;
        // take v
        self.mis_branch(cand & !self.adj[v] & !(1 << v), size + 1, best);
        // skip v
        self.mis_branch(cand & !(1 << v), size, best);
    }

    /// Deletes one vertex, relabeling the rest in order.
    pub fn delete_vertex(&self, v: usize) -> (Graph, Vec<usize>) {
        let mut s = VertexSet::full(self.n);
        s.0 &= !(1 << v);
        self.induced(s)
    }

    // ---- text format ----

    /// `vertices N` header, then one `u v` line per undirected adjacency
    /// (u = v denotes a loop); `#` starts a comment.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        writeln!(s, "vertices {}", self.n).unwrap();
        for u in 0..self.n {
            for v in u..self.n {
                if self.has_edge(u, v) {
                    writeln!(s, "{u} {v}").unwrap();
                }
            }
        }
        s
    }

    pub fn from_text(text: &str) -> Result<Graph> {
        let mut g: Option<Graph> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: &str| Error::Parse {
                line: idx + 1,
                msg: msg.to_string(),
            };
            if let Some(rest) = line.strip_prefix("vertices") {
                if g.is_some() {
                    return Err(err("duplicate `vertices` header"));
                }
                let n: usize = rest
                    .trim()
                    .parse()
                    .map_err(|_| err("expected `vertices N`"))?;
                g = Some(Graph::empty(n).map_err(|e| Error::Parse {
                    line: idx + 1,
                    msg: e.to_string(),
                })?);
            } else {
                let g = g.as_mut().ok_or_else(|| err("missing `vertices N` header"))?;
                let mut it = line.split_whitespace();
                let u: usize = it
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| err("expected `u v`"))?;
                let v: usize = it
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| err("expected `u v`"))?;
                if it.next().is_some() {
                    return Err(err("trailing tokens after edge"));
                }
                g.add_edge(u, v).map_err(|e| Error::Parse {
                    line: idx + 1,
                    msg: e.to_string(),
                })?;
            }
        }
        g.ok_or(Error::Parse {
            line: 0,
            msg: "empty graph file".into(),
        })
    }
}

/// k-subsets of [n] as bitmasks, in lexicographic order of the sorted tuples.
pub fn k_subsets_lex(n: usize, k: usize) -> Vec<u64> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn rec(n: usize, k: usize, start: usize, current: &mut Vec<usize>, out: &mut Vec<u64>) {
        if current.len() == k {
            out.push(current.iter().fold(0u64, |m, &v| m | (1 << v)));
            return;
        }
        for v in start..n {
            current.push(v);
            rec(n, k, v + 1, current, out);
            current.pop();
        }
    }
    rec(n, k, 0, &mut current, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_families() {
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(k4.vertex_count(), 4);
        assert_eq!(k4.edge_count(), 6);
        assert!(!k4.has_any_loop());

        let petersen = Graph::kneser(5, 2).unwrap();
        assert_eq!(petersen.vertex_count(), 10);
        // oracle: brute-force count of disjoint 2-subset pairs of [5]
        let subs = k_subsets_lex(5, 2);
        let mut disjoint = 0;
        for i in 0..subs.len() {
            for j in i + 1..subs.len() {
                if subs[i] & subs[j] == 0 {
                    disjoint += 1;
                }
            }
        }
        assert_eq!(disjoint, 15);
        assert_eq!(petersen.edge_count(), 15);

        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(c5.edge_count(), 5);
        for i in 0..5 {
            assert!(c5.has_edge(i, (i + 1) % 5));
            assert!(!c5.has_edge(i, (i + 2) % 5));
        }
        assert!(Graph::cycle(2).is_err());
        assert!(Graph::kneser(5, 3).is_err());
    }

    #[test]
    fn spec_strings() {
        assert_eq!(Graph::from_spec("complete:4").unwrap(), Graph::complete(4).unwrap());
        assert_eq!(Graph::from_spec("kneser:5,2").unwrap(), Graph::kneser(5, 2).unwrap());
        assert!(Graph::from_spec("torus:3").is_err());
    }

    #[test]
    fn complements() {
        let k2 = Graph::complete(2).unwrap();
        let neg = k2.complement(ComplementMode::Looped);
        assert_eq!(neg.edge_count(), 2); // only the two loops
        assert!(neg.has_loop_at(0) && neg.has_loop_at(1));
        let bar = k2.complement(ComplementMode::Unlooped);
        assert_eq!(bar.edge_count(), 0);

        // complement(¬K1, looped) = K1
        let k1 = Graph::complete(1).unwrap();
        let not_k1 = k1.complement(ComplementMode::Looped);
        assert!(not_k1.has_loop_at(0));
        assert_eq!(not_k1.complement(ComplementMode::Looped), k1);
    }

    #[test]
    fn induced_subgraphs() {
        let c5 = Graph::cycle(5).unwrap();
        let (p3, map) = c5.induced(VertexSet::from_iter([0, 1, 2]));
        assert_eq!(map, vec![0, 1, 2]);
        assert_eq!(p3, Graph::path(3).unwrap());
        let (two, _) = c5.induced(VertexSet::from_iter([0, 2]));
        assert_eq!(two.edge_count(), 0);
        let k4 = Graph::complete(4).unwrap();
        let (same, _) = k4.induced(VertexSet::full(4));
        assert_eq!(same, k4);
    }

    #[test]
    fn tensor_products() {
        let k2 = Graph::complete(2).unwrap();
        let not_k2 = k2.complement(ComplementMode::Looped);
        let t = k2.tensor_product(&not_k2).unwrap();
        assert_eq!(t.vertex_count(), 4);
        // ¬K2 has only loops, so edges pair (0,h)-(1,h)
        assert_eq!(t.edge_count(), 2);
        assert!(t.has_edge(0, 2) && t.has_edge(1, 3));

        // identity of the categorical product: G x (single looped vertex) = G
        let looped = Graph::complete(1).unwrap().complement(ComplementMode::Looped);
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(c5.tensor_product(&looped).unwrap(), c5);

        // K2 x K2 = two disjoint edges
        let kk = k2.tensor_product(&k2).unwrap();
        assert_eq!(kk.edge_count(), 2);
        assert!(kk.has_edge(0, 3) && kk.has_edge(1, 2));
    }

    #[test]
    fn tensor_product_matches_brute_force_on_random_small_graphs() {
        // deterministic pseudo-random small graphs
        let mut seed = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            seed ^= seed << 13;
            seed ^= seed >> 7;
            seed ^= seed << 17;
            seed
        };
        for _ in 0..20 {
            let n1 = 1 + (next() % 6) as usize;
            let n2 = 1 + (next() % 6) as usize;
            let mut g = Graph::empty(n1).unwrap();
            for u in 0..n1 {
                for v in u..n1 {
                    if next() % 2 == 0 {
                        g.add_edge(u, v).unwrap();
                    }
                }
            }
            let mut h = Graph::empty(n2).unwrap();
            for u in 0..n2 {
                for v in u..n2 {
                    if next() % 2 == 0 {
                        h.add_edge(u, v).unwrap();
                    }
                }
            }
            let t = g.tensor_product(&h).unwrap();
            let mut count = 0;
            for a in 0..n1 * n2 {
                for b in a..n1 * n2 {
                    let (g1, h1) = (a / n2, a % n2);
                    let (g2, h2) = (b / n2, b % n2);
                    let expect = g.has_edge(g1, g2) && h.has_edge(h1, h2);
                    assert_eq!(t.has_edge(a, b), expect);
                    if expect {
                        count += 1;
                    }
                }
            }
            assert_eq!(t.edge_count(), count);
        }
    }

    #[test]
    fn base_vertex() {
        let k2 = Graph::complete(2).unwrap();
        let plus = k2.add_base_vertex().unwrap();
        assert_eq!(plus.vertex_count(), 3);
        assert!(plus.has_loop_at(2) && plus.has_edge(2, 0) && plus.has_edge(2, 1));

        let nil = Graph::empty(0).unwrap().add_base_vertex().unwrap();
        assert_eq!(nil.vertex_count(), 1);
        assert!(nil.has_loop_at(0));

        let c5p = Graph::cycle(5).unwrap().add_base_vertex().unwrap();
        assert_eq!(c5p.edge_count(), 11); // 5 cycle + 5 spokes + 1 loop
    }

    #[test]
    fn homomorphism_counts_match_chromatic_polynomial() {
        // |Hom(C_n, K_k)| = (k-1)^n + (-1)^n (k-1)
        for n in [3usize, 4, 5] {
            for k in [2usize, 3, 4] {
                let cn = Graph::cycle(n).unwrap();
                let kk = Graph::complete(k).unwrap();
                let homs = cn.enumerate_homomorphisms(&kk, 1_000_000).unwrap();
                let expect = (k - 1).pow(n as u32) as i64 + if n % 2 == 0 { (k - 1) as i64 } else { -((k - 1) as i64) };
                assert_eq!(homs.len() as i64, expect, "C{n} -> K{k}");
            }
        }
        let k2 = Graph::complete(2).unwrap();
        assert_eq!(k2.enumerate_homomorphisms(&k2, 1000).unwrap().len(), 2);
        let k4 = Graph::complete(4).unwrap();
        let k3 = Graph::complete(3).unwrap();
        assert!(k4.enumerate_homomorphisms(&k3, 1000).unwrap().is_empty());
    }

    #[test]
    fn homomorphisms_exhaustive_predicate() {
        // every returned map preserves edges; every omitted map violates one
        let c5 = Graph::cycle(5).unwrap();
        let k3 = Graph::complete(3).unwrap();
        let homs = c5.enumerate_homomorphisms(&k3, 1_000_000).unwrap();
        let set: std::collections::HashSet<Vec<usize>> = homs.iter().cloned().collect();
        let mut phi = vec![0usize; 5];
        let mut total = 0;
        loop {
            let ok = c5.check_homomorphism(&k3, &phi).is_ok();
            assert_eq!(ok, set.contains(&phi));
            if ok {
                total += 1;
            }
            // increment in lexicographic order
            let mut i = 5;
            loop {
                if i == 0 {
                    break;
                }
                i -= 1;
                phi[i] += 1;
                if phi[i] < 3 {
                    break;
                }
                phi[i] = 0;
            }
            if phi.iter().all(|&c| c == 0) {
                break;
            }
        }
        assert_eq!(total, homs.len());
        // lexicographic order of output
        let mut sorted = homs.clone();
        sorted.sort();
        assert_eq!(homs, sorted);
    }

    #[test]
    fn hom_enumeration_resource_cap() {
        let c5 = Graph::cycle(5).unwrap();
        let k4 = Graph::complete(4).unwrap();
        assert!(matches!(
            c5.enumerate_homomorphisms(&k4, 10),
            Err(Error::ResourceCap(_))
        ));
    }

    #[test]
    fn folds() {
        let p3 = Graph::path(3).unwrap();
        let folds = p3.find_folds();
        assert!(folds.contains(&(0, 2)) && folds.contains(&(2, 0)));

        let c5 = Graph::cycle(5).unwrap();
        assert!(c5.find_folds().is_empty());

        // star K_{1,3}: center 0, leaves 1..3
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let folds = star.find_folds();
        for u in 1..4 {
            for v in 1..4 {
                if u != v {
                    assert!(folds.contains(&(u, v)));
                }
            }
        }
        // exhaustively: output = exactly the containment pairs
        for g in [p3, c5, star] {
            let folds = g.find_folds();
            for u in 0..g.vertex_count() {
                for v in 0..g.vertex_count() {
                    let pred = u != v && g.neighbors(v) & !g.neighbors(u) == 0;
                    assert_eq!(folds.contains(&(u, v)), pred);
                }
            }
        }
    }

    #[test]
    fn greedy_bound() {
        assert_eq!(Graph::complete(4).unwrap().greedy_chromatic_upper().unwrap(), 4);
        assert_eq!(Graph::cycle(5).unwrap().greedy_chromatic_upper().unwrap(), 3);
        assert_eq!(Graph::empty(3).unwrap().greedy_chromatic_upper().unwrap(), 1);
        let mut looped = Graph::empty(2).unwrap();
        looped.add_edge(1, 1).unwrap();
        assert!(matches!(
            looped.greedy_chromatic_upper(),
            Err(Error::LoopPresent(1))
        ));
    }

    #[test]
    fn independent_sets() {
        assert_eq!(Graph::cycle(5).unwrap().max_independent_set(), 2);
        assert_eq!(Graph::complete(4).unwrap().max_independent_set(), 1);
        assert_eq!(Graph::path(5).unwrap().max_independent_set(), 3);
        let mut looped = Graph::empty(1).unwrap();
        looped.add_edge(0, 0).unwrap();
        assert_eq!(looped.max_independent_set(), 0);
    }

    #[test]
    fn text_roundtrip() {
        for g in [
            Graph::cycle(5).unwrap(),
            Graph::kneser(5, 2).unwrap(),
            Graph::complete(1).unwrap().complement(ComplementMode::Looped),
            Graph::empty(3).unwrap(),
        ] {
            assert_eq!(Graph::from_text(&g.to_text()).unwrap(), g);
        }
        let parsed = Graph::from_text("# a triangle\nvertices 3\n0 1\n1 2 # back\n0 2\n").unwrap();
        assert_eq!(parsed, Graph::complete(3).unwrap());
        match Graph::from_text("vertices 3\n3 x\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn complement_involution() {
        for spec in ["cycle:5", "complete:4", "kneser:5,2", "path:4"] {
            let g = Graph::from_spec(spec).unwrap();
            assert_eq!(
                g.complement(ComplementMode::Looped).complement(ComplementMode::Looped),
                g
            );
        }
    }
}
