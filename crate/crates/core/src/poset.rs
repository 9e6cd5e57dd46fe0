//! Finite posets, order complexes, and the Quillen-type fiber conditions used
//! to compare complexes along forgetful maps.

use crate::chain::{reduced_homology_z, ZGroup};
use crate::error::{Error, Result};
use crate::hom::HomComplex;
use crate::simplicial::SimplicialComplex;

/// A finite strict partial order, stored as the full transitive relation in
/// packed bit rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinitePoset {
    n: usize,
    words: usize,
    /// above[i] = bitset of j with i < j
    above: Vec<u64>,
}

impl FinitePoset {
    /// Builds from any generating set of strict relations by transitive
    /// closure; errors on cycles.
    pub fn from_relations(n: usize, relations: &[(usize, usize)]) -> Result<Self> {
        let words = n.div_ceil(64).max(1);
        let mut above = vec![0u64; n * words];
        for &(a, b) in relations {
            if a >= n || b >= n {
                return Err(Error::BadParameter(format!(
                    "relation ({a},{b}) out of range for {n} elements"
                )));
            }
            if a == b {
                return Err(Error::BadParameter(format!("reflexive relation {a} < {a}")));
            }
            above[a * words + b / 64] |= 1 << (b % 64);
        }
        // Floyd-Warshall style closure: i < k and k < j gives i < j
        for k in 0..n {
            for i in 0..n {
                if above[i * words + k / 64] >> (k % 64) & 1 == 1 {
                    for w in 0..words {
                        let v = above[k * words + w];
                        above[i * words + w] |= v;
                    }
                }
            }
        }
        let p = FinitePoset { n, words, above };
        for i in 0..n {
            if p.lt(i, i) {
                return Err(Error::BadParameter(format!(
                    "relations contain a cycle through element {i}"
                )));
            }
        }
        Ok(p)
    }

    pub fn antichain(n: usize) -> Self {
        Self::from_relations(n, &[]).expect("antichain is valid")
    }

    pub fn chain(n: usize) -> Self {
        let rels: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_relations(n, &rels).expect("chain is valid")
    }

    /// The face poset of a Hom complex (elements = cell indices).
    pub fn from_hom(x: &HomComplex) -> Result<Self> {
        let rels: Vec<(usize, usize)> = x
            .cover
            .iter()
            .map(|&(f, c)| (f as usize, c as usize))
            .collect();
        Self::from_relations(x.cell_count(), &rels)
    }

    /// The face poset of a simplicial complex (elements = simplices in the
    /// order vertices-first, then edges, ...).
    pub fn from_simplicial(k: &SimplicialComplex) -> Result<Self> {
        let f = k.f_vector();
        let offset: Vec<usize> = f
            .iter()
            .scan(0usize, |acc, &c| {
                let o = *acc;
                *acc += c;
                Some(o)
            })
            .collect();
        let n: usize = f.iter().sum();
        let mut rels = Vec::new();
        let top = k.dim().map(|d| d + 1).unwrap_or(0);
        for d in 1..top {
            for (j, s) in k.simplices_of_dim(d).iter().enumerate() {
                for i in 0..s.len() {
                    let mut face = s.clone();
                    face.remove(i);
                    let fi = k.index_of(&face).expect("closed complex");
                    rels.push((offset[d - 1] + fi, offset[d] + j));
                }
            }
        }
        Self::from_relations(n, &rels)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn lt(&self, i: usize, j: usize) -> bool {
        self.above[i * self.words + j / 64] >> (j % 64) & 1 == 1
    }

    pub fn le(&self, i: usize, j: usize) -> bool {
        i == j || self.lt(i, j)
    }

    pub fn opposite(&self) -> FinitePoset {
        let mut above = vec![0u64; self.n * self.words];
        for i in 0..self.n {
            for j in 0..self.n {
                if self.lt(i, j) {
                    above[j * self.words + i / 64] |= 1 << (i % 64);
                }
            }
        }
        FinitePoset {
            n: self.n,
            words: self.words,
            above,
        }
    }

    /// Cover relations (a < b with nothing strictly between).
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.n {
            'pair: for b in 0..self.n {
                if !self.lt(a, b) {
                    continue;
                }
                for m in 0..self.n {
                    if self.lt(a, m) && self.lt(m, b) {
                        continue 'pair;
                    }
                }
                out.push((a, b));
            }
        }
        out
    }

    /// Order complex: vertices are the elements, simplices the chains.
    pub fn order_complex(&self) -> SimplicialComplex {
        let mut set: std::collections::HashSet<Vec<u32>> = std::collections::HashSet::new();
        // ascending lists of elements above the last one; any extension by a
        // strictly greater element stays a chain by transitivity
        let mut chain: Vec<u32> = Vec::new();
        fn rec(
            p: &FinitePoset,
            last: usize,
            chain: &mut Vec<u32>,
            set: &mut std::collections::HashSet<Vec<u32>>,
        ) {
            set.insert(chain.clone());
            for j in 0..p.n {
                if p.lt(last, j) {
                    chain.push(j as u32);
                    rec(p, j, chain, set);
                    chain.pop();
                }
            }
        }
        for i in 0..self.n {
            chain.push(i as u32);
            rec(self, i, &mut chain, &mut set);
            chain.pop();
        }
        // chains are recorded in ascending poset order but the simplicial
        // layer wants ascending element index; comparable elements may be
        // index-inverted, so normalize
        let normalized = set
            .into_iter()
            .map(|mut s| {
                s.sort_unstable();
                s
            })
            .collect();
        SimplicialComplex::from_closed_set(self.n, normalized)
    }

    /// Induced subposet on the listed elements (in the listed order).
    pub fn subposet(&self, elements: &[usize]) -> FinitePoset {
        let rels: Vec<(usize, usize)> = elements
            .iter()
            .enumerate()
            .flat_map(|(ai, &a)| {
                elements
                    .iter()
                    .enumerate()
                    .filter(move |&(_, &b)| self.lt(a, b))
                    .map(move |(bi, _)| (ai, bi))
            })
            .collect();
        Self::from_relations(elements.len(), &rels).expect("subposet of a poset is a poset")
    }

    pub fn maximum(&self) -> Option<usize> {
        (0..self.n).find(|&m| (0..self.n).all(|x| self.le(x, m)))
    }

    pub fn minimum(&self) -> Option<usize> {
        (0..self.n).find(|&m| (0..self.n).all(|x| self.le(m, x)))
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("elements {}\n", self.n);
        for (a, b) in self.covers() {
            out.push_str(&format!("{a} < {b}\n"));
        }
        out
    }

    pub fn from_text(text: &str) -> Result<FinitePoset> {
        let mut n: Option<usize> = None;
        let mut rels = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let parse_err = |msg: &str| Error::Parse {
                line: lineno + 1,
                msg: msg.to_string(),
            };
            if let Some(rest) = line.strip_prefix("elements") {
                if n.is_some() {
                    return Err(parse_err("duplicate elements line"));
                }
                n = Some(
                    rest.trim()
                        .parse()
                        .map_err(|_| parse_err("bad element count"))?,
                );
                continue;
            }
            let mut parts = line.split('<');
            let (a, b) = (parts.next(), parts.next());
            if parts.next().is_some() {
                return Err(parse_err("expected `a < b`"));
            }
            match (a, b) {
                (Some(a), Some(b)) => {
                    let a: usize = a.trim().parse().map_err(|_| parse_err("bad element"))?;
                    let b: usize = b.trim().parse().map_err(|_| parse_err("bad element"))?;
                    rels.push((a, b));
                }
                _ => return Err(parse_err("expected `a < b`")),
            }
        }
        let n = n.ok_or(Error::Parse {
            line: 0,
            msg: "missing elements line".into(),
        })?;
        FinitePoset::from_relations(n, &rels)
    }
}

/// An order-preserving map of finite posets.
#[derive(Debug, Clone)]
pub struct PosetMap {
    pub source: FinitePoset,
    pub target: FinitePoset,
    pub assignment: Vec<usize>,
}

impl PosetMap {
    pub fn new(source: FinitePoset, target: FinitePoset, assignment: Vec<usize>) -> Result<Self> {
        if assignment.len() != source.len() {
            return Err(Error::BadParameter("assignment length mismatch".into()));
        }
        if assignment.iter().any(|&q| q >= target.len()) {
            return Err(Error::BadParameter("assignment out of range".into()));
        }
        for i in 0..source.len() {
            for j in 0..source.len() {
                if source.lt(i, j) && !target.le(assignment[i], assignment[j]) {
                    return Err(Error::BadParameter(format!(
                        "map is not order-preserving at {i} < {j}"
                    )));
                }
            }
        }
        Ok(PosetMap {
            source,
            target,
            assignment,
        })
    }

    pub fn opposite(&self) -> PosetMap {
        PosetMap {
            source: self.source.opposite(),
            target: self.target.opposite(),
            assignment: self.assignment.clone(),
        }
    }
}

/// Which reading of "has a maximal element" to use in Condition B.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MaxVariant {
    /// the subposet has a greatest element (default)
    UniqueMaximum,
    /// the subposet merely has some maximal element
    MaximalElement,
}

/// Condition B of the fiber comparison criterion: for every p in the source
/// and q <= phi(p), the subposet phi^{-1}(q) ∩ P_{<=p} is nonempty and has a
/// unique maximum (or a maximal element, under the variant). `use_opposite`
/// evaluates the condition on the formally reversed map. Returns the verdict
/// and a witness (p, q) on failure.
pub fn check_condition_b(
    phi: &PosetMap,
    use_opposite: bool,
    variant: MaxVariant,
) -> (bool, Option<(usize, usize)>) {
    let reversed;
    let phi = if use_opposite {
        reversed = phi.opposite();
        &reversed
    } else {
        phi
    };
    let p = &phi.source;
    let q = &phi.target;
    for x in 0..p.len() {
        for y in 0..q.len() {
            if !q.le(y, phi.assignment[x]) {
                continue;
            }
            let fiber: Vec<usize> = (0..p.len())
                .filter(|&z| phi.assignment[z] == y && p.le(z, x))
                .collect();
            let ok = match variant {
                MaxVariant::UniqueMaximum => fiber
                    .iter()
                    .any(|&m| fiber.iter().all(|&z| p.le(z, m))),
                MaxVariant::MaximalElement => fiber
                    .iter()
                    .any(|&m| fiber.iter().all(|&z| !p.lt(m, z))),
            };
            if !ok {
                return (false, Some((x, y)));
            }
        }
    }
    (true, None)
}

/// Per-fiber verdict for Condition A (contractibility of Delta(phi^{-1}(q))).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConditionAVerdict {
    /// the fiber is a cone (max or min element) or collapses greedily to a
    /// point; the certificate replays
    CertifiedContractible,
    /// some reduced homology group is nonzero in the recorded degree
    NotContractible(usize),
    Unknown,
}

/// Evaluates Condition A fiber by fiber; sound, never a decision procedure.
/// The empty fiber counts as not contractible (degree 0 entry by convention).
pub fn check_condition_a(phi: &PosetMap) -> Vec<ConditionAVerdict> {
    (0..phi.target.len())
        .map(|y| {
            let elements: Vec<usize> = (0..phi.source.len())
                .filter(|&z| phi.assignment[z] == y)
                .collect();
            if elements.is_empty() {
                return ConditionAVerdict::NotContractible(0);
            }
            let fiber = phi.source.subposet(&elements);
            if fiber.maximum().is_some() || fiber.minimum().is_some() {
                return ConditionAVerdict::CertifiedContractible;
            }
            let k = fiber.order_complex();
            if let Some(cert) = k.greedy_collapse_certificate() {
                if k.verify_collapse_certificate(&cert) {
                    return ConditionAVerdict::CertifiedContractible;
                }
            }
            let h: Vec<ZGroup> = reduced_homology_z(&k);
            if let Some(d) = h.iter().position(|g| !g.is_trivial()) {
                return ConditionAVerdict::NotContractible(d);
            }
            ConditionAVerdict::Unknown
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::simplicial_chain;

    #[test]
    fn closure_and_cycles() {
        let p = FinitePoset::from_relations(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(p.lt(0, 2));
        assert!(!p.lt(2, 0));
        assert!(FinitePoset::from_relations(2, &[(0, 1), (1, 0)]).is_err());
        assert!(FinitePoset::from_relations(1, &[(0, 0)]).is_err());
    }

    #[test]
    fn order_complex_basics() {
        let two_chain = FinitePoset::chain(2);
        assert_eq!(two_chain.order_complex().f_vector(), vec![2, 1]);
        let antichain = FinitePoset::antichain(2);
        assert_eq!(antichain.order_complex().f_vector(), vec![2]);
    }

    #[test]
    fn barycentric_subdivision_of_triangle_boundary() {
        let boundary =
            SimplicialComplex::from_maximal(3, &[vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        let face_poset = FinitePoset::from_simplicial(&boundary).unwrap();
        let bd = face_poset.order_complex();
        assert_eq!(bd.f_vector(), vec![6, 6]);
        let h = simplicial_chain(&bd).homology_z();
        assert_eq!(h[1], ZGroup::free(1));
    }

    #[test]
    fn opposite_properties() {
        let p = FinitePoset::from_relations(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
        let op = p.opposite();
        assert!(op.lt(3, 0));
        assert_eq!(op.opposite(), p);
        assert_eq!(p.order_complex(), op.order_complex());
    }

    #[test]
    fn covers_and_text_roundtrip() {
        let p = FinitePoset::from_relations(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(p.covers(), vec![(0, 1), (1, 2)]);
        let q = FinitePoset::from_text(&p.to_text()).unwrap();
        assert_eq!(p, q);
        assert!(FinitePoset::from_text("0 < 1\n").is_err());
        assert!(FinitePoset::from_text("elements 2\n0 < 5\n").is_err());
    }

    #[test]
    fn condition_b_examples() {
        // identity map is true for all posets on <= 6 elements generated from
        // random relation sets
        let mut seed = 0xC0FFEEu64;
        let mut next = move || {
            seed ^= seed << 13;
            seed ^= seed >> 7;
            seed ^= seed << 17;
            seed
        };
        for _ in 0..200 {
            let n = 1 + (next() % 6) as usize;
            let mut rels = Vec::new();
            for _ in 0..next() % 8 {
                let a = (next() % n as u64) as usize;
                let b = (next() % n as u64) as usize;
                if a < b {
                    rels.push((a, b)); // a<b with a smaller index: acyclic
                }
            }
            let p = FinitePoset::from_relations(n, &rels).unwrap();
            let id = PosetMap::new(p.clone(), p.clone(), (0..n).collect()).unwrap();
            assert_eq!(check_condition_b(&id, false, MaxVariant::UniqueMaximum).0, true);
            assert_eq!(check_condition_b(&id, true, MaxVariant::UniqueMaximum).0, true);
        }

        // {a, b < c} onto a 2-chain with a,b -> bottom, c -> top:
        // at p=c, q=bottom the fiber {a,b} has no maximum
        let p = FinitePoset::from_relations(3, &[(0, 2), (1, 2)]).unwrap();
        let q2 = FinitePoset::chain(2);
        let phi = PosetMap::new(p, q2, vec![0, 0, 1]).unwrap();
        let (ok, witness) = check_condition_b(&phi, false, MaxVariant::UniqueMaximum);
        assert!(!ok);
        assert_eq!(witness, Some((2, 0)));
        // the weak variant accepts: b is a maximal element of {a,b}
        assert!(check_condition_b(&phi, false, MaxVariant::MaximalElement).0);

        // projection of a 2-chain to a point
        let c2 = FinitePoset::chain(2);
        let pt = FinitePoset::antichain(1);
        let proj = PosetMap::new(c2, pt, vec![0, 0]).unwrap();
        assert!(check_condition_b(&proj, false, MaxVariant::UniqueMaximum).0);
    }

    #[test]
    fn condition_a_examples() {
        // fiber with a maximum
        let c2 = FinitePoset::chain(2);
        let pt = FinitePoset::antichain(1);
        let proj = PosetMap::new(c2, pt.clone(), vec![0, 0]).unwrap();
        assert_eq!(
            check_condition_a(&proj),
            vec![ConditionAVerdict::CertifiedContractible]
        );

        // 2-element antichain fiber: reduced H_0 nonzero
        let anti = FinitePoset::antichain(2);
        let proj = PosetMap::new(anti, pt.clone(), vec![0, 0]).unwrap();
        assert_eq!(
            check_condition_a(&proj),
            vec![ConditionAVerdict::NotContractible(0)]
        );

        // fiber whose order complex is a hexagon (face poset of the triangle
        // boundary): H_1 nonzero
        let boundary =
            SimplicialComplex::from_maximal(3, &[vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        let fp = FinitePoset::from_simplicial(&boundary).unwrap();
        let proj = PosetMap::new(fp, pt, vec![0; 6]).unwrap();
        assert_eq!(
            check_condition_a(&proj),
            vec![ConditionAVerdict::NotContractible(1)]
        );
    }

    #[test]
    fn hom_face_poset_order_complex_matches_method() {
        let x = HomComplex::build(
            &crate::graph::Graph::complete(2).unwrap(),
            &crate::graph::Graph::complete(3).unwrap(),
            None,
            crate::hom::DEFAULT_CELL_CAP,
        )
        .unwrap();
        let p = FinitePoset::from_hom(&x).unwrap();
        assert_eq!(p.order_complex(), x.order_complex());
    }
}
