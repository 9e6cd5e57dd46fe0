//! Abstract simplicial complexes with a global vertex order.
//!
//! Simplices are stored per dimension as lexicographically sorted, strictly
//! increasing vertex tuples; the complex is kept closed under taking faces.

use crate::error::{Error, Result};
use std::collections::HashSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertex_count: usize,
    /// simplices[d] = sorted (d+1)-tuples
    simplices: Vec<Vec<Vec<u32>>>,
}

impl SimplicialComplex {
    pub fn empty(vertex_count: usize) -> Self {
        SimplicialComplex {
            vertex_count,
            simplices: Vec::new(),
        }
    }

    /// Builds the closure of the given generating simplices.
    pub fn from_maximal(vertex_count: usize, generators: &[Vec<u32>]) -> Result<Self> {
        let mut seen: HashSet<Vec<u32>> = HashSet::new();
        for g in generators {
            let mut s = g.clone();
            s.sort_unstable();
            s.dedup();
            if s.iter().any(|&v| v as usize >= vertex_count) {
                return Err(Error::BadParameter(format!(
                    "simplex vertex out of range (universe {vertex_count})"
                )));
            }
            if s.is_empty() {
                continue;
            }
            // all nonempty subsets
            let k = s.len();
            for mask in 1u64..(1u64 << k) {
                let sub: Vec<u32> = (0..k).filter(|&i| mask >> i & 1 == 1).map(|i| s[i]).collect();
                seen.insert(sub);
            }
        }
        Ok(Self::from_closed_set(vertex_count, seen))
    }

    /// Builds from an already face-closed set of simplices (debug-checked).
    pub fn from_closed_set(vertex_count: usize, set: HashSet<Vec<u32>>) -> Self {
        let maxdim = set.iter().map(|s| s.len()).max().unwrap_or(0);
        let mut simplices: Vec<Vec<Vec<u32>>> = vec![Vec::new(); maxdim];
        for s in set {
            simplices[s.len() - 1].push(s);
        }
        for level in simplices.iter_mut() {
            level.sort_unstable();
        }
        let c = SimplicialComplex {
            vertex_count,
            simplices,
        };
        debug_assert!(c.is_closed());
        c
    }

    pub fn is_closed(&self) -> bool {
        for d in 1..self.simplices.len() {
            for s in &self.simplices[d] {
                for i in 0..s.len() {
                    let mut f = s.clone();
                    f.remove(i);
                    if self.index_of(&f).is_none() {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Dimension, or None for the empty complex.
    pub fn dim(&self) -> Option<usize> {
        if self.simplices.is_empty() {
            None
        } else {
            Some(self.simplices.len() - 1)
        }
    }

    pub fn simplices_of_dim(&self, d: usize) -> &[Vec<u32>] {
        self.simplices.get(d).map(|v| v.as_slice()).unwrap_or(&[])
    }

    pub fn all_simplices(&self) -> impl Iterator<Item = &Vec<u32>> {
        self.simplices.iter().flatten()
    }

    pub fn index_of(&self, s: &[u32]) -> Option<usize> {
        let level = self.simplices.get(s.len().checked_sub(1)?)?;
        level.binary_search_by(|x| x.as_slice().cmp(s)).ok()
    }

    pub fn f_vector(&self) -> Vec<usize> {
        self.simplices.iter().map(|l| l.len()).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(d, &c)| if d % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum()
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    /// n-fold simplicial join; vertex (copy, original) is copy*k + original,
    /// where k is the vertex universe of self.
    pub fn join_power(&self, n: usize) -> Result<SimplicialComplex> {
        if n < 1 {
            return Err(Error::BadParameter("join_power: need n >= 1".into()));
        }
        let k = self.vertex_count;
        let mut set: HashSet<Vec<u32>> = HashSet::new();
        // one (possibly empty) simplex per copy, nonempty union
        fn rec(
            complex: &SimplicialComplex,
            n: usize,
            k: usize,
            copy: usize,
            acc: &mut Vec<u32>,
            set: &mut HashSet<Vec<u32>>,
        ) {
            if copy == n {
                if !acc.is_empty() {
                    set.insert(acc.clone());
                }
                return;
            }
            rec(complex, n, k, copy + 1, acc, set); // empty choice for this copy
            for level in &complex.simplices {
                for s in level {
                    let base = acc.len();
                    acc.extend(s.iter().map(|&v| (copy * k) as u32 + v));
                    rec(complex, n, k, copy + 1, acc, set);
                    acc.truncate(base);
                }
            }
        }
        let mut acc = Vec::new();
        rec(self, n, k, 0, &mut acc, &mut set);
        Ok(SimplicialComplex::from_closed_set(k * n, set))
    }

    /// Greedy elementary collapse: repeatedly removes the lexicographically
    /// smallest free face together with its unique proper coface. Returns the
    /// collapse sequence if the complex collapses to a single vertex.
    pub fn greedy_collapse_certificate(&self) -> Option<Vec<(Vec<u32>, Vec<u32>)>> {
        let mut live: HashSet<Vec<u32>> = self.all_simplices().cloned().collect();
        let mut seq = Vec::new();
        loop {
            if live.len() == 1 {
                let last = live.iter().next().unwrap();
                return if last.len() == 1 { Some(seq) } else { None };
            }
            // free face = simplex with exactly one proper coface among live
            let mut candidates: Vec<&Vec<u32>> = live.iter().collect();
            candidates.sort_unstable_by_key(|s| (s.len(), (*s).clone()));
            let mut found = None;
            'outer: for tau in candidates {
                let mut coface = None;
                for sigma in &live {
                    if sigma.len() > tau.len() && is_subset(tau, sigma) {
                        if coface.is_some() {
                            continue 'outer;
                        }
                        coface = Some(sigma.clone());
                    }
                }
                if let Some(sigma) = coface {
                    found = Some((tau.clone(), sigma));
                    break;
                }
            }
            let (tau, sigma) = found?;
            live.remove(&tau);
            live.remove(&sigma);
            seq.push((tau, sigma));
        }
    }

    /// Replays a collapse certificate, checking each step is a valid
    /// elementary collapse and the result is a single vertex.
    pub fn verify_collapse_certificate(&self, seq: &[(Vec<u32>, Vec<u32>)]) -> bool {
        let mut live: HashSet<Vec<u32>> = self.all_simplices().cloned().collect();
        for (tau, sigma) in seq {
            if !live.contains(tau) || !live.contains(sigma) {
                return false;
            }
            if sigma.len() != tau.len() + 1 || !is_subset(tau, sigma) {
                return false;
            }
            // tau has no other live proper coface, sigma is maximal
            for s in &live {
                if s != sigma && s.len() > tau.len() && is_subset(tau, s) {
                    return false;
                }
                if s != sigma && s.len() > sigma.len() && is_subset(sigma, s) {
                    return false;
                }
            }
            live.remove(tau);
            live.remove(sigma);
        }
        live.len() == 1 && live.iter().next().unwrap().len() == 1
    }
}

fn is_subset(a: &[u32], b: &[u32]) -> bool {
    // both strictly increasing
    let mut j = 0;
    for &x in a {
        while j < b.len() && b[j] < x {
            j += 1;
        }
        if j == b.len() || b[j] != x {
            return false;
        }
        j += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle_boundary() -> SimplicialComplex {
        SimplicialComplex::from_maximal(3, &[vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap()
    }

    #[test]
    fn closure_and_f_vector() {
        let disk = SimplicialComplex::from_maximal(3, &[vec![0, 1, 2]]).unwrap();
        assert_eq!(disk.f_vector(), vec![3, 3, 1]);
        assert_eq!(disk.euler_characteristic(), 1);
        assert_eq!(triangle_boundary().f_vector(), vec![3, 3]);
        assert_eq!(triangle_boundary().euler_characteristic(), 0);
    }

    #[test]
    fn joins() {
        // S0 * S0 = 4-cycle
        let s0 = SimplicialComplex::from_maximal(2, &[vec![0], vec![1]]).unwrap();
        let c4 = s0.join_power(2).unwrap();
        assert_eq!(c4.f_vector(), vec![4, 4]);
        // point * point * point = 2-simplex
        let pt = SimplicialComplex::from_maximal(1, &[vec![0]]).unwrap();
        let d2 = pt.join_power(3).unwrap();
        assert_eq!(d2.f_vector(), vec![3, 3, 1]);
    }

    #[test]
    fn collapses() {
        let disk = SimplicialComplex::from_maximal(3, &[vec![0, 1, 2]]).unwrap();
        let cert = disk.greedy_collapse_certificate().unwrap();
        assert!(disk.verify_collapse_certificate(&cert));
        // the circle does not collapse
        assert!(triangle_boundary().greedy_collapse_certificate().is_none());
        // a bad certificate is rejected
        assert!(!disk.verify_collapse_certificate(&[(vec![0], vec![0, 1, 2])]));
    }
}
