//! Brute-force ground truth.
//!
//! Every vertex subset of the pattern's size is enumerated and its induced
//! subgraph recorded by the adjacency of its members in ascending-ID rank
//! order. Mappings are then counted by trying every label-to-rank
//! permutation. Restriction filters only compare IDs, and rank order equals
//! ID order, so the per-subset answer depends only on that rank adjacency.
//! Nothing here touches the set kernels or the plan executor.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::graph::Graph;
use crate::pattern::{all_permutations, Pattern};
use crate::restriction::{PartialOrder, RestrictionMap};
use crate::schedule::Schedule;
use crate::Error;

/// Largest pattern the oracle accepts.
pub const ORACLE_MAX_PATTERN: usize = 6;
/// Largest graph the oracle accepts.
pub const ORACLE_MAX_GRAPH: usize = 60;

/// Which ID restrictions a counted mapping must satisfy.
#[derive(Clone, Copy, Debug)]
pub enum MappingFilter<'a> {
    /// Count every mapping.
    None,
    /// Every relation of the full partial order.
    FullOrder(&'a PartialOrder),
    /// Only the one-parent-per-level checks.
    Minimized(&'a RestrictionMap),
}

/// Oracle counts for one pattern and schedule.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct OracleReport {
    /// Induced instances.
    pub induced_count: u64,
    /// Injective mappings realising an instance, unfiltered.
    pub labeled_mapping_count: u64,
    /// Mappings satisfying the full partial order.
    pub full_order_mapping_count: u64,
    /// Mappings satisfying the minimized restriction map.
    pub minimized_mapping_count: u64,
    /// Smallest and largest full-order mapping count over instances (`(0, 0)` with no instances).
    pub per_instance_full: (u64, u64),
    /// Smallest and largest minimized mapping count over instances.
    pub per_instance_minimized: (u64, u64),
    /// Smallest and largest unfiltered mapping count over instances.
    pub per_instance_unfiltered: (u64, u64),
}

/// Histogram of induced rank-adjacency codes over all `k`-subsets of a graph.
#[derive(Clone, Debug)]
pub struct SubsetCensus {
    k: usize,
    histogram: BTreeMap<u32, u64>,
}

fn rank_pairs(k: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..k).flat_map(move |i| (i + 1..k).map(move |j| (i, j)))
}

fn code_has(code: u32, k: usize, a: usize, b: usize) -> bool {
    let (i, j) = (a.min(b), a.max(b));
    let idx = rank_pairs(k).position(|pr| pr == (i, j)).expect("pair in range");
    code >> idx & 1 == 1
}

impl SubsetCensus {
    /// Enumerates every `k`-subset of `g`.
    pub fn new(g: &Graph, k: usize) -> Result<Self, Error> {
        if !(2..=ORACLE_MAX_PATTERN).contains(&k) || g.n() > ORACLE_MAX_GRAPH {
            return Err(Error::OracleGuard { pattern_n: k, graph_n: g.n() });
        }
        let n = g.n();
        let mut rows = alloc::vec![0u64; n];
        for (u, v) in g.edges() {
            rows[u as usize] |= 1 << v;
            rows[v as usize] |= 1 << u;
        }
        let pair_list: Vec<(usize, usize)> = rank_pairs(k).collect();
        let mut histogram = BTreeMap::new();
        let mut subset: Vec<usize> = (0..k).collect();
        if k <= n {
            loop {
                let code = pair_list
                    .iter()
                    .enumerate()
                    .fold(0u32, |acc, (idx, &(i, j))| acc | ((rows[subset[i]] >> subset[j] & 1) as u32) << idx);
                *histogram.entry(code).or_insert(0u64) += 1;
                // next combination in lexicographic order
                let Some(i) = (0..k).rev().find(|&i| subset[i] < n - k + i) else { break };
                subset[i] += 1;
                for j in i + 1..k {
                    subset[j] = subset[j - 1] + 1;
                }
            }
        }
        Ok(SubsetCensus { k, histogram })
    }

    /// Subset size.
    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of subsets whose induced subgraph is connected.
    pub fn connected_subsets(&self) -> u64 {
        let k = self.k;
        self.histogram
            .iter()
            .filter(|(&code, _)| {
                let mut seen = 1u32;
                let mut stack = alloc::vec![0usize];
                while let Some(v) = stack.pop() {
                    for w in 0..k {
                        if seen >> w & 1 == 0 && code_has(code, k, v, w) {
                            seen |= 1 << w;
                            stack.push(w);
                        }
                    }
                }
                seen.count_ones() as usize == k
            })
            .map(|(_, &c)| c)
            .sum()
    }

    /// Mappings of `p` into one subset with rank adjacency `code` that pass `keep`.
    fn mappings_for<F>(&self, p: &Pattern, code: u32, keep: F) -> u64
    where
        F: Fn(&[usize]) -> bool,
    {
        let k = self.k;
        all_permutations(k)
            .filter(|perm| {
                let rank: Vec<usize> = perm.images().collect();
                rank_pairs(k).all(|(a, b)| p.has_edge(a, b) == code_has(code, k, rank[a], rank[b])) && keep(&rank)
            })
            .count() as u64
    }

    fn filter_fn<'a>(s: &'a Schedule, filter: MappingFilter<'a>) -> impl Fn(&[usize]) -> bool + 'a {
        move |rank: &[usize]| match filter {
            MappingFilter::None => true,
            MappingFilter::FullOrder(order) => order.relations().iter().all(|&(a, b)| rank[a] > rank[b]),
            MappingFilter::Minimized(rm) => {
                (0..s.len()).all(|level| rm.parent(level).is_none_or(|z| rank[s.at(level)] < rank[s.at(z)]))
            }
        }
    }

    /// Number of subsets inducing a copy of `p`.
    pub fn induced_count(&self, p: &Pattern) -> u64 {
        assert_eq!(p.n(), self.k);
        self.histogram.iter().filter(|(&code, _)| self.mappings_for(p, code, |_| true) > 0).map(|(_, &c)| c).sum()
    }

    /// Number of injective mappings realising `p` that pass `filter`.
    pub fn mapping_count(&self, p: &Pattern, s: &Schedule, filter: MappingFilter<'_>) -> u64 {
        assert_eq!(p.n(), self.k);
        let keep = Self::filter_fn(s, filter);
        self.histogram.iter().map(|(&code, &c)| c * self.mappings_for(p, code, &keep)).sum()
    }

    /// All counts for `p` with schedule `s` and its restrictions.
    pub fn report(&self, p: &Pattern, s: &Schedule, order: &PartialOrder, rm: &RestrictionMap) -> OracleReport {
        assert_eq!(p.n(), self.k);
        let full = Self::filter_fn(s, MappingFilter::FullOrder(order));
        let min = Self::filter_fn(s, MappingFilter::Minimized(rm));
        let mut r = OracleReport::default();
        let mut first = true;
        let widen = |range: &mut (u64, u64), x: u64, first: bool| {
            *range = if first { (x, x) } else { (range.0.min(x), range.1.max(x)) };
        };
        for (&code, &c) in &self.histogram {
            let unfiltered = self.mappings_for(p, code, |_| true);
            if unfiltered == 0 {
                continue;
            }
            let f = self.mappings_for(p, code, &full);
            let m = self.mappings_for(p, code, &min);
            r.induced_count += c;
            r.labeled_mapping_count += c * unfiltered;
            r.full_order_mapping_count += c * f;
            r.minimized_mapping_count += c * m;
            widen(&mut r.per_instance_unfiltered, unfiltered, first);
            widen(&mut r.per_instance_full, f, first);
            widen(&mut r.per_instance_minimized, m, first);
            first = false;
        }
        r
    }
}

/// Number of vertex subsets of `g` whose induced subgraph is isomorphic to `p`.
pub fn brute_force_induced_count(g: &Graph, p: &Pattern) -> Result<u64, Error> {
    Ok(SubsetCensus::new(g, p.n())?.induced_count(p))
}

/// Number of injective label-to-vertex maps realising `p` as an induced
/// subgraph of `g` and passing `filter`.
pub fn brute_force_mapping_count(
    g: &Graph,
    p: &Pattern,
    s: &Schedule,
    filter: MappingFilter<'_>,
) -> Result<u64, Error> {
    Ok(SubsetCensus::new(g, p.n())?.mapping_count(p, s, filter))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::automorphisms;
    use crate::restriction::{generate_restrictions, minimize_restrictions};
    use alloc::vec;

    fn complete(n: u32) -> Graph {
        Graph::from_edges(n as usize, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap().0
    }

    fn petersen() -> Graph {
        let mut edges = vec![];
        for i in 0..5u32 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((i + 5, (i + 2) % 5 + 5));
        }
        Graph::from_edges(10, edges).unwrap().0
    }

    #[test]
    fn closed_form_counts() {
        let tri = Pattern::named("triangle", None).unwrap();
        assert_eq!(brute_force_induced_count(&complete(5), &tri).unwrap(), 10);
        let rect = Pattern::named("rectangle", None).unwrap();
        let k23 = Graph::from_edges(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap().0;
        assert_eq!(brute_force_induced_count(&k23, &rect).unwrap(), 3);
        assert_eq!(brute_force_induced_count(&complete(4), &rect).unwrap(), 0);
        let pent = Pattern::named("pentagon", None).unwrap();
        assert_eq!(brute_force_induced_count(&petersen(), &pent).unwrap(), 12);
    }

    #[test]
    fn rectangle_mapping_counts_in_k23() {
        let rect = Pattern::named("rectangle", None).unwrap();
        let k23 = Graph::from_edges(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap().0;
        let s = Schedule::new(vec![0, 1, 2, 3]);
        let order = generate_restrictions(&rect, &s, &automorphisms(&rect));
        let rm = minimize_restrictions(&s, &order);
        let count = |f| brute_force_mapping_count(&k23, &rect, &s, f).unwrap();
        assert_eq!(count(MappingFilter::None), 24);
        assert_eq!(count(MappingFilter::FullOrder(&order)), 3);
        assert_eq!(count(MappingFilter::Minimized(&rm)), 3);
        let census = SubsetCensus::new(&k23, 4).unwrap();
        let r = census.report(&rect, &s, &order, &rm);
        assert_eq!(r.per_instance_full, (1, 1));
        assert_eq!(r.per_instance_unfiltered, (8, 8));
    }

    #[test]
    fn guards() {
        let big = Graph::from_edges(61, [(0, 1)]).unwrap().0;
        let tri = Pattern::named("triangle", None).unwrap();
        assert!(matches!(brute_force_induced_count(&big, &tri), Err(Error::OracleGuard { .. })));
        let c7 = Pattern::named("clique", Some(7)).unwrap();
        assert!(brute_force_induced_count(&complete(8), &c7).is_err());
    }

    #[test]
    fn graph_smaller_than_pattern() {
        let tri = Pattern::named("triangle", None).unwrap();
        assert_eq!(brute_force_induced_count(&complete(2), &tri).unwrap(), 0);
    }

    #[test]
    fn connected_subsets_of_star() {
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap().0;
        assert_eq!(SubsetCensus::new(&star, 3).unwrap().connected_subsets(), 3);
    }
}
