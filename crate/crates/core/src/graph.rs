//! Immutable CSR graphs and degree-orientation reindexing.

use alloc::vec::Vec;

use crate::Error;

/// Internal vertex identifier.
pub type VertexId = u32;

/// A strictly ascending list of vertex IDs.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct VertexList(Vec<VertexId>);

impl VertexList {
    /// Wraps `ids` if strictly ascending.
    pub fn from_sorted(ids: Vec<VertexId>) -> Option<Self> {
        ids.windows(2).all(|w| w[0] < w[1]).then_some(VertexList(ids))
    }

    /// Sorts and deduplicates arbitrary IDs.
    pub fn from_unsorted(mut ids: Vec<VertexId>) -> Self {
        ids.sort_unstable();
        ids.dedup();
        VertexList(ids)
    }

    pub(crate) fn from_sorted_unchecked(ids: Vec<VertexId>) -> Self {
        debug_assert!(ids.windows(2).all(|w| w[0] < w[1]));
        VertexList(ids)
    }

    /// Underlying slice.
    pub fn as_slice(&self) -> &[VertexId] {
        &self.0
    }

    /// Number of IDs.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// True when empty.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Unwraps the IDs.
    pub fn into_vec(self) -> Vec<VertexId> {
        self.0
    }
}

/// What [`Graph::from_edges`] discarded.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct BuildStats {
    /// Edges seen more than once (in either direction).
    pub duplicates: usize,
    /// Edges from a vertex to itself.
    pub self_loops: usize,
}

/// Undirected simple graph in compressed sparse row form.
///
/// Every neighbour slice is strictly ascending and adjacency is symmetric.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graph {
    offsets: Vec<usize>,
    neighbors: Vec<VertexId>,
    original_ids: Option<Vec<u64>>,
}

impl Graph {
    /// Builds a graph on `n` vertices. Self-loops and repeated edges are
    /// dropped and reported in the returned stats.
    ///
    /// Panics if an endpoint is `>= n`.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<(Graph, BuildStats), Error>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        if n > VertexId::MAX as usize {
            return Err(Error::GraphTooLarge);
        }
        let mut stats = BuildStats::default();
        let mut pairs: Vec<(VertexId, VertexId)> = Vec::new();
        for (u, v) in edges {
            assert!((u as usize) < n && (v as usize) < n, "edge ({u}, {v}) outside 0..{n}");
            if u == v {
                stats.self_loops += 1;
            } else {
                pairs.push((u.min(v), u.max(v)));
            }
        }
        pairs.sort_unstable();
        let before = pairs.len();
        pairs.dedup();
        stats.duplicates = before - pairs.len();

        let mut degree = alloc::vec![0usize; n];
        for &(u, v) in &pairs {
            degree[u as usize] += 1;
            degree[v as usize] += 1;
        }
        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0);
        for d in &degree {
            offsets.push(offsets.last().unwrap() + d);
        }
        let mut fill = offsets[..n].to_vec();
        let mut neighbors = alloc::vec![0 as VertexId; offsets[n]];
        // pairs are sorted by (low, high), so every row is written in ascending order
        for &(u, v) in &pairs {
            neighbors[fill[u as usize]] = v;
            fill[u as usize] += 1;
            neighbors[fill[v as usize]] = u;
            fill[v as usize] += 1;
        }
        let g = Graph { offsets, neighbors, original_ids: None };
        debug_assert!(g.check_invariants());
        Ok((g, stats))
    }

    /// Attaches source IDs, indexed by internal ID.
    pub fn with_original_ids(mut self, ids: Vec<u64>) -> Self {
        assert_eq!(ids.len(), self.n());
        self.original_ids = Some(ids);
        self
    }

    /// Source IDs, if the graph was compacted from sparse input.
    pub fn original_ids(&self) -> Option<&[u64]> {
        self.original_ids.as_deref()
    }

    /// Source ID of internal vertex `v` (the ID itself when none were recorded).
    pub fn original_id(&self, v: VertexId) -> u64 {
        self.original_ids.as_ref().map_or(v as u64, |ids| ids[v as usize])
    }

    /// Vertex count.
    pub fn n(&self) -> usize {
        self.offsets.len() - 1
    }

    /// Undirected edge count.
    pub fn edge_count(&self) -> usize {
        self.neighbors.len() / 2
    }

    /// Offsets array of length `n + 1`.
    pub fn offsets(&self) -> &[usize] {
        &self.offsets
    }

    /// Flattened adjacency.
    pub fn neighbor_array(&self) -> &[VertexId] {
        &self.neighbors
    }

    /// Sorted neighbours of `v`.
    #[inline]
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        let v = v as usize;
        &self.neighbors[self.offsets[v]..self.offsets[v + 1]]
    }

    /// Degree of `v`.
    #[inline]
    pub fn degree(&self, v: VertexId) -> usize {
        let v = v as usize;
        self.offsets[v + 1] - self.offsets[v]
    }

    /// Largest degree, 0 for an empty graph.
    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v as VertexId)).max().unwrap_or(0)
    }

    /// Adjacency test by binary search.
    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.neighbors(u).binary_search(&v).is_ok()
    }

    /// Every edge once, as `(u, v)` with `u < v`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        (0..self.n() as VertexId)
            .flat_map(move |u| self.neighbors(u).iter().copied().filter(move |&v| u < v).map(move |v| (u, v)))
    }

    /// Checks sortedness, symmetry, absence of self-loops and offset consistency.
    pub fn check_invariants(&self) -> bool {
        let n = self.n();
        if self.offsets[0] != 0 || self.offsets[n] != self.neighbors.len() || !self.neighbors.len().is_multiple_of(2) {
            return false;
        }
        if self.offsets.windows(2).any(|w| w[0] > w[1]) {
            return false;
        }
        (0..n as VertexId).all(|u| {
            let row = self.neighbors(u);
            row.windows(2).all(|w| w[0] < w[1])
                && row.iter().all(|&v| (v as usize) < n && v != u && self.has_edge(v, u))
        })
    }
}

/// Relabels `g` so that higher-degree vertices get smaller IDs, breaking ties
/// by ascending old ID. Returns the new graph and the new-to-old ID map.
pub fn orient_reindex(g: &Graph) -> (Graph, Vec<VertexId>) {
    let n = g.n();
    let mut order: Vec<VertexId> = (0..n as VertexId).collect();
    order.sort_by_key(|&v| (core::cmp::Reverse(g.degree(v)), v));
    let mut new_of = alloc::vec![0 as VertexId; n];
    for (new, &old) in order.iter().enumerate() {
        new_of[old as usize] = new as VertexId;
    }
    let (reindexed, _) = Graph::from_edges(n, g.edges().map(|(u, v)| (new_of[u as usize], new_of[v as usize])))
        .expect("vertex count unchanged");
    let originals = order.iter().map(|&old| g.original_id(old)).collect();
    (reindexed.with_original_ids(originals), order)
}
