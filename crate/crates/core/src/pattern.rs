//! Patterns, permutations and automorphism groups.
//!
//! A [`Pattern`] is a small connected simple graph whose vertices are the
//! labels `0..n`. Every non-edge is a required absence: matching is always
//! induced.

use alloc::vec::Vec;
use core::fmt;

use crate::Error;

/// Largest supported pattern. Automorphisms are found by filtering all `n!`
/// permutations, which is still cheap at 8! = 40320.
pub const MAX_PATTERN_SIZE: usize = 8;

/// A connected, simple, undirected pattern on labels `0..n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pattern {
    n: usize,
    adj: [u8; MAX_PATTERN_SIZE],
}

impl Pattern {
    /// Builds a pattern from an edge list, enforcing every pattern invariant.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, Error> {
        let mut builder = Builder::new(n)?;
        for (i, &(a, b)) in edges.iter().enumerate() {
            builder.add(a, b, i + 1)?;
        }
        builder.finish()
    }

    /// Parses the pattern text format: the first non-comment line holds `n`,
    /// every further non-empty line holds one edge `i j`. `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self, Error> {
        let mut builder: Option<Builder> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let mut tokens = content.split_whitespace();
            match builder.as_mut() {
                None => {
                    let n = parse_label(tokens.next(), line)?;
                    if tokens.next().is_some() {
                        return Err(Error::Malformed { line, reason: "expected a single vertex count" });
                    }
                    builder = Some(Builder::new(n)?);
                }
                Some(b) => {
                    let x = parse_label(tokens.next(), line)?;
                    let y = parse_label(tokens.next(), line)?;
                    if tokens.next().is_some() {
                        return Err(Error::Malformed { line, reason: "expected exactly two labels" });
                    }
                    b.add(x, y, line)?;
                }
            }
        }
        builder.ok_or(Error::Malformed { line: 1, reason: "missing vertex count" })?.finish()
    }

    /// Builds one of the named shapes. `k` is the vertex count for the
    /// parameterised families `clique`, `clique_minus`, `path` and `star`.
    pub fn named(name: &str, k: Option<usize>) -> Result<Self, Error> {
        let sized = |lo: usize| match k {
            Some(k) if (lo..=MAX_PATTERN_SIZE).contains(&k) => Ok(k),
            _ => Err(Error::BadPatternArgument),
        };
        let edges: Vec<(usize, usize)> = match name {
            "triangle" => alloc::vec![(0, 1), (1, 2), (0, 2)],
            // A-B, A-C, B-D, C-D: D closes the cycle opposite A.
            "rectangle" => alloc::vec![(0, 1), (0, 2), (1, 3), (2, 3)],
            "pentagon" => alloc::vec![(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)],
            // A is the tail hanging off B; B, C, D form the triangle.
            "tailed_triangle" => alloc::vec![(0, 1), (1, 2), (1, 3), (2, 3)],
            // two triangles sharing vertex 0
            "hourglass" => alloc::vec![(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)],
            // square 0-1-2-3 with roof vertex 4 over edge 0-1
            "house" => alloc::vec![(0, 1), (1, 2), (2, 3), (0, 3), (0, 4), (1, 4)],
            "clique" => {
                let k = sized(2)?;
                pairs(k).collect()
            }
            "clique_minus" => {
                let k = sized(3)?;
                pairs(k).filter(|&e| e != (0, 1)).collect()
            }
            "path" => {
                let k = sized(2)?;
                (1..k).map(|i| (i - 1, i)).collect()
            }
            "star" => {
                let k = sized(2)?;
                (1..k).map(|i| (0, i)).collect()
            }
            _ => return Err(Error::UnknownPattern),
        };
        let n = edges.iter().map(|&(a, b)| a.max(b) + 1).max().unwrap_or(0);
        Pattern::new(n, &edges)
    }

    /// Builds a pattern from raw adjacency rows without the connectivity check.
    pub(crate) fn from_adjacency_unchecked(n: usize, adj: [u8; MAX_PATTERN_SIZE]) -> Self {
        Pattern { n, adj }
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    /// True when `a` and `b` are joined by an edge.
    #[inline]
    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a] >> b & 1 == 1
    }

    /// Neighbours of `v` as a bit mask over labels.
    #[inline]
    pub fn neighbor_mask(&self, v: usize) -> u8 {
        self.adj[v]
    }

    /// Degree of label `v`.
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Edges as `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        pairs(self.n).filter(|&(a, b)| self.has_edge(a, b)).collect()
    }

    /// Number of edges.
    pub fn edge_count(&self) -> usize {
        self.adj[..self.n].iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Applies `perm` to every label: edge `(a, b)` becomes `(perm(a), perm(b))`.
    pub fn relabel(&self, perm: &Permutation) -> Pattern {
        assert_eq!(perm.len(), self.n, "permutation size mismatch");
        let mut adj = [0u8; MAX_PATTERN_SIZE];
        for (a, b) in self.edges() {
            let (x, y) = (perm.apply(a), perm.apply(b));
            adj[x] |= 1 << y;
            adj[y] |= 1 << x;
        }
        Pattern { n: self.n, adj }
    }

    /// True when `perm` maps edges onto edges and non-edges onto non-edges.
    pub fn preserved_by(&self, perm: &Permutation) -> bool {
        (0..self.n).all(|a| {
            let image = perm.apply(a);
            (0..self.n).all(|b| self.has_edge(a, b) == self.has_edge(image, perm.apply(b)))
        })
    }

    fn is_connected(&self) -> bool {
        let full: u8 = if self.n == 8 { u8::MAX } else { (1u8 << self.n) - 1 };
        let mut seen = 1u8;
        let mut frontier = 1u8;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = self.adj[v] & !seen;
            seen |= fresh;
            frontier |= fresh;
        }
        seen == full
    }
}

impl fmt::Debug for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Pattern(n={}, edges={:?})", self.n, self.edges())
    }
}

fn parse_label(token: Option<&str>, line: usize) -> Result<usize, Error> {
    let token = token.ok_or(Error::Malformed { line, reason: "missing label" })?;
    token.parse::<usize>().map_err(|_| Error::Malformed { line, reason: "label is not a non-negative integer" })
}

/// All `(i, j)` with `i < j < n` in lexicographic order.
pub(crate) fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
}

struct Builder {
    n: usize,
    adj: [u8; MAX_PATTERN_SIZE],
}

impl Builder {
    fn new(n: usize) -> Result<Self, Error> {
        if !(2..=MAX_PATTERN_SIZE).contains(&n) {
            return Err(Error::PatternSize(n));
        }
        Ok(Builder { n, adj: [0; MAX_PATTERN_SIZE] })
    }

    fn add(&mut self, a: usize, b: usize, line: usize) -> Result<(), Error> {
        for label in [a, b] {
            if label >= self.n {
                return Err(Error::LabelOutOfRange { line, label, n: self.n });
            }
        }
        if a == b {
            return Err(Error::SelfLoop { line, label: a });
        }
        if self.adj[a] >> b & 1 == 1 {
            return Err(Error::DuplicateEdge { line, a: a.min(b), b: a.max(b) });
        }
        self.adj[a] |= 1 << b;
        self.adj[b] |= 1 << a;
        Ok(())
    }

    fn finish(self) -> Result<Pattern, Error> {
        let p = Pattern { n: self.n, adj: self.adj };
        if !p.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(p)
    }
}

/// A bijection on `0..n`; `map[i]` is the image of label `i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Permutation {
    map: Vec<u8>,
}

impl Permutation {
    /// The identity on `0..n`.
    pub fn identity(n: usize) -> Self {
        Permutation { map: (0..n as u8).collect() }
    }

    /// Wraps an image array, returning `None` unless it is a bijection on `0..len`.
    pub fn from_images(images: &[usize]) -> Option<Self> {
        let n = images.len();
        if n > MAX_PATTERN_SIZE {
            return None;
        }
        let mut seen = 0u16;
        for &x in images {
            if x >= n || seen >> x & 1 == 1 {
                return None;
            }
            seen |= 1 << x;
        }
        Some(Permutation { map: images.iter().map(|&x| x as u8).collect() })
    }

    /// Number of points.
    pub fn len(&self) -> usize {
        self.map.len()
    }

    /// True for the permutation on zero points.
    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// Image of `i`.
    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.map[i] as usize
    }

    /// Image array.
    pub fn images(&self) -> impl Iterator<Item = usize> + '_ {
        self.map.iter().map(|&x| x as usize)
    }

    /// True when every point is fixed.
    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation { map: other.map.iter().map(|&x| self.map[x as usize]).collect() }
    }

    /// The inverse bijection.
    pub fn inverse(&self) -> Permutation {
        let mut map = alloc::vec![0u8; self.map.len()];
        for (i, &x) in self.map.iter().enumerate() {
            map[x as usize] = i as u8;
        }
        Permutation { map }
    }

    /// Rearranges into the lexicographically next permutation; false after the last.
    fn advance(&mut self) -> bool {
        let m = &mut self.map;
        let Some(i) = (1..m.len()).rev().find(|&i| m[i - 1] < m[i]) else {
            return false;
        };
        let j = (i..m.len()).rev().find(|&j| m[j] > m[i - 1]).expect("successor exists");
        m.swap(i - 1, j);
        m[i..].reverse();
        true
    }
}

/// Iterates every permutation of `0..n` in lexicographic order, identity first.
pub(crate) fn all_permutations(n: usize) -> impl Iterator<Item = Permutation> {
    let mut next = Some(Permutation::identity(n));
    core::iter::from_fn(move || {
        let current = next.take()?;
        let mut succ = current.clone();
        if succ.advance() {
            next = Some(succ);
        }
        Some(current)
    })
}

/// Every adjacency-preserving permutation of a pattern, identity first and
/// then in lexicographic order of the image arrays.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AutomorphismGroup {
    members: Vec<Permutation>,
}

impl AutomorphismGroup {
    /// Group members in canonical order.
    pub fn members(&self) -> &[Permutation] {
        &self.members
    }

    /// Group order, i.e. the pattern's multiplicity.
    pub fn len(&self) -> usize {
        self.members.len()
    }

    /// Never true for a group built by [`automorphisms`]; present for API symmetry.
    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Iterates the members.
    pub fn iter(&self) -> core::slice::Iter<'_, Permutation> {
        self.members.iter()
    }
}

impl<'a> IntoIterator for &'a AutomorphismGroup {
    type Item = &'a Permutation;
    type IntoIter = core::slice::Iter<'a, Permutation>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}

/// Computes the automorphism group by filtering all `n!` label permutations.
pub fn automorphisms(p: &Pattern) -> AutomorphismGroup {
    let members = all_permutations(p.n()).filter(|perm| p.preserved_by(perm)).collect();
    AutomorphismGroup { members }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn factorial(k: usize) -> usize {
        (1..=k).product()
    }

    #[test]
    fn parse_triangle() {
        let p = Pattern::parse("3\n0 1\n1 2\n0 2").unwrap();
        assert_eq!(p.n(), 3);
        assert_eq!(p.edge_count(), 3);
        assert_eq!(p, Pattern::named("triangle", None).unwrap());
    }

    #[test]
    fn parse_rectangle_matches_named() {
        let p = Pattern::parse("4\n0 1\n0 2\n1 3\n2 3").unwrap();
        assert_eq!(p, Pattern::named("rectangle", None).unwrap());
        // D is adjacent to B and C but not A
        assert!(p.has_edge(3, 1) && p.has_edge(3, 2) && !p.has_edge(3, 0));
    }

    #[test]
    fn parse_comments_and_blank_lines() {
        let p = Pattern::parse("# wedge\n3 # vertices\n\n0 1\n1 2 # second\n").unwrap();
        assert_eq!(p.edges(), alloc::vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn parse_errors() {
        assert_eq!(Pattern::parse("3\n0 1"), Err(Error::Disconnected));
        assert!(matches!(Pattern::parse("3\n0 3"), Err(Error::LabelOutOfRange { line: 2, label: 3, .. })));
        assert!(matches!(Pattern::parse("3\n1 1"), Err(Error::SelfLoop { line: 2, .. })));
        assert!(matches!(Pattern::parse("2\n0 1\n1 0"), Err(Error::DuplicateEdge { line: 3, .. })));
        assert!(matches!(Pattern::parse("3\n0 x"), Err(Error::Malformed { line: 2, .. })));
        assert!(matches!(Pattern::parse("3\n0 1 2"), Err(Error::Malformed { line: 2, .. })));
        assert!(matches!(Pattern::parse("3\n-1 2"), Err(Error::Malformed { .. })));
        assert_eq!(Pattern::parse("9\n0 1"), Err(Error::PatternSize(9)));
        assert_eq!(Pattern::parse("1"), Err(Error::PatternSize(1)));
        assert!(matches!(Pattern::parse(""), Err(Error::Malformed { .. })));
    }

    #[test]
    fn named_shapes() {
        let c4 = Pattern::named("clique", Some(4)).unwrap();
        assert_eq!((c4.n(), c4.edge_count()), (4, 6));
        let c5 = Pattern::named("pentagon", None).unwrap();
        assert_eq!((c5.n(), c5.edge_count()), (5, 5));
        let tt = Pattern::named("tailed_triangle", None).unwrap();
        assert_eq!(tt.edges(), alloc::vec![(0, 1), (1, 2), (1, 3), (2, 3)]);
        let cm = Pattern::named("clique_minus", Some(5)).unwrap();
        assert_eq!(cm.edge_count(), 9);
        assert_eq!(Pattern::named("star", Some(4)).unwrap().degree(0), 3);
        assert_eq!(Pattern::named("house", None).unwrap().edge_count(), 6);
        assert_eq!(Pattern::named("hourglass", None).unwrap().n(), 5);
    }

    #[test]
    fn named_errors() {
        assert_eq!(Pattern::named("dodecahedron", None), Err(Error::UnknownPattern));
        assert_eq!(Pattern::named("clique", None), Err(Error::BadPatternArgument));
        assert_eq!(Pattern::named("clique", Some(9)), Err(Error::BadPatternArgument));
        assert_eq!(Pattern::named("path", Some(1)), Err(Error::BadPatternArgument));
    }

    #[test]
    fn permutations_are_lexicographic() {
        let all: Vec<_> = all_permutations(3).map(|p| p.images().collect::<Vec<_>>()).collect();
        assert_eq!(
            all,
            alloc::vec![
                alloc::vec![0, 1, 2],
                alloc::vec![0, 2, 1],
                alloc::vec![1, 0, 2],
                alloc::vec![1, 2, 0],
                alloc::vec![2, 0, 1],
                alloc::vec![2, 1, 0]
            ]
        );
        assert_eq!(all_permutations(6).count(), 720);
    }

    #[test]
    fn group_sizes() {
        let size = |name: &str, k: Option<usize>| automorphisms(&Pattern::named(name, k).unwrap()).len();
        assert_eq!(size("triangle", None), 6);
        assert_eq!(size("rectangle", None), 8);
        assert_eq!(size("tailed_triangle", None), 2);
        assert_eq!(size("pentagon", None), 10);
        assert_eq!(size("clique_minus", Some(7)), 240);
        for k in 2..=6 {
            assert_eq!(size("clique", Some(k)), factorial(k));
        }
        for k in 2..=8 {
            assert_eq!(size("path", Some(k)), 2);
        }
    }

    #[test]
    fn tailed_triangle_group_swaps_base_pair() {
        let g = automorphisms(&Pattern::named("tailed_triangle", None).unwrap());
        let images: Vec<Vec<usize>> = g.iter().map(|p| p.images().collect()).collect();
        assert_eq!(images, alloc::vec![alloc::vec![0, 1, 2, 3], alloc::vec![0, 1, 3, 2]]);
    }

    #[test]
    fn group_axioms_exhaustive() {
        for (name, k) in
            [("rectangle", None), ("house", None), ("clique", Some(4)), ("hourglass", None), ("star", Some(5))]
        {
            let p = Pattern::named(name, k).unwrap();
            let g = automorphisms(&p);
            assert!(g.members()[0].is_identity());
            assert!(g.members().windows(2).skip(1).all(|w| w[0] < w[1]));
            for a in &g {
                assert!(g.members().contains(&a.inverse()));
                for b in &g {
                    assert!(g.members().contains(&a.compose(b)));
                }
            }
        }
    }
}
