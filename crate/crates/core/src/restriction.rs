//! Symmetry-breaking ID restrictions.
//!
//! A relation `(a, b)` requires the graph vertex bound to label `a` to have a
//! larger ID than the one bound to `b`. Walking the schedule front to back,
//! every automorphism that still fixes the prefix but moves the current label
//! `v` contributes `(v, x(v))`; only the automorphisms fixing `v` survive to
//! the next step. With all relations enforced each induced instance has a
//! single admissible mapping.

use alloc::vec::Vec;

use crate::pattern::{AutomorphismGroup, Pattern, Permutation, MAX_PATTERN_SIZE};
use crate::schedule::Schedule;

/// Relations produced for one (pattern, schedule) pair, plus the orbit sizes
/// of the stabilizer chain that produced them.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PartialOrder {
    relations: Vec<(usize, usize)>,
    orbit_sizes: Vec<usize>,
}

impl PartialOrder {
    /// Builds an order from explicit relations; `orbit_sizes` is left empty.
    pub fn from_relations(relations: Vec<(usize, usize)>) -> Self {
        PartialOrder { relations, orbit_sizes: Vec::new() }
    }

    /// Relations `(a, b)` meaning `id(a) > id(b)`, in generation order.
    pub fn relations(&self) -> &[(usize, usize)] {
        &self.relations
    }

    /// True if `(a, b)` was generated directly.
    pub fn contains(&self, a: usize, b: usize) -> bool {
        self.relations.contains(&(a, b))
    }

    /// For each schedule position, the number of distinct images of that
    /// label under the stabilizer of the prefix (the label itself included).
    /// Their product is the group order.
    pub fn orbit_sizes(&self) -> &[usize] {
        &self.orbit_sizes
    }

    /// Labels forced strictly below each label, as bit masks indexed by label.
    pub fn closure_below(&self, n: usize) -> [u8; MAX_PATTERN_SIZE] {
        let mut below = [0u8; MAX_PATTERN_SIZE];
        for &(a, b) in &self.relations {
            below[a] |= 1 << b;
        }
        // Warshall over label bit rows
        for k in 0..n {
            for i in 0..n {
                if below[i] >> k & 1 == 1 {
                    below[i] |= below[k];
                }
            }
        }
        below
    }

    /// True when the transitive closure has no cycle.
    pub fn is_acyclic(&self, n: usize) -> bool {
        let below = self.closure_below(n);
        (0..n).all(|i| below[i] >> i & 1 == 0)
    }

    /// True when every assignment in `values` (indexed by label) satisfies all relations.
    pub fn satisfied_by<T: PartialOrd>(&self, values: &[T]) -> bool {
        self.relations.iter().all(|&(a, b)| values[a] > values[b])
    }
}

/// At most one upper-bound parent per schedule position.
///
/// `parent(k) = Some(z)` means the value bound at position `k` must be smaller
/// than the value bound at position `z < k`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RestrictionMap {
    parents: Vec<Option<usize>>,
}

impl RestrictionMap {
    /// Wraps a parent array, rejecting parents that do not precede their level.
    pub fn from_parents(parents: Vec<Option<usize>>) -> Option<Self> {
        parents.iter().enumerate().all(|(k, p)| p.is_none_or(|z| z < k)).then_some(RestrictionMap { parents })
    }

    /// A map with no restrictions on `n` levels.
    pub fn unrestricted(n: usize) -> Self {
        RestrictionMap { parents: alloc::vec![None; n] }
    }

    /// Parent position for level `k`.
    pub fn parent(&self, k: usize) -> Option<usize> {
        self.parents[k]
    }

    /// All parents, indexed by level.
    pub fn parents(&self) -> &[Option<usize>] {
        &self.parents
    }

    /// Number of levels.
    pub fn len(&self) -> usize {
        self.parents.len()
    }

    /// True for a zero-level map.
    pub fn is_empty(&self) -> bool {
        self.parents.is_empty()
    }

    /// True when every value (indexed by schedule position) passes its level's check.
    pub fn satisfied_by<T: PartialOrd>(&self, values: &[T]) -> bool {
        self.parents.iter().enumerate().all(|(k, p)| p.is_none_or(|z| values[k] < values[z]))
    }
}

/// Generates the symmetry-breaking relations for schedule `s` of pattern `p`.
pub fn generate_restrictions(p: &Pattern, s: &Schedule, aut: &AutomorphismGroup) -> PartialOrder {
    debug_assert!(s.is_valid_for(p));
    let mut stabilizer: Vec<&Permutation> = aut.iter().collect();
    let mut relations = Vec::new();
    let mut orbit_sizes = Vec::with_capacity(s.len());
    for &v in s.order() {
        let mut fixing = Vec::with_capacity(stabilizer.len());
        let mut orbit = 1u8 << v;
        for &x in &stabilizer {
            let image = x.apply(v);
            if image == v {
                fixing.push(x);
            } else {
                orbit |= 1 << image;
                if !relations.contains(&(v, image)) {
                    relations.push((v, image));
                }
            }
        }
        orbit_sizes.push(orbit.count_ones() as usize);
        stabilizer = fixing;
    }
    PartialOrder { relations, orbit_sizes }
}

/// Keeps, for every position `k`, only the relation from the latest earlier
/// position `z` with `(s[z], s[k])` in `order`.
pub fn minimize_restrictions(s: &Schedule, order: &PartialOrder) -> RestrictionMap {
    let pos = s.positions();
    let mut parents: Vec<Option<usize>> = alloc::vec![None; s.len()];
    for &(a, b) in order.relations() {
        let (z, k) = (pos[a], pos[b]);
        debug_assert!(z < k, "relation against schedule order");
        if parents[k].is_none_or(|cur| z > cur) {
            parents[k] = Some(z);
        }
    }
    RestrictionMap { parents }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::automorphisms;
    use alloc::vec;

    const A: usize = 0;
    const B: usize = 1;
    const C: usize = 2;
    const D: usize = 3;

    fn order_for(name: &str, sched: &[usize]) -> (Schedule, PartialOrder) {
        let p = Pattern::named(name, None).unwrap();
        let s = Schedule::new(sched.to_vec());
        let order = generate_restrictions(&p, &s, &automorphisms(&p));
        (s, order)
    }

    #[test]
    fn rectangle_relations() {
        let (s, order) = order_for("rectangle", &[A, B, C, D]);
        assert_eq!(order.relations(), &[(A, B), (A, C), (A, D), (B, C)]);
        assert_eq!(order.orbit_sizes(), &[4, 2, 1, 1]);
        let rm = minimize_restrictions(&s, &order);
        assert_eq!(rm.parents(), &[None, Some(0), Some(1), Some(0)]);
    }

    #[test]
    fn triangle_relations() {
        let (s, order) = order_for("triangle", &[A, B, C]);
        assert_eq!(order.relations(), &[(A, B), (A, C), (B, C)]);
        assert_eq!(minimize_restrictions(&s, &order).parents(), &[None, Some(0), Some(1)]);
    }

    #[test]
    fn tailed_triangle_relations() {
        let (s, order) = order_for("tailed_triangle", &[A, B, C, D]);
        assert_eq!(order.relations(), &[(C, D)]);
        assert_eq!(order.orbit_sizes(), &[1, 1, 2, 1]);
        assert_eq!(minimize_restrictions(&s, &order).parents(), &[None, None, None, Some(2)]);
    }

    #[test]
    fn closure_and_acyclicity() {
        let (_, order) = order_for("rectangle", &[A, B, C, D]);
        let below = order.closure_below(4);
        assert_eq!(below[A], 0b1110);
        assert_eq!(below[B], 0b0100);
        assert!(order.is_acyclic(4));
        assert!(!PartialOrder::from_relations(vec![(0, 1), (1, 2), (2, 0)]).is_acyclic(3));
    }

    #[test]
    fn restriction_map_checks() {
        assert!(RestrictionMap::from_parents(vec![None, Some(1)]).is_none());
        let rm = RestrictionMap::from_parents(vec![None, Some(0), Some(1)]).unwrap();
        assert!(rm.satisfied_by(&[5, 3, 1]));
        assert!(!rm.satisfied_by(&[5, 3, 4]));
        assert_eq!(RestrictionMap::unrestricted(3).parents(), &[None, None, None]);
    }
}
