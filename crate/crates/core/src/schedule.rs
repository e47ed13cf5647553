//! Discovery schedules and the distinct-schedule explorer.
//!
//! A schedule is the order in which pattern labels are bound by the nested
//! loops. It is valid when every label after the first is adjacent to an
//! earlier one, so that its candidates come from at least one neighbour list.
//! Two schedules are equivalent when an automorphism maps one onto the other;
//! they compile to the same set-operation program.

use alloc::vec::Vec;

use crate::pattern::{all_permutations, AutomorphismGroup, Pattern, Permutation};

/// A total order on the pattern labels.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Schedule {
    order: Vec<usize>,
}

impl Schedule {
    /// Wraps a label sequence. Validity is checked separately with [`Schedule::is_valid_for`].
    pub fn new(order: Vec<usize>) -> Self {
        Schedule { order }
    }

    /// Labels in discovery order.
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// Number of positions.
    pub fn len(&self) -> usize {
        self.order.len()
    }

    /// True for the empty schedule.
    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// Label bound at position `k`.
    pub fn at(&self, k: usize) -> usize {
        self.order[k]
    }

    /// Position of `label`, or `None` if absent.
    pub fn position(&self, label: usize) -> Option<usize> {
        self.order.iter().position(|&l| l == label)
    }

    /// Position of every label, indexed by label. Assumes a permutation of `0..len`.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = alloc::vec![0; self.order.len()];
        for (k, &l) in self.order.iter().enumerate() {
            pos[l] = k;
        }
        pos
    }

    /// True when the schedule is a permutation of the pattern labels and every
    /// label after the first is adjacent to an earlier one.
    pub fn is_valid_for(&self, p: &Pattern) -> bool {
        if self.order.len() != p.n() {
            return false;
        }
        let mut seen = 0u8;
        for (k, &v) in self.order.iter().enumerate() {
            if v >= p.n() || seen >> v & 1 == 1 {
                return false;
            }
            if k > 0 && p.neighbor_mask(v) & seen == 0 {
                return false;
            }
            seen |= 1 << v;
        }
        true
    }

    /// Image of the schedule under `perm`, position by position.
    pub fn mapped(&self, perm: &Permutation) -> Schedule {
        Schedule { order: self.order.iter().map(|&l| perm.apply(l)).collect() }
    }
}

/// Schedules generated for one pattern.
#[derive(Clone, Debug)]
pub struct ScheduleSet {
    pattern: Pattern,
    schedules: Vec<Schedule>,
}

impl ScheduleSet {
    /// Pattern the schedules belong to.
    pub fn pattern(&self) -> &Pattern {
        &self.pattern
    }

    /// Schedules in generation order.
    pub fn schedules(&self) -> &[Schedule] {
        &self.schedules
    }

    /// Number of schedules.
    pub fn len(&self) -> usize {
        self.schedules.len()
    }

    /// True when no schedule was generated.
    pub fn is_empty(&self) -> bool {
        self.schedules.is_empty()
    }

    /// Consumes the set, returning the schedules.
    pub fn into_schedules(self) -> Vec<Schedule> {
        self.schedules
    }
}

/// Brute force: every label permutation that is a valid schedule, in
/// lexicographic order. Kept as a test oracle.
pub fn generate_valid_automine(p: &Pattern) -> ScheduleSet {
    let schedules = all_permutations(p.n())
        .map(|perm| Schedule::new(perm.images().collect()))
        .filter(|s| s.is_valid_for(p))
        .collect();
    ScheduleSet { pattern: p.clone(), schedules }
}

/// Depth-first search that only ever extends a prefix by a label adjacent to it.
pub fn generate_valid_recursive(p: &Pattern) -> ScheduleSet {
    fn extend(p: &Pattern, sched: &mut Vec<usize>, frontier: u8, used: u8, out: &mut Vec<Schedule>) {
        if sched.len() == p.n() {
            out.push(Schedule::new(sched.clone()));
            return;
        }
        let candidates = if sched.is_empty() { full_mask(p.n()) } else { frontier };
        for v in bits(candidates) {
            sched.push(v);
            let used = used | 1 << v;
            extend(p, sched, (frontier | p.neighbor_mask(v)) & !used, used, out);
            sched.pop();
        }
    }

    let mut out = Vec::new();
    extend(p, &mut Vec::with_capacity(p.n()), 0, 0, &mut out);
    ScheduleSet { pattern: p.clone(), schedules: out }
}

/// Generates one representative per equivalence class of valid schedules.
///
/// At each step the candidate labels are partitioned into orbits of the
/// stabilizer of the current prefix; only the first label of each orbit is
/// expanded. `aut` must be the automorphism group of `p`.
pub fn generate_distinct(p: &Pattern, aut: &AutomorphismGroup) -> ScheduleSet {
    struct Search<'a> {
        p: &'a Pattern,
        out: Vec<Schedule>,
        sched: Vec<usize>,
    }

    impl Search<'_> {
        fn extend(&mut self, stabilizer: &[&Permutation], valid_next: u8, used: u8) {
            let n = self.p.n();
            if self.sched.len() == n {
                self.out.push(Schedule::new(self.sched.clone()));
                return;
            }
            let iterate_over = if self.sched.is_empty() { full_mask(n) } else { valid_next };
            // marks are local to this loop: they only prune later siblings
            let mut processed = 0u8;
            for v in bits(iterate_over) {
                if processed >> v & 1 == 1 {
                    continue;
                }
                let mut fixing = Vec::with_capacity(stabilizer.len());
                for &x in stabilizer {
                    let image = x.apply(v);
                    if image == v {
                        fixing.push(x);
                    } else {
                        processed |= 1 << image;
                    }
                }
                let used = used | 1 << v;
                self.sched.push(v);
                self.extend(&fixing, (valid_next | self.p.neighbor_mask(v)) & !used, used);
                self.sched.pop();
            }
        }
    }

    debug_assert!(aut.iter().all(|x| x.len() == p.n() && p.preserved_by(x)));
    let members: Vec<&Permutation> = aut.iter().collect();
    let mut search = Search { p, out: Vec::new(), sched: Vec::with_capacity(p.n()) };
    search.extend(&members, 0, 0);
    ScheduleSet { pattern: p.clone(), schedules: search.out }
}

/// True when some automorphism maps `s1` onto `s2` position by position.
pub fn schedules_equivalent(p: &Pattern, aut: &AutomorphismGroup, s1: &Schedule, s2: &Schedule) -> bool {
    if s1.len() != p.n() || s2.len() != p.n() {
        return false;
    }
    aut.iter().any(|x| s1.order().iter().zip(s2.order()).all(|(&a, &b)| x.apply(a) == b))
}

pub(crate) fn full_mask(n: usize) -> u8 {
    if n >= 8 {
        u8::MAX
    } else {
        (1u8 << n) - 1
    }
}

/// Set bits of a label mask, ascending.
pub(crate) fn bits(mut mask: u8) -> impl Iterator<Item = usize> {
    core::iter::from_fn(move || {
        if mask == 0 {
            return None;
        }
        let v = mask.trailing_zeros() as usize;
        mask &= mask - 1;
        Some(v)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::automorphisms;
    use alloc::collections::BTreeSet;
    use alloc::vec;

    fn named(name: &str, k: Option<usize>) -> Pattern {
        Pattern::named(name, k).unwrap()
    }

    fn as_set(s: &ScheduleSet) -> BTreeSet<Schedule> {
        s.schedules().iter().cloned().collect()
    }

    #[test]
    fn automine_counts() {
        assert_eq!(generate_valid_automine(&named("clique", Some(4))).len(), 24);
        assert_eq!(generate_valid_automine(&named("triangle", None)).len(), 6);
        let path3 = generate_valid_automine(&named("path", Some(3)));
        let orders: Vec<&[usize]> = path3.schedules().iter().map(|s| s.order()).collect();
        assert_eq!(orders, vec![&[0, 1, 2][..], &[1, 0, 2], &[1, 2, 0], &[2, 1, 0]]);
    }

    #[test]
    fn recursive_matches_automine() {
        for (name, k, expected) in [("path", Some(4), 8), ("rectangle", None, 16), ("clique", Some(5), 120)] {
            let p = named(name, k);
            let rec = generate_valid_recursive(&p);
            assert_eq!(rec.len(), expected, "{name}");
            assert_eq!(as_set(&rec), as_set(&generate_valid_automine(&p)));
        }
    }

    #[test]
    fn path_has_two_to_the_n_minus_one_valid_schedules() {
        for k in 2..=8 {
            assert_eq!(generate_valid_recursive(&named("path", Some(k))).len(), 1 << (k - 1));
        }
    }

    #[test]
    fn distinct_cliques_collapse_to_one() {
        for k in 2..=7 {
            let p = named("clique", Some(k));
            let d = generate_distinct(&p, &automorphisms(&p));
            assert_eq!(d.len(), 1);
            assert_eq!(d.schedules()[0].order(), (0..k).collect::<Vec<_>>().as_slice());
        }
    }

    #[test]
    fn distinct_path3() {
        let p = named("path", Some(3));
        let d = generate_distinct(&p, &automorphisms(&p));
        let orders: Vec<&[usize]> = d.schedules().iter().map(|s| s.order()).collect();
        assert_eq!(orders, vec![&[0, 1, 2][..], &[1, 0, 2]]);
    }

    #[test]
    fn distinct_tailed_triangle() {
        let p = named("tailed_triangle", None);
        let aut = automorphisms(&p);
        let d = generate_distinct(&p, &aut);
        assert_eq!(d.len() * 2, generate_valid_recursive(&p).len());
        let abcd = Schedule::new(vec![0, 1, 2, 3]);
        let abdc = Schedule::new(vec![0, 1, 3, 2]);
        assert!(d.schedules().contains(&abcd));
        assert!(!d.schedules().contains(&abdc));
    }

    #[test]
    fn equivalence_examples() {
        let tri = named("triangle", None);
        let aut = automorphisms(&tri);
        assert!(schedules_equivalent(&tri, &aut, &Schedule::new(vec![0, 1, 2]), &Schedule::new(vec![2, 0, 1])));

        let tt = named("tailed_triangle", None);
        let aut = automorphisms(&tt);
        let abcd = Schedule::new(vec![0, 1, 2, 3]);
        assert!(schedules_equivalent(&tt, &aut, &abcd, &Schedule::new(vec![0, 1, 3, 2])));
        assert!(!schedules_equivalent(&tt, &aut, &abcd, &Schedule::new(vec![2, 3, 1, 0])));
    }

    #[test]
    fn validity() {
        let rect = named("rectangle", None);
        assert!(Schedule::new(vec![0, 1, 2, 3]).is_valid_for(&rect));
        // D is not adjacent to A
        assert!(!Schedule::new(vec![0, 3, 1, 2]).is_valid_for(&rect));
        assert!(!Schedule::new(vec![0, 1, 2]).is_valid_for(&rect));
        assert!(!Schedule::new(vec![0, 1, 1, 3]).is_valid_for(&rect));
        assert!(!Schedule::new(vec![0, 1, 2, 4]).is_valid_for(&rect));
    }
}
