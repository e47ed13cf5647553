//! Sequential plan execution over a range of root vertices.
//!
//! The parallel driver in the `symmine` crate gives each worker its own
//! [`Executor`] and a disjoint block of roots.

use alloc::vec::Vec;
use core::mem;
use core::ops::Range;

use crate::graph::{Graph, VertexId};
use crate::kernels::{bounded_copy_into, difference_into, intersect_into};
use crate::plan::Plan;
use crate::Error;

/// Per-worker execution state: the partial embedding and one candidate
/// buffer per level, each pre-sized to the graph's maximum degree.
pub struct Executor<'a> {
    graph: &'a Graph,
    plan: &'a Plan,
    values: Vec<VertexId>,
    sets: Vec<Vec<VertexId>>,
    scratch: Vec<VertexId>,
    bounded: bool,
    checked: bool,
}

impl<'a> Executor<'a> {
    /// Prepares buffers for running `plan` over `graph`.
    pub fn new(graph: &'a Graph, plan: &'a Plan) -> Self {
        let depth = plan.levels().len();
        let cap = graph.max_degree();
        Executor {
            graph,
            plan,
            values: alloc::vec![0; depth],
            sets: (0..depth).map(|_| Vec::with_capacity(cap)).collect(),
            scratch: Vec::with_capacity(cap),
            bounded: plan.uses_bounds(),
            checked: plan.options().use_restrictions && !plan.options().use_bounds,
        }
    }

    /// Number of complete embeddings whose level-0 vertex lies in `roots`.
    pub fn count_roots(&mut self, roots: Range<VertexId>) -> Result<u64, Error> {
        let mut total = 0u64;
        for root in roots {
            self.values[0] = root;
            total = total.checked_add(self.count_from(1)?).ok_or(Error::Overflow)?;
        }
        Ok(total)
    }

    /// Calls `visit` with every complete embedding (values indexed by level)
    /// rooted in `roots`, in lexicographic order. Stops early and returns
    /// false once `visit` returns false.
    pub fn visit_roots<F>(&mut self, roots: Range<VertexId>, visit: &mut F) -> bool
    where
        F: FnMut(&[VertexId]) -> bool,
    {
        for root in roots {
            self.values[0] = root;
            if !self.visit_from(1, visit) {
                return false;
            }
        }
        true
    }

    fn count_from(&mut self, level: usize) -> Result<u64, Error> {
        self.build(level);
        let set = mem::take(&mut self.sets[level]);
        let last = level + 1 == self.values.len();
        let mut total = 0u64;
        let mut result = Ok(());
        for &c in &set {
            if !self.admissible(level, c) {
                continue;
            }
            if last {
                total += 1;
            } else {
                self.values[level] = c;
                match self.count_from(level + 1) {
                    Ok(sub) => match total.checked_add(sub) {
                        Some(t) => total = t,
                        None => {
                            result = Err(Error::Overflow);
                            break;
                        }
                    },
                    Err(e) => {
                        result = Err(e);
                        break;
                    }
                }
            }
        }
        self.sets[level] = set;
        result.map(|_| total)
    }

    fn visit_from<F>(&mut self, level: usize, visit: &mut F) -> bool
    where
        F: FnMut(&[VertexId]) -> bool,
    {
        self.build(level);
        let set = mem::take(&mut self.sets[level]);
        let last = level + 1 == self.values.len();
        let mut keep_going = true;
        for &c in &set {
            if !self.admissible(level, c) {
                continue;
            }
            self.values[level] = c;
            keep_going = if last { visit(&self.values) } else { self.visit_from(level + 1, visit) };
            if !keep_going {
                break;
            }
        }
        self.sets[level] = set;
        keep_going
    }

    /// Rejects a candidate equal to a subtracted level's vertex (it is never
    /// its own neighbour, so subtraction cannot remove it) and, without
    /// bounds, one failing the restriction check.
    #[inline]
    fn admissible(&self, level: usize, c: VertexId) -> bool {
        let spec = &self.plan.levels()[level];
        if spec.diff.iter().any(|&d| self.values[d] == c) {
            return false;
        }
        match (self.checked, spec.parent) {
            (true, Some(z)) => c < self.values[z],
            _ => true,
        }
    }

    fn build(&mut self, level: usize) {
        let spec = &self.plan.levels()[level];
        let bound = if self.bounded { spec.parent.map(|z| self.values[z]) } else { None };
        let g = self.graph;
        let mut out = mem::take(&mut self.sets[level]);
        out.clear();
        let first = g.neighbors(self.values[spec.intersect[0]]);
        match spec.intersect.get(1) {
            None => bounded_copy_into(first, bound, &mut out),
            Some(&second) => intersect_into(first, g.neighbors(self.values[second]), bound, &mut out),
        }
        for &j in spec.intersect.iter().skip(2) {
            self.scratch.clear();
            intersect_into(&out, g.neighbors(self.values[j]), bound, &mut self.scratch);
            mem::swap(&mut out, &mut self.scratch);
        }
        for &j in &spec.diff {
            self.scratch.clear();
            difference_into(&out, g.neighbors(self.values[j]), bound, &mut self.scratch);
            mem::swap(&mut out, &mut self.scratch);
        }
        self.sets[level] = out;
    }
}

/// Lists complete embeddings (values indexed by level) in lexicographic
/// order, stopping after `limit` if given.
pub fn enumerate(g: &Graph, plan: &Plan, limit: Option<usize>) -> Vec<Vec<VertexId>> {
    let mut out = Vec::new();
    if limit == Some(0) {
        return out;
    }
    let mut exec = Executor::new(g, plan);
    exec.visit_roots(0..g.n() as VertexId, &mut |emb| {
        out.push(emb.to_vec());
        limit.is_none_or(|l| out.len() < l)
    });
    out
}
