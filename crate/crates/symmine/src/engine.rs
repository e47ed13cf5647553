//! Multi-threaded plan execution.
//!
//! Level-0 vertices are split into contiguous blocks, one per worker. Each
//! worker owns an [`Executor`] with its own buffers and counter; the per-worker
//! totals are summed once at the end, so the result does not depend on the
//! worker count.

use std::thread;
use std::time::{Duration, Instant};

use symmine_core::motif::{canonical_code, connected_patterns, motif_name};
use symmine_core::{
    compile_plan, select_schedule, CostModelParams, Error, Executor, Graph, Pattern, Plan, PlanOptions, VertexId,
};

/// Outcome of a parallel count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountResult {
    /// Completed embeddings.
    pub count: u64,
    /// Count contributed by each worker, in block order.
    pub per_worker: Vec<u64>,
    /// Wall-clock time of the execution phase.
    pub wall_time: Duration,
}

/// Splits `0..n` into `workers` contiguous blocks whose sizes differ by at most one.
fn blocks(n: usize, workers: usize) -> Vec<std::ops::Range<VertexId>> {
    let base = n / workers;
    let extra = n % workers;
    let mut start = 0;
    (0..workers)
        .map(|w| {
            let len = base + usize::from(w < extra);
            let r = start as VertexId..(start + len) as VertexId;
            start += len;
            r
        })
        .collect()
}

/// Counts embeddings of `plan` in `g` using `workers` threads (at least one).
pub fn count(g: &Graph, plan: &Plan, workers: usize) -> Result<CountResult, Error> {
    let workers = workers.max(1);
    let start = Instant::now();
    let ranges = blocks(g.n(), workers);
    let per_worker: Vec<Result<u64, Error>> = if workers == 1 {
        vec![Executor::new(g, plan).count_roots(ranges[0].clone())]
    } else {
        thread::scope(|scope| {
            let handles: Vec<_> = ranges
                .into_iter()
                .map(|roots| scope.spawn(move || Executor::new(g, plan).count_roots(roots)))
                .collect();
            handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
        })
    };
    let per_worker = per_worker.into_iter().collect::<Result<Vec<u64>, Error>>()?;
    let count = per_worker.iter().try_fold(0u64, |acc, &c| acc.checked_add(c)).ok_or(Error::Overflow)?;
    Ok(CountResult { count, per_worker, wall_time: start.elapsed() })
}

/// Selects a schedule for `p`, compiles it with full restrictions and bounds.
pub fn compile_best(p: &Pattern, params: &CostModelParams, options: PlanOptions) -> Plan {
    let pick = select_schedule(p, params);
    compile_plan(p, &pick.schedule, &pick.restrictions, options).expect("selected schedule is valid")
}

/// One row of a motif census.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MotifCount {
    /// Canonical representative.
    pub pattern: Pattern,
    /// Canonical adjacency bitstring.
    pub code: String,
    /// Well-known name, if any.
    pub name: Option<&'static str>,
    /// Induced instances in the graph.
    pub count: u64,
}

/// Counts induced instances of every connected `k`-vertex pattern, `3 <= k <= 5`.
/// Each pattern gets its own selected schedule and runs independently.
pub fn motif_counts(g: &Graph, k: usize, params: &CostModelParams, workers: usize) -> Result<Vec<MotifCount>, Error> {
    if !(3..=5).contains(&k) {
        return Err(Error::PatternSize(k));
    }
    connected_patterns(k)
        .into_iter()
        .map(|pattern| {
            let plan = compile_best(&pattern, params, PlanOptions::default());
            let count = count(g, &plan, workers)?.count;
            Ok(MotifCount { code: canonical_code(&pattern), name: motif_name(&pattern), pattern, count })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: u32) -> Graph {
        Graph::from_edges(n as usize, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap().0
    }

    #[test]
    fn block_partition() {
        assert_eq!(blocks(10, 3), vec![0..4, 4..7, 7..10]);
        assert_eq!(blocks(2, 4), vec![0..1, 1..2, 2..2, 2..2]);
        assert_eq!(blocks(0, 2), vec![0..0, 0..0]);
    }

    #[test]
    fn workers_agree() {
        let g = complete(9);
        let plan = compile_best(
            &Pattern::named("triangle", None).unwrap(),
            &CostModelParams::default(),
            PlanOptions::default(),
        );
        for w in [1, 2, 8, 20] {
            let r = count(&g, &plan, w).unwrap();
            assert_eq!(r.count, 84);
            assert_eq!(r.per_worker.len(), w);
            assert_eq!(r.per_worker.iter().sum::<u64>(), 84);
        }
        assert_eq!(count(&g, &plan, 0).unwrap().count, 84);
    }

    #[test]
    fn motifs_k4_graph() {
        let rows = motif_counts(&complete(4), 3, &CostModelParams::default(), 2).unwrap();
        let pairs: Vec<_> = rows.iter().map(|r| (r.name.unwrap(), r.count)).collect();
        assert_eq!(pairs, vec![("wedge", 0), ("triangle", 4)]);
        assert!(motif_counts(&complete(4), 6, &CostModelParams::default(), 1).is_err());
    }
}
