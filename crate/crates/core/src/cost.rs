//! Probabilistic cost model for ranking distinct schedules.
//!
//! The data graph is modelled as a uniform random graph with `n` vertices and
//! edge probability `p`. A loop whose candidates come from `k1 + 1` neighbour
//! lists intersected and `k2` lists subtracted runs `n p^(k1+1) (1-p)^k2`
//! iterations. Restrictions are modelled as independent uniform IDs: the
//! fraction of prefixes surviving all checks up to level `i` is the product
//! of `1 / z_t` for `t <= i`, where `z_t` counts the labels forced at or below
//! the label at position `t`.

use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::pattern::{automorphisms, Pattern};
use crate::restriction::{generate_restrictions, minimize_restrictions, PartialOrder, RestrictionMap};
use crate::schedule::{generate_distinct, Schedule};
use crate::Error;

/// Model graph used to score schedules.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct CostModelParams {
    n_model: f64,
    d_model: f64,
    p: f64,
}

impl CostModelParams {
    /// Model graph with `n_model` vertices and average degree `d_model`.
    /// The edge probability is `d_model / (n_model - 1)`.
    pub fn new(n_model: f64, d_model: f64) -> Result<Self, Error> {
        if !(n_model.is_finite() && d_model.is_finite()) || n_model < 2.0 {
            return Err(Error::CostParams);
        }
        let p = d_model / (n_model - 1.0);
        if !(p > 0.0 && p < 1.0) {
            return Err(Error::CostParams);
        }
        Ok(CostModelParams { n_model, d_model, p })
    }

    /// Model vertex count.
    pub fn n_model(&self) -> f64 {
        self.n_model
    }

    /// Model average degree.
    pub fn d_model(&self) -> f64 {
        self.d_model
    }

    /// Edge probability.
    pub fn p(&self) -> f64 {
        self.p
    }
}

impl Default for CostModelParams {
    fn default() -> Self {
        CostModelParams::new(1000.0, 5.0).expect("valid defaults")
    }
}

/// Per-loop estimate.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct LevelEstimate {
    /// Intersect sources minus one (0 at level 0).
    pub k1: usize,
    /// Difference sources.
    pub k2: usize,
    /// Expected candidate-set size.
    pub size: f64,
    /// Labels transitively constrained at or below this level's label, itself included.
    pub z: usize,
    /// Probability that every check through this level passes.
    pub cum_prob: f64,
}

/// Estimated cost of a schedule.
#[derive(Clone, PartialEq, Debug)]
pub struct ScheduleCost {
    /// Sum of per-loop work.
    pub total: f64,
    /// One entry per level.
    pub per_level: Vec<LevelEstimate>,
}

/// A scored distinct schedule with everything needed to compile it.
#[derive(Clone, Debug)]
pub struct Selection {
    /// Discovery order.
    pub schedule: Schedule,
    /// Full restriction relation set.
    pub order: PartialOrder,
    /// One-parent-per-level form of `order`.
    pub restrictions: RestrictionMap,
    /// Model cost.
    pub cost: ScheduleCost,
}

/// `(z, cum_prob)` for every schedule position.
pub fn restriction_probabilities(s: &Schedule, order: &PartialOrder) -> Vec<(usize, f64)> {
    let below = order.closure_below(s.len());
    let mut cum = 1.0;
    s.order()
        .iter()
        .enumerate()
        .map(|(i, &label)| {
            let z = 1 + s.order()[i + 1..].iter().filter(|&&l| below[label] >> l & 1 == 1).count();
            cum /= z as f64;
            (z, cum)
        })
        .collect()
}

/// Intersect and difference source counts for each level of `s`.
pub(crate) fn source_counts(p: &Pattern, s: &Schedule) -> Vec<(usize, usize)> {
    (0..s.len())
        .map(|i| {
            let label = s.at(i);
            let hits = s.order()[..i].iter().filter(|&&prev| p.has_edge(prev, label)).count();
            (hits, i - hits)
        })
        .collect()
}

fn powu(base: f64, exp: usize) -> f64 {
    (0..exp).fold(1.0, |acc, _| acc * base)
}

/// Scores schedule `s` with restrictions `order` under `params`.
///
/// Expected iterations of loop `i` are the surviving fraction times the
/// product of candidate-set sizes through `i`. Each iteration of a non-inner
/// loop builds the next level's set by scanning one neighbour list per
/// source, costed at `n p` per list; the innermost loop costs one unit.
pub fn estimate_cost(p: &Pattern, s: &Schedule, order: &PartialOrder, params: &CostModelParams) -> ScheduleCost {
    let (n, prob) = (params.n_model, params.p);
    let sources = source_counts(p, s);
    let probs = restriction_probabilities(s, order);
    let mut per_level = Vec::with_capacity(s.len());
    let mut trips = 1.0;
    let mut total = 0.0;
    for (i, (&(hits, misses), &(z, cum_prob))) in sources.iter().zip(&probs).enumerate() {
        let (k1, k2, size) = if i == 0 {
            (0, 0, n)
        } else {
            let k1 = hits - 1;
            (k1, misses, n * powu(prob, k1 + 1) * powu(1.0 - prob, misses))
        };
        trips *= size;
        let work = match sources.get(i + 1) {
            Some(&(h, m)) => (h + m) as f64 * n * prob,
            None => 1.0,
        };
        total += cum_prob * trips * work;
        per_level.push(LevelEstimate { k1, k2, size, z, cum_prob });
    }
    ScheduleCost { total, per_level }
}

/// Scores every distinct schedule of `p`, in explorer order.
pub fn rank_schedules(p: &Pattern, params: &CostModelParams) -> Vec<Selection> {
    let aut = automorphisms(p);
    generate_distinct(p, &aut)
        .into_schedules()
        .into_iter()
        .map(|schedule| {
            let order = generate_restrictions(p, &schedule, &aut);
            let restrictions = minimize_restrictions(&schedule, &order);
            let cost = estimate_cost(p, &schedule, &order, params);
            Selection { schedule, order, restrictions, cost }
        })
        .collect()
}

/// The cheapest distinct schedule; ties go to the lexicographically smaller schedule.
pub fn select_schedule(p: &Pattern, params: &CostModelParams) -> Selection {
    rank_schedules(p, params)
        .into_iter()
        .min_by(|a, b| match a.cost.total.total_cmp(&b.cost.total) {
            Ordering::Equal => a.schedule.cmp(&b.schedule),
            other => other,
        })
        .expect("a connected pattern has at least one valid schedule")
}
