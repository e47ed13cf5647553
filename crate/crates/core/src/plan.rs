//! Compilation of a schedule into per-level set operations.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use crate::pattern::Pattern;
use crate::restriction::RestrictionMap;
use crate::schedule::Schedule;
use crate::Error;

/// Compilation switches.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PlanOptions {
    /// Apply symmetry-breaking restrictions.
    pub use_restrictions: bool,
    /// Fold each restriction into its level's set operations as an ID bound
    /// instead of checking it per candidate.
    pub use_bounds: bool,
}

impl Default for PlanOptions {
    fn default() -> Self {
        PlanOptions { use_restrictions: true, use_bounds: true }
    }
}

/// Candidate recipe for one loop level.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PlanLevel {
    /// Earlier levels whose neighbour lists are intersected.
    pub intersect: Vec<usize>,
    /// Earlier levels whose neighbour lists are subtracted.
    pub diff: Vec<usize>,
    /// Earlier level whose value bounds this level from above.
    pub parent: Option<usize>,
}

/// A compiled nested-loop plan.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Plan {
    pattern: Pattern,
    schedule: Schedule,
    restrictions: RestrictionMap,
    levels: Vec<PlanLevel>,
    options: PlanOptions,
}

/// Compiles schedule `s` of `p` into a plan. With restrictions disabled `rm`
/// is ignored and every parent is `None`.
pub fn compile_plan(p: &Pattern, s: &Schedule, rm: &RestrictionMap, options: PlanOptions) -> Result<Plan, Error> {
    if !s.is_valid_for(p) {
        return Err(Error::InvalidSchedule);
    }
    let restrictions = if options.use_restrictions {
        if rm.len() != s.len() {
            return Err(Error::InvalidPlan("restriction map length differs from schedule"));
        }
        rm.clone()
    } else {
        RestrictionMap::unrestricted(s.len())
    };
    let levels = (0..s.len())
        .map(|i| {
            let label = s.at(i);
            let (intersect, diff) = (0..i).partition(|&j| p.has_edge(s.at(j), label));
            PlanLevel { intersect, diff, parent: restrictions.parent(i) }
        })
        .collect();
    Ok(Plan { pattern: p.clone(), schedule: s.clone(), restrictions, levels, options })
}

impl Plan {
    /// Pattern the plan matches.
    pub fn pattern(&self) -> &Pattern {
        &self.pattern
    }

    /// Discovery order.
    pub fn schedule(&self) -> &Schedule {
        &self.schedule
    }

    /// Restriction parents actually compiled in.
    pub fn restrictions(&self) -> &RestrictionMap {
        &self.restrictions
    }

    /// Loop levels, outermost first.
    pub fn levels(&self) -> &[PlanLevel] {
        &self.levels
    }

    /// Compilation switches.
    pub fn options(&self) -> PlanOptions {
        self.options
    }

    /// True when restriction checks are folded into set bounds.
    pub fn uses_bounds(&self) -> bool {
        self.options.use_restrictions && self.options.use_bounds
    }

    /// Nested-loop pseudo-code, one loop per level with at most one check.
    pub fn pseudo_code(&self) -> String {
        let mut out = String::new();
        let mut indent = String::new();
        for (i, level) in self.levels.iter().enumerate() {
            let label = self.schedule.at(i);
            if i == 0 {
                let _ = writeln!(out, "{indent}for v0 in V:  # label {label}");
            } else {
                let mut expr = String::new();
                for (k, j) in level.intersect.iter().enumerate() {
                    if k > 0 {
                        expr.push_str(" ∩ ");
                    }
                    let _ = write!(expr, "N(v{j})");
                }
                for j in &level.diff {
                    let _ = write!(expr, " - N(v{j})");
                }
                let bound = match (level.parent, self.uses_bounds()) {
                    (Some(z), true) => alloc::format!(" bounded by v{z}"),
                    _ => String::new(),
                };
                let _ = writeln!(out, "{indent}for v{i} in {expr}{bound}:  # label {label}");
                if let Some(z) = level.parent {
                    indent.push_str("    ");
                    let _ = writeln!(
                        out,
                        "{indent}if v{i} >= v{z}: {}",
                        if self.uses_bounds() { "break" } else { "continue" }
                    );
                    indent.truncate(indent.len() - 4);
                }
            }
            indent.push_str("    ");
        }
        let _ = writeln!(out, "{indent}count += 1");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn rect_plan(options: PlanOptions) -> Plan {
        let p = Pattern::named("rectangle", None).unwrap();
        let s = Schedule::new(vec![0, 1, 2, 3]);
        let rm = RestrictionMap::from_parents(vec![None, Some(0), Some(1), Some(0)]).unwrap();
        compile_plan(&p, &s, &rm, options).unwrap()
    }

    #[test]
    fn rectangle_levels() {
        let plan = rect_plan(PlanOptions::default());
        let want = vec![
            PlanLevel { intersect: vec![], diff: vec![], parent: None },
            PlanLevel { intersect: vec![0], diff: vec![], parent: Some(0) },
            PlanLevel { intersect: vec![0], diff: vec![1], parent: Some(1) },
            PlanLevel { intersect: vec![1, 2], diff: vec![0], parent: Some(0) },
        ];
        assert_eq!(plan.levels(), want.as_slice());
        assert!(plan.pseudo_code().contains("for v3 in N(v1) ∩ N(v2) - N(v0) bounded by v0"));
    }

    #[test]
    fn triangle_levels() {
        let p = Pattern::named("triangle", None).unwrap();
        let s = Schedule::new(vec![0, 1, 2]);
        let rm = RestrictionMap::from_parents(vec![None, Some(0), Some(1)]).unwrap();
        let plan = compile_plan(&p, &s, &rm, PlanOptions::default()).unwrap();
        assert_eq!(plan.levels()[1], PlanLevel { intersect: vec![0], diff: vec![], parent: Some(0) });
        assert_eq!(plan.levels()[2], PlanLevel { intersect: vec![0, 1], diff: vec![], parent: Some(1) });
    }

    #[test]
    fn no_restrictions_clears_parents() {
        let plan = rect_plan(PlanOptions { use_restrictions: false, use_bounds: true });
        assert!(plan.levels().iter().all(|l| l.parent.is_none()));
        assert_eq!(plan.levels()[3].intersect, vec![1, 2]);
        assert!(!plan.uses_bounds());
    }

    #[test]
    fn invalid_schedule_rejected() {
        let p = Pattern::named("rectangle", None).unwrap();
        let s = Schedule::new(vec![0, 3, 1, 2]);
        assert_eq!(
            compile_plan(&p, &s, &RestrictionMap::unrestricted(4), PlanOptions::default()),
            Err(Error::InvalidSchedule)
        );
    }

    #[test]
    fn every_level_has_an_intersect_source() {
        let plan = rect_plan(PlanOptions::default());
        for (i, level) in plan.levels().iter().enumerate().skip(1) {
            assert!(!level.intersect.is_empty());
            assert_eq!(level.intersect.len() + level.diff.len(), i);
        }
    }
}
