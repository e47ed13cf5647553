//! JSON form of a compiled [`Plan`].
//!
//! ```json
//! {"pattern": {"n": 3, "edges": [[0,1],[0,2],[1,2]]},
//!  "schedule": [0,1,2],
//!  "levels": [{"intersect": [], "diff": [], "parent": null}, ...],
//!  "options": {"use_restrictions": true, "use_bounds": true}}
//! ```
//!
//! Loading recompiles the plan from its pattern, schedule and parents and
//! rejects documents whose levels disagree.

use serde::{Deserialize, Serialize};
use symmine_core::{compile_plan, Pattern, Plan, PlanOptions, RestrictionMap, Schedule};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum PlanJsonError {
    #[error("malformed plan JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Core(#[from] symmine_core::Error),
    #[error("plan levels do not match its pattern and schedule")]
    Mismatch,
}

#[derive(Serialize, Deserialize, Debug, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct PatternDoc {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

#[derive(Serialize, Deserialize, Debug, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct LevelDoc {
    pub intersect: Vec<usize>,
    pub diff: Vec<usize>,
    pub parent: Option<usize>,
}

#[derive(Serialize, Deserialize, Debug, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct OptionsDoc {
    pub use_restrictions: bool,
    pub use_bounds: bool,
}

#[derive(Serialize, Deserialize, Debug, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct PlanDoc {
    pub pattern: PatternDoc,
    pub schedule: Vec<usize>,
    pub levels: Vec<LevelDoc>,
    pub options: OptionsDoc,
}

impl From<&Plan> for PlanDoc {
    fn from(plan: &Plan) -> Self {
        let p = plan.pattern();
        PlanDoc {
            pattern: PatternDoc { n: p.n(), edges: p.edges().into_iter().map(|(a, b)| [a, b]).collect() },
            schedule: plan.schedule().order().to_vec(),
            levels: plan
                .levels()
                .iter()
                .map(|l| LevelDoc { intersect: l.intersect.clone(), diff: l.diff.clone(), parent: l.parent })
                .collect(),
            options: OptionsDoc {
                use_restrictions: plan.options().use_restrictions,
                use_bounds: plan.options().use_bounds,
            },
        }
    }
}

impl TryFrom<PlanDoc> for Plan {
    type Error = PlanJsonError;

    fn try_from(doc: PlanDoc) -> Result<Plan, PlanJsonError> {
        let edges: Vec<(usize, usize)> = doc.pattern.edges.iter().map(|e| (e[0], e[1])).collect();
        let pattern = Pattern::new(doc.pattern.n, &edges)?;
        let schedule = Schedule::new(doc.schedule);
        if doc.levels.len() != pattern.n() {
            return Err(PlanJsonError::Mismatch);
        }
        let rm = RestrictionMap::from_parents(doc.levels.iter().map(|l| l.parent).collect())
            .ok_or(PlanJsonError::Mismatch)?;
        let options =
            PlanOptions { use_restrictions: doc.options.use_restrictions, use_bounds: doc.options.use_bounds };
        let plan = compile_plan(&pattern, &schedule, &rm, options)?;
        let same = plan
            .levels()
            .iter()
            .zip(&doc.levels)
            .all(|(l, d)| l.intersect == d.intersect && l.diff == d.diff && l.parent == d.parent);
        if !same {
            return Err(PlanJsonError::Mismatch);
        }
        Ok(plan)
    }
}

/// Pretty-printed JSON for `plan`.
pub fn to_json(plan: &Plan) -> String {
    serde_json::to_string_pretty(&PlanDoc::from(plan)).expect("plan documents always serialize")
}

/// Parses and validates a plan document.
pub fn from_json(text: &str) -> Result<Plan, PlanJsonError> {
    serde_json::from_str::<PlanDoc>(text)?.try_into()
}

#[cfg(test)]
mod tests {
    use super::*;
    use symmine_core::{automorphisms, generate_distinct, generate_restrictions, minimize_restrictions};

    fn rect_plan(options: PlanOptions) -> Plan {
        let p = Pattern::named("rectangle", None).unwrap();
        let s = Schedule::new(vec![0, 1, 2, 3]);
        let rm = minimize_restrictions(&s, &generate_restrictions(&p, &s, &automorphisms(&p)));
        compile_plan(&p, &s, &rm, options).unwrap()
    }

    #[test]
    fn field_names() {
        let v: serde_json::Value = serde_json::from_str(&to_json(&rect_plan(PlanOptions::default()))).unwrap();
        let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
        assert_eq!(keys, ["levels", "options", "pattern", "schedule"]);
        assert_eq!(v["levels"][3]["intersect"], serde_json::json!([1, 2]));
        assert_eq!(v["levels"][3]["diff"], serde_json::json!([0]));
        assert_eq!(v["levels"][3]["parent"], serde_json::json!(0));
        assert_eq!(v["levels"][0]["parent"], serde_json::Value::Null);
    }

    #[test]
    fn round_trip_all_distinct_schedules() {
        for name in ["house", "pentagon", "hourglass", "tailed_triangle"] {
            let p = Pattern::named(name, None).unwrap();
            let aut = automorphisms(&p);
            for s in generate_distinct(&p, &aut).schedules() {
                let rm = minimize_restrictions(s, &generate_restrictions(&p, s, &aut));
                for use_bounds in [true, false] {
                    let plan = compile_plan(&p, s, &rm, PlanOptions { use_restrictions: true, use_bounds }).unwrap();
                    let text = to_json(&plan);
                    let back = from_json(&text).unwrap();
                    assert_eq!(back, plan);
                    assert_eq!(to_json(&back), text);
                }
            }
        }
    }

    #[test]
    fn rejects_tampered_levels() {
        let text = to_json(&rect_plan(PlanOptions::default()));
        let mut doc: PlanDoc = serde_json::from_str(&text).unwrap();
        doc.levels[3].diff.clear();
        assert!(matches!(Plan::try_from(doc), Err(PlanJsonError::Mismatch)));
        assert!(matches!(from_json("{\"pattern\": 1}"), Err(PlanJsonError::Json(_))));
        let mut doc: PlanDoc = serde_json::from_str(&text).unwrap();
        doc.schedule = vec![0, 3, 1, 2];
        assert!(matches!(Plan::try_from(doc), Err(PlanJsonError::Core(_))));
    }
}
