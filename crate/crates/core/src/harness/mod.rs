//! Deterministic property suites over random instances, with replayable
//! counterexamples and machine-readable reports.

pub mod gen;
mod suites;

use std::collections::BTreeMap;
use std::sync::Arc;
use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{ArError, Result};
use crate::exactmat::Field;
use crate::quiver::{PathAlgebra, Quiver};
use crate::rep::{ExtClass, Rep, RepMorphism};

pub use gen::{trial_rng, GenConfig};
pub use suites::{check, describe, generate, SUITES};

/// A self-contained test instance: a quiver, named representations and
/// named auxiliary data (morphisms, cocycles, blocks).
#[derive(Clone, Debug)]
pub struct Instance {
    pub suite: String,
    pub alg: Arc<PathAlgebra>,
    pub field: Field,
    pub reps: BTreeMap<String, Rep>,
    pub data: BTreeMap<String, Value>,
}

impl Instance {
    pub fn new(suite: &str, alg: &Arc<PathAlgebra>, field: Field) -> Instance {
        Instance {
            suite: suite.into(),
            alg: alg.clone(),
            field,
            reps: BTreeMap::new(),
            data: BTreeMap::new(),
        }
    }

    pub fn with_rep(mut self, name: &str, r: &Rep) -> Instance {
        self.reps.insert(name.into(), r.clone());
        self
    }

    pub fn with_data(mut self, name: &str, v: Value) -> Instance {
        self.data.insert(name.into(), v);
        self
    }

    pub fn rep(&self, name: &str) -> Result<&Rep> {
        self.reps
            .get(name)
            .ok_or_else(|| ArError::InvalidInput(format!("instance lacks rep `{name}`")))
    }

    pub fn value(&self, name: &str) -> Result<&Value> {
        self.data
            .get(name)
            .ok_or_else(|| ArError::InvalidInput(format!("instance lacks `{name}`")))
    }

    pub fn morphism(&self, name: &str, dom: &Rep, cod: &Rep) -> Result<RepMorphism> {
        RepMorphism::from_json(dom, cod, self.value(name)?)
    }

    pub fn class(&self, name: &str, x: &Rep, y: &Rep) -> Result<ExtClass> {
        ExtClass::from_json(x, y, self.value(name)?)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "suite": self.suite,
            "field": self.field,
            "quiver": self.alg.quiver(),
            "reps": self.reps.iter().map(|(k, r)| (k.clone(), r.to_json())).collect::<serde_json::Map<_, _>>(),
            "data": self.data,
        })
    }

    pub fn from_json(v: &Value) -> Result<Instance> {
        let suite = v
            .get("suite")
            .and_then(Value::as_str)
            .unwrap_or("theorem")
            .to_string();
        let field = match v.get("field") {
            Some(f) => serde_json::from_value(f.clone())
                .map_err(|e| ArError::InvalidInput(format!("field: {e}")))?,
            None => Field::default(),
        };
        let q: Quiver = serde_json::from_value(v.get("quiver").cloned().unwrap_or(Value::Null))
            .map_err(|e| ArError::InvalidInput(format!("quiver: {e}")))?;
        let q = Quiver::new(q.vertex_count(), q.arrows().to_vec())?;
        let alg = Arc::new(PathAlgebra::new(&q));
        let mut reps = BTreeMap::new();
        if let Some(m) = v.get("reps").and_then(Value::as_object) {
            for (k, r) in m {
                reps.insert(k.clone(), Rep::from_json(&alg, r, field)?);
            }
        }
        let data = match v.get("data").and_then(Value::as_object) {
            Some(m) => m.iter().map(|(k, x)| (k.clone(), x.clone())).collect(),
            None => BTreeMap::new(),
        };
        Ok(Instance {
            suite,
            alg,
            field,
            reps,
            data,
        })
    }
}

/// Result of checking one instance.
#[derive(Clone, Debug, PartialEq)]
pub enum Outcome {
    Pass,
    Fail(String),
    Skip(String),
}

#[derive(Clone, Debug, Serialize)]
pub struct Counterexample {
    pub trial: usize,
    pub detail: String,
    pub instance: Value,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub statement: String,
    pub field: Field,
    pub seed: u64,
    pub trials: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub skip_reasons: BTreeMap<String, usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<u128>,
}

impl SuiteReport {
    pub fn ok(&self) -> bool {
        self.failed == 0
    }

    pub fn summary_line(&self) -> String {
        format!(
            "{} {:<14} {}/{} passed, {} skipped, {} failed",
            if self.ok() { "PASS" } else { "FAIL" },
            self.suite,
            self.passed,
            self.trials,
            self.skipped,
            self.failed
        )
    }
}

/// Checks one instance, turning errors into failures and size-budget
/// rejections into skips.
pub fn run_instance(inst: &Instance) -> Outcome {
    match check(inst) {
        Ok(o) => o,
        Err(ArError::TooLarge(_)) => Outcome::Skip("over the size budget".into()),
        Err(e) => Outcome::Fail(format!("error: {e}")),
    }
}

fn run_trial(name: &str, cfg: &GenConfig, trial: usize) -> (Outcome, Instance) {
    let mut rng = trial_rng(cfg.seed, name, trial);
    let inst = generate(name, &mut rng, cfg);
    (run_instance(&inst), inst)
}

#[cfg(feature = "parallel")]
fn run_all(name: &str, cfg: &GenConfig, jobs: Option<usize>) -> Vec<(Outcome, Instance)> {
    use rayon::prelude::*;
    let work = || {
        (0..cfg.trials)
            .into_par_iter()
            .map(|t| run_trial(name, cfg, t))
            .collect::<Vec<_>>()
    };
    match jobs {
        Some(j) => match rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build()
        {
            Ok(pool) => pool.install(work),
            Err(_) => work(),
        },
        None => work(),
    }
}

#[cfg(not(feature = "parallel"))]
fn run_all(name: &str, cfg: &GenConfig, _jobs: Option<usize>) -> Vec<(Outcome, Instance)> {
    (0..cfg.trials).map(|t| run_trial(name, cfg, t)).collect()
}

/// Runs `cfg.trials` trials of a suite. Results are collected by trial index,
/// so the report does not depend on `jobs`.
pub fn run_suite(
    name: &str,
    cfg: &GenConfig,
    jobs: Option<usize>,
    timing: bool,
) -> Result<SuiteReport> {
    let statement =
        describe(name).ok_or_else(|| ArError::InvalidInput(format!("unknown suite `{name}`")))?;
    let start = Instant::now();
    let results = run_all(name, cfg, jobs);
    let mut report = SuiteReport {
        suite: name.into(),
        statement: statement.into(),
        field: cfg.field,
        seed: cfg.seed,
        trials: cfg.trials,
        passed: 0,
        failed: 0,
        skipped: 0,
        skip_reasons: BTreeMap::new(),
        counterexample: None,
        wall_ms: None,
    };
    for (t, (o, inst)) in results.into_iter().enumerate() {
        match o {
            Outcome::Pass => report.passed += 1,
            Outcome::Skip(why) => {
                report.skipped += 1;
                *report.skip_reasons.entry(why).or_default() += 1;
            }
            Outcome::Fail(detail) => {
                report.failed += 1;
                if report.counterexample.is_none() {
                    report.counterexample = Some(Counterexample {
                        trial: t,
                        detail,
                        instance: inst.to_json(),
                    });
                }
            }
        }
    }
    if timing {
        report.wall_ms = Some(start.elapsed().as_millis());
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn instance_round_trip() {
        let cfg = GenConfig {
            trials: 1,
            ..GenConfig::default()
        };
        for name in SUITES.iter().map(|s| s.0) {
            let inst = generate(name, &mut trial_rng(3, name, 0), &cfg);
            let back = Instance::from_json(&inst.to_json()).unwrap();
            assert_eq!(back.to_json(), inst.to_json(), "{name}");
            assert_eq!(run_instance(&back), run_instance(&inst), "{name}");
        }
    }

    #[test]
    fn unknown_suite_is_an_error() {
        assert!(run_suite("nope", &GenConfig::default(), None, false).is_err());
    }

    #[test]
    fn reports_do_not_depend_on_jobs() {
        let cfg = GenConfig {
            trials: 6,
            max_vertices: 4,
            max_arrows: 5,
            max_dim: 3,
            ..GenConfig::default()
        };
        let a = serde_json::to_string(&run_suite("ar-dim", &cfg, Some(1), false).unwrap()).unwrap();
        let b = serde_json::to_string(&run_suite("ar-dim", &cfg, Some(3), false).unwrap()).unwrap();
        assert_eq!(a, b);
    }
}
