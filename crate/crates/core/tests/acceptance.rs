//! Acceptance criteria AC1-AC10. Prints one PASS/FAIL line per criterion and
//! exits nonzero when any criterion fails.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use arform::harness::{generate, run_instance, trial_rng, GenConfig, Outcome};
use arform::pairing::SignCalibration;
use arform::quiver::{PathAlgebra, Quiver};
use arform::rep::{ExtSpace, Rep};
use arform::translate::{t_presentation, tau_rep};
use arform::Field;

const FP: Field = Field::Prime(10007);
const Q: Field = Field::Rational;

#[derive(Default)]
struct Tally {
    passed: usize,
    failed: usize,
    skipped: usize,
    reasons: BTreeMap<String, usize>,
    first_failure: Option<String>,
}

impl Tally {
    fn record(&mut self, trial: usize, o: Outcome) {
        match o {
            Outcome::Pass => self.passed += 1,
            Outcome::Fail(why) => {
                self.failed += 1;
                self.first_failure.get_or_insert(format!("trial {trial}: {why}"));
            }
            Outcome::Skip(why) => {
                self.skipped += 1;
                *self.reasons.entry(why).or_default() += 1;
            }
        }
    }

    fn ok(&self, target: usize) -> bool {
        self.failed == 0 && self.passed >= target
    }

    fn show(&self, label: &str, field: Field) -> String {
        let mut s = format!("{label} over {} {} passed", field_name(field), self.passed);
        if self.skipped > 0 {
            let total = self.passed + self.failed + self.skipped;
            let why: Vec<String> = self.reasons.iter().map(|(k, v)| format!("{v} {k}")).collect();
            s += &format!(
                ", {} of {total} skipped ({:.1}%: {})",
                self.skipped,
                100.0 * self.skipped as f64 / total as f64,
                why.join("; ")
            );
        }
        if let Some(f) = &self.first_failure {
            s += &format!(", {} failed, first at {f}", self.failed);
        }
        s
    }
}

fn field_name(f: Field) -> String {
    match f {
        Field::Rational => "Q".into(),
        Field::Prime(p) => format!("F_{p}"),
    }
}

fn config(field: Field) -> GenConfig {
    GenConfig { field, ..GenConfig::default() }
}

/// Runs trials of `suite` until `target` instances were decided; skipped ones do
/// not count, and at most `4 · target` trials are drawn.
fn run_until(suite: &str, field: Field, target: usize) -> Tally {
    let cfg = config(field);
    let mut t = Tally::default();
    let mut trial = 0;
    while t.passed + t.failed < target && trial < 4 * target {
        let inst = generate(suite, &mut trial_rng(cfg.seed, suite, trial), &cfg);
        t.record(trial, run_instance(&inst));
        trial += 1;
    }
    t
}

struct Verdict {
    ok: bool,
    detail: String,
}

fn suites(parts: &[(&str, &str, Field, usize)]) -> Verdict {
    let mut ok = true;
    let mut detail = Vec::new();
    for &(label, suite, field, target) in parts {
        let t = run_until(suite, field, target);
        ok &= t.ok(target);
        detail.push(t.show(label, field));
    }
    Verdict { ok, detail: detail.join("; ") }
}

/// AC1 and AC2 check the same (quiver, X, Y) triples.
fn ar_dims_and_perfectness() -> (Verdict, Verdict) {
    let (mut d1, mut d2) = (Vec::new(), Vec::new());
    let (mut ok1, mut ok2) = (true, true);
    for field in [FP, Q] {
        let cfg = config(field);
        let (mut a, mut b) = (Tally::default(), Tally::default());
        for trial in 0..500 {
            let mut inst = generate("ar-dim", &mut trial_rng(cfg.seed, "ar-dim", trial), &cfg);
            a.record(trial, run_instance(&inst));
            inst.suite = "perfect".into();
            b.record(trial, run_instance(&inst));
        }
        ok1 &= a.ok(500);
        ok2 &= b.ok(500);
        d1.push(a.show("dim Ext1 = dim Hom(τ⁻Y,X) = dim Hom(Y,τX)", field));
        d2.push(b.show("rank Gram = dim Ext1", field));
    }
    (Verdict { ok: ok1, detail: d1.join("; ") }, Verdict { ok: ok2, detail: d2.join("; ") })
}

fn calibration() -> Verdict {
    let mut eps = Vec::new();
    for f in [FP, Q] {
        match SignCalibration::calibrate(f) {
            Ok(c) => eps.push(c.epsilon),
            Err(e) => return Verdict { ok: false, detail: format!("calibration failed: {e}") },
        }
    }
    Verdict { ok: eps.windows(2).all(|w| w[0] == w[1]), detail: format!("ε = {:?} on the A3 instance", eps) }
}

fn desk_values() -> Verdict {
    let mut bad = Vec::new();
    let a2 = Arc::new(PathAlgebra::new(&Quiver::linear(2)));
    let kr = Arc::new(PathAlgebra::new(&Quiver::kronecker(2)));
    for field in [FP, Q] {
        let (s1, s2) = (Rep::simple(&a2, field, 0), Rep::simple(&a2, field, 1));
        let e = ExtSpace::new(&s1, &s2).map(|e| e.dim());
        if e != Ok(1) {
            bad.push(format!("A2 dim Ext1(S1,S2) = {e:?}"));
        }
        let tm = t_presentation(&s2).map(|p| p.tau_minus);
        if tm.as_ref().map(|r| r == &s1) != Ok(true) {
            bad.push(format!("A2 τ⁻S2 = {:?}", tm.map(|r| r.dims().to_vec())));
        }
        let t = tau_rep(&s1).map(|p| p.tau.rep);
        if t.as_ref().map(|r| r == &s2) != Ok(true) {
            bad.push(format!("A2 τS1 = {:?}", t.map(|r| r.dims().to_vec())));
        }
        let (k1, k2) = (Rep::simple(&kr, field, 0), Rep::simple(&kr, field, 1));
        let e = ExtSpace::new(&k1, &k2).map(|e| e.dim());
        if e != Ok(2) {
            bad.push(format!("Kronecker dim Ext1(S1,S2) = {e:?}"));
        }
        let d = t_presentation(&Rep::projective(&kr, field, 1)).map(|p| p.tau_minus.dims().to_vec());
        if d != Ok(vec![2, 3]) {
            bad.push(format!("Kronecker dim τ⁻P2 = {d:?}"));
        }
    }
    Verdict {
        ok: bad.is_empty(),
        detail: if bad.is_empty() {
            "A2: Ext1(S1,S2) = 1, τ⁻S2 = S1, τS1 = S2; Kronecker: Ext1(S1,S2) = 2, dim τ⁻P2 = (2,3); over F_10007 and Q".into()
        } else {
            bad.join("; ")
        },
    }
}

fn merge(a: Verdict, b: Verdict) -> Verdict {
    Verdict { ok: a.ok && b.ok, detail: format!("{}; {}", a.detail, b.detail) }
}

fn report(id: &str, title: &str, v: &Verdict, secs: f64) -> bool {
    println!("{id:<4} {} {title}: {} [{secs:.1}s]", if v.ok { "PASS" } else { "FAIL" }, v.detail);
    v.ok
}

fn main() -> ExitCode {
    let start = Instant::now();
    let mut all = true;

    let t = Instant::now();
    let (ac1, ac2) = ar_dims_and_perfectness();
    let secs = t.elapsed().as_secs_f64();
    all &= report("AC1", "AR formula dimensions", &ac1, secs);
    all &= report("AC2", "perfectness of {-,-}' (same instances as AC1)", &ac2, secs);

    let rest: [(&str, &str, fn() -> Verdict); 8] = [
        ("AC3", "bifunctoriality", || suites(&[("random composing morphisms", "bifunctorial", FP, 200)])),
        ("AC4", "Ev lemma", || suites(&[("Ev(h̃g) = Ev(g̃h) and Ev(j_X f) = tr f", "ev-lemma", FP, 200)])),
        ("AC5", "translate identity {ζ,τ⁻f}' = -tr(fg)", || {
            merge(calibration(), suites(&[("admissible trace data", "signs", FP, 500)]))
        }),
        ("AC6", "route A = route B", || suites(&[("admissible X", "routes", FP, 200)])),
        ("AC7", "reference = closed-form pairing", || {
            merge(calibration(), suites(&[("random instances", "fast", FP, 500)]))
        }),
        ("AC8", "{ζ,f}' = {τ⁻ζ,τ⁻f}'", || {
            suites(&[("admissible X", "theorem", FP, 500), ("admissible X", "theorem", Q, 100)])
        }),
        ("AC9", "structural sanities", || {
            suites(&[
                ("τP_i = 0 and τ⁻I_i = 0 on 50 quivers", "kills", FP, 50),
                ("Euler identity", "euler", FP, 500),
                ("resolution exactness and proj_to_inj squares", "resolutions", FP, 200),
                ("j′ nullity", "jprime", FP, 100),
            ])
        }),
        ("AC10", "desk-scale values", desk_values),
    ];
    for (id, title, f) in rest {
        let t = Instant::now();
        let v = f();
        all &= report(id, title, &v, t.elapsed().as_secs_f64());
    }
    println!(
        "acceptance: {} in {:.1}s",
        if all { "all criteria pass" } else { "FAILURES" },
        start.elapsed().as_secs_f64()
    );
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
