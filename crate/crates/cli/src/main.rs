use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use arform::harness::{
    self, run_suite, trial_rng, GenConfig, Instance, Outcome, SuiteReport, SUITES,
};
use arform::pairing::{
    pairing_gram, pairing_prime, pairing_prime_fast, verify_tau_invariance, SignCalibration,
    TheoremData,
};
use arform::rep::{euler_form, has_injective_summand, ExtSpace, HomSpace};
use arform::translate::{t_presentation, tau_rep};
use arform::{ArError, Field};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

/// Exact checks of the Auslander-Reiten formula and the τ⁻-invariance of
/// the AR pairing on random quiver representations.
#[derive(Parser, Debug)]
#[command(name = "arform", version)]
struct Cli {
    #[command(flatten)]
    opts: Opts,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Debug, Clone)]
struct Opts {
    /// `q` or `fp:<p>`
    #[arg(long, global = true, default_value = "fp:10007", value_parser = parse_field)]
    field: Field,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, default_value_t = 500)]
    trials: usize,
    #[arg(long, global = true, default_value_t = 6)]
    max_vertices: usize,
    #[arg(long, global = true, default_value_t = 8)]
    max_arrows: usize,
    #[arg(long, global = true, default_value_t = 5)]
    max_dim: usize,
    /// worker threads (defaults to all cores)
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// write the machine-readable report here
    #[arg(long, global = true)]
    json: Option<PathBuf>,
    /// include wall time in reports
    #[arg(long, global = true)]
    timing: bool,
    /// where failing suites write their counterexample
    #[arg(long, global = true, default_value = ".")]
    replay_dir: PathBuf,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Run every suite
    Selfcheck,
    /// Run one suite
    Suite { name: String },
    /// Check {ζ,f}' = {τ⁻ζ,τ⁻f}' on an instance file
    Theorem { file: PathBuf },
    /// Gram matrix of {-,-}' for reps `x`, `y`; the value on `zeta`, `f` when present
    Pairing { file: PathBuf },
    /// τ⁻X and τX for rep `x`
    Tau { file: PathBuf },
    /// Hom and Ext¹ between reps `x` and `y`
    Ext { file: PathBuf },
    /// Emit random instances
    Gen {
        #[arg(long, default_value = "theorem")]
        suite: String,
        #[arg(long, default_value_t = 0)]
        trial: usize,
        #[arg(long, default_value_t = 1)]
        count: usize,
    },
    /// Re-run an instance or the counterexample of a report
    Replay { file: PathBuf },
}

fn parse_field(s: &str) -> Result<Field, String> {
    Field::parse(s).map_err(|e| e.to_string())
}

enum Failure {
    Violated,
    Usage(String),
}

impl From<ArError> for Failure {
    fn from(e: ArError) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcomes = Result<(), Failure>;

fn config(o: &Opts) -> Result<GenConfig, Failure> {
    if o.max_vertices == 0 || o.max_dim == 0 {
        return Err(Failure::Usage("caps must be positive".into()));
    }
    Ok(GenConfig {
        seed: o.seed,
        max_vertices: o.max_vertices,
        max_arrows: o.max_arrows,
        max_dim: o.max_dim,
        field: o.field,
        trials: o.trials,
    })
}

fn read_json(path: &Path) -> Result<Value, Failure> {
    let text =
        fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn read_instance(path: &Path, field: Field) -> Result<Instance, Failure> {
    let mut v = read_json(path)?;
    if let Some(obj) = v.as_object_mut() {
        obj.entry("field").or_insert_with(|| json!(field));
    }
    Ok(Instance::from_json(&v)?)
}

fn write_json(o: &Opts, v: &Value) -> Outcomes {
    if let Some(p) = &o.json {
        let text = serde_json::to_string_pretty(v).expect("serializable");
        fs::write(p, text + "\n").map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))?;
    }
    Ok(())
}

fn emit_counterexample(o: &Opts, r: &SuiteReport) {
    if let Some(c) = &r.counterexample {
        let path = o
            .replay_dir
            .join(format!("{}-counterexample.json", r.suite));
        let body = json!({"report": r, "instance": c.instance});
        match fs::write(
            &path,
            serde_json::to_string_pretty(&body).expect("serializable"),
        ) {
            Ok(()) => eprintln!("counterexample written to {}", path.display()),
            Err(e) => eprintln!("could not write {}: {e}", path.display()),
        }
    }
}

fn run_suites(o: &Opts, names: &[&str]) -> Outcomes {
    let cfg = config(o)?;
    let mut reports = Vec::new();
    for name in names {
        let r = run_suite(name, &cfg, o.jobs, o.timing)?;
        println!("{}", r.summary_line());
        emit_counterexample(o, &r);
        reports.push(r);
    }
    let all_ok = reports.iter().all(SuiteReport::ok);
    let v = if reports.len() == 1 {
        json!(reports[0])
    } else {
        json!(reports)
    };
    write_json(o, &v)?;
    if all_ok {
        Ok(())
    } else {
        Err(Failure::Violated)
    }
}

fn cmd_theorem(o: &Opts, file: &Path) -> Outcomes {
    let inst = read_instance(file, o.field)?;
    let (x, y) = (inst.rep("x")?, inst.rep("y")?);
    if has_injective_summand(x) {
        println!("SKIPPED: X has a nonzero injective summand, Hom(DΛ, X) ≠ 0");
        return write_json(o, &json!({"skipped": true}));
    }
    let d = TheoremData::new(x, y)?;
    let z = inst.class("zeta", x, y)?;
    let f = inst.morphism("f", &d.py.tau_minus, x)?;
    let v = match verify_tau_invariance(&z, &f, &d) {
        Err(ArError::TooLarge(why)) => {
            println!("SKIPPED: {why}; try --field fp:<p>");
            return write_json(o, &json!({"skipped": true, "reason": why}));
        }
        r => r?,
    };
    println!("{{ζ,f}}'      = {}", v.lhs);
    println!("{{τ⁻ζ,τ⁻f}}'  = {}", v.rhs);
    println!("{}", if v.equal { "EQUAL" } else { "NOT EQUAL" });
    write_json(o, &json!(v))?;
    if v.equal {
        Ok(())
    } else {
        Err(Failure::Violated)
    }
}

fn cmd_pairing(o: &Opts, file: &Path) -> Outcomes {
    let inst = read_instance(file, o.field)?;
    let (x, y) = (inst.rep("x")?, inst.rep("y")?);
    let g = pairing_gram(x, y)?;
    println!(
        "Gram matrix ({} x {}), rank {}:",
        g.ext_basis.len(),
        g.hom_basis.len(),
        g.rank()
    );
    println!("{}", g.values);
    let mut out = json!({
        "ext_dim": g.ext_basis.len(),
        "hom_dim": g.hom_basis.len(),
        "rank": g.rank(),
        "perfect": g.is_perfect(),
        "gram": g.values.to_json_flat(),
    });
    if inst.data.contains_key("zeta") && inst.data.contains_key("f") {
        let py = t_presentation(y)?;
        let z = inst.class("zeta", x, y)?;
        let f = inst.morphism("f", &py.tau_minus, x)?;
        let cal = SignCalibration::calibrate(inst.field)?;
        let reference = pairing_prime(&z, &f, &py)?;
        let fast = pairing_prime_fast(&z, &f, &py, &cal)?;
        println!(
            "{{ζ,f}}' = {reference} (closed form {fast}, ε = {})",
            cal.epsilon
        );
        out["value"] = json!(reference.to_string());
        out["closed_form"] = json!(fast.to_string());
        out["calibration"] = json!(cal);
    }
    write_json(o, &out)?;
    if g.is_perfect() {
        Ok(())
    } else {
        Err(Failure::Violated)
    }
}

fn cmd_tau(o: &Opts, file: &Path) -> Outcomes {
    let inst = read_instance(file, o.field)?;
    let x = inst.rep("x")?;
    let tm = t_presentation(x)?.tau_minus;
    let t = tau_rep(x)?.tau.rep;
    println!("dim X   = {:?}", x.dims());
    println!("dim τ⁻X = {:?}", tm.dims());
    println!("dim τX  = {:?}", t.dims());
    write_json(o, &json!({"tau_minus": tm.to_json(), "tau": t.to_json()}))
}

fn cmd_ext(o: &Opts, file: &Path) -> Outcomes {
    let inst = read_instance(file, o.field)?;
    let (x, y) = (inst.rep("x")?, inst.rep("y")?);
    let hom = HomSpace::new(x, y)?;
    let ext = ExtSpace::new(x, y)?;
    let euler = euler_form(x.quiver(), x.dims(), y.dims());
    let ok = hom.dim() as i64 - ext.dim() as i64 == euler;
    println!("dim Hom(X,Y)  = {}", hom.dim());
    println!("dim Ext1(X,Y) = {}", ext.dim());
    println!("<dim X, dim Y> = {euler}");
    write_json(
        o,
        &json!({
            "hom_dim": hom.dim(),
            "ext_dim": ext.dim(),
            "euler": euler,
            "ext_basis": ext.basis().iter().map(|z| z.to_json()).collect::<Vec<_>>(),
        }),
    )?;
    if ok {
        Ok(())
    } else {
        Err(Failure::Violated)
    }
}

fn cmd_gen(o: &Opts, suite: &str, trial: usize, count: usize) -> Outcomes {
    if harness::describe(suite).is_none() {
        return Err(Failure::Usage(format!("unknown suite `{suite}`")));
    }
    let cfg = config(o)?;
    let items: Vec<Value> = (trial..trial + count)
        .map(|t| harness::generate(suite, &mut trial_rng(cfg.seed, suite, t), &cfg).to_json())
        .collect();
    let v = if items.len() == 1 {
        items[0].clone()
    } else {
        Value::Array(items)
    };
    println!(
        "{}",
        serde_json::to_string_pretty(&v).expect("serializable")
    );
    write_json(o, &v)
}

fn cmd_replay(o: &Opts, file: &Path) -> Outcomes {
    let v = read_json(file)?;
    let body = v.get("instance").cloned().unwrap_or(v);
    let inst = Instance::from_json(&body)?;
    let outcome = match harness::check(&inst) {
        Ok(o) => o,
        Err(e @ (ArError::Inconsistent(_) | ArError::NotExact(_))) => Outcome::Fail(format!("error: {e}")),
        Err(ArError::TooLarge(why)) => Outcome::Skip(why),
        Err(e) => return Err(e.into()),
    };
    match outcome {
        Outcome::Pass => {
            println!("PASS {}", inst.suite);
            Ok(())
        }
        Outcome::Skip(why) => {
            println!("SKIPPED {}: {why}", inst.suite);
            Ok(())
        }
        Outcome::Fail(why) => {
            println!("FAIL {}: {why}", inst.suite);
            let _ = write_json(o, &json!({"suite": inst.suite, "detail": why}));
            Err(Failure::Violated)
        }
    }
}

fn exit_code(res: Outcomes) -> ExitCode {
    match res {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Violated) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let o = &cli.opts;
    let res = match &cli.cmd {
        Cmd::Selfcheck => run_suites(o, &SUITES.iter().map(|s| s.0).collect::<Vec<_>>()),
        Cmd::Suite { name } => {
            if harness::describe(name).is_none() {
                Err(Failure::Usage(format!(
                    "unknown suite `{name}`; known: {}",
                    SUITES.iter().map(|s| s.0).collect::<Vec<_>>().join(", ")
                )))
            } else {
                run_suites(o, &[name.as_str()])
            }
        }
        Cmd::Theorem { file } => cmd_theorem(o, file),
        Cmd::Pairing { file } => cmd_pairing(o, file),
        Cmd::Tau { file } => cmd_tau(o, file),
        Cmd::Ext { file } => cmd_ext(o, file),
        Cmd::Gen {
            suite,
            trial,
            count,
        } => cmd_gen(o, suite, *trial, *count),
        Cmd::Replay { file } => cmd_replay(o, file),
    };
    exit_code(res)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failures_map_to_exit_codes() {
        assert_eq!(exit_code(Ok(())), ExitCode::SUCCESS);
        assert_eq!(exit_code(Err(Failure::Violated)), ExitCode::from(1));
        assert_eq!(exit_code(Err(Failure::Usage("x".into()))), ExitCode::from(2));
    }

    #[test]
    fn field_flag_parses() {
        assert_eq!(parse_field("q"), Ok(Field::Rational));
        assert_eq!(parse_field("fp:7"), Ok(Field::Prime(7)));
        assert!(parse_field("fp:8").is_err());
    }
}
