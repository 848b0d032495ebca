//! WebAssembly bindings for a static demo page: translates of a
//! representation, Hom/Ext dimensions, and random checks of the τ⁻-invariance
//! of the AR pairing. Inputs and outputs are JSON strings.

use arform::harness::{generate, trial_rng, GenConfig, Instance};
use arform::pairing::{verify_tau_invariance, TheoremData};
use arform::rep::{euler_form, has_injective_summand, ExtSpace, HomSpace};
use arform::translate::{t_presentation, tau_rep};
use arform::{ArError, Field};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

fn parse(text: &str, field: &str) -> Result<Instance, ArError> {
    let field = Field::parse(field)?;
    let mut v: Value = serde_json::from_str(text).map_err(|e| ArError::InvalidInput(e.to_string()))?;
    if let Some(obj) = v.as_object_mut() {
        obj.insert("field".into(), json!(field));
    }
    Instance::from_json(&v)
}

/// `τ⁻X` and `τX` for the rep `x` of an instance.
pub fn translates(text: &str, field: &str) -> Result<Value, ArError> {
    let inst = parse(text, field)?;
    let x = inst.rep("x")?;
    let tm = t_presentation(x)?.tau_minus;
    let t = tau_rep(x)?.tau.rep;
    Ok(json!({"x": x.dims(), "tau_minus": tm.to_json(), "tau": t.to_json()}))
}

/// `dim Hom(X,Y)`, `dim Ext¹(X,Y)` and the Euler form.
pub fn hom_ext(text: &str, field: &str) -> Result<Value, ArError> {
    let inst = parse(text, field)?;
    let (x, y) = (inst.rep("x")?, inst.rep("y")?);
    Ok(json!({
        "hom": HomSpace::new(x, y)?.dim(),
        "ext": ExtSpace::new(x, y)?.dim(),
        "euler": euler_form(x.quiver(), x.dims(), y.dims()),
    }))
}

/// Draws a random theorem instance within the given caps and compares both sides.
pub fn theorem_trial(seed: u64, trial: usize, field: &str, max_vertices: usize, max_dim: usize) -> Result<Value, ArError> {
    let cfg = GenConfig {
        seed,
        max_vertices: max_vertices.max(1),
        max_arrows: 2 * max_vertices,
        max_dim: max_dim.max(1),
        field: Field::parse(field)?,
        trials: 1,
    };
    let inst = generate("theorem", &mut trial_rng(seed, "theorem", trial), &cfg);
    let (x, y) = (inst.rep("x")?, inst.rep("y")?);
    let mut out = json!({"instance": inst.to_json()});
    if has_injective_summand(x) {
        out["skipped"] = json!("X has an injective summand");
        return Ok(out);
    }
    let d = TheoremData::new(x, y)?;
    let z = inst.class("zeta", x, y)?;
    let f = inst.morphism("f", &d.py.tau_minus, x)?;
    out["verdict"] = json!(verify_tau_invariance(&z, &f, &d)?);
    Ok(out)
}

fn to_js(r: Result<Value, ArError>) -> Result<String, JsValue> {
    r.map(|v| v.to_string()).map_err(|e| JsValue::from_str(&e.to_string()))
}

#[wasm_bindgen(js_name = translates)]
pub fn translates_js(text: &str, field: &str) -> Result<String, JsValue> {
    to_js(translates(text, field))
}

#[wasm_bindgen(js_name = homExt)]
pub fn hom_ext_js(text: &str, field: &str) -> Result<String, JsValue> {
    to_js(hom_ext(text, field))
}

#[wasm_bindgen(js_name = theoremTrial)]
pub fn theorem_trial_js(seed: u32, trial: u32, field: &str, max_vertices: u32, max_dim: u32) -> Result<String, JsValue> {
    to_js(theorem_trial(seed as u64, trial as usize, field, max_vertices as usize, max_dim as usize))
}
