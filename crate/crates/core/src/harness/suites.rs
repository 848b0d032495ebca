use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use super::gen::{
    gen_admissible_rep, gen_algebra, gen_class, gen_extension_of, gen_morphism, gen_rep,
    random_matrix, random_scalar, trial_rng, GenConfig,
};
use super::{Instance, Outcome};
use crate::error::{ArError, Result};
use crate::exactmat::{Field, Matrix, Scalar};
use crate::pairing::{
    admissible_trace_data, ev_symmetry, ev_trace, jprime_nullity, pairing_gram_with, pairing_prime,
    pairing_prime_fast, same_translated_class, verify_tau_invariance, verify_translate_identity,
    SignCalibration, TheoremData,
};
use crate::rep::{
    coboundary_entries, euler_form, has_injective_summand, has_projective_summand, parse_matrix,
    proj_to_inj, std_resolutions, ExtSpace, HomSpace, Rep, RepMorphism,
};
use crate::translate::{
    t_presentation, t_prime_presentation, tau_inverse_class, tau_inverse_class_via_ses,
    tau_inverse_mor, tau_rep,
};

/// Past this many coboundary entries, route classes are compared through the pairing.
const COBOUNDARY_BUDGET: usize = 2_000_000;

/// Suite names with the statement each one checks.
pub const SUITES: &[(&str, &str)] = &[
    ("euler", "dim Hom(X,Y) - dim Ext1(X,Y) = <dim X, dim Y>"),
    ("ar-dim", "dim Ext1(X,Y) = dim Hom(τ⁻Y,X) = dim Hom(Y,τX)"),
    (
        "perfect",
        "the Gram matrix of {-,-}' has rank dim Ext1(X,Y)",
    ),
    (
        "bifunctorial",
        "{ζx, f}' = {ζ, xf}' and {yζ, g}' = {ζ, g τ⁻(y)}'",
    ),
    ("ev-lemma", "Ev(h̃g) = Ev(g̃h) and Ev(j_X f) = tr(f)"),
    ("signs", "{ζ, τ⁻f}' = -tr(fg) for ζ = g·𝕋_X"),
    (
        "routes",
        "τ⁻ζ by (g⊗b, 0)·𝕋′_X equals τ⁻ of the sequence of ζ",
    ),
    ("fast", "Ev(g̃ f b_*) = ε Σ_a tr(g_a h_a)"),
    ("theorem", "{ζ, f}' = {τ⁻ζ, τ⁻f}' when Hom(DΛ, X) = 0"),
    ("kills", "τP_i = 0 and τ⁻I_i = 0"),
    (
        "resolutions",
        "exactness of 𝕡_X, 𝕀_X, 𝕋_X, 𝕋′_X and commuting comparison squares",
    ),
    ("jprime", "(i_X⊗1, 1⊗_Ac̃⊗1) j′ = 0"),
    (
        "tau-inverse",
        "functoriality of τ⁻, Coxeter dimensions, ττ⁻X ≅ X and τ⁻τX ≅ X",
    ),
];

pub fn describe(name: &str) -> Option<&'static str> {
    SUITES.iter().find(|s| s.0 == name).map(|s| s.1)
}

fn blocks_json(ms: &[Matrix]) -> Value {
    Value::Array(ms.iter().map(|m| Value::Array(m.to_json_flat())).collect())
}

fn parse_blocks(v: &Value, field: Field, shapes: &[(usize, usize)]) -> Result<Vec<Matrix>> {
    let arr = v
        .as_array()
        .ok_or_else(|| ArError::InvalidInput("blocks must be an array".into()))?;
    if arr.len() != shapes.len() {
        return Err(ArError::DimensionMismatch(format!(
            "{} blocks expected",
            shapes.len()
        )));
    }
    arr.iter()
        .zip(shapes)
        .map(|(m, &(r, c))| parse_matrix(field, r, c, m))
        .collect()
}

fn arrow_shapes(from: &Rep, to: &Rep) -> Vec<(usize, usize)> {
    from.quiver()
        .arrows()
        .iter()
        .map(|&(s, t)| (to.dim(t), from.dim(s)))
        .collect()
}

fn coarrow_shapes(from: &Rep, to: &Rep) -> Vec<(usize, usize)> {
    from.quiver()
        .arrows()
        .iter()
        .map(|&(s, t)| (to.dim(s), from.dim(t)))
        .collect()
}

fn vertex_shapes(from: &Rep, to: &Rep) -> Vec<(usize, usize)> {
    (0..from.dims().len())
        .map(|v| (to.dim(v), from.dim(v)))
        .collect()
}

pub fn generate(name: &str, rng: &mut ChaCha8Rng, cfg: &GenConfig) -> Instance {
    let alg = gen_algebra(rng, cfg);
    let inst = Instance::new(name, &alg, cfg.field);
    match name {
        "euler" | "ar-dim" | "perfect" => {
            let x = gen_rep(rng, &alg, cfg);
            let y = gen_rep(rng, &alg, cfg);
            inst.with_rep("x", &x).with_rep("y", &y)
        }
        "bifunctorial" => {
            let x = gen_rep(rng, &alg, cfg);
            let y = gen_rep(rng, &alg, cfg);
            let xp = gen_extension_of(rng, &x, cfg);
            let ypp = gen_extension_of(rng, &y, cfg);
            let z = gen_class(rng, &x, &y);
            let ty = t_presentation(&y).expect("presentation").tau_minus;
            let typp = t_presentation(&ypp).expect("presentation").tau_minus;
            let xm = gen_morphism(rng, &xp, &x);
            let fp = gen_morphism(rng, &ty, &xp);
            let ym = gen_morphism(rng, &y, &ypp);
            let g = gen_morphism(rng, &typp, &x);
            inst.with_rep("x", &x)
                .with_rep("y", &y)
                .with_rep("x1", &xp)
                .with_rep("y2", &ypp)
                .with_data("zeta", z.to_json())
                .with_data("xmap", xm.to_json())
                .with_data("f1", fp.to_json())
                .with_data("ymap", ym.to_json())
                .with_data("g", g.to_json())
        }
        "ev-lemma" => {
            let x = gen_rep(rng, &alg, cfg);
            let y = gen_rep(rng, &alg, cfg);
            let g: Vec<Matrix> = arrow_shapes(&x, &y)
                .iter()
                .map(|&(r, c)| random_matrix(rng, cfg.field, r, c))
                .collect();
            let h: Vec<Matrix> = coarrow_shapes(&y, &x)
                .iter()
                .map(|&(r, c)| random_matrix(rng, cfg.field, r, c))
                .collect();
            let f: Vec<Matrix> = vertex_shapes(&x, &x)
                .iter()
                .map(|&(r, c)| random_matrix(rng, cfg.field, r, c))
                .collect();
            inst.with_rep("x", &x)
                .with_rep("y", &y)
                .with_data("g", blocks_json(&g))
                .with_data("h", blocks_json(&h))
                .with_data("f", blocks_json(&f))
        }
        "signs" => {
            let x = gen_rep(rng, &alg, cfg);
            let y = if rng.gen_bool(0.5) {
                gen_extension_of(rng, &x, cfg)
            } else {
                gen_rep(rng, &alg, cfg)
            };
            let f = gen_morphism(rng, &y, &x);
            let px = t_presentation(&x).expect("presentation");
            let basis = admissible_trace_data(&px, &y).expect("admissible data");
            let mut g: Vec<Matrix> = vertex_shapes(&x, &y)
                .iter()
                .map(|&(r, c)| Matrix::zeros(cfg.field, r, c))
                .collect();
            for b in &basis {
                let c = random_scalar(rng, cfg.field);
                for (gi, bi) in g.iter_mut().zip(b) {
                    *gi = gi.add(&bi.scale(&c));
                }
            }
            inst.with_rep("x", &x)
                .with_rep("y", &y)
                .with_data("f", f.to_json())
                .with_data("g", blocks_json(&g))
        }
        "routes" => {
            let x = gen_admissible_rep(rng, &alg, cfg);
            let y = gen_rep(rng, &alg, cfg);
            let z = gen_class(rng, &x, &y);
            inst.with_rep("x", &x)
                .with_rep("y", &y)
                .with_data("zeta", z.to_json())
        }
        "theorem" | "fast" => {
            let x = if name == "theorem" {
                gen_admissible_rep(rng, &alg, cfg)
            } else {
                gen_rep(rng, &alg, cfg)
            };
            let y = gen_rep(rng, &alg, cfg);
            let z = gen_class(rng, &x, &y);
            let ty = t_presentation(&y).expect("presentation").tau_minus;
            let f = gen_morphism(rng, &ty, &x);
            inst.with_rep("x", &x)
                .with_rep("y", &y)
                .with_data("zeta", z.to_json())
                .with_data("f", f.to_json())
        }
        "kills" => inst,
        "resolutions" => {
            let x = gen_rep(rng, &alg, cfg);
            let y = gen_rep(rng, &alg, cfg);
            let z = gen_class(rng, &x, &y);
            inst.with_rep("x", &x)
                .with_rep("y", &y)
                .with_data("zeta", z.to_json())
        }
        "jprime" => {
            let x = gen_rep(rng, &alg, cfg);
            inst.with_rep("x", &x)
        }
        "tau-inverse" => {
            let x = gen_rep(rng, &alg, cfg);
            let y = gen_rep(rng, &alg, cfg);
            let f = gen_morphism(rng, &x, &y);
            let g = gen_morphism(rng, &y, &x);
            inst.with_rep("x", &x)
                .with_rep("y", &y)
                .with_data("f", f.to_json())
                .with_data("g", g.to_json())
        }
        _ => inst,
    }
}

fn verdict(ok: bool, detail: impl FnOnce() -> String) -> Outcome {
    if ok {
        Outcome::Pass
    } else {
        Outcome::Fail(detail())
    }
}

/// `dim τ⁻X = −dim X · C⁻ᵀ C` with `C_ij` the number of paths `i -> j`.
pub fn coxeter_inverse(x: &Rep) -> Vec<i64> {
    let alg = x.alg();
    let n = alg.quiver().vertex_count();
    let field = Field::Rational;
    let mut c = Matrix::zeros(field, n, n);
    for p in alg.paths() {
        c.add_i64(p.source, p.target, 1);
    }
    let ct_inv = c.transpose().inverse().expect("unitriangular up to order");
    let d = Matrix::from_i64(
        field,
        1,
        n,
        &x.dims().iter().map(|&v| v as i64).collect::<Vec<_>>(),
    );
    let r = d.mul(&ct_inv).mul(&c).neg();
    (0..n)
        .map(|j| r.get(0, j).to_string().parse::<i64>().expect("integral"))
        .collect()
}

/// Looks for an isomorphism among random elements of `Hom(a, b)`.
pub fn isomorphic(a: &Rep, b: &Rep) -> bool {
    if a.dims() != b.dims() {
        return false;
    }
    let Ok(h) = HomSpace::new(a, b) else {
        return false;
    };
    let mut rng = trial_rng(0, "iso", 0);
    (0..32).any(|_| {
        let coeffs: Vec<Scalar> = (0..h.dim())
            .map(|_| random_scalar(&mut rng, a.field()))
            .collect();
        let f = h.combination(&coeffs);
        f.maps().iter().all(|m| m.rank() == m.rows())
    })
}

pub fn check(inst: &Instance) -> Result<Outcome> {
    let field = inst.field;
    match inst.suite.as_str() {
        "euler" => {
            let (x, y) = (inst.rep("x")?, inst.rep("y")?);
            let hom = HomSpace::new(x, y)?.dim() as i64;
            let ext = ExtSpace::new(x, y)?.dim() as i64;
            let e = euler_form(x.quiver(), x.dims(), y.dims());
            Ok(verdict(hom - ext == e, || {
                format!("hom {hom}, ext {ext}, euler {e}")
            }))
        }
        "ar-dim" => {
            let (x, y) = (inst.rep("x")?, inst.rep("y")?);
            let ext = ExtSpace::new(x, y)?.dim();
            let py = t_presentation(y)?;
            let h1 = HomSpace::new(&py.tau_minus, x)?.dim();
            let h2 = HomSpace::new(y, &tau_rep(x)?.tau.rep)?.dim();
            Ok(verdict(ext == h1 && h1 == h2, || {
                format!("ext {ext}, hom(τ⁻Y,X) {h1}, hom(Y,τX) {h2}")
            }))
        }
        "perfect" => {
            let (x, y) = (inst.rep("x")?, inst.rep("y")?);
            let py = t_presentation(y)?;
            let g = pairing_gram_with(x, y, &py)?;
            Ok(verdict(g.is_perfect(), || {
                format!(
                    "rank {} of a {}x{} Gram matrix",
                    g.rank(),
                    g.ext_basis.len(),
                    g.hom_basis.len()
                )
            }))
        }
        "bifunctorial" => {
            let (x, y, x1, y2) = (
                inst.rep("x")?,
                inst.rep("y")?,
                inst.rep("x1")?,
                inst.rep("y2")?,
            );
            let py = t_presentation(y)?;
            let py2 = t_presentation(y2)?;
            let z = inst.class("zeta", x, y)?;
            let xm = inst.morphism("xmap", x1, x)?;
            let f1 = inst.morphism("f1", &py.tau_minus, x1)?;
            let ym = inst.morphism("ymap", y, y2)?;
            let g = inst.morphism("g", &py2.tau_minus, x)?;
            let a1 = pairing_prime(&z.pullback(&xm), &f1, &py)?;
            let b1 = pairing_prime(&z, &xm.compose(&f1), &py)?;
            let a2 = pairing_prime(&z.pushout(&ym), &g, &py2)?;
            let b2 = pairing_prime(&z, &g.compose(&tau_inverse_mor(&ym, &py, &py2)), &py)?;
            Ok(verdict(a1 == b1 && a2 == b2, || {
                format!("{a1} vs {b1}; {a2} vs {b2}")
            }))
        }
        "ev-lemma" => {
            let (x, y) = (inst.rep("x")?, inst.rep("y")?);
            let g = parse_blocks(inst.value("g")?, field, &arrow_shapes(x, y))?;
            let h = parse_blocks(inst.value("h")?, field, &coarrow_shapes(y, x))?;
            let f = parse_blocks(inst.value("f")?, field, &vertex_shapes(x, x))?;
            let (l1, r1) = ev_symmetry(x, y, &g, &h)?;
            let (l2, r2) = ev_trace(x, &f)?;
            Ok(verdict(l1 == r1 && l2 == r2, || {
                format!("{l1} vs {r1}; {l2} vs {r2}")
            }))
        }
        "signs" => {
            let (x, y) = (inst.rep("x")?, inst.rep("y")?);
            let f = inst.morphism("f", y, x)?;
            let g = parse_blocks(inst.value("g")?, field, &vertex_shapes(x, y))?;
            let px = t_presentation(x)?;
            let py = t_presentation(y)?;
            let v = verify_translate_identity(&f, &g, &px, &py)?;
            Ok(verdict(v.equal, || format!("{} vs {}", v.lhs, v.rhs)))
        }
        "routes" => {
            let (x, y) = (inst.rep("x")?, inst.rep("y")?);
            if has_injective_summand(x) {
                return Ok(Outcome::Skip("X has an injective summand".into()));
            }
            let z = inst.class("zeta", x, y)?;
            let px = t_presentation(x)?;
            let py = t_presentation(y)?;
            let b = tau_inverse_class(&z, &px, &py)?;
            let a = tau_inverse_class_via_ses(&z)?.retarget(&px.tau_minus, &py.tau_minus);
            let same = if coboundary_entries(&px.tau_minus, &py.tau_minus) <= COBOUNDARY_BUDGET {
                ExtSpace::new(&px.tau_minus, &py.tau_minus)?.same_class(&a, &b)
            } else {
                same_translated_class(&a, &b, &px, &py)?
            };
            Ok(verdict(same, || "route classes differ".into()))
        }
        "fast" => {
            let (x, y) = (inst.rep("x")?, inst.rep("y")?);
            let py = t_presentation(y)?;
            let z = inst.class("zeta", x, y)?;
            let f = inst.morphism("f", &py.tau_minus, x)?;
            let cal = SignCalibration::calibrate(field)?;
            let a = pairing_prime(&z, &f, &py)?;
            let b = pairing_prime_fast(&z, &f, &py, &cal)?;
            Ok(verdict(a == b, || {
                format!("{a} vs {b} with ε = {}", cal.epsilon)
            }))
        }
        "theorem" => {
            let (x, y) = (inst.rep("x")?, inst.rep("y")?);
            if has_injective_summand(x) {
                return Ok(Outcome::Skip("X has an injective summand".into()));
            }
            let d = TheoremData::new(x, y)?;
            let z = inst.class("zeta", x, y)?;
            let f = inst.morphism("f", &d.py.tau_minus, x)?;
            let v = verify_tau_invariance(&z, &f, &d)?;
            Ok(verdict(v.equal, || format!("{} vs {}", v.lhs, v.rhs)))
        }
        "kills" => {
            let n = inst.alg.quiver().vertex_count();
            for i in 0..n {
                if !tau_rep(&Rep::projective(&inst.alg, field, i))?
                    .tau
                    .rep
                    .is_zero()
                {
                    return Ok(Outcome::Fail(format!("τP_{i} ≠ 0")));
                }
                if !t_presentation(&Rep::injective(&inst.alg, field, i))?
                    .tau_minus
                    .is_zero()
                {
                    return Ok(Outcome::Fail(format!("τ⁻I_{i} ≠ 0")));
                }
            }
            Ok(Outcome::Pass)
        }
        "resolutions" => {
            let (x, y) = (inst.rep("x")?, inst.rep("y")?);
            let z = inst.class("zeta", x, y)?;
            let (rx, ry) = (std_resolutions(x), std_resolutions(y));
            if !(rx.is_exact() && ry.is_exact()) {
                return Ok(Outcome::Fail("standard resolution not exact".into()));
            }
            if !proj_to_inj(&z, &rx, &ry).commutes(&rx, &ry) {
                return Ok(Outcome::Fail("g·𝕡_X = 𝕀_Y·g̃ squares do not commute".into()));
            }
            let px = t_presentation(x)?;
            let tp = t_prime_presentation(&px)?;
            Ok(verdict(
                px.is_valid() && tp.square_commutes(&px) && tp.is_exact(),
                || "𝕋 or 𝕋′ check failed".into(),
            ))
        }
        "jprime" => {
            let x = inst.rep("x")?;
            Ok(verdict(jprime_nullity(&t_presentation(x)?)?, || {
                "nonzero composite".into()
            }))
        }
        "tau-inverse" => {
            let (x, y) = (inst.rep("x")?, inst.rep("y")?);
            let f = inst.morphism("f", x, y)?;
            let g = inst.morphism("g", y, x)?;
            let (px, py) = (t_presentation(x)?, t_presentation(y)?);
            let lhs = tau_inverse_mor(&g.compose(&f), &px, &px);
            let rhs = tau_inverse_mor(&g, &py, &px).compose(&tau_inverse_mor(&f, &px, &py));
            if lhs != rhs
                || tau_inverse_mor(&RepMorphism::identity(x), &px, &px)
                    != RepMorphism::identity(&px.tau_minus)
            {
                return Ok(Outcome::Fail("τ⁻ is not functorial".into()));
            }
            if !has_injective_summand(x) {
                let want = coxeter_inverse(x);
                let got: Vec<i64> = px.tau_minus.dims().iter().map(|&d| d as i64).collect();
                if want != got {
                    return Ok(Outcome::Fail(format!(
                        "dim τ⁻X = {got:?}, Coxeter gives {want:?}"
                    )));
                }
                if !isomorphic(x, &tau_rep(&px.tau_minus)?.tau.rep) {
                    return Ok(Outcome::Fail("ττ⁻X ≇ X".into()));
                }
            }
            if !has_projective_summand(x) {
                let tx = tau_rep(x)?.tau.rep;
                if !isomorphic(x, &t_presentation(&tx)?.tau_minus) {
                    return Ok(Outcome::Fail("τ⁻τX ≇ X".into()));
                }
            }
            Ok(Outcome::Pass)
        }
        other => Err(ArError::InvalidInput(format!("unknown suite `{other}`"))),
    }
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::quiver::{PathAlgebra, Quiver};

    #[test]
    fn coxeter_on_kronecker() {
        let a = Arc::new(PathAlgebra::new(&Quiver::kronecker(2)));
        assert_eq!(
            coxeter_inverse(&Rep::projective(&a, Field::Rational, 1)),
            vec![2, 3]
        );
    }

    #[test]
    fn every_suite_passes_a_few_small_trials() {
        let cfg = GenConfig {
            trials: 3,
            max_vertices: 3,
            max_arrows: 3,
            max_dim: 2,
            ..GenConfig::default()
        };
        for (name, _) in SUITES {
            let r = super::super::run_suite(name, &cfg, Some(1), false).unwrap();
            assert!(r.ok(), "{}", serde_json::to_string(&r).unwrap());
        }
    }
}
