//! Seeded generators for quivers, representations, morphisms and classes.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exactmat::{Field, Matrix, Scalar};
use crate::quiver::{PathAlgebra, Quiver};
use crate::rep::{has_injective_summand, ExtClass, ExtSpace, HomSpace, Rep, RepMorphism};

/// Generation caps and the run length of a suite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenConfig {
    pub seed: u64,
    pub max_vertices: usize,
    pub max_arrows: usize,
    pub max_dim: usize,
    pub field: Field,
    pub trials: usize,
}

impl Default for GenConfig {
    fn default() -> Self {
        GenConfig {
            seed: 0,
            max_vertices: 6,
            max_arrows: 8,
            max_dim: 5,
            field: Field::default(),
            trials: 500,
        }
    }
}

fn fnv1a(s: &str) -> u64 {
    s.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| {
        (h ^ b as u64).wrapping_mul(0x0100_0000_01b3)
    })
}

/// The ChaCha8 stream of one trial: the 256-bit key is `seed ‖ trial ‖ fnv1a(suite) ‖ 0`.
pub fn trial_rng(seed: u64, suite: &str, trial: usize) -> ChaCha8Rng {
    let mut key = [0u8; 32];
    key[..8].copy_from_slice(&seed.to_le_bytes());
    key[8..16].copy_from_slice(&(trial as u64).to_le_bytes());
    key[16..24].copy_from_slice(&fnv1a(suite).to_le_bytes());
    ChaCha8Rng::from_seed(key)
}

pub fn random_scalar<R: Rng>(rng: &mut R, field: Field) -> Scalar {
    match field {
        Field::Prime(p) => Scalar::from_i64(field, rng.gen_range(0..p) as i64),
        Field::Rational => Scalar::from_i64(field, rng.gen_range(-2..=2)),
    }
}

pub fn random_matrix<R: Rng>(rng: &mut R, field: Field, rows: usize, cols: usize) -> Matrix {
    let mut m = Matrix::zeros(field, rows, cols);
    for r in 0..rows {
        for c in 0..cols {
            m.set(r, c, &random_scalar(rng, field));
        }
    }
    m
}

/// Arrows go from lower to higher index before a random relabeling.
pub fn gen_quiver<R: Rng>(rng: &mut R, cfg: &GenConfig) -> Quiver {
    let n = rng.gen_range(1..=cfg.max_vertices.max(1));
    let m = if n == 1 {
        0
    } else {
        rng.gen_range(0..=cfg.max_arrows)
    };
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let arrows = (0..m)
        .map(|_| {
            let i = rng.gen_range(0..n - 1);
            let j = rng.gen_range(i + 1..n);
            (perm[i], perm[j])
        })
        .collect();
    Quiver::new(n, arrows).expect("generated quiver is acyclic")
}

pub fn gen_algebra<R: Rng>(rng: &mut R, cfg: &GenConfig) -> Arc<PathAlgebra> {
    Arc::new(PathAlgebra::new(&gen_quiver(rng, cfg)))
}

pub fn gen_rep<R: Rng>(rng: &mut R, alg: &Arc<PathAlgebra>, cfg: &GenConfig) -> Rep {
    let q = alg.quiver();
    let dims: Vec<usize> = (0..q.vertex_count())
        .map(|_| rng.gen_range(0..=cfg.max_dim))
        .collect();
    let mats = q
        .arrows()
        .iter()
        .map(|&(s, t)| random_matrix(rng, cfg.field, dims[t], dims[s]))
        .collect();
    Rep::new(alg, cfg.field, dims, mats).expect("generated shapes")
}

/// A representation without injective summands when one is found within ten draws.
pub fn gen_admissible_rep<R: Rng>(rng: &mut R, alg: &Arc<PathAlgebra>, cfg: &GenConfig) -> Rep {
    let mut x = gen_rep(rng, alg, cfg);
    for _ in 1..10 {
        if !has_injective_summand(&x) {
            break;
        }
        x = gen_rep(rng, alg, cfg);
    }
    x
}

/// A uniformly random element of the span of the Hom-space basis.
pub fn gen_morphism<R: Rng>(rng: &mut R, x: &Rep, y: &Rep) -> RepMorphism {
    let h = HomSpace::new(x, y).expect("same category");
    let coeffs: Vec<Scalar> = (0..h.dim())
        .map(|_| random_scalar(rng, x.field()))
        .collect();
    h.combination(&coeffs)
}

/// A random cocycle in canonical form.
pub fn gen_class<R: Rng>(rng: &mut R, x: &Rep, y: &Rep) -> ExtClass {
    let q = x.quiver();
    let blocks = q
        .arrows()
        .iter()
        .map(|&(s, t)| random_matrix(rng, x.field(), y.dim(t), x.dim(s)))
        .collect();
    let z = ExtClass::new(x, y, blocks).expect("shapes");
    ExtSpace::new(x, y).expect("same category").standardize(&z)
}

/// `X ⊕ R` for a fresh random `R`, so that maps to and from `X` are plentiful.
pub fn gen_extension_of<R: Rng>(rng: &mut R, x: &Rep, cfg: &GenConfig) -> Rep {
    let r = gen_rep(rng, x.alg(), cfg);
    Rep::direct_sum(&[x.clone(), r]).expect("same category").sum
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_and_acyclic() {
        let cfg = GenConfig::default();
        for t in 0..1000 {
            let a = gen_quiver(&mut trial_rng(7, "x", t), &cfg);
            let b = gen_quiver(&mut trial_rng(7, "x", t), &cfg);
            assert_eq!(a, b);
            assert!(a.topological_order().is_some());
            assert!(a.vertex_count() <= 6 && a.arrow_count() <= 8);
        }
        let one = GenConfig {
            max_vertices: 1,
            ..cfg
        };
        let q = gen_quiver(&mut trial_rng(0, "x", 0), &one);
        assert_eq!((q.vertex_count(), q.arrow_count()), (1, 0));
    }

    #[test]
    fn morphisms_intertwine_and_projective_classes_vanish() {
        let cfg = GenConfig {
            field: Field::Rational,
            ..GenConfig::default()
        };
        for t in 0..20 {
            let mut rng = trial_rng(1, "m", t);
            let alg = gen_algebra(&mut rng, &cfg);
            let x = gen_rep(&mut rng, &alg, &cfg);
            let y = gen_rep(&mut rng, &alg, &cfg);
            assert!(gen_morphism(&mut rng, &x, &y).is_intertwining());
            let p = Rep::projective(&alg, cfg.field, 0);
            let z = gen_class(&mut rng, &p, &y);
            assert!(z.is_zero_cocycle());
        }
    }
}
