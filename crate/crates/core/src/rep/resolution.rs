//! The standard projective resolution `0 -> X⊗Ω -i-> X⊗_AΛ -p-> X -> 0` and
//! injective coresolution `0 -> X -j-> Hom_A(Λ,X) -q-> Hom(Ω,X) -> 0`, with
//! `j = Hom(p, X)` and `q = −Hom(i, X)`.

use super::models::{cotails_omega, tails_omega, tails_unit, Coinduced, Induced, Sym};
use super::{ExtClass, Rep, RepMorphism};
use crate::exactmat::Matrix;

#[derive(Clone, Debug)]
pub struct StdResolutions {
    pub x: Rep,
    /// `X ⊗_A Λ`
    pub lam: Induced,
    /// `X ⊗ Ω`
    pub omega: Induced,
    pub i: RepMorphism,
    pub p: RepMorphism,
    /// `Hom_A(Λ, X)`
    pub hom_lam: Coinduced,
    /// `Hom(Ω, X)`
    pub hom_omega: Coinduced,
    pub j: RepMorphism,
    pub q: RepMorphism,
}

pub(crate) fn basis_column(len: usize, k: usize, field: crate::exactmat::Field) -> Matrix {
    let mut c = Matrix::zeros(field, len, 1);
    c.set_i64(k, 0, 1);
    c
}

pub(crate) fn basis_row(len: usize, k: usize, field: crate::exactmat::Field) -> Matrix {
    let mut r = Matrix::zeros(field, 1, len);
    r.set_i64(0, k, 1);
    r
}

pub fn std_resolutions(x: &Rep) -> StdResolutions {
    let alg = x.alg().clone();
    let q = alg.quiver();
    let field = x.field();
    let lam = Induced::new(x, tails_unit(&alg));
    let omega = Induced::new(x, tails_omega(&alg));

    // i(x ⊗ da) = (x, a) − (X_a x, e)
    let i_images: Vec<Matrix> = (0..omega.gen_count())
        .map(|g| {
            let (a, k, _) = omega.gen(g);
            let (s, t) = q.arrows()[a];
            let mut col = lam.zero_at(t);
            let src = lam.gen_index(&[Sym::Vertex(s)], k);
            col.add_i64(lam.coord(src, alg.arrow_path(a)), 0, 1);
            for kk in 0..x.dim(t) {
                let c = x.arrow(a).get(kk, k);
                if !c.is_zero() {
                    col.add_scalar_at(
                        lam.coord(lam.gen_index(&[Sym::Vertex(t)], kk), t),
                        0,
                        &c.neg(),
                    );
                }
            }
            col
        })
        .collect();
    let i = omega.map_to(&lam.rep, &i_images);

    // p(x ⊗ 1) = x
    let p_images: Vec<Matrix> = (0..lam.gen_count())
        .map(|g| {
            let (_, k, v) = lam.gen(g);
            basis_column(x.dim(v), k, field)
        })
        .collect();
    let p = lam.map_to(x, &p_images);

    let hom_lam = Coinduced::new(x, tails_unit(&alg));
    let hom_omega = Coinduced::new(x, cotails_omega(&alg));

    // j(x)(λ) = x λ
    let j_fun: Vec<Matrix> = (0..hom_lam.cogen_count())
        .map(|c| {
            let (_, k, w) = hom_lam.cogen(c);
            basis_row(x.dim(w), k, field)
        })
        .collect();
    let j = hom_lam.map_from(x, &j_fun);

    // q(h)(da) = h(a) − h(1) a, read on Hom_A(Λ,X) at s(a)
    let q_fun: Vec<Matrix> = (0..hom_omega.cogen_count())
        .map(|c| {
            let (a, k, _) = hom_omega.cogen(c);
            let (s, t) = q.arrows()[a];
            let mut row = Coinduced::zero_functional(&hom_lam.rep, s);
            row.add_i64(
                0,
                hom_lam.coord(hom_lam.cogen_index(&[Sym::Vertex(t)], k), alg.arrow_path(a)),
                1,
            );
            for kk in 0..x.dim(s) {
                let v = x.arrow(a).get(k, kk);
                if !v.is_zero() {
                    row.add_scalar_at(
                        0,
                        hom_lam.coord(hom_lam.cogen_index(&[Sym::Vertex(s)], kk), s),
                        &v.neg(),
                    );
                }
            }
            row
        })
        .collect();
    let qm = hom_omega.map_from(&hom_lam.rep, &q_fun);

    StdResolutions {
        x: x.clone(),
        lam,
        omega,
        i,
        p,
        hom_lam,
        hom_omega,
        j,
        q: qm,
    }
}

impl StdResolutions {
    /// Exactness of both three-term sequences, checked by ranks.
    pub fn is_exact(&self) -> bool {
        super::is_exact_pair(&self.i, &self.p) && super::is_exact_pair(&self.j, &self.q)
    }

    /// The morphism `g: X ⊗ Ω -> Y` of a cocycle, `x ⊗ da ↦ g_a x`.
    pub fn cocycle_map(&self, z: &ExtClass) -> RepMorphism {
        let images: Vec<Matrix> = (0..self.omega.gen_count())
            .map(|g| {
                let (a, k, _) = self.omega.gen(g);
                z.cocycle[a].col(k)
            })
            .collect();
        self.omega.map_to(&z.y, &images)
    }
}

/// The comparison `g·𝕡_X = 𝕀_Y·g̃` of a class `ζ ∈ Ext¹(X, Y)`.
#[derive(Clone, Debug)]
pub struct Comparison {
    /// `g: X ⊗ Ω -> Y`
    pub g: RepMorphism,
    /// `h: X ⊗_A Λ -> Hom_A(Λ, Y)`, `h(x ⊗ λ)(μ) = g(x ⊗ d(λμ))`
    pub h: RepMorphism,
    /// `g̃: X -> Hom(Ω, Y)`
    pub g_tilde: RepMorphism,
}

impl Comparison {
    /// Both squares: `j_Y g = h i_X` and `q_Y h = g̃ p_X`.
    pub fn commutes(&self, rx: &StdResolutions, ry: &StdResolutions) -> bool {
        ry.j.compose(&self.g) == self.h.compose(&rx.i)
            && ry.q.compose(&self.h) == self.g_tilde.compose(&rx.p)
    }
}

/// `g̃: X -> Hom(Ω, Y)`, the functional of cogenerator `(a, y_k)` being `x ↦ y_k*(g_a x)`.
pub fn g_tilde(z: &ExtClass, hom_omega_y: &Coinduced) -> RepMorphism {
    let fun: Vec<Matrix> = (0..hom_omega_y.cogen_count())
        .map(|c| {
            let (a, k, _) = hom_omega_y.cogen(c);
            z.cocycle[a].row(k)
        })
        .collect();
    hom_omega_y.map_from(&z.x, &fun)
}

pub fn proj_to_inj(z: &ExtClass, rx: &StdResolutions, ry: &StdResolutions) -> Comparison {
    let alg = z.x.alg().clone();
    let (x, y) = (&z.x, &z.y);
    let g = rx.cocycle_map(z);
    let hl = &ry.hom_lam;
    let h_images: Vec<Matrix> = (0..rx.lam.gen_count())
        .map(|gi| {
            let (_, k, u) = rx.lam.gen(gi);
            let xk = basis_column(x.dim(u), k, x.field());
            let mut col = Matrix::zeros(x.field(), hl.rep.dim(u), 1);
            for &mu in alg.paths_from(u) {
                let w = alg.path(mu).target;
                // g(x ⊗ dμ) = Σ_{μ = μ1 a μ2} Y_{μ2} g_a X_{μ1} x
                let mut val = Matrix::zeros(x.field(), y.dim(w), 1);
                for (m1, a, m2) in alg.arrow_splittings(mu) {
                    let v = y
                        .path_matrix(m2)
                        .mul(&z.cocycle[a])
                        .mul(&x.path_matrix(m1).mul(&xk));
                    val = val.add(&v);
                }
                for kk in 0..y.dim(w) {
                    let c = val.get(kk, 0);
                    if !c.is_zero() {
                        col.set(hl.coord(hl.cogen_index(&[Sym::Vertex(w)], kk), mu), 0, &c);
                    }
                }
            }
            col
        })
        .collect();
    let h = rx.lam.map_to(&hl.rep, &h_images);
    let gt = g_tilde(z, &ry.hom_omega);
    Comparison { g, h, g_tilde: gt }
}
