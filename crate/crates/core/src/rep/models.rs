//! Labeled models of induced and coinduced representations.
//!
//! An [`Induced`] model `X ⊗ T` is free on generators `(tail, x_k)`: the
//! vector `x_k` lives in `X` at `tail.start` and the generator sits at
//! `tail.end`. Its basis at `j` is `(g, p)` for paths `p: end(g) -> j`, and
//! arrows act by `(g, p) ↦ (g, p b)`. A morphism out of it is fixed by the
//! images of the generators.
//!
//! A [`Coinduced`] model `Hom(T, X)` is dual: cogenerators `(tail, x_k)`
//! sit at `tail.end`, its basis at `j` is `(c, p)` for paths `p: j -> end(c)`,
//! and `(h·b)(c, q) = h(c, b q)`. A morphism into it is fixed by one
//! functional per cogenerator.

use std::collections::HashMap;
use std::sync::Arc;

use super::{Rep, RepMorphism};
use crate::exactmat::{Field, Matrix, Scalar};
use crate::quiver::PathAlgebra;

/// A basis symbol inside a tail label.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sym {
    Vertex(usize),
    Arrow(usize),
    Dual(usize),
    Path(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tail {
    pub start: usize,
    pub end: usize,
    pub label: Vec<Sym>,
}

impl Tail {
    fn new(start: usize, end: usize, label: Vec<Sym>) -> Tail {
        Tail { start, end, label }
    }
}

/// `X ⊗_A Λ`: one tail per vertex.
pub fn tails_unit(alg: &PathAlgebra) -> Vec<Tail> {
    (0..alg.quiver().vertex_count())
        .map(|u| Tail::new(u, u, vec![Sym::Vertex(u)]))
        .collect()
}

/// `X ⊗ Ω = X ⊗_A M ⊗_A Λ`: tail `a` from `s(a)` to `t(a)`.
pub fn tails_omega(alg: &PathAlgebra) -> Vec<Tail> {
    alg.quiver()
        .arrows()
        .iter()
        .enumerate()
        .map(|(a, &(s, t))| Tail::new(s, t, vec![Sym::Arrow(a)]))
        .collect()
}

/// `X ⊗ ℧ = X ⊗_A DM ⊗_A Λ`: tail `a*` from `t(a)` to `s(a)`.
pub fn tails_mho(alg: &PathAlgebra) -> Vec<Tail> {
    alg.quiver()
        .arrows()
        .iter()
        .enumerate()
        .map(|(a, &(s, t))| Tail::new(t, s, vec![Sym::Dual(a)]))
        .collect()
}

/// `X ⊗_A ℧ = X ⊗_A Λ ⊗_A DM ⊗_A Λ`: tails `(p, a*)` with `t(a) = t(p)`.
pub fn tails_lam_mho(alg: &PathAlgebra) -> Vec<Tail> {
    let q = alg.quiver();
    let mut out = Vec::new();
    for u in 0..q.vertex_count() {
        for &p in alg.paths_from(u) {
            for (a, &(s, t)) in q.arrows().iter().enumerate() {
                if t == alg.path(p).target {
                    out.push(Tail::new(u, s, vec![Sym::Path(p), Sym::Dual(a)]));
                }
            }
        }
    }
    out
}

/// `X ⊗ Ω ⊗ ℧`: tails `(b, p, a*)` with `s(p) = t(b)`, `t(a) = t(p)`.
pub fn tails_omega_mho(alg: &PathAlgebra) -> Vec<Tail> {
    let q = alg.quiver();
    let mut out = Vec::new();
    for (b, &(sb, tb)) in q.arrows().iter().enumerate() {
        for &p in alg.paths_from(tb) {
            for (a, &(s, t)) in q.arrows().iter().enumerate() {
                if t == alg.path(p).target {
                    out.push(Tail::new(
                        sb,
                        s,
                        vec![Sym::Arrow(b), Sym::Path(p), Sym::Dual(a)],
                    ));
                }
            }
        }
    }
    out
}

/// `X ⊗_A Λ ⊗_A Λ`: tails `p` from `s(p)` to `t(p)`.
pub fn tails_lam_lam(alg: &PathAlgebra) -> Vec<Tail> {
    let q = alg.quiver();
    let mut out = Vec::new();
    for u in 0..q.vertex_count() {
        for &p in alg.paths_from(u) {
            out.push(Tail::new(u, alg.path(p).target, vec![Sym::Path(p)]));
        }
    }
    out
}

/// Cotails of `Hom(Ω, X)`: cogenerator `(a, x at t(a))` at `s(a)`.
pub fn cotails_omega(alg: &PathAlgebra) -> Vec<Tail> {
    alg.quiver()
        .arrows()
        .iter()
        .enumerate()
        .map(|(a, &(s, t))| Tail::new(t, s, vec![Sym::Arrow(a)]))
        .collect()
}

/// Cotails of `Hom(℧, X)`: cogenerator `(a*, x at s(a))` at `t(a)`.
pub fn cotails_mho(alg: &PathAlgebra) -> Vec<Tail> {
    alg.quiver()
        .arrows()
        .iter()
        .enumerate()
        .map(|(a, &(s, t))| Tail::new(s, t, vec![Sym::Dual(a)]))
        .collect()
}

/// Vertex dimensions of `Induced::new(base, tails)` without building it.
pub fn induced_dims(base: &Rep, tails: &[Tail]) -> Vec<usize> {
    let alg = base.alg();
    let n = alg.quiver().vertex_count();
    let mut dims = vec![0; n];
    for t in tails {
        for (j, d) in dims.iter_mut().enumerate() {
            *d += base.dim(t.start) * alg.paths_between(t.end, j).len();
        }
    }
    dims
}

/// Generator bookkeeping shared by both model kinds.
#[derive(Clone, Debug)]
struct Gens {
    tails: Vec<Tail>,
    tail_index: HashMap<Vec<Sym>, usize>,
    first: Vec<usize>,
    // (tail, k, vertex where the generator sits)
    list: Vec<(usize, usize, usize)>,
}

impl Gens {
    fn new(base: &Rep, tails: Vec<Tail>) -> Gens {
        let mut first = Vec::with_capacity(tails.len());
        let mut list = Vec::new();
        for (t, tail) in tails.iter().enumerate() {
            first.push(list.len());
            for k in 0..base.dim(tail.start) {
                list.push((t, k, tail.end));
            }
        }
        let tail_index = tails
            .iter()
            .enumerate()
            .map(|(i, t)| (t.label.clone(), i))
            .collect();
        Gens {
            tails,
            tail_index,
            first,
            list,
        }
    }
}

/// Induced (projective) model `X ⊗ T`.
#[derive(Clone, Debug)]
pub struct Induced {
    pub rep: Rep,
    pub base: Rep,
    gens: Gens,
    // offsets[j][g] = position of (g, first path) at vertex j
    offsets: Vec<Vec<usize>>,
}

impl Induced {
    pub fn new(base: &Rep, tails: Vec<Tail>) -> Induced {
        let alg = base.alg().clone();
        let field = base.field();
        let q = alg.quiver();
        let n = q.vertex_count();
        let gens = Gens::new(base, tails);
        let mut offsets = vec![Vec::with_capacity(gens.list.len()); n];
        let mut dims = vec![0usize; n];
        for &(_, _, v) in &gens.list {
            for j in 0..n {
                offsets[j].push(dims[j]);
                dims[j] += alg.paths_between(v, j).len();
            }
        }
        let mut mats: Vec<Matrix> = q
            .arrows()
            .iter()
            .map(|&(s, t)| Matrix::zeros(field, dims[t], dims[s]))
            .collect();
        for (b, &(s, t)) in q.arrows().iter().enumerate() {
            for (g, &(_, _, v)) in gens.list.iter().enumerate() {
                for &p in alg.paths_between(v, s) {
                    let pb = alg.mul_arrow_right(p, b).expect("t(p) = s(b)");
                    mats[b].set_i64(offsets[t][g] + alg.slot(pb), offsets[s][g] + alg.slot(p), 1);
                }
            }
        }
        let rep = Rep::new(&alg, field, dims, mats).expect("induced model shapes");
        Induced {
            rep,
            base: base.clone(),
            gens,
            offsets,
        }
    }

    pub fn alg(&self) -> &Arc<crate::quiver::PathAlgebra> {
        self.rep.alg()
    }

    pub fn tails(&self) -> &[Tail] {
        &self.gens.tails
    }

    pub fn gen_count(&self) -> usize {
        self.gens.list.len()
    }

    /// `(tail, k, vertex)` of generator `g`.
    pub fn gen(&self, g: usize) -> (usize, usize, usize) {
        self.gens.list[g]
    }

    pub fn gen_vertex(&self, g: usize) -> usize {
        self.gens.list[g].2
    }

    pub fn tail_of(&self, label: &[Sym]) -> Option<usize> {
        self.gens.tail_index.get(label).copied()
    }

    /// Generator `(tail with this label, x_k)`.
    pub fn gen_index(&self, label: &[Sym], k: usize) -> usize {
        let t = self
            .tail_of(label)
            .unwrap_or_else(|| panic!("no tail labeled {label:?}"));
        self.gens.first[t] + k
    }

    /// Position of `(g, p)` at vertex `t(p)`; `p` must start at the generator.
    pub fn coord(&self, g: usize, p: usize) -> usize {
        let path = self.alg().path(p);
        debug_assert_eq!(path.source, self.gen_vertex(g));
        self.offsets[path.target][g] + self.alg().slot(p)
    }

    /// Zero column at vertex `j`.
    pub fn zero_at(&self, j: usize) -> Matrix {
        Matrix::zeros(self.rep.field(), self.rep.dim(j), 1)
    }

    /// The morphism to `cod` sending generator `g` to `images[g] ∈ cod_{v(g)}`.
    pub fn map_to(&self, cod: &Rep, images: &[Matrix]) -> RepMorphism {
        debug_assert_eq!(images.len(), self.gen_count());
        let alg = self.alg();
        let n = alg.quiver().vertex_count();
        let field = self.rep.field();
        let arrows = cod.sparse_arrows();
        let mut maps: Vec<Matrix> = (0..n)
            .map(|j| Matrix::zeros(field, cod.dim(j), self.rep.dim(j)))
            .collect();
        let mut cols: Vec<Option<Vec<Scalar>>> = vec![None; alg.dim()];
        for (g, img) in images.iter().enumerate() {
            if img.is_zero() {
                continue;
            }
            let v = self.gen_vertex(g);
            // cod_{p a} y = cod_a (cod_p y), prefixes come first
            for &p in alg.paths_from(v) {
                let path = alg.path(p);
                let col = match path.arrows.split_last() {
                    None => img.entries(),
                    Some((&a, prefix)) => {
                        let pre = if prefix.is_empty() {
                            alg.trivial(v)
                        } else {
                            alg.index_of(prefix).expect("prefix is a path")
                        };
                        let prev = cols[pre].as_ref().expect("prefix computed");
                        apply_by_col(&arrows[a].by_col, prev, cod.dim(path.target), field)
                    }
                };
                let c = self.offsets[path.target][g] + alg.slot(p);
                for (r, x) in col.iter().enumerate() {
                    if !x.is_zero() {
                        maps[path.target].set(r, c, x);
                    }
                }
                cols[p] = Some(col);
            }
            for &p in alg.paths_from(v) {
                cols[p] = None;
            }
        }
        RepMorphism::new_unchecked(self.rep.clone(), cod.clone(), maps)
    }

    /// `f ⊗ 1: X ⊗ T -> X' ⊗ T` for `f: X -> X'`; `other` must use the same tails.
    pub fn tensor_map(&self, other: &Induced, f: &RepMorphism) -> RepMorphism {
        debug_assert_eq!(self.tails(), other.tails());
        let images: Vec<Matrix> = self
            .gens
            .list
            .iter()
            .map(|&(t, k, v)| {
                let start = self.gens.tails[t].start;
                let mut col = other.zero_at(v);
                for kk in 0..other.base.dim(start) {
                    let c = f.at(start).get(kk, k);
                    if !c.is_zero() {
                        col.add_scalar_at(other.coord(other.gens.first[t] + kk, v), 0, &c);
                    }
                }
                col
            })
            .collect();
        self.map_to(&other.rep, &images)
    }

    /// Column of the generator `g` itself (at its own vertex).
    pub fn gen_column(&self, g: usize) -> Matrix {
        let v = self.gen_vertex(g);
        let mut col = self.zero_at(v);
        col.set_i64(self.coord(g, v), 0, 1);
        col
    }
}

/// `out[r] = Σ_i lists[i][·] v_i`, a sparse matrix applied to a dense vector.
fn apply_by_col(
    lists: &[Vec<(usize, Scalar)>],
    v: &[Scalar],
    len: usize,
    field: Field,
) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero(field); len];
    for (i, x) in v.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (r, a) in &lists[i] {
            out[*r] = out[*r].add(&a.mul(x));
        }
    }
    out
}

/// Coinduced (injective) model `Hom(T, X)`.
#[derive(Clone, Debug)]
pub struct Coinduced {
    pub rep: Rep,
    pub base: Rep,
    gens: Gens,
    // offsets[j][c] = position of (c, first path) at vertex j
    offsets: Vec<Vec<usize>>,
}

impl Coinduced {
    pub fn new(base: &Rep, tails: Vec<Tail>) -> Coinduced {
        let alg = base.alg().clone();
        let field = base.field();
        let q = alg.quiver();
        let n = q.vertex_count();
        let gens = Gens::new(base, tails);
        let mut offsets = vec![Vec::with_capacity(gens.list.len()); n];
        let mut dims = vec![0usize; n];
        for &(_, _, w) in &gens.list {
            for j in 0..n {
                offsets[j].push(dims[j]);
                dims[j] += alg.paths_between(j, w).len();
            }
        }
        let mut mats: Vec<Matrix> = q
            .arrows()
            .iter()
            .map(|&(s, t)| Matrix::zeros(field, dims[t], dims[s]))
            .collect();
        for (b, &(s, t)) in q.arrows().iter().enumerate() {
            for (c, &(_, _, w)) in gens.list.iter().enumerate() {
                for &qq in alg.paths_between(t, w) {
                    let bq = alg.mul_arrow_left(b, qq).expect("t(b) = s(q)");
                    mats[b].set_i64(
                        offsets[t][c] + alg.slot(qq),
                        offsets[s][c] + alg.slot(bq),
                        1,
                    );
                }
            }
        }
        let rep = Rep::new(&alg, field, dims, mats).expect("coinduced model shapes");
        Coinduced {
            rep,
            base: base.clone(),
            gens,
            offsets,
        }
    }

    /// The model `P ⊗ DΛ`, cogenerated by the generators of `P`.
    pub fn dual_of(p: &Induced) -> Coinduced {
        Coinduced::new(&p.base, p.tails().to_vec())
    }

    pub fn alg(&self) -> &Arc<crate::quiver::PathAlgebra> {
        self.rep.alg()
    }

    pub fn tails(&self) -> &[Tail] {
        &self.gens.tails
    }

    pub fn cogen_count(&self) -> usize {
        self.gens.list.len()
    }

    /// `(tail, k, vertex)` of cogenerator `c`.
    pub fn cogen(&self, c: usize) -> (usize, usize, usize) {
        self.gens.list[c]
    }

    pub fn cogen_vertex(&self, c: usize) -> usize {
        self.gens.list[c].2
    }

    pub fn cogen_index(&self, label: &[Sym], k: usize) -> usize {
        let t = self
            .gens
            .tail_index
            .get(label)
            .copied()
            .unwrap_or_else(|| panic!("no cotail labeled {label:?}"));
        self.gens.first[t] + k
    }

    /// Position of `(c, p)` at vertex `s(p)`; `p` must end at the cogenerator.
    pub fn coord(&self, c: usize, p: usize) -> usize {
        let path = self.alg().path(p);
        debug_assert_eq!(path.target, self.cogen_vertex(c));
        self.offsets[path.source][c] + self.alg().slot(p)
    }

    /// The morphism from `dom` given by `m ↦ (c, p) ↦ φ_c(M_p m)`, with
    /// `functionals[c]` a row vector on `dom` at the cogenerator's vertex.
    pub fn map_from(&self, dom: &Rep, functionals: &[Matrix]) -> RepMorphism {
        debug_assert_eq!(functionals.len(), self.cogen_count());
        let alg = self.alg();
        let n = alg.quiver().vertex_count();
        let field = self.rep.field();
        let arrows = dom.sparse_arrows();
        let mut maps: Vec<Matrix> = (0..n)
            .map(|j| Matrix::zeros(field, self.rep.dim(j), dom.dim(j)))
            .collect();
        let mut rows: Vec<Option<Vec<Scalar>>> = vec![None; alg.dim()];
        for (c, phi) in functionals.iter().enumerate() {
            if phi.is_zero() {
                continue;
            }
            let w = self.cogen_vertex(c);
            // φ M_{a q} = (φ M_q) M_a, suffixes come first
            for &p in alg.paths_into(w) {
                let path = alg.path(p);
                let row = match path.arrows.split_first() {
                    None => phi.entries(),
                    Some((&a, suffix)) => {
                        let suf = if suffix.is_empty() {
                            alg.trivial(w)
                        } else {
                            alg.index_of(suffix).expect("suffix is a path")
                        };
                        let prev = rows[suf].as_ref().expect("suffix computed");
                        apply_by_col(&arrows[a].by_row, prev, dom.dim(path.source), field)
                    }
                };
                let r = self.offsets[path.source][c] + alg.slot(p);
                for (k, x) in row.iter().enumerate() {
                    if !x.is_zero() {
                        maps[path.source].set(r, k, x);
                    }
                }
                rows[p] = Some(row);
            }
            for &p in alg.paths_into(w) {
                rows[p] = None;
            }
        }
        RepMorphism::new_unchecked(dom.clone(), self.rep.clone(), maps)
    }

    /// Zero row functional on `rep` at vertex `j`.
    pub fn zero_functional(rep: &Rep, j: usize) -> Matrix {
        Matrix::zeros(rep.field(), 1, rep.dim(j))
    }

    /// Value of the coordinate `(c, e)` on a column at the cogenerator's vertex.
    pub fn eval_at_identity(&self, c: usize, col: &Matrix) -> Scalar {
        col.get(self.coord(c, self.cogen_vertex(c)), 0)
    }
}

/// `Ev(u) = Σ_g u(g)(g, e)` for `u: P -> P ⊗ DΛ`, given the images of the
/// generators of `P`. The cogenerators of `c` must match the generators of `p`.
pub fn ev_from_images(p: &Induced, c: &Coinduced, images: &[Matrix]) -> Scalar {
    assert_eq!(p.gen_count(), c.cogen_count(), "generator lists differ");
    let mut acc = Scalar::zero(p.rep.field());
    for (g, img) in images.iter().enumerate() {
        debug_assert_eq!(p.gen_vertex(g), c.cogen_vertex(g));
        acc = acc.add(&c.eval_at_identity(g, img));
    }
    acc
}

/// `Ev(u)` for a morphism `u: P -> P ⊗ DΛ`.
pub fn ev(p: &Induced, c: &Coinduced, u: &RepMorphism) -> Scalar {
    let images: Vec<Matrix> = (0..p.gen_count())
        .map(|g| u.at(p.gen_vertex(g)).mul(&p.gen_column(g)))
        .collect();
    ev_from_images(p, c, &images)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmat::{mat, Field};
    use crate::quiver::Quiver;

    const Q: Field = Field::Rational;

    fn alg(q: Quiver) -> Arc<PathAlgebra> {
        Arc::new(PathAlgebra::new(&q))
    }

    #[test]
    fn induced_dimensions_a2() {
        let a = alg(Quiver::linear(2));
        let s0 = Rep::simple(&a, Q, 0);
        let lam = Induced::new(&s0, tails_unit(&a));
        assert_eq!(lam.rep, Rep::projective(&a, Q, 0));
        let om = Induced::new(&s0, tails_omega(&a));
        assert_eq!(om.rep, Rep::projective(&a, Q, 1));
    }

    #[test]
    fn coinduced_dimensions_a2() {
        let a = alg(Quiver::linear(2));
        let s1 = Rep::simple(&a, Q, 1);
        let hl = Coinduced::new(&s1, tails_unit(&a));
        assert_eq!(hl.rep.dims(), &[1, 1]);
        assert_eq!(hl.rep, Rep::injective(&a, Q, 1));
        let ho = Coinduced::new(&s1, cotails_omega(&a));
        assert_eq!(ho.rep.dims(), &[1, 0]);
    }

    #[test]
    fn induced_dimension_count() {
        let a = alg(Quiver::new(4, vec![(0, 1), (0, 2), (1, 3), (2, 3), (0, 3)]).unwrap());
        let x = Rep::from_dims_zero(&a, Q, vec![2, 1, 0, 3]);
        let lam = Induced::new(&x, tails_unit(&a));
        for j in 0..4 {
            let want: usize = (0..4).map(|i| x.dim(i) * a.paths_between(i, j).len()).sum();
            assert_eq!(lam.rep.dim(j), want);
        }
        let hom = Coinduced::new(&x, tails_unit(&a));
        for j in 0..4 {
            let want: usize = (0..4).map(|i| x.dim(i) * a.paths_between(j, i).len()).sum();
            assert_eq!(hom.rep.dim(j), want);
        }
    }

    #[test]
    fn maps_from_generators_intertwine() {
        let a = alg(Quiver::new(3, vec![(0, 1), (0, 1), (1, 2)]).unwrap());
        let x = Rep::new(
            &a,
            Q,
            vec![1, 2, 1],
            vec![
                mat(Q, 2, 1, &[1, 2]),
                mat(Q, 2, 1, &[0, -1]),
                mat(Q, 1, 2, &[3, 1]),
            ],
        )
        .unwrap();
        let lam = Induced::new(&x, tails_unit(&a));
        let images: Vec<Matrix> = (0..lam.gen_count())
            .map(|g| {
                let (_, k, v) = lam.gen(g);
                let mut c = Matrix::zeros(Q, x.dim(v), 1);
                c.set_i64(k, 0, 1);
                c
            })
            .collect();
        let p = lam.map_to(&x, &images);
        assert!(p.is_intertwining());
        assert!(p.is_surjective());
        let hom = Coinduced::new(&x, tails_unit(&a));
        let fs: Vec<Matrix> = (0..hom.cogen_count())
            .map(|c| {
                let (_, k, v) = hom.cogen(c);
                let mut r = Matrix::zeros(Q, 1, x.dim(v));
                r.set_i64(0, k, 1);
                r
            })
            .collect();
        let j = hom.map_from(&x, &fs);
        assert!(j.is_intertwining());
        assert!(j.is_injective());
        // Ev(j p) = total dimension
        let u = j.compose(&p);
        assert_eq!(
            ev(&lam, &Coinduced::dual_of(&lam), &u),
            Scalar::from_i64(Q, 4)
        );
    }
}
