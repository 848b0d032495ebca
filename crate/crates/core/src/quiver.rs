//! Acyclic quivers, the path basis of the path algebra and the induced
//! bimodule models `Λ ⊗_A V ⊗_A Λ` for `V = A`, the arrow bimodule and its dual.
//!
//! Paths are written in traversal order: `p = a1 a2 ... ak` with
//! `t(a_i) = s(a_{i+1})`, and the product `p q` is defined when `t(p) = s(q)`.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{ArError, Result};
use crate::exactmat::{Field, Matrix};

/// A finite quiver with vertices `0..n` and arrows indexed by position.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Quiver {
    #[serde(rename = "vertices")]
    vertex_count: usize,
    arrows: Vec<(usize, usize)>,
}

impl Quiver {
    /// Validates endpoints and rejects directed cycles (including loops).
    pub fn new(vertex_count: usize, arrows: Vec<(usize, usize)>) -> Result<Quiver> {
        if let Some(&(s, t)) = arrows
            .iter()
            .find(|&&(s, t)| s >= vertex_count || t >= vertex_count)
        {
            return Err(ArError::InvalidInput(format!(
                "arrow {s}->{t} leaves the vertex range 0..{vertex_count}"
            )));
        }
        let q = Quiver {
            vertex_count,
            arrows,
        };
        q.topological_order().ok_or(ArError::Cyclic)?;
        Ok(q)
    }

    pub fn from_json(s: &str) -> Result<Quiver> {
        let raw: Quiver =
            serde_json::from_str(s).map_err(|e| ArError::InvalidInput(e.to_string()))?;
        Quiver::new(raw.vertex_count, raw.arrows)
    }

    /// Linear orientation `0 -> 1 -> ... -> n-1`.
    pub fn linear(n: usize) -> Quiver {
        Quiver::new(n, (1..n).map(|i| (i - 1, i)).collect()).expect("linear quiver is acyclic")
    }

    /// Two vertices joined by `m` parallel arrows `0 -> 1`.
    pub fn kronecker(m: usize) -> Quiver {
        Quiver::new(2, vec![(0, 1); m]).expect("kronecker quiver is acyclic")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    pub fn source(&self, a: usize) -> usize {
        self.arrows[a].0
    }

    pub fn target(&self, a: usize) -> usize {
        self.arrows[a].1
    }

    /// Kahn's algorithm; `None` if there is a directed cycle.
    pub fn topological_order(&self) -> Option<Vec<usize>> {
        let mut indeg = vec![0usize; self.vertex_count];
        for &(_, t) in &self.arrows {
            indeg[t] += 1;
        }
        let mut ready: Vec<usize> = (0..self.vertex_count)
            .filter(|&v| indeg[v] == 0)
            .rev()
            .collect();
        let mut order = Vec::with_capacity(self.vertex_count);
        while let Some(v) = ready.pop() {
            order.push(v);
            for &(s, t) in &self.arrows {
                if s == v {
                    indeg[t] -= 1;
                    if indeg[t] == 0 {
                        ready.push(t);
                    }
                }
            }
        }
        (order.len() == self.vertex_count).then_some(order)
    }

    /// The quiver with every arrow reversed, and the arrow correspondence
    /// (arrow `i` of the result reverses arrow `correspondence[i]`).
    pub fn opposite(&self) -> (Quiver, Vec<usize>) {
        let arrows = self.arrows.iter().map(|&(s, t)| (t, s)).collect();
        (
            Quiver {
                vertex_count: self.vertex_count,
                arrows,
            },
            (0..self.arrows.len()).collect(),
        )
    }
}

impl fmt::Display for Quiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q({} vertices:", self.vertex_count)?;
        for (i, (s, t)) in self.arrows.iter().enumerate() {
            write!(f, " a{i}:{s}->{t}")?;
        }
        write!(f, ")")
    }
}

/// A path in traversal order. Trivial paths have no arrows.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    pub arrows: Vec<usize>,
    pub source: usize,
    pub target: usize,
}

impl Path {
    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }
}

/// The path basis of `kQ` with multiplication tables.
///
/// Index `v < n` is the trivial path `e_v`; the remaining paths follow by
/// length and then lexicographically by arrow indices.
#[derive(Clone, Debug)]
pub struct PathAlgebra {
    quiver: Quiver,
    paths: Vec<Path>,
    lookup: HashMap<Vec<usize>, usize>,
    // right[p][a] = index of p·a, left[a][p] = index of a·p
    right: Vec<Vec<Option<usize>>>,
    left: Vec<Vec<Option<usize>>>,
    from: Vec<Vec<usize>>,
    into: Vec<Vec<usize>>,
    between: Vec<Vec<Vec<usize>>>,
    // position of a path among the paths with the same endpoints
    slot: Vec<usize>,
}

impl PathAlgebra {
    pub fn new(quiver: &Quiver) -> PathAlgebra {
        let n = quiver.vertex_count();
        let mut paths: Vec<Path> = (0..n)
            .map(|v| Path {
                arrows: vec![],
                source: v,
                target: v,
            })
            .collect();
        let mut layer: Vec<Path> = (0..quiver.arrow_count())
            .map(|a| Path {
                arrows: vec![a],
                source: quiver.source(a),
                target: quiver.target(a),
            })
            .collect();
        while !layer.is_empty() {
            layer.sort_by(|x, y| x.arrows.cmp(&y.arrows));
            let mut next = Vec::new();
            for p in &layer {
                for (a, &(s, t)) in quiver.arrows().iter().enumerate() {
                    if s == p.target {
                        let mut arrows = p.arrows.clone();
                        arrows.push(a);
                        next.push(Path {
                            arrows,
                            source: p.source,
                            target: t,
                        });
                    }
                }
            }
            paths.append(&mut layer);
            layer = next;
        }

        let lookup: HashMap<Vec<usize>, usize> = paths
            .iter()
            .enumerate()
            .filter(|(_, p)| !p.is_trivial())
            .map(|(i, p)| (p.arrows.clone(), i))
            .collect();
        let m = quiver.arrow_count();
        let mut right = vec![vec![None; m]; paths.len()];
        let mut left = vec![vec![None; paths.len()]; m];
        for (i, p) in paths.iter().enumerate() {
            for a in 0..m {
                if quiver.source(a) == p.target {
                    let mut w = p.arrows.clone();
                    w.push(a);
                    right[i][a] = Some(lookup[&w]);
                }
                if quiver.target(a) == p.source {
                    let mut w = vec![a];
                    w.extend_from_slice(&p.arrows);
                    left[a][i] = Some(lookup[&w]);
                }
            }
        }
        let mut from = vec![Vec::new(); n];
        let mut into = vec![Vec::new(); n];
        let mut between = vec![vec![Vec::new(); n]; n];
        let mut slot = Vec::with_capacity(paths.len());
        for (i, p) in paths.iter().enumerate() {
            from[p.source].push(i);
            into[p.target].push(i);
            slot.push(between[p.source][p.target].len());
            between[p.source][p.target].push(i);
        }
        PathAlgebra {
            quiver: quiver.clone(),
            paths,
            lookup,
            right,
            left,
            from,
            into,
            between,
            slot,
        }
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn dim(&self) -> usize {
        self.paths.len()
    }

    pub fn paths(&self) -> &[Path] {
        &self.paths
    }

    pub fn path(&self, i: usize) -> &Path {
        &self.paths[i]
    }

    /// Index of the trivial path at `v`.
    pub fn trivial(&self, v: usize) -> usize {
        v
    }

    /// Index of the length-one path `a`.
    pub fn arrow_path(&self, a: usize) -> usize {
        self.lookup[&vec![a]]
    }

    pub fn index_of(&self, arrows: &[usize]) -> Option<usize> {
        self.lookup.get(arrows).copied()
    }

    /// `p·a`, if `t(p) = s(a)`.
    pub fn mul_arrow_right(&self, p: usize, a: usize) -> Option<usize> {
        self.right[p][a]
    }

    /// `a·p`, if `t(a) = s(p)`.
    pub fn mul_arrow_left(&self, a: usize, p: usize) -> Option<usize> {
        self.left[a][p]
    }

    /// `p·q`, if `t(p) = s(q)`.
    pub fn mul(&self, p: usize, q: usize) -> Option<usize> {
        let (pp, qq) = (&self.paths[p], &self.paths[q]);
        if pp.target != qq.source {
            return None;
        }
        if pp.is_trivial() {
            return Some(q);
        }
        if qq.is_trivial() {
            return Some(p);
        }
        let mut w = pp.arrows.clone();
        w.extend_from_slice(&qq.arrows);
        Some(self.lookup[&w])
    }

    /// Paths starting at `v`, in basis order.
    pub fn paths_from(&self, v: usize) -> &[usize] {
        &self.from[v]
    }

    /// Paths ending at `v`, in basis order.
    pub fn paths_into(&self, v: usize) -> &[usize] {
        &self.into[v]
    }

    /// Paths `u -> v`, in basis order.
    pub fn paths_between(&self, u: usize, v: usize) -> &[usize] {
        &self.between[u][v]
    }

    /// Position of `p` within `paths_between(s(p), t(p))`.
    pub fn slot(&self, p: usize) -> usize {
        self.slot[p]
    }

    /// All ways to write `p = u·a·w` with `a` an arrow, as `(u, a, w)`.
    pub fn arrow_splittings(&self, p: usize) -> Vec<(usize, usize, usize)> {
        let path = &self.paths[p];
        let mut out = Vec::with_capacity(path.len());
        for (m, &a) in path.arrows.iter().enumerate() {
            let u = if m == 0 {
                self.quiver.source(a)
            } else {
                self.lookup[&path.arrows[..m]]
            };
            let rest = &path.arrows[m + 1..];
            let w = if rest.is_empty() {
                self.quiver.target(a)
            } else {
                self.lookup[rest]
            };
            out.push((u, a, w));
        }
        out
    }

    /// Left and right multiplication by generators (idempotents, then
    /// arrows) on `Λ` itself.
    pub fn regular_actions(&self, field: Field) -> ActionTables {
        let d = self.dim();
        let n = self.quiver.vertex_count();
        let m = self.quiver.arrow_count();
        let mut left = Vec::with_capacity(n + m);
        let mut right = Vec::with_capacity(n + m);
        for v in 0..n {
            let mut l = Matrix::zeros(field, d, d);
            let mut r = Matrix::zeros(field, d, d);
            for (i, p) in self.paths.iter().enumerate() {
                if p.source == v {
                    l.set_i64(i, i, 1);
                }
                if p.target == v {
                    r.set_i64(i, i, 1);
                }
            }
            left.push(l);
            right.push(r);
        }
        for a in 0..m {
            let mut l = Matrix::zeros(field, d, d);
            let mut r = Matrix::zeros(field, d, d);
            for i in 0..d {
                if let Some(j) = self.left[a][i] {
                    l.set_i64(j, i, 1);
                }
                if let Some(j) = self.right[i][a] {
                    r.set_i64(j, i, 1);
                }
            }
            left.push(l);
            right.push(r);
        }
        ActionTables { left, right }
    }
}

/// Matrices of the left and right actions of the generators `e_0..e_{n-1},
/// a_0..a_{m-1}` on a bimodule, in a fixed basis.
#[derive(Clone, Debug)]
pub struct ActionTables {
    pub left: Vec<Matrix>,
    pub right: Vec<Matrix>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BimoduleKind {
    /// `Λ ⊗_A Λ`
    Unit,
    /// `Λ ⊗_A M ⊗_A Λ`, which models `Ω`
    Arrows,
    /// `Λ ⊗_A DM ⊗_A Λ`, which models `℧`
    DualArrows,
}

/// One basis triple `p ⊗ v ⊗ q`. For `Unit` the middle is a vertex,
/// otherwise an arrow `a` (resp. its dual `a*`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Triple {
    pub left: usize,
    pub mid: usize,
    pub right: usize,
}

/// Basis of `Λ ⊗_A V ⊗_A Λ`, ordered by middle symbol, then left path,
/// then right path.
#[derive(Clone, Debug)]
pub struct BimoduleModel {
    kind: BimoduleKind,
    basis: Vec<Triple>,
    index: HashMap<Triple, usize>,
}

impl BimoduleModel {
    pub fn new(alg: &PathAlgebra, kind: BimoduleKind) -> BimoduleModel {
        let q = alg.quiver();
        // (vertex where the left path must end, vertex where the right path must start)
        let mids: Vec<(usize, usize)> = match kind {
            BimoduleKind::Unit => (0..q.vertex_count()).map(|v| (v, v)).collect(),
            BimoduleKind::Arrows => q.arrows().to_vec(),
            BimoduleKind::DualArrows => q.arrows().iter().map(|&(s, t)| (t, s)).collect(),
        };
        let mut basis = Vec::new();
        for (mid, &(l, r)) in mids.iter().enumerate() {
            for &p in alg.paths_into(l) {
                for &qq in alg.paths_from(r) {
                    basis.push(Triple {
                        left: p,
                        mid,
                        right: qq,
                    });
                }
            }
        }
        let index = basis.iter().enumerate().map(|(i, t)| (*t, i)).collect();
        BimoduleModel { kind, basis, index }
    }

    pub fn kind(&self) -> BimoduleKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Triple] {
        &self.basis
    }

    pub fn index_of(&self, t: Triple) -> Option<usize> {
        self.index.get(&t).copied()
    }

    fn idx(&self, left: usize, mid: usize, right: usize) -> usize {
        self.index[&Triple { left, mid, right }]
    }

    pub fn actions(&self, alg: &PathAlgebra, field: Field) -> ActionTables {
        let d = self.dim();
        let q = alg.quiver();
        let (n, m) = (q.vertex_count(), q.arrow_count());
        let mut left = Vec::with_capacity(n + m);
        let mut right = Vec::with_capacity(n + m);
        for v in 0..n {
            let mut l = Matrix::zeros(field, d, d);
            let mut r = Matrix::zeros(field, d, d);
            for (i, t) in self.basis.iter().enumerate() {
                if alg.path(t.left).source == v {
                    l.set_i64(i, i, 1);
                }
                if alg.path(t.right).target == v {
                    r.set_i64(i, i, 1);
                }
            }
            left.push(l);
            right.push(r);
        }
        for a in 0..m {
            let mut l = Matrix::zeros(field, d, d);
            let mut r = Matrix::zeros(field, d, d);
            for (i, t) in self.basis.iter().enumerate() {
                if let Some(p) = alg.mul_arrow_left(a, t.left) {
                    l.set_i64(self.idx(p, t.mid, t.right), i, 1);
                }
                if let Some(p) = alg.mul_arrow_right(t.right, a) {
                    r.set_i64(self.idx(t.left, t.mid, p), i, 1);
                }
            }
            left.push(l);
            right.push(r);
        }
        ActionTables { left, right }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StructuralMap {
    /// `Λ⊗M⊗Λ -> Λ⊗_AΛ`, `p⊗a⊗q ↦ p⊗aq − pa⊗q`
    I,
    /// `Λ⊗_AΛ -> Λ`, multiplication
    P,
    /// `Λ⊗_AΛ -> Λ⊗DM⊗Λ`, `p⊗q ↦ Σ pa⊗a*⊗q − p⊗a*⊗aq`
    CTilde,
}

/// Matrix of a structural bimodule map in the model bases (codomain rows).
pub fn structural_map(alg: &PathAlgebra, which: StructuralMap, field: Field) -> Matrix {
    let q = alg.quiver();
    let unit = BimoduleModel::new(alg, BimoduleKind::Unit);
    match which {
        StructuralMap::I => {
            let arrows = BimoduleModel::new(alg, BimoduleKind::Arrows);
            let mut m = Matrix::zeros(field, unit.dim(), arrows.dim());
            for (col, t) in arrows.basis().iter().enumerate() {
                let a = t.mid;
                let aq = alg.mul_arrow_left(a, t.right).expect("compatible triple");
                let pa = alg.mul_arrow_right(t.left, a).expect("compatible triple");
                m.add_i64(unit.idx(t.left, q.source(a), aq), col, 1);
                m.add_i64(unit.idx(pa, q.target(a), t.right), col, -1);
            }
            m
        }
        StructuralMap::P => {
            let mut m = Matrix::zeros(field, alg.dim(), unit.dim());
            for (col, t) in unit.basis().iter().enumerate() {
                let pq = alg.mul(t.left, t.right).expect("compatible triple");
                m.add_i64(pq, col, 1);
            }
            m
        }
        StructuralMap::CTilde => {
            let dual = BimoduleModel::new(alg, BimoduleKind::DualArrows);
            let mut m = Matrix::zeros(field, dual.dim(), unit.dim());
            for (col, t) in unit.basis().iter().enumerate() {
                let v = t.mid;
                for (a, &(s, tt)) in q.arrows().iter().enumerate() {
                    if s == v {
                        let pa = alg.mul_arrow_right(t.left, a).expect("t(p) = s(a)");
                        m.add_i64(dual.idx(pa, a, t.right), col, 1);
                    }
                    if tt == v {
                        let aq = alg.mul_arrow_left(a, t.right).expect("t(a) = s(q)");
                        m.add_i64(dual.idx(t.left, a, aq), col, -1);
                    }
                }
            }
            m
        }
    }
}

/// True when `f` intertwines both actions: `f L_x = L'_x f` and `f R_x = R'_x f`.
pub fn is_bimodule_map(f: &Matrix, dom: &ActionTables, cod: &ActionTables) -> bool {
    let side = |a: &[Matrix], b: &[Matrix]| a.iter().zip(b).all(|(x, y)| f.mul(x) == y.mul(f));
    side(&dom.left, &cod.left) && side(&dom.right, &cod.right)
}
