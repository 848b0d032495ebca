//! Representations of acyclic quivers and their morphisms.
//!
//! A representation assigns a space `X_i = k^{d_i}` to each vertex and a
//! matrix `X_a` of shape `d_{t(a)} x d_{s(a)}` to each arrow. It is read as
//! a right module over the path algebra: a path `p = a1...ak` acts by
//! `X_p = X_{ak} ... X_{a1}`. Under this reading `P_i` has basis the paths
//! starting at `i` and `I_i` has basis the duals of the paths ending at `i`.

mod ext;
pub mod models;
mod resolution;

pub use ext::{
    coboundary_entries, cocycle_from_ses, cocycle_with_sections, euler_form,
    ext1_from_presentation, ses_from_cocycle, ExtClass, ExtSpace, HomSpace, Ses,
};
pub use models::{ev, ev_from_images, Coinduced, Induced, Sym, Tail};
pub use resolution::{g_tilde, proj_to_inj, std_resolutions, Comparison, StdResolutions};

use std::sync::{Arc, OnceLock};

use serde_json::{json, Value};

use crate::error::{ArError, Result};
use crate::exactmat::{Field, Matrix, Scalar};
use crate::quiver::{PathAlgebra, Quiver};

#[derive(Debug)]
struct RepData {
    alg: Arc<PathAlgebra>,
    field: Field,
    dims: Vec<usize>,
    mats: Vec<Matrix>,
    paths: OnceLock<Vec<Matrix>>,
    sparse: OnceLock<Vec<SparseArrow>>,
}

/// Nonzero entries of an arrow matrix grouped by column and by row.
#[derive(Debug)]
pub(crate) struct SparseArrow {
    pub by_col: Vec<Vec<(usize, Scalar)>>,
    pub by_row: Vec<Vec<(usize, Scalar)>>,
}

/// A finite dimensional representation. Cheap to clone.
#[derive(Clone, Debug)]
pub struct Rep {
    inner: Arc<RepData>,
}

impl PartialEq for Rep {
    fn eq(&self, other: &Rep) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.field == other.inner.field
                && self.inner.dims == other.inner.dims
                && self.inner.mats == other.inner.mats
                && self.quiver() == other.quiver())
    }
}

impl Eq for Rep {}

impl Rep {
    pub fn new(
        alg: &Arc<PathAlgebra>,
        field: Field,
        dims: Vec<usize>,
        mats: Vec<Matrix>,
    ) -> Result<Rep> {
        let q = alg.quiver();
        if dims.len() != q.vertex_count() {
            return Err(ArError::DimensionMismatch(format!(
                "{} dimensions for {} vertices",
                dims.len(),
                q.vertex_count()
            )));
        }
        if mats.len() != q.arrow_count() {
            return Err(ArError::DimensionMismatch(format!(
                "{} matrices for {} arrows",
                mats.len(),
                q.arrow_count()
            )));
        }
        for (a, m) in mats.iter().enumerate() {
            if m.field() != field {
                return Err(ArError::FieldMismatch);
            }
            let want = (dims[q.target(a)], dims[q.source(a)]);
            if m.shape() != want {
                return Err(ArError::DimensionMismatch(format!(
                    "arrow {a} has a {}x{} matrix, expected {}x{}",
                    m.rows(),
                    m.cols(),
                    want.0,
                    want.1
                )));
            }
        }
        Ok(Rep {
            inner: Arc::new(RepData {
                alg: alg.clone(),
                field,
                dims,
                mats,
                paths: OnceLock::new(),
                sparse: OnceLock::new(),
            }),
        })
    }

    pub fn zero(alg: &Arc<PathAlgebra>, field: Field) -> Rep {
        Rep::from_dims_zero(alg, field, vec![0; alg.quiver().vertex_count()])
    }

    /// Representation with the given dimensions and all arrows zero.
    pub fn from_dims_zero(alg: &Arc<PathAlgebra>, field: Field, dims: Vec<usize>) -> Rep {
        let q = alg.quiver();
        let mats = q
            .arrows()
            .iter()
            .map(|&(s, t)| Matrix::zeros(field, dims[t], dims[s]))
            .collect();
        Rep::new(alg, field, dims, mats).expect("shapes follow the dimensions")
    }

    pub fn simple(alg: &Arc<PathAlgebra>, field: Field, i: usize) -> Rep {
        let mut dims = vec![0; alg.quiver().vertex_count()];
        dims[i] = 1;
        Rep::from_dims_zero(alg, field, dims)
    }

    /// `P_i`: basis at `j` is the paths `i -> j`, arrows act by `p ↦ p a`.
    pub fn projective(alg: &Arc<PathAlgebra>, field: Field, i: usize) -> Rep {
        let q = alg.quiver();
        let slices: Vec<Vec<usize>> = (0..q.vertex_count())
            .map(|j| {
                alg.paths_from(i)
                    .iter()
                    .copied()
                    .filter(|&p| alg.path(p).target == j)
                    .collect()
            })
            .collect();
        let dims = slices.iter().map(Vec::len).collect::<Vec<_>>();
        let mats = (0..q.arrow_count())
            .map(|a| {
                let (s, t) = q.arrows()[a];
                let mut m = Matrix::zeros(field, dims[t], dims[s]);
                for (c, &p) in slices[s].iter().enumerate() {
                    let pa = alg.mul_arrow_right(p, a).expect("t(p) = s(a)");
                    let r = slices[t]
                        .iter()
                        .position(|&x| x == pa)
                        .expect("pa starts at i");
                    m.set_i64(r, c, 1);
                }
                m
            })
            .collect();
        Rep::new(alg, field, dims, mats).expect("consistent projective")
    }

    /// `I_i`: basis at `j` is the duals of the paths `j -> i`.
    pub fn injective(alg: &Arc<PathAlgebra>, field: Field, i: usize) -> Rep {
        let q = alg.quiver();
        let slices: Vec<Vec<usize>> = (0..q.vertex_count())
            .map(|j| {
                alg.paths_into(i)
                    .iter()
                    .copied()
                    .filter(|&p| alg.path(p).source == j)
                    .collect()
            })
            .collect();
        let dims = slices.iter().map(Vec::len).collect::<Vec<_>>();
        // (X_b φ)(q) = φ(b q) for b: j -> j', q: j' -> i
        let mats = (0..q.arrow_count())
            .map(|b| {
                let (s, t) = q.arrows()[b];
                let mut m = Matrix::zeros(field, dims[t], dims[s]);
                for (r, &qq) in slices[t].iter().enumerate() {
                    let bq = alg.mul_arrow_left(b, qq).expect("t(b) = s(q)");
                    let c = slices[s]
                        .iter()
                        .position(|&x| x == bq)
                        .expect("bq ends at i");
                    m.set_i64(r, c, 1);
                }
                m
            })
            .collect();
        Rep::new(alg, field, dims, mats).expect("consistent injective")
    }

    pub fn alg(&self) -> &Arc<PathAlgebra> {
        &self.inner.alg
    }

    pub fn quiver(&self) -> &Quiver {
        self.inner.alg.quiver()
    }

    pub fn field(&self) -> Field {
        self.inner.field
    }

    pub fn dims(&self) -> &[usize] {
        &self.inner.dims
    }

    pub fn dim(&self, v: usize) -> usize {
        self.inner.dims[v]
    }

    pub fn total_dim(&self) -> usize {
        self.inner.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn arrow(&self, a: usize) -> &Matrix {
        &self.inner.mats[a]
    }

    pub fn arrow_mats(&self) -> &[Matrix] {
        &self.inner.mats
    }

    pub(crate) fn sparse_arrows(&self) -> &[SparseArrow] {
        self.inner.sparse.get_or_init(|| {
            self.inner
                .mats
                .iter()
                .map(|m| {
                    let mut by_col = vec![Vec::new(); m.cols()];
                    let mut by_row = vec![Vec::new(); m.rows()];
                    for (r, c, v) in m.nonzeros() {
                        by_col[c].push((r, v.clone()));
                        by_row[r].push((c, v));
                    }
                    SparseArrow { by_col, by_row }
                })
                .collect()
        })
    }

    /// `X_p`, from `X_{s(p)}` to `X_{t(p)}`.
    pub fn path_matrix(&self, p: usize) -> &Matrix {
        &self.path_matrices()[p]
    }

    fn path_matrices(&self) -> &[Matrix] {
        self.inner.paths.get_or_init(|| {
            let alg = &self.inner.alg;
            let mut out: Vec<Matrix> = Vec::with_capacity(alg.dim());
            for (i, path) in alg.paths().iter().enumerate() {
                let m = match path.arrows.split_last() {
                    None => Matrix::identity(self.field(), self.dim(path.source)),
                    Some((&a, [])) => self.arrow(a).clone(),
                    Some((&a, prefix)) => {
                        let pre = alg.index_of(prefix).expect("prefix is a path");
                        debug_assert!(pre < i);
                        self.arrow(a).mul(&out[pre])
                    }
                };
                out.push(m);
            }
            out
        })
    }

    pub fn same_category(&self, other: &Rep) -> Result<()> {
        if self.field() != other.field() {
            return Err(ArError::FieldMismatch);
        }
        if !Arc::ptr_eq(self.alg(), other.alg()) && self.quiver() != other.quiver() {
            return Err(ArError::QuiverMismatch);
        }
        Ok(())
    }

    /// `X_1 ⊕ ... ⊕ X_r` with its inclusions and projections.
    pub fn direct_sum(parts: &[Rep]) -> Result<DirectSum> {
        let first = parts
            .first()
            .ok_or_else(|| ArError::InvalidInput("empty direct sum".into()))?;
        for p in parts {
            first.same_category(p)?;
        }
        let alg = first.alg();
        let field = first.field();
        let q = alg.quiver();
        let n = q.vertex_count();
        let dims: Vec<usize> = (0..n)
            .map(|v| parts.iter().map(|p| p.dim(v)).sum())
            .collect();
        let mats = (0..q.arrow_count())
            .map(|a| {
                let (s, t) = q.arrows()[a];
                let mut m = Matrix::zeros(field, dims[t], dims[s]);
                let (mut r0, mut c0) = (0, 0);
                for p in parts {
                    m.set_block(r0, c0, p.arrow(a));
                    r0 += p.dim(t);
                    c0 += p.dim(s);
                }
                m
            })
            .collect();
        let sum = Rep::new(alg, field, dims.clone(), mats)?;
        let mut inclusions = Vec::with_capacity(parts.len());
        let mut projections = Vec::with_capacity(parts.len());
        let mut offsets = vec![0usize; n];
        for p in parts {
            let mut inc = Vec::with_capacity(n);
            let mut pro = Vec::with_capacity(n);
            for v in 0..n {
                let mut i = Matrix::zeros(field, dims[v], p.dim(v));
                i.set_block(offsets[v], 0, &Matrix::identity(field, p.dim(v)));
                pro.push(i.transpose());
                inc.push(i);
                offsets[v] += p.dim(v);
            }
            inclusions.push(RepMorphism::new_unchecked(p.clone(), sum.clone(), inc));
            projections.push(RepMorphism::new_unchecked(sum.clone(), p.clone(), pro));
        }
        Ok(DirectSum {
            sum,
            inclusions,
            projections,
        })
    }

    /// The dual representation over the opposite quiver: dimensions kept,
    /// arrow matrices transposed onto the reversed arrows.
    pub fn dual(&self) -> Rep {
        let (op, corr) = self.quiver().opposite();
        let alg = Arc::new(PathAlgebra::new(&op));
        let mats = corr.iter().map(|&a| self.arrow(a).transpose()).collect();
        Rep::new(&alg, self.field(), self.dims().to_vec(), mats).expect("transposed shapes match")
    }

    /// Same data over another (equal) path algebra handle.
    pub fn rebase(&self, alg: &Arc<PathAlgebra>) -> Result<Rep> {
        if alg.quiver() != self.quiver() {
            return Err(ArError::QuiverMismatch);
        }
        Rep::new(
            alg,
            self.field(),
            self.dims().to_vec(),
            self.arrow_mats().to_vec(),
        )
    }

    pub fn to_json(&self) -> Value {
        json!({
            "dims": self.dims(),
            "mats": self.arrow_mats().iter().map(Matrix::to_json_flat).collect::<Vec<_>>(),
            "field": self.field(),
        })
    }

    /// Parses `{"dims": [...], "mats": [[...], ...], "field": ...}`.
    /// A missing field defaults to `default_field`.
    pub fn from_json(alg: &Arc<PathAlgebra>, v: &Value, default_field: Field) -> Result<Rep> {
        let field = match v.get("field") {
            Some(f) => serde_json::from_value(f.clone())
                .map_err(|e| ArError::InvalidInput(e.to_string()))?,
            None => default_field,
        };
        let dims: Vec<usize> = serde_json::from_value(
            v.get("dims")
                .cloned()
                .ok_or_else(|| ArError::InvalidInput("missing `dims`".into()))?,
        )
        .map_err(|e| ArError::InvalidInput(format!("bad `dims`: {e}")))?;
        let q = alg.quiver();
        if dims.len() != q.vertex_count() {
            return Err(ArError::DimensionMismatch(format!(
                "{} dimensions for {} vertices",
                dims.len(),
                q.vertex_count()
            )));
        }
        let raw = match v.get("mats") {
            Some(Value::Array(a)) => a.clone(),
            None if q.arrow_count() == 0 => vec![],
            _ => return Err(ArError::InvalidInput("missing or malformed `mats`".into())),
        };
        if raw.len() != q.arrow_count() {
            return Err(ArError::DimensionMismatch(format!(
                "{} matrices for {} arrows",
                raw.len(),
                q.arrow_count()
            )));
        }
        let mats = raw
            .iter()
            .enumerate()
            .map(|(a, m)| {
                let (s, t) = q.arrows()[a];
                parse_matrix(field, dims[t], dims[s], m)
            })
            .collect::<Result<Vec<_>>>()?;
        Rep::new(alg, field, dims, mats)
    }
}

/// Row-major flat list (or list of rows) of scalars.
pub(crate) fn parse_matrix(field: Field, rows: usize, cols: usize, v: &Value) -> Result<Matrix> {
    let Value::Array(items) = v else {
        return Err(ArError::InvalidInput("matrix must be an array".into()));
    };
    let flat: Vec<&Value> = if items.iter().all(Value::is_array) && !items.is_empty() {
        items
            .iter()
            .flat_map(|r| r.as_array().expect("checked").iter())
            .collect()
    } else {
        items.iter().collect()
    };
    let entries = flat
        .into_iter()
        .map(|x| Scalar::from_json(field, x))
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_scalars(field, rows, cols, &entries)
}

#[derive(Clone, Debug)]
pub struct DirectSum {
    pub sum: Rep,
    pub inclusions: Vec<RepMorphism>,
    pub projections: Vec<RepMorphism>,
}

/// A vertexwise linear map `f_i: X_i -> Y_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepMorphism {
    dom: Rep,
    cod: Rep,
    maps: Vec<Matrix>,
}

/// Kernel of a morphism with its inclusion.
#[derive(Clone, Debug)]
pub struct Sub {
    pub rep: Rep,
    pub inclusion: RepMorphism,
}

/// Cokernel of a morphism with its projection and vertexwise sections.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub rep: Rep,
    pub projection: RepMorphism,
    pub section: Vec<Matrix>,
}

impl Quotient {
    /// Lifts `g: quotient -> W` to the morphism `g ∘ projection`.
    pub fn lift_through(&self, g: &RepMorphism) -> RepMorphism {
        g.compose(&self.projection)
    }
}

impl RepMorphism {
    /// Checks shapes and the intertwining relation `f_{t(a)} X_a = Y_a f_{s(a)}`.
    pub fn new(dom: Rep, cod: Rep, maps: Vec<Matrix>) -> Result<RepMorphism> {
        dom.same_category(&cod)?;
        if maps.len() != dom.quiver().vertex_count() {
            return Err(ArError::DimensionMismatch(
                "one matrix per vertex expected".into(),
            ));
        }
        for (v, m) in maps.iter().enumerate() {
            if m.shape() != (cod.dim(v), dom.dim(v)) {
                return Err(ArError::DimensionMismatch(format!(
                    "vertex {v}: {}x{} matrix for a map k^{} -> k^{}",
                    m.rows(),
                    m.cols(),
                    dom.dim(v),
                    cod.dim(v)
                )));
            }
            if m.field() != dom.field() {
                return Err(ArError::FieldMismatch);
            }
        }
        let f = RepMorphism { dom, cod, maps };
        if let Some(a) = f.intertwining_defect() {
            return Err(ArError::NotIntertwining(format!("fails at arrow {a}")));
        }
        Ok(f)
    }

    pub fn new_unchecked(dom: Rep, cod: Rep, maps: Vec<Matrix>) -> RepMorphism {
        debug_assert_eq!(maps.len(), dom.quiver().vertex_count());
        RepMorphism { dom, cod, maps }
    }

    /// First arrow where the intertwining relation fails.
    pub fn intertwining_defect(&self) -> Option<usize> {
        let q = self.dom.quiver();
        (0..q.arrow_count()).find(|&a| {
            let (s, t) = q.arrows()[a];
            self.maps[t].mul(self.dom.arrow(a)) != self.cod.arrow(a).mul(&self.maps[s])
        })
    }

    pub fn is_intertwining(&self) -> bool {
        self.intertwining_defect().is_none()
    }

    pub fn identity(x: &Rep) -> RepMorphism {
        let maps = x
            .dims()
            .iter()
            .map(|&d| Matrix::identity(x.field(), d))
            .collect();
        RepMorphism::new_unchecked(x.clone(), x.clone(), maps)
    }

    pub fn zero(dom: &Rep, cod: &Rep) -> RepMorphism {
        let maps = (0..dom.quiver().vertex_count())
            .map(|v| Matrix::zeros(dom.field(), cod.dim(v), dom.dim(v)))
            .collect();
        RepMorphism::new_unchecked(dom.clone(), cod.clone(), maps)
    }

    pub fn dom(&self) -> &Rep {
        &self.dom
    }

    pub fn cod(&self) -> &Rep {
        &self.cod
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    pub fn at(&self, v: usize) -> &Matrix {
        &self.maps[v]
    }

    pub fn is_zero(&self) -> bool {
        self.maps.iter().all(Matrix::is_zero)
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &RepMorphism) -> RepMorphism {
        debug_assert_eq!(first.cod.dims(), self.dom.dims());
        let maps = self
            .maps
            .iter()
            .zip(&first.maps)
            .map(|(g, f)| g.mul(f))
            .collect();
        RepMorphism::new_unchecked(first.dom.clone(), self.cod.clone(), maps)
    }

    pub fn add(&self, other: &RepMorphism) -> RepMorphism {
        let maps = self
            .maps
            .iter()
            .zip(&other.maps)
            .map(|(f, g)| f.add(g))
            .collect();
        RepMorphism::new_unchecked(self.dom.clone(), self.cod.clone(), maps)
    }

    pub fn sub(&self, other: &RepMorphism) -> RepMorphism {
        let maps = self
            .maps
            .iter()
            .zip(&other.maps)
            .map(|(f, g)| f.sub(g))
            .collect();
        RepMorphism::new_unchecked(self.dom.clone(), self.cod.clone(), maps)
    }

    pub fn scale(&self, s: &Scalar) -> RepMorphism {
        let maps = self.maps.iter().map(|f| f.scale(s)).collect();
        RepMorphism::new_unchecked(self.dom.clone(), self.cod.clone(), maps)
    }

    pub fn neg(&self) -> RepMorphism {
        let maps = self.maps.iter().map(Matrix::neg).collect();
        RepMorphism::new_unchecked(self.dom.clone(), self.cod.clone(), maps)
    }

    /// Same maps between other (equal-shaped) endpoints.
    pub fn retarget(&self, dom: &Rep, cod: &Rep) -> RepMorphism {
        debug_assert_eq!(dom.dims(), self.dom.dims());
        debug_assert_eq!(cod.dims(), self.cod.dims());
        RepMorphism::new_unchecked(dom.clone(), cod.clone(), self.maps.clone())
    }

    /// Vertexwise injective.
    pub fn is_injective(&self) -> bool {
        self.maps.iter().all(|m| m.rank() == m.cols())
    }

    /// Vertexwise surjective.
    pub fn is_surjective(&self) -> bool {
        self.maps.iter().all(|m| m.rank() == m.rows())
    }

    pub fn kernel(&self) -> Result<Sub> {
        let q = self.dom.quiver();
        let field = self.dom.field();
        let incl: Vec<Matrix> = self.maps.iter().map(Matrix::kernel).collect();
        let dims: Vec<usize> = incl.iter().map(Matrix::cols).collect();
        let mut mats = Vec::with_capacity(q.arrow_count());
        for a in 0..q.arrow_count() {
            let (s, t) = q.arrows()[a];
            let rhs = self.dom.arrow(a).mul(&incl[s]);
            let m = incl[t].solve(&rhs)?.ok_or_else(|| {
                ArError::NotIntertwining(format!("kernel is not closed under arrow {a}"))
            })?;
            mats.push(m);
        }
        let rep = Rep::new(self.dom.alg(), field, dims, mats)?;
        let inclusion = RepMorphism::new_unchecked(rep.clone(), self.dom.clone(), incl);
        Ok(Sub { rep, inclusion })
    }

    pub fn cokernel(&self) -> Result<Quotient> {
        let q = self.dom.quiver();
        let field = self.dom.field();
        let data: Vec<_> = self.maps.iter().map(Matrix::cokernel).collect();
        let dims: Vec<usize> = data.iter().map(|c| c.projection.rows()).collect();
        let mut mats = Vec::with_capacity(q.arrow_count());
        for a in 0..q.arrow_count() {
            let (s, t) = q.arrows()[a];
            let m = data[t]
                .projection
                .mul(self.cod.arrow(a))
                .mul(&data[s].section);
            // must satisfy m q_s = q_t Y_a
            if m.mul(&data[s].projection) != data[t].projection.mul(self.cod.arrow(a)) {
                return Err(ArError::NotIntertwining(format!(
                    "arrow {a} does not descend to the cokernel"
                )));
            }
            mats.push(m);
        }
        let rep = Rep::new(self.dom.alg(), field, dims, mats)?;
        let projection = RepMorphism::new_unchecked(
            self.cod.clone(),
            rep.clone(),
            data.iter().map(|c| c.projection.clone()).collect(),
        );
        Ok(Quotient {
            rep,
            projection,
            section: data.into_iter().map(|c| c.section).collect(),
        })
    }

    /// Corestriction to a subrepresentation containing the image.
    pub fn corestrict(&self, sub: &Sub) -> Result<RepMorphism> {
        let maps = self
            .maps
            .iter()
            .zip(sub.inclusion.maps())
            .map(|(f, inc)| {
                inc.solve(f)?
                    .ok_or_else(|| ArError::Inconsistent("image not contained in subobject".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(RepMorphism::new_unchecked(
            self.dom.clone(),
            sub.rep.clone(),
            maps,
        ))
    }

    pub fn to_json(&self) -> Value {
        json!({
            "dims_from": self.dom.dims(),
            "dims_to": self.cod.dims(),
            "maps": self.maps.iter().map(Matrix::to_json_flat).collect::<Vec<_>>(),
            "field": self.dom.field(),
        })
    }

    /// Parses `{"maps": [[...], ...]}` between given endpoints.
    pub fn from_json(dom: &Rep, cod: &Rep, v: &Value) -> Result<RepMorphism> {
        let raw = v
            .get("maps")
            .and_then(Value::as_array)
            .ok_or_else(|| ArError::InvalidInput("missing `maps`".into()))?;
        if raw.len() != dom.quiver().vertex_count() {
            return Err(ArError::DimensionMismatch(
                "one matrix per vertex expected".into(),
            ));
        }
        let maps = raw
            .iter()
            .enumerate()
            .map(|(i, m)| parse_matrix(dom.field(), cod.dim(i), dom.dim(i), m))
            .collect::<Result<Vec<_>>>()?;
        RepMorphism::new(dom.clone(), cod.clone(), maps)
    }
}

/// True when `0 -> Y -ι-> E -π-> X -> 0` is exact at every vertex.
pub fn is_exact_pair(iota: &RepMorphism, pi: &RepMorphism) -> bool {
    iota.is_injective()
        && pi.is_surjective()
        && pi.compose(iota).is_zero()
        && (0..iota.dom().quiver().vertex_count())
            .all(|v| iota.at(v).cols() + pi.at(v).rows() == pi.at(v).cols())
}

/// `Σ_i dim Hom(I_i, X) > 0`; over a hereditary algebra this detects a
/// nonzero injective summand.
pub fn has_injective_summand(x: &Rep) -> bool {
    let n = x.quiver().vertex_count();
    (0..n).any(|i| {
        HomSpace::new(&Rep::injective(x.alg(), x.field(), i), x)
            .map(|h| h.dim() > 0)
            .unwrap_or(false)
    })
}

/// `Σ_i dim Hom(X, P_i) > 0`; detects a nonzero projective summand.
pub fn has_projective_summand(x: &Rep) -> bool {
    let n = x.quiver().vertex_count();
    (0..n).any(|i| {
        HomSpace::new(x, &Rep::projective(x.alg(), x.field(), i))
            .map(|h| h.dim() > 0)
            .unwrap_or(false)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmat::mat;

    const Q: Field = Field::Rational;

    fn a2() -> Arc<PathAlgebra> {
        Arc::new(PathAlgebra::new(&Quiver::linear(2)))
    }

    #[test]
    fn indecomposable_models_a2() {
        let alg = a2();
        let p0 = Rep::projective(&alg, Q, 0);
        assert_eq!(p0.dims(), &[1, 1]);
        assert_eq!(p0.arrow(0), &mat(Q, 1, 1, &[1]));
        assert_eq!(Rep::projective(&alg, Q, 1), Rep::simple(&alg, Q, 1));
        assert_eq!(Rep::injective(&alg, Q, 0), Rep::simple(&alg, Q, 0));
        assert_eq!(Rep::injective(&alg, Q, 1).dims(), &[1, 1]);
    }

    #[test]
    fn projective_of_a3_has_path_basis() {
        let alg = Arc::new(PathAlgebra::new(&Quiver::linear(3)));
        let p0 = Rep::projective(&alg, Q, 0);
        assert_eq!(p0.dims(), &[1, 1, 1]);
        assert_eq!(p0.path_matrix(5), &mat(Q, 1, 1, &[1]));
        let i2 = Rep::injective(&alg, Q, 2);
        assert_eq!(i2.dims(), &[1, 1, 1]);
    }

    #[test]
    fn dual_transposes() {
        let alg = a2();
        let s0 = Rep::simple(&alg, Q, 0);
        let d = s0.dual();
        assert_eq!(d.dims(), &[1, 0]);
        assert_eq!(d.quiver().arrows(), &[(1, 0)]);
        let p0 = Rep::projective(&alg, Q, 0).dual();
        assert_eq!(p0.dims(), &[1, 1]);
        let inj = Rep::injective(p0.alg(), Q, 0);
        assert_eq!(p0, inj);
        let x = Rep::new(&alg, Q, vec![2, 1], vec![mat(Q, 1, 2, &[3, -1])]).unwrap();
        assert_eq!(x.dual().dual().arrow_mats(), x.arrow_mats());
    }

    #[test]
    fn kernels_and_cokernels() {
        let alg = a2();
        let p0 = Rep::projective(&alg, Q, 0);
        let s1 = Rep::simple(&alg, Q, 1);
        let iota = RepMorphism::new(
            s1.clone(),
            p0.clone(),
            vec![mat(Q, 1, 0, &[]), mat(Q, 1, 1, &[1])],
        )
        .unwrap();
        let c = iota.cokernel().unwrap();
        assert_eq!(c.rep, Rep::simple(&alg, Q, 0));
        let id = RepMorphism::identity(&p0);
        assert!(id.cokernel().unwrap().rep.is_zero());
        let z = RepMorphism::zero(&p0, &s1);
        assert_eq!(z.kernel().unwrap().rep, p0);
        assert!(RepMorphism::new(
            p0.clone(),
            s1.clone(),
            vec![mat(Q, 0, 1, &[]), mat(Q, 1, 1, &[1])]
        )
        .is_err());
        assert!(RepMorphism::new(
            s1,
            Rep::simple(&alg, Q, 0),
            vec![mat(Q, 1, 0, &[]), mat(Q, 0, 1, &[])]
        )
        .is_ok());
    }

    #[test]
    fn rejects_non_intertwiners() {
        let alg = a2();
        let p0 = Rep::projective(&alg, Q, 0);
        let s0 = Rep::simple(&alg, Q, 0);
        // P0 -> S0 projecting the top is fine; S0 -> P0 hitting the top is not.
        assert!(RepMorphism::new(
            p0.clone(),
            s0.clone(),
            vec![mat(Q, 1, 1, &[1]), mat(Q, 0, 1, &[])]
        )
        .is_ok());
        assert!(matches!(
            RepMorphism::new(s0, p0, vec![mat(Q, 1, 1, &[1]), mat(Q, 1, 0, &[])]),
            Err(ArError::NotIntertwining(_))
        ));
    }

    #[test]
    fn json_round_trip() {
        let alg = a2();
        let x = Rep::new(&alg, Q, vec![2, 1], vec![mat(Q, 1, 2, &[3, -1])]).unwrap();
        let js = x.to_json();
        assert_eq!(js, json!({"dims": [2, 1], "mats": [[3, -1]], "field": "Q"}));
        assert_eq!(Rep::from_json(&alg, &js, Field::default()).unwrap(), x);
        let bad = json!({"dims": [2, 1], "mats": [[3]]});
        assert!(Rep::from_json(&alg, &bad, Q).is_err());
    }

    #[test]
    fn injective_summand_detection() {
        let alg = a2();
        assert!(has_injective_summand(&Rep::injective(&alg, Q, 1)));
        assert!(has_injective_summand(&Rep::simple(&alg, Q, 0)));
        assert!(!has_injective_summand(&Rep::simple(&alg, Q, 1)));
        assert!(!has_injective_summand(&Rep::zero(&alg, Q)));
        assert!(has_projective_summand(&Rep::simple(&alg, Q, 1)));
        assert!(!has_projective_summand(&Rep::simple(&alg, Q, 0)));
    }
}
