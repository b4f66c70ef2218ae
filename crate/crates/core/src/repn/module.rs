use std::fmt;
use std::sync::Arc;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::exactla::{left_kernel_basis, rank, Coordinates, Field, Matrix, RowSpace};

/// A finite-dimensional right module in vertex-adapted form.
///
/// The underlying space is `⊕_i M e_i`, with `dims[i] = dim M e_i`. A basis
/// element `b` of the algebra pointed `(s, t)` acts by a `dims[s] × dims[t]`
/// block (row vectors: `m ↦ m·b` sends `M e_s` to `M e_t`).
#[derive(Clone)]
pub struct Module {
    algebra: Arc<Algebra>,
    dims: Vec<usize>,
    offsets: Vec<usize>,
    action: Vec<Matrix>,
}

impl fmt::Debug for Module {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Module").field("dims", &self.dims).finish()
    }
}

fn offsets_of(dims: &[usize]) -> Vec<usize> {
    let mut off = Vec::with_capacity(dims.len() + 1);
    let mut acc = 0;
    off.push(0);
    for &d in dims {
        acc += d;
        off.push(acc);
    }
    off
}

impl Module {
    /// Validating constructor: checks block shapes, unit action and every
    /// structure constant of the algebra.
    pub fn new(algebra: Arc<Algebra>, dims: Vec<usize>, action: Vec<Matrix>) -> Result<Module> {
        if dims.len() != algebra.num_vertices() || action.len() != algebra.dim() {
            return Err(Error::InvalidModule("dimension vector or action list has the wrong length".into()));
        }
        for (b, m) in action.iter().enumerate() {
            let (s, t) = algebra.pointing(b);
            if m.shape() != (dims[s], dims[t]) {
                return Err(Error::InvalidModule(format!(
                    "action of `{}` has shape {:?}, expected {:?}",
                    algebra.labels()[b],
                    m.shape(),
                    (dims[s], dims[t])
                )));
            }
            if m.field() != algebra.field() {
                return Err(Error::InvalidModule("action matrix over the wrong field".into()));
            }
        }
        let m = Module::from_parts(algebra, dims, action);
        m.check_action()?;
        Ok(m)
    }

    pub(crate) fn from_parts(algebra: Arc<Algebra>, dims: Vec<usize>, action: Vec<Matrix>) -> Module {
        debug_assert_eq!(action.len(), algebra.dim());
        let offsets = offsets_of(&dims);
        Module { algebra, dims, offsets, action }
    }

    fn check_action(&self) -> Result<()> {
        let a = &self.algebra;
        for (i, &e) in a.idempotents().iter().enumerate() {
            if self.action[e] != Matrix::identity(a.field(), self.dims[i]) {
                return Err(Error::InvalidModule(format!("idempotent e_{} does not act as identity", a.vertices()[i])));
            }
        }
        for x in 0..a.dim() {
            for y in 0..a.dim() {
                let (s, t) = a.pointing(x);
                let (t2, u) = a.pointing(y);
                if t != t2 {
                    continue;
                }
                let lhs = self.action[x].mul(&self.action[y]);
                let mut rhs = Matrix::zeros(a.field(), self.dims[s], self.dims[u]);
                for &(z, c) in a.product(x, y) {
                    rhs.add_scaled(c, &self.action[z]);
                }
                if lhs != rhs {
                    return Err(Error::InvalidModule(format!(
                        "action does not respect the product `{}`·`{}`",
                        a.labels()[x],
                        a.labels()[y]
                    )));
                }
            }
        }
        Ok(())
    }

    /// Re-runs the full validation (used by tests on derived modules).
    pub fn validate(&self) -> Result<()> {
        self.check_action()
    }

    pub fn zero(algebra: &Arc<Algebra>) -> Module {
        let dims = vec![0; algebra.num_vertices()];
        let action = (0..algebra.dim()).map(|_| Matrix::zeros(algebra.field(), 0, 0)).collect();
        Module::from_parts(algebra.clone(), dims, action)
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }

    pub fn dim(&self) -> usize {
        *self.offsets.last().unwrap()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn offset(&self, i: usize) -> usize {
        self.offsets[i]
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    /// Action block of basis element `b`.
    pub fn act(&self, b: usize) -> &Matrix {
        &self.action[b]
    }

    pub fn actions(&self) -> &[Matrix] {
        &self.action
    }

    /// Action of the element `Σ elem[b] b`, restricted to basis elements pointed `(s, t)`.
    pub fn act_element(&self, s: usize, t: usize, elem: &[u32]) -> Matrix {
        let mut m = Matrix::zeros(self.field(), self.dims[s], self.dims[t]);
        for &b in self.algebra.pointed(s, t) {
            m.add_scaled(elem[b], &self.action[b]);
        }
        m
    }

    /// Action of `b` on the whole space.
    pub fn full_action(&self, b: usize) -> Matrix {
        let (s, t) = self.algebra.pointing(b);
        let mut m = Matrix::zeros(self.field(), self.dim(), self.dim());
        m.set_block(self.offsets[s], self.offsets[t], &self.action[b]);
        m
    }

    pub fn same_algebra(&self, other: &Module) -> bool {
        self.algebra.same_as(&other.algebra)
    }

    pub(crate) fn check_same(&self, other: &Module) -> Result<()> {
        if self.same_algebra(other) {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    /// `M·rad` per vertex: vertex `t` is spanned by the images of generators ending at `t`.
    pub fn radical_spaces(&self) -> Vec<RowSpace> {
        let f = self.field();
        let a = &self.algebra;
        (0..a.num_vertices())
            .map(|t| {
                let mut rows = Vec::new();
                for &g in a.generators() {
                    if a.pointing(g).1 == t {
                        rows.extend(self.action[g].row_vecs());
                    }
                }
                RowSpace::from_vecs(f, self.dims[t], &rows)
            })
            .collect()
    }

    /// Socle per vertex: vectors killed by every generator.
    pub fn socle_spaces(&self) -> Vec<RowSpace> {
        let f = self.field();
        let a = &self.algebra;
        (0..a.num_vertices())
            .map(|s| {
                let blocks: Vec<&Matrix> =
                    a.generators().iter().filter(|&&g| a.pointing(g).0 == s).map(|&g| &self.action[g]).collect();
                if blocks.is_empty() {
                    return RowSpace::full(f, self.dims[s]);
                }
                let h = Matrix::hstack(f, self.dims[s], &blocks);
                RowSpace::from_vecs(f, self.dims[s], &left_kernel_basis(&h))
            })
            .collect()
    }

    /// Smallest submodule containing the given per-vertex vectors.
    pub fn generated_spaces(&self, gens: &[Vec<Vec<u32>>]) -> Vec<RowSpace> {
        let f = self.field();
        let a = &self.algebra;
        let nv = a.num_vertices();
        let mut spaces: Vec<RowSpace> = (0..nv).map(|i| RowSpace::from_vecs(f, self.dims[i], &gens[i])).collect();
        loop {
            let mut grown = false;
            for &g in a.generators() {
                let (s, t) = a.pointing(g);
                let imgs: Vec<Vec<u32>> = spaces[s].basis().mul(&self.action[g]).row_vecs();
                let extra = RowSpace::from_vecs(f, self.dims[t], &imgs);
                if !spaces[t].contains_space(&extra) {
                    spaces[t] = spaces[t].sum(&extra);
                    grown = true;
                }
            }
            if !grown {
                return spaces;
            }
        }
    }

    /// Whether per-vertex subspaces form a submodule.
    pub fn is_invariant(&self, spaces: &[RowSpace]) -> bool {
        let a = &self.algebra;
        a.generators().iter().all(|&g| {
            let (s, t) = a.pointing(g);
            spaces[s].basis().mul(&self.action[g]).row_vecs().iter().all(|v| spaces[t].contains(v))
        })
    }

    /// Submodule on invariant per-vertex subspaces, with its inclusion.
    /// The basis at each vertex is the echelon basis of the subspace.
    pub fn submodule(&self, spaces: &[RowSpace]) -> (Module, ModMap) {
        debug_assert!(self.is_invariant(spaces));
        let f = self.field();
        let a = &self.algebra;
        let dims: Vec<usize> = spaces.iter().map(|s| s.dim()).collect();
        let action = (0..a.dim())
            .map(|b| {
                let (s, t) = a.pointing(b);
                let imgs = spaces[s].basis().mul(&self.action[b]);
                let rows: Vec<Vec<u32>> = (0..imgs.rows())
                    .map(|r| spaces[t].coords(imgs.row(r)).expect("subspace is invariant"))
                    .collect();
                Matrix::from_row_vecs(f, dims[t], &rows)
            })
            .collect();
        let sub = Module::from_parts(a.clone(), dims, action);
        let incl = ModMap::new(spaces.iter().map(|s| s.basis().clone()).collect());
        (sub, incl)
    }

    /// Quotient by invariant per-vertex subspaces, with the projection.
    /// The quotient basis at each vertex is the classes of the unit vectors
    /// outside the pivot columns of the subspace.
    pub fn quotient(&self, spaces: &[RowSpace]) -> (Module, ModMap) {
        debug_assert!(self.is_invariant(spaces));
        let f = self.field();
        let a = &self.algebra;
        let comps: Vec<Vec<usize>> = spaces.iter().map(|s| s.complement()).collect();
        let dims: Vec<usize> = comps.iter().map(|c| c.len()).collect();
        // projection: reduce each unit vector and read off complement columns
        let proj: Vec<Matrix> = (0..a.num_vertices())
            .map(|i| {
                let rows: Vec<Vec<u32>> = (0..self.dims[i])
                    .map(|j| {
                        let mut e = vec![0u32; self.dims[i]];
                        e[j] = 1;
                        let r = spaces[i].reduce(&e);
                        comps[i].iter().map(|&c| r[c]).collect()
                    })
                    .collect();
                Matrix::from_row_vecs(f, dims[i], &rows)
            })
            .collect();
        let action = (0..a.dim())
            .map(|b| {
                let (s, t) = a.pointing(b);
                self.action[b].select_rows(&comps[s]).mul(&proj[t])
            })
            .collect();
        (Module::from_parts(a.clone(), dims, action), ModMap::new(proj))
    }

    pub fn kernel_of(&self, f: &ModMap) -> (Module, ModMap) {
        let fl = self.field();
        let spaces: Vec<RowSpace> = f
            .blocks
            .iter()
            .enumerate()
            .map(|(i, b)| RowSpace::from_vecs(fl, self.dims[i], &left_kernel_basis(b)))
            .collect();
        self.submodule(&spaces)
    }

    /// Image of `f` as a submodule of `self` (the target of `f`).
    pub fn image_spaces(&self, f: &ModMap) -> Vec<RowSpace> {
        f.blocks
            .iter()
            .enumerate()
            .map(|(i, b)| RowSpace::from_vecs(self.field(), self.dims[i], &b.row_vecs()))
            .collect()
    }

    pub fn image_of(&self, f: &ModMap) -> (Module, ModMap) {
        self.submodule(&self.image_spaces(f))
    }

    pub fn cokernel_of(&self, f: &ModMap) -> (Module, ModMap) {
        self.quotient(&self.image_spaces(f))
    }

    /// Restricts `f: N → self` along a submodule given by its inclusion
    /// (`f` must land in it).
    pub fn corestrict(sub_incl: &ModMap, f: &ModMap) -> ModMap {
        let blocks = f
            .blocks
            .iter()
            .zip(&sub_incl.blocks)
            .map(|(fb, ib)| {
                let fl = fb.field();
                let space = Coordinates::new(ib);
                let rows: Vec<Vec<u32>> =
                    (0..fb.rows()).map(|r| space.coords(fb.row(r)).expect("map lands in the submodule")).collect();
                Matrix::from_row_vecs(fl, ib.rows(), &rows)
            })
            .collect();
        ModMap::new(blocks)
    }

    /// Direct sum with canonical injections and projections.
    pub fn direct_sum(ms: &[Module], algebra: &Arc<Algebra>) -> Result<(Module, Vec<ModMap>, Vec<ModMap>)> {
        for m in ms {
            if !m.algebra.same_as(algebra) {
                return Err(Error::AlgebraMismatch);
            }
        }
        let f = algebra.field();
        let nv = algebra.num_vertices();
        let dims: Vec<usize> = (0..nv).map(|i| ms.iter().map(|m| m.dims[i]).sum()).collect();
        let action = (0..algebra.dim())
            .map(|b| {
                let blocks: Vec<&Matrix> = ms.iter().map(|m| &m.action[b]).collect();
                Matrix::block_diagonal(f, &blocks)
            })
            .collect();
        let sum = Module::from_parts(algebra.clone(), dims.clone(), action);
        let mut incs = Vec::new();
        let mut projs = Vec::new();
        let mut starts = vec![0usize; nv];
        for m in ms {
            let mut ib = Vec::new();
            let mut pb = Vec::new();
            for i in 0..nv {
                let mut inc = Matrix::zeros(f, m.dims[i], dims[i]);
                inc.set_block(0, starts[i], &Matrix::identity(f, m.dims[i]));
                pb.push(inc.transpose());
                ib.push(inc);
                starts[i] += m.dims[i];
            }
            incs.push(ModMap::new(ib));
            projs.push(ModMap::new(pb));
        }
        Ok((sum, incs, projs))
    }

    pub fn sum(ms: &[Module], algebra: &Arc<Algebra>) -> Result<Module> {
        Ok(Module::direct_sum(ms, algebra)?.0)
    }

    /// Module transported along per-vertex change of basis `g_i` (rows = new basis vectors).
    pub fn change_basis(&self, basis: &[Matrix]) -> Module {
        let a = &self.algebra;
        let inv: Vec<Matrix> = basis.iter().map(|b| crate::exactla::inverse(b).expect("invertible change of basis")).collect();
        let action = (0..a.dim())
            .map(|b| {
                let (s, t) = a.pointing(b);
                basis[s].mul(&self.action[b]).mul(&inv[t])
            })
            .collect();
        Module::from_parts(a.clone(), self.dims.clone(), action)
    }
}

/// An A-linear map, stored as one block per vertex (`m ↦ m·F`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModMap {
    blocks: Vec<Matrix>,
}

impl ModMap {
    pub fn new(blocks: Vec<Matrix>) -> ModMap {
        ModMap { blocks }
    }

    pub fn zero(src: &Module, dst: &Module) -> ModMap {
        let f = src.field();
        ModMap { blocks: (0..src.dims.len()).map(|i| Matrix::zeros(f, src.dims[i], dst.dims[i])).collect() }
    }

    pub fn identity(m: &Module) -> ModMap {
        let f = m.field();
        ModMap { blocks: m.dims.iter().map(|&d| Matrix::identity(f, d)).collect() }
    }

    pub fn blocks(&self) -> &[Matrix] {
        &self.blocks
    }

    pub fn block(&self, i: usize) -> &Matrix {
        &self.blocks[i]
    }

    pub fn src_dims(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.rows()).collect()
    }

    pub fn dst_dims(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.cols()).collect()
    }

    /// `self` followed by `g`, i.e. `g ∘ self`.
    pub fn then(&self, g: &ModMap) -> ModMap {
        ModMap { blocks: self.blocks.iter().zip(&g.blocks).map(|(a, b)| a.mul(b)).collect() }
    }

    pub fn add(&self, g: &ModMap) -> ModMap {
        ModMap { blocks: self.blocks.iter().zip(&g.blocks).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn sub(&self, g: &ModMap) -> ModMap {
        ModMap { blocks: self.blocks.iter().zip(&g.blocks).map(|(a, b)| a.sub(b)).collect() }
    }

    pub fn scale(&self, c: u32) -> ModMap {
        ModMap { blocks: self.blocks.iter().map(|a| a.scale(c)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(|b| b.is_zero())
    }

    pub fn rank(&self) -> usize {
        self.blocks.iter().map(rank).sum()
    }

    pub fn is_injective(&self) -> bool {
        self.blocks.iter().all(|b| rank(b) == b.rows())
    }

    pub fn is_surjective(&self) -> bool {
        self.blocks.iter().all(|b| rank(b) == b.cols())
    }

    pub fn is_iso(&self) -> bool {
        self.blocks.iter().all(|b| b.is_square() && rank(b) == b.rows())
    }

    /// Concatenation of the blocks, row-major.
    pub fn flatten(&self) -> Vec<u32> {
        let mut v = Vec::new();
        for b in &self.blocks {
            v.extend_from_slice(b.data());
        }
        v
    }

    pub fn from_flat(field: Field, src: &[usize], dst: &[usize], v: &[u32]) -> ModMap {
        let mut pos = 0;
        let blocks = src
            .iter()
            .zip(dst)
            .map(|(&r, &c)| {
                let m = Matrix::from_vec(field, r, c, v[pos..pos + r * c].to_vec());
                pos += r * c;
                m
            })
            .collect();
        ModMap { blocks }
    }

    /// Block-diagonal matrix on the full spaces.
    pub fn full_matrix(&self, field: Field) -> Matrix {
        let blocks: Vec<&Matrix> = self.blocks.iter().collect();
        Matrix::block_diagonal(field, &blocks)
    }

    /// Checks `act_M(b)·F_t = F_s·act_N(b)` for all algebra generators.
    pub fn is_linear(&self, src: &Module, dst: &Module) -> bool {
        if self.src_dims() != src.dims || self.dst_dims() != dst.dims {
            return false;
        }
        let a = src.algebra();
        a.generators().iter().all(|&g| {
            let (s, t) = a.pointing(g);
            src.act(g).mul(&self.blocks[t]) == self.blocks[s].mul(dst.act(g))
        })
    }

    /// The dual map `D N → D M` over the opposite algebra.
    pub fn dual(&self) -> ModMap {
        ModMap { blocks: self.blocks.iter().map(|b| b.transpose()).collect() }
    }

    /// `[f_1 ... f_k]`: map into a direct sum given componentwise.
    pub fn hstack(maps: &[ModMap], src_dims: &[usize], field: Field) -> ModMap {
        let blocks = (0..src_dims.len())
            .map(|i| {
                let parts: Vec<&Matrix> = maps.iter().map(|m| &m.blocks[i]).collect();
                Matrix::hstack(field, src_dims[i], &parts)
            })
            .collect();
        ModMap { blocks }
    }

    /// Map out of a direct sum given componentwise.
    pub fn vstack(maps: &[ModMap], dst_dims: &[usize], field: Field) -> ModMap {
        let blocks = (0..dst_dims.len())
            .map(|i| {
                let parts: Vec<&Matrix> = maps.iter().map(|m| &m.blocks[i]).collect();
                Matrix::vstack(field, dst_dims[i], &parts)
            })
            .collect();
        ModMap { blocks }
    }
}
