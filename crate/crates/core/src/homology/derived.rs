use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::exactla::{kron, rank, Matrix, RowSpace};
use crate::repn::{hom_dim, hom_space, is_injective, ModMap, Module};

use super::resolution::{min_inj_coresolution, min_proj_resolution, proj_sum, Resolution};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtValue {
    pub k: usize,
    pub dim: usize,
}

fn check_opposite(m: &Module, n: &Module) -> Result<()> {
    if n.algebra().same_as(&m.algebra().opposite()) {
        Ok(())
    } else {
        Err(Error::AlgebraMismatch)
    }
}

/// `dim C^k` where `C^k = Hom_A(P_k, N) = ⊕_l N e_{v_l}`.
fn cochain_dim(res: &Resolution, n: &Module, k: usize) -> usize {
    res.vertices_at(k).iter().map(|&v| n.dims()[v]).sum()
}

/// `δ^k = Hom(d_k, N): C^{k−1} → C^k` for `k ≥ 1`. Block `(l, k')` is the
/// action of the entry `a_{k'l}` of `d_k` on `N`.
pub fn coboundary(res: &Resolution, n: &Module, k: usize) -> Matrix {
    let d = res.differential(k);
    let f = n.field();
    let rows = cochain_dim(res, n, k - 1);
    let cols = cochain_dim(res, n, k);
    let mut m = Matrix::zeros(f, rows, cols);
    let mut r0 = 0;
    for (l, &t) in d.dst.iter().enumerate() {
        let mut c0 = 0;
        for (kk, &s) in d.src.iter().enumerate() {
            m.set_block(r0, c0, &n.act_element(t, s, &d.entries[kk][l]));
            c0 += n.dims()[s];
        }
        r0 += n.dims()[t];
    }
    m
}

/// `Ext^k(M, N)` from a projective resolution of `M` reaching `P_{k+1}`.
pub fn ext_from_resolution(res: &Resolution, n: &Module, k: usize) -> usize {
    let c = cochain_dim(res, n, k);
    let out = rank(&coboundary(res, n, k + 1));
    let inc = if k == 0 { 0 } else { rank(&coboundary(res, n, k)) };
    c - out - inc
}

/// `Ext^k_A(M, N)` via the minimal projective resolution of `M`.
pub fn ext(m: &Module, n: &Module, k: usize) -> Result<ExtValue> {
    m.check_same(n)?;
    let res = min_proj_resolution(m, k + 1);
    Ok(ExtValue { k, dim: ext_from_resolution(&res, n, k) })
}

/// `dim Ext^k(M, N)` for `0 ≤ k ≤ kmax`, sharing one resolution.
pub fn ext_dims(m: &Module, n: &Module, kmax: usize) -> Result<Vec<usize>> {
    m.check_same(n)?;
    let res = min_proj_resolution(m, kmax + 1);
    Ok((0..=kmax).map(|k| ext_from_resolution(&res, n, k)).collect())
}

/// `Ext^k_A(M, N)` via `Hom(M, I^•)` for the minimal injective coresolution of `N`.
pub fn ext_via_injectives(m: &Module, n: &Module, k: usize) -> Result<ExtValue> {
    m.check_same(n)?;
    let co = min_inj_coresolution(n, k + 1);
    // rank of Hom(M, I^j) → Hom(M, I^{j+1})
    let post_rank = |j: usize| -> Result<(usize, usize)> {
        let Some(ij) = co.terms.get(j) else { return Ok((0, 0)) };
        let h = hom_space(m, ij)?;
        let Some(next) = co.maps.get(j + 1) else { return Ok((h.dim(), 0)) };
        let rows: Vec<Vec<u32>> = h.maps().iter().map(|f| f.then(next).flatten()).collect();
        let width = rows.first().map_or(0, Vec::len);
        Ok((h.dim(), rank(&Matrix::from_row_vecs(m.field(), width, &rows))))
    };
    let (hk, rk) = post_rank(k)?;
    let before = if k == 0 { 0 } else { post_rank(k - 1)?.1 };
    Ok(ExtValue { k, dim: hk - rk - before })
}

/// `M ⊗_A N` for a right module `M` and a left module `N` (a module over the
/// opposite algebra): the quotient of `⊕_i M e_i ⊗ e_i N` by the relations
/// `(v·g) ⊗ w − v ⊗ (g·w)` for the generators `g`.
#[derive(Clone, Debug)]
pub struct TensorProduct {
    pub dim: usize,
    /// `dim M e_i · dim e_i N` per vertex; the ambient space is their concatenation.
    pub ambient_dims: Vec<usize>,
    pub relations: RowSpace,
}

impl TensorProduct {
    /// Projection of an ambient vector onto the quotient coordinates.
    pub fn project(&self, v: &[u32]) -> Vec<u32> {
        let r = self.relations.reduce(v);
        self.relations.complement().iter().map(|&c| r[c]).collect()
    }
}

pub fn tensor(m: &Module, n: &Module) -> Result<TensorProduct> {
    check_opposite(m, n)?;
    let a = m.algebra();
    let f = a.field();
    let nv = a.num_vertices();
    let ambient_dims: Vec<usize> = (0..nv).map(|i| m.dims()[i] * n.dims()[i]).collect();
    let mut off = vec![0usize; nv + 1];
    for i in 0..nv {
        off[i + 1] = off[i] + ambient_dims[i];
    }
    let total = off[nv];
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for &g in a.generators() {
        let (s, t) = a.pointing(g);
        let left = kron(m.act(g), &Matrix::identity(f, n.dims()[t]));
        let right = kron(&Matrix::identity(f, m.dims()[s]), n.act(g));
        for r in 0..left.rows() {
            let mut v = vec![0u32; total];
            for (c, &x) in left.row(r).iter().enumerate() {
                v[off[t] + c] = x;
            }
            for (c, &x) in right.row(r).iter().enumerate() {
                let p = off[s] + c;
                v[p] = f.sub(v[p], x);
            }
            rows.push(v);
        }
    }
    let relations = RowSpace::from_vecs(f, total, &rows);
    Ok(TensorProduct { dim: total - relations.dim(), ambient_dims, relations })
}

fn chain_dim(res: &Resolution, n: &Module, k: usize) -> usize {
    res.vertices_at(k).iter().map(|&v| n.dims()[v]).sum()
}

/// `∂_k = d_k ⊗ N: C_k → C_{k−1}` for `k ≥ 1`, with `C_k = ⊕ e_{v} N`.
pub fn tensor_boundary(res: &Resolution, n: &Module, k: usize) -> Matrix {
    let d = res.differential(k);
    let mut m = Matrix::zeros(n.field(), chain_dim(res, n, k), chain_dim(res, n, k - 1));
    let mut r0 = 0;
    for (kk, &s) in d.src.iter().enumerate() {
        let mut c0 = 0;
        for (l, &t) in d.dst.iter().enumerate() {
            m.set_block(r0, c0, &n.act_element(s, t, &d.entries[kk][l]));
            c0 += n.dims()[t];
        }
        r0 += n.dims()[s];
    }
    m
}

pub fn tor_from_resolution(res: &Resolution, n: &Module, k: usize) -> usize {
    let c = chain_dim(res, n, k);
    let out = if k == 0 { 0 } else { rank(&tensor_boundary(res, n, k)) };
    c - out - rank(&tensor_boundary(res, n, k + 1))
}

/// `Tor_k^A(M, N)` for a left module `N`, via the minimal projective resolution of `M`.
pub fn tor(m: &Module, n: &Module, k: usize) -> Result<usize> {
    check_opposite(m, n)?;
    let res = min_proj_resolution(m, k + 1);
    Ok(tor_from_resolution(&res, n, k))
}

/// The complex `P_{k−1}* → P_k* → P_{k+1}*` over the opposite algebra.
pub(crate) struct DualComplex {
    pub term: Module,
    /// `d_k*: P_{k−1}* → P_k*`.
    pub incoming: ModMap,
    /// `d_{k+1}*: P_k* → P_{k+1}*`.
    pub outgoing: ModMap,
}

pub(crate) fn dual_complex(res: &Resolution, k: usize) -> DualComplex {
    let op: Arc<Algebra> = res.target.algebra().opposite();
    let term = proj_sum(&op, res.vertices_at(k));
    let outgoing = res.differential(k + 1).dual().to_modmap(&op);
    let incoming = if k == 0 {
        ModMap::zero(&Module::zero(&op), &term)
    } else {
        res.differential(k).dual().to_modmap(&op)
    };
    DualComplex { term, incoming, outgoing }
}

/// `Ext^k(M, −)` restricted to projectives, as a module over the opposite
/// algebra: the homology `ker d_{k+1}* / im d_k*` of the dualized resolution.
/// Its vertex-`j` part is `Ext^k(M, P_j)`.
#[derive(Clone, Debug)]
pub struct ExtModule {
    pub module: Module,
    /// `ker d_{k+1}* ⊆ P_k*` and its inclusion.
    pub cycles: Module,
    pub cycles_inclusion: ModMap,
    pub projection: ModMap,
    /// `Tr_k M = coker d_k*` and the inclusion `E_k ↪ Tr_k M`.
    pub transpose: Module,
    pub inclusion: ModMap,
}

pub fn ext_module_from_resolution(res: &Resolution, k: usize) -> ExtModule {
    let dc = dual_complex(res, k);
    let (cycles, zi) = dc.term.kernel_of(&dc.outgoing);
    let into_cycles = Module::corestrict(&zi, &dc.incoming);
    let (module, projection) = cycles.cokernel_of(&into_cycles);
    let (transpose, tp) = dc.term.cokernel_of(&dc.incoming);
    let comps: Vec<Vec<usize>> = cycles.image_spaces(&into_cycles).iter().map(RowSpace::complement).collect();
    let blocks = comps
        .iter()
        .enumerate()
        .map(|(i, c)| zi.block(i).select_rows(c).mul(tp.block(i)))
        .collect();
    ExtModule { module, cycles, cycles_inclusion: zi, projection, transpose, inclusion: ModMap::new(blocks) }
}

pub fn ext_module(m: &Module, k: usize) -> ExtModule {
    ext_module_from_resolution(&min_proj_resolution(m, k + 1), k)
}

/// One degree of the Tor/Ext duality comparison.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualityRow {
    pub k: usize,
    pub tor: usize,
    pub hom_ext: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualityReport {
    pub rows: Vec<DualityRow>,
    pub pass: bool,
}

/// Compares `dim Tor_k(M, I)` with `dim Hom(Ext^k(M, −)|_A, I)` for an
/// injective left module `I` and `0 ≤ k ≤ kmax`.
pub fn tor_ext_duality_check(m: &Module, i: &Module, kmax: usize) -> Result<DualityReport> {
    check_opposite(m, i)?;
    if !is_injective(i) {
        return Err(Error::Precondition("the second argument must be injective".into()));
    }
    let res = min_proj_resolution(m, kmax + 1);
    let mut rows = Vec::new();
    for k in 0..=kmax {
        let e = ext_module_from_resolution(&res, k);
        rows.push(DualityRow { k, tor: tor_from_resolution(&res, i, k), hom_ext: hom_dim(&e.module, i)? });
    }
    let pass = rows.iter().all(|r| r.tor == r.hom_ext);
    Ok(DualityReport { rows, pass })
}
