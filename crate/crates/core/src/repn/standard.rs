use std::sync::Arc;

use crate::algebra::Algebra;
use crate::exactla::{Matrix, RowSpace};

use super::{ModMap, Module};

/// The indecomposable projective `P_i = e_i A`; its vertex-`j` part has the
/// basis `pointed(i, j)`.
pub fn projective(a: &Arc<Algebra>, i: usize) -> Module {
    let f = a.field();
    let nv = a.num_vertices();
    let dims: Vec<usize> = (0..nv).map(|j| a.pointed(i, j).len()).collect();
    let action = (0..a.dim())
        .map(|b| {
            let (s, t) = a.pointing(b);
            let mut m = Matrix::zeros(f, dims[s], dims[t]);
            for &x in a.pointed(i, s) {
                for &(z, c) in a.product(x, b) {
                    m.set(a.block_position(x), a.block_position(z), c);
                }
            }
            m
        })
        .collect();
    Module::from_parts(a.clone(), dims, action)
}

pub fn projectives(a: &Arc<Algebra>) -> Vec<Module> {
    (0..a.num_vertices()).map(|i| projective(a, i)).collect()
}

/// `I_i = D(A e_i)`, the dual of the projective of the opposite algebra.
pub fn injective(a: &Arc<Algebra>, i: usize) -> Module {
    dual(&projective(&a.opposite(), i))
}

pub fn injectives(a: &Arc<Algebra>) -> Vec<Module> {
    (0..a.num_vertices()).map(|i| injective(a, i)).collect()
}

pub fn simple(a: &Arc<Algebra>, i: usize) -> Module {
    let f = a.field();
    let nv = a.num_vertices();
    let dims: Vec<usize> = (0..nv).map(|j| usize::from(j == i)).collect();
    let action = (0..a.dim())
        .map(|b| {
            let (s, t) = a.pointing(b);
            if b == a.idempotent(i) {
                Matrix::identity(f, 1)
            } else {
                Matrix::zeros(f, dims[s], dims[t])
            }
        })
        .collect();
    Module::from_parts(a.clone(), dims, action)
}

pub fn simples(a: &Arc<Algebra>) -> Vec<Module> {
    (0..a.num_vertices()).map(|i| simple(a, i)).collect()
}

/// `D M = Hom_k(M, k)` as a module over the opposite algebra (transposed blocks).
pub fn dual(m: &Module) -> Module {
    let op = m.algebra().opposite();
    let action = m.actions().iter().map(|x| x.transpose()).collect();
    Module::from_parts(op, m.dims().to_vec(), action)
}

/// Top, radical and socle with their structure maps.
pub struct TopRadSocle {
    pub top: Module,
    pub top_projection: ModMap,
    pub radical: Module,
    pub radical_inclusion: ModMap,
    pub socle: Module,
    pub socle_inclusion: ModMap,
}

pub fn top_radical_socle(m: &Module) -> TopRadSocle {
    let rad = m.radical_spaces();
    let (top, top_projection) = m.quotient(&rad);
    let (radical, radical_inclusion) = m.submodule(&rad);
    let (socle, socle_inclusion) = m.submodule(&m.socle_spaces());
    TopRadSocle { top, top_projection, radical, radical_inclusion, socle, socle_inclusion }
}

pub fn top(m: &Module) -> Module {
    m.quotient(&m.radical_spaces()).0
}

pub fn radical(m: &Module) -> (Module, ModMap) {
    m.submodule(&m.radical_spaces())
}

pub fn socle(m: &Module) -> (Module, ModMap) {
    m.submodule(&m.socle_spaces())
}

/// The map `⊕_k P_{i_k} → M` sending the generator of the `k`-th summand to
/// `gens[k] = (i_k, v_k)` with `v_k ∈ M e_{i_k}`.
pub fn map_from_projectives(m: &Module, gens: &[(usize, Vec<u32>)]) -> (Module, ModMap) {
    let a = m.algebra();
    let f = a.field();
    let nv = a.num_vertices();
    let ps: Vec<Module> = gens.iter().map(|(i, _)| projective(a, *i)).collect();
    let p = Module::sum(&ps, a).expect("same algebra");
    let blocks = (0..nv)
        .map(|j| {
            let mut rows: Vec<Vec<u32>> = Vec::new();
            for (i, v) in gens {
                for &x in a.pointed(*i, j) {
                    rows.push(m.act(x).vec_mul(v));
                }
            }
            Matrix::from_row_vecs(f, m.dims()[j], &rows)
        })
        .collect();
    (p, ModMap::new(blocks))
}

/// A projective cover together with the chosen top generators.
#[derive(Clone, Debug)]
pub struct ProjectiveCover {
    pub module: Module,
    pub epi: ModMap,
    /// Vertex of each indecomposable summand, in order.
    pub vertices: Vec<usize>,
    /// Image of each summand's generator, as a vector of `M e_i`.
    pub generators: Vec<Vec<u32>>,
}

/// Deterministic top generators: at each vertex, the unit vectors outside the
/// pivot columns of the radical.
pub fn top_generators(m: &Module) -> Vec<(usize, Vec<u32>)> {
    let rad = m.radical_spaces();
    let mut gens = Vec::new();
    for (i, r) in rad.iter().enumerate() {
        for c in r.complement() {
            let mut v = vec![0u32; m.dims()[i]];
            v[c] = 1;
            gens.push((i, v));
        }
    }
    gens
}

pub fn projective_cover(m: &Module) -> ProjectiveCover {
    let gens = top_generators(m);
    let (module, epi) = map_from_projectives(m, &gens);
    ProjectiveCover {
        module,
        epi,
        vertices: gens.iter().map(|g| g.0).collect(),
        generators: gens.into_iter().map(|g| g.1).collect(),
    }
}

/// An injective envelope, obtained by dualizing a projective cover over the opposite algebra.
#[derive(Clone, Debug)]
pub struct InjectiveEnvelope {
    pub module: Module,
    pub mono: ModMap,
    pub vertices: Vec<usize>,
}

pub fn injective_envelope(m: &Module) -> InjectiveEnvelope {
    let cover = projective_cover(&dual(m));
    InjectiveEnvelope { module: dual(&cover.module), mono: cover.epi.dual(), vertices: cover.vertices }
}

/// Per-vertex subspaces of the whole space.
pub fn full_spaces(m: &Module) -> Vec<RowSpace> {
    m.dims().iter().map(|&d| RowSpace::full(m.field(), d)).collect()
}
