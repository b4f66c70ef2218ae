use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::exactla::Matrix;
use crate::repn::{dual, hom_space, projective, HomBasis, ModMap, Module};

use super::derived::dual_complex;
use super::resolution::{cosyzygy, min_proj_resolution, Resolution};

/// Left multiplication `L_b: P_t → P_s` by `b` pointed `(s, t)`.
fn left_mult(m: &Module, b: usize) -> ModMap {
    let a = m.algebra();
    let (s, t) = a.pointing(b);
    let f = a.field();
    let blocks = (0..a.num_vertices())
        .map(|j| {
            let mut x = Matrix::zeros(f, a.pointed(t, j).len(), a.pointed(s, j).len());
            for &y in a.pointed(t, j) {
                for &(z, c) in a.product(b, y) {
                    x.set(a.block_position(y), a.block_position(z), c);
                }
            }
            x
        })
        .collect();
    ModMap::new(blocks)
}

/// `M* = Hom_A(M, A)` with the Hom bases `Hom(M, P_j)` giving its vertex parts.
pub fn star_with_bases(m: &Module) -> Result<(Module, Vec<HomBasis>)> {
    let a = m.algebra();
    let op = a.opposite();
    let f = a.field();
    let bases: Vec<HomBasis> =
        (0..a.num_vertices()).map(|j| hom_space(m, &projective(a, j))).collect::<Result<_>>()?;
    let dims: Vec<usize> = bases.iter().map(HomBasis::dim).collect();
    let action = (0..a.dim())
        .map(|b| {
            let (s, t) = a.pointing(b);
            let lb = left_mult(m, b);
            let rows: Vec<Vec<u32>> = bases[t]
                .maps()
                .iter()
                .map(|h| bases[s].coords(&h.then(&lb)).expect("postcomposition is linear"))
                .collect();
            Matrix::from_row_vecs(f, dims[s], &rows)
        })
        .collect();
    Ok((Module::new(op, dims, action)?, bases))
}

/// `M* = Hom_A(M, A)` as a module over the opposite algebra.
pub fn star(m: &Module) -> Result<Module> {
    Ok(star_with_bases(m)?.0)
}

/// `Tr_k M = coker(d_k*)` from a resolution reaching `P_k`.
pub fn transpose_from_resolution(res: &Resolution, k: usize) -> Module {
    assert!(k >= 1);
    let dc = dual_complex(res, k);
    dc.term.cokernel_of(&dc.incoming).0
}

/// The Auslander–Bridger transpose from the minimal presentation. Projective
/// summands of `M` contribute nothing, so no stripping is needed.
pub fn transpose(m: &Module) -> Module {
    transpose_k(m, 1)
}

/// `Tr_k M = Tr Ω^{k−1} M`, read off the minimal resolution.
pub fn transpose_k(m: &Module, k: usize) -> Module {
    assert!(k >= 1, "transpose_k needs k >= 1");
    transpose_from_resolution(&min_proj_resolution(m, k), k)
}

/// `τ M = D Tr M`.
pub fn tau(m: &Module) -> Module {
    dual(&transpose(m))
}

/// `τ^− M = Tr D M`.
pub fn tau_inverse(m: &Module) -> Module {
    transpose(&dual(m))
}

/// `τ_d M = D Tr_d M`.
pub fn tau_d(m: &Module, d: usize) -> Module {
    dual(&transpose_k(m, d))
}

/// Order of operations in `τ_d^−`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub enum TauInverseOrder {
    /// `Tr_d D M = τ^−(Ω^{−(d−1)} M)`: cosyzygies first, the exact mirror of `τ_d`.
    #[default]
    CosyzygyFirst,
    /// `Ω^{−(d−1)}(τ^− M)`.
    TauFirst,
}

pub fn tau_d_inverse(m: &Module, d: usize) -> Module {
    tau_d_inverse_with(m, d, TauInverseOrder::default())
}

pub fn tau_d_inverse_with(m: &Module, d: usize, order: TauInverseOrder) -> Module {
    match order {
        TauInverseOrder::CosyzygyFirst => transpose_k(&dual(m), d),
        TauInverseOrder::TauFirst => cosyzygy(&tau_inverse(m), d - 1),
    }
}
