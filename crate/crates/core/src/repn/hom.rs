use crate::error::Result;
use crate::exactla::{kernel_basis, Field, Matrix, RowSpace};

use super::{ModMap, Module};

/// A basis of `Hom_A(M, N)`, echelon-normalized on flattened blocks.
#[derive(Clone, Debug)]
pub struct HomBasis {
    field: Field,
    src_dims: Vec<usize>,
    dst_dims: Vec<usize>,
    maps: Vec<ModMap>,
    space: RowSpace,
}

impl HomBasis {
    pub fn dim(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }

    pub fn maps(&self) -> &[ModMap] {
        &self.maps
    }

    pub fn map(&self, i: usize) -> &ModMap {
        &self.maps[i]
    }

    pub fn src_dims(&self) -> &[usize] {
        &self.src_dims
    }

    pub fn dst_dims(&self) -> &[usize] {
        &self.dst_dims
    }

    /// Coordinates of a map in this basis; `None` if it is not A-linear.
    pub fn coords(&self, f: &ModMap) -> Option<Vec<u32>> {
        self.space.coords(&f.flatten())
    }

    /// `Σ c_i f_i`.
    pub fn combine(&self, coeffs: &[u32]) -> ModMap {
        let mut v = vec![0u32; self.space.ambient()];
        for (c, r) in coeffs.iter().zip(0..self.dim()) {
            if *c == 0 {
                continue;
            }
            for (x, &b) in v.iter_mut().zip(self.space.basis().row(r)) {
                *x = self.field.mul_add(*x, *c, b);
            }
        }
        ModMap::from_flat(self.field, &self.src_dims, &self.dst_dims, &v)
    }
}

/// All A-linear maps `M → N`.
///
/// Solves `act_M(g)·F_t = F_s·act_N(g)` for the algebra generators `g`
/// (pointed `(s, t)`); idempotents are built into the block shape.
pub fn hom_space(m: &Module, n: &Module) -> Result<HomBasis> {
    m.check_same(n)?;
    let a = m.algebra();
    let f = a.field();
    let nv = a.num_vertices();
    let mut off = vec![0usize; nv + 1];
    for i in 0..nv {
        off[i + 1] = off[i] + m.dims()[i] * n.dims()[i];
    }
    let unknowns = off[nv];
    let mut eqs: Vec<Vec<u32>> = Vec::new();
    for &g in a.generators() {
        let (s, t) = a.pointing(g);
        let (ms, nt) = (m.dims()[s], n.dims()[t]);
        if ms == 0 || nt == 0 {
            continue;
        }
        let am = m.act(g);
        let an = n.act(g);
        let nn_s = n.dims()[s];
        let nn_t = nt;
        for r in 0..ms {
            for c in 0..nt {
                let mut row = vec![0u32; unknowns];
                // Σ_k A[r][k] F_t[k][c]
                for k in 0..m.dims()[t] {
                    let x = am.get(r, k);
                    if x != 0 {
                        let idx = off[t] + k * nn_t + c;
                        row[idx] = f.add(row[idx], x);
                    }
                }
                // − Σ_l F_s[r][l] B[l][c]
                for l in 0..nn_s {
                    let y = an.get(l, c);
                    if y != 0 {
                        let idx = off[s] + r * nn_s + l;
                        row[idx] = f.sub(row[idx], y);
                    }
                }
                if row.iter().any(|&x| x != 0) {
                    eqs.push(row);
                }
            }
        }
    }
    let sols = if eqs.is_empty() {
        (0..unknowns)
            .map(|i| {
                let mut v = vec![0u32; unknowns];
                v[i] = 1;
                v
            })
            .collect()
    } else {
        kernel_basis(&Matrix::from_row_vecs(f, unknowns, &eqs))
    };
    let space = RowSpace::from_vecs(f, unknowns, &sols);
    let maps = (0..space.dim())
        .map(|r| ModMap::from_flat(f, m.dims(), n.dims(), space.basis().row(r)))
        .collect();
    Ok(HomBasis { field: f, src_dims: m.dims().to_vec(), dst_dims: n.dims().to_vec(), maps, space })
}

pub fn hom_dim(m: &Module, n: &Module) -> Result<usize> {
    Ok(hom_space(m, n)?.dim())
}
