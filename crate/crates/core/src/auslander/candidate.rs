use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::{endomorphism_algebra, Algebra, AlgebraMap};
use crate::error::{Error, Result};
use crate::homology::{cosyzygy, ext_dims, ext_from_resolution, min_proj_resolution, syzygy, tau_d, tau_d_inverse};
use crate::repn::{injectives, is_isomorphic, projectives, AddClosure, Module};

/// A candidate `d`-cluster-tilting module, as its list of pairwise
/// non-isomorphic indecomposable summands.
#[derive(Clone, Debug)]
pub struct CTCandidate {
    pub algebra: Arc<Algebra>,
    pub summands: Vec<Module>,
    pub d: usize,
}

impl CTCandidate {
    pub fn new(algebra: Arc<Algebra>, summands: Vec<Module>, d: usize) -> Result<CTCandidate> {
        if d == 0 {
            return Err(Error::Precondition("d must be at least 1".into()));
        }
        if summands.is_empty() {
            return Err(Error::Precondition("a candidate needs at least one summand".into()));
        }
        for (i, m) in summands.iter().enumerate() {
            if !m.algebra().same_as(&algebra) {
                return Err(Error::AlgebraMismatch);
            }
            if m.is_zero() {
                return Err(Error::ZeroSummand(i));
            }
        }
        Ok(CTCandidate { algebra, summands, d })
    }

    /// Index of a summand isomorphic to `x`.
    pub fn position(&self, x: &Module) -> Result<Option<usize>> {
        for (i, m) in self.summands.iter().enumerate() {
            if is_isomorphic(m, x)? {
                return Ok(Some(i));
            }
        }
        Ok(None)
    }

    fn contains_all(&self, xs: &[Module]) -> Result<bool> {
        for x in xs {
            if self.position(x)?.is_none() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn contains_projectives(&self) -> Result<bool> {
        self.contains_all(&projectives(&self.algebra))
    }

    pub fn contains_injectives(&self) -> Result<bool> {
        self.contains_all(&injectives(&self.algebra))
    }

    /// The candidate with summand `i` removed (a negative control).
    pub fn without(&self, i: usize) -> CTCandidate {
        let mut summands = self.summands.clone();
        summands.remove(i);
        CTCandidate { algebra: self.algebra.clone(), summands, d: self.d }
    }

    pub fn add_closure(&self) -> Result<AddClosure> {
        AddClosure::new(&self.summands)
    }
}

/// `Ext^k(M_i, M_j) = 0` for all pairs and `1 ≤ k ≤ d − 1`.
pub fn is_d_rigid(c: &CTCandidate) -> Result<bool> {
    if c.d == 1 {
        return Ok(true);
    }
    for m in &c.summands {
        let res = min_proj_resolution(m, c.d);
        for n in &c.summands {
            if (1..c.d).any(|k| ext_from_resolution(&res, n, k) != 0) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `τ_d` and `τ_d^−` of every summand stay in `add M`.
pub fn is_tau_d_closed(c: &CTCandidate) -> Result<bool> {
    let add = c.add_closure()?;
    for m in &c.summands {
        if !add.contains(&tau_d(m, c.d))? || !add.contains(&tau_d_inverse(m, c.d))? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `End_A(⊕ M_i)`.
pub fn auslander_algebra(c: &CTCandidate) -> Result<(Arc<Algebra>, AlgebraMap)> {
    endomorphism_algebra(&c.summands)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DzReport {
    /// `Ω^d M_i ∈ add M` for all `i`.
    pub syzygy_closed: bool,
    /// `Ω^{−d} M_i ∈ add M` for all `i`.
    pub cosyzygy_closed: bool,
    /// `Ext^k(M_i, M_j) ≠ 0` only for `d | k`, `1 ≤ k ≤ kmax`.
    pub ext_degrees_ok: bool,
    pub pass: bool,
}

pub fn is_dz_cluster_tilting(c: &CTCandidate, kmax: usize) -> Result<DzReport> {
    let add = c.add_closure()?;
    let mut syzygy_closed = true;
    let mut cosyzygy_closed = true;
    let mut ext_degrees_ok = true;
    for m in &c.summands {
        syzygy_closed &= add.contains(&syzygy(m, c.d))?;
        cosyzygy_closed &= add.contains(&cosyzygy(m, c.d))?;
        for n in &c.summands {
            let dims = ext_dims(m, n, kmax)?;
            ext_degrees_ok &= (1..=kmax).all(|k| dims[k] == 0 || k % c.d == 0);
        }
    }
    Ok(DzReport { syzygy_closed, cosyzygy_closed, ext_degrees_ok, pass: syzygy_closed && cosyzygy_closed && ext_degrees_ok })
}
