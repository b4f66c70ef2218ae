use std::sync::Arc;

use serde::Serialize;

use crate::algebra::{hom_functor, is_local_module, linear_a, Algebra};
use crate::error::{Error, Result};
use crate::exactla::{rank, Field, Matrix};
use crate::homology::{gldim, tau_d_inverse_with, TauInverseOrder};
use crate::repn::{hom_space, is_isomorphic, projective_cover, projectives, ModMap, Module};

use super::candidate::{auslander_algebra, CTCandidate};
use super::correspondence::{check_correspondence, CorrespondenceReport};

pub const DEFAULT_ORBIT_CAP: usize = 64;

/// Closure of the indecomposable projectives under `τ_d^−`. Nothing about
/// the result is trusted; run [`check_correspondence`] on it.
pub fn tower_candidate(g: &Arc<Algebra>, d: usize, orbit_cap: usize) -> Result<CTCandidate> {
    tower_candidate_with(g, d, orbit_cap, TauInverseOrder::default())
}

pub fn tower_candidate_with(
    g: &Arc<Algebra>,
    d: usize,
    orbit_cap: usize,
    order: TauInverseOrder,
) -> Result<CTCandidate> {
    if d == 0 {
        return Err(Error::Precondition("d must be at least 1".into()));
    }
    if !gldim(g, d + 1).le(d) {
        return Err(Error::Precondition(format!("tower candidates need gldim <= {d}")));
    }
    let mut summands: Vec<Module> = Vec::new();
    let mut queue: Vec<Module> = projectives(g);
    let mut steps = 0;
    while let Some(m) = queue.pop() {
        if m.is_zero() {
            continue;
        }
        let mut seen = false;
        for s in &summands {
            if is_isomorphic(s, &m)? {
                seen = true;
                break;
            }
        }
        if seen {
            continue;
        }
        steps += 1;
        if steps > orbit_cap {
            return Err(Error::OrbitCapExceeded(orbit_cap));
        }
        if !is_local_module(&m)? {
            return Err(Error::Precondition("a translate in the orbit is decomposable".into()));
        }
        queue.push(tau_d_inverse_with(&m, d, order));
        summands.push(m);
    }
    CTCandidate::new(g.clone(), summands, d)
}

#[derive(Clone, Debug, Serialize)]
pub struct TowerLevel {
    pub level: usize,
    #[serde(skip)]
    pub algebra: Arc<Algebra>,
    #[serde(skip)]
    pub candidate: CTCandidate,
    pub algebra_dim: usize,
    pub summands: usize,
    pub report: CorrespondenceReport,
}

/// Level `d` runs on `g_d` (with `g_1 = kA_n`): the candidate `c_d`, its
/// report, and `g_{d+1} = End(c_d)`. Stops after the first failing level.
pub fn type_a_tower(n: usize, depth: usize, cap: usize, orbit_cap: usize) -> Result<Vec<TowerLevel>> {
    type_a_tower_over(n, depth, cap, orbit_cap, Field::default())
}

pub fn type_a_tower_over(n: usize, depth: usize, cap: usize, orbit_cap: usize, field: Field) -> Result<Vec<TowerLevel>> {
    if n == 0 || depth == 0 {
        return Err(Error::Precondition("n and depth must be at least 1".into()));
    }
    let mut g = linear_a(n, field);
    let mut levels = Vec::new();
    for d in 1..=depth {
        let c = tower_candidate(&g, d, orbit_cap)?;
        let report = check_correspondence(&c, cap)?;
        let ok = report.verdict;
        let next = auslander_algebra(&c)?.0;
        levels.push(TowerLevel {
            level: d,
            algebra: g.clone(),
            algebra_dim: g.dim(),
            summands: c.summands.len(),
            candidate: c,
            report,
        });
        if !ok {
            break;
        }
        g = next;
    }
    Ok(levels)
}

/// The `d`-kernel `0 → M_{d+1} → … → M_2 → M_1 → M_0` of `f: M_1 → M_0`.
#[derive(Clone, Debug)]
pub struct KernelSequence {
    /// `M_0, M_1, …, M_{d+1}`.
    pub modules: Vec<Module>,
    /// `maps[k]: M_{k+1} → M_k`.
    pub maps: Vec<ModMap>,
    pub last_in_add: bool,
    pub hom_exact: bool,
    pub pass: bool,
}

/// A minimal right `add M`-approximation of `x`, from top generators of `Hom(M, x)`.
fn right_approx(c: &CTCandidate, x: &Module) -> Result<(Module, ModMap)> {
    let add = c.add_closure()?;
    let (h, bases) = hom_functor(&add.end, &add.map, x)?;
    let cover = projective_cover(&h);
    let maps: Vec<ModMap> = cover.vertices.iter().zip(&cover.generators).map(|(&s, v)| bases[s].combine(v)).collect();
    let parts: Vec<Module> = cover.vertices.iter().map(|&s| c.summands[s].clone()).collect();
    let src = Module::sum(&parts, &c.algebra)?;
    Ok((src, ModMap::vstack(&maps, x.dims(), x.field())))
}

/// Rank of `Hom(m, g)` for `g: x → y`.
fn post_rank(m: &Module, x: &Module, g: &ModMap) -> Result<usize> {
    let h = hom_space(m, x)?;
    let rows: Vec<Vec<u32>> = h.maps().iter().map(|f| f.then(g).flatten()).collect();
    let width = rows.first().map_or(0, Vec::len);
    Ok(rank(&Matrix::from_row_vecs(m.field(), width, &rows)))
}

pub fn d_kernel_sequence(c: &CTCandidate, f: &ModMap, src: &Module, dst: &Module) -> Result<KernelSequence> {
    let add = c.add_closure()?;
    if !f.is_linear(src, dst) || !add.contains(src)? || !add.contains(dst)? {
        return Err(Error::Precondition("the map must be A-linear between modules in add M".into()));
    }
    let mut modules = vec![dst.clone(), src.clone()];
    let mut maps = vec![f.clone()];
    let (mut k, mut incl) = src.kernel_of(f);
    for _ in 1..c.d {
        let (m, p) = right_approx(c, &k)?;
        maps.push(p.then(&incl));
        modules.push(m);
        let last = modules.last().unwrap();
        let (k2, i2) = last.kernel_of(maps.last().unwrap());
        k = k2;
        incl = i2;
    }
    let last_in_add = add.contains(&k)?;
    maps.push(incl);
    modules.push(k);
    let mut hom_exact = maps.windows(2).all(|w| w[1].then(&w[0]).is_zero());
    for m in &c.summands {
        for i in 1..modules.len() {
            let r_out = post_rank(m, &modules[i], &maps[i - 1])?;
            let r_in = if i < maps.len() { post_rank(m, &modules[i + 1], &maps[i])? } else { 0 };
            hom_exact &= r_in + r_out == hom_space(m, &modules[i])?.dim();
        }
    }
    Ok(KernelSequence { modules, maps, last_in_add, hom_exact, pass: last_in_add && hom_exact })
}
