use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::Algebra;
use crate::exactla::Matrix;
use crate::repn::{dual, injective, is_projective, projective, projective_cover, simples, ModMap, Module};

/// Default cap on resolution lengths.
pub const DEFAULT_CAP: usize = 32;

/// A map `⊕_k P_{src_k} → ⊕_l P_{dst_l}` between sums of indecomposable
/// projectives, given by where the summand generators go:
/// `entries[k][l] ∈ e_{dst_l} A e_{src_k}` (dense algebra elements).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjMap {
    pub src: Vec<usize>,
    pub dst: Vec<usize>,
    pub entries: Vec<Vec<Vec<u32>>>,
}

impl ProjMap {
    /// The zero map out of the zero module.
    pub fn from_zero(dst: &[usize]) -> ProjMap {
        ProjMap { src: Vec::new(), dst: dst.to_vec(), entries: Vec::new() }
    }

    /// The same map as a module homomorphism between the concrete sums
    /// `proj_sum(a, src) → proj_sum(a, dst)`.
    pub fn to_modmap(&self, a: &Algebra) -> ModMap {
        let f = a.field();
        let blocks = (0..a.num_vertices())
            .map(|j| {
                let rows: usize = self.src.iter().map(|&s| a.pointed(s, j).len()).sum();
                let mut coff = Vec::with_capacity(self.dst.len());
                let mut cols = 0;
                for &t in &self.dst {
                    coff.push(cols);
                    cols += a.pointed(t, j).len();
                }
                let mut m = Matrix::zeros(f, rows, cols);
                let mut roff = 0;
                for (k, &s) in self.src.iter().enumerate() {
                    for &x in a.pointed(s, j) {
                        let r = roff + a.block_position(x);
                        for (l, elem) in self.entries[k].iter().enumerate() {
                            for (b, &c) in elem.iter().enumerate() {
                                if c == 0 {
                                    continue;
                                }
                                for &(z, e) in a.product(b, x) {
                                    let col = coff[l] + a.block_position(z);
                                    m.set(r, col, f.mul_add(m.get(r, col), c, e));
                                }
                            }
                        }
                    }
                    roff += a.pointed(s, j).len();
                }
                m
            })
            .collect();
        ModMap::new(blocks)
    }

    /// `Hom_A(−, A)` applied to the map: the same elements read in the opposite
    /// algebra, with source and target exchanged.
    pub fn dual(&self) -> ProjMap {
        let entries = (0..self.dst.len())
            .map(|l| (0..self.src.len()).map(|k| self.entries[k][l].clone()).collect())
            .collect();
        ProjMap { src: self.dst.clone(), dst: self.src.clone(), entries }
    }

    /// Whether every entry lies in the radical (minimality of a resolution).
    pub fn is_radical(&self, a: &Algebra) -> bool {
        self.entries.iter().flatten().all(|e| a.idempotents().iter().all(|&i| e[i] == 0))
    }
}

/// `⊕_k P_{verts_k}`.
pub fn proj_sum(a: &Arc<Algebra>, verts: &[usize]) -> Module {
    let ps: Vec<Module> = verts.iter().map(|&i| projective(a, i)).collect();
    Module::sum(&ps, a).expect("same algebra")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ResolutionKind {
    Projective,
    Injective,
}

/// A minimal projective resolution `… → P_1 → P_0 → M → 0` or a minimal
/// injective coresolution `0 → M → I^0 → I^1 → …`.
///
/// For the projective kind `maps[0]` is the augmentation `P_0 → M` and
/// `maps[k]` is `d_k: P_k → P_{k−1}`; for the injective kind `maps[0]` is
/// `M → I^0` and `maps[k]` is `I^{k−1} → I^k`.
#[derive(Clone, Debug)]
pub struct Resolution {
    pub kind: ResolutionKind,
    pub target: Module,
    pub terms: Vec<Module>,
    pub maps: Vec<ModMap>,
    /// Vertices of the indecomposable summands of each term.
    pub vertices: Vec<Vec<usize>>,
    /// The differentials `d_k` (k ≥ 1) in generator form. For the injective
    /// kind these belong to the projective resolution of `D M` over the opposite algebra.
    pub differentials: Vec<ProjMap>,
    /// `Ω^k M` (resp. `Ω^{−k} M`) for every computed `k`, starting with `k = 0`.
    pub syzygies: Vec<Module>,
    pub minimal: bool,
    /// True if the cap was hit before reaching zero.
    pub capped: bool,
}

impl Resolution {
    /// Index of the last nonzero term (0 for the zero module).
    pub fn length(&self) -> usize {
        self.terms.iter().rposition(|t| !t.is_zero()).unwrap_or(0)
    }

    pub fn vertices_at(&self, k: usize) -> &[usize] {
        self.vertices.get(k).map_or(&[], Vec::as_slice)
    }

    /// `d_k: P_k → P_{k−1}` in generator form (`k ≥ 1`); the zero map if `P_k` was not reached.
    pub fn differential(&self, k: usize) -> ProjMap {
        assert!(k >= 1);
        match self.differentials.get(k - 1) {
            Some(d) => d.clone(),
            None => ProjMap::from_zero(self.vertices_at(k - 1)),
        }
    }

    pub fn syzygy(&self, k: usize) -> Option<&Module> {
        self.syzygies.get(k)
    }

    /// Rank bookkeeping at every term plus vanishing of consecutive composites.
    pub fn is_exact(&self) -> bool {
        let n = self.terms.len();
        let into = |k: usize| -> Option<&ModMap> {
            match self.kind {
                ResolutionKind::Projective => self.maps.get(k + 1),
                ResolutionKind::Injective => self.maps.get(k),
            }
        };
        let out = |k: usize| -> Option<&ModMap> {
            match self.kind {
                ResolutionKind::Projective => self.maps.get(k),
                ResolutionKind::Injective => self.maps.get(k + 1),
            }
        };
        let ends = match self.kind {
            ResolutionKind::Projective => self.maps[0].is_surjective(),
            ResolutionKind::Injective => self.maps[0].is_injective(),
        };
        if !ends {
            return false;
        }
        for k in 0..n {
            if self.capped && k + 1 == n {
                break;
            }
            let r_in = into(k).map_or(0, ModMap::rank);
            let r_out = out(k).map_or(0, ModMap::rank);
            if r_in + r_out != self.terms[k].dim() {
                return false;
            }
            if let (Some(i), Some(o)) = (into(k), out(k)) {
                if !i.then(o).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Every differential lands in the radical of its target.
    pub fn is_minimal(&self) -> bool {
        let a = match self.kind {
            ResolutionKind::Projective => self.target.algebra().clone(),
            ResolutionKind::Injective => self.target.algebra().opposite(),
        };
        self.differentials.iter().all(|d| d.is_radical(&a))
    }
}

/// Splits a vector of `(⊕_l P_{dst_l}) e_i` into one algebra element per summand.
fn split_segments(a: &Algebra, dst: &[usize], i: usize, w: &[u32]) -> Vec<Vec<u32>> {
    let mut off = 0;
    dst.iter()
        .map(|&l| {
            let mut elem = vec![0u32; a.dim()];
            for (pos, &b) in a.pointed(l, i).iter().enumerate() {
                elem[b] = w[off + pos];
            }
            off += a.pointed(l, i).len();
            elem
        })
        .collect()
}

/// Iterates projective covers of successive kernels, stopping at zero or
/// after `P_cap` (then `capped`).
pub fn min_proj_resolution(m: &Module, cap: usize) -> Resolution {
    let a = m.algebra().clone();
    let cap = cap.max(1);
    let cover = projective_cover(m);
    let mut terms = vec![cover.module];
    let mut vertices = vec![cover.vertices];
    let mut maps = vec![cover.epi];
    let mut differentials = Vec::new();
    let mut syzygies = vec![m.clone()];
    let mut capped = false;
    let mut k = 1;
    loop {
        let (ker, incl) = terms[k - 1].kernel_of(&maps[k - 1]);
        if ker.is_zero() {
            break;
        }
        if k > cap {
            syzygies.push(ker);
            capped = true;
            break;
        }
        let kc = projective_cover(&ker);
        let dst = vertices[k - 1].clone();
        let entries = kc
            .vertices
            .iter()
            .zip(&kc.generators)
            .map(|(&i, v)| split_segments(&a, &dst, i, &incl.block(i).vec_mul(v)))
            .collect();
        differentials.push(ProjMap { src: kc.vertices.clone(), dst, entries });
        maps.push(kc.epi.then(&incl));
        terms.push(kc.module);
        vertices.push(kc.vertices);
        syzygies.push(ker);
        k += 1;
    }
    let mut res = Resolution {
        kind: ResolutionKind::Projective,
        target: m.clone(),
        terms,
        maps,
        vertices,
        differentials,
        syzygies,
        minimal: true,
        capped,
    };
    res.minimal = res.is_minimal();
    res
}

/// The dual of the minimal projective resolution of `D M` over the opposite algebra.
pub fn min_inj_coresolution(m: &Module, cap: usize) -> Resolution {
    let r = min_proj_resolution(&dual(m), cap);
    Resolution {
        kind: ResolutionKind::Injective,
        target: m.clone(),
        terms: r.terms.iter().map(dual).collect(),
        maps: r.maps.iter().map(ModMap::dual).collect(),
        vertices: r.vertices,
        differentials: r.differentials,
        syzygies: r.syzygies.iter().map(dual).collect(),
        minimal: r.minimal,
        capped: r.capped,
    }
}

/// A homological dimension; `AtLeast(cap)` when a cap was hit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value")]
pub enum DimValue {
    Finite(usize),
    AtLeast(usize),
}

impl DimValue {
    /// Provably `≤ n`.
    pub fn le(self, n: usize) -> bool {
        matches!(self, DimValue::Finite(x) if x <= n)
    }

    /// Provably `≥ n`.
    pub fn ge(self, n: usize) -> bool {
        match self {
            DimValue::Finite(x) | DimValue::AtLeast(x) => x >= n,
        }
    }

    pub fn finite(self) -> Option<usize> {
        match self {
            DimValue::Finite(x) => Some(x),
            DimValue::AtLeast(_) => None,
        }
    }

    pub fn is_capped(self) -> bool {
        matches!(self, DimValue::AtLeast(_))
    }
}

impl fmt::Display for DimValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DimValue::Finite(x) => write!(f, "{x}"),
            DimValue::AtLeast(x) => write!(f, ">={x}"),
        }
    }
}

fn length_value(r: &Resolution, cap: usize) -> DimValue {
    if r.capped {
        DimValue::AtLeast(cap.max(1))
    } else {
        DimValue::Finite(r.length())
    }
}

pub fn pdim(m: &Module, cap: usize) -> DimValue {
    length_value(&min_proj_resolution(m, cap), cap)
}

pub fn idim(m: &Module, cap: usize) -> DimValue {
    length_value(&min_inj_coresolution(m, cap), cap)
}

/// Maximum projective dimension of the simples (which bounds all modules).
pub fn gldim(a: &Arc<Algebra>, cap: usize) -> DimValue {
    let mut best = 0;
    for s in simples(a) {
        match pdim(&s, cap) {
            DimValue::Finite(x) => best = best.max(x),
            capped => return capped,
        }
    }
    DimValue::Finite(best)
}

/// Vertices `j` whose indecomposable injective `I_j` is projective.
pub fn projective_injective_vertices(a: &Arc<Algebra>) -> Vec<usize> {
    (0..a.num_vertices()).filter(|&j| is_projective(&injective(a, j))).collect()
}

/// Number of leading projective terms in the minimal injective coresolutions
/// of the indecomposable projectives, minimized over them.
pub fn domdim(a: &Arc<Algebra>, cap: usize) -> DimValue {
    let pi = projective_injective_vertices(a);
    let mut best: Option<usize> = None;
    for i in 0..a.num_vertices() {
        let r = min_inj_coresolution(&projective(a, i), cap);
        let count = r
            .vertices
            .iter()
            .take_while(|vs| !vs.is_empty() && vs.iter().all(|v| pi.contains(v)))
            .count();
        let all_projective = count == r.vertices.iter().filter(|vs| !vs.is_empty()).count();
        if !all_projective {
            best = Some(best.map_or(count, |b| b.min(count)));
        }
    }
    match best {
        Some(b) => DimValue::Finite(b),
        None => DimValue::AtLeast(cap.max(1)),
    }
}

/// `Ω^k M` along the minimal projective resolution (zero past its end).
pub fn syzygy(m: &Module, k: usize) -> Module {
    if k == 0 {
        return m.clone();
    }
    let r = min_proj_resolution(m, k);
    r.syzygy(k).cloned().unwrap_or_else(|| Module::zero(m.algebra()))
}

/// `Ω^{−k} M = D Ω^k D M`.
pub fn cosyzygy(m: &Module, k: usize) -> Module {
    dual(&syzygy(&dual(m), k))
}
