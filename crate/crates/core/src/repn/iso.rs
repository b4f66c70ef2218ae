use std::sync::atomic::{AtomicU64, Ordering};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::is_local_module;
use crate::error::Result;
use crate::exactla::rank;

use super::{hom_space, HomBasis, ModMap, Module};

static DEFAULT_SEED: AtomicU64 = AtomicU64::new(0x5eed);

/// Random trials used by [`is_isomorphic`] before the deterministic fallback.
pub const ISO_TRIALS: usize = 32;

/// Seed for the randomized isomorphism search.
pub fn set_default_seed(seed: u64) {
    DEFAULT_SEED.store(seed, Ordering::Relaxed);
}

pub fn default_seed() -> u64 {
    DEFAULT_SEED.load(Ordering::Relaxed)
}

fn total_rank(f: &ModMap) -> usize {
    f.blocks().iter().map(rank).sum()
}

/// `m ≅ n`?
///
/// If `End(m)` is local, the answer is exact: `m ≅ n` iff the dimension
/// vectors agree and `m` is a summand of `n`, which happens iff some product
/// `g ∘ f` of basis maps `f: m → n`, `g: n → m` is invertible (non-units of
/// a local ring form an ideal). Otherwise random combinations of a Hom basis
/// are tried, followed by a greedy coefficient-by-coefficient rank search.
pub fn is_isomorphic(m: &Module, n: &Module) -> Result<bool> {
    m.check_same(n)?;
    if m.dims() != n.dims() {
        return Ok(false);
    }
    if m.is_zero() {
        return Ok(true);
    }
    let h = hom_space(m, n)?;
    if h.is_empty() {
        return Ok(false);
    }
    if is_local_module(m)? {
        return Ok(split_summand_with(&h, &hom_space(n, m)?).is_some());
    }
    Ok(find_iso(&h, m.dim()).is_some())
}

/// Random search then greedy fallback for an invertible element of `h`.
pub fn find_iso(h: &HomBasis, dim: usize) -> Option<ModMap> {
    let f = h.map(0).blocks().first().map(|b| b.field())?;
    let p = f.characteristic();
    let mut rng = ChaCha8Rng::seed_from_u64(default_seed());
    for _ in 0..ISO_TRIALS {
        let coeffs: Vec<u32> = (0..h.dim()).map(|_| rng.gen_range(0..p)).collect();
        let g = h.combine(&coeffs);
        if g.is_iso() {
            return Some(g);
        }
    }
    let mut coeffs = vec![0u32; h.dim()];
    let tries = p.min(dim as u32 + 2);
    for i in 0..h.dim() {
        let mut best = (total_rank(&h.combine(&coeffs)), coeffs[i]);
        for c in 1..tries {
            coeffs[i] = c;
            let r = total_rank(&h.combine(&coeffs));
            if r > best.0 {
                best = (r, c);
            }
        }
        coeffs[i] = best.1;
    }
    let g = h.combine(&coeffs);
    g.is_iso().then_some(g)
}

/// With `to = Hom(X, M)` and `back = Hom(M, X)` for a module `X` with local
/// endomorphism ring: a pair `(h, f)` with `f ∘ h` invertible, if any.
fn split_summand_with(to: &HomBasis, back: &HomBasis) -> Option<(ModMap, ModMap)> {
    for h in to.maps() {
        for f in back.maps() {
            if h.then(f).is_iso() {
                return Some((h.clone(), f.clone()));
            }
        }
    }
    None
}

/// If the indecomposable `x` is a direct summand of `m`, returns `(h, f)` with
/// `h: x → m`, `f: m → x` and `f ∘ h` invertible; then `m ≅ x ⊕ ker f`.
pub fn split_summand(m: &Module, x: &Module) -> Result<Option<(ModMap, ModMap)>> {
    m.check_same(x)?;
    if x.is_zero() || m.is_zero() {
        return Ok(None);
    }
    if x.dims().iter().zip(m.dims()).any(|(a, b)| a > b) {
        return Ok(None);
    }
    Ok(split_summand_with(&hom_space(x, m)?, &hom_space(m, x)?))
}

/// Removes all summands isomorphic to one of `xs` (each with local
/// endomorphism ring). Returns the remainder and how often each `xs[i]` split off.
pub fn strip_summands(m: &Module, xs: &[Module]) -> Result<(Module, Vec<usize>)> {
    let mut rest = m.clone();
    let mut counts = vec![0; xs.len()];
    for (i, x) in xs.iter().enumerate() {
        while let Some((_, f)) = split_summand(&rest, x)? {
            rest = rest.kernel_of(&f).0;
            counts[i] += 1;
        }
    }
    Ok((rest, counts))
}

/// `m` with all projective summands removed, and the number removed.
pub fn strip_projectives(m: &Module) -> Result<(Module, usize)> {
    let (rest, counts) = strip_summands(m, &super::projectives(m.algebra()))?;
    Ok((rest, counts.iter().sum()))
}

/// `m` with all injective summands removed, and the number removed.
pub fn strip_injectives(m: &Module) -> Result<(Module, usize)> {
    let (rest, counts) = strip_summands(m, &super::injectives(m.algebra()))?;
    Ok((rest, counts.iter().sum()))
}

/// Stable isomorphism: equal after stripping projective summands.
pub fn is_stably_isomorphic(m: &Module, n: &Module) -> Result<bool> {
    is_isomorphic(&strip_projectives(m)?.0, &strip_projectives(n)?.0)
}

pub fn is_projective(m: &Module) -> bool {
    super::projective_cover(m).module.dim() == m.dim()
}

pub fn is_injective(m: &Module) -> bool {
    is_projective(&super::dual(m))
}
