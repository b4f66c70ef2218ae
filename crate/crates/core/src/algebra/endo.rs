use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactla::{Coordinates, Matrix, RowSpace};
use crate::repn::{hom_space, is_isomorphic, HomBasis, ModMap, Module};

use super::{Algebra, AlgebraParts};

/// Result of [`local_split_check`].
#[derive(Clone, Debug)]
pub struct LocalSplit {
    pub is_local_split: bool,
    /// `λ_f` for every input matrix (meaningful only when local split).
    pub eigenvalues: Vec<u32>,
    /// Basis of `J = span{f − λ_f·1}`.
    pub radical_basis: Vec<Matrix>,
}

fn flat(m: &Matrix) -> Vec<u32> {
    m.data().to_vec()
}

/// The unique eigenvalue of `f`, if its minimal polynomial is `(x − λ)^k`.
fn single_eigenvalue(f: &Matrix) -> Option<u32> {
    let field = f.field();
    let n = f.rows();
    if n == 0 {
        return Some(0);
    }
    // minimal polynomial from the first linear dependency among powers
    let mut powers = vec![Matrix::identity(field, n)];
    let mut span = RowSpace::from_vecs(field, n * n, &[flat(&powers[0])]);
    loop {
        let next = powers.last().unwrap().mul(f);
        if span.contains(&flat(&next)) {
            powers.push(next);
            break;
        }
        span = span.sum(&RowSpace::from_vecs(field, n * n, &[flat(&next)]));
        powers.push(next);
    }
    let k = powers.len() - 1;
    let p = field.characteristic() as usize;
    let nilpotent_shift = |lam: u32| {
        let g = f.sub(&Matrix::identity(field, n).scale(lam));
        g.pow(k).is_zero()
    };
    if k < p {
        // x^k − (k λ) x^{k−1} + ...: λ = (coefficient of f^{k−1}) / k
        let coeffs = Coordinates::new(&Matrix::from_row_vecs(
            field,
            n * n,
            &powers[..k].iter().map(flat).collect::<Vec<_>>(),
        ))
        .coords(&flat(&powers[k]))
        .expect("dependent by construction");
        let lam = field.mul(coeffs[k - 1], field.inv(field.from_u64(k as u64)));
        nilpotent_shift(lam).then_some(lam)
    } else {
        (0..field.characteristic()).find(|&lam| nilpotent_shift(lam))
    }
}

/// Decides whether the unital matrix algebra spanned by `e` is local with
/// residue field F_p: every element's minimal polynomial is a power of a
/// linear factor, and `J = span{f − λ_f}` is a nilpotent ideal of codimension one.
pub fn local_split_check(e: &[Matrix]) -> LocalSplit {
    let fail = LocalSplit { is_local_split: false, eigenvalues: vec![], radical_basis: vec![] };
    let Some(first) = e.first() else { return fail };
    let field = first.field();
    let n = first.rows();
    let nn = n * n;
    let mut eigenvalues = Vec::with_capacity(e.len());
    let mut shifted = Vec::with_capacity(e.len());
    for f in e {
        let Some(lam) = single_eigenvalue(f) else { return fail };
        eigenvalues.push(lam);
        shifted.push(flat(&f.sub(&Matrix::identity(field, n).scale(lam))));
    }
    let whole = RowSpace::from_vecs(field, nn, &e.iter().map(flat).collect::<Vec<_>>());
    let j = RowSpace::from_vecs(field, nn, &shifted);
    if n == 0 || j.dim() + 1 != whole.dim() {
        return LocalSplit { is_local_split: false, eigenvalues, radical_basis: vec![] };
    }
    let jm: Vec<Matrix> = (0..j.dim()).map(|r| Matrix::from_vec(field, n, n, j.basis().row(r).to_vec())).collect();
    // closed under products
    for x in &jm {
        for y in &jm {
            if !j.contains(&flat(&x.mul(y))) {
                return fail;
            }
        }
    }
    // nilpotent: J^k shrinks to zero
    let mut power = jm.clone();
    let mut steps = 0;
    while !power.is_empty() {
        steps += 1;
        if steps > n + 1 {
            return fail;
        }
        let prods: Vec<Vec<u32>> =
            power.iter().flat_map(|x| jm.iter().map(move |y| flat(&x.mul(y)))).filter(|v| v.iter().any(|&c| c != 0)).collect();
        let sp = RowSpace::from_vecs(field, nn, &prods);
        power = (0..sp.dim()).map(|r| Matrix::from_vec(field, n, n, sp.basis().row(r).to_vec())).collect();
    }
    LocalSplit { is_local_split: true, eigenvalues, radical_basis: jm }
}

/// Whether `End_A(M)` is local and split (i.e. `M` is indecomposable).
pub fn is_local_module(m: &Module) -> Result<bool> {
    if m.is_zero() {
        return Ok(false);
    }
    let h = hom_space(m, m)?;
    let mats: Vec<Matrix> = h.maps().iter().map(|f| f.full_matrix(m.field())).collect();
    Ok(local_split_check(&mats).is_local_split)
}

/// Bookkeeping for `End_A(⊕ M_i)`: the summands, the Hom bases and the
/// translation between algebra basis elements and concrete maps.
///
/// Convention: the basis element `f: M_i → M_j` is pointed `(j, i)` and the
/// product is composition, `γ₁·γ₂ = γ₁ ∘ γ₂`. Then `Hom_A(⊕M_i, X)` is a
/// right module with `h·γ = h ∘ γ`, and `Hom_A(⊕M_i, M_k)` is the projective
/// at vertex `k`.
#[derive(Clone, Debug)]
pub struct AlgebraMap {
    pub modules: Vec<Module>,
    /// For each basis element of the End algebra: `(source, target, map)`.
    pub elements: Vec<(usize, usize, ModMap)>,
    /// Basis elements of each block, indexed `[target * n + source]`.
    blocks: Vec<Vec<usize>>,
    coords: Vec<Option<Coordinates>>,
}

impl AlgebraMap {
    pub fn len(&self) -> usize {
        self.modules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.modules.is_empty()
    }

    /// Basis elements representing maps `M_src → M_dst`.
    pub fn block(&self, src: usize, dst: usize) -> &[usize] {
        &self.blocks[dst * self.modules.len() + src]
    }

    /// Expresses a map `M_src → M_dst` in the algebra basis.
    pub fn express(&self, src: usize, dst: usize, f: &ModMap) -> Option<Vec<(usize, u32)>> {
        let n = self.modules.len();
        let basis = self.block(src, dst);
        match &self.coords[dst * n + src] {
            None => f.is_zero().then(Vec::new),
            Some(c) => {
                let v = c.coords(&f.flatten())?;
                Some(basis.iter().copied().zip(v).filter(|&(_, c)| c != 0).collect())
            }
        }
    }
}

/// The endomorphism algebra of a list of pairwise non-isomorphic modules with
/// local split endomorphism rings.
pub fn endomorphism_algebra(ms: &[Module]) -> Result<(Arc<Algebra>, AlgebraMap)> {
    let n = ms.len();
    if n == 0 {
        return Err(Error::Precondition("endomorphism algebra of an empty list".into()));
    }
    for (i, m) in ms.iter().enumerate() {
        if m.is_zero() {
            return Err(Error::ZeroSummand(i));
        }
        ms[0].check_same(m)?;
    }
    let field = ms[0].field();
    let mut homs: Vec<HomBasis> = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            homs.push(hom_space(&ms[i], &ms[j])?);
        }
    }
    let hom = |i: usize, j: usize| &homs[i * n + j];
    // diagonal: {id} ∪ basis of the radical
    let mut diag_rad: Vec<Vec<ModMap>> = Vec::with_capacity(n);
    for i in 0..n {
        let mats: Vec<Matrix> = hom(i, i).maps().iter().map(|f| f.full_matrix(field)).collect();
        let ls = local_split_check(&mats);
        if !ls.is_local_split {
            return Err(Error::NonSplitEndomorphism(i));
        }
        let dims = ms[i].dims();
        let rad = ls
            .radical_basis
            .iter()
            .map(|j| {
                let mut blocks = Vec::new();
                let mut off = 0;
                for &d in dims {
                    blocks.push(j.submatrix(off..off + d, off..off + d));
                    off += d;
                }
                ModMap::new(blocks)
            })
            .collect();
        diag_rad.push(rad);
    }
    for i in 0..n {
        for j in i + 1..n {
            if ms[i].dims() == ms[j].dims() && is_isomorphic(&ms[i], &ms[j])? {
                return Err(Error::IsomorphicSummands(i, j));
            }
        }
    }

    let mut elements: Vec<(usize, usize, ModMap)> = (0..n).map(|i| (i, i, ModMap::identity(&ms[i]))).collect();
    let mut blocks = vec![Vec::new(); n * n];
    for i in 0..n {
        blocks[i * n + i].push(i);
    }
    // radical elements grouped by pointing (target, source)
    for dst in 0..n {
        for src in 0..n {
            let maps: Vec<ModMap> =
                if src == dst { diag_rad[src].clone() } else { hom(src, dst).maps().to_vec() };
            for f in maps {
                blocks[dst * n + src].push(elements.len());
                elements.push((src, dst, f));
            }
        }
    }
    let coords: Vec<Option<Coordinates>> = blocks
        .iter()
        .map(|b| {
            if b.is_empty() {
                return None;
            }
            let rows: Vec<Vec<u32>> = b.iter().map(|&e| elements[e].2.flatten()).collect();
            let len = rows[0].len();
            Some(Coordinates::new(&Matrix::from_row_vecs(field, len, &rows)))
        })
        .collect();
    let dim = elements.len();
    let mut mult = vec![Vec::new(); dim * dim];
    for (x, (sx, tx, fx)) in elements.iter().enumerate() {
        for (y, (sy, ty, fy)) in elements.iter().enumerate() {
            // x·y = x ∘ y needs target(y) = source(x)
            if *ty != *sx {
                continue;
            }
            let comp = fy.then(fx);
            let basis = &blocks[tx * n + sy];
            let v = match &coords[tx * n + sy] {
                None => {
                    debug_assert!(comp.is_zero());
                    Vec::new()
                }
                Some(c) => {
                    let cs = c.coords(&comp.flatten()).expect("composition of homs is a hom");
                    let mut v: Vec<(usize, u32)> =
                        basis.iter().copied().zip(cs).filter(|&(_, c)| c != 0).collect();
                    v.sort_unstable();
                    v
                }
            };
            mult[x * dim + y] = v;
        }
    }
    let labels = elements
        .iter()
        .enumerate()
        .map(|(k, (s, t, _))| if k < n { format!("id{}", s + 1) } else { format!("f{}_{}_{}", t + 1, s + 1, k) })
        .collect();
    let alg = Algebra::new(AlgebraParts {
        field,
        vertices: (1..=n).map(|i| i.to_string()).collect(),
        labels,
        idempotents: (0..n).collect(),
        pointing: elements.iter().map(|(s, t, _)| (*t, *s)).collect(),
        mult,
        quiver: None,
    })?;
    Ok((alg, AlgebraMap { modules: ms.to_vec(), elements, blocks, coords }))
}

/// The right `End`-module `Hom_A(⊕M_i, X)`: vertex `i` is `Hom_A(M_i, X)`
/// and `γ: M_i → M_j` acts by `h ↦ h ∘ γ`. Returns the module and the Hom
/// bases used for each vertex.
pub fn hom_functor(end: &Arc<Algebra>, map: &AlgebraMap, x: &Module) -> Result<(Module, Vec<HomBasis>)> {
    let field = end.field();
    let bases: Vec<HomBasis> = map.modules.iter().map(|m| hom_space(m, x)).collect::<Result<_>>()?;
    let dims: Vec<usize> = bases.iter().map(|b| b.dim()).collect();
    let action = map
        .elements
        .iter()
        .map(|(src, dst, g)| {
            // pointed (dst, src): block dst → block src
            let rows: Vec<Vec<u32>> = bases[*dst]
                .maps()
                .iter()
                .map(|h| bases[*src].coords(&g.then(h)).expect("precomposition is A-linear"))
                .collect();
            Matrix::from_row_vecs(field, dims[*src], &rows)
        })
        .collect();
    Ok((Module::from_parts(end.clone(), dims, action), bases))
}

/// The additive closure `add(M_1 ⊕ … ⊕ M_n)` of pairwise non-isomorphic
/// indecomposables, tested through projectivization over `End`.
#[derive(Clone, Debug)]
pub struct AddClosure {
    pub end: Arc<Algebra>,
    pub map: AlgebraMap,
}

impl AddClosure {
    pub fn new(gens: &[Module]) -> Result<AddClosure> {
        let (end, map) = endomorphism_algebra(gens)?;
        Ok(AddClosure { end, map })
    }

    pub fn generators(&self) -> &[Module] {
        &self.map.modules
    }

    /// Multiplicities `m_i` with `x ≅ ⊕ M_i^{m_i}`, or `None` if `x ∉ add M`.
    pub fn multiplicities(&self, x: &Module) -> Result<Option<Vec<usize>>> {
        let n = self.map.len();
        if x.is_zero() {
            return Ok(Some(vec![0; n]));
        }
        self.map.modules[0].check_same(x)?;
        let (h, bases) = hom_functor(&self.end, &self.map, x)?;
        let cover = crate::repn::projective_cover(&h);
        // (i) Hom(M, x) is projective over End
        if cover.module.dim() != h.dim() {
            return Ok(None);
        }
        // (ii) evaluation ⊕ M_{s_k} → x is bijective
        let field = x.field();
        let maps: Vec<ModMap> =
            cover.vertices.iter().zip(&cover.generators).map(|(&s, v)| bases[s].combine(v)).collect();
        let src_dims: Vec<usize> =
            (0..x.dims().len()).map(|i| cover.vertices.iter().map(|&s| self.map.modules[s].dims()[i]).sum()).collect();
        let eval = ModMap::vstack(&maps, x.dims(), field);
        debug_assert_eq!(eval.src_dims(), src_dims);
        if !eval.is_iso() {
            return Ok(None);
        }
        let mut mult = vec![0; n];
        for &s in &cover.vertices {
            mult[s] += 1;
        }
        Ok(Some(mult))
    }

    pub fn contains(&self, x: &Module) -> Result<bool> {
        Ok(self.multiplicities(x)?.is_some())
    }
}

/// `x ∈ add(gens)` with multiplicities; builds `End(gens)` on the fly.
pub fn in_add(x: &Module, gens: &[Module]) -> Result<Option<Vec<usize>>> {
    AddClosure::new(gens)?.multiplicities(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::Field;

    fn mat(rows: &[Vec<i64>]) -> Matrix {
        Matrix::from_rows(Field::default(), rows)
    }

    #[test]
    fn scalars_are_local() {
        let r = local_split_check(&[mat(&[vec![1]])]);
        assert!(r.is_local_split);
        assert!(r.radical_basis.is_empty());
    }

    #[test]
    fn dual_numbers_are_local() {
        let one = mat(&[vec![1, 0], vec![0, 1]]);
        let x = mat(&[vec![0, 1], vec![0, 0]]);
        let r = local_split_check(&[one, x]);
        assert!(r.is_local_split);
        assert_eq!(r.radical_basis.len(), 1);
    }

    #[test]
    fn matrix_ring_is_not_local() {
        let e = |i: usize, j: usize| {
            let mut m = Matrix::zeros(Field::default(), 2, 2);
            m.set(i, j, 1);
            m
        };
        let r = local_split_check(&[e(0, 0), e(0, 1), e(1, 0), e(1, 1)]);
        assert!(!r.is_local_split);
    }

    #[test]
    fn non_split_rotation() {
        // x^2 + 1 is irreducible over F_7
        let f7 = Field::new(7).unwrap();
        let one = Matrix::identity(f7, 2);
        let j = Matrix::from_rows(f7, &[vec![0, 1], vec![-1, 0]]);
        assert!(!local_split_check(&[one, j]).is_local_split);
    }

    #[test]
    fn small_characteristic_fallback() {
        // Jordan block of size 3 over F_2: k = 3 >= p
        let f2 = Field::new(2).unwrap();
        let j = Matrix::from_rows(f2, &[vec![1, 1, 0], vec![0, 1, 1], vec![0, 0, 1]]);
        assert_eq!(single_eigenvalue(&j), Some(1));
    }
}
