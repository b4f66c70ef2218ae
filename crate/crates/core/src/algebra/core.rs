use std::collections::hash_map::DefaultHasher;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, OnceLock, Weak};

use crate::error::{Error, Result};
use crate::exactla::{Field, Matrix, RowSpace};

use super::Quiver;

/// A basic, split, finite-dimensional algebra in pointed-basis form.
///
/// Every basis element `b` carries a pointing `(s, t)` with `e_s b e_t = b`.
/// Vertex idempotents are basis elements; every other basis element lies in
/// the Jacobson radical. Products are stored as sparse structure constants.
///
/// Conventions used throughout the crate: modules are right modules, vectors
/// are rows (`m ↦ m·b`), and paths compose left to right, so the arrow
/// `a: i → j` is pointed `(i, j)` and `e_i A` is the projective at `i`.
pub struct Algebra {
    field: Field,
    vertices: Vec<String>,
    labels: Vec<String>,
    idempotents: Vec<usize>,
    pointing: Vec<(usize, usize)>,
    mult: Vec<Vec<(usize, u32)>>,
    radical: Vec<usize>,
    generators: Vec<usize>,
    by_pointing: Vec<Vec<usize>>,
    block_pos: Vec<usize>,
    quiver: Option<(Quiver, Vec<Vec<usize>>)>,
    fingerprint: u64,
    opposite: OnceLock<Arc<Algebra>>,
    origin: Weak<Algebra>,
}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Algebra")
            .field("p", &self.field.characteristic())
            .field("dim", &self.dim())
            .field("vertices", &self.vertices)
            .field("labels", &self.labels)
            .finish()
    }
}

/// Raw ingredients of an algebra, validated by [`Algebra::new`].
pub struct AlgebraParts {
    pub field: Field,
    pub vertices: Vec<String>,
    pub labels: Vec<String>,
    pub idempotents: Vec<usize>,
    pub pointing: Vec<(usize, usize)>,
    /// `mult[x * dim + y]` is `b_x b_y` as a sparse vector.
    pub mult: Vec<Vec<(usize, u32)>>,
    /// For path algebras: the quiver and the arrow word of each basis element.
    pub quiver: Option<(Quiver, Vec<Vec<usize>>)>,
}

impl Algebra {
    pub fn new(parts: AlgebraParts) -> Result<Arc<Algebra>> {
        let alg = Algebra::assemble(parts, Weak::new())?;
        alg.validate()?;
        Ok(Arc::new(alg))
    }

    fn assemble(parts: AlgebraParts, origin: Weak<Algebra>) -> Result<Algebra> {
        let AlgebraParts { field, vertices, labels, idempotents, pointing, mult, quiver } = parts;
        let n = labels.len();
        let nv = vertices.len();
        if pointing.len() != n || mult.len() != n * n || idempotents.len() != nv {
            return Err(Error::InvalidAlgebra("inconsistent table sizes".into()));
        }
        if pointing.iter().any(|&(s, t)| s >= nv || t >= nv) {
            return Err(Error::InvalidAlgebra("pointing refers to unknown vertex".into()));
        }
        let mut by_pointing = vec![Vec::new(); nv * nv];
        let mut block_pos = vec![0usize; n];
        for (b, &(s, t)) in pointing.iter().enumerate() {
            block_pos[b] = by_pointing[s * nv + t].len();
            by_pointing[s * nv + t].push(b);
        }
        let mut is_idem = vec![false; n];
        for &e in &idempotents {
            if e >= n {
                return Err(Error::InvalidAlgebra("idempotent index out of range".into()));
            }
            is_idem[e] = true;
        }
        let radical: Vec<usize> = (0..n).filter(|&b| !is_idem[b]).collect();
        let mut h = DefaultHasher::new();
        field.characteristic().hash(&mut h);
        nv.hash(&mut h);
        idempotents.hash(&mut h);
        pointing.hash(&mut h);
        mult.hash(&mut h);
        let fingerprint = h.finish();
        let mut alg = Algebra {
            field,
            vertices,
            labels,
            idempotents,
            pointing,
            mult,
            radical,
            generators: Vec::new(),
            by_pointing,
            block_pos,
            quiver,
            fingerprint,
            opposite: OnceLock::new(),
            origin,
        };
        alg.generators = alg.compute_generators();
        Ok(alg)
    }

    /// Radical basis elements whose classes span rad/rad².
    fn compute_generators(&self) -> Vec<usize> {
        let n = self.dim();
        let f = self.field;
        let mut rad2 = Vec::new();
        for &x in &self.radical {
            for &y in &self.radical {
                let prod = self.product(x, y);
                if !prod.is_empty() {
                    rad2.push(self.dense(prod));
                }
            }
        }
        let mut span = RowSpace::from_vecs(f, n, &rad2);
        let mut gens = Vec::new();
        for &r in &self.radical {
            let mut v = vec![0u32; n];
            v[r] = 1;
            if !span.contains(&v) {
                gens.push(r);
                span = span.sum(&RowSpace::from_vecs(f, n, &[v]));
            }
        }
        gens
    }

    fn dense(&self, sparse: &[(usize, u32)]) -> Vec<u32> {
        let mut v = vec![0u32; self.dim()];
        for &(i, c) in sparse {
            v[i] = c;
        }
        v
    }

    fn validate(&self) -> Result<()> {
        let n = self.dim();
        let nv = self.num_vertices();
        let f = self.field;
        let bad = |msg: String| Err(Error::InvalidAlgebra(msg));
        for (i, &e) in self.idempotents.iter().enumerate() {
            if self.pointing[e] != (i, i) {
                return bad(format!("idempotent of vertex {i} is not pointed ({i},{i})"));
            }
        }
        for x in 0..n {
            for y in 0..n {
                let (s, t) = self.pointing[x];
                let (t2, u) = self.pointing[y];
                let prod = self.product(x, y);
                if t != t2 && !prod.is_empty() {
                    return bad(format!("{} * {} must vanish by pointing", self.labels[x], self.labels[y]));
                }
                for &(z, c) in prod {
                    if c == 0 || c >= f.characteristic() || z >= n {
                        return bad("malformed structure constant".into());
                    }
                    if self.pointing[z] != (s, u) {
                        return bad(format!("{} * {} leaves its pointed block", self.labels[x], self.labels[y]));
                    }
                }
            }
        }
        // units and idempotents
        for b in 0..n {
            let (s, t) = self.pointing[b];
            for i in 0..nv {
                let e = self.idempotents[i];
                let left = self.product(e, b);
                let right = self.product(b, e);
                let expect_left: &[(usize, u32)] = if i == s { &[(b, 1)] } else { &[] };
                let expect_right: &[(usize, u32)] = if i == t { &[(b, 1)] } else { &[] };
                if left != expect_left || right != expect_right {
                    return bad(format!("idempotent e_{i} does not act correctly on {}", self.labels[b]));
                }
            }
        }
        // associativity on all basis triples
        for x in 0..n {
            for y in 0..n {
                if self.pointing[x].1 != self.pointing[y].0 {
                    continue;
                }
                let xy = self.product(x, y);
                for z in 0..n {
                    if self.pointing[y].1 != self.pointing[z].0 {
                        continue;
                    }
                    let lhs = self.mul_sparse(xy, z, true);
                    let yz = self.product(y, z);
                    let rhs = self.mul_sparse(yz, x, false);
                    if lhs != rhs {
                        return bad(format!(
                            "associativity fails on ({}, {}, {})",
                            self.labels[x], self.labels[y], self.labels[z]
                        ));
                    }
                }
            }
        }
        // radical is an ideal
        let mut is_rad = vec![false; n];
        for &r in &self.radical {
            is_rad[r] = true;
        }
        for &r in &self.radical {
            for b in 0..n {
                for prod in [self.product(r, b), self.product(b, r)] {
                    if prod.iter().any(|&(z, _)| !is_rad[z]) {
                        return bad("radical span is not an ideal".into());
                    }
                }
            }
        }
        // nilpotency of the radical: rad^k shrinks to zero
        let mut power = RowSpace::from_vecs(
            f,
            n,
            &self.radical.iter().map(|&r| self.unit_vector(r)).collect::<Vec<_>>(),
        );
        let mut steps = 0;
        while power.dim() > 0 {
            steps += 1;
            if steps > n + 1 {
                return bad("radical is not nilpotent".into());
            }
            let mut next = Vec::new();
            for i in 0..power.dim() {
                let v = power.basis().row(i).to_vec();
                for &r in &self.radical {
                    let w = self.mul(&v, &self.unit_vector(r));
                    if w.iter().any(|&c| c != 0) {
                        next.push(w);
                    }
                }
            }
            power = RowSpace::from_vecs(f, n, &next);
        }
        Ok(())
    }

    /// `(Σ c_i b_i) * b_z` if `left`, else `b_z * (Σ c_i b_i)`, as a sorted sparse vector.
    fn mul_sparse(&self, v: &[(usize, u32)], z: usize, left: bool) -> Vec<(usize, u32)> {
        let mut acc = vec![0u32; self.dim()];
        for &(i, c) in v {
            let prod = if left { self.product(i, z) } else { self.product(z, i) };
            for &(k, d) in prod {
                acc[k] = self.field.mul_add(acc[k], c, d);
            }
        }
        acc.into_iter().enumerate().filter(|&(_, c)| c != 0).collect()
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn idempotent(&self, i: usize) -> usize {
        self.idempotents[i]
    }

    pub fn idempotents(&self) -> &[usize] {
        &self.idempotents
    }

    pub fn pointing(&self, b: usize) -> (usize, usize) {
        self.pointing[b]
    }

    /// Basis elements pointed `(s, t)`, i.e. a basis of `e_s A e_t`.
    pub fn pointed(&self, s: usize, t: usize) -> &[usize] {
        &self.by_pointing[s * self.num_vertices() + t]
    }

    /// Index of `b` within [`Algebra::pointed`] of its own pointing.
    pub fn block_position(&self, b: usize) -> usize {
        self.block_pos[b]
    }

    /// Structure constants of `b_x b_y`.
    pub fn product(&self, x: usize, y: usize) -> &[(usize, u32)] {
        &self.mult[x * self.dim() + y]
    }

    /// Product of two dense elements.
    pub fn mul(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        let f = self.field;
        let mut out = vec![0u32; self.dim()];
        for (i, &a) in x.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in y.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                let ab = f.mul(a, b);
                for &(k, c) in self.product(i, j) {
                    out[k] = f.mul_add(out[k], ab, c);
                }
            }
        }
        out
    }

    pub fn unit_vector(&self, b: usize) -> Vec<u32> {
        let mut v = vec![0u32; self.dim()];
        v[b] = 1;
        v
    }

    pub fn radical_basis(&self) -> &[usize] {
        &self.radical
    }

    pub fn is_radical(&self, b: usize) -> bool {
        !self.idempotents.contains(&b)
    }

    /// Radical basis elements generating the radical; together with the
    /// idempotents they generate the algebra.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn quiver(&self) -> Option<&Quiver> {
        self.quiver.as_ref().map(|(q, _)| q)
    }

    /// Arrow word of basis element `b` (path algebras only).
    pub fn path_word(&self, b: usize) -> Option<&[usize]> {
        self.quiver.as_ref().map(|(_, w)| w[b].as_slice())
    }

    /// Identifies algebras with identical tables (used to compare modules).
    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    pub fn same_as(&self, other: &Algebra) -> bool {
        std::ptr::eq(self, other) || self.fingerprint == other.fingerprint
    }

    pub fn is_semisimple(&self) -> bool {
        self.radical.is_empty()
    }

    /// Left multiplication by `b` as a dense matrix on the row-vector space `A`.
    pub fn right_mult_matrix(&self, b: usize) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(self.field, n, n);
        for x in 0..n {
            for &(z, c) in self.product(x, b) {
                m.set(x, z, c);
            }
        }
        m
    }

    /// The opposite algebra: same basis, `x ∘ y := y x`, pointing transposed.
    /// Cached; the opposite of the opposite is this algebra again.
    pub fn opposite(self: &Arc<Self>) -> Arc<Algebra> {
        if let Some(orig) = self.origin.upgrade() {
            return orig;
        }
        self.opposite
            .get_or_init(|| {
                let n = self.dim();
                let mut mult = vec![Vec::new(); n * n];
                for x in 0..n {
                    for y in 0..n {
                        mult[x * n + y] = self.product(y, x).to_vec();
                    }
                }
                let quiver = self.quiver.as_ref().map(|(q, words)| {
                    let rq = q.reversed();
                    let rw = words.iter().map(|w| w.iter().rev().copied().collect()).collect();
                    (rq, rw)
                });
                let parts = AlgebraParts {
                    field: self.field,
                    vertices: self.vertices.clone(),
                    labels: self.labels.clone(),
                    idempotents: self.idempotents.clone(),
                    pointing: self.pointing.iter().map(|&(s, t)| (t, s)).collect(),
                    mult,
                    quiver,
                };
                Arc::new(
                    Algebra::assemble(parts, Arc::downgrade(self))
                        .expect("opposite of a valid algebra is valid"),
                )
            })
            .clone()
    }

    /// The semisimple algebra F_p^n.
    pub fn semisimple(field: Field, n: usize) -> Arc<Algebra> {
        let mut mult = vec![Vec::new(); n * n];
        for i in 0..n {
            mult[i * n + i] = vec![(i, 1)];
        }
        Algebra::new(AlgebraParts {
            field,
            vertices: (1..=n).map(|i| i.to_string()).collect(),
            labels: (1..=n).map(|i| format!("e{i}")).collect(),
            idempotents: (0..n).collect(),
            pointing: (0..n).map(|i| (i, i)).collect(),
            mult,
            quiver: None,
        })
        .expect("semisimple algebra is valid")
    }

    /// Raw multiplication table, for comparisons in tests.
    pub fn table(&self) -> &[Vec<(usize, u32)>] {
        &self.mult
    }
}
