//! Gaussian elimination and the operations built on it.
//!
//! Every result that is a basis comes out in reduced row echelon form
//! (leading coefficient 1, zeros above and below each pivot), so equal
//! inputs always produce identical outputs.

use super::{Field, Matrix};

/// Reduced row echelon form of `m` and its pivot columns.
pub fn rref(m: &Matrix) -> (Matrix, Vec<usize>) {
    let mut a = m.clone();
    let pivots = rref_in_place(&mut a, None);
    (a, pivots)
}

/// Row-reduces `a` in place; if `track` is given, the same row operations
/// are applied to it. Zero rows are left at the bottom.
fn rref_in_place(a: &mut Matrix, mut track: Option<&mut Matrix>) -> Vec<usize> {
    let f = a.field();
    let (rows, cols) = a.shape();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| a.get(i, c) != 0) else {
            continue;
        };
        if pr != r {
            swap_rows(a, pr, r);
            if let Some(t) = track.as_deref_mut() {
                swap_rows(t, pr, r);
            }
        }
        let inv = f.inv(a.get(r, c));
        scale_row(a, r, inv);
        if let Some(t) = track.as_deref_mut() {
            scale_row(t, r, inv);
        }
        for i in 0..rows {
            if i == r {
                continue;
            }
            let x = a.get(i, c);
            if x != 0 {
                let s = f.neg(x);
                axpy_row(a, i, r, s, c);
                if let Some(t) = track.as_deref_mut() {
                    axpy_row(t, i, r, s, 0);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

fn swap_rows(a: &mut Matrix, i: usize, j: usize) {
    a.swap_rows(i, j);
}

fn scale_row(a: &mut Matrix, i: usize, s: u32) {
    let f = a.field();
    for x in a.row_mut(i) {
        *x = f.mul(*x, s);
    }
}

/// row_i += s * row_j, touching columns from `start` on.
fn axpy_row(a: &mut Matrix, i: usize, j: usize, s: u32, start: usize) {
    let f = a.field();
    let cols = a.cols();
    let (dst, src) = a.two_rows_mut(i, j);
    for (x, &y) in dst[start..cols].iter_mut().zip(&src[start..cols]) {
        if y != 0 {
            *x = f.mul_add(*x, s, y);
        }
    }
}

pub fn rank(m: &Matrix) -> usize {
    if m.rows() == 0 || m.cols() == 0 {
        return 0;
    }
    // eliminate on the smaller orientation
    if m.rows() > m.cols() {
        rref(&m.transpose()).1.len()
    } else {
        rref(m).1.len()
    }
}

/// Basis of the right null space `{x : m x = 0}`, as column vectors, itself
/// normalized to reduced echelon form.
pub fn kernel_basis(m: &Matrix) -> Vec<Vec<u32>> {
    let f = m.field();
    let cols = m.cols();
    let (r, pivots) = rref(m);
    let mut is_pivot = vec![false; cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut raw = Vec::new();
    for free in (0..cols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![0u32; cols];
        v[free] = 1;
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = f.neg(r.get(row, free));
        }
        raw.push(v);
    }
    if raw.is_empty() {
        return raw;
    }
    let (k, kp) = rref(&Matrix::from_row_vecs(f, cols, &raw));
    (0..kp.len()).map(|i| k.row(i).to_vec()).collect()
}

/// Basis of the left null space `{y : y m = 0}`, as row vectors.
pub fn left_kernel_basis(m: &Matrix) -> Vec<Vec<u32>> {
    kernel_basis(&m.transpose())
}

/// One solution of `m x = b` with free variables set to zero, or `None`.
pub fn solve(m: &Matrix, b: &[u32]) -> Option<Vec<u32>> {
    assert_eq!(b.len(), m.rows(), "right-hand side has wrong length");
    let f = m.field();
    let (rows, cols) = m.shape();
    let mut aug = Matrix::zeros(f, rows, cols + 1);
    for r in 0..rows {
        for c in 0..cols {
            aug.set(r, c, m.get(r, c));
        }
        aug.set(r, cols, b[r]);
    }
    let (red, pivots) = rref(&aug);
    if pivots.last() == Some(&cols) {
        return None;
    }
    let mut x = vec![0u32; cols];
    for (row, &pc) in pivots.iter().enumerate() {
        x[pc] = red.get(row, cols);
    }
    Some(x)
}

/// Column-space basis in echelon form; one vector per unit of rank.
pub fn image_basis(m: &Matrix) -> Vec<Vec<u32>> {
    let (r, pivots) = rref(&m.transpose());
    (0..pivots.len()).map(|i| r.row(i).to_vec()).collect()
}

/// Cokernel of `m` (acting on column vectors): a surjection `q` from
/// `F^rows` with `q m = 0`, given as a `(rows - rank) x rows` matrix, and
/// the cokernel dimension.
pub fn cokernel_data(m: &Matrix) -> (Matrix, usize) {
    let f = m.field();
    let basis = left_kernel_basis(m);
    let dim = basis.len();
    (Matrix::from_row_vecs(f, m.rows(), &basis), dim)
}

/// Kronecker product, `(a ⊗ b)[i*rb + k][j*cb + l] = a[i][j] * b[k][l]`.
pub fn kron(a: &Matrix, b: &Matrix) -> Matrix {
    let f = a.field();
    let (ra, ca) = a.shape();
    let (rb, cb) = b.shape();
    let mut out = Matrix::zeros(f, ra * rb, ca * cb);
    for i in 0..ra {
        for j in 0..ca {
            let x = a.get(i, j);
            if x == 0 {
                continue;
            }
            for k in 0..rb {
                for l in 0..cb {
                    out.set(i * rb + k, j * cb + l, f.mul(x, b.get(k, l)));
                }
            }
        }
    }
    out
}

/// Inverse of a square matrix, if it is invertible.
pub fn inverse(m: &Matrix) -> Option<Matrix> {
    assert!(m.is_square());
    let n = m.rows();
    let mut a = m.clone();
    let mut t = Matrix::identity(m.field(), n);
    let pivots = rref_in_place(&mut a, Some(&mut t));
    (pivots.len() == n).then_some(t)
}

/// A subspace of `F^n` spanned by row vectors, stored in reduced echelon form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowSpace {
    basis: Matrix,
    pivots: Vec<usize>,
}

impl RowSpace {
    pub fn new(rows: &Matrix) -> Self {
        let (r, pivots) = rref(rows);
        let basis = r.select_rows(&(0..pivots.len()).collect::<Vec<_>>());
        RowSpace { basis, pivots }
    }

    pub fn from_vecs(field: Field, ambient: usize, vecs: &[Vec<u32>]) -> Self {
        RowSpace::new(&Matrix::from_row_vecs(field, ambient, vecs))
    }

    pub fn zero(field: Field, ambient: usize) -> Self {
        RowSpace { basis: Matrix::zeros(field, 0, ambient), pivots: vec![] }
    }

    pub fn full(field: Field, ambient: usize) -> Self {
        RowSpace { basis: Matrix::identity(field, ambient), pivots: (0..ambient).collect() }
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn ambient(&self) -> usize {
        self.basis.cols()
    }

    /// Echelon basis, one vector per row.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Residual of `v` after clearing the pivot coordinates.
    pub fn reduce(&self, v: &[u32]) -> Vec<u32> {
        let f = self.basis.field();
        let mut out = v.to_vec();
        for (r, &pc) in self.pivots.iter().enumerate() {
            let x = out[pc];
            if x != 0 {
                let s = f.neg(x);
                for (o, &b) in out.iter_mut().zip(self.basis.row(r)) {
                    if b != 0 {
                        *o = f.mul_add(*o, s, b);
                    }
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    /// Coordinates with respect to the echelon basis.
    pub fn coords(&self, v: &[u32]) -> Option<Vec<u32>> {
        self.contains(v).then(|| self.pivots.iter().map(|&p| v[p]).collect())
    }

    /// Columns that are not pivots; the matching unit vectors span a complement.
    pub fn complement(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient()];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient()).filter(|&c| !is_pivot[c]).collect()
    }

    pub fn contains_space(&self, other: &RowSpace) -> bool {
        (0..other.dim()).all(|i| self.contains(other.basis.row(i)))
    }

    pub fn sum(&self, other: &RowSpace) -> RowSpace {
        let f = self.basis.field();
        RowSpace::new(&Matrix::vstack(f, self.ambient(), &[&self.basis, &other.basis]))
    }
}

/// Coordinates with respect to an arbitrary (independent) list of row vectors.
#[derive(Clone, Debug)]
pub struct Coordinates {
    space: RowSpace,
    // rref = transform * original rows
    transform: Matrix,
}

impl Coordinates {
    /// `rows` must be linearly independent.
    pub fn new(rows: &Matrix) -> Self {
        let f = rows.field();
        let mut a = rows.clone();
        let mut t = Matrix::identity(f, rows.rows());
        let pivots = rref_in_place(&mut a, Some(&mut t));
        assert_eq!(pivots.len(), rows.rows(), "coordinate basis is not independent");
        Coordinates { space: RowSpace { basis: a, pivots }, transform: t }
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn coords(&self, v: &[u32]) -> Option<Vec<u32>> {
        let c = self.space.coords(v)?;
        Some(self.transform.vec_mul(&c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u32) -> Field {
        Field::new(p).unwrap()
    }

    #[test]
    fn rank_examples() {
        let f7 = f(7);
        assert_eq!(rank(&Matrix::zeros(f7, 0, 0)), 0);
        assert_eq!(rank(&Matrix::identity(f7, 3)), 3);
        assert_eq!(rank(&Matrix::from_rows(f7, &[vec![1, 2], vec![2, 4]])), 1);
    }

    #[test]
    fn kernel_examples() {
        let f5 = f(5);
        assert!(kernel_basis(&Matrix::identity(f5, 4)).is_empty());
        assert_eq!(kernel_basis(&Matrix::zeros(f5, 2, 3)).len(), 3);
        assert_eq!(kernel_basis(&Matrix::from_rows(f5, &[vec![1, 1]])), vec![vec![1, 4]]);
    }

    #[test]
    fn solve_examples() {
        let f7 = f(7);
        let id = Matrix::identity(f7, 3);
        assert_eq!(solve(&id, &[3, 0, 6]), Some(vec![3, 0, 6]));
        assert_eq!(solve(&Matrix::zeros(f7, 2, 2), &[1, 0]), None);
        let m = Matrix::from_rows(f7, &[vec![1, 2], vec![0, 1]]);
        assert_eq!(solve(&m, &[3, 1]), Some(vec![1, 1]));
    }

    #[test]
    fn image_examples() {
        let f5 = f(5);
        assert_eq!(image_basis(&Matrix::identity(f5, 2)), vec![vec![1, 0], vec![0, 1]]);
        assert!(image_basis(&Matrix::zeros(f5, 2, 2)).is_empty());
        assert_eq!(image_basis(&Matrix::from_rows(f5, &[vec![1], vec![2]])), vec![vec![1, 2]]);
    }

    #[test]
    fn cokernel_examples() {
        let f3 = f(3);
        assert_eq!(cokernel_data(&Matrix::identity(f3, 3)).1, 0);
        let (q, d) = cokernel_data(&Matrix::zeros(f3, 2, 4));
        assert_eq!(d, 2);
        assert_eq!(q, Matrix::identity(f3, 2));
        let m = Matrix::from_rows(f3, &[vec![1], vec![1]]);
        let (q, d) = cokernel_data(&m);
        assert_eq!(d, 1);
        assert!(q.mul(&m).is_zero());
    }

    #[test]
    fn kron_examples() {
        let f5 = f(5);
        assert_eq!(kron(&Matrix::identity(f5, 2), &Matrix::identity(f5, 3)), Matrix::identity(f5, 6));
        let a = Matrix::from_rows(f5, &[vec![1, 2], vec![3, 4]]);
        assert_eq!(kron(&a, &Matrix::identity(f5, 1)), a);
        let row = Matrix::from_rows(f5, &[vec![1, 1]]);
        let col = Matrix::from_rows(f5, &[vec![1], vec![1]]);
        assert_eq!(kron(&row, &col), Matrix::from_rows(f5, &[vec![1, 1], vec![1, 1]]));
    }

    #[test]
    fn coordinates_in_non_echelon_basis() {
        let f7 = f(7);
        let b = Matrix::from_rows(f7, &[vec![1, 1, 0], vec![0, 2, 1]]);
        let c = Coordinates::new(&b);
        // 3*(1,1,0) + 5*(0,2,1) = (3, 13, 5) = (3, 6, 5)
        assert_eq!(c.coords(&[3, 6, 5]), Some(vec![3, 5]));
        assert_eq!(c.coords(&[1, 0, 0]), None);
    }

    #[test]
    fn inverse_of_small_matrix() {
        let f7 = f(7);
        let m = Matrix::from_rows(f7, &[vec![2, 1], vec![1, 1]]);
        let inv = inverse(&m).unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(f7, 2));
        assert!(inverse(&Matrix::from_rows(f7, &[vec![1, 2], vec![2, 4]])).is_none());
    }
}
