use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactla::{Field, RowSpace};

use super::{parse_relation, Algebra, AlgebraParts, Quiver, RelationExpr};

/// Hard limit on the number of paths (and hence on the dimension) handled.
pub const MAX_PATHS: usize = 4096;

/// A path: trivial at a vertex, or a nonempty composable arrow word.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Path {
    Trivial(usize),
    Word(Vec<usize>),
}

impl Path {
    fn len(&self) -> usize {
        match self {
            Path::Trivial(_) => 0,
            Path::Word(w) => w.len(),
        }
    }

    // shortest-lex key
    fn key(&self) -> (usize, Vec<usize>) {
        match self {
            Path::Trivial(v) => (0, vec![*v]),
            Path::Word(w) => (w.len(), w.clone()),
        }
    }
}

/// All paths of length `<= cap`, sorted in shortest-lex order.
fn enumerate_paths(q: &Quiver, cap: usize) -> Result<Vec<Path>> {
    let mut all: Vec<Path> = (0..q.num_vertices()).map(Path::Trivial).collect();
    let mut frontier: Vec<Vec<usize>> = (0..q.num_arrows()).map(|a| vec![a]).collect();
    let mut len = 1;
    while len <= cap && !frontier.is_empty() {
        all.extend(frontier.iter().cloned().map(Path::Word));
        if all.len() > MAX_PATHS {
            return Err(Error::DimensionOverflow(all.len(), MAX_PATHS));
        }
        let mut next = Vec::new();
        for w in &frontier {
            let t = q.target(*w.last().unwrap());
            for a in 0..q.num_arrows() {
                if q.source(a) == t {
                    let mut v = w.clone();
                    v.push(a);
                    next.push(v);
                }
            }
        }
        frontier = next;
        len += 1;
    }
    all.sort_by_key(Path::key);
    Ok(all)
}

/// Builds `kQ / I` where `I` is generated by `rels`.
///
/// Works inside the span `W` of paths of length `<= length_cap`. The algebra
/// must be finite-dimensional in the sense that every path of length exactly
/// `length_cap` lies in the ideal; otherwise `NotFiniteDimensional`.
/// The basis consists of the shortest-lex smallest paths independent modulo
/// the ideal (computed by echelon form with columns in reverse shortest-lex order).
pub fn path_algebra(q: &Quiver, rels: &[RelationExpr], length_cap: usize, field: Field) -> Result<Arc<Algebra>> {
    if length_cap == 0 {
        return Err(Error::InvalidAlgebra("length cap must be at least 1".into()));
    }
    let paths = enumerate_paths(q, length_cap)?;
    let np = paths.len();
    // column index: reverse shortest-lex so that pivots land on large paths
    let col: HashMap<Path, usize> = paths.iter().enumerate().map(|(i, p)| (p.clone(), np - 1 - i)).collect();
    let words: Vec<&Vec<usize>> = paths
        .iter()
        .filter_map(|p| match p {
            Path::Word(w) => Some(w),
            _ => None,
        })
        .collect();
    let starting_at = |v: usize| -> Vec<Vec<usize>> {
        let mut out = vec![vec![]];
        out.extend(words.iter().filter(|w| q.source(w[0]) == v).map(|w| (*w).clone()));
        out
    };
    let ending_at = |v: usize| -> Vec<Vec<usize>> {
        let mut out = vec![vec![]];
        out.extend(words.iter().filter(|w| q.target(*w.last().unwrap()) == v).map(|w| (*w).clone()));
        out
    };

    // exact ideal elements inside W, and their truncations
    let mut exact = Vec::new();
    let mut truncated = Vec::new();
    for r in rels {
        let Some((s, t)) = r.ends(q) else { continue };
        let min_len = r.terms.iter().map(|(_, w)| w.len()).min().unwrap();
        let lefts = ending_at(s);
        let rights = starting_at(t);
        for u in &lefts {
            for v in &rights {
                if u.len() + min_len + v.len() > length_cap {
                    continue;
                }
                let mut vec = vec![0u32; np];
                let mut fits = true;
                for (c, w) in &r.terms {
                    let full: Vec<usize> = u.iter().chain(w).chain(v).copied().collect();
                    if full.len() > length_cap {
                        fits = false;
                        continue;
                    }
                    let idx = col[&Path::Word(full)];
                    vec[idx] = field.add(vec[idx], *c);
                }
                if fits {
                    exact.push(vec.clone());
                }
                truncated.push(vec);
            }
        }
    }
    let exact_span = RowSpace::from_vecs(field, np, &exact);
    for p in paths.iter().filter(|p| p.len() == length_cap) {
        let mut e = vec![0u32; np];
        e[col[p]] = 1;
        if !exact_span.contains(&e) {
            let Path::Word(w) = p else { unreachable!() };
            return Err(Error::NotFiniteDimensional(length_cap, q.word_name(w)));
        }
    }
    for p in paths.iter().filter(|p| p.len() == length_cap) {
        let mut e = vec![0u32; np];
        e[col[p]] = 1;
        truncated.push(e);
    }
    let ideal = RowSpace::from_vecs(field, np, &truncated);

    // normal paths = non-pivot columns, listed in shortest-lex order
    let mut is_pivot = vec![false; np];
    for &c in ideal.pivots() {
        is_pivot[c] = true;
    }
    let basis: Vec<&Path> = paths.iter().filter(|p| !is_pivot[col[*p]]).collect();
    let n = basis.len();
    let basis_index: HashMap<usize, usize> = basis.iter().enumerate().map(|(i, p)| (col[*p], i)).collect();

    let nv = q.num_vertices();
    let ends_of = |p: &Path| match p {
        Path::Trivial(v) => (*v, *v),
        Path::Word(w) => q.word_ends(w).unwrap(),
    };
    let reduce_path = |p: Path| -> Vec<(usize, u32)> {
        if p.len() >= length_cap {
            return Vec::new();
        }
        let mut e = vec![0u32; np];
        e[col[&p]] = 1;
        let r = ideal.reduce(&e);
        let mut out: Vec<(usize, u32)> = r
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c != 0)
            .map(|(c, &x)| (basis_index[&c], x))
            .collect();
        out.sort_unstable();
        out
    };
    let mut mult = vec![Vec::new(); n * n];
    for (x, px) in basis.iter().enumerate() {
        let (_, tx) = ends_of(px);
        for (y, py) in basis.iter().enumerate() {
            let (sy, _) = ends_of(py);
            if tx != sy {
                continue;
            }
            let prod = match (px, py) {
                (Path::Trivial(_), p) | (p, Path::Trivial(_)) => (*p).clone(),
                (Path::Word(a), Path::Word(b)) => Path::Word(a.iter().chain(b).copied().collect()),
            };
            mult[x * n + y] = reduce_path(prod);
        }
    }
    let labels = basis
        .iter()
        .map(|p| match p {
            Path::Trivial(v) => format!("e{}", q.vertices()[*v]),
            Path::Word(w) => q.word_name(w),
        })
        .collect();
    let words = basis
        .iter()
        .map(|p| match p {
            Path::Trivial(_) => Vec::new(),
            Path::Word(w) => w.clone(),
        })
        .collect();
    let idempotents = (0..nv)
        .map(|v| basis.iter().position(|p| **p == Path::Trivial(v)).expect("vertices are never in an admissible ideal"))
        .collect();
    Algebra::new(AlgebraParts {
        field,
        vertices: q.vertices().to_vec(),
        labels,
        idempotents,
        pointing: basis.iter().map(|p| ends_of(p)).collect(),
        mult,
        quiver: Some((q.clone(), words)),
    })
}

/// Parses relation strings and calls [`path_algebra`].
pub fn path_algebra_from_strs(q: &Quiver, rels: &[&str], length_cap: usize, field: Field) -> Result<Arc<Algebra>> {
    let rels = rels
        .iter()
        .map(|r| parse_relation(r, q, field))
        .collect::<Result<Vec<_>>>()?;
    path_algebra(q, &rels, length_cap, field)
}

/// `k A_n` with linear orientation.
pub fn linear_a(n: usize, field: Field) -> Arc<Algebra> {
    path_algebra(&Quiver::linear_a(n), &[], n.max(1), field).expect("kA_n is finite-dimensional")
}

/// The truncated polynomial ring `k[x]/(x^n)`, `n >= 1`.
pub fn truncated_polynomial(n: usize, field: Field) -> Arc<Algebra> {
    assert!(n >= 1);
    if n == 1 {
        return Algebra::semisimple(field, 1);
    }
    let q = Quiver::one_loop();
    let word = vec!["x"; n].join("*");
    path_algebra_from_strs(&q, &[&word], n, field).expect("k[x]/x^n is finite-dimensional")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_vertex() {
        let q = Quiver::from_triples(&["1"], &[]).unwrap();
        let a = path_algebra(&q, &[], 8, Field::default()).unwrap();
        assert_eq!(a.dim(), 1);
    }

    #[test]
    fn a2_has_three_paths() {
        let q = Quiver::from_triples(&["1", "2"], &[("a", "1", "2")]).unwrap();
        let a = path_algebra(&q, &[], 8, Field::default()).unwrap();
        assert_eq!(a.dim(), 3);
        assert_eq!(a.labels(), &["e1", "e2", "a"]);
        assert_eq!(a.pointing(2), (0, 1));
    }

    #[test]
    fn dual_numbers() {
        let a = path_algebra_from_strs(&Quiver::one_loop(), &["x*x"], 8, Field::default()).unwrap();
        assert_eq!(a.dim(), 2);
        let x = 1;
        assert!(a.product(x, x).is_empty());
    }

    #[test]
    fn free_loop_is_infinite() {
        let r = path_algebra(&Quiver::one_loop(), &[], 8, Field::default());
        assert!(matches!(r, Err(Error::NotFiniteDimensional(8, _))));
    }

    #[test]
    fn linear_dims() {
        for n in 1..=5 {
            assert_eq!(linear_a(n, Field::default()).dim(), n * (n + 1) / 2);
        }
    }

    #[test]
    fn commutative_square() {
        let q = Quiver::from_triples(
            &["1", "2", "3", "4"],
            &[("a", "1", "2"), ("b", "2", "4"), ("c", "1", "3"), ("d", "3", "4")],
        )
        .unwrap();
        let f = Field::default();
        let a = path_algebra_from_strs(&q, &["a*b - c*d"], 4, f).unwrap();
        // 4 idempotents, 4 arrows, one length-2 path
        assert_eq!(a.dim(), 9);
        let ab = a.labels().iter().position(|l| l == "a*b").unwrap();
        let (c, d) = (a.labels().iter().position(|l| l == "c").unwrap(), a.labels().iter().position(|l| l == "d").unwrap());
        assert_eq!(a.product(c, d), &[(ab, 1)]);
        let zero = path_algebra_from_strs(&q, &["a*b", "c*d"], 4, f).unwrap();
        assert_eq!(zero.dim(), 8);
    }

    #[test]
    fn nonhomogeneous_relation() {
        // x^2 = x^3 in k[x] with x^3 = 0 forces x^2 = 0
        let f = Field::default();
        let a = path_algebra_from_strs(&Quiver::one_loop(), &["x*x - x*x*x", "x*x*x"], 6, f).unwrap();
        assert_eq!(a.dim(), 2);
    }

    #[test]
    fn truncated_polynomials() {
        for n in 1..=4 {
            assert_eq!(truncated_polynomial(n, Field::default()).dim(), n);
        }
    }
}
