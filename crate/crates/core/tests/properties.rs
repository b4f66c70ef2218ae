use std::collections::BTreeMap;
use std::sync::Arc;

use proptest::prelude::*;

use higher_auslander::algebra::{parse_relation, path_algebra, Algebra, Quiver};
use higher_auslander::exactla::{kernel_basis, kron, rank, rref, solve, Field, Matrix};
use higher_auslander::homology::*;
use higher_auslander::repn::*;

const P: u32 = 101;

fn field() -> Field {
    Field::new(P).unwrap()
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(0..P, rows * cols).prop_map(move |v| Matrix::from_vec(field(), rows, cols, v))
}

fn any_matrix() -> impl Strategy<Value = Matrix> {
    (0usize..6, 0usize..6).prop_flat_map(|(r, c)| matrix(r, c))
}

fn a3() -> Arc<Algebra> {
    let q = Quiver::from_triples(&["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3")]).unwrap();
    path_algebra(&q, &[], 8, field()).unwrap()
}

fn kronecker() -> Arc<Algebra> {
    let q = Quiver::from_triples(&["1", "2"], &[("x", "1", "2"), ("y", "1", "2")]).unwrap();
    path_algebra(&q, &[], 8, field()).unwrap()
}

/// A random representation over the quiver of `a` (no relations) with dimensions at most 2.
fn representation(a: Arc<Algebra>) -> impl Strategy<Value = Module> {
    let q = a.quiver().unwrap().clone();
    let nv = q.num_vertices();
    prop::collection::vec(0usize..3, nv).prop_flat_map(move |dims| {
        let q = q.clone();
        let a = a.clone();
        let mats: Vec<_> = (0..q.num_arrows()).map(|k| matrix(dims[q.source(k)], dims[q.target(k)])).collect();
        mats.prop_map(move |ms| {
            let arrows: BTreeMap<String, Vec<Vec<i64>>> = ms
                .iter()
                .enumerate()
                .map(|(k, m)| {
                    let rows = (0..m.rows()).map(|r| m.row(r).iter().map(|&x| x as i64).collect()).collect();
                    (q.arrows()[k].name.clone(), rows)
                })
                .collect();
            ModuleSpec::Representation { dims: dims.clone(), arrows }.build(&a).unwrap()
        })
    })
}

fn either_module() -> impl Strategy<Value = Module> {
    prop_oneof![representation(a3()), representation(kronecker())]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rank_nullity(m in any_matrix()) {
        prop_assert_eq!(rank(&m) + kernel_basis(&m).len(), m.cols());
        for v in kernel_basis(&m) {
            prop_assert!(m.mul_vec(&v).iter().all(|&x| x == 0));
        }
    }

    #[test]
    fn rref_is_idempotent(m in any_matrix()) {
        let (r, piv) = rref(&m);
        let (r2, piv2) = rref(&r);
        prop_assert_eq!(r, r2);
        prop_assert_eq!(piv, piv2);
    }

    #[test]
    fn solve_finds_preimages(m in matrix(4, 3), x in prop::collection::vec(0..P, 3)) {
        let b = m.mul_vec(&x);
        let y = solve(&m, &b).expect("consistent");
        prop_assert_eq!(m.mul_vec(&y), b);
    }

    #[test]
    fn kron_rank_multiplies(a in matrix(2, 3), b in matrix(3, 2)) {
        prop_assert_eq!(rank(&kron(&a, &b)), rank(&a) * rank(&b));
    }

    #[test]
    fn parser_merges_coefficients(c1 in 1i64..100, c2 in 1i64..100) {
        let q = Quiver::from_triples(&["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3")]).unwrap();
        let text = format!("{c1}*a*b + {c2}*a*b");
        let r = parse_relation(&text, &q, field()).unwrap();
        if (c1 + c2) % P as i64 == 0 {
            prop_assert!(r.terms.is_empty());
        } else {
            prop_assert_eq!(r.terms.len(), 1);
            prop_assert_eq!(r.terms[0].0, ((c1 + c2) % P as i64) as u32);
        }
    }

    #[test]
    fn resolutions_are_exact_and_minimal(m in either_module()) {
        let r = min_proj_resolution(&m, 6);
        prop_assert!(r.is_exact());
        prop_assert!(r.minimal);
        let c = min_inj_coresolution(&m, 6);
        prop_assert!(c.is_exact());
        // hereditary: everything has pdim at most 1
        prop_assert!(pdim(&m, 6).le(1));
    }

    #[test]
    fn ext_two_routes_agree(m in either_module(), n in either_module()) {
        prop_assume!(m.same_algebra(&n));
        for k in 0..3 {
            prop_assert_eq!(ext(&m, &n, k).unwrap(), ext_via_injectives(&m, &n, k).unwrap());
        }
        prop_assert_eq!(ext(&m, &n, 0).unwrap().dim, hom_dim(&m, &n).unwrap());
    }

    #[test]
    fn tor_ext_duality(m in either_module()) {
        let op = m.algebra().opposite();
        for i in injectives(&op) {
            prop_assert!(tor_ext_duality_check(&m, &i, 2).unwrap().pass);
        }
    }

    #[test]
    fn standard_sequences(m in either_module()) {
        prop_assert!(ab_sequence_check(&m).unwrap().pass);
        prop_assert!(phi_sequence_check(&m, 1).unwrap().pass);
        prop_assert!(phi_sequence_check(&m, 2).unwrap().pass);
    }

    #[test]
    fn translates_are_inverse(m in either_module()) {
        let (core, _) = strip_projectives(&m).unwrap();
        prop_assert!(is_isomorphic(&tau_inverse(&tau(&m)), &core).unwrap());
        let (core, _) = strip_injectives(&m).unwrap();
        prop_assert!(is_isomorphic(&tau(&tau_inverse(&m)), &core).unwrap());
    }

    #[test]
    fn transpose_is_an_involution_up_to_projectives(m in either_module()) {
        let (core, _) = strip_projectives(&m).unwrap();
        prop_assert!(is_isomorphic(&transpose(&transpose(&m)), &core).unwrap());
    }

    #[test]
    fn double_dual_is_identity(m in either_module()) {
        let dd = dual(&dual(&m));
        prop_assert!(dd.same_algebra(&m));
        prop_assert!(is_isomorphic(&dd, &m).unwrap());
    }
}
