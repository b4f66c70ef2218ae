use std::sync::Arc;

use higher_auslander::algebra::{endomorphism_algebra, linear_a, truncated_polynomial, Algebra};
use higher_auslander::exactla::Field;
use higher_auslander::homology::*;
use higher_auslander::repn::*;

fn field() -> Field {
    Field::new(32003).unwrap()
}

fn a2() -> Arc<Algebra> {
    linear_a(2, field())
}

fn auslander_a2() -> Arc<Algebra> {
    let a = a2();
    let ms = vec![projective(&a, 0), simple(&a, 1), simple(&a, 0)];
    endomorphism_algebra(&ms).unwrap().0
}

#[test]
fn resolution_of_simple_over_a2() {
    let a = a2();
    let r = min_proj_resolution(&simple(&a, 0), 8);
    assert_eq!(r.vertices, vec![vec![0], vec![1]]);
    assert!(!r.capped);
    assert!(r.is_exact() && r.minimal);
    assert_eq!(pdim(&simple(&a, 0), 8), DimValue::Finite(1));
    assert_eq!(pdim(&projective(&a, 0), 8), DimValue::Finite(0));
    assert!(is_isomorphic(&syzygy(&simple(&a, 0), 1), &projective(&a, 1)).unwrap());
    assert!(syzygy(&simple(&a, 0), 2).is_zero());
}

#[test]
fn dual_numbers_are_periodic() {
    let a = truncated_polynomial(2, field());
    let s = simple(&a, 0);
    let r = min_proj_resolution(&s, 5);
    assert!(r.capped);
    assert!(r.is_exact());
    assert_eq!(pdim(&s, 5), DimValue::AtLeast(5));
    assert_eq!(gldim(&a, 5), DimValue::AtLeast(5));
    assert_eq!(domdim(&a, 5), DimValue::AtLeast(5));
    assert_eq!(star(&s).unwrap().dim(), 1);
    assert!(is_isomorphic(&transpose_k(&s, 2), &transpose(&s)).unwrap());
}

#[test]
fn coresolution_of_simple() {
    let a = a2();
    let r = min_inj_coresolution(&simple(&a, 1), 8);
    assert_eq!(r.vertices, vec![vec![1], vec![0]]);
    assert!(r.is_exact());
    assert_eq!(idim(&injective(&a, 0), 8), DimValue::Finite(0));
}

#[test]
fn dimensions_of_a2_and_its_auslander_algebra() {
    let a = a2();
    assert_eq!(gldim(&a, 8), DimValue::Finite(1));
    assert_eq!(domdim(&a, 8), DimValue::Finite(1));
    let b = auslander_a2();
    assert_eq!(b.dim(), 5);
    assert_eq!(gldim(&b, 8), DimValue::Finite(2));
    assert_eq!(domdim(&b, 8), DimValue::Finite(2));
    let semi = Algebra::semisimple(field(), 2);
    assert_eq!(gldim(&semi, 8), DimValue::Finite(0));
    assert_eq!(domdim(&semi, 8), DimValue::AtLeast(8));
}

#[test]
fn ext_values_over_a2() {
    let a = a2();
    let (s1, s2) = (simple(&a, 0), simple(&a, 1));
    assert_eq!(ext(&s1, &s2, 1).unwrap().dim, 1);
    assert_eq!(ext(&s2, &s1, 1).unwrap().dim, 0);
    assert_eq!(ext(&s1, &s1, 0).unwrap().dim, 1);
    assert_eq!(ext(&projective(&a, 0), &s2, 1).unwrap().dim, 0);
    for m in [&s1, &s2, &projective(&a, 0)] {
        for n in [&s1, &s2, &projective(&a, 0)] {
            for k in 0..3 {
                assert_eq!(ext(m, n, k).unwrap(), ext_via_injectives(m, n, k).unwrap());
            }
        }
    }
}

#[test]
fn tensor_products() {
    let a = a2();
    let op = a.opposite();
    let s1 = simple(&a, 0);
    // S_1 ⊗ A e_2 = 0
    assert_eq!(tensor(&s1, &projective(&op, 1)).unwrap().dim, 0);
    let regular = Module::sum(&projectives(&op), &op).unwrap();
    for m in [s1.clone(), simple(&a, 1), projective(&a, 0)] {
        assert_eq!(tensor(&m, &regular).unwrap().dim, m.dim());
        assert_eq!(tor(&m, &regular, 1).unwrap(), 0);
    }
    assert!(tensor(&s1, &s1).is_err());
}

#[test]
fn duality_lemma_on_a2() {
    let a = a2();
    let op = a.opposite();
    for m in [simple(&a, 0), simple(&a, 1), projective(&a, 0)] {
        for i in injectives(&op) {
            assert!(tor_ext_duality_check(&m, &i, 2).unwrap().pass);
        }
    }
    assert!(tor_ext_duality_check(&simple(&a, 0), &simple(&op, 0), 1).is_err());
}

#[test]
fn star_and_transpose() {
    let a = a2();
    let op = a.opposite();
    assert!(star(&simple(&a, 0)).unwrap().is_zero());
    for i in 0..2 {
        assert!(is_isomorphic(&star(&projective(&a, i)).unwrap(), &projective(&op, i)).unwrap());
    }
    assert!(transpose(&projective(&a, 0)).is_zero());
    assert!(is_isomorphic(&transpose(&simple(&a, 0)), &simple(&op, 1)).unwrap());
    let s1 = simple(&a, 0);
    assert!(is_isomorphic(&transpose(&transpose(&s1)), &s1).unwrap());
}

#[test]
fn translates_over_a2() {
    let a = a2();
    let (s1, s2) = (simple(&a, 0), simple(&a, 1));
    assert!(is_isomorphic(&tau(&s1), &s2).unwrap());
    assert!(is_isomorphic(&tau_inverse(&s2), &s1).unwrap());
    assert!(tau(&projective(&a, 0)).is_zero());
    assert!(tau_d(&projective(&a, 1), 2).is_zero());
    for order in [TauInverseOrder::CosyzygyFirst, TauInverseOrder::TauFirst] {
        assert!(is_isomorphic(&tau_d_inverse_with(&s2, 1, order), &s1).unwrap());
    }
}

#[test]
fn auslander_bridger_sequence() {
    let a = a2();
    let r = ab_sequence_check(&simple(&a, 0)).unwrap();
    assert!(r.pass, "{r:?}");
    assert_eq!((r.dim_double_dual, r.dim_kernel), (0, 1));
    for m in [simple(&a, 1), projective(&a, 0)] {
        let r = ab_sequence_check(&m).unwrap();
        assert!(r.pass && r.dim_kernel == 0 && r.dim_cokernel == 0);
    }
}

#[test]
fn phi_sequence() {
    let a = a2();
    for m in [simple(&a, 0), simple(&a, 1), projective(&a, 0)] {
        for k in 1..4 {
            let r = phi_sequence_check(&m, k).unwrap();
            assert!(r.pass, "{r:?}");
        }
    }
    assert!(phi_sequence_check(&simple(&a, 0), 0).is_err());
}

#[test]
fn resolutions_over_the_auslander_algebra() {
    let b = auslander_a2();
    for m in simples(&b).iter().chain(&injectives(&b)) {
        let r = min_proj_resolution(m, 8);
        assert!(r.is_exact() && r.minimal);
        let c = min_inj_coresolution(m, 8);
        assert!(c.is_exact() && c.minimal);
    }
    assert_eq!(gldim(&b, 8), gldim(&b.opposite(), 8));
    assert_eq!(domdim(&b, 8), domdim(&b.opposite(), 8));
}
