// The duality (−)*, transposes and Auslander–Reiten translates.
//
// `cargo run --example translates`

use higher_auslander::algebra::linear_a;
use higher_auslander::exactla::Field;
use higher_auslander::homology::{star, tau, tau_d, tau_d_inverse, tau_inverse, transpose};
use higher_auslander::repn::{is_isomorphic, projective, simple};

fn run() -> anyhow::Result<()> {
    let a = linear_a(3, Field::default());
    let s1 = simple(&a, 0);
    println!("S_1* has dim {}", star(&s1)?.dim());
    println!("Tr S_1 has dimension vector {:?}", transpose(&s1).dims());

    // follow the τ-orbit of S_1 until it reaches a projective
    let mut m = simple(&a, 0);
    let mut orbit = vec![m.dims().to_vec()];
    while !m.is_zero() {
        m = tau(&m);
        orbit.push(m.dims().to_vec());
    }
    println!("τ-orbit of S_1: {orbit:?}");
    assert!(is_isomorphic(&tau_inverse(&tau(&s1)), &s1)?);

    // τ_d and τ_d^− with d = 1 are the classical translates
    let p = projective(&a, 2);
    let up = tau_d_inverse(&p, 1);
    println!("τ^−(P_3) has dims {:?}; τ of it returns {:?}", up.dims(), tau_d(&up, 1).dims());
    Ok(())
}

fn main() -> anyhow::Result<()> {
    run()
}
