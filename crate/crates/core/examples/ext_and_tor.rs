// Ext by two routes, Tor, and the Tor/Ext duality over kA_2.
//
// `cargo run --example ext_and_tor`

use higher_auslander::algebra::linear_a;
use higher_auslander::exactla::Field;
use higher_auslander::homology::{ext, ext_module, ext_via_injectives, tensor, tor, tor_ext_duality_check};
use higher_auslander::repn::{injectives, projective, simple, simples};

fn run() -> anyhow::Result<()> {
    let a = linear_a(2, Field::default());
    let op = a.opposite();
    let ss = simples(&a);
    for (i, m) in ss.iter().enumerate() {
        for (j, n) in ss.iter().enumerate() {
            let e = ext(m, n, 1)?;
            assert_eq!(e, ext_via_injectives(m, n, 1)?);
            println!("Ext^1(S_{}, S_{}) = {}", i + 1, j + 1, e.dim);
        }
    }
    let s1 = simple(&a, 0);
    println!("S_1 ⊗ Ae_2 has dim {}", tensor(&s1, &projective(&op, 1))?.dim);
    println!("Tor_1(S_1, S_2^op) = {}", tor(&s1, &simple(&op, 1), 1)?);
    println!("Ext^1(S_1, -) on projectives: dim {}", ext_module(&s1, 1).module.dim());
    for i in injectives(&op) {
        let r = tor_ext_duality_check(&s1, &i, 2)?;
        println!("  duality against an injective: {:?}", r.rows.iter().map(|x| (x.tor, x.hom_ext)).collect::<Vec<_>>());
        assert!(r.pass);
    }
    Ok(())
}

fn main() -> anyhow::Result<()> {
    run()
}
