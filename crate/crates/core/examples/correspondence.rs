// A cluster-tilting candidate, its endomorphism algebra, and the way back.
//
// `cargo run --example correspondence`

use higher_auslander::algebra::linear_a;
use higher_auslander::auslander::{
    auslander_algebra, check_correspondence, d_kernel_sequence, injectives_check, omega_condition_check,
    recover_base, roundtrip_check, tower_candidate,
};
use higher_auslander::exactla::Field;
use higher_auslander::repn::{hom_space, projective, simple};

fn run() -> anyhow::Result<()> {
    let a = linear_a(2, Field::default());
    let c = tower_candidate(&a, 1, 64)?;
    println!("candidate: {} summands with dims {:?}", c.summands.len(), c.summands.iter().map(|m| m.dims().to_vec()).collect::<Vec<_>>());

    let (g, _) = auslander_algebra(&c)?;
    let r = check_correspondence(&c, 8)?;
    println!("End: dim {}, gldim {}, domdim {}, verdict {}", g.dim(), r.gldim, r.domdim, r.verdict);

    let (base, back) = recover_base(&g, 1, 8)?;
    println!("recovered base: dim {}, {} summands", base.dim(), back.summands.len());
    println!("roundtrip: {:?}", roundtrip_check(&c, 8)?);
    println!("Ω-condition: {}", omega_condition_check(&g, 1, 8)?.pass);
    println!("injectives: {:?}", injectives_check(&c)?);

    // a kernel computed inside add M
    let (p1, s1) = (projective(&a, 0), simple(&a, 0));
    let f = hom_space(&p1, &s1)?.map(0).clone();
    let ks = d_kernel_sequence(&c, &f, &p1, &s1)?;
    println!("kernel of P_1 → S_1 has dims {:?}; certificate {}", ks.modules[2].dims(), ks.pass);

    // dropping a summand breaks the correspondence
    let broken = check_correspondence(&c.without(2), 8)?;
    println!("without a summand: verdict {}", broken.verdict);
    Ok(())
}

fn main() -> anyhow::Result<()> {
    run()
}
