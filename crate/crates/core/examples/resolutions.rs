// Minimal projective resolutions and homological dimensions.
//
// `cargo run --example resolutions`

use higher_auslander::algebra::{linear_a, truncated_polynomial};
use higher_auslander::exactla::Field;
use higher_auslander::homology::{domdim, gldim, min_inj_coresolution, min_proj_resolution, pdim};
use higher_auslander::repn::{projective, simple};

fn run() -> anyhow::Result<()> {
    let f = Field::default();
    let a = linear_a(3, f);
    let s1 = simple(&a, 0);
    let r = min_proj_resolution(&s1, 8);
    println!("resolution of S_1 over kA_3: summands {:?}", r.vertices);
    assert!(r.is_exact() && r.minimal);
    println!("pdim S_1 = {}, gldim = {}, domdim = {}", pdim(&s1, 8), gldim(&a, 8), domdim(&a, 8));

    let c = min_inj_coresolution(&projective(&a, 2), 8);
    println!("coresolution of P_3: summands {:?}", c.vertices);

    // self-injective: periodic resolutions, reported against the cap
    let b = truncated_polynomial(3, f);
    println!("k[x]/x^3: pdim S = {}, gldim = {}, domdim = {}", pdim(&simple(&b, 0), 6), gldim(&b, 6), domdim(&b, 6));
    Ok(())
}

fn main() -> anyhow::Result<()> {
    run()
}
