// The type-A tower: kA_n, its Auslander algebra, that algebra's 2-Auslander algebra, …
//
// `cargo run --example tower -- 3 2`

use higher_auslander::auslander::{type_a_tower, with_dz};

fn run_with(n: usize, depth: usize) -> anyhow::Result<()> {
    for level in type_a_tower(n, depth, 16, 64)? {
        let r = with_dz(level.report.clone(), &level.candidate, 2 * level.level + 2)?;
        println!(
            "level {}: algebra dim {:>3}, {:>2} summands, End gldim {} domdim {}, dZ {:?}, verdict {}",
            level.level, level.algebra_dim, level.summands, r.gldim, r.domdim, r.dz, r.verdict
        );
    }
    Ok(())
}

fn run() -> anyhow::Result<()> {
    run_with(2, 3)?;
    run_with(3, 2)
}

fn main() -> anyhow::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    match args.as_slice() {
        [n, depth] => run_with(*n, *depth),
        _ => run(),
    }
}
