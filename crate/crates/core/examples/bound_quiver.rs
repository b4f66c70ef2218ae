// Build a bound quiver algebra from relations and look at its basis.
//
// `cargo run --example bound_quiver`

use higher_auslander::algebra::{path_algebra_from_strs, AlgebraSpec, Quiver};
use higher_auslander::exactla::Field;

fn run() -> anyhow::Result<()> {
    // commutative square 1 → 2 → 4, 1 → 3 → 4
    let q = Quiver::from_triples(&["1", "2", "3", "4"], &[("a", "1", "2"), ("b", "2", "4"), ("c", "1", "3"), ("d", "3", "4")])?;
    let square = path_algebra_from_strs(&q, &["a*b - c*d"], 8, Field::default())?;
    println!("commutative square: dim {}", square.dim());
    println!("  basis: {}", square.labels().join(", "));
    assert_eq!(square.dim(), 9);

    // the same thing from JSON, the CLI input format
    let spec = AlgebraSpec::from_json(include_str!("data/a3_radical_square_zero.json"))?;
    let a = spec.build()?;
    println!("A3 with ab = 0: dim {}, generators {:?}", a.dim(), a.generators());

    // relations are parsed with positions in error messages
    match path_algebra_from_strs(&q, &["a * * b"], 8, Field::default()) {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => anyhow::bail!("malformed relation accepted"),
    }
    Ok(())
}

fn main() -> anyhow::Result<()> {
    run()
}
