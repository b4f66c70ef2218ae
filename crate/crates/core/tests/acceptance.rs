//! The acceptance gate: one line per criterion, then an overall assertion.

use higher_auslander::selftest::{run_selftest, SelftestConfig};

#[test]
fn acceptance_criteria() {
    let report = run_selftest(&SelftestConfig::default());
    for c in &report.criteria {
        println!("{}", c.line());
        if !c.pass {
            println!("    {}", c.details);
        }
    }
    assert_eq!(report.criteria.len(), 7);
    assert!(report.pass, "some acceptance criteria failed");
}

#[test]
fn reports_differ_only_in_seed() {
    let a = run_selftest(&SelftestConfig { seed: 1, ..SelftestConfig::default() });
    let b = run_selftest(&SelftestConfig { seed: 2, ..SelftestConfig::default() });
    let strip = |r: &higher_auslander::selftest::SelftestReport| {
        let mut v = serde_json::to_value(r).unwrap();
        v.as_object_mut().unwrap().remove("seed");
        v
    };
    assert_eq!(strip(&a), strip(&b));
}
