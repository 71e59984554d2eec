use std::time::Instant;

use skein::report::Check;

fn run(name: &str, f: fn() -> Vec<Check>) {
    let start = Instant::now();
    let checks = f();
    for c in &checks {
        println!("{c}");
    }
    println!("{name}: {:.1?}", start.elapsed());
    let failed: Vec<String> = checks.iter().filter(|c| !c.ok).map(|c| c.to_string()).collect();
    assert!(failed.is_empty(), "{failed:#?}");
}

#[test]
fn keylemma() {
    run("keylemma", skein::ideals::keylemma_suite);
}

#[test]
fn ideals() {
    run("ideals", skein::ideals::ideal_suite);
}

#[test]
fn series() {
    run("series", skein::homseries::suite);
}
