//! One timed pass/fail line per acceptance criterion.

use std::time::{Duration, Instant};

use skein::homseries;
use skein::ideals::{diagonal_check, digon_complex, ideal_equality, keylemma_suite, transparifer, IdealWindow};
use skein::report::Check;
use skein::verify;

type Criterion = (&'static str, Duration, Box<dyn Fn() -> Outcome>);

struct Outcome {
    ok: bool,
    detail: String,
}

fn from_checks(checks: Vec<Check>) -> Outcome {
    let failed: Vec<String> = checks.iter().filter(|c| !c.ok).map(|c| c.to_string()).collect();
    let ok = !checks.is_empty() && failed.is_empty();
    Outcome { ok, detail: if ok { format!("{} checks", checks.len()) } else { failed.join("; ") } }
}

fn suite(name: &str) -> Outcome {
    let suites = verify::select(name).expect("known suite");
    from_checks(verify::run(&suites, 1))
}

fn named(checks: Vec<Check>, names: &[&str]) -> Outcome {
    let picked: Vec<Check> = checks.into_iter().filter(|c| names.contains(&c.name.as_str())).collect();
    assert_eq!(picked.len(), names.len(), "every named check exists");
    from_checks(picked)
}

fn cases(results: Vec<(String, bool)>) -> Outcome {
    let failed: Vec<String> = results.iter().filter(|(_, ok)| !ok).map(|(l, _)| l.clone()).collect();
    let ok = failed.is_empty();
    Outcome { ok, detail: if ok { format!("{} cases", results.len()) } else { failed.join("; ") } }
}

fn ideal_equality_case() -> Outcome {
    let mut results = Vec::new();
    for (a, b) in [(1, 1), (2, 1), (2, 2)] {
        let label = format!("({a},{b})");
        match ideal_equality(a, b, IdealWindow::default_for(a, b)) {
            Ok(r) => {
                results.push((format!("{label} {}/{} alternants with certificates", r.members, r.checked), r.ok()))
            }
            Err(e) => results.push((format!("{label}: {e}"), false)),
        }
    }
    for n in [2, 3] {
        match diagonal_check(n, 5) {
            Ok(r) => results.push((format!("diagonal N={n}"), r.ok())),
            Err(e) => results.push((format!("diagonal N={n}: {e}"), false)),
        }
    }
    cases(results)
}

fn digon_case() -> Outcome {
    let mut results = Vec::new();
    for (a, b) in [(2, 1), (2, 2)] {
        match digon_complex(a, b, IdealWindow::digon_for(a, b)).and_then(|d| d.verify()) {
            Ok(r) => results.push((format!("({a},{b}) {} pieces {:?}", r.pieces, r.failures.first()), r.ok())),
            Err(e) => results.push((format!("({a},{b}): {e}"), false)),
        }
    }
    cases(results)
}

fn series_case() -> Outcome {
    from_checks(homseries::suite())
}

fn transparifer_case() -> Outcome {
    let mut results = Vec::new();
    for bi in 1..=3 {
        for bj in 1..=3 {
            match transparifer(bi, bj) {
                Ok(d) => results.push((format!("({bi},{bj}) sign {}", d.linear_sign()), d.linear_sign() != 0)),
                Err(e) => results.push((format!("({bi},{bj}): {e}"), false)),
            }
        }
    }
    cases(results)
}

fn main() {
    let secs = Duration::from_secs;
    let criteria: Vec<Criterion> = vec![
        ("1 symmetric function identities", secs(5), Box::new(|| suite("symfun"))),
        ("2 Frobenius and Demazure", secs(10), Box::new(|| suite("frobdem"))),
        ("3 coordinates", secs(10), Box::new(|| suite("coords"))),
        ("4 curved Koszul", secs(10), Box::new(|| suite("koszul"))),
        (
            "5 key lemma and parameter extraction",
            secs(30),
            Box::new(|| named(keylemma_suite(), &["laplace_expansion", "laplace_small_values", "ytov"])),
        ),
        (
            "6 Schur complements and reductions",
            secs(60),
            Box::new(|| named(keylemma_suite(), &["block_determinant", "monomial_difference", "unreduced_vs_reduced"])),
        ),
        ("7 ideal equality", secs(300), Box::new(ideal_equality_case)),
        ("8 digon complex", secs(300), Box::new(digon_case)),
        ("9 series", secs(600), Box::new(series_case)),
        ("10 transparifer specialization", secs(60), Box::new(transparifer_case)),
    ];
    let mut failures = Vec::new();
    for (name, limit, run) in &criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let ok = outcome.ok && elapsed <= *limit;
        println!(
            "[{}] criterion {name}: {} in {:.2}s (limit {}s)",
            if ok { "PASS" } else { "FAIL" },
            outcome.detail,
            elapsed.as_secs_f64(),
            limit.as_secs()
        );
        if !ok {
            failures.push(*name);
        }
    }
    if !failures.is_empty() {
        eprintln!("failed criteria: {failures:?}");
        std::process::exit(1);
    }
}
