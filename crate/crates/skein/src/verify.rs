//! Named verification suites and an order-stable parallel runner.

use std::thread;

use crate::report::Check;

pub type Suite = fn() -> Vec<Check>;

pub const SUITES: [(&str, Suite); 7] = [
    ("symfun", crate::symfun::suite),
    ("frobdem", crate::frobdem::suite),
    ("coords", crate::coords::suite),
    ("koszul", crate::curvedkoszul::suite),
    ("keylemma", crate::ideals::keylemma_suite),
    ("ideals", crate::ideals::ideal_suite),
    ("series", crate::homseries::suite),
];

/// `all` or one suite name.
pub fn select(name: &str) -> Option<Vec<(&'static str, Suite)>> {
    if name == "all" {
        return Some(SUITES.to_vec());
    }
    SUITES.iter().find(|(n, _)| *n == name).map(|s| vec![*s])
}

/// Runs the suites on at most `workers` threads; results keep the order of `suites`.
pub fn run(suites: &[(&'static str, Suite)], workers: usize) -> Vec<Check> {
    let workers = workers.max(1);
    let mut results: Vec<Vec<Check>> = vec![Vec::new(); suites.len()];
    for (chunk, slots) in suites.chunks(workers).zip(results.chunks_mut(workers)) {
        thread::scope(|s| {
            for ((_, f), slot) in chunk.iter().zip(slots.iter_mut()) {
                s.spawn(move || *slot = f());
            }
        });
    }
    results.into_iter().flatten().collect()
}
