//! Runs the theorem registry over a generated corpus and the named fixtures.
//!
//! cargo run --release --example verify_theorems -- 6

use std::collections::BTreeMap;

use compressed_cliques::checks::{self, Instance, Verdict};
use compressed_cliques::corpus::Corpus;

fn main() -> compressed_cliques::Result<()> {
    let max_n = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(5);
    let mut instances = Instance::corpus(&Corpus::generated(max_n)?);
    instances.extend(checks::default_fixtures());
    let results = checks::run_checks(&instances, &[], checks::DEFAULT_TIMEOUT);

    let mut table: BTreeMap<&str, [usize; 3]> = BTreeMap::new();
    for r in &results {
        let slot = match r.verdict {
            Verdict::Pass => 0,
            Verdict::Fail => 1,
            Verdict::Skipped(_) => 2,
        };
        table.entry(r.theorem).or_default()[slot] += 1;
    }
    println!(
        "{:<30} {:>6} {:>6} {:>6}",
        "theorem", "pass", "fail", "skip"
    );
    for t in checks::theorems() {
        let [p, f, s] = table.get(t.id).copied().unwrap_or_default();
        println!("{:<30} {p:>6} {f:>6} {s:>6}", t.id);
    }
    for r in results.iter().filter(|r| r.verdict == Verdict::Fail) {
        println!(
            "\nFAIL {} on {}\n  expected {}\n  observed {}",
            r.theorem, r.instance, r.expected, r.observed
        );
    }
    Ok(())
}
