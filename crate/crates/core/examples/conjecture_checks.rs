//! Runs the conjecture suites and prints one line per check.
//!
//! ```text
//! cargo run --release --example conjecture_checks -- 4
//! ```

use linksym::conjectures::{check_bergeron, run_scope, BergeronCase, Scope};

fn main() {
    let max_n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(3);

    for scope in [Scope::Lemma23, Scope::Conj43, Scope::Bergeron] {
        let reports = run_scope(scope, max_n, 8);
        let failed = reports.iter().filter(|r| !r.passed()).count();
        println!("{scope:?}: {} checks, {failed} failed", reports.len());
        for r in reports.iter().filter(|r| !r.passed()) {
            println!("  {r}");
        }
    }

    let epos = run_scope(Scope::Epos, max_n, 10);
    println!("Epos: {} words, all positive: {}", epos.len(), epos.iter().all(|r| r.passed()));

    let case = BergeronCase::parse("B4", &["1", "1", "1"]).unwrap();
    println!("{}", check_bergeron(&case));
    println!(
        "{}",
        serde_json::to_string_pretty(&check_bergeron(&BergeronCase::parse("B5", &["1", "0"]).unwrap())).unwrap()
    );
}
