//! Searches balanced bipartite hosts for counterexamples to the two open
//! edge bounds, reporting both the exact-length and at-least outcomes.
//!
//! ```text
//! cargo run --release --example conjecture_search
//! ```

use exturan::{search_conjecture, BoundParams, Conjecture, GraphClassSpec, VerifyOptions};

fn main() -> exturan::Result<()> {
    let opts = VerifyOptions::default();
    let p = BoundParams::bipartite(4, 4, 1, 1, 1, 1);
    let spec = GraphClassSpec::bipartite(4, 4).min_degree(1);
    let report = search_conjecture(Conjecture::Adamus, &p, &spec, &opts)?;
    print!("{}", report.to_plain());
    println!("  at-least counterexamples: {}", report.weak_violation_count.unwrap_or(0));

    let p = BoundParams::bipartite(4, 4, 1, 1, 2, 2);
    let spec = GraphClassSpec::bipartite(4, 4).connected().min_degree(1);
    let report = search_conjecture(Conjecture::Conj41, &p, &spec, &opts)?;
    print!("{}", report.to_plain());
    for w in report.violations.iter().take(3) {
        println!("  counterexample {w}");
    }
    Ok(())
}
