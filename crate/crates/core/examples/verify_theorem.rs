//! Exhaustive check of the bipartite long-cycle bound on every 4x4 host with
//! minimum degree at least 1, printed as JSON.
//!
//! ```text
//! cargo run --release --example verify_theorem
//! ```

use exturan::verify::theorem_class;
use exturan::{verify_theorem, BoundParams, Theorem, VerifyOptions};

fn main() -> exturan::Result<()> {
    let p = BoundParams::bipartite(4, 4, 1, 1, 1, 1);
    let spec = theorem_class(Theorem::CycleBipartite, &p);
    let jobs = std::thread::available_parallelism().map_or(1, |n| n.get());
    let report = verify_theorem(Theorem::CycleBipartite, &p, &spec, &VerifyOptions::default().jobs(jobs))?;
    println!("{}", report.to_json()?);
    print!("{}", report.to_plain());

    // The general path bound on sampled connected hosts of order 8.
    let p = BoundParams::general(8, 6, 2, 1, 2);
    let spec = theorem_class(Theorem::PathGeneral, &p).random(50_000, 7);
    let report = verify_theorem(Theorem::PathGeneral, &p, &spec, &VerifyOptions::default().jobs(jobs))?;
    print!("{}", report.to_plain());
    Ok(())
}
