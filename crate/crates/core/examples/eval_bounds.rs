//! Tabulates the five thresholds and the branch values they maximize over.
//!
//! ```text
//! cargo run --example eval_bounds
//! ```

use exturan::{eval_f_both, BoundParams, Theorem};

fn main() -> exturan::Result<()> {
    let bip = BoundParams::bipartite(7, 6, 1, 1, 2, 2);
    let gen = BoundParams::general(8, 6, 2, 2, 2);
    for theorem in Theorem::ALL {
        let p = if theorem.is_bipartite() { bip } else { gen };
        let h = theorem.midpoint(&p)?;
        println!(
            "{theorem:>2} [{p}]  a=r: {}  a=h({h}): {}  threshold: {}",
            theorem.branch_value(&p, p.r)?,
            theorem.branch_value(&p, h)?,
            theorem.threshold(&p)?,
        );
    }

    // The whole curve, not just its endpoints: f is convex in a, so the
    // maximum over [r, h] sits at an end.
    let m = 5;
    let curve: Vec<String> = (0..=m)
        .map(|a| eval_f_both(7, 6, m, a, 2, 2).map(|v| v.to_string()))
        .collect::<exturan::Result<_>>()?;
    println!("f(7, 6, {m}, a) for a = 0..={m}: {}", curve.join(" "));
    Ok(())
}
