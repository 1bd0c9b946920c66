//! The classical bipartite results reproduced by exhaustive sweeps.
//!
//! ```text
//! cargo run --release --example baselines
//! ```

use exturan::formulas::classical;
use exturan::{verify_baseline, Baseline, BoundParams, GraphClassSpec, VerifyOptions};

fn main() -> exturan::Result<()> {
    let opts = VerifyOptions::default();
    let spec = GraphClassSpec::bipartite(4, 4);
    for baseline in [Baseline::Jackson, Baseline::LiNing] {
        let p = BoundParams::bipartite(4, 4, 1, 0, 1, 1);
        let report = verify_baseline(baseline, &p, &spec, &opts)?;
        println!("{}  (closed form {})", report.to_plain().trim_end(), classical::long_cycle_bipartite_extremal(4, 4, 1)?);
    }
    for (s, t) in [(1, 1), (1, 2), (2, 2)] {
        let p = BoundParams::bipartite(4, 4, 1, 0, s, t);
        let report = verify_baseline(Baseline::Wang, &p, &spec, &opts)?;
        println!("{}  (closed form {})", report.to_plain().trim_end(), classical::matching_extremal(4, 1, s, t)?);
    }
    Ok(())
}
