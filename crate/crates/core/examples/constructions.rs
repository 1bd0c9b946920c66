//! Builds both extremal families, audits them and writes one to graph6 with
//! its JSON sidecar.
//!
//! ```text
//! cargo run --example constructions
//! ```

use exturan::structure::{circumference, DEFAULT_MAX_ORDER};
use exturan::{build_f, build_h, count_kst, io, Region};

fn main() -> exturan::Result<()> {
    let f = build_f(6, 6, 1, 2)?.audited(DEFAULT_MAX_ORDER)?;
    let sizes: Vec<String> = [Region::A, Region::B, Region::C, Region::D]
        .iter()
        .map(|&r| format!("|{r}|={}", f.region_size(r)))
        .collect();
    println!(
        "F(6,6,1,2): {} vertices, {} edges, circumference {}, {}",
        f.graph.order(),
        f.graph.size(),
        circumference(&f.graph)?,
        sizes.join(" ")
    );

    for a in 1..=2 {
        let h = build_h(8, 6, a)?.audited(DEFAULT_MAX_ORDER)?;
        println!(
            "H(8,6,{a}): {} edges, N(K_2,2) = {}, 2-connected {}",
            h.graph.size(),
            count_kst(&h.graph, 2, 2)?,
            h.graph.is_biconnected()
        );
    }

    let dir = std::env::temp_dir().join("exturan-example");
    std::fs::create_dir_all(&dir)?;
    let path = dir.join("f_6_6_1_2.g6");
    let sidecar = io::write_construction(&path, &f)?;
    println!("wrote {} and {}", path.display(), sidecar.display());
    Ok(())
}
