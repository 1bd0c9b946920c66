//! Counts K_{s,t} copies in a few familiar graphs and checks the count
//! against the closed form for complete bipartite hosts.
//!
//! ```text
//! cargo run --example count_copies
//! ```

use exturan::{binomial, count_kst, decode_graph6, Graph};

fn main() -> exturan::Result<()> {
    let petersen = decode_graph6(b"IheA@GUAo")?;
    let hosts = [
        ("K_6", Graph::complete(6)),
        ("K_4,5", Graph::complete_bipartite(4, 5)),
        ("C_8", Graph::cycle(8)),
        ("Petersen", petersen),
    ];
    for (name, g) in &hosts {
        let row: Vec<String> = [(1, 1), (1, 2), (2, 2), (2, 3)]
            .iter()
            .map(|&(s, t)| count_kst(g, s, t).map(|c| format!("K_{s},{t}: {c}")))
            .collect::<exturan::Result<_>>()?;
        println!("{name:>9}  {}", row.join("  "));
    }

    // In K_{m,p} with s != t, each side can host either part.
    let (m, p, s, t) = (4, 5, 2, 3);
    let closed = binomial(m, s)? * binomial(p, t)? + binomial(m, t)? * binomial(p, s)?;
    let counted = count_kst(&Graph::complete_bipartite(m as usize, p as usize), s as usize, t as usize)?;
    println!("K_{m},{p} holds {counted} copies of K_{s},{t} (closed form {closed})");
    Ok(())
}
