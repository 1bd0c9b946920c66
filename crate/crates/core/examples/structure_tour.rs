//! Exact structural solvers on a small bipartite graph: circumference,
//! longest path, maximum matching, the (alpha+1)-core and the long-cycle
//! closure.
//!
//! ```text
//! cargo run --example structure_tour
//! ```

use exturan::structure::{
    bipartite_posa_bound, circumference, closure_long_cycle, core, cycle_lengths, longest_path_order, max_matching,
};
use exturan::{BipartiteGraph, PathView};

fn main() -> exturan::Result<()> {
    // Cross edges are (x, j) with Y-vertex j at index 3 + j: a 6-cycle
    // 0-3-1-4-2-5 plus a pendant vertex 6 on 0.
    let g = BipartiteGraph::from_cross_edges(3, 4, [(0, 0), (1, 0), (1, 1), (2, 1), (2, 2), (0, 2), (0, 3)])?;
    let host = g.graph();
    let mask = cycle_lengths(host)?;
    let lengths: Vec<usize> = (3..=host.order()).filter(|l| mask >> l & 1 == 1).collect();
    println!("cycle lengths {lengths:?}, circumference {}", circumference(host)?);
    println!("longest path on {} vertices", longest_path_order(host)?);
    println!("maximum matching {}", max_matching(&g));

    for alpha in 0..=2 {
        println!("core_{}: {:?}", alpha + 1, core(host, alpha).surviving);
    }

    let path = PathView::new(host, vec![6, 0, 3, 1, 4, 2, 5])?;
    println!("bipartite Posa bound along {:?}: {}", path.vertices(), bipartite_posa_bound(&g, &path)?);

    // Saturate without creating a cycle on 8 or more vertices.
    let closed = closure_long_cycle(&g, 8)?;
    println!(
        "closure for length 8: {} -> {} edges, circumference {}",
        host.size(),
        closed.graph().size(),
        circumference(closed.graph())?
    );
    Ok(())
}
