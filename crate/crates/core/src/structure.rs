//! Structural procedures: `(alpha+1)`-cores, long-cycle closure, exact
//! circumference / longest path / maximum matching, and Pósa-type bounds.
//!
//! The cycle and path solvers are exact subset dynamic programs. For a fixed
//! start vertex, `reach[mask]` is the set of vertices `u` such that some path
//! from the start visits exactly `mask` and ends at `u`; masks are processed
//! in increasing order so every extension lands on a larger mask. Cycles are
//! rooted at their smallest vertex, so each start only looks at higher
//! vertices and the total work is `O(2^n n)` word operations.

use crate::bits::{self, Ones};
use crate::error::{domain, Error, Result};
use crate::graph::{BipartiteGraph, Graph, PathView, Side};

/// Default order limit of the exponential solvers.
pub const DEFAULT_MAX_ORDER: usize = 18;

/// Hard limit; endpoint sets are stored as `u32`.
pub const HARD_MAX_ORDER: usize = 30;

fn check_budget(g: &Graph, max_order: usize) -> Result<()> {
    let limit = max_order.min(HARD_MAX_ORDER);
    if g.order() > limit {
        return Err(Error::Scale(format!(
            "exact solver limited to order {limit}, graph has order {}",
            g.order()
        )));
    }
    Ok(())
}

/// Rows of the vertices above `s`, re-indexed so vertex `s + 1 + i` is bit `i`.
fn rows_above(g: &Graph, s: usize) -> Vec<u32> {
    let n = g.order();
    let mask = bits::low_mask(n - s - 1);
    (s + 1..n).map(|v| (g.row64(v) >> (s + 1) & mask) as u32).collect()
}

/// Scans cycles rooted at each start vertex; `visit(len)` is called for every
/// cycle length found and returns `true` to stop early. `min_len` lets the
/// scan skip start vertices that cannot root a cycle that long.
fn scan_cycles(g: &Graph, min_len: usize, mut visit: impl FnMut(usize) -> bool) {
    let n = g.order();
    for s in 0..n {
        let hi = n - s - 1;
        if hi < 2 || hi + 1 < min_len {
            break;
        }
        let rows = rows_above(g, s);
        let start_nb = (g.row64(s) >> (s + 1) & bits::low_mask(hi)) as u32;
        if start_nb.count_ones() < 2 {
            continue;
        }
        let mut reach = vec![0u32; 1 << hi];
        for u in Ones(start_nb as u64) {
            reach[1 << u] = 1 << u;
        }
        let full = (1u32 << hi) - 1;
        for mask in 1..=full {
            let ends = reach[mask as usize];
            if ends == 0 {
                continue;
            }
            let len = mask.count_ones() as usize + 1;
            if len >= 3 && ends & start_nb != 0 && visit(len) {
                return;
            }
            for w in Ones((full & !mask) as u64) {
                if rows[w] & ends != 0 {
                    reach[(mask | 1 << w) as usize] |= 1 << w;
                }
            }
        }
    }
}

/// Bitmask of cycle lengths present in `g` (bit `l` set iff some cycle has
/// exactly `l` edges).
pub fn cycle_lengths(g: &Graph) -> Result<u64> {
    cycle_lengths_within(g, DEFAULT_MAX_ORDER)
}

pub fn cycle_lengths_within(g: &Graph, max_order: usize) -> Result<u64> {
    check_budget(g, max_order)?;
    let mut lengths = 0u64;
    scan_cycles(g, 3, |len| {
        lengths |= 1 << len;
        false
    });
    Ok(lengths)
}

/// Length of a longest cycle, 0 if `g` is acyclic.
pub fn circumference(g: &Graph) -> Result<usize> {
    circumference_within(g, DEFAULT_MAX_ORDER)
}

pub fn circumference_within(g: &Graph, max_order: usize) -> Result<usize> {
    let lengths = cycle_lengths_within(g, max_order)?;
    Ok(if lengths == 0 { 0 } else { 63 - lengths.leading_zeros() as usize })
}

/// Whether some cycle has at least `len` edges. Stops at the first witness.
pub fn has_cycle_at_least(g: &Graph, len: usize, max_order: usize) -> Result<bool> {
    check_budget(g, max_order)?;
    let mut found = false;
    scan_cycles(g, len.max(3), |l| {
        found = l >= len;
        found
    });
    Ok(found)
}

/// Whether some cycle has exactly `len` edges.
pub fn has_cycle_of_length(g: &Graph, len: usize, max_order: usize) -> Result<bool> {
    check_budget(g, max_order)?;
    if len < 3 || len > g.order() {
        return Ok(false);
    }
    let mut found = false;
    scan_cycles(g, len, |l| {
        found = l == len;
        found
    });
    Ok(found)
}

/// Vertex count of a longest path: 0 for the empty graph, 1 for a nonempty
/// edgeless graph.
pub fn longest_path_order(g: &Graph) -> Result<usize> {
    longest_path_order_within(g, DEFAULT_MAX_ORDER, usize::MAX)
}

/// As [`longest_path_order`], stopping early once a path on `stop_at`
/// vertices is found.
pub fn longest_path_order_within(g: &Graph, max_order: usize, stop_at: usize) -> Result<usize> {
    check_budget(g, max_order)?;
    let n = g.order();
    if n == 0 {
        return Ok(0);
    }
    let rows: Vec<u32> = (0..n).map(|v| g.row64(v) as u32).collect();
    let full = ((1u64 << n) - 1) as u32;
    let mut ends = vec![0u32; 1 << n];
    for v in 0..n {
        ends[1 << v] = 1 << v;
    }
    let mut best = 1;
    for mask in 1..=full {
        let e = ends[mask as usize];
        if e == 0 {
            continue;
        }
        let size = mask.count_ones() as usize;
        if size > best {
            best = size;
            if best >= stop_at || best == n {
                return Ok(best);
            }
        }
        for w in Ones((full & !mask) as u64) {
            if rows[w] & e != 0 {
                ends[(mask | 1 << w) as usize] |= 1 << w;
            }
        }
    }
    Ok(best)
}

/// For every vertex `v`, the vertex count of a longest `from`-`v` path
/// (`1` for `v = from`, `0` if `v` is unreachable).
pub fn longest_paths_from(g: &Graph, from: usize, max_order: usize) -> Result<Vec<usize>> {
    check_budget(g, max_order)?;
    let n = g.order();
    if from >= n {
        return Err(domain(format!("vertex {from} out of range")));
    }
    let rows: Vec<u32> = (0..n).map(|v| g.row64(v) as u32).collect();
    let full = ((1u64 << n) - 1) as u32;
    let mut ends = vec![0u32; 1 << n];
    ends[1 << from] = 1 << from;
    let mut best = vec![0usize; n];
    for mask in (1u32..=full).filter(|m| m >> from & 1 == 1) {
        let e = ends[mask as usize];
        if e == 0 {
            continue;
        }
        let size = mask.count_ones() as usize;
        for v in Ones(e as u64) {
            best[v] = best[v].max(size);
        }
        for w in Ones((full & !mask) as u64) {
            if rows[w] & e != 0 {
                ends[(mask | 1 << w) as usize] |= 1 << w;
            }
        }
    }
    Ok(best)
}

/// Maximum matching size of a bipartite graph by augmenting paths from X.
pub fn max_matching(g: &BipartiteGraph) -> usize {
    max_matching_from(g.graph(), g.side_vertices(Side::X))
}

/// Augmenting-path matching where `left` is one side of a bipartite graph.
pub(crate) fn max_matching_from(graph: &Graph, left: impl Iterator<Item = usize>) -> usize {
    let mut mate: Vec<Option<usize>> = vec![None; graph.order()];
    let mut size = 0;
    for x in left {
        let mut visited = vec![false; graph.order()];
        if augment(graph, x, &mut mate, &mut visited) {
            size += 1;
        }
    }
    size
}

fn augment(g: &Graph, x: usize, mate: &mut [Option<usize>], visited: &mut [bool]) -> bool {
    for y in g.neighbors(x) {
        if std::mem::replace(&mut visited[y], true) {
            continue;
        }
        let free = match mate[y] {
            None => true,
            Some(x2) => augment(g, x2, mate, visited),
        };
        if free {
            mate[y] = Some(x);
            mate[x] = Some(y);
            return true;
        }
    }
    false
}

/// Result of peeling a graph down to its `(alpha+1)`-core.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoreTrace {
    /// Surviving vertices, ascending.
    pub surviving: Vec<usize>,
    /// `(vertex, degree at the moment it was deleted)`.
    pub deletion_order: Vec<(usize, usize)>,
}

impl CoreTrace {
    pub fn subgraph(&self, g: &Graph) -> Graph {
        g.induced_subgraph(&self.surviving)
    }
}

/// `H(G, alpha)`: repeatedly delete every vertex of degree at most `alpha`.
///
/// Deletion proceeds in rounds; within a round vertices go in ascending
/// order.
pub fn core(g: &Graph, alpha: usize) -> CoreTrace {
    let n = g.order();
    let mut alive = vec![true; n];
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut deletion_order = Vec::new();
    loop {
        let round: Vec<usize> = (0..n).filter(|&v| alive[v] && deg[v] <= alpha).collect();
        if round.is_empty() {
            break;
        }
        for v in round {
            deletion_order.push((v, deg[v]));
            delete(g, v, &mut alive, &mut deg);
        }
    }
    finish(alive, deletion_order)
}

/// Peels one vertex at a time, always deleting the first vertex in
/// `priority` whose current degree is at most `alpha`. Any priority yields
/// the same survivors as [`core`].
pub fn core_by_priority(g: &Graph, alpha: usize, priority: &[usize]) -> Result<CoreTrace> {
    let n = g.order();
    let mut seen = vec![false; n];
    if priority.len() != n || priority.iter().any(|&v| v >= n || std::mem::replace(&mut seen[v], true)) {
        return Err(domain("priority must be a permutation of the vertices"));
    }
    let mut alive = vec![true; n];
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut deletion_order = Vec::new();
    while let Some(&v) = priority.iter().find(|&&v| alive[v] && deg[v] <= alpha) {
        deletion_order.push((v, deg[v]));
        delete(g, v, &mut alive, &mut deg);
    }
    Ok(finish(alive, deletion_order))
}

fn delete(g: &Graph, v: usize, alive: &mut [bool], deg: &mut [usize]) {
    alive[v] = false;
    for u in g.neighbors(v) {
        if alive[u] {
            deg[u] -= 1;
        }
    }
}

fn finish(alive: Vec<bool>, deletion_order: Vec<(usize, usize)>) -> CoreTrace {
    CoreTrace {
        surviving: (0..alive.len()).filter(|&v| alive[v]).collect(),
        deletion_order,
    }
}

/// Adds X-Y edges to `g` until every further one would close a cycle of
/// length at least `min_len`.
///
/// Candidate pairs are scanned lexicographically and the scan restarts after
/// each addition. The input must not already contain such a cycle.
pub fn closure_long_cycle(g: &BipartiteGraph, min_len: usize) -> Result<BipartiteGraph> {
    closure_long_cycle_within(g, min_len, DEFAULT_MAX_ORDER)
}

pub fn closure_long_cycle_within(g: &BipartiteGraph, min_len: usize, max_order: usize) -> Result<BipartiteGraph> {
    if has_cycle_at_least(g.graph(), min_len, max_order)? {
        return Err(domain(format!("input already has a cycle of length >= {min_len}")));
    }
    let mut out = g.clone();
    let xs: Vec<usize> = g.side_vertices(Side::X).collect();
    let ys: Vec<usize> = g.side_vertices(Side::Y).collect();
    'restart: loop {
        for &x in &xs {
            // Adding xy closes a cycle with as many edges as the longest x-y
            // path has vertices.
            let longest = longest_paths_from(out.graph(), x, max_order)?;
            for &y in &ys {
                if !out.graph().has_edge(x, y) && longest[y] < min_len {
                    out.add_cross_edge(x, y)?;
                    continue 'restart;
                }
            }
        }
        return Ok(out);
    }
}

fn check_path(g: &Graph, p: &PathView) -> Result<()> {
    PathView::new(g, p.vertices().to_vec())?;
    if p.order() < 2 {
        return Err(domain("Pósa bounds need a path with at least 2 vertices"));
    }
    Ok(())
}

/// `min(|V(P)|, d_P(x) + d_P(y))` for the endpoints `x`, `y` of `p`. In a
/// 2-connected host this is a lower bound on the circumference.
pub fn posa_bound(g: &Graph, p: &PathView) -> Result<usize> {
    check_path(g, p)?;
    let (x, y) = p.endpoints();
    Ok(p.order().min(p.path_degree(g, x) + p.path_degree(g, y)))
}

/// Bipartite analogue of [`posa_bound`]:
/// endpoints in different parts give `min(|V(P)|, 2(d_P(u) + d_P(v) - 1))`,
/// endpoints in the same part give `min(|V(P)| - 1, 2(d_P(u) + d_P(v) - 2))`.
pub fn bipartite_posa_bound(g: &BipartiteGraph, p: &PathView) -> Result<usize> {
    let host = g.graph();
    check_path(host, p)?;
    let (u, v) = p.endpoints();
    let degs = p.path_degree(host, u) + p.path_degree(host, v);
    Ok(if g.part_of(u) != g.part_of(v) {
        p.order().min(2 * degs.saturating_sub(1))
    } else {
        (p.order() - 1).min(2 * degs.saturating_sub(2))
    })
}
