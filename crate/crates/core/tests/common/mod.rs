//! Reference implementations shared by the integration tests. Everything here
//! is deliberately naive and independent of the library's algorithms.

#![allow(dead_code)]

use exturan::{BipartiteGraph, Graph, PathView};
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform float in `[0, 1)`.
pub fn unit(rng: &mut ChaCha8Rng) -> f64 {
    (rng.next_u64() >> 11) as f64 / (1u64 << 53) as f64
}

pub fn below(rng: &mut ChaCha8Rng, n: usize) -> usize {
    (rng.next_u64() % n as u64) as usize
}

/// `G(n, p)`.
pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if unit(rng) < p {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

/// Random bipartite graph with `X = 0..n`, `Y = n..n + b`.
pub fn random_bipartite(rng: &mut ChaCha8Rng, n: usize, b: usize, p: f64) -> BipartiteGraph {
    let mut g = BipartiteGraph::empty(n, b);
    for x in 0..n {
        for y in n..n + b {
            if unit(rng) < p {
                g.add_cross_edge(x, y).unwrap();
            }
        }
    }
    g
}

pub fn shuffle<T>(rng: &mut ChaCha8Rng, items: &mut [T]) {
    for i in (1..items.len()).rev() {
        items.swap(i, below(rng, i + 1));
    }
}

/// Calls `visit` on every sequence of distinct vertices of length `len`.
fn arrangements(n: usize, len: usize, visit: &mut dyn FnMut(&[usize])) {
    fn rec(n: usize, len: usize, seq: &mut Vec<usize>, used: &mut [bool], visit: &mut dyn FnMut(&[usize])) {
        if seq.len() == len {
            visit(seq);
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                seq.push(v);
                rec(n, len, seq, used, visit);
                seq.pop();
                used[v] = false;
            }
        }
    }
    rec(n, len, &mut Vec::new(), &mut vec![false; n], visit);
}

fn is_path(g: &Graph, seq: &[usize]) -> bool {
    seq.windows(2).all(|w| g.has_edge(w[0], w[1]))
}

/// Circumference by trying every vertex arrangement, longest first.
pub fn perm_circumference(g: &Graph) -> usize {
    for len in (3..=g.order()).rev() {
        let mut found = false;
        arrangements(g.order(), len, &mut |seq| {
            found = found || (is_path(g, seq) && g.has_edge(seq[0], seq[len - 1]));
        });
        if found {
            return len;
        }
    }
    0
}

/// Longest path vertex count by trying every vertex arrangement.
pub fn perm_longest_path(g: &Graph) -> usize {
    for len in (1..=g.order()).rev() {
        let mut found = false;
        arrangements(g.order(), len, &mut |seq| found = found || is_path(g, seq));
        if found {
            return len;
        }
    }
    0
}

/// Every cycle length present, by arrangement search.
pub fn perm_cycle_lengths(g: &Graph) -> u64 {
    let mut lengths = 0;
    for len in 3..=g.order() {
        arrangements(g.order(), len, &mut |seq| {
            if is_path(g, seq) && g.has_edge(seq[0], seq[len - 1]) {
                lengths |= 1 << len;
            }
        });
    }
    lengths
}

/// Largest set of pairwise disjoint edges, over all edge subsets.
pub fn brute_matching(g: &Graph) -> usize {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    assert!(edges.len() <= 20);
    let mut best = 0;
    for mask in 0u32..1 << edges.len() {
        let mut used = vec![false; g.order()];
        let ok = (0..edges.len()).filter(|i| mask >> i & 1 == 1).all(|i| {
            let (u, v) = edges[i];
            !std::mem::replace(&mut used[u], true) && !std::mem::replace(&mut used[v], true)
        });
        if ok {
            best = best.max(mask.count_ones() as usize);
        }
    }
    best
}

/// Vertex count of a longest `u`-`v` path by plain DFS (0 if none).
pub fn dfs_longest_uv(g: &Graph, u: usize, v: usize) -> usize {
    fn rec(g: &Graph, at: usize, target: usize, used: &mut [bool], depth: usize, best: &mut usize) {
        if at == target {
            *best = (*best).max(depth);
            return;
        }
        for w in g.neighbors(at).collect::<Vec<_>>() {
            if !used[w] {
                used[w] = true;
                rec(g, w, target, used, depth + 1, best);
                used[w] = false;
            }
        }
    }
    let mut used = vec![false; g.order()];
    used[u] = true;
    let mut best = 0;
    rec(g, u, v, &mut used, 1, &mut best);
    best
}

/// Connectivity by union-find over the edge list.
pub fn uf_connected(g: &Graph) -> bool {
    let n = g.order();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut x = x;
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut comps = n;
    for (u, v) in g.edges() {
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a != b {
            parent[a] = b;
            comps -= 1;
        }
    }
    comps <= 1
}

/// 2-connectivity from the definition: order at least 3 and connected after
/// deleting any one vertex.
pub fn naive_biconnected(g: &Graph) -> bool {
    let n = g.order();
    n >= 3
        && uf_connected(g)
        && (0..n).all(|cut| {
            let keep: Vec<usize> = (0..n).filter(|&v| v != cut).collect();
            uf_connected(&g.induced_subgraph(&keep))
        })
}

/// A random path through `g` grown from a random vertex by random extension
/// at the tail (not necessarily maximal). `None` if the walk stalls below
/// two vertices.
pub fn random_path(rng: &mut ChaCha8Rng, g: &Graph, max_len: usize) -> Option<PathView> {
    let n = g.order();
    let mut seq = vec![below(rng, n)];
    let mut used = vec![false; n];
    used[seq[0]] = true;
    let target = 2 + below(rng, max_len.max(2) - 1);
    while seq.len() < target {
        let tail = *seq.last().unwrap();
        let options: Vec<usize> = g.neighbors(tail).filter(|&w| !used[w]).collect();
        if options.is_empty() {
            break;
        }
        let w = options[below(rng, options.len())];
        used[w] = true;
        seq.push(w);
    }
    (seq.len() >= 2).then(|| PathView::new(g, seq).unwrap())
}

/// Binomial coefficient in `u128` by the multiplicative formula.
pub fn choose(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}
