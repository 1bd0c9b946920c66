//! Undirected simple graphs with bitset adjacency rows, bipartite views and
//! paths.
//!
//! Vertices are dense `0..order` labels. Each vertex owns a row of
//! `words = ceil(order / 64)` machine words; graphs of order at most 64 use a
//! single word per row, which the exhaustive kernels rely on.
//!
//! Graphs are mutable only through [`Graph::add_edge`], which checks the
//! simple-graph invariants (no loops, in-range endpoints) on every call.
//! Every analysis routine in the crate takes `&Graph`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bits;
use crate::error::{domain, Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    words: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `order` vertices.
    pub fn new(order: usize) -> Self {
        let words = bits::words_for(order);
        Graph {
            order,
            words,
            adj: vec![0; order * words],
        }
    }

    pub fn from_edges<I>(order: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::new(order);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph of order at most 64 from single-word adjacency rows.
    ///
    /// Rows must describe a symmetric, irreflexive relation.
    pub fn from_rows64(rows: &[u64]) -> Result<Self> {
        let order = rows.len();
        if order > 64 {
            return Err(domain(format!("from_rows64 needs order <= 64, got {order}")));
        }
        let mask = bits::low_mask(order);
        for (v, &row) in rows.iter().enumerate() {
            if row & !mask != 0 {
                return Err(domain(format!("row {v} has bits beyond order {order}")));
            }
            if row >> v & 1 == 1 {
                return Err(domain(format!("self-loop at vertex {v}")));
            }
            for u in bits::Ones(row) {
                if rows[u] >> v & 1 == 0 {
                    return Err(domain(format!("asymmetric adjacency between {v} and {u}")));
                }
            }
        }
        Ok(Graph {
            order,
            words: 1,
            adj: rows.to_vec(),
        })
    }

    /// Overwrites this graph with the given single-word rows without
    /// reallocating. Used by enumeration loops; the caller guarantees the
    /// rows are symmetric and irreflexive.
    pub(crate) fn overwrite_rows64(&mut self, rows: &[u64]) {
        debug_assert_eq!(self.words, 1);
        debug_assert_eq!(rows.len(), self.order);
        self.adj.copy_from_slice(rows);
        debug_assert!(self.is_symmetric_irreflexive());
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.insert_unchecked(u, v);
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let mut g = Graph::path(n);
        g.insert_unchecked(n - 1, 0);
        g
    }

    /// Path on `n` vertices `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        let mut g = Graph::new(n);
        for v in 1..n {
            g.insert_unchecked(v - 1, v);
        }
        g
    }

    /// `K_{m,p}` with the `m` side on `0..m`.
    pub fn complete_bipartite(m: usize, p: usize) -> Self {
        let mut g = Graph::new(m + p);
        for u in 0..m {
            for v in m..m + p {
                g.insert_unchecked(u, v);
            }
        }
        g
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    /// Words per adjacency row.
    #[inline]
    pub fn words(&self) -> usize {
        self.words
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        bits::count(&self.adj) / 2
    }

    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.adj[v * self.words..(v + 1) * self.words]
    }

    /// Adjacency row as a single word. Only valid when `order <= 64`.
    #[inline]
    pub fn row64(&self, v: usize) -> u64 {
        debug_assert_eq!(self.words, 1);
        self.adj[v]
    }

    /// All rows as single words. Only valid when `order <= 64`.
    #[inline]
    pub(crate) fn rows64(&self) -> &[u64] {
        debug_assert_eq!(self.words, 1);
        &self.adj
    }

    #[inline]
    pub fn is_small(&self) -> bool {
        self.order <= 64
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        bits::get(self.row(u), v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        bits::count(self.row(v))
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        bits::ones(self.row(v))
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Adds the edge `uv`. Returns `false` if it was already present.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        if u >= self.order || v >= self.order {
            return Err(domain(format!(
                "edge {u}-{v} out of range for order {}",
                self.order
            )));
        }
        if u == v {
            return Err(domain(format!("self-loop at vertex {u}")));
        }
        if self.has_edge(u, v) {
            return Ok(false);
        }
        self.insert_unchecked(u, v);
        debug_assert!(self.has_edge(v, u));
        Ok(true)
    }

    fn insert_unchecked(&mut self, u: usize, v: usize) {
        let w = self.words;
        bits::set(&mut self.adj[u * w..(u + 1) * w], v);
        bits::set(&mut self.adj[v * w..(v + 1) * w], u);
    }

    /// Minimum degree. Errors on the empty graph.
    pub fn min_degree(&self) -> Result<usize> {
        (0..self.order)
            .map(|v| self.degree(v))
            .min()
            .ok_or_else(|| Error::Degenerate("minimum degree of the empty graph".into()))
    }

    pub fn max_degree(&self) -> usize {
        (0..self.order).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Subgraph induced by `vertices`, relabeled to `0..vertices.len()` in
    /// the given order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut g = Graph::new(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.insert_unchecked(i, j);
                }
            }
        }
        g
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.order);
        let mut g = Graph::new(self.order);
        for (u, v) in self.edges() {
            g.insert_unchecked(perm[u], perm[v]);
        }
        g
    }

    pub(crate) fn is_symmetric_irreflexive(&self) -> bool {
        (0..self.order).all(|u| !self.has_edge(u, u) && self.neighbors(u).all(|v| self.has_edge(v, u)))
    }

    /// True iff the graph has at most one connected component. The empty
    /// graph and the one-vertex graph are connected.
    pub fn is_connected(&self) -> bool {
        if self.order <= 1 {
            return true;
        }
        let mut all = vec![0u64; self.words];
        for v in 0..self.order {
            bits::set(&mut all, v);
        }
        self.spans(&all)
    }

    /// True iff the graph is connected, has at least 3 vertices, and has no
    /// cut vertex.
    pub fn is_biconnected(&self) -> bool {
        if self.order < 3 || !self.is_connected() {
            return false;
        }
        let mut allowed = vec![0u64; self.words];
        for v in 0..self.order {
            bits::set(&mut allowed, v);
        }
        (0..self.order).all(|cut| {
            bits::clear(&mut allowed, cut);
            let ok = self.spans(&allowed);
            bits::set(&mut allowed, cut);
            ok
        })
    }

    /// Whether the subgraph induced on `allowed` (non-empty) is connected.
    fn spans(&self, allowed: &[u64]) -> bool {
        let Some(start) = bits::ones(allowed).next() else {
            return true;
        };
        if self.words == 1 {
            let allowed = allowed[0];
            let mut seen = 1u64 << start;
            let mut frontier = seen;
            while frontier != 0 {
                let mut next = 0;
                for v in bits::Ones(frontier) {
                    next |= self.adj[v];
                }
                frontier = next & allowed & !seen;
                seen |= frontier;
            }
            return seen == allowed;
        }
        let mut seen = vec![0u64; self.words];
        bits::set(&mut seen, start);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for u in self.neighbors(v) {
                if bits::get(allowed, u) && !bits::get(&seen, u) {
                    bits::set(&mut seen, u);
                    stack.push(u);
                }
            }
        }
        seen == allowed
    }

    /// A proper 2-colouring if one exists (each component's smallest vertex
    /// gets [`Side::X`]).
    pub fn two_coloring(&self) -> Option<Vec<Side>> {
        let mut color: Vec<Option<Side>> = vec![None; self.order];
        for root in 0..self.order {
            if color[root].is_some() {
                continue;
            }
            color[root] = Some(Side::X);
            let mut stack = vec![root];
            while let Some(v) = stack.pop() {
                let cv = color[v].unwrap();
                for u in self.neighbors(v) {
                    match color[u] {
                        None => {
                            color[u] = Some(cv.other());
                            stack.push(u);
                        }
                        Some(cu) if cu == cv => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(Option::unwrap).collect())
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("order", &self.order)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Which colour class a vertex of a bipartite graph belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    X,
    Y,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::X => Side::Y,
            Side::Y => Side::X,
        }
    }
}

/// A graph together with a bipartition `(X, Y)`, `|X| = n`, `|Y| = b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BipartiteGraph {
    graph: Graph,
    part_of: Vec<Side>,
    n: usize,
    b: usize,
}

/// Checks that `part_of` is a valid bipartition of `g`.
pub fn bipartition_check(g: Graph, part_of: Vec<Side>) -> Result<BipartiteGraph> {
    BipartiteGraph::new(g, part_of)
}

impl BipartiteGraph {
    pub fn new(graph: Graph, part_of: Vec<Side>) -> Result<Self> {
        if part_of.len() != graph.order() {
            return Err(domain(format!(
                "part assignment covers {} vertices, graph has {}",
                part_of.len(),
                graph.order()
            )));
        }
        if let Some((u, v)) = graph.edges().find(|&(u, v)| part_of[u] == part_of[v]) {
            return Err(Error::InvalidBipartition { u, v });
        }
        let n = part_of.iter().filter(|&&s| s == Side::X).count();
        let b = part_of.len() - n;
        Ok(BipartiteGraph { graph, part_of, n, b })
    }

    /// Standard layout: vertices `0..n` form X, `n..n+b` form Y.
    pub fn standard_parts(n: usize, b: usize) -> Vec<Side> {
        let mut parts = vec![Side::X; n];
        parts.resize(n + b, Side::Y);
        parts
    }

    /// Edgeless bipartite graph in the standard layout.
    pub fn empty(n: usize, b: usize) -> Self {
        BipartiteGraph {
            graph: Graph::new(n + b),
            part_of: Self::standard_parts(n, b),
            n,
            b,
        }
    }

    /// Bipartite graph in the standard layout from `(i, j)` pairs meaning
    /// X-vertex `i` is adjacent to Y-vertex `j` (so vertex `n + j`).
    pub fn from_cross_edges<I>(n: usize, b: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = BipartiteGraph::empty(n, b);
        for (i, j) in edges {
            if i >= n || j >= b {
                return Err(domain(format!("cross edge ({i}, {j}) out of range for {n}x{b}")));
            }
            g.graph.insert_unchecked(i, n + j);
        }
        Ok(g)
    }

    /// Interprets `g` with the standard layout `X = 0..n`.
    pub fn with_standard_parts(g: Graph, n: usize) -> Result<Self> {
        if n > g.order() {
            return Err(domain(format!("|X| = {n} exceeds order {}", g.order())));
        }
        let b = g.order() - n;
        BipartiteGraph::new(g, Self::standard_parts(n, b))
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    pub fn part_of(&self, v: usize) -> Side {
        self.part_of[v]
    }

    pub fn parts(&self) -> &[Side] {
        &self.part_of
    }

    /// `|X|`.
    pub fn n(&self) -> usize {
        self.n
    }

    /// `|Y|`.
    pub fn b(&self) -> usize {
        self.b
    }

    pub fn side_vertices(&self, side: Side) -> impl Iterator<Item = usize> + '_ {
        (0..self.part_of.len()).filter(move |&v| self.part_of[v] == side)
    }

    /// Adds an edge between opposite parts.
    pub fn add_cross_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        if u < self.part_of.len() && v < self.part_of.len() && self.part_of[u] == self.part_of[v] {
            return Err(Error::InvalidBipartition { u, v });
        }
        self.graph.add_edge(u, v)
    }
}

/// A path in a host graph: distinct vertices, consecutive ones adjacent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathView {
    vertices: Vec<usize>,
}

impl PathView {
    pub fn new(host: &Graph, vertices: Vec<usize>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(domain("a path needs at least one vertex"));
        }
        let mut seen = vec![false; host.order()];
        for &v in &vertices {
            if v >= host.order() {
                return Err(domain(format!("path vertex {v} out of range")));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(domain(format!("path repeats vertex {v}")));
            }
        }
        if let Some(w) = vertices.windows(2).find(|w| !host.has_edge(w[0], w[1])) {
            return Err(domain(format!("path step {}-{} is not an edge", w[0], w[1])));
        }
        Ok(PathView { vertices })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// Number of vertices on the path.
    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    pub fn endpoints(&self) -> (usize, usize) {
        (self.vertices[0], *self.vertices.last().unwrap())
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }

    /// `d_P(v)`: neighbours of `v` in `host` that lie on the path.
    pub fn path_degree(&self, host: &Graph, v: usize) -> usize {
        self.vertices.iter().filter(|&&u| host.has_edge(v, u)).count()
    }

    /// True if neither endpoint has a neighbour off the path.
    pub fn is_maximal(&self, host: &Graph) -> bool {
        let (x, y) = self.endpoints();
        host.neighbors(x).chain(host.neighbors(y)).all(|u| self.contains(u))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_triangles_sharing_vertex() -> Graph {
        Graph::from_edges(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap()
    }

    #[test]
    fn connectivity() {
        assert!(Graph::complete(4).is_connected());
        assert!(!Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap().is_connected());
        assert!(Graph::path(5).is_connected());
        assert!(Graph::new(0).is_connected());
        assert!(Graph::new(1).is_connected());
        assert!(!Graph::new(2).is_connected());
    }

    #[test]
    fn biconnectivity() {
        assert!(Graph::cycle(5).is_biconnected());
        assert!(!Graph::path(4).is_biconnected());
        assert!(!two_triangles_sharing_vertex().is_biconnected());
        assert!(!Graph::complete(2).is_biconnected());
        assert!(Graph::complete(3).is_biconnected());
    }

    #[test]
    fn biconnectivity_multiword() {
        let c = Graph::cycle(100);
        assert!(c.is_biconnected());
        let p = Graph::path(100);
        assert!(p.is_connected());
        assert!(!p.is_biconnected());
    }

    #[test]
    fn min_degree_values() {
        assert_eq!(Graph::cycle(6).min_degree().unwrap(), 2);
        assert_eq!(Graph::complete_bipartite(1, 4).min_degree().unwrap(), 1);
        assert!(matches!(Graph::new(0).min_degree(), Err(Error::Degenerate(_))));
    }

    #[test]
    fn add_edge_rejects_loops_and_range() {
        let mut g = Graph::new(3);
        assert!(g.add_edge(1, 1).is_err());
        assert!(g.add_edge(0, 3).is_err());
        assert!(g.add_edge(0, 1).unwrap());
        assert!(!g.add_edge(1, 0).unwrap());
        assert_eq!(g.size(), 1);
    }

    #[test]
    fn from_rows64_validates() {
        assert!(Graph::from_rows64(&[0b10, 0b01]).is_ok());
        assert!(Graph::from_rows64(&[0b10, 0b00]).is_err());
        assert!(Graph::from_rows64(&[0b01, 0b00]).is_err());
    }

    #[test]
    fn bipartition_valid_and_invalid() {
        let c6 = Graph::cycle(6);
        let alt: Vec<Side> = (0..6).map(|v| if v % 2 == 0 { Side::X } else { Side::Y }).collect();
        assert!(bipartition_check(c6, alt).is_ok());

        let tri = Graph::complete(3);
        for mask in 0..8u32 {
            let parts = (0..3).map(|v| if mask >> v & 1 == 0 { Side::X } else { Side::Y }).collect();
            assert!(matches!(
                bipartition_check(tri.clone(), parts),
                Err(Error::InvalidBipartition { .. })
            ));
        }

        let k33 = bipartition_check(Graph::complete_bipartite(3, 3), BipartiteGraph::standard_parts(3, 3)).unwrap();
        assert_eq!((k33.n(), k33.b()), (3, 3));
    }

    #[test]
    fn invalid_bipartition_names_edge() {
        let g = Graph::from_edges(4, [(0, 2), (0, 1)]).unwrap();
        match bipartition_check(g, BipartiteGraph::standard_parts(2, 2)) {
            Err(Error::InvalidBipartition { u, v }) => assert_eq!((u, v), (0, 1)),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn path_view_validation() {
        let g = Graph::cycle(6);
        assert!(PathView::new(&g, vec![0, 1, 2]).is_ok());
        assert!(PathView::new(&g, vec![0, 2]).is_err());
        assert!(PathView::new(&g, vec![0, 1, 0]).is_err());
        let p = PathView::new(&g, vec![0, 1, 2, 3, 4, 5]).unwrap();
        assert_eq!(p.path_degree(&g, 0), 2);
        assert!(p.is_maximal(&g));
    }

    #[test]
    fn two_coloring_detects_odd_cycles() {
        assert!(Graph::cycle(5).two_coloring().is_none());
        let c = Graph::cycle(6).two_coloring().unwrap();
        assert_eq!(c[0], Side::X);
        assert_eq!(c[1], Side::Y);
    }
}
