//! The extremal families `F_{b,n,n-k,a}` (bipartite) and `H_{n,k,a}`.
//!
//! `F`: `X = A ∪ B`, `Y = C ∪ D` with `|A| = k + a`, `|B| = n - k - a`,
//! `|C| = a`, `|D| = b - a`; `A` sees exactly `C`, `B` sees all of `Y`.
//!
//! `H`: `|A| = a`, `|B| = n - k + a`, `|C| = k - 2a`; all `A`-`B` edges plus
//! a clique on `A ∪ C`.
//!
//! Vertices are laid out region by region (`A`, then `B`, then `C`, then
//! `D`), so `F` also follows the standard bipartite layout `X = 0..n`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::counting::count_kst;
use crate::error::{domain, Error, Result};
use crate::formulas::{eval_f_both, eval_g};
use crate::graph::{BipartiteGraph, Graph, Side};
use crate::structure;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Region {
    A,
    B,
    C,
    D,
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family")]
pub enum ConstructionParams {
    F { b: usize, n: usize, k: usize, a: usize },
    H { n: usize, k: usize, a: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledConstruction {
    pub graph: Graph,
    /// Bipartition for `F`; `None` for `H`.
    pub part_of: Option<Vec<Side>>,
    pub region_of: Vec<Region>,
    pub params: ConstructionParams,
}

/// Builds `F_{b,n,n-k,a}`.
///
/// Requires `b >= n`, `a >= 1`, `a <= b` and `k + a < n` (so `B` is
/// nonempty and the graph connected).
pub fn build_f(b: usize, n: usize, k: usize, a: usize) -> Result<LabeledConstruction> {
    if b < n {
        return Err(domain(format!("F needs b >= n, got b = {b}, n = {n}")));
    }
    if a < 1 || a > b {
        return Err(domain(format!("F needs 1 <= a <= b, got a = {a}, b = {b}")));
    }
    if k + a >= n {
        return Err(domain(format!(
            "F needs n - k - a >= 1 (nonempty B), got n = {n}, k = {k}, a = {a}"
        )));
    }
    let sizes = [(Region::A, k + a), (Region::B, n - k - a), (Region::C, a), (Region::D, b - a)];
    let region_of: Vec<Region> = sizes.iter().flat_map(|&(r, len)| std::iter::repeat_n(r, len)).collect();
    let (a_set, b_set, y_set) = (0..k + a, k + a..n, n..n + b);

    let mut graph = Graph::new(n + b);
    for x in a_set {
        for y in n..n + a {
            graph.add_edge(x, y)?;
        }
    }
    for x in b_set {
        for y in y_set.clone() {
            graph.add_edge(x, y)?;
        }
    }
    let out = LabeledConstruction {
        graph,
        part_of: Some(BipartiteGraph::standard_parts(n, b)),
        region_of,
        params: ConstructionParams::F { b, n, k, a },
    };
    debug_assert_eq!(out.graph.size(), (k + a) * a + (n - k - a) * b);
    Ok(out)
}

/// Builds `H_{n,k,a}`. Requires `n >= k >= 3` and `k/2 > a >= 1`.
///
/// `k = 3` is admitted so the path theorem's `H_{n,k-1,·}` can be built at
/// `k = 4`.
pub fn build_h(n: usize, k: usize, a: usize) -> Result<LabeledConstruction> {
    if !(n >= k && k >= 3) {
        return Err(domain(format!("H needs n >= k >= 3, got n = {n}, k = {k}")));
    }
    if !(a >= 1 && 2 * a < k) {
        return Err(domain(format!("H needs k/2 > a >= 1, got a = {a}, k = {k}")));
    }
    let b_len = n - k + a;
    let sizes = [(Region::A, a), (Region::B, b_len), (Region::C, k - 2 * a)];
    let region_of: Vec<Region> = sizes.iter().flat_map(|&(r, len)| std::iter::repeat_n(r, len)).collect();
    let a_set = 0..a;
    let b_set = a..a + b_len;
    let clique: Vec<usize> = a_set.clone().chain(a + b_len..n).collect();

    let mut graph = Graph::new(n);
    for x in a_set {
        for y in b_set.clone() {
            graph.add_edge(x, y)?;
        }
    }
    for (i, &u) in clique.iter().enumerate() {
        for &v in &clique[i + 1..] {
            graph.add_edge(u, v)?;
        }
    }
    Ok(LabeledConstruction {
        graph,
        part_of: None,
        region_of,
        params: ConstructionParams::H { n, k, a },
    })
}

impl LabeledConstruction {
    pub fn bipartite(&self) -> Option<BipartiteGraph> {
        let parts = self.part_of.clone()?;
        BipartiteGraph::new(self.graph.clone(), parts).ok()
    }

    pub fn region_size(&self, region: Region) -> usize {
        self.region_of.iter().filter(|&&r| r == region).count()
    }

    /// Checks every stated property of the construction, including the
    /// exponential circumference bound. Returns `self` on success.
    ///
    /// * `F`: region sizes; connected; minimum degree `a` when
    ///   `n >= 2k + 2a`; circumference at most `2n - 2k - 2`; maximum
    ///   matching and longest path consistent with `n - k`; `K_{s,t}` counts
    ///   equal to `f` for `s, t <= 2`.
    /// * `H`: region sizes; circumference at most `k - 1`; 2-connected when
    ///   `a >= 2`; `K_{s,t}` counts equal to `g` for `s, t <= 2`.
    pub fn audited(self, max_order: usize) -> Result<Self> {
        let fail = |what: String| Err(Error::Internal(format!("{:?}: {what}", self.params)));
        match self.params {
            ConstructionParams::F { b, n, k, a } => {
                let want = [(Region::A, k + a), (Region::B, n - k - a), (Region::C, a), (Region::D, b - a)];
                if let Some(&(r, len)) = want.iter().find(|&&(r, len)| self.region_size(r) != len) {
                    return fail(format!("region {r} has {} vertices, expected {len}", self.region_size(r)));
                }
                if !self.graph.is_connected() {
                    return fail("not connected".into());
                }
                if n >= 2 * k + 2 * a && self.graph.min_degree()? != a {
                    return fail(format!("minimum degree {} != a", self.graph.min_degree()?));
                }
                let circ = structure::circumference_within(&self.graph, max_order)?;
                if circ + 2 + 2 * k > 2 * n {
                    return fail(format!("circumference {circ} exceeds 2n - 2k - 2"));
                }
                let bg = self.bipartite().expect("F is bipartite");
                let matching = structure::max_matching(&bg);
                if matching != n - k {
                    return fail(format!("maximum matching {matching} != n - k"));
                }
                let lp = structure::longest_path_order_within(&self.graph, max_order, usize::MAX)?;
                if lp > 2 * (n - k) + 1 {
                    return fail(format!("longest path on {lp} vertices exceeds 2(n - k) + 1"));
                }
                for s in 1..=2 {
                    for t in 1..=2 {
                        let got = count_kst(&self.graph, s, t)?;
                        let want = eval_f_both(b, n, n - k, a, s, t)?;
                        if got != want {
                            return fail(format!("N(K_{s},{t}) = {got}, formula gives {want}"));
                        }
                    }
                }
            }
            ConstructionParams::H { n, k, a } => {
                let want = [(Region::A, a), (Region::B, n - k + a), (Region::C, k - 2 * a)];
                if let Some(&(r, len)) = want.iter().find(|&&(r, len)| self.region_size(r) != len) {
                    return fail(format!("region {r} has {} vertices, expected {len}", self.region_size(r)));
                }
                let circ = structure::circumference_within(&self.graph, max_order)?;
                if circ >= k {
                    return fail(format!("circumference {circ} is not below k"));
                }
                if a >= 2 && !self.graph.is_biconnected() {
                    return fail("not 2-connected".into());
                }
                for s in 1..=2 {
                    for t in 1..=2 {
                        let got = count_kst(&self.graph, s, t)?;
                        let want = eval_g(n, k, a, s, t)?;
                        if got != want {
                            return fail(format!("N(K_{s},{t}) = {got}, formula gives {want}"));
                        }
                    }
                }
            }
        }
        Ok(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::CopyCount;
    use crate::structure::{circumference, DEFAULT_MAX_ORDER};

    #[test]
    fn f_6_6_1_2() {
        let f = build_f(6, 6, 1, 2).unwrap().audited(DEFAULT_MAX_ORDER).unwrap();
        assert_eq!(f.graph.order(), 12);
        assert_eq!(f.graph.size(), 24);
        assert_eq!(f.graph.min_degree().unwrap(), 2);
        assert!(circumference(&f.graph).unwrap() <= 8);
        assert_eq!(f.region_size(Region::A), 3);
        assert_eq!(f.region_size(Region::D), 4);
    }

    #[test]
    fn f_5_4_1_1_edges() {
        let f = build_f(5, 4, 1, 1).unwrap().audited(DEFAULT_MAX_ORDER).unwrap();
        assert_eq!(count_kst(&f.graph, 1, 1).unwrap(), CopyCount::from(12u64));
    }

    #[test]
    fn f_domain() {
        // B would be empty.
        assert!(build_f(6, 6, 4, 2).is_err());
        assert!(build_f(6, 6, 1, 0).is_err());
        assert!(build_f(5, 6, 1, 1).is_err());
    }

    #[test]
    fn h_examples() {
        let h = build_h(8, 6, 2).unwrap().audited(DEFAULT_MAX_ORDER).unwrap();
        assert_eq!(count_kst(&h.graph, 2, 2).unwrap(), CopyCount::from(17u64));

        let h = build_h(10, 5, 2).unwrap().audited(DEFAULT_MAX_ORDER).unwrap();
        assert_eq!(h.graph.size(), 17);
        assert_eq!(circumference(&h.graph).unwrap(), 4);

        let h1 = build_h(9, 6, 1).unwrap().audited(DEFAULT_MAX_ORDER).unwrap();
        assert!(!h1.graph.is_biconnected());
        assert!(h1.graph.is_connected());
    }

    #[test]
    fn h_domain_message_names_constraint() {
        let err = build_h(10, 6, 3).unwrap_err().to_string();
        assert!(err.contains("k/2 > a >= 1"), "{err}");
        assert!(build_h(4, 5, 1).is_err());
    }

    #[test]
    fn layout_follows_regions() {
        let f = build_f(5, 4, 1, 1).unwrap();
        let regions: String = f.region_of.iter().map(|r| r.to_string()).collect();
        assert_eq!(regions, "AABBCDDDD");
        let h = build_h(7, 5, 2).unwrap();
        let regions: String = h.region_of.iter().map(|r| r.to_string()).collect();
        assert_eq!(regions, "AABBBBC");
    }
}
