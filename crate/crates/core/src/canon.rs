//! Brute-force canonical labelling for very small graphs.
//!
//! The canonical form is the relabelling whose upper-triangle bitstring (in
//! graph6 order, first bit most significant) is smallest. Used only to merge
//! isomorphic witnesses in reports.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const CANON_MAX_ORDER: usize = 8;

fn code(g: &Graph, perm: &[usize]) -> u64 {
    // perm[new] = old
    let n = perm.len();
    let mut out = 0u64;
    for j in 1..n {
        let row = g.row64(perm[j]);
        for &pi in &perm[..j] {
            out = out << 1 | (row >> pi & 1);
        }
    }
    out
}

/// The canonical relabelling of `g` (order at most [`CANON_MAX_ORDER`]).
pub fn canonical_form(g: &Graph) -> Result<Graph> {
    let n = g.order();
    if n > CANON_MAX_ORDER {
        return Err(Error::Scale(format!(
            "canonical form limited to order {CANON_MAX_ORDER}, graph has order {n}"
        )));
    }
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = (code(g, &perm), perm.clone());
    // Heap's algorithm, iterative.
    let mut c = vec![0usize; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            let x = code(g, &perm);
            if x < best.0 {
                best = (x, perm.clone());
            }
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    let order = best.1;
    let mut inverse = vec![0; n];
    for (new, &old) in order.iter().enumerate() {
        inverse[old] = new;
    }
    Ok(g.permuted(&inverse))
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    if g.order() != h.order() || g.size() != h.size() {
        return Ok(false);
    }
    Ok(canonical_form(g)? == canonical_form(h)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relabellings_agree() {
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (2, 3), (0, 4), (4, 5), (1, 5)]).unwrap();
        let c = canonical_form(&g).unwrap();
        for perm in [[5, 4, 3, 2, 1, 0], [1, 0, 3, 2, 5, 4], [2, 3, 4, 5, 0, 1]] {
            assert_eq!(canonical_form(&g.permuted(&perm)).unwrap(), c);
        }
        assert_eq!(c.size(), g.size());
    }

    #[test]
    fn distinguishes_non_isomorphic() {
        assert!(!is_isomorphic(&Graph::cycle(6), &Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap()).unwrap());
        assert!(is_isomorphic(&Graph::path(5), &Graph::from_edges(5, [(3, 0), (0, 4), (4, 1), (1, 2)]).unwrap()).unwrap());
    }

    #[test]
    fn canonical_code_is_minimal() {
        // The star is canonically centred on the last vertex.
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let c = canonical_form(&star).unwrap();
        assert_eq!(c.degree(3), 3);
    }
}
