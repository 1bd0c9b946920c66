mod common;

use exturan::io::{read_graph6, read_sidecar, write_construction};
use exturan::structure::{circumference, longest_path_order, max_matching, DEFAULT_MAX_ORDER};
use exturan::{build_f, build_h, count_kst, BoundParams, Region, Theorem};

#[test]
fn f_edges_follow_regions() {
    for (b, n, k, a) in [(6, 6, 1, 2), (7, 5, 0, 1), (9, 8, 2, 3)] {
        let f = build_f(b, n, k, a).unwrap();
        for (u, v) in f.graph.edges() {
            let pair = (f.region_of[u], f.region_of[v]);
            assert!(
                matches!(pair, (Region::A, Region::C) | (Region::B, Region::C) | (Region::B, Region::D)),
                "{pair:?}"
            );
        }
        assert_eq!(f.graph.size(), (k + a) * a + (n - k - a) * b);
        assert!(f.graph.is_connected());
    }
}

#[test]
fn h_edges_follow_regions() {
    for (n, k, a) in [(10, 5, 2), (8, 6, 2), (9, 7, 3), (6, 4, 1)] {
        let h = build_h(n, k, a).unwrap();
        let expected = a * (n - k + a) + (k - a) * (k - a - 1) / 2;
        assert_eq!(h.graph.size(), expected);
        for (u, v) in h.graph.edges() {
            assert_ne!((h.region_of[u], h.region_of[v]), (Region::B, Region::B));
            assert_ne!((h.region_of[u], h.region_of[v]), (Region::B, Region::C));
        }
    }
}

/// At a in {r, h} the constructions attain the threshold exactly and miss
/// the theorem's conclusion.
#[test]
fn sharpness_pairs() {
    let mut checked = 0;
    for b in 2..=7usize {
        for n in 2..=b {
            for k in 0..n {
                for r in 1..=n {
                    for (s, t) in [(1, 1), (1, 2), (2, 2)] {
                        let p = BoundParams::bipartite(b, n, k as i64, r, s, t);
                        for theorem in [Theorem::CycleBipartite, Theorem::PathBipartite] {
                            let Ok(threshold) = theorem.threshold(&p) else { continue };
                            let h = theorem.midpoint(&p).unwrap();
                            // m = n - k for cycles, n - k - 1 for paths and matchings.
                            let kk = if theorem == Theorem::CycleBipartite { k } else { k + 1 };
                            let best = [p.r, h]
                                .into_iter()
                                .map(|a| build_f(b, n, kk, a).unwrap())
                                .max_by_key(|f| count_kst(&f.graph, s, t).unwrap())
                                .unwrap();
                            assert_eq!(count_kst(&best.graph, s, t).unwrap(), threshold, "{theorem} {p}");
                            let target = 2 * (n - k);
                            if theorem == Theorem::CycleBipartite {
                                assert!(circumference(&best.graph).unwrap() < target);
                            } else {
                                assert!(longest_path_order(&best.graph).unwrap() < target);
                                assert!(max_matching(&best.bipartite().unwrap()) < n - k);
                            }
                            checked += 1;
                        }
                    }
                }
            }
        }
    }
    for n in 4..=10usize {
        for k in 4..=n {
            for r in 1..=k / 2 {
                for (s, t) in [(1, 1), (1, 2), (2, 2), (2, 3)] {
                    for theorem in [Theorem::CycleGeneral, Theorem::PathGeneral] {
                        let p = BoundParams::general(n, k as i64, r, s, t);
                        let Ok(threshold) = theorem.threshold(&p) else { continue };
                        let h = theorem.midpoint(&p).unwrap();
                        let kk = if theorem == Theorem::CycleGeneral { k } else { k - 1 };
                        let best = [p.r, h]
                            .into_iter()
                            .map(|a| build_h(n, kk, a).unwrap())
                            .max_by_key(|c| count_kst(&c.graph, s, t).unwrap())
                            .unwrap();
                        assert_eq!(count_kst(&best.graph, s, t).unwrap(), threshold, "{theorem} {p}");
                        if theorem == Theorem::CycleGeneral {
                            assert!(circumference(&best.graph).unwrap() < k);
                            if r >= 2 {
                                assert!(best.graph.is_biconnected());
                            }
                        } else {
                            assert!(longest_path_order(&best.graph).unwrap() < k);
                        }
                        checked += 1;
                    }
                }
            }
        }
    }
    assert!(checked > 300, "{checked}");
}

#[test]
fn audits_pass_on_small_grid() {
    for b in 1..=6usize {
        for n in 1..=b {
            for k in 0..n {
                for a in 1..n - k {
                    build_f(b, n, k, a).unwrap().audited(DEFAULT_MAX_ORDER).unwrap();
                }
            }
        }
    }
    for n in 3..=10usize {
        for k in 3..=n {
            for a in 1..k.div_ceil(2) {
                build_h(n, k, a).unwrap().audited(DEFAULT_MAX_ORDER).unwrap();
            }
        }
    }
}

#[test]
fn export_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("h.g6");
    let h = build_h(10, 5, 2).unwrap();
    let side = write_construction(&path, &h).unwrap();
    assert!(side.ends_with("h.g6.json"));
    assert_eq!(read_graph6(&path).unwrap(), vec![h.graph.clone()]);
    let meta = read_sidecar(&path).unwrap().unwrap();
    assert_eq!(meta.region_of.unwrap(), h.region_of);
    assert!(meta.bipartition.is_none());
}
