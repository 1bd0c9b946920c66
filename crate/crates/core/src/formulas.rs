//! Closed-form bound functions and theorem thresholds.
//!
//! `f_{s,t}(b, n, m, a)` is the `K_{s,t}` count of the bipartite extremal
//! family (one orientation), where the `m` slot is `n - k` for the cycle
//! theorem and `n - k - 1` for the path and matching theorems:
//!
//! ```text
//! f = C(b,s) C(m-a,t) + C(a,s) C(n,t) - C(a,s) C(m-a,t)
//! ```
//!
//! `g_{s,t}(n, k, a)` is the `K_{s,t}` count of the general extremal family.
//! Every threshold is `max(branch(r), branch(h))`; the strict comparison
//! `N > threshold` is left to the caller.

use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::counting::{binom, CopyCount};
use crate::error::{domain, Error, Result};

/// Parameter tuple shared by every theorem statement.
///
/// `b` is the Y-part size (unused, 0, for the general-graph theorems), `n` the
/// X-part size or total order, `k` the shortfall, `r` the minimum-degree floor
/// and `(s, t)` the pattern sides.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BoundParams {
    pub b: usize,
    pub n: usize,
    pub k: i64,
    pub r: usize,
    pub s: usize,
    pub t: usize,
}

impl BoundParams {
    pub fn bipartite(b: usize, n: usize, k: i64, r: usize, s: usize, t: usize) -> Self {
        BoundParams { b, n, k, r, s, t }
    }

    pub fn general(n: usize, k: i64, r: usize, s: usize, t: usize) -> Self {
        BoundParams { b: 0, n, k, r, s, t }
    }

    fn k_nonneg(&self) -> Result<usize> {
        usize::try_from(self.k).map_err(|_| domain(format!("k must be >= 0, got k = {}", self.k)))
    }
}

impl fmt::Display for BoundParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "b={} n={} k={} r={} s={} t={}",
            self.b, self.n, self.k, self.r, self.s, self.t
        )
    }
}

fn check_sides(s: usize, t: usize) -> Result<()> {
    if s < 1 || t < 1 {
        return Err(domain(format!("need s, t >= 1, got s = {s}, t = {t}")));
    }
    Ok(())
}

/// `f_{s,t}(b, n, m, a)`.
pub fn eval_f(b: usize, n: usize, m: usize, a: usize, s: usize, t: usize) -> Result<CopyCount> {
    check_sides(s, t)?;
    if n < 1 || b < n {
        return Err(domain(format!("f needs b >= n >= 1, got b = {b}, n = {n}")));
    }
    if a > m || m > n {
        return Err(domain(format!("f needs 0 <= a <= m <= n, got a = {a}, m = {m}, n = {n}")));
    }
    let (b, n, m, a, s, t) = (b as u64, n as u64, m as u64, a as u64, s as u64, t as u64);
    let tail = binom(m - a, t);
    // C(n,t) >= C(m-a,t) because n >= m - a, so the difference is non-negative.
    let value = binom(b, s) * &tail + binom(a, s) * (binom(n, t) - tail);
    Ok(CopyCount::from(value))
}

/// `f_{s,t}` for `s = t`, `f_{s,t} + f_{t,s}` otherwise: the full count of the
/// bipartite construction.
pub fn eval_f_both(b: usize, n: usize, m: usize, a: usize, s: usize, t: usize) -> Result<CopyCount> {
    let one = eval_f(b, n, m, a, s, t)?;
    if s == t {
        Ok(one)
    } else {
        Ok(one + eval_f(b, n, m, a, t, s)?)
    }
}

/// `g_{s,t}(n, k, a)`.
///
/// Accepts `n >= k >= 3` and `1 <= a < k/2`; `k = 3` arises through the
/// path theorem's `g(n, k - 1, ·)` at `k = 4`.
pub fn eval_g(n: usize, k: usize, a: usize, s: usize, t: usize) -> Result<CopyCount> {
    check_sides(s, t)?;
    if k < 3 || n < k {
        return Err(domain(format!("g needs n >= k >= 3, got n = {n}, k = {k}")));
    }
    if a < 1 || 2 * a >= k {
        return Err(domain(format!("g needs k/2 > a >= 1, got a = {a}, k = {k}")));
    }
    let (n, k, a, s, t) = (n as u64, k as u64, a as u64, s as u64, t as u64);
    let rows = n - k + a;
    // Copies meeting B, grouped by their first B vertex b_i.
    let through_b = |x: u64, y: u64| -> BigUint {
        let lead = binom(a, x);
        if lead.is_zero() {
            return lead;
        }
        // n - x - i >= k - a - x >= 1 whenever C(a, x) != 0.
        (1..=rows).map(|i| binom(n - x - i, y - 1)).sum::<BigUint>() * lead
    };
    if s == t {
        let twice = through_b(s, s) * 2u32 + binom(k - a, 2 * s) * binom(2 * s, s);
        CopyCount::from(twice)
            .checked_half()
            .ok_or_else(|| Error::Internal(format!("g_{{{s},{s}}}({n},{k},{a}): odd total before halving")))
    } else {
        let value = through_b(s, t) + through_b(t, s) + binom(k - a, s + t) * binom(s + t, s);
        Ok(CopyCount::from(value))
    }
}

/// The five theorem statements with a `K_{s,t}` threshold.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Theorem {
    /// Connected bipartite, cycle of length at least `2n - 2k`.
    CycleBipartite,
    /// Connected bipartite, path on `2n - 2k` vertices.
    PathBipartite,
    /// Connected bipartite, matching with `n - k` edges.
    MatchingBipartite,
    /// 2-connected, cycle of length at least `k`.
    CycleGeneral,
    /// Connected, path on `k` vertices.
    PathGeneral,
}

impl Theorem {
    pub const ALL: [Theorem; 5] = [
        Theorem::CycleBipartite,
        Theorem::PathBipartite,
        Theorem::MatchingBipartite,
        Theorem::CycleGeneral,
        Theorem::PathGeneral,
    ];

    /// Short claim id used in reports and on the command line.
    pub fn id(self) -> &'static str {
        match self {
            Theorem::CycleBipartite => "CB",
            Theorem::PathBipartite => "PB",
            Theorem::MatchingBipartite => "MB",
            Theorem::CycleGeneral => "C",
            Theorem::PathGeneral => "P",
        }
    }

    pub fn is_bipartite(self) -> bool {
        matches!(
            self,
            Theorem::CycleBipartite | Theorem::PathBipartite | Theorem::MatchingBipartite
        )
    }

    /// The `m` slot of `f` (bipartite theorems only).
    fn m_slot(self, p: &BoundParams) -> Result<usize> {
        let k = p.k_nonneg()?;
        let m = match self {
            Theorem::CycleBipartite => p.n.checked_sub(k),
            Theorem::PathBipartite | Theorem::MatchingBipartite => p.n.checked_sub(k + 1),
            _ => unreachable!("m slot only exists for bipartite theorems"),
        };
        m.ok_or_else(|| domain(format!("k = {} too large for n = {}", p.k, p.n)))
    }

    /// The `g` slot `k` (`k` for cycles, `k - 1` for paths).
    fn g_slot(self, p: &BoundParams) -> Result<usize> {
        let k = p.k_nonneg()?;
        match self {
            Theorem::CycleGeneral => Ok(k),
            Theorem::PathGeneral => k.checked_sub(1).ok_or_else(|| domain("path theorem needs k >= 1")),
            _ => unreachable!("g slot only exists for general theorems"),
        }
    }

    /// The midpoint `h`.
    pub fn midpoint(self, p: &BoundParams) -> Result<usize> {
        let k = p.k_nonneg()?;
        let h = match self {
            Theorem::CycleBipartite => p.n.checked_sub(k).map(|m| m / 2),
            Theorem::PathBipartite | Theorem::MatchingBipartite => p.n.checked_sub(k + 1).map(|m| m / 2),
            Theorem::CycleGeneral => k.checked_sub(1).map(|m| m / 2),
            Theorem::PathGeneral => k.checked_sub(2).map(|m| m / 2),
        };
        h.ok_or_else(|| domain(format!("midpoint undefined for {p}")))
    }

    /// Checks the theorem's parameter domain.
    pub fn validate(self, p: &BoundParams) -> Result<()> {
        check_sides(p.s, p.t)?;
        let k = p.k_nonneg()?;
        match self {
            Theorem::CycleBipartite | Theorem::PathBipartite | Theorem::MatchingBipartite => {
                if p.r < 1 {
                    return Err(domain(format!("need r >= 1, got r = {}", p.r)));
                }
                if p.b < p.n {
                    return Err(domain(format!("need b >= n, got b = {}, n = {}", p.b, p.n)));
                }
                if p.n < 2 * k + 2 * p.r {
                    return Err(domain(format!(
                        "need n >= 2k + 2r, got n = {}, k = {k}, r = {}",
                        p.n, p.r
                    )));
                }
            }
            Theorem::CycleGeneral => {
                if !(p.n >= k && k >= 5) {
                    return Err(domain(format!("need n >= k >= 5, got n = {}, k = {k}", p.n)));
                }
                if p.r < 2 {
                    return Err(domain(format!("need r >= 2, got r = {}", p.r)));
                }
            }
            Theorem::PathGeneral => {
                if !(p.n >= k && k >= 4) {
                    return Err(domain(format!("need n >= k >= 4, got n = {}, k = {k}", p.n)));
                }
                if p.r < 1 {
                    return Err(domain(format!("need r >= 1, got r = {}", p.r)));
                }
            }
        }
        let h = self.midpoint(p)?;
        if p.r > h {
            return Err(domain(format!("need r <= h, got r = {}, h = {h}", p.r)));
        }
        Ok(())
    }

    /// The count of the extremal construction at `a`; the threshold is the
    /// larger of the branch values at `a = r` and `a = h`.
    pub fn branch_value(self, p: &BoundParams, a: usize) -> Result<CopyCount> {
        if self.is_bipartite() {
            eval_f_both(p.b, p.n, self.m_slot(p)?, a, p.s, p.t)
        } else {
            eval_g(p.n, self.g_slot(p)?, a, p.s, p.t)
        }
    }

    pub fn threshold(self, p: &BoundParams) -> Result<CopyCount> {
        self.validate(p)?;
        let h = self.midpoint(p)?;
        let at_r = self.branch_value(p, p.r)?;
        let at_h = self.branch_value(p, h)?;
        Ok(at_r.max(at_h))
    }

    /// Length of the forbidden structure: the required cycle length, path
    /// order, or matching size.
    pub fn target(self, p: &BoundParams) -> Result<usize> {
        let k = p.k_nonneg()?;
        let t = match self {
            Theorem::CycleBipartite | Theorem::PathBipartite => (2 * p.n).checked_sub(2 * k),
            Theorem::MatchingBipartite => p.n.checked_sub(k),
            Theorem::CycleGeneral | Theorem::PathGeneral => Some(k),
        };
        t.ok_or_else(|| domain(format!("k too large in {p}")))
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

pub fn threshold_cycle_bipartite(p: &BoundParams) -> Result<CopyCount> {
    Theorem::CycleBipartite.threshold(p)
}

pub fn threshold_path_bipartite(p: &BoundParams) -> Result<CopyCount> {
    Theorem::PathBipartite.threshold(p)
}

pub fn threshold_matching_bipartite(p: &BoundParams) -> Result<CopyCount> {
    Theorem::MatchingBipartite.threshold(p)
}

pub fn threshold_cycle_general(p: &BoundParams) -> Result<CopyCount> {
    Theorem::CycleGeneral.threshold(p)
}

pub fn threshold_path_general(p: &BoundParams) -> Result<CopyCount> {
    Theorem::PathGeneral.threshold(p)
}

/// True iff `fun(a-1) + fun(a+1) >= 2 fun(a)` for every `lo < a < hi`.
/// An empty or single-point range is vacuously convex.
pub fn check_discrete_convexity<F>(fun: F, lo: usize, hi: usize) -> bool
where
    F: Fn(usize) -> CopyCount,
{
    if hi < lo + 2 {
        return true;
    }
    let values: Vec<CopyCount> = (lo..=hi).map(fun).collect();
    values.windows(3).all(|w| &w[0] + &w[2] >= &w[1] + &w[1])
}

/// Closed forms of the classical results the theorems generalize.
pub mod classical {
    use super::*;

    /// Edge bound of the balanced bipartite long-cycle conjecture:
    /// `n(n - k - r) + r(k + r)`.
    pub fn adamus_edge_bound(n: usize, k: usize, r: usize) -> Result<CopyCount> {
        let m = n
            .checked_sub(k + r)
            .ok_or_else(|| domain(format!("need n >= k + r, got n = {n}, k = {k}, r = {r}")))?;
        Ok(CopyCount::from((n * m + r * (k + r)) as u64))
    }

    /// Balanced bipartite Hamiltonicity bound `n(n - r) + r^2`.
    pub fn moon_moser_bound(n: usize, r: usize) -> Result<CopyCount> {
        adamus_edge_bound(n, 0, r)
    }

    /// Hamiltonicity bound branch `C(n - r, 2) + r^2`.
    pub fn erdos_branch(n: usize, r: usize) -> Result<CopyCount> {
        let m = n
            .checked_sub(r)
            .ok_or_else(|| domain(format!("need n >= r, got n = {n}, r = {r}")))?;
        Ok(CopyCount::from(binom(m as u64, 2) + BigUint::from(r * r)))
    }

    /// Bipartite long-cycle extremal number `(n - k - 1) b + k + 1`.
    pub fn long_cycle_bipartite_extremal(b: usize, n: usize, k: usize) -> Result<CopyCount> {
        if !(b >= n && n >= k && 2 * (n - k) >= n + 2) {
            return Err(domain(format!(
                "need b >= n >= n - k >= n/2 + 1, got b = {b}, n = {n}, k = {k}"
            )));
        }
        Ok(CopyCount::from(((n - k - 1) * b + k + 1) as u64))
    }

    /// Generalized Turán number of the matching `M_{n-k}` in `n x n` bipartite
    /// graphs.
    pub fn matching_extremal(n: usize, k: usize, s: usize, t: usize) -> Result<CopyCount> {
        check_sides(s, t)?;
        let m = n
            .checked_sub(k + 1)
            .ok_or_else(|| domain(format!("need n - k >= 1, got n = {n}, k = {k}")))?;
        let (n, m, s, t) = (n as u64, m as u64, s as u64, t as u64);
        let value = if s == t {
            binom(m, s) * binom(n, s)
        } else {
            binom(m, s) * binom(n, t) + binom(m, t) * binom(n, s)
        };
        Ok(CopyCount::from(value))
    }
}

#[cfg(test)]
mod tests {
    use super::classical::*;
    use super::*;

    fn c(v: u64) -> CopyCount {
        CopyCount::from(v)
    }

    #[test]
    fn f_examples() {
        assert_eq!(eval_f(6, 6, 5, 2, 1, 1).unwrap(), c(24));
        assert_eq!(eval_f(5, 4, 3, 1, 2, 1).unwrap(), c(20));
        assert_eq!(eval_f(5, 4, 3, 1, 1, 1).unwrap(), c(12));
        // a = 0 leaves only the first term.
        assert_eq!(eval_f(7, 5, 4, 0, 2, 3).unwrap(), c(21 * 4));
        assert_eq!(eval_f(4, 3, 0, 0, 1, 1).unwrap(), c(0));
    }

    #[test]
    fn f_domain_errors() {
        assert!(eval_f(4, 5, 3, 1, 1, 1).is_err());
        assert!(eval_f(5, 4, 3, 4, 1, 1).is_err());
        assert!(eval_f(5, 4, 5, 1, 1, 1).is_err());
        assert!(eval_f(5, 4, 3, 1, 0, 1).is_err());
    }

    #[test]
    fn g_examples() {
        assert_eq!(eval_g(10, 5, 2, 1, 1).unwrap(), c(17));
        assert_eq!(eval_g(8, 6, 2, 2, 2).unwrap(), c(17));
        assert_eq!(eval_g(6, 5, 2, 1, 2).unwrap(), c(24));
        assert!(eval_g(10, 5, 3, 1, 1).is_err());
        assert!(eval_g(10, 5, 0, 1, 1).is_err());
        assert!(eval_g(4, 5, 1, 1, 1).is_err());
    }

    #[test]
    fn g_collapses_for_edges() {
        for n in 3usize..=14 {
            for k in 3..=n {
                for a in 1..k.div_ceil(2) {
                    let expected = a * (n - k + a) + (k - a) * (k - a - 1) / 2;
                    assert_eq!(eval_g(n, k, a, 1, 1).unwrap(), c(expected as u64), "n={n} k={k} a={a}");
                }
            }
        }
    }

    #[test]
    fn thresholds() {
        let p = BoundParams::bipartite(6, 6, 1, 2, 1, 1);
        assert_eq!(threshold_cycle_bipartite(&p).unwrap(), c(24));
        let p = BoundParams::bipartite(8, 8, 1, 1, 1, 1);
        assert_eq!(Theorem::CycleBipartite.midpoint(&p).unwrap(), 3);
        assert_eq!(threshold_cycle_bipartite(&p).unwrap(), c(50));
        assert_eq!(Theorem::CycleBipartite.branch_value(&p, 3).unwrap(), c(44));

        let p = BoundParams::bipartite(6, 6, 1, 1, 1, 1);
        assert_eq!(threshold_path_bipartite(&p).unwrap(), c(21));
        assert_eq!(threshold_matching_bipartite(&p).unwrap(), c(21));

        assert_eq!(threshold_cycle_general(&BoundParams::general(10, 5, 2, 1, 1)).unwrap(), c(17));
        assert_eq!(threshold_cycle_general(&BoundParams::general(10, 7, 2, 1, 1)).unwrap(), c(24));
        assert_eq!(threshold_path_general(&BoundParams::general(6, 4, 1, 1, 1)).unwrap(), c(5));
        assert_eq!(threshold_path_general(&BoundParams::general(6, 4, 1, 1, 2)).unwrap(), c(10));
    }

    #[test]
    fn threshold_domain_errors() {
        // negative k
        assert!(threshold_cycle_bipartite(&BoundParams::bipartite(6, 6, -1, 1, 1, 1)).is_err());
        // n < 2k + 2r
        assert!(threshold_cycle_bipartite(&BoundParams::bipartite(6, 6, 2, 2, 1, 1)).is_err());
        // b < n
        assert!(threshold_cycle_bipartite(&BoundParams::bipartite(5, 6, 1, 1, 1, 1)).is_err());
        // r > h for the path theorem at k = 0, n = 2
        assert!(threshold_path_bipartite(&BoundParams::bipartite(2, 2, 0, 1, 1, 1)).is_err());
        // r = 1 is below the 2-connected theorem's floor
        assert!(threshold_cycle_general(&BoundParams::general(10, 7, 1, 1, 1)).is_err());
        assert!(threshold_cycle_general(&BoundParams::general(10, 4, 2, 1, 1)).is_err());
        assert!(threshold_path_general(&BoundParams::general(10, 5, 2, 1, 1)).is_err());
    }

    #[test]
    fn r_equal_h_branches_coincide() {
        let p = BoundParams::bipartite(6, 6, 1, 2, 2, 1);
        let h = Theorem::CycleBipartite.midpoint(&p).unwrap();
        assert_eq!(h, p.r);
        assert_eq!(
            Theorem::CycleBipartite.branch_value(&p, p.r).unwrap(),
            Theorem::CycleBipartite.branch_value(&p, h).unwrap()
        );
    }

    #[test]
    fn erdos_shape_of_hamiltonian_branch() {
        // k = n, s = t = 1, a = r: g = r^2 + C(n - r, 2).
        for n in 5..=24 {
            let r = 2;
            assert_eq!(eval_g(n, n, r, 1, 1).unwrap(), erdos_branch(n, r).unwrap());
        }
    }

    #[test]
    fn convexity_helper() {
        assert!(check_discrete_convexity(|_| c(7), 0, 10));
        assert!(check_discrete_convexity(|a| c((a * a) as u64), 0, 10));
        assert!(!check_discrete_convexity(|a| c(if a == 5 { 100 } else { 0 }), 0, 10));
        assert!(check_discrete_convexity(|a| c(a as u64), 3, 3));
    }

    #[test]
    fn classical_values() {
        assert_eq!(moon_moser_bound(4, 1).unwrap(), c(13));
        assert_eq!(adamus_edge_bound(6, 1, 2).unwrap(), c(24));
        assert_eq!(long_cycle_bipartite_extremal(4, 4, 1).unwrap(), c(10));
        assert!(long_cycle_bipartite_extremal(4, 4, 2).is_err());
        assert_eq!(matching_extremal(4, 1, 1, 1).unwrap(), c(8));
        assert_eq!(matching_extremal(4, 1, 2, 2).unwrap(), c(6));
    }
}
