//! Exact counting of `K_{s,t}` copies and exact binomials.
//!
//! A copy of `K_{s,t}` is an unordered pair `{S, T}` of disjoint vertex sets,
//! `|S| = s`, `|T| = t`, with every `S`-`T` pair adjacent. Edges inside `S`
//! or `T` are allowed and ignored.
//!
//! The fast counter walks the `s`-subsets `S` in lexicographic order while
//! intersecting neighbourhood rows, so each leaf knows the common
//! neighbourhood `W(S)` (automatically disjoint from `S`). Leaves are binned
//! by `|W(S)|` and the histogram is folded against `C(j, t)` at the end.
//! When `s = t` every copy is seen from both sides and the total is halved.

use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::bits::{self, Ones};
use crate::error::{domain, Error, Result};
use crate::graph::Graph;

/// Exact non-negative count.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CopyCount(BigUint);

impl CopyCount {
    pub fn zero() -> Self {
        CopyCount(BigUint::zero())
    }

    pub fn value(&self) -> &BigUint {
        &self.0
    }

    pub fn into_inner(self) -> BigUint {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn to_u128(&self) -> Option<u128> {
        self.0.to_u128()
    }

    /// Exact halving; errors if the value is odd.
    pub fn checked_half(&self) -> Option<CopyCount> {
        if self.0.bit(0) {
            None
        } else {
            Some(CopyCount(&self.0 >> 1u32))
        }
    }

    /// `self - other`, or `None` if that would be negative.
    pub fn checked_sub(&self, other: &CopyCount) -> Option<CopyCount> {
        (self.0 >= other.0).then(|| CopyCount(&self.0 - &other.0))
    }
}

impl From<BigUint> for CopyCount {
    fn from(v: BigUint) -> Self {
        CopyCount(v)
    }
}

impl From<u64> for CopyCount {
    fn from(v: u64) -> Self {
        CopyCount(BigUint::from(v))
    }
}

impl From<u128> for CopyCount {
    fn from(v: u128) -> Self {
        CopyCount(BigUint::from(v))
    }
}

impl From<usize> for CopyCount {
    fn from(v: usize) -> Self {
        CopyCount(BigUint::from(v))
    }
}

impl Add for CopyCount {
    type Output = CopyCount;
    fn add(self, rhs: CopyCount) -> CopyCount {
        CopyCount(self.0 + rhs.0)
    }
}

impl<'a> Add<&'a CopyCount> for &'a CopyCount {
    type Output = CopyCount;
    fn add(self, rhs: &CopyCount) -> CopyCount {
        CopyCount(&self.0 + &rhs.0)
    }
}

impl Mul for CopyCount {
    type Output = CopyCount;
    fn mul(self, rhs: CopyCount) -> CopyCount {
        CopyCount(self.0 * rhs.0)
    }
}

impl<'a> Mul<&'a CopyCount> for &'a CopyCount {
    type Output = CopyCount;
    fn mul(self, rhs: &CopyCount) -> CopyCount {
        CopyCount(&self.0 * &rhs.0)
    }
}

impl fmt::Display for CopyCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl FromStr for CopyCount {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        BigUint::from_str(s)
            .map(CopyCount)
            .map_err(|e| domain(format!("not a non-negative integer: {s:?} ({e})")))
    }
}

// Counts travel as decimal strings so no consumer ever sees a float.
impl Serialize for CopyCount {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(&self.0)
    }
}

impl<'de> Deserialize<'de> for CopyCount {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Exact `C(n, k)`; zero when `k < 0` or `k > n`. Errors when `n < 0`.
pub fn binomial(n: i64, k: i64) -> Result<CopyCount> {
    if n < 0 {
        return Err(domain(format!("binomial needs n >= 0, got n = {n}")));
    }
    if k < 0 || k > n {
        return Ok(CopyCount::zero());
    }
    Ok(CopyCount(binom(n as u64, k as u64)))
}

/// `C(n, k)` for unsigned arguments, zero when `k > n`.
pub(crate) fn binom(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::from(1u32);
    // acc = C(n - k + i, i) after step i, always an integer.
    for i in 1..=k {
        acc *= n - k + i;
        acc /= i;
    }
    acc
}

/// `C(n, k)` in `u128`, `None` on overflow.
pub(crate) fn binom_u128(n: u64, k: u64) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 1..=k as u128 {
        // acc * (n-k+i) is divisible by i; divide the gcd out first to delay overflow.
        let num = (n - k) as u128 + i;
        let g = gcd(acc, i);
        acc = (acc / g).checked_mul(num / (i / g))?;
    }
    Some(acc)
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn check_sides(s: usize, t: usize) -> Result<()> {
    if s < 1 || t < 1 {
        return Err(domain(format!("K_{{s,t}} needs s, t >= 1, got s = {s}, t = {t}")));
    }
    Ok(())
}

/// Histogram `h[j]` = number of `s`-subsets whose common neighbourhood has
/// exactly `j >= t` vertices.
fn common_neighbourhood_histogram(g: &Graph, s: usize, t: usize) -> Vec<u128> {
    let n = g.order();
    let mut hist = vec![0u128; n + 1];
    if s > n {
        return hist;
    }
    let eligible: Vec<usize> = (0..n).filter(|&v| g.degree(v) >= t).collect();
    if eligible.len() < s {
        return hist;
    }
    if g.is_small() {
        let rows = g.rows64();
        let mut cand = 0u64;
        for &v in &eligible {
            cand |= 1 << v;
        }
        walk_small(rows, cand, s, t, bits::low_mask(n), &mut hist);
    } else {
        let mut all = vec![0u64; g.words()];
        for v in 0..n {
            bits::set(&mut all, v);
        }
        let mut scratch = vec![vec![0u64; g.words()]; s];
        walk_wide(g, &eligible, 0, s, t, &all, &mut scratch, &mut hist);
    }
    hist
}

fn walk_small(rows: &[u64], cand: u64, left: usize, t: usize, common: u64, hist: &mut [u128]) {
    for v in Ones(cand) {
        let w = common & rows[v];
        let size = w.count_ones() as usize;
        if size < t {
            continue;
        }
        if left == 1 {
            hist[size] += 1;
        } else {
            // Only vertices after v, so each subset is visited once.
            let rest = cand & !(u64::MAX >> (63 - v));
            if (rest.count_ones() as usize) < left - 1 {
                break;
            }
            walk_small(rows, rest, left - 1, t, w, hist);
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn walk_wide(
    g: &Graph,
    eligible: &[usize],
    from: usize,
    left: usize,
    t: usize,
    common: &[u64],
    scratch: &mut [Vec<u64>],
    hist: &mut [u128],
) {
    let (buf, deeper) = scratch.split_first_mut().expect("scratch depth");
    for i in from..eligible.len() {
        if eligible.len() - i < left {
            break;
        }
        let v = eligible[i];
        for (dst, (a, b)) in buf.iter_mut().zip(common.iter().zip(g.row(v))) {
            *dst = a & b;
        }
        let size = bits::count(buf);
        if size < t {
            continue;
        }
        if left == 1 {
            hist[size] += 1;
        } else {
            let w = buf.clone();
            walk_wide(g, eligible, i + 1, left - 1, t, &w, deeper, hist);
        }
    }
}

/// Number of copies of `K_{s,t}` in `g`.
pub fn count_kst(g: &Graph, s: usize, t: usize) -> Result<CopyCount> {
    check_sides(s, t)?;
    let hist = common_neighbourhood_histogram(g, s, t);
    let mut total = BigUint::zero();
    for (j, &c) in hist.iter().enumerate() {
        if c != 0 {
            total += binom(j as u64, t as u64) * BigUint::from(c);
        }
    }
    let total = CopyCount(total);
    if s == t {
        total
            .checked_half()
            .ok_or_else(|| Error::Internal(format!("ordered K_{{{s},{s}}} total {total} is odd")))
    } else {
        Ok(total)
    }
}

/// `count_kst` in `u128` for the enumeration kernels. `None` on overflow.
pub(crate) fn count_kst_u128(g: &Graph, s: usize, t: usize) -> Option<u128> {
    if s == 1 && t == 1 {
        return Some(g.size() as u128);
    }
    let hist = common_neighbourhood_histogram(g, s, t);
    let mut total: u128 = 0;
    for (j, &c) in hist.iter().enumerate() {
        if c != 0 {
            total = total.checked_add(binom_u128(j as u64, t as u64)?.checked_mul(c)?)?;
        }
    }
    if s == t {
        debug_assert_eq!(total % 2, 0);
        total /= 2;
    }
    Some(total)
}

/// Largest order accepted by [`count_kst_oracle`].
pub const ORACLE_MAX_ORDER: usize = 12;

/// Reference counter: enumerates every pair of disjoint vertex sets of sizes
/// `s` and `t` and tests every cross pair for adjacency. No neighbourhood
/// shortcuts; it exists only to cross-check [`count_kst`].
pub fn count_kst_oracle(g: &Graph, s: usize, t: usize) -> Result<CopyCount> {
    check_sides(s, t)?;
    let n = g.order();
    if n > ORACLE_MAX_ORDER {
        return Err(Error::Scale(format!(
            "count_kst_oracle supports order <= {ORACLE_MAX_ORDER}, got {n}"
        )));
    }
    let members = |mask: u32| (0..n).filter(move |&v| mask >> v & 1 == 1);
    let mut ordered: u64 = 0;
    for sm in 0u32..1 << n {
        if sm.count_ones() as usize != s {
            continue;
        }
        for tm in 0u32..1 << n {
            if tm.count_ones() as usize != t || sm & tm != 0 {
                continue;
            }
            if members(sm).all(|u| members(tm).all(|v| g.has_edge(u, v))) {
                ordered += 1;
            }
        }
    }
    if s == t {
        ordered /= 2;
    }
    Ok(CopyCount::from(ordered))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(v: u64) -> CopyCount {
        CopyCount::from(v)
    }

    #[test]
    fn binomial_basics() {
        assert_eq!(binomial(5, 2).unwrap(), c(10));
        assert_eq!(binomial(3, 5).unwrap(), c(0));
        assert_eq!(binomial(3, -1).unwrap(), c(0));
        assert_eq!(binomial(0, 0).unwrap(), c(1));
        assert!(binomial(-1, 0).is_err());
    }

    #[test]
    fn binomial_60_30_matches_factorial_ratio() {
        let fact = |n: u64| (1..=n).fold(BigUint::from(1u32), |acc, i| acc * i);
        let expected = fact(60) / (fact(30) * fact(30));
        assert_eq!(binomial(60, 30).unwrap().value(), &expected);
        assert_eq!(binomial(60, 30).unwrap().to_string(), "118264581564861424");
    }

    #[test]
    fn binom_u128_agrees_with_bigint() {
        for n in 0..=70u64 {
            for k in 0..=n + 1 {
                let big = binom(n, k);
                assert_eq!(binom_u128(n, k).map(BigUint::from), Some(big), "C({n},{k})");
            }
        }
        assert!(binom_u128(200, 100).is_none());
    }

    #[test]
    fn kst_small_examples() {
        let k33 = Graph::complete_bipartite(3, 3);
        assert_eq!(count_kst(&k33, 1, 1).unwrap(), c(9));
        assert_eq!(count_kst(&k33, 2, 2).unwrap(), c(9));
        assert_eq!(count_kst(&Graph::cycle(6), 1, 2).unwrap(), c(6));
        assert_eq!(count_kst(&Graph::complete(4), 1, 2).unwrap(), c(12));
        assert_eq!(count_kst(&Graph::new(5), 2, 1).unwrap(), c(0));
        assert!(count_kst(&k33, 0, 1).is_err());
    }

    #[test]
    fn oracle_small_examples() {
        assert_eq!(count_kst_oracle(&Graph::complete(4), 1, 2).unwrap(), c(12));
        assert_eq!(count_kst_oracle(&Graph::new(6), 2, 3).unwrap(), c(0));
        assert_eq!(count_kst_oracle(&Graph::complete_bipartite(3, 3), 2, 2).unwrap(), c(9));
        assert!(matches!(count_kst_oracle(&Graph::new(13), 1, 1), Err(Error::Scale(_))));
    }

    #[test]
    fn wide_path_matches_narrow_path() {
        // Same graph embedded in 70 vertices exercises the multi-word walker.
        let small = Graph::from_edges(8, [(0, 4), (0, 5), (1, 4), (1, 5), (1, 6), (2, 6), (3, 7), (0, 1)]).unwrap();
        let mut wide = Graph::new(70);
        for (u, v) in small.edges() {
            wide.add_edge(u, v).unwrap();
        }
        for s in 1..=3 {
            for t in 1..=3 {
                assert_eq!(count_kst(&small, s, t).unwrap(), count_kst(&wide, s, t).unwrap());
            }
        }
    }

    #[test]
    fn complete_graph_closed_form() {
        // K_m holds C(m, s) C(m - s, t) ordered pairs.
        let g = Graph::complete(7);
        assert_eq!(count_kst(&g, 2, 3).unwrap(), c(21 * 10));
        assert_eq!(count_kst(&g, 2, 2).unwrap(), c(21 * 10 / 2));
        assert_eq!(count_kst_u128(&g, 2, 2), Some(105));
    }

    #[test]
    fn copy_count_serializes_as_string() {
        let json = serde_json::to_string(&c(42)).unwrap();
        assert_eq!(json, "\"42\"");
        let back: CopyCount = serde_json::from_str(&json).unwrap();
        assert_eq!(back, c(42));
    }
}
