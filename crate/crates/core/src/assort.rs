//! Exact degree assortativity.
//!
//! The coefficient is kept as the integer pair
//!
//! ```text
//! N = 4 m P - S^2        D = 2 m Q - S^2
//! ```
//!
//! where, summing over edges `uv`, `P = Σ d_u d_v`, `S = Σ (d_u + d_v)` and
//! `Q = Σ (d_u^2 + d_v^2)`. Newman's `r` equals `N / D` once the common
//! factor `1 / 4m^2` is cleared. Nothing here touches floating point.

use std::fmt;

use num_rational::Ratio;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AssortError {
    #[error("graph has no edges; assortativity is undefined")]
    EmptyEdgeSet,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("integer overflow while accumulating degree sums")]
    Overflow,
}

/// Exact edge aggregates of a graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AssortStats {
    pub m: i128,
    pub p: i128,
    pub s: i128,
    pub q: i128,
    /// `4mP - S^2`
    pub numerator: i128,
    /// `2mQ - S^2`; never negative
    pub denominator: i128,
}

impl AssortStats {
    /// `S - 4m`, equal to `Σ_v d_v (d_v - 2)`. Zero exactly for cycles and
    /// trees with a single degree-3 vertex.
    pub fn excess(&self) -> i128 {
        self.s - 4 * self.m
    }

    /// `Σ_uv (d_u - 2)(d_v - 2)`. With `excess` this splits the numerator as
    /// `N = 4m·coupling - excess^2`; neither term changes when a degree-2
    /// vertex is inserted next to an existing degree-2 vertex.
    pub fn coupling(&self) -> i128 {
        self.p - 2 * self.s + 4 * self.m
    }

    /// Reduced `r = N / D`, absent for regular graphs.
    pub fn r(&self) -> Option<Ratio<i128>> {
        (self.denominator != 0).then(|| Ratio::new(self.numerator, self.denominator))
    }

    pub fn classification(&self) -> Classification {
        let tag = if self.denominator == 0 {
            Tag::UndefinedRegular
        } else {
            match self.numerator.signum() {
                1 => Tag::Assortative,
                -1 => Tag::Disassortative,
                _ => Tag::Neutral,
            }
        };
        Classification { tag, r: self.r() }
    }

    pub fn is_neutral(&self) -> bool {
        self.numerator == 0 && self.denominator > 0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Tag {
    Assortative,
    Disassortative,
    Neutral,
    UndefinedRegular,
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Tag::Assortative => "assortative",
            Tag::Disassortative => "disassortative",
            Tag::Neutral => "neutral",
            Tag::UndefinedRegular => "undefined-regular",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Classification {
    pub tag: Tag,
    pub r: Option<Ratio<i128>>,
}

fn acc(total: i128, term: i128) -> Result<i128, AssortError> {
    total.checked_add(term).ok_or(AssortError::Overflow)
}

fn mul(a: i128, b: i128) -> Result<i128, AssortError> {
    a.checked_mul(b).ok_or(AssortError::Overflow)
}

/// Accumulates `P`, `S`, `Q` over the edge list.
pub fn stats(g: &Graph) -> Result<AssortStats, AssortError> {
    if g.edge_count() == 0 {
        return Err(AssortError::EmptyEdgeSet);
    }
    let deg = g.degrees();
    let (mut p, mut s, mut q) = (0i128, 0i128, 0i128);
    for &(u, v) in g.edges() {
        let (a, b) = (deg[u] as i128, deg[v] as i128);
        p = acc(p, mul(a, b)?)?;
        s = acc(s, a + b)?;
        q = acc(q, acc(mul(a, a)?, mul(b, b)?)?)?;
    }
    let m = g.edge_count() as i128;
    let s2 = mul(s, s)?;
    let numerator = mul(mul(4, m)?, p)?
        .checked_sub(s2)
        .ok_or(AssortError::Overflow)?;
    let denominator = mul(mul(2, m)?, q)?
        .checked_sub(s2)
        .ok_or(AssortError::Overflow)?;
    Ok(AssortStats {
        m,
        p,
        s,
        q,
        numerator,
        denominator,
    })
}

pub fn classify(g: &Graph) -> Result<Classification, AssortError> {
    stats(g).map(|st| st.classification())
}

/// `Σ (d_u + d_v) = 4m`, which for a connected graph singles out cycles and
/// trees whose unique maximum degree is 3.
pub fn zero_excess(g: &Graph) -> Result<bool, AssortError> {
    if g.edge_count() == 0 {
        return Err(AssortError::EmptyEdgeSet);
    }
    if !g.is_connected() {
        return Err(AssortError::Disconnected);
    }
    let st = stats(g)?;
    Ok(st.excess() == 0)
}

/// Evaluates the coefficient from edge means as fractions: the mean product
/// minus the squared mean half-sum, over the mean half-sum of squares minus
/// the same square. Used to cross-check `N / D` when certifying.
pub fn mean_form_r(g: &Graph) -> Result<Option<Ratio<i128>>, AssortError> {
    if g.edge_count() == 0 {
        return Err(AssortError::EmptyEdgeSet);
    }
    let m = g.edge_count() as i128;
    let deg = g.degrees();
    let mut prod = Ratio::zero();
    let mut half = Ratio::zero();
    let mut half_sq = Ratio::zero();
    for &(u, v) in g.edges() {
        let (a, b) = (deg[u] as i128, deg[v] as i128);
        prod += Ratio::new(a * b, m);
        half += Ratio::new(a + b, 2 * m);
        half_sq += Ratio::new(a * a + b * b, 2 * m);
    }
    let top = prod - half * half;
    let bottom = half_sq - half * half;
    Ok((!bottom.is_zero()).then(|| top / bottom))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, e: &[(usize, usize)]) -> Graph {
        Graph::build(n, e.iter().copied()).unwrap()
    }

    fn spider222() -> Graph {
        g(7, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])
    }

    #[test]
    fn path4_stats() {
        let st = stats(&g(4, &[(0, 1), (1, 2), (2, 3)])).unwrap();
        assert_eq!(
            (st.m, st.p, st.s, st.q, st.numerator, st.denominator),
            (3, 8, 10, 18, -4, 8)
        );
        assert_eq!(st.r(), Some(Ratio::new(-1, 2)));
    }

    #[test]
    fn star_stats() {
        let st = stats(&g(4, &[(0, 1), (0, 2), (0, 3)])).unwrap();
        assert_eq!(
            (st.m, st.p, st.s, st.q, st.numerator, st.denominator),
            (3, 9, 12, 30, -36, 36)
        );
        let c = st.classification();
        assert_eq!(c.tag, Tag::Disassortative);
        assert_eq!(c.r, Some(Ratio::from_integer(-1)));
    }

    #[test]
    fn regular_is_undefined() {
        let c4 = g(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]);
        let st = stats(&c4).unwrap();
        assert_eq!((st.numerator, st.denominator), (0, 0));
        let c7 = Graph::build(7, (0..7).map(|i| (i, (i + 1) % 7))).unwrap();
        assert_eq!(classify(&c7).unwrap().tag, Tag::UndefinedRegular);
        assert_eq!(classify(&c7).unwrap().r, None);
    }

    #[test]
    fn spider_is_neutral() {
        let st = stats(&spider222()).unwrap();
        assert_eq!((st.numerator, st.denominator), (0, 72));
        let c = st.classification();
        assert_eq!(c.tag, Tag::Neutral);
        assert_eq!(c.r, Some(Ratio::from_integer(0)));
    }

    #[test]
    fn empty_edge_set() {
        assert_eq!(
            stats(&Graph::empty(3).unwrap()),
            Err(AssortError::EmptyEdgeSet)
        );
        assert_eq!(
            classify(&Graph::empty(1).unwrap()),
            Err(AssortError::EmptyEdgeSet)
        );
    }

    #[test]
    fn zero_excess_examples() {
        // legs (1,1,3)
        let sp = g(6, &[(0, 1), (0, 2), (0, 3), (3, 4), (4, 5)]);
        assert!(zero_excess(&sp).unwrap());
        let c5 = Graph::build(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        assert!(zero_excess(&c5).unwrap());
        let p4 = g(4, &[(0, 1), (1, 2), (2, 3)]);
        assert!(!zero_excess(&p4).unwrap());
        assert_eq!(
            zero_excess(&g(4, &[(0, 1), (2, 3)])),
            Err(AssortError::Disconnected)
        );
    }

    #[test]
    fn split_into_coupling_and_excess() {
        for gr in [
            spider222(),
            g(4, &[(0, 1), (1, 2), (2, 3)]),
            g(4, &[(0, 1), (0, 2), (0, 3), (1, 2)]),
        ] {
            let st = stats(&gr).unwrap();
            assert_eq!(
                st.numerator,
                4 * st.m * st.coupling() - st.excess() * st.excess()
            );
        }
    }

    #[test]
    fn mean_form_agrees() {
        let p4 = g(4, &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(mean_form_r(&p4).unwrap(), Some(Ratio::new(-1, 2)));
        assert_eq!(
            mean_form_r(&spider222()).unwrap(),
            Some(Ratio::from_integer(0))
        );
        let c4 = g(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]);
        assert_eq!(mean_form_r(&c4).unwrap(), None);
    }

    #[test]
    fn large_degrees_do_not_overflow() {
        // K_{1,10000}: D = 2mQ - S^2 with m = 10^4
        let star = Graph::build(10_001, (1..=10_000).map(|i| (0, i))).unwrap();
        let st = stats(&star).unwrap();
        assert_eq!(st.classification().r, Some(Ratio::from_integer(-1)));
    }
}
