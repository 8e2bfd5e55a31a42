//! Graph operations used to manufacture neutral graphs.
//!
//! Original vertices always keep their ids. New vertices are appended after
//! them: per edge in edge-list order for the subdivisions and the triangle
//! operation, per owning vertex for the leaf-connecting operation, and as a
//! block `n..2n` for the doubled graph.

use std::collections::BTreeMap;

use num_rational::Ratio;
use thiserror::Error;

use crate::graph::{EdgeRef, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OpError {
    #[error("edge {0} is not in the graph")]
    EdgeNotFound(EdgeRef),
    #[error("operation needs at least one edge")]
    EmptyEdgeSet,
    #[error("first operand must be connected")]
    Disconnected,
    #[error("gluing parameters violate the ratio conditions: {0}")]
    SpecViolation(String),
    #[error("second operand is not {0}-regular")]
    NotRegular(usize),
    #[error("no duplicate-free bridge for stub of vertex {vertex}")]
    MatchingInfeasible { vertex: usize },
}

fn finish(order: usize, edges: Vec<(usize, usize)>) -> Graph {
    Graph::build(order, edges).expect("construction yields a simple graph")
}

/// Replaces every edge by a path through `s` new vertices.
pub fn subdivide(g: &Graph, s: usize) -> Graph {
    let n = g.order();
    let mut edges = Vec::with_capacity((s + 1) * g.edge_count());
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        let base = n + i * s;
        let mut prev = u;
        for j in 0..s {
            edges.push((prev, base + j));
            prev = base + j;
        }
        edges.push((prev, v));
    }
    finish(n + s * g.edge_count(), edges)
}

/// Subdivides selected edges a chosen number of times each. Repeated entries
/// for the same edge add up.
pub fn subdivide_edges(g: &Graph, plan: &[(EdgeRef, usize)]) -> Result<Graph, OpError> {
    let mut counts: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for &(e, c) in plan {
        if !g.has_edge(e.u, e.v) {
            return Err(OpError::EdgeNotFound(e));
        }
        *counts.entry(e.as_pair()).or_default() += c;
    }
    let mut next = g.order();
    let mut edges = Vec::with_capacity(g.edge_count() + counts.values().sum::<usize>());
    for &(u, v) in g.edges() {
        let c = counts.get(&(u, v)).copied().unwrap_or(0);
        let mut prev = u;
        for _ in 0..c {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
        edges.push((prev, v));
    }
    Ok(finish(next, edges))
}

/// Inserts one new vertex (id `n`) into edge `e`.
pub fn single_edge_division(g: &Graph, e: EdgeRef) -> Result<Graph, OpError> {
    subdivide_edges(g, &[(e, 1)])
}

/// Adds, for every edge `uv`, a new vertex adjacent to both `u` and `v`.
pub fn triangle_op(g: &Graph) -> Graph {
    let n = g.order();
    let mut edges = g.edges().to_vec();
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        edges.push((u, n + i));
        edges.push((v, n + i));
    }
    finish(n + g.edge_count(), edges)
}

/// How the fresh leaves of [`leaf_connect_with`] are paired up.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum LeafPairing {
    /// Leaf `2i` with leaf `2i + 1` in creation order.
    #[default]
    Consecutive,
    /// Leaf `i` with leaf `i + m`.
    HalfShift,
}

/// Attaches `d_v` pendant vertices to every vertex `v` and then joins the
/// `2m` pendants by a perfect matching.
pub fn leaf_connect(g: &Graph) -> Graph {
    leaf_connect_with(g, LeafPairing::Consecutive)
}

pub fn leaf_connect_with(g: &Graph, pairing: LeafPairing) -> Graph {
    let n = g.order();
    let m = g.edge_count();
    let mut edges = g.edges().to_vec();
    let mut next = n;
    for v in 0..n {
        for _ in 0..g.degree(v) {
            edges.push((v, next));
            next += 1;
        }
    }
    match pairing {
        LeafPairing::Consecutive => {
            for i in 0..m {
                edges.push((n + 2 * i, n + 2 * i + 1));
            }
        }
        LeafPairing::HalfShift => {
            for i in 0..m {
                edges.push((n + i, n + m + i));
            }
        }
    }
    finish(n + 2 * m, edges)
}

/// Doubles the graph: a copy `u'` of every vertex sits at `u + n`, and each
/// edge `uv` becomes `uv`, `u'v'`, `uv'` and `vu'`.
pub fn ominus(g: &Graph) -> Graph {
    let n = g.order();
    let mut edges = Vec::with_capacity(4 * g.edge_count());
    for &(u, v) in g.edges() {
        edges.push((u, v));
        edges.push((u + n, v + n));
        edges.push((u, v + n));
        edges.push((v, u + n));
    }
    finish(2 * n, edges)
}

/// Parameters for gluing a neutral graph to a `k`-regular graph.
///
/// Every endpoint occurrence in the first graph carries `alpha - 1` stubs,
/// so vertex `u` carries `(alpha - 1) d_u`; every vertex of the regular
/// graph carries `beta`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct OplusSpec {
    pub alpha: usize,
    pub beta: usize,
    pub k: usize,
}

impl OplusSpec {
    /// Solves the ratio conditions for a given first operand and `alpha`:
    /// they force `beta = 2|E1| / |V1|`, `k = (alpha - 1) beta` and
    /// `|V2| = (alpha - 1) |V1|`. Returns the spec with the required order of
    /// the regular partner.
    pub fn solve(g1: &Graph, alpha: usize) -> Result<(OplusSpec, usize), OpError> {
        if alpha < 2 {
            return Err(OpError::SpecViolation(format!("alpha = {alpha} < 2")));
        }
        let beta = Ratio::new(2 * g1.edge_count(), g1.order());
        let k = beta * (alpha - 1);
        if !k.is_integer() || !beta.is_integer() {
            return Err(OpError::SpecViolation(format!(
                "required k = {k} and beta = {beta} must be integers"
            )));
        }
        let spec = OplusSpec {
            alpha,
            beta: beta.to_integer(),
            k: k.to_integer(),
        };
        Ok((spec, (alpha - 1) * g1.order()))
    }

    /// Checks the stub-count and ratio equalities exactly, by cross
    /// multiplication.
    pub fn check(&self, g1: &Graph, g2: &Graph) -> Result<(), OpError> {
        let a1 = self.alpha.checked_sub(1).filter(|&a| a >= 1);
        let Some(a1) = a1 else {
            return Err(OpError::SpecViolation(format!(
                "alpha = {} < 2",
                self.alpha
            )));
        };
        if self.beta == 0 {
            return Err(OpError::SpecViolation("beta = 0".into()));
        }
        let (v1, e1) = (g1.order(), g1.edge_count());
        let (v2, e2) = (g2.order(), g2.edge_count());
        let mut broken = Vec::new();
        if 2 * a1 * e1 != self.beta * v2 {
            broken.push(format!(
                "stub counts differ: 2(alpha-1)|E1| = {} but beta|V2| = {}",
                2 * a1 * e1,
                self.beta * v2
            ));
        }
        if e2 != a1 * a1 * e1 {
            broken.push(format!(
                "|E2|/|E1| = {e2}/{e1} != (alpha-1)^2 = {}",
                a1 * a1
            ));
        }
        if self.k != a1 * self.beta {
            broken.push(format!(
                "k/beta = {}/{} != alpha-1 = {a1}",
                self.k, self.beta
            ));
        }
        if v2 != a1 * v1 {
            broken.push(format!("|V2|/|V1| = {v2}/{v1} != alpha-1 = {a1}"));
        }
        if broken.is_empty() {
            Ok(())
        } else {
            Err(OpError::SpecViolation(broken.join("; ")))
        }
    }
}

/// Glues `g1` (ids `0..n1`) to the `k`-regular `g2` (ids `n1..`) by merging
/// stubs: vertex `u` of `g1` receives `(alpha - 1) d(u)` bridges to distinct
/// vertices of `g2`, each of which receives `beta`. Vertices of `g1` are
/// served by decreasing demand (ties by id) and take the `g2` vertices with
/// the most stubs left (ties by id), which finds a simple bridge set
/// whenever one exists.
pub fn oplus(g1: &Graph, g2: &Graph, spec: &OplusSpec) -> Result<Graph, OpError> {
    if g1.edge_count() == 0 {
        return Err(OpError::EmptyEdgeSet);
    }
    if !g1.is_connected() {
        return Err(OpError::Disconnected);
    }
    if g2.is_regular() != Some(spec.k) {
        return Err(OpError::NotRegular(spec.k));
    }
    spec.check(g1, g2)?;

    let n1 = g1.order();
    let mut left = vec![spec.beta; g2.order()];
    let mut edges = g1.edges().to_vec();
    edges.extend(g2.edges().iter().map(|&(u, v)| (u + n1, v + n1)));
    let mut by_demand: Vec<usize> = (0..n1).collect();
    by_demand.sort_by_key(|&u| (std::cmp::Reverse(g1.degree(u)), u));
    for u in by_demand {
        let demand = (spec.alpha - 1) * g1.degree(u);
        let mut pick: Vec<usize> = (0..g2.order()).filter(|&w| left[w] > 0).collect();
        if pick.len() < demand {
            return Err(OpError::MatchingInfeasible { vertex: u });
        }
        pick.sort_by_key(|&w| (std::cmp::Reverse(left[w]), w));
        for &w in &pick[..demand] {
            left[w] -= 1;
            edges.push((u, w + n1));
        }
    }
    debug_assert!(left.iter().all(|&c| c == 0));
    Ok(finish(n1 + g2.order(), edges))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::assort::{classify, stats, Tag};
    use crate::generators::Family;
    use num_rational::Ratio;

    fn spider(legs: &[usize]) -> Graph {
        Family::Spider(legs.to_vec()).build().unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Family::Cycle(n).build().unwrap()
    }

    fn star(k: usize) -> Graph {
        Family::Star(k).build().unwrap()
    }

    fn p2() -> Graph {
        Graph::build(2, [(0, 1)]).unwrap()
    }

    #[test]
    fn subdivide_examples() {
        let t = subdivide(&star(3), 1);
        assert_eq!(t.order(), 7);
        assert_eq!(t.edge_count(), 6);
        assert_eq!(stats(&t).unwrap().numerator, 0);
        assert_eq!(subdivide(&cycle(3), 1).is_regular(), Some(2));
        assert!(subdivide(&cycle(3), 1).is_cycle());
        assert_eq!(subdivide(&cycle(3), 1).order(), 6);
        assert_eq!(stats(&subdivide(&star(4), 1)).unwrap().numerator, -16);
        assert_eq!(subdivide(&star(4), 3).order(), 5 + 3 * 4);
    }

    #[test]
    fn single_edge_division_examples() {
        let s = spider(&[2, 2, 2]);
        let e = s.edge_ref(0, 1).unwrap();
        let t = single_edge_division(&s, e).unwrap();
        assert_eq!(t.order(), 8);
        assert_eq!(stats(&t).unwrap().numerator, 0);

        let p3 = single_edge_division(&p2(), EdgeRef::new(0, 1).unwrap()).unwrap();
        assert_eq!(p3, Graph::build(3, [(0, 2), (2, 1)]).unwrap());

        let c4 = single_edge_division(&cycle(3), EdgeRef::new(0, 1).unwrap()).unwrap();
        assert!(c4.is_cycle());
        assert_eq!(c4.order(), 4);

        let missing = EdgeRef::new(0, 2).unwrap();
        assert_eq!(
            single_edge_division(&p2().clone(), EdgeRef::new(0, 1).unwrap()).map(|g| g.order()),
            Ok(3)
        );
        assert_eq!(
            single_edge_division(&spider(&[2, 2, 2]), missing),
            Err(OpError::EdgeNotFound(missing))
        );
    }

    #[test]
    fn triangle_examples() {
        let t = triangle_op(&spider(&[2, 2, 2]));
        assert_eq!((t.order(), t.edge_count()), (13, 18));
        let st = stats(&t).unwrap();
        assert_eq!((st.p, st.s, st.numerator), (192, 120, -576));

        let c3 = triangle_op(&p2());
        assert!(c3.is_cycle() && c3.order() == 3);

        let t3 = triangle_op(&cycle(3));
        assert_eq!((t3.order(), t3.edge_count()), (6, 9));
        assert!(stats(&t3).unwrap().denominator > 0);
    }

    #[test]
    fn leaf_connect_examples() {
        let c = leaf_connect(&cycle(3));
        assert_eq!(c.order(), 9);
        let st = stats(&c).unwrap();
        assert_eq!((st.p, st.s, st.numerator), (108, 72, 0));
        assert_eq!(classify(&c).unwrap().tag, Tag::Neutral);

        let t = leaf_connect(&spider(&[2, 2, 2]));
        assert_eq!(t.order(), 3 * 7 - 2);
        assert_eq!(classify(&t).unwrap().tag, Tag::Neutral);

        let sq = leaf_connect(&p2());
        assert_eq!(sq.order(), 4);
        assert_eq!(sq.is_regular(), Some(2));
    }

    #[test]
    fn leaf_pairings_share_degree_pairs() {
        let g = spider(&[1, 2, 3]);
        let pairs = |h: &Graph| {
            let mut v: Vec<_> = h
                .edges()
                .iter()
                .map(|&(a, b)| {
                    let (x, y) = (h.degree(a), h.degree(b));
                    (x.min(y), x.max(y))
                })
                .collect();
            v.sort();
            v
        };
        let a = leaf_connect_with(&g, LeafPairing::Consecutive);
        let b = leaf_connect_with(&g, LeafPairing::HalfShift);
        assert_ne!(a, b);
        assert_eq!(pairs(&a), pairs(&b));
    }

    #[test]
    fn ominus_examples() {
        assert!(ominus(&p2()).is_cycle());
        assert_eq!(ominus(&p2()).order(), 4);

        let p4 = Family::Path(4).build().unwrap();
        let d = ominus(&p4);
        assert_eq!(d.order(), 8);
        assert_eq!(classify(&d).unwrap().r, Some(Ratio::new(-1, 2)));

        let s = ominus(&spider(&[2, 2, 2]));
        assert_eq!(s.order(), 14);
        assert_eq!(classify(&s).unwrap().tag, Tag::Neutral);
        assert!(s.edge_count() >= s.order());
    }

    #[test]
    fn oplus_rejects_leaf_connected_spider_with_alpha_two() {
        let g1 = leaf_connect(&spider(&[2, 2, 2]));
        assert_eq!((g1.order(), g1.edge_count()), (19, 24));
        match OplusSpec::solve(&g1, 2) {
            Err(OpError::SpecViolation(msg)) => assert!(msg.contains("48/19"), "{msg}"),
            other => panic!("unexpected {other:?}"),
        }
        // any concrete regular partner of the forced order is rejected too
        let g2 = Family::Circulant {
            n: 19,
            offsets: vec![1],
        }
        .build()
        .unwrap();
        let spec = OplusSpec {
            alpha: 2,
            beta: 2,
            k: 2,
        };
        assert!(matches!(
            oplus(&g1, &g2, &spec),
            Err(OpError::SpecViolation(_))
        ));
    }

    #[test]
    fn oplus_stub_mismatch() {
        let g1 = spider(&[2, 2, 2]);
        let g2 = cycle(5);
        let spec = OplusSpec {
            alpha: 2,
            beta: 2,
            k: 2,
        };
        assert!(matches!(
            oplus(&g1, &g2, &spec),
            Err(OpError::SpecViolation(_))
        ));
        let spec = OplusSpec {
            alpha: 2,
            beta: 2,
            k: 3,
        };
        assert_eq!(oplus(&g1, &g2, &spec), Err(OpError::NotRegular(3)));
    }

    #[test]
    fn oplus_on_unicyclic_partner() {
        // C3 with a pendant path: 2|E1| / |V1| = 2, so beta = 2 and
        // alpha = 2 asks for a 2-regular partner on the same order.
        let g1 = Graph::build(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4)]).unwrap();
        let (spec, v2) = OplusSpec::solve(&g1, 2).unwrap();
        assert_eq!((spec.beta, spec.k, v2), (2, 2, 5));
        let g2 = cycle(5);
        let h = oplus(&g1, &g2, &spec).unwrap();
        assert_eq!(h.order(), 10);
        assert_eq!(h.edge_count(), 3 * g1.edge_count() + g2.edge_count());
        for u in 0..5 {
            assert_eq!(h.degree(u), 2 * g1.degree(u));
        }
        for v in 5..10 {
            assert_eq!(h.degree(v), 4);
        }
        let n1 = stats(&g1).unwrap().numerator;
        assert_eq!(stats(&h).unwrap().numerator, 16 * n1);
    }
}
