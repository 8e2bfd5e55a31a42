//! Neutral graphs of a prescribed order by stretching a small base graph.
//!
//! Write `N = 4m·W - T^2` with `W = Σ_uv (d_u - 2)(d_v - 2)` and
//! `T = Σ_v d_v (d_v - 2)`. Inserting a degree-2 vertex into an edge that
//! already has a degree-2 endpoint leaves `W` and `T` alone and adds one
//! edge; subdividing an edge `uv` whose endpoints both differ from degree 2
//! removes its `(d_u - 2)(d_v - 2)` from `W`. A base graph on at most seven
//! vertices therefore becomes neutral at exactly `m = T^2 / 4W` edges, and
//! the search only has to pick which base edges to subdivide.

use std::collections::{HashMap, HashSet};

use crate::constructions::subdivide_edges;
use crate::enumeration::{free_trees, pair_list, EdgeMask};
use crate::graph::{EdgeRef, Graph};

/// Largest base graph examined.
pub const MAX_BASE_ORDER: usize = 7;
/// Largest unicyclic base graph examined.
pub const MAX_UNICYCLIC_BASE_ORDER: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stretched {
    pub base: Graph,
    pub plan: Vec<(EdgeRef, usize)>,
    pub graph: Graph,
    pub bases_examined: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchStats {
    pub bases_examined: u64,
    pub exhausted: bool,
}

type Signature = (usize, usize, Vec<(i64, bool)>, Vec<i64>);

struct Base {
    order: usize,
    edges: Vec<(usize, usize)>,
    degrees: Vec<i64>,
}

impl Base {
    fn from_graph(g: &Graph) -> Self {
        Base {
            order: g.order(),
            edges: g.edges().to_vec(),
            degrees: g.degrees().iter().map(|&d| d as i64).collect(),
        }
    }

    fn from_mask(em: EdgeMask, pairs: &[(usize, usize)]) -> Self {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| em.mask >> i & 1 == 1)
            .map(|(_, &p)| p)
            .collect();
        let mut degrees = vec![0i64; em.order];
        for &(u, v) in &edges {
            degrees[u] += 1;
            degrees[v] += 1;
        }
        Base {
            order: em.order,
            edges,
            degrees,
        }
    }

    fn weight(&self, (u, v): (usize, usize)) -> i64 {
        (self.degrees[u] - 2) * (self.degrees[v] - 2)
    }

    fn is_free(&self, (u, v): (usize, usize)) -> bool {
        self.degrees[u] == 2 || self.degrees[v] == 2
    }

    /// Everything `solve` looks at; bases sharing it succeed or fail together.
    fn signature(&self) -> Signature {
        let mut w: Vec<(i64, bool)> = self
            .edges
            .iter()
            .map(|&e| (self.weight(e), self.is_free(e)))
            .collect();
        w.sort_unstable();
        let mut d = self.degrees.clone();
        d.sort_unstable();
        (self.order, self.edges.len(), w, d)
    }
}

/// Which base edges to subdivide once (`chosen`) and how many further
/// degree-2 vertices to insert (`extra`, all on one edge).
fn solve(base: &Base, target_order: usize) -> Option<(Vec<usize>, usize)> {
    let m = base.edges.len() as i64;
    let n = base.order as i64;
    let t: i64 = base.degrees.iter().map(|d| d * (d - 2)).sum();
    let final_edges = target_order as i64 + m - n;
    if t == 0 || final_edges < m || (t * t) % (4 * final_edges) != 0 {
        return None;
    }
    let w_final = t * t / (4 * final_edges);
    let weights: Vec<i64> = base.edges.iter().map(|&e| base.weight(e)).collect();
    let need = weights.iter().sum::<i64>() - w_final;
    let slack = (final_edges - m) as usize;
    let has_free = base.edges.iter().any(|&e| base.is_free(e));

    // reach[i]: (sum, count) pairs attainable with edges i..
    let k = weights.len();
    let mut reach: Vec<HashSet<(i64, usize)>> = vec![HashSet::new(); k + 1];
    reach[k].insert((0, 0));
    for i in (0..k).rev() {
        let mut cur = reach[i + 1].clone();
        for &(s, c) in &reach[i + 1] {
            cur.insert((s + weights[i], c + 1));
        }
        reach[i] = cur;
    }
    let size = (0..=slack.min(k))
        .find(|&r| reach[0].contains(&(need, r)) && (r > 0 || slack == 0 || has_free))?;
    let mut chosen = Vec::with_capacity(size);
    let (mut s, mut c) = (need, size);
    for i in 0..k {
        if c > 0 && reach[i + 1].contains(&(s - weights[i], c - 1)) {
            chosen.push(i);
            s -= weights[i];
            c -= 1;
        }
    }
    Some((chosen, slack - size))
}

fn realize(base: &Base, chosen: &[usize], extra: usize) -> (Graph, Vec<(EdgeRef, usize)>, Graph) {
    let g = Graph::build(base.order, base.edges.iter().copied()).expect("mask is simple");
    let mut counts: HashMap<usize, usize> = chosen.iter().map(|&i| (i, 1)).collect();
    if extra > 0 {
        let host = chosen.first().copied().unwrap_or_else(|| {
            base.edges
                .iter()
                .position(|&e| base.is_free(e))
                .expect("solve checked for a free edge")
        });
        *counts.entry(host).or_default() += extra;
    }
    let mut plan: Vec<(EdgeRef, usize)> = counts
        .into_iter()
        .map(|(i, c)| {
            let (u, v) = base.edges[i];
            (EdgeRef { u, v }, c)
        })
        .collect();
    plan.sort();
    let out = subdivide_edges(&g, &plan).expect("plan uses base edges");
    (g, plan, out)
}

/// Connected non-tree bases on `3..=MAX_BASE_ORDER` vertices in order of
/// vertex count and ascending edge mask, optionally of one cycle rank.
fn mask_bases(target_order: usize, cyclomatic: Option<usize>) -> impl Iterator<Item = Base> {
    (3..=MAX_BASE_ORDER.min(target_order)).flat_map(move |order| {
        let pairs = pair_list(order);
        (0u32..(1u32 << pairs.len())).filter_map(move |mask| {
            let edge_count = mask.count_ones() as usize;
            if edge_count < order || cyclomatic.is_some_and(|c| edge_count + 1 != order + c) {
                return None;
            }
            let em = EdgeMask { order, mask };
            em.is_connected().then(|| Base::from_mask(em, &pairs))
        })
    })
}

/// Unicyclic bases on `3..=MAX_UNICYCLIC_BASE_ORDER` vertices: every free
/// tree with one extra edge.
fn unicyclic_bases(target_order: usize) -> impl Iterator<Item = Base> {
    (3..=MAX_UNICYCLIC_BASE_ORDER.min(target_order)).flat_map(|order| {
        free_trees(order).into_iter().flat_map(move |t| {
            pair_list(order)
                .into_iter()
                .filter(|&(u, v)| !t.has_edge(u, v))
                .map(|(u, v)| {
                    let mut edges = t.edges().to_vec();
                    edges.push((u, v));
                    Base::from_graph(&Graph::build(order, edges).expect("new edge"))
                })
                .collect::<Vec<_>>()
        })
    })
}

fn search(
    bases: impl Iterator<Item = Base>,
    target_order: usize,
    budget: u64,
) -> (Option<Stretched>, SearchStats) {
    let mut examined = 0u64;
    let mut failed: HashSet<Signature> = HashSet::new();
    for base in bases {
        if examined == budget {
            return (
                None,
                SearchStats {
                    bases_examined: examined,
                    exhausted: true,
                },
            );
        }
        examined += 1;
        let sig = base.signature();
        if failed.contains(&sig) {
            continue;
        }
        if let Some((chosen, extra)) = solve(&base, target_order) {
            let (bg, plan, graph) = realize(&base, &chosen, extra);
            let ok = crate::assort::stats(&graph)
                .map(|s| s.is_neutral())
                .unwrap_or(false);
            if ok && graph.order() == target_order {
                let found = Stretched {
                    base: bg,
                    plan,
                    graph,
                    bases_examined: examined,
                };
                return (
                    Some(found),
                    SearchStats {
                        bases_examined: examined,
                        exhausted: false,
                    },
                );
            }
        }
        failed.insert(sig);
    }
    (
        None,
        SearchStats {
            bases_examined: examined,
            exhausted: false,
        },
    )
}

/// Scans connected base graphs by order (3 up to 7) and ascending edge mask,
/// skipping trees and, when `cyclomatic` is set, bases of a different cycle
/// rank. For `cyclomatic == Some(1)` the scan continues over unicyclic bases
/// of up to 12 vertices. Each base examined costs one unit of `budget`.
/// Returns the first stretched graph that is neutral, together with the
/// search statistics.
pub fn stretch_search(
    target_order: usize,
    cyclomatic: Option<usize>,
    budget: u64,
) -> (Option<Stretched>, SearchStats) {
    let (found, first) = search(mask_bases(target_order, cyclomatic), target_order, budget);
    if found.is_some() || first.exhausted || cyclomatic != Some(1) {
        return (found, first);
    }
    let (found, second) = search(
        unicyclic_bases(target_order),
        target_order,
        budget - first.bases_examined,
    );
    let examined = first.bases_examined + second.bases_examined;
    (
        found.map(|s| Stretched {
            bases_examined: examined,
            ..s
        }),
        SearchStats {
            bases_examined: examined,
            exhausted: second.exhausted,
        },
    )
}
