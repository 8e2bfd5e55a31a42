//! Graph families and certified neutral-graph factories.

pub mod stretch;

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::assort::{mean_form_r, stats};
use crate::claims::ClaimId;
use crate::constructions::{self, OpError, OplusSpec};
use crate::formats::graph6_encode;
use crate::graph::{EdgeRef, Graph, GraphError};
use crate::Budget;

pub use stretch::{stretch_search, Stretched};

/// No tree on six or fewer vertices is neutral.
pub const MIN_NEUTRAL_ORDER: usize = 7;
/// Smallest order for which non-tree neutral graphs are produced.
pub const MIN_NONTREE_ORDER: usize = 13;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("order {order} is below the minimum {min}")]
    OrderTooSmall { order: usize, min: usize },
    #[error("no neutral non-tree graph of order {order} (residue {residue} mod 6); tried: {}", attempted.join("; "))]
    NotFound {
        order: usize,
        residue: usize,
        attempted: Vec<String>,
    },
    #[error(transparent)]
    Op(#[from] OpError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Named graph families with fixed labelings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    /// `0 - 1 - … - (n-1)`
    Path(usize),
    /// `i ~ i+1 mod n`
    Cycle(usize),
    /// `K_{1,k}` with center 0
    Star(usize),
    Complete(usize),
    /// `i ~ i ± o mod n` for each offset
    Circulant {
        n: usize,
        offsets: Vec<usize>,
    },
    /// Center 0, legs numbered outward one after another.
    Spider(Vec<usize>),
}

impl Family {
    pub fn build(&self) -> Result<Graph, GenError> {
        let bad = |m: String| Err(GenError::BadParams(m));
        let g = match *self {
            Family::Path(n) => {
                if n == 0 {
                    return bad("path needs n >= 1".into());
                }
                Graph::build(n, (1..n).map(|i| (i - 1, i)))?
            }
            Family::Cycle(n) => {
                if n < 3 {
                    return bad(format!("cycle needs n >= 3, got {n}"));
                }
                Graph::build(n, (0..n).map(|i| (i, (i + 1) % n)))?
            }
            Family::Star(k) => {
                if k == 0 {
                    return bad("star needs at least one leaf".into());
                }
                Graph::build(k + 1, (1..=k).map(|i| (0, i)))?
            }
            Family::Complete(n) => {
                if n == 0 {
                    return bad("complete graph needs n >= 1".into());
                }
                Graph::build(n, crate::enumeration::pair_list(n))?
            }
            Family::Circulant { n, ref offsets } => {
                if n < 3 || offsets.is_empty() {
                    return bad(format!("circulant needs n >= 3 and offsets, got n={n}"));
                }
                let mut offs = offsets.clone();
                offs.sort_unstable();
                offs.dedup();
                if offs.len() != offsets.len() || offs[0] == 0 || *offs.last().unwrap() > n / 2 {
                    return bad(format!(
                        "offsets {offsets:?} must be distinct and in 1..={}",
                        n / 2
                    ));
                }
                let mut edges = Vec::new();
                for &o in &offs {
                    for i in 0..n {
                        let j = (i + o) % n;
                        if 2 * o == n && j < i {
                            continue;
                        }
                        edges.push((i, j));
                    }
                }
                let g = Graph::build(n, edges)?;
                if !g.is_connected() {
                    return bad(format!("circulant({n}, {offsets:?}) is disconnected"));
                }
                g
            }
            Family::Spider(ref legs) => {
                if legs.is_empty() || legs.contains(&0) {
                    return bad(format!("spider legs must be >= 1, got {legs:?}"));
                }
                let mut edges = Vec::new();
                let mut next = 1;
                for &len in legs {
                    let mut prev = 0;
                    for _ in 0..len {
                        edges.push((prev, next));
                        prev = next;
                        next += 1;
                    }
                }
                Graph::build(next, edges)?
            }
        };
        Ok(g)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        match self {
            Family::Path(n) => write!(f, "path({n})"),
            Family::Cycle(n) => write!(f, "cycle({n})"),
            Family::Star(k) => write!(f, "star({k})"),
            Family::Complete(n) => write!(f, "complete({n})"),
            Family::Circulant { n, offsets } => write!(f, "circulant({n};{})", join(offsets)),
            Family::Spider(legs) => write!(f, "spider({})", join(legs)),
        }
    }
}

/// Parses the [`Display`](fmt::Display) form, e.g. `spider(2,2,3)` or
/// `circulant(8;1,2)`.
impl std::str::FromStr for Family {
    type Err = GenError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let bad = || GenError::BadParams(format!("cannot parse family {text:?}"));
        let t = text.trim();
        let (name, rest) = t.split_once('(').ok_or_else(bad)?;
        let args = rest.strip_suffix(')').ok_or_else(bad)?;
        let nums = |s: &str| -> Result<Vec<usize>, GenError> {
            s.split(',')
                .map(|x| x.trim().parse().map_err(|_| bad()))
                .collect()
        };
        let one = |s: &str| -> Result<usize, GenError> {
            match nums(s)?.as_slice() {
                [x] => Ok(*x),
                _ => Err(bad()),
            }
        };
        match name.trim() {
            "path" => Ok(Family::Path(one(args)?)),
            "cycle" => Ok(Family::Cycle(one(args)?)),
            "star" => Ok(Family::Star(one(args)?)),
            "complete" => Ok(Family::Complete(one(args)?)),
            "spider" => Ok(Family::Spider(nums(args)?)),
            "circulant" => {
                let (n, offs) = args.split_once(';').ok_or_else(bad)?;
                Ok(Family::Circulant {
                    n: one(n)?,
                    offsets: nums(offs)?,
                })
            }
            _ => Err(bad()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GraphKind {
    Tree,
    NonTree,
}

/// One stage of a construction route.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Step {
    Family(Family),
    /// An explicit starting graph, e.g. a search result.
    Base(Graph),
    Subdivide(usize),
    SingleEdgeDivision(EdgeRef),
    SubdivideEdges(Vec<(EdgeRef, usize)>),
    Triangle,
    LeafConnect,
    Ominus,
    Oplus {
        partner: Family,
        spec: OplusSpec,
    },
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Step::Family(fam) => write!(f, "{fam}"),
            Step::Base(g) => write!(f, "base[{}]", graph6_encode(g)),
            Step::Subdivide(s) => write!(f, "subdivide({s})"),
            Step::SingleEdgeDivision(e) => write!(f, "sed({e})"),
            Step::SubdivideEdges(plan) => {
                let parts: Vec<String> = plan.iter().map(|(e, c)| format!("{e}x{c}")).collect();
                write!(f, "stretch({})", parts.join(","))
            }
            Step::Triangle => f.write_str("triangle"),
            Step::LeafConnect => f.write_str("leafconnect"),
            Step::Ominus => f.write_str("ominus"),
            Step::Oplus { partner, spec } => write!(
                f,
                "oplus({partner};alpha={},beta={},k={})",
                spec.alpha, spec.beta, spec.k
            ),
        }
    }
}

/// A declarative construction: a starting graph followed by operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecipePlan {
    pub target_order: usize,
    pub kind: GraphKind,
    pub route: Vec<Step>,
    pub provenance: Vec<ClaimId>,
}

impl RecipePlan {
    pub fn execute(&self) -> Result<Graph, GenError> {
        let mut steps = self.route.iter();
        let mut g = match steps.next() {
            Some(Step::Family(fam)) => fam.build()?,
            Some(Step::Base(g)) => g.clone(),
            other => {
                return Err(GenError::BadParams(format!(
                    "route must start with a generator, found {other:?}"
                )))
            }
        };
        for step in steps {
            g = match step {
                Step::Family(_) | Step::Base(_) => {
                    return Err(GenError::BadParams("generator in mid-route".into()))
                }
                Step::Subdivide(s) => constructions::subdivide(&g, *s),
                Step::SingleEdgeDivision(e) => constructions::single_edge_division(&g, *e)?,
                Step::SubdivideEdges(plan) => constructions::subdivide_edges(&g, plan)?,
                Step::Triangle => constructions::triangle_op(&g),
                Step::LeafConnect => constructions::leaf_connect(&g),
                Step::Ominus => constructions::ominus(&g),
                Step::Oplus { partner, spec } => constructions::oplus(&g, &partner.build()?, spec)?,
            };
        }
        Ok(g)
    }

    pub fn describe(&self) -> String {
        self.route
            .iter()
            .map(|s| s.to_string())
            .collect::<Vec<_>>()
            .join(" > ")
    }
}

/// A graph that passed certification, with the route that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certified {
    pub graph: Graph,
    pub plan: RecipePlan,
}

/// Re-checks a construction: requested order, connected, right kind, and
/// neutral both as `N = 0, D > 0` and by the mean-form evaluation.
pub fn certify(g: &Graph, order: usize, kind: GraphKind) -> bool {
    let shape = match kind {
        GraphKind::Tree => g.is_tree(),
        GraphKind::NonTree => g.edge_count() >= g.order() && g.is_connected(),
    };
    let neutral = stats(g).map(|s| s.is_neutral()).unwrap_or(false);
    let mean_zero = matches!(mean_form_r(g), Ok(Some(r)) if r == 0.into());
    g.order() == order && shape && neutral && mean_zero
}

fn run_certified(plan: RecipePlan) -> Result<Certified, String> {
    let graph = plan.execute().map_err(|e| e.to_string())?;
    if certify(&graph, plan.target_order, plan.kind) {
        Ok(Certified { graph, plan })
    } else {
        Err(format!("{} failed certification", plan.describe()))
    }
}

/// Route for the tree of order `n`: subdivide the spider with legs
/// `(1, 1, c)` once, and for even `n` insert one more vertex next to the
/// tip of the long leg. The result is the spider with legs `(2, 2, n - 5)`.
pub fn neutral_tree_plan(n: usize) -> Result<RecipePlan, GenError> {
    if n < MIN_NEUTRAL_ORDER {
        return Err(GenError::OrderTooSmall {
            order: n,
            min: MIN_NEUTRAL_ORDER,
        });
    }
    let c = (n - 5 - (n % 2 == 0) as usize) / 2;
    let mut route = vec![
        Step::Family(Family::Spider(vec![1, 1, c])),
        Step::Subdivide(1),
    ];
    let mut provenance = vec![ClaimId::T1, ClaimId::T2];
    if n % 2 == 0 {
        // spider(1,1,c) has c + 3 vertices and c + 2 edges; its last edge
        // ends at the tip c + 2 and gains subdivision vertex 2c + 4
        let tip = c + 2;
        let mid = (c + 3) + (c + 1);
        route.push(Step::SingleEdgeDivision(
            EdgeRef::new(tip, mid).expect("distinct endpoints"),
        ));
        provenance.insert(1, ClaimId::C1);
    }
    Ok(RecipePlan {
        target_order: n,
        kind: GraphKind::Tree,
        route,
        provenance,
    })
}

pub fn neutral_tree(n: usize) -> Result<Certified, GenError> {
    let plan = neutral_tree_plan(n)?;
    run_certified(plan).map_err(|why| GenError::NotFound {
        order: n,
        residue: n % 6,
        attempted: vec![why],
    })
}

fn nontree_plans(n: usize) -> Vec<RecipePlan> {
    let mut plans = Vec::new();
    let nontree = |route, provenance| RecipePlan {
        target_order: n,
        kind: GraphKind::NonTree,
        route,
        provenance,
    };
    if n % 3 == 0 && n >= 9 {
        plans.push(nontree(
            vec![Step::Family(Family::Cycle(n / 3)), Step::LeafConnect],
            vec![ClaimId::L5],
        ));
    }
    if n % 2 == 0 && n >= 2 * MIN_NEUTRAL_ORDER {
        let mut p = neutral_tree_plan(n / 2).expect("half order >= 7");
        p.route.push(Step::Ominus);
        p.provenance.push(ClaimId::A1);
        plans.push(RecipePlan {
            target_order: n,
            kind: GraphKind::NonTree,
            ..p
        });
    }
    if matches!(n % 6, 1 | 4) && n >= 3 * MIN_NEUTRAL_ORDER - 2 {
        let mut p = neutral_tree_plan(n.div_ceil(3)).expect("tree order >= 7");
        p.route.push(Step::LeafConnect);
        p.provenance.push(ClaimId::L4);
        plans.push(RecipePlan {
            target_order: n,
            kind: GraphKind::NonTree,
            ..p
        });
    }
    plans
}

/// A certified neutral graph with at least one cycle on exactly `n`
/// vertices. Closed-form routes are tried first; other orders fall back to
/// [`stretch_search`], which spends at most `budget` base graphs.
pub fn neutral_nontree(n: usize, budget: Budget) -> Result<Certified, GenError> {
    if n < MIN_NONTREE_ORDER {
        return Err(GenError::OrderTooSmall {
            order: n,
            min: MIN_NONTREE_ORDER,
        });
    }
    let mut attempted = Vec::new();
    for plan in nontree_plans(n) {
        match run_certified(plan) {
            Ok(c) => return Ok(c),
            Err(why) => attempted.push(why),
        }
    }
    let (found, st) = stretch_search(n, None, budget.get());
    if let Some(s) = found {
        let plan = RecipePlan {
            target_order: n,
            kind: GraphKind::NonTree,
            route: vec![Step::Base(s.base), Step::SubdivideEdges(s.plan)],
            provenance: Vec::new(),
        };
        match run_certified(plan) {
            Ok(c) => return Ok(c),
            Err(why) => attempted.push(why),
        }
    }
    attempted.push(format!(
        "stretch search over {} base graphs{}",
        st.bases_examined,
        if st.exhausted {
            " (budget exhausted)"
        } else {
            ""
        }
    ));
    Err(GenError::NotFound {
        order: n,
        residue: n % 6,
        attempted,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum CoverageStatus {
    Certified,
    NotFound,
    BelowThreshold,
}

impl fmt::Display for CoverageStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CoverageStatus::Certified => "CERTIFIED",
            CoverageStatus::NotFound => "NOT_FOUND",
            CoverageStatus::BelowThreshold => "BELOW_THRESHOLD",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RouteOutcome {
    pub status: CoverageStatus,
    pub route: Option<String>,
    /// graph6 of the certified graph
    pub certificate: Option<String>,
}

impl RouteOutcome {
    fn below() -> Self {
        RouteOutcome {
            status: CoverageStatus::BelowThreshold,
            route: None,
            certificate: None,
        }
    }

    fn from_result(r: Result<Certified, GenError>) -> Self {
        match r {
            Ok(c) => RouteOutcome {
                status: CoverageStatus::Certified,
                route: Some(c.plan.describe()),
                certificate: Some(graph6_encode(&c.graph)),
            },
            Err(GenError::OrderTooSmall { .. }) => Self::below(),
            Err(e) => RouteOutcome {
                status: CoverageStatus::NotFound,
                route: Some(e.to_string()),
                certificate: None,
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverageRow {
    pub order: usize,
    pub tree: RouteOutcome,
    pub nontree: RouteOutcome,
}

/// Coverage for orders `1..=max_order`.
pub fn coverage_table(max_order: usize, budget: Budget) -> Vec<CoverageRow> {
    coverage_range(1, max_order, budget)
}

/// Coverage for orders `lo..=hi`; rows are computed in parallel and returned
/// in order.
pub fn coverage_range(lo: usize, hi: usize, budget: Budget) -> Vec<CoverageRow> {
    (lo.max(1)..=hi)
        .into_par_iter()
        .map(|order| CoverageRow {
            order,
            tree: RouteOutcome::from_result(neutral_tree(order)),
            nontree: RouteOutcome::from_result(neutral_nontree(order, budget)),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::assort::classify;
    use crate::assort::Tag;
    use crate::enumeration::tree_key;

    #[test]
    fn family_text_round_trip() {
        for f in [
            Family::Path(4),
            Family::Cycle(9),
            Family::Star(3),
            Family::Complete(5),
            Family::Spider(vec![2, 2, 3]),
            Family::Circulant {
                n: 8,
                offsets: vec![1, 2],
            },
        ] {
            assert_eq!(f.to_string().parse::<Family>().unwrap(), f);
        }
        assert!("spider(2,x)".parse::<Family>().is_err());
        assert!("wheel(5)".parse::<Family>().is_err());
        assert!("cycle(3,4)".parse::<Family>().is_err());
    }

    #[test]
    fn family_examples() {
        let s = Family::Spider(vec![2, 2, 3]).build().unwrap();
        assert_eq!(s.order(), 8);
        assert!(s.is_tree());
        assert_eq!(s.degree(0), 3);

        let c = Family::Circulant {
            n: 8,
            offsets: vec![1, 2],
        }
        .build()
        .unwrap();
        assert_eq!(c.order(), 8);
        assert_eq!(c.is_regular(), Some(4));

        assert!(matches!(
            Family::Cycle(2).build(),
            Err(GenError::BadParams(_))
        ));
        assert!(Family::Circulant {
            n: 8,
            offsets: vec![2]
        }
        .build()
        .is_err());
        assert!(Family::Circulant {
            n: 8,
            offsets: vec![5]
        }
        .build()
        .is_err());
        assert!(Family::Spider(vec![2, 0]).build().is_err());

        let odd = Family::Circulant {
            n: 8,
            offsets: vec![1, 4],
        }
        .build()
        .unwrap();
        assert_eq!(odd.is_regular(), Some(3));
        assert_eq!(Family::Complete(4).build().unwrap().edge_count(), 6);
        assert_eq!(Family::Path(1).build().unwrap().edge_count(), 0);
    }

    #[test]
    fn neutral_tree_examples() {
        let t7 = neutral_tree(7).unwrap().graph;
        let spider = Family::Spider(vec![2, 2, 2]).build().unwrap();
        assert_eq!(tree_key(&t7), tree_key(&spider));
        assert_eq!(stats(&t7).unwrap().numerator, 0);

        let t8 = neutral_tree(8).unwrap().graph;
        let spider = Family::Spider(vec![2, 2, 3]).build().unwrap();
        assert_eq!(tree_key(&t8), tree_key(&spider));
        assert_eq!(classify(&t8).unwrap().tag, Tag::Neutral);

        assert_eq!(
            neutral_tree(6),
            Err(GenError::OrderTooSmall { order: 6, min: 7 })
        );
    }

    #[test]
    fn neutral_tree_is_the_long_spider() {
        for n in 7..=40 {
            let t = neutral_tree(n).unwrap().graph;
            let spider = Family::Spider(vec![2, 2, n - 5]).build().unwrap();
            assert_eq!(tree_key(&t), tree_key(&spider), "order {n}");
        }
    }

    #[test]
    fn nontree_examples() {
        let c15 = neutral_nontree(15, Budget::DEFAULT).unwrap();
        assert_eq!(c15.plan.describe(), "cycle(5) > leafconnect");
        assert_eq!(c15.graph.order(), 15);

        let c14 = neutral_nontree(14, Budget::DEFAULT).unwrap();
        assert!(c14.plan.describe().ends_with("ominus"));
        assert_eq!(c14.graph.order(), 14);

        let c19 = neutral_nontree(19, Budget::DEFAULT).unwrap();
        assert!(c19.plan.describe().ends_with("leafconnect"));
        assert!(c19.plan.describe().starts_with("spider"));

        for n in [13, 17, 23] {
            let c = neutral_nontree(n, Budget::DEFAULT).unwrap();
            assert!(
                c.plan.describe().starts_with("base["),
                "{}",
                c.plan.describe()
            );
            assert!(certify(&c.graph, n, GraphKind::NonTree));
        }
        assert!(matches!(
            neutral_nontree(12, Budget::DEFAULT),
            Err(GenError::OrderTooSmall { order: 12, min: 13 })
        ));
    }

    #[test]
    fn nontree_budget_exhaustion_is_reported() {
        match neutral_nontree(13, Budget::new(1).unwrap()) {
            Err(GenError::NotFound {
                order: 13,
                residue: 1,
                attempted,
            }) => {
                assert!(attempted.last().unwrap().contains("budget exhausted"));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn spider_neutrality_law() {
        // brute force: every 3-spider with legs up to 6
        for a in 1..=6 {
            for b in a..=6 {
                for c in b..=6 {
                    let g = Family::Spider(vec![a, b, c]).build().unwrap();
                    let neutral = stats(&g).unwrap().is_neutral();
                    assert_eq!(neutral, a >= 2, "legs ({a},{b},{c})");
                }
            }
        }
    }

    #[test]
    fn coverage_examples() {
        let rows = coverage_table(7, Budget::DEFAULT);
        assert_eq!(rows.len(), 7);
        assert!(rows[..6]
            .iter()
            .all(|r| r.tree.status == CoverageStatus::BelowThreshold
                && r.nontree.status == CoverageStatus::BelowThreshold));
        assert_eq!(rows[6].tree.status, CoverageStatus::Certified);
        assert_eq!(rows[6].nontree.status, CoverageStatus::BelowThreshold);

        let rows = coverage_range(15, 15, Budget::DEFAULT);
        assert_eq!(rows[0].nontree.status, CoverageStatus::Certified);
        assert_eq!(
            rows[0].nontree.route.as_deref(),
            Some("cycle(5) > leafconnect")
        );

        let rows = coverage_table(6, Budget::DEFAULT);
        assert!(rows
            .iter()
            .all(|r| r.tree.status == CoverageStatus::BelowThreshold));
    }

    #[test]
    fn plans_replay() {
        let c = neutral_nontree(17, Budget::DEFAULT).unwrap();
        assert_eq!(c.plan.execute().unwrap(), c.graph);
    }
}
