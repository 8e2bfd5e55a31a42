//! Registry of statements about neutral graphs, each checked exactly on a
//! declared finite family.
//!
//! A verdict of [`Verdict::VerifiedOnFamily`] only says that no instance of
//! the swept family contradicts the statement. Counterexamples carry their
//! graph6 string and recomputed aggregates so they can be replayed.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::assort::{classify, stats, zero_excess, AssortStats};
use crate::constructions::{self, oplus, OplusSpec};
use crate::corpus::random_corpus;
use crate::enumeration::{neutral_free_trees, sweep_connected, sweep_trees};
use crate::formats::{graph6_decode, graph6_encode};
use crate::generators::{
    coverage_range, neutral_tree, stretch_search, CoverageRow, CoverageStatus, Family,
};
use crate::graph::Graph;
use crate::Budget;

/// Counterexamples kept per claim; the total is always reported.
pub const MAX_COUNTEREXAMPLES: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClaimError {
    #[error("unknown claim id {0:?}")]
    UnknownClaim(String),
    #[error("budget must be positive")]
    ZeroBudget,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ClaimId {
    L1,
    L2,
    L3,
    T1,
    C1,
    T2,
    L4,
    L5,
    L6,
    L7,
    T3,
    A1,
    T4,
    ENUM6,
}

impl ClaimId {
    pub const ALL: [ClaimId; 14] = [
        ClaimId::L1,
        ClaimId::L2,
        ClaimId::L3,
        ClaimId::T1,
        ClaimId::C1,
        ClaimId::T2,
        ClaimId::L4,
        ClaimId::L5,
        ClaimId::L6,
        ClaimId::L7,
        ClaimId::T3,
        ClaimId::A1,
        ClaimId::T4,
        ClaimId::ENUM6,
    ];

    pub fn statement(self) -> &'static str {
        match self {
            ClaimId::L1 => "S = 4m holds for a connected graph iff it is a cycle or a tree with a unique degree-3 vertex and no larger degree",
            ClaimId::L2 => "D >= 0, with equality iff the graph is regular",
            ClaimId::L3 => "N(s-subdivision of G) = -(S - 4m)^2",
            ClaimId::T1 => "s-subdivisions of trees with S = 4m are neutral",
            ClaimId::C1 => "one or two single-edge divisions of such subdivisions stay neutral",
            ClaimId::T2 => "a neutral tree exists on every order n >= 7",
            ClaimId::L4 => "leaf-connecting a neutral tree on >= 7 vertices gives a neutral graph",
            ClaimId::L5 => "leaf-connecting a cycle gives a neutral graph",
            ClaimId::L6 => "the triangle operation on a neutral tree gives a neutral graph",
            ClaimId::L7 => "gluing under the ratio conditions gives N = alpha^4 N(G1), hence neutral",
            ClaimId::T3 => "gluing yields neutral non-tree graphs on orders n >= 38 with n = 2 mod 6",
            ClaimId::A1 => "doubling preserves the assortativity coefficient",
            ClaimId::T4 => "a neutral non-tree graph exists on every order n >= 13",
            ClaimId::ENUM6 => "no connected graph on at most 6 vertices is neutral",
        }
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for ClaimId {
    type Err = ClaimError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let up = s.trim().to_ascii_uppercase();
        ClaimId::ALL
            .into_iter()
            .find(|c| c.to_string() == up)
            .ok_or_else(|| ClaimError::UnknownClaim(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    VerifiedOnFamily,
    CounterexampleFound,
    PreconditionsUnsatisfiable,
    BudgetExhausted,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::VerifiedOnFamily => "VERIFIED_ON_FAMILY",
            Verdict::CounterexampleFound => "COUNTEREXAMPLE_FOUND",
            Verdict::PreconditionsUnsatisfiable => "PRECONDITIONS_UNSATISFIABLE",
            Verdict::BudgetExhausted => "BUDGET_EXHAUSTED",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub graph6: String,
    pub stats: AssortStats,
    pub reason: String,
}

impl Counterexample {
    fn new(g: &Graph, reason: String) -> Self {
        Counterexample {
            graph6: graph6_encode(g),
            stats: stats(g).expect("counterexamples have edges"),
            reason,
        }
    }

    /// Decodes the stored graph and checks the stored aggregates.
    pub fn replays(&self) -> bool {
        graph6_decode(&self.graph6)
            .ok()
            .and_then(|g| stats(&g).ok())
            .is_some_and(|s| s == self.stats)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimResult {
    pub claim_id: ClaimId,
    pub family: String,
    pub verdict: Verdict,
    pub instances_tested: u64,
    pub counterexample_total: u64,
    pub counterexamples: Vec<Counterexample>,
    /// SHA-256 over the graph6 strings of the instances, in sweep order.
    pub corpus_sha256: String,
    pub notes: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyConfig {
    pub budget: Budget,
    pub seed: u64,
}

impl VerifyConfig {
    pub const DEFAULT_SEED: u64 = 20_240_601;

    pub fn new(budget: u64, seed: u64) -> Result<Self, ClaimError> {
        Ok(VerifyConfig {
            budget: Budget::new(budget).ok_or(ClaimError::ZeroBudget)?,
            seed,
        })
    }

    /// Largest order of the exhaustive connected-graph sweeps.
    pub fn enumeration_cap(&self) -> usize {
        match self.budget.get() {
            b if b >= 1 << 31 => 8,
            b if b >= 50_000_000 => 7,
            _ => 6,
        }
    }
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            budget: Budget::DEFAULT,
            seed: Self::DEFAULT_SEED,
        }
    }
}

/// Per-instance outcome gathered by a sweep: graph6 for the fingerprint,
/// plus a counterexample when the instance contradicts the claim.
type Outcome = (String, Option<Counterexample>);

#[derive(Default)]
struct Tally {
    tested: u64,
    hasher: Sha256,
    total_bad: u64,
    examples: Vec<Counterexample>,
}

impl Tally {
    fn absorb(&mut self, outcomes: impl IntoIterator<Item = Outcome>) {
        for (g6, bad) in outcomes {
            self.tested += 1;
            self.hasher.update(g6.as_bytes());
            self.hasher.update(b"\n");
            if let Some(c) = bad {
                self.total_bad += 1;
                if self.examples.len() < MAX_COUNTEREXAMPLES {
                    self.examples.push(c);
                }
            }
        }
    }

    fn check(&mut self, g: &Graph, ok: bool, reason: impl FnOnce() -> String) {
        let bad = (!ok).then(|| Counterexample::new(g, reason()));
        self.absorb([(graph6_encode(g), bad)]);
    }

    fn finish(self, id: ClaimId, family: String, notes: String) -> ClaimResult {
        let verdict = if self.total_bad > 0 {
            Verdict::CounterexampleFound
        } else {
            Verdict::VerifiedOnFamily
        };
        self.finish_with(id, family, verdict, notes)
    }

    fn finish_with(
        self,
        id: ClaimId,
        family: String,
        verdict: Verdict,
        notes: String,
    ) -> ClaimResult {
        let digest = self.hasher.finalize();
        ClaimResult {
            claim_id: id,
            family,
            verdict,
            instances_tested: self.tested,
            counterexample_total: self.total_bad,
            counterexamples: self.examples,
            corpus_sha256: digest.iter().map(|b| format!("{b:02x}")).collect(),
            notes,
        }
    }
}

fn outcome(g: &Graph, ok: bool, reason: impl FnOnce() -> String) -> Outcome {
    (
        graph6_encode(g),
        (!ok).then(|| Counterexample::new(g, reason())),
    )
}

fn is_neutral(g: &Graph) -> bool {
    stats(g).map(|s| s.is_neutral()).unwrap_or(false)
}

fn cycle_or_tripod(g: &Graph) -> bool {
    let threes = g.degrees().iter().filter(|&&d| d == 3).count();
    g.is_cycle() || (g.is_tree() && threes == 1 && g.max_degree().degree == 3)
}

/// 3-spiders (the trees with `S = 4m`) on at most `max_order` vertices,
/// legs non-decreasing.
fn tripods(max_order: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    for a in 1..max_order {
        for b in a..max_order {
            for c in b..max_order {
                if 1 + a + b + c <= max_order {
                    out.push(Family::Spider(vec![a, b, c]).build().expect("legs >= 1"));
                }
            }
        }
    }
    out
}

fn verify_l1(cfg: &VerifyConfig) -> ClaimResult {
    let cap = cfg.enumeration_cap();
    let mut t = Tally::default();
    for n in 2..=cap {
        t.absorb(
            sweep_connected(n, |g| {
                let cond = zero_excess(g).expect("connected with edges");
                let shape = cycle_or_tripod(g);
                Some(outcome(g, cond == shape, || {
                    format!("S = 4m is {cond} but cycle/3-spider shape is {shape}")
                }))
            })
            .expect("order within cap"),
        );
    }
    t.finish(
        ClaimId::L1,
        format!("all labeled connected graphs of order 2..={cap}"),
        "both directions checked".into(),
    )
}

fn verify_l2(cfg: &VerifyConfig) -> ClaimResult {
    let cap = cfg.enumeration_cap();
    let mut t = Tally::default();
    for n in 2..=cap {
        t.absorb(
            sweep_connected(n, |g| {
                let st = stats(g).expect("edges");
                let regular = g.is_regular().is_some();
                let ok = st.denominator >= 0 && (st.denominator == 0) == regular;
                Some(outcome(g, ok, || {
                    format!("D = {} with regular = {regular}", st.denominator)
                }))
            })
            .expect("order within cap"),
        );
    }
    t.finish(
        ClaimId::L2,
        format!("all labeled connected graphs of order 2..={cap}"),
        String::new(),
    )
}

fn subdivision_identity(g: &Graph, s: usize) -> Outcome {
    let base = stats(g).expect("edges");
    let sub = constructions::subdivide(g, s);
    let got = stats(&sub).expect("edges").numerator;
    let want = -(base.excess() * base.excess());
    outcome(&sub, got == want, || {
        format!("s = {s}: N = {got}, expected {want}")
    })
}

fn verify_l3(cfg: &VerifyConfig) -> ClaimResult {
    let mut t = Tally::default();
    for n in 2..=8 {
        t.absorb(
            sweep_trees(n, |g| {
                Some(
                    (1..=3)
                        .map(|s| subdivision_identity(g, s))
                        .collect::<Vec<_>>(),
                )
            })
            .expect("order <= 10")
            .into_iter()
            .flatten(),
        );
    }
    for g in random_corpus(cfg.seed, 100, 2, 10, false) {
        t.absorb((1..=3).map(|s| subdivision_identity(&g, s)));
    }
    t.finish(
        ClaimId::L3,
        format!(
            "labeled trees of order 2..=8 and 100 random connected graphs (seed {}), s = 1..=3",
            cfg.seed
        ),
        String::new(),
    )
}

fn subdivided_tripods() -> Vec<Graph> {
    tripods(12)
        .iter()
        .flat_map(|t| (1..=3).map(move |s| constructions::subdivide(t, s)))
        .collect()
}

fn verify_t1() -> ClaimResult {
    let mut t = Tally::default();
    for tree in tripods(12) {
        assert!(zero_excess(&tree).unwrap_or(false));
        for s in 1..=3 {
            let sub = constructions::subdivide(&tree, s);
            t.check(&sub, is_neutral(&sub), || {
                format!("s = {s} subdivision is not neutral")
            });
        }
    }
    t.finish(
        ClaimId::T1,
        "3-spiders on at most 12 vertices, s = 1..=3".into(),
        String::new(),
    )
}

fn verify_c1() -> ClaimResult {
    let mut t = Tally::default();
    let outcomes: Vec<Vec<Outcome>> = subdivided_tripods()
        .par_iter()
        .map(|ts| {
            let mut out = Vec::new();
            for e in ts.edge_refs() {
                let once = constructions::single_edge_division(ts, e).expect("own edge");
                out.push(outcome(&once, is_neutral(&once), || {
                    format!("division of {e}")
                }));
                for f in once.edge_refs() {
                    let twice = constructions::single_edge_division(&once, f).expect("own edge");
                    out.push(outcome(&twice, is_neutral(&twice), || {
                        format!("divisions of {e} then {f}")
                    }));
                }
            }
            out
        })
        .collect();
    t.absorb(outcomes.into_iter().flatten());
    t.finish(
        ClaimId::C1,
        "every edge choice for one and two single-edge divisions of subdivided 3-spiders on at most 12 vertices, s = 1..=3"
            .into(),
        String::new(),
    )
}

fn verify_t2() -> ClaimResult {
    let mut t = Tally::default();
    let mut missing = Vec::new();
    for n in 7..=200 {
        match neutral_tree(n) {
            Ok(c) => t.check(&c.graph, c.graph.is_tree() && is_neutral(&c.graph), || {
                format!("order {n} tree not neutral")
            }),
            Err(e) => missing.push(format!("{n}: {e}")),
        }
    }
    let notes = if missing.is_empty() {
        "orders 7..=200 each realized by a certified tree".to_string()
    } else {
        format!("missing: {}", missing.join(", "))
    };
    let verdict = if t.total_bad > 0 || !missing.is_empty() {
        Verdict::CounterexampleFound
    } else {
        Verdict::VerifiedOnFamily
    };
    t.finish_with(ClaimId::T2, "orders 7..=200".into(), verdict, notes)
}

fn neutral_trees_7_to_10() -> Vec<Graph> {
    (7..=10).flat_map(neutral_free_trees).collect()
}

fn verify_l4() -> ClaimResult {
    let mut t = Tally::default();
    for tree in neutral_trees_7_to_10() {
        let g = constructions::leaf_connect(&tree);
        let ok = is_neutral(&g) && g.order() == 3 * tree.order() - 2;
        t.check(&g, ok, || {
            format!("leaf-connected tree of order {}", tree.order())
        });
    }
    t.finish(
        ClaimId::L4,
        "neutral trees of order 7..=10 up to isomorphism".into(),
        String::new(),
    )
}

fn verify_l5() -> ClaimResult {
    let mut t = Tally::default();
    for n in 3..=40 {
        let g = constructions::leaf_connect(&Family::Cycle(n).build().expect("n >= 3"));
        t.check(&g, is_neutral(&g) && g.order() == 3 * n, || {
            format!("cycle of order {n}")
        });
    }
    t.finish(ClaimId::L5, "cycles of order 3..=40".into(), String::new())
}

fn verify_l6() -> ClaimResult {
    let mut t = Tally::default();
    for tree in neutral_trees_7_to_10() {
        let g = constructions::triangle_op(&tree);
        let n = stats(&g).expect("edges").numerator;
        t.check(&g, n == 0, || {
            format!(
                "triangle operation on a neutral tree of order {}: N = {n}",
                tree.order()
            )
        });
    }
    t.finish(
        ClaimId::L6,
        "neutral trees of order 7..=10 up to isomorphism".into(),
        String::new(),
    )
}

/// A gluing instance found by the parameter grid.
#[derive(Debug, Clone)]
pub struct OplusWitness {
    pub first: Graph,
    pub partner: Family,
    pub spec: OplusSpec,
    pub glued: Result<Graph, String>,
}

/// Smallest first-operand order tried by the grid.
pub const OPLUS_MIN_ORDER: usize = 7;
/// Largest first-operand order tried by the grid.
pub const OPLUS_MAX_ORDER: usize = 30;

/// Walks `alpha in 2..=4` and `beta in 1..=6`. The ratio conditions force
/// `beta = 2|E1|/|V1|`, `k = (alpha - 1) beta` and `|V2| = (alpha - 1)|V1|`,
/// so for every first-operand order the search looks for a neutral graph
/// with exactly `beta |V1| / 2` edges and pairs it with the circulant of
/// degree `k` on `|V2|` vertices (offsets `1..=k/2`, plus `|V2|/2` when `k`
/// is odd).
pub fn oplus_grid(budget: Budget) -> Vec<OplusWitness> {
    let cells: Vec<(usize, usize)> = (1..=6)
        .flat_map(|beta| (OPLUS_MIN_ORDER..=OPLUS_MAX_ORDER).map(move |n1| (beta, n1)))
        .filter(|&(beta, n1)| (beta * n1) % 2 == 0 && beta * n1 / 2 >= n1)
        .collect();
    let firsts: Vec<Option<(usize, Graph)>> = cells
        .par_iter()
        .map(|&(beta, n1)| {
            let cyclomatic = beta * n1 / 2 + 1 - n1;
            stretch_search(n1, Some(cyclomatic), budget.get())
                .0
                .map(|s| (beta, s.graph))
        })
        .collect();
    let mut out = Vec::new();
    for (beta, g1) in firsts.into_iter().flatten() {
        for alpha in 2..=4 {
            let k = (alpha - 1) * beta;
            let v2 = (alpha - 1) * g1.order();
            if k >= v2 || (k % 2 == 1 && v2 % 2 == 1) {
                continue;
            }
            let mut offsets: Vec<usize> = (1..=k / 2).collect();
            if k % 2 == 1 {
                offsets.push(v2 / 2);
            }
            let partner = Family::Circulant { n: v2, offsets };
            let Ok(g2) = partner.build() else { continue };
            let spec = OplusSpec { alpha, beta, k };
            if spec.check(&g1, &g2).is_err() {
                continue;
            }
            let glued = oplus(&g1, &g2, &spec).map_err(|e| e.to_string());
            out.push(OplusWitness {
                first: g1.clone(),
                partner,
                spec,
                glued,
            });
        }
    }
    out
}

fn verify_l7(cfg: &VerifyConfig) -> ClaimResult {
    let mut t = Tally::default();
    let witnesses = oplus_grid(cfg.budget);
    let mut infeasible = 0;
    for w in &witnesses {
        match &w.glued {
            Ok(h) => {
                let want =
                    (w.spec.alpha as i128).pow(4) * stats(&w.first).expect("edges").numerator;
                let got = stats(h).expect("edges").numerator;
                t.check(h, got == want && is_neutral(h), || {
                    format!("alpha = {}: N = {got}, expected {want}", w.spec.alpha)
                });
            }
            Err(_) => infeasible += 1,
        }
    }
    let notes = format!(
        "{} parameter cells satisfy the ratio conditions; {} glued, {} without a duplicate-free matching",
        witnesses.len(),
        witnesses.len() - infeasible,
        infeasible
    );
    let family = format!(
        "alpha 2..=4, beta 1..=6, neutral first operand of order {OPLUS_MIN_ORDER}..={OPLUS_MAX_ORDER}, circulant partner"
    );
    if t.tested == 0 {
        t.finish_with(
            ClaimId::L7,
            family,
            Verdict::PreconditionsUnsatisfiable,
            notes,
        )
    } else {
        t.finish(ClaimId::L7, family, notes)
    }
}

fn verify_t3(cfg: &VerifyConfig) -> ClaimResult {
    let mut t = Tally::default();
    let orders: Vec<usize> = (38..=60).filter(|n| n % 6 == 2).collect();
    let mut notes = Vec::new();

    // the literal route: leaf-connected neutral tree on (n/2 + 2)/3 vertices, alpha = 2
    for &n in &orders {
        let n1 = (n / 2).div_ceil(3);
        let Ok(tree) = neutral_tree(n1) else { continue };
        let g1 = constructions::leaf_connect(&tree.graph);
        match OplusSpec::solve(&g1, 2) {
            Ok(_) => notes.push(format!("{n}: literal route has integral parameters")),
            Err(e) => notes.push(format!("{n}: literal route rejected ({e})")),
        }
    }

    let witnesses = oplus_grid(cfg.budget);
    let mut covered = Vec::new();
    for w in &witnesses {
        if let Ok(h) = &w.glued {
            if orders.contains(&h.order()) {
                t.check(h, is_neutral(h), || "glued graph is not neutral".into());
                covered.push(h.order());
            }
        }
    }
    covered.sort_unstable();
    covered.dedup();
    let uncovered: Vec<usize> = orders
        .iter()
        .copied()
        .filter(|n| !covered.contains(n))
        .collect();
    notes.push(format!(
        "grid witnesses cover orders {covered:?}; uncovered {uncovered:?}"
    ));
    let verdict = if t.total_bad > 0 {
        Verdict::CounterexampleFound
    } else if uncovered.is_empty() {
        Verdict::VerifiedOnFamily
    } else {
        Verdict::PreconditionsUnsatisfiable
    };
    t.finish_with(
        ClaimId::T3,
        format!("orders {orders:?} via gluing"),
        verdict,
        notes.join("; "),
    )
}

fn verify_a1(cfg: &VerifyConfig) -> ClaimResult {
    let mut t = Tally::default();
    for g in random_corpus(cfg.seed, 200, 3, 12, true) {
        let d = constructions::ominus(&g);
        let (a, b) = (stats(&g).expect("edges"), stats(&d).expect("edges"));
        let (ca, cb) = (classify(&g).expect("edges"), classify(&d).expect("edges"));
        let ok = ca == cb && b.numerator == 64 * a.numerator && b.denominator == 64 * a.denominator;
        t.check(&d, ok, || {
            format!("doubled graph has {:?}, original {:?}", cb, ca)
        });
    }
    t.finish(
        ClaimId::A1,
        format!(
            "200 random irregular connected graphs of order 3..=12 (seed {})",
            cfg.seed
        ),
        String::new(),
    )
}

/// Coverage rows backing the existence claim for non-tree graphs.
pub fn t4_coverage(cfg: &VerifyConfig) -> Vec<CoverageRow> {
    coverage_range(13, 60, cfg.budget)
}

fn verify_t4(cfg: &VerifyConfig) -> ClaimResult {
    let rows = t4_coverage(cfg);
    let mut t = Tally::default();
    let mut missing = Vec::new();
    for row in &rows {
        match (&row.nontree.status, &row.nontree.certificate) {
            (CoverageStatus::Certified, Some(g6)) => {
                let g = graph6_decode(g6).expect("own certificate");
                let ok = g.order() == row.order
                    && g.is_connected()
                    && g.edge_count() >= g.order()
                    && is_neutral(&g);
                t.check(&g, ok, || {
                    format!("certificate for order {} does not re-verify", row.order)
                });
            }
            _ => missing.push(row.order),
        }
    }
    let verdict = if t.total_bad > 0 {
        Verdict::CounterexampleFound
    } else if missing.is_empty() {
        Verdict::VerifiedOnFamily
    } else {
        Verdict::BudgetExhausted
    };
    let notes = if missing.is_empty() {
        "every order certified".into()
    } else {
        format!("not found within budget: {missing:?}")
    };
    t.finish_with(ClaimId::T4, "orders 13..=60".into(), verdict, notes)
}

fn verify_enum6() -> ClaimResult {
    let mut t = Tally::default();
    for n in 2..=6 {
        t.absorb(
            sweep_connected(n, |g| Some(outcome(g, !is_neutral(g), || "neutral".into())))
                .expect("order <= 8"),
        );
    }
    t.finish(
        ClaimId::ENUM6,
        "all labeled connected graphs of order 2..=6".into(),
        "regular graphs count as undefined, not neutral".into(),
    )
}

pub fn verify(id: ClaimId, cfg: &VerifyConfig) -> ClaimResult {
    match id {
        ClaimId::L1 => verify_l1(cfg),
        ClaimId::L2 => verify_l2(cfg),
        ClaimId::L3 => verify_l3(cfg),
        ClaimId::T1 => verify_t1(),
        ClaimId::C1 => verify_c1(),
        ClaimId::T2 => verify_t2(),
        ClaimId::L4 => verify_l4(),
        ClaimId::L5 => verify_l5(),
        ClaimId::L6 => verify_l6(),
        ClaimId::L7 => verify_l7(cfg),
        ClaimId::T3 => verify_t3(cfg),
        ClaimId::A1 => verify_a1(cfg),
        ClaimId::T4 => verify_t4(cfg),
        ClaimId::ENUM6 => verify_enum6(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusFingerprint {
    pub claim_id: ClaimId,
    pub instances: u64,
    pub sha256: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub tool_version: String,
    pub budget: u64,
    pub seed: u64,
    pub fingerprints: Vec<CorpusFingerprint>,
    pub claims: Vec<ClaimResult>,
    pub coverage: Vec<CoverageRow>,
}

impl Report {
    pub fn has_counterexample(&self) -> bool {
        self.claims
            .iter()
            .any(|c| c.verdict == Verdict::CounterexampleFound)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report is serializable")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}

/// Verifies the selected claims in parallel; results keep the given order.
pub fn verify_some(ids: &[ClaimId], cfg: &VerifyConfig) -> Report {
    let claims: Vec<ClaimResult> = ids.par_iter().map(|&id| verify(id, cfg)).collect();
    let coverage = if ids.contains(&ClaimId::T4) {
        t4_coverage(cfg)
    } else {
        Vec::new()
    };
    Report {
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
        budget: cfg.budget.get(),
        seed: cfg.seed,
        fingerprints: claims
            .iter()
            .map(|c| CorpusFingerprint {
                claim_id: c.claim_id,
                instances: c.instances_tested,
                sha256: c.corpus_sha256.clone(),
            })
            .collect(),
        claims,
        coverage,
    }
}

pub fn verify_all(cfg: &VerifyConfig) -> Report {
    verify_some(&ClaimId::ALL, cfg)
}
