use std::fs;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use serde_json::{json, Value};

use neutralgraph::claims::verify_some;
use neutralgraph::constructions::{
    leaf_connect, ominus, single_edge_division, subdivide, triangle_op,
};
use neutralgraph::enumeration::{find_neutral, flag_duplicates, Corpus};
use neutralgraph::formats::{edge_list_emit, edge_list_parse, to_dot};
use neutralgraph::generators::{coverage_range, neutral_nontree, neutral_tree};
use neutralgraph::{
    graph6_decode, graph6_encode, stats, Budget, ClaimId, EdgeRef, Family, Graph, VerifyConfig,
};

use crate::{EnumFamily, EnumReport, InFormat, Op, OutFormat};

type CmdResult = Result<ExitCode, String>;

fn budget(n: u64) -> Result<Budget, String> {
    Budget::new(n).ok_or_else(|| "budget must be positive".to_string())
}

fn read_graph(file: Option<PathBuf>, format: InFormat) -> Result<Graph, String> {
    let text = match &file {
        Some(p) => fs::read_to_string(p).map_err(|e| format!("{}: {e}", p.display()))?,
        None => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| e.to_string())?;
            s
        }
    };
    let single_token = text.split_whitespace().count() == 1;
    let as_g6 = match format {
        InFormat::G6 => true,
        InFormat::Edges => false,
        InFormat::Auto => single_token,
    };
    let g = if as_g6 {
        graph6_decode(text.trim())
    } else {
        edge_list_parse(&text)
    };
    g.map_err(|e| e.to_string())
}

fn render(g: &Graph, format: OutFormat) -> String {
    match format {
        OutFormat::G6 => format!("{}\n", graph6_encode(g)),
        OutFormat::Edges => edge_list_emit(g),
        OutFormat::Dot => to_dot(g, "G"),
    }
}

fn graph_json(g: &Graph) -> Value {
    json!({
        "order": g.order(),
        "edges": g.edges(),
        "graph6": graph6_encode(g),
    })
}

fn emit(g: &Graph, format: OutFormat, extra: Value, json: bool) {
    if json {
        let mut v = graph_json(g);
        if let (Value::Object(o), Value::Object(e)) = (&mut v, extra) {
            o.extend(e);
        }
        println!("{v}");
    } else {
        print!("{}", render(g, format));
    }
}

pub fn gen(
    family: Option<String>,
    tree: Option<usize>,
    nontree: Option<usize>,
    format: OutFormat,
    budget_n: u64,
    json: bool,
) -> CmdResult {
    let (g, route) = if let Some(text) = family {
        let f: Family = text
            .parse()
            .map_err(|e: neutralgraph::generators::GenError| e.to_string())?;
        (f.build().map_err(|e| e.to_string())?, None)
    } else if let Some(n) = tree {
        let c = neutral_tree(n).map_err(|e| e.to_string())?;
        (c.graph, Some(c.plan.describe()))
    } else if let Some(n) = nontree {
        let c = neutral_nontree(n, budget(budget_n)?).map_err(|e| e.to_string())?;
        (c.graph, Some(c.plan.describe()))
    } else {
        unreachable!("clap requires one source")
    };
    emit(&g, format, json!({ "route": route }), json);
    Ok(ExitCode::SUCCESS)
}

/// Lowest-terms `p/q` (always with a denominator) and a float approximation.
fn ratio_text(num: i128, den: i128) -> (String, f64) {
    (format!("{num}/{den}"), num as f64 / den as f64)
}

pub fn check(file: Option<PathBuf>, input: InFormat, json: bool) -> CmdResult {
    let g = read_graph(file, input)?;
    let s = stats(&g).map_err(|e| e.to_string())?;
    let c = s.classification();
    let r = c.r.map(|r| ratio_text(*r.numer(), *r.denom()));
    if json {
        let v = json!({
            "order": g.order(),
            "m": s.m,
            "P": s.p.to_string(),
            "S": s.s.to_string(),
            "Q": s.q.to_string(),
            "N": s.numerator.to_string(),
            "D": s.denominator.to_string(),
            "r": r.as_ref().map(|x| x.0.clone()),
            "r_approx": r.as_ref().map(|x| x.1),
            "classification": c.tag.to_string(),
        });
        println!("{v}");
    } else {
        println!("n = {}", g.order());
        println!("m = {}", s.m);
        println!("P = {}", s.p);
        println!("S = {}", s.s);
        println!("Q = {}", s.q);
        println!("N = {}", s.numerator);
        println!("D = {}", s.denominator);
        match r {
            Some((exact, approx)) => println!("r = {exact} (approx {approx:.12})"),
            None => println!("r = undefined"),
        }
        println!("classification = {}", c.tag);
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_edge(text: &str) -> Result<EdgeRef, String> {
    let bad = || format!("edge must look like u-v, got {text:?}");
    let (a, b) = text.split_once('-').ok_or_else(bad)?;
    let a = a.trim().parse().map_err(|_| bad())?;
    let b = b.trim().parse().map_err(|_| bad())?;
    EdgeRef::new(a, b).ok_or_else(bad)
}

pub fn transform(
    op: Op,
    s: usize,
    edge: Option<String>,
    file: Option<PathBuf>,
    input: InFormat,
    format: OutFormat,
    json: bool,
) -> CmdResult {
    let g = read_graph(file, input)?;
    let out = match op {
        Op::Subdivide => {
            if s == 0 {
                return Err("--s must be at least 1".into());
            }
            subdivide(&g, s)
        }
        Op::Sed => {
            let e = match edge {
                Some(t) => parse_edge(&t)?,
                None => g.edge_refs().next().ok_or("graph has no edges")?,
            };
            single_edge_division(&g, e).map_err(|e| e.to_string())?
        }
        Op::Triangle => triangle_op(&g),
        Op::Leafconnect => leaf_connect(&g),
        Op::Ominus => ominus(&g),
    };
    emit(&out, format, json!({}), json);
    Ok(ExitCode::SUCCESS)
}

pub fn enumerate(order: usize, family: EnumFamily, report: EnumReport, json: bool) -> CmdResult {
    let corpus = match family {
        EnumFamily::Connected => Corpus::AllConnected,
        EnumFamily::Trees => Corpus::Trees,
    };
    let noun = match family {
        EnumFamily::Connected => "graphs",
        EnumFamily::Trees => "trees",
    };
    match report {
        EnumReport::Count => {
            let n = match corpus {
                Corpus::AllConnected => {
                    neutralgraph::enumeration::count_connected(order).map_err(|e| e.to_string())?
                }
                Corpus::Trees => neutralgraph::enumeration::sweep_trees(order, |_| Some(()))
                    .map_err(|e| e.to_string())?
                    .len() as u64,
            };
            if json {
                println!("{}", json!({ "order": order, "family": noun, "count": n }));
            } else {
                println!("{n} labeled connected {noun}");
            }
        }
        EnumReport::Neutral => {
            let found = find_neutral(order, corpus).map_err(|e| e.to_string())?;
            let dups = flag_duplicates(&found).map_err(|e| e.to_string())?;
            let classes: Vec<&Graph> = found
                .iter()
                .zip(&dups)
                .filter(|(_, d)| d.is_none())
                .map(|(g, _)| g)
                .collect();
            if json {
                let v = json!({
                    "order": order,
                    "family": noun,
                    "neutral_labeled": found.len(),
                    "neutral_classes": classes.iter().map(|g| graph6_encode(g)).collect::<Vec<_>>(),
                });
                println!("{v}");
            } else {
                println!("{} neutral {noun}", found.len());
                if !found.is_empty() {
                    println!("{} up to isomorphism:", classes.len());
                    for g in classes {
                        println!("{}", graph6_encode(g));
                    }
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

pub fn verify_claims(
    claims: &str,
    budget_n: u64,
    seed: u64,
    out: Option<PathBuf>,
    json: bool,
) -> CmdResult {
    let ids: Vec<ClaimId> = if claims.trim().eq_ignore_ascii_case("all") {
        ClaimId::ALL.to_vec()
    } else {
        claims
            .split(',')
            .map(|s| {
                s.parse()
                    .map_err(|e: neutralgraph::claims::ClaimError| e.to_string())
            })
            .collect::<Result<_, _>>()?
    };
    let cfg = VerifyConfig::new(budget_n, seed).map_err(|e| e.to_string())?;
    let report = verify_some(&ids, &cfg);
    let text = report.to_json();
    if let Some(path) = out {
        fs::write(&path, format!("{text}\n")).map_err(|e| format!("{}: {e}", path.display()))?;
    }
    if json {
        println!("{text}");
    } else {
        for c in &report.claims {
            println!(
                "{:<6} {:<28} {:>8} instances  {} counterexamples",
                c.claim_id.to_string(),
                c.verdict.to_string(),
                c.instances_tested,
                c.counterexample_total
            );
        }
    }
    Ok(if report.has_counterexample() {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}

pub fn coverage(lo: usize, hi: usize, budget_n: u64, json: bool) -> CmdResult {
    let rows = coverage_range(lo, hi, budget(budget_n)?);
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&rows).map_err(|e| e.to_string())?
        );
        return Ok(ExitCode::SUCCESS);
    }
    let status = |s: &neutralgraph::generators::CoverageStatus| {
        serde_json::to_value(s)
            .ok()
            .and_then(|v| v.as_str().map(str::to_string))
            .unwrap_or_default()
    };
    for row in &rows {
        println!(
            "{:>4}  tree {:<15} nontree {:<15} {}",
            row.order,
            status(&row.tree.status),
            status(&row.nontree.status),
            row.nontree.route.as_deref().unwrap_or("")
        );
    }
    Ok(ExitCode::SUCCESS)
}
