//! Exhaustive small-graph corpora: labeled connected graphs by edge mask,
//! labeled trees by Prüfer code, and unlabeled trees by level sequence.

use std::collections::{BTreeMap, HashMap};

use itertools::Itertools;
use rayon::prelude::*;
use thiserror::Error;

use crate::assort::stats;
use crate::graph::Graph;

pub const MAX_GRAPH_ORDER: usize = 8;
pub const MAX_TREE_ORDER: usize = 10;

const CHUNK: u64 = 1 << 14;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error("order {order} unsupported for {family} (allowed {min}..={max})")]
    OrderUnsupported {
        order: usize,
        family: &'static str,
        min: usize,
        max: usize,
    },
    #[error("invalid Prüfer code: {0}")]
    BadCode(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Corpus {
    AllConnected,
    Trees,
}

fn check_order(
    order: usize,
    family: &'static str,
    min: usize,
    max: usize,
) -> Result<(), EnumError> {
    if (min..=max).contains(&order) {
        Ok(())
    } else {
        Err(EnumError::OrderUnsupported {
            order,
            family,
            min,
            max,
        })
    }
}

/// Lexicographic list of vertex pairs `(0,1), (0,2), …, (n-2,n-1)`.
pub fn pair_list(order: usize) -> Vec<(usize, usize)> {
    (0..order)
        .flat_map(|u| (u + 1..order).map(move |v| (u, v)))
        .collect()
}

/// A labeled simple graph on at most eight vertices, one bit per vertex pair
/// in lexicographic pair order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeMask {
    pub order: usize,
    pub mask: u32,
}

impl EdgeMask {
    pub fn to_graph(self) -> Graph {
        let pairs = pair_list(self.order);
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| self.mask >> i & 1 == 1)
            .map(|(_, &p)| p);
        Graph::build(self.order, edges).expect("mask encodes a simple graph")
    }

    pub fn from_graph(g: &Graph) -> Option<Self> {
        if g.order() > MAX_GRAPH_ORDER {
            return None;
        }
        let pairs = pair_list(g.order());
        let mask = g
            .edges()
            .iter()
            .map(|p| 1u32 << pairs.binary_search(p).expect("pair in range"))
            .fold(0, |a, b| a | b);
        Some(EdgeMask {
            order: g.order(),
            mask,
        })
    }

    /// Bitset traversal; independent of [`Graph::is_connected`].
    pub fn is_connected(self) -> bool {
        let n = self.order;
        let mut adj = [0u8; MAX_GRAPH_ORDER];
        let mut bit = 0;
        for u in 0..n {
            for v in u + 1..n {
                if self.mask >> bit & 1 == 1 {
                    adj[u] |= 1 << v;
                    adj[v] |= 1 << u;
                }
                bit += 1;
            }
        }
        let full: u8 = if n == 8 { 0xff } else { (1u8 << n) - 1 };
        let mut reach = 1u8;
        loop {
            let mut next = reach;
            for (u, a) in adj.iter().enumerate().take(n) {
                if reach >> u & 1 == 1 {
                    next |= a;
                }
            }
            if next == reach {
                return reach == full;
            }
            reach = next;
        }
    }
}

fn mask_count(order: usize) -> u64 {
    1u64 << (order * (order - 1) / 2)
}

/// Every labeled connected graph on `order` vertices, ascending by mask.
pub fn connected_graphs(order: usize) -> Result<impl Iterator<Item = Graph>, EnumError> {
    check_order(order, "connected graphs", 2, MAX_GRAPH_ORDER)?;
    Ok((0..mask_count(order))
        .map(move |mask| EdgeMask {
            order,
            mask: mask as u32,
        })
        .filter(|m| m.is_connected())
        .map(EdgeMask::to_graph))
}

/// Number of labeled connected graphs, counted by the bitset traversal only.
pub fn count_connected(order: usize) -> Result<u64, EnumError> {
    check_order(order, "connected graphs", 2, MAX_GRAPH_ORDER)?;
    Ok((0..mask_count(order))
        .into_par_iter()
        .filter(|&mask| {
            EdgeMask {
                order,
                mask: mask as u32,
            }
            .is_connected()
        })
        .count() as u64)
}

fn chunked_sweep<T, F>(total: u64, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64) -> Option<T> + Sync,
{
    let chunks = total.div_ceil(CHUNK);
    (0..chunks)
        .into_par_iter()
        .flat_map_iter(|c| {
            let lo = c * CHUNK;
            let hi = (lo + CHUNK).min(total);
            (lo..hi).filter_map(&f).collect::<Vec<_>>()
        })
        .collect()
}

/// Applies `f` to every connected graph in parallel; results keep mask order.
pub fn sweep_connected<T, F>(order: usize, f: F) -> Result<Vec<T>, EnumError>
where
    T: Send,
    F: Fn(&Graph) -> Option<T> + Sync,
{
    check_order(order, "connected graphs", 2, MAX_GRAPH_ORDER)?;
    Ok(chunked_sweep(mask_count(order), |mask| {
        let em = EdgeMask {
            order,
            mask: mask as u32,
        };
        if em.is_connected() {
            f(&em.to_graph())
        } else {
            None
        }
    }))
}

/// A Prüfer sequence of `order - 2` vertex ids.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PruferCode {
    order: usize,
    seq: Vec<usize>,
}

impl PruferCode {
    pub fn new(order: usize, seq: Vec<usize>) -> Result<Self, EnumError> {
        if order < 2 {
            return Err(EnumError::BadCode(format!("order {order} < 2")));
        }
        if seq.len() != order - 2 {
            return Err(EnumError::BadCode(format!(
                "length {} for order {order}, expected {}",
                seq.len(),
                order - 2
            )));
        }
        if let Some(&x) = seq.iter().find(|&&x| x >= order) {
            return Err(EnumError::BadCode(format!("id {x} >= order {order}")));
        }
        Ok(PruferCode { order, seq })
    }

    /// The `index`-th code in lexicographic order (base-`order` digits).
    pub fn nth(order: usize, mut index: u64) -> Self {
        let mut seq = vec![0; order.saturating_sub(2)];
        for slot in seq.iter_mut().rev() {
            *slot = (index % order as u64) as usize;
            index /= order as u64;
        }
        PruferCode { order, seq }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn sequence(&self) -> &[usize] {
        &self.seq
    }
}

/// Number of labeled trees, `n^(n-2)`.
pub fn tree_count(order: usize) -> u64 {
    (order as u64).pow(order.saturating_sub(2) as u32)
}

pub fn prufer_decode(code: &PruferCode) -> Graph {
    let n = code.order;
    let mut degree = vec![1usize; n];
    for &x in &code.seq {
        degree[x] += 1;
    }
    let mut leaves: std::collections::BinaryHeap<std::cmp::Reverse<usize>> = (0..n)
        .filter(|&v| degree[v] == 1)
        .map(std::cmp::Reverse)
        .collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &x in &code.seq {
        let std::cmp::Reverse(leaf) = leaves.pop().expect("a leaf always exists");
        edges.push((leaf, x));
        degree[x] -= 1;
        if degree[x] == 1 {
            leaves.push(std::cmp::Reverse(x));
        }
    }
    let std::cmp::Reverse(a) = leaves.pop().expect("two vertices remain");
    let std::cmp::Reverse(b) = leaves.pop().expect("two vertices remain");
    edges.push((a, b));
    Graph::build(n, edges).expect("Prüfer decoding yields a tree")
}

/// Applies `f` to every labeled tree in parallel, in code order.
pub fn sweep_trees<T, F>(order: usize, f: F) -> Result<Vec<T>, EnumError>
where
    T: Send,
    F: Fn(&Graph) -> Option<T> + Sync,
{
    check_order(order, "labeled trees", 2, MAX_TREE_ORDER)?;
    Ok(chunked_sweep(tree_count(order), |i| {
        f(&prufer_decode(&PruferCode::nth(order, i)))
    }))
}

/// Rooted unlabeled trees as canonical level sequences, generated by the
/// successor rule of Beyer and Hedetniemi.
pub fn rooted_level_sequences(order: usize) -> Vec<Vec<usize>> {
    if order == 0 {
        return Vec::new();
    }
    let mut levels: Vec<usize> = (0..order).collect();
    let mut out = Vec::new();
    loop {
        out.push(levels.clone());
        let Some(p) = (1..order).rev().find(|&i| levels[i] > 1) else {
            break;
        };
        let q = (0..p)
            .rev()
            .find(|&j| levels[j] == levels[p] - 1)
            .expect("a parent level exists");
        let shift = p - q;
        for i in p..order {
            levels[i] = levels[i - shift];
        }
    }
    out
}

fn tree_from_levels(levels: &[usize]) -> Graph {
    let mut last_at = vec![0usize; levels.len()];
    let mut edges = Vec::with_capacity(levels.len().saturating_sub(1));
    for (i, &l) in levels.iter().enumerate() {
        if l > 0 {
            edges.push((last_at[l - 1], i));
        }
        last_at[l] = i;
    }
    Graph::build(levels.len(), edges).expect("level sequence encodes a tree")
}

fn rooted_code(adj: &[Vec<usize>], v: usize, parent: usize) -> String {
    let mut kids: Vec<String> = adj[v]
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| rooted_code(adj, w, v))
        .collect();
    kids.sort();
    format!("({})", kids.concat())
}

/// Isomorphism-invariant string for a tree: the smaller of the nested
/// parenthesis codes rooted at its center(s).
pub fn tree_key(tree: &Graph) -> String {
    let adj = tree.adjacency();
    let n = tree.order();
    let mut deg: Vec<usize> = tree.degrees().to_vec();
    let mut layer: Vec<usize> = (0..n).filter(|&v| deg[v] <= 1).collect();
    let mut left = n;
    while left > 2 {
        left -= layer.len();
        for &v in &layer {
            deg[v] = 0;
        }
        let mut next = Vec::new();
        for &v in &layer {
            for &w in &adj[v] {
                if deg[w] > 0 {
                    deg[w] -= 1;
                    if deg[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    layer
        .iter()
        .map(|&c| rooted_code(&adj, c, usize::MAX))
        .min()
        .unwrap_or_default()
}

/// One representative per isomorphism class of trees on `order` vertices,
/// ordered by [`tree_key`].
pub fn free_trees(order: usize) -> Vec<Graph> {
    let mut classes = BTreeMap::new();
    for levels in rooted_level_sequences(order) {
        let t = tree_from_levels(&levels);
        classes.entry(tree_key(&t)).or_insert(t);
    }
    classes.into_values().collect()
}

/// Minimum edge mask over all vertex relabelings. Brute force over `n!`
/// permutations, so limited to eight vertices.
pub fn canonical_mask(g: &Graph) -> Result<EdgeMask, EnumError> {
    check_order(g.order(), "canonical form", 1, MAX_GRAPH_ORDER)?;
    let n = g.order();
    let index = |u: usize, v: usize| {
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        a * (2 * n - a - 1) / 2 + (b - a - 1)
    };
    let best = (0..n)
        .permutations(n)
        .map(|perm| {
            g.edges()
                .iter()
                .fold(0u32, |acc, &(u, v)| acc | 1 << index(perm[u], perm[v]))
        })
        .min()
        .unwrap_or(0);
    Ok(EdgeMask {
        order: n,
        mask: best,
    })
}

/// For each graph, the index of an earlier isomorphic graph in the slice.
pub fn flag_duplicates(graphs: &[Graph]) -> Result<Vec<Option<usize>>, EnumError> {
    let keys: Vec<String> = graphs
        .par_iter()
        .map(|g| {
            if g.is_tree() {
                Ok(format!("t{}", tree_key(g)))
            } else {
                canonical_mask(g).map(|m| format!("g{}:{}", m.order, m.mask))
            }
        })
        .collect::<Result<_, _>>()?;
    let mut first: HashMap<&str, usize> = HashMap::new();
    Ok(keys
        .iter()
        .enumerate()
        .map(|(i, k)| {
            let e = *first.entry(k.as_str()).or_insert(i);
            (e != i).then_some(e)
        })
        .collect())
}

fn is_neutral(g: &Graph) -> bool {
    stats(g).map(|s| s.is_neutral()).unwrap_or(false)
}

/// All labeled members of the corpus that classify as neutral.
pub fn find_neutral(order: usize, corpus: Corpus) -> Result<Vec<Graph>, EnumError> {
    match corpus {
        Corpus::AllConnected => sweep_connected(order, |g| is_neutral(g).then(|| g.clone())),
        Corpus::Trees => sweep_trees(order, |g| is_neutral(g).then(|| g.clone())),
    }
}

/// Neutral trees up to isomorphism; a fast stand-in for the labeled sweep.
pub fn neutral_free_trees(order: usize) -> Vec<Graph> {
    free_trees(order).into_iter().filter(is_neutral).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::Family;

    fn brute_connected_count(n: usize) -> usize {
        let pairs = pair_list(n);
        (0u32..1 << pairs.len())
            .filter(|mask| {
                let edges = pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &p)| p);
                Graph::build(n, edges).unwrap().is_connected()
            })
            .count()
    }

    #[test]
    fn small_connected_counts() {
        assert_eq!(brute_connected_count(3), 4);
        assert_eq!(brute_connected_count(4), 38);
        for n in 2..=6 {
            assert_eq!(
                connected_graphs(n).unwrap().count() as u64,
                count_connected(n).unwrap()
            );
        }
        assert_eq!(connected_graphs(3).unwrap().count(), 4);
        assert_eq!(connected_graphs(4).unwrap().count(), 38);
        assert_eq!(count_connected(6).unwrap(), 26704);
    }

    #[test]
    fn traversals_agree_on_every_mask() {
        for n in 2..=6 {
            for mask in 0..mask_count(n) as u32 {
                let em = EdgeMask { order: n, mask };
                assert_eq!(em.is_connected(), em.to_graph().is_connected(), "{em:?}");
            }
        }
    }

    #[test]
    fn six_vertex_count_by_brute_force() {
        assert_eq!(brute_connected_count(6), 26704);
    }

    #[test]
    fn order_bounds() {
        assert!(matches!(
            connected_graphs(9).err(),
            Some(EnumError::OrderUnsupported { order: 9, .. })
        ));
        assert!(connected_graphs(1).is_err());
        assert!(find_neutral(11, Corpus::Trees).is_err());
    }

    #[test]
    fn prufer_examples() {
        let t = prufer_decode(&PruferCode::new(3, vec![0]).unwrap());
        assert_eq!(t.edges(), &[(0, 1), (0, 2)]);
        assert!(PruferCode::new(4, vec![0, 4]).is_err());
        assert!(PruferCode::new(4, vec![0]).is_err());
        let p2 = prufer_decode(&PruferCode::new(2, vec![]).unwrap());
        assert_eq!(p2.edges(), &[(0, 1)]);
    }

    #[test]
    fn prufer_is_a_bijection_up_to_seven() {
        for n in 2..=7 {
            let mut trees: Vec<Graph> = sweep_trees(n, |g| Some(g.clone())).unwrap();
            assert_eq!(trees.len() as u64, tree_count(n));
            assert!(trees.iter().all(|t| t.is_tree()));
            trees.sort_by(|a, b| a.edges().cmp(b.edges()));
            trees.dedup();
            assert_eq!(trees.len() as u64, tree_count(n));
        }
        assert_eq!(tree_count(7), 16807);
    }

    #[test]
    fn rooted_tree_counts() {
        let counts: Vec<usize> = (1..=10).map(|n| rooted_level_sequences(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 9, 20, 48, 115, 286, 719]);
    }

    #[test]
    fn free_trees_match_prufer_classes() {
        for n in 2..=8 {
            let mut keys: Vec<String> = sweep_trees(n, |g| Some(tree_key(g))).unwrap();
            keys.sort();
            keys.dedup();
            let free: Vec<String> = free_trees(n).iter().map(tree_key).collect();
            assert_eq!(keys, free, "order {n}");
        }
        let counts: Vec<usize> = (1..=10).map(|n| free_trees(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11, 23, 47, 106]);
    }

    #[test]
    fn smallest_neutral_graphs() {
        for n in 2..=5 {
            assert!(find_neutral(n, Corpus::AllConnected).unwrap().is_empty());
        }
        for n in 2..=6 {
            assert!(find_neutral(n, Corpus::Trees).unwrap().is_empty());
        }
        // one class on six vertices, degrees 4,4,3,3,3,1, with 4 automorphisms
        let six = find_neutral(6, Corpus::AllConnected).unwrap();
        assert_eq!(six.len(), 720 / 4);
        let dups = flag_duplicates(&six).unwrap();
        assert_eq!(dups.iter().filter(|d| d.is_none()).count(), 1);
        let mut degs = six[0].degrees().to_vec();
        degs.sort_unstable();
        assert_eq!(degs, [1, 3, 3, 3, 4, 4]);
    }

    #[test]
    fn neutral_trees_of_order_seven() {
        let labeled = find_neutral(7, Corpus::Trees).unwrap();
        assert!(!labeled.is_empty());
        let spider = Family::Spider(vec![2, 2, 2]).build().unwrap();
        assert!(labeled.iter().any(|t| tree_key(t) == tree_key(&spider)));
        let flags = flag_duplicates(&labeled).unwrap();
        let classes = flags.iter().filter(|f| f.is_none()).count();
        assert_eq!(classes, neutral_free_trees(7).len());
    }

    #[test]
    fn canonical_mask_identifies_relabelings() {
        let a = Graph::build(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let b = Graph::build(4, [(2, 0), (0, 3), (3, 1)]).unwrap();
        let c = Graph::build(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(canonical_mask(&a).unwrap(), canonical_mask(&b).unwrap());
        assert_ne!(canonical_mask(&a).unwrap(), canonical_mask(&c).unwrap());
        assert_eq!(
            flag_duplicates(&[a, c, b]).unwrap(),
            vec![None, None, Some(0)]
        );
    }

    #[test]
    fn mask_round_trip() {
        for g in connected_graphs(5).unwrap().take(200) {
            assert_eq!(EdgeMask::from_graph(&g).unwrap().to_graph(), g);
        }
    }
}
