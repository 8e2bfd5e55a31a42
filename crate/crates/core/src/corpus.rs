//! Seeded random corpora of connected graphs.

use rand::seq::index::sample;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::enumeration::{prufer_decode, PruferCode};
use crate::graph::Graph;

/// A random labeled tree (uniform Prüfer code) plus up to `order` extra
/// random edges, so the result is always connected.
pub fn random_connected<R: Rng>(rng: &mut R, min_order: usize, max_order: usize) -> Graph {
    let n = rng.gen_range(min_order.max(2)..=max_order.max(2));
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let tree = prufer_decode(&PruferCode::new(n, code).expect("ids below order"));
    let free: Vec<(usize, usize)> = crate::enumeration::pair_list(n)
        .into_iter()
        .filter(|&(u, v)| !tree.has_edge(u, v))
        .collect();
    let extra = rng.gen_range(0..=free.len().min(n));
    let mut edges = tree.edges().to_vec();
    edges.extend(sample(rng, free.len(), extra).into_iter().map(|i| free[i]));
    Graph::build(n, edges).expect("tree plus non-edges is simple")
}

/// `count` random connected graphs; with `irregular_only`, regular draws are
/// rejected and redrawn.
pub fn random_corpus(
    seed: u64,
    count: usize,
    min_order: usize,
    max_order: usize,
    irregular_only: bool,
) -> Vec<Graph> {
    use rand::SeedableRng;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let g = random_connected(&mut rng, min_order, max_order);
        if !irregular_only || g.is_regular().is_none() {
            out.push(g);
        }
    }
    out
}
