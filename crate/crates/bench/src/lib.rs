//! Fixed inputs shared by the benchmarks.

use neutralgraph::corpus::random_corpus;
use neutralgraph::{neutral_tree, Graph};

/// 256 random connected graphs on 20 to 60 vertices.
pub fn medium_graphs() -> Vec<Graph> {
    random_corpus(0xbe_4c, 256, 20, 60, false)
}

/// A certified neutral tree on `n` vertices.
pub fn long_tree(n: usize) -> Graph {
    neutral_tree(n).expect("n >= 7").graph
}
