//! Immutable simple undirected graphs on dense `0..n` vertex ids.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Errors raised while validating an edge list.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    ZeroOrder,
    #[error("self-loop on vertex {0} rejected")]
    LoopRejected(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
}

/// An edge given by its endpoints with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct EdgeRef {
    pub u: usize,
    pub v: usize,
}

impl EdgeRef {
    /// Normalizes the endpoint order. Loops are not representable.
    pub fn new(a: usize, b: usize) -> Option<Self> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Some(EdgeRef { u: a, v: b }),
            std::cmp::Ordering::Greater => Some(EdgeRef { u: b, v: a }),
            std::cmp::Ordering::Equal => None,
        }
    }

    pub fn as_pair(self) -> (usize, usize) {
        (self.u, self.v)
    }
}

impl fmt::Display for EdgeRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

/// Maximum degree together with the number of vertices attaining it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MaxDegree {
    pub degree: usize,
    pub count: usize,
}

/// A simple undirected graph. The edge list is kept sorted, so structural
/// equality is plain `==`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    edges: Vec<(usize, usize)>,
    degrees: Vec<usize>,
}

impl Graph {
    /// Validates and canonicalizes an edge list. Pairs may be given in either
    /// orientation; `(0, 1)` and `(1, 0)` are the same edge.
    pub fn build<I>(order: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if order == 0 {
            return Err(GraphError::ZeroOrder);
        }
        let mut list = Vec::new();
        for (a, b) in edges {
            for x in [a, b] {
                if x >= order {
                    return Err(GraphError::VertexOutOfRange { vertex: x, order });
                }
            }
            let e = EdgeRef::new(a, b).ok_or(GraphError::LoopRejected(a))?;
            list.push(e.as_pair());
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }
        let mut degrees = vec![0; order];
        for &(u, v) in &list {
            degrees[u] += 1;
            degrees[v] += 1;
        }
        Ok(Graph {
            order,
            edges: list,
            degrees,
        })
    }

    /// `n` isolated vertices.
    pub fn empty(order: usize) -> Result<Self, GraphError> {
        Self::build(order, std::iter::empty())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_refs(&self) -> impl Iterator<Item = EdgeRef> + '_ {
        self.edges.iter().map(|&(u, v)| EdgeRef { u, v })
    }

    pub fn degree(&self, v: usize) -> usize {
        self.degrees[v]
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        match EdgeRef::new(a, b) {
            Some(e) => self.edges.binary_search(&e.as_pair()).is_ok(),
            None => false,
        }
    }

    /// Looks up an edge, returning its normalized reference if present.
    pub fn edge_ref(&self, a: usize, b: usize) -> Option<EdgeRef> {
        EdgeRef::new(a, b).filter(|e| self.has_edge(e.u, e.v))
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.order];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    pub fn is_connected(&self) -> bool {
        let adj = self.adjacency();
        let mut seen = vec![false; self.order];
        let mut stack = vec![0];
        seen[0] = true;
        let mut reached = 1;
        while let Some(x) = stack.pop() {
            for &y in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    reached += 1;
                    stack.push(y);
                }
            }
        }
        reached == self.order
    }

    /// Common degree `k` if the graph is `k`-regular.
    pub fn is_regular(&self) -> Option<usize> {
        let first = self.degrees[0];
        self.degrees.iter().all(|&d| d == first).then_some(first)
    }

    pub fn max_degree(&self) -> MaxDegree {
        let degree = self.degrees.iter().copied().max().unwrap_or(0);
        let count = self.degrees.iter().filter(|&&d| d == degree).count();
        MaxDegree { degree, count }
    }

    /// `m - n + 1`; the number of independent cycles of a connected graph.
    pub fn cyclomatic_number(&self) -> isize {
        self.edges.len() as isize - self.order as isize + 1
    }

    pub fn is_tree(&self) -> bool {
        self.edges.len() + 1 == self.order && self.is_connected()
    }

    pub fn is_cycle(&self) -> bool {
        self.order >= 3 && self.is_regular() == Some(2) && self.is_connected()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.order, self.edges)
    }
}
