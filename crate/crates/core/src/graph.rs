//! Abstract (unembedded) simple graphs.

use std::collections::VecDeque;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge ({0},{1}) mentions a vertex outside 0..{2}")]
    BadVertexId(usize, usize, usize),
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("edge ({0},{1}) given twice")]
    MultiEdge(usize, usize),
}

/// Simple undirected graph on vertices `0..n` with sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::BadVertexId(u, v, n));
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            if adjacency[u].contains(&v) {
                return Err(GraphError::MultiEdge(u.min(v), u.max(v)));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Graph { adjacency })
    }

    /// Adjacency lists must already be sorted, symmetric and loop-free.
    pub(crate) fn from_adjacency_unchecked(adjacency: Vec<Vec<usize>>) -> Graph {
        Graph { adjacency }
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency.get(u).is_some_and(|list| list.binary_search(&v).is_ok())
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
            .collect()
    }

    pub fn min_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn is_regular(&self, degree: usize) -> bool {
        self.adjacency.iter().all(|list| list.len() == degree)
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_without(&[])
    }

    /// Connectivity of the subgraph induced by the vertices not in `removed`.
    /// The empty graph counts as connected.
    pub fn is_connected_without(&self, removed: &[usize]) -> bool {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        for &r in removed {
            seen[r] = true;
        }
        let Some(start) = seen.iter().position(|&s| !s) else {
            return true;
        };
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &u in &self.adjacency[v] {
                if !seen[u] {
                    seen[u] = true;
                    queue.push_back(u);
                }
            }
        }
        seen.iter().all(|&s| s)
    }

    /// Brute-force vertex connectivity test: at least `k + 1` vertices and no
    /// set of fewer than `k` vertices disconnects the graph.
    pub fn is_k_connected(&self, k: usize) -> bool {
        let n = self.vertex_count();
        if n <= k {
            return false;
        }
        let mut removed = Vec::with_capacity(k);
        self.survives_removals(k, 0, &mut removed)
    }

    fn survives_removals(&self, k: usize, from: usize, removed: &mut Vec<usize>) -> bool {
        if !self.is_connected_without(removed) {
            return false;
        }
        if removed.len() + 1 == k || k == 0 {
            return true;
        }
        for v in from..self.vertex_count() {
            removed.push(v);
            let ok = self.survives_removals(k, v + 1, removed);
            removed.pop();
            if !ok {
                return false;
            }
        }
        true
    }
}
