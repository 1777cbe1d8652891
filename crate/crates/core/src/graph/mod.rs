//! Simple graphs, maximal outerplanar graphs and exact subgraph counting.

mod construct;
mod count;
mod enumerate;
pub mod io;
mod mop;
mod pattern;

use std::collections::{HashSet, VecDeque};

use crate::error::{precondition, Result};

pub use construct::{fan, fan_path_formula, leaf_count, star_blowup, triple_fan};
pub use count::{
    count_cycles, count_paths, count_paths_between, count_paths_from, for_each_path,
};
pub use enumerate::{enumerate_mops, enumerate_mops_unguarded, MopIter, MAX_ENUMERATION_N};
pub use mop::Mop;
pub use pattern::{count_embeddings, subgraph_count, PatternGraph, MAX_PATTERN_VERTICES};

/// An undirected simple graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    edges: HashSet<(usize, usize)>,
}

#[inline]
fn key(u: usize, v: usize) -> (usize, usize) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph {
            n,
            adj: vec![Vec::new(); n],
            edges: HashSet::new(),
        }
    }

    /// Builds a graph from an edge list. Repeated pairs are merged; loops and
    /// out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            if u == v {
                return Err(precondition(format!("loop at vertex {u}")));
            }
            if u >= n || v >= n {
                return Err(precondition(format!("edge ({u}, {v}) out of range for n = {n}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Adds `{u, v}`; returns false when it was already present.
    pub fn add_edge(&mut self, u: usize, v: usize) -> bool {
        debug_assert!(u != v && u < self.n && v < self.n);
        if !self.edges.insert(key(u, v)) {
            return false;
        }
        let pos = self.adj[u].binary_search(&v).unwrap_err();
        self.adj[u].insert(pos, v);
        let pos = self.adj[v].binary_search(&u).unwrap_err();
        self.adj[v].insert(pos, u);
        true
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&key(u, v))
    }

    /// Neighbors of `v` in ascending order.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut e: Vec<_> = self.edges.iter().copied().collect();
        e.sort_unstable();
        e
    }

    /// The graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let mut seen = vec![false; self.n];
        if perm.len() != self.n || perm.iter().any(|&p| p >= self.n || std::mem::replace(&mut seen[p], true)) {
            return Err(precondition("relabelling is not a permutation of the vertex set"));
        }
        Graph::from_edges(self.n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == self.n
    }

    /// Complete graph, handy for tests and patterns.
    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// Path with `edges` edges on vertices `0..=edges`.
    pub fn path(edges: usize) -> Graph {
        let mut g = Graph::new(edges + 1);
        for v in 0..edges {
            g.add_edge(v, v + 1);
        }
        g
    }

    /// Cycle on `k >= 3` vertices.
    pub fn cycle(k: usize) -> Graph {
        let mut g = Graph::path(k - 1);
        if k >= 3 {
            g.add_edge(k - 1, 0);
        }
        g
    }

    /// Star `K_{1,leaves}` centred at 0.
    pub fn star(leaves: usize) -> Graph {
        let mut g = Graph::new(leaves + 1);
        for v in 1..=leaves {
            g.add_edge(0, v);
        }
        g
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simple_graph_rules() {
        assert!(Graph::from_edges(3, [(0, 0)]).is_err());
        assert!(Graph::from_edges(3, [(0, 3)]).is_err());
        let g = Graph::from_edges(3, [(0, 1), (1, 0), (1, 2)]).unwrap();
        assert_eq!(g.edge_count(), 2);
        assert!(g.has_edge(1, 0));
        assert!(!g.has_edge(0, 2));
        assert_eq!(g.neighbors(1), &[0, 2]);
        assert!(g.is_connected());
        assert!(!Graph::new(2).is_connected());
    }

    #[test]
    fn relabel_checks_permutation() {
        let g = Graph::path(2);
        assert!(g.relabel(&[0, 0, 1]).is_err());
        let h = g.relabel(&[1, 0, 2]).unwrap();
        assert_eq!(h.edges(), vec![(0, 1), (0, 2)]);
    }
}
