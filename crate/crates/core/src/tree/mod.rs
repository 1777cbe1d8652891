//! Bounded-degree trees: weak duals, greedy trees, subtree counting and
//! isomorphism-free enumeration.

mod dual;
mod enumerate;
mod subtrees;

use std::collections::VecDeque;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub use dual::{cycle_subtree_check, weak_dual};
pub use enumerate::{enumerate_bounded_trees, MAX_TREE_ENUMERATION_N};
pub use subtrees::{count_subtrees_k, count_subtrees_total, wiener, SubtreeTable};

/// A tree on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tree {
    adj: Vec<Vec<usize>>,
    max_degree: usize,
}

impl Tree {
    /// Validates an edge list: exactly `n - 1` distinct edges forming a
    /// connected graph.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Tree>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(Error::NotATree("no vertices".into()));
        }
        let g = Graph::from_edges(n, edges).map_err(|e| Error::NotATree(e.to_string()))?;
        if g.edge_count() != n - 1 {
            return Err(Error::NotATree(format!("{} edges on {n} vertices", g.edge_count())));
        }
        if !g.is_connected() {
            return Err(Error::NotATree("disconnected".into()));
        }
        Ok(Tree::from_graph_unchecked(&g))
    }

    fn from_graph_unchecked(g: &Graph) -> Tree {
        let adj: Vec<Vec<usize>> = (0..g.n()).map(|v| g.neighbors(v).to_vec()).collect();
        let max_degree = adj.iter().map(Vec::len).max().unwrap_or(0);
        Tree { adj, max_degree }
    }

    /// Tree from a parent array; `parent[0]` is ignored and every other
    /// vertex's parent must have a smaller index.
    pub(crate) fn from_parents(parent: &[usize]) -> Tree {
        let n = parent.len();
        let mut adj = vec![Vec::new(); n];
        for (v, &p) in parent.iter().enumerate().skip(1) {
            debug_assert!(p < v);
            adj[p].push(v);
            adj[v].push(p);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        let max_degree = adj.iter().map(Vec::len).max().unwrap_or(0);
        Tree { adj, max_degree }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.n().saturating_sub(1));
        for (u, list) in self.adj.iter().enumerate() {
            out.extend(list.iter().filter(|&&v| u < v).map(|&v| (u, v)));
        }
        out
    }

    pub fn to_graph(&self) -> Graph {
        Graph::from_edges(self.n(), self.edges()).expect("tree edges are simple")
    }

    /// BFS from vertex 0: `(order, parent)` with `parent[0] == usize::MAX`.
    pub fn bfs(&self) -> (Vec<usize>, Vec<usize>) {
        let n = self.n();
        let mut parent = vec![usize::MAX; n];
        let mut order = Vec::with_capacity(n);
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = v;
                    queue.push_back(w);
                }
            }
        }
        (order, parent)
    }

    /// Number of vertices at each BFS depth from vertex 0.
    pub fn level_sizes(&self) -> Vec<usize> {
        let (order, parent) = self.bfs();
        let mut depth = vec![0usize; self.n()];
        let mut sizes = vec![0usize];
        for &v in &order {
            if v != 0 {
                depth[v] = depth[parent[v]] + 1;
            }
            if sizes.len() <= depth[v] {
                sizes.push(0);
            }
            sizes[depth[v]] += 1;
        }
        sizes
    }

    /// Degree sequence sorted descending.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// Canonical string of the tree rooted at `root` (AHU encoding).
    pub fn rooted_code(&self, root: usize) -> String {
        fn code(t: &Tree, v: usize, parent: usize) -> String {
            let mut kids: Vec<String> = t.adj[v]
                .iter()
                .filter(|&&w| w != parent)
                .map(|&w| code(t, w, v))
                .collect();
            kids.sort();
            format!("({})", kids.concat())
        }
        code(self, root, usize::MAX)
    }

    /// Isomorphism invariant: least rooted code over all roots.
    pub fn canonical_code(&self) -> String {
        (0..self.n()).map(|r| self.rooted_code(r)).min().unwrap_or_default()
    }
}

/// Greedy (BFS) `d`-tree on `n` vertices: the root takes up to `d` children,
/// every later vertex up to `d - 1`, filling each level left to right.
pub fn greedy_tree(d: usize, n: usize) -> Result<Tree> {
    if d < 2 || n == 0 {
        return Err(crate::error::precondition(format!(
            "greedy tree needs d >= 2 and n >= 1, got d = {d}, n = {n}"
        )));
    }
    let mut parent = vec![0usize; n];
    let mut children = vec![0usize; n];
    let mut p = 0;
    for (v, slot) in parent.iter_mut().enumerate().skip(1) {
        while children[p] == if p == 0 { d } else { d - 1 } {
            p += 1;
        }
        *slot = p;
        children[p] += 1;
        debug_assert!(p < v);
    }
    Ok(Tree::from_parents(&parent))
}

/// Tree text format: first line `n`, then `n - 1` lines `parent child`
/// (rooted at vertex 0, in BFS order).
pub fn to_tree_text(t: &Tree) -> String {
    let (order, parent) = t.bfs();
    let mut out = format!("{}\n", t.n());
    for &v in order.iter().skip(1) {
        let _ = writeln!(out, "{} {v}", parent[v]);
    }
    out
}

pub fn parse_tree_text(text: &str) -> Result<Tree> {
    let g = crate::graph::io::parse_edge_list(text)?;
    Tree::from_edges(g.n(), g.edges())
}
