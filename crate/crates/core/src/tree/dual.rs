use std::collections::HashMap;

use super::{count_subtrees_k, Tree};
use crate::error::{precondition, Result};
use crate::graph::{count_cycles, Mop};

/// Weak dual of a MOP: one vertex per triangle (in ear-clipping order), two
/// triangles adjacent when they share a chord.
pub fn weak_dual(m: &Mop) -> Tree {
    let triangles = m.triangles();
    let mut by_edge: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
    for (id, &[a, b, c]) in triangles.iter().enumerate() {
        for e in [(a, b), (a, c), (b, c)] {
            by_edge.entry(e).or_default().push(id);
        }
    }
    let mut edges: Vec<(usize, usize)> = by_edge
        .values()
        .filter(|ids| ids.len() == 2)
        .map(|ids| (ids[0].min(ids[1]), ids[0].max(ids[1])))
        .collect();
    edges.sort_unstable();
    Tree::from_edges(triangles.len(), edges).expect("weak dual of a MOP is a tree")
}

/// `(number of k-cycles of m, number of (k-2)-vertex subtrees of its weak dual)`.
/// The two agree for every MOP.
pub fn cycle_subtree_check(m: &Mop, k: usize) -> Result<(u64, u64)> {
    if k < 3 || k > m.n() {
        return Err(precondition(format!("need 3 <= k <= n, got k = {k}, n = {}", m.n())));
    }
    let cycles = count_cycles(&m.graph(), k);
    let subtrees = count_subtrees_k(&weak_dual(m), k - 2);
    let subtrees = u64::try_from(subtrees).expect("subtree count of a small dual fits in u64");
    Ok((cycles, subtrees))
}
