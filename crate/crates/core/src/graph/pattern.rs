use std::collections::VecDeque;

use super::Graph;
use crate::error::{precondition, Error, Result};

/// Largest pattern accepted for generic subgraph counting.
pub const MAX_PATTERN_VERTICES: usize = 12;

/// A small connected pattern graph `H` with its automorphism count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternGraph {
    graph: Graph,
    order: Vec<usize>,
    automorphisms: u64,
}

impl PatternGraph {
    pub fn new(graph: Graph) -> Result<Self> {
        if graph.n() == 0 {
            return Err(precondition("pattern graph is empty"));
        }
        if graph.n() > MAX_PATTERN_VERTICES {
            return Err(Error::GuardExceeded {
                what: "pattern vertices",
                value: graph.n(),
                limit: MAX_PATTERN_VERTICES,
            });
        }
        if !graph.is_connected() {
            return Err(precondition("pattern graph must be connected"));
        }
        let order = bfs_order(&graph);
        let mut pattern = PatternGraph {
            graph,
            order,
            automorphisms: 0,
        };
        // automorphisms are exactly the injective edge-preserving self-maps
        pattern.automorphisms = count_maps(&pattern.graph, &pattern);
        Ok(pattern)
    }

    pub fn path(edges: usize) -> Self {
        PatternGraph::new(Graph::path(edges)).expect("paths are valid patterns")
    }

    pub fn cycle(k: usize) -> Result<Self> {
        if k < 3 {
            return Err(precondition(format!("cycle length must be >= 3, got {k}")));
        }
        PatternGraph::new(Graph::cycle(k))
    }

    pub fn star(leaves: usize) -> Self {
        PatternGraph::new(Graph::star(leaves)).expect("stars are valid patterns")
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn automorphisms(&self) -> u64 {
        self.automorphisms
    }
}

fn bfs_order(g: &Graph) -> Vec<usize> {
    let mut seen = vec![false; g.n()];
    let mut order = Vec::with_capacity(g.n());
    let mut queue = VecDeque::from([0]);
    seen[0] = true;
    while let Some(v) = queue.pop_front() {
        order.push(v);
        for &w in g.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    order
}

/// Injective maps `V(H) -> V(G)` sending every edge of `H` onto an edge of `G`.
fn count_maps(host: &Graph, pattern: &PatternGraph) -> u64 {
    let h = &pattern.graph;
    if h.n() > host.n() {
        return 0;
    }
    // for each pattern vertex (in BFS order) the already-placed neighbours
    let position: Vec<usize> = {
        let mut pos = vec![0; h.n()];
        for (i, &v) in pattern.order.iter().enumerate() {
            pos[v] = i;
        }
        pos
    };
    let back: Vec<Vec<usize>> = pattern
        .order
        .iter()
        .map(|&v| h.neighbors(v).iter().copied().filter(|&w| position[w] < position[v]).collect())
        .collect();

    let mut image = vec![usize::MAX; h.n()];
    let mut used = vec![false; host.n()];
    let mut total = 0u64;
    extend(host, pattern, &back, 0, &mut image, &mut used, &mut total);
    total
}

fn extend(
    host: &Graph,
    pattern: &PatternGraph,
    back: &[Vec<usize>],
    depth: usize,
    image: &mut [usize],
    used: &mut [bool],
    total: &mut u64,
) {
    if depth == pattern.order.len() {
        *total += 1;
        return;
    }
    let v = pattern.order[depth];
    let try_place = |x: usize, image: &mut [usize], used: &mut [bool], total: &mut u64| {
        if used[x] || !back[depth].iter().all(|&w| host.has_edge(image[w], x)) {
            return;
        }
        used[x] = true;
        image[v] = x;
        extend(host, pattern, back, depth + 1, image, used, total);
        used[x] = false;
    };
    match back[depth].first() {
        None => {
            for x in 0..host.n() {
                try_place(x, image, used, total);
            }
        }
        Some(&anchor) => {
            for &x in host.neighbors(image[anchor]) {
                try_place(x, image, used, total);
            }
        }
    }
}

/// Injective edge-preserving maps of the pattern into `host`.
pub fn count_embeddings(host: &Graph, pattern: &PatternGraph) -> u64 {
    count_maps(host, pattern)
}

/// Number of subgraphs of `host` isomorphic to the pattern.
pub fn subgraph_count(host: &Graph, pattern: &PatternGraph) -> u64 {
    count_maps(host, pattern) / pattern.automorphisms
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{count_cycles, count_paths, fan, Mop};

    /// Automorphisms by running over all permutations.
    fn brute_aut(g: &Graph) -> u64 {
        fn go(g: &Graph, perm: &mut Vec<usize>, used: &mut Vec<bool>, total: &mut u64) {
            let n = g.n();
            if perm.len() == n {
                if g.edges().iter().all(|&(u, v)| g.has_edge(perm[u], perm[v])) {
                    *total += 1;
                }
                return;
            }
            for x in 0..n {
                if !used[x] {
                    used[x] = true;
                    perm.push(x);
                    go(g, perm, used, total);
                    perm.pop();
                    used[x] = false;
                }
            }
        }
        let mut total = 0;
        go(g, &mut Vec::new(), &mut vec![false; g.n()], &mut total);
        total
    }

    #[test]
    fn automorphisms_match_permutation_brute_force() {
        let graphs = vec![
            Graph::path(3),
            Graph::cycle(5),
            Graph::star(3),
            Graph::complete(4),
            Graph::cycle(8),
            fan(6).unwrap().graph(),
            Mop::new(6, [(0, 2), (2, 4), (0, 4)]).unwrap().graph(),
            Graph::from_edges(7, [(0, 1), (1, 2), (2, 3), (1, 4), (4, 5), (4, 6)]).unwrap(),
        ];
        for g in graphs {
            let p = PatternGraph::new(g.clone()).unwrap();
            assert_eq!(p.automorphisms(), brute_aut(&g), "{:?}", g.edges());
        }
    }

    #[test]
    fn examples() {
        let tri = Graph::complete(3);
        assert_eq!(subgraph_count(&tri, &PatternGraph::path(2)), 3);
        let f6 = fan(6).unwrap().graph();
        assert_eq!(subgraph_count(&f6, &PatternGraph::cycle(3).unwrap()), 4);
        assert_eq!(subgraph_count(&Graph::star(3), &PatternGraph::path(2)), 3);
        assert_eq!(subgraph_count(&Graph::path(1), &PatternGraph::path(3)), 0);
    }

    #[test]
    fn agrees_with_specialised_counters() {
        let g = Mop::new(8, [(0, 2), (2, 4), (4, 6), (0, 4), (0, 6)]).unwrap().graph();
        for k in 3..=8 {
            assert_eq!(subgraph_count(&g, &PatternGraph::cycle(k).unwrap()), count_cycles(&g, k));
        }
        for k in 1..=7 {
            assert_eq!(subgraph_count(&g, &PatternGraph::path(k)), count_paths(&g, k));
        }
    }

    #[test]
    fn rejects_bad_patterns() {
        assert!(PatternGraph::new(Graph::new(0)).is_err());
        assert!(PatternGraph::new(Graph::new(2)).is_err());
        assert!(PatternGraph::new(Graph::path(12)).is_err());
        assert!(PatternGraph::cycle(2).is_err());
    }
}
