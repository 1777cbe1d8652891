//! Backtracking counters for simple paths and cycles.

use super::Graph;

/// Number of `k`-cycles of `g`. Each cycle is counted once, from its least
/// vertex and in the orientation whose second vertex is the smaller of that
/// vertex's two cycle neighbours.
pub fn count_cycles(g: &Graph, k: usize) -> u64 {
    if k < 3 || k > g.n() {
        return 0;
    }
    let mut on_path = vec![false; g.n()];
    let mut path = Vec::with_capacity(k);
    let mut total = 0;
    for start in 0..g.n() {
        path.push(start);
        on_path[start] = true;
        cycle_dfs(g, k, &mut path, &mut on_path, &mut total);
        on_path[start] = false;
        path.pop();
    }
    total
}

fn cycle_dfs(g: &Graph, k: usize, path: &mut Vec<usize>, on_path: &mut [bool], total: &mut u64) {
    let start = path[0];
    let last = *path.last().unwrap();
    if path.len() == k {
        if path[1] < last && g.has_edge(last, start) {
            *total += 1;
        }
        return;
    }
    for &w in g.neighbors(last) {
        if w > start && !on_path[w] {
            on_path[w] = true;
            path.push(w);
            cycle_dfs(g, k, path, on_path, total);
            path.pop();
            on_path[w] = false;
        }
    }
}

/// Calls `visit` once for every simple path with exactly `k` edges, each path
/// reported in the orientation that starts at its lesser endpoint.
pub fn for_each_path<F: FnMut(&[usize])>(g: &Graph, k: usize, mut visit: F) {
    if k == 0 {
        for v in 0..g.n() {
            visit(&[v]);
        }
        return;
    }
    let mut on_path = vec![false; g.n()];
    let mut path = Vec::with_capacity(k + 1);
    for start in 0..g.n() {
        path.push(start);
        on_path[start] = true;
        path_dfs(g, k, &mut path, &mut on_path, &mut visit);
        on_path[start] = false;
        path.pop();
    }
}

fn path_dfs<F: FnMut(&[usize])>(
    g: &Graph,
    k: usize,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    visit: &mut F,
) {
    let last = *path.last().unwrap();
    if path.len() == k + 1 {
        if path[0] < last {
            visit(path);
        }
        return;
    }
    for &w in g.neighbors(last) {
        if !on_path[w] {
            on_path[w] = true;
            path.push(w);
            path_dfs(g, k, path, on_path, visit);
            path.pop();
            on_path[w] = false;
        }
    }
}

/// Number of path subgraphs with exactly `k` edges (`P_{k+1}`).
/// `k = 0` counts single vertices.
pub fn count_paths(g: &Graph, k: usize) -> u64 {
    if k == 0 {
        return g.n() as u64;
    }
    // every path is found twice, once from each endpoint
    let mut directed = 0u64;
    for start in 0..g.n() {
        directed += count_paths_from(g, start, k).iter().sum::<u64>();
    }
    directed / 2
}

/// For every vertex `v`, the number of simple `u`-`v` paths with exactly `k`
/// edges.
pub fn count_paths_from(g: &Graph, u: usize, k: usize) -> Vec<u64> {
    let mut out = vec![0u64; g.n()];
    if k == 0 {
        out[u] = 1;
        return out;
    }
    let mut on_path = vec![false; g.n()];
    on_path[u] = true;
    from_dfs(g, u, k, &mut on_path, &mut out);
    out
}

fn from_dfs(g: &Graph, v: usize, remaining: usize, on_path: &mut [bool], out: &mut [u64]) {
    for &w in g.neighbors(v) {
        if on_path[w] {
            continue;
        }
        if remaining == 1 {
            out[w] += 1;
        } else {
            on_path[w] = true;
            from_dfs(g, w, remaining - 1, on_path, out);
            on_path[w] = false;
        }
    }
}

/// Number of simple `u`-`v` paths with exactly `k` edges.
pub fn count_paths_between(g: &Graph, u: usize, v: usize, k: usize) -> u64 {
    if u == v {
        return 0;
    }
    let mut on_path = vec![false; g.n()];
    on_path[u] = true;
    between_dfs(g, u, v, k, &mut on_path)
}

fn between_dfs(g: &Graph, at: usize, target: usize, remaining: usize, on_path: &mut [bool]) -> u64 {
    if remaining == 1 {
        return g.has_edge(at, target) as u64;
    }
    let mut total = 0;
    for &w in g.neighbors(at) {
        if w == target || on_path[w] {
            continue;
        }
        on_path[w] = true;
        total += between_dfs(g, w, target, remaining - 1, on_path);
        on_path[w] = false;
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{fan, Mop};
    use std::collections::HashSet;

    fn k4_minus_edge() -> Graph {
        Graph::from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    /// Brute force: vertex subsets, ordered arrangements, dedup as edge sets.
    fn brute_cycles(g: &Graph, k: usize) -> usize {
        let n = g.n();
        let mut seen = HashSet::new();
        fn perms(items: &mut Vec<usize>, at: usize, out: &mut Vec<Vec<usize>>) {
            if at == items.len() {
                out.push(items.clone());
                return;
            }
            for i in at..items.len() {
                items.swap(at, i);
                perms(items, at + 1, out);
                items.swap(at, i);
            }
        }
        for mask in 0u32..(1 << n) {
            if mask.count_ones() as usize != k {
                continue;
            }
            let mut verts: Vec<usize> = (0..n).filter(|v| mask >> v & 1 == 1).collect();
            let mut all = Vec::new();
            perms(&mut verts, 0, &mut all);
            for p in all {
                if (0..k).all(|i| g.has_edge(p[i], p[(i + 1) % k])) {
                    let mut es: Vec<(usize, usize)> = (0..k)
                        .map(|i| {
                            let (a, b) = (p[i], p[(i + 1) % k]);
                            (a.min(b), a.max(b))
                        })
                        .collect();
                    es.sort();
                    seen.insert(es);
                }
            }
        }
        seen.len()
    }

    #[test]
    fn cycle_examples() {
        let tri = Mop::new(3, []).unwrap().graph();
        assert_eq!(count_cycles(&tri, 3), 1);
        assert_eq!(count_cycles(&fan(5).unwrap().graph(), 3), 3);
        assert_eq!(count_cycles(&k4_minus_edge(), 3), 2);
        assert_eq!(count_cycles(&k4_minus_edge(), 4), 1);
        assert_eq!(count_cycles(&tri, 2), 0);
        assert_eq!(count_cycles(&tri, 4), 0);
    }

    #[test]
    fn cycles_match_brute_force() {
        let graphs = [Graph::complete(5), k4_minus_edge(), fan(7).unwrap().graph()];
        for g in &graphs {
            for k in 3..=g.n() {
                assert_eq!(count_cycles(g, k) as usize, brute_cycles(g, k));
            }
        }
    }

    #[test]
    fn path_examples() {
        let f6 = fan(6).unwrap().graph();
        assert_eq!(count_paths(&f6, 2), 21);
        assert_eq!(count_paths(&f6, 3), 32);
        let hex = Mop::new(6, [(1, 3), (3, 5), (1, 5)]).unwrap().graph();
        assert_eq!(count_paths(&hex, 3), 33);
        assert_eq!(count_paths(&f6, 0), 6);
        assert_eq!(count_paths(&f6, 1), 9);
    }

    #[test]
    fn for_each_path_agrees_with_count() {
        let g = fan(8).unwrap().graph();
        for k in 0..8 {
            let mut seen = HashSet::new();
            for_each_path(&g, k, |p| {
                assert!(p[0] <= p[p.len() - 1]);
                assert!(seen.insert(p.to_vec()));
            });
            assert_eq!(seen.len() as u64, count_paths(&g, k));
        }
    }

    #[test]
    fn between_examples() {
        let tri = Mop::new(3, []).unwrap().graph();
        assert_eq!(count_paths_between(&tri, 0, 1, 1), 1);
        assert_eq!(count_paths_between(&tri, 0, 1, 2), 1);
        assert_eq!(count_paths_between(&tri, 0, 0, 2), 0);
        let sq = Mop::new(4, [(0, 2)]).unwrap().graph();
        assert_eq!(count_paths_between(&sq, 0, 2, 2), 2);
        for k in 1..4 {
            let from = count_paths_from(&sq, 1, k);
            for v in 0..4 {
                if v != 1 {
                    assert_eq!(from[v], count_paths_between(&sq, 1, v, k));
                }
            }
        }
    }
}
