//! Explicit extremal and near-extremal constructions.

use super::{count_embeddings, enumerate_mops_unguarded, Graph, Mop, PatternGraph};
use crate::error::{precondition, Error, Result};

/// Largest non-tree pattern whose outerplanarity is checked by enumeration.
const MAX_OUTERPLANARITY_CHECK: usize = 9;

/// The fan `K_1 + P_{n-1}`: polygon `0..n` with chords `(0, j)`, `2 <= j <= n-2`.
pub fn fan(n: usize) -> Result<Mop> {
    if n < 3 {
        return Err(precondition(format!("fan needs n >= 3, got {n}")));
    }
    Mop::new(n, (2..n - 1).map(|j| (0, j)))
}

/// Closed-form number of paths with `k` edges in `fan(n)`, for `n > k >= 3`.
pub fn fan_path_formula(n: usize, k: usize) -> Result<u64> {
    if !(k >= 3 && n > k) {
        return Err(precondition(format!("fan path formula needs n > k >= 3, got n = {n}, k = {k}")));
    }
    let (n, k) = (n as u64, k as u64);
    let m = n + 1 - k;
    Ok(4 * (k - 2) * (m * (m - 1) / 2) + 3 * (n - k) - 1)
}

/// Three fans on `n/3 + 1` vertices glued cyclically, each hub identified with
/// the far path end of the previous fan. Hubs sit at `0`, `n/3`, `2n/3` and
/// span a triangular face.
pub fn triple_fan(n: usize) -> Result<Mop> {
    if n < 6 || n % 3 != 0 {
        return Err(precondition(format!("triple fan needs n divisible by 3 and n >= 6, got {n}")));
    }
    let m = n / 3;
    let mut chords = Vec::with_capacity(n - 3);
    for c in 0..3 {
        let hub = c * m;
        chords.extend((2..m).map(|j| (hub, hub + j)));
        chords.push((hub, (hub + m) % n));
    }
    Mop::new(n, chords).map_err(|e| Error::Internal(format!("triple fan construction: {e}")))
}

/// Number of degree-one vertices.
pub fn leaf_count(g: &Graph) -> usize {
    (0..g.n()).filter(|&v| g.degree(v) == 1).count()
}

/// Outerplanarity of a small pattern: it embeds into some triangulated
/// polygon on the same number of vertices.
fn is_outerplanar_small(h: &PatternGraph) -> Result<bool> {
    let g = h.graph();
    if g.edge_count() + 1 == g.n() || g.n() <= 3 {
        return Ok(true);
    }
    if g.n() > MAX_OUTERPLANARITY_CHECK {
        return Err(Error::GuardExceeded {
            what: "non-tree pattern vertices",
            value: g.n(),
            limit: MAX_OUTERPLANARITY_CHECK,
        });
    }
    if g.edge_count() > 2 * g.n() - 3 {
        return Ok(false);
    }
    Ok(enumerate_mops_unguarded(g.n()).any(|m| count_embeddings(&m.graph(), h) > 0))
}

/// Replaces every pendant edge of `h` by a star with `s` leaves hanging off
/// the pendant edge's inner endpoint. The result contains at least
/// `s^leaf_count(h)` copies of `h`.
pub fn star_blowup(h: &PatternGraph, s: usize) -> Result<Graph> {
    let g = h.graph();
    if g.n() < 3 {
        return Err(precondition("star blow-up needs a pattern on at least 3 vertices"));
    }
    if s == 0 {
        return Err(precondition("star size must be at least 1"));
    }
    if !is_outerplanar_small(h)? {
        return Err(Error::NotOuterplanar(format!("{:?}", g.edges())));
    }
    let is_leaf: Vec<bool> = (0..g.n()).map(|v| g.degree(v) == 1).collect();
    let mut index = vec![usize::MAX; g.n()];
    let mut kept = 0;
    for v in 0..g.n() {
        if !is_leaf[v] {
            index[v] = kept;
            kept += 1;
        }
    }
    let leaves = is_leaf.iter().filter(|&&l| l).count();
    let mut out = Graph::new(kept + leaves * s);
    for (u, v) in g.edges() {
        if !is_leaf[u] && !is_leaf[v] {
            out.add_edge(index[u], index[v]);
        }
    }
    let mut next = kept;
    for leaf in (0..g.n()).filter(|&v| is_leaf[v]) {
        let anchor = index[g.neighbors(leaf)[0]];
        for _ in 0..s {
            out.add_edge(anchor, next);
            next += 1;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{count_paths, subgraph_count};

    #[test]
    fn fan_shapes() {
        assert_eq!(fan(3).unwrap(), Mop::new(3, []).unwrap());
        assert_eq!(fan(5).unwrap().edge_count(), 7);
        assert_eq!(count_paths(&fan(6).unwrap().graph(), 3), 32);
        assert!(fan(2).is_err());
    }

    #[test]
    fn fan_formula_values() {
        assert_eq!(fan_path_formula(6, 3).unwrap(), 32);
        assert_eq!(fan_path_formula(7, 3).unwrap(), 51);
        assert_eq!(fan_path_formula(7, 6).unwrap(), 18);
        assert!(fan_path_formula(5, 5).is_err());
        assert!(fan_path_formula(5, 2).is_err());
        let f7 = fan(7).unwrap().graph();
        assert_eq!(count_paths(&f7, 3), 51);
        assert_eq!(count_paths(&f7, 6), 18);
    }

    #[test]
    fn triple_fan_shapes() {
        let t6 = triple_fan(6).unwrap();
        assert_eq!(t6.chords(), &[(0, 2), (0, 4), (2, 4)]);
        assert_eq!(count_paths(&t6.graph(), 3), 33);
        let t9 = triple_fan(9).unwrap();
        assert_eq!(t9.n(), 9);
        assert_eq!(t9.edge_count(), 15);
        assert!(triple_fan(7).is_err());
        assert!(triple_fan(3).is_err());
        for n in (6..=60).step_by(3) {
            assert!(triple_fan(n).is_ok());
        }
    }

    #[test]
    fn leaves() {
        assert_eq!(leaf_count(&Graph::path(3)), 2);
        assert_eq!(leaf_count(&Graph::star(3)), 3);
        assert_eq!(leaf_count(&Graph::cycle(5)), 0);
    }

    #[test]
    fn blowup_copy_counts() {
        let p4 = PatternGraph::path(3);
        let g = star_blowup(&p4, 5).unwrap();
        assert!(subgraph_count(&g, &p4) >= 25);
        let p3 = PatternGraph::path(2);
        let g = star_blowup(&p3, 3).unwrap();
        assert!(subgraph_count(&g, &p3) >= 9);
        let k13 = PatternGraph::star(3);
        let g = star_blowup(&k13, 2).unwrap();
        assert!(subgraph_count(&g, &k13) >= 8);
    }

    #[test]
    fn blowup_rejects() {
        assert!(star_blowup(&PatternGraph::path(1), 3).is_err());
        assert!(star_blowup(&PatternGraph::path(3), 0).is_err());
        let k4 = PatternGraph::new(Graph::complete(4)).unwrap();
        assert!(matches!(star_blowup(&k4, 2), Err(Error::NotOuterplanar(_))));
        // K_{2,3}
        let k23 = Graph::from_edges(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
        let k23 = PatternGraph::new(k23).unwrap();
        assert!(matches!(star_blowup(&k23, 2), Err(Error::NotOuterplanar(_))));
        // a triangle with a pendant edge is outerplanar
        let kite = Graph::from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
        let kite = PatternGraph::new(kite).unwrap();
        let g = star_blowup(&kite, 4).unwrap();
        assert!(subgraph_count(&g, &kite) >= 4);
    }
}
