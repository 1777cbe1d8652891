//! Non-isomorphic trees with a degree bound, generated directly in canonical
//! form: rooted trees are multisets of smaller rooted trees, and a free tree
//! is rooted at its centroid (or split at its bicentroid edge).

use super::Tree;
use crate::error::{precondition, Error, Result};

pub const MAX_TREE_ENUMERATION_N: usize = 12;

/// A child slot: (subtree size, index into the rooted-tree list of that size).
type Slot = (usize, usize);

/// Every isomorphism class of trees on `n` vertices with maximum degree at
/// most `d`, each exactly once.
pub fn enumerate_bounded_trees(n: usize, d: usize) -> Result<std::vec::IntoIter<Tree>> {
    if n > MAX_TREE_ENUMERATION_N {
        return Err(Error::GuardExceeded {
            what: "tree size",
            value: n,
            limit: MAX_TREE_ENUMERATION_N,
        });
    }
    if n == 0 {
        return Err(precondition("trees need at least one vertex"));
    }
    Ok(enumerate_unguarded(n, d).into_iter())
}

fn enumerate_unguarded(n: usize, d: usize) -> Vec<Tree> {
    if n == 1 {
        return vec![Tree::from_parents(&[0])];
    }
    if d == 0 {
        return Vec::new();
    }
    // rooted[s]: rooted trees on s vertices, every vertex with <= d-1 children
    let mut rooted: Vec<Vec<Vec<Slot>>> = vec![Vec::new(); n];
    for s in 1..n {
        let items = slots_below(&rooted, s - 1);
        let mut found = Vec::new();
        multisets(&items, s - 1, d - 1, 0, &mut Vec::new(), &mut found);
        rooted[s] = found;
    }

    let mut out = Vec::new();
    // single centroid: all branches strictly smaller than n/2
    let items: Vec<Slot> = slots_below(&rooted, (n - 1) / 2);
    let mut roots = Vec::new();
    multisets(&items, n - 1, d, 0, &mut Vec::new(), &mut roots);
    for children in roots {
        let mut parent = vec![0usize];
        for &slot in &children {
            materialize(&rooted, slot, 0, &mut parent);
        }
        out.push(Tree::from_parents(&parent));
    }
    // bicentroid: two halves of size n/2 joined by the central edge
    if n % 2 == 0 {
        let half = n / 2;
        for a in 0..rooted[half].len() {
            for b in a..rooted[half].len() {
                let mut parent = vec![0usize];
                materialize_children(&rooted, &rooted[half][a], 0, &mut parent);
                materialize(&rooted, (half, b), 0, &mut parent);
                out.push(Tree::from_parents(&parent));
            }
        }
    }
    out
}

fn slots_below(rooted: &[Vec<Vec<Slot>>], max_size: usize) -> Vec<Slot> {
    (1..=max_size)
        .flat_map(|s| (0..rooted[s].len()).map(move |i| (s, i)))
        .collect()
}

/// Non-decreasing selections from `items` (with repetition) summing to
/// `target`, using at most `max_count` items.
fn multisets(
    items: &[Slot],
    target: usize,
    max_count: usize,
    from: usize,
    current: &mut Vec<Slot>,
    out: &mut Vec<Vec<Slot>>,
) {
    if target == 0 {
        out.push(current.clone());
        return;
    }
    if current.len() == max_count {
        return;
    }
    for i in from..items.len() {
        let (size, _) = items[i];
        if size > target {
            break;
        }
        current.push(items[i]);
        multisets(items, target - size, max_count, i, current, out);
        current.pop();
    }
}

fn materialize(rooted: &[Vec<Vec<Slot>>], (size, idx): Slot, at: usize, parent: &mut Vec<usize>) {
    let v = parent.len();
    parent.push(at);
    materialize_children(rooted, &rooted[size][idx], v, parent);
}

fn materialize_children(rooted: &[Vec<Vec<Slot>>], children: &[Slot], v: usize, parent: &mut Vec<usize>) {
    for &c in children {
        materialize(rooted, c, v, parent);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    /// Labelled trees from Prüfer sequences, filtered by degree and
    /// deduplicated by canonical code.
    fn prufer_classes(n: usize, d: usize) -> HashSet<String> {
        let mut classes = HashSet::new();
        if n <= 2 {
            let edges: Vec<(usize, usize)> = if n == 2 { vec![(0, 1)] } else { vec![] };
            let t = Tree::from_edges(n, edges).unwrap();
            if t.max_degree() <= d {
                classes.insert(t.canonical_code());
            }
            return classes;
        }
        let len = n - 2;
        let mut seq = vec![0usize; len];
        loop {
            let mut degree = vec![1usize; n];
            for &x in &seq {
                degree[x] += 1;
            }
            if degree.iter().all(|&x| x <= d) {
                let mut deg = degree.clone();
                let mut edges = Vec::new();
                for &x in &seq {
                    let leaf = (0..n).find(|&v| deg[v] == 1).unwrap();
                    edges.push((leaf, x));
                    deg[leaf] -= 1;
                    deg[x] -= 1;
                }
                let rest: Vec<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
                edges.push((rest[0], rest[1]));
                classes.insert(Tree::from_edges(n, edges).unwrap().canonical_code());
            }
            // odometer
            let mut i = 0;
            while i < len && seq[i] == n - 1 {
                seq[i] = 0;
                i += 1;
            }
            if i == len {
                break;
            }
            seq[i] += 1;
        }
        classes
    }

    #[test]
    fn examples() {
        assert_eq!(enumerate_bounded_trees(4, 3).unwrap().count(), 2);
        assert_eq!(enumerate_bounded_trees(5, 3).unwrap().count(), 2);
        assert_eq!(enumerate_bounded_trees(7, 3).unwrap().count(), 6);
        assert!(enumerate_bounded_trees(13, 3).is_err());
        assert!(enumerate_bounded_trees(0, 3).is_err());
    }

    #[test]
    fn matches_prufer_oracle() {
        for n in 1..=8 {
            for d in 1..=n {
                let trees: Vec<Tree> = enumerate_bounded_trees(n, d).unwrap().collect();
                let codes: HashSet<String> = trees.iter().map(Tree::canonical_code).collect();
                assert_eq!(codes.len(), trees.len(), "duplicate class n={n} d={d}");
                for t in &trees {
                    assert_eq!(t.n(), n);
                    assert!(t.max_degree() <= d);
                }
                assert_eq!(codes, prufer_classes(n, d), "n={n} d={d}");
            }
        }
    }

    #[test]
    fn binary_tree_counts() {
        // non-isomorphic trees with max degree 3 on 1..=12 vertices
        let expected = [1, 1, 1, 2, 2, 4, 6, 11, 18, 37, 66, 135];
        for (i, &e) in expected.iter().enumerate() {
            assert_eq!(enumerate_bounded_trees(i + 1, 3).unwrap().count(), e, "n={}", i + 1);
        }
    }
}
