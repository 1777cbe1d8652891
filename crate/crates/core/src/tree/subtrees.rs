use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::Tree;

/// For each vertex `v` (tree rooted at 0) and each size `j <= k_max`, the
/// number of `j`-vertex subtrees whose topmost vertex is `v`.
///
/// `f_v = x * prod_children (1 + f_child)`, truncated at degree `k_max`.
#[derive(Debug, Clone)]
pub struct SubtreeTable {
    k_max: usize,
    // per_vertex[v][j], j in 0..=k_max (index 0 always zero)
    per_vertex: Vec<Vec<BigUint>>,
}

impl SubtreeTable {
    pub fn new(t: &Tree, k_max: usize) -> Self {
        let (order, parent) = t.bfs();
        let mut per_vertex: Vec<Vec<BigUint>> = vec![Vec::new(); t.n()];
        for &v in order.iter().rev() {
            // poly = prod over children of (1 + f_child), degree < k_max
            let mut poly = vec![BigUint::zero(); k_max.max(1)];
            poly[0] = BigUint::one();
            for &c in t.neighbors(v) {
                if c == parent[v] {
                    continue;
                }
                let child = &per_vertex[c];
                let mut next = poly.clone();
                for (i, a) in poly.iter().enumerate() {
                    if a.is_zero() {
                        continue;
                    }
                    for (j, b) in child.iter().enumerate().skip(1) {
                        if i + j >= poly.len() {
                            break;
                        }
                        if !b.is_zero() {
                            next[i + j] += a * b;
                        }
                    }
                }
                poly = next;
            }
            let mut f = vec![BigUint::zero(); k_max + 1];
            for (i, a) in poly.into_iter().enumerate() {
                if i < k_max {
                    f[i + 1] = a;
                }
            }
            per_vertex[v] = f;
        }
        SubtreeTable { k_max, per_vertex }
    }

    pub fn k_max(&self) -> usize {
        self.k_max
    }

    /// Subtrees of size `j` with topmost vertex `v`.
    pub fn at(&self, v: usize, j: usize) -> &BigUint {
        &self.per_vertex[v][j]
    }

    /// `g_j(T)`: all `j`-vertex subtrees.
    pub fn count(&self, j: usize) -> BigUint {
        if j > self.k_max {
            return BigUint::zero();
        }
        self.per_vertex.iter().map(|f| &f[j]).sum()
    }

    /// `g_1(T), ..., g_{k_max}(T)`.
    pub fn sequence(&self) -> Vec<BigUint> {
        (1..=self.k_max).map(|j| self.count(j)).collect()
    }
}

/// Number of connected `k`-vertex subtrees of `t`.
pub fn count_subtrees_k(t: &Tree, k: usize) -> BigUint {
    if k == 0 || k > t.n() {
        return BigUint::zero();
    }
    SubtreeTable::new(t, k).count(k)
}

/// Total number of subtrees of every size.
pub fn count_subtrees_total(t: &Tree) -> BigUint {
    // h_v = prod over children (1 + h_child); each subtree counted at its top
    let (order, parent) = t.bfs();
    let mut h = vec![BigUint::zero(); t.n()];
    for &v in order.iter().rev() {
        let mut acc = BigUint::one();
        for &c in t.neighbors(v) {
            if c != parent[v] {
                acc *= BigUint::one() + &h[c];
            }
        }
        h[v] = acc;
    }
    h.into_iter().sum()
}

/// Sum of distances over unordered vertex pairs, via edge cuts:
/// each edge separates `s` and `n - s` vertices and lies on `s (n - s)` paths.
pub fn wiener(t: &Tree) -> u64 {
    let n = t.n() as u64;
    let (order, parent) = t.bfs();
    let mut size = vec![1u64; t.n()];
    let mut total = 0;
    for &v in order.iter().rev() {
        if v != 0 {
            total += size[v] * (n - size[v]);
            size[parent[v]] += size[v];
        }
    }
    total
}
