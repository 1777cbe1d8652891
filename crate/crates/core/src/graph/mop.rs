use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{precondition, Error, Result};

/// A maximal outerplanar graph: the convex polygon `0, 1, ..., n-1` together
/// with `n - 3` pairwise non-crossing chords.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "MopRepr")]
pub struct Mop {
    n: usize,
    chords: Vec<(usize, usize)>,
}

#[derive(Deserialize)]
struct MopRepr {
    n: usize,
    chords: Vec<(usize, usize)>,
}

impl TryFrom<MopRepr> for Mop {
    type Error = Error;

    fn try_from(r: MopRepr) -> Result<Self> {
        Mop::new(r.n, r.chords)
    }
}

impl Mop {
    /// Validates a chord set. Chords may be given in either orientation.
    pub fn new<I>(n: usize, chords: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n < 3 {
            return Err(precondition(format!("a polygon needs n >= 3, got {n}")));
        }
        let mut list: Vec<(usize, usize)> = Vec::new();
        for (a, b) in chords {
            let (i, j) = if a < b { (a, b) } else { (b, a) };
            if j >= n || j - i < 2 || (i == 0 && j == n - 1) {
                return Err(Error::InvalidChord(a, b, n));
            }
            list.push((i, j));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateChord(w[0].0, w[0].1));
        }
        check_non_crossing(n, &list)?;
        if list.len() != n - 3 {
            return Err(Error::WrongChordCount {
                n,
                expected: n - 3,
                found: list.len(),
            });
        }
        Ok(Mop { n, chords: list })
    }

    /// Trusted constructor for chord sets produced by the enumerator.
    pub(crate) fn from_sorted_unchecked(n: usize, chords: Vec<(usize, usize)>) -> Self {
        debug_assert!(chords.windows(2).all(|w| w[0] < w[1]));
        Mop { n, chords }
    }

    /// Reads a graph whose outer cycle is `0, 1, ..., n-1` as a MOP.
    pub fn from_graph(g: &Graph) -> Result<Self> {
        let n = g.n();
        if n < 3 {
            return Err(precondition(format!("a polygon needs n >= 3, got {n}")));
        }
        for v in 0..n {
            if !g.has_edge(v, (v + 1) % n) {
                return Err(precondition(format!(
                    "outer cycle edge ({v}, {}) missing",
                    (v + 1) % n
                )));
            }
        }
        let chords = g
            .edges()
            .into_iter()
            .filter(|&(u, v)| v - u != 1 && !(u == 0 && v == n - 1));
        Mop::new(n, chords)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Chords `(i, j)` with `i < j`, sorted.
    pub fn chords(&self) -> &[(usize, usize)] {
        &self.chords
    }

    pub fn edge_count(&self) -> usize {
        self.n + self.chords.len()
    }

    pub fn graph(&self) -> Graph {
        let mut g = Graph::new(self.n);
        for v in 0..self.n {
            g.add_edge(v, (v + 1) % self.n);
        }
        for &(i, j) in &self.chords {
            g.add_edge(i, j);
        }
        g
    }

    /// The `n - 2` triangular faces, found by repeatedly clipping degree-2 ears.
    /// Each triangle is returned with its vertices sorted.
    pub fn triangles(&self) -> Vec<[usize; 3]> {
        let n = self.n;
        let mut degree = vec![2usize; n];
        for &(i, j) in &self.chords {
            degree[i] += 1;
            degree[j] += 1;
        }
        let mut prev: Vec<usize> = (0..n).map(|v| (v + n - 1) % n).collect();
        let mut next: Vec<usize> = (0..n).map(|v| (v + 1) % n).collect();
        let mut removed = vec![false; n];
        let mut ears: Vec<usize> = (0..n).rev().filter(|&v| degree[v] == 2).collect();
        let mut remaining = n;
        let mut out = Vec::with_capacity(n - 2);

        while remaining > 3 {
            let v = ears.pop().expect("a MOP with more than 3 vertices has an ear");
            if removed[v] || degree[v] != 2 {
                continue;
            }
            let (p, q) = (prev[v], next[v]);
            out.push(sorted3(p, v, q));
            removed[v] = true;
            remaining -= 1;
            next[p] = q;
            prev[q] = p;
            for w in [p, q] {
                degree[w] -= 1;
                if degree[w] == 2 {
                    ears.push(w);
                }
            }
        }
        let a = (0..n).find(|&v| !removed[v]).expect("three vertices remain");
        out.push(sorted3(a, next[a], next[next[a]]));
        out
    }

    /// Lexicographically least chord list over the dihedral images of the
    /// polygon. A MOP has a unique Hamiltonian cycle, so two MOPs are
    /// isomorphic exactly when these forms agree.
    pub fn canonical_form(&self) -> Vec<(usize, usize)> {
        let n = self.n;
        let mut best: Option<Vec<(usize, usize)>> = None;
        let mut image = Vec::with_capacity(self.chords.len());
        for r in 0..n {
            for reflect in [false, true] {
                image.clear();
                let map = |v: usize| if reflect { (r + n - v) % n } else { (v + r) % n };
                image.extend(self.chords.iter().map(|&(i, j)| {
                    let (a, b) = (map(i), map(j));
                    if a < b {
                        (a, b)
                    } else {
                        (b, a)
                    }
                }));
                image.sort_unstable();
                if best.as_ref().is_none_or(|b| image < *b) {
                    best = Some(image.clone());
                }
            }
        }
        best.unwrap_or_default()
    }

    pub fn is_isomorphic(&self, other: &Mop) -> bool {
        self.n == other.n && self.canonical_form() == other.canonical_form()
    }
}

fn sorted3(a: usize, b: usize, c: usize) -> [usize; 3] {
    let mut t = [a, b, c];
    t.sort_unstable();
    t
}

/// Sweep around the polygon keeping open chords on a stack: properly nested
/// chords always close at the top of the stack.
fn check_non_crossing(n: usize, sorted: &[(usize, usize)]) -> Result<()> {
    let mut ends = vec![0usize; n];
    for &(_, j) in sorted {
        ends[j] += 1;
    }
    // chords starting at each vertex, longest first
    let mut starts: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for &(i, j) in sorted.iter().rev() {
        starts[i].push((i, j));
    }
    let mut stack: Vec<(usize, usize)> = Vec::new();
    for p in 0..n {
        let mut need = ends[p];
        while need > 0 {
            match stack.last() {
                Some(&(_, b)) if b == p => {
                    stack.pop();
                    need -= 1;
                }
                Some(&top) => {
                    let closing = stack
                        .iter()
                        .rev()
                        .find(|c| c.1 == p)
                        .copied()
                        .expect("chord ending here is open");
                    return Err(Error::CrossingChords {
                        first: closing,
                        second: top,
                    });
                }
                None => unreachable!("chord closed before it opened"),
            }
        }
        stack.extend(starts[p].iter().copied());
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn crosses(a: (usize, usize), b: (usize, usize)) -> bool {
        let (a, b) = if a < b { (a, b) } else { (b, a) };
        a.0 < b.0 && b.0 < a.1 && a.1 < b.1
    }

    #[test]
    fn examples() {
        let tri = Mop::new(3, []).unwrap();
        assert_eq!(tri.edge_count(), 3);
        let fan5 = Mop::new(5, [(0, 2), (0, 3)]).unwrap();
        assert_eq!(fan5.edge_count(), 7);
        assert_eq!(
            Mop::new(4, [(0, 2), (1, 3)]),
            Err(Error::CrossingChords {
                first: (0, 2),
                second: (1, 3)
            })
        );
    }

    #[test]
    fn error_paths() {
        assert!(matches!(Mop::new(2, []), Err(Error::Precondition(_))));
        assert_eq!(Mop::new(5, [(0, 2), (2, 0)]), Err(Error::DuplicateChord(0, 2)));
        assert_eq!(Mop::new(5, [(0, 1), (0, 3)]), Err(Error::InvalidChord(0, 1, 5)));
        assert_eq!(Mop::new(5, [(4, 0), (0, 3)]), Err(Error::InvalidChord(4, 0, 5)));
        assert_eq!(Mop::new(5, [(0, 7)]), Err(Error::InvalidChord(0, 7, 5)));
        assert_eq!(
            Mop::new(5, [(0, 2)]),
            Err(Error::WrongChordCount {
                n: 5,
                expected: 2,
                found: 1
            })
        );
    }

    #[test]
    fn sweep_agrees_with_pairwise_check() {
        // every pair of chords of a hexagon, plus a few triples
        let n = 7;
        let all: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i + 2..n).map(move |j| (i, j)))
            .filter(|&(i, j)| !(i == 0 && j == n - 1))
            .collect();
        for a in 0..all.len() {
            for b in a + 1..all.len() {
                for c in b + 1..all.len() {
                    let set = [all[a], all[b], all[c]];
                    let mut sorted = set.to_vec();
                    sorted.sort();
                    let pairwise = set
                        .iter()
                        .enumerate()
                        .any(|(x, &p)| set[x + 1..].iter().any(|&q| crosses(p, q)));
                    assert_eq!(check_non_crossing(n, &sorted).is_err(), pairwise, "{set:?}");
                }
            }
        }
    }

    #[test]
    fn triangles_of_fan_and_hexagon() {
        let fan5 = Mop::new(5, [(0, 2), (0, 3)]).unwrap();
        let mut t = fan5.triangles();
        t.sort();
        assert_eq!(t, vec![[0, 1, 2], [0, 2, 3], [0, 3, 4]]);
        let hex = Mop::new(6, [(0, 2), (2, 4), (0, 4)]).unwrap();
        let mut t = hex.triangles();
        t.sort();
        assert_eq!(t, vec![[0, 1, 2], [0, 2, 4], [0, 4, 5], [2, 3, 4]]);
    }

    #[test]
    fn from_graph_round_trip_and_json() {
        let m = Mop::new(6, [(0, 2), (2, 4), (0, 4)]).unwrap();
        assert_eq!(Mop::from_graph(&m.graph()).unwrap(), m);
        let s = serde_json::to_string(&m).unwrap();
        assert_eq!(s, r#"{"n":6,"chords":[[0,2],[0,4],[2,4]]}"#);
        assert_eq!(serde_json::from_str::<Mop>(&s).unwrap(), m);
        assert!(serde_json::from_str::<Mop>(r#"{"n":4,"chords":[[0,2],[1,3]]}"#).is_err());
        let mut g = m.graph();
        g = Graph::from_edges(6, g.edges().into_iter().filter(|&e| e != (0, 1))).unwrap();
        assert!(Mop::from_graph(&g).is_err());
    }

    #[test]
    fn canonical_form_identifies_rotations() {
        let a = Mop::new(6, [(0, 2), (0, 3), (0, 4)]).unwrap();
        let b = Mop::new(6, [(1, 3), (1, 4), (1, 5)]).unwrap();
        let c = Mop::new(6, [(0, 2), (2, 4), (0, 4)]).unwrap();
        assert!(a.is_isomorphic(&b));
        assert!(!a.is_isomorphic(&c));
    }
}
