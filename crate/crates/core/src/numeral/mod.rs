//! Numeral-system graphs `G(N, t)` and the permitted sequences that index
//! families of long paths inside them.

mod inject;
mod sequence;

use crate::error::{precondition, Error, Result};
use crate::graph::{Graph, Mop};

pub use inject::{
    admissible_pair_count, admissible_pairs, path_family_lower_bound, sequence_to_path,
    validate_injection, InjectionReport,
};
pub use sequence::{
    enumerate_permitted, gamma_by_multiplicity, gamma_count, gamma_lower_bound, MultiplicityVector,
    PermittedIter, PermittedSequence, MAX_ENUMERATION_LENGTH,
};

/// Largest vertex count `N^t` we are willing to build.
pub const MAX_NUMERAL_VERTICES: usize = 1_000_000;

/// `G(N, t)`: vertices `0..N^t` read as `t`-digit base-`N` numbers.
#[derive(Debug, Clone)]
pub struct NumeralGraph {
    base: usize,
    digits: usize,
    mop: Mop,
    graph: Graph,
}

impl NumeralGraph {
    pub fn base(&self) -> usize {
        self.base
    }

    pub fn digits(&self) -> usize {
        self.digits
    }

    pub fn order(&self) -> usize {
        self.graph.n()
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn mop(&self) -> &Mop {
        &self.mop
    }
}

/// `N^t`, or `None` on overflow.
pub(crate) fn checked_order(base: usize, digits: usize) -> Option<usize> {
    base.checked_pow(u32::try_from(digits).ok()?)
}

/// Number of trailing zero digits of a nonzero `x` in base `base`.
pub(crate) fn trailing_zeros(mut x: usize, base: usize) -> usize {
    debug_assert!(x != 0);
    let mut z = 0;
    while x % base == 0 {
        x /= base;
        z += 1;
    }
    z
}

/// `x` with its last nonzero base-`base` digit set to zero.
pub(crate) fn zero_last_digit(x: usize, base: usize) -> usize {
    debug_assert!(x != 0);
    let place = base.pow(trailing_zeros(x, base) as u32);
    x - (x / place % base) * place
}

/// Base-`base` digits of `x`, most significant first, padded to `digits`.
pub fn to_digits(mut x: usize, base: usize, digits: usize) -> Vec<usize> {
    let mut out = vec![0; digits];
    for slot in out.iter_mut().rev() {
        *slot = x % base;
        x /= base;
    }
    out
}

pub fn from_digits(ds: &[usize], base: usize) -> usize {
    ds.iter().fold(0, |acc, &d| acc * base + d)
}

/// Adjacency in `G(N, t)` decided from the digit rules alone.
pub fn numeral_adjacent(x: usize, y: usize, base: usize, digits: usize) -> bool {
    let Some(order) = checked_order(base, digits) else {
        return false;
    };
    if x == y || x >= order || y >= order {
        return false;
    }
    // x = r N^s with neighbours (r +- 1) N^s; 0 counts as N^t
    let mut step = 1;
    for _ in 0..digits {
        if x % step != 0 {
            break;
        }
        if (x + step) % order == y || (x + order - step) % order == y {
            return true;
        }
        step *= base;
    }
    (x != 0 && zero_last_digit(x, base) == y) || (y != 0 && zero_last_digit(y, base) == x)
}

pub fn build_numeral_graph(base: usize, digits: usize) -> Result<NumeralGraph> {
    if base < 2 || digits < 1 {
        return Err(precondition(format!("G(N, t) needs N >= 2 and t >= 1, got N = {base}, t = {digits}")));
    }
    let order = match checked_order(base, digits) {
        Some(o) if o <= MAX_NUMERAL_VERTICES => o,
        _ => {
            return Err(Error::GuardExceeded {
                what: "N^t",
                value: checked_order(base, digits).unwrap_or(usize::MAX),
                limit: MAX_NUMERAL_VERTICES,
            })
        }
    };
    if order < 3 {
        return Err(precondition("G(N, t) needs at least 3 vertices"));
    }
    let mut graph = Graph::new(order);
    let mut step = 1;
    for _ in 0..digits {
        for r in (0..order).step_by(step) {
            graph.add_edge(r, (r + step) % order);
        }
        step *= base;
    }
    for x in 1..order {
        let y = zero_last_digit(x, base);
        if y != x {
            graph.add_edge(x, y);
        }
    }
    let mop = Mop::from_graph(&graph)
        .map_err(|e| Error::Internal(format!("G({base}, {digits}) is not triangulated: {e}")))?;
    Ok(NumeralGraph {
        base,
        digits,
        mop,
        graph,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fan;

    #[test]
    fn examples() {
        let g = build_numeral_graph(4, 2).unwrap();
        assert_eq!(g.order(), 16);
        assert_eq!(g.graph().edge_count(), 29);
        assert_eq!(
            g.mop().chords(),
            &[
                (0, 2),
                (0, 3),
                (0, 4),
                (0, 8),
                (0, 12),
                (4, 6),
                (4, 7),
                (4, 8),
                (8, 10),
                (8, 11),
                (8, 12),
                (12, 14),
                (12, 15)
            ]
        );
        assert_eq!(build_numeral_graph(5, 1).unwrap().mop(), &fan(5).unwrap());
        assert!(build_numeral_graph(10, 2).unwrap().graph().has_edge(90, 0));
    }

    #[test]
    fn guards() {
        assert!(build_numeral_graph(1, 3).is_err());
        assert!(build_numeral_graph(3, 0).is_err());
        assert!(build_numeral_graph(2, 1).is_err());
        assert!(matches!(build_numeral_graph(1001, 2), Err(Error::GuardExceeded { .. })));
        assert!(matches!(build_numeral_graph(10, 40), Err(Error::GuardExceeded { .. })));
    }

    #[test]
    fn arithmetic_adjacency_matches_graph() {
        for (base, digits) in [(2, 3), (3, 2), (4, 2), (3, 3), (5, 2), (6, 1)] {
            let g = build_numeral_graph(base, digits).unwrap();
            for x in 0..g.order() {
                for y in 0..g.order() {
                    assert_eq!(
                        numeral_adjacent(x, y, base, digits),
                        g.graph().has_edge(x, y),
                        "N={base} t={digits} ({x},{y})"
                    );
                }
            }
        }
    }

    #[test]
    fn digit_helpers() {
        assert_eq!(to_digits(95, 10, 3), vec![0, 9, 5]);
        assert_eq!(from_digits(&[0, 9, 5], 10), 95);
        assert_eq!(zero_last_digit(950, 10), 900);
        assert_eq!(zero_last_digit(900, 10), 0);
        assert_eq!(trailing_zeros(900, 10), 2);
    }
}
