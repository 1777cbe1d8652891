use super::Mop;
use crate::error::{Error, Result};

/// Default desk-scale limit for triangulation enumeration.
pub const MAX_ENUMERATION_N: usize = 16;

/// Every labelled triangulation of the convex n-gon, each exactly once.
pub fn enumerate_mops(n: usize) -> Result<MopIter> {
    if n > MAX_ENUMERATION_N {
        return Err(Error::GuardExceeded {
            what: "n",
            value: n,
            limit: MAX_ENUMERATION_N,
        });
    }
    Ok(enumerate_mops_unguarded(n))
}

pub fn enumerate_mops_unguarded(n: usize) -> MopIter {
    MopIter::new(n, None)
}

#[derive(Debug, Clone, Copy)]
struct Decision {
    lo: usize,
    hi: usize,
    apex: usize,
    pending_len: usize,
    chords_len: usize,
}

/// Backtracking iterator over triangulations. The sub-polygon on `lo..=hi` is
/// split by choosing the apex of the triangle on its base edge `(lo, hi)`.
#[derive(Debug, Clone)]
pub struct MopIter {
    n: usize,
    root_apex: Option<usize>,
    pending: Vec<(usize, usize)>,
    chords: Vec<(usize, usize)>,
    decisions: Vec<Decision>,
    started: bool,
    done: bool,
}

impl MopIter {
    fn new(n: usize, root_apex: Option<usize>) -> Self {
        let done = n < 3 || root_apex.is_some_and(|a| a == 0 || a + 1 >= n);
        MopIter {
            n,
            root_apex,
            pending: Vec::new(),
            chords: Vec::new(),
            decisions: Vec::new(),
            started: false,
            done,
        }
    }

    /// Only the triangulations whose triangle on the edge `(0, n-1)` has apex
    /// `apex`. The ranges `1..=n-2` partition the full enumeration.
    pub fn with_root_apex(n: usize, apex: usize) -> Self {
        MopIter::new(n, Some(apex))
    }

    fn apply(&mut self, lo: usize, hi: usize, apex: usize, pending_len: usize, chords_len: usize) {
        self.decisions.push(Decision {
            lo,
            hi,
            apex,
            pending_len,
            chords_len,
        });
        if apex - lo >= 2 {
            self.chords.push((lo, apex));
            self.pending.push((lo, apex));
        }
        if hi - apex >= 2 {
            self.chords.push((apex, hi));
            self.pending.push((apex, hi));
        }
    }

    fn descend(&mut self) {
        while let Some((lo, hi)) = self.pending.pop() {
            let (pl, cl) = (self.pending.len(), self.chords.len());
            self.apply(lo, hi, lo + 1, pl, cl);
        }
    }

    fn advance(&mut self) -> bool {
        while let Some(d) = self.decisions.pop() {
            if self.decisions.is_empty() && self.root_apex.is_some() {
                return false;
            }
            self.pending.truncate(d.pending_len);
            self.chords.truncate(d.chords_len);
            if d.apex + 1 < d.hi {
                self.apply(d.lo, d.hi, d.apex + 1, d.pending_len, d.chords_len);
                self.descend();
                return true;
            }
            // exhausted: hand the interval back to whichever decision popped it
            self.pending.push((d.lo, d.hi));
        }
        false
    }

    fn current(&self) -> Mop {
        let mut chords = self.chords.clone();
        chords.sort_unstable();
        Mop::from_sorted_unchecked(self.n, chords)
    }
}

impl Iterator for MopIter {
    type Item = Mop;

    fn next(&mut self) -> Option<Mop> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            match self.root_apex {
                Some(apex) => self.apply(0, self.n - 1, apex, 0, 0),
                None => self.pending.push((0, self.n - 1)),
            }
            self.descend();
            return Some(self.current());
        }
        if self.advance() {
            Some(self.current())
        } else {
            self.done = true;
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::catalan;
    use std::collections::HashSet;

    #[test]
    fn counts_match_catalan() {
        for n in 3..=11 {
            let all: Vec<Mop> = enumerate_mops(n).unwrap().collect();
            assert_eq!(all.len().to_string(), catalan(n - 2).to_string(), "n={n}");
            let distinct: HashSet<_> = all.iter().map(|m| m.chords().to_vec()).collect();
            assert_eq!(distinct.len(), all.len());
            for m in &all {
                // revalidate through the public constructor
                assert_eq!(&Mop::new(n, m.chords().iter().copied()).unwrap(), m);
                assert_eq!(m.edge_count(), 2 * n - 3);
                assert_eq!(m.triangles().len(), n - 2);
            }
        }
    }

    #[test]
    fn small_cases() {
        assert_eq!(enumerate_mops(4).unwrap().count(), 2);
        assert_eq!(enumerate_mops(6).unwrap().count(), 14);
        assert_eq!(enumerate_mops(11).unwrap().count(), 4862);
        assert_eq!(enumerate_mops(2).unwrap().count(), 0);
        assert!(matches!(enumerate_mops(17), Err(Error::GuardExceeded { .. })));
    }

    #[test]
    fn root_apex_partitions() {
        for n in 3..=10 {
            let full: Vec<Mop> = enumerate_mops(n).unwrap().collect();
            let parts: Vec<Mop> = (1..n - 1).flat_map(|a| MopIter::with_root_apex(n, a)).collect();
            assert_eq!(full, parts, "n={n}");
        }
        assert_eq!(MopIter::with_root_apex(6, 0).count(), 0);
        assert_eq!(MopIter::with_root_apex(6, 5).count(), 0);
    }
}
