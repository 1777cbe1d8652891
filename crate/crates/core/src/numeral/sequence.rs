use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{precondition, Error, Result};
use crate::exactmath::binomial;

pub const MAX_ENUMERATION_LENGTH: usize = 20;

/// `gamma_1 = 0`, `gamma_{i+1} <= gamma_i + 1`, every value at most `t - 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PermittedSequence {
    values: Vec<usize>,
    t: usize,
}

impl PermittedSequence {
    pub fn new(values: Vec<usize>, t: usize) -> Result<Self> {
        if t < 2 {
            return Err(precondition(format!("value cap needs t >= 2, got {t}")));
        }
        if values.first().is_some_and(|&v| v != 0) {
            return Err(precondition("permitted sequences start with 0"));
        }
        if let Some(w) = values.windows(2).find(|w| w[1] > w[0] + 1) {
            return Err(precondition(format!("step {} -> {} rises by more than one", w[0], w[1])));
        }
        if let Some(&v) = values.iter().find(|&&v| v > t - 2) {
            return Err(precondition(format!("value {v} exceeds t - 2 = {}", t - 2)));
        }
        Ok(PermittedSequence { values, t })
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn t(&self) -> usize {
        self.t
    }

    /// Occurrence counts of `0, 1, ..., max value`.
    pub fn multiplicities(&self) -> MultiplicityVector {
        let top = self.values.iter().copied().max().map_or(0, |m| m + 1);
        let mut m = vec![0; top];
        for &v in &self.values {
            m[v] += 1;
        }
        MultiplicityVector(m)
    }
}

/// `m_i` = number of occurrences of value `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiplicityVector(pub Vec<usize>);

impl MultiplicityVector {
    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }
}

/// `Gamma(len, t)`: permitted sequences of length `len` with values `<= t - 2`.
/// The empty sequence counts once.
pub fn gamma_count(len: usize, t: usize) -> Result<BigUint> {
    if t < 2 {
        return Err(precondition(format!("value cap needs t >= 2, got {t}")));
    }
    if len == 0 {
        return Ok(BigUint::one());
    }
    let top = t - 2;
    // ways[v]: prefixes ending at value v
    let mut ways = vec![BigUint::zero(); top + 1];
    ways[0] = BigUint::one();
    for _ in 1..len {
        // w may follow v iff v >= w - 1, so next[w] is a suffix sum of ways
        let mut suffix = vec![BigUint::zero(); top + 2];
        for v in (0..=top).rev() {
            suffix[v] = &suffix[v + 1] + &ways[v];
        }
        ways = (0..=top).map(|w| suffix[w.saturating_sub(1)].clone()).collect();
    }
    Ok(ways.into_iter().sum())
}

/// Lexicographic enumeration of permitted sequences.
#[derive(Debug, Clone)]
pub struct PermittedIter {
    t: usize,
    current: Option<Vec<usize>>,
}

pub fn enumerate_permitted(len: usize, t: usize) -> Result<PermittedIter> {
    if len > MAX_ENUMERATION_LENGTH {
        return Err(Error::GuardExceeded {
            what: "sequence length",
            value: len,
            limit: MAX_ENUMERATION_LENGTH,
        });
    }
    if t < 2 {
        return Err(precondition(format!("value cap needs t >= 2, got {t}")));
    }
    Ok(PermittedIter {
        t,
        current: Some(vec![0; len]),
    })
}

impl Iterator for PermittedIter {
    type Item = PermittedSequence;

    fn next(&mut self) -> Option<PermittedSequence> {
        let out = self.current.take()?;
        let mut succ = out.clone();
        let cap = self.t - 2;
        // rightmost position that can still grow; everything after resets to 0
        if let Some(i) = (1..succ.len()).rev().find(|&i| succ[i] < (succ[i - 1] + 1).min(cap)) {
            succ[i] += 1;
            succ[i + 1..].iter_mut().for_each(|v| *v = 0);
            self.current = Some(succ);
        }
        Some(PermittedSequence {
            values: out,
            t: self.t,
        })
    }
}

/// Number of permitted sequences in which value `i` occurs exactly `m_i > 0`
/// times: `prod_i binom(m_i + m_{i+1} - 1, m_i - 1)`.
pub fn gamma_by_multiplicity(m: &MultiplicityVector) -> Result<BigUint> {
    if m.0.is_empty() || m.0.contains(&0) {
        return Err(precondition("every multiplicity must be positive"));
    }
    Ok(m.0
        .windows(2)
        .map(|w| binomial((w[0] + w[1] - 1) as u64, (w[0] - 1) as u64))
        .product())
}

/// `2^(2k - 5t) / (2 sqrt(k))^sqrt(k)` with `t = floor(sqrt(k)) >= 4`.
pub fn gamma_lower_bound(k: usize) -> Result<f64> {
    if k < 16 {
        return Err(precondition(format!("gamma lower bound needs k >= 16, got {k}")));
    }
    let t = k.isqrt() as f64;
    let kf = k as f64;
    let ln = (2.0 * kf - 5.0 * t) * 2f64.ln() - kf.sqrt() * (2.0 * kf.sqrt()).ln();
    Ok(ln.exp())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::catalan;

    /// All sequences over `0..=t-2`, filtered by the rules.
    fn brute(len: usize, t: usize) -> Vec<Vec<usize>> {
        let cap = t - 1;
        let mut out = Vec::new();
        let total = cap.pow(len as u32);
        for code in 0..total {
            let mut x = code;
            let mut seq = vec![0; len];
            for slot in seq.iter_mut().rev() {
                *slot = x % cap;
                x /= cap;
            }
            if PermittedSequence::new(seq.clone(), t).is_ok() {
                out.push(seq);
            }
        }
        out.sort();
        out
    }

    #[test]
    fn count_examples() {
        assert_eq!(gamma_count(2, 3).unwrap(), BigUint::from(2u32));
        assert_eq!(gamma_count(3, 3).unwrap(), BigUint::from(4u32));
        assert_eq!(gamma_count(3, 4).unwrap(), BigUint::from(5u32));
        assert_eq!(gamma_count(0, 5).unwrap(), BigUint::one());
        assert!(gamma_count(3, 1).is_err());
    }

    #[test]
    fn enumeration_examples() {
        let one: Vec<_> = enumerate_permitted(1, 7).unwrap().map(|s| s.values().to_vec()).collect();
        assert_eq!(one, vec![vec![0]]);
        let two: Vec<_> = enumerate_permitted(2, 2).unwrap().map(|s| s.values().to_vec()).collect();
        assert_eq!(two, vec![vec![0, 0]]);
        let four: Vec<_> = enumerate_permitted(4, 2).unwrap().map(|s| s.values().to_vec()).collect();
        assert_eq!(four, vec![vec![0, 0, 0, 0]]);
        assert_eq!(enumerate_permitted(0, 3).unwrap().count(), 1);
        assert!(enumerate_permitted(21, 3).is_err());
    }

    #[test]
    fn enumeration_matches_brute_force_and_dp() {
        for t in 2..=6 {
            for len in 1..=8 {
                let listed: Vec<Vec<usize>> =
                    enumerate_permitted(len, t).unwrap().map(|s| s.values().to_vec()).collect();
                assert_eq!(listed, brute(len, t), "len={len} t={t}");
                assert_eq!(gamma_count(len, t).unwrap(), BigUint::from(listed.len()));
            }
        }
    }

    #[test]
    fn uncapped_counts_are_catalan() {
        for len in 0..=12 {
            assert_eq!(gamma_count(len, (len + 1).max(2)).unwrap(), catalan(len));
        }
    }

    #[test]
    fn multiplicity_examples() {
        let mv = |v: &[usize]| MultiplicityVector(v.to_vec());
        assert_eq!(gamma_by_multiplicity(&mv(&[2, 1])).unwrap(), BigUint::from(2u32));
        assert_eq!(gamma_by_multiplicity(&mv(&[1, 1])).unwrap(), BigUint::from(1u32));
        assert_eq!(gamma_by_multiplicity(&mv(&[3, 2, 1])).unwrap(), BigUint::from(12u32));
        assert_eq!(gamma_by_multiplicity(&mv(&[4])).unwrap(), BigUint::from(1u32));
        assert!(gamma_by_multiplicity(&mv(&[2, 0, 1])).is_err());
        assert!(gamma_by_multiplicity(&mv(&[])).is_err());
        let filtered = brute(6, 4)
            .into_iter()
            .filter(|s| PermittedSequence::new(s.clone(), 4).unwrap().multiplicities() == mv(&[3, 2, 1]))
            .count();
        assert_eq!(filtered, 12);
    }

    fn compositions(total: usize, max_parts: usize) -> Vec<Vec<usize>> {
        if total == 0 {
            return vec![vec![]];
        }
        if max_parts == 0 {
            return vec![];
        }
        let mut out = Vec::new();
        for first in 1..=total {
            for mut rest in compositions(total - first, max_parts - 1) {
                rest.insert(0, first);
                out.push(rest);
            }
        }
        out
    }

    #[test]
    fn product_formula_decomposes_gamma() {
        use std::collections::HashMap;
        for t in 2..=5 {
            for len in 1..=10 {
                let mut groups: HashMap<MultiplicityVector, usize> = HashMap::new();
                for s in enumerate_permitted(len, t).unwrap() {
                    *groups.entry(s.multiplicities()).or_default() += 1;
                }
                for (m, c) in &groups {
                    assert_eq!(m.total(), len);
                    assert_eq!(gamma_by_multiplicity(m).unwrap(), BigUint::from(*c), "{m:?}");
                }
                let summed: BigUint = compositions(len, t - 1)
                    .into_iter()
                    .map(|m| gamma_by_multiplicity(&MultiplicityVector(m)).unwrap())
                    .sum();
                assert_eq!(summed, gamma_count(len, t).unwrap(), "len={len} t={t}");
            }
        }
    }

    #[test]
    fn validation() {
        assert!(PermittedSequence::new(vec![1], 4).is_err());
        assert!(PermittedSequence::new(vec![0, 2], 5).is_err());
        assert!(PermittedSequence::new(vec![0, 1, 2], 3).is_err());
        assert!(PermittedSequence::new(vec![0, 1, 1, 0], 3).is_ok());
        assert!(PermittedSequence::new(vec![], 1).is_err());
    }

    #[test]
    fn lower_bound_examples() {
        assert!(gamma_lower_bound(15).is_err());
        assert!((gamma_lower_bound(16).unwrap() - 1.0).abs() < 1e-12);
        assert!((gamma_lower_bound(25).unwrap() - 335.54432).abs() < 1e-6);
    }
}
