use std::collections::{BTreeSet, HashSet};

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{
    build_numeral_graph, checked_order, enumerate_permitted, from_digits, gamma_count, numeral_adjacent,
    to_digits, trailing_zeros, zero_last_digit, PermittedSequence,
};
use crate::error::{precondition, Error, Result};

/// Above this many admissible pairs we sample instead of enumerating.
const EXHAUSTIVE_PAIR_LIMIT: u128 = 10_000;
const SAMPLE_SIZE: usize = 100;
const SAMPLE_SEED: u64 = 0x05ee_d0f9_a7b5;

/// The `k`-edge path from `A` to `B` in `G(N, t)` indexed by `seq`.
///
/// The first `k - 2t` steps follow the sequence; the walk then zeroes the
/// remaining nonzero digits right to left until it reaches 0, fills in the
/// first `t - 1` digits of `B`, jumps to `B - m` and climbs to `B` in `m`
/// unit steps, where `m = t - t'` and `t'` is the number of zeroing steps.
pub fn sequence_to_path(
    a: usize,
    b: usize,
    seq: &PermittedSequence,
    base: usize,
    t: usize,
    k: usize,
) -> Result<Vec<usize>> {
    check_endpoints(a, b, base, t, k)?;
    if seq.t() != t || seq.len() + 2 * t != k {
        return Err(precondition(format!(
            "sequence has length {} and cap parameter {}, expected {} and {t}",
            seq.len(),
            seq.t(),
            k - 2 * t
        )));
    }

    let mut path = Vec::with_capacity(k + 1);
    path.push(a);
    let mut cur = a;
    for &g in seq.values() {
        let q = trailing_zeros(cur, base);
        cur = if g == q + 1 {
            zero_last_digit(cur, base)
        } else if g <= q {
            cur - base.pow(g as u32)
        } else {
            return Err(Error::Internal(format!("sequence value {g} unreachable from {cur}")));
        };
        path.push(cur);
    }
    let mut zeroing = 0;
    while cur != 0 {
        cur = zero_last_digit(cur, base);
        path.push(cur);
        zeroing += 1;
    }
    let bd = to_digits(b, base, t);
    let mut prefix = vec![0; t];
    for i in 0..t - 1 {
        prefix[i] = bd[i];
        path.push(from_digits(&prefix, base));
    }
    let m = t - zeroing;
    prefix[t - 1] = bd[t - 1] - m;
    path.push(from_digits(&prefix, base));
    for _ in 0..m {
        prefix[t - 1] += 1;
        path.push(from_digits(&prefix, base));
    }

    if path.len() != k + 1 || path.last() != Some(&b) {
        return Err(Error::Internal(format!("built a walk of {} vertices ending at {:?}", path.len(), path.last())));
    }
    if let Some(w) = path.windows(2).find(|w| !numeral_adjacent(w[0], w[1], base, t)) {
        return Err(Error::Internal(format!("{} and {} are not adjacent in G({base}, {t})", w[0], w[1])));
    }
    if path.iter().collect::<HashSet<_>>().len() != path.len() {
        return Err(Error::Internal(format!("walk {path:?} repeats a vertex")));
    }
    Ok(path)
}

fn check_endpoints(a: usize, b: usize, base: usize, t: usize, k: usize) -> Result<()> {
    if t < 2 {
        return Err(precondition(format!("injection needs t >= 2, got {t}")));
    }
    if k < 2 * t || k >= base {
        return Err(precondition(format!("need 2t <= k < N, got t = {t}, k = {k}, N = {base}")));
    }
    let order = checked_order(base, t).ok_or_else(|| precondition("N^t overflows"))?;
    if a >= order || b >= order {
        return Err(precondition(format!("endpoints must be below N^t = {order}")));
    }
    let (ad, bd) = (to_digits(a, base, t), to_digits(b, base, t));
    if ad.iter().chain(&bd).any(|&d| d < k) {
        return Err(precondition(format!("every digit of A and B must be at least k = {k}")));
    }
    if ad[0] == bd[0] {
        return Err(precondition("A and B must differ in their first digit"));
    }
    Ok(())
}

/// `(N - k)^(2t - 1) (N - k - 1)`: ordered pairs with all digits `>= k` and
/// distinct first digits.
pub fn admissible_pair_count(base: usize, t: usize, k: usize) -> u128 {
    if k >= base {
        return 0;
    }
    let free = (base - k) as u128;
    free.saturating_pow(2 * t as u32 - 1).saturating_mul(free - 1)
}

/// All admissible pairs when there are at most 10^4 of them, otherwise a
/// reproducible sample of 100 distinct pairs. The flag reports which.
pub fn admissible_pairs(base: usize, t: usize, k: usize) -> Result<(Vec<(usize, usize)>, bool)> {
    if t < 1 || k + 1 >= base {
        return Err(precondition(format!("no admissible pairs for N = {base}, t = {t}, k = {k}")));
    }
    checked_order(base, t).ok_or_else(|| precondition("N^t overflows"))?;
    let total = admissible_pair_count(base, t, k);
    if total <= EXHAUSTIVE_PAIR_LIMIT {
        let labels: Vec<usize> = (0..(base - k).pow(t as u32))
            .map(|mut code| {
                let mut ds = vec![0; t];
                for d in ds.iter_mut().rev() {
                    *d = k + code % (base - k);
                    code /= base - k;
                }
                from_digits(&ds, base)
            })
            .collect();
        let lead = |x: usize| to_digits(x, base, t)[0];
        let pairs = labels
            .iter()
            .flat_map(|&a| labels.iter().map(move |&b| (a, b)))
            .filter(|&(a, b)| lead(a) != lead(b))
            .collect();
        return Ok((pairs, true));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);
    let draw = |rng: &mut ChaCha8Rng| -> Vec<usize> { (0..t).map(|_| rng.gen_range(k..base)).collect() };
    let mut chosen = BTreeSet::new();
    let mut pairs = Vec::with_capacity(SAMPLE_SIZE);
    while pairs.len() < SAMPLE_SIZE {
        let (ad, bd) = (draw(&mut rng), draw(&mut rng));
        if ad[0] == bd[0] {
            continue;
        }
        let pair = (from_digits(&ad, base), from_digits(&bd, base));
        if chosen.insert(pair) {
            pairs.push(pair);
        }
    }
    Ok((pairs, false))
}

/// `Gamma(k - 2t, t) (N - k)^(2t - 1) (N - k - 1)`.
pub fn path_family_lower_bound(base: usize, t: usize, k: usize) -> Result<BigUint> {
    if k < 2 * t || k >= base {
        return Err(precondition(format!("need 2t <= k < N, got t = {t}, k = {k}, N = {base}")));
    }
    Ok(gamma_count(k - 2 * t, t)? * BigUint::from(admissible_pair_count(base, t, k)))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InjectionReport {
    pub base: usize,
    pub digits: usize,
    pub k: usize,
    pub exhaustive_pairs: bool,
    pub pairs_checked: usize,
    pub sequences_per_pair: usize,
    pub expected_per_pair: String,
    pub paths_checked: usize,
    /// every path has `k + 1` distinct vertices and uses only edges of `G(N, t)`
    pub all_valid: bool,
    /// within each pair, distinct sequences gave distinct paths
    pub distinct_within_pairs: bool,
    /// distinct vertex sequences across all checked pairs
    pub distinct_directed: usize,
    /// distinct paths once a path and its reversal are identified
    pub distinct_undirected: usize,
    pub failures: Vec<String>,
}

impl InjectionReport {
    pub fn passed(&self) -> bool {
        self.all_valid
            && self.distinct_within_pairs
            && self.expected_per_pair == self.sequences_per_pair.to_string()
            && self.failures.is_empty()
    }
}

/// Runs every permitted sequence through every (sampled) admissible pair and
/// checks each path against the adjacency of the built graph.
pub fn validate_injection(base: usize, t: usize, k: usize) -> Result<InjectionReport> {
    if k < 2 * t || k >= base {
        return Err(precondition(format!("need 2t <= k < N, got t = {t}, k = {k}, N = {base}")));
    }
    let graph = build_numeral_graph(base, t)?;
    let seqs: Vec<PermittedSequence> = enumerate_permitted(k - 2 * t, t)?.collect();
    let expected = gamma_count(k - 2 * t, t)?;
    let (pairs, exhaustive) = admissible_pairs(base, t, k)?;

    let mut report = InjectionReport {
        base,
        digits: t,
        k,
        exhaustive_pairs: exhaustive,
        pairs_checked: pairs.len(),
        sequences_per_pair: seqs.len(),
        expected_per_pair: expected.to_string(),
        paths_checked: 0,
        all_valid: true,
        distinct_within_pairs: true,
        distinct_directed: 0,
        distinct_undirected: 0,
        failures: Vec::new(),
    };
    let mut directed = HashSet::new();
    let mut undirected = HashSet::new();
    for &(a, b) in &pairs {
        let mut local = HashSet::new();
        for seq in &seqs {
            report.paths_checked += 1;
            let path = match sequence_to_path(a, b, seq, base, t, k) {
                Ok(p) => p,
                Err(e) => {
                    report.all_valid = false;
                    report.failures.push(format!("A={a} B={b} seq={:?}: {e}", seq.values()));
                    continue;
                }
            };
            if path.windows(2).any(|w| !graph.graph().has_edge(w[0], w[1])) {
                report.all_valid = false;
                report.failures.push(format!("A={a} B={b} seq={:?}: leaves the graph", seq.values()));
            }
            if !local.insert(path.clone()) {
                report.distinct_within_pairs = false;
            }
            let mut rev = path.clone();
            rev.reverse();
            undirected.insert(path.clone().min(rev));
            directed.insert(path);
        }
    }
    report.distinct_directed = directed.len();
    report.distinct_undirected = undirected.len();
    Ok(report)
}
