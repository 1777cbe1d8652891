//! Generalized Turán numbers over triangulated polygons: brute force over all
//! triangulations, the known closed forms, and the verification suites.

mod suites;

use std::collections::HashSet;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{precondition, Error, Result};
use crate::graph::{
    count_cycles, count_paths, fan, subgraph_count, triple_fan, Graph, Mop, MopIter, PatternGraph, MAX_ENUMERATION_N,
};

pub use suites::{verify_suite, CaseResult, CaseStatus, SuiteParams, VerificationReport, SUITES};

/// Default limit for cycle and path patterns.
pub const MAX_BRUTE_FORCE_N: usize = 11;
/// Default limit for general pattern graphs.
pub const MAX_BRUTE_FORCE_PATTERN_N: usize = 9;
pub const MAX_FIXED_ENDPOINT_N: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Pattern {
    /// `C_k` on `k` vertices.
    Cycle(usize),
    /// Path with the given number of edges.
    Path(usize),
    Graph(PatternGraph),
}

impl Pattern {
    pub fn count(&self, g: &Graph) -> u64 {
        match self {
            Pattern::Cycle(k) => count_cycles(g, *k),
            Pattern::Path(e) => count_paths(g, *e),
            Pattern::Graph(h) => subgraph_count(g, h),
        }
    }

    fn validate(&self) -> Result<()> {
        match self {
            Pattern::Cycle(k) if *k < 3 => Err(precondition(format!("cycle length must be >= 3, got {k}"))),
            Pattern::Path(0) => Err(precondition("path pattern needs at least one edge")),
            _ => Ok(()),
        }
    }

    fn size_limit(&self) -> usize {
        match self {
            Pattern::Graph(_) => MAX_BRUTE_FORCE_PATTERN_N,
            _ => MAX_BRUTE_FORCE_N,
        }
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pattern::Cycle(k) => write!(f, "cycle:{k}"),
            Pattern::Path(e) => write!(f, "path:{e}"),
            Pattern::Graph(h) => write!(f, "graph:{}v{}e", h.graph().n(), h.graph().edge_count()),
        }
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct ExtremalOptions {
    /// Keep one maximizer per isomorphism class.
    pub dedup: bool,
    /// Lift the default size guards (up to the enumeration hard limit).
    pub unsafe_scale: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtremalResult {
    pub n: usize,
    pub pattern: String,
    pub maximum: u64,
    pub triangulations: u64,
    pub deduplicated: bool,
    pub maximizers: Vec<Mop>,
}

/// Exact maximum number of copies of `pattern` over all triangulations of the
/// `n`-gon, with the maximizing triangulations in enumeration order.
pub fn brute_force_ex(n: usize, pattern: &Pattern, opts: ExtremalOptions) -> Result<ExtremalResult> {
    pattern.validate()?;
    if n < 3 {
        return Err(precondition(format!("need n >= 3, got {n}")));
    }
    let limit = if opts.unsafe_scale {
        MAX_ENUMERATION_N
    } else {
        pattern.size_limit()
    };
    if n > limit {
        return Err(Error::GuardExceeded {
            what: "n",
            value: n,
            limit,
        });
    }

    // indexed collect keeps the partitions in apex order
    let parts: Vec<(u64, u64, Vec<Mop>)> = (1..n - 1)
        .into_par_iter()
        .map(|apex| {
            let (mut best, mut seen, mut arg) = (0u64, 0u64, Vec::new());
            for m in MopIter::with_root_apex(n, apex) {
                seen += 1;
                let c = pattern.count(&m.graph());
                if c > best {
                    best = c;
                    arg.clear();
                }
                if c == best {
                    arg.push(m);
                }
            }
            (best, seen, arg)
        })
        .collect();

    let maximum = parts.iter().map(|p| p.0).max().unwrap_or(0);
    let triangulations = parts.iter().map(|p| p.1).sum();
    let mut maximizers: Vec<Mop> = parts
        .into_iter()
        .filter(|p| p.0 == maximum)
        .flat_map(|p| p.2)
        .collect();
    if opts.dedup {
        let mut seen = HashSet::new();
        maximizers.retain(|m| seen.insert(m.canonical_form()));
    }
    Ok(ExtremalResult {
        n,
        pattern: pattern.to_string(),
        maximum,
        triangulations,
        deduplicated: opts.dedup,
        maximizers,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClosedForm {
    Value(u64),
    NotCovered,
}

/// Exact values known in closed form. With `m = n - 2` triangles:
/// `C_3 -> m`, `C_4 -> m - 1`, `C_5 -> floor((3m - 6)/2)` for `m >= 2`,
/// `C_6 -> floor((5m - 18)/2)` for `m >= 4`, and `(n^2 + 3n - 12)/2` paths
/// with two edges.
pub fn closed_form_ex(n: usize, pattern: &Pattern) -> ClosedForm {
    if n < 3 {
        return ClosedForm::NotCovered;
    }
    let m = (n - 2) as u64;
    match pattern {
        Pattern::Cycle(3) => ClosedForm::Value(m),
        Pattern::Cycle(4) => ClosedForm::Value(m - 1),
        Pattern::Cycle(5) if m >= 2 => ClosedForm::Value((3 * m - 6) / 2),
        Pattern::Cycle(6) if m >= 4 => ClosedForm::Value((5 * m - 18) / 2),
        Pattern::Path(2) => {
            let n = n as u64;
            ClosedForm::Value((n * n + 3 * n - 12) / 2)
        }
        _ => ClosedForm::NotCovered,
    }
}

/// `out[k]`: the largest number of `k`-edge paths between two fixed vertices,
/// over all triangulations of the `n`-gon and all vertex pairs.
pub fn fixed_endpoint_maxima(n: usize) -> Result<Vec<u64>> {
    if !(2..=MAX_FIXED_ENDPOINT_N).contains(&n) {
        return Err(if n < 2 {
            precondition(format!("need n >= 2, got {n}"))
        } else {
            Error::GuardExceeded {
                what: "n",
                value: n,
                limit: MAX_FIXED_ENDPOINT_N,
            }
        });
    }
    if n == 2 {
        return Ok(vec![0, 1]);
    }
    let per_apex: Vec<Vec<u64>> = (1..n - 1)
        .into_par_iter()
        .map(|apex| {
            let mut best = vec![0u64; n];
            for m in MopIter::with_root_apex(n, apex) {
                let g = m.graph();
                for u in 0..n {
                    let mut counts = vec![vec![0u64; n]; n];
                    let mut on_path = vec![false; n];
                    on_path[u] = true;
                    paths_by_length(&g, u, 0, &mut on_path, &mut counts);
                    for (k, row) in counts.iter().enumerate().skip(1) {
                        let top = row.iter().enumerate().filter(|&(v, _)| v != u).map(|(_, &c)| c).max();
                        best[k] = best[k].max(top.unwrap_or(0));
                    }
                }
            }
            best
        })
        .collect();
    let mut out = vec![0u64; n];
    for row in per_apex {
        for (k, v) in row.into_iter().enumerate() {
            out[k] = out[k].max(v);
        }
    }
    out[0] = 1;
    Ok(out)
}

fn paths_by_length(g: &Graph, v: usize, depth: usize, on_path: &mut [bool], counts: &mut [Vec<u64>]) {
    for &w in g.neighbors(v) {
        if on_path[w] {
            continue;
        }
        counts[depth + 1][w] += 1;
        on_path[w] = true;
        paths_by_length(g, w, depth + 1, on_path, counts);
        on_path[w] = false;
    }
}

/// Largest number of `k`-edge paths between two fixed vertices.
pub fn max_fixed_endpoint_paths(n: usize, k: usize) -> Result<u64> {
    let all = fixed_endpoint_maxima(n)?;
    Ok(all.get(k).copied().unwrap_or(0))
}

/// Paths on `k` vertices (`k - 1` edges) in `triple_fan(n)` and in `fan(n)`.
pub fn triple_fan_comparison(n: usize, k: usize) -> Result<(u64, u64)> {
    if k < 2 {
        return Err(precondition(format!("paths need at least 2 vertices, got {k}")));
    }
    let triple = triple_fan(n)?;
    Ok((count_paths(&triple.graph(), k - 1), count_paths(&fan(n)?.graph(), k - 1)))
}
