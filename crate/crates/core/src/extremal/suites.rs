use std::collections::BTreeMap;
use std::fmt::Display;

use num_bigint::BigUint;
use num_rational::BigRational;
use serde::Serialize;

use super::{
    brute_force_ex, closed_form_ex, fixed_endpoint_maxima, triple_fan_comparison, ClosedForm, ExtremalOptions, Pattern,
};
use crate::error::{precondition, Error, Result};
use crate::exactmath::{
    binomial, c_cycle_table, c_limit_bounds, c_subtree, catalan, exceeds_float, float_at_most, path_bound_f,
    rational_to_f64,
};
use crate::graph::{
    count_paths, enumerate_mops, fan, fan_path_formula, leaf_count, star_blowup, subgraph_count, triple_fan, Graph,
    PatternGraph,
};
use crate::numeral::{
    build_numeral_graph, enumerate_permitted, gamma_by_multiplicity, gamma_count, gamma_lower_bound,
    validate_injection, MultiplicityVector,
};
use crate::tree::{count_subtrees_k, cycle_subtree_check, enumerate_bounded_trees, greedy_tree, weak_dual, Tree};

pub const SUITES: &[&str] = &[
    "c-table",
    "catalan-identity",
    "cycle-closed-forms",
    "cycle-bijection",
    "greedy-optimality",
    "p3-exact",
    "fan-formula",
    "counterexample-6",
    "triple-fan-beats-fan",
    "gamma",
    "injection",
    "bounds-4k",
    "star-blowup",
    "limit-bounds",
    "constructions",
];

const TABLE_1: [&str; 10] = ["1", "1", "3/2", "5/2", "5", "21/2", "95/4", "227/4", "141", "1447/4"];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CaseStatus {
    Pass,
    Fail,
    /// Reported only; does not affect the overall status.
    Info,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaseResult {
    pub case: String,
    pub expected: String,
    pub actual: String,
    pub status: CaseStatus,
}

/// Optional range overrides; each suite has its own defaults.
#[derive(Debug, Clone, Copy, Default)]
pub struct SuiteParams {
    pub n_min: Option<usize>,
    pub n_max: Option<usize>,
    pub k_min: Option<usize>,
    pub k_max: Option<usize>,
    pub unsafe_scale: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub params: BTreeMap<String, String>,
    pub cases: Vec<CaseResult>,
    pub passed: bool,
}

impl VerificationReport {
    fn new(suite: &str, params: BTreeMap<String, String>, cases: Vec<CaseResult>) -> Self {
        let passed = cases.iter().all(|c| c.status != CaseStatus::Fail);
        VerificationReport {
            suite: suite.to_string(),
            params,
            cases,
            passed,
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &CaseResult> {
        self.cases.iter().filter(|c| c.status == CaseStatus::Fail)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    /// Aligned plain-text table.
    pub fn to_text(&self) -> String {
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let mut out = format!("suite: {}\nparams: {}\n", self.suite, params.join(" "));
        let header = ["case", "expected", "actual", "status"];
        let rows: Vec<[String; 4]> = self
            .cases
            .iter()
            .map(|c| {
                let status = match c.status {
                    CaseStatus::Pass => "pass",
                    CaseStatus::Fail => "FAIL",
                    CaseStatus::Info => "info",
                };
                [c.case.clone(), c.expected.clone(), c.actual.clone(), status.to_string()]
            })
            .collect();
        let mut width = header.map(str::len);
        for r in &rows {
            for (w, cell) in width.iter_mut().zip(r) {
                *w = (*w).max(cell.len());
            }
        }
        let line = |cells: [&str; 4]| {
            let padded: Vec<String> = cells.iter().zip(width).map(|(c, w)| format!("{c:<w$}")).collect();
            padded.join("  ").trim_end().to_string() + "\n"
        };
        out += &line(header);
        for r in &rows {
            out += &line([&r[0], &r[1], &r[2], &r[3]]);
        }
        let fails = self.failures().count();
        out += &format!(
            "overall: {} ({} cases, {} failed)\n",
            if self.passed { "PASS" } else { "FAIL" },
            self.cases.len(),
            fails
        );
        out
    }
}

fn check(case: impl Into<String>, expected: impl Display, actual: impl Display) -> CaseResult {
    let (expected, actual) = (expected.to_string(), actual.to_string());
    let status = if expected == actual {
        CaseStatus::Pass
    } else {
        CaseStatus::Fail
    };
    CaseResult {
        case: case.into(),
        expected,
        actual,
        status,
    }
}

fn holds(case: impl Into<String>, expected: impl Display, actual: impl Display, ok: bool) -> CaseResult {
    CaseResult {
        case: case.into(),
        expected: expected.to_string(),
        actual: actual.to_string(),
        status: if ok { CaseStatus::Pass } else { CaseStatus::Fail },
    }
}

fn info(case: impl Into<String>, expected: impl Display, actual: impl Display) -> CaseResult {
    CaseResult {
        case: case.into(),
        expected: expected.to_string(),
        actual: actual.to_string(),
        status: CaseStatus::Info,
    }
}

struct Ranges {
    params: BTreeMap<String, String>,
}

impl Ranges {
    fn new() -> Self {
        Ranges { params: BTreeMap::new() }
    }

    /// Resolves `[min, max]` from overrides and defaults; `max` beyond `guard`
    /// needs the unsafe flag.
    fn range(
        &mut self,
        name: &str,
        over: (Option<usize>, Option<usize>),
        default: (usize, usize),
        floor: usize,
        guard: usize,
        unsafe_scale: bool,
    ) -> Result<(usize, usize)> {
        let lo = over.0.unwrap_or(default.0).max(floor);
        let hi = over.1.unwrap_or(default.1);
        if hi > guard && !unsafe_scale {
            return Err(Error::GuardExceeded {
                what: match name {
                    "n" => "n",
                    "t" => "t",
                    "s" => "s",
                    _ => "k",
                },
                value: hi,
                limit: guard,
            });
        }
        if lo > hi {
            return Err(precondition(format!("empty {name} range {lo}..={hi}")));
        }
        self.params.insert(format!("{name}_min"), lo.to_string());
        self.params.insert(format!("{name}_max"), hi.to_string());
        Ok((lo, hi))
    }

    fn fixed(&mut self, name: &str, value: impl Display) {
        self.params.insert(name.to_string(), value.to_string());
    }
}

pub fn verify_suite(name: &str, p: &SuiteParams) -> Result<VerificationReport> {
    let mut r = Ranges::new();
    let cases = match name {
        "c-table" => c_table(p, &mut r)?,
        "catalan-identity" => catalan_identity(p, &mut r)?,
        "cycle-closed-forms" => cycle_closed_forms(p, &mut r)?,
        "cycle-bijection" => cycle_bijection(p, &mut r)?,
        "greedy-optimality" => greedy_optimality(p, &mut r)?,
        "p3-exact" => p3_exact(p, &mut r)?,
        "fan-formula" => fan_formula(p, &mut r)?,
        "counterexample-6" => counterexample_6(&mut r)?,
        "triple-fan-beats-fan" => triple_fan_beats_fan(p, &mut r)?,
        "gamma" => gamma(p, &mut r)?,
        "injection" => injection(&mut r)?,
        "bounds-4k" => bounds_4k(p, &mut r)?,
        "star-blowup" => star_blowup_suite(p, &mut r)?,
        "limit-bounds" => limit_bounds(p, &mut r)?,
        "constructions" => constructions(p, &mut r)?,
        _ => return Err(Error::UnknownSuite(name.to_string())),
    };
    Ok(VerificationReport::new(name, r.params, cases))
}

fn opts(p: &SuiteParams) -> ExtremalOptions {
    ExtremalOptions {
        dedup: false,
        unsafe_scale: p.unsafe_scale,
    }
}

fn c_table(p: &SuiteParams, r: &mut Ranges) -> Result<Vec<CaseResult>> {
    let (lo, hi) = r.range("k", (p.k_min, p.k_max), (3, 12), 3, 40, p.unsafe_scale)?;
    let table = c_cycle_table(hi)?;
    Ok(table
        .iter()
        .filter(|c| c.k >= lo)
        .map(|c| match TABLE_1.get(c.k - 3) {
            Some(expected) => check(format!("c({})", c.k), expected, &c.value),
            None => info(format!("c({})", c.k), "-", &c.value),
        })
        .collect())
}

fn catalan_identity(p: &SuiteParams, r: &mut Ranges) -> Result<Vec<CaseResult>> {
    let (lo, hi) = r.range("k", (p.k_min, p.k_max), (1, 50), 1, 500, p.unsafe_scale)?;
    Ok((lo..=hi)
        .map(|k| {
            let lhs = BigRational::new(
                (binomial(2 * k as u64 + 1, k as u64 - 1) * 3u32).into(),
                BigUint::from(2 * k + 1).into(),
            );
            let rhs = BigRational::from_integer((catalan(k + 1) - catalan(k)).into());
            check(format!("k={k}"), rhs, lhs)
        })
        .collect())
}

fn cycle_closed_forms(p: &SuiteParams, r: &mut Ranges) -> Result<Vec<CaseResult>> {
    let (lo, hi) = r.range("n", (p.n_min, p.n_max), (3, 11), 3, 11, p.unsafe_scale)?;
    let mut cases = Vec::new();
    for n in lo..=hi {
        for k in 3..=6.min(n) {
            let pattern = Pattern::Cycle(k);
            if let ClosedForm::Value(v) = closed_form_ex(n, &pattern) {
                let got = brute_force_ex(n, &pattern, opts(p))?;
                cases.push(check(format!("n={n} C{k}"), v, got.maximum));
                if k == 5 && n >= 4 {
                    // some maximizer has floor((n-4)/2) branching triangles
                    let want = (n - 4) / 2;
                    let hit = got.maximizers.iter().any(|m| degree_count(&weak_dual(m), 3) == want);
                    cases.push(holds(
                        format!("n={n} C5 maximizer shape"),
                        format!("dual with {want} degree-3 vertices"),
                        if hit { "found" } else { "none" },
                        hit,
                    ));
                }
            }
        }
    }
    // tree-side characterizations of the optimal duals
    for m in lo.saturating_sub(2).max(2)..=hi - 2 {
        let trees: Vec<Tree> = enumerate_bounded_trees(m, 3)?.collect();
        let g3: Vec<BigUint> = trees.iter().map(|t| count_subtrees_k(t, 3)).collect();
        let best3 = g3.iter().max().cloned().unwrap_or_default();
        let want = (m - 2) / 2;
        let ok = trees
            .iter()
            .zip(&g3)
            .all(|(t, g)| degree_count(t, 3) != want || *g == best3);
        cases.push(holds(
            format!("trees m={m}: {want} degree-3 vertices -> max g3"),
            best3.to_string(),
            if ok { "all attain" } else { "some miss" },
            ok,
        ));
        if m >= 4 {
            let g4: Vec<BigUint> = trees.iter().map(|t| count_subtrees_k(t, 4)).collect();
            let best4 = g4.iter().max().cloned().unwrap_or_default();
            let shaped: Vec<bool> = trees.iter().map(eq3_shape).collect();
            let sufficient = trees.iter().zip(&g4).zip(&shaped).all(|((_, g), &s)| !s || *g == best4);
            let any_shaped = shaped.iter().any(|&s| s);
            cases.push(holds(
                format!("trees m={m}: eq3 shape -> max g4"),
                best4.to_string(),
                if !any_shaped {
                    "no such tree"
                } else if sufficient {
                    "all attain"
                } else {
                    "some miss"
                },
                sufficient,
            ));
            let exhaustive = g4.iter().zip(&shaped).all(|(g, &s)| *g != best4 || s);
            cases.push(info(
                format!("trees m={m}: every g4 maximizer has eq3 shape"),
                "-",
                if exhaustive { "yes" } else { "no" },
            ));
        }
    }
    Ok(cases)
}

fn degree_count(t: &Tree, d: usize) -> usize {
    (0..t.n()).filter(|&v| t.degree(v) == d).count()
}

/// No degree-2 vertex, or exactly one and it is adjacent to a leaf.
fn eq3_shape(t: &Tree) -> bool {
    let twos: Vec<usize> = (0..t.n()).filter(|&v| t.degree(v) == 2).collect();
    match twos.as_slice() {
        [] => true,
        [v] => t.neighbors(*v).iter().any(|&w| t.degree(w) == 1),
        _ => false,
    }
}

fn cycle_bijection(p: &SuiteParams, r: &mut Ranges) -> Result<Vec<CaseResult>> {
    let (lo, hi) = r.range("n", (p.n_min, p.n_max), (3, 10), 3, 10, p.unsafe_scale)?;
    let mut cases = Vec::new();
    for n in lo..=hi {
        let mops: Vec<_> = enumerate_mops(n)?.collect();
        for k in 3..=n {
            let mut agree = 0usize;
            for m in &mops {
                let (cycles, subtrees) = cycle_subtree_check(m, k)?;
                agree += usize::from(cycles == subtrees);
            }
            cases.push(check(format!("n={n} k={k} triangulations agreeing"), mops.len(), agree));
        }
    }
    Ok(cases)
}

fn greedy_optimality(p: &SuiteParams, r: &mut Ranges) -> Result<Vec<CaseResult>> {
    let (lo, hi) = r.range("n", (p.n_min, p.n_max), (3, 10), 3, 10, p.unsafe_scale)?;
    let mut cases = Vec::new();
    for n in lo..=hi {
        let trees: Vec<Tree> = enumerate_bounded_trees(n - 2, 3)?.collect();
        let greedy = greedy_tree(3, n - 2)?;
        for k in 3..=n {
            let tree_max = trees.iter().map(|t| count_subtrees_k(t, k - 2)).max().unwrap_or_default();
            let greedy_value = count_subtrees_k(&greedy, k - 2);
            let brute = brute_force_ex(n, &Pattern::Cycle(k), opts(p))?.maximum;
            let ok = tree_max == greedy_value && greedy_value == BigUint::from(brute);
            cases.push(holds(
                format!("n={n} k={k}"),
                format!("tree max {tree_max}"),
                format!("greedy {greedy_value}, brute {brute}"),
                ok,
            ));
        }
    }
    Ok(cases)
}

fn p3_exact(p: &SuiteParams, r: &mut Ranges) -> Result<Vec<CaseResult>> {
    let (lo, hi) = r.range("n", (p.n_min, p.n_max), (4, 10), 4, 11, p.unsafe_scale)?;
    let mut cases = Vec::new();
    for n in lo..=hi {
        let got = brute_force_ex(
            n,
            &Pattern::Path(2),
            ExtremalOptions {
                dedup: true,
                ..opts(p)
            },
        )?;
        cases.push(check(format!("n={n} max"), (n * n + 3 * n - 12) / 2, got.maximum));
        let unique_fan = got.maximizers.len() == 1 && got.maximizers[0].is_isomorphic(&fan(n)?);
        cases.push(holds(
            format!("n={n} maximizers"),
            "exactly the fan",
            format!("{} class(es)", got.maximizers.len()),
            unique_fan,
        ));
    }
    Ok(cases)
}

fn fan_formula(p: &SuiteParams, r: &mut Ranges) -> Result<Vec<CaseResult>> {
    let (lo, hi) = r.range("n", (p.n_min, p.n_max), (4, 14), 4, 16, p.unsafe_scale)?;
    let mut cases = Vec::new();
    for n in lo..=hi {
        let g = fan(n)?.graph();
        for k in 3..n {
            cases.push(check(format!("n={n} k={k}"), fan_path_formula(n, k)?, count_paths(&g, k)));
        }
    }
    Ok(cases)
}

fn counterexample_6(r: &mut Ranges) -> Result<Vec<CaseResult>> {
    r.fixed("n", 6);
    r.fixed("path_edges", 3);
    let got = brute_force_ex(6, &Pattern::Path(3), ExtremalOptions::default())?;
    let (triple, fan_count) = triple_fan_comparison(6, 4)?;
    let t6 = triple_fan(6)?;
    Ok(vec![
        check("brute-force maximum", 33, got.maximum),
        check("triple_fan(6)", 33, triple),
        check("fan(6)", 32, fan_count),
        holds(
            "maximum beats the fan",
            "> 32",
            got.maximum,
            got.maximum > fan_count,
        ),
        holds(
            "triple_fan(6) among maximizers",
            "yes",
            if got.maximizers.iter().any(|m| m.is_isomorphic(&t6)) { "yes" } else { "no" },
            got.maximizers.iter().any(|m| m.is_isomorphic(&t6)),
        ),
    ])
}

fn triple_fan_beats_fan(p: &SuiteParams, r: &mut Ranges) -> Result<Vec<CaseResult>> {
    let n = p.n_max.unwrap_or(45);
    let k = p.k_max.unwrap_or(6);
    if n > 60 && !p.unsafe_scale {
        return Err(Error::GuardExceeded {
            what: "n",
            value: n,
            limit: 60,
        });
    }
    r.fixed("n", n);
    r.fixed("path_vertices", k);
    let (triple, fan_count) = triple_fan_comparison(n, k)?;
    let mut cases = vec![holds(
        format!("n={n} P{k}"),
        format!("triple > fan ({fan_count})"),
        triple,
        triple > fan_count,
    )];
    if k >= 4 && n > k - 1 {
        cases.push(check("fan side vs closed formula", fan_path_formula(n, k - 1)?, fan_count));
    }
    cases.push(info("n/7 > k > 5", "-", n > 7 * k && k > 5));
    Ok(cases)
}

fn gamma(p: &SuiteParams, r: &mut Ranges) -> Result<Vec<CaseResult>> {
    let (_, l_max) = r.range("k", (Some(0), p.k_max), (0, 12), 0, 20, p.unsafe_scale)?;
    let mut cases = Vec::new();
    for t in 2..=6 {
        for len in 0..=l_max {
            let listed = enumerate_permitted(len, t)?.count();
            cases.push(check(format!("L={len} t={t} DP vs enumeration"), listed, gamma_count(len, t)?));
        }
    }
    for len in 0..=l_max {
        let t = (len + 1).max(2);
        cases.push(check(format!("L={len} t={t} uncapped"), catalan(len), gamma_count(len, t)?));
    }
    // every positive multiplicity vector appears with its product-formula count
    let l_mult = l_max.min(10);
    for len in 1..=l_mult {
        let mut groups: BTreeMap<Vec<usize>, u64> = BTreeMap::new();
        for s in enumerate_permitted(len, len + 1)? {
            *groups.entry(s.multiplicities().0).or_default() += 1;
        }
        let mut agree = 0;
        for (m, c) in &groups {
            agree += usize::from(gamma_by_multiplicity(&MultiplicityVector(m.clone()))? == BigUint::from(*c));
        }
        cases.push(check(format!("L={len} product formula, vectors agreeing"), groups.len(), agree));
    }
    Ok(cases)
}

fn injection(r: &mut Ranges) -> Result<Vec<CaseResult>> {
    r.fixed("triples", "(10,2,8) (12,2,10) (30,3,14)");
    let mut cases = Vec::new();
    for (n, t, k) in [(10, 2, 8), (12, 2, 10), (30, 3, 14)] {
        let rep = validate_injection(n, t, k)?;
        let label = format!("N={n} t={t} k={k}");
        cases.push(check(format!("{label} paths per pair"), &rep.expected_per_pair, rep.sequences_per_pair));
        cases.push(holds(
            format!("{label} valid and distinct"),
            format!("{} pairs{}", rep.pairs_checked, if rep.exhaustive_pairs { "" } else { " (sampled)" }),
            format!("{} paths, {} distinct", rep.paths_checked, rep.distinct_directed),
            rep.passed() && rep.distinct_directed == rep.paths_checked,
        ));
        cases.push(info(
            format!("{label} distinct up to reversal"),
            rep.paths_checked,
            rep.distinct_undirected,
        ));
    }
    Ok(cases)
}

fn bounds_4k(p: &SuiteParams, r: &mut Ranges) -> Result<Vec<CaseResult>> {
    let (_, k_max) = r.range("k", (Some(0), p.k_max), (0, 30), 0, 200, p.unsafe_scale)?;
    let (n_lo, n_hi) = r.range("n", (p.n_min, p.n_max), (3, 10), 3, 10, false)?;
    let f = path_bound_f(k_max.max(n_hi));
    let four = BigUint::from(4u32);
    let mut cases = Vec::new();
    for k in 0..=k_max {
        let cap = four.pow(k as u32);
        cases.push(holds(format!("F({k}) <= 4^{k}"), &cap, f.f(k), *f.f(k) <= cap));
    }
    for n in n_lo..=n_hi {
        let maxima = fixed_endpoint_maxima(n)?;
        let ok = maxima.iter().enumerate().all(|(k, &v)| BigUint::from(v) <= *f.f(k));
        let shown: Vec<String> = maxima.iter().map(u64::to_string).collect();
        cases.push(holds(format!("n={n} fixed-endpoint maxima <= F(k)"), "all k", shown.join(","), ok));
    }
    for k in 16..=60 {
        let c = c_subtree(k)?.value;
        let cap = BigRational::from_integer(four.pow(k as u32).into());
        cases.push(holds(
            format!("c_subtree({k}) < 4^{k}"),
            "< 4^k",
            format!("{:.6e}", rational_to_f64(&c)),
            c < cap,
        ));
    }
    for k in [16usize, 25, 36] {
        let t = k.isqrt();
        let g = gamma_count(k - 2 * t, t)?;
        let bound = gamma_lower_bound(k)?;
        cases.push(holds(
            format!("Gamma({}, {t}) > bound(k={k})", k - 2 * t),
            format!("> {bound:.6e}"),
            &g,
            exceeds_float(&BigRational::from_integer(g.clone().into()), bound),
        ));
    }
    Ok(cases)
}

fn star_blowup_suite(p: &SuiteParams, r: &mut Ranges) -> Result<Vec<CaseResult>> {
    let (lo, hi) = r.range("s", (p.k_min, p.k_max), (1, 5), 1, 8, p.unsafe_scale)?;
    let kite = Graph::from_edges(5, [(0, 1), (1, 2), (2, 0), (2, 3), (1, 4)])?;
    let spider = Graph::from_edges(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])?;
    let patterns = [
        ("P4", PatternGraph::path(3)),
        ("K1,3", PatternGraph::star(3)),
        ("kite", PatternGraph::new(kite)?),
        ("spider", PatternGraph::new(spider)?),
    ];
    let mut cases = Vec::new();
    for (name, h) in &patterns {
        let leaves = leaf_count(h.graph());
        for s in lo..=hi {
            let blown = star_blowup(h, s)?;
            let copies = subgraph_count(&blown, h);
            let floor = (s as u64).pow(leaves as u32);
            cases.push(holds(
                format!("{name} s={s} ({} vertices)", blown.n()),
                format!(">= {floor}"),
                copies,
                copies >= floor,
            ));
        }
    }
    Ok(cases)
}

fn limit_bounds(p: &SuiteParams, r: &mut Ranges) -> Result<Vec<CaseResult>> {
    let (lo, hi) = r.range("k", (p.k_min, p.k_max), (16, 60), 16, 120, p.unsafe_scale)?;
    let mut cases = Vec::new();
    for k in lo..=hi {
        let b = c_limit_bounds(k)?;
        let c = c_subtree(k)?.value;
        let cf = rational_to_f64(&c);
        cases.push(holds(
            format!("k={k} closed-form lower <= c"),
            format!("{:.6e}", b.lower),
            format!("{cf:.6e}"),
            float_at_most(b.lower, &c),
        ));
        cases.push(holds(
            format!("k={k} family lower <= c"),
            format!("{:.6e}", rational_to_f64(&b.family_lower)),
            format!("{cf:.6e}"),
            b.family_lower <= c,
        ));
        cases.push(holds(
            format!("k={k} c < 4^k"),
            format!("{:.6e}", 4f64.powi(k as i32)),
            format!("{cf:.6e}"),
            b.brackets(&c),
        ));
        let ordered = float_at_most(b.lower, &b.family_lower);
        cases.push(info(
            format!("k={k} closed form <= family bound"),
            "-",
            if ordered { "yes" } else { "no" },
        ));
    }
    Ok(cases)
}

fn constructions(p: &SuiteParams, r: &mut Ranges) -> Result<Vec<CaseResult>> {
    let (n_lo, n_hi) = r.range("n", (p.n_min, p.n_max), (2, 12), 2, 12, p.unsafe_scale)?;
    let (t_lo, t_hi) = r.range("t", (p.k_min, p.k_max), (1, 3), 1, 3, p.unsafe_scale)?;
    let mut cases = Vec::new();
    for base in n_lo..=n_hi {
        for t in t_lo..=t_hi {
            if base.pow(t as u32) < 3 {
                continue;
            }
            let g = build_numeral_graph(base, t)?;
            cases.push(check(
                format!("G({base},{t}) edges"),
                2 * base.pow(t as u32) - 3,
                g.graph().edge_count(),
            ));
        }
        if base >= 3 {
            let same = build_numeral_graph(base, 1)?.mop() == &fan(base)?;
            cases.push(holds(format!("G({base},1) = fan({base})"), "equal", same, same));
        }
    }
    let blown = star_blowup(&PatternGraph::path(3), 5)?;
    let copies = subgraph_count(&blown, &PatternGraph::path(3));
    cases.push(holds("star_blowup(P4, 5) copies of P4", ">= 25", copies, copies >= 25));
    Ok(cases)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite_is_an_error() {
        assert!(matches!(verify_suite("nope", &SuiteParams::default()), Err(Error::UnknownSuite(_))));
    }

    #[test]
    fn quick_suites_pass() {
        for name in ["c-table", "catalan-identity", "counterexample-6", "injection", "star-blowup", "constructions"] {
            let rep = verify_suite(name, &SuiteParams::default()).unwrap();
            assert!(rep.passed, "{}", rep.to_text());
        }
    }

    #[test]
    fn reports_are_deterministic() {
        let p = SuiteParams {
            n_max: Some(8),
            ..SuiteParams::default()
        };
        let a = verify_suite("cycle-closed-forms", &p).unwrap();
        let b = verify_suite("cycle-closed-forms", &p).unwrap();
        assert!(a.passed, "{}", a.to_text());
        assert_eq!(a.to_json(), b.to_json());
        assert_eq!(a.to_text(), b.to_text());
    }

    #[test]
    fn guard_needs_unsafe_flag() {
        let p = SuiteParams {
            n_max: Some(12),
            ..SuiteParams::default()
        };
        assert!(matches!(verify_suite("cycle-closed-forms", &p), Err(Error::GuardExceeded { .. })));
    }

    #[test]
    fn text_layout() {
        let rep = verify_suite("counterexample-6", &SuiteParams::default()).unwrap();
        let text = rep.to_text();
        assert!(text.starts_with("suite: counterexample-6\nparams: n=6 path_edges=3\n"));
        assert!(text.ends_with("overall: PASS (5 cases, 0 failed)\n"));
    }
}
