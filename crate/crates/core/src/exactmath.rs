//! Exact integer and rational arithmetic for the subtree and path constants.
//!
//! Everything here is computed with arbitrary-precision integers; floats only
//! appear in the two asymptotic bound expressions, and comparisons against
//! them are rounded outward so they never pass by accident.

use num_bigint::BigUint;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{precondition, Result};

/// Binomial coefficient, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// The n-th Catalan number.
pub fn catalan(n: usize) -> BigUint {
    // C(i+1) = C(i) * 2(2i+1) / (i+2); every intermediate division is exact.
    let mut c = BigUint::one();
    for i in 0..n as u64 {
        c = c * (2 * (2 * i + 1)) / (i + 2);
    }
    c
}

/// Catalan numbers `C(0) ..= C(n_max)`.
pub fn catalan_table(n_max: usize) -> Vec<BigUint> {
    let mut out = Vec::with_capacity(n_max + 1);
    let mut c = BigUint::one();
    for i in 0..=n_max as u64 {
        out.push(c.clone());
        c = c * (2 * (2 * i + 1)) / (i + 2);
    }
    out
}

/// Number of k-vertex subtrees of the infinite 3-regular tree that contain a
/// fixed vertex: `3/(2k+1) * binom(2k+1, k-1)`.
pub fn fixed_vertex_subtree_count(k: usize) -> Result<BigUint> {
    if k == 0 {
        return Err(precondition("fixed_vertex_subtree_count needs k >= 1"));
    }
    let k = k as u64;
    let num = binomial(2 * k + 1, k - 1) * 3u32;
    let (q, r) = num.div_rem(&BigUint::from(2 * k + 1));
    debug_assert!(r.is_zero());
    Ok(q)
}

/// The table `t(k, r)`: k-vertex subtrees through a fixed lowest-level vertex
/// of a complete binary tree, having exactly `r` vertices on the lowest level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TTable {
    k_max: usize,
    // rows[k][r], both 1-based; index 0 unused.
    rows: Vec<Vec<BigUint>>,
}

impl TTable {
    pub fn new(k_max: usize) -> Self {
        let k_max = k_max.max(1);
        let binoms: Vec<Vec<BigUint>> = (0..=2 * k_max as u64)
            .map(|n| (0..=k_max as u64).map(|k| binomial(n, k)).collect())
            .collect();

        let mut rows: Vec<Vec<BigUint>> = vec![Vec::new(); k_max + 1];
        rows[0] = vec![BigUint::zero(); 1];
        rows[1] = vec![BigUint::zero(), BigUint::one()];
        for k in 2..=k_max {
            let mut row = vec![BigUint::zero(); k + 1];
            for (r, slot) in row.iter_mut().enumerate().skip(1) {
                let below = k - r;
                let mut acc = BigUint::zero();
                for s in 1..=below {
                    let t = &rows[below][s];
                    if !t.is_zero() {
                        acc += t * &binoms[2 * s - 1][r - 1];
                    }
                }
                *slot = acc;
            }
            rows[k] = row;
        }
        TTable { k_max, rows }
    }

    pub fn k_max(&self) -> usize {
        self.k_max
    }

    /// `t(k, r)`; zero outside `1 <= r <= k <= k_max`.
    pub fn get(&self, k: usize, r: usize) -> BigUint {
        self.rows
            .get(k)
            .and_then(|row| row.get(r))
            .cloned()
            .unwrap_or_default()
    }

    /// `c(k) = sum_r t(k, r) / r`.
    pub fn c(&self, k: usize) -> Option<CConstant> {
        if k == 0 || k > self.k_max {
            return None;
        }
        let mut value = BigRational::zero();
        for (r, t) in self.rows[k].iter().enumerate().skip(1) {
            if !t.is_zero() {
                value += BigRational::new(t.clone().into(), BigUint::from(r).into());
            }
        }
        Some(CConstant { k, value })
    }
}

/// Per-vertex asymptotic density of k-vertex subtrees in greedy binary trees.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CConstant {
    pub k: usize,
    #[serde(with = "rational_json")]
    pub value: BigRational,
}

pub fn c_subtree(k: usize) -> Result<CConstant> {
    if k == 0 {
        return Err(precondition("c_subtree needs a subtree size k >= 1"));
    }
    Ok(TTable::new(k).c(k).expect("k within table"))
}

/// Density of `C_k` copies per vertex; a cycle of length k triangulates into
/// k-2 faces, so this is `c_subtree(k - 2)` relabelled by cycle length.
pub fn c_cycle(k: usize) -> Result<CConstant> {
    if k < 3 {
        return Err(precondition(format!("c_cycle needs cycle length >= 3, got {k}")));
    }
    let mut c = c_subtree(k - 2)?;
    c.k = k;
    Ok(c)
}

/// `c_cycle(3..=k_max)` from a single shared table.
pub fn c_cycle_table(k_max: usize) -> Result<Vec<CConstant>> {
    if k_max < 3 {
        return Err(precondition("c-table needs max k >= 3"));
    }
    let table = TTable::new(k_max - 2);
    Ok((3..=k_max)
        .map(|k| {
            let mut c = table.c(k - 2).expect("k within table");
            c.k = k;
            c
        })
        .collect())
}

/// Lower and upper bounds on `c_subtree(k)` from the growth-rate argument.
#[derive(Debug, Clone, PartialEq)]
pub struct LimitBounds {
    pub k: usize,
    /// `ceil(log2(k) / 2)`
    pub q: u32,
    /// `floor(k / 2^q) - 2`
    pub beta: usize,
    /// Closed form `4^k / ((2 sqrt(pi))^sqrt(k) * k^(0.75 (sqrt(k)+1)) * 4^(3 sqrt(k)))`.
    pub lower: f64,
    /// The explicit subtree family count per vertex, `C(beta)^(2^q) / 2^(q + ceil(k/2^q) + 1)`.
    pub family_lower: BigRational,
    /// `4^k`
    pub upper: BigUint,
}

pub fn c_limit_bounds(k: usize) -> Result<LimitBounds> {
    if k < 16 {
        return Err(precondition(format!("c_limit_bounds needs k >= 16, got {k}")));
    }
    // smallest q with 4^q >= k, i.e. ceil(log2(k) / 2) without float rounding
    let mut q = 0u32;
    while 4usize.pow(q) < k {
        q += 1;
    }
    let width = 1usize << q;
    let beta = k / width - 2;
    let levels = q as usize + k.div_ceil(width) + 1;
    let family = catalan(beta).pow(width as u32);
    let family_lower = BigRational::new(family.into(), (BigUint::one() << levels).into());

    let kf = k as f64;
    let root = kf.sqrt();
    let ln4 = 4f64.ln();
    let ln_lower = kf * ln4
        - root * (2.0 * std::f64::consts::PI.sqrt()).ln()
        - 0.75 * (root + 1.0) * kf.ln()
        - 3.0 * root * ln4;

    Ok(LimitBounds {
        k,
        q,
        beta,
        lower: ln_lower.exp(),
        family_lower,
        upper: BigUint::from(4u32).pow(k as u32),
    })
}

impl LimitBounds {
    /// `lower <= c`, `family_lower <= c` and `c < upper`, all compared exactly
    /// or with the float rounded upward.
    pub fn brackets(&self, c: &BigRational) -> bool {
        float_at_most(self.lower, c)
            && &self.family_lower <= c
            && c < &BigRational::from_integer(self.upper.clone().into())
    }
}

/// Upper-bound recursions for fixed-endpoint path counts:
/// `g(r) = C(r-1)` and `F(k) = sum_{r=1..k} 2 g(r) F(k-r)`, `F(0) = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundsTable {
    pub f: Vec<BigUint>,
    /// `g[0]` is unused and set to zero.
    pub g: Vec<BigUint>,
}

pub fn path_bound_f(k_max: usize) -> BoundsTable {
    let cat = catalan_table(k_max);
    let mut g = vec![BigUint::zero(); k_max + 1];
    g[1..].clone_from_slice(&cat[..k_max]);
    let mut f = vec![BigUint::one()];
    for k in 1..=k_max {
        let mut acc = BigUint::zero();
        for r in 1..=k {
            acc += &g[r] * &f[k - r];
        }
        f.push(acc * 2u32);
    }
    BoundsTable { f, g }
}

impl BoundsTable {
    pub fn f(&self, k: usize) -> &BigUint {
        &self.f[k]
    }

    pub fn g(&self, r: usize) -> &BigUint {
        &self.g[r]
    }
}

fn round_up(x: f64) -> f64 {
    let scaled = if x >= 0.0 { x * (1.0 + 1e-9) } else { x * (1.0 - 1e-9) };
    scaled.next_up()
}

/// True when `bound <= exact` still holds after rounding `bound` upward.
pub fn float_at_most(bound: f64, exact: &BigRational) -> bool {
    if bound.is_nan() {
        return false;
    }
    BigRational::from_float(round_up(bound)).is_some_and(|b| b <= *exact)
}

/// True when `exact > bound` still holds after rounding `bound` upward.
pub fn exceeds_float(exact: &BigRational, bound: f64) -> bool {
    if bound.is_nan() {
        return false;
    }
    BigRational::from_float(round_up(bound)).is_some_and(|b| *exact > b)
}

/// Nearest `f64` to an exact rational, for display only.
pub fn rational_to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Rationals as `{"num": "...", "den": "..."}`; never as floats.
pub mod rational_json {
    use num_bigint::BigInt;
    use num_rational::BigRational;
    use serde::{de::Error as _, Deserialize, Deserializer, Serialize, Serializer};

    #[derive(Serialize, Deserialize)]
    struct Repr {
        num: String,
        den: String,
    }

    pub fn serialize<S: Serializer>(value: &BigRational, ser: S) -> Result<S::Ok, S::Error> {
        Repr {
            num: value.numer().to_string(),
            den: value.denom().to_string(),
        }
        .serialize(ser)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<BigRational, D::Error> {
        let repr = Repr::deserialize(de)?;
        let num: BigInt = repr.num.parse().map_err(D::Error::custom)?;
        let den: BigInt = repr.den.parse().map_err(D::Error::custom)?;
        if den <= BigInt::from(0) {
            return Err(D::Error::custom("denominator must be positive"));
        }
        Ok(BigRational::new(num, den))
    }

    pub fn to_value(value: &BigRational) -> serde_json::Value {
        serde_json::json!({ "num": value.numer().to_string(), "den": value.denom().to_string() })
    }
}
