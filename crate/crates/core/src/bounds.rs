//! Gilbert-Varshamov style existence bounds for CWS and cyclic codes, in
//! exact integer arithmetic, and their asymptotic forms.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::algebra::gcd;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GvVariant {
    /// `Σ_{s<d} 3^s C(n,s) < (2^n - 1) / (2^k - 1)`.
    Standard,
    /// `Σ_{s<d} (3^s - 3) gcd(s,n)/n C(n,s) <= 2^{n-k} - 2`.
    CyclicNonpalindromic,
    /// As above with `2^{⌊(n-k)/2⌋} - 2` on the right.
    CyclicPalindromicSimple,
    /// Symmetric errors only, `(3^{⌈s/2⌉} - 3) gcd(s,n)/n C(⌊n/2⌋,⌊s/2⌋)`,
    /// and the bound is `⌊d_GV / 2⌋`.
    CyclicPalindromicHalved,
}

impl GvVariant {
    pub const ALL: [GvVariant; 4] = [
        GvVariant::Standard,
        GvVariant::CyclicNonpalindromic,
        GvVariant::CyclicPalindromicSimple,
        GvVariant::CyclicPalindromicHalved,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GvVariant::Standard => "standard",
            GvVariant::CyclicNonpalindromic => "cyclic-nonpalindromic",
            GvVariant::CyclicPalindromicSimple => "cyclic-palindromic-simple",
            GvVariant::CyclicPalindromicHalved => "cyclic-palindromic-halved",
        }
    }
}

impl fmt::Display for GvVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GvVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GvVariant::ALL
            .into_iter()
            .find(|v| v.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown bound variant {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoundQuery {
    pub n: usize,
    pub k: usize,
    /// Extra cap on the distance, e.g. from the graph.
    pub d_max: Option<usize>,
    pub variant: GvVariant,
}

impl BoundQuery {
    pub fn new(n: usize, k: usize, variant: GvVariant) -> Self {
        BoundQuery { n, k, d_max: None, variant }
    }

    pub fn capped(mut self, d_max: usize) -> Self {
        self.d_max = Some(d_max);
        self
    }
}

/// One evaluated bound.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GvRow {
    pub n: usize,
    pub k: usize,
    pub variant: GvVariant,
    /// Largest `d` allowed by the inequality (halved for the halved
    /// variant).
    pub d_gv: usize,
    /// `d_gv` capped by `d_max`.
    pub d_capped: usize,
    /// A convention was applied instead of the inequality (`k = 0` for the
    /// standard variant, `k = n` for every variant).
    pub by_convention: bool,
}

fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

fn pow(base: u32, e: usize) -> BigInt {
    num_traits::pow(BigInt::from(base), e)
}

/// Both sides of the inequality for a candidate distance `d`, as exact
/// rationals: the sum over `1 <= s < d` and the right-hand side.
pub fn gv_sides(n: usize, k: usize, d: usize, variant: GvVariant) -> (BigRational, BigRational) {
    let nn = BigInt::from(n);
    let term = |s: usize| -> BigRational {
        let g = BigInt::from(gcd(s, n));
        match variant {
            GvVariant::Standard => BigRational::from_integer(pow(3, s) * BigInt::from(binomial(n, s))),
            GvVariant::CyclicNonpalindromic | GvVariant::CyclicPalindromicSimple => {
                BigRational::new((pow(3, s) - 3) * g * BigInt::from(binomial(n, s)), nn.clone())
            }
            GvVariant::CyclicPalindromicHalved => BigRational::new(
                (pow(3, s.div_ceil(2)) - 3) * g * BigInt::from(binomial(n / 2, s / 2)),
                nn.clone(),
            ),
        }
    };
    let lhs = (1..d).map(term).fold(BigRational::zero(), |a, t| a + t);
    let rhs = match variant {
        GvVariant::Standard => BigRational::new(pow(2, n) - 1, pow(2, k) - 1),
        GvVariant::CyclicNonpalindromic => BigRational::from_integer(pow(2, n - k) - 2),
        GvVariant::CyclicPalindromicSimple | GvVariant::CyclicPalindromicHalved => {
            BigRational::from_integer(pow(2, (n - k) / 2) - 2)
        }
    };
    (lhs, rhs)
}

fn satisfied(n: usize, k: usize, d: usize, variant: GvVariant) -> bool {
    let (lhs, rhs) = gv_sides(n, k, d, variant);
    match variant {
        GvVariant::Standard => lhs < rhs,
        _ => lhs <= rhs,
    }
}

pub fn gv_evaluate(q: &BoundQuery) -> Result<GvRow> {
    let BoundQuery { n, k, d_max, variant } = *q;
    if n == 0 || k > n {
        return Err(Error::InvalidArgument(format!("need 0 <= k <= n and n >= 1, got n={n}, k={k}")));
    }
    if d_max == Some(0) {
        return Err(Error::InvalidArgument("d_max must be at least 1".into()));
    }
    let (d_gv, by_convention) = if k == n {
        (1, true)
    } else if k == 0 && variant == GvVariant::Standard {
        // (2^n - 1)/(2^k - 1) is unbounded for k = 0.
        (n, true)
    } else {
        // The sums grow with d, so the first failure ends the scan.
        let mut d = 1;
        while d < n && satisfied(n, k, d + 1, variant) {
            d += 1;
        }
        let d = if satisfied(n, k, d, variant) { d } else { 1 };
        match variant {
            GvVariant::CyclicPalindromicHalved => ((d / 2).max(1), false),
            _ => (d, false),
        }
    };
    Ok(GvRow {
        n,
        k,
        variant,
        d_gv,
        d_capped: d_max.map_or(d_gv, |m| d_gv.min(m)),
        by_convention,
    })
}

/// Largest `d` from the selected inequality, capped by `d_max`.
pub fn gv_max_d(q: &BoundQuery) -> Result<usize> {
    Ok(gv_evaluate(q)?.d_capped)
}

/// Largest `k` with `gv_max_d(n, k) >= d`, if any.
pub fn gv_max_k(n: usize, d: usize, variant: GvVariant, d_max: Option<usize>) -> Result<Option<usize>> {
    if d == 0 {
        return Err(Error::InvalidArgument("d must be at least 1".into()));
    }
    for k in (0..=n).rev() {
        let q = BoundQuery { n, k, d_max, variant };
        if gv_max_d(&q)? >= d {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

pub fn binary_entropy(x: f64) -> f64 {
    if x <= 0.0 || x >= 1.0 {
        return 0.0;
    }
    -x * x.log2() - (1.0 - x) * (1.0 - x).log2()
}

/// `δ log2 3 + H2(δ)`.
pub fn gv_lhs(delta: f64) -> f64 {
    delta * 3f64.log2() + binary_entropy(delta)
}

/// Root of `δ log2 3 + H2(δ) = 1` in `(0, 1/2)`: the zero-rate relative
/// distance.
pub fn delta_zero() -> f64 {
    let (mut lo, mut hi) = (1e-12, 0.5);
    while hi - lo > 1e-12 {
        let mid = 0.5 * (lo + hi);
        if gv_lhs(mid) < 1.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// `d log2 3 + n H2(d/n)`: redundancy sufficient for distance `d`.
pub fn redundancy_bound(n: usize, d: usize) -> f64 {
    d as f64 * 3f64.log2() + n as f64 * binary_entropy(d as f64 / n as f64)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Asymptotics {
    pub h2: f64,
    pub gv_lhs: f64,
    pub delta_zero: f64,
}

pub fn asymptotics(delta: f64) -> Result<Asymptotics> {
    if !(delta > 0.0 && delta < 1.0) {
        return Err(Error::InvalidArgument(format!("δ = {delta} is outside (0, 1)")));
    }
    Ok(Asymptotics {
        h2: binary_entropy(delta),
        gv_lhs: gv_lhs(delta),
        delta_zero: delta_zero(),
    })
}
