//! Extremal constructions, closed-form spectral bounds, and exact order thresholds.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::forest::StarForest;
use crate::graph::Graph;
use crate::graph6::graph6_encode;

/// `K_{a,b}`; the side of size `a` comes first.
pub fn make_complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    Graph::empty(a)?.join(&Graph::empty(b)?)
}

/// `S_{n,h} = K_h ∇ \bar K_{n−h}`.
pub fn make_s(n: usize, h: usize) -> Result<Graph> {
    if h > n {
        return Err(Error::ParamOutOfRange(format!("S_(n,h) needs h <= n, got n = {n}, h = {h}")));
    }
    Graph::complete(h)?.join(&Graph::empty(n - h)?)
}

/// `S⁺_{n,h} = K_h ∇ (K_2 ∪ \bar K_{n−h−2})`.
pub fn make_s_plus(n: usize, h: usize) -> Result<Graph> {
    if h + 2 > n {
        return Err(Error::ParamOutOfRange(format!("S+_(n,h) needs h <= n - 2, got n = {n}, h = {h}")));
    }
    Graph::complete(h)?.join(&Graph::complete(2)?.union(&Graph::empty(n - h - 2)?)?)
}

/// `F_{n,k} = K_{k−1} ∇ (pK_2 ∪ K_s)` with `n − k + 1 = 2p + s`, `s ∈ {0, 1}`.
pub fn make_f(n: usize, k: usize) -> Result<Graph> {
    if k == 0 || k - 1 > n {
        return Err(Error::ParamOutOfRange(format!("F_(n,k) needs 1 <= k <= n + 1, got n = {n}, k = {k}")));
    }
    let m = n - (k - 1);
    let (p, s) = m.div_rem(&2);
    let mut h = Graph::empty(s)?;
    for _ in 0..p {
        h = Graph::complete(2)?.union(&h)?;
    }
    Graph::complete(k - 1)?.join(&h)
}

/// `K_{k−1} ∇ h`.
pub fn join_clique(k: usize, h: &Graph) -> Result<Graph> {
    if k == 0 {
        return Err(Error::ParamOutOfRange("k must be at least 1".into()));
    }
    Graph::complete(k - 1)?.join(h)
}

/// An `r`-regular circulant on `m` vertices: offsets `±1..±⌊r/2⌋`, plus the
/// antipodal offset `m/2` when `r` is odd.
pub fn regular_circulant(m: usize, r: usize) -> Result<Graph> {
    if (m <= r && m > 0) || (r * m) % 2 == 1 {
        return Err(Error::NoRegularGraph { degree: r, order: m });
    }
    let mut edges = Vec::with_capacity(m * r / 2);
    for v in 0..m {
        for off in 1..=r / 2 {
            edges.push((v, (v + off) % m));
        }
        if r % 2 == 1 && v < m / 2 {
            edges.push((v, v + m / 2));
        }
    }
    let g = Graph::from_edges(m, &edges)?;
    debug_assert!(g.is_regular(r));
    Ok(g)
}

/// `K_{k−1} ∇ H` with `H` a `(d−1)`-regular circulant on `n − k + 1` vertices.
pub fn make_join_regular(n: usize, k: usize, d: usize) -> Result<Graph> {
    if k < 2 || d < 1 || n < k {
        return Err(Error::ParamOutOfRange(format!(
            "needs k >= 2, d >= 1, n >= k; got n = {n}, k = {k}, d = {d}"
        )));
    }
    join_clique(k, &regular_circulant(n - k + 1, d - 1)?)
}

fn check_nk(n: usize, k: usize) -> Result<()> {
    if k < 2 || n < k {
        return Err(Error::ParamOutOfRange(format!("needs k >= 2 and n >= k; got n = {n}, k = {k}")));
    }
    Ok(())
}

/// `(k + d − 3 + √((k − d − 1)² + 4(k − 1)(n − k + 1))) / 2`: the largest adjacency
/// eigenvalue of `K_{k−1} ∇ H` for `H` `(d−1)`-regular, and an upper bound when `Δ(H) ≤ d − 1`.
pub fn spectral_radius_bound(n: usize, k: usize, d: usize) -> Result<f64> {
    check_nk(n, k)?;
    if d < 1 {
        return Err(Error::ParamOutOfRange("needs d >= 1".into()));
    }
    let (n, k, d) = (n as f64, k as f64, d as f64);
    let disc = (k - d - 1.0).powi(2) + 4.0 * (k - 1.0) * (n - k + 1.0);
    Ok((k + d - 3.0 + disc.sqrt()) / 2.0)
}

/// `√((k − 1)(n − k + 1))`, the spectral radius of `K_{k−1,n−k+1}`.
pub fn bipartite_spectral_radius_bound(n: usize, k: usize) -> Result<f64> {
    check_nk(n, k)?;
    Ok((((k - 1) * (n - k + 1)) as f64).sqrt())
}

/// `−√((k − 1)(n − k + 1))`, the least eigenvalue of `K_{k−1,n−k+1}`.
pub fn least_eigenvalue_bound(n: usize, k: usize) -> Result<f64> {
    bipartite_spectral_radius_bound(n, k).map(|v| -v)
}

/// `(n + 2k + 2d − 6 + √((n + 2k − 2d − 2)² − 8(k − 1)(k − d − 1))) / 2`, the
/// signless-Laplacian radius of `K_{k−1} ∇ H` for `H` `(d−1)`-regular.
pub fn signless_radius_bound(n: usize, k: usize, d: usize) -> Result<f64> {
    check_nk(n, k)?;
    if d < 1 {
        return Err(Error::ParamOutOfRange("needs d >= 1".into()));
    }
    let (n, k, d) = (n as f64, k as f64, d as f64);
    let disc = (n + 2.0 * k - 2.0 * d - 2.0).powi(2) - 8.0 * (k - 1.0) * (k - d - 1.0);
    if disc < 0.0 {
        return Err(Error::NegativeDiscriminant(disc));
    }
    Ok((n + 2.0 * k + 2.0 * d - 6.0 + disc.sqrt()) / 2.0)
}

/// Order thresholds above which the spectral bounds are proved.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ThresholdKind {
    /// `(Σ2d_i + 5k − 8)⁴(Σd_i + k − 2)⁴ / (k − 2)`, for arbitrary F-free graphs.
    General,
    /// `(Σ2d_i + 5k − 7)²(Σd_i + k − 2)²`, for connected F-free graphs.
    Connected,
    /// `f(k, d) = (k²(Σd_i + k − 2)²(Σ2d_i + 5k − 4)^{4k−2} + 2(k − 2)Σd_i) / (k − 2)`,
    /// for connected bipartite F-free graphs.
    ConnectedBipartite,
    /// `f(k, d)² / (4k − 8)`, for bipartite graphs and the least-eigenvalue bound.
    Bipartite,
}

impl ThresholdKind {
    pub const ALL: [ThresholdKind; 4] = [
        ThresholdKind::General,
        ThresholdKind::Connected,
        ThresholdKind::ConnectedBipartite,
        ThresholdKind::Bipartite,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ThresholdKind::General => "general",
            ThresholdKind::Connected => "connected",
            ThresholdKind::ConnectedBipartite => "connected_bipartite",
            ThresholdKind::Bipartite => "bipartite",
        }
    }
}

impl fmt::Display for ThresholdKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ThresholdKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<ThresholdKind> {
        Ok(match s {
            "general" | "thm_1_7" => ThresholdKind::General,
            "connected" | "thm_3_1" => ThresholdKind::Connected,
            "connected_bipartite" | "f_value" => ThresholdKind::ConnectedBipartite,
            "bipartite" | "thm_1_8_and_cor_1_9" => ThresholdKind::Bipartite,
            _ => {
                return Err(Error::Parse {
                    offset: 0,
                    msg: format!("unknown threshold kind {s:?}"),
                })
            }
        })
    }
}

fn f_value(f: &StarForest) -> Result<BigRational> {
    let k = BigInt::from(f.k());
    let s = BigInt::from(f.sum_d());
    if f.k() == 2 {
        return Err(Error::DivisionByZeroK2 { kind: "connected_bipartite" });
    }
    let a = &s + &k - 2;
    let b = BigInt::from(2) * &s + BigInt::from(5) * &k - 4;
    let exp = 4 * f.k() as u32 - 2;
    let num = &k * &k * &a * &a * num_traits::pow(b, exp as usize) + BigInt::from(2) * (&k - 2) * &s;
    Ok(BigRational::new(num, k - 2))
}

/// Exact value of the order threshold of the given kind.
pub fn threshold(kind: ThresholdKind, f: &StarForest) -> Result<BigRational> {
    if f.k() < 2 {
        return Err(Error::ParamOutOfRange(format!("thresholds need k >= 2, got k = {}", f.k())));
    }
    let k = BigInt::from(f.k());
    let s = BigInt::from(f.sum_d());
    let a = &s + &k - 2;
    match kind {
        ThresholdKind::General => {
            if f.k() == 2 {
                return Err(Error::DivisionByZeroK2 { kind: "general" });
            }
            let b = BigInt::from(2) * &s + BigInt::from(5) * &k - 8;
            let num = num_traits::pow(b, 4) * num_traits::pow(a, 4);
            Ok(BigRational::new(num, k - 2))
        }
        ThresholdKind::Connected => {
            let b = BigInt::from(2) * &s + BigInt::from(5) * &k - 7;
            Ok(BigRational::from_integer(&b * &b * &a * &a))
        }
        ThresholdKind::ConnectedBipartite => f_value(f),
        ThresholdKind::Bipartite => {
            let fv = f_value(f).map_err(|_| Error::DivisionByZeroK2 { kind: "bipartite" })?;
            Ok(&fv * &fv / BigRational::from_integer(BigInt::from(4) * k - 8))
        }
    }
}

/// Whether `n` is at least `value`.
pub fn order_clears(n: usize, value: &BigRational) -> bool {
    BigRational::from_integer(BigInt::from(n)) >= *value
}

/// Numeric payload of a [`BoundReport`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BoundValue {
    Real { value: f64 },
    Integer { value: u64 },
    /// `decimal` is exact when the expansion terminates within
    /// [`DECIMAL_DIGITS`] fractional digits and truncated otherwise.
    Rational {
        decimal: String,
        numerator: String,
        denominator: String,
    },
}

pub const DECIMAL_DIGITS: usize = 30;

impl BoundValue {
    pub fn exact(r: &BigRational) -> BoundValue {
        BoundValue::Rational {
            decimal: decimal_string(r, DECIMAL_DIGITS),
            numerator: r.numer().to_string(),
            denominator: r.denom().to_string(),
        }
    }

    /// Floating approximation (may be infinite for huge thresholds).
    pub fn as_f64(&self) -> f64 {
        match self {
            BoundValue::Real { value } => *value,
            BoundValue::Integer { value } => *value as f64,
            BoundValue::Rational { numerator, denominator, .. } => {
                let n: BigInt = numerator.parse().expect("stored numerator");
                let d: BigInt = denominator.parse().expect("stored denominator");
                BigRational::new(n, d).to_f64().unwrap_or(f64::INFINITY)
            }
        }
    }
}

/// Decimal expansion with at most `digits` fractional digits, truncated toward zero.
pub fn decimal_string(r: &BigRational, digits: usize) -> String {
    let neg = r.is_negative();
    let r = r.abs();
    let (int, mut rem) = r.numer().div_rem(r.denom());
    let mut out = if neg { format!("-{int}") } else { int.to_string() };
    if !rem.is_zero() {
        out.push('.');
        let ten = BigInt::from(10);
        for _ in 0..digits {
            if rem.is_zero() {
                break;
            }
            rem *= &ten;
            let (q, r2) = rem.div_rem(r.denom());
            out.push_str(&q.to_string());
            rem = r2;
        }
    }
    out
}

/// Parameters a bound was evaluated at.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct BoundParams {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub d: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub forest: Option<StarForest>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub name: String,
    pub params: BoundParams,
    pub value: BoundValue,
    /// graph6 of a graph attaining the bound, when one exists at these parameters.
    pub attained_by: Option<String>,
}

fn nkd(n: usize, k: usize, d: Option<usize>) -> BoundParams {
    BoundParams {
        n: Some(n),
        k: Some(k),
        d,
        forest: None,
    }
}

pub fn report_spectral_radius(n: usize, k: usize, d: usize) -> Result<BoundReport> {
    let value = spectral_radius_bound(n, k, d)?;
    Ok(BoundReport {
        name: "spectral_radius".into(),
        params: nkd(n, k, Some(d)),
        value: BoundValue::Real { value },
        attained_by: make_join_regular(n, k, d).ok().map(|g| graph6_encode(&g)),
    })
}

pub fn report_bipartite_spectral_radius(n: usize, k: usize) -> Result<BoundReport> {
    let value = bipartite_spectral_radius_bound(n, k)?;
    Ok(BoundReport {
        name: "bipartite_spectral_radius".into(),
        params: nkd(n, k, None),
        value: BoundValue::Real { value },
        attained_by: Some(graph6_encode(&make_complete_bipartite(k - 1, n - k + 1)?)),
    })
}

pub fn report_least_eigenvalue(n: usize, k: usize) -> Result<BoundReport> {
    let value = least_eigenvalue_bound(n, k)?;
    Ok(BoundReport {
        name: "least_eigenvalue".into(),
        params: nkd(n, k, None),
        value: BoundValue::Real { value },
        attained_by: Some(graph6_encode(&make_complete_bipartite(k - 1, n - k + 1)?)),
    })
}

pub fn report_signless_radius(n: usize, k: usize, d: usize) -> Result<BoundReport> {
    let value = signless_radius_bound(n, k, d)?;
    Ok(BoundReport {
        name: "signless_radius".into(),
        params: nkd(n, k, Some(d)),
        value: BoundValue::Real { value },
        attained_by: make_join_regular(n, k, d).ok().map(|g| graph6_encode(&g)),
    })
}

pub fn report_coarse_edges(f: &StarForest, n: usize) -> Result<BoundReport> {
    let value = crate::forest::coarse_edge_bound(f, n)?;
    Ok(BoundReport {
        name: "coarse_edges".into(),
        params: BoundParams {
            n: Some(n),
            forest: Some(f.clone()),
            ..Default::default()
        },
        value: BoundValue::Integer { value },
        attained_by: None,
    })
}

pub fn report_large_n_edges(f: &StarForest, n: usize) -> Result<BoundReport> {
    let value = crate::forest::large_n_edge_bound(f, n)?;
    Ok(BoundReport {
        name: "large_n_edges".into(),
        params: BoundParams {
            n: Some(n),
            forest: Some(f.clone()),
            ..Default::default()
        },
        value: BoundValue::Integer { value },
        attained_by: None,
    })
}

pub fn report_threshold(kind: ThresholdKind, f: &StarForest) -> Result<BoundReport> {
    let value = threshold(kind, f)?;
    Ok(BoundReport {
        name: format!("threshold_{}", kind.name()),
        params: BoundParams {
            forest: Some(f.clone()),
            ..Default::default()
        },
        value: BoundValue::exact(&value),
        attained_by: None,
    })
}
