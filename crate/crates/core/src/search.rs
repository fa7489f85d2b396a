//! Exhaustive searches over enumerated classes: spectral maxima under F-freeness,
//! edge-bound checks, signless-Laplacian margins, and result persistence.

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::canon::CanonicalCode;
use crate::enumerate::{par_fold, GraphClass};
use crate::error::{Error, Result};
use crate::extremal::{
    bipartite_spectral_radius_bound, join_clique, make_complete_bipartite, order_clears, regular_circulant,
    signless_radius_bound, spectral_radius_bound, threshold, ThresholdKind,
};
use crate::forest::{coarse_edge_bound, is_f_free, StarForest};
use crate::graph::Graph;
use crate::graph6::graph6_encode;
use crate::spectra::{signless_laplacian_radius, spectral_radius, CHECK_TOL};

/// Outcome of one exhaustive spectral-radius search.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchRecord {
    pub n: usize,
    pub class: GraphClass,
    pub forest: StarForest,
    pub count_enumerated: u64,
    pub count_f_free: u64,
    pub max_rho: f64,
    /// Every maximizer up to isomorphism, graph6 in canonical form, sorted by code.
    pub argmax: Vec<String>,
    /// Closed-form bound for the class at `(n, k, d_k)`, when defined.
    pub bound_value: Option<f64>,
    /// Whether `n` is large enough for the bound to be proved.
    pub bound_applicable: bool,
    /// `bound_value − max_rho`.
    pub gap: Option<f64>,
    /// The F-free construction for this class, and its spectral radius.
    pub family: Option<String>,
    pub family_rho: Option<f64>,
}

/// `K_{k−1} ∇ H` with `Δ(H) ≤ d − 1`: `H` is a `(d−1)`-regular circulant when one
/// exists, otherwise a circulant on `n − k` vertices plus an isolated vertex, or a
/// clique when `H` is too small to reach degree `d − 1`.
pub fn join_bounded_family(n: usize, k: usize, d: usize) -> Result<Graph> {
    if k < 2 || d < 1 || n < k {
        return Err(Error::ParamOutOfRange(format!(
            "needs k >= 2, d >= 1, n >= k; got n = {n}, k = {k}, d = {d}"
        )));
    }
    let (m, r) = (n - k + 1, d - 1);
    let h = if m <= r {
        Graph::complete(m)?
    } else if let Ok(h) = regular_circulant(m, r) {
        h
    } else {
        regular_circulant(m - 1, r)?.union(&Graph::empty(1)?)?
    };
    join_clique(k, &h)
}

/// The F-free construction whose spectral radius bounds the class maximum from below.
pub fn class_family(n: usize, f: &StarForest, class: GraphClass) -> Option<Graph> {
    let k = f.k();
    if k < 2 || n < k {
        return None;
    }
    if class.is_bipartite() {
        make_complete_bipartite(k - 1, n - k + 1).ok()
    } else {
        join_bounded_family(n, k, f.min_degree()).ok()
    }
}

/// Closed-form bound for the class, and whether `n` clears the proof's threshold.
///
/// Bipartite classes also count as covered when `F = kS_2` and `n ≥ 11k − 4`, where
/// the bipartite bound is known at small order.
pub fn class_bound(n: usize, f: &StarForest, class: GraphClass) -> (Option<f64>, bool) {
    let (k, d) = (f.k(), f.min_degree());
    if class.is_bipartite() {
        let Ok(value) = bipartite_spectral_radius_bound(n, k) else {
            return (None, false);
        };
        let kind = if class == GraphClass::ConnectedBipartite {
            ThresholdKind::ConnectedBipartite
        } else {
            ThresholdKind::Bipartite
        };
        let by_threshold = threshold(kind, f).map(|t| order_clears(n, &t)).unwrap_or(false);
        let small = f.degrees().iter().all(|&x| x == 2) && n + 4 >= 11 * k;
        (Some(value), by_threshold || small)
    } else {
        let Ok(value) = spectral_radius_bound(n, k, d) else {
            return (None, false);
        };
        let kind = if class == GraphClass::Connected {
            ThresholdKind::Connected
        } else {
            ThresholdKind::General
        };
        let applicable = threshold(kind, f).map(|t| order_clears(n, &t)).unwrap_or(false);
        (Some(value), applicable)
    }
}

#[derive(Default)]
struct Best {
    enumerated: u64,
    free: u64,
    max: f64,
    argmax: Vec<(CanonicalCode, Graph, f64)>,
}

impl Best {
    fn offer(&mut self, code: &CanonicalCode, g: &Graph, rho: f64) {
        if self.argmax.is_empty() || rho > self.max + CHECK_TOL {
            self.max = rho;
            self.argmax.clear();
            self.argmax.push((code.clone(), *g, rho));
        } else if rho >= self.max - CHECK_TOL {
            self.max = self.max.max(rho);
            self.argmax.push((code.clone(), *g, rho));
        }
    }

    fn merge(mut self, other: Best) -> Best {
        self.enumerated += other.enumerated;
        self.free += other.free;
        for (c, g, r) in other.argmax {
            self.offer(&c, &g, r);
        }
        self
    }
}

/// Scans every graph of order `n` in `class`, keeps the F-free ones, and records
/// the maximum spectral radius with all maximizers.
pub fn extremal_search(n: usize, f: &StarForest, class: GraphClass) -> Result<SearchRecord> {
    let best = par_fold(
        n,
        class,
        Best::default,
        |mut acc, g, code| {
            acc.enumerated += 1;
            if is_f_free(g, f) {
                acc.free += 1;
                let rho = if g.order() == 0 { 0.0 } else { spectral_radius(g).expect("nonempty") };
                acc.offer(code, g, rho);
            }
            acc
        },
        Best::merge,
    )?;
    if best.free == 0 {
        return Err(Error::EmptyClass);
    }
    let mut argmax: Vec<(CanonicalCode, Graph, f64)> =
        best.argmax.into_iter().filter(|(_, _, r)| *r >= best.max - CHECK_TOL).collect();
    argmax.sort_by(|a, b| a.0.cmp(&b.0));
    let (bound_value, bound_applicable) = class_bound(n, f, class);
    let family = class_family(n, f, class).filter(|g| class.contains(g) && is_f_free(g, f));
    let family_rho = family.as_ref().map(|g| spectral_radius(g).expect("nonempty"));
    Ok(SearchRecord {
        n,
        class,
        forest: f.clone(),
        count_enumerated: best.enumerated,
        count_f_free: best.free,
        max_rho: best.max,
        argmax: argmax.iter().map(|(_, g, _)| graph6_encode(g)).collect(),
        bound_value,
        bound_applicable,
        gap: bound_value.map(|b| b - best.max),
        family: family.as_ref().map(graph6_encode),
        family_rho,
    })
}

/// An F-free graph with more edges than the coarse edge bound allows.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeViolation {
    pub graph: String,
    pub edges: u64,
    pub bound: u64,
}

/// Result of an edge-bound scan.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeScan {
    pub n: usize,
    pub class: GraphClass,
    pub forest: StarForest,
    pub bound: u64,
    pub count_f_free: u64,
    pub max_edges: u64,
    pub violations: Vec<EdgeViolation>,
}

/// Checks the coarse edge bound on every F-free graph of order `n` in `class`.
pub fn verify_edge_bound(n: usize, f: &StarForest, class: GraphClass) -> Result<EdgeScan> {
    let bound = coarse_edge_bound(f, n)?;
    let (free, max_edges, mut violations) = par_fold(
        n,
        class,
        || (0u64, 0u64, Vec::new()),
        |(mut free, mut max_e, mut v), g, _| {
            if is_f_free(g, f) {
                free += 1;
                let e = g.edge_count() as u64;
                max_e = max_e.max(e);
                if e > bound {
                    v.push(EdgeViolation {
                        graph: graph6_encode(g),
                        edges: e,
                        bound,
                    });
                }
            }
            (free, max_e, v)
        },
        |a, mut b| {
            let mut v = a.2;
            v.append(&mut b.2);
            (a.0 + b.0, a.1.max(b.1), v)
        },
    )?;
    violations.sort_by(|a, b| a.graph.cmp(&b.graph));
    Ok(EdgeScan {
        n,
        class,
        forest: f.clone(),
        bound,
        count_f_free: free,
        max_edges,
        violations,
    })
}

/// One graph's signless-Laplacian radius against the conjectured bound.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MarginRow {
    pub label: String,
    pub graph: String,
    pub q: f64,
    pub margin: f64,
}

/// `q(G) − bound` over all F-free graphs of a class.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MarginTable {
    pub n: usize,
    pub class: GraphClass,
    pub forest: StarForest,
    pub bound: f64,
    pub count_f_free: u64,
    pub max_margin: f64,
    /// Graphs attaining `max_margin` within tolerance.
    pub argmax: Vec<String>,
    /// Graphs with `q(G) > bound + tolerance`; small orders are below the
    /// conjecture's range, so these are observations rather than failures.
    pub exceeding: Vec<MarginRow>,
    /// The conjectured extremal graph and the edgeless graph, for reference.
    pub reference: Vec<MarginRow>,
}

/// Compares `q(G)` with the conjectured signless-Laplacian bound on every
/// F-free graph of order `n` in `class`.
pub fn test_conjecture_q(n: usize, f: &StarForest, class: GraphClass) -> Result<MarginTable> {
    let k = f.k();
    if k < 2 {
        return Err(Error::ParamOutOfRange(format!("needs k >= 2, got k = {k}")));
    }
    let bound = signless_radius_bound(n, k, f.min_degree())?;
    #[derive(Default)]
    struct Acc {
        free: u64,
        max: Option<f64>,
        argmax: Vec<(CanonicalCode, Graph)>,
        exceeding: Vec<(CanonicalCode, MarginRow)>,
    }
    let acc = par_fold(
        n,
        class,
        Acc::default,
        |mut acc, g, code| {
            if !is_f_free(g, f) {
                return acc;
            }
            acc.free += 1;
            let q = signless_laplacian_radius(g).expect("nonempty");
            let margin = q - bound;
            match acc.max {
                Some(m) if margin < m - CHECK_TOL => {}
                Some(m) if margin <= m + CHECK_TOL => {
                    acc.max = Some(m.max(margin));
                    acc.argmax.push((code.clone(), *g));
                }
                _ => {
                    acc.max = Some(margin);
                    acc.argmax = vec![(code.clone(), *g)];
                }
            }
            if margin > CHECK_TOL {
                acc.exceeding.push((
                    code.clone(),
                    MarginRow {
                        label: "exceeds".into(),
                        graph: graph6_encode(g),
                        q,
                        margin,
                    },
                ));
            }
            acc
        },
        |mut a, b| {
            a.free += b.free;
            a.exceeding.extend(b.exceeding);
            match (a.max, b.max) {
                (_, None) => {}
                (None, Some(_)) => {
                    a.max = b.max;
                    a.argmax = b.argmax;
                }
                (Some(x), Some(y)) => {
                    if y > x + CHECK_TOL {
                        a.max = b.max;
                        a.argmax = b.argmax;
                    } else if y >= x - CHECK_TOL {
                        a.max = Some(x.max(y));
                        a.argmax.extend(b.argmax);
                    }
                }
            }
            a
        },
    )?;
    let max_margin = acc.max.ok_or(Error::EmptyClass)?;
    let mut argmax = acc.argmax;
    argmax.sort_by(|a, b| a.0.cmp(&b.0));
    let mut exceeding = acc.exceeding;
    exceeding.sort_by(|a, b| a.0.cmp(&b.0));
    let mut reference = Vec::new();
    if let Some(g) = class_family(n, f, GraphClass::All).filter(|g| class.contains(g)) {
        let q = signless_laplacian_radius(&g)?;
        reference.push(MarginRow {
            label: "family".into(),
            graph: graph6_encode(&g),
            q,
            margin: q - bound,
        });
    }
    let empty = Graph::empty(n)?;
    if class.contains(&empty) {
        let q = signless_laplacian_radius(&empty)?;
        reference.push(MarginRow {
            label: "edgeless".into(),
            graph: graph6_encode(&empty),
            q,
            margin: q - bound,
        });
    }
    Ok(MarginTable {
        n,
        class,
        forest: f.clone(),
        bound,
        count_f_free: acc.free,
        max_margin,
        argmax: argmax.iter().map(|(_, g)| graph6_encode(g)).collect(),
        exceeding: exceeding.into_iter().map(|(_, r)| r).collect(),
        reference,
    })
}

/// Outcome of a property suite: how many cases ran and what failed.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checked: u64,
    pub violations: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// For each parity-feasible `(n, k, d)` in the grid: `ρ(K_{k−1} ∇ H)` equals the
/// closed form when `H` is `(d−1)`-regular, and deleting any one edge of `H` drops
/// it by more than `1e-6`.
pub fn verify_join_regular(k_max: usize, d_max: usize, n_max: usize) -> Result<SuiteReport> {
    let mut report = SuiteReport {
        suite: "join_regular".into(),
        ..Default::default()
    };
    for k in 2..=k_max {
        for d in 1..=d_max {
            for n in k..=n_max {
                let m = n - k + 1;
                let Ok(h) = regular_circulant(m, d - 1) else {
                    continue;
                };
                let bound = spectral_radius_bound(n, k, d)?;
                let rho = spectral_radius(&join_clique(k, &h)?)?;
                report.checked += 1;
                if (rho - bound).abs() > CHECK_TOL {
                    report
                        .violations
                        .push(format!("n = {n}, k = {k}, d = {d}: rho = {rho}, closed form = {bound}"));
                }
                let first = h.edges().next();
                if let Some((u, v)) = first {
                    let rho = spectral_radius(&join_clique(k, &h.without_edge(u, v)?)?)?;
                    report.checked += 1;
                    if rho >= bound - 1e-6 {
                        report.violations.push(format!(
                            "n = {n}, k = {k}, d = {d}: deleting ({u}, {v}) leaves rho = {rho}, closed form = {bound}"
                        ));
                    }
                }
            }
        }
    }
    Ok(report)
}

/// Bipartite scan: every F-free graph of order `n` in a bipartite class satisfies
/// `ρ ≤ n/2`; when the bipartite bound is known to hold at `n`, also
/// `ρ ≤ √((k−1)(n−k+1))` with equality only at `K_{k−1,n−k+1}`.
pub fn verify_bipartite(n: usize, f: &StarForest, class: GraphClass) -> Result<SuiteReport> {
    if !class.is_bipartite() {
        return Err(Error::ParamOutOfRange(format!("class {class} is not bipartite")));
    }
    let (bound, applicable) = class_bound(n, f, class);
    let extremal = bound.and_then(|_| {
        make_complete_bipartite(f.k() - 1, n - f.k() + 1)
            .ok()
            .map(|g| crate::canon::canonical_code(&g).expect("order within ceiling"))
    });
    let (checked, mut violations) = par_fold(
        n,
        class,
        || (0u64, Vec::new()),
        |(mut checked, mut v), g, code| {
            if !is_f_free(g, f) || g.order() == 0 {
                return (checked, v);
            }
            checked += 1;
            let rho = spectral_radius(g).expect("nonempty");
            if rho > n as f64 / 2.0 + CHECK_TOL {
                v.push(format!("{}: rho = {rho} exceeds n/2", graph6_encode(g)));
            }
            if let (Some(b), true) = (bound, applicable) {
                if rho > b + CHECK_TOL {
                    v.push(format!("{}: rho = {rho} exceeds {b}", graph6_encode(g)));
                } else if rho >= b - CHECK_TOL && Some(code) != extremal.as_ref() {
                    v.push(format!("{}: attains {b} but is not K_(k-1,n-k+1)", graph6_encode(g)));
                }
            }
            (checked, v)
        },
        |mut a, mut b| {
            a.1.append(&mut b.1);
            (a.0 + b.0, a.1)
        },
    )?;
    violations.sort();
    Ok(SuiteReport {
        suite: "bipartite".into(),
        checked,
        violations,
    })
}

/// Writes one JSON object per line.
pub fn write_records<T: Serialize>(records: &[T], path: &Path) -> Result<()> {
    let io = |source| Error::Io {
        path: path.to_path_buf(),
        source,
    };
    let mut out = BufWriter::new(File::create(path).map_err(io)?);
    for r in records {
        let line = serde_json::to_string(r).expect("records serialize");
        writeln!(out, "{line}").map_err(io)?;
    }
    out.flush().map_err(io)
}

/// Reads a JSON-lines file written by [`write_records`]; blank lines are skipped.
pub fn read_records<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<Vec<T>> {
    let io = |source| Error::Io {
        path: path.to_path_buf(),
        source,
    };
    let reader = BufReader::new(File::open(path).map_err(io)?);
    let mut out = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line.map_err(io)?;
        if line.trim().is_empty() {
            continue;
        }
        out.push(serde_json::from_str(&line).map_err(|e| Error::RecordParse {
            path: path.to_path_buf(),
            line: i + 1,
            msg: e.to_string(),
        })?);
    }
    Ok(out)
}
