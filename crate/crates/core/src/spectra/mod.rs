//! Adjacency and signless-Laplacian spectra.
//!
//! The dense Jacobi solver is the reference: it returns every eigenvalue with a
//! residual certificate. Power iteration is the fast path for extreme eigenvalues;
//! it runs per connected component and falls back to the dense solver whenever it
//! fails to settle within its iteration budget.

pub mod jacobi;
pub mod power;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Bits, Graph};

use self::jacobi::{max_residual, symmetric_eigen};
use self::power::{perturbed_start, power_iterate};

/// Off-diagonal tolerance for the dense solver.
pub const SOLVER_TOL: f64 = 1e-12;
/// Tolerance used when cross-checking two computed quantities.
pub const CHECK_TOL: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    CyclicJacobi,
    PowerIteration,
}

/// Every eigenvalue of a graph matrix, largest first.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SpectrumResult {
    pub eigenvalues: Vec<f64>,
    pub method: Method,
    pub max_residual: f64,
}

impl SpectrumResult {
    pub fn largest(&self) -> f64 {
        self.eigenvalues[0]
    }

    pub fn least(&self) -> f64 {
        *self.eigenvalues.last().expect("spectrum is nonempty")
    }
}

/// Perron eigenvector of a connected graph, scaled so its largest entry is 1.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PerronData {
    pub rho: f64,
    pub vector: Vec<f64>,
    pub min_entry: f64,
    /// `‖Ax − ρx‖∞` for the reported vector.
    pub residual: f64,
}

/// Outcome of the `x_u ≥ 1/ρ` entry-floor diagnostic.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PerronFloor {
    pub holds: bool,
    /// `min_entry − 1/ρ`.
    pub margin: f64,
    pub perron: PerronData,
}

pub fn adjacency_matrix(g: &Graph) -> Vec<f64> {
    let n = g.order();
    let mut m = vec![0.0; n * n];
    for (u, v) in g.edges() {
        m[u * n + v] = 1.0;
        m[v * n + u] = 1.0;
    }
    m
}

/// `Q = D + A`.
pub fn signless_laplacian_matrix(g: &Graph) -> Vec<f64> {
    let n = g.order();
    let mut m = adjacency_matrix(g);
    for v in 0..n {
        m[v * n + v] = g.degree(v) as f64;
    }
    m
}

fn nonempty(g: &Graph) -> Result<()> {
    if g.order() == 0 {
        Err(Error::EmptyGraph)
    } else {
        Ok(())
    }
}

fn dense_spectrum(m: &[f64], n: usize) -> Result<SpectrumResult> {
    let e = symmetric_eigen(m, n, SOLVER_TOL)?;
    let max_residual = max_residual(m, &e);
    let mut eigenvalues = e.values;
    eigenvalues.sort_by(|a, b| b.total_cmp(a));
    Ok(SpectrumResult {
        eigenvalues,
        method: Method::CyclicJacobi,
        max_residual,
    })
}

pub fn adjacency_spectrum(g: &Graph) -> Result<SpectrumResult> {
    nonempty(g)?;
    dense_spectrum(&adjacency_matrix(g), g.order())
}

pub fn signless_laplacian_spectrum(g: &Graph) -> Result<SpectrumResult> {
    nonempty(g)?;
    dense_spectrum(&signless_laplacian_matrix(g), g.order())
}

#[inline]
fn adjacency_apply(g: &Graph, x: &[f64], y: &mut [f64]) {
    for (v, out) in y.iter_mut().enumerate() {
        *out = Bits(g.neighbors(v)).map(|w| x[w]).sum();
    }
}

/// Runs `solve` on every component with at least two vertices and combines the
/// answers with `pick`; single vertices contribute `isolated`.
fn per_component<F>(g: &Graph, isolated: f64, pick: fn(f64, f64) -> f64, solve: F) -> Result<f64>
where
    F: Fn(&Graph) -> Result<f64>,
{
    nonempty(g)?;
    let mut acc: Option<f64> = None;
    for comp in g.components() {
        let value = if comp.count_ones() == 1 {
            isolated
        } else if comp == g.vertex_mask() {
            solve(g)?
        } else {
            solve(&g.induced(comp))?
        };
        acc = Some(acc.map_or(value, |a| pick(a, value)));
    }
    Ok(acc.expect("nonempty graph has a component"))
}

/// Largest adjacency eigenvalue of a connected graph on at least two vertices.
fn connected_radius(h: &Graph) -> Result<f64> {
    // A + I keeps −ρ from competing with ρ on bipartite components.
    let out = power_iterate(
        |x, y| {
            adjacency_apply(h, x, y);
            y.iter_mut().zip(x).for_each(|(a, b)| *a += b);
        },
        vec![1.0; h.order()],
    );
    if out.converged {
        Ok(out.value - 1.0)
    } else {
        Ok(adjacency_spectrum(h)?.largest())
    }
}

/// Spectral radius `ρ(G)`, the largest adjacency eigenvalue.
pub fn spectral_radius(g: &Graph) -> Result<f64> {
    per_component(g, 0.0, f64::max, connected_radius)
}

/// Least adjacency eigenvalue, from the largest eigenvalue of `ΔI − A`.
pub fn least_eigenvalue(g: &Graph) -> Result<f64> {
    per_component(g, 0.0, f64::min, |h| {
        let c = h.max_degree() as f64;
        let out = power_iterate(
            |x, y| {
                adjacency_apply(h, x, y);
                y.iter_mut().zip(x).for_each(|(a, b)| *a = c * b - *a);
            },
            perturbed_start(h.order()),
        );
        if out.converged {
            Ok(c - out.value)
        } else {
            Ok(adjacency_spectrum(h)?.least())
        }
    })
}

/// Signless Laplacian spectral radius `q(G)`.
pub fn signless_laplacian_radius(g: &Graph) -> Result<f64> {
    per_component(g, 0.0, f64::max, |h| {
        let deg: Vec<f64> = (0..h.order()).map(|v| h.degree(v) as f64).collect();
        let out = power_iterate(
            |x, y| {
                adjacency_apply(h, x, y);
                for i in 0..y.len() {
                    y[i] += deg[i] * x[i];
                }
            },
            vec![1.0; h.order()],
        );
        if out.converged {
            Ok(out.value)
        } else {
            Ok(signless_laplacian_spectrum(h)?.largest())
        }
    })
}

/// Positive eigenvector of `ρ(G)` for a connected graph, max entry 1.
///
/// Deterministic: power iteration from the all-ones vector, or the dense solver's
/// eigenvector if the iteration does not settle.
pub fn perron_vector(g: &Graph) -> Result<PerronData> {
    nonempty(g)?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.order();
    let (rho, mut x) = if n == 1 {
        (0.0, vec![1.0])
    } else {
        let out = power_iterate(
            |x, y| {
                adjacency_apply(g, x, y);
                y.iter_mut().zip(x).for_each(|(a, b)| *a += b);
            },
            vec![1.0; n],
        );
        if out.converged {
            (out.value - 1.0, out.vector)
        } else {
            let m = adjacency_matrix(g);
            let e = symmetric_eigen(&m, n, SOLVER_TOL)?;
            let top = (0..n)
                .max_by(|&a, &b| e.values[a].total_cmp(&e.values[b]))
                .expect("n >= 1");
            let mut v = e.vector(top);
            if v.iter().sum::<f64>() < 0.0 {
                v.iter_mut().for_each(|a| *a = -*a);
            }
            (e.values[top], v)
        }
    };
    let max = x.iter().cloned().fold(f64::MIN, f64::max);
    x.iter_mut().for_each(|v| *v /= max);
    let mut y = vec![0.0; n];
    adjacency_apply(g, &x, &mut y);
    let residual = x
        .iter()
        .zip(&y)
        .map(|(a, b)| (b - rho * a).abs())
        .fold(0.0, f64::max);
    let min_entry = x.iter().cloned().fold(f64::MAX, f64::min);
    Ok(PerronData {
        rho,
        vector: x,
        min_entry,
        residual,
    })
}

/// Checks `min_u x_u ≥ 1/ρ − 1e−9` for the max-normalized Perron vector.
///
/// Diagnostic for arbitrary graphs; the floor is only guaranteed for spectral
/// extremal F-free connected bipartite graphs.
pub fn check_perron_floor(g: &Graph) -> Result<PerronFloor> {
    let perron = perron_vector(g)?;
    if perron.rho <= 0.0 {
        return Err(Error::ParamOutOfRange(
            "entry floor needs at least one edge (rho > 0)".into(),
        ));
    }
    let margin = perron.min_entry - 1.0 / perron.rho;
    Ok(PerronFloor {
        holds: margin >= -CHECK_TOL,
        margin,
        perron,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() < CHECK_TOL
    }

    fn kb(a: usize, b: usize) -> Graph {
        Graph::empty(a).unwrap().join(&Graph::empty(b).unwrap()).unwrap()
    }

    #[test]
    fn adjacency_spectrum_examples() {
        let s = adjacency_spectrum(&Graph::complete(2).unwrap()).unwrap();
        assert!(close(s.eigenvalues[0], 1.0) && close(s.eigenvalues[1], -1.0));
        let s = adjacency_spectrum(&kb(2, 3)).unwrap();
        assert!(close(s.largest(), 6f64.sqrt()));
        assert!(close(s.least(), -(6f64.sqrt())));
        let s = adjacency_spectrum(&Graph::complete(3).unwrap()).unwrap();
        for (got, want) in s.eigenvalues.iter().zip([2.0, -1.0, -1.0]) {
            assert!(close(*got, want));
        }
        assert!(s.max_residual <= 1e-12);
        assert_eq!(s.method, Method::CyclicJacobi);
    }

    #[test]
    fn empty_graph_rejected() {
        let g = Graph::empty(0).unwrap();
        assert!(matches!(adjacency_spectrum(&g), Err(Error::EmptyGraph)));
        assert!(matches!(spectral_radius(&g), Err(Error::EmptyGraph)));
        assert!(matches!(least_eigenvalue(&g), Err(Error::EmptyGraph)));
        assert!(matches!(signless_laplacian_radius(&g), Err(Error::EmptyGraph)));
        assert!(matches!(perron_vector(&g), Err(Error::EmptyGraph)));
    }

    #[test]
    fn spectral_radius_examples() {
        assert!(close(spectral_radius(&Graph::complete(4).unwrap()).unwrap(), 3.0));
        assert_eq!(spectral_radius(&Graph::empty(5).unwrap()).unwrap(), 0.0);
        // Disconnected: max over components.
        let g = Graph::complete(4).unwrap().union(&Graph::cycle(5).unwrap()).unwrap();
        assert!(close(spectral_radius(&g).unwrap(), 3.0));
    }

    #[test]
    fn least_eigenvalue_examples() {
        assert!(close(least_eigenvalue(&kb(2, 3)).unwrap(), -(6f64.sqrt())));
        assert_eq!(least_eigenvalue(&Graph::empty(4).unwrap()).unwrap(), 0.0);
        assert!(close(least_eigenvalue(&Graph::complete(4).unwrap()).unwrap(), -1.0));
        // Regular graphs: all-ones is orthogonal to the bottom eigenvector.
        let c6 = Graph::cycle(6).unwrap();
        assert!(close(least_eigenvalue(&c6).unwrap(), -2.0));
        let petersen_outer = Graph::cycle(5).unwrap();
        let want = 2.0 * (4.0 * std::f64::consts::PI / 5.0).cos();
        assert!(close(least_eigenvalue(&petersen_outer).unwrap(), want));
    }

    #[test]
    fn signless_laplacian_examples() {
        assert!(close(signless_laplacian_radius(&Graph::complete(2).unwrap()).unwrap(), 2.0));
        assert!(close(signless_laplacian_radius(&Graph::cycle(4).unwrap()).unwrap(), 4.0));
        let s = signless_laplacian_spectrum(&Graph::path(3).unwrap()).unwrap();
        assert!(close(s.eigenvalues.iter().sum::<f64>(), 4.0));
    }

    #[test]
    fn perron_examples() {
        let star = kb(1, 3);
        let p = perron_vector(&star).unwrap();
        assert!(close(p.vector[0], 1.0));
        for leaf in 1..4 {
            assert!(close(p.vector[leaf], 1.0 / 3f64.sqrt()));
        }
        let p = perron_vector(&Graph::complete(4).unwrap()).unwrap();
        assert!(p.vector.iter().all(|&v| close(v, 1.0)));
        let p = perron_vector(&Graph::path(3).unwrap()).unwrap();
        assert!(close(p.vector[1], 1.0));
        assert!(close(p.vector[0], 1.0 / 2f64.sqrt()));
        assert!(close(p.rho, 2f64.sqrt()));
        assert!(p.residual < CHECK_TOL);
        assert_eq!(p.vector.iter().cloned().fold(f64::MIN, f64::max), 1.0);
    }

    #[test]
    fn perron_requires_connected() {
        let g = Graph::empty(2).unwrap();
        assert!(matches!(perron_vector(&g), Err(Error::Disconnected)));
        assert!(matches!(check_perron_floor(&g), Err(Error::Disconnected)));
    }

    #[test]
    fn perron_floor() {
        let f = check_perron_floor(&kb(2, 9)).unwrap();
        assert!(f.holds);
        for n in 2..8 {
            assert!(check_perron_floor(&Graph::complete(n).unwrap()).unwrap().holds);
        }
        // P6 is reported, not judged.
        let f = check_perron_floor(&Graph::path(6).unwrap()).unwrap();
        assert!(f.margin.is_finite());
        assert!(check_perron_floor(&Graph::empty(1).unwrap()).is_err());
    }
}
