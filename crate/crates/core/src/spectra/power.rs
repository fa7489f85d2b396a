//! Power iteration with Rayleigh-quotient stopping.

/// Relative Rayleigh-quotient change that counts as converged.
pub const RQ_TOL: f64 = 1e-13;
/// Residual `‖Mx − θx‖₂` (unit `x`) that must also be met, relative to `max(1, |θ|)`.
pub const RESIDUAL_TOL: f64 = 1e-11;
/// Iteration cap before callers fall back to the dense solver.
pub const MAX_ITERATIONS: usize = 20_000;

#[derive(Clone, Debug)]
pub struct PowerOutcome {
    /// Final Rayleigh quotient.
    pub value: f64,
    /// Unit 2-norm iterate.
    pub vector: Vec<f64>,
    pub iterations: usize,
    pub converged: bool,
}

/// Iterates `x ← Mx / ‖Mx‖` from `start`, where `apply(x, y)` writes `Mx` into `y`.
///
/// `M` should be positive semidefinite on the relevant subspace so the dominant
/// eigenvalue in magnitude is the largest one.
pub fn power_iterate<F>(apply: F, start: Vec<f64>) -> PowerOutcome
where
    F: Fn(&[f64], &mut [f64]),
{
    let n = start.len();
    let mut x = start;
    normalize(&mut x);
    let mut y = vec![0.0; n];
    let mut prev = f64::NAN;
    for it in 1..=MAX_ITERATIONS {
        apply(&x, &mut y);
        let theta: f64 = x.iter().zip(&y).map(|(a, b)| a * b).sum();
        let resid = x
            .iter()
            .zip(&y)
            .map(|(a, b)| (b - theta * a) * (b - theta * a))
            .sum::<f64>()
            .sqrt();
        let norm = y.iter().map(|v| v * v).sum::<f64>().sqrt();
        let settled = (theta - prev).abs() <= RQ_TOL * theta.abs().max(f64::MIN_POSITIVE);
        if norm == 0.0 || (settled && resid <= RESIDUAL_TOL * theta.abs().max(1.0)) {
            return PowerOutcome {
                value: theta,
                vector: x,
                iterations: it,
                converged: true,
            };
        }
        prev = theta;
        for (xi, yi) in x.iter_mut().zip(&y) {
            *xi = yi / norm;
        }
    }
    let value = {
        apply(&x, &mut y);
        x.iter().zip(&y).map(|(a, b)| a * b).sum()
    };
    PowerOutcome {
        value,
        vector: x,
        iterations: MAX_ITERATIONS,
        converged: false,
    }
}

fn normalize(x: &mut [f64]) {
    let norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
    if norm > 0.0 {
        x.iter_mut().for_each(|v| *v /= norm);
    }
}

/// Fixed start vector with no symmetry, used where all-ones may be orthogonal to
/// the wanted eigenvector.
pub fn perturbed_start(n: usize) -> Vec<f64> {
    const PHI: f64 = 0.618_033_988_749_894_9;
    (0..n)
        .map(|i| {
            let f = ((i + 1) as f64 * PHI).fract();
            1.0 + 0.5 * f + if i % 2 == 0 { 0.0 } else { -1.75 }
        })
        .collect()
}
