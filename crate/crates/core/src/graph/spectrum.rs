//! Adjacency spectra: cyclic Jacobi for the full spectrum, power iteration
//! for the largest eigenvalue of graphs over the spectrum cap.

use serde::Serialize;

use super::analysis::is_complete;
use super::Graph;
use crate::caps::Caps;
use crate::error::{Error, Result};

const MAX_SWEEPS: usize = 100;
const MAX_POWER_STEPS: usize = 200_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SpectrumMode {
    /// Every eigenvalue, from the iterative solver.
    Full,
    /// Every eigenvalue, from the formula for K_n.
    ClosedForm,
    /// Only `lambda_max`; `eigenvalues` is empty.
    Partial,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumReport {
    /// Non-increasing, with multiplicity.
    pub eigenvalues: Vec<f64>,
    pub lambda_max: f64,
    pub tolerance: f64,
    pub mode: SpectrumMode,
}

/// Spectrum of the adjacency matrix; the closed form is used for complete
/// graphs.
pub fn spectrum(g: &Graph, caps: &Caps) -> Result<SpectrumReport> {
    if is_complete(g) {
        return Ok(complete_spectrum(g.vertex_count(), caps.tol));
    }
    iterative_spectrum(g, caps)
}

/// Like [`spectrum`] but never takes the closed-form shortcut.
pub fn iterative_spectrum(g: &Graph, caps: &Caps) -> Result<SpectrumReport> {
    check_tol(caps.tol)?;
    let t = g.vertex_count();
    if t == 0 {
        return Ok(SpectrumReport {
            eigenvalues: Vec::new(),
            lambda_max: 0.0,
            tolerance: caps.tol,
            mode: SpectrumMode::Full,
        });
    }
    if t > caps.max_spectrum {
        return Ok(SpectrumReport {
            eigenvalues: Vec::new(),
            lambda_max: power_iteration(g, caps.tol)?,
            tolerance: caps.tol,
            mode: SpectrumMode::Partial,
        });
    }
    let a: Vec<Vec<f64>> = (0..t)
        .map(|i| (0..t).map(|j| if g.has_edge(i, j) { 1.0 } else { 0.0 }).collect())
        .collect();
    let eigenvalues = symmetric_eigenvalues(a, caps.tol)?;
    let trace: f64 = eigenvalues.iter().sum();
    if trace.abs() > caps.tol.max(1e-12) * t as f64 {
        return Err(Error::Internal(format!(
            "adjacency eigenvalues sum to {trace}, expected 0"
        )));
    }
    Ok(SpectrumReport {
        lambda_max: eigenvalues[0],
        eigenvalues,
        tolerance: caps.tol,
        mode: SpectrumMode::Full,
    })
}

fn check_tol(tol: f64) -> Result<()> {
    if tol > 0.0 && tol.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidPresentation(format!("tolerance must be positive, got {tol}")))
    }
}

/// K_n: n − 1 once and −1 with multiplicity n − 1; K_1 has spectrum {0}.
pub fn complete_spectrum(n: usize, tol: f64) -> SpectrumReport {
    let mut eigenvalues = Vec::with_capacity(n);
    if n > 0 {
        eigenvalues.push(n as f64 - 1.0);
        eigenvalues.extend(std::iter::repeat_n(-1.0, n - 1));
    }
    SpectrumReport {
        lambda_max: eigenvalues.first().copied().unwrap_or(0.0),
        eigenvalues,
        tolerance: tol,
        mode: SpectrumMode::ClosedForm,
    }
}

/// Cyclic Jacobi rotations until the off-diagonal mass is negligible.
pub fn symmetric_eigenvalues(mut a: Vec<Vec<f64>>, tol: f64) -> Result<Vec<f64>> {
    let n = a.len();
    let norm: f64 = a.iter().flatten().map(|x| x * x).sum::<f64>().sqrt();
    let target = (tol * 1e-3).max(1e-14 * norm.max(1.0));
    for _ in 0..MAX_SWEEPS {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[i][j] * a[i][j])
            .sum::<f64>()
            .sqrt();
        if off <= target {
            let mut eig: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
            eig.sort_by(|x, y| y.total_cmp(x));
            return Ok(eig);
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p][q];
                if apq.abs() < 1e-300 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k][p];
                    let akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p][k];
                    let aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    Err(Error::NonConvergence(MAX_SWEEPS))
}

/// Largest adjacency eigenvalue by power iteration on A + I, which keeps
/// the Perron root strictly dominant even for bipartite graphs.
pub fn power_iteration(g: &Graph, tol: f64) -> Result<f64> {
    check_tol(tol)?;
    let t = g.vertex_count();
    if t == 0 {
        return Ok(0.0);
    }
    let mut x = vec![1.0 / (t as f64).sqrt(); t];
    let mut estimate = f64::NAN;
    for _ in 0..MAX_POWER_STEPS {
        let y: Vec<f64> = (0..t)
            .map(|v| x[v] + g.neighbors(v).map(|w| x[w]).sum::<f64>())
            .collect();
        let rayleigh: f64 = x.iter().zip(&y).map(|(a, b)| a * b).sum::<f64>() - 1.0;
        let norm = y.iter().map(|v| v * v).sum::<f64>().sqrt();
        x = y.into_iter().map(|v| v / norm).collect();
        if (rayleigh - estimate).abs() <= tol * 1e-2 {
            return Ok(rayleigh);
        }
        estimate = rayleigh;
    }
    Err(Error::NonConvergence(MAX_POWER_STEPS))
}
