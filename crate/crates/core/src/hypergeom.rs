//! Fractional Pochhammer symbol and the fractional confluent and Gauss
//! hypergeometric series
//!
//! ```text
//! y(z) = Σ (a)_k / (c)_k · z^(kα) / Γ(kα+1)
//! y(z) = Σ (a)_k (b)_k / (c)_k · z^(kα) / Γ(kα+1)
//! ```
//!
//! where `(a)_k = Π_{j<k} (a + r_j)` and `r_j = Γ(jα+1)/Γ(jα−α+1)` is the
//! factor by which `z^α D^α` scales `z^(jα)`. By definition `(a)_1 = a`,
//! which is the Caputo convention `r_0 = 0`. At `α = 1`, `r_j = j` and the
//! classical series are recovered.

use crate::error::{Error, Result};
use crate::frac_ops::{caputo_series, caputo_times_power};
use crate::gamma::{caputo_factor, gamma_ratio};
use crate::series::FracSeries;

/// Default cap on the number of series terms.
pub const DEFAULT_MAX_TERMS: usize = 500;

/// Default relative stopping tolerance.
pub const DEFAULT_TOL: f64 = 1e-16;

/// Parameters of both series; `b` is ignored by the confluent one.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HypergeomParams {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    alpha: f64,
    pub max_terms: usize,
    pub tol: f64,
}

impl HypergeomParams {
    pub fn new(a: f64, b: f64, c: f64, alpha: f64) -> Result<Self> {
        if !(alpha > 0.0 && alpha <= 1.0) {
            return Err(Error::domain(format!("alpha must lie in (0, 1], got {alpha}")));
        }
        if ![a, b, c].iter().all(|v| v.is_finite()) {
            return Err(Error::domain("a, b, c must be finite"));
        }
        Ok(HypergeomParams {
            a,
            b,
            c,
            alpha,
            max_terms: DEFAULT_MAX_TERMS,
            tol: DEFAULT_TOL,
        })
    }

    pub fn with_max_terms(mut self, n: usize) -> Self {
        self.max_terms = n.max(1);
        self
    }

    pub fn with_tol(mut self, tol: f64) -> Self {
        self.tol = tol;
        self
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// Checks that no denominator factor `c + r_k`, `k < max_terms`, vanishes.
    pub fn validate(&self) -> Result<()> {
        for k in 0..self.max_terms {
            let f = self.c + step_factor(k, self.alpha)?;
            if f.abs() <= 1e-12 * self.c.abs().max(1.0) {
                return Err(Error::DegenerateParameter(format!(
                    "c = {} makes the denominator factor vanish at k = {k}",
                    self.c
                )));
            }
        }
        Ok(())
    }
}

/// `r_k = Γ(kα+1)/Γ(kα−α+1)` with `r_0 = 0`.
fn step_factor(k: usize, alpha: f64) -> Result<f64> {
    caputo_factor(k as f64 * alpha, alpha)
}

/// `Γ(kα+1)/Γ(kα+α+1)`, the ratio of consecutive `1/Γ(kα+1)` factors.
fn gamma_step(k: usize, alpha: f64) -> Result<f64> {
    let x = k as f64 * alpha;
    gamma_ratio(x + 1.0, x + alpha + 1.0)
}

/// Fractional Pochhammer symbol `(a)_k = Π_{j=0}^{k−1} (a + r_j)`.
pub fn pochhammer_frac(a: f64, k: usize, alpha: f64) -> Result<f64> {
    (0..k).try_fold(1.0, |acc, j| Ok(acc * (a + step_factor(j, alpha)?)))
}

/// A partial sum and the number of terms it used.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HyperSum {
    pub value: f64,
    pub terms: usize,
}

/// Ratio `c_(k+1)/c_k` of consecutive coefficients.
fn coeff_ratio(p: &HypergeomParams, k: usize, gauss: bool) -> Result<f64> {
    let r = step_factor(k, p.alpha)?;
    let upper = if gauss { (p.a + r) * (p.b + r) } else { p.a + r };
    Ok(upper / (p.c + r) * gamma_step(k, p.alpha)?)
}

fn coeffs(p: &HypergeomParams, n: usize, gauss: bool) -> Result<Vec<f64>> {
    let mut out = Vec::with_capacity(n + 1);
    out.push(1.0);
    for k in 0..n {
        let prev = out[k];
        out.push(prev * coeff_ratio(p, k, gauss)?);
    }
    Ok(out)
}

/// Coefficients `c_0..=c_n` of the confluent series in powers `z^(kα)`.
pub fn conf_hyper_coeffs(p: &HypergeomParams, n: usize) -> Result<Vec<f64>> {
    coeffs(p, n, false)
}

/// Coefficients `c_0..=c_n` of the Gauss series in powers `z^(kα)`.
pub fn gauss_hyper_coeffs(p: &HypergeomParams, n: usize) -> Result<Vec<f64>> {
    coeffs(p, n, true)
}

fn sum_series(p: &HypergeomParams, z: f64, gauss: bool) -> Result<HyperSum> {
    if !(z >= 0.0 && z.is_finite()) {
        return Err(Error::domain(format!("z must be finite and >= 0, got {z}")));
    }
    p.validate()?;
    let za = z.powf(p.alpha);
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut previous = 1.0;
    for k in 0..p.max_terms.saturating_sub(1) {
        term *= coeff_ratio(p, k, gauss)? * za;
        previous = sum;
        sum += term;
        if !sum.is_finite() {
            break;
        }
        if term == 0.0 || term.abs() < p.tol * sum.abs() {
            return Ok(HyperSum {
                value: sum,
                terms: k + 2,
            });
        }
    }
    Err(Error::NoConvergence {
        terms: p.max_terms,
        previous,
        last: sum,
    })
}

/// Fractional confluent hypergeometric series at `z ≥ 0`.
pub fn conf_hyper_frac(p: &HypergeomParams, z: f64) -> Result<HyperSum> {
    sum_series(p, z, false)
}

/// Fractional Gauss hypergeometric series at `z ≥ 0`.
pub fn gauss_hyper_frac(p: &HypergeomParams, z: f64) -> Result<HyperSum> {
    sum_series(p, z, true)
}

fn truncated(p: &HypergeomParams, n: usize, gauss: bool) -> Result<FracSeries> {
    FracSeries::new(p.alpha, 0.0, coeffs(p, n, gauss)?)
}

/// `z^α D²y + (c − z^α) Dy − a y` on the series truncated after `z^(nα)`.
/// Coefficients below `z^(nα)` vanish.
pub fn conf_hyper_residual(p: &HypergeomParams, n: usize) -> Result<FracSeries> {
    let y = truncated(p, n, false)?;
    let dy = caputo_series(&y)?;
    let z_d2y = caputo_times_power(&dy, p.alpha)?;
    let z_dy = caputo_times_power(&y, p.alpha)?;
    z_d2y.add(&dy.scale(p.c))?.sub(&z_dy)?.sub(&y.scale(p.a))
}

/// `ab y + (a+b) z^α Dy + z^α D(z^α Dy) − c Dy − z^α D²y` on the series
/// truncated after `z^(nα)`. Coefficients below `z^(nα)` vanish.
pub fn gauss_hyper_residual(p: &HypergeomParams, n: usize) -> Result<FracSeries> {
    let y = truncated(p, n, true)?;
    let dy = caputo_series(&y)?;
    let z_dy = caputo_times_power(&y, p.alpha)?;
    let z_d_z_dy = caputo_times_power(&z_dy, p.alpha)?;
    let z_d2y = caputo_times_power(&dy, p.alpha)?;
    y.scale(p.a * p.b)
        .add(&z_dy.scale(p.a + p.b))?
        .add(&z_d_z_dy)?
        .sub(&dy.scale(p.c))?
        .sub(&z_d2y)
}

/// Largest `|coefficient|` of a residual series below `z^(nα)`.
pub fn interior_residual(res: &FracSeries, n: usize) -> f64 {
    let cut = n as f64 * res.alpha() - 1e-9;
    res.terms()
        .filter(|&(e, _)| e < cut)
        .map(|(_, c)| c.abs())
        .fold(0.0, f64::max)
}
