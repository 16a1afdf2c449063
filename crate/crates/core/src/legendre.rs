//! Series and direct-integration solvers for the angular equation
//!
//! ```text
//! (1 − x²) p″ − (1 + α) x p′ + [λ − m²/(1 − x²)^α] p = 0
//! ```
//!
//! which is the associated Legendre equation at `α = 1`. Even solutions are
//! normalized by `p(0) = 1`, odd ones by `p′(0) = 1`.

use crate::angular::{AngularFn, Poly};
use crate::error::{Error, Result};

/// Largest `|x|` accepted by [`legendre_eval`].
pub const SERIES_X_MAX: f64 = 0.999;

/// Maximum step of the Runge–Kutta integrator.
pub const ODE_MAX_STEP: f64 = 1e-3;

/// Magnitude above which the integrator reports a blowup.
const BLOWUP: f64 = 1e12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    fn start(self) -> usize {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LegendreProblem {
    alpha: f64,
    lambda: f64,
    m_azimuthal: u32,
    parity: Parity,
    n_terms: usize,
}

impl LegendreProblem {
    pub fn new(alpha: f64, lambda: f64, parity: Parity, n_terms: usize) -> Result<Self> {
        if !(alpha > 0.0 && alpha <= 1.0) {
            return Err(Error::domain(format!("alpha must lie in (0, 1], got {alpha}")));
        }
        if !lambda.is_finite() {
            return Err(Error::domain(format!("lambda must be finite, got {lambda}")));
        }
        if n_terms < 2 {
            return Err(Error::domain(format!("n_terms must be at least 2, got {n_terms}")));
        }
        Ok(LegendreProblem {
            alpha,
            lambda,
            m_azimuthal: 0,
            parity,
            n_terms,
        })
    }

    pub fn with_m_azimuthal(mut self, m: u32) -> Self {
        self.m_azimuthal = m;
        self
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn m_azimuthal(&self) -> u32 {
        self.m_azimuthal
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn n_terms(&self) -> usize {
        self.n_terms
    }
}

/// Truncated power series `Σ c_n x^n` solving the angular equation with
/// `m = 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct LegendreSeries {
    pub coeffs: Vec<f64>,
    /// Degree at which the recurrence terminated, if it did.
    pub terminates_at: Option<usize>,
}

impl LegendreSeries {
    pub fn is_polynomial(&self) -> bool {
        self.terminates_at.is_some()
    }

    pub fn eval(&self, x: f64) -> Result<SeriesValue> {
        legendre_eval(&self.coeffs, x)
    }

    /// `Θ(θ) = p(cos θ)`.
    pub fn to_angular(&self) -> AngularFn {
        AngularFn::from_cos_poly(Poly(self.coeffs.clone()))
    }
}

/// Value of a truncated series with a rough bound on the omitted tail.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesValue {
    pub value: f64,
    pub tail_bound: f64,
}

/// Coefficients from `c_(n+2) = c_n (n² + nα − λ)/((n+2)(n+1))`.
///
/// A factor within `1e−12·max(1, |λ|)` of zero is treated as exact, which
/// ends the series and marks it polynomial.
pub fn legendre_coeffs(prob: &LegendreProblem) -> Result<LegendreSeries> {
    if prob.m_azimuthal != 0 {
        return Err(Error::domain(
            "the series solver requires m_azimuthal = 0; use the ODE integrator",
        ));
    }
    let n_terms = prob.n_terms;
    let mut coeffs = vec![0.0; n_terms];
    let start = prob.parity.start();
    coeffs[start] = 1.0;
    let snap = 1e-12 * prob.lambda.abs().max(1.0);
    let mut terminates_at = None;
    let mut n = start;
    while n + 2 < n_terms {
        let nf = n as f64;
        let factor = nf * nf + nf * prob.alpha - prob.lambda;
        if factor.abs() <= snap {
            terminates_at = Some(n);
            break;
        }
        coeffs[n + 2] = coeffs[n] * factor / ((nf + 2.0) * (nf + 1.0));
        n += 2;
    }
    if let Some(deg) = terminates_at {
        coeffs.truncate(deg + 1);
    }
    Ok(LegendreSeries { coeffs, terminates_at })
}

/// Horner evaluation of `Σ c_n x^n` with tail bound `|c_N x^N|/(1 − x²)`.
pub fn legendre_eval(coeffs: &[f64], x: f64) -> Result<SeriesValue> {
    if !(x.abs() <= SERIES_X_MAX) {
        return Err(Error::domain(format!(
            "series evaluation needs |x| <= {SERIES_X_MAX}, got {x}"
        )));
    }
    let value = coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c);
    let tail_bound = match coeffs.iter().rposition(|&c| c != 0.0) {
        Some(n) => (coeffs[n] * x.powi(n as i32)).abs() / (1.0 - x * x),
        None => 0.0,
    };
    Ok(SeriesValue { value, tail_bound })
}

/// Integrates the angular equation with classical RK4 from `x = 0` outward in
/// both directions, returning `p` on `x_grid` in input order.
pub fn legendre_ode_solve(prob: &LegendreProblem, x_grid: &[f64]) -> Result<Vec<f64>> {
    if let Some(&x) = x_grid.iter().find(|x| !(x.abs() < 1.0)) {
        return Err(Error::domain(format!("grid point {x} is not inside (-1, 1)")));
    }
    let (p0, dp0) = match prob.parity {
        Parity::Even => (1.0, 0.0),
        Parity::Odd => (0.0, 1.0),
    };
    let alpha = prob.alpha;
    let lambda = prob.lambda;
    let m2 = (prob.m_azimuthal as f64).powi(2);
    let rhs = move |x: f64, y: [f64; 2]| -> [f64; 2] {
        let w = 1.0 - x * x;
        let potential = if m2 == 0.0 { lambda } else { lambda - m2 / w.powf(alpha) };
        [y[1], ((1.0 + alpha) * x * y[1] - potential * y[0]) / w]
    };

    let mut out = vec![0.0; x_grid.len()];
    for dir in [1.0, -1.0] {
        let mut idx: Vec<usize> = (0..x_grid.len())
            .filter(|&i| if dir > 0.0 { x_grid[i] >= 0.0 } else { x_grid[i] < 0.0 })
            .collect();
        idx.sort_by(|&a, &b| x_grid[a].abs().total_cmp(&x_grid[b].abs()));
        let mut x = 0.0;
        let mut y = [p0, dp0];
        for i in idx {
            let target = x_grid[i];
            let span = target - x;
            let steps = (span.abs() / ODE_MAX_STEP).ceil() as usize;
            if steps > 0 {
                let h = span / steps as f64;
                for s in 0..steps {
                    y = rk4_step(&rhs, x, y, h);
                    x = if s + 1 == steps { target } else { x + h };
                    if !y[0].is_finite() || !y[1].is_finite() || y[0].abs() > BLOWUP {
                        return Err(Error::Stiffness { x });
                    }
                }
            }
            out[i] = y[0];
        }
    }
    Ok(out)
}

fn rk4_step<F: Fn(f64, [f64; 2]) -> [f64; 2]>(f: &F, x: f64, y: [f64; 2], h: f64) -> [f64; 2] {
    let add = |a: [f64; 2], b: [f64; 2], s: f64| [a[0] + s * b[0], a[1] + s * b[1]];
    let k1 = f(x, y);
    let k2 = f(x + 0.5 * h, add(y, k1, 0.5 * h));
    let k3 = f(x + 0.5 * h, add(y, k2, 0.5 * h));
    let k4 = f(x + h, add(y, k3, h));
    [
        y[0] + h / 6.0 * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0]),
        y[1] + h / 6.0 * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1]),
    ]
}
