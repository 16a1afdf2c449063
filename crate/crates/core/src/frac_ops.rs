//! Caputo derivative and Riemann–Liouville integral with base point 0.
//!
//! The closed-form rules act exactly on [`FracSeries`]; [`caputo_numeric`]
//! evaluates the defining integral by quadrature and serves as an
//! independent check on them.

use crate::error::{Error, Result};
use crate::gamma::{caputo_factor, gamma_ratio, is_annihilated, lgamma_signed};
use crate::quadrature::GaussLegendre;
use crate::series::{FracSeries, EXPONENT_EPS};

/// `D^α x^β = coefficient · x^exponent`.
///
/// Integer powers below the order (`β ∈ {0, …, ⌈α⌉−1}`) are annihilated and
/// reported as `(0, 0)`.
pub fn caputo_power(beta: f64, alpha: f64) -> Result<(f64, f64)> {
    check_power_args(beta, alpha)?;
    if is_annihilated(beta, alpha) {
        return Ok((0.0, 0.0));
    }
    Ok((gamma_ratio(beta + 1.0, beta - alpha + 1.0)?, beta - alpha))
}

/// `I^α x^β = coefficient · x^exponent`.
pub fn rl_integral_power(beta: f64, alpha: f64) -> Result<(f64, f64)> {
    check_power_args(beta, alpha)?;
    Ok((gamma_ratio(beta + 1.0, beta + alpha + 1.0)?, beta + alpha))
}

fn check_power_args(beta: f64, alpha: f64) -> Result<()> {
    if !(beta >= 0.0) {
        return Err(Error::domain(format!("power beta must be >= 0, got {beta}")));
    }
    if !(alpha > 0.0) {
        return Err(Error::domain(format!("order alpha must be > 0, got {alpha}")));
    }
    Ok(())
}

/// `r^weight · D^α f`, term by term, with `α = f.alpha()`.
///
/// Each term `c r^e` maps to `c Γ(e+1)/Γ(e−α+1) r^(e−α+weight)`. The
/// intermediate power `e − α` may be negative; only the final exponent has
/// to be nonnegative. Leading terms that end up below zero are dropped when
/// their coefficient vanishes (annihilated or zero) and rejected otherwise.
pub fn caputo_times_power(f: &FracSeries, weight: f64) -> Result<FracSeries> {
    let alpha = f.alpha();
    let mut mapped = Vec::with_capacity(f.len());
    for (e, c) in f.terms() {
        let k = if c == 0.0 || is_annihilated(e, alpha) {
            0.0
        } else {
            c * caputo_factor(e, alpha)?
        };
        mapped.push((e - alpha + weight, k));
    }
    let mut start = 0;
    while start < mapped.len() && mapped[start].0 < -EXPONENT_EPS {
        if mapped[start].1 != 0.0 {
            return Err(Error::SingularTerm {
                exponent: mapped[start].0,
            });
        }
        start += 1;
    }
    let offset = (f.exponent(start) - alpha + weight).max(0.0);
    FracSeries::new(alpha, offset, mapped[start..].iter().map(|&(_, k)| k).collect())
}

/// Term-wise Caputo derivative; the exponent grid shifts down by `α`.
pub fn caputo_series(f: &FracSeries) -> Result<FracSeries> {
    caputo_times_power(f, 0.0)
}

/// Term-wise Riemann–Liouville integral; the exponent grid shifts up by `α`.
pub fn rl_integral_series(f: &FracSeries) -> Result<FracSeries> {
    let alpha = f.alpha();
    let coeffs = f
        .terms()
        .map(|(e, c)| {
            if c == 0.0 {
                Ok(0.0)
            } else {
                Ok(c * gamma_ratio(e + 1.0, e + alpha + 1.0)?)
            }
        })
        .collect::<Result<Vec<_>>>()?;
    FracSeries::new(alpha, f.offset() + alpha, coeffs)
}

/// Fractional Taylor sum `Σ d_m x^(mα) / Γ(mα+1)` where `d_m = (D^α)^m f(0)`.
pub fn frac_taylor(derivatives_at_zero: &[f64], alpha: f64, x: f64) -> Result<f64> {
    if !(alpha > 0.0) {
        return Err(Error::domain(format!("order alpha must be > 0, got {alpha}")));
    }
    if !(x >= 0.0) {
        return Err(Error::domain(format!("x must be >= 0, got {x}")));
    }
    let mut sum = 0.0;
    for (m, &d) in derivatives_at_zero.iter().enumerate() {
        if d == 0.0 {
            continue;
        }
        let e = m as f64 * alpha;
        if m == 0 {
            sum += d;
        } else if x > 0.0 {
            let lg = lgamma_signed(e + 1.0)?.log_mag();
            sum += d * (e * x.ln() - lg).exp();
        }
    }
    Ok(sum)
}

/// Quadrature settings for [`caputo_numeric`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadConfig {
    alpha: f64,
    /// Gauss–Legendre nodes per sub-interval on the first pass.
    pub nodes: usize,
    /// Maximum allowed change between two successive node doublings.
    pub tol: f64,
    /// How many times the node count may be doubled.
    pub max_doublings: u32,
}

impl QuadConfig {
    pub fn new(alpha: f64) -> Result<Self> {
        if !(alpha > 0.0 && alpha <= 1.0) {
            return Err(Error::domain(format!(
                "quadrature order must lie in (0, 1], got {alpha}"
            )));
        }
        Ok(QuadConfig {
            alpha,
            nodes: 32,
            tol: 1e-10,
            max_doublings: 6,
        })
    }

    pub fn with_nodes(mut self, nodes: usize) -> Self {
        self.nodes = nodes.max(1);
        self
    }

    pub fn with_tol(mut self, tol: f64) -> Self {
        self.tol = tol;
        self
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// Integer order `A = ⌊α⌋ + 1` of the classical derivative under the
    /// memory integral.
    pub fn order_a(&self) -> u32 {
        self.alpha.floor() as u32 + 1
    }
}

/// Grading exponent of the substitution `ξ = (x/2) s^p` on the lower half,
/// which tames `ξ^(β−1)`-type singularities at the base point.
const LOWER_GRADING: f64 = 16.0;

fn check_quad_args(x: f64, cfg: &QuadConfig) -> Result<()> {
    let alpha = cfg.alpha;
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::domain(format!(
            "quadrature Caputo derivative needs alpha in (0, 1), got {alpha}"
        )));
    }
    if !(x > 0.0) {
        return Err(Error::domain(format!("x must be > 0, got {x}")));
    }
    Ok(())
}

/// `∫_{x/2}^x (x−ξ)^(−α) g(ξ) dξ` under `ξ = x − t^(1/(1−α))`, which turns
/// the kernel singularity into a unit Jacobian.
fn upper_half<G: Fn(f64) -> f64>(rule: &GaussLegendre, g: G, x: f64, alpha: f64) -> f64 {
    let q = 1.0 / (1.0 - alpha);
    let t_max = (0.5 * x).powf(1.0 - alpha);
    q * rule.integrate(0.0, t_max, |t| g(x - t.powf(q)))
}

/// `∫_0^{x/2} g(ξ) dξ` under the graded substitution `ξ = (x/2) s^p`.
fn lower_half<G: Fn(f64) -> f64>(rule: &GaussLegendre, g: G, x: f64) -> f64 {
    let half = 0.5 * x;
    rule.integrate(0.0, 1.0, |s| {
        let xi = half * s.powf(LOWER_GRADING);
        g(xi) * half * LOWER_GRADING * s.powf(LOWER_GRADING - 1.0)
    })
}

/// Doubles the node count from `cfg.nodes` until two estimates agree within
/// `cfg.tol`.
fn until_converged<E: Fn(&GaussLegendre) -> f64>(estimate: E, x: f64, cfg: &QuadConfig) -> Result<f64> {
    let mut n = cfg.nodes.max(2);
    let mut prev = estimate(&GaussLegendre::new(n));
    let mut diff = f64::INFINITY;
    for _ in 0..cfg.max_doublings {
        n *= 2;
        let next = estimate(&GaussLegendre::new(n));
        diff = (next - prev).abs();
        if diff <= cfg.tol {
            return Ok(next);
        }
        prev = next;
    }
    Err(Error::Tolerance {
        message: format!(
            "Caputo quadrature at x = {x}, alpha = {}: successive doublings differ by {diff:e}",
            cfg.alpha
        ),
        suggested_terms: Some(n * 2),
    })
}

/// Caputo derivative of `f` at `x` by quadrature.
///
/// On `[x/2, x]` the derivative `f′` comes from central differences. On
/// `[0, x/2]` the integral is taken by parts,
/// `[f K]_0^{x/2} − ∫ f K′ dξ` with `K = (x−ξ)^(−α)`, so no derivative is
/// needed next to the base point, where `f′` may be singular.
pub fn caputo_numeric<F: Fn(f64) -> f64>(f: F, x: f64, cfg: &QuadConfig) -> Result<f64> {
    check_quad_args(x, cfg)?;
    let alpha = cfg.alpha;
    let inv_gamma = 1.0 / lgamma_signed(1.0 - alpha)?.to_f64();
    let h = (1e-5 * x).max(1e-5);
    let df = |xi: f64| (f(xi + h) - f(xi - h)) / (2.0 * h);
    let half = 0.5 * x;
    let boundary = f(half) * half.powf(-alpha) - f(0.0) * x.powf(-alpha);
    until_converged(
        |rule| {
            let upper = upper_half(rule, df, x, alpha);
            let lower = boundary - lower_half(rule, |xi| alpha * (x - xi).powf(-alpha - 1.0) * f(xi), x);
            (upper + lower) * inv_gamma
        },
        x,
        cfg,
    )
}

/// Caputo derivative at `x` from an analytic first derivative `df`:
/// `∫_0^x (x−ξ)^(−α) f′(ξ) dξ / Γ(1−α)`.
pub fn caputo_numeric_with_derivative<G: Fn(f64) -> f64>(df: G, x: f64, cfg: &QuadConfig) -> Result<f64> {
    check_quad_args(x, cfg)?;
    let alpha = cfg.alpha;
    let inv_gamma = 1.0 / lgamma_signed(1.0 - alpha)?.to_f64();
    until_converged(
        |rule| {
            let upper = upper_half(rule, &df, x, alpha);
            let lower = lower_half(rule, |xi| (x - xi).powf(-alpha) * df(xi), x);
            (upper + lower) * inv_gamma
        },
        x,
        cfg,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn caputo_power_examples() {
        assert_eq!(caputo_power(0.0, 0.5).unwrap(), (0.0, 0.0));
        let (c, e) = caputo_power(1.0, 0.5).unwrap();
        assert!((c - std::f64::consts::FRAC_2_SQRT_PI).abs() < 1e-14);
        assert_eq!(e, 0.5);
        assert_eq!(caputo_power(3.0, 1.0).unwrap(), (3.0, 2.0));
        assert!(matches!(caputo_power(-1.0, 0.5), Err(Error::Domain(_))));
    }

    #[test]
    fn first_power_survives_at_unit_order() {
        // d/dx x = 1: only β = 0 is annihilated at α = 1.
        assert_eq!(caputo_power(1.0, 1.0).unwrap(), (1.0, 0.0));
        assert_eq!(caputo_power(0.0, 1.0).unwrap(), (0.0, 0.0));
    }

    #[test]
    fn rl_power_examples() {
        let (c, e) = rl_integral_power(0.0, 0.5).unwrap();
        assert!((c - std::f64::consts::FRAC_2_SQRT_PI).abs() < 1e-14);
        assert_eq!(e, 0.5);
        assert_eq!(rl_integral_power(1.0, 1.0).unwrap(), (0.5, 2.0));
        let (c, e) = rl_integral_power(0.5, 0.5).unwrap();
        assert!((c - PI.sqrt() / 2.0).abs() < 1e-14);
        assert_eq!(e, 1.0);
        assert!(rl_integral_power(-0.1, 0.5).is_err());
    }

    #[test]
    fn caputo_series_examples() {
        let one = FracSeries::new(0.5, 0.0, vec![1.0]).unwrap();
        assert!(caputo_series(&one).unwrap().is_zero());

        for alpha in [0.1, 0.35, 0.5, 0.8, 1.0] {
            let f = FracSeries::monomial(alpha, 2.0 * alpha, 1.0).unwrap();
            let d = caputo_series(&f).unwrap();
            let expect = gamma_ratio(2.0 * alpha + 1.0, alpha + 1.0).unwrap();
            assert!((d.offset() - alpha).abs() < 1e-15);
            assert!((d.coeffs()[0] - expect).abs() < 1e-13 * expect);
        }

        let r = FracSeries::monomial(1.0, 1.0, 1.0).unwrap();
        let d = caputo_series(&r).unwrap();
        assert_eq!(d.offset(), 0.0);
        assert_eq!(d.coeffs(), &[1.0]);
    }

    #[test]
    fn caputo_series_rejects_singular_terms() {
        let f = FracSeries::monomial(0.5, 0.25, 1.0).unwrap();
        match caputo_series(&f) {
            Err(Error::SingularTerm { exponent }) => assert!((exponent + 0.25).abs() < 1e-15),
            other => panic!("expected SingularTerm, got {other:?}"),
        }
        // with a weight the same term is fine
        let g = caputo_times_power(&f, 0.5).unwrap();
        assert!((g.offset() - 0.25).abs() < 1e-15);
    }

    #[test]
    fn rl_series_examples() {
        for alpha in [0.3, 0.5, 0.9] {
            let one = FracSeries::new(alpha, 0.0, vec![1.0]).unwrap();
            let twice = rl_integral_series(&rl_integral_series(&one).unwrap()).unwrap();
            let expect = 1.0 / crate::gamma::gamma(2.0 * alpha + 1.0).unwrap();
            assert!((twice.offset() - 2.0 * alpha).abs() < 1e-15);
            assert!((twice.coeffs()[0] - expect).abs() < 1e-14);
        }
        let one = FracSeries::new(1.0, 0.0, vec![1.0]).unwrap();
        let r = rl_integral_series(&one).unwrap();
        assert_eq!((r.offset(), r.coeffs()), (1.0, &[1.0][..]));

        let half = FracSeries::monomial(0.5, 0.5, 1.0).unwrap();
        let i = rl_integral_series(&half).unwrap();
        assert_eq!(i.offset(), 1.0);
        assert!((i.coeffs()[0] - 0.886_226_925_452_758).abs() < 1e-14);
    }

    #[test]
    fn quadrature_examples() {
        let cfg = QuadConfig::new(0.5).unwrap();
        let v = caputo_numeric(|x| x, 1.0, &cfg).unwrap();
        assert!((v - std::f64::consts::FRAC_2_SQRT_PI).abs() < 1e-6, "{v}");
        let v = caputo_numeric(|_| 7.0, 1.0, &cfg).unwrap();
        assert!(v.abs() < 1e-10);
        let v = caputo_numeric(|x| x * x, 1.0, &cfg).unwrap();
        assert!((v - 1.504_505_556_127_350_3).abs() < 1e-6, "{v}");
    }

    #[test]
    fn quadrature_rejects_bad_order() {
        let cfg = QuadConfig::new(1.0).unwrap();
        assert_eq!(cfg.order_a(), 2);
        assert!(caputo_numeric(|x| x, 1.0, &cfg).is_err());
        let cfg = QuadConfig::new(0.4).unwrap();
        assert_eq!(cfg.order_a(), 1);
        assert!(caputo_numeric(|x| x, 0.0, &cfg).is_err());
    }

    #[test]
    fn quadrature_tolerance_error() {
        let cfg = QuadConfig {
            max_doublings: 1,
            tol: 1e-30,
            ..QuadConfig::new(0.5).unwrap()
        }
        .with_nodes(2);
        let err = caputo_numeric_with_derivative(|x: f64| x.powf(-0.9) * 0.1, 1.0, &cfg);
        assert!(matches!(err, Err(Error::Tolerance { .. })));
    }

    #[test]
    fn taylor_examples() {
        for alpha in [0.3, 0.5, 0.75, 1.0] {
            let d = [0.0, 0.0, crate::gamma::gamma(2.0 * alpha + 1.0).unwrap()];
            let v = frac_taylor(&d, alpha, 2.0).unwrap();
            let expect = 2f64.powf(2.0 * alpha);
            assert!((v - expect).abs() < 1e-13 * expect);
        }
        assert_eq!(frac_taylor(&[4.5], 0.3, 1.7).unwrap(), 4.5);
        assert!((frac_taylor(&[0.0, 1.0], 1.0, 3.0).unwrap() - 3.0).abs() < 1e-14);
        assert!(frac_taylor(&[1.0], 0.5, -1.0).is_err());
    }

    #[test]
    fn taylor_reproduces_mittag_leffler_exp() {
        // α = 1, d_m = 1: the Taylor series of e^x.
        let d = vec![1.0; 30];
        let v = frac_taylor(&d, 1.0, 1.0).unwrap();
        assert!((v - std::f64::consts::E).abs() < 1e-14);
    }
}
