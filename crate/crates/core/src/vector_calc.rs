//! Fractional gradient, divergence and Laplacian in spherical and polar
//! coordinates, with the Caputo derivative acting on the radius only.
//!
//! Radial factors are handled symbolically through [`FracSeries`]; the
//! angular factors are ordinary functions with exact derivatives. In
//! spherical coordinates
//!
//! ```text
//! Grad u = e_r D_r u + e_θ Γ(α+1)/r^α ∂_θ u + e_φ Γ(α+1)/(r^α sin^α θ) ∂_φ u
//! ```
//!
//! and the divergence and Laplacian follow from the same metric factors.

use crate::angular::{check_polar_angle, AngularFn, Azimuth};
use crate::bessel::{self, BesselSolution};
use crate::error::{Error, Result};
use crate::frac_ops::caputo_times_power;
use crate::gamma::{gamma_ratio_lockstep, lgamma_signed};
use crate::roots::{scan_roots, RootScan};
use crate::series::{FracSeries, EXPONENT_EPS};

fn gamma_alpha_plus_one(alpha: f64) -> Result<f64> {
    Ok(lgamma_signed(alpha + 1.0)?.to_f64())
}

/// `r^power · series(r)`. The extra power lets gradient components such as
/// `Γ(α+1) r^(−α) R(r)` be represented without leaving the series grid.
#[derive(Debug, Clone, PartialEq)]
pub struct RadialFn {
    pub power: f64,
    pub series: FracSeries,
}

impl RadialFn {
    pub fn new(series: FracSeries) -> Self {
        RadialFn { power: 0.0, series }
    }

    pub fn alpha(&self) -> f64 {
        self.series.alpha()
    }

    pub fn eval(&self, r: f64) -> f64 {
        let v = self.series.eval(r);
        if self.power == 0.0 {
            v
        } else {
            r.powf(self.power) * v
        }
    }

    pub fn mul_power(&self, p: f64) -> RadialFn {
        RadialFn {
            power: self.power + p,
            series: self.series.clone(),
        }
    }

    pub fn scale(&self, k: f64) -> RadialFn {
        RadialFn {
            power: self.power,
            series: self.series.scale(k),
        }
    }

    /// The function as a plain series, which requires every exponent to be
    /// nonnegative.
    pub fn to_series(&self) -> Result<FracSeries> {
        if self.series.is_empty() {
            return FracSeries::zero(self.alpha(), 0.0);
        }
        let offset = self.series.offset() + self.power;
        if offset < -EXPONENT_EPS {
            return Err(Error::Grid(format!(
                "radial factor has base exponent {offset} < 0; the Caputo derivative at r = 0 is undefined"
            )));
        }
        FracSeries::new(self.alpha(), offset.max(0.0), self.series.coeffs().to_vec())
    }

    /// `D_r^α` of this function.
    pub fn caputo(&self) -> Result<RadialFn> {
        let s = self.to_series()?;
        Ok(RadialFn {
            power: -self.alpha(),
            series: caputo_times_power(&s, self.alpha())?,
        })
    }
}

/// A separable scalar field `u = R(r) Θ(θ) Φ(φ)` with Caputo order `alpha`.
#[derive(Debug, Clone, PartialEq)]
pub struct SeparableField3D {
    pub radial: RadialFn,
    pub theta: AngularFn,
    pub azimuth: Azimuth,
    alpha: f64,
    /// Separation constant carried with assembled solutions.
    pub lambda: f64,
}

impl SeparableField3D {
    pub fn new(radial: FracSeries, theta: AngularFn, azimuth: Azimuth) -> Result<Self> {
        let alpha = radial.alpha();
        if !(alpha > 0.0 && alpha <= 1.0) {
            return Err(Error::domain(format!(
                "field order alpha must lie in (0, 1], got {alpha}"
            )));
        }
        Ok(SeparableField3D {
            radial: RadialFn::new(radial),
            theta,
            azimuth,
            alpha,
            lambda: 0.0,
        })
    }

    pub fn with_lambda(mut self, lambda: f64) -> Self {
        self.lambda = lambda;
        self
    }

    /// The identically zero field on the given order.
    pub fn zero(alpha: f64) -> Result<Self> {
        Self::new(
            FracSeries::zero(alpha, 0.0)?,
            AngularFn::constant(0.0),
            Azimuth::constant(),
        )
    }

    /// `r^(mα) Θ(θ)` with constant azimuthal factor, the form of a separated
    /// solution of the fractional Laplace equation.
    pub fn laplace_mode(alpha: f64, lambda: f64, m: f64, theta: AngularFn) -> Result<Self> {
        let exponent = m * alpha;
        if exponent < -EXPONENT_EPS {
            return Err(Error::SingularTerm { exponent });
        }
        Ok(Self::new(
            FracSeries::monomial(alpha, exponent.max(0.0), 1.0)?,
            theta,
            Azimuth::constant(),
        )?
        .with_lambda(lambda))
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn m_azimuthal(&self) -> u32 {
        self.azimuth.m
    }

    pub fn eval(&self, r: f64, theta: f64, phi: f64) -> f64 {
        self.radial.eval(r) * self.theta.eval(theta) * self.azimuth.eval(phi)
    }
}

/// A point `(r, θ, φ)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SphericalPoint {
    pub r: f64,
    pub theta: f64,
    pub phi: f64,
}

impl SphericalPoint {
    pub fn new(r: f64, theta: f64, phi: f64) -> Self {
        SphericalPoint { r, theta, phi }
    }

    fn check(&self) -> Result<()> {
        if !(self.r > 0.0) {
            return Err(Error::SingularPoint(format!("r = {} is not > 0", self.r)));
        }
        check_polar_angle(self.theta)
    }
}

/// Radial length and arc factors of the effective metric induced by the
/// fractional radius derivative.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EffectiveMetric {
    pub radial_len: f64,
    pub polar_arc_factor: f64,
    pub azimuthal_arc_factor: f64,
}

/// `(r^α/Γ(α+1), r^α/Γ(α+1), r^α sin^α θ/Γ(α+1))`.
pub fn effective_metric(r: f64, theta: f64, alpha: f64) -> Result<EffectiveMetric> {
    if !(r >= 0.0) {
        return Err(Error::domain(format!("r must be >= 0, got {r}")));
    }
    if !(alpha > 0.0) {
        return Err(Error::domain(format!("alpha must be > 0, got {alpha}")));
    }
    let g = gamma_alpha_plus_one(alpha)?;
    let radial = r.powf(alpha) / g;
    let sin_a = theta.sin().max(0.0).powf(alpha);
    Ok(EffectiveMetric {
        radial_len: radial,
        polar_arc_factor: radial,
        azimuthal_arc_factor: radial * sin_a,
    })
}

/// The three gradient components of `u` as separable fields.
pub fn grad_fields(u: &SeparableField3D) -> Result<[SeparableField3D; 3]> {
    let alpha = u.alpha;
    let g = gamma_alpha_plus_one(alpha)?;
    let scaled = u.radial.mul_power(-alpha).scale(g);
    let radial = SeparableField3D {
        radial: u.radial.caputo()?,
        ..u.clone()
    };
    let polar = SeparableField3D {
        radial: scaled.clone(),
        theta: u.theta.derivative(),
        ..u.clone()
    };
    let azimuthal = SeparableField3D {
        radial: scaled,
        theta: u.theta.clone().with_sin_power(u.theta.sin_power - alpha),
        azimuth: u.azimuth.derivative(),
        ..u.clone()
    };
    Ok([radial, polar, azimuthal])
}

/// `Grad^α u` evaluated at a point, as `(g_r, g_θ, g_φ)`.
pub fn grad_spherical(u: &SeparableField3D, p: SphericalPoint) -> Result<[f64; 3]> {
    p.check()?;
    let [gr, gt, gp] = grad_fields(u)?;
    Ok([
        gr.eval(p.r, p.theta, p.phi),
        gt.eval(p.r, p.theta, p.phi),
        gp.eval(p.r, p.theta, p.phi),
    ])
}

/// `div^α A` at a point.
pub fn div_spherical(a: &[SeparableField3D; 3], p: SphericalPoint) -> Result<f64> {
    p.check()?;
    let alpha = a[0].alpha;
    if a.iter().any(|f| (f.alpha - alpha).abs() > EXPONENT_EPS) {
        return Err(Error::domain("divergence components have different orders"));
    }
    let g = gamma_alpha_plus_one(alpha)?;
    let (r, theta, phi) = (p.r, p.theta, p.phi);
    let r_alpha = r.powf(alpha);
    let sin_a = (alpha * theta.sin().ln()).exp();

    // (1/(r^2α sin^α θ)) D_r(r^2α sin^α θ A_r): the sin factors cancel
    let [ar, at, ap] = a;
    let inner = ar.radial.mul_power(2.0 * alpha).caputo()?;
    let t1 = inner.eval(r) / (r_alpha * r_alpha) * ar.theta.eval(theta) * ar.azimuth.eval(phi);

    // (Γ/(r^2α sin^α θ)) ∂_θ(r^α sin^α θ A_θ) = Γ r^(−α) R Φ (α cot θ Θ + Θ')
    let cot = theta.cos() / theta.sin();
    let t2 = g / r_alpha
        * at.radial.eval(r)
        * at.azimuth.eval(phi)
        * (alpha * cot * at.theta.eval(theta) + at.theta.derivative().eval(theta));

    // (Γ/(r^2α sin^α θ)) ∂_φ(r^α A_φ)
    let t3 = g / (r_alpha * sin_a) * ap.radial.eval(r) * ap.theta.eval(theta) * ap.azimuth.derivative().eval(phi);

    Ok(t1 + t2 + t3)
}

/// `r^(−2α) D(r^2α D R)` as a function of `r`.
fn spherical_radial_operator(radial: &RadialFn) -> Result<RadialFn> {
    let alpha = radial.alpha();
    Ok(radial
        .caputo()?
        .mul_power(2.0 * alpha)
        .caputo()?
        .mul_power(-2.0 * alpha))
}

/// Full fractional Laplacian at a point, evaluated term by term:
///
/// ```text
/// Δu = r^(−2α) D(r^2α D u) + Γ²/(r^2α sin^α θ) ∂_θ(sin^α θ ∂_θ u)
///      + Γ²/(r^2α sin^2α θ) ∂²_φ u
/// ```
pub fn laplacian_spherical(u: &SeparableField3D, p: SphericalPoint) -> Result<f64> {
    p.check()?;
    let alpha = u.alpha;
    let g = gamma_alpha_plus_one(alpha)?;
    let (r, theta, phi) = (p.r, p.theta, p.phi);
    let r2a = r.powf(2.0 * alpha);
    let sin_a = (alpha * theta.sin().ln()).exp();

    let radial_val = u.radial.eval(r);
    let th = u.theta.eval(theta);
    let d1 = u.theta.derivative();
    let d2 = d1.derivative();
    let ph = u.azimuth.eval(phi);

    let t_radial = spherical_radial_operator(&u.radial)?.eval(r) * th * ph;
    let cot = theta.cos() / theta.sin();
    let t_polar = g * g / r2a * radial_val * ph * (d2.eval(theta) + alpha * cot * d1.eval(theta));
    let t_azim = g * g / (r2a * sin_a * sin_a) * radial_val * th * u.azimuth.derivative().derivative().eval(phi);
    Ok(t_radial + t_polar + t_azim)
}

/// Radial part of the spherical Laplacian as a series:
/// `r^(mα) ↦ Γ(mα+α+1)/Γ(mα−α+1) r^((m−2)α)`.
pub fn radial_laplacian(r: &FracSeries) -> Result<FracSeries> {
    let alpha = r.alpha();
    caputo_times_power(&caputo_times_power(r, 2.0 * alpha)?, -2.0 * alpha)
}

/// Radial part of the polar Laplacian as a series: `r^(−α) D(r^α D R)`.
pub fn polar_radial_laplacian(r: &FracSeries) -> Result<FracSeries> {
    let alpha = r.alpha();
    caputo_times_power(&caputo_times_power(r, alpha)?, -alpha)
}

/// `r^α D(r^α D R)`, which keeps every exponent in place.
pub fn polar_radial_operator(r: &FracSeries) -> Result<FracSeries> {
    let alpha = r.alpha();
    caputo_times_power(&caputo_times_power(r, alpha)?, alpha)
}

/// Left side minus right side of `Γ(mα+α+1)/Γ(mα−α+1) = λ Γ²(α+1)`.
pub fn eigen_residual(m: f64, lambda: f64, alpha: f64) -> Result<f64> {
    let g = gamma_alpha_plus_one(alpha)?;
    Ok(gamma_ratio_lockstep(m * alpha + alpha + 1.0, m * alpha - alpha + 1.0)? - lambda * g * g)
}

/// Radial exponents `m` (the solution is `r^(mα)`) that make a separated
/// solution of the fractional Laplace equation with constant `λ`.
pub fn radial_eigen_exponents(lambda: f64, alpha: f64, scan: &RootScan) -> Result<Vec<f64>> {
    if !(alpha > 0.0 && alpha <= 1.0) {
        return Err(Error::domain(format!("alpha must lie in (0, 1], got {alpha}")));
    }
    scan_roots(|m| eigen_residual(m, lambda, alpha), scan)
}

/// Largest `|Δ^α u|` over the sample points.
pub fn laplace_residual_3d(u: &SeparableField3D, points: &[SphericalPoint]) -> Result<f64> {
    points
        .iter()
        .map(|&p| laplacian_spherical(u, p).map(f64::abs))
        .try_fold(0.0_f64, |acc, v| v.map(|v| acc.max(v)))
}

/// A separated mode `u(t, r, θ) = A e^(−a²k²t) cos(νθ + phase) R_ρ(r)` of the
/// fractional heat equation in the plane.
#[derive(Debug, Clone)]
pub struct HeatMode {
    pub radial: BesselSolution,
    pub amplitude: f64,
    pub phase: f64,
    pub diffusivity: f64,
}

impl HeatMode {
    pub fn new(radial: BesselSolution, amplitude: f64, phase: f64, diffusivity: f64) -> Result<Self> {
        let nu = radial.nu();
        if (nu - nu.round()).abs() > 1e-12 || nu < 0.0 {
            return Err(Error::domain(format!(
                "nu must be a nonnegative integer for a 2π-periodic mode, got {nu}"
            )));
        }
        Ok(HeatMode {
            radial,
            amplitude,
            phase,
            diffusivity,
        })
    }

    fn decay(&self) -> f64 {
        let k = self.radial.k();
        self.diffusivity * self.diffusivity * k * k
    }

    pub fn eval(&self, t: f64, r: f64, theta: f64) -> Result<f64> {
        let nu = self.radial.nu();
        Ok(self.amplitude * (-self.decay() * t).exp() * (nu * theta + self.phase).cos() * self.radial.eval(r)?)
    }

    /// `∂u/∂t − a² Δ^α u` at a point, with the polar Laplacian applied
    /// symbolically to the truncated radial series.
    pub fn residual(&self, t: f64, r: f64, theta: f64) -> Result<f64> {
        if !(r > 0.0) {
            return Err(Error::SingularPoint(format!("r = {r} is not > 0")));
        }
        let alpha = self.radial.alpha();
        let nu = self.radial.nu();
        let g = gamma_alpha_plus_one(alpha)?;
        let a2 = self.diffusivity * self.diffusivity;
        let r2a = r.powf(2.0 * alpha);
        let time = self.amplitude * (-self.decay() * t).exp();
        let ang = (nu * theta + self.phase).cos();

        let series = self.radial.as_series()?;
        let radial_lap = polar_radial_operator(&series)?.eval(r) / r2a;
        let u = time * ang * series.eval(r);
        let lap = time * ang * radial_lap - g * g * nu * nu / r2a * u;
        let du_dt = -self.decay() * u;
        Ok(du_dt - a2 * lap)
    }
}

/// Builds a heat mode on the default radial branch (largest nonnegative
/// index root) with `n_terms` series coefficients.
pub fn heat_solution_assemble(
    alpha: f64,
    k: f64,
    nu: f64,
    amplitude: f64,
    phase: f64,
    diffusivity: f64,
    n_terms: usize,
) -> Result<HeatMode> {
    let scan = RootScan::new(-1.0, nu.max(1.0) * 4.0 + 5.0)?;
    let roots = bessel::solve_rho(nu, alpha, &scan)?;
    let rho = bessel::default_rho(&roots).ok_or(Error::NoRoot { lo: 0.0, hi: scan.hi() })?;
    let sol = BesselSolution::new(alpha, nu, k, rho, n_terms)?;
    HeatMode::new(sol, amplitude, phase, diffusivity)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::angular::Poly;
    use crate::gamma::gamma_ratio;
    use std::f64::consts::{FRAC_PI_2, PI};

    fn radial_only(alpha: f64, exponent: f64) -> SeparableField3D {
        SeparableField3D::new(
            FracSeries::monomial(alpha, exponent, 1.0).unwrap(),
            AngularFn::constant(1.0),
            Azimuth::constant(),
        )
        .unwrap()
    }

    #[test]
    fn metric_examples() {
        let m = effective_metric(2.0, FRAC_PI_2, 1.0).unwrap();
        assert!((m.radial_len - 2.0).abs() < 1e-15);
        assert!((m.polar_arc_factor - 2.0).abs() < 1e-15);
        assert!((m.azimuthal_arc_factor - 2.0).abs() < 1e-15);

        let m = effective_metric(4.0, FRAC_PI_2, 0.5).unwrap();
        assert!((m.radial_len - 2.256_758_334_191_025).abs() < 1e-13);
        assert!((m.azimuthal_arc_factor - m.radial_len).abs() < 1e-15);

        let m = effective_metric(0.0, 1.0, 0.5).unwrap();
        assert_eq!(
            (m.radial_len, m.polar_arc_factor, m.azimuthal_arc_factor),
            (0.0, 0.0, 0.0)
        );
    }

    #[test]
    fn metric_is_not_additive() {
        let one = effective_metric(1.0, FRAC_PI_2, 0.5).unwrap().radial_len;
        let two = effective_metric(2.0, FRAC_PI_2, 0.5).unwrap().radial_len;
        assert!(two < one + one);
        assert!((two - (one + one)).abs() > 1e-3);
    }

    #[test]
    fn grad_examples() {
        let u = radial_only(1.0, 1.0);
        let g = grad_spherical(&u, SphericalPoint::new(2.0, FRAC_PI_2, 0.0)).unwrap();
        assert!((g[0] - 1.0).abs() < 1e-15 && g[1].abs() < 1e-15 && g[2].abs() < 1e-15);

        for alpha in [0.3, 0.6, 0.95] {
            let u = radial_only(alpha, alpha);
            let g = grad_spherical(&u, SphericalPoint::new(1.7, 1.1, 0.4)).unwrap();
            let expect = crate::gamma::gamma(alpha + 1.0).unwrap();
            assert!((g[0] - expect).abs() < 1e-14, "{g:?}");
            assert_eq!((g[1], g[2]), (0.0, 0.0));
        }

        let u = SeparableField3D::new(
            FracSeries::monomial(1.0, 1.0, 1.0).unwrap(),
            AngularFn::from_cos_poly(Poly(vec![0.0, 1.0])),
            Azimuth::constant(),
        )
        .unwrap();
        let g = grad_spherical(&u, SphericalPoint::new(1.0, FRAC_PI_2, 0.0)).unwrap();
        assert!(g[0].abs() < 1e-15);
        assert!((g[1] + 1.0).abs() < 1e-15);
        assert_eq!(g[2], 0.0);
    }

    #[test]
    fn grad_rejects_singular_points() {
        let u = radial_only(0.5, 1.0);
        assert!(matches!(
            grad_spherical(&u, SphericalPoint::new(0.0, 1.0, 0.0)),
            Err(Error::SingularPoint(_))
        ));
        assert!(matches!(
            grad_spherical(&u, SphericalPoint::new(1.0, 0.0, 0.0)),
            Err(Error::SingularPoint(_))
        ));
    }

    #[test]
    fn div_examples() {
        let zero = SeparableField3D::zero(1.0).unwrap();
        let a = [radial_only(1.0, 1.0), zero.clone(), zero.clone()];
        let d = div_spherical(&a, SphericalPoint::new(2.0, FRAC_PI_2, 0.0)).unwrap();
        assert!((d - 3.0).abs() < 1e-14);

        for alpha in [0.4, 0.7, 1.0] {
            let z = SeparableField3D::zero(alpha).unwrap();
            let a = [radial_only(alpha, alpha), z.clone(), z];
            let r = 1.3;
            let d = div_spherical(&a, SphericalPoint::new(r, 0.9, 0.2)).unwrap();
            let expect = gamma_ratio(3.0 * alpha + 1.0, 2.0 * alpha + 1.0).unwrap();
            assert!((d - expect).abs() < 1e-13 * expect, "alpha {alpha}: {d} vs {expect}");
        }

        let c = radial_only(0.6, 0.0);
        let z = SeparableField3D::zero(0.6).unwrap();
        let a = [z.clone(), z, c];
        assert_eq!(div_spherical(&a, SphericalPoint::new(1.0, 1.0, 1.0)).unwrap(), 0.0);
    }

    #[test]
    fn radial_laplacian_examples() {
        let r2 = FracSeries::monomial(1.0, 2.0, 1.0).unwrap();
        let l = radial_laplacian(&r2).unwrap();
        assert_eq!((l.offset(), l.coeffs()), (0.0, &[6.0][..]));

        for alpha in [0.3, 0.5, 0.8] {
            let f = FracSeries::monomial(alpha, 2.0 * alpha, 1.0).unwrap();
            let l = radial_laplacian(&f).unwrap();
            let expect = gamma_ratio(3.0 * alpha + 1.0, alpha + 1.0).unwrap();
            assert!(l.offset().abs() < 1e-15);
            assert!((l.coeffs()[0] - expect).abs() < 1e-13 * expect);
        }

        let c = FracSeries::monomial(0.5, 0.0, 3.0).unwrap();
        assert!(radial_laplacian(&c).unwrap().is_zero());

        let r1 = FracSeries::monomial(0.5, 0.5, 1.0).unwrap();
        assert!(matches!(radial_laplacian(&r1), Err(Error::SingularTerm { .. })));
    }

    #[test]
    fn radial_laplacian_on_eigen_exponent() {
        let alpha = 0.8;
        let lambda = 6.0;
        let scan = RootScan::new(0.0, 8.0).unwrap();
        let m = radial_eigen_exponents(lambda, alpha, &scan).unwrap()[0];
        let f = FracSeries::monomial(alpha, m * alpha, 1.0).unwrap();
        let l = radial_laplacian(&f).unwrap();
        let g = crate::gamma::gamma(alpha + 1.0).unwrap();
        assert!((l.offset() - (m - 2.0) * alpha).abs() < 1e-12);
        assert!((l.coeffs()[0] - lambda * g * g).abs() < 1e-10);
    }

    #[test]
    fn polar_laplacian_examples() {
        let r2 = FracSeries::monomial(1.0, 2.0, 1.0).unwrap();
        let l = polar_radial_laplacian(&r2).unwrap();
        assert_eq!((l.offset(), l.coeffs()), (0.0, &[4.0][..]));
        let c = FracSeries::monomial(0.7, 0.0, 1.0).unwrap();
        assert!(polar_radial_laplacian(&c).unwrap().is_zero());
    }

    #[test]
    fn eigen_exponent_examples() {
        let scan = RootScan::new(-5.0, 5.0).unwrap();
        let cases: [(f64, [f64; 2]); 3] = [(6.0, [-3.0, 2.0]), (0.0, [-1.0, 0.0]), (2.0, [-2.0, 1.0])];
        for (lambda, expect) in cases {
            let roots = radial_eigen_exponents(lambda, 1.0, &scan).unwrap();
            assert_eq!(roots.len(), 2, "lambda {lambda}: {roots:?}");
            for (r, e) in roots.iter().zip(expect) {
                assert!((r - e).abs() < 1e-10, "lambda {lambda}: {roots:?}");
            }
        }
    }

    #[test]
    fn laplace_residual_classical_harmonic() {
        // r² P₂(cos θ) ∝ r² (1 − 3 cos² θ)
        let theta = AngularFn::from_cos_poly(Poly(vec![1.0, 0.0, -3.0]));
        let u = SeparableField3D::laplace_mode(1.0, 6.0, 2.0, theta).unwrap();
        let pts: Vec<_> = (0..20)
            .map(|i| {
                let s = i as f64 / 19.0;
                SphericalPoint::new(0.3 + 1.5 * s, 0.2 + (PI - 0.4) * s, 2.0 * s)
            })
            .collect();
        assert!(laplace_residual_3d(&u, &pts).unwrap() < 1e-8);

        let c = SeparableField3D::laplace_mode(0.7, 0.0, 0.0, AngularFn::constant(2.0)).unwrap();
        assert_eq!(laplace_residual_3d(&c, &pts).unwrap(), 0.0);
    }
}
