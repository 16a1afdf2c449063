//! The fractional Bessel equation from separating the fractional heat
//! equation in polar coordinates:
//!
//! ```text
//! r^α D(r^α D R) + k² r^2α R − ν² Γ²(α+1) R = 0
//! ```
//!
//! Its regular series is `R_ρ(r) = r^(αρ) Σ (−1)^n d_n k^(2n) r^(2nα)` where
//! the index `ρ` solves `(Γ(αρ+1)/Γ(αρ−α+1))² = ν² Γ²(α+1)`. At `α = 1` this
//! is `ρ = ±ν` and `R_ν = Γ(ν+1) (2/k)^ν J_ν(kr)`.

use crate::error::{Error, Result};
use crate::gamma::{gamma_ratio_lockstep, lgamma_signed, SignedLogValue};
use crate::roots::{scan_roots, RootScan};
use crate::series::FracSeries;
use crate::vector_calc::polar_radial_operator;

/// Denominators of the coefficient recurrence closer to zero than this are
/// rejected.
pub const DENOMINATOR_EPS: f64 = 1e-10;

/// Truncation rule for [`BesselSolution::eval`]: the last term must be below
/// this fraction of the partial sum.
pub const EVAL_REL_TOL: f64 = 1e-12;

/// Cap on the number of terms tried when suggesting a longer truncation.
const SUGGEST_CAP: usize = 100_000;

fn check_alpha(alpha: f64) -> Result<()> {
    if alpha > 0.0 && alpha <= 1.0 {
        Ok(())
    } else {
        Err(Error::domain(format!("alpha must lie in (0, 1], got {alpha}")))
    }
}

/// `Γ(x+1)/Γ(x−α+1)`, taking the limit along the line when both are poles.
fn index_ratio(x: f64, alpha: f64) -> Result<f64> {
    gamma_ratio_lockstep(x + 1.0, x - alpha + 1.0)
}

fn gamma_alpha_plus_one(alpha: f64) -> Result<f64> {
    Ok(lgamma_signed(alpha + 1.0)?.to_f64())
}

/// Left side minus right side of the index equation.
pub fn index_residual(rho: f64, nu: f64, alpha: f64) -> Result<f64> {
    let g = gamma_alpha_plus_one(alpha)?;
    let q = index_ratio(alpha * rho, alpha)?;
    Ok(q * q - nu * nu * g * g)
}

/// All roots `ρ` of the index equation in the scan bracket, ascending.
///
/// The two linear factors `Γ(αρ+1)/Γ(αρ−α+1) ∓ νΓ(α+1)` are scanned
/// separately so that double roots (`ν = 0`) are sign changes, then every
/// candidate is checked against the squared form.
pub fn solve_rho(nu: f64, alpha: f64, scan: &RootScan) -> Result<Vec<f64>> {
    check_alpha(alpha)?;
    if !(nu >= 0.0) {
        return Err(Error::domain(format!("nu must be >= 0, got {nu}")));
    }
    let target = nu * gamma_alpha_plus_one(alpha)?;
    let mut roots = Vec::new();
    for sign in [1.0, -1.0] {
        match scan_roots(|rho| Ok(index_ratio(alpha * rho, alpha)? - sign * target), scan) {
            Ok(r) => roots.extend(r),
            Err(Error::NoRoot { .. }) => {}
            Err(e) => return Err(e),
        }
    }
    roots.retain(|&rho| index_residual(rho, nu, alpha).is_ok_and(|r| r.abs() < scan.tol));
    roots.sort_by(|a, b| a.total_cmp(b));
    roots.dedup_by(|a, b| (*a - *b).abs() <= 1e-9 * b.abs().max(1.0));
    if roots.is_empty() {
        return Err(Error::NoRoot {
            lo: scan.lo(),
            hi: scan.hi(),
        });
    }
    Ok(roots)
}

/// The branch regular at the origin: the largest nonnegative root.
pub fn default_rho(roots: &[f64]) -> Option<f64> {
    roots.iter().copied().filter(|&r| r >= 0.0).reduce(f64::max)
}

/// Recurrence denominators `(Γ(αρ+2nα+1)/Γ(αρ+2nα−α+1))² − ν²Γ²(α+1)` for
/// `n = 1..=n_max`.
fn denominators(rho: f64, nu: f64, alpha: f64, n_max: usize) -> Result<Vec<f64>> {
    let g = gamma_alpha_plus_one(alpha)?;
    let shift = nu * nu * g * g;
    (1..=n_max)
        .map(|n| {
            let q = index_ratio(alpha * rho + 2.0 * n as f64 * alpha, alpha)?;
            let den = q * q - shift;
            if den.abs() < DENOMINATOR_EPS {
                Err(Error::DegenerateDenominator { n })
            } else {
                Ok(den)
            }
        })
        .collect()
}

/// `d_0..=d_n_max` in log-magnitude and sign form.
pub fn bessel_coeffs_signed(rho: f64, nu: f64, alpha: f64, n_max: usize) -> Result<Vec<SignedLogValue>> {
    check_alpha(alpha)?;
    let dens = denominators(rho, nu, alpha, n_max)?;
    let mut d = Vec::with_capacity(n_max + 1);
    d.push(SignedLogValue::ONE);
    for den in dens {
        let prev = *d.last().unwrap();
        d.push(prev / SignedLogValue::from_f64(den));
    }
    Ok(d)
}

/// `d_0..=d_n_max` as reals.
pub fn bessel_coeffs(rho: f64, nu: f64, alpha: f64, n_max: usize) -> Result<Vec<f64>> {
    Ok(bessel_coeffs_signed(rho, nu, alpha, n_max)?
        .iter()
        .map(SignedLogValue::to_f64)
        .collect())
}

/// A truncated radial solution `R_ρ` with coefficients `d_0..=d_N`.
#[derive(Debug, Clone, PartialEq)]
pub struct BesselSolution {
    alpha: f64,
    nu: f64,
    k: f64,
    rho: f64,
    denominators: Vec<f64>,
    d: Vec<SignedLogValue>,
}

impl BesselSolution {
    /// Builds the solution with `n_max + 1` coefficients. `rho` must solve
    /// the index equation to `1e−8 · max(1, ν²Γ²(α+1))`.
    pub fn new(alpha: f64, nu: f64, k: f64, rho: f64, n_max: usize) -> Result<Self> {
        check_alpha(alpha)?;
        if !(nu >= 0.0) {
            return Err(Error::domain(format!("nu must be >= 0, got {nu}")));
        }
        if !(k > 0.0 && k.is_finite()) {
            return Err(Error::domain(format!("k must be > 0, got {k}")));
        }
        let g = gamma_alpha_plus_one(alpha)?;
        let res = index_residual(rho, nu, alpha)?;
        if res.abs() > 1e-8 * (nu * nu * g * g).max(1.0) {
            return Err(Error::domain(format!(
                "rho = {rho} does not solve the index equation for nu = {nu}, alpha = {alpha} (residual {res:e})"
            )));
        }
        let denominators = denominators(rho, nu, alpha, n_max)?;
        let d = bessel_coeffs_signed(rho, nu, alpha, n_max)?;
        Ok(BesselSolution {
            alpha,
            nu,
            k,
            rho,
            denominators,
            d,
        })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn nu(&self) -> f64 {
        self.nu
    }

    pub fn k(&self) -> f64 {
        self.k
    }

    pub fn rho(&self) -> f64 {
        self.rho
    }

    /// Index `N` of the last coefficient.
    pub fn n_max(&self) -> usize {
        self.d.len() - 1
    }

    pub fn d_coeffs(&self) -> Vec<f64> {
        self.d.iter().map(SignedLogValue::to_f64).collect()
    }

    pub fn d_coeffs_signed(&self) -> &[SignedLogValue] {
        &self.d
    }

    /// `R_ρ(r)`.
    ///
    /// The alternating sum is accumulated in double-double arithmetic so the
    /// cancellation at large `kr` does not eat the result. Fails with a
    /// suggested truncation when the last term is not below
    /// [`EVAL_REL_TOL`] times the partial sum.
    pub fn eval(&self, r: f64) -> Result<f64> {
        if !(r >= 0.0) {
            return Err(Error::domain(format!("r must be >= 0, got {r}")));
        }
        if r == 0.0 {
            return if self.rho > 0.0 {
                Ok(0.0)
            } else if self.rho == 0.0 {
                Ok(self.d[0].to_f64())
            } else {
                Err(Error::SingularPoint(format!("r = 0 with rho = {} < 0", self.rho)))
            };
        }
        let x = self.k * self.k * r.powf(2.0 * self.alpha);
        let mut term = DoubleDouble::from(1.0);
        let mut sum = term;
        for &den in &self.denominators {
            term = term.mul_f64(-x).div_f64(den);
            sum = sum.add(term);
        }
        let s = sum.to_f64();
        if !self.converged(term.to_f64(), s) {
            let suggested = self.suggest_terms(x, term, sum);
            return Err(Error::Tolerance {
                message: format!(
                    "last of {} terms is {:e} against partial sum {s:e} at r = {r}",
                    self.d.len(),
                    term.to_f64()
                ),
                suggested_terms: suggested,
            });
        }
        Ok(r.powf(self.alpha * self.rho) * s)
    }

    fn converged(&self, last: f64, sum: f64) -> bool {
        last.abs() < EVAL_REL_TOL * sum.abs() || last == 0.0
    }

    fn suggest_terms(&self, x: f64, mut term: DoubleDouble, mut sum: DoubleDouble) -> Option<usize> {
        let g = gamma_alpha_plus_one(self.alpha).ok()?;
        let shift = self.nu * self.nu * g * g;
        for n in self.d.len()..SUGGEST_CAP {
            let q = index_ratio(self.alpha * self.rho + 2.0 * n as f64 * self.alpha, self.alpha).ok()?;
            term = term.mul_f64(-x).div_f64(q * q - shift);
            sum = sum.add(term);
            if self.converged(term.to_f64(), sum.to_f64()) {
                return Some(n + 1);
            }
        }
        None
    }

    /// The solution as a fractional power series in `r` with offset `αρ`
    /// and step `α`; odd-index coefficients are zero.
    pub fn as_series(&self) -> Result<FracSeries> {
        let offset = self.alpha * self.rho;
        if offset < 0.0 {
            return Err(Error::SingularTerm { exponent: offset });
        }
        let ln_k2 = 2.0 * self.k.ln();
        let mut coeffs = vec![0.0; 2 * self.d.len() - 1];
        for (n, d) in self.d.iter().enumerate() {
            let t = *d * SignedLogValue::new(n as f64 * ln_k2, crate::gamma::Sign::Positive);
            coeffs[2 * n] = if n % 2 == 0 { t.to_f64() } else { -t.to_f64() };
        }
        FracSeries::new(self.alpha, offset, coeffs)
    }

    /// `r^α D(r^α D R) + k² r^2α R − ν²Γ²(α+1) R` applied to the truncated
    /// series. Only the last coefficient, at `r^(αρ + 2α(N+1))`, survives in
    /// exact arithmetic.
    pub fn residual_series(&self) -> Result<FracSeries> {
        let r = self.as_series()?;
        let g = gamma_alpha_plus_one(self.alpha)?;
        let op = polar_radial_operator(&r)?;
        let shifted = r.mul_power(2.0 * self.alpha)?.scale(self.k * self.k);
        op.add(&shifted)?.add(&r.scale(-self.nu * self.nu * g * g))
    }
}

/// `ν(α, ρ) = |Γ(αρ+1)/Γ(αρ−α+1)| / Γ(α+1)`, the nonnegative branch of the
/// index equation solved for `ν`. `None` marks cells where the numerator is
/// a pole.
pub fn nu_value(alpha: f64, rho: f64) -> Option<f64> {
    let g = gamma_alpha_plus_one(alpha).ok()?;
    let q = index_ratio(alpha * rho, alpha).ok()?;
    q.is_finite().then(|| q.abs() / g)
}

/// [`nu_value`] on the tensor grid, indexed `[alpha][rho]`.
pub fn nu_surface(alpha_grid: &[f64], rho_grid: &[f64]) -> Vec<Vec<Option<f64>>> {
    alpha_grid
        .iter()
        .map(|&a| rho_grid.iter().map(|&r| nu_value(a, r)).collect())
        .collect()
}

/// Unevaluated sum `hi + lo` with `|lo| ≤ ulp(hi)/2`.
#[derive(Debug, Clone, Copy)]
struct DoubleDouble {
    hi: f64,
    lo: f64,
}

impl From<f64> for DoubleDouble {
    fn from(x: f64) -> Self {
        DoubleDouble { hi: x, lo: 0.0 }
    }
}

fn quick_two_sum(a: f64, b: f64) -> DoubleDouble {
    let s = a + b;
    DoubleDouble { hi: s, lo: b - (s - a) }
}

fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

impl DoubleDouble {
    fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    fn add(self, o: DoubleDouble) -> DoubleDouble {
        let (s, e) = two_sum(self.hi, o.hi);
        quick_two_sum(s, e + self.lo + o.lo)
    }

    fn mul_f64(self, b: f64) -> DoubleDouble {
        let p = self.hi * b;
        let e = self.hi.mul_add(b, -p);
        quick_two_sum(p, e + self.lo * b)
    }

    fn div_f64(self, b: f64) -> DoubleDouble {
        let q = self.hi / b;
        let p = q * b;
        let e = q.mul_add(b, -p);
        let r = ((self.hi - p) - e + self.lo) / b;
        quick_two_sum(q, r)
    }
}
