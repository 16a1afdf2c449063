//! Truncated fractional power series `f(r) = Σ c_m r^(σ + mα)` about `r = 0`.

use crate::error::{Error, Result};

/// Exponents closer than this to a grid point, or to zero, are snapped.
pub(crate) const EXPONENT_EPS: f64 = 1e-12;

/// A truncated fractional power series with step `alpha` and base exponent
/// `offset`. The coefficient list may be empty, which represents zero.
#[derive(Debug, Clone, PartialEq)]
pub struct FracSeries {
    alpha: f64,
    offset: f64,
    coeffs: Vec<f64>,
}

impl FracSeries {
    pub fn new(alpha: f64, offset: f64, coeffs: Vec<f64>) -> Result<Self> {
        if !(alpha > 0.0) || !alpha.is_finite() {
            return Err(Error::domain(format!("series step alpha must be > 0, got {alpha}")));
        }
        if offset < -EXPONENT_EPS || !offset.is_finite() {
            return Err(Error::domain(format!("series offset must be >= 0, got {offset}")));
        }
        Ok(FracSeries {
            alpha,
            offset: offset.max(0.0),
            coeffs,
        })
    }

    /// The zero series on the grid `offset + mα`.
    pub fn zero(alpha: f64, offset: f64) -> Result<Self> {
        Self::new(alpha, offset, Vec::new())
    }

    /// A single term `c · r^(offset)`.
    pub fn monomial(alpha: f64, exponent: f64, c: f64) -> Result<Self> {
        Self::new(alpha, exponent, vec![c])
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn offset(&self) -> f64 {
        self.offset
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0.0)
    }

    pub fn exponent(&self, m: usize) -> f64 {
        self.offset + m as f64 * self.alpha
    }

    /// `(exponent, coefficient)` pairs in ascending order.
    pub fn terms(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.coeffs.iter().enumerate().map(move |(m, &c)| (self.exponent(m), c))
    }

    pub fn eval(&self, r: f64) -> f64 {
        if self.coeffs.is_empty() {
            return 0.0;
        }
        let y = r.powf(self.alpha);
        let poly = self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * y + c);
        if self.offset == 0.0 {
            poly
        } else {
            r.powf(self.offset) * poly
        }
    }

    pub fn scale(&self, k: f64) -> Self {
        FracSeries {
            alpha: self.alpha,
            offset: self.offset,
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    /// Multiplies by `r^p`. A negative `p` is allowed as long as every
    /// nonzero term keeps a nonnegative exponent; leading zero terms that
    /// would go negative are dropped.
    pub fn mul_power(&self, p: f64) -> Result<Self> {
        let mut start = 0;
        while start < self.coeffs.len() && self.exponent(start) + p < -EXPONENT_EPS {
            if self.coeffs[start] != 0.0 {
                return Err(Error::SingularTerm {
                    exponent: self.exponent(start) + p,
                });
            }
            start += 1;
        }
        Ok(FracSeries {
            alpha: self.alpha,
            offset: (self.exponent(start) + p).max(0.0),
            coeffs: self.coeffs[start..].to_vec(),
        })
    }

    /// Re-expresses the series on the lower base exponent `offset` by
    /// prepending zero coefficients.
    pub fn rebase(&self, offset: f64) -> Result<Self> {
        let steps = (self.offset - offset) / self.alpha;
        let k = steps.round();
        if (steps - k).abs() > 1e-9 || k < 0.0 {
            return Err(Error::Grid(format!(
                "cannot rebase offset {} onto {} with step {}",
                self.offset, offset, self.alpha
            )));
        }
        let mut coeffs = vec![0.0; k as usize];
        coeffs.extend_from_slice(&self.coeffs);
        Self::new(self.alpha, offset, coeffs)
    }

    /// Pads with trailing zeros up to `len` coefficients.
    pub fn padded(&self, len: usize) -> Self {
        let mut out = self.clone();
        if out.coeffs.len() < len {
            out.coeffs.resize(len, 0.0);
        }
        out
    }

    /// Coefficient-wise sum of two series on the same exponent lattice.
    pub fn add(&self, other: &FracSeries) -> Result<Self> {
        if (self.alpha - other.alpha).abs() > EXPONENT_EPS {
            return Err(Error::Grid(format!("step mismatch: {} vs {}", self.alpha, other.alpha)));
        }
        if self.is_empty() {
            return Ok(other.clone());
        }
        if other.is_empty() {
            return Ok(self.clone());
        }
        let base = self.offset.min(other.offset);
        let a = self.rebase(base)?;
        let b = other.rebase(base)?;
        let n = a.len().max(b.len());
        let coeffs = (0..n)
            .map(|i| a.coeffs.get(i).copied().unwrap_or(0.0) + b.coeffs.get(i).copied().unwrap_or(0.0))
            .collect();
        Self::new(self.alpha, base, coeffs)
    }

    pub fn sub(&self, other: &FracSeries) -> Result<Self> {
        self.add(&other.scale(-1.0))
    }

    /// Coefficient of the term with the given exponent, zero when the
    /// exponent lies on the lattice but outside the stored range.
    pub fn coeff_at(&self, exponent: f64) -> Option<f64> {
        let steps = (exponent - self.offset) / self.alpha;
        let k = steps.round();
        if (steps - k).abs() > 1e-9 {
            return None;
        }
        if k < 0.0 {
            return Some(0.0);
        }
        Some(self.coeffs.get(k as usize).copied().unwrap_or(0.0))
    }
}
