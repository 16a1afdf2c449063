//! Angular factors of separable fields: `Θ(θ)` and `Φ(φ)`.
//!
//! `Θ` is kept in the form `sin^s θ · (p(cos θ) + sin θ · q(cos θ))` with
//! polynomials `p`, `q`. The form is closed under `d/dθ`, so gradients of
//! gradients stay exact.

use crate::error::{Error, Result};

/// Dense polynomial `Σ a_k x^k`.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Poly(pub Vec<f64>);

impl Poly {
    pub fn constant(c: f64) -> Self {
        Poly(vec![c])
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.0.iter().rev().fold(0.0, |acc, &a| acc * x + a)
    }

    pub fn derivative(&self) -> Poly {
        Poly(self.0.iter().enumerate().skip(1).map(|(k, &a)| k as f64 * a).collect())
    }

    pub fn scale(&self, k: f64) -> Poly {
        Poly(self.0.iter().map(|a| a * k).collect())
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.0.len().max(other.0.len());
        Poly(
            (0..n)
                .map(|i| self.0.get(i).copied().unwrap_or(0.0) + other.0.get(i).copied().unwrap_or(0.0))
                .collect(),
        )
    }

    pub fn mul_x(&self) -> Poly {
        if self.0.is_empty() {
            return Poly::default();
        }
        let mut c = vec![0.0];
        c.extend_from_slice(&self.0);
        Poly(c)
    }

    /// Multiplies by `1 − x²`.
    pub fn mul_one_minus_x2(&self) -> Poly {
        self.add(&self.mul_x().mul_x().scale(-1.0))
    }
}

/// `Θ(θ) = sin^s θ · (p(cos θ) + sin θ · q(cos θ))`.
#[derive(Debug, Clone, PartialEq)]
pub struct AngularFn {
    pub sin_power: f64,
    pub even: Poly,
    pub odd: Poly,
}

impl AngularFn {
    pub fn constant(c: f64) -> Self {
        AngularFn {
            sin_power: 0.0,
            even: Poly::constant(c),
            odd: Poly::default(),
        }
    }

    /// `p(cos θ)`.
    pub fn from_cos_poly(p: Poly) -> Self {
        AngularFn {
            sin_power: 0.0,
            even: p,
            odd: Poly::default(),
        }
    }

    pub fn with_sin_power(mut self, s: f64) -> Self {
        self.sin_power = s;
        self
    }

    pub fn eval(&self, theta: f64) -> f64 {
        let (s, x) = theta.sin_cos();
        let core = self.even.eval(x) + s * self.odd.eval(x);
        if self.sin_power == 0.0 {
            core
        } else {
            (self.sin_power * s.ln()).exp() * core
        }
    }

    /// Exact `dΘ/dθ` in the same representation.
    pub fn derivative(&self) -> AngularFn {
        let p = &self.even;
        let q = &self.odd;
        if self.sin_power == 0.0 {
            // (p + S q)' = [x q − (1−x²) q'] + S (−p')
            AngularFn {
                sin_power: 0.0,
                even: q.mul_x().add(&q.derivative().mul_one_minus_x2().scale(-1.0)),
                odd: p.derivative().scale(-1.0),
            }
        } else {
            // (S^s G)' = S^(s−1) ([s x p − (1−x²) p'] + S [(s+1) x q − (1−x²) q'])
            let s = self.sin_power;
            AngularFn {
                sin_power: s - 1.0,
                even: p.mul_x().scale(s).add(&p.derivative().mul_one_minus_x2().scale(-1.0)),
                odd: q
                    .mul_x()
                    .scale(s + 1.0)
                    .add(&q.derivative().mul_one_minus_x2().scale(-1.0)),
            }
        }
    }

    pub fn scale(&self, k: f64) -> AngularFn {
        AngularFn {
            sin_power: self.sin_power,
            even: self.even.scale(k),
            odd: self.odd.scale(k),
        }
    }
}

/// Which trigonometric function carries the azimuthal dependence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AzimuthKind {
    Cos,
    Sin,
}

/// `Φ(φ) = amplitude · cos(mφ)` or `amplitude · sin(mφ)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Azimuth {
    pub m: u32,
    pub kind: AzimuthKind,
    pub amplitude: f64,
}

impl Azimuth {
    pub fn constant() -> Self {
        Azimuth {
            m: 0,
            kind: AzimuthKind::Cos,
            amplitude: 1.0,
        }
    }

    pub fn cos(m: u32) -> Self {
        Azimuth {
            m,
            kind: AzimuthKind::Cos,
            amplitude: 1.0,
        }
    }

    pub fn sin(m: u32) -> Self {
        Azimuth {
            m,
            kind: AzimuthKind::Sin,
            amplitude: 1.0,
        }
    }

    pub fn eval(&self, phi: f64) -> f64 {
        let arg = self.m as f64 * phi;
        self.amplitude
            * match self.kind {
                AzimuthKind::Cos => arg.cos(),
                AzimuthKind::Sin => arg.sin(),
            }
    }

    pub fn derivative(&self) -> Azimuth {
        let m = self.m as f64;
        match self.kind {
            AzimuthKind::Cos => Azimuth {
                m: self.m,
                kind: AzimuthKind::Sin,
                amplitude: -m * self.amplitude,
            },
            AzimuthKind::Sin => Azimuth {
                m: self.m,
                kind: AzimuthKind::Cos,
                amplitude: m * self.amplitude,
            },
        }
    }
}

/// Checks `θ ∈ (0, π)`, where `sin θ > 0`.
pub(crate) fn check_polar_angle(theta: f64) -> Result<()> {
    if theta.sin() > 0.0 && theta > 0.0 && theta < std::f64::consts::PI {
        Ok(())
    } else {
        Err(Error::SingularPoint(format!("sin(theta) = 0 at theta = {theta}")))
    }
}
