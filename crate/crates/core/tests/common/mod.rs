//! Independent reference implementations used by the integration tests.
//! None of these go through the crate's gamma or series code.

#![allow(dead_code)]

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn uniform(rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> f64 {
    rng.gen_range(lo..=hi)
}

pub fn gamma(x: f64) -> f64 {
    libm::tgamma(x)
}

/// Monomial coefficients of the Legendre polynomial `P_l` from
/// `(n+1) P_(n+1) = (2n+1) x P_n − n P_(n−1)`.
pub fn legendre_p_coeffs(l: usize) -> Vec<f64> {
    let mut p0 = vec![1.0];
    if l == 0 {
        return p0;
    }
    let mut p1 = vec![0.0, 1.0];
    for n in 1..l {
        let nf = n as f64;
        let mut next = vec![0.0; n + 2];
        for (i, c) in p1.iter().enumerate() {
            next[i + 1] += (2.0 * nf + 1.0) * c / (nf + 1.0);
        }
        for (i, c) in p0.iter().enumerate() {
            next[i] -= nf * c / (nf + 1.0);
        }
        p0 = p1;
        p1 = next;
    }
    p1
}

/// `J_n(x)` for integer `n` from `J_n(x) = (1/2π) ∫_0^{2π} cos(nτ − x sin τ) dτ`
/// with the trapezoidal rule, which converges geometrically for this
/// periodic integrand.
pub fn bessel_j(n: u32, x: f64) -> f64 {
    let m = 1024;
    let h = 2.0 * PI / m as f64;
    let s: f64 = (0..m)
        .map(|i| {
            let t = i as f64 * h;
            (n as f64 * t - x * t.sin()).cos()
        })
        .sum();
    s / m as f64
}

/// `Γ(ν+1) (2/k)^ν J_ν(kr)`, the classical regular radial solution with unit
/// leading coefficient.
pub fn scaled_bessel(nu: u32, k: f64, r: f64) -> f64 {
    gamma(nu as f64 + 1.0) * (2.0 / k).powi(nu as i32) * bessel_j(nu, k * r)
}

/// Classical `₁F₁(a; c; z)` by its term recurrence.
pub fn hyp1f1(a: f64, c: f64, z: f64) -> f64 {
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 0..100_000 {
        let kf = k as f64;
        term *= (a + kf) / (c + kf) * z / (kf + 1.0);
        sum += term;
        if term == 0.0 || term.abs() < 1e-18 * sum.abs() {
            break;
        }
    }
    sum
}

/// Classical `₂F₁(a, b; c; z)` by its term recurrence, `|z| < 1`.
pub fn hyp2f1(a: f64, b: f64, c: f64, z: f64) -> f64 {
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 0..100_000 {
        let kf = k as f64;
        term *= (a + kf) * (b + kf) / (c + kf) * z / (kf + 1.0);
        sum += term;
        if term == 0.0 || term.abs() < 1e-18 * sum.abs() {
            break;
        }
    }
    sum
}

/// Draws a value in `[lo, hi]` at least `gap` away from every non-positive
/// integer.
pub fn away_from_poles(rng: &mut ChaCha8Rng, lo: f64, hi: f64, gap: f64) -> f64 {
    loop {
        let v = uniform(rng, lo, hi);
        if v > gap || (v - v.round()).abs() >= gap {
            return v;
        }
    }
}

pub fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (0..n)
        .map(|i| {
            if n == 1 {
                lo
            } else {
                lo + (hi - lo) * i as f64 / (n - 1) as f64
            }
        })
        .collect()
}

/// Parses a CSV produced by the binary into its header and numeric rows;
/// empty fields become `None`.
pub fn parse_csv(text: &str) -> (Vec<String>, Vec<Vec<Option<f64>>>) {
    let mut lines = text.lines();
    let header = lines
        .next()
        .unwrap_or_default()
        .split(',')
        .map(str::to_string)
        .collect();
    let rows = lines
        .map(|l| {
            l.split(',')
                .map(|f| if f.is_empty() { None } else { Some(f.parse().unwrap()) })
                .collect()
        })
        .collect();
    (header, rows)
}
