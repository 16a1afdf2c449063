//! Grid scan plus bisection for the transcendental index equations.

use crate::error::{Error, Result};

/// Scan settings for [`scan_roots`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootScan {
    lo: f64,
    hi: f64,
    /// Number of uniformly spaced scan points, endpoints included.
    pub grid: usize,
    /// Residual bound a refined root must satisfy.
    pub tol: f64,
    pub max_iter: usize,
}

impl RootScan {
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if !(lo < hi) || !lo.is_finite() || !hi.is_finite() {
            return Err(Error::domain(format!(
                "scan bracket must satisfy lo < hi, got [{lo}, {hi}]"
            )));
        }
        Ok(RootScan {
            lo,
            hi,
            grid: 2001,
            tol: 1e-10,
            max_iter: 200,
        })
    }

    pub fn with_grid(mut self, grid: usize) -> Self {
        self.grid = grid.max(2);
        self
    }

    pub fn with_tol(mut self, tol: f64) -> Self {
        self.tol = tol;
        self
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub(crate) fn point(&self, i: usize) -> f64 {
        let n = (self.grid - 1) as f64;
        self.lo + (self.hi - self.lo) * (i as f64) / n
    }
}

/// All roots of `f` on the scan bracket, ascending.
///
/// Sign changes between neighbouring grid points are refined by bisection;
/// exact zeros on the grid are kept; local minima of `|f|` that do not change
/// sign (tangent roots) are refined by golden-section search. Every candidate
/// is accepted only if `|f| < tol` at the refined point, which discards sign
/// changes caused by poles. Points where `f` fails to evaluate are skipped.
pub fn scan_roots<F: Fn(f64) -> Result<f64>>(f: F, scan: &RootScan) -> Result<Vec<f64>> {
    let eval = |x: f64| f(x).ok().filter(|v| v.is_finite());
    let xs: Vec<f64> = (0..scan.grid).map(|i| scan.point(i)).collect();
    let ys: Vec<Option<f64>> = xs.iter().map(|&x| eval(x)).collect();
    let mut roots = Vec::new();

    for i in 0..xs.len() {
        let Some(yi) = ys[i] else { continue };
        if yi == 0.0 {
            roots.push(xs[i]);
            continue;
        }
        if i + 1 < xs.len() {
            if let Some(yj) = ys[i + 1] {
                if yj != 0.0 && yi.signum() != yj.signum() {
                    if let Some(r) = bisect(&eval, xs[i], xs[i + 1], yi, scan) {
                        roots.push(r);
                    }
                    continue;
                }
            }
        }
        // tangent root: interior local minimum of |f| with no sign change
        if i > 0 && i + 1 < xs.len() {
            if let (Some(yl), Some(yr)) = (ys[i - 1], ys[i + 1]) {
                let same_sign = yl.signum() == yi.signum() && yr.signum() == yi.signum();
                if same_sign && yi.abs() < yl.abs() && yi.abs() <= yr.abs() {
                    if let Some(r) = golden_min(&eval, xs[i - 1], xs[i + 1], scan) {
                        roots.push(r);
                    }
                }
            }
        }
    }

    roots.sort_by(|a, b| a.total_cmp(b));
    roots.dedup_by(|a, b| (*a - *b).abs() <= 1e-9 * b.abs().max(1.0));
    if roots.is_empty() {
        return Err(Error::NoRoot {
            lo: scan.lo,
            hi: scan.hi,
        });
    }
    Ok(roots)
}

fn bisect<E: Fn(f64) -> Option<f64>>(eval: &E, mut a: f64, mut b: f64, mut fa: f64, scan: &RootScan) -> Option<f64> {
    let mut best = None;
    for _ in 0..scan.max_iter {
        let m = 0.5 * (a + b);
        if m <= a || m >= b {
            break;
        }
        let fm = eval(m)?;
        best = Some((m, fm));
        if fm == 0.0 {
            break;
        }
        if fm.signum() == fa.signum() {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    let (m, fm) = best?;
    // the endpoint with the smaller residual is the better root
    let candidates = [
        (m, fm.abs()),
        (a, fa.abs()),
        (b, eval(b).map_or(f64::INFINITY, f64::abs)),
    ];
    let (x, r) = candidates.into_iter().min_by(|p, q| p.1.total_cmp(&q.1)).unwrap();
    (r < scan.tol).then_some(x)
}

fn golden_min<E: Fn(f64) -> Option<f64>>(eval: &E, mut a: f64, mut b: f64, scan: &RootScan) -> Option<f64> {
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let g = |x: f64| eval(x).map_or(f64::INFINITY, f64::abs);
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let (mut gc, mut gd) = (g(c), g(d));
    for _ in 0..scan.max_iter {
        if (b - a).abs() <= 1e-15 * a.abs().max(b.abs()).max(1.0) {
            break;
        }
        if gc < gd {
            b = d;
            d = c;
            gd = gc;
            c = b - INV_PHI * (b - a);
            gc = g(c);
        } else {
            a = c;
            c = d;
            gc = gd;
            d = a + INV_PHI * (b - a);
            gd = g(d);
        }
    }
    let (x, r) = if gc < gd { (c, gc) } else { (d, gd) };
    (r < scan.tol).then_some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_simple_roots() {
        let scan = RootScan::new(-5.0, 5.0).unwrap().with_grid(101);
        let roots = scan_roots(|m| Ok(m * (m + 1.0) - 6.0), &scan).unwrap();
        assert_eq!(roots.len(), 2);
        assert!((roots[0] + 3.0).abs() < 1e-12);
        assert!((roots[1] - 2.0).abs() < 1e-12);
    }

    #[test]
    fn finds_tangent_root() {
        let scan = RootScan::new(-1.0, 2.0).unwrap().with_grid(40);
        let roots = scan_roots(|x| Ok((x - 0.3).powi(2)), &scan).unwrap();
        assert_eq!(roots.len(), 1);
        assert!((roots[0] - 0.3).abs() < 1e-5);
    }

    #[test]
    fn rejects_pole_sign_changes() {
        let scan = RootScan::new(-1.0, 1.0).unwrap().with_grid(10);
        let res = scan_roots(|x| Ok(1.0 / (x - 0.05)), &scan);
        assert!(matches!(res, Err(Error::NoRoot { .. })));
    }

    #[test]
    fn bracket_validation() {
        assert!(RootScan::new(1.0, 1.0).is_err());
        assert!(RootScan::new(2.0, 1.0).is_err());
    }
}
