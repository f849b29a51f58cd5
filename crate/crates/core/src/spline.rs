//! Natural cubic spline on a uniform grid.
//!
//! Twice continuously differentiable, which is what lets the road pipeline
//! hand out analytic velocity and acceleration of a resampled elevation
//! signal. Construction is the O(n) Thomas solve of the tridiagonal moment
//! system with free (natural) end conditions.

use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct CubicSpline {
    x0: f64,
    h: f64,
    y: Vec<f64>,
    /// Second derivatives at the knots.
    m: Vec<f64>,
}

impl CubicSpline {
    /// Fit a natural cubic spline through `y` values at `x0 + i*h`.
    pub fn fit(x0: f64, h: f64, y: &[f64]) -> Result<Self> {
        if !(h > 0.0) || !h.is_finite() {
            return Err(Error::Domain(format!("spline spacing must be > 0, got {h}")));
        }
        if y.len() < 2 {
            return Err(Error::Domain(format!(
                "spline needs at least 2 points, got {}",
                y.len()
            )));
        }
        let n = y.len();
        let mut m = vec![0.0; n];
        if n > 2 {
            // Thomas algorithm on the interior moment equations:
            //   m[i-1] + 4 m[i] + m[i+1] = 6 (y[i-1] - 2 y[i] + y[i+1]) / h^2
            let k = n - 2;
            let mut diag = vec![4.0; k];
            let mut rhs = vec![0.0; k];
            for i in 0..k {
                rhs[i] = 6.0 * (y[i] - 2.0 * y[i + 1] + y[i + 2]) / (h * h);
            }
            for i in 1..k {
                let w = 1.0 / diag[i - 1];
                diag[i] -= w;
                rhs[i] -= w * rhs[i - 1];
            }
            m[k] = rhs[k - 1] / diag[k - 1];
            for i in (0..k.saturating_sub(1)).rev() {
                m[i + 1] = (rhs[i] - m[i + 2]) / diag[i];
            }
        }
        Ok(Self {
            x0,
            h,
            y: y.to_vec(),
            m,
        })
    }

    pub fn x_min(&self) -> f64 {
        self.x0
    }

    pub fn x_max(&self) -> f64 {
        self.x0 + self.h * (self.y.len() - 1) as f64
    }

    /// Locate the knot interval for `x`, clamping float spill at the ends.
    fn segment(&self, x: f64) -> (usize, f64) {
        let t = (x - self.x0) / self.h;
        let i = (t.floor() as isize).clamp(0, self.y.len() as isize - 2) as usize;
        (i, x - (self.x0 + i as f64 * self.h))
    }

    /// Spline value at `x` (must lie within the knot span).
    pub fn value(&self, x: f64) -> f64 {
        let (i, s) = self.segment(x);
        let h = self.h;
        let u = h - s; // distance to the right knot
        let (m0, m1) = (self.m[i], self.m[i + 1]);
        let (y0, y1) = (self.y[i], self.y[i + 1]);
        m0 * u * u * u / (6.0 * h)
            + m1 * s * s * s / (6.0 * h)
            + (y0 / h - m0 * h / 6.0) * u
            + (y1 / h - m1 * h / 6.0) * s
    }

    /// First derivative at `x`.
    pub fn deriv(&self, x: f64) -> f64 {
        let (i, s) = self.segment(x);
        let h = self.h;
        let u = h - s;
        let (m0, m1) = (self.m[i], self.m[i + 1]);
        let (y0, y1) = (self.y[i], self.y[i + 1]);
        -m0 * u * u / (2.0 * h) + m1 * s * s / (2.0 * h) - (y0 / h - m0 * h / 6.0)
            + (y1 / h - m1 * h / 6.0)
    }

    /// Second derivative at `x` (piecewise linear between knot moments).
    pub fn second_deriv(&self, x: f64) -> f64 {
        let (i, s) = self.segment(x);
        let u = self.h - s;
        (self.m[i] * u + self.m[i + 1] * s) / self.h
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn reproduces_straight_line_exactly() {
        let y: Vec<f64> = (0..20).map(|i| 3.0 - 0.7 * i as f64).collect();
        let s = CubicSpline::fit(-2.0, 0.5, &y).unwrap();
        for k in 0..200 {
            let x = -2.0 + 0.0475 * k as f64;
            assert_relative_eq!(s.value(x), 3.0 - 0.7 * (x + 2.0) / 0.5, epsilon = 1e-10);
            assert_relative_eq!(s.deriv(x), -1.4, epsilon = 1e-10);
            assert!(s.second_deriv(x).abs() < 1e-10);
        }
    }

    #[test]
    fn interpolates_sine_with_accurate_derivatives() {
        let h = 0.02;
        let n = 501;
        let w = 2.0 * std::f64::consts::PI * 1.5;
        let y: Vec<f64> = (0..n).map(|i| (w * i as f64 * h).sin()).collect();
        let s = CubicSpline::fit(0.0, h, &y).unwrap();
        // check away from the free ends
        for k in 100..400 {
            let x = k as f64 * h + 0.31 * h;
            assert_relative_eq!(s.value(x), (w * x).sin(), epsilon = 1e-5);
            assert_relative_eq!(s.deriv(x), w * (w * x).cos(), epsilon = w * 1e-3);
            assert_relative_eq!(
                s.second_deriv(x),
                -w * w * (w * x).sin(),
                epsilon = w * w * 2e-2
            );
        }
    }

    #[test]
    fn second_derivative_is_continuous_at_knots() {
        let y: Vec<f64> = (0..50).map(|i| ((i * i) % 17) as f64).collect();
        let s = CubicSpline::fit(0.0, 1.0, &y).unwrap();
        for i in 1..49 {
            let x = i as f64;
            let left = s.second_deriv(x - 1e-9);
            let right = s.second_deriv(x + 1e-9);
            assert!((left - right).abs() < 1e-6);
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(CubicSpline::fit(0.0, 0.0, &[1.0, 2.0]).is_err());
        assert!(CubicSpline::fit(0.0, 1.0, &[1.0]).is_err());
    }
}
