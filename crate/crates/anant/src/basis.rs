//! Univariate basis families for Kolmogorov-Arnold edge functions.
//!
//! Every family evaluates all of its basis functions at a point, for
//! derivative orders 0..=3 (order 3 is needed by the reverse pass through a
//! second-derivative chain). The spline family lives on a uniform knot grid
//! and clamps out-of-support inputs to constant extension (zero derivatives).

use crate::error::{AnantError, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BasisKind {
    /// Uniform B-splines of degree `degree` on `grid_size` intervals over
    /// `[lo, hi]`; `grid_size + degree` basis functions.
    Spline {
        degree: usize,
        grid_size: usize,
        lo: f64,
        hi: f64,
    },
    /// Chebyshev polynomials T_0..T_order.
    Chebyshev { order: usize },
    /// cos(m x), sin(m x) for m = 1..=order.
    Fourier { order: usize },
}

impl BasisKind {
    pub fn num_bases(&self) -> usize {
        match *self {
            BasisKind::Spline {
                degree, grid_size, ..
            } => grid_size + degree,
            BasisKind::Chebyshev { order } => order + 1,
            BasisKind::Fourier { order } => 2 * order,
        }
    }

    /// Support interval on which evaluation is well defined. Chebyshev and
    /// Fourier expansions are entire, so the support is unbounded.
    pub fn support(&self) -> (f64, f64) {
        match *self {
            BasisKind::Spline { lo, hi, .. } => (lo, hi),
            _ => (f64::NEG_INFINITY, f64::INFINITY),
        }
    }

    pub fn in_support(&self, x: f64) -> bool {
        let (lo, hi) = self.support();
        x >= lo && x <= hi
    }

    /// Evaluate the `der`-th derivative of every basis function at `x` into
    /// `out` (length `num_bases()`). Spline inputs outside the support are
    /// clamped: values use the boundary value, derivatives are zero.
    pub fn eval_into(&self, x: f64, der: usize, out: &mut [f64]) {
        debug_assert_eq!(out.len(), self.num_bases());
        match *self {
            BasisKind::Spline {
                degree,
                grid_size,
                lo,
                hi,
            } => spline_eval(x, der, degree, grid_size, lo, hi, out),
            BasisKind::Chebyshev { order } => chebyshev_eval(x, der, order, out),
            BasisKind::Fourier { order } => fourier_eval(x, der, order, out),
        }
    }

    pub fn eval(&self, x: f64, der: usize) -> Vec<f64> {
        let mut out = vec![0.0; self.num_bases()];
        self.eval_into(x, der, &mut out);
        out
    }

    pub fn check_support(&self, x: f64) -> Result<()> {
        if self.in_support(x) {
            Ok(())
        } else {
            let (lo, hi) = self.support();
            Err(AnantError::OutOfSupport { value: x, lo, hi })
        }
    }
}

/// Uniform B-spline basis, Cox-de Boor recursion with the knot vector
/// extended `degree` intervals past each end so that the partition of unity
/// holds on all of `[lo, hi]`.
fn spline_eval(x: f64, der: usize, degree: usize, grid_size: usize, lo: f64, hi: f64, out: &mut [f64]) {
    let n_bases = grid_size + degree;
    out[..n_bases].fill(0.0);
    if der > degree {
        return;
    }
    let clamped = x < lo || x > hi;
    if clamped && der > 0 {
        return; // constant extension
    }
    let mut xc = x.clamp(lo, hi);
    // Half-open indicator intervals would drop the right endpoint.
    if xc >= hi {
        xc = f64::from_bits(hi.to_bits() - 1);
    }
    let h = (hi - lo) / grid_size as f64;
    let knot = |i: isize| lo + (i - degree as isize) as f64 * h;
    let n_knots = grid_size + 2 * degree + 1;

    // Degree-0 indicators, then raise the degree. `work[i]` holds B_{i,p}(x).
    let mut work = vec![0.0; n_knots - 1];
    for (i, w) in work.iter_mut().enumerate() {
        let t0 = knot(i as isize);
        let t1 = knot(i as isize + 1);
        *w = if xc >= t0 && xc < t1 { 1.0 } else { 0.0 };
    }
    let value_degree = degree - der;
    for p in 1..=value_degree {
        for i in 0..n_knots - 1 - p {
            let t_i = knot(i as isize);
            let left = (xc - t_i) / (p as f64 * h) * work[i];
            let t_next = knot((i + p + 1) as isize);
            let right = (t_next - xc) / (p as f64 * h) * work[i + 1];
            work[i] = left + right;
        }
    }
    // Derivative steps: B'_{i,p} = (B_{i,p-1} - B_{i+1,p-1}) / h.
    for step in 0..der {
        let p = value_degree + step + 1;
        for i in 0..n_knots - 1 - p {
            work[i] = (work[i] - work[i + 1]) / h;
        }
    }
    out[..n_bases].copy_from_slice(&work[..n_bases]);
}

/// Chebyshev values and derivatives via the differentiated recurrence
/// T_m = 2 x T_{m-1} - T_{m-2}.
fn chebyshev_eval(x: f64, der: usize, order: usize, out: &mut [f64]) {
    let n = order + 1;
    let mut table = vec![[0.0f64; 4]; n]; // table[m][j] = T_m^{(j)}(x)
    for m in 0..n {
        match m {
            0 => table[0][0] = 1.0,
            1 => {
                table[1][0] = x;
                table[1][1] = 1.0;
            }
            _ => {
                let a = table[m - 1];
                let b = table[m - 2];
                for j in 0..4 {
                    let lower = if j > 0 { a[j - 1] } else { 0.0 };
                    table[m][j] = 2.0 * (j as f64 * lower + x * a[j]) - b[j];
                }
            }
        }
    }
    for m in 0..n {
        out[m] = table[m][der.min(3)];
    }
}

/// cos(mx), sin(mx) pairs; the d-th derivative cycles through the quadrature
/// pair with an m^d amplitude.
fn fourier_eval(x: f64, der: usize, order: usize, out: &mut [f64]) {
    let shift = der as f64 * std::f64::consts::FRAC_PI_2;
    for m in 1..=order {
        let mf = m as f64;
        let amp = mf.powi(der as i32);
        out[2 * (m - 1)] = amp * (mf * x + shift).cos();
        out[2 * (m - 1) + 1] = amp * (mf * x + shift).sin();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn fd_derivative(kind: &BasisKind, x: f64, der: usize, h: f64) -> Vec<f64> {
        let hi = kind.eval(x + h, der - 1);
        let lo = kind.eval(x - h, der - 1);
        hi.iter().zip(&lo).map(|(a, b)| (a - b) / (2.0 * h)).collect()
    }

    #[test]
    fn spline_partition_of_unity() {
        for degree in 0..=3 {
            let kind = BasisKind::Spline {
                degree,
                grid_size: 5,
                lo: -1.5,
                hi: 1.5,
            };
            for i in 0..200 {
                let x = -1.499 + 2.998 * (i as f64) / 199.0;
                let sum: f64 = kind.eval(x, 0).iter().sum();
                assert!(
                    (sum - 1.0).abs() < 1e-12,
                    "degree {degree}, x {x}: sum {sum}"
                );
            }
        }
    }

    #[test]
    fn spline_derivatives_match_finite_differences() {
        let kind = BasisKind::Spline {
            degree: 3,
            grid_size: 5,
            lo: -1.5,
            hi: 1.5,
        };
        for &x in &[-1.2, -0.3, 0.01, 0.7, 1.4] {
            for der in 1..=3 {
                let analytic = kind.eval(x, der);
                let numeric = fd_derivative(&kind, x, der, 1e-6);
                for (a, n) in analytic.iter().zip(&numeric) {
                    assert_abs_diff_eq!(a, n, epsilon = 1e-4);
                }
            }
        }
    }

    #[test]
    fn spline_clamps_outside_support() {
        let kind = BasisKind::Spline {
            degree: 2,
            grid_size: 4,
            lo: -1.0,
            hi: 1.0,
        };
        let inside = kind.eval(1.0 - 1e-12, 0);
        let outside = kind.eval(3.0, 0);
        for (a, b) in inside.iter().zip(&outside) {
            assert_abs_diff_eq!(a, b, epsilon = 1e-9);
        }
        assert!(kind.eval(3.0, 1).iter().all(|v| *v == 0.0));
        assert!(kind.check_support(3.0).is_err());
        assert!(kind.check_support(0.5).is_ok());
    }

    #[test]
    fn chebyshev_matches_closed_forms() {
        let kind = BasisKind::Chebyshev { order: 4 };
        for &x in &[-0.9, -0.5, 0.0, 0.3, 0.8] {
            let v = kind.eval(x, 0);
            assert_abs_diff_eq!(v[0], 1.0, epsilon = 1e-15);
            assert_abs_diff_eq!(v[1], x, epsilon = 1e-15);
            assert_abs_diff_eq!(v[2], 2.0 * x * x - 1.0, epsilon = 1e-14);
            assert_abs_diff_eq!(v[3], 4.0 * x.powi(3) - 3.0 * x, epsilon = 1e-14);
            assert_abs_diff_eq!(v[4], 8.0 * x.powi(4) - 8.0 * x * x + 1.0, epsilon = 1e-14);
            let d1 = kind.eval(x, 1);
            assert_abs_diff_eq!(d1[2], 4.0 * x, epsilon = 1e-13);
            assert_abs_diff_eq!(d1[3], 12.0 * x * x - 3.0, epsilon = 1e-13);
            let d2 = kind.eval(x, 2);
            assert_abs_diff_eq!(d2[3], 24.0 * x, epsilon = 1e-13);
        }
    }

    // Spec example: single edge with coefficients (0,0,1) evaluates T_2.
    #[test]
    fn chebyshev_t2_at_half() {
        let kind = BasisKind::Chebyshev { order: 2 };
        let v = kind.eval(0.5, 0);
        assert_abs_diff_eq!(v[2], -0.5, epsilon = 1e-15);
    }

    #[test]
    fn fourier_values_and_derivatives() {
        let kind = BasisKind::Fourier { order: 3 };
        let v = kind.eval(0.0, 0);
        assert_eq!(v.len(), 6);
        assert_abs_diff_eq!(v[0], 1.0, epsilon = 1e-15); // cos(0)
        assert_abs_diff_eq!(v[1], 0.0, epsilon = 1e-15); // sin(0)
        for &x in &[-1.0, 0.4, 2.0] {
            for der in 1..=3 {
                let analytic = kind.eval(x, der);
                let numeric = fd_derivative(&kind, x, der, 1e-6);
                for (a, n) in analytic.iter().zip(&numeric) {
                    assert_abs_diff_eq!(a, n, epsilon = 1e-5);
                }
            }
        }
    }
}
