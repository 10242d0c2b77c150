//! Bracketed scalar root finding.
//!
//! Brent's method: inverse quadratic / secant steps guarded by bisection, so
//! the bracket always shrinks and convergence is guaranteed for continuous
//! functions with a sign change.

use crate::error::{Error, Result};
use crate::math::abs;

/// Convergence controls for [`brent`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootOptions {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_iter: usize,
}

impl Default for RootOptions {
    fn default() -> Self {
        Self {
            abs_tol: 1e-12,
            rel_tol: 1e-12,
            max_iter: 200,
        }
    }
}

/// Finds a root of `f` in `[a, b]`; `f(a)` and `f(b)` must differ in sign
/// (or one of them vanish).
pub fn brent<F>(mut f: F, a: f64, b: f64, opts: &RootOptions) -> Result<f64>
where
    F: FnMut(f64) -> f64,
{
    let fa = f(a);
    let fb = f(b);
    brent_with_values(f, a, b, fa, fb, opts)
}

/// Same as [`brent`] with endpoint values already evaluated.
pub fn brent_with_values<F>(
    mut f: F,
    a: f64,
    b: f64,
    fa: f64,
    fb: f64,
    opts: &RootOptions,
) -> Result<f64>
where
    F: FnMut(f64) -> f64,
{
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    if fa.is_nan() || fb.is_nan() || fa.signum() == fb.signum() {
        return Err(Error::Domain("root bracket has no sign change"));
    }

    let (mut a, mut b, mut fa, mut fb) = (a, b, fa, fb);
    // keep b as the best estimate
    if abs(fa) < abs(fb) {
        core::mem::swap(&mut a, &mut b);
        core::mem::swap(&mut fa, &mut fb);
    }
    let mut c = a;
    let mut fc = fa;
    let mut d = b - a;
    let mut e = d;

    for _ in 0..opts.max_iter {
        if fb.signum() == fc.signum() {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if abs(fc) < abs(fb) {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        let tol = 2.0 * f64::EPSILON * abs(b) + 0.5 * opts.abs_tol.max(opts.rel_tol * abs(b));
        let m = 0.5 * (c - b);
        if abs(m) <= tol || fb == 0.0 {
            return Ok(b);
        }
        if abs(e) >= tol && abs(fa) > abs(fb) {
            let s = fb / fa;
            let (mut p, mut q);
            if a == c {
                p = 2.0 * m * s;
                q = 1.0 - s;
            } else {
                let qa = fa / fc;
                let r = fb / fc;
                p = s * (2.0 * m * qa * (qa - r) - (b - a) * (r - 1.0));
                q = (qa - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if p > 0.0 {
                q = -q;
            } else {
                p = -p;
            }
            if 2.0 * p < (3.0 * m * q - abs(tol * q)).min(abs(e * q)) {
                e = d;
                d = p / q;
            } else {
                d = m;
                e = m;
            }
        } else {
            d = m;
            e = m;
        }
        a = b;
        fa = fb;
        b += if abs(d) > tol {
            d
        } else if m > 0.0 {
            tol
        } else {
            -tol
        };
        fb = f(b);
        if fb.is_nan() {
            return Err(Error::Domain("root function returned NaN"));
        }
    }
    Err(Error::Convergence {
        iterations: opts.max_iter,
    })
}

/// Grows `hi` geometrically from `lo` until `f(lo)` and `f(hi)` differ in sign.
/// Returns `(hi, f(hi))`.
pub fn expand_upward<F>(mut f: F, lo: f64, flo: f64, start: f64, max_steps: usize) -> Result<(f64, f64)>
where
    F: FnMut(f64) -> f64,
{
    let mut hi = start.max(lo * 2.0);
    for _ in 0..max_steps {
        let fhi = f(hi);
        if fhi.signum() != flo.signum() || fhi == 0.0 {
            return Ok((hi, fhi));
        }
        hi *= 2.0;
    }
    Err(Error::Convergence {
        iterations: max_steps,
    })
}
