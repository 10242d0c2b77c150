//! Thin wrappers over `libm` so the core builds without `std`.

#[inline]
pub(crate) fn sqrt(x: f64) -> f64 {
    libm::sqrt(x)
}

#[inline]
pub(crate) fn powf(x: f64, y: f64) -> f64 {
    libm::pow(x, y)
}

#[inline]
pub(crate) fn abs(x: f64) -> f64 {
    libm::fabs(x)
}

/// Relative difference scaled by the larger magnitude (and at least `floor`).
#[inline]
pub(crate) fn rel_diff(a: f64, b: f64, floor: f64) -> f64 {
    let scale = abs(a).max(abs(b)).max(floor);
    abs(a - b) / scale
}
