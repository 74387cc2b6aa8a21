use crate::error::{Error, Result};

/// A root together with the value of its defining equation at that root.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootResult {
    pub value: f64,
    pub residual: f64,
}

/// `F₋(Y)`: the real root `x ≥ √3` of `x³ - 3x - 2Y = 0`, for `Y ≥ 0`.
pub fn cubic_root_f(y: f64) -> Result<f64> {
    cubic_root_f_with_residual(y).map(|r| r.value)
}

pub fn cubic_root_f_with_residual(y: f64) -> Result<RootResult> {
    if !(y >= 0.0) || !y.is_finite() {
        return Err(Error::DomainError { function: "cubic_root_f", value: y });
    }
    let mut x = if y < 1.0 {
        2.0 * (y.acos() / 3.0).cos()
    } else {
        let s = (y + (y * y - 1.0).sqrt()).cbrt();
        s + 1.0 / s
    };
    // The derivative 3x² - 3 is at least 6 on the branch.
    for _ in 0..2 {
        let f = x * x * x - 3.0 * x - 2.0 * y;
        x -= f / (3.0 * x * x - 3.0);
    }
    Ok(RootResult { value: x, residual: x * x * x - 3.0 * x - 2.0 * y })
}

/// `G₋(Y)`: the positive root of `4X⁴ - 8X - 3Y = 0`, for `Y ≥ 0`.
pub fn quartic_root_g(y: f64) -> Result<f64> {
    quartic_root_g_with_residual(y).map(|r| r.value)
}

pub fn quartic_root_g_with_residual(y: f64) -> Result<RootResult> {
    if !(y >= 0.0) || !y.is_finite() {
        return Err(Error::DomainError { function: "quartic_root_g", value: y });
    }
    // v(Y) = s - Y/s with s³ = 2 + sqrt(4 + Y³). The difference cancels badly
    // for large Y; (s² - Y)(s⁴ + Y s² + Y²) = s⁶ - Y³ = 4 s³ removes it.
    let t = 2.0 + (4.0 + y * y * y).sqrt();
    let s = t.cbrt();
    let v = 4.0 * t / (s * (s.powi(4) + y * s * s + y * y));
    let mut x = if v.is_finite() && v > 0.0 {
        let sv = v.sqrt();
        0.5 * sv + 0.5 * (4.0 / sv - v).sqrt()
    } else {
        (0.75 * y).powf(0.25) + 0.5
    };
    // 16X³ - 8 ≥ 24 for X ≥ 2^{1/3}.
    for _ in 0..2 {
        let f = 4.0 * x.powi(4) - 8.0 * x - 3.0 * y;
        x -= f / (16.0 * x * x * x - 8.0);
    }
    Ok(RootResult { value: x, residual: 4.0 * x.powi(4) - 8.0 * x - 3.0 * y })
}
