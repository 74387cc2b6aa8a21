use std::f64::consts::E;

use crate::error::{Error, Result};

/// Principal branch `W₀` of the Lambert function, `W e^W = x`, for `x ≥ -1/e`.
///
/// A branch-point series seeds the region close to `-1/e`, an asymptotic
/// expansion seeds large arguments, and Halley iterations finish the job.
pub fn lambert_w0(x: f64) -> Result<f64> {
    let branch = -1.0 / E;
    if x.is_nan() || x < branch {
        return Err(Error::DomainError { function: "lambert_w0", value: x });
    }
    if x == 0.0 {
        return Ok(0.0);
    }
    if x.is_infinite() {
        return Ok(f64::INFINITY);
    }

    // p = sqrt(2 (e x + 1)), written to limit cancellation near the branch point.
    let p = (2.0 * (E * x + 1.0)).max(0.0).sqrt();
    if p < 1e-3 {
        let w = -1.0 + p * (1.0 + p * (-1.0 / 3.0 + p * (11.0 / 72.0 + p * (-43.0 / 540.0 + p * (769.0 / 17280.0)))));
        return Ok(w.max(-1.0));
    }

    let mut w = if x < -0.25 {
        -1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p * p * p
    } else if x < 3.0 {
        // Padé-style start, good to a few percent on this interval.
        x * (1.0 + 4.0 / 3.0 * x) / (1.0 + x * (7.0 / 3.0 + 5.0 / 6.0 * x))
    } else {
        let l1 = x.ln();
        let l2 = l1.ln();
        l1 - l2 + l2 / l1
    };

    for _ in 0..64 {
        let ew = w.exp();
        let f = w * ew - x;
        let wp1 = w + 1.0;
        let denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1);
        let step = f / denom;
        w -= step;
        if step.abs() <= 4.0 * f64::EPSILON * (1.0 + w.abs()) {
            break;
        }
    }
    Ok(w.max(-1.0))
}
