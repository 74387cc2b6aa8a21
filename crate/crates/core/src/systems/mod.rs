//! Closed mass formulas for specific families of systems.

pub mod duality;

use std::f64::consts::{E, PI};

use crate::error::{Error, Result};
use crate::model::{AfmSolution, BoundCharacter, Kinematics};
use crate::special::lambert_w0;

pub use duality::{duality_map, twobody_reduction, two_body_afm, DualityKind, DualityMap, TwoBodySolution};

fn pair_count(n: usize) -> f64 {
    let nf = n as f64;
    0.5 * nf * (nf - 1.0)
}

fn check_n(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::TooFewParticles(n));
    }
    Ok(())
}

/// Ground state of `σ sqrt(p² + m²) - b/r`: `σ m sqrt(1 - b² / (σ² Q_c²))`.
pub fn coulomb_two_body(sigma: f64, m: f64, b: f64, q_c: f64) -> Result<f64> {
    if !(m > 0.0) {
        return Err(Error::SingularMasses);
    }
    let arg = 1.0 - b * b / (sigma * sigma * q_c * q_c);
    if arg < 0.0 {
        return Err(Error::OverCritical(format!("Coulomb coupling {b} exceeds sigma * Q_c = {}", sigma * q_c)));
    }
    Ok(sigma * m * arg.sqrt())
}

/// Ground state of `N` particles bound pairwise by `-b/r`, from the two-body reduction.
///
/// `q_c` is `n + l + 1` of the two-body Coulomb problem, 1 for the ground state,
/// or any improved effective value.
pub fn coulomb_nbody(n: usize, m: f64, b: f64, q_c: f64) -> Result<f64> {
    check_n(n)?;
    if !(m > 0.0) {
        return Err(Error::SingularMasses);
    }
    let nf = n as f64;
    let arg = 1.0 - nf * (nf - 1.0) * b * b / (8.0 * q_c * q_c);
    if arg < 0.0 {
        return Err(Error::OverCritical(format!(
            "Coulomb coupling {b} exceeds the {n}-body critical value {}",
            critical_coupling(n, 2.0 * q_c)
        )));
    }
    Ok(nf * m * arg.sqrt())
}

/// Critical `N`-body Coulomb coupling in terms of the two-body one.
pub fn critical_coupling(n: usize, b2: f64) -> f64 {
    (1.0 / pair_count(n)).sqrt() * b2
}

/// Massless particles with one-body confinement `a r` and pairwise Coulomb `-b/r`.
pub fn baryonic_ur(n: usize, a: f64, b: f64, q: f64) -> Result<AfmSolution> {
    check_n(n)?;
    if !(a > 0.0) {
        return Err(Error::InvalidCoefficient(format!("string tension {a} must be positive")));
    }
    let nf = n as f64;
    let pairs = pair_count(n);
    let arg = q * nf - b * pairs.powf(1.5);
    if !(arg > 0.0) {
        return Err(Error::OverCritical(format!("Coulomb coupling {b} binds {n} massless particles too strongly")));
    }
    let x0 = a / (1.0 - b * (nf - 1.0) / (2.0 * q) * pairs.sqrt());
    let mass = 2.0 * a.sqrt() * arg.sqrt();
    Ok(AfmSolution::from_x0(n, 0.0, q, Kinematics::Semirelativistic, mass, x0, BoundCharacter::UpperBound))
}

/// Which of the three baryon mass formulas to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BaryonVariant {
    /// Plain AFM; an upper bound.
    M0,
    /// Coefficients adjusted to the Gaussian-trial ground state.
    M1,
    /// As `M1`, with radial excitations weighted by `π/2`.
    M2,
}

impl BaryonVariant {
    pub fn bound_character(self) -> BoundCharacter {
        match self {
            BaryonVariant::M0 => BoundCharacter::UpperBound,
            BaryonVariant::M1 | BaryonVariant::M2 => BoundCharacter::Unknown,
        }
    }
}

/// Three massless quarks with a Y-junction string approximated by `λ Σ rᵢ`
/// and a one-gluon exchange `-(2α_S/3) Σ 1/r_ij`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BaryonParams {
    /// String tension, in energy squared.
    pub lambda_string: f64,
    pub alpha_s: f64,
    pub variant: BaryonVariant,
}

impl BaryonParams {
    pub fn new(lambda_string: f64, alpha_s: f64, variant: BaryonVariant) -> Result<Self> {
        if !(lambda_string > 0.0 && lambda_string.is_finite()) {
            return Err(Error::InvalidCoefficient(format!("string tension {lambda_string} must be positive")));
        }
        if !(alpha_s >= 0.0 && alpha_s.is_finite()) {
            return Err(Error::InvalidCoefficient(format!("strong coupling {alpha_s} must be non-negative")));
        }
        Ok(BaryonParams { lambda_string, alpha_s, variant })
    }
}

/// Baryon mass for total radial number `n_tot` and total orbital number `l_tot`.
pub fn baryon_mass(params: &BaryonParams, n_tot: u32, l_tot: u32) -> Result<f64> {
    let BaryonParams { lambda_string: lambda, alpha_s: alpha, variant } = *params;
    let band = 2.0 * n_tot as f64 + l_tot as f64;
    let (scale, arg) = match variant {
        BaryonVariant::M0 => (12.0, band + 3.0 - 2.0 * alpha / 3f64.sqrt()),
        BaryonVariant::M1 => (32.0 / PI, band + 3.0 - 3f64.sqrt() * alpha),
        BaryonVariant::M2 => (32.0 / PI, 0.5 * PI * n_tot as f64 + l_tot as f64 + 3.0 - 3f64.sqrt() * alpha),
    };
    if !(arg > 0.0) {
        return Err(Error::OverCritical(format!("strong coupling {alpha} is too large for {variant:?}")));
    }
    Ok((scale * lambda * arg).sqrt())
}

/// Variational ground state with a single Gaussian trial function.
pub fn baryon_gaussian_ground(lambda_string: f64, alpha_s: f64) -> Result<f64> {
    let arg = 3.0 - 3f64.sqrt() * alpha_s;
    if !(arg > 0.0) {
        return Err(Error::OverCritical(format!("strong coupling {alpha_s} is too large")));
    }
    Ok((32.0 / PI * lambda_string * arg).sqrt())
}

/// `D = [α N - (ᾱ/N) (N(N-1)/2)^{3/2}] / Q`.
pub fn atomic_d(n: usize, alpha: f64, alphabar: f64, q: f64) -> f64 {
    let nf = n as f64;
    (alpha * nf - alphabar / nf * pair_count(n).powf(1.5)) / q
}

/// Whether a nucleus of charge `α` can hold `N` electrons; the mass does not enter.
pub fn atomic_is_stable(n: usize, alpha: f64, alphabar: f64, q: f64) -> bool {
    atomic_d(n, alpha, alphabar, q) < 1.0
}

fn atomic_checked_d(n: usize, m: f64, alpha: f64, alphabar: f64, q: f64) -> Result<f64> {
    check_n(n)?;
    if !(m > 0.0) {
        return Err(Error::SingularMasses);
    }
    let d = atomic_d(n, alpha, alphabar, q);
    if d >= 1.0 {
        return Err(Error::UnstableConfiguration(d));
    }
    if d < 0.0 {
        return Err(Error::NoPositiveRoot);
    }
    Ok(d)
}

/// Semirelativistic particles bound to a fixed centre by `-α/r` and repelling by `ᾱ/r`.
pub fn atomic_mass(n: usize, m: f64, alpha: f64, alphabar: f64, q: f64) -> Result<f64> {
    let d = atomic_checked_d(n, m, alpha, alphabar, q)?;
    Ok(n as f64 * m * (1.0 - d * d).sqrt())
}

/// Nonrelativistic counterpart of [`atomic_mass`], including the rest mass.
pub fn atomic_mass_nonrelativistic(n: usize, m: f64, alpha: f64, alphabar: f64, q: f64) -> Result<f64> {
    let d = atomic_checked_d(n, m, alpha, alphabar, q)?;
    let total = n as f64 * m;
    Ok(total - 0.5 * total * d * d)
}

/// AFM level of `N` nonrelativistic particles in pairwise wells `-α exp(-β² r²)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaussianLevel {
    /// Binding energy, without the rest mass.
    pub energy: f64,
    pub y: f64,
    /// `W₀(y)`.
    pub w: f64,
    /// `g = m α / β²`.
    pub coupling: f64,
    /// Coupling below which this level is unbound.
    pub critical_coupling: f64,
    pub x0: f64,
    pub nu_bar0: f64,
    pub bound_character: BoundCharacter,
}

/// `g_N = 2e Q² / (N (N-1)²)`.
pub fn gaussian_critical_coupling(n: usize, q: f64) -> f64 {
    let nf = n as f64;
    2.0 * E * q * q / (nf * (nf - 1.0) * (nf - 1.0))
}

fn check_gaussian(n: usize, m: f64, alpha: f64, beta: f64, q: f64) -> Result<()> {
    check_n(n)?;
    if !(m > 0.0) {
        return Err(Error::SingularMasses);
    }
    if !(alpha > 0.0 && beta > 0.0 && q > 0.0) {
        return Err(Error::InvalidCoefficient(format!(
            "gaussian depth {alpha}, range {beta} and Q {q} must be positive"
        )));
    }
    Ok(())
}

/// Gaussian AFM level, defined whenever `y ≥ -1/e` even if not bound.
pub fn gaussian_level_unchecked(n: usize, m: f64, alpha: f64, beta: f64, q: f64) -> Result<GaussianLevel> {
    check_gaussian(n, m, alpha, beta, q)?;
    let nf = n as f64;
    let y = -beta * q / ((nf - 1.0) * (2.0 * nf * m * alpha).sqrt());
    let w = lambert_w0(y)?;
    let reduced = -q * q / (nf - 1.0) * (1.0 + 2.0 * w) / (4.0 * w * w);
    Ok(GaussianLevel {
        energy: beta * beta / m * reduced,
        y,
        w,
        coupling: m * alpha / (beta * beta),
        critical_coupling: gaussian_critical_coupling(n, q),
        x0: beta * w.exp() * (2.0 * m * nf * alpha).sqrt(),
        nu_bar0: alpha * beta * beta * (2.0 * w).exp(),
        bound_character: BoundCharacter::UpperBound,
    })
}

/// Bound Gaussian AFM level; `NoBoundState` at or below the critical coupling.
pub fn gaussian_spectrum(n: usize, m: f64, alpha: f64, beta: f64, q: f64) -> Result<GaussianLevel> {
    check_gaussian(n, m, alpha, beta, q)?;
    let coupling = m * alpha / (beta * beta);
    let critical = gaussian_critical_coupling(n, q);
    if !(coupling > critical) {
        return Err(Error::NoBoundState { coupling, critical });
    }
    gaussian_level_unchecked(n, m, alpha, beta, q)
}

/// Massless particles bound pairwise by the funnel `a r - b/r`.
pub fn funnel_nbody_ur(n: usize, a: f64, b: f64, q: f64) -> Result<f64> {
    check_n(n)?;
    if !(a > 0.0) {
        return Err(Error::InvalidCoefficient(format!("string tension {a} must be positive")));
    }
    let nf = n as f64;
    let squared = a * (8.0 * nf * (nf - 1.0)).sqrt() * nf * q - a * b * nf * nf * (nf - 1.0) * (nf - 1.0);
    if !(squared > 0.0) {
        return Err(Error::OverCritical(format!("Coulomb coupling {b} is too strong for the funnel")));
    }
    Ok(squared.sqrt())
}
