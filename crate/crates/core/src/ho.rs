//! Exact N-body harmonic oscillators.
//!
//! The nonrelativistic problem with arbitrary masses, one-body springs `k_i`
//! toward the centre of mass and pairwise springs `k̄_ij` separates in
//! renormalised Jacobi coordinates into `N - 1` decoupled oscillators whose
//! frequencies come from the eigenvalues of the matrix `J = F + G`. The
//! semirelativistic identical-particle oscillator is handled with a single
//! kinetic auxiliary field.

use crate::error::{Error, Result};
use crate::model::{AfmSolution, BoundCharacter, Kinematics, Masses, SystemSpec};
use crate::special::{quartic_root_g, symmetric_eigen, Matrix};

/// Jacobi-coordinate machinery for one set of masses and spring constants.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadraticForm {
    /// `x = U r`; the last row is the centre of mass.
    pub u: Matrix,
    /// `U⁻¹`.
    pub b: Matrix,
    /// Renormalisation factors of the `N - 1` internal coordinates.
    pub lambda: Vec<f64>,
    /// One-body part of the potential in renormalised coordinates.
    pub f: Matrix,
    /// Pairwise part of the potential in renormalised coordinates.
    pub g: Matrix,
    /// `F + G`.
    pub j: Matrix,
    pub reference_mass: f64,
}

/// Mode frequencies and total energy of one oscillator state.
#[derive(Debug, Clone, PartialEq)]
pub struct HoSpectrumEntry {
    /// Ascending.
    pub omegas: Vec<f64>,
    pub energy: f64,
}

/// Masses and spring constants of a general nonrelativistic oscillator system.
#[derive(Debug, Clone, PartialEq)]
pub struct HarmonicSystem {
    pub masses: Vec<f64>,
    /// One-body constants, one per particle.
    pub k: Vec<f64>,
    /// Pairwise constants; only the strict upper triangle is read.
    pub kbar: Matrix,
}

impl HarmonicSystem {
    pub fn new(masses: Vec<f64>, k: Vec<f64>, kbar: Matrix) -> Self {
        HarmonicSystem { masses, k, kbar }
    }

    /// Identical constants for every particle and every pair.
    pub fn uniform(masses: Vec<f64>, k: f64, kbar: f64) -> Self {
        let n = masses.len();
        HarmonicSystem {
            masses,
            k: vec![k; n],
            kbar: Matrix::from_fn(n, n, |i, j| if i == j { 0.0 } else { kbar }),
        }
    }

    /// Reads a nonrelativistic system whose terms are all quadratic.
    pub fn from_spec(spec: &SystemSpec) -> Result<Self> {
        spec.validate()?;
        if spec.kinematics != Kinematics::Nonrelativistic {
            return Err(Error::UnsupportedCombination(
                "exact oscillator spectra need nonrelativistic kinematics".into(),
            ));
        }
        let mut k = 0.0;
        let mut kbar = 0.0;
        for term in spec.terms() {
            if !term.form.is_quadratic() {
                return Err(Error::UnsupportedForm("only quadratic terms are exactly solvable".into()));
            }
            let crate::model::PotentialForm::PowerLaw { coefficient, .. } = term.form else {
                unreachable!()
            };
            match term.scope {
                crate::model::Scope::OneBody => k += coefficient,
                crate::model::Scope::Pairwise => kbar += coefficient,
            }
        }
        let masses = match &spec.masses {
            Masses::Identical(m) => vec![*m; spec.n],
            Masses::PerParticle(ms) => ms.clone(),
        };
        Ok(Self::uniform(masses, k, kbar))
    }

    pub fn n(&self) -> usize {
        self.masses.len()
    }

    /// Builds the Jacobi matrices; the reference mass defaults to the first particle's.
    pub fn quadratic_form(&self, reference_mass: Option<f64>) -> Result<QuadraticForm> {
        build_quadratic_form(&self.masses, &self.k, &self.kbar, reference_mass)
    }

    /// Energy of the state with the given mode numbers.
    ///
    /// Frequencies are sorted ascending and paired with `modes` in order,
    /// so `modes[0]` labels the softest oscillator.
    pub fn energies(&self, modes: &[(u32, u32)], reference_mass: Option<f64>) -> Result<HoSpectrumEntry> {
        ho_energies_general(self, modes, reference_mass)
    }
}

/// Jacobi transform, its inverse and the `F`, `G`, `J` matrices.
pub fn build_quadratic_form(
    masses: &[f64],
    k: &[f64],
    kbar: &Matrix,
    reference_mass: Option<f64>,
) -> Result<QuadraticForm> {
    let n = masses.len();
    if n < 2 {
        return Err(Error::TooFewParticles(n));
    }
    if k.len() != n || kbar.rows() != n || kbar.cols() != n {
        return Err(Error::DimensionMismatch(format!(
            "{n} masses need {n} one-body constants and an {n}x{n} pair matrix"
        )));
    }
    if masses.iter().any(|m| !(*m > 0.0) || !m.is_finite()) {
        return Err(Error::SingularMasses);
    }
    let pair_constants = || (0..n).flat_map(|i| ((i + 1)..n).map(move |j| (i, j)));
    if k.iter().any(|v| *v < 0.0) || pair_constants().any(|(i, j)| kbar[(i, j)] < 0.0) {
        return Err(Error::InvalidCoefficient("spring constants must be non-negative".into()));
    }
    if k.iter().all(|v| *v == 0.0) && pair_constants().all(|(i, j)| kbar[(i, j)] == 0.0) {
        return Err(Error::NoRestoringForce(0.0));
    }
    let reference_mass = reference_mass.unwrap_or(masses[0]);
    if !(reference_mass > 0.0) {
        return Err(Error::SingularMasses);
    }

    let alpha: Vec<f64> = masses.iter().map(|m| m / reference_mass).collect();
    let cumulative: Vec<f64> = alpha
        .iter()
        .scan(0.0, |acc, a| {
            *acc += a;
            Some(*acc)
        })
        .collect();

    let u = Matrix::from_fn(n, n, |i, j| {
        if i == n - 1 || j <= i {
            alpha[j] / cumulative[i]
        } else if j == i + 1 {
            -1.0
        } else {
            0.0
        }
    });
    let b = Matrix::from_fn(n, n, |row, col| {
        if col == n - 1 {
            1.0
        } else if row <= col {
            alpha[col + 1] / cumulative[col + 1]
        } else if row == col + 1 {
            -cumulative[col] / cumulative[col + 1]
        } else {
            0.0
        }
    });
    let lambda: Vec<f64> = (0..n - 1)
        .map(|i| (cumulative[i + 1] / (alpha[i + 1] * cumulative[i])).sqrt())
        .collect();

    let d = n - 1;
    let f = Matrix::from_fn(d, d, |l, m| {
        lambda[l] * lambda[m] * (0..n).map(|i| k[i] * b[(i, l)] * b[(i, m)]).sum::<f64>()
    });
    let g = Matrix::from_fn(d, d, |l, m| {
        lambda[l]
            * lambda[m]
            * pair_constants()
                .map(|(i, j)| kbar[(i, j)] * (b[(i, l)] - b[(j, l)]) * (b[(i, m)] - b[(j, m)]))
                .sum::<f64>()
    });
    let j = Matrix::from_fn(d, d, |l, m| f[(l, m)] + g[(l, m)]);

    Ok(QuadraticForm { u, b, lambda, f, g, j, reference_mass })
}

/// Exact oscillator energy from the eigenvalues of `J`.
pub fn ho_energies_general(
    system: &HarmonicSystem,
    modes: &[(u32, u32)],
    reference_mass: Option<f64>,
) -> Result<HoSpectrumEntry> {
    let n = system.n();
    if modes.len() + 1 != n {
        return Err(Error::WrongModeCount { expected: n.saturating_sub(1), found: modes.len() });
    }
    let form = system.quadratic_form(reference_mass)?;
    let eigen = symmetric_eigen(&form.j)?;
    let omegas: Vec<f64> = eigen
        .values
        .iter()
        .map(|d| (2.0 * d.max(0.0) / form.reference_mass).sqrt())
        .collect();
    let energy = omegas
        .iter()
        .zip(modes)
        .map(|(w, &(nr, l))| w * (2.0 * nr as f64 + l as f64 + 1.5))
        .sum();
    Ok(HoSpectrumEntry { omegas, energy })
}

/// Closed-form three-body oscillator energy.
///
/// `kbar` holds `(k̄₁₂, k̄₁₃, k̄₂₃)`. The higher frequency goes with
/// `modes[0]`, the lower with `modes[1]`.
pub fn ho_energy_3body_closed(
    masses: [f64; 3],
    k: [f64; 3],
    kbar: [f64; 3],
    modes: [(u32, u32); 2],
) -> Result<f64> {
    ho_energy_3body_closed_with_reference(masses, k, kbar, modes, masses[0])
}

pub fn ho_energy_3body_closed_with_reference(
    masses: [f64; 3],
    k: [f64; 3],
    kbar: [f64; 3],
    modes: [(u32, u32); 2],
    reference_mass: f64,
) -> Result<f64> {
    if masses.iter().any(|m| !(*m > 0.0)) || !(reference_mass > 0.0) {
        return Err(Error::SingularMasses);
    }
    let m = reference_mass;
    let [a1, a2, a3] = masses.map(|mi| mi / m);
    let (a12, a13, a23) = (a1 + a2, a1 + a3, a2 + a3);
    let a = a1 + a2 + a3;
    let [k1, k2, k3] = k;
    let (k12, k13, k23) = (k1 + k2, k1 + k3, k2 + k3);
    let [kb12, kb13, kb23] = kbar;

    let s = k1 * a2 * a3 * a23
        + k2 * a1 * a3 * a13
        + k3 * a1 * a2 * a12
        + a * (kb12 * a3 * a12 + kb13 * a2 * a13 + kb23 * a1 * a23);
    let r = k1 * k2 * a3 * a3
        + k1 * k3 * a2 * a2
        + k2 * k3 * a1 * a1
        + a * a * (kb12 * kb13 + kb13 * kb23 + kb12 * kb23)
        + kb12 * (k12 * a3 * a3 + k3 * a12 * a12)
        + kb13 * (k13 * a2 * a2 + k2 * a13 * a13)
        + kb23 * (k23 * a1 * a1 + k1 * a23 * a23);
    let product = a1 * a2 * a3 * a;
    let disc = s * s - 4.0 * product * r;
    let delta = if disc >= 0.0 {
        disc.sqrt()
    } else if disc >= -1e-12 * s * s {
        0.0
    } else {
        return Err(Error::NegativeDiscriminant(disc));
    };
    let quanta = |(nr, l): (u32, u32)| 2.0 * nr as f64 + l as f64 + 1.5;
    let prefactor = (1.0 / (m * product)).sqrt();
    Ok(prefactor * ((s + delta).sqrt() * quanta(modes[0]) + (s - delta).max(0.0).sqrt() * quanta(modes[1])))
}

/// `sqrt(2 (k + N k̄) / m) · Q` for identical particles.
pub fn ho_energy_identical(n: usize, m: f64, k: f64, kbar: f64, q: f64) -> Result<f64> {
    let stiffness = k + n as f64 * kbar;
    if !(stiffness > 0.0) {
        return Err(Error::NoRestoringForce(stiffness));
    }
    if !(m > 0.0) {
        return Err(Error::SingularMasses);
    }
    Ok((2.0 * stiffness / m).sqrt() * q)
}

/// Spatial symmetry used to pick the ground-state principal number.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Symmetry {
    Symmetric,
    /// Fermions stacked up to a full Fermi band, `degeneracy` per orbital.
    AntisymmetricClosedShell { degeneracy: u32 },
}

/// Principal number `Q` of the lowest state of the given symmetry.
pub fn ground_state_q(n: usize, symmetry: Symmetry) -> Result<f64> {
    if n < 2 {
        return Err(Error::TooFewParticles(n));
    }
    let modes = (n - 1) as u128;
    match symmetry {
        Symmetry::Symmetric => Ok(1.5 * (n - 1) as f64),
        Symmetry::AntisymmetricClosedShell { degeneracy } => {
            if degeneracy == 0 {
                return Err(Error::NotClosedShell(n - 1, degeneracy));
            }
            let d = degeneracy as u128;
            let capacity = |b: u128| d * (b + 1) * (b + 2) * (b + 3) / 6;
            let mut fermi = 0u128;
            while capacity(fermi) < modes {
                fermi += 1;
            }
            if capacity(fermi) != modes {
                return Err(Error::NotClosedShell(n - 1, degeneracy));
            }
            Ok(0.75 * (n - 1) as f64 * (fermi as f64 + 2.0))
        }
    }
}

/// Semirelativistic identical-particle oscillator, optimised over one kinetic field.
///
/// The result is an upper bound of the exact eigenvalue.
pub fn srho_mass(n: usize, m: f64, k: f64, kbar: f64, q: f64) -> Result<AfmSolution> {
    let nf = n as f64;
    let stiffness = k + nf * kbar;
    if !(stiffness > 0.0) {
        return Err(Error::NoRestoringForce(stiffness));
    }
    if !(m >= 0.0) {
        return Err(Error::SingularMasses);
    }
    let (mass, x0) = if m == 0.0 {
        let mass = 1.5 * (2.0 * nf * stiffness * q * q).cbrt();
        let x0 = (2.0 * stiffness * (q / nf).sqrt()).powf(2.0 / 3.0);
        (mass, x0)
    } else {
        let y = 4.0 * m * m / 3.0 * (2.0 * nf * nf / (stiffness * q * q)).powf(2.0 / 3.0);
        let g = quartic_root_g(y)?;
        let scale = 2.0 / (3.0 * y).sqrt();
        let mu0 = scale * m * g * g;
        let mass = scale * nf * m * (1.0 / g + g * g);
        (mass, (2.0 * mu0 * stiffness).sqrt())
    };
    Ok(AfmSolution::from_x0(n, m, q, Kinematics::Semirelativistic, mass, x0, BoundCharacter::UpperBound))
}
