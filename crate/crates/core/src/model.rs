//! Shared data model: systems, potential terms, quantum numbers and
//! auxiliary-field solutions.
//!
//! All energies, masses and lengths are carried in one caller-chosen unit
//! system (for instance GeV and GeV⁻¹); nothing here converts units.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kinematics {
    /// `p²/2m` kinetic energy; the kinetic auxiliary field is pinned to `m`.
    Nonrelativistic,
    /// `sqrt(p² + m²)` kinetic energy. A zero mass gives the ultrarelativistic limit.
    Semirelativistic,
}

impl Kinematics {
    pub fn name(self) -> &'static str {
        match self {
            Kinematics::Nonrelativistic => "nonrelativistic",
            Kinematics::Semirelativistic => "semirelativistic",
        }
    }
}

impl fmt::Display for Kinematics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Scope {
    /// Depends on the distance of a particle to the centre of mass.
    OneBody,
    /// Depends on the distance between two particles.
    Pairwise,
}

/// Sign of the second derivative of `g` when the potential is written `V(r) = g(r²)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Convexity {
    Concave,
    /// `g` is linear: the potential is exactly quadratic in `r`.
    Linear,
    Convex,
}

/// Radial shape of one potential term.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PotentialForm {
    /// `coefficient · sgn(exponent) · r^exponent`, so a positive coefficient
    /// is always attractive in the sense of a rising potential.
    PowerLaw { coefficient: f64, exponent: f64 },
    /// `-depth · exp(-range² r²)`.
    Gaussian { depth: f64, range: f64 },
}

impl PotentialForm {
    pub fn power(coefficient: f64, exponent: f64) -> Self {
        PotentialForm::PowerLaw { coefficient, exponent }
    }

    pub fn gaussian(depth: f64, range: f64) -> Self {
        PotentialForm::Gaussian { depth, range }
    }

    /// Potential energy at distance `r`.
    pub fn value(&self, r: f64) -> f64 {
        match *self {
            PotentialForm::PowerLaw { coefficient, exponent } => {
                coefficient * exponent.signum() * r.powf(exponent)
            }
            PotentialForm::Gaussian { depth, range } => -depth * (-(range * r).powi(2)).exp(),
        }
    }

    /// `V'(r) / (2r)`, the auxiliary field for which `ν r²` is tangent to `V` at `r`.
    pub fn tangent_field(&self, r: f64) -> f64 {
        match *self {
            PotentialForm::PowerLaw { coefficient, exponent } => {
                0.5 * coefficient * exponent.abs() * r.powf(exponent - 2.0)
            }
            PotentialForm::Gaussian { depth, range } => {
                depth * range * range * (-(range * r).powi(2)).exp()
            }
        }
    }

    pub fn convexity(&self) -> Convexity {
        match *self {
            PotentialForm::PowerLaw { coefficient, exponent } => {
                if exponent == 2.0 || coefficient == 0.0 {
                    Convexity::Linear
                } else if (coefficient > 0.0) == (exponent < 2.0) {
                    Convexity::Concave
                } else {
                    Convexity::Convex
                }
            }
            PotentialForm::Gaussian { .. } => Convexity::Concave,
        }
    }

    pub fn is_quadratic(&self) -> bool {
        matches!(*self, PotentialForm::PowerLaw { exponent, .. } if exponent == 2.0)
    }

    pub fn exponent(&self) -> Option<f64> {
        match *self {
            PotentialForm::PowerLaw { exponent, .. } => Some(exponent),
            PotentialForm::Gaussian { .. } => None,
        }
    }

    fn coefficient(&self) -> f64 {
        match *self {
            PotentialForm::PowerLaw { coefficient, .. } => coefficient,
            PotentialForm::Gaussian { depth, .. } => depth,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PotentialTerm {
    pub scope: Scope,
    pub form: PotentialForm,
}

impl PotentialTerm {
    pub fn one_body(form: PotentialForm) -> Self {
        PotentialTerm { scope: Scope::OneBody, form }
    }

    pub fn pairwise(form: PotentialForm) -> Self {
        PotentialTerm { scope: Scope::Pairwise, form }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Masses {
    Identical(f64),
    /// Distinct masses; only the exact harmonic-oscillator routines accept these.
    PerParticle(Vec<f64>),
}

/// The problem statement: particles, kinematics and interactions.
#[derive(Debug, Clone, PartialEq)]
pub struct SystemSpec {
    pub n: usize,
    pub masses: Masses,
    pub kinematics: Kinematics,
    pub one_body: Vec<PotentialTerm>,
    pub pairwise: Vec<PotentialTerm>,
}

impl SystemSpec {
    /// `n` identical particles of mass `mass`, no interactions yet.
    pub fn identical(n: usize, mass: f64, kinematics: Kinematics) -> Self {
        SystemSpec {
            n,
            masses: Masses::Identical(mass),
            kinematics,
            one_body: Vec::new(),
            pairwise: Vec::new(),
        }
    }

    pub fn with_one_body(mut self, form: PotentialForm) -> Self {
        self.one_body.push(PotentialTerm::one_body(form));
        self
    }

    pub fn with_pairwise(mut self, form: PotentialForm) -> Self {
        self.pairwise.push(PotentialTerm::pairwise(form));
        self
    }

    /// The common particle mass, or `NonIdenticalMasses`.
    pub fn identical_mass(&self) -> Result<f64> {
        match self.masses {
            Masses::Identical(m) => Ok(m),
            Masses::PerParticle(_) => Err(Error::NonIdenticalMasses),
        }
    }

    pub fn total_mass(&self) -> f64 {
        match &self.masses {
            Masses::Identical(m) => self.n as f64 * m,
            Masses::PerParticle(ms) => ms.iter().sum(),
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = &PotentialTerm> {
        self.one_body.iter().chain(self.pairwise.iter())
    }

    pub fn one_body_potential(&self, r: f64) -> f64 {
        self.one_body.iter().map(|t| t.form.value(r)).sum()
    }

    pub fn pair_potential(&self, r: f64) -> f64 {
        self.pairwise.iter().map(|t| t.form.value(r)).sum()
    }

    /// Checks every invariant of the system description.
    pub fn validate(&self) -> Result<()> {
        if self.n < 2 {
            return Err(Error::TooFewParticles(self.n));
        }
        match &self.masses {
            Masses::Identical(m) => {
                if !m.is_finite() || *m < 0.0 {
                    return Err(Error::SingularMasses);
                }
                if *m == 0.0 && self.kinematics == Kinematics::Nonrelativistic {
                    return Err(Error::ZeroMassNonrelativistic);
                }
            }
            Masses::PerParticle(ms) => {
                if ms.len() != self.n {
                    return Err(Error::DimensionMismatch(format!(
                        "{} masses for {} particles",
                        ms.len(),
                        self.n
                    )));
                }
                if ms.iter().any(|m| !m.is_finite() || *m <= 0.0) {
                    return Err(Error::SingularMasses);
                }
            }
        }

        for (list, scope) in [(&self.one_body, Scope::OneBody), (&self.pairwise, Scope::Pairwise)] {
            for term in list.iter() {
                if term.scope != scope {
                    return Err(Error::UnsupportedCombination(format!(
                        "{:?} term listed among {:?} terms",
                        term.scope, scope
                    )));
                }
                self.validate_term(term)?;
            }
        }

        let coefficients: Vec<f64> = self.terms().map(|t| t.form.coefficient()).collect();
        match coefficients.len() {
            0 => {
                return Err(Error::UnsupportedCombination(
                    "at least one potential term is required".into(),
                ))
            }
            1 if coefficients[0] <= 0.0 => {
                return Err(Error::InvalidCoefficient(format!(
                    "a lone potential term needs a positive coefficient, got {}",
                    coefficients[0]
                )))
            }
            _ if coefficients.iter().all(|c| *c <= 0.0) => {
                return Err(Error::InvalidCoefficient(
                    "at least one coefficient must be positive".into(),
                ))
            }
            _ => {}
        }
        Ok(())
    }

    fn validate_term(&self, term: &PotentialTerm) -> Result<()> {
        match term.form {
            PotentialForm::PowerLaw { coefficient, exponent } => {
                if !coefficient.is_finite() {
                    return Err(Error::InvalidCoefficient(format!("{coefficient}")));
                }
                let admissible = exponent.is_finite()
                    && exponent != 0.0
                    && match self.kinematics {
                        Kinematics::Semirelativistic => exponent >= -1.0,
                        Kinematics::Nonrelativistic => exponent > -2.0,
                    };
                if !admissible {
                    return Err(Error::InvalidExponent {
                        exponent,
                        kinematics: self.kinematics.name(),
                    });
                }
            }
            PotentialForm::Gaussian { depth, range } => {
                if term.scope != Scope::Pairwise || self.kinematics != Kinematics::Nonrelativistic {
                    return Err(Error::UnsupportedForm(
                        "gaussian terms are pairwise and nonrelativistic only".into(),
                    ));
                }
                if !(depth > 0.0 && range > 0.0 && depth.is_finite() && range.is_finite()) {
                    return Err(Error::InvalidCoefficient(format!(
                        "gaussian depth {depth} and range {range} must be positive"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Radial and orbital quantum numbers of the `N - 1` internal oscillator modes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuantumNumbers {
    pub modes: Vec<(u32, u32)>,
}

impl QuantumNumbers {
    pub fn new(modes: Vec<(u32, u32)>) -> Self {
        QuantumNumbers { modes }
    }

    /// All modes in their lowest state for an `n`-body system.
    pub fn ground(n: usize) -> Self {
        QuantumNumbers { modes: vec![(0, 0); n.saturating_sub(1)] }
    }

    /// Band number `B = Σ (2 n_i + l_i)`.
    pub fn band(&self) -> u32 {
        self.modes.iter().map(|&(n, l)| 2 * n + l).sum()
    }

    /// Principal number `Q = B + 3 (N - 1) / 2`.
    pub fn principal(&self) -> f64 {
        self.band() as f64 + 1.5 * self.modes.len() as f64
    }
}

/// Checks a system together with the state it is asked about.
pub fn validate(spec: &SystemSpec, q: &QuantumNumbers) -> Result<()> {
    spec.validate()?;
    if q.modes.len() != spec.n - 1 {
        return Err(Error::WrongModeCount { expected: spec.n - 1, found: q.modes.len() });
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoundCharacter {
    UpperBound,
    LowerBound,
    /// Upper and lower bound coincide: every potential term is quadratic and
    /// the kinematics is nonrelativistic.
    Exact,
    Unknown,
}

/// Full output of one auxiliary-field calculation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AfmSolution {
    pub mass: f64,
    /// `sqrt(2 μ₀ (ν₀ + N ν̄₀))`.
    pub x0: f64,
    /// Optimal kinetic field; the particle mass for nonrelativistic kinematics.
    pub mu0: f64,
    pub r0_one: f64,
    pub r0_pair: f64,
    pub bound_character: BoundCharacter,
}

impl AfmSolution {
    /// Fills the derived fields from `X₀`.
    pub(crate) fn from_x0(
        n: usize,
        m: f64,
        q: f64,
        kinematics: Kinematics,
        mass: f64,
        x0: f64,
        bound_character: BoundCharacter,
    ) -> Self {
        let nf = n as f64;
        let mu0 = match kinematics {
            Kinematics::Semirelativistic => (m * m + q * x0 / nf).sqrt(),
            Kinematics::Nonrelativistic => m,
        };
        AfmSolution {
            mass,
            x0,
            mu0,
            r0_one: (q / (nf * x0)).sqrt(),
            r0_pair: (2.0 * q / ((nf - 1.0) * x0)).sqrt(),
            bound_character,
        }
    }
}
