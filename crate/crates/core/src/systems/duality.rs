//! Maps from N-body masses to two-body ones.

use crate::afm::positive_roots;
use crate::error::{Error, Result};
use crate::model::PotentialForm;

/// Which N-body to two-body relation to apply.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DualityKind {
    /// Ground state of pairwise-only systems: `N(N-1)/2 · M²(m′, σ′)`.
    GroundReduction,
    /// Pairwise-only spectrum with a chosen kinetic weight `σ`.
    PairwiseSigma(f64),
    /// Pairwise-only spectrum with a chosen potential weight `g`.
    PairwiseG(f64),
    /// Pairwise Gaussian wells.
    GaussianDual,
    /// One-body plus pairwise linear confinement.
    LinearDual,
}

/// Parameters of the two-body problem an N-body mass maps onto.
///
/// The N-body mass is `multiplier` times the mass of
/// `sigma · sqrt(p² + mass²) + coupling · V̄(range_scale · r)` at quantum number `q`.
/// For [`DualityKind::GaussianDual`] `coupling` rescales the well depth; for
/// [`DualityKind::LinearDual`] the two-body slope is `a + coupling · b`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DualityMap {
    pub kind: DualityKind,
    pub mass: f64,
    pub sigma: f64,
    pub coupling: f64,
    pub range_scale: f64,
    pub q: f64,
    pub multiplier: f64,
}

impl DualityMap {
    pub fn new(kind: DualityKind, n: usize, m: f64, q: f64) -> Result<Self> {
        if n < 2 {
            return Err(Error::TooFewParticles(n));
        }
        let nf = n as f64;
        let pairs = 0.5 * nf * (nf - 1.0);
        let q_star = q / pairs.sqrt();
        let base = DualityMap { kind, mass: m, sigma: 1.0, coupling: 1.0, range_scale: 1.0, q, multiplier: 1.0 };
        let positive = |v: f64, what: &str| {
            if v > 0.0 && v.is_finite() {
                Ok(v)
            } else {
                Err(Error::InvalidCoefficient(format!("{what} {v} must be positive")))
            }
        };
        Ok(match kind {
            DualityKind::GroundReduction => DualityMap {
                mass: m * (nf / (2.0 * (nf - 1.0))).sqrt(),
                sigma: (1.0 / pairs).sqrt() * 2.0,
                multiplier: pairs,
                ..base
            },
            DualityKind::PairwiseSigma(sigma) => {
                let sigma = positive(sigma, "sigma")?;
                DualityMap { sigma, coupling: sigma * (nf - 1.0) / 2.0, q: q_star, multiplier: nf / sigma, ..base }
            }
            DualityKind::PairwiseG(g) => {
                let g = positive(g, "g")?;
                DualityMap { sigma: 2.0 * g / (nf - 1.0), coupling: g, q: q_star, multiplier: pairs / g, ..base }
            }
            DualityKind::GaussianDual => {
                DualityMap { coupling: pairs, range_scale: 1.0 / (nf - 1.0).sqrt(), ..base }
            }
            DualityKind::LinearDual => DualityMap { sigma: nf, coupling: pairs.sqrt(), ..base },
        })
    }

    /// `multiplier · two_body(self)`.
    pub fn apply(&self, two_body: impl FnOnce(&DualityMap) -> Result<f64>) -> Result<f64> {
        Ok(self.multiplier * two_body(self)?)
    }
}

/// N-body mass from a two-body evaluator through the chosen relation.
pub fn duality_map(
    kind: DualityKind,
    n: usize,
    m: f64,
    q: f64,
    two_body: impl FnOnce(&DualityMap) -> Result<f64>,
) -> Result<f64> {
    DualityMap::new(kind, n, m, q)?.apply(two_body)
}

/// Approximate N-body ground state from the ground state `two_body(m′, σ′)` of
/// `σ′ sqrt(p² + m′²) + V̄(r)`.
pub fn twobody_reduction(n: usize, m: f64, two_body: impl FnOnce(f64, f64) -> Result<f64>) -> Result<f64> {
    duality_map(DualityKind::GroundReduction, n, m, 0.0, |map| two_body(map.mass, map.sigma))
}

/// AFM solution of `σ sqrt(p² + m²) + g V̄(r)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoBodySolution {
    pub mass: f64,
    pub mu0: f64,
    pub r0: f64,
}

/// AFM mass of the two-body problem `σ sqrt(p² + m²) + g V̄(r)` with quantum number `q`.
///
/// With `Z = μ² - m²` and `r = q / sqrt(Z)` the field equation reads
/// `Z² = (2g/σ) q² μ K̄(r)`; the lowest-mass root is kept.
pub fn two_body_afm(sigma: f64, g: f64, m: f64, q: f64, pair: &[PotentialForm]) -> Result<TwoBodySolution> {
    if !(sigma > 0.0 && g > 0.0 && q > 0.0) {
        return Err(Error::InvalidCoefficient(format!("sigma {sigma}, g {g} and Q {q} must be positive")));
    }
    if !(m >= 0.0) {
        return Err(Error::SingularMasses);
    }
    if pair.is_empty() {
        return Err(Error::UnsupportedCombination("a pair potential is required".into()));
    }
    let mu = |z: f64| (m * m + z).sqrt();
    let r = |z: f64| q / z.sqrt();
    let k = |z: f64| pair.iter().map(|f| f.tangent_field(r(z))).sum::<f64>();
    let mass = |z: f64| sigma * mu(z) + g * pair.iter().map(|f| f.value(r(z))).sum::<f64>();
    let phi = |z: f64| 2.0 * g / sigma * q * q * mu(z) * k(z) / (z * z) - 1.0;

    let mut best: Option<(f64, f64)> = None;
    for z in positive_roots(phi) {
        let mz = mass(z);
        match best {
            Some((_, bm)) if mz >= bm - 1e-12 * bm.abs() => {}
            _ => best = Some((z, mz)),
        }
    }
    let (z, mass) = best.ok_or(Error::NoPositiveRoot)?;
    Ok(TwoBodySolution { mass, mu0: mu(z), r0: r(z) })
}
