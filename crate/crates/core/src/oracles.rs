//! Independent numerical checks of the closed mass formulas.
//!
//! [`numeric_afm_minimize`] extremizes the three-field mass function directly,
//! without the reduction to a single equation in `X`. [`gaussian_trial_bound`]
//! is a genuine variational upper bound from the trial family
//! `exp(-κ Σ r_ij²)`.

use std::cell::Cell;

use crate::afm::afm_mass;
use crate::error::{Error, Result};
use crate::model::{validate, Convexity, Kinematics, PotentialForm, PotentialTerm, QuantumNumbers, SystemSpec};

/// Outcome of comparing a closed formula with an oracle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Match,
    Violation,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleReport {
    pub closed_form: f64,
    pub oracle_value: f64,
    pub relative_gap: f64,
    pub verdict: Verdict,
}

impl OracleReport {
    /// `Match` when the two values agree to `tolerance` relative.
    pub fn agreement(closed_form: f64, oracle_value: f64, tolerance: f64) -> Self {
        let relative_gap = relative_gap(closed_form, oracle_value);
        let verdict = if relative_gap <= tolerance { Verdict::Match } else { Verdict::Violation };
        OracleReport { closed_form, oracle_value, relative_gap, verdict }
    }

    /// `Match` when the oracle value does not exceed the closed form.
    pub fn ordering(closed_form: f64, oracle_value: f64) -> Self {
        let relative_gap = relative_gap(closed_form, oracle_value);
        let slack = 1e-12 * closed_form.abs().max(oracle_value.abs());
        let verdict = if oracle_value <= closed_form + slack { Verdict::Match } else { Verdict::Violation };
        OracleReport { closed_form, oracle_value, relative_gap, verdict }
    }

    pub fn is_match(&self) -> bool {
        self.verdict == Verdict::Match
    }
}

fn relative_gap(a: f64, b: f64) -> f64 {
    if a == b {
        0.0
    } else {
        (a - b).abs() / a.abs().max(b.abs())
    }
}

/// Evaluation budget of [`numeric_afm_minimize`].
pub const EVALUATION_BUDGET: usize = 100_000;

const LN_LO: f64 = -18.420_680_743_952_367; // ln 1e-8
const LN_HI: f64 = 18.420_680_743_952_367; // ln 1e8
const SCAN_POINTS: usize = 17;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Sense {
    Min,
    Max,
}

/// One scope's potential terms, with its auxiliary field parametrised by the tangency radius.
struct ScopeField<'a> {
    terms: &'a [PotentialTerm],
    count: f64,
    weight: f64,
}

impl ScopeField<'_> {
    fn field(&self, rho: f64) -> f64 {
        self.terms.iter().map(|t| t.form.tangent_field(rho)).sum()
    }

    /// `V(ρ) - K(ρ) ρ²`.
    fn offset(&self, rho: f64) -> f64 {
        self.terms.iter().map(|t| t.form.value(rho) - t.form.tangent_field(rho) * rho * rho).sum()
    }

    fn is_fixed(&self) -> bool {
        self.terms.iter().all(|t| t.form.is_quadratic())
    }

    fn sense(&self) -> Result<Sense> {
        let mut sense = None;
        for term in self.terms {
            let s = match term.form.convexity() {
                Convexity::Linear => continue,
                Convexity::Concave => Sense::Min,
                Convexity::Convex => Sense::Max,
            };
            match sense {
                Some(prev) if prev != s => {
                    return Err(Error::UnsupportedCombination(
                        "terms of one scope must share their convexity".into(),
                    ))
                }
                _ => sense = Some(s),
            }
        }
        Ok(sense.unwrap_or(Sense::Min))
    }
}

struct Budget {
    used: Cell<usize>,
}

impl Budget {
    fn tick(&self) -> Result<()> {
        let used = self.used.get() + 1;
        self.used.set(used);
        if used > EVALUATION_BUDGET {
            return Err(Error::NonConvergence(used));
        }
        Ok(())
    }
}

/// Direct extremization of the AFM mass function `M(μ, ν, ν̄)`.
///
/// Each potential field is written as the tangent field at a radius `ρ`, so
/// that `V(I(ν)) - ν I(ν)² = V(ρ) - K(ρ) ρ²` needs no inverse. Fields of
/// concave scopes are minimized in the outer searches, those of convex
/// scopes maximized inside them, and the kinetic field is minimized
/// innermost; for nonrelativistic kinematics it is pinned to `m`. Every radius search scans 17 logarithmic
/// points on `[1e-8, 1e8]` and refines the best one with Brent's method to a
/// relative mass tolerance `tolerance`. An optimum on the edge of the domain is
/// reported as `NonConvergence`, as is exhaustion of the evaluation budget.
pub fn numeric_afm_minimize(spec: &SystemSpec, q: &QuantumNumbers, tolerance: f64) -> Result<f64> {
    validate(spec, q)?;
    let m = spec.identical_mass()?;
    let nf = spec.n as f64;
    let qv = q.principal();
    let scopes = [
        ScopeField { terms: &spec.one_body, count: nf, weight: 1.0 },
        ScopeField { terms: &spec.pairwise, count: 0.5 * nf * (nf - 1.0), weight: nf },
    ];
    let mut dims: Vec<(usize, Sense)> = Vec::new();
    for (i, scope) in scopes.iter().enumerate() {
        if !scope.terms.is_empty() && !scope.is_fixed() {
            dims.push((i, scope.sense()?));
        }
    }
    dims.sort_by_key(|(_, s)| *s == Sense::Max);

    let budget = Budget { used: Cell::new(0) };
    let x_tol = tolerance.max(1e-15).sqrt();
    let mut radii = [1.0f64; 2];
    let result = nested(&dims, &mut radii, &|radii: &[f64; 2]| {
        budget.tick()?;
        let mut stiffness = 0.0;
        let mut potential = 0.0;
        for (i, scope) in scopes.iter().enumerate() {
            if scope.terms.is_empty() {
                continue;
            }
            // Quadratic-only scopes have a constant field and no offset.
            stiffness += scope.weight * scope.field(radii[i]);
            potential += scope.count * scope.offset(radii[i]);
        }
        if !(stiffness > 0.0) {
            return Ok(f64::NAN);
        }
        let c = (2.0 * stiffness).sqrt() * qv;
        let kinetic = match spec.kinematics {
            Kinematics::Nonrelativistic => nf * m + c / m.sqrt(),
            Kinematics::Semirelativistic => kinetic_minimum(nf, m, c, &budget)?,
        };
        Ok(kinetic + potential)
    }, x_tol)?;
    if !result.is_finite() {
        return Err(Error::NonConvergence(budget.used.get()));
    }
    Ok(result)
}

/// `min_μ N/2 (μ + m²/μ) + c μ^{-1/2}`; the function is convex in `μ`.
fn kinetic_minimum(nf: f64, m: f64, c: f64, budget: &Budget) -> Result<f64> {
    let f = |mu: f64| 0.5 * nf * (mu + m * m / mu) + c / mu.sqrt();
    let df = |mu: f64| 0.5 * nf * (1.0 - m * m / (mu * mu)) - 0.5 * c * mu.powf(-1.5);
    let mut hi = 2.0 * m + 2.0 * (c / nf).powf(2.0 / 3.0);
    while df(hi) <= 0.0 {
        budget.tick()?;
        hi *= 2.0;
    }
    let mut lo = 0.5 * hi;
    while df(lo) >= 0.0 {
        budget.tick()?;
        lo *= 0.5;
    }
    let mut mu = 0.5 * (lo + hi);
    for _ in 0..200 {
        budget.tick()?;
        let d = df(mu);
        if d > 0.0 {
            hi = mu;
        } else {
            lo = mu;
        }
        let d2 = nf * m * m / (mu * mu * mu) + 0.75 * c * mu.powf(-2.5);
        let newton = mu - d / d2;
        let next = if newton > lo && newton < hi { newton } else { 0.5 * (lo + hi) };
        if (next - mu).abs() <= 1e-15 * mu {
            mu = next;
            break;
        }
        mu = next;
    }
    Ok(f(mu))
}

type Objective<'a> = dyn Fn(&[f64; 2]) -> Result<f64> + 'a;

/// Extremizes over `dims[0]`, recursing on the rest.
fn nested(dims: &[(usize, Sense)], radii: &mut [f64; 2], objective: &Objective<'_>, x_tol: f64) -> Result<f64> {
    let Some((&(index, sense), rest)) = dims.split_first() else {
        return objective(radii);
    };
    let sign = match sense {
        Sense::Min => 1.0,
        Sense::Max => -1.0,
    };
    // Undefined points never win, whichever way the search goes.
    let mut g = |t: f64| -> Result<f64> {
        let mut local = *radii;
        local[index] = t.exp();
        let v = nested(rest, &mut local, objective, x_tol)?;
        Ok(if v.is_nan() { f64::INFINITY } else { sign * v })
    };

    let step = (LN_HI - LN_LO) / (SCAN_POINTS - 1) as f64;
    let mut best = (0usize, f64::INFINITY);
    for i in 0..SCAN_POINTS {
        let v = g(LN_LO + i as f64 * step)?;
        if v < best.1 {
            best = (i, v);
        }
    }
    if !best.1.is_finite() {
        return Ok(f64::NAN);
    }
    if best.0 == 0 || best.0 == SCAN_POINTS - 1 {
        // Edge optima are undefined here; the caller treats them like any other undefined point.
        return Ok(f64::NAN);
    }
    let centre = LN_LO + best.0 as f64 * step;
    let (t, v) = brent(&mut g, centre - step, centre, centre + step, best.1, x_tol)?;
    radii[index] = t.exp();
    Ok(sign * v)
}

/// Brent's parabolic-interpolation minimizer on `[a, b]` starting from `x` with `f(x) = fx`.
fn brent(
    f: &mut impl FnMut(f64) -> Result<f64>,
    mut a: f64,
    x: f64,
    mut b: f64,
    fx: f64,
    tol: f64,
) -> Result<(f64, f64)> {
    const GOLDEN: f64 = 0.381_966_011_250_105_1;
    let (mut x, mut w, mut v) = (x, x, x);
    let (mut fx, mut fw, mut fv) = (fx, fx, fx);
    let mut d: f64 = 0.0;
    let mut e: f64 = 0.0;
    for _ in 0..200 {
        let xm = 0.5 * (a + b);
        let tol1 = tol * (1.0 + x.abs());
        let tol2 = 2.0 * tol1;
        if (x - xm).abs() <= tol2 - 0.5 * (b - a) {
            break;
        }
        let mut golden = true;
        if e.abs() > tol1 {
            let r = (x - w) * (fx - fv);
            let mut q = (x - v) * (fx - fw);
            let mut p = (x - v) * q - (x - w) * r;
            q = 2.0 * (q - r);
            if q > 0.0 {
                p = -p;
            }
            q = q.abs();
            if p.abs() < (0.5 * q * e).abs() && p > q * (a - x) && p < q * (b - x) {
                e = d;
                d = p / q;
                let u = x + d;
                if u - a < tol2 || b - u < tol2 {
                    d = tol1.copysign(xm - x);
                }
                golden = false;
            }
        }
        if golden {
            e = if x >= xm { a - x } else { b - x };
            d = GOLDEN * e;
        }
        let u = if d.abs() >= tol1 { x + d } else { x + tol1.copysign(d) };
        let fu = f(u)?;
        if fu <= fx {
            if u >= x {
                a = x;
            } else {
                b = x;
            }
            (v, fv) = (w, fw);
            (w, fw) = (x, fx);
            (x, fx) = (u, fu);
        } else {
            if u < x {
                a = u;
            } else {
                b = u;
            }
            if fu <= fw || w == x {
                (v, fv) = (w, fw);
                (w, fw) = (u, fu);
            } else if fu <= fv || v == x || v == w {
                (v, fv) = (u, fu);
            }
        }
    }
    Ok((x, fx))
}

/// Variational ground-state bound in the trial family `exp(-κ Σ r_ij²)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrialBound {
    /// `⟨H⟩` at the optimal `κ`, without the rest mass.
    pub energy: f64,
    pub kappa: f64,
}

/// `⟨r^λ⟩` for the pair density `r² exp(-s r²)`.
pub fn trial_power_moment(s: f64, lambda: f64) -> f64 {
    (gamma_ratio(lambda)) * s.powf(-0.5 * lambda)
}

/// `⟨exp(-β² r²)⟩` for the pair density `r² exp(-s r²)`.
pub fn trial_gaussian_moment(s: f64, beta: f64) -> f64 {
    (s / (s + beta * beta)).powf(1.5)
}

/// `Γ((3 + λ)/2) / Γ(3/2)`.
fn gamma_ratio(lambda: f64) -> f64 {
    (ln_gamma(0.5 * (3.0 + lambda)) - ln_gamma(1.5)).exp()
}

/// Lanczos approximation (g = 7, n = 9), accurate to about 1e-15 for x > 0.
fn ln_gamma(x: f64) -> f64 {
    const COEFFS: [f64; 9] = [
        0.999_999_999_999_809_9,
        676.520_368_121_885_1,
        -1_259.139_216_722_402_8,
        771.323_428_777_653_1,
        -176.615_029_162_140_6,
        12.507_343_278_686_905,
        -0.138_571_095_265_720_12,
        9.984_369_578_019_572e-6,
        1.505_632_735_149_311_6e-7,
    ];
    if x < 0.5 {
        let pi = std::f64::consts::PI;
        return (pi / (pi * x).sin()).ln() - ln_gamma(1.0 - x);
    }
    let x = x - 1.0;
    let t = x + 7.5;
    let series = COEFFS[1..].iter().enumerate().fold(COEFFS[0], |acc, (i, c)| acc + c / (x + i as f64 + 1.0));
    0.5 * (2.0 * std::f64::consts::PI).ln() + (x + 0.5) * t.ln() - t + series.ln()
}

/// Minimizes `⟨H⟩` over the correlated-Gaussian trial family.
///
/// With `s = κN` the internal kinetic energy is `3(N-1) s / (2m)` and every
/// pair distance has the density `r² exp(-s r²)`.
pub fn gaussian_trial_bound(spec: &SystemSpec) -> Result<TrialBound> {
    spec.validate()?;
    let m = spec.identical_mass()?;
    if spec.kinematics != Kinematics::Nonrelativistic {
        return Err(Error::UnsupportedCombination("the trial bound needs nonrelativistic kinematics".into()));
    }
    if !spec.one_body.is_empty() {
        return Err(Error::UnsupportedCombination("the trial bound handles pairwise potentials only".into()));
    }
    let nf = spec.n as f64;
    let pairs = 0.5 * nf * (nf - 1.0);
    let expectation = |ln_s: f64| {
        let s = ln_s.exp();
        let potential: f64 = spec
            .pairwise
            .iter()
            .map(|t| match t.form {
                PotentialForm::PowerLaw { coefficient, exponent } => {
                    coefficient * exponent.signum() * trial_power_moment(s, exponent)
                }
                PotentialForm::Gaussian { depth, range } => -depth * trial_gaussian_moment(s, range),
            })
            .sum();
        1.5 * (nf - 1.0) * s / m + pairs * potential
    };

    let (lo, hi, points) = (-40.0f64, 40.0f64, 801usize);
    let step = (hi - lo) / (points - 1) as f64;
    let mut best = (0usize, f64::INFINITY);
    for i in 0..points {
        let v = expectation(lo + i as f64 * step);
        if v < best.1 {
            best = (i, v);
        }
    }
    if best.0 == 0 || best.0 == points - 1 {
        return Err(Error::UnboundedBelow);
    }
    let centre = lo + best.0 as f64 * step;
    let mut f = |t: f64| Ok(expectation(t));
    let (t, energy) = brent(&mut f, centre - step, centre, centre + step, best.1, 1e-9)?;
    Ok(TrialBound { energy, kappa: t.exp() / nf })
}

/// Compares [`afm_mass`] with [`numeric_afm_minimize`].
pub fn verify_afm(spec: &SystemSpec, q: &QuantumNumbers, tolerance: f64) -> Result<OracleReport> {
    let closed = afm_mass(spec, q)?.mass;
    let oracle = numeric_afm_minimize(spec, q, (tolerance * 1e-4).max(1e-15))?;
    Ok(OracleReport::agreement(closed, oracle, tolerance))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::afm::{equal_power_mass, linear_mass};
    use crate::ho::{ho_energy_identical, srho_mass};
    use crate::model::PotentialForm as P;
    use crate::systems::{atomic_mass, baryonic_ur, gaussian_spectrum};

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs()
    }

    fn sr(n: usize, m: f64) -> SystemSpec {
        SystemSpec::identical(n, m, Kinematics::Semirelativistic)
    }

    fn nr(n: usize, m: f64) -> SystemSpec {
        SystemSpec::identical(n, m, Kinematics::Nonrelativistic)
    }

    /// Adaptive Simpson quadrature.
    fn simpson(f: &dyn Fn(f64) -> f64, a: f64, b: f64, eps: f64) -> f64 {
        fn rec(f: &dyn Fn(f64) -> f64, a: f64, b: f64, fa: f64, fm: f64, fb: f64, whole: f64, eps: f64, depth: u32) -> f64 {
            let m = 0.5 * (a + b);
            let (lm, rm) = (0.5 * (a + m), 0.5 * (m + b));
            let (flm, frm) = (f(lm), f(rm));
            let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
            let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
            if depth == 0 || (left + right - whole).abs() <= 15.0 * eps {
                return left + right + (left + right - whole) / 15.0;
            }
            let eps = (0.5 * eps).max(1e-17);
            rec(f, a, m, fa, flm, fm, left, eps, depth - 1) + rec(f, m, b, fm, frm, fb, right, eps, depth - 1)
        }
        let (fa, fm, fb) = (f(a), f(0.5 * (a + b)), f(b));
        rec(f, a, b, fa, fm, fb, (b - a) / 6.0 * (fa + 4.0 * fm + fb), eps, 22)
    }

    /// `∫ r² e^{-s r²} g(r) dr / ∫ r² e^{-s r²} dr` with `r = u²`.
    fn pair_average(s: f64, g: impl Fn(f64) -> f64) -> f64 {
        let upper = (40.0 / s).sqrt().sqrt();
        let weight = |u: f64| {
            let r = u * u;
            2.0 * u * r * r * (-s * r * r).exp()
        };
        let num = simpson(&|u| if u == 0.0 { 0.0 } else { weight(u) * g(u * u) }, 0.0, upper, 1e-14);
        let den = simpson(&weight, 0.0, upper, 1e-14);
        num / den
    }

    #[test]
    fn trial_moments_match_quadrature() {
        for s in [0.05, 0.7, 3.0, 20.0] {
            for lambda in [-1.5, -1.0, -0.5, 0.5, 1.0, 2.0, 3.0] {
                let quad = pair_average(s, |r| r.powf(lambda));
                assert!(rel(trial_power_moment(s, lambda), quad) < 1e-10, "s {s}, lambda {lambda}: {} vs {quad}", trial_power_moment(s, lambda));
            }
            for beta in [0.3, 1.0, 2.5] {
                let quad = pair_average(s, |r| (-(beta * r).powi(2)).exp());
                assert!(rel(trial_gaussian_moment(s, beta), quad) < 1e-10);
            }
        }
    }

    #[test]
    fn ln_gamma_known_values() {
        assert!(ln_gamma(1.0).abs() < 1e-15);
        assert!((ln_gamma(0.5) - 0.5 * std::f64::consts::PI.ln()).abs() < 1e-14);
        assert!((ln_gamma(5.0) - 24f64.ln()).abs() < 1e-14);
    }

    #[test]
    fn oracle_matches_semirelativistic_oscillator() {
        let spec = sr(3, 1.0).with_one_body(P::power(0.3, 2.0)).with_pairwise(P::power(0.2, 2.0));
        let oracle = numeric_afm_minimize(&spec, &QuantumNumbers::ground(3), 1e-12).unwrap();
        assert!(rel(oracle, srho_mass(3, 1.0, 0.3, 0.2, 3.0).unwrap().mass) < 1e-8);
    }

    #[test]
    fn oracle_matches_baryonic() {
        let spec = sr(3, 0.0).with_one_body(P::power(0.2, 1.0)).with_pairwise(P::power(0.6, -1.0));
        let oracle = numeric_afm_minimize(&spec, &QuantumNumbers::ground(3), 1e-12).unwrap();
        assert!(rel(oracle, baryonic_ur(3, 0.2, 0.6, 3.0).unwrap().mass) < 1e-8);
    }

    #[test]
    fn oracle_matches_gaussian() {
        let spec = nr(3, 1.0).with_pairwise(P::gaussian(10.0, 1.0));
        let oracle = numeric_afm_minimize(&spec, &QuantumNumbers::ground(3), 1e-12).unwrap();
        let level = gaussian_spectrum(3, 1.0, 10.0, 1.0, 3.0).unwrap();
        assert!(rel(oracle, 3.0 + level.energy) < 1e-8);
    }

    #[test]
    fn oracle_matches_atomic_saddle() {
        let spec = sr(3, 1.0).with_one_body(P::power(0.3, -1.0)).with_pairwise(P::power(-0.1, -1.0));
        let oracle = numeric_afm_minimize(&spec, &QuantumNumbers::ground(3), 1e-12).unwrap();
        assert!(rel(oracle, atomic_mass(3, 1.0, 0.3, 0.1, 3.0).unwrap()) < 1e-8);
    }

    #[test]
    fn oracle_matches_linear_and_nonrelativistic() {
        let q = QuantumNumbers::ground(3);
        let lin = numeric_afm_minimize(&sr(3, 1.0).with_one_body(P::power(0.2, 1.0)), &q, 1e-12).unwrap();
        assert!(rel(lin, linear_mass(3, 1.0, 0.2, 0.0, 3.0).unwrap().mass) < 1e-8);
        let spec = nr(3, 1.0).with_one_body(P::power(0.2, 1.0));
        let nr_lin = numeric_afm_minimize(&spec, &q, 1e-12).unwrap();
        assert!(rel(nr_lin, equal_power_mass(&spec, &q).unwrap().mass) < 1e-8);
        let quartic = nr(4, 1.0).with_pairwise(P::power(0.5, 4.0));
        let q4 = QuantumNumbers::ground(4);
        let report = verify_afm(&quartic, &q4, 1e-8).unwrap();
        assert!(report.is_match(), "{report:?}");
    }

    #[test]
    fn oracle_is_deterministic() {
        let spec = sr(4, 0.3).with_one_body(P::power(0.2, 1.0)).with_pairwise(P::power(0.1, 0.5));
        let q = QuantumNumbers::new(vec![(1, 0), (0, 1), (0, 0)]);
        let a = numeric_afm_minimize(&spec, &q, 1e-12).unwrap();
        let b = numeric_afm_minimize(&spec, &q, 1e-12).unwrap();
        assert_eq!(a.to_bits(), b.to_bits());
        assert!(verify_afm(&spec, &q, 1e-8).unwrap().is_match());
    }

    #[test]
    fn trial_bound_examples() {
        let ho = nr(4, 1.5).with_pairwise(P::power(0.7, 2.0));
        let bound = gaussian_trial_bound(&ho).unwrap();
        assert!(rel(bound.energy, ho_energy_identical(4, 1.5, 0.0, 0.7, 4.5).unwrap()) < 1e-12);

        let gauss = gaussian_trial_bound(&nr(2, 1.0).with_pairwise(P::gaussian(10.0, 1.0))).unwrap();
        let afm = gaussian_spectrum(2, 1.0, 10.0, 1.0, 1.5).unwrap().energy;
        assert!(gauss.energy <= afm);
        assert!(OracleReport::ordering(afm, gauss.energy).is_match());

        let lin = nr(3, 1.0).with_pairwise(P::power(0.2, 1.0));
        let afm_lin = equal_power_mass(&lin, &QuantumNumbers::ground(3)).unwrap().mass;
        assert!(gaussian_trial_bound(&lin).unwrap().energy + 3.0 <= afm_lin);
    }

    #[test]
    fn trial_bound_rejects_unbound_and_unsupported() {
        // Far below the critical coupling the best trial state spreads out forever.
        let weak = nr(2, 1.0).with_pairwise(P::gaussian(0.1, 1.0));
        assert_eq!(gaussian_trial_bound(&weak), Err(Error::UnboundedBelow));
        let one_body = nr(3, 1.0).with_one_body(P::power(1.0, 2.0));
        assert!(gaussian_trial_bound(&one_body).is_err());
    }

    #[test]
    fn report_verdicts() {
        assert!(OracleReport::agreement(1.0, 1.0 + 1e-9, 1e-8).is_match());
        assert!(!OracleReport::agreement(1.0, 1.1, 1e-8).is_match());
        assert!(OracleReport::ordering(1.0, 0.9).is_match());
        assert!(!OracleReport::ordering(1.0, 1.1).is_match());
    }
}
