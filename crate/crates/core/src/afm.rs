//! Auxiliary field method for systems of identical particles.
//!
//! Every potential term is replaced by the quadratic form tangent to it, with
//! one common field per scope and one kinetic field. The fields collapse onto a
//! single variable `X`, which solves
//!
//! ```text
//! X² = 2 μ(X) [K(r₁) + N K̄(r₂)],   r₁ = sqrt(Q / (N X)),   r₂ = sqrt(2Q / ((N - 1) X)),
//! ```
//!
//! with `μ = sqrt(m² + Q X / N)` for semirelativistic kinematics and `μ = m`
//! otherwise. The mass follows as `N μ + N V(r₁) + N(N - 1)/2 V̄(r₂)`, plus
//! `Q X / (2m)` and the rest mass in the nonrelativistic case.

use crate::error::{Error, Result};
use crate::ho::srho_mass;
use crate::model::{
    validate, AfmSolution, BoundCharacter, Convexity, Kinematics, PotentialForm, PotentialTerm,
    QuantumNumbers, Scope, SystemSpec,
};
use crate::special::cubic_root_f;

/// `K` and its inverse for one potential term.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AuxiliaryComponent {
    pub scope: Scope,
    pub form: PotentialForm,
}

impl AuxiliaryComponent {
    /// `K(x) = V'(x) / (2x)`.
    pub fn k(&self, x: f64) -> f64 {
        self.form.tangent_field(x)
    }

    /// The radius at which the tangent field equals `nu`.
    pub fn inverse(&self, nu: f64) -> Result<f64> {
        match self.form {
            PotentialForm::PowerLaw { exponent, .. } if exponent == 2.0 => {
                Err(Error::QuadraticDegenerate)
            }
            PotentialForm::PowerLaw { coefficient, exponent } => {
                let base = 2.0 * nu / (coefficient * exponent.abs());
                if !(base > 0.0) || !base.is_finite() {
                    return Err(Error::DomainError { function: "auxiliary inverse", value: nu });
                }
                Ok(base.powf(1.0 / (exponent - 2.0)))
            }
            PotentialForm::Gaussian { depth, range } => {
                let ratio = nu / (depth * range * range);
                if !(ratio > 0.0 && ratio <= 1.0) {
                    return Err(Error::DomainError { function: "auxiliary inverse", value: nu });
                }
                Ok((-ratio.ln()).sqrt() / range)
            }
        }
    }
}

pub fn auxiliary_k(term: &PotentialTerm) -> Result<AuxiliaryComponent> {
    if let PotentialForm::Gaussian { .. } = term.form {
        if term.scope != Scope::Pairwise {
            return Err(Error::UnsupportedForm("gaussian terms are pairwise only".into()));
        }
    }
    Ok(AuxiliaryComponent { scope: term.scope, form: term.form })
}

/// Tangent fields of all one-body and all pairwise terms of a system.
#[derive(Debug, Clone, PartialEq)]
pub struct AuxiliaryProfile {
    pub one_body: Vec<AuxiliaryComponent>,
    pub pairwise: Vec<AuxiliaryComponent>,
}

impl AuxiliaryProfile {
    pub fn from_spec(spec: &SystemSpec) -> Result<Self> {
        let collect = |terms: &[PotentialTerm]| terms.iter().map(auxiliary_k).collect::<Result<Vec<_>>>();
        Ok(AuxiliaryProfile { one_body: collect(&spec.one_body)?, pairwise: collect(&spec.pairwise)? })
    }

    pub fn k_one(&self, x: f64) -> f64 {
        self.one_body.iter().map(|c| c.k(x)).sum()
    }

    pub fn k_pair(&self, x: f64) -> f64 {
        self.pairwise.iter().map(|c| c.k(x)).sum()
    }

    pub fn i_one(&self, nu: f64) -> Result<f64> {
        single(&self.one_body)?.inverse(nu)
    }

    pub fn i_pair(&self, nu: f64) -> Result<f64> {
        single(&self.pairwise)?.inverse(nu)
    }
}

fn single(components: &[AuxiliaryComponent]) -> Result<&AuxiliaryComponent> {
    match components {
        [c] => Ok(c),
        _ => Err(Error::UnsupportedCombination(
            "the inverse field is only available for a single term".into(),
        )),
    }
}

/// The reduced one-variable problem in `X`.
struct Reduced<'a> {
    nf: f64,
    m: f64,
    q: f64,
    kinematics: Kinematics,
    spec: &'a SystemSpec,
}

impl<'a> Reduced<'a> {
    fn new(spec: &'a SystemSpec, q: &QuantumNumbers) -> Result<Self> {
        validate(spec, q)?;
        Ok(Reduced {
            nf: spec.n as f64,
            m: spec.identical_mass()?,
            q: q.principal(),
            kinematics: spec.kinematics,
            spec,
        })
    }

    fn mu(&self, x: f64) -> f64 {
        match self.kinematics {
            Kinematics::Semirelativistic => (self.m * self.m + self.q * x / self.nf).sqrt(),
            Kinematics::Nonrelativistic => self.m,
        }
    }

    fn r_one(&self, x: f64) -> f64 {
        (self.q / (self.nf * x)).sqrt()
    }

    fn r_pair(&self, x: f64) -> f64 {
        (2.0 * self.q / ((self.nf - 1.0) * x)).sqrt()
    }

    fn field_sum(&self, x: f64) -> f64 {
        let k: f64 = self.spec.one_body.iter().map(|t| t.form.tangent_field(self.r_one(x))).sum();
        let kbar: f64 = self.spec.pairwise.iter().map(|t| t.form.tangent_field(self.r_pair(x))).sum();
        k + self.nf * kbar
    }

    /// Zero exactly at solutions of the `X` equation.
    fn phi(&self, x: f64) -> f64 {
        2.0 * self.mu(x) * self.field_sum(x) / (x * x) - 1.0
    }

    fn mass(&self, x: f64) -> f64 {
        let potential = self.nf * self.spec.one_body_potential(self.r_one(x))
            + 0.5 * self.nf * (self.nf - 1.0) * self.spec.pair_potential(self.r_pair(x));
        match self.kinematics {
            Kinematics::Semirelativistic => self.nf * self.mu(x) + potential,
            Kinematics::Nonrelativistic => {
                self.nf * self.m + self.q * x / (2.0 * self.m) + potential
            }
        }
    }
}

/// Assembled mass `M(X)` for an arbitrary trial value of `X`.
pub fn mass_at(spec: &SystemSpec, q: &QuantumNumbers, x: f64) -> Result<f64> {
    Ok(Reduced::new(spec, q)?.mass(x))
}

/// Relative residual `|X² - 2μ(K + N K̄)| / X²` of the `X` equation.
pub fn x0_residual(spec: &SystemSpec, q: &QuantumNumbers, x: f64) -> Result<f64> {
    Ok(Reduced::new(spec, q)?.phi(x).abs())
}

/// AFM mass of a system of identical particles.
///
/// Equal-power systems use their closed forms where one exists; everything
/// else goes through a bracketed root search on the `X` equation.
pub fn afm_mass(spec: &SystemSpec, q: &QuantumNumbers) -> Result<AfmSolution> {
    Reduced::new(spec, q)?;
    if common_exponent(spec).is_some() {
        match equal_power_mass(spec, q) {
            Err(Error::NotClosedForm(_)) => {}
            other => return other,
        }
    }
    afm_mass_generic(spec, q)
}

/// Numerical AFM mass, bypassing every closed form.
///
/// All positive roots of the `X` equation are located on a logarithmic grid
/// and refined by bisection. When several exist the one with the lowest mass
/// wins, ties going to the smaller `X`.
pub fn afm_mass_generic(spec: &SystemSpec, q: &QuantumNumbers) -> Result<AfmSolution> {
    let problem = Reduced::new(spec, q)?;
    let roots = positive_roots(|x| problem.phi(x));
    let mut best: Option<(f64, f64)> = None;
    for x in roots {
        let mass = problem.mass(x);
        match best {
            Some((_, bm)) if mass >= bm - 1e-12 * bm.abs() => {}
            _ => best = Some((x, mass)),
        }
    }
    let (x0, mass) = best.ok_or(Error::NoPositiveRoot)?;
    Ok(AfmSolution::from_x0(
        spec.n,
        problem.m,
        problem.q,
        problem.kinematics,
        mass,
        x0,
        bound_character(spec),
    ))
}

const LOG10_MIN: f64 = -30.0;
const LOG10_MAX: f64 = 30.0;
const GRID_STEP: f64 = 0.05;

/// Every sign change of `phi` on `(10⁻³⁰, 10³⁰)`, refined to full precision.
pub(crate) fn positive_roots(phi: impl Fn(f64) -> f64) -> Vec<f64> {
    let f = |t: f64| phi(10f64.powf(t));
    let count = ((LOG10_MAX - LOG10_MIN) / GRID_STEP).round() as usize;
    let ts: Vec<f64> = (0..=count).map(|i| LOG10_MIN + i as f64 * GRID_STEP).collect();
    let vs: Vec<f64> = ts.iter().map(|&t| f(t)).collect();

    let mut brackets = Vec::new();
    for i in 0..count {
        let (a, b) = (vs[i], vs[i + 1]);
        if !(a.is_finite() && b.is_finite()) {
            continue;
        }
        if a == 0.0 {
            brackets.push((ts[i], ts[i]));
        } else if a.signum() != b.signum() && b != 0.0 {
            brackets.push((ts[i], ts[i + 1]));
        } else if i > 0 && vs[i - 1].is_finite() {
            // A pair of roots can hide between grid points around a local extremum.
            let (l, c, r) = (vs[i - 1], a, b);
            let sign = c.signum();
            if sign * (l - c) > 0.0 && sign * (r - c) > 0.0 {
                let t_ext = golden_extremum(&f, ts[i - 1], ts[i + 1], -sign);
                if f(t_ext).signum() != sign {
                    brackets.push((ts[i - 1], t_ext));
                    brackets.push((t_ext, ts[i + 1]));
                }
            }
        }
    }
    if vs[count] == 0.0 {
        brackets.push((ts[count], ts[count]));
    }

    let mut roots: Vec<f64> = brackets.into_iter().map(|(lo, hi)| 10f64.powf(bisect(&f, lo, hi))).collect();
    roots.sort_by(f64::total_cmp);
    roots.dedup_by(|a, b| (*a - *b).abs() <= 1e-12 * b.abs());
    roots
}

/// Extremum of `f` on `[a, b]`: the maximum when `direction > 0`, else the minimum.
fn golden_extremum(f: &impl Fn(f64) -> f64, mut a: f64, mut b: f64, direction: f64) -> f64 {
    let g = |t: f64| direction * f(t);
    let ratio = 0.5 * (5f64.sqrt() - 1.0);
    let mut c = b - ratio * (b - a);
    let mut d = a + ratio * (b - a);
    let (mut gc, mut gd) = (g(c), g(d));
    for _ in 0..80 {
        if gc > gd {
            b = d;
            d = c;
            gd = gc;
            c = b - ratio * (b - a);
            gc = g(c);
        } else {
            a = c;
            c = d;
            gc = gd;
            d = a + ratio * (b - a);
            gd = g(d);
        }
    }
    0.5 * (a + b)
}

fn bisect(f: &impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    let mut flo = f(lo);
    if flo == 0.0 {
        return lo;
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let fm = f(mid);
        if fm == 0.0 {
            return mid;
        }
        if fm.signum() == flo.signum() {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// The exponent shared by every term, if all terms are power laws with one exponent.
fn common_exponent(spec: &SystemSpec) -> Option<f64> {
    let mut exponent = None;
    for term in spec.terms() {
        let e = term.form.exponent()?;
        match exponent {
            None => exponent = Some(e),
            Some(prev) if prev != e => return None,
            _ => {}
        }
    }
    exponent
}

fn summed_coefficient(terms: &[PotentialTerm]) -> f64 {
    terms
        .iter()
        .map(|t| match t.form {
            PotentialForm::PowerLaw { coefficient, .. } => coefficient,
            PotentialForm::Gaussian { .. } => 0.0,
        })
        .sum()
}

/// Closed-form AFM mass when every term is `a r^λ` with the same `λ`.
///
/// Nonrelativistic and massless systems are solved for any `λ`. With a finite
/// semirelativistic mass only `λ ∈ {2, 1, -1/2, -2/3, -1}` are handled; other
/// exponents give `NotClosedForm`.
pub fn equal_power_mass(spec: &SystemSpec, q: &QuantumNumbers) -> Result<AfmSolution> {
    let problem = Reduced::new(spec, q)?;
    let lambda = common_exponent(spec).ok_or_else(|| {
        Error::UnsupportedCombination("all terms must be power laws with one exponent".into())
    })?;
    let (n, nf, m, qv) = (spec.n, problem.nf, problem.m, problem.q);
    let a = summed_coefficient(&spec.one_body);
    let b = summed_coefficient(&spec.pairwise);
    let bound = bound_character(spec);
    let solution = |mass: f64, x0: f64| AfmSolution::from_x0(n, m, qv, spec.kinematics, mass, x0, bound);

    let half = (2.0 - lambda) / 2.0;
    let big_a = a * lambda.abs() * (nf / qv).powf(half);
    let big_b = b * lambda.abs() * nf * ((nf - 1.0) / (2.0 * qv)).powf(half);
    let c = big_a + big_b;
    if !(c > 0.0) {
        return Err(Error::NoPositiveRoot);
    }

    if spec.kinematics == Kinematics::Nonrelativistic {
        let x0 = (m * c).powf(2.0 / (lambda + 2.0));
        let mass = nf * m + (lambda + 2.0) / (2.0 * lambda) * qv * (c * c / m.powf(lambda)).powf(1.0 / (lambda + 2.0));
        return Ok(solution(mass, x0));
    }

    if m == 0.0 {
        if lambda <= -1.0 {
            return Err(Error::NoPositiveRoot);
        }
        let x0 = (qv / nf * c * c).powf(1.0 / (lambda + 1.0));
        let mass = (lambda + 1.0) / lambda
            * (qv.powf(lambda + 2.0) * nf.powf(lambda) * c * c).powf(1.0 / (2.0 * (lambda + 1.0)));
        return Ok(solution(mass, x0));
    }

    // X^{λ+2} = C² (m² + Q X / N); p and s below are its natural scales.
    let p = c * c * qv / nf;
    let s = c * c * m * m;
    let x0 = if lambda == 2.0 {
        let sol = srho_mass(n, m, a, b, qv)?;
        return Ok(AfmSolution { bound_character: bound, ..sol });
    } else if lambda == 1.0 {
        let sol = linear_mass(n, m, a, b, qv)?;
        return Ok(AfmSolution { bound_character: bound, ..sol });
    } else if lambda == -1.0 {
        if p >= 1.0 {
            return Err(Error::NoPositiveRoot);
        }
        s / (1.0 - p)
    } else if lambda == -0.5 {
        // t = sqrt(X) solves t³ - p t² - s = 0.
        let t = p / 3.0 * (1.0 + cubic_root_f(1.0 + 13.5 * s / (p * p * p))?);
        t * t
    } else if lambda == -2.0 / 3.0 {
        let t = quartic_depressed_root(p, s);
        t * t * t
    } else {
        return Err(Error::NotClosedForm(lambda));
    };
    let mu = (m * m + qv * x0 / nf).sqrt();
    let mass = (nf * lambda * m * m + qv * (lambda + 1.0) * x0) / (lambda * mu);
    Ok(solution(mass, x0))
}

/// Positive root of `t⁴ - p t³ - s = 0` for `p, s > 0`.
///
/// The root lies in `(p, p + s^{1/4}]` where the polynomial is increasing and
/// convex, so Newton from the right end converges monotonically.
fn quartic_depressed_root(p: f64, s: f64) -> f64 {
    let f = |t: f64| t * t * t * (t - p) - s;
    let mut t = p + s.powf(0.25);
    for _ in 0..200 {
        let slope = t * t * (4.0 * t - 3.0 * p);
        let next = t - f(t) / slope;
        if !(next < t) || next <= p {
            break;
        }
        t = next;
    }
    t
}

/// Semirelativistic mass with one-body `a r` and pairwise `b r` confinement.
pub fn linear_mass(n: usize, m: f64, a: f64, b: f64, q: f64) -> Result<AfmSolution> {
    let nf = n as f64;
    let c = a + b * (nf * (nf - 1.0) / 2.0).sqrt();
    if !(c > 0.0) {
        return Err(Error::NonPositiveSlope(c));
    }
    if !(m >= 0.0) {
        return Err(Error::SingularMasses);
    }
    let (mass, x0) = if m == 0.0 {
        ((4.0 * nf * c * q).sqrt(), c)
    } else {
        let y = 3f64.powf(1.5) * nf * m * m / (2.0 * q * c);
        let f = cubic_root_f(y)?;
        let mass = nf * m * (f / (2.0 * y)).sqrt() * (f + 3.0 / f);
        (mass, c * f / 3f64.sqrt())
    };
    Ok(AfmSolution::from_x0(n, m, q, Kinematics::Semirelativistic, mass, x0, BoundCharacter::UpperBound))
}

/// Whether the AFM result bounds the exact eigenvalue, from the convexity of every term.
pub fn bound_character(spec: &SystemSpec) -> BoundCharacter {
    let convexities: Vec<Convexity> = spec.terms().map(|t| t.form.convexity()).collect();
    let all = |allowed: &[Convexity]| convexities.iter().all(|c| allowed.contains(c));
    match spec.kinematics {
        Kinematics::Nonrelativistic => {
            if all(&[Convexity::Linear]) {
                BoundCharacter::Exact
            } else if all(&[Convexity::Concave, Convexity::Linear]) {
                BoundCharacter::UpperBound
            } else if all(&[Convexity::Convex, Convexity::Linear]) {
                BoundCharacter::LowerBound
            } else {
                BoundCharacter::Unknown
            }
        }
        Kinematics::Semirelativistic => {
            if all(&[Convexity::Concave, Convexity::Linear]) {
                BoundCharacter::UpperBound
            } else {
                BoundCharacter::Unknown
            }
        }
    }
}
