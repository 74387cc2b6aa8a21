//! Acceptance suite: one PASS/FAIL line per criterion.

use std::f64::consts::E;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use nbody_afm::afm::{afm_mass, equal_power_mass, linear_mass};
use nbody_afm::ho::{ho_energies_general, ho_energy_3body_closed, ho_energy_3body_closed_with_reference, srho_mass, HarmonicSystem};
use nbody_afm::model::{Kinematics, PotentialForm as P, QuantumNumbers, SystemSpec};
use nbody_afm::oracles::{gaussian_trial_bound, numeric_afm_minimize, OracleReport};
use nbody_afm::special::{cubic_root_f_with_residual, lambert_w0, quartic_root_g_with_residual, Matrix};
use nbody_afm::systems::{
    atomic_is_stable, atomic_mass, baryon_gaussian_ground, baryon_mass, baryonic_ur, coulomb_nbody, critical_coupling,
    duality_map, funnel_nbody_ur, gaussian_critical_coupling, gaussian_level_unchecked, gaussian_spectrum, two_body_afm,
    BaryonParams, BaryonVariant, DualityKind, DualityMap,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn rel(a: f64, b: f64) -> f64 {
    if a == b {
        0.0
    } else {
        (a - b).abs() / a.abs().max(b.abs())
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn sr(n: usize, m: f64) -> SystemSpec {
    SystemSpec::identical(n, m, Kinematics::Semirelativistic)
}

fn nr(n: usize, m: f64) -> SystemSpec {
    SystemSpec::identical(n, m, Kinematics::Nonrelativistic)
}

fn random_q(n: usize, rng: &mut ChaCha8Rng) -> QuantumNumbers {
    if rng.gen_bool(0.5) {
        QuantumNumbers::ground(n)
    } else {
        QuantumNumbers::new((0..n - 1).map(|_| (rng.gen_range(0..2), rng.gen_range(0..3))).collect())
    }
}

// (B, L, exact, M0, M1, M2)
const TABLE: [(u32, u32, f64, f64, f64, f64); 16] = [
    (0, 0, 2.128, 2.468, 2.168, 2.168),
    (1, 1, 2.606, 2.914, 2.596, 2.596),
    (2, 0, 2.739, 3.300, 2.962, 2.811),
    (2, 2, 2.959, 3.300, 2.962, 2.962),
    (3, 1, 3.125, 3.646, 3.288, 3.152),
    (3, 3, 3.299, 3.646, 3.288, 3.288),
    (4, 0, 3.260, 3.961, 3.585, 3.332),
    (4, 2, 3.422, 3.961, 3.585, 3.460),
    (4, 4, 3.581, 3.961, 3.585, 3.585),
    (5, 1, 3.584, 4.253, 3.858, 3.625),
    (5, 3, 3.716, 4.253, 3.858, 3.743),
    (5, 5, 3.861, 4.253, 3.858, 3.858),
    (6, 0, 3.721, 4.527, 4.114, 3.782),
    (6, 2, 3.838, 4.527, 4.114, 3.895),
    (6, 4, 3.966, 4.527, 4.114, 4.006),
    (6, 6, 4.103, 4.527, 4.114, 4.114),
];

fn table_reproduction() -> Outcome {
    let (lambda, alpha) = (0.2, 0.4);
    let params = [BaryonVariant::M0, BaryonVariant::M1, BaryonVariant::M2]
        .map(|v| BaryonParams::new(lambda, alpha, v).map_err(|e| e.to_string()));
    let mut worst: f64 = 0.0;
    for &(b, l, exact, m0, m1, m2) in &TABLE {
        let (n_tot, l_tot) = ((b - l) / 2, l);
        for (p, expected) in params.iter().zip([m0, m1, m2]) {
            let p = p.clone()?;
            let mass = baryon_mass(&p, n_tot, l_tot).map_err(|e| e.to_string())?;
            worst = worst.max((mass - expected).abs());
            ensure((mass - expected).abs() <= 0.0005, || format!("{:?} (B={b}, L={l}): {mass:.6} vs {expected}", p.variant))?;
        }
        let m0_mass = baryon_mass(&params[0].clone()?, n_tot, l_tot).map_err(|e| e.to_string())?;
        ensure(m0_mass > exact, || format!("M0 {m0_mass} does not exceed exact {exact} at B={b}, L={l}"))?;
    }
    let m0_ground = baryon_mass(&params[0].clone()?, 0, 0).map_err(|e| e.to_string())?;
    let gaussian = baryon_gaussian_ground(lambda, alpha).map_err(|e| e.to_string())?;
    ensure(m0_ground >= gaussian, || format!("M0 {m0_ground} below Gaussian bound {gaussian}"))?;
    Ok(format!("48 entries, max |Δ| = {worst:.2e}; M0 ground {m0_ground:.4} ≥ {gaussian:.4}"))
}

fn ho_exactness() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut worst: f64 = 0.0;
    for _ in 0..200 {
        let masses: [f64; 3] = std::array::from_fn(|_| rng.gen_range(0.1..10.0));
        let k: [f64; 3] = std::array::from_fn(|_| rng.gen_range(0.0..5.0));
        let kbar: [f64; 3] = std::array::from_fn(|_| rng.gen_range(0.0..5.0));
        let modes: [(u32, u32); 2] = std::array::from_fn(|_| (rng.gen_range(0..3), rng.gen_range(0..3)));
        let pair = |i: usize, j: usize| match (i.min(j), i.max(j)) {
            (0, 1) => kbar[0],
            (0, 2) => kbar[1],
            (1, 2) => kbar[2],
            _ => 0.0,
        };
        let system = HarmonicSystem::new(masses.to_vec(), k.to_vec(), Matrix::from_fn(3, 3, pair));
        let closed = ho_energy_3body_closed(masses, k, kbar, modes).map_err(|e| e.to_string())?;
        // The general solver lists frequencies in ascending order.
        let ascending = [modes[1], modes[0]];
        for reference in [None, Some(1.0), Some(masses.iter().sum())] {
            let general = ho_energies_general(&system, &ascending, reference).map_err(|e| e.to_string())?.energy;
            worst = worst.max(rel(closed, general));
            ensure(rel(closed, general) <= 1e-10, || format!("closed {closed} vs general {general}, {masses:?} {k:?} {kbar:?}"))?;
        }
        for reference in [1.0, 7.0, masses[2]] {
            let other = ho_energy_3body_closed_with_reference(masses, k, kbar, modes, reference).map_err(|e| e.to_string())?;
            ensure(rel(closed, other) <= 1e-10, || format!("reference mass {reference}: {other} vs {closed}"))?;
        }
        // Relabel particles (0, 1, 2) -> (1, 2, 0).
        let perm = [1usize, 2, 0];
        let pm = perm.map(|i| masses[i]);
        let pk = perm.map(|i| k[i]);
        let pkbar = [pair(perm[0], perm[1]), pair(perm[0], perm[2]), pair(perm[1], perm[2])];
        let permuted = ho_energy_3body_closed(pm, pk, pkbar, modes).map_err(|e| e.to_string())?;
        ensure(rel(closed, permuted) <= 1e-10, || format!("permutation: {permuted} vs {closed}"))?;
    }
    Ok(format!("200 draws, max relative gap {worst:.2e}"))
}

fn root_residuals() -> Outcome {
    let sweep = |lo: f64, hi: f64| (0..1000).map(move |i| 10f64.powf(lo + (hi - lo) * i as f64 / 999.0));
    let mut worst = [0.0f64; 3];
    for y in sweep(-8.0, 8.0) {
        let f = cubic_root_f_with_residual(y).map_err(|e| e.to_string())?;
        let scaled = f.residual.abs() / (2.0 * y).max(1.0);
        worst[0] = worst[0].max(scaled);
        ensure(scaled <= 1e-12 && f.value >= 3f64.sqrt(), || format!("F at {y}: residual {}", f.residual))?;
        let g = quartic_root_g_with_residual(y).map_err(|e| e.to_string())?;
        let scaled = g.residual.abs() / (3.0 * y).max(1.0);
        worst[1] = worst[1].max(scaled);
        ensure(scaled <= 1e-12 && g.value > 0.0, || format!("G at {y}: residual {}", g.residual))?;
    }
    let negative = sweep(-14.0, -0.5).map(|d| -1.0 / E + d * (1.0 / E));
    for x in sweep(-10.0, 10.0).chain(negative) {
        let w = lambert_w0(x).map_err(|e| e.to_string())?;
        let scaled = (w * w.exp() - x).abs() / x.abs().max(1.0);
        worst[2] = worst[2].max(scaled);
        ensure(scaled <= 1e-14 && w >= -1.0, || format!("W0 at {x}: residual {scaled}"))?;
    }
    Ok(format!("max scaled residuals F {:.1e}, G {:.1e}, W0 {:.1e}", worst[0], worst[1], worst[2]))
}

fn oracle_agreement() -> Outcome {
    const TOL: f64 = 1e-8;
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut worst: f64 = 0.0;
    let mut check = |name: &str, spec: &SystemSpec, q: &QuantumNumbers, closed: f64| -> Result<(), String> {
        let oracle = numeric_afm_minimize(spec, q, 1e-12).map_err(|e| format!("{name}: oracle failed with {e} on {spec:?}"))?;
        let report = OracleReport::agreement(closed, oracle, TOL);
        worst = worst.max(report.relative_gap);
        ensure(report.is_match(), || format!("{name}: closed {closed} vs oracle {oracle} on {spec:?}"))
    };
    for _ in 0..50 {
        let n = rng.gen_range(2..7);
        let q = random_q(n, &mut rng);
        let (m, k, kbar) = (rng.gen_range(0.1..3.0), rng.gen_range(0.0..2.0), rng.gen_range(0.05..2.0));
        let mut spec = sr(n, m).with_pairwise(P::power(kbar, 2.0));
        if k > 0.5 {
            spec = spec.with_one_body(P::power(k, 2.0));
        } else {
            spec = spec.with_one_body(P::power(0.0, 2.0));
        }
        let k = if k > 0.5 { k } else { 0.0 };
        let closed = srho_mass(n, m, k, kbar, q.principal()).map_err(|e| e.to_string())?.mass;
        check("srho_mass", &spec, &q, closed)?;
    }
    for _ in 0..50 {
        let n = rng.gen_range(2..7);
        let q = random_q(n, &mut rng);
        let (m, a, b) = (rng.gen_range(0.0..3.0), rng.gen_range(0.05..1.0), rng.gen_range(0.05..1.0));
        let spec = sr(n, m).with_one_body(P::power(a, 1.0)).with_pairwise(P::power(b, 1.0));
        let closed = linear_mass(n, m, a, b, q.principal()).map_err(|e| e.to_string())?.mass;
        check("linear_mass", &spec, &q, closed)?;
    }
    for _ in 0..50 {
        let n = rng.gen_range(2..7);
        let q = random_q(n, &mut rng);
        let (a, b) = (rng.gen_range(0.1..2.0), rng.gen_range(0.1..2.0));
        let spec = if rng.gen_bool(0.5) {
            let mut lambda: f64 = rng.gen_range(-1.5..3.0);
            if lambda.abs() < 0.1 {
                lambda = 0.5;
            }
            nr(n, rng.gen_range(0.2..3.0)).with_one_body(P::power(a, lambda)).with_pairwise(P::power(b, lambda))
        } else {
            let lambda = rng.gen_range(0.2..3.0);
            sr(n, 0.0).with_one_body(P::power(a, lambda)).with_pairwise(P::power(b, lambda))
        };
        let closed = equal_power_mass(&spec, &q).map_err(|e| e.to_string())?.mass;
        check("equal_power_mass", &spec, &q, closed)?;
    }
    for _ in 0..50 {
        let n = rng.gen_range(2..7);
        let q = random_q(n, &mut rng);
        let nf = n as f64;
        let pairs = 0.5 * nf * (nf - 1.0);
        let b_max = q.principal() * nf / pairs.powf(1.5);
        let (a, b) = (rng.gen_range(0.05..1.0), rng.gen_range(0.0..0.8) * b_max);
        let spec = sr(n, 0.0).with_one_body(P::power(a, 1.0)).with_pairwise(P::power(b.max(1e-3), -1.0));
        let closed = baryonic_ur(n, a, b.max(1e-3), q.principal()).map_err(|e| e.to_string())?.mass;
        check("baryonic_ur", &spec, &q, closed)?;
    }
    for _ in 0..50 {
        let n = rng.gen_range(2..5);
        let q = random_q(n, &mut rng);
        let qv = q.principal();
        let nf = n as f64;
        let pairs = 0.5 * nf * (nf - 1.0);
        let alpha = rng.gen_range(0.1..0.9) * qv / nf;
        let alphabar = rng.gen_range(0.01..0.9) * alpha * nf * nf / pairs.powf(1.5);
        let m = rng.gen_range(0.1..3.0);
        let spec = sr(n, m).with_one_body(P::power(alpha, -1.0)).with_pairwise(P::power(-alphabar, -1.0));
        let closed = atomic_mass(n, m, alpha, alphabar, qv).map_err(|e| e.to_string())?;
        check("atomic_mass", &spec, &q, closed)?;
    }
    for _ in 0..50 {
        let n = rng.gen_range(2..7);
        let q = random_q(n, &mut rng);
        let (m, beta) = (rng.gen_range(0.5..2.0), rng.gen_range(0.5..2.0));
        let g = rng.gen_range(1.5..20.0) * gaussian_critical_coupling(n, q.principal());
        let alpha = g * beta * beta / m;
        let spec = nr(n, m).with_pairwise(P::gaussian(alpha, beta));
        let energy = gaussian_spectrum(n, m, alpha, beta, q.principal()).map_err(|e| e.to_string())?.energy;
        check("gaussian_spectrum", &spec, &q, n as f64 * m + energy)?;
    }
    Ok(format!("300 draws, max relative gap {worst:.2e}"))
}

fn dualities() -> Outcome {
    const TOL: f64 = 1e-12;
    let mut worst: f64 = 0.0;
    let mut record = |what: &str, n: usize, a: f64, b: f64| -> Result<(), String> {
        worst = worst.max(rel(a, b));
        ensure(rel(a, b) <= TOL, || format!("{what}, N = {n}: {a} vs {b}"))
    };
    for n in [2usize, 3, 4, 6] {
        let ground = 1.5 * (n - 1) as f64;
        for q in [ground, ground + 2.0] {
            let (m, alpha, beta) = (1.0, 40.0, 0.8);
            let direct = gaussian_spectrum(n, m, alpha, beta, q).map_err(|e| e.to_string())?.energy;
            let dual = duality_map(DualityKind::GaussianDual, n, m, q, |map| {
                gaussian_spectrum(2, map.mass, alpha * map.coupling, beta * map.range_scale, map.q).map(|l| l.energy)
            })
            .map_err(|e| e.to_string())?;
            record("Gaussian dual", n, direct, dual)?;

            for (m, a, b) in [(1.0, 0.2, 0.0), (0.5, 0.1, 0.3), (0.0, 0.0, 0.2)] {
                let direct = linear_mass(n, m, a, b, q).map_err(|e| e.to_string())?.mass;
                let dual = duality_map(DualityKind::LinearDual, n, m, q, |map| {
                    two_body_afm(map.sigma, 1.0, map.mass, map.q, &[P::power(a + map.coupling * b, 1.0)]).map(|s| s.mass)
                })
                .map_err(|e| e.to_string())?;
                record("linear dual", n, direct, dual)?;
            }

            let qn = QuantumNumbers::new(
                std::iter::once((((q - ground) / 2.0) as u32, 0)).chain((1..n - 1).map(|_| (0, 0))).collect(),
            );
            for (m, terms) in [
                (1.0, vec![P::power(0.2, 1.0)]),
                (0.5, vec![P::power(0.3, 1.0), P::power(0.2, -1.0)]),
                (2.0, vec![P::power(0.1, 2.0)]),
            ] {
                let spec = terms.iter().fold(sr(n, m), |s, t| s.with_pairwise(*t));
                let direct = afm_mass(&spec, &qn).map_err(|e| e.to_string())?.mass;
                for kind in [DualityKind::PairwiseSigma(1.0), DualityKind::PairwiseSigma(2.7), DualityKind::PairwiseG(0.4)] {
                    let dual = duality_map(kind, n, m, q, |map: &DualityMap| {
                        two_body_afm(map.sigma, map.coupling, map.mass, map.q, &terms).map(|s| s.mass)
                    })
                    .map_err(|e| e.to_string())?;
                    record("two-body map", n, direct, dual)?;
                }
            }

            let (a, b) = (0.2, 0.3);
            let direct = funnel_nbody_ur(n, a, b, q).map_err(|e| e.to_string())?;
            let dual = duality_map(DualityKind::PairwiseG(1.0), n, 0.0, q, |map| {
                Ok(2.0 * (map.coupling * a * (map.sigma * map.q - map.coupling * b)).sqrt())
            })
            .map_err(|e| e.to_string())?;
            record("funnel", n, direct, dual)?;
        }
    }
    Ok(format!("max relative gap {worst:.2e}"))
}

fn gaussian_criticals() -> Outcome {
    for n in 2..8usize {
        let q = 1.5 * (n - 1) as f64;
        let g_n = gaussian_critical_coupling(n, q);
        // With m = β = 1 the coupling equals the depth.
        let energy = |g: f64| gaussian_level_unchecked(n, 1.0, g, 1.0, q).map(|l| l.energy);
        let (mut lo, mut hi) = (0.9 * g_n, 2.0 * g_n);
        let (e_lo, e_hi) = (energy(lo).map_err(|e| e.to_string())?, energy(hi).map_err(|e| e.to_string())?);
        ensure(e_lo > 0.0 && e_hi < 0.0, || format!("N = {n}: no sign change ({e_lo}, {e_hi})"))?;
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if energy(mid).map_err(|e| e.to_string())? > 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let crossing = 0.5 * (lo + hi);
        ensure(rel(crossing, g_n) <= 1e-8, || format!("N = {n}: zero crossing {crossing} vs {g_n}"))?;
        let next = gaussian_critical_coupling(n + 1, 1.5 * n as f64);
        let ratio = next / g_n;
        let expected = n as f64 / (n + 1) as f64;
        ensure(rel(ratio, expected) <= 4.0 * f64::EPSILON, || format!("ratio {ratio} vs {expected}"))?;
    }
    let g2 = gaussian_critical_coupling(2, 1.5);
    ensure(rel(g2, 9.0 * E / 4.0) <= 1e-15, || format!("g_2 = {g2}"))?;
    Ok(format!("g_2 = {g2:.6} = 9e/4; crossings and ratios for N = 2..7"))
}

fn limits() -> Outcome {
    // Gaussian wells at small range against the oscillator expansion.
    let (n, m, alpha, q) = (3usize, 1.0, 2.0, 3.0);
    let pairs = 3.0;
    let residual = |beta: f64| -> Result<f64, String> {
        let e = gaussian_spectrum(n, m, alpha, beta, q).map_err(|e| e.to_string())?.energy;
        Ok(e + pairs * alpha - (2.0 * alpha * beta * beta * n as f64 / m).sqrt() * q)
    };
    let betas = [0.04, 0.02, 0.01, 0.005];
    let scaled: Vec<f64> = betas.iter().map(|&b| residual(b).map(|r| r / (b * b))).collect::<Result<_, _>>()?;
    for w in scaled.windows(2) {
        ensure(rel(w[0], w[1]) < 0.05, || format!("Gaussian residual not O(β²): {scaled:?}"))?;
    }

    let (k, kbar, nq): (f64, f64, f64) = (0.3, 0.7, 3.0);
    let massless = 1.5 * (2.0 * 3.0 * (k + 3.0 * kbar) * nq * nq).cbrt();
    let mut last = f64::INFINITY;
    for m in [1e-2, 1e-4, 1e-6, 1e-8] {
        let gap = rel(srho_mass(3, m, k, kbar, nq).map_err(|e| e.to_string())?.mass, massless);
        ensure(gap <= last, || format!("no convergence at m = {m}"))?;
        last = gap;
    }
    let at_micro = rel(srho_mass(3, 1e-6, k, kbar, nq).map_err(|e| e.to_string())?.mass, massless);
    ensure(at_micro <= 1e-5, || format!("m = 1e-6 gap {at_micro}"))?;

    let (m, a, b) = (1e3, 0.2, 0.1);
    let spec = nr(3, m).with_one_body(P::power(a, 1.0)).with_pairwise(P::power(b, 1.0));
    let q3 = QuantumNumbers::ground(3);
    let nr_binding = equal_power_mass(&spec, &q3).map_err(|e| e.to_string())?.mass - 3.0 * m;
    let sr_binding = linear_mass(3, m, a, b, q3.principal()).map_err(|e| e.to_string())?.mass - 3.0 * m;
    let gap = rel(sr_binding, nr_binding);
    ensure(gap <= 1e-3, || format!("linear binding {sr_binding} vs {nr_binding}"))?;
    Ok(format!(
        "Gaussian residual/β² ≈ {:.4}; massless gap {at_micro:.1e} at m = 1e-6; linear NR gap {gap:.1e}",
        scaled[scaled.len() - 1]
    ))
}

fn orderings() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut tightest = f64::INFINITY;
    for _ in 0..50 {
        let n = rng.gen_range(2..7);
        let q = 1.5 * (n - 1) as f64;
        let g = rng.gen_range(1.0 + 1e-6..=100.0) * gaussian_critical_coupling(n, q);
        let afm = gaussian_spectrum(n, 1.0, g, 1.0, q).map_err(|e| e.to_string())?.energy;
        let trial = gaussian_trial_bound(&nr(n, 1.0).with_pairwise(P::gaussian(g, 1.0)))
            .map_err(|e| format!("N = {n}, g = {g}: {e}"))?
            .energy;
        let report = OracleReport::ordering(afm, trial);
        ensure(report.is_match(), || format!("N = {n}, g = {g}: trial {trial} above AFM {afm}"))?;
        tightest = tightest.min(afm - trial);
    }

    let b2 = 2.0;
    let b3 = critical_coupling(3, b2);
    ensure(rel(b3, b2 / 3f64.sqrt()) <= 1e-15, || format!("b_3 = {b3}"))?;
    ensure(coulomb_nbody(3, 1.0, b3 * (1.0 - 1e-9), 1.0).is_ok(), || "below b_3 rejected".into())?;
    ensure(coulomb_nbody(3, 1.0, b3 * (1.0 + 1e-9), 1.0).is_err(), || "above b_3 accepted".into())?;

    for n in 2..6usize {
        let q = 1.5 * (n - 1) as f64;
        for i in 1..20 {
            let alpha = i as f64 * 0.1;
            let alphabar = 0.05 * alpha;
            let stable = atomic_is_stable(n, alpha, alphabar, q);
            for m in [1e-2, 1e-1, 1.0, 10.0, 100.0] {
                let outcome = atomic_mass(n, m, alpha, alphabar, q);
                let unstable = matches!(outcome, Err(nbody_afm::Error::UnstableConfiguration(_)));
                ensure(stable != unstable, || format!("N = {n}, α = {alpha}, m = {m}: predicate disagrees"))?;
            }
        }
    }
    Ok(format!("trial below AFM by at least {tightest:.3e}; b_3 = b_2/√3; atomic predicate m-free"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome, Option<Duration>); 8] = [
        ("1 baryon table", table_reproduction, Some(Duration::from_secs(1))),
        ("2 oscillator exactness", ho_exactness, Some(Duration::from_secs(1))),
        ("3 root residuals", root_residuals, Some(Duration::from_secs(1))),
        ("4 closed form vs oracle", oracle_agreement, Some(Duration::from_secs(30))),
        ("5 duality identities", dualities, None),
        ("6 Gaussian critical couplings", gaussian_criticals, None),
        ("7 limits", limits, None),
        ("8 orderings", orderings, None),
    ];
    let mut failures = 0;
    for (name, run, budget) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = match (outcome, budget) {
            (Ok(_), Some(limit)) if elapsed > limit => Err(format!("took {elapsed:.2?}, limit {limit:.0?}")),
            (o, _) => o,
        };
        match outcome {
            Ok(detail) => println!("PASS criterion {name}: {detail} [{elapsed:.2?}]"),
            Err(why) => {
                failures += 1;
                println!("FAIL criterion {name}: {why} [{elapsed:.2?}]");
            }
        }
    }
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
