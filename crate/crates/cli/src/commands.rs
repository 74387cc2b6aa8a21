//! One function per subcommand.

use nbody_afm::afm::{afm_mass, linear_mass};
use nbody_afm::ho::HarmonicSystem;
use nbody_afm::model::{validate, Kinematics, Masses, PotentialForm, QuantumNumbers, SystemSpec};
use nbody_afm::oracles::{gaussian_trial_bound, verify_afm, OracleReport};
use nbody_afm::special::Matrix;
use nbody_afm::systems::{
    baryon_mass, duality_map, funnel_nbody_ur, gaussian_critical_coupling, gaussian_spectrum, two_body_afm,
    BaryonParams, BaryonVariant, DualityKind,
};
use nbody_afm::Error;
use serde_json::{json, Map, Value};

use crate::input::{Loaded, SpecFile};
use crate::output::{reports_rendered, solution_table, Cell, Rendered, ReportDto, SolutionDto, Table};
use crate::{CliError, Command, SpecArg, VariantArg};

type CmdResult = Result<Rendered, CliError>;

pub fn dispatch(command: Command) -> CmdResult {
    match command {
        Command::Solve(spec) => solve(&spec),
        Command::Ho { spec, add_rest_mass } => ho(&spec, add_rest_mass),
        Command::BaryonTable { lambda, alphas, variant, max_band } => baryon_table(lambda, alphas, variant, max_band),
        Command::Gaussian { spec, max_band, add_rest_mass } => gaussian(&spec, max_band, add_rest_mass),
        Command::DualityCheck { spec, tolerance } => duality_check(&spec, tolerance),
        Command::Verify { spec, tolerance } => verify(&spec, tolerance),
    }
}

fn load(arg: &SpecArg) -> Result<Loaded, CliError> {
    SpecFile::read(&arg.spec)?.load()
}

/// Loads and validates a spec of identical particles.
fn load_valid(arg: &SpecArg) -> Result<(SystemSpec, QuantumNumbers), CliError> {
    let Loaded { spec, q, springs } = load(arg)?;
    if springs.is_some() {
        return Err(CliError::Input("\"k\" and \"kbar\" are only read by the ho command".into()));
    }
    validate(&spec, &q)?;
    Ok((spec, q))
}

fn solve(arg: &SpecArg) -> CmdResult {
    let (spec, q) = load_valid(arg)?;
    let sol = SolutionDto::from(&afm_mass(&spec, &q)?);
    Ok(Rendered::new(serde_json::to_value(sol).expect("serializable"), solution_table(&sol)))
}

fn ho(arg: &SpecArg, add_rest_mass: bool) -> CmdResult {
    let Loaded { spec, q, springs } = load(arg)?;
    if spec.kinematics != Kinematics::Nonrelativistic {
        return Err(Error::UnsupportedCombination("exact oscillator spectra need nonrelativistic kinematics".into()).into());
    }
    let system = match springs {
        None => HarmonicSystem::from_spec(&spec)?,
        Some((k, kbar)) => {
            if spec.terms().next().is_some() {
                return Err(CliError::Input("give either potential terms or \"k\"/\"kbar\", not both".into()));
            }
            if kbar.len() != spec.n || kbar.iter().any(|row| row.len() != spec.n) {
                return Err(Error::DimensionMismatch(format!("kbar must be {0}x{0}", spec.n)).into());
            }
            let masses = match &spec.masses {
                Masses::Identical(m) => vec![*m; spec.n],
                Masses::PerParticle(ms) => ms.clone(),
            };
            HarmonicSystem::new(masses, k, Matrix::from_rows(&kbar))
        }
    };
    let entry = system.energies(&q.modes, None)?;
    let energy = entry.energy + if add_rest_mass { system.masses.iter().sum::<f64>() } else { 0.0 };

    let header: Vec<String> = std::iter::once("energy".to_string())
        .chain((1..=entry.omegas.len()).map(|i| format!("omega_{i}")))
        .collect();
    let mut table = Table { header, rows: Vec::new() };
    table.push(std::iter::once(energy).chain(entry.omegas.iter().copied()).map(Cell::Num).collect());
    let body = json!({ "energy": energy, "omegas": entry.omegas, "rest_mass_included": add_rest_mass });
    Ok(Rendered::new(body, table))
}

fn baryon_table(lambda: f64, alphas: f64, variant: Option<VariantArg>, max_band: u32) -> CmdResult {
    let all = [(BaryonVariant::M0, "M0"), (BaryonVariant::M1, "M1"), (BaryonVariant::M2, "M2")];
    let chosen: Vec<_> = all
        .into_iter()
        .filter(|(v, _)| match variant {
            None => true,
            Some(VariantArg::M0) => *v == BaryonVariant::M0,
            Some(VariantArg::M1) => *v == BaryonVariant::M1,
            Some(VariantArg::M2) => *v == BaryonVariant::M2,
        })
        .map(|(v, name)| BaryonParams::new(lambda, alphas, v).map(|p| (p, name)))
        .collect::<Result<_, _>>()?;

    let mut header = vec!["B", "L"];
    header.extend(chosen.iter().map(|(_, name)| *name));
    let mut table = Table::new(&header);
    let mut rows = Vec::new();
    for band in 0..=max_band {
        for l in (band % 2..=band).step_by(2) {
            let n_tot = (band - l) / 2;
            let mut cells = vec![Cell::Int(band.into()), Cell::Int(l.into())];
            let mut row = Map::new();
            row.insert("B".into(), band.into());
            row.insert("L".into(), l.into());
            for (params, name) in &chosen {
                let mass = baryon_mass(params, n_tot, l)?;
                cells.push(Cell::Fixed(mass, 3));
                row.insert((*name).into(), mass.into());
            }
            table.push(cells);
            rows.push(Value::Object(row));
        }
    }
    Ok(Rendered::new(json!({ "lambda": lambda, "alphas": alphas, "rows": rows }), table))
}

/// `(m, depth, range)` of a single pairwise Gaussian well.
fn single_gaussian(spec: &SystemSpec) -> Option<(f64, f64, f64)> {
    match (spec.one_body.as_slice(), spec.pairwise.as_slice(), spec.identical_mass()) {
        ([], [term], Ok(m)) => match term.form {
            PotentialForm::Gaussian { depth, range } => Some((m, depth, range)),
            PotentialForm::PowerLaw { .. } => None,
        },
        _ => None,
    }
}

fn gaussian(arg: &SpecArg, max_band: u32, add_rest_mass: bool) -> CmdResult {
    let (spec, _) = load_valid(arg)?;
    let (m, alpha, beta) = single_gaussian(&spec).ok_or_else(|| {
        Error::UnsupportedCombination("expected identical particles in a single pairwise Gaussian well".into())
    })?;
    let n = spec.n;
    let coupling = m * alpha / (beta * beta);
    let shift = if add_rest_mass { spec.total_mass() } else { 0.0 };

    let mut table = Table::new(&["B", "Q", "coupling", "critical_coupling", "energy"]);
    let mut levels = Vec::new();
    for band in 0..=max_band {
        let q = 1.5 * (n - 1) as f64 + band as f64;
        let critical = gaussian_critical_coupling(n, q);
        let energy = match gaussian_spectrum(n, m, alpha, beta, q) {
            Ok(level) => Some(level.energy + shift),
            Err(Error::NoBoundState { .. }) => None,
            Err(e) => return Err(e.into()),
        };
        table.push(vec![
            Cell::Int(band.into()),
            Cell::Num(q),
            Cell::Num(coupling),
            Cell::Num(critical),
            energy.map_or(Cell::Text("unbound".into()), Cell::Num),
        ]);
        levels.push(json!({ "B": band, "Q": q, "critical_coupling": critical, "energy": energy }));
    }
    let body = json!({ "coupling": coupling, "rest_mass_included": add_rest_mass, "levels": levels });
    Ok(Rendered::new(body, table))
}

fn power_terms(terms: &[nbody_afm::model::PotentialTerm]) -> Option<Vec<(f64, f64)>> {
    terms
        .iter()
        .map(|t| match t.form {
            PotentialForm::PowerLaw { coefficient, exponent } => Some((coefficient, exponent)),
            PotentialForm::Gaussian { .. } => None,
        })
        .collect()
}

fn duality_check(arg: &SpecArg, tolerance: f64) -> CmdResult {
    let (spec, q) = load_valid(arg)?;
    let m = spec.identical_mass()?;
    let (n, qv) = (spec.n, q.principal());
    let mut reports = Vec::new();
    let mut add = |name: &str, direct: f64, dual: f64| {
        reports.push(ReportDto::new(name, &OracleReport::agreement(direct, dual, tolerance)));
    };

    if let Some((_, alpha, beta)) = single_gaussian(&spec) {
        let direct = gaussian_spectrum(n, m, alpha, beta, qv)?.energy;
        let dual = duality_map(DualityKind::GaussianDual, n, m, qv, |map| {
            gaussian_spectrum(2, map.mass, alpha * map.coupling, beta * map.range_scale, map.q).map(|l| l.energy)
        })?;
        add("gaussian-dual", direct, dual);
    }

    let one = power_terms(&spec.one_body);
    let pair = power_terms(&spec.pairwise);
    if spec.kinematics == Kinematics::Semirelativistic {
        if let (Some(one), Some(pair)) = (&one, &pair) {
            if one.is_empty() {
                let forms: Vec<PotentialForm> = pair.iter().map(|&(c, e)| PotentialForm::power(c, e)).collect();
                let direct = afm_mass(&spec, &q)?.mass;
                for (name, kind) in [("pairwise-sigma", DualityKind::PairwiseSigma(1.0)), ("pairwise-g", DualityKind::PairwiseG(1.0))] {
                    let dual = duality_map(kind, n, m, qv, |map| {
                        two_body_afm(map.sigma, map.coupling, map.mass, map.q, &forms).map(|s| s.mass)
                    })?;
                    add(name, direct, dual);
                }
                if let ([(a, 1.0), (b, -1.0)] | [(b, -1.0), (a, 1.0)], true) = (pair.as_slice(), m == 0.0) {
                    let (a, b) = (*a, *b);
                    let direct = funnel_nbody_ur(n, a, b, qv)?;
                    let dual = duality_map(DualityKind::PairwiseG(1.0), n, 0.0, qv, |map| {
                        Ok(2.0 * (map.coupling * a * (map.sigma * map.q - map.coupling * b)).sqrt())
                    })?;
                    add("funnel", direct, dual);
                }
            }
            let linear = |terms: &[(f64, f64)]| match terms {
                [] => Some(0.0),
                [(c, e)] if *e == 1.0 => Some(*c),
                _ => None,
            };
            if let (Some(a), Some(b)) = (linear(one), linear(pair)) {
                let direct = linear_mass(n, m, a, b, qv)?.mass;
                let dual = duality_map(DualityKind::LinearDual, n, m, qv, |map| {
                    two_body_afm(map.sigma, 1.0, map.mass, map.q, &[PotentialForm::power(a + map.coupling * b, 1.0)])
                        .map(|s| s.mass)
                })?;
                add("linear-dual", direct, dual);
            }
        }
    }
    if reports.is_empty() {
        return Err(Error::UnsupportedCombination("no duality relation applies to this system".into()).into());
    }
    Ok(reports_rendered(reports))
}

fn verify(arg: &SpecArg, tolerance: f64) -> CmdResult {
    let (spec, q) = load_valid(arg)?;
    let mut reports = vec![ReportDto::new("afm-vs-oracle", &verify_afm(&spec, &q, tolerance)?)];
    if single_gaussian(&spec).is_some() && q == QuantumNumbers::ground(spec.n) {
        let afm_energy = afm_mass(&spec, &q)?.mass - spec.total_mass();
        if let Ok(trial) = gaussian_trial_bound(&spec) {
            reports.push(ReportDto::new("trial-bound", &OracleReport::ordering(afm_energy, trial.energy)));
        }
    }
    Ok(reports_rendered(reports))
}
