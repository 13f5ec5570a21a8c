use std::fs::File;
use std::io::{self, BufWriter, Write};

use ncpspec::oracle::{AngularGrid, GridSpec};
use ncpspec::units::CODATA_2018;
use ncpspec::{
    decompose, energy, mass_parameter, radial_wavefunction, verify, PotentialParams,
    QuantumNumbers, UnitSystem,
};
use rayon::prelude::*;

use crate::config::{
    GridOverrides, MassSetting, Preset, QuantumRanges, RunConfig, SampleRange, Task,
};
use crate::error::{CliError, CliResult};
use crate::output::{Cell, Table};

/// Reduced mass of ¹⁴N₂ in amu.
pub const N2_REDUCED_MASS: f64 = 7.003_35;
/// Dissociation energy of N₂ in eV.
pub const N2_D: f64 = 11.9384;
/// Equilibrium bond length of N₂ in Å.
pub const N2_A: f64 = 1.0940;

/// `(n, s, m, reference energy in eV)` for the N₂ table with β = γ = 0.
pub const N2_TABLE1: [(u32, u32, i32, f64); 10] = [
    (0, 0, 0, 0.054_437_03),
    (1, 0, 0, 0.162_077_85),
    (1, 1, 1, 0.163_543_46),
    (2, 0, 0, 0.268_262_81),
    (2, 1, 1, 0.269_708_64),
    (2, 2, 2, 0.273_080_86),
    (3, 0, 0, 0.373_018_04),
    (3, 1, 1, 0.374_444_45),
    (3, 2, 2, 0.377_771_37),
    (3, 3, 3, 0.382_995_50),
];

/// Environment variable capping the worker threads used for batches.
pub const THREADS_ENV: &str = "NCPSPEC_THREADS";

/// What a command produced.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub table: Table,
    /// Cases that did not pass (only `verify` produces any).
    pub failed: usize,
}

impl Report {
    fn ok(table: Table) -> Self {
        Self { table, failed: 0 }
    }
}

pub fn n2_potential() -> PotentialParams {
    PotentialParams::ModifiedNonCentral {
        d: N2_D,
        a: N2_A,
        beta: 0.0,
        gamma: 0.0,
    }
}

/// Computes the result table for `task` without writing anything.
pub fn build(task: &Task) -> CliResult<Report> {
    match task {
        Task::Spectrum {
            potential,
            mass,
            ranges,
        } => spectrum(potential, *mass, ranges).map(Report::ok),
        Task::Table {
            preset: Preset::N2Table1,
        } => n2_table().map(Report::ok),
        Task::Wavefunction {
            potential,
            mass,
            ranges,
            sampling,
        } => {
            let qn = tuples(ranges)[0];
            wavefunction(potential, *mass, qn, sampling).map(Report::ok)
        }
        Task::Verify {
            potential,
            mass,
            ranges,
            grid,
        } => verify_cases(potential, *mass, ranges, grid),
        Task::Constants => Ok(Report::ok(constants())),
    }
}

/// Builds the table, writes it to the configured sink, and turns verification
/// failures into an error after the output is complete.
pub fn run(config: &RunConfig) -> CliResult<()> {
    let report = with_pool(|| build(&config.task))?;
    match &config.output {
        Some(path) => {
            let io_err = |source| CliError::Io {
                context: format!("writing {}", path.display()),
                source,
            };
            let file = File::create(path).map_err(io_err)?;
            let mut w = BufWriter::new(file);
            report.table.write(config.format, &mut w).map_err(io_err)?;
            w.flush().map_err(io_err)?;
        }
        None => {
            let stdout = io::stdout();
            let mut w = stdout.lock();
            report
                .table
                .write(config.format, &mut w)
                .map_err(|source| CliError::Io {
                    context: "writing standard output".into(),
                    source,
                })?;
        }
    }
    if report.failed > 0 {
        return Err(CliError::VerifyFailed(
            report.failed,
            report.table.rows.len(),
        ));
    }
    Ok(())
}

fn with_pool<T: Send>(f: impl FnOnce() -> CliResult<T> + Send) -> CliResult<T> {
    let threads = match std::env::var(THREADS_ENV) {
        Ok(v) => v.trim().parse::<usize>().map_err(|_| {
            CliError::usage(format!(
                "{THREADS_ENV} must be a non-negative integer, got '{v}'"
            ))
        })?,
        Err(_) => 0,
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| CliError::usage(format!("cannot start worker threads: {e}")))?;
    pool.install(f)
}

fn tuples(r: &QuantumRanges) -> Vec<QuantumNumbers> {
    let mut out = Vec::with_capacity(r.n.len() * r.s.len() * r.m.len());
    for n in r.n.iter() {
        for s in r.s.iter() {
            for m in r.m.iter() {
                out.push(QuantumNumbers::new(n as u32, s as u32, m as i32));
            }
        }
    }
    out
}

fn case_error(p: &PotentialParams, qn: QuantumNumbers) -> impl Fn(ncpspec::Error) -> CliError + '_ {
    move |source| CliError::Case {
        case: format!("{} {qn}", p.kind()),
        source,
    }
}

/// Runs `f` over all tuples in parallel and returns results in tuple order;
/// the first failure in that order wins.
fn batch<T: Send>(
    qns: &[QuantumNumbers],
    f: impl Fn(QuantumNumbers) -> CliResult<T> + Sync,
) -> CliResult<Vec<T>> {
    qns.par_iter()
        .map(|&qn| f(qn))
        .collect::<Vec<_>>()
        .into_iter()
        .collect()
}

const SPECTRUM_COLUMNS: [&str; 9] = [
    "potential",
    "n",
    "s",
    "m",
    "l_eff",
    "E",
    "family",
    "mu1",
    "mu3",
];

fn spectrum_row(p: &PotentialParams, mass: f64, qn: QuantumNumbers) -> CliResult<Vec<Cell>> {
    let r = energy(p, mass, qn).map_err(case_error(p, qn))?;
    Ok(vec![
        r.potential.name().into(),
        Cell::Int(qn.n.into()),
        Cell::Int(qn.s.into()),
        Cell::Int(qn.m.into()),
        r.l_eff.value.into(),
        r.energy().into(),
        r.level.family.name().into(),
        r.level.mu1.into(),
        r.level.mu3.into(),
    ])
}

fn spectrum(p: &PotentialParams, mass: MassSetting, ranges: &QuantumRanges) -> CliResult<Table> {
    let mut table = Table::new(SPECTRUM_COLUMNS.to_vec());
    for row in batch(&tuples(ranges), |qn| spectrum_row(p, mass.mass, qn))? {
        table.push(row);
    }
    Ok(table)
}

fn n2_table() -> CliResult<Table> {
    let p = n2_potential();
    let mass = mass_parameter(N2_REDUCED_MASS, UnitSystem::Molecular)?;
    let mut columns = SPECTRUM_COLUMNS.to_vec();
    columns.extend(["E_reference", "deviation"]);
    let mut table = Table::new(columns);
    for (n, s, m, reference) in N2_TABLE1 {
        let qn = QuantumNumbers::new(n, s, m);
        let mut row = spectrum_row(&p, mass, qn)?;
        let e = energy(&p, mass, qn).map_err(case_error(&p, qn))?.energy();
        row.push(reference.into());
        row.push((e - reference).into());
        table.push(row);
    }
    Ok(table)
}

fn wavefunction(
    p: &PotentialParams,
    mass: MassSetting,
    qn: QuantumNumbers,
    sampling: &SampleRange,
) -> CliResult<Table> {
    let closed = energy(p, mass.mass, qn).map_err(case_error(p, qn))?;
    let w = radial_wavefunction(p, mass.mass, qn, &closed).map_err(case_error(p, qn))?;
    let lo = sampling.r_min.unwrap_or(0.0);
    let hi = sampling.r_max.unwrap_or(w.extent);
    if !(lo < hi) {
        return Err(CliError::usage(format!(
            "sampling range [{lo}, {hi}] is empty"
        )));
    }
    let mut table = Table::new(vec!["r", "R"]);
    let last = (sampling.samples - 1) as f64;
    for i in 0..sampling.samples {
        let r = lo + (hi - lo) * i as f64 / last;
        table.push(vec![r.into(), w.eval(r).into()]);
    }
    Ok(table)
}

const VERIFY_COLUMNS: [&str; 16] = [
    "potential",
    "n",
    "s",
    "m",
    "l_eff",
    "l2",
    "l2_oracle",
    "l2_deviation",
    "angular_order",
    "E",
    "E_oracle",
    "E_deviation",
    "radial_order",
    "r_max",
    "E_bracket_form",
    "status",
];

fn verify_cases(
    p: &PotentialParams,
    mass: MassSetting,
    ranges: &QuantumRanges,
    grid: &GridOverrides,
) -> CliResult<Report> {
    let defaults = AngularGrid::default();
    let levels = grid.levels;
    let angular = AngularGrid::new(
        grid.theta_points.unwrap_or(defaults.points),
        levels.unwrap_or(defaults.refinement_levels),
    )?;
    let radial_grid = |qn: QuantumNumbers| -> ncpspec::Result<Option<GridSpec>> {
        let points = grid.points.unwrap_or(GridSpec::DEFAULT_POINTS);
        let levels = levels.unwrap_or(GridSpec::DEFAULT_LEVELS);
        match grid.r_max {
            Some(r_max) => GridSpec::new(r_max, points, levels).map(Some),
            None if grid.points.is_some() || grid.levels.is_some() => {
                let closed = energy(p, mass.mass, qn)?;
                let prob = decompose(p, mass.mass, closed.l_eff.value)?;
                GridSpec::auto(mass.mass, &prob, closed.energy())
                    .with_points(points, levels)
                    .map(Some)
            }
            None => Ok(None),
        }
    };
    let reports = batch(&tuples(ranges), |qn| {
        let g = radial_grid(qn).map_err(case_error(p, qn))?;
        verify(p, mass.mass, qn, g, &angular).map_err(case_error(p, qn))
    })?;

    let mut table = Table::new(VERIFY_COLUMNS.to_vec());
    let mut failed = 0;
    for r in &reports {
        if !r.pass {
            failed += 1;
        }
        table.push(vec![
            r.potential.name().into(),
            Cell::Int(r.qn.n.into()),
            Cell::Int(r.qn.s.into()),
            Cell::Int(r.qn.m.into()),
            r.l_eff.value.into(),
            r.angular.closed_form.into(),
            r.angular.extrapolated.into(),
            r.angular.relative_deviation.into(),
            r.angular.order.into(),
            r.radial.closed_form.into(),
            r.radial.extrapolated.into(),
            r.radial.relative_deviation.into(),
            r.radial.order.into(),
            r.radial_grid.r_max.into(),
            r.alternate_energy.into(),
            (if r.pass { "PASS" } else { "FAIL" }).into(),
        ]);
    }
    Ok(Report { table, failed })
}

fn constants() -> Table {
    let mut table = Table::new(vec!["name", "value", "unit", "release"]);
    for (name, value, unit) in CODATA_2018.table() {
        table.push(vec![
            name.into(),
            Cell::Exact(value),
            unit.into(),
            ncpspec::units::CODATA_RELEASE.into(),
        ]);
    }
    table
}
