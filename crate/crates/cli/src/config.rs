//! Flags, the optional JSON config file, and the validated [`RunConfig`].
//!
//! The config file is a flat JSON object whose keys mirror the long flag
//! names (`"alpha"`, `"D0"`, `"M"`, `"n": "0..3"`, ...). Any flag given on the
//! command line wins over the file.

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use ncpspec::{mass_parameter, PotentialKind, PotentialParams, UnitSystem};
use serde::Deserialize;
use serde_json::{Map, Value};

use crate::error::{CliError, CliResult};
use crate::output::Format;

/// Inclusive integer range written `lo..hi` or as a single value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IndexRange {
    pub lo: i64,
    pub hi: i64,
}

impl IndexRange {
    pub fn single(v: i64) -> Self {
        Self { lo: v, hi: v }
    }

    pub fn iter(&self) -> impl Iterator<Item = i64> {
        self.lo..=self.hi
    }

    pub fn len(&self) -> usize {
        (self.hi - self.lo + 1) as usize
    }

    pub fn is_empty(&self) -> bool {
        self.hi < self.lo
    }
}

impl FromStr for IndexRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parse = |t: &str| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| format!("invalid range bound '{t}' in '{s}'"))
        };
        let range = match s.split_once("..") {
            Some((lo, hi)) => {
                let hi = hi.strip_prefix('=').unwrap_or(hi);
                Self {
                    lo: parse(lo)?,
                    hi: parse(hi)?,
                }
            }
            None => Self::single(parse(s)?),
        };
        if range.is_empty() {
            return Err(format!("empty range '{s}'"));
        }
        Ok(range)
    }
}

impl fmt::Display for IndexRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.lo == self.hi {
            write!(f, "{}", self.lo)
        } else {
            write!(f, "{}..{}", self.lo, self.hi)
        }
    }
}

impl<'de> Deserialize<'de> for IndexRange {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(i64),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::Int(v) => Ok(Self::single(v)),
            Raw::Text(s) => s.parse().map_err(serde::de::Error::custom),
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "ncpspec",
    version,
    about = "Exact bound states of non-central potentials, with finite-difference cross-checks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Closed-form energies for every (n, s, m) in the given ranges.
    Spectrum(SpectrumArgs),
    /// Built-in reference table (currently `n2-table1`).
    Table(TableArgs),
    /// Samples of the normalized reduced radial function R(r).
    Wavefunction(WavefunctionArgs),
    /// Compare closed forms with the finite-difference eigensolvers.
    Verify(VerifyArgs),
    /// The pinned physical constants.
    Constants(OutputArgs),
}

#[derive(Debug, Clone, Default, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Write to this file instead of standard output.
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// JSON file with default values for any of the flags.
    #[arg(long)]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Clone, Default, Args)]
pub struct PotentialArgs {
    /// makarov, mod-kratzer-ring, double-ring-kratzer, modified-non-central, ring-oscillator
    #[arg(long)]
    pub potential: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub beta: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub gamma: Option<f64>,
    #[arg(long = "d0", visible_alias = "D0", allow_hyphen_values = true)]
    pub d0: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub r0: Option<f64>,
    #[arg(long = "d", visible_alias = "D", allow_hyphen_values = true)]
    pub d: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub kappa: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub omega: Option<f64>,
    /// Mass parameter 2m/ħ² (dimensionless units only; default 1).
    #[arg(long = "M", allow_hyphen_values = true)]
    pub mass: Option<f64>,
    /// Reduced mass in amu (molecular units only).
    #[arg(long, allow_hyphen_values = true)]
    pub mu: Option<f64>,
    #[arg(long, value_enum)]
    pub units: Option<UnitsArg>,
    /// Radial quantum number, e.g. `2` or `0..3` (inclusive).
    #[arg(long, allow_hyphen_values = true)]
    pub n: Option<IndexRange>,
    #[arg(long, allow_hyphen_values = true)]
    pub s: Option<IndexRange>,
    /// Magnetic quantum number; negative values and ranges like `-2..2` are allowed.
    #[arg(long, allow_hyphen_values = true)]
    pub m: Option<IndexRange>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum UnitsArg {
    Dimensionless,
    Molecular,
}

impl From<UnitsArg> for UnitSystem {
    fn from(u: UnitsArg) -> Self {
        match u {
            UnitsArg::Dimensionless => UnitSystem::Dimensionless,
            UnitsArg::Molecular => UnitSystem::Molecular,
        }
    }
}

#[derive(Debug, Clone, Default, Args)]
pub struct SpectrumArgs {
    #[command(flatten)]
    pub potential: PotentialArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Default, Args)]
pub struct TableArgs {
    #[arg(long)]
    pub preset: Option<String>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Default, Args)]
pub struct WavefunctionArgs {
    #[command(flatten)]
    pub potential: PotentialArgs,
    /// Number of equally spaced samples (default 200).
    #[arg(long)]
    pub samples: Option<usize>,
    #[arg(long = "r-min", allow_hyphen_values = true)]
    pub r_min: Option<f64>,
    /// Defaults to the radius beyond which the neglected norm is below 1e-12.
    #[arg(long = "r-max", allow_hyphen_values = true)]
    pub r_max: Option<f64>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Default, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub potential: PotentialArgs,
    /// Radial intervals on the coarsest grid.
    #[arg(long)]
    pub points: Option<usize>,
    /// Number of grid halvings used for both eigensolvers.
    #[arg(long)]
    pub levels: Option<usize>,
    /// Radial box size; sized from the closed-form level when omitted.
    #[arg(long = "r-max", allow_hyphen_values = true)]
    pub r_max: Option<f64>,
    /// Polar cells on the coarsest grid.
    #[arg(long = "theta-points")]
    pub theta_points: Option<usize>,
    #[command(flatten)]
    pub output: OutputArgs,
}

/// Contents of a `--config` file.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    pub potential: Option<String>,
    pub alpha: Option<f64>,
    pub beta: Option<f64>,
    pub gamma: Option<f64>,
    #[serde(rename = "D0", alias = "d0")]
    pub d0: Option<f64>,
    pub r0: Option<f64>,
    #[serde(rename = "D", alias = "d")]
    pub d: Option<f64>,
    pub a: Option<f64>,
    pub kappa: Option<f64>,
    pub omega: Option<f64>,
    #[serde(rename = "M")]
    pub mass: Option<f64>,
    pub mu: Option<f64>,
    pub units: Option<UnitsArg>,
    pub n: Option<IndexRange>,
    pub s: Option<IndexRange>,
    pub m: Option<IndexRange>,
    pub format: Option<Format>,
    pub output: Option<PathBuf>,
    pub preset: Option<String>,
    pub samples: Option<usize>,
    #[serde(rename = "r_min", alias = "r-min")]
    pub r_min: Option<f64>,
    #[serde(rename = "r_max", alias = "r-max")]
    pub r_max: Option<f64>,
    pub points: Option<usize>,
    pub levels: Option<usize>,
    #[serde(rename = "theta_points", alias = "theta-points")]
    pub theta_points: Option<usize>,
}

impl ConfigFile {
    pub fn load(path: &Path) -> CliResult<Self> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
            context: format!("reading config {}", path.display()),
            source,
        })?;
        serde_json::from_str(&text)
            .map_err(|e| CliError::usage(format!("config {}: {e}", path.display())))
    }
}

/// Which physical system a run uses, and its mass parameter.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MassSetting {
    pub units: UnitSystem,
    pub mass: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct QuantumRanges {
    pub n: IndexRange,
    pub s: IndexRange,
    pub m: IndexRange,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GridOverrides {
    pub points: Option<usize>,
    pub levels: Option<usize>,
    pub r_max: Option<f64>,
    pub theta_points: Option<usize>,
}

impl GridOverrides {
    fn validate(&self) -> CliResult<()> {
        if self.points.is_some_and(|p| p < 3) || self.theta_points.is_some_and(|p| p < 3) {
            return Err(CliError::usage(
                "--points and --theta-points must be at least 3",
            ));
        }
        if self.levels == Some(0) {
            return Err(CliError::usage("--levels must be at least 1"));
        }
        if let Some(r) = self.r_max {
            if !(r > 0.0) || !r.is_finite() {
                return Err(CliError::usage(format!(
                    "--r-max must be positive, got {r}"
                )));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SampleRange {
    pub samples: usize,
    pub r_min: Option<f64>,
    pub r_max: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Task {
    Spectrum {
        potential: PotentialParams,
        mass: MassSetting,
        ranges: QuantumRanges,
    },
    Table {
        preset: Preset,
    },
    Wavefunction {
        potential: PotentialParams,
        mass: MassSetting,
        ranges: QuantumRanges,
        sampling: SampleRange,
    },
    Verify {
        potential: PotentialParams,
        mass: MassSetting,
        ranges: QuantumRanges,
        grid: GridOverrides,
    },
    Constants,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Preset {
    N2Table1,
}

impl FromStr for Preset {
    type Err = CliError;

    fn from_str(s: &str) -> CliResult<Self> {
        match s {
            "n2-table1" => Ok(Preset::N2Table1),
            other => Err(CliError::usage(format!(
                "unknown preset '{other}' (known: n2-table1)"
            ))),
        }
    }
}

/// A fully merged and validated invocation.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub task: Task,
    pub format: Format,
    pub output: Option<PathBuf>,
}

fn load(out: &OutputArgs) -> CliResult<ConfigFile> {
    out.config
        .as_deref()
        .map_or(Ok(ConfigFile::default()), ConfigFile::load)
}

impl RunConfig {
    pub fn from_command(cmd: Command) -> CliResult<Self> {
        let (task, out, file) = match cmd {
            Command::Spectrum(a) => {
                let file = load(&a.output)?;
                let (potential, mass, ranges) = physics(&a.potential, &file)?;
                (
                    Task::Spectrum {
                        potential,
                        mass,
                        ranges,
                    },
                    a.output,
                    file,
                )
            }
            Command::Table(a) => {
                let file = load(&a.output)?;
                let preset = a
                    .preset
                    .or_else(|| file.preset.clone())
                    .ok_or_else(|| CliError::usage("table needs --preset (known: n2-table1)"))?;
                (
                    Task::Table {
                        preset: preset.parse()?,
                    },
                    a.output,
                    file,
                )
            }
            Command::Wavefunction(a) => {
                let file = load(&a.output)?;
                let (potential, mass, ranges) = physics(&a.potential, &file)?;
                if ranges.n.len() * ranges.s.len() * ranges.m.len() != 1 {
                    return Err(CliError::usage(
                        "wavefunction needs a single value for each of --n, --s, --m",
                    ));
                }
                let sampling = SampleRange {
                    samples: a.samples.or(file.samples).unwrap_or(200),
                    r_min: a.r_min.or(file.r_min),
                    r_max: a.r_max.or(file.r_max),
                };
                if sampling.samples < 2 {
                    return Err(CliError::usage("--samples must be at least 2"));
                }
                if let (Some(lo), Some(hi)) = (sampling.r_min, sampling.r_max) {
                    if !(lo < hi) {
                        return Err(CliError::usage(format!(
                            "--r-min {lo} must be below --r-max {hi}"
                        )));
                    }
                }
                if sampling.r_min.is_some_and(|r| r < 0.0) {
                    return Err(CliError::usage("--r-min must be non-negative"));
                }
                (
                    Task::Wavefunction {
                        potential,
                        mass,
                        ranges,
                        sampling,
                    },
                    a.output,
                    file,
                )
            }
            Command::Verify(a) => {
                let file = load(&a.output)?;
                let (potential, mass, ranges) = physics(&a.potential, &file)?;
                let grid = GridOverrides {
                    points: a.points.or(file.points),
                    levels: a.levels.or(file.levels),
                    r_max: a.r_max.or(file.r_max),
                    theta_points: a.theta_points.or(file.theta_points),
                };
                grid.validate()?;
                (
                    Task::Verify {
                        potential,
                        mass,
                        ranges,
                        grid,
                    },
                    a.output,
                    file,
                )
            }
            Command::Constants(a) => {
                let file = load(&a)?;
                (Task::Constants, a, file)
            }
        };
        Ok(Self {
            task,
            format: out.format.or(file.format).unwrap_or_default(),
            output: out.output.or(file.output),
        })
    }
}

/// Merges potential flags over the config file and builds the parameter record.
fn physics(
    args: &PotentialArgs,
    file: &ConfigFile,
) -> CliResult<(PotentialParams, MassSetting, QuantumRanges)> {
    let name = args
        .potential
        .clone()
        .or_else(|| file.potential.clone())
        .ok_or_else(|| CliError::usage("--potential is required"))?;
    let kind = PotentialKind::from_name(&name).ok_or_else(|| {
        let known: Vec<_> = PotentialKind::ALL.iter().map(|k| k.name()).collect();
        CliError::usage(format!(
            "unknown potential '{name}' (known: {})",
            known.join(", ")
        ))
    })?;

    let fields = [
        ("alpha", args.alpha.or(file.alpha)),
        ("beta", args.beta.or(file.beta)),
        ("gamma", args.gamma.or(file.gamma)),
        ("D0", args.d0.or(file.d0)),
        ("r0", args.r0.or(file.r0)),
        ("D", args.d.or(file.d)),
        ("a", args.a.or(file.a)),
        ("kappa", args.kappa.or(file.kappa)),
        ("omega", args.omega.or(file.omega)),
    ];
    let mut obj = Map::new();
    obj.insert("potential".into(), Value::String(kind.name().into()));
    for (key, value) in fields {
        if let Some(v) = value {
            let num = serde_json::Number::from_f64(v)
                .ok_or_else(|| CliError::usage(format!("parameter {key} must be finite")))?;
            obj.insert(key.into(), Value::Number(num));
        }
    }
    let potential: PotentialParams = serde_json::from_value(Value::Object(obj))
        .map_err(|e| CliError::usage(format!("parameters for {}: {e}", kind.name())))?;

    let mass = mass_setting(
        args.units.or(file.units),
        args.mass.or(file.mass),
        args.mu.or(file.mu),
    )?;

    let ranges = QuantumRanges {
        n: args.n.or(file.n).unwrap_or(IndexRange::single(0)),
        s: args.s.or(file.s).unwrap_or(IndexRange::single(0)),
        m: args.m.or(file.m).unwrap_or(IndexRange::single(0)),
    };
    for (label, r) in [("n", ranges.n), ("s", ranges.s)] {
        if r.lo < 0 {
            return Err(CliError::usage(format!(
                "--{label} must be non-negative, got {r}"
            )));
        }
        if r.hi > i64::from(u32::MAX) {
            return Err(CliError::usage(format!("--{label} is out of range: {r}")));
        }
    }
    if ranges.m.lo < i64::from(i32::MIN) || ranges.m.hi > i64::from(i32::MAX) {
        return Err(CliError::usage(format!(
            "--m is out of range: {}",
            ranges.m
        )));
    }
    Ok((potential, mass, ranges))
}

fn mass_setting(
    units: Option<UnitsArg>,
    mass: Option<f64>,
    mu: Option<f64>,
) -> CliResult<MassSetting> {
    let units = units.map(UnitSystem::from).unwrap_or(if mu.is_some() {
        UnitSystem::Molecular
    } else {
        UnitSystem::Dimensionless
    });
    match units {
        UnitSystem::Dimensionless => {
            if mu.is_some() {
                return Err(CliError::usage(
                    "--mu (amu) is not allowed with dimensionless units; use --M",
                ));
            }
            let m = mass.unwrap_or(1.0);
            if !(m > 0.0) || !m.is_finite() {
                return Err(CliError::usage(format!("--M must be positive, got {m}")));
            }
            Ok(MassSetting { units, mass: m })
        }
        UnitSystem::Molecular => {
            if mass.is_some() {
                return Err(CliError::usage(
                    "--M is derived from --mu in molecular units; pass --mu only",
                ));
            }
            let mu = mu.ok_or_else(|| {
                CliError::usage("molecular units need --mu (reduced mass in amu)")
            })?;
            let m = mass_parameter(mu, units).map_err(|e| CliError::usage(e.to_string()))?;
            Ok(MassSetting { units, mass: m })
        }
    }
}
