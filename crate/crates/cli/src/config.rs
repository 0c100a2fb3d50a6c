//! Run configuration: a TOML file with one section per command, plus
//! `key=value` overrides from the command line. Parsing is strict.

use std::path::Path;

use photomom_core::constants::omega_from_ev;
use photomom_core::{LayerStack, MomentumConvention, OmegaGrid, Source};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Command {
    Polariton,
    Cavity,
    Force,
    Sweep,
}

impl Command {
    pub fn section(&self) -> &'static str {
        match self {
            Self::Polariton => "polariton",
            Self::Cavity => "cavity",
            Self::Force => "force",
            Self::Sweep => "sweep",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub polariton: Option<PolaritonConfig>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cavity: Option<CavityConfig>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub force: Option<ForceConfig>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sweep: Option<SweepConfig>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ConventionName {
    Abraham,
    Minkowski,
    General,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolaritonConfig {
    pub photon_energy_ev: f64,
    pub mass_kg: f64,
    pub length_m: f64,
    pub convention: ConventionName,
    /// Required for `convention = "general"` (kg·m/s).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub general_momentum: Option<f64>,
    pub n_min: f64,
    pub n_max: f64,
    pub n_points: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "lowercase", deny_unknown_fields)]
pub enum SourceConfig {
    /// Kelvin.
    Temperature(f64),
    Occupation(f64),
}

impl From<SourceConfig> for Source {
    fn from(s: SourceConfig) -> Self {
        match s {
            SourceConfig::Temperature(t) => Source::Temperature(t),
            SourceConfig::Occupation(n) => Source::Occupation(n),
        }
    }
}

impl SourceConfig {
    fn is_dark(&self) -> bool {
        matches!(self, Self::Temperature(t) | Self::Occupation(t) if *t == 0.0)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CavityConfig {
    pub eps1: f64,
    pub eps2: f64,
    pub eps3: f64,
    pub d2_m: f64,
    pub energy_ev_min: f64,
    pub energy_ev_max: f64,
    pub points: usize,
    pub left: SourceConfig,
    pub right: SourceConfig,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ForceMode {
    /// Three-layer stack with Fresnel interfaces.
    #[default]
    Stack,
    /// Slab of index √eps2 in vacuum with ideal anti-reflection coatings.
    Ar,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ForceConfig {
    #[serde(default)]
    pub mode: ForceMode,
    pub eps1: f64,
    pub eps2: f64,
    pub eps3: f64,
    pub d2_m: f64,
    pub energy_ev_min: f64,
    pub energy_ev_max: f64,
    pub points: usize,
    pub left: SourceConfig,
    pub right: SourceConfig,
    pub area_m2: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SweepParameter {
    Eps1,
    Eps2,
    Eps3,
    /// Sets eps2 = n².
    N2,
    D2M,
    EnergyEv,
    AreaM2,
}

impl SweepParameter {
    pub fn column(&self) -> &'static str {
        match self {
            Self::Eps1 => "eps1",
            Self::Eps2 => "eps2",
            Self::Eps3 => "eps3",
            Self::N2 => "n2",
            Self::D2M => "d2_m",
            Self::EnergyEv => "energy_ev",
            Self::AreaM2 => "area_m2",
        }
    }

    pub fn unit(&self) -> &'static str {
        match self {
            Self::D2M => "m",
            Self::EnergyEv => "eV",
            Self::AreaM2 => "m^2",
            _ => "1",
        }
    }
}

/// Varies one parameter of the `[force]` section at a single photon energy.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepConfig {
    pub parameter: SweepParameter,
    pub start: f64,
    pub stop: f64,
    pub points: usize,
    /// Photon energy of the evaluation; ignored when sweeping `energy_ev`.
    pub energy_ev: f64,
}

fn check(ok: bool, what: &str) -> Result<(), CliError> {
    if ok {
        Ok(())
    } else {
        Err(CliError::Config(what.to_string()))
    }
}

fn finite(name: &str, v: f64) -> Result<(), CliError> {
    check(v.is_finite(), &format!("{name} must be finite, got {v}"))
}

/// Grid endpoints `start..=stop` with `points` samples.
pub fn linspace(start: f64, stop: f64, points: usize) -> Vec<f64> {
    if points == 1 {
        return vec![start];
    }
    (0..points)
        .map(|i| {
            if i + 1 == points {
                stop
            } else {
                start + (stop - start) * i as f64 / (points - 1) as f64
            }
        })
        .collect()
}

fn check_grid(lo: f64, hi: f64, points: usize, what: &str) -> Result<(), CliError> {
    finite(what, lo)?;
    finite(what, hi)?;
    check(points >= 1, &format!("{what}: points must be >= 1"))?;
    check(
        points == 1 || hi > lo,
        &format!("{what}: max must exceed min when points > 1"),
    )
}

fn check_source(name: &str, s: &SourceConfig) -> Result<(), CliError> {
    let v = match s {
        SourceConfig::Temperature(v) | SourceConfig::Occupation(v) => *v,
    };
    finite(name, v)?;
    check(v >= 0.0, &format!("{name} must be >= 0, got {v}"))
}

impl PolaritonConfig {
    pub fn validate(&self) -> Result<(), CliError> {
        for (name, v) in [
            ("photon_energy_ev", self.photon_energy_ev),
            ("mass_kg", self.mass_kg),
            ("length_m", self.length_m),
        ] {
            finite(name, v)?;
            check(v > 0.0, &format!("{name} must be > 0, got {v}"))?;
        }
        check_grid(self.n_min, self.n_max, self.n_points, "n grid")?;
        check(self.n_min >= 1.0, &format!("n_min must be >= 1, got {}", self.n_min))?;
        match (self.convention, self.general_momentum) {
            (ConventionName::General, None) => Err(CliError::Config(
                "convention \"general\" requires general_momentum".into(),
            )),
            (ConventionName::General, Some(p)) => {
                finite("general_momentum", p)?;
                check(p >= 0.0, "general_momentum must be >= 0")
            }
            (_, Some(_)) => Err(CliError::Config(
                "general_momentum is only valid with convention \"general\"".into(),
            )),
            (_, None) => Ok(()),
        }
    }

    pub fn convention(&self) -> MomentumConvention {
        match self.convention {
            ConventionName::Abraham => MomentumConvention::Abraham,
            ConventionName::Minkowski => MomentumConvention::Minkowski,
            ConventionName::General => MomentumConvention::General(self.general_momentum.unwrap_or(0.0)),
        }
    }

    pub fn n_values(&self) -> Vec<f64> {
        linspace(self.n_min, self.n_max, self.n_points)
    }
}

fn check_stack(eps: [f64; 3], d2: f64) -> Result<(), CliError> {
    for (name, e) in ["eps1", "eps2", "eps3"].iter().zip(eps) {
        finite(name, e)?;
        check(e >= 1.0, &format!("{name} must be >= 1, got {e}"))?;
    }
    finite("d2_m", d2)?;
    check(d2 > 0.0, &format!("d2_m must be > 0, got {d2}"))
}

fn energy_grid(lo: f64, hi: f64, points: usize) -> Result<OmegaGrid, CliError> {
    check(lo > 0.0, &format!("energy_ev_min must be > 0, got {lo}"))?;
    OmegaGrid::new(omega_from_ev(lo), omega_from_ev(hi), points).map_err(CliError::from)
}

impl CavityConfig {
    pub fn validate(&self) -> Result<(), CliError> {
        check_stack([self.eps1, self.eps2, self.eps3], self.d2_m)?;
        check_grid(self.energy_ev_min, self.energy_ev_max, self.points, "energy grid")?;
        check(self.energy_ev_min > 0.0, "energy_ev_min must be > 0")?;
        check_source("left", &self.left)?;
        check_source("right", &self.right)
    }

    pub fn stack(&self) -> Result<LayerStack, CliError> {
        Ok(LayerStack::new(self.eps1, self.eps2, self.eps3, self.d2_m)?)
    }

    pub fn energies(&self) -> Vec<f64> {
        linspace(self.energy_ev_min, self.energy_ev_max, self.points)
    }

    pub fn grid(&self) -> Result<OmegaGrid, CliError> {
        energy_grid(self.energy_ev_min, self.energy_ev_max, self.points)
    }
}

impl ForceConfig {
    pub fn validate(&self) -> Result<(), CliError> {
        check_stack([self.eps1, self.eps2, self.eps3], self.d2_m)?;
        check_grid(self.energy_ev_min, self.energy_ev_max, self.points, "energy grid")?;
        check(self.energy_ev_min > 0.0, "energy_ev_min must be > 0")?;
        check_source("left", &self.left)?;
        check_source("right", &self.right)?;
        finite("area_m2", self.area_m2)?;
        check(self.area_m2 > 0.0, "area_m2 must be > 0")?;
        if self.mode == ForceMode::Ar {
            check(self.eps2 > 1.0, "mode \"ar\" requires eps2 > 1")?;
            check(self.right.is_dark(), "mode \"ar\" requires a dark right source")?;
        }
        Ok(())
    }

    pub fn stack(&self) -> Result<LayerStack, CliError> {
        Ok(LayerStack::new(self.eps1, self.eps2, self.eps3, self.d2_m)?)
    }

    pub fn energies(&self) -> Vec<f64> {
        linspace(self.energy_ev_min, self.energy_ev_max, self.points)
    }

    pub fn grid(&self) -> Result<OmegaGrid, CliError> {
        energy_grid(self.energy_ev_min, self.energy_ev_max, self.points)
    }

    /// Copy with `parameter` set to `value` and the grid collapsed to `energy_ev`.
    pub fn with_parameter(&self, parameter: SweepParameter, value: f64, energy_ev: f64) -> Self {
        let mut out = self.clone();
        out.energy_ev_min = energy_ev;
        out.energy_ev_max = energy_ev;
        out.points = 1;
        match parameter {
            SweepParameter::Eps1 => out.eps1 = value,
            SweepParameter::Eps2 => out.eps2 = value,
            SweepParameter::Eps3 => out.eps3 = value,
            SweepParameter::N2 => out.eps2 = value * value,
            SweepParameter::D2M => out.d2_m = value,
            SweepParameter::EnergyEv => {
                out.energy_ev_min = value;
                out.energy_ev_max = value;
            }
            SweepParameter::AreaM2 => out.area_m2 = value,
        }
        out
    }
}

impl SweepConfig {
    pub fn validate(&self) -> Result<(), CliError> {
        check_grid(self.start, self.stop, self.points, "sweep")?;
        finite("energy_ev", self.energy_ev)?;
        check(self.energy_ev > 0.0, "sweep energy_ev must be > 0")
    }

    pub fn values(&self) -> Vec<f64> {
        linspace(self.start, self.stop, self.points)
    }
}

impl Config {
    /// Reads a TOML config, or the `config` object embedded in a JSON result.
    pub fn load(path: &Path, overrides: &[String], command: Command) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Config(format!("cannot read {}: {e}", path.display())))?;
        let is_json = path.extension().is_some_and(|e| e.eq_ignore_ascii_case("json"));
        let mut table = if is_json {
            let mut value: serde_json::Value = serde_json::from_str(&text)
                .map_err(|e| CliError::Config(format!("{}: {e}", path.display())))?;
            if let Some(embedded) = value.get_mut("config") {
                value = embedded.take();
            }
            toml::Table::deserialize(value).map_err(|e| CliError::Config(format!("{}: {e}", path.display())))?
        } else {
            text.parse::<toml::Table>()
                .map_err(|e| CliError::Config(format!("{}: {}", path.display(), one_line(&e.to_string()))))?
        };
        apply_overrides(&mut table, overrides, command)?;
        let config: Config = toml::Value::Table(table)
            .try_into()
            .map_err(|e: toml::de::Error| CliError::Config(one_line(&e.to_string())))?;
        config.validate_for(command)?;
        Ok(config)
    }

    pub fn validate_for(&self, command: Command) -> Result<(), CliError> {
        let missing = |s: &str| CliError::Config(format!("missing [{s}] section"));
        match command {
            Command::Polariton => self.polariton.as_ref().ok_or_else(|| missing("polariton"))?.validate(),
            Command::Cavity => self.cavity.as_ref().ok_or_else(|| missing("cavity"))?.validate(),
            Command::Force => self.force.as_ref().ok_or_else(|| missing("force"))?.validate(),
            Command::Sweep => {
                self.sweep.as_ref().ok_or_else(|| missing("sweep"))?.validate()?;
                self.force.as_ref().ok_or_else(|| missing("force"))?.validate()
            }
        }
    }
}

fn one_line(s: &str) -> String {
    s.split_whitespace().collect::<Vec<_>>().join(" ")
}

/// Applies `key=value` or `section.key=value`; a bare key targets the
/// command's own section. Values use TOML syntax, falling back to a string.
pub fn apply_overrides(table: &mut toml::Table, overrides: &[String], command: Command) -> Result<(), CliError> {
    for item in overrides {
        let (key, raw) = item
            .split_once('=')
            .ok_or_else(|| CliError::Config(format!("override {item:?} is not key=value")))?;
        let (section, field) = key.trim().split_once('.').unwrap_or((command.section(), key.trim()));
        let value = format!("v = {}", raw.trim())
            .parse::<toml::Table>()
            .ok()
            .and_then(|mut t| t.remove("v"))
            .unwrap_or_else(|| toml::Value::String(raw.trim().to_string()));
        let entry = table
            .entry(section.to_string())
            .or_insert_with(|| toml::Value::Table(toml::Table::new()));
        let sec = entry
            .as_table_mut()
            .ok_or_else(|| CliError::Config(format!("{section} is not a section")))?;
        sec.insert(field.to_string(), value);
    }
    Ok(())
}
