//! Command runners: each turns a validated config into a [`ResultTable`].

use photomom_core::constants::ev_from_omega;
use photomom_core::{
    cev_check, composite, solve_transmission, ForceModel, MediumBlock, PhotonInput, Source,
    SpectralQuantity, ThermalScenario,
};
use rayon::prelude::*;

use crate::config::{Command, Config, ForceConfig, ForceMode, PolaritonConfig, SweepConfig};
use crate::error::CliError;
use crate::table::ResultTable;

/// Value the anti-reflection interface law `F1 = κ(1 − n)F0` is compared against.
pub const KAPPA_REFERENCE: f64 = 1.0;

fn rows<T, F>(items: &[T], parallel: bool, f: F) -> Result<Vec<Vec<f64>>, CliError>
where
    T: Sync,
    F: Fn(usize, &T) -> Result<Vec<f64>, CliError> + Sync,
{
    if parallel {
        items.par_iter().enumerate().map(|(i, x)| f(i, x)).collect()
    } else {
        items.iter().enumerate().map(|(i, x)| f(i, x)).collect()
    }
}

fn fill(table: &mut ResultTable, data: Vec<Vec<f64>>) -> Result<(), CliError> {
    data.into_iter().try_for_each(|r| table.push(r))
}

fn model_metadata(table: &mut ResultTable) {
    table.meta("ldos_model", "rho_layer = n_layer * rho0, rho0 = 1/(pi c)");
    table.meta("total_photon_number", "mean of the two directional numbers");
    table.meta("interface_values", "two-sided arithmetic mean at each jump");
    table.meta("incidence", "normal, single polarization");
}

pub fn run(command: Command, config: &Config, parallel: bool) -> Result<ResultTable, CliError> {
    config.validate_for(command)?;
    match command {
        Command::Polariton => run_polariton(config.polariton.as_ref().unwrap(), parallel),
        Command::Cavity => run_cavity(config.cavity.as_ref().unwrap(), parallel),
        Command::Force => run_force(config.force.as_ref().unwrap(), parallel),
        Command::Sweep => run_sweep(config.sweep.as_ref().unwrap(), config.force.as_ref().unwrap(), parallel),
    }
}

pub fn run_polariton(cfg: &PolaritonConfig, parallel: bool) -> Result<ResultTable, CliError> {
    let mut table = ResultTable::new(&[
        ("n", "1"),
        ("E_over_hw", "1"),
        ("Ef_over_hw", "1"),
        ("Ed_over_hw", "1"),
        ("p_over_hk0", "1"),
        ("pf_over_hk0", "1"),
        ("pd_over_hk0", "1"),
        ("dmc2_over_hw", "1"),
        ("V_r", "m/s"),
        ("cev_residual", "1"),
        ("exotic", "1"),
    ]);
    let photon = PhotonInput::from_energy_ev(cfg.photon_energy_ev)?;
    let conv = cfg.convention();
    let hw = photon.energy();
    let hk0 = photon.momentum();
    let data = rows(&cfg.n_values(), parallel, |i, &n| {
        let block = MediumBlock::new(n, cfg.mass_kg, cfg.length_m).map_err(|e| CliError::at_row(i, e))?;
        let sol = solve_transmission(&photon, &block, conv).map_err(|e| CliError::at_row(i, e))?;
        let (before, after) = cev_check(&photon, &block, &sol);
        Ok(vec![
            n,
            sol.energy / hw,
            sol.energy_field / hw,
            sol.energy_dipole / hw,
            sol.momentum / hk0,
            sol.momentum_field / hk0,
            sol.momentum_dipole / hk0,
            sol.delta_m * photomom_core::constants::C.powi(2) / hw,
            sol.recoil_velocity,
            ((after - before) / before).abs(),
            if sol.is_exotic() { 1.0 } else { 0.0 },
        ])
    })?;
    fill(&mut table, data)?;
    table.meta("command", "polariton");
    table.meta("convention", conv.name());
    table.meta("photon_energy_ev", cfg.photon_energy_ev);
    table.meta("exotic_rows", table.column("exotic").unwrap().iter().filter(|v| **v > 0.0).count());
    Ok(table)
}

pub fn run_cavity(cfg: &crate::config::CavityConfig, parallel: bool) -> Result<ResultTable, CliError> {
    let mut table = ResultTable::new(&[
        ("energy_ev", "eV"),
        ("omega", "rad/s"),
        ("in1", "1"),
        ("in3", "1"),
        ("n1p", "1"),
        ("n1m", "1"),
        ("n2p", "1"),
        ("n2m", "1"),
        ("n3p", "1"),
        ("n3m", "1"),
        ("R1_sq", "1"),
        ("T_power", "1"),
        ("identity_residual", "1"),
    ]);
    let stack = cfg.stack()?;
    let grid = cfg.grid()?;
    let (left, right): (Source, Source) = (cfg.left.into(), cfg.right.into());
    let data = rows(&grid.omegas(), parallel, |i, &omega| {
        let in1 = left.occupation(omega);
        let in3 = right.occupation(omega);
        let cc = composite(&stack, omega).map_err(|e| CliError::at_row(i, e))?;
        let pn = photomom_core::cavity::photon_numbers_with(&stack, &cc, in1, in3)
            .map_err(|e| CliError::at_row(i, e))?;
        let r = cc.reflectance();
        let t = stack.n3() / stack.n1() * cc.transmission_sq();
        let mut row = vec![ev_from_omega(omega), omega, in1, in3];
        row.extend(pn.as_array());
        row.extend([r, t, r + t - 1.0]);
        Ok(row)
    })?;
    fill(&mut table, data)?;
    table.meta("command", "cavity");
    model_metadata(&mut table);
    Ok(table)
}

const STACK_COLUMNS: [(&str, &str); 14] = [
    ("in1", "1"),
    ("in3", "1"),
    ("zcf1", "N/(m^2 rad/s)"),
    ("tcf1", "N/(m^2 rad/s)"),
    ("ncf1", "N/(m^2 rad/s)"),
    ("zcf2", "N/(m^2 rad/s)"),
    ("tcf2", "N/(m^2 rad/s)"),
    ("ncf2", "N/(m^2 rad/s)"),
    ("net_impulse", "N/(rad/s)"),
    ("net_pressure", "N/(rad/s)"),
    ("method_residual", "N/(rad/s)"),
    ("F0", "N/(rad/s)"),
    ("F_over_F0", "1"),
    ("R1_sq", "1"),
];

const AR_COLUMNS: [(&str, &str); 9] = [
    ("in1", "1"),
    ("n", "1"),
    ("F1", "N/(rad/s)"),
    ("F2", "N/(rad/s)"),
    ("F1_plus_F2", "N/(rad/s)"),
    ("zcf1", "N/(rad/s)"),
    ("zcf2", "N/(rad/s)"),
    ("F0", "N/(rad/s)"),
    ("kappa", "1"),
];

fn force_row(cfg: &ForceConfig, model: &ForceModel, omega: f64, row: usize) -> Result<Vec<f64>, CliError> {
    let at = |e| CliError::at_row(row, e);
    let stack = cfg.stack().map_err(|e| match e {
        CliError::Config(m) => CliError::Config(format!("row {row}: {m}")),
        other => other,
    })?;
    let left: Source = cfg.left.into();
    let right: Source = cfg.right.into();
    let in1 = left.occupation(omega);
    let in3 = right.occupation(omega);
    let mut out = vec![ev_from_omega(omega), omega];
    match cfg.mode {
        ForceMode::Stack => {
            let sf = model.spectral_force(&stack, omega, in1, in3, cfg.area_m2).map_err(at)?;
            let r = composite(&stack, omega).map_err(at)?.reflectance();
            let [a, b] = sf.interfaces;
            out.extend([
                in1,
                in3,
                a.zcf,
                a.tcf,
                a.ncf,
                b.zcf,
                b.tcf,
                b.ncf,
                sf.net_impulse,
                sf.net_pressure,
                sf.net_impulse - sf.net_pressure,
                sf.f0,
                sf.ratio_to_f0,
                r,
            ]);
        }
        ForceMode::Ar => {
            let n = stack.n2();
            let ar = model.ar_interface_forces(n, omega, in1, cfg.area_m2).map_err(at)?;
            let kappa = ar.kappa.ok_or_else(|| {
                CliError::Config(format!("row {row}: anti-reflection mode needs n > 1 and a lit left source"))
            })?;
            out.extend([
                in1,
                n,
                ar.f1,
                ar.f2,
                ar.f1 + ar.f2,
                ar.zero_point[0],
                ar.zero_point[1],
                ar.f0,
                kappa,
            ]);
        }
    }
    Ok(out)
}

fn force_columns(mode: ForceMode) -> Vec<(&'static str, &'static str)> {
    let mut cols = vec![("energy_ev", "eV"), ("omega", "rad/s")];
    match mode {
        ForceMode::Stack => cols.extend(STACK_COLUMNS),
        ForceMode::Ar => cols.extend(AR_COLUMNS),
    }
    cols
}

fn kappa_metadata(table: &mut ResultTable) {
    if let Some(k) = table.column("kappa").and_then(|k| k.first().copied()) {
        table.meta("kappa_measured", format!("{k:.16e}"));
        table.meta("kappa_reference", KAPPA_REFERENCE);
        table.meta("kappa_over_reference", format!("{:.16e}", k / KAPPA_REFERENCE));
    }
}

pub fn run_force(cfg: &ForceConfig, parallel: bool) -> Result<ResultTable, CliError> {
    let model = ForceModel::default();
    let mut table = ResultTable::new(&force_columns(cfg.mode));
    let grid = cfg.grid()?;
    let data = rows(&grid.omegas(), parallel, |i, &omega| force_row(cfg, &model, omega, i))?;
    fill(&mut table, data)?;
    table.meta("command", "force");
    table.meta("mode", format!("{:?}", cfg.mode).to_lowercase());
    model_metadata(&mut table);
    if cfg.mode == ForceMode::Stack {
        let stack = cfg.stack()?;
        table.meta("warning_eps1_ne_eps3", !stack.symmetric());
        let scenario = ThermalScenario {
            left: cfg.left.into(),
            right: cfg.right.into(),
            grid,
            area: cfg.area_m2,
        };
        for (key, q) in [
            ("integrated_net_force_N", SpectralQuantity::NetForce),
            ("integrated_energy_flux_W_per_m2", SpectralQuantity::EnergyFlux),
        ] {
            let v = model.integrate_spectrum(&scenario, &stack, q, parallel)?;
            table.meta(key, format!("{v:.16e}"));
        }
    } else {
        kappa_metadata(&mut table);
    }
    Ok(table)
}

pub fn run_sweep(sweep: &SweepConfig, base: &ForceConfig, parallel: bool) -> Result<ResultTable, CliError> {
    let model = ForceModel::default();
    let mut cols = vec![(sweep.parameter.column(), sweep.parameter.unit())];
    cols.extend(force_columns(base.mode));
    let mut table = ResultTable::new(&cols);
    let data = rows(&sweep.values(), parallel, |i, &value| {
        let cfg = base.with_parameter(sweep.parameter, value, sweep.energy_ev);
        cfg.validate()
            .map_err(|e| CliError::Config(format!("row {i}: {e}")))?;
        let omega = cfg.grid()?.omega(0);
        let mut row = vec![value];
        row.extend(force_row(&cfg, &model, omega, i)?);
        Ok(row)
    })?;
    fill(&mut table, data)?;
    table.meta("command", "sweep");
    table.meta("parameter", sweep.parameter.column());
    table.meta("mode", format!("{:?}", base.mode).to_lowercase());
    model_metadata(&mut table);
    if base.mode == ForceMode::Ar {
        kappa_metadata(&mut table);
    } else {
        let asymmetric = sweep.values().iter().any(|&v| {
            let cfg = base.with_parameter(sweep.parameter, v, sweep.energy_ev);
            cfg.eps1 != cfg.eps3
        });
        table.meta("warning_eps1_ne_eps3", asymmetric);
    }
    Ok(table)
}
