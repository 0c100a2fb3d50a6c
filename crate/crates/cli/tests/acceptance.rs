//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::f64::consts::{PI, TAU};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::Instant;

use photomom_core::constants::{omega_from_ev, C, EV};
use photomom_core::{
    cev_check, composite, mass_transfer_cube, photon_numbers, pressure, solve_transmission, ForceModel,
    LayerStack, MediumBlock, MomentumConvention, PhotonInput,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const REL: f64 = 1e-12;

type Criterion = (&'static str, fn() -> Outcome);
const AREA: f64 = 1e-4;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn rel(a: f64, b: f64) -> f64 {
    if a == b {
        0.0
    } else {
        (a - b).abs() / b.abs()
    }
}

fn log_uniform(rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> f64 {
    (rng.gen_range(lo.ln()..hi.ln())).exp()
}

fn random_stack(rng: &mut ChaCha8Rng, symmetric: bool) -> (LayerStack, f64) {
    let e1 = rng.gen_range(1.0..16.0);
    let e2 = rng.gen_range(1.0..16.0);
    let e3 = if symmetric { e1 } else { rng.gen_range(1.0..16.0) };
    let d2 = log_uniform(rng, 10e-9, 100e-6);
    let omega = omega_from_ev(log_uniform(rng, 0.01, 10.0));
    (LayerStack::new(e1, e2, e3, d2).unwrap(), omega)
}

/// Force scale used for relative comparisons of net forces near zero.
fn force_scale(stack: &LayerStack, omega: f64, in1: f64, in3: f64) -> f64 {
    let rho = ForceModel::default().ldos(stack).rho;
    let rho_max = rho.iter().cloned().fold(0.0, f64::max);
    AREA * pressure(rho_max, in1.max(in3), omega)
}

fn ac1_table_closure() -> Outcome {
    let photon = PhotonInput::from_energy_ev(1.0).unwrap();
    let block = MediumBlock::new(2.0, 1.0, 0.1).unwrap();
    let hw = photon.energy();
    let hk0 = photon.momentum();
    let m = solve_transmission(&photon, &block, MomentumConvention::Minkowski).unwrap();
    let errs = [
        rel(m.energy, 4.0 * hw),
        rel(m.energy_dipole, 3.0 * hw),
        rel(m.energy_dipole / EV, 3.0),
        rel(m.momentum, 2.0 * hk0),
        rel(m.momentum_dipole, 1.5 * hk0),
    ];
    let worst = errs.iter().cloned().fold(0.0, f64::max);
    let a = solve_transmission(&photon, &block, MomentumConvention::Abraham).unwrap();
    let abraham_exact = a.energy_dipole == 0.0 && a.momentum == hk0 / 2.0 && a.momentum_dipole == 0.0;
    outcome(
        worst < REL && abraham_exact,
        format!("Minkowski max rel err {worst:.2e}; Abraham E_d = {:e}, p/hk0 = {}", a.energy_dipole, a.momentum / hk0),
    )
}

fn ac2_conservation() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut worst = [0.0f64; 4];
    let mut failures = 0;
    for _ in 0..10_000 {
        let photon = PhotonInput::from_energy_ev(rng.gen_range(0.1..10.0)).unwrap();
        let n = rng.gen_range(1.0..3.0);
        let mass = log_uniform(&mut rng, 1e-6, 1e3);
        let block = MediumBlock::new(n, mass, 0.01).unwrap();
        let hw = photon.energy();
        let hk0 = photon.momentum();
        let conv = match rng.gen_range(0..3) {
            0 => MomentumConvention::Abraham,
            1 => MomentumConvention::Minkowski,
            _ => MomentumConvention::General(rng.gen_range(0.1 * hk0 / n..1.5 * n * hk0)),
        };
        let Ok(sol) = solve_transmission(&photon, &block, conv) else {
            failures += 1;
            continue;
        };
        let mc2 = mass * C * C;
        let eq1 = rel(sol.energy + sol.recoil_mass * C * C, hw + mc2);
        let eq2 = (hk0 - sol.momentum - sol.recoil_mass * sol.recoil_velocity).abs() / hk0;
        let before = hw * C / (hw + mc2);
        let after = (sol.energy * sol.velocity + sol.recoil_mass * C * C * sol.recoil_velocity)
            / (sol.energy + sol.recoil_mass * C * C);
        let eq3 = rel(after, before);
        let (b, a) = cev_check(&photon, &block, &sol);
        let eq3_op = rel(a, b).max(rel(b, before));
        for (w, v) in worst.iter_mut().zip([eq1, eq2, eq3, eq3_op]) {
            *w = w.max(v);
        }
    }
    let ok = failures == 0 && worst.iter().all(|&w| w < REL);
    outcome(
        ok,
        format!(
            "10^4 samples, infeasible {failures}; max rel residual energy {:.2e}, momentum {:.2e}, CEV {:.2e}, CEV(op) {:.2e}",
            worst[0], worst[1], worst[2], worst[3]
        ),
    )
}

fn ac3_cube() -> Outcome {
    let side = mass_transfer_cube(3.0 * EV / (C * C), 1000.0).unwrap();
    let dev = rel(side, 2e-13);
    outcome(dev < 0.15, format!("side {side:.4e} m, {:.1}% from 2e-13 m", 100.0 * dev))
}

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_photomom"))
}

fn configs() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("configs")
}

fn parse_csv(text: &str) -> (Vec<String>, Vec<Vec<f64>>) {
    let mut lines = text.lines().filter(|l| !l.starts_with('#'));
    let header = lines.next().unwrap_or_default().split(',').map(String::from).collect();
    lines.next();
    let rows = lines.map(|l| l.split(',').map(|v| v.parse().unwrap()).collect()).collect();
    (header, rows)
}

fn ac4_fig2() -> Outcome {
    let out = bin()
        .args(["polariton", "--config"])
        .arg(configs().join("polariton.toml"))
        .output()
        .unwrap();
    if !out.status.success() {
        return outcome(false, String::from_utf8_lossy(&out.stderr).to_string());
    }
    let (h, rows) = parse_csv(&String::from_utf8(out.stdout).unwrap());
    let idx = |name: &str| h.iter().position(|c| c == name).unwrap();
    let (n_i, e_i, ef_i, p_i, pf_i) = (idx("n"), idx("E_over_hw"), idx("Ef_over_hw"), idx("p_over_hk0"), idx("pf_over_hk0"));
    let mut worst = 0.0f64;
    for r in &rows {
        let n = r[n_i];
        worst = worst.max(rel(r[e_i], n * n)).max(rel(r[ef_i], 1.0)).max(rel(r[p_i], n)).max(rel(r[pf_i], 1.0 / n));
    }
    let spans = rows.first().map(|r| r[n_i]) == Some(1.0) && rows.last().map(|r| r[n_i]) == Some(3.0);
    // Shapes: total energy and momentum rise, field momentum falls.
    let shapes = rows.windows(2).all(|w| w[1][e_i] > w[0][e_i] && w[1][p_i] > w[0][p_i] && w[1][pf_i] < w[0][pf_i]);
    outcome(
        worst < REL && spans && shapes && rows.len() == 201,
        format!("{} rows over n in [1, 3]; max rel err {worst:.2e}; monotone shapes {shapes}", rows.len()),
    )
}

fn ac5_lossless() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut worst = 0.0f64;
    let mut worst_sym = 0.0f64;
    for i in 0..10_000 {
        let symmetric = i % 4 == 0;
        let (stack, omega) = random_stack(&mut rng, symmetric);
        let cc = composite(&stack, omega).unwrap();
        let general = (cc.reflectance() + stack.n3() / stack.n1() * cc.transmission_sq() - 1.0).abs();
        worst = worst.max(general);
        if symmetric {
            worst_sym = worst_sym.max((cc.reflectance() + cc.transmission_sq() - 1.0).abs());
        }
    }
    outcome(
        worst < REL && worst_sym < REL,
        format!("10^4 stacks; max |R|^2 + (n3/n1)|T1T2|^2 - 1 = {worst:.2e}; eps1 = eps3 subset {worst_sym:.2e}"),
    )
}

fn ac6_betweenness() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let model = ForceModel::default();
    let mut violations = 0;
    let mut eq_worst = 0.0f64;
    let mut net_worst = 0.0f64;
    for i in 0..10_000 {
        let (stack, omega) = random_stack(&mut rng, i % 2 == 0);
        let in1 = rng.gen_range(0.0..5.0);
        let in3 = rng.gen_range(0.0..5.0);
        let pn = photon_numbers(&stack, omega, in1, in3).unwrap();
        let (lo, hi) = (in1.min(in3), in1.max(in3));
        let slack = REL * hi.max(1.0);
        violations += pn.as_array().iter().filter(|&&v| v < lo - slack || v > hi + slack).count();

        let nu = rng.gen_range(0.0..5.0);
        let eq = photon_numbers(&stack, omega, nu, nu).unwrap();
        for v in eq.as_array() {
            eq_worst = eq_worst.max((v - nu).abs() / nu.max(1.0));
        }
        if stack.symmetric() {
            let sf = model.spectral_force(&stack, omega, nu, nu, AREA).unwrap();
            let scale = force_scale(&stack, omega, nu, nu);
            net_worst = net_worst.max(sf.net_pressure.abs() / scale).max(sf.net_impulse.abs() / scale);
        }
    }
    outcome(
        violations == 0 && eq_worst < REL && net_worst < REL,
        format!("10^4 stacks; {violations} betweenness violations; equilibrium spread {eq_worst:.2e}; net force {net_worst:.2e}"),
    )
}

fn ac7_force_law() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let model = ForceModel::default();
    let mut worst = 0.0f64;
    for _ in 0..1_000 {
        let (stack, omega) = random_stack(&mut rng, true);
        let in1 = log_uniform(&mut rng, 1e-3, 1e3);
        let bf = match model.total_force_beam(&stack, omega, in1, AREA) {
            Ok(b) => b,
            Err(e) => return outcome(false, e.to_string()),
        };
        let r = composite(&stack, omega).unwrap().reflectance();
        worst = worst.max((bf.force / bf.f0 - r).abs());
    }
    let omega = omega_from_ev(1.0);
    let half = LayerStack::slab(1.0, 4.0, PI * C / (2.0 * omega)).unwrap();
    let quarter = LayerStack::slab(1.0, 4.0, TAU * C / omega / 8.0).unwrap();
    let h = model.total_force_beam(&half, omega, 1.0, AREA).unwrap().ratio;
    let q = model.total_force_beam(&quarter, omega, 1.0, AREA).unwrap().ratio;
    outcome(
        worst < REL && h.abs() < 1e-15 && rel(q, 0.36) < REL,
        format!("10^3 beams max |F/F0 - |R1|^2| = {worst:.2e}; half-wave {h:.2e}; quarter-wave {q:.15}"),
    )
}

fn ac8_methods() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let model = ForceModel::default();
    let mut worst = 0.0f64;
    let mut count = 0;
    for i in 0..10_000 {
        let (stack, omega) = random_stack(&mut rng, i % 2 == 0);
        let (in1, in3) = match i % 3 {
            0 => (rng.gen_range(0.0..5.0), 0.0),
            1 => {
                let v = rng.gen_range(0.0..5.0);
                (v, v)
            }
            _ => (rng.gen_range(0.0..5.0), rng.gen_range(0.0..5.0)),
        };
        let sf = model.spectral_force(&stack, omega, in1, in3, AREA).unwrap();
        worst = worst.max((sf.net_impulse - sf.net_pressure).abs() / force_scale(&stack, omega, in1, in3));
        count += 1;
    }
    outcome(worst < REL, format!("{count} configurations; max |impulse sum - pressure difference| / scale = {worst:.2e}"))
}

fn ac9_ar() -> Outcome {
    let model = ForceModel::default();
    let mut cancel = 0.0f64;
    let mut kappas = Vec::new();
    for i in 0..=300 {
        let n = 1.0 + 3.0 * i as f64 / 300.0;
        for ev in [0.01, 0.1, 1.0, 10.0] {
            let ar = model.ar_interface_forces(n, omega_from_ev(ev), 1.0, AREA).unwrap();
            cancel = cancel.max((ar.f1 + ar.f2).abs() / ar.f0);
            if n >= 1.1 {
                kappas.push(ar.kappa.unwrap());
            }
        }
    }
    let kmin = kappas.iter().cloned().fold(f64::INFINITY, f64::min);
    let kmax = kappas.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let reference = 1.0;
    outcome(
        cancel < REL && kmax - kmin < 1e-10,
        format!(
            "max |F1+F2|/F0 = {cancel:.2e}; kappa in [{kmin:.15}, {kmax:.15}] (spread {:.2e}); reference kappa = {reference}, measured/reference = {:.6} (F0 is the perfect-reflector force, twice the absorbed-beam force)",
            kmax - kmin,
            kmin / reference
        ),
    )
}

fn ac10_determinism() -> Outcome {
    let dir = tempfile::tempdir().unwrap();
    let cases = [
        ("polariton", "polariton.toml"),
        ("cavity", "cavity.toml"),
        ("force", "force.toml"),
        ("sweep", "ar_sweep.toml"),
    ];
    let mut notes = Vec::new();
    let mut ok = true;
    for (cmd, file) in cases {
        let mut outputs = Vec::new();
        for (tag, serial) in [("p1", false), ("p2", false), ("s", true)] {
            for ext in ["csv", "json"] {
                let out = dir.path().join(format!("{cmd}-{tag}.{ext}"));
                let mut c = bin();
                c.args([cmd, "--config"]).arg(configs().join(file)).arg("--out").arg(&out);
                if serial {
                    c.arg("--serial");
                }
                let status = c.status().unwrap();
                ok &= status.success();
                outputs.push((ext, std::fs::read(&out).unwrap_or_default()));
            }
        }
        let same = |ext: &str| {
            let v: Vec<_> = outputs.iter().filter(|(e, _)| *e == ext).map(|(_, b)| b).collect();
            v.windows(2).all(|w| w[0] == w[1]) && !v[0].is_empty()
        };
        // Rerun from the JSON result's embedded config.
        let src = dir.path().join(format!("{cmd}-p1.json"));
        let again = dir.path().join(format!("{cmd}-rt.json"));
        let status = bin().args([cmd, "--config"]).arg(&src).arg("--out").arg(&again).status().unwrap();
        let round_trip = status.success() && std::fs::read(&src).ok() == std::fs::read(&again).ok();
        let case_ok = same("csv") && same("json") && round_trip;
        ok &= case_ok;
        notes.push(format!("{cmd}:{}", if case_ok { "identical" } else { "DIFFERS" }));
    }
    outcome(ok, format!("parallel x2 vs serial, csv+json, JSON round-trip: {}", notes.join(" ")))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("AC1 polariton table closure", ac1_table_closure),
        ("AC2 conservation and CEV", ac2_conservation),
        ("AC3 mass-transfer cube", ac3_cube),
        ("AC4 polariton sweep curves", ac4_fig2),
        ("AC5 lossless identity", ac5_lossless),
        ("AC6 betweenness and equilibrium", ac6_betweenness),
        ("AC7 beam force law", ac7_force_law),
        ("AC8 force method equivalence", ac8_methods),
        ("AC9 anti-reflection interface forces", ac9_ar),
        ("AC10 determinism and round-trip", ac10_determinism),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let start = Instant::now();
        let o = check();
        let tag = if o.pass { "PASS" } else { "FAIL" };
        println!("[{tag}] {name}: {} ({:.2?})", o.detail, start.elapsed());
        failed += usize::from(!o.pass);
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
    println!("all acceptance criteria passed");
}
