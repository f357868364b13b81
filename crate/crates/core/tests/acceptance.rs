//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any fails.

use std::time::{Duration, Instant};

use ces_core::published::{
    matches_rounded, matches_truncated, QuarticSet, NUMERIC_TOL, SETS, SET_I,
};
use ces_core::{
    build_ladder, constrained, constraint_report, drift_report, find_eigenvalue, ground_state,
    linear_grid, riccati_residual, shape_invariance_check, spectrum, Coulomb,
    PolynomialCoulombPotential, ShootingConfig, Superpotential, DEFAULT_CONSTRAINT_TOL,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 0x5eed;

struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Outcome {
            pass,
            detail: detail.into(),
        }
    }
}

fn within(elapsed: Duration, limit: Duration) -> bool {
    elapsed < limit
}

/// Potential built from random `A_1..A_n` (`A_n = sqrt(lead)`), constraints enforced.
fn random_ces(rng: &mut ChaCha8Rng, n: usize, l: u32, c: f64) -> PolynomialCoulombPotential {
    let lead: f64 = rng.gen_range(0.05..2.0);
    let mut big_a: Vec<f64> = (1..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
    big_a.push(lead.sqrt());
    let mut coeffs = vec![0.0; n];
    for k in n + 1..=2 * n {
        coeffs.push(
            (1..=n)
                .filter(|&i| k > i && k - i <= n)
                .map(|i| big_a[i - 1] * big_a[k - i - 1])
                .sum(),
        );
    }
    constrained(&PolynomialCoulombPotential::new(l, c, coeffs).unwrap())
}

fn table_one() -> Outcome {
    let start = Instant::now();
    let mut misses = Vec::new();
    for set in SETS {
        let ladder = build_ladder(&set.potential(), 2).unwrap();
        for (step, printed) in ladder.steps.iter().zip(set.table_one) {
            for (value, (want, decimals)) in step.dependent_params.iter().zip(printed) {
                if !matches_truncated(*value, want, decimals) {
                    misses.push(format!("{} k={} {value:.6} vs {want}", set.name, step.k));
                }
            }
        }
    }
    let elapsed = start.elapsed();
    let fast = within(elapsed, Duration::from_secs(1));
    Outcome::new(
        misses.is_empty() && fast,
        format!(
            "12 parameters, {} mismatches {:?}, {elapsed:.2?}",
            misses.len(),
            misses
        ),
    )
}

fn table_two_analytic() -> Outcome {
    let start = Instant::now();
    let mut misses = Vec::new();
    for set in SETS {
        let energies = build_ladder(&set.potential(), 2).unwrap().energies();
        for (k, (e, want)) in energies.iter().zip(set.ladder).enumerate() {
            if !matches_rounded(*e, want, 2) {
                misses.push(format!("{} E{k} {e:.4} vs {want}", set.name));
            }
        }
    }
    let elapsed = start.elapsed();
    let fast = within(elapsed, Duration::from_secs(1));
    Outcome::new(
        misses.is_empty() && fast,
        format!(
            "6 energies, {} mismatches {:?}, {elapsed:.2?}",
            misses.len(),
            misses
        ),
    )
}

fn numeric_rows(set: &QuarticSet, cfg: &ShootingConfig) -> Vec<(String, f64, f64)> {
    let ladder = build_ladder(&set.potential(), 2).unwrap();
    let printed: [&[f64]; 3] = [&set.numeric_v1, &set.numeric_v2, &[set.numeric_v3]];
    let mut rows = Vec::new();
    for (step, wanted) in ladder.steps.iter().zip(printed) {
        let levels = spectrum(&step.potential, wanted.len(), cfg);
        for (j, (level, &want)) in levels.into_iter().zip(wanted).enumerate() {
            let got = level.map(|r| r.energy).unwrap_or(f64::NAN);
            rows.push((format!("{} V{}_{j}", set.name, step.k + 1), got, want));
        }
    }
    rows
}

fn table_two_numeric() -> Outcome {
    let start = Instant::now();
    let cfg = ShootingConfig::default();
    let mut misses = Vec::new();
    let mut total = 0;
    let mut drift_ok = true;
    for set in SETS {
        for (label, got, want) in numeric_rows(&set, &cfg) {
            total += 1;
            if !((got - want).abs() <= NUMERIC_TOL) {
                misses.push(format!("{label} {got:.4} vs {want}"));
            }
        }
        let rows = drift_report(&build_ladder(&set.potential(), 2).unwrap());
        drift_ok &= !rows.is_empty() && rows.iter().all(|r| r.k >= 1);
    }
    let elapsed = start.elapsed();
    let fast = within(elapsed, Duration::from_secs(60));
    Outcome::new(
        misses.is_empty() && fast && drift_ok,
        format!(
            "{} of {total} levels off by more than {NUMERIC_TOL} {:?}, drift report non-empty: {drift_ok}, {elapsed:.2?}",
            misses.len(),
            misses
        ),
    )
}

fn susy_vs_shooting() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let cfg = ShootingConfig::default();
    let mut worst: f64 = 0.0;
    let mut failures = 0;
    for i in 0..20 {
        let n = if i % 2 == 0 { 2 } else { 3 };
        let l = rng.gen_range(0..=3);
        let c = rng.gen_range(-2.0..=0.0);
        let pot = random_ces(&mut rng, n, l, c);
        let (e0, _) = ground_state(&pot).unwrap();
        match find_eigenvalue(&pot, 0, &cfg) {
            Ok(res) => worst = worst.max((res.energy - e0).abs()),
            Err(_) => failures += 1,
        }
    }
    Outcome::new(
        failures == 0 && worst <= 1e-4,
        format!("20 potentials, max |dE0| = {worst:.2e}, solver failures {failures}"),
    )
}

fn riccati_oracle() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 1);
    let mut worst: f64 = 0.0;
    for n in 1..=6 {
        let grid = linear_grid(1e-3, 20f64.powf(2.0 / n as f64), 400);
        for _ in 0..20 {
            let l = rng.gen_range(0..=5);
            let c = rng.gen_range(-2.0..2.0);
            let pot = random_ces(&mut rng, n, l, c);
            let sp = Superpotential::solve(&pot);
            worst = worst.max(riccati_residual(&pot, &sp, &grid).unwrap());
        }
    }
    Outcome::new(
        worst <= 1e-9,
        format!("120 potentials n=1..6, max residual {worst:.2e}"),
    )
}

fn quartic_ladder_closed(l: u32, c: f64, d: f64, f: f64, k: usize) -> f64 {
    let big_l = (l as usize + k + 1) as f64;
    -c * c / (4.0 * big_l * big_l) + d / (2.0 * f.sqrt()) * (2.0 * big_l + 1.0 + 2.0 * k as f64)
}

fn sextic_ladder_closed(l: u32, c: f64, f: f64, g: f64, h: f64, k: usize) -> f64 {
    let big_l = (l as usize + k + 1) as f64;
    let lin = f / (2.0 * h.sqrt()) - g * g / (8.0 * h.powf(1.5));
    -c * c / (4.0 * big_l * big_l) + lin * (2.0 * big_l + 1.0 + 2.0 * k as f64)
}

fn specializations() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 2);
    let mut closed: f64 = 0.0;
    let mut ladder: f64 = 0.0;
    for _ in 0..100 {
        let l = rng.gen_range(0..=5u32);
        let c: f64 = rng.gen_range(-2.0..2.0);
        let d: f64 = rng.gen_range(-2.0..2.0);
        let f: f64 = rng.gen_range(0.05..2.0);
        let lp1 = l as f64 + 1.0;

        let quartic = PolynomialCoulombPotential::quartic(l, c, 0.0, 0.0, d, f).unwrap();
        let sp = Superpotential::solve(&quartic);
        let req = constraint_report(&quartic, &sp, DEFAULT_CONSTRAINT_TOL).required;
        let a = -c * d / (2.0 * f.sqrt() * lp1) - (2.0 * l as f64 + 4.0) * f.sqrt();
        let b = d * d / (4.0 * f) - c * f.sqrt() / lp1;
        let e0 = -c * c / (4.0 * lp1 * lp1) + d * lp1 / f.sqrt() + d / (2.0 * f.sqrt());
        closed = closed.max((req[0] - a).abs()).max((req[1] - b).abs());
        closed = closed.max((sp.ground_energy - e0).abs());

        let quadratic = PolynomialCoulombPotential::new(l, c, vec![0.0, f]).unwrap();
        let sp = Superpotential::solve(&quadratic);
        let req = constraint_report(&quadratic, &sp, DEFAULT_CONSTRAINT_TOL).required;
        let e0 = -c * c / (4.0 * lp1 * lp1) + (2.0 * l as f64 + 3.0) * f.sqrt();
        closed = closed.max((req[0] + c * f.sqrt() / lp1).abs());
        closed = closed.max((sp.ground_energy - e0).abs());

        let c_att = -c.abs();
        let steps = build_ladder(&constrained(&quartic), 5).unwrap().steps;
        for step in &steps {
            let want = quartic_ladder_closed(l, c, d, f, step.k);
            ladder = ladder.max((step.energy_abs - want).abs());
        }
        let g: f64 = rng.gen_range(-1.0..1.0);
        let h: f64 = rng.gen_range(0.05..2.0);
        let sextic =
            PolynomialCoulombPotential::sextic(l.min(3), c_att, 0.0, 0.0, 0.0, d / 2.0, g, h)
                .unwrap();
        for step in &build_ladder(&constrained(&sextic), 5).unwrap().steps {
            let want = sextic_ladder_closed(l.min(3), c_att, d / 2.0, g, h, step.k);
            ladder = ladder.max((step.energy_abs - want).abs());
        }
    }
    Outcome::new(
        closed <= 1e-12 && ladder <= 1e-10,
        format!("100 draws, closed forms max {closed:.2e}, ladder k<=5 max {ladder:.2e}"),
    )
}

fn solver_oracles() -> Outcome {
    let cfg = ShootingConfig::default();
    let mut worst: f64 = 0.0;
    let mut bad_nodes = 0;
    for l in 0..=2u32 {
        let oscillator = PolynomialCoulombPotential::new(l, 0.0, vec![0.0, 1.0]).unwrap();
        let coulomb = Coulomb { l, c: -8.0 };
        for k in 0..=3usize {
            let exact = (4 * k + 2 * l as usize + 3) as f64;
            let osc = find_eigenvalue(&oscillator, k, &cfg).unwrap();
            worst = worst.max((osc.energy - exact).abs());
            let big_n = (l as usize + 1 + k) as f64;
            let exact = -64.0 / (4.0 * big_n * big_n);
            let cou = find_eigenvalue(&coulomb, k, &cfg).unwrap();
            worst = worst.max((cou.energy - exact).abs());
            bad_nodes += usize::from(osc.nodes != k) + usize::from(cou.nodes != k);
        }
    }
    Outcome::new(
        worst <= 1e-4 && bad_nodes == 0,
        format!("24 levels, max error {worst:.2e}, node mismatches {bad_nodes}"),
    )
}

fn shape_invariance() -> Outcome {
    let pot = SET_I.potential();
    let grid = linear_grid(0.1, 10.0, 1000);
    let witness = match shape_invariance_check(&pot, &grid, 1e-9) {
        Ok(w) => w,
        Err(e) => return Outcome::new(false, e.to_string()),
    };
    let lp1 = SET_I.l as f64 + 1.0;
    let r = SET_I.c * SET_I.c / (4.0 * lp1 * lp1) - SET_I.d * lp1 / SET_I.f.sqrt()
        + SET_I.d / (2.0 * SET_I.f.sqrt());
    let gap = (witness.remainder - r).abs();
    Outcome::new(
        witness.max_deviation <= 1e-9 && gap <= 1e-10,
        format!(
            "max deviation {:.2e}, R measured {:.10} vs formula {r:.10}",
            witness.max_deviation, witness.remainder
        ),
    )
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("table I dependent parameters", table_one),
        ("table II analytic ladder", table_two_analytic),
        ("table II numeric spectra", table_two_numeric),
        ("analytic vs shooting ground states", susy_vs_shooting),
        ("riccati oracle", riccati_oracle),
        ("specialization equivalence", specializations),
        ("solver oracles", solver_oracles),
        ("shape-invariance witness", shape_invariance),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let outcome = run();
        let tag = if outcome.pass { "PASS" } else { "FAIL" };
        println!("criterion {} [{tag}] {name}: {}", i + 1, outcome.detail);
        failed += usize::from(!outcome.pass);
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
