use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use ces_core::published::{matches_rounded, matches_truncated, NUMERIC_TOL, SETS};
use ces_core::{
    build_ladder, constraint_report, find_eigenvalue, linear_grid, riccati_residual, spectrum,
    EigenResult, GroundWavefunction, ShootingConfig, Superpotential, DEFAULT_CONSTRAINT_TOL,
};

use crate::config::{ConfigError, Model, RunConfig};
use crate::output::{Cell, Format, Table};

pub const DEFAULT_DEPTH: usize = 2;
pub const DEFAULT_STATES: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    ConstraintViolation,
    SolverFailure,
    Mismatch,
}

impl Status {
    pub fn code(self) -> u8 {
        match self {
            Status::Ok => 0,
            Status::ConstraintViolation => 2,
            Status::SolverFailure => 3,
            Status::Mismatch => 4,
        }
    }
}

pub struct Report {
    pub body: String,
    pub status: Status,
}

pub fn solve(cfg: &RunConfig, format: Format) -> Result<Report> {
    let pot = cfg.potential()?;
    let n = pot.n();
    let sp = Superpotential::solve(&pot);
    let report = constraint_report(&pot, &sp, DEFAULT_CONSTRAINT_TOL);
    let grid = linear_grid(1e-3, 20f64.powf(2.0 / n as f64), 400);
    let residual = riccati_residual(&pot, &sp, &grid)?;
    let wf = GroundWavefunction::from_superpotential(&sp);

    let mut t = Table::new(["quantity", "value", "required", "residual"]);
    let num = |x: f64| Cell::Num(x, 6);
    t.push(vec![Cell::text("B"), num(sp.b), Cell::Empty, Cell::Empty]);
    t.push(vec![Cell::text("D"), num(sp.d), Cell::Empty, Cell::Empty]);
    for (i, a) in sp.a.iter().enumerate() {
        t.push(vec![
            Cell::text(format!("A{}", i + 1)),
            num(*a),
            Cell::Empty,
            Cell::Empty,
        ]);
    }
    for m in 0..n {
        t.push(vec![
            Cell::text(format!("a{}", m + 1)),
            num(report.supplied[m]),
            num(report.required[m]),
            num(report.residuals[m]),
        ]);
    }
    t.push(vec![
        Cell::text("E0"),
        num(sp.ground_energy),
        Cell::Empty,
        Cell::Empty,
    ]);
    t.push(vec![
        Cell::text("riccati_residual"),
        Cell::Sci(residual),
        Cell::Empty,
        Cell::Empty,
    ]);
    if format == Format::Csv {
        t.push(vec![
            Cell::text("psi0"),
            Cell::text(wf.formula()),
            Cell::Empty,
            Cell::Empty,
        ]);
    }

    let status = if report.satisfied {
        Status::Ok
    } else {
        log::warn!(
            "supplied dependent coefficients violate the constraints (max residual {:.3e})",
            report.max_residual()
        );
        Status::ConstraintViolation
    };
    let mut body = t.render(format)?;
    if format == Format::Table {
        body.push('\n');
        body.push_str(&wf.formula());
        body.push('\n');
    }
    Ok(Report { body, status })
}

pub fn hierarchy(cfg: &RunConfig, depth: usize, numeric: bool, format: Format) -> Result<Report> {
    let pot = cfg.potential()?;
    let n = pot.n();
    let ladder = build_ladder(&pot, depth)?;
    let shooting = cfg.shooting();

    let mut headers = vec!["k".to_string(), "l".to_string()];
    headers.extend((1..=n).map(|m| format!("a{m}")));
    headers.push("E_analytic".into());
    if numeric {
        headers.push("E_numeric".into());
    }
    headers.extend((1..=n).map(|m| format!("drift_a{m}")));
    let mut t = Table::new(headers);

    let mut status = Status::Ok;
    for step in &ladder.steps {
        let mut row = vec![Cell::Int(step.k as i64), Cell::Int(step.l as i64)];
        row.extend(step.dependent_params.iter().map(|&a| Cell::Num(a, 4)));
        row.push(Cell::Num(step.energy_abs, 4));
        if numeric {
            match find_eigenvalue(&step.potential, 0, &shooting) {
                Ok(res) => row.push(Cell::Num(res.energy, 4)),
                Err(e) => {
                    eprintln!("k = {}: {e}", step.k);
                    row.push(Cell::text("failed"));
                    status = Status::SolverFailure;
                }
            }
        }
        if step.drift.is_empty() {
            row.extend((0..n).map(|_| Cell::Empty));
        } else {
            row.extend(step.drift.iter().map(|&g| Cell::Num(g, 4)));
        }
        t.push(row);
    }
    Ok(Report {
        body: t.render(format)?,
        status,
    })
}

pub fn shoot(
    cfg: &RunConfig,
    states: usize,
    wf_out: Option<&Path>,
    format: Format,
) -> Result<Report> {
    if states == 0 {
        return Err(ConfigError::Invalid("states must be at least 1".into()).into());
    }
    let shooting = cfg.shooting();
    let results = match cfg.model()? {
        Model::Polynomial(p) => spectrum(&p, states, &shooting),
        Model::Coulomb(c) => spectrum(&c, states, &shooting),
    };

    let mut t = Table::new(["state", "energy", "nodes", "converged", "iterations"]);
    let mut status = Status::Ok;
    for (k, res) in results.iter().enumerate() {
        match res {
            Ok(res) => {
                t.push(vec![
                    Cell::Int(k as i64),
                    Cell::Num(res.energy, 6),
                    Cell::Int(res.nodes as i64),
                    Cell::text(res.converged.to_string()),
                    Cell::Int(res.iterations as i64),
                ]);
                if let Some(path) = wf_out {
                    write_wavefunction(&wf_path(path, k, states), res)?;
                }
            }
            Err(e) => {
                eprintln!("state {k}: {e}");
                t.push(vec![
                    Cell::Int(k as i64),
                    Cell::text("failed"),
                    Cell::Empty,
                    Cell::text("false"),
                    Cell::Empty,
                ]);
                status = Status::SolverFailure;
            }
        }
    }
    Ok(Report {
        body: t.render(format)?,
        status,
    })
}

/// `psi.csv` for one state, `psi_0.csv`, `psi_1.csv`, ... for several.
fn wf_path(path: &Path, k: usize, states: usize) -> PathBuf {
    if states == 1 {
        return path.to_path_buf();
    }
    let stem = path
        .file_stem()
        .and_then(|s| s.to_str())
        .unwrap_or("wavefunction");
    let name = match path.extension().and_then(|e| e.to_str()) {
        Some(ext) => format!("{stem}_{k}.{ext}"),
        None => format!("{stem}_{k}"),
    };
    path.with_file_name(name)
}

fn write_wavefunction(path: &Path, res: &EigenResult) -> Result<()> {
    let mut t = Table::new(["r", "u"]);
    for &(r, u) in &res.wf_samples {
        t.push(vec![Cell::Num(r, 6), Cell::Num(u, 6)]);
    }
    std::fs::write(path, t.render(Format::Csv)?)
        .with_context(|| format!("writing wavefunction to {}", path.display()))
}

pub fn reproduce(table: u8, format: Format) -> Result<Report> {
    let (t, misses, total) = match table {
        1 => table_one()?,
        2 => table_two(),
        other => {
            return Err(ConfigError::Invalid(format!("no table {other}; expected 1 or 2")).into())
        }
    };
    let verdict = if misses == 0 {
        format!("PASS: all {total} entries match")
    } else {
        format!("FAIL: {misses} of {total} entries differ")
    };
    let mut body = t.render(format)?;
    match format {
        Format::Table => {
            body.push('\n');
            body.push_str(&verdict);
            body.push('\n');
        }
        Format::Csv => eprintln!("{verdict}"),
    }
    Ok(Report {
        body,
        status: if misses == 0 {
            Status::Ok
        } else {
            Status::Mismatch
        },
    })
}

fn yes_no(ok: bool) -> Cell {
    Cell::text(if ok { "yes" } else { "no" })
}

fn table_one() -> Result<(Table, usize, usize)> {
    let mut t = Table::new(["set", "member", "parameter", "computed", "printed", "match"]);
    let (mut misses, mut total) = (0, 0);
    for set in SETS {
        let ladder = build_ladder(&set.potential(), 2)?;
        for (step, printed) in ladder.steps.iter().zip(set.table_one) {
            for ((name, value), (want, decimals)) in
                ["a", "b"].iter().zip(&step.dependent_params).zip(printed)
            {
                let suffix = if step.k == 0 {
                    String::new()
                } else {
                    step.k.to_string()
                };
                let ok = matches_truncated(*value, want, decimals);
                misses += usize::from(!ok);
                total += 1;
                t.push(vec![
                    Cell::text(set.name),
                    Cell::text(format!("V{}", step.k + 1)),
                    Cell::text(format!("{name}{suffix}")),
                    Cell::Num(*value, 6),
                    Cell::Num(want, decimals as usize),
                    yes_no(ok),
                ]);
            }
        }
    }
    Ok((t, misses, total))
}

fn table_two() -> (Table, usize, usize) {
    let mut t = Table::new(["set", "member", "level", "computed", "printed", "match"]);
    let (mut misses, mut total) = (0, 0);
    let shooting = ShootingConfig::default();
    for set in SETS {
        let ladder =
            build_ladder(&set.potential(), 2).expect("benchmark sets satisfy the constraints");
        let printed: [&[f64]; 3] = [&set.numeric_v1, &set.numeric_v2, &[set.numeric_v3]];
        for ((step, wanted), analytic) in ladder.steps.iter().zip(printed).zip(set.ladder) {
            let member = format!("V{}", step.k + 1);
            let ok = matches_rounded(step.energy_abs, analytic, 2);
            misses += usize::from(!ok);
            total += 1;
            t.push(vec![
                Cell::text(set.name),
                Cell::text(member.clone()),
                Cell::text("E^S_0"),
                Cell::Num(step.energy_abs, 4),
                Cell::Num(analytic, 2),
                yes_no(ok),
            ]);
            for (j, (level, &want)) in spectrum(&step.potential, wanted.len(), &shooting)
                .into_iter()
                .zip(wanted)
                .enumerate()
            {
                let (computed, ok) = match level {
                    Ok(res) => (
                        Cell::Num(res.energy, 4),
                        (res.energy - want).abs() <= NUMERIC_TOL,
                    ),
                    Err(e) => {
                        eprintln!("{} {member} level {j}: {e}", set.name);
                        (Cell::text("failed"), false)
                    }
                };
                misses += usize::from(!ok);
                total += 1;
                t.push(vec![
                    Cell::text(set.name),
                    Cell::text(member.clone()),
                    Cell::text(format!("E^R_{j}")),
                    computed,
                    Cell::Num(want, 2),
                    yes_no(ok),
                ]);
            }
        }
    }
    (t, misses, total)
}
