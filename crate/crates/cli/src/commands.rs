//! Subcommand implementations.

use std::f64::consts::{FRAC_PI_2, TAU};
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use quadrangle::dynamics::{iterate_with, Constraint};
use quadrangle::solvers::{
    c_map_slope, cycle_residual, solve_cycle_system, solve_trapezoid_fixed_point_in,
    stability_report, ChartPoint, MapOrder,
};
use quadrangle::{c_map, step, AngleTuple, Classification, Trajectory};
use serde_json::Value;

use crate::args::{
    BasinArgs, CurveArgs, CycleSolveArgs, Family, IterateArgs, StabilityArgs, StepArgs,
    TrapezoidArgs, VerifyArgs,
};
use crate::error::CliError;
use crate::output::{csv_line, fmt_num, write_json, Record};
use crate::sampling::{random_tuple, trapezoid_tuple};
use crate::verify::{library_edges, run_checks, EdgesFn};

/// Inputs whose sum is this close to 2π are rescaled onto it, so that
/// angles typed with a few decimals are accepted.
pub const INPUT_SUM_SLACK: f64 = 1e-3;

pub type CmdResult = Result<u8, CliError>;

pub const EXIT_OK: u8 = 0;
pub const EXIT_VERIFY_FAILED: u8 = 1;
pub const EXIT_NOT_CONVERGED: u8 = 3;

pub fn parse_angles(values: &[f64]) -> Result<AngleTuple, CliError> {
    let raw: [f64; 4] = values
        .try_into()
        .map_err(|_| CliError::Usage(format!("--angles needs 4 values, got {}", values.len())))?;
    if raw.iter().any(|a| !a.is_finite()) {
        return Err(CliError::Usage("--angles must be finite".into()));
    }
    let sum: f64 = raw.iter().sum();
    if (sum - TAU).abs() > INPUT_SUM_SLACK {
        return Err(CliError::Usage(format!(
            "angles sum to {sum}, expected 2*pi"
        )));
    }
    Ok(AngleTuple::new(quadrangle::renormalize_sum(raw))?)
}

fn sink<'a>(
    out: &Option<PathBuf>,
    stdout: &'a mut dyn Write,
) -> Result<Box<dyn Write + 'a>, CliError> {
    match out {
        Some(path) => {
            let f = File::create(path)
                .map_err(|e| CliError::Usage(format!("cannot create {}: {e}", path.display())))?;
            Ok(Box::new(BufWriter::new(f)))
        }
        None => Ok(Box::new(stdout)),
    }
}

fn angles_row(prefix: Vec<String>, q: &AngleTuple) -> Vec<String> {
    prefix
        .into_iter()
        .chain(q.as_array().map(fmt_num))
        .collect()
}

pub fn step_cmd(args: &StepArgs, stdout: &mut dyn Write) -> CmdResult {
    let q = parse_angles(&args.angles.angles)?;
    let next = step(&q)?;
    let mut w = sink(&args.output.out, stdout)?;
    if args.output.json {
        write_json(
            &mut w,
            &Record::new().angles("", next.as_array()).into_value(),
        )?;
    } else {
        csv_line(
            &mut w,
            &["alpha", "beta", "gamma", "delta"].map(String::from),
        )?;
        csv_line(&mut w, &angles_row(vec![], &next))?;
    }
    w.flush()?;
    Ok(EXIT_OK)
}

fn run_iteration(args: &IterateArgs) -> Result<Trajectory, CliError> {
    let q = parse_angles(&args.angles.angles)?;
    let it = &args.iteration;
    let constraint = if it.symmetric {
        Constraint::MirrorSymmetric
    } else {
        Constraint::None
    };
    Ok(iterate_with(&q, it.max_iter, it.tol, constraint)?)
}

fn status(t: &Trajectory) -> u8 {
    if t.cycle.is_some() {
        EXIT_OK
    } else {
        EXIT_NOT_CONVERGED
    }
}

pub fn iterate_cmd(
    args: &IterateArgs,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> CmdResult {
    let t = run_iteration(args)?;
    let mut w = sink(&args.output.out, stdout)?;
    if args.output.json {
        let rows = t
            .states
            .iter()
            .enumerate()
            .map(|(i, q)| {
                Record::new()
                    .int("iter", i as u64)
                    .angles("", q.as_array())
                    .into_value()
            })
            .collect();
        write_json(&mut w, &Value::Array(rows))?;
    } else {
        csv_line(
            &mut w,
            &["iter", "alpha", "beta", "gamma", "delta"].map(String::from),
        )?;
        for (i, q) in t.states.iter().enumerate() {
            csv_line(&mut w, &angles_row(vec![i.to_string()], q))?;
        }
    }
    w.flush()?;
    writeln!(
        stderr,
        "class={} iterations={}",
        t.classification(),
        t.iterations()
    )?;
    Ok(status(&t))
}

pub fn cycle_cmd(args: &IterateArgs, stdout: &mut dyn Write) -> CmdResult {
    let t = run_iteration(args)?;
    let mut rec = Record::new()
        .text("class", t.classification().as_str())
        .int("iterations", t.iterations() as u64);
    if let Some(c) = &t.cycle {
        rec = rec
            .int("period", c.period as u64)
            .int("label_period", c.label_period() as u64)
            .num("residual", c.residual)
            .num("match_distance", c.match_distance);
        for (i, q) in c.representative_states.iter().enumerate() {
            rec = rec.angles(&format!("state{i}_"), q.as_array());
        }
    } else {
        rec = rec.angles("last_", t.last().as_array());
    }
    let mut w = sink(&args.output.out, stdout)?;
    write_json(&mut w, &rec.into_value())?;
    w.flush()?;
    Ok(status(&t))
}

pub fn curve_cmd(args: &CurveArgs, stdout: &mut dyn Write) -> CmdResult {
    let (from, to, n) = (args.from, args.to, args.samples);
    if !(from > 0.0 && from < to && to <= FRAC_PI_2) {
        return Err(CliError::Usage(format!(
            "need 0 < from < to <= pi/2, got from = {from}, to = {to}"
        )));
    }
    if n < 2 {
        return Err(CliError::Usage("--samples must be at least 2".into()));
    }
    let grid: Vec<f64> = (0..n)
        .map(|i| {
            if i == n - 1 {
                to
            } else {
                from + (to - from) * i as f64 / (n - 1) as f64
            }
        })
        .collect();
    let mut w = sink(&args.output.out, stdout)?;
    if args.output.json {
        let rows = grid
            .iter()
            .map(|&a| Ok(Record::new().num("a", a).num("c", c_map(a)?).into_value()))
            .collect::<Result<Vec<_>, CliError>>()?;
        write_json(&mut w, &Value::Array(rows))?;
    } else {
        csv_line(&mut w, &["a".into(), "c".into()])?;
        for a in grid {
            csv_line(&mut w, &[fmt_num(a), fmt_num(c_map(a)?)])?;
        }
    }
    w.flush()?;
    Ok(EXIT_OK)
}

/// One basin sample.
#[derive(Debug, Clone, PartialEq)]
pub struct BasinRecord {
    pub sample_id: u64,
    pub seed: u64,
    pub initial: AngleTuple,
    pub classification: Classification,
    pub iterations: usize,
    pub residual: f64,
    pub match_distance: f64,
}

impl BasinRecord {
    fn csv(&self) -> Vec<String> {
        let mut row = angles_row(vec![self.sample_id.to_string()], &self.initial);
        row.extend([
            self.classification.as_str().to_string(),
            self.iterations.to_string(),
            fmt_num(self.residual),
            fmt_num(self.match_distance),
        ]);
        row
    }

    fn json(&self) -> Value {
        Record::new()
            .int("sample_id", self.sample_id)
            .int("seed", self.seed)
            .angles("", self.initial.as_array())
            .text("class", self.classification.as_str())
            .int("iters", self.iterations as u64)
            .num("residual", self.residual)
            .num("match_distance", self.match_distance)
            .into_value()
    }
}

pub fn basin_records(args: &BasinArgs) -> Result<Vec<BasinRecord>, CliError> {
    if args.samples == 0 {
        return Err(CliError::Usage("--samples must be at least 1".into()));
    }
    if !(args.margin > 0.0 && args.margin < FRAC_PI_2) {
        return Err(CliError::Usage(format!(
            "--margin {} outside (0, pi/2)",
            args.margin
        )));
    }
    let it = &args.iteration;
    let constraint = if it.symmetric || args.family == Family::Trapezoid {
        Constraint::MirrorSymmetric
    } else {
        Constraint::None
    };
    (0..args.samples)
        .map(|id| {
            let q = match args.family {
                Family::Random => random_tuple(args.seed, id, args.margin).ok_or_else(|| {
                    CliError::Usage(format!("no tuple found with margin {}", args.margin))
                })?,
                Family::Trapezoid => trapezoid_tuple(args.seed, id),
            };
            let t = iterate_with(&q, it.max_iter, it.tol, constraint)?;
            let (residual, match_distance) = match &t.cycle {
                Some(c) => (c.residual, c.match_distance),
                None => (t.residuals.last().copied().unwrap_or(f64::NAN), f64::NAN),
            };
            Ok(BasinRecord {
                sample_id: id,
                seed: args.seed,
                initial: q,
                classification: t.classification(),
                iterations: t.iterations(),
                residual,
                match_distance,
            })
        })
        .collect()
}

fn class_counts(records: &[BasinRecord]) -> Vec<(Classification, usize)> {
    Classification::ALL
        .iter()
        .map(|&c| (c, records.iter().filter(|r| r.classification == c).count()))
        .collect()
}

pub fn basin_cmd(args: &BasinArgs, stdout: &mut dyn Write) -> CmdResult {
    let records = basin_records(args)?;
    let counts = class_counts(&records);
    let mut w = sink(&args.output.out, stdout)?;
    if args.output.json {
        let summary = counts.iter().fold(
            Record::new().int("samples", records.len() as u64),
            |r, (c, n)| r.int(c.as_str(), *n as u64),
        );
        let v = serde_json::json!({
            "records": records.iter().map(BasinRecord::json).collect::<Vec<_>>(),
            "summary": summary.into_value(),
        });
        write_json(&mut w, &v)?;
    } else {
        let header = "sample_id,alpha0,beta0,gamma0,delta0,class,iters,residual,match_distance";
        writeln!(w, "{header}")?;
        for r in &records {
            csv_line(&mut w, &r.csv())?;
        }
        let total = records.len() as f64;
        let summary: Vec<String> = counts
            .iter()
            .map(|(c, n)| format!("{c}={n} ({:.2}%)", 100.0 * *n as f64 / total))
            .collect();
        writeln!(w, "# samples={} {}", records.len(), summary.join(" "))?;
    }
    w.flush()?;
    Ok(EXIT_OK)
}

pub fn solve_trapezoid_cmd(args: &TrapezoidArgs, stdout: &mut dyn Write) -> CmdResult {
    let fp = solve_trapezoid_fixed_point_in((args.lo, args.hi), args.tol)?;
    let a = fp.attracting.solution;
    let slope = c_map_slope(a, args.h)?;
    let rec = Record::new()
        .num("a", a)
        .num("c_of_a", c_map(a)?)
        .num("residual", fp.attracting.residual_norm)
        .int(
            "iterations",
            (fp.bracketed.iterations + fp.attracting.iterations) as u64,
        )
        .num("bracket_lo", args.lo)
        .num("bracket_hi", args.hi)
        .num("slope", slope)
        .num("repelling", fp.repelling)
        .flag("converged", fp.attracting.converged);
    let mut w = sink(&args.out, stdout)?;
    write_json(&mut w, &rec.into_value())?;
    w.flush()?;
    Ok(EXIT_OK)
}

pub fn solve_cycle_cmd(args: &CycleSolveArgs, stdout: &mut dyn Write) -> CmdResult {
    let initial = match &args.initial {
        None => None,
        Some(v) => match v.as_slice() {
            &[alpha, gamma, delta] => Some(ChartPoint::new(alpha, gamma, delta)),
            _ => {
                return Err(CliError::Usage(format!(
                    "--initial needs 3 values (alpha, gamma, delta), got {}",
                    v.len()
                )))
            }
        },
    };
    let r = solve_cycle_system(initial, args.tol, args.max_iter)?;
    let q = r.solution.to_angles()?;
    let rec = Record::new()
        .angles("", q.as_array())
        .num("residual", cycle_residual(&r.solution).amax())
        .int("iterations", r.iterations as u64)
        .flag("converged", r.converged);
    let mut w = sink(&args.out, stdout)?;
    write_json(&mut w, &rec.into_value())?;
    w.flush()?;
    Ok(EXIT_OK)
}

pub fn stability_cmd(args: &StabilityArgs, stdout: &mut dyn Write) -> CmdResult {
    let q = parse_angles(&args.angles.angles)?;
    let order = MapOrder::from_order(args.order)
        .ok_or_else(|| CliError::Usage(format!("--order must be 1 or 2, got {}", args.order)))?;
    let r = stability_report(&q, order, args.h)?;
    let mut rec = Record::new()
        .int("order", order.order() as u64)
        .num("h", r.fd_step)
        .num("spectral_radius", r.spectral_radius)
        .flag("attracting", r.is_attracting());
    for (i, m) in r.eigenvalue_moduli.iter().enumerate() {
        rec = rec.num(&format!("modulus_{i}"), *m);
    }
    for i in 0..3 {
        for j in 0..3 {
            rec = rec.num(&format!("j{i}{j}"), r.jacobian[(i, j)]);
        }
    }
    let mut w = sink(&args.out, stdout)?;
    write_json(&mut w, &rec.into_value())?;
    w.flush()?;
    Ok(EXIT_OK)
}

/// Run the checks with the given edge construction and report them.
pub fn verify_with(edges: EdgesFn, args: &VerifyArgs, stdout: &mut dyn Write) -> CmdResult {
    let checks = run_checks(edges);
    let all = checks.iter().all(|c| c.passed);
    if args.json {
        let rows = checks
            .iter()
            .map(|c| {
                Record::new()
                    .int("id", c.id as u64)
                    .text("name", c.name)
                    .flag("passed", c.passed)
                    .text("detail", &c.detail)
                    .num("seconds", c.seconds)
                    .into_value()
            })
            .collect();
        write_json(stdout, &Value::Array(rows))?;
    } else {
        for c in &checks {
            let tag = if c.passed { "PASS" } else { "FAIL" };
            writeln!(
                stdout,
                "[{tag}] {:>2} {:<32} {:>7.3}s  {}",
                c.id, c.name, c.seconds, c.detail
            )?;
        }
        let total: f64 = checks.iter().map(|c| c.seconds).sum();
        let passed = checks.iter().filter(|c| c.passed).count();
        writeln!(
            stdout,
            "{passed}/{} checks passed in {total:.3}s",
            checks.len()
        )?;
    }
    Ok(if all { EXIT_OK } else { EXIT_VERIFY_FAILED })
}

pub fn verify_cmd(args: &VerifyArgs, stdout: &mut dyn Write) -> CmdResult {
    verify_with(library_edges, args, stdout)
}
