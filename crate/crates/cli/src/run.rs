//! Command dispatch: turns parsed arguments into reports on stdout.
//!
//! Exit codes: 0 success, 1 internal numeric failure, 2 input/parse
//! error, 3 disconnected graph where a connected one is required, 4
//! violated inequality / failed certification, 5 order above a hard
//! cap. Stdout carries pure data; diagnostics go to stderr.

use crate::args::{Cli, Command, Format, InputArgs, ProductArgs, ScanCommand, VerifyBoundsArgs};
use crate::emit::{self, PartialReport, ProductOutput, SingleBoundsOutput};
use crate::input;
use bhix_core::bounds::{check_all, DEFAULT_P_GRID};
use bhix_core::ops::{construct, predicted_bh, OpKind};
use bhix_core::scan;
use bhix_core::{index_report, indices, Error, Graph};
use std::io::Write;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_DISCONNECTED: i32 = 3;
pub const EXIT_VIOLATION: i32 = 4;
pub const EXIT_TOO_LARGE: i32 = 5;

/// Maps a library error to the CLI exit code contract.
pub fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::Disconnected(_) | Error::DisconnectedResult(_) => EXIT_DISCONNECTED,
        Error::TooLarge { .. } => EXIT_TOO_LARGE,
        Error::NoConvergence { .. } => EXIT_INTERNAL,
        // A scan that cannot name its extremal graph unambiguously has
        // not verified the claim.
        Error::AmbiguousWitness(_) => EXIT_VIOLATION,
        _ => EXIT_PARSE,
    }
}

fn workers_or_default(requested: Option<usize>) -> usize {
    match requested {
        Some(w) => w.max(1),
        None => std::thread::available_parallelism()
            .map(|p| p.get())
            .unwrap_or(1),
    }
}

/// Runs one parsed command, writing data to `out` and diagnostics to
/// `err`; returns the process exit code.
pub fn execute(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let format = cli.format;
    let workers = workers_or_default(cli.workers);
    let result = match cli.command {
        Command::Compute(args) => cmd_compute(&args, format, out, err),
        Command::VerifyBounds(args) => cmd_verify_bounds(&args, format, workers, out),
        Command::Scan { which } => cmd_scan(which, format, workers, out),
        Command::Product(args) => cmd_product(&args, format, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code_for(&e)
        }
    }
}

fn cmd_compute(
    args: &InputArgs,
    format: Format,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, Error> {
    let g = input::graph_from_input(args)?;
    if !g.is_connected() {
        // Spectral and distance routes need connectivity; report the
        // degree-local quantities that survive, with tau = 0.
        let partial = PartialReport {
            n: g.n(),
            m: g.m(),
            zagreb_m1: indices::zagreb_m1(&g),
            forgotten_f: indices::forgotten_f(&g),
            triangles: g.triangle_count(),
        };
        write_out(out, &emit::render_partial_report(&partial, format))?;
        let _ = writeln!(
            err,
            "graph is disconnected ({} components); index values requiring connectivity are omitted",
            g.component_count()
        );
        return Ok(EXIT_DISCONNECTED);
    }
    let report = index_report(&g)?;
    write_out(out, &emit::render_index_report(&report, format))?;
    Ok(EXIT_OK)
}

fn cmd_verify_bounds(
    args: &VerifyBoundsArgs,
    format: Format,
    workers: usize,
    out: &mut dyn Write,
) -> Result<i32, Error> {
    let p_grid: Option<Vec<f64>> = match &args.p {
        Some(raw) => Some(input::parse_p_grid(raw)?),
        None => None,
    };
    if args.exhaustive {
        if args.input.family.is_some() || args.input.graph6.is_some() || args.input.edges.is_some()
        {
            return Err(Error::InvalidInput(
                "--exhaustive sweeps all graphs of order --n; drop the graph source flags".into(),
            ));
        }
        if p_grid.is_some() {
            return Err(Error::InvalidInput(
                "--p applies to single-graph checks; the exhaustive sweep uses the default grid"
                    .into(),
            ));
        }
        let n = args
            .input
            .n
            .ok_or_else(|| Error::InvalidInput("--exhaustive requires --n".into()))?;
        let report = scan::bound_soundness_sweep(n, workers)?;
        let ok = report.holds_all && report.equality_certification_ok;
        write_out(out, &emit::render_bound_sweep(&report, format))?;
        return Ok(if ok { EXIT_OK } else { EXIT_VIOLATION });
    }
    let g = input::graph_from_input(&args.input)?;
    let reports = check_all(&g, p_grid.as_deref())?;
    let all_hold = reports.iter().all(|r| r.holds);
    let output = SingleBoundsOutput {
        graph6: g.to_graph6().ok(),
        n: g.n(),
        m: g.m(),
        p_grid: p_grid.unwrap_or_else(|| DEFAULT_P_GRID.to_vec()),
        reports,
        all_hold,
    };
    write_out(out, &emit::render_single_bounds(&output, format))?;
    Ok(if all_hold { EXIT_OK } else { EXIT_VIOLATION })
}

fn cmd_scan(
    which: ScanCommand,
    format: Format,
    workers: usize,
    out: &mut dyn Write,
) -> Result<i32, Error> {
    match which {
        ScanCommand::Trees { n } => {
            let report = scan::conjecture_scan(n)?;
            let ok = report.conjecture_verified;
            write_out(out, &emit::render_tree_scan(&report, format))?;
            Ok(if ok { EXIT_OK } else { EXIT_VIOLATION })
        }
        ScanCommand::Diameter2 { n } => {
            let report = scan::diameter2_scan(n, workers)?;
            let ok = report.verified;
            write_out(out, &emit::render_diameter2_scan(&report, format))?;
            Ok(if ok { EXIT_OK } else { EXIT_VIOLATION })
        }
        ScanCommand::T52 { n } => {
            let report = scan::diameter_threshold_scan(n)?;
            let ok = report.verified;
            write_out(out, &emit::render_threshold_scan(&report, format))?;
            Ok(if ok { EXIT_OK } else { EXIT_VIOLATION })
        }
        ScanCommand::Families { n_max } => {
            let report = scan::families_scan(n_max)?;
            let ok = report.verified;
            write_out(out, &emit::render_families_scan(&report, format))?;
            Ok(if ok { EXIT_OK } else { EXIT_VIOLATION })
        }
    }
}

fn cmd_product(args: &ProductArgs, format: Format, out: &mut dyn Write) -> Result<i32, Error> {
    let op = OpKind::parse(&args.op)?;
    let a = input::load_operand(&args.a)?;
    let b: Option<Graph> = match &args.b {
        Some(raw) => Some(input::load_operand(raw)?),
        None => None,
    };
    if matches!(op, OpKind::Complement) && b.is_some() {
        return Err(Error::InvalidInput(
            "complement is unary; drop --b".into(),
        ));
    }
    let tolerance = input::tolerance_from_env()?;
    let result = construct(op, &a, b.as_ref())?;
    let predicted = predicted_bh(op, &a, b.as_ref())?;
    let direct = indices::biharmonic_index(&result)?;
    let agree = (predicted - direct).abs() <= tolerance * direct.abs().max(1.0);
    let output = ProductOutput {
        op: op.as_str().to_string(),
        result_n: result.n(),
        result_m: result.m(),
        result_graph6: result.to_graph6().ok(),
        predicted_bh: predicted,
        direct_bh: direct,
        tolerance,
        agree,
    };
    write_out(out, &emit::render_product(&output, format))?;
    Ok(if agree { EXIT_OK } else { EXIT_VIOLATION })
}

fn write_out(out: &mut dyn Write, data: &str) -> Result<(), Error> {
    out.write_all(data.as_bytes())
        .map_err(|e| Error::InvalidInput(format!("cannot write output: {e}")))
}
