//! `goldman`: command-line front end for goldman-core.

mod render;

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use goldman_core::algebra::{holonomy, wilson_normal_form, QPhasePoly};
use goldman_core::calibration::{self, AREA_ORIENTATION, PHASE_SIGN};
use goldman_core::geometry::{shoelace_area, signed_area_between, PLPath};
use goldman_core::goldman::{
    classical_bracket, direct_commutator, equivalence_sweep, pre_parallelogram_points,
    quantum_bracket_straightforward, refined_report, reroute, torus_intersections, Orientation,
};
use goldman_core::invariants::run_invariant_suite;
use goldman_core::Execution;

use render::{RenderSpec, Style};

#[derive(Parser)]
#[command(name = "goldman", version, about = "Exact Goldman brackets for lattice loops on the torus")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Signed area between two paths with common end points, or of one closed path.
    Area {
        #[arg(allow_hyphen_values = true)]
        p1: PLPath,
        #[arg(allow_hyphen_values = true)]
        p2: Option<PLPath>,
    },
    /// Quantum holonomy of a path.
    Holonomy {
        #[arg(allow_hyphen_values = true)]
        path: PLPath,
    },
    /// Wilson-loop normal form of a path.
    Wilson {
        #[arg(allow_hyphen_values = true)]
        path: PLPath,
    },
    /// Intersection points of two loops on the torus.
    Intersect {
        #[arg(allow_hyphen_values = true)]
        p1: PLPath,
        #[arg(allow_hyphen_values = true)]
        p2: PLPath,
        #[arg(long)]
        json: bool,
    },
    /// Admissible points of the parallelogram and pre-parallelogram.
    Parallelogram {
        #[arg(allow_hyphen_values = true)]
        p1: PLPath,
        #[arg(allow_hyphen_values = true)]
        p2: PLPath,
        #[arg(long)]
        json: bool,
    },
    /// Reroutings of the first loop along the second at each crossing.
    Reroute {
        #[arg(allow_hyphen_values = true)]
        p1: PLPath,
        #[arg(allow_hyphen_values = true)]
        p2: PLPath,
        /// Only the crossing with this index (as listed by `intersect`).
        #[arg(long)]
        index: Option<usize>,
        #[arg(long, value_enum, default_value_t = OrientationArg::Both)]
        orientation: OrientationArg,
        #[arg(long)]
        json: bool,
    },
    /// Goldman bracket of two loops.
    Bracket {
        #[arg(long, value_enum)]
        mode: Mode,
        #[arg(allow_hyphen_values = true)]
        p1: PLPath,
        #[arg(allow_hyphen_values = true)]
        p2: PLPath,
        /// Print the per-crossing breakdown (refined mode).
        #[arg(long)]
        verbose: bool,
        #[arg(long)]
        json: bool,
    },
    /// Sweep all straight pairs up to a bound and run the invariant checks.
    Verify {
        #[arg(long)]
        bound: i64,
        #[arg(long)]
        json: bool,
        /// List every pair, not only mismatches.
        #[arg(long)]
        all: bool,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        sequential: bool,
    },
    /// Write an SVG diagram.
    Render {
        #[arg(long)]
        out: PathBuf,
        #[arg(allow_hyphen_values = true)]
        p1: PLPath,
        #[arg(allow_hyphen_values = true)]
        p2: Option<PLPath>,
        /// Parallelogram, dotted pre-parallelogram and their lattice points.
        #[arg(long)]
        parallelogram: bool,
        /// Overlay the + and - reroutings at every crossing.
        #[arg(long)]
        reroutings: bool,
        /// Shade the region between the two paths.
        #[arg(long)]
        area: bool,
        /// Draw every lattice point in view.
        #[arg(long)]
        dots: bool,
    },
    /// Print the calibration constants.
    Constants,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Classical,
    Straightforward,
    Refined,
    Direct,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OrientationArg {
    #[value(name = "+", alias = "plus")]
    Plus,
    #[value(name = "-", alias = "minus")]
    Minus,
    Both,
}

impl OrientationArg {
    fn orientations(self) -> Vec<Orientation> {
        match self {
            OrientationArg::Plus => vec![Orientation::Positive],
            OrientationArg::Minus => vec![Orientation::Negative],
            OrientationArg::Both => vec![Orientation::Positive, Orientation::Negative],
        }
    }
}

enum Outcome {
    Ok,
    InvariantViolation,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli.command) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::InvariantViolation) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn phased(e: &goldman_core::rat::Rat, body: impl std::fmt::Display) -> String {
    if *e == goldman_core::rat::Rat::from_integer(0) {
        body.to_string()
    } else {
        format!("{}*{body}", QPhasePoly::q_pow(*e))
    }
}

fn straight_class(p: &PLPath) -> Result<(i64, i64)> {
    if !p.is_straight() {
        bail!("{p} is not a straight path; this mode needs straight:m,n inputs");
    }
    let d = p.displacement();
    Ok((d.x, d.y))
}

fn print_json<T: Serialize>(value: &T) -> Result<()> {
    let mut out = std::io::stdout().lock();
    let written = serde_json::to_writer_pretty(&mut out, value)
        .map_err(std::io::Error::from)
        .and_then(|()| writeln!(out));
    match written {
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
        r => Ok(r?),
    }
}

fn run(cmd: Command) -> Result<Outcome> {
    match cmd {
        Command::Area { p1, p2 } => {
            let a = match p2 {
                Some(p2) => signed_area_between(&p1, &p2)?,
                None => shoelace_area(&p1)?,
            };
            println!("{a}");
        }
        Command::Holonomy { path } => println!("{}", holonomy(&path)),
        Command::Wilson { path } => {
            let (e, sym) = wilson_normal_form(&path);
            println!("{}", phased(&e, sym));
        }
        Command::Intersect { p1, p2, json } => {
            let xs = torus_intersections(&p1, &p2)?;
            if json {
                print_json(&xs)?;
            } else {
                println!("{:>3}  {:<12} {:<10} {:<10} {:<10} sign", "#", "point", "s", "t", "translate");
                for (i, x) in xs.iter().enumerate() {
                    println!(
                        "{:>3}  {:<12} {:<10} {:<10} {:<10} {:+}",
                        i,
                        x.point.to_string(),
                        x.param1.to_string(),
                        x.param2.to_string(),
                        x.translate.to_string(),
                        x.sign
                    );
                }
            }
        }
        Command::Parallelogram { p1, p2, json } => {
            let pair = pre_parallelogram_points(&p1, &p2)?;
            if json {
                print_json(&pair)?;
            } else {
                for (name, r) in [("parallelogram", &pair.parallelogram), ("pre-parallelogram", &pair.pre_parallelogram)] {
                    let verts: Vec<String> = r.vertices.iter().map(|v| v.to_string()).collect();
                    let pts: Vec<String> = r.included_points.iter().map(|v| v.to_string()).collect();
                    println!("{name}: {}", verts.join(" "));
                    println!(
                        "  excluded edges: {}-{} {}-{}",
                        r.excluded_edges[0].0, r.excluded_edges[0].1, r.excluded_edges[1].0, r.excluded_edges[1].1
                    );
                    println!("  admissible points ({}): {}", pts.len(), pts.join(" "));
                    println!("  pick area: {}", r.pick_area);
                }
            }
        }
        Command::Reroute { p1, p2, index, orientation, json } => {
            let xs = torus_intersections(&p1, &p2)?;
            let chosen: Vec<(usize, _)> = match index {
                Some(i) => {
                    let x = xs
                        .get(i)
                        .with_context(|| format!("crossing index {i} out of range ({} crossings)", xs.len()))?;
                    vec![(i, x)]
                }
                None => xs.iter().enumerate().collect(),
            };
            #[derive(Serialize)]
            struct Row {
                index: usize,
                orientation: String,
                path: String,
                through_point: String,
                endpoint: String,
                wilson: String,
            }
            let mut rows = vec![];
            for (i, x) in chosen {
                for o in orientation.orientations() {
                    let r = reroute(&p1, x, &p2, o)?;
                    let (e, sym) = wilson_normal_form(&r.path);
                    rows.push(Row {
                        index: i,
                        orientation: o.to_string(),
                        path: r.path.to_string(),
                        through_point: r.through_point.to_string(),
                        endpoint: r.path.endpoint().to_string(),
                        wilson: phased(&e, sym),
                    });
                }
            }
            if json {
                print_json(&rows)?;
            } else {
                for r in rows {
                    println!(
                        "#{} {} {} through {} end {} wilson {}",
                        r.index, r.orientation, r.path, r.through_point, r.endpoint, r.wilson
                    );
                }
            }
        }
        Command::Bracket { mode, p1, p2, verbose, json } => bracket(mode, &p1, &p2, verbose, json)?,
        Command::Verify { bound, json, all, seed, sequential } => return verify(bound, json, all, seed, sequential),
        Command::Render { out, p1, p2, parallelogram, reroutings, area, dots } => {
            let spec = render_spec(p1, p2, parallelogram, reroutings, area, dots)?;
            std::fs::write(&out, render::render_svg(&spec))
                .with_context(|| format!("writing {}", out.display()))?;
        }
        Command::Constants => {
            println!("area_orientation (kappa) = {AREA_ORIENTATION:+}");
            println!("phase_sign (sigma) = {PHASE_SIGN:+}");
            match calibration::self_check() {
                Ok(()) => println!("self-check: ok"),
                Err(e) => {
                    println!("self-check: FAILED: {e}");
                    return Ok(Outcome::InvariantViolation);
                }
            }
        }
    }
    Ok(Outcome::Ok)
}

fn bracket(mode: Mode, p1: &PLPath, p2: &PLPath, verbose: bool, json: bool) -> Result<()> {
    let expr = match mode {
        Mode::Classical => classical_bracket(p1, p2)?,
        Mode::Straightforward => {
            let ((m, n), (s, t)) = (straight_class(p1)?, straight_class(p2)?);
            quantum_bracket_straightforward(m, n, s, t)
        }
        Mode::Direct => {
            let ((m, n), (s, t)) = (straight_class(p1)?, straight_class(p2)?);
            direct_commutator(m, n, s, t)?
        }
        Mode::Refined => {
            let report = refined_report(p1, p2)?;
            if json {
                return print_json(&report);
            }
            let mut out = format!("{}\n", report.expression);
            if verbose {
                for (i, t) in report.terms.iter().enumerate() {
                    let x = &t.intersection;
                    let _ = writeln!(out, "crossing #{i} at {} sign {:+}", x.point, x.sign);
                    for r in [&t.positive, &t.negative] {
                        let _ = writeln!(
                            out,
                            "  {} {} phase {} -> {}",
                            r.rerouting.orientation,
                            r.rerouting.path,
                            r.phase,
                            phased(&r.phase, r.symbol)
                        );
                    }
                }
            }
            if report.experimental {
                let _ = writeln!(out, "experimental: non-straight input");
                let _ = writeln!(out, "straightforward (end point classes): {}", report.reference);
                match &report.discrepancy {
                    Some(d) => {
                        let _ = writeln!(out, "discrepancy: {d}");
                    }
                    None => {
                        let _ = writeln!(out, "discrepancy: none");
                    }
                }
            }
            print!("{out}");
            return Ok(());
        }
    };
    if json {
        #[derive(Serialize)]
        struct Expr {
            expression: String,
        }
        print_json(&Expr { expression: expr.to_string() })
    } else {
        println!("{expr}");
        Ok(())
    }
}

fn verify(bound: i64, json: bool, all: bool, seed: u64, sequential: bool) -> Result<Outcome> {
    if bound < 1 {
        bail!("--bound must be at least 1");
    }
    let exec = if sequential { Execution::Sequential } else { Execution::Parallel };
    let sweep = equivalence_sweep(bound, exec)?;
    let checks = run_invariant_suite(bound, seed, exec);
    let invariants_passed = checks.iter().all(|c| c.passed());
    let conjecture_mismatches = sweep.mismatches().count();
    if json {
        #[derive(Serialize)]
        struct VerifyJson<'a> {
            bound: i64,
            invariants_passed: bool,
            conjecture_mismatches: usize,
            invariants: &'a [goldman_core::invariants::InvariantCheck],
            sweep: &'a goldman_core::goldman::SweepReport,
        }
        print_json(&VerifyJson {
            bound,
            invariants_passed,
            conjecture_mismatches,
            invariants: &checks,
            sweep: &sweep,
        })?;
    } else {
        print!("{}", sweep.render_text(all));
        println!("invariants");
        for c in &checks {
            let tag = if c.passed() { "ok  " } else { "FAIL" };
            print!("  [{tag}] {} ({} cases", c.name, c.cases);
            if !c.passed() {
                print!(", {} failures", c.failures);
            }
            println!(")");
            if let Some(d) = &c.detail {
                println!("         first failure: {d}");
            }
        }
        if conjecture_mismatches == 0 {
            println!("conjecture: refined equals straightforward on every pair");
        } else {
            println!("conjecture: {conjecture_mismatches} mismatching pairs (flagged, not an invariant failure)");
        }
        println!("invariants: {}", if invariants_passed { "all passed" } else { "VIOLATED" });
    }
    Ok(if invariants_passed { Outcome::Ok } else { Outcome::InvariantViolation })
}

fn render_spec(
    p1: PLPath,
    p2: Option<PLPath>,
    parallelogram: bool,
    reroutings: bool,
    area: bool,
    dots: bool,
) -> Result<RenderSpec> {
    let mut spec = RenderSpec {
        lattice_dots: dots,
        ..RenderSpec::default()
    };
    spec.paths.push((p1.clone(), Style::First));
    let needs_second = parallelogram || reroutings || area;
    let Some(p2) = p2 else {
        if needs_second {
            bail!("--parallelogram, --reroutings and --area need two paths");
        }
        return Ok(spec);
    };
    if area {
        signed_area_between(&p1, &p2)?;
        spec.shaded = Some(p1.concat(&p2.reverse())?);
    }
    spec.paths.push((p2.clone(), Style::Second));
    if parallelogram {
        spec.parallelogram = Some(pre_parallelogram_points(&p1, &p2)?);
    }
    if reroutings {
        for x in torus_intersections(&p1, &p2)? {
            for o in [Orientation::Positive, Orientation::Negative] {
                let r = reroute(&p1, &x, &p2, o)?;
                let style = match o {
                    Orientation::Positive => Style::ReroutePositive,
                    Orientation::Negative => Style::RerouteNegative,
                };
                spec.paths.push((r.path, style));
            }
        }
    }
    Ok(spec)
}
