mod certify;
mod input;

use std::fmt::Write as _;
use std::io::{self, IsTerminal, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use fano_core::embed::{
    classify_triangular, color_automorphism_group, embedding_isomorphisms, euler_characteristic, to_dot,
    trace_faces, triangular_completions, two_coloring,
};
use fano_core::group::PermGroup;
use fano_core::kirkman15::{parallel_classes, point_label};
use fano_core::octonion::cartan_table;
use fano_core::orient::{all_circuits, all_orientations, oriented_automorphism_group, qr_orientation, OrientedFano};
use fano_core::steiner::{automorphism_group, orthogonal_mates};
use fano_core::{Permutation, Triple, TripleSystem};
use serde::Serialize;
use serde_json::json;

use crate::certify::Status;
use crate::input::{Builtin, CliError};

#[derive(Parser)]
#[command(name = "fano", version, about = "Certify and explore orthogonal Fano planes and their relatives")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EnumKind {
    Mates,
    Orientations,
    Circuits,
    ParallelClasses,
}

#[derive(Subcommand)]
enum Command {
    /// Run every certificate; exit 1 if any fails.
    VerifyAll {
        /// Include wall-clock time per check (makes output non-reproducible).
        #[arg(long)]
        timings: bool,
    },
    /// List mates, orientations or circuits of a Fano plane, or parallel classes of an STS.
    Enumerate {
        kind: EnumKind,
        #[arg(long)]
        design: Option<PathBuf>,
        #[arg(long, value_enum)]
        builtin: Option<Builtin>,
    },
    /// Trace the faces of a rotation system of K_n.
    Faces {
        #[arg(long)]
        rotation: Option<PathBuf>,
        #[arg(long, value_enum)]
        builtin: Option<Builtin>,
        /// Emit Graphviz instead of the face listing.
        #[arg(long)]
        dot: bool,
    },
    /// Find an isomorphism from a triangular rotation of K7 to the classical one.
    Classify {
        #[arg(long)]
        rotation: Option<PathBuf>,
        #[arg(long, value_enum)]
        builtin: Option<Builtin>,
        /// Instead classify every triangular completion of this rotation at
        /// vertex 0, e.g. "(1 5 4 6 2 3)".
        #[arg(long, conflicts_with_all = ["rotation", "builtin"])]
        rho0: Option<String>,
    },
    /// Automorphism group of a design, rotation or oriented plane.
    Aut {
        #[arg(long)]
        design: Option<PathBuf>,
        #[arg(long, conflicts_with = "design")]
        rotation: Option<PathBuf>,
        /// Orientation JSON, read against --design (default: the plane generated by 013).
        #[arg(long, conflicts_with = "rotation")]
        orientation: Option<PathBuf>,
        #[arg(long, value_enum)]
        builtin: Option<Builtin>,
    },
    /// Multiplication table of the imaginary octonion units.
    OctonionTable {
        /// Orientation JSON, read against --design (default: the residue orientation).
        #[arg(long)]
        orientation: Option<PathBuf>,
        #[arg(long, requires = "orientation")]
        design: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    let result = run(&cli, &mut out);
    let mut stdout = io::stdout().lock();
    if stdout.write_all(out.as_bytes()).and_then(|_| stdout.flush()).is_err() {
        return ExitCode::from(2);
    }
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn run(cli: &Cli, out: &mut String) -> Result<ExitCode, CliError> {
    let json = cli.format == Format::Json;
    match &cli.command {
        Command::VerifyAll { timings } => verify_all(*timings, json, out),
        Command::Enumerate { kind, design, builtin } => {
            let d = input::design(design.as_deref(), *builtin)?;
            enumerate(*kind, &d, json, out)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Faces { rotation, builtin, dot } => {
            let r = input::rotation(rotation.as_deref(), *builtin)?;
            if *dot {
                out.push_str(&to_dot(&r));
            } else {
                faces(&r, json, out)?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Classify { rotation, builtin, rho0 } => {
            match rho0 {
                Some(text) => classify_completions(text, json, out)?,
                None => classify(&input::rotation(rotation.as_deref(), *builtin)?, json, out)?,
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Aut { design, rotation, orientation, builtin } => {
            aut(design, rotation, orientation, *builtin, json, out)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::OctonionTable { orientation, design } => {
            let o = match orientation {
                Some(path) => input::oriented(path, input::design(design.as_deref(), Some(Builtin::B1))?)?,
                None => qr_orientation(),
            };
            let table = cartan_table(&o);
            if json {
                push_json(out, &table);
            } else {
                out.push_str(&table.to_text());
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn push_json<T: Serialize>(out: &mut String, value: &T) {
    out.push_str(&serde_json::to_string_pretty(value).expect("values serialise"));
    out.push('\n');
}

fn use_color() -> bool {
    std::env::var_os("NO_COLOR").is_none_or(|v| v.is_empty()) && io::stdout().is_terminal()
}

fn verify_all(timings: bool, json: bool, out: &mut String) -> Result<ExitCode, CliError> {
    let reports = certify::run_all(timings);
    let failed = reports.iter().filter(|r| r.status == Status::Fail).count();
    if json {
        push_json(out, &reports);
    } else {
        let color = use_color();
        for r in &reports {
            let (label, code) = match r.status {
                Status::Pass => ("PASS", "32"),
                Status::Fail => ("FAIL", "31"),
            };
            if color {
                write!(out, "\x1b[{code}m{label}\x1b[0m").unwrap();
            } else {
                out.push_str(label);
            }
            write!(out, "  {:<32} {}", r.check, r.witness).unwrap();
            if let Some(ms) = r.millis {
                write!(out, "  ({ms:.1} ms)").unwrap();
            }
            out.push('\n');
        }
        writeln!(out, "{}/{} checks passed", reports.len() - failed, reports.len()).unwrap();
    }
    Ok(if failed == 0 { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

/// Points of a 15-point system use the `3'` / `inf` labels.
fn label(v: usize, x: usize) -> String {
    if v == 15 {
        point_label(x)
    } else {
        x.to_string()
    }
}

fn triple_text(v: usize, t: &Triple) -> String {
    let [a, b, c] = t.points();
    format!("{{{},{},{}}}", label(v, a), label(v, b), label(v, c))
}

fn blocks_text(d: &TripleSystem) -> String {
    d.blocks().iter().map(|t| triple_text(d.v(), t)).collect::<Vec<_>>().join(" ")
}

fn perm_text(v: usize, p: &Permutation) -> String {
    let cycles = p.cycles();
    if cycles.is_empty() {
        return "()".into();
    }
    cycles
        .iter()
        .map(|c| format!("({})", c.iter().map(|&x| label(v, x)).collect::<Vec<_>>().join(" ")))
        .collect()
}

fn logic<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Logic(e.to_string())
}

fn enumerate(kind: EnumKind, d: &TripleSystem, json: bool, out: &mut String) -> Result<(), CliError> {
    match kind {
        EnumKind::Mates => {
            let mates = orthogonal_mates(d).map_err(logic)?;
            if json {
                push_json(out, &mates);
            } else {
                writeln!(out, "{} orthogonal mates", mates.len()).unwrap();
                for m in &mates {
                    writeln!(out, "{}", blocks_text(m)).unwrap();
                }
            }
        }
        EnumKind::Orientations => {
            let all = all_orientations(d).map_err(logic)?;
            if json {
                push_json(out, &all);
            } else {
                writeln!(out, "{} orientations", all.len()).unwrap();
                for o in &all {
                    let arcs: Vec<String> = o.orientation().arcs().iter().map(|(x, y)| format!("{x}>{y}")).collect();
                    writeln!(out, "{}", arcs.join(" ")).unwrap();
                }
            }
        }
        EnumKind::Circuits => {
            let all = all_circuits(d).map_err(logic)?;
            if json {
                push_json(out, &all);
            } else {
                writeln!(out, "{} circuits", all.len()).unwrap();
                for c in &all {
                    writeln!(out, "{c}").unwrap();
                }
            }
        }
        EnumKind::ParallelClasses => {
            let classes = parallel_classes(d).map_err(logic)?;
            if json {
                push_json(out, &classes);
            } else {
                writeln!(out, "{} parallel classes", classes.len()).unwrap();
                for class in &classes {
                    let line: Vec<String> = class.iter().map(|t| triple_text(d.v(), t)).collect();
                    writeln!(out, "{}", line.join(" ")).unwrap();
                }
            }
        }
    }
    Ok(())
}

fn faces(r: &fano_core::RotationSystem, json: bool, out: &mut String) -> Result<(), CliError> {
    let faces = trace_faces(r);
    let chi = euler_characteristic(r);
    let coloring = two_coloring(r).ok();
    if json {
        push_json(out, &json!({ "faces": faces, "euler_characteristic": chi, "coloring": coloring }));
        return Ok(());
    }
    writeln!(out, "{} faces", faces.len()).unwrap();
    for f in &faces {
        writeln!(out, "{f}").unwrap();
    }
    writeln!(out, "euler characteristic: {chi}").unwrap();
    match coloring {
        Some(c) => {
            let line = |fs: &[fano_core::embed::Face]| fs.iter().map(|f| f.to_string()).collect::<Vec<_>>().join(" ");
            writeln!(out, "class A: {}", line(&c.class_a)).unwrap();
            writeln!(out, "class B: {}", line(&c.class_b)).unwrap();
        }
        None => out.push_str("faces are not 2-colourable\n"),
    }
    Ok(())
}

fn classify(r: &fano_core::RotationSystem, json: bool, out: &mut String) -> Result<(), CliError> {
    let (sigma, kind) = classify_triangular(r).map_err(logic)?;
    if json {
        push_json(out, &json!({ "witness": sigma, "kind": kind }));
    } else {
        writeln!(out, "witness {sigma} ({kind:?})").unwrap();
    }
    Ok(())
}

fn parse_rho0(text: &str) -> Result<Vec<usize>, CliError> {
    text.split(|c: char| c.is_whitespace() || matches!(c, ',' | '(' | ')' | '[' | ']'))
        .filter(|s| !s.is_empty())
        .map(|s| s.parse().map_err(|_| CliError::Usage(format!("bad vertex {s:?} in --rho0"))))
        .collect()
}

fn classify_completions(text: &str, json: bool, out: &mut String) -> Result<(), CliError> {
    let rho0 = parse_rho0(text)?;
    let completions = triangular_completions(&rho0).map_err(logic)?;
    let mut rows = Vec::new();
    for r in &completions {
        let (sigma, kind) = classify_triangular(r).map_err(logic)?;
        rows.push(json!({ "rotation": r, "witness": sigma, "kind": kind }));
        if !json {
            let cycles: Vec<String> = (0..r.n())
                .map(|x| format!("{x}:({})", r.cycle(x).iter().map(|y| y.to_string()).collect::<Vec<_>>().join(" ")))
                .collect();
            writeln!(out, "{}  witness {sigma} ({kind:?})", cycles.join(" ")).unwrap();
        }
    }
    if json {
        push_json(out, &rows);
    } else {
        writeln!(out, "{} triangular completions", completions.len()).unwrap();
    }
    Ok(())
}

fn group_report(v: usize, g: &PermGroup, json: bool, out: &mut String) {
    if json {
        push_json(
            out,
            &json!({ "order": g.order(), "kind": g.classify_order21().ok(), "elements": g.elements() }),
        );
        return;
    }
    writeln!(out, "order: {}", g.order()).unwrap();
    if let Ok(kind) = g.classify_order21() {
        writeln!(out, "kind: {kind:?}").unwrap();
    }
    for p in g {
        writeln!(out, "{}", perm_text(v, p)).unwrap();
    }
}

fn aut(
    design: &Option<PathBuf>,
    rotation: &Option<PathBuf>,
    orientation: &Option<PathBuf>,
    builtin: Option<Builtin>,
    json: bool,
    out: &mut String,
) -> Result<(), CliError> {
    if let Some(path) = orientation {
        let plane = input::design(design.as_deref(), Some(Builtin::B1))?;
        return oriented_aut(&input::oriented(path, plane)?, json, out);
    }
    if rotation.is_some() || builtin == Some(Builtin::ClassicalRotation) {
        let r = input::rotation(rotation.as_deref(), builtin)?;
        let isos = embedding_isomorphisms(&r, &r).map_err(logic)?;
        let colour = color_automorphism_group(&r).ok();
        if json {
            let elements: Vec<_> = isos.iter().map(|(p, k)| json!({ "map": p, "kind": k })).collect();
            push_json(
                out,
                &json!({ "order": isos.len(), "color_preserving_order": colour.map(|g| g.order()), "elements": elements }),
            );
        } else {
            writeln!(out, "order: {}", isos.len()).unwrap();
            if let Some(g) = colour {
                writeln!(out, "colour-preserving order: {}", g.order()).unwrap();
            }
            for (p, k) in &isos {
                writeln!(out, "{p} ({k:?})").unwrap();
            }
        }
        return Ok(());
    }
    if builtin == Some(Builtin::QrOrientation) && design.is_none() {
        return oriented_aut(&qr_orientation(), json, out);
    }
    let d = input::design(design.as_deref(), builtin)?;
    let g = automorphism_group(&d).map_err(logic)?;
    group_report(d.v(), &g, json, out);
    Ok(())
}

fn oriented_aut(o: &OrientedFano, json: bool, out: &mut String) -> Result<(), CliError> {
    group_report(7, &oriented_automorphism_group(o), json, out);
    Ok(())
}
