//! `equivol`: realizability checks, volume bounds, families and census runs
//! for equiangular hyperbolic polyhedra.

use std::ffi::OsString;
use std::fs;
use std::io::{self, IsTerminal, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use equivol_core::andreev;
use equivol_core::bounds::{self, VolumeCase};
use equivol_core::census;
use equivol_core::families::{self, FamilyTag};
use equivol_core::lobachevsky::{lobachevsky, Angle};
use equivol_core::polyhedron::{AbstractPolyhedron, AngleKind};
use serde_json::Value;

#[derive(Parser)]
#[command(name = "equivol", version, about = "Equiangular hyperbolic polyhedra: realizability, volume bounds, census")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Faces,
    #[value(name = "planar_code")]
    PlanarCode,
}

#[derive(Subcommand)]
enum Command {
    /// Decide realizability and print the report (exit 2 when not realizable).
    Check {
        #[arg(long, value_parser = parse_kind)]
        kind: AngleKind,
        #[arg(long, value_enum, default_value = "faces")]
        format: Format,
        /// Input file, or - for standard input.
        input: PathBuf,
    },
    /// Print the two-sided volume bounds.
    Bounds {
        #[arg(long, value_parser = parse_kind)]
        kind: AngleKind,
        #[arg(long, value_enum, default_value = "faces")]
        format: Format,
        input: PathBuf,
    },
    /// Emit a family member, or a bound-per-vertex table with --report.
    Family {
        #[arg(long, value_parser = parse_family)]
        name: FamilyTag,
        /// Parameter m (octglue) or k (grid families).
        #[arg(long, required_unless_present = "report")]
        param: Option<usize>,
        #[arg(long, value_enum, default_value = "faces")]
        emit: Format,
        #[arg(long)]
        output: Option<PathBuf>,
        /// Print the asymptotic table for parameters FROM..=TO.
        #[arg(long, num_args = 2, value_names = ["FROM", "TO"])]
        report: Option<Vec<usize>>,
    },
    /// Evaluate the Lobachevsky function. Accepts forms like 0.5, pi/4, 2pi/3.
    Lobachevsky {
        #[arg(allow_hyphen_values = true)]
        theta: String,
    },
    /// Annotate a planar_code stream and write a JSONL catalog.
    Census {
        #[arg(long, value_parser = parse_kind)]
        kind: AngleKind,
        /// Keep only records whose volume may be at most this value.
        #[arg(long)]
        max_volume: Option<f64>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        output: Option<PathBuf>,
        /// Also write a CSV summary here.
        #[arg(long)]
        csv: Option<PathBuf>,
        input: PathBuf,
    },
    /// Largest vertex count compatible with a volume cap.
    InvertBound {
        #[arg(long, value_parser = parse_case)]
        kind: VolumeCase,
        #[arg(long)]
        volume: f64,
    },
}

fn parse_kind(s: &str) -> Result<AngleKind, String> {
    s.parse::<AngleKind>().map_err(|e| e.to_string())
}

fn parse_family(s: &str) -> Result<FamilyTag, String> {
    s.parse::<FamilyTag>().map_err(|e| e.to_string())
}

fn parse_case(s: &str) -> Result<VolumeCase, String> {
    s.parse::<VolumeCase>().map_err(|e| e.to_string())
}

/// An input or usage problem, reported on one line with exit code 1.
struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

fn read_input(path: &PathBuf) -> Result<Vec<u8>, Failure> {
    if path.as_os_str() == "-" {
        let mut buf = Vec::new();
        io::stdin().read_to_end(&mut buf)?;
        Ok(buf)
    } else {
        fs::read(path).map_err(|e| Failure(format!("{}: {e}", path.display())))
    }
}

fn load_polyhedron(path: &PathBuf, format: Format) -> Result<AbstractPolyhedron, Failure> {
    let bytes = read_input(path)?;
    match format {
        Format::Faces => {
            let text = String::from_utf8(bytes).map_err(|_| Failure("input is not UTF-8 JSON".into()))?;
            Ok(AbstractPolyhedron::from_faces_json(&text)?)
        }
        Format::PlanarCode => {
            let graphs = census::parse_planar_code(&bytes)?;
            match graphs.as_slice() {
                [g] => Ok(census::to_polyhedron(g)?),
                other => Err(Failure(format!("expected exactly one graph, found {}", other.len()))),
            }
        }
    }
}

/// Rounds every number in a JSON tree to `digits` significant digits.
fn round_numbers(v: &mut Value, digits: usize) {
    match v {
        Value::Number(n) if n.is_f64() => {
            let x = n.as_f64().expect("f64 number");
            let rounded: f64 = format!("{:.*e}", digits - 1, x).parse().expect("formatted float");
            if let Some(num) = serde_json::Number::from_f64(rounded) {
                *n = num;
            }
        }
        Value::Array(items) => items.iter_mut().for_each(|x| round_numbers(x, digits)),
        Value::Object(map) => map.values_mut().for_each(|x| round_numbers(x, digits)),
        _ => {}
    }
}

fn format_sig(x: f64, digits: usize) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let exp = x.abs().log10().floor() as i64;
    let decimals = (digits as i64 - 1 - exp).max(0) as usize;
    format!("{x:.decimals$}")
}

fn parse_theta(s: &str) -> Result<f64, Failure> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect::<String>().to_lowercase().replace('π', "pi");
    let bad = || Failure(format!("cannot read angle {s:?}; use a number or forms like pi/4, 2pi/3"));
    let Some(at) = t.find("pi") else {
        return t.parse::<f64>().map_err(|_| bad());
    };
    let coef = t[..at].trim_end_matches('*');
    let coef = match coef {
        "" | "+" => 1.0,
        "-" => -1.0,
        c => c.parse::<f64>().map_err(|_| bad())?,
    };
    let rest = &t[at + 2..];
    let denom = match rest {
        "" => 1.0,
        r if r.starts_with('/') => r[1..].parse::<f64>().map_err(|_| bad())?,
        _ => return Err(bad()),
    };
    Ok(coef * std::f64::consts::PI / denom)
}

fn write_out(path: Option<&PathBuf>, bytes: &[u8]) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, bytes).map_err(|e| Failure(format!("{}: {e}", p.display()))),
        None => {
            let mut out = io::stdout().lock();
            match out.write_all(bytes).and_then(|_| out.flush()) {
                Err(e) if e.kind() != io::ErrorKind::BrokenPipe => Err(e.into()),
                _ => Ok(()),
            }
        }
    }
}

fn styled_note(text: &str) -> String {
    let plain = std::env::var_os("EQUIVOL_NO_COLOR").is_some() || !io::stderr().is_terminal();
    if plain {
        text.to_string()
    } else {
        format!("\x1b[1m{text}\x1b[0m")
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Check { kind, format, input } => {
            let p = load_polyhedron(&input, format)?;
            let report = andreev::check(&p, kind);
            write_out(None, format!("{}\n", serde_json::to_string_pretty(&report)?).as_bytes())?;
            Ok(if report.realizable { 0 } else { 2 })
        }
        Command::Bounds { kind, format, input } => {
            let p = load_polyhedron(&input, format)?;
            let report = andreev::check(&p, kind);
            if !report.realizable {
                let failed: Vec<&str> = report.failed_conditions().iter().map(|c| c.as_str()).collect();
                eprintln!("not realizable: {}", failed.join(","));
                return Ok(2);
            }
            let b = bounds::bounds_from_report(&p, &report)?;
            let mut v = serde_json::to_value(&b)?;
            round_numbers(&mut v, 12);
            write_out(None, format!("{}\n", serde_json::to_string_pretty(&v)?).as_bytes())?;
            Ok(0)
        }
        Command::Family { name, param, emit, output, report } => {
            if let Some(range) = report {
                let rows = families::asymptotic_report(name, range[0]..=range[1])?;
                let mut text = String::from("param\tN\tlower\tupper\tlower/N\tupper/N\n");
                for r in rows {
                    text.push_str(&format!(
                        "{}\t{}\t{}\t{}\t{}\t{}\n",
                        r.param,
                        r.n,
                        format_sig(r.lower, 12),
                        format_sig(r.upper, 12),
                        format_sig(r.lower_per_vertex, 12),
                        format_sig(r.upper_per_vertex, 12)
                    ));
                }
                write_out(output.as_ref(), text.as_bytes())?;
                return Ok(0);
            }
            let param = param.ok_or_else(|| Failure("--param is required".into()))?;
            let member = name.build(param)?;
            let bytes = match emit {
                Format::Faces => {
                    let mut s = serde_json::to_string(&member.polyhedron.to_faces_json())?;
                    s.push('\n');
                    s.into_bytes()
                }
                Format::PlanarCode => {
                    census::write_planar_code(&[census::from_polyhedron(&member.polyhedron)], true)?
                }
            };
            write_out(output.as_ref(), &bytes)?;
            Ok(0)
        }
        Command::Lobachevsky { theta } => {
            let t = parse_theta(&theta)?;
            write_out(None, format!("{}\n", format_sig(lobachevsky(Angle::new(t)), 15)).as_bytes())?;
            Ok(0)
        }
        Command::Census { kind, max_volume, jobs, output, csv, input } => {
            if let Some(v) = max_volume {
                if !(v.is_finite() && v >= 0.0) {
                    return Err(Failure(format!("--max-volume must be finite and non-negative, got {v}")));
                }
            }
            let bytes = read_input(&input)?;
            let name = if input.as_os_str() == "-" { "stdin".to_string() } else { input.display().to_string() };
            let inputs = census::census_inputs(&bytes, &name)?;
            let mut records = census::annotate(&inputs, kind, jobs.max(1));
            let total = records.len();
            if let Some(v) = max_volume {
                records = census::filter_by_volume_cap(&records, v);
            }
            let mut buf = Vec::new();
            census::write_jsonl(&records, &mut buf)?;
            write_out(output.as_ref(), &buf)?;
            if let Some(path) = csv {
                let mut out = Vec::new();
                census::write_csv(&records, &mut out)?;
                fs::write(&path, out).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
            }
            eprintln!("{}", styled_note(&format!("{} of {total} records written", records.len())));
            Ok(0)
        }
        Command::InvertBound { kind, volume } => {
            write_out(None, format!("{}\n", bounds::max_vertices_for_volume(volume, kind)?).as_bytes())?;
            Ok(0)
        }
    }
}

fn main_with(args: Vec<OsString>) -> u8 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return 0;
            }
            let text = e.to_string();
            let line = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("invalid arguments");
            eprintln!("{line}");
            return 1;
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(Failure(msg)) => {
            eprintln!("error: {}", msg.lines().next().unwrap_or(""));
            1
        }
    }
}

fn main() -> ExitCode {
    ExitCode::from(main_with(std::env::args_os().collect()))
}
