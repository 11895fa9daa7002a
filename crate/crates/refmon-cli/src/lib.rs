//! The `refmon` command line: present, verify, enumerate, orbits, lattice.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use refmon_core::charmap::char_maps;
use refmon_core::closed::{present_arrangement, present_boolean};
use refmon_core::coxeter::CoxeterType;
use refmon_core::idem::{self, atom_name};
use refmon_core::lattice::{Lattice, LatticeKind};
use refmon_core::pipeline::{present_general, Mode as PipelineMode};
use refmon_core::presentation::Presentation;
use refmon_core::renner::{family_system, present_renner, ClassicalFamily};
use refmon_core::system::{System, SystemKind, DEFAULT_CAP};
use refmon_core::verify::{certify, Verdict};
use refmon_core::Error;

pub mod format;

pub const EXIT_OK: i32 = 0;
pub const EXIT_REFUTED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "refmon", version, about = "Reflection monoids and their presentations")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Print a presentation.
    Present {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        mode: Option<Mode>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        out: Option<std::path::PathBuf>,
    },
    /// Certify a presentation against the concrete monoid.
    Verify {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        mode: Option<Mode>,
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Order, idempotent and unit counts of the concrete monoid.
    Enumerate {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: usize,
    },
    /// Orbit representatives of k-sets of hyperplanes, or characteristic maps.
    Orbits {
        #[arg(long = "type")]
        ty: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        chars: bool,
    },
    /// List atoms, minimally dependent sets or independent k-sets.
    Lattice {
        #[arg(long)]
        kind: String,
        #[arg(long)]
        param: usize,
        #[arg(long)]
        list: String,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Mode {
    Full,
    Thinned,
    Closed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Gap,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Cap(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::CapExceeded(_) => Failure::Cap(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

/// What a `--family` flag names.
#[derive(Debug, Clone, Copy)]
enum Target {
    Boolean(CoxeterType),
    Arrangement(CoxeterType),
    Renner(ClassicalFamily),
    Lattice(&'static str),
}

fn parse_family(s: &str) -> Result<Target, Failure> {
    let ty = |c: &str| CoxeterType::parse(c).map_err(Failure::from);
    if let Some(kind) = s.strip_prefix("lattice:") {
        let name = refmon_core::lattice::KIND_NAMES
            .iter()
            .find(|&&k| LatticeKind::parse(kind, 3).map(|l| l.name() == k).unwrap_or(false))
            .ok_or_else(|| Failure::Usage(format!("unknown lattice kind {kind:?}")))?;
        return Ok(Target::Lattice(name));
    }
    if let Some(t) = s.strip_prefix("boolean-") {
        return Ok(Target::Boolean(ty(t)?));
    }
    if let Some(t) = s.strip_prefix("arr-") {
        return Ok(Target::Arrangement(ty(t)?));
    }
    if s.starts_with("renner-") {
        return Ok(Target::Renner(ClassicalFamily::parse(s)?));
    }
    Err(Failure::Usage(format!("unknown family {s:?}")))
}

fn system_kind(t: Target, n: usize) -> Result<Option<SystemKind>, Failure> {
    Ok(match t {
        Target::Boolean(ty) => Some(SystemKind::Boolean(ty, n)),
        Target::Arrangement(ty) => Some(SystemKind::Arrangement(ty, n)),
        Target::Renner(f) => Some(family_system(f, n)?),
        Target::Lattice(_) => None,
    })
}

fn lattice_kind(name: &str, n: usize) -> Result<LatticeKind, Failure> {
    Ok(LatticeKind::parse(name, n)?)
}

/// Closed forms are the default wherever they exist.
fn presentation(t: Target, n: usize, mode: Option<Mode>) -> Result<Presentation, Failure> {
    let p = match (t, mode.unwrap_or(Mode::Closed)) {
        (Target::Lattice(name), m) => {
            let kind = lattice_kind(name, n)?;
            match m {
                Mode::Closed => match kind {
                    LatticeKind::Octa(d) if d >= 3 => idem::present_octahedron(d)?,
                    LatticeKind::Partition(n) => idem::present_arrangement_reduced(CoxeterType::A, n)?,
                    LatticeKind::CoupledT(n) => idem::present_arrangement_reduced(CoxeterType::B, n)?,
                    LatticeKind::CoupledTo(n) => idem::present_arrangement_reduced(CoxeterType::D, n)?,
                    k if k.is_geometric() => idem::present_geometric(k)?,
                    k if k.is_simple() => idem::present_simple_polytope(k)?,
                    k => idem::present_graded_atomic(k)?,
                },
                _ => idem::present_graded_atomic(kind)?,
            }
        }
        (Target::Boolean(ty), Mode::Closed) => present_boolean(ty, n)?,
        (Target::Arrangement(ty), Mode::Closed) => present_arrangement(ty, n)?,
        (Target::Renner(f), Mode::Closed) => present_renner(f, n)?,
        (t, m) => {
            let kind = system_kind(t, n)?.expect("system target");
            let mode = if m == Mode::Full { PipelineMode::Full } else { PipelineMode::Thinned };
            present_general(kind, mode)?
        }
    };
    Ok(p)
}

fn cap_from_env(flag: Option<usize>) -> Result<usize, Failure> {
    if let Some(c) = flag {
        return Ok(c);
    }
    match std::env::var("REFMON_CAP") {
        Ok(v) => v.trim().parse().map_err(|_| Failure::Usage(format!("REFMON_CAP={v:?} is not a number"))),
        Err(_) => Ok(DEFAULT_CAP),
    }
}

fn execute(cmd: Cmd, out: &mut dyn Write) -> Result<i32, Failure> {
    let io = |e: std::io::Error| Failure::Usage(e.to_string());
    match cmd {
        Cmd::Present { family, n, mode, format, out: file } => {
            let p = presentation(parse_family(&family)?, n, mode)?;
            let text = match format {
                Format::Text => p.to_string(),
                Format::Json => format::to_json(&p),
                Format::Gap => format::to_gap(&p),
            };
            match file {
                Some(path) => std::fs::write(path, text).map_err(io)?,
                None => out.write_all(text.as_bytes()).map_err(io)?,
            }
            Ok(EXIT_OK)
        }
        Cmd::Verify { family, n, mode, cap } => {
            let cap = cap_from_env(cap)?;
            let t = parse_family(&family)?;
            let p = presentation(t, n, mode)?;
            let cert = match t {
                Target::Lattice(name) => certify(&p, &Lattice::new(lattice_kind(name, n)?)?, cap)?,
                _ => certify(&p, &System::new(system_kind(t, n)?.expect("system target"))?, cap)?,
            };
            write!(out, "{cert}").map_err(io)?;
            Ok(match cert.verdict {
                Verdict::Certified => EXIT_OK,
                Verdict::Refuted(_) => EXIT_REFUTED,
                Verdict::Inconclusive(_) => EXIT_CAP,
            })
        }
        Cmd::Enumerate { family, n } => {
            let t = parse_family(&family)?;
            match system_kind(t, n)? {
                Some(kind) => {
                    let s = System::new(kind)?;
                    writeln!(out, "system {}", kind.name()).map_err(io)?;
                    writeln!(out, "order {}", s.order()).map_err(io)?;
                    writeln!(out, "idempotents {}", s.idempotent_count()).map_err(io)?;
                    writeln!(out, "units {}", s.unit_count()).map_err(io)?;
                }
                None => {
                    let Target::Lattice(name) = t else { unreachable!() };
                    let l = Lattice::new(lattice_kind(name, n)?)?;
                    writeln!(out, "lattice {}({n})", l.kind().name()).map_err(io)?;
                    writeln!(out, "order {}", l.len()).map_err(io)?;
                    writeln!(out, "atoms {}", l.natoms()).map_err(io)?;
                    writeln!(out, "height {}", l.height()).map_err(io)?;
                }
            }
            Ok(EXIT_OK)
        }
        Cmd::Orbits { ty, n, k, chars } => {
            if chars {
                let maps = char_maps(n, k)?;
                for f in &maps {
                    let tuple: Vec<String> = f.realize().iter().map(|j| set(j)).collect();
                    writeln!(out, "{:?} ({})", f.boxes(), tuple.join(", ")).map_err(io)?;
                }
                writeln!(out, "count {}", maps.len()).map_err(io)?;
            } else {
                let s = System::new(SystemKind::Arrangement(CoxeterType::parse(&ty)?, n))?;
                let l = s.lattice();
                let reps = s.orbit_reps_k(k, |_| true);
                for r in &reps {
                    let names: Vec<String> = r.iter().map(|&a| atom_name(l, a)).collect();
                    writeln!(out, "{{{}}}", names.join(", ")).map_err(io)?;
                }
                writeln!(out, "count {}", reps.len()).map_err(io)?;
            }
            Ok(EXIT_OK)
        }
        Cmd::Lattice { kind, param, list } => {
            let l = Lattice::new(lattice_kind(&kind, param)?)?;
            let sets: Vec<Vec<usize>> = match list.as_str() {
                "atoms" => (0..l.natoms()).map(|a| vec![a]).collect(),
                "mindep" => l.minimally_dependent_brute(),
                other => match other.strip_prefix("indep:").and_then(|k| k.parse().ok()) {
                    Some(k) => l.independent_sets(k),
                    None => return Err(Failure::Usage(format!("unknown list {other:?}"))),
                },
            };
            for s in &sets {
                let names: Vec<String> = s.iter().map(|&a| atom_name(&l, a)).collect();
                if list == "atoms" {
                    writeln!(out, "{} {}", names[0], l.render(l.atom(s[0]))).map_err(io)?;
                } else {
                    writeln!(out, "{{{}}}", names.join(", ")).map_err(io)?;
                }
            }
            writeln!(out, "count {}", sets.len()).map_err(io)?;
            Ok(EXIT_OK)
        }
    }
}

fn set(j: &[u8]) -> String {
    let parts: Vec<String> = j.iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

/// Runs the command line, writing results to `out` and diagnostics to
/// `err`; returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    match execute(cli.cmd, out) {
        Ok(code) => code,
        Err(Failure::Usage(m)) => {
            let _ = writeln!(err, "error: {m}");
            EXIT_USAGE
        }
        Err(Failure::Cap(m)) => {
            let _ = writeln!(err, "error: {m}");
            EXIT_CAP
        }
    }
}
