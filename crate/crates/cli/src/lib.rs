//! Command-line front end: enumeration, lattice operations, regular
//! elements, conversions, exhaustive verification and Hasse-diagram export.

pub mod export;

use std::ffi::OsString;
use std::io::Write;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use dyck_heyting::paths::{parse_seq, word_to_heights_a, word_to_heights_b};
use dyck_heyting::{
    verify_family, Check, DyckWord, EnumerationGuard, Family, HeightSeqA, HeightSeqB, HeytingPath,
    LatticeSnapshot, MonotonePath, Params, VerifyOptions, WordKind,
};
use serde_json::json;

use crate::export::{to_dot, ExportDocument};

/// Raises the enumeration limits (type A/B semilength, monotone `n+m`).
pub const GUARD_ENV: &str = "DYCK_HEYTING_MAX_N";

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_VERIFY_FAILED: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "dyck-heyting", version, about = "Heyting algebras of Dyck paths under dominance order")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List or export every path of a family.
    Enumerate {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_enum, default_value_t = Format::Count)]
        format: Format,
    },
    /// Evaluate meet, join or relative pseudocomplement.
    Op {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_enum)]
        which: Op,
        #[arg(long)]
        lhs: String,
        #[arg(long)]
        rhs: String,
    },
    /// Pseudocomplement of a path.
    Pseudo {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        path: String,
    },
    /// Regular elements (fixed points of double pseudocomplement).
    Regular {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, conflicts_with = "count")]
        list: bool,
        #[arg(long)]
        count: bool,
    },
    /// Convert between Dyck words and height sequences.
    #[command(group(ArgGroup::new("input").required(true).args(["word", "heights"])))]
    Convert {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        word: Option<String>,
        #[arg(long)]
        heights: Option<String>,
    },
    /// Exhaustively cross-check the closed forms for every size up to `--max-n`.
    Verify {
        #[arg(long, value_enum)]
        family: FamilyName,
        #[arg(long)]
        max_n: usize,
        /// For monotone paths, check every `m` from 0 to this value (default: `--max-n`).
        #[arg(long)]
        m: Option<usize>,
        /// Comma-separated check names, or `all`.
        #[arg(long, default_value = "all")]
        checks: String,
        #[arg(long)]
        parallel: bool,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
}

#[derive(Debug, Args)]
struct FamilyArgs {
    #[arg(long, value_enum)]
    family: FamilyName,
    #[arg(long)]
    n: usize,
    /// Height bound for monotone paths.
    #[arg(long)]
    m: Option<usize>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FamilyName {
    A,
    B,
    Mono,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Count,
    List,
    Json,
    Dot,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Op {
    Meet,
    Join,
    Impl,
}

/// Ends a command early with an exit status and a diagnostic.
struct Failure {
    code: i32,
    message: String,
}

impl From<dyck_heyting::Error> for Failure {
    fn from(e: dyck_heyting::Error) -> Self {
        Failure { code: EXIT_INVALID, message: e.to_string() }
    }
}

fn invalid(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_INVALID, message: message.into() }
}

type CmdResult = Result<String, Failure>;

/// Runs the tool on `args` (including the program name) and returns the
/// exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = write!(out, "{e}");
            return EXIT_OK;
        }
        Err(e) => {
            let rendered = e.to_string();
            let first = rendered.lines().next().unwrap_or("invalid arguments");
            let _ = writeln!(err, "{first}");
            return EXIT_INVALID;
        }
    };
    let guard = guard_from_env(std::env::var(GUARD_ENV).ok().as_deref());
    match execute(cli.command, &guard) {
        Ok(text) => {
            let _ = out.write_all(text.as_bytes());
            EXIT_OK
        }
        Err(Failure { code, message }) => {
            if code == EXIT_VERIFY_FAILED {
                let _ = out.write_all(message.as_bytes());
                let _ = writeln!(err, "error: verification failed");
            } else {
                let _ = writeln!(err, "error: {message}");
            }
            code
        }
    }
}

/// Default guard, raised (never lowered) by the environment value.
pub fn guard_from_env(value: Option<&str>) -> EnumerationGuard {
    let base = EnumerationGuard::default();
    match value.and_then(|v| v.trim().parse::<usize>().ok()) {
        Some(k) => EnumerationGuard {
            max_a: base.max_a.max(k),
            max_b: base.max_b.max(k),
            max_mono_total: base.max_mono_total.max(k),
        },
        None => base,
    }
}

fn params_of(name: FamilyName, n: usize, m: Option<usize>) -> Result<Params, Failure> {
    if n == 0 {
        return Err(invalid("--n must be at least 1"));
    }
    match (name, m) {
        (FamilyName::A, None) => Ok(Params::A { n }),
        (FamilyName::B, None) => Ok(Params::B { n }),
        (FamilyName::Mono, Some(m)) => Ok(Params::Mono { n, m }),
        (FamilyName::Mono, None) => Err(invalid("monotone paths need --m")),
        (_, Some(_)) => Err(invalid("--m only applies to --family mono")),
    }
}

impl FamilyArgs {
    fn params(&self) -> Result<Params, Failure> {
        params_of(self.family, self.n, self.m)
    }
}

/// Runs `$body` with `$P` bound to the path type of `$params`.
macro_rules! dispatch {
    ($params:expr, $P:ident => $body:expr) => {
        match $params.family() {
            Family::A => {
                type $P = HeightSeqA;
                $body
            }
            Family::B => {
                type $P = HeightSeqB;
                $body
            }
            Family::Mono => {
                type $P = MonotonePath;
                $body
            }
        }
    };
}

fn parse_path<P: HeytingPath>(params: Params, s: &str) -> Result<P, Failure> {
    Ok(P::from_heights(params, parse_seq(s)?)?)
}

fn execute(command: Command, guard: &EnumerationGuard) -> CmdResult {
    match command {
        Command::Enumerate { family, format } => {
            let params = family.params()?;
            dispatch!(params, P => enumerate::<P>(params, format, guard))
        }
        Command::Op { family, which, lhs, rhs } => {
            let params = family.params()?;
            dispatch!(params, P => {
                let (p, q) = (parse_path::<P>(params, &lhs)?, parse_path::<P>(params, &rhs)?);
                let r = match which {
                    Op::Meet => dyck_heyting::meet(&p, &q)?,
                    Op::Join => dyck_heyting::join(&p, &q)?,
                    Op::Impl => dyck_heyting::implies(&p, &q)?,
                };
                Ok(format!("{r}\n"))
            })
        }
        Command::Pseudo { family, path } => {
            let params = family.params()?;
            dispatch!(params, P => Ok(format!("{}\n", parse_path::<P>(params, &path)?.pseudo_complement())))
        }
        Command::Regular { family, list: _, count } => {
            let params = family.params()?;
            guard.check(params)?;
            dispatch!(params, P => {
                let regs = P::regulars(params)?;
                Ok(if count { format!("{}\n", regs.len()) } else { lines(&regs) })
            })
        }
        Command::Convert { family, word, heights } => convert(family.params()?, word, heights),
        Command::Verify { family, max_n, m, checks, parallel, format } => {
            verify(family, max_n, m, &checks, parallel, format, guard)
        }
    }
}

fn lines<P: std::fmt::Display>(items: &[P]) -> String {
    items.iter().map(|p| format!("{p}\n")).collect()
}

fn enumerate<P: HeytingPath>(params: Params, format: Format, guard: &EnumerationGuard) -> CmdResult {
    let snap = LatticeSnapshot::<P>::enumerate_guarded(params, guard)?;
    Ok(match format {
        Format::Count => format!("{}\n", snap.len()),
        Format::List => lines(snap.elements()),
        Format::Json => ExportDocument::from_snapshot(&snap).to_json() + "\n",
        Format::Dot => to_dot(&snap),
    })
}

fn convert(params: Params, word: Option<String>, heights: Option<String>) -> CmdResult {
    let n = params.n();
    match (params.family(), word, heights) {
        (Family::A, Some(w), _) => {
            let word = DyckWord::parse(&w, WordKind::A)?;
            if word.semilength() != n {
                return Err(invalid(format!("word has semilength {}, expected {n}", word.semilength())));
            }
            Ok(format!("{}\n", word_to_heights_a(&word)?))
        }
        (Family::B, Some(w), _) => Ok(format!("{}\n", word_to_heights_b(&DyckWord::parse_b(&w, n)?)?)),
        (Family::A, None, Some(h)) => Ok(format!("{}\n", HeightSeqA::with_n(n, parse_seq(&h)?)?.to_word())),
        (Family::B, None, Some(h)) => Ok(format!("{}\n", HeightSeqB::new(n, parse_seq(&h)?)?.to_word())),
        (Family::Mono, ..) => Err(invalid("convert supports --family a and b")),
        (_, None, None) => Err(invalid("one of --word or --heights is required")),
    }
}

fn verify(
    family: FamilyName,
    max_n: usize,
    m: Option<usize>,
    checks: &str,
    parallel: bool,
    format: ReportFormat,
    guard: &EnumerationGuard,
) -> CmdResult {
    let checks = Check::parse_list(checks)?;
    if max_n == 0 {
        return Err(invalid("--max-n must be at least 1"));
    }
    let sizes: Vec<Params> = match family {
        FamilyName::A => (1..=max_n).map(|n| Params::A { n }).collect(),
        FamilyName::B => (1..=max_n).map(|n| Params::B { n }).collect(),
        FamilyName::Mono => {
            let max_m = m.unwrap_or(max_n);
            (1..=max_n).flat_map(|n| (0..=max_m).map(move |m| Params::Mono { n, m })).collect()
        }
    };
    if m.is_some() && !matches!(family, FamilyName::Mono) {
        return Err(invalid("--m only applies to --family mono"));
    }
    for &params in &sizes {
        guard.check(params)?;
    }
    let options = VerifyOptions { parallel, guard: *guard };
    let reports = sizes
        .iter()
        .map(|&p| verify_family(p, &checks, &options))
        .collect::<dyck_heyting::Result<Vec<_>>>()?;
    let passed = reports.iter().all(|r| r.passed());
    let text = match format {
        ReportFormat::Text => {
            let mut s: String = reports.iter().map(|r| r.to_string()).collect();
            s.push_str(if passed { "all checks passed\n" } else { "verification failed\n" });
            s
        }
        ReportFormat::Json => {
            let doc: Vec<_> = reports
                .iter()
                .map(|r| {
                    json!({
                        "family": r.params.family().to_string(),
                        "n": r.params.n(),
                        "m": r.params.m(),
                        "elements": r.elements,
                        "checks": r.outcomes.iter().map(|o| json!({
                            "check": o.check.name(),
                            "status": o.status.to_string().to_lowercase(),
                            "cases": o.cases,
                            "detail": o.detail,
                        })).collect::<Vec<_>>(),
                    })
                })
                .collect();
            let doc = json!({ "format": export::FORMAT_TAG, "passed": passed, "reports": doc });
            serde_json::to_string_pretty(&doc).expect("report serializes") + "\n"
        }
    };
    if passed {
        Ok(text)
    } else {
        Err(Failure { code: EXIT_VERIFY_FAILED, message: text })
    }
}
