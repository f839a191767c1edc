use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use debruijn_mis::codes::{
    classical_code, codes_from_lmis, count_code_classes, max_code_size, validate_code, Provenance,
};
use debruijn_mis::count::{count_mis, count_mis_d2};
use debruijn_mis::enumerate::{enumerate_all, enumerate_orbit_reps};
use debruijn_mis::group::{stabilizer, transporter};
use debruijn_mis::io::{parse_document, DocKind, SetDocument, TraceDocument};
use debruijn_mis::oracle::oracle_enumerate;
use debruijn_mis::selftest::{run_all, Level};
use debruijn_mis::sets::check_structure;
use debruijn_mis::{
    construct, decompose, from_loopless, to_loopless, ConstructionTrace, DeBruijnGraph, Error,
    Kind, Limits, ValidationError,
};
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "debruijn-mis",
    version,
    about = "Maximum independent sets of de Bruijn graphs B(d,3)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Export B(d,D) as DOT or an edge list.
    Graph {
        #[arg(long)]
        d: usize,
        #[arg(long = "D", default_value_t = 3)]
        diameter: usize,
        /// Keep the self-edges on constant words.
        #[arg(long)]
        keep_self_loops: bool,
        /// Set document whose words are drawn filled.
        #[arg(long)]
        highlight: Option<PathBuf>,
        /// Draw the rotation edges in bold.
        #[arg(long)]
        bold_theta: bool,
        #[arg(long, value_enum, default_value_t = GraphFormat::Dot)]
        out: GraphFormat,
    },
    /// Exact counts from the recurrences.
    Count {
        #[arg(long, default_value_t = 6)]
        d_max: usize,
        /// Include the orbit table split by stabilizer size and loop count.
        #[arg(long)]
        bdk: bool,
        /// Count for B(d,2) instead (requires --d).
        #[arg(long = "D")]
        diameter: Option<usize>,
        #[arg(long, requires = "diameter")]
        d: Option<usize>,
        #[arg(long, value_enum, default_value_t = TableFormat::Table)]
        out: TableFormat,
    },
    /// All maximum independent sets of B(d,3), one JSON document per line.
    Enumerate {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        loopless: bool,
        /// One representative per orbit, with its trace.
        #[arg(long)]
        orbits_only: bool,
        #[arg(long, value_enum, default_value_t = JsonlFormat::Jsonl)]
        out: JsonlFormat,
    },
    /// Exhaustive search over B(d,D), independent of the construction.
    Oracle {
        #[arg(long)]
        d: usize,
        #[arg(long = "D", default_value_t = 3)]
        diameter: usize,
        #[arg(long)]
        loopless: bool,
        #[arg(long)]
        count_only: bool,
        #[arg(long, value_enum, default_value_t = JsonlFormat::Jsonl)]
        out: JsonlFormat,
    },
    /// Validate a set or code document; exit 0 iff it is valid.
    Verify {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        out: ReportFormat,
    },
    /// Write the construction trace of a maximum independent set.
    Decompose {
        file: PathBuf,
        /// Output file (stdout if omitted).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build the set described by a trace (a set document or bare trace).
    Construct {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Map between maximum independent sets with and without loops.
    Bijection {
        file: PathBuf,
        #[arg(long, value_enum)]
        to: Target,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Stabilizer of a set under relabelling of digits.
    Stabilizer { file: PathBuf },
    /// A relabelling taking the first set onto the second; exit 1 if none.
    Transport { first: PathBuf, second: PathBuf },
    /// Comma-free codes of length 3.
    Commafree {
        #[arg(long)]
        d: usize,
        /// Print the code of words x1 < x2 >= x3.
        #[arg(long, conflicts_with = "all")]
        classical: bool,
        /// Print every code obtained from a loop-less maximum independent set.
        #[arg(long)]
        all: bool,
    },
    /// Run the acceptance suite.
    Selftest {
        #[arg(long, value_enum, default_value_t = SelftestLevel::Quick)]
        level: SelftestLevel,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Dot,
    Edgelist,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Table,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum JsonlFormat {
    Jsonl,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    Loopless,
    Mis,
}

#[derive(Clone, Copy, ValueEnum)]
enum SelftestLevel {
    Quick,
    Full,
}

/// Failure of a command, mapped to the process exit code.
enum Failure {
    /// The input was read fine but is not what was claimed.
    Invalid(String),
    /// Any library or I/O error.
    Error(Error),
    Io(PathBuf, io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Error(e)
    }
}

impl From<ValidationError> for Failure {
    fn from(e: ValidationError) -> Self {
        Failure::Error(e.into())
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Invalid(_) => 1,
            Failure::Error(Error::Validation(_) | Error::Malformed(_) | Error::Internal(_)) => 1,
            Failure::Error(Error::InvalidArgument(_)) | Failure::Io(..) => 2,
            Failure::Error(Error::Budget { .. }) => 3,
        }
    }

    fn to_json(&self) -> serde_json::Value {
        match self {
            Failure::Invalid(msg) => json!({"error": "invalid", "message": msg}),
            Failure::Error(e) => json!({"error": e.code(), "message": e.to_string()}),
            Failure::Io(path, e) => {
                json!({"error": "io", "message": format!("{}: {e}", path.display())})
            }
        }
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let limits = match Limits::from_env() {
        Ok(l) => l,
        Err(e) => return report(Failure::Error(e)),
    };
    let mut stdout = io::stdout().lock();
    match run(cli.command, &limits, &mut stdout) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => report(f),
    }
}

fn report(f: Failure) -> ExitCode {
    eprintln!("{}", f.to_json());
    ExitCode::from(f.exit_code())
}

fn run(command: Command, limits: &Limits, out: &mut dyn Write) -> Outcome {
    match command {
        Command::Graph {
            d,
            diameter,
            keep_self_loops,
            highlight,
            bold_theta,
            out: format,
        } => {
            let graph = DeBruijnGraph::with_limits(d, diameter, !keep_self_loops, limits)?;
            let text = match format {
                GraphFormat::Dot => {
                    let words = match highlight {
                        Some(path) => Some(load(&path)?.candidate_set()?.into_words()),
                        None => None,
                    };
                    graph.export_dot(words.as_ref(), bold_theta)?
                }
                GraphFormat::Edgelist => graph.export_edge_list(),
            };
            emit(out, &text)
        }
        Command::Count {
            d_max,
            bdk,
            diameter,
            d,
            out: format,
        } => match diameter {
            Some(2) => {
                let d = d.ok_or_else(|| Error::InvalidArgument("--D 2 needs --d".into()))?;
                emit(out, &format!("{}\n", count_mis_d2(d)?))
            }
            Some(3) | None => {
                let table = count_mis(d_max)?;
                if format == TableFormat::Csv {
                    return emit(out, &table.to_csv());
                }
                let mut text = format!("{:>3}  {:>8}  a_d\n", "d", "orbits");
                for d in 1..=d_max {
                    text += &format!("{d:>3}  {:>8}  {}\n", table.orbits(d), table.a(d));
                }
                if bdk {
                    text += &format!(
                        "\n{:>3}  {:>2}  {:>8}  {:>9}  {:>9}\n",
                        "d", "k", "b_dk", "one-loop", "two-loop"
                    );
                    for d in 1..=d_max {
                        for k in 0..=table.max_k(d) {
                            text += &format!(
                                "{d:>3}  {k:>2}  {:>8}  {:>9}  {:>9}\n",
                                table.b(d, k),
                                table.one_loop(d, k),
                                table.two_loop(d, k)
                            );
                        }
                    }
                }
                emit(out, &text)
            }
            Some(other) => Err(Error::InvalidArgument(format!(
                "counts exist for D = 2 and D = 3, not {other}"
            ))
            .into()),
        },
        Command::Enumerate {
            d,
            loopless,
            orbits_only,
            out: JsonlFormat::Jsonl,
        } => {
            let mut text = String::new();
            if orbits_only {
                for (rep, trace) in enumerate_orbit_reps(d)? {
                    let doc = if loopless {
                        SetDocument::from_mis(&to_loopless(&rep)?, None)
                    } else {
                        SetDocument::from_mis(&rep, Some(&trace))
                    };
                    text += &doc.to_json();
                }
            } else {
                let kind = if loopless {
                    Kind::Loopless
                } else {
                    Kind::WithLoops
                };
                for s in enumerate_all(d, kind, limits)? {
                    let trace = match kind {
                        Kind::WithLoops => Some(decompose(&s)?),
                        Kind::Loopless => None,
                    };
                    text += &SetDocument::from_mis(&s, trace.as_ref()).to_json();
                }
            }
            emit(out, &text)
        }
        Command::Oracle {
            d,
            diameter,
            loopless,
            count_only,
            out: JsonlFormat::Jsonl,
        } => {
            let kind = if loopless {
                Kind::Loopless
            } else {
                Kind::WithLoops
            };
            let sets = oracle_enumerate(d, diameter, kind, limits)?;
            if count_only {
                return emit(out, &format!("{}\n", sets.len()));
            }
            let text: String = sets
                .iter()
                .map(|s| SetDocument::from_set(s, kind.into()).to_json())
                .collect();
            emit(out, &text)
        }
        Command::Verify { file, out: format } => verify(&load(&file)?, format, out),
        Command::Decompose { file, out: path } => {
            let s = load(&file)?.to_mis()?;
            let trace = decompose(&s)?;
            write_doc(
                out,
                path.as_deref(),
                &SetDocument::from_mis(&s, Some(&trace)).to_json(),
            )
        }
        Command::Construct { file, out: path } => {
            let trace = load_trace(&file)?;
            let s = construct(&trace)?;
            write_doc(
                out,
                path.as_deref(),
                &SetDocument::from_mis(&s, Some(&trace)).to_json(),
            )
        }
        Command::Bijection {
            file,
            to,
            out: path,
        } => {
            let s = load(&file)?.to_mis()?;
            let image = match (to, s.kind()) {
                (Target::Loopless, Kind::WithLoops) => to_loopless(&s)?,
                (Target::Mis, Kind::Loopless) => from_loopless(&s)?,
                (Target::Loopless, Kind::Loopless) | (Target::Mis, Kind::WithLoops) => {
                    return Err(Error::InvalidArgument(format!(
                        "input is already of kind {}",
                        s.kind().as_str()
                    ))
                    .into())
                }
            };
            write_doc(
                out,
                path.as_deref(),
                &SetDocument::from_mis(&image, None).to_json(),
            )
        }
        Command::Stabilizer { file } => {
            let s = load(&file)?.to_mis()?;
            let brute = stabilizer(&s, limits)?;
            let mut text = format!("stabilizer: {brute}\n");
            if s.kind() == Kind::WithLoops {
                let predicted = decompose(&s)?.stabilizer();
                text += &format!("from trace: {predicted}\n");
                if predicted != brute {
                    emit(out, &text)?;
                    return Err(Failure::Invalid(
                        "trace prediction disagrees with brute force".into(),
                    ));
                }
            }
            emit(out, &text)
        }
        Command::Transport { first, second } => {
            let s = load(&first)?.to_mis()?;
            let t = load(&second)?.to_mis()?;
            match transporter(&s, &t) {
                Some(sigma) => emit(out, &format!("{}\n", json!({"perm": sigma.images()}))),
                None => Err(Failure::Invalid(
                    "the sets are not in the same orbit".into(),
                )),
            }
        }
        Command::Commafree { d, classical, all } => {
            if classical {
                let code = classical_code(d)?;
                let mut doc = SetDocument::from_set(&code.words, DocKind::Code);
                doc.provenance = Some(Provenance::Classical.as_str().into());
                return emit(out, &doc.to_json());
            }
            let codes = codes_from_lmis(d, limits)?;
            if all {
                let text: String = codes
                    .iter()
                    .map(|c| {
                        let mut doc = SetDocument::from_set(&c.words, DocKind::Code);
                        doc.provenance = Some(c.provenance.as_str().into());
                        doc.to_json()
                    })
                    .collect();
                return emit(out, &text);
            }
            let mut text = format!(
                "maximum code size: {}\ncodes from loop-less sets: {}\n",
                max_code_size(d),
                codes.len()
            );
            if d <= 4 {
                text += &format!(
                    "classes under relabelling: {}\n",
                    count_code_classes(d, limits)?
                );
            }
            if d >= 2 {
                text += &format!(
                    "classical code: {} words, comma-free\n",
                    classical_code(d)?.len()
                );
            }
            emit(out, &text)
        }
        Command::Selftest { level } => {
            let level = match level {
                SelftestLevel::Quick => Level::Quick,
                SelftestLevel::Full => Level::Full,
            };
            let results = run_all(level, limits);
            let text: String = results.iter().map(|r| format!("{r}\n")).collect();
            emit(out, &text)?;
            let failed = results.iter().filter(|r| !r.passed).count();
            if failed > 0 {
                return Err(Failure::Invalid(format!("{failed} criteria failed")));
            }
            Ok(())
        }
    }
}

fn verify(doc: &SetDocument, format: ReportFormat, out: &mut dyn Write) -> Outcome {
    let set = doc.candidate_set()?;
    let (ok, report) = match doc.doc_kind()? {
        DocKind::Code => {
            let r = validate_code(&set);
            let witness = r.comma_witness.as_ref().map(|(x, y, w)| {
                json!({"left": x.to_string(), "right": y.to_string(), "inner": w.to_string()})
            });
            let edge = r
                .dependence_witness
                .as_ref()
                .map(|(u, v)| [u.to_string(), v.to_string()]);
            let value = json!({
                "kind": "code",
                "comma_free": r.comma_free,
                "comma_witness": witness,
                "size": r.size,
                "maximum_size": r.max_size,
                "maximum": r.maximum,
                "independent": r.independent,
                "dependence_witness": edge,
            });
            (r.comma_free, (value, r.to_string()))
        }
        DocKind::WithLoops | DocKind::Loopless => match doc.to_mis() {
            Ok(s) => {
                let structure = check_structure(&s);
                let trace_ok = match doc.construction_trace()? {
                    Some(t) => Some(construct(&t)? == s),
                    None => None,
                };
                let violations: Vec<String> =
                    structure.violations.iter().map(|v| v.to_string()).collect();
                let mut text = format!(
                    "valid {} maximum independent set of B({},3), {} words\n",
                    s.kind().as_str(),
                    s.alphabet(),
                    s.len()
                );
                for v in &violations {
                    text += &format!("structure violation: {v}\n");
                }
                match trace_ok {
                    Some(true) => text += "trace reproduces the set\n",
                    Some(false) => text += "trace does not reproduce the set\n",
                    None => {}
                }
                let value = json!({
                    "kind": s.kind().as_str(),
                    "valid": true,
                    "loops": s.loops(),
                    "structure_violations": violations,
                    "trace_matches": trace_ok,
                });
                let ok = structure.is_clean() && trace_ok != Some(false);
                (ok, (value, text.trim_end().to_string()))
            }
            Err(Error::Validation(e)) => {
                let value = json!({
                    "kind": doc.kind,
                    "valid": false,
                    "error": e.code(),
                    "message": e.to_string(),
                });
                (false, (value, format!("invalid: {e}")))
            }
            Err(e) => return Err(e.into()),
        },
    };
    let (value, text) = report;
    let body = match format {
        ReportFormat::Json => format!("{value}\n"),
        ReportFormat::Text => format!("{text}\n"),
    };
    emit(out, &body)?;
    if ok {
        Ok(())
    } else {
        Err(Failure::Invalid("verification failed".into()))
    }
}

fn emit(out: &mut dyn Write, text: &str) -> Outcome {
    out.write_all(text.as_bytes())
        .map_err(|e| Failure::Io(PathBuf::from("<stdout>"), e))
}

fn write_doc(out: &mut dyn Write, path: Option<&Path>, text: &str) -> Outcome {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Io(p.to_path_buf(), e)),
        None => emit(out, text),
    }
}

fn read_input(path: &Path) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Io(path.to_path_buf(), e))?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| Failure::Io(path.to_path_buf(), e))
}

fn load(path: &Path) -> Result<SetDocument, Failure> {
    let parsed = parse_document(&read_input(path)?)?;
    for w in &parsed.warnings {
        eprintln!("warning: {}: {w}", path.display());
    }
    Ok(parsed.doc)
}

/// A trace from either a set document carrying one or a bare trace object.
fn load_trace(path: &Path) -> Result<ConstructionTrace, Failure> {
    let text = read_input(path)?;
    let value: serde_json::Value =
        serde_json::from_str(&text).map_err(|e| Error::Malformed(format!("JSON: {e}")))?;
    let doc: TraceDocument = if value.get("words").is_some() {
        let doc = parse_document(&text)?.doc;
        doc.trace
            .ok_or_else(|| Error::Malformed("document has no trace".into()))?
    } else {
        serde_json::from_value(value).map_err(|e| Error::Malformed(format!("trace: {e}")))?
    };
    Ok(doc.to_trace()?)
}
