//! Argument handling and subcommands of the `longcycle` binary.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use longcycle::dense_routing::Mode;
use longcycle::density::mad_with_witness;
use longcycle::instances::{emit_result, gen_hardness_gadget, gen_instance, parse_graph, write_graph, Family, Format};
use longcycle::oracle::{oracle_densest_sets, oracle_longest_cycle, oracle_longest_cycle_capped, oracle_longest_st_path, oracle_mad};
use longcycle::solver::{solve, Answer, SolveOptions};
use longcycle::{CycleCertificate, Graph, PathCertificate};
use serde_json::{json, Map, Value};

pub const EXIT_OK: u8 = 0;
pub const EXIT_NO: u8 = 1;
pub const EXIT_UNKNOWN: u8 = 2;
pub const EXIT_USAGE: u8 = 64;
pub const EXIT_DATA: u8 = 65;

#[derive(Parser, Debug)]
#[command(name = "longcycle", version, about = "Cycles of length at least mad(G) + k, with certificates")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Edgelist,
    Dimacs,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Edgelist => Format::Edgelist,
            FormatArg::Dimacs => Format::Dimacs,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    Strict,
    Relaxed,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OracleKind {
    /// Circumference and a longest cycle.
    Cycle,
    /// Exact mad by subset enumeration.
    Mad,
    /// All densest vertex sets.
    Densest,
    /// Longest path between two given vertices (vertex count).
    StPath,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Exact maximum average degree and a densest induced subgraph.
    Mad {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "edgelist")]
        format: FormatArg,
        #[arg(long)]
        json: bool,
    },
    /// Decide whether a cycle (or path) of length ≥ mad + k exists.
    Solve {
        file: PathBuf,
        #[arg(short)]
        k: usize,
        #[arg(long)]
        path: bool,
        #[arg(long, value_enum, default_value = "strict")]
        mode: ModeArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Cap on color-coding trials per search.
        #[arg(long, default_value_t = 2000)]
        budget: u64,
        /// Fixed color-coding trial count per search.
        #[arg(long)]
        trials: Option<u64>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Largest n handed to the exact fallback.
        #[arg(long, default_value_t = 24)]
        fallback_cap: usize,
        #[arg(long)]
        trace: bool,
        #[arg(long, value_enum, default_value = "edgelist")]
        format: FormatArg,
        #[arg(long)]
        json: bool,
    },
    /// Check a cycle certificate, given inline or as a solve result.
    Verify {
        file: PathBuf,
        /// Comma-separated vertex ids.
        #[arg(long, value_delimiter = ',', conflicts_with = "result", requires = "min_len")]
        cycle: Option<Vec<usize>>,
        #[arg(long)]
        min_len: Option<usize>,
        /// JSON written by `solve --json`; "-" reads stdin.
        #[arg(long)]
        result: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "edgelist")]
        format: FormatArg,
    },
    /// Generate an instance; params are key=value pairs.
    Gen {
        family: String,
        params: Vec<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "edgelist")]
        format: FormatArg,
    },
    /// Brute-force reference answers for small graphs.
    Oracle {
        #[arg(value_enum)]
        which: OracleKind,
        file: PathBuf,
        /// Endpoints for st-path.
        args: Vec<usize>,
        /// Raise the cycle oracle's vertex cap.
        #[arg(long)]
        cap: Option<usize>,
        #[arg(long, value_enum, default_value = "edgelist")]
        format: FormatArg,
    },
    /// Hardness transform: Hamiltonicity of G becomes a long cycle in the output.
    Gadget {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "edgelist")]
        format: FormatArg,
    },
}

/// Failure carrying an exit code and a message for stderr.
struct Fail(u8, String);

impl From<longcycle::Error> for Fail {
    fn from(e: longcycle::Error) -> Fail {
        Fail(EXIT_DATA, e.to_string())
    }
}

impl From<std::io::Error> for Fail {
    fn from(e: std::io::Error) -> Fail {
        Fail(EXIT_DATA, e.to_string())
    }
}

type Out<'a> = &'a mut dyn Write;

/// Runs the CLI on `argv` (program name first) and returns the exit code.
pub fn run_cli<I, T>(argv: I, stdin: &mut dyn Read, stdout: Out, stderr: Out) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { stderr.write_all(text.as_bytes()) } else { stdout.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli.command, stdin, stdout) {
        Ok(code) => code,
        Err(Fail(code, msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            code
        }
    }
}

fn read_input(path: &Path, stdin: &mut dyn Read) -> Result<Vec<u8>, Fail> {
    if path.as_os_str() == "-" {
        let mut buf = Vec::new();
        stdin.read_to_end(&mut buf)?;
        Ok(buf)
    } else {
        std::fs::read(path).map_err(|e| Fail(EXIT_DATA, format!("{}: {e}", path.display())))
    }
}

fn load(path: &Path, format: FormatArg, stdin: &mut dyn Read) -> Result<Graph, Fail> {
    let bytes = read_input(path, stdin)?;
    parse_graph(&bytes, format.into()).map_err(|e| Fail(EXIT_DATA, format!("{}: {e}", path.display())))
}

fn join(vs: &[usize]) -> String {
    vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

fn dispatch(cmd: Command, stdin: &mut dyn Read, out: Out) -> Result<u8, Fail> {
    match cmd {
        Command::Mad { file, format, json } => {
            let g = load(&file, format, stdin)?;
            let w = mad_with_witness(&g)?;
            if json {
                writeln!(out, "{}", serde_json::to_string(&w).expect("witness serializes"))?;
            } else {
                writeln!(out, "{}", w.mad)?;
                writeln!(out, "witness: {}", join(&w.vertices))?;
            }
            Ok(EXIT_OK)
        }
        Command::Solve { file, k, path, mode, seed, budget, trials, jobs, fallback_cap, trace, format, json } => {
            let g = load(&file, format, stdin)?;
            let opts = SolveOptions {
                mode: match mode {
                    ModeArg::Strict => Mode::Strict,
                    ModeArg::Relaxed => Mode::Relaxed,
                },
                path,
                seed,
                trials,
                budget,
                fallback_cap,
                jobs: jobs.max(1),
                trace,
                ..SolveOptions::default()
            };
            let r = solve(&g, k, &opts)?;
            if json {
                out.write_all(&emit_result(&r))?;
            } else {
                let answer = match r.answer {
                    Answer::Yes => "yes",
                    Answer::No => "no",
                    Answer::Unknown => "unknown",
                };
                writeln!(out, "answer: {answer}")?;
                writeln!(out, "mad: {}", r.mad)?;
                writeln!(out, "threshold_len: {}", r.threshold_len)?;
                if let Some(c) = &r.cycle {
                    writeln!(out, "cycle: {}", join(&c.vertices))?;
                }
                if let Some(p) = &r.path {
                    writeln!(out, "path: {}", join(&p.vertices))?;
                }
                if let Some(reason) = &r.stats.reason {
                    writeln!(out, "reason: {reason}")?;
                }
            }
            Ok(match r.answer {
                Answer::Yes => EXIT_OK,
                Answer::No => EXIT_NO,
                Answer::Unknown => EXIT_UNKNOWN,
            })
        }
        Command::Verify { file, cycle, min_len, result, format } => {
            let g = load(&file, format, stdin)?;
            verify(&g, cycle, min_len, result, stdin, out)
        }
        Command::Gen { family, params, seed, format } => {
            let fam = parse_family(&family, &params)?;
            let inst = gen_instance(&fam, seed)?;
            let meta = serde_json::to_string(&inst.meta).expect("meta serializes");
            let tag = match format {
                FormatArg::Edgelist => "#",
                FormatArg::Dimacs => "c",
            };
            writeln!(out, "{tag} {meta}")?;
            out.write_all(write_graph(&inst.graph, format.into()).as_bytes())?;
            Ok(EXIT_OK)
        }
        Command::Oracle { which, file, args, cap, format } => {
            let g = load(&file, format, stdin)?;
            match which {
                OracleKind::Cycle => {
                    let (len, cert) = match cap {
                        Some(c) => oracle_longest_cycle_capped(&g, c)?,
                        None => oracle_longest_cycle(&g)?,
                    };
                    writeln!(out, "circumference: {len}")?;
                    if let Some(c) = cert {
                        writeln!(out, "cycle: {}", join(&c.vertices))?;
                    }
                }
                OracleKind::Mad => writeln!(out, "{}", oracle_mad(&g)?)?,
                OracleKind::Densest => {
                    for s in oracle_densest_sets(&g)? {
                        writeln!(out, "{}", join(&s))?;
                    }
                }
                OracleKind::StPath => {
                    let [s, t] = args[..] else {
                        return Err(Fail(EXIT_USAGE, "st-path needs two vertex ids".into()));
                    };
                    writeln!(out, "{}", oracle_longest_st_path(&g, s, t)?)?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Gadget { file, format } => {
            let g = load(&file, format, stdin)?;
            let gp = gen_hardness_gadget(&g)?;
            out.write_all(write_graph(&gp, format.into()).as_bytes())?;
            Ok(EXIT_OK)
        }
    }
}

fn verify(
    g: &Graph,
    cycle: Option<Vec<usize>>,
    min_len: Option<usize>,
    result: Option<PathBuf>,
    stdin: &mut dyn Read,
    out: Out,
) -> Result<u8, Fail> {
    let checked = match (cycle, result) {
        (Some(vs), None) => CycleCertificate::new(vs, min_len.unwrap_or(3)).verify(g),
        (None, Some(path)) => {
            let bytes = read_input(&path, stdin)?;
            let v: Value = serde_json::from_slice(&bytes).map_err(|e| Fail(EXIT_DATA, format!("result JSON: {e}")))?;
            let ids = |key: &str| -> Result<Option<Vec<usize>>, Fail> {
                match v.get(key) {
                    None | Some(Value::Null) => Ok(None),
                    Some(x) => serde_json::from_value(x.clone()).map(Some).map_err(|e| Fail(EXIT_DATA, format!("{key}: {e}"))),
                }
            };
            let threshold =
                v.get("threshold_len").and_then(Value::as_u64).ok_or_else(|| Fail(EXIT_DATA, "result JSON lacks threshold_len".into()))?;
            let claim = min_len.unwrap_or(threshold as usize);
            if let Some(vs) = ids("cycle")? {
                CycleCertificate::new(vs, claim).verify(g)
            } else if let Some(vs) = ids("path")? {
                let p = PathCertificate::new(vs);
                let len = p.vertices.len();
                p.verify(g).and(if len < claim { Err(longcycle::Violation::BelowClaim { length: len, claim }) } else { Ok(()) })
            } else {
                writeln!(out, "rejected: result carries no certificate")?;
                return Ok(EXIT_NO);
            }
        }
        _ => return Err(Fail(EXIT_USAGE, "verify needs either --cycle with --min-len, or --result".into())),
    };
    match checked {
        Ok(()) => {
            writeln!(out, "ok")?;
            Ok(EXIT_OK)
        }
        Err(v) => {
            writeln!(out, "rejected: {v}")?;
            Ok(EXIT_NO)
        }
    }
}

/// Builds a family from "key=value" params; values are read as JSON when possible.
fn parse_family(family: &str, params: &[String]) -> Result<Family, Fail> {
    let mut obj = Map::new();
    obj.insert("family".into(), json!(family));
    for p in params {
        let Some((key, val)) = p.split_once('=') else {
            return Err(Fail(EXIT_USAGE, format!("parameter {p:?} is not key=value")));
        };
        let parsed = serde_json::from_str(val).unwrap_or_else(|_| json!(val));
        obj.insert(key.into(), parsed);
    }
    serde_json::from_value(Value::Object(obj)).map_err(|e| Fail(EXIT_USAGE, format!("family {family}: {e}")))
}
