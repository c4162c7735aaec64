//! Command-line front end for the `pronoun` binary.
//!
//! Exit status: 0 for a positive result (parsed, provable, satisfied,
//! true, denoting), 1 for a negative one, 2 for usage, parse, I/O or
//! configuration errors, 3 when proof search runs out of budget.

use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::thread;

use clap::{Parser, Subcommand, ValueEnum};

use crate::free::{self, Denotation, Environment, Model};
use crate::linear::{check_proof, Outcome, ProofTree, Prover, DEFAULT_BUDGET};
use crate::parse::{self, ParseError};
use crate::temporal::{self, Monitor, Trace, Verdict};
use crate::text::{check_document, ReferentSpec};

pub const EXIT_POSITIVE: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_ERROR: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "pronoun",
    version,
    about = "Parse, prove, monitor and check pronoun descriptors"
)]
pub struct Cli {
    /// Line-oriented, tab-separated output.
    #[arg(long, global = true)]
    pub machine: bool,
    /// Read the formula or sequent from this file instead of the argument.
    #[arg(long, global = true, value_name = "PATH")]
    pub file: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Linear,
    Temporal,
    Free,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    /// Print only the verdict for the whole trace.
    Batch,
    /// Print a verdict after every utterance, then the final one.
    Stepwise,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parse a formula and print its canonical form.
    Parse {
        #[arg(long, value_enum)]
        kind: Kind,
        input: Option<String>,
    },
    /// Search for a linear-logic proof of a sequent, or check a saved one.
    Prove {
        sequent: Option<String>,
        /// Check the proof tree in FILE instead of searching.
        #[arg(long, value_name = "FILE")]
        check: Option<PathBuf>,
        /// Maximum number of search nodes.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Run a temporal descriptor over a trace file.
    Monitor {
        formula: Option<String>,
        #[arg(long, value_name = "FILE")]
        trace: PathBuf,
        #[arg(long, value_enum, default_value_t = Mode::Batch)]
        mode: Mode,
    },
    /// Evaluate a free-logic sentence, or a term with --term, in a model.
    Eval {
        #[arg(long, value_name = "FILE")]
        model: PathBuf,
        /// Treat the input as a term and print what it denotes.
        #[arg(long)]
        term: bool,
        input: Option<String>,
    },
    /// Check documents against a referent spec.
    Check {
        spec: PathBuf,
        #[arg(required = true)]
        documents: Vec<PathBuf>,
    },
}

/// A failed command: exit status and message for stderr.
struct Failure(i32, String);

impl Failure {
    fn error(msg: impl Into<String>) -> Self {
        Failure(EXIT_ERROR, msg.into())
    }
}

type Run = Result<i32, Failure>;

fn read_file(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path)
        .map_err(|e| Failure::error(format!("cannot read {}: {e}", path.display())))
}

/// Error message with the offending line and a caret under the column.
fn parse_failure(input: &str, err: &ParseError) -> Failure {
    let line = input.lines().nth(err.line - 1).unwrap_or("");
    let pad = " ".repeat(err.column - 1);
    Failure::error(format!("{err}\n  {line}\n  {pad}^"))
}

struct Ctx<'a> {
    machine: bool,
    file: Option<PathBuf>,
    stdin: &'a mut dyn Read,
    out: &'a mut dyn Write,
}

impl Ctx<'_> {
    /// The formula text: inline argument, `--file`, or standard input.
    fn input(&mut self, inline: Option<String>) -> Result<String, Failure> {
        match (inline, self.file.take()) {
            (Some(_), Some(_)) => Err(Failure::error(
                "give the input either inline or with --file, not both",
            )),
            (Some(s), None) => Ok(s),
            (None, Some(path)) => read_file(&path),
            (None, None) => {
                let mut s = String::new();
                self.stdin
                    .read_to_string(&mut s)
                    .map_err(|e| Failure::error(format!("cannot read standard input: {e}")))?;
                Ok(s)
            }
        }
    }

    fn print(&mut self, text: &str) -> Result<(), Failure> {
        self.out
            .write_all(text.as_bytes())
            .map_err(|e| Failure::error(format!("cannot write output: {e}")))
    }

    fn parse(&mut self, kind: Kind, inline: Option<String>) -> Run {
        let input = self.input(inline)?;
        let rendered = match kind {
            Kind::Linear => parse::parse_linear(&input).map(|f| f.render()),
            Kind::Temporal => parse::parse_temporal(&input).map(|f| f.render()),
            Kind::Free => parse::parse_free(&input).map(|f| f.render()),
        }
        .map_err(|e| parse_failure(&input, &e))?;
        self.print(&format!("{rendered}\n"))?;
        Ok(EXIT_POSITIVE)
    }

    fn prove(&mut self, inline: Option<String>, check: Option<PathBuf>, budget: u64) -> Run {
        if let Some(path) = check {
            return self.check_proof_file(inline, &path);
        }
        let input = self.input(inline)?;
        let sequent = parse::parse_sequent(&input).map_err(|e| parse_failure(&input, &e))?;
        match Prover::with_budget(budget).prove(&sequent) {
            Ok(Outcome::Proved(proof)) => {
                self.print(&proof.to_string())?;
                Ok(EXIT_POSITIVE)
            }
            Ok(Outcome::NotDerivable) => {
                self.print("not derivable\n")?;
                Ok(EXIT_NEGATIVE)
            }
            Err(limit) => Err(Failure(EXIT_RESOURCE, limit.to_string())),
        }
    }

    /// Validates a saved proof; a sequent, if given, must be its conclusion.
    fn check_proof_file(&mut self, inline: Option<String>, path: &Path) -> Run {
        let expected = match (inline, self.file.take()) {
            (None, None) => None,
            (inline, file) => {
                self.file = file;
                let input = self.input(inline)?;
                Some(parse::parse_sequent(&input).map_err(|e| parse_failure(&input, &e))?)
            }
        };
        let proof: ProofTree = read_file(path)?
            .parse()
            .map_err(|e| Failure::error(format!("{}: {e}", path.display())))?;
        if let Some(seq) = expected {
            if !proof.conclusion.same_as(&seq) {
                self.print(&format!(
                    "invalid: proof concludes `{}`, not `{seq}`\n",
                    proof.conclusion
                ))?;
                return Ok(EXIT_NEGATIVE);
            }
        }
        match check_proof(&proof) {
            Ok(()) => {
                self.print("valid\n")?;
                Ok(EXIT_POSITIVE)
            }
            Err(e) => {
                self.print(&format!("invalid: {e}\n"))?;
                Ok(EXIT_NEGATIVE)
            }
        }
    }

    fn monitor(&mut self, inline: Option<String>, trace_path: &Path, mode: Mode) -> Run {
        let input = self.input(inline)?;
        let formula = parse::parse_temporal(&input).map_err(|e| parse_failure(&input, &e))?;
        let trace: Trace = read_file(trace_path)?
            .parse()
            .map_err(|e| Failure::error(format!("{}: {e}", trace_path.display())))?;
        let satisfied = match mode {
            Mode::Batch => {
                let value =
                    temporal::evaluate(&formula, &trace, 0).expect("position 0 is in range");
                self.print(if value { "Satisfied\n" } else { "Violated\n" })?;
                value
            }
            Mode::Stepwise => {
                let mut monitor = Monitor::new(&formula);
                let mut text = String::new();
                for (i, u) in trace.utterances.iter().enumerate() {
                    text.push_str(&format!("{i}\t{}\n", monitor.step(u).kind()));
                }
                let last = monitor.finish();
                text.push_str(&format!("end\t{}\n", last.kind()));
                self.print(&text)?;
                matches!(last, Verdict::Satisfied(_))
            }
        };
        Ok(if satisfied {
            EXIT_POSITIVE
        } else {
            EXIT_NEGATIVE
        })
    }

    fn eval(&mut self, model_path: &Path, term: bool, inline: Option<String>) -> Run {
        let model: Model = read_file(model_path)?
            .parse()
            .map_err(|e| Failure::error(format!("{}: {e}", model_path.display())))?;
        let input = self.input(inline)?;
        let positive = if term {
            let t = parse::parse_free_term(&input).map_err(|e| parse_failure(&input, &e))?;
            let d = free::eval_term(&model, &Environment::new(), &t)
                .map_err(|e| Failure::error(e.to_string()))?;
            self.print(&format!("{d}\n"))?;
            d != Denotation::NonDenoting
        } else {
            let f = parse::parse_free(&input).map_err(|e| parse_failure(&input, &e))?;
            let v = free::check_sentence(&model, &f).map_err(|e| Failure::error(e.to_string()))?;
            self.print(&format!("{v}\n"))?;
            v
        };
        Ok(if positive {
            EXIT_POSITIVE
        } else {
            EXIT_NEGATIVE
        })
    }

    /// Documents are checked in parallel; reports are printed in input order.
    fn check(&mut self, spec_path: &Path, documents: &[PathBuf]) -> Run {
        let spec = ReferentSpec::load(spec_path)
            .map_err(|e| Failure::error(format!("{}: {e}", spec_path.display())))?;
        let machine = self.machine;
        let several = documents.len() > 1;
        let results: Vec<Result<(String, Verdict), Failure>> = thread::scope(|s| {
            let handles: Vec<_> = documents
                .iter()
                .map(|path| {
                    let spec = &spec;
                    s.spawn(move || {
                        let text = read_file(path)?;
                        let report = check_document(&text, spec);
                        let name = path.display().to_string();
                        let body = if machine {
                            let lines = report.render_machine(&text);
                            if several {
                                lines.lines().map(|l| format!("{name}\t{l}\n")).collect()
                            } else {
                                lines
                            }
                        } else {
                            report.render_human(&text, &name, spec)
                        };
                        Ok((body, report.verdict))
                    })
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("checker thread panicked"))
                .collect()
        });
        let mut status = EXIT_POSITIVE;
        let mut errors = Vec::new();
        for r in results {
            match r {
                Ok((body, verdict)) => {
                    self.print(&body)?;
                    if !matches!(verdict, Verdict::Satisfied(_)) {
                        status = status.max(EXIT_NEGATIVE);
                    }
                }
                Err(Failure(_, msg)) => errors.push(msg),
            }
        }
        if errors.is_empty() {
            Ok(status)
        } else {
            Err(Failure::error(errors.join("\n")))
        }
    }
}

/// Runs the command line `args` (including the program name) and returns
/// the exit status.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_ERROR
            } else {
                EXIT_POSITIVE
            };
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let mut ctx = Ctx {
        machine: cli.machine,
        file: cli.file,
        stdin,
        out: stdout,
    };
    let result = match cli.command {
        Command::Parse { kind, input } => ctx.parse(kind, input),
        Command::Prove {
            sequent,
            check,
            budget,
        } => ctx.prove(sequent, check, budget),
        Command::Monitor {
            formula,
            trace,
            mode,
        } => ctx.monitor(formula, &trace, mode),
        Command::Eval { model, term, input } => ctx.eval(&model, term, input),
        Command::Check { spec, documents } => ctx.check(&spec, &documents),
    };
    match result {
        Ok(code) => code,
        Err(Failure(code, msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            code
        }
    }
}
