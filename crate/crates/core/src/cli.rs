//! Batch, one-shot and REPL front-ends.
//!
//! Exit codes: 0 on success, 1 on a lex/parse/evaluation error, 2 on bad
//! flags or unreadable input.

use std::fmt::Write as _;
use std::io::{self, BufRead, IsTerminal, Write};
use std::path::PathBuf;

use clap::{Parser, ValueEnum};

use crate::dsl::{self, Environment, QueryBody, QueryResult, Value};
use crate::fuzzy::Grade;

pub const EXIT_OK: i32 = 0;
pub const EXIT_EVAL_ERROR: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Plain,
    Tsv,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Mode {
    Repl,
    Batch(PathBuf),
    EvalString(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub mode: Mode,
    pub format: OutputFormat,
    pub trace: bool,
}

#[derive(Debug, Parser)]
#[command(
    name = "syadfuzz",
    version,
    about = "Evaluate fuzzy-proposition programs"
)]
struct Args {
    /// Program file to run
    #[arg(long, value_name = "PATH", conflicts_with = "eval")]
    file: Option<PathBuf>,
    /// Program text to run
    #[arg(long, value_name = "PROGRAM")]
    eval: Option<String>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
    format: OutputFormat,
    /// Print intermediate objects of `infer` queries
    #[arg(long)]
    trace: bool,
}

impl RunConfig {
    /// With neither `--file` nor `--eval` the REPL is selected.
    pub fn from_args<I, T>(args: I) -> Result<Self, clap::Error>
    where
        I: IntoIterator<Item = T>,
        T: Into<std::ffi::OsString> + Clone,
    {
        let args = Args::try_parse_from(args)?;
        let mode = match (args.file, args.eval) {
            (Some(path), _) => Mode::Batch(path),
            (None, Some(text)) => Mode::EvalString(text),
            (None, None) => Mode::Repl,
        };
        Ok(Self {
            mode,
            format: args.format,
            trace: args.trace,
        })
    }
}

/// Four decimals; exact decimal ties round to even.
pub fn format_grade(g: Grade) -> String {
    format!("{:.4}", g.value())
}

fn rows(out: &mut String, rows: &[(Vec<&str>, Grade)], format: OutputFormat) {
    match format {
        OutputFormat::Plain => {
            let labels: Vec<String> = rows.iter().map(|(cells, _)| cells.join(" ")).collect();
            let width = labels.iter().map(|l| l.chars().count()).max().unwrap_or(0);
            for (label, (_, g)) in labels.iter().zip(rows) {
                let _ = writeln!(out, "{label:<width$} {}", format_grade(*g));
            }
        }
        OutputFormat::Tsv => {
            for (cells, g) in rows {
                let _ = writeln!(out, "{}\t{}", cells.join("\t"), format_grade(*g));
            }
        }
    }
}

fn value_rows(out: &mut String, value: &Value, format: OutputFormat) {
    match value {
        Value::Set(s) => {
            let r: Vec<_> = s.iter().map(|(e, g)| (vec![e], g)).collect();
            rows(out, &r, format);
        }
        Value::Relation(rel) => {
            let labels: Vec<String> = rel.iter().map(|((x, y), _)| format!("({x},{y})")).collect();
            let r: Vec<_> = match format {
                OutputFormat::Plain => rel
                    .iter()
                    .zip(&labels)
                    .map(|((_, g), l)| (vec![l.as_str()], g))
                    .collect(),
                OutputFormat::Tsv => rel.iter().map(|((x, y), g)| (vec![x, y], g)).collect(),
            };
            rows(out, &r, format);
        }
    }
}

/// Renders one query result: a header line naming the query, then one row per
/// element. Inference results print trace steps (when recorded), a `=>`
/// conclusion line, and the conclusion's grades.
pub fn format_result(result: &QueryResult, format: OutputFormat) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{}", result.header);
    match &result.body {
        QueryBody::Value(v) => value_rows(&mut out, v, format),
        QueryBody::Inference {
            steps,
            description,
            conclusion,
        } => {
            for step in steps {
                let _ = writeln!(out, "-- {}", step.label);
                value_rows(&mut out, &step.value, format);
            }
            let _ = writeln!(out, "=> {description}");
            value_rows(&mut out, &Value::Set(conclusion.term().clone()), format);
        }
        QueryBody::Valuation(v) => {
            let r: Vec<_> = v
                .iter()
                .map(|(p, g)| (vec![p.label(), p.name()], g))
                .collect();
            rows(&mut out, &r, format);
        }
    }
    out
}

fn report(err: &mut dyn Write, e: &dsl::DslError) {
    let _ = writeln!(err, "error: {e}");
}

fn run_program(source: &str, config: &RunConfig, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let statements = match dsl::parse_source(source) {
        Ok(s) => s,
        Err(e) => {
            report(err, &e);
            return EXIT_EVAL_ERROR;
        }
    };
    let mut env = Environment::new().with_trace(config.trace);
    for statement in &statements {
        match env.execute(statement) {
            Ok(Some(result)) => {
                let _ = out.write_all(format_result(&result, config.format).as_bytes());
            }
            Ok(None) => {}
            Err(e) => {
                report(err, &e.into());
                return EXIT_EVAL_ERROR;
            }
        }
    }
    EXIT_OK
}

fn repl(
    config: &RunConfig,
    input: &mut dyn BufRead,
    out: &mut dyn Write,
    err: &mut dyn Write,
    interactive: bool,
) -> i32 {
    let mut env = Environment::new().with_trace(config.trace);
    let mut line = String::new();
    loop {
        if interactive {
            let _ = write!(out, "> ");
            let _ = out.flush();
        }
        line.clear();
        match input.read_line(&mut line) {
            Ok(0) => break,
            Ok(_) => {}
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                return EXIT_USAGE;
            }
        }
        if line.trim() == ":quit" {
            break;
        }
        match dsl::run_source(&line, &mut env) {
            Ok(results) => {
                for r in &results {
                    let _ = out.write_all(format_result(r, config.format).as_bytes());
                }
            }
            Err(e) => report(err, &e),
        }
        let _ = out.flush();
    }
    EXIT_OK
}

/// Runs `config` against explicit streams. `interactive` turns on the REPL prompt.
pub fn run_with(
    config: &RunConfig,
    input: &mut dyn BufRead,
    out: &mut dyn Write,
    err: &mut dyn Write,
    interactive: bool,
) -> i32 {
    match &config.mode {
        Mode::Repl => repl(config, input, out, err, interactive),
        Mode::EvalString(text) => run_program(text, config, out, err),
        Mode::Batch(path) => match std::fs::read_to_string(path) {
            Ok(source) => run_program(&source, config, out, err),
            Err(e) => {
                let _ = writeln!(err, "error: cannot read {}: {e}", path.display());
                EXIT_USAGE
            }
        },
    }
}

/// Runs `config` on the process's standard streams.
pub fn run(config: &RunConfig) -> i32 {
    let stdin = io::stdin();
    let interactive = stdin.is_terminal();
    let mut input = stdin.lock();
    let mut out = io::stdout().lock();
    let mut err = io::stderr().lock();
    run_with(config, &mut input, &mut out, &mut err, interactive)
}
