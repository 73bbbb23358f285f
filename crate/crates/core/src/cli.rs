//! Command-line front end: one-shot evaluation, a line REPL, and the
//! verification suites with text or JSON-lines output.
//!
//! Exit codes: 0 success, 1 a failing check, 2 a usage, parse or evaluation
//! error.

use std::ffi::OsString;
use std::io::{BufRead, Write};

use clap::Parser;
use serde_json::json;

use crate::error::Result;
use crate::suites::{run_suites, Options, Suite};
use crate::syntax::{evaluate, AlgebraKind, Value};

#[derive(Parser, Debug)]
#[command(
    name = "superplane",
    version,
    about = "Normal forms and identity checks on the Z3-graded quantum superplane"
)]
pub struct Cli {
    /// Expression to evaluate. Without one (and without --check), lines are
    /// read from stdin; `:algebra <name>` switches algebra.
    pub expr: Option<String>,

    /// plane, omega, dual, gl, gl-plane, gl-dual or mixed-partial
    #[arg(long, default_value = "omega")]
    pub algebra: String,

    #[arg(long, default_value_t = 8)]
    pub max_degree: u32,

    #[arg(long, default_value_t = 4)]
    pub max_word_len: usize,

    /// One JSON object per line.
    #[arg(long)]
    pub json: bool,

    /// Suite to run (repeatable): scalars, confluence, hopf, calculus, cartan,
    /// lie, partial, gl or all.
    #[arg(long, value_name = "SUITE")]
    pub check: Vec<String>,

    /// Random words per presentation in the confluence suite.
    #[arg(long, default_value_t = 10_000)]
    pub random_words: usize,

    #[arg(long, default_value_t = 8)]
    pub random_word_len: usize,

    #[arg(long, default_value_t = 0x5eed)]
    pub seed: u64,
}

impl Cli {
    fn options(&self) -> Options {
        Options {
            max_degree: self.max_degree,
            max_word_len: self.max_word_len,
            random_words: self.random_words,
            random_word_len: self.random_word_len,
            seed: self.seed,
        }
    }
}

/// Evaluates `text` and returns its normal form.
pub fn evaluate_normalized(text: &str, algebra: AlgebraKind) -> Result<Value> {
    evaluate(text, algebra)?.normalize(algebra)
}

fn render(text: &str, algebra: AlgebraKind, v: &Value, as_json: bool) -> String {
    if as_json {
        json!({ "algebra": algebra.name(), "input": text, "kind": v.kind(), "value": v.display(algebra) }).to_string()
    } else {
        v.display(algebra)
    }
}

fn render_error(text: &str, e: &crate::Error, as_json: bool) -> String {
    if as_json {
        json!({ "input": text, "error": e.to_string() }).to_string()
    } else {
        format!("error: {e}")
    }
}

fn run_checks(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> std::io::Result<i32> {
    let mut selection = Vec::new();
    for name in &cli.check {
        match Suite::parse_selection(name) {
            Ok(s) => selection.extend(s),
            Err(e) => {
                writeln!(err, "error: {e}")?;
                return Ok(2);
            }
        }
    }
    let report = run_suites(&selection, &cli.options());
    for check in &report.checks {
        if cli.json {
            writeln!(out, "{}", check.to_json())?;
        } else {
            writeln!(out, "{check}")?;
        }
    }
    writeln!(err, "{}", report.summary())?;
    Ok(report.exit_code())
}

fn repl(
    cli: &Cli,
    mut algebra: AlgebraKind,
    input: &mut dyn BufRead,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> std::io::Result<i32> {
    let mut status = 0;
    for line in input.lines() {
        let line = line?;
        let text = line.trim();
        if text.is_empty() || text.starts_with('#') {
            continue;
        }
        if let Some(name) = text.strip_prefix(":algebra") {
            match AlgebraKind::parse(name.trim()) {
                Ok(a) => algebra = a,
                Err(e) => {
                    writeln!(err, "error: {e}")?;
                    status = 2;
                }
            }
            continue;
        }
        match evaluate_normalized(text, algebra) {
            Ok(v) => writeln!(out, "{}", render(text, algebra, &v, cli.json))?,
            Err(e) => {
                let sink: &mut dyn Write = if cli.json { out } else { err };
                writeln!(sink, "{}", render_error(text, &e, cli.json))?;
                status = 2;
            }
        }
    }
    Ok(status)
}

/// Runs the command line `args` (including the program name) against the
/// given streams and returns the exit code.
pub fn run<I, T>(args: I, input: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let algebra = match AlgebraKind::parse(&cli.algebra) {
        Ok(a) => a,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return 2;
        }
    };
    let result = if !cli.check.is_empty() {
        run_checks(&cli, out, err)
    } else if let Some(text) = &cli.expr {
        match evaluate_normalized(text, algebra) {
            Ok(v) => writeln!(out, "{}", render(text, algebra, &v, cli.json)).map(|_| 0),
            Err(e) => writeln!(err, "{}", render_error(text, &e, cli.json)).map(|_| 2),
        }
    } else {
        repl(&cli, algebra, input, out, err)
    };
    result.unwrap_or(2)
}

/// Entry point for the binary: process arguments and standard streams.
pub fn main() -> i32 {
    let stdin = std::io::stdin();
    let mut input = stdin.lock();
    run(
        std::env::args_os(),
        &mut input,
        &mut std::io::stdout(),
        &mut std::io::stderr(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str], stdin: &str) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("superplane").chain(args.iter().copied()),
            &mut stdin.as_bytes(),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn one_shot() {
        let (code, out, _) = call(&["--algebra", "plane", "nf(th x)"], "");
        assert_eq!((code, out.trim()), (0, "q^-1*x*th"));
    }

    #[test]
    fn parse_errors_exit_two() {
        let (code, _, err) = call(&["x^"], "");
        assert_eq!(code, 2);
        assert!(err.contains("offset 2"), "{err}");
        assert_eq!(call(&["--algebra", "nope", "x"], "").0, 2);
        assert_eq!(call(&["--bogus"], "").0, 2);
        assert_eq!(call(&["--check", "nope"], "").0, 2);
    }

    #[test]
    fn repl_lines() {
        let (code, out, _) = call(&[], "nf(w^3)\n:algebra plane\neps(th)\n");
        assert_eq!(code, 0);
        assert_eq!(out.lines().collect::<Vec<_>>(), ["0", "0"]);
    }

    #[test]
    fn json_check_lines() {
        let (code, out, _) = call(&["--check", "scalars", "--json"], "");
        assert_eq!(code, 0);
        for line in out.lines() {
            let v: serde_json::Value = serde_json::from_str(line).unwrap();
            assert_eq!(v["suite"], "scalars");
        }
    }
}
