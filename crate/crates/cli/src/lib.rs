//! Command-line front end for `autotame`.

pub mod args;
mod commands;

use std::io::BufRead;

use autotame::coefficients::{Characteristic, Fp, Rational};
use clap::Parser;
use serde_json::Value;

use args::{Cli, Command, Format};
pub use commands::Failure;

/// Runs one invocation (`args[0]` is the program name). Returns the exit
/// code and the text to print: 0 on success, 1 for a mathematical failure,
/// 2 for malformed input.
pub fn run(args: &[String]) -> (i32, String) {
    run_with_stdin(args, &mut std::io::stdin().lock())
}

/// Like [`run`], reading `batch` input from `stdin`.
pub fn run_with_stdin(args: &[String], stdin: &mut dyn BufRead) -> (i32, String) {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (code, e.to_string());
        }
    };
    if matches!(cli.command, Command::Batch) {
        return batch(&cli, args, stdin);
    }
    match dispatch(&cli) {
        Ok(v) => (0, render(&v, cli.format)),
        Err(f) => (f.code, render_error(&f, cli.format)),
    }
}

fn dispatch(cli: &Cli) -> Result<Value, Failure> {
    if cli.p == 0 {
        return commands::execute::<Rational>(cli, &());
    }
    let ctx = Characteristic::new(cli.p).map_err(|e| Failure { code: 2, message: e.to_string() })?;
    commands::execute::<Fp>(cli, &ctx)
}

/// Global flags given before `batch` apply to every line.
fn batch(cli: &Cli, args: &[String], stdin: &mut dyn BufRead) -> (i32, String) {
    let prefix: Vec<String> = args.iter().take_while(|a| a.as_str() != "batch").cloned().collect();
    let mut out = Vec::new();
    let mut worst = 0;
    for (n, line) in stdin.lines().enumerate() {
        let line = match line {
            Ok(l) => l,
            Err(e) => return (2, format!("stdin: {e}")),
        };
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let Some(words) = shlex::split(trimmed) else {
            let f = Failure { code: 2, message: format!("line {}: unbalanced quotes", n + 1) };
            out.push(render_error(&f, cli.format));
            worst = worst.max(2);
            continue;
        };
        let mut argv = prefix.clone();
        argv.extend(words);
        let (code, text) = run_with_stdin(&argv, &mut std::io::empty());
        worst = worst.max(code);
        out.push(text);
    }
    let sep = match cli.format {
        Format::Json => "\n",
        Format::Text => "\n\n",
    };
    (worst, out.join(sep))
}

fn render(v: &Value, format: Format) -> String {
    match format {
        Format::Json => v.to_string(),
        Format::Text => match v {
            Value::Object(map) => map
                .iter()
                .map(|(k, v)| format!("{k}: {}", scalar(v)))
                .collect::<Vec<_>>()
                .join("\n"),
            other => scalar(other),
        },
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn render_error(f: &Failure, format: Format) -> String {
    match format {
        Format::Json => serde_json::json!({ "error": f.message, "code": f.code }).to_string(),
        Format::Text => format!("error: {}", f.message),
    }
}
