//! Command-line front end: `eval`, `repl`, `check` and `table`.

use std::ffi::OsString;
use std::io::{BufRead, Write};

use clap::{Parser, Subcommand};

use crate::context::{AlgebraContext, MAX_DIM};
use crate::expr::Env;
use crate::suite::{run_suite, SuiteName};
use crate::table::{emit_table, Product, TableFormat};

pub const EXIT_OK: i32 = 0;
pub const EXIT_EVAL: i32 = 1;
pub const EXIT_SUITE: i32 = 2;
pub const EXIT_USAGE: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "hyclif", version, about = "Exact calculator for the hyperbolic Clifford algebra Cl(V ⊕ V*)")]
struct Cli {
    /// Dimension n of V.
    #[arg(long, short = 'n', default_value_t = 2, value_parser = clap::value_parser!(u64).range(1..=MAX_DIM as u64))]
    dim: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate one expression and print its canonical form.
    Eval {
        expr: String,
        #[arg(long)]
        json: bool,
    },
    /// Read expressions from stdin, one per line.
    Repl,
    /// Run randomized identity suites.
    Check {
        #[arg(long, default_value = "all", value_parser = clap::builder::PossibleValuesParser::new(SuiteName::NAMES))]
        suite: String,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
    /// Print the Cayley table of a product on the blade basis.
    Table {
        #[arg(long, default_value = "geometric")]
        product: Product,
        #[arg(long, default_value = "text")]
        format: TableFormat,
    },
}

/// Runs the CLI and returns the process exit code.
pub fn run<I, T>(args: I, input: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let n = cli.dim as usize;
    match cli.command {
        Command::Eval { expr, json } => {
            let ctx = AlgebraContext::new(n).expect("dimension validated by clap");
            match Env::new(ctx).eval_str(&expr) {
                Ok(v) if json => {
                    let _ = writeln!(out, "{}", v.to_json());
                    EXIT_OK
                }
                Ok(v) => {
                    let _ = writeln!(out, "{v}");
                    EXIT_OK
                }
                Err(e) => {
                    let _ = writeln!(err, "error: {e}");
                    EXIT_EVAL
                }
            }
        }
        Command::Repl => repl(n, input, out, err),
        Command::Check { suite, trials, seed } => match run_suite(&suite, n, trials, seed) {
            Ok(report) => {
                let _ = writeln!(out, "{report}");
                if report.all_passed() {
                    EXIT_OK
                } else {
                    EXIT_SUITE
                }
            }
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                EXIT_USAGE
            }
        },
        Command::Table { product, format } => match emit_table(product, n, format) {
            Ok(t) => {
                let _ = write!(out, "{t}");
                EXIT_OK
            }
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                EXIT_USAGE
            }
        },
    }
}

/// Errors are reported and the loop continues; the exit code is always 0.
fn repl(n: usize, input: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let mut env = Env::new(AlgebraContext::new(n).expect("dimension validated by clap"));
    let mut line = String::new();
    loop {
        line.clear();
        match input.read_line(&mut line) {
            Ok(0) | Err(_) => return EXIT_OK,
            Ok(_) => {}
        }
        let cmd = line.trim();
        if cmd.is_empty() {
            continue;
        }
        if cmd == ":quit" || cmd == ":q" {
            return EXIT_OK;
        }
        let result = if let Some(rest) = cmd.strip_prefix(":dim") {
            meta_dim(&mut env, rest.trim())
        } else if let Some(rest) = cmd.strip_prefix(":let") {
            meta_let(&mut env, rest.trim())
        } else if cmd.starts_with(':') {
            Err(format!("unknown command {cmd:?} (expected :dim, :let or :quit)"))
        } else {
            env.eval_str(cmd).map(|v| v.to_string()).map_err(|e| e.to_string())
        };
        match result {
            Ok(s) if s.is_empty() => {}
            Ok(s) => {
                let _ = writeln!(out, "{s}");
            }
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
            }
        }
    }
}

/// `:dim` prints the dimension; `:dim N` switches to a fresh context and drops all variables.
fn meta_dim(env: &mut Env, arg: &str) -> Result<String, String> {
    if arg.is_empty() {
        return Ok(env.dim().to_string());
    }
    let n: usize = arg.parse().map_err(|_| format!("bad dimension {arg:?}"))?;
    let ctx = AlgebraContext::new(n).map_err(|e| e.to_string())?;
    *env = Env::new(ctx);
    Ok(String::new())
}

fn meta_let(env: &mut Env, arg: &str) -> Result<String, String> {
    let (name, src) = arg.split_once('=').ok_or("expected :let name = expr")?;
    let name = name.trim();
    let value = env.eval_str(src.trim()).map_err(|e| e.to_string())?;
    let shown = value.to_string();
    env.bind(name, value).map_err(|e| e.to_string())?;
    Ok(format!("{name} = {shown}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str], stdin: &str) -> (i32, String, String) {
        let mut input = stdin.as_bytes();
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(
            std::iter::once("hyclif").chain(args.iter().copied()),
            &mut input,
            &mut out,
            &mut err,
        );
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn eval_and_errors() {
        assert_eq!(call(&["--dim", "2", "eval", "sigma*sigma"], ""), (0, "1\n".into(), String::new()));
        let (code, _, err) = call(&["--dim", "2", "eval", "e3"], "");
        assert_eq!(code, EXIT_EVAL);
        assert!(err.contains("col 1"), "{err}");
        assert_eq!(call(&["--dim", "0", "eval", "1"], "").0, EXIT_USAGE);
        assert_eq!(call(&["--dim", "2", "check", "--suite", "bogus"], "").0, EXIT_USAGE);
        assert_eq!(call(&["--dim", "4", "table"], "").0, EXIT_USAGE);
    }

    #[test]
    fn json_output() {
        let (code, out, _) = call(&["--dim", "2", "eval", "3/2 e1^t2", "--json"], "");
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["dim"], 2);
        assert_eq!(v["terms"][0]["blade"], serde_json::json!(["e1", "t2"]));
        assert_eq!(v["terms"][0]["coeff"]["rat"], "3/2");
    }

    #[test]
    fn repl_session() {
        let script = ":dim\n:let u = e1 + t1\nu*u\nfoo\n:dim 1\nu\nt1*e1\n:quit\ne1\n";
        let (code, out, err) = call(&["--dim", "2", "repl"], script);
        assert_eq!(code, 0);
        assert_eq!(out, "2\nu = e1 + t1\n2\n1 - e1^t1\n");
        assert_eq!(err.lines().count(), 2);
    }
}
