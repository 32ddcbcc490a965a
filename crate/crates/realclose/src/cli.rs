//! Command-line surface.
//!
//! ```text
//! realclose closure   [FILE|-]              strict doc -> closed doc (closure)
//! realclose normalize [FILE|-]              strict doc -> normalized strict doc
//! realclose min       [FILE|-] [--digits N] [--close-first]
//! realclose decompose [FILE|-] [--digits N]
//! realclose verify    [FILE|-]              symbolic closure vs oracle closure
//! ```
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 user error (arguments,
//! file access, parse errors), 3 internal invariant violation.

use crate::io::{
    document_closed_union, document_from_closed, document_from_strict, document_strict_union,
    parse_document, render_document, DocKind, SetDocument,
};
use crate::opt::{minimum, MinResult};
use crate::roots::AlgebraicNumber;
use crate::sem::{closure_oracle, decompose_closed, decompose_strict, refine_for_render};
use crate::semialg::{closure_union, normalize_union, SemialgError, SetUnion};
use std::io::Read;

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USER: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

struct Options {
    command: String,
    input: Option<String>,
    digits: u32,
    close_first: bool,
}

/// Runs the CLI; returns the process exit code and writes to the given
/// streams.
pub fn run(
    args: &[String],
    stdout: &mut dyn std::io::Write,
    stderr: &mut dyn std::io::Write,
) -> i32 {
    match run_inner(args, stdout) {
        Ok(code) => code,
        Err(CliError::User(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USER
        }
        Err(CliError::Internal(msg)) => {
            let _ = writeln!(stderr, "internal error: {msg}");
            EXIT_INTERNAL
        }
        Err(CliError::Io(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USER
        }
    }
}

enum CliError {
    User(String),
    Internal(String),
    Io(String),
}

impl From<SemialgError> for CliError {
    fn from(e: SemialgError) -> Self {
        CliError::Internal(e.to_string())
    }
}

const USAGE: &str = "usage: realclose <closure|normalize|min|decompose|verify> [FILE|-] \
                     [--digits N] [--close-first]";

fn parse_args(args: &[String]) -> Result<Options, CliError> {
    let mut it = args.iter();
    let command = it
        .next()
        .ok_or_else(|| CliError::User(USAGE.to_string()))?
        .clone();
    let mut input = None;
    let mut digits = 6u32;
    let mut close_first = false;
    while let Some(arg) = it.next() {
        match arg.as_str() {
            "--digits" => {
                let v = it
                    .next()
                    .ok_or_else(|| CliError::User("--digits needs a value".into()))?;
                digits = v
                    .parse::<u32>()
                    .ok()
                    .filter(|d| (1..=64).contains(d))
                    .ok_or_else(|| {
                        CliError::User(format!("--digits must be an integer in 1..=64, got `{v}`"))
                    })?;
            }
            "--close-first" => close_first = true,
            "-" => input = Some("-".to_string()),
            other if other.starts_with("--") => {
                return Err(CliError::User(format!("unknown flag `{other}`")));
            }
            other => {
                if input.is_some() {
                    return Err(CliError::User("multiple input paths".into()));
                }
                input = Some(other.to_string());
            }
        }
    }
    Ok(Options {
        command,
        input,
        digits,
        close_first,
    })
}

fn read_input(input: &Option<String>) -> Result<String, CliError> {
    match input.as_deref() {
        None | Some("-") => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| CliError::Io(format!("reading standard input: {e}")))?;
            Ok(buf)
        }
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| CliError::Io(format!("reading `{path}`: {e}"))),
    }
}

fn load_document(input: &Option<String>) -> Result<SetDocument, CliError> {
    let src = read_input(input)?;
    parse_document(&src).map_err(|e| CliError::User(e.to_string()))
}

fn strict_union_of(doc: &SetDocument) -> Result<SetUnion, CliError> {
    document_strict_union(doc).map_err(|e| CliError::User(e.to_string()))
}

fn run_inner(args: &[String], out: &mut dyn std::io::Write) -> Result<i32, CliError> {
    let opts = parse_args(args)?;
    let write = |out: &mut dyn std::io::Write, s: String| -> Result<(), CliError> {
        out.write_all(s.as_bytes())
            .map_err(|e| CliError::Io(e.to_string()))
    };
    match opts.command.as_str() {
        "closure" => {
            let doc = load_document(&opts.input)?;
            let union = strict_union_of(&doc)?;
            let closed = closure_union(&union)?;
            write(out, render_document(&document_from_closed(&closed, &doc.variable)))?;
            Ok(EXIT_OK)
        }
        "normalize" => {
            let doc = load_document(&opts.input)?;
            let union = strict_union_of(&doc)?;
            let parts = normalize_union(&union)?;
            let normalized = SetUnion::new(parts.iter().map(|n| n.as_set().clone()).collect());
            write(
                out,
                render_document(&document_from_strict(&normalized, &doc.variable)),
            )?;
            Ok(EXIT_OK)
        }
        "min" => {
            let doc = load_document(&opts.input)?;
            let closed = match doc.kind {
                DocKind::Closed => {
                    document_closed_union(&doc).map_err(|e| CliError::User(e.to_string()))?
                }
                DocKind::Strict if opts.close_first => {
                    closure_union(&strict_union_of(&doc)?)?
                }
                DocKind::Strict => {
                    return Err(CliError::User(
                        "`min` expects a closed document; pass --close-first to take the \
                         closure of a strict one"
                            .into(),
                    ))
                }
            };
            match minimum(&closed)? {
                MinResult::Empty => write(out, "empty\n".to_string())?,
                MinResult::UnboundedBelow => write(out, "unbounded_below\n".to_string())?,
                MinResult::Attained(v) => {
                    let width = crate::poly::Rat::new(
                        1.into(),
                        num_bigint::BigInt::from(10u32).pow(opts.digits),
                    );
                    let v = crate::roots::refine(&v, &width);
                    write(out, format!("attained {}\n", render_exact(&v)))?;
                    write(out, format!("~ {}\n", v.decimal_str(opts.digits)))?;
                }
            }
            Ok(EXIT_OK)
        }
        "decompose" => {
            let doc = load_document(&opts.input)?;
            let mut d = match doc.kind {
                DocKind::Strict => decompose_strict(&strict_union_of(&doc)?)?,
                DocKind::Closed => decompose_closed(
                    &document_closed_union(&doc).map_err(|e| CliError::User(e.to_string()))?,
                )?,
            };
            refine_for_render(&mut d, opts.digits);
            write(out, d.render(opts.digits))?;
            Ok(EXIT_OK)
        }
        "verify" => {
            let doc = load_document(&opts.input)?;
            let union = strict_union_of(&doc)?;
            let symbolic = decompose_closed(&closure_union(&union)?)?;
            let oracle = closure_oracle(&decompose_strict(&union)?);
            if symbolic == oracle {
                write(out, "agree\n".to_string())?;
                Ok(EXIT_OK)
            } else {
                let mut s = symbolic.clone();
                let mut o = oracle.clone();
                refine_for_render(&mut s, opts.digits);
                refine_for_render(&mut o, opts.digits);
                write(out, "disagree\n".to_string())?;
                write(out, format!("symbolic closure:\n{}", s.render(opts.digits)))?;
                write(out, format!("oracle closure:\n{}", o.render(opts.digits)))?;
                Ok(EXIT_MISMATCH)
            }
        }
        other => Err(CliError::User(format!(
            "unknown command `{other}`\n{USAGE}"
        ))),
    }
}

/// Exact rendering of an algebraic number: plain rational, or the defining
/// polynomial with the isolating interval.
fn render_exact(v: &AlgebraicNumber) -> String {
    match v.as_rational() {
        Some(r) => format!("{r}"),
        None => format!(
            "root of {} in ({}, {})",
            v.defining(),
            v.lo(),
            v.hi()
        ),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str], expect_code: i32) -> String {
        let args: Vec<String> = args.iter().map(|s| s.to_string()).collect();
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(&args, &mut out, &mut err);
        assert_eq!(
            code,
            expect_code,
            "stdout: {} stderr: {}",
            String::from_utf8_lossy(&out),
            String::from_utf8_lossy(&err)
        );
        String::from_utf8(out).unwrap()
    }

    fn write_temp(name: &str, contents: &str) -> std::path::PathBuf {
        let path = std::env::temp_dir().join(format!("realclose-cli-{}-{name}", std::process::id()));
        std::fs::write(&path, contents).unwrap();
        path
    }

    #[test]
    fn closure_command_even_mul() {
        let path = write_temp("evenmul.set", "var t\nkind strict\nset\nineq t^2*(t-1)\nend\n");
        let out = run_capture(&["closure", path.to_str().unwrap()], EXIT_OK);
        assert_eq!(out, "var t\nkind closed\nset\nineq t - 1\nend\n");
    }

    #[test]
    fn min_requires_closed_or_flag() {
        let path = write_temp("strictmin.set", "var t\nkind strict\nset\nineq t\nend\n");
        let args: Vec<String> = vec!["min".into(), path.to_str().unwrap().into()];
        let mut out = Vec::new();
        let mut err = Vec::new();
        assert_eq!(run(&args, &mut out, &mut err), EXIT_USER);

        let out = run_capture(&["min", path.to_str().unwrap(), "--close-first"], EXIT_OK);
        assert!(out.starts_with("attained 0\n"));
    }

    #[test]
    fn bad_arguments_are_user_errors() {
        let mut out = Vec::new();
        let mut err = Vec::new();
        assert_eq!(run(&[], &mut out, &mut err), EXIT_USER);
        assert_eq!(
            run(&["frobnicate".to_string()], &mut out, &mut err),
            EXIT_USER
        );
        assert_eq!(
            run(
                &["min".to_string(), "--digits".to_string(), "zero".to_string()],
                &mut out,
                &mut err
            ),
            EXIT_USER
        );
        let missing = std::env::temp_dir().join("realclose-no-such-file.set");
        assert_eq!(
            run(
                &["closure".to_string(), missing.to_str().unwrap().to_string()],
                &mut out,
                &mut err
            ),
            EXIT_USER
        );
    }
}
