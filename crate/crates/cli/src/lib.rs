//! Session language and driver for the `tracemod` command.

pub mod exec;
pub mod parse;

pub use exec::{execute, exit, Format, Options, Outcome};
pub use parse::{parse_session, Diagnostic, Session};

/// Parses and runs `source`, writing reports to `out` and diagnostics to
/// `err`; returns the process exit code.
pub fn run(source: &str, options: &Options, out: &mut dyn std::io::Write, err: &mut dyn std::io::Write) -> i32 {
    let session = match parse_session(source) {
        Ok(s) => s,
        Err(d) => {
            let _ = writeln!(err, "error: {d}");
            return exit::PARSE;
        }
    };
    match execute(&session, options, out) {
        Ok(outcome) => {
            if let Some((statement, e)) = &outcome.error {
                let _ = writeln!(err, "error in `{statement}`: {e}");
            }
            outcome.exit_code()
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit::OTHER
        }
    }
}
