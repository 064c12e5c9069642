use std::io::Write;
use std::process::ExitCode;

use affgrass::cli::{run, EXIT_DISAGREEMENT, EXIT_PASS};

fn main() -> ExitCode {
    let (code, text) = run(std::env::args_os());
    // a closed pipe (e.g. `| head`) is not an error worth reporting
    let _ = if code == EXIT_PASS || code == EXIT_DISAGREEMENT {
        writeln!(std::io::stdout(), "{text}")
    } else {
        writeln!(std::io::stderr(), "{text}")
    };
    ExitCode::from(code as u8)
}
