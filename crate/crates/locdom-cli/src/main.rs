use std::process::exit;

use clap::Parser;

use locdom_cli::{exit_code, run, Cli};

fn main() {
    match Cli::try_parse() {
        Ok(cli) => exit(run(cli)),
        Err(err) => {
            // --help and --version land here too; only real usage errors
            // take the usage exit code.
            let code = if err.use_stderr() {
                exit_code::USAGE
            } else {
                exit_code::OK
            };
            let _ = err.print();
            exit(code);
        }
    }
}
