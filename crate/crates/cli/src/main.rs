use clap::Parser;
use ramsey_cli::{emit, run, run_args, Cli};

fn main() {
    let args: Vec<std::ffi::OsString> = std::env::args_os().collect();
    let code = match Cli::try_parse_from(&args) {
        Ok(cli) => emit(&run(&cli), cli.output.as_deref()),
        Err(_) => emit(&run_args(&args), None),
    };
    std::process::exit(code);
}
