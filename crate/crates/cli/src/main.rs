use std::collections::BTreeMap;
use std::process::ExitCode;

use clap::Parser;
use monge_cli::commands::{exit_status, run};
use monge_cli::report::Report;
use monge_cli::request::{build_request, read_config, Cli};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let file = match &cli.config {
        Some(p) => match read_config(p) {
            Ok(m) => m,
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(1);
            }
        },
        None => BTreeMap::new(),
    };
    let req = match build_request(&cli.command, &file) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    if let Some(n) = req.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let outcome = run(&req);
    let code = exit_status(&outcome);
    match outcome {
        Ok(payload) => {
            let format = req.format;
            print!("{}", Report::new(req, payload).render(format));
            if code != 0 {
                eprintln!("error: regenerated tables differ from the golden copies");
            }
        }
        Err(e) => eprintln!("error: {e}"),
    }
    ExitCode::from(code)
}
