mod args;
mod render;

use std::process::ExitCode;

use clap::Parser;
use rayon::prelude::*;
use ree_core::suite::{run_for_m, MReport, SuiteOptions};

use args::{Cli, Command, Format, VerifyArgs};

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn thread_pool() -> Result<rayon::ThreadPool, String> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Ok(v) = std::env::var("REE_VERIFY_THREADS") {
        let n: usize = v.trim().parse().map_err(|_| format!("REE_VERIFY_THREADS: invalid value '{v}'"))?;
        if n == 0 {
            return Err("REE_VERIFY_THREADS must be at least 1".into());
        }
        builder = builder.num_threads(n);
    }
    builder.build().map_err(|e| e.to_string())
}

fn verify(a: VerifyArgs) -> Result<ExitCode, String> {
    let opts = SuiteOptions { exhaustive: a.exhaustive, n_max: a.n_max };
    let pool = thread_pool()?;
    let reports: Vec<MReport> = pool.install(|| a.m.0.par_iter().map(|&m| run_for_m(m, &a.checks.0, opts)).collect());
    let ok = reports.iter().all(MReport::all_pass);
    match a.format {
        Format::Json => println!("{}", render::verify_json(&reports)),
        Format::Text => print!("{}", render::verify_text(&reports)),
    }
    Ok(ExitCode::from(if ok { 0 } else { EXIT_FAIL }))
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Verify(a) => verify(a),
        Command::Degrees { m, format } => {
            let [m] = m.0[..] else {
                return Err("degrees takes a single value of m".into());
            };
            match render::degrees(m, format) {
                Ok(out) => {
                    print!("{out}");
                    Ok(ExitCode::SUCCESS)
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    Ok(ExitCode::from(EXIT_FAIL))
                }
            }
        }
        Command::DumpTables { format } => {
            print!("{}", render::dump_tables(format));
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    run(cli).unwrap_or_else(|e| {
        eprintln!("error: {e}");
        ExitCode::from(EXIT_USAGE)
    })
}
