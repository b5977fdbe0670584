use clap::{Args, Parser, Subcommand, ValueEnum};
use ree_core::suite::CheckSelection;

#[derive(Parser, Debug)]
#[command(name = "ree-verify", version, about = "Exact-arithmetic checks on the character degrees of 2F4(q^2)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Evaluate the character degree table at one value of m.
    Degrees {
        #[arg(short = 'm', long = "m", default_value = "1", value_parser = parse_m_list)]
        m: MList,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run the verification suite.
    Verify(VerifyArgs),
    /// Print the compiled-in tables.
    DumpTables {
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Values of m: `a..b` (inclusive), comma lists, or both.
    #[arg(short = 'm', long = "m", default_value = "1..4", value_parser = parse_m_list)]
    pub m: MList,
    /// Comma-separated checks, or `all`.
    #[arg(long, default_value = "all", value_parser = parse_checks)]
    pub checks: Checks,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Re-run the prime-dependent checks over every admissible prime.
    #[arg(long)]
    pub exhaustive: bool,
    /// Upper end of the alternating-group sweep.
    #[arg(long, default_value_t = 10_000, value_parser = clap::value_parser!(u64).range(7..))]
    pub n_max: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MList(pub Vec<u32>);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Checks(pub Vec<CheckSelection>);

fn parse_m(s: &str) -> Result<u32, String> {
    let m: u32 = s.trim().parse().map_err(|_| format!("invalid m '{s}'"))?;
    if m == 0 {
        return Err("m must be at least 1".into());
    }
    Ok(m)
}

pub fn parse_m_list(s: &str) -> Result<MList, String> {
    let mut out = Vec::new();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        match part.split_once("..") {
            Some((a, b)) => {
                let (a, b) = (parse_m(a)?, parse_m(b.trim_start_matches('='))?);
                if a > b {
                    return Err(format!("empty range '{part}'"));
                }
                out.extend(a..=b);
            }
            None => out.push(parse_m(part)?),
        }
    }
    out.sort_unstable();
    out.dedup();
    if out.is_empty() {
        return Err("no values of m given".into());
    }
    Ok(MList(out))
}

fn parse_checks(s: &str) -> Result<Checks, String> {
    CheckSelection::parse_list(s).map(Checks)
}
