use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use whiteman_codes::commands::{self, Command, Outcome};
use whiteman_codes::config::parse_indices;
use whiteman_codes::{Format, JobConfig};
use whiteman_core::distance::{DEFAULT_ENUM_BUDGET, DEFAULT_RANK_TEST_CAP};

#[derive(Parser)]
#[command(
    name = "whiteman",
    version,
    about = "Cyclic codes from two-prime Whiteman sequences of order 6"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Cyclotomic classes, Omega values and the selected theorem branch.
    Classify(Args),
    /// Generator polynomial by the gcd oracle and by the closed forms.
    Generate(Args),
    /// Exact checks of the structural identities.
    Check(Args),
    /// Minimum distance of the oracle code or of a theorem code.
    Distance(Args),
    /// Reproduce the worked examples and compare with reference values.
    Examples(SuiteArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Table,
}

#[derive(clap::Args)]
struct Common {
    #[arg(long, value_enum, default_value = "json")]
    format: FormatArg,
    /// Largest weight tried by support search.
    #[arg(long, default_value_t = 4)]
    wmax: usize,
    /// Cap on enumerated codewords.
    #[arg(long, default_value_t = DEFAULT_ENUM_BUDGET)]
    enum_budget: u64,
    /// Cap on support-search rank tests.
    #[arg(long, default_value_t = DEFAULT_RANK_TEST_CAP)]
    rank_cap: u64,
}

#[derive(clap::Args)]
struct Args {
    #[arg(long)]
    n1: u64,
    #[arg(long)]
    n2: u64,
    #[arg(long)]
    q: u64,
    /// Theorem 3..8 constructor for `distance`.
    #[arg(long, value_parser = clap::value_parser!(u8).range(3..=8))]
    theorem: Option<u8>,
    /// Constructor indices in the order i,j,h,t.
    #[arg(long, default_value = "")]
    indices: String,
    /// Include full class lists.
    #[arg(long)]
    full: bool,
    #[command(flatten)]
    common: Common,
}

#[derive(clap::Args)]
struct SuiteArgs {
    #[command(flatten)]
    common: Common,
}

fn apply(cfg: &mut JobConfig, c: &Common) {
    cfg.format = match c.format {
        FormatArg::Json => Format::Json,
        FormatArg::Table => Format::Table,
    };
    cfg.wmax = c.wmax;
    cfg.enum_budget = c.enum_budget;
    cfg.rank_cap = c.rank_cap;
}

fn job(a: &Args) -> Result<JobConfig, whiteman_codes::InputError> {
    let mut cfg = JobConfig::new(a.n1, a.n2, a.q);
    apply(&mut cfg, &a.common);
    cfg.full = a.full;
    cfg.constructor = commands::constructor(a.theorem, &parse_indices(&a.indices)?)?;
    Ok(cfg)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (cmd, cfg) = match &cli.command {
        Cmd::Classify(a) => (Command::Classify, job(a)),
        Cmd::Generate(a) => (Command::Generate, job(a)),
        Cmd::Check(a) => (Command::Check, job(a)),
        Cmd::Distance(a) => (Command::Distance, job(a)),
        Cmd::Examples(s) => {
            let mut cfg = JobConfig::new(0, 0, 0);
            apply(&mut cfg, &s.common);
            (Command::Examples, Ok(cfg))
        }
    };
    let out = match cfg {
        Ok(cfg) => commands::run(cmd, &cfg),
        Err(e) => Outcome::input_error(&e),
    };
    if out.exit_code == 1 {
        eprint!("{}", out.output);
    } else {
        print!("{}", out.output);
    }
    ExitCode::from(out.exit_code as u8)
}
