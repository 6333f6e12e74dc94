use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use isotypic::cyclic::Variant;
use isotypic::report::{
    cmd_cover, cmd_cyclic, cmd_decompose, cmd_table, cmd_verify_all, CommandOutput, OutputFormat, RunConfig,
    DEFAULT_MAX_DEGREE,
};
use isotypic::Result;

#[derive(Parser)]
#[command(name = "isotypic", version, about = "Exact isotypical decompositions over prime fields")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Builtin group: S<n>, C<n>, D<n>, Q8, A4.
    #[arg(long, global = true)]
    group: Option<String>,

    /// File of generating permutations in cycle notation, one per line.
    #[arg(long, global = true)]
    gens: Option<PathBuf>,

    /// File holding a multiplication table on labels 0..n, one row per line.
    #[arg(long, global = true)]
    table: Option<PathBuf>,

    /// Prime override; must exceed |G| and be 1 mod the exponent.
    #[arg(long, global = true)]
    prime: Option<u64>,

    #[arg(long, global = true, default_value_t = DEFAULT_MAX_DEGREE)]
    max_degree: usize,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write the report here instead of stdout.
    #[arg(long, global = true, visible_alias = "report")]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Polynomial,
    Laurent,
}

#[derive(Subcommand)]
enum Command {
    /// Character table, classes and central idempotents.
    Table,
    /// Isotypic decomposition of a representation.
    Decompose {
        /// `regular`, `perm`, or a matrix file.
        #[arg(long, default_value = "regular")]
        rep: String,
    },
    /// Degree-by-degree analysis of polynomial functions under a linear action.
    Cover {
        /// `perm`, `perm<N>`, `faithful`, `reflection`, or a matrix file.
        #[arg(long, default_value = "perm")]
        action: String,
    },
    /// Cyclic cover x ↦ xⁿ.
    Cyclic {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = VariantArg::Polynomial)]
        variant: VariantArg,
    },
    /// Every builtin scenario.
    VerifyAll,
}

fn seed_from_env() -> Result<u64> {
    match std::env::var("ISOTYPIC_SEED") {
        Ok(s) => s.trim().parse().map_err(|_| isotypic::Error::Parse(format!("ISOTYPIC_SEED={s:?} is not an integer"))),
        Err(_) => Ok(0),
    }
}

fn run(cli: Cli) -> Result<(CommandOutput, RunConfig)> {
    let config = RunConfig {
        group: cli.group,
        gens: cli.gens,
        table: cli.table,
        prime: cli.prime,
        max_degree: cli.max_degree,
        format: match cli.format {
            Format::Text => OutputFormat::Text,
            Format::Json => OutputFormat::Json,
        },
        out: cli.out,
        seed: seed_from_env()?,
    };
    let output = match cli.command {
        Command::Table => cmd_table(&config)?,
        Command::Decompose { rep } => cmd_decompose(&config, &rep)?,
        Command::Cover { action } => cmd_cover(&config, &action)?,
        Command::Cyclic { n, variant } => {
            let v = match variant {
                VariantArg::Polynomial => Variant::Polynomial,
                VariantArg::Laurent => Variant::Laurent,
            };
            cmd_cyclic(&config, n, v)?
        }
        Command::VerifyAll => cmd_verify_all(&config)?,
    };
    Ok((output, config))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((output, config)) => {
            let text = output.render(config.format);
            match &config.out {
                Some(path) => {
                    if let Err(e) = std::fs::write(path, text) {
                        eprintln!("error: {}: {e}", path.display());
                        return ExitCode::from(2);
                    }
                }
                None => print!("{text}"),
            }
            ExitCode::from(if output.pass { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
