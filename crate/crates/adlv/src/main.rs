use std::process::ExitCode;

use adlv::commands::{self, Output, SatakeArgs};
use adlv::groupfile::load_group;
use adlv_core::hecke::SatakeConvention;
use adlv_core::repthy::DEFAULT_CAP;
use anyhow::{bail, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "adlv", version, about = "Unramified groups, crystals, Kottwitz sets and spherical Hecke algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Args, Clone)]
struct Common {
    /// Group file (TOML) or catalog label such as `2A3`, `U3`, `GL2`.
    #[arg(long)]
    group: Option<String>,
    /// Coweight as comma-separated coordinates; repeat for products.
    #[arg(long, allow_hyphen_values = true)]
    mu: Vec<String>,
    /// Read `--mu` as pairings with the simple roots.
    #[arg(long)]
    dynkin: bool,
    /// Use the i-th fundamental coweight (1-based) instead of `--mu`.
    #[arg(long)]
    omega: Option<usize>,
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
    /// Largest representation dimension or Weyl group order to build.
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: u128,
}

#[derive(Subcommand)]
enum Command {
    /// Rank, Weyl groups, π₁(G)_σ and σ-orbits of a group.
    Describe(Common),
    /// Dimensions of V_μ and V_μ^Tate; without --group, the minuscule tables.
    TateTable(Common),
    /// Unramified classes in B(G, μ) with dimensions and component labels.
    Adlv(Common),
    /// The factored determinant divisor for V_μ.
    Divisor(Common),
    /// Whether a Satake parameter is general for V_μ.
    Generic {
        #[command(flatten)]
        common: Common,
        /// Torus coordinates of γ, comma-separated rationals such as `2,5/3,1`.
        #[arg(long, allow_hyphen_values = true)]
        gamma: String,
    },
    /// Products in the spherical Hecke algebra of GL_n and their Satake transforms.
    Satake {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        q: i64,
        /// Output the Hecke element corresponding to [V_μ] instead of a product.
        #[arg(long)]
        rep: bool,
        /// With --rep, use restriction to Ĝσ instead of Ĝφ.
        #[arg(long)]
        arithmetic: bool,
        /// Largest total degree of lattices enumerated.
        #[arg(long, default_value_t = 8)]
        window: i64,
    },
}

fn single_mu(d: &adlv_core::rootdata::BasedRootDatum, c: &Common) -> Result<Vec<i64>> {
    if let Some(i) = c.omega {
        if !c.mu.is_empty() {
            bail!("give either --mu or --omega");
        }
        return commands::fundamental(d, i);
    }
    match c.mu.as_slice() {
        [one] => commands::resolve_mu(d, one, c.dynkin),
        [] => bail!("--mu or --omega is required"),
        _ => bail!("this command takes a single --mu"),
    }
}

fn group(c: &Common) -> Result<adlv_core::rootdata::BasedRootDatum> {
    match &c.group {
        Some(g) => load_group(g),
        None => bail!("--group is required"),
    }
}

fn run(cli: Cli) -> Result<(Output, Format)> {
    Ok(match cli.command {
        Command::Describe(c) => (commands::describe(&group(&c)?, c.cap)?, c.format),
        Command::TateTable(c) => {
            let out = match &c.group {
                None => commands::tate_table(None, None, c.cap)?,
                Some(_) => {
                    let d = group(&c)?;
                    let mu = if c.mu.is_empty() && c.omega.is_none() { None } else { Some(single_mu(&d, &c)?) };
                    commands::tate_table(Some(&d), mu.as_deref(), c.cap)?
                }
            };
            (out, c.format)
        }
        Command::Adlv(c) => {
            let d = group(&c)?;
            (commands::adlv(&d, &single_mu(&d, &c)?, c.cap)?, c.format)
        }
        Command::Divisor(c) => {
            let d = group(&c)?;
            (commands::divisor(&d, &single_mu(&d, &c)?, c.cap)?, c.format)
        }
        Command::Generic { common: c, gamma } => {
            let d = group(&c)?;
            let mu = single_mu(&d, &c)?;
            (commands::generic(&d, &mu, &commands::parse_gamma(&gamma)?, c.cap)?, c.format)
        }
        Command::Satake { common: c, q, rep, arithmetic, window } => {
            let label = c.group.clone().unwrap_or_default();
            let n = commands::gl_rank(&label)?;
            let mus = c
                .mu
                .iter()
                .map(|m| adlv::json::parse_coords(m).map_err(anyhow::Error::msg))
                .collect::<Result<Vec<_>>>()?;
            let convention = if arithmetic { SatakeConvention::Arithmetic } else { SatakeConvention::Geometric };
            (commands::satake(SatakeArgs { n, q, mus: &mus, rep, convention, window })?, c.format)
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((out, format)) => {
            match format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&out.json).expect("JSON values serialize")),
                Format::Table => print!("{}", out.table),
            }
            if out.verdict {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
