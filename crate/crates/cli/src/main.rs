use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num_rational::BigRational;

use eqschub::{
    billey_restrict, billey_evaluate, parse_word, positivity_certificate, restriction_table,
    structure_constants, y_structure_constants, Basis, Convention, Error, RootSystem, WeylElement,
};
use eqschub_cli::render::{self, EvalOutput, Format};
use eqschub_cli::{load_system, run_sweep, CliError, KindArg, SweepConfig};

#[derive(Debug, Parser)]
#[command(name = "eqschub", version, about = "Exact equivariant Schubert structure constants")]
struct Cli {
    /// Built-in root system: A<n>, B<n>, C<n>, D<n>, G2, F4, AffineA1.
    #[arg(long = "type", global = true, value_name = "NAME")]
    type_name: Option<String>,
    /// JSON file {"rank": l, "entries": [[...]]} with a (generalized) Cartan matrix.
    #[arg(long, global = true, value_name = "FILE")]
    cartan: Option<PathBuf>,
    /// Classification of the Cartan matrix.
    #[arg(long, global = true, value_enum, default_value = "auto")]
    kind: KindArg,
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    /// JSONL cache for sweep results.
    #[arg(long, global = true, env = "EQSCHUB_CACHE", value_name = "PATH")]
    cache: Option<PathBuf>,
    /// Worker threads (0 = one per core).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    /// Length bound for enumeration.
    #[arg(long = "max-length", global = true, value_name = "K")]
    max_length: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print rank, positive roots and fundamental weights.
    Rootsys,
    /// Print the restriction xi^w(v).
    Restrict {
        #[arg(long, allow_hyphen_values = true, value_name = "WORD")]
        w: String,
        #[arg(long, allow_hyphen_values = true, value_name = "WORD")]
        v: String,
        #[arg(long, default_value = "KK")]
        convention: String,
    },
    /// Print the structure constants of x_u * x_v (or y_u * y_v).
    Mult {
        #[arg(long, value_name = "WORD")]
        u: String,
        #[arg(long, value_name = "WORD")]
        v: String,
        #[arg(long, default_value = "x")]
        basis: String,
        /// Evaluate every constant at a_i := nu_i (comma-separated positive rationals).
        #[arg(long, value_name = "NU")]
        eval: Option<String>,
        /// Relabel evaluations by (u, v, w) -> (u^-1, v^-1, w^-1).
        #[arg(long)]
        p_convention: bool,
    },
    /// Certify every pair with l(u), l(v) <= K/2 (all pairs for a whole finite group).
    Sweep {
        #[arg(long, default_value = "x")]
        basis: String,
    },
}

fn element(rs: &RootSystem, text: &str) -> Result<WeylElement, CliError> {
    let word = parse_word(text, rs.rank())?;
    Ok(rs.element_from_word(&word)?)
}

fn parse_point(text: &str, rank: usize) -> Result<Vec<BigRational>, CliError> {
    let point: Vec<BigRational> = text
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<BigRational>()
                .map_err(|_| CliError::Usage(format!("{t:?} is not a rational number")))
        })
        .collect::<Result<_, _>>()?;
    if point.len() != rank {
        return Err(Error::RankMismatch {
            left: rank,
            right: point.len(),
        }
        .into());
    }
    Ok(point)
}

fn run(cli: Cli) -> Result<String, CliError> {
    let rs = load_system(cli.type_name.as_deref(), cli.cartan.as_deref(), cli.kind)?;
    match cli.command {
        Command::Rootsys => render::rootsys(&rs, cli.format),
        Command::Restrict { w, v, convention } => {
            let w = element(&rs, &w)?;
            let v = element(&rs, &v)?;
            let convention: Convention = convention.parse()?;
            let value = match convention {
                Convention::KK => billey_restrict(&rs, &w, &v),
                Convention::Arabia | Convention::Billey => {
                    billey_restrict(&rs, &rs.inverse(&w), &rs.inverse(&v))
                }
            };
            render::polynomial(&value, cli.format)
        }
        Command::Mult {
            u,
            v,
            basis,
            eval,
            p_convention,
        } => {
            let u = element(&rs, &u)?;
            let v = element(&rs, &v)?;
            let basis: Basis = basis.parse()?;
            let st = match basis {
                Basis::X => {
                    let table = restriction_table(&rs, u.length() + v.length())?;
                    structure_constants(&table, &u, &v)?
                }
                Basis::Y => {
                    let top = rs.longest_element()?.length();
                    let table = restriction_table(&rs, top)?;
                    y_structure_constants(&table, &u, &v)?
                }
            };
            let cert = positivity_certificate(&st);
            let point = eval.map(|t| parse_point(&t, rs.rank())).transpose()?;
            let eval_out = match &point {
                Some(nu) => {
                    let mut evaluation = billey_evaluate(&st, nu)?;
                    if p_convention {
                        evaluation = evaluation.relabel_inverse(&rs);
                    }
                    Some(EvalOutput { nu, evaluation })
                }
                None => None,
            };
            let out = render::structure_table(&st, &cert, eval_out.as_ref(), cli.format)?;
            if !cert.passed() {
                print!("{out}");
                return Err(CliError::CertificateFailed);
            }
            Ok(out)
        }
        Command::Sweep { basis } => {
            let max_length = cli
                .max_length
                .ok_or_else(|| CliError::Usage("sweep requires --max-length".into()))?;
            let cfg = SweepConfig {
                system: rs,
                max_length,
                basis: basis.parse()?,
                jobs: cli.jobs,
                cache: cli.cache,
            };
            let report = run_sweep(&cfg)?;
            eprintln!(
                "sweep: {} pairs ({} computed) in {:.3}s",
                report.pairs,
                report.computed,
                report.wall_time.as_secs_f64()
            );
            let out = match cli.format {
                Format::Text => report.to_text(),
                Format::Json => format!("{}\n", report.to_json()),
                Format::Csv => report.to_csv(),
            };
            if !report.passed() {
                print!("{out}");
                return Err(CliError::CertificateFailed);
            }
            Ok(out)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.as_bytes()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
