mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use apsum_core::cone::{apery_table, cone_export, hilbert_numerator, ring_properties};
use apsum_core::family::{
    apery_gamma5, apery_gamma6_conjectured, minimality_oracle, partial_sum_generators,
};
use apsum_core::frobenius::{frobenius_gamma5, frobenius_via_oracle, pf_gamma5, pf_oracle};
use apsum_core::ideal::{
    gastinger_verify_with, generator_catalog_variant, CatalogVariant, MonomialOrder,
};
use apsum_core::oracle::{apery_oracle, order_oracle};
use apsum_core::sweep::{sweep_gamma6, sweep_uniqueness, SweepOptions};
use apsum_core::{cone_decomposition, ArithmeticSeed, Error};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use render::Rendered;

const SCHEMA_VERSION: u32 = 1;

#[derive(Parser, Debug)]
#[command(
    name = "apsum",
    version,
    about = "Semigroups generated by partial sums of an arithmetic progression"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Table)]
    format: Format,

    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Args, Debug, Clone, Copy)]
struct SeedArgs {
    #[arg(long)]
    a: u64,
    #[arg(long)]
    d: u64,
    /// Embedding dimension (number of partial sums).
    #[arg(long, default_value_t = 5)]
    m: usize,
}

impl SeedArgs {
    fn seed(&self) -> Result<ArithmeticSeed, Error> {
        ArithmeticSeed::new(self.a, self.d, self.m)
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generators, minimality, Frobenius number and type.
    Info(SeedArgs),
    /// Apéry set with respect to a.
    Apery {
        #[command(flatten)]
        seed: SeedArgs,
        /// Compute by brute force and compare with the closed form.
        #[arg(long)]
        oracle: bool,
    },
    /// Frobenius number.
    Frobenius {
        #[command(flatten)]
        seed: SeedArgs,
        #[arg(long)]
        oracle: bool,
    },
    /// Pseudo-Frobenius numbers and type.
    Pf {
        #[command(flatten)]
        seed: SeedArgs,
        #[arg(long)]
        oracle: bool,
    },
    /// Order of an element: the most generators summing to it.
    Order {
        #[command(flatten)]
        seed: SeedArgs,
        #[arg(long)]
        s: u64,
    },
    /// Defining ideal generators and their verification.
    #[command(subcommand)]
    Ideal(IdealCommand),
    /// Apéry table.
    Table(SeedArgs),
    /// Tangent cone decomposition, reduction number and ring properties.
    Cone(SeedArgs),
    /// Hilbert series numerator of the tangent cone.
    Hilbert(SeedArgs),
    /// Grid sweeps over (a, d).
    #[command(subcommand)]
    Sweep(SweepCommand),
}

#[derive(Subcommand, Debug)]
enum IdealCommand {
    /// Print the binomial generators.
    List {
        #[command(flatten)]
        seed: SeedArgs,
        /// For (21, 1) and (21, 2), include g1..g7.
        #[arg(long)]
        augmented: bool,
    },
    /// Check dim k[x]/(J + x1) = a and drop-one minimality.
    Verify {
        #[command(flatten)]
        seed: SeedArgs,
        #[arg(long, value_enum, default_value_t = OrderArg::Grevlex)]
        order: OrderArg,
    },
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum OrderArg {
    Grevlex,
    Lex,
}

#[derive(Args, Debug)]
struct SweepArgs {
    /// Inclusive range LO..HI (or a single value).
    #[arg(long, value_parser = parse_range)]
    a: (u64, u64),
    #[arg(long, value_parser = parse_range)]
    d: (u64, u64),
    /// Worker threads (0: one per processor).
    #[arg(long, env = "APSUM_JOBS", default_value_t = 0)]
    jobs: usize,
    /// JSONL checkpoint; an existing file is resumed.
    #[arg(long)]
    checkpoint: Option<PathBuf>,
    /// Record per-seed wall-clock time in the `ms` field.
    #[arg(long)]
    timing: bool,
}

impl SweepArgs {
    fn options(&self) -> SweepOptions {
        SweepOptions {
            jobs: self.jobs,
            timing: self.timing,
            checkpoint: self.checkpoint.clone(),
        }
    }
}

#[derive(Subcommand, Debug)]
enum SweepCommand {
    /// Uniqueness of Apéry factorizations in Γ_m.
    Unique {
        #[arg(long, default_value_t = 6)]
        m: usize,
        #[command(flatten)]
        grid: SweepArgs,
    },
    /// Conjectured Γ₆ Apéry set against the oracle.
    Gamma6 {
        #[command(flatten)]
        grid: SweepArgs,
    },
}

fn parse_range(s: &str) -> Result<(u64, u64), String> {
    let parse = |t: &str| t.trim().parse::<u64>().map_err(|e| format!("{t:?}: {e}"));
    match s.split_once("..") {
        Some((lo, hi)) => {
            let (lo, hi) = (parse(lo)?, parse(hi.trim_start_matches('='))?);
            if lo > hi {
                return Err(format!("empty range {s}"));
            }
            Ok((lo, hi))
        }
        None => parse(s).map(|v| (v, v)),
    }
}

/// What a command produced, before formatting.
struct Outcome {
    command: &'static str,
    seed: Option<ArithmeticSeed>,
    payload: Value,
    rendered: Rendered,
    /// Set when a check the command performs did not hold.
    failed_check: Option<String>,
}

impl Outcome {
    fn new<T: Serialize>(
        command: &'static str,
        seed: Option<ArithmeticSeed>,
        payload: &T,
        rendered: Rendered,
    ) -> Self {
        Self {
            command,
            seed,
            payload: serde_json::to_value(payload).expect("payloads serialize"),
            rendered,
            failed_check: None,
        }
    }
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct OutputEnvelope<'a> {
    command: &'a str,
    seed: Option<ArithmeticSeed>,
    payload: &'a Value,
    tool_version: &'a str,
    schema_version: u32,
}

fn require_m5(seed: &ArithmeticSeed) -> Result<(), Error> {
    if seed.m() != 5 {
        return Err(Error::UnsupportedDimension {
            m: seed.m(),
            required: 5,
        });
    }
    Ok(())
}

fn run(cmd: &Command) -> Result<Outcome, Error> {
    match cmd {
        Command::Info(args) => {
            let seed = args.seed()?;
            let gens = partial_sum_generators(&seed)?;
            let pf = pf_oracle(&seed)?;
            let payload = json!({
                "generators": gens.as_slice(),
                "multiplicity": gens.multiplicity(),
                "minimallyGenerated": minimality_oracle(&seed)?,
                "frobenius": pf.frobenius,
                "type": pf.type_count,
                "q": seed.q(),
                "r": seed.r(),
            });
            let rendered = render::key_values(&payload);
            Ok(Outcome::new("info", Some(seed), &payload, rendered))
        }
        Command::Apery { seed: args, oracle } => {
            let seed = args.seed()?;
            if *oracle {
                let gens = partial_sum_generators(&seed)?;
                let by_residue = apery_oracle(&gens, seed.a())?;
                let closed = match seed.m() {
                    5 if seed.a() >= apsum_core::GAMMA5_MIN_A => {
                        Some(apsum_core::family::apery_gamma5_by_residue(&seed)?)
                    }
                    _ => None,
                };
                let agrees = closed.as_ref().map(|c| *c == by_residue);
                let payload = json!({ "byResidue": by_residue, "closedFormAgrees": agrees });
                let mut out = Outcome::new(
                    "apery",
                    Some(seed),
                    &payload,
                    render::apery_oracle(&by_residue, agrees),
                );
                if agrees == Some(false) {
                    out.failed_check = Some("closed-form Apéry set differs from the oracle".into());
                }
                return Ok(out);
            }
            if seed.m() == 6 {
                let set = apery_gamma6_conjectured(&seed)?;
                let payload = json!({ "conjectured": true, "elements": set });
                return Ok(Outcome::new(
                    "apery",
                    Some(seed),
                    &payload,
                    render::list("element", &set),
                ));
            }
            require_m5(&seed)?;
            let records = apery_gamma5(&seed)?;
            let rendered = render::apery(&records);
            Ok(Outcome::new("apery", Some(seed), &records, rendered))
        }
        Command::Frobenius { seed: args, oracle } => {
            let seed = args.seed()?;
            let (value, source) = if *oracle || seed.m() != 5 {
                (frobenius_via_oracle(&seed)?, "oracle")
            } else {
                (frobenius_gamma5(&seed)?, "closedForm")
            };
            let payload = json!({ "frobenius": value, "source": source });
            let rendered = render::key_values(&payload);
            Ok(Outcome::new("frobenius", Some(seed), &payload, rendered))
        }
        Command::Pf { seed: args, oracle } => {
            let seed = args.seed()?;
            let pf = if *oracle || seed.m() != 5 {
                pf_oracle(&seed)?
            } else {
                pf_gamma5(&seed)?
            };
            let rendered = render::pf(&pf);
            Ok(Outcome::new("pf", Some(seed), &pf, rendered))
        }
        Command::Order { seed: args, s } => {
            let seed = args.seed()?;
            let order = order_oracle(*s, &partial_sum_generators(&seed)?)?;
            let payload = json!({ "s": s, "order": order });
            let rendered = render::key_values(&payload);
            Ok(Outcome::new("order", Some(seed), &payload, rendered))
        }
        Command::Ideal(IdealCommand::List {
            seed: args,
            augmented,
        }) => {
            let seed = args.seed()?;
            let variant = if *augmented {
                CatalogVariant::Augmented
            } else {
                CatalogVariant::Strict
            };
            let catalog = generator_catalog_variant(&seed, variant)?;
            let rendered = render::catalog(&catalog.generators);
            Ok(Outcome::new(
                "ideal list",
                Some(seed),
                &catalog.generators,
                rendered,
            ))
        }
        Command::Ideal(IdealCommand::Verify { seed: args, order }) => {
            let seed = args.seed()?;
            let order = match order {
                OrderArg::Grevlex => MonomialOrder::Grevlex,
                OrderArg::Lex => MonomialOrder::Lex,
            };
            let report = gastinger_verify_with(&seed, order)?;
            let rendered = render::gastinger(&report);
            let mut out = Outcome::new("ideal verify", Some(seed), &report, rendered);
            if !(report.pass && report.minimal) {
                out.failed_check = Some(format!(
                    "dimension {} (expected {}), minimal: {}",
                    report.dimension,
                    seed.a(),
                    report.minimal
                ));
            }
            Ok(out)
        }
        Command::Table(args) => {
            let seed = args.seed()?;
            require_m5(&seed)?;
            let table = apery_table(&seed)?;
            let export = cone_export(&seed)?;
            let rendered = render::table(&table);
            Ok(Outcome::new("table", Some(seed), &export, rendered))
        }
        Command::Cone(args) => {
            let seed = args.seed()?;
            require_m5(&seed)?;
            let cone = cone_decomposition(&seed)?;
            let props = ring_properties(&seed)?;
            let payload = json!({ "decomposition": cone, "properties": props });
            let rendered = render::cone(&cone, &props);
            Ok(Outcome::new("cone", Some(seed), &payload, rendered))
        }
        Command::Hilbert(args) => {
            let seed = args.seed()?;
            require_m5(&seed)?;
            let h = hilbert_numerator(&seed)?;
            let rendered = render::hilbert(&h);
            Ok(Outcome::new("hilbert", Some(seed), &h, rendered))
        }
        Command::Sweep(SweepCommand::Unique { m, grid }) => {
            let report = sweep_uniqueness(
                *m,
                grid.a.0..=grid.a.1,
                grid.d.0..=grid.d.1,
                &grid.options(),
            )?;
            let rendered = render::sweep(&report);
            Ok(Outcome::new("sweep unique", None, &report, rendered))
        }
        Command::Sweep(SweepCommand::Gamma6 { grid }) => {
            let report = sweep_gamma6(grid.a.0..=grid.a.1, grid.d.0..=grid.d.1, &grid.options())?;
            let rendered = render::sweep(&report);
            Ok(Outcome::new("sweep gamma6", None, &report, rendered))
        }
    }
}

fn emit(cli: &Cli, text: &str) -> Result<(), String> {
    match &cli.out {
        Some(path) => std::fs::write(path, text).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match run(&cli.command) {
        Ok(o) => o,
        Err(e) => {
            if cli.format == Format::Json {
                let v = json!({ "error": { "code": e.code(), "message": e.to_string() } });
                eprintln!("{v}");
            } else {
                eprintln!("error [{}]: {e}", e.code());
            }
            return ExitCode::from(if e.is_verification_failure() { 4 } else { 3 });
        }
    };
    let text = match cli.format {
        Format::Json => {
            let env = OutputEnvelope {
                command: outcome.command,
                seed: outcome.seed,
                payload: &outcome.payload,
                tool_version: env!("CARGO_PKG_VERSION"),
                schema_version: SCHEMA_VERSION,
            };
            let mut s = serde_json::to_string_pretty(&env).expect("envelope serializes");
            s.push('\n');
            s
        }
        Format::Csv => outcome.rendered.csv,
        Format::Table => outcome.rendered.table,
    };
    if let Err(msg) = emit(&cli, &text) {
        eprintln!("error: {msg}");
        return ExitCode::from(3);
    }
    match outcome.failed_check {
        Some(msg) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(4)
        }
        None => ExitCode::SUCCESS,
    }
}
