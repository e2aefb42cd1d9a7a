//! `qfano`: run the verification suite, inspect graded data of the eight
//! classes, draw exact sample points and dump catalog objects.
//!
//! Exit status: 0 when every selected check passes, 1 when a check fails
//! (or sampling is exhausted), 2 on a usage error. Usage errors are raised
//! before any work is done.

use clap::{Args, Parser, Subcommand, ValueEnum};
use qfano_core::catalog::vars::{G_VARS, H_VARS, PI_VARS};
use qfano_core::catalog::{catalog, object_ids};
use qfano_core::graded::class_summary;
use qfano_core::report::{run, Format, RunConfig, DEFAULT_SAMPLES};
use qfano_core::sampler::{SampleConfig, Sampler};
use qfano_core::RationalPoint;
use std::process::ExitCode;

#[derive(Parser, Debug)]
#[command(name = "qfano", version, about = "Exact verification harness for the key varieties Π¹⁵ and H¹³")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run checks and print a report.
    Verify(VerifyArgs),
    /// Weights, degrees, Hilbert series and adjunction of one class.
    Hilbert(HilbertArgs),
    /// Print one exact sample point, one coordinate per line.
    Sample(SampleArgs),
    /// Inspect catalog objects.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Run every registered check.
    #[arg(long, conflicts_with = "only", required_unless_present = "only")]
    all: bool,
    /// Comma-separated check ids.
    #[arg(long, value_delimiter = ',')]
    only: Option<Vec<String>>,
    /// Restrict per-class checks and summaries to these classes.
    #[arg(long, value_delimiter = ',')]
    classes: Option<Vec<u32>>,
    /// Samples per randomized check.
    #[arg(long, default_value_t = DEFAULT_SAMPLES as u64, value_parser = clap::value_parser!(u64).range(1..))]
    samples: u64,
    /// Master seed; per-check seeds are derived from it.
    #[arg(long, env = "QFANO_SEED", default_value_t = 42)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    /// Worker threads (defaults to the available parallelism).
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    jobs: Option<u64>,
    /// List the registered check ids and exit.
    #[arg(long, exclusive = true)]
    list: bool,
}

#[derive(Args, Debug)]
struct HilbertArgs {
    /// Class number (308, 501, 512, 550, 872, 577, 878 or 1766).
    #[arg(long)]
    class: u32,
    /// Expand the series up to t^order.
    #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(i64).range(0..))]
    order: i64,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct SampleArgs {
    #[arg(long, env = "QFANO_SEED", default_value_t = 42)]
    seed: u64,
    /// Coordinates are drawn from [−bound, bound].
    #[arg(long, default_value_t = 7)]
    bound: u32,
    #[arg(long, value_enum, ignore_case = true)]
    target: Target,
}

#[derive(Subcommand, Debug)]
enum CatalogAction {
    /// Print an object in canonical form.
    Dump { object_id: String },
    /// List the object ids.
    List,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Target {
    /// The hypersurface {G = 0}.
    #[value(name = "G")]
    G,
    /// Π¹⁵ (a lifted {G = 0} point).
    #[value(name = "Pi")]
    Pi,
    /// The singular locus S, on the chart p2·p4 ≠ 0.
    #[value(name = "S")]
    S,
    /// H¹³, the image of an admissible Π¹⁵ point.
    #[value(name = "H13")]
    H13,
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match cli.command {
        Command::Verify(args) => verify(args),
        Command::Hilbert(args) => hilbert(args),
        Command::Sample(args) => sample(args),
        Command::Catalog { action: CatalogAction::Dump { object_id } } => match catalog().dump(&object_id) {
            Ok(text) => {
                println!("{text}");
                ExitCode::SUCCESS
            }
            Err(e) => usage(e),
        },
        Command::Catalog { action: CatalogAction::List } => {
            for id in object_ids() {
                println!("{id}");
            }
            ExitCode::SUCCESS
        }
    }
}

fn verify(args: VerifyArgs) -> ExitCode {
    if args.list {
        for spec in qfano_core::verifier::registry() {
            println!("{:<32} {}", spec.id, spec.title);
        }
        return ExitCode::SUCCESS;
    }
    let mut config = RunConfig {
        master_seed: args.seed,
        samples: args.samples as usize,
        only: if args.all { None } else { args.only },
        classes: args.classes,
        format: match args.format {
            OutputFormat::Text => Format::Text,
            OutputFormat::Json => Format::Json,
        },
        ..RunConfig::default()
    };
    if let Some(j) = args.jobs {
        config.parallelism = j as usize;
    }
    match run(&config) {
        Ok(report) => {
            println!("{}", report.emit().trim_end());
            if report.all_pass() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => usage(e),
    }
}

fn hilbert(args: HilbertArgs) -> ExitCode {
    let class = match catalog().class(args.class) {
        Ok(c) => c,
        Err(e) => return usage(e),
    };
    let s = match class_summary(class, args.order) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    if args.json {
        println!("{}", serde_json::to_string_pretty(&s).expect("summary serializes"));
        return ExitCode::SUCCESS;
    }
    let join = |v: &[i64]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
    let a = &s.adjunction;
    println!("No.{}", s.number);
    println!("delta = {}", s.delta);
    println!("k = {}", s.k);
    println!("d = {}", join(&s.degrees));
    println!("P_X = P({})", s.ambient_px.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","));
    println!("cuts = {}", join(&s.cuts));
    println!("key variety = {}", if s.cone { "cone over Π¹³" } else { "Π¹³" });
    println!("basket = {}", s.basket);
    println!("numerator = {}", s.numerator);
    println!("expansion = {}", s.expansion.join(", "));
    println!("genus = {}", s.genus);
    println!(
        "adjunction: delta - sum w(key) + sum cuts = {} - {} + {} = {} (K_X = O({}))",
        a.delta, a.key_weight_sum, a.cut_sum, a.x_degree, a.x_degree
    );
    println!("adjunction: delta - sum w(Π¹³) = {} (-k = {})", a.pi13_degree, -a.k);
    if a.cone_k_discrepancy {
        println!("note: for the cone, delta - sum w = {} = -(k+1), not -k", a.delta - a.key_weight_sum);
    }
    ExitCode::SUCCESS
}

fn sample(args: SampleArgs) -> ExitCode {
    let cat = catalog();
    let cfg = SampleConfig { coord_bound: i64::from(args.bound), ..SampleConfig::with_seed(args.seed) };
    let mut s = Sampler::new(cfg);
    let (pt, names): (Result<RationalPoint, _>, &[&str]) = match args.target {
        Target::G => (s.sample_on_g(&cat.pi), &G_VARS),
        Target::Pi => (s.sample_on_pi(&cat.pi, (1, 2, 3)), &PI_VARS),
        Target::S => (s.sample_on_s(&cat.pi), &PI_VARS),
        Target::H13 => (s.sample_h13(&cat.pi, &cat.iso), &H_VARS),
    };
    match pt {
        Ok(pt) => {
            for n in names {
                println!("{n} = {}", pt.val(n));
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
