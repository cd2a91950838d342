mod compute;
mod render;

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use eulersum::identity::{IdentityId, Params};
use eulersum::verify::{self, Grid, ParamRange, Summary, DEFAULT_MAX_WEIGHT};
use eulersum::{EvalContext, VerificationRecord};

use compute::{parse_target, Computed, TARGET_USAGE};
use render::Format;

#[derive(Parser, Debug)]
#[command(
    name = "eulersum",
    version,
    about = "Compute and verify linear Euler sums, double t/T-values and their closed forms"
)]
struct Cli {
    /// Significant decimal digits (at least 15)
    #[arg(long, global = true, env = "EULERSUM_PREC", default_value_t = 50, value_parser = clap::value_parser!(u32).range(15..))]
    prec: u32,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Worker threads for grid runs
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    threads: Option<u64>,

    /// Write the report here instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Also write the aggregate summary JSON here
    #[arg(long, global = true)]
    summary: Option<PathBuf>,

    /// Include per-record wall times
    #[arg(long, global = true)]
    timings: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate one quantity, e.g. `T 1 2`, `zeta 3`, `genocchi 6`, `dpoly 2`
    Compute {
        #[arg(required = true, num_args = 1.., value_name = "TARGET")]
        target: Vec<String>,
    },
    /// Verify one identity instance, a parameter grid, or `all`
    Verify(VerifyArgs),
    /// Replay the displayed example identities and the known evaluations
    Examples,
    /// List identity ids with their parameters
    List,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Identity id (e.g. SYM_TS, CONV_BGG) or `all`
    id: String,
    #[arg(long)]
    m: Option<ParamRange>,
    #[arg(long)]
    p: Option<ParamRange>,
    #[arg(long)]
    q: Option<ParamRange>,
    #[arg(long)]
    n: Option<ParamRange>,
    #[arg(long)]
    k: Option<ParamRange>,
    #[arg(long)]
    alpha: Option<ParamRange>,
    #[arg(long)]
    gamma: Option<ParamRange>,
    #[arg(long)]
    delta: Option<ParamRange>,
    #[arg(long)]
    epsilon: Option<ParamRange>,
    #[arg(long)]
    index: Option<ParamRange>,
    #[arg(long)]
    order: Option<ParamRange>,
    /// Cap on weight + 1 (m + p + q for the symmetric theorems)
    #[arg(long)]
    max_weight: Option<u32>,
}

impl VerifyArgs {
    fn given(&self) -> Vec<(&'static str, &ParamRange)> {
        let all = [
            ("m", &self.m),
            ("p", &self.p),
            ("q", &self.q),
            ("n", &self.n),
            ("k", &self.k),
            ("alpha", &self.alpha),
            ("gamma", &self.gamma),
            ("delta", &self.delta),
            ("epsilon", &self.epsilon),
            ("index", &self.index),
            ("order", &self.order),
        ];
        all.into_iter()
            .filter_map(|(name, r)| r.as_ref().map(|r| (name, r)))
            .collect()
    }
}

/// Settings shared by every subcommand.
#[derive(Debug)]
struct CliConfig {
    precision_digits: u32,
    format: Format,
    threads: Option<usize>,
    out: Option<PathBuf>,
    summary: Option<PathBuf>,
    timings: bool,
}

enum Failure {
    /// Bad invocation; exit status 2.
    Usage(String),
    /// An identity or computation failed; exit status 1.
    Failed(String),
}

fn usage(e: impl ToString) -> Failure {
    Failure::Usage(e.to_string())
}

fn emit(cfg: &CliConfig, body: &str) -> Result<(), Failure> {
    match &cfg.out {
        Some(path) => fs::write(path, body).map_err(|e| usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(body.as_bytes())
                .map_err(|e| Failure::Failed(e.to_string()))
        }
    }
}

fn finish(cfg: &CliConfig, records: Vec<VerificationRecord>) -> Result<(), Failure> {
    let records: Vec<VerificationRecord> = if cfg.timings {
        records
    } else {
        records.into_iter().map(VerificationRecord::without_timing).collect()
    };
    let (body, summary) = render::report(&records, cfg.format, cfg.timings);
    emit(cfg, &body)?;
    if let Some(path) = &cfg.summary {
        fs::write(path, summary.to_json() + "\n")
            .map_err(|e| usage(format!("cannot write {}: {e}", path.display())))?;
    }
    verdict(&summary)
}

fn verdict(s: &Summary) -> Result<(), Failure> {
    if s.all_passed() {
        Ok(())
    } else {
        Err(Failure::Failed(format!("{} of {} records failed", s.failed, s.total)))
    }
}

fn cmd_compute(cfg: &CliConfig, words: &[String]) -> Result<(), Failure> {
    let target = parse_target(words).map_err(|e| usage(format!("{e}\n{TARGET_USAGE}")))?;
    let mut ctx = EvalContext::new(cfg.precision_digits);
    let computed = target.compute(&mut ctx).map_err(|e| Failure::Failed(e.to_string()))?;
    let label = target.label();
    let digits = cfg.precision_digits as usize;
    let (kind, value, bound) = match computed {
        Computed::Numeric { value, error_bound } => ("numeric", value.to_decimal_string(digits), error_bound),
        Computed::Exact(s) => ("exact", s, None),
    };
    let body = match cfg.format {
        Format::Text if kind == "numeric" => format!("{label} = {value}  ({digits} digits)\n"),
        Format::Text => format!("{label} = {value}\n"),
        Format::Json => {
            let mut obj = serde_json::json!({ "target": label, "kind": kind, "value": value });
            if kind == "numeric" {
                obj["digits"] = digits.into();
                if let Some(b) = bound {
                    obj["error_bound"] = b.into();
                }
            }
            obj.to_string() + "\n"
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let d = if kind == "numeric" {
                digits.to_string()
            } else {
                String::new()
            };
            w.write_record(["target", "kind", "digits", "value"])
                .expect("in-memory write");
            w.write_record([label.as_str(), kind, d.as_str(), value.as_str()])
                .expect("in-memory write");
            String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
        }
    };
    emit(cfg, &body)
}

fn cmd_verify(cfg: &CliConfig, args: &VerifyArgs) -> Result<(), Failure> {
    let template = EvalContext::new(cfg.precision_digits);
    let cap = args.max_weight.unwrap_or(DEFAULT_MAX_WEIGHT);
    let given = args.given();
    if args.id.eq_ignore_ascii_case("all") {
        if !given.is_empty() {
            return Err(usage("`verify all` takes no parameter ranges; use --max-weight"));
        }
        return finish(cfg, verify::verify_all(cap, &template));
    }
    let id: IdentityId = args.id.parse().map_err(usage)?;
    for (name, _) in &given {
        if !id.schema().contains(name) {
            return Err(usage(format!(
                "{id} has no parameter `{name}`; parameters: {}",
                id.schema().join(", ")
            )));
        }
    }
    let single: Option<Vec<u32>> = id
        .schema()
        .iter()
        .map(|name| {
            given
                .iter()
                .find(|(n, _)| n == name)
                .and_then(|(_, r)| (r.0.start() == r.0.end()).then_some(*r.0.start()))
        })
        .collect();
    if let Some(values) = single {
        let params = Params::for_id(id, &values).map_err(usage)?;
        let mut ctx = template.fresh();
        let record = verify::verify_one(id, &params, &mut ctx)
            .unwrap_or_else(|e| VerificationRecord::failure(id, params.clone(), &e));
        return finish(cfg, vec![record]);
    }
    let mut grid = Grid::new(id).with_max_weight(cap);
    for (name, r) in &given {
        grid = grid.with_range(name, r.0.clone()).map_err(usage)?;
    }
    if grid.points().is_empty() {
        return Err(usage(format!("no valid {id} parameters in the requested grid")));
    }
    finish(cfg, verify::verify_grid(&grid, &template))
}

fn cmd_list(cfg: &CliConfig) -> Result<(), Failure> {
    let mut body = String::new();
    for id in IdentityId::ALL {
        let kind = if id.is_exact() { "exact" } else { "numeric" };
        body.push_str(&format!("{:<13} {:<8} {}\n", id.as_str(), kind, id.schema().join(" ")));
    }
    emit(cfg, &body)
}

fn run(cli: Cli) -> Result<(), Failure> {
    let cfg = CliConfig {
        precision_digits: cli.prec,
        format: cli.format,
        threads: cli.threads.map(|t| t as usize),
        out: cli.out,
        summary: cli.summary,
        timings: cli.timings,
    };
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(t) = cfg.threads {
        builder = builder.num_threads(t);
    }
    let pool = builder.build().map_err(|e| Failure::Failed(e.to_string()))?;
    pool.install(|| match &cli.command {
        Command::Compute { target } => cmd_compute(&cfg, target),
        Command::Verify(args) => cmd_verify(&cfg, args),
        Command::Examples => finish(&cfg, verify::verify_examples(&EvalContext::new(cfg.precision_digits))),
        Command::List => cmd_list(&cfg),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Failed(msg)) => {
            eprintln!("eulersum: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("eulersum: {msg}");
            eprintln!("Run `eulersum --help` for usage.");
            ExitCode::from(2)
        }
    }
}
