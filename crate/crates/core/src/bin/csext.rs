use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use csext::combinatorics::RemovableRows;
use csext::harness::{run_comb, run_sym, table, DiskCache, Parallelism, Report, TableRow, CACHE_DIR_ENV};
use csext::oracle::{ext1_gl, ext1_sym};
use csext::specht::{DegreeCap, SpechtEngine};
use csext::{Error, Partition, Prime, Weight};

const EXIT_USAGE: u8 = 1;
const EXIT_SCOPE: u8 = 2;
const EXIT_MISMATCH: u8 = 3;

#[derive(Parser)]
#[command(name = "csext", version, about = "Ext^1 for completely splittable weights, with a Specht-module verifier")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write the output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Directory for cached Specht data.
    #[arg(long, global = true, env = CACHE_DIR_ENV)]
    cache_dir: Option<PathBuf>,

    /// Largest symmetric-group degree to build (at most 8).
    #[arg(long, global = true, default_value_t = DegreeCap::DEFAULT.get())]
    cap: usize,

    /// Run sweeps on one thread.
    #[arg(long, global = true)]
    sequential: bool,

    /// Leave wall time out of reports so reruns are byte-identical.
    #[arg(long, global = true)]
    no_timing: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Closed-form Ext^1 between two simples.
    Ext {
        #[command(subcommand)]
        side: ExtSide,
    },
    /// Combinatorial attributes of one weight or partition.
    Inspect(InspectArgs),
    /// Run a verification sweep.
    Verify {
        #[command(subcommand)]
        kind: VerifyKind,
    },
    /// List the partitions of `m` with chi, splittability, bigness and tilde.
    Table {
        #[arg(long, value_parser = parse_prime)]
        p: Prime,
        #[arg(long)]
        m: usize,
    },
}

#[derive(Subcommand)]
enum ExtSide {
    /// Irreducible GL(n)-modules, weights of equal length.
    Gl {
        #[arg(long, value_parser = parse_prime)]
        p: Prime,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Weight,
        #[arg(long, allow_hyphen_values = true)]
        mu: Weight,
    },
    /// Simple modules of the symmetric group.
    Sym {
        #[arg(long, value_parser = parse_prime)]
        p: Prime,
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        mu: Partition,
    },
}

#[derive(Args)]
struct InspectArgs {
    #[arg(long, value_parser = parse_prime)]
    p: Prime,
    #[arg(long, allow_hyphen_values = true, conflicts_with = "partition", required_unless_present = "partition")]
    weight: Option<Weight>,
    #[arg(long)]
    partition: Option<Partition>,
    /// Also inspect the partition as a weight of this rank.
    #[arg(long, requires = "partition")]
    n: Option<usize>,
}

#[derive(Subcommand)]
enum VerifyKind {
    /// Weight and partition invariants.
    Comb {
        #[arg(long, value_delimiter = ',', value_parser = parse_prime, default_value = "2,3,5,7")]
        p: Vec<Prime>,
        #[arg(long, default_value_t = 8)]
        n: usize,
        #[arg(long, default_value_t = 6)]
        max_entry: i64,
    },
    /// Specht radicals, intertwiner images and the Ext^1 shadow.
    Sym {
        #[arg(long, value_delimiter = ',', value_parser = parse_prime)]
        p: Vec<Prime>,
        #[arg(long)]
        m: usize,
        /// Sweep every degree from 1 to `m`.
        #[arg(long)]
        up_to: bool,
    },
}

fn parse_prime(s: &str) -> Result<Prime, String> {
    let v: u32 = s.trim().parse().map_err(|_| format!("`{s}` is not an integer"))?;
    Prime::new(v).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct WeightSummary {
    weight: Weight,
    dominant: bool,
    removable_rows: Option<RemovableRows>,
    psi: Option<u64>,
    p_restricted: bool,
    completely_splittable: Option<bool>,
    big: Option<bool>,
    hat: Option<Weight>,
}

#[derive(Serialize)]
struct PartitionSummary {
    partition: Partition,
    degree: usize,
    chi: u64,
    p_regular: bool,
    rim_p_hook: bool,
    completely_splittable: bool,
    big: bool,
    tilde: Option<Partition>,
    #[serde(skip_serializing_if = "Option::is_none")]
    as_weight: Option<WeightSummary>,
}

fn summarize_weight(w: &Weight, p: Prime) -> WeightSummary {
    let dominant = w.is_dominant();
    let p_restricted = dominant && w.is_p_restricted(p).unwrap_or(false);
    let big = if p_restricted { w.is_big(p).ok() } else { None };
    WeightSummary {
        weight: w.clone(),
        dominant,
        removable_rows: w.removable_rows().ok(),
        psi: w.psi().ok(),
        p_restricted,
        completely_splittable: if p_restricted { w.is_completely_splittable(p).ok() } else { None },
        big,
        hat: if big == Some(true) { w.hat(p).ok() } else { None },
    }
}

fn summarize_partition(lam: &Partition, p: Prime, n: Option<usize>) -> csext::Result<PartitionSummary> {
    let big = lam.is_big(p);
    let as_weight = match n {
        Some(n) => Some(summarize_weight(&lam.to_weight(n)?, p)),
        None => None,
    };
    Ok(PartitionSummary {
        partition: lam.clone(),
        degree: lam.degree(),
        chi: lam.chi(),
        p_regular: lam.is_p_regular(p),
        rim_p_hook: lam.has_rim_p_hook(p),
        completely_splittable: lam.is_completely_splittable(p),
        big,
        tilde: if big { lam.tilde(p).ok() } else { None },
        as_weight,
    })
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map(T::to_string).unwrap_or_else(|| "-".into())
}

fn weight_text(s: &WeightSummary) -> String {
    let rows = s.removable_rows.as_ref().map(|r| format!("{:?}", r.rows)).unwrap_or_else(|| "-".into());
    format!(
        "weight={}\ndominant={}\nremovable_rows={}\npsi={}\nrestricted={}\nCS={}\nbig={}\nhat={}\n",
        s.weight,
        s.dominant,
        rows,
        opt(&s.psi),
        s.p_restricted,
        opt(&s.completely_splittable),
        opt(&s.big),
        opt(&s.hat)
    )
}

fn partition_text(s: &PartitionSummary) -> String {
    let mut out = format!(
        "partition={}\ndegree={}\nchi={}\nregular={}\nrim_hook={}\nCS={}\nbig={}\ntilde={}\n",
        s.partition,
        s.degree,
        s.chi,
        s.p_regular,
        s.rim_p_hook,
        s.completely_splittable,
        s.big,
        opt(&s.tilde)
    );
    if let Some(w) = &s.as_weight {
        out.push_str(&weight_text(w));
    }
    out
}

fn table_text(rows: &[TableRow]) -> String {
    rows.iter()
        .map(|r| {
            let mut line = format!(
                "{} chi={} regular={} CS={} big={}",
                r.partition, r.chi, r.p_regular, r.completely_splittable, r.big
            );
            if let Some(t) = &r.tilde {
                line.push_str(&format!(" tilde={t}"));
            }
            line + "\n"
        })
        .collect()
}

fn table_csv(rows: &[TableRow]) -> csext::Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["partition", "chi", "p_regular", "completely_splittable", "big", "tilde"]).map_err(io_error)?;
    for r in rows {
        w.write_record([
            r.partition.to_string(),
            r.chi.to_string(),
            r.p_regular.to_string(),
            r.completely_splittable.to_string(),
            r.big.to_string(),
            r.tilde.as_ref().map(|t| t.to_string()).unwrap_or_default(),
        ])
        .map_err(io_error)?;
    }
    let bytes = w.into_inner().map_err(|e| io_error(e.into_error()))?;
    Ok(String::from_utf8_lossy(&bytes).into_owned())
}

fn io_error(e: impl Into<Box<dyn std::error::Error + Send + Sync>>) -> Error {
    Error::Io(std::io::Error::other(e))
}

struct Outcome {
    text: String,
    code: u8,
}

fn emit(cli: &Cli, text: &str) -> csext::Result<()> {
    match &cli.out {
        Some(path) => fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn render_report(cli: &Cli, report: Report) -> csext::Result<Outcome> {
    let report = if cli.no_timing { report.without_timing() } else { report };
    let text = match cli.format {
        Format::Json => report.to_json()? + "\n",
        Format::Csv => report.to_csv(),
        Format::Text => report.to_text(),
    };
    if !report.all_match() {
        eprintln!("{} mismatches", report.summary.mismatches);
    }
    Ok(Outcome { text, code: if report.all_match() { 0 } else { EXIT_MISMATCH } })
}

fn engine(cli: &Cli) -> csext::Result<SpechtEngine> {
    let cap = DegreeCap::new(cli.cap)?;
    Ok(match &cli.cache_dir {
        Some(dir) => SpechtEngine::with_store(cap, Box::new(DiskCache::new(dir)?)),
        None => SpechtEngine::new(cap),
    })
}

fn json<T: Serialize>(v: &T) -> csext::Result<String> {
    Ok(serde_json::to_string_pretty(v)? + "\n")
}

fn run(cli: &Cli) -> csext::Result<Outcome> {
    let mode = if cli.sequential { Parallelism::Sequential } else { Parallelism::Parallel };
    match &cli.command {
        Command::Ext { side } => {
            let answer = match side {
                ExtSide::Gl { p, lambda, mu } => ext1_gl(lambda, mu, *p)?,
                ExtSide::Sym { p, lambda, mu } => ext1_sym(lambda, mu, *p)?,
            };
            let text = match cli.format {
                Format::Json => json(&answer)?,
                _ => format!("{answer}\n"),
            };
            Ok(Outcome { text, code: 0 })
        }
        Command::Inspect(args) => {
            let text = match (&args.weight, &args.partition) {
                (Some(w), _) => {
                    let s = summarize_weight(w, args.p);
                    if !s.dominant {
                        return Err(csext::ScopeError::NonDominant.into());
                    }
                    match cli.format {
                        Format::Json => json(&s)?,
                        _ => weight_text(&s),
                    }
                }
                (None, Some(lam)) => {
                    let s = summarize_partition(lam, args.p, args.n)?;
                    match cli.format {
                        Format::Json => json(&s)?,
                        _ => partition_text(&s),
                    }
                }
                (None, None) => unreachable!("clap requires one of --weight or --partition"),
            };
            Ok(Outcome { text, code: 0 })
        }
        Command::Verify { kind } => {
            let report = match kind {
                VerifyKind::Comb { p, n, max_entry } => run_comb(p, *n, *max_entry, mode)?,
                VerifyKind::Sym { p, m, up_to } => {
                    let degrees: Vec<usize> = if *up_to { (1..=*m).collect() } else { vec![*m] };
                    run_sym(&engine(cli)?, p, &degrees, mode)?
                }
            };
            render_report(cli, report)
        }
        Command::Table { p, m } => {
            let rows = table(*p, *m);
            let text = match cli.format {
                Format::Json => json(&rows)?,
                Format::Csv => table_csv(&rows)?,
                Format::Text => table_text(&rows),
            };
            Ok(Outcome { text, code: 0 })
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(outcome) => match emit(&cli, &outcome.text) {
            Ok(()) => ExitCode::from(outcome.code),
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(EXIT_USAGE)
            }
        },
        Err(Error::OutOfScope(s)) => {
            println!("out of scope: {s}");
            ExitCode::from(EXIT_SCOPE)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
