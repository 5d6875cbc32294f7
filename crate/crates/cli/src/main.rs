//! `ratcubic`: invariants, classification, conjugation, database generation,
//! statistics and the forest experiment from the command line.
//!
//! Exit codes: 0 success, 2 invalid input, 1 internal failure.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use ratcubic_core::dataset::{
    build_record, generate, read_csv, read_jsonl, records_for, write_csv, DatasetError, DatasetRecord,
    EnumerationConfig, Stats,
};
use ratcubic_core::map::conjugate_map;
use ratcubic_core::rational::parse_q;
use ratcubic_core::{classify, AutLabel, Error, MobiusMap, RationalMap3, Q};
use ratcubic_ml::{run_experiment, ExperimentConfig, FeatureMode, MlError};
use serde::Serialize;

const OUT_DIR_ENV: &str = "RATCUBIC_OUT_DIR";

#[derive(Parser)]
#[command(name = "ratcubic", version, about = "Invariants and automorphism groups of rational cubic maps")]
struct Cli {
    /// Emit JSON (with a "schema" field) instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Order {
    /// c0..c3 multiply x^3, x^2y, xy^2, y^3 in the numerator; c4..c7 likewise in the denominator.
    Desc,
    /// c0..c3 multiply y^3, xy^2, x^2y, x^3 (block-reversed).
    Asc,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OnOff {
    On,
    Off,
}

#[derive(clap::Args)]
struct MapArgs {
    /// Eight comma-separated coefficients c0,...,c7 (integers or p/q).
    #[arg(long, allow_hyphen_values = true)]
    coeffs: String,
    /// Coefficient order of --coeffs.
    #[arg(long, value_enum, default_value = "desc")]
    order: Order,
}

#[derive(Subcommand)]
enum Command {
    /// Print the full database record of one map as JSON.
    Invariants(MapArgs),
    /// Print the automorphism label of one map.
    Classify(MapArgs),
    /// Conjugate a map by z -> (a z + b)/(c z + e).
    Conjugate {
        #[command(flatten)]
        map: MapArgs,
        /// Four comma-separated entries a,b,c,e.
        #[arg(long, allow_hyphen_values = true)]
        sigma: String,
    },
    /// Enumerate all maps up to a naive height, write JSONL and print label counts.
    Generate {
        #[arg(long)]
        height: u32,
        /// Keep one of each pair +-(c0..c7).
        #[arg(long, default_value_t = true, action = clap::ArgAction::Set)]
        dedupe_antipodal: bool,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        /// Output JSONL path; defaults to $RATCUBIC_OUT_DIR/p3_h<H>.jsonl.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write a CSV export.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Print label counts of an existing JSONL or CSV database.
    Stats {
        #[arg(long)]
        input: PathBuf,
    },
    /// Train and evaluate the random forest.
    Ml {
        /// JSONL or CSV database.
        #[arg(long, conflicts_with = "height", required_unless_present = "height")]
        input: Option<PathBuf>,
        /// Build the database in memory instead of reading one.
        #[arg(long)]
        height: Option<u32>,
        #[arg(long, default_value = "invariants")]
        features: FeatureMode,
        #[arg(long, default_value_t = 100)]
        trees: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 0.10)]
        test_fraction: f64,
        #[arg(long, value_enum, default_value = "on")]
        weighted: OnOff,
        /// Also write the JSON report here.
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

enum Failure {
    Invalid(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Invalid(e.to_string())
    }
}

impl From<DatasetError> for Failure {
    fn from(e: DatasetError) -> Self {
        match e {
            DatasetError::Io { .. } => Failure::Internal(e.to_string()),
            _ => Failure::Invalid(e.to_string()),
        }
    }
}

impl From<MlError> for Failure {
    fn from(e: MlError) -> Self {
        Failure::Invalid(e.to_string())
    }
}

fn internal(e: impl std::fmt::Display) -> Failure {
    Failure::Internal(e.to_string())
}

fn parse_list(s: &str, n: usize, what: &str) -> Result<Vec<Q>, Failure> {
    let v: Vec<Q> = s.split(',').map(parse_q).collect::<Result<_, _>>()?;
    if v.len() != n {
        return Err(Failure::Invalid(format!("{what}: expected {n} values, got {}", v.len())));
    }
    Ok(v)
}

fn read_map(args: &MapArgs) -> Result<RationalMap3, Failure> {
    let c = parse_list(&args.coeffs, 8, "--coeffs")?;
    let c: [Q; 8] = c.try_into().expect("length checked");
    Ok(match args.order {
        Order::Desc => RationalMap3::new(c)?,
        Order::Asc => RationalMap3::from_ascending(c)?,
    })
}

fn integer_coeffs(phi: &RationalMap3) -> Result<[i64; 8], Failure> {
    let mut out = [0i64; 8];
    for (o, c) in out.iter_mut().zip(phi.coeffs()) {
        let n = c.is_integer().then(|| i64::try_from(c.numer())).and_then(Result::ok);
        *o = n.ok_or_else(|| Failure::Invalid(format!("record needs integer coefficients, got {c}")))?;
    }
    Ok(out)
}

fn default_out(height: u32) -> PathBuf {
    let dir = std::env::var_os(OUT_DIR_ENV).map(PathBuf::from).unwrap_or_else(|| PathBuf::from("."));
    dir.join(format!("p3_h{height}.jsonl"))
}

fn load(path: &Path) -> Result<Vec<DatasetRecord>, Failure> {
    let csv = path.extension().is_some_and(|e| e.eq_ignore_ascii_case("csv"));
    let r = if csv { read_csv(path) } else { read_jsonl(path) };
    // An unreadable input is the caller's mistake, not ours.
    r.map_err(|e| Failure::Invalid(e.to_string()))
}

fn print_json(v: &impl Serialize) -> Result<(), Failure> {
    println!("{}", serde_json::to_string(v).map_err(internal)?);
    Ok(())
}

#[derive(Serialize)]
struct RecordOut<'a> {
    schema: u32,
    #[serde(flatten)]
    record: &'a DatasetRecord,
}

#[derive(Serialize)]
struct StatsOut<'a> {
    schema: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    out: Option<&'a Path>,
    labels: Vec<&'static str>,
    by_height: &'a std::collections::BTreeMap<u32, [u64; 8]>,
    total: u64,
}

fn emit_stats(stats: &Stats, out: Option<&Path>, json: bool) -> Result<(), Failure> {
    if json {
        print_json(&StatsOut {
            schema: 1,
            out,
            labels: AutLabel::ALL.iter().map(|l| l.as_str()).collect(),
            by_height: &stats.by_height,
            total: stats.total(),
        })
    } else {
        if let Some(p) = out {
            println!("wrote {}", p.display());
        }
        print!("{}", stats.render_table());
        Ok(())
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let json = cli.json;
    match cli.command {
        Command::Invariants(args) => {
            let phi = read_map(&args)?;
            let record = build_record(integer_coeffs(&phi)?)?;
            print_json(&RecordOut { schema: 1, record: &record })
        }
        Command::Classify(args) => {
            let label = classify(&read_map(&args)?)?;
            if json {
                #[derive(Serialize)]
                struct Out {
                    schema: u32,
                    aut: AutLabel,
                    locus: &'static str,
                    code: u8,
                }
                print_json(&Out { schema: 1, aut: label, locus: label.locus(), code: label.code() })
            } else {
                println!("{label}");
                Ok(())
            }
        }
        Command::Conjugate { map, sigma } => {
            let phi = read_map(&map)?;
            let s = parse_list(&sigma, 4, "--sigma")?;
            let [a, b, c, e]: [Q; 4] = s.try_into().expect("length checked");
            let sigma = MobiusMap::new(a, b, c, e)?;
            let psi = conjugate_map(&phi, &sigma)?;
            let out: Vec<String> = match map.order {
                Order::Desc => psi.coeffs().iter().map(Q::to_string).collect(),
                Order::Asc => psi.to_ascending().iter().map(Q::to_string).collect(),
            };
            if json {
                #[derive(Serialize)]
                struct Out {
                    schema: u32,
                    order: &'static str,
                    coeffs: Vec<String>,
                }
                let order = if map.order == Order::Desc { "desc" } else { "asc" };
                print_json(&Out { schema: 1, order, coeffs: out })
            } else {
                println!("{}", out.join(","));
                Ok(())
            }
        }
        Command::Generate { height, dedupe_antipodal, workers, out, csv } => {
            if height == 0 || workers == 0 {
                return Err(Failure::Invalid("--height and --workers must be at least 1".into()));
            }
            let out = out.unwrap_or_else(|| default_out(height));
            if let Some(dir) = out.parent().filter(|d| !d.as_os_str().is_empty()) {
                std::fs::create_dir_all(dir).map_err(|e| internal(format!("{}: {e}", dir.display())))?;
            }
            let mut cfg = EnumerationConfig::new(height, &out);
            cfg.dedupe_antipodal = dedupe_antipodal;
            cfg.worker_count = workers;
            let stats = generate(&cfg)?;
            if let Some(csv) = csv {
                write_csv(&read_jsonl(&out)?, &csv)?;
            }
            emit_stats(&stats, Some(&out), json)
        }
        Command::Stats { input } => emit_stats(&Stats::from_records(&load(&input)?), None, json),
        Command::Ml { input, height, features, trees, seed, test_fraction, weighted, report } => {
            let records = match (input, height) {
                (Some(p), _) => load(&p)?,
                (None, Some(h)) => records_for(&EnumerationConfig::new(h, "")),
                (None, None) => unreachable!("clap requires one of them"),
            };
            let cfg = ExperimentConfig { features, trees, seed, test_fraction, weighted: weighted == OnOff::On };
            let r = run_experiment(&records, &cfg)?;
            if let Some(p) = report {
                let body = serde_json::to_string_pretty(&r).map_err(internal)?;
                std::fs::write(&p, body).map_err(|e| internal(format!("{}: {e}", p.display())))?;
            }
            if json {
                print_json(&r)
            } else {
                print!("{}", r.render());
                Ok(())
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Invalid(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
    }
}
