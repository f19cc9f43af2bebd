use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use lrh::hilbert::{hilbert_series, stable_series, FamilyTag, StableFamily, SymPairCase};
use lrh::verify::{run_suite, Suite};
use lrh::{kronecker_coefficient, lr_coefficient, named_series, NamedSeries, OutputRecord, Partition};

const USAGE: u8 = 2;
const VERIFY_FAILED: u8 = 1;

/// Hilbert series of invariants for the classical symmetric pairs.
#[derive(Parser)]
#[command(name = "lrh", version)]
struct Cli {
    /// Directory holding an on-disk memo of LR and Kronecker values.
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Hilbert series h_0..h_D of one case.
    Series {
        #[arg(long, value_parser = parse_family)]
        family: FamilyTag,
        #[arg(long)]
        p: Option<usize>,
        #[arg(long)]
        q: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        max_degree: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Stable limit of one of the three classes.
    Stable {
        #[arg(long = "class", value_parser = parse_class)]
        class: StableFamily,
        #[arg(long)]
        max_degree: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Expansion of a closed-form product: I, In, F, H, glq or stanley.
    Closed {
        #[arg(long)]
        name: String,
        #[arg(long)]
        q: Option<u32>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        max_degree: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Run a verification suite; exits 1 if an asserted check fails.
    Verify {
        #[arg(long, value_parser = parse_suite, default_value = "all")]
        suite: Suite,
        #[arg(long)]
        max_degree: Option<usize>,
    },
    /// A single LR or Kronecker coefficient. Partitions are comma lists;
    /// "none" is the empty partition.
    Lr {
        #[arg(long, value_enum, default_value_t = Kind::Lr)]
        kind: Kind,
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        mu: Partition,
        #[arg(long)]
        nu: Partition,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Plain,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Lr,
    Kron,
}

fn parse_family(s: &str) -> Result<FamilyTag, String> {
    s.parse().map_err(|e: lrh::Error| e.to_string())
}

fn parse_class(s: &str) -> Result<StableFamily, String> {
    s.parse().map_err(|e: lrh::Error| e.to_string())
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: lrh::Error| e.to_string())
}

fn emit(record: &OutputRecord, format: Format) {
    match format {
        Format::Json => println!("{}", record.to_json()),
        Format::Csv => print!("{}", record.to_csv()),
        Format::Plain => println!("{}", record.to_plain()),
    }
}

fn usage_error(message: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(USAGE)
}

fn configure_threads() -> Result<(), String> {
    let Ok(raw) = std::env::var("LRH_THREADS") else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| format!("LRH_THREADS must be a positive integer, got {raw:?}"))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| e.to_string())
}

fn triple_json(l: &Partition, m: &Partition, n: &Partition, value: u64) -> Value {
    json!({ "lambda": l, "mu": m, "nu": n, "value": value })
}

fn parse_triple(v: &Value) -> Option<(Partition, Partition, Partition, u64)> {
    let p = |key: &str| serde_json::from_value::<Partition>(v.get(key)?.clone()).ok();
    Some((p("lambda")?, p("mu")?, p("nu")?, v.get("value")?.as_u64()?))
}

fn read_entries(path: &Path) -> Result<Vec<(Partition, Partition, Partition, u64)>, String> {
    if !path.exists() {
        return Ok(Vec::new());
    }
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let values: Vec<Value> =
        serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    values
        .iter()
        .map(|v| parse_triple(v).ok_or_else(|| format!("{}: malformed entry {v}", path.display())))
        .collect()
}

fn load_cache(dir: &Path) -> Result<(), String> {
    lrh::lr::preload_cache(read_entries(&dir.join("lr.json"))?);
    lrh::symgroup::preload_kronecker_cache(
        read_entries(&dir.join("kronecker.json"))?
            .into_iter()
            .map(|(l, m, n, v)| ((l, m, n), v)),
    );
    Ok(())
}

fn save_cache(dir: &Path) -> Result<(), String> {
    fs::create_dir_all(dir).map_err(|e| format!("{}: {e}", dir.display()))?;
    let lr: Vec<Value> = lrh::lr::cache_entries()
        .iter()
        .map(|(l, m, n, v)| triple_json(l, m, n, *v))
        .collect();
    let kron: Vec<Value> = lrh::symgroup::kronecker_cache_entries()
        .iter()
        .map(|((l, m, n), v)| triple_json(l, m, n, *v))
        .collect();
    for (name, entries) in [("lr.json", lr), ("kronecker.json", kron)] {
        let path = dir.join(name);
        let text = serde_json::to_string(&entries).expect("plain data");
        fs::write(&path, text).map_err(|e| format!("{}: {e}", path.display()))?;
    }
    Ok(())
}

fn closed_equation(name: NamedSeries) -> String {
    match name {
        NamedSeries::I => "prod_{k>=1} 1/(1-t^k)".into(),
        NamedSeries::In { n } => format!("prod_{{k=1}}^{{{n}}} 1/(1-t^k)"),
        NamedSeries::F => "prod_{k>=1} 1/(1-2t^k)".into(),
        NamedSeries::H => "prod_{k>=1} (1-t^k)/(1-2t^k)".into(),
        NamedSeries::GLq { q } => format!("prod_{{k>=1}} (1-t^k)/(1-{q}t^k)"),
        NamedSeries::Stanley => "prod_i (1-t^i)^(-1/2) prod_j (1-t^(2j))^(-2^(j-2))".into(),
    }
}

fn run(cli: Cli) -> ExitCode {
    match cli.command {
        Command::Series {
            family,
            p,
            q,
            n,
            m,
            max_degree,
            format,
        } => {
            let case = match SymPairCase::from_tag(family, p, q, n, m) {
                Ok(c) => c,
                Err(e) => return usage_error(e),
            };
            let series = hilbert_series(&case, max_degree);
            let params = case.params().into_iter().map(|(k, v)| (k, v as u64));
            emit(&OutputRecord::new(family.as_str(), params, &series, family.equation()), format);
        }
        Command::Stable {
            class,
            max_degree,
            format,
        } => {
            let series = stable_series(class, max_degree);
            let equation = class.representative().unbounded_equation();
            let params: BTreeMap<String, u64> = BTreeMap::new();
            emit(&OutputRecord::new(class.as_str(), params, &series, equation), format);
        }
        Command::Closed {
            name,
            q,
            n,
            max_degree,
            format,
        } => {
            let named = match NamedSeries::parse(&name, q, n) {
                Ok(named) => named,
                Err(e) => return usage_error(e),
            };
            let unused = match named {
                NamedSeries::In { .. } => q.map(|_| "q"),
                NamedSeries::GLq { .. } => n.map(|_| "n"),
                _ => q.map(|_| "q").or(n.map(|_| "n")),
            };
            if let Some(flag) = unused {
                return usage_error(format!("{name} does not take --{flag}"));
            }
            let series = match named_series(named, max_degree) {
                Ok(s) => s,
                Err(e) => return usage_error(e),
            };
            let mut params = BTreeMap::new();
            match named {
                NamedSeries::In { n } => {
                    params.insert("n".to_string(), n as u64);
                }
                NamedSeries::GLq { q } => {
                    params.insert("q".to_string(), q as u64);
                }
                _ => {}
            }
            emit(&OutputRecord::new(named.name(), params, &series, closed_equation(named)), format);
        }
        Command::Verify { suite, max_degree } => {
            let outcome = run_suite(suite, max_degree);
            println!("{outcome}");
            if !outcome.passed() {
                return ExitCode::from(VERIFY_FAILED);
            }
        }
        Command::Lr {
            kind,
            lambda,
            mu,
            nu,
        } => match kind {
            Kind::Lr => println!("{}", lr_coefficient(&lambda, &mu, &nu)),
            Kind::Kron => match kronecker_coefficient(&lambda, &mu, &nu) {
                Ok(g) => println!("{g}"),
                Err(e) => return usage_error(e),
            },
        },
    }
    ExitCode::SUCCESS
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = configure_threads() {
        return usage_error(e);
    }
    let cache_dir = cli.cache_dir.clone();
    if let Some(dir) = &cache_dir {
        if let Err(e) = load_cache(dir) {
            return usage_error(e);
        }
    }
    let code = run(cli);
    if let Some(dir) = &cache_dir {
        if let Err(e) = save_cache(dir) {
            eprintln!("warning: could not write cache: {e}");
        }
    }
    code
}
