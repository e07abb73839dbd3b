use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use qmprimes::demazure::rmatrix_pairing;
use qmprimes::poisson::leaf_of;
use qmprimes::qmatrix::{qminor_of, Dims};
use qmprimes::subsets::{generator_entries, GeneratorEntry};
use qmprimes::suites::{self, SuiteConfig};
use qmprimes::weyl::{hasse_edges, interval_below, to_dot};
use qmprimes::{Error, IndexSet, Perm, RatMatrix};

#[derive(Parser, Debug)]
#[command(name = "qmprimes", version, about = "Torus-invariant primes of quantum matrices, checked exactly")]
struct Cli {
    /// Number of rows.
    #[arg(long, global = true)]
    m: Option<usize>,
    /// Number of columns.
    #[arg(long, global = true)]
    n: Option<usize>,
    /// Seed for the random matrices of the Poisson suite.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Abort Gröbner completions that reach a larger degree.
    #[arg(long, global = true)]
    degree_bound: Option<u32>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Largest m·n accepted.
    #[arg(long, global = true, default_value_t = 9)]
    max_cells: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Suite {
    Poset,
    Demazure,
    Rmatrix,
    Poisson,
    All,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the interval below c^m with lengths and Hasse edges.
    Enumerate,
    /// Table of admissible (k, I), their minors and quantum minors for y.
    Generators {
        /// Permutation in one-line notation, e.g. 1324.
        #[arg(long)]
        y: String,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
    },
    /// Leaf of a rational matrix given as JSON rows of "p/q" strings.
    Classify {
        #[arg(long)]
        matrix: String,
    },
    /// R-matrix pairing for one admissible (k, I).
    Pairing {
        /// Defaults to the size of the index set.
        #[arg(long)]
        k: Option<usize>,
        /// Comma-separated index set, e.g. 1,3.
        #[arg(long)]
        index: String,
    },
}

/// A failure to report: usage problems exit with 2, failed checks with 1.
enum Failure {
    Usage(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Verification(_) | Error::DegreeBoundExceeded { .. } => Failure::Check(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Outcome = std::result::Result<(String, bool), Failure>;

fn json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("reports serialize")
}

fn dims(cli: &Cli) -> std::result::Result<(usize, usize), Failure> {
    let (Some(m), Some(n)) = (cli.m, cli.n) else {
        return Err(Failure::Usage("--m and --n are required".into()));
    };
    check_dims(cli, m, n)?;
    Ok((m, n))
}

fn check_dims(cli: &Cli, m: usize, n: usize) -> std::result::Result<(), Failure> {
    if m == 0 || n == 0 {
        return Err(Failure::Usage("--m and --n must be positive".into()));
    }
    if m * n > cli.max_cells {
        return Err(Failure::Usage(format!(
            "m·n = {} exceeds the limit {} (raise --max-cells)",
            m * n,
            cli.max_cells
        )));
    }
    if m + n > 9 {
        return Err(Failure::Usage(format!("m + n = {} exceeds 9, the limit of one-line notation", m + n)));
    }
    Ok(())
}

fn no_dot(cli: &Cli) -> std::result::Result<(), Failure> {
    if cli.format == Format::Dot {
        return Err(Failure::Usage("--format dot is only available for enumerate".into()));
    }
    Ok(())
}

#[derive(Serialize)]
struct Element {
    y: Perm,
    length: usize,
}

#[derive(Serialize)]
struct Enumeration {
    m: usize,
    n: usize,
    top: Perm,
    elements: Vec<Element>,
    edges: Vec<(usize, usize)>,
}

fn enumerate(cli: &Cli) -> Outcome {
    let (m, n) = dims(cli)?;
    let top = Perm::coxeter_power(m + n, m);
    let elems = interval_below(&top);
    let edges = hasse_edges(&elems);
    let body = match cli.format {
        Format::Dot => to_dot(&elems, &edges),
        Format::Json => json(&Enumeration {
            m,
            n,
            top: top.clone(),
            elements: elems.iter().map(|y| Element { y: y.clone(), length: y.length() }).collect(),
            edges,
        }),
        Format::Text => {
            let mut out = format!("{} elements below {top}, {} covering relations\n", elems.len(), edges.len());
            for y in &elems {
                out.push_str(&format!("{y} {}\n", y.length()));
            }
            for (a, b) in &edges {
                out.push_str(&format!("{} < {}\n", elems[*a], elems[*b]));
            }
            out
        }
    };
    Ok((body, true))
}

fn parse_perm(s: &str, size: usize) -> std::result::Result<Perm, Failure> {
    let y: Perm = s
        .parse()
        .map_err(|e: Error| Failure::Usage(format!("--y {s:?}: {e}")))?;
    if y.size() != size {
        return Err(Failure::Usage(format!("--y must be a permutation of 1..{size}")));
    }
    Ok(y)
}

#[derive(Serialize)]
struct GeneratorRow {
    #[serde(flatten)]
    entry: GeneratorEntry,
    quantum_minor: String,
}

#[derive(Serialize)]
struct GeneratorTable {
    m: usize,
    n: usize,
    y: Perm,
    rows: Vec<GeneratorRow>,
    distinct: usize,
}

fn generators(cli: &Cli, y: &str) -> Outcome {
    no_dot(cli)?;
    let (m, n) = dims(cli)?;
    let y = parse_perm(y, m + n)?;
    let d = Dims::new(m, n);
    let rows = generator_entries(&y, m, n)?
        .into_iter()
        .map(|entry| {
            let quantum_minor = qminor_of(d, &entry.minor)?.to_string();
            Ok(GeneratorRow { entry, quantum_minor })
        })
        .collect::<qmprimes::Result<Vec<_>>>()?;
    let distinct = rows.iter().filter(|r| !r.entry.duplicate).count();
    let body = if cli.format == Format::Json {
        json(&GeneratorTable { m, n, y, rows, distinct })
    } else {
        let mut out = format!("A_q({y}): {distinct} distinct minors\n");
        for r in &rows {
            let dup = if r.entry.duplicate { " (duplicate)" } else { "" };
            out.push_str(&format!(
                "k={} I={} {} = {}{dup}\n",
                r.entry.k, r.entry.index, r.entry.minor, r.quantum_minor
            ));
        }
        out
    };
    Ok((body, true))
}

fn verify(cli: &Cli, suite: Suite) -> Outcome {
    no_dot(cli)?;
    let (m, n) = dims(cli)?;
    let cfg = SuiteConfig {
        seed: cli.seed,
        degree_bound: cli.degree_bound,
        ..SuiteConfig::new(m, n)
    };
    let (value, ok, summary) = match suite {
        Suite::Poset => {
            let r = suites::poset(&cfg)?;
            let s = format!("poset: {} ideals", r.ideals.len());
            (serde_json::to_value(&r), r.ok, vec![(s, r.ok, r.failures)])
        }
        Suite::Demazure => {
            let r = suites::demazure(&cfg)?;
            let s = format!("demazure: {} (y, k) cases", r.complement_cases);
            (serde_json::to_value(&r), r.ok, vec![(s, r.ok, r.failures)])
        }
        Suite::Rmatrix => {
            let r = suites::rmatrix(&cfg)?;
            let mut s = format!("rmatrix: {} pairings", r.pairings.len());
            for p in &r.pairings {
                s.push_str(&format!("\n  k={} I={} {} scalar {}", p.k, p.index, p.minor, p.scalar));
            }
            (serde_json::to_value(&r), r.ok, vec![(s, r.ok, r.failures)])
        }
        Suite::Poisson => {
            let r = suites::poisson(&cfg)?;
            let s = format!("poisson: {} samples", r.stratification.samples);
            (serde_json::to_value(&r), r.ok, vec![(s, r.ok, r.failures)])
        }
        Suite::All => {
            let r = suites::all(&cfg)?;
            let lines = vec![
                (format!("poset: {} ideals", r.poset.ideals.len()), r.poset.ok, r.poset.failures.clone()),
                (
                    format!("demazure: {} (y, k) cases", r.demazure.complement_cases),
                    r.demazure.ok,
                    r.demazure.failures.clone(),
                ),
                (format!("rmatrix: {} pairings", r.rmatrix.pairings.len()), r.rmatrix.ok, r.rmatrix.failures.clone()),
                (
                    format!("poisson: {} samples", r.poisson.stratification.samples),
                    r.poisson.ok,
                    r.poisson.failures.clone(),
                ),
            ];
            (serde_json::to_value(&r), r.ok, lines)
        }
    };
    let body = if cli.format == Format::Json {
        json(&value.expect("reports serialize"))
    } else {
        let mut out = String::new();
        for (line, ok, failures) in summary {
            out.push_str(&format!("{} {line}\n", if ok { "PASS" } else { "FAIL" }));
            for f in failures {
                out.push_str(&format!("  {f}\n"));
            }
        }
        out
    };
    Ok((body, ok))
}

#[derive(Serialize)]
struct Classification {
    m: usize,
    n: usize,
    matrix: RatMatrix,
    leaf: Perm,
    length: usize,
}

fn classify(cli: &Cli, matrix: &str) -> Outcome {
    no_dot(cli)?;
    let x = RatMatrix::from_json(matrix)?;
    let (m, n) = (x.nrows(), x.ncols());
    if cli.m.is_some_and(|v| v != m) || cli.n.is_some_and(|v| v != n) {
        return Err(Failure::Usage(format!("matrix is {m}x{n}, not the requested shape")));
    }
    check_dims(cli, m, n)?;
    let leaf = leaf_of(&x)?;
    let body = if cli.format == Format::Json {
        json(&Classification {
            m,
            n,
            matrix: x,
            length: leaf.length(),
            leaf,
        })
    } else {
        format!("{x} lies in S({leaf})\n")
    };
    Ok((body, true))
}

fn pairing(cli: &Cli, k: Option<usize>, index: &str) -> Outcome {
    no_dot(cli)?;
    let (m, n) = dims(cli)?;
    let elems = index
        .split(',')
        .map(|t| t.trim().parse::<usize>())
        .collect::<std::result::Result<Vec<_>, _>>()
        .map_err(|_| Failure::Usage(format!("--index {index:?} is not a comma-separated list of integers")))?;
    let set = IndexSet::from_unsorted(elems)?;
    let k = k.unwrap_or(set.len());
    let r = rmatrix_pairing(m, n, k, &set)?;
    let body = if cli.format == Format::Json {
        json(&r)
    } else {
        format!("k={} I={}: {} = ({}) * {}\n", r.k, r.index, r.value, r.scalar, r.minor)
    };
    Ok((body, r.ok))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Enumerate => enumerate(&cli),
        Command::Generators { y } => generators(&cli, y),
        Command::Verify { suite } => verify(&cli, *suite),
        Command::Classify { matrix } => classify(&cli, matrix),
        Command::Pairing { k, index } => pairing(&cli, *k, index),
    };
    match outcome {
        Ok((body, ok)) => {
            let mut out = std::io::stdout().lock();
            let newline = if body.ends_with('\n') { "" } else { "\n" };
            // A closed pipe (e.g. `| head`) is not an error worth reporting.
            let _ = write!(out, "{body}{newline}").and_then(|()| out.flush());
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Check(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
