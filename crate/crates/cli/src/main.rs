use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use vpf::exact::IntMat;
use vpf::so5::{brute_force_multiplicity, induced_decomposition, point, support_box, ChamberTable, RootVector, Weight, VARIABLES};
use vpf::{database, Error};

#[derive(Parser)]
#[command(name = "vpf", version, about = "Weight multiplicities of so(5) from vector partition functions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the chamber database.
    Build {
        #[arg(long)]
        out: PathBuf,
        /// Use the matrix in this file (one row per line) instead of the so(5) one.
        #[arg(long)]
        matrix: Option<PathBuf>,
    },
    /// Print K^λ_β and the chamber it was read from.
    Mult {
        #[arg(long)]
        db: PathBuf,
        #[arg(long, value_parser = parse_pair)]
        lambda: (i64, i64),
        #[arg(long, value_parser = parse_pair)]
        beta: (i64, i64),
        /// Also count lattice points directly and compare.
        #[arg(long)]
        verify: bool,
    },
    /// Print every β with K^λ_β > 0.
    Character {
        #[arg(long)]
        db: PathBuf,
        #[arg(long, value_parser = parse_pair)]
        lambda: (i64, i64),
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Print chamber inequalities, one quasi-polynomial, or the slices at a fixed λ.
    Chambers {
        #[arg(long)]
        db: PathBuf,
        #[arg(long, value_parser = parse_pair, conflicts_with = "poly")]
        lambda: Option<(i64, i64)>,
        #[arg(long)]
        poly: Option<usize>,
    },
    /// Check the database against direct counting up to a bound on λ.
    Selftest {
        #[arg(long)]
        db: PathBuf,
        #[arg(long, default_value_t = 8)]
        max_lambda: i64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Table,
    Csv,
}

enum Failure {
    User(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_)
            | Error::Io(_)
            | Error::CorruptDatabase(_)
            | Error::UnknownChamberId(_)
            | Error::RankDeficient { .. }
            | Error::DimensionMismatch { .. }
            | Error::SingularMatrix
            | Error::ZeroDenominatorFactor { .. } => Failure::User(e.to_string()),
            _ => Failure::Internal(e.to_string()),
        }
    }
}

type Outcome = Result<String, Failure>;

fn parse_pair(s: &str) -> Result<(i64, i64), String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("expected two comma-separated integers, got {s:?}"))?;
    let num = |t: &str| t.trim().parse::<i64>().map_err(|_| format!("not an integer: {t:?}"));
    Ok((num(a)?, num(b)?))
}

fn parse_matrix(text: &str) -> Result<IntMat, Failure> {
    let rows: Vec<Vec<i64>> = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
        .map(|l| {
            l.split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<i64>().map_err(|_| Failure::User(format!("bad matrix entry {t:?}"))))
                .collect()
        })
        .collect::<Result<_, _>>()?;
    if rows.is_empty() || rows.iter().any(|r| r.len() != rows[0].len() || r.is_empty()) {
        return Err(Failure::User("matrix rows must be non-empty and of equal length".into()));
    }
    Ok(IntMat::from_rows(&rows))
}

fn load_so5(db: &PathBuf) -> Result<ChamberTable, Failure> {
    let table = database::load(db)?;
    if !table.is_so5() {
        return Err(Failure::User(format!("{} was not built for so(5)", db.display())));
    }
    Ok(table)
}

fn variable_names(table: &ChamberTable) -> Vec<String> {
    if table.is_so5() {
        VARIABLES.iter().map(|s| s.to_string()).collect()
    } else {
        (1..=table.b.cols()).map(|i| format!("h{i}")).collect()
    }
}

fn inequality(normal: &[BigInt], names: &[String]) -> String {
    let mut out = String::new();
    for (c, name) in normal.iter().zip(names) {
        if c == &BigInt::from(0) {
            continue;
        }
        let (neg, abs) = (c < &BigInt::from(0), c.magnitude().to_string());
        match (out.is_empty(), neg) {
            (true, true) => out.push('-'),
            (true, false) => {}
            (false, true) => out.push_str(" - "),
            (false, false) => out.push_str(" + "),
        }
        if abs != "1" {
            let _ = write!(out, "{abs}*");
        }
        out.push_str(name);
    }
    out.push_str(" >= 0");
    out
}

fn build(out: PathBuf, matrix: Option<PathBuf>) -> Outcome {
    let table = match matrix {
        None => ChamberTable::build()?,
        Some(path) => {
            let text = std::fs::read_to_string(&path).map_err(|e| Failure::User(format!("{}: {e}", path.display())))?;
            let a = parse_matrix(&text)?;
            ChamberTable::build_with(&a, &IntMat::identity(a.rows()))?
        }
    };
    database::save(&table, &out)?;
    let s = &table.stats;
    Ok(format!(
        "basic subsets: {}\nNBC subsets: {}\ntorus points: {}\nmaximal cones: {}\nintersections: {}\nglued chambers: {}\nwrote {}",
        s.basic_subsets,
        s.nbc_subsets,
        s.torus_points,
        s.maximal_cones,
        s.intersections,
        s.glued_chambers,
        out.display()
    ))
}

fn mult(db: PathBuf, lambda: (i64, i64), beta: (i64, i64), verify: bool) -> Outcome {
    let table = load_so5(&db)?;
    let (l, b) = (Weight::new(lambda.0, lambda.1), RootVector::new(beta.0, beta.1));
    let k = table.multiplicity(l, b)?;
    let chamber = match table.lookup(l, b) {
        Some(c) if l.is_dominant() => c.id.to_string(),
        _ => "none".to_string(),
    };
    let mut line = format!("{k} chamber={chamber}");
    if verify {
        let brute = brute_force_multiplicity(l, b);
        if brute != k {
            return Err(Failure::Internal(format!("table gives {k} but direct count gives {brute} at lambda={l} beta={b}")));
        }
        let _ = write!(line, " brute_force={brute}");
    }
    Ok(line)
}

fn character(db: PathBuf, lambda: (i64, i64), format: Format) -> Outcome {
    let table = load_so5(&db)?;
    let chars = table.character(Weight::new(lambda.0, lambda.1))?;
    let total: u64 = chars.values().sum();
    let mut out = String::new();
    match format {
        Format::Table => {
            for (b, k) in &chars {
                let _ = writeln!(out, "{} {} {k}", b.b1, b.b2);
            }
            let _ = write!(out, "total = {total}");
        }
        Format::Csv => {
            out.push_str("b1,b2,multiplicity\n");
            for (b, k) in &chars {
                let _ = writeln!(out, "{},{},{k}", b.b1, b.b2);
            }
            let _ = write!(out, "total,,{total}");
        }
    }
    Ok(out)
}

fn fmt_rat(r: &vpf::exact::Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn chambers(db: PathBuf, lambda: Option<(i64, i64)>, poly: Option<usize>) -> Outcome {
    let table = database::load(&db)?;
    let names = variable_names(&table);
    let name_refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let mut out = String::new();
    if let Some(id) = poly {
        return Ok(table.chamber(id)?.quasi.display_with(&name_refs));
    }
    if let Some((l1, l2)) = lambda {
        if !table.is_so5() {
            return Err(Failure::User("--lambda needs a so(5) database".into()));
        }
        for (id, polygon) in induced_decomposition(Weight::new(l1, l2), &table) {
            let vertices: Vec<String> =
                polygon.vertices.iter().map(|(x, y)| format!("({},{})", fmt_rat(x), fmt_rat(y))).collect();
            let _ = writeln!(out, "chamber {id}: {}", vertices.join(" "));
        }
        out.pop();
        return Ok(out);
    }
    for c in &table.chambers {
        let ineqs: Vec<String> = c.cone.normals().iter().map(|n| inequality(n, &names)).collect();
        let _ = writeln!(out, "chamber {}: {}", c.id, ineqs.join(", "));
    }
    out.pop();
    Ok(out)
}

fn selftest(db: PathBuf, max_lambda: i64) -> Outcome {
    if max_lambda < 0 {
        return Err(Failure::User("--max-lambda must be nonnegative".into()));
    }
    let table = load_so5(&db)?;
    let (mut queries, mut weights) = (0u64, 0u64);
    for l1 in 0..=max_lambda {
        for l2 in 0..=max_lambda {
            let l = Weight::new(l1, l2);
            let mut total: u128 = 0;
            for b in support_box(l) {
                let k = table.multiplicity(l, b)?;
                let brute = brute_force_multiplicity(l, b);
                if k != brute {
                    return Err(Failure::Internal(format!("oracle mismatch at lambda={l} beta={b}: table {k}, direct {brute}")));
                }
                let x = point(l, b);
                let values: Vec<_> =
                    table.chambers.iter().filter(|c| c.cone.contains_int_point(&x)).map(|c| c.quasi.evaluate(&x)).collect();
                if values.windows(2).any(|w| w[0] != w[1]) {
                    return Err(Failure::Internal(format!("chambers disagree at lambda={l} beta={b}")));
                }
                total += u128::from(k);
                queries += 1;
            }
            if total != l.dimension() {
                return Err(Failure::Internal(format!("character of {l} sums to {total}, dimension is {}", l.dimension())));
            }
            weights += 1;
        }
    }
    Ok(format!(
        "oracle equivalence: pass ({queries} queries)\nchamber consistency: pass\ndimension checksum: pass ({weights} weights)\nselftest passed"
    ))
}

fn configure_threads() -> Result<(), Failure> {
    let Ok(v) = std::env::var("VPF_THREADS") else { return Ok(()) };
    let n: usize = v.trim().parse().map_err(|_| Failure::User(format!("VPF_THREADS must be a positive integer, got {v:?}")))?;
    if n == 0 {
        return Err(Failure::User("VPF_THREADS must be positive".into()));
    }
    rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(|e| Failure::Internal(e.to_string()))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let result = configure_threads().and_then(|()| match cli.command {
        Command::Build { out, matrix } => build(out, matrix),
        Command::Mult { db, lambda, beta, verify } => mult(db, lambda, beta, verify),
        Command::Character { db, lambda, format } => character(db, lambda, format),
        Command::Chambers { db, lambda, poly } => chambers(db, lambda, poly),
        Command::Selftest { db, max_lambda } => selftest(db, max_lambda),
    });
    match result {
        Ok(text) => {
            // a closed pipe (`vpf ... | head`) is not an error
            let _ = writeln!(std::io::stdout().lock(), "{text}");
            ExitCode::SUCCESS
        }
        Err(Failure::User(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(2)
        }
    }
}
