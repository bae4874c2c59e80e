use std::fmt::{self, Write as _};
use std::fs;
use std::path::Path;
use std::sync::Arc;

use hurwitz_core::cache::{cache_file_name, write_table, TableFile};
use hurwitz_core::hurwitz::{genus_to_transpositions, transpositions_to_genus};
use hurwitz_core::oracle::{oracle_connected, oracle_disconnected, BruteForceBound};
use hurwitz_core::rational::{to_decimal_string, to_exact_string};
use hurwitz_core::spectrum::{
    asymptotic_report, connected_spectrum, disconnected_spectrum, verify_theorem, Parity,
    SpectrumReport, TheoremReport,
};
use hurwitz_core::{Error, ExactRational, HurwitzSolver, Partition, ProfileSet, TableStore};
use serde_json::json;

use crate::args::{
    AsymArgs, ChartableArgs, Command, CommonArgs, Format, NumberArgs, OracleArgs, SpectrumArgs,
};

const DECIMAL_DIGITS: usize = 12;

pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 1;
pub const EXIT_VERIFY_FAILED: u8 = 2;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Runtime(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "invalid input: {m}"),
            CliError::Runtime(m) => write!(f, "error: {m}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidPartition { .. }
            | Error::WeightMismatch { .. }
            | Error::DegreeOutOfRange { .. }
            | Error::NegativeTranspositionCount { .. }
            | Error::BruteForceBound { .. } => CliError::Usage(e.to_string()),
            Error::CacheIo { .. } | Error::CacheFormat { .. } | Error::Internal(_) => {
                CliError::Runtime(e.to_string())
            }
        }
    }
}

type CliResult<T> = Result<T, CliError>;

pub fn run(command: Command) -> CliResult<u8> {
    match command {
        Command::Chartable(args) => chartable(args),
        Command::Number(args) => number(args),
        Command::Spectrum(args) => spectrum(args),
        Command::Verify(args) => verify(args),
        Command::Asym(args) => asym(args),
        Command::Oracle(args) => oracle(args),
    }
    .map(|code| code.unwrap_or(EXIT_OK))
}

fn emit(out: Option<&Path>, mut text: String) -> CliResult<()> {
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| CliError::Runtime(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn profiles(common: &CommonArgs) -> CliResult<ProfileSet> {
    if common.d == 0 {
        return Err(CliError::Usage("--d must be at least 1".into()));
    }
    Ok(ProfileSet::parse(common.d, &common.profiles)?)
}

fn solver(common: &CommonArgs) -> HurwitzSolver {
    HurwitzSolver::new(Arc::new(TableStore::new(common.cache_dir.clone())))
}

fn profile_strings(p: &ProfileSet) -> Vec<String> {
    p.profiles().iter().map(Partition::to_string).collect()
}

fn csv_profiles(p: &ProfileSet) -> String {
    format!("\"{p}\"")
}

fn exact_text(value: &ExactRational, decimal: bool) -> String {
    if decimal && !value.is_integer() {
        format!("{value} ~ {}", to_decimal_string(value, DECIMAL_DIGITS))
    } else {
        to_exact_string(value)
    }
}

fn chartable(args: ChartableArgs) -> CliResult<Option<u8>> {
    let d = args.d;
    if d == 0 {
        return Err(CliError::Usage("--d must be at least 1".into()));
    }
    if d > args.max_degree {
        return Err(CliError::Usage(format!(
            "degree {d} exceeds --max-degree {}",
            args.max_degree
        )));
    }
    let store = TableStore::new(args.cache_dir.clone());
    let table = store.table(d)?;
    let format = args.format.unwrap_or(Format::Json);
    match format {
        Format::Json => match (&args.out, store.cache_dir()) {
            (Some(out), _) => {
                write_table(&table, out)?;
                println!("{}", out.display());
            }
            (None, Some(dir)) => println!("{}", dir.join(cache_file_name(d)).display()),
            (None, None) => emit(None, TableFile::from_table(&table).to_json())?,
        },
        Format::Csv | Format::Text => {
            let labels: Vec<String> = table.partitions().iter().map(|p| format!("({p})")).collect();
            let cells: Vec<Vec<String>> = table
                .values()
                .iter()
                .map(|row| row.iter().map(|v| v.to_string()).collect())
                .collect();
            let mut s = String::new();
            if format == Format::Csv {
                let quoted: Vec<String> = labels.iter().map(|l| format!("\"{l}\"")).collect();
                writeln!(s, "lambda,{}", quoted.join(",")).unwrap();
                for (label, row) in labels.iter().zip(&cells) {
                    writeln!(s, "\"{label}\",{}", row.join(",")).unwrap();
                }
            } else {
                let width = labels
                    .iter()
                    .chain(cells.iter().flatten())
                    .map(String::len)
                    .max()
                    .unwrap_or(1);
                write!(s, "{:>width$}", "").unwrap();
                for l in &labels {
                    write!(s, " {l:>width$}").unwrap();
                }
                s.push('\n');
                for (label, row) in labels.iter().zip(&cells) {
                    write!(s, "{label:>width$}").unwrap();
                    for v in row {
                        write!(s, " {v:>width$}").unwrap();
                    }
                    s.push('\n');
                }
            }
            emit(args.out.as_deref(), s)?;
        }
    }
    Ok(None)
}

struct NumberOutput {
    profiles: ProfileSet,
    connected: bool,
    genus: Option<usize>,
    transpositions: usize,
    value: ExactRational,
}

fn render_number(n: &NumberOutput, format: Format, decimal: bool) -> String {
    let flavor = if n.connected { "connected" } else { "disconnected" };
    match format {
        Format::Json => serde_json::to_string_pretty(&json!({
            "degree": n.profiles.degree(),
            "profiles": profile_strings(&n.profiles),
            "flavor": flavor,
            "genus": n.genus,
            "transpositions": n.transpositions,
            "value": to_exact_string(&n.value),
        }))
        .unwrap(),
        Format::Csv => format!(
            "degree,profiles,flavor,genus,transpositions,value\n{},{},{flavor},{},{},{}",
            n.profiles.degree(),
            csv_profiles(&n.profiles),
            n.genus.map(|g| g.to_string()).unwrap_or_default(),
            n.transpositions,
            n.value
        ),
        Format::Text => exact_text(&n.value, decimal),
    }
}

fn number(args: NumberArgs) -> CliResult<Option<u8>> {
    let common = &args.common;
    let set = profiles(common)?;
    let solver = solver(common);
    let connected = args.flavor.is_connected();
    let (k, genus) = match (args.count.g, args.count.k) {
        (Some(_), _) if !connected => {
            return Err(CliError::Usage("--g only applies to connected numbers".into()))
        }
        (Some(g), _) => (genus_to_transpositions(&set, g)?, Some(g)),
        (None, Some(k)) => (k, if connected { transpositions_to_genus(&set, k) } else { None }),
        (None, None) => return Err(CliError::Usage("one of --g or --k is required".into())),
    };
    let value = if connected {
        solver.connected_with_transpositions(&set, k)?
    } else {
        solver.disconnected(&set, k)?
    };
    let out = NumberOutput {
        profiles: set,
        connected,
        genus,
        transpositions: k,
        value,
    };
    let text = render_number(&out, common.format.unwrap_or(Format::Text), common.decimal);
    emit(common.out.as_deref(), text)?;
    Ok(None)
}

fn spectrum(args: SpectrumArgs) -> CliResult<Option<u8>> {
    let common = &args.common;
    let set = profiles(common)?;
    let solver = solver(common);
    let spectrum = if args.flavor.is_connected() {
        if args.k.is_some() {
            return Err(CliError::Usage("--k selects a parity class for --disconnected only".into()));
        }
        connected_spectrum(&solver, &set)?
    } else {
        let parity = args.k.map(Parity::of).unwrap_or_else(|| Parity::admissible(&set));
        disconnected_spectrum(solver.store(), &set, parity)?
    };
    let report = SpectrumReport::new(&spectrum);
    let symbol = if args.flavor.is_connected() { "b" } else { "b*" };
    let text = match common.format.unwrap_or(Format::Json) {
        Format::Json => report.to_json(),
        Format::Csv => {
            let mut s = String::from("m,coefficient\n");
            for (m, c) in spectrum.nonzero() {
                writeln!(s, "{m},{c}").unwrap();
            }
            s
        }
        Format::Text => {
            let mut s = format!(
                "{} spectrum, d = {}, profiles = [{}], parity {}\n",
                report.flavor,
                report.degree,
                set,
                report.parity
            );
            for (m, c) in spectrum.nonzero() {
                writeln!(s, "{symbol}({m}) = {}", exact_text(c, common.decimal)).unwrap();
            }
            s
        }
    };
    emit(common.out.as_deref(), text)?;
    Ok(None)
}

fn render_verify(report: &TheoremReport, format: Format) -> String {
    match format {
        Format::Json => report.to_json(),
        Format::Csv => {
            let mut s = String::from("flavor,statement,m,expected,computed,pass\n");
            for st in &report.statements {
                for c in &st.checks {
                    writeln!(s, "{},{},{},{},{},{}", st.flavor, st.statement, c.m, c.expected, c.computed, c.pass)
                        .unwrap();
                }
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            for st in &report.statements {
                let status = if st.pass { "PASS" } else { "FAIL" };
                writeln!(s, "{status}  {} statement {}: {}", st.flavor, st.statement, st.claim).unwrap();
                for c in st.checks.iter().filter(|c| !c.pass) {
                    writeln!(s, "      m = {}: expected {}, computed {}", c.m, c.expected, c.computed).unwrap();
                }
            }
            let overall = if report.pass { "all statements hold" } else { "some statements FAIL" };
            writeln!(s, "{overall}").unwrap();
            s
        }
    }
}

fn verify(common: CommonArgs) -> CliResult<Option<u8>> {
    let set = profiles(&common)?;
    let solver = solver(&common);
    let report = verify_theorem(&solver, &set)?;
    emit(common.out.as_deref(), render_verify(&report, common.format.unwrap_or(Format::Json)))?;
    Ok((!report.pass).then_some(EXIT_VERIFY_FAILED))
}

fn asym(args: AsymArgs) -> CliResult<Option<u8>> {
    let common = &args.common;
    let set = profiles(common)?;
    let solver = solver(common);
    let spectrum = connected_spectrum(&solver, &set)?;
    let report = asymptotic_report(&solver, &spectrum, args.g)?;
    let text = match common.format.unwrap_or(Format::Text) {
        Format::Json => serde_json::to_string_pretty(&report).unwrap(),
        Format::Csv => format!(
            "degree,profiles,genus,transpositions,error,bound\n{},{},{},{},{},{}",
            report.degree,
            csv_profiles(&set),
            report.genus,
            report.transpositions,
            report.error,
            report.bound
        ),
        Format::Text => format!(
            "{}\nexact error {}\nbound {}",
            to_decimal_string(&report.error, DECIMAL_DIGITS),
            report.error,
            to_decimal_string(&report.bound, DECIMAL_DIGITS),
        ),
    };
    emit(common.out.as_deref(), text)?;
    Ok(None)
}

fn oracle(args: OracleArgs) -> CliResult<Option<u8>> {
    let common = &args.common;
    let set = profiles(common)?;
    let bound = BruteForceBound::with_max_degree(args.max_bruteforce);
    let connected = args.flavor.is_connected();
    let value = if connected {
        oracle_connected(&set, args.k, &bound)?
    } else {
        oracle_disconnected(&set, args.k, &bound)?
    };
    let out = NumberOutput {
        genus: if connected { transpositions_to_genus(&set, args.k) } else { None },
        profiles: set,
        connected,
        transpositions: args.k,
        value,
    };
    let text = render_number(&out, common.format.unwrap_or(Format::Text), common.decimal);
    emit(common.out.as_deref(), text)?;
    Ok(None)
}
