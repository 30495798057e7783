use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use parabolic_ideals::render::{self, OutputFormat};
use parabolic_ideals::{
    golden, ideals_of, listing_order, oracle, tabulate_parallel_as, Error, IdealRecord,
    ParabolicMask, Poset, RootSystem, SimpleType, Table,
};

const EXIT_MISMATCH: u8 = 1;
const EXIT_BAD_ARGS: u8 = 2;
const EXIT_NO_GOLDEN: u8 = 3;

#[derive(Parser)]
#[command(
    name = "parabolic-ideals",
    version,
    about = "Count ad-nilpotent and abelian ideals of standard parabolic subalgebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print ♯N_I and ♯Ab_I for every I ⊆ Π.
    Tabulate {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value = "markdown")]
        format: OutputFormat,
    },
    /// Compare computed tables with the reference tables.
    Verify {
        /// A type with a reference table, or `all`.
        #[arg(long = "type", value_name = "TYPE")]
        simple_type: String,
        /// Reference table in the CSV format of `tabulate`, instead of the built-in one.
        #[arg(long, value_name = "FILE")]
        golden: Option<PathBuf>,
        #[arg(long, default_value_t = default_threads())]
        threads: usize,
        #[arg(long)]
        oracle: bool,
    },
    /// List the ideals of one parabolic.
    List {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        selection: Selection,
        #[arg(long, default_value = "markdown")]
        format: OutputFormat,
    },
    /// Print the number of ideals of one parabolic.
    Count {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        selection: Selection,
    },
}

#[derive(Args)]
struct Common {
    /// Cartan type, e.g. E8, F4, G2, A3.
    #[arg(long = "type", value_name = "TYPE")]
    simple_type: String,
    #[arg(long, default_value_t = default_threads())]
    threads: usize,
    /// Use the brute-force subset scans (|Δ+| ≤ 24 only).
    #[arg(long)]
    oracle: bool,
}

#[derive(Args)]
struct Selection {
    /// Comma-separated 1-based simple root numbers making up I.
    #[arg(long, value_delimiter = ',', num_args = 0..)]
    parabolic: Vec<usize>,
    #[arg(long)]
    abelian_only: bool,
}

fn default_threads() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl ToString) -> Self {
        Failure {
            code,
            message: message.to_string(),
        }
    }
}

fn bad_args(e: impl ToString) -> Failure {
    Failure::new(EXIT_BAD_ARGS, e)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Tabulate { common, format } => cmd_tabulate(&common, format),
        Command::Verify {
            simple_type,
            golden,
            threads,
            oracle,
        } => cmd_verify(&simple_type, golden, threads, oracle),
        Command::List {
            common,
            selection,
            format,
        } => cmd_list(&common, &selection, format),
        Command::Count { common, selection } => cmd_count(&common, &selection),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            if !f.message.is_empty() {
                eprintln!("error: {}", f.message);
            }
            ExitCode::from(f.code)
        }
    }
}

fn build(name: &str) -> Result<RootSystem, Failure> {
    let t: SimpleType = name.parse().map_err(bad_args)?;
    RootSystem::build(t).map_err(bad_args)
}

fn compute_table(rs: &RootSystem, threads: usize, use_oracle: bool) -> Result<Table, Failure> {
    if use_oracle {
        oracle::brute_force_tabulate(rs).map_err(bad_args)
    } else {
        tabulate_parallel_as(rs, &Poset::new(rs), threads).map_err(bad_args)
    }
}

fn cmd_tabulate(common: &Common, format: OutputFormat) -> Result<(), Failure> {
    let rs = build(&common.simple_type)?;
    if !rs.simple_type().is_exceptional() {
        eprintln!("note: no reference table exists for {}", rs.simple_type());
    }
    let table = compute_table(&rs, common.threads, common.oracle)?;
    print!("{}", render::render_table(&table, format));
    Ok(())
}

fn cmd_verify(
    name: &str,
    golden_file: Option<PathBuf>,
    threads: usize,
    use_oracle: bool,
) -> Result<(), Failure> {
    let types: Vec<SimpleType> = if name.eq_ignore_ascii_case("all") {
        if golden_file.is_some() {
            return Err(bad_args("--golden needs a single --type"));
        }
        SimpleType::EXCEPTIONAL.to_vec()
    } else {
        let t: SimpleType = name
            .parse()
            .map_err(|e: Error| Failure::new(EXIT_NO_GOLDEN, e))?;
        vec![t]
    };

    let (mut tables, mut rows, mut mismatches) = (0, 0, 0);
    for t in types {
        let expected = match &golden_file {
            Some(path) => {
                let text = std::fs::read_to_string(path).map_err(|e| {
                    Failure::new(EXIT_NO_GOLDEN, format!("{}: {e}", path.display()))
                })?;
                render::parse_table_csv(t, &text).map_err(|e| Failure::new(EXIT_NO_GOLDEN, e))?
            }
            None => golden(t).map_err(|e| Failure::new(EXIT_NO_GOLDEN, e))?,
        };
        let rs = RootSystem::build(t).map_err(bad_args)?;
        let computed = compute_table(&rs, threads, use_oracle)?;
        let report = parabolic_ideals::compare(&computed, &expected).map_err(bad_args)?;
        for m in &report.mismatches {
            println!(
                "{t} I={}: expected {},{} got {},{}",
                m.mask, m.expected.0, m.expected.1, m.got.0, m.got.1
            );
        }
        println!(
            "{t}: {} rows, {} mismatches",
            report.rows,
            report.mismatches.len()
        );
        tables += 1;
        rows += report.rows;
        mismatches += report.mismatches.len();
    }
    println!("{tables} tables, {rows} rows, {mismatches} mismatches");
    if mismatches == 0 {
        Ok(())
    } else {
        Err(Failure::new(EXIT_MISMATCH, ""))
    }
}

fn selected_ideals(
    common: &Common,
    selection: &Selection,
) -> Result<(RootSystem, ParabolicMask, Vec<IdealRecord>), Failure> {
    let rs = build(&common.simple_type)?;
    let parabolic =
        ParabolicMask::from_simple_numbers(rs.rank(), &selection.parabolic).map_err(bad_args)?;
    let poset = Poset::new(&rs);
    let ideals = if common.oracle {
        let mut found: Vec<IdealRecord> = oracle::brute_force_ideals(&rs, parabolic)
            .map_err(bad_args)?
            .into_iter()
            .filter(|&(_, abelian)| abelian || !selection.abelian_only)
            .map(|(phi, abelian)| IdealRecord {
                phi,
                min_roots: poset.minimal_elements(phi),
                compat: parabolic_ideals::compatibility_mask(&rs, phi),
                abelian,
                size: phi.len(),
            })
            .collect();
        found.sort_by(listing_order);
        found
    } else {
        ideals_of(&rs, &poset, parabolic, selection.abelian_only)
    };
    Ok((rs, parabolic, ideals))
}

fn cmd_list(common: &Common, selection: &Selection, format: OutputFormat) -> Result<(), Failure> {
    let (rs, parabolic, ideals) = selected_ideals(common, selection)?;
    print!(
        "{}",
        render::render_listing(&rs, parabolic, selection.abelian_only, &ideals, format)
    );
    Ok(())
}

fn cmd_count(common: &Common, selection: &Selection) -> Result<(), Failure> {
    let rs = build(&common.simple_type)?;
    let parabolic =
        ParabolicMask::from_simple_numbers(rs.rank(), &selection.parabolic).map_err(bad_args)?;
    let table = compute_table(&rs, common.threads, common.oracle)?;
    let row = table.row(parabolic);
    let count = if selection.abelian_only {
        row.ab_count
    } else {
        row.n_count
    };
    println!("{count}");
    Ok(())
}
