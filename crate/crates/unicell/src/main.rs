use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use unicell::mapfile::read_map;
use unicell::parallel::tally_parallel;
use unicell::table::{render, Format, OutputRecord};
use unicell::verify::{self, Fault};
use unicell_core::bijection::{intertwined_triples, trisections};
use unicell_core::oracle::SearchSpec;
use unicell_core::orbifold::{all_signatures, epi0, signature_contribution};
use unicell_core::{eps4_rooted, eps4_unrooted, ExactRational};

/// Exact counts of 4-regular one-face maps by genus.
#[derive(Parser)]
#[command(name = "unicell", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Counts from the closed formulas.
    Count {
        #[command(subcommand)]
        what: CountWhat,
    },
    /// Labelled and unlabelled counts for a range of genera.
    Table {
        #[arg(long)]
        min_genus: u64,
        #[arg(long)]
        max_genus: u64,
        #[arg(long, value_enum, default_value = "md")]
        format: Format,
    },
    /// Brute-force counts by exhaustive search (genus 1 to 3).
    Oracle {
        #[arg(value_enum)]
        kind: Rooting,
        #[arg(long)]
        genus: u64,
        /// Worker threads; 0 uses every core.
        #[arg(long, default_value_t = 0)]
        threads: usize,
    },
    /// Orbifold signatures of the quotients of genus-G maps and their share
    /// of the unrooted count.
    Signatures {
        #[arg(long)]
        genus: u64,
    },
    /// Inspect a map file.
    Map {
        #[command(subcommand)]
        what: MapWhat,
    },
    /// Cross-check formulas against the oracle and each other.
    Verify {
        #[arg(long)]
        max_genus: u64,
        #[arg(long, default_value_t = 0)]
        threads: usize,
        #[arg(long, value_enum, hide = true)]
        inject_fault: Option<FaultArg>,
    },
}

#[derive(Subcommand)]
enum CountWhat {
    Rooted {
        #[arg(long)]
        genus: u64,
    },
    Unrooted {
        #[arg(long)]
        genus: u64,
    },
    /// Maps with K vertices of degree 4 and leaves otherwise.
    Maps14 {
        #[arg(long)]
        genus: u64,
        #[arg(long)]
        k: u64,
    },
}

#[derive(Subcommand)]
enum MapWhat {
    Info { path: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum Rooting {
    Rooted,
    Unrooted,
}

#[derive(Clone, Copy, ValueEnum)]
enum FaultArg {
    F2Bound,
}

enum Failure {
    Mismatch,
    Usage(String),
    File(String),
}

fn need_genus(g: u64) -> Result<(), Failure> {
    if g == 0 {
        return Err(Failure::Usage("genus must be ≥ 1".into()));
    }
    Ok(())
}

fn oracle_genus(g: u64) -> Result<(), Failure> {
    need_genus(g)?;
    if g > 3 {
        return Err(Failure::Usage(format!("exhaustive search is limited to genus ≤ 3, got {g}")));
    }
    Ok(())
}

fn show_rational(q: &ExactRational) -> String {
    if q.is_integer() {
        q.to_integer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Count { what } => match what {
            CountWhat::Rooted { genus } => {
                need_genus(genus)?;
                println!("{}", eps4_rooted(genus).expect("genus >= 1"));
            }
            CountWhat::Unrooted { genus } => {
                need_genus(genus)?;
                println!("{}", eps4_unrooted(genus).expect("genus >= 1"));
            }
            CountWhat::Maps14 { genus, k } => println!("{}", unicell_core::eps14(genus, k)),
        },
        Command::Table { min_genus, max_genus, format } => {
            need_genus(min_genus)?;
            if min_genus > max_genus {
                return Err(Failure::Usage(format!("empty genus range {min_genus}..{max_genus}")));
            }
            let rows: Vec<_> = (min_genus..=max_genus).map(OutputRecord::compute).collect();
            print!("{}", render(&rows, format));
        }
        Command::Oracle { kind, genus, threads } => {
            oracle_genus(genus)?;
            let spec = SearchSpec::four_regular(genus).expect("genus >= 1");
            let t = tally_parallel(&spec, threads, true);
            match kind {
                Rooting::Rooted => println!("{}", t.maps),
                Rooting::Unrooted => println!("{}", t.orbits(spec.dart_count())),
            }
        }
        Command::Signatures { genus } => {
            need_genus(genus)?;
            println!("period\torbifold_genus\tindices\tepi0\tcontribution");
            let mut total = ExactRational::default();
            for sig in all_signatures(genus) {
                let share = signature_contribution(&sig);
                let indices: Vec<_> = sig.branch_indices.iter().map(u64::to_string).collect();
                println!(
                    "{}\t{}\t[{}]\t{}\t{}",
                    sig.period,
                    sig.orbifold_genus,
                    indices.join(","),
                    epi0(&sig),
                    show_rational(&share)
                );
                total += share;
            }
            println!("total\t\t\t\t{}", show_rational(&total));
        }
        Command::Map { what: MapWhat::Info { path } } => {
            let m = read_map(&path).map_err(|e| Failure::File(format!("{}: {e}", path.display())))?;
            println!("darts: {}", m.dart_count());
            println!("edges: {}", m.edge_count());
            let cycles: Vec<_> = m
                .vertices()
                .iter()
                .map(|c| format!("({})", c.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")))
                .collect();
            println!("vertices: {} {}", cycles.len(), cycles.join(""));
            println!("degrees: {}", m.degree_profile());
            println!("genus: {}", m.genus());
            println!("4-regular: {}", if m.is_four_regular() { "yes" } else { "no" });
            let tri: Vec<_> = trisections(&m).iter().map(|t| t.0.to_string()).collect();
            println!("trisections: {} [{}]", tri.len(), tri.join(", "));
            let triples: Vec<_> =
                intertwined_triples(&m).iter().map(|t| format!("({},{},{})", t.a1, t.a2, t.a3)).collect();
            println!("intertwined triples: {} [{}]", triples.len(), triples.join(", "));
        }
        Command::Verify { max_genus, threads, inject_fault } => {
            oracle_genus(max_genus)?;
            let opts = verify::Options {
                max_genus,
                threads,
                fault: inject_fault.map(|FaultArg::F2Bound| Fault::F2Bound),
                progress: false,
            };
            let checks = verify::run(&opts, |c| println!("{c}"));
            let passed = checks.iter().filter(|c| c.passed()).count();
            println!("{passed}/{} checks passed", checks.len());
            if passed != checks.len() {
                return Err(Failure::Mismatch);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::File(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
