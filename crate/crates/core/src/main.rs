use clap::{Parser, Subcommand};
use oddvt::census::{run_census, CensusConfig, Family, GraphSpec};
use oddvt::graph::{parse_graph6_lines, to_graph6};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "oddvt", version, about = "Hamilton cycle audits for odd-order vertex-transitive graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate graph families, run every stage and write reports.
    Census {
        /// Comma-separated subset of circulant, cayley, kneser, complement;
        /// empty for none.
        #[arg(long, default_value = "circulant,cayley,kneser,complement")]
        families: String,
        #[arg(long, default_value_t = 21)]
        max_n: usize,
        #[arg(long, default_value_t = 2000)]
        lemma_budget_ms: u64,
        #[arg(long, default_value_t = 5000)]
        procedure_budget_ms: u64,
        #[arg(long, default_value_t = 10_000)]
        oracle_budget_ms: u64,
        #[arg(long, default_value = "census-out")]
        out_dir: PathBuf,
        /// Worker threads (0 = all cores).
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Extra graph spec, e.g. `circulant:15:3,5`; repeatable.
        #[arg(long = "spec")]
        specs: Vec<GraphSpec>,
    },
    /// Run every stage on the graphs of a graph6 file and print the records.
    Check {
        file: PathBuf,
        /// Also write the report files here.
        #[arg(long)]
        out_dir: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
    /// Print a generated graph in graph6, e.g. `gen circulant 15 3,5`.
    Gen {
        family: String,
        params: Vec<String>,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}

fn run(cli: Cli) -> Result<(), Box<dyn std::error::Error>> {
    match cli.command {
        Command::Census {
            families,
            max_n,
            lemma_budget_ms,
            procedure_budget_ms,
            oracle_budget_ms,
            out_dir,
            jobs,
            specs,
        } => {
            let families = families
                .split(',')
                .filter(|f| !f.trim().is_empty())
                .map(|f| f.trim().parse())
                .collect::<Result<Vec<Family>, _>>()?;
            let cfg = CensusConfig {
                families,
                max_n,
                extra_specs: specs,
                lemma_budget_ms: Some(lemma_budget_ms),
                procedure_budget_ms: Some(procedure_budget_ms),
                oracle_budget_ms: Some(oracle_budget_ms),
                jobs,
                ..CensusConfig::default()
            };
            let report = run_census(&cfg)?;
            report.write_to(&out_dir)?;
            eprintln!(
                "{} records, {} filtered, written to {}",
                report.records.len(),
                report.filtered.len(),
                out_dir.display()
            );
        }
        Command::Check { file, out_dir, jobs } => {
            let text = std::fs::read_to_string(&file)
                .map_err(|e| format!("{}: {e}", file.display()))?;
            parse_graph6_lines(&text).map_err(|(line, e)| format!("{}:{line}: {e}", file.display()))?;
            let specs = text
                .lines()
                .enumerate()
                .filter(|(_, l)| !l.trim().is_empty())
                .map(|(i, _)| GraphSpec::File {
                    path: file.clone(),
                    line: i + 1,
                })
                .collect();
            let cfg = CensusConfig {
                extra_specs: specs,
                jobs,
                ..CensusConfig::empty()
            };
            let report = run_census(&cfg)?;
            print!("{}", report.records_jsonl()?);
            eprint!("{}", report.filtered_log());
            if let Some(dir) = out_dir {
                report.write_to(&dir)?;
            }
        }
        Command::Gen { family, params } => {
            let spec: GraphSpec = std::iter::once(family)
                .chain(params)
                .collect::<Vec<_>>()
                .join(":")
                .parse()?;
            println!("{}", to_graph6(&spec.build()?));
        }
    }
    Ok(())
}
