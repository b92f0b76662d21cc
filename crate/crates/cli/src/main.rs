use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use soltes::families::{Family, FamilySpec};
use soltes::formats::{parse_graph6, parse_hg, write_hg, HgDocument};
use soltes::metrics::{delta_report, wiener};
use soltes::screen::{screen_file, write_csv, Transform};
use soltes::search::{check_3uniform_diam1, search_by_order, search_size5, SearchReport};
use soltes::Hypergraph;

#[derive(Parser)]
#[command(name = "soltes", version, about = "Wiener index and Šoltés hypergraph toolkit")]
struct Cli {
    /// Worker threads for the parallel parts (default: all cores).
    #[arg(long, global = true, env = "SOLTES_JOBS")]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Wiener index of a hypergraph.
    Wiener { file: PathBuf },
    /// Print W, the per-vertex deletion table and the verdict. Exits 0 when
    /// the hypergraph is Šoltés, 1 when it is not.
    Soltes { file: PathBuf },
    /// Build a named family member.
    Construct {
        family: String,
        params: Vec<usize>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Write the dual hypergraph.
    Dual {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Convert a graph6 string, or the first record of a graph6 file, to .hg.
    G6 {
        input: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Map every graph in a graph6 file through a dual transform and report
    /// the deletion statistics as CSV.
    Screen {
        file: PathBuf,
        #[arg(long, value_parser = parse_transform)]
        transform: Transform,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Exhaustive searches.
    Search {
        #[command(subcommand)]
        kind: SearchKind,
        #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
        format: Format,
        /// Include wall-clock time in the report.
        #[arg(long, global = true)]
        timing: bool,
    },
}

#[derive(Subcommand)]
enum SearchKind {
    /// Every hypergraph of order n (2..=5).
    Order { n: usize },
    /// Every hypergraph with 5 edges.
    Size5,
    /// 3-uniform hypergraphs of diameter 1 up to order n (5..=7).
    #[command(name = "diam1-3unif")]
    Diam13Unif { n: usize },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Jsonl,
}

fn parse_transform(s: &str) -> Result<Transform, String> {
    s.parse()
}

fn read_hg(path: &Path) -> Result<Hypergraph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_hg(&text).with_context(|| format!("{}", path.display()))
}

fn emit(output: Option<&Path>, text: &str) -> Result<()> {
    match output {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Wiener { file } => {
            let h = read_hg(&file)?;
            println!("W = {}", wiener(&h));
        }
        Command::Soltes { file } => {
            let h = read_hg(&file)?;
            let report = delta_report(&h);
            println!("n = {}, m = {}", h.order(), h.size());
            println!("W = {}", report.w);
            println!("vertex\tW(H-v)\tdelta");
            for r in &report.rows {
                let delta = r.delta.map_or("-".to_string(), |d| d.to_string());
                println!("{}\t{}\t{}", r.vertex, r.w_minus, delta);
            }
            println!("verdict: {}", report.verdict);
            return Ok(if report.verdict { ExitCode::SUCCESS } else { ExitCode::from(1) });
        }
        Command::Construct { family, params, seed, output } => {
            let fam: Family = family.parse()?;
            let spec = FamilySpec::new(fam, params.clone(), seed)?;
            let h = spec.build()?;
            let mut note = format!(" {}", fam.name());
            for p in &params {
                note.push_str(&format!(" {p}"));
            }
            if let Some(s) = seed {
                note.push_str(&format!(" --seed {s}"));
            }
            let doc = HgDocument { comments: vec![note], hypergraph: h };
            emit(output.as_deref(), &doc.write())?;
        }
        Command::Dual { file, output } => {
            let h = read_hg(&file)?;
            let dual = h.dual()?;
            if dual.collapsed > 0 {
                eprintln!("note: {} repeated incidence sets merged", dual.collapsed);
            }
            emit(output.as_deref(), &write_hg(&dual.hypergraph))?;
        }
        Command::G6 { input, output } => {
            let path = Path::new(&input);
            let record = if path.is_file() {
                let text = fs::read_to_string(path).with_context(|| format!("reading {input}"))?;
                match text.lines().map(str::trim).find(|l| !l.is_empty() && *l != ">>graph6<<") {
                    Some(line) => line.to_string(),
                    None => bail!("{input}: no graph6 record"),
                }
            } else {
                input.clone()
            };
            let g = parse_graph6(&record)?;
            emit(output.as_deref(), &write_hg(&g))?;
        }
        Command::Screen { file, transform, output } => {
            let rows = screen_file(&file, transform).with_context(|| format!("reading {}", file.display()))?;
            match output {
                Some(p) => {
                    let f = fs::File::create(&p).with_context(|| format!("writing {}", p.display()))?;
                    write_csv(&rows, io::BufWriter::new(f))?;
                }
                None => write_csv(&rows, io::stdout().lock())?,
            }
        }
        Command::Search { kind, format, timing } => {
            let report: SearchReport = match kind {
                SearchKind::Order { n } => search_by_order(n)?,
                SearchKind::Size5 => search_size5(),
                SearchKind::Diam13Unif { n } => check_3uniform_diam1(n)?,
            };
            let text = match format {
                Format::Text => report.render_text(timing),
                Format::Jsonl => report.render_jsonl(timing),
            };
            print!("{text}");
            if !report.all_checks_passed() {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
