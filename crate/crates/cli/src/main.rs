use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use diffsat::affine::{kernelize, KernelResult};
use diffsat::hitting::count_exact_pairs;
use diffsat::io::{parse_graph, parse_instance, parse_query, write_instance, write_query, InstanceFile};
use diffsat::oracle::{oracle_differ, DEFAULT_ORACLE_CAP};
use diffsat::reductions::{
    from_cubic_independent_set, from_exact_even_set, from_independent_set_2cnf, from_odd_set, GeneratedInstance,
    SetSystem, SimpleGraph,
};
use diffsat::route::{route, solve, SolveOptions};
use diffsat::twosat::components_22;
use diffsat::{Decision, DifferAnswer, DifferQuery, Error, Instance, Mode};

const EXIT_YES: u8 = 10;
const EXIT_NO: u8 = 20;
const EXIT_ERROR: u8 = 1;

#[derive(Parser)]
#[command(name = "diffsat", version, about = "Decide whether a formula has two models at a given Hamming distance")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Max,
    Exact,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Max => Mode::Max,
            ModeArg::Exact => Mode::Exact,
        }
    }
}

#[derive(clap::Args)]
struct QueryArgs {
    /// At least `d` (max) or exactly `d` (exact) differing variables.
    #[arg(long, value_enum, requires = "d")]
    mode: Option<ModeArg>,
    #[arg(short, requires = "mode")]
    d: Option<usize>,
    /// Read mode and distance from a query sidecar instead.
    #[arg(long, conflicts_with_all = ["mode", "d"])]
    query: Option<PathBuf>,
}

impl QueryArgs {
    fn resolve(&self) -> Result<DifferQuery, String> {
        match (&self.query, self.mode, self.d) {
            (Some(path), _, _) => parse_query(&read(path)?).map_err(|e| format!("{}: {e}", path.display())),
            (None, Some(mode), Some(d)) => Ok(DifferQuery { mode: mode.into(), d }),
            _ => Err("give --mode and -d, or --query".into()),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Source {
    /// Independent set in a cubic graph, to 3-affine exact differ.
    CubicIs,
    /// Exact even set, to affine exact differ.
    EvenSet,
    /// Odd set, to affine differ in the chosen mode.
    OddSet,
    /// Independent set, to monotone 2-CNF differ in the chosen mode.
    #[value(name = "is-2cnf")]
    Is2cnf,
}

#[derive(Clone, Copy, ValueEnum)]
enum Builtin {
    K4,
    K33,
    Prism,
}

#[derive(Subcommand)]
enum Command {
    /// Decide the query with the solver for the instance's fragment.
    Solve {
        #[command(flatten)]
        query: QueryArgs,
        /// Fall back to brute force when no fragment solver applies.
        #[arg(long)]
        allow_oracle: bool,
        #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
        oracle_cap: usize,
        file: PathBuf,
    },
    /// Count ordered model pairs at distance exactly `d` (hitting formulas).
    Count {
        #[arg(short)]
        d: usize,
        file: PathBuf,
    },
    /// Shrink an affine max-differ instance to a kernel.
    Kernelize {
        #[arg(short)]
        d: usize,
        file: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Write a differ instance and `.query` sidecar built from a source problem.
    Generate {
        #[arg(value_enum)]
        source: Source,
        /// Graph in DIMACS edge format.
        #[arg(long, conflicts_with = "builtin")]
        graph: Option<PathBuf>,
        #[arg(long, value_enum)]
        builtin: Option<Builtin>,
        /// Universe size for set problems.
        #[arg(long)]
        universe: Option<usize>,
        /// One set as comma-separated 1-based elements; repeat for more.
        #[arg(long = "set")]
        sets: Vec<String>,
        #[arg(short)]
        k: usize,
        #[arg(long, value_enum, default_value = "exact")]
        mode: ModeArg,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Brute-force answer over all assignments.
    Oracle {
        #[command(flatten)]
        query: QueryArgs,
        #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
        cap: usize,
        file: PathBuf,
    },
    /// Show which solver applies and, for (2,2)-CNF, the component structure.
    Classify { file: PathBuf },
}

fn read(path: &Path) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn load(path: &Path) -> Result<InstanceFile, String> {
    parse_instance(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

fn write(path: &Path, text: &str) -> Result<(), String> {
    fs::write(path, text).map_err(|e| format!("{}: {e}", path.display()))
}

fn literals(a: &diffsat::Assignment) -> String {
    a.to_dimacs().iter().map(|l| format!("{l} ")).collect::<String>() + "0"
}

fn render(answer: &DifferAnswer) -> String {
    let mut out = format!("s {}\n", answer.decision);
    if let Some((a, b)) = &answer.witness {
        let _ = writeln!(out, "v1 {}", literals(a));
        let _ = writeln!(out, "v2 {}", literals(b));
    }
    if let Some(count) = &answer.pair_count {
        let _ = writeln!(out, "c COUNT {count}");
    }
    out
}

fn decision_code(decision: Decision) -> u8 {
    match decision {
        Decision::Yes => EXIT_YES,
        Decision::No | Decision::UnsatNo => EXIT_NO,
    }
}

fn report(answer: &DifferAnswer) -> u8 {
    print!("{}", render(answer));
    decision_code(answer.decision)
}

fn graph_arg(graph: &Option<PathBuf>, builtin: Option<Builtin>) -> Result<SimpleGraph, String> {
    match (graph, builtin) {
        (Some(path), _) => parse_graph(&read(path)?).map_err(|e| format!("{}: {e}", path.display())),
        (None, Some(Builtin::K4)) => Ok(SimpleGraph::complete(4)),
        (None, Some(Builtin::K33)) => Ok(SimpleGraph::complete_bipartite_3_3()),
        (None, Some(Builtin::Prism)) => Ok(SimpleGraph::prism()),
        (None, None) => Err("give --graph or --builtin".into()),
    }
}

fn set_system_arg(universe: Option<usize>, sets: &[String], k: usize) -> Result<SetSystem, String> {
    let universe = universe.ok_or("give --universe")?;
    let mut family = Vec::with_capacity(sets.len());
    for s in sets {
        let mut set = Vec::new();
        for item in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let e: usize = item.parse().map_err(|_| format!("invalid set element `{item}`"))?;
            if e == 0 {
                return Err("set elements are 1-based".into());
            }
            set.push(e - 1);
        }
        family.push(set);
    }
    SetSystem::new(universe, family, k).map_err(|e| e.to_string())
}

fn run(cli: Cli) -> Result<u8, String> {
    match cli.command {
        Command::Solve { query, allow_oracle, oracle_cap, file } => {
            let q = query.resolve()?;
            let instance = load(&file)?;
            let opts = SolveOptions { allow_oracle, oracle_cap, ..SolveOptions::default() };
            let solved = solve(&instance, q, &opts).map_err(|e| e.to_string())?;
            Ok(report(&solved.answer))
        }
        Command::Count { d, file } => {
            let Instance::Cnf(phi) = load(&file)?.instance else {
                return Err("count needs a hitting CNF formula".into());
            };
            let count = count_exact_pairs(&phi, d).map_err(|e| e.to_string())?;
            println!("{count}");
            Ok(0)
        }
        Command::Kernelize { d, file, output } => {
            let Instance::Affine(sys) = load(&file)?.instance else {
                return Err("kernelize needs an XNF system".into());
            };
            match kernelize(&sys, d).map_err(|e| e.to_string())? {
                KernelResult::Decided(answer) => Ok(report(&answer)),
                KernelResult::Reduced(kernel) => {
                    let mut text = String::new();
                    let kept: Vec<String> = kernel.kept.iter().map(|v| (v.0 + 1).to_string()).collect();
                    let _ = writeln!(text, "c kept {}", kept.join(" "));
                    for (v, b) in &kernel.constants {
                        let _ = writeln!(text, "c fixed {} {}", v.0 + 1, *b as u8);
                    }
                    text.push_str(&write_instance(&kernel.system.clone().into()));
                    write(&output, &text)?;
                    write(&output.with_extension("query"), &write_query(&DifferQuery::max(kernel.d)))?;
                    println!(
                        "c kernel {} variables {} equations",
                        kernel.system.num_vars(),
                        kernel.system.equations().len()
                    );
                    Ok(0)
                }
            }
        }
        Command::Generate { source, graph, builtin, universe, sets, k, mode, output } => {
            let generated: GeneratedInstance = match source {
                Source::CubicIs => from_cubic_independent_set(&graph_arg(&graph, builtin)?, k),
                Source::Is2cnf => from_independent_set_2cnf(&graph_arg(&graph, builtin)?, k, mode.into()),
                Source::EvenSet => from_exact_even_set(&set_system_arg(universe, &sets, k)?),
                Source::OddSet => from_odd_set(&set_system_arg(universe, &sets, k)?, matches!(mode, ModeArg::Exact)),
            }
            .map_err(|e| e.to_string())?;
            write(&output, &write_instance(&generated.instance))?;
            write(&output.with_extension("query"), &write_query(&generated.query))?;
            Ok(0)
        }
        Command::Oracle { query, cap, file } => {
            let q = query.resolve()?;
            let instance = load(&file)?;
            let answer = oracle_differ(&instance.instance, q, cap).map_err(|e| e.to_string())?;
            Ok(report(&answer))
        }
        Command::Classify { file } => {
            let instance = load(&file)?;
            let opts = SolveOptions { allow_oracle: true, oracle_cap: usize::MAX, ..SolveOptions::default() };
            let routing = route(&instance, DifferQuery::max(0), &opts);
            match routing {
                Ok(r) => println!("fragment {}\nrationale {}", r.fragment, r.rationale),
                Err(Error::UnsupportedFragment(why)) => println!("fragment none\nrationale {why}"),
                Err(e) => return Err(e.to_string()),
            }
            if let Instance::Cnf(phi) = &instance.instance {
                if diffsat::twosat::check_22cnf(phi) {
                    print_components(phi)?;
                }
            }
            Ok(0)
        }
    }
}

fn print_components(phi: &diffsat::CnfFormula) -> Result<(), String> {
    match components_22(phi).map_err(|e| e.to_string())? {
        None => println!("components none (unit propagation conflict)"),
        Some(reports) => {
            for r in reports {
                let vars: Vec<String> = r.vars.iter().map(|v| (v.0 + 1).to_string()).collect();
                println!("component {} vars {} max {}", r.kind.name(), vars.join(","), r.max_differ());
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(EXIT_ERROR);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}
