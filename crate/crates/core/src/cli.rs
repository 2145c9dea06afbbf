//! Command-line front end.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bench::{run_ratio_experiment, ExactMethod};
use crate::exact::{brute_force_opt, solve_shared_vertex_paths, SolveBudget};
use crate::gen::{mis_to_star, random_instance, tightness_instance, CapacityModel, GenConfig, Shape, SubtreeCount};
use crate::greedy::{bottom_up_greedy, Decision, OrderPolicy, SameRootOrder, VertexTraversal};
use crate::instance::{is_feasible, load_vector, Instance, Solution};
use crate::io::{parse_graph, parse_instance, serialize_instance};

#[derive(Parser, Debug)]
#[command(
    name = "mstbl",
    version,
    about = "Pack a maximum number of subtrees into a capacitated tree"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run the bottom-up greedy on an instance file
    SolveGreedy {
        file: PathBuf,
        /// Same-root order: `input`, `fewest-leaves`, or a comma-separated permutation of subtree indices
        #[arg(long, default_value = "input")]
        order: String,
        /// Comma-separated post-order of the tree vertices (default: children by ascending id)
        #[arg(long)]
        traversal: Option<String>,
        /// Print the per-subtree decisions in visit order
        #[arg(long)]
        trace: bool,
    },
    /// Compute an optimum by branch and bound (small instances only)
    SolveExact {
        file: PathBuf,
        /// Maximum number of search nodes
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Exact solver for paths that are directed or pass through the root
    SolveShared {
        file: PathBuf,
        /// Maximum number of search nodes for the matching step
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Write a seeded random instance
    GenRandom {
        #[command(flatten)]
        gen: GenArgs,
        #[arg(short = 'o', long = "output")]
        output: PathBuf,
    },
    /// Reduce a maximum independent set instance (graph file) to a star instance
    ReduceMis {
        graph: PathBuf,
        #[arg(short = 'o', long = "output")]
        output: PathBuf,
    },
    /// Write the instance on which the greedy is off by exactly a factor M
    GenTight {
        #[arg(long)]
        m: usize,
        #[arg(short = 'o', long = "output")]
        output: PathBuf,
    },
    /// Compare greedy and optimum over seeded random instances; writes CSV
    Bench {
        #[command(flatten)]
        gen: GenArgs,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, value_enum, default_value_t = MethodArg::Oracle)]
        method: MethodArg,
        /// Maximum number of search nodes per exact solve
        #[arg(long)]
        budget: Option<u64>,
        #[arg(short = 'o', long = "output")]
        output: PathBuf,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum ShapeArg {
    Paths,
    Subtrees,
    Directed,
    RootCrossing,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Oracle,
    Shared,
}

#[derive(Args, Debug)]
struct GenArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 10)]
    tree_min: usize,
    #[arg(long, default_value_t = 20)]
    tree_max: usize,
    /// Fewest subtrees, as a multiple of the tree size unless --count-absolute
    #[arg(long, default_value_t = 2)]
    count_min: usize,
    /// Most subtrees, as a multiple of the tree size unless --count-absolute
    #[arg(long, default_value_t = 4)]
    count_max: usize,
    /// Read the count range as absolute subtree counts
    #[arg(long)]
    count_absolute: bool,
    #[arg(long, default_value_t = 1)]
    cap_min: u64,
    #[arg(long, default_value_t = 3)]
    cap_max: u64,
    /// Probability that an object is unbounded
    #[arg(long)]
    unbounded_fraction: Option<f64>,
    /// Draw capacities on [1, 2 * ceil(mean load)] instead of [cap-min, cap-max]
    #[arg(long, conflicts_with = "unbounded_fraction")]
    scaled_caps: bool,
    #[arg(long, default_value_t = 1)]
    demand_min: u64,
    #[arg(long, default_value_t = 1)]
    demand_max: u64,
    #[arg(long, value_enum, default_value_t = ShapeArg::Paths)]
    shape: ShapeArg,
}

impl GenArgs {
    fn config(&self) -> GenConfig {
        let subtree_count = if self.count_absolute {
            SubtreeCount::Range(self.count_min, self.count_max)
        } else {
            SubtreeCount::TreeMultiple(self.count_min, self.count_max)
        };
        let capacities = match (self.scaled_caps, self.unbounded_fraction) {
            (true, _) => CapacityModel::ScaledToLoad,
            (false, Some(f)) => CapacityModel::WithUnbounded {
                min: self.cap_min,
                max: self.cap_max,
                unbounded_fraction: f,
            },
            (false, None) => CapacityModel::Uniform {
                min: self.cap_min,
                max: self.cap_max,
            },
        };
        GenConfig {
            seed: self.seed,
            tree_size: (self.tree_min, self.tree_max),
            subtree_count,
            capacities,
            demand: (self.demand_min, self.demand_max),
            shape: match self.shape {
                ShapeArg::Paths => Shape::PathsOnly,
                ShapeArg::Subtrees => Shape::GeneralSubtrees,
                ShapeArg::Directed => Shape::DirectedPaths,
                ShapeArg::RootCrossing => Shape::RootCrossingPaths,
            },
        }
    }
}

type CliResult = std::result::Result<(), String>;

fn read(path: &Path) -> std::result::Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn write(path: &Path, text: &str) -> CliResult {
    fs::write(path, text).map_err(|e| format!("{}: {e}", path.display()))
}

fn load(path: &Path) -> std::result::Result<Instance, String> {
    parse_instance(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

fn parse_list(text: &str, what: &str) -> std::result::Result<Vec<usize>, String> {
    text.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| format!("invalid {what} entry \"{t}\""))
        })
        .collect()
}

fn budget(nodes: Option<u64>) -> SolveBudget {
    nodes.map_or_else(SolveBudget::default, SolveBudget::with_node_limit)
}

fn report(out: &mut dyn Write, instance: &Instance, solution: &Solution) -> CliResult {
    let feasible = is_feasible(instance, solution).map_err(|e| e.to_string())?;
    if !feasible {
        return Err("internal error: solver returned an infeasible packing".into());
    }
    let loads = load_vector(instance, solution).map_err(|e| e.to_string())?;
    let mults: Vec<String> = solution.multiplicities().iter().map(u64::to_string).collect();
    writeln!(out, "total {}", solution.total()).map_err(|e| e.to_string())?;
    writeln!(out, "multiplicities {}", mults.join(" ")).map_err(|e| e.to_string())?;
    writeln!(out, "L_V {}", loads.max_vertex()).map_err(|e| e.to_string())?;
    writeln!(out, "L_E {}", loads.max_edge()).map_err(|e| e.to_string())?;
    Ok(())
}

fn execute(cli: Cli, out: &mut dyn Write) -> CliResult {
    match cli.command {
        Command::SolveGreedy {
            file,
            order,
            traversal,
            trace,
        } => {
            let instance = load(&file)?;
            let same_root_order = match order.as_str() {
                "input" => SameRootOrder::InputOrder,
                "fewest-leaves" => SameRootOrder::FewestNonRootLeavesFirst,
                list => SameRootOrder::Explicit(parse_list(list, "--order")?),
            };
            let vertex_traversal = match traversal {
                Some(list) => VertexTraversal::Custom(parse_list(&list, "--traversal")?),
                None => VertexTraversal::PostOrderById,
            };
            let policy = OrderPolicy::new(vertex_traversal, same_root_order);
            let (solution, greedy_trace) = bottom_up_greedy(&instance, &policy).map_err(|e| e.to_string())?;
            report(out, &instance, &solution)?;
            if trace {
                for &i in &greedy_trace.visit_order {
                    let line = match greedy_trace.decisions[i] {
                        Decision::Accepted(m) => format!("subtree {i} accepted {m}"),
                        Decision::Rejected(o) => format!("subtree {i} rejected at {o}"),
                    };
                    writeln!(out, "{line}").map_err(|e| e.to_string())?;
                }
            }
            Ok(())
        }
        Command::SolveExact { file, budget: nodes } => {
            let instance = load(&file)?;
            let solution = brute_force_opt(&instance, &budget(nodes)).map_err(|e| e.to_string())?;
            report(out, &instance, &solution)
        }
        Command::SolveShared { file, budget: nodes } => {
            let instance = load(&file)?;
            let solution = solve_shared_vertex_paths(&instance, &budget(nodes)).map_err(|e| e.to_string())?;
            report(out, &instance, &solution)
        }
        Command::GenRandom { gen, output } => {
            let instance = random_instance(&gen.config()).map_err(|e| e.to_string())?;
            write(&output, &serialize_instance(&instance))
        }
        Command::ReduceMis { graph, output } => {
            let graph = parse_graph(&read(&graph)?).map_err(|e| e.to_string())?;
            let instance = mis_to_star(&graph).map_err(|e| e.to_string())?;
            write(&output, &serialize_instance(&instance))
        }
        Command::GenTight { m, output } => {
            let instance = tightness_instance(m).map_err(|e| e.to_string())?;
            write(&output, &serialize_instance(&instance))
        }
        Command::Bench {
            gen,
            trials,
            method,
            budget: nodes,
            output,
        } => {
            let method = match method {
                MethodArg::Oracle => ExactMethod::Oracle,
                MethodArg::Shared => ExactMethod::SharedVertexPaths,
            };
            let report =
                run_ratio_experiment(&gen.config(), trials, method, &budget(nodes)).map_err(|e| e.to_string())?;
            write(&output, &report.to_csv())?;
            writeln!(out, "{}", report.summary()).map_err(|e| e.to_string())
        }
    }
}

/// Parses `args` (including the program name) and runs the command, writing
/// results to `out` and diagnostics to `err`. Returns the process exit code.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                2
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    match execute(cli, out) {
        Ok(()) => 0,
        Err(message) => {
            let _ = writeln!(err, "error: {message}");
            1
        }
    }
}

pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(args, &mut std::io::stdout(), &mut std::io::stderr())
}
