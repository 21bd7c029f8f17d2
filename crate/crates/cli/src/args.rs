use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "mosbench", version, about = "Multi-objective shortest-path benchmark toolkit")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a synthetic instance (graph and query files).
    #[command(subcommand)]
    Generate(GenerateCommand),
    /// Convert external data into the graph format.
    #[command(subcommand)]
    Convert(ConvertCommand),
    /// Solve every query at every ε of a grid.
    Solve(SolveArgs),
    /// Check solution files for consistency and ε-coverage.
    Verify(VerifyArgs),
    /// Summarize records, solution files or graphs as CSV.
    #[command(subcommand)]
    Stats(StatsCommand),
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Directory for the written files.
    #[arg(long, default_value = ".")]
    pub out_dir: PathBuf,
    /// Base name of the written files [default: derived from the parameters].
    #[arg(long)]
    pub name: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum GenerateCommand {
    /// k x m four-connected grid with random integer costs and one corner query.
    Grid {
        /// Grid width.
        #[arg(long)]
        k: usize,
        /// Grid height.
        #[arg(long)]
        m: usize,
        /// Number of objectives.
        #[arg(long, default_value_t = 2)]
        d: usize,
        /// Smallest edge cost.
        #[arg(long, default_value_t = 1)]
        cost_low: u64,
        /// Largest edge cost.
        #[arg(long, default_value_t = 10)]
        cost_high: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Three-objective NetMaker graph: a Hamiltonian cycle plus locality edges.
    Netmaker {
        /// Number of vertices.
        #[arg(long)]
        n: usize,
        /// Minimum out-degree.
        #[arg(long, default_value_t = 1)]
        a_min: usize,
        /// Maximum out-degree.
        #[arg(long, default_value_t = 10)]
        a_max: usize,
        /// Width of the locality window for extra edges.
        #[arg(long = "window", default_value_t = 20)]
        i_vertex: usize,
        /// Number of start-goal queries to sample.
        #[arg(long, default_value_t = 50)]
        queries: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Debug, Args)]
pub struct QuerySampling {
    /// Also write this many uniformly sampled queries.
    #[arg(long, default_value_t = 0)]
    pub num_queries: usize,
    /// Seed for query sampling.
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
}

#[derive(Debug, Subcommand)]
pub enum ConvertCommand {
    /// Bi-objective (distance, time) graph from a pair of DIMACS `.gr` files.
    Dimacs {
        #[arg(long)]
        distance: PathBuf,
        #[arg(long)]
        time: PathBuf,
        #[command(flatten)]
        queries: QuerySampling,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Append elevation, degree and hop objectives to a DIMACS graph.
    DimacsExtend {
        #[arg(long)]
        graph: PathBuf,
        /// Per-vertex elevation table (required when target-d includes elevation).
        #[arg(long)]
        elevation: Option<PathBuf>,
        /// Number of objectives in the result (3 to 5).
        #[arg(long, default_value_t = 5)]
        target_d: usize,
        #[command(flatten)]
        queries: QuerySampling,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// (length, exposure) eight-connected graph from a guard map.
    Guards {
        #[arg(long)]
        map: PathBuf,
        #[command(flatten)]
        queries: QuerySampling,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Roadmap graph with clearance-penalty objectives.
    Panda {
        #[arg(long)]
        roadmap: PathBuf,
        /// Clearance safety band in metres.
        #[arg(long, default_value_t = 0.1)]
        delta: f64,
        #[arg(long, value_enum, default_value_t = PandaMode::Bi)]
        mode: PandaMode,
        #[command(flatten)]
        queries: QuerySampling,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Breadth-first connected subgraph around a root vertex.
    Subgraph {
        #[arg(long)]
        graph: PathBuf,
        /// Root vertex (one-based).
        #[arg(long)]
        root: u64,
        /// Maximum number of vertices [default: whole component].
        #[arg(long)]
        limit: Option<usize>,
        #[command(flatten)]
        queries: QuerySampling,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PandaMode {
    /// Length plus one aggregated clearance penalty.
    Bi,
    /// Length plus one clearance penalty per link.
    Many,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long)]
    pub queries: PathBuf,
    /// Scalar ε grid, comma separated and strictly increasing.
    #[arg(long, default_value = "0,0.01,0.05,0.1")]
    pub eps: String,
    /// Extra per-objective ε grid point, e.g. "0.1,0.05" (repeatable).
    #[arg(long)]
    pub eps_vec: Vec<String>,
    /// Per (query, ε) time limit in seconds; 0 disables it.
    #[arg(long, default_value_t = 300)]
    pub timeout: u64,
    /// Worker threads; 0 uses the available parallelism.
    #[arg(long, default_value_t = 0)]
    pub threads: usize,
    /// Write cost vectors only, without witness paths.
    #[arg(long)]
    pub no_paths: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Graph the solutions refer to (needed to check witnesses).
    #[arg(long)]
    pub graph: Option<PathBuf>,
    /// Solution files to check for feasibility and non-dominance (repeatable).
    #[arg(long)]
    pub solutions: Vec<PathBuf>,
    /// Exact reference solution file for the coverage check.
    #[arg(long, requires = "approx")]
    pub exact: Option<PathBuf>,
    /// Approximate solution file for the coverage check.
    #[arg(long, requires = "exact")]
    pub approx: Option<PathBuf>,
    /// ε for the coverage check [default: the one recorded in the approximate file].
    #[arg(long)]
    pub eps: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum StatsCommand {
    /// Min, max, median and mean front size per benchmark and ε.
    Cardinality {
        /// Records CSV files (repeatable).
        #[arg(long, required = true)]
        records: Vec<PathBuf>,
        /// Output CSV [default: stdout].
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Front-size reduction relative to ε = 0.
    Reduction {
        #[arg(long, required = true)]
        records: Vec<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Average per-axis max/min ratio of the fronts.
    Spread {
        /// Solution files (repeatable).
        #[arg(long, required = true)]
        solutions: Vec<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Pairwise Pearson correlation of edge costs.
    Correlation {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = EdgeFilter::All)]
        edges: EdgeFilter,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum EdgeFilter {
    All,
    /// NetMaker cycle edges only.
    Cycle,
    /// NetMaker locality edges only.
    Local,
}
