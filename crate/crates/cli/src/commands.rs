use std::collections::BTreeMap;
use std::fs::{self, File};
use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};

use mosbench::generators::{
    generate_grid, generate_netmaker, sample_netmaker_queries, sample_uniform_queries, GridSpec,
    NetMakerSpec,
};
use mosbench::ingest::{
    extend_dimacs, extract_connected_subgraph, guards_to_graph, panda_apply_clearance,
    parse_dimacs_files, parse_guards_map, parse_roadmap, read_elevation, read_graph_file,
    read_queries_file, read_solutions_file, write_graph_file, write_queries_file,
    write_solutions_file, ClearanceMode,
};
use mosbench::mos::{Epsilon, MosGraph, SolutionSet};
use mosbench::protocol::{
    cardinality_stats, correlation_report, read_records, reduction_stats, run_benchmark,
    spread_stats, verify_coverage, verify_solutions, write_records, BenchmarkRecord, EdgeClass,
    EpsilonGrid, RecordStatus, RunConfig,
};

use crate::args::{
    ConvertCommand, EdgeFilter, GenerateCommand, OutputArgs, PandaMode, QuerySampling, SolveArgs,
    StatsCommand, VerifyArgs,
};
use crate::{Invalid, VerificationFailed};

fn invalid(msg: impl Into<String>) -> anyhow::Error {
    Invalid(msg.into()).into()
}

impl OutputArgs {
    fn path(&self, default_name: &str, ext: &str) -> Result<PathBuf> {
        let name = self.name.as_deref().unwrap_or(default_name);
        self.file(&format!("{name}.{ext}"))
    }

    fn file(&self, file_name: &str) -> Result<PathBuf> {
        fs::create_dir_all(&self.out_dir)
            .with_context(|| format!("creating {}", self.out_dir.display()))?;
        Ok(self.out_dir.join(file_name))
    }
}

fn write_instance(
    graph: &MosGraph,
    queries: Option<&[mosbench::mos::Query]>,
    output: &OutputArgs,
    default_name: &str,
) -> Result<()> {
    let graph_path = output.path(default_name, "graph")?;
    write_graph_file(graph, &graph_path)?;
    println!(
        "wrote {} ({} vertices, {} edges, {} objectives)",
        graph_path.display(),
        graph.num_vertices(),
        graph.num_edges(),
        graph.dim()
    );
    if let Some(queries) = queries {
        let query_path = output.path(default_name, "queries")?;
        write_queries_file(queries, &query_path)?;
        println!("wrote {} ({} queries)", query_path.display(), queries.len());
    }
    Ok(())
}

fn sampled(graph: &MosGraph, sampling: &QuerySampling) -> Result<Option<Vec<mosbench::mos::Query>>> {
    if sampling.num_queries == 0 {
        return Ok(None);
    }
    Ok(Some(sample_uniform_queries(graph, sampling.num_queries, sampling.seed)?))
}

fn stem(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "instance".into())
}

fn open(path: &Path) -> Result<BufReader<File>> {
    let f = File::open(path).with_context(|| format!("opening {}", path.display()))?;
    Ok(BufReader::new(f))
}

fn output_writer(out: Option<&Path>) -> Result<Box<dyn Write>> {
    Ok(match out {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).with_context(|| format!("creating {}", p.display()))?,
        )),
        None => Box::new(io::stdout().lock()),
    })
}

pub fn generate(cmd: GenerateCommand) -> Result<()> {
    match cmd {
        GenerateCommand::Grid {
            k,
            m,
            d,
            cost_low,
            cost_high,
            seed,
            output,
        } => {
            let spec = GridSpec {
                cost_low,
                cost_high,
                ..GridSpec::new(k, m, d, seed)
            };
            let (graph, query) = generate_grid(&spec)?;
            let graph = graph.with_metadata("generator", "mosbench generate grid");
            write_instance(&graph, Some(&[query]), &output, &format!("grid_{k}x{m}_d{d}_s{seed}"))
        }
        GenerateCommand::Netmaker {
            n,
            a_min,
            a_max,
            i_vertex,
            queries,
            seed,
            output,
        } => {
            let spec = NetMakerSpec {
                min_out_degree: a_min,
                max_out_degree: a_max,
                ..NetMakerSpec::new(n, i_vertex, seed)
            };
            let nm = generate_netmaker(&spec)?;
            if !nm.truncated.is_empty() {
                eprintln!(
                    "note: {} vertices had fewer window candidates than their sampled out-degree",
                    nm.truncated.len()
                );
            }
            let qs = sample_netmaker_queries(&nm.graph, queries, seed)?;
            write_instance(&nm.graph, Some(&qs), &output, &format!("netmaker_{n}_i{i_vertex}_s{seed}"))
        }
    }
}

pub fn convert(cmd: ConvertCommand) -> Result<()> {
    match cmd {
        ConvertCommand::Dimacs {
            distance,
            time,
            queries,
            output,
        } => {
            let g = parse_dimacs_files(&distance, &time)?;
            write_instance(&g, sampled(&g, &queries)?.as_deref(), &output, &stem(&distance))
        }
        ConvertCommand::DimacsExtend {
            graph,
            elevation,
            target_d,
            queries,
            output,
        } => {
            let g = read_graph_file(&graph)?;
            let elev = elevation
                .as_deref()
                .map(|p| read_elevation(open(p)?).map_err(anyhow::Error::from))
                .transpose()?;
            let ext = extend_dimacs(&g, elev.as_ref(), target_d)?;
            let name = format!("{}_d{target_d}", stem(&graph));
            write_instance(&ext, sampled(&ext, &queries)?.as_deref(), &output, &name)
        }
        ConvertCommand::Guards {
            map,
            queries,
            output,
        } => {
            let grid = parse_guards_map(open(&map)?)?;
            let g = guards_to_graph(&grid)?;
            write_instance(&g, sampled(&g, &queries)?.as_deref(), &output, &stem(&map))
        }
        ConvertCommand::Panda {
            roadmap,
            delta,
            mode,
            queries,
            output,
        } => {
            let map = parse_roadmap(open(&roadmap)?)?;
            let mode = match mode {
                PandaMode::Bi => ClearanceMode::Bi,
                PandaMode::Many => ClearanceMode::Many,
            };
            let g = panda_apply_clearance(&map, delta, mode)?;
            let name = format!("{}_d{}", stem(&roadmap), g.dim());
            write_instance(&g, sampled(&g, &queries)?.as_deref(), &output, &name)
        }
        ConvertCommand::Subgraph {
            graph,
            root,
            limit,
            queries,
            output,
        } => {
            let g = read_graph_file(&graph)?;
            if root == 0 || root > g.num_vertices() as u64 {
                return Err(invalid(format!(
                    "--root {root} is outside 1..={}",
                    g.num_vertices()
                )));
            }
            let sub = extract_connected_subgraph(&g, (root - 1) as u32, limit)?;
            let name = format!("{}_sub{}", stem(&graph), sub.graph.num_vertices());
            write_instance(&sub.graph, sampled(&sub.graph, &queries)?.as_deref(), &output, &name)
        }
    }
}

fn parse_grid(scalars: &str, vectors: &[String], dim: usize) -> Result<EpsilonGrid> {
    let mut values = Vec::new();
    for lit in scalars.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        values.push(Epsilon::parse(lit).map_err(|e| invalid(format!("--eps: {e}")))?);
    }
    for v in vectors {
        let e = Epsilon::parse(v).map_err(|e| invalid(format!("--eps-vec: {e}")))?;
        if e.dim() != dim {
            return Err(invalid(format!(
                "--eps-vec {v:?} has {} components, the graph has {dim} objectives",
                e.dim()
            )));
        }
        values.push(e);
    }
    EpsilonGrid::new(values).map_err(|e| invalid(e.to_string()))
}

/// File-name fragment for an ε value.
fn eps_tag(eps: &Epsilon) -> String {
    eps.to_string().replace(',', "_")
}

pub fn solve(args: SolveArgs) -> Result<()> {
    let graph = read_graph_file(&args.graph)?;
    let queries = read_queries_file(&args.queries)?;
    let grid = parse_grid(&args.eps, &args.eps_vec, graph.dim())?;
    let benchmark = args.output.name.clone().unwrap_or_else(|| stem(&args.graph));
    let config = RunConfig {
        grid: grid.clone(),
        timeout_ms: (args.timeout > 0).then(|| args.timeout.saturating_mul(1000)),
        ..RunConfig::new(benchmark.clone())
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(args.threads)
        .build()
        .context("starting worker threads")?;
    let out = pool.install(|| run_benchmark(&graph, &queries, &config))?;

    for eps in grid.values() {
        let sets: Vec<SolutionSet> = out.sets_at(eps).into_iter().cloned().collect();
        let path = args.output.file(&format!("{benchmark}.eps{}.sol", eps_tag(eps)))?;
        write_solutions_file(&sets, graph.objectives(), !args.no_paths, &path)?;
        println!("wrote {} ({} solution sets)", path.display(), sets.len());
    }
    let records_path = args.output.file(&format!("{benchmark}.records.csv"))?;
    let file = File::create(&records_path)
        .with_context(|| format!("creating {}", records_path.display()))?;
    write_records(&out.records, BufWriter::new(file))?;
    let timeouts = out
        .records
        .iter()
        .filter(|r| r.status == RecordStatus::Timeout)
        .count();
    println!(
        "wrote {} ({} records, {} timed out)",
        records_path.display(),
        out.records.len(),
        timeouts
    );
    Ok(())
}

pub fn verify(args: VerifyArgs) -> Result<()> {
    if args.solutions.is_empty() && args.exact.is_none() {
        return Err(invalid("nothing to verify: pass --solutions and/or --exact with --approx"));
    }
    let graph = args.graph.as_deref().map(read_graph_file).transpose()?;
    let mut failures = 0;

    if !args.solutions.is_empty() {
        let graph = graph
            .as_ref()
            .ok_or_else(|| invalid("--solutions needs --graph"))?;
        for path in &args.solutions {
            for set in read_solutions_file(path)? {
                let report = verify_solutions(graph, &set.query, &set);
                for v in &report.violations {
                    println!("{}: query {}: {v}", path.display(), set.query.index + 1);
                }
                failures += report.violations.len();
            }
        }
    }

    if let (Some(exact), Some(approx)) = (&args.exact, &args.approx) {
        let eps_override = args
            .eps
            .as_deref()
            .map(|s| Epsilon::parse(s).map_err(|e| invalid(format!("--eps: {e}"))))
            .transpose()?;
        let exact_sets: BTreeMap<usize, SolutionSet> = read_solutions_file(exact)?
            .into_iter()
            .map(|s| (s.query.index, s))
            .collect();
        for set in read_solutions_file(approx)? {
            let Some(reference) = exact_sets.get(&set.query.index) else {
                println!("query {}: no exact set to compare against", set.query.index + 1);
                failures += 1;
                continue;
            };
            let eps = eps_override.clone().unwrap_or_else(|| set.epsilon.clone());
            let cov = verify_coverage(reference, &set, &eps)?;
            for c in &cov.uncovered {
                println!("query {}: exact vector {c:?} is not covered at ε={eps}", set.query.index + 1);
            }
            failures += cov.uncovered.len();
        }
    }

    if failures > 0 {
        return Err(VerificationFailed(failures).into());
    }
    println!("ok");
    Ok(())
}

fn load_records(paths: &[PathBuf]) -> Result<Vec<BenchmarkRecord>> {
    let mut all = Vec::new();
    for p in paths {
        all.extend(read_records(open(p)?).with_context(|| format!("reading {}", p.display()))?);
    }
    Ok(all)
}

pub fn stats(cmd: StatsCommand) -> Result<()> {
    match cmd {
        StatsCommand::Cardinality { records, out } => {
            let records = load_records(&records)?;
            let mut groups: BTreeMap<(String, String), Vec<BenchmarkRecord>> = BTreeMap::new();
            for r in records {
                groups
                    .entry((r.benchmark.clone(), r.epsilon()?.to_string()))
                    .or_default()
                    .push(r);
            }
            let mut w = output_writer(out.as_deref())?;
            writeln!(w, "benchmark,epsilon,queries,timeouts_excluded,min,max,median,mean,mean_rounded")?;
            for ((bench, eps), rs) in &groups {
                let Ok(s) = cardinality_stats(rs, &Epsilon::parse(eps)?) else {
                    eprintln!("{bench} at ε={eps}: every record timed out");
                    continue;
                };
                if s.timeouts_excluded > 0 {
                    eprintln!("{bench} at ε={eps}: {} timed-out records excluded", s.timeouts_excluded);
                }
                writeln!(
                    w,
                    "{bench},\"{eps}\",{},{},{},{},{},{},{}",
                    s.queries,
                    s.timeouts_excluded,
                    s.min,
                    s.max,
                    s.median,
                    s.mean,
                    s.mean_rounded()
                )?;
            }
            w.flush()?;
        }
        StatsCommand::Reduction { records, out } => {
            let report = reduction_stats(&load_records(&records)?)?;
            if report.excluded > 0 {
                eprintln!(
                    "{} records excluded (timed out or empty exact front)",
                    report.excluded
                );
            }
            report.write_csv(output_writer(out.as_deref())?)?;
        }
        StatsCommand::Spread { solutions, out } => {
            let mut sets = Vec::new();
            let mut names: Option<Vec<String>> = None;
            for p in &solutions {
                sets.extend(read_solutions_file(p)?);
                if names.is_none() {
                    names = objective_names(p)?;
                }
            }
            let report = spread_stats(&sets)?;
            let mut w = output_writer(out.as_deref())?;
            writeln!(w, "axis,objective,mean_spread,included,excluded_zero_min")?;
            for (i, a) in report.axes.iter().enumerate() {
                let name = names
                    .as_ref()
                    .and_then(|n| n.get(i).cloned())
                    .unwrap_or_else(|| format!("c{}", i + 1));
                if a.excluded_zero_min > 0 {
                    eprintln!("axis {name}: {} queries with a zero minimum excluded", a.excluded_zero_min);
                }
                writeln!(w, "{},{name},{:.6},{},{}", i + 1, a.mean, a.included, a.excluded_zero_min)?;
            }
            w.flush()?;
        }
        StatsCommand::Correlation { graph, edges, out } => {
            let g = read_graph_file(&graph)?;
            let class = match edges {
                EdgeFilter::All => EdgeClass::All,
                EdgeFilter::Cycle => EdgeClass::Cycle,
                EdgeFilter::Local => EdgeClass::Local,
            };
            let mut w = output_writer(out.as_deref())?;
            w.write_all(correlation_report(&g, class)?.as_bytes())?;
            w.flush()?;
        }
    }
    Ok(())
}

/// Objective names from the `c objectives` header of a solution file.
fn objective_names(path: &Path) -> Result<Option<Vec<String>>> {
    use std::io::BufRead;
    for line in open(path)?.lines() {
        let line = line?;
        if let Some(rest) = line.strip_prefix("c objectives ") {
            return Ok(Some(rest.split_whitespace().map(String::from).collect()));
        }
    }
    Ok(None)
}
