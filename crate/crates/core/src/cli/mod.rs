//! Command-line front end. `run` parses arguments, dispatches, and returns
//! the process exit code: 0 on success, 1 on domain errors, 2 on usage errors.

pub mod verify;

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use thiserror::Error;

use crate::classify::{candidate_signatures, classify, realizable_signatures, ClassifyError};
use crate::cycles::{girth, girth_cycles, girth_regular_signature, CutSearch, CycleError};
use crate::families::{a_graph, cayley_446, coxeter, gen_petersen, petersen, FamilyError};
use crate::graph::{
    parse_graph6, parse_multigraph_json, write_graph6, write_multigraph_json, GraphError,
    SimpleGraph,
};
use crate::maps::{
    euler_characteristic, euler_formula, flag_orbits, is_regular_map, is_rotary, klein_map,
    map_automorphisms, map_from_girth_cycles, map_type, MapError, MapType, TrivalentMap,
};
use crate::schemes::{k77_cyclic_scheme, recover_truncation, truncate, SchemeError};
use crate::symmetry::{are_isomorphic, automorphism_group};
use verify::{run_suite, Suite, SuiteOptions};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Domain(String),
    #[error("i/o error: {0}")]
    Io(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain(_) | CliError::Io(_) => 1,
        }
    }
}

macro_rules! domain_from {
    ($($t:ty),*) => {$(
        impl From<$t> for CliError {
            fn from(e: $t) -> Self {
                CliError::Domain(e.to_string())
            }
        }
    )*};
}
domain_from!(
    GraphError,
    CycleError,
    FamilyError,
    MapError,
    SchemeError,
    ClassifyError
);

#[derive(Debug, Parser)]
#[command(
    name = "girth7",
    version,
    about = "Cubic vertex-transitive graphs of girth 7"
)]
struct Cli {
    /// Worker threads for parallel searches.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Write output to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Family {
    A,
    Petersen,
    Coxeter,
    Cayley446,
    Klein,
    K77trunc,
}

#[derive(Debug, Args, Clone, Default)]
struct Source {
    /// Input file (graph6 or multigraph JSON); `-` reads stdin.
    input: Option<String>,
    /// Build the input from a named family instead of reading it.
    #[arg(long, value_enum)]
    family: Option<Family>,
    /// Order parameter for `a` and `petersen`.
    #[arg(long)]
    n: Option<usize>,
    /// Step for `petersen`.
    #[arg(long)]
    k: Option<usize>,
    /// Index for `cayley446`.
    #[arg(long)]
    i: Option<usize>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print a family member as graph6.
    Construct(Source),
    /// Girth, signature and symmetry summary.
    Analyze(Source),
    /// Classification report with witness.
    Classify(Source),
    /// Decide isomorphism of two graph6 inputs.
    Isomorphic { first: String, second: String },
    /// Truncate a multigraph JSON document carrying a scheme.
    Truncate { input: String },
    /// Recover the base graph and scheme of a (0,1,1) graph.
    Recover(Source),
    /// Build and inspect trivalent maps.
    #[command(subcommand)]
    Map(MapCommand),
    /// List signatures passing the filters.
    Signatures {
        #[arg(long)]
        candidates: bool,
        #[arg(long)]
        realizable: bool,
    },
    /// Run a bundled verification suite.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        /// Single n for the `a-family` suite (default 8..=24).
        #[arg(long)]
        n: Option<usize>,
        /// Single i for the `cayley` suite (default 3..=5).
        #[arg(long)]
        i: Option<usize>,
        /// Cut size bound for the `cuts` suite.
        #[arg(long)]
        k: Option<usize>,
        /// Graph for the `cuts` suite: a family name such as `coxeter`,
        /// `petersen-13-5`, `a-9`, `cayley446-3`, `klein`, or a file.
        #[arg(long)]
        graph: Option<String>,
    },
}

#[derive(Debug, Subcommand)]
enum MapCommand {
    /// Map whose faces are the girth cycles of a cubic graph.
    Build(Source),
    /// Rotary and regular checks for a map JSON document.
    CheckRotary { input: String },
    /// Vertex, edge, face counts and Euler characteristic.
    Euler { input: String },
}

/// Entry point used by the binary; writes to the process streams.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = io::stdout();
    let stderr = io::stderr();
    run_with_io(argv, &mut stdout.lock(), &mut stderr.lock())
}

pub fn run_with_io<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    0
                }
                _ => {
                    let _ = write!(err, "{text}");
                    2
                }
            };
        }
    };
    let result = match cli.threads {
        Some(0) => Err(CliError::Usage("--threads must be positive".into())),
        Some(t) => match rayon::ThreadPoolBuilder::new().num_threads(t).build() {
            Ok(pool) => pool.install(|| dispatch(&cli)),
            Err(e) => Err(CliError::Domain(e.to_string())),
        },
        None => dispatch(&cli),
    };
    match result.and_then(|output| emit(&cli, &output, out)) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

/// Text written to stdout (or `--out`) plus the exit code to report.
struct Output {
    text: String,
    code: i32,
}

impl Output {
    fn ok(text: impl Into<String>) -> Self {
        Output {
            text: text.into(),
            code: 0,
        }
    }
}

fn emit(cli: &Cli, output: &Output, out: &mut dyn Write) -> Result<i32, CliError> {
    let mut text = output.text.clone();
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match &cli.out {
        Some(path) => fs::write(path, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(output.code)
}

fn read_input(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| CliError::Domain(format!("{path}: {e}")))
    }
}

/// Graph6 text, or a multigraph JSON document without parallel edges.
fn parse_graph_text(text: &str) -> Result<SimpleGraph, CliError> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('{') {
        let (mg, _) = parse_multigraph_json(trimmed)?;
        return mg
            .to_simple()
            .ok_or_else(|| CliError::Domain("input has parallel edges".into()));
    }
    let line = trimmed.lines().next().unwrap_or("");
    Ok(parse_graph6(line)?)
}

fn require(value: Option<usize>, flag: &str, family: &str) -> Result<usize, CliError> {
    value.ok_or_else(|| CliError::Usage(format!("--family {family} requires --{flag}")))
}

fn family_graph(src: &Source, family: Family) -> Result<SimpleGraph, CliError> {
    Ok(match family {
        Family::A => a_graph(require(src.n, "n", "a")?)?,
        Family::Petersen => match (src.n, src.k) {
            (None, None) => petersen(),
            (n, k) => gen_petersen(require(n, "n", "petersen")?, require(k, "k", "petersen")?)?,
        },
        Family::Coxeter => coxeter(),
        Family::Cayley446 => cayley_446(require(src.i, "i", "cayley446")?)?,
        Family::Klein => klein_map()?.skeleton().clone(),
        Family::K77trunc => {
            let (base, scheme) = k77_cyclic_scheme();
            truncate(&base, &scheme)?.0
        }
    })
}

fn source_graph(src: &Source) -> Result<SimpleGraph, CliError> {
    match (&src.input, src.family) {
        (Some(_), Some(_)) => Err(CliError::Usage(
            "give either an input or --family, not both".into(),
        )),
        (None, None) => Err(CliError::Usage(
            "missing input: give a file, `-`, or --family".into(),
        )),
        (Some(path), None) => parse_graph_text(&read_input(path)?),
        (None, Some(f)) => family_graph(src, f),
    }
}

fn named_graph(name: &str) -> Result<SimpleGraph, CliError> {
    let parts: Vec<&str> = name.split('-').collect();
    let num = |s: &str| {
        s.parse::<usize>()
            .map_err(|_| CliError::Usage(format!("bad number `{s}` in graph name `{name}`")))
    };
    let mut src = Source::default();
    let family = match parts.as_slice() {
        ["coxeter"] => Family::Coxeter,
        ["klein"] => Family::Klein,
        ["k77trunc"] => Family::K77trunc,
        ["petersen"] => Family::Petersen,
        ["petersen", n, k] => {
            src.n = Some(num(n)?);
            src.k = Some(num(k)?);
            Family::Petersen
        }
        ["a", n] => {
            src.n = Some(num(n)?);
            Family::A
        }
        ["cayley446", i] => {
            src.i = Some(num(i)?);
            Family::Cayley446
        }
        _ => return parse_graph_text(&read_input(name)?),
    };
    family_graph(&src, family)
}

fn to_json(value: &serde_json::Value) -> String {
    serde_json::to_string_pretty(value).expect("json value serializes")
}

fn dispatch(cli: &Cli) -> Result<Output, CliError> {
    match &cli.command {
        Command::Construct(src) => construct(src, cli.json),
        Command::Analyze(src) => analyze(&source_graph(src)?, cli.json),
        Command::Classify(src) => {
            let report = classify(&source_graph(src)?)?;
            Ok(Output::ok(if cli.json {
                report.to_json_pretty()
            } else {
                format!(
                    "case {} ({}): signature {}",
                    report.case.number(),
                    report.case,
                    report.signature
                )
            }))
        }
        Command::Isomorphic { first, second } => {
            let g1 = parse_graph_text(&read_input(first)?)?;
            let g2 = parse_graph_text(&read_input(second)?)?;
            let iso = are_isomorphic(&g1, &g2);
            Ok(Output::ok(match (cli.json, &iso) {
                (true, _) => to_json(&json!({
                    "isomorphic": iso.is_some(),
                    "mapping": iso.as_ref().map(|p| p.images().to_vec()),
                })),
                (false, Some(p)) => format!("isomorphic {:?}", p.images()),
                (false, None) => "not isomorphic".into(),
            }))
        }
        Command::Truncate { input } => {
            let (base, scheme) = parse_multigraph_json(&read_input(input)?)?;
            let scheme = scheme.ok_or_else(|| CliError::Domain("input has no scheme".into()))?;
            let (t, _) = truncate(&base, &scheme)?;
            Ok(Output::ok(graph_text(&t, cli.json)))
        }
        Command::Recover(src) => {
            let g = source_graph(src)?;
            let w = recover_truncation(&g)?;
            let doc = write_multigraph_json(&w.base, Some(&w.scheme));
            Ok(Output::ok(if cli.json {
                let base: serde_json::Value = serde_json::from_str(&doc).expect("document is json");
                to_json(&json!({ "base": base, "arc_vertex": w.arc_vertex }))
            } else {
                doc
            }))
        }
        Command::Map(cmd) => map_command(cmd, cli.json),
        Command::Signatures {
            candidates,
            realizable,
        } => {
            let list = match (candidates, realizable) {
                (true, true) => {
                    return Err(CliError::Usage(
                        "choose one of --candidates, --realizable".into(),
                    ))
                }
                (_, true) => realizable_signatures(),
                _ => candidate_signatures(),
            };
            Ok(Output::ok(if cli.json {
                serde_json::to_string(&list).expect("signatures serialize")
            } else {
                list.iter()
                    .map(|s| s.to_string())
                    .collect::<Vec<_>>()
                    .join("\n")
            }))
        }
        Command::Verify {
            suite,
            n,
            i,
            k,
            graph,
        } => {
            let graph = match graph {
                Some(name) => Some((name.clone(), named_graph(name)?)),
                None => None,
            };
            let opts = SuiteOptions {
                n: *n,
                i: *i,
                k: *k,
                graph,
                budget: Some(CutSearch::from_env().budget),
            };
            let checks = run_suite(*suite, &opts);
            let passed = checks.iter().all(|c| c.passed);
            let text = if cli.json {
                to_json(&json!({ "suite": suite, "passed": passed, "checks": checks }))
            } else {
                checks
                    .iter()
                    .map(|c| {
                        let tag = if c.passed { "PASS" } else { "FAIL" };
                        if c.detail.is_empty() {
                            format!("{tag} {}", c.name)
                        } else {
                            format!("{tag} {} [{}]", c.name, c.detail)
                        }
                    })
                    .collect::<Vec<_>>()
                    .join("\n")
            };
            Ok(Output {
                text,
                code: if passed { 0 } else { 1 },
            })
        }
    }
}

fn graph_text(g: &SimpleGraph, json: bool) -> String {
    if json {
        to_json(&json!({
            "vertices": g.order(),
            "edges": g.size(),
            "graph6": write_graph6(g),
        }))
    } else {
        write_graph6(g)
    }
}

fn construct(src: &Source, json: bool) -> Result<Output, CliError> {
    if src.input.is_some() {
        return Err(CliError::Usage(
            "construct takes --family, not an input file".into(),
        ));
    }
    let family = src
        .family
        .ok_or_else(|| CliError::Usage("construct requires --family".into()))?;
    match family {
        Family::Klein if json => Ok(Output::ok(klein_map()?.to_json())),
        Family::K77trunc if json => {
            let (base, scheme) = k77_cyclic_scheme();
            let (t, _) = truncate(&base, &scheme)?;
            let base: serde_json::Value =
                serde_json::from_str(&write_multigraph_json(&base, Some(&scheme)))
                    .expect("document is json");
            Ok(Output::ok(to_json(&json!({
                "vertices": t.order(),
                "edges": t.size(),
                "graph6": write_graph6(&t),
                "base": base,
            }))))
        }
        _ => Ok(Output::ok(graph_text(&family_graph(src, family)?, json))),
    }
}

fn analyze(g: &SimpleGraph, json: bool) -> Result<Output, CliError> {
    let gi = girth(g);
    let cycle_count = gi.and_then(|_| girth_cycles(g).ok()).map(|c| c.len());
    let signature = girth_regular_signature(g);
    let group = automorphism_group(g);
    let edge_orbits = group.edge_orbits(g);
    let arc_orbits = group.arc_orbits(g);
    let mut edge_orbit_sizes: Vec<usize> = edge_orbits.iter().map(Vec::len).collect();
    edge_orbit_sizes.sort_unstable();
    let vt = group.is_transitive();
    let et = edge_orbits.len() == 1;
    let at = arc_orbits.len() == 1;
    if json {
        return Ok(Output::ok(to_json(&json!({
            "vertices": g.order(),
            "edges": g.size(),
            "cubic": g.is_cubic(),
            "connected": g.is_connected(),
            "girth": gi,
            "girth_cycles": cycle_count,
            "signature": signature.as_ref().ok(),
            "automorphism_group_order": group.order().to_string(),
            "vertex_transitive": vt,
            "edge_transitive": et,
            "arc_transitive": at,
            "edge_orbit_sizes": edge_orbit_sizes,
        }))));
    }
    let mut lines = vec![
        format!("vertices: {}", g.order()),
        format!("edges: {}", g.size()),
        format!("cubic: {}", g.is_cubic()),
        format!("connected: {}", g.is_connected()),
        format!("girth: {}", gi.map_or("infinite".into(), |x| x.to_string())),
    ];
    if let Some(c) = cycle_count {
        lines.push(format!("girth cycles: {c}"));
    }
    lines.push(match &signature {
        Ok(s) => format!("signature: {s}"),
        Err(e) => format!("signature: none ({e})"),
    });
    lines.push(format!("automorphism group order: {}", group.order()));
    lines.push(format!("vertex-transitive: {vt}"));
    lines.push(format!("edge-transitive: {et}"));
    lines.push(format!("arc-transitive: {at}"));
    Ok(Output::ok(lines.join("\n")))
}

fn read_map(path: &str) -> Result<TrivalentMap, CliError> {
    Ok(TrivalentMap::from_json(&read_input(path)?)?)
}

fn map_command(cmd: &MapCommand, json: bool) -> Result<Output, CliError> {
    match cmd {
        MapCommand::Build(src) => {
            let m = if src.family == Some(Family::Klein) && src.input.is_none() {
                klein_map()?
            } else {
                map_from_girth_cycles(&source_graph(src)?)?
            };
            Ok(Output::ok(m.to_json()))
        }
        MapCommand::CheckRotary { input } => {
            let m = read_map(input)?;
            let rotary = is_rotary(&m);
            let regular = is_regular_map(&m);
            let orbits = flag_orbits(&m).len();
            let order = map_automorphisms(&m).order().to_string();
            Ok(Output::ok(if json {
                to_json(&json!({
                    "rotary": rotary,
                    "regular": regular,
                    "flag_orbits": orbits,
                    "automorphism_group_order": order,
                }))
            } else {
                format!("rotary: {rotary}\nregular: {regular}\nflag orbits: {orbits}\nautomorphism group order: {order}")
            }))
        }
        MapCommand::Euler { input } => {
            let m = read_map(input)?;
            let chi = euler_characteristic(&m);
            let ty = map_type(&m);
            let formula = match ty {
                MapType::Uniform(k) => Some(euler_formula(m.vertex_count(), k)),
                MapType::Mixed => None,
            };
            Ok(Output::ok(if json {
                to_json(&json!({
                    "vertices": m.vertex_count(),
                    "edges": m.edge_count(),
                    "faces": m.face_count(),
                    "euler_characteristic": chi,
                    "type": ty.to_string(),
                    "formula": formula.map(|r| r.to_string()),
                }))
            } else {
                let mut s = format!(
                    "V = {}, E = {}, F = {}\nchi = {chi}\ntype: {ty}",
                    m.vertex_count(),
                    m.edge_count(),
                    m.face_count()
                );
                if let Some(r) = formula {
                    s.push_str(&format!("\nn(3/g - 1/2) = {r}"));
                }
                s
            }))
        }
    }
}
