//! Command-line front end.
//!
//! Exit codes:
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | success |
//! | 1 | I/O or other failure |
//! | 2 | parse or usage error |
//! | 3 | graph is empty or disconnected |
//! | 4 | no unlooped vertex, or looped root |
//! | 5 | verification failed |
//!
//! Summaries are printed as `key: value` lines.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::bench::{run_bench, spread, to_csv, Family};
use crate::error::Error;
use crate::graph::{parse_graph, parse_graph_with_coords, DiGraph};
use crate::loops::factor_full_with_root;
use crate::oracle::{
    gen_product_instance, reconstruct_check, reconstruct_from_parts, GenParams, OracleBounds,
};
use crate::product::{cartesian_product, Coordinatization};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DISCONNECTED: i32 = 3;
pub const EXIT_NO_UNLOOPED: i32 = 4;
pub const EXIT_VERIFY: i32 = 5;

#[derive(Debug, Parser)]
#[command(
    name = "cartfactor",
    version,
    about = "Cartesian prime factorization of directed graphs with loops"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Factor a graph file into `<input>.factor<i>` files.
    Factor {
        #[arg(long)]
        input: PathBuf,
        /// Also write `<input>.coords`.
        #[arg(long)]
        emit_coords: bool,
        /// Also write `<input>.colors`.
        #[arg(long)]
        emit_colors: bool,
        /// Check that the factors multiply back to the input.
        #[arg(long)]
        verify: bool,
        /// Unlooped root vertex (default: smallest unlooped id).
        #[arg(long)]
        root: Option<usize>,
    },
    /// Multiply graph files.
    Product {
        #[arg(required = true)]
        inputs: Vec<PathBuf>,
        #[arg(short, long)]
        output: PathBuf,
        /// Number product vertices as in this coordinate table.
        #[arg(long)]
        coords: Option<PathBuf>,
    },
    /// Write a random product and its factors (`<output>.truth<i>`).
    Generate {
        #[arg(long)]
        factors: usize,
        #[arg(long)]
        min: usize,
        #[arg(long)]
        max: usize,
        #[arg(long, default_value_t = 0.0)]
        loops: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Check that factors with a coordinate table multiply to a graph.
    Verify {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        coords: PathBuf,
        #[arg(required = true)]
        factors: Vec<PathBuf>,
    },
    /// Time the directed and loop stages on a product family.
    Bench {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        min_arcs: usize,
        #[arg(long)]
        max_arcs: usize,
        #[arg(long)]
        emit_csv: Option<PathBuf>,
        #[arg(long, default_value_t = 5)]
        runs: usize,
    },
}

enum Failure {
    Graph(Error),
    Io(PathBuf, io::Error),
    Verify(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Graph(e)
    }
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Io(..) => EXIT_FAILURE,
            Failure::Verify(_) => EXIT_VERIFY,
            Failure::Graph(e) => exit_code(e),
        }
    }
}

/// Exit code reported for a library error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Syntax { .. }
        | Error::IdOutOfRange { .. }
        | Error::DuplicateArc(..)
        | Error::DuplicateLoop(_)
        | Error::SelfArc(_)
        | Error::InvalidParameter(_) => EXIT_USAGE,
        Error::EmptyGraph | Error::Disconnected => EXIT_DISCONNECTED,
        Error::NoUnloopedVertex | Error::LoopedRoot(_) => EXIT_NO_UNLOOPED,
        Error::Mismatch(_) | Error::InvalidCoordinates(_) => EXIT_VERIFY,
        _ => EXIT_FAILURE,
    }
}

type Outcome = std::result::Result<(), Failure>;

/// Runs the CLI on `args` (including the program name) and returns the exit
/// code. Summaries go to `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let target: &mut dyn Write = if code == 0 { out } else { err };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let result = match cli.command {
        Command::Factor {
            input,
            emit_coords,
            emit_colors,
            verify,
            root,
        } => cmd_factor(&input, emit_coords, emit_colors, verify, root, out),
        Command::Product {
            inputs,
            output,
            coords,
        } => cmd_product(&inputs, &output, coords.as_deref()),
        Command::Generate {
            factors,
            min,
            max,
            loops,
            seed,
            output,
        } => cmd_generate(factors, min, max, loops, seed, &output, out),
        Command::Verify {
            graph,
            coords,
            factors,
        } => cmd_verify(&graph, &coords, &factors, out),
        Command::Bench {
            family,
            min_arcs,
            max_arcs,
            emit_csv,
            runs,
        } => cmd_bench(family, min_arcs, max_arcs, emit_csv.as_deref(), runs, out),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let _ = match &f {
                Failure::Graph(e) => writeln!(err, "error: {e}"),
                Failure::Io(p, e) => writeln!(err, "error: {}: {e}", p.display()),
                Failure::Verify(msg) => writeln!(err, "error: verification failed: {msg}"),
            };
            f.code()
        }
    }
}

fn read(path: &Path) -> std::result::Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Io(path.to_owned(), e))
}

fn write_file(path: &Path, contents: &str) -> Outcome {
    fs::write(path, contents).map_err(|e| Failure::Io(path.to_owned(), e))
}

fn stdout_err(e: io::Error) -> Failure {
    Failure::Io(PathBuf::from("<stdout>"), e)
}

fn with_suffix(path: &Path, suffix: &str) -> PathBuf {
    let mut s = path.as_os_str().to_owned();
    s.push(suffix);
    PathBuf::from(s)
}

fn load_graph(path: &Path) -> std::result::Result<DiGraph, Failure> {
    Ok(parse_graph(&read(path)?)?)
}

fn cmd_factor(
    input: &Path,
    emit_coords: bool,
    emit_colors: bool,
    verify: bool,
    root: Option<usize>,
    out: &mut dyn Write,
) -> Outcome {
    let g = load_graph(input)?;
    let report = factor_full_with_root(&g, root)?;
    let f = &report.factorization;
    for (i, factor) in f.factors().iter().enumerate() {
        write_file(
            &with_suffix(input, &format!(".factor{i}")),
            &factor.to_string(),
        )?;
    }
    if emit_coords {
        let table = format!("{g}{}", f.coordinates().to_table());
        write_file(&with_suffix(input, ".coords"), &table)?;
    }
    if emit_colors {
        let mut text = String::new();
        for (e, &factor) in g.shadow().edges().iter().zip(f.edge_factors()) {
            text.push_str(&format!("e {} {} {factor}\n", e.a, e.b));
        }
        write_file(&with_suffix(input, ".colors"), &text)?;
    }
    let verified = if verify {
        let ok = g.vertex_count() == 1 || reconstruct_check(&g, f)?;
        if !ok {
            return Err(Failure::Verify(
                "factors do not multiply to the input".into(),
            ));
        }
        Some(ok)
    } else {
        None
    };
    let sizes: Vec<String> = f
        .factors()
        .iter()
        .map(|x| x.vertex_count().to_string())
        .collect();
    let t = report.timings;
    let summary = format!(
        "root: {}\nfactors: {}\nsizes: {}\nshadow_factors: {}\nloopless_factors: {}\nmerges_directed: {}\nmerges_loops: {}\ntime_shadow_s: {:.6}\ntime_directed_s: {:.6}\ntime_loops_s: {:.6}\n",
        report.root,
        f.factor_count(),
        sizes.join(" "),
        report.shadow_factors,
        report.loopless_factors,
        report.directed_merges,
        report.loop_merges,
        t.shadow.as_secs_f64(),
        t.directed.as_secs_f64(),
        t.loops.as_secs_f64(),
    );
    out.write_all(summary.as_bytes()).map_err(stdout_err)?;
    if let Some(ok) = verified {
        writeln!(out, "verified: {ok}").map_err(stdout_err)?;
    }
    Ok(())
}

fn cmd_product(inputs: &[PathBuf], output: &Path, coords: Option<&Path>) -> Outcome {
    let factors = inputs
        .iter()
        .map(|p| load_graph(p))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    let (mut g, grid) = cartesian_product(&factors)?;
    if let Some(path) = coords {
        let (_, rows) = parse_graph_with_coords(&read(path)?)?;
        let sizes = factors.iter().map(DiGraph::vertex_count).collect();
        let table = Coordinatization::from_rows(sizes, g.vertex_count(), &rows)?;
        let mut perm = vec![0; g.vertex_count()];
        for v in 0..g.vertex_count() {
            perm[grid.vertex_at_index(table.grid_index(v))] = v;
        }
        g = g.relabel(&perm)?;
    }
    write_file(output, &g.to_string())
}

fn cmd_generate(
    factors: usize,
    min: usize,
    max: usize,
    loops: f64,
    seed: u64,
    output: &Path,
    out: &mut dyn Write,
) -> Outcome {
    let params = GenParams {
        factors,
        min_size: min,
        max_size: max,
        loop_probability: loops,
        seed,
        ..GenParams::default()
    };
    let inst = gen_product_instance(&params, &OracleBounds::default())?;
    write_file(output, &inst.graph.to_string())?;
    for (i, f) in inst.factors.iter().enumerate() {
        write_file(&with_suffix(output, &format!(".truth{i}")), &f.to_string())?;
    }
    writeln!(
        out,
        "vertices: {}\narcs: {}",
        inst.graph.vertex_count(),
        inst.graph.size()
    )
    .map_err(stdout_err)
}

fn cmd_verify(graph: &Path, coords: &Path, factors: &[PathBuf], out: &mut dyn Write) -> Outcome {
    let g = load_graph(graph)?;
    let factors = factors
        .iter()
        .map(|p| load_graph(p))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    let (_, rows) = parse_graph_with_coords(&read(coords)?)?;
    let sizes = factors.iter().map(DiGraph::vertex_count).collect();
    let table = Coordinatization::from_rows(sizes, g.vertex_count(), &rows)?;
    if !reconstruct_from_parts(&g, &factors, &table)? {
        return Err(Failure::Verify(
            "factors do not multiply to the graph".into(),
        ));
    }
    writeln!(out, "verified: true").map_err(stdout_err)
}

fn cmd_bench(
    family: Family,
    min_arcs: usize,
    max_arcs: usize,
    csv: Option<&Path>,
    runs: usize,
    out: &mut dyn Write,
) -> Outcome {
    let rows = run_bench(family, min_arcs, max_arcs, runs)?;
    if rows.is_empty() {
        return Err(Error::InvalidParameter(format!(
            "no instance with {min_arcs}..={max_arcs} arcs"
        ))
        .into());
    }
    let text = to_csv(&rows);
    match csv {
        Some(path) => write_file(path, &text)?,
        None => out.write_all(text.as_bytes()).map_err(stdout_err)?,
    }
    writeln!(out, "sizes: {}\nspread: {:.3}", rows.len(), spread(&rows)).map_err(stdout_err)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn error_codes() {
        assert_eq!(exit_code(&Error::Disconnected), 3);
        assert_eq!(exit_code(&Error::NoUnloopedVertex), 4);
        assert_eq!(
            exit_code(&Error::Syntax {
                line: 1,
                msg: String::new()
            }),
            2
        );
    }

    #[test]
    fn usage_errors_exit_two() {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        assert_eq!(run(["cartfactor", "factor"], &mut out, &mut err), 2);
        assert_eq!(
            run(
                [
                    "cartfactor",
                    "bench",
                    "--family",
                    "hex",
                    "--min-arcs",
                    "1",
                    "--max-arcs",
                    "2"
                ],
                &mut out,
                &mut err
            ),
            2
        );
        assert_eq!(run(["cartfactor", "--help"], &mut out, &mut err), 0);
    }

    #[test]
    fn suffixes_append() {
        assert_eq!(
            with_suffix(Path::new("dir/g.txt"), ".factor0"),
            PathBuf::from("dir/g.txt.factor0")
        );
    }
}
