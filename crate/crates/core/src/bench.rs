//! Scaling benchmark for the directed and the loop factorizer.
//!
//! Instances are Cartesian products built from known factors, so the shadow
//! factorization is assembled from the factors' own shadow factorizations
//! and excluded from the timing, together with the shadow and the BFS order.

use std::fmt::Write as _;
use std::hint::black_box;
use std::str::FromStr;
use std::time::{Duration, Instant};

use crate::directed::factor_directed;
use crate::error::{Error, Result};
use crate::factorization::DirectedFactorization;
use crate::graph::{BfsOrder, DiGraph, ShadowGraph};
use crate::loops::factor_with_loops;
use crate::oracle::{gen_product_instance, GenParams, OracleBounds};
use crate::product::cartesian_product;
use crate::shadow_factor::{factor_shadow, ShadowFactorization};

/// Product families with a tunable size.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// Directed path with a loop at its end, times a symmetric path.
    Grid,
    /// Products of directed 4-cycles (plus one arc for odd dimension); the
    /// shadow is a hypercube and every 4-cycle forces one merge.
    Cube,
    /// Products of random prime factors with loops.
    RandProd,
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "grid" => Ok(Family::Grid),
            "cube" => Ok(Family::Cube),
            "randprod" => Ok(Family::RandProd),
            other => Err(Error::InvalidParameter(format!(
                "unknown family `{other}` (expected grid, cube, or randprod)"
            ))),
        }
    }
}

/// A product with everything the two scans take as given.
#[derive(Debug, Clone)]
pub struct BenchInstance {
    graph: DiGraph,
    loopless: DiGraph,
    shadow: ShadowGraph,
    bfs: BfsOrder,
    sf: ShadowFactorization,
}

impl BenchInstance {
    pub fn from_factors(factors: &[DiGraph]) -> Result<Self> {
        let (graph, coords) = cartesian_product(factors)?;
        let shadows: Vec<ShadowGraph> = factors.iter().map(DiGraph::shadow).collect();
        let parts = factors
            .iter()
            .zip(&shadows)
            .map(|(f, s)| factor_shadow(s, f.first_unlooped().ok_or(Error::NoUnloopedVertex)?))
            .collect::<Result<Vec<_>>>()?;
        let shadow = graph.shadow();
        let sf = ShadowFactorization::of_product(&shadows, &parts, &coords, &shadow)?;
        let bfs = BfsOrder::new(&shadow, sf.root())?;
        Ok(BenchInstance {
            loopless: graph.strip_loops(),
            graph,
            shadow,
            bfs,
            sf,
        })
    }

    pub fn graph(&self) -> &DiGraph {
        &self.graph
    }

    /// `|A(G)|`, loops included.
    pub fn arcs(&self) -> usize {
        self.graph.size()
    }

    /// The timed part: the directed scan, then the loop scan if needed.
    pub fn run(&self) -> Result<DirectedFactorization> {
        let nf = factor_directed(&self.loopless, &self.shadow, &self.sf, &self.bfs)?;
        if self.graph.has_loops() {
            factor_with_loops(&self.graph, &nf, &self.shadow, &self.bfs)
        } else {
            Ok(nf)
        }
    }
}

/// One CSV row.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BenchRow {
    pub arcs: usize,
    pub seconds: f64,
    pub seconds_per_arc: f64,
}

/// Shortest wall time one sample accumulates before it is divided by the
/// number of repetitions.
const MIN_SAMPLE: Duration = Duration::from_millis(20);

/// Median over `runs` samples of the per-run time of [`BenchInstance::run`].
pub fn measure(instance: &BenchInstance, runs: usize) -> Result<BenchRow> {
    let mut samples = Vec::with_capacity(runs.max(1));
    for _ in 0..runs.max(1) {
        let start = Instant::now();
        let mut reps = 0u32;
        loop {
            black_box(instance.run()?);
            reps += 1;
            if start.elapsed() >= MIN_SAMPLE {
                break;
            }
        }
        samples.push(start.elapsed().as_secs_f64() / f64::from(reps));
    }
    samples.sort_by(f64::total_cmp);
    let seconds = samples[samples.len() / 2];
    let arcs = instance.arcs();
    Ok(BenchRow {
        arcs,
        seconds,
        seconds_per_arc: seconds / arcs as f64,
    })
}

fn directed_four_cycle() -> DiGraph {
    DiGraph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)], []).expect("valid cycle")
}

fn cube_factors(dim: usize) -> Vec<DiGraph> {
    let mut factors = vec![directed_four_cycle(); dim / 2];
    if dim % 2 == 1 {
        factors.push(DiGraph::new(2, [(0, 1)], []).expect("valid arc"));
    }
    factors
}

fn grid_factors(len: usize) -> Vec<DiGraph> {
    let directed = DiGraph::new(len, (1..len).map(|i| (i - 1, i)), [len - 1]).expect("valid path");
    let symmetric =
        DiGraph::new(len, (1..len).flat_map(|i| [(i - 1, i), (i, i - 1)]), []).expect("valid path");
    vec![directed, symmetric]
}

fn arcs_of(factors: &[DiGraph]) -> usize {
    let n: usize = factors.iter().map(DiGraph::vertex_count).product();
    let loops_free: usize = factors
        .iter()
        .map(|f| f.arc_count() * (n / f.vertex_count()))
        .sum();
    let unlooped: usize = factors
        .iter()
        .map(|f| f.vertex_count() - f.loop_count())
        .product();
    loops_free + n - unlooped
}

/// Factor lists of the family whose products have between `min_arcs` and
/// `max_arcs` arcs, smallest first.
pub fn family_factor_lists(
    family: Family,
    min_arcs: usize,
    max_arcs: usize,
    seed: u64,
) -> Result<Vec<Vec<DiGraph>>> {
    if min_arcs == 0 || min_arcs > max_arcs {
        return Err(Error::InvalidParameter(format!(
            "need 0 < min-arcs <= max-arcs, got {min_arcs} and {max_arcs}"
        )));
    }
    let mut lists = Vec::new();
    match family {
        Family::Cube => {
            for dim in 1.. {
                let factors = cube_factors(dim);
                let arcs = arcs_of(&factors);
                if arcs > max_arcs {
                    break;
                }
                if arcs >= min_arcs {
                    lists.push(factors);
                }
            }
        }
        Family::Grid => {
            // arcs grow roughly by 2 per step
            let mut target = min_arcs as f64;
            let mut last = 0;
            while target <= max_arcs as f64 * 1.000_001 {
                let len = ((target / 3.0).sqrt().round() as usize).max(2);
                let factors = grid_factors(len);
                let arcs = arcs_of(&factors);
                if len != last && (min_arcs..=max_arcs).contains(&arcs) {
                    lists.push(factors);
                    last = len;
                }
                target *= 2.0;
            }
        }
        Family::RandProd => {
            let bounds = OracleBounds::default();
            let mut factors = Vec::new();
            let mut i = 0u64;
            while arcs_of(&factors) <= max_arcs {
                let params = GenParams {
                    factors: 1,
                    min_size: 3,
                    max_size: 4,
                    loop_probability: 0.3,
                    seed: seed.wrapping_mul(1_000_003).wrapping_add(i),
                    ..GenParams::default()
                };
                i += 1;
                factors.push(gen_product_instance(&params, &bounds)?.factors.remove(0));
                let arcs = arcs_of(&factors);
                if (min_arcs..=max_arcs).contains(&arcs) {
                    lists.push(factors.clone());
                }
            }
        }
    }
    Ok(lists)
}

/// Builds and measures every family member in range.
pub fn run_bench(
    family: Family,
    min_arcs: usize,
    max_arcs: usize,
    runs: usize,
) -> Result<Vec<BenchRow>> {
    family_factor_lists(family, min_arcs, max_arcs, 0)?
        .iter()
        .map(|factors| measure(&BenchInstance::from_factors(factors)?, runs))
        .collect()
}

/// `max / min` of the per-arc times.
pub fn spread(rows: &[BenchRow]) -> f64 {
    let per_arc = rows.iter().map(|r| r.seconds_per_arc);
    let max = per_arc.clone().fold(f64::MIN, f64::max);
    let min = per_arc.fold(f64::MAX, f64::min);
    max / min
}

/// CSV with header `arcs,seconds,seconds_per_arc`.
pub fn to_csv(rows: &[BenchRow]) -> String {
    let mut out = String::from("arcs,seconds,seconds_per_arc\n");
    for r in rows {
        let _ = writeln!(out, "{},{:e},{:e}", r.arcs, r.seconds, r.seconds_per_arc);
    }
    out
}
