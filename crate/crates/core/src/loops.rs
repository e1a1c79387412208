//! Factoring directed graphs with loops, and the end-to-end pipeline.
//!
//! Starting from the prime factorization of the loop-free graph `N(G)`,
//! every vertex `v` is compared with its projections into the unit layers of
//! the current classes. An unlooped `v` must have only unlooped projections;
//! a looped `v` must have at least one looped projection. Otherwise the
//! classes of all down-edges of `v` are combined.

use std::time::{Duration, Instant};

use crate::directed::{check_inputs, factor_directed};
use crate::error::{Error, Result};
use crate::factorization::{assemble, DirectedFactorization, MergeEvent};
use crate::graph::{BfsOrder, DiGraph, ShadowGraph};
use crate::partition::ColorPartition;
use crate::product::Coordinatization;
use crate::shadow_factor::factor_shadow_with_bfs;

/// Prime factorization of a connected graph `g` with loops, given the prime
/// factorization `nf` of `N(g)` and a BFS order rooted at an unlooped vertex.
/// Factors carry a loop exactly where the corresponding vertex of `g` does.
pub fn factor_with_loops(
    g: &DiGraph,
    nf: &DirectedFactorization,
    shadow: &ShadowGraph,
    bfs: &BfsOrder,
) -> Result<DirectedFactorization> {
    if g.is_looped(bfs.root()) {
        return Err(Error::LoopedRoot(bfs.root()));
    }
    check_inputs(g, shadow, nf.coordinates(), nf.edge_factors(), bfs)?;
    for (i, f) in nf.factors().iter().enumerate() {
        if f.has_loops() {
            return Err(Error::Mismatch(format!("factor {i} of N(G) carries loops")));
        }
    }
    let mut partition = ColorPartition::new(nf.factor_count());
    let merges = loop_pass(g, nf.coordinates(), nf.edge_factors(), bfs, &mut partition)?;
    assemble(
        g,
        shadow,
        nf.coordinates(),
        nf.edge_factors(),
        bfs,
        partition,
        merges,
    )
}

/// One scan over all vertices in BFS order comparing loop status of each
/// vertex with that of its projections, merging classes of `partition` on a
/// mismatch. Run on a final partition it performs no merges.
pub fn loop_pass(
    g: &DiGraph,
    coords: &Coordinatization,
    colors: &[usize],
    bfs: &BfsOrder,
    partition: &mut ColorPartition,
) -> Result<Vec<MergeEvent>> {
    let mut merges = Vec::new();
    let mut live: Vec<usize> = partition.classes().collect();
    for &v in bfs.order() {
        let projection_looped = live.iter().any(|&class| {
            g.is_looped(coords.project(v, partition.members(class).expect("live class")))
        });
        if g.is_looped(v) == projection_looped {
            continue;
        }
        let mut classes: Vec<usize> = bfs
            .down(v)
            .iter()
            .map(|d| partition.class_of(colors[d.edge]))
            .collect();
        classes.sort_unstable();
        classes.dedup();
        if classes.len() < 2 {
            return Err(Error::UnresolvedLoopMismatch(v));
        }
        let survivor = partition.merge_classes(&classes)?;
        live.retain(|&c| c == survivor || !classes.contains(&c));
        merges.push(MergeEvent {
            vertex: v,
            level: bfs.level(v),
            classes,
            survivor,
        });
    }
    Ok(merges)
}

/// Wall-clock time spent in each pipeline stage.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct StageTimings {
    pub shadow: Duration,
    pub directed: Duration,
    pub loops: Duration,
}

/// Outcome of [`factor_full_with_root`] with per-stage statistics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorReport {
    pub factorization: DirectedFactorization,
    pub root: usize,
    pub shadow_factors: usize,
    pub loopless_factors: usize,
    pub directed_merges: usize,
    pub loop_merges: usize,
    pub timings: StageTimings,
}

/// Prime factorization of any connected directed graph with loops that has
/// an unlooped vertex. The trivial graph yields zero factors.
pub fn factor_full(g: &DiGraph) -> Result<DirectedFactorization> {
    factor_full_with_root(g, None).map(|r| r.factorization)
}

/// [`factor_full`] with an optional explicit root (default: the smallest
/// unlooped vertex).
pub fn factor_full_with_root(g: &DiGraph, root: Option<usize>) -> Result<FactorReport> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let shadow = g.shadow();
    if !shadow.is_connected() {
        return Err(Error::Disconnected);
    }
    let root = match root {
        Some(r) if r >= n => return Err(Error::IdOutOfRange { id: r, n }),
        Some(r) if g.is_looped(r) => return Err(Error::LoopedRoot(r)),
        Some(r) => r,
        None => g.first_unlooped().ok_or(Error::NoUnloopedVertex)?,
    };
    if n == 1 {
        return Ok(FactorReport {
            factorization: DirectedFactorization::unit(),
            root,
            shadow_factors: 0,
            loopless_factors: 0,
            directed_merges: 0,
            loop_merges: 0,
            timings: StageTimings::default(),
        });
    }
    let bfs = BfsOrder::new(&shadow, root)?;

    let start = Instant::now();
    let sf = factor_shadow_with_bfs(&shadow, &bfs)?;
    let t_shadow = start.elapsed();

    let start = Instant::now();
    let nf = factor_directed(&g.strip_loops(), &shadow, &sf, &bfs)?;
    let t_directed = start.elapsed();

    let start = Instant::now();
    let (factorization, loop_merges) = if g.has_loops() {
        let f = factor_with_loops(g, &nf, &shadow, &bfs)?;
        let merges = f.merges().len();
        (f, merges)
    } else {
        (nf.clone(), 0)
    };
    let t_loops = start.elapsed();

    Ok(FactorReport {
        root,
        shadow_factors: sf.factor_count(),
        loopless_factors: nf.factor_count(),
        directed_merges: nf.merges().len(),
        loop_merges,
        factorization,
        timings: StageTimings {
            shadow: t_shadow,
            directed: t_directed,
            loops: t_loops,
        },
    })
}
