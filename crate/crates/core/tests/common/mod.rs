//! Checks shared by the property tests and the acceptance harness. Each one
//! returns `Err` with a description of the first violation.

#![allow(dead_code)]

use cartfactor::directed::{directed_pass, factor_directed};
use cartfactor::graph::{BfsOrder, DiGraph, ShadowGraph};
use cartfactor::loops::{factor_full, factor_full_with_root, factor_with_loops, loop_pass};
use cartfactor::oracle::{
    gen_product_instance, reconstruct_check, same_factor_multiset, GenParams, OracleBounds,
};
use cartfactor::product::{cartesian_product, Coordinatization};
use cartfactor::shadow_factor::factor_shadow_with_bfs;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type Check = Result<(), String>;

pub fn bounds() -> OracleBounds {
    OracleBounds::default()
}

/// Small random product of 2 or 3 prime factors with loops.
pub fn small_factors(seed: u64) -> Vec<DiGraph> {
    let params = GenParams {
        factors: 2 + (seed % 2) as usize,
        min_size: 2,
        max_size: 4,
        loop_probability: 0.3,
        seed,
        ..GenParams::default()
    };
    gen_product_instance(&params, &bounds())
        .expect("valid parameters")
        .factors
}

fn undirected_edges(s: &ShadowGraph) -> Vec<(usize, usize)> {
    s.edges().iter().map(|e| (e.a, e.b)).collect()
}

fn symmetric(s: &ShadowGraph) -> DiGraph {
    DiGraph::new(
        s.vertex_count(),
        s.edges().iter().flat_map(|e| [(e.a, e.b), (e.b, e.a)]),
        [],
    )
    .unwrap()
}

/// The shadow of a product is the product of the shadows, tags included.
pub fn shadow_of_product(factors: &[DiGraph]) -> Check {
    let (g, _) = cartesian_product(factors).map_err(|e| e.to_string())?;
    let shadows: Vec<DiGraph> = factors.iter().map(|f| symmetric(&f.shadow())).collect();
    let (sp, _) = cartesian_product(&shadows).map_err(|e| e.to_string())?;
    if undirected_edges(&g.shadow()) != undirected_edges(&sp.shadow()) {
        return Err("edge sets differ".into());
    }
    let loops: Vec<usize> = g.loops().collect();
    if g.shadow().to_digraph(loops).map_err(|e| e.to_string())? != g {
        return Err("tags do not reproduce the arcs".into());
    }
    Ok(())
}

/// `d((g, h), (g', h'))` is the sum of the coordinate distances.
pub fn distance_formula(factors: &[DiGraph], seed: u64) -> Check {
    let (g, coords) = cartesian_product(factors).map_err(|e| e.to_string())?;
    let s = g.shadow();
    let fs: Vec<ShadowGraph> = factors.iter().map(DiGraph::shadow).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..20 {
        let (u, v) = (
            rng.gen_range(0..g.vertex_count()),
            rng.gen_range(0..g.vertex_count()),
        );
        let sum: usize = fs
            .iter()
            .enumerate()
            .map(|(i, f)| f.distance(coords.coord(u, i), coords.coord(v, i)).unwrap())
            .sum();
        if s.distance(u, v) != Some(sum) {
            return Err(format!(
                "d({u}, {v}) = {:?}, coordinate sum {sum}",
                s.distance(u, v)
            ));
        }
    }
    Ok(())
}

fn product_of(factors: &[DiGraph]) -> DiGraph {
    cartesian_product(factors).unwrap().0
}

/// Grouping the factors into consecutive blocks does not change the product.
pub fn associativity(factors: &[DiGraph], seed: u64) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let flat = product_of(factors);
    let mut blocks = Vec::new();
    let mut rest = factors;
    while !rest.is_empty() {
        let take = rng.gen_range(1..=rest.len());
        blocks.push(product_of(&rest[..take]));
        rest = &rest[take..];
    }
    if product_of(&blocks) != flat {
        return Err(format!(
            "grouping into {} blocks changes the product",
            blocks.len()
        ));
    }
    Ok(())
}

/// Permuting the factors permutes the coordinates of the product.
pub fn commutativity(factors: &[DiGraph], seed: u64) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..factors.len()).collect();
    order.shuffle(&mut rng);
    let permuted: Vec<DiGraph> = order.iter().map(|&i| factors[i].clone()).collect();
    let (g, coords) = cartesian_product(factors).map_err(|e| e.to_string())?;
    let (h, hcoords) = cartesian_product(&permuted).map_err(|e| e.to_string())?;
    let perm: Vec<usize> = (0..g.vertex_count())
        .map(|v| {
            let c: Vec<usize> = order.iter().map(|&i| coords.coord(v, i)).collect();
            hcoords.vertex_at_coords(&c).unwrap()
        })
        .collect();
    if g.relabel(&perm).map_err(|e| e.to_string())? != h {
        return Err(format!("order {order:?} gives a different product"));
    }
    Ok(())
}

fn layer_through(coords: &Coordinatization, v: usize, keep: &[usize]) -> Vec<usize> {
    (0..coords.vertex_count())
        .filter(|&w| {
            (0..coords.factor_count())
                .all(|j| keep.contains(&j) || coords.coord(w, j) == coords.coord(v, j))
        })
        .collect()
}

fn random_keep(k: usize, rng: &mut ChaCha8Rng) -> Vec<usize> {
    loop {
        let keep: Vec<usize> = (0..k).filter(|_| rng.gen_bool(0.5)).collect();
        if !keep.is_empty() && keep.len() < k {
            return keep;
        }
    }
}

/// Layers are convex: every vertex on a shortest path between two layer
/// vertices is in the layer.
pub fn layer_convexity(factors: &[DiGraph], seed: u64) -> Check {
    let (g, coords) = cartesian_product(factors).map_err(|e| e.to_string())?;
    let s = g.shadow();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let keep = random_keep(factors.len(), &mut rng);
    let layer = layer_through(&coords, rng.gen_range(0..g.vertex_count()), &keep);
    let dist: Vec<Vec<usize>> = layer.iter().map(|&x| s.distances_from(x)).collect();
    for (i, &x) in layer.iter().enumerate() {
        for (j, &y) in layer.iter().enumerate() {
            let d = dist[i][y];
            for (w, (a, b)) in dist[i].iter().zip(&dist[j]).enumerate() {
                if a + b == d && !layer.contains(&w) {
                    return Err(format!("{w} lies between {x} and {y} outside the layer"));
                }
            }
        }
    }
    Ok(())
}

/// Every vertex has a unique nearest vertex in a layer, and it is the
/// coordinate projection.
pub fn unique_minimizer(factors: &[DiGraph], seed: u64) -> Check {
    let (g, coords) = cartesian_product(factors).map_err(|e| e.to_string())?;
    let s = g.shadow();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let keep = random_keep(factors.len(), &mut rng);
    let layer = layer_through(&coords, coords.root(), &keep);
    for v in 0..g.vertex_count() {
        let d = s.distances_from(v);
        let best = layer.iter().map(|&x| d[x]).min().unwrap();
        let nearest: Vec<usize> = layer.iter().copied().filter(|&x| d[x] == best).collect();
        if nearest != [coords.project(v, &keep)] {
            return Err(format!(
                "nearest vertices to {v} in layer {keep:?}: {nearest:?}"
            ));
        }
    }
    Ok(())
}

/// The number of prime factors never exceeds the minimum degree.
pub fn factor_count_bound(g: &DiGraph) -> Check {
    let f = factor_full(g).map_err(|e| e.to_string())?;
    let delta = g.shadow().min_degree();
    if f.factor_count() > delta {
        return Err(format!(
            "{} factors but minimum degree {delta}",
            f.factor_count()
        ));
    }
    Ok(())
}

/// Factors recovered from `g` match `truth` and multiply back to `g`.
pub fn round_trip(g: &DiGraph, truth: &[DiGraph]) -> Check {
    let f = factor_full(g).map_err(|e| e.to_string())?;
    if !reconstruct_check(g, &f).map_err(|e| e.to_string())? {
        return Err("factors do not reconstruct the graph".into());
    }
    if !same_factor_multiset(f.factors(), truth, &bounds()).map_err(|e| e.to_string())? {
        return Err(format!(
            "found {} factors, expected {}",
            f.factor_count(),
            truth.len()
        ));
    }
    Ok(())
}

/// Factoring from every unlooped root gives the same factors.
pub fn root_invariance(g: &DiGraph, seed: u64) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let unlooped: Vec<usize> = (0..g.vertex_count()).filter(|&v| !g.is_looped(v)).collect();
    let base = factor_full(g).map_err(|e| e.to_string())?;
    for _ in 0..3 {
        let root = *unlooped.choose(&mut rng).unwrap();
        let other = factor_full_with_root(g, Some(root))
            .map_err(|e| e.to_string())?
            .factorization;
        if !same_factor_multiset(base.factors(), other.factors(), &bounds())
            .map_err(|e| e.to_string())?
        {
            return Err(format!("root {root} gives different factors"));
        }
    }
    Ok(())
}

/// A second scan over the final partitions merges nothing, and no merge
/// happens on BFS level 1.
pub fn fixpoint_and_levels(g: &DiGraph) -> Check {
    let root = g.first_unlooped().ok_or("no unlooped vertex")?;
    let s = g.shadow();
    let bfs = BfsOrder::new(&s, root).map_err(|e| e.to_string())?;
    let sf = factor_shadow_with_bfs(&s, &bfs).map_err(|e| e.to_string())?;
    let nf = factor_directed(&g.strip_loops(), &s, &sf, &bfs).map_err(|e| e.to_string())?;
    let mut p = nf.partition().clone();
    let again = directed_pass(&s, sf.coordinates(), sf.edge_colors(), &bfs, &mut p)
        .map_err(|e| e.to_string())?;
    if !again.is_empty() {
        return Err(format!("directed rescan merged {again:?}"));
    }
    let mut merges = nf.merges().to_vec();
    if g.has_loops() {
        let lf = factor_with_loops(g, &nf, &s, &bfs).map_err(|e| e.to_string())?;
        let mut p = lf.partition().clone();
        let again = loop_pass(g, nf.coordinates(), nf.edge_factors(), &bfs, &mut p)
            .map_err(|e| e.to_string())?;
        if !again.is_empty() {
            return Err(format!("loop rescan merged {again:?}"));
        }
        merges.extend_from_slice(lf.merges());
    }
    if let Some(m) = merges.iter().find(|m| m.level <= 1) {
        return Err(format!("merge at level {}: {m:?}", m.level));
    }
    Ok(())
}
