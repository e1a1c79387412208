//! Brute-force ground truth for small graphs.
//!
//! Nothing here calls into the factorizers: primality is decided by trying
//! every two-coloring of the shadow edges, isomorphism by backtracking, and
//! reconstruction by rebuilding the product from its definition.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::factorization::DirectedFactorization;
use crate::graph::{DiGraph, NONE};
use crate::product::{cartesian_product, Coordinatization};

/// Size limits for the exhaustive searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleBounds {
    /// Shadow edges for [`brute_force_prime`] (cost `2^m`).
    pub max_edges: usize,
    /// Vertices for [`iso_check`].
    pub max_vertices: usize,
}

impl Default for OracleBounds {
    fn default() -> Self {
        OracleBounds {
            max_edges: 16,
            max_vertices: 10,
        }
    }
}

/// `true` iff the product of `f`'s factors, mapped through `f`'s
/// coordinates, has exactly the arcs and loops of `g`.
pub fn reconstruct_check(g: &DiGraph, f: &DirectedFactorization) -> Result<bool> {
    reconstruct_from_parts(g, f.factors(), f.coordinates())
}

/// [`reconstruct_check`] for loose factor graphs and coordinates.
pub fn reconstruct_from_parts(
    g: &DiGraph,
    factors: &[DiGraph],
    coords: &Coordinatization,
) -> Result<bool> {
    let n = g.vertex_count();
    if coords.vertex_count() != n {
        return Err(Error::InvalidCoordinates(format!(
            "coordinates cover {} vertices, graph has {n}",
            coords.vertex_count()
        )));
    }
    if factors.is_empty() {
        return Ok(n == 1 && g.size() == 0);
    }
    if coords.factor_count() != factors.len() {
        return Err(Error::InvalidCoordinates(format!(
            "{} coordinates per vertex for {} factors",
            coords.factor_count(),
            factors.len()
        )));
    }
    let (product, _) = cartesian_product(factors)?;
    if product.vertex_count() != n {
        return Ok(false);
    }
    // row-major position of every vertex, computed from raw coordinates
    let mut phi = vec![0; n];
    let mut hit = vec![false; n];
    for (v, slot) in phi.iter_mut().enumerate() {
        let mut idx = 0;
        for (i, f) in factors.iter().enumerate() {
            let c = coords.coord(v, i);
            if c >= f.vertex_count() {
                return Err(Error::InvalidCoordinates(format!(
                    "vertex {v}: coordinate {i} out of range"
                )));
            }
            idx = idx * f.vertex_count() + c;
        }
        if std::mem::replace(&mut hit[idx], true) {
            return Err(Error::InvalidCoordinates(format!(
                "coordinates of {v} are not unique"
            )));
        }
        *slot = idx;
    }
    if product.arc_count() != g.arc_count() || product.loop_count() != g.loop_count() {
        return Ok(false);
    }
    let arcs_ok = g.arcs().all(|(u, v)| product.has_arc(phi[u], phi[v]));
    let loops_ok = (0..n).all(|v| g.is_looped(v) == product.is_looped(phi[v]));
    Ok(arcs_ok && loops_ok)
}

/// Exhaustive primality test.
///
/// Tries every two-coloring of the shadow edges that uses both colors and
/// accepts it as a witness of compositeness iff the two color classes form
/// the layers of a product `A □ B`: every vertex gets a unique grid
/// position, parallel layers carry identical arcs, and the loop set is the
/// union of looped rows and looped columns. The trivial graph is a unit and
/// reported as not prime.
pub fn brute_force_prime(g: &DiGraph, bounds: &OracleBounds) -> Result<bool> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n == 1 {
        return Ok(false);
    }
    let shadow = g.shadow();
    if !shadow.is_connected() {
        return Err(Error::Disconnected);
    }
    let m = shadow.edge_count();
    if m > bounds.max_edges {
        return Err(Error::BoundExceeded {
            what: "shadow edges",
            value: m,
            limit: bounds.max_edges,
        });
    }
    let edges: Vec<(usize, usize)> = shadow.edges().iter().map(|e| (e.a, e.b)).collect();
    // the last edge is fixed to color 0, which halves the search
    for mask in 1u64..(1u64 << (m - 1)) {
        if is_product_witness(g, &edges, mask) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn components(n: usize, edges: &[(usize, usize)], mask: u64, color: u64) -> (Vec<usize>, usize) {
    let mut label: Vec<usize> = (0..n).collect();
    fn find(label: &mut [usize], mut x: usize) -> usize {
        while label[x] != x {
            label[x] = label[label[x]];
            x = label[x];
        }
        x
    }
    for (i, &(a, b)) in edges.iter().enumerate() {
        if (mask >> i) & 1 == color {
            let (ra, rb) = (find(&mut label, a), find(&mut label, b));
            label[ra] = rb;
        }
    }
    let mut ids = vec![NONE; n];
    let mut count = 0;
    let mut out = vec![0; n];
    for (v, slot) in out.iter_mut().enumerate() {
        let r = find(&mut label, v);
        if ids[r] == NONE {
            ids[r] = count;
            count += 1;
        }
        *slot = ids[r];
    }
    (out, count)
}

fn is_product_witness(g: &DiGraph, edges: &[(usize, usize)], mask: u64) -> bool {
    let n = g.vertex_count();
    // color-0 edges span the A-layers, color-1 edges the B-layers; the
    // A-coordinate of a vertex is its B-layer and vice versa
    let (a_layer, a_layers) = components(n, edges, mask, 0);
    let (b_layer, b_layers) = components(n, edges, mask, 1);
    if a_layers * b_layers != n || a_layers == n || b_layers == n {
        return false;
    }
    let mut grid = vec![NONE; n];
    for v in 0..n {
        let cell = b_layer[v] * a_layers + a_layer[v];
        if grid[cell] != NONE {
            return false;
        }
        grid[cell] = v;
    }
    let (alpha, beta) = (&b_layer, &a_layer);

    // arcs of each A-layer, in A-coordinates, must agree across layers
    let mut a_arcs: Vec<Vec<(usize, usize)>> = vec![Vec::new(); a_layers];
    let mut b_arcs: Vec<Vec<(usize, usize)>> = vec![Vec::new(); b_layers];
    for (u, v) in g.arcs() {
        if beta[u] == beta[v] {
            a_arcs[beta[u]].push((alpha[u], alpha[v]));
        } else if alpha[u] == alpha[v] {
            b_arcs[alpha[u]].push((beta[u], beta[v]));
        } else {
            return false;
        }
    }
    for lists in [&mut a_arcs, &mut b_arcs] {
        for l in lists.iter_mut() {
            l.sort_unstable();
        }
        if lists.windows(2).any(|w| w[0] != w[1]) {
            return false;
        }
    }

    let size_a = b_layers;
    let size_b = a_layers;
    let looped_a: Vec<bool> = (0..size_a)
        .map(|x| (0..size_b).all(|y| g.is_looped(grid[x * a_layers + y])))
        .collect();
    let looped_b: Vec<bool> = (0..size_b)
        .map(|y| (0..size_a).all(|x| g.is_looped(grid[x * a_layers + y])))
        .collect();
    (0..n).all(|v| g.is_looped(v) == (looped_a[alpha[v]] || looped_b[beta[v]]))
}

/// Backtracking isomorphism test for graphs of at most
/// `bounds.max_vertices` vertices.
pub fn iso_check(g: &DiGraph, h: &DiGraph, bounds: &OracleBounds) -> Result<bool> {
    let n = g.vertex_count();
    for x in [g, h] {
        if x.vertex_count() > bounds.max_vertices {
            return Err(Error::BoundExceeded {
                what: "vertices",
                value: x.vertex_count(),
                limit: bounds.max_vertices,
            });
        }
    }
    if n != h.vertex_count() || g.arc_count() != h.arc_count() || g.loop_count() != h.loop_count() {
        return Ok(false);
    }
    let signature = |x: &DiGraph| -> Vec<(usize, usize, bool)> {
        let mut indeg = vec![0; x.vertex_count()];
        for (_, v) in x.arcs() {
            indeg[v] += 1;
        }
        (0..x.vertex_count())
            .map(|v| (x.out_neighbors(v).len(), indeg[v], x.is_looped(v)))
            .collect()
    };
    let (sg, sh) = (signature(g), signature(h));
    let mut sorted_g = sg.clone();
    let mut sorted_h = sh.clone();
    sorted_g.sort_unstable();
    sorted_h.sort_unstable();
    if sorted_g != sorted_h {
        return Ok(false);
    }
    let mut map = vec![NONE; n];
    let mut used = vec![false; n];
    Ok(extend(g, h, &sg, &sh, 0, &mut map, &mut used))
}

fn extend(
    g: &DiGraph,
    h: &DiGraph,
    sg: &[(usize, usize, bool)],
    sh: &[(usize, usize, bool)],
    v: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if v == g.vertex_count() {
        return true;
    }
    for w in 0..h.vertex_count() {
        if used[w] || sg[v] != sh[w] {
            continue;
        }
        let fits = (0..v).all(|u| {
            g.has_arc(u, v) == h.has_arc(map[u], w) && g.has_arc(v, u) == h.has_arc(w, map[u])
        });
        if !fits {
            continue;
        }
        map[v] = w;
        used[w] = true;
        if extend(g, h, sg, sh, v + 1, map, used) {
            return true;
        }
        used[w] = false;
    }
    map[v] = NONE;
    false
}

/// `true` iff the two lists are equal as multisets up to isomorphism.
pub fn same_factor_multiset(a: &[DiGraph], b: &[DiGraph], bounds: &OracleBounds) -> Result<bool> {
    if a.len() != b.len() {
        return Ok(false);
    }
    let mut taken = vec![false; b.len()];
    'next: for x in a {
        for (j, y) in b.iter().enumerate() {
            if !taken[j] && iso_check(x, y, bounds)? {
                taken[j] = true;
                continue 'next;
            }
        }
        return Ok(false);
    }
    Ok(true)
}

/// Parameters of [`gen_product_instance`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GenParams {
    pub factors: usize,
    pub min_size: usize,
    pub max_size: usize,
    /// Probability that a factor vertex carries a loop.
    pub loop_probability: f64,
    /// Probability of each non-tree pair becoming an edge.
    pub edge_probability: f64,
    pub seed: u64,
}

impl Default for GenParams {
    fn default() -> Self {
        GenParams {
            factors: 2,
            min_size: 2,
            max_size: 4,
            loop_probability: 0.0,
            edge_probability: 0.25,
            seed: 0,
        }
    }
}

/// A scrambled product together with its prime factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductInstance {
    /// The product after relabeling.
    pub graph: DiGraph,
    /// Ground-truth prime factors, in product order.
    pub factors: Vec<DiGraph>,
    /// `relabel[v]` is the id in `graph` of row-major product vertex `v`.
    pub relabel: Vec<usize>,
}

/// Random connected prime factors (each with an unlooped vertex), their
/// product, and a random relabeling of it, all determined by the seed.
pub fn gen_product_instance(params: &GenParams, bounds: &OracleBounds) -> Result<ProductInstance> {
    if params.factors == 0 || params.min_size < 2 || params.min_size > params.max_size {
        return Err(Error::InvalidParameter(format!(
            "need factors >= 1 and 2 <= min <= max, got {params:?}"
        )));
    }
    for p in [params.loop_probability, params.edge_probability] {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::InvalidParameter(format!(
                "probability {p} outside [0, 1]"
            )));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let factors = (0..params.factors)
        .map(|_| random_prime_factor(&mut rng, params, bounds))
        .collect::<Result<Vec<_>>>()?;
    let (product, _) = cartesian_product(&factors)?;
    let mut relabel: Vec<usize> = (0..product.vertex_count()).collect();
    relabel.shuffle(&mut rng);
    Ok(ProductInstance {
        graph: product.relabel(&relabel)?,
        factors,
        relabel,
    })
}

/// A uniformly random relabeling of `g`, drawn from `rng`.
pub fn scramble<R: Rng>(g: &DiGraph, rng: &mut R) -> Result<DiGraph> {
    let mut perm: Vec<usize> = (0..g.vertex_count()).collect();
    perm.shuffle(rng);
    g.relabel(&perm)
}

fn random_prime_factor<R: Rng>(
    rng: &mut R,
    params: &GenParams,
    bounds: &OracleBounds,
) -> Result<DiGraph> {
    loop {
        let n = rng.gen_range(params.min_size..=params.max_size);
        let mut pairs: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
        for a in 0..n {
            for b in a + 1..n {
                if !pairs.contains(&(a, b)) && rng.gen_bool(params.edge_probability) {
                    pairs.push((a, b));
                }
            }
        }
        if pairs.len() > bounds.max_edges {
            continue;
        }
        let mut arcs = Vec::with_capacity(2 * pairs.len());
        for (a, b) in pairs {
            match rng.gen_range(0..3) {
                0 => arcs.push((a, b)),
                1 => arcs.push((b, a)),
                _ => arcs.extend([(a, b), (b, a)]),
            }
        }
        let mut looped: Vec<bool> = (0..n)
            .map(|_| rng.gen_bool(params.loop_probability))
            .collect();
        if looped.iter().all(|&l| l) {
            let v = rng.gen_range(0..n);
            looped[v] = false;
        }
        let loops: Vec<usize> = (0..n).filter(|&v| looped[v]).collect();
        let g = DiGraph::new(n, arcs, loops)?;
        if brute_force_prime(&g, bounds)? {
            return Ok(g);
        }
    }
}
