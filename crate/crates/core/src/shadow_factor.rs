//! Prime factorization of the undirected shadow.
//!
//! The product coloring of a connected graph is the transitive closure of
//! two edge relations:
//!
//! * `θ`: edges `xy`, `uv` with `d(x,u) + d(y,v) != d(x,v) + d(y,u)`;
//! * `τ`: incident edges `xy`, `xz` where `y`, `z` are non-adjacent and `x`
//!   is their only common neighbor, i.e. the two edges lie on no chordless
//!   square.
//!
//! `θ` is only evaluated between edges of a BFS spanning tree and all edges;
//! the closure is unchanged and the cost drops to `O(n m)`.

use petgraph::unionfind::UnionFind;

use crate::error::{Error, Result};
use crate::graph::{BfsOrder, ShadowGraph, NONE};
use crate::product::Coordinatization;

/// Prime factors `Z_j` of a shadow, the color of every shadow edge, and the
/// coordinates of every vertex with respect to the `Z_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShadowFactorization {
    root: usize,
    edge_colors: Vec<usize>,
    factors: Vec<ShadowGraph>,
    coordinates: Coordinatization,
}

impl ShadowFactorization {
    /// Zero factors: the factorization of the trivial graph.
    pub fn unit() -> Self {
        ShadowFactorization {
            root: 0,
            edge_colors: Vec::new(),
            factors: Vec::new(),
            coordinates: Coordinatization::unit(),
        }
    }

    pub fn root(&self) -> usize {
        self.root
    }

    /// Color of every shadow edge, indexed by edge id.
    pub fn edge_colors(&self) -> &[usize] {
        &self.edge_colors
    }

    pub fn factor_count(&self) -> usize {
        self.factors.len()
    }

    pub fn factors(&self) -> &[ShadowGraph] {
        &self.factors
    }

    pub fn coordinates(&self) -> &Coordinatization {
        &self.coordinates
    }

    /// Assembles the shadow factorization of a product from factorizations
    /// of its factors' shadows.
    ///
    /// `coords` is the coordinatization of `product` over the factors (as
    /// returned by [`crate::product::cartesian_product`]), `factor_shadows[i]`
    /// is the shadow of factor `i`, and `parts[i]` its factorization. The
    /// product root is the vertex whose coordinates are the part roots.
    pub fn of_product(
        factor_shadows: &[ShadowGraph],
        parts: &[ShadowFactorization],
        coords: &Coordinatization,
        product: &ShadowGraph,
    ) -> Result<Self> {
        let k = coords.factor_count();
        if parts.len() != k || factor_shadows.len() != k {
            return Err(Error::Mismatch(format!(
                "{} part factorizations and {} shadows for {k} factors",
                parts.len(),
                factor_shadows.len()
            )));
        }
        for i in 0..k {
            let size = coords.sizes()[i];
            if parts[i].coordinates.vertex_count() != size
                || factor_shadows[i].vertex_count() != size
            {
                return Err(Error::Mismatch(format!(
                    "part {i} has the wrong vertex count"
                )));
            }
        }
        let n = product.vertex_count();
        let mut offsets = Vec::with_capacity(k);
        let mut total = 0;
        for p in parts {
            offsets.push(total);
            total += p.factor_count();
        }
        let mut flat = Vec::with_capacity(n * total);
        for v in 0..n {
            for (i, p) in parts.iter().enumerate() {
                flat.extend_from_slice(p.coordinates.coords(coords.coord(v, i)));
            }
        }
        let root_coords: Vec<usize> = parts.iter().map(|p| p.root).collect();
        let root = coords.vertex_at_coords(&root_coords)?;
        let sizes = parts
            .iter()
            .flat_map(|p| p.factors.iter().map(ShadowGraph::vertex_count))
            .collect();
        let coordinates = Coordinatization::from_flat(sizes, n, flat, root)?;
        let mut edge_colors = Vec::with_capacity(product.edge_count());
        for e in product.edges() {
            let i = coords
                .differing_position(e.a, e.b)
                .ok_or_else(|| Error::Mismatch(format!("{}{} is not a product edge", e.a, e.b)))?;
            let (x, y) = (coords.coord(e.a, i), coords.coord(e.b, i));
            let fe = factor_shadows[i]
                .edge_id(x, y)
                .ok_or_else(|| Error::Mismatch(format!("{x}{y} is not an edge of factor {i}")))?;
            edge_colors.push(offsets[i] + parts[i].edge_colors[fe]);
        }
        Ok(ShadowFactorization {
            root,
            edge_colors,
            factors: parts
                .iter()
                .flat_map(|p| p.factors.iter().cloned())
                .collect(),
            coordinates,
        })
    }
}

/// Factors a connected shadow, rooting the coordinates at `root`.
pub fn factor_shadow(shadow: &ShadowGraph, root: usize) -> Result<ShadowFactorization> {
    let bfs = BfsOrder::new(shadow, root)?;
    factor_shadow_with_bfs(shadow, &bfs)
}

/// [`factor_shadow`] reusing an existing BFS order.
pub fn factor_shadow_with_bfs(shadow: &ShadowGraph, bfs: &BfsOrder) -> Result<ShadowFactorization> {
    if shadow.vertex_count() != bfs.order().len() {
        return Err(Error::Mismatch(
            "BFS order does not cover the shadow".into(),
        ));
    }
    if shadow.vertex_count() == 1 {
        return Ok(ShadowFactorization::unit());
    }
    let colors = product_coloring(shadow, bfs);
    let (coordinates, factors) = coordinates_from_colors(shadow, bfs.root(), &colors)?;
    Ok(ShadowFactorization {
        root: bfs.root(),
        edge_colors: colors,
        factors,
        coordinates,
    })
}

/// Edge coloring by the classes of `(θ_T ∪ τ)*`.
///
/// Colors are numbered by the smallest key of any edge in the class, where
/// an edge's key is the pair of its endpoints' BFS numbers, smaller first.
pub fn product_coloring(shadow: &ShadowGraph, bfs: &BfsOrder) -> Vec<usize> {
    let m = shadow.edge_count();
    let mut uf = UnionFind::<usize>::new(m);

    for &child in &bfs.order()[1..] {
        let parent = bfs.down(child)[0];
        let dp = shadow.distances_from(parent.to);
        let dc = shadow.distances_from(child);
        for (f, e) in shadow.edges().iter().enumerate() {
            if dp[e.a] + dc[e.b] != dp[e.b] + dc[e.a] {
                uf.union(parent.edge, f);
            }
        }
    }

    for x in 0..shadow.vertex_count() {
        let row = shadow.links(x);
        for (i, ly) in row.iter().enumerate() {
            for lz in &row[i + 1..] {
                if !shadow.adjacent(ly.to, lz.to) && only_common_neighbor(shadow, ly.to, lz.to, x) {
                    uf.union(ly.edge, lz.edge);
                }
            }
        }
    }

    let key = |e: usize| {
        let edge = shadow.edge(e);
        let (p, q) = (bfs.number(edge.a), bfs.number(edge.b));
        (p.min(q), p.max(q))
    };
    let mut best = vec![(NONE, NONE); m];
    let reps: Vec<usize> = (0..m).map(|e| uf.find(e)).collect();
    for e in 0..m {
        best[reps[e]] = best[reps[e]].min(key(e));
    }
    let mut classes: Vec<usize> = (0..m).filter(|&e| reps[e] == e).collect();
    classes.sort_unstable_by_key(|&r| best[r]);
    let mut color_of_rep = vec![NONE; m];
    for (c, &r) in classes.iter().enumerate() {
        color_of_rep[r] = c;
    }
    reps.iter().map(|&r| color_of_rep[r]).collect()
}

fn only_common_neighbor(shadow: &ShadowGraph, y: usize, z: usize, x: usize) -> bool {
    let (ry, rz) = (shadow.links(y), shadow.links(z));
    let (mut i, mut j) = (0, 0);
    while i < ry.len() && j < rz.len() {
        let (a, b) = (ry[i].to, rz[j].to);
        if a < b {
            i += 1;
        } else if b < a {
            j += 1;
        } else {
            if a != x {
                return false;
            }
            i += 1;
            j += 1;
        }
    }
    true
}

/// Coordinates from a product coloring.
///
/// For color `i`, the `i`-coordinate of `v` is the unique vertex where the
/// component of `v` in the subgraph of non-`i` edges meets the unit layer of
/// color `i` (the component of `root` in the `i`-colored edges). Unit-layer
/// vertices are numbered in BFS order from the root within the layer, so the
/// root has all coordinates zero. Returns the coordinatization and the
/// factors `Z_i`; fails if `colors` is not a product coloring.
pub fn coordinates_from_colors(
    shadow: &ShadowGraph,
    root: usize,
    colors: &[usize],
) -> Result<(Coordinatization, Vec<ShadowGraph>)> {
    let n = shadow.vertex_count();
    let m = shadow.edge_count();
    if root >= n {
        return Err(Error::IdOutOfRange { id: root, n });
    }
    if colors.len() != m {
        return Err(Error::InvalidColoring(format!(
            "{} colors for {m} edges",
            colors.len()
        )));
    }
    let k = colors.iter().max().map_or(0, |&c| c + 1);
    let mut used = vec![false; k];
    for &c in colors {
        used[c] = true;
    }
    if let Some(c) = used.iter().position(|&u| !u) {
        return Err(Error::InvalidColoring(format!("color {c} is unused")));
    }
    if k == 0 {
        return if n == 1 {
            Ok((Coordinatization::unit(), Vec::new()))
        } else {
            Err(Error::Disconnected)
        };
    }

    let mut flat = vec![NONE; n * k];
    let mut sizes = Vec::with_capacity(k);
    let mut factors = Vec::with_capacity(k);
    let mut component = vec![NONE; n];
    let mut local = vec![NONE; n];
    let mut queue = Vec::new();
    for i in 0..k {
        // unit layer of color i, numbered in BFS order
        let mut layer = vec![root];
        local[root] = 0;
        let mut head = 0;
        while head < layer.len() {
            let v = layer[head];
            head += 1;
            for l in shadow.links(v) {
                if colors[l.edge] == i && local[l.to] == NONE {
                    local[l.to] = layer.len();
                    layer.push(l.to);
                }
            }
        }
        // components of the non-i edges
        component.fill(NONE);
        let mut count = 0;
        for s in 0..n {
            if component[s] != NONE {
                continue;
            }
            component[s] = count;
            queue.clear();
            queue.push(s);
            while let Some(v) = queue.pop() {
                for l in shadow.links(v) {
                    if colors[l.edge] != i && component[l.to] == NONE {
                        component[l.to] = count;
                        queue.push(l.to);
                    }
                }
            }
            count += 1;
        }
        if count != layer.len() {
            return Err(Error::InvalidColoring(format!(
                "color {i}: {count} complementary components but a unit layer of {} vertices",
                layer.len()
            )));
        }
        let mut meet = vec![NONE; count];
        for &u in &layer {
            if meet[component[u]] != NONE {
                return Err(Error::InvalidColoring(format!(
                    "color {i}: unit layer meets a complementary component twice"
                )));
            }
            meet[component[u]] = local[u];
        }
        for v in 0..n {
            flat[v * k + i] = meet[component[v]];
        }
        let mut edges = Vec::new();
        for &u in &layer {
            for l in shadow.links(u) {
                if colors[l.edge] == i && u < l.to {
                    edges.push((local[u], local[l.to]));
                }
            }
        }
        factors.push(ShadowGraph::undirected(layer.len(), edges)?);
        sizes.push(layer.len());
        for &u in &layer {
            local[u] = NONE;
        }
    }

    let coordinates = Coordinatization::from_flat(sizes, n, flat, root)
        .map_err(|e| Error::InvalidColoring(e.to_string()))?;

    // every edge must change exactly its own color's coordinate along a
    // factor edge, and the edge counts must match the product
    for (id, e) in shadow.edges().iter().enumerate() {
        let c = colors[id];
        if coordinates.differing_position(e.a, e.b) != Some(c)
            || !factors[c].adjacent(coordinates.coord(e.a, c), coordinates.coord(e.b, c))
        {
            return Err(Error::InvalidColoring(format!(
                "edge {}{} is not a layer edge of color {c}",
                e.a, e.b
            )));
        }
    }
    let expected: usize = factors
        .iter()
        .map(|f| f.edge_count() * (n / f.vertex_count()))
        .sum();
    if expected != m {
        return Err(Error::InvalidColoring(format!(
            "product of the factors has {expected} edges, graph has {m}"
        )));
    }
    Ok((coordinates, factors))
}
