//! Cartesian products, coordinates, layers, projections, and product squares.
//!
//! A [`Coordinatization`] is a bijection between the vertices of a host graph
//! and the full grid `V(G_1) x ... x V(G_k)`. Grid points are addressed by a
//! row-major mixed-radix index (the last factor varies fastest), which turns
//! "replace coordinate `j`" into one multiply-add and makes projections cost
//! one term per kept position.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{DiGraph, ShadowGraph, NONE};

/// One coordinate per factor position.
pub type CoordVector = Vec<usize>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coordinatization {
    sizes: Vec<usize>,
    strides: Vec<usize>,
    coords: Vec<usize>,
    index_of: Vec<usize>,
    vertex_at: Vec<usize>,
    root: usize,
}

impl Coordinatization {
    /// Builds a coordinatization from per-vertex coordinate vectors.
    pub fn new(sizes: Vec<usize>, coords: &[CoordVector], root: usize) -> Result<Self> {
        let k = sizes.len();
        let mut flat = Vec::with_capacity(coords.len() * k);
        for (v, c) in coords.iter().enumerate() {
            if c.len() != k {
                return Err(Error::InvalidCoordinates(format!(
                    "vertex {v} has {} coordinates, expected {k}",
                    c.len()
                )));
            }
            flat.extend_from_slice(c);
        }
        Self::from_flat(sizes, coords.len(), flat, root)
    }

    /// Builds a coordinatization from a row-major `n x k` coordinate table.
    pub fn from_flat(sizes: Vec<usize>, n: usize, coords: Vec<usize>, root: usize) -> Result<Self> {
        let k = sizes.len();
        if let Some(i) = sizes.iter().position(|&s| s == 0) {
            return Err(Error::EmptyFactor(i));
        }
        let grid = sizes
            .iter()
            .try_fold(1usize, |acc, &s| acc.checked_mul(s))
            .ok_or_else(|| Error::InvalidCoordinates("grid size overflows".into()))?;
        if grid != n {
            return Err(Error::InvalidCoordinates(format!(
                "{n} vertices cannot fill a grid of {grid} points"
            )));
        }
        if coords.len() != n * k {
            return Err(Error::InvalidCoordinates(format!(
                "coordinate table has {} entries, expected {}",
                coords.len(),
                n * k
            )));
        }
        if root >= n {
            return Err(Error::IdOutOfRange { id: root, n });
        }
        let strides = strides_of(&sizes);
        let mut index_of = vec![0; n];
        let mut vertex_at = vec![NONE; n];
        for v in 0..n {
            let mut idx = 0;
            for (i, &c) in coords[v * k..(v + 1) * k].iter().enumerate() {
                if c >= sizes[i] {
                    return Err(Error::InvalidCoordinates(format!(
                        "vertex {v}: coordinate {i} is {c}, factor has {} vertices",
                        sizes[i]
                    )));
                }
                idx += c * strides[i];
            }
            if vertex_at[idx] != NONE {
                return Err(Error::InvalidCoordinates(format!(
                    "vertices {} and {v} share coordinates",
                    vertex_at[idx]
                )));
            }
            vertex_at[idx] = v;
            index_of[v] = idx;
        }
        Ok(Coordinatization {
            sizes,
            strides,
            coords,
            index_of,
            vertex_at,
            root,
        })
    }

    /// The identity coordinatization of a row-major product, rooted at 0.
    pub fn row_major(sizes: Vec<usize>) -> Result<Self> {
        let n: usize = sizes.iter().product();
        let strides = strides_of(&sizes);
        let k = sizes.len();
        let mut flat = Vec::with_capacity(n * k);
        for idx in 0..n {
            for i in 0..k {
                flat.push(idx / strides[i] % sizes[i]);
            }
        }
        Self::from_flat(sizes, n, flat, 0)
    }

    /// Coordinatization of the trivial graph by zero factors.
    pub fn unit() -> Self {
        Coordinatization {
            sizes: Vec::new(),
            strides: Vec::new(),
            coords: Vec::new(),
            index_of: vec![0],
            vertex_at: vec![0],
            root: 0,
        }
    }

    pub fn factor_count(&self) -> usize {
        self.sizes.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.index_of.len()
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn coords(&self, v: usize) -> &[usize] {
        let k = self.sizes.len();
        &self.coords[v * k..(v + 1) * k]
    }

    pub fn coord(&self, v: usize, i: usize) -> usize {
        self.coords[v * self.sizes.len() + i]
    }

    /// Mixed-radix index of `v`.
    pub fn grid_index(&self, v: usize) -> usize {
        self.index_of[v]
    }

    pub fn vertex_at_index(&self, idx: usize) -> usize {
        self.vertex_at[idx]
    }

    pub fn stride(&self, i: usize) -> usize {
        self.strides[i]
    }

    /// Vertex with the given coordinates.
    pub fn vertex_at_coords(&self, c: &[usize]) -> Result<usize> {
        if c.len() != self.sizes.len() || c.iter().zip(&self.sizes).any(|(&x, &s)| x >= s) {
            return Err(Error::InvalidCoordinates(format!(
                "{c:?} is not a grid point"
            )));
        }
        Ok(self.vertex_at[c
            .iter()
            .zip(&self.strides)
            .map(|(x, s)| x * s)
            .sum::<usize>()])
    }

    /// Projection of `v` into the layer through the root spanned by the
    /// positions in `keep`: `v`'s coordinates on `keep`, the root's elsewhere.
    pub fn project(&self, v: usize, keep: &[usize]) -> usize {
        let r = self.root;
        let mut idx = self.index_of[r];
        for &j in keep {
            idx = idx + self.coord(v, j) * self.strides[j] - self.coord(r, j) * self.strides[j];
        }
        self.vertex_at[idx]
    }

    /// The vertex obtained from `v` by setting coordinate `j` to `value`.
    pub fn replace(&self, v: usize, j: usize, value: usize) -> usize {
        let idx = self.index_of[v] + value * self.strides[j] - self.coord(v, j) * self.strides[j];
        self.vertex_at[idx]
    }

    /// Position where `u` and `v` differ, if they differ in exactly one.
    pub fn differing_position(&self, u: usize, v: usize) -> Option<usize> {
        let mut found = None;
        for (i, (a, b)) in self.coords(u).iter().zip(self.coords(v)).enumerate() {
            if a != b {
                if found.is_some() {
                    return None;
                }
                found = Some(i);
            }
        }
        found
    }

    /// Lines `c <v> <c_1> .. <c_k>` in vertex order.
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        for v in 0..self.vertex_count() {
            out.push_str("c ");
            out.push_str(&v.to_string());
            for c in self.coords(v) {
                let _ = write!(out, " {c}");
            }
            out.push('\n');
        }
        out
    }

    /// Reads coordinate rows as produced by [`Self::to_table`]. The root is
    /// the vertex whose coordinates are all zero.
    pub fn from_rows(sizes: Vec<usize>, n: usize, rows: &[(usize, Vec<usize>)]) -> Result<Self> {
        let mut table: Vec<Option<CoordVector>> = vec![None; n];
        for (v, c) in rows {
            if *v >= n {
                return Err(Error::IdOutOfRange { id: *v, n });
            }
            if table[*v].replace(c.clone()).is_some() {
                return Err(Error::InvalidCoordinates(format!(
                    "vertex {v} listed twice"
                )));
            }
        }
        let coords = table
            .into_iter()
            .enumerate()
            .map(|(v, c)| {
                c.ok_or_else(|| Error::InvalidCoordinates(format!("vertex {v} has no coordinates")))
            })
            .collect::<Result<Vec<_>>>()?;
        let root = coords
            .iter()
            .position(|c| c.iter().all(|&x| x == 0))
            .unwrap_or(0);
        Self::new(sizes, &coords, root)
    }
}

fn strides_of(sizes: &[usize]) -> Vec<usize> {
    let mut strides = vec![1; sizes.len()];
    for i in (0..sizes.len().saturating_sub(1)).rev() {
        strides[i] = strides[i + 1] * sizes[i + 1];
    }
    strides
}

/// Cartesian product of the factors, vertices in row-major order over the
/// factor list. A product vertex is looped iff one of its coordinates is.
pub fn cartesian_product(factors: &[DiGraph]) -> Result<(DiGraph, Coordinatization)> {
    if factors.is_empty() {
        return Err(Error::EmptyFactorList);
    }
    if let Some(i) = factors.iter().position(|f| f.vertex_count() == 0) {
        return Err(Error::EmptyFactor(i));
    }
    let coords = Coordinatization::row_major(factors.iter().map(DiGraph::vertex_count).collect())?;
    let n = coords.vertex_count();
    let arc_total: usize = factors
        .iter()
        .map(|f| f.arc_count() * (n / f.vertex_count()))
        .sum();
    let mut arcs = Vec::with_capacity(arc_total);
    let mut loops = Vec::new();
    for v in 0..n {
        let mut looped = false;
        for (i, f) in factors.iter().enumerate() {
            let c = coords.coord(v, i);
            looped |= f.is_looped(c);
            for &d in f.out_neighbors(c) {
                arcs.push((v, v + d * coords.stride(i) - c * coords.stride(i)));
            }
        }
        if looped {
            loops.push(v);
        }
    }
    Ok((DiGraph::new(n, arcs, loops)?, coords))
}

/// `p_X(v)` for the layer `X` through `root` spanned by the positions in
/// `keep`.
pub fn project_vertex(v: &[usize], keep: &[usize], root: &[usize]) -> CoordVector {
    let mut out = root.to_vec();
    for &j in keep {
        out[j] = v[j];
    }
    out
}

/// Compares the arcs on `{v, u}` with those on `{v2, u2}` under the
/// alignment `v <-> v2`, `u <-> u2`.
pub fn consistent_direction(
    g: &DiGraph,
    (v, u): (usize, usize),
    (v2, u2): (usize, usize),
) -> Result<bool> {
    for (a, b) in [(v, u), (v2, u2)] {
        let n = g.vertex_count();
        if a >= n || b >= n || a == b || !(g.has_arc(a, b) || g.has_arc(b, a)) {
            return Err(Error::NotAnEdge(a, b));
        }
    }
    Ok(g.has_arc(v, u) == g.has_arc(v2, u2) && g.has_arc(u, v) == g.has_arc(u2, v2))
}

/// The layer through the coordinatization's root spanned by `class`
/// (a set of factor positions), with arcs and loops read from `g`.
/// Returns the layer and its embedding (`layer id -> g id`).
pub fn unit_layer(
    g: &DiGraph,
    coords: &Coordinatization,
    class: &[usize],
) -> Result<(DiGraph, Vec<usize>)> {
    let k = coords.factor_count();
    if coords.vertex_count() != g.vertex_count() {
        return Err(Error::InvalidCoordinates(format!(
            "coordinatization covers {} vertices, graph has {}",
            coords.vertex_count(),
            g.vertex_count()
        )));
    }
    let mut positions = class.to_vec();
    positions.sort_unstable();
    for (i, &p) in positions.iter().enumerate() {
        if p >= k || (i > 0 && positions[i - 1] == p) {
            return Err(Error::UnknownClass(p));
        }
    }
    let root = coords.coords(coords.root()).to_vec();
    let mut embedding = Vec::new();
    let mut point = root.clone();
    'outer: loop {
        embedding.push(coords.vertex_at_coords(&point)?);
        // odometer over `positions`, last position fastest
        for &p in positions.iter().rev() {
            point[p] += 1;
            if point[p] < coords.sizes()[p] {
                continue 'outer;
            }
            point[p] = 0;
        }
        break;
    }
    let layer = g.induced(&embedding)?;
    Ok((layer, embedding))
}

/// The fourth corner of the product square spanned by the edges `vu` and
/// `vw`, which must carry different colors in `colors` (indexed by edge id).
pub fn product_square(
    shadow: &ShadowGraph,
    colors: &[usize],
    v: usize,
    u: usize,
    w: usize,
) -> Result<usize> {
    let vu = shadow.edge_id(v, u).ok_or(Error::NotAnEdge(v, u))?;
    let vw = shadow.edge_id(v, w).ok_or(Error::NotAnEdge(v, w))?;
    if colors[vu] == colors[vw] {
        return Err(Error::InvalidColoring(format!(
            "edges {v}{u} and {v}{w} share color {}",
            colors[vu]
        )));
    }
    if shadow.adjacent(u, w) {
        return Err(Error::NoProductSquare { v, u, w });
    }
    let mut corners = shadow
        .neighbors(u)
        .filter(|&x| x != v && shadow.adjacent(x, w) && !shadow.adjacent(x, v));
    let x = corners.next().ok_or(Error::NoProductSquare { v, u, w })?;
    if corners.next().is_some() {
        return Err(Error::AmbiguousProductSquare { v, u, w });
    }
    let ux = shadow.edge_id(u, x).expect("corner adjacent to u");
    let wx = shadow.edge_id(w, x).expect("corner adjacent to w");
    if colors[ux] != colors[vw] || colors[wx] != colors[vu] {
        return Err(Error::InvalidColoring(format!(
            "square {v}{u}{x}{w} has differently colored opposite edges"
        )));
    }
    Ok(x)
}
