//! Result type shared by the directed and the loop factorizer, and the step
//! that turns a final color partition into factor graphs.

use crate::error::{Error, Result};
use crate::graph::{BfsOrder, DiGraph, ShadowGraph, NONE};
use crate::partition::ColorPartition;
use crate::product::Coordinatization;

/// One merge performed during a scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MergeEvent {
    /// Vertex whose scan triggered the merge.
    pub vertex: usize,
    /// BFS level of that vertex.
    pub level: usize,
    /// Classes that were unified.
    pub classes: Vec<usize>,
    /// Surviving class id.
    pub survivor: usize,
}

/// Prime factors of a directed graph (with or without loops) together with
/// the coordinates of its vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectedFactorization {
    partition: ColorPartition,
    classes: Vec<Vec<usize>>,
    factors: Vec<DiGraph>,
    coordinates: Coordinatization,
    edge_factors: Vec<usize>,
    merges: Vec<MergeEvent>,
}

impl DirectedFactorization {
    /// The empty factorization of the trivial graph.
    pub fn unit() -> Self {
        DirectedFactorization {
            partition: ColorPartition::new(0),
            classes: Vec::new(),
            factors: Vec::new(),
            coordinates: Coordinatization::unit(),
            edge_factors: Vec::new(),
            merges: Vec::new(),
        }
    }

    pub fn factor_count(&self) -> usize {
        self.factors.len()
    }

    pub fn factors(&self) -> &[DiGraph] {
        &self.factors
    }

    pub fn into_factors(self) -> Vec<DiGraph> {
        self.factors
    }

    /// Coordinates of the host graph's vertices over [`Self::factors`].
    pub fn coordinates(&self) -> &Coordinatization {
        &self.coordinates
    }

    /// Final partition of the input colors.
    pub fn partition(&self) -> &ColorPartition {
        &self.partition
    }

    /// Input colors making up factor `i`.
    pub fn factor_colors(&self, i: usize) -> &[usize] {
        &self.classes[i]
    }

    /// Factor index of every shadow edge, indexed by edge id.
    pub fn edge_factors(&self) -> &[usize] {
        &self.edge_factors
    }

    pub fn merges(&self) -> &[MergeEvent] {
        &self.merges
    }
}

/// Builds the factors `G_i` from the final partition: `G_i` is the subgraph
/// of `g` induced on the unit layer of class `i`, its vertices numbered in
/// increasing order of their ids in `g`. Factors are ordered by their
/// smallest input color.
pub(crate) fn assemble(
    g: &DiGraph,
    shadow: &ShadowGraph,
    coords: &Coordinatization,
    colors: &[usize],
    bfs: &BfsOrder,
    partition: ColorPartition,
    merges: Vec<MergeEvent>,
) -> Result<DirectedFactorization> {
    let n = g.vertex_count();
    let root = bfs.root();
    let mut classes: Vec<usize> = partition.classes().collect();
    classes.sort_unstable_by_key(|&c| partition.members(c).map(|m| m[0]).unwrap_or(NONE));
    if classes.is_empty() {
        return if n == 1 {
            Ok(DirectedFactorization {
                partition,
                merges,
                ..DirectedFactorization::unit()
            })
        } else {
            Err(Error::Mismatch("no colors for a nontrivial graph".into()))
        };
    }

    let mut factor_of_class = vec![NONE; partition.color_count()];
    let mut member_lists = Vec::with_capacity(classes.len());
    let mut factors = Vec::with_capacity(classes.len());
    let mut sizes = Vec::with_capacity(classes.len());
    // unit layers only share the root, so one table serves all of them
    let mut local = vec![NONE; n];
    let mut root_local = Vec::with_capacity(classes.len());
    for (fi, &class) in classes.iter().enumerate() {
        factor_of_class[class] = fi;
        let members = partition.members(class)?.to_vec();
        let mut layer = unit_layer_vertices(coords, &members);
        layer.sort_unstable();
        for (i, &v) in layer.iter().enumerate() {
            local[v] = i;
        }
        root_local.push(local[root]);
        let mut arcs = Vec::new();
        for &u in &layer {
            for l in shadow.links(u) {
                if partition.class_of(colors[l.edge]) == class && shadow.oriented(l.edge, u, l.to).0
                {
                    arcs.push((local[u], local[l.to]));
                }
            }
        }
        let loops: Vec<usize> = (0..layer.len())
            .filter(|&i| g.is_looped(layer[i]))
            .collect();
        factors.push(DiGraph::new(layer.len(), arcs, loops)?);
        sizes.push(layer.len());
        member_lists.push(members);
    }

    let k = classes.len();
    let mut flat = Vec::with_capacity(n * k);
    for v in 0..n {
        for (fi, members) in member_lists.iter().enumerate() {
            let p = coords.project(v, members);
            flat.push(if p == root { root_local[fi] } else { local[p] });
        }
    }
    let coordinates = Coordinatization::from_flat(sizes, n, flat, root)?;
    let edge_factors = colors
        .iter()
        .map(|&c| factor_of_class[partition.class_of(c)])
        .collect();
    Ok(DirectedFactorization {
        partition,
        classes: member_lists,
        factors,
        coordinates,
        edge_factors,
        merges,
    })
}

/// Vertices of the layer through the root spanned by `positions`.
fn unit_layer_vertices(coords: &Coordinatization, positions: &[usize]) -> Vec<usize> {
    let root = coords.root();
    let base = coords.grid_index(root);
    let start: usize = positions
        .iter()
        .map(|&j| coords.coord(root, j) * coords.stride(j))
        .sum();
    let base = base - start;
    let total: usize = positions.iter().map(|&j| coords.sizes()[j]).product();
    let mut out = Vec::with_capacity(total);
    let mut digits = vec![0; positions.len()];
    let mut offset = 0;
    loop {
        out.push(coords.vertex_at_index(base + offset));
        let mut p = positions.len();
        loop {
            if p == 0 {
                return out;
            }
            p -= 1;
            let j = positions[p];
            digits[p] += 1;
            offset += coords.stride(j);
            if digits[p] < coords.sizes()[j] {
                break;
            }
            offset -= digits[p] * coords.stride(j);
            digits[p] = 0;
        }
    }
}

/// Caches `p_X(v)` per class while one vertex is being scanned.
pub(crate) struct Projector {
    stamp: Vec<usize>,
    cached: Vec<usize>,
    visit: usize,
}

impl Projector {
    pub(crate) fn new(classes: usize) -> Self {
        Projector {
            stamp: vec![0; classes],
            cached: vec![NONE; classes],
            visit: 0,
        }
    }

    /// Starts a new vertex; invalidates every cached projection.
    pub(crate) fn next_vertex(&mut self) {
        self.visit += 1;
    }

    pub(crate) fn project(
        &mut self,
        coords: &Coordinatization,
        partition: &ColorPartition,
        v: usize,
        class: usize,
    ) -> usize {
        if self.stamp[class] != self.visit {
            let members = partition.members(class).expect("live class");
            self.cached[class] = coords.project(v, members);
            self.stamp[class] = self.visit;
        }
        self.cached[class]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn layer_enumeration_with_nonzero_root() {
        let coords = Coordinatization::row_major(vec![3, 2, 4]).unwrap();
        let mut c = coords.coords(0).to_vec();
        c.copy_from_slice(&[2, 1, 3]);
        let root = coords.vertex_at_coords(&c).unwrap();
        let rooted = Coordinatization::from_flat(
            vec![3, 2, 4],
            24,
            (0..24).flat_map(|v| coords.coords(v).to_vec()).collect(),
            root,
        )
        .unwrap();
        let mut layer = unit_layer_vertices(&rooted, &[0, 2]);
        layer.sort_unstable();
        let mut expected: Vec<usize> = (0..24).filter(|&v| coords.coord(v, 1) == 1).collect();
        expected.sort_unstable();
        assert_eq!(layer, expected);
        assert_eq!(unit_layer_vertices(&rooted, &[]), vec![root]);
    }
}
