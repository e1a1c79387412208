//! Factoring loopless directed graphs from a factorization of their shadow.
//!
//! Vertices are scanned in BFS order. For every down- and cross-edge `vu`
//! the edge is projected into the unit layer `X` of its temporary class; if
//! `vu` and `p_X(v) p_X(u)` are not consistently directed, the classes of all
//! down-edges of `v` are combined and the scan moves on to the next vertex.

use crate::error::{Error, Result};
use crate::factorization::{assemble, DirectedFactorization, MergeEvent, Projector};
use crate::graph::{BfsOrder, DiGraph, ShadowGraph};
use crate::partition::ColorPartition;
use crate::product::Coordinatization;
use crate::shadow_factor::ShadowFactorization;

/// Prime factorization of a connected loopless directed graph `g`, given the
/// prime factorization of its shadow and a BFS order rooted at the same
/// vertex.
pub fn factor_directed(
    g: &DiGraph,
    shadow: &ShadowGraph,
    sf: &ShadowFactorization,
    bfs: &BfsOrder,
) -> Result<DirectedFactorization> {
    if g.has_loops() {
        return Err(Error::UnexpectedLoops);
    }
    check_inputs(g, shadow, sf.coordinates(), sf.edge_colors(), bfs)?;
    let mut partition = ColorPartition::new(sf.factor_count());
    let merges = directed_pass(
        shadow,
        sf.coordinates(),
        sf.edge_colors(),
        bfs,
        &mut partition,
    )?;
    assemble(
        g,
        shadow,
        sf.coordinates(),
        sf.edge_colors(),
        bfs,
        partition,
        merges,
    )
}

pub(crate) fn check_inputs(
    g: &DiGraph,
    shadow: &ShadowGraph,
    coords: &Coordinatization,
    colors: &[usize],
    bfs: &BfsOrder,
) -> Result<()> {
    let n = g.vertex_count();
    if shadow.vertex_count() != n || coords.vertex_count() != n || bfs.order().len() != n {
        return Err(Error::Mismatch("vertex counts differ".into()));
    }
    if colors.len() != shadow.edge_count() {
        return Err(Error::Mismatch(format!(
            "{} edge colors for {} shadow edges",
            colors.len(),
            shadow.edge_count()
        )));
    }
    if coords.root() != bfs.root() {
        return Err(Error::Mismatch(format!(
            "coordinates rooted at {}, BFS at {}",
            coords.root(),
            bfs.root()
        )));
    }
    Ok(())
}

/// One scan over all vertices in BFS order, merging classes of `partition`
/// wherever an edge and its projection are inconsistently directed.
///
/// `coords` and `colors` describe a product coloring of `shadow`. Returns the
/// merges performed; run on a final partition it performs none.
pub fn directed_pass(
    shadow: &ShadowGraph,
    coords: &Coordinatization,
    colors: &[usize],
    bfs: &BfsOrder,
    partition: &mut ColorPartition,
) -> Result<Vec<MergeEvent>> {
    let mut merges = Vec::new();
    let mut projector = Projector::new(partition.color_count());
    for &v in bfs.order() {
        projector.next_vertex();
        for link in bfs.down(v).iter().chain(bfs.cross(v)) {
            let u = link.to;
            let color = colors[link.edge];
            let class = partition.class_of(color);
            let pv = projector.project(coords, partition, v, class);
            if pv == v {
                continue;
            }
            // u differs from v only in `color`, which the projection keeps
            let pu = coords.replace(pv, color, coords.coord(u, color));
            let projected = shadow.edge_id(pv, pu).ok_or_else(|| {
                Error::Mismatch(format!("projection {pv}{pu} of {v}{u} is not an edge"))
            })?;
            if shadow.oriented(link.edge, v, u) == shadow.oriented(projected, pv, pu) {
                continue;
            }
            let mut classes: Vec<usize> = bfs
                .down(v)
                .iter()
                .map(|d| partition.class_of(colors[d.edge]))
                .chain(std::iter::once(class))
                .collect();
            classes.sort_unstable();
            classes.dedup();
            debug_assert!(
                classes.len() > 1,
                "vertex {v} outside its layer has one down class"
            );
            let survivor = partition.merge_classes(&classes)?;
            merges.push(MergeEvent {
                vertex: v,
                level: bfs.level(v),
                classes,
                survivor,
            });
            break;
        }
    }
    Ok(merges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_graph;
    use crate::shadow_factor::factor_shadow;

    fn run(text: &str) -> DirectedFactorization {
        let g = parse_graph(text).unwrap();
        let s = g.shadow();
        let sf = factor_shadow(&s, 0).unwrap();
        let bfs = BfsOrder::new(&s, 0).unwrap();
        factor_directed(&g, &s, &sf, &bfs).unwrap()
    }

    #[test]
    fn consistent_square_has_two_arc_factors() {
        // 00=0, 01=1, 10=2, 11=3
        let f = run("n 4\na 0 2\na 1 3\na 0 1\na 2 3");
        assert_eq!(f.factor_count(), 2);
        for factor in f.factors() {
            assert_eq!(factor.to_string(), "n 2\na 0 1\n");
        }
        assert!(f.merges().is_empty());
    }

    #[test]
    fn directed_four_cycle_is_prime() {
        let f = run("n 4\na 0 2\na 3 1\na 0 1\na 2 3");
        assert_eq!(f.factor_count(), 1);
        assert_eq!(f.merges().len(), 1);
        assert_eq!(f.merges()[0].vertex, 3);
        assert_eq!(f.factors()[0].arc_count(), 4);
    }

    #[test]
    fn single_arc_is_prime() {
        let f = run("n 2\na 0 1");
        assert_eq!(f.factor_count(), 1);
        assert_eq!(f.factors()[0].to_string(), "n 2\na 0 1\n");
    }

    #[test]
    fn loops_are_rejected() {
        let g = parse_graph("n 2\na 0 1\nl 1").unwrap();
        let s = g.shadow();
        let sf = factor_shadow(&s, 0).unwrap();
        let bfs = BfsOrder::new(&s, 0).unwrap();
        assert_eq!(
            factor_directed(&g, &s, &sf, &bfs),
            Err(Error::UnexpectedLoops)
        );
    }

    #[test]
    fn mismatched_root_is_rejected() {
        let g = parse_graph("n 2\na 0 1").unwrap();
        let s = g.shadow();
        let sf = factor_shadow(&s, 0).unwrap();
        let bfs = BfsOrder::new(&s, 1).unwrap();
        assert!(matches!(
            factor_directed(&g, &s, &sf, &bfs),
            Err(Error::Mismatch(_))
        ));
    }
}
