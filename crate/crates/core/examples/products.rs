//! Build Cartesian products and read off coordinates, layers and projections.

use cartfactor::graph::parse_graph;
use cartfactor::product::{cartesian_product, unit_layer};

fn main() -> cartfactor::Result<()> {
    let a = parse_graph("n 2\na 0 1\na 1 0\nl 1")?;
    let b = parse_graph("n 3\na 0 1\na 1 2")?;
    let (g, coords) = cartesian_product(&[a.clone(), b.clone()])?;
    print!("A x B:\n{g}");
    print!("coordinates:\n{}", coords.to_table());

    // the layer of A through the root carries A's loop
    let (layer, embedding) = unit_layer(&g, &coords, &[0])?;
    println!("A-layer through {}: vertices {embedding:?}", coords.root());
    print!("{layer}");

    let v = coords.vertex_at_coords(&[1, 2])?;
    println!(
        "projection of {v} onto the B-layer: {}",
        coords.project(v, &[1])
    );

    let (ba, _) = cartesian_product(&[b, a])?;
    println!("|A(AxB)| = {}, |A(BxA)| = {}", g.size(), ba.size());
    Ok(())
}
