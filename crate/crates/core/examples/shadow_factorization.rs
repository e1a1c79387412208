//! Factor the undirected shadow of a graph: edge colors and coordinates.

use cartfactor::graph::parse_graph;
use cartfactor::product::cartesian_product;
use cartfactor::shadow_factor::factor_shadow;

fn main() -> cartfactor::Result<()> {
    let path = parse_graph("n 3\na 0 1\na 1 2")?;
    let triangle = parse_graph("n 3\na 0 1\na 1 2\na 2 0")?;
    let (g, _) = cartesian_product(&[path, triangle])?;

    let sf = factor_shadow(&g.shadow(), 0)?;
    println!("shadow factors: {}", sf.factor_count());
    for (i, f) in sf.factors().iter().enumerate() {
        println!(
            "  factor {i}: {} vertices, {} edges",
            f.vertex_count(),
            f.edge_count()
        );
    }
    for (e, c) in g.shadow().edges().iter().zip(sf.edge_colors()) {
        println!("  edge {{{}, {}}} color {c}", e.a, e.b);
    }
    print!("{}", sf.coordinates().to_table());
    Ok(())
}
