//! Parse a graph file, look at its shadow and BFS levels.

use cartfactor::graph::{parse_graph, BfsOrder};

fn main() -> cartfactor::Result<()> {
    let g = parse_graph(
        "# 4-cycle 0-1-3-2-0 with one one-way edge and a loop\n\
         n 4\na 0 1\na 1 0\na 1 3\na 3 1\na 2 3\na 0 2\na 2 0\nl 3\n",
    )?;
    print!("canonical form:\n{g}");

    let s = g.shadow();
    println!(
        "shadow: {} edges, min degree {}",
        s.edge_count(),
        s.min_degree()
    );
    for e in s.edges() {
        println!("  {{{}, {}}} {:?}", e.a, e.b, e.tag);
    }
    assert_eq!(s, g.strip_loops().shadow());

    let bfs = BfsOrder::new(&s, 0)?;
    for &v in bfs.order() {
        let down: Vec<usize> = bfs.down(v).iter().map(|l| l.to).collect();
        println!("  vertex {v}: level {}, down {down:?}", bfs.level(v));
    }
    println!("dist(0, 3) = {:?}", s.distance(0, 3));
    Ok(())
}
