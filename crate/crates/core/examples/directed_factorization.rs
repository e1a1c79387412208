//! Factor loopless directed graphs; a directed 4-cycle forces a merge.

use cartfactor::directed::factor_directed;
use cartfactor::graph::{parse_graph, BfsOrder};
use cartfactor::shadow_factor::factor_shadow;

fn show(name: &str, text: &str) -> cartfactor::Result<()> {
    let g = parse_graph(text)?;
    let s = g.shadow();
    let sf = factor_shadow(&s, 0)?;
    let bfs = BfsOrder::new(&s, 0)?;
    let f = factor_directed(&g, &s, &sf, &bfs)?;
    println!(
        "{name}: {} shadow factors, {} directed factors",
        sf.factor_count(),
        f.factor_count()
    );
    for m in f.merges() {
        println!(
            "  merge at vertex {} (level {}): classes {:?} -> {}",
            m.vertex, m.level, m.classes, m.survivor
        );
    }
    for (i, factor) in f.factors().iter().enumerate() {
        print!("  factor {i}:\n{factor}");
    }
    Ok(())
}

fn main() -> cartfactor::Result<()> {
    show("consistent square", "n 4\na 0 2\na 1 3\na 0 1\na 2 3")?;
    show("directed 4-cycle", "n 4\na 0 2\na 3 1\na 0 1\na 2 3")
}
