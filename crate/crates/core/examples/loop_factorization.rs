//! Full pipeline on graphs with loops.

use cartfactor::graph::parse_graph;
use cartfactor::loops::factor_full_with_root;
use cartfactor::product::cartesian_product;

fn main() -> cartfactor::Result<()> {
    let a = parse_graph("n 2\na 0 1\na 1 0\nl 1")?;
    let b = parse_graph("n 2\na 0 1\na 1 0")?;
    let (g, _) = cartesian_product(&[a, b])?;
    let r = factor_full_with_root(&g, None)?;
    println!(
        "K2 with a loop x K2: {} factors, {} loop merges",
        r.factorization.factor_count(),
        r.loop_merges
    );
    for f in r.factorization.factors() {
        print!("{f}");
    }

    // a loop opposite the root cannot come from either K2
    let c4 = parse_graph("n 4\na 0 1\na 1 0\na 1 3\na 3 1\na 3 2\na 2 3\na 2 0\na 0 2\nl 3")?;
    let r = factor_full_with_root(&c4, None)?;
    println!(
        "C4 with one loop: {} loopless factors, {} after loops",
        r.loopless_factors,
        r.factorization.factor_count()
    );

    let all_looped = parse_graph("n 2\na 0 1\nl 0\nl 1")?;
    println!(
        "all looped: {}",
        factor_full_with_root(&all_looped, None).unwrap_err()
    );
    Ok(())
}
