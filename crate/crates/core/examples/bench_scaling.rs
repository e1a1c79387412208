//! Per-arc running time of the directed and loop stages as the input grows.
//!
//! Run with `cargo run --release --example bench_scaling [family] [max-arcs]`.

use cartfactor::bench::{run_bench, spread, to_csv, Family};

fn main() -> cartfactor::Result<()> {
    let mut args = std::env::args().skip(1);
    let family: Family = args.next().as_deref().unwrap_or("cube").parse()?;
    let max_arcs = args.next().and_then(|s| s.parse().ok()).unwrap_or(200_000);
    let rows = run_bench(family, 1_000, max_arcs, 5)?;
    print!("{}", to_csv(&rows));
    println!("spread: {:.3}", spread(&rows));
    Ok(())
}
