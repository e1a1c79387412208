//! Generate a random product, factor it, and check the result with the
//! brute-force oracles.

use cartfactor::loops::factor_full;
use cartfactor::oracle::{
    brute_force_prime, gen_product_instance, reconstruct_check, same_factor_multiset, GenParams,
    OracleBounds,
};

fn main() -> cartfactor::Result<()> {
    let bounds = OracleBounds::default();
    let params = GenParams {
        factors: 3,
        min_size: 2,
        max_size: 4,
        loop_probability: 0.3,
        seed: 7,
        ..GenParams::default()
    };
    let inst = gen_product_instance(&params, &bounds)?;
    println!(
        "instance: {} vertices, {} arcs",
        inst.graph.vertex_count(),
        inst.graph.size()
    );

    let f = factor_full(&inst.graph)?;
    println!("factors found: {}", f.factor_count());
    println!("reconstructs: {}", reconstruct_check(&inst.graph, &f)?);
    println!(
        "matches ground truth: {}",
        same_factor_multiset(f.factors(), &inst.factors, &bounds)?
    );
    for factor in f.factors() {
        if factor.shadow().edge_count() <= bounds.max_edges {
            println!(
                "  factor with {} vertices prime by brute force: {}",
                factor.vertex_count(),
                brute_force_prime(factor, &bounds)?
            );
        }
    }
    Ok(())
}
