//! Generated relations, composition and congruence enumeration.

use std::sync::Arc;

use ordalg::corpus::{bottom_chain_model, cyclic_group};
use ordalg::relations::{compose, enumerate_congruences, generate_relation, is_ideal, ClosureMode, DEFAULT_CAP};

fn main() {
    let z4 = Arc::new(cyclic_group(4));
    let cong = enumerate_congruences(&z4, DEFAULT_CAP);
    println!("Z4 has {} congruences ({:?}):", cong.relations.len(), cong.method);
    for r in &cong.relations {
        println!("  {r}");
    }

    let r = generate_relation(z4.clone(), z4.clone(), &[(0, 2)], ClosureMode::Congruence).unwrap();
    let c = compose(&r, &r).unwrap();
    println!("\nR = {}\nR;R = {} (closure added {} pairs)", r, c.relation, c.added_by_operations + c.added_by_ideal_closure);

    let chain = Arc::new(bottom_chain_model(3));
    let d = generate_relation(chain.clone(), chain.clone(), &[(1, 1)], ClosureMode::Ideal).unwrap();
    println!("\nideal generated by (1,1) on the 3-chain: {d}");
    println!("is an ideal: {}", is_ideal(&d).is_ok());
    println!("trace:");
    for step in &d.provenance().trace {
        println!("  {} via {:?}", d.pair_name(step.pair), step.rule);
    }
}
