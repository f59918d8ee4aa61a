//! Searching for and verifying (co)lax witnesses.

use std::sync::Arc;

use ordalg::algebra::Side;
use ordalg::clone::{find_proto_witnesses, verify_witnesses, SearchBudget, WitnessMode, Witnesses};
use ordalg::corpus::{bottom_chain_model, top_element_model};

fn main() {
    let budget = SearchBudget::default();
    for (name, a, side) in [
        ("bottom 5-chain, lax", Arc::new(bottom_chain_model(5)), Side::Lax),
        ("top 3-chain, colax", Arc::new(top_element_model(3)), Side::Colax),
    ] {
        let s = find_proto_witnesses(&a, 1, &budget, side).unwrap();
        match s.witness {
            Some(w) => println!("{name}: alpha = {}, theta = {}", w.alphas[0].term_text(), w.theta.term_text()),
            None => println!("{name}: none found"),
        }
    }

    let chain = bottom_chain_model(2);
    let good = Witnesses::parse_proto(&chain, &["alpha(x,y)"], "theta(z1,y)").unwrap();
    let r = verify_witnesses(&chain, &good, WitnessMode::Lax).unwrap();
    println!("\nlax check of the model's own operations: {} instances, passed {}", r.checked, r.passed());
    let r = verify_witnesses(&chain, &good, WitnessMode::Colax).unwrap();
    println!("colax check: passed {}", r.passed());
    if let Some(f) = r.failures.first() {
        println!("  first failure: {f}");
    }
}
