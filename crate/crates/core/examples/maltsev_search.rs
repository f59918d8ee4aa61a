//! Term clones and the search for a Mal'tsev operation.

use std::sync::Arc;

use ordalg::clone::{exhaustive_maltsev, find_maltsev, generate_clone, maltsev_violation, SearchBudget};
use ordalg::corpus::{bottom_chain_model, cyclic_group};
use ordalg::oset::OSet;
use ordalg::theory::ternary_arity;

fn main() {
    let budget = SearchBudget::default();
    let z3 = Arc::new(cyclic_group(3));
    let clone = generate_clone(&z3, &ternary_arity(), &budget);
    println!("ternary term operations of Z3: {} (complete: {})", clone.len(), clone.is_complete());
    let s = find_maltsev(&z3, &budget, false);
    if let Some(w) = &s.witness {
        println!("Z3 Mal'tsev term: {}", w.term.as_deref().unwrap_or("?"));
    }

    let chain = Arc::new(bottom_chain_model(2));
    let s = find_maltsev(&chain, &budget, false);
    println!("\n2-chain: witness {:?}, conclusive {}", s.witness.map(|w| w.table), s.complete);

    // any monotone rho on a chain breaks the inequalities
    let n = 2;
    let first: Vec<usize> = (0..n * n * n).map(|i| i / (n * n)).collect();
    let (a, b, c) = maltsev_violation(&OSet::chain(n), &first).unwrap();
    println!("rho = first projection fails at ({a},{b},{c})");
    println!("any monotone table on the 2-chain: {:?}", exhaustive_maltsev(&OSet::chain(2)));
    println!("on the codiscrete 2-set: {:?}", exhaustive_maltsev(&OSet::codiscrete(2)).is_some());
}
