//! The zig-zag property of ideals against permutability of congruences.

use std::sync::Arc;

use ordalg::checks::{check_ord_maltsev, check_permutability};
use ordalg::corpus::named_models;
use ordalg::relations::DEFAULT_CAP;

fn main() {
    println!("{:<22} {:>12} {:>14}", "algebra", "zig-zag", "permutable");
    for m in named_models() {
        let a: &Arc<_> = &m.algebra;
        let z = check_ord_maltsev(a, a, DEFAULT_CAP).unwrap();
        let p = check_permutability(a, DEFAULT_CAP);
        println!("{:<22} {:>12} {:>14}", m.name, z.verdict.to_string(), p.verdict.to_string());
        if let Some(c) = z.counterexamples.first() {
            println!("    {c}");
        }
    }
}
