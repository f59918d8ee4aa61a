//! Short five lemma instances over lax models and the pointed-set failure.

use ordalg::algebra::Side;
use ordalg::checks::{check_ss5l_instance, Verdict};
use ordalg::corpus::{lax_diagrams, lax_models, pointed_set_diagram};

fn main() {
    let models = lax_models(2);
    let diagrams = lax_diagrams(&models, 64);
    let mut passed = 0;
    for (name, d) in &diagrams {
        match check_ss5l_instance(d, Side::Lax) {
            Ok(r) if r.verdict == Verdict::Pass => passed += 1,
            Ok(r) => println!("{name}: {}", r.verdict),
            Err(e) => println!("{name}: {e}"),
        }
    }
    println!("{passed} of {} diagrams over {} lax models pass", diagrams.len(), models.len());

    let r = check_ss5l_instance(&pointed_set_diagram(), Side::Lax).unwrap();
    println!("\npointed sets: {}", r.verdict);
    for c in &r.counterexamples {
        println!("  {c}");
    }
}
