//! Builtin theories, their printed form, and a theory defined by hand.

use ordalg::cli::{parse_document, print_theory};
use ordalg::oset::OSet;
use ordalg::theory::{binary_arity, builtin_theories, AxiomKind, TheoryBuilder};

fn main() {
    for t in builtin_theories() {
        let coherent = if t.is_coherent() { "coherent" } else { "non-coherent" };
        println!("{}: {} symbols, {} axioms, {coherent}", t.name, t.symbols.len(), t.axioms.len());
    }

    let semilattice = TheoryBuilder::new("Semilattice")
        .operation("join", binary_arity(), true)
        .axiom(OSet::discrete(&["a"]), "join(a,a)", AxiomKind::Eq, "a")
        .axiom(OSet::discrete(&["a", "b"]), "join(a,b)", AxiomKind::Eq, "join(b,a)")
        .axiom(OSet::discrete(&["a", "b"]), "a", AxiomKind::Le, "join(a,b)")
        .build()
        .unwrap();
    let text = print_theory(&semilattice);
    println!("\n{text}");
    let doc = parse_document(&text).unwrap();
    println!("re-parsed equal: {}", *doc.theories[0].1 == semilattice);
}
