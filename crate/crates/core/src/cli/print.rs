//! Printing objects back into the definition language.

use std::fmt::Write;

use crate::algebra::{Algebra, Homomorphism};
use crate::oset::OSet;
use crate::theory::Theory;

use super::document::{Kind, SourceDocument};

pub fn print_oset(name: &str, o: &OSet) -> String {
    let mut out = format!("oset {name} {{ elements: {};", o.names().join(" "));
    let le: Vec<String> = o.strict_pairs().iter().map(|&(a, b)| format!("{}<={}", o.name(a), o.name(b))).collect();
    if !le.is_empty() {
        write!(out, " le: {};", le.join(", ")).unwrap();
    }
    out.push_str(" }\n");
    out
}

/// The theory block preceded by `oset` blocks for its arities and axiom
/// contexts, named `THEORY.op` and `THEORY.axN`.
pub fn print_theory(t: &Theory) -> String {
    let mut out = String::new();
    let mut body = String::new();
    for s in &t.symbols {
        if s.is_constant() {
            writeln!(body, "  const {};", s.name).unwrap();
            continue;
        }
        let arity = format!("{}.{}", t.name, s.name);
        out.push_str(&print_oset(&arity, &s.arity));
        let tag = if s.coherent { "" } else { " noncoherent" };
        writeln!(body, "  op {} : arity {arity}{tag};", s.name).unwrap();
    }
    for (i, ax) in t.axioms.iter().enumerate() {
        let ctx = format!("{}.ax{i}", t.name);
        out.push_str(&print_oset(&ctx, &ax.context));
        writeln!(
            body,
            "  axiom {} {ctx} : {} {} {};",
            ax.kind.keyword(),
            ax.lhs.display(t, &ax.context),
            ax.kind.symbol(),
            ax.rhs.display(t, &ax.context)
        )
        .unwrap();
    }
    write!(out, "theory {} {{\n{body}}}\n", t.name).unwrap();
    out
}

/// Tables list every defined entry in lexicographic tuple order.
pub fn print_algebra(name: &str, a: &Algebra, carrier: &str) -> String {
    let th = a.theory();
    let mut out = format!("algebra {name} over {} {{\n  carrier {carrier};\n", th.name);
    for (op, s) in th.symbols.iter().enumerate() {
        if s.is_constant() {
            let v = a.apply(op, &[]).expect("constants are defined");
            writeln!(out, "  const {} = {};", s.name, a.name(v)).unwrap();
            continue;
        }
        write!(out, "  table {}:", s.name).unwrap();
        for (args, v) in a.entries(op) {
            write!(out, " {}->{}", a.tuple_name(&args), a.name(v)).unwrap();
        }
        out.push_str(";\n");
    }
    out.push_str("}\n");
    out
}

pub fn print_hom(name: &str, h: &Homomorphism, dom: &str, cod: &str) -> String {
    let mut out = format!("hom {name} : {dom} -> {cod} {{");
    for x in 0..h.dom().size() {
        write!(out, " {}->{};", h.dom().name(x), h.cod().name(h.apply(x))).unwrap();
    }
    out.push_str(" }\n");
    out
}

/// Prints every declaration in order. Carriers and hom endpoints are
/// matched back to declared names by value.
pub fn print_document(doc: &SourceDocument) -> String {
    let oset_name = |o: &OSet| doc.osets.iter().find(|(_, x)| x == o).map(|(n, _)| n.as_str()).unwrap_or("?");
    let alg_name = |a: &Algebra| doc.algebras.iter().find(|(_, x)| **x == *a).map(|(n, _)| n.as_str()).unwrap_or("?");
    let mut out = String::new();
    for (kind, name) in &doc.order {
        match kind {
            Kind::Oset => out.push_str(&print_oset(name, doc.oset(name).unwrap())),
            Kind::Theory => {
                let t = doc.theory(name).unwrap();
                // arity and context osets are reprinted by the theory block
                out.push_str(&print_theory_block_only(&t, &oset_name));
            }
            Kind::Algebra => {
                let a = doc.algebra(name).unwrap();
                out.push_str(&print_algebra(name, a, oset_name(a.carrier())));
            }
            Kind::Hom => {
                let h = doc.hom(name).unwrap();
                out.push_str(&print_hom(name, h, alg_name(h.dom()), alg_name(h.cod())));
            }
            Kind::Diagram => {
                let d = &doc.diagram(name).unwrap().names;
                writeln!(
                    out,
                    "diagram {name} {{ split {} {} over {}; split {} {} over {}; maps {} {} {}; }}",
                    d.top[0], d.top[1], d.top[2], d.bottom[0], d.bottom[1], d.bottom[2], d.maps[0], d.maps[1], d.maps[2]
                )
                .unwrap();
            }
        }
        out.push('\n');
    }
    out
}

fn print_theory_block_only<'a>(t: &Theory, oset_name: &impl Fn(&OSet) -> &'a str) -> String {
    let mut out = format!("theory {} {{\n", t.name);
    for s in &t.symbols {
        if s.is_constant() {
            writeln!(out, "  const {};", s.name).unwrap();
        } else {
            let tag = if s.coherent { "" } else { " noncoherent" };
            writeln!(out, "  op {} : arity {}{tag};", s.name, oset_name(&s.arity)).unwrap();
        }
    }
    for ax in &t.axioms {
        writeln!(
            out,
            "  axiom {} {} : {} {} {};",
            ax.kind.keyword(),
            oset_name(&ax.context),
            ax.lhs.display(t, &ax.context),
            ax.kind.symbol(),
            ax.rhs.display(t, &ax.context)
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::super::document::parse_document;
    use super::*;
    use crate::corpus::named_models;
    use crate::theory::builtin_theories;

    #[test]
    fn builtin_theories_round_trip() {
        for t in builtin_theories() {
            let text = print_theory(&t);
            let doc = parse_document(&text).unwrap_or_else(|e| panic!("{}: {e}\n{text}", t.name));
            assert_eq!(*doc.theories[0].1, t, "{text}");
        }
    }

    #[test]
    fn named_models_round_trip() {
        for m in named_models() {
            let a = &m.algebra;
            let text = format!("{}{}", print_oset("C", a.carrier()), print_algebra("M", a, "C"));
            let doc = parse_document(&text).unwrap_or_else(|e| panic!("{}: {e}\n{text}", m.name));
            assert_eq!(**doc.algebra("M").unwrap(), **a, "{text}");
        }
    }

    #[test]
    fn document_round_trip() {
        let text = "
            oset C2 { elements: 0 1; le: 0<=1; }
            algebra A over LaxProto1 { carrier C2; const 0 = 0; op alpha(x,y) = x; op theta(x,y) = x; }
            hom id : A -> A { 0->0; 1->1; }
        ";
        let doc = parse_document(text).unwrap();
        let printed = print_document(&doc);
        let again = parse_document(&printed).unwrap();
        assert_eq!(print_document(&again), printed);
        assert_eq!(again.hom("id").unwrap().map(), doc.hom("id").unwrap().map());
    }
}
