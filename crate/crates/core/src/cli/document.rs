//! Parsing of definition documents.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::algebra::{check_homomorphism, Algebra, AlgebraBuilder, AlgebraError, Homomorphism};
use crate::checks::Ss5lDiagram;
use crate::oset::{MonotoneMap, OSet};
use crate::syntax::{lex, parse_raw_term, Pos, SyntaxError, Tok, Tokens};
use crate::theory::{builtin, wellformed_term, Axiom, AxiomKind, OperationSymbol, Theory};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DocumentError {
    #[error(transparent)]
    Syntax(#[from] SyntaxError),
    /// A block parsed and resolved but describes an invalid object.
    #[error("{pos}: {kind} `{name}` is invalid:\n{}", .problems.iter().map(|p| format!("  - {p}")).collect::<Vec<_>>().join("\n"))]
    Invalid { pos: Pos, kind: Kind, name: String, problems: Vec<String> },
}

impl DocumentError {
    pub fn pos(&self) -> Pos {
        match self {
            DocumentError::Syntax(e) => e.pos,
            DocumentError::Invalid { pos, .. } => *pos,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Oset,
    Theory,
    Algebra,
    Hom,
    Diagram,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Oset => "oset",
            Kind::Theory => "theory",
            Kind::Algebra => "algebra",
            Kind::Hom => "hom",
            Kind::Diagram => "diagram",
        })
    }
}

/// The names used by a `diagram` block, kept for printing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagramNames {
    pub top: [String; 3],
    pub bottom: [String; 3],
    /// `a`, `b`, `c`; `a` is `_` when left implicit.
    pub maps: [String; 3],
}

#[derive(Debug, Clone)]
pub struct DiagramDecl {
    pub names: DiagramNames,
    pub diagram: Ss5lDiagram,
}

/// A parsed document. Each list keeps declaration order.
#[derive(Debug, Clone, Default)]
pub struct SourceDocument {
    pub path: Option<String>,
    pub osets: Vec<(String, OSet)>,
    pub theories: Vec<(String, Arc<Theory>)>,
    pub algebras: Vec<(String, Arc<Algebra>)>,
    pub homs: Vec<(String, Homomorphism)>,
    pub diagrams: Vec<(String, DiagramDecl)>,
    pub order: Vec<(Kind, String)>,
}

fn find<'a, T>(list: &'a [(String, T)], name: &str) -> Option<&'a T> {
    list.iter().find(|(n, _)| n == name).map(|(_, t)| t)
}

impl SourceDocument {
    pub fn oset(&self, name: &str) -> Option<&OSet> {
        find(&self.osets, name)
    }

    /// Declared theories shadow builtins of the same name.
    pub fn theory(&self, name: &str) -> Option<Arc<Theory>> {
        find(&self.theories, name).cloned().or_else(|| builtin(name).map(Arc::new))
    }

    pub fn algebra(&self, name: &str) -> Option<&Arc<Algebra>> {
        find(&self.algebras, name)
    }

    pub fn hom(&self, name: &str) -> Option<&Homomorphism> {
        find(&self.homs, name)
    }

    pub fn diagram(&self, name: &str) -> Option<&DiagramDecl> {
        find(&self.diagrams, name)
    }

    fn declared(&self, kind: Kind, name: &str) -> bool {
        self.order.iter().any(|(k, n)| *k == kind && n == name)
    }

    /// Appends the declarations of `other`; names must stay unique per kind.
    pub fn merge(&mut self, other: SourceDocument) -> Result<(), String> {
        for (k, n) in &other.order {
            if self.declared(*k, n) {
                return Err(format!("{k} `{n}` is declared twice"));
            }
        }
        self.osets.extend(other.osets);
        self.theories.extend(other.theories);
        self.algebras.extend(other.algebras);
        self.homs.extend(other.homs);
        self.diagrams.extend(other.diagrams);
        self.order.extend(other.order);
        Ok(())
    }
}

pub fn parse_document(text: &str) -> Result<SourceDocument, DocumentError> {
    let mut p = Parser { toks: Tokens::new(lex(text)?), doc: SourceDocument::default() };
    while !p.toks.is_done() {
        let pos = p.toks.pos();
        let kw = p.toks.ident()?;
        match kw.as_str() {
            "oset" => p.oset()?,
            "theory" => p.theory()?,
            "algebra" => p.algebra()?,
            "hom" => p.hom()?,
            "diagram" => p.diagram()?,
            other => {
                return Err(err(pos, format!("expected a declaration (oset, theory, algebra, hom, diagram), found `{other}`")))
            }
        }
    }
    Ok(p.doc)
}

pub fn parse_file(path: &str) -> Result<SourceDocument, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?;
    let mut doc = parse_document(&text).map_err(|e| format!("{path}:{e}"))?;
    doc.path = Some(path.to_string());
    Ok(doc)
}

fn err(pos: Pos, message: impl Into<String>) -> DocumentError {
    DocumentError::Syntax(SyntaxError::new(pos, message))
}

struct Parser {
    toks: Tokens,
    doc: SourceDocument,
}

impl Parser {
    fn name(&mut self, kind: Kind) -> Result<(String, Pos), DocumentError> {
        let pos = self.toks.pos();
        let name = self.toks.ident()?;
        if self.doc.declared(kind, &name) {
            return Err(err(pos, format!("{kind} `{name}` is already declared")));
        }
        Ok((name, pos))
    }

    fn clause(&mut self) -> Result<Option<(String, Pos)>, DocumentError> {
        if self.toks.eat(&Tok::RBrace) {
            return Ok(None);
        }
        let pos = self.toks.pos();
        Ok(Some((self.toks.ident()?, pos)))
    }

    fn lookup_oset(&mut self) -> Result<OSet, DocumentError> {
        let pos = self.toks.pos();
        let name = self.toks.ident()?;
        self.doc.oset(&name).cloned().ok_or_else(|| err(pos, format!("unknown oset `{name}`")))
    }

    fn lookup_algebra(&mut self) -> Result<(String, Arc<Algebra>), DocumentError> {
        let pos = self.toks.pos();
        let name = self.toks.ident()?;
        let a = self.doc.algebra(&name).cloned().ok_or_else(|| err(pos, format!("unknown algebra `{name}`")))?;
        Ok((name, a))
    }

    fn lookup_hom(&mut self) -> Result<(String, Homomorphism), DocumentError> {
        let pos = self.toks.pos();
        let name = self.toks.ident()?;
        let h = self.doc.hom(&name).cloned().ok_or_else(|| err(pos, format!("unknown hom `{name}`")))?;
        Ok((name, h))
    }

    fn element(&mut self, carrier: &OSet) -> Result<usize, DocumentError> {
        let pos = self.toks.pos();
        let name = self.toks.ident()?;
        carrier.index_of(&name).ok_or_else(|| err(pos, format!("`{name}` is not an element of the carrier")))
    }

    fn oset(&mut self) -> Result<(), DocumentError> {
        let (name, pos) = self.name(Kind::Oset)?;
        self.toks.expect(&Tok::LBrace)?;
        let mut elements = Vec::new();
        let mut pairs = Vec::new();
        while let Some((clause, at)) = self.clause()? {
            self.toks.expect(&Tok::Colon)?;
            match clause.as_str() {
                "elements" => {
                    while !self.toks.eat(&Tok::Semi) {
                        elements.push(self.toks.ident()?);
                    }
                }
                "le" => {
                    while !self.toks.eat(&Tok::Semi) {
                        let a = self.toks.ident()?;
                        self.toks.expect(&Tok::Le)?;
                        let b = self.toks.ident()?;
                        pairs.push((a, b));
                        if !self.toks.eat(&Tok::Comma) {
                            self.toks.expect(&Tok::Semi)?;
                            break;
                        }
                    }
                }
                other => return Err(err(at, format!("expected `elements` or `le`, found `{other}`"))),
            }
        }
        let oset = OSet::validate(&elements, &pairs).map_err(|e| err(pos, format!("oset `{name}`: {e}")))?;
        self.doc.osets.push((name.clone(), oset));
        self.doc.order.push((Kind::Oset, name));
        Ok(())
    }

    fn theory(&mut self) -> Result<(), DocumentError> {
        let (name, pos) = self.name(Kind::Theory)?;
        self.toks.expect(&Tok::LBrace)?;
        let mut symbols: Vec<OperationSymbol> = Vec::new();
        let mut axioms = Vec::new();
        while let Some((clause, at)) = self.clause()? {
            match clause.as_str() {
                "const" => {
                    let sym = self.toks.ident()?;
                    self.toks.expect(&Tok::Semi)?;
                    symbols.push(OperationSymbol { name: sym, arity: OSet::empty(), coherent: true });
                }
                "op" => {
                    let sym = self.toks.ident()?;
                    self.toks.expect(&Tok::Colon)?;
                    self.toks.keyword("arity")?;
                    let arity = self.lookup_oset()?;
                    let coherent = if self.toks.peek_ident() == Some("noncoherent") {
                        self.toks.bump();
                        false
                    } else {
                        true
                    };
                    self.toks.expect(&Tok::Semi)?;
                    symbols.push(OperationSymbol { name: sym, arity, coherent });
                }
                "axiom" => {
                    let declared = match self.toks.peek_ident() {
                        Some("eq") => Some(AxiomKind::Eq),
                        Some("le") => Some(AxiomKind::Le),
                        _ => None,
                    };
                    if declared.is_some() {
                        self.toks.bump();
                    }
                    let context = self.lookup_oset()?;
                    self.toks.expect(&Tok::Colon)?;
                    let partial = Theory { name: name.clone(), symbols: symbols.clone(), axioms: Vec::new() };
                    let lhs_pos = self.toks.pos();
                    let lhs = parse_raw_term(&mut self.toks)?;
                    let rel_pos = self.toks.pos();
                    let kind = match self.toks.bump() {
                        Some(Tok::Eq) => AxiomKind::Eq,
                        Some(Tok::Le) => AxiomKind::Le,
                        _ => return Err(err(rel_pos, "expected `=` or `<=`")),
                    };
                    if declared.is_some_and(|d| d != kind) {
                        return Err(err(rel_pos, format!("axiom marked `{}` uses `{}`", declared.unwrap().keyword(), kind.symbol())));
                    }
                    let rhs_pos = self.toks.pos();
                    let rhs = parse_raw_term(&mut self.toks)?;
                    self.toks.expect(&Tok::Semi)?;
                    let lhs = wellformed_term(&lhs, &context, &partial).map_err(|e| err(lhs_pos, e.to_string()))?;
                    let rhs = wellformed_term(&rhs, &context, &partial).map_err(|e| err(rhs_pos, e.to_string()))?;
                    axioms.push(Axiom { context, lhs, rhs, kind });
                }
                other => return Err(err(at, format!("expected `const`, `op` or `axiom`, found `{other}`"))),
            }
        }
        let theory = Theory::new(name.clone(), symbols, axioms).map_err(|e| err(pos, format!("theory `{name}`: {e}")))?;
        self.doc.theories.push((name.clone(), Arc::new(theory)));
        self.doc.order.push((Kind::Theory, name));
        Ok(())
    }

    fn algebra(&mut self) -> Result<(), DocumentError> {
        let (name, pos) = self.name(Kind::Algebra)?;
        self.toks.keyword("over")?;
        let th_pos = self.toks.pos();
        let th_name = self.toks.ident()?;
        let theory = self.doc.theory(&th_name).ok_or_else(|| err(th_pos, format!("unknown theory `{th_name}`")))?;
        self.toks.expect(&Tok::LBrace)?;
        self.toks.keyword("carrier")?;
        let carrier = self.lookup_oset()?;
        self.toks.expect(&Tok::Semi)?;
        let mut b = AlgebraBuilder::new(theory.clone(), carrier.clone());
        while let Some((clause, at)) = self.clause()? {
            match clause.as_str() {
                "const" => {
                    let op = self.toks.ident()?;
                    self.toks.expect(&Tok::Eq)?;
                    let v = self.element(&carrier)?;
                    self.toks.expect(&Tok::Semi)?;
                    b = b.entry(&op, Vec::new(), v);
                }
                "table" => {
                    let op_pos = self.toks.pos();
                    let op = self.toks.ident()?;
                    if theory.symbol_index(&op).is_none() {
                        return Err(err(op_pos, format!("theory `{th_name}` has no operation `{op}`")));
                    }
                    self.toks.expect(&Tok::Colon)?;
                    while !self.toks.eat(&Tok::Semi) {
                        self.toks.expect(&Tok::LParen)?;
                        let mut args = Vec::new();
                        if !self.toks.eat(&Tok::RParen) {
                            loop {
                                args.push(self.element(&carrier)?);
                                if self.toks.eat(&Tok::RParen) {
                                    break;
                                }
                                self.toks.expect(&Tok::Comma)?;
                            }
                        }
                        self.toks.expect(&Tok::Arrow)?;
                        let v = self.element(&carrier)?;
                        b = b.entry(&op, args, v);
                        self.toks.eat(&Tok::Comma);
                    }
                }
                "op" => {
                    let op = self.toks.ident()?;
                    self.toks.expect(&Tok::LParen)?;
                    let mut vars = Vec::new();
                    if !self.toks.eat(&Tok::RParen) {
                        loop {
                            vars.push(self.toks.ident()?);
                            if self.toks.eat(&Tok::RParen) {
                                break;
                            }
                            self.toks.expect(&Tok::Comma)?;
                        }
                    }
                    self.toks.expect(&Tok::Eq)?;
                    let term = parse_raw_term(&mut self.toks)?;
                    self.toks.expect(&Tok::Semi)?;
                    let vars: Vec<&str> = vars.iter().map(String::as_str).collect();
                    b = b.op_term(&op, &vars, &term.to_string());
                }
                other => return Err(err(at, format!("expected `const`, `table` or `op`, found `{other}`"))),
            }
        }
        let algebra = b.build().map_err(|e| invalid(pos, Kind::Algebra, &name, e))?;
        self.doc.algebras.push((name.clone(), Arc::new(algebra)));
        self.doc.order.push((Kind::Algebra, name));
        Ok(())
    }

    fn hom(&mut self) -> Result<(), DocumentError> {
        let (name, pos) = self.name(Kind::Hom)?;
        self.toks.expect(&Tok::Colon)?;
        let (_, dom) = self.lookup_algebra()?;
        self.toks.expect(&Tok::Arrow)?;
        let (_, cod) = self.lookup_algebra()?;
        self.toks.expect(&Tok::LBrace)?;
        let mut values = vec![None; dom.size()];
        while !self.toks.eat(&Tok::RBrace) {
            let at = self.toks.pos();
            let x = self.element(dom.carrier())?;
            self.toks.expect(&Tok::Arrow)?;
            let y = self.element(cod.carrier())?;
            self.toks.expect(&Tok::Semi)?;
            if values[x].replace(y).is_some() {
                return Err(err(at, format!("`{}` is mapped twice", dom.name(x))));
            }
        }
        let missing: Vec<&str> = (0..dom.size()).filter(|&x| values[x].is_none()).map(|x| dom.name(x)).collect();
        if !missing.is_empty() {
            return Err(err(pos, format!("hom `{name}` leaves {} unmapped", missing.join(", "))));
        }
        let values = values.into_iter().map(Option::unwrap).collect();
        let hom = MonotoneMap::new(dom.carrier().clone(), cod.carrier().clone(), values)
            .map_err(|e| e.to_string())
            .and_then(|m| check_homomorphism(m, dom, cod).map_err(|e| e.to_string()))
            .map_err(|e| DocumentError::Invalid { pos, kind: Kind::Hom, name: name.clone(), problems: vec![e] })?;
        self.doc.homs.push((name.clone(), hom));
        self.doc.order.push((Kind::Hom, name));
        Ok(())
    }

    fn split(&mut self) -> Result<([String; 3], Homomorphism, Homomorphism), DocumentError> {
        let pos = self.toks.pos();
        self.toks.keyword("split")?;
        let (f_name, f) = self.lookup_hom()?;
        let (s_name, s) = self.lookup_hom()?;
        self.toks.keyword("over")?;
        let (b_name, b) = self.lookup_algebra()?;
        self.toks.expect(&Tok::Semi)?;
        if f.cod() != &b || s.dom() != &b || s.cod() != f.dom() {
            return Err(err(pos, format!("`{f_name}` and `{s_name}` do not form a split over `{b_name}`")));
        }
        Ok(([f_name, s_name, b_name], f, s))
    }

    fn diagram(&mut self) -> Result<(), DocumentError> {
        let (name, _) = self.name(Kind::Diagram)?;
        self.toks.expect(&Tok::LBrace)?;
        let (top, f, s) = self.split()?;
        let (bottom, f2, s2) = self.split()?;
        self.toks.keyword("maps")?;
        let a = if self.toks.peek_ident() == Some("_") {
            self.toks.bump();
            ("_".to_string(), None)
        } else {
            let (n, h) = self.lookup_hom()?;
            (n, Some(h))
        };
        let (b_name, b) = self.lookup_hom()?;
        let (c_name, c) = self.lookup_hom()?;
        self.toks.expect(&Tok::Semi)?;
        self.toks.expect(&Tok::RBrace)?;
        let names = DiagramNames { top, bottom, maps: [a.0, b_name, c_name] };
        let diagram = Ss5lDiagram { f, s, f2, s2, a: a.1, b, c };
        self.doc.diagrams.push((name.clone(), DiagramDecl { names, diagram }));
        self.doc.order.push((Kind::Diagram, name));
        Ok(())
    }
}

fn invalid(pos: Pos, kind: Kind, name: &str, e: AlgebraError) -> DocumentError {
    let problems = match e {
        AlgebraError::Invalid(v) => v.iter().map(ToString::to_string).collect(),
        other => vec![other.to_string()],
    };
    DocumentError::Invalid { pos, kind, name: name.to_string(), problems }
}

#[cfg(test)]
mod tests {
    use super::*;

    const CHAIN: &str = "
        oset C2 { elements: 0 1; le: 0<=1; }
        algebra A over LaxProto1 {
          carrier C2;
          const 0 = 0;
          op alpha(x,y) = x;
          table theta: (0,0)->0 (0,1)->0 (1,0)->1 (1,1)->1;
        }
    ";

    #[test]
    fn sugar_and_table_agree() {
        let doc = parse_document(CHAIN).unwrap();
        let a = doc.algebra("A").unwrap();
        let alpha = a.theory().symbol_index("alpha").unwrap();
        let theta = a.theory().symbol_index("theta").unwrap();
        assert_eq!(a.entries(alpha), a.entries(theta));
    }

    #[test]
    fn duplicate_names_rejected_with_position() {
        let e = parse_document("oset X { elements: a; }\noset X { elements: b; }").unwrap_err();
        assert_eq!(e.pos(), Pos { line: 2, col: 6 });
    }

    #[test]
    fn unknown_reference_is_positioned() {
        let e = parse_document("algebra A over Nope { carrier X; }").unwrap_err();
        assert_eq!(e.pos(), Pos { line: 1, col: 16 });
    }

    #[test]
    fn non_monotone_entry_names_the_arity_pair() {
        let text = "
            oset C2 { elements: 0 1; le: 0<=1; }
            algebra T over TruncMonoid {
              carrier C2;
              const 0 = 0;
              table +: (0,0)->0 (0,1)->1 (1,0)->1 (1,1)->1;
              table ⊖: (0,0)->0 (1,0)->1 (1,1)->0 (0,1)->0;
            }";
        let e = parse_document(text).unwrap_err();
        let DocumentError::Invalid { problems, .. } = e else { panic!("{e}") };
        assert!(problems.iter().any(|p| p.contains("(0,1)") && p.contains("y <= x")), "{problems:?}");
    }

    #[test]
    fn hom_must_be_total() {
        let text = format!("{CHAIN}\nhom h : A -> A {{ 0->0; }}");
        assert!(parse_document(&text).unwrap_err().to_string().contains("unmapped"));
    }
}
