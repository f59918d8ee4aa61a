//! Signatures with ordered arities, terms over ordered contexts, and
//! (in)equational axioms.

use std::fmt;

use thiserror::Error;

use crate::oset::{monotone_maps, OSet};
use crate::syntax::{RawTerm, SyntaxError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TermError {
    #[error("unknown operation symbol `{0}`")]
    UnknownSymbol(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("`{symbol}` takes {expected} arguments, got {got}")]
    WrongShape { symbol: String, expected: usize, got: usize },
    #[error(transparent)]
    Syntax(#[from] SyntaxError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TheoryError {
    #[error("duplicate operation symbol `{0}`")]
    DuplicateSymbol(String),
    #[error("axiom {index}: {source}")]
    BadAxiom { index: usize, source: TermError },
    #[error("axiom {0} refers to a variable or symbol out of range")]
    IllFormedAxiom(usize),
    #[error("theory `{0}` is not pointed (needs exactly one constant, named `0`)")]
    NotPointed(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OperationSymbol {
    pub name: String,
    pub arity: OSet,
    pub coherent: bool,
}

impl OperationSymbol {
    pub fn is_constant(&self) -> bool {
        self.arity.is_empty()
    }
}

/// A term whose variables index into a context and whose operations index
/// into a theory's symbol list. Argument lists follow the arity's canonical
/// element order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Var(usize),
    App(usize, Vec<Term>),
}

impl Term {
    pub fn depth(&self) -> usize {
        match self {
            Term::Var(_) => 0,
            Term::App(_, args) => 1 + args.iter().map(Term::depth).max().unwrap_or(0),
        }
    }

    /// Replaces each variable `i` by `subst[i]`.
    pub fn substitute(&self, subst: &[Term]) -> Term {
        match self {
            Term::Var(i) => subst[*i].clone(),
            Term::App(op, args) => Term::App(*op, args.iter().map(|a| a.substitute(subst)).collect()),
        }
    }

    fn wellformed_in(&self, ctx_len: usize, symbols: &[OperationSymbol]) -> bool {
        match self {
            Term::Var(i) => *i < ctx_len,
            Term::App(op, args) => {
                *op < symbols.len()
                    && symbols[*op].arity.len() == args.len()
                    && args.iter().all(|a| a.wellformed_in(ctx_len, symbols))
            }
        }
    }

    pub fn display<'a>(&'a self, theory: &'a Theory, ctx: &'a OSet) -> TermDisplay<'a> {
        TermDisplay { term: self, symbols: &theory.symbols, ctx }
    }
}

pub struct TermDisplay<'a> {
    term: &'a Term,
    symbols: &'a [OperationSymbol],
    ctx: &'a OSet,
}

impl fmt::Display for TermDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.term {
            Term::Var(i) => f.write_str(self.ctx.name(*i)),
            Term::App(op, args) => {
                let sym = &self.symbols[*op];
                if args.is_empty() {
                    return f.write_str(&sym.name);
                }
                write!(f, "{}(", sym.name)?;
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{}", TermDisplay { term: a, symbols: self.symbols, ctx: self.ctx })?;
                }
                f.write_str(")")
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AxiomKind {
    Eq,
    Le,
}

impl AxiomKind {
    pub fn symbol(self) -> &'static str {
        match self {
            AxiomKind::Eq => "=",
            AxiomKind::Le => "<=",
        }
    }

    pub fn keyword(self) -> &'static str {
        match self {
            AxiomKind::Eq => "eq",
            AxiomKind::Le => "le",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Axiom {
    pub context: OSet,
    pub lhs: Term,
    pub rhs: Term,
    pub kind: AxiomKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Theory {
    pub name: String,
    pub symbols: Vec<OperationSymbol>,
    pub axioms: Vec<Axiom>,
}

impl Theory {
    pub fn new(name: impl Into<String>, symbols: Vec<OperationSymbol>, axioms: Vec<Axiom>) -> Result<Theory, TheoryError> {
        for (i, s) in symbols.iter().enumerate() {
            if symbols[..i].iter().any(|t| t.name == s.name) {
                return Err(TheoryError::DuplicateSymbol(s.name.clone()));
            }
        }
        for (i, ax) in axioms.iter().enumerate() {
            let n = ax.context.len();
            if !ax.lhs.wellformed_in(n, &symbols) || !ax.rhs.wellformed_in(n, &symbols) {
                return Err(TheoryError::IllFormedAxiom(i));
            }
        }
        Ok(Theory { name: name.into(), symbols, axioms })
    }

    pub fn symbol_index(&self, name: &str) -> Option<usize> {
        self.symbols.iter().position(|s| s.name == name)
    }

    pub fn constants(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.symbols.len()).filter(|&i| self.symbols[i].is_constant())
    }

    /// The index of the constant `0` when the theory is pointed.
    pub fn zero(&self) -> Option<usize> {
        let consts: Vec<usize> = self.constants().collect();
        match consts.as_slice() {
            [z] if self.symbols[*z].name == "0" => Some(*z),
            _ => None,
        }
    }

    pub fn require_pointed(&self) -> Result<usize, TheoryError> {
        self.zero().ok_or_else(|| TheoryError::NotPointed(self.name.clone()))
    }

    pub fn is_coherent(&self) -> bool {
        self.symbols.iter().all(|s| s.coherent)
    }

    pub fn axiom_text(&self, index: usize) -> String {
        let ax = &self.axioms[index];
        format!(
            "{} {} {}",
            ax.lhs.display(self, &ax.context),
            ax.kind.symbol(),
            ax.rhs.display(self, &ax.context)
        )
    }

    /// The same signature with no axioms.
    pub fn signature_only(&self, name: impl Into<String>) -> Theory {
        Theory { name: name.into(), symbols: self.symbols.clone(), axioms: Vec::new() }
    }
}

/// Resolves a raw term against a context and a theory. Ordered arities are
/// not checked here; evaluation is partial instead.
pub fn wellformed_term(raw: &RawTerm, ctx: &OSet, theory: &Theory) -> Result<Term, TermError> {
    resolve(raw, ctx, &theory.symbols)
}

fn resolve(raw: &RawTerm, ctx: &OSet, symbols: &[OperationSymbol]) -> Result<Term, TermError> {
    let find = |name: &str| symbols.iter().position(|s| s.name == name);
    match raw {
        RawTerm::Name(n) => {
            if let Some(i) = ctx.index_of(n) {
                Ok(Term::Var(i))
            } else if let Some(op) = find(n) {
                if symbols[op].is_constant() {
                    Ok(Term::App(op, Vec::new()))
                } else {
                    Err(TermError::WrongShape { symbol: n.clone(), expected: symbols[op].arity.len(), got: 0 })
                }
            } else {
                Err(TermError::UnknownVariable(n.clone()))
            }
        }
        RawTerm::App(name, args) => {
            let op = find(name).ok_or_else(|| TermError::UnknownSymbol(name.clone()))?;
            let expected = symbols[op].arity.len();
            if expected != args.len() {
                return Err(TermError::WrongShape { symbol: name.clone(), expected, got: args.len() });
            }
            let args = args.iter().map(|a| resolve(a, ctx, symbols)).collect::<Result<_, _>>()?;
            Ok(Term::App(op, args))
        }
    }
}

/// Parses and resolves a term written in the definition language.
pub fn parse_term(text: &str, ctx: &OSet, theory: &Theory) -> Result<Term, TermError> {
    wellformed_term(&RawTerm::parse(text)?, ctx, theory)
}

/// Assignments of carrier elements to the axiom's variables that respect the
/// context order, i.e. the monotone maps `context -> carrier`.
pub fn axiom_instances(axiom: &Axiom, carrier: &OSet) -> Vec<Vec<usize>> {
    monotone_maps(&axiom.context, carrier)
}

/// Incremental construction of a theory from term strings.
pub struct TheoryBuilder {
    name: String,
    symbols: Vec<OperationSymbol>,
    axioms: Vec<(OSet, String, AxiomKind, String)>,
}

impl TheoryBuilder {
    pub fn new(name: impl Into<String>) -> TheoryBuilder {
        TheoryBuilder { name: name.into(), symbols: Vec::new(), axioms: Vec::new() }
    }

    pub fn constant(mut self, name: &str) -> Self {
        self.symbols.push(OperationSymbol { name: name.into(), arity: OSet::empty(), coherent: true });
        self
    }

    pub fn operation(mut self, name: &str, arity: OSet, coherent: bool) -> Self {
        self.symbols.push(OperationSymbol { name: name.into(), arity, coherent });
        self
    }

    pub fn axiom(mut self, context: OSet, lhs: &str, kind: AxiomKind, rhs: &str) -> Self {
        self.axioms.push((context, lhs.into(), kind, rhs.into()));
        self
    }

    pub fn build(self) -> Result<Theory, TheoryError> {
        let mut axioms = Vec::with_capacity(self.axioms.len());
        for (index, (context, lhs, kind, rhs)) in self.axioms.into_iter().enumerate() {
            let side = |s: &str| {
                RawTerm::parse(s)
                    .map_err(TermError::from)
                    .and_then(|r| resolve(&r, &context, &self.symbols))
                    .map_err(|source| TheoryError::BadAxiom { index, source })
            };
            let (lhs, rhs) = (side(&lhs)?, side(&rhs)?);
            axioms.push(Axiom { context, lhs, rhs, kind });
        }
        Theory::new(self.name, self.symbols, axioms)
    }
}

pub fn binary_arity() -> OSet {
    OSet::discrete(&["x", "y"])
}

pub fn ternary_arity() -> OSet {
    OSet::discrete(&["x", "y", "z"])
}

/// `({x, y}, y <= x)`: the arity of truncated subtraction.
pub fn subtraction_arity() -> OSet {
    OSet::validate(&["x", "y"], &[("y", "x")]).expect("static arity")
}

fn vars(names: &[&str]) -> OSet {
    OSet::discrete(names)
}

/// Pointed theory with binary `alpha`, `theta`, `0 <= alpha(v,v)` and
/// `theta(alpha(v,w),w) = v`.
pub fn lax_proto1() -> Theory {
    proto1("LaxProto1", ("0", "alpha(v,v)"))
}

/// As [`lax_proto1`] with `alpha(v,v) <= 0`.
pub fn colax_proto1() -> Theory {
    proto1("ColaxProto1", ("alpha(v,v)", "0"))
}

fn proto1(name: &str, diagonal: (&str, &str)) -> Theory {
    TheoryBuilder::new(name)
        .constant("0")
        .operation("alpha", binary_arity(), true)
        .operation("theta", binary_arity(), true)
        .axiom(vars(&["v"]), diagonal.0, AxiomKind::Le, diagonal.1)
        .axiom(vars(&["v", "w"]), "theta(alpha(v,w),w)", AxiomKind::Eq, "v")
        .build()
        .expect("builtin theory")
}

/// Ternary `rho` with `a <= rho(a,b,c)` when `b <= c` and `rho(u,v,w) <= w`
/// when `u <= v`.
pub fn maltsev_ord() -> Theory {
    let first = OSet::validate(&["a", "b", "c"], &[("b", "c")]).expect("static");
    let second = OSet::validate(&["u", "v", "w"], &[("u", "v")]).expect("static");
    TheoryBuilder::new("MaltsevOrd")
        .operation("rho", ternary_arity(), true)
        .axiom(first, "a", AxiomKind::Le, "rho(a,b,c)")
        .axiom(second, "rho(u,v,w)", AxiomKind::Le, "w")
        .build()
        .expect("builtin theory")
}

/// Monoid with bottom unit and a non-coherent subtraction defined on
/// pairs `y <= x`.
pub fn trunc_monoid() -> Theory {
    TheoryBuilder::new("TruncMonoid")
        .constant("0")
        .operation("+", binary_arity(), true)
        .operation("⊖", subtraction_arity(), false)
        .axiom(vars(&["a"]), "0", AxiomKind::Le, "a")
        .axiom(vars(&["a"]), "⊖(a,0)", AxiomKind::Eq, "a")
        .axiom(vars(&["a"]), "⊖(a,a)", AxiomKind::Eq, "0")
        .axiom(vars(&["a", "b", "c"]), "+(+(a,b),c)", AxiomKind::Eq, "+(a,+(b,c))")
        .axiom(vars(&["a"]), "+(a,0)", AxiomKind::Eq, "a")
        .axiom(vars(&["a"]), "+(0,a)", AxiomKind::Eq, "a")
        .build()
        .expect("builtin theory")
}

/// Just the constant `0`.
pub fn pointed_set() -> Theory {
    TheoryBuilder::new("PointedSet").constant("0").build().expect("builtin theory")
}

pub fn abelian_group() -> Theory {
    TheoryBuilder::new("AbGroup")
        .constant("0")
        .operation("+", binary_arity(), true)
        .operation("neg", vars(&["x"]), true)
        .axiom(vars(&["a", "b", "c"]), "+(+(a,b),c)", AxiomKind::Eq, "+(a,+(b,c))")
        .axiom(vars(&["a", "b"]), "+(a,b)", AxiomKind::Eq, "+(b,a)")
        .axiom(vars(&["a"]), "+(a,0)", AxiomKind::Eq, "a")
        .axiom(vars(&["a"]), "+(a,neg(a))", AxiomKind::Eq, "0")
        .build()
        .expect("builtin theory")
}

/// One coherent binary operation, no axioms.
pub fn binar() -> Theory {
    TheoryBuilder::new("Binar").operation("m", binary_arity(), true).build().expect("builtin theory")
}

pub fn builtin_theories() -> Vec<Theory> {
    vec![
        lax_proto1(),
        colax_proto1(),
        maltsev_ord(),
        trunc_monoid(),
        pointed_set(),
        abelian_group(),
        binar(),
    ]
}

pub fn builtin(name: &str) -> Option<Theory> {
    builtin_theories().into_iter().find(|t| t.name == name)
}
