//! Finite models of a theory.
//!
//! Each operation table is defined exactly on the monotone tuples of the
//! operation's arity; everything built here (products, comma objects,
//! kernels, subalgebras) goes through the same closure checks rather than
//! assuming them.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::oset::{for_each_monotone, is_monotone_tuple, monotone_maps, product, tuple_name, MapError, MonotoneMap, OSet};
use crate::theory::{axiom_instances, AxiomKind, OperationSymbol, Term, TermError, Theory};

const UNDEFINED: u32 = u32::MAX;

/// One reason an algebra fails validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    EmptyCarrier,
    UnknownOperation { op: String },
    WrongTupleLength { op: String, expected: usize, got: usize },
    ElementOutOfRange { op: String },
    NonMonotoneEntry { op: String, tuple: String, lower: String, upper: String },
    ConflictingEntry { op: String, tuple: String },
    MissingEntry { op: String, tuple: String },
    NotMonotone { op: String, lower: String, upper: String, lower_value: String, upper_value: String },
    AxiomViolated { axiom: String, assignment: String, detail: String },
    Expansion { op: String, tuple: String, detail: String },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::EmptyCarrier => write!(f, "empty carrier for a theory with constants"),
            Violation::UnknownOperation { op } => write!(f, "table for unknown operation `{op}`"),
            Violation::WrongTupleLength { op, expected, got } => {
                write!(f, "`{op}` entry has {got} components, arity has {expected}")
            }
            Violation::ElementOutOfRange { op } => write!(f, "`{op}` entry mentions an element outside the carrier"),
            Violation::NonMonotoneEntry { op, tuple, lower, upper } => {
                write!(f, "`{op}` entry on non-monotone tuple {tuple} (arity requires {lower} <= {upper})")
            }
            Violation::ConflictingEntry { op, tuple } => write!(f, "`{op}` has conflicting entries at {tuple}"),
            Violation::MissingEntry { op, tuple } => write!(f, "`{op}` is missing an entry at {tuple}"),
            Violation::NotMonotone { op, lower, upper, lower_value, upper_value } => write!(
                f,
                "coherent `{op}` is not monotone: {lower} <= {upper} but {lower_value} is not <= {upper_value}"
            ),
            Violation::AxiomViolated { axiom, assignment, detail } => {
                write!(f, "axiom `{axiom}` fails at {assignment}: {detail}")
            }
            Violation::Expansion { op, tuple, detail } => write!(f, "cannot expand `{op}` at {tuple}: {detail}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("`{symbol}` applied to non-monotone tuple {tuple}")]
    NonMonotoneArgument { symbol: String, tuple: String },
    #[error("`{symbol}` has no value at {tuple}")]
    Undefined { symbol: String, tuple: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("invalid algebra:\n{}", list(.0))]
    Invalid(Vec<Violation>),
    #[error("algebras are over different theories")]
    TheoryMismatch,
    #[error("homomorphisms do not share a codomain")]
    CodomainMismatch,
    #[error("subset is not closed under `{op}`: {tuple} maps to {value}")]
    NotClosed { op: String, tuple: String, value: String },
    #[error(transparent)]
    Theory(#[from] crate::theory::TheoryError),
    #[error(transparent)]
    Term(#[from] TermError),
    #[error(transparent)]
    Map(#[from] MapError),
}

fn list(v: &[Violation]) -> String {
    v.iter().map(|x| format!("  - {x}")).collect::<Vec<_>>().join("\n")
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomError {
    #[error("domain and codomain are over different theories")]
    TheoryMismatch,
    #[error("map carriers do not match the algebras")]
    CarrierMismatch,
    #[error("`{op}` not preserved at {tuple}: f({op}{tuple}) = {lhs} but {op}(f{tuple}) = {rhs}")]
    Preservation { op: String, tuple: String, lhs: String, rhs: String },
    #[error(transparent)]
    Map(#[from] MapError),
}

/// A dense table indexed by `carrier^k` in lexicographic order; entries off
/// the monotone tuples are undefined.
#[derive(Debug, Clone, PartialEq, Eq)]
struct OpTable {
    values: Vec<u32>,
}

fn tuple_index(n: usize, args: &[usize]) -> usize {
    args.iter().fold(0, |acc, &a| acc * n + a)
}

/// A finite ordered algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Algebra {
    theory: Arc<Theory>,
    carrier: OSet,
    tables: Vec<OpTable>,
}

impl Algebra {
    pub fn theory(&self) -> &Arc<Theory> {
        &self.theory
    }

    pub fn carrier(&self) -> &OSet {
        &self.carrier
    }

    pub fn size(&self) -> usize {
        self.carrier.len()
    }

    pub fn symbol(&self, op: usize) -> &OperationSymbol {
        &self.theory.symbols[op]
    }

    /// `None` when `args` is not a monotone tuple of the arity.
    #[inline]
    pub fn apply(&self, op: usize, args: &[usize]) -> Option<usize> {
        let v = self.tables[op].values[tuple_index(self.carrier.len(), args)];
        (v != UNDEFINED).then_some(v as usize)
    }

    /// The table of `op` in canonical tuple order.
    pub fn entries(&self, op: usize) -> Vec<(Vec<usize>, usize)> {
        monotone_maps(&self.symbol(op).arity, &self.carrier)
            .into_iter()
            .map(|t| {
                let v = self.apply(op, &t).expect("total on monotone tuples");
                (t, v)
            })
            .collect()
    }

    /// Value of the constant `0` in a pointed theory.
    pub fn zero(&self) -> Option<usize> {
        self.theory.zero().and_then(|z| self.apply(z, &[]))
    }

    pub fn eval(&self, term: &Term, env: &[usize]) -> Result<usize, EvalError> {
        eval_term(self, term, env)
    }

    pub fn name(&self, a: usize) -> &str {
        self.carrier.name(a)
    }

    pub fn tuple_name(&self, t: &[usize]) -> String {
        tuple_name(&self.carrier, t)
    }

    /// The raw form of this algebra, for re-validation or printing.
    pub fn to_raw(&self) -> RawAlgebra {
        let mut entries = Vec::new();
        for (op, sym) in self.theory.symbols.iter().enumerate() {
            for (args, value) in self.entries(op) {
                entries.push(RawEntry { op: sym.name.clone(), args, value });
            }
        }
        RawAlgebra { carrier: self.carrier.clone(), entries }
    }

    pub fn revalidate(&self) -> Result<Algebra, AlgebraError> {
        validate_algebra(self.to_raw(), self.theory.clone())
    }

    /// Same algebra with element names replaced.
    pub fn renamed(&self, names: Vec<String>) -> Algebra {
        Algebra { theory: self.theory.clone(), carrier: self.carrier.with_names(names), tables: self.tables.clone() }
    }
}

/// Evaluates `term` with variables bound by `env`. Fails when an operation
/// meets an argument tuple outside its domain of definition.
pub fn eval_term(a: &Algebra, term: &Term, env: &[usize]) -> Result<usize, EvalError> {
    eval_with(term, env, &|op, args| {
        a.apply(op, args).ok_or_else(|| EvalError::NonMonotoneArgument {
            symbol: a.symbol(op).name.clone(),
            tuple: a.tuple_name(args),
        })
    })
}

pub(crate) fn eval_with<L>(term: &Term, env: &[usize], lookup: &L) -> Result<usize, EvalError>
where
    L: Fn(usize, &[usize]) -> Result<usize, EvalError>,
{
    match term {
        Term::Var(i) => Ok(env[*i]),
        Term::App(op, args) => {
            let vals = args.iter().map(|t| eval_with(t, env, lookup)).collect::<Result<Vec<_>, _>>()?;
            lookup(*op, &vals)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawEntry {
    pub op: String,
    pub args: Vec<usize>,
    pub value: usize,
}

/// Carrier plus table entries as supplied by a user, before validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawAlgebra {
    pub carrier: OSet,
    pub entries: Vec<RawEntry>,
}

/// Checks totality on monotone tuples, monotonicity of coherent operations,
/// and every axiom; reports every violation found.
pub fn validate_algebra(raw: RawAlgebra, theory: Arc<Theory>) -> Result<Algebra, AlgebraError> {
    let carrier = raw.carrier;
    let n = carrier.len();
    let mut violations = Vec::new();
    if n == 0 && theory.constants().next().is_some() {
        return Err(AlgebraError::Invalid(vec![Violation::EmptyCarrier]));
    }

    let mut tables: Vec<OpTable> = theory
        .symbols
        .iter()
        .map(|s| OpTable { values: vec![UNDEFINED; n.pow(s.arity.len() as u32)] })
        .collect();

    for entry in &raw.entries {
        let Some(op) = theory.symbol_index(&entry.op) else {
            violations.push(Violation::UnknownOperation { op: entry.op.clone() });
            continue;
        };
        let arity = &theory.symbols[op].arity;
        if entry.args.len() != arity.len() {
            violations.push(Violation::WrongTupleLength {
                op: entry.op.clone(),
                expected: arity.len(),
                got: entry.args.len(),
            });
            continue;
        }
        if entry.value >= n || entry.args.iter().any(|&a| a >= n) {
            violations.push(Violation::ElementOutOfRange { op: entry.op.clone() });
            continue;
        }
        if let Some((i, j)) = arity.le_pairs().into_iter().find(|&(i, j)| !carrier.le(entry.args[i], entry.args[j])) {
            violations.push(Violation::NonMonotoneEntry {
                op: entry.op.clone(),
                tuple: tuple_name(&carrier, &entry.args),
                lower: arity.name(i).to_string(),
                upper: arity.name(j).to_string(),
            });
            continue;
        }
        let slot = &mut tables[op].values[tuple_index(n, &entry.args)];
        if *slot != UNDEFINED && *slot as usize != entry.value {
            violations.push(Violation::ConflictingEntry {
                op: entry.op.clone(),
                tuple: tuple_name(&carrier, &entry.args),
            });
        }
        *slot = entry.value as u32;
    }

    for (op, sym) in theory.symbols.iter().enumerate() {
        for t in monotone_maps(&sym.arity, &carrier) {
            if tables[op].values[tuple_index(n, &t)] == UNDEFINED {
                violations.push(Violation::MissingEntry { op: sym.name.clone(), tuple: tuple_name(&carrier, &t) });
            }
        }
    }
    if !violations.is_empty() {
        return Err(AlgebraError::Invalid(violations));
    }

    let algebra = Algebra { theory: theory.clone(), carrier, tables };

    for (op, sym) in theory.symbols.iter().enumerate().filter(|(_, s)| s.coherent) {
        let tuples = monotone_maps(&sym.arity, &algebra.carrier);
        for s in &tuples {
            for t in &tuples {
                if s != t && s.iter().zip(t).all(|(&p, &q)| algebra.carrier.le(p, q)) {
                    let (vs, vt) = (algebra.apply(op, s).unwrap(), algebra.apply(op, t).unwrap());
                    if !algebra.carrier.le(vs, vt) {
                        violations.push(Violation::NotMonotone {
                            op: sym.name.clone(),
                            lower: algebra.tuple_name(s),
                            upper: algebra.tuple_name(t),
                            lower_value: algebra.name(vs).to_string(),
                            upper_value: algebra.name(vt).to_string(),
                        });
                    }
                }
            }
        }
    }

    for (index, ax) in theory.axioms.iter().enumerate() {
        for env in axiom_instances(ax, &algebra.carrier) {
            let assignment = || {
                let parts: Vec<String> = env
                    .iter()
                    .enumerate()
                    .map(|(i, &v)| format!("{}={}", ax.context.name(i), algebra.name(v)))
                    .collect();
                format!("{{{}}}", parts.join(", "))
            };
            let detail = match (algebra.eval(&ax.lhs, &env), algebra.eval(&ax.rhs, &env)) {
                (Ok(l), Ok(r)) => {
                    let holds = match ax.kind {
                        AxiomKind::Eq => l == r,
                        AxiomKind::Le => algebra.carrier.le(l, r),
                    };
                    if holds {
                        continue;
                    }
                    format!("lhs = {}, rhs = {}", algebra.name(l), algebra.name(r))
                }
                (Err(e), _) | (_, Err(e)) => e.to_string(),
            };
            violations.push(Violation::AxiomViolated { axiom: theory.axiom_text(index), assignment: assignment(), detail });
        }
    }

    if violations.is_empty() {
        Ok(algebra)
    } else {
        Err(AlgebraError::Invalid(violations))
    }
}

/// Fills tables by closures or terms, then validates.
pub struct AlgebraBuilder {
    theory: Arc<Theory>,
    carrier: OSet,
    entries: Vec<RawEntry>,
    problems: Vec<Violation>,
}

impl AlgebraBuilder {
    pub fn new(theory: impl Into<Arc<Theory>>, carrier: OSet) -> AlgebraBuilder {
        AlgebraBuilder { theory: theory.into(), carrier, entries: Vec::new(), problems: Vec::new() }
    }

    pub fn carrier(&self) -> &OSet {
        &self.carrier
    }

    /// Sets constant `op` to the element named `value`.
    pub fn constant(mut self, op: &str, value: &str) -> Self {
        match self.carrier.index_of(value) {
            Some(v) => self.entries.push(RawEntry { op: op.into(), args: vec![], value: v }),
            None => self.problems.push(Violation::ElementOutOfRange { op: op.into() }),
        }
        self
    }

    pub fn entry(mut self, op: &str, args: Vec<usize>, value: usize) -> Self {
        self.entries.push(RawEntry { op: op.into(), args, value });
        self
    }

    /// Fills `op` on every monotone tuple of its arity using `f`.
    pub fn op_fn(mut self, op: &str, f: impl Fn(&[usize]) -> usize) -> Self {
        let Some(i) = self.theory.symbol_index(op) else {
            self.problems.push(Violation::UnknownOperation { op: op.into() });
            return self;
        };
        let arity = self.theory.symbols[i].arity.clone();
        let carrier = self.carrier.clone();
        for_each_monotone(&arity, carrier.len(), |a, b| carrier.le(a, b), |t| {
            self.entries.push(RawEntry { op: op.into(), args: t.to_vec(), value: f(t) });
        });
        self
    }

    /// Defines `op` by a term over variables bound positionally to the
    /// arity's elements; other operations are looked up in the entries
    /// supplied so far.
    pub fn op_term(mut self, op: &str, vars: &[&str], term: &str) -> Self {
        match self.expand_term(op, vars, term) {
            Ok(entries) => self.entries.extend(entries),
            Err(v) => self.problems.push(v),
        }
        self
    }

    fn expand_term(&self, op: &str, vars: &[&str], term: &str) -> Result<Vec<RawEntry>, Violation> {
        let fail = |detail: String| Violation::Expansion { op: op.into(), tuple: "-".into(), detail };
        let i = self.theory.symbol_index(op).ok_or_else(|| Violation::UnknownOperation { op: op.into() })?;
        let arity = &self.theory.symbols[i].arity;
        if vars.len() != arity.len() {
            return Err(Violation::WrongTupleLength { op: op.into(), expected: arity.len(), got: vars.len() });
        }
        let ctx = arity.with_names(vars.iter().map(|s| s.to_string()).collect());
        let term = crate::theory::parse_term(term, &ctx, &self.theory).map_err(|e| fail(e.to_string()))?;
        let n = self.carrier.len();
        let mut partial: Vec<Vec<u32>> = self
            .theory
            .symbols
            .iter()
            .map(|s| vec![UNDEFINED; n.pow(s.arity.len() as u32)])
            .collect();
        for e in &self.entries {
            if let Some(k) = self.theory.symbol_index(&e.op) {
                if e.args.len() == self.theory.symbols[k].arity.len() && e.args.iter().all(|&a| a < n) {
                    partial[k][tuple_index(n, &e.args)] = e.value as u32;
                }
            }
        }
        let lookup = |k: usize, args: &[usize]| {
            let sym = &self.theory.symbols[k];
            if !is_monotone_tuple(&sym.arity, args, |a, b| self.carrier.le(a, b)) {
                return Err(EvalError::NonMonotoneArgument {
                    symbol: sym.name.clone(),
                    tuple: tuple_name(&self.carrier, args),
                });
            }
            match partial[k][tuple_index(n, args)] {
                UNDEFINED => Err(EvalError::Undefined { symbol: sym.name.clone(), tuple: tuple_name(&self.carrier, args) }),
                v => Ok(v as usize),
            }
        };
        let mut out = Vec::new();
        for t in monotone_maps(arity, &self.carrier) {
            let value = eval_with(&term, &t, &lookup).map_err(|e| Violation::Expansion {
                op: op.into(),
                tuple: tuple_name(&self.carrier, &t),
                detail: e.to_string(),
            })?;
            out.push(RawEntry { op: op.into(), args: t, value });
        }
        Ok(out)
    }

    pub fn build(self) -> Result<Algebra, AlgebraError> {
        if !self.problems.is_empty() {
            return Err(AlgebraError::Invalid(self.problems));
        }
        validate_algebra(RawAlgebra { carrier: self.carrier, entries: self.entries }, self.theory)
    }
}

/// A structure-preserving monotone map between algebras.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Homomorphism {
    dom: Arc<Algebra>,
    cod: Arc<Algebra>,
    map: MonotoneMap,
}

fn same<T: PartialEq>(a: &Arc<T>, b: &Arc<T>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// Verifies `f(θ_A(t)) = θ_B(f∘t)` for every symbol and monotone tuple.
pub fn check_homomorphism(map: MonotoneMap, dom: Arc<Algebra>, cod: Arc<Algebra>) -> Result<Homomorphism, HomError> {
    if !same(&dom.theory, &cod.theory) {
        return Err(HomError::TheoryMismatch);
    }
    if map.dom() != &dom.carrier || map.cod() != &cod.carrier {
        return Err(HomError::CarrierMismatch);
    }
    for (op, sym) in dom.theory.symbols.iter().enumerate() {
        let mut failure = None;
        for_each_monotone(&sym.arity, dom.size(), |a, b| dom.carrier.le(a, b), |t| {
            if failure.is_some() {
                return;
            }
            let lhs = map.apply(dom.apply(op, t).expect("monotone tuple"));
            let image: Vec<usize> = t.iter().map(|&a| map.apply(a)).collect();
            let rhs = cod.apply(op, &image).expect("monotone maps preserve monotone tuples");
            if lhs != rhs {
                failure = Some(HomError::Preservation {
                    op: sym.name.clone(),
                    tuple: dom.tuple_name(t),
                    lhs: cod.name(lhs).to_string(),
                    rhs: cod.name(rhs).to_string(),
                });
            }
        });
        if let Some(e) = failure {
            return Err(e);
        }
    }
    Ok(Homomorphism { dom, cod, map })
}

/// How a homomorphism fails to be an isomorphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IsoFailure {
    NotInjective { first: String, second: String },
    NotSurjective { missed: String },
    NotFull { lower: String, upper: String },
    InverseNotHomomorphism(String),
}

impl fmt::Display for IsoFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IsoFailure::NotInjective { first, second } => write!(f, "not injective: {first} and {second} collide"),
            IsoFailure::NotSurjective { missed } => write!(f, "not surjective: {missed} is not in the image"),
            IsoFailure::NotFull { lower, upper } => {
                write!(f, "not full: images of {lower}, {upper} are ordered but {lower} is not <= {upper}")
            }
            IsoFailure::InverseNotHomomorphism(e) => write!(f, "inverse is not a homomorphism: {e}"),
        }
    }
}

impl Homomorphism {
    pub fn identity(a: Arc<Algebra>) -> Homomorphism {
        Homomorphism { map: MonotoneMap::identity(a.carrier.clone()), dom: a.clone(), cod: a }
    }

    /// The unique map to the one-element algebra.
    pub fn to_terminal(a: Arc<Algebra>) -> Result<Homomorphism, AlgebraError> {
        let t = Arc::new(terminal(a.theory.clone())?);
        let map = MonotoneMap::constant(a.carrier.clone(), t.carrier.clone(), 0);
        Ok(Homomorphism { dom: a, cod: t, map })
    }

    /// `i_B`: the unique map from the zero algebra, picking out `0`.
    pub fn from_zero(b: Arc<Algebra>) -> Result<Homomorphism, AlgebraError> {
        b.theory.require_pointed()?;
        let z = Arc::new(terminal(b.theory.clone())?);
        let map = MonotoneMap::constant(z.carrier.clone(), b.carrier.clone(), b.zero().expect("pointed"));
        Ok(Homomorphism { dom: z, cod: b, map })
    }

    pub fn dom(&self) -> &Arc<Algebra> {
        &self.dom
    }

    pub fn cod(&self) -> &Arc<Algebra> {
        &self.cod
    }

    pub fn map(&self) -> &MonotoneMap {
        &self.map
    }

    #[inline]
    pub fn apply(&self, a: usize) -> usize {
        self.map.apply(a)
    }

    /// `then ∘ self`.
    pub fn then(&self, then: &Homomorphism) -> Result<Homomorphism, HomError> {
        if !same(&self.cod, &then.dom) {
            return Err(HomError::CarrierMismatch);
        }
        let map = self.map.then(&then.map)?;
        Ok(Homomorphism { dom: self.dom.clone(), cod: then.cod.clone(), map })
    }

    pub fn same_values(&self, other: &Homomorphism) -> bool {
        self.map.values() == other.map.values()
    }

    /// `None` when this is an isomorphism: bijective, full, and with an
    /// inverse that is itself a homomorphism.
    pub fn iso_failure(&self) -> Option<IsoFailure> {
        let (d, c) = (&self.dom, &self.cod);
        let mut preimage = vec![usize::MAX; c.size()];
        for a in 0..d.size() {
            let b = self.apply(a);
            if preimage[b] != usize::MAX {
                return Some(IsoFailure::NotInjective {
                    first: d.name(preimage[b]).into(),
                    second: d.name(a).into(),
                });
            }
            preimage[b] = a;
        }
        if let Some(b) = preimage.iter().position(|&p| p == usize::MAX) {
            return Some(IsoFailure::NotSurjective { missed: c.name(b).into() });
        }
        if let Some((a, b)) = self.map.fullness_violation() {
            return Some(IsoFailure::NotFull { lower: d.name(a).into(), upper: d.name(b).into() });
        }
        let inverse = match MonotoneMap::new(c.carrier.clone(), d.carrier.clone(), preimage) {
            Ok(m) => m,
            Err(e) => return Some(IsoFailure::InverseNotHomomorphism(e.to_string())),
        };
        check_homomorphism(inverse, c.clone(), d.clone())
            .err()
            .map(|e| IsoFailure::InverseNotHomomorphism(e.to_string()))
    }

    pub fn is_isomorphism(&self) -> bool {
        self.iso_failure().is_none()
    }
}

/// Pointwise order on parallel homomorphisms.
pub fn hom_le(f: &Homomorphism, g: &Homomorphism) -> Result<bool, HomError> {
    if !same(&f.dom, &g.dom) || !same(&f.cod, &g.cod) {
        return Err(HomError::CarrierMismatch);
    }
    Ok((0..f.dom.size()).all(|a| f.cod.carrier.le(f.apply(a), g.apply(a))))
}

/// The one-element algebra of a theory.
pub fn terminal(theory: Arc<Theory>) -> Result<Algebra, AlgebraError> {
    let name = if theory.zero().is_some() { "0" } else { "*" };
    let tables = theory.symbols.iter().map(|_| OpTable { values: vec![0] }).collect();
    let a = Algebra { theory, carrier: OSet::discrete(&[name]), tables };
    a.revalidate()
}

fn check_same_theory(a: &Algebra, b: &Algebra) -> Result<(), AlgebraError> {
    if same(&a.theory, &b.theory) {
        Ok(())
    } else {
        Err(AlgebraError::TheoryMismatch)
    }
}

/// Componentwise product; element `(a, b)` sits at index `a * |B| + b`.
pub fn product_algebra(a: &Algebra, b: &Algebra) -> Result<Algebra, AlgebraError> {
    check_same_theory(a, b)?;
    let carrier = product(&a.carrier, &b.carrier);
    let m = b.size();
    let n = carrier.len();
    let mut tables = Vec::with_capacity(a.tables.len());
    for (op, sym) in a.theory.symbols.iter().enumerate() {
        let mut values = vec![UNDEFINED; n.pow(sym.arity.len() as u32)];
        for_each_monotone(&sym.arity, n, |p, q| carrier.le(p, q), |t| {
            let left: Vec<usize> = t.iter().map(|&p| p / m).collect();
            let right: Vec<usize> = t.iter().map(|&p| p % m).collect();
            let v = a.apply(op, &left).unwrap() * m + b.apply(op, &right).unwrap();
            values[tuple_index(n, t)] = v as u32;
        });
        tables.push(OpTable { values });
    }
    Ok(Algebra { theory: a.theory.clone(), carrier, tables })
}

/// The full subalgebra on `members` (ascending indices), with its inclusion.
/// Closure under every operation is verified.
pub fn subalgebra(parent: &Arc<Algebra>, members: &[usize]) -> Result<(Arc<Algebra>, Homomorphism), AlgebraError> {
    let carrier = parent.carrier.induced(members);
    let k = members.len();
    let mut position = vec![usize::MAX; parent.size()];
    for (i, &m) in members.iter().enumerate() {
        position[m] = i;
    }
    let mut tables = Vec::with_capacity(parent.tables.len());
    for (op, sym) in parent.theory.symbols.iter().enumerate() {
        let mut values = vec![UNDEFINED; k.pow(sym.arity.len() as u32)];
        let mut failure = None;
        for_each_monotone(&sym.arity, k, |p, q| carrier.le(p, q), |t| {
            if failure.is_some() {
                return;
            }
            let outer: Vec<usize> = t.iter().map(|&i| members[i]).collect();
            let v = parent.apply(op, &outer).expect("full suborder keeps tuples monotone");
            if position[v] == usize::MAX {
                failure = Some(AlgebraError::NotClosed {
                    op: sym.name.clone(),
                    tuple: parent.tuple_name(&outer),
                    value: parent.name(v).to_string(),
                });
            } else {
                values[tuple_index(k, t)] = position[v] as u32;
            }
        });
        if let Some(e) = failure {
            return Err(e);
        }
        tables.push(OpTable { values });
    }
    let sub = Arc::new(Algebra { theory: parent.theory.clone(), carrier, tables });
    let map = MonotoneMap::new(sub.carrier.clone(), parent.carrier.clone(), members.to_vec())?;
    Ok((sub.clone(), Homomorphism { dom: sub, cod: parent.clone(), map }))
}

/// `f/g = {(a, c) : f(a) <= g(c)}` with its two projections.
#[derive(Debug, Clone)]
pub struct CommaObject {
    pub algebra: Arc<Algebra>,
    pub pairs: Vec<(usize, usize)>,
    pub left: Homomorphism,
    pub right: Homomorphism,
}

pub fn comma_algebra(f: &Homomorphism, g: &Homomorphism) -> Result<CommaObject, AlgebraError> {
    if !same(&f.cod, &g.cod) {
        return Err(AlgebraError::CodomainMismatch);
    }
    let (a, c, b) = (&f.dom, &g.dom, &f.cod);
    let prod = Arc::new(product_algebra(a, c)?);
    let m = c.size();
    let mut pairs = Vec::new();
    let mut members = Vec::new();
    for x in 0..a.size() {
        for z in 0..m {
            if b.carrier.le(f.apply(x), g.apply(z)) {
                pairs.push((x, z));
                members.push(x * m + z);
            }
        }
    }
    let (algebra, _) = subalgebra(&prod, &members)?;
    let left = MonotoneMap::new(algebra.carrier.clone(), a.carrier.clone(), pairs.iter().map(|p| p.0).collect())?;
    let right = MonotoneMap::new(algebra.carrier.clone(), c.carrier.clone(), pairs.iter().map(|p| p.1).collect())?;
    Ok(CommaObject {
        left: Homomorphism { dom: algebra.clone(), cod: a.clone(), map: left },
        right: Homomorphism { dom: algebra.clone(), cod: c.clone(), map: right },
        algebra,
        pairs,
    })
}

/// Which kernel comma: `i_B/f` (lax) or `f/i_B` (colax).
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Lax,
    Colax,
}

#[derive(Debug, Clone)]
pub struct KernelObject {
    pub algebra: Arc<Algebra>,
    pub members: Vec<usize>,
    pub inclusion: Homomorphism,
}

/// `i_B/f`: the subalgebra `{a : 0 <= f(a)}` of the domain.
pub fn kernel_comma(f: &Homomorphism) -> Result<KernelObject, AlgebraError> {
    kernel_comma_with(f, Side::Lax)
}

/// Lax: `{a : 0 <= f(a)}`; colax: `{a : f(a) <= 0}`.
pub fn kernel_comma_with(f: &Homomorphism, side: Side) -> Result<KernelObject, AlgebraError> {
    f.cod.theory.require_pointed()?;
    let zero = f.cod.zero().expect("pointed");
    let le = |a: usize, b: usize| f.cod.carrier.le(a, b);
    let members: Vec<usize> = (0..f.dom.size())
        .filter(|&a| match side {
            Side::Lax => le(zero, f.apply(a)),
            Side::Colax => le(f.apply(a), zero),
        })
        .collect();
    let (algebra, inclusion) = subalgebra(&f.dom, &members)?;
    Ok(KernelObject { algebra, members, inclusion })
}
