//! Verdicts built from relations, clones and homomorphisms.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::algebra::{kernel_comma_with, Algebra, AlgebraError, HomError, Homomorphism, IsoFailure, Side};
use crate::clone::{find_maltsev, find_proto_witnesses, SearchBudget};
use crate::oset::MonotoneMap;
use crate::relations::{
    compose, enumerate_congruences, enumerate_ideals, is_ideal, IdealViolation, Relation, RelationError,
};
use crate::theory::TheoryError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Inconclusive,
    Fail,
}

impl Verdict {
    /// Fail dominates inconclusive, which dominates pass.
    pub fn combine(self, other: Verdict) -> Verdict {
        self.max(other)
    }

    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Pass => 0,
            Verdict::Fail => 1,
            Verdict::Inconclusive => 2,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Inconclusive => "inconclusive",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub description: String,
    /// Role name and element identifier.
    pub elements: Vec<(String, String)>,
}

impl Counterexample {
    pub fn new(description: impl Into<String>, elements: Vec<(&str, String)>) -> Counterexample {
        Counterexample {
            description: description.into(),
            elements: elements.into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
        }
    }
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.description)?;
        if !self.elements.is_empty() {
            let parts: Vec<String> = self.elements.iter().map(|(k, v)| format!("{k}={v}")).collect();
            write!(f, " [{}]", parts.join(", "))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckResult {
    pub check: String,
    pub verdict: Verdict,
    pub counterexamples: Vec<Counterexample>,
    pub diagnostics: BTreeMap<String, Value>,
}

impl CheckResult {
    pub fn new(check: &str) -> CheckResult {
        CheckResult {
            check: check.to_string(),
            verdict: Verdict::Pass,
            counterexamples: Vec::new(),
            diagnostics: BTreeMap::new(),
        }
    }

    pub fn fail(&mut self, c: Counterexample) {
        self.verdict = Verdict::Fail;
        self.counterexamples.push(c);
    }

    pub fn note(&mut self, key: &str, value: impl Into<Value>) {
        self.diagnostics.insert(key.to_string(), value.into());
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

/// The six elements of a failed zig-zag `x D y <= y' D° u <= u' D v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ZigZag {
    pub x: usize,
    pub y: usize,
    pub y2: usize,
    pub u: usize,
    pub u2: usize,
    pub v: usize,
}

/// First zig-zag (in the order x, y, y', u, u', v) whose conclusion `x D v`
/// fails.
pub fn maltsev_ideal_violation(d: &Relation) -> Option<ZigZag> {
    let (a, b) = (d.left().carrier(), d.right().carrier());
    let (n, m) = (a.len(), b.len());
    for x in 0..n {
        for y in (0..m).filter(|&y| d.contains(x, y)) {
            for y2 in (0..m).filter(|&y2| b.le(y, y2)) {
                for u in (0..n).filter(|&u| d.contains(u, y2)) {
                    for u2 in (0..n).filter(|&u2| a.le(u, u2)) {
                        for v in (0..m).filter(|&v| d.contains(u2, v)) {
                            if !d.contains(x, v) {
                                return Some(ZigZag { x, y, y2, u, u2, v });
                            }
                        }
                    }
                }
            }
        }
    }
    None
}

fn zigzag_counterexample(d: &Relation, z: ZigZag) -> Counterexample {
    let (l, r) = (d.left(), d.right());
    Counterexample::new(
        format!("ideal {d} fails the zig-zag: x D v is missing"),
        vec![
            ("x", l.name(z.x).into()),
            ("y", r.name(z.y).into()),
            ("y'", r.name(z.y2).into()),
            ("u", l.name(z.u).into()),
            ("u'", l.name(z.u2).into()),
            ("v", r.name(z.v).into()),
        ],
    )
}

pub fn check_maltsev_ideal_property(d: &Relation) -> Result<CheckResult, IdealViolation> {
    is_ideal(d)?;
    let mut r = CheckResult::new("maltsev-ideal");
    r.note("relation", d.pairs_text());
    if let Some(z) = maltsev_ideal_violation(d) {
        r.fail(zigzag_counterexample(d, z));
    }
    Ok(r)
}

/// Runs the zig-zag test on every ideal `A ↬ B`.
pub fn check_ord_maltsev(a: &Arc<Algebra>, b: &Arc<Algebra>, cap: u64) -> Result<CheckResult, RelationError> {
    let ideals = enumerate_ideals(a, b, cap)?;
    let mut r = CheckResult::new("ord-maltsev");
    r.note("ideals", ideals.relations.len());
    r.note("enumeration", json!(ideals.method));
    r.note("exact", ideals.exact);
    let mut failing = 0;
    for d in &ideals.relations {
        if let Some(z) = maltsev_ideal_violation(d) {
            failing += 1;
            r.fail(zigzag_counterexample(d, z));
        }
    }
    r.note("failing_ideals", failing);
    if !ideals.exact && r.verdict == Verdict::Pass {
        r.verdict = Verdict::Inconclusive;
    }
    Ok(r)
}

/// Compares `RS` and `SR` for every pair of congruences.
pub fn check_permutability(a: &Arc<Algebra>, cap: u64) -> CheckResult {
    let cong = enumerate_congruences(a, cap);
    let rels = &cong.relations;
    let mut r = CheckResult::new("permutability");
    r.note("congruences", rels.len());
    r.note("enumeration", json!(cong.method));
    r.note("exact", cong.exact);
    r.note("assumption", "finite varieties are treated as regular");
    let mut closure_added = 0;
    for i in 0..rels.len() {
        for j in i + 1..rels.len() {
            let rs = compose(&rels[i], &rels[j]).expect("same algebra");
            let sr = compose(&rels[j], &rels[i]).expect("same algebra");
            closure_added += rs.closure_added_pairs() as usize + sr.closure_added_pairs() as usize;
            if rs.relation != sr.relation {
                let (which, pair) = match rs.relation.pairs().into_iter().find(|&(x, y)| !sr.relation.contains(x, y)) {
                    Some(p) => ("RS", p),
                    None => ("SR", sr.relation.pairs().into_iter().find(|&(x, y)| !rs.relation.contains(x, y)).unwrap()),
                };
                r.fail(Counterexample::new(
                    format!("congruences do not permute: pair only in {which}"),
                    vec![
                        ("R", rels[i].pairs_text()),
                        ("S", rels[j].pairs_text()),
                        ("pair", rels[i].pair_name(pair)),
                    ],
                ));
            }
        }
    }
    r.note("composites_extended_by_closure", closure_added);
    if !cong.exact && r.verdict == Verdict::Pass {
        r.verdict = Verdict::Inconclusive;
    }
    r
}

/// Pass iff the carrier order is symmetric.
pub fn check_degenerate(a: &Algebra) -> CheckResult {
    let mut r = CheckResult::new("degenerate");
    if let Some((x, y)) = a.carrier().asymmetric_pair() {
        r.fail(Counterexample::new(
            format!("{} <= {} but not conversely", a.name(x), a.name(y)),
            vec![("a", a.name(x).into()), ("b", a.name(y).into())],
        ));
    }
    r
}

pub fn check_maltsev(a: &Arc<Algebra>, budget: &SearchBudget, exhaustive: bool) -> CheckResult {
    let s = find_maltsev(a, budget, exhaustive);
    let mut r = CheckResult::new("maltsev");
    r.note("mode", if exhaustive { "exhaustive-tables" } else { "clone" });
    if let Some(size) = s.clone_size {
        r.note("clone_size", size);
        r.note("max_term_depth", budget.max_term_depth);
        r.note("noncoherent_candidates", s.noncoherent_candidates);
    }
    if let Some(stop) = s.stopped {
        r.note("budget_exhausted", json!(stop));
    }
    match s.witness {
        Some(w) => {
            let n = a.size();
            let mut table = Vec::new();
            for x in 0..n {
                for y in 0..n {
                    for z in 0..n {
                        table.push(format!("{}->{}", a.tuple_name(&[x, y, z]), a.name(w.rho(n, x, y, z))));
                    }
                }
            }
            r.note("rho_table", table);
            if let Some(t) = w.term {
                r.note("rho", t);
            }
        }
        None if s.complete => match a.carrier().asymmetric_pair() {
            Some((x, y)) if exhaustive => r.fail(Counterexample::new(
                "no monotone rho exists: it would force y <= rho(y,x,x) <= rho(y,y,x) <= x",
                vec![("x", a.name(x).into()), ("y", a.name(y).into())],
            )),
            _ => r.fail(Counterexample::new(
                format!("none of the {} ternary term operations satisfies both inequality families", s.clone_size.unwrap_or(0)),
                Vec::new(),
            )),
        },
        None => r.verdict = Verdict::Inconclusive,
    }
    r
}

pub fn check_proto(a: &Arc<Algebra>, n: usize, budget: &SearchBudget, side: Side) -> Result<CheckResult, TheoryError> {
    let s = find_proto_witnesses(a, n, budget, side)?;
    let mut r = CheckResult::new("proto");
    r.note("side", json!(side));
    r.note("n", n);
    r.note("alpha_candidates", s.alpha_candidates);
    r.note("theta_clone_size", s.theta_clone_size);
    if let Some(stop) = s.stopped {
        r.note("budget_exhausted", json!(stop));
    }
    match s.witness {
        Some(w) => {
            let alphas: Vec<String> = w.alphas.iter().map(|t| t.term_text()).collect();
            r.note("alphas", alphas);
            r.note("theta", w.theta.term_text());
        }
        None if s.complete => r.fail(Counterexample::new(
            format!("no term operations alpha_1..alpha_{n}, theta satisfy the identities"),
            Vec::new(),
        )),
        None => r.verdict = Verdict::Inconclusive,
    }
    Ok(r)
}

/// Two split sequences and the maps between them:
///
/// ```text
///   K  --k-->  A  --f-->  B      (s: B -> A, f∘s = id)
///   |a         |b         |c
///   K' --k'--> A' --f'--> B'     (s': B' -> A')
/// ```
///
/// `a = None` means `b` restricted to the kernels.
#[derive(Debug, Clone)]
pub struct Ss5lDiagram {
    pub f: Homomorphism,
    pub s: Homomorphism,
    pub f2: Homomorphism,
    pub s2: Homomorphism,
    pub a: Option<Homomorphism>,
    pub b: Homomorphism,
    pub c: Homomorphism,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Ss5lError {
    #[error(transparent)]
    NotPointed(#[from] TheoryError),
    #[error("{0} is not a split: f(s(b)) differs from b at {1}")]
    NotSplit(&'static str, String),
    #[error("maps do not fit the diagram: {0}")]
    Shape(String),
    #[error("kernel object {0} does not match the kernel computed from the split")]
    KernelMismatch(&'static str),
    #[error("square {square} does not commute at {element}")]
    NotCommuting { square: &'static str, element: String },
    #[error("hypothesis fails: {map} is not an isomorphism ({failure})")]
    Hypothesis { map: &'static str, failure: String },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Hom(#[from] HomError),
}

fn commutes(square: &'static str, p: &Homomorphism, q: &Homomorphism) -> Result<(), Ss5lError> {
    match (0..p.dom().size()).find(|&x| p.apply(x) != q.apply(x)) {
        Some(x) => Err(Ss5lError::NotCommuting { square, element: p.dom().name(x).to_string() }),
        None => Ok(()),
    }
}

fn split_ok(which: &'static str, f: &Homomorphism, s: &Homomorphism) -> Result<(), Ss5lError> {
    let fs = s.then(f).map_err(|_| Ss5lError::Shape(format!("{which}: s does not compose with f")))?;
    match (0..fs.dom().size()).find(|&x| fs.apply(x) != x) {
        Some(x) => Err(Ss5lError::NotSplit(which, fs.dom().name(x).to_string())),
        None => Ok(()),
    }
}

/// Checks the diagram, the hypotheses that `a` and `c` are isomorphisms,
/// and then whether `b` is one.
pub fn check_ss5l_instance(d: &Ss5lDiagram, side: Side) -> Result<CheckResult, Ss5lError> {
    d.f.dom().theory().require_pointed()?;
    split_ok("top row", &d.f, &d.s)?;
    split_ok("bottom row", &d.f2, &d.s2)?;
    let k = kernel_comma_with(&d.f, side)?;
    let k2 = kernel_comma_with(&d.f2, side)?;
    let a = match &d.a {
        Some(a) => {
            if a.dom().as_ref() != k.algebra.as_ref() {
                return Err(Ss5lError::KernelMismatch("top"));
            }
            if a.cod().as_ref() != k2.algebra.as_ref() {
                return Err(Ss5lError::KernelMismatch("bottom"));
            }
            a.clone()
        }
        None => {
            let mut values = Vec::with_capacity(k.members.len());
            for &x in &k.members {
                let y = d.b.apply(x);
                match k2.members.iter().position(|&m| m == y) {
                    Some(j) => values.push(j),
                    None => {
                        return Err(Ss5lError::NotCommuting {
                            square: "kernel",
                            element: d.b.dom().name(x).to_string(),
                        })
                    }
                }
            }
            let map = MonotoneMap::new(k.algebra.carrier().clone(), k2.algebra.carrier().clone(), values)
                .map_err(AlgebraError::from)?;
            crate::algebra::check_homomorphism(map, k.algebra.clone(), k2.algebra.clone())?
        }
    };
    let shape = |e: HomError| Ss5lError::Shape(e.to_string());
    commutes("c∘f = f'∘b", &d.f.then(&d.c).map_err(shape)?, &d.b.then(&d.f2).map_err(shape)?)?;
    commutes("b∘s = s'∘c", &d.s.then(&d.b).map_err(shape)?, &d.c.then(&d.s2).map_err(shape)?)?;
    commutes("b∘k = k'∘a", &k.inclusion.then(&d.b).map_err(shape)?, &a.then(&k2.inclusion).map_err(shape)?)?;
    if let Some(e) = a.iso_failure() {
        return Err(Ss5lError::Hypothesis { map: "a", failure: e.to_string() });
    }
    if let Some(e) = d.c.iso_failure() {
        return Err(Ss5lError::Hypothesis { map: "c", failure: e.to_string() });
    }
    let mut r = CheckResult::new("ss5l");
    r.note("side", json!(side));
    r.note("kernel", k.algebra.carrier().names().to_vec());
    r.note("kernel'", k2.algebra.carrier().names().to_vec());
    r.note("b_injective", d.b.map().is_injective());
    r.note("b_surjective", d.b.map().is_surjective());
    r.note("b_full", d.b.map().is_full());
    if let Some(e) = d.b.iso_failure() {
        let elements = match &e {
            IsoFailure::NotInjective { first, second } => vec![("first", first.clone()), ("second", second.clone())],
            IsoFailure::NotSurjective { missed } => vec![("missed", missed.clone())],
            IsoFailure::NotFull { lower, upper } => vec![("lower", lower.clone()), ("upper", upper.clone())],
            IsoFailure::InverseNotHomomorphism(_) => Vec::new(),
        };
        r.fail(Counterexample::new(format!("b is {e}"), elements));
    }
    Ok(r)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("theory `{0}` lacks the shape 0, +, non-coherent ⊖ on (y <= x)")]
pub struct ShapeMismatch(pub String);

struct MonusOps {
    zero: usize,
    monus: usize,
}

fn monus_shape(a: &Algebra) -> Result<MonusOps, ShapeMismatch> {
    let th = a.theory();
    let err = || ShapeMismatch(th.name.clone());
    let zero = th.zero().ok_or_else(err)?;
    let plus = th.symbol_index("+").ok_or_else(err)?;
    let monus = th.symbol_index("⊖").ok_or_else(err)?;
    let (p, m) = (&th.symbols[plus], &th.symbols[monus]);
    let arity_ok = m.arity.len() == 2 && m.arity.le(1, 0) && !m.arity.le(0, 1);
    if p.arity.len() != 2 || !p.coherent || m.coherent || !arity_ok {
        return Err(err());
    }
    Ok(MonusOps { zero: a.apply(zero, &[]).expect("constant"), monus })
}

/// Conditions `0 <= a`, `a⊖0 = a`, `a⊖a = 0`, then the ideal argument
/// replayed on every ideal `A ↬ A`.
pub fn check_noncoherent_example(a: &Arc<Algebra>, cap: u64) -> Result<CheckResult, ShapeMismatch> {
    check_noncoherent_ideals(a, a, cap)
}

pub fn check_noncoherent_ideals(a: &Arc<Algebra>, b: &Arc<Algebra>, cap: u64) -> Result<CheckResult, ShapeMismatch> {
    let ops_a = monus_shape(a)?;
    let ops_b = monus_shape(b)?;
    if a.theory() != b.theory() {
        return Err(ShapeMismatch(b.theory().name.clone()));
    }
    let mut r = CheckResult::new("noncoherent");
    for (alg, ops) in [(a, &ops_a), (b, &ops_b)] {
        for x in 0..alg.size() {
            let el = || vec![("a", alg.name(x).to_string())];
            if !alg.carrier().le(ops.zero, x) {
                r.fail(Counterexample::new("0 <= a fails", el()));
            }
            if alg.apply(ops.monus, &[x, ops.zero]) != Some(x) {
                r.fail(Counterexample::new("a⊖0 = a fails", el()));
            }
            if alg.apply(ops.monus, &[x, x]) != Some(ops.zero) {
                r.fail(Counterexample::new("a⊖a = 0 fails", el()));
            }
        }
    }
    if r.verdict == Verdict::Fail {
        return Ok(r);
    }
    let ideals = enumerate_ideals(a, b, cap).expect("same theory");
    r.note("ideals", ideals.relations.len());
    r.note("exact", ideals.exact);
    let (z_a, z_b) = (ops_a.zero, ops_b.zero);
    let mut steps = 0usize;
    for d in &ideals.relations {
        let pairs = d.pairs();
        for &(x, y) in &pairs {
            let pair = |tag: &str| {
                Counterexample::new(
                    format!("ideal {d}: {tag}"),
                    vec![("x", a.name(x).into()), ("y", b.name(y).into())],
                )
            };
            // 0 <= x gives 0 D y
            steps += 1;
            if !d.contains(z_a, y) {
                r.fail(pair("(0,y) missing"));
                continue;
            }
            // (x,y) ⊖ (0,y) = (x⊖0, y⊖y) = (x, 0)
            steps += 1;
            let lhs = a.apply(ops_a.monus, &[x, z_a]).expect("0 <= x");
            let rhs = b.apply(ops_b.monus, &[y, y]).expect("y <= y");
            if (lhs, rhs) != (x, z_b) || !d.contains(x, z_b) {
                r.fail(pair("(x,0) missing"));
                continue;
            }
            // x D 0 and 0 D v give x D v for every v reached by D
            for &(_, v) in &pairs {
                steps += 1;
                if !d.contains(x, v) {
                    r.fail(Counterexample::new(
                        format!("ideal {d}: composite step fails"),
                        vec![("x", a.name(x).into()), ("v", b.name(v).into())],
                    ));
                }
            }
        }
        if let Some(z) = maltsev_ideal_violation(d) {
            r.fail(zigzag_counterexample(d, z));
        }
    }
    r.note("proof_steps_checked", steps);
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{check_homomorphism, comma_algebra, AlgebraBuilder};
    use crate::oset::OSet;
    use crate::relations::{is_congruence, DEFAULT_CAP};
    use crate::theory::{lax_proto1, pointed_set, trunc_monoid};

    fn chain_model(n: usize) -> Arc<Algebra> {
        Arc::new(
            AlgebraBuilder::new(lax_proto1(), OSet::chain(n))
                .constant("0", "0")
                .op_fn("alpha", |t| t[0])
                .op_fn("theta", |t| t[0])
                .build()
                .unwrap(),
        )
    }

    fn trunc(n: usize) -> Arc<Algebra> {
        Arc::new(
            AlgebraBuilder::new(trunc_monoid(), OSet::chain(n))
                .constant("0", "0")
                .op_fn("+", |t| (t[0] + t[1]).min(n - 1))
                .op_fn("⊖", |t| t[0] - t[1])
                .build()
                .unwrap(),
        )
    }

    fn pointed(n: usize) -> Arc<Algebra> {
        let names: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        Arc::new(AlgebraBuilder::new(pointed_set(), OSet::discrete(&names)).constant("0", "0").build().unwrap())
    }

    fn hom(dom: &Arc<Algebra>, cod: &Arc<Algebra>, values: Vec<usize>) -> Homomorphism {
        let map = MonotoneMap::new(dom.carrier().clone(), cod.carrier().clone(), values).unwrap();
        check_homomorphism(map, dom.clone(), cod.clone()).unwrap()
    }

    #[test]
    fn verdicts_combine() {
        assert_eq!(Verdict::Pass.combine(Verdict::Inconclusive), Verdict::Inconclusive);
        assert_eq!(Verdict::Inconclusive.combine(Verdict::Fail), Verdict::Fail);
    }

    #[test]
    fn full_product_has_the_property() {
        let a = chain_model(2);
        let full = Relation::full(a.clone(), a).unwrap();
        assert!(check_maltsev_ideal_property(&full).unwrap().passed());
    }

    #[test]
    fn order_on_chain_fails_zigzag() {
        let a = chain_model(2);
        let le = Relation::order(a.clone()).unwrap();
        let r = check_maltsev_ideal_property(&le).unwrap();
        assert_eq!(r.verdict, Verdict::Fail);
        let got: Vec<&str> = r.counterexamples[0].elements.iter().map(|(_, v)| v.as_str()).collect();
        assert_eq!(got, vec!["1", "1", "1", "0", "0", "0"]);
        assert!(check_maltsev_ideal_property(&Relation::diagonal(a)).is_err());
    }

    #[test]
    fn comma_into_chain_on_trunc_monoid() {
        let a = trunc(3);
        let f = hom(&a, &a, vec![0, 1, 2]);
        let g = hom(&a, &a, vec![0, 0, 0]);
        for (p, q) in [(&g, &f), (&f, &g)] {
            let c = comma_algebra(p, q).unwrap();
            let d = Relation::new(a.clone(), a.clone(), &c.pairs).unwrap();
            assert!(is_ideal(&d).is_ok());
            assert!(check_maltsev_ideal_property(&d).unwrap().passed());
        }
        // the order is not closed under the non-monotone ⊖
        assert!(matches!(comma_algebra(&f, &f), Err(AlgebraError::NotClosed { .. })));
    }

    #[test]
    fn comma_of_identity_is_a_congruence() {
        let a = chain_model(3);
        let id = Homomorphism::identity(a.clone());
        let c = comma_algebra(&id, &id).unwrap();
        assert!(is_congruence(&Relation::new(a.clone(), a, &c.pairs).unwrap()).is_ok());
    }

    #[test]
    fn ord_maltsev_cases() {
        assert!(check_ord_maltsev(&pointed(1), &pointed(1), DEFAULT_CAP).unwrap().passed());
        assert!(check_ord_maltsev(&trunc(3), &trunc(3), DEFAULT_CAP).unwrap().passed());
        assert_eq!(check_ord_maltsev(&chain_model(2), &chain_model(2), DEFAULT_CAP).unwrap().verdict, Verdict::Fail);
    }

    #[test]
    fn constant_only_three_points_do_not_permute() {
        let r = check_permutability(&pointed(3), DEFAULT_CAP);
        assert_eq!(r.verdict, Verdict::Fail);
        assert!(check_permutability(&pointed(1), DEFAULT_CAP).passed());
    }

    #[test]
    fn degeneracy() {
        let a = chain_model(2);
        let r = check_degenerate(&a);
        assert_eq!(r.counterexamples[0].elements, vec![("a".into(), "0".into()), ("b".into(), "1".into())]);
        assert!(check_degenerate(&pointed(2)).passed());
    }

    #[test]
    fn proto_on_chain_and_pointed_set() {
        let b = SearchBudget::default();
        let r = check_proto(&chain_model(2), 1, &b, Side::Lax).unwrap();
        assert!(r.passed());
        assert_eq!(r.diagnostics["theta"], json!("z1"));
        assert_eq!(check_proto(&pointed(2), 1, &b, Side::Lax).unwrap().verdict, Verdict::Fail);
    }

    #[test]
    fn identity_diagram_passes() {
        let a = chain_model(2);
        let id = Homomorphism::identity(a.clone());
        let d = Ss5lDiagram { f: id.clone(), s: id.clone(), f2: id.clone(), s2: id.clone(), a: None, b: id.clone(), c: id };
        assert!(check_ss5l_instance(&d, Side::Lax).unwrap().passed());
    }

    #[test]
    fn pointed_set_diagram_fails() {
        let base = pointed(2);
        let names = ["0", "x", "y"];
        let big = Arc::new(AlgebraBuilder::new(pointed_set(), OSet::discrete(&names)).constant("0", "0").build().unwrap());
        let id = Homomorphism::identity(base.clone());
        let f2 = hom(&big, &base, vec![0, 1, 1]);
        let s2 = hom(&base, &big, vec![0, 1]);
        let b = hom(&base, &big, vec![0, 1]);
        let d = Ss5lDiagram { f: id.clone(), s: id.clone(), f2, s2, a: None, b, c: id };
        let r = check_ss5l_instance(&d, Side::Lax).unwrap();
        assert_eq!(r.verdict, Verdict::Fail);
        assert_eq!(r.counterexamples[0].elements, vec![("missed".into(), "y".into())]);
    }

    #[test]
    fn non_commuting_diagram_is_an_error() {
        let a = pointed(2);
        let id = Homomorphism::identity(a.clone());
        let zero = hom(&a, &a, vec![0, 0]);
        let d = Ss5lDiagram { f: id.clone(), s: id.clone(), f2: id.clone(), s2: id.clone(), a: None, b: zero, c: id };
        assert!(matches!(check_ss5l_instance(&d, Side::Lax), Err(Ss5lError::NotCommuting { .. })));
    }

    #[test]
    fn truncated_monoids() {
        assert!(check_noncoherent_example(&trunc(3), DEFAULT_CAP).unwrap().passed());
        assert!(check_noncoherent_example(&trunc(2), DEFAULT_CAP).unwrap().passed());
        let broken = Arc::new(
            AlgebraBuilder::new(trunc_monoid().signature_only("TruncSig"), OSet::chain(3))
                .constant("0", "0")
                .op_fn("+", |t| (t[0] + t[1]).min(2))
                .op_fn("⊖", |_| 0)
                .build()
                .unwrap(),
        );
        let r = check_noncoherent_example(&broken, DEFAULT_CAP).unwrap();
        assert_eq!(r.verdict, Verdict::Fail);
        assert_eq!(r.counterexamples[0].elements, vec![("a".into(), "1".into())]);
        assert!(check_noncoherent_example(&chain_model(2), DEFAULT_CAP).is_err());
    }
}
