//! Relations between finite algebras: generation as least fixpoints,
//! ideal/congruence classification, opposite and composition.
//!
//! A relation is stored as a dense pair matrix over `left × right`. Every
//! stored relation is a subalgebra of the product (closed under each
//! operation applied to tuples that are monotone in the product order).

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::algebra::Algebra;
use crate::oset::for_each_monotone;

/// Default bound on the number of candidate pair sets that brute-force
/// enumeration may visit.
pub const DEFAULT_CAP: u64 = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RelationError {
    #[error("relations are over different theories")]
    TheoryMismatch,
    #[error("congruences need the same algebra on both sides")]
    NotEndo,
    #[error("carriers of the composed relations do not match")]
    CarrierMismatch,
    #[error("pair ({0}, {1}) is outside the carriers")]
    OutOfRange(usize, usize),
    #[error("pair set is not closed under `{op}`: {tuple} gives {value}")]
    NotSubalgebra { op: String, tuple: String, value: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ClosureMode {
    Subalgebra,
    Ideal,
    Congruence,
}

/// Why a pair entered a generated relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Rule {
    Seed,
    SetComposite,
    Operation(String),
    DownUp,
    Diagonal,
    Transitive,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    pub pair: (usize, usize),
    pub rule: Rule,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Provenance {
    pub seeds: Vec<(usize, usize)>,
    pub trace: Vec<TraceStep>,
}

#[derive(Debug, Clone)]
pub struct Relation {
    left: Arc<Algebra>,
    right: Arc<Algebra>,
    bits: Vec<bool>,
    provenance: Provenance,
}

impl PartialEq for Relation {
    fn eq(&self, other: &Self) -> bool {
        self.bits == other.bits && same(&self.left, &other.left) && same(&self.right, &other.right)
    }
}

impl Eq for Relation {}

fn same(a: &Arc<Algebra>, b: &Arc<Algebra>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl Relation {
    /// Wraps a pair set, checking that it is a subalgebra of the product.
    pub fn new(left: Arc<Algebra>, right: Arc<Algebra>, pairs: &[(usize, usize)]) -> Result<Relation, RelationError> {
        if !same_theory(&left, &right) {
            return Err(RelationError::TheoryMismatch);
        }
        let m = right.size();
        let mut bits = vec![false; left.size() * m];
        for &(a, b) in pairs {
            if a >= left.size() || b >= m {
                return Err(RelationError::OutOfRange(a, b));
            }
            bits[a * m + b] = true;
        }
        if let Some(e) = subalgebra_violation(&left, &right, &bits) {
            return Err(e);
        }
        Ok(Relation { left, right, bits, provenance: Provenance { seeds: pairs.to_vec(), trace: Vec::new() } })
    }

    /// The diagonal of `a`, when it is a subalgebra (always, for algebras).
    pub fn diagonal(a: Arc<Algebra>) -> Relation {
        let pairs: Vec<(usize, usize)> = (0..a.size()).map(|i| (i, i)).collect();
        Relation::new(a.clone(), a, &pairs).expect("diagonal is a subalgebra")
    }

    /// The carrier order `<=` of `a` as a relation.
    pub fn order(a: Arc<Algebra>) -> Result<Relation, RelationError> {
        let pairs = a.carrier().le_pairs();
        Relation::new(a.clone(), a, &pairs)
    }

    pub fn full(left: Arc<Algebra>, right: Arc<Algebra>) -> Result<Relation, RelationError> {
        let pairs: Vec<(usize, usize)> =
            (0..left.size()).flat_map(|a| (0..right.size()).map(move |b| (a, b))).collect();
        Relation::new(left, right, &pairs)
    }

    pub fn left(&self) -> &Arc<Algebra> {
        &self.left
    }

    pub fn right(&self) -> &Arc<Algebra> {
        &self.right
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    #[inline]
    pub fn contains(&self, a: usize, b: usize) -> bool {
        self.bits[a * self.right.size() + b]
    }

    /// Pairs in canonical (row-major) order.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let m = self.right.size();
        self.bits.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| (i / m, i % m)).collect()
    }

    pub fn len(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_subset(&self, other: &Relation) -> bool {
        self.bits.iter().zip(&other.bits).all(|(&a, &b)| !a || b)
    }

    pub fn pair_name(&self, (a, b): (usize, usize)) -> String {
        format!("({},{})", self.left.name(a), self.right.name(b))
    }

    pub fn pairs_text(&self) -> String {
        let parts: Vec<String> = self.pairs().into_iter().map(|p| self.pair_name(p)).collect();
        format!("{{{}}}", parts.join(","))
    }

    fn key(&self) -> (usize, Vec<(usize, usize)>) {
        (self.len(), self.pairs())
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pairs_text())
    }
}

fn same_theory(a: &Algebra, b: &Algebra) -> bool {
    Arc::ptr_eq(a.theory(), b.theory()) || a.theory() == b.theory()
}

/// Applies every operation to every product-monotone tuple of pairs in
/// `bits`; returns the first result outside the set.
fn subalgebra_violation(left: &Algebra, right: &Algebra, bits: &[bool]) -> Option<RelationError> {
    let m = right.size();
    let members: Vec<usize> = (0..bits.len()).filter(|&i| bits[i]).collect();
    let le = |p: usize, q: usize| {
        let (a, b) = (members[p], members[q]);
        left.carrier().le(a / m, b / m) && right.carrier().le(a % m, b % m)
    };
    for (op, sym) in left.theory().symbols.iter().enumerate() {
        let mut bad = None;
        for_each_monotone(&sym.arity, members.len(), le, |t| {
            if bad.is_some() {
                return;
            }
            let (l, r) = component_tuples(&members, m, t);
            let v = left.apply(op, &l).unwrap() * m + right.apply(op, &r).unwrap();
            if !bits[v] {
                bad = Some(RelationError::NotSubalgebra {
                    op: sym.name.clone(),
                    tuple: format!("{}x{}", left.tuple_name(&l), right.tuple_name(&r)),
                    value: format!("({},{})", left.name(v / m), right.name(v % m)),
                });
            }
        });
        if bad.is_some() {
            return bad;
        }
    }
    None
}

fn component_tuples(members: &[usize], m: usize, t: &[usize]) -> (Vec<usize>, Vec<usize>) {
    (t.iter().map(|&i| members[i] / m).collect(), t.iter().map(|&i| members[i] % m).collect())
}

#[derive(Debug, Clone, Copy, Default)]
struct Added {
    operations: usize,
    ideal: usize,
    congruence: usize,
}

/// Least fixpoint of the closure rules selected by the flags.
fn close(
    left: &Algebra,
    right: &Algebra,
    bits: &mut [bool],
    ideal: bool,
    congruence: bool,
    trace: &mut Vec<TraceStep>,
) -> Added {
    let (n, m) = (left.size(), right.size());
    let mut added = Added::default();
    let push = |bits: &mut [bool], a: usize, b: usize, rule: Rule, trace: &mut Vec<TraceStep>| -> bool {
        if bits[a * m + b] {
            return false;
        }
        bits[a * m + b] = true;
        trace.push(TraceStep { pair: (a, b), rule });
        true
    };
    loop {
        let mut changed = false;
        if congruence {
            for a in 0..n {
                if push(bits, a, a, Rule::Diagonal, trace) {
                    added.congruence += 1;
                    changed = true;
                }
            }
        }
        if ideal || congruence {
            for p in 0..bits.len() {
                if !bits[p] {
                    continue;
                }
                let (x, y) = (p / m, p % m);
                for x2 in (0..n).filter(|&x2| left.carrier().le(x2, x)) {
                    for y2 in (0..m).filter(|&y2| right.carrier().le(y, y2)) {
                        if push(bits, x2, y2, Rule::DownUp, trace) {
                            added.ideal += 1;
                            changed = true;
                        }
                    }
                }
            }
        }
        if congruence {
            for a in 0..n {
                for b in 0..n {
                    if !bits[a * m + b] {
                        continue;
                    }
                    for c in 0..n {
                        if bits[b * m + c] && push(bits, a, c, Rule::Transitive, trace) {
                            added.congruence += 1;
                            changed = true;
                        }
                    }
                }
            }
        }
        // operation closure over the current member list
        let members: Vec<usize> = (0..bits.len()).filter(|&i| bits[i]).collect();
        let le = |p: usize, q: usize| {
            let (a, b) = (members[p], members[q]);
            left.carrier().le(a / m, b / m) && right.carrier().le(a % m, b % m)
        };
        let mut fresh = Vec::new();
        for (op, sym) in left.theory().symbols.iter().enumerate() {
            for_each_monotone(&sym.arity, members.len(), le, |t| {
                let (l, r) = component_tuples(&members, m, t);
                let v = left.apply(op, &l).unwrap() * m + right.apply(op, &r).unwrap();
                if !bits[v] {
                    fresh.push((v, op));
                }
            });
        }
        for (v, op) in fresh {
            if push(bits, v / m, v % m, Rule::Operation(left.symbol(op).name.clone()), trace) {
                added.operations += 1;
                changed = true;
            }
        }
        if !changed {
            return added;
        }
    }
}

/// The least relation containing `seeds` that is closed per `mode`.
pub fn generate_relation(
    left: Arc<Algebra>,
    right: Arc<Algebra>,
    seeds: &[(usize, usize)],
    mode: ClosureMode,
) -> Result<Relation, RelationError> {
    if !same_theory(&left, &right) {
        return Err(RelationError::TheoryMismatch);
    }
    if mode == ClosureMode::Congruence && !same(&left, &right) {
        return Err(RelationError::NotEndo);
    }
    let m = right.size();
    let mut bits = vec![false; left.size() * m];
    let mut trace = Vec::new();
    for &(a, b) in seeds {
        if a >= left.size() || b >= m {
            return Err(RelationError::OutOfRange(a, b));
        }
        if !bits[a * m + b] {
            bits[a * m + b] = true;
            trace.push(TraceStep { pair: (a, b), rule: Rule::Seed });
        }
    }
    let ideal = mode != ClosureMode::Subalgebra;
    close(&left, &right, &mut bits, ideal, mode == ClosureMode::Congruence, &mut trace);
    Ok(Relation { left, right, bits, provenance: Provenance { seeds: seeds.to_vec(), trace } })
}

/// A failure of `x' <= x, x R y, y <= y' ⇒ x' R y'`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IdealViolation {
    pub x_lower: usize,
    pub x: usize,
    pub y: usize,
    pub y_upper: usize,
}

pub fn ideal_violation(r: &Relation) -> Option<IdealViolation> {
    let (a, b) = (r.left.carrier(), r.right.carrier());
    for (x, y) in r.pairs() {
        for x_lower in (0..a.len()).filter(|&p| a.le(p, x)) {
            for y_upper in (0..b.len()).filter(|&q| b.le(y, q)) {
                if !r.contains(x_lower, y_upper) {
                    return Some(IdealViolation { x_lower, x, y, y_upper });
                }
            }
        }
    }
    None
}

pub fn is_ideal(r: &Relation) -> Result<(), IdealViolation> {
    ideal_violation(r).map_or(Ok(()), Err)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NotCongruence {
    DifferentCarriers,
    NotIdeal(IdealViolation),
    MissingDiagonal(usize),
    NotTransitive(usize, usize, usize),
}

pub fn is_congruence(r: &Relation) -> Result<(), NotCongruence> {
    if !same(&r.left, &r.right) {
        return Err(NotCongruence::DifferentCarriers);
    }
    is_ideal(r).map_err(NotCongruence::NotIdeal)?;
    let n = r.left.size();
    if let Some(a) = (0..n).find(|&a| !r.contains(a, a)) {
        return Err(NotCongruence::MissingDiagonal(a));
    }
    for (a, b) in r.pairs() {
        for c in 0..n {
            if r.contains(b, c) && !r.contains(a, c) {
                return Err(NotCongruence::NotTransitive(a, b, c));
            }
        }
    }
    Ok(())
}

/// Swaps the components. The opposite of an ideal need not be an ideal.
pub fn opposite(r: &Relation) -> Relation {
    let (n, m) = (r.left.size(), r.right.size());
    let mut bits = vec![false; n * m];
    for (a, b) in r.pairs() {
        bits[b * n + a] = true;
    }
    let swap = |&(a, b): &(usize, usize)| (b, a);
    Relation {
        left: r.right.clone(),
        right: r.left.clone(),
        bits,
        provenance: Provenance {
            seeds: r.provenance.seeds.iter().map(swap).collect(),
            trace: r.provenance.trace.iter().map(|s| TraceStep { pair: swap(&s.pair), rule: s.rule.clone() }).collect(),
        },
    }
}

/// Result of composing two relations, with the closure diagnostics.
#[derive(Debug, Clone)]
pub struct Composition {
    pub relation: Relation,
    /// `{(a, c) : ∃b. a R b ∧ b S c}`.
    pub set_composite: Vec<(usize, usize)>,
    pub added_by_operations: usize,
    pub added_by_ideal_closure: usize,
}

impl Composition {
    pub fn closure_added_pairs(&self) -> bool {
        self.added_by_operations + self.added_by_ideal_closure > 0
    }
}

/// `R ; S`: the least subalgebra-and-ideal containing the set composite.
pub fn compose(r: &Relation, s: &Relation) -> Result<Composition, RelationError> {
    if !same(&r.right, &s.left) {
        return Err(RelationError::CarrierMismatch);
    }
    let (n, mid, m) = (r.left.size(), r.right.size(), s.right.size());
    let mut bits = vec![false; n * m];
    let mut trace = Vec::new();
    for a in 0..n {
        for b in (0..mid).filter(|&b| r.contains(a, b)) {
            for c in (0..m).filter(|&c| s.contains(b, c)) {
                if !bits[a * m + c] {
                    bits[a * m + c] = true;
                    trace.push(TraceStep { pair: (a, c), rule: Rule::SetComposite });
                }
            }
        }
    }
    let mut set_composite: Vec<(usize, usize)> = trace.iter().map(|t| t.pair).collect();
    set_composite.sort_unstable();
    let added = close(&r.left, &s.right, &mut bits, true, false, &mut trace);
    let relation = Relation {
        left: r.left.clone(),
        right: s.right.clone(),
        bits,
        provenance: Provenance { seeds: set_composite.clone(), trace },
    };
    Ok(Composition {
        relation,
        set_composite,
        added_by_operations: added.operations,
        added_by_ideal_closure: added.ideal,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EnumerationMethod {
    /// Every superset of the least closed set, filtered by the predicate.
    BruteForce,
    /// Closure of the principal relations under binary joins.
    PrincipalJoins,
}

#[derive(Debug, Clone)]
pub struct Enumeration {
    pub relations: Vec<Relation>,
    pub method: EnumerationMethod,
    /// Whether the list is known to contain every relation of the kind.
    pub exact: bool,
}

/// All congruences of `a`, in canonical order (by size, then pair list).
pub fn enumerate_congruences(a: &Arc<Algebra>, cap: u64) -> Enumeration {
    enumerate(a.clone(), a.clone(), ClosureMode::Congruence, cap)
}

/// All ideals `A ↬ B`, in canonical order.
pub fn enumerate_ideals(a: &Arc<Algebra>, b: &Arc<Algebra>, cap: u64) -> Result<Enumeration, RelationError> {
    if !same_theory(a, b) {
        return Err(RelationError::TheoryMismatch);
    }
    Ok(enumerate(a.clone(), b.clone(), ClosureMode::Ideal, cap))
}

fn enumerate(left: Arc<Algebra>, right: Arc<Algebra>, mode: ClosureMode, cap: u64) -> Enumeration {
    let base = generate_relation(left.clone(), right.clone(), &[], mode).expect("checked carriers");
    let free: Vec<usize> = (0..base.bits.len()).filter(|&i| !base.bits[i]).collect();
    let (mut relations, method) = if free.len() < 64 && (1u64 << free.len()) <= cap {
        (brute_force(&base, &free, mode), EnumerationMethod::BruteForce)
    } else {
        (principal_joins(&base, mode), EnumerationMethod::PrincipalJoins)
    };
    relations.sort_by_key(Relation::key);
    // every closed set is the join of the principal ones below it, so both
    // methods are exhaustive
    Enumeration { relations, method, exact: true }
}

fn brute_force(base: &Relation, free: &[usize], mode: ClosureMode) -> Vec<Relation> {
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << free.len()) {
        let mut bits = base.bits.clone();
        for (k, &i) in free.iter().enumerate() {
            if mask >> k & 1 == 1 {
                bits[i] = true;
            }
        }
        if subalgebra_violation(&base.left, &base.right, &bits).is_some() {
            continue;
        }
        let rel = Relation {
            left: base.left.clone(),
            right: base.right.clone(),
            bits,
            provenance: Provenance::default(),
        };
        let ok = match mode {
            ClosureMode::Subalgebra => true,
            ClosureMode::Ideal => is_ideal(&rel).is_ok(),
            ClosureMode::Congruence => is_congruence(&rel).is_ok(),
        };
        if ok {
            let seeds = rel.pairs();
            out.push(Relation { provenance: Provenance { seeds, trace: Vec::new() }, ..rel });
        }
    }
    out
}

/// Join of two closed relations: the closure of their union.
pub fn join(r: &Relation, s: &Relation, mode: ClosureMode) -> Result<Relation, RelationError> {
    if !same(&r.left, &s.left) || !same(&r.right, &s.right) {
        return Err(RelationError::CarrierMismatch);
    }
    let mut seeds = r.pairs();
    seeds.extend(s.pairs());
    seeds.sort_unstable();
    seeds.dedup();
    generate_relation(r.left.clone(), r.right.clone(), &seeds, mode)
}

fn principal_joins(base: &Relation, mode: ClosureMode) -> Vec<Relation> {
    let (left, right) = (&base.left, &base.right);
    let mut found = vec![base.clone()];
    for (a, b) in base.pairs_complement() {
        let r = generate_relation(left.clone(), right.clone(), &[(a, b)], mode).expect("in range");
        if !found.contains(&r) {
            found.push(r);
        }
    }
    let principal = found.len();
    let mut i = 0;
    while i < found.len() {
        for j in 1..principal {
            let r = join(&found[i], &found[j], mode).expect("same carriers");
            if !found.contains(&r) {
                found.push(r);
            }
        }
        i += 1;
    }
    found
}

impl Relation {
    fn pairs_complement(&self) -> Vec<(usize, usize)> {
        let m = self.right.size();
        (0..self.bits.len()).filter(|&i| !self.bits[i]).map(|i| (i / m, i % m)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::AlgebraBuilder;
    use crate::oset::OSet;
    use crate::theory::{abelian_group, lax_proto1, pointed_set};

    fn chain_model() -> Arc<Algebra> {
        Arc::new(
            AlgebraBuilder::new(lax_proto1(), OSet::chain(2))
                .constant("0", "0")
                .op_fn("alpha", |t| t[0])
                .op_fn("theta", |t| t[0])
                .build()
                .unwrap(),
        )
    }

    fn cyclic(n: usize) -> Arc<Algebra> {
        Arc::new(
            AlgebraBuilder::new(abelian_group(), OSet::antichain(n))
                .constant("0", "0")
                .op_fn("+", |t| (t[0] + t[1]) % n)
                .op_fn("neg", |t| (n - t[0]) % n)
                .build()
                .unwrap(),
        )
    }

    #[test]
    fn empty_seed_ideal_on_chain() {
        let a = chain_model();
        let r = generate_relation(a.clone(), a, &[], ClosureMode::Ideal).unwrap();
        assert_eq!(r.pairs(), vec![(0, 0), (0, 1)]);
    }

    #[test]
    fn congruences_contain_order() {
        let a = chain_model();
        let r = generate_relation(a.clone(), a.clone(), &[], ClosureMode::Congruence).unwrap();
        assert_eq!(r.pairs(), a.carrier().le_pairs());
        let all: Vec<(usize, usize)> = vec![(0, 0), (0, 1), (1, 0), (1, 1)];
        let top = generate_relation(a.clone(), a, &all, ClosureMode::Congruence).unwrap();
        assert_eq!(top.len(), 4);
    }

    #[test]
    fn congruence_needs_one_algebra() {
        let a = chain_model();
        let b = Arc::new(a.renamed(vec!["p".into(), "q".into()]));
        assert_eq!(generate_relation(a, b, &[], ClosureMode::Congruence).unwrap_err(), RelationError::NotEndo);
    }

    #[test]
    fn ideal_checks() {
        let a = chain_model();
        let diag = Relation::diagonal(a.clone());
        assert_eq!(is_ideal(&diag), Err(IdealViolation { x_lower: 0, x: 0, y: 0, y_upper: 1 }));
        assert!(is_ideal(&Relation::full(a.clone(), a.clone()).unwrap()).is_ok());
        let le = Relation::order(a.clone()).unwrap();
        assert!(is_congruence(&le).is_ok());
        let ge = opposite(&le);
        assert!(is_ideal(&ge).is_err());
        assert_eq!(opposite(&ge), le);
        assert_eq!(opposite(&diag), diag);
    }

    #[test]
    fn missing_diagonal_reported() {
        let th = Arc::new(pointed_set());
        let a = Arc::new(AlgebraBuilder::new(th, OSet::antichain(2)).constant("0", "0").build().unwrap());
        let r = Relation::new(a.clone(), a, &[(0, 0)]).unwrap();
        assert_eq!(is_congruence(&r), Err(NotCongruence::MissingDiagonal(1)));
    }

    #[test]
    fn z4_mod2_composes_to_itself() {
        let z4 = cyclic(4);
        let mod2 = generate_relation(z4.clone(), z4.clone(), &[(0, 2)], ClosureMode::Congruence).unwrap();
        assert_eq!(mod2.len(), 8);
        let c = compose(&mod2, &mod2).unwrap();
        assert_eq!(c.relation, mod2);
        assert!(!c.closure_added_pairs());
    }

    #[test]
    fn diagonal_is_a_unit_on_congruences() {
        let a = chain_model();
        let cong = enumerate_congruences(&a, DEFAULT_CAP);
        let bottom = &cong.relations[0];
        for r in &cong.relations {
            assert_eq!(&compose(r, bottom).unwrap().relation, r);
        }
    }

    #[test]
    fn congruence_counts() {
        assert_eq!(enumerate_congruences(&chain_model(), DEFAULT_CAP).relations.len(), 2);
        assert_eq!(enumerate_congruences(&cyclic(2), DEFAULT_CAP).relations.len(), 2);
        assert_eq!(enumerate_congruences(&cyclic(4), DEFAULT_CAP).relations.len(), 3);
        let th = Arc::new(pointed_set());
        let one = Arc::new(AlgebraBuilder::new(th, OSet::antichain(1)).constant("0", "0").build().unwrap());
        assert_eq!(enumerate_congruences(&one, DEFAULT_CAP).relations.len(), 1);
    }

    #[test]
    fn both_enumeration_methods_agree() {
        for a in [chain_model(), cyclic(3), cyclic(4)] {
            let brute = enumerate_congruences(&a, u64::MAX);
            let joins = enumerate_congruences(&a, 0);
            assert_eq!(brute.method, EnumerationMethod::BruteForce);
            assert_eq!(joins.method, EnumerationMethod::PrincipalJoins);
            assert_eq!(brute.relations, joins.relations);
            let bi = enumerate_ideals(&a, &a, u64::MAX).unwrap();
            let ji = enumerate_ideals(&a, &a, 0).unwrap();
            assert_eq!(bi.relations, ji.relations);
        }
    }
}
