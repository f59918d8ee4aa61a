//! Term operations of a finite algebra and bounded witness searches.

use std::cell::Cell;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;
use std::time::{Duration, Instant};

use thiserror::Error;

use crate::algebra::{eval_term, Algebra, EvalError, Side};
use crate::oset::{monotone_maps, OSet};
use crate::theory::{parse_term, Term, TermError, TheoryError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_term_depth: usize,
    pub max_clone_size: usize,
    pub time_limit: Duration,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget { max_term_depth: 4, max_clone_size: 20_000, time_limit: Duration::from_secs(30) }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BudgetStop {
    Depth,
    Size,
    Time,
}

/// An operation `power(context, carrier) -> carrier` together with a term
/// that defines it.
#[derive(Debug, Clone)]
pub struct TermOperation {
    pub algebra: Arc<Algebra>,
    pub context: Arc<OSet>,
    /// Values in the canonical order of monotone assignments.
    pub table: Vec<usize>,
    pub witness: Term,
}

impl TermOperation {
    pub fn depth(&self) -> usize {
        self.witness.depth()
    }

    pub fn term_text(&self) -> String {
        self.witness.display(self.algebra.theory(), &self.context).to_string()
    }

    /// Value at an assignment, `None` if the assignment is not monotone.
    pub fn value(&self, assignment: &[usize]) -> Option<usize> {
        let all = monotone_maps(&self.context, self.algebra.carrier());
        all.binary_search_by(|t| t.as_slice().cmp(assignment)).ok().map(|i| self.table[i])
    }
}

/// The term operations over one context, as far as the budget allowed.
#[derive(Debug, Clone)]
pub struct TermClone {
    pub algebra: Arc<Algebra>,
    pub context: Arc<OSet>,
    /// Monotone assignments `context -> carrier`, lexicographic.
    pub assignments: Vec<Vec<usize>>,
    pub members: Vec<TermOperation>,
    /// Set when generation stopped early; `None` means the fixpoint was reached.
    pub stopped: Option<BudgetStop>,
}

impl TermClone {
    pub fn is_complete(&self) -> bool {
        self.stopped.is_none()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn find_table(&self, table: &[usize]) -> Option<&TermOperation> {
        self.members.iter().find(|m| m.table == table)
    }
}

fn table_le(a: &OSet, s: &[usize], t: &[usize]) -> bool {
    s.iter().zip(t).all(|(&x, &y)| a.le(x, y))
}

pub fn generate_clone(a: &Arc<Algebra>, ctx: &OSet, budget: &SearchBudget) -> TermClone {
    generate_clone_until(a, ctx, budget, |_| false).0
}

/// Generates level by level and stops after the first level containing a
/// member accepted by `goal`; returns the index of the first such member.
pub fn generate_clone_until(
    a: &Arc<Algebra>,
    ctx: &OSet,
    budget: &SearchBudget,
    goal: impl Fn(&[usize]) -> bool,
) -> (TermClone, Option<usize>) {
    let start = Instant::now();
    let context = Arc::new(ctx.clone());
    let assignments = monotone_maps(ctx, a.carrier());
    let mut members: Vec<TermOperation> = Vec::new();
    let mut seen: HashMap<Vec<usize>, usize> = HashMap::new();
    let hit: Cell<Option<usize>> = Cell::new(None);
    let mut add = |table: Vec<usize>, witness: Term, members: &mut Vec<TermOperation>| {
        if seen.contains_key(&table) {
            return;
        }
        seen.insert(table.clone(), members.len());
        if hit.get().is_none() && goal(&table) {
            hit.set(Some(members.len()));
        }
        members.push(TermOperation { algebra: a.clone(), context: context.clone(), table, witness });
    };

    for v in 0..ctx.len() {
        add(assignments.iter().map(|s| s[v]).collect(), Term::Var(v), &mut members);
    }
    for c in a.theory().constants() {
        let value = a.apply(c, &[]).expect("constants are total");
        add(vec![value; assignments.len()], Term::App(c, Vec::new()), &mut members);
    }

    let carrier = a.carrier();
    let mut stopped = None;
    let mut frontier = 0;
    let mut depth = 0;
    while hit.get().is_none() && frontier < members.len() {
        if depth == budget.max_term_depth {
            stopped = Some(BudgetStop::Depth);
            break;
        }
        depth += 1;
        let level_end = members.len();
        'ops: for (op, sym) in a.theory().symbols.iter().enumerate() {
            if sym.is_constant() {
                continue;
            }
            let mut walker = TupleWalker::new(level_end, frontier);
            while let Some(t) = walker
                .next(&sym.arity, |p, q| table_le(carrier, &members[p].table, &members[q].table))
                .map(<[usize]>::to_vec)
            {
                let mut args = vec![0; t.len()];
                let table: Vec<usize> = (0..assignments.len())
                    .map(|i| {
                        for (slot, &m) in args.iter_mut().zip(&t) {
                            *slot = members[m].table[i];
                        }
                        a.apply(op, &args).expect("pointwise-monotone tuple")
                    })
                    .collect();
                let witness = Term::App(op, t.iter().map(|&m| members[m].witness.clone()).collect());
                add(table, witness, &mut members);
                if members.len() >= budget.max_clone_size {
                    stopped = Some(BudgetStop::Size);
                    break 'ops;
                }
                if start.elapsed() > budget.time_limit {
                    stopped = Some(BudgetStop::Time);
                    break 'ops;
                }
            }
        }
        if stopped.is_some() {
            break;
        }
        frontier = level_end;
    }
    let clone = TermClone { algebra: a.clone(), context, assignments, members, stopped };
    (clone, hit.get())
}

/// Walks tuples of member indices below `end`, monotone along `arity` for
/// a preorder on members, using at least one index `>= frontier`.
struct TupleWalker {
    end: usize,
    frontier: usize,
    cur: Vec<usize>,
    primed: bool,
}

impl TupleWalker {
    fn new(end: usize, frontier: usize) -> TupleWalker {
        TupleWalker { end, frontier, cur: Vec::new(), primed: false }
    }

    fn next(&mut self, arity: &OSet, le: impl Fn(usize, usize) -> bool) -> Option<&[usize]> {
        let k = arity.len();
        let mut candidate = if self.primed { self.cur.pop()? + 1 } else { 0 };
        self.primed = true;
        loop {
            let j = self.cur.len();
            let fresh = self.cur.iter().any(|&m| m >= self.frontier);
            let lo = if !fresh && j + 1 == k { self.frontier } else { 0 };
            let cur = &self.cur;
            let fits = |m: usize| {
                (0..j).all(|p| (!arity.le(p, j) || le(cur[p], m)) && (!arity.le(j, p) || le(m, cur[p])))
            };
            let found = (candidate.max(lo)..self.end).find(|&m| fits(m));
            match found {
                Some(m) => {
                    self.cur.push(m);
                    if self.cur.len() == k {
                        return Some(&self.cur);
                    }
                    candidate = 0;
                }
                None => candidate = self.cur.pop()? + 1,
            }
        }
    }
}

/// A ternary operation satisfying the two Mal'tsev inequality families.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaltsevWitness {
    /// `rho(a,b,c)` at index `(a*n + b)*n + c`.
    pub table: Vec<usize>,
    /// Present when found among term operations.
    pub term: Option<String>,
}

impl MaltsevWitness {
    pub fn rho(&self, n: usize, a: usize, b: usize, c: usize) -> usize {
        self.table[(a * n + b) * n + c]
    }
}

#[derive(Debug, Clone)]
pub struct MaltsevSearch {
    pub witness: Option<MaltsevWitness>,
    pub exhaustive: bool,
    /// Whether absence of a witness is conclusive.
    pub complete: bool,
    pub clone_size: Option<usize>,
    pub stopped: Option<BudgetStop>,
    /// Term operations meeting the inequalities without being monotone.
    pub noncoherent_candidates: usize,
}

/// First triple (in lexicographic order) where `rho` breaks
/// `b <= c ⇒ a <= rho(a,b,c)` or `a <= b ⇒ rho(a,b,c) <= c`.
pub fn maltsev_violation(a: &OSet, table: &[usize]) -> Option<(usize, usize, usize)> {
    let n = a.len();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let r = table[(x * n + y) * n + z];
                if (a.le(y, z) && !a.le(x, r)) || (a.le(x, y) && !a.le(r, z)) {
                    return Some((x, y, z));
                }
            }
        }
    }
    None
}

fn ternary_monotone(a: &OSet, table: &[usize]) -> bool {
    let n = a.len();
    let cube = n * n * n;
    let coords = |i: usize| (i / (n * n), i / n % n, i % n);
    (0..cube).all(|i| {
        let (x, y, z) = coords(i);
        (0..cube).all(|j| {
            let (u, v, w) = coords(j);
            !(a.le(x, u) && a.le(y, v) && a.le(z, w)) || a.le(table[i], table[j])
        })
    })
}

pub fn find_maltsev(a: &Arc<Algebra>, budget: &SearchBudget, exhaustive_tables: bool) -> MaltsevSearch {
    if exhaustive_tables {
        let witness = exhaustive_maltsev(a.carrier()).map(|table| MaltsevWitness { table, term: None });
        return MaltsevSearch {
            witness,
            exhaustive: true,
            complete: true,
            clone_size: None,
            stopped: None,
            noncoherent_candidates: 0,
        };
    }
    let carrier = a.carrier().clone();
    let ctx = OSet::discrete(&["a", "b", "c"]);
    let ok = |t: &[usize]| maltsev_violation(&carrier, t).is_none();
    let coherent_ok = |t: &[usize]| ok(t) && ternary_monotone(&carrier, t);
    let (clone, hit) = generate_clone_until(a, &ctx, budget, coherent_ok);
    let noncoherent_candidates =
        clone.members.iter().filter(|m| ok(&m.table) && !ternary_monotone(&carrier, &m.table)).count();
    let witness = hit.map(|i| {
        let m = &clone.members[i];
        MaltsevWitness { table: m.table.clone(), term: Some(m.term_text()) }
    });
    MaltsevSearch {
        witness,
        exhaustive: false,
        complete: clone.is_complete(),
        clone_size: Some(clone.len()),
        stopped: clone.stopped,
        noncoherent_candidates,
    }
}

/// Lexicographically least monotone `rho: A³ -> A` meeting both inequality
/// families, ignoring term-definability.
pub fn exhaustive_maltsev(a: &OSet) -> Option<Vec<usize>> {
    let n = a.len();
    let cube = n * n * n;
    let coords = |i: usize| (i / (n * n), i / n % n, i % n);
    let domains: Vec<Vec<usize>> = (0..cube)
        .map(|i| {
            let (x, y, z) = coords(i);
            (0..n).filter(|&r| (!a.le(y, z) || a.le(x, r)) && (!a.le(x, y) || a.le(r, z))).collect()
        })
        .collect();
    // comparable[i] lists (j, i<=j) for each j < i that is comparable with i
    let comparable: Vec<Vec<(usize, bool, bool)>> = (0..cube)
        .map(|i| {
            let (x, y, z) = coords(i);
            (0..i)
                .filter_map(|j| {
                    let (u, v, w) = coords(j);
                    let up = a.le(u, x) && a.le(v, y) && a.le(w, z);
                    let down = a.le(x, u) && a.le(y, v) && a.le(z, w);
                    (up || down).then_some((j, up, down))
                })
                .collect()
        })
        .collect();
    let mut table = vec![0; cube];
    fn go(
        i: usize,
        a: &OSet,
        domains: &[Vec<usize>],
        comparable: &[Vec<(usize, bool, bool)>],
        table: &mut Vec<usize>,
    ) -> bool {
        if i == table.len() {
            return true;
        }
        for &r in &domains[i] {
            let fits = comparable[i]
                .iter()
                .all(|&(j, up, down)| (!up || a.le(table[j], r)) && (!down || a.le(r, table[j])));
            if fits {
                table[i] = r;
                if go(i + 1, a, domains, comparable, table) {
                    return true;
                }
            }
        }
        false
    }
    if cube == 0 {
        return Some(Vec::new());
    }
    go(0, a, &domains, &comparable, &mut table).then_some(table)
}

#[derive(Debug, Clone)]
pub struct ProtoWitness {
    pub alphas: Vec<TermOperation>,
    pub theta: TermOperation,
}

#[derive(Debug, Clone)]
pub struct ProtoSearch {
    pub witness: Option<ProtoWitness>,
    pub complete: bool,
    pub stopped: Option<BudgetStop>,
    pub alpha_candidates: usize,
    pub theta_clone_size: usize,
}

pub fn theta_context(n: usize) -> OSet {
    let mut names: Vec<String> = (1..=n).map(|i| format!("z{i}")).collect();
    names.push("y".into());
    OSet::discrete(&names)
}

pub fn alpha_context() -> OSet {
    OSet::discrete(&["x", "y"])
}

/// Searches term operations for `alpha_1..alpha_n` and `theta`.
pub fn find_proto_witnesses(
    a: &Arc<Algebra>,
    n: usize,
    budget: &SearchBudget,
    side: Side,
) -> Result<ProtoSearch, TheoryError> {
    a.theory().require_pointed()?;
    let zero = a.zero().expect("pointed");
    let size = a.size();
    let carrier = a.carrier();
    let binary = generate_clone(a, &alpha_context(), budget);
    // binary assignments are all pairs, index x*size + y
    let alphas: Vec<&TermOperation> = binary
        .members
        .iter()
        .filter(|m| {
            (0..size).all(|x| {
                let d = m.table[x * size + x];
                match side {
                    Side::Lax => carrier.le(zero, d),
                    Side::Colax => carrier.le(d, zero),
                }
            })
        })
        .collect();
    let thetas = generate_clone(a, &theta_context(n), budget);
    let stopped = binary.stopped.or(thetas.stopped);
    let mut search = ProtoSearch {
        witness: None,
        complete: stopped.is_none(),
        stopped,
        alpha_candidates: alphas.len(),
        theta_clone_size: thetas.len(),
    };
    if alphas.is_empty() && n > 0 {
        return Ok(search);
    }
    let mut choice = vec![0usize; n];
    loop {
        // required theta values, indexed like the theta assignments
        let mut need: HashMap<usize, usize> = HashMap::new();
        let mut consistent = true;
        'pairs: for x in 0..size {
            for y in 0..size {
                let mut idx = 0;
                for &c in &choice {
                    idx = idx * size + alphas[c].table[x * size + y];
                }
                idx = idx * size + y;
                if *need.entry(idx).or_insert(x) != x {
                    consistent = false;
                    break 'pairs;
                }
            }
        }
        if consistent {
            if let Some(theta) = thetas.members.iter().find(|t| need.iter().all(|(&i, &x)| t.table[i] == x)) {
                search.witness = Some(ProtoWitness {
                    alphas: choice.iter().map(|&c| alphas[c].clone()).collect(),
                    theta: theta.clone(),
                });
                return Ok(search);
            }
        }
        // next choice, lexicographic
        let mut k = n;
        loop {
            if k == 0 {
                return Ok(search);
            }
            k -= 1;
            choice[k] += 1;
            if choice[k] < alphas.len() {
                break;
            }
            choice[k] = 0;
        }
    }
}

/// Witness terms as supplied by a user.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witnesses {
    /// `alphas` over `{x, y}`, `theta` over `{z1..zn, y}`.
    Proto { alphas: Vec<Term>, theta: Term },
    /// `rho` over `{a, b, c}`.
    Maltsev { rho: Term },
}

impl Witnesses {
    pub fn parse_proto(a: &Algebra, alphas: &[&str], theta: &str) -> Result<Witnesses, TermError> {
        let th = a.theory();
        let alphas = alphas.iter().map(|t| parse_term(t, &alpha_context(), th)).collect::<Result<Vec<_>, _>>()?;
        let theta = parse_term(theta, &theta_context(alphas.len()), th)?;
        Ok(Witnesses::Proto { alphas, theta })
    }

    pub fn parse_maltsev(a: &Algebra, rho: &str) -> Result<Witnesses, TermError> {
        let rho = parse_term(rho, &OSet::discrete(&["a", "b", "c"]), a.theory())?;
        Ok(Witnesses::Maltsev { rho })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum WitnessMode {
    Lax,
    Colax,
    Maltsev,
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct WitnessFailure {
    pub condition: String,
    /// Variable name and element name, in context order.
    pub assignment: Vec<(String, String)>,
    pub detail: String,
}

impl fmt::Display for WitnessFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.assignment.iter().map(|(v, e)| format!("{v}={e}")).collect();
        write!(f, "{} fails at {{{}}}: {}", self.condition, parts.join(", "), self.detail)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessReport {
    pub mode: WitnessMode,
    pub checked: usize,
    pub failures: Vec<WitnessFailure>,
}

impl WitnessReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WitnessError {
    #[error("witnesses do not match mode {0:?}")]
    ModeMismatch(WitnessMode),
    #[error("witness term refers to something outside its context or signature")]
    IllFormed,
    #[error(transparent)]
    Theory(#[from] TheoryError),
}

fn wellformed(t: &Term, ctx_len: usize, a: &Algebra) -> bool {
    match t {
        Term::Var(i) => *i < ctx_len,
        Term::App(op, args) => {
            *op < a.theory().symbols.len()
                && args.len() == a.symbol(*op).arity.len()
                && args.iter().all(|s| wellformed(s, ctx_len, a))
        }
    }
}

/// Evaluates the mode's conditions at every assignment, in canonical order.
pub fn verify_witnesses(a: &Algebra, witnesses: &Witnesses, mode: WitnessMode) -> Result<WitnessReport, WitnessError> {
    let le = |x: usize, y: usize| a.carrier().le(x, y);
    let name = |x: usize| a.name(x).to_string();
    let shown = |r: &Result<usize, EvalError>| match r {
        Ok(v) => a.name(*v).to_string(),
        Err(e) => format!("undefined ({e})"),
    };
    let mut failures = Vec::new();
    let mut checked = 0;
    let n = a.size();
    match (witnesses, mode) {
        (Witnesses::Proto { alphas, theta }, WitnessMode::Lax | WitnessMode::Colax) => {
            let zero = a.theory().require_pointed().map(|_| a.zero().expect("pointed"))?;
            let k = alphas.len();
            if !alphas.iter().all(|t| wellformed(t, 2, a)) || !wellformed(theta, k + 1, a) {
                return Err(WitnessError::IllFormed);
            }
            for (i, alpha) in alphas.iter().enumerate() {
                let cond = match mode {
                    WitnessMode::Lax => format!("0 <= alpha{}(x,x)", i + 1),
                    _ => format!("alpha{}(x,x) <= 0", i + 1),
                };
                for x in 0..n {
                    checked += 1;
                    let v = eval_term(a, alpha, &[x, x]);
                    let holds = match (&v, mode) {
                        (Ok(d), WitnessMode::Lax) => le(zero, *d),
                        (Ok(d), _) => le(*d, zero),
                        (Err(_), _) => false,
                    };
                    if !holds {
                        failures.push(WitnessFailure {
                            condition: cond.clone(),
                            assignment: vec![("x".into(), name(x))],
                            detail: format!("alpha{}(x,x) = {}", i + 1, shown(&v)),
                        });
                    }
                }
            }
            for x in 0..n {
                for y in 0..n {
                    checked += 1;
                    let vals: Result<Vec<usize>, EvalError> = alphas.iter().map(|t| eval_term(a, t, &[x, y])).collect();
                    let out = vals.and_then(|mut env| {
                        env.push(y);
                        eval_term(a, theta, &env)
                    });
                    if out.as_ref().ok() != Some(&x) {
                        failures.push(WitnessFailure {
                            condition: "theta(alpha(x,y),y) = x".into(),
                            assignment: vec![("x".into(), name(x)), ("y".into(), name(y))],
                            detail: format!("got {}", shown(&out)),
                        });
                    }
                }
            }
        }
        (Witnesses::Maltsev { rho }, WitnessMode::Maltsev) => {
            if !wellformed(rho, 3, a) {
                return Err(WitnessError::IllFormed);
            }
            for x in 0..n {
                for y in 0..n {
                    for z in 0..n {
                        let v = eval_term(a, rho, &[x, y, z]);
                        let triple = || vec![("a".into(), name(x)), ("b".into(), name(y)), ("c".into(), name(z))];
                        if le(y, z) {
                            checked += 1;
                            if !matches!(v, Ok(r) if le(x, r)) {
                                failures.push(WitnessFailure {
                                    condition: "b <= c implies a <= rho(a,b,c)".into(),
                                    assignment: triple(),
                                    detail: format!("rho(a,b,c) = {}", shown(&v)),
                                });
                            }
                        }
                        if le(x, y) {
                            checked += 1;
                            if !matches!(v, Ok(r) if le(r, z)) {
                                failures.push(WitnessFailure {
                                    condition: "a <= b implies rho(a,b,c) <= c".into(),
                                    assignment: triple(),
                                    detail: format!("rho(a,b,c) = {}", shown(&v)),
                                });
                            }
                        }
                    }
                }
            }
        }
        _ => return Err(WitnessError::ModeMismatch(mode)),
    }
    Ok(WitnessReport { mode, checked, failures })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::AlgebraBuilder;
    use crate::theory::{abelian_group, lax_proto1, pointed_set};

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

    fn z2() -> Arc<Algebra> {
        Arc::new(
            AlgebraBuilder::new(abelian_group(), OSet::antichain(2))
                .constant("0", "0")
                .op_fn("+", |t| (t[0] + t[1]) % 2)
                .op_fn("neg", |t| t[0])
                .build()
                .unwrap(),
        )
    }

    fn constants_only(order: OSet) -> Arc<Algebra> {
        Arc::new(AlgebraBuilder::new(pointed_set(), order).constant("0", "0").build().unwrap())
    }

    #[test]
    fn chain_binary_clone_is_projections_and_zero() {
        let c = generate_clone(&chain_model(2), &OSet::discrete(&["x", "y"]), &SearchBudget::default());
        assert!(c.is_complete());
        let tables: Vec<Vec<usize>> = c.members.iter().map(|m| m.table.clone()).collect();
        assert_eq!(tables, vec![vec![0, 0, 1, 1], vec![0, 1, 0, 1], vec![0, 0, 0, 0]]);
    }

    #[test]
    fn z2_clone_has_ternary_sum() {
        let a = z2();
        let c = generate_clone(&a, &OSet::discrete(&["x", "y", "z"]), &SearchBudget::default());
        let sum: Vec<usize> = c.assignments.iter().map(|t| (t[0] + t[1] + t[2]) % 2).collect();
        let m = c.find_table(&sum).expect("x+y+z");
        for (t, &v) in c.assignments.iter().zip(&m.table) {
            assert_eq!(eval_term(&a, &m.witness, t).unwrap(), v);
        }
    }

    #[test]
    fn empty_context_gives_constants() {
        let c = generate_clone(&z2(), &OSet::empty(), &SearchBudget::default());
        assert_eq!(c.len(), 1);
        assert_eq!(c.members[0].table, vec![0]);
    }

    #[test]
    fn depth_budget_marks_incomplete() {
        let budget = SearchBudget { max_term_depth: 1, ..SearchBudget::default() };
        let c = generate_clone(&z2(), &OSet::discrete(&["x", "y", "z"]), &budget);
        assert_eq!(c.stopped, Some(BudgetStop::Depth));
    }

    #[test]
    fn maltsev_in_z2() {
        let s = find_maltsev(&z2(), &SearchBudget::default(), false);
        let w = s.witness.unwrap();
        for a in 0..2 {
            for b in 0..2 {
                for c in 0..2 {
                    assert_eq!(w.rho(2, a, b, c), (a + b + c) % 2);
                }
            }
        }
    }

    #[test]
    fn no_maltsev_table_on_a_chain() {
        let s = find_maltsev(&chain_model(2), &SearchBudget::default(), true);
        assert!(s.witness.is_none() && s.complete);
        let clone_mode = find_maltsev(&chain_model(2), &SearchBudget::default(), false);
        assert!(clone_mode.witness.is_none() && clone_mode.complete);
    }

    #[test]
    fn codiscrete_has_first_projection() {
        let s = find_maltsev(&constants_only(OSet::codiscrete(2)), &SearchBudget::default(), true);
        assert_eq!(s.witness.unwrap().table, vec![0; 8]);
    }

    #[test]
    fn proto_witness_on_chain() {
        let s = find_proto_witnesses(&chain_model(2), 1, &SearchBudget::default(), Side::Lax).unwrap();
        let w = s.witness.unwrap();
        assert_eq!(w.alphas[0].term_text(), "x");
        assert_eq!(w.theta.term_text(), "z1");
    }

    #[test]
    fn no_proto_witness_for_pointed_set() {
        let s = find_proto_witnesses(&constants_only(OSet::antichain(2)), 1, &SearchBudget::default(), Side::Lax)
            .unwrap();
        assert!(s.witness.is_none() && s.complete);
        let err = find_proto_witnesses(&z2(), 1, &SearchBudget::default(), Side::Lax);
        assert!(err.is_ok());
    }

    #[test]
    fn first_projection_rho_fails_on_chain() {
        let a = chain_model(2);
        let w = Witnesses::parse_maltsev(&a, "a").unwrap();
        let r = verify_witnesses(&a, &w, WitnessMode::Maltsev).unwrap();
        let first = &r.failures[0];
        let names: Vec<&str> = first.assignment.iter().map(|(_, e)| e.as_str()).collect();
        assert_eq!(names, vec!["1", "1", "0"]);
    }

    #[test]
    fn chain_witnesses_verify() {
        let a = chain_model(5);
        let w = Witnesses::parse_proto(&a, &["alpha(x,y)"], "theta(z1,y)").unwrap();
        let r = verify_witnesses(&a, &w, WitnessMode::Lax).unwrap();
        assert!(r.passed());
        assert_eq!(r.checked, 5 + 25);
        assert_eq!(verify_witnesses(&a, &w, WitnessMode::Maltsev), Err(WitnessError::ModeMismatch(WitnessMode::Maltsev)));
    }
}
