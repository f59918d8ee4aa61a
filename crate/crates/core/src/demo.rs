//! The acceptance corpus as library calls: one function per criterion,
//! each returning a verdict with its evidence.

use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{Algebra, Side};
use crate::checks::{
    check_degenerate, check_maltsev, check_noncoherent_ideals, check_ord_maltsev, check_permutability, check_proto,
    check_ss5l_instance, Counterexample, Verdict,
};
use crate::clone::{find_maltsev, verify_witnesses, SearchBudget, WitnessMode, Witnesses};
use crate::corpus::{
    bottom_chain_model, demo_corpus, exact_corpus, lax_diagrams, lax_models, pointed_set_diagram,
    top_element_model, trunc_monoid_chain, CORPUS_SEED,
};
use crate::oset::for_each_monotone;
use crate::relations::{compose, enumerate_congruences, Relation, DEFAULT_CAP};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CriterionResult {
    pub id: u32,
    pub title: String,
    pub verdict: Verdict,
    pub details: Vec<String>,
    pub counterexamples: Vec<Counterexample>,
}

impl CriterionResult {
    fn new(id: u32, title: &str) -> CriterionResult {
        CriterionResult { id, title: title.into(), verdict: Verdict::Pass, details: Vec::new(), counterexamples: Vec::new() }
    }

    fn require(&mut self, ok: bool, what: impl Into<String>) {
        let what = what.into();
        if !ok {
            self.verdict = Verdict::Fail;
            self.details.push(format!("FAILED: {what}"));
        } else {
            self.details.push(what);
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DemoReport {
    pub criteria: Vec<CriterionResult>,
}

impl DemoReport {
    pub fn verdict(&self) -> Verdict {
        self.criteria.iter().fold(Verdict::Pass, |v, c| v.combine(c.verdict))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.criteria {
            out.push_str(&format!("[{}] {}. {}\n", c.verdict, c.id, c.title));
            for d in &c.details {
                out.push_str(&format!("    {d}\n"));
            }
            for x in &c.counterexamples {
                out.push_str(&format!("    counterexample: {x}\n"));
            }
        }
        out.push_str(&format!("overall: {}\n", self.verdict()));
        out
    }
}

fn proto_witnesses_hold(a: &Algebra, mode: WitnessMode) -> (bool, usize) {
    let w = Witnesses::parse_proto(a, &["alpha(x,y)"], "theta(z1,y)").expect("terms of the theory");
    let r = verify_witnesses(a, &w, mode).expect("witnesses match the mode");
    (r.passed(), r.checked)
}

pub fn criterion_1() -> CriterionResult {
    let mut c = CriterionResult::new(1, "bottom-element chains carry lax witnesses alpha = theta = first projection");
    for n in [2, 5] {
        let a = bottom_chain_model(n);
        c.require(a.revalidate().is_ok(), format!("{n}-chain model validates"));
        let (ok, checked) = proto_witnesses_hold(&a, WitnessMode::Lax);
        c.require(ok, format!("{n}-chain: witnesses hold on all {checked} instances"));
    }
    c
}

pub fn criterion_2() -> CriterionResult {
    let mut c = CriterionResult::new(2, "top-element model carries colax witnesses");
    for n in [3, 5] {
        let a = top_element_model(n);
        c.require(a.revalidate().is_ok(), format!("non-positive {n}-chain validates"));
        let (ok, checked) = proto_witnesses_hold(&a, WitnessMode::Colax);
        c.require(ok, format!("non-positive {n}-chain: colax witnesses hold on all {checked} instances"));
    }
    c
}

/// Checks `y <= rho(y,x,x) <= rho(y,y,x) <= x` for every `x <= y`.
pub fn rho_chain_failure(a: &Algebra, table: &[usize]) -> Option<(usize, usize, &'static str)> {
    let n = a.size();
    let le = |p: usize, q: usize| a.carrier().le(p, q);
    let rho = |p: usize, q: usize, r: usize| table[(p * n + q) * n + r];
    for (x, y) in a.carrier().le_pairs() {
        if !le(y, rho(y, x, x)) {
            return Some((x, y, "y <= rho(y,x,x)"));
        }
        if !le(rho(y, x, x), rho(y, y, x)) {
            return Some((x, y, "rho(y,x,x) <= rho(y,y,x)"));
        }
        if !le(rho(y, y, x), x) {
            return Some((x, y, "rho(y,y,x) <= x"));
        }
    }
    None
}

pub fn criterion_3() -> CriterionResult {
    let mut c = CriterionResult::new(3, "an exhaustive Mal'tsev table forces a degenerate order");
    let corpus = demo_corpus();
    let generated = corpus.iter().filter(|a| a.name.starts_with("gen-")).count();
    c.require(generated >= 20, format!("{generated} generated algebras (seed {CORPUS_SEED:#x}), carriers <= 4"));
    let budget = SearchBudget::default();
    let rows: Vec<(String, bool, Verdict, Option<String>)> = corpus
        .par_iter()
        .map(|a| {
            let s = find_maltsev(&a.algebra, &budget, true);
            match s.witness {
                None => (a.name.clone(), false, Verdict::Pass, None),
                Some(w) => {
                    let degenerate = check_degenerate(&a.algebra).verdict;
                    let chain = rho_chain_failure(&a.algebra, &w.table)
                        .map(|(x, y, step)| format!("x={}, y={}: {step}", a.algebra.name(x), a.algebra.name(y)));
                    (a.name.clone(), true, degenerate, chain)
                }
            }
        })
        .collect();
    let found = rows.iter().filter(|r| r.1).count();
    c.details.push(format!("{found} of {} algebras admit a Mal'tsev table", rows.len()));
    for (name, has, degenerate, chain) in &rows {
        if *has && *degenerate != Verdict::Pass {
            c.require(false, format!("{name}: Mal'tsev table on a non-degenerate order"));
        }
        if let Some(step) = chain {
            c.require(false, format!("{name}: chain step fails at {step}"));
        }
    }
    c
}

/// All `2^(n^3)` ternary tables on a carrier, monotone or not, tested for
/// monotonicity and both inequality families. Returns how many qualify.
pub fn brute_force_maltsev_tables(a: &Algebra) -> (u64, u64) {
    let n = a.size();
    let cube = n * n * n;
    let le = |p: usize, q: usize| a.carrier().le(p, q);
    let total = (n as u64).pow(cube as u32);
    let mut good = 0;
    let mut table = vec![0usize; cube];
    for code in 0..total {
        let mut k = code;
        for slot in table.iter_mut() {
            *slot = (k % n as u64) as usize;
            k /= n as u64;
        }
        let at = |p: usize, q: usize, r: usize| table[(p * n + q) * n + r];
        let mut ok = true;
        'outer: for p in 0..n {
            for q in 0..n {
                for r in 0..n {
                    let v = at(p, q, r);
                    if (le(q, r) && !le(p, v)) || (le(p, q) && !le(v, r)) {
                        ok = false;
                        break 'outer;
                    }
                    for (p2, q2, r2) in (0..cube).map(|i| (i / (n * n), i / n % n, i % n)) {
                        if le(p, p2) && le(q, q2) && le(r, r2) && !le(v, at(p2, q2, r2)) {
                            ok = false;
                            break 'outer;
                        }
                    }
                }
            }
        }
        good += ok as u64;
    }
    (total, good)
}

pub fn criterion_4() -> CriterionResult {
    let mut c = CriterionResult::new(4, "lax protomodular witnesses without the Ord-Mal'tsev property");
    let a = Arc::new(bottom_chain_model(2));
    let budget = SearchBudget::default();
    let proto = check_proto(&a, 1, &budget, Side::Lax).expect("pointed");
    let shown = |k: &str| proto.diagnostics.get(k).map(|v| v.to_string()).unwrap_or_default();
    c.require(proto.passed(), format!("(a) witnesses found: alpha = {}, theta = {}", shown("alphas"), shown("theta")));
    let ex = check_maltsev(&a, &budget, true);
    c.require(ex.verdict == Verdict::Fail, "(b) exhaustive table search finds no rho");
    let (total, good) = brute_force_maltsev_tables(&a);
    c.require(good == 0, format!("(b) brute force: {good} of {total} ternary tables qualify"));
    let om = check_ord_maltsev(&a, &a, DEFAULT_CAP).expect("same theory");
    c.require(om.verdict == Verdict::Fail && !om.counterexamples.is_empty(), "(c) some ideal fails the zig-zag");
    c.counterexamples.extend(om.counterexamples.into_iter().take(1));
    c
}

/// Least relation containing `seed` among the closed pair sets listed.
fn least_closed_containing(closed: &[Vec<bool>], seed: &[bool]) -> Option<Vec<bool>> {
    let mut best: Option<Vec<bool>> = None;
    for s in closed {
        if seed.iter().zip(s).all(|(&a, &b)| !a || b) {
            best = Some(match best {
                None => s.clone(),
                Some(b) => b.iter().zip(s).map(|(&x, &y)| x && y).collect(),
            });
        }
    }
    best
}

/// Every pair set on `A × A` closed under the operations (on monotone
/// tuples) and under the ideal rule, found by testing all `2^(n²)` sets.
pub fn closed_pair_sets(a: &Algebra) -> Vec<Vec<bool>> {
    let n = a.size();
    let cells = n * n;
    let le = |p: usize, q: usize| a.carrier().le(p, q);
    let mut out = Vec::new();
    for code in 0u64..(1 << cells) {
        let bits: Vec<bool> = (0..cells).map(|i| code >> i & 1 == 1).collect();
        let has = |p: usize, q: usize| bits[p * n + q];
        let ideal = (0..cells).filter(|&i| bits[i]).all(|i| {
            let (x, y) = (i / n, i % n);
            (0..n).all(|x2| (0..n).all(|y2| !(le(x2, x) && le(y, y2)) || has(x2, y2)))
        });
        if !ideal {
            continue;
        }
        let members: Vec<usize> = (0..cells).filter(|&i| bits[i]).collect();
        let mut closed = true;
        for (op, sym) in a.theory().symbols.iter().enumerate() {
            for_each_monotone(
                &sym.arity,
                members.len(),
                |p, q| le(members[p] / n, members[q] / n) && le(members[p] % n, members[q] % n),
                |t| {
                    if closed {
                        let l: Vec<usize> = t.iter().map(|&i| members[i] / n).collect();
                        let r: Vec<usize> = t.iter().map(|&i| members[i] % n).collect();
                        closed = has(a.apply(op, &l).unwrap(), a.apply(op, &r).unwrap());
                    }
                },
            );
        }
        if closed {
            out.push(bits);
        }
    }
    out
}

fn composite_matches_oracle(closed: &[Vec<bool>], r: &Relation, s: &Relation) -> bool {
    let n = r.left().size();
    let mut seed = vec![false; n * n];
    for (a, b) in r.pairs() {
        for c in 0..n {
            if s.contains(b, c) {
                seed[a * n + c] = true;
            }
        }
    }
    let composite = compose(r, s).expect("same algebra").relation;
    let got: Vec<bool> = (0..n * n).map(|i| composite.contains(i / n, i % n)).collect();
    least_closed_containing(closed, &seed) == Some(got)
}

pub fn criterion_5() -> CriterionResult {
    let mut c = CriterionResult::new(5, "a Mal'tsev term makes congruences permute");
    let budget = SearchBudget::default();
    let rows: Vec<(String, bool, Verdict, bool, Option<Counterexample>)> = exact_corpus()
        .par_iter()
        .map(|a| {
            let m = check_maltsev(&a.algebra, &budget, false);
            if m.verdict != Verdict::Pass {
                return (a.name.clone(), false, Verdict::Pass, true, None);
            }
            let p = check_permutability(&a.algebra, DEFAULT_CAP);
            let cong = enumerate_congruences(&a.algebra, DEFAULT_CAP);
            let closed = closed_pair_sets(&a.algebra);
            let oracle_ok = cong.exact
                && cong.relations.iter().all(|r| cong.relations.iter().all(|s| composite_matches_oracle(&closed, r, s)));
            (a.name.clone(), true, p.verdict, oracle_ok, p.counterexamples.into_iter().next())
        })
        .collect();
    let with_term = rows.iter().filter(|r| r.1).count();
    c.details.push(format!("{with_term} of {} exact-corpus algebras have a Mal'tsev term", rows.len()));
    for (name, has, perm, oracle, cx) in rows {
        if !has {
            continue;
        }
        c.require(perm == Verdict::Pass, format!("{name}: congruences permute"));
        c.require(oracle, format!("{name}: every composite equals the brute-force least fixpoint"));
        c.counterexamples.extend(cx);
    }
    c
}

pub fn criterion_6() -> CriterionResult {
    let mut c = CriterionResult::new(6, "ideal zig-zag property and congruence permutability agree per algebra");
    let rows: Vec<(String, Verdict, Verdict)> = exact_corpus()
        .par_iter()
        .map(|a| {
            let om = check_ord_maltsev(&a.algebra, &a.algebra, DEFAULT_CAP).expect("same theory").verdict;
            let perm = check_permutability(&a.algebra, DEFAULT_CAP).verdict;
            (a.name.clone(), om, perm)
        })
        .collect();
    let forward = rows.iter().filter(|r| r.1 == Verdict::Pass).all(|r| r.2 == Verdict::Pass);
    c.require(forward, "zig-zag on all ideals A->A implies permutability");
    let agree = rows.iter().filter(|r| r.1 == r.2).count();
    c.details.push(format!("{agree} of {} algebras agree", rows.len()));
    for (name, om, perm) in &rows {
        if om != perm {
            c.require(false, format!("{name}: ord-maltsev {om}, permutability {perm}"));
        }
    }
    c
}

pub fn criterion_7() -> CriterionResult {
    let mut c = CriterionResult::new(7, "truncated-subtraction monoids: conditions and ideal argument");
    let models: Vec<Arc<Algebra>> = (2..=4).map(|n| Arc::new(trunc_monoid_chain(n))).collect();
    for m in &models {
        c.require(m.revalidate().is_ok(), format!("{}-chain validates", m.size()));
    }
    let pairs: Vec<(usize, usize)> = (0..3).flat_map(|i| (0..3).map(move |j| (i, j))).collect();
    let rows: Vec<(usize, usize, crate::checks::CheckResult)> = pairs
        .par_iter()
        .map(|&(i, j)| {
            let r = check_noncoherent_ideals(&models[i], &models[j], DEFAULT_CAP).expect("shape fits");
            (i, j, r)
        })
        .collect();
    for (i, j, r) in rows {
        let exact = r.diagnostics.get("exact").and_then(|v| v.as_bool()).unwrap_or(false);
        let ideals = r.diagnostics.get("ideals").cloned().unwrap_or_default();
        let steps = r.diagnostics.get("proof_steps_checked").cloned().unwrap_or_default();
        c.require(
            r.passed() && exact,
            format!("{} -> {}: {ideals} ideals, {steps} proof steps, zig-zag holds", i + 2, j + 2),
        );
        c.counterexamples.extend(r.counterexamples);
    }
    c
}

pub fn criterion_8() -> CriterionResult {
    let mut c = CriterionResult::new(8, "split short five lemma probes");
    let bad = check_ss5l_instance(&pointed_set_diagram(), Side::Lax).expect("well-formed diagram");
    let missed = bad.counterexamples.iter().any(|x| x.elements.iter().any(|(k, _)| k == "missed"));
    c.require(bad.verdict == Verdict::Fail && missed, "pointed sets: b is not surjective");
    c.counterexamples.extend(bad.counterexamples);
    let models = lax_models(2);
    let diagrams = lax_diagrams(&models, usize::MAX);
    let failures: Vec<String> = diagrams
        .par_iter()
        .filter_map(|(name, d)| match check_ss5l_instance(d, Side::Lax) {
            Ok(r) if r.passed() => None,
            Ok(r) => Some(format!("{name}: {}", r.verdict)),
            Err(e) => Some(format!("{name}: {e}")),
        })
        .collect();
    c.require(
        !diagrams.is_empty() && failures.is_empty(),
        format!("{} diagrams over {} LaxProto1 models pass", diagrams.len(), models.len()),
    );
    for f in failures {
        c.require(false, f);
    }
    c
}

/// Criteria 1 to 8.
pub fn run_core() -> Vec<CriterionResult> {
    vec![
        criterion_1(),
        criterion_2(),
        criterion_3(),
        criterion_4(),
        criterion_5(),
        criterion_6(),
        criterion_7(),
        criterion_8(),
    ]
}

fn run_in_pool(threads: usize) -> String {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().expect("thread pool");
    let report = DemoReport { criteria: pool.install(run_core) };
    report.to_json()
}

pub fn criterion_9(first: &str) -> CriterionResult {
    let mut c = CriterionResult::new(9, "reports are byte-identical across runs and thread counts");
    let single = run_in_pool(1);
    let multi = run_in_pool(4);
    c.require(first == single, format!("default pool vs 1 thread: {} bytes", first.len()));
    c.require(first == multi, format!("default pool vs 4 threads: {} bytes", multi.len()));
    c
}

/// Runs every criterion.
pub fn run_demo() -> DemoReport {
    let core = run_core();
    let first = DemoReport { criteria: core.clone() }.to_json();
    let mut criteria = core;
    criteria.push(criterion_9(&first));
    DemoReport { criteria }
}
