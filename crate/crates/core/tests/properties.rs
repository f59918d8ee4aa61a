use std::collections::HashSet;
use std::sync::Arc;

use ordalg::algebra::Algebra;
use ordalg::checks::Verdict;
use ordalg::cli::{parse_document, print_algebra, print_oset};
use ordalg::clone::{generate_clone, SearchBudget};
use ordalg::corpus::{random_binar, random_order};
use ordalg::oset::{monotone_maps, OSet};
use ordalg::relations::{compose, enumerate_congruences, generate_relation, is_congruence, is_ideal, ClosureMode, Relation, DEFAULT_CAP};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn binar(seed: u64, n: usize) -> Arc<Algebra> {
    Arc::new(random_binar(n, &mut ChaCha8Rng::seed_from_u64(seed)))
}

fn pairs(n: usize) -> impl Strategy<Value = Vec<(usize, usize)>> {
    prop::collection::vec((0..n, 0..n), 0..4)
}

fn mode() -> impl Strategy<Value = ClosureMode> {
    prop_oneof![Just(ClosureMode::Subalgebra), Just(ClosureMode::Ideal), Just(ClosureMode::Congruence)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn generated_relation_is_a_closure(seed: u64, s in pairs(3), t in pairs(3), m in mode()) {
        let a = binar(seed, 3);
        let r = generate_relation(a.clone(), a.clone(), &s, m).unwrap();
        for &(x, y) in &s {
            prop_assert!(r.contains(x, y));
        }
        let again = generate_relation(a.clone(), a.clone(), &r.pairs(), m).unwrap();
        prop_assert_eq!(&again, &r);
        let mut more = s.clone();
        more.extend(&t);
        let bigger = generate_relation(a.clone(), a.clone(), &more, m).unwrap();
        prop_assert!(r.is_subset(&bigger));
        prop_assert!(Relation::new(a.clone(), a.clone(), &r.pairs()).is_ok());
        match m {
            ClosureMode::Subalgebra => {}
            ClosureMode::Ideal => prop_assert!(is_ideal(&r).is_ok()),
            ClosureMode::Congruence => {
                prop_assert!(is_congruence(&r).is_ok());
                prop_assert!(Relation::order(a.clone()).unwrap().is_subset(&r));
            }
        }
    }

    #[test]
    fn composite_of_ideals(seed: u64, s in pairs(3), t in pairs(3)) {
        let a = binar(seed, 3);
        let r = generate_relation(a.clone(), a.clone(), &s, ClosureMode::Ideal).unwrap();
        let q = generate_relation(a.clone(), a.clone(), &t, ClosureMode::Ideal).unwrap();
        let c = compose(&r, &q).unwrap();
        for &(x, z) in &c.set_composite {
            prop_assert!(c.relation.contains(x, z));
        }
        prop_assert!(is_ideal(&c.relation).is_ok());
        prop_assert_eq!(c.added_by_ideal_closure, 0);
    }

    #[test]
    fn congruence_composition_is_associative(seed: u64, n in 1usize..=3) {
        let a = binar(seed, n);
        let cong = enumerate_congruences(&a, DEFAULT_CAP).relations;
        for r in &cong {
            for s in &cong {
                for t in &cong {
                    let left = compose(&compose(r, s).unwrap().relation, t).unwrap().relation;
                    let right = compose(r, &compose(s, t).unwrap().relation).unwrap().relation;
                    prop_assert_eq!(left, right);
                }
            }
        }
    }

    #[test]
    fn clone_members_are_their_terms(seed: u64, n in 1usize..=3) {
        let a = binar(seed, n);
        let budget = SearchBudget { max_clone_size: 2000, ..SearchBudget::default() };
        let clone = generate_clone(&a, &OSet::discrete(&["x", "y"]), &budget);
        for op in &clone.members {
            for (i, env) in clone.assignments.iter().enumerate() {
                prop_assert_eq!(a.eval(&op.witness, env).unwrap(), op.table[i]);
            }
        }
    }

    #[test]
    fn complete_clones_are_closed(seed: u64, n in 1usize..=2) {
        let a = binar(seed, n);
        let budget = SearchBudget { max_term_depth: 64, ..SearchBudget::default() };
        let clone = generate_clone(&a, &OSet::discrete(&["x", "y"]), &budget);
        prop_assert!(clone.is_complete());
        let tables: HashSet<&Vec<usize>> = clone.members.iter().map(|m| &m.table).collect();
        prop_assert_eq!(tables.len(), clone.len());
        let m = a.theory().symbol_index("m").unwrap();
        // m has a discrete arity, so m(f, g) is always a member
        for f in &clone.members {
            for g in &clone.members {
                let h: Vec<usize> = f.table.iter().zip(&g.table).map(|(&x, &y)| a.apply(m, &[x, y]).unwrap()).collect();
                prop_assert!(tables.contains(&h));
            }
        }
    }

    #[test]
    fn printed_algebras_reparse(seed: u64, n in 1usize..=4) {
        let a = binar(seed, n);
        let text = format!("{}{}", print_oset("C", a.carrier()), print_algebra("A", &a, "C"));
        let doc = parse_document(&text).unwrap();
        prop_assert_eq!(&**doc.algebra("A").unwrap(), &*a);
    }

    #[test]
    fn random_orders_are_preorders(seed: u64, n in 0usize..=5) {
        let o = random_order(n, &mut ChaCha8Rng::seed_from_u64(seed));
        for x in 0..n {
            prop_assert!(o.le(x, x));
            for y in 0..n {
                for z in 0..n {
                    prop_assert!(!(o.le(x, y) && o.le(y, z)) || o.le(x, z));
                }
            }
        }
        prop_assert_eq!(monotone_maps(&OSet::empty(), &o).len(), 1);
    }

    #[test]
    fn verdicts_combine_as_a_semilattice(a in 0usize..3, b in 0usize..3, c in 0usize..3) {
        let v = [Verdict::Pass, Verdict::Inconclusive, Verdict::Fail];
        let (a, b, c) = (v[a], v[b], v[c]);
        prop_assert_eq!(a.combine(b), b.combine(a));
        prop_assert_eq!(a.combine(b).combine(c), a.combine(b.combine(c)));
        prop_assert_eq!(a.combine(a), a);
        prop_assert_eq!(Verdict::Pass.combine(a), a);
    }
}
