//! Named models and seeded random corpora of small algebras.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{check_homomorphism, kernel_comma_with, Algebra, AlgebraBuilder, Homomorphism, Side};
use crate::checks::Ss5lDiagram;
use crate::clone::exhaustive_maltsev;
use crate::oset::{monotone_maps, product, MonotoneMap, OSet};
use crate::theory::{abelian_group, binar, colax_proto1, lax_proto1, maltsev_ord, pointed_set, trunc_monoid};

/// Seed of the generated corpus used by the demo.
pub const CORPUS_SEED: u64 = 0x5eed_0a1c;

#[derive(Debug, Clone)]
pub struct NamedAlgebra {
    pub name: String,
    pub algebra: Arc<Algebra>,
}

impl NamedAlgebra {
    fn new(name: impl Into<String>, algebra: Algebra) -> NamedAlgebra {
        NamedAlgebra { name: name.into(), algebra: Arc::new(algebra) }
    }
}

/// Chain `0 < 1 < ... < n-1` over LaxProto1 with `0` the bottom and
/// `alpha = theta = first projection`.
pub fn bottom_chain_model(n: usize) -> Algebra {
    AlgebraBuilder::new(lax_proto1(), OSet::chain(n))
        .constant("0", "0")
        .op_fn("alpha", |t| t[0])
        .op_fn("theta", |t| t[0])
        .build()
        .expect("bottom chain model")
}

/// The non-positive integers `-(n-1) < ... < -1 < 0` over ColaxProto1, with
/// `0` the top and `alpha = theta = first projection`.
pub fn top_element_model(n: usize) -> Algebra {
    let names: Vec<String> = (0..n).map(|i| format!("{}", i as i64 - (n as i64 - 1))).collect();
    let order = OSet::from_fn(names, |a, b| a <= b);
    AlgebraBuilder::new(colax_proto1(), order)
        .constant("0", "0")
        .op_fn("alpha", |t| t[0])
        .op_fn("theta", |t| t[0])
        .build()
        .expect("top element model")
}

/// `{0 < 1 < ... < n-1}` with `a+b = min(a+b, n-1)` and `a⊖b = a-b`.
pub fn trunc_monoid_chain(n: usize) -> Algebra {
    AlgebraBuilder::new(trunc_monoid(), OSet::chain(n))
        .constant("0", "0")
        .op_fn("+", |t| (t[0] + t[1]).min(n - 1))
        .op_fn("⊖", |t| t[0] - t[1])
        .build()
        .expect("truncated monoid")
}

/// `Z_n` with discrete order.
pub fn cyclic_group(n: usize) -> Algebra {
    AlgebraBuilder::new(abelian_group(), OSet::antichain(n))
        .constant("0", "0")
        .op_fn("+", |t| (t[0] + t[1]) % n)
        .op_fn("neg", |t| (n - t[0]) % n)
        .build()
        .expect("cyclic group")
}

pub fn pointed(order: OSet) -> Algebra {
    AlgebraBuilder::new(pointed_set(), order).constant("0", "0").build().expect("pointed set")
}

/// The hand-picked models, in a fixed order.
pub fn named_models() -> Vec<NamedAlgebra> {
    vec![
        NamedAlgebra::new("lax-chain-2", bottom_chain_model(2)),
        NamedAlgebra::new("lax-chain-5", bottom_chain_model(5)),
        NamedAlgebra::new("colax-top-3", top_element_model(3)),
        NamedAlgebra::new("trunc-2", trunc_monoid_chain(2)),
        NamedAlgebra::new("trunc-3", trunc_monoid_chain(3)),
        NamedAlgebra::new("trunc-4", trunc_monoid_chain(4)),
        NamedAlgebra::new("z2", cyclic_group(2)),
        NamedAlgebra::new("z3", cyclic_group(3)),
        NamedAlgebra::new("z4", cyclic_group(4)),
        NamedAlgebra::new("pointed-discrete-1", pointed(OSet::antichain(1))),
        NamedAlgebra::new("pointed-discrete-3", pointed(OSet::antichain(3))),
        NamedAlgebra::new("pointed-codiscrete-2", pointed(OSet::codiscrete(2))),
    ]
}

fn numbered(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

/// A random preorder on `0..n`, drawn from a mix of shapes.
pub fn random_order(n: usize, rng: &mut impl Rng) -> OSet {
    match rng.gen_range(0..5) {
        0 => OSet::antichain(n),
        1 => OSet::chain(n),
        2 => OSet::codiscrete(n),
        _ => {
            let p = rng.gen_range(0.15..0.5);
            let pairs: Vec<(usize, usize)> =
                (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).filter(|_| rng.gen_bool(p)).collect();
            OSet::from_index_pairs(numbered(n), &pairs)
        }
    }
}

/// A random monotone map `dom -> cod`, by randomized backtracking.
pub fn random_monotone(dom: &OSet, cod: &OSet, rng: &mut impl Rng) -> Vec<usize> {
    fn go(i: usize, dom: &OSet, cod: &OSet, values: &mut Vec<usize>, rng: &mut impl Rng) -> bool {
        if i == dom.len() {
            return true;
        }
        let mut options: Vec<usize> = (0..cod.len()).collect();
        options.shuffle(rng);
        for v in options {
            let fits = (0..i).all(|j| (!dom.le(j, i) || cod.le(values[j], v)) && (!dom.le(i, j) || cod.le(v, values[j])));
            if fits {
                values.push(v);
                if go(i + 1, dom, cod, values, rng) {
                    return true;
                }
                values.pop();
            }
        }
        false
    }
    let mut values = Vec::with_capacity(dom.len());
    assert!(go(0, dom, cod, &mut values, rng), "a monotone map exists when the codomain is non-empty");
    values
}

/// A binar with a random monotone table on a random preorder.
pub fn random_binar(n: usize, rng: &mut impl Rng) -> Algebra {
    let order = random_order(n, rng);
    let square = product(&order, &order);
    let table = random_monotone(&square, &order, rng);
    AlgebraBuilder::new(binar(), order)
        .op_fn("m", |t| table[t[0] * n + t[1]])
        .build()
        .expect("monotone table")
}

/// `count` algebras with carriers of size `1..=max_size`. Mostly binars;
/// every fourth is a Mal'tsev-operation algebra on a degenerate order.
pub fn generated_corpus(seed: u64, count: usize, max_size: usize) -> Vec<NamedAlgebra> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let theory = Arc::new(maltsev_ord());
    (0..count)
        .map(|i| {
            let n = rng.gen_range(1..=max_size);
            if i % 4 == 3 {
                let order = if rng.gen_bool(0.5) { OSet::antichain(n) } else { OSet::codiscrete(n) };
                let table = exhaustive_maltsev(&order).expect("degenerate orders carry one");
                let a = AlgebraBuilder::new(theory.clone(), order)
                    .op_fn("rho", |t| table[(t[0] * n + t[1]) * n + t[2]])
                    .build()
                    .expect("rho satisfies its axioms");
                NamedAlgebra::new(format!("gen-{i:02}-rho-{n}"), a)
            } else {
                NamedAlgebra::new(format!("gen-{i:02}-binar-{n}"), random_binar(n, &mut rng))
            }
        })
        .collect()
}

/// The demo corpus: named models and 24 generated algebras on at most 4
/// elements.
pub fn demo_corpus() -> Vec<NamedAlgebra> {
    let mut all = named_models();
    all.extend(generated_corpus(CORPUS_SEED, 24, 4));
    all
}

/// The part of the demo corpus small enough for exact relation work.
pub fn exact_corpus() -> Vec<NamedAlgebra> {
    demo_corpus().into_iter().filter(|a| a.algebra.size() <= 3).collect()
}

/// Every LaxProto1 algebra on at most `max_size` elements, over the
/// orders of [`small_orders`].
pub fn lax_models(max_size: usize) -> Vec<NamedAlgebra> {
    let theory = Arc::new(lax_proto1());
    let mut out = Vec::new();
    for order in small_orders(max_size) {
        let n = order.len();
        let square = product(&order, &order);
        let tables = monotone_maps(&square, &order);
        for zero in 0..n {
            for alpha in &tables {
                for theta in &tables {
                    let built = AlgebraBuilder::new(theory.clone(), order.clone())
                        .constant("0", order.name(zero))
                        .op_fn("alpha", |t| alpha[t[0] * n + t[1]])
                        .op_fn("theta", |t| theta[t[0] * n + t[1]])
                        .build();
                    if let Ok(a) = built {
                        let name = format!("lax-{}-{}", order_tag(&order), out.len());
                        out.push(NamedAlgebra::new(name, a));
                    }
                }
            }
        }
    }
    out
}

fn order_tag(order: &OSet) -> String {
    let pairs: Vec<String> = order.strict_pairs().iter().map(|(a, b)| format!("{a}{b}")).collect();
    format!("{}{}", order.len(), if pairs.is_empty() { String::new() } else { format!("-{}", pairs.join("")) })
}

/// Preorders on `1..=max_size` elements named `0..n`: all of them for
/// `n <= 2`, plus the 3-chain, the 3-antichain and the 3-codiscrete set.
pub fn small_orders(max_size: usize) -> Vec<OSet> {
    let mut out = vec![OSet::antichain(1)];
    if max_size >= 2 {
        out.push(OSet::antichain(2));
        out.push(OSet::chain(2));
        out.push(OSet::from_index_pairs(numbered(2), &[(1, 0)]));
        out.push(OSet::codiscrete(2));
    }
    if max_size >= 3 {
        out.push(OSet::antichain(3));
        out.push(OSet::chain(3));
        out.push(OSet::codiscrete(3));
    }
    out
}

pub fn homomorphisms(dom: &Arc<Algebra>, cod: &Arc<Algebra>) -> Vec<Homomorphism> {
    monotone_maps(dom.carrier(), cod.carrier())
        .into_iter()
        .filter_map(|v| {
            let map = MonotoneMap::new(dom.carrier().clone(), cod.carrier().clone(), v).ok()?;
            check_homomorphism(map, dom.clone(), cod.clone()).ok()
        })
        .collect()
}

/// Split epimorphisms `A -> B` with their sections.
fn splits(a: &Arc<Algebra>, b: &Arc<Algebra>) -> Vec<(Homomorphism, Homomorphism)> {
    let sections = homomorphisms(b, a);
    let mut out = Vec::new();
    for f in homomorphisms(a, b) {
        for s in &sections {
            if (0..b.size()).all(|x| f.apply(s.apply(x)) == x) {
                out.push((f.clone(), s.clone()));
            }
        }
    }
    out
}

/// Diagrams over `models` with `c = id_B` whose kernel restriction `a` is
/// an identity. Capped at `limit`, in enumeration order.
pub fn lax_diagrams(models: &[NamedAlgebra], limit: usize) -> Vec<(String, Ss5lDiagram)> {
    let mut out = Vec::new();
    for base in models {
        let bb = &base.algebra;
        let id_b = Homomorphism::identity(bb.clone());
        let tops: Vec<(&NamedAlgebra, Homomorphism, Homomorphism)> = models
            .iter()
            .flat_map(|m| splits(&m.algebra, bb).into_iter().map(move |(f, s)| (m, f, s)))
            .collect();
        for (ta, f, s) in &tops {
            let k = kernel_comma_with(f, Side::Lax).expect("pointed");
            for (ba, f2, s2) in &tops {
                let k2 = kernel_comma_with(f2, Side::Lax).expect("pointed");
                if k.members.len() != k2.members.len() {
                    continue;
                }
                for b in homomorphisms(&ta.algebra, &ba.algebra) {
                    let commutes = (0..ta.algebra.size()).all(|x| f2.apply(b.apply(x)) == f.apply(x))
                        && (0..bb.size()).all(|y| b.apply(s.apply(y)) == s2.apply(y));
                    let kernel_identity = k
                        .members
                        .iter()
                        .zip(&k2.members)
                        .all(|(&x, &x2)| b.apply(x) == x2);
                    if commutes && kernel_identity && k.algebra.carrier() == k2.algebra.carrier() {
                        let name = format!("{} -> {} over {}", ta.name, ba.name, base.name);
                        out.push((
                            name,
                            Ss5lDiagram {
                                f: f.clone(),
                                s: s.clone(),
                                f2: f2.clone(),
                                s2: s2.clone(),
                                a: None,
                                b,
                                c: id_b.clone(),
                            },
                        ));
                        if out.len() == limit {
                            return out;
                        }
                    }
                }
            }
        }
    }
    out
}

/// The diagram of pointed sets `{0,1} -> {0,x,y}` whose middle map misses
/// `y` although kernels and bases agree.
pub fn pointed_set_diagram() -> Ss5lDiagram {
    let base = Arc::new(pointed(OSet::discrete(&["0", "x"])));
    let big = Arc::new(pointed(OSet::discrete(&["0", "x", "y"])));
    let hom = |dom: &Arc<Algebra>, cod: &Arc<Algebra>, v: Vec<usize>| {
        let map = MonotoneMap::new(dom.carrier().clone(), cod.carrier().clone(), v).expect("discrete");
        check_homomorphism(map, dom.clone(), cod.clone()).expect("constants preserved")
    };
    let id = Homomorphism::identity(base.clone());
    Ss5lDiagram {
        f: id.clone(),
        s: id.clone(),
        f2: hom(&big, &base, vec![0, 1, 1]),
        s2: hom(&base, &big, vec![0, 1]),
        a: None,
        b: hom(&base, &big, vec![0, 1]),
        c: id,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generated_corpus_is_reproducible() {
        let a = generated_corpus(7, 12, 4);
        let b = generated_corpus(7, 12, 4);
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.name, y.name);
            assert_eq!(x.algebra, y.algebra);
        }
        assert!(a.iter().all(|x| x.algebra.size() <= 4));
    }

    #[test]
    fn corpus_mixes_orders() {
        let c = demo_corpus();
        assert!(c.len() >= 30);
        assert!(c.iter().any(|a| a.algebra.carrier().is_symmetric()));
        assert!(c.iter().any(|a| !a.algebra.carrier().is_symmetric()));
    }

    #[test]
    fn lax_models_on_two_elements() {
        let models = lax_models(2);
        assert!(models.iter().any(|m| *m.algebra == bottom_chain_model(2)));
        assert!(models.iter().all(|m| m.algebra.size() <= 2));
    }

    #[test]
    fn top_model_names() {
        let a = top_element_model(3);
        assert_eq!(a.carrier().names(), &["-2", "-1", "0"]);
        assert_eq!(a.name(a.zero().unwrap()), "0");
    }
}
