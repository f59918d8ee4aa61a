//! Finite preordered sets and monotone maps.
//!
//! An [`OSet`] is a finite carrier together with a reflexive and transitive
//! relation. Antisymmetry is never assumed. Elements are addressed by their
//! position in the canonical enumeration order, and carry a display name.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OSetError {
    #[error("duplicate element `{0}`")]
    DuplicateElement(String),
    #[error("order pair mentions unknown element `{0}`")]
    UnknownElement(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MapError {
    #[error("map table has {got} entries, domain has {expected} elements")]
    WrongLength { expected: usize, got: usize },
    #[error("value index {0} is outside the codomain")]
    OutOfRange(usize),
    #[error("map is not monotone: {lower} <= {upper} but {lower_image} is not <= {upper_image}")]
    NotMonotone {
        lower: String,
        upper: String,
        lower_image: String,
        upper_image: String,
    },
    #[error("maps are not composable")]
    NotComposable,
}

/// A finite preordered set.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct OSet {
    names: Vec<String>,
    // row-major n*n matrix; le[a * n + b] iff a <= b
    le: Vec<bool>,
}

impl OSet {
    /// Normalizes user input into a preorder: the order is the
    /// reflexive-transitive closure of `raw_pairs`, and the element order of
    /// `raw_elements` becomes the canonical enumeration order.
    pub fn validate<S: AsRef<str>>(
        raw_elements: &[S],
        raw_pairs: &[(S, S)],
    ) -> Result<OSet, OSetError> {
        let names: Vec<String> = raw_elements.iter().map(|s| s.as_ref().to_string()).collect();
        for (i, name) in names.iter().enumerate() {
            if names[..i].contains(name) {
                return Err(OSetError::DuplicateElement(name.clone()));
            }
        }
        let lookup = |s: &S| {
            names
                .iter()
                .position(|n| n == s.as_ref())
                .ok_or_else(|| OSetError::UnknownElement(s.as_ref().to_string()))
        };
        let mut pairs = Vec::with_capacity(raw_pairs.len());
        for (a, b) in raw_pairs {
            pairs.push((lookup(a)?, lookup(b)?));
        }
        Ok(Self::from_index_pairs(names, &pairs))
    }

    /// Builds the preorder generated by `pairs` (indices into `names`).
    /// Names are assumed distinct.
    pub fn from_index_pairs(names: Vec<String>, pairs: &[(usize, usize)]) -> OSet {
        let n = names.len();
        let mut le = vec![false; n * n];
        for i in 0..n {
            le[i * n + i] = true;
        }
        for &(a, b) in pairs {
            le[a * n + b] = true;
        }
        warshall(&mut le, n);
        OSet { names, le }
    }

    /// Builds an OSet from a relation given as a predicate, closing it.
    pub fn from_fn(names: Vec<String>, rel: impl Fn(usize, usize) -> bool) -> OSet {
        let n = names.len();
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .filter(|&(a, b)| rel(a, b))
            .collect();
        Self::from_index_pairs(names, &pairs)
    }

    pub fn empty() -> OSet {
        OSet { names: Vec::new(), le: Vec::new() }
    }

    /// `0 <= 1 <= ... <= n-1`, named by their indices.
    pub fn chain(n: usize) -> OSet {
        Self::from_fn(numbered(n), |a, b| a <= b)
    }

    pub fn discrete<S: AsRef<str>>(names: &[S]) -> OSet {
        let names = names.iter().map(|s| s.as_ref().to_string()).collect();
        Self::from_index_pairs(names, &[])
    }

    /// Discrete OSet on `0..n`.
    pub fn antichain(n: usize) -> OSet {
        Self::from_index_pairs(numbered(n), &[])
    }

    /// Every pair comparable in both directions, on `0..n`.
    pub fn codiscrete(n: usize) -> OSet {
        Self::from_fn(numbered(n), |_, _| true)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    #[inline]
    pub fn le(&self, a: usize, b: usize) -> bool {
        self.le[a * self.names.len() + b]
    }

    /// All pairs `(a, b)` with `a <= b`, in canonical order.
    pub fn le_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .filter(|&(a, b)| self.le(a, b))
            .collect()
    }

    /// The generating pairs worth printing: `a <= b` with `a != b`.
    pub fn strict_pairs(&self) -> Vec<(usize, usize)> {
        self.le_pairs().into_iter().filter(|(a, b)| a != b).collect()
    }

    pub fn is_symmetric(&self) -> bool {
        self.le_pairs().iter().all(|&(a, b)| self.le(b, a))
    }

    /// First pair `a <= b` with `b` not `<= a`, if any.
    pub fn asymmetric_pair(&self) -> Option<(usize, usize)> {
        self.le_pairs().into_iter().find(|&(a, b)| !self.le(b, a))
    }

    /// The full sub-preorder on `members` (indices, kept in the given order).
    pub fn induced(&self, members: &[usize]) -> OSet {
        let names = members.iter().map(|&i| self.names[i].clone()).collect();
        OSet::from_fn(names, |a, b| self.le(members[a], members[b]))
    }

    pub fn with_names(&self, names: Vec<String>) -> OSet {
        assert_eq!(names.len(), self.len());
        OSet { names, le: self.le.clone() }
    }

    pub fn rename(&self, f: impl Fn(&str) -> String) -> OSet {
        self.with_names(self.names.iter().map(|n| f(n)).collect())
    }

    /// Same elements and order, ignoring names.
    pub fn same_order(&self, other: &OSet) -> bool {
        self.le == other.le
    }
}

impl fmt::Debug for OSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OSet {{ {} ", self.names.join(" "))?;
        let pairs: Vec<String> = self
            .strict_pairs()
            .iter()
            .map(|&(a, b)| format!("{}<={}", self.names[a], self.names[b]))
            .collect();
        write!(f, "| {} }}", pairs.join(", "))
    }
}

fn numbered(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

fn warshall(le: &mut [bool], n: usize) {
    for k in 0..n {
        for i in 0..n {
            if le[i * n + k] {
                for j in 0..n {
                    if le[k * n + j] {
                        le[i * n + j] = true;
                    }
                }
            }
        }
    }
}

/// Visits every monotone map `dom -> cod` in lexicographic order, where the
/// codomain is given abstractly by its size and order predicate. Tuples list
/// the image of each domain element in the domain's canonical order.
pub fn for_each_monotone<F, L>(dom: &OSet, cod_len: usize, cod_le: L, mut visit: F)
where
    F: FnMut(&[usize]),
    L: Fn(usize, usize) -> bool,
{
    let k = dom.len();
    // for each position, the earlier positions it is comparable with
    let below: Vec<Vec<usize>> = (0..k).map(|i| (0..i).filter(|&j| dom.le(j, i)).collect()).collect();
    let above: Vec<Vec<usize>> = (0..k).map(|i| (0..i).filter(|&j| dom.le(i, j)).collect()).collect();
    let mut tuple = vec![0usize; k];
    fn go<F: FnMut(&[usize]), L: Fn(usize, usize) -> bool>(
        pos: usize,
        tuple: &mut Vec<usize>,
        below: &[Vec<usize>],
        above: &[Vec<usize>],
        cod_len: usize,
        cod_le: &L,
        visit: &mut F,
    ) {
        if pos == tuple.len() {
            visit(tuple);
            return;
        }
        for v in 0..cod_len {
            if below[pos].iter().all(|&j| cod_le(tuple[j], v))
                && above[pos].iter().all(|&j| cod_le(v, tuple[j]))
            {
                tuple[pos] = v;
                go(pos + 1, tuple, below, above, cod_len, cod_le, visit);
            }
        }
    }
    go(0, &mut tuple, &below, &above, cod_len, &cod_le, &mut visit);
}

/// All monotone maps `dom -> cod`, lexicographic in the canonical orders.
pub fn monotone_maps(dom: &OSet, cod: &OSet) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for_each_monotone(dom, cod.len(), |a, b| cod.le(a, b), |t| out.push(t.to_vec()));
    out
}

/// Whether `tuple` (one codomain element per domain element) is monotone.
pub fn is_monotone_tuple(dom: &OSet, tuple: &[usize], cod_le: impl Fn(usize, usize) -> bool) -> bool {
    dom.le_pairs().iter().all(|&(i, j)| cod_le(tuple[i], tuple[j]))
}

/// Display name for a tuple of codomain elements.
pub fn tuple_name(cod: &OSet, tuple: &[usize]) -> String {
    let parts: Vec<&str> = tuple.iter().map(|&v| cod.name(v)).collect();
    format!("({})", parts.join(","))
}

/// The power `X ⋔ C`: monotone maps with the pointwise order.
pub fn power(x: &OSet, c: &OSet) -> OSet {
    let maps = monotone_maps(x, c);
    let names = maps.iter().map(|m| tuple_name(c, m)).collect();
    OSet::from_fn(names, |a, b| maps[a].iter().zip(&maps[b]).all(|(&p, &q)| c.le(p, q)))
}

/// Componentwise product; element `(a, b)` sits at index `a * |B| + b`.
pub fn product(a: &OSet, b: &OSet) -> OSet {
    let m = b.len();
    let names = (0..a.len())
        .flat_map(|i| (0..m).map(move |j| (i, j)))
        .map(|(i, j)| format!("({},{})", a.name(i), b.name(j)))
        .collect();
    OSet::from_fn(names, |p, q| a.le(p / m, q / m) && b.le(p % m, q % m))
}

/// A monotone map between finite preorders.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonotoneMap {
    dom: OSet,
    cod: OSet,
    values: Vec<usize>,
}

impl MonotoneMap {
    pub fn new(dom: OSet, cod: OSet, values: Vec<usize>) -> Result<MonotoneMap, MapError> {
        if values.len() != dom.len() {
            return Err(MapError::WrongLength { expected: dom.len(), got: values.len() });
        }
        if let Some(&v) = values.iter().find(|&&v| v >= cod.len()) {
            return Err(MapError::OutOfRange(v));
        }
        for (a, b) in dom.le_pairs() {
            if !cod.le(values[a], values[b]) {
                return Err(MapError::NotMonotone {
                    lower: dom.name(a).to_string(),
                    upper: dom.name(b).to_string(),
                    lower_image: cod.name(values[a]).to_string(),
                    upper_image: cod.name(values[b]).to_string(),
                });
            }
        }
        Ok(MonotoneMap { dom, cod, values })
    }

    /// Builds a map from `(domain name, codomain name)` pairs.
    pub fn from_names<S: AsRef<str>>(dom: OSet, cod: OSet, assignment: &[(S, S)]) -> Result<MonotoneMap, MapError> {
        let mut values = vec![usize::MAX; dom.len()];
        for (a, b) in assignment {
            let i = dom.index_of(a.as_ref()).ok_or(MapError::OutOfRange(usize::MAX))?;
            let j = cod.index_of(b.as_ref()).ok_or(MapError::OutOfRange(usize::MAX))?;
            values[i] = j;
        }
        MonotoneMap::new(dom, cod, values)
    }

    pub fn identity(dom: OSet) -> MonotoneMap {
        let values = (0..dom.len()).collect();
        MonotoneMap { cod: dom.clone(), dom, values }
    }

    pub fn constant(dom: OSet, cod: OSet, value: usize) -> MonotoneMap {
        let values = vec![value; dom.len()];
        MonotoneMap { dom, cod, values }
    }

    pub fn dom(&self) -> &OSet {
        &self.dom
    }

    pub fn cod(&self) -> &OSet {
        &self.cod
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    #[inline]
    pub fn apply(&self, a: usize) -> usize {
        self.values[a]
    }

    /// `then ∘ self`.
    pub fn then(&self, then: &MonotoneMap) -> Result<MonotoneMap, MapError> {
        if self.cod != then.dom {
            return Err(MapError::NotComposable);
        }
        let values = self.values.iter().map(|&v| then.values[v]).collect();
        Ok(MonotoneMap { dom: self.dom.clone(), cod: then.cod.clone(), values })
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.cod.len()];
        self.values.iter().all(|&v| !std::mem::replace(&mut seen[v], true))
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![false; self.cod.len()];
        for &v in &self.values {
            hit[v] = true;
        }
        hit.into_iter().all(|h| h)
    }

    /// First pair with `f(a) <= f(b)` but not `a <= b`.
    pub fn fullness_violation(&self) -> Option<(usize, usize)> {
        let n = self.dom.len();
        (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .find(|&(a, b)| self.cod.le(self.values[a], self.values[b]) && !self.dom.le(a, b))
    }

    pub fn is_full(&self) -> bool {
        self.fullness_violation().is_none()
    }

    /// Image elements in codomain order.
    pub fn image(&self) -> Vec<usize> {
        let mut hit = vec![false; self.cod.len()];
        for &v in &self.values {
            hit[v] = true;
        }
        (0..self.cod.len()).filter(|&v| hit[v]).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MapClass {
    pub is_full: bool,
    pub is_ff_mono: bool,
    pub is_so: bool,
}

/// Fullness is checked elementwise; `so` means surjective on elements.
pub fn classify_map(f: &MonotoneMap) -> MapClass {
    let is_full = f.is_full();
    MapClass { is_full, is_ff_mono: is_full && f.is_injective(), is_so: f.is_surjective() }
}

/// Factors `f` as `m ∘ e` with `e` surjective onto the image and `m` the
/// full embedding of the image, ordered as in the codomain.
pub fn image_factorization(f: &MonotoneMap) -> (MonotoneMap, MonotoneMap) {
    let image = f.image();
    let mid = f.cod.induced(&image);
    let mut position = vec![usize::MAX; f.cod.len()];
    for (i, &v) in image.iter().enumerate() {
        position[v] = i;
    }
    let e = MonotoneMap {
        dom: f.dom.clone(),
        cod: mid.clone(),
        values: f.values.iter().map(|&v| position[v]).collect(),
    };
    let m = MonotoneMap { dom: mid, cod: f.cod.clone(), values: image };
    (e, m)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FillInError {
    #[error("square does not commute at {0}")]
    NotCommuting(String),
    #[error("left map is not surjective")]
    NotSo,
    #[error("right map is not an ff-monomorphism")]
    NotFfMono,
    #[error(transparent)]
    Map(#[from] MapError),
}

/// Diagonal of a commuting square `m ∘ u = v ∘ e` with `e` so and `m`
/// ff-mono: the unique `d` with `d ∘ e = u` and `m ∘ d = v`.
pub fn diagonal_fill_in(
    e: &MonotoneMap,
    m: &MonotoneMap,
    u: &MonotoneMap,
    v: &MonotoneMap,
) -> Result<MonotoneMap, FillInError> {
    if !e.is_surjective() {
        return Err(FillInError::NotSo);
    }
    if !classify_map(m).is_ff_mono {
        return Err(FillInError::NotFfMono);
    }
    for a in 0..e.dom.len() {
        if m.apply(u.apply(a)) != v.apply(e.apply(a)) {
            return Err(FillInError::NotCommuting(e.dom.name(a).to_string()));
        }
    }
    let mut d = vec![usize::MAX; e.cod.len()];
    for a in 0..e.dom.len() {
        d[e.apply(a)] = u.apply(a);
    }
    Ok(MonotoneMap::new(e.cod.clone(), u.cod.clone(), d)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn discrete_closure_is_reflexive_only() {
        let s = OSet::validate(&["x", "y"], &[]).unwrap();
        assert_eq!(s.le_pairs(), vec![(0, 0), (1, 1)]);
    }

    #[test]
    fn chain_closure_adds_transitive_pair() {
        let s = OSet::validate(&["0", "1", "2"], &[("0", "1"), ("1", "2")]).unwrap();
        assert!(s.le(0, 2));
        assert!(!s.le(2, 0));
        assert_eq!(s, OSet::chain(3));
    }

    #[test]
    fn symmetric_pair_gives_codiscrete() {
        let s = OSet::validate(&["a", "b"], &[("a", "b"), ("b", "a")]).unwrap();
        assert_eq!(s.le_pairs().len(), 4);
        assert!(s.is_symmetric());
    }

    #[test]
    fn duplicate_is_named() {
        let err = OSet::validate(&["a", "b", "a"], &[]).unwrap_err();
        assert_eq!(err, OSetError::DuplicateElement("a".into()));
    }

    #[test]
    fn power_of_chains() {
        let p = power(&OSet::chain(2), &OSet::chain(2));
        assert_eq!(p.names(), &["(0,0)", "(0,1)", "(1,1)"]);
        assert!(p.le(0, 1) && p.le(1, 2) && !p.le(2, 0));
    }

    #[test]
    fn power_from_discrete_and_empty() {
        let c = OSet::validate(&["p", "q", "r"], &[("p", "q")]).unwrap();
        assert_eq!(power(&OSet::discrete(&["x", "y"]), &c).len(), 9);
        assert_eq!(power(&OSet::empty(), &c).len(), 1);
        assert_eq!(power(&OSet::empty(), &OSet::empty()).len(), 1);
    }

    #[test]
    fn product_counts() {
        let p = product(&OSet::chain(2), &OSet::chain(2));
        assert_eq!(p.len(), 4);
        assert_eq!(p.le_pairs().len(), 9);
        let unit = product(&OSet::chain(3), &OSet::chain(1));
        assert!(unit.same_order(&OSet::chain(3)));
        let d = product(&OSet::antichain(2), &OSet::antichain(3));
        assert_eq!(d.le_pairs().len(), 6);
    }

    #[test]
    fn classify_examples() {
        let inc = MonotoneMap::new(OSet::chain(2), OSet::chain(3), vec![0, 1]).unwrap();
        assert_eq!(classify_map(&inc), MapClass { is_full: true, is_ff_mono: true, is_so: false });
        let id = MonotoneMap::identity(OSet::chain(3));
        assert_eq!(classify_map(&id), MapClass { is_full: true, is_ff_mono: true, is_so: true });
        let f = MonotoneMap::new(OSet::discrete(&["x", "y"]), OSet::chain(2), vec![0, 1]).unwrap();
        assert_eq!(classify_map(&f), MapClass { is_full: false, is_ff_mono: false, is_so: true });
    }

    #[test]
    fn factorization_examples() {
        let k = MonotoneMap::constant(OSet::chain(3), OSet::chain(2), 1);
        let (e, m) = image_factorization(&k);
        assert_eq!(e.cod().len(), 1);
        assert_eq!(m.values(), &[1]);

        let id = MonotoneMap::identity(OSet::chain(2));
        let (e, m) = image_factorization(&id);
        assert_eq!(e, id);
        assert_eq!(m, id);

        let f = MonotoneMap::new(OSet::discrete(&["x", "y"]), OSet::chain(2), vec![0, 1]).unwrap();
        let (e, m) = image_factorization(&f);
        assert_eq!(e.cod(), &OSet::chain(2));
        assert!(classify_map(&e).is_so && !classify_map(&e).is_full);
        assert!(classify_map(&m).is_ff_mono);
    }

    #[test]
    fn non_monotone_map_rejected() {
        let err = MonotoneMap::new(OSet::chain(2), OSet::chain(2), vec![1, 0]).unwrap_err();
        assert!(matches!(err, MapError::NotMonotone { .. }));
    }
}
