//! Dominance order, meet and join, enumeration, and Hasse diagrams for the
//! three path families.

use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;
use std::str::FromStr;
use std::sync::OnceLock;

use rayon::prelude::*;

use crate::error::{Error, Result, WordViolation};
use crate::paths::{DyckWord, HeightSeqA, HeightSeqB, MonotonePath, Step, WordKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    Mono,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::A => "a",
            Family::B => "b",
            Family::Mono => "mono",
        })
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "a" | "A" => Ok(Family::A),
            "b" | "B" => Ok(Family::B),
            "mono" => Ok(Family::Mono),
            _ => Err(Error::Parse { input: s.to_string(), reason: "expected a, b or mono".into() }),
        }
    }
}

/// A family together with its size parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Params {
    A { n: usize },
    B { n: usize },
    Mono { n: usize, m: usize },
}

impl Params {
    pub fn family(&self) -> Family {
        match self {
            Params::A { .. } => Family::A,
            Params::B { .. } => Family::B,
            Params::Mono { .. } => Family::Mono,
        }
    }

    pub fn n(&self) -> usize {
        match *self {
            Params::A { n } | Params::B { n } | Params::Mono { n, .. } => n,
        }
    }

    pub fn m(&self) -> Option<usize> {
        match *self {
            Params::Mono { m, .. } => Some(m),
            _ => None,
        }
    }

    /// Closed-form cardinality: Catalan(n), binom(2n, n), binom(n+m, n).
    pub fn expected_count(&self) -> u128 {
        match *self {
            Params::A { n } => binomial(2 * n as u64, n as u64) / (n as u128 + 1),
            Params::B { n } => binomial(2 * n as u64, n as u64),
            Params::Mono { n, m } => binomial((n + m) as u64, n as u64),
        }
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Params::A { n } => write!(f, "A(n={n})"),
            Params::B { n } => write!(f, "B(n={n})"),
            Params::Mono { n, m } => write!(f, "L(n={n},m={m})"),
        }
    }
}

pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// A path family ordered by dominance.
///
/// The unchecked operations assume both operands share the same parameters;
/// use [`leq`], [`meet`] and [`join`] for checked access.
pub trait LatticePath: Clone + Eq + Ord + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static {
    const FAMILY: Family;

    fn params(&self) -> Params;
    fn heights(&self) -> &[usize];
    fn dominated_by(&self, other: &Self) -> bool;
    fn meet_with(&self, other: &Self) -> Self;
    fn join_with(&self, other: &Self) -> Self;
    fn bottom_of(params: Params) -> Result<Self>;
    fn top_of(params: Params) -> Result<Self>;
    /// Every element, sorted by `Ord` (which is a linear extension of the
    /// dominance order).
    fn generate(params: Params) -> Result<Vec<Self>>;
    /// Build from a raw height sequence, validating against `params`.
    fn from_heights(params: Params, h: Vec<usize>) -> Result<Self>;
    /// The step word of the path.
    fn word_steps(&self) -> Vec<Step>;
    /// Paths one elementary move above: a `ru` factor of the word turned
    /// into `ur`, and for type B also a final `r` turned into `u`.
    fn raise_moves(&self) -> Vec<Self>;
}

/// Single-entry raises `h_i + 1` that stay weakly increasing below `cap`.
fn raise_entries(h: &[usize], cap: usize) -> Vec<Vec<usize>> {
    (0..h.len())
        .filter(|&i| h[i] < h.get(i + 1).copied().unwrap_or(cap))
        .map(|i| {
            let mut g = h.to_vec();
            g[i] += 1;
            g
        })
        .collect()
}

fn require_family(params: Params, expected: Family) -> Result<()> {
    if params.family() != expected {
        return Err(Error::FamilyMismatch { expected, found: params.family() });
    }
    if params.n() == 0 {
        return Err(Error::heights(0, crate::error::HeightViolation::ZeroSemilength));
    }
    Ok(())
}

pub(crate) fn same_params<P: LatticePath>(p: &P, q: &P) -> Result<()> {
    if p.params() != q.params() {
        return Err(Error::ParamMismatch { left: p.params(), right: q.params() });
    }
    Ok(())
}

pub fn leq<P: LatticePath>(p: &P, q: &P) -> Result<bool> {
    same_params(p, q)?;
    Ok(p.dominated_by(q))
}

pub fn meet<P: LatticePath>(p: &P, q: &P) -> Result<P> {
    same_params(p, q)?;
    Ok(p.meet_with(q))
}

pub fn join<P: LatticePath>(p: &P, q: &P) -> Result<P> {
    same_params(p, q)?;
    Ok(p.join_with(q))
}

fn zip_with(a: &[usize], b: &[usize], f: impl Fn(usize, usize) -> usize) -> Vec<usize> {
    a.iter().zip(b).map(|(&x, &y)| f(x, y)).collect()
}

fn componentwise_leq(a: &[usize], b: &[usize]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

impl LatticePath for HeightSeqA {
    const FAMILY: Family = Family::A;

    fn params(&self) -> Params {
        Params::A { n: self.n() }
    }

    fn heights(&self) -> &[usize] {
        HeightSeqA::heights(self)
    }

    fn dominated_by(&self, other: &Self) -> bool {
        componentwise_leq(self.heights(), other.heights())
    }

    fn meet_with(&self, other: &Self) -> Self {
        HeightSeqA::new_unchecked(zip_with(self.heights(), other.heights(), usize::min))
    }

    fn join_with(&self, other: &Self) -> Self {
        HeightSeqA::new_unchecked(zip_with(self.heights(), other.heights(), usize::max))
    }

    fn bottom_of(params: Params) -> Result<Self> {
        require_family(params, Family::A)?;
        Ok(HeightSeqA::bottom(params.n()))
    }

    fn top_of(params: Params) -> Result<Self> {
        require_family(params, Family::A)?;
        Ok(HeightSeqA::top(params.n()))
    }

    fn generate(params: Params) -> Result<Vec<Self>> {
        require_family(params, Family::A)?;
        let n = params.n();
        let mut out = Vec::new();
        let mut h = Vec::with_capacity(n);
        extend_a(n, &mut h, &mut out);
        Ok(out)
    }

    fn from_heights(params: Params, h: Vec<usize>) -> Result<Self> {
        require_family(params, Family::A)?;
        HeightSeqA::with_n(params.n(), h)
    }

    fn word_steps(&self) -> Vec<Step> {
        self.steps()
    }

    fn raise_moves(&self) -> Vec<Self> {
        // The last entry is pinned at n.
        raise_entries(self.heights(), self.n()).into_iter().map(HeightSeqA::new_unchecked).collect()
    }
}

fn extend_a(n: usize, h: &mut Vec<usize>, out: &mut Vec<HeightSeqA>) {
    let i = h.len() + 1;
    if i > n {
        out.push(HeightSeqA::new_unchecked(h.clone()));
        return;
    }
    let lo = i.max(h.last().copied().unwrap_or(0));
    let lo = if i == n { n } else { lo };
    for v in lo..=n {
        h.push(v);
        extend_a(n, h, out);
        h.pop();
    }
}

impl LatticePath for HeightSeqB {
    const FAMILY: Family = Family::B;

    fn params(&self) -> Params {
        Params::B { n: self.n() }
    }

    fn heights(&self) -> &[usize] {
        HeightSeqB::heights(self)
    }

    /// `k >= k'` and `h_i <= h'_i` on the shorter prefix.
    fn dominated_by(&self, other: &Self) -> bool {
        self.k() >= other.k() && componentwise_leq(self.heights(), other.heights())
    }

    fn meet_with(&self, other: &Self) -> Self {
        let (long, short) = if self.k() >= other.k() { (self, other) } else { (other, self) };
        let mut h = zip_with(long.heights(), short.heights(), usize::min);
        h.extend_from_slice(&long.heights()[short.k()..]);
        HeightSeqB::new_unchecked(self.n(), h)
    }

    /// Componentwise max over the first `min(k, k')` entries.
    fn join_with(&self, other: &Self) -> Self {
        HeightSeqB::new_unchecked(self.n(), zip_with(self.heights(), other.heights(), usize::max))
    }

    fn bottom_of(params: Params) -> Result<Self> {
        require_family(params, Family::B)?;
        Ok(HeightSeqB::bottom(params.n()))
    }

    fn top_of(params: Params) -> Result<Self> {
        require_family(params, Family::B)?;
        Ok(HeightSeqB::top(params.n()))
    }

    fn generate(params: Params) -> Result<Vec<Self>> {
        require_family(params, Family::B)?;
        let n = params.n();
        let mut out = Vec::new();
        for k in (1..=n).rev() {
            let mut h = Vec::with_capacity(k);
            extend_b(n, k, &mut h, &mut out);
        }
        Ok(out)
    }

    fn from_heights(params: Params, h: Vec<usize>) -> Result<Self> {
        require_family(params, Family::B)?;
        HeightSeqB::new(params.n(), h)
    }

    fn word_steps(&self) -> Vec<Step> {
        self.steps()
    }

    fn raise_moves(&self) -> Vec<Self> {
        let steps = self.steps();
        let mut words: Vec<Vec<Step>> = (0..steps.len().saturating_sub(1))
            .filter(|&j| steps[j] == Step::R && steps[j + 1] == Step::U)
            .map(|j| {
                let mut w = steps.clone();
                w.swap(j, j + 1);
                w
            })
            .collect();
        if steps.last() == Some(&Step::R) {
            let mut w = steps.clone();
            *w.last_mut().unwrap() = Step::U;
            words.push(w);
        }
        words
            .into_iter()
            .map(|w| {
                let word = DyckWord::new(w, WordKind::B).expect("moves keep the prefix condition");
                crate::paths::word_to_heights_b(&word).expect("moves keep a type B word")
            })
            .collect()
    }
}

fn extend_b(n: usize, k: usize, h: &mut Vec<usize>, out: &mut Vec<HeightSeqB>) {
    let i = h.len() + 1;
    let bound = 2 * n - k;
    if i == k {
        for last in [bound, bound + 1] {
            h.push(last);
            out.push(HeightSeqB::new_unchecked(n, h.clone()));
            h.pop();
        }
        return;
    }
    let lo = i.max(h.last().copied().unwrap_or(0));
    for v in lo..=bound {
        h.push(v);
        extend_b(n, k, h, out);
        h.pop();
    }
}

impl LatticePath for MonotonePath {
    const FAMILY: Family = Family::Mono;

    fn params(&self) -> Params {
        Params::Mono { n: self.n(), m: self.m() }
    }

    fn heights(&self) -> &[usize] {
        MonotonePath::heights(self)
    }

    fn dominated_by(&self, other: &Self) -> bool {
        componentwise_leq(self.heights(), other.heights())
    }

    fn meet_with(&self, other: &Self) -> Self {
        MonotonePath::new_unchecked(self.m(), zip_with(self.heights(), other.heights(), usize::min))
    }

    fn join_with(&self, other: &Self) -> Self {
        MonotonePath::new_unchecked(self.m(), zip_with(self.heights(), other.heights(), usize::max))
    }

    fn bottom_of(params: Params) -> Result<Self> {
        require_family(params, Family::Mono)?;
        Ok(MonotonePath::bottom(params.n(), params.m().unwrap_or(0)))
    }

    fn top_of(params: Params) -> Result<Self> {
        require_family(params, Family::Mono)?;
        Ok(MonotonePath::top(params.n(), params.m().unwrap_or(0)))
    }

    fn generate(params: Params) -> Result<Vec<Self>> {
        require_family(params, Family::Mono)?;
        let (n, m) = (params.n(), params.m().unwrap_or(0));
        let mut out = Vec::new();
        let mut h = Vec::with_capacity(n);
        extend_mono(n, m, &mut h, &mut out);
        Ok(out)
    }

    fn from_heights(params: Params, h: Vec<usize>) -> Result<Self> {
        require_family(params, Family::Mono)?;
        MonotonePath::with_shape(params.n(), params.m().unwrap_or(0), h)
    }

    fn word_steps(&self) -> Vec<Step> {
        self.steps()
    }

    fn raise_moves(&self) -> Vec<Self> {
        let m = self.m();
        raise_entries(self.heights(), m + 1)
            .into_iter()
            .filter(|g| g.last().is_none_or(|&x| x <= m))
            .map(|g| MonotonePath::new_unchecked(m, g))
            .collect()
    }
}

fn extend_mono(n: usize, m: usize, h: &mut Vec<usize>, out: &mut Vec<MonotonePath>) {
    if h.len() == n {
        out.push(MonotonePath::new_unchecked(m, h.clone()));
        return;
    }
    for v in h.last().copied().unwrap_or(0)..=m {
        h.push(v);
        extend_mono(n, m, h, out);
        h.pop();
    }
}

/// Dominance read off the words: every prefix of `w` has at least as many
/// `r` as the same-length prefix of `w2`.
pub fn word_prefix_leq(w: &DyckWord, w2: &DyckWord) -> Result<bool> {
    if w.len() != w2.len() {
        return Err(Error::InvalidWord {
            position: w2.len(),
            violation: WordViolation::LengthMismatch { expected: w.len(), found: w2.len() },
        });
    }
    for word in [w, w2] {
        if word.kind() != WordKind::A {
            DyckWord::new(word.steps().to_vec(), WordKind::A)?;
        }
    }
    let (mut r1, mut r2) = (0usize, 0usize);
    for (a, b) in w.steps().iter().zip(w2.steps()) {
        r1 += usize::from(*a == Step::R);
        r2 += usize::from(*b == Step::R);
        if r1 < r2 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Upper bounds on enumeration size.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationGuard {
    pub max_a: usize,
    pub max_b: usize,
    /// Bound on `n + m` for monotone paths.
    pub max_mono_total: usize,
}

impl Default for EnumerationGuard {
    fn default() -> Self {
        EnumerationGuard { max_a: 12, max_b: 9, max_mono_total: 20 }
    }
}

impl EnumerationGuard {
    /// A guard that allows everything; for callers that pick sizes themselves.
    pub fn unbounded() -> Self {
        EnumerationGuard { max_a: usize::MAX, max_b: usize::MAX, max_mono_total: usize::MAX }
    }

    pub fn check(&self, params: Params) -> Result<()> {
        let (value, limit, what) = match params {
            Params::A { n } => (n, self.max_a, "n"),
            Params::B { n } => (n, self.max_b, "n"),
            Params::Mono { n, m } => (n + m, self.max_mono_total, "n+m"),
        };
        if value > limit {
            return Err(Error::GuardExceeded { params, limit: format!("{what} <= {limit}") });
        }
        Ok(())
    }
}

/// An enumerated lattice with stable element ids.
///
/// Ids follow the `Ord` of the path type: lexicographic for type A and
/// monotone paths, longest-first then lexicographic for type B.
#[derive(Debug)]
pub struct LatticeSnapshot<P: LatticePath> {
    params: Params,
    elements: Vec<P>,
    index: HashMap<P, usize>,
    covers: OnceLock<Vec<(usize, usize)>>,
    lower_covers: OnceLock<Vec<Vec<usize>>>,
}

impl<P: LatticePath> LatticeSnapshot<P> {
    pub fn enumerate(params: Params) -> Result<Self> {
        LatticeSnapshot::enumerate_guarded(params, &EnumerationGuard::default())
    }

    pub fn enumerate_guarded(params: Params, guard: &EnumerationGuard) -> Result<Self> {
        guard.check(params)?;
        let elements = P::generate(params)?;
        Ok(LatticeSnapshot::from_sorted(params, elements))
    }

    fn from_sorted(params: Params, elements: Vec<P>) -> Self {
        let index = elements.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        LatticeSnapshot { params, elements, index, covers: OnceLock::new(), lower_covers: OnceLock::new() }
    }

    /// Rebuilds a snapshot from serialized parts, checking that the elements
    /// are exactly the family in id order and the covers are its Hasse diagram.
    pub fn from_parts(params: Params, heights: Vec<Vec<usize>>, covers: Vec<(usize, usize)>) -> Result<Self> {
        let elements = heights.into_iter().map(|h| P::from_heights(params, h)).collect::<Result<Vec<_>>>()?;
        let expected = P::generate(params)?;
        if elements != expected {
            return Err(Error::Parse {
                input: format!("{params}"),
                reason: "elements are not the complete family in id order".into(),
            });
        }
        let snap = LatticeSnapshot::from_sorted(params, elements);
        let mut sorted = covers;
        sorted.sort_unstable();
        if sorted != snap.covers() {
            return Err(Error::Parse {
                input: format!("{params}"),
                reason: "cover edges do not match the dominance order".into(),
            });
        }
        Ok(snap)
    }

    pub fn params(&self) -> Params {
        self.params
    }

    pub fn elements(&self) -> &[P] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn id_of(&self, p: &P) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn get(&self, id: usize) -> &P {
        &self.elements[id]
    }

    pub fn bottom(&self) -> &P {
        &self.elements[0]
    }

    pub fn top(&self) -> &P {
        &self.elements[self.elements.len() - 1]
    }

    /// Cover pairs `(lower, upper)`, sorted.
    pub fn covers(&self) -> &[(usize, usize)] {
        self.covers.get_or_init(|| {
            if self.elements.len() <= BRUTE_FORCE_COVERS {
                compute_covers(&self.elements)
            } else {
                self.covers_from_moves()
            }
        })
    }

    /// Covers via [`LatticePath::raise_moves`]; linear in the lattice size.
    pub fn covers_from_moves(&self) -> Vec<(usize, usize)> {
        let mut covers: Vec<(usize, usize)> = self
            .elements
            .par_iter()
            .enumerate()
            .flat_map_iter(|(a, p)| p.raise_moves().into_iter().map(move |q| (a, self.index[&q])))
            .collect();
        covers.sort_unstable();
        covers
    }

    /// Covers straight from the definition, by pairwise comparison.
    pub fn covers_by_definition(&self) -> Vec<(usize, usize)> {
        compute_covers(&self.elements)
    }

    pub fn lower_covers(&self, id: usize) -> &[usize] {
        &self.lower_covers.get_or_init(|| {
            let mut lower = vec![Vec::new(); self.elements.len()];
            for &(lo, hi) in self.covers() {
                lower[hi].push(lo);
            }
            lower
        })[id]
    }

    pub fn upper_covers(&self, id: usize) -> impl Iterator<Item = usize> + '_ {
        self.covers().iter().filter(move |(lo, _)| *lo == id).map(|(_, hi)| *hi)
    }
}

impl<P: LatticePath> PartialEq for LatticeSnapshot<P> {
    fn eq(&self, other: &Self) -> bool {
        self.params == other.params && self.elements == other.elements && self.covers() == other.covers()
    }
}

/// Above this size the Hasse diagram comes from elementary moves rather than
/// pairwise comparison.
const BRUTE_FORCE_COVERS: usize = 5000;

/// Transitive reduction of the dominance order.
///
/// Elements are sorted along a linear extension, so every `c` strictly
/// between `a` and `b` has an id between theirs. Scanning upward from `a`,
/// `b` is a cover exactly when no cover found so far lies below it.
fn compute_covers<P: LatticePath>(elements: &[P]) -> Vec<(usize, usize)> {
    let mut covers = Vec::new();
    for (a, pa) in elements.iter().enumerate() {
        let mut found: Vec<usize> = Vec::new();
        for (b, pb) in elements.iter().enumerate().skip(a + 1) {
            if !pa.dominated_by(pb) {
                continue;
            }
            if found.iter().all(|&c| !elements[c].dominated_by(pb)) {
                found.push(b);
                covers.push((a, b));
            }
        }
    }
    covers
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(h: &[usize]) -> HeightSeqA {
        HeightSeqA::new(h.to_vec()).unwrap()
    }

    fn b(n: usize, h: &[usize]) -> HeightSeqB {
        HeightSeqB::new(n, h.to_vec()).unwrap()
    }

    #[test]
    fn leq_examples() {
        assert!(leq(&a(&[1, 3, 3, 4]), &a(&[2, 3, 3, 4])).unwrap());
        assert!(leq(&b(3, &[1, 2, 3]), &b(3, &[2, 4])).unwrap());
        assert!(!leq(&b(3, &[3, 3, 4]), &b(3, &[1, 5])).unwrap());
        assert!(!leq(&b(3, &[1, 5]), &b(3, &[3, 3, 4])).unwrap());
    }

    #[test]
    fn mismatched_parameters_are_rejected() {
        assert!(matches!(leq(&a(&[1, 2]), &a(&[1, 2, 3])), Err(Error::ParamMismatch { .. })));
        assert!(matches!(meet(&b(2, &[4]), &b(3, &[6])), Err(Error::ParamMismatch { .. })));
        let p = MonotonePath::new(2, vec![0, 1]).unwrap();
        let q = MonotonePath::new(3, vec![0, 1]).unwrap();
        assert!(join(&p, &q).is_err());
    }

    #[test]
    fn meet_join_examples() {
        let (x, y) = (a(&[2, 2, 3, 4]), a(&[1, 3, 3, 4]));
        assert_eq!(join(&x, &y).unwrap(), a(&[2, 3, 3, 4]));
        assert_eq!(meet(&x, &y).unwrap(), a(&[1, 2, 3, 4]));

        let (x, y) = (b(3, &[1, 3, 3]), b(3, &[2, 2, 3]));
        assert_eq!(meet(&x, &y).unwrap(), b(3, &[1, 2, 3]));
        assert_eq!(join(&x, &y).unwrap(), b(3, &[2, 3, 3]));

        let (x, y) = (b(3, &[3, 3, 4]), b(3, &[1, 5]));
        assert_eq!(meet(&x, &y).unwrap(), b(3, &[1, 3, 4]));
        assert_eq!(join(&x, &y).unwrap(), b(3, &[3, 5]));
        assert_eq!(meet(&y, &x).unwrap(), b(3, &[1, 3, 4]));
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(HeightSeqA::generate(Params::A { n: 4 }).unwrap().len(), 14);
        assert_eq!(HeightSeqB::generate(Params::B { n: 3 }).unwrap().len(), 20);
        let b1: Vec<String> =
            HeightSeqB::generate(Params::B { n: 1 }).unwrap().iter().map(|p| p.to_string()).collect();
        assert_eq!(b1, ["1", "2"]);
        assert_eq!(MonotonePath::generate(Params::Mono { n: 3, m: 3 }).unwrap().len(), 20);
        assert_eq!(MonotonePath::generate(Params::Mono { n: 2, m: 0 }).unwrap().len(), 1);
    }

    #[test]
    fn generated_elements_are_sorted_and_valid() {
        let v = HeightSeqB::generate(Params::B { n: 4 }).unwrap();
        assert!(v.windows(2).all(|w| w[0] < w[1]));
        for p in &v {
            assert!(HeightSeqB::new(4, p.heights().to_vec()).is_ok());
        }
    }

    #[test]
    fn expected_counts() {
        assert_eq!(Params::A { n: 8 }.expected_count(), 1430);
        assert_eq!(Params::B { n: 6 }.expected_count(), 924);
        assert_eq!(Params::Mono { n: 3, m: 3 }.expected_count(), 20);
    }

    #[test]
    fn guard_refuses_large_sizes() {
        assert!(matches!(
            LatticeSnapshot::<HeightSeqA>::enumerate(Params::A { n: 13 }),
            Err(Error::GuardExceeded { .. })
        ));
        assert!(LatticeSnapshot::<HeightSeqB>::enumerate(Params::B { n: 10 }).is_err());
        assert!(LatticeSnapshot::<MonotonePath>::enumerate(Params::Mono { n: 11, m: 10 }).is_err());
        let tight = EnumerationGuard { max_a: 3, ..EnumerationGuard::default() };
        assert!(LatticeSnapshot::<HeightSeqA>::enumerate_guarded(Params::A { n: 4 }, &tight).is_err());
    }

    #[test]
    fn zero_and_wrong_family_params_are_rejected() {
        assert!(HeightSeqA::generate(Params::A { n: 0 }).is_err());
        assert!(matches!(HeightSeqA::generate(Params::B { n: 2 }), Err(Error::FamilyMismatch { .. })));
    }

    #[test]
    fn cover_examples() {
        let snap = LatticeSnapshot::<HeightSeqA>::enumerate(Params::A { n: 4 }).unwrap();
        assert_eq!(snap.upper_covers(0).count(), 3);
        assert_eq!(snap.upper_covers(snap.len() - 1).count(), 0);
        assert_eq!(snap.covers().len(), 21);

        let snap = LatticeSnapshot::<HeightSeqB>::enumerate(Params::B { n: 3 }).unwrap();
        let bottom = snap.id_of(&b(3, &[1, 2, 3])).unwrap();
        assert_eq!(bottom, 0);
        assert_eq!(snap.upper_covers(bottom).count(), 3);
        assert_eq!(snap.upper_covers(snap.len() - 1).count(), 0);
        assert_eq!(snap.covers().len(), 30);
    }

    #[test]
    fn word_prefix_examples() {
        let w = |s| DyckWord::parse(s, WordKind::A).unwrap();
        assert!(word_prefix_leq(&w("uurr"), &w("uurr")).unwrap());
        assert!(word_prefix_leq(&w("urur"), &w("uurr")).unwrap());
        assert!(!word_prefix_leq(&w("uurr"), &w("urur")).unwrap());
        assert!(word_prefix_leq(&w("uurr"), &w("uuurrr")).is_err());
    }

    #[test]
    fn snapshot_round_trip_from_parts() {
        let snap = LatticeSnapshot::<HeightSeqB>::enumerate(Params::B { n: 2 }).unwrap();
        let heights = snap.elements().iter().map(|p| p.heights().to_vec()).collect();
        let rebuilt =
            LatticeSnapshot::<HeightSeqB>::from_parts(snap.params(), heights, snap.covers().to_vec())
                .unwrap();
        assert_eq!(rebuilt, snap);
        let heights: Vec<Vec<usize>> = snap.elements().iter().map(|p| p.heights().to_vec()).collect();
        assert!(LatticeSnapshot::<HeightSeqB>::from_parts(snap.params(), heights, vec![(0, 1)]).is_err());
    }

    fn moves_match_definition<P: LatticePath>(params: Params) {
        let snap = LatticeSnapshot::<P>::enumerate(params).unwrap();
        assert_eq!(snap.covers_from_moves(), snap.covers_by_definition(), "{params}");
    }

    #[test]
    fn elementary_moves_give_the_hasse_diagram() {
        for n in 1..=8 {
            moves_match_definition::<HeightSeqA>(Params::A { n });
        }
        for n in 1..=6 {
            moves_match_definition::<HeightSeqB>(Params::B { n });
        }
        for n in 1..=5 {
            for m in 0..=5 {
                moves_match_definition::<MonotonePath>(Params::Mono { n, m });
            }
        }
    }
}
