//! Join-irreducible paths and the order-ideal representation of each lattice.
//!
//! Every family is the lattice of order ideals of a poset of index pairs
//! `(i, j)` ordered by `(a, b) <= (a', b')` iff `a >= a'` and `b <= b'`:
//!
//! * type A: `1 <= i < j <= n`,
//! * type B: `1 <= i < j <= 2n + 1 - i`,
//! * monotone: `1 <= i <= n`, `1 <= j <= m`.

use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};
use crate::heyting::HeytingPath;
use crate::lattice::{Family, LatticePath, Params};
use crate::paths::{word_to_heights_b, DyckWord, HeightSeqA, HeightSeqB, MonotonePath, Step, WordKind};

pub type Prime = (usize, usize);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrianglePoset {
    params: Params,
    elements: Vec<Prime>,
}

impl TrianglePoset {
    pub fn new(params: Params) -> Result<Self> {
        let n = params.n();
        let mut elements = Vec::new();
        match params {
            Params::A { .. } => {
                for i in 1..=n {
                    elements.extend((i + 1..=n).map(|j| (i, j)));
                }
            }
            Params::B { .. } => {
                for i in 1..=n {
                    elements.extend((i + 1..=2 * n + 1 - i).map(|j| (i, j)));
                }
            }
            Params::Mono { m, .. } => {
                for i in 1..=n {
                    elements.extend((1..=m).map(|j| (i, j)));
                }
            }
        }
        // Larger `i` and smaller `j` come first: a linear extension.
        elements.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        Ok(TrianglePoset { params, elements })
    }

    pub fn params(&self) -> Params {
        self.params
    }

    /// Elements in a linear extension of the order.
    pub fn elements(&self) -> &[Prime] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, (i, j): Prime) -> bool {
        let n = self.params.n();
        match self.params {
            Params::A { .. } => i >= 1 && i < j && j <= n,
            Params::B { .. } => i >= 1 && i < j && j <= 2 * n + 1 - i,
            Params::Mono { m, .. } => (1..=n).contains(&i) && (1..=m).contains(&j),
        }
    }

    pub fn leq(a: Prime, b: Prime) -> bool {
        a.0 >= b.0 && a.1 <= b.1
    }

    /// Checks that `members` is a downset of this poset.
    pub fn ideal(&self, members: impl IntoIterator<Item = Prime>) -> Result<OrderIdeal> {
        let set: HashSet<Prime> = members.into_iter().collect();
        for &x in &set {
            if !self.contains(x) {
                return Err(Error::NotInPoset(x.0, x.1));
            }
        }
        for &x in &set {
            if let Some(&y) = self.elements.iter().find(|&&y| TrianglePoset::leq(y, x) && !set.contains(&y)) {
                return Err(Error::NotAnIdeal(x.0, x.1, y.0, y.1));
            }
        }
        let mut members: Vec<Prime> = set.into_iter().collect();
        members.sort();
        Ok(OrderIdeal { members })
    }

    /// All order ideals, by backtracking along the linear extension.
    pub fn ideals(&self) -> Vec<OrderIdeal> {
        let below: Vec<Vec<usize>> = (0..self.len())
            .map(|x| (0..x).filter(|&y| TrianglePoset::leq(self.elements[y], self.elements[x])).collect())
            .collect();
        let mut out = Vec::new();
        let mut chosen = vec![false; self.len()];
        self.extend_ideals(0, &below, &mut chosen, &mut out);
        out
    }

    fn extend_ideals(&self, x: usize, below: &[Vec<usize>], chosen: &mut [bool], out: &mut Vec<OrderIdeal>) {
        if x == self.len() {
            let mut members: Vec<Prime> = (0..x).filter(|&y| chosen[y]).map(|y| self.elements[y]).collect();
            members.sort();
            out.push(OrderIdeal { members });
            return;
        }
        self.extend_ideals(x + 1, below, chosen, out);
        if below[x].iter().all(|&y| chosen[y]) {
            chosen[x] = true;
            self.extend_ideals(x + 1, below, chosen, out);
            chosen[x] = false;
        }
    }
}

/// A downward-closed set of index pairs, sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderIdeal {
    members: Vec<Prime>,
}

impl OrderIdeal {
    pub fn members(&self) -> &[Prime] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_subset(&self, other: &OrderIdeal) -> bool {
        self.members.iter().all(|x| other.members.binary_search(x).is_ok())
    }

    /// Intersection and union, both again ideals.
    pub fn intersect_union(&self, other: &OrderIdeal) -> (OrderIdeal, OrderIdeal) {
        let cap = self.members.iter().filter(|x| other.members.binary_search(x).is_ok()).copied().collect();
        let mut cup: Vec<Prime> = self.members.iter().chain(&other.members).copied().collect();
        cup.sort();
        cup.dedup();
        (OrderIdeal { members: cap }, OrderIdeal { members: cup })
    }
}

/// Paths that correspond one-to-one with the index pairs of their poset.
pub trait BirkhoffPath: HeytingPath {
    /// The pair `(i, h_i)` at the unique position that can be lowered.
    fn prime_index(&self) -> Result<Prime>;
    fn path_for_prime(params: Params, prime: Prime) -> Result<Self>;
}

fn single_ascent(h: &[usize], floor: impl Fn(usize) -> usize) -> Option<Prime> {
    let mut found = None;
    let mut prev = 0;
    for (idx, &hi) in h.iter().enumerate() {
        if hi > prev && hi > floor(idx + 1) {
            if found.is_some() {
                return None;
            }
            found = Some((idx + 1, hi));
        }
        prev = hi;
    }
    found
}

fn check_prime(params: Params, prime: Prime) -> Result<()> {
    if !TrianglePoset::new(params)?.contains(prime) {
        return Err(Error::NotInPoset(prime.0, prime.1));
    }
    Ok(())
}

impl BirkhoffPath for HeightSeqA {
    fn prime_index(&self) -> Result<Prime> {
        single_ascent(self.heights(), |i| i).ok_or_else(|| Error::NotJoinIrreducible(self.to_string()))
    }

    fn path_for_prime(params: Params, (i, j): Prime) -> Result<Self> {
        HeightSeqA::bottom_of(params)?;
        check_prime(params, (i, j))?;
        let h = (1..=params.n()).map(|s| if s < i { s } else { s.max(j) }).collect();
        Ok(HeightSeqA::new_unchecked(h))
    }
}

impl BirkhoffPath for HeightSeqB {
    fn prime_index(&self) -> Result<Prime> {
        single_ascent(self.heights(), |i| i).ok_or_else(|| Error::NotJoinIrreducible(self.to_string()))
    }

    /// Follows `f(s) = s` for `s < i` and `max(j, s)` afterwards, cut off
    /// after `2n` steps.
    fn path_for_prime(params: Params, (i, j): Prime) -> Result<Self> {
        HeightSeqB::bottom_of(params)?;
        check_prime(params, (i, j))?;
        let len = 2 * params.n();
        let mut steps = Vec::with_capacity(len + 1);
        let mut ups = 0;
        let mut s = 1;
        while steps.len() < len {
            let target = if s < i { s } else { s.max(j) };
            while ups < target && steps.len() < len {
                steps.push(Step::U);
                ups += 1;
            }
            if steps.len() < len {
                steps.push(Step::R);
            }
            s += 1;
        }
        word_to_heights_b(&DyckWord::new(steps, WordKind::B)?)
    }
}

impl BirkhoffPath for MonotonePath {
    fn prime_index(&self) -> Result<Prime> {
        single_ascent(self.heights(), |_| 0).ok_or_else(|| Error::NotJoinIrreducible(self.to_string()))
    }

    fn path_for_prime(params: Params, (i, j): Prime) -> Result<Self> {
        MonotonePath::bottom_of(params)?;
        check_prime(params, (i, j))?;
        let h = (1..=params.n()).map(|s| if s < i { 0 } else { j }).collect();
        Ok(MonotonePath::new_unchecked(params.m().unwrap_or(0), h))
    }
}

/// The ideal of index pairs whose path lies below `p`.
pub fn irreducibles_below<P: BirkhoffPath>(p: &P) -> Result<OrderIdeal> {
    let poset = TrianglePoset::new(p.params())?;
    let mut members = Vec::new();
    for &x in poset.elements() {
        if P::path_for_prime(p.params(), x)?.dominated_by(p) {
            members.push(x);
        }
    }
    members.sort();
    Ok(OrderIdeal { members })
}

/// Join of the paths of an ideal; the bottom path for the empty ideal.
pub fn path_from_ideal<P: BirkhoffPath>(params: Params, ideal: &OrderIdeal) -> Result<P> {
    let mut acc = P::bottom_of(params)?;
    for &x in ideal.members() {
        acc = acc.join_with(&P::path_for_prime(params, x)?);
    }
    Ok(acc)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BirkhoffReport {
    pub params: Params,
    pub poset_size: usize,
    pub ideals: usize,
    pub lattice_size: usize,
    /// First failure found, if any.
    pub failure: Option<String>,
}

impl BirkhoffReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// Checks that ideals and paths correspond bijectively and that inclusion
/// matches dominance, against a full enumeration of the lattice.
pub fn verify_birkhoff<P: BirkhoffPath>(params: Params) -> Result<BirkhoffReport> {
    let poset = TrianglePoset::new(params)?;
    let lattice = P::generate(params)?;
    let ideals = poset.ideals();
    let mut report = BirkhoffReport {
        params,
        poset_size: poset.len(),
        ideals: ideals.len(),
        lattice_size: lattice.len(),
        failure: None,
    };
    let fail = |msg: String| Some(msg);

    for &x in poset.elements() {
        let p = P::path_for_prime(params, x)?;
        if !p.is_join_irreducible() || p.prime_index()? != x {
            report.failure = fail(format!("path {p} does not index back to {x:?}"));
            return Ok(report);
        }
    }
    let irreducibles = lattice.iter().filter(|p| p.is_join_irreducible()).count();
    if irreducibles != poset.len() {
        report.failure = fail(format!("{irreducibles} join-irreducibles, poset has {}", poset.len()));
        return Ok(report);
    }
    if ideals.len() != lattice.len() {
        report.failure = fail(format!("{} ideals, lattice has {}", ideals.len(), lattice.len()));
        return Ok(report);
    }
    let images: Vec<P> = ideals.iter().map(|i| path_from_ideal(params, i)).collect::<Result<_>>()?;
    let distinct: HashSet<&P> = images.iter().collect();
    if distinct.len() != images.len() {
        report.failure = fail("two ideals map to the same path".into());
        return Ok(report);
    }
    for (ideal, p) in ideals.iter().zip(&images) {
        if irreducibles_below(p)? != *ideal {
            report.failure = fail(format!("ideal of {p} does not round-trip"));
            return Ok(report);
        }
    }
    let by_ideal: HashMap<&OrderIdeal, &P> = ideals.iter().zip(&images).collect();
    for (a, pa) in ideals.iter().zip(&images) {
        for (b, pb) in ideals.iter().zip(&images) {
            if a.is_subset(b) != pa.dominated_by(pb) {
                report.failure = fail(format!("inclusion and dominance differ at {pa}, {pb}"));
                return Ok(report);
            }
            let (cap, cup) = a.intersect_union(b);
            if by_ideal.get(&cap) != Some(&&pa.meet_with(pb))
                || by_ideal.get(&cup) != Some(&&pa.join_with(pb))
            {
                report.failure = fail(format!("meet or join of {pa}, {pb} differs from the ideal operation"));
                return Ok(report);
            }
        }
    }
    Ok(report)
}

/// Size of the index poset.
pub fn poset_size(params: Params) -> usize {
    let n = params.n();
    match params.family() {
        Family::A => n * n.saturating_sub(1) / 2,
        Family::B => n * n,
        Family::Mono => n * params.m().unwrap_or(0),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poset_sizes() {
        for n in 1..=6 {
            for params in [Params::A { n }, Params::B { n }, Params::Mono { n, m: 3 }] {
                assert_eq!(TrianglePoset::new(params).unwrap().len(), poset_size(params));
            }
        }
        assert_eq!(poset_size(Params::A { n: 4 }), 6);
        assert_eq!(poset_size(Params::B { n: 3 }), 9);
    }

    #[test]
    fn ideal_counts() {
        assert_eq!(TrianglePoset::new(Params::A { n: 4 }).unwrap().ideals().len(), 14);
        assert_eq!(TrianglePoset::new(Params::B { n: 2 }).unwrap().ideals().len(), 6);
        assert_eq!(TrianglePoset::new(Params::Mono { n: 2, m: 2 }).unwrap().ideals().len(), 6);
    }

    #[test]
    fn prime_examples() {
        let p = HeightSeqA::new(vec![1, 3, 3, 4]).unwrap();
        assert_eq!(p.prime_index().unwrap(), (2, 3));
        let q = HeightSeqA::path_for_prime(Params::A { n: 4 }, (2, 3)).unwrap();
        assert_eq!(q, p);
        let b = HeightSeqB::path_for_prime(Params::B { n: 2 }, (2, 3)).unwrap();
        assert_eq!(b.heights(), &[1, 3]);
        assert_eq!(b.prime_index().unwrap(), (2, 3));
        let b = HeightSeqB::path_for_prime(Params::B { n: 2 }, (1, 4)).unwrap();
        assert_eq!(b, HeightSeqB::top(2));
        assert!(HeightSeqA::bottom(3).prime_index().is_err());
        assert!(matches!(
            HeightSeqA::path_for_prime(Params::A { n: 3 }, (2, 2)),
            Err(Error::NotInPoset(2, 2))
        ));
    }

    #[test]
    fn ideal_validation() {
        let poset = TrianglePoset::new(Params::A { n: 3 }).unwrap();
        assert!(poset.ideal([(2, 3)]).is_ok());
        assert!(matches!(poset.ideal([(1, 3)]), Err(Error::NotAnIdeal(1, 3, _, _))));
        assert!(matches!(poset.ideal([(3, 4)]), Err(Error::NotInPoset(3, 4))));
    }

    #[test]
    fn small_birkhoff_checks() {
        assert!(verify_birkhoff::<HeightSeqA>(Params::A { n: 5 }).unwrap().passed());
        assert!(verify_birkhoff::<HeightSeqB>(Params::B { n: 4 }).unwrap().passed());
        assert!(verify_birkhoff::<MonotonePath>(Params::Mono { n: 3, m: 2 }).unwrap().passed());
    }
}
