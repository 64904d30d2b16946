//! Closed forms for relative pseudocomplements, pseudocomplements, regular
//! elements and join-irreducibles.

use std::collections::HashSet;

use crate::error::Result;
use crate::lattice::{LatticePath, Params};
use crate::paths::{HeightSeqA, HeightSeqB, MonotonePath, Step};

/// A finite distributive lattice path family with its Heyting operations.
pub trait HeytingPath: LatticePath {
    /// The relative pseudocomplement `self -> other`, assuming equal parameters.
    fn implies_with(&self, other: &Self) -> Self;
    /// `self -> bottom`.
    fn pseudo_complement(&self) -> Self;
    /// True when `self` equals its double pseudocomplement.
    fn is_regular(&self) -> bool;
    /// True when `self` has exactly one lower cover.
    fn is_join_irreducible(&self) -> bool;
    /// All regular elements, sorted.
    fn regulars(params: Params) -> Result<Vec<Self>>;
}

/// Checked relative pseudocomplement.
pub fn implies<P: HeytingPath>(p: &P, q: &P) -> Result<P> {
    crate::lattice::same_params(p, q)?;
    Ok(p.implies_with(q))
}

pub fn pseudo<P: HeytingPath>(p: &P) -> P {
    p.pseudo_complement()
}

/// Right-to-left scan shared by the monotone and type A closed forms: keep
/// the next height while `h1_i <= h2_i`, otherwise drop to `h2_i`.
fn scan_implies(h1: &[usize], h2: &[usize], last: usize) -> Vec<usize> {
    let n = h1.len();
    let mut h = vec![0; n];
    for i in (0..n).rev() {
        h[i] = if h1[i] > h2[i] {
            h2[i]
        } else if i + 1 == n {
            last
        } else {
            h[i + 1]
        };
    }
    h
}

/// Block form: with violations `i_1 < ... < i_s` (where `h1_i > h2_i`), the
/// block `(i_{t-1}, i_t]` takes height `h2_{i_t}` and everything after `i_s`
/// takes `top`.
fn blocks_implies(h1: &[usize], h2: &[usize], top: usize) -> Vec<usize> {
    let mut h = Vec::with_capacity(h1.len());
    let mut start = 0;
    for i in 0..h1.len() {
        if h1[i] > h2[i] {
            h.extend(std::iter::repeat_n(h2[i], i + 1 - start));
            start = i + 1;
        }
    }
    h.resize(h1.len(), top);
    h
}

pub fn implies_mono(p: &MonotonePath, q: &MonotonePath) -> MonotonePath {
    MonotonePath::new_unchecked(p.m(), scan_implies(p.heights(), q.heights(), p.m()))
}

pub fn implies_mono_blocks(p: &MonotonePath, q: &MonotonePath) -> MonotonePath {
    MonotonePath::new_unchecked(p.m(), blocks_implies(p.heights(), q.heights(), p.m()))
}

pub fn implies_a(p: &HeightSeqA, q: &HeightSeqA) -> HeightSeqA {
    HeightSeqA::new_unchecked(scan_implies(p.heights(), q.heights(), q.n()))
}

pub fn implies_a_blocks(p: &HeightSeqA, q: &HeightSeqA) -> HeightSeqA {
    HeightSeqA::new_unchecked(blocks_implies(p.heights(), q.heights(), q.n()))
}

pub fn implies_b(p: &HeightSeqB, q: &HeightSeqB) -> HeightSeqB {
    let n = p.n();
    let (h1, h2) = (p.heights(), q.heights());
    let (k1, k2) = (p.k(), q.k());
    let viol = |i: usize| h1[i - 1] > h2[i - 1];
    if k1 < k2 {
        let mut h = vec![0; k2];
        for i in (1..=k2).rev() {
            h[i - 1] = if i <= k1 && !viol(i) { h[i] } else { h2[i - 1] };
        }
        return HeightSeqB::new_unchecked(n, h);
    }
    let k = if viol(k2) { k2 } else { (1..k2).rev().find(|&i| viol(i)).unwrap_or(0) + 1 };
    let mut h = vec![0; k];
    for i in (1..=k).rev() {
        h[i - 1] = if viol(i) {
            h2[i - 1]
        } else if i == k {
            2 * n - k + 1
        } else {
            h[i]
        };
    }
    HeightSeqB::new_unchecked(n, h)
}

pub fn pseudo_a(p: &HeightSeqA) -> HeightSeqA {
    let h = p.heights();
    let n = h.len();
    let mut c = vec![0; n];
    for i in (1..=n).rev() {
        c[i - 1] = if i < n && h[i - 1] == i { c[i] } else { i };
    }
    HeightSeqA::new_unchecked(c)
}

pub fn pseudo_b(p: &HeightSeqB) -> HeightSeqB {
    let (n, k) = (p.n(), p.k());
    let h = p.heights();
    if k < n {
        let mut c = vec![0; n];
        for i in (1..=n).rev() {
            c[i - 1] = if i <= k && h[i - 1] == i { c[i] } else { i };
        }
        return HeightSeqB::new_unchecked(n, c);
    }
    let kk = if h[n - 1] == n + 1 { n } else { (1..n).rev().find(|&i| h[i - 1] > i).unwrap_or(0) + 1 };
    let mut c = vec![0; kk];
    for i in (1..=kk).rev() {
        c[i - 1] = if h[i - 1] > i {
            i
        } else if i == kk {
            2 * n - kk + 1
        } else {
            c[i]
        };
    }
    HeightSeqB::new_unchecked(n, c)
}

pub fn pseudo_mono(p: &MonotonePath) -> MonotonePath {
    let bottom = MonotonePath::bottom(p.n(), p.m());
    if *p == bottom {
        MonotonePath::top(p.n(), p.m())
    } else {
        bottom
    }
}

/// Every `i <= upto` has `h_i = i`, or `h_i = c > i` with `h_i = ... = h_c = c`.
fn staircase_rule(h: &[usize], upto: usize) -> bool {
    (1..=upto).all(|i| {
        let c = h[i - 1];
        c == i || (c > i && c <= h.len() && h[i - 1..c].iter().all(|&x| x == c))
    })
}

pub fn is_regular_a(p: &HeightSeqA) -> bool {
    staircase_rule(p.heights(), p.n())
}

pub fn is_regular_b(p: &HeightSeqB) -> bool {
    let (n, k) = (p.n(), p.k());
    let h = p.heights();
    if h[k - 1] == n {
        return staircase_rule(h, k - 1);
    }
    let prev = if k >= 2 { h[k - 2] } else { 0 };
    h[k - 1] == 2 * n - k + 1 && prev == k - 1 && staircase_rule(h, k.saturating_sub(2))
}

pub fn is_regular_mono(p: &MonotonePath) -> bool {
    *p == MonotonePath::bottom(p.n(), p.m()) || *p == MonotonePath::top(p.n(), p.m())
}

/// Diagonal returns and visited lattice points of a step word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReturnProfile {
    /// `i` such that the path visits `(i, i)`, starting with 0.
    pub returns: Vec<usize>,
    /// Visited points `(rights, ups)`.
    pub points: HashSet<(usize, usize)>,
    pub end: (usize, usize),
}

impl ReturnProfile {
    pub fn of(steps: &[Step]) -> Self {
        let (mut x, mut y) = (0usize, 0usize);
        let mut returns = vec![0];
        let mut points = HashSet::from([(0, 0)]);
        for s in steps {
            match s {
                Step::U => y += 1,
                Step::R => x += 1,
            }
            points.insert((x, y));
            if x == y {
                returns.push(x);
            }
        }
        ReturnProfile { returns, points, end: (x, y) }
    }

    /// Every pair of consecutive returns `i < j` has `(i, j)` on the path.
    pub fn returns_are_square(&self) -> bool {
        self.returns.windows(2).all(|w| self.points.contains(&(w[0], w[1])))
    }
}

/// Regularity read off the word: between consecutive returns the path is a
/// full square corner.
pub fn is_regular_a_returns(p: &HeightSeqA) -> bool {
    ReturnProfile::of(&p.steps()).returns_are_square()
}

/// Type B variant: a path ending off the diagonal must end right above its
/// last return.
pub fn is_regular_b_returns(p: &HeightSeqB) -> bool {
    let profile = ReturnProfile::of(&p.steps());
    let (x, y) = profile.end;
    profile.returns_are_square() && (x == y || profile.returns.last() == Some(&x))
}

/// Heights of the regular type A path with returns `S ∪ {0, n}`, where `S`
/// is given as a bitmask over `1..n`.
fn regular_a_heights(n: usize, mask: u64) -> Vec<usize> {
    let mut h = vec![n; n];
    let mut next = n;
    for s in (1..n).rev() {
        if mask >> (s - 1) & 1 == 1 {
            next = s;
        }
        h[s - 1] = next;
    }
    h
}

pub fn regulars_a(n: usize) -> Vec<HeightSeqA> {
    let mut out: Vec<HeightSeqA> =
        (0..1u64 << (n - 1)).map(|mask| HeightSeqA::new_unchecked(regular_a_heights(n, mask))).collect();
    out.sort();
    out
}

/// Type A regulars of semilength `n`, plus for each `j < n` a regular prefix
/// of semilength `j` followed by a straight climb to the anti-diagonal.
pub fn regulars_b(n: usize) -> Vec<HeightSeqB> {
    let mut out: Vec<HeightSeqB> = regulars_a(n).into_iter().map(|p| p.to_type_b()).collect();
    out.push(HeightSeqB::new_unchecked(n, vec![2 * n]));
    for j in 1..n {
        for mask in 0..1u64 << (j - 1) {
            let mut h = regular_a_heights(j, mask);
            h.push(2 * n - j);
            out.push(HeightSeqB::new_unchecked(n, h));
        }
    }
    out.sort();
    out
}

/// Number of indices where the path can be lowered by one cell, given the
/// lowest admissible value at each position.
fn ascent_count(h: &[usize], floor: impl Fn(usize) -> usize) -> usize {
    let mut prev = 0;
    let mut count = 0;
    for (idx, &hi) in h.iter().enumerate() {
        if hi > prev && hi > floor(idx + 1) {
            count += 1;
        }
        prev = hi;
    }
    count
}

/// Exactly one `i` with `h_i > i` and `h_i > h_{i-1}`.
pub fn is_join_irreducible_a(p: &HeightSeqA) -> bool {
    ascent_count(p.heights(), |i| i) == 1
}

pub fn is_join_irreducible_b(p: &HeightSeqB) -> bool {
    ascent_count(p.heights(), |i| i) == 1
}

/// Exactly one `i` with `h_i > h_{i-1}`.
pub fn is_join_irreducible_mono(p: &MonotonePath) -> bool {
    ascent_count(p.heights(), |_| 0) == 1
}

impl HeytingPath for HeightSeqA {
    fn implies_with(&self, other: &Self) -> Self {
        implies_a(self, other)
    }

    fn pseudo_complement(&self) -> Self {
        pseudo_a(self)
    }

    fn is_regular(&self) -> bool {
        is_regular_a(self)
    }

    fn is_join_irreducible(&self) -> bool {
        is_join_irreducible_a(self)
    }

    fn regulars(params: Params) -> Result<Vec<Self>> {
        HeightSeqA::bottom_of(params)?;
        Ok(regulars_a(params.n()))
    }
}

impl HeytingPath for HeightSeqB {
    fn implies_with(&self, other: &Self) -> Self {
        implies_b(self, other)
    }

    fn pseudo_complement(&self) -> Self {
        pseudo_b(self)
    }

    fn is_regular(&self) -> bool {
        is_regular_b(self)
    }

    fn is_join_irreducible(&self) -> bool {
        is_join_irreducible_b(self)
    }

    fn regulars(params: Params) -> Result<Vec<Self>> {
        HeightSeqB::bottom_of(params)?;
        Ok(regulars_b(params.n()))
    }
}

impl HeytingPath for MonotonePath {
    fn implies_with(&self, other: &Self) -> Self {
        implies_mono(self, other)
    }

    fn pseudo_complement(&self) -> Self {
        pseudo_mono(self)
    }

    fn is_regular(&self) -> bool {
        is_regular_mono(self)
    }

    fn is_join_irreducible(&self) -> bool {
        is_join_irreducible_mono(self)
    }

    fn regulars(params: Params) -> Result<Vec<Self>> {
        let bottom = MonotonePath::bottom_of(params)?;
        let top = MonotonePath::top_of(params)?;
        let mut out = vec![bottom];
        if top != out[0] {
            out.push(top);
        }
        Ok(out)
    }
}
