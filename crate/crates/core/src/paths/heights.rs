use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, HeightViolation, Result};
use crate::paths::word::{write_steps, DyckWord, Step, WordKind};

/// Height sequence of a type A Dyck path of semilength `n`.
///
/// `h_i` is the number of up-steps before the `i`-th right-step. Valid
/// sequences are weakly increasing with `i <= h_i <= n`, so `h_n = n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HeightSeqA {
    h: Vec<usize>,
}

/// Height sequence of a type B Dyck path of semilength `n`.
///
/// The length `k` is the number of right-steps, plus one when the word ends
/// with an up-step; in that case the last entry is the total up-count. The
/// semilength is stored because it is not determined by the entries.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HeightSeqB {
    n: usize,
    h: Vec<usize>,
}

/// Height sequence of a monotone lattice path from `(0,0)` to `(n,m)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonotonePath {
    m: usize,
    h: Vec<usize>,
}

fn check_increasing(h: &[usize], upto: usize) -> Result<()> {
    for i in 1..upto {
        if h[i] < h[i - 1] {
            return Err(Error::heights(i + 1, HeightViolation::Decreasing));
        }
    }
    Ok(())
}

fn check_diagonal(h: &[usize]) -> Result<()> {
    for (i, &hi) in h.iter().enumerate() {
        if hi < i + 1 {
            return Err(Error::heights(i + 1, HeightViolation::BelowDiagonal));
        }
    }
    Ok(())
}

impl HeightSeqA {
    pub fn new(h: Vec<usize>) -> Result<Self> {
        let n = h.len();
        if n == 0 {
            return Err(Error::heights(0, HeightViolation::Empty));
        }
        check_increasing(&h, n)?;
        check_diagonal(&h)?;
        if let Some(i) = h.iter().position(|&x| x > n) {
            return Err(Error::heights(i + 1, HeightViolation::AboveBound { bound: n }));
        }
        if h[n - 1] != n {
            return Err(Error::heights(n, HeightViolation::LastNotN { n }));
        }
        Ok(HeightSeqA { h })
    }

    /// Like [`HeightSeqA::new`] but also checks the semilength.
    pub fn with_n(n: usize, h: Vec<usize>) -> Result<Self> {
        if n == 0 {
            return Err(Error::heights(0, HeightViolation::ZeroSemilength));
        }
        if h.len() != n {
            return Err(Error::heights(
                h.len().min(n) + 1,
                HeightViolation::WrongLength { expected: n, found: h.len() },
            ));
        }
        HeightSeqA::new(h)
    }

    pub(crate) fn new_unchecked(h: Vec<usize>) -> Self {
        debug_assert!(HeightSeqA::new(h.clone()).is_ok(), "invalid type A heights {h:?}");
        HeightSeqA { h }
    }

    /// The staircase `(1, 2, ..., n)`.
    pub fn bottom(n: usize) -> Self {
        HeightSeqA::new_unchecked((1..=n).collect())
    }

    /// `(n, n, ..., n)`.
    pub fn top(n: usize) -> Self {
        HeightSeqA::new_unchecked(vec![n; n])
    }

    pub fn n(&self) -> usize {
        self.h.len()
    }

    pub fn heights(&self) -> &[usize] {
        &self.h
    }

    pub fn into_heights(self) -> Vec<usize> {
        self.h
    }

    pub fn from_word(w: &DyckWord) -> Result<Self> {
        word_to_heights_a(w)
    }

    pub fn to_word(&self) -> DyckWord {
        heights_to_word_a(self)
    }

    pub fn steps(&self) -> Vec<Step> {
        heights_to_steps(&self.h, true)
    }

    /// View as a type B path of the same semilength.
    pub fn to_type_b(&self) -> HeightSeqB {
        HeightSeqB::new_unchecked(self.n(), self.h.clone())
    }
}

impl HeightSeqB {
    pub fn new(n: usize, h: Vec<usize>) -> Result<Self> {
        if n == 0 {
            return Err(Error::heights(0, HeightViolation::ZeroSemilength));
        }
        let k = h.len();
        if k == 0 {
            return Err(Error::heights(0, HeightViolation::Empty));
        }
        if k > n {
            return Err(Error::heights(n + 1, HeightViolation::TooLong { max: n, found: k }));
        }
        check_increasing(&h, k - 1)?;
        check_diagonal(&h)?;
        let bound = 2 * n - k;
        if let Some(i) = h[..k - 1].iter().position(|&x| x > bound) {
            return Err(Error::heights(i + 1, HeightViolation::AboveBound { bound }));
        }
        let last = h[k - 1];
        if last != bound && last != bound + 1 {
            return Err(Error::heights(k, HeightViolation::BadFinalHeight { low: bound, high: bound + 1 }));
        }
        Ok(HeightSeqB { n, h })
    }

    pub(crate) fn new_unchecked(n: usize, h: Vec<usize>) -> Self {
        debug_assert!(HeightSeqB::new(n, h.clone()).is_ok(), "invalid type B heights {h:?} (n={n})");
        HeightSeqB { n, h }
    }

    /// The staircase `(1, 2, ..., n)`.
    pub fn bottom(n: usize) -> Self {
        HeightSeqB::new_unchecked(n, (1..=n).collect())
    }

    /// The single-entry sequence `(2n)`: all up-steps.
    pub fn top(n: usize) -> Self {
        HeightSeqB::new_unchecked(n, vec![2 * n])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.h.len()
    }

    pub fn heights(&self) -> &[usize] {
        &self.h
    }

    pub fn into_heights(self) -> Vec<usize> {
        self.h
    }

    /// True when the word ends with an up-step (`h_k = 2n-k+1`).
    pub fn ends_with_up(&self) -> bool {
        self.h[self.k() - 1] == 2 * self.n - self.k() + 1
    }

    /// Total number of up-steps in the word.
    pub fn total_ups(&self) -> usize {
        2 * self.n - self.rights()
    }

    /// Number of right-steps in the word.
    pub fn rights(&self) -> usize {
        if self.ends_with_up() {
            self.k() - 1
        } else {
            self.k()
        }
    }

    /// Type A paths sit inside type B as the sequences with `k = n`, `h_n = n`.
    pub fn to_type_a(&self) -> Option<HeightSeqA> {
        (self.k() == self.n && self.h[self.n - 1] == self.n)
            .then(|| HeightSeqA::new_unchecked(self.h.clone()))
    }

    pub fn from_word(w: &DyckWord) -> Result<Self> {
        word_to_heights_b(w)
    }

    pub fn to_word(&self) -> DyckWord {
        heights_to_word_b(self)
    }

    pub fn steps(&self) -> Vec<Step> {
        heights_to_steps(&self.h, !self.ends_with_up())
    }
}

impl Ord for HeightSeqB {
    /// Descending length first, then lexicographic; a linear extension of
    /// the dominance order.
    fn cmp(&self, other: &Self) -> Ordering {
        self.n.cmp(&other.n).then_with(|| other.k().cmp(&self.k())).then_with(|| self.h.cmp(&other.h))
    }
}

impl PartialOrd for HeightSeqB {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl MonotonePath {
    pub fn new(m: usize, h: Vec<usize>) -> Result<Self> {
        if h.is_empty() {
            return Err(Error::heights(0, HeightViolation::Empty));
        }
        check_increasing(&h, h.len())?;
        if let Some(i) = h.iter().position(|&x| x > m) {
            return Err(Error::heights(i + 1, HeightViolation::AboveBound { bound: m }));
        }
        Ok(MonotonePath { m, h })
    }

    pub fn with_shape(n: usize, m: usize, h: Vec<usize>) -> Result<Self> {
        if h.len() != n {
            return Err(Error::heights(
                h.len().min(n) + 1,
                HeightViolation::WrongLength { expected: n, found: h.len() },
            ));
        }
        MonotonePath::new(m, h)
    }

    pub(crate) fn new_unchecked(m: usize, h: Vec<usize>) -> Self {
        debug_assert!(MonotonePath::new(m, h.clone()).is_ok(), "invalid monotone path {h:?} (m={m})");
        MonotonePath { m, h }
    }

    pub fn bottom(n: usize, m: usize) -> Self {
        MonotonePath::new_unchecked(m, vec![0; n])
    }

    pub fn top(n: usize, m: usize) -> Self {
        MonotonePath::new_unchecked(m, vec![m; n])
    }

    pub fn n(&self) -> usize {
        self.h.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn heights(&self) -> &[usize] {
        &self.h
    }

    pub fn into_heights(self) -> Vec<usize> {
        self.h
    }

    /// Steps from `(0,0)` to `(n,m)`; trailing up-steps climb from `h_n` to `m`.
    pub fn steps(&self) -> Vec<Step> {
        let mut steps = heights_to_steps(&self.h, true);
        steps.extend(std::iter::repeat_n(Step::U, self.m - self.h[self.h.len() - 1]));
        steps
    }
}

/// `u^{h_1} r u^{h_2-h_1} r ...`, with the final `r` only when `close` is set.
fn heights_to_steps(h: &[usize], close: bool) -> Vec<Step> {
    let mut steps = Vec::with_capacity(2 * h.len() + 2);
    let mut prev = 0;
    for (i, &hi) in h.iter().enumerate() {
        steps.extend(std::iter::repeat_n(Step::U, hi - prev));
        prev = hi;
        if i + 1 < h.len() || close {
            steps.push(Step::R);
        }
    }
    steps
}

/// Up-counts before each right-step.
fn ups_before_rights(steps: &[Step]) -> Vec<usize> {
    let mut ups = 0;
    let mut out = Vec::new();
    for step in steps {
        match step {
            Step::U => ups += 1,
            Step::R => out.push(ups),
        }
    }
    out
}

pub fn word_to_heights_a(w: &DyckWord) -> Result<HeightSeqA> {
    if w.kind() != WordKind::A {
        // Re-validate as type A so the caller learns the offending position.
        let as_a = DyckWord::new(w.steps().to_vec(), WordKind::A)?;
        return word_to_heights_a(&as_a);
    }
    Ok(HeightSeqA::new_unchecked(ups_before_rights(w.steps())))
}

pub fn heights_to_word_a(p: &HeightSeqA) -> DyckWord {
    DyckWord::new(p.steps(), WordKind::A).expect("valid heights give a valid word")
}

pub fn word_to_heights_b(w: &DyckWord) -> Result<HeightSeqB> {
    let n = w.semilength();
    let mut h = ups_before_rights(w.steps());
    if w.steps().last() == Some(&Step::U) {
        h.push(w.count_ups());
    }
    HeightSeqB::new(n, h)
}

pub fn heights_to_word_b(p: &HeightSeqB) -> DyckWord {
    DyckWord::new(p.steps(), WordKind::B).expect("valid heights give a valid word")
}

fn write_seq(f: &mut fmt::Formatter<'_>, h: &[usize]) -> fmt::Result {
    for (i, x) in h.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

impl fmt::Display for HeightSeqA {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_seq(f, &self.h)
    }
}

impl fmt::Display for HeightSeqB {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_seq(f, &self.h)
    }
}

impl fmt::Display for MonotonePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_seq(f, &self.h)
    }
}

/// Renders the word of a monotone path.
pub struct MonotoneWord<'a>(pub &'a MonotonePath);

impl fmt::Display for MonotoneWord<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_steps(f, &self.0.steps())
    }
}

/// Parses `"3,5,7"`: comma-separated decimals, no whitespace.
pub fn parse_seq(s: &str) -> Result<Vec<usize>> {
    let err = |reason: &str| Error::Parse { input: s.to_string(), reason: reason.to_string() };
    if s.is_empty() {
        return Err(err("empty sequence"));
    }
    s.split(',')
        .map(|part| {
            if part.is_empty() || !part.bytes().all(|b| b.is_ascii_digit()) {
                return Err(err("entries must be non-negative decimal integers"));
            }
            part.parse::<usize>().map_err(|_| err("entry out of range"))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word_a(s: &str) -> DyckWord {
        DyckWord::parse(s, WordKind::A).unwrap()
    }

    fn word_b(s: &str) -> DyckWord {
        DyckWord::parse(s, WordKind::B).unwrap()
    }

    #[test]
    fn type_a_word_to_heights() {
        let h = word_to_heights_a(&word_a("uuuruuruurrruruururrrr")).unwrap();
        assert_eq!(h.heights(), &[3, 5, 7, 7, 7, 8, 10, 11, 11, 11, 11]);
        assert_eq!(word_to_heights_a(&word_a("urur")).unwrap().heights(), &[1, 2]);
        assert_eq!(word_to_heights_a(&word_a("uuurrr")).unwrap().heights(), &[3, 3, 3]);
    }

    #[test]
    fn type_a_heights_to_word() {
        let p = HeightSeqA::new(vec![3, 5, 7, 7, 7, 8, 10, 11, 11, 11, 11]).unwrap();
        assert_eq!(p.to_word().to_string(), "uuuruuruurrruruururrrr");
        assert_eq!(HeightSeqA::new(vec![1, 2]).unwrap().to_word().to_string(), "urur");
        assert_eq!(HeightSeqA::new(vec![2, 2, 4, 4]).unwrap().to_word().to_string(), "uurruurr");
    }

    #[test]
    fn type_a_rejects_b_word() {
        let w = word_b("uuur");
        assert!(matches!(word_to_heights_a(&w), Err(Error::InvalidWord { position: 4, .. })));
    }

    #[test]
    fn type_a_validation_names_first_violation() {
        assert_eq!(HeightSeqA::new(vec![2, 1, 3]), Err(Error::heights(2, HeightViolation::Decreasing)));
        assert_eq!(HeightSeqA::new(vec![1, 1, 3]), Err(Error::heights(2, HeightViolation::BelowDiagonal)));
        assert_eq!(HeightSeqA::new(vec![1, 2, 2]), Err(Error::heights(3, HeightViolation::BelowDiagonal)));
        assert_eq!(
            HeightSeqA::new(vec![2, 4, 4]),
            Err(Error::heights(2, HeightViolation::AboveBound { bound: 3 }))
        );
        assert_eq!(HeightSeqA::new(vec![]), Err(Error::heights(0, HeightViolation::Empty)));
        assert!(matches!(
            HeightSeqA::with_n(3, vec![1, 2]),
            Err(Error::InvalidHeights { violation: HeightViolation::WrongLength { .. }, .. })
        ));
    }

    #[test]
    fn type_b_word_to_heights() {
        let h = word_to_heights_b(&word_b("uuur")).unwrap();
        assert_eq!((h.n(), h.heights()), (2, &[3][..]));
        let h = word_to_heights_b(&word_b("uurr")).unwrap();
        assert_eq!(h.heights(), &[2, 2]);
        let h = word_to_heights_b(&word_b("uuuruuruurruuuruuuurru")).unwrap();
        assert_eq!((h.n(), h.heights()), (11, &[3, 5, 7, 7, 10, 14, 14, 15][..]));
    }

    #[test]
    fn printed_sequence_encodes_a_different_word() {
        // (3,5,7,7,10,14,15) is a valid sequence, but its word is not
        // uuuruuruurruuuruuuurru; that word has eight entries.
        let printed = HeightSeqB::new(11, vec![3, 5, 7, 7, 10, 14, 15]).unwrap();
        assert_ne!(printed.to_word().to_string(), "uuuruuruurruuuruuuurru");
        assert_eq!(printed.to_word().to_string(), "uuuruuruurruuuruuuurur");
    }

    #[test]
    fn type_b_heights_to_word() {
        assert_eq!(HeightSeqB::new(2, vec![3]).unwrap().to_word().to_string(), "uuur");
        assert_eq!(HeightSeqB::new(3, vec![1, 2, 3]).unwrap().to_word().to_string(), "ururur");
        assert_eq!(HeightSeqB::new(3, vec![6]).unwrap().to_word().to_string(), "uuuuuu");
        assert_eq!(HeightSeqB::bottom(4).to_word().to_string(), "urururur");
    }

    #[test]
    fn type_b_validation() {
        assert!(HeightSeqB::new(3, vec![3, 3, 4]).is_ok());
        assert!(HeightSeqB::new(3, vec![1, 5]).is_ok());
        assert_eq!(
            HeightSeqB::new(3, vec![1, 2, 3, 4]),
            Err(Error::heights(4, HeightViolation::TooLong { max: 3, found: 4 }))
        );
        assert_eq!(
            HeightSeqB::new(3, vec![1, 3]),
            Err(Error::heights(2, HeightViolation::BadFinalHeight { low: 4, high: 5 }))
        );
        assert_eq!(
            HeightSeqB::new(3, vec![5, 5]),
            Err(Error::heights(1, HeightViolation::AboveBound { bound: 4 }))
        );
        assert_eq!(HeightSeqB::new(3, vec![0, 5]), Err(Error::heights(1, HeightViolation::BelowDiagonal)));
        assert_eq!(HeightSeqB::new(0, vec![]), Err(Error::heights(0, HeightViolation::ZeroSemilength)));
    }

    #[test]
    fn type_b_ordering_is_longest_first() {
        let mut v = [
            HeightSeqB::new(2, vec![4]).unwrap(),
            HeightSeqB::new(2, vec![1, 2]).unwrap(),
            HeightSeqB::new(2, vec![3]).unwrap(),
            HeightSeqB::new(2, vec![2, 2]).unwrap(),
        ];
        v.sort();
        let shown: Vec<String> = v.iter().map(|p| p.to_string()).collect();
        assert_eq!(shown, ["1,2", "2,2", "3", "4"]);
    }

    #[test]
    fn monotone_paths() {
        let p = MonotonePath::with_shape(3, 3, vec![0, 1, 2]).unwrap();
        assert_eq!(MonotoneWord(&p).to_string(), "rururu");
        assert!(MonotonePath::new(2, vec![0, 3]).is_err());
        assert!(MonotonePath::new(2, vec![2, 1]).is_err());
        assert_eq!(MonotonePath::top(2, 0).heights(), &[0, 0]);
    }

    #[test]
    fn sequence_parsing() {
        assert_eq!(parse_seq("3,5,7,7,10,14,14,15").unwrap(), vec![3, 5, 7, 7, 10, 14, 14, 15]);
        for bad in ["", "1,,2", "1, 2", "-1", "a", "1,"] {
            assert!(parse_seq(bad).is_err(), "{bad:?} should not parse");
        }
    }
}
