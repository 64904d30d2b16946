use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result, WordViolation};

/// A single lattice step: `U` is `(0,1)`, `R` is `(1,0)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    U,
    R,
}

impl Step {
    pub fn flip(self) -> Step {
        match self {
            Step::U => Step::R,
            Step::R => Step::U,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Step::U => 'u',
            Step::R => 'r',
        }
    }
}

/// Which Dyck word family a word belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WordKind {
    /// Ends on the diagonal: equally many `u` and `r`.
    A,
    /// Free endpoint.
    B,
}

/// A word over `{u, r}` in which every prefix has at least as many `u` as `r`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DyckWord {
    steps: Vec<Step>,
    kind: WordKind,
}

impl DyckWord {
    pub fn new(steps: Vec<Step>, kind: WordKind) -> Result<Self> {
        if steps.is_empty() {
            return Err(Error::word(0, WordViolation::Empty));
        }
        if !steps.len().is_multiple_of(2) {
            return Err(Error::word(steps.len(), WordViolation::OddLength));
        }
        let mut ups = 0usize;
        let mut rights = 0usize;
        for (pos, step) in steps.iter().enumerate() {
            match step {
                Step::U => ups += 1,
                Step::R => rights += 1,
            }
            if rights > ups {
                return Err(Error::word(pos + 1, WordViolation::PrefixDeficit));
            }
        }
        if kind == WordKind::A && ups != rights {
            return Err(Error::word(steps.len(), WordViolation::UnequalCounts { ups, rights }));
        }
        Ok(DyckWord { steps, kind })
    }

    /// Parses a lowercase `u`/`r` string.
    pub fn parse(s: &str, kind: WordKind) -> Result<Self> {
        let steps = parse_steps(s)?;
        DyckWord::new(steps, kind)
    }

    /// Parses a type B word and checks it has length `2n`.
    pub fn parse_b(s: &str, n: usize) -> Result<Self> {
        let word = DyckWord::parse(s, WordKind::B)?;
        if word.len() != 2 * n {
            return Err(Error::word(
                word.len(),
                WordViolation::LengthMismatch { expected: 2 * n, found: word.len() },
            ));
        }
        Ok(word)
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn kind(&self) -> WordKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn semilength(&self) -> usize {
        self.steps.len() / 2
    }

    pub fn count_ups(&self) -> usize {
        self.steps.iter().filter(|s| **s == Step::U).count()
    }

    pub fn count_rights(&self) -> usize {
        self.steps.len() - self.count_ups()
    }
}

impl fmt::Display for DyckWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_steps(f, &self.steps)
    }
}

pub(crate) fn write_steps(f: &mut fmt::Formatter<'_>, steps: &[Step]) -> fmt::Result {
    for step in steps {
        write!(f, "{}", step.letter())?;
    }
    Ok(())
}

fn parse_steps(s: &str) -> Result<Vec<Step>> {
    s.chars()
        .enumerate()
        .map(|(pos, c)| match c {
            'u' => Ok(Step::U),
            'r' => Ok(Step::R),
            other => Err(Error::word(pos + 1, WordViolation::InvalidLetter(other))),
        })
        .collect()
}

/// Complement every letter and reverse the word.
pub(crate) fn complement_reverse(steps: &[Step]) -> Vec<Step> {
    steps.iter().rev().map(|s| s.flip()).collect()
}

impl FromStr for Step {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "u" => Ok(Step::U),
            "r" => Ok(Step::R),
            _ => Err(Error::Parse { input: s.to_string(), reason: "expected 'u' or 'r'".into() }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accepts_valid_words() {
        let w = DyckWord::parse("uurr", WordKind::A).unwrap();
        assert_eq!(w.semilength(), 2);
        assert_eq!(w.to_string(), "uurr");
        assert!(DyckWord::parse("uuuu", WordKind::B).is_ok());
    }

    #[test]
    fn reports_first_offending_position() {
        assert_eq!(DyckWord::parse("urru", WordKind::B), Err(Error::word(3, WordViolation::PrefixDeficit)));
        assert_eq!(DyckWord::parse("uru", WordKind::B), Err(Error::word(3, WordViolation::OddLength)));
        assert_eq!(
            DyckWord::parse("uuur", WordKind::A),
            Err(Error::word(4, WordViolation::UnequalCounts { ups: 3, rights: 1 }))
        );
        assert_eq!(
            DyckWord::parse("uxrr", WordKind::A),
            Err(Error::word(2, WordViolation::InvalidLetter('x')))
        );
        assert_eq!(DyckWord::parse("", WordKind::A), Err(Error::word(0, WordViolation::Empty)));
        assert!(DyckWord::parse("UURR", WordKind::A).is_err());
    }

    #[test]
    fn type_b_length_must_match_n() {
        assert!(DyckWord::parse_b("uuur", 2).is_ok());
        assert!(matches!(
            DyckWord::parse_b("uuur", 3),
            Err(Error::InvalidWord { violation: WordViolation::LengthMismatch { .. }, .. })
        ));
    }
}
