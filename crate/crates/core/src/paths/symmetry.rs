//! Reflection of type A paths about the anti-diagonal, and the identification
//! of type B paths of semilength `n` with the reflection-fixed type A paths of
//! semilength `2n`.

use crate::error::{Error, Result};
use crate::paths::heights::{word_to_heights_a, word_to_heights_b, HeightSeqA, HeightSeqB};
use crate::paths::word::{complement_reverse, DyckWord, WordKind};

/// Fills `out[len-h_i .. len-h_{i-1}]` (0-based) with `len-i+1` for every
/// strict ascent `h_i > h_{i-1}` of `h` (with `h_0 = 0`).
fn fill_reflected_blocks(h: &[usize], len: usize, out: &mut [usize]) {
    let mut prev = 0;
    for (idx, &hi) in h.iter().enumerate() {
        if hi > prev {
            let value = len - idx;
            for slot in &mut out[len - hi..len - prev] {
                *slot = value;
            }
        }
        prev = hi;
    }
}

/// The involution ψ, computed from the block formula on heights.
pub fn psi(p: &HeightSeqA) -> HeightSeqA {
    let n = p.n();
    let mut out = vec![0; n];
    fill_reflected_blocks(p.heights(), n, &mut out);
    HeightSeqA::new_unchecked(out)
}

/// The involution ψ, computed by complementing and reversing the word.
pub fn psi_word(p: &HeightSeqA) -> HeightSeqA {
    let steps = complement_reverse(&p.steps());
    let word = DyckWord::new(steps, WordKind::A).expect("reflection keeps Dyck words");
    word_to_heights_a(&word).expect("type A word")
}

pub fn is_centrally_symmetric(q: &HeightSeqA) -> bool {
    psi(q) == *q
}

/// Maps a type B path of semilength `n` to the centrally symmetric type A
/// path of semilength `2n` whose first half it is.
pub fn embed_b_to_a(p: &HeightSeqB) -> HeightSeqA {
    let len = 2 * p.n();
    let mut out = vec![0; len];
    fill_reflected_blocks(p.heights(), len, &mut out);
    out[..p.k()].copy_from_slice(p.heights());
    HeightSeqA::new_unchecked(out)
}

/// Same map as [`embed_b_to_a`], built by concatenating the word with its
/// complement-reverse.
pub fn embed_b_to_a_word(p: &HeightSeqB) -> HeightSeqA {
    let mut steps = p.steps();
    let tail = complement_reverse(&steps);
    steps.extend(tail);
    let word = DyckWord::new(steps, WordKind::A).expect("concatenation is a type A word");
    word_to_heights_a(&word).expect("type A word")
}

/// Inverse of [`embed_b_to_a`]: the first half of a centrally symmetric path.
pub fn restrict_a_to_b(q: &HeightSeqA) -> Result<HeightSeqB> {
    if !q.n().is_multiple_of(2) || !is_centrally_symmetric(q) {
        return Err(Error::NotCentrallySymmetric(q.to_string()));
    }
    let n = q.n() / 2;
    let steps = q.steps()[..2 * n].to_vec();
    let word = DyckWord::new(steps, WordKind::B)?;
    word_to_heights_b(&word)
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
    fn psi_examples() {
        let p = a(&[3, 5, 7, 7, 7, 8, 10, 11, 11, 11, 11]);
        assert_eq!(psi(&p).heights(), &[4, 5, 5, 6, 9, 9, 10, 10, 11, 11, 11]);
        assert_eq!(psi_word(&p).to_word().to_string(), "uuuururruruuurrurrurrr");
        assert_eq!(psi(&a(&[1, 2])), a(&[1, 2]));
        assert_eq!(psi(&a(&[2, 2])), a(&[2, 2]));
    }

    #[test]
    fn embed_examples() {
        assert_eq!(embed_b_to_a(&b(2, &[3])).heights(), &[3, 4, 4, 4]);
        assert_eq!(embed_b_to_a(&HeightSeqB::bottom(3)), HeightSeqA::bottom(6));
        assert_eq!(embed_b_to_a(&b(3, &[6])), HeightSeqA::top(6));
        assert_eq!(embed_b_to_a_word(&b(2, &[3])).heights(), &[3, 4, 4, 4]);
    }

    #[test]
    fn restrict_examples() {
        assert_eq!(restrict_a_to_b(&a(&[3, 4, 4, 4])).unwrap(), b(2, &[3]));
        assert_eq!(restrict_a_to_b(&HeightSeqA::bottom(6)).unwrap(), HeightSeqB::bottom(3));
        assert_eq!(restrict_a_to_b(&HeightSeqA::top(6)).unwrap(), b(3, &[6]));
    }

    #[test]
    fn restrict_rejects_asymmetric_paths() {
        // ψ(2,3,3,4) = (1,3,4,4)
        assert!(matches!(restrict_a_to_b(&a(&[2, 3, 3, 4])), Err(Error::NotCentrallySymmetric(_))));
        assert!(matches!(restrict_a_to_b(&a(&[1, 3, 3])), Err(Error::NotCentrallySymmetric(_))));
    }
}
