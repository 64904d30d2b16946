//! Path encodings: Dyck words, height sequences, and the symmetries between
//! type A and type B paths.

pub mod heights;
pub mod symmetry;
pub mod word;

pub use heights::{
    heights_to_word_a, heights_to_word_b, parse_seq, word_to_heights_a, word_to_heights_b, HeightSeqA,
    HeightSeqB, MonotonePath, MonotoneWord,
};
pub use symmetry::{embed_b_to_a, embed_b_to_a_word, is_centrally_symmetric, psi, psi_word, restrict_a_to_b};
pub use word::{DyckWord, Step, WordKind};
