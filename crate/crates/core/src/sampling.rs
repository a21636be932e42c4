//! Seeded random words and necklaces for property sampling.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::free_algebra::{Letter, Necklace, Word};

/// Seed used when none is given.
pub const DEFAULT_SEED: u64 = 0;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_word(rng: &mut impl Rng, letters: &[Letter], len: usize) -> Word {
    Word::new(
        (0..len)
            .map(|_| letters[rng.random_range(0..letters.len())])
            .collect(),
    )
}

/// Pairs of necklaces of positive degree with total degree at most
/// `max_total` (at least 2).
pub fn random_necklace_pairs(
    seed: u64,
    letters: &[Letter],
    max_total: usize,
    count: usize,
) -> Vec<(Necklace, Necklace)> {
    assert!(max_total >= 2, "need room for two letters");
    let mut r = rng(seed);
    (0..count)
        .map(|_| {
            let total = r.random_range(2..=max_total);
            let first = r.random_range(1..total);
            let a = random_word(&mut r, letters, first);
            let b = random_word(&mut r, letters, total - first);
            (Necklace::new(&a), Necklace::new(&b))
        })
        .collect()
}

/// Triples of nonempty words with total length at most `max_total`
/// (at least 3).
pub fn random_word_triples(
    seed: u64,
    letters: &[Letter],
    max_total: usize,
    count: usize,
) -> Vec<(Word, Word, Word)> {
    assert!(max_total >= 3, "need room for three letters");
    let mut r = rng(seed);
    (0..count)
        .map(|_| {
            let total = r.random_range(3..=max_total);
            let a = r.random_range(1..=total - 2);
            let b = r.random_range(1..=total - a - 1);
            let c = total - a - b;
            (
                random_word(&mut r, letters, a),
                random_word(&mut r, letters, b),
                random_word(&mut r, letters, c),
            )
        })
        .collect()
}
