//! Fixed workloads shared by the benchmarks.

use necklace_core::free_algebra::{enumerate_necklaces, Necklace, Word};

/// All necklaces of degree `k` for one symbol pair.
pub fn necklaces(k: usize) -> Vec<Necklace> {
    enumerate_necklaces(1, k)
}

/// Every word of length `k` in `x, x*`, as rotation input.
pub fn words(k: usize) -> Vec<Word> {
    let letters = necklace_core::free_algebra::Alphabet::Doubled(1).letters();
    necklace_core::free_algebra::all_words(&letters, k)
}

/// Pairs of necklaces with degrees summing to `total`.
pub fn bracket_pairs(total: usize) -> Vec<(Necklace, Necklace)> {
    (1..total)
        .flat_map(|i| {
            let right = necklaces(total - i);
            necklaces(i)
                .into_iter()
                .flat_map(move |a| right.clone().into_iter().map(move |b| (a.clone(), b)))
        })
        .collect()
}
