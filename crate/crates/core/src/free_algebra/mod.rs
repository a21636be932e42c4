//! The free algebra on `x_i, x_i*`, its tensor powers and the necklace
//! space `A/[A,A]`.

mod counting;
mod elements;
mod enumerate;
mod parse;
mod word;

pub use counting::{binomial, divisors, lyndon_count, mobius, necklace_dimension};
pub use elements::{
    letter_commutator, FreeElement, Necklace, NecklaceElement, TensorElement, TripleTensor,
};
pub use enumerate::{all_words, count_necklaces, enumerate_necklaces, enumerate_necklaces_over};
pub use parse::{parse_free, parse_necklace, parse_word};
pub use word::{canonical_rotation, least_rotation, Alphabet, Letter, Word};

/// Image of a linear combination of words in `A/[A,A]`.
pub fn project_to_necklace(e: &FreeElement) -> NecklaceElement {
    e.project()
}
