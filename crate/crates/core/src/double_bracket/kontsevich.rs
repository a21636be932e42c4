//! Cut-and-join description of the symplectic necklace bracket.
//!
//! Kept deliberately separate from the tensor machinery in `eval`: this
//! path only opens and splices letter sequences, and normalizes cyclic
//! words by scanning all rotations.

use num_bigint::BigInt;

use crate::free_algebra::{Letter, Necklace, NecklaceElement, Word};
use crate::lincomb::Rational;

fn opened_at(w: &[Letter], p: usize) -> impl Iterator<Item = Letter> + '_ {
    w[p + 1..].iter().chain(w[..p].iter()).copied()
}

fn min_rotation(letters: Vec<Letter>) -> Necklace {
    let n = letters.len();
    let best = (0..n.max(1))
        .map(|k| {
            let mut r = letters[k.min(n)..].to_vec();
            r.extend_from_slice(&letters[..k.min(n)]);
            r
        })
        .min()
        .unwrap_or_default();
    Necklace::new(&Word::new(best))
}

/// Sum over every `x_i` in `w1` and `x_i*` in `w2` of the necklace made
/// by removing both beads and joining the opened strings.
fn splices(w1: &[Letter], w2: &[Letter], d: usize, out: &mut NecklaceElement, sign: i64) {
    for (p, &a) in w1.iter().enumerate() {
        if a.is_starred() || a.index() > d {
            continue;
        }
        for (q, &b) in w2.iter().enumerate() {
            if b != a.dual() {
                continue;
            }
            let joined: Vec<Letter> = opened_at(w1, p).chain(opened_at(w2, q)).collect();
            out.add_term(
                min_rotation(joined),
                Rational::from_integer(BigInt::from(sign)),
            );
        }
    }
}

/// `[w1, w2]` in the necklace Lie algebra of the doubled one-vertex quiver
/// with `d` loops.
pub fn kontsevich_bracket(w1: &Necklace, w2: &Necklace, d: usize) -> NecklaceElement {
    let mut out = NecklaceElement::zero();
    splices(w1.word().letters(), w2.word().letters(), d, &mut out, 1);
    splices(w2.word().letters(), w1.word().letters(), d, &mut out, -1);
    out
}
