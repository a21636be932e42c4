//! Generation of necklace bases.

use super::elements::Necklace;
use super::word::{Letter, Word};

/// Fredricksen–Kessler–Maiorana generation of all necklaces of length `n`
/// over `k` symbols, each in least-rotation form, in lexicographic order.
/// The callback receives the symbol codes.
fn fkm(k: usize, n: usize, mut visit: impl FnMut(&[usize])) {
    if n == 0 {
        visit(&[]);
        return;
    }
    if k == 0 {
        return;
    }
    // a[1..=n] holds the current prenecklace; a[0] is a sentinel.
    let mut a = vec![0usize; n + 1];
    visit_prenecklaces(&mut a, 1, 1, k, n, &mut visit);
}

fn visit_prenecklaces(
    a: &mut [usize],
    t: usize,
    p: usize,
    k: usize,
    n: usize,
    visit: &mut impl FnMut(&[usize]),
) {
    if t > n {
        if n.is_multiple_of(p) {
            visit(&a[1..]);
        }
        return;
    }
    a[t] = a[t - p];
    visit_prenecklaces(a, t + 1, p, k, n, visit);
    for j in a[t - p] + 1..k {
        a[t] = j;
        visit_prenecklaces(a, t + 1, t, k, n, visit);
    }
}

/// All necklaces of degree `n` on the letters `x_1, x_1*, ..., x_d, x_d*`,
/// sorted.
pub fn enumerate_necklaces(d: usize, n: usize) -> Vec<Necklace> {
    let mut out = Vec::new();
    fkm(2 * d, n, |codes| {
        let w = Word::new(codes.iter().map(|&c| Letter::from_code(c)).collect());
        out.push(Necklace::from_canonical(w));
    });
    out
}

/// Necklaces of degree `n` over an explicit sorted letter list.
pub fn enumerate_necklaces_over(letters: &[Letter], n: usize) -> Vec<Necklace> {
    let mut out = Vec::new();
    fkm(letters.len(), n, |codes| {
        let w = Word::new(codes.iter().map(|&c| letters[c]).collect());
        out.push(Necklace::new(&w));
    });
    out.sort();
    out
}

/// Number of necklaces found by generation, without materializing them.
pub fn count_necklaces(d: usize, n: usize) -> u64 {
    let mut count = 0u64;
    fkm(2 * d, n, |_| count += 1);
    count
}

/// Every word of length `n` on the given letters.
pub fn all_words(letters: &[Letter], n: usize) -> Vec<Word> {
    let mut out = vec![Vec::with_capacity(n)];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|w| {
                letters.iter().map(move |&l| {
                    let mut w2 = w.clone();
                    w2.push(l);
                    w2
                })
            })
            .collect();
    }
    out.into_iter().map(Word::new).collect()
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeSet;

    use super::*;
    use crate::free_algebra::counting::{lyndon_count, necklace_dimension};
    use crate::free_algebra::word::Alphabet;

    fn brute(d: usize, n: usize) -> Vec<Necklace> {
        let letters = Alphabet::Doubled(d).letters();
        let set: BTreeSet<Necklace> = all_words(&letters, n).iter().map(Necklace::new).collect();
        set.into_iter().collect()
    }

    #[test]
    fn degree_two_d1() {
        let ns: Vec<String> = enumerate_necklaces(1, 2)
            .iter()
            .map(|n| n.to_string())
            .collect();
        assert_eq!(ns, ["x1x1", "x1x1*", "x1*x1*"]);
    }

    #[test]
    fn unit_only_in_degree_zero() {
        let ns = enumerate_necklaces(1, 0);
        assert_eq!(ns, vec![Necklace::unit()]);
    }

    #[test]
    fn degree_four_has_six() {
        assert_eq!(enumerate_necklaces(1, 4).len(), 6);
        assert_eq!(brute(1, 4).len(), 6);
    }

    #[test]
    fn generation_matches_brute_force() {
        for d in 1..=2 {
            for n in 0..=7 {
                assert_eq!(enumerate_necklaces(d, n), brute(d, n), "d={d} n={n}");
            }
        }
    }

    #[test]
    fn generation_matches_formula() {
        for d in 1..=2u64 {
            for k in 1..=10u64 {
                assert_eq!(
                    necklace_dimension(d, k),
                    count_necklaces(d as usize, k as usize).into(),
                    "d={d} k={k}"
                );
            }
        }
    }

    // Every binary necklace of length n is v^(n/l) for a unique aperiodic v
    // of length l | n; summing Lyndon counts over l and the marked-bead
    // count j must reproduce the necklace count.
    #[test]
    fn lyndon_counts_rebuild_binary_necklaces() {
        for n in 1..=12u64 {
            let mut total = num_bigint::BigUint::from(0u32);
            for l in (1..=n).filter(|l| n % l == 0) {
                for j in 0..=l {
                    total += lyndon_count(l, j);
                }
            }
            assert_eq!(total, (count_necklaces(1, n as usize)).into(), "n={n}");
        }
    }

    #[test]
    fn lyndon_count_matches_aperiodic_enumeration() {
        let letters = Alphabet::Doubled(1).letters();
        for l in 1..=10usize {
            for j in 0..=l {
                let aperiodic = enumerate_necklaces(1, l)
                    .into_iter()
                    .filter(|n| n.word().deg_x() == j)
                    .filter(|n| (1..l).all(|r| n.word().rotate(r) != *n.word()))
                    .count();
                assert_eq!(
                    lyndon_count(l as u64, j as u64),
                    aperiodic.into(),
                    "l={l} j={j}"
                );
            }
        }
        assert_eq!(letters.len(), 2);
    }
}
