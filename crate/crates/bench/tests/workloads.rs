use necklace_bench::{bracket_pairs, necklaces, words};

#[test]
fn workload_sizes() {
    assert_eq!(necklaces(6).len(), 14);
    assert_eq!(words(4).len(), 16);
    let pairs = bracket_pairs(4);
    let expected: usize = (1..4)
        .map(|i| necklaces(i).len() * necklaces(4 - i).len())
        .sum();
    assert_eq!(pairs.len(), expected);
    assert!(pairs.iter().all(|(a, b)| a.degree() + b.degree() == 4));
}
