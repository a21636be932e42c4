use necklace_core::double_bracket::{
    check_representative_independence, double_bracket, loday_bracket, necklace_bracket, BracketRule,
};
use necklace_core::free_algebra::{
    canonical_rotation, FreeElement, Letter, Necklace, NecklaceElement, Word,
};
use necklace_core::linear_necklace::ngl;
use necklace_core::poisson_poly::PoissonPolyAlgebra;
use necklace_core::poly::Poly;
use necklace_core::rat;
use necklace_core::trace_calculus::{generic_matrices, word_matrix};
use proptest::prelude::*;

fn word(max_len: usize, letters: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0..letters, 0..=max_len)
        .prop_map(|codes| Word::new(codes.into_iter().map(Letter::from_code).collect()))
}

fn plain_word(max_len: usize, n: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(1..=n, 0..=max_len)
        .prop_map(|idx| Word::new(idx.into_iter().map(Letter::x).collect()))
}

fn nk(w: &Word) -> NecklaceElement {
    NecklaceElement::of_word(w)
}

fn fe(w: &Word) -> FreeElement {
    FreeElement::word(w.clone())
}

proptest! {
    #[test]
    fn canonical_rotation_is_a_class_invariant(w in word(9, 4), k in 0usize..9) {
        let c = canonical_rotation(&w);
        prop_assert_eq!(&canonical_rotation(&c), &c);
        if !w.is_empty() {
            prop_assert_eq!(&canonical_rotation(&w.rotate(k % w.len())), &c);
            for r in 0..w.len() {
                prop_assert!(c <= w.rotate(r));
            }
        }
    }

    #[test]
    fn twisted_antisymmetry(a in word(4, 4), b in word(4, 4)) {
        let rule = BracketRule::canonical(2);
        let ab = double_bracket(&rule, &fe(&a), &fe(&b)).unwrap();
        let ba = double_bracket(&rule, &fe(&b), &fe(&a)).unwrap();
        prop_assert_eq!(ab, -ba.flip());
    }

    #[test]
    fn outer_derivation(a in word(3, 4), b in word(3, 4), c in word(3, 4)) {
        let rule = BracketRule::canonical(2);
        let lhs = double_bracket(&rule, &fe(&a), &fe(&b.concat(&c))).unwrap();
        let rhs = &double_bracket(&rule, &fe(&a), &fe(&c)).unwrap().outer(&b, &Word::unit())
            + &double_bracket(&rule, &fe(&a), &fe(&b)).unwrap().outer(&Word::unit(), &c);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn loday_bracket_is_a_derivation_in_the_second_slot(a in word(3, 4), b in word(3, 4), c in word(3, 4)) {
        let rule = BracketRule::canonical(2);
        let lhs = loday_bracket(&rule, &fe(&a), &fe(&b.concat(&c))).unwrap();
        let rhs = &loday_bracket(&rule, &fe(&a), &fe(&b)).unwrap().mul(&fe(&c))
            + &fe(&b).mul(&loday_bracket(&rule, &fe(&a), &fe(&c)).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn necklace_bracket_is_a_lie_bracket(a in word(3, 4), b in word(3, 4), c in word(3, 4)) {
        let rule = BracketRule::canonical(2);
        let br = |x: &NecklaceElement, y: &NecklaceElement| necklace_bracket(&rule, x, y).unwrap();
        let (a, b, c) = (nk(&a), nk(&b), nk(&c));
        prop_assert_eq!(br(&a, &b), -br(&b, &a));
        let jac = &(&br(&a, &br(&b, &c)) + &br(&b, &br(&c, &a))) + &br(&c, &br(&a, &b));
        prop_assert!(jac.is_zero());
    }

    #[test]
    fn representatives_do_not_matter(a in word(5, 4), b in word(5, 4), r1 in 0usize..5, r2 in 0usize..5) {
        prop_assume!(!a.is_empty() && !b.is_empty());
        let rule = BracketRule::canonical(2);
        let report = check_representative_independence(
            &rule,
            &Necklace::new(&a),
            &Necklace::new(&b),
            &[(r1 % a.len(), r2 % b.len())],
        );
        prop_assert!(report.is_ok(), "{:?}", report.violations);
    }

    #[test]
    fn commutators_project_to_zero(a in word(5, 4), b in word(5, 4)) {
        prop_assert!(fe(&a).commutator(&fe(&b)).project().is_zero());
    }

    #[test]
    fn traces_are_cyclic(a in word(4, 2), b in word(4, 2)) {
        let g = generic_matrices(1, 2);
        let ab = word_matrix(&a.concat(&b), &g.matrices, 2).unwrap().trace();
        let ba = word_matrix(&b.concat(&a), &g.matrices, 2).unwrap().trace();
        prop_assert_eq!(ab, ba);
    }

    #[test]
    fn linear_bracket_preserves_degree_one_modules(i in 1usize..=4, w in plain_word(4, 4)) {
        prop_assume!(!w.is_empty());
        let rule = ngl(2);
        let x = nk(&Word::letter(Letter::x(i)));
        let out = necklace_bracket(&rule, &x, &nk(&w)).unwrap();
        prop_assert!(out.is_zero() || out.is_homogeneous_of(w.len()));
    }

    #[test]
    fn poisson_jacobi_on_sampled_polynomials(
        f in poly_in(5), g in poly_in(5), h in poly_in(5)
    ) {
        let alg = PoissonPolyAlgebra::sl2_heisenberg();
        prop_assert!(alg.jacobiator(&f, &g, &h).is_zero());
        prop_assert!(alg.poisson(&f, &f).is_zero());
    }
}

/// Polynomials of degree at most 3 in `vars` generators with small
/// integer coefficients.
fn poly_in(vars: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec((prop::collection::vec(0..vars, 0..=3), -3i64..=3), 1..4).prop_map(
        |terms| {
            let mut p = Poly::zero();
            for (vs, c) in terms {
                let m = vs
                    .iter()
                    .fold(Poly::one(), |acc, &v| acc.mul(&Poly::var(v)));
                p += &m.scale(&rat(c));
            }
            p
        },
    )
}

#[test]
fn poisson_jacobi_hundred_triples() {
    use proptest::strategy::ValueTree;
    use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};
    let alg = PoissonPolyAlgebra::sl2_heisenberg();
    let mut runner = TestRunner::new_with_rng(
        Config::default(),
        TestRng::deterministic_rng(RngAlgorithm::ChaCha),
    );
    let strat = (poly_in(5), poly_in(5), poly_in(5));
    for _ in 0..100 {
        let (f, g, h) = strat.new_tree(&mut runner).unwrap().current();
        assert!(alg.jacobiator(&f, &g, &h).is_zero());
    }
}
