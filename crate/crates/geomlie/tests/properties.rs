//! Structural properties of the derivation families and the relation finder.

use geomlie::{
    ad_derivation_pow, apply_mu_word, epsilon, epsilon_dual, mu, pollack_relations,
    sl2_weight_basis, theta_is_annihilated, EisGenerator,
};
use ncseries::{Alphabet, NCSeries};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use scalars::{big_factorial, Rational, Scalar};

#[test]
fn dual_family_annihilates_theta_through_weight_twelve() {
    assert!(theta_is_annihilated(5).unwrap());
}

#[test]
fn weight_strings_have_the_stated_length_and_then_vanish() {
    for n in 1..=3u64 {
        let basis = sl2_weight_basis(n).unwrap();
        assert_eq!(basis.len(), 2 * n as usize + 1);
        for (k, d) in basis.iter().enumerate() {
            assert!(!d.is_zero(), "n = {n}, k = {k} must be nonzero");
        }
        let lowering = epsilon_dual(-1).unwrap();
        let next = lowering.bracket(basis.last().unwrap()).unwrap();
        assert!(next.is_zero(), "application {} must vanish", 2 * n + 1);
    }
}

#[test]
fn lowering_chains_connect_the_two_families() {
    // ad(d)^k of the dual generator equals (-1)^k k!/(2n-k)! times
    // ad(e)^{2n-k} of the conjugate generator, where d and e are the two
    // shift-zero derivations. The sign alternates because (d, -e) is the
    // standard sl2 pair; at k = 2n this is ad(d)^{2n}(dual) = (2n)! conj.
    let dual_lowering = epsilon_dual(-1).unwrap();
    let lowering = epsilon(-1).unwrap();
    for n in 1..=4u64 {
        let dual = epsilon_dual(n as i64).unwrap();
        let conj = epsilon(n as i64).unwrap();
        for k in 0..=(2 * n) {
            let lhs = ad_derivation_pow(&dual_lowering, k as usize, &dual).unwrap();
            let rhs = ad_derivation_pow(&lowering, (2 * n - k) as usize, &conj).unwrap();
            let sign: i64 = if k % 2 == 0 { 1 } else { -1 };
            let factor = Rational::from_integer(big_factorial(k) * sign)
                / Rational::from_integer(big_factorial(2 * n - k));
            assert_eq!(lhs, rhs.scale_rat(&factor), "n = {n}, k = {k}");
        }
    }
}

#[test]
fn generator_map_is_equivariant_for_the_lowering_chain() {
    let dual_lowering = epsilon_dual(-1).unwrap();
    for n in 1..=3u64 {
        let base = mu(&EisGenerator::eis(n, 0).unwrap()).unwrap();
        for k in 0..=(2 * n) {
            let direct = mu(&EisGenerator::eis(n, k).unwrap()).unwrap();
            let chained = ad_derivation_pow(&dual_lowering, k as usize, &base).unwrap();
            let factor = Rational::from_integer(big_factorial(2 * n - k))
                / Rational::from_integer(big_factorial(2 * n));
            assert_eq!(direct, chained.scale_rat(&factor), "n = {n}, k = {k}");
        }
    }
}

#[test]
fn generator_compositions_raise_the_b_count_by_the_word_length() {
    let degree = 12;
    let e2 = EisGenerator::E2;
    let e4y = EisGenerator::eis(1, 0).unwrap();
    let e4xy = EisGenerator::eis(1, 1).unwrap();
    let e4x = EisGenerator::eis(1, 2).unwrap();
    let e6y = EisGenerator::eis(2, 0).unwrap();
    let words: Vec<Vec<EisGenerator>> = vec![
        vec![e4y],
        vec![e4x],
        vec![e6y],
        vec![e2, e4y],
        vec![e4xy, e4y],
        vec![e4y, e4x],
        vec![e2, e2, e4y],
        vec![e2, e4xy, e2],
        vec![e4y, e2, e2],
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(55);
    let mut nonzero_images = 0usize;
    for gens in &words {
        let shift: u64 = gens.iter().map(|g| g.weight()).sum();
        let s = gens.len();
        for _ in 0..20 {
            let len = rng.gen_range(1..=(degree - shift as usize));
            let word: Vec<u8> = (0..len).map(|_| rng.gen_range(0..2u8)).collect();
            let b_count = word.iter().filter(|&&l| l == 1).count();
            let source = NCSeries::monomial(Alphabet::AB, &word, Scalar::one(), degree);
            let image = apply_mu_word(gens, &source, None).unwrap();
            if !image.is_zero() {
                nonzero_images += 1;
            }
            for (w, _) in image.coeffs() {
                let image_b_count = w.iter().filter(|&&l| l == 1).count();
                assert!(
                    image_b_count >= b_count + s,
                    "composition of {s} generators must raise the b-count by at least {s}"
                );
            }
        }
    }
    assert!(nonzero_images > 100, "the property must not hold vacuously");
}

#[test]
fn relation_finder_reproduces_the_depth_two_relations() {
    let rels = pollack_relations(&[(10, 4), (8, 6)], 16).unwrap();
    assert_eq!(rels.len(), 1);
    assert_eq!(rels[0], vec![rat(1), rat(-3)]);

    let rels = pollack_relations(&[(14, 4), (12, 6), (10, 8)], 16).unwrap();
    assert_eq!(rels.len(), 1);
    assert_eq!(rels[0], vec![rat(2), rat(-7), rat(11)]);
}

fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}
