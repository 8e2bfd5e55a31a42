use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use neutralgraph::assort::mean_form_r;
use neutralgraph::constructions::{leaf_connect, ominus, subdivide, triangle_op};
use neutralgraph::corpus::random_connected;
use neutralgraph::enumeration::sweep_connected;
use neutralgraph::{classify, graph6_decode, graph6_encode, stats, Graph, Tag};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// r straight from the edge-end moments, in arbitrary precision.
fn moment_r(g: &Graph) -> Option<BigRational> {
    let m = BigRational::from_integer(BigInt::from(g.edge_count()));
    let (mut prod, mut half_sum, mut half_sq) = (BigInt::from(0), BigInt::from(0), BigInt::from(0));
    for &(u, v) in g.edges() {
        let (j, k) = (BigInt::from(g.degree(u)), BigInt::from(g.degree(v)));
        prod += &j * &k;
        half_sum += &j + &k;
        half_sq += &j * &j + &k * &k;
    }
    let two = BigRational::from_integer(BigInt::from(2));
    let e_jk = BigRational::from_integer(prod) / &m;
    let mean = BigRational::from_integer(half_sum) / &m / &two;
    let e_sq = BigRational::from_integer(half_sq) / &m / &two;
    let den = e_sq - &mean * &mean;
    if den == BigRational::from_integer(BigInt::from(0)) {
        None
    } else {
        Some((e_jk - &mean * &mean) / den)
    }
}

fn as_big(r: num_rational::Ratio<i128>) -> BigRational {
    BigRational::new(BigInt::from(*r.numer()), BigInt::from(*r.denom()))
}

fn arb_connected() -> impl Strategy<Value = Graph> {
    (any::<u64>(), 2usize..=14)
        .prop_map(|(seed, max)| random_connected(&mut ChaCha8Rng::seed_from_u64(seed), 2, max))
}

#[test]
fn r_matches_moment_oracle_on_small_graphs() {
    for n in 2..=6 {
        let bad = sweep_connected(n, |g| {
            let got = classify(g).unwrap().r.map(as_big);
            (got != moment_r(g)).then(|| graph6_encode(g))
        })
        .unwrap();
        assert!(bad.is_empty(), "order {n}: {bad:?}");
    }
}

#[test]
fn the_smallest_neutral_graph_has_r_zero() {
    let g = graph6_decode("E~@g").unwrap();
    assert_eq!(classify(&g).unwrap().tag, Tag::Neutral);
    assert_eq!(
        moment_r(&g),
        Some(BigRational::from_integer(BigInt::from(0)))
    );
}

proptest! {
    #[test]
    fn numerator_splits_into_coupling_and_excess(g in arb_connected()) {
        let s = stats(&g).unwrap();
        prop_assert_eq!(s.numerator, 4 * s.m * s.coupling() - s.excess() * s.excess());
    }

    #[test]
    fn exact_r_matches_both_oracles(g in arb_connected()) {
        let r = classify(&g).unwrap().r;
        prop_assert_eq!(r, mean_form_r(&g).unwrap());
        prop_assert_eq!(r.map(as_big), moment_r(&g));
    }

    #[test]
    fn subdivision_numerator(g in arb_connected(), s in 1usize..=4) {
        let base = stats(&g).unwrap();
        prop_assert_eq!(stats(&subdivide(&g, s)).unwrap().numerator, -(base.excess() * base.excess()));
    }

    #[test]
    fn leaf_connect_scales_by_sixteen(g in arb_connected()) {
        let h = leaf_connect(&g);
        prop_assert_eq!(h.order(), g.order() + 2 * g.edge_count());
        prop_assert_eq!(stats(&h).unwrap().numerator, 16 * stats(&g).unwrap().numerator);
    }

    #[test]
    fn triangle_numerator(g in arb_connected()) {
        let s = stats(&g).unwrap();
        let shift = s.s - 2 * s.m;
        prop_assert_eq!(stats(&triangle_op(&g)).unwrap().numerator, 12 * s.numerator - 4 * shift * shift);
    }

    #[test]
    fn doubling_scales_by_sixty_four(g in arb_connected()) {
        let (a, b) = (stats(&g).unwrap(), stats(&ominus(&g)).unwrap());
        prop_assert_eq!(b.numerator, 64 * a.numerator);
        prop_assert_eq!(b.denominator, 64 * a.denominator);
        prop_assert_eq!(classify(&g).unwrap(), classify(&ominus(&g)).unwrap());
    }

    #[test]
    fn denominator_vanishes_exactly_on_regular_graphs(g in arb_connected()) {
        let d = stats(&g).unwrap().denominator;
        prop_assert!(d >= 0);
        prop_assert_eq!(d == 0, g.is_regular().is_some());
    }
}
