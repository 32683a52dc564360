//! Property tests over the element algebra, driven by proptest.

use entire::arith::{canonical_associate, divides, euclid_div, factor, gcd_bezout};
use entire::{Element, Ring};
use num_bigint::BigInt;
use proptest::prelude::*;

fn ring_strategy() -> impl Strategy<Value = Ring> {
    prop_oneof![
        Just(Ring::INTEGERS),
        Just(Ring::GAUSSIAN),
        Just(Ring::EISENSTEIN),
        Just(Ring::cyclotomic(5).unwrap()),
        Just(Ring::cyclotomic(7).unwrap()),
    ]
}

fn euclidean_ring_strategy() -> impl Strategy<Value = Ring> {
    prop_oneof![Just(Ring::INTEGERS), Just(Ring::GAUSSIAN), Just(Ring::EISENSTEIN)]
}

fn element_in(ring: Ring, bound: i64) -> impl Strategy<Value = Element> {
    prop::collection::vec(-bound..=bound, ring.rank())
        .prop_map(move |coeffs| Element::from_ints(ring, &coeffs).unwrap())
}

fn pair(bound: i64) -> impl Strategy<Value = (Element, Element)> {
    ring_strategy().prop_flat_map(move |ring| (element_in(ring, bound), element_in(ring, bound)))
}

proptest! {
    #[test]
    fn conjugation_is_a_ring_automorphism((x, y) in pair(1000)) {
        prop_assert_eq!(x.conj().conj(), x.clone());
        prop_assert_eq!(x.add(&y).unwrap().conj(), x.conj().add(&y.conj()).unwrap());
        prop_assert_eq!(x.mul(&y).unwrap().conj(), x.conj().mul(&y.conj()).unwrap());
    }

    #[test]
    fn products_embed_consistently((x, y) in pair(1000)) {
        let exact = x.mul(&y).unwrap().embedding();
        let float = x.embedding() * y.embedding();
        prop_assert!((exact - float).norm() <= 1e-9 * float.norm().max(1.0));
    }

    #[test]
    fn norm_square_is_multiplicative(
        (x, y) in euclidean_ring_strategy()
            .prop_flat_map(|r| (element_in(r, 1000), element_in(r, 1000)))
    ) {
        let nx = x.norm_sq().unwrap().into_value();
        let ny = y.norm_sq().unwrap().into_value();
        let nxy = x.mul(&y).unwrap().norm_sq().unwrap().into_value();
        prop_assert_eq!(nxy, nx * ny);
    }

    #[test]
    fn division_roundtrips(
        (a, b) in euclidean_ring_strategy()
            .prop_flat_map(|r| (element_in(r, 500), element_in(r, 500)))
    ) {
        prop_assume!(!b.is_zero());
        let (q, r) = euclid_div(&a, &b).unwrap();
        prop_assert_eq!(b.mul(&q).unwrap().add(&r).unwrap(), a);
        prop_assert!(r.norm_sq().unwrap().value() < b.norm_sq().unwrap().value());
    }

    #[test]
    fn gcd_certificates_hold(
        (a, b) in euclidean_ring_strategy()
            .prop_flat_map(|r| (element_in(r, 500), element_in(r, 500)))
    ) {
        prop_assume!(!a.is_zero() || !b.is_zero());
        let cert = gcd_bezout(&a, &b).unwrap();
        let combo = a.mul(&cert.x).unwrap().add(&b.mul(&cert.y).unwrap()).unwrap();
        prop_assert_eq!(combo, cert.g.clone());
        prop_assert!(divides(&cert.g, &a).unwrap().is_some());
        prop_assert!(divides(&cert.g, &b).unwrap().is_some());
    }

    #[test]
    fn witnessed_divisibility_is_exact((x, y) in pair(60)) {
        prop_assume!(!x.is_zero());
        let product = x.mul(&y).unwrap();
        let witness = divides(&x, &product).unwrap().unwrap();
        prop_assert_eq!(x.mul(&witness).unwrap(), product);
        // and the witness is unique, so it equals y
        prop_assert_eq!(witness, y);
    }

    #[test]
    fn factorizations_reproduce_the_element(
        x in euclidean_ring_strategy().prop_flat_map(|r| element_in(r, 40))
    ) {
        prop_assume!(!x.is_zero());
        let f = factor(&x).unwrap();
        prop_assert_eq!(f.product(), x);
    }

    #[test]
    fn canonical_associates_are_idempotent(
        x in euclidean_ring_strategy().prop_flat_map(|r| element_in(r, 300))
    ) {
        prop_assume!(!x.is_zero());
        let (c, v) = canonical_associate(&x).unwrap();
        prop_assert_eq!(x.mul(&v).unwrap(), c.clone());
        let (c2, v2) = canonical_associate(&c).unwrap();
        prop_assert_eq!(c2, c);
        prop_assert!(v2.is_one());
    }

    #[test]
    fn scaling_squares_the_norm(
        (x, k) in euclidean_ring_strategy()
            .prop_flat_map(|r| (element_in(r, 1000), -100i64..=100))
    ) {
        let kb = BigInt::from(k);
        prop_assert_eq!(
            x.scale(&kb).norm_sq().unwrap().into_value(),
            &kb * &kb * x.norm_sq().unwrap().into_value()
        );
    }
}
