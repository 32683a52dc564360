//! Heavier randomized cross-checks that pit independent computation
//! routes against each other.

use entire::arith::{
    canonical_associate, divides, elements_of_norm_sq, euclid_div, factor, gcd_bezout,
    is_irreducible,
};
use entire::ideals::{residues, PrincipalIdeal, Residue};
use entire::star::unit_group;
use entire::{Element, Ring};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn sample(ring: Ring, rng: &mut ChaCha8Rng, bound: i64) -> Element {
    let coeffs: Vec<i64> = (0..ring.rank()).map(|_| rng.gen_range(-bound..=bound)).collect();
    Element::from_ints(ring, &coeffs).unwrap()
}

/// gcd must agree (up to the canonical choice) with the best brute-force
/// common divisor, for every small pair.
#[test]
fn gcd_agrees_with_brute_force_maximum() {
    for ring in [Ring::GAUSSIAN, Ring::EISENSTEIN] {
        let mut rng = ChaCha8Rng::seed_from_u64(101);
        for _ in 0..400 {
            let a = sample(ring, &mut rng, 5);
            let b = sample(ring, &mut rng, 5);
            if a.is_zero() && b.is_zero() {
                continue;
            }
            let g = gcd_bezout(&a, &b).unwrap().g;
            // brute force: largest-norm common divisor
            let na = a.norm_sq().unwrap().into_value();
            let nb = b.norm_sq().unwrap().into_value();
            let bound = if a.is_zero() { nb.clone() } else { na.clone() };
            let mut best: Option<Element> = None;
            let mut m = BigInt::from(1);
            while m <= bound {
                for d in elements_of_norm_sq(ring, &m).unwrap() {
                    if divides(&d, &a).unwrap().is_some() && divides(&d, &b).unwrap().is_some() {
                        let better = match &best {
                            None => true,
                            Some(cur) => {
                                d.norm_sq().unwrap().value() > cur.norm_sq().unwrap().value()
                            }
                        };
                        if better {
                            best = Some(d.clone());
                        }
                    }
                }
                m += 1;
            }
            let best = best.expect("1 always divides");
            assert_eq!(
                g.norm_sq().unwrap().value(),
                best.norm_sq().unwrap().value(),
                "{ring}: a={a}, b={b}"
            );
            assert!(divides(&best, &g).unwrap().is_some());
            assert!(divides(&g, &best).unwrap().is_some());
        }
    }
}

/// Factorization counts must be consistent with the norm: the product of
/// factor norms (with multiplicity) equals the element's norm.
#[test]
fn factor_norms_multiply_out() {
    for ring in [Ring::INTEGERS, Ring::GAUSSIAN, Ring::EISENSTEIN] {
        let mut rng = ChaCha8Rng::seed_from_u64(202);
        for _ in 0..300 {
            let x = loop {
                let e = sample(ring, &mut rng, 60);
                if !e.is_zero() {
                    break e;
                }
            };
            let f = factor(&x).unwrap();
            let mut norm_product = BigInt::from(1);
            for (p, e) in &f.factors {
                for _ in 0..*e {
                    norm_product *= p.norm_sq().unwrap().into_value();
                }
            }
            assert_eq!(norm_product, x.norm_sq().unwrap().into_value(), "{ring}: {x}");
        }
    }
}

/// Residue arithmetic is a homomorphism: reducing then operating equals
/// operating then reducing.
#[test]
fn residue_arithmetic_is_a_homomorphism() {
    for ring in [Ring::INTEGERS, Ring::GAUSSIAN, Ring::EISENSTEIN] {
        let mut rng = ChaCha8Rng::seed_from_u64(303);
        for _ in 0..500 {
            let z = loop {
                let e = sample(ring, &mut rng, 6);
                if !e.is_zero() && !e.is_unit() {
                    break e;
                }
            };
            let modulus = PrincipalIdeal::new(&z).unwrap();
            let x = sample(ring, &mut rng, 40);
            let y = sample(ring, &mut rng, 40);
            let rx = Residue::new(&x, &modulus).unwrap();
            let ry = Residue::new(&y, &modulus).unwrap();
            assert_eq!(
                rx.add(&ry).unwrap(),
                Residue::new(&x.add(&y).unwrap(), &modulus).unwrap()
            );
            assert_eq!(
                rx.mul(&ry).unwrap(),
                Residue::new(&x.mul(&y).unwrap(), &modulus).unwrap()
            );
            // the representative really is in the class
            let diff = x.sub(rx.representative()).unwrap();
            assert!(divides(&z, &diff).unwrap().is_some());
        }
    }
}

/// Full residue systems are closed under the ring operations and every
/// class appears exactly once.
#[test]
fn residue_systems_are_complete() {
    for ring in [Ring::GAUSSIAN, Ring::EISENSTEIN] {
        let mut rng = ChaCha8Rng::seed_from_u64(404);
        for _ in 0..40 {
            let z = loop {
                let e = sample(ring, &mut rng, 5);
                let n = e.norm_sq().unwrap().into_value();
                if n > BigInt::from(1) && n <= BigInt::from(40) {
                    break e;
                }
            };
            let classes = residues(&z, 10_000).unwrap();
            let n = z.norm_sq().unwrap().into_value().to_usize().unwrap();
            assert_eq!(classes.len(), n, "count for {z}");
            // no duplicates (representatives are canonical)
            for (i, a) in classes.iter().enumerate() {
                for b in classes.iter().skip(i + 1) {
                    assert_ne!(a, b, "duplicate class mod {z}");
                    let diff = a.representative().sub(b.representative()).unwrap();
                    assert!(
                        divides(&z, &diff).unwrap().is_none(),
                        "distinct classes congruent mod {z}"
                    );
                }
            }
            // closure: products of representatives reduce into the list
            let modulus = PrincipalIdeal::new(&z).unwrap();
            for a in classes.iter().take(8) {
                for b in classes.iter().take(8) {
                    let prod = Residue::new(
                        &a.representative().mul(b.representative()).unwrap(),
                        &modulus,
                    )
                    .unwrap();
                    assert!(classes.contains(&prod), "product escaped the system mod {z}");
                }
            }
        }
    }
}

/// Division stays exact on large coefficients (several hundred bits).
#[test]
fn big_coefficient_arithmetic_is_exact() {
    let ring = Ring::GAUSSIAN;
    let mut rng = ChaCha8Rng::seed_from_u64(505);
    for _ in 0..50 {
        let big = |rng: &mut ChaCha8Rng| -> BigInt {
            let mut acc = BigInt::from(0);
            for _ in 0..10 {
                acc = acc * BigInt::from(1u64 << 60) + BigInt::from(rng.gen::<u64>());
            }
            if rng.gen_bool(0.5) {
                -acc
            } else {
                acc
            }
        };
        let a = Element::from_coeffs(ring, vec![big(&mut rng), big(&mut rng)]).unwrap();
        let b = Element::from_coeffs(ring, vec![big(&mut rng), big(&mut rng)]).unwrap();
        let product = a.mul(&b).unwrap();
        assert_eq!(divides(&a, &product).unwrap().unwrap(), b);
        let (q, r) = euclid_div(&product, &b).unwrap();
        assert_eq!(q, a);
        assert!(r.is_zero());
        assert_eq!(
            product.norm_sq().unwrap().into_value(),
            a.norm_sq().unwrap().into_value() * b.norm_sq().unwrap().into_value()
        );
    }
}

/// The canonical associate is a class function: all associates of an
/// element canonicalize identically.
#[test]
fn canonical_associates_are_class_functions() {
    for ring in [Ring::INTEGERS, Ring::GAUSSIAN, Ring::EISENSTEIN] {
        let mut rng = ChaCha8Rng::seed_from_u64(606);
        let units = unit_group(ring).unwrap();
        for _ in 0..500 {
            let x = loop {
                let e = sample(ring, &mut rng, 500);
                if !e.is_zero() {
                    break e;
                }
            };
            let (canon, _) = canonical_associate(&x).unwrap();
            for v in &units {
                let (c2, _) = canonical_associate(&x.mul(v).unwrap()).unwrap();
                assert_eq!(c2, canon, "{ring}: {x} times {v}");
            }
        }
    }
}

/// Irreducibility matches a from-scratch divisor scan on small elements.
#[test]
fn irreducibility_matches_divisor_scan() {
    for ring in [Ring::GAUSSIAN, Ring::EISENSTEIN] {
        for a in -5i64..=5 {
            for b in -5i64..=5 {
                let x = Element::from_ints(ring, &[a, b]).unwrap();
                if x.is_zero() || x.is_unit() {
                    assert!(!is_irreducible(&x).unwrap());
                    continue;
                }
                // scan every element in a box big enough to cover any
                // divisor of x
                let n = x.norm_sq().unwrap().into_value().to_i64().unwrap();
                let radius = (n as f64).sqrt() as i64 + 1;
                let mut has_proper_divisor = false;
                'scan: for da in -radius..=radius {
                    for db in -radius..=radius {
                        let d = Element::from_ints(ring, &[da, db]).unwrap();
                        if d.is_zero() || d.is_unit() {
                            continue;
                        }
                        if let Some(q) = divides(&d, &x).unwrap() {
                            if !q.is_unit() {
                                has_proper_divisor = true;
                                break 'scan;
                            }
                        }
                    }
                }
                assert_eq!(
                    is_irreducible(&x).unwrap(),
                    !has_proper_divisor,
                    "{ring}: {x}"
                );
            }
        }
    }
}
