//! Conjugation and the magnitude algebra.
//!
//! The involution sends the root `e_{n,k}` to `e_{n,n-k}`, which on our
//! embeddings is complex conjugation. The magnitude is exposed exactly
//! through its square `x·x★` (a nonnegative rational integer in the
//! Euclidean rings) and as a float through [`Element::magnitude_approx`].

use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::ring::{Element, Ring, RingKind};
use crate::{Error, Result};

/// The exact value of `x·x★`: a nonnegative arbitrary-precision integer.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct NormSquare(BigInt);

impl NormSquare {
    pub fn value(&self) -> &BigInt {
        &self.0
    }

    pub fn into_value(self) -> BigInt {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    /// `sqrt` of the exact value, as a double. Diagnostic only.
    pub fn sqrt_approx(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::INFINITY).sqrt()
    }
}

impl fmt::Display for NormSquare {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// The unit part `u(x) = x / N(x)`, held exactly as the pair
/// `(x, N(x)^2)` since `N(x)` itself is usually irrational.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UnitPart {
    numerator: Element,
    norm_square: NormSquare,
}

impl UnitPart {
    pub fn numerator(&self) -> &Element {
        &self.numerator
    }

    pub fn norm_square(&self) -> &NormSquare {
        &self.norm_square
    }

    /// Float image `x / sqrt(N(x)^2)`; lies on the unit circle.
    pub fn embedding(&self) -> Complex64 {
        self.numerator.embedding() / self.norm_square.sqrt_approx()
    }
}

impl Element {
    /// Conjugation: coefficient reversal `e_k -> e_{n-k}` followed by
    /// reduction. An involution and a ring automorphism; fixes exactly the
    /// elements with zero imaginary embedding.
    pub fn conj(&self) -> Element {
        let n = self.ring().root_order() as usize;
        let mut extended = vec![BigInt::zero(); n];
        for (k, c) in self.coeffs().iter().enumerate() {
            extended[(n - k) % n] += c;
        }
        Element::from_extended(self.ring(), extended).expect("extended vector has root_order length")
    }

    /// The exact value of `x·x★`.
    ///
    /// In `Z`, `Z[i]` and `Z[j]` the product always reduces to a
    /// nonnegative constant. In `Z[ζ_p]` with `p ≥ 5` the product lies in
    /// the real cyclotomic subring and need not be a rational integer; the
    /// non-constant case is reported as [`Error::InternalNonReal`] and the
    /// symbolic real-subring value is out of scope.
    pub fn norm_sq(&self) -> Result<NormSquare> {
        let product = self.mul(&self.conj()).expect("same ring");
        if product.coeffs()[1..].iter().any(|c| !c.is_zero()) {
            return Err(Error::InternalNonReal);
        }
        let value = product.coeffs()[0].clone();
        debug_assert!(!value.is_negative(), "x·conj(x) must be nonnegative");
        Ok(NormSquare(value))
    }

    /// The magnitude `N(x) = sqrt(x·x★)` as a double. Falls back to the
    /// modulus of the float embedding when the exact square is not a
    /// rational integer (prime cyclotomic rings). Diagnostic only: no exact
    /// decision in this crate consumes it.
    pub fn magnitude_approx(&self) -> f64 {
        match self.norm_sq() {
            Ok(ns) => ns.sqrt_approx(),
            Err(_) => self.embedding().norm(),
        }
    }

    /// The unit part `u(x)` of a nonzero element, as the exact pair
    /// `(x, N(x)^2)`.
    pub fn unit_part(&self) -> Result<UnitPart> {
        if self.is_zero() {
            return Err(Error::ZeroElement);
        }
        Ok(UnitPart { numerator: self.clone(), norm_square: self.norm_sq()? })
    }

    /// `x + x★`, the doubled real part; fixed by conjugation.
    pub fn re2(&self) -> Element {
        self.add(&self.conj()).expect("same ring")
    }

    /// `x - x★`, the doubled imaginary part times `i`; negated by
    /// conjugation.
    pub fn im2i(&self) -> Element {
        self.sub(&self.conj()).expect("same ring")
    }

    /// The inverse when the element is a unit of norm square one, namely
    /// its conjugate (`x·x★ = 1`). `None` otherwise.
    ///
    /// In the rings with finite unit group this detects exactly the units.
    /// In `Z[ζ_p]` it detects the roots of unity `±ζ^k`; units of infinite
    /// order (which exist there) have norm square ≠ 1 and are not
    /// recognized, matching the crate's scope.
    pub fn unit_inverse(&self) -> Option<Element> {
        match self.norm_sq() {
            Ok(ns) if ns.is_one() => Some(self.conj()),
            _ => None,
        }
    }

    /// True when [`Element::unit_inverse`] yields an inverse.
    pub fn is_unit(&self) -> bool {
        self.unit_inverse().is_some()
    }
}

/// The complete unit group, in a fixed documented order:
/// `[1, -1]` for `Z`; `[1, -1, i, -i]` for `Z[i]`;
/// `[1, -1, j, -j, j★, -j★]` for `Z[j]` (with `j★ = -1-j`).
/// Prime cyclotomic rings have infinitely many units and are rejected.
pub fn unit_group(ring: Ring) -> Result<Vec<Element>> {
    let ints = |pairs: &[[i64; 2]]| -> Vec<Element> {
        pairs.iter().map(|p| Element::from_ints(ring, p).unwrap()).collect()
    };
    match ring.kind() {
        RingKind::Integers => Ok(vec![
            Element::from_ints(ring, &[1]).unwrap(),
            Element::from_ints(ring, &[-1]).unwrap(),
        ]),
        RingKind::Gaussian => Ok(ints(&[[1, 0], [-1, 0], [0, 1], [0, -1]])),
        RingKind::Eisenstein => {
            Ok(ints(&[[1, 0], [-1, 0], [0, 1], [0, -1], [-1, -1], [1, 1]]))
        }
        RingKind::CyclotomicPrime(_) => Err(Error::InfiniteUnitGroup(ring.name())),
    }
}
