//! Ring descriptors and exact element arithmetic.
//!
//! Every supported ring is spanned over `Z` by a fixed basis of roots of
//! unity: `{1}` for `Z`, `{1, i}` for the Gaussian integers, `{1, j}` for
//! the Eisenstein integers, and `{1, ζ, …, ζ^{p-2}}` for the cyclotomic
//! ring of prime order `p`. An [`Element`] is the coefficient vector over
//! that basis; products are reduced eagerly so equality is coefficientwise.

use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

/// The concrete ring families.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug)]
pub enum RingKind {
    /// The rational integers `Z`.
    Integers,
    /// The Gaussian integers `Z[i]`, `i^2 + 1 = 0`.
    Gaussian,
    /// The Eisenstein integers `Z[j]`, `1 + j + j^2 = 0`.
    Eisenstein,
    /// The cyclotomic integers `Z[ζ_p]` for a prime `p >= 5`.
    CyclotomicPrime(u64),
}

/// A validated ring descriptor.
///
/// The only way to obtain a `CyclotomicPrime` descriptor is through
/// [`Ring::cyclotomic`] / [`make_ring`], which check primality, so a `Ring`
/// value always describes a ring this crate actually supports.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug)]
pub struct Ring {
    kind: RingKind,
}

/// Kind selector for [`make_ring`]; the cyclotomic order is passed
/// separately so that invalid orders are rejected in one place.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum RingChoice {
    Integers,
    Gaussian,
    Eisenstein,
    CyclotomicPrime,
}

/// Builds a ring descriptor, validating the cyclotomic order.
pub fn make_ring(choice: RingChoice, p: Option<u64>) -> Result<Ring> {
    match (choice, p) {
        (RingChoice::Integers, None) => Ok(Ring::INTEGERS),
        (RingChoice::Gaussian, None) => Ok(Ring::GAUSSIAN),
        (RingChoice::Eisenstein, None) => Ok(Ring::EISENSTEIN),
        (RingChoice::CyclotomicPrime, Some(p)) => Ring::cyclotomic(p),
        (RingChoice::CyclotomicPrime, None) => Err(Error::MissingParameter),
        (_, Some(_)) => Err(Error::UnexpectedParameter),
    }
}

pub(crate) fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    if n.is_multiple_of(3) {
        return n == 3;
    }
    let mut d = 5u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) || n.is_multiple_of(d + 2) {
            return false;
        }
        d += 6;
    }
    true
}

impl Ring {
    pub const INTEGERS: Ring = Ring { kind: RingKind::Integers };
    pub const GAUSSIAN: Ring = Ring { kind: RingKind::Gaussian };
    pub const EISENSTEIN: Ring = Ring { kind: RingKind::Eisenstein };

    /// The cyclotomic ring `Z[ζ_p]`. Orders 3 and 4 are served by the
    /// dedicated Eisenstein and Gaussian descriptors; here `p` must be a
    /// prime at least 5.
    pub fn cyclotomic(p: u64) -> Result<Ring> {
        if p < 5 || !is_prime_u64(p) {
            return Err(Error::NonPrimeOrder(p));
        }
        Ok(Ring { kind: RingKind::CyclotomicPrime(p) })
    }

    pub fn kind(&self) -> RingKind {
        self.kind
    }

    /// Basis length: 1, 2, 2, or `p - 1`.
    pub fn rank(&self) -> usize {
        match self.kind {
            RingKind::Integers => 1,
            RingKind::Gaussian | RingKind::Eisenstein => 2,
            RingKind::CyclotomicPrime(p) => (p - 1) as usize,
        }
    }

    /// Order `n` of the underlying group of roots of unity.
    pub fn root_order(&self) -> u32 {
        match self.kind {
            RingKind::Integers => 1,
            RingKind::Gaussian => 4,
            RingKind::Eisenstein => 3,
            RingKind::CyclotomicPrime(p) => p as u32,
        }
    }

    /// True for the rings with a Euclidean division (`Z`, `Z[i]`, `Z[j]`);
    /// gcd, factorization and the ideal algebra are restricted to these.
    pub fn is_euclidean(&self) -> bool {
        !matches!(self.kind, RingKind::CyclotomicPrime(_))
    }

    /// True when the unit group is finite and enumerable.
    pub fn has_finite_unit_group(&self) -> bool {
        self.is_euclidean()
    }

    /// Canonical lowercase name, e.g. `gaussian` or `cyclo7`.
    pub fn name(&self) -> String {
        match self.kind {
            RingKind::Integers => "z".into(),
            RingKind::Gaussian => "gaussian".into(),
            RingKind::Eisenstein => "eisenstein".into(),
            RingKind::CyclotomicPrime(p) => format!("cyclo{p}"),
        }
    }

    /// Root exponent of basis vector `k`; in every supported ring the
    /// basis vector at index `k` is the root `e_{n,k}`.
    fn basis_exponent(&self, k: usize) -> u32 {
        debug_assert!(k < self.rank());
        k as u32
    }

    /// The display symbol for the degree-one basis vector.
    fn symbol(&self) -> Option<&'static str> {
        match self.kind {
            RingKind::Integers => None,
            RingKind::Gaussian => Some("i"),
            RingKind::Eisenstein => Some("j"),
            RingKind::CyclotomicPrime(_) => None,
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// An exact ring element: a coefficient vector over the ring's basis.
///
/// Elements are kept canonical at all times, so `==` is coefficientwise
/// equality. Arithmetic that mixes rings returns [`Error::RingMismatch`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Element {
    ring: Ring,
    coeffs: Vec<BigInt>,
}

impl Element {
    /// Builds an element from canonical-basis coefficients.
    pub fn from_coeffs(ring: Ring, coeffs: Vec<BigInt>) -> Result<Element> {
        if coeffs.len() != ring.rank() {
            return Err(Error::DimensionMismatch(ring.name()));
        }
        Ok(Element { ring, coeffs })
    }

    /// Convenience constructor from machine integers.
    pub fn from_ints(ring: Ring, coeffs: &[i64]) -> Result<Element> {
        Element::from_coeffs(ring, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// The zero element.
    pub fn zero(ring: Ring) -> Element {
        Element { ring, coeffs: vec![BigInt::zero(); ring.rank()] }
    }

    /// The multiplicative identity.
    pub fn one(ring: Ring) -> Element {
        Element::constant(ring, BigInt::one())
    }

    /// The constant element `c·1`.
    pub fn constant(ring: Ring, c: BigInt) -> Element {
        let mut coeffs = vec![BigInt::zero(); ring.rank()];
        coeffs[0] = c;
        Element { ring, coeffs }
    }

    /// Basis vector `e_k` (the root `e_{n,k}` for index `k < rank`).
    pub fn basis(ring: Ring, k: usize) -> Result<Element> {
        if k >= ring.rank() {
            return Err(Error::DimensionMismatch(ring.name()));
        }
        let mut coeffs = vec![BigInt::zero(); ring.rank()];
        coeffs[k] = BigInt::one();
        Ok(Element { ring, coeffs })
    }

    /// The root `e_{n,k}` of the ring's root group, for any integer `k`,
    /// reduced into the canonical basis (e.g. `ζ^{p-1}` becomes
    /// `-(1 + ζ + … + ζ^{p-2})`).
    pub fn root(ring: Ring, k: i64) -> Element {
        let n = ring.root_order() as i64;
        let k = k.rem_euclid(n) as usize;
        let mut extended = vec![BigInt::zero(); ring.root_order() as usize];
        extended[k] = BigInt::one();
        Element::from_extended(ring, extended).expect("extended vector has root_order length")
    }

    /// Reduces a formal combination over the full root family
    /// `{e_{n,0}, …, e_{n,n-1}}` into the canonical basis. This is the
    /// canonicalization step applied after every product; it is idempotent
    /// on canonical input (pad with zeros and nothing changes).
    pub fn from_extended(ring: Ring, extended: Vec<BigInt>) -> Result<Element> {
        let n = ring.root_order() as usize;
        if extended.len() != n {
            return Err(Error::DimensionMismatch(ring.name()));
        }
        let coeffs = match ring.kind {
            // e_{1,0} = 1.
            RingKind::Integers => extended,
            // i^2 = -1, i^3 = -i.
            RingKind::Gaussian => {
                let mut it = extended.into_iter();
                let (c0, c1, c2, c3) =
                    (it.next().unwrap(), it.next().unwrap(), it.next().unwrap(), it.next().unwrap());
                vec![c0 - c2, c1 - c3]
            }
            // j^2 = -1 - j.
            RingKind::Eisenstein => {
                let mut it = extended.into_iter();
                let (c0, c1, c2) = (it.next().unwrap(), it.next().unwrap(), it.next().unwrap());
                vec![c0 - &c2, c1 - c2]
            }
            // ζ^{p-1} = -(1 + ζ + … + ζ^{p-2}).
            RingKind::CyclotomicPrime(_) => {
                let last = extended[n - 1].clone();
                extended[..n - 1].iter().map(|c| c - &last).collect()
            }
        };
        Ok(Element { ring, coeffs })
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self == &Element::one(self.ring)
    }

    /// Some(c) when the element is the constant `c·1`.
    pub fn as_constant(&self) -> Option<&BigInt> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    fn check_same_ring(&self, other: &Element) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch(self.ring.name(), other.ring.name()));
        }
        Ok(())
    }

    /// Componentwise sum.
    pub fn add(&self, other: &Element) -> Result<Element> {
        self.check_same_ring(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(Element { ring: self.ring, coeffs })
    }

    /// Componentwise difference.
    pub fn sub(&self, other: &Element) -> Result<Element> {
        self.check_same_ring(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Ok(Element { ring: self.ring, coeffs })
    }

    /// Additive inverse.
    pub fn neg(&self) -> Element {
        Element { ring: self.ring, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    /// Exact product, reduced to canonical form. Basis vectors multiply by
    /// exponent addition modulo the root order; the extended result is
    /// folded back through [`Element::from_extended`].
    pub fn mul(&self, other: &Element) -> Result<Element> {
        self.check_same_ring(other)?;
        let n = self.ring.root_order() as usize;
        let mut extended = vec![BigInt::zero(); n];
        for (ki, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let ei = self.ring.basis_exponent(ki) as usize;
            for (kj, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ej = other.ring.basis_exponent(kj) as usize;
                extended[(ei + ej) % n] += a * b;
            }
        }
        Element::from_extended(self.ring, extended)
    }

    /// Product with an integer scalar.
    pub fn scale(&self, k: &BigInt) -> Element {
        Element { ring: self.ring, coeffs: self.coeffs.iter().map(|c| c * k).collect() }
    }

    /// `self^e` by binary exponentiation; `x^0 = 1`.
    pub fn pow(&self, e: u64) -> Element {
        let mut acc = Element::one(self.ring);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).expect("same ring");
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("same ring");
            }
        }
        acc
    }

    /// Complex-float image of the element under the embedding that sends
    /// basis vector `k` to `e^{2πik/n}`. Diagnostic only.
    pub fn embedding(&self) -> Complex64 {
        let n = self.ring.root_order();
        let mut acc = Complex64::new(0.0, 0.0);
        for (k, c) in self.coeffs.iter().enumerate() {
            let c = c.to_f64().unwrap_or(f64::NAN);
            acc += unit_root(n, self.ring.basis_exponent(k)) * c;
        }
        acc
    }

    /// Real part of the float embedding.
    pub fn re_approx(&self) -> f64 {
        self.embedding().re
    }

    /// Imaginary part of the float embedding.
    pub fn im_approx(&self) -> f64 {
        self.embedding().im
    }

    /// Exact comparison key `(2·Re, Im-proxy)` used by the canonical
    /// associate rule. `2·Re` is an integer in every supported ring and the
    /// second component is a positive multiple of `Im`, so lexicographic
    /// comparison of the keys orders associates by (Re, then Im) exactly.
    pub(crate) fn associate_key(&self) -> (BigInt, BigInt) {
        match self.ring.kind {
            RingKind::Integers => (&self.coeffs[0] * 2, BigInt::zero()),
            // Re(a + bi) = a, Im = b.
            RingKind::Gaussian => (&self.coeffs[0] * 2, self.coeffs[1].clone()),
            // Re(a + bj) = a - b/2, Im = b·√3/2.
            RingKind::Eisenstein => (&self.coeffs[0] * 2 - &self.coeffs[1], self.coeffs[1].clone()),
            RingKind::CyclotomicPrime(_) => {
                unreachable!("associate normalization requires a finite unit group")
            }
        }
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.ring.name(), self)
    }
}

/// The root of unity `e^{2πik/n}` as a complex double. Quarter turns are
/// returned exactly so that Gaussian and rational elements embed without
/// float noise.
pub fn unit_root(n: u32, k: u32) -> Complex64 {
    let k = k % n;
    if (4 * k).is_multiple_of(n) {
        return match (4 * k) / n {
            0 => Complex64::new(1.0, 0.0),
            1 => Complex64::new(0.0, 1.0),
            2 => Complex64::new(-1.0, 0.0),
            _ => Complex64::new(0.0, -1.0),
        };
    }
    let theta = 2.0 * std::f64::consts::PI * (k as f64) / (n as f64);
    Complex64::new(theta.cos(), theta.sin())
}

/// Compact display: `1+2i`, `-j`, `3`, `2-zeta(5,3)`. The form is accepted
/// back by the CLI expression parser.
impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let symbol = if k == 0 {
                None
            } else {
                match self.ring.symbol() {
                    Some(s) => Some(s.to_string()),
                    None => Some(format!("zeta({},{})", self.ring.root_order(), k)),
                }
            };
            let first = out.is_empty();
            if c.is_negative() {
                out.push('-');
            } else if !first {
                out.push('+');
            }
            let mag = c.abs();
            match symbol {
                None => out.push_str(&mag.to_string()),
                Some(sym) => {
                    if !mag.is_one() {
                        out.push_str(&mag.to_string());
                    }
                    out.push_str(&sym);
                }
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gauss(a: i64, b: i64) -> Element {
        Element::from_ints(Ring::GAUSSIAN, &[a, b]).unwrap()
    }

    fn eis(a: i64, b: i64) -> Element {
        Element::from_ints(Ring::EISENSTEIN, &[a, b]).unwrap()
    }

    #[test]
    fn descriptor_shapes() {
        assert_eq!(Ring::GAUSSIAN.rank(), 2);
        assert_eq!(Ring::GAUSSIAN.root_order(), 4);
        assert_eq!(Ring::EISENSTEIN.rank(), 2);
        assert_eq!(Ring::EISENSTEIN.root_order(), 3);
        assert_eq!(Ring::INTEGERS.rank(), 1);
        let c5 = Ring::cyclotomic(5).unwrap();
        assert_eq!(c5.rank(), 4);
        assert_eq!(c5.root_order(), 5);
    }

    #[test]
    fn make_ring_validates_order() {
        assert_eq!(make_ring(RingChoice::CyclotomicPrime, Some(9)), Err(Error::NonPrimeOrder(9)));
        assert_eq!(make_ring(RingChoice::CyclotomicPrime, Some(4)), Err(Error::NonPrimeOrder(4)));
        assert_eq!(make_ring(RingChoice::CyclotomicPrime, None), Err(Error::MissingParameter));
        assert_eq!(make_ring(RingChoice::Gaussian, Some(5)), Err(Error::UnexpectedParameter));
        assert!(make_ring(RingChoice::CyclotomicPrime, Some(7)).is_ok());
        assert!(make_ring(RingChoice::Eisenstein, None).is_ok());
    }

    #[test]
    fn addition_is_componentwise() {
        let sum = gauss(1, 2).add(&gauss(3, -1)).unwrap();
        assert_eq!(sum, gauss(4, 1));
        let x = eis(7, -3);
        assert_eq!(x.add(&Element::zero(Ring::EISENSTEIN)).unwrap(), x);
        assert_eq!(eis(1, 2).add(&eis(3, 4)).unwrap(), eis(4, 6));
    }

    #[test]
    fn add_rejects_mixed_rings() {
        let err = gauss(1, 0).add(&eis(1, 0)).unwrap_err();
        assert_eq!(err.code(), "ring_mismatch");
    }

    #[test]
    fn gaussian_products_reduce() {
        let i = gauss(0, 1);
        assert_eq!(i.mul(&i).unwrap(), gauss(-1, 0));
        assert_eq!(gauss(1, 1).mul(&gauss(1, -1)).unwrap(), gauss(2, 0));
    }

    #[test]
    fn eisenstein_products_reduce() {
        let j = eis(0, 1);
        let j2 = j.mul(&j).unwrap();
        assert_eq!(j2, eis(-1, -1));
        // j·j^2 = j^3 = 1
        assert_eq!(j.mul(&j2).unwrap(), eis(1, 0));
    }

    #[test]
    fn cyclotomic_reduction() {
        let c5 = Ring::cyclotomic(5).unwrap();
        let mut extended = vec![BigInt::from(0); 5];
        extended[4] = BigInt::from(1);
        let reduced = Element::from_extended(c5, extended).unwrap();
        assert_eq!(reduced, Element::from_ints(c5, &[-1, -1, -1, -1]).unwrap());
        // ζ^4 · ζ = ζ^5 = 1
        let z = Element::basis(c5, 1).unwrap();
        assert_eq!(reduced.mul(&z).unwrap(), Element::one(c5));
    }

    #[test]
    fn canonicalization_is_idempotent() {
        let x = gauss(3, -2);
        let mut ext = vec![BigInt::zero(); 4];
        ext[0] = x.coeffs()[0].clone();
        ext[1] = x.coeffs()[1].clone();
        assert_eq!(Element::from_extended(Ring::GAUSSIAN, ext).unwrap(), x);
    }

    #[test]
    fn root_constructor_wraps() {
        assert_eq!(Element::root(Ring::GAUSSIAN, 2), gauss(-1, 0));
        assert_eq!(Element::root(Ring::GAUSSIAN, -1), gauss(0, -1));
        assert_eq!(Element::root(Ring::EISENSTEIN, 2), eis(-1, -1));
        let c5 = Ring::cyclotomic(5).unwrap();
        assert_eq!(Element::root(c5, 6), Element::basis(c5, 1).unwrap());
    }

    #[test]
    fn embedding_matches_products() {
        let x = gauss(3, 4);
        let y = gauss(-2, 7);
        let lhs = x.mul(&y).unwrap().embedding();
        let rhs = x.embedding() * y.embedding();
        assert!((lhs - rhs).norm() < 1e-9);
        let x = eis(5, -6);
        let y = eis(2, 9);
        let lhs = x.mul(&y).unwrap().embedding();
        let rhs = x.embedding() * y.embedding();
        assert!((lhs - rhs).norm() < 1e-9 * rhs.norm().max(1.0));
    }

    #[test]
    fn display_forms() {
        assert_eq!(gauss(1, 1).to_string(), "1+i");
        assert_eq!(gauss(0, -1).to_string(), "-i");
        assert_eq!(gauss(2, -3).to_string(), "2-3i");
        assert_eq!(gauss(0, 0).to_string(), "0");
        assert_eq!(eis(-1, -1).to_string(), "-1-j");
        let c5 = Ring::cyclotomic(5).unwrap();
        assert_eq!(
            Element::from_ints(c5, &[2, 0, -1, 3]).unwrap().to_string(),
            "2-zeta(5,2)+3zeta(5,3)"
        );
        assert_eq!(Element::from_ints(Ring::INTEGERS, &[-7]).unwrap().to_string(), "-7");
    }
}
