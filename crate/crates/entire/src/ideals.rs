//! Principal ideals, residue arithmetic, and quotient classification.
//!
//! Ideals are identified with their canonical generator, so ideal equality
//! is element equality. Sums realize the gcd, intersections the lcm, and
//! quotients are classified through irreducibility of the generator.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use crate::arith::{
    canonical_associate, divides, gcd_bezout, is_irreducible, lcm, quotient_candidates,
};
use crate::ring::{Element, Ring, RingKind};
use crate::{Error, Result};

/// A principal ideal, held by its associate-normalized generator
/// (`0` for the zero ideal).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PrincipalIdeal {
    generator: Element,
}

/// Classification of the quotient by a principal ideal.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum QuotientKind {
    /// No zero divisors (`z = 0` or `z` irreducible; the latter is a field).
    Entire,
    /// Every nonzero residue is invertible.
    Field,
    /// A nonzero zero-divisor pair exists.
    NotEntire,
    /// `z` is a unit; everything collapses to the zero class.
    WholeRingCollapse,
}

impl QuotientKind {
    /// Stable lowercase code used by the CLI.
    pub fn code(&self) -> &'static str {
        match self {
            QuotientKind::Entire => "entire",
            QuotientKind::Field => "field",
            QuotientKind::NotEntire => "not_entire",
            QuotientKind::WholeRingCollapse => "whole_ring_collapse",
        }
    }
}

impl PrincipalIdeal {
    /// The ideal generated by `g`, normalized to the canonical associate.
    /// Requires a finite unit group for the normalization.
    pub fn new(g: &Element) -> Result<PrincipalIdeal> {
        if g.is_zero() {
            return Ok(PrincipalIdeal { generator: g.clone() });
        }
        Ok(PrincipalIdeal { generator: canonical_associate(g)?.0 })
    }

    pub fn generator(&self) -> &Element {
        &self.generator
    }

    pub fn ring(&self) -> Ring {
        self.generator.ring()
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.generator.is_zero()
    }

    /// Whole-ring test: the generator is a unit (normalized to 1).
    pub fn is_whole_ring(&self) -> bool {
        self.generator.is_one()
    }

    /// Membership: the generator divides `x`; the zero ideal contains
    /// only zero.
    pub fn contains(&self, x: &Element) -> Result<bool> {
        if self.ring() != x.ring() {
            return Err(Error::RingMismatch(self.ring().name(), x.ring().name()));
        }
        Ok(divides(&self.generator, x)?.is_some())
    }

    /// `aA + bA = gcd(a, b)A`.
    pub fn sum(&self, other: &PrincipalIdeal) -> Result<PrincipalIdeal> {
        let cert = gcd_bezout(&self.generator, &other.generator)?;
        PrincipalIdeal::new(&cert.g)
    }

    /// `aA ∩ bA = lcm(a, b)A`.
    pub fn intersect(&self, other: &PrincipalIdeal) -> Result<PrincipalIdeal> {
        if self.is_zero_ideal() || other.is_zero_ideal() {
            return Err(Error::ZeroElement);
        }
        PrincipalIdeal::new(&lcm(&self.generator, &other.generator)?)
    }

    /// `(aA)(bA) = abA`.
    pub fn product(&self, other: &PrincipalIdeal) -> Result<PrincipalIdeal> {
        if self.ring() != other.ring() {
            return Err(Error::RingMismatch(self.ring().name(), other.ring().name()));
        }
        let g = self.generator.mul(&other.generator)?;
        if g.is_zero() {
            return Ok(PrincipalIdeal { generator: g });
        }
        PrincipalIdeal::new(&g)
    }
}

impl fmt::Display for PrincipalIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.generator)
    }
}

/// Classifies `A/zA`: entire for `z = 0`, a field for irreducible `z`,
/// collapsed for units, not entire otherwise.
pub fn quotient_kind(z: &Element) -> Result<QuotientKind> {
    if !z.ring().is_euclidean() {
        return Err(Error::UnsupportedRing(z.ring().name()));
    }
    if z.is_zero() {
        return Ok(QuotientKind::Entire);
    }
    if z.is_unit() {
        return Ok(QuotientKind::WholeRingCollapse);
    }
    if is_irreducible(z)? {
        return Ok(QuotientKind::Field);
    }
    Ok(QuotientKind::NotEntire)
}

/// A residue class modulo a nonzero principal ideal.
///
/// The stored representative is a canonical Euclidean remainder: the
/// rounding quotient is ambiguous exactly when a coordinate of `x/z` is an
/// exact half, so all (at most four) attainable remainders are enumerated
/// and the lexicographically least coefficient vector is kept. That choice
/// depends only on the class, so residue equality is plain equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Residue {
    representative: Element,
    modulus: PrincipalIdeal,
}

fn canonical_remainder(x: &Element, z: &Element) -> Result<Element> {
    let num = x.mul(&z.conj())?;
    let den = z.norm_sq()?.into_value();
    let mut quotients: Vec<Vec<BigInt>> = vec![Vec::new()];
    for c in num.coeffs() {
        let options = quotient_candidates(c, &den);
        quotients = quotients
            .into_iter()
            .flat_map(|partial| {
                options.iter().map(move |o| {
                    let mut next = partial.clone();
                    next.push(o.clone());
                    next
                })
            })
            .collect();
    }
    let mut best: Option<Element> = None;
    for qcoeffs in quotients {
        let q = Element::from_coeffs(x.ring(), qcoeffs)?;
        let r = x.sub(&z.mul(&q)?)?;
        debug_assert!(r.norm_sq()?.value() < z.norm_sq()?.value());
        if best.as_ref().is_none_or(|b| r.coeffs() < b.coeffs()) {
            best = Some(r);
        }
    }
    Ok(best.expect("at least one quotient candidate"))
}

impl Residue {
    /// The class of `x` modulo `z`.
    pub fn new(x: &Element, modulus: &PrincipalIdeal) -> Result<Residue> {
        if modulus.is_zero_ideal() {
            return Err(Error::ZeroElement);
        }
        if modulus.is_whole_ring() {
            return Err(Error::UnitModulus);
        }
        let representative = canonical_remainder(x, modulus.generator())?;
        Ok(Residue { representative, modulus: modulus.clone() })
    }

    pub fn representative(&self) -> &Element {
        &self.representative
    }

    pub fn modulus(&self) -> &PrincipalIdeal {
        &self.modulus
    }

    fn check_same_modulus(&self, other: &Residue) -> Result<()> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Residue) -> Result<Residue> {
        self.check_same_modulus(other)?;
        Residue::new(&self.representative.add(&other.representative)?, &self.modulus)
    }

    pub fn mul(&self, other: &Residue) -> Result<Residue> {
        self.check_same_modulus(other)?;
        Residue::new(&self.representative.mul(&other.representative)?, &self.modulus)
    }

    /// Inverse through the Bezout certificate against the modulus:
    /// from `r·x + z·y = 1` the class of `x` inverts the class of `r`.
    pub fn inverse(&self) -> Result<Residue> {
        let z = self.modulus.generator();
        if self.representative.is_zero() {
            return Err(Error::NotInvertible(z.to_string()));
        }
        let cert = gcd_bezout(&self.representative, z)?;
        if !cert.g.is_one() {
            return Err(Error::NotInvertible(z.to_string()));
        }
        let inv = Residue::new(&cert.x, &self.modulus)?;
        debug_assert!(self.mul(&inv)?.representative
            == Residue::new(&Element::one(z.ring()), &self.modulus)?.representative);
        Ok(inv)
    }

    pub fn is_zero(&self) -> bool {
        self.representative.is_zero()
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.representative, self.modulus.generator())
    }
}

/// Enumerates the complete residue system modulo `z` by reducing every
/// element of the coefficient box `[-⌈√N⌉, ⌈√N⌉]^rank` (`N = norm_sq(z)`),
/// which contains every Euclidean remainder. The list is deduplicated and
/// sorted by `(norm_sq, coefficients)`.
///
/// `bound` caps `norm_sq(z)`; the class count grows linearly with it.
pub fn residues(z: &Element, bound: u64) -> Result<Vec<Residue>> {
    if !z.ring().is_euclidean() {
        return Err(Error::UnsupportedRing(z.ring().name()));
    }
    if z.is_zero() {
        return Err(Error::ZeroElement);
    }
    if z.is_unit() {
        return Err(Error::UnitModulus);
    }
    let n = z.norm_sq()?.into_value();
    if n > BigInt::from(bound) {
        return Err(Error::EnumerationBoundExceeded(n.to_string(), bound));
    }
    let modulus = PrincipalIdeal::new(z)?;
    let radius = n.sqrt().to_i64().expect("bounded by enumeration bound") + 1;
    let rank = z.ring().rank();
    let mut classes: Vec<Residue> = Vec::new();
    let mut seen: std::collections::HashSet<Element> = std::collections::HashSet::new();
    let mut coords = vec![-radius; rank];
    loop {
        let e = Element::from_ints(z.ring(), &coords)?;
        let r = Residue::new(&e, &modulus)?;
        if seen.insert(r.representative().clone()) {
            classes.push(r);
        }
        // advance the odometer
        let mut idx = 0;
        loop {
            if idx == rank {
                classes.sort_by(|a, b| {
                    let na = a.representative.norm_sq().unwrap().into_value();
                    let nb = b.representative.norm_sq().unwrap().into_value();
                    na.cmp(&nb).then_with(|| a.representative.coeffs().cmp(b.representative.coeffs()))
                });
                let expected = match z.ring().kind() {
                    RingKind::Integers => z.coeffs()[0].abs(),
                    _ => n.clone(),
                };
                debug_assert_eq!(BigInt::from(classes.len()), expected, "residue count");
                return Ok(classes);
            }
            coords[idx] += 1;
            if coords[idx] <= radius {
                break;
            }
            coords[idx] = -radius;
            idx += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gauss(a: i64, b: i64) -> Element {
        Element::from_ints(Ring::GAUSSIAN, &[a, b]).unwrap()
    }

    fn int(a: i64) -> Element {
        Element::from_ints(Ring::INTEGERS, &[a]).unwrap()
    }

    fn ideal(e: Element) -> PrincipalIdeal {
        PrincipalIdeal::new(&e).unwrap()
    }

    #[test]
    fn ideal_normalization() {
        assert_eq!(ideal(int(-3)).generator(), &int(3));
        assert_eq!(ideal(gauss(0, 1)).generator(), &gauss(1, 0));
        assert!(ideal(gauss(0, -1)).is_whole_ring());
        assert_eq!(ideal(gauss(-1, -1)).generator(), &gauss(1, 1));
        assert!(ideal(int(0)).is_zero_ideal());
    }

    #[test]
    fn membership() {
        assert!(ideal(gauss(2, 1)).contains(&gauss(5, 0)).unwrap());
        assert!(!ideal(gauss(2, 0)).contains(&gauss(1, 1)).unwrap());
        for i in [ideal(int(0)), ideal(int(5)), ideal(int(1))] {
            assert!(i.contains(&int(0)).unwrap());
        }
        assert!(!ideal(int(0)).contains(&int(2)).unwrap());
    }

    #[test]
    fn sum_intersect_product() {
        assert_eq!(ideal(int(4)).sum(&ideal(int(6))).unwrap(), ideal(int(2)));
        assert_eq!(ideal(int(4)).intersect(&ideal(int(6))).unwrap(), ideal(int(12)));
        assert_eq!(ideal(int(2)).product(&ideal(int(3))).unwrap(), ideal(int(6)));

        // coprime generators: sum is the whole ring, intersection the product
        let a = ideal(gauss(1, 1));
        let b = ideal(gauss(3, 0));
        assert!(a.sum(&b).unwrap().is_whole_ring());
        assert_eq!(a.intersect(&b).unwrap(), a.product(&b).unwrap());

        let i = ideal(gauss(2, 1));
        assert_eq!(i.intersect(&i).unwrap(), i);
        assert_eq!(i.product(&ideal(gauss(1, 0))).unwrap(), i);

        // (1+i)(1+i) generates the same ideal as 2
        let p = ideal(gauss(1, 1));
        assert_eq!(p.product(&p).unwrap(), ideal(gauss(2, 0)));

        assert_eq!(ideal(int(0)).sum(&ideal(int(0))), Err(Error::BothZero));
        assert_eq!(ideal(int(0)).intersect(&ideal(int(2))), Err(Error::ZeroElement));
    }

    #[test]
    fn quotient_classification() {
        assert_eq!(quotient_kind(&gauss(3, 0)).unwrap(), QuotientKind::Field);
        assert_eq!(quotient_kind(&gauss(2, 0)).unwrap(), QuotientKind::NotEntire);
        assert_eq!(quotient_kind(&gauss(0, 0)).unwrap(), QuotientKind::Entire);
        assert_eq!(quotient_kind(&gauss(0, 1)).unwrap(), QuotientKind::WholeRingCollapse);
        assert_eq!(quotient_kind(&int(7)).unwrap(), QuotientKind::Field);
        assert_eq!(quotient_kind(&int(6)).unwrap(), QuotientKind::NotEntire);
    }

    #[test]
    fn residue_counts() {
        assert_eq!(residues(&int(3), 10_000).unwrap().len(), 3);
        assert_eq!(residues(&gauss(1, 1), 10_000).unwrap().len(), 2);
        assert_eq!(residues(&gauss(2, 1), 10_000).unwrap().len(), 5);
        assert_eq!(
            residues(&Element::from_ints(Ring::EISENSTEIN, &[2, 0]).unwrap(), 10_000)
                .unwrap()
                .len(),
            4
        );
        assert_eq!(
            residues(&int(20_000), 10_000),
            Err(Error::EnumerationBoundExceeded("400000000".into(), 10_000))
        );
        assert_eq!(residues(&int(1), 10_000), Err(Error::UnitModulus));
        assert_eq!(residues(&int(0), 10_000), Err(Error::ZeroElement));
    }

    #[test]
    fn residue_arithmetic() {
        let m5 = ideal(int(5));
        let two = Residue::new(&int(2), &m5).unwrap();
        let inv = two.inverse().unwrap();
        assert_eq!(inv, Residue::new(&int(3), &m5).unwrap());
        assert_eq!(two.mul(&inv).unwrap(), Residue::new(&int(1), &m5).unwrap());

        let m3 = ideal(gauss(3, 0));
        let i = Residue::new(&gauss(0, 1), &m3).unwrap();
        assert_eq!(i.inverse().unwrap(), Residue::new(&gauss(0, -1), &m3).unwrap());

        let m2 = ideal(gauss(2, 0));
        let x = Residue::new(&gauss(1, 1), &m2).unwrap();
        assert!(matches!(x.inverse(), Err(Error::NotInvertible(_))));

        // class equality is representative equality
        assert_eq!(
            Residue::new(&int(9), &m5).unwrap(),
            Residue::new(&int(-1), &m5).unwrap()
        );

        let other = Residue::new(&int(1), &ideal(int(7))).unwrap();
        assert_eq!(two.add(&other), Err(Error::ModulusMismatch));
    }

    #[test]
    fn representatives_do_not_depend_on_the_member() {
        // ties in the rounding division are the dangerous case: 1/2 and
        // 3/2 round to different quotients under ties-to-even
        let m2 = ideal(int(2));
        let r1 = Residue::new(&int(1), &m2).unwrap();
        let r3 = Residue::new(&int(3), &m2).unwrap();
        assert_eq!(r1, r3);

        let zi = ideal(gauss(1, 1));
        for (x, y) in [((1, 0), (0, 1)), ((1, 0), (3, 2)), ((2, 1), (0, -1))] {
            let rx = Residue::new(&gauss(x.0, x.1), &zi).unwrap();
            let ry = Residue::new(&gauss(y.0, y.1), &zi).unwrap();
            assert_eq!(rx, ry, "{x:?} vs {y:?}");
        }

        // shifting by any multiple never changes the representative
        let z = gauss(3, -2);
        let modulus = ideal(z.clone());
        for a in -4..=4 {
            for b in -4..=4 {
                let x = gauss(a, b);
                let base = Residue::new(&x, &modulus).unwrap();
                for (wa, wb) in [(1, 0), (0, 1), (-2, 3), (5, 5)] {
                    let shifted = x.add(&z.mul(&gauss(wa, wb)).unwrap()).unwrap();
                    assert_eq!(Residue::new(&shifted, &modulus).unwrap(), base);
                }
            }
        }
    }
}
