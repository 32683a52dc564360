//! Index arithmetic on the groups of n-th roots of unity.
//!
//! Everything here is exact index manipulation (`e_{n,k}·e_{n,m} =
//! e_{n,k+m mod n}`, `e_{n,k}★ = e_{n,n-k}`) except for the explicitly
//! float-based embedding helpers. [`freeness_check`] is the exact audit of
//! whether the generating family `{e_{n,0}, …}` used for the ring bases is
//! actually linearly independent over the rationals; it is `true` for
//! prime orders and fails for composite odd ones (the smallest being 9).

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::linalg;
use crate::{Error, Result};

/// Largest group order accepted by the audit operations.
pub const MAX_ORDER: u32 = 24;

/// The root `e_{n,k} = e^{2ikπ/n}`, with `k` kept normalized mod `n`.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug)]
pub struct RootIndex {
    n: u32,
    k: u32,
}

impl RootIndex {
    /// The root `e_{n,k}` for any integer `k` (wrapped mod `n`).
    pub fn new(n: u32, k: i64) -> RootIndex {
        assert!(n >= 1, "group order must be positive");
        RootIndex { n, k: k.rem_euclid(n as i64) as u32 }
    }

    pub fn order(&self) -> u32 {
        self.n
    }

    pub fn index(&self) -> u32 {
        self.k
    }

    /// The identity `e_{n,0} = 1`.
    pub fn identity(n: u32) -> RootIndex {
        RootIndex::new(n, 0)
    }

    /// Group product: index addition mod `n`.
    pub fn mul(&self, other: &RootIndex) -> Result<RootIndex> {
        if self.n != other.n {
            return Err(Error::OrderMismatch(self.n, other.n));
        }
        Ok(RootIndex::new(self.n, (self.k + other.k) as i64))
    }

    /// Conjugation / inversion: `e_{n,k} -> e_{n,n-k}`.
    pub fn star(&self) -> RootIndex {
        RootIndex::new(self.n, (self.n - self.k) as i64)
    }

    /// `e_{n,k}^m` for any integer `m`.
    pub fn pow(&self, m: i64) -> RootIndex {
        RootIndex::new(self.n, (self.k as i64).wrapping_mul(m))
    }

    /// Float image `e^{2ikπ/n}`.
    pub fn embedding(&self) -> Complex64 {
        crate::ring::unit_root(self.n, self.k)
    }
}

impl std::fmt::Display for RootIndex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "e({},{})", self.n, self.k)
    }
}

/// The real members of `U_n`: `{1}` for odd `n`, `{1, -1}` for even `n`.
pub fn real_roots(n: u32) -> Vec<RootIndex> {
    assert!(n >= 1);
    if n.is_multiple_of(2) {
        vec![RootIndex::identity(n), RootIndex::new(n, (n / 2) as i64)]
    } else {
        vec![RootIndex::identity(n)]
    }
}

/// The index family generating `Z[S_n]`: `0..=n-2` for odd `n`, the same
/// range without `n/2` for even `n`, and just `{0}` for `n <= 2`.
pub fn basis_indices(n: u32) -> Vec<RootIndex> {
    assert!(n >= 1);
    if n <= 2 {
        return vec![RootIndex::identity(n)];
    }
    (0..=n - 2)
        .filter(|&k| !n.is_multiple_of(2) || k != n / 2)
        .map(|k| RootIndex::new(n, k as i64))
        .collect()
}

/// Coefficients of the `n`-th cyclotomic polynomial, exactly, via
/// `Φ_n = (x^n - 1) / Π_{d|n, d<n} Φ_d`.
pub fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    assert!(n >= 1);
    // x^n - 1
    let mut numerator = vec![BigInt::zero(); n as usize + 1];
    numerator[0] = -BigInt::one();
    numerator[n as usize] = BigInt::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            numerator = poly_div_exact(&numerator, &cyclotomic_polynomial(d));
        }
    }
    numerator
}

/// Exact division of integer polynomials with monic divisor.
fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    assert!(den.last().map(|c| c.is_one()).unwrap_or(false), "divisor must be monic");
    let mut rem: Vec<BigInt> = num.to_vec();
    let dn = den.len() - 1;
    let qn = rem.len() - 1 - dn;
    let mut quotient = vec![BigInt::zero(); qn + 1];
    for k in (0..=qn).rev() {
        let coeff = rem[k + dn].clone();
        quotient[k] = coeff.clone();
        for (i, d) in den.iter().enumerate() {
            let delta = &coeff * d;
            rem[k + i] -= delta;
        }
    }
    assert!(rem.iter().all(|c| c.is_zero()), "division must be exact");
    quotient
}

/// Exact rank of the [`basis_indices`] family written on the power basis
/// of `Q[x]/(Φ_n)`; the family is free iff the rank equals its size.
pub fn family_rank(n: u32) -> Result<usize> {
    if n > MAX_ORDER {
        return Err(Error::OrderTooLarge(n, MAX_ORDER));
    }
    let phi = cyclotomic_polynomial(n);
    let rows: Vec<Vec<BigInt>> =
        basis_indices(n).iter().map(|root| power_mod_phi(root.index(), &phi)).collect();
    Ok(linalg::rank(rows))
}

/// Exact linear-independence audit of [`basis_indices`] over the
/// rationals.
///
/// Each `e_{n,k}` is written on the power basis of `Q[x]/(Φ_n)` (which has
/// dimension `φ(n)`) and the integer matrix rank decides freeness. Returns
/// `true` exactly when the family really is a basis of `Z[S_n]`: prime
/// `n` and `n <= 4` pass, composite odd orders like 9 fail.
pub fn freeness_check(n: u32) -> Result<bool> {
    Ok(family_rank(n)? == basis_indices(n).len())
}

/// Coefficients of `x^k mod Φ` (degree < deg Φ).
fn power_mod_phi(k: u32, phi: &[BigInt]) -> Vec<BigInt> {
    let degree = phi.len() - 1;
    let mut acc = vec![BigInt::zero(); degree];
    acc[0] = BigInt::one();
    for _ in 0..k {
        // multiply by x, then reduce the overflow coefficient
        let top = acc[degree - 1].clone();
        for i in (1..degree).rev() {
            acc[i] = acc[i - 1].clone();
        }
        acc[0] = BigInt::zero();
        if !top.is_zero() {
            for i in 0..degree {
                let delta = &top * &phi[i];
                acc[i] -= delta;
            }
        }
    }
    acc
}
