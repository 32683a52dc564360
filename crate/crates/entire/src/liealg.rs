//! Basis shifts of Lie-algebra structure constants.
//!
//! A tensor `c[i][j][k] = c^k_{ij}` over a ring describes products
//! `e_i e_j = Σ_k c^k_{ij} e_k` with the distinguished generator at index
//! 0. Shifting the basis by `e'_i = e_i - v_i e_0` transforms the
//! constants by
//!
//! ```text
//! d^k_{ij} = c^k_{ij} + (Σ_l c^l_{ij} v_l)·δ^k_0 - v_i δ^k_j - v_j δ^k_i
//! ```
//!
//! and the module exposes that transformation plus the two diagnostics
//! built on it: entrywise star-antisymmetry of a tensor, and whether the
//! induced magnitude is well defined (it then degenerates, with every
//! generator a witness).

use crate::ring::{Element, Ring};
use crate::{Error, Result};

/// A cube of structure constants `c^k_{ij}`, stored as `c[i][j][k]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StructureConstants {
    ring: Ring,
    n: usize,
    entries: Vec<Element>, // flattened [i][j][k]
}

impl StructureConstants {
    /// Shape-checked constructor: `entries` is the flattened `n^3` cube.
    pub fn new(ring: Ring, n: usize, entries: Vec<Element>) -> Result<StructureConstants> {
        if n == 0 || entries.len() != n * n * n {
            return Err(Error::InvalidStructureConstants(format!(
                "expected {}^3 entries, got {}",
                n,
                entries.len()
            )));
        }
        if let Some(bad) = entries.iter().find(|e| e.ring() != ring) {
            return Err(Error::RingMismatch(ring.name(), bad.ring().name()));
        }
        Ok(StructureConstants { ring, n, entries })
    }

    /// The zero tensor (abelian algebra).
    pub fn zero(ring: Ring, n: usize) -> StructureConstants {
        StructureConstants { ring, n, entries: vec![Element::zero(ring); n * n * n] }
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// `c^k_{ij}`.
    pub fn get(&self, i: usize, j: usize, k: usize) -> &Element {
        &self.entries[(i * self.n + j) * self.n + k]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, value: Element) {
        self.entries[(i * self.n + j) * self.n + k] = value;
    }

    pub fn entries(&self) -> &[Element] {
        &self.entries
    }

    /// Every entry fixed by conjugation (real constants).
    pub fn is_conj_fixed(&self) -> bool {
        self.entries.iter().all(|e| e.conj() == *e)
    }

    /// Antisymmetry in the lower indices: `c^k_{ij} = -c^k_{ji}`.
    pub fn is_lower_antisymmetric(&self) -> bool {
        for i in 0..self.n {
            for j in 0..self.n {
                for k in 0..self.n {
                    if *self.get(i, j, k) != self.get(j, i, k).neg() {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Validates the constraints the source setting puts on input
    /// constants: real entries, antisymmetric lower indices.
    pub fn validate_lie(&self) -> Result<()> {
        if !self.is_conj_fixed() {
            return Err(Error::InvalidStructureConstants(
                "entries must be fixed by conjugation".into(),
            ));
        }
        if !self.is_lower_antisymmetric() {
            return Err(Error::InvalidStructureConstants(
                "constants must be antisymmetric in the lower indices".into(),
            ));
        }
        Ok(())
    }
}

/// The shift data `e'_i = e_i - v_i e_0`. The entry attached to the
/// distinguished index 0 must vanish (`e'_0 = e_0`), which also makes the
/// change-of-basis matrix unit triangular.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ShiftVector {
    v: Vec<Element>,
}

impl ShiftVector {
    pub fn new(v: Vec<Element>) -> Result<ShiftVector> {
        if v.is_empty() {
            return Err(Error::InvalidShiftVector("shift vector is empty".into()));
        }
        if !v[0].is_zero() {
            return Err(Error::InvalidShiftVector(
                "the entry at the distinguished index 0 must be zero".into(),
            ));
        }
        Ok(ShiftVector { v })
    }

    pub fn zero(ring: Ring, n: usize) -> ShiftVector {
        ShiftVector { v: vec![Element::zero(ring); n] }
    }

    pub fn len(&self) -> usize {
        self.v.len()
    }

    pub fn is_empty(&self) -> bool {
        self.v.is_empty()
    }

    pub fn get(&self, i: usize) -> &Element {
        &self.v[i]
    }

    /// The change-of-basis matrix `δ^j_i - v_i δ^j_0`, row-major.
    pub fn basis_matrix(&self, ring: Ring) -> Vec<Vec<Element>> {
        let n = self.v.len();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let mut entry =
                            if i == j { Element::one(ring) } else { Element::zero(ring) };
                        if j == 0 {
                            entry = entry.sub(&self.v[i]).expect("same ring");
                        }
                        entry
                    })
                    .collect()
            })
            .collect()
    }
}

/// Applies the shift formula entrywise.
pub fn shift_constants(c: &StructureConstants, v: &ShiftVector) -> Result<StructureConstants> {
    let n = c.dim();
    if v.len() != n {
        return Err(Error::InvalidShiftVector(format!(
            "shift vector length {} does not match dimension {n}",
            v.len()
        )));
    }
    if let Some(bad) = v.v.iter().find(|e| e.ring() != c.ring()) {
        return Err(Error::RingMismatch(c.ring().name(), bad.ring().name()));
    }
    let mut d = StructureConstants::zero(c.ring(), n);
    for i in 0..n {
        for j in 0..n {
            // Σ_l c^l_{ij} v_l, shared by every k with δ^k_0
            let mut trace = Element::zero(c.ring());
            for l in 0..n {
                trace = trace.add(&c.get(i, j, l).mul(v.get(l))?)?;
            }
            for k in 0..n {
                let mut entry = c.get(i, j, k).clone();
                if k == 0 {
                    entry = entry.add(&trace)?;
                }
                if k == j {
                    entry = entry.sub(v.get(i))?;
                }
                if k == i {
                    entry = entry.sub(v.get(j))?;
                }
                d.set(i, j, k, entry);
            }
        }
    }
    Ok(d)
}

/// Entrywise test of `(d^k_{ij})★ = -d^k_{ji}`, exact.
pub fn check_star_antisymmetry(d: &StructureConstants) -> bool {
    let n = d.dim();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if d.get(i, j, k).conj() != d.get(j, i, k).neg() {
                    return false;
                }
            }
        }
    }
    true
}

/// Outcome of [`degeneracy_report`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DegeneracyReport {
    /// True iff `c^k_{i0} = c^k_{0i} = 0` for all `i, k`, the condition
    /// for the magnitude to be defined at all.
    pub well_defined: bool,
    /// When well defined: the generators `i` with `e_i·e_i★ = 0` computed
    /// through the bracket, i.e. the degeneracy witnesses.
    pub degenerate_witnesses: Vec<usize>,
    /// When not well defined: the pairs `(i, k)` where
    /// `(v_i + v_i★)(c^k_{i0} - c^k_{0i})` fails to vanish.
    pub offending: Vec<(usize, usize)>,
}

/// Diagnoses whether a magnitude can be defined on the span of the
/// shifted generators, and how it degenerates when it can.
pub fn degeneracy_report(c: &StructureConstants, v: &ShiftVector) -> Result<DegeneracyReport> {
    let n = c.dim();
    if v.len() != n {
        return Err(Error::InvalidShiftVector(format!(
            "shift vector length {} does not match dimension {n}",
            v.len()
        )));
    }
    let mut well_defined = true;
    let mut offending = Vec::new();
    for i in 0..n {
        // v_i + v_i★ = 2·Re(v_i)
        let re2 = v.get(i).re2();
        for k in 0..n {
            if !c.get(i, 0, k).is_zero() || !c.get(0, i, k).is_zero() {
                well_defined = false;
            }
            let gap = c.get(i, 0, k).sub(c.get(0, i, k))?;
            if !re2.mul(&gap)?.is_zero() && !offending.contains(&(i, k)) {
                offending.push((i, k));
            }
        }
    }
    let mut degenerate_witnesses = Vec::new();
    if well_defined {
        for i in 0..n {
            // e_i·e_i★ = -c^k_{ii} e_k + (v_i + v_i★) c^k_{i0} e_k
            let re2 = v.get(i).re2();
            let vanishes = (0..n).all(|k| {
                let term = c.get(i, i, k).neg().add(&re2.mul(c.get(i, 0, k)).unwrap()).unwrap();
                term.is_zero()
            });
            if vanishes {
                degenerate_witnesses.push(i);
            }
        }
    }
    Ok(DegeneracyReport { well_defined, degenerate_witnesses, offending })
}
