//! JSON input for structure-constant cubes and shift vectors.
//!
//! A constants file is an `n x n x n` array `c[i][j][k]`; a shift file is
//! an array of length `n`. Entries may be plain integers, `[re, im]`
//! pairs (rank-2 rings and up: `re + im·e_1`), or expression strings.

use entire::liealg::{ShiftVector, StructureConstants};
use entire::{Element, Ring};
use num_bigint::BigInt;
use serde_json::Value;

use crate::eval::eval;
use crate::expr::parse;
use crate::output::Failure;

fn entry_to_element(value: &Value, ring: Ring) -> Result<Element, Failure> {
    match value {
        Value::Number(n) => {
            let as_int = n
                .as_i64()
                .ok_or_else(|| Failure::usage(format!("entry {n} is not an integer")))?;
            Ok(Element::constant(ring, BigInt::from(as_int)))
        }
        Value::Array(pair) if pair.len() == 2 => {
            let re = pair[0]
                .as_i64()
                .ok_or_else(|| Failure::usage("entry pair components must be integers"))?;
            let im = pair[1]
                .as_i64()
                .ok_or_else(|| Failure::usage("entry pair components must be integers"))?;
            if im != 0 && ring.rank() < 2 {
                return Err(Failure::usage(format!(
                    "entry [{re}, {im}] needs a ring of rank >= 2, not {}",
                    ring.name()
                )));
            }
            let mut e = Element::constant(ring, BigInt::from(re));
            if im != 0 {
                let unit = Element::basis(ring, 1).map_err(Failure::domain)?;
                e = e.add(&unit.scale(&BigInt::from(im))).map_err(Failure::domain)?;
            }
            Ok(e)
        }
        Value::String(text) => eval(&parse(text)?, ring),
        other => Err(Failure::usage(format!("unsupported constants entry: {other}"))),
    }
}

/// Loads the `n^3` cube `c[i][j][k]` from parsed JSON.
pub fn constants_from_json(value: &Value, ring: Ring) -> Result<StructureConstants, Failure> {
    let outer = value
        .as_array()
        .ok_or_else(|| Failure::usage("constants file must hold a 3-dimensional array"))?;
    let n = outer.len();
    if n == 0 {
        return Err(Failure::usage("constants array is empty"));
    }
    let mut entries = Vec::with_capacity(n * n * n);
    for (i, plane) in outer.iter().enumerate() {
        let plane = plane
            .as_array()
            .filter(|p| p.len() == n)
            .ok_or_else(|| Failure::usage(format!("constants[{i}] must be an array of length {n}")))?;
        for (j, row) in plane.iter().enumerate() {
            let row = row.as_array().filter(|r| r.len() == n).ok_or_else(|| {
                Failure::usage(format!("constants[{i}][{j}] must be an array of length {n}"))
            })?;
            for cell in row {
                entries.push(entry_to_element(cell, ring)?);
            }
        }
    }
    StructureConstants::new(ring, n, entries).map_err(Failure::domain)
}

/// Loads a shift vector of length `n` from parsed JSON.
pub fn shift_from_json(value: &Value, ring: Ring, n: usize) -> Result<ShiftVector, Failure> {
    let raw = value
        .as_array()
        .filter(|v| v.len() == n)
        .ok_or_else(|| Failure::usage(format!("shift file must hold an array of length {n}")))?;
    let elements = raw
        .iter()
        .map(|cell| entry_to_element(cell, ring))
        .collect::<Result<Vec<_>, _>>()?;
    ShiftVector::new(elements).map_err(Failure::domain)
}
