//! Evaluation of parsed expressions into ring elements.

use entire::{Element, Ring};

use crate::expr::Expr;
use crate::output::Failure;

/// Evaluates `expr` in `ring`. Symbols are gated by the ring's root
/// order: `i` needs order 4, `j` order 3, and `zeta(n,k)` requires `n`
/// to match exactly, so cross-ring arithmetic cannot happen silently.
pub fn eval(expr: &Expr, ring: Ring) -> Result<Element, Failure> {
    match expr {
        Expr::Int(n) => Ok(Element::constant(ring, n.clone())),
        Expr::SymI => {
            if ring.root_order() == 4 {
                Ok(Element::root(ring, 1))
            } else {
                Err(Failure::symbol_not_in_ring("i", &ring.name()))
            }
        }
        Expr::SymJ => {
            if ring.root_order() == 3 {
                Ok(Element::root(ring, 1))
            } else {
                Err(Failure::symbol_not_in_ring("j", &ring.name()))
            }
        }
        Expr::Zeta(n, k) => {
            if *n == ring.root_order() {
                Ok(Element::root(ring, *k as i64))
            } else {
                Err(Failure::symbol_not_in_ring(&format!("zeta({n},{k})"), &ring.name()))
            }
        }
        Expr::Neg(e) => Ok(eval(e, ring)?.neg()),
        Expr::Add(a, b) => eval(a, ring)?.add(&eval(b, ring)?).map_err(Failure::domain),
        Expr::Sub(a, b) => eval(a, ring)?.sub(&eval(b, ring)?).map_err(Failure::domain),
        Expr::Mul(a, b) => eval(a, ring)?.mul(&eval(b, ring)?).map_err(Failure::domain),
        Expr::Pow(base, e) => Ok(eval(base, ring)?.pow(*e as u64)),
    }
}

/// Parses the `--ring` flag: `z`, `gaussian`, `eisenstein`, or `cyclo<p>`.
pub fn parse_ring(name: &str) -> Result<Ring, Failure> {
    match name {
        "z" => Ok(Ring::INTEGERS),
        "gaussian" => Ok(Ring::GAUSSIAN),
        "eisenstein" => Ok(Ring::EISENSTEIN),
        _ => {
            if let Some(digits) = name.strip_prefix("cyclo") {
                let p: u64 = digits.parse().map_err(|_| {
                    Failure::usage(format!("invalid cyclotomic order in ring name {name:?}"))
                })?;
                Ring::cyclotomic(p).map_err(Failure::usage_from)
            } else {
                Err(Failure::usage(format!(
                    "unknown ring {name:?} (expected z, gaussian, eisenstein, or cyclo<p>)"
                )))
            }
        }
    }
}
