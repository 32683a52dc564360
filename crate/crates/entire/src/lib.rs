//! Exact arithmetic in conjugation-closed entire rings.
//!
//! The crate implements the rings `Z`, `Z[i]` (Gaussian integers), `Z[j]`
//! (Eisenstein integers, `j = e^{2iπ/3}`) and `Z[ζ_p]` for prime `p ≥ 5`,
//! together with the algebra built on the conjugation involution:
//!
//! * [`ring`]: ring descriptors, elements as integer coefficient vectors
//!   over a fixed basis of roots of unity, exact add/mul with eager
//!   reduction to canonical form;
//! * [`star`]: conjugation, the exact norm square `x·x★`, unit parts,
//!   doubled real/imaginary parts, and the finite unit groups;
//! * [`arith`]: divisibility with exact witnesses, Euclidean division,
//!   extended gcd with Bezout certificates, lcm, irreducibility and
//!   factorization into canonical irreducibles;
//! * [`ideals`]: principal ideals, the gcd/lcm correspondences for sums
//!   and intersections, residue arithmetic and quotient classification;
//! * [`cyclo`]: index arithmetic on the groups of n-th roots of unity and
//!   an exact linear-independence audit of the power families;
//! * [`liealg`]: basis shifts of Lie-algebra structure constants and the
//!   degeneracy diagnostics of the induced conjugation;
//! * [`axioms`]: a seeded, self-describing property suite over all of the
//!   above, used by the CLI `axioms` command and the acceptance tests.
//!
//! All decision-making arithmetic is exact over arbitrary-precision
//! integers; floating point appears only in diagnostics (`*_approx`
//! accessors and embedding checks).

pub mod arith;
pub mod axioms;
pub mod cyclo;
pub mod ideals;
pub mod liealg;
mod linalg;
pub mod ring;
pub mod star;

pub use arith::{BezoutCertificate, Factorization};
pub use ideals::{PrincipalIdeal, QuotientKind, Residue};
pub use ring::{make_ring, Element, Ring, RingKind};
pub use star::{NormSquare, UnitPart};

/// Errors shared by every module. Each variant carries a stable
/// machine-readable code (see [`Error::code`]) used by the CLI's JSON mode.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("order {0} is not a prime >= 5")]
    NonPrimeOrder(u64),
    #[error("cyclotomic ring requires an explicit prime order")]
    MissingParameter,
    #[error("parameter p is only meaningful for cyclotomic rings")]
    UnexpectedParameter,
    #[error("elements belong to different rings ({0} vs {1})")]
    RingMismatch(String, String),
    #[error("coefficient vector has wrong length for {0}")]
    DimensionMismatch(String),
    #[error("x * conj(x) did not reduce to a rational integer; the norm square is not integer-valued here")]
    InternalNonReal,
    #[error("operation undefined on the zero element")]
    ZeroElement,
    #[error("unit group of {0} is infinite; enumeration unsupported")]
    InfiniteUnitGroup(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("operation unsupported in {0}")]
    UnsupportedRing(String),
    #[error("gcd(0, 0) is undefined")]
    BothZero,
    #[error("norm square {0} exceeds the residue enumeration bound {1}")]
    EnumerationBoundExceeded(String, u64),
    #[error("modulus is a unit; the quotient collapses to one class")]
    UnitModulus,
    #[error("residues have different moduli")]
    ModulusMismatch,
    #[error("element is not invertible modulo {0}")]
    NotInvertible(String),
    #[error("root indices have different group orders ({0} vs {1})")]
    OrderMismatch(u32, u32),
    #[error("group order {0} exceeds the supported maximum {1}")]
    OrderTooLarge(u32, u32),
    #[error("invalid shift vector: {0}")]
    InvalidShiftVector(String),
    #[error("invalid structure constants: {0}")]
    InvalidStructureConstants(String),
}

impl Error {
    /// Stable machine-readable code for JSON error reporting.
    pub fn code(&self) -> &'static str {
        match self {
            Error::NonPrimeOrder(_) => "non_prime_order",
            Error::MissingParameter => "missing_parameter",
            Error::UnexpectedParameter => "unexpected_parameter",
            Error::RingMismatch(..) => "ring_mismatch",
            Error::DimensionMismatch(_) => "dimension_mismatch",
            Error::InternalNonReal => "internal_non_real",
            Error::ZeroElement => "zero_element",
            Error::InfiniteUnitGroup(_) => "infinite_unit_group",
            Error::DivisionByZero => "division_by_zero",
            Error::UnsupportedRing(_) => "unsupported_ring",
            Error::BothZero => "both_zero",
            Error::EnumerationBoundExceeded(..) => "enumeration_bound_exceeded",
            Error::UnitModulus => "unit_modulus",
            Error::ModulusMismatch => "modulus_mismatch",
            Error::NotInvertible(_) => "not_invertible",
            Error::OrderMismatch(..) => "order_mismatch",
            Error::OrderTooLarge(..) => "order_too_large",
            Error::InvalidShiftVector(_) => "invalid_shift_vector",
            Error::InvalidStructureConstants(_) => "invalid_structure_constants",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
