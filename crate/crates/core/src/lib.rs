//! Quasi-BCH codes over matrix rings.
//!
//! A quasi-BCH code of length `m*l` over `F_q` is cut out by parity checks
//! built from a primitive `m`-th root of unity `Γ` in the matrix ring
//! `M_l(F_{q^s})`: a word `(c_1, ..., c_m)` of `l`-symbol blocks is a codeword
//! when `Σ_j Γ^{i·j} c_{j+1}^T = 0` for `i = 1, ..., δ-1`. This crate builds
//! such codes and decodes them two ways:
//!
//! * [`wb`] — Welch-Berlekamp interpolation over the matrix ring, correcting
//!   up to `⌊(δ-1)/2⌋` block errors;
//! * [`ilrs`] — diagonalize `Γ` over the splitting field of `X^m - 1` and
//!   decode the resulting interleaved Reed-Solomon rows, including a
//!   collaborative decoder that goes beyond half distance when `Γ` is scalar.
//!
//! Everything is exact arithmetic over explicit small finite fields; the
//! [`oracle`] module provides brute-force enumeration as independent ground
//! truth. The crate is `no_std` (with `alloc`); file formats and the CLI live
//! in the companion `qbch-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod field;
pub mod grs;
pub mod ilrs;
pub mod linalg;
pub mod matrix;
pub mod oracle;
pub mod qbch;
pub mod wb;

use core::fmt;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A parameter that must be prime is not.
    NotPrime(u64),
    /// An enumeration or construction exceeds the desk-scale guard.
    TooLarge,
    /// Division or inversion of zero in a field.
    DivisionByZero,
    /// Multiplicative order of zero requested.
    ZeroElement,
    /// Operands belong to different fields, or an embedding does not apply.
    FieldMismatch,
    /// Matrix or polynomial dimensions do not match.
    DimensionMismatch,
    /// Polynomial degree exceeds the allowed bound.
    DegreeTooHigh,
    /// `m` does not divide the order of the multiplicative group used to
    /// construct a primitive root.
    IncompatibleOrder,
    /// `gcd(m, q) != 1`.
    NotCoprime,
    /// A value expected to lie in the base field does not.
    NotInBaseField,
    /// A supplied matrix is not a primitive root of unity of the stated order.
    InvalidRoot,
    /// Code parameters violate their constraints.
    BadParameters,
    /// A message or vector has the wrong length.
    LengthMismatch,
    /// A block word has the wrong shape.
    ShapeMismatch,
    /// The interpolation step found no nonzero solution.
    NoSolution,
    /// No codeword within the decoding radius.
    DecodingFailure,
    /// More than one candidate codeword within the decoding radius.
    AmbiguousRoot,
    /// Collaborative decoding requires a scalar root matrix.
    NotScalarGamma,
    /// The code contains no nonzero codeword.
    EmptyCode,
    /// An internal invariant failed.
    Internal(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::TooLarge => write!(f, "instance too large for brute-force enumeration"),
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::ZeroElement => write!(f, "zero has no multiplicative order"),
            Error::FieldMismatch => write!(f, "field mismatch"),
            Error::DimensionMismatch => write!(f, "dimension mismatch"),
            Error::DegreeTooHigh => write!(f, "polynomial degree too high"),
            Error::IncompatibleOrder => write!(f, "m does not divide the group order"),
            Error::NotCoprime => write!(f, "m and q are not coprime"),
            Error::NotInBaseField => write!(f, "value lies outside the base field"),
            Error::InvalidRoot => write!(f, "not a primitive root of unity of the stated order"),
            Error::BadParameters => write!(f, "invalid code parameters"),
            Error::LengthMismatch => write!(f, "length mismatch"),
            Error::ShapeMismatch => write!(f, "block word shape mismatch"),
            Error::NoSolution => write!(f, "interpolation found no solution"),
            Error::DecodingFailure => write!(f, "decoding failure"),
            Error::AmbiguousRoot => write!(f, "ambiguous decoding result"),
            Error::NotScalarGamma => write!(f, "collaborative decoding requires a scalar root"),
            Error::EmptyCode => write!(f, "code has no nonzero codeword"),
            Error::Internal(msg) => write!(f, "internal invariant failed: {msg}"),
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;
