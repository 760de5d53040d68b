//! Exact symbolic computation for deciding when a single non-monomial element of a
//! group algebra k[G] generates an improper (unit-containing) two-sided ideal.
//!
//! Everything here is exact: field scalars are rationals, prime-field residues, or
//! elements of a rational number field; group elements live in canonical normal forms;
//! certificates are verified by literal expansion with zero tolerance.
//!
//! The crate is organized bottom-up:
//!
//! * [`scalar`]/[`matrix`] — exact fields and sparse exact linear algebra,
//! * [`word`] — freely reduced words over a named alphabet,
//! * [`group`] — computable group backends with canonical forms,
//! * [`algebra`] — group-algebra elements (finite k-linear combinations),
//! * [`binomial`] — products-of-conjugates relations and the binomial improperness test,
//! * [`cert`] — improper-ideal certificates: construction, search, verification,
//! * [`magnus`] — truncated Magnus power-series embedding of free groups,
//! * [`freiheit`] — strongly reduced forms and bounded ideal-intersection scans,
//! * [`sentence`] — the first-order sentence family whose joint validity characterizes
//!   k-resistance of a group, with prover-format emission.
//!
//! The crate is `no_std`-compatible (requires `alloc`); the `std` feature (default) only
//! forwards to the arithmetic dependencies.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod algebra;
pub mod binomial;
pub mod cert;
pub mod freiheit;
pub mod group;
pub mod magnus;
pub mod matrix;
pub mod scalar;
pub mod sentence;
pub mod word;

use alloc::string::String;
use core::fmt;

/// Errors shared by all modules. Variant names follow the operation contracts;
/// each operation's docs say which variants it can produce.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Two scalars (or an element and a context) carry different field specs.
    FieldMismatch,
    /// Division by zero, inversion of zero, or multiplicative order of zero.
    ZeroElement,
    /// Inversion in a number field found a nontrivial factor of the modulus.
    ReducibleModulus(String),
    /// Text input failed to parse; `pos` is a byte offset into the input.
    Syntax { pos: usize, msg: String },
    /// A word or algebra expression used a name outside the declared alphabet.
    UnknownGenerator(String),
    /// Two words from different alphabets were combined.
    AlphabetMismatch,
    /// An enumeration or search would exceed its configured budget.
    BudgetExceeded { needed: u128, cap: u128 },
    /// An exhaustive enumeration (units, partitions) would exceed its cap.
    CapExceeded { needed: u128, cap: u128 },
    /// The identity element where a nontrivial element is required.
    IdentityInput,
    /// A word involves a generator the assignment does not cover.
    MissingAssignment(String),
    /// Elements from different group contexts were combined.
    ContextMismatch,
    /// An affine map with zero scale factor (not a group element).
    NonUnit,
    /// The element does not have exactly two support terms.
    NotBinomial,
    /// A claimed relation fails to hold in the group.
    RelationFalse,
    /// Structurally invalid parameters for a constructor.
    BadParameters(String),
    /// The scalar has c^d = 1, so the relation cannot certify improperness.
    OrderViolation,
    /// The designated elements fail to commute where commutation is required.
    NotCommuting,
    /// The designated elements commute where noncommutation is required.
    Commuting,
    /// The normal-closure element f collapsed to the identity.
    TrivialF,
    /// The two-step solvable reduction did not terminate at a valid witness.
    NotLastTerm,
    /// A documented precondition failed to hold for the given input.
    PreconditionFailed(String),
    /// A finite-field-only operation received an infinite field.
    InfiniteFieldRejected,
    /// An internal self-check failed; this indicates a bug, not bad input.
    Internal(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::FieldMismatch => write!(f, "field specs do not match"),
            Error::ZeroElement => write!(f, "zero element where a nonzero element is required"),
            Error::ReducibleModulus(g) => {
                write!(f, "number-field modulus is reducible (factor: {g})")
            }
            Error::Syntax { pos, msg } => write!(f, "syntax error at byte {pos}: {msg}"),
            Error::UnknownGenerator(name) => write!(f, "unknown generator `{name}`"),
            Error::AlphabetMismatch => write!(f, "words come from different alphabets"),
            Error::BudgetExceeded { needed, cap } => {
                write!(f, "search budget exceeded (needs {needed}, cap {cap})")
            }
            Error::CapExceeded { needed, cap } => {
                write!(f, "enumeration cap exceeded (needs {needed}, cap {cap})")
            }
            Error::IdentityInput => write!(f, "identity element where nontrivial input required"),
            Error::MissingAssignment(name) => {
                write!(f, "no assignment for generator `{name}`")
            }
            Error::ContextMismatch => write!(f, "elements from different group contexts"),
            Error::NonUnit => write!(f, "affine scale factor must be nonzero"),
            Error::NotBinomial => write!(f, "element does not have exactly two support terms"),
            Error::RelationFalse => write!(f, "claimed relation does not hold in the group"),
            Error::BadParameters(msg) => write!(f, "bad parameters: {msg}"),
            Error::OrderViolation => {
                write!(f, "scalar satisfies c^d = 1, relation cannot certify improperness")
            }
            Error::NotCommuting => write!(f, "elements do not commute"),
            Error::Commuting => write!(f, "elements commute"),
            Error::TrivialF => write!(f, "normal-closure element is the identity"),
            Error::NotLastTerm => write!(f, "reduction did not reach a valid witness"),
            Error::PreconditionFailed(msg) => write!(f, "precondition failed: {msg}"),
            Error::InfiniteFieldRejected => {
                write!(f, "operation requires finite fields only")
            }
            Error::Internal(msg) => write!(f, "internal invariant violated: {msg}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
