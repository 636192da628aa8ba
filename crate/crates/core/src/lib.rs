//! Repeated-root constacyclic codes over `F_{p^a}`.
//!
//! Two families are covered: length `n*p^s` codes generated by powers of an
//! irreducible binomial `x^n + γ`, and length `2n*p^s` codes generated by
//! `(x^n - ξ)^i (x^n + ξ)^j` with both factors irreducible. For each family
//! the minimum Hamming distance has a closed form driven entirely by where
//! the exponents fall in a three-way partition of `{1, ..., p^s - 1}`; the
//! [`distance`] module evaluates those forms, and the [`oracle`] module
//! checks them against an exhaustive search that never looks at the
//! formulas.
//!
//! ```
//! use constacyclic::{brute_force_min_distance, certificate_for, DEFAULT_SEARCH_CAP};
//! use constacyclic::{distance_single, CodeInstance, FieldContext};
//!
//! let f3 = FieldContext::new(3, 1).unwrap();
//! // ⟨(x - 1)^4⟩ of length 9 over F_3.
//! let code = CodeInstance::single(&f3, 1, 2, f3.from_int(-1), 4).unwrap();
//!
//! let formula = distance_single(3, 2, 4).unwrap().value;
//! let scanned = brute_force_min_distance(&code, DEFAULT_SEARCH_CAP).unwrap();
//! assert_eq!(formula, Some(3));
//! assert_eq!(scanned, Some(3));
//!
//! let witness = certificate_for(&code).unwrap();
//! assert!(code.is_codeword(&witness).unwrap());
//! assert_eq!(witness.weight(), 3);
//! ```

pub mod code;
pub mod distance;
pub mod field;
pub mod oracle;
pub mod padic;
pub mod poly;

pub use code::{CodeError, CodeInstance, CodeSpec, SingleFactorSpec, TwoFactorSpec};
pub use distance::{
    certificate_for, distance_single, distance_two_factor, negacyclic_distance, CaseLabel,
    DistanceError, DistanceResult,
};
pub use field::{is_prime, FieldContext, FieldElement, FieldError, DEFAULT_CAP};
pub use oracle::{
    brute_force_min_distance, verify_point, OracleError, OracleReport, Verification,
    DEFAULT_SEARCH_CAP,
};
pub use padic::{
    classify_exponent, expansion, weight_of_power, PadicError, PadicExpansion, PartitionClass,
};
pub use poly::{PolyError, Polynomial};
