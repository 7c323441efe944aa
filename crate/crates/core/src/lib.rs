//! Exact construction and verification of beta-function matrices.
//!
//! The crate builds `[β(i,j)]`, its reciprocal and Pascal relatives, and the
//! generalized matrices `[β(λ_i, μ_j)^m]`, all over exact rationals. It
//! computes determinants, inverses, characteristic polynomials and inertia
//! exactly, and checks the closed forms for them. It also provides the
//! polynomial root-counting machinery (Descartes, Sturm) used for the
//! nonsingularity results, total positivity tests, and trace-norm
//! Birkhoff-James orthogonality to the identity.
//!
//! ```
//! use betamat::{beta_matrix, det_bareiss, closed_form_det, inertia_symmetric};
//!
//! let b = beta_matrix(4).unwrap();
//! assert_eq!(det_bareiss(&b).unwrap(), closed_form_det(4));
//! assert_eq!(inertia_symmetric(&b).unwrap().positive, 2);
//! ```

pub mod error;
pub mod exact;
pub mod identities;
pub mod linalg;
pub mod matrices;
pub mod orthogonality;
pub mod polyroots;
pub mod positivity;
pub mod report;
pub mod sampling;
pub mod sweeps;

pub use error::{Error, Result};
pub use exact::{
    format_scalar, int, parse_scalar, ratio, scalar_arith, sign, ArithOp, ExactMatrix, ExactScalar, InertiaTriple,
};
pub use identities::{
    closed_form_det, closed_form_inverse, closed_form_lu, expected_inertia, pascal_det_sign,
    verify_a_involution, verify_b_inverse, verify_k_factorization, verify_summation_identity,
};
pub use linalg::{char_poly, det_bareiss, inertia_symmetric, inverse_exact, leading_principal_minors, CharPoly};
pub use matrices::{
    a_matrix, b_matrix, beta_matrix, beta_recip_matrix, d1_matrix, d2_matrix, gamma_reduced_matrix,
    generalized_beta_reduced, k_matrix, pascal_hadamard_inverse, BetaParams, ScaledMatrix,
};
pub use orthogonality::{bj_orthogonal_to_identity, find_violation, trace_norm_at, BJReport, Interval, Violation};
pub use polyroots::{
    beta_kernel_polynomial, build_family, descartes_bound, mul_linear, sign_changes, sturm_positive_roots,
    FamilySpec, Polynomial,
};
pub use positivity::{
    is_totally_nonnegative, is_totally_positive, verify_nonsingularity, verify_tp_hadamard_power, MinorIndex,
};
pub use report::{VerificationReport, Witness};
