//! Closed forms for the beta matrix and exact verifiers for the identities
//! behind them.
//!
//! Every check compares exact rationals and reports the first failing cell.

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::Result;
use crate::exact::{binomial, factorial, int, sign, sign_power, ExactMatrix, ExactScalar, InertiaTriple};
use crate::linalg::{det_bareiss, inertia_symmetric, inverse_exact};
use crate::matrices::{a_matrix, b_matrix, beta_matrix, d1_matrix, d2_matrix, k_matrix, pascal_hadamard_inverse};
use crate::report::{VerificationReport, Witness};

fn binom(r: i64, k: i64) -> ExactScalar {
    BigRational::from_integer(binomial(r, k))
}

fn fact(k: i64) -> ExactScalar {
    BigRational::from_integer(factorial(k as u64))
}

fn matrix_witness(lhs: &ExactMatrix, rhs: &ExactMatrix) -> Option<Witness> {
    lhs.first_difference(rhs).map(|(row, col, lhs, rhs)| Witness::Cell { row, col, lhs, rhs })
}

/// `(-1)^{n(3n+1)/2} ∏_{i=1}^{n} 1 / (C(n+i-1, n) C(n, i) i)`.
pub fn closed_form_det(n: usize) -> ExactScalar {
    let n_ = n as i64;
    let prod = (1..=n_).fold(ExactScalar::one(), |acc, i| {
        acc / (binom(n_ + i - 1, n_) * binom(n_, i) * int(i))
    });
    sign_power(n_ * (3 * n_ + 1) / 2) * prod
}

/// Sign `(-1)^{n(3n+1)/2}` of `det [β(i,j)]`.
pub fn det_sign(n: usize) -> i32 {
    let n = n as i64;
    if (n * (3 * n + 1) / 2) % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Integer inverse of `[β(i,j)]`:
/// `(-1)^{n+i-j} C(n+i-1, i-1) C(n, j) j Σ_{k=1}^{min(i,j)} C(n-k, n-i) C(n+j-1, n+k-1) (-1)^k`.
pub fn closed_form_inverse(n: usize) -> ExactMatrix {
    let n_ = n as i64;
    ExactMatrix::from_fn(n, n, |i, j| {
        let (i, j) = (i as i64 + 1, j as i64 + 1);
        let sum = (1..=i.min(j)).fold(ExactScalar::zero(), |acc, k| {
            acc + binom(n_ - k, n_ - i) * binom(n_ + j - 1, n_ + k - 1) * sign_power(k)
        });
        sign_power(n_ + i - j) * binom(n_ + i - 1, i - 1) * binom(n_, j) * int(j) * sum
    })
}

/// LU factors of the inverse of `[β(i,j)]`:
/// `L_ij = n! C(n-j, n-i) C(n+i-1, i-1) (-1)^{n+i+j}` for `i >= j`,
/// `U_ij = C(n+j-1, n+i-1) C(n, j) j (-1)^j / n!` for `i <= j`.
pub fn closed_form_lu(n: usize) -> (ExactMatrix, ExactMatrix) {
    let n_ = n as i64;
    let nf = fact(n_);
    let l = ExactMatrix::from_fn(n, n, |i, j| {
        let (i, j) = (i as i64 + 1, j as i64 + 1);
        if i >= j {
            &nf * binom(n_ - j, n_ - i) * binom(n_ + i - 1, i - 1) * sign_power(n_ + i + j)
        } else {
            ExactScalar::zero()
        }
    });
    let u = ExactMatrix::from_fn(n, n, |i, j| {
        let (i, j) = (i as i64 + 1, j as i64 + 1);
        if i <= j {
            binom(n_ + j - 1, n_ + i - 1) * binom(n_, j) * int(j) * sign_power(j) / &nf
        } else {
            ExactScalar::zero()
        }
    });
    (l, u)
}

/// Claimed `B^{-1}`: `C(n+j-1, n+i-1)` for `i <= j`.
pub fn claimed_b_inverse(n: usize) -> ExactMatrix {
    let n_ = n as i64;
    ExactMatrix::from_fn(n, n, |i, j| {
        let (i, j) = (i as i64 + 1, j as i64 + 1);
        if i <= j {
            binom(n_ + j - 1, n_ + i - 1)
        } else {
            ExactScalar::zero()
        }
    })
}

pub fn verify_closed_form_det(n: usize) -> Result<VerificationReport> {
    let lhs = det_bareiss(&beta_matrix(n)?)?;
    let rhs = closed_form_det(n);
    let w = (lhs != rhs).then_some(Witness::Value { lhs, rhs });
    Ok(VerificationReport::from_witness("det-formula", n, w))
}

/// Checks that the closed-form inverse is integral and equals the eliminated inverse.
pub fn verify_closed_form_inverse(n: usize) -> Result<VerificationReport> {
    let computed = inverse_exact(&beta_matrix(n)?)?;
    let formula = closed_form_inverse(n);
    let mut w = matrix_witness(&computed, &formula);
    if w.is_none() {
        w = computed.entries().iter().position(|x| !x.is_integer()).map(|p| Witness::Cell {
            row: p / n,
            col: p % n,
            lhs: computed.entries()[p].clone(),
            rhs: computed.entries()[p].round(),
        });
    }
    Ok(VerificationReport::from_witness("inverse-formula", n, w))
}

/// Triangularity of the closed-form factors and `L U = [β(i,j)]^{-1}`.
pub fn verify_lu(n: usize) -> Result<VerificationReport> {
    let (l, u) = closed_form_lu(n);
    let inverse = inverse_exact(&beta_matrix(n)?)?;
    let zero_cell = |m: &ExactMatrix, lower: bool| {
        (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .find(|&(i, j)| if lower { j > i } else { j < i } && !m.get(i, j).is_zero())
            .map(|(i, j)| Witness::Cell { row: i, col: j, lhs: m.get(i, j).clone(), rhs: ExactScalar::zero() })
    };
    let w = zero_cell(&l, true)
        .or_else(|| zero_cell(&u, false))
        .or_else(|| matrix_witness(&(&l * &u), &inverse));
    Ok(VerificationReport::from_witness("lu", n, w))
}

/// `K = D2 B A D1`.
pub fn verify_k_factorization(n: usize) -> Result<VerificationReport> {
    verify_k_factorization_with(n, &a_matrix(n)?)
}

/// As [`verify_k_factorization`] with a caller-supplied `A` factor.
pub fn verify_k_factorization_with(n: usize, a: &ExactMatrix) -> Result<VerificationReport> {
    let rhs = &(&(&d2_matrix(n)? * &b_matrix(n)?) * a) * &d1_matrix(n)?;
    Ok(VerificationReport::from_witness("k-factorization", n, matrix_witness(&k_matrix(n)?, &rhs)))
}

/// `Σ_{k=max(i,j)}^{n} C(n+k-1, n+i-1) C(n-j, n-k) (-1)^{i-k+j}` and
/// `(-1)^{n+j-i} (n+j-1)! / ((n-i)! (i+j-1)!)`, with `1 <= i, j <= n`.
pub fn summation_sides(n: usize, i: usize, j: usize) -> (ExactScalar, ExactScalar) {
    let (n, i, j) = (n as i64, i as i64, j as i64);
    let lhs = (i.max(j)..=n).fold(ExactScalar::zero(), |acc, k| {
        acc + binom(n + k - 1, n + i - 1) * binom(n - j, n - k) * sign_power(i - k + j)
    });
    let rhs = sign_power(n + j - i) * fact(n + j - 1) / (fact(n - i) * fact(i + j - 1));
    (lhs, rhs)
}

pub fn verify_summation_identity(n: usize, i: usize, j: usize) -> VerificationReport {
    let (lhs, rhs) = summation_sides(n, i, j);
    let w = (lhs != rhs).then(|| Witness::Cell { row: i - 1, col: j - 1, lhs, rhs });
    VerificationReport::from_witness("summation", n, w)
}

/// The summation identity for every `1 <= i, j <= n`; first failing `(i, j)` is reported.
pub fn verify_summation_grid(n: usize) -> VerificationReport {
    let w = (1..=n)
        .flat_map(|i| (1..=n).map(move |j| (i, j)))
        .map(|(i, j)| verify_summation_identity(n, i, j))
        .find(|r| !r.holds)
        .and_then(|r| r.witness);
    VerificationReport::from_witness("summation", n, w)
}

/// `B` times the claimed inverse is the identity.
pub fn verify_b_inverse(n: usize) -> Result<VerificationReport> {
    let prod = &b_matrix(n)? * &claimed_b_inverse(n);
    Ok(VerificationReport::from_witness("b-inverse", n, matrix_witness(&prod, &ExactMatrix::identity(n))))
}

pub fn verify_a_involution(n: usize) -> Result<VerificationReport> {
    verify_involution(n, &a_matrix(n)?)
}

/// `a * a = I` for an arbitrary square matrix, labelled as the A-involution check.
pub fn verify_involution(n: usize, a: &ExactMatrix) -> Result<VerificationReport> {
    let sq = a.mat_mul(a)?;
    Ok(VerificationReport::from_witness("a-involution", n, matrix_witness(&sq, &ExactMatrix::identity(n))))
}

/// `(-1)^{n(n-1)/2}`, the sign of `det P^{∘(-1)}`.
pub fn pascal_det_sign(n: usize) -> i32 {
    if (n * n.saturating_sub(1) / 2).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

pub fn verify_pascal_sign(n: usize) -> Result<VerificationReport> {
    let det = det_bareiss(&pascal_hadamard_inverse(n)?)?;
    let observed = sign(&det);
    let expected = pascal_det_sign(n);
    let w = (observed != expected).then(|| Witness::Value { lhs: int(observed as i64), rhs: int(expected as i64) });
    Ok(VerificationReport::from_witness("pascal-sign", n, w))
}

/// `sign(det_n det_{n+1}) = +1` iff `n` is even.
pub fn verify_det_sign_parity(n: usize) -> Result<VerificationReport> {
    let d0 = det_bareiss(&beta_matrix(n)?)?;
    let d1 = det_bareiss(&beta_matrix(n + 1)?)?;
    let observed = sign(&d0) * sign(&d1);
    let expected = if n.is_multiple_of(2) { 1 } else { -1 };
    let w = (observed != expected).then(|| Witness::Value { lhs: int(observed as i64), rhs: int(expected as i64) });
    Ok(VerificationReport::from_witness("det-sign-parity", n, w))
}

/// `(n/2, 0, n/2)` for even `n`, `((n+1)/2, 0, (n-1)/2)` for odd `n`.
pub fn expected_inertia(n: usize) -> InertiaTriple {
    InertiaTriple::new(n.div_ceil(2), 0, n / 2)
}

fn inertia_report(name: &str, n: usize, m: &ExactMatrix) -> Result<VerificationReport> {
    let observed = inertia_symmetric(m)?;
    let expected = expected_inertia(n);
    let w = (observed != expected).then_some(Witness::Inertia { observed, expected });
    Ok(VerificationReport::from_witness(name, n, w))
}

pub fn verify_beta_inertia(n: usize) -> Result<VerificationReport> {
    inertia_report("inertia", n, &beta_matrix(n)?)
}

pub fn verify_pascal_inertia(n: usize) -> Result<VerificationReport> {
    inertia_report("pascal-inertia", n, &pascal_hadamard_inverse(n)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;

    #[test]
    fn closed_form_det_small() {
        assert_eq!(closed_form_det(1), int(1));
        assert_eq!(closed_form_det(2), ratio(-1, 12));
        // 1/(1*3*1) * 1/(4*3*2) * 1/(10*1*3)
        assert_eq!(closed_form_det(3), ratio(-1, 2160));
        assert!(verify_closed_form_det(3).unwrap().holds);
    }

    #[test]
    fn closed_form_inverse_small() {
        assert_eq!(closed_form_inverse(1), ExactMatrix::from_ints(&[&[1]]));
        assert_eq!(closed_form_inverse(2), ExactMatrix::from_ints(&[&[-2, 6], &[6, -12]]));
        assert!(verify_closed_form_inverse(5).unwrap().holds);
    }

    #[test]
    fn lu_small() {
        let (l, u) = closed_form_lu(1);
        assert_eq!(l, ExactMatrix::from_ints(&[&[-1]]));
        assert_eq!(u, ExactMatrix::from_ints(&[&[-1]]));
        assert_eq!(&l * &u, ExactMatrix::from_ints(&[&[1]]));
        let (l, u) = closed_form_lu(2);
        assert_eq!(&l * &u, ExactMatrix::from_ints(&[&[-2, 6], &[6, -12]]));
        assert!(l.is_lower_triangular() && u.is_upper_triangular());
    }

    #[test]
    fn summation_small() {
        assert_eq!(summation_sides(2, 1, 1), (int(2), int(2)));
        assert!(verify_summation_identity(1, 1, 1).holds);
        assert!(verify_summation_grid(4).holds);
    }

    #[test]
    fn perturbed_a_fails_both_checks() {
        let mut a = a_matrix(3).unwrap();
        a[(2, 0)] += int(1);
        let r = verify_k_factorization_with(3, &a).unwrap();
        assert!(!r.holds);
        match r.witness {
            Some(Witness::Cell { lhs, rhs, .. }) => assert_ne!(lhs, rhs),
            other => panic!("unexpected witness {other:?}"),
        }
        let r = verify_involution(3, &a).unwrap();
        assert!(!r.holds);
        assert!(verify_k_factorization(1).unwrap().holds);
        assert!(verify_a_involution(1).unwrap().holds);
    }

    #[test]
    fn b_inverse_small() {
        assert!(verify_b_inverse(1).unwrap().holds);
        assert!(verify_b_inverse(4).unwrap().holds);
    }

    #[test]
    fn pascal_sign_small() {
        assert_eq!(pascal_det_sign(1), 1);
        assert_eq!(pascal_det_sign(2), -1);
        assert_eq!(pascal_det_sign(3), -1);
        assert_eq!(det_bareiss(&pascal_hadamard_inverse(2).unwrap()).unwrap(), ratio(-1, 2));
        for n in 1..=4 {
            assert!(verify_pascal_sign(n).unwrap().holds, "n = {n}");
        }
    }

    #[test]
    fn expected_inertia_table() {
        assert_eq!(expected_inertia(2), InertiaTriple::new(1, 0, 1));
        assert_eq!(expected_inertia(3), InertiaTriple::new(2, 0, 1));
        assert!(verify_beta_inertia(4).unwrap().holds);
        assert!(verify_pascal_inertia(5).unwrap().holds);
    }

    #[test]
    fn det_sign_small() {
        assert_eq!(det_sign(1), 1);
        assert_eq!(det_sign(2), -1);
        assert_eq!(det_sign(3), -1);
        assert!(verify_det_sign_parity(1).unwrap().holds);
        assert!(verify_det_sign_parity(2).unwrap().holds);
    }
}
