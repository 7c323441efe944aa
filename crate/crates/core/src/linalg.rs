//! Exact determinant, inverse, characteristic polynomial and inertia.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{denominator_lcm, int, ExactMatrix, ExactScalar, InertiaTriple};
use crate::polyroots::{sign_changes, sturm_negative_roots, sturm_positive_roots, Polynomial};

/// Determinant by fraction-free (Bareiss) elimination.
///
/// Each row is first scaled by the lcm of its denominators so elimination runs
/// over the integers; every intermediate division is exact, and a nonzero
/// remainder is reported as [`Error::Internal`]. The empty matrix has determinant 1.
pub fn det_bareiss(a: &ExactMatrix) -> Result<ExactScalar> {
    let n = a.require_square()?;
    if n == 0 {
        return Ok(ExactScalar::one());
    }
    let mut scale = BigInt::one();
    let mut m: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            let row = a.row(i);
            let l = denominator_lcm(row);
            let out = row.iter().map(|x| (x * BigRational::from_integer(l.clone())).to_integer()).collect();
            scale *= &l;
            out
        })
        .collect();

    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    negate = !negate;
                }
                None => return Ok(ExactScalar::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                let (q, r) = num.div_rem(&prev);
                if !r.is_zero() {
                    return Err(Error::Internal(format!("inexact Bareiss division at step {k}")));
                }
                m[i][j] = q;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let mut det = BigRational::new(m[n - 1][n - 1].clone(), scale);
    if negate {
        det = -det;
    }
    Ok(det)
}

/// Exact inverse by Gauss-Jordan elimination over Q.
pub fn inverse_exact(a: &ExactMatrix) -> Result<ExactMatrix> {
    let n = a.require_square()?;
    let mut m = a.to_rows();
    let mut inv = ExactMatrix::identity(n).to_rows();
    for k in 0..n {
        let p = (k..n).find(|&r| !m[r][k].is_zero()).ok_or(Error::Singular)?;
        m.swap(k, p);
        inv.swap(k, p);
        let piv = m[k][k].recip();
        for j in 0..n {
            m[k][j] *= &piv;
            inv[k][j] *= &piv;
        }
        for i in 0..n {
            if i == k || m[i][k].is_zero() {
                continue;
            }
            let f = m[i][k].clone();
            for j in 0..n {
                let (mk, ik) = (m[k][j].clone(), inv[k][j].clone());
                m[i][j] -= &f * mk;
                inv[i][j] -= &f * ik;
            }
        }
    }
    ExactMatrix::from_rows(inv)
}

/// Monic characteristic polynomial `det(xI - A)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharPoly {
    poly: Polynomial,
}

impl CharPoly {
    /// Coefficients in descending order, leading coefficient 1.
    pub fn coefficients(&self) -> Vec<ExactScalar> {
        self.poly.coefficients()
    }

    pub fn degree(&self) -> usize {
        self.poly.degree().unwrap_or(0)
    }

    pub fn eval(&self, x: &ExactScalar) -> ExactScalar {
        self.poly.eval(x)
    }

    pub fn polynomial(&self) -> &Polynomial {
        &self.poly
    }

    pub fn into_polynomial(self) -> Polynomial {
        self.poly
    }
}

/// Characteristic polynomial by the Faddeev-LeVerrier recurrence:
/// `M_k = A M_{k-1} + c_{n-k+1} I`, `c_{n-k} = -tr(A M_k) / k`.
pub fn char_poly(a: &ExactMatrix) -> Result<CharPoly> {
    let n = a.require_square()?;
    // ascending coefficients c_0..c_n
    let mut c = vec![ExactScalar::zero(); n + 1];
    c[n] = ExactScalar::one();
    let mut am = ExactMatrix::zeros(n, n);
    for k in 1..=n {
        let m = am.shift_diagonal(&c[n - k + 1])?;
        am = a * &m;
        c[n - k] = -am.trace()? / int(k as i64);
    }
    Ok(CharPoly { poly: Polynomial::from_ascending(c) })
}

/// Inertia `(π, ξ, ν)` of a symmetric matrix.
///
/// The characteristic polynomial of a symmetric matrix is real-rooted, so
/// after removing the root at zero, the sign changes of its coefficients count
/// the positive eigenvalues exactly. A Sturm count of the positive and negative
/// roots is used as an independent check.
pub fn inertia_symmetric(a: &ExactMatrix) -> Result<InertiaTriple> {
    a.check_symmetric()?;
    let n = a.n_rows();
    let p = char_poly(a)?.into_polynomial();
    let (zero, reduced) = p.strip_zero_roots();
    let positive = sign_changes(&reduced)?;
    let negative = n - zero - positive;

    let sturm_pos = sturm_positive_roots(&reduced)?;
    let sturm_neg = sturm_negative_roots(&reduced)?;
    if sturm_pos != positive || sturm_neg != negative {
        return Err(Error::Internal(format!(
            "inertia mismatch: sign changes give ({positive}, {zero}, {negative}), \
             Sturm gives ({sturm_pos}, {zero}, {sturm_neg})"
        )));
    }
    Ok(InertiaTriple { positive, zero, negative })
}

/// Determinants of the leading `k`x`k` blocks, `k = 1..n`.
pub fn leading_principal_minors(a: &ExactMatrix) -> Result<Vec<ExactScalar>> {
    let n = a.require_square()?;
    (1..=n).map(|k| det_bareiss(&a.leading_block(k))).collect()
}
