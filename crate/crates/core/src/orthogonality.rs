//! Birkhoff-James orthogonality to the identity in the trace norm.
//!
//! A symmetric `A` is orthogonal to `I` iff `‖A + tI‖₁ >= ‖A‖₁` for every real
//! `t`, which holds iff at most half the eigenvalues are positive and at most
//! half are negative. The inertia test is the decision procedure; the
//! violation search produces rational certificates for the negative case.

use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{format_scalar, int, ratio, ExactMatrix, ExactScalar, InertiaTriple};
use crate::linalg::{char_poly, inertia_symmetric};
use crate::polyroots::RealRoots;

/// Closed rational interval.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    pub lo: ExactScalar,
    pub hi: ExactScalar,
}

impl Interval {
    pub fn point(x: ExactScalar) -> Self {
        Self { lo: x.clone(), hi: x }
    }

    pub fn width(&self) -> ExactScalar {
        &self.hi - &self.lo
    }

    pub fn contains(&self, x: &ExactScalar) -> bool {
        self.lo <= *x && *x <= self.hi
    }

    /// Image of the interval under `|·|`.
    pub fn abs(&self) -> Self {
        if !self.lo.is_negative() {
            self.clone()
        } else if !self.hi.is_positive() {
            Self { lo: -self.hi.clone(), hi: -self.lo.clone() }
        } else {
            let m = if -self.lo.clone() > self.hi { -self.lo.clone() } else { self.hi.clone() };
            Self { lo: ExactScalar::zero(), hi: m }
        }
    }

    fn shift(&self, t: &ExactScalar) -> Self {
        Self { lo: &self.lo + t, hi: &self.hi + t }
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", format_scalar(&self.lo), format_scalar(&self.hi))
    }
}

/// Eigenvalue enclosures of a symmetric matrix.
#[derive(Debug, Clone)]
struct Spectrum {
    roots: RealRoots,
    n: usize,
}

impl Spectrum {
    fn of(a: &ExactMatrix) -> Result<Self> {
        a.check_symmetric()?;
        let n = a.n_rows();
        if n == 0 {
            return Err(Error::InvalidParameter("empty matrix".into()));
        }
        let roots = RealRoots::isolate(char_poly(a)?.polynomial())?;
        if roots.count() != n {
            return Err(Error::Internal(format!(
                "symmetric {n}x{n} matrix has {} real eigenvalues",
                roots.count()
            )));
        }
        Ok(Self { roots, n })
    }

    /// Refines so the trace-norm enclosure has width at most `eps`.
    fn refine(&mut self, eps: &ExactScalar) {
        self.roots.refine(&(eps / int(self.n as i64)));
    }

    /// Enclosure of `Σ |λ_i + t|` with multiplicity.
    fn trace_norm_shifted(&self, t: &ExactScalar) -> Interval {
        let mut lo = ExactScalar::zero();
        let mut hi = ExactScalar::zero();
        for r in self.roots.roots() {
            let iv = Interval { lo: r.lo.clone(), hi: r.hi.clone() }.shift(t).abs();
            let k = int(r.multiplicity as i64);
            lo += &iv.lo * &k;
            hi += &iv.hi * &k;
        }
        Interval { lo, hi }
    }
}

/// Encloses `‖A + tI‖₁` in an interval of width at most `eps`.
///
/// The eigenvalues of `A + tI` are isolated from its exact characteristic
/// polynomial by Sturm sequences and refined by bisection.
pub fn trace_norm_at(a: &ExactMatrix, t: &ExactScalar, eps: &ExactScalar) -> Result<Interval> {
    if !eps.is_positive() {
        return Err(Error::InvalidParameter("precision must be positive".into()));
    }
    let mut spec = Spectrum::of(&a.shift_diagonal(t)?)?;
    spec.refine(eps);
    Ok(spec.trace_norm_shifted(&ExactScalar::zero()))
}

/// Search budget for [`find_violation_with`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchBudget {
    /// Number of dyadic grid points tried.
    pub grid_points: usize,
    /// Interval width target relative to `‖A‖₁`.
    pub relative_precision: ExactScalar,
}

impl Default for SearchBudget {
    fn default() -> Self {
        Self { grid_points: 64, relative_precision: ratio(1, 1_000_000) }
    }
}

/// A rational `t` with `sup ‖A + tI‖₁ < inf ‖A‖₁`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub t: ExactScalar,
    pub norm_at_t: Interval,
    pub norm_at_zero: Interval,
}

impl Violation {
    /// Certified lower bound on the decrease.
    pub fn certified_decrease(&self) -> ExactScalar {
        &self.norm_at_zero.lo - &self.norm_at_t.hi
    }
}

pub fn find_violation(a: &ExactMatrix) -> Result<Option<Violation>> {
    find_violation_with(a, &SearchBudget::default())
}

/// Searches `t = ±c 2^{-k}`, `c = |tr A| / n` (or 1), `k = 0, 1, ...`, moving
/// toward the side holding more eigenvalues. Each candidate is evaluated on
/// intervals of width at most `min(precision * ‖A‖₁, |t| / 4)`.
///
/// `None` means no certificate was found within the budget; it is not a proof
/// of orthogonality.
pub fn find_violation_with(a: &ExactMatrix, budget: &SearchBudget) -> Result<Option<Violation>> {
    let inertia = inertia_symmetric(a)?;
    let n = a.n_rows();
    let mut spec = Spectrum::of(a)?;

    let mut c = (a.trace()? / int(n as i64)).abs();
    if c.is_zero() {
        c = int(1);
    }
    // Scale for the relative precision target, from a coarse enclosure of ‖A‖₁.
    spec.refine(&(&c / int(1 << 10)));
    let coarse = spec.trace_norm_shifted(&ExactScalar::zero());
    let scale = if coarse.hi.is_zero() { int(1) } else { coarse.hi };
    let base_eps = &budget.relative_precision * &scale;

    let directions: Vec<ExactScalar> = match inertia.positive.cmp(&inertia.negative) {
        std::cmp::Ordering::Greater => vec![int(-1)],
        std::cmp::Ordering::Less => vec![int(1)],
        std::cmp::Ordering::Equal => vec![int(-1), int(1)],
    };
    let mut step = c;
    let mut tried = 0;
    while tried < budget.grid_points {
        for dir in &directions {
            if tried == budget.grid_points {
                break;
            }
            tried += 1;
            let t = dir * &step;
            let quarter = t.abs() / int(4);
            let eps = if quarter < base_eps { quarter } else { base_eps.clone() };
            spec.refine(&eps);
            let at_zero = spec.trace_norm_shifted(&ExactScalar::zero());
            let at_t = spec.trace_norm_shifted(&t);
            if at_t.hi < at_zero.lo {
                return Ok(Some(Violation { t, norm_at_t: at_t, norm_at_zero: at_zero }));
            }
        }
        step /= int(2);
    }
    Ok(None)
}

/// Outcome of the orthogonality decision for one matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BJReport {
    pub n: usize,
    pub inertia: InertiaTriple,
    pub orthogonal: bool,
    /// Certificate of non-orthogonality; `None` when orthogonal, or when the
    /// search budget ran out.
    pub violation: Option<Violation>,
}

impl BJReport {
    pub fn violation_t(&self) -> Option<&ExactScalar> {
        self.violation.as_ref().map(|v| &v.t)
    }
}

/// `π <= n/2` and `ν <= n/2`.
pub fn inertia_criterion(inertia: &InertiaTriple) -> bool {
    let n = inertia.dimension();
    2 * inertia.positive <= n && 2 * inertia.negative <= n
}

pub fn bj_orthogonal_to_identity(a: &ExactMatrix) -> Result<BJReport> {
    let inertia = inertia_symmetric(a)?;
    let orthogonal = inertia_criterion(&inertia);
    let violation = if orthogonal { None } else { find_violation(a)? };
    Ok(BJReport { n: a.n_rows(), inertia, orthogonal, violation })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrices::{beta_matrix, pascal_hadamard_inverse};

    fn eps() -> ExactScalar {
        ratio(1, 1_000_000)
    }

    #[test]
    fn interval_abs() {
        let iv = |a, b| Interval { lo: int(a), hi: int(b) };
        assert_eq!(iv(1, 2).abs(), iv(1, 2));
        assert_eq!(iv(-3, -1).abs(), iv(1, 3));
        assert_eq!(iv(-3, 2).abs(), iv(0, 3));
    }

    #[test]
    fn trace_norm_examples() {
        let one = ExactMatrix::from_ints(&[&[1]]);
        let r = trace_norm_at(&one, &int(-1), &eps()).unwrap();
        assert!(r.contains(&int(0)) && r.width() <= eps());
        let d = ExactMatrix::diag(&[int(2), int(-3)]);
        let r = trace_norm_at(&d, &int(0), &eps()).unwrap();
        assert!(r.contains(&int(5)) && r.width() <= eps());
        assert!(trace_norm_at(&d, &int(0), &int(0)).is_err());
    }

    #[test]
    fn trace_norm_beta2_matches_quadratic_formula() {
        // x^2 - 7/6 x - 1/12: roots (7/6 ± sqrt(49/36 + 1/3)) / 2, so
        // |λ1| + |λ2| = λ1 - λ2 = sqrt(61/36) = sqrt(61)/6.
        let r = trace_norm_at(&beta_matrix(2).unwrap(), &int(0), &ratio(1, 1 << 30)).unwrap();
        // sqrt(61)/6 lies in (r.lo, r.hi) iff 61/36 lies in (lo^2, hi^2)
        let target = ratio(61, 36);
        assert!(&r.lo * &r.lo <= target && target <= &r.hi * &r.hi);
        assert!(r.width() <= ratio(1, 1 << 30));
    }

    #[test]
    fn violation_examples() {
        let v = find_violation(&ExactMatrix::from_ints(&[&[1]])).unwrap().unwrap();
        assert_eq!(v.t, int(-1));
        assert_eq!(v.norm_at_t, Interval::point(int(0)));
        assert!(v.certified_decrease().is_positive());
        let v = find_violation(&beta_matrix(3).unwrap()).unwrap().unwrap();
        assert!(v.norm_at_t.hi < v.norm_at_zero.lo);
        assert!(find_violation(&beta_matrix(2).unwrap()).unwrap().is_none());
    }

    #[test]
    fn orthogonality_examples() {
        let r = bj_orthogonal_to_identity(&beta_matrix(2).unwrap()).unwrap();
        assert!(r.orthogonal);
        assert_eq!(r.inertia, InertiaTriple::new(1, 0, 1));
        assert!(r.violation.is_none());
        let r = bj_orthogonal_to_identity(&beta_matrix(3).unwrap()).unwrap();
        assert!(!r.orthogonal);
        assert_eq!(r.inertia, InertiaTriple::new(2, 0, 1));
        assert!(r.violation_t().is_some());
        assert!(bj_orthogonal_to_identity(&pascal_hadamard_inverse(4).unwrap()).unwrap().orthogonal);
        let ns = ExactMatrix::from_ints(&[&[1, 2], &[3, 4]]);
        assert!(matches!(bj_orthogonal_to_identity(&ns), Err(Error::NotSymmetric { .. })));
    }

    #[test]
    fn trace_norm_shrinks_with_precision() {
        let a = beta_matrix(3).unwrap();
        let coarse = trace_norm_at(&a, &int(0), &ratio(1, 100)).unwrap();
        let fine = trace_norm_at(&a, &int(0), &ratio(1, 100_000)).unwrap();
        assert!(coarse.lo <= fine.lo && fine.hi <= coarse.hi);
    }
}
