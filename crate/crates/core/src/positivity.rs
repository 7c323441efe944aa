//! Total nonnegativity and total positivity deciders, and the nonsingularity
//! and total positivity checks for the generalized beta matrices.

use itertools::Itertools;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{ExactMatrix, ExactScalar};
use crate::linalg::det_bareiss;
use crate::matrices::{beta_recip_reduced, gamma_reduced_matrix, generalized_beta_reduced, BetaParams};
use crate::report::{VerificationReport, Witness};

/// Default size limit for exhaustive minor enumeration.
pub const DEFAULT_MINOR_GUARD: usize = 8;

/// Size up to which [`is_totally_positive`] cross-checks against every minor.
pub const EXHAUSTIVE_CROSS_CHECK: usize = 6;

/// Row and column index sets of a minor, 0-based and strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MinorIndex {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

impl MinorIndex {
    pub fn new(rows: Vec<usize>, cols: Vec<usize>) -> Result<Self> {
        let increasing = |v: &[usize]| v.windows(2).all(|w| w[0] < w[1]);
        if rows.len() != cols.len() || !increasing(&rows) || !increasing(&cols) {
            return Err(Error::InvalidParameter(format!("bad minor index rows {rows:?} cols {cols:?}")));
        }
        Ok(Self { rows, cols })
    }

    pub fn full(n: usize) -> Self {
        Self { rows: (0..n).collect(), cols: (0..n).collect() }
    }

    pub fn order(&self) -> usize {
        self.rows.len()
    }

    pub fn minor(&self, a: &ExactMatrix) -> Result<ExactScalar> {
        if self.rows.iter().any(|&r| r >= a.n_rows()) || self.cols.iter().any(|&c| c >= a.n_cols()) {
            return Err(Error::InvalidParameter("minor index out of bounds".into()));
        }
        det_bareiss(&a.submatrix(&self.rows, &self.cols))
    }
}

/// Result of a minor-sign test: the first offending minor, if any.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinorTest {
    pub holds: bool,
    pub failure: Option<(MinorIndex, ExactScalar)>,
}

impl MinorTest {
    fn from_failure(failure: Option<(MinorIndex, ExactScalar)>) -> Self {
        Self { holds: failure.is_none(), failure }
    }
}

/// All minors in order of size, then rows, then columns (lexicographic).
fn all_minor_indices(rows: usize, cols: usize) -> impl Iterator<Item = MinorIndex> {
    (1..=rows.min(cols)).flat_map(move |k| {
        (0..rows).combinations(k).flat_map(move |r| {
            (0..cols).combinations(k).map(move |c| MinorIndex { rows: r.clone(), cols: c })
        })
    })
}

/// Minors with contiguous row and column blocks, in the same order.
fn contiguous_minor_indices(rows: usize, cols: usize) -> impl Iterator<Item = MinorIndex> {
    (1..=rows.min(cols)).flat_map(move |k| {
        (0..=rows - k).flat_map(move |r| {
            (0..=cols - k).map(move |c| MinorIndex { rows: (r..r + k).collect(), cols: (c..c + k).collect() })
        })
    })
}

fn first_failure(
    a: &ExactMatrix,
    indices: impl Iterator<Item = MinorIndex>,
    ok: impl Fn(&ExactScalar) -> bool,
) -> Result<Option<(MinorIndex, ExactScalar)>> {
    for idx in indices {
        let v = idx.minor(a)?;
        if !ok(&v) {
            return Ok(Some((idx, v)));
        }
    }
    Ok(None)
}

fn guard(a: &ExactMatrix, limit: usize) -> Result<()> {
    let size = a.n_rows().max(a.n_cols());
    if size > limit {
        Err(Error::TooLarge { size, guard: limit })
    } else {
        Ok(())
    }
}

/// Every minor is `>= 0`; exhaustive, guarded at [`DEFAULT_MINOR_GUARD`].
pub fn is_totally_nonnegative(a: &ExactMatrix) -> Result<MinorTest> {
    is_totally_nonnegative_with_guard(a, DEFAULT_MINOR_GUARD)
}

pub fn is_totally_nonnegative_with_guard(a: &ExactMatrix, limit: usize) -> Result<MinorTest> {
    guard(a, limit)?;
    let failure = first_failure(a, all_minor_indices(a.n_rows(), a.n_cols()), |v| !v.is_negative())?;
    Ok(MinorTest::from_failure(failure))
}

/// Every minor is `> 0`, by exhaustive enumeration.
pub fn is_totally_positive_exhaustive(a: &ExactMatrix, limit: usize) -> Result<MinorTest> {
    guard(a, limit)?;
    let failure = first_failure(a, all_minor_indices(a.n_rows(), a.n_cols()), Signed::is_positive)?;
    Ok(MinorTest::from_failure(failure))
}

/// Total positivity through Fekete's criterion: every minor with contiguous
/// rows and contiguous columns is positive.
///
/// Up to [`EXHAUSTIVE_CROSS_CHECK`] the verdict is compared with exhaustive
/// enumeration; a disagreement is an [`Error::Internal`].
pub fn is_totally_positive(a: &ExactMatrix) -> Result<MinorTest> {
    a.require_square()?;
    let failure = first_failure(a, contiguous_minor_indices(a.n_rows(), a.n_cols()), Signed::is_positive)?;
    let test = MinorTest::from_failure(failure);
    if a.n_rows() <= EXHAUSTIVE_CROSS_CHECK {
        let exhaustive = is_totally_positive_exhaustive(a, EXHAUSTIVE_CROSS_CHECK)?;
        if exhaustive.holds != test.holds {
            return Err(Error::Internal(format!(
                "contiguous-minor test says {}, exhaustive enumeration says {}",
                test.holds, exhaustive.holds
            )));
        }
    }
    Ok(test)
}

/// The reduced cores of `[β(λ_i, μ_j)^m]` and `[1/Γ(λ_i+μ_j)^m]` both have
/// nonzero determinant.
pub fn verify_nonsingularity(params: &BetaParams) -> Result<VerificationReport> {
    let n = params.n();
    let beta_core = generalized_beta_reduced(params)?.core;
    let gamma_core = gamma_reduced_matrix(params)?.core;
    for core in [&beta_core, &gamma_core] {
        let det = det_bareiss(core)?;
        if det.is_zero() {
            return Ok(VerificationReport::fail(
                "nonsingular",
                n,
                Witness::Minor { index: MinorIndex::full(n), value: det },
            ));
        }
    }
    Ok(VerificationReport::pass("nonsingular", n))
}

/// The reduced cores of `[1/β(λ_i, μ_j)^m]` and `[Γ(λ_i+μ_j)^m]` are totally
/// positive; positive diagonal scaling carries the verdict to the full matrices.
pub fn verify_tp_hadamard_power(params: &BetaParams) -> Result<VerificationReport> {
    let n = params.n();
    guard(&ExactMatrix::zeros(n, n), DEFAULT_MINOR_GUARD)?;
    let recip_core = beta_recip_reduced(params)?.core;
    let gamma_core = gamma_reduced_matrix(params)?.hadamard_inverse()?.core;
    for core in [&recip_core, &gamma_core] {
        let test = is_totally_positive(core)?;
        if let Some((index, value)) = test.failure {
            return Ok(VerificationReport::fail("tp", n, Witness::Minor { index, value }));
        }
    }
    Ok(VerificationReport::pass("tp", n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, ratio};
    use crate::matrices::beta_recip_matrix;

    #[test]
    fn tnn_examples() {
        assert!(is_totally_nonnegative(&ExactMatrix::from_ints(&[&[1, 2], &[2, 6]])).unwrap().holds);
        let swap = is_totally_nonnegative(&ExactMatrix::from_ints(&[&[0, 1], &[1, 0]])).unwrap();
        assert!(!swap.holds);
        let (idx, v) = swap.failure.unwrap();
        assert_eq!(idx, MinorIndex::full(2));
        assert_eq!(v, int(-1));
        assert!(is_totally_nonnegative(&ExactMatrix::identity(4)).unwrap().holds);
        assert!(matches!(
            is_totally_nonnegative(&ExactMatrix::identity(9)),
            Err(Error::TooLarge { size: 9, guard: 8 })
        ));
    }

    #[test]
    fn tp_examples() {
        assert!(is_totally_positive(&beta_recip_matrix(3).unwrap()).unwrap().holds);
        let mut m = beta_recip_matrix(3).unwrap();
        m[(1, 1)] = int(0);
        let t = is_totally_positive(&m).unwrap();
        assert!(!t.holds);
        assert_eq!(t.failure.unwrap().0, MinorIndex::new(vec![1], vec![1]).unwrap());
        let sq = beta_recip_matrix(3).unwrap().hadamard_power(2).unwrap();
        assert!(is_totally_positive(&sq).unwrap().holds);
        // identity is TNN but not TP
        assert!(!is_totally_positive(&ExactMatrix::identity(3)).unwrap().holds);
    }

    #[test]
    fn minor_index_validation() {
        assert!(MinorIndex::new(vec![1, 0], vec![0, 1]).is_err());
        assert!(MinorIndex::new(vec![0], vec![0, 1]).is_err());
        assert!(MinorIndex::new(vec![0, 5], vec![0, 1]).unwrap().minor(&ExactMatrix::identity(3)).is_err());
    }

    #[test]
    fn nonsingularity_examples() {
        let p = BetaParams::new(vec![ratio(1, 2), ratio(3, 2)], vec![ratio(1, 2), ratio(3, 2)], 1).unwrap();
        assert!(verify_nonsingularity(&p).unwrap().holds);
        assert_eq!(det_bareiss(&generalized_beta_reduced(&p).unwrap().core).unwrap(), ratio(-1, 4));
        let p = BetaParams::integers(3, 2).unwrap();
        assert!(verify_nonsingularity(&p).unwrap().holds);
    }

    #[test]
    fn tp_power_examples() {
        assert!(verify_tp_hadamard_power(&BetaParams::integers(3, 1).unwrap()).unwrap().holds);
        let p = BetaParams::new(vec![ratio(1, 2), ratio(3, 2)], vec![ratio(1, 2), ratio(3, 2)], 2).unwrap();
        assert!(verify_tp_hadamard_power(&p).unwrap().holds);
        let ones = ExactMatrix::from_fn(3, 3, |_, _| int(1));
        assert!(is_totally_nonnegative(&ones).unwrap().holds);
        assert!(!is_totally_positive(&ones).unwrap().holds);
        assert!(BetaParams::integers(3, 0).is_err());
    }
}
