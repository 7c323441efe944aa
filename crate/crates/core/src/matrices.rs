//! Constructors for the beta-function matrix family and its factors.
//!
//! Beta-matrix formulas use 1-based indices `i, j = 1..n`; the Pascal
//! Hadamard inverse uses 0-based indices `i, j = 0..n-1`. Only `n` is exposed.

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{binomial, factorial, format_scalar, int, sign_power, ExactMatrix, ExactScalar};

fn fact(k: usize) -> ExactScalar {
    BigRational::from_integer(factorial(k as u64))
}

fn binom(r: i64, k: i64) -> ExactScalar {
    BigRational::from_integer(binomial(r, k))
}

fn require_size(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::InvalidParameter("matrix size must be at least 1".into()))
    } else {
        Ok(())
    }
}

/// `[β(i,j)] = [(i-1)!(j-1)!/(i+j-1)!]`.
pub fn beta_matrix(n: usize) -> Result<ExactMatrix> {
    require_size(n)?;
    Ok(ExactMatrix::from_fn(n, n, |i, j| fact(i) * fact(j) / fact(i + j + 1)))
}

/// `[1/β(i,j)] = [(i+j-1)!/((i-1)!(j-1)!)]`, an integer matrix.
pub fn beta_recip_matrix(n: usize) -> Result<ExactMatrix> {
    require_size(n)?;
    Ok(ExactMatrix::from_fn(n, n, |i, j| fact(i + j + 1) / (fact(i) * fact(j))))
}

/// `K = [1/(i+j-1)!]`.
pub fn k_matrix(n: usize) -> Result<ExactMatrix> {
    require_size(n)?;
    Ok(ExactMatrix::from_fn(n, n, |i, j| fact(i + j + 1).recip()))
}

/// Lower triangular `A_ij = C(n-j, n-i) (-1)^j` for `i >= j`.
pub fn a_matrix(n: usize) -> Result<ExactMatrix> {
    require_size(n)?;
    let n_ = n as i64;
    Ok(ExactMatrix::from_fn(n, n, |i, j| {
        let (i, j) = (i as i64 + 1, j as i64 + 1);
        if i >= j {
            binom(n_ - j, n_ - i) * sign_power(j)
        } else {
            ExactScalar::zero()
        }
    }))
}

/// Upper triangular `B_ij = (-1)^(i-j) C(n+j-1, n+i-1)` for `i <= j`.
pub fn b_matrix(n: usize) -> Result<ExactMatrix> {
    require_size(n)?;
    let n_ = n as i64;
    Ok(ExactMatrix::from_fn(n, n, |i, j| {
        let (i, j) = (i as i64 + 1, j as i64 + 1);
        if i <= j {
            sign_power(i - j) * binom(n_ + j - 1, n_ + i - 1)
        } else {
            ExactScalar::zero()
        }
    }))
}

/// `D1 = diag[(-1)^(n-i) / (n+i-1)!]`.
pub fn d1_matrix(n: usize) -> Result<ExactMatrix> {
    require_size(n)?;
    let d: Vec<_> = (1..=n)
        .map(|i| sign_power((n - i) as i64) / fact(n + i - 1))
        .collect();
    Ok(ExactMatrix::diag(&d))
}

/// `D2 = diag[(-1)^i (n-i)!]`.
pub fn d2_matrix(n: usize) -> Result<ExactMatrix> {
    require_size(n)?;
    let d: Vec<_> = (1..=n).map(|i| sign_power(i as i64) * fact(n - i)).collect();
    Ok(ExactMatrix::diag(&d))
}

/// Hadamard inverse of the symmetric Pascal matrix, `[i! j! / (i+j)!]` for `i, j = 0..n-1`.
pub fn pascal_hadamard_inverse(n: usize) -> Result<ExactMatrix> {
    require_size(n)?;
    Ok(ExactMatrix::from_fn(n, n, |i, j| fact(i) * fact(j) / fact(i + j)))
}

/// Symmetric Pascal matrix `[(i+j)! / (i! j!)]`, `i, j = 0..n-1`.
pub fn pascal_matrix(n: usize) -> Result<ExactMatrix> {
    require_size(n)?;
    Ok(ExactMatrix::from_fn(n, n, |i, j| fact(i + j) / (fact(i) * fact(j))))
}

/// Parameters of the generalized matrices `[β(λ_i, μ_j)^m]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BetaParams {
    pub lambdas: Vec<ExactScalar>,
    pub mus: Vec<ExactScalar>,
    pub m: u32,
}

impl BetaParams {
    pub fn new(lambdas: Vec<ExactScalar>, mus: Vec<ExactScalar>, m: u32) -> Result<Self> {
        let p = Self { lambdas, mus, m };
        p.validate()?;
        Ok(p)
    }

    /// `λ = μ = (1, 2, ..., n)`.
    pub fn integers(n: usize, m: u32) -> Result<Self> {
        let seq: Vec<_> = (1..=n as i64).map(int).collect();
        Self::new(seq.clone(), seq, m)
    }

    pub fn n(&self) -> usize {
        self.lambdas.len()
    }

    /// Positivity, strict monotonicity and `m >= 1`.
    pub fn validate(&self) -> Result<()> {
        if self.lambdas.is_empty() {
            return Err(Error::InvalidParameter("at least one lambda is required".into()));
        }
        if self.lambdas.len() != self.mus.len() {
            return Err(Error::InvalidParameter(format!(
                "{} lambdas but {} mus",
                self.lambdas.len(),
                self.mus.len()
            )));
        }
        if self.m == 0 {
            return Err(Error::InvalidParameter("Hadamard exponent m must be at least 1".into()));
        }
        for (name, seq) in [("lambda", &self.lambdas), ("mu", &self.mus)] {
            if let Some(x) = seq.iter().find(|x| !x.is_positive()) {
                return Err(Error::InvalidParameter(format!("{name} value {} is not positive", format_scalar(x))));
            }
            if let Some(w) = seq.windows(2).position(|w| w[0] >= w[1]) {
                return Err(Error::InvalidParameter(format!(
                    "{name} sequence is not strictly increasing at position {}",
                    w + 1
                )));
            }
        }
        Ok(())
    }

    /// Offsets `d_j = μ_j - μ_1`, which must all be integers on the exact path.
    pub fn mu_offsets(&self) -> Result<Vec<usize>> {
        self.validate()?;
        for (idx, w) in self.mus.windows(2).enumerate() {
            let inc = &w[1] - &w[0];
            if !inc.is_integer() {
                return Err(Error::NonIntegerIncrement { index: idx + 1, increment: format_scalar(&inc) });
            }
        }
        let mu1 = &self.mus[0];
        Ok(self
            .mus
            .iter()
            .map(|mu| {
                let d = (mu - mu1).to_integer();
                usize::try_from(d).expect("offset fits in usize")
            })
            .collect())
    }
}

/// Product `Γ(a_1)^{e_1} Γ(a_2)^{e_2} ...` with positive arguments; always a positive real.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PositivityWitness {
    factors: Vec<(ExactScalar, i64)>,
}

impl PositivityWitness {
    pub fn one() -> Self {
        Self { factors: Vec::new() }
    }

    fn gamma_ratio(num: &[&ExactScalar], den: &[&ExactScalar], m: u32) -> Self {
        let m = i64::from(m);
        let factors = num
            .iter()
            .map(|a| ((*a).clone(), m))
            .chain(den.iter().map(|a| ((*a).clone(), -m)))
            .collect();
        Self { factors }
    }

    pub fn factors(&self) -> &[(ExactScalar, i64)] {
        &self.factors
    }

    pub fn recip(&self) -> Self {
        Self { factors: self.factors.iter().map(|(a, e)| (a.clone(), -e)).collect() }
    }

    /// Exact value when every gamma argument is a positive integer.
    pub fn rational_value(&self) -> Option<ExactScalar> {
        let mut acc = ExactScalar::one();
        for (arg, e) in &self.factors {
            if !arg.is_integer() {
                return None;
            }
            let k: u64 = u64::try_from(arg.to_integer()).ok()?;
            let g = BigRational::from_integer(factorial(k - 1));
            acc *= num_traits::Pow::pow(&g, i32::try_from(*e).ok()?);
        }
        Some(acc)
    }
}

impl fmt::Display for PositivityWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|(a, e)| format!("Gamma({})^{}", format_scalar(a), e))
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// `diag(left) * core * diag(right)` with every scale entry positive.
///
/// Singularity, determinant sign and total positivity of the full matrix are
/// those of `core`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScaledMatrix {
    pub left_scale: Vec<PositivityWitness>,
    pub core: ExactMatrix,
    pub right_scale: Vec<PositivityWitness>,
}

impl ScaledMatrix {
    /// Entrywise reciprocal of the full matrix, expressed on the same scale structure.
    pub fn hadamard_inverse(&self) -> Result<Self> {
        Ok(Self {
            left_scale: self.left_scale.iter().map(PositivityWitness::recip).collect(),
            core: self.core.hadamard_power(-1)?,
            right_scale: self.right_scale.iter().map(PositivityWitness::recip).collect(),
        })
    }

    /// The full matrix, if every scale evaluates to a rational.
    pub fn to_exact(&self) -> Option<ExactMatrix> {
        let left = self.left_scale.iter().map(PositivityWitness::rational_value).collect::<Option<Vec<_>>>()?;
        let right = self.right_scale.iter().map(PositivityWitness::rational_value).collect::<Option<Vec<_>>>()?;
        Some(&(&ExactMatrix::diag(&left) * &self.core) * &ExactMatrix::diag(&right))
    }
}

/// `∏_{k=0}^{d-1} (x + k)`.
fn rising(x: &ExactScalar, d: usize) -> ExactScalar {
    (0..d).fold(ExactScalar::one(), |acc, k| acc * (x + int(k as i64)))
}

fn pow_u(x: &ExactScalar, m: u32) -> ExactScalar {
    num_traits::Pow::pow(x, m)
}

/// Reduction of `[β(λ_i, μ_j)^m]` through `Γ(x+1) = xΓ(x)`.
///
/// With `d_j = μ_j - μ_1` and `q_j = ∏_{k<d_j}(μ_1+k)`, the core entry is
/// `(q_j / ∏_{k<d_j}(λ_i+μ_1+k))^m` and row `i` carries
/// `Γ(λ_i)^m Γ(μ_1)^m / Γ(λ_i+μ_1)^m`.
pub fn generalized_beta_reduced(params: &BetaParams) -> Result<ScaledMatrix> {
    let d = params.mu_offsets()?;
    let n = params.n();
    let mu1 = &params.mus[0];
    let q: Vec<_> = d.iter().map(|&dj| rising(mu1, dj)).collect();
    let core = ExactMatrix::from_fn(n, n, |i, j| {
        let base = &params.lambdas[i] + mu1;
        pow_u(&(&q[j] / rising(&base, d[j])), params.m)
    });
    let left_scale = params
        .lambdas
        .iter()
        .map(|l| PositivityWitness::gamma_ratio(&[l, mu1], &[&(l + mu1)], params.m))
        .collect();
    Ok(ScaledMatrix { left_scale, core, right_scale: vec![PositivityWitness::one(); n] })
}

/// Reduction of `[1/Γ(λ_i+μ_j)^m]`: row `i` carries `1/Γ(λ_i+μ_1)^m` and the
/// core entry is `1/∏_{k<d_j}(λ_i+μ_1+k)^m`.
///
/// [`ScaledMatrix::hadamard_inverse`] of the result represents `[Γ(λ_i+μ_j)^m]`.
pub fn gamma_reduced_matrix(params: &BetaParams) -> Result<ScaledMatrix> {
    let d = params.mu_offsets()?;
    let n = params.n();
    let mu1 = &params.mus[0];
    let core = ExactMatrix::from_fn(n, n, |i, j| {
        let base = &params.lambdas[i] + mu1;
        pow_u(&rising(&base, d[j]), params.m).recip()
    });
    let left_scale = params
        .lambdas
        .iter()
        .map(|l| PositivityWitness::gamma_ratio(&[], &[&(l + mu1)], params.m))
        .collect();
    Ok(ScaledMatrix { left_scale, core, right_scale: vec![PositivityWitness::one(); n] })
}

/// Reduced form of `[1/β(λ_i, μ_j)^m]`.
pub fn beta_recip_reduced(params: &BetaParams) -> Result<ScaledMatrix> {
    generalized_beta_reduced(params)?.hadamard_inverse()
}
