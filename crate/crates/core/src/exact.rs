//! Rational scalars and dense exact matrices.
//!
//! Scalars are `BigRational` values, which are reduced to lowest terms with a
//! positive denominator after every operation. Matrices are stored row-major.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational in canonical form.
pub type ExactScalar = BigRational;

/// Binary operation selector for [`scalar_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn scalar_arith(a: &ExactScalar, b: &ExactScalar, op: ArithOp) -> Result<ExactScalar> {
    Ok(match op {
        ArithOp::Add => a + b,
        ArithOp::Sub => a - b,
        ArithOp::Mul => a * b,
        ArithOp::Div => {
            if b.is_zero() {
                return Err(Error::DivisionByZero);
            }
            a / b
        }
    })
}

pub fn int(v: i64) -> ExactScalar {
    BigRational::from_integer(BigInt::from(v))
}

pub fn ratio(num: i64, den: i64) -> ExactScalar {
    assert!(den != 0, "ratio with zero denominator");
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"p/q"` or `"p"` into a canonical rational.
pub fn parse_scalar(s: &str) -> Result<ExactScalar> {
    let t = s.trim();
    if let Some((p, q)) = t.split_once('/') {
        let p = BigInt::from_str(p.trim()).map_err(|e| Error::Parse(format!("{t:?}: {e}")))?;
        let q = BigInt::from_str(q.trim()).map_err(|e| Error::Parse(format!("{t:?}: {e}")))?;
        if q.is_zero() {
            return Err(Error::Parse(format!("{t:?}: zero denominator")));
        }
        Ok(BigRational::new(p, q))
    } else {
        BigInt::from_str(t)
            .map(BigRational::from_integer)
            .map_err(|e| Error::Parse(format!("{t:?}: {e}")))
    }
}

/// Formats a scalar as `"p/q"`, or `"p"` when the denominator is 1.
pub fn format_scalar(x: &ExactScalar) -> String {
    x.to_string()
}

/// -1, 0 or 1.
pub fn sign(x: &ExactScalar) -> i32 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

pub fn factorial(k: u64) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, v| acc * BigInt::from(v))
}

/// Binomial coefficient C(r, k) with the convention C(r, k) = 0 when
/// k < 0, r < 0 or k > r.
pub fn binomial(r: i64, k: i64) -> BigInt {
    if r < 0 || k < 0 || k > r {
        return BigInt::zero();
    }
    let k = k.min(r - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(r - i) / BigInt::from(i + 1);
    }
    acc
}

/// Exact power with an integer exponent. Negative exponents require `x != 0`.
pub fn pow_scalar(x: &ExactScalar, m: i32) -> Result<ExactScalar> {
    if m < 0 && x.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(num_traits::Pow::pow(x, m))
}

/// (-1)^e as a scalar.
pub fn sign_power(e: i64) -> ExactScalar {
    if e.rem_euclid(2) == 0 {
        int(1)
    } else {
        int(-1)
    }
}

/// Least common multiple of the denominators in `xs`.
pub(crate) fn denominator_lcm<'a>(xs: impl IntoIterator<Item = &'a ExactScalar>) -> BigInt {
    xs.into_iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

/// Dense row-major matrix of exact rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<ExactScalar>,
}

impl ExactMatrix {
    pub fn from_entries(rows: usize, cols: usize, entries: Vec<ExactScalar>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(Self { rows, cols, entries })
    }

    pub fn from_rows(rows: Vec<Vec<ExactScalar>>) -> Result<Self> {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != n_cols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Self::from_entries(n_rows, n_cols, rows.into_iter().flatten().collect())
    }

    /// Convenience constructor from small integer pairs `(num, den)`.
    pub fn from_ratios(rows: &[&[(i64, i64)]]) -> Self {
        let data = rows
            .iter()
            .map(|r| r.iter().map(|&(p, q)| ratio(p, q)).collect())
            .collect();
        Self::from_rows(data).expect("rectangular literal")
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let data = rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect();
        Self::from_rows(data).expect("rectangular literal")
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> ExactScalar) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Self { rows, cols, entries }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| ExactScalar::zero())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { int(1) } else { int(0) })
    }

    pub fn diag(values: &[ExactScalar]) -> Self {
        let n = values.len();
        Self::from_fn(n, n, |i, j| if i == j { values[i].clone() } else { ExactScalar::zero() })
    }

    pub fn n_rows(&self) -> usize {
        self.rows
    }

    pub fn n_cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[ExactScalar] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &ExactScalar {
        &self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[ExactScalar] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<ExactScalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub(crate) fn require_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare { rows: self.rows, cols: self.cols })
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Exact symmetry check; returns the first asymmetric cell on failure.
    pub fn check_symmetric(&self) -> Result<()> {
        let n = self.require_square()?;
        for i in 0..n {
            for j in (i + 1)..n {
                if self.get(i, j) != self.get(j, i) {
                    return Err(Error::NotSymmetric { row: i, col: j });
                }
            }
        }
        Ok(())
    }

    pub fn is_symmetric(&self) -> bool {
        self.check_symmetric().is_ok()
    }

    pub fn mat_mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&ExactScalar, &ExactScalar) -> ExactScalar) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| f(a, b)).collect();
        Ok(Self { rows: self.rows, cols: self.cols, entries })
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a - b)
    }

    /// Entrywise (Schur) product.
    pub fn hadamard_product(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a * b)
    }

    /// Entrywise `m`-th power. `m = -1` gives the Hadamard inverse.
    pub fn hadamard_power(&self, m: i32) -> Result<Self> {
        if m < 0 {
            if let Some(pos) = self.entries.iter().position(Zero::is_zero) {
                return Err(Error::ZeroEntry { row: pos / self.cols, col: pos % self.cols });
            }
        }
        let entries = self
            .entries
            .iter()
            .map(|x| pow_scalar(x, m))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { rows: self.rows, cols: self.cols, entries })
    }

    pub fn scale(&self, c: &ExactScalar) -> Self {
        Self { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(|x| x * c).collect() }
    }

    /// `self + t I`.
    pub fn shift_diagonal(&self, t: &ExactScalar) -> Result<Self> {
        let n = self.require_square()?;
        let mut out = self.clone();
        for i in 0..n {
            out[(i, i)] += t;
        }
        Ok(out)
    }

    pub fn trace(&self) -> Result<ExactScalar> {
        let n = self.require_square()?;
        Ok((0..n).fold(ExactScalar::zero(), |acc, i| acc + self.get(i, i)))
    }

    /// Submatrix with the given (not necessarily contiguous) rows and columns.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }

    /// Top-left `k`x`k` block.
    pub fn leading_block(&self, k: usize) -> Self {
        Self::from_fn(k, k, |i, j| self.get(i, j).clone())
    }

    pub fn is_integral(&self) -> bool {
        self.entries.iter().all(|x| x.is_integer())
    }

    pub fn is_lower_triangular(&self) -> bool {
        (0..self.rows).all(|i| ((i + 1)..self.cols).all(|j| self.get(i, j).is_zero()))
    }

    pub fn is_upper_triangular(&self) -> bool {
        (0..self.rows).all(|i| (0..i.min(self.cols)).all(|j| self.get(i, j).is_zero()))
    }

    /// First cell where `self` and `other` differ, as `(row, col, self, other)`.
    pub fn first_difference(&self, other: &Self) -> Option<(usize, usize, ExactScalar, ExactScalar)> {
        if self.rows != other.rows || self.cols != other.cols {
            return Some((self.rows, self.cols, int(self.rows as i64), int(other.rows as i64)));
        }
        self.entries
            .iter()
            .zip(&other.entries)
            .position(|(a, b)| a != b)
            .map(|p| {
                let (i, j) = (p / self.cols, p % self.cols);
                (i, j, self.get(i, j).clone(), other.get(i, j).clone())
            })
    }

    /// Entries as `"p/q"` strings, row by row.
    pub fn to_string_rows(&self) -> Vec<Vec<String>> {
        (0..self.rows).map(|i| self.row(i).iter().map(format_scalar).collect()).collect()
    }

    pub fn from_string_rows<S: AsRef<str>>(rows: &[Vec<S>]) -> Result<Self> {
        let parsed = rows
            .iter()
            .map(|r| r.iter().map(|s| parse_scalar(s.as_ref())).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(parsed)
    }
}

impl Index<(usize, usize)> for ExactMatrix {
    type Output = ExactScalar;

    fn index(&self, (i, j): (usize, usize)) -> &ExactScalar {
        &self.entries[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for ExactMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut ExactScalar {
        &mut self.entries[i * self.cols + j]
    }
}

impl Mul for &ExactMatrix {
    type Output = ExactMatrix;

    /// Panics on a dimension mismatch; use [`ExactMatrix::mat_mul`] for a checked product.
    fn mul(self, rhs: &ExactMatrix) -> ExactMatrix {
        self.mat_mul(rhs).expect("matrix dimensions must agree")
    }
}

impl Add for &ExactMatrix {
    type Output = ExactMatrix;

    fn add(self, rhs: &ExactMatrix) -> ExactMatrix {
        self.try_add(rhs).expect("matrix dimensions must agree")
    }
}

impl Sub for &ExactMatrix {
    type Output = ExactMatrix;

    fn sub(self, rhs: &ExactMatrix) -> ExactMatrix {
        self.try_sub(rhs).expect("matrix dimensions must agree")
    }
}

impl Neg for &ExactMatrix {
    type Output = ExactMatrix;

    fn neg(self) -> ExactMatrix {
        self.scale(&int(-1))
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExactMatrix{:?}", self.to_string_rows())
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.to_string_rows().iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Counts of positive, zero and negative eigenvalues.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct InertiaTriple {
    pub positive: usize,
    pub zero: usize,
    pub negative: usize,
}

impl InertiaTriple {
    pub fn new(positive: usize, zero: usize, negative: usize) -> Self {
        Self { positive, zero, negative }
    }

    pub fn dimension(&self) -> usize {
        self.positive + self.zero + self.negative
    }
}

impl fmt::Display for InertiaTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.positive, self.zero, self.negative)
    }
}
