//! Exact univariate polynomials over Q with sign-change counting, Sturm
//! sequences and real root isolation.
//!
//! Positive roots are always counted with multiplicity: a polynomial is first
//! split into squarefree factors (Yun), and Sturm counts of each factor are
//! weighted by the factor's multiplicity.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{format_scalar, int, ratio, sign, ExactScalar};
use crate::matrices::BetaParams;

/// Polynomial with rational coefficients.
///
/// Coefficients are stored internally in ascending order and exposed in
/// descending order. The zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<ExactScalar>,
}

impl Polynomial {
    /// Builds from coefficients in descending degree order, `a_p, ..., a_0`.
    pub fn from_descending(coeffs: Vec<ExactScalar>) -> Self {
        let mut c = coeffs;
        c.reverse();
        Self::from_ascending(c)
    }

    /// Builds from coefficients in ascending degree order, `a_0, ..., a_p`.
    pub fn from_ascending(mut coeffs: Vec<ExactScalar>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_ints_descending(coeffs: &[i64]) -> Self {
        Self::from_descending(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: ExactScalar) -> Self {
        Self::from_ascending(vec![c])
    }

    pub fn x() -> Self {
        Self::from_ascending(vec![ExactScalar::zero(), ExactScalar::one()])
    }

    /// `x + a`.
    pub fn linear(a: ExactScalar) -> Self {
        Self::from_ascending(vec![a, ExactScalar::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficients in descending order.
    pub fn coefficients(&self) -> Vec<ExactScalar> {
        self.coeffs.iter().rev().cloned().collect()
    }

    pub fn ascending(&self) -> &[ExactScalar] {
        &self.coeffs
    }

    /// Coefficient of `x^k`.
    pub fn coeff(&self, k: usize) -> ExactScalar {
        self.coeffs.get(k).cloned().unwrap_or_else(ExactScalar::zero)
    }

    pub fn leading(&self) -> Option<&ExactScalar> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &ExactScalar) -> ExactScalar {
        self.coeffs.iter().rev().fold(ExactScalar::zero(), |acc, c| acc * x + c)
    }

    /// Sign of `p(x)` as `x -> 0+`: the sign of the lowest nonzero coefficient.
    pub fn sign_at_zero_plus(&self) -> i32 {
        self.coeffs.iter().find(|c| !c.is_zero()).map_or(0, sign)
    }

    pub fn sign_at_pos_infinity(&self) -> i32 {
        self.leading().map_or(0, sign)
    }

    pub fn sign_at_neg_infinity(&self) -> i32 {
        match self.degree() {
            None => 0,
            Some(d) => self.sign_at_pos_infinity() * if d % 2 == 0 { 1 } else { -1 },
        }
    }

    pub fn derivative(&self) -> Self {
        Self::from_ascending(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * int(k as i64))
                .collect(),
        )
    }

    pub fn scale(&self, c: &ExactScalar) -> Self {
        Self::from_ascending(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::from_ascending((0..len).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::from_ascending((0..len).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![ExactScalar::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::from_ascending(out)
    }

    pub fn pow(&self, m: u32) -> Self {
        (0..m).fold(Self::constant(ExactScalar::one()), |acc, _| acc.mul(self))
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead = divisor.leading().expect("nonzero divisor");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![ExactScalar::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] / lead;
            if !c.is_zero() {
                for (i, d) in divisor.coeffs.iter().enumerate() {
                    rem[k + i] -= &c * d;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Self::from_ascending(quot), Self::from_ascending(rem)))
    }

    /// Quotient of an exact division; errors if the remainder is nonzero.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(divisor)?;
        if !r.is_zero() {
            return Err(Error::Internal("polynomial division left a remainder".into()));
        }
        Ok(q)
    }

    /// Divides by the leading coefficient. The zero polynomial is returned unchanged.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(l) => self.scale(&l.recip()),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// `p(-x)`.
    pub fn reflect(&self) -> Self {
        Self::from_ascending(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 0 { c.clone() } else { -c })
                .collect(),
        )
    }

    /// `p(x + t)` by repeated synthetic division.
    pub fn taylor_shift(&self, t: &ExactScalar) -> Self {
        let mut c = self.coeffs.clone();
        let n = c.len();
        for i in 0..n {
            for k in (i..n.saturating_sub(1)).rev() {
                let add = &c[k + 1] * t;
                c[k] += add;
            }
        }
        Self::from_ascending(c)
    }

    /// Splits off the root at zero: returns `(k, q)` with `p = x^k q` and `q(0) != 0`.
    pub fn strip_zero_roots(&self) -> (usize, Self) {
        let k = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        (k, Self::from_ascending(self.coeffs[k..].to_vec()))
    }

    /// Cauchy bound: every real root lies strictly inside `(-B, B)`.
    pub fn root_bound(&self) -> ExactScalar {
        let Some(lead) = self.leading() else {
            return ExactScalar::one();
        };
        let max = self
            .coeffs
            .iter()
            .rev()
            .skip(1)
            .map(|c| (c / lead).abs())
            .fold(ExactScalar::zero(), |m, v| if v > m { v } else { m });
        ExactScalar::one() + max
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial{:?}", self.coefficients().iter().map(format_scalar).collect::<Vec<_>>())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = k == 0 || !mag.is_one();
            if show_coeff {
                write!(f, "{}", format_scalar(&mag))?;
            }
            match k {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

/// Number of sign alternations in the nonzero coefficients, read from the leading term down.
pub fn sign_changes(p: &Polynomial) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(count_sign_changes(p.ascending().iter().rev().map(sign)))
}

fn count_sign_changes(signs: impl IntoIterator<Item = i32>) -> usize {
    let mut prev = 0;
    let mut changes = 0;
    for s in signs.into_iter().filter(|&s| s != 0) {
        if prev != 0 && s != prev {
            changes += 1;
        }
        prev = s;
    }
    changes
}

/// Upper bound on the number of positive roots, counted with multiplicity.
pub fn descartes_bound(p: &Polynomial) -> Result<usize> {
    sign_changes(p)
}

/// Squarefree decomposition `p = c * ∏ f_i^i` (Yun). Returns the nonconstant
/// monic factors with their multiplicities.
pub fn squarefree_decomposition(p: &Polynomial) -> Result<Vec<(Polynomial, usize)>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut out = Vec::new();
    if p.degree() == Some(0) {
        return Ok(out);
    }
    let f = p.monic();
    let df = f.derivative();
    let a0 = f.gcd(&df);
    let mut b = f.exact_div(&a0)?;
    let mut d = df.exact_div(&a0)?.sub(&b.derivative());
    let mut mult = 1;
    while b.degree().is_some_and(|deg| deg > 0) {
        let a = b.gcd(&d);
        if a.degree().is_some_and(|deg| deg > 0) {
            out.push((a.clone(), mult));
        }
        let b_next = b.exact_div(&a)?;
        d = d.exact_div(&a)?.sub(&b_next.derivative());
        b = b_next;
        mult += 1;
    }
    Ok(out)
}

/// Sturm sequence `p, p', -rem(p, p'), ...`, each member scaled by a positive
/// constant so the leading coefficient is ±1.
pub fn sturm_sequence(p: &Polynomial) -> Vec<Polynomial> {
    let normalize = |q: Polynomial| match q.leading() {
        Some(l) => {
            let s = l.abs().recip();
            q.scale(&s)
        }
        None => q,
    };
    let mut seq = Vec::new();
    if p.is_zero() {
        return seq;
    }
    seq.push(normalize(p.clone()));
    let d = p.derivative();
    if d.is_zero() {
        return seq;
    }
    seq.push(normalize(d));
    loop {
        let k = seq.len();
        let (_, r) = seq[k - 2].div_rem(&seq[k - 1]).expect("nonzero");
        if r.is_zero() {
            break;
        }
        seq.push(normalize(r.scale(&int(-1))));
    }
    seq
}

fn variations_at(seq: &[Polynomial], x: &ExactScalar) -> usize {
    count_sign_changes(seq.iter().map(|q| sign(&q.eval(x))))
}

fn variations_zero_plus(seq: &[Polynomial]) -> usize {
    count_sign_changes(seq.iter().map(Polynomial::sign_at_zero_plus))
}

fn variations_pos_inf(seq: &[Polynomial]) -> usize {
    count_sign_changes(seq.iter().map(Polynomial::sign_at_pos_infinity))
}

/// Distinct roots of a squarefree polynomial in `(0, +inf)`.
fn sturm_distinct_positive(p: &Polynomial) -> usize {
    let seq = sturm_sequence(p);
    variations_zero_plus(&seq).saturating_sub(variations_pos_inf(&seq))
}

/// Number of positive real roots counted with multiplicity.
pub fn sturm_positive_roots(p: &Polynomial) -> Result<usize> {
    let factors = squarefree_decomposition(p)?;
    Ok(factors.iter().map(|(f, k)| k * sturm_distinct_positive(f)).sum())
}

/// Number of negative real roots counted with multiplicity.
pub fn sturm_negative_roots(p: &Polynomial) -> Result<usize> {
    sturm_positive_roots(&p.reflect())
}

/// Number of real roots (with multiplicity) of any nonzero polynomial.
pub fn sturm_real_roots(p: &Polynomial) -> Result<usize> {
    let factors = squarefree_decomposition(p)?;
    Ok(factors
        .iter()
        .map(|(f, k)| {
            let seq = sturm_sequence(f);
            let neg = count_sign_changes(seq.iter().map(Polynomial::sign_at_neg_infinity));
            k * neg.saturating_sub(variations_pos_inf(&seq))
        })
        .sum())
}

/// Closed interval `[lo, hi]` containing exactly one root of a squarefree
/// factor; `lo == hi` when the root is known exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootEnclosure {
    pub lo: ExactScalar,
    pub hi: ExactScalar,
    pub multiplicity: usize,
    factor: usize,
}

impl RootEnclosure {
    pub fn width(&self) -> ExactScalar {
        &self.hi - &self.lo
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }
}

/// Isolated real roots of a polynomial, refinable to any width.
#[derive(Debug, Clone)]
pub struct RealRoots {
    factors: Vec<Polynomial>,
    roots: Vec<RootEnclosure>,
}

impl RealRoots {
    /// Isolates every real root of `p` (with multiplicity) into disjoint
    /// intervals per squarefree factor.
    pub fn isolate(p: &Polynomial) -> Result<Self> {
        let decomposition = squarefree_decomposition(p)?;
        let mut factors = Vec::new();
        let mut roots = Vec::new();
        for (idx, (f, mult)) in decomposition.into_iter().enumerate() {
            let seq = sturm_sequence(&f);
            let bound = f.root_bound();
            let lo = -bound.clone();
            isolate_in(&f, &seq, lo, bound, mult, idx, &mut roots);
            factors.push(f);
        }
        roots.sort_by(|a, b| a.lo.cmp(&b.lo));
        Ok(Self { factors, roots })
    }

    pub fn roots(&self) -> &[RootEnclosure] {
        &self.roots
    }

    /// Total count with multiplicity.
    pub fn count(&self) -> usize {
        self.roots.iter().map(|r| r.multiplicity).sum()
    }

    pub fn max_width(&self) -> ExactScalar {
        self.roots.iter().map(RootEnclosure::width).max().unwrap_or_else(ExactScalar::zero)
    }

    /// Bisects every enclosure until its width is at most `eps`.
    pub fn refine(&mut self, eps: &ExactScalar) {
        let two = int(2);
        for r in &mut self.roots {
            let f = &self.factors[r.factor];
            let mut s_lo = sign(&f.eval(&r.lo));
            while r.width() > *eps {
                let mid = (&r.lo + &r.hi) / &two;
                let s_mid = sign(&f.eval(&mid));
                if s_mid == 0 {
                    r.lo = mid.clone();
                    r.hi = mid;
                    break;
                }
                if s_mid == s_lo {
                    r.lo = mid;
                    s_lo = s_mid;
                } else {
                    r.hi = mid;
                }
            }
        }
    }
}

/// Recursive Sturm bisection over the open interval `(a, b)`, where neither
/// endpoint is a root of `f`.
fn isolate_in(
    f: &Polynomial,
    seq: &[Polynomial],
    a: ExactScalar,
    b: ExactScalar,
    mult: usize,
    factor: usize,
    out: &mut Vec<RootEnclosure>,
) {
    let count = variations_at(seq, &a).saturating_sub(variations_at(seq, &b));
    if count == 0 {
        return;
    }
    if count == 1 {
        out.push(RootEnclosure { lo: a, hi: b, multiplicity: mult, factor });
        return;
    }
    // Split at a point that is not itself a root; at most deg f candidates fail.
    let width = &b - &a;
    let mid = (2..)
        .flat_map(|den: i64| (1..den).map(move |num| ratio(num, den)))
        .map(|frac| &a + &width * frac)
        .find(|x| !f.eval(x).is_zero())
        .expect("finitely many roots");
    isolate_in(f, seq, a, mid.clone(), mult, factor, out);
    isolate_in(f, seq, mid, b, mult, factor, out);
}

/// `p(x) (x + α)` for `α > 0`.
pub fn mul_linear(p: &Polynomial, alpha: &ExactScalar) -> Result<Polynomial> {
    if !alpha.is_positive() {
        return Err(Error::InvalidParameter(format!("alpha must be positive, got {}", format_scalar(alpha))));
    }
    Ok(p.mul(&Polynomial::linear(alpha.clone())))
}

/// Parameters of the recursive family
/// `f_1 = c_1 ∏_t (x + α_1t)^m + c_2`, `f_k = f_{k-1} ∏_t (x + α_kt)^m + c_{k+1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySpec {
    pub m: u32,
    pub constants: Vec<ExactScalar>,
    pub blocks: Vec<Vec<ExactScalar>>,
}

impl FamilySpec {
    /// Number of recursion steps `p`.
    pub fn depth(&self) -> usize {
        self.blocks.len()
    }

    pub fn validate(&self) -> Result<()> {
        if self.m == 0 {
            return Err(Error::InvalidParameter("m must be at least 1".into()));
        }
        if self.blocks.is_empty() {
            return Err(Error::InvalidParameter("at least one block is required".into()));
        }
        if self.constants.len() != self.blocks.len() + 1 {
            return Err(Error::InvalidParameter(format!(
                "{} blocks need {} constants, got {}",
                self.blocks.len(),
                self.blocks.len() + 1,
                self.constants.len()
            )));
        }
        for (k, block) in self.blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::InvalidParameter(format!("block {} is empty", k + 1)));
            }
            if let Some(a) = block.iter().find(|a| !a.is_positive()) {
                return Err(Error::InvalidParameter(format!("alpha {} in block {} is not positive", format_scalar(a), k + 1)));
            }
        }
        Ok(())
    }
}

fn block_product(block: &[ExactScalar], m: u32) -> Polynomial {
    block
        .iter()
        .fold(Polynomial::constant(ExactScalar::one()), |acc, a| acc.mul(&Polynomial::linear(a.clone()).pow(m)))
}

/// Builds `f_p` by the recursion.
pub fn build_family(spec: &FamilySpec) -> Result<Polynomial> {
    spec.validate()?;
    let mut f = Polynomial::constant(spec.constants[0].clone());
    for (block, c) in spec.blocks.iter().zip(&spec.constants[1..]) {
        f = f.mul(&block_product(block, spec.m)).add(&Polynomial::constant(c.clone()));
    }
    Ok(f)
}

/// The family spec whose `f_{n-1}` clears the gamma denominators of
/// `Σ_j c_j / Γ(x + μ_j)^m`: block `k` holds `μ_k, μ_k + 1, ..., μ_{k+1} - 1`.
pub fn beta_kernel_family(params: &BetaParams, c: &[ExactScalar]) -> Result<FamilySpec> {
    let offsets = params.mu_offsets()?;
    if c.len() != params.n() {
        return Err(Error::InvalidParameter(format!("{} coefficients for n = {}", c.len(), params.n())));
    }
    let blocks = offsets
        .windows(2)
        .zip(&params.mus)
        .map(|(w, mu)| (0..(w[1] - w[0])).map(|t| mu + int(t as i64)).collect())
        .collect();
    Ok(FamilySpec { m: params.m, constants: c.to_vec(), blocks })
}

/// `h_{n-1}(x) = Σ_{j<n} c_j ∏_{k=0}^{μ_n-μ_j-1} (x+μ_j+k)^m + c_n`.
pub fn beta_kernel_polynomial(params: &BetaParams, c: &[ExactScalar]) -> Result<Polynomial> {
    if c.iter().all(Zero::is_zero) {
        return Err(Error::InvalidParameter("coefficient vector is all zero".into()));
    }
    let spec = beta_kernel_family(params, c)?;
    if spec.blocks.is_empty() {
        return Ok(Polynomial::constant(c[0].clone()));
    }
    build_family(&spec)
}
