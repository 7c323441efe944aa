//! Seeded randomized sweeps over the root-counting lemmas and the
//! generalized-matrix theorems. Each sweep records its seed and every failure.

use crate::error::Result;
use crate::exact::ExactScalar;
use crate::polyroots::{build_family, descartes_bound, mul_linear, sign_changes, sturm_positive_roots};
use crate::positivity::{is_totally_positive_exhaustive, verify_nonsingularity, verify_tp_hadamard_power};
use crate::matrices::beta_recip_reduced;
use crate::sampling::{
    random_alpha, random_beta_params, random_family_spec, random_polynomial, rng_from_seed,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepFailure {
    pub sample: usize,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepReport {
    pub name: &'static str,
    pub seed: u64,
    pub samples: usize,
    pub failures: Vec<SweepFailure>,
}

impl SweepReport {
    fn new(name: &'static str, seed: u64, samples: usize) -> Self {
        Self { name, seed, samples, failures: Vec::new() }
    }

    fn fail(&mut self, sample: usize, detail: String) {
        self.failures.push(SweepFailure { sample, detail });
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Positive roots never exceed sign changes, and the gap is even whenever the
/// constant term is nonzero.
pub fn descartes_sweep(seed: u64, samples: usize) -> Result<SweepReport> {
    let mut rng = rng_from_seed(seed);
    let mut report = SweepReport::new("descartes", seed, samples);
    for s in 0..samples {
        let p = random_polynomial(&mut rng, 8);
        let z = sturm_positive_roots(&p)?;
        let n = descartes_bound(&p)?;
        if z > n {
            report.fail(s, format!("{p}: {z} positive roots > {n} sign changes"));
        } else if p.coeff(0) != ExactScalar::from_integer(0.into()) && (n - z) % 2 != 0 {
            report.fail(s, format!("{p}: sign changes {n} and roots {z} differ by an odd number"));
        }
    }
    Ok(report)
}

/// `N(p (x + α)) <= N(p)` for `α > 0`.
pub fn linear_factor_sweep(seed: u64, samples: usize) -> Result<SweepReport> {
    let mut rng = rng_from_seed(seed);
    let mut report = SweepReport::new("linear-factor", seed, samples);
    for s in 0..samples {
        let p = random_polynomial(&mut rng, 8);
        let alpha = random_alpha(&mut rng);
        let before = sign_changes(&p)?;
        let after = sign_changes(&mul_linear(&p, &alpha)?)?;
        if after > before {
            report.fail(s, format!("{p} times (x + {alpha}): {after} > {before}"));
        }
    }
    Ok(report)
}

/// `f_p` has at most `p` positive roots and leading coefficient equal to the
/// first nonzero constant.
pub fn family_sweep(seed: u64, samples: usize) -> Result<SweepReport> {
    let mut rng = rng_from_seed(seed);
    let mut report = SweepReport::new("family", seed, samples);
    for s in 0..samples {
        let spec = random_family_spec(&mut rng);
        let f = build_family(&spec)?;
        let first = spec.constants.iter().find(|c| **c != ExactScalar::from_integer(0.into()));
        if f.leading() != first {
            report.fail(s, format!("{f}: leading coefficient differs from first nonzero constant"));
            continue;
        }
        let z = sturm_positive_roots(&f)?;
        if z > spec.depth() {
            report.fail(s, format!("{f}: {z} positive roots > depth {}", spec.depth()));
        }
    }
    Ok(report)
}

/// Reduced cores of the generalized beta and reciprocal-gamma matrices are nonsingular.
pub fn nonsingularity_sweep(seed: u64, samples: usize, n_max: usize, m_max: u32) -> Result<SweepReport> {
    let mut rng = rng_from_seed(seed);
    let mut report = SweepReport::new("nonsingular", seed, samples);
    for s in 0..samples {
        let params = random_beta_params(&mut rng, n_max, m_max);
        let r = verify_nonsingularity(&params)?;
        if !r.holds {
            report.fail(s, format!("{params:?}: {r}"));
        }
    }
    Ok(report)
}

/// Reduced Hadamard-power reciprocal-beta cores are totally positive; up to
/// `exhaustive_max` the contiguous-minor verdict is compared with exhaustive enumeration.
pub fn tp_sweep(seed: u64, samples: usize, n_max: usize, m_max: u32, exhaustive_max: usize) -> Result<SweepReport> {
    let mut rng = rng_from_seed(seed);
    let mut report = SweepReport::new("tp", seed, samples);
    for s in 0..samples {
        let params = random_beta_params(&mut rng, n_max, m_max);
        let r = verify_tp_hadamard_power(&params)?;
        if !r.holds {
            report.fail(s, format!("{params:?}: {r}"));
            continue;
        }
        if params.n() <= exhaustive_max {
            let core = beta_recip_reduced(&params)?.core;
            if !is_totally_positive_exhaustive(&core, exhaustive_max)?.holds {
                report.fail(s, format!("{params:?}: exhaustive minors disagree"));
            }
        }
    }
    Ok(report)
}
