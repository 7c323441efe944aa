//! Seeded random generators for polynomials, recursive families and
//! generalized beta parameters.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::exact::{int, ratio, ExactScalar};
use crate::matrices::BetaParams;
use crate::polyroots::{FamilySpec, Polynomial};

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform over `{-9..9} / {1..9}`.
pub fn random_coefficient<R: Rng>(rng: &mut R) -> ExactScalar {
    ratio(rng.random_range(-9..=9), rng.random_range(1..=9))
}

fn random_nonzero_coefficient<R: Rng>(rng: &mut R) -> ExactScalar {
    loop {
        let c = random_coefficient(rng);
        if c != int(0) {
            return c;
        }
    }
}

fn random_positive<R: Rng>(rng: &mut R) -> ExactScalar {
    ratio(rng.random_range(1..=9), rng.random_range(1..=9))
}

/// Degree uniform in `0..=max_degree`, nonzero leading coefficient.
pub fn random_polynomial<R: Rng>(rng: &mut R, max_degree: usize) -> Polynomial {
    let deg = rng.random_range(0..=max_degree);
    let mut coeffs: Vec<_> = (0..deg).map(|_| random_coefficient(rng)).collect();
    coeffs.push(random_nonzero_coefficient(rng));
    Polynomial::from_ascending(coeffs)
}

pub fn random_alpha<R: Rng>(rng: &mut R) -> ExactScalar {
    random_positive(rng)
}

/// Depth `1..=4`, `m` in `1..=3`, block lengths `1..=3`, positive `α`, and
/// constants that are not all zero.
pub fn random_family_spec<R: Rng>(rng: &mut R) -> FamilySpec {
    let p = rng.random_range(1..=4);
    let m = rng.random_range(1..=3);
    let blocks = (0..p)
        .map(|_| (0..rng.random_range(1..=3)).map(|_| random_positive(rng)).collect())
        .collect();
    let mut constants: Vec<_> = (0..=p).map(|_| random_coefficient(rng)).collect();
    if constants.iter().all(|c| *c == int(0)) {
        let k = rng.random_range(0..=p);
        constants[k] = random_nonzero_coefficient(rng);
    }
    FamilySpec { m, constants, blocks }
}

/// Parameters on the exact path: `λ` a ladder of `k/2` or `k/3` values, `μ_1`
/// a small rational and integer `μ` increments in `1..=3`.
pub fn random_beta_params<R: Rng>(rng: &mut R, n_max: usize, m_max: u32) -> BetaParams {
    let n = rng.random_range(1..=n_max);
    let m = rng.random_range(1..=m_max);
    let den: i64 = rng.random_range(2..=3);
    let mut k: i64 = rng.random_range(1..=3);
    let mut lambdas = Vec::with_capacity(n);
    for _ in 0..n {
        lambdas.push(ratio(k, den));
        k += rng.random_range(1..=3);
    }
    let mut mu = ratio(rng.random_range(1..=4), rng.random_range(1..=3));
    let mut mus = Vec::with_capacity(n);
    for _ in 0..n {
        mus.push(mu.clone());
        mu += int(rng.random_range(1..=3));
    }
    BetaParams::new(lambdas, mus, m).expect("generated parameters are valid")
}

/// Random integer vector in `{-5..5}^n`, not all zero.
pub fn random_kernel_coefficients<R: Rng>(rng: &mut R, n: usize) -> Vec<ExactScalar> {
    loop {
        let c: Vec<_> = (0..n).map(|_| int(rng.random_range(-5..=5))).collect();
        if c.iter().any(|x| *x != int(0)) {
            return c;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_are_deterministic() {
        let a: Vec<_> = (0..5).map({
            let mut r = rng_from_seed(7);
            move |_| random_polynomial(&mut r, 8)
        }).collect();
        let b: Vec<_> = (0..5).map({
            let mut r = rng_from_seed(7);
            move |_| random_polynomial(&mut r, 8)
        }).collect();
        assert_eq!(a, b);
    }

    #[test]
    fn generated_params_are_valid() {
        let mut rng = rng_from_seed(1);
        for _ in 0..100 {
            let p = random_beta_params(&mut rng, 5, 3);
            assert!(p.n() <= 5 && (1..=3).contains(&p.m));
            assert!(p.mu_offsets().is_ok());
            let f = random_family_spec(&mut rng);
            assert!(f.validate().is_ok());
            assert!(f.constants.iter().any(|c| *c != int(0)));
            assert!(!random_polynomial(&mut rng, 8).is_zero());
        }
    }
}
