//! Acceptance criteria. Run with
//! `cargo test -p betamat-core --release --test acceptance -- --nocapture`
//! to see one PASS/FAIL line per criterion.

use std::time::{Duration, Instant};

use betamat::exact::{ratio, sign};
use betamat::identities::{
    closed_form_det, closed_form_inverse, closed_form_lu, expected_inertia, pascal_det_sign, verify_a_involution,
    verify_b_inverse, verify_det_sign_parity, verify_k_factorization, verify_summation_grid,
};
use betamat::linalg::{det_bareiss, inertia_symmetric, inverse_exact};
use betamat::matrices::{beta_matrix, pascal_hadamard_inverse};
use betamat::orthogonality::{bj_orthogonal_to_identity, find_violation};
use betamat::sweeps::{descartes_sweep, family_sweep, linear_factor_sweep, nonsingularity_sweep, tp_sweep};

const SEED: u64 = 20_240_917;

struct Outcome {
    id: u32,
    title: &'static str,
    failures: Vec<String>,
    elapsed: Duration,
    budget: Duration,
}

fn run(id: u32, title: &'static str, budget_secs: u64, body: impl FnOnce(&mut Vec<String>)) -> Outcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    body(&mut failures);
    Outcome { id, title, failures, elapsed: start.elapsed(), budget: Duration::from_secs(budget_secs) }
}

fn ac1_determinant() -> Outcome {
    run(1, "det [β(i,j)] equals the closed form, n = 1..12", 5, |f| {
        for n in 1..=12 {
            let det = det_bareiss(&beta_matrix(n).unwrap()).unwrap();
            if det != closed_form_det(n) {
                f.push(format!("n={n}: {det} != {}", closed_form_det(n)));
            }
        }
    })
}

fn ac2_inertia() -> Outcome {
    run(2, "inertia table for [β(i,j)] and the Pascal Hadamard inverse, n <= 12", 10, |f| {
        for n in 1..=12 {
            for (name, m) in [("beta", beta_matrix(n).unwrap()), ("pascal", pascal_hadamard_inverse(n).unwrap())] {
                let got = inertia_symmetric(&m).unwrap();
                if got != expected_inertia(n) {
                    f.push(format!("{name} n={n}: {got} != {}", expected_inertia(n)));
                }
            }
        }
    })
}

fn ac3_integer_inverse() -> Outcome {
    run(3, "inverse of [β(i,j)] is integral and equals the closed form, n = 1..10", 10, |f| {
        for n in 1..=10 {
            let inv = inverse_exact(&beta_matrix(n).unwrap()).unwrap();
            if !inv.is_integral() {
                f.push(format!("n={n}: non-integer inverse"));
            }
            if let Some(d) = inv.first_difference(&closed_form_inverse(n)) {
                f.push(format!("n={n}: cell {d:?}"));
            }
        }
    })
}

fn ac4_lu() -> Outcome {
    run(4, "closed-form LU factors are triangular with L U = inverse, n = 1..10", 5, |f| {
        for n in 1..=10 {
            let (l, u) = closed_form_lu(n);
            if !l.is_lower_triangular() || !u.is_upper_triangular() {
                f.push(format!("n={n}: triangularity"));
            }
            let inv = inverse_exact(&beta_matrix(n).unwrap()).unwrap();
            if &l * &u != inv {
                f.push(format!("n={n}: L U != inverse"));
            }
        }
    })
}

fn ac5_identities() -> Outcome {
    run(5, "K = D2 B A D1, A^2 = I, B B^-1 = I, summation identity, n = 1..10", 10, |f| {
        for n in 1..=10 {
            let reports = [
                verify_k_factorization(n).unwrap(),
                verify_a_involution(n).unwrap(),
                verify_b_inverse(n).unwrap(),
                verify_summation_grid(n),
            ];
            f.extend(reports.iter().filter(|r| !r.holds).map(ToString::to_string));
        }
    })
}

fn ac6_sign_laws() -> Outcome {
    run(6, "determinant sign parity (n = 1..11) and Pascal sign (-1)^(n(n-1)/2) (n = 1..10)", 5, |f| {
        for n in 1..=11 {
            let r = verify_det_sign_parity(n).unwrap();
            if !r.holds {
                f.push(r.to_string());
            }
        }
        for n in 1..=10 {
            let s = sign(&det_bareiss(&pascal_hadamard_inverse(n).unwrap()).unwrap());
            if s != pascal_det_sign(n) {
                f.push(format!("pascal n={n}: sign {s}"));
            }
            // the superseded (-1)^(n(n+1)/2) differs by (-1)^n, so it is wrong for every odd n
            let old = if (n * (n + 1) / 2) % 2 == 0 { 1 } else { -1 };
            if n % 2 == 1 && old == s {
                f.push(format!("pascal n={n}: old sign law unexpectedly matches"));
            }
        }
    })
}

fn ac7_birkhoff_james() -> Outcome {
    run(7, "BJ-orthogonal to I iff n even (n <= 12); certified violations for odd n <= 7", 60, |f| {
        for n in 1..=12 {
            let r = bj_orthogonal_to_identity(&beta_matrix(n).unwrap()).unwrap();
            if r.orthogonal != (n % 2 == 0) {
                f.push(format!("n={n}: orthogonal = {}", r.orthogonal));
            }
        }
        let rel = ratio(1, 1_000_000);
        for n in (1..=7).step_by(2) {
            match find_violation(&beta_matrix(n).unwrap()).unwrap() {
                None => f.push(format!("n={n}: no violation found")),
                Some(v) => {
                    let scale = v.norm_at_zero.hi.clone();
                    if v.norm_at_t.hi >= v.norm_at_zero.lo {
                        f.push(format!("n={n}: decrease not certified"));
                    }
                    if v.norm_at_zero.width() > &rel * &scale || v.norm_at_t.width() > &rel * &scale {
                        f.push(format!("n={n}: interval wider than 1e-6 of scale"));
                    }
                }
            }
        }
    })
}

fn ac8_descartes() -> Outcome {
    run(8, "Descartes bound, linear-factor lemma and recursive-family bound on random inputs", 30, |f| {
        for r in [
            descartes_sweep(SEED, 1000).unwrap(),
            linear_factor_sweep(SEED + 1, 1000).unwrap(),
            family_sweep(SEED + 2, 200).unwrap(),
        ] {
            f.extend(r.failures.iter().map(|x| format!("{} #{}: {}", r.name, x.sample, x.detail)));
        }
    })
}

fn ac9_nonsingular() -> Outcome {
    run(9, "200 random parameter sets: reduced cores nonsingular", 30, |f| {
        let r = nonsingularity_sweep(SEED + 3, 200, 5, 3).unwrap();
        f.extend(r.failures.iter().map(|x| format!("#{}: {}", x.sample, x.detail)));
    })
}

fn ac10_total_positivity() -> Outcome {
    run(10, "50 random parameter sets: Hadamard-power reciprocal-beta cores totally positive", 60, |f| {
        let r = tp_sweep(SEED + 4, 50, 5, 3, 4).unwrap();
        f.extend(r.failures.iter().map(|x| format!("#{}: {}", x.sample, x.detail)));
    })
}

#[test]
fn acceptance_suite() {
    let outcomes = [
        ac1_determinant(),
        ac2_inertia(),
        ac3_integer_inverse(),
        ac4_lu(),
        ac5_identities(),
        ac6_sign_laws(),
        ac7_birkhoff_james(),
        ac8_descartes(),
        ac9_nonsingular(),
        ac10_total_positivity(),
    ];
    let mut failed = 0;
    for o in &outcomes {
        let status = if o.failures.is_empty() { "PASS" } else { "FAIL" };
        let slow = if o.elapsed > o.budget { " (over time budget)" } else { "" };
        println!(
            "[{status}] AC{:<2} {} ({:.2?}, budget {:?}){slow}",
            o.id, o.title, o.elapsed, o.budget
        );
        for msg in &o.failures {
            println!("        {msg}");
        }
        failed += usize::from(!o.failures.is_empty());
    }
    assert_eq!(failed, 0, "{failed} acceptance criteria failed");
}
