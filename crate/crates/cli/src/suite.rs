//! The batch reproduction driver behind `eis4 paper-suite`: a fixed,
//! ordered list of claims keyed by the statement labels of the source
//! material, each executed deterministically and timed.
//!
//! With the literal flag the suite also runs the published-variant
//! relation checks, which are expected to fail; a claim counts toward the
//! overall status by matching its expected outcome, so a run that
//! documents the known failures still exits green.

use std::collections::BTreeMap;
use std::time::Instant;

use num_complex::Complex64;
use serde::Serialize;

use eis4_core::eisenstein::eis_h2;
use eis4_core::lform::LGen;
use eis4_core::matrix::RationalMatrix;
use eis4_core::period::{
    build_mk, check_det_ord2, delta_tilde_kernel_dim, im_delta_dim, im_space_rank_bruteforce,
    r_period,
};
use eis4_core::rational::{binomial, Rational};
use eis4_core::relations::{
    atilde_vector, atilde_vector_literal, conj_span_dims, conj_vector, express_in_modular,
    known_errata,
};
use eis4_core::special::{bernoulli, chi4, euler_number, euler_poly};
use eis4_core::ttilde::verify_relation_numeric;
use eis4_core::verifier::{
    eval_h2_numeric, lattice_oracle, verify_g_decomp, verify_g_product, verify_im_vanishing,
    verify_shuffle, verify_theta,
};

#[derive(Serialize)]
pub struct ClaimResult {
    pub id: String,
    pub params: BTreeMap<String, String>,
    pub status: String,
    pub expected: String,
    pub wall_ms: u128,
}

#[derive(Serialize)]
pub struct RunManifest {
    pub suite: String,
    pub claims: Vec<ClaimResult>,
    pub overall: String,
}

struct Claim {
    id: &'static str,
    params: &'static [(&'static str, &'static str)],
    expected: &'static str,
    run: Box<dyn Fn() -> bool>,
}

fn claim(
    id: &'static str,
    params: &'static [(&'static str, &'static str)],
    run: impl Fn() -> bool + 'static,
) -> Claim {
    Claim { id, params, expected: "pass", run: Box::new(run) }
}

fn claim_expect_fail(
    id: &'static str,
    params: &'static [(&'static str, &'static str)],
    run: impl Fn() -> bool + 'static,
) -> Claim {
    Claim { id, params, expected: "fail", run: Box::new(run) }
}

fn shuffle_all() -> bool {
    (2..=12u32).all(|w| (1..w).all(|k1| verify_shuffle(k1, w - k1, 30).passed()))
}

fn g_decomp_all() -> bool {
    [4u32, 6, 8, 10, 12]
        .iter()
        .all(|&k| verify_g_decomp(k, 30).map(|r| r.passed()).unwrap_or(false))
}

fn g_product_all() -> bool {
    [4u32, 6, 8, 10, 12]
        .iter()
        .all(|&k| verify_g_product(k, 30).map(|r| r.passed()).unwrap_or(false))
}

fn c_independence() -> bool {
    (2..=12u32).all(|w| {
        (1..w).all(|k1| {
            let s = eis_h2(k1, w - k1, 30);
            (1..=30).all(|n| s.coeff(n).coeff(LGen::zodd(1)).is_zero())
        })
    })
}

fn even_rank_formula() -> bool {
    (4..=40u32)
        .step_by(2)
        .all(|k| build_mk(k).rank() == (3 * k / 4 - 1) as usize)
}

fn odd_rank_formula() -> bool {
    (3..=39u32).step_by(2).all(|k| build_mk(k).rank() == (k - 2) as usize)
}

fn rank_agreement() -> bool {
    (3..=40u32).all(|k| build_mk(k).rank() == im_delta_dim(k))
}

fn series_im_rank() -> bool {
    (3..=14u32).all(|k| im_space_rank_bruteforce(k, 40) == build_mk(k).rank())
}

fn im_vanishing_all() -> bool {
    (3..=13u32).step_by(2).all(|k| {
        verify_im_vanishing(k, 30)
            .map(|r| r.passed() && r.params.contains_key("nonzero_witness_q"))
            .unwrap_or(false)
    })
}

fn period_symmetry() -> bool {
    (6..=30u32).step_by(2).all(|w| {
        (1..w).all(|n| {
            (1..w).all(|m| {
                if (m + n) % 2 == 0 {
                    return true;
                }
                match (r_period(w, n, m), r_period(w, m, n)) {
                    (Ok(a), Ok(b)) => a == b,
                    _ => true,
                }
            })
        })
    })
}

fn det_atilde_all() -> bool {
    (6..=40u32).step_by(2).all(|w| {
        check_det_ord2(w)
            .map(|r| {
                r.nonzero
                    && r.matches
                    && (w != 6 || (r.det == Rational::from(-180) && r.ord2 == "2"))
            })
            .unwrap_or(false)
    })
}

fn kernel_dims_all() -> bool {
    (6..=40u32)
        .step_by(2)
        .all(|k| delta_tilde_kernel_dim(k).map(|d| d == ((k - 2) / 4) as usize).unwrap_or(false))
}

fn worked_examples() -> bool {
    let r = |n: i64, d: i64| Rational::new(n, d);
    let v461 = conj_vector(4, 6, 1).map(|v| v.coeffs).unwrap_or_default();
    if v461 != vec![r(-8, 1), r(-4, 1), r(-2, 3), r(1, 1), r(1, 1)] {
        return false;
    }
    let cases: [(u32, u32, u32, Vec<Rational>); 3] = [
        (4, 6, 1, vec![r(-4, 3)]),
        (2, 8, 1, vec![r(-128, 45)]),
        (4, 10, 3, vec![r(-20, 21), r(-248, 105)]),
    ];
    if !cases.iter().all(|(lvl, k, j, mu)| {
        express_in_modular(*lvl, *k, *j).map(|m| m.as_ref() == Some(mu)).unwrap_or(false)
    }) {
        return false;
    }
    known_errata().iter().all(|e| {
        atilde_vector(e.k, e.j)
            .map(|v| v.coeff(e.p) == &e.corrected && e.printed != e.corrected)
            .unwrap_or(false)
    })
}

fn conjecture_dims_all() -> bool {
    (6..=30u32).step_by(2).all(|k| {
        conj_span_dims(k)
            .map(|d| {
                d.dim4 == ((k - 2) / 4) as usize
                    && d.dim2 == ((k - 2) / 6) as usize
                    && d.contained
            })
            .unwrap_or(false)
    })
}

fn relation_residuals() -> bool {
    [6u32, 8, 10, 12].iter().all(|&k| {
        (1..=(k - 2) / 4).all(|j| verify_relation_numeric(k, j, 1e-6, false).is_ok())
    })
}

fn lattice_agreement() -> bool {
    [(2u32, 3u32), (3, 4)].iter().all(|&(k1, k2)| {
        [0.8f64, 1.0].iter().all(|&im| {
            let tau = Complex64::new(0.0, im);
            match (lattice_oracle(k1, k2, tau, 400), eval_h2_numeric(k1, k2, tau, 40)) {
                (Ok(a), Ok(b)) => (a - b).norm() < 1e-6,
                _ => false,
            }
        })
    })
}

fn identity_suites() -> bool {
    // Bernoulli-Euler identity through weight 100.
    let bernoulli_euler = (4..=100usize).step_by(2).all(|k| {
        let lhs = bernoulli(k) / Rational::from(k as i64)
            * (Rational::one() - Rational::pow2(-(k as i64)));
        let mut sum = Rational::zero();
        for r in 1..k {
            sum = sum
                + Rational::from(&binomial(k as u64 - 2, r as u64 - 1))
                    * Rational::from(&euler_number(k - r - 1))
                    * Rational::from(&euler_number(r - 1));
        }
        lhs == Rational::pow2(-2 * k as i64) * sum
    });
    // Euler-polynomial character sums.
    let char_sums = (1..=99i64).step_by(2).all(|n| {
        (1..=12usize).all(|k| {
            let lhs: Rational = (1..n)
                .map(|w| Rational::from(chi4(w + 1)) * Rational::new(w, 2).pow(k as i64))
                .sum();
            let rhs = Rational::from(chi4(n)) * euler_poly(k, &Rational::new(n + 1, 2))
                / Rational::from(2)
                - (euler_poly(k, &Rational::one()) - euler_poly(k, &Rational::zero()))
                    / Rational::from(4);
            lhs == rhs
        })
    });
    // Alternating binomial identity.
    let binomial_id = (0..=12u64).all(|a| {
        (0..=12u64)
            .all(|b| (0..=(a + b).min(12)).all(|mu| alternating_binomial_holds(a, b, mu)))
    });
    bernoulli_euler && char_sums && binomial_id
}

fn alternating_binomial_holds(a: u64, b: u64, mu: u64) -> bool {
    let mut lhs = num_bigint::BigInt::from(0);
    for v in 0..=mu {
        let t = binomial(a + b - v, a) * binomial(mu, v);
        if v % 2 == 0 {
            lhs += t;
        } else {
            lhs -= t;
        }
    }
    lhs == binomial(a + b - mu, b)
}

/// Literal-variant worked-example check: the corrected proportionality
/// factors cannot be reproduced from the published doubling placement.
fn worked_examples_literal() -> bool {
    [(4u32, 6u32, 1u32), (2, 8, 1), (4, 10, 3)].iter().all(|&(lvl, k, j)| {
        let Ok(target) = conj_vector(lvl, k, j) else { return false };
        let d = ((k - 2) / 4) as usize;
        let mut m = RationalMatrix::zero((k - 1) as usize, d);
        for jp in 1..=d as u32 {
            let Ok(col) = atilde_vector_literal(k, jp) else { return false };
            for p in 0..(k - 1) as usize {
                m.set(p, (jp - 1) as usize, col.coeffs[p].clone());
            }
        }
        // "Pass" here means the solve succeeds; the claim expects failure.
        matches!(m.solve(&target.coeffs), Ok(Some(_)))
    })
}

pub fn run_suite(only: Option<&str>, literal: bool) -> RunManifest {
    let mut claims: Vec<Claim> = vec![
        claim("thm1.2-shuffle", &[("weights", "k1+k2 <= 12"), ("terms", "30")], shuffle_all),
        claim("thm1.2-g-decomp", &[("k", "4..=12 even"), ("terms", "30")], g_decomp_all),
        claim("thm1.2-g-product", &[("k", "4..=12 even"), ("terms", "30")], g_product_all),
        claim("theta-square", &[("terms", "100")], || verify_theta(100).passed()),
        claim("c-independence", &[("weights", "k1+k2 <= 12"), ("terms", "30")], c_independence),
        claim("prop4.4-even-rank", &[("k", "4..=40 even")], even_rank_formula),
        claim("prop4.5-odd-rank", &[("k", "3..=39 odd")], odd_rank_formula),
        claim("prop4.1-rank-agreement", &[("k", "3..=40")], rank_agreement),
        claim("prop4.1-series-im-rank", &[("k", "3..=14"), ("terms", "40")], series_im_rank),
        claim("lem4.3-im-vanishing", &[("k", "3..=13 odd"), ("terms", "30")], im_vanishing_all),
        claim("cor4.11-period-symmetry", &[("w", "6..=30 even")], period_symmetry),
        claim("det-atilde", &[("w", "6..=40 even")], det_atilde_all),
        claim("kernel-delta-tilde", &[("k", "6..=40 even")], kernel_dims_all),
        claim("example5.2", &[("cases", "(4,6,1) (2,8,1) (4,10,3)")], worked_examples),
        claim("conjecture-dims", &[("k", "6..=30 even")], conjecture_dims_all),
        claim("eq5.1-ttilde-relations", &[("k", "6,8,10,12"), ("tol", "1e-6")], relation_residuals),
        claim("lattice-oracle", &[("cases", "(2,3) (3,4)"), ("tau", "0.8i, i")], lattice_agreement),
        claim("lemma-identity-suites", &[("k", "<= 100")], identity_suites),
    ];
    if literal {
        claims.push(claim_expect_fail(
            "eq5.1-ttilde-relations-literal",
            &[("k", "6"), ("j", "1"), ("tol", "1e-6")],
            || verify_relation_numeric(6, 1, 1e-6, true).is_ok(),
        ));
        claims.push(claim_expect_fail(
            "example5.2-literal-express",
            &[("cases", "(4,6,1) (2,8,1) (4,10,3)")],
            worked_examples_literal,
        ));
    }

    let mut results = Vec::new();
    let mut overall = true;
    for c in claims {
        if let Some(filter) = only {
            if !c.id.contains(filter) {
                continue;
            }
        }
        let start = Instant::now();
        let passed = (c.run)();
        let wall_ms = start.elapsed().as_millis();
        let status = if passed { "pass" } else { "fail" };
        let matched = status == c.expected;
        overall &= matched;
        eprintln!(
            "[suite] {:<32} {status}{} ({wall_ms} ms)",
            c.id,
            if c.expected == "fail" { " [expected fail]" } else { "" },
        );
        results.push(ClaimResult {
            id: c.id.to_string(),
            params: c.params.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect(),
            status: status.to_string(),
            expected: c.expected.to_string(),
            wall_ms,
        });
    }
    RunManifest {
        suite: "eis4-reproduction".to_string(),
        claims: results,
        overall: if overall { "pass" } else { "fail" }.to_string(),
    }
}
