//! Acceptance criteria, one PASS/FAIL line each. Exits non-zero if any fails.

use std::process::ExitCode;

use sbl::blob::enumerate_blob;
use sbl::brauer::compose;
use sbl::cellrep::{
    timed, verify_chebyshev, verify_det_table, verify_printed_matrices, verify_ranks,
    verify_spin_tl, DEFAULT_MAX_SITES,
};
use sbl::chains::verify_chain_basis_theorem;
use sbl::iso::{verify_phi_functor, verify_psi_bijection, verify_theta};
use sbl::pairpart::Limits;
use sbl::report::Report;
use sbl::suite::property_suite;
use sbl::{PairPartition, Result};

struct Outcome {
    pass: bool,
    detail: String,
}

fn from_reports(reports: Result<Vec<Report>>) -> Outcome {
    match reports {
        Ok(rs) => {
            let failed: Vec<String> = rs
                .iter()
                .flat_map(|r| r.failures.iter().take(3).cloned())
                .collect();
            let checked: usize = rs.iter().map(|r| r.checked).sum();
            Outcome {
                pass: failed.is_empty() && rs.iter().all(Report::passed),
                detail: if failed.is_empty() {
                    format!("{checked} checks")
                } else {
                    failed.join("; ")
                },
            }
        }
        Err(e) => Outcome {
            pass: false,
            detail: e.to_string(),
        },
    }
}

fn composition_example() -> Outcome {
    let parse = |s: &str| s.parse::<PairPartition>();
    let run = || -> Result<bool> {
        let p1 = parse("J(3,5): (4',2)(3,5')(1,3')(1',2')")?;
        let p2 = parse("J(5,1): (2,1)(4,5)(1',3)")?;
        let want = parse("J(3,1): (3,2)(1,1')")?;
        let (r, loops) = compose(&p1, &p2)?;
        Ok(r == want && loops == 1)
    };
    // best of several runs, so a cold cache does not decide a sub-ms bound
    let mut best = f64::INFINITY;
    let mut pass = true;
    for _ in 0..5 {
        let (ok, secs) = timed(run);
        pass &= ok.unwrap_or(false);
        best = best.min(secs);
    }
    Outcome {
        pass: pass && best < 1e-3,
        detail: format!("delta * J(3,1): (3,2)(1,1') in {:.1} us", best * 1e6),
    }
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, j| acc * (n - j) / (j + 1))
}

fn bijection(l: &Limits) -> Outcome {
    let counts = (0..=5usize)
        .map(|n| enumerate_blob(n, n, l).map(|b| (n, b.len())))
        .collect::<Result<Vec<_>>>();
    let counts = match counts {
        Ok(c) => c,
        Err(e) => {
            return Outcome {
                pass: false,
                detail: e.to_string(),
            }
        }
    };
    let bad: Vec<String> = counts
        .iter()
        .filter(|(n, c)| *c as u64 != binomial(2 * *n as u64, *n as u64))
        .map(|(n, c)| format!("|bB({n},{n})| = {c}"))
        .collect();
    let psi = from_reports((0..=4).map(|n| verify_psi_bijection(n, n, l)).collect());
    Outcome {
        pass: bad.is_empty() && psi.pass,
        detail: if bad.is_empty() {
            format!("sizes {:?}; psi {}", counts, psi.detail)
        } else {
            bad.join("; ")
        },
    }
}

fn functor(l: &Limits) -> Outcome {
    let mut reports: Vec<Result<Report>> = (1..=4).map(|n| verify_theta(n, l)).collect();
    for m in 0..=3usize {
        for n in (0..=3usize).filter(|n| (m + n) % 2 == 0) {
            for q in (0..=3usize).filter(|q| (n + q) % 2 == 0) {
                reports.push(verify_phi_functor(m, n, q, l));
            }
        }
    }
    from_reports(reports.into_iter().collect())
}

fn main() -> ExitCode {
    let l = Limits::default();
    type Criterion<'a> = (&'a str, f64, Box<dyn Fn() -> Outcome + 'a>);
    let criteria: Vec<Criterion> = vec![
        ("composition example", 1e-3, Box::new(composition_example)),
        (
            "printed gram matrices",
            10.0,
            Box::new(|| from_reports(verify_printed_matrices(&l).map(|r| vec![r]))),
        ),
        (
            "determinant table",
            60.0,
            Box::new(|| from_reports(verify_det_table(6, &l).map(|r| vec![r]))),
        ),
        (
            "chebyshev three-way agreement",
            120.0,
            Box::new(|| from_reports(verify_chebyshev(10, &l).map(|r| vec![r]))),
        ),
        (
            "blob dimension and psi bijection",
            60.0,
            Box::new(|| bijection(&l)),
        ),
        ("theta and phi functor", 300.0, Box::new(|| functor(&l))),
        (
            "chain basis theorem",
            300.0,
            Box::new(|| {
                let l1 = (2..=5).map(|m| verify_chain_basis_theorem(1, m, &l));
                let l2 = (3..=4).map(|m| verify_chain_basis_theorem(2, m, &l));
                from_reports(l1.chain(l2).collect())
            }),
        ),
        (
            "rank specializations",
            1.0,
            Box::new(|| from_reports(verify_ranks(&l).map(|r| vec![r]))),
        ),
        (
            "spin representation relations",
            60.0,
            Box::new(|| {
                from_reports(
                    (2..=5)
                        .map(|n| verify_spin_tl(n, DEFAULT_MAX_SITES))
                        .collect(),
                )
            }),
        ),
        (
            "property suites",
            600.0,
            Box::new(|| from_reports(property_suite(false, &l).map(|r| vec![r]))),
        ),
    ];

    let mut all = true;
    for (k, (name, budget, run)) in criteria.iter().enumerate() {
        let (outcome, secs) = timed(run);
        // the first criterion times its own inner loop
        let in_time = k == 0 || secs < *budget;
        let pass = outcome.pass && in_time;
        all &= pass;
        println!(
            "{} {:>2}. {name} [{secs:.3}s, budget {budget}s] {}",
            if pass { "PASS" } else { "FAIL" },
            k + 1,
            outcome.detail
        );
    }
    println!(
        "acceptance: {}",
        if all {
            "all criteria pass"
        } else {
            "some criteria FAILED"
        }
    );
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
