use std::time::Instant;

use serde::Serialize;

use crate::error::Result;
use crate::pairpart::Limits;
use crate::report::Report;
use crate::scalars::Rational;

use super::gram::{det_closed_form, det_recurrence, gram_det, gram_matrix, rank_at, CellModule};
use super::halfdiag::{Lambda, Sign};
use super::matrix::{find_equivalence, PolyMatrix};
use super::reference::{gram_6_0, DETERMINANTS, PRINTED};

/// Equal entry by entry, after reordering the computed basis when the
/// natural order differs from the printed one.
fn matches_printed(computed: &PolyMatrix, printed: &PolyMatrix) -> bool {
    computed == printed
        || find_equivalence(computed, printed, false)
            .is_some_and(|(perm, eps)| &computed.permuted(&perm, &eps) == printed)
}

/// Compare against the printed `Δ^3_1`, `Δ^4_{2,±}`, `Δ^6_{4,+}` and the
/// `11×11` matrix at `(6,0)`.
pub fn verify_printed_matrices(limits: &Limits) -> Result<Report> {
    let mut report = Report::new("printed gram matrices");
    let mut cases: Vec<(String, usize, Lambda, PolyMatrix)> = PRINTED
        .iter()
        .map(|e| Ok((e.name.to_string(), e.n, e.lambda(), e.matrix()?)))
        .collect::<Result<_>>()?;
    cases.push(("Δ^6_0".into(), 6, Lambda::new(0, Sign::None)?, gram_6_0()));
    for (name, n, lambda, printed) in cases {
        let g = gram_matrix(&CellModule::new(n, lambda, limits)?)?;
        report.size(format!("dim {name}"), g.rows());
        report.check(
            format!("{name} reproduced"),
            g.is_symmetric() && matches_printed(&g, &printed),
        );
    }
    Ok(report)
}

/// One row of the determinant table.
#[derive(Clone, Debug, Serialize)]
pub struct DetRow {
    pub name: String,
    pub n: usize,
    pub lambda: String,
    pub dim: usize,
    pub computed: String,
    pub expected: String,
    pub factored: String,
    pub matches: bool,
}

/// Computed determinants against every tabulated factorization with `n <= max_n`.
pub fn det_table(max_n: usize, limits: &Limits) -> Result<Vec<DetRow>> {
    let mut rows = Vec::new();
    for entry in DETERMINANTS.iter().filter(|e| e.n <= max_n) {
        let module = CellModule::new(entry.n, entry.lambda(), limits)?;
        let computed = gram_det(&gram_matrix(&module)?)?;
        let expected = entry.expanded()?;
        rows.push(DetRow {
            name: entry.name.to_string(),
            n: entry.n,
            lambda: entry.lambda.to_string(),
            dim: module.dim(),
            matches: computed == expected,
            computed: computed.to_string(),
            expected: expected.to_string(),
            factored: entry.factored(),
        });
    }
    Ok(rows)
}

pub fn verify_det_table(max_n: usize, limits: &Limits) -> Result<Report> {
    let mut report = Report::new("determinant table");
    for row in det_table(max_n, limits)? {
        report.size(format!("dim {}", row.name), row.dim);
        report.check(format!("{} = {}", row.name, row.factored), row.matches);
    }
    Ok(report)
}

/// Direct determinant, recurrence and closed form of `Δ^n_{n-2,±}` for
/// `4 <= n <= max_n`.
pub fn verify_chebyshev(max_n: usize, limits: &Limits) -> Result<Report> {
    let mut report = Report::new("chebyshev agreement");
    for n in 4..=max_n {
        for sign in [Sign::Plus, Sign::Minus] {
            let lambda = Lambda::new(n - 2, sign)?;
            let direct = gram_det(&gram_matrix(&CellModule::new(n, lambda, limits)?)?)?;
            let rec = det_recurrence(n, sign)?;
            let closed = det_closed_form(n, sign)?;
            report.check(
                format!("n={n} {lambda}: direct = recurrence = closed form"),
                direct == rec && rec == closed,
            );
        }
    }
    Ok(report)
}

/// Ranks of `Δ^5_1` at `x = 1` and of `Δ^3_1` at `x = 1, -2`.
pub fn verify_ranks(limits: &Limits) -> Result<Report> {
    let mut report = Report::new("rank specializations");
    let one = Lambda::new(1, Sign::None)?;
    for (n, x, want) in [(5, 1, 1), (3, 1, 1), (3, -2, 2)] {
        let g = gram_matrix(&CellModule::new(n, one, limits)?)?;
        let got = rank_at(&g, &Rational::from_integer(x.into()));
        report.check(
            format!("rank Δ^{n}_1 at x={x} is {want} (got {got})"),
            got == want,
        );
    }
    Ok(report)
}

/// Elapsed wall time of `f` in seconds, alongside its result.
pub fn timed<T>(f: impl FnOnce() -> T) -> (T, f64) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed().as_secs_f64())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn printed_and_ranks() {
        let l = Limits::default();
        let r = verify_printed_matrices(&l).unwrap();
        assert!(r.passed(), "{r}");
        let r = verify_ranks(&l).unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn low_rank_table() {
        let rows = det_table(5, &Limits::default()).unwrap();
        assert_eq!(rows.len(), 7);
        assert!(rows.iter().all(|r| r.matches));
    }
}
