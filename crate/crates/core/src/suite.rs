//! Exhaustive property sweeps shared by the test suites and the CLI.

use crate::blob::{compose_blob, enumerate_blob};
use crate::brauer::compose;
use crate::chains::{is_li_chain, li_chain_decompositions, verify_module_closure};
use crate::error::{Error, Result};
use crate::pairpart::{enumerate, Filter, Limits};
use crate::report::Report;
use crate::PairPartition;

fn all(n_top: usize, n_bottom: usize, limits: &Limits) -> Result<Vec<PairPartition>> {
    if (n_top + n_bottom) % 2 == 1 {
        return Ok(Vec::new());
    }
    enumerate(n_top, n_bottom, Filter::All, limits)
}

/// Composable size chains `(a, b, c)` with every entry at most `max`.
fn chains3(max: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..=max)
        .flat_map(move |a| (0..=max).flat_map(move |b| (0..=max).map(move |c| (a, b, c))))
        .filter(|(a, b, c)| (a + b) % 2 == 0 && (b + c) % 2 == 0)
}

/// `(a*b)*c = a*(b*c)`, loops included, for all sides of size `<= max`.
pub fn verify_associativity(max: usize, limits: &Limits) -> Result<Report> {
    let mut report = Report::new(format!("associativity sizes<={max}"));
    for (a, b, c) in chains3(max) {
        for d in (0..=max).filter(|d| (c + d) % 2 == 0) {
            let (xs, ys, zs) = (all(a, b, limits)?, all(b, c, limits)?, all(c, d, limits)?);
            for x in &xs {
                for y in &ys {
                    let (xy, l1) = compose(x, y)?;
                    for z in &zs {
                        let (left, l2) = compose(&xy, z)?;
                        let (yz, r1) = compose(y, z)?;
                        let (right, r2) = compose(x, &yz)?;
                        report.tally(left == right && l1 + l2 == r1 + r2, || {
                            format!("({x} {y}) {z}")
                        });
                    }
                }
            }
        }
    }
    Ok(report)
}

/// `(p⊗p0)(q⊗q0) = pq ⊗ p0q0` with loop counts adding.
pub fn verify_tensor_compatibility(max: usize, limits: &Limits) -> Result<Report> {
    let mut report = Report::new(format!("tensor compatibility sizes<={max}"));
    let shapes: Vec<_> = chains3(max).collect();
    for &(a, b, c) in &shapes {
        for &(a0, b0, c0) in &shapes {
            for p in all(a, b, limits)? {
                for q in all(b, c, limits)? {
                    let (pq, l) = compose(&p, &q)?;
                    for p0 in all(a0, b0, limits)? {
                        for q0 in all(b0, c0, limits)? {
                            let (pq0, l0) = compose(&p0, &q0)?;
                            let (lhs, loops) = compose(&p.tensor(&p0), &q.tensor(&q0))?;
                            report.tally(lhs == pq.tensor(&pq0) && loops == l + l0, || {
                                format!("({p} ⊗ {p0})({q} ⊗ {q0})")
                            });
                        }
                    }
                }
            }
        }
    }
    Ok(report)
}

/// Every blob composite keeps its blobs on left-exposed pairs, and blob
/// composition is associative.
pub fn verify_blob_composition(max: usize, limits: &Limits) -> Result<Report> {
    let mut report = Report::new(format!("blob composition sizes<={max}"));
    for (a, b, c) in chains3(max) {
        let d = a;
        let (xs, ys, zs) = (
            enumerate_blob(a, b, limits)?,
            enumerate_blob(b, c, limits)?,
            enumerate_blob(c, d, limits)?,
        );
        for x in &xs {
            for y in &ys {
                let xy = match compose_blob(x, y) {
                    Ok(r) => r,
                    Err(Error::Internal(msg)) => {
                        report.tally(false, || msg);
                        continue;
                    }
                    Err(e) => return Err(e),
                };
                for z in &zs {
                    let (left, p2, b2) = compose_blob(&xy.0, z)?;
                    let (yz, q1, c1) = compose_blob(y, z)?;
                    let (right, q2, c2) = compose_blob(x, &yz)?;
                    let same = left == right && (xy.1 + p2, xy.2 + b2) == (q1 + q2, c1 + c2);
                    report.tally(same, || format!("({x} {y}) {z}"));
                }
            }
        }
    }
    Ok(report)
}

/// Tensoring with a cup, a cap or a through line preserves Li-chain
/// membership in both directions.
pub fn verify_padding(max_points: usize, limits: &Limits) -> Result<Report> {
    let mut report = Report::new(format!("padding invariance points<={max_points}"));
    let pads = [
        PairPartition::cup(),
        PairPartition::cap(),
        PairPartition::identity(1),
    ];
    for m in 1..max_points {
        for n in (1..=max_points - m).filter(|n| (m + n) % 2 == 0) {
            for p in all(m, n, limits)? {
                for i in 1..=m.min(n).min(3) {
                    let before = is_li_chain(&p, i)?;
                    for pad in &pads {
                        let after = is_li_chain(&p.tensor(pad), i)?;
                        report.tally(before == after, || format!("L{i}: {p} ⊗ {pad}"));
                    }
                }
            }
        }
    }
    Ok(report)
}

/// At most one Li-chain decomposition for every diagram with `m, n <= max`.
pub fn verify_unique_decomposition(max: usize, limits: &Limits) -> Result<Report> {
    let mut report = Report::new(format!("unique chain decomposition m,n<={max}"));
    for m in 1..=max {
        for n in (1..=max).filter(|n| (m + n) % 2 == 0) {
            for p in all(m, n, limits)? {
                for i in 1..=m.min(n) {
                    let count = li_chain_decompositions(&p, i)?.len();
                    report.tally(count <= 1, || {
                        format!("{p} has {count} L{i} decompositions")
                    });
                }
            }
        }
    }
    Ok(report)
}

/// Left action of `B_{i+1,i+1,m}` on `J^i_{≤i-1}(m,n)` for `n <= m <= max`.
pub fn verify_chain_modules(max: usize, limits: &Limits) -> Result<Report> {
    let mut report = Report::new(format!("chain module closure m<={max}"));
    for m in 2..=max {
        for i in 1..m {
            for n in (i..=m).filter(|n| (m + n) % 2 == 0) {
                report.merge(verify_module_closure(i, m, n, limits)?);
            }
        }
    }
    Ok(report)
}

/// The whole property suite; `small` selects sizes that run in seconds.
pub fn property_suite(small: bool, limits: &Limits) -> Result<Report> {
    let (assoc, tensor, blob, pad, uniq, module) = if small {
        (3, 2, 3, 6, 4, 4)
    } else {
        (3, 3, 4, 8, 5, 5)
    };
    let mut report = Report::new("property suite");
    for r in [
        verify_associativity(assoc, limits)?,
        verify_tensor_compatibility(tensor, limits)?,
        verify_blob_composition(blob, limits)?,
        verify_padding(pad, limits)?,
        verify_unique_decomposition(uniq, limits)?,
        verify_chain_modules(module, limits)?,
    ] {
        report.check(format!("{} ({} checked)", r.name, r.checked), r.passed());
        report.failures.extend(r.failures.into_iter().take(20));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suite_passes() {
        let r = property_suite(true, &Limits::default()).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(r.checks.len(), 6);
    }
}
