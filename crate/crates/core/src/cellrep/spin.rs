use crate::error::{Error, Result};
use crate::report::Report;
use crate::scalars::{q_delta, LaurentQ};

use super::matrix::Matrix;

pub type LaurentMatrix = Matrix<LaurentQ>;

/// Largest chain length accepted by default.
pub const DEFAULT_MAX_SITES: usize = 8;

/// The two-site block in the basis `00, 01, 10, 11`.
pub fn spin_block() -> LaurentMatrix {
    let mut b = LaurentMatrix::zeros(4, 4);
    b.set(1, 1, LaurentQ::q_pow(1));
    b.set(1, 2, LaurentQ::one());
    b.set(2, 1, LaurentQ::one());
    b.set(2, 2, LaurentQ::q_pow(-1));
    b
}

fn check(n: usize, max_sites: usize) -> Result<()> {
    if n > max_sites {
        return Err(Error::ResourceLimit(format!(
            "{n} sites, cap is {max_sites}"
        )));
    }
    Ok(())
}

/// `U_i` on `(C^2)^{⊗n}`, site 1 being the most significant tensor factor.
pub fn spin_rep_u(i: usize, n: usize, max_sites: usize) -> Result<LaurentMatrix> {
    check(n, max_sites)?;
    if i == 0 || i >= n {
        return Err(Error::InvalidInput(format!("U{i} needs 1 <= i < n = {n}")));
    }
    let left = LaurentMatrix::identity(1 << (i - 1));
    let right = LaurentMatrix::identity(1 << (n - i - 1));
    Ok(left.kron(&spin_block()).kron(&right))
}

/// `H = Σ_i U_i`.
pub fn spin_hamiltonian(n: usize, max_sites: usize) -> Result<LaurentMatrix> {
    check(n, max_sites)?;
    let mut h = LaurentMatrix::zeros(1 << n, 1 << n);
    for i in 1..n {
        h = h.add(&spin_rep_u(i, n, max_sites)?)?;
    }
    Ok(h)
}

/// Entries at a numeric `q`, row-major.
pub fn eval_at(m: &LaurentMatrix, q: f64) -> Vec<f64> {
    (0..m.rows())
        .flat_map(|i| m.row(i).iter().map(|v| v.eval_f64(q)).collect::<Vec<_>>())
        .collect()
}

/// The permutation matrix reversing the order of the `n` sites.
pub fn site_reversal(n: usize) -> LaurentMatrix {
    let dim = 1usize << n;
    let rev = |s: usize| (0..n).fold(0, |acc, k| acc | (((s >> k) & 1) << (n - 1 - k)));
    LaurentMatrix::from_fn(dim, dim, |i, j| {
        if rev(j) == i {
            LaurentQ::one()
        } else {
            LaurentQ::zero()
        }
    })
}

/// Apply `q ↦ q^{-1}` entrywise.
pub fn invert_q(m: &LaurentMatrix) -> LaurentMatrix {
    m.map(LaurentQ::invert_q)
}

/// Check `U_i^2 = [2] U_i`, `U_i U_{i±1} U_i = U_i` and `U_i U_j = U_j U_i`
/// for `|i-j| > 1`, identically in `q`.
pub fn verify_spin_tl(n: usize, max_sites: usize) -> Result<Report> {
    let mut report = Report::new(format!("spin n={n}"));
    let u: Vec<LaurentMatrix> = (1..n)
        .map(|i| spin_rep_u(i, n, max_sites))
        .collect::<Result<_>>()?;
    let delta = q_delta();
    for (a, ua) in u.iter().enumerate() {
        let (i, sq) = (a + 1, ua.mul(ua)?);
        report.check(format!("U{i} U{i} = [2] U{i}"), sq == ua.scale(&delta));
        for (b, ub) in u.iter().enumerate() {
            let j = b + 1;
            if i.abs_diff(j) == 1 {
                report.check(
                    format!("U{i} U{j} U{i} = U{i}"),
                    &ua.mul(ub)?.mul(ua)? == ua,
                );
            } else if j > i + 1 {
                report.check(format!("U{i} U{j} = U{j} U{i}"), ua.mul(ub)? == ub.mul(ua)?);
            }
        }
    }
    report.size("dim", 1 << n);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Rational;

    #[test]
    fn two_sites() {
        assert_eq!(spin_rep_u(1, 2, 8).unwrap(), spin_block());
        assert_eq!(spin_hamiltonian(2, 8).unwrap(), spin_block());
        assert!(spin_rep_u(2, 2, 8).is_err());
        assert!(spin_rep_u(1, 9, 8).is_err());
    }

    #[test]
    fn relations() {
        let u1 = spin_rep_u(1, 3, 8).unwrap();
        let u2 = spin_rep_u(2, 3, 8).unwrap();
        assert_eq!(u1.mul(&u1).unwrap(), u1.scale(&q_delta()));
        assert_eq!(u1.mul(&u2).unwrap().mul(&u1).unwrap(), u1);
    }

    #[test]
    fn relations_up_to_four_sites() {
        for n in 2..=4 {
            let r = verify_spin_tl(n, 8).unwrap();
            assert!(r.passed(), "{r}");
        }
        assert_eq!(verify_spin_tl(4, 8).unwrap().checks.len(), 3 + 4 + 1);
    }

    #[test]
    fn hamiltonian() {
        let h = spin_hamiltonian(3, 8).unwrap();
        assert_eq!(
            h.trace(),
            q_delta().scale(&Rational::from_integer(4.into()))
        );
        let r = site_reversal(3);
        assert_eq!(r.mul(&h).unwrap().mul(&r).unwrap(), invert_q(&h));
        let vals = eval_at(&h, 1.0);
        assert_eq!(vals.len(), 64);
        assert!(vals.iter().all(|v| *v >= 0.0));
    }
}
