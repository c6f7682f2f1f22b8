use crate::brauer::compose;
use crate::error::{Error, Result};
use crate::pairpart::{Limits, Row};
use crate::scalars::{chebyshev_d, Poly, Rational};

use super::halfdiag::{half_diagram_basis, BasisMethod, HalfDiagram, Lambda, Sign};
use super::matrix::{rank, PolyMatrix};

/// A cell module: rank `n`, label `lambda` and its half-diagram basis.
#[derive(Clone, Debug)]
pub struct CellModule {
    pub n: usize,
    pub lambda: Lambda,
    pub basis: Vec<HalfDiagram>,
}

impl CellModule {
    pub fn new(n: usize, lambda: Lambda, limits: &Limits) -> Result<Self> {
        let basis = half_diagram_basis(n, lambda.m, BasisMethod::Orbit, limits)?;
        Ok(CellModule { n, lambda, basis })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Pairing `⟨h1, h2⟩`: stack the flip of `h1` on `h2`. Zero unless every
/// line survives; otherwise `δ^loops`, negated in the `-` module when the
/// lines come out swapped.
pub fn gram_entry(h1: &HalfDiagram, h2: &HalfDiagram, sign: Sign) -> Result<Poly> {
    if (h1.n(), h1.m()) != (h2.n(), h2.m()) {
        return Err(Error::ContextMismatch(format!("pairing {h1} with {h2}")));
    }
    let m = h1.m();
    let (r, loops) = compose(&h1.diagram().flip(), h2.diagram())?;
    if r.propagating_count() < m {
        return Ok(Poly::zero());
    }
    let mut swapped = false;
    for pair in r.pairs() {
        debug_assert_eq!((pair.0.row, pair.1.row), (Row::Top, Row::Bottom));
        let (t, b) = (pair.0.index, pair.1.index);
        match (t, b) {
            _ if t == b => {}
            (1, 2) | (2, 1) => swapped = true,
            _ => {
                return Err(Error::Internal(format!(
                    "pairing {h1} with {h2} permutes lines {t}->{b}"
                )))
            }
        }
    }
    let value = Poly::delta_pow(loops as u32);
    Ok(if swapped && sign == Sign::Minus {
        -value
    } else {
        value
    })
}

pub fn gram_matrix(module: &CellModule) -> Result<PolyMatrix> {
    let d = module.dim();
    let mut g = PolyMatrix::zeros(d, d);
    for i in 0..d {
        for j in i..d {
            let v = gram_entry(&module.basis[i], &module.basis[j], module.lambda.sign)?;
            g.set(j, i, v.clone());
            g.set(i, j, v);
        }
    }
    Ok(g)
}

pub fn gram_det(g: &PolyMatrix) -> Result<Poly> {
    g.det()
}

/// Rank of the Gram matrix at `δ = x0`.
pub fn rank_at(g: &PolyMatrix, x0: &Rational) -> usize {
    rank(&g.eval_at(x0))
}

fn initial(n: usize, sign: Sign) -> Result<Poly> {
    let p = |s: &str| s.parse::<Poly>();
    match (n, sign) {
        (3, _) => p("x^3 - 3*x + 2"),
        (4, Sign::Plus) => p("x^4 - 5*x^2 + 4*x"),
        (4, Sign::Minus) => p("x^4 - 5*x^2 + 4"),
        _ => Err(Error::Domain(format!(
            "no initial value at n={n} for sign {sign:?}"
        ))),
    }
}

/// `det Δ^n_{n-2,±}` from `D_n = δ D_{n-1} - D_{n-2}` with the values
/// at `n = 3, 4` as initial data.
pub fn det_recurrence(n: usize, sign: Sign) -> Result<Poly> {
    if n < 3 || (n >= 4 && sign == Sign::None) {
        return Err(Error::Domain(format!(
            "recurrence needs n >= 3 and a sign for n >= 4 (n={n})"
        )));
    }
    if n == 3 {
        return initial(3, sign);
    }
    let (mut prev, mut cur) = (initial(3, sign)?, initial(4, sign)?);
    for _ in 5..=n {
        let next = &(&Poly::delta() * &cur) - &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    Ok(cur)
}

/// Closed forms in Chebyshev polynomials:
/// `D_n^+ = (x-1)[(x+2)(x-1) d_{n-3} - 2x d_{n-4}]`,
/// `D_n^- = (x-1)(x+2)[(x-1) d_{n-3} - 2 d_{n-4}]`, with `d_{-1} = 0`.
pub fn det_closed_form(n: usize, sign: Sign) -> Result<Poly> {
    if n < 3 || sign == Sign::None {
        return Err(Error::Domain(format!(
            "closed form needs n >= 3 and a sign (n={n})"
        )));
    }
    let d = |k: i64| {
        if k == -1 {
            Ok(Poly::zero())
        } else {
            chebyshev_d(k)
        }
    };
    let x = Poly::delta();
    let xm1 = &x - &Poly::one();
    let xp2 = &x + &Poly::int(2);
    let (a, b) = (d(n as i64 - 3)?, d(n as i64 - 4)?);
    Ok(match sign {
        Sign::Plus => &xm1 * &(&(&(&xp2 * &xm1) * &a) - &(&(&x * &Poly::int(2)) * &b)),
        Sign::Minus => {
            &(&xm1 * &xp2) * &(&(&xm1 * &a) - &b.scale(&Rational::from_integer(2.into())))
        }
        Sign::None => unreachable!(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rat;

    fn module(n: usize, label: &str) -> CellModule {
        CellModule::new(n, label.parse().unwrap(), &Limits::default()).unwrap()
    }

    #[test]
    fn small_entries() {
        let m = module(3, "1");
        let g = gram_matrix(&m).unwrap();
        assert_eq!(g.get(0, 0), &Poly::delta());
        assert_eq!(g.get(0, 1), &Poly::one());
        assert!(g.is_symmetric());
        let minus = gram_matrix(&module(4, "2-")).unwrap();
        assert!((0..4).any(|i| (0..4).any(|j| minus.get(i, j) == &Poly::int(-1))));
    }

    #[test]
    fn determinants_and_ranks() {
        let g = gram_matrix(&module(3, "1")).unwrap();
        assert_eq!(gram_det(&g).unwrap(), "x^3 - 3*x + 2".parse().unwrap());
        assert_eq!(rank_at(&g, &rat(1, 1)), 1);
        assert_eq!(rank_at(&g, &rat(-2, 1)), 2);
        let g4 = gram_matrix(&module(4, "2-")).unwrap();
        assert_eq!(gram_det(&g4).unwrap(), initial(4, Sign::Minus).unwrap());
        let g4 = gram_matrix(&module(4, "2+")).unwrap();
        assert_eq!(gram_det(&g4).unwrap(), initial(4, Sign::Plus).unwrap());
    }

    #[test]
    fn recurrence_matches_closed_form() {
        for n in 3..=12 {
            for sign in [Sign::Plus, Sign::Minus] {
                assert_eq!(
                    det_recurrence(n, sign).unwrap(),
                    det_closed_form(n, sign).unwrap(),
                    "n={n}"
                );
            }
        }
        let five: Poly = "x^5 - 6*x^3 + 4*x^2 + 3*x - 2".parse().unwrap();
        assert_eq!(det_recurrence(5, Sign::Plus).unwrap(), five);
        assert!(det_recurrence(2, Sign::Plus).is_err());
        assert!(det_recurrence(5, Sign::None).is_err());
    }
}
