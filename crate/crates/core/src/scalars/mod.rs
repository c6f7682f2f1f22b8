//! Exact coefficient arithmetic.

mod laurent;
mod poly;

pub use laurent::LaurentQ;
pub use poly::{Exponent, Poly, PolyTerm};

use num_bigint::BigInt;

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Chebyshev polynomial `d_n(x)`: `d_0 = 1`, `d_1 = x`,
/// `d_{n+2} = x d_{n+1} - d_n`.
pub fn chebyshev_d(n: i64) -> Result<Poly> {
    if n < 0 {
        return Err(Error::Domain(format!("chebyshev_d({n}) needs n >= 0")));
    }
    let x = Poly::delta();
    let (mut prev, mut cur) = (Poly::one(), x.clone());
    if n == 0 {
        return Ok(prev);
    }
    for _ in 1..n {
        let next = &(&x * &cur) - &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    Ok(cur)
}

/// Quantum integer `[n] = q^{n-1} + q^{n-3} + ... + q^{1-n}`.
pub fn qbracket(n: u32) -> LaurentQ {
    let n = n as i32;
    (0..n).fold(LaurentQ::zero(), |acc, k| {
        &acc + &LaurentQ::q_pow(n - 1 - 2 * k)
    })
}

/// `q + q^{-1}`, the value of `δ` in the quantum parametrisation.
pub fn q_delta() -> LaurentQ {
    qbracket(2)
}

/// The blob-parameter specialisation `δ′ = (1 + δ)/2`.
pub fn deltap_specialization() -> Poly {
    &Poly::constant(rat(1, 2)) + &Poly::delta().scale(&rat(1, 2))
}
