use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{LaurentQ, Rational};
use crate::error::{Error, Result};

/// Exponent vector `(e_delta, e_deltap)`.
pub type Exponent = (u32, u32);

/// A polynomial in the loop parameters `δ` and `δ′` with rational
/// coefficients. Displayed with `x` for `δ` and `y` for `δ′`.
///
/// Zero coefficients are never stored, so structural equality is
/// polynomial equality.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    terms: BTreeMap<Exponent, Rational>,
}

/// One term of the JSON export.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyTerm {
    pub e_delta: u32,
    pub e_deltap: u32,
    pub num: String,
    pub den: String,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Poly::monomial(c, (0, 0))
    }

    pub fn int(c: i64) -> Self {
        Poly::constant(Rational::from_integer(BigInt::from(c)))
    }

    pub fn monomial(c: Rational, e: Exponent) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Poly { terms }
    }

    /// `δ`, displayed as `x`.
    pub fn delta() -> Self {
        Poly::monomial(Rational::one(), (1, 0))
    }

    /// `δ′`, displayed as `y`.
    pub fn deltap() -> Self {
        Poly::monomial(Rational::one(), (0, 1))
    }

    pub fn delta_pow(k: u32) -> Self {
        Poly::monomial(Rational::one(), (k, 0))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).is_some_and(|c| c.is_one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (Exponent, &Rational)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, e: Exponent) -> Rational {
        self.terms.get(&e).cloned().unwrap_or_else(Rational::zero)
    }

    /// The constant value, if the polynomial has no variable terms.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&(0, 0)).cloned(),
            _ => None,
        }
    }

    /// Degree in `δ` (`None` for zero).
    pub fn degree_delta(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.0).max()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.0 + e.1).max()
    }

    pub fn involves_deltap(&self) -> bool {
        self.terms.keys().any(|e| e.1 > 0)
    }

    fn add_term(&mut self, e: Exponent, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut acc = Poly::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn eval(&self, delta: &Rational, deltap: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for ((a, b), c) in &self.terms {
            acc += c * pow_rat(delta, *a) * pow_rat(deltap, *b);
        }
        acc
    }

    /// Substitute `δ′ ↦ value`.
    pub fn substitute_deltap(&self, value: &Poly) -> Poly {
        let mut out = Poly::zero();
        for ((a, b), c) in &self.terms {
            out += &(&Poly::monomial(c.clone(), (*a, 0)) * &value.pow(*b));
        }
        out
    }

    /// Evaluate a `δ`-only polynomial at a Laurent polynomial in `q`.
    pub fn eval_laurent(&self, x: &LaurentQ) -> Result<LaurentQ> {
        if self.involves_deltap() {
            return Err(Error::Domain("polynomial involves δ′".into()));
        }
        // Horner in δ
        let Some(deg) = self.degree_delta() else {
            return Ok(LaurentQ::zero());
        };
        let mut acc = LaurentQ::zero();
        for k in (0..=deg).rev() {
            acc = &(&acc * x) + &LaurentQ::constant(self.coeff((k, 0)));
        }
        Ok(acc)
    }

    /// Leading exponent in lex order with `δ > δ′`.
    fn leading(&self) -> Option<(Exponent, &Rational)> {
        self.terms.iter().next_back().map(|(e, c)| (*e, c))
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a
    /// remainder.
    pub fn div_exact(&self, divisor: &Poly) -> Option<Poly> {
        let (lead_e, lead_c) = divisor.leading()?;
        let lead_c = lead_c.clone();
        let mut rem = self.clone();
        let mut quot = Poly::zero();
        while let Some((e, c)) = rem.leading() {
            if e.0 < lead_e.0 || e.1 < lead_e.1 {
                return None;
            }
            let qe = (e.0 - lead_e.0, e.1 - lead_e.1);
            let qc = c / &lead_c;
            let step = Poly::monomial(qc.clone(), qe);
            rem -= &(&step * divisor);
            quot.add_term(qe, qc);
        }
        Some(quot)
    }

    /// Product of `(factor)^power` terms.
    pub fn product<'a>(factors: impl IntoIterator<Item = (&'a Poly, u32)>) -> Poly {
        factors
            .into_iter()
            .fold(Poly::one(), |acc, (f, k)| &acc * &f.pow(k))
    }

    pub fn to_json_terms(&self) -> Vec<PolyTerm> {
        self.graded_terms()
            .into_iter()
            .map(|((a, b), c)| PolyTerm {
                e_delta: a,
                e_deltap: b,
                num: c.numer().to_string(),
                den: c.denom().to_string(),
            })
            .collect()
    }

    pub fn from_json_terms(terms: &[PolyTerm]) -> Result<Poly> {
        let mut p = Poly::zero();
        for t in terms {
            let num: BigInt = t
                .num
                .parse()
                .map_err(|_| Error::Parse(format!("bad numerator {:?}", t.num)))?;
            let den: BigInt = t
                .den
                .parse()
                .map_err(|_| Error::Parse(format!("bad denominator {:?}", t.den)))?;
            if den.is_zero() {
                return Err(Error::Parse("zero denominator".into()));
            }
            p.add_term((t.e_delta, t.e_deltap), Rational::new(num, den));
        }
        Ok(p)
    }

    /// Terms in graded-lex order: higher total degree first, then higher
    /// `δ` exponent.
    fn graded_terms(&self) -> Vec<(Exponent, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().map(|(e, c)| (*e, c)).collect();
        v.sort_by_key(|(e, _)| std::cmp::Reverse((e.0 + e.1, e.0)));
        v
    }
}

fn pow_rat(x: &Rational, k: u32) -> Rational {
    num_traits::pow(x.clone(), k as usize)
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, ((a, b), c)) in self.graded_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !mag.is_one() || (a == 0 && b == 0) {
                factors.push(mag.to_string());
            }
            for (var, e) in [("x", a), ("y", b)] {
                match e {
                    0 => {}
                    1 => factors.push(var.to_string()),
                    _ => factors.push(format!("{var}^{e}")),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl FromStr for Poly {
    type Err = Error;

    /// Parses sums of terms such as `x^3 - 3*x + 2`, `-1/2*x*y^2`, `(1+x)/2`
    /// is not supported: coefficients must be written as `p/q` literals.
    fn from_str(s: &str) -> Result<Poly> {
        let text: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if text.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut out = Poly::zero();
        let bytes = text.as_bytes();
        let mut start = 0;
        let mut k = 1;
        let mut pieces = Vec::new();
        while k <= bytes.len() {
            if k == bytes.len() || ((bytes[k] == b'+' || bytes[k] == b'-') && bytes[k - 1] != b'^')
            {
                pieces.push(&text[start..k]);
                start = k;
            }
            k += 1;
        }
        for piece in pieces {
            let (sign, body) = match piece.as_bytes()[0] {
                b'-' => (-1, &piece[1..]),
                b'+' => (1, &piece[1..]),
                _ => (1, piece),
            };
            if body.is_empty() {
                return Err(Error::Parse(format!("dangling sign in {s:?}")));
            }
            let mut coeff = Rational::from_integer(BigInt::from(sign));
            let mut e = (0u32, 0u32);
            for factor in body.split('*') {
                let (base, exp) = match factor.split_once('^') {
                    Some((b, x)) => (
                        b,
                        x.parse::<u32>()
                            .map_err(|_| Error::Parse(format!("bad exponent in {factor:?}")))?,
                    ),
                    None => (factor, 1),
                };
                match base {
                    "x" => e.0 += exp,
                    "y" => e.1 += exp,
                    _ => {
                        let c: Rational = base
                            .parse()
                            .map_err(|_| Error::Parse(format!("bad coefficient {base:?}")))?;
                        coeff *= pow_rat(&c, exp);
                    }
                }
            }
            out.add_term(e, coeff);
        }
        Ok(out)
    }
}

impl From<i64> for Poly {
    fn from(c: i64) -> Self {
        Poly::int(c)
    }
}

impl From<Rational> for Poly {
    fn from(c: Rational) -> Self {
        Poly::constant(c)
    }
}

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl SubAssign<&Poly> for Poly {
    fn sub_assign(&mut self, rhs: &Poly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c.clone());
        }
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for ((a, b), c) in &self.terms {
            for ((a2, b2), c2) in &rhs.terms {
                out.add_term((a + a2, b + b2), c * c2);
            }
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(mut self, rhs: Poly) -> Poly {
        self += &rhs;
        self
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(mut self, rhs: Poly) -> Poly {
        self -= &rhs;
        self
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl Zero for Poly {
    fn zero() -> Self {
        Poly::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for Poly {
    fn one() -> Self {
        Poly::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Poly {
        s.parse().unwrap()
    }

    fn r(a: i64, b: i64) -> Rational {
        Rational::new(a.into(), b.into())
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(&p("x - 1") * &p("x + 2"), p("x^2 + x - 2"));
        assert_eq!(
            &(&Poly::deltap() * &Poly::int(2)) - &p("x + 1"),
            p("2*y - x - 1")
        );
        let cube = Poly::product([(&p("x - 1"), 2), (&p("x + 2"), 1)]);
        assert_eq!(cube, p("x^3 - 3*x + 2"));
        assert_eq!(cube.to_string(), "x^3 - 3*x + 2");
    }

    #[test]
    fn evaluation() {
        let f = p("x^3 - 3*x + 2");
        assert_eq!(f.eval(&r(1, 1), &r(0, 1)), r(0, 1));
        assert_eq!(f.eval(&r(-2, 1), &r(0, 1)), r(0, 1));
        assert_eq!(p("x^2 + x - 4").eval(&r(2, 1), &r(0, 1)), r(2, 1));
        assert_eq!(p("x*y + 1/2").eval(&r(3, 1), &r(1, 3)), r(3, 2));
    }

    #[test]
    fn display_and_parse() {
        for s in [
            "0",
            "1",
            "-x",
            "x^2*y - 1/2*x + 3",
            "x*y - 3/4*y^2",
            "x^4 - 3*x^2 + 1",
        ] {
            assert_eq!(p(s).to_string(), s);
        }
        assert_eq!(p("2*x*x"), p("2*x^2"));
        assert_eq!(p("x - x"), Poly::zero());
        assert!("x +".parse::<Poly>().is_err());
        assert!("z".parse::<Poly>().is_err());
        assert!("".parse::<Poly>().is_err());
    }

    #[test]
    fn substitution() {
        let half = r(1, 2);
        let dp = Poly::constant(half.clone()) + Poly::delta().scale(&half);
        assert_eq!(p("2*y - x").substitute_deltap(&dp), Poly::one());
        assert_eq!(
            p("x*y^2").substitute_deltap(&dp),
            p("1/4*x^3 + 1/2*x^2 + 1/4*x")
        );
    }

    #[test]
    fn exact_division() {
        let a = p("x^2 + x - 2");
        assert_eq!(a.div_exact(&p("x - 1")), Some(p("x + 2")));
        assert_eq!(a.div_exact(&p("x")), None);
        assert_eq!(p("x^2*y - y").div_exact(&p("x*y + y")), Some(p("x - 1")));
        assert_eq!(Poly::zero().div_exact(&p("x")), Some(Poly::zero()));
        assert_eq!(a.div_exact(&Poly::zero()), None);
    }

    #[test]
    fn json_roundtrip() {
        let f = p("-1/3*x^2*y + 7");
        let terms = f.to_json_terms();
        assert_eq!(
            terms[0],
            PolyTerm {
                e_delta: 2,
                e_deltap: 1,
                num: "-1".into(),
                den: "3".into()
            }
        );
        assert_eq!(Poly::from_json_terms(&terms).unwrap(), f);
    }
}
