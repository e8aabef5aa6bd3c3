//! Laurent polynomials in `t` with exact integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(1, 0)
    }

    /// `t^k`.
    pub fn t_pow(k: i64) -> Self {
        LaurentPoly::monomial(1, k)
    }

    pub fn monomial(c: impl Into<BigInt>, k: i64) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(k, c);
        }
        LaurentPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// `(c, k)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(&k, c)| (k, c))
    }

    pub fn coeff(&self, k: i64) -> BigInt {
        self.terms.get(&k).cloned().unwrap_or_default()
    }

    /// `Some((s, k))` when the polynomial is the unit `s·t^k`, `s = ±1`.
    pub fn as_unit(&self) -> Option<(i32, i64)> {
        if self.terms.len() != 1 {
            return None;
        }
        let (&k, c) = self.terms.iter().next()?;
        if c.is_one() {
            Some((1, k))
        } else if (-c).is_one() {
            Some((-1, k))
        } else {
            None
        }
    }

    /// Multiplicative inverse of a unit.
    pub fn unit_inverse(&self) -> Option<LaurentPoly> {
        self.as_unit().map(|(s, k)| LaurentPoly::monomial(s, -k))
    }

    fn add_term(&mut self, k: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(k).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&k);
        }
    }

    /// Value at an integer point `t = x` with `x = ±1` (keeps exactness).
    pub fn eval_unit(&self, x: i32) -> BigInt {
        assert!(x == 1 || x == -1);
        self.terms
            .iter()
            .map(|(&k, c)| if x == -1 && k.rem_euclid(2) == 1 { -c.clone() } else { c.clone() })
            .sum()
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            out.add_term(k, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            out.add_term(k, -c.clone());
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&a, x) in &self.terms {
            for (&b, y) in &rhs.terms {
                out.add_term(a + b, x * y);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect() }
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
    )*};
}

owned_ops!(Add add, Sub sub, Mul mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::monomial(c, 0)
    }
}

/// `c*t^k` terms in increasing exponent order joined by ` + `; `0` when empty.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (n, (k, c)) in self.terms.iter().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}*t^{k}")?;
        }
        Ok(())
    }
}

fn parse_term(raw: &str) -> Result<(BigInt, i64)> {
    let err = || Error::Parse { token: raw.to_string() };
    let s: String = raw.chars().filter(|c| !c.is_whitespace()).collect();
    let (sign, body) = match s.strip_prefix('-') {
        Some(rest) => (-1, rest),
        None => (1, s.strip_prefix('+').unwrap_or(&s)),
    };
    let (coeff, power) = match body.split_once('t') {
        None => (body, None),
        Some((c, p)) => (c.strip_suffix('*').unwrap_or(c), Some(p)),
    };
    let coeff = if coeff.is_empty() {
        if power.is_none() {
            return Err(err());
        }
        BigInt::one()
    } else {
        coeff.parse::<BigInt>().map_err(|_| err())?
    };
    let k = match power {
        None => 0,
        Some("") => 1,
        Some(p) => {
            let p = p.strip_prefix('^').ok_or_else(err)?;
            p.trim_matches(|c| c == '(' || c == ')').parse::<i64>().map_err(|_| err())?
        }
    };
    if coeff.is_negative() && sign == -1 {
        return Err(err());
    }
    Ok((coeff * sign, k))
}

impl FromStr for LaurentPoly {
    type Err = Error;

    /// Accepts the display format, and also `t`, `t^k`, `-t^k`, plain
    /// integers, and ` - ` as a separator.
    fn from_str(s: &str) -> Result<LaurentPoly> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Syntax("empty polynomial".into()));
        }
        let normalized = s.replace(" - ", " + -");
        let mut out = LaurentPoly::zero();
        for part in normalized.split(" + ") {
            let (c, k) = parse_term(part)?;
            out.add_term(k, c);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn arithmetic() {
        let one_minus_t = p("1*t^0 + -1*t^1");
        assert_eq!(one_minus_t.to_string(), "1*t^0 + -1*t^1");
        let t = LaurentPoly::t_pow(1);
        let tinv = LaurentPoly::t_pow(-1);
        assert!((&t * &tinv).is_one());
        assert!((&one_minus_t + &t).is_one());
        assert!((&one_minus_t - &one_minus_t).is_zero());
        assert_eq!(&one_minus_t * &one_minus_t, p("1 - 2*t + t^2"));
    }

    #[test]
    fn text_forms() {
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(p("0"), LaurentPoly::zero());
        assert_eq!(p("-t^-2"), LaurentPoly::monomial(-1, -2));
        assert_eq!(p("3*t^(-1)"), LaurentPoly::monomial(3, -1));
        assert!("1*t^".parse::<LaurentPoly>().is_err());
        assert!("x".parse::<LaurentPoly>().is_err());
        let q = p("5*t^-3 + -2*t^0 + 7*t^4");
        assert_eq!(q.to_string().parse::<LaurentPoly>().unwrap(), q);
    }

    #[test]
    fn units() {
        assert_eq!(p("-t").as_unit(), Some((-1, 1)));
        assert_eq!(p("2*t").as_unit(), None);
        assert_eq!(p("1 + t").as_unit(), None);
        assert_eq!(p("-t^3").unit_inverse(), Some(p("-t^-3")));
        assert_eq!(p("1 - t + t^3").eval_unit(-1), BigInt::from(1));
    }
}
