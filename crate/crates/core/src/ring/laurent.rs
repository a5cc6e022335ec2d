use std::collections::BTreeMap;
use std::fmt;

use super::parse::{Cursor, ParseError};
use super::{Rational, Ring, RingTag};

/// Laurent polynomial in `v` with rational coefficients and exponents in
/// `½ℤ`.
///
/// Exponents are stored as integers counting halves: the key `e` stands for
/// `v^{e/2}`. No stored coefficient is zero, so the derived equality is
/// equality of polynomials.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentHalf {
    terms: BTreeMap<i64, Rational>,
}

impl LaurentHalf {
    /// Builds a polynomial from `(exponent in halves, coefficient)` pairs;
    /// repeated exponents are summed.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, Rational)>,
    {
        let mut out = LaurentHalf::default();
        for (e, c) in terms {
            out.add_term(e, &c);
        }
        out
    }

    /// `coeff · v^{half_exp/2}`.
    pub fn monomial(coeff: Rational, half_exp: i64) -> Self {
        Self::from_terms([(half_exp, coeff)])
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    /// The variable `v`.
    pub fn v() -> Self {
        Self::monomial(Rational::one(), 2)
    }

    /// `v^{half_exp/2}` with coefficient one.
    pub fn v_half_pow(half_exp: i64) -> Self {
        Self::monomial(Rational::one(), half_exp)
    }

    /// Nonzero terms as `(exponent in halves, coefficient)`, ascending.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coefficient(&self, half_exp: i64) -> Rational {
        self.terms
            .get(&half_exp)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// `Some((coefficient, exponent in halves))` when `self` is a single term.
    pub fn as_monomial(&self) -> Option<(&Rational, i64)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(e, c)| (c, *e))
        } else {
            None
        }
    }

    /// Substitutes `v ↦ v⁻¹`.
    pub fn mirror(&self) -> Self {
        LaurentHalf {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Applies `f` to every term; terms mapped to a shared exponent are summed.
    pub fn map_terms<F>(&self, mut f: F) -> Self
    where
        F: FnMut(i64, &Rational) -> (i64, Rational),
    {
        Self::from_terms(self.terms.iter().map(|(e, c)| f(*e, c)))
    }

    fn add_term(&mut self, e: i64, c: &Rational) {
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.get(&e) {
            Some(old) => old.add(c),
            None => c.clone(),
        };
        if sum.is_zero() {
            self.terms.remove(&e);
        } else {
            self.terms.insert(e, sum);
        }
    }
}

impl Ring for LaurentHalf {
    const TAG: RingTag = RingTag::LaurentHalf;

    fn zero() -> Self {
        LaurentHalf::default()
    }

    fn one() -> Self {
        Self::constant(Rational::one())
    }

    fn from_i64(n: i64) -> Self {
        Self::constant(Rational::from_i64(n))
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c);
        }
        out
    }

    fn mul(&self, other: &Self) -> Self {
        let mut out = LaurentHalf::default();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out.add_term(ea + eb, &ca.mul(cb));
            }
        }
        out
    }

    fn neg(&self) -> Self {
        LaurentHalf {
            terms: self.terms.iter().map(|(e, c)| (*e, c.neg())).collect(),
        }
    }

    fn unit_inverse(&self) -> Option<Self> {
        let (c, e) = self.as_monomial()?;
        Some(Self::monomial(c.unit_inverse()?, -e))
    }

    fn parse(text: &str) -> Result<Self, ParseError> {
        let mut cur = Cursor::new(text);
        let p = cur.laurent()?;
        cur.skip_ws();
        cur.expect_end()?;
        Ok(p)
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, half_exp: i64) -> fmt::Result {
    match half_exp {
        2 => f.write_str("v"),
        e if e % 2 == 0 => write!(f, "v^{}", e / 2),
        e => write!(f, "v^{}/2", e),
    }
}

impl fmt::Display for LaurentHalf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            if *e == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                write_monomial(f, *e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentHalf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentHalf({self})")
    }
}

impl From<Rational> for LaurentHalf {
    fn from(c: Rational) -> Self {
        LaurentHalf::constant(c)
    }
}

impl std::ops::Add for &LaurentHalf {
    type Output = LaurentHalf;
    fn add(self, rhs: &LaurentHalf) -> LaurentHalf {
        Ring::add(self, rhs)
    }
}

impl std::ops::Sub for &LaurentHalf {
    type Output = LaurentHalf;
    fn sub(self, rhs: &LaurentHalf) -> LaurentHalf {
        Ring::sub(self, rhs)
    }
}

impl std::ops::Mul for &LaurentHalf {
    type Output = LaurentHalf;
    fn mul(self, rhs: &LaurentHalf) -> LaurentHalf {
        Ring::mul(self, rhs)
    }
}

impl std::ops::Neg for &LaurentHalf {
    type Output = LaurentHalf;
    fn neg(self) -> LaurentHalf {
        Ring::neg(self)
    }
}
