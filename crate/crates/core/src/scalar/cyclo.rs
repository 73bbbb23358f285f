use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::Rational;
use crate::error::{Error, Result};

/// An element `re + jm·j` of ℚ(j), where `j² = -1 - j`.
///
/// The pair `{1, j}` is the basis; a `j²` component is never stored.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CycloNum {
    pub re: Rational,
    pub jm: Rational,
}

impl CycloNum {
    pub fn new(re: Rational, jm: Rational) -> Self {
        CycloNum { re, jm }
    }

    pub fn zero() -> Self {
        CycloNum::new(Rational::zero(), Rational::zero())
    }

    pub fn one() -> Self {
        CycloNum::new(Rational::one(), Rational::zero())
    }

    pub fn j() -> Self {
        CycloNum::new(Rational::zero(), Rational::one())
    }

    pub fn from_integer(n: i64) -> Self {
        CycloNum::new(Rational::from_integer(n), Rational::zero())
    }

    pub fn from_rational(r: Rational) -> Self {
        CycloNum::new(r, Rational::zero())
    }

    /// `j^k` for any integer `k`.
    pub fn j_pow(k: i64) -> Self {
        match k.rem_euclid(3) {
            0 => CycloNum::one(),
            1 => CycloNum::j(),
            _ => CycloNum::new(Rational::from_integer(-1), Rational::from_integer(-1)),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.jm.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.jm.is_zero()
    }

    /// Galois conjugate `re + jm·j²`.
    pub fn conj(&self) -> Self {
        CycloNum::new(&self.re - &self.jm, -&self.jm)
    }

    /// Field norm `re² - re·jm + jm²`, always a non-negative rational.
    pub fn norm(&self) -> Rational {
        &(&(&self.re * &self.re) - &(&self.re * &self.jm)) + &(&self.jm * &self.jm)
    }

    pub fn inv(&self) -> Result<Self> {
        let n = self.norm().recip().ok_or(Error::DivisionByZero)?;
        let c = self.conj();
        Ok(CycloNum::new(&c.re * &n, &c.jm * &n))
    }

    pub fn scale(&self, r: &Rational) -> Self {
        CycloNum::new(&self.re * r, &self.jm * r)
    }
}

impl Add<&CycloNum> for &CycloNum {
    type Output = CycloNum;
    fn add(self, rhs: &CycloNum) -> CycloNum {
        CycloNum::new(&self.re + &rhs.re, &self.jm + &rhs.jm)
    }
}

impl Sub<&CycloNum> for &CycloNum {
    type Output = CycloNum;
    fn sub(self, rhs: &CycloNum) -> CycloNum {
        CycloNum::new(&self.re - &rhs.re, &self.jm - &rhs.jm)
    }
}

impl Mul<&CycloNum> for &CycloNum {
    type Output = CycloNum;
    fn mul(self, rhs: &CycloNum) -> CycloNum {
        // (a + bj)(c + dj) = ac - bd + (ad + bc - bd) j
        let ac = &self.re * &rhs.re;
        let bd = &self.jm * &rhs.jm;
        let ad = &self.re * &rhs.jm;
        let bc = &self.jm * &rhs.re;
        CycloNum::new(&ac - &bd, &(&ad + &bc) - &bd)
    }
}

impl Neg for &CycloNum {
    type Output = CycloNum;
    fn neg(self) -> CycloNum {
        CycloNum::new(-&self.re, -&self.jm)
    }
}

impl Add for CycloNum {
    type Output = CycloNum;
    fn add(self, rhs: CycloNum) -> CycloNum {
        &self + &rhs
    }
}

impl Sub for CycloNum {
    type Output = CycloNum;
    fn sub(self, rhs: CycloNum) -> CycloNum {
        &self - &rhs
    }
}

impl Mul for CycloNum {
    type Output = CycloNum;
    fn mul(self, rhs: CycloNum) -> CycloNum {
        &self * &rhs
    }
}

impl Neg for CycloNum {
    type Output = CycloNum;
    fn neg(self) -> CycloNum {
        -&self
    }
}

impl fmt::Display for CycloNum {
    /// Prints in the expression syntax: `2/3`, `-j`, `1 - 2*j`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.jm.is_zero() {
            return write!(f, "{}", self.re);
        }
        let j_term = |f: &mut fmt::Formatter<'_>, c: &Rational| {
            if c.is_one() {
                write!(f, "j")
            } else {
                write!(f, "{c}*j")
            }
        };
        if self.re.is_zero() {
            if self.jm.is_negative() {
                write!(f, "-")?;
            }
            return j_term(f, &self.jm.abs());
        }
        write!(f, "{}", self.re)?;
        write!(f, "{}", if self.jm.is_negative() { " - " } else { " + " })?;
        j_term(f, &self.jm.abs())
    }
}
