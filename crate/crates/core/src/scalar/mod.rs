//! Exact coefficients: Laurent polynomials in the formal parameter `q`
//! with coefficients in ℚ(j), `j` a primitive cube root of unity.

mod cyclo;
mod rational;

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

pub use cyclo::CycloNum;
pub use rational::Rational;

use crate::error::{Error, Result};

/// A finitely supported map `q`-exponent → [`CycloNum`], kept sorted by
/// exponent with no zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Scalar {
    terms: Vec<(i32, CycloNum)>,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Scalar::from_cyclo(CycloNum::one())
    }

    pub fn from_integer(n: i64) -> Self {
        Scalar::from_cyclo(CycloNum::from_integer(n))
    }

    pub fn from_rational(r: Rational) -> Self {
        Scalar::from_cyclo(CycloNum::from_rational(r))
    }

    pub fn from_cyclo(c: CycloNum) -> Self {
        Scalar::monomial(c, 0)
    }

    /// `c·q^k`.
    pub fn monomial(c: CycloNum, k: i32) -> Self {
        if c.is_zero() {
            Scalar::zero()
        } else {
            Scalar {
                terms: vec![(k, c)],
            }
        }
    }

    pub fn j() -> Self {
        Scalar::from_cyclo(CycloNum::j())
    }

    pub fn q() -> Self {
        Scalar::q_pow(1)
    }

    pub fn q_pow(k: i32) -> Self {
        Scalar::monomial(CycloNum::one(), k)
    }

    /// `j^(k mod 3)`: `1`, `j` or `-1 - j`.
    pub fn j_pow(k: i64) -> Self {
        Scalar::from_cyclo(CycloNum::j_pow(k))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        matches!(self.terms.as_slice(), [(0, c)] if c.is_one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &CycloNum)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    /// `Some((c, k))` when the scalar is the single term `c·q^k`.
    pub fn as_monomial(&self) -> Option<(&CycloNum, i32)> {
        match self.terms.as_slice() {
            [(k, c)] => Some((c, *k)),
            _ => None,
        }
    }

    /// Constant term, if the scalar has no `q` dependence.
    pub fn as_constant(&self) -> Option<CycloNum> {
        match self.terms.as_slice() {
            [] => Some(CycloNum::zero()),
            [(0, c)] => Some(c.clone()),
            _ => None,
        }
    }

    /// Inverse of a Laurent monomial `c·q^k`; anything else is not a unit.
    pub fn inv(&self) -> Result<Scalar> {
        match self.terms.as_slice() {
            [] => Err(Error::DivisionByZero),
            [(k, c)] => Ok(Scalar::monomial(c.inv()?, -k)),
            _ => Err(Error::NonMonomial(self.to_string())),
        }
    }

    pub fn scale(&self, c: &CycloNum) -> Scalar {
        if c.is_zero() {
            return Scalar::zero();
        }
        Scalar {
            terms: self.terms.iter().map(|(k, a)| (*k, a * c)).collect(),
        }
    }

    /// Multiply by `q^k`.
    pub fn shift(&self, k: i32) -> Scalar {
        Scalar {
            terms: self.terms.iter().map(|(e, a)| (e + k, a.clone())).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Scalar {
        (0..n).fold(Scalar::one(), |acc, _| &acc * self)
    }

    fn from_unsorted(mut raw: Vec<(i32, CycloNum)>) -> Scalar {
        raw.sort_by_key(|(k, _)| *k);
        let mut terms: Vec<(i32, CycloNum)> = Vec::with_capacity(raw.len());
        for (k, c) in raw {
            match terms.last_mut() {
                Some((lk, lc)) if *lk == k => *lc = &*lc + &c,
                _ => terms.push((k, c)),
            }
        }
        terms.retain(|(_, c)| !c.is_zero());
        Scalar { terms }
    }
}

impl Add<&Scalar> for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        // merge of two sorted term lists
        let mut out = Vec::with_capacity(self.terms.len() + rhs.terms.len());
        let (mut a, mut b) = (self.terms.iter().peekable(), rhs.terms.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((ka, ca)), Some((kb, cb))) => {
                    if ka < kb {
                        out.push((*ka, ca.clone()));
                        a.next();
                    } else if kb < ka {
                        out.push((*kb, cb.clone()));
                        b.next();
                    } else {
                        let s = ca + cb;
                        if !s.is_zero() {
                            out.push((*ka, s));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some(_), None) => {
                    out.extend(a.cloned());
                    break;
                }
                (None, Some(_)) => {
                    out.extend(b.cloned());
                    break;
                }
                (None, None) => break,
            }
        }
        Scalar { terms: out }
    }
}

impl Sub<&Scalar> for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Mul<&Scalar> for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() || rhs.is_zero() {
            return Scalar::zero();
        }
        if let ([(ka, ca)], [(kb, cb)]) = (self.terms.as_slice(), rhs.terms.as_slice()) {
            return Scalar::monomial(ca * cb, ka + kb);
        }
        let mut raw = Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for (ka, ca) in &self.terms {
            for (kb, cb) in &rhs.terms {
                raw.push((ka + kb, ca * cb));
            }
        }
        Scalar::from_unsorted(raw)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

macro_rules! owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_integer(n)
    }
}

impl From<CycloNum> for Scalar {
    fn from(c: CycloNum) -> Self {
        Scalar::from_cyclo(c)
    }
}

fn write_q(f: &mut fmt::Formatter<'_>, k: i32) -> fmt::Result {
    if k == 1 {
        write!(f, "q")
    } else {
        write!(f, "q^{k}")
    }
}

fn fmt_term(f: &mut fmt::Formatter<'_>, c: &CycloNum, k: i32) -> fmt::Result {
    if k == 0 {
        return write!(f, "{c}");
    }
    if c.is_one() {
        return write_q(f, k);
    }
    if c.jm.is_zero() && c.re == -Rational::one() {
        write!(f, "-")?;
        return write_q(f, k);
    }
    if c.jm.is_zero() || c.re.is_zero() {
        write!(f, "{c}*")?;
    } else {
        write!(f, "({c})*")?;
    }
    write_q(f, k)
}

impl fmt::Display for Scalar {
    /// Output re-parses through the expression syntax.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            let s = TermFmt(c, *k).to_string();
            match (i, s.strip_prefix('-')) {
                (0, _) => write!(f, "{s}")?,
                (_, Some(rest)) => write!(f, " - {rest}")?,
                (_, None) => write!(f, " + {s}")?,
            }
        }
        Ok(())
    }
}

struct TermFmt<'a>(&'a CycloNum, i32);

impl fmt::Display for TermFmt<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_term(f, self.0, self.1)
    }
}
