//! Graded free associative algebra over [`Scalar`] and its quotients.
//!
//! [`Element`]s are linear combinations of raw words and are never reduced
//! implicitly; [`Presentation::normal_form`] does the reduction.

mod confluence;
mod presentation;

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use smallvec::SmallVec;

use crate::scalar::Scalar;

pub use confluence::{ConfluenceReport, CriticalPair, Divergence};
pub(crate) use presentation::join_signed;
pub use presentation::{
    Generator, Presentation, PresentationBuilder, Relation, RewriteRule, Strategy,
    DEFAULT_STEP_BUDGET,
};

/// Generator id, an index into a presentation's generator list.
pub type Gen = u8;

/// A sequence of generators; the empty word is the unit.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Word(SmallVec<[Gen; 16]>);

impl Word {
    pub fn empty() -> Self {
        Word(SmallVec::new())
    }

    pub fn letter(g: Gen) -> Self {
        Word(SmallVec::from_slice(&[g]))
    }

    pub fn from_slice(s: &[Gen]) -> Self {
        Word(SmallVec::from_slice(s))
    }

    pub fn letters(&self) -> &[Gen] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn push(&mut self, g: Gen) {
        self.0.push(g);
    }

    /// `prefix · middle · suffix` where prefix/suffix are slices of `self`.
    pub(crate) fn splice(&self, start: usize, end: usize, middle: &[Gen]) -> Word {
        let mut v: SmallVec<[Gen; 16]> =
            SmallVec::with_capacity(self.len() - (end - start) + middle.len());
        v.extend_from_slice(&self.0[..start]);
        v.extend_from_slice(middle);
        v.extend_from_slice(&self.0[end..]);
        Word(v)
    }
}

impl FromIterator<Gen> for Word {
    fn from_iter<I: IntoIterator<Item = Gen>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

/// Z₃ grade of an element.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Grade {
    /// Every word has this grade. The zero element reports grade 0.
    Homogeneous(u8),
    Mixed,
}

/// A finite linear combination of words with nonzero [`Scalar`] coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Element {
    terms: BTreeMap<Word, Scalar>,
}

impl Element {
    pub fn zero() -> Self {
        Element::default()
    }

    pub fn one() -> Self {
        Element::from_word(Word::empty())
    }

    pub fn from_word(w: Word) -> Self {
        Element::term(w, Scalar::one())
    }

    pub fn generator(g: Gen) -> Self {
        Element::from_word(Word::letter(g))
    }

    pub fn term(w: Word, c: Scalar) -> Self {
        let mut e = Element::zero();
        e.add_term(w, c);
        e
    }

    pub fn from_scalar(c: Scalar) -> Self {
        Element::term(Word::empty(), c)
    }

    /// The product `g₁ g₂ … gₙ` of the given letters.
    pub fn word(letters: &[Gen]) -> Self {
        Element::from_word(Word::from_slice(letters))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Word, Scalar)> {
        self.terms.into_iter()
    }

    pub fn coefficient(&self, w: &Word) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    /// Pure scalar value, if the element only has the empty word.
    pub fn as_scalar(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => self.terms.get(&Word::empty()).cloned(),
            _ => None,
        }
    }

    pub fn add_term(&mut self, w: Word, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn scale(&self, c: &Scalar) -> Element {
        if c.is_zero() {
            return Element::zero();
        }
        Element {
            terms: self.terms.iter().map(|(w, a)| (w.clone(), a * c)).collect(),
        }
    }

    /// Free (concatenation) power; not reduced.
    pub fn pow(&self, n: u32) -> Element {
        (0..n).fold(Element::one(), |acc, _| &acc * self)
    }

    /// Largest generator id occurring in any word.
    pub fn max_generator(&self) -> Option<Gen> {
        self.terms
            .keys()
            .flat_map(|w| w.letters().iter().copied())
            .max()
    }

    /// Linear extension of a word map.
    pub fn map_words<F>(&self, mut f: F) -> Element
    where
        F: FnMut(&Word) -> Element,
    {
        let mut out = Element::zero();
        for (w, c) in &self.terms {
            out += &f(w).scale(c);
        }
        out
    }

    /// Relabels generators through `map` (indexed by old id).
    pub fn relabel(&self, map: &[Gen]) -> Element {
        let mut out = Element::zero();
        for (w, c) in &self.terms {
            out.add_term(
                w.letters().iter().map(|&g| map[g as usize]).collect(),
                c.clone(),
            );
        }
        out
    }
}

impl AddAssign<&Element> for Element {
    fn add_assign(&mut self, rhs: &Element) {
        for (w, c) in &rhs.terms {
            self.add_term(w.clone(), c.clone());
        }
    }
}

impl Add<&Element> for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&Element> for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), -c);
        }
        out
    }
}

impl Mul<&Element> for &Element {
    type Output = Element;
    /// Concatenation product, bilinear and unreduced.
    fn mul(self, rhs: &Element) -> Element {
        let mut out = Element::zero();
        for (wa, ca) in &self.terms {
            for (wb, cb) in &rhs.terms {
                out.add_term(wa.concat(wb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        Element {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }
}

macro_rules! owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Element {
            type Output = Element;
            fn $method(self, rhs: Element) -> Element {
                (&self).$method(&rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for Element {
    type Output = Element;
    fn neg(self) -> Element {
        -&self
    }
}

impl Mul<&Scalar> for &Element {
    type Output = Element;
    fn mul(self, rhs: &Scalar) -> Element {
        self.scale(rhs)
    }
}

impl From<Scalar> for Element {
    fn from(c: Scalar) -> Self {
        Element::from_scalar(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_product_is_concatenation() {
        let x = Element::generator(1);
        let th = Element::generator(2);
        assert_eq!(&x * &th, Element::word(&[1, 2]));
        assert_eq!(&th * &th.pow(2), Element::word(&[2, 2, 2]));
        assert_eq!(&Element::one() * &x, x);
    }

    #[test]
    fn cancellation_drops_terms() {
        let x = Element::generator(1);
        assert!((&x - &x).is_zero());
        let mut e = x.clone();
        e.add_term(Word::letter(1), -Scalar::one());
        assert!(e.is_zero());
    }
}
