//! Graded tensor products `A ⊗ B` with the twisted product
//! `(A⊗B)(C⊗D) = j^{|B||C|} AC ⊗ BD`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::ops::{Add, AddAssign, Neg, Sub};

use crate::algebra::{Element, Presentation, Word};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct TensorElement {
    terms: BTreeMap<(Word, Word), Scalar>,
}

impl TensorElement {
    pub fn zero() -> Self {
        TensorElement::default()
    }

    pub fn one() -> Self {
        TensorElement::term(Word::empty(), Word::empty(), Scalar::one())
    }

    pub fn term(l: Word, r: Word, c: Scalar) -> Self {
        let mut t = TensorElement::zero();
        t.add_term(l, r, c);
        t
    }

    /// `a ⊗ b`, bilinear in the terms of `a` and `b`.
    pub fn pure(a: &Element, b: &Element) -> Self {
        let mut t = TensorElement::zero();
        for (wa, ca) in a.terms() {
            for (wb, cb) in b.terms() {
                t.add_term(wa.clone(), wb.clone(), ca * cb);
            }
        }
        t
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

    pub fn terms(&self) -> impl Iterator<Item = (&(Word, Word), &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, l: &Word, r: &Word) -> Scalar {
        self.terms
            .get(&(l.clone(), r.clone()))
            .cloned()
            .unwrap_or_default()
    }

    pub fn add_term(&mut self, l: Word, r: Word, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry((l, r)) {
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

    pub fn scale(&self, c: &Scalar) -> TensorElement {
        let mut out = TensorElement::zero();
        for ((l, r), a) in &self.terms {
            out.add_term(l.clone(), r.clone(), a * c);
        }
        out
    }
}

impl AddAssign<&TensorElement> for TensorElement {
    fn add_assign(&mut self, rhs: &TensorElement) {
        for ((l, r), c) in &rhs.terms {
            self.add_term(l.clone(), r.clone(), c.clone());
        }
    }
}

impl Add<&TensorElement> for &TensorElement {
    type Output = TensorElement;
    fn add(self, rhs: &TensorElement) -> TensorElement {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&TensorElement> for &TensorElement {
    type Output = TensorElement;
    fn sub(self, rhs: &TensorElement) -> TensorElement {
        let mut out = self.clone();
        out += &-rhs;
        out
    }
}

impl Neg for &TensorElement {
    type Output = TensorElement;
    fn neg(self) -> TensorElement {
        self.scale(&-Scalar::one())
    }
}

/// The pair of presentations the two legs are reduced against.
#[derive(Clone, Copy, Debug)]
pub struct TensorSpace<'a> {
    pub left: &'a Presentation,
    pub right: &'a Presentation,
}

impl<'a> TensorSpace<'a> {
    pub fn new(left: &'a Presentation, right: &'a Presentation) -> Self {
        TensorSpace { left, right }
    }

    pub fn validate(&self, t: &TensorElement) -> Result<()> {
        let (nl, nr) = (self.left.generators().len(), self.right.generators().len());
        for (l, r) in t.terms.keys() {
            if let Some(&g) = l.letters().iter().find(|&&g| g as usize >= nl) {
                return Err(foreign(g, self.left));
            }
            if let Some(&g) = r.letters().iter().find(|&&g| g as usize >= nr) {
                return Err(foreign(g, self.right));
            }
        }
        Ok(())
    }

    /// Twisted product, then normal form on each leg.
    pub fn multiply(&self, a: &TensorElement, b: &TensorElement) -> Result<TensorElement> {
        self.normal_form(&self.multiply_free(a, b)?)
    }

    /// Twisted product of the raw word pairs, without reduction.
    pub fn multiply_free(&self, a: &TensorElement, b: &TensorElement) -> Result<TensorElement> {
        self.validate(a)?;
        self.validate(b)?;
        let mut out = TensorElement::zero();
        for ((al, ar), ac) in &a.terms {
            let gb = self.right.word_grade(ar) as i64;
            for ((bl, br), bc) in &b.terms {
                let gc = self.left.word_grade(bl) as i64;
                let c = &(ac * bc) * &Scalar::j_pow(gb * gc);
                out.add_term(al.concat(bl), ar.concat(br), c);
            }
        }
        Ok(out)
    }

    pub fn normal_form(&self, t: &TensorElement) -> Result<TensorElement> {
        let mut left_cache: BTreeMap<&Word, Element> = BTreeMap::new();
        let mut right_cache: BTreeMap<&Word, Element> = BTreeMap::new();
        let mut out = TensorElement::zero();
        for ((l, r), c) in &t.terms {
            if !left_cache.contains_key(l) {
                left_cache.insert(l, self.left.normal_form(&Element::from_word(l.clone()))?);
            }
            if !right_cache.contains_key(r) {
                right_cache.insert(r, self.right.normal_form(&Element::from_word(r.clone()))?);
            }
            for (nl, cl) in left_cache[l].terms() {
                for (nr, cr) in right_cache[r].terms() {
                    out.add_term(nl.clone(), nr.clone(), &(c * cl) * cr);
                }
            }
        }
        Ok(out)
    }

    /// Product of a list of factors, reduced after every step.
    pub fn product<'t>(
        &self,
        factors: impl IntoIterator<Item = &'t TensorElement>,
    ) -> Result<TensorElement> {
        factors
            .into_iter()
            .try_fold(TensorElement::one(), |acc, f| self.multiply(&acc, f))
    }

    /// Grade of a word pair: the sum of the legs' grades.
    pub fn pair_grade(&self, l: &Word, r: &Word) -> u8 {
        (self.left.word_grade(l) + self.right.word_grade(r)) % 3
    }

    /// `m(a ⊗ b) = ab` into `target`, which must contain both legs' letters
    /// under the same ids.
    pub fn multiply_out(&self, t: &TensorElement, target: &Presentation) -> Result<Element> {
        let mut out = Element::zero();
        for ((l, r), c) in &t.terms {
            out.add_term(l.concat(r), c.clone());
        }
        target.validate(&out)?;
        target.normal_form(&out)
    }

    pub fn display(&self, t: &TensorElement) -> String {
        let mut parts = t.terms.iter().map(|((l, r), c)| {
            let pair = format!(
                "{} ⊗ {}",
                self.left.display_word(l),
                self.right.display_word(r)
            );
            if c.is_one() {
                pair
            } else if (-c).is_one() {
                format!("-{pair}")
            } else {
                format!("({c})*({pair})")
            }
        });
        let Some(first) = parts.next() else {
            return "0".into();
        };
        crate::algebra::join_signed(first, parts)
    }
}

fn foreign(g: u8, p: &Presentation) -> Error {
    Error::ForeignGenerator {
        id: g,
        presentation: p.name().to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentations::omega_ids::*;
    use crate::presentations::{omega, plane};

    fn w(l: &[u8]) -> Word {
        Word::from_slice(l)
    }

    #[test]
    fn twist_uses_inner_grades() {
        let sp = TensorSpace::new(plane(), omega());
        let a = TensorElement::term(w(&[X]), w(&[DX]), Scalar::one());
        let b = TensorElement::term(w(&[TH]), w(&[DX]), Scalar::one());
        let expected = TensorElement::term(w(&[X, TH]), w(&[DX, DX]), Scalar::j());
        assert_eq!(sp.multiply(&a, &b).unwrap(), expected);
    }

    #[test]
    fn grade_zero_inner_factors_do_not_twist() {
        let sp = TensorSpace::new(plane(), plane());
        let a = TensorElement::term(w(&[X]), w(&[X]), Scalar::one());
        let b = TensorElement::term(w(&[X]), w(&[TH]), Scalar::one());
        let expected = TensorElement::term(w(&[X, X]), w(&[X, TH]), Scalar::one());
        assert_eq!(sp.multiply(&a, &b).unwrap(), expected);
        assert_eq!(sp.multiply(&TensorElement::one(), &b).unwrap(), b);
    }

    #[test]
    fn legs_reduce_independently() {
        let sp = TensorSpace::new(plane(), plane());
        let t = TensorElement::term(w(&[TH, TH, TH]), w(&[X]), Scalar::one());
        assert!(sp.normal_form(&t).unwrap().is_zero());
        let u = TensorElement::term(w(&[TH, X]), w(&[]), Scalar::one());
        let expected = TensorElement::term(w(&[X, TH]), w(&[]), Scalar::q_pow(-1));
        assert_eq!(sp.normal_form(&u).unwrap(), expected);
    }

    #[test]
    fn foreign_letters_are_rejected() {
        let sp = TensorSpace::new(plane(), plane());
        let t = TensorElement::term(w(&[DX]), w(&[]), Scalar::one());
        assert!(matches!(
            sp.multiply(&t, &t),
            Err(Error::ForeignGenerator { .. })
        ));
    }
}
