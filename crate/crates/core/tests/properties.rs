use proptest::prelude::*;

use superplane::algebra::{Element, Gen, Strategy as Reduction, Word};
use superplane::calculus::differentiate;
use superplane::costructure::{coproduct, counit, plane_square};
use superplane::operators::{t_closed_form, PlaneMonomial, PlaneOperator};
use superplane::presentations::{omega, plane};
use superplane::scalar::{CycloNum, Rational, Scalar};
use superplane::syntax::{evaluate, parse_scalar, AlgebraKind, Value};
use superplane::tensor::TensorElement;

fn cyclo() -> impl Strategy<Value = CycloNum> {
    (-20i64..=20, 1i64..=9, -20i64..=20, 1i64..=9)
        .prop_map(|(a, b, c, d)| CycloNum::new(Rational::new(a, b), Rational::new(c, d)))
}

fn scalar() -> impl Strategy<Value = Scalar> {
    prop::collection::vec((cyclo(), -4i32..=4), 0..4).prop_map(|terms| {
        terms
            .into_iter()
            .fold(Scalar::zero(), |acc, (c, k)| &acc + &Scalar::monomial(c, k))
    })
}

fn element(letters: std::ops::Range<Gen>, max_len: usize) -> impl Strategy<Value = Element> {
    prop::collection::vec(
        (prop::collection::vec(letters, 0..=max_len), scalar()),
        1..4,
    )
    .prop_map(|terms| {
        terms.into_iter().fold(Element::zero(), |acc, (w, c)| {
            &acc + &Element::term(Word::from_slice(&w), c)
        })
    })
}

fn word(letters: std::ops::Range<Gen>, max_len: usize) -> impl Strategy<Value = Vec<Gen>> {
    prop::collection::vec(letters, 0..=max_len)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn scalar_ring_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &Scalar::one(), a.clone());
    }

    #[test]
    fn cyclo_inverse(c in cyclo(), k in -6i32..=6) {
        prop_assume!(!c.is_zero());
        prop_assert!((&c * &c.inv().unwrap()).is_one());
        let s = Scalar::monomial(c, k);
        prop_assert!((&s * &s.inv().unwrap()).is_one());
    }

    #[test]
    fn scalar_print_parse(s in scalar()) {
        prop_assert_eq!(parse_scalar(&s.to_string()).unwrap(), s);
    }

    #[test]
    fn normal_form_is_idempotent(e in element(0..7, 5)) {
        let p = omega();
        let n = p.normal_form(&e).unwrap();
        prop_assert_eq!(p.normal_form(&n).unwrap(), n.clone());
        prop_assert!(n.terms().all(|(w, _)| p.is_normal(w)));
    }

    #[test]
    fn reduction_strategies_agree(w in word(0..7, 6)) {
        let p = omega();
        let e = Element::word(&w);
        prop_assert_eq!(p.reduce(&e, Reduction::Leftmost).unwrap(), p.reduce(&e, Reduction::Rightmost).unwrap());
    }

    #[test]
    fn normal_form_respects_products(a in element(0..7, 3), b in element(0..7, 3)) {
        let p = omega();
        let na = p.normal_form(&a).unwrap();
        let nb = p.normal_form(&b).unwrap();
        prop_assert_eq!(p.normal_form(&(&a * &b)).unwrap(), p.normal_form(&(&na * &nb)).unwrap());
    }

    #[test]
    fn element_print_parse(e in element(0..7, 4)) {
        let n = omega().normal_form(&e).unwrap();
        let back = evaluate(&omega().display(&n), AlgebraKind::Omega).unwrap().normalize(AlgebraKind::Omega).unwrap();
        let expect = Value::Element(n).normalize(AlgebraKind::Omega).unwrap();
        prop_assert_eq!(back, expect);
    }

    #[test]
    fn tensor_product_is_associative(a in element(0..3, 2), b in element(0..3, 2), c in element(0..3, 2)) {
        let sp = plane_square();
        let (ta, tb, tc) = (coproduct(&a).unwrap(), coproduct(&b).unwrap(), coproduct(&c).unwrap());
        let left = sp.multiply(&sp.multiply(&ta, &tb).unwrap(), &tc).unwrap();
        let right = sp.multiply(&ta, &sp.multiply(&tb, &tc).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn coproduct_is_multiplicative(a in element(1..3, 3), b in element(1..3, 3)) {
        let sp = plane_square();
        let lhs = coproduct(&(&a * &b)).unwrap();
        let rhs = sp.multiply(&coproduct(&a).unwrap(), &coproduct(&b).unwrap()).unwrap();
        prop_assert_eq!(sp.normal_form(&(&lhs - &rhs)).unwrap(), TensorElement::zero());
    }

    #[test]
    fn counit_is_multiplicative(a in element(0..3, 3), b in element(0..3, 3)) {
        prop_assert_eq!(counit(&(&a * &b)).unwrap(), &counit(&a).unwrap() * &counit(&b).unwrap());
        prop_assert_eq!(counit(&plane().normal_form(&a).unwrap()).unwrap(), counit(&a).unwrap());
    }

    #[test]
    fn graded_leibniz(u in word(0..7, 3), v in word(0..7, 3)) {
        let p = omega();
        let (a, b) = (Element::word(&u), Element::word(&v));
        let sign = Scalar::j_pow(p.word_grade(&Word::from_slice(&u)) as i64);
        let lhs = differentiate(&(&a * &b)).unwrap();
        let rhs = &(&differentiate(&a).unwrap() * &b) + &(&a * &differentiate(&b).unwrap()).scale(&sign);
        prop_assert!(p.normal_form(&(&lhs - &rhs)).unwrap().is_zero());
    }

    #[test]
    fn d_cubed_vanishes(e in element(0..3, 4)) {
        let d3 = differentiate(&differentiate(&differentiate(&e).unwrap()).unwrap()).unwrap();
        prop_assert!(omega().normal_form(&d3).unwrap().is_zero());
    }

    #[test]
    fn t_matches_closed_form(m in 0u32..=40, k in 0u32..=2) {
        let p = PlaneMonomial::new(m, k).unwrap();
        prop_assert_eq!(PlaneOperator::T.act(p), t_closed_form(p));
    }
}
