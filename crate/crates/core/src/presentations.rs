//! The bundled algebras.
//!
//! Relations are written the way they are usually stated (`x*dth = ...`)
//! and oriented automatically by [`PresentationBuilder::build`]. The plane
//! is a prefix of `omega`, so plane elements are valid `omega` elements.

use std::sync::LazyLock;

use crate::algebra::{Element, Gen, Presentation, PresentationBuilder, Word};
use crate::error::Result;
use crate::scalar::Scalar;
use crate::syntax::parse_relation;

/// Generator ids shared by `plane` and `omega`.
pub mod omega_ids {
    use crate::algebra::Gen;
    pub const XI: Gen = 0;
    pub const X: Gen = 1;
    pub const TH: Gen = 2;
    pub const DX: Gen = 3;
    pub const DTH: Gen = 4;
    pub const D2X: Gen = 5;
    pub const D2TH: Gen = 6;
}

/// Differential-first ordering of the first-order forms.
pub mod dfirst_ids {
    use crate::algebra::Gen;
    pub const DX: Gen = 0;
    pub const DTH: Gen = 1;
    pub const X: Gen = 2;
    pub const TH: Gen = 3;
}

pub mod dual_ids {
    use crate::algebra::Gen;
    pub const PHI: Gen = 0;
    pub const Y: Gen = 1;
}

pub mod partial_ids {
    use crate::algebra::Gen;
    pub const X: Gen = 0;
    pub const TH: Gen = 1;
    pub const PX: Gen = 2;
    pub const PTH: Gen = 3;
}

/// Matrix entries come first in `gl`, `gl-plane` and `gl-dual`; the plane
/// (or dual plane) letters follow as ids 4 and 5.
pub mod gl_ids {
    use crate::algebra::Gen;
    pub const A: Gen = 0;
    pub const BE: Gen = 1;
    pub const GA: Gen = 2;
    pub const DD: Gen = 3;
    pub const X: Gen = 4;
    pub const TH: Gen = 5;
    pub const PHI: Gen = 4;
    pub const Y: Gen = 5;
}

const PLANE_RELATIONS: &[&str] = &["x*th = q*th*x", "th^3 = 0"];

const INVERSE_RELATIONS: &[&str] = &["x*xi = 1", "xi*x = 1"];

const FIRST_ORDER_RELATIONS: &[&str] = &[
    "x*dx = j^2*dx*x",
    "x*dth = q*dth*x + (j^2 - 1)*dx*th",
    "th*dx = j*q^-1*dx*th",
    "th*dth = j*dth*th",
    "dx*dth = j*q*dth*dx",
    "dx^3 = 0",
];

const SECOND_ORDER_RELATIONS: &[&str] = &[
    "x*d2x = j^2*d2x*x",
    "x*d2th = q*d2th*x + (j^2 - 1)*d2x*th",
    "th*d2x = q^-1*d2x*th",
    "th*d2th = d2th*th",
    "dx*d2x = j^-2*d2x*dx",
    "dx*d2th = q*d2th*dx + (j - j^-1)*d2x*dth",
    "dth*d2x = j^2*q^-1*d2x*dth",
    "dth*d2th = d2th*dth",
    "d2x*d2th = j^2*q*d2th*d2x",
];

const PARTIAL_RELATIONS: &[&str] = &[
    "px*x = 1 + j^2*x*px + (j^2 - 1)*th*pth",
    "px*th = j^2*q^-1*th*px",
    "pth*x = q*x*pth",
    "pth*th = 1 + j^2*th*pth",
    "px*pth = j*q*pth*px",
    "pth^3 = 0",
];

const DUAL_RELATIONS: &[&str] = &["phi*y = q*j*y*phi", "phi^3 = 0"];

/// Relations between coordinates and forms of the calculus, in the order
/// they are usually listed (first-order, then second-order).
pub fn calculus_relation_texts() -> impl Iterator<Item = &'static str> {
    FIRST_ORDER_RELATIONS
        .iter()
        .chain(SECOND_ORDER_RELATIONS)
        .copied()
}

pub fn plane_relation_texts() -> &'static [&'static str] {
    PLANE_RELATIONS
}

pub fn partial_relation_texts() -> &'static [&'static str] {
    PARTIAL_RELATIONS
}

/// Cancels adjacent `x·xi` and `xi·x` in every word.
fn free_reduce(e: &Element, x: Gen, xi: Gen) -> Element {
    let mut out = Element::zero();
    for (w, c) in e.terms() {
        let mut stack: Vec<Gen> = Vec::with_capacity(w.len());
        for &g in w.letters() {
            match stack.last() {
                Some(&t) if (t == x && g == xi) || (t == xi && g == x) => {
                    stack.pop();
                }
                _ => stack.push(g),
            }
        }
        out.add_term(Word::from_slice(&stack), c.clone());
    }
    out
}

/// Commutation of `xi` with each generator `g`, obtained by conjugating the
/// stated relation `x*g = R` into `g*xi = xi*R*xi`.
fn inverse_commutations(b: PresentationBuilder, texts: &[&str]) -> Result<PresentationBuilder> {
    let symbols: Vec<String> = b.generators().iter().map(|g| g.symbol.clone()).collect();
    let syms: Vec<&str> = symbols.iter().map(String::as_str).collect();
    let id = |s: &str| syms.iter().position(|t| *t == s).expect("generator") as Gen;
    let (x, xi) = (id("x"), id("xi"));
    let xi_e = Element::generator(xi);
    let mut b = b;
    for text in texts {
        let (lhs, rhs) = parse_relation(text, &syms)?;
        let mut terms = lhs.terms();
        let Some((w, c)) = terms.next() else { continue };
        let l = w.letters();
        if terms.next().is_some()
            || !c.is_one()
            || l.len() != 2
            || l[0] != x
            || l[1] == xi
            || l[1] == x
        {
            continue;
        }
        let g = l[1];
        let conj = free_reduce(&(&(&xi_e * &rhs) * &xi_e), x, xi);
        let label = format!(
            "{}*xi = xi*({})*xi",
            syms[g as usize],
            text.split_once('=').unwrap().1.trim()
        );
        b = b.relation(label, Element::word(&[g, xi]), conj);
    }
    Ok(b)
}

fn build_plane() -> Result<Presentation> {
    let b = Presentation::builder("plane")
        .generator("xi", 0, 0)
        .generator("x", 0, 1)
        .generator("th", 1, 1)
        .relations_str(PLANE_RELATIONS)?
        .relations_str(INVERSE_RELATIONS)?;
    inverse_commutations(b, PLANE_RELATIONS)?.build()
}

/// Weights make `dth*xi -> ... + xi*dx*th*xi` decreasing: `xi` weighs 0 and
/// the `dth`, `d2th` letters weigh 2.
fn omega_builder() -> PresentationBuilder {
    Presentation::builder("omega")
        .generator("xi", 0, 0)
        .generator("x", 0, 1)
        .generator("th", 1, 1)
        .generator("dx", 1, 1)
        .generator("dth", 2, 2)
        .generator("d2x", 2, 1)
        .generator("d2th", 0, 2)
}

fn build_omega() -> Result<Presentation> {
    let b = omega_builder()
        .relations_str(PLANE_RELATIONS)?
        .relations_str(INVERSE_RELATIONS)?
        .relations_str(FIRST_ORDER_RELATIONS)?
        .relations_str(SECOND_ORDER_RELATIONS)?;
    let all: Vec<&str> = PLANE_RELATIONS
        .iter()
        .chain(FIRST_ORDER_RELATIONS)
        .chain(SECOND_ORDER_RELATIONS)
        .copied()
        .collect();
    inverse_commutations(b, &all)?.build()
}

fn build_omega_dfirst() -> Result<Presentation> {
    Presentation::builder("omega-dfirst")
        .generator("dx", 1, 1)
        .generator("dth", 2, 1)
        .generator("x", 0, 1)
        .generator("th", 1, 1)
        .relations_str(PLANE_RELATIONS)?
        .relations_str(FIRST_ORDER_RELATIONS)?
        .build()
}

fn build_partial() -> Result<Presentation> {
    Presentation::builder("mixed-partial")
        .generator("x", 0, 1)
        .generator("th", 1, 1)
        .generator("px", 0, 1)
        .generator("pth", 2, 1)
        .relations_str(PLANE_RELATIONS)?
        .relations_str(PARTIAL_RELATIONS)?
        .build()
}

fn build_dual() -> Result<Presentation> {
    Presentation::builder("dual")
        .generator("phi", 1, 1)
        .generator("y", 2, 1)
        .relations_str(DUAL_RELATIONS)?
        .build()
}

/// Coefficients of the matrix-entry relations, each written as
/// `lhs = coefficient * rhs (+ correction)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlCoefficients {
    /// `a be = c be a`
    pub a_be: Scalar,
    /// `dd be = c be dd`
    pub dd_be: Scalar,
    /// `a ga = c ga a`
    pub a_ga: Scalar,
    /// `dd ga = c ga dd`
    pub dd_ga: Scalar,
    /// `a dd = c dd a + c' be ga`
    pub a_dd: Scalar,
    pub a_dd_correction: Scalar,
    /// `be ga = c ga be`
    pub be_ga: Scalar,
}

impl Default for GlCoefficients {
    fn default() -> Self {
        let j = Scalar::j_pow;
        let q = Scalar::q_pow;
        GlCoefficients {
            a_be: &j(-1) * &q(-1),
            dd_be: &j(1) * &q(-1),
            a_ga: q(1),
            dd_ga: q(1),
            a_dd: Scalar::one(),
            a_dd_correction: &q(-1) * &(&Scalar::one() - &j(1)),
            be_ga: q(2),
        }
    }
}

impl GlCoefficients {
    pub const FIELDS: [&'static str; 7] = [
        "a_be",
        "dd_be",
        "a_ga",
        "dd_ga",
        "a_dd",
        "a_dd_correction",
        "be_ga",
    ];

    pub fn field_mut(&mut self, name: &str) -> Option<&mut Scalar> {
        Some(match name {
            "a_be" => &mut self.a_be,
            "dd_be" => &mut self.dd_be,
            "a_ga" => &mut self.a_ga,
            "dd_ga" => &mut self.dd_ga,
            "a_dd" => &mut self.a_dd,
            "a_dd_correction" => &mut self.a_dd_correction,
            "be_ga" => &mut self.be_ga,
            _ => return None,
        })
    }

    fn relations(&self) -> Vec<(String, Element, Element)> {
        use gl_ids::{A, BE, DD, GA};
        let w = Element::word;
        let rel = |label: &str, l: Element, r: Element| (label.to_string(), l, r);
        vec![
            rel("a*be = c*be*a", w(&[A, BE]), w(&[BE, A]).scale(&self.a_be)),
            rel(
                "dd*be = c*be*dd",
                w(&[DD, BE]),
                w(&[BE, DD]).scale(&self.dd_be),
            ),
            rel("a*ga = c*ga*a", w(&[A, GA]), w(&[GA, A]).scale(&self.a_ga)),
            rel(
                "dd*ga = c*ga*dd",
                w(&[DD, GA]),
                w(&[GA, DD]).scale(&self.dd_ga),
            ),
            rel(
                "a*dd = c*dd*a + c'*be*ga",
                w(&[A, DD]),
                &w(&[DD, A]).scale(&self.a_dd) + &w(&[BE, GA]).scale(&self.a_dd_correction),
            ),
            rel(
                "be*ga = c*ga*be",
                w(&[BE, GA]),
                w(&[GA, BE]).scale(&self.be_ga),
            ),
            rel("ga^3 = 0", w(&[GA, GA, GA]), Element::zero()),
        ]
    }
}

/// `gl`, `gl-plane` and `gl-dual` built from one coefficient set.
#[derive(Clone, Debug)]
pub struct GlFamily {
    pub gl: Presentation,
    pub gl_plane: Presentation,
    pub gl_dual: Presentation,
}

fn gl_builder(name: &str) -> PresentationBuilder {
    Presentation::builder(name)
        .generator("a", 0, 1)
        .generator("be", 2, 1)
        .generator("ga", 1, 1)
        .generator("dd", 0, 1)
}

/// Plane letters `j`-commute with matrix entries: `p*e = j^{|p||e|} e*p`.
fn with_cross_rules(mut b: PresentationBuilder) -> PresentationBuilder {
    let gens = b.generators().to_vec();
    for (p, pg) in gens.iter().enumerate().skip(4) {
        for (e, eg) in gens.iter().enumerate().take(4) {
            let label = format!(
                "{}*{} = j^{}*{}*{}",
                pg.symbol,
                eg.symbol,
                pg.grade * eg.grade,
                eg.symbol,
                pg.symbol
            );
            let tw = Scalar::j_pow((pg.grade * eg.grade) as i64);
            b = b.relation(
                label,
                Element::word(&[p as Gen, e as Gen]),
                Element::word(&[e as Gen, p as Gen]).scale(&tw),
            );
        }
    }
    b
}

pub fn gl_family(coeffs: &GlCoefficients) -> Result<GlFamily> {
    let add_gl = |mut b: PresentationBuilder| {
        for (label, l, r) in coeffs.relations() {
            b = b.relation(label, l, r);
        }
        b
    };
    let gl = add_gl(gl_builder("gl")).build()?;
    let gl_plane = with_cross_rules(
        add_gl(gl_builder("gl-plane"))
            .generator("x", 0, 1)
            .generator("th", 1, 1),
    )
    .relations_str(PLANE_RELATIONS)?
    .build()?;
    let gl_dual = with_cross_rules(
        add_gl(gl_builder("gl-dual"))
            .generator("phi", 1, 1)
            .generator("y", 2, 1),
    )
    .relations_str(DUAL_RELATIONS)?
    .build()?;
    Ok(GlFamily {
        gl,
        gl_plane,
        gl_dual,
    })
}

macro_rules! bundled {
    ($(#[$m:meta])* $fn:ident, $store:ident, $build:expr) => {
        static $store: LazyLock<Presentation> =
            LazyLock::new(|| $build.unwrap_or_else(|e| panic!("bundled presentation: {e}")));
        $(#[$m])*
        pub fn $fn() -> &'static Presentation {
            &$store
        }
    };
}

bundled!(
    /// `x, th` with `x` invertible.
    plane, PLANE, build_plane()
);
bundled!(
    /// Coordinates, first- and second-order differentials, and `xi`.
    omega, OMEGA, build_omega()
);
bundled!(
    /// First-order forms with differentials ordered before coordinates.
    omega_dfirst, OMEGA_DFIRST, build_omega_dfirst()
);
bundled!(mixed_partial, PARTIAL, build_partial());
bundled!(dual, DUAL, build_dual());

static GL: LazyLock<GlFamily> = LazyLock::new(|| {
    gl_family(&GlCoefficients::default()).unwrap_or_else(|e| panic!("bundled presentation: {e}"))
});

pub fn gl() -> &'static Presentation {
    &GL.gl
}

pub fn gl_plane() -> &'static Presentation {
    &GL.gl_plane
}

pub fn gl_dual() -> &'static Presentation {
    &GL.gl_dual
}

pub const NAMES: &[&str] = &[
    "plane",
    "omega",
    "omega-dfirst",
    "dual",
    "gl",
    "gl-plane",
    "gl-dual",
    "mixed-partial",
];

pub fn by_name(name: &str) -> Option<&'static Presentation> {
    Some(match name {
        "plane" => plane(),
        "omega" => omega(),
        "omega-dfirst" => omega_dfirst(),
        "dual" => dual(),
        "gl" => gl(),
        "gl-plane" => gl_plane(),
        "gl-dual" => gl_dual(),
        "mixed-partial" => mixed_partial(),
        _ => return None,
    })
}

#[cfg(test)]
mod tests {
    use super::omega_ids::*;
    use super::*;
    use crate::algebra::Element;
    use crate::syntax::parse_scalar;

    fn nf(p: &Presentation, e: &Element) -> Element {
        p.normal_form(e).unwrap()
    }

    fn s(text: &str) -> Scalar {
        parse_scalar(text).unwrap()
    }

    #[test]
    fn every_bundled_presentation_builds() {
        for name in NAMES {
            assert!(by_name(name).is_some(), "{name}");
        }
    }

    #[test]
    fn plane_basics() {
        let p = plane();
        let w = Element::word;
        assert_eq!(nf(p, &w(&[TH, X])), w(&[X, TH]).scale(&s("q^-1")));
        assert!(nf(p, &w(&[TH, TH, TH])).is_zero());
        assert_eq!(nf(p, &w(&[X, XI])), Element::one());
    }

    #[test]
    fn omega_oriented_rules() {
        let p = omega();
        let w = Element::word;
        assert_eq!(nf(p, &w(&[DX, X])), w(&[X, DX]).scale(&Scalar::j()));
        assert!(nf(p, &w(&[DX, DX, DX])).is_zero());
        // x·xi·g = g for every generator
        for g in 0..7 {
            assert_eq!(nf(p, &w(&[X, XI, g])), w(&[g]), "{}", p.symbol(g));
            assert_eq!(nf(p, &w(&[g, X, XI])), w(&[g]), "{}", p.symbol(g));
        }
    }

    #[test]
    fn conjugated_inverse_rules() {
        let p = omega();
        let w = Element::word;
        assert_eq!(nf(p, &w(&[TH, XI])), w(&[XI, TH]).scale(&Scalar::q()));
        assert_eq!(nf(p, &w(&[DX, XI])), w(&[XI, DX]).scale(&Scalar::j_pow(2)));
        // xi*(q*dth*x + (j^2 - 1)*dx*th)*xi, with th*xi = q*xi*th and dx*xi = j^2*xi*dx
        let expected =
            &w(&[XI, DTH]).scale(&Scalar::q()) + &w(&[XI, XI, DX, TH]).scale(&s("(j^2 - 1)*q*j^2"));
        assert_eq!(nf(p, &w(&[DTH, XI])), nf(p, &expected));
    }

    #[test]
    fn exhaustive_confluence_length_four() {
        for name in NAMES {
            let p = by_name(name).unwrap();
            let r = p.check_local_confluence(4).unwrap();
            assert!(r.is_confluent(), "{name}: {:?}", r.divergence);
        }
    }

    #[test]
    fn gl_normal_forms() {
        use super::gl_ids::*;
        let p = gl();
        let w = Element::word;
        assert_eq!(nf(p, &w(&[GA, BE])), w(&[BE, GA]).scale(&s("q^-2")));
        let expected = &w(&[A, DD]) - &w(&[BE, GA]).scale(&s("q^-1*(1 - j)"));
        assert_eq!(nf(p, &w(&[DD, A])), expected);
        let gp = gl_plane();
        assert_eq!(nf(gp, &w(&[TH, BE])), w(&[BE, TH]).scale(&Scalar::j_pow(2)));
        assert_eq!(nf(gp, &w(&[X, A])), w(&[A, X]));
    }

    #[test]
    fn corrupted_coefficient_diverges() {
        let p = omega();
        let rule = p.rule_for(&[DTH, DX]).unwrap();
        let bad = p
            .with_rule(rule.lhs.clone(), rule.rhs.scale(&Scalar::q()))
            .unwrap();
        assert!(!bad.check_local_confluence(4).unwrap().is_confluent());
    }
}
