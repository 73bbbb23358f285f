//! The Lie superalgebra generators `T`, `∇`, the number operator `N` and the
//! partial derivatives `∂x`, `∂θ`, acting on the monomial basis `x^m θ^k`.

use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::{Element, Gen, Word};
use crate::calculus::{cartan_u, cartan_w, differentiate, left_extract};
use crate::costructure::extend_hom;
use crate::error::{Error, Result};
use crate::presentations::omega_ids::{TH, X, XI};
use crate::presentations::{mixed_partial, omega, partial_ids, plane};
use crate::report::{residual, tensor_residual, Check, Checker, Residual};
use crate::scalar::Scalar;
use crate::tensor::{TensorElement, TensorSpace};

/// `x^m θ^k` with `k <= 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PlaneMonomial {
    pub m: u32,
    pub k: u32,
}

impl PlaneMonomial {
    pub const ONE: PlaneMonomial = PlaneMonomial { m: 0, k: 0 };

    /// `None` when `k > 2`.
    pub fn new(m: u32, k: u32) -> Option<Self> {
        (k <= 2).then_some(PlaneMonomial { m, k })
    }

    pub fn degree(self) -> u32 {
        self.m + self.k
    }

    pub fn grade(self) -> u8 {
        (self.k % 3) as u8
    }

    /// Every monomial with `m <= max_m`.
    pub fn up_to(max_m: u32) -> impl Iterator<Item = PlaneMonomial> {
        (0..=max_m).flat_map(|m| (0..3).map(move |k| PlaneMonomial { m, k }))
    }

    /// Every monomial of total degree at most `max_degree`.
    pub fn of_degree_at_most(max_degree: u32) -> impl Iterator<Item = PlaneMonomial> {
        PlaneMonomial::up_to(max_degree).filter(move |p| p.degree() <= max_degree)
    }

    pub fn word(self) -> Word {
        let mut w = Word::empty();
        (0..self.m).for_each(|_| w.push(X));
        (0..self.k).for_each(|_| w.push(TH));
        w
    }

    /// `self · other`, using `θ^k x^m = q^{-km} x^m θ^k`.
    pub fn times(self, other: PlaneMonomial) -> PlaneVector {
        let mut v = PlaneVector::zero();
        if self.k + other.k <= 2 {
            let c = Scalar::q_pow(-((self.k * other.m) as i32));
            v.add_term(
                PlaneMonomial {
                    m: self.m + other.m,
                    k: self.k + other.k,
                },
                c,
            );
        }
        v
    }
}

impl fmt::Display for PlaneMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", plane().display_word(&self.word()))
    }
}

/// A finite combination of plane monomials.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PlaneVector {
    terms: BTreeMap<PlaneMonomial, Scalar>,
}

impl PlaneVector {
    pub fn zero() -> Self {
        PlaneVector::default()
    }

    pub fn monomial(p: PlaneMonomial) -> Self {
        let mut v = PlaneVector::zero();
        v.add_term(p, Scalar::one());
        v
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PlaneMonomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, p: PlaneMonomial) -> Scalar {
        self.terms.get(&p).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, p: PlaneMonomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let s = match self.terms.get(&p) {
            Some(old) => old + &c,
            None => c,
        };
        if s.is_zero() {
            self.terms.remove(&p);
        } else {
            self.terms.insert(p, s);
        }
    }

    pub fn add(&mut self, other: &PlaneVector, c: &Scalar) {
        for (&p, a) in &other.terms {
            self.add_term(p, a * c);
        }
    }

    pub fn scale(&self, c: &Scalar) -> PlaneVector {
        let mut out = PlaneVector::zero();
        out.add(self, c);
        out
    }

    pub fn sub(&self, other: &PlaneVector) -> PlaneVector {
        let mut out = self.clone();
        out.add(other, &-Scalar::one());
        out
    }

    pub fn times(&self, other: &PlaneVector) -> PlaneVector {
        let mut out = PlaneVector::zero();
        for (&a, ca) in &self.terms {
            for (&b, cb) in &other.terms {
                out.add(&a.times(b), &(ca * cb));
            }
        }
        out
    }

    /// Left multiplication by `x`.
    pub fn times_x(&self) -> PlaneVector {
        let mut out = PlaneVector::zero();
        for (&p, c) in &self.terms {
            out.add_term(PlaneMonomial { m: p.m + 1, ..p }, c.clone());
        }
        out
    }

    /// Left multiplication by `θ`.
    pub fn times_theta(&self) -> PlaneVector {
        let theta = PlaneMonomial { m: 0, k: 1 };
        let mut out = PlaneVector::zero();
        for (&p, c) in &self.terms {
            out.add(&theta.times(p), c);
        }
        out
    }

    /// Reads a plane element (in `omega` ids) through its normal form.
    pub fn from_element(e: &Element) -> Result<Self> {
        let nf = plane().normal_form(e)?;
        let mut out = PlaneVector::zero();
        for (word, c) in nf.terms() {
            let l = word.letters();
            let m = l.iter().take_while(|&&g| g == X).count();
            if l[m..].iter().any(|&g| g != TH) || l.contains(&XI) {
                return Err(Error::Unsupported {
                    op: "plane operators",
                    reason: format!(
                        "`{}` is not a polynomial monomial",
                        plane().display_word(word)
                    ),
                });
            }
            out.add_term(
                PlaneMonomial {
                    m: m as u32,
                    k: (l.len() - m) as u32,
                },
                c.clone(),
            );
        }
        Ok(out)
    }

    pub fn to_element(&self) -> Element {
        let mut out = Element::zero();
        for (p, c) in &self.terms {
            out.add_term(p.word(), c.clone());
        }
        out
    }
}

impl fmt::Display for PlaneVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&plane().display(&self.to_element()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PlaneOperator {
    T,
    Nabla,
    N,
    PartialX,
    PartialTheta,
}

impl PlaneOperator {
    pub const ALL: [PlaneOperator; 5] = [
        PlaneOperator::T,
        PlaneOperator::Nabla,
        PlaneOperator::N,
        PlaneOperator::PartialX,
        PlaneOperator::PartialTheta,
    ];

    pub fn grade(self) -> u8 {
        match self {
            PlaneOperator::Nabla | PlaneOperator::PartialTheta => 2,
            _ => 0,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            PlaneOperator::T => "T",
            PlaneOperator::Nabla => "nabla",
            PlaneOperator::N => "N",
            PlaneOperator::PartialX => "px",
            PlaneOperator::PartialTheta => "pth",
        }
    }

    /// Action on a monomial, peeling the leftmost letter:
    ///
    /// ```text
    /// T x = x + j² x T          T θ = θ + j² θ T
    /// ∇ x = q x ∇               ∇ θ = x + q j² θ ∇
    /// ∂x x = 1 + j² x ∂x + (j² - 1) θ ∂θ     ∂x θ = j² q⁻¹ θ ∂x
    /// ∂θ x = q x ∂θ             ∂θ θ = 1 + j² θ ∂θ
    /// ```
    ///
    /// Every operator except `N` kills `1`; `N` counts total degree.
    pub fn act(self, p: PlaneMonomial) -> PlaneVector {
        use PlaneOperator::*;
        if self == N {
            let mut v = PlaneVector::monomial(p);
            v = v.scale(&Scalar::from_integer(p.degree() as i64));
            return v;
        }
        if p == PlaneMonomial::ONE {
            return PlaneVector::zero();
        }
        let j2 = Scalar::j_pow(2);
        let q = Scalar::q();
        let (peel_x, rest) = if p.m > 0 {
            (true, PlaneMonomial { m: p.m - 1, ..p })
        } else {
            (false, PlaneMonomial { k: p.k - 1, ..p })
        };
        let g = PlaneVector::monomial(rest);
        let mut out = PlaneVector::zero();
        match (self, peel_x) {
            (T, true) => {
                out.add(&g.times_x(), &Scalar::one());
                out.add(&T.act(rest).times_x(), &j2);
            }
            (T, false) => {
                out.add(&g.times_theta(), &Scalar::one());
                out.add(&T.act(rest).times_theta(), &j2);
            }
            (Nabla, true) => out.add(&Nabla.act(rest).times_x(), &q),
            (Nabla, false) => {
                out.add(&g.times_x(), &Scalar::one());
                out.add(&Nabla.act(rest).times_theta(), &(&q * &j2));
            }
            (PartialX, true) => {
                out.add(&g, &Scalar::one());
                out.add(&PartialX.act(rest).times_x(), &j2);
                out.add(
                    &PartialTheta.act(rest).times_theta(),
                    &(&j2 - &Scalar::one()),
                );
            }
            (PartialX, false) => out.add(
                &PartialX.act(rest).times_theta(),
                &(&j2 * &Scalar::q_pow(-1)),
            ),
            (PartialTheta, true) => out.add(&PartialTheta.act(rest).times_x(), &q),
            (PartialTheta, false) => {
                out.add(&g, &Scalar::one());
                out.add(&PartialTheta.act(rest).times_theta(), &j2);
            }
            (N, _) => unreachable!(),
        }
        out
    }

    pub fn apply(self, v: &PlaneVector) -> PlaneVector {
        let mut out = PlaneVector::zero();
        for (&p, c) in v.terms() {
            out.add(&self.act(p), c);
        }
        out
    }

    /// Applies a product of operators, rightmost first.
    pub fn apply_word(ops: &[PlaneOperator], v: &PlaneVector) -> PlaneVector {
        ops.iter().rev().fold(v.clone(), |acc, op| op.apply(&acc))
    }
}

/// `(1 - j^{2N}) / (1 - j²)` on `p`.
pub fn t_closed_form(p: PlaneMonomial) -> PlaneVector {
    PlaneVector::monomial(p).scale(&j_ratio(2 * p.degree() as i64))
}

/// `(1 - j^n) / (1 - j²)`.
fn j_ratio(n: i64) -> Scalar {
    let den = (&Scalar::one() - &Scalar::j_pow(2))
        .inv()
        .expect("1 - j^2 is invertible");
    &(&Scalar::one() - &Scalar::j_pow(n)) * &den
}

fn vector_residual(v: &PlaneVector) -> Residual {
    (!v.is_zero()).then(|| v.to_string())
}

/// First nonzero residual of `f` over `items`, labelled.
fn first_failure<I, T: fmt::Display>(items: I, f: impl Fn(T) -> PlaneVector) -> Residual
where
    I: IntoIterator<Item = T>,
{
    for item in items {
        let label = item.to_string();
        let r = f(item);
        if !r.is_zero() {
            return Some(format!("on {label}: {r}"));
        }
    }
    None
}

/// Monomials `g` used as test vectors in the operator identities.
fn test_basis() -> Vec<PlaneMonomial> {
    PlaneMonomial::up_to(3).collect()
}

fn xm(m: u32) -> PlaneVector {
    PlaneVector::monomial(PlaneMonomial { m, k: 0 })
}

fn xm_theta(m: u32) -> PlaneVector {
    PlaneVector::monomial(PlaneMonomial { m, k: 1 })
}

/// Relations among `T`, `∇`, `N` and their commutation with coordinates, for
/// every `m <= max_m`.
pub fn check_lie_relations(max_m: u32) -> Vec<Check> {
    use PlaneOperator::*;
    let mut c = Checker::new("lie");
    let basis = test_basis();
    let j = Scalar::j();
    for m in 0..=max_m {
        let monos = || (0..3).map(move |k| PlaneMonomial { m, k });
        c.zero(format!("Tnabla-commute:m={m}"), "T nabla = nabla T", || {
            Ok(first_failure(monos(), |p| {
                let v = PlaneVector::monomial(p);
                PlaneOperator::apply_word(&[T, Nabla], &v)
                    .sub(&PlaneOperator::apply_word(&[Nabla, T], &v))
            }))
        });
        c.zero(format!("nabla-cubed:m={m}"), "nabla^3 = 0", || {
            Ok(first_failure(monos(), |p| {
                PlaneOperator::apply_word(&[Nabla; 3], &PlaneVector::monomial(p))
            }))
        });
        c.zero(
            format!("T-x^m:m={m}"),
            "T x^m = (1 - j^2m)/(1 - j^2) x^m + j^2m x^m T",
            || {
                Ok(first_failure(basis.iter().copied(), |g| {
                    let gv = PlaneVector::monomial(g);
                    let lhs = T.apply(&xm(m).times(&gv));
                    let mut rhs = xm(m).times(&gv).scale(&j_ratio(2 * m as i64));
                    rhs.add(&xm(m).times(&T.apply(&gv)), &Scalar::j_pow(2 * m as i64));
                    lhs.sub(&rhs)
                }))
            },
        );
        c.zero(
            format!("nabla-x^m:m={m}"),
            "nabla x^m = q^m x^m nabla",
            || {
                Ok(first_failure(basis.iter().copied(), |g| {
                    let gv = PlaneVector::monomial(g);
                    let lhs = Nabla.apply(&xm(m).times(&gv));
                    lhs.sub(
                        &xm(m)
                            .times(&Nabla.apply(&gv))
                            .scale(&Scalar::q_pow(m as i32)),
                    )
                }))
            },
        );
        c.zero(
            format!("T-x^m*th:m={m}"),
            "T (x^m th) = (1 - j^(2m+2))/(1 - j^2) x^m th + j^(2m+2) x^m th T",
            || {
                Ok(first_failure(basis.iter().copied(), |g| {
                    let gv = PlaneVector::monomial(g);
                    let f = xm_theta(m);
                    let lhs = T.apply(&f.times(&gv));
                    let mut rhs = f.times(&gv).scale(&j_ratio(2 * m as i64 + 2));
                    rhs.add(&f.times(&T.apply(&gv)), &Scalar::j_pow(2 * m as i64 + 2));
                    lhs.sub(&rhs)
                }))
            },
        );
        c.zero(
            format!("nabla-x^m*th:m={m}"),
            "nabla (x^m th) = q^m x^(m+1) + j^2 q^(m+1) x^m th nabla",
            || {
                Ok(first_failure(basis.iter().copied(), |g| {
                    let gv = PlaneVector::monomial(g);
                    let f = xm_theta(m);
                    let lhs = Nabla.apply(&f.times(&gv));
                    let mut rhs = xm(m + 1).times(&gv).scale(&Scalar::q_pow(m as i32));
                    rhs.add(
                        &f.times(&Nabla.apply(&gv)),
                        &(&Scalar::j_pow(2) * &Scalar::q_pow(m as i32 + 1)),
                    );
                    lhs.sub(&rhs)
                }))
            },
        );
        c.zero(
            format!("N-number:m={m}"),
            "N (x^m th) = (m + 1) x^m th",
            || {
                let f = xm_theta(m);
                Ok(vector_residual(
                    &N.apply(&f)
                        .sub(&f.scale(&Scalar::from_integer(m as i64 + 1))),
                ))
            },
        );
        c.zero(
            format!("N-commutes:m={m}"),
            "N T = T N, N nabla = nabla N",
            || {
                Ok(first_failure(monos(), |p| {
                    let v = PlaneVector::monomial(p);
                    let mut r = PlaneOperator::apply_word(&[N, T], &v)
                        .sub(&PlaneOperator::apply_word(&[T, N], &v));
                    r.add(
                        &PlaneOperator::apply_word(&[N, Nabla], &v)
                            .sub(&PlaneOperator::apply_word(&[Nabla, N], &v)),
                        &Scalar::one(),
                    );
                    r
                }))
            },
        );
        c.zero(
            format!("T-from-partials:m={m}"),
            "T = x px + th pth",
            || {
                Ok(first_failure(monos(), |p| {
                    let v = PlaneVector::monomial(p);
                    let mut rhs = PartialX.apply(&v).times_x();
                    rhs.add(&PartialTheta.apply(&v).times_theta(), &Scalar::one());
                    T.apply(&v).sub(&rhs)
                }))
            },
        );
        c.zero(
            format!("nabla-from-partials:m={m}"),
            "nabla = x pth",
            || {
                Ok(first_failure(monos(), |p| {
                    let v = PlaneVector::monomial(p);
                    Nabla.apply(&v).sub(&PartialTheta.apply(&v).times_x())
                }))
            },
        );
        c.zero(
            format!("f*w:m={m}"),
            "f w = j^(2N-1) w f, f = x^m th",
            || {
                let f = xm_theta(m).to_element();
                let w = cartan_w();
                let e = &(&f * &w) - &(&w * &f).scale(&Scalar::j_pow(2 * (m as i64 + 1) - 1));
                Ok(residual(omega(), &omega().normal_form(&e)?))
            },
        );
        c.zero(format!("f*u:m={m}"), "f u = j q^N u f, f = x^m th", || {
            let f = xm_theta(m).to_element();
            let u = cartan_u();
            let e = &(&f * &u) - &(&u * &f).scale(&(&j * &Scalar::q_pow(m as i32 + 1)));
            Ok(residual(omega(), &omega().normal_form(&e)?))
        });
    }
    for m in 0..=max_m.max(12) {
        c.zero(
            format!("T-closed-form:m={m}"),
            "T = (1 - j^2N)/(1 - j^2)",
            || {
                Ok(first_failure((0..3).map(|k| PlaneMonomial { m, k }), |p| {
                    T.act(p).sub(&t_closed_form(p))
                }))
            },
        );
    }
    c.zero("dx=w*x", "dx = w x", || {
        let e = &Element::generator(crate::presentations::omega_ids::DX)
            - &(&cartan_w() * &Element::generator(X));
        Ok(residual(omega(), &omega().normal_form(&e)?))
    });
    c.zero("dth=w*th+u*x", "dth = w th + u x", || {
        let rhs =
            &(&cartan_w() * &Element::generator(TH)) + &(&cartan_u() * &Element::generator(X));
        let e = &Element::generator(crate::presentations::omega_ids::DTH) - &rhs;
        Ok(residual(omega(), &omega().normal_form(&e)?))
    });
    c.zero("d=wT+u*nabla:deg<=6", "d f = (w T + u nabla) f", || {
        let om = omega();
        for p in PlaneMonomial::of_degree_at_most(6) {
            let f = p.word();
            let lhs = om.normal_form(&differentiate(&Element::from_word(f))?)?;
            let v = PlaneVector::monomial(p);
            let rhs = &(&cartan_w() * &T.apply(&v).to_element())
                + &(&cartan_u() * &Nabla.apply(&v).to_element());
            let r = om.normal_form(&(&lhs - &rhs))?;
            if !r.is_zero() {
                return Ok(Some(format!("on {p}: {}", om.display(&r))));
            }
        }
        Ok(None)
    });
    c.finish()
}

/// Twisted Leibniz rules for `T`, `∇` on products `f g`, `f = x^a θ`,
/// `g = x^b θ^c`, `a, b <= 5`, and agreement of their factors with the
/// coproduct factors `j^{-N}` and `j² q^N`.
pub fn check_coproducts() -> Vec<Check> {
    use PlaneOperator::*;
    let mut c = Checker::new("lie");
    for a in 0..=5u32 {
        let f = xm_theta(a);
        let n = a as i64 + 1;
        let gs = || PlaneMonomial::up_to(5);
        c.zero(
            format!("T-leibniz:f=x^{a}*th"),
            "T(fg) = (Tf) g + j^grad(f) j^(2N-1) f (Tg)",
            || {
                Ok(first_failure(gs(), |g| {
                    let gv = PlaneVector::monomial(g);
                    let lhs = T.apply(&f.times(&gv));
                    let mut rhs = T.apply(&f).times(&gv);
                    rhs.add(&f.times(&T.apply(&gv)), &Scalar::j_pow(1 + 2 * n - 1));
                    lhs.sub(&rhs)
                }))
            },
        );
        c.zero(
            format!("nabla-leibniz:f=x^{a}*th"),
            "nabla(fg) = (nabla f) g + j^grad(f) j q^N f (nabla g)",
            || {
                Ok(first_failure(gs(), |g| {
                    let gv = PlaneVector::monomial(g);
                    let lhs = Nabla.apply(&f.times(&gv));
                    let mut rhs = Nabla.apply(&f).times(&gv);
                    rhs.add(
                        &f.times(&Nabla.apply(&gv)),
                        &(&Scalar::j_pow(2) * &Scalar::q_pow(n as i32)),
                    );
                    lhs.sub(&rhs)
                }))
            },
        );
        c.zero(
            format!("T-factor:f=x^{a}*th"),
            "j^grad(f) j^(2N-1) = j^-N",
            || {
                let l = Scalar::j_pow(1 + 2 * n - 1);
                let r = Scalar::j_pow(-n);
                Ok((l != r).then(|| format!("{l} != {r}")))
            },
        );
        c.zero(
            format!("nabla-factor:f=x^{a}*th"),
            "j^grad(f) j q^N = j^2 q^N",
            || {
                let l = &Scalar::j_pow(1 + 1) * &Scalar::q_pow(n as i32);
                let r = &Scalar::j_pow(2) * &Scalar::q_pow(n as i32);
                Ok((l != r).then(|| format!("{l} != {r}")))
            },
        );
    }
    c.finish()
}

/// `mixed-partial ⊗ mixed-partial`.
pub fn partial_square() -> TensorSpace<'static> {
    TensorSpace::new(mixed_partial(), mixed_partial())
}

fn partial_coproduct_letter(g: Gen) -> Result<TensorElement> {
    use partial_ids::*;
    let one = Scalar::one();
    let w = |g: Gen| Word::letter(g);
    Ok(match g {
        X => TensorElement::term(w(X), w(X), one),
        PX => TensorElement::term(w(PX), w(PX), one),
        TH | PTH => {
            let base = if g == TH { X } else { PX };
            let mut t = TensorElement::term(w(g), w(base), one.clone());
            t.add_term(w(base), w(g), one);
            t
        }
        _ => {
            return Err(Error::UnknownGenerator {
                map: "Delta",
                generator: format!("#{g}"),
            })
        }
    })
}

/// `Δ(∂x) = ∂x⊗∂x`, `Δ(∂θ) = ∂θ⊗∂x + ∂x⊗∂θ`, with the plane coproduct on
/// `x`, `θ`, extended multiplicatively.
pub fn partial_coproduct(e: &Element) -> Result<TensorElement> {
    extend_hom(e, &partial_square(), partial_coproduct_letter)
}

/// `ε(x) = ε(∂x) = 1`, `ε(θ) = ε(∂θ) = 0`.
pub fn partial_counit(e: &Element) -> Result<Scalar> {
    use partial_ids::*;
    mixed_partial().validate(e)?;
    let mut out = Scalar::zero();
    for (word, c) in e.terms() {
        if word.letters().iter().all(|&g| g == X || g == PX) {
            out += c;
        }
    }
    Ok(out)
}

/// Left extraction of `d f` against the partial actions, the derivative
/// relations on the basis, and the behaviour of the partial co-maps.
pub fn check_partials(max_degree: u32) -> Vec<Check> {
    use PlaneOperator::*;
    let mut c = Checker::new("partial");
    for n in 0..=max_degree.min(6) {
        c.zero(
            format!("left-extraction:deg={n}"),
            "d f = (dx px + dth pth) f",
            || {
                for p in PlaneMonomial::of_degree_at_most(n).filter(|p| p.degree() == n) {
                    let df = differentiate(&Element::from_word(p.word()))?;
                    let (ex, eth) = left_extract(&df)?;
                    let v = PlaneVector::monomial(p);
                    let rx = &ex - &PartialX.apply(&v).to_element();
                    let rth = &eth - &PartialTheta.apply(&v).to_element();
                    let p_ = plane();
                    for r in [rx, rth] {
                        let r = p_.normal_form(&r)?;
                        if !r.is_zero() {
                            return Ok(Some(format!("on {p}: {}", p_.display(&r))));
                        }
                    }
                }
                Ok(None)
            },
        );
    }
    for m in 0..=max_degree {
        let monos = || (0..3).map(move |k| PlaneMonomial { m, k });
        c.zero(
            format!("partials-commute:m={m}"),
            "px pth = j q pth px",
            || {
                Ok(first_failure(monos(), |p| {
                    let v = PlaneVector::monomial(p);
                    let lhs = PlaneOperator::apply_word(&[PartialX, PartialTheta], &v);
                    let rhs = PlaneOperator::apply_word(&[PartialTheta, PartialX], &v);
                    lhs.sub(&rhs.scale(&(&Scalar::j() * &Scalar::q())))
                }))
            },
        );
        c.zero(format!("pth-cubed:m={m}"), "pth^3 = 0", || {
            Ok(first_failure(monos(), |p| {
                PlaneOperator::apply_word(&[PartialTheta; 3], &PlaneVector::monomial(p))
            }))
        });
    }
    c.extend(check_partial_noninvariance());
    c.finish()
}

/// The partial co-maps against the derivative relations: `Δ` fails to
/// preserve `∂x x = 1 + ...`, `ε` fails on the two inhomogeneous relations.
pub fn check_partial_noninvariance() -> Vec<Check> {
    use partial_ids::*;
    let mut c = Checker::new("partial");
    let p = mixed_partial();
    let sq = partial_square();
    let rel = |label: &str| -> Result<Element> {
        p.relations()
            .iter()
            .find(|r| r.label == label)
            .map(|r| r.difference())
            .ok_or_else(|| Error::Unsupported {
                op: "partial relations",
                reason: format!("no relation `{label}`"),
            })
    };
    let delta =
        |e: &Element| -> Result<Residual> { Ok(tensor_residual(&sq, &partial_coproduct(e)?)) };
    c.nonzero(
        "noninvariance",
        "Delta does not preserve px x = 1 + j^2 x px + (j^2 - 1) th pth",
        || delta(&rel("px*x = 1 + j^2*x*px + (j^2 - 1)*th*pth")?),
    );
    c.zero(
        "Delta-preserves:px*pth",
        "Delta(px) Delta(pth) = j q Delta(pth) Delta(px)",
        || delta(&rel("px*pth = j*q*pth*px")?),
    );
    c.zero(
        "Delta-shape:pth",
        "Delta(pth) = pth ⊗ px + px ⊗ pth",
        || {
            let t = partial_coproduct(&Element::generator(PTH))?;
            let mut expected =
                TensorElement::term(Word::letter(PTH), Word::letter(PX), Scalar::one());
            expected.add_term(Word::letter(PX), Word::letter(PTH), Scalar::one());
            Ok(tensor_residual(&sq, &(&t - &expected)))
        },
    );
    let eps = |label: &str| -> Result<Residual> {
        let v = partial_counit(&rel(label)?)?;
        Ok((!v.is_zero()).then(|| v.to_string()))
    };
    c.nonzero(
        "eps-respects:px*x",
        "eps(px) = 1 against px x = 1 + j^2 x px + ...",
        || eps("px*x = 1 + j^2*x*px + (j^2 - 1)*th*pth"),
    );
    c.zero("eps-respects:px*th", "eps(px) = 1, eps(th) = 0", || {
        eps("px*th = j^2*q^-1*th*px")
    });
    c.zero("eps-respects:pth*x", "eps(pth) = 0", || {
        eps("pth*x = q*x*pth")
    });
    c.nonzero(
        "eps-respects:pth*th",
        "eps(pth) = 0 against pth th = 1 + j^2 th pth",
        || eps("pth*th = 1 + j^2*th*pth"),
    );
    c.zero("eps-respects:px*pth", "eps(px) = 1, eps(pth) = 0", || {
        eps("px*pth = j*q*pth*px")
    });
    c.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use PlaneOperator::*;

    fn mono(m: u32, k: u32) -> PlaneMonomial {
        PlaneMonomial::new(m, k).unwrap()
    }

    #[test]
    fn sample_actions() {
        assert!(T.act(PlaneMonomial::ONE).is_zero());
        assert_eq!(T.act(mono(1, 0)), PlaneVector::monomial(mono(1, 0)));
        assert!(T.act(mono(2, 1)).is_zero());
        assert_eq!(Nabla.act(mono(0, 1)), PlaneVector::monomial(mono(1, 0)));
        assert!(Nabla.act(mono(1, 0)).is_zero());
        assert_eq!(
            N.act(mono(3, 1)),
            PlaneVector::monomial(mono(3, 1)).scale(&Scalar::from_integer(4))
        );
        assert_eq!(
            PartialTheta.act(mono(1, 1)),
            PlaneVector::monomial(mono(1, 0)).scale(&Scalar::q())
        );
        assert!(PartialX.act(mono(0, 1)).is_zero());
    }

    #[test]
    fn nabla_on_x_m_theta() {
        for m in 0..6 {
            let expected = PlaneVector::monomial(mono(m + 1, 0)).scale(&Scalar::q_pow(m as i32));
            assert_eq!(Nabla.act(mono(m, 1)), expected);
        }
    }

    #[test]
    fn t_on_theta_x() {
        // θx = q⁻¹ xθ, N = 2: T = (1 + j²) q⁻¹ xθ = -j q⁻¹ xθ
        let v = PlaneVector::monomial(mono(0, 1)).times(&PlaneVector::monomial(mono(1, 0)));
        let expected =
            PlaneVector::monomial(mono(1, 1)).scale(&(&-Scalar::j() * &Scalar::q_pow(-1)));
        assert_eq!(T.apply(&v), expected);
    }

    #[test]
    fn monomial_products_match_the_engine() {
        for a in PlaneMonomial::up_to(3) {
            for b in PlaneMonomial::up_to(3) {
                let engine = PlaneVector::from_element(
                    &(&Element::from_word(a.word()) * &Element::from_word(b.word())),
                )
                .unwrap();
                assert_eq!(a.times(b), engine, "{a} * {b}");
            }
        }
    }

    #[test]
    fn element_round_trip() {
        let v = PlaneVector::from_element(&Element::word(&[TH, X, X])).unwrap();
        assert_eq!(
            v,
            PlaneVector::monomial(mono(2, 1)).scale(&Scalar::q_pow(-2))
        );
        assert!(PlaneVector::from_element(&Element::generator(XI)).is_err());
    }

    #[test]
    fn suites_pass_at_small_size() {
        for check in check_lie_relations(3)
            .into_iter()
            .chain(check_coproducts())
            .chain(check_partials(3))
        {
            assert!(check.ok(), "{check}");
        }
    }
}
