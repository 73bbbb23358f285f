//! The exterior differential `d` on `omega`, with `d³ = 0`, the commutation
//! coefficients it forces, and the Cartan–Maurer forms `w`, `u`.

use crate::algebra::{Element, Gen, Presentation, Word};
use crate::error::{Error, Result};
use crate::presentations::omega_ids::*;
use crate::presentations::{
    calculus_relation_texts, dfirst_ids, omega, omega_dfirst, plane_relation_texts,
};
use crate::report::{residual, Check, Checker, Residual};
use crate::scalar::Scalar;
use crate::syntax::{evaluate, parse_scalar, AlgebraKind, Value};

fn d_letter(g: Gen) -> Element {
    match g {
        XI => -Element::word(&[XI, DX, XI]),
        X | TH | DX | DTH => Element::generator(g + 2),
        _ => Element::zero(),
    }
}

/// Graded Leibniz rule `d(fg) = (df) g + j^{|f|} f (dg)`, word by word.
/// The result is not reduced.
pub fn differentiate(e: &Element) -> Result<Element> {
    let p = omega();
    p.validate(e)?;
    let mut out = Element::zero();
    for (word, c) in e.terms() {
        let l = word.letters();
        let mut prefix_grade = 0i64;
        for (i, &g) in l.iter().enumerate() {
            let dg = d_letter(g);
            if !dg.is_zero() {
                let coeff = c * &Scalar::j_pow(prefix_grade);
                for (mid, mc) in dg.terms() {
                    let nw = word.splice(i, i + 1, mid.letters());
                    out.add_term(nw, &coeff * mc);
                }
            }
            prefix_grade += p.generators()[g as usize].grade as i64;
        }
    }
    Ok(out)
}

/// `w = dx xi`, as written (not reduced).
pub fn cartan_w() -> Element {
    Element::word(&[DX, XI])
}

/// `u = dth xi - dx xi th xi`, as written (not reduced).
pub fn cartan_u() -> Element {
    &Element::word(&[DTH, XI]) - &Element::word(&[DX, XI, TH, XI])
}

/// Coefficients of the general first-order ansatz
/// `x dx = X dx x`, `x dth = A dth x + B dx th`, `th dx = C dx th + D dth x`,
/// `th dth = Y dth th`, `dx dth = F dth dx`, together with the
/// normalizations `Q`, `Q'` of the derived second-order relations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientAnsatz {
    pub x: Scalar,
    pub a: Scalar,
    pub b: Scalar,
    pub c: Scalar,
    pub d: Scalar,
    pub y: Scalar,
    pub f: Scalar,
    pub q: Scalar,
    pub q_prime: Scalar,
}

impl CoefficientAnsatz {
    /// Covariance solution for a given `Y`: `D = 0`, `F = qj`, `X = jY`,
    /// `A = j² q Y`, `B = j(1 - j) Y`, `C = q⁻¹ Y`.
    pub fn covariant(y: Scalar) -> Self {
        let j = Scalar::j();
        let q = Scalar::q();
        let f = &q * &j;
        let x = &j * &y;
        let a = &(&Scalar::j_pow(2) * &q) * &y;
        let b = &(&j * &(&Scalar::one() - &j)) * &y;
        let c = &Scalar::q_pow(-1) * &y;
        let d = Scalar::zero();
        Self::with_normalizations(x, a, b, c, d, y, f)
    }

    fn with_normalizations(
        x: Scalar,
        a: Scalar,
        b: Scalar,
        c: Scalar,
        d: Scalar,
        y: Scalar,
        f: Scalar,
    ) -> Self {
        let j2 = Scalar::j_pow(2);
        let one = Scalar::one();
        let f_inv = f.inv().unwrap_or_default();
        let q = &(&a * &f_inv) + &(&j2 * &(&one + &b));
        let q_prime = &d + &(&j2 * &(&one + &(&c * &f)));
        CoefficientAnsatz {
            x,
            a,
            b,
            c,
            d,
            y,
            f,
            q,
            q_prime,
        }
    }

    /// `1 + jY + j²Y²`, the coefficient of `dth th²` in `d(th³)`.
    pub fn theta_cube_constraint(&self) -> Scalar {
        &(&Scalar::one() + &(&Scalar::j() * &self.y)) + &(&Scalar::j_pow(2) * &self.y.pow(2))
    }

    /// Coefficients of the first-order terms in `d` of the ansatz:
    /// `jX - 1`, `j²A + jBF - F`, `jD + CF - j⁻¹`, `jY - j⁻¹`.
    pub fn inhomogeneity_residuals(&self) -> [(&'static str, Scalar); 4] {
        let j = Scalar::j();
        let j2 = Scalar::j_pow(2);
        [
            ("jX-1", &(&j * &self.x) - &Scalar::one()),
            (
                "j^2A+jBF-F",
                &(&(&j2 * &self.a) + &(&(&j * &self.b) * &self.f)) - &self.f,
            ),
            (
                "jD+CF-j^-1",
                &(&(&j * &self.d) + &(&self.c * &self.f)) - &j2,
            ),
            ("jY-j^-1", &(&j * &self.y) - &j2),
        ]
    }
}

/// Coefficient of `word` on the right-hand side of the bundled relation
/// with the given label.
fn relation_coefficient(p: &Presentation, label: &str, word: &[Gen]) -> Result<Scalar> {
    let rel = p
        .relations()
        .iter()
        .find(|r| r.label == label)
        .ok_or_else(|| Error::Unsupported {
            op: "relation lookup",
            reason: format!("no relation `{label}` in {}", p.name()),
        })?;
    Ok(rel.rhs.coefficient(&Word::from_slice(word)))
}

/// The coefficients read off the bundled first-order relations.
pub fn bundled_coefficients() -> Result<CoefficientAnsatz> {
    let p = omega();
    let k = |label: &str, word: &[Gen]| relation_coefficient(p, label, word);
    let x = k("x*dx = j^2*dx*x", &[DX, X])?;
    let a = k("x*dth = q*dth*x + (j^2 - 1)*dx*th", &[DTH, X])?;
    let b = k("x*dth = q*dth*x + (j^2 - 1)*dx*th", &[DX, TH])?;
    let c = k("th*dx = j*q^-1*dx*th", &[DX, TH])?;
    let d = k("th*dx = j*q^-1*dx*th", &[DTH, X])?;
    let y = k("th*dth = j*dth*th", &[DTH, TH])?;
    let f = k("dx*dth = j*q*dth*dx", &[DTH, DX])?;
    Ok(CoefficientAnsatz::with_normalizations(x, a, b, c, d, y, f))
}

fn scalar_residual(v: Scalar) -> Residual {
    (!v.is_zero()).then(|| v.to_string())
}

/// Evaluates an identity in `omega` expression syntax (with `w`, `u`, `d`).
pub fn omega_identity(text: &str) -> Result<Residual> {
    let p = omega();
    Ok(residual(p, &p.normal_form(&omega_element(text)?)?))
}

fn omega_element(text: &str) -> Result<Element> {
    match evaluate(text, AlgebraKind::Omega)? {
        Value::Element(e) => Ok(e),
        Value::Scalar(s) => Ok(Element::from_scalar(s)),
        other => Err(Error::TypeMismatch(format!(
            "`{text}` evaluates to {}",
            other.kind()
        ))),
    }
}

/// Solves `d(source)` for the pair that `target` rewrites, in `omega` with
/// that rule removed, and compares with the bundled rule.
pub fn derive_relation(source: &str, target: &str) -> Result<Residual> {
    let p = omega();
    let rel = |label: &str| {
        p.relations()
            .iter()
            .find(|r| r.label == label)
            .ok_or_else(|| Error::Unsupported {
                op: "derive_relation",
                reason: format!("unknown relation `{label}`"),
            })
    };
    let src = rel(source)?;
    let lead = p
        .rules()
        .iter()
        .find(|r| r.label == target)
        .map(|r| r.lhs.clone())
        .ok_or_else(|| Error::Unsupported {
            op: "derive_relation",
            reason: format!("no rule for `{target}`"),
        })?;
    let reduced = p.without_rule(lead.letters())?;
    let derived = reduced.normal_form(&differentiate(&src.difference())?)?;
    let c = derived.coefficient(&lead);
    if c.is_zero() {
        return Ok(Some(format!(
            "d({source}) does not contain {}",
            p.display_word(&lead)
        )));
    }
    let solved = &Element::from_word(lead.clone()) - &derived.scale(&c.inv()?);
    let stated = reduced.normal_form(&rel(target)?.difference())?;
    let stated_c = stated.coefficient(&lead);
    let stated_rhs = &Element::from_word(lead) - &stated.scale(&stated_c.inv()?);
    Ok(residual(p, &reduced.normal_form(&(&solved - &stated_rhs))?))
}

/// `(source, target)`: differentiating the first gives the second.
pub const DERIVATIONS: [(&str, &str); 9] = [
    ("x*dx = j^2*dx*x", "x*d2x = j^2*d2x*x"),
    (
        "x*dth = q*dth*x + (j^2 - 1)*dx*th",
        "x*d2th = q*d2th*x + (j^2 - 1)*d2x*th",
    ),
    ("th*dx = j*q^-1*dx*th", "th*d2x = q^-1*d2x*th"),
    ("th*dth = j*dth*th", "th*d2th = d2th*th"),
    ("x*d2x = j^2*d2x*x", "dx*d2x = j^-2*d2x*dx"),
    (
        "x*d2th = q*d2th*x + (j^2 - 1)*d2x*th",
        "dx*d2th = q*d2th*dx + (j - j^-1)*d2x*dth",
    ),
    ("th*d2x = q^-1*d2x*th", "dth*d2x = j^2*q^-1*d2x*dth"),
    ("th*d2th = d2th*th", "dth*d2th = d2th*dth"),
    (
        "dx*d2th = q*d2th*dx + (j - j^-1)*d2x*dth",
        "d2x*d2th = j^2*q*d2th*d2x",
    ),
];

/// `d` kills every relation, and differentiating each first- and
/// second-order relation reproduces the next one.
pub fn check_d_well_defined() -> Vec<Check> {
    let mut c = Checker::new("calculus");
    let p = omega();
    let texts: Vec<&str> = plane_relation_texts()
        .iter()
        .copied()
        .chain(["x*xi = 1", "xi*x = 1"])
        .chain(calculus_relation_texts())
        .collect();
    for text in texts {
        c.zero(format!("d-kills:{text}"), text, || {
            let rel = p
                .relations()
                .iter()
                .find(|r| r.label == text)
                .expect("bundled relation");
            Ok(residual(
                p,
                &p.normal_form(&differentiate(&rel.difference())?)?,
            ))
        });
    }
    for (source, target) in DERIVATIONS {
        c.zero(format!("derive:{target}"), &format!("d({source})"), || {
            derive_relation(source, target)
        });
    }

    // second-order normalizations stated in terms of the ansatz coefficients
    let k = CoefficientAnsatz::covariant(Scalar::j());
    let om = |label: &str, word: &[Gen]| relation_coefficient(p, label, word);
    let j2 = Scalar::j_pow(2);
    c.zero("normalization:Q", "Q = A/F + j^2 (1 + B) = -1", || {
        Ok(scalar_residual(&k.q + &Scalar::one()))
    });
    c.zero("normalization:dx*d2th:d2th*dx", "-A/Q", || {
        let stated = om("dx*d2th = q*d2th*dx + (j - j^-1)*d2x*dth", &[D2TH, DX])?;
        Ok(scalar_residual(&(&(-&k.a) * &k.q.inv()?) - &stated))
    });
    c.zero(
        "normalization:dx*d2th:d2x*dth",
        "(1 + B - j^2 A/F)/Q",
        || {
            let stated = om("dx*d2th = q*d2th*dx + (j - j^-1)*d2x*dth", &[D2X, DTH])?;
            let num = &(&Scalar::one() + &k.b) - &(&(&j2 * &k.a) * &k.f.inv()?);
            Ok(scalar_residual(&(&num * &k.q.inv()?) - &stated))
        },
    );
    c.zero(
        "normalization:dth*d2x:d2x*dth",
        "-C/Q', Q' = D + j^2 (1 + CF) = -1",
        || {
            let stated = om("dth*d2x = j^2*q^-1*d2x*dth", &[D2X, DTH])?;
            Ok(scalar_residual(&(&(-&k.c) * &k.q_prime.inv()?) - &stated))
        },
    );
    c.zero(
        "normalization:dth*d2x:d2th*dx",
        "(D - CF + j^-1)/Q'",
        || {
            let num = &(&k.d - &(&k.c * &k.f)) + &j2;
            Ok(scalar_residual(&num * &k.q_prime.inv()?))
        },
    );
    c.zero("normalization:d2x*d2th", "d2x d2th = j F d2th d2x", || {
        let stated = om("d2x*d2th = j^2*q*d2th*d2x", &[D2TH, D2X])?;
        Ok(scalar_residual(&(&Scalar::j() * &k.f) - &stated))
    });
    c.finish()
}

fn monomial(m: usize, k: usize) -> Element {
    let mut letters = vec![X; m];
    letters.extend(std::iter::repeat_n(TH, k));
    Element::word(&letters)
}

/// `d³ = 0` on `x^a th^b` (`a <= max_degree`, `b <= 2`) and on `xi^n`
/// (`n <= 3`); `d²` itself does not vanish.
pub fn check_d_cubed(max_degree: u32) -> Vec<Check> {
    let mut c = Checker::new("calculus");
    let p = omega();
    let d3 = |e: &Element| -> Result<Element> {
        let mut v = e.clone();
        for _ in 0..3 {
            v = p.normal_form(&differentiate(&v)?)?;
        }
        Ok(v)
    };
    for a in 0..=max_degree as usize {
        c.zero(format!("d-cubed:x^{a}*th^(0..2)"), "d^3 = 0", || {
            for b in 0..3 {
                let r = d3(&monomial(a, b))?;
                if !r.is_zero() {
                    return Ok(Some(format!("b={b}: {}", p.display(&r))));
                }
            }
            Ok(None)
        });
    }
    for n in 1..=3 {
        c.zero(format!("d-cubed:xi^{n}"), "d^3 = 0", || {
            Ok(residual(p, &d3(&Element::word(&vec![XI; n]))?))
        });
    }
    c.nonzero("d-squared:x*th", "d^2 != 0", || {
        let e = monomial(1, 1);
        Ok(residual(
            p,
            &p.normal_form(&differentiate(&differentiate(&e)?)?)?,
        ))
    });
    c.zero("d-raises-grade", "grad(d f) = grad(f) + 1", || {
        for a in 0..4 {
            for b in 0..3 {
                let m = monomial(a, b);
                let dm = p.normal_form(&differentiate(&m)?)?;
                let expected = (p.homogeneous_grade(&m)? + 1) % 3;
                if !dm.is_zero() && p.homogeneous_grade(&dm)? != expected {
                    return Ok(Some(p.display(&m)));
                }
            }
        }
        Ok(None)
    });
    c.zero("d-inverse", "d(x xi) = 0", || {
        Ok(residual(
            p,
            &p.normal_form(&differentiate(&Element::word(&[X, XI]))?)?,
        ))
    });
    c.finish()
}

/// The covariance solution at `Y = j`, plus the checks of the constraint
/// on `Y` and of the inhomogeneous terms.
pub fn resolve_coefficients() -> (CoefficientAnsatz, Vec<Check>) {
    let mut c = Checker::new("calculus");
    let at_j = CoefficientAnsatz::covariant(Scalar::j());
    let at_j2 = CoefficientAnsatz::covariant(Scalar::j_pow(2));
    let at_1 = CoefficientAnsatz::covariant(Scalar::one());
    let constraint = "1 + jY + j^2 Y^2 = 0";

    c.zero("theta-cube-constraint:Y=j", constraint, || {
        Ok(scalar_residual(at_j.theta_cube_constraint()))
    });
    c.zero("theta-cube-constraint:Y=j^2", constraint, || {
        Ok(scalar_residual(at_j2.theta_cube_constraint()))
    });
    c.zero("theta-cube-constraint:Y=1", constraint, || {
        Ok(scalar_residual(at_1.theta_cube_constraint()))
    });
    for (label, y) in [
        ("Y=j", Scalar::j()),
        ("Y=j^2", Scalar::j_pow(2)),
        ("Y=1", Scalar::one()),
    ] {
        c.zero(
            format!("d(th^3):{label}"),
            "d(th^3) = (1 + jY + j^2 Y^2) dth th^2",
            || {
                let p = omega();
                let lhs = Word::from_slice(&[DTH, TH]);
                let rhs = Element::word(&[TH, DTH]).scale(&y.inv()?);
                let variant = p.with_rule(lhs, rhs)?;
                let e = differentiate(&Element::word(&[TH, TH, TH]))?;
                Ok(residual(&variant, &variant.normal_form(&e)?))
            },
        );
    }

    c.zero(
        "covariant-solution:Y=j",
        "A = j^2 q Y, C = Y/q, B = j(1-j) Y, X = jY",
        || {
            let bundled = bundled_coefficients()?;
            let pairs = [
                ("X", &at_j.x, &bundled.x),
                ("A", &at_j.a, &bundled.a),
                ("B", &at_j.b, &bundled.b),
                ("C", &at_j.c, &bundled.c),
                ("D", &at_j.d, &bundled.d),
                ("Y", &at_j.y, &bundled.y),
                ("F", &at_j.f, &bundled.f),
            ];
            Ok(pairs
                .iter()
                .find(|(_, a, b)| a != b)
                .map(|(n, a, b)| format!("{n}: {a} vs {b}")))
        },
    );
    c.zero("F-qj", "F - qj = 0", || {
        let f = bundled_coefficients()?.f;
        Ok(scalar_residual(&f - &parse_scalar("q*j")?))
    });
    for (name, v) in at_j.inhomogeneity_residuals() {
        c.zero(
            format!("inhomogeneity:{name}:Y=j"),
            "first-order terms after d",
            || Ok(scalar_residual(v)),
        );
    }
    c.zero(
        "inhomogeneity:jX-1:Y=j^2=j-1",
        "jX - 1 = j - 1 at Y = j^2",
        || {
            let v = at_j2.inhomogeneity_residuals()[0].1.clone();
            let expected = &Scalar::j() - &Scalar::one();
            Ok((v != expected).then(|| format!("{v} != {expected}")))
        },
    );
    c.nonzero(
        "inhomogeneity:jX-1:Y=j^2",
        "not homogeneous at Y = j^2",
        || {
            Ok(scalar_residual(
                at_j2.inhomogeneity_residuals()[0].1.clone(),
            ))
        },
    );
    c.nonzero("inhomogeneity:jX-1:Y=1", "not homogeneous at Y = 1", || {
        Ok(scalar_residual(at_1.inhomogeneity_residuals()[0].1.clone()))
    });
    (at_j, c.finish())
}

/// `(id, expression that must vanish, formula)` for the identities of `w`, `u`.
pub const CARTAN_IDENTITIES: &[(&str, &str, &str)] = &[
    ("x*w", "x*w - j^2*w*x", "x w = j^2 w x"),
    ("th*w", "th*w - j*w*th", "th w = j w th"),
    ("x*u", "x*u - q*u*x", "x u = q u x"),
    ("th*u", "th*u - j*q*u*th", "th u = j q u th"),
    ("w*dx", "w*dx - j*dx*w", "w dx = j dx w"),
    ("u*dx", "u*dx - q^-1*dx*u", "u dx = q^-1 dx u"),
    (
        "w*dth",
        "w*dth - j^2*dth*w - q^-1*(1 - j)*dx*u",
        "w dth = j^2 dth w + q^-1 (1 - j) dx u",
    ),
    (
        "u*dth",
        "u*dth - q^-1*dth*u - q^-2*(1 - j)*dx*u*th*xi",
        "u dth = q^-1 dth u + q^-2 (1 - j) dx u th x^-1",
    ),
    ("w*d2x", "w*d2x - j^2*d2x*w", "w d2x = j^2 d2x w"),
    ("u*d2x", "u*d2x - q^-1*d2x*u", "u d2x = q^-1 d2x u"),
    (
        "w*d2th",
        "w*d2th - d2th*w - q^-1*(j - j^-1)*d2x*u",
        "w d2th = d2th w + q^-1 (j - j^-1) d2x u",
    ),
    (
        "u*d2th",
        "u*d2th - q^-1*d2th*u - q^-2*(1 - j)*d2x*u*th*xi",
        "u d2th = q^-1 d2th u + q^-2 (1 - j) d2x u th x^-1",
    ),
    ("w^3", "w^3", "w^3 = 0"),
    ("w*u", "w*u - u*w", "wu = uw"),
    ("dw", "d(w) - (d2x*xi - j*w^2)", "dw = d2x x^-1 - j w^2"),
    (
        "du",
        "d(u) - (d2th*xi - d2x*xi*th*xi + u*w)",
        "du = d2th x^-1 - d2x x^-1 th x^-1 + uw",
    ),
    ("w*dw", "w*d(w) - j*d(w)*w", "w dw = j dw w"),
    (
        "w*du",
        "w*d(u) - j^2*d(u)*w - (j - j^-1)*d(w)*u",
        "w du = j^2 du w + (j - j^-1) dw u",
    ),
    ("u*dw", "u*d(w) - d(w)*u", "u dw = dw u"),
    ("u*du", "u*d(u) - d(u)*u", "u du = du u"),
    ("d2w", "d(d(w))", "d^2 w = 0"),
    ("d2u", "d(d(u))", "d^2 u = 0"),
];

/// Commutation rules, differentials and left invariance of `w` and `u`.
pub fn check_cartan_maurer() -> Vec<Check> {
    use crate::costructure::{antipode, coaction_space, counit, delta_l};
    use crate::report::tensor_residual;
    use crate::tensor::TensorElement;

    let mut c = Checker::new("cartan");
    for &(id, expr, formula) in CARTAN_IDENTITIES {
        c.zero(id, formula, || omega_identity(expr));
    }
    c.zero("w-grade", "grad(w) = 1", || {
        Ok(
            (omega().grade_of(&cartan_w()) != crate::algebra::Grade::Homogeneous(1))
                .then(|| "w".into()),
        )
    });
    c.zero("u-grade", "grad(u) = 2", || {
        Ok(
            (omega().grade_of(&cartan_u()) != crate::algebra::Grade::Homogeneous(2))
                .then(|| "u".into()),
        )
    });

    let sp = coaction_space();
    let forms = [("w", cartan_w()), ("u", cartan_u())];
    for (name, f) in &forms {
        c.zero(
            format!("DeltaL({name})"),
            &format!("DeltaL({name}) = 1 ⊗ {name}"),
            || {
                let lhs = delta_l(f)?;
                Ok(tensor_residual(
                    &sp,
                    &sp.normal_form(&(&lhs - &TensorElement::pure(&Element::one(), f)))?,
                ))
            },
        );
        c.zero(format!("eps({name})"), &format!("eps({name}) = 0"), || {
            Ok(scalar_residual(counit(f)?))
        });
        c.zero(
            format!("S({name})"),
            &format!("S({name}) = -{name}"),
            || {
                Ok(residual(
                    omega(),
                    &omega().normal_form(&(&antipode(f)? + f))?,
                ))
            },
        );
        c.zero(
            format!("m(S⊗id)DeltaL({name})"),
            "m (S ⊗ id) DeltaL = id",
            || {
                let t = delta_l(f)?;
                let mut out = Element::zero();
                for ((l, r), k) in t.terms() {
                    out += &(&antipode(&Element::from_word(l.clone()))?
                        * &Element::from_word(r.clone()))
                        .scale(k);
                }
                Ok(residual(omega(), &omega().normal_form(&(&out - f))?))
            },
        );
    }
    c.zero(
        "DeltaL(x*w)",
        "DeltaL(x w) = Delta(x) DeltaL(w) = j^2 DeltaL(w x)",
        || {
            let w = cartan_w();
            let x = Element::generator(X);
            let lhs = delta_l(&(&x * &w))?;
            let mid = sp.multiply(&crate::costructure::coproduct(&x)?, &delta_l(&w)?)?;
            let rhs = delta_l(&(&w * &x))?.scale(&Scalar::j_pow(2));
            Ok(tensor_residual(&sp, &(&lhs - &mid))
                .or_else(|| tensor_residual(&sp, &(&lhs - &rhs))))
        },
    );
    c.zero("DeltaL(w^3)", "DeltaL(w^3) = 0", || {
        let w = cartan_w();
        Ok(tensor_residual(&sp, &delta_l(&w.pow(3))?))
    });
    for &(id, expr, formula) in CARTAN_IDENTITIES.iter().take(14) {
        c.zero(format!("DeltaL-respects:{id}"), formula, || {
            Ok(tensor_residual(&sp, &delta_l(&omega_element(expr)?)?))
        });
    }
    c.finish()
}

/// Cofactors `(px, pth)` with `df = dx px + dth pth`, for a first-order
/// form `df` over `x`, `th`.
pub fn left_extract(df: &Element) -> Result<(Element, Element)> {
    use dfirst_ids as f;
    let mut to_dfirst = [Gen::MAX; 7];
    to_dfirst[X as usize] = f::X;
    to_dfirst[TH as usize] = f::TH;
    to_dfirst[DX as usize] = f::DX;
    to_dfirst[DTH as usize] = f::DTH;
    let om = omega();
    om.validate(df)?;
    if let Some((word, _)) = df.terms().find(|(w, _)| {
        w.letters()
            .iter()
            .any(|&g| to_dfirst[g as usize] == Gen::MAX)
    }) {
        return Err(Error::Unsupported {
            op: "left_extract",
            reason: format!(
                "`{}` is not a first-order form over x, th",
                om.display_word(word)
            ),
        });
    }
    let p = omega_dfirst();
    let reduced = p.normal_form(&df.relabel(&to_dfirst))?;
    let back = [DX, DTH, X, TH];
    let (mut px, mut pth) = (Element::zero(), Element::zero());
    for (word, c) in reduced.terms() {
        let l = word.letters();
        let first_order = l.first().is_some_and(|&g| g == f::DX || g == f::DTH)
            && l[1..].iter().all(|&g| g == f::X || g == f::TH);
        if !first_order {
            return Err(Error::Unsupported {
                op: "left_extract",
                reason: format!("`{}` is not of first order", p.display_word(word)),
            });
        }
        let cofactor: Word = l[1..].iter().map(|&g| back[g as usize]).collect();
        if l[0] == f::DX {
            px.add_term(cofactor, c.clone());
        } else {
            pth.add_term(cofactor, c.clone());
        }
    }
    Ok((px, pth))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nf(e: &Element) -> Element {
        omega().normal_form(e).unwrap()
    }

    #[test]
    fn generator_images() {
        assert_eq!(
            differentiate(&Element::generator(X)).unwrap(),
            Element::generator(DX)
        );
        assert!(differentiate(&Element::generator(D2TH)).unwrap().is_zero());
        assert!(nf(&differentiate(&Element::word(&[X, XI])).unwrap()).is_zero());
    }

    #[test]
    fn theta_squared() {
        // dth th + j th dth = (1 + j^2) dth th = -j dth th, then th dth = j dth th
        let d = nf(&differentiate(&Element::word(&[TH, TH])).unwrap());
        let expected = nf(&Element::word(&[DTH, TH]).scale(&-Scalar::j()));
        assert_eq!(d, expected);
    }

    #[test]
    fn leibniz_on_products() {
        let a = Element::word(&[TH, X]);
        let b = Element::word(&[DX, TH]);
        let lhs = nf(&differentiate(&(&a * &b)).unwrap());
        let ga = omega().homogeneous_grade(&a).unwrap() as i64;
        let rhs = &(&differentiate(&a).unwrap() * &b)
            + &(&a * &differentiate(&b).unwrap()).scale(&Scalar::j_pow(ga));
        assert_eq!(lhs, nf(&rhs));
    }

    #[test]
    fn cartan_forms() {
        // dx xi = j^2 xi dx
        assert_eq!(
            nf(&cartan_w()),
            Element::word(&[XI, DX]).scale(&Scalar::j_pow(2))
        );
        assert_eq!(omega().homogeneous_grade(&cartan_u()).unwrap(), 2);
    }

    #[test]
    fn extraction_of_generators() {
        let (px, pth) = left_extract(&Element::generator(DX)).unwrap();
        assert_eq!((px, pth), (Element::one(), Element::zero()));
        let (px, pth) = left_extract(&Element::generator(DTH)).unwrap();
        assert_eq!((px, pth), (Element::zero(), Element::one()));
        assert!(left_extract(&Element::generator(D2X)).is_err());
        assert!(left_extract(&Element::word(&[DX, DX])).is_err());
    }

    #[test]
    fn ansatz_at_j_matches_bundled_relations() {
        assert_eq!(
            CoefficientAnsatz::covariant(Scalar::j()),
            bundled_coefficients().unwrap()
        );
    }

    #[test]
    fn eleven_c_normalizations() {
        let k = CoefficientAnsatz::covariant(Scalar::j());
        assert_eq!(k.q, -Scalar::one());
        assert_eq!(k.q_prime, -Scalar::one());
    }

    #[test]
    fn derived_second_order_relations() {
        for (s, t) in DERIVATIONS {
            assert_eq!(derive_relation(s, t).unwrap(), None, "{t}");
        }
    }
}
