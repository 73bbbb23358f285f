use std::fmt;

use crate::algebra::{Element, Presentation};
use crate::calculus::{cartan_u, cartan_w, differentiate};
use crate::costructure::{antipode, coaction_space, coproduct, counit, delta_l, plane_square};
use crate::error::{Error, Result};
use crate::operators::{partial_coproduct, partial_counit, partial_square};
use crate::presentations;
use crate::scalar::Scalar;
use crate::tensor::{TensorElement, TensorSpace};

use super::parse::{parse, Ast};
use super::power;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AlgebraKind {
    Plane,
    Omega,
    Dual,
    Gl,
    GlPlane,
    GlDual,
    MixedPartial,
}

impl AlgebraKind {
    pub const ALL: [AlgebraKind; 7] = [
        AlgebraKind::Plane,
        AlgebraKind::Omega,
        AlgebraKind::Dual,
        AlgebraKind::Gl,
        AlgebraKind::GlPlane,
        AlgebraKind::GlDual,
        AlgebraKind::MixedPartial,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AlgebraKind::Plane => "plane",
            AlgebraKind::Omega => "omega",
            AlgebraKind::Dual => "dual",
            AlgebraKind::Gl => "gl",
            AlgebraKind::GlPlane => "gl-plane",
            AlgebraKind::GlDual => "gl-dual",
            AlgebraKind::MixedPartial => "mixed-partial",
        }
    }

    pub fn parse(name: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|k| k.name() == name)
            .ok_or_else(|| Error::UnknownAlgebra(name.to_string()))
    }

    /// The presentation elements are reduced in. `plane` shares ids with
    /// `omega`, so plane input is evaluated with `omega` ids.
    pub fn presentation(self) -> &'static Presentation {
        match self {
            AlgebraKind::Plane => presentations::plane(),
            AlgebraKind::Omega => presentations::omega(),
            AlgebraKind::Dual => presentations::dual(),
            AlgebraKind::Gl => presentations::gl(),
            AlgebraKind::GlPlane => presentations::gl_plane(),
            AlgebraKind::GlDual => presentations::gl_dual(),
            AlgebraKind::MixedPartial => presentations::mixed_partial(),
        }
    }
}

impl fmt::Display for AlgebraKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Result of evaluating an expression.
#[derive(Clone, Debug)]
pub enum Value {
    Scalar(Scalar),
    Element(Element),
    Tensor(TensorElement, TensorSpace<'static>),
}

impl PartialEq for Value {
    fn eq(&self, other: &Value) -> bool {
        match (self, other) {
            (Value::Scalar(a), Value::Scalar(b)) => a == b,
            (Value::Element(a), Value::Element(b)) => a == b,
            (Value::Tensor(a, sa), Value::Tensor(b, sb)) => {
                a == b && sa.left.name() == sb.left.name() && sa.right.name() == sb.right.name()
            }
            _ => false,
        }
    }
}

impl Value {
    pub fn kind(&self) -> &'static str {
        match self {
            Value::Scalar(_) => "scalar",
            Value::Element(_) => "element",
            Value::Tensor(..) => "tensor",
        }
    }

    fn lift(self) -> Value {
        match self {
            Value::Element(e) => match e.as_scalar() {
                Some(s) if !e.is_zero() || s.is_zero() => Value::Scalar(s),
                _ => Value::Element(e),
            },
            v => v,
        }
    }

    /// Normal form with respect to `algebra` (both legs for tensors).
    pub fn normalize(&self, algebra: AlgebraKind) -> Result<Value> {
        Ok(match self {
            Value::Scalar(s) => Value::Scalar(s.clone()),
            Value::Element(e) => Value::Element(algebra.presentation().normal_form(e)?).lift(),
            Value::Tensor(t, sp) => Value::Tensor(sp.normal_form(t)?, *sp),
        })
    }

    pub fn display(&self, algebra: AlgebraKind) -> String {
        match self {
            Value::Scalar(s) => s.to_string(),
            Value::Element(e) => algebra.presentation().display(e),
            Value::Tensor(t, sp) => sp.display(t),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Value::Scalar(s) => s.is_zero(),
            Value::Element(e) => e.is_zero(),
            Value::Tensor(t, _) => t.is_zero(),
        }
    }
}

struct Evaluator {
    algebra: AlgebraKind,
}

impl Evaluator {
    fn presentation(&self) -> &'static Presentation {
        self.algebra.presentation()
    }

    fn not_applicable(&self, function: &str, reason: &str) -> Error {
        Error::NotApplicable {
            function: function.to_string(),
            algebra: self.algebra.name().to_string(),
            reason: reason.to_string(),
        }
    }

    fn name(&self, name: &str) -> Result<Value> {
        match name {
            "q" => return Ok(Value::Scalar(Scalar::q())),
            "j" => return Ok(Value::Scalar(Scalar::j())),
            "w" | "u" if self.algebra == AlgebraKind::Omega => {
                return Ok(Value::Element(if name == "w" {
                    cartan_w()
                } else {
                    cartan_u()
                }))
            }
            _ => {}
        }
        self.presentation()
            .generator_id(name)
            .map(|g| Value::Element(Element::generator(g)))
            .ok_or_else(|| Error::TokenNotInAlgebra {
                token: name.to_string(),
                algebra: self.algebra.name().to_string(),
            })
    }

    fn element(&self, function: &str, v: Value) -> Result<Element> {
        match v {
            Value::Scalar(s) => Ok(Element::from_scalar(s)),
            Value::Element(e) => Ok(e),
            Value::Tensor(..) => Err(self.not_applicable(function, "argument is a tensor")),
        }
    }

    fn call(&self, func: &str, arg: Value) -> Result<Value> {
        use AlgebraKind::*;
        if func == "nf" {
            return arg.normalize(self.algebra);
        }
        let e = self.element(func, arg)?;
        let tensor = |t: TensorElement, sp: TensorSpace<'static>| Ok(Value::Tensor(t, sp));
        match (func, self.algebra) {
            ("d", Omega) => Ok(Value::Element(differentiate(&e)?)),
            ("d", _) => Err(self.not_applicable(func, "the differential lives in omega")),
            ("Delta", Plane | Omega) => tensor(coproduct(&e)?, plane_square()),
            ("Delta", MixedPartial) => tensor(partial_coproduct(&e)?, partial_square()),
            ("DeltaL", Omega) => tensor(delta_l(&e)?, coaction_space()),
            ("S", Plane | Omega) => Ok(Value::Element(antipode(&e)?)),
            ("eps", Plane | Omega) => Ok(Value::Scalar(counit(&e)?)),
            ("eps", MixedPartial) => Ok(Value::Scalar(partial_counit(&e)?)),
            _ => Err(self.not_applicable(func, "no such map on this algebra")),
        }
    }

    fn binary(&self, op: char, a: Value, b: Value) -> Result<Value> {
        use Value::*;
        let mismatch =
            |a: &Value, b: &Value| Error::TypeMismatch(format!("{} {op} {}", a.kind(), b.kind()));
        Ok(match (op, a, b) {
            ('+', Scalar(x), Scalar(y)) => Scalar(&x + &y),
            ('-', Scalar(x), Scalar(y)) => Scalar(&x - &y),
            ('*', Scalar(x), Scalar(y)) => Scalar(&x * &y),
            ('*', Scalar(s), Element(e)) | ('*', Element(e), Scalar(s)) => Element(e.scale(&s)),
            ('*', Scalar(s), Tensor(t, sp)) | ('*', Tensor(t, sp), Scalar(s)) => {
                Tensor(t.scale(&s), sp)
            }
            ('*', Element(x), Element(y)) => Element(&x * &y),
            ('*', Tensor(x, sp), Tensor(y, sq)) if same_space(&sp, &sq) => {
                Tensor(sp.multiply_free(&x, &y)?, sp)
            }
            (op @ ('+' | '-'), x, y) => match (x, y) {
                (Tensor(x, sp), Tensor(y, sq)) if same_space(&sp, &sq) => {
                    Tensor(if op == '+' { &x + &y } else { &x - &y }, sp)
                }
                (Tensor(x, sp), Scalar(s)) if s.is_zero() => Tensor(x, sp),
                (Scalar(s), Tensor(y, sp)) if s.is_zero() => {
                    Tensor(if op == '+' { y } else { -&y }, sp)
                }
                (x @ Tensor(..), y) | (x, y @ Tensor(..)) => return Err(mismatch(&x, &y)),
                (x, y) => {
                    let (x, y) = (self.element("+", x)?, self.element("+", y)?);
                    Element(if op == '+' { &x + &y } else { &x - &y })
                }
            },
            (_, a, b) => return Err(mismatch(&a, &b)),
        })
    }

    fn eval(&self, ast: &Ast) -> Result<Value> {
        match ast {
            Ast::Number(r) => Ok(Value::Scalar(Scalar::from_rational(r.clone()))),
            Ast::Name { name, .. } => self.name(name),
            Ast::Call { func, arg, .. } => self.call(func, self.eval(arg)?),
            Ast::Neg(a) => self.binary('*', Value::Scalar(-Scalar::one()), self.eval(a)?),
            Ast::Add(a, b) => self.binary('+', self.eval(a)?, self.eval(b)?),
            Ast::Sub(a, b) => self.binary('-', self.eval(a)?, self.eval(b)?),
            Ast::Mul(a, b) => self.binary('*', self.eval(a)?, self.eval(b)?),
            Ast::Pow(base, n) => match self.eval(base)? {
                Value::Scalar(s) if *n >= 0 => Ok(Value::Scalar(s.pow(*n as u32))),
                Value::Scalar(s) => Ok(Value::Scalar(s.inv()?.pow(n.unsigned_abs() as u32))),
                Value::Element(e) => {
                    let p = self.presentation();
                    let b = power(&e, *n, base, p.generator_id("x"), p.generator_id("xi"))?;
                    Ok(Value::Element(p.normal_form(&b)?))
                }
                Value::Tensor(t, sp) if *n >= 0 => {
                    let mut acc = TensorElement::one();
                    for _ in 0..*n {
                        acc = sp.multiply(&acc, &t)?;
                    }
                    Ok(Value::Tensor(acc, sp))
                }
                Value::Tensor(..) => Err(Error::Unsupported {
                    op: "power",
                    reason: "negative power of a tensor".into(),
                }),
            },
        }
    }
}

fn same_space(a: &TensorSpace<'_>, b: &TensorSpace<'_>) -> bool {
    a.left.name() == b.left.name() && a.right.name() == b.right.name()
}

/// Evaluates `ast` in `algebra`. Products are left unreduced; `nf(...)`
/// reduces.
pub fn eval(ast: &Ast, algebra: AlgebraKind) -> Result<Value> {
    Evaluator { algebra }.eval(ast).map(Value::lift)
}

/// Parses and evaluates `text` in `algebra`.
pub fn evaluate(text: &str, algebra: AlgebraKind) -> Result<Value> {
    eval(&parse(text)?, algebra)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn show(text: &str, algebra: AlgebraKind) -> String {
        let v = evaluate(text, algebra).unwrap().normalize(algebra).unwrap();
        v.display(algebra)
    }

    #[test]
    fn plane_reordering() {
        assert_eq!(show("nf(th x)", AlgebraKind::Plane), "q^-1*x*th");
        assert_eq!(show("th*x - q^-1*x*th", AlgebraKind::Plane), "0");
        assert_eq!(show("x^-2*x^2", AlgebraKind::Plane), "1");
    }

    #[test]
    fn forms_and_maps() {
        assert_eq!(show("nf(w^3)", AlgebraKind::Omega), "0");
        assert_eq!(show("d(d(d(x*th)))", AlgebraKind::Omega), "0");
        assert_eq!(show("eps(th)", AlgebraKind::Plane), "0");
        assert_eq!(show("eps(x^3 + 2)", AlgebraKind::Plane), "3");
        assert_eq!(
            show("Delta(x)*Delta(x) - Delta(x^2)", AlgebraKind::Plane),
            "0"
        );
        assert_eq!(show("S(S(th)) - th", AlgebraKind::Plane), "0");
    }

    #[test]
    fn tensor_space_of_coaction() {
        let v = evaluate("DeltaL(dx)", AlgebraKind::Omega).unwrap();
        assert_eq!(v.display(AlgebraKind::Omega), "x ⊗ dx");
    }

    #[test]
    fn errors() {
        assert!(matches!(
            AlgebraKind::parse("nope"),
            Err(Error::UnknownAlgebra(_))
        ));
        assert!(matches!(
            evaluate("dx", AlgebraKind::Plane),
            Err(Error::TokenNotInAlgebra { .. })
        ));
        assert!(matches!(
            evaluate("d(a)", AlgebraKind::Gl),
            Err(Error::NotApplicable { .. })
        ));
        assert!(matches!(
            evaluate("w", AlgebraKind::Plane),
            Err(Error::TokenNotInAlgebra { .. })
        ));
        assert!(matches!(
            evaluate("Delta(x) + x", AlgebraKind::Plane),
            Err(Error::TypeMismatch(_))
        ));
    }
}
