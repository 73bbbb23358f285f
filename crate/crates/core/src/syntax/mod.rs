//! Expression syntax: parser, printer support and evaluation.

mod eval;
mod parse;

pub use eval::{eval, evaluate, AlgebraKind, Value};
pub use parse::{parse, Ast, FUNCTIONS, NAMES};

use crate::algebra::{Element, Gen};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Evaluates over a plain generator table: no functions, no derived names.
/// `x^-n` becomes `xi^n` when the table has `xi`.
pub fn eval_over(ast: &Ast, symbols: &[&str]) -> Result<Element> {
    let lookup = |s: &str| symbols.iter().position(|t| *t == s).map(|i| i as Gen);
    match ast {
        Ast::Number(r) => Ok(Element::from_scalar(Scalar::from_rational(r.clone()))),
        Ast::Name { name, .. } => match name.as_str() {
            "q" => Ok(Element::from_scalar(Scalar::q())),
            "j" => Ok(Element::from_scalar(Scalar::j())),
            s => lookup(s)
                .map(Element::generator)
                .ok_or_else(|| Error::TokenNotInAlgebra {
                    token: s.to_string(),
                    algebra: symbols.join(","),
                }),
        },
        Ast::Call { func, .. } => Err(Error::NotApplicable {
            function: func.clone(),
            algebra: symbols.join(","),
            reason: "functions are not allowed in relations".into(),
        }),
        Ast::Neg(a) => Ok(-eval_over(a, symbols)?),
        Ast::Add(a, b) => Ok(&eval_over(a, symbols)? + &eval_over(b, symbols)?),
        Ast::Sub(a, b) => Ok(&eval_over(a, symbols)? - &eval_over(b, symbols)?),
        Ast::Mul(a, b) => Ok(&eval_over(a, symbols)? * &eval_over(b, symbols)?),
        Ast::Pow(base, n) => {
            let b = eval_over(base, symbols)?;
            power(&b, *n, base, lookup("x"), lookup("xi"))
        }
    }
}

/// `b^n` with negative exponents allowed on scalar monomials and on `x`.
pub(crate) fn power(
    b: &Element,
    n: i64,
    base: &Ast,
    x: Option<Gen>,
    xi: Option<Gen>,
) -> Result<Element> {
    let exp = u32::try_from(n.unsigned_abs()).map_err(|_| Error::Unsupported {
        op: "power",
        reason: "exponent too large".into(),
    })?;
    if n >= 0 {
        return Ok(b.pow(exp));
    }
    if let Some(s) = b.as_scalar() {
        return Ok(Element::from_scalar(s.inv()?.pow(exp)));
    }
    match (x, xi) {
        (Some(x), Some(xi)) if *b == Element::generator(x) => Ok(Element::generator(xi).pow(exp)),
        _ => Err(Error::Unsupported {
            op: "power",
            reason: format!(
                "negative power of {base:?}; only x and scalar monomials are invertible"
            ),
        }),
    }
}

/// Splits `lhs = rhs` and evaluates both sides over `symbols`.
pub fn parse_relation(text: &str, symbols: &[&str]) -> Result<(Element, Element)> {
    let (l, r) = text.split_once('=').ok_or_else(|| Error::Syntax {
        offset: text.len(),
        message: "expected `=` in relation".into(),
    })?;
    let lhs = eval_over(&parse(l)?, symbols)?;
    let rhs = eval_over(
        &parse(r).map_err(|e| shift_offset(e, l.len() + 1))?,
        symbols,
    )?;
    Ok((lhs, rhs))
}

fn shift_offset(e: Error, by: usize) -> Error {
    match e {
        Error::Syntax { offset, message } => Error::Syntax {
            offset: offset + by,
            message,
        },
        Error::UnknownToken {
            token,
            offset,
            valid,
        } => Error::UnknownToken {
            token,
            offset: offset + by,
            valid,
        },
        e => e,
    }
}

/// Parses a scalar-only expression such as `(1 - j)*q^-2`.
pub fn parse_scalar(text: &str) -> Result<Scalar> {
    let e = eval_over(&parse(text)?, &[])?;
    e.as_scalar()
        .ok_or_else(|| Error::TypeMismatch(format!("`{text}` is not a scalar")))
}
