//! The exterior differential with d^3 = 0 and d^2 != 0.

use superplane::calculus::{differentiate, CoefficientAnsatz};
use superplane::presentations;
use superplane::scalar::Scalar;
use superplane::syntax::{evaluate, AlgebraKind};

fn main() -> superplane::Result<()> {
    let omega = presentations::omega();
    let mut g = &omega.gen("x").pow(2) * &omega.gen("th");
    for n in 1..=3 {
        g = omega.normal_form(&differentiate(&g)?)?;
        println!("d^{n}(x^2 th) = {}", omega.display(&g));
    }

    for text in ["d(xi)", "d(x xi)", "d(th^3)"] {
        let v = evaluate(text, AlgebraKind::Omega)?.normalize(AlgebraKind::Omega)?;
        println!("{text:<8} = {}", v.display(AlgebraKind::Omega));
    }

    for (label, y) in [("Y = j", Scalar::j()), ("Y = j^2", Scalar::j_pow(2))] {
        let k = CoefficientAnsatz::covariant(y);
        println!(
            "{label}: 1 + jY + j^2 Y^2 = {}, X = {}, A = {}, B = {}, C = {}",
            k.theta_cube_constraint(),
            k.x,
            k.a,
            k.b,
            k.c
        );
    }
    Ok(())
}
