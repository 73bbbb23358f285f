//! Reducing words to normal form in each bundled algebra.

use superplane::presentations;
use superplane::syntax::{evaluate, AlgebraKind};

fn main() -> superplane::Result<()> {
    let samples = [
        (AlgebraKind::Plane, "th x"),
        (AlgebraKind::Plane, "th^2 x th"),
        (AlgebraKind::Omega, "d2th d2x dth x"),
        (AlgebraKind::Omega, "xi x th xi"),
        (AlgebraKind::Dual, "y phi^2 y"),
        (AlgebraKind::Gl, "dd a be"),
        (AlgebraKind::MixedPartial, "pth px th x"),
    ];
    for (algebra, text) in samples {
        let v = evaluate(text, algebra)?.normalize(algebra)?;
        println!(
            "{:<14} {text:<16} -> {}",
            algebra.name(),
            v.display(algebra)
        );
    }

    let omega = presentations::omega();
    println!(
        "\n{} rewrite rules in {}:",
        omega.rules().len(),
        omega.name()
    );
    for rule in omega.rules().iter().take(6) {
        println!(
            "  {} -> {}",
            omega.display_word(&rule.lhs),
            omega.display(&rule.rhs)
        );
    }
    Ok(())
}
