//! Parsing and evaluating expressions the way the command line does.

use superplane::cli::evaluate_normalized;
use superplane::syntax::{parse, AlgebraKind};

fn main() {
    let inputs = [
        (AlgebraKind::Omega, "d(x th) - (dx th + x dth)"),
        (AlgebraKind::Omega, "DeltaL(w)"),
        (AlgebraKind::Omega, "(x + th)^3"),
        (AlgebraKind::Plane, "S(x) x"),
        (AlgebraKind::Plane, "(2/3 + j) q^-1 th x"),
        (AlgebraKind::Plane, "x^"),
        (AlgebraKind::Plane, "d(x)"),
    ];
    for (algebra, text) in inputs {
        match evaluate_normalized(text, algebra) {
            Ok(v) => println!(
                "[{algebra}] {text}  =>  {} ({})",
                v.display(algebra),
                v.kind()
            ),
            Err(e) => println!("[{algebra}] {text}  =>  error: {e}"),
        }
    }
    println!("\n{:?}", parse("eps(th^2 + 1)").expect("parses"));
}
