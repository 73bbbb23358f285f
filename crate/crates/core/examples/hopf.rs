//! Coproduct, counit and antipode of the extended plane.

use superplane::costructure::{check_hopf_axioms, coproduct};
use superplane::report::Report;
use superplane::syntax::{evaluate, AlgebraKind};

fn main() -> superplane::Result<()> {
    for text in [
        "Delta(x)",
        "Delta(th)",
        "Delta(th^2)",
        "eps(x th)",
        "S(th)",
        "S(x th)",
    ] {
        let v = evaluate(text, AlgebraKind::Plane)?.normalize(AlgebraKind::Plane)?;
        println!("{text:<12} = {}", v.display(AlgebraKind::Plane));
    }

    let th = superplane::presentations::plane().gen("th");
    let cube = coproduct(&th.pow(3))?;
    println!("Delta(th)^3 has {} terms", cube.len());

    let report = Report::new(check_hopf_axioms(3));
    println!("{}", report.summary());
    Ok(())
}
