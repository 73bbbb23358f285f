//! GL_{q,j}(1|1) transforming the plane and its dual.

use superplane::glqj::{check_all, transformed_dual, transformed_plane, without_beta_cube};
use superplane::presentations::{gl_family, GlCoefficients};

fn main() -> superplane::Result<()> {
    let fam = gl_family(&GlCoefficients::default())?;
    let (x1, th1) = transformed_plane();
    let (phi1, _) = transformed_dual();
    let p = &fam.gl_plane;
    println!(
        "x' th' - q th' x' = {}",
        p.display(&p.normal_form(
            &(&(&x1 * &th1) - &(&th1 * &x1).scale(&superplane::scalar::Scalar::q()))
        )?)
    );
    println!(
        "th'^3             = {}",
        p.display(&p.normal_form(&th1.pow(3))?)
    );

    let d = &fam.gl_dual;
    println!(
        "phi'^3            = {}",
        d.display(&d.normal_form(&phi1.pow(3))?)
    );
    let d3 = without_beta_cube(d)?;
    println!(
        "phi'^3, be^3 = 0  = {}",
        d3.display(&d3.normal_form(&phi1.pow(3))?)
    );

    for c in check_all()
        .iter()
        .filter(|c| c.id.starts_with("mutation:") || !c.ok())
    {
        println!("{c}");
    }
    Ok(())
}
