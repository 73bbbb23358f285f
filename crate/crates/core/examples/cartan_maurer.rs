//! The left-invariant forms w and u and the relations they satisfy.

use superplane::calculus::{cartan_u, cartan_w, check_cartan_maurer, CARTAN_IDENTITIES};
use superplane::costructure::{coaction_space, delta_l};
use superplane::presentations;

fn main() -> superplane::Result<()> {
    let omega = presentations::omega();
    let sp = coaction_space();
    for (name, form) in [("w", cartan_w()), ("u", cartan_u())] {
        println!("{name} = {}", omega.display(&omega.normal_form(&form)?));
        println!(
            "DeltaL({name}) = {}",
            sp.display(&sp.normal_form(&delta_l(&form)?)?)
        );
    }

    println!();
    for (id, expr, _) in CARTAN_IDENTITIES.iter().take(8) {
        println!("{id:<12} {expr}");
    }

    let checks = check_cartan_maurer();
    let failed = checks.iter().filter(|c| !c.ok()).count();
    println!("\n{} checks, {failed} failing", checks.len());
    Ok(())
}
