//! Left partial derivatives read off from d f = dx px f + dth pth f.

use superplane::calculus::{differentiate, left_extract};
use superplane::operators::check_partial_noninvariance;
use superplane::presentations;
use superplane::syntax::{evaluate, AlgebraKind};

fn main() -> superplane::Result<()> {
    let omega = presentations::omega();
    let plane = presentations::plane();
    let f = &(&omega.gen("x").pow(2) * &omega.gen("th")) + &omega.gen("th").pow(2);
    let (px, pth) = left_extract(&omega.normal_form(&differentiate(&f)?)?)?;
    println!("f      = {}", omega.display(&f));
    println!("px f   = {}", plane.display(&px));
    println!("pth f  = {}", plane.display(&pth));

    for text in ["pth px", "px x", "pth th^2"] {
        let v = evaluate(text, AlgebraKind::MixedPartial)?.normalize(AlgebraKind::MixedPartial)?;
        println!("{text:<9} = {}", v.display(AlgebraKind::MixedPartial));
    }

    for c in check_partial_noninvariance() {
        println!("{c}");
    }
    Ok(())
}
