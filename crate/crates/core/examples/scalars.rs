//! Arithmetic in Q(j)[q, q^-1].

use superplane::scalar::{CycloNum, Rational, Scalar};
use superplane::syntax::parse_scalar;

fn main() -> superplane::Result<()> {
    let j = Scalar::j();
    println!("j^3          = {}", j.pow(3));
    println!("1 + j + j^2  = {}", &(&Scalar::one() + &j) + &j.pow(2));

    let z = CycloNum::new(Rational::new(3, 2), Rational::new(-1, 5));
    println!("1/({z})  = {}", z.inv()?);

    let s = parse_scalar("(1 - j)*q^-2")?;
    println!("({s})^-1 = {}", s.inv()?);
    println!("(1 + q)^2 = {}", (&Scalar::one() + &Scalar::q()).pow(2));
    match (&Scalar::one() + &Scalar::q()).inv() {
        Ok(v) => println!("unexpected inverse {v}"),
        Err(e) => println!("1 + q: {e}"),
    }
    Ok(())
}
