//! The operators T, nabla and N acting on x^m th^k.

use superplane::operators::{t_closed_form, PlaneMonomial, PlaneOperator, PlaneVector};

fn main() {
    for m in 0..=6 {
        let p = PlaneMonomial::new(m, 1).expect("k <= 2");
        let v = PlaneVector::monomial(p);
        let t = PlaneOperator::T.apply(&v);
        let n = PlaneOperator::Nabla.apply(&v);
        println!(
            "x^{m} th:  T -> {t}   nabla -> {n}   closed form agrees: {}",
            t == t_closed_form(p)
        );
    }

    let v = PlaneVector::monomial(PlaneMonomial::new(4, 0).expect("k <= 2"));
    use PlaneOperator::{Nabla, T};
    let tn = PlaneOperator::apply_word(&[T, Nabla], &v);
    let nt = PlaneOperator::apply_word(&[Nabla, T], &v);
    println!("\nT nabla x^4 = {tn}, nabla T x^4 = {nt}");
    println!(
        "nabla^3 x^4 = {}",
        PlaneOperator::apply_word(&[Nabla, Nabla, Nabla], &v)
    );
}
