//! Leftmost and rightmost reduction agree on every short word and on a
//! random sample of longer ones.

use superplane::presentations;

fn main() -> superplane::Result<()> {
    for &name in presentations::NAMES {
        let p = presentations::by_name(name).expect("bundled presentation");
        let local = p.check_local_confluence(4)?;
        let random = p.check_random_words(8, 2_000, 42)?;
        println!(
            "{name:<14} {:>3} rules  {:>3} critical pairs  local {}  random {}",
            p.rules().len(),
            p.critical_pairs().len(),
            verdict(local.is_confluent()),
            verdict(random.is_confluent()),
        );
    }
    Ok(())
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "DIVERGES"
    }
}
