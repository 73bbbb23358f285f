//! Named verification suites and their concurrent runner.

use std::fmt;
use std::str::FromStr;
use std::thread;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::presentations;
use crate::report::{Check, Checker, Report};
use crate::scalar::{CycloNum, Rational, Scalar};
use crate::{calculus, costructure, glqj, operators};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Scalars,
    Confluence,
    Hopf,
    Calculus,
    Cartan,
    Lie,
    Partial,
    Gl,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Scalars,
        Suite::Confluence,
        Suite::Hopf,
        Suite::Calculus,
        Suite::Cartan,
        Suite::Lie,
        Suite::Partial,
        Suite::Gl,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Scalars => "scalars",
            Suite::Confluence => "confluence",
            Suite::Hopf => "hopf",
            Suite::Calculus => "calculus",
            Suite::Cartan => "cartan",
            Suite::Lie => "lie",
            Suite::Partial => "partial",
            Suite::Gl => "gl",
        }
    }

    /// A suite name, or `all`.
    pub fn parse_selection(name: &str) -> Result<Vec<Suite>> {
        if name == "all" {
            return Ok(Suite::ALL.to_vec());
        }
        name.parse().map(|s| vec![s])
    }

    pub fn run(self, opts: &Options) -> Vec<Check> {
        match self {
            Suite::Scalars => check_scalars(opts),
            Suite::Confluence => check_confluence(opts),
            Suite::Hopf => {
                let mut v = costructure::check_hopf_axioms(opts.max_word_len);
                v.extend(costructure::check_coaction_axioms(opts.max_degree));
                v
            }
            Suite::Calculus => {
                let mut v = calculus::check_d_well_defined();
                v.extend(calculus::check_d_cubed(opts.max_degree));
                v.extend(calculus::resolve_coefficients().1);
                v
            }
            Suite::Cartan => calculus::check_cartan_maurer(),
            Suite::Lie => {
                let mut v = operators::check_lie_relations(opts.max_degree);
                v.extend(operators::check_coproducts());
                v
            }
            Suite::Partial => operators::check_partials(opts.max_degree),
            Suite::Gl => glqj::check_all(),
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Unsupported {
                op: "suite selection",
                reason: format!(
                    "unknown suite `{s}`; expected one of all, {}",
                    names().join(", ")
                ),
            })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn names() -> Vec<&'static str> {
    Suite::ALL.iter().map(|s| s.name()).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Options {
    /// Largest `x` exponent in monomial sweeps.
    pub max_degree: u32,
    /// Longest word in exhaustive sweeps.
    pub max_word_len: usize,
    pub random_words: usize,
    pub random_word_len: usize,
    pub seed: u64,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            max_degree: 8,
            max_word_len: 4,
            random_words: 10_000,
            random_word_len: 8,
            seed: 0x5eed,
        }
    }
}

/// Runs the selected suites in parallel and sorts the checks.
pub fn run_suites(selection: &[Suite], opts: &Options) -> Report {
    let mut selection = selection.to_vec();
    selection.sort();
    selection.dedup();
    let checks = thread::scope(|s| {
        let handles: Vec<_> = selection
            .iter()
            .map(|suite| s.spawn(move || suite.run(opts)))
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("suite thread panicked"))
            .collect()
    });
    Report::new(checks)
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    Rational::new(rng.gen_range(-1000..=1000), rng.gen_range(1..=1000))
}

/// A nonzero element of `ℚ(j)`.
pub fn random_cyclo(rng: &mut ChaCha8Rng) -> CycloNum {
    loop {
        let c = CycloNum::new(random_rational(rng), random_rational(rng));
        if !c.is_zero() {
            return c;
        }
    }
}

fn check_scalars(opts: &Options) -> Vec<Check> {
    let mut c = Checker::new("scalars");
    let j = Scalar::j();
    c.zero("j^3=1", "j^3 = 1", || {
        let r = &j.pow(3) - &Scalar::one();
        Ok((!r.is_zero()).then(|| r.to_string()))
    });
    c.zero("1+j+j^2=0", "1 + j + j^2 = 0", || {
        let r = &(&Scalar::one() + &j) + &j.pow(2);
        Ok((!r.is_zero()).then(|| r.to_string()))
    });
    c.zero("j-conjugate", "j^-1 = j^2", || {
        let r = &j.inv()? - &j.pow(2);
        Ok((!r.is_zero()).then(|| r.to_string()))
    });
    c.zero("cyclo-inverse:n=1000", "c c^-1 = 1", || {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        for _ in 0..1000 {
            let a = random_cyclo(&mut rng);
            let p = &a * &a.inv()?;
            if !p.is_one() {
                return Ok(Some(format!("{a} * {a}^-1 = {p}")));
            }
        }
        Ok(None)
    });
    c.zero(
        "laurent-monomial-inverse:n=1000",
        "(c q^k)(c q^k)^-1 = 1",
        || {
            let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 1);
            for _ in 0..1000 {
                let s = Scalar::monomial(random_cyclo(&mut rng), rng.gen_range(-20..=20));
                let p = &s * &s.inv()?;
                if !p.is_one() {
                    return Ok(Some(format!("{s}: {p}")));
                }
            }
            Ok(None)
        },
    );
    c.nonzero("non-monomial-inverse", "1 + q has no inverse", || {
        Ok((&Scalar::one() + &Scalar::q())
            .inv()
            .err()
            .map(|e| e.to_string()))
    });
    c.finish()
}

fn check_confluence(opts: &Options) -> Vec<Check> {
    let mut c = Checker::new("confluence");
    for &name in presentations::NAMES {
        let p = presentations::by_name(name).expect("bundled presentation");
        let describe = |r: crate::algebra::ConfluenceReport| {
            r.divergence.map(|d| {
                format!(
                    "{}: leftmost {} vs rightmost {}",
                    p.display_word(&d.word),
                    p.display(&d.leftmost),
                    p.display(&d.rightmost)
                )
            })
        };
        c.zero(
            format!("local:{name}:len<={}", opts.max_word_len),
            "leftmost and rightmost reduction agree",
            || Ok(describe(p.check_local_confluence(opts.max_word_len)?)),
        );
        c.zero(
            format!(
                "random:{name}:n={},len={}",
                opts.random_words, opts.random_word_len
            ),
            "leftmost and rightmost reduction agree",
            || {
                Ok(describe(p.check_random_words(
                    opts.random_word_len,
                    opts.random_words,
                    opts.seed,
                )?))
            },
        );
    }
    c.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn selection_parsing() {
        assert_eq!(Suite::parse_selection("all").unwrap().len(), 8);
        assert_eq!(Suite::parse_selection("lie").unwrap(), [Suite::Lie]);
        assert!(Suite::parse_selection("nope").is_err());
    }

    #[test]
    fn scalar_suite_passes() {
        let r = run_suites(&[Suite::Scalars], &Options::default());
        assert!(r.all_ok(), "{:?}", r.failures().collect::<Vec<_>>());
    }

    #[test]
    fn report_is_sorted() {
        let r = run_suites(&[Suite::Scalars, Suite::Gl], &Options::default());
        let keys: Vec<_> = r
            .checks
            .iter()
            .map(|c| (c.suite.clone(), c.id.clone()))
            .collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
    }
}
