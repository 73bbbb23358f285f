//! The twelve acceptance criteria, run at zero tolerance. Prints one line per
//! criterion, then the failing checks, and exits nonzero if any criterion
//! fails.

use std::collections::BTreeSet;
use std::process::ExitCode;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value as Json;

use superplane::algebra::{Element, Gen, Word};
use superplane::calculus::{self, CoefficientAnsatz};
use superplane::cli;
use superplane::costructure::{self, coproduct, delta_l};
use superplane::glqj;
use superplane::operators;
use superplane::presentations::omega_ids::{D2TH, D2X, DTH, DX, TH, X};
use superplane::presentations::{self, omega_ids};
use superplane::report::{Check, Checker, Report, Status};
use superplane::scalar::{Rational, Scalar};
use superplane::suites::{random_cyclo, run_suites, Options, Suite};
use superplane::syntax::{evaluate, parse_scalar, AlgebraKind};
use superplane::tensor::{TensorElement, TensorSpace};

fn sc(text: &str) -> Scalar {
    parse_scalar(text).expect("literal scalar")
}

fn differs(got: &Scalar, want: &str) -> Option<String> {
    let w = sc(want);
    (got != &w).then(|| format!("got {got}, want {w}"))
}

fn pair(l: &[Gen], r: &[Gen], c: &str) -> TensorElement {
    TensorElement::term(Word::from_slice(l), Word::from_slice(r), sc(c))
}

fn tensor_differs(
    sp: &TensorSpace<'_>,
    got: &TensorElement,
    want: &TensorElement,
) -> superplane::Result<Option<String>> {
    let r = sp.normal_form(&(got - want))?;
    Ok((!r.is_zero()).then(|| format!("{} vs {}", sp.display(got), sp.display(want))))
}

fn eval_display(text: &str, algebra: AlgebraKind) -> superplane::Result<String> {
    Ok(cli::evaluate_normalized(text, algebra)?.display(algebra))
}

/// Compares an evaluated expression against a hand-computed normal form.
fn golden(c: &mut Checker, id: &str, text: &str, algebra: AlgebraKind, want: &str) {
    c.zero(id, text, || {
        let got = cli::evaluate_normalized(text, algebra)?;
        let expect = cli::evaluate_normalized(want, algebra)?;
        Ok((got != expect)
            .then(|| format!("{} vs {}", got.display(algebra), expect.display(algebra))))
    });
}

fn c1_scalars() -> Vec<Check> {
    let mut checks = run_suites(&[Suite::Scalars], &Options::default()).checks;
    let mut c = Checker::new("oracle");
    c.zero("j^2+j+1", "j^2 + j + 1 = 0", || {
        Ok(differs(
            &(&(&Scalar::j_pow(2) + &Scalar::j()) + &Scalar::one()),
            "0",
        ))
    });
    c.zero("j*j^2", "j j^2 = 1", || {
        Ok(differs(&(&Scalar::j() * &Scalar::j_pow(2)), "1"))
    });
    // (a + bj)^-1 = (a + b j^2) / (a^2 - ab + b^2)
    c.zero(
        "conjugate-formula:n=1000",
        "1/(a + bj) = (a + b j^2)/(a^2 - ab + b^2)",
        || {
            let mut rng = ChaCha8Rng::seed_from_u64(7);
            for _ in 0..1000 {
                let (a, b): (i64, i64) = (rng.gen_range(-50..=50), rng.gen_range(-50..=50));
                let n = a * a - a * b + b * b;
                if n == 0 {
                    continue;
                }
                let z = &Scalar::from_integer(a) + &(&Scalar::from_integer(b) * &Scalar::j());
                let want = &(&Scalar::from_integer(a)
                    + &(&Scalar::from_integer(b) * &Scalar::j_pow(2)))
                    * &Scalar::from_rational(Rational::new(1, n));
                let got = z.inv()?;
                if got != want {
                    return Ok(Some(format!("{z}: {got} vs {want}")));
                }
            }
            Ok(None)
        },
    );
    checks.extend(c.finish());
    checks
}

fn c2_confluence() -> Vec<Check> {
    run_suites(&[Suite::Confluence], &Options::default()).checks
}

fn c3_d_well_defined() -> Vec<Check> {
    let mut checks: Vec<Check> = calculus::check_d_well_defined()
        .into_iter()
        .filter(|c| c.id.starts_with("d-kills:") || c.id.starts_with("derive:"))
        .collect();
    let mut c = Checker::new("oracle");
    let omega = presentations::omega();
    for (lhs, want) in [
        (
            [omega_ids::D2X, omega_ids::DTH],
            ([omega_ids::DTH, omega_ids::D2X], "j*q"),
        ),
        (
            [omega_ids::D2TH, omega_ids::D2X],
            ([omega_ids::D2X, omega_ids::D2TH], "j*q^-1"),
        ),
    ] {
        let (word, coeff) = want;
        c.zero(
            format!(
                "coefficient:{}",
                omega.display_word(&Word::from_slice(&lhs))
            ),
            coeff,
            || {
                let got = omega.normal_form(&Element::word(&lhs))?;
                Ok(differs(&got.coefficient(&Word::from_slice(&word)), coeff))
            },
        );
    }
    checks.extend(c.finish());
    checks
}

fn c4_d_cubed() -> Vec<Check> {
    let mut checks = calculus::check_d_cubed(8);
    let mut c = Checker::new("oracle");
    golden(&mut c, "d(x)", "d(x)", AlgebraKind::Omega, "dx");
    golden(
        &mut c,
        "d(x^2)",
        "d(x^2)",
        AlgebraKind::Omega,
        "(1 + j)*x*dx",
    );
    golden(&mut c, "d(d(x))", "d(d(x))", AlgebraKind::Omega, "d2x");
    golden(
        &mut c,
        "d(d(d(x^2)))",
        "d(d(d(x^2)))",
        AlgebraKind::Omega,
        "0",
    );
    checks.extend(c.finish());
    checks
}

fn c5_coefficients() -> Vec<Check> {
    let (_, mut checks) = calculus::resolve_coefficients();
    let mut c = Checker::new("oracle");
    let k = CoefficientAnsatz::covariant(Scalar::j());
    for (name, got, want) in [
        ("X", &k.x, "j^2"),
        ("A", &k.a, "q"),
        ("B", &k.b, "j^2 - 1"),
        ("C", &k.c, "j*q^-1"),
        ("D", &k.d, "0"),
        ("F", &k.f, "j*q"),
    ] {
        c.zero(format!("Y=j:{name}"), want, || Ok(differs(got, want)));
    }
    c.zero(
        "bundled-coefficients",
        "first-order relations carry the Y = j solution",
        || {
            let b = calculus::bundled_coefficients()?;
            let mismatch: Vec<&str> = [
                ("X", &b.x, &k.x),
                ("A", &b.a, &k.a),
                ("B", &b.b, &k.b),
                ("C", &b.c, &k.c),
                ("D", &b.d, &k.d),
            ]
            .into_iter()
            .filter(|(_, x, y)| x != y)
            .map(|(n, _, _)| n)
            .collect();
            Ok((!mismatch.is_empty()).then(|| mismatch.join(", ")))
        },
    );
    c.zero("Y=j^2:jX-1", "j - 1", || {
        let k2 = CoefficientAnsatz::covariant(Scalar::j_pow(2));
        Ok(differs(
            &(&(&Scalar::j() * &k2.x) - &Scalar::one()),
            "j - 1",
        ))
    });
    checks.extend(c.finish());
    checks
}

fn c6_hopf() -> Vec<Check> {
    let mut checks = costructure::check_hopf_axioms(3);
    let mut c = Checker::new("oracle");
    let sp = costructure::plane_square();
    c.zero(
        "Delta(th^2)",
        "th^2 ⊗ x^2 + (1 + j) q^-1 x th ⊗ x th + x^2 ⊗ th^2",
        || {
            let want = &(&pair(&[TH, TH], &[X, X], "1")
                + &pair(&[X, TH], &[X, TH], "(1 + j)*q^-1"))
                + &pair(&[X, X], &[TH, TH], "1");
            tensor_differs(&sp, &coproduct(&Element::word(&[TH, TH]))?, &want)
        },
    );
    c.zero("Delta(x*th)", "x th ⊗ x^2 + x^2 ⊗ x th", || {
        let want = &pair(&[X, TH], &[X, X], "1") + &pair(&[X, X], &[X, TH], "1");
        tensor_differs(&sp, &coproduct(&Element::word(&[X, TH]))?, &want)
    });
    golden(&mut c, "S(th)", "S(th)", AlgebraKind::Plane, "-xi*th*xi");
    checks.extend(c.finish());
    checks
}

fn c7_left_covariance() -> Vec<Check> {
    let mut checks = costructure::check_coaction_axioms(8);
    checks.extend(
        calculus::check_cartan_maurer()
            .into_iter()
            .filter(|c| c.id.starts_with("DeltaL")),
    );
    let mut c = Checker::new("oracle");
    let sp = costructure::coaction_space();
    c.zero("DeltaL(dth)", "x ⊗ dth + j th ⊗ dx", || {
        let want = &pair(&[X], &[DTH], "1") + &pair(&[TH], &[DX], "j");
        tensor_differs(&sp, &delta_l(&Element::generator(DTH))?, &want)
    });
    c.zero("DeltaL(d2th)", "x ⊗ d2th + j^2 th ⊗ d2x", || {
        let want = &pair(&[X], &[D2TH], "1") + &pair(&[TH], &[D2X], "j^2");
        tensor_differs(&sp, &delta_l(&Element::generator(D2TH))?, &want)
    });
    c.zero("DeltaL(x*dx)", "x^2 ⊗ x dx", || {
        tensor_differs(
            &sp,
            &delta_l(&Element::word(&[X, DX]))?,
            &pair(&[X, X], &[X, DX], "1"),
        )
    });
    checks.extend(c.finish());
    checks
}

fn c8_cartan_maurer() -> Vec<Check> {
    let ids: BTreeSet<&str> = calculus::CARTAN_IDENTITIES
        .iter()
        .map(|(id, _, _)| *id)
        .collect();
    calculus::check_cartan_maurer()
        .into_iter()
        .filter(|c| ids.contains(c.id.as_str()))
        .collect()
}

fn c9_lie() -> Vec<Check> {
    let mut checks = operators::check_lie_relations(8);
    checks.extend(operators::check_coproducts());
    let mut c = Checker::new("oracle");
    c.zero("T(x^3)", "(1 + j^2 + j^4) x^3 = 0", || {
        let p = operators::PlaneMonomial::new(3, 0).expect("monomial");
        let v = operators::PlaneOperator::T.act(p);
        Ok((!v.is_zero()).then(|| v.to_string()))
    });
    c.zero("T(x^2)", "(1 + j^2) x^2 = -j x^2", || {
        let p = operators::PlaneMonomial::new(2, 0).expect("monomial");
        Ok(differs(
            &operators::PlaneOperator::T.act(p).coefficient(p),
            "-j",
        ))
    });
    checks.extend(c.finish());
    checks
}

fn c10_partials() -> Vec<Check> {
    let checks = operators::check_partials(6);
    let mut missing = Checker::new("oracle");
    missing.zero(
        "noninvariance-is-expected-nonzero",
        "status expected-nonzero",
        || {
            let s = checks
                .iter()
                .find(|c| c.id == "noninvariance")
                .map(|c| c.status);
            Ok((s != Some(Status::ExpectedNonzero)).then(|| format!("{s:?}")))
        },
    );
    let mut checks = checks;
    checks.extend(missing.finish());
    checks
}

fn c11_matrices() -> Vec<Check> {
    glqj::check_all()
}

fn random_element(rng: &mut ChaCha8Rng) -> Element {
    let mut e = Element::zero();
    for _ in 0..rng.gen_range(1..=4) {
        let len = rng.gen_range(0..=4);
        let letters: Vec<_> = (0..len).map(|_| rng.gen_range(0..7u8) as _).collect();
        let k = Scalar::monomial(random_cyclo(rng), rng.gen_range(-3..=3));
        e = &e + &Element::term(Word::from_slice(&letters), k);
    }
    e
}

fn keys(v: &Json) -> BTreeSet<String> {
    v.as_object()
        .map(|o| o.keys().cloned().collect())
        .unwrap_or_default()
}

fn strings(v: &Json) -> BTreeSet<String> {
    v.as_array()
        .into_iter()
        .flatten()
        .filter_map(|s| s.as_str().map(String::from))
        .collect()
}

fn json_schema_residual() -> superplane::Result<Option<String>> {
    let fixture: Json =
        serde_json::from_str(include_str!("fixtures/json_schema.json")).expect("fixture parses");
    let mut problems = Vec::new();
    let check = &fixture["check"];
    let required = strings(&check["required"]);
    let allowed: BTreeSet<String> = required
        .union(&strings(&check["optional"]))
        .cloned()
        .collect();
    let statuses = strings(&check["status"]);
    let mut seen_status = BTreeSet::new();
    let mut checks = run_suites(&[Suite::Scalars], &Options::default()).checks;
    checks.extend(operators::check_partial_noninvariance());
    checks.push(Check {
        status: Status::Fail,
        residual: Some("r".into()),
        ..checks[0].clone()
    });
    for c in &checks {
        let v: Json = serde_json::from_str(&c.to_json()).expect("check json");
        let k = keys(&v);
        if !required.is_subset(&k) || !k.is_subset(&allowed) {
            problems.push(format!("check keys {k:?}"));
        }
        let s = v["status"].as_str().unwrap_or_default().to_string();
        if !statuses.contains(&s) {
            problems.push(format!("status {s}"));
        }
        seen_status.insert(s);
    }
    if seen_status != statuses {
        problems.push(format!("statuses {seen_status:?}"));
    }
    let run = |args: &[&str]| {
        let mut out = Vec::new();
        let mut err = Vec::new();
        cli::run(
            std::iter::once("superplane").chain(args.iter().copied()),
            &mut &b""[..],
            &mut out,
            &mut err,
        );
        String::from_utf8(out).unwrap_or_default()
    };
    let value_keys = strings(&fixture["value"]["required"]);
    let mut kinds = BTreeSet::new();
    for expr in ["nf(th x)", "eps(x)", "Delta(x)"] {
        let v: Json = serde_json::from_str(run(&["--json", "--algebra", "plane", expr]).trim())
            .expect("value json");
        if keys(&v) != value_keys {
            problems.push(format!("value keys {:?}", keys(&v)));
        }
        kinds.insert(v["kind"].as_str().unwrap_or_default().to_string());
    }
    if kinds != strings(&fixture["value"]["kind"]) {
        problems.push(format!("kinds {kinds:?}"));
    }
    let mut out = Vec::new();
    cli::run(
        ["superplane", "--json"],
        &mut &b"x^\n"[..],
        &mut out,
        &mut Vec::new(),
    );
    let v: Json = serde_json::from_str(String::from_utf8_lossy(&out).trim()).unwrap_or_default();
    if keys(&v) != strings(&fixture["error"]["required"]) {
        problems.push(format!("error keys {:?}", keys(&v)));
    }
    Ok((!problems.is_empty()).then(|| problems.join("; ")))
}

fn c12_cli() -> Vec<Check> {
    let mut c = Checker::new("cli");
    c.zero("round-trip:n=1000", "parse(print(e)) = e", || {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        let omega = presentations::omega();
        for _ in 0..1000 {
            let e = omega.normal_form(&random_element(&mut rng))?;
            let printed = omega.display(&e);
            let back = evaluate(&printed, AlgebraKind::Omega)?.normalize(AlgebraKind::Omega)?;
            let again = back.display(AlgebraKind::Omega);
            if again != printed {
                return Ok(Some(format!("{printed} reparsed as {again}")));
            }
        }
        Ok(None)
    });
    c.zero("scalar-round-trip:n=1000", "parse(print(s)) = s", || {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..1000 {
            let s = &Scalar::monomial(random_cyclo(&mut rng), rng.gen_range(-5..=5))
                + &Scalar::monomial(random_cyclo(&mut rng), rng.gen_range(-5..=5));
            let back = parse_scalar(&s.to_string())?;
            if back != s {
                return Ok(Some(format!("{s} reparsed as {back}")));
            }
        }
        Ok(None)
    });
    c.zero("one-shot", "nf(th x) = q^-1 x th", || {
        let got = eval_display("nf(th x)", AlgebraKind::Plane)?;
        Ok((got != "q^-1*x*th").then_some(got))
    });
    c.zero("run_suites(all):exit", "exit code 0", || {
        let report: Report = run_suites(&Suite::ALL, &Options::default());
        let code = report.exit_code();
        Ok((code != 0).then(|| {
            let ids: Vec<String> = report
                .failures()
                .map(|c| format!("{}:{}", c.suite, c.id))
                .collect();
            format!("exit {code}; failing {}", ids.join(", "))
        }))
    });
    c.zero(
        "json-schema",
        "fixtures/json_schema.json",
        json_schema_residual,
    );
    c.finish()
}

fn main() -> ExitCode {
    type Criterion = (&'static str, fn() -> Vec<Check>);
    let criteria: [Criterion; 12] = [
        ("scalar layer", c1_scalars),
        ("confluence", c2_confluence),
        ("differential well-definedness", c3_d_well_defined),
        ("d^3 = 0", c4_d_cubed),
        ("coefficient resolution", c5_coefficients),
        ("Hopf axioms", c6_hopf),
        ("left covariance", c7_left_covariance),
        ("Cartan-Maurer forms", c8_cartan_maurer),
        ("Lie superalgebra", c9_lie),
        ("partial derivatives", c10_partials),
        ("supermatrix covariance", c11_matrices),
        ("command line", c12_cli),
    ];
    let results: Vec<(usize, &str, Vec<Check>)> = std::thread::scope(|s| {
        let handles: Vec<_> = criteria
            .iter()
            .enumerate()
            .map(|(i, (name, f))| s.spawn(move || (i + 1, *name, f())))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("criterion panicked"))
            .collect()
    });
    let mut failed = 0;
    for (n, name, checks) in &results {
        let bad = checks.iter().filter(|c| !c.ok()).count();
        let verdict = if bad == 0 && !checks.is_empty() {
            "PASS"
        } else {
            "FAIL"
        };
        if verdict == "FAIL" {
            failed += 1;
        }
        println!(
            "criterion {n:>2} {verdict}  {name} ({}/{} checks)",
            checks.len() - bad,
            checks.len()
        );
    }
    for (n, _, checks) in &results {
        for c in checks.iter().filter(|c| !c.ok()) {
            println!(
                "  [{n}] {}:{}  {}",
                c.suite,
                c.id,
                c.residual.as_deref().unwrap_or("")
            );
        }
    }
    println!("{} of 12 criteria pass", 12 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
