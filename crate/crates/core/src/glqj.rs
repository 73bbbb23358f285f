//! The supermatrix algebra `GL_{q,j}(1|1)` acting on the plane and on the
//! dual plane of differentials.

use crate::algebra::{Element, Gen, Presentation, Word};
use crate::error::Result;
use crate::presentations::gl_ids::{A, BE, DD, GA, PHI, TH, X, Y};
use crate::presentations::{dual, dual_ids, gl_family, omega_ids, plane, GlCoefficients, GlFamily};
use crate::report::{residual, tensor_residual, Check, Checker, Residual};
use crate::scalar::Scalar;
use crate::tensor::{TensorElement, TensorSpace};

fn g(id: Gen) -> Element {
    Element::generator(id)
}

/// `x' = a x + be th`, `th' = ga x + dd th` in `gl-plane`.
pub fn transformed_plane() -> (Element, Element) {
    let x1 = &(&g(A) * &g(X)) + &(&g(BE) * &g(TH));
    let th1 = &(&g(GA) * &g(X)) + &(&g(DD) * &g(TH));
    (x1, th1)
}

/// `phi' = a phi + j² be y`, `y' = j ga phi + dd y` in `gl-dual`.
pub fn transformed_dual() -> (Element, Element) {
    let phi1 = &(&g(A) * &g(PHI)) + &(&g(BE) * &g(Y)).scale(&Scalar::j_pow(2));
    let y1 = &(&g(GA) * &g(PHI)).scale(&Scalar::j()) + &(&g(DD) * &g(Y));
    (phi1, y1)
}

fn pair(l: Gen, r: Gen, c: Scalar) -> TensorElement {
    TensorElement::term(Word::letter(l), Word::letter(r), c)
}

/// `δ(x) = a⊗x + be⊗th`, `δ(th) = ga⊗x + dd⊗th`; right leg in `plane` ids.
pub fn plane_coaction() -> (TensorElement, TensorElement) {
    use omega_ids::{TH, X};
    let one = Scalar::one();
    let dx = &pair(A, X, one.clone()) + &pair(BE, TH, one.clone());
    let dth = &pair(GA, X, one.clone()) + &pair(DD, TH, one);
    (dx, dth)
}

/// `δ(phi) = a⊗phi + j² be⊗y`, `δ(y) = j ga⊗phi + dd⊗y`.
pub fn dual_coaction() -> (TensorElement, TensorElement) {
    use dual_ids::{PHI, Y};
    let dphi = &pair(A, PHI, Scalar::one()) + &pair(BE, Y, Scalar::j_pow(2));
    let dy = &pair(GA, PHI, Scalar::j()) + &pair(DD, Y, Scalar::one());
    (dphi, dy)
}

/// `p` with the extra rule `be^3 = 0`.
pub fn without_beta_cube(p: &Presentation) -> Result<Presentation> {
    p.with_rule(Word::from_slice(&[BE, BE, BE]), Element::zero())
}

fn nf_residual(p: &Presentation, e: &Element) -> Result<Residual> {
    Ok(residual(p, &p.normal_form(e)?))
}

/// Transformed coordinates satisfy the plane and dual-plane relations.
pub fn check_transformations(fam: &GlFamily) -> Vec<Check> {
    let mut c = Checker::new("gl");
    let (x1, th1) = transformed_plane();
    let (phi1, y1) = transformed_dual();
    let q = Scalar::q();
    c.zero("transformed-plane:x'th'", "x' th' = q th' x'", || {
        nf_residual(&fam.gl_plane, &(&(&x1 * &th1) - &(&th1 * &x1).scale(&q)))
    });
    c.zero("transformed-plane:th'^3", "th'^3 = 0", || {
        nf_residual(&fam.gl_plane, &th1.pow(3))
    });
    c.zero("transformed-dual:phi'y'", "phi' y' = q j y' phi'", || {
        nf_residual(
            &fam.gl_dual,
            &(&(&phi1 * &y1) - &(&y1 * &phi1).scale(&(&q * &Scalar::j()))),
        )
    });
    c.zero("transformed-dual:phi'^3", "phi'^3 = 0", || {
        nf_residual(&fam.gl_dual, &phi1.pow(3))
    });
    c.zero(
        "transformed-dual:phi'^3|be^3=0",
        "phi'^3 = 0 once be^3 = 0",
        || {
            let p = without_beta_cube(&fam.gl_dual)?;
            nf_residual(&p, &phi1.pow(3))
        },
    );
    c.zero(
        "transformed-dual:grades",
        "grad(phi') = 1, grad(y') = 2",
        || {
            let gp = fam.gl_dual.homogeneous_grade(&phi1)?;
            let gy = fam.gl_dual.homogeneous_grade(&y1)?;
            Ok((gp != 1 || gy != 2).then(|| format!("grades {gp}, {gy}")))
        },
    );
    c.finish()
}

/// The coactions preserve the plane and dual-plane relations.
pub fn check_coactions(fam: &GlFamily) -> Vec<Check> {
    let mut c = Checker::new("gl");
    let sp = TensorSpace::new(&fam.gl, plane());
    let sd = TensorSpace::new(&fam.gl, dual());
    let (dx, dth) = plane_coaction();
    let (dphi, dy) = dual_coaction();
    let q = Scalar::q();
    c.zero(
        "coaction:x*th",
        "delta(x) delta(th) = q delta(th) delta(x)",
        || {
            let r = &sp.multiply(&dx, &dth)? - &sp.multiply(&dth, &dx)?.scale(&q);
            Ok(tensor_residual(&sp, &r))
        },
    );
    c.zero("coaction:th^3", "delta(th)^3 = 0", || {
        Ok(tensor_residual(&sp, &sp.product([&dth, &dth, &dth])?))
    });
    c.zero(
        "coaction:phi*y",
        "delta(phi) delta(y) = q j delta(y) delta(phi)",
        || {
            let r =
                &sd.multiply(&dphi, &dy)? - &sd.multiply(&dy, &dphi)?.scale(&(&q * &Scalar::j()));
            Ok(tensor_residual(&sd, &r))
        },
    );
    c.zero("coaction:phi^3", "delta(phi)^3 = 0", || {
        Ok(tensor_residual(&sd, &sd.product([&dphi, &dphi, &dphi])?))
    });
    c.zero(
        "coaction:phi^3|be^3=0",
        "delta(phi)^3 = 0 once be^3 = 0",
        || {
            let gl = without_beta_cube(&fam.gl)?;
            let sb = TensorSpace::new(&gl, dual());
            Ok(tensor_residual(&sb, &sb.product([&dphi, &dphi, &dphi])?))
        },
    );
    c.zero(
        "coaction:identity-matrix",
        "a = dd = 1, be = ga = 0 gives 1 ⊗ id",
        || {
            let collapse = |t: &TensorElement| {
                let mut out = TensorElement::zero();
                for ((l, r), k) in t.terms() {
                    if l.letters().iter().all(|&x| x == A || x == DD) {
                        out.add_term(Word::empty(), r.clone(), k.clone());
                    }
                }
                out
            };
            for (t, gen, space) in [
                (&dx, omega_ids::X, &sp),
                (&dth, omega_ids::TH, &sp),
                (&dphi, dual_ids::PHI, &sd),
                (&dy, dual_ids::Y, &sd),
            ] {
                let r = &collapse(t) - &pair_unit(gen);
                if !r.is_zero() {
                    return Ok(tensor_residual(space, &r));
                }
            }
            Ok(None)
        },
    );
    c.finish()
}

fn pair_unit(r: Gen) -> TensorElement {
    TensorElement::term(Word::empty(), Word::letter(r), Scalar::one())
}

/// Transformation and coaction checks for one coefficient set.
pub fn check_family(fam: &GlFamily) -> Vec<Check> {
    let mut checks = check_transformations(fam);
    checks.extend(check_coactions(fam));
    checks
}

/// Sample normal forms in the bundled matrix algebra.
pub fn check_normal_forms() -> Vec<Check> {
    let mut c = Checker::new("gl");
    let p = crate::presentations::gl();
    c.zero("nf(ga*be)", "ga be = q^-2 be ga", || {
        let e = &Element::word(&[GA, BE]) - &Element::word(&[BE, GA]).scale(&Scalar::q_pow(-2));
        nf_residual(p, &e)
    });
    c.zero("nf(dd*a)", "dd a = a dd - q^-1 (1 - j) be ga", || {
        let corr = &Scalar::q_pow(-1) * &(&Scalar::one() - &Scalar::j());
        let e = &(&Element::word(&[DD, A]) - &Element::word(&[A, DD]))
            + &Element::word(&[BE, GA]).scale(&corr);
        nf_residual(p, &e)
    });
    c.zero("cross:th*be", "th be = j^2 be th", || {
        let e = &Element::word(&[TH, BE]) - &Element::word(&[BE, TH]).scale(&Scalar::j_pow(2));
        nf_residual(crate::presentations::gl_plane(), &e)
    });
    c.zero("cross:a*x", "a x = x a", || {
        nf_residual(
            crate::presentations::gl_plane(),
            &(&Element::word(&[A, X]) - &Element::word(&[X, A])),
        )
    });
    c.finish()
}

/// Coefficient sets that each differ from the bundled one in a single
/// entry: scaled by `q`, or with the `be ga` correction dropped.
pub fn mutations() -> Vec<(String, GlCoefficients)> {
    let mut out = Vec::new();
    for field in GlCoefficients::FIELDS {
        let mut k = GlCoefficients::default();
        let v = k.field_mut(field).expect("known field");
        *v = &*v * &Scalar::q();
        out.push((format!("{field}*q"), k));
    }
    let k = GlCoefficients {
        a_dd_correction: Scalar::zero(),
        ..GlCoefficients::default()
    };
    out.push(("a_dd_correction=0".into(), k));
    out
}

/// Every single-coefficient mutation breaks at least one check that holds
/// for the bundled coefficients.
pub fn check_mutations() -> Vec<Check> {
    let mut c = Checker::new("gl");
    let baseline: Vec<String> = match gl_family(&GlCoefficients::default()) {
        Ok(fam) => check_family(&fam)
            .into_iter()
            .filter(Check::ok)
            .map(|c| c.id)
            .collect(),
        Err(_) => Vec::new(),
    };
    for (name, k) in mutations() {
        c.nonzero(
            format!("mutation:{name}"),
            "a wrong coefficient breaks covariance",
            || {
                let fam = gl_family(&k)?;
                let broken: Vec<String> = check_family(&fam)
                    .into_iter()
                    .filter(|c| !c.ok() && baseline.contains(&c.id))
                    .map(|c| c.id)
                    .collect();
                Ok((!broken.is_empty()).then(|| broken.join(", ")))
            },
        );
    }
    c.finish()
}

/// All checks of the matrix algebra with the bundled coefficients.
pub fn check_all() -> Vec<Check> {
    let fam = gl_family(&GlCoefficients::default()).expect("bundled coefficients build");
    let mut checks = check_family(&fam);
    checks.extend(check_normal_forms());
    checks.extend(check_mutations());
    checks
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_coefficients() {
        let failing: Vec<String> = check_all()
            .into_iter()
            .filter(|c| !c.ok())
            .map(|c| c.id)
            .collect();
        // beta^3 is not killed by the matrix relations, and y^3 is free in the dual plane
        assert_eq!(failing, ["transformed-dual:phi'^3", "coaction:phi^3"]);
    }

    #[test]
    fn phi_cube_residual_is_beta_cubed() {
        let fam = gl_family(&GlCoefficients::default()).unwrap();
        let (phi1, _) = transformed_dual();
        let r = fam.gl_dual.normal_form(&phi1.pow(3)).unwrap();
        assert_eq!(r.len(), 1);
        assert!(r.terms().all(|(w, _)| w.letters() == [BE, BE, BE, Y, Y, Y]));
    }

    #[test]
    fn dropping_the_correction_breaks_the_plane() {
        let k = GlCoefficients {
            a_dd_correction: Scalar::zero(),
            ..GlCoefficients::default()
        };
        let fam = gl_family(&k).unwrap();
        let checks = check_transformations(&fam);
        assert!(checks.iter().any(|c| !c.ok()));
    }
}
