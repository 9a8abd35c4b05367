//! Acceptance suite: one line per criterion, non-zero exit if any fails.
//! Run with `cargo test -p folia-core --test acceptance`.

mod common;

use std::time::{Duration, Instant};

use common::{p, random_germs, random_non_semihomogeneous, random_singular_curves};
use folia_core::blowup::{self, SingularClass};
use folia_core::germ::{self, BalancedEquation, CurveGerm, FoliationGerm};
use folia_core::localalg::{self, MonomialOrder};
use folia_core::poly::{parse_poly, rat};
use folia_core::projective::{self, ProjectiveCurve, ProjectiveFoliation, ProjectivePoint};
use folia_core::theorems::{self, CheckOptions, SecondTypeMode};
use folia_core::{CheckReport, Verdict};

type Outcome = Result<String, String>;

/// Name, check and time limit in seconds.
type Criterion = (&'static str, fn() -> Outcome, u64);

fn ensure(cond: bool, what: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn int(r: &CheckReport, name: &str) -> Result<i64, String> {
    r.invariants
        .int(name)
        .ok_or_else(|| format!("{} has no integer {name:?}", r.check))
}

fn expect(r: &CheckReport, name: &str, want: i64) -> Result<(), String> {
    let got = int(r, name)?;
    ensure(got == want, format!("{name} = {got}, expected {want}"))
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn radial() -> (FoliationGerm, BalancedEquation) {
    let f = FoliationGerm::new(p("-y"), p("x")).unwrap();
    let b = BalancedEquation::from_polys(p("x*y*(x-y)"), Some(p("x+y"))).unwrap();
    (f, b)
}

fn cusp() -> (FoliationGerm, BalancedEquation) {
    let c = p("y^2 - x^3");
    let f = FoliationGerm::hamiltonian(&c).unwrap();
    (f, BalancedEquation::from_polys(c, None).unwrap())
}

fn fk(k: u32) -> FoliationGerm {
    let a = 2 * k - 2;
    let pp = p(&format!("y*(2*x^{a} + 4*x^2*y^{} - y^{})", k - 2, k - 1));
    let qq = p(&format!("x*(y^{} - 2*x^2*y^{} - x^{a})", k - 1, k - 2));
    FoliationGerm::new(pp, qq).unwrap()
}

fn hamiltonians() -> Vec<(FoliationGerm, BalancedEquation)> {
    random_singular_curves(0x5eed_0006, 10)
        .into_iter()
        .map(|c| {
            let f = FoliationGerm::hamiltonian(c.equation()).unwrap();
            (f, BalancedEquation::new(c, None).unwrap())
        })
        .collect()
}

fn radial_values() -> Outcome {
    let (f, b) = radial();
    let r = theorems::check_cota(&f, &b, &CheckOptions::default()).map_err(err)?;
    for (name, want) in [
        ("nu(B0)", 3),
        ("nu(Binf)", 1),
        ("i(polar,Binf)", 1),
        ("tau", 1),
        ("i(B0,Binf)", 3),
        ("mu", 1),
        ("lhs", 1),
    ] {
        expect(&r, name, want)?;
    }
    ensure(
        r.invariants.bool("equality (*)") == Some(true),
        "equality (*) on the left",
    )?;
    ensure(
        r.verdict == Verdict::Pass,
        format!("cota verdict {}", r.verdict),
    )?;
    let st = theorems::second_type(&f, &b, SecondTypeMode::Both, 24).map_err(err)?;
    ensure(
        st.criterion && st.reduction == Some(true),
        "second type by both routes",
    )?;
    Ok("nu 3/1, i(P,Binf) 1, tau 1, i(B0,Binf) 3, mu 1; 1 = 1 <= 2".into())
}

fn briancon_skoda_failure() -> Outcome {
    let f = fk(5);
    let b = BalancedEquation::from_polys(p("x*y"), None).unwrap();
    let r = theorems::check_briancon_skoda(&f, &b, &CheckOptions::default()).map_err(err)?;
    ensure(
        r.assertion("f^2 in (P,Q)") == Some(false),
        "(xy)^2 should not lie in (P,Q)",
    )?;
    expect(&r, "nu", 5)?;
    let st = theorems::second_type(&f, &b, SecondTypeMode::Criterion, 24).map_err(err)?;
    ensure(!st.criterion, "F_5 passes the criterion")?;
    let nf = r
        .invariants
        .get("f^2 mod (P,Q)")
        .map(|v| v.to_string())
        .unwrap_or_default();
    Ok(format!(
        "normal form {nf}, nu 5, xi = {}",
        germ::tangency_excess(&f, &b).map_err(err)?
    ))
}

fn fk_family() -> Outcome {
    let xy = CurveGerm::new(p("x*y")).unwrap();
    let mut parts = Vec::new();
    for k in 3..=7u32 {
        let f = fk(k);
        let tau = germ::tjurina_foliation(&f, &xy).map_err(err)? as i64;
        let nu = germ::multiplicity(&f) as i64;
        ensure(tau == 3 * k as i64 - 2, format!("k = {k}: tau = {tau}"))?;
        let holds = nu * nu <= 2 * tau;
        ensure(
            holds == (k <= 5),
            format!("k = {k}: nu^2 = {} vs 2 tau = {}", nu * nu, 2 * tau),
        )?;
        parts.push(format!(
            "k{k}: tau {tau}{}",
            if holds { "" } else { " (fails)" }
        ));
    }
    Ok(parts.join(", "))
}

fn global_bound() -> Outcome {
    let q = |s: &str| parse_poly(s, 3).unwrap();
    let fol = ProjectiveFoliation::new(q("y*z"), q("2*x*z"), q("-3*x*y")).map_err(err)?;
    let curve = ProjectiveCurve::new(q("x*y*z")).map_err(err)?;
    let pt = |a, b, c| ProjectivePoint::new([rat(a), rat(b), rat(c)]).unwrap();
    let points = [pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1)];
    let cert = projective::milnor_sum_certificate(&fol, &points).map_err(err)?;
    ensure(cert.verdict == Verdict::Pass, "sum mu certificate")?;
    let r = projective::check_global_bound(&fol, &curve, &points, &CheckOptions::default())
        .map_err(err)?;
    for (name, want) in [
        ("d", 1),
        ("sum mu", 3),
        ("tau(C)", 3),
        ("bound with deg C", 2),
        ("(d+2) deg C - deg C^2", 0),
        ("sum gsv", 0),
    ] {
        expect(&r, name, want)?;
    }
    ensure(
        r.verdict == Verdict::Pass,
        format!("global bound verdict {}", r.verdict),
    )?;
    Ok("d 1, sum mu 3, tau(C) 3, 2 <= 3, gsv sum 0".into())
}

fn oracle_equivalence() -> Outcome {
    let germs = random_germs(0x5eed_0005, 25);
    let mut largest = 0;
    for g in &germs {
        let gens = g.generators();
        let sb = localalg::standard_basis(&gens, MonomialOrder::Local).map_err(err)?;
        let mu = sb.quotient_dim().finite().ok_or("infinite quotient")?;
        let run = localalg::macaulay_stable_dim(&gens, 64).map_err(err)?;
        ensure(
            mu == run.dim,
            format!("P = {}, Q = {}: {mu} vs {}", g.p(), g.q(), run.dim),
        )?;
        largest = largest.max(mu);
    }
    Ok(format!("{} germs, largest mu {largest}", germs.len()))
}

fn operator_form() -> Outcome {
    let cases = hamiltonians();
    for (f, b) in &cases {
        let eq = b.zero().equation();
        let r = theorems::check_briancon_skoda(f, b, &CheckOptions::default()).map_err(err)?;
        ensure(
            r.invariants.bool("second_type") == Some(true),
            format!("d({eq}) not second type"),
        )?;
        for name in ["f^2 in (P,Q)", "sigma^2 = 0", "rank sigma = mu - tau"] {
            ensure(r.assertion(name) == Some(true), format!("d({eq}): {name}"))?;
        }
        let k = theorems::check_kernel_identity(f, b).map_err(err)?;
        ensure(
            k.verdict == Verdict::Pass,
            format!("d({eq}): dim ker sigma = tau"),
        )?;
        let polar = germ::generic_polar(f, &germ::default_probes(7), &[eq]).map_err(err)?;
        let delta = germ::excess_polar(f, b, &polar.polar).map_err(err)?;
        ensure(delta == 0, format!("d({eq}): delta = {delta}"))?;
    }
    Ok(format!("{} hamiltonians", cases.len()))
}

fn cusp_resolution() -> Outcome {
    let (f, b) = cusp();
    let tree = blowup::reduce(&f, 24).map_err(err)?;
    ensure(tree.len() == 3, format!("{} blow-ups", tree.len()))?;
    ensure(
        tree.leaves
            .iter()
            .all(|l| l.class == SingularClass::NondegenerateSimple),
        "a leaf is not nondegenerate simple",
    )?;
    ensure(
        blowup::second_type_verdict(&tree),
        "reduction: not second type",
    )?;
    ensure(
        blowup::generalized_curve_verdict(&tree),
        "reduction: not generalized curve",
    )?;
    let st = theorems::second_type(&f, &b, SecondTypeMode::Both, 24).map_err(err)?;
    ensure(
        st.criterion && st.reduction == Some(true),
        "routes disagree",
    )?;
    Ok(format!(
        "3 blow-ups, {} nondegenerate leaves, routes agree",
        tree.leaves.len()
    ))
}

fn semihomogeneous() -> Outcome {
    let c = CurveGerm::new(p("x*y*(x-y)")).unwrap();
    let mu = germ::milnor_curve(&c).map_err(err)?;
    ensure(mu == 4, format!("mu = {mu}"))?;
    ensure(germ::is_semihomogeneous(&c), "xy(x-y) not semi-homogeneous")?;
    let curves = random_non_semihomogeneous(0x5eed_0008, 10);
    let mut strict = 0;
    for c in &curves {
        ensure(
            !germ::is_semihomogeneous(c),
            format!("{} is semi-homogeneous", c.equation()),
        )?;
        let nu = c.multiplicity() as usize;
        let mu = germ::milnor_curve(c).map_err(err)?;
        ensure(
            (nu - 1).pow(2) <= mu,
            format!("{}: (nu-1)^2 > mu = {mu}", c.equation()),
        )?;
        strict += usize::from((nu - 1).pow(2) < mu);
    }
    Ok(format!(
        "mu 4 = (3-1)^2; {} curves, {strict} strict",
        curves.len()
    ))
}

fn tau_mu_sandwich() -> Outcome {
    let mut cases = vec![radial(), cusp()];
    cases.extend(hamiltonians());
    for (f, b) in &cases {
        let r = theorems::check_liu(f, b, &CheckOptions::default()).map_err(err)?;
        ensure(
            r.verdict == Verdict::Pass,
            format!("{}:\n{r}", b.zero().equation()),
        )?;
    }
    Ok(format!("{} second-type germs", cases.len()))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("radial example", radial_values, 1),
        ("Briancon-Skoda failure for F_5", briancon_skoda_failure, 10),
        ("F_k family, k = 3..7", fk_family, 60),
        ("global bound, lambda = 2", global_bound, 5),
        ("oracle equivalence", oracle_equivalence, 120),
        ("operator form on hamiltonians", operator_form, 120),
        ("cusp resolution", cusp_resolution, 120),
        ("semi-homogeneous equality", semihomogeneous, 120),
        ("tau <= mu <= 2 tau", tau_mu_sandwich, 120),
    ];
    let mut failed = 0;
    for (i, (name, check, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > Duration::from_secs(*limit) => {
                Err(format!("{detail}; took longer than {limit} s"))
            }
            o => o,
        };
        let (mark, detail) = match &outcome {
            Ok(d) => ("PASS", d),
            Err(d) => ("FAIL", d),
        };
        println!(
            "criterion {}: {mark} {name} [{:.2?}] {detail}",
            i + 1,
            elapsed
        );
        failed += usize::from(outcome.is_err());
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
