//! Executable checks of the local inequalities relating Milnor and Tjurina
//! numbers of foliations with a balanced equation of separatrices.
//!
//! Every check recomputes its ingredients with the exact engine and
//! records them in a [`CheckReport`]. Statements that only hold for
//! foliations of second type are asserted on such inputs and merely
//! observed on the others.

use serde::Serialize;
use thiserror::Error;

use crate::blowup::{self, BlowupError, ReductionTree};
use crate::germ::{self, BalancedEquation, FoliationGerm, GermError};
use crate::localalg::{
    self, linalg, LocalAlgError, MonomialOrder, QuotientOperator, StandardBasis,
};
use crate::poly::Poly;
use crate::report::{CheckReport, Verdict};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TheoremError {
    #[error(transparent)]
    Germ(#[from] GermError),
    #[error(transparent)]
    LocalAlg(#[from] LocalAlgError),
    #[error(transparent)]
    Blowup(#[from] BlowupError),
}

pub type Result<T> = std::result::Result<T, TheoremError>;

/// How the second-type property is decided.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SecondTypeMode {
    /// `ν(F) = ν(B₀) − ν(B∞) − 1`.
    #[default]
    Criterion,
    /// No tangent saddle-node in the reduction of singularities.
    Reduction,
    /// Both, which must agree.
    Both,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOptions {
    pub mode: SecondTypeMode,
    pub max_blowups: usize,
    pub probes: usize,
    pub truncation_cap: u32,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            mode: SecondTypeMode::Criterion,
            max_blowups: 24,
            probes: 7,
            truncation_cap: 64,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SecondType {
    pub criterion: bool,
    /// `None` when the reduction was not attempted or aborted.
    pub reduction: Option<bool>,
    pub generalized_curve: Option<bool>,
    pub tree: Option<ReductionTree>,
    pub verdict: bool,
    pub warnings: Vec<String>,
}

/// Decide the second-type property according to `mode`. In mode `Both` an
/// aborted reduction falls back to the criterion with a warning.
pub fn second_type(
    foliation: &FoliationGerm,
    balanced: &BalancedEquation,
    mode: SecondTypeMode,
    max_blowups: usize,
) -> Result<SecondType> {
    balanced.verify_for(foliation)?;
    let criterion = germ::tangency_excess(foliation, balanced)? == 0;
    let mut out = SecondType {
        criterion,
        reduction: None,
        generalized_curve: None,
        tree: None,
        verdict: criterion,
        warnings: Vec::new(),
    };
    if mode == SecondTypeMode::Criterion {
        return Ok(out);
    }
    match blowup::reduce(foliation, max_blowups) {
        Ok(tree) => {
            let st = blowup::second_type_verdict(&tree);
            out.reduction = Some(st);
            out.generalized_curve = Some(blowup::generalized_curve_verdict(&tree));
            out.tree = Some(tree);
            if mode == SecondTypeMode::Reduction {
                out.verdict = st;
            } else if st != criterion {
                out.warnings.push(format!(
                    "criterion says {criterion} but the reduction says {st}"
                ));
                out.verdict = criterion && st;
            }
        }
        Err(e) if mode == SecondTypeMode::Both => {
            out.warnings.push(format!(
                "reduction aborted ({e}); using the multiplicity criterion"
            ));
        }
        Err(e) => return Err(e.into()),
    }
    Ok(out)
}

impl CheckReport {
    /// Assert when `applicable`, otherwise record the observation only.
    pub(crate) fn claim(&mut self, applicable: bool, name: &str, holds: bool, detail: String) {
        if applicable {
            self.assert(name, holds, detail);
        } else {
            self.set(name, holds);
        }
    }
}

fn echo_inputs(
    report: &mut CheckReport,
    foliation: &FoliationGerm,
    balanced: Option<&BalancedEquation>,
) {
    report.input("P", foliation.p().to_string());
    report.input("Q", foliation.q().to_string());
    if let Some(b) = balanced {
        report.input("zero", b.zero().equation().to_string());
        if let Some(h) = b.pole() {
            report.input("pole", h.equation().to_string());
        }
    }
}

fn record_second_type(report: &mut CheckReport, st: &SecondType) {
    report.set("second_type_criterion", st.criterion);
    if let Some(r) = st.reduction {
        report.set("second_type_reduction", r);
    }
    if let Some(gc) = st.generalized_curve {
        report.set("generalized_curve", gc);
    }
    report.set("second_type", st.verdict);
    for w in &st.warnings {
        report.reason(w.clone());
    }
}

struct MilnorAlgebra {
    sb: StandardBasis,
    mu: usize,
    sigma: QuotientOperator,
    tau: usize,
}

fn milnor_algebra(foliation: &FoliationGerm, balanced: &BalancedEquation) -> Result<MilnorAlgebra> {
    let sb = localalg::standard_basis(&foliation.generators(), MonomialOrder::Local)?;
    let mu = sb
        .quotient_dim()
        .finite()
        .ok_or(LocalAlgError::InfiniteQuotient)?;
    let sigma = localalg::mult_operator(&sb, balanced.zero().equation())?;
    let tau = germ::tjurina_foliation(foliation, balanced.zero())?;
    Ok(MilnorAlgebra { sb, mu, sigma, tau })
}

/// `f² ∈ (P, Q)`, checked as membership, as `σ² = 0` and through the rank
/// identity `dim (f)/(f²) = μ − τ`.
pub fn check_briancon_skoda(
    foliation: &FoliationGerm,
    balanced: &BalancedEquation,
    opts: &CheckOptions,
) -> Result<CheckReport> {
    let mut report = CheckReport::new("briancon-skoda");
    echo_inputs(&mut report, foliation, Some(balanced));
    let st = second_type(foliation, balanced, opts.mode, opts.max_blowups)?;
    record_second_type(&mut report, &st);
    let applicable = st.verdict && balanced.is_reduced();

    let alg = milnor_algebra(foliation, balanced)?;
    let f = balanced.zero().equation();
    let remainder = alg.sb.normal_form(&f.pow(2));
    let sigma2 = alg.sigma.compose(&alg.sigma);
    let rank = alg.sigma.rank();
    let rank2 = sigma2.rank();
    let (mu, tau) = (alg.mu as i64, alg.tau as i64);

    report.set("nu", germ::multiplicity(foliation));
    report.set("mu", alg.mu);
    report.set("tau", alg.tau);
    report.set("f^2 mod (P,Q)", remainder.to_string());
    report.set("rank sigma", rank);
    report.set("rank sigma^2", rank2);

    report.assert(
        "f^2 in (P,Q)",
        remainder.is_zero(),
        format!("normal form of f^2 is {remainder}"),
    );
    report.assert(
        "sigma^2 = 0",
        sigma2.is_zero(),
        format!("rank sigma^2 = {rank2}"),
    );
    report.assert(
        "dim (f)/(f^2) = mu - tau",
        rank as i64 - rank2 as i64 == mu - tau,
        format!("{rank} - {rank2} vs {mu} - {tau}"),
    );
    // holds for every foliation since dim Ker σ = τ
    report.assert(
        "rank sigma = mu - tau",
        rank as i64 == mu - tau,
        format!("{rank} vs {}", mu - tau),
    );
    report.set("hypotheses met", applicable);
    if !balanced.is_reduced() {
        report.reason("the balanced equation is not reduced; conclusion not guaranteed");
    }
    if !st.verdict {
        report.reason("not of second type; conclusion not guaranteed");
    }
    report.conclude();
    Ok(report)
}

/// `dim Ker σ = τ(F, B₀)`.
pub fn check_kernel_identity(
    foliation: &FoliationGerm,
    balanced: &BalancedEquation,
) -> Result<CheckReport> {
    let mut report = CheckReport::new("kernel-identity");
    echo_inputs(&mut report, foliation, Some(balanced));
    let alg = milnor_algebra(foliation, balanced)?;
    let (kernel, rank) = localalg::kernel_rank(&alg.sigma);
    report.set("mu", alg.mu);
    report.set("tau", alg.tau);
    report.set("dim ker sigma", kernel);
    report.set("rank sigma", rank);
    report.assert(
        "dim ker sigma = tau",
        kernel == alg.tau,
        format!("{kernel} vs {}", alg.tau),
    );
    report.conclude();
    Ok(report)
}

/// `τ ≤ μ ≤ 2τ`, with `μ = 2τ` exactly when `Ker σ = (f̄)`.
pub fn check_liu(
    foliation: &FoliationGerm,
    balanced: &BalancedEquation,
    opts: &CheckOptions,
) -> Result<CheckReport> {
    let mut report = CheckReport::new("liu");
    echo_inputs(&mut report, foliation, Some(balanced));
    let st = second_type(foliation, balanced, opts.mode, opts.max_blowups)?;
    record_second_type(&mut report, &st);
    let applicable = st.verdict;

    let alg = milnor_algebra(foliation, balanced)?;
    let kernel = alg.sigma.kernel();
    let image = alg.sigma.image();
    let ker_is_image = linalg::same_span(&kernel, &image);
    let (mu, tau) = (alg.mu, alg.tau);
    report.set("mu", mu);
    report.set("tau", tau);
    report.set("dim ker sigma", kernel.len());
    report.set("rank sigma", alg.sigma.rank());
    report.set("ker sigma = (f)", ker_is_image);

    report.claim(applicable, "tau <= mu", tau <= mu, format!("{tau} <= {mu}"));
    report.claim(
        applicable,
        "mu <= 2 tau",
        mu <= 2 * tau,
        format!("{mu} <= {}", 2 * tau),
    );
    report.claim(
        applicable,
        "mu = 2 tau iff ker sigma = (f)",
        (mu == 2 * tau) == ker_is_image,
        format!(
            "mu = 2 tau: {}, ker sigma = (f): {ker_is_image}",
            mu == 2 * tau
        ),
    );
    if applicable {
        report.conclude();
    } else {
        report.reason("not of second type; values reported for observation only");
        report.verdict = Verdict::NotApplicable;
    }
    Ok(report)
}

/// The sandwich
/// `(ν(B₀)−1)² + ν(B∞) − i(𝒫,B∞) − i(B₀,B∞) ≤ μ(F) ≤ 2τ(F,B₀)`.
pub fn check_cota(
    foliation: &FoliationGerm,
    balanced: &BalancedEquation,
    opts: &CheckOptions,
) -> Result<CheckReport> {
    let mut report = CheckReport::new("cota");
    echo_inputs(&mut report, foliation, Some(balanced));
    // the reduction is also needed for the generalized-curve flag
    let mode = match opts.mode {
        SecondTypeMode::Criterion => SecondTypeMode::Both,
        m => m,
    };
    let mut st = second_type(foliation, balanced, mode, opts.max_blowups)?;
    if opts.mode == SecondTypeMode::Criterion {
        st.verdict = st.criterion;
    }
    record_second_type(&mut report, &st);
    let applicable = st.verdict;

    let f = balanced.zero();
    let h = balanced.pole();
    let mut refs: Vec<&Poly> = vec![f.equation()];
    if let Some(h) = h {
        refs.push(h.equation());
    }
    let polar = germ::generic_polar(foliation, &germ::default_probes(opts.probes), &refs)?;
    let polar_i = polar.intersections();
    let i_polar_zero = polar_i[0] as i64;
    let i_polar_pole = polar_i.get(1).copied().unwrap_or(0) as i64;
    let i_zero_pole = match h {
        Some(h) => germ::intersection_multiplicity(f.equation(), h.equation())? as i64,
        None => 0,
    };
    let nu_f = germ::multiplicity(foliation) as i64;
    let nu0 = balanced.nu_zero() as i64;
    let nu_inf = balanced.nu_pole() as i64;
    let mu = germ::milnor_foliation(foliation)? as i64;
    let tau = germ::tjurina_foliation(foliation, f)? as i64;
    let mu_f = germ::milnor_curve(f)? as i64;
    let delta = germ::excess_polar(foliation, balanced, &polar.polar)?;
    let xi = germ::tangency_excess(foliation, balanced)?;
    let semihomogeneous = germ::is_semihomogeneous(f);
    let lhs = (nu0 - 1).pow(2) + nu_inf - i_polar_pole - i_zero_pole;

    report.set("nu(F)", nu_f);
    report.set("nu(B0)", nu0);
    report.set("nu(Binf)", nu_inf);
    report.set("nu(B) signed", balanced.nu());
    report.set("nu(B) support", balanced.nu_support());
    report.set(
        "polar probe",
        format!("({}:{})", polar.probe.0, polar.probe.1),
    );
    report.set("polar certified", polar.certified);
    report.set("i(polar,B0)", i_polar_zero);
    report.set("i(polar,Binf)", i_polar_pole);
    report.set("i(B0,Binf)", i_zero_pole);
    report.set("mu(B0)", mu_f);
    report.set("mu", mu);
    report.set("tau", tau);
    report.set("delta", delta);
    report.set("xi", xi);
    report.set("semihomogeneous B0", semihomogeneous);
    report.set("lhs", lhs);
    report.set("equality (*)", lhs == mu);
    report.set("nu^2 <= 2 tau", nu_f * nu_f <= 2 * tau);
    if !polar.certified {
        report.reason("the generic polar was attained by a single probe only");
    }

    report.claim(applicable, "lhs <= mu", lhs <= mu, format!("{lhs} <= {mu}"));
    report.claim(
        applicable,
        "mu <= 2 tau",
        mu <= 2 * tau,
        format!("{mu} <= {}", 2 * tau),
    );
    if h.is_none() {
        report.claim(
            applicable,
            "nu(F)^2 <= mu",
            nu_f * nu_f <= mu,
            format!("{} <= {mu}", nu_f * nu_f),
        );
    }
    report.claim(
        applicable,
        "delta >= 0",
        delta >= 0,
        format!("delta = {delta}"),
    );
    report.claim(
        applicable,
        "i(polar,B0) = i(polar,Binf) + mu + nu(F)",
        i_polar_zero == i_polar_pole + mu + nu_f,
        format!("{i_polar_zero} vs {i_polar_pole} + {mu} + {nu_f}"),
    );
    if let Some(gc) = st.generalized_curve {
        report.claim(
            applicable,
            "delta = 0 iff generalized curve",
            (delta == 0) == gc,
            format!("delta = {delta}, generalized curve: {gc}"),
        );
        if gc && semihomogeneous {
            report.claim(
                applicable,
                "equality (*)",
                lhs == mu,
                format!("{lhs} = {mu} for a generalized curve with semi-homogeneous B0"),
            );
        }
    } else {
        report.reason("generalized-curve status unknown; equality (*) not checked");
    }
    if applicable {
        report.conclude();
    } else {
        report.reason("not of second type; values reported for observation only");
        report.verdict = Verdict::NotApplicable;
    }
    Ok(report)
}

/// Second type through `ν(F) = ν(B₀) − ν(B∞) − 1`, through the
/// reduction, or both.
pub fn check_second_type(
    foliation: &FoliationGerm,
    balanced: &BalancedEquation,
    opts: &CheckOptions,
) -> Result<CheckReport> {
    let mut report = CheckReport::new("second-type");
    echo_inputs(&mut report, foliation, Some(balanced));
    report.input("mode", format!("{:?}", opts.mode).to_lowercase());
    let st = second_type(foliation, balanced, opts.mode, opts.max_blowups)?;
    report.set("nu(F)", germ::multiplicity(foliation));
    report.set("nu(B0)", balanced.nu_zero());
    report.set("nu(Binf)", balanced.nu_pole());
    report.set("nu(B) signed", balanced.nu());
    report.set("nu(B) support", balanced.nu_support());
    report.set("xi", germ::tangency_excess(foliation, balanced)?);
    record_second_type(&mut report, &st);
    if let Some(tree) = &st.tree {
        report.set("blowups", tree.len());
        let budgets: Vec<String> = blowup::dicritical_report(tree)
            .iter()
            .map(|d| {
                format!(
                    "E{}: valence {}, budget {}",
                    d.component, d.valence, d.budget
                )
            })
            .collect();
        report.set("dicritical budgets", budgets);
        report.set("reduction", tree.to_fields());
    }
    if let (Some(r), SecondTypeMode::Both) = (st.reduction, opts.mode) {
        report.assert(
            "routes agree",
            r == st.criterion,
            format!("criterion {}, reduction {r}", st.criterion),
        );
    }
    report.assert(
        "second type",
        st.verdict,
        format!("xi = {}", report.invariants.int("xi").unwrap_or(0)),
    );
    report.conclude();
    Ok(report)
}

/// Local invariants of `F` (and of `B` when given), with the Milnor number
/// cross-checked against the truncation oracle.
pub fn invariants(
    foliation: &FoliationGerm,
    balanced: Option<&BalancedEquation>,
    opts: &CheckOptions,
) -> Result<CheckReport> {
    let mut report = CheckReport::new("invariants");
    echo_inputs(&mut report, foliation, balanced);
    let mu = germ::milnor_foliation(foliation)?;
    report.set("nu(F)", germ::multiplicity(foliation));
    report.set("mu", mu);
    match localalg::macaulay_stable_dim(&foliation.generators(), opts.truncation_cap) {
        Ok(run) => {
            report.set("mu (truncation)", run.dim);
            report.assert(
                "standard basis agrees with truncation",
                run.dim == mu,
                format!(
                    "{mu} vs {} at degree {}",
                    run.dim,
                    run.trace.last().map_or(0, |t| t.0)
                ),
            );
        }
        Err(e) => report.reason(format!("truncation oracle: {e}")),
    }
    if let Some(b) = balanced {
        let f = b.zero();
        let mut refs: Vec<&Poly> = vec![f.equation()];
        if let Some(h) = b.pole() {
            refs.push(h.equation());
        }
        report.set("nu(B0)", b.nu_zero());
        report.set("nu(Binf)", b.nu_pole());
        report.set("nu(B) signed", b.nu());
        report.set("nu(B) support", b.nu_support());
        report.set("mu(B0)", germ::milnor_curve(f)?);
        report.set("tau(B0)", germ::tjurina_curve(f)?);
        report.set("tau(F,B0)", germ::tjurina_foliation(foliation, f)?);
        if let Some(h) = b.pole() {
            report.set(
                "i(B0,Binf)",
                germ::intersection_multiplicity(f.equation(), h.equation())?,
            );
        }
        let polar = germ::generic_polar(foliation, &germ::default_probes(opts.probes), &refs)?;
        let rows: Vec<String> = polar
            .table
            .iter()
            .map(|r| {
                let values: Vec<String> = r
                    .intersections
                    .iter()
                    .map(|v| v.map_or("inf".into(), |v| v.to_string()))
                    .collect();
                format!(
                    "({}:{}) order {} i = [{}]",
                    r.probe.0,
                    r.probe.1,
                    r.order.map_or("inf".into(), |o| o.to_string()),
                    values.join(", ")
                )
            })
            .collect();
        report.set("polar probes", rows);
        report.set(
            "polar probe",
            format!("({}:{})", polar.probe.0, polar.probe.1),
        );
        report.set("polar certified", polar.certified);
        let i = polar.intersections();
        report.set("i(polar,B0)", i[0]);
        if i.len() > 1 {
            report.set("i(polar,Binf)", i[1]);
        }
        report.set("delta", germ::excess_polar(foliation, b, &polar.polar)?);
        report.set("gsv(F,B0)", germ::gsv_index(foliation, f)?);
        report.set("semihomogeneous B0", germ::is_semihomogeneous(f));
        report.set("reduced B", b.is_reduced());
        match b.verify_for(foliation) {
            Ok(()) => report.set("xi", germ::tangency_excess(foliation, b)?),
            Err(e) => report.reason(format!("{e}; tangency excess skipped")),
        }
    }
    report.conclude();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn p(s: &str) -> Poly {
        parse_poly(s, 2).unwrap()
    }

    fn germ(a: &str, b: &str) -> FoliationGerm {
        FoliationGerm::new(p(a), p(b)).unwrap()
    }

    fn balanced(f: &str, h: Option<&str>) -> BalancedEquation {
        BalancedEquation::from_polys(p(f), h.map(p)).unwrap()
    }

    fn radial() -> (FoliationGerm, BalancedEquation) {
        (germ("-y", "x"), balanced("x*y*(x-y)", Some("x+y")))
    }

    fn cusp() -> (FoliationGerm, BalancedEquation) {
        (germ("-3*x^2", "2*y"), balanced("y^2 - x^3", None))
    }

    fn fk(k: u32) -> (FoliationGerm, BalancedEquation) {
        (
            germ(
                &format!("y*(2*x^{} + 4*x^2*y^{} - y^{})", 2 * k - 2, k - 2, k - 1),
                &format!("x*(y^{} - 2*x^2*y^{} - x^{})", k - 1, k - 2, 2 * k - 2),
            ),
            balanced("x*y", None),
        )
    }

    fn both() -> CheckOptions {
        CheckOptions {
            mode: SecondTypeMode::Both,
            ..Default::default()
        }
    }

    #[test]
    fn briancon_skoda_examples() {
        let (f, b) = radial();
        let r = check_briancon_skoda(&f, &b, &both()).unwrap();
        assert_eq!(r.verdict, Verdict::Pass, "{r}");
        let (f, b) = cusp();
        assert_eq!(
            check_briancon_skoda(&f, &b, &both()).unwrap().verdict,
            Verdict::Pass
        );
        let (f, b) = fk(5);
        let r = check_briancon_skoda(&f, &b, &CheckOptions::default()).unwrap();
        assert_eq!(r.assertion("f^2 in (P,Q)"), Some(false));
        assert_eq!(r.invariants.bool("second_type"), Some(false));
        assert_eq!(r.verdict, Verdict::Fail);
    }

    #[test]
    fn kernel_identity_examples() {
        for (f, b) in [radial(), cusp(), fk(4)] {
            assert_eq!(
                check_kernel_identity(&f, &b).unwrap().verdict,
                Verdict::Pass
            );
        }
        let h = p("x^3 + y^4 + x*y^3");
        let f = FoliationGerm::hamiltonian(&h).unwrap();
        let b = BalancedEquation::from_polys(h, None).unwrap();
        assert_eq!(
            check_kernel_identity(&f, &b).unwrap().verdict,
            Verdict::Pass
        );
    }

    #[test]
    fn liu_examples() {
        let (f, b) = radial();
        let r = check_liu(&f, &b, &both()).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        assert_eq!(
            (r.invariants.int("tau"), r.invariants.int("mu")),
            (Some(1), Some(1))
        );
        let (f, b) = cusp();
        let r = check_liu(&f, &b, &both()).unwrap();
        assert_eq!(
            (r.invariants.int("tau"), r.invariants.int("mu")),
            (Some(2), Some(2))
        );
        assert_eq!(r.verdict, Verdict::Pass);
        let (f, b) = fk(6);
        let r = check_liu(&f, &b, &CheckOptions::default()).unwrap();
        assert_eq!(r.verdict, Verdict::NotApplicable);
    }

    #[test]
    fn cota_radial() {
        let (f, b) = radial();
        let r = check_cota(&f, &b, &CheckOptions::default()).unwrap();
        assert_eq!(r.verdict, Verdict::Pass, "{r}");
        let inv = &r.invariants;
        assert_eq!(inv.int("nu(B0)"), Some(3));
        assert_eq!(inv.int("nu(Binf)"), Some(1));
        assert_eq!(inv.int("i(polar,Binf)"), Some(1));
        assert_eq!(inv.int("tau"), Some(1));
        assert_eq!(inv.int("i(B0,Binf)"), Some(3));
        assert_eq!(inv.int("mu"), Some(1));
        assert_eq!(inv.int("lhs"), Some(1));
        assert_eq!(inv.bool("equality (*)"), Some(true));
        assert_eq!(r.assertion("equality (*)"), Some(true));
    }

    #[test]
    fn cota_cusp() {
        let (f, b) = cusp();
        let r = check_cota(&f, &b, &CheckOptions::default()).unwrap();
        assert_eq!(r.verdict, Verdict::Pass, "{r}");
        assert_eq!(r.invariants.int("lhs"), Some(1));
        assert_eq!(r.assertion("nu(F)^2 <= mu"), Some(true));
        assert_eq!(r.invariants.int("delta"), Some(0));
    }

    #[test]
    fn cota_on_fk_is_observational() {
        for k in 3..=7 {
            let (f, b) = fk(k);
            let r = check_cota(&f, &b, &CheckOptions::default()).unwrap();
            assert_eq!(r.verdict, Verdict::NotApplicable);
            assert_eq!(r.invariants.int("tau"), Some(3 * k as i64 - 2));
            assert_eq!(r.invariants.bool("nu^2 <= 2 tau"), Some(k <= 5));
        }
    }

    #[test]
    fn second_type_routes() {
        let (f, b) = radial();
        let r = check_second_type(&f, &b, &both()).unwrap();
        assert_eq!(r.verdict, Verdict::Pass, "{r}");
        assert_eq!(r.assertion("routes agree"), Some(true));
        let (f, b) = cusp();
        assert_eq!(
            check_second_type(&f, &b, &both()).unwrap().verdict,
            Verdict::Pass
        );
        let (f, b) = fk(5);
        let r = check_second_type(&f, &b, &CheckOptions::default()).unwrap();
        assert_eq!(r.verdict, Verdict::Fail);
        assert_eq!(r.invariants.int("xi"), Some(4));
        let r = check_second_type(&f, &b, &both()).unwrap();
        assert_eq!(r.invariants.bool("second_type_reduction"), Some(false));
        assert_eq!(r.assertion("routes agree"), Some(true));
    }

    #[test]
    fn invariants_cross_check_oracle() {
        let (f, b) = radial();
        let r = invariants(&f, Some(&b), &CheckOptions::default()).unwrap();
        assert_eq!(r.verdict, Verdict::Pass, "{r}");
        assert_eq!(r.invariants.int("delta"), Some(0));
        assert_eq!(r.invariants.int("xi"), Some(0));
        let (f, _) = fk(5);
        let r = invariants(&f, None, &CheckOptions::default()).unwrap();
        assert_eq!(r.invariants.int("mu"), Some(45));
        assert_eq!(r.verdict, Verdict::Pass);
    }
}
