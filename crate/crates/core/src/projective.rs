//! Foliations of degree `d` on the projective plane, given by
//! `Ω = A dx + B dy + C dz` with `A, B, C` homogeneous of degree `d + 1`
//! and `Ax + By + Cz = 0`.
//!
//! Singular points are supplied by the caller; their completeness is
//! certified by `∑ μ_p = d² + d + 1`.

use std::fmt;

use num_traits::Zero;
use thiserror::Error;

use crate::germ::{self, BalancedEquation, CurveGerm, FoliationGerm, GermError};
use crate::localalg::{self, LocalAlgError, MonomialOrder, QuotientDim};
use crate::poly::{Poly, PolyError, Rational};
use crate::report::{CheckReport, Verdict};
use crate::theorems::{self, CheckOptions, TheoremError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProjectiveError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Germ(#[from] GermError),
    #[error(transparent)]
    LocalAlg(#[from] LocalAlgError),
    #[error(transparent)]
    Theorem(#[from] TheoremError),
    #[error("{0} must be a polynomial in x, y, z")]
    Arity(String),
    #[error("{0} is not homogeneous")]
    NotHomogeneous(String),
    #[error("A, B, C have degrees {0:?}; they must be equal and positive")]
    DegreeMismatch([Option<u32>; 3]),
    #[error("Euler identity fails: Ax + By + Cz = {0}")]
    Euler(String),
    #[error("A, B, C share the factor {0}")]
    CommonFactor(String),
    #[error("[0:0:0] is not a point")]
    ZeroPoint,
    #[error("the point {0} is listed twice")]
    DuplicatePoint(String),
    #[error("the curve has non-isolated singularities")]
    NonIsolatedCurve,
}

pub type Result<T> = std::result::Result<T, ProjectiveError>;

/// The variable set to 1 in an affine chart.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChartVar {
    X,
    Y,
    Z,
}

impl ChartVar {
    /// Images of `(x, y, z)` in the chart coordinates.
    fn images(self) -> [Poly; 3] {
        let (u, v, one) = (Poly::var(2, 0), Poly::var(2, 1), Poly::one(2));
        match self {
            ChartVar::X => [one, u, v],
            ChartVar::Y => [u, one, v],
            ChartVar::Z => [u, v, one],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ChartVar::X => "x",
            ChartVar::Y => "y",
            ChartVar::Z => "z",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectivePoint([Rational; 3]);

impl ProjectivePoint {
    pub fn new(coords: [Rational; 3]) -> Result<Self> {
        if coords.iter().all(Zero::is_zero) {
            return Err(ProjectiveError::ZeroPoint);
        }
        Ok(ProjectivePoint(coords))
    }

    pub fn coords(&self) -> &[Rational; 3] {
        &self.0
    }

    /// The chart of the last nonzero coordinate and the affine coordinates
    /// there.
    pub fn affine(&self) -> (ChartVar, [Rational; 2]) {
        let [a, b, c] = &self.0;
        if !c.is_zero() {
            (ChartVar::Z, [a / c, b / c])
        } else if !b.is_zero() {
            (ChartVar::Y, [a / b, c / b])
        } else {
            (ChartVar::X, [b / a, c / a])
        }
    }

    /// Affine coordinates in `chart`, if the point is visible there.
    pub fn affine_in(&self, chart: ChartVar) -> Option<[Rational; 2]> {
        let [a, b, c] = &self.0;
        match chart {
            ChartVar::X => (!a.is_zero()).then(|| [b / a, c / a]),
            ChartVar::Y => (!b.is_zero()).then(|| [a / b, c / b]),
            ChartVar::Z => (!c.is_zero()).then(|| [a / c, b / c]),
        }
    }

    pub fn same_as(&self, other: &ProjectivePoint) -> bool {
        let (p, q) = (&self.0, &other.0);
        (0..3).all(|i| {
            let (j, k) = ((i + 1) % 3, (i + 2) % 3);
            &p[j] * &q[k] == &p[k] * &q[j]
        })
    }

    pub fn eval(&self, f: &Poly) -> Rational {
        f.eval(&self.0)
    }
}

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}:{}:{}]", self.0[0], self.0[1], self.0[2])
    }
}

fn check_form(p: &Poly, name: &str) -> Result<()> {
    if p.arity() != 3 {
        return Err(ProjectiveError::Arity(name.to_string()));
    }
    if !p.is_homogeneous() {
        return Err(ProjectiveError::NotHomogeneous(name.to_string()));
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectiveFoliation {
    a: Poly,
    b: Poly,
    c: Poly,
    degree: u32,
}

impl ProjectiveFoliation {
    pub fn new(a: Poly, b: Poly, c: Poly) -> Result<Self> {
        for (p, name) in [(&a, "A"), (&b, "B"), (&c, "C")] {
            check_form(p, name)?;
        }
        let degs = [a.degree(), b.degree(), c.degree()];
        let common = degs.iter().flatten().copied().collect::<Vec<_>>();
        if common.is_empty() || common.iter().any(|&d| d != common[0]) || common[0] == 0 {
            return Err(ProjectiveError::DegreeMismatch(degs));
        }
        let [x, y, z] = [0, 1, 2].map(|i| Poly::var(3, i));
        let euler = &(&(&a * &x) + &(&b * &y)) + &(&c * &z);
        if !euler.is_zero() {
            return Err(ProjectiveError::Euler(euler.to_string()));
        }
        let nonzero: Vec<&Poly> = [&a, &b, &c].into_iter().filter(|p| !p.is_zero()).collect();
        let mut g = nonzero[0].clone();
        for p in &nonzero[1..] {
            g = g.gcd(p)?;
        }
        if !g.is_constant() {
            return Err(ProjectiveError::CommonFactor(g.to_string()));
        }
        Ok(ProjectiveFoliation {
            degree: common[0] - 1,
            a,
            b,
            c,
        })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn coefficients(&self) -> [&Poly; 3] {
        [&self.a, &self.b, &self.c]
    }

    /// Affine 1-form `P du + Q dv` in the chart where `chart = 1`.
    pub fn chart(&self, chart: ChartVar) -> Result<(Poly, Poly)> {
        let im = chart.images();
        let (p, q) = match chart {
            ChartVar::X => (&self.b, &self.c),
            ChartVar::Y => (&self.a, &self.c),
            ChartVar::Z => (&self.a, &self.b),
        };
        Ok((p.substitute(&im)?, q.substitute(&im)?))
    }

    /// Germ at `point`, moved to the origin of its chart.
    pub fn germ_at(&self, point: &ProjectivePoint) -> Result<FoliationGerm> {
        let (chart, shift) = point.affine();
        let (p, q) = self.chart(chart)?;
        Ok(FoliationGerm::new(
            p.translate(&shift)?,
            q.translate(&shift)?,
        )?)
    }

    /// Germ at `point` computed in a specific chart.
    pub fn germ_in(
        &self,
        point: &ProjectivePoint,
        chart: ChartVar,
    ) -> Result<Option<FoliationGerm>> {
        let Some(shift) = point.affine_in(chart) else {
            return Ok(None);
        };
        let (p, q) = self.chart(chart)?;
        Ok(Some(FoliationGerm::new(
            p.translate(&shift)?,
            q.translate(&shift)?,
        )?))
    }
}

/// Validate `Ω` and return its degree.
pub fn validate(a: Poly, b: Poly, c: Poly) -> Result<(u32, ProjectiveFoliation)> {
    let f = ProjectiveFoliation::new(a, b, c)?;
    Ok((f.degree(), f))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectiveCurve {
    f: Poly,
    degree: u32,
    reduced: bool,
}

impl ProjectiveCurve {
    pub fn new(f: Poly) -> Result<Self> {
        check_form(&f, "the curve")?;
        let degree = f.degree().ok_or(GermError::ZeroCurve)?;
        let reduced = f.is_squarefree();
        Ok(ProjectiveCurve { f, degree, reduced })
    }

    pub fn equation(&self) -> &Poly {
        &self.f
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    /// Equation of the germ at `point`, moved to the origin of its chart.
    pub fn germ_at(&self, point: &ProjectivePoint) -> Result<Poly> {
        let (chart, shift) = point.affine();
        Ok(self.f.substitute(&chart.images())?.translate(&shift)?)
    }
}

/// `Ω ∧ df` is divisible by `f`.
pub fn invariance_projective(foliation: &ProjectiveFoliation, curve: &ProjectiveCurve) -> bool {
    let f = curve.equation();
    let [fx, fy, fz] = [0, 1, 2].map(|i| f.derivative(i));
    let [a, b, c] = foliation.coefficients();
    let forms = [
        &(a * &fy) - &(b * &fx),
        &(a * &fz) - &(c * &fx),
        &(b * &fz) - &(c * &fy),
    ];
    forms.iter().all(|w| w.is_divisible_by(f))
}

fn distinct(points: &[ProjectivePoint]) -> Result<()> {
    for (i, p) in points.iter().enumerate() {
        if points[..i].iter().any(|q| q.same_as(p)) {
            return Err(ProjectiveError::DuplicatePoint(p.to_string()));
        }
    }
    Ok(())
}

fn echo_foliation(report: &mut CheckReport, foliation: &ProjectiveFoliation) {
    let [a, b, c] = foliation.coefficients();
    report.input("A", a.to_string());
    report.input("B", b.to_string());
    report.input("C", c.to_string());
}

/// `∑ μ_p = d² + d + 1` over `points`, certifying that they are all the
/// singular points.
pub fn milnor_sum_certificate(
    foliation: &ProjectiveFoliation,
    points: &[ProjectivePoint],
) -> Result<CheckReport> {
    distinct(points)?;
    let mut report = CheckReport::new("milnor-sum");
    echo_foliation(&mut report, foliation);
    report.input(
        "points",
        points.iter().map(ToString::to_string).collect::<Vec<_>>(),
    );
    let d = foliation.degree() as i64;
    let expected = d * d + d + 1;
    let mut total = 0i64;
    let mut per_point = Vec::new();
    for p in points {
        let germ = foliation.germ_at(p)?;
        if !germ.is_singular() {
            report.assert(
                &format!("{p} singular"),
                false,
                "the foliation is regular there",
            );
            per_point.push(format!("{p}: regular"));
            continue;
        }
        let mu = germ::milnor_foliation(&germ)? as i64;
        total += mu;
        per_point.push(format!("{p}: {mu}"));
    }
    report.set("d", d);
    report.set("mu per point", per_point);
    report.set("sum mu", total);
    report.set("d^2 + d + 1", expected);
    report.set("deficit", expected - total);
    report.assert(
        "sum mu = d^2 + d + 1",
        total == expected,
        format!("{total} vs {expected}"),
    );
    report.conclude();
    Ok(report)
}

/// Global Tjurina number `∑_p τ_p(C)` over all singular points of `C`,
/// including points with irrational coordinates. Computed from affine
/// quotients: chart `z = 1`, the points `[a:1:0]` as a limit over powers
/// of `z`, and the point `[1:0:0]` locally.
pub fn global_tjurina(curve: &ProjectiveCurve, cap: u32) -> Result<usize> {
    let f = curve.equation();
    let tjurina_gens = |chart: ChartVar| -> Result<Vec<Poly>> {
        let h = f.substitute(&chart.images())?;
        Ok(vec![h.derivative(0), h.derivative(1), h])
    };
    let affine = |gens: &[Poly]| -> Result<usize> {
        if gens.iter().all(Poly::is_zero) {
            return Err(ProjectiveError::NonIsolatedCurve);
        }
        match localalg::standard_basis(gens, MonomialOrder::Global)?.quotient_dim() {
            QuotientDim::Finite(n) => Ok(n),
            QuotientDim::Infinite => Err(ProjectiveError::NonIsolatedCurve),
        }
    };
    let mut total = affine(&tjurina_gens(ChartVar::Z)?)?;

    // points [a:1:0]: chart y with coordinates (x, z); add z^m until stable
    let gens = tjurina_gens(ChartVar::Y)?;
    let mut previous = None;
    let mut m = 1;
    loop {
        if m > cap {
            return Err(LocalAlgError::NotStabilized {
                cap,
                trace: Vec::new(),
            }
            .into());
        }
        let mut g = gens.clone();
        g.push(Poly::var(2, 1).pow(m));
        let dim = affine(&g)?;
        if previous == Some(dim) {
            total += dim;
            break;
        }
        previous = Some(dim);
        m += 1;
    }

    let local = localalg::local_colength(&tjurina_gens(ChartVar::X)?)?;
    total += local.finite().ok_or(ProjectiveError::NonIsolatedCurve)?;
    Ok(total)
}

fn ceil_half(a: i64) -> i64 {
    (a + 1).div_euclid(2)
}

/// The lower bounds
/// `⌈(d²+d+1 − 2∑GSV)/2⌉ ≤ ∑τ_p(C)` and
/// `⌈(d²+d+1 − 2(d+2)deg C + 2 deg C²)/2⌉ ≤ τ(C)`.
pub fn check_global_bound(
    foliation: &ProjectiveFoliation,
    curve: &ProjectiveCurve,
    points: &[ProjectivePoint],
    opts: &CheckOptions,
) -> Result<CheckReport> {
    let mut report = CheckReport::new("global-bound");
    echo_foliation(&mut report, foliation);
    report.input("curve", curve.equation().to_string());
    report.input(
        "points",
        points.iter().map(ToString::to_string).collect::<Vec<_>>(),
    );

    let certificate = milnor_sum_certificate(foliation, points)?;
    let d = foliation.degree() as i64;
    let deg = curve.degree() as i64;
    let n = d * d + d + 1;
    report.set("d", d);
    report.set("deg C", deg);
    report.set("sum mu", certificate.invariants.int("sum mu").unwrap_or(0));

    let mut hypotheses = vec![
        (
            "singular set certified",
            certificate.verdict == Verdict::Pass,
        ),
        ("C reduced", curve.is_reduced()),
        ("C invariant", invariance_projective(foliation, curve)),
    ];
    let on_curve = points.iter().all(|p| p.eval(curve.equation()).is_zero());
    hypotheses.push(("Sing(F) in C", on_curve));

    let mut gsv_sum = 0i64;
    let mut tau_sum = 0i64;
    let mut all_second_type = true;
    let mut rows = Vec::new();
    if on_curve && hypotheses[0].1 {
        for p in points {
            let germ = foliation.germ_at(p)?;
            let c = CurveGerm::new(curve.germ_at(p)?)?;
            let balanced = BalancedEquation::new(c.clone(), None)?;
            let st = theorems::second_type(&germ, &balanced, opts.mode, opts.max_blowups)
                .map(|s| s.verdict);
            let st = match st {
                Ok(v) => v,
                Err(e) => {
                    report.reason(format!("{p}: {e}"));
                    false
                }
            };
            all_second_type &= st;
            let tau_fc = germ::tjurina_foliation(&germ, &c)? as i64;
            let tau_c = germ::tjurina_curve(&c)? as i64;
            gsv_sum += tau_fc - tau_c;
            tau_sum += tau_c;
            rows.push(format!(
                "{p}: mu {}, tau(F,C) {tau_fc}, tau(C) {tau_c}, gsv {}, second type {st}",
                germ::milnor_foliation(&germ)?,
                tau_fc - tau_c
            ));
        }
        report.set("per point", rows);
    } else {
        all_second_type = false;
    }
    hypotheses.push(("every singular point of second type", all_second_type));
    let holds = hypotheses.iter().all(|h| h.1);
    for (name, ok) in &hypotheses {
        report.set(name, *ok);
    }

    let tau_global = global_tjurina(curve, opts.truncation_cap)? as i64;
    let bound1 = ceil_half(n - 2 * gsv_sum);
    let bound2 = ceil_half(n - 2 * (d + 2) * deg + 2 * deg * deg);
    let gsv_expected = (d + 2) * deg - deg * deg;
    report.set("sum gsv", gsv_sum);
    report.set("sum tau_p(C)", tau_sum);
    report.set("tau(C)", tau_global);
    report.set("bound with gsv", bound1);
    report.set("bound with deg C", bound2);
    report.set("(d+2) deg C - deg C^2", gsv_expected);

    report.claim(
        holds,
        "bound with gsv <= sum tau_p(C)",
        bound1 <= tau_sum,
        format!("{bound1} <= {tau_sum}"),
    );
    report.claim(
        holds,
        "bound with deg C <= tau(C)",
        bound2 <= tau_global,
        format!("{bound2} <= {tau_global}"),
    );
    report.claim(
        holds,
        "sum gsv = (d+2) deg C - deg C^2",
        gsv_sum == gsv_expected,
        format!("{gsv_sum} vs {gsv_expected}"),
    );
    report.claim(
        holds,
        "tau(C) = sum of local Tjurina numbers",
        tau_global == tau_sum,
        format!("{tau_global} vs {tau_sum}"),
    );
    report.reason("the germ of C at each point is taken as the zero divisor of a balanced equation (not verified)");
    if holds {
        report.conclude();
    } else {
        report.reason("hypotheses not met; values reported for observation only");
        report.verdict = Verdict::NotApplicable;
    }
    Ok(report)
}
