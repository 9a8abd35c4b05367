//! Point blow-ups and reduction of singularities of foliation germs.
//!
//! Charts of the blow-up of the origin are `x = x₁, y = x₁y₁` (exceptional
//! line `{x₁ = 0}`) and `x = x₂y₂, y = y₂` (exceptional line `{y₂ = 0}`).
//! Every point of the exceptional line except the origin of the second
//! chart is visible in the first one, so reduction inspects all divisor
//! points of chart 1 and only the origin of chart 2.

use std::collections::{BTreeSet, VecDeque};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::germ::{multiplicity, FoliationGerm, GermError};
use crate::poly::{Monomial, Poly, PolyError, Rational, UniPoly};
use crate::report::{Fields, Value};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BlowupError {
    #[error(transparent)]
    Germ(#[from] GermError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("the center of the blow-up is not a singular point")]
    NotSingular,
    #[error("irrational singular point on E{component}: factor {factor} of degree {degree}")]
    IrrationalPoint {
        component: usize,
        factor: String,
        degree: usize,
    },
    #[error("the exceptional line E{0} is contained in the singular set")]
    SingularLine(usize),
    #[error("E{0} is not an exceptional line of this chart")]
    UnknownComponent(usize),
    #[error("reduction needs more than {0} blow-ups")]
    TooManyBlowups(usize),
}

pub type Result<T> = std::result::Result<T, BlowupError>;

/// Which coordinate vanishes on a divisor line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Axis {
    First,
    Second,
}

impl Axis {
    fn var(self) -> usize {
        match self {
            Axis::First => 0,
            Axis::Second => 1,
        }
    }

    /// Direction vector of the line.
    fn direction(self) -> [i64; 2] {
        match self {
            Axis::First => [0, 1],
            Axis::Second => [1, 0],
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct DivisorLine {
    pub component: usize,
    pub axis: Axis,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chart {
    pub coordinates: [String; 2],
    pub germ: FoliationGerm,
    pub lines: Vec<DivisorLine>,
    /// Labels of the blow-up centers leading to this chart.
    pub history: Vec<String>,
}

impl Chart {
    pub fn root(germ: FoliationGerm) -> Self {
        Chart {
            coordinates: ["x".into(), "y".into()],
            germ,
            lines: Vec::new(),
            history: Vec::new(),
        }
    }

    fn line(&self, axis: Axis) -> Option<DivisorLine> {
        self.lines.iter().copied().find(|l| l.axis == axis)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Blowup {
    pub chart1: Chart,
    pub chart2: Chart,
    pub multiplicity: u32,
    pub epsilon: u8,
}

fn valuation(p: &Poly, var: usize) -> Option<u32> {
    p.terms().map(|(m, _)| m.exp(var)).min()
}

fn divide_by_power(p: &Poly, var: usize, k: u32) -> Poly {
    Poly::from_terms(
        p.arity(),
        p.terms().map(|(m, c)| {
            let mut e = m.exps();
            e[var] -= k;
            (Monomial::new(e), c.clone())
        }),
    )
}

/// Divide both coefficients by the largest power of `var` dividing them.
fn strip(a: Poly, b: Poly, var: usize) -> (Poly, Poly, u32) {
    let k = [valuation(&a, var), valuation(&b, var)]
        .into_iter()
        .flatten()
        .min()
        .expect("pullback of a nonzero form is nonzero");
    (divide_by_power(&a, var, k), divide_by_power(&b, var, k), k)
}

/// `x P_ν + y Q_ν ≡ 0` for the lowest-order parts.
pub fn is_dicritical_cone(germ: &FoliationGerm) -> bool {
    let nu = multiplicity(germ);
    let x = Poly::var(2, 0);
    let y = Poly::var(2, 1);
    (&(&x * &germ.p().homogeneous_part(nu)) + &(&y * &germ.q().homogeneous_part(nu))).is_zero()
}

fn blowup_unchecked(chart: &Chart, component: usize) -> Result<Blowup> {
    let germ = &chart.germ;
    let nu = multiplicity(germ);
    let x = Poly::var(2, 0);
    let y = Poly::var(2, 1);
    let xy = &x * &y;

    let p1 = germ.p().substitute(&[x.clone(), xy.clone()])?;
    let q1 = germ.q().substitute(&[x.clone(), xy.clone()])?;
    let (a1, b1, k1) = strip(&p1 + &(&y * &q1), &x * &q1, 0);

    let p2 = germ.p().substitute(&[xy.clone(), y.clone()])?;
    let q2 = germ.q().substitute(&[xy, y.clone()])?;
    let (a2, b2, k2) = strip(&y * &p2, &(&x * &p2) + &q2, 1);

    debug_assert_eq!(k1, k2, "both charts factor the same power");
    let epsilon = (k1 - nu) as u8;
    debug_assert!(epsilon <= 1);
    debug_assert_eq!(epsilon == 1, is_dicritical_cone(germ));

    let center = format!("E{component}");
    let mut history = chart.history.clone();
    history.push(center);

    let mut lines1 = vec![DivisorLine {
        component,
        axis: Axis::First,
    }];
    lines1.extend(chart.line(Axis::Second));
    let mut lines2 = vec![DivisorLine {
        component,
        axis: Axis::Second,
    }];
    lines2.extend(chart.line(Axis::First));

    Ok(Blowup {
        chart1: Chart {
            coordinates: ["x1".into(), "y1".into()],
            germ: FoliationGerm::new(a1, b1)?,
            lines: lines1,
            history: history.clone(),
        },
        chart2: Chart {
            coordinates: ["x2".into(), "y2".into()],
            germ: FoliationGerm::new(a2, b2)?,
            lines: lines2,
            history,
        },
        multiplicity: nu,
        epsilon,
    })
}

/// Blow up the origin of `chart`; the new exceptional component gets id
/// `component`.
pub fn blowup(chart: &Chart, component: usize) -> Result<Blowup> {
    if !chart.germ.is_singular() {
        return Err(BlowupError::NotSingular);
    }
    blowup_unchecked(chart, component)
}

/// Singular points of the strict transform on the exceptional line of
/// `component`, as chart coordinates.
pub fn singular_points_on_divisor(chart: &Chart, component: usize) -> Result<Vec<[Rational; 2]>> {
    let line = chart
        .lines
        .iter()
        .find(|l| l.component == component)
        .ok_or(BlowupError::UnknownComponent(component))?;
    let fixed = line.axis.var();
    let free = 1 - fixed;
    let mut images = [Poly::var(2, 0), Poly::var(2, 1)];
    images[fixed] = Poly::zero(2);
    let restrict = |p: &Poly| -> Result<UniPoly> {
        let r = p.substitute(&images)?;
        Ok(UniPoly::from_poly(&r, free).expect("restriction is univariate"))
    };
    let g = restrict(chart.germ.p())?.gcd(&restrict(chart.germ.q())?);
    if g.is_zero() {
        return Err(BlowupError::SingularLine(component));
    }
    if g.degree() == Some(0) {
        return Ok(Vec::new());
    }
    let (roots, rest) = g.rational_roots();
    if let Some(d) = rest.degree().filter(|&d| d > 0) {
        return Err(BlowupError::IrrationalPoint {
            component,
            factor: rest.to_poly(2, free).with_names(&chart.coordinates),
            degree: d,
        });
    }
    Ok(roots
        .into_iter()
        .map(|(t, _)| {
            let mut pt = [Rational::zero(), Rational::zero()];
            pt[free] = t;
            pt
        })
        .collect())
}

trait WithNames {
    fn with_names(&self, names: &[String; 2]) -> String;
}

impl WithNames for Poly {
    fn with_names(&self, names: &[String; 2]) -> String {
        // rename x, y in the rendered polynomial
        self.to_string()
            .chars()
            .map(|c| match c {
                'x' => names[0].clone(),
                'y' => names[1].clone(),
                c => c.to_string(),
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum SingularClass {
    Regular,
    NondegenerateSimple,
    SaddleNode { tangent: bool },
    NonSimple,
}

impl SingularClass {
    pub fn is_simple(&self) -> bool {
        matches!(
            self,
            SingularClass::NondegenerateSimple | SingularClass::SaddleNode { .. }
        )
    }
}

fn serialize_rationals<S: Serializer, const N: usize>(
    v: &[Rational; N],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(ToString::to_string))
}

fn serialize_matrix<S: Serializer>(
    m: &[[Rational; 2]; 2],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(
        m.iter()
            .map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>()),
    )
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SingularRecord {
    pub label: String,
    pub chart: [String; 2],
    #[serde(serialize_with = "serialize_rationals")]
    pub point: [Rational; 2],
    pub components: Vec<usize>,
    /// Linear part of `v = −Q∂x + P∂y`.
    #[serde(serialize_with = "serialize_matrix")]
    pub linear_part: [[Rational; 2]; 2],
    pub class: SingularClass,
    pub eigen: String,
}

fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    (&n * &n == *r.numer() && &d * &d == *r.denom()).then(|| Rational::new(n, d))
}

fn linear_coeff(p: &Poly, var: usize) -> Rational {
    p.coeff(&Monomial::var(var))
}

/// Classify the singular point at the origin of `germ`. Divisor lines
/// decide whether a saddle-node is tangent.
pub fn classify(
    germ: &FoliationGerm,
    lines: &[DivisorLine],
) -> (SingularClass, [[Rational; 2]; 2], String) {
    let (p, q) = (germ.p(), germ.q());
    let m = [
        [-linear_coeff(q, 0), -linear_coeff(q, 1)],
        [linear_coeff(p, 0), linear_coeff(p, 1)],
    ];
    if !germ.is_singular() {
        return (SingularClass::Regular, m, "regular point".into());
    }
    let tr = &m[0][0] + &m[1][1];
    let det = &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0];
    if det.is_zero() {
        if tr.is_zero() {
            let what = if m.iter().flatten().all(Zero::is_zero) {
                "zero"
            } else {
                "nilpotent"
            };
            return (SingularClass::NonSimple, m, format!("{what} linear part"));
        }
        // eigenvalues 0 and tr; the kernel is the weak direction
        let tangent = lines.iter().any(|l| {
            let invariant = match l.axis {
                Axis::First => q
                    .substitute(&[Poly::zero(2), Poly::var(2, 1)])
                    .map(|r| r.is_zero()),
                Axis::Second => p
                    .substitute(&[Poly::var(2, 0), Poly::zero(2)])
                    .map(|r| r.is_zero()),
            }
            .unwrap_or(false);
            let [u, v] = l.axis.direction();
            let along_kernel = (0..2).all(|i| {
                (&m[i][0] * Rational::from_integer(u.into())
                    + &m[i][1] * Rational::from_integer(v.into()))
                .is_zero()
            });
            invariant && along_kernel
        });
        return (
            SingularClass::SaddleNode { tangent },
            m,
            format!("eigenvalues 0 and {tr}"),
        );
    }
    // ratio r of eigenvalues solves r^2 - s r + 1 = 0 with s = (tr^2 - 2 det)/det
    let s = (&tr * &tr - &det * Rational::from_integer(BigInt::from(2))) / &det;
    let disc = &s * &s - Rational::from_integer(BigInt::from(4));
    match rational_sqrt(&disc) {
        Some(root) => {
            let two = Rational::from_integer(BigInt::from(2));
            let r = (&s - &root) / &two;
            let r2 = (&s + &root) / &two;
            let positive = s.is_positive();
            let eigen = format!("eigenvalue ratio {r} (or {r2})");
            if positive {
                (SingularClass::NonSimple, m, eigen)
            } else {
                (SingularClass::NondegenerateSimple, m, eigen)
            }
        }
        None => (
            SingularClass::NondegenerateSimple,
            m,
            format!("irrational eigenvalue ratio, r + 1/r = {s}"),
        ),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlowupNode {
    pub component: usize,
    /// Label of the blown-up point.
    pub center: String,
    /// Components through the center.
    pub through: Vec<usize>,
    pub multiplicity: u32,
    pub epsilon: u8,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Component {
    pub id: usize,
    pub dicritical: bool,
    pub neighbors: Vec<usize>,
    pub valence: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReductionTree {
    pub blowups: Vec<BlowupNode>,
    pub components: Vec<Component>,
    pub leaves: Vec<SingularRecord>,
}

impl ReductionTree {
    /// Number of blow-ups `ℓ`.
    pub fn len(&self) -> usize {
        self.blowups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blowups.is_empty()
    }

    pub fn component(&self, id: usize) -> Option<&Component> {
        self.components.iter().find(|c| c.id == id)
    }

    /// Nested dump for reports.
    pub fn to_fields(&self) -> Fields {
        let blowups: Vec<Value> = self
            .blowups
            .iter()
            .map(|b| {
                Fields::new()
                    .with("component", format!("E{}", b.component))
                    .with("center", b.center.as_str())
                    .with(
                        "through",
                        b.through
                            .iter()
                            .map(|c| format!("E{c}"))
                            .collect::<Vec<_>>(),
                    )
                    .with("multiplicity", b.multiplicity)
                    .with("epsilon", b.epsilon as i64)
                    .into()
            })
            .collect();
        let components: Vec<Value> = self
            .components
            .iter()
            .map(|c| {
                Fields::new()
                    .with("id", format!("E{}", c.id))
                    .with("dicritical", c.dicritical)
                    .with("valence", c.valence)
                    .into()
            })
            .collect();
        let leaves: Vec<Value> = self
            .leaves
            .iter()
            .map(|l| {
                let class = match &l.class {
                    SingularClass::Regular => "regular".to_string(),
                    SingularClass::NondegenerateSimple => "nondegenerate-simple".to_string(),
                    SingularClass::SaddleNode { tangent } => {
                        format!("saddle-node (tangent: {tangent})")
                    }
                    SingularClass::NonSimple => "non-simple".to_string(),
                };
                Fields::new()
                    .with("point", l.label.as_str())
                    .with(
                        "on",
                        l.components
                            .iter()
                            .map(|c| format!("E{c}"))
                            .collect::<Vec<_>>(),
                    )
                    .with("class", class)
                    .with("eigen", l.eigen.as_str())
                    .into()
            })
            .collect();
        Fields::new()
            .with("blowups", blowups)
            .with("components", components)
            .with("leaves", leaves)
    }
}

struct Pending {
    chart: Chart,
    label: String,
}

fn record(chart: &Chart, label: &str, point: [Rational; 2]) -> SingularRecord {
    let (class, linear_part, eigen) = classify(&chart.germ, &chart.lines);
    SingularRecord {
        label: label.to_string(),
        chart: chart.coordinates.clone(),
        point,
        components: chart.lines.iter().map(|l| l.component).collect(),
        linear_part,
        class,
        eigen,
    }
}

fn translate_chart(chart: &Chart, point: &[Rational; 2]) -> Result<Chart> {
    if point.iter().all(Zero::is_zero) {
        return Ok(chart.clone());
    }
    let germ = FoliationGerm::new(
        chart.germ.p().translate(point)?,
        chart.germ.q().translate(point)?,
    )?;
    // only the line through the new origin survives
    let lines = chart
        .lines
        .iter()
        .copied()
        .filter(|l| point[l.axis.var()].is_zero())
        .collect();
    Ok(Chart {
        coordinates: chart.coordinates.clone(),
        germ,
        lines,
        history: chart.history.clone(),
    })
}

/// Seidenberg reduction: blow up non-simple points (and corners between two
/// dicritical components) until every singular point is simple.
pub fn reduce(germ: &FoliationGerm, max_blowups: usize) -> Result<ReductionTree> {
    let mut tree = ReductionTree {
        blowups: Vec::new(),
        components: Vec::new(),
        leaves: Vec::new(),
    };
    let mut edges: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut queue = VecDeque::new();
    let root = Chart::root(germ.clone());
    if germ.is_singular() {
        let rec = record(&root, "O", [Rational::zero(), Rational::zero()]);
        if rec.class.is_simple() {
            tree.leaves.push(rec);
        } else {
            queue.push_back(Pending {
                chart: root,
                label: "O".into(),
            });
        }
    }

    while let Some(item) = queue.pop_front() {
        if tree.blowups.len() >= max_blowups {
            return Err(BlowupError::TooManyBlowups(max_blowups));
        }
        let id = tree.blowups.len() + 1;
        let b = blowup_unchecked(&item.chart, id)?;
        let through: Vec<usize> = item.chart.lines.iter().map(|l| l.component).collect();
        for &c in &through {
            edges.insert((c.min(id), c.max(id)));
        }
        if let [a, c] = through[..] {
            edges.remove(&(a.min(c), a.max(c)));
        }
        tree.blowups.push(BlowupNode {
            component: id,
            center: item.label.clone(),
            through,
            multiplicity: b.multiplicity,
            epsilon: b.epsilon,
        });
        tree.components.push(Component {
            id,
            dicritical: b.epsilon == 1,
            neighbors: Vec::new(),
            valence: 0,
        });

        let is_dicritical =
            |c: usize, tree: &ReductionTree| tree.component(c).is_some_and(|c| c.dicritical);

        let mut candidates: Vec<(Chart, String, [Rational; 2])> = Vec::new();
        let points = singular_points_on_divisor(&b.chart1, id)?;
        let origin1 = [Rational::zero(), Rational::zero()];
        let corner1 = b.chart1.line(Axis::Second).map(|l| l.component);
        if corner1.is_some() && !points.iter().any(|p| p == &origin1) {
            candidates.push((b.chart1.clone(), format!("E{id}(0)"), origin1.clone()));
        }
        for pt in points {
            let label = format!("E{id}({})", pt[1]);
            candidates.push((translate_chart(&b.chart1, &pt)?, label, pt));
        }
        candidates.push((b.chart2.clone(), format!("E{id}(inf)"), origin1));

        for (chart, label, point) in candidates {
            let corner_of_dicriticals = chart.lines.len() == 2
                && chart
                    .lines
                    .iter()
                    .all(|l| is_dicritical(l.component, &tree));
            if corner_of_dicriticals {
                queue.push_back(Pending { chart, label });
                continue;
            }
            if !chart.germ.is_singular() {
                continue;
            }
            let rec = record(&chart, &label, point);
            if rec.class.is_simple() {
                tree.leaves.push(rec);
            } else {
                queue.push_back(Pending { chart, label });
            }
        }
    }

    for c in tree.components.iter_mut() {
        c.neighbors = edges
            .iter()
            .filter_map(|&(a, b)| match (a == c.id, b == c.id) {
                (true, _) => Some(b),
                (_, true) => Some(a),
                _ => None,
            })
            .collect();
        c.valence = c.neighbors.len();
    }
    Ok(tree)
}

/// No leaf is a tangent saddle-node.
pub fn second_type_verdict(tree: &ReductionTree) -> bool {
    !tree
        .leaves
        .iter()
        .any(|l| l.class == SingularClass::SaddleNode { tangent: true })
}

/// No leaf is a saddle-node.
pub fn generalized_curve_verdict(tree: &ReductionTree) -> bool {
    !tree
        .leaves
        .iter()
        .any(|l| matches!(l.class, SingularClass::SaddleNode { .. }))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DicriticalBudget {
    pub component: usize,
    pub valence: usize,
    /// Required coefficient sum `2 − val(D)` of a balanced divisor.
    pub budget: i64,
}

pub fn dicritical_report(tree: &ReductionTree) -> Vec<DicriticalBudget> {
    tree.components
        .iter()
        .filter(|c| c.dicritical)
        .map(|c| DicriticalBudget {
            component: c.id,
            valence: c.valence,
            budget: 2 - c.valence as i64,
        })
        .collect()
}

/// `(ν−ε−1)(ν−ε−2)/2`, zero when `ν − ε ≤ 2`.
pub fn h1_dimension(nu: u32, epsilon: u8) -> u64 {
    let n = nu as i64 - epsilon as i64 - 1;
    (n.max(0) * (n - 1).max(0) / 2) as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_poly, rat};

    fn germ(a: &str, b: &str) -> FoliationGerm {
        FoliationGerm::new(parse_poly(a, 2).unwrap(), parse_poly(b, 2).unwrap()).unwrap()
    }

    fn classify_str(a: &str, b: &str, lines: &[DivisorLine]) -> SingularClass {
        classify(&germ(a, b), lines).0
    }

    #[test]
    fn radial_blowup_is_dicritical() {
        let b = blowup(&Chart::root(germ("-y", "x")), 1).unwrap();
        assert_eq!(b.epsilon, 1);
        assert_eq!(b.chart1.germ.p().to_string(), "0");
        assert_eq!(b.chart1.germ.q().to_string(), "1");
        assert!(singular_points_on_divisor(&b.chart1, 1).unwrap().is_empty());
    }

    #[test]
    fn cusp_blowup() {
        let b = blowup(&Chart::root(germ("-3*x^2", "2*y")), 1).unwrap();
        assert_eq!(b.epsilon, 0);
        assert_eq!(
            singular_points_on_divisor(&b.chart1, 1).unwrap(),
            vec![[rat(0), rat(0)]]
        );
        assert!(!b.chart2.germ.is_singular());
    }

    #[test]
    fn node_blowup_has_two_corner_points() {
        let b = blowup(&Chart::root(germ("-2*y", "x")), 1).unwrap();
        assert_eq!(b.epsilon, 0);
        assert_eq!(
            singular_points_on_divisor(&b.chart1, 1).unwrap(),
            vec![[rat(0), rat(0)]]
        );
        assert!(b.chart2.germ.is_singular());
    }

    #[test]
    fn blowup_requires_singular_center() {
        assert_eq!(
            blowup(&Chart::root(germ("1", "x")), 1),
            Err(BlowupError::NotSingular)
        );
    }

    #[test]
    fn irrational_points_are_reported() {
        // restriction to the divisor is y1(3 - y1^2)
        let chart = Chart::root(germ("-(y^3 - 2*x^2*y)", "x^3"));
        let b = blowup(&chart, 1).unwrap();
        match singular_points_on_divisor(&b.chart1, 1) {
            Err(BlowupError::IrrationalPoint { factor, degree, .. }) => {
                assert_eq!(degree, 2);
                assert_eq!(factor, "y1^2 - 3");
            }
            other => panic!("expected irrational point, got {other:?}"),
        }
    }

    #[test]
    fn classification() {
        // v = x∂x - y∂y
        assert_eq!(
            classify_str("-y", "-x", &[]),
            SingularClass::NondegenerateSimple
        );
        // v = x∂x + 2y∂y
        assert_eq!(classify_str("2*y", "-x", &[]), SingularClass::NonSimple);
        // v = x∂x + y∂y
        assert_eq!(classify_str("y", "-x", &[]), SingularClass::NonSimple);
        // irrational ratio: v = y∂x + (x + y)∂y, eigenvalues (1 ± √5)/2
        assert_eq!(
            classify_str("x + y", "-y", &[]),
            SingularClass::NondegenerateSimple
        );
        // complex eigenvalues: rotation
        assert_eq!(
            classify_str("x", "y", &[]),
            SingularClass::NondegenerateSimple
        );
        // nilpotent
        assert_eq!(
            classify_str("x + y^2", "0*x + x^2", &[]),
            SingularClass::NonSimple
        );
        assert_eq!(classify_str("x^2", "y^2", &[]), SingularClass::NonSimple);
    }

    #[test]
    fn saddle_node_tangency() {
        let sn = ("-y*(1 + 3*x)", "x^2");
        let along_x = DivisorLine {
            component: 1,
            axis: Axis::Second,
        };
        let along_y = DivisorLine {
            component: 1,
            axis: Axis::First,
        };
        assert_eq!(
            classify_str(sn.0, sn.1, &[along_x]),
            SingularClass::SaddleNode { tangent: true }
        );
        assert_eq!(
            classify_str(sn.0, sn.1, &[along_y]),
            SingularClass::SaddleNode { tangent: false }
        );
        assert_eq!(
            classify_str(sn.0, sn.1, &[]),
            SingularClass::SaddleNode { tangent: false }
        );
    }

    #[test]
    fn reduce_radial() {
        let t = reduce(&germ("-y", "x"), 24).unwrap();
        assert_eq!(t.len(), 1);
        assert!(t.leaves.is_empty());
        assert_eq!(t.components[0].valence, 0);
        assert!(t.components[0].dicritical);
        assert_eq!(
            dicritical_report(&t),
            vec![DicriticalBudget {
                component: 1,
                valence: 0,
                budget: 2
            }]
        );
        assert!(second_type_verdict(&t) && generalized_curve_verdict(&t));
    }

    #[test]
    fn reduce_cusp() {
        let t = reduce(&germ("-3*x^2", "2*y"), 24).unwrap();
        assert_eq!(t.len(), 3);
        assert!(!t.leaves.is_empty());
        assert!(t
            .leaves
            .iter()
            .all(|l| l.class == SingularClass::NondegenerateSimple));
        assert!(dicritical_report(&t).is_empty());
        assert!(second_type_verdict(&t) && generalized_curve_verdict(&t));
    }

    #[test]
    fn reduce_resonant_node() {
        let t = reduce(&germ("-2*y", "x"), 24).unwrap();
        assert!(t.len() >= 2);
        assert!(t.leaves.iter().all(|l| l.class.is_simple()));
        for c in t.components.iter().filter(|c| c.dicritical) {
            for n in &c.neighbors {
                assert!(!t.component(*n).unwrap().dicritical);
            }
        }
    }

    #[test]
    fn simple_root_is_a_leaf() {
        let t = reduce(&germ("-y", "-x"), 24).unwrap();
        assert!(t.is_empty());
        assert_eq!(t.leaves.len(), 1);
        let t = reduce(&germ("1", "x"), 24).unwrap();
        assert!(t.is_empty() && t.leaves.is_empty());
    }

    #[test]
    fn blowup_limit() {
        assert_eq!(
            reduce(&germ("-3*x^2", "2*y"), 2),
            Err(BlowupError::TooManyBlowups(2))
        );
    }

    #[test]
    fn verdicts_on_saddle_node_leaf() {
        let mut t = reduce(&germ("-y", "-x"), 24).unwrap();
        t.leaves[0].class = SingularClass::SaddleNode { tangent: true };
        assert!(!second_type_verdict(&t) && !generalized_curve_verdict(&t));
        t.leaves[0].class = SingularClass::SaddleNode { tangent: false };
        assert!(second_type_verdict(&t) && !generalized_curve_verdict(&t));
    }

    #[test]
    fn h1_values() {
        assert_eq!(h1_dimension(1, 1), 0);
        assert_eq!(h1_dimension(3, 0), 1);
        assert_eq!(h1_dimension(2, 0), 0);
        assert_eq!(h1_dimension(5, 1), 3);
    }
}
