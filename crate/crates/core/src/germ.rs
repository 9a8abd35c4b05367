//! Foliation germs `ω = P dx + Q dy` at the origin of the plane and their
//! local invariants.
//!
//! All quotient dimensions are taken in the local ring at the origin:
//! Milnor numbers `μ`, Tjurina numbers `τ`, intersection multiplicities
//! `i(f, g) = dim k{x,y}/(f,g)`. The polar excess `Δ`, the tangency excess
//! `ξ` and the GSV index are evaluated through the identities
//!
//! ```text
//! Δ(F, B₀) = i(𝒫, B₀) + i(B₀, B∞) − μ(B₀) − ν(B₀) + 1
//! ξ(F)     = ν(F) − (ν(B₀) − ν(B∞)) + 1
//! GSV(F,C) = τ(F, C) − τ(C)
//! ```

use serde::Serialize;
use thiserror::Error;

use crate::localalg::{self, LocalAlgError, MonomialOrder, QuotientDim};
use crate::poly::{Poly, PolyError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GermError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    LocalAlg(#[from] LocalAlgError),
    #[error("germs live in two variables, got arity {0}")]
    Arity(usize),
    #[error("P and Q are both zero")]
    ZeroForm,
    #[error("P and Q share the factor {0}")]
    CommonFactor(String),
    #[error("the curve equation is zero")]
    ZeroCurve,
    #[error("the curve {0} does not pass through the origin")]
    NotThroughOrigin(String),
    #[error("{0} is not squarefree")]
    NotReduced(String),
    #[error("non-isolated singularity: {0} has an infinite-dimensional quotient")]
    NonIsolated(String),
    #[error("{0} and {1} share a component through the origin")]
    NotCoprime(String, String),
    #[error("{0} is not invariant for the foliation")]
    NotInvariant(String),
    #[error("no polar probes given")]
    NoProbes,
}

pub type Result<T> = std::result::Result<T, GermError>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FoliationGerm {
    p: Poly,
    q: Poly,
}

impl FoliationGerm {
    /// `P` and `Q` must be in two variables, not both zero, and coprime.
    pub fn new(p: Poly, q: Poly) -> Result<Self> {
        for c in [&p, &q] {
            if c.arity() != 2 {
                return Err(GermError::Arity(c.arity()));
            }
        }
        if p.is_zero() && q.is_zero() {
            return Err(GermError::ZeroForm);
        }
        let g = p.gcd(&q)?;
        if !g.is_constant() {
            return Err(GermError::CommonFactor(g.to_string()));
        }
        Ok(FoliationGerm { p, q })
    }

    /// The hamiltonian foliation `df = f_x dx + f_y dy`.
    pub fn hamiltonian(f: &Poly) -> Result<Self> {
        Self::new(f.derivative(0), f.derivative(1))
    }

    pub fn p(&self) -> &Poly {
        &self.p
    }

    pub fn q(&self) -> &Poly {
        &self.q
    }

    pub fn is_singular(&self) -> bool {
        self.p.vanishes_at_origin() && self.q.vanishes_at_origin()
    }

    /// Components `(-Q, P)` of the dual vector field.
    pub fn vector_field(&self) -> (Poly, Poly) {
        (-&self.q, self.p.clone())
    }

    pub fn generators(&self) -> Vec<Poly> {
        vec![self.p.clone(), self.q.clone()]
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveGerm {
    f: Poly,
    reduced: bool,
}

impl CurveGerm {
    pub fn new(f: Poly) -> Result<Self> {
        if f.arity() != 2 {
            return Err(GermError::Arity(f.arity()));
        }
        if f.is_zero() {
            return Err(GermError::ZeroCurve);
        }
        if !f.vanishes_at_origin() {
            return Err(GermError::NotThroughOrigin(f.to_string()));
        }
        let reduced = f.is_squarefree();
        Ok(CurveGerm { f, reduced })
    }

    pub fn new_reduced(f: Poly) -> Result<Self> {
        let c = Self::new(f)?;
        if !c.reduced {
            return Err(GermError::NotReduced(c.f.to_string()));
        }
        Ok(c)
    }

    pub fn equation(&self) -> &Poly {
        &self.f
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn multiplicity(&self) -> u32 {
        self.f.order().expect("curve equation is nonzero")
    }
}

/// `F = f/h` with zero divisor `f = 0` and optional pole divisor `h = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BalancedEquation {
    zero: CurveGerm,
    pole: Option<CurveGerm>,
}

impl BalancedEquation {
    /// Requires `f` and `h` without common component through the origin.
    pub fn new(zero: CurveGerm, pole: Option<CurveGerm>) -> Result<Self> {
        if let Some(h) = &pole {
            intersection_multiplicity(zero.equation(), h.equation())?;
        }
        Ok(BalancedEquation { zero, pole })
    }

    pub fn from_polys(f: Poly, h: Option<Poly>) -> Result<Self> {
        let pole = h.map(CurveGerm::new).transpose()?;
        Self::new(CurveGerm::new(f)?, pole)
    }

    pub fn zero(&self) -> &CurveGerm {
        &self.zero
    }

    pub fn pole(&self) -> Option<&CurveGerm> {
        self.pole.as_ref()
    }

    /// Both divisors squarefree.
    pub fn is_reduced(&self) -> bool {
        self.zero.is_reduced() && self.pole.as_ref().is_none_or(CurveGerm::is_reduced)
    }

    pub fn nu_zero(&self) -> u32 {
        self.zero.multiplicity()
    }

    pub fn nu_pole(&self) -> u32 {
        self.pole.as_ref().map_or(0, CurveGerm::multiplicity)
    }

    /// Signed multiplicity `ν(B₀) − ν(B∞)`.
    pub fn nu(&self) -> i64 {
        self.nu_zero() as i64 - self.nu_pole() as i64
    }

    /// Unweighted multiplicity of the support `ν(B₀) + ν(B∞)`.
    pub fn nu_support(&self) -> i64 {
        self.nu_zero() as i64 + self.nu_pole() as i64
    }

    /// Both divisors must be invariant for `foliation`.
    pub fn verify_for(&self, foliation: &FoliationGerm) -> Result<()> {
        if !invariance_test(foliation, &self.zero) {
            return Err(GermError::NotInvariant(self.zero.equation().to_string()));
        }
        if let Some(h) = &self.pole {
            if !invariance_test(foliation, h) {
                return Err(GermError::NotInvariant(h.equation().to_string()));
            }
        }
        Ok(())
    }
}

fn finite(dim: QuotientDim, what: impl FnOnce() -> String) -> Result<usize> {
    dim.finite().ok_or_else(|| GermError::NonIsolated(what()))
}

/// `ν(F) = min(ord P, ord Q)`.
pub fn multiplicity(f: &FoliationGerm) -> u32 {
    [f.p(), f.q()]
        .into_iter()
        .filter_map(|c| c.order().ok())
        .min()
        .expect("foliation has a nonzero coefficient")
}

/// `f` divides `P f_y − Q f_x`, i.e. `ω ∧ df = f·h dx∧dy`.
pub fn invariance_test(foliation: &FoliationGerm, curve: &CurveGerm) -> bool {
    let f = curve.equation();
    let wedge = &(foliation.p() * &f.derivative(1)) - &(foliation.q() * &f.derivative(0));
    wedge.is_divisible_by(f)
}

pub fn milnor_foliation(f: &FoliationGerm) -> Result<usize> {
    let dim = localalg::local_colength(&f.generators())?;
    finite(dim, || format!("(P, Q) = ({}, {})", f.p(), f.q()))
}

pub fn milnor_curve(c: &CurveGerm) -> Result<usize> {
    let f = c.equation();
    let dim = localalg::local_colength(&[f.derivative(0), f.derivative(1)])?;
    finite(dim, || format!("the jacobian ideal of {f}"))
}

pub fn tjurina_curve(c: &CurveGerm) -> Result<usize> {
    let f = c.equation();
    let dim = localalg::local_colength(&[f.clone(), f.derivative(0), f.derivative(1)])?;
    finite(dim, || format!("the Tjurina ideal of {f}"))
}

/// `τ(F, C) = dim k{x,y}/(f, P, Q)`.
pub fn tjurina_foliation(foliation: &FoliationGerm, c: &CurveGerm) -> Result<usize> {
    let dim = localalg::local_colength(&[
        c.equation().clone(),
        foliation.p().clone(),
        foliation.q().clone(),
    ])?;
    finite(dim, || format!("(f, P, Q) with f = {}", c.equation()))
}

/// `i(f, g) = dim k{x,y}/(f, g)`; rejects curves with a common component.
pub fn intersection_multiplicity(f: &Poly, g: &Poly) -> Result<usize> {
    for c in [f, g] {
        if c.arity() != 2 {
            return Err(GermError::Arity(c.arity()));
        }
        if c.is_zero() {
            return Err(GermError::ZeroCurve);
        }
        if !c.vanishes_at_origin() {
            return Err(GermError::NotThroughOrigin(c.to_string()));
        }
    }
    let dim =
        localalg::standard_basis(&[f.clone(), g.clone()], MonomialOrder::Local)?.quotient_dim();
    dim.finite()
        .ok_or_else(|| GermError::NotCoprime(f.to_string(), g.to_string()))
}

/// A point `(a : b)` of the projective line.
pub type Probe = (i64, i64);

/// The fixed probe sequence `(1:1), (1:2), (2:1), (1:3), (3:1), (2:3), (3:2), ...`
/// (coprime pairs ordered by their larger entry).
pub fn default_probes(count: usize) -> Vec<Probe> {
    let mut out = vec![(1, 1)];
    let mut m = 2i64;
    while out.len() < count {
        for j in 1..m {
            if num_integer::gcd(j, m) == 1 {
                out.push((j, m));
                out.push((m, j));
            }
        }
        m += 1;
    }
    out.truncate(count);
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProbeRow {
    pub probe: Probe,
    pub polar: String,
    /// Multiplicity of the polar, `None` when `aP + bQ` vanishes.
    pub order: Option<u32>,
    /// Intersection numbers with each reference curve; `None` = infinite.
    pub intersections: Vec<Option<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolarChoice {
    pub probe: Probe,
    pub polar: CurveGerm,
    pub table: Vec<ProbeRow>,
    /// The minimal row was attained by at least two probes.
    pub certified: bool,
}

impl PolarChoice {
    /// Intersection numbers of the chosen polar with the reference curves.
    pub fn intersections(&self) -> Vec<usize> {
        let row = self
            .table
            .iter()
            .find(|r| r.probe == self.probe)
            .expect("chosen probe is tabulated");
        row.intersections
            .iter()
            .map(|v| v.expect("finite"))
            .collect()
    }
}

/// Evaluate `aP + bQ` for each probe and choose one attaining the minimal
/// multiplicity and intersection numbers with `references` (generic values
/// are minimal). Probes giving an infinite value are never chosen.
pub fn generic_polar(
    foliation: &FoliationGerm,
    probes: &[Probe],
    references: &[&Poly],
) -> Result<PolarChoice> {
    if probes.is_empty() {
        return Err(GermError::NoProbes);
    }
    let mut table = Vec::with_capacity(probes.len());
    for &(a, b) in probes {
        let polar =
            &foliation.p().scale(&crate::poly::rat(a)) + &foliation.q().scale(&crate::poly::rat(b));
        let order = polar.order().ok();
        let intersections = references
            .iter()
            .map(|r| {
                if polar.is_zero() {
                    None
                } else {
                    intersection_multiplicity(&polar, r).ok()
                }
            })
            .collect();
        table.push(ProbeRow {
            probe: (a, b),
            polar: polar.to_string(),
            order,
            intersections,
        });
    }
    let key = |row: &ProbeRow| -> Option<(u32, Vec<usize>)> {
        let order = row.order?;
        let values: Option<Vec<usize>> = row.intersections.iter().copied().collect();
        Some((order, values?))
    };
    let best = table
        .iter()
        .filter_map(|r| key(r).map(|k| (k, r.probe)))
        .min_by(|a, b| a.0.cmp(&b.0))
        .ok_or(GermError::NotCoprime(
            "every probed polar".into(),
            "a reference curve".into(),
        ))?;
    let attained = table
        .iter()
        .filter(|r| key(r).as_ref() == Some(&best.0))
        .count();
    let (a, b) = best.1;
    let polar =
        &foliation.p().scale(&crate::poly::rat(a)) + &foliation.q().scale(&crate::poly::rat(b));
    Ok(PolarChoice {
        probe: best.1,
        polar: CurveGerm::new(polar)?,
        table,
        certified: attained >= 2,
    })
}

/// `Δ(F, B₀) = i(𝒫, B₀) + i(B₀, B∞) − μ(B₀) − ν(B₀) + 1`.
pub fn excess_polar(
    _foliation: &FoliationGerm,
    balanced: &BalancedEquation,
    polar: &CurveGerm,
) -> Result<i64> {
    let f = balanced.zero();
    let i_polar = intersection_multiplicity(polar.equation(), f.equation())? as i64;
    let i_zero_pole = match balanced.pole() {
        Some(h) => intersection_multiplicity(f.equation(), h.equation())? as i64,
        None => 0,
    };
    let mu = milnor_curve(f)? as i64;
    Ok(i_polar + i_zero_pole - mu - f.multiplicity() as i64 + 1)
}

/// `ξ = ν(F) − ν(B) + 1` with `ν(B) = ν(B₀) − ν(B∞)`.
pub fn tangency_excess(foliation: &FoliationGerm, balanced: &BalancedEquation) -> Result<i64> {
    balanced.verify_for(foliation)?;
    Ok(multiplicity(foliation) as i64 - balanced.nu() + 1)
}

/// `GSV(F, C) = τ(F, C) − τ(C)`.
pub fn gsv_index(foliation: &FoliationGerm, c: &CurveGerm) -> Result<i64> {
    Ok(tjurina_foliation(foliation, c)? as i64 - tjurina_curve(c)? as i64)
}

/// The initial form of `f` is squarefree, i.e. defines an isolated
/// singularity as a binary form.
pub fn is_semihomogeneous(c: &CurveGerm) -> bool {
    c.equation().lowest_part().is_squarefree()
}
