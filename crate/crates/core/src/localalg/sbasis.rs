//! Standard bases by the tangent cone algorithm.
//!
//! Reduction uses Mora's weak normal form: among the reducers whose
//! leading monomial divides the current leading monomial, the one of
//! minimal ecart is chosen (first in the list on ties), and the current
//! polynomial is appended to the reducer set whenever the chosen reducer
//! has larger ecart. Pairs are processed by minimal lcm degree.
//!
//! Once the leading ideal contains every monomial of some degree `D`
//! (the staircase closes), `m^D` lies in the ideal. From then on all terms
//! of degree `>= D` are discarded, the computation lives in the finite
//! algebra `k[x, y]/m^D`, and ordinary lead reduction terminates without
//! a unit factor.

use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use super::lpoly::{s_polynomial, LPoly};
use super::{LocalAlgError, MonomialOrder};
use crate::poly::{Monomial, Poly, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum QuotientDim {
    Finite(usize),
    Infinite,
}

impl QuotientDim {
    pub fn finite(self) -> Option<usize> {
        match self {
            QuotientDim::Finite(n) => Some(n),
            QuotientDim::Infinite => None,
        }
    }
}

impl fmt::Display for QuotientDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuotientDim::Finite(n) => write!(f, "{n}"),
            QuotientDim::Infinite => f.write_str("infinite"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct StandardBasis {
    arity: usize,
    order: MonomialOrder,
    elements: Vec<LPoly>,
    /// Minimal generators of the leading ideal, including the degree-`D`
    /// monomials once the staircase has closed.
    leading: Vec<Monomial>,
    noether: Option<u32>,
    quotient_basis: Option<Vec<Monomial>>,
}

impl StandardBasis {
    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    /// Basis elements. After the staircase closes these are truncated below
    /// [`StandardBasis::noether_bound`] and the monomials of that degree are
    /// implicit members.
    pub fn generators(&self) -> Vec<Poly> {
        self.elements
            .iter()
            .map(|g| g.to_poly(self.arity))
            .collect()
    }

    pub fn leading_ideal(&self) -> &[Monomial] {
        &self.leading
    }

    /// Every monomial of at least this degree lies in the ideal.
    pub fn noether_bound(&self) -> Option<u32> {
        self.noether
    }

    /// Monomials outside the leading ideal, largest first; `None` when
    /// there are infinitely many.
    pub fn quotient_basis(&self) -> Option<&[Monomial]> {
        self.quotient_basis.as_deref()
    }

    pub fn quotient_dim(&self) -> QuotientDim {
        match &self.quotient_basis {
            Some(b) => QuotientDim::Finite(b.len()),
            None => QuotientDim::Infinite,
        }
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.leading.contains(&Monomial::ONE)
    }

    /// Normal form of `p`. It is zero iff `p` lies in the ideal.
    ///
    /// For finite quotients the result is the unique representative
    /// supported on the quotient basis. Otherwise it is Mora's weak normal
    /// form, which represents `u*p` for some unit `u`.
    pub fn normal_form(&self, p: &Poly) -> Poly {
        assert_eq!(p.arity(), self.arity, "arity mismatch");
        let h = LPoly::from_poly(p, self.order);
        let out = if self.quotient_basis.is_some() {
            full_reduce(h, &self.elements, self.order, self.noether)
        } else {
            weak_normal_form(h, &self.elements, self.order, self.noether)
        };
        out.to_poly(self.arity)
    }

    pub fn contains(&self, p: &Poly) -> bool {
        self.normal_form(p).is_zero()
    }

    /// Coordinates of the class of `p` in the quotient basis.
    pub fn coordinates(&self, p: &Poly) -> Result<Vec<Rational>, LocalAlgError> {
        let basis = self
            .quotient_basis
            .as_ref()
            .ok_or(LocalAlgError::InfiniteQuotient)?;
        let nf = self.normal_form(p);
        Ok(basis.iter().map(|m| nf.coeff(m)).collect())
    }
}

fn validate(gens: &[Poly]) -> Result<usize, LocalAlgError> {
    let first = gens.first().ok_or(LocalAlgError::NoGenerators)?;
    let arity = first.arity();
    if let Some(bad) = gens.iter().find(|g| g.arity() != arity) {
        return Err(LocalAlgError::ArityMismatch {
            expected: arity,
            found: bad.arity(),
        });
    }
    if gens.iter().all(Poly::is_zero) {
        return Err(LocalAlgError::AllZero);
    }
    Ok(arity)
}

/// Compute a standard basis of the ideal generated by `gens`.
pub fn standard_basis(gens: &[Poly], order: MonomialOrder) -> Result<StandardBasis, LocalAlgError> {
    let arity = validate(gens)?;
    let mut engine = Engine {
        arity,
        order,
        elements: Vec::new(),
        alive: Vec::new(),
        pairs: Vec::new(),
        noether: None,
    };
    for g in gens.iter().filter(|g| !g.is_zero()) {
        let mut l = LPoly::from_poly(g, order);
        l.make_monic();
        engine.insert(l);
        if engine.is_unit() {
            break;
        }
    }
    engine.run();
    Ok(engine.finish())
}

struct Engine {
    arity: usize,
    order: MonomialOrder,
    elements: Vec<LPoly>,
    alive: Vec<bool>,
    pairs: Vec<(usize, usize, u32)>,
    noether: Option<u32>,
}

impl Engine {
    fn is_unit(&self) -> bool {
        self.live().any(|g| g.lead_monomial() == Monomial::ONE)
    }

    fn live(&self) -> impl Iterator<Item = &LPoly> {
        self.elements
            .iter()
            .zip(&self.alive)
            .filter(|(_, a)| **a)
            .map(|(g, _)| g)
    }

    fn live_vec(&self) -> Vec<LPoly> {
        self.live().cloned().collect()
    }

    fn insert(&mut self, mut h: LPoly) {
        h.truncate(self.noether);
        if h.is_zero() {
            return;
        }
        h.make_monic();
        let idx = self.elements.len();
        let hm = h.lead_monomial();
        for (k, g) in self.elements.iter().enumerate() {
            if self.alive[k] {
                let deg = g.lead_monomial().lcm(&hm).degree();
                self.pairs.push((k, idx, deg));
            }
        }
        self.elements.push(h);
        self.alive.push(true);
        self.update_noether();
    }

    fn update_noether(&mut self) {
        if !self.order.is_local() {
            return;
        }
        let leads: Vec<Monomial> = self.live().map(LPoly::lead_monomial).collect();
        let Some(staircase) = staircase(&leads, self.arity) else {
            return;
        };
        let bound = staircase.iter().map(|m| m.degree() + 1).max().unwrap_or(0);
        if self.noether.is_some_and(|d| d <= bound) {
            return;
        }
        self.noether = Some(bound);
        for (g, alive) in self.elements.iter_mut().zip(self.alive.iter_mut()) {
            if !*alive {
                continue;
            }
            g.truncate(Some(bound));
            if g.is_zero() {
                *alive = false;
            }
        }
    }

    fn pop_pair(&mut self) -> Option<(usize, usize)> {
        loop {
            let best = self
                .pairs
                .iter()
                .enumerate()
                .min_by_key(|(_, (i, j, d))| (*d, *j, *i))
                .map(|(k, _)| k)?;
            let (i, j, _) = self.pairs.swap_remove(best);
            if self.alive[i] && self.alive[j] {
                return Some((i, j));
            }
        }
    }

    fn run(&mut self) {
        while let Some((i, j)) = self.pop_pair() {
            if self.is_unit() {
                break;
            }
            let s = s_polynomial(
                &self.elements[i],
                &self.elements[j],
                self.order,
                self.noether,
            );
            if s.is_zero() {
                continue;
            }
            let reducers = self.live_vec();
            let h = weak_normal_form(s, &reducers, self.order, self.noether);
            if !h.is_zero() {
                self.insert(h);
            }
        }
    }

    fn finish(self) -> StandardBasis {
        let order = self.order;
        let noether = self.noether;
        let arity = self.arity;
        let mut elements: Vec<LPoly> = self.live().cloned().collect();
        let unit = elements.iter().any(|g| g.lead_monomial() == Monomial::ONE);
        if unit {
            elements = vec![LPoly::from_poly(&Poly::one(arity), order)];
        }
        let mut leads: Vec<Monomial> = elements.iter().map(LPoly::lead_monomial).collect();
        if let (Some(d), false) = (noether, unit) {
            leads.extend(monomials_of_degree(d, arity));
        }
        let leading = minimize(leads, order);
        let quotient_basis = staircase(&leading, arity).map(|mut s| {
            s.sort_by(|a, b| order.cmp(b, a));
            s
        });
        StandardBasis {
            arity,
            order,
            elements,
            leading,
            noether: if unit { None } else { noether },
            quotient_basis,
        }
    }
}

/// Mora's weak normal form. With a Noether bound the reducer set never
/// needs to grow, because truncation makes the order well-founded.
pub(crate) fn weak_normal_form(
    mut h: LPoly,
    reducers: &[LPoly],
    order: MonomialOrder,
    noether: Option<u32>,
) -> LPoly {
    h.truncate(noether);
    let mut extra: Vec<LPoly> = Vec::new();
    loop {
        if h.is_zero() {
            return h;
        }
        let hm = h.lead_monomial();
        let pick = reducers
            .iter()
            .chain(extra.iter())
            .filter(|g| g.lead_monomial().divides(&hm))
            .min_by_key(|g| g.ecart());
        let Some(g) = pick else {
            return h;
        };
        let g = g.clone();
        if noether.is_none() && g.ecart() > h.ecart() {
            extra.push(h.clone());
        }
        h = h.reduce_lead_by(&g, order, noether);
    }
}

/// Reduce every term. Only terminates for well-founded situations: a
/// global order, or a local order with a Noether bound.
pub(crate) fn full_reduce(
    mut h: LPoly,
    reducers: &[LPoly],
    order: MonomialOrder,
    noether: Option<u32>,
) -> LPoly {
    h.truncate(noether);
    let mut out: Vec<(Monomial, Rational)> = Vec::new();
    while !h.is_zero() {
        let hm = h.lead_monomial();
        let pick = reducers
            .iter()
            .filter(|g| g.lead_monomial().divides(&hm))
            .min_by_key(|g| g.ecart());
        match pick {
            Some(g) => h = h.reduce_lead_by(g, order, noether),
            None => {
                let t = h.terms.remove(0);
                if !t.1.is_zero() {
                    out.push(t);
                }
            }
        }
    }
    LPoly { terms: out }
}

pub(crate) fn monomials_of_degree(d: u32, arity: usize) -> Vec<Monomial> {
    let mut out = Vec::new();
    match arity {
        2 => {
            for a in 0..=d {
                out.push(Monomial::xy(a, d - a));
            }
        }
        _ => {
            for a in 0..=d {
                for b in 0..=(d - a) {
                    out.push(Monomial::new([a, b, d - a - b]));
                }
            }
        }
    }
    out
}

/// Minimal generators, sorted largest first.
fn minimize(mut leads: Vec<Monomial>, order: MonomialOrder) -> Vec<Monomial> {
    leads.sort();
    leads.dedup();
    let mut out: Vec<Monomial> = Vec::new();
    for m in &leads {
        if !leads.iter().any(|n| n != m && n.divides(m)) {
            out.push(*m);
        }
    }
    out.sort_by(|a, b| order.cmp(b, a));
    out
}

/// Monomials outside the monomial ideal generated by `leads`, or `None`
/// when there are infinitely many.
pub(crate) fn staircase(leads: &[Monomial], arity: usize) -> Option<Vec<Monomial>> {
    let mut bounds = [1u32; 3];
    for (v, bound) in bounds.iter_mut().enumerate().take(arity) {
        *bound = leads
            .iter()
            .filter(|m| m.degree() == 0 || m.pure_power_var() == Some(v))
            .map(|m| m.exp(v))
            .min()?;
    }
    let mut out = Vec::new();
    for a in 0..bounds[0] {
        for b in 0..bounds[1] {
            for c in 0..bounds[2] {
                let m = Monomial::new([a, b, c]);
                if !leads.iter().any(|l| l.divides(&m)) {
                    out.push(m);
                }
            }
        }
    }
    Some(out)
}

/// Convenience wrapper mirroring the method.
pub fn normal_form(p: &Poly, sb: &StandardBasis) -> Poly {
    sb.normal_form(p)
}

pub fn quotient_dim(sb: &StandardBasis) -> QuotientDim {
    sb.quotient_dim()
}

/// `dim k{x,y}/(gens)` under the local order.
pub fn local_colength(gens: &[Poly]) -> Result<QuotientDim, LocalAlgError> {
    Ok(standard_basis(gens, MonomialOrder::Local)?.quotient_dim())
}

impl Zero for QuotientDim {
    fn zero() -> Self {
        QuotientDim::Finite(0)
    }
    fn is_zero(&self) -> bool {
        *self == QuotientDim::Finite(0)
    }
}

impl std::ops::Add for QuotientDim {
    type Output = QuotientDim;
    fn add(self, rhs: Self) -> Self {
        match (self, rhs) {
            (QuotientDim::Finite(a), QuotientDim::Finite(b)) => QuotientDim::Finite(a + b),
            _ => QuotientDim::Infinite,
        }
    }
}
