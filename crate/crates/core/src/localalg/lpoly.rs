//! Term vectors sorted by a monomial order, leading term first.
//!
//! Multiplying by a monomial preserves the order, so `h - c*m*g` is a
//! linear merge. Every operation can drop terms of degree `>= bound`.

use std::cmp::Ordering;

use num_traits::{One, Zero};

use super::MonomialOrder;
use crate::poly::{Monomial, Poly, Rational};

#[derive(Clone, Debug, PartialEq)]
pub(crate) struct LPoly {
    pub(crate) terms: Vec<(Monomial, Rational)>,
}

impl LPoly {
    pub(crate) fn from_poly(p: &Poly, order: MonomialOrder) -> Self {
        let mut terms: Vec<(Monomial, Rational)> =
            p.terms().map(|(m, c)| (*m, c.clone())).collect();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        LPoly { terms }
    }

    pub(crate) fn to_poly(&self, arity: usize) -> Poly {
        Poly::from_terms(arity, self.terms.iter().cloned())
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub(crate) fn lead(&self) -> &(Monomial, Rational) {
        &self.terms[0]
    }

    pub(crate) fn lead_monomial(&self) -> Monomial {
        self.terms[0].0
    }

    /// Maximal total degree minus the degree of the leading monomial.
    pub(crate) fn ecart(&self) -> u32 {
        let top = self
            .terms
            .iter()
            .map(|(m, _)| m.degree())
            .max()
            .unwrap_or(0);
        top - self.lead_monomial().degree()
    }

    pub(crate) fn make_monic(&mut self) {
        if let Some((_, lc)) = self.terms.first() {
            if !lc.is_one() {
                let inv = lc.recip();
                for (_, c) in &mut self.terms {
                    *c *= &inv;
                }
            }
        }
    }

    pub(crate) fn truncate(&mut self, bound: Option<u32>) {
        if let Some(b) = bound {
            self.terms.retain(|(m, _)| m.degree() < b);
        }
    }

    /// `self - c * m * other`, dropping terms of degree `>= bound`.
    pub(crate) fn sub_scaled(
        &self,
        c: &Rational,
        m: &Monomial,
        other: &LPoly,
        order: MonomialOrder,
        bound: Option<u32>,
    ) -> LPoly {
        let keep = |mono: &Monomial| bound.is_none_or(|b| mono.degree() < b);
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut i = 0;
        let mut j = 0;
        let a = &self.terms;
        let b = &other.terms;
        while i < a.len() || j < b.len() {
            let bm = (j < b.len()).then(|| b[j].0.mul(m));
            let step = match (i < a.len(), &bm) {
                (true, Some(bm)) => order.cmp(&a[i].0, bm),
                (true, None) => Ordering::Greater,
                (false, _) => Ordering::Less,
            };
            match step {
                Ordering::Greater => {
                    if keep(&a[i].0) {
                        out.push(a[i].clone());
                    }
                    i += 1;
                }
                Ordering::Less => {
                    let bm = bm.unwrap();
                    if keep(&bm) {
                        out.push((bm, -(c * &b[j].1)));
                    }
                    j += 1;
                }
                Ordering::Equal => {
                    let bm = bm.unwrap();
                    let v = &a[i].1 - c * &b[j].1;
                    if !v.is_zero() && keep(&bm) {
                        out.push((bm, v));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        LPoly { terms: out }
    }

    /// Cancel the leading term of `self` against the leading term of `g`.
    pub(crate) fn reduce_lead_by(
        &self,
        g: &LPoly,
        order: MonomialOrder,
        bound: Option<u32>,
    ) -> LPoly {
        let (hm, hc) = self.lead();
        let (gm, gc) = g.lead();
        let m = gm.quotient_of(hm).expect("leading monomial divides");
        let c = hc / gc;
        self.sub_scaled(&c, &m, g, order, bound)
    }
}

/// `lcm/lt(f) * f - lcm/lt(g) * g` for monic `f`, `g`.
pub(crate) fn s_polynomial(
    f: &LPoly,
    g: &LPoly,
    order: MonomialOrder,
    bound: Option<u32>,
) -> LPoly {
    let (fm, fc) = f.lead();
    let (gm, gc) = g.lead();
    let l = fm.lcm(gm);
    let mf = fm.quotient_of(&l).unwrap();
    let mg = gm.quotient_of(&l).unwrap();
    let scaled = LPoly {
        terms: f
            .terms
            .iter()
            .map(|(m, c)| (m.mul(&mf), c / fc))
            .filter(|(m, _)| bound.is_none_or(|b| m.degree() < b))
            .collect(),
    };
    scaled.sub_scaled(&gc.recip(), &mg, g, order, bound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    #[test]
    fn local_sorting_and_ecart() {
        let p = parse_poly("x - x^2 + y^3", 2).unwrap();
        let l = LPoly::from_poly(&p, MonomialOrder::Local);
        assert_eq!(l.lead_monomial(), Monomial::xy(1, 0));
        assert_eq!(l.ecart(), 2);
        assert_eq!(l.to_poly(2), p);
    }

    #[test]
    fn s_polynomial_cancels_leads() {
        let ord = MonomialOrder::Local;
        let f = LPoly::from_poly(&parse_poly("x^2 + y^3", 2).unwrap(), ord);
        let g = LPoly::from_poly(&parse_poly("x*y + x^3", 2).unwrap(), ord);
        let s = s_polynomial(&f, &g, ord, None);
        // y*f - x*g = y^4 - x^4
        assert_eq!(s.to_poly(2), parse_poly("y^4 - x^4", 2).unwrap());
        let s = s_polynomial(&f, &g, ord, Some(4));
        assert!(s.is_zero());
    }
}
