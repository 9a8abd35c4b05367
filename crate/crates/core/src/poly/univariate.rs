//! Univariate polynomials over Q, used to locate points on exceptional lines.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{Monomial, Poly, Rational};

/// Dense coefficients, lowest degree first, no trailing zeros.
#[derive(Clone, PartialEq, Eq)]
pub struct UniPoly(Vec<Rational>);

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly(coeffs)
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|&c| Rational::from_integer(c.into()))
                .collect(),
        )
    }

    /// Restrict a polynomial that only involves variable `var`.
    pub fn from_poly(p: &Poly, var: usize) -> Option<Self> {
        let mut coeffs = Vec::new();
        for (m, c) in p.terms() {
            if (0..3).any(|i| i != var && m.exp(i) > 0) {
                return None;
            }
            let e = m.exp(var) as usize;
            if coeffs.len() <= e {
                coeffs.resize(e + 1, Rational::zero());
            }
            coeffs[e] = c.clone();
        }
        Some(Self::new(coeffs))
    }

    pub fn to_poly(&self, arity: usize, var: usize) -> Poly {
        Poly::from_terms(
            arity,
            self.0.iter().enumerate().map(|(e, c)| {
                let mut exps = [0u32; 3];
                exps[var] = e as u32;
                (Monomial::new(exps), c.clone())
            }),
        )
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        self.0
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * t + c)
    }

    pub fn monic(&self) -> Self {
        match self.0.last() {
            Some(lc) => UniPoly(self.0.iter().map(|c| c / lc).collect()),
            None => self.clone(),
        }
    }

    pub fn div_rem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let dd = d.0.len() - 1;
        let lc = d.0[dd].clone();
        let mut r = self.0.clone();
        if r.len() <= dd {
            return (UniPoly(vec![]), self.clone());
        }
        let mut q = vec![Rational::zero(); r.len() - dd];
        for k in (dd..r.len()).rev() {
            let c = &r[k] / &lc;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.0.iter().enumerate() {
                let idx = k - dd + j;
                r[idx] = &r[idx] - &c * dc;
            }
            q[k - dd] = c;
        }
        (UniPoly::new(q), UniPoly::new(r))
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Integer coefficients with content 1.
    fn integer_coeffs(&self) -> Vec<BigInt> {
        let den = self
            .0
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .0
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        ints.into_iter().map(|c| c / &g).collect()
    }

    /// All rational roots with multiplicity, plus the cofactor that has no
    /// rational root (monic, constant 1 when the polynomial splits).
    pub fn rational_roots(&self) -> (Vec<(Rational, usize)>, UniPoly) {
        assert!(!self.is_zero(), "roots of the zero polynomial");
        let mut rest = self.monic();
        let mut roots = Vec::new();
        // root at zero
        let zeros = rest.0.iter().take_while(|c| c.is_zero()).count();
        if zeros > 0 {
            roots.push((Rational::zero(), zeros));
            rest = UniPoly(rest.0[zeros..].to_vec());
        }
        let mut candidates = Vec::new();
        if rest.degree().unwrap_or(0) > 0 {
            let ints = rest.integer_coeffs();
            let a0 = ints[0].abs();
            let an = ints[ints.len() - 1].abs();
            let ps = divisors(&a0);
            let qs = divisors(&an);
            for p in &ps {
                for q in &qs {
                    if p.gcd(q).is_one() {
                        let r = Rational::new(p.clone(), q.clone());
                        candidates.push(-r.clone());
                        candidates.push(r);
                    }
                }
            }
            candidates.sort();
        }
        for r in candidates {
            let lin = UniPoly(vec![-r.clone(), Rational::one()]);
            let mut mult = 0;
            loop {
                if rest.degree().unwrap_or(0) == 0 {
                    break;
                }
                let (q, rem) = rest.div_rem(&lin);
                if !rem.is_zero() {
                    break;
                }
                rest = q;
                mult += 1;
            }
            if mult > 0 {
                roots.push((r, mult));
            }
        }
        roots.sort_by(|a, b| a.0.cmp(&b.0));
        (roots, rest.monic())
    }
}

/// Positive divisors of a nonzero integer by trial division.
fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    if n.is_zero() {
        return vec![BigInt::one()];
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    if let Some(v) = n.to_u64() {
        let mut d = 1u64;
        while d * d <= v {
            if v % d == 0 {
                small.push(BigInt::from(d));
                if d * d != v {
                    large.push(BigInt::from(v / d));
                }
            }
            d += 1;
        }
    } else {
        let mut d = BigInt::one();
        while &d * &d <= n {
            if (&n % &d).is_zero() {
                small.push(d.clone());
                if &d * &d != n {
                    large.push(&n / &d);
                }
            }
            d += 1;
        }
    }
    large.reverse();
    small.extend(large);
    small
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_poly(2, 0))
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{rat, ratio};

    #[test]
    fn roots_with_multiplicity() {
        // (t - 1)^2 (2t + 3) t
        let p = UniPoly::from_ints(&[0, 3, -4, -1, 2]);
        let (roots, rest) = p.rational_roots();
        assert_eq!(roots, vec![(ratio(-3, 2), 1), (rat(0), 1), (rat(1), 2)]);
        assert_eq!(rest, UniPoly::from_ints(&[1]));
    }

    #[test]
    fn irrational_residue() {
        // (t^2 - 2)(t - 3)
        let p = UniPoly::from_ints(&[6, -2, -3, 1]);
        let (roots, rest) = p.rational_roots();
        assert_eq!(roots, vec![(rat(3), 1)]);
        assert_eq!(rest, UniPoly::from_ints(&[-2, 0, 1]));
    }

    #[test]
    fn gcd_is_monic() {
        let a = UniPoly::from_ints(&[-2, 0, 2]); // 2(t-1)(t+1)
        let b = UniPoly::from_ints(&[3, -3]); // -3(t-1)
        assert_eq!(a.gcd(&b), UniPoly::from_ints(&[-1, 1]));
    }
}
