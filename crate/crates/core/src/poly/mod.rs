//! Exact multivariate polynomials over the rationals in two or three variables.
//!
//! A [`Poly`] is a sparse map from [`Monomial`] to a nonzero [`Rational`]
//! coefficient. Germs at the origin use arity 2 (`x`, `y`); projective
//! forms use arity 3 (`x`, `y`, `z`). Terms are kept in degree-then-lex
//! order, which is also the printing order (highest term first).

mod gcd;
pub mod parse;
pub mod univariate;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub use num_rational::BigRational as Rational;
pub use parse::{parse_poly, parse_poly_with, parse_rational};
pub use univariate::UniPoly;

/// Variable names by index.
pub const VARIABLES: [char; 3] = ['x', 'y', 'z'];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("syntax error at column {}: {message}", .position + 1)]
    Syntax { position: usize, message: String },
    #[error("variable `{name}` at column {} is not allowed in arity {arity}", .position + 1)]
    WrongVariable {
        position: usize,
        name: String,
        arity: usize,
    },
    #[error("unknown identifier `{name}` at column {}", .position + 1)]
    UnknownIdentifier { position: usize, name: String },
    #[error("the zero polynomial has no order")]
    ZeroPolynomial,
    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("unsupported arity {0} (only 2 and 3 are supported)")]
    UnsupportedArity(usize),
    #[error("gcd(0, 0) is undefined")]
    GcdOfZeros,
}

/// Exponent vector. Unused trailing slots are zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial([u32; 3]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0, 0, 0]);

    pub const fn new(exps: [u32; 3]) -> Self {
        Monomial(exps)
    }

    pub const fn xy(a: u32, b: u32) -> Self {
        Monomial([a, b, 0])
    }

    pub fn var(i: usize) -> Self {
        let mut e = [0; 3];
        e[i] = 1;
        Monomial(e)
    }

    #[inline]
    pub fn exps(&self) -> [u32; 3] {
        self.0
    }

    #[inline]
    pub fn exp(&self, i: usize) -> u32 {
        self.0[i]
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.0[0] + self.0[1] + self.0[2]
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial([
            self.0[0] + other.0[0],
            self.0[1] + other.0[1],
            self.0[2] + other.0[2],
        ])
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.0[0] <= other.0[0] && self.0[1] <= other.0[1] && self.0[2] <= other.0[2]
    }

    /// `other / self` when `self | other`.
    #[inline]
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if self.divides(other) {
            Some(Monomial([
                other.0[0] - self.0[0],
                other.0[1] - self.0[1],
                other.0[2] - self.0[2],
            ]))
        } else {
            None
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial([
            self.0[0].max(other.0[0]),
            self.0[1].max(other.0[1]),
            self.0[2].max(other.0[2]),
        ])
    }

    /// Index of the single variable this monomial is a pure power of.
    pub fn pure_power_var(&self) -> Option<usize> {
        let nonzero: Vec<usize> = (0..3).filter(|&i| self.0[i] > 0).collect();
        match nonzero.as_slice() {
            [i] => Some(*i),
            _ => None,
        }
    }

    /// Lexicographic comparison with `x > y > z`.
    #[inline]
    pub fn cmp_lex(&self, other: &Monomial) -> std::cmp::Ordering {
        self.0.cmp(&other.0)
    }

    pub fn to_string_with(&self, arity: usize) -> String {
        let mut parts = Vec::new();
        for (i, &e) in self.0.iter().enumerate().take(arity.max(1)) {
            match e {
                0 => {}
                1 => parts.push(VARIABLES[i].to_string()),
                _ => parts.push(format!("{}^{}", VARIABLES[i], e)),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

/// Degree first, then lexicographic with `x > y > z`.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_with(3))
    }
}

/// Integer shorthand for rationals.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

fn check_arity(arity: usize) -> Result<(), PolyError> {
    if arity == 2 || arity == 3 {
        Ok(())
    } else {
        Err(PolyError::UnsupportedArity(arity))
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    arity: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Poly {
    /// # Panics
    /// If `arity` is not 2 or 3.
    pub fn zero(arity: usize) -> Self {
        check_arity(arity).expect("arity must be 2 or 3");
        Poly {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(arity: usize) -> Self {
        Self::constant(arity, Rational::one())
    }

    pub fn constant(arity: usize, c: Rational) -> Self {
        Self::monomial(arity, Monomial::ONE, c)
    }

    pub fn var(arity: usize, i: usize) -> Self {
        assert!(i < arity, "variable index out of range");
        Self::monomial(arity, Monomial::var(i), Rational::one())
    }

    pub fn monomial(arity: usize, m: Monomial, c: Rational) -> Self {
        let mut p = Self::zero(arity);
        debug_assert!((arity..3).all(|i| m.exp(i) == 0));
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn from_terms<I>(arity: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut p = Self::zero(arity);
        for (m, c) in terms {
            p.add_term(m, &c);
        }
        p
    }

    /// Integer-coefficient constructor for tests and fixtures.
    pub fn from_int_terms(arity: usize, terms: &[(i64, [u32; 3])]) -> Self {
        Self::from_terms(
            arity,
            terms.iter().map(|(c, e)| (Monomial::new(*e), rat(*c))),
        )
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.degree() == 0)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending degree-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&Monomial::ONE)
    }

    pub fn vanishes_at_origin(&self) -> bool {
        !self.terms.contains_key(&Monomial::ONE)
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: &Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    /// Highest term under degree-lex order.
    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.exp(var)).max()
    }

    /// Minimal total degree of a term, i.e. the multiplicity at the origin.
    pub fn order(&self) -> Result<u32, PolyError> {
        self.terms
            .keys()
            .next()
            .map(Monomial::degree)
            .ok_or(PolyError::ZeroPolynomial)
    }

    pub fn homogeneous_part(&self, d: u32) -> Poly {
        Poly {
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    /// The initial form (lowest-degree homogeneous part).
    pub fn lowest_part(&self) -> Poly {
        match self.order() {
            Ok(d) => self.homogeneous_part(d),
            Err(_) => self.clone(),
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Drop all terms of total degree `>= bound`.
    pub fn truncate_below(&self, bound: u32) -> Poly {
        Poly {
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() < bound)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.arity);
        }
        Poly {
            arity: self.arity,
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.arity);
        }
        Poly {
            arity: self.arity,
            terms: self.terms.iter().map(|(n, v)| (n.mul(m), v * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Poly {
        let mut result = Poly::one(self.arity);
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Partial derivative with respect to variable index `var`.
    pub fn derivative(&self, var: usize) -> Poly {
        let mut out = Poly::zero(self.arity);
        for (m, c) in &self.terms {
            let e = m.exp(var);
            if e == 0 {
                continue;
            }
            let mut exps = m.exps();
            exps[var] -= 1;
            out.terms.insert(
                Monomial::new(exps),
                c * Rational::from_integer(BigInt::from(e)),
            );
        }
        out
    }

    /// Replace variable `i` by `images[i]`. The result has the arity of the
    /// images, so this also maps between two and three variables.
    pub fn substitute(&self, images: &[Poly]) -> Result<Poly, PolyError> {
        if images.len() != self.arity {
            return Err(PolyError::ArityMismatch {
                expected: self.arity,
                found: images.len(),
            });
        }
        let target = images[0].arity;
        if let Some(bad) = images.iter().find(|p| p.arity != target) {
            return Err(PolyError::ArityMismatch {
                expected: target,
                found: bad.arity,
            });
        }
        // Cache powers per variable.
        let mut powers: Vec<Vec<Poly>> = images
            .iter()
            .map(|p| vec![Poly::one(target), p.clone()])
            .collect();
        let mut out = Poly::zero(target);
        for (m, c) in &self.terms {
            let mut term = Poly::constant(target, c.clone());
            for (i, cache) in powers.iter_mut().enumerate() {
                let e = m.exp(i) as usize;
                while cache.len() <= e {
                    let next = &cache[cache.len() - 1] * &images[i];
                    cache.push(next);
                }
                if e > 0 {
                    term = &term * &cache[e];
                }
            }
            out = &out + &term;
        }
        Ok(out)
    }

    /// Shift the origin: `x_i -> x_i + shift[i]`.
    pub fn translate(&self, shift: &[Rational]) -> Result<Poly, PolyError> {
        if shift.len() != self.arity {
            return Err(PolyError::ArityMismatch {
                expected: self.arity,
                found: shift.len(),
            });
        }
        let images: Vec<Poly> = (0..self.arity)
            .map(|i| &Poly::var(self.arity, i) + &Poly::constant(self.arity, shift[i].clone()))
            .collect();
        self.substitute(&images)
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, v) in point.iter().enumerate().take(self.arity) {
                let e = m.exp(i);
                if e > 0 {
                    t *= num_traits::pow(v.clone(), e as usize);
                }
            }
            total += t;
        }
        total
    }

    /// Multivariate division by a single divisor under degree-lex order.
    /// The remainder is zero iff `divisor` divides `self`.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let (lm, lc) = divisor
            .leading_term()
            .map(|(m, c)| (*m, c.clone()))
            .unwrap();
        let mut quotient = Poly::zero(self.arity);
        let mut remainder = Poly::zero(self.arity);
        let mut p = self.clone();
        while let Some((m, c)) = p.leading_term().map(|(m, c)| (*m, c.clone())) {
            match lm.quotient_of(&m) {
                Some(q) => {
                    let qc = &c / &lc;
                    quotient.add_term(q, &qc);
                    p = &p - &divisor.mul_term(&q, &qc);
                }
                None => {
                    remainder.add_term(m, &c);
                    p.terms.remove(&m);
                }
            }
        }
        (quotient, remainder)
    }

    pub fn exact_div(&self, divisor: &Poly) -> Option<Poly> {
        let (q, r) = self.div_rem(divisor);
        r.is_zero().then_some(q)
    }

    pub fn is_divisible_by(&self, divisor: &Poly) -> bool {
        self.div_rem(divisor).1.is_zero()
    }

    /// Scale to integer coefficients with content 1 and a positive
    /// leading coefficient (degree-lex).
    pub fn primitive(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let mut den = BigInt::one();
        for c in self.terms.values() {
            den = den.lcm(c.denom());
        }
        let mut num = BigInt::zero();
        for c in self.terms.values() {
            let v = c.numer() * (&den / c.denom());
            num = num.gcd(&v);
        }
        let mut factor = Rational::new(den, num);
        if self.leading_term().unwrap().1.is_negative() {
            factor = -factor;
        }
        self.scale(&factor)
    }

    pub fn monic(&self) -> Poly {
        match self.leading_term() {
            Some((_, c)) => self.scale(&c.recip()),
            None => self.clone(),
        }
    }

    /// Greatest common divisor, normalized with [`Poly::primitive`].
    pub fn gcd(&self, other: &Poly) -> Result<Poly, PolyError> {
        if self.arity != other.arity {
            return Err(PolyError::ArityMismatch {
                expected: self.arity,
                found: other.arity,
            });
        }
        if self.is_zero() && other.is_zero() {
            return Err(PolyError::GcdOfZeros);
        }
        Ok(gcd::gcd(self, other).primitive())
    }

    /// No repeated irreducible factor. Characteristic zero makes this
    /// equivalent to `gcd(f, ∂f/∂x_1, ..., ∂f/∂x_n)` being a unit.
    pub fn is_squarefree(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        if self.is_constant() {
            return true;
        }
        let mut g = self.clone();
        for v in 0..self.arity {
            let d = self.derivative(v);
            if d.is_zero() {
                continue;
            }
            g = gcd::gcd(&g, &d);
            if g.is_constant() {
                return true;
            }
        }
        g.is_constant()
    }

    /// Same polynomial reinterpreted in another arity. Fails if a dropped
    /// variable occurs.
    pub fn with_arity(&self, arity: usize) -> Result<Poly, PolyError> {
        check_arity(arity)?;
        if self.terms.keys().any(|m| (arity..3).any(|i| m.exp(i) > 0)) {
            return Err(PolyError::ArityMismatch {
                expected: self.arity,
                found: arity,
            });
        }
        Ok(Poly {
            arity,
            terms: self.terms.clone(),
        })
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if negative {
                    f.write_str("-")?;
                }
            } else if negative {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let is_one = abs.is_one();
            if *m == Monomial::ONE {
                write!(f, "{abs}")?;
            } else if is_one {
                f.write_str(&m.to_string_with(self.arity))?;
            } else {
                write!(f, "{abs}*{}", m.to_string_with(self.arity))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{}]({})", self.arity, self)
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &'a Poly) -> Poly {
        debug_assert_eq!(self.arity, rhs.arity);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c);
        }
        out
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &'a Poly) -> Poly {
        debug_assert_eq!(self.arity, rhs.arity);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, &-c);
        }
        out
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &'a Poly) -> Poly {
        debug_assert_eq!(self.arity, rhs.arity);
        let mut out = Poly::zero(self.arity);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), &(c1 * c2));
            }
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            arity: self.arity,
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: &'a Poly) -> Poly {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Poly {
        parse_poly(s, 2).unwrap()
    }

    #[test]
    fn order_examples() {
        assert_eq!(p("x^2*y - x*y^2").order().unwrap(), 3);
        assert_eq!(p("1 + x").order().unwrap(), 0);
        assert_eq!(p("2*x^8*y + 4*x^2*y^4 - y^5").order().unwrap(), 5);
        assert_eq!(Poly::zero(2).order(), Err(PolyError::ZeroPolynomial));
    }

    #[test]
    fn substitute_examples() {
        // chart maps written in the original variable names
        let cusp = p("y^2 - x^3");
        let out = cusp.substitute(&[p("x"), p("x*y")]).unwrap();
        assert_eq!(out, p("x^2*y^2 - x^3"));
        let out = p("x*y").substitute(&[p("x*y"), p("y")]).unwrap();
        assert_eq!(out, p("x*y^2"));
        let out = p("x + y").substitute(&[p("x"), Poly::zero(2)]).unwrap();
        assert_eq!(out, p("x"));
    }

    #[test]
    fn substitute_rejects_wrong_image_count() {
        let err = p("x").substitute(&[p("x")]).unwrap_err();
        assert!(matches!(err, PolyError::ArityMismatch { .. }));
    }

    #[test]
    fn algebra_examples() {
        assert_eq!(p("y^2 - x^3").derivative(1), p("2*y"));
        assert_eq!(p("x^2*y - x*y^2").gcd(&p("x*y")).unwrap(), p("x*y"));
        assert!(!p("x^2*y").is_squarefree());
        assert!(p("x*y*(x-y)").is_squarefree());
        assert_eq!(
            Poly::zero(2).gcd(&Poly::zero(2)),
            Err(PolyError::GcdOfZeros)
        );
    }

    #[test]
    fn gcd_normalization() {
        let g = p("-6*x^2 + 6*y").gcd(&p("-3*x^2+3*y")).unwrap();
        assert_eq!(g, p("x^2 - y"));
        let g = p("(x-y)*(1+x)*y").gcd(&p("(x-y)*(1+x)^2")).unwrap();
        assert_eq!(g, p("(x-y)*(1+x)"));
        let g = p("x^2 + y^2").gcd(&p("x + 1")).unwrap();
        assert_eq!(g, Poly::one(2));
    }

    #[test]
    fn gcd_with_unlucky_specializations() {
        // coprime, but equal after y = 2
        assert_eq!(p("x - y").gcd(&p("x - 2")).unwrap(), Poly::one(2));
        // leading coefficient in y vanishes at x = 1
        let g = p("((x-1)*y^2 + x)*(x*y - 2)")
            .gcd(&p("(x*y - 2)*(x + y)"))
            .unwrap();
        assert_eq!(g, p("x*y - 2"));
        let q = |s: &str| parse_poly(s, 3).unwrap();
        let g = q("(x*z - y^2)*(x + z)")
            .gcd(&q("(x*z - y^2)*(y - 3*z)"))
            .unwrap();
        assert_eq!(g, q("x*z - y^2").primitive());
        assert!(!q("(x*z - y^2)^2*(x + y)").is_squarefree());
        assert!(q("x*y*z*(x + y + z)").is_squarefree());
    }

    #[test]
    fn gcd_three_variables() {
        let a = parse_poly("(x*y - z^2)*(x + y + z)", 3).unwrap();
        let b = parse_poly("(x*y - z^2)*(x - z)^2", 3).unwrap();
        assert_eq!(a.gcd(&b).unwrap(), parse_poly("x*y - z^2", 3).unwrap());
        assert!(parse_poly("x*y*z", 3).unwrap().is_squarefree());
        assert!(!parse_poly("x*y*z^2", 3).unwrap().is_squarefree());
    }

    #[test]
    fn homogeneous_parts() {
        let f = p("x^2 + y^2 + y^3");
        assert_eq!(f.lowest_part(), p("x^2 + y^2"));
        assert_eq!(f.homogeneous_part(3), p("y^3"));
        assert!(p("x*y*(x-y)").is_homogeneous());
        assert!(!f.is_homogeneous());
    }

    #[test]
    fn exact_division() {
        let f = p("x*y*(x-y)");
        assert_eq!(f.exact_div(&p("x - y")).unwrap(), p("x*y"));
        assert!(f.exact_div(&p("x + y")).is_none());
    }

    #[test]
    fn display_is_canonical() {
        assert_eq!(p("x*y*(x-y)").to_string(), "x^2*y - x*y^2");
        assert_eq!(p("-y + 1/2*x^2 - 3").to_string(), "1/2*x^2 - y - 3");
        assert_eq!(Poly::zero(2).to_string(), "0");
    }
}
