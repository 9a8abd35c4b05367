//! Recursive primitive-PRS gcd over `Q[x, y, z]`.

use num_traits::Zero;

use super::univariate::UniPoly;
use super::{rat, Monomial, Poly, Rational};

/// Coefficients of `p` viewed as a polynomial in `var`, indexed by power.
fn coefficients_in(p: &Poly, var: usize) -> Vec<Poly> {
    let deg = p.degree_in(var).unwrap_or(0) as usize;
    let mut out = vec![Poly::zero(p.arity()); deg + 1];
    for (m, c) in p.terms() {
        let mut exps = m.exps();
        let e = exps[var] as usize;
        exps[var] = 0;
        out[e].add_term(Monomial::new(exps), c);
    }
    out
}

fn involves(p: &Poly, var: usize) -> bool {
    p.terms().any(|(m, _)| m.exp(var) > 0)
}

fn content_in(p: &Poly, var: usize) -> Poly {
    let mut g: Option<Poly> = None;
    for c in coefficients_in(p, var).into_iter().filter(|c| !c.is_zero()) {
        if c.is_constant() {
            return Poly::one(p.arity());
        }
        g = Some(match g {
            None => c.primitive(),
            Some(acc) => gcd(&acc, &c).primitive(),
        });
        if g.as_ref().is_some_and(Poly::is_constant) {
            return Poly::one(p.arity());
        }
    }
    g.unwrap_or_else(|| Poly::one(p.arity()))
}

fn primitive_part_in(p: &Poly, var: usize) -> Poly {
    let c = content_in(p, var);
    let q = if c.is_constant() {
        p.clone()
    } else {
        p.exact_div(&c).expect("content divides")
    };
    q.primitive()
}

/// Pseudo-remainder of `a` by `b` in `var`.
fn pseudo_rem(a: &Poly, b: &Poly, var: usize) -> Poly {
    let db = b.degree_in(var).unwrap_or(0);
    let lcb = coefficients_in(b, var).pop().unwrap();
    let mut r = a.clone();
    while !r.is_zero() {
        let dr = r.degree_in(var).unwrap_or(0);
        if dr < db {
            break;
        }
        let lcr = coefficients_in(&r, var).pop().unwrap();
        let mut shift = [0u32; 3];
        shift[var] = dr - db;
        let shifted = (&lcr * b).mul_term(&Monomial::new(shift), &num_traits::One::one());
        r = &(&lcb * &r) - &shifted;
    }
    r
}

/// Integer points for the other variables, tried in turn.
const SPECIALIZATIONS: [[i64; 3]; 4] = [[1, 2, 3], [-2, 5, -1], [3, -3, 7], [7, 11, -5]];

/// Image of `p` in `Q[var]` after fixing the other variables at `point`.
fn specialize(p: &Poly, var: usize, point: &[Rational]) -> UniPoly {
    UniPoly::new(
        coefficients_in(p, var)
            .iter()
            .map(|c| c.eval(point))
            .collect(),
    )
}

/// Exact certificate that `a` and `b`, both primitive in `var`, share no
/// factor. A common factor `h` involves `var` and its leading coefficient
/// divides that of `a`; at a point where the latter does not vanish,
/// `h` specializes to a non-constant common divisor.
fn certified_coprime(a: &Poly, b: &Poly, var: usize) -> bool {
    let lc = coefficients_in(a, var).pop().unwrap();
    SPECIALIZATIONS.iter().any(|values| {
        let point: Vec<Rational> = values[..a.arity()].iter().map(|&v| rat(v)).collect();
        if lc.eval(&point).is_zero() {
            return false;
        }
        let g = specialize(a, var, &point).gcd(&specialize(b, var, &point));
        g.degree() == Some(0)
    })
}

pub(super) fn gcd(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    if a.is_constant() || b.is_constant() {
        return Poly::one(a.arity());
    }
    let var = (0..a.arity())
        .rev()
        .find(|&v| involves(a, v) || involves(b, v))
        .expect("non-constant polynomial involves a variable");
    if !involves(b, var) {
        return gcd(&content_in(a, var), b);
    }
    if !involves(a, var) {
        return gcd(a, &content_in(b, var));
    }
    let g = gcd(&content_in(a, var), &content_in(b, var));
    let (mut r0, mut r1) = (primitive_part_in(a, var), primitive_part_in(b, var));
    if r0.degree_in(var) < r1.degree_in(var) {
        std::mem::swap(&mut r0, &mut r1);
    }
    if certified_coprime(&r0, &r1, var) {
        return g;
    }
    loop {
        let r = pseudo_rem(&r0, &r1, var);
        if r.is_zero() {
            break;
        }
        if !involves(&r, var) {
            // Remainder free of `var` means the primitive parts are coprime in `var`.
            r1 = Poly::one(a.arity());
            break;
        }
        r0 = r1;
        r1 = primitive_part_in(&r, var);
    }
    &g * &r1
}
