//! Truncated linear-algebra oracle for local quotient dimensions.
//!
//! Independent of the standard-basis engine: it only multiplies generators
//! by monomials and ranks the resulting coefficient matrix.

use std::collections::HashMap;

use serde::Serialize;

use super::linalg::IntEchelon;
use super::sbasis::monomials_of_degree;
use super::LocalAlgError;
use crate::poly::{Monomial, Poly};

/// `dim (polys of degree < n) / (span{m*g truncated} + m^n)`.
pub fn macaulay_dim(gens: &[Poly], n: u32) -> usize {
    assert!(n >= 1, "truncation degree must be positive");
    let arity = gens.first().map_or(2, Poly::arity);
    let mut columns: HashMap<Monomial, usize> = HashMap::new();
    for d in 0..n {
        for m in monomials_of_degree(d, arity) {
            let k = columns.len();
            columns.insert(m, k);
        }
    }
    let mut ech = IntEchelon::new();
    for g in gens {
        let g = g.truncate_below(n);
        let Ok(ord) = g.order() else { continue };
        for d in 0..(n - ord) {
            for m in monomials_of_degree(d, arity) {
                let row = g
                    .terms()
                    .map(|(t, c)| (t.mul(&m), c))
                    .filter(|(t, _)| t.degree() < n)
                    .map(|(t, c)| (columns[&t], c.clone()));
                ech.insert_rational(row);
            }
        }
    }
    columns.len() - ech.rank()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MacaulayRun {
    pub dim: usize,
    /// `(n, dim)` for every truncation degree tried.
    pub trace: Vec<(u32, usize)>,
}

/// Increase the truncation degree by 2 from `max(4, 2*maxdeg + 2)` until
/// two consecutive dimensions agree.
pub fn macaulay_stable_dim(gens: &[Poly], cap: u32) -> Result<MacaulayRun, LocalAlgError> {
    let maxdeg = gens.iter().filter_map(Poly::degree).max().unwrap_or(0);
    let mut n = (2 * maxdeg + 2).max(4);
    let mut trace: Vec<(u32, usize)> = Vec::new();
    while n <= cap {
        let d = macaulay_dim(gens, n);
        if let Some(&(_, prev)) = trace.last() {
            if prev == d {
                trace.push((n, d));
                return Ok(MacaulayRun { dim: d, trace });
            }
        }
        trace.push((n, d));
        n += 2;
    }
    Err(LocalAlgError::NotStabilized { cap, trace })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn polys(list: &[&str]) -> Vec<Poly> {
        list.iter().map(|s| parse_poly(s, 2).unwrap()).collect()
    }

    #[test]
    fn spec_examples() {
        assert_eq!(macaulay_dim(&polys(&["x", "y"]), 4), 1);
        assert_eq!(macaulay_dim(&polys(&["-3*x^2", "2*y"]), 6), 2);
        assert_eq!(macaulay_dim(&polys(&["y^2 - x^3", "y^2 + x^3"]), 8), 6);
    }

    #[test]
    fn units_are_inverted_by_truncation() {
        assert_eq!(macaulay_dim(&polys(&["x - x^2", "y"]), 6), 1);
        assert_eq!(macaulay_dim(&polys(&["1 + x"]), 5), 0);
    }

    #[test]
    fn stabilizes_or_reports() {
        let run = macaulay_stable_dim(&polys(&["x^3", "y^2"]), 64).unwrap();
        assert_eq!(run.dim, 6);
        assert_eq!(run.trace.len(), 2);
        match macaulay_stable_dim(&polys(&["x"]), 12) {
            Err(LocalAlgError::NotStabilized { cap: 12, trace }) => assert!(trace.len() >= 2),
            other => panic!("expected failure, got {other:?}"),
        }
    }
}
