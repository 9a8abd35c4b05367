use serde::Serialize;

use super::linalg::{self, Matrix};
use super::{LocalAlgError, StandardBasis};
use crate::poly::{Monomial, Poly, Rational};

/// Multiplication by a fixed class on a finite quotient `k{x,y}/I`.
///
/// Entry `(i, j)` is the coefficient of `basis[i]` in the normal form of
/// `basis[j] * f`, so columns are images of basis vectors.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct QuotientOperator {
    #[serde(serialize_with = "serialize_monomials")]
    pub basis: Vec<Monomial>,
    #[serde(serialize_with = "serialize_matrix")]
    pub matrix: Matrix,
}

fn serialize_monomials<S: serde::Serializer>(b: &[Monomial], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(b.iter().map(|m| m.to_string_with(2)))
}

fn serialize_matrix<S: serde::Serializer>(m: &Matrix, s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(
        m.iter()
            .map(|row| row.iter().map(|v| v.to_string()).collect::<Vec<_>>()),
    )
}

impl QuotientOperator {
    pub fn size(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        linalg::is_zero_matrix(&self.matrix)
    }

    pub fn compose(&self, other: &QuotientOperator) -> QuotientOperator {
        assert_eq!(self.basis, other.basis, "operators on different quotients");
        QuotientOperator {
            basis: self.basis.clone(),
            matrix: linalg::mat_mul(&self.matrix, &other.matrix),
        }
    }

    pub fn rank(&self) -> usize {
        linalg::rank(&self.matrix)
    }

    /// Basis of the kernel.
    pub fn kernel(&self) -> Vec<Vec<Rational>> {
        linalg::nullspace(&self.matrix)
    }

    /// Spanning set of the image (the columns).
    pub fn image(&self) -> Vec<Vec<Rational>> {
        linalg::columns(&self.matrix)
    }
}

pub fn mult_operator(sb: &StandardBasis, f: &Poly) -> Result<QuotientOperator, LocalAlgError> {
    let basis = sb
        .quotient_basis()
        .ok_or(LocalAlgError::InfiniteQuotient)?
        .to_vec();
    let n = basis.len();
    let mut matrix = vec![vec![Rational::default(); n]; n];
    for (j, m) in basis.iter().enumerate() {
        let product = f.mul_term(m, &num_traits::One::one());
        let coords = sb.coordinates(&product)?;
        for (i, c) in coords.into_iter().enumerate() {
            matrix[i][j] = c;
        }
    }
    Ok(QuotientOperator { basis, matrix })
}

/// `(kernel dimension, rank)`.
pub fn kernel_rank(op: &QuotientOperator) -> (usize, usize) {
    let r = op.rank();
    (op.size() - r, r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::localalg::{standard_basis, MonomialOrder};
    use crate::poly::{parse_poly, rat};

    fn sb(list: &[&str]) -> StandardBasis {
        let g: Vec<Poly> = list.iter().map(|s| parse_poly(s, 2).unwrap()).collect();
        standard_basis(&g, MonomialOrder::Local).unwrap()
    }

    #[test]
    fn cusp_curve_acts_by_zero() {
        let op = mult_operator(
            &sb(&["-3*x^2", "2*y"]),
            &parse_poly("y^2 - x^3", 2).unwrap(),
        )
        .unwrap();
        assert_eq!(op.size(), 2);
        assert!(op.is_zero());
        assert_eq!(kernel_rank(&op), (2, 0));
    }

    #[test]
    fn radial_is_one_dimensional() {
        let op = mult_operator(&sb(&["-y", "x"]), &parse_poly("x*y*(x-y)", 2).unwrap()).unwrap();
        assert_eq!(op.size(), 1);
        assert!(op.is_zero());
    }

    #[test]
    fn shift_by_y() {
        let op = mult_operator(&sb(&["x", "y^3"]), &parse_poly("y", 2).unwrap()).unwrap();
        assert_eq!(
            op.basis,
            vec![Monomial::ONE, Monomial::xy(0, 1), Monomial::xy(0, 2)]
        );
        let expected = vec![
            vec![rat(0), rat(0), rat(0)],
            vec![rat(1), rat(0), rat(0)],
            vec![rat(0), rat(1), rat(0)],
        ];
        assert_eq!(op.matrix, expected);
        assert_eq!(kernel_rank(&op), (1, 2));
        assert!(!op.compose(&op).is_zero());
        assert!(op.compose(&op).compose(&op).is_zero());
    }

    #[test]
    fn identity_operator() {
        let op = mult_operator(&sb(&["x^2", "y^2"]), &parse_poly("1", 2).unwrap()).unwrap();
        assert_eq!(kernel_rank(&op), (0, 4));
    }

    #[test]
    fn rejects_infinite_quotient() {
        assert!(matches!(
            mult_operator(&sb(&["x"]), &parse_poly("y", 2).unwrap()),
            Err(LocalAlgError::InfiniteQuotient)
        ));
    }
}
