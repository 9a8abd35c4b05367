//! Exact linear algebra over Q.
//!
//! Ranks use fraction-free elimination: rows are scaled to primitive
//! integer vectors and combined by cross-multiplication, then divided by
//! their content, so no rational arithmetic happens in the inner loop.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::poly::Rational;

/// Dense rational matrix, row-major.
pub type Matrix = Vec<Vec<Rational>>;

type SparseRow = Vec<(usize, BigInt)>;

/// Incremental row echelon form over Z with primitive rows.
#[derive(Default, Debug, Clone)]
pub struct IntEchelon {
    pivots: BTreeMap<usize, SparseRow>,
}

impl IntEchelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Insert a row given as `(column, value)` pairs in any order. Returns
    /// `true` if the row was independent of the rows inserted so far.
    pub fn insert_rational(&mut self, row: impl IntoIterator<Item = (usize, Rational)>) -> bool {
        let mut entries: Vec<(usize, Rational)> =
            row.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        entries.sort_by_key(|(c, _)| *c);
        let den = entries
            .iter()
            .fold(BigInt::one(), |acc, (_, v)| acc.lcm(v.denom()));
        let ints: SparseRow = entries
            .into_iter()
            .map(|(c, v)| (c, v.numer() * (&den / v.denom())))
            .collect();
        self.insert_int(ints)
    }

    pub fn insert_int(&mut self, mut row: SparseRow) -> bool {
        row.retain(|(_, v)| !v.is_zero());
        make_primitive(&mut row);
        while let Some(&(lead_col, _)) = row.first() {
            match self.pivots.get(&lead_col) {
                None => {
                    self.pivots.insert(lead_col, row);
                    return true;
                }
                Some(pivot) => {
                    row = eliminate(&row, pivot);
                    make_primitive(&mut row);
                }
            }
        }
        false
    }
}

/// `p_lead * row - r_lead * pivot`; both share the same leading column.
fn eliminate(row: &SparseRow, pivot: &SparseRow) -> SparseRow {
    let a = &pivot[0].1;
    let b = &row[0].1;
    let g = a.gcd(b);
    let a = a / &g;
    let b = b / &g;
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (1, 1);
    while i < row.len() || j < pivot.len() {
        let ci = row.get(i).map(|e| e.0);
        let cj = pivot.get(j).map(|e| e.0);
        match (ci, cj) {
            (Some(x), Some(y)) if x == y => {
                let v = &a * &row[i].1 - &b * &pivot[j].1;
                if !v.is_zero() {
                    out.push((x, v));
                }
                i += 1;
                j += 1;
            }
            (Some(x), Some(y)) if x < y => {
                out.push((x, &a * &row[i].1));
                i += 1;
            }
            (Some(x), None) => {
                out.push((x, &a * &row[i].1));
                i += 1;
            }
            (_, Some(y)) => {
                out.push((y, -(&b * &pivot[j].1)));
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

fn make_primitive(row: &mut SparseRow) {
    let g = row.iter().fold(BigInt::zero(), |acc, (_, v)| acc.gcd(v));
    if g.is_zero() {
        return;
    }
    let flip = row.first().is_some_and(|(_, v)| v.is_negative());
    if !g.is_one() || flip {
        let g = if flip { -g } else { g };
        for (_, v) in row.iter_mut() {
            *v = &*v / &g;
        }
    }
}

/// Rank by fraction-free elimination.
pub fn rank(m: &Matrix) -> usize {
    let mut ech = IntEchelon::new();
    for row in m {
        ech.insert_rational(row.iter().cloned().enumerate());
    }
    ech.rank()
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let k = b.len();
    let m = b.first().map_or(0, Vec::len);
    let mut out = vec![vec![Rational::zero(); m]; n];
    for i in 0..n {
        for t in 0..k {
            if a[i][t].is_zero() {
                continue;
            }
            for j in 0..m {
                if !b[t][j].is_zero() {
                    out[i][j] += &a[i][t] * &b[t][j];
                }
            }
        }
    }
    out
}

pub fn is_zero_matrix(m: &Matrix) -> bool {
    m.iter().all(|r| r.iter().all(Zero::is_zero))
}

pub fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        Rational::one()
                    } else {
                        Rational::zero()
                    }
                })
                .collect()
        })
        .collect()
}

/// Columns of `m` as vectors.
pub fn columns(m: &Matrix) -> Vec<Vec<Rational>> {
    let cols = m.first().map_or(0, Vec::len);
    (0..cols)
        .map(|j| m.iter().map(|r| r[j].clone()).collect())
        .collect()
}

/// Basis of the right nullspace `{v : m v = 0}` by Gauss-Jordan over Q.
pub fn nullspace(m: &Matrix) -> Vec<Vec<Rational>> {
    let cols = m.first().map_or(0, Vec::len);
    let mut a: Matrix = m.clone();
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for v in a[r].iter_mut() {
            *v *= &inv;
        }
        for i in 0..a.len() {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                let pivot = a[r].clone();
                for (v, w) in a[i].iter_mut().zip(&pivot) {
                    *v -= &f * w;
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
        if r == a.len() {
            break;
        }
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivot_cols.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); cols];
            v[f] = Rational::one();
            for (row, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = -a[row][f].clone();
            }
            v
        })
        .collect()
}

/// Rank of a family of vectors.
pub fn span_rank(vectors: &[Vec<Rational>]) -> usize {
    let mut ech = IntEchelon::new();
    for v in vectors {
        ech.insert_rational(v.iter().cloned().enumerate());
    }
    ech.rank()
}

/// Equality of the spans of two vector families, by ranks of the stack.
pub fn same_span(a: &[Vec<Rational>], b: &[Vec<Rational>]) -> bool {
    let ra = span_rank(a);
    let rb = span_rank(b);
    let mut both = a.to_vec();
    both.extend_from_slice(b);
    ra == rb && span_rank(&both) == ra
}
