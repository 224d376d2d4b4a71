//! Fraction-free Gauss–Jordan elimination over `Z[q, t]`.

use crate::error::{Error, Result};
use crate::qt_arith::{common_denominator, div_exact, PolyQAT, RatFuncQT};

/// Inverse of a square polynomial matrix, stored as `adj / den`.
#[derive(Debug, Clone)]
pub struct Inverse {
    pub den: PolyQAT,
    pub adj: Vec<Vec<PolyQAT>>,
}

/// Inverts `a` with Bareiss-style fraction-free Gauss–Jordan elimination.
/// Every intermediate division is exact; the final pivot equals `±det(a)`.
pub fn invert(a: &[Vec<PolyQAT>]) -> Result<Inverse> {
    let n = a.len();
    if a.iter().any(|row| row.len() != n) {
        return Err(Error::LengthMismatch { expected: n, got: a.iter().map(Vec::len).find(|&l| l != n).unwrap() });
    }
    let mut m: Vec<Vec<PolyQAT>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { PolyQAT::one() } else { PolyQAT::zero() }));
            r
        })
        .collect();
    let mut prev = PolyQAT::one();
    for k in 0..n {
        // prefer the sparsest nonzero pivot
        let p =
            (k..n).filter(|&r| !m[r][k].is_zero()).min_by_key(|&r| m[r][k].len()).ok_or(Error::SingularMatrix(n))?;
        m.swap(k, p);
        let pivot_row = m[k].clone();
        let pivot = pivot_row[k].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == k {
                continue;
            }
            let factor = row[k].clone();
            for j in 0..2 * n {
                if j == k {
                    continue;
                }
                let mut v = &pivot * &row[j];
                if !factor.is_zero() && !pivot_row[j].is_zero() {
                    v -= &(&factor * &pivot_row[j]);
                }
                row[j] = div_exact(&v, &prev).expect("fraction-free elimination step is exact");
            }
            row[k] = PolyQAT::zero();
        }
        prev = pivot;
    }
    let adj = m.into_iter().map(|row| row[n..].to_vec()).collect();
    Ok(Inverse { den: prev, adj })
}

impl Inverse {
    pub fn size(&self) -> usize {
        self.adj.len()
    }

    /// Entry `(i, j)` of the inverse as a reduced fraction.
    pub fn entry(&self, i: usize, j: usize) -> RatFuncQT {
        RatFuncQT::new(self.adj[i][j].clone(), self.den.clone()).expect("nonzero determinant")
    }

    /// Solves `x · A = b` for the row vector `x`.
    pub fn solve_row(&self, b: &[RatFuncQT]) -> Vec<RatFuncQT> {
        let n = self.size();
        assert_eq!(b.len(), n);
        let (d, nums) = common_denominator(b.iter());
        let den = &d * &self.den;
        (0..n)
            .map(|j| {
                let mut acc = PolyQAT::zero();
                for (i, x) in nums.iter().enumerate() {
                    if !x.is_zero() && !self.adj[i][j].is_zero() {
                        acc += &(x * &self.adj[i][j]);
                    }
                }
                RatFuncQT::new(acc, den.clone()).expect("nonzero denominator")
            })
            .collect()
    }
}

/// Row vector times matrix over `Q(q, t)`, computed over a common denominator.
pub fn row_times_matrix(x: &[RatFuncQT], m: &[Vec<PolyQAT>]) -> Vec<RatFuncQT> {
    let cols = m.first().map_or(0, Vec::len);
    let (d, nums) = common_denominator(x.iter());
    (0..cols)
        .map(|j| {
            let mut acc = PolyQAT::zero();
            for (i, v) in nums.iter().enumerate() {
                if !v.is_zero() && !m[i][j].is_zero() {
                    acc += &(v * &m[i][j]);
                }
            }
            RatFuncQT::new(acc, d.clone()).expect("nonzero denominator")
        })
        .collect()
}
