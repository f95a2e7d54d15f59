//! Small exact matrices for the real-linear viewpoint on the algebra.

use super::quat::SplitQuaternion;
use super::scalar::Scalar;
use num_traits::{One, Zero};

/// A 4x4 matrix over exact rationals, acting on coordinate vectors
/// `(x0, x1, x2, x3)` in the basis `1, i, j, k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat4 {
    pub rows: [[Scalar; 4]; 4],
}

fn zero_row() -> [Scalar; 4] {
    [
        Scalar::zero(),
        Scalar::zero(),
        Scalar::zero(),
        Scalar::zero(),
    ]
}

impl Mat4 {
    pub fn zero() -> Self {
        Self {
            rows: [zero_row(), zero_row(), zero_row(), zero_row()],
        }
    }

    pub fn identity() -> Self {
        let mut m = Self::zero();
        for d in 0..4 {
            m.rows[d][d] = Scalar::one();
        }
        m
    }

    /// Matrix of the real-linear map `y -> q * y` in the basis `1, i, j, k`
    /// (column `n` holds the coordinates of `q * e_n`).
    pub fn left_mul(q: &SplitQuaternion) -> Self {
        let mut m = Self::zero();
        let basis = [
            SplitQuaternion::one(),
            SplitQuaternion::unit_i(),
            SplitQuaternion::unit_j(),
            SplitQuaternion::unit_k(),
        ];
        for (col, e) in basis.iter().enumerate() {
            let image = q * e;
            let c = image.coords();
            for row in 0..4 {
                m.rows[row][col] = c[row].clone();
            }
        }
        m
    }

    pub fn mul_vec(&self, v: &SplitQuaternion) -> SplitQuaternion {
        let vc = v.coords();
        let mut out = zero_row();
        for (o, row) in out.iter_mut().zip(self.rows.iter()) {
            let mut acc = Scalar::zero();
            for (a, b) in row.iter().zip(vc.iter()) {
                acc = &acc + &(a * b);
            }
            *o = acc;
        }
        SplitQuaternion::from_coords(out)
    }

    pub fn mul_mat(&self, other: &Self) -> Self {
        let mut m = Self::zero();
        for r in 0..4 {
            for c in 0..4 {
                let mut acc = Scalar::zero();
                for k in 0..4 {
                    acc = &acc + &(&self.rows[r][k] * &other.rows[k][c]);
                }
                m.rows[r][c] = acc;
            }
        }
        m
    }

    pub fn is_idempotent(&self) -> bool {
        self.mul_mat(self) == *self
    }

    /// Rank by exact Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut rows: Vec<[Scalar; 4]> = self.rows.to_vec();
        let mut rank = 0;
        for col in 0..4 {
            let pivot = (rank..rows.len()).find(|&r| !rows[r][col].is_zero());
            let Some(p) = pivot else { continue };
            rows.swap(rank, p);
            let inv = rows[rank][col].clone().recip();
            for c in 0..4 {
                rows[rank][c] = &rows[rank][c] * &inv;
            }
            for r in 0..rows.len() {
                if r != rank && !rows[r][col].is_zero() {
                    let f = rows[r][col].clone();
                    for c in 0..4 {
                        rows[r][c] = &rows[r][c] - &(&f * &rows[rank][c]);
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    /// A basis of the column space, as quaternions.
    pub fn column_space_basis(&self) -> Vec<SplitQuaternion> {
        // row-reduce the transpose; the nonzero rows of the echelon form
        // span the column space
        let mut rows: Vec<[Scalar; 4]> = (0..4)
            .map(|c| {
                [
                    self.rows[0][c].clone(),
                    self.rows[1][c].clone(),
                    self.rows[2][c].clone(),
                    self.rows[3][c].clone(),
                ]
            })
            .collect();
        let mut next = 0;
        for col in 0..4 {
            let Some(p) = (next..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
                continue;
            };
            rows.swap(next, p);
            let inv = rows[next][col].clone().recip();
            for c in 0..4 {
                rows[next][c] = &rows[next][c] * &inv;
            }
            for r in 0..rows.len() {
                if r != next && !rows[r][col].is_zero() {
                    let f = rows[r][col].clone();
                    for c in 0..4 {
                        rows[r][c] = &rows[r][c] - &(&f * &rows[next][c]);
                    }
                }
            }
            next += 1;
        }
        rows.truncate(next);
        rows.into_iter().map(SplitQuaternion::from_coords).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::int;

    #[test]
    fn left_mul_matrix_matches_product() {
        let q = SplitQuaternion::new(int(1), int(2), int(-1), int(3));
        let v = SplitQuaternion::new(int(-2), int(0), int(5), int(1));
        let m = Mat4::left_mul(&q);
        assert_eq!(m.mul_vec(&v), &q * &v);
    }

    #[test]
    fn rank_of_identity_and_zero() {
        assert_eq!(Mat4::identity().rank(), 4);
        assert_eq!(Mat4::zero().rank(), 0);
        assert!(Mat4::identity().is_idempotent());
    }

    #[test]
    fn column_basis_spans() {
        // left multiplication by a zero divisor has rank 2
        let a = SplitQuaternion::new(int(1), int(0), int(1), int(0));
        let m = Mat4::left_mul(&a);
        assert_eq!(m.rank(), 2);
        assert_eq!(m.column_space_basis().len(), 2);
    }
}
