//! 2×2 matrices over the scalar ring, used for modular-group elements and
//! their twisted (Lefschetz-weighted) forms.

use crate::scalar::Scalar;
use std::fmt;

/// Row-major 2×2 matrix with [`Scalar`] entries.
#[derive(Clone, PartialEq, Eq)]
pub struct Mat2 {
    pub e: [[Scalar; 2]; 2],
}

impl Mat2 {
    pub fn new(a: Scalar, b: Scalar, c: Scalar, d: Scalar) -> Self {
        Mat2 { e: [[a, b], [c, d]] }
    }

    pub fn from_i64(a: i64, b: i64, c: i64, d: i64) -> Self {
        Mat2::new(
            Scalar::from_i64(a),
            Scalar::from_i64(b),
            Scalar::from_i64(c),
            Scalar::from_i64(d),
        )
    }

    pub fn identity() -> Self {
        Mat2::from_i64(1, 0, 0, 1)
    }

    pub fn mul(&self, other: &Mat2) -> Mat2 {
        let p = |i: usize, j: usize| -> Scalar {
            self.e[i][0]
                .mul(&other.e[0][j])
                .add(&self.e[i][1].mul(&other.e[1][j]))
        };
        Mat2::new(p(0, 0), p(0, 1), p(1, 0), p(1, 1))
    }

    pub fn det(&self) -> Scalar {
        self.e[0][0].mul(&self.e[1][1]).sub(&self.e[0][1].mul(&self.e[1][0]))
    }

    /// Inverse for determinant ±1 (the only case used here).
    pub fn inverse(&self) -> Mat2 {
        let det = self.det();
        let adj = Mat2::new(
            self.e[1][1].clone(),
            self.e[0][1].neg(),
            self.e[1][0].neg(),
            self.e[0][0].clone(),
        );
        if det == Scalar::one() {
            adj
        } else if det == Scalar::one().neg() {
            Mat2::new(
                adj.e[0][0].neg(),
                adj.e[0][1].neg(),
                adj.e[1][0].neg(),
                adj.e[1][1].neg(),
            )
        } else {
            panic!("inverse only implemented for determinant +-1, got {det}");
        }
    }

    pub fn pow(&self, n: u32) -> Mat2 {
        let mut acc = Mat2::identity();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Conjugation by `diag(1, L^{-1})`: rescales the off-diagonal entries
    /// by `L` and `L^{-1}`, turning an integer modular matrix into its
    /// weighted counterpart.
    pub fn de_rham_twist(&self) -> Mat2 {
        Mat2::new(
            self.e[0][0].clone(),
            self.e[0][1].mul_lefschetz(1),
            self.e[1][0].mul_lefschetz(-1),
            self.e[1][1].clone(),
        )
    }
}

/// Integer `S = [[0,-1],[1,0]]`.
pub fn mat_s() -> Mat2 {
    Mat2::from_i64(0, -1, 1, 0)
}

/// Integer `T = [[1,1],[0,1]]`.
pub fn mat_t() -> Mat2 {
    Mat2::from_i64(1, 1, 0, 1)
}

/// Weighted `S`: `[[0,-L],[L^{-1},0]]`.
pub fn mat_s_m() -> Mat2 {
    mat_s().de_rham_twist()
}

/// Weighted `T`: `[[1,L],[0,1]]`.
pub fn mat_t_m() -> Mat2 {
    mat_t().de_rham_twist()
}

/// Weighted `U = S T`: `[[0,-L],[L^{-1},1]]`.
pub fn mat_u_m() -> Mat2 {
    mat_s_m().mul(&mat_t_m())
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            self.e[0][0], self.e[0][1], self.e[1][0], self.e[1][1]
        )
    }
}

impl fmt::Debug for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
