//! Fixed-size dense vectors and matrices (3 and 9 dimensional).

use std::ops::{Index, IndexMut};

use serde::{Deserialize, Serialize};

use crate::scalar::Real;

/// Real 3-vector.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Vec3<T>(pub [T; 3]);

/// Real 3×3 matrix, row-major.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Mat3<T>(pub [[T; 3]; 3]);

/// Real 9×9 matrix, row-major. Acts on [`crate::cg::Tensor9`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Mat9<T>(pub [[T; 9]; 9]);

impl<T: Real> Vec3<T> {
    pub fn new(x: T, y: T, z: T) -> Self {
        Vec3([x, y, z])
    }

    pub fn dot(&self, other: &Self) -> T {
        (0..3).map(|i| self.0[i] * other.0[i]).sum()
    }

    pub fn cross(&self, other: &Self) -> Self {
        let (a, b) = (&self.0, &other.0);
        Vec3([
            a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0],
        ])
    }

    pub fn norm(&self) -> T {
        self.dot(self).sqrt()
    }

    pub fn scale(&self, s: T) -> Self {
        Vec3(self.0.map(|x| x * s))
    }

    /// Largest absolute component difference.
    pub fn max_abs_diff(&self, other: &Self) -> T {
        (0..3)
            .map(|i| (self.0[i] - other.0[i]).abs())
            .fold(T::zero(), T::max)
    }
}

impl<T> Index<usize> for Vec3<T> {
    type Output = T;
    fn index(&self, i: usize) -> &T {
        &self.0[i]
    }
}

impl<T: Real> Mat3<T> {
    pub fn identity() -> Self {
        let mut m = [[T::zero(); 3]; 3];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = T::one();
        }
        Mat3(m)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = [[T::zero(); 3]; 3];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = (0..3).map(|k| self.0[i][k] * other.0[k][j]).sum();
            }
        }
        Mat3(out)
    }

    pub fn apply(&self, v: &Vec3<T>) -> Vec3<T> {
        let mut out = [T::zero(); 3];
        for (i, o) in out.iter_mut().enumerate() {
            *o = (0..3).map(|k| self.0[i][k] * v.0[k]).sum();
        }
        Vec3(out)
    }

    pub fn transpose(&self) -> Self {
        let mut out = [[T::zero(); 3]; 3];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = self.0[j][i];
            }
        }
        Mat3(out)
    }

    pub fn trace(&self) -> T {
        self.0[0][0] + self.0[1][1] + self.0[2][2]
    }

    pub fn max_abs_diff(&self, other: &Self) -> T {
        let mut m = T::zero();
        for i in 0..3 {
            for j in 0..3 {
                m = m.max((self.0[i][j] - other.0[i][j]).abs());
            }
        }
        m
    }

    /// `‖M Mᵀ − I‖_max`.
    pub fn orthogonality_defect(&self) -> T {
        self.mul(&self.transpose()).max_abs_diff(&Self::identity())
    }

    /// Kronecker product `self ⊗ other` with flat index `3i + j`.
    pub fn kron(&self, other: &Self) -> Mat9<T> {
        let mut out = [[T::zero(); 9]; 9];
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    for l in 0..3 {
                        out[3 * i + k][3 * j + l] = self.0[i][j] * other.0[k][l];
                    }
                }
            }
        }
        Mat9(out)
    }
}

impl<T> Index<(usize, usize)> for Mat3<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.0[i][j]
    }
}

impl<T> IndexMut<(usize, usize)> for Mat3<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.0[i][j]
    }
}

impl<T: Real> Mat9<T> {
    pub fn zeros() -> Self {
        Mat9([[T::zero(); 9]; 9])
    }

    pub fn identity() -> Self {
        let mut m = Self::zeros();
        for i in 0..9 {
            m.0[i][i] = T::one();
        }
        m
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zeros();
        for i in 0..9 {
            for j in 0..9 {
                out.0[i][j] = (0..9).map(|k| self.0[i][k] * other.0[k][j]).sum();
            }
        }
        out
    }

    pub fn apply(&self, v: &[T; 9]) -> [T; 9] {
        let mut out = [T::zero(); 9];
        for (i, o) in out.iter_mut().enumerate() {
            *o = (0..9).map(|k| self.0[i][k] * v[k]).sum();
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros();
        for i in 0..9 {
            for j in 0..9 {
                out.0[i][j] = self.0[j][i];
            }
        }
        out
    }

    pub fn trace(&self) -> T {
        (0..9).map(|i| self.0[i][i]).sum()
    }

    pub fn max_abs_diff(&self, other: &Self) -> T {
        let mut m = T::zero();
        for i in 0..9 {
            for j in 0..9 {
                m = m.max((self.0[i][j] - other.0[i][j]).abs());
            }
        }
        m
    }

    pub fn orthogonality_defect(&self) -> T {
        self.mul(&self.transpose()).max_abs_diff(&Self::identity())
    }

    pub fn row(&self, i: usize) -> [T; 9] {
        self.0[i]
    }
}
