//! Small dense square matrices over a commutative ring.

use crate::poly::{Poly, Scalar};

#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<T> {
    n: usize,
    entries: Vec<T>,
}

/// Square matrix of polynomials.
pub type PolyMatrix = Matrix<Poly>;

impl<T: Scalar> Matrix<T> {
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        Matrix { n, entries }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        Matrix {
            n,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.entries[i * self.n + j]
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        Self::from_fn(self.n, |i, j| {
            (0..self.n).fold(T::zero(), |acc, k| {
                acc.add(&self.get(i, k).mul(other.get(k, j)))
            })
        })
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::from_fn(self.n, |i, j| self.get(i, j).add(other.get(i, j)))
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::from_fn(self.n, |i, j| self.get(i, j).sub(other.get(i, j)))
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::from_fn(self.n, |i, j| self.get(i, j).mul(c))
    }

    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::identity(self.n), |acc, _| acc.mul(self))
    }

    pub fn trace(&self) -> T {
        (0..self.n).fold(T::zero(), |acc, i| acc.add(self.get(i, i)))
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            n: self.n,
            entries: self.entries.iter().map(f).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lincomb::{rat, Rational};

    #[test]
    fn products_and_trace() {
        let a: Matrix<Rational> =
            Matrix::from_rows(vec![vec![rat(1), rat(2)], vec![rat(3), rat(4)]]);
        let b = Matrix::identity(2).scale(&rat(2));
        assert_eq!(a.mul(&b), a.scale(&rat(2)));
        assert_eq!(a.trace(), rat(5));
        assert_eq!(a.commutator(&a).trace(), rat(0));
        assert_eq!(a.pow(2), a.mul(&a));
    }
}
