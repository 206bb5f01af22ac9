//! Dense matrices: constant ones for Lie algebra realizations and
//! polynomial ones for group elements.

use std::fmt;

use super::poly::{Polynomial, Space};
use super::scalar::Field;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<F: Field> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, F::one());
        }
        m
    }

    /// Matrix unit `E_{ij}` with 1-based indices, as written in the literature.
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zeros(n, n);
        m.set(i - 1, j - 1, F::one());
        m
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.data[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[F] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.clone() + b.clone()).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-F::one()))
    }

    pub fn scale(&self, c: &F) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a.clone() * c.clone()).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(i, j).clone() + a.clone() * b.clone();
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn trace(&self) -> F {
        (0..self.rows.min(self.cols)).fold(F::zero(), |acc, i| acc + self.get(i, i).clone())
    }

    /// Gauss-Jordan inverse; `None` if singular.
    pub fn inverse(&self) -> Option<Self> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let piv = (col..n).find(|&r| !a.get(r, col).is_zero())?;
            for k in 0..n {
                a.data.swap(col * n + k, piv * n + k);
                inv.data.swap(col * n + k, piv * n + k);
            }
            let s = F::one() / a.get(col, col).clone();
            for k in 0..n {
                a.set(col, k, a.get(col, k).clone() * s.clone());
                inv.set(col, k, inv.get(col, k).clone() * s.clone());
            }
            for r in 0..n {
                let f = a.get(r, col).clone();
                if r == col || f.is_zero() {
                    continue;
                }
                for k in 0..n {
                    a.set(r, k, a.get(r, k).clone() - f.clone() * a.get(col, k).clone());
                    inv.set(r, k, inv.get(r, k).clone() - f.clone() * inv.get(col, k).clone());
                }
            }
        }
        Some(inv)
    }

    /// Nonzero entries as `(row, col, value)` with 1-based indices.
    pub fn support(&self) -> Vec<(usize, usize, F)> {
        let mut out = Vec::new();
        for i in 0..self.rows {
            for j in 0..self.cols {
                let v = self.get(i, j);
                if !v.is_zero() {
                    out.push((i + 1, j + 1, v.clone()));
                }
            }
        }
        out
    }

    pub fn is_strictly_lower(&self) -> bool {
        (0..self.rows).all(|i| (i..self.cols).all(|j| self.get(i, j).is_zero()))
    }
}

impl<F: Field> fmt::Display for Matrix<F> {
    /// Sparse notation such as `E21 - E65`; indices above 9 are braced.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sup = self.support();
        if sup.is_empty() {
            return write!(f, "0");
        }
        for (k, (i, j, v)) in sup.into_iter().enumerate() {
            let idx = if i < 10 && j < 10 {
                format!("E{i}{j}")
            } else {
                format!("E{{{i},{j}}}")
            };
            let s = v.to_string();
            let (neg, mag) = match s.strip_prefix('-') {
                Some(r) => (true, r.to_string()),
                None => (false, s),
            };
            let body = if mag == "1" { idx } else { format!("{mag}{idx}") };
            match (k, neg) {
                (0, false) => write!(f, "{body}")?,
                (0, true) => write!(f, "-{body}")?,
                (_, false) => write!(f, " + {body}")?,
                (_, true) => write!(f, " - {body}")?,
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct PolyMatrix<F: Field> {
    rows: usize,
    cols: usize,
    space: Space,
    data: Vec<Polynomial<F>>,
}

impl<F: Field> PolyMatrix<F> {
    pub fn zeros(space: &Space, rows: usize, cols: usize) -> Self {
        PolyMatrix {
            rows,
            cols,
            space: space.clone(),
            data: (0..rows * cols).map(|_| Polynomial::zero(space)).collect(),
        }
    }

    pub fn identity(space: &Space, n: usize) -> Self {
        let mut m = Self::zeros(space, n, n);
        for i in 0..n {
            m.data[i * n + i] = Polynomial::one(space);
        }
        m
    }

    /// `f * M` for a constant matrix `M`.
    pub fn from_constant(space: &Space, m: &Matrix<F>, f: &Polynomial<F>) -> Self {
        let mut out = Self::zeros(space, m.rows(), m.cols());
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                out.data[i * m.cols() + j] = f.scale(m.get(i, j));
            }
        }
        out
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial<F> {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Polynomial<F>) {
        self.data[i * self.cols + j] = p;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Polynomial::is_zero)
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            space: self.space.clone(),
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Invalid("matrix shapes do not compose".into()));
        }
        if !super::poly::same_space(&self.space, &other.space) {
            return Err(Error::MixedSpaces);
        }
        let mut out = Self::zeros(&self.space, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * other.cols + j;
                    out.data[idx] = &out.data[idx] + &(a * b);
                }
            }
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.checked_mul(other).expect("incompatible polynomial matrices")
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            space: self.space.clone(),
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn deriv(&self, i: usize) -> Self {
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            space: self.space.clone(),
            data: self.data.iter().map(|p| p.deriv(i)).collect(),
        }
    }

    /// `exp(u M)` for nilpotent constant `M`; errors if `M` is not nilpotent.
    pub fn exp_nilpotent(space: &Space, m: &Matrix<F>, u: &Polynomial<F>) -> Result<Self> {
        let n = m.rows();
        let mut out = Self::identity(space, n);
        let mut power = Matrix::identity(n);
        let mut upow = Polynomial::one(space);
        let mut fact = F::one();
        for k in 1..=n {
            power = power.mul(m);
            if power.is_zero() {
                return Ok(out);
            }
            upow = &upow * u;
            fact = fact * F::from_int(k as i64);
            let c = F::one() / fact.clone();
            out = out.add(&Self::from_constant(space, &power.scale(&c), &upow));
        }
        Err(Error::Invalid("matrix is not nilpotent".into()))
    }
}

#[cfg(test)]
mod tests {
    use super::super::poly::CoordSpace;
    use super::*;
    use num_bigint::BigInt;
    use num_rational::Ratio;

    type Q = Ratio<BigInt>;

    #[test]
    fn commutator_of_units() {
        let e21 = Matrix::<Q>::unit(3, 2, 1);
        let e32 = Matrix::<Q>::unit(3, 3, 2);
        assert_eq!(e32.commutator(&e21), Matrix::unit(3, 3, 1));
        assert_eq!(e32.commutator(&e21).to_string(), "E31");
    }

    #[test]
    fn dense_inverse() {
        let m = Matrix::<Q>::from_rows(vec![
            vec![Q::from_int(0), Q::from_int(2)],
            vec![Q::from_int(1), Q::from_int(3)],
        ]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(2));
        assert!(Matrix::<Q>::zeros(2, 2).inverse().is_none());
    }

    #[test]
    fn exponential_inverse() {
        let s = CoordSpace::new(["u"]);
        let u = Polynomial::<Q>::var(&s, 0);
        let m = Matrix::<Q>::unit(3, 2, 1).add(&Matrix::unit(3, 3, 2));
        let g = PolyMatrix::exp_nilpotent(&s, &m, &u).unwrap();
        let ginv = PolyMatrix::exp_nilpotent(&s, &m, &-&u).unwrap();
        assert_eq!(g.mul(&ginv), PolyMatrix::identity(&s, 3));
        assert_eq!(g.get(2, 0).to_string(), "1/2*u^2");
        assert!(PolyMatrix::exp_nilpotent(&s, &Matrix::<Q>::identity(2), &u).is_err());
    }
}
