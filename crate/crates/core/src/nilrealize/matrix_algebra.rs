//! Classical matrix algebras `sl(n)`, `so(n)` and `sp(2ℓ)` in the split form
//! preserving an antidiagonal Gram matrix.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rootsys::{AlgebraSpec, Family, Root};
use crate::symalg::Field;
use crate::{QMatrix, QSystem, Rational};

/// Antidiagonal `K_m` with ones on the antidiagonal.
pub fn antidiagonal(m: usize) -> QMatrix {
    let mut k = QMatrix::zeros(m, m);
    for i in 0..m {
        k.set(i, m - 1 - i, Rational::one());
    }
    k
}

#[derive(Clone, Debug)]
pub struct MatrixAlgebra {
    pub spec: AlgebraSpec,
    pub n: usize,
    pub cartan_basis: Vec<QMatrix>,
    /// `X^t F + F X = 0` defines the algebra; `None` for `sl(n)`.
    pub form: Option<QMatrix>,
}

pub fn build_matrix_algebra(spec: AlgebraSpec) -> Result<MatrixAlgebra> {
    let l = spec.rank;
    let n = match spec.family {
        Family::A => l + 1,
        Family::B => 2 * l + 1,
        Family::C | Family::D => 2 * l,
        _ => return Err(Error::Unsupported(format!("no matrix realization for {}", spec.name()))),
    };
    let cartan_basis = (1..=l)
        .map(|i| match spec.family {
            Family::A => QMatrix::unit(n, i, i).sub(&QMatrix::unit(n, i + 1, i + 1)),
            _ => QMatrix::unit(n, i, i).sub(&QMatrix::unit(n, n + 1 - i, n + 1 - i)),
        })
        .collect();
    let form = match spec.family {
        Family::A => None,
        Family::B | Family::D => Some(antidiagonal(n)),
        _ => {
            // J = [0 K; -K 0]
            let mut j = QMatrix::zeros(n, n);
            for i in 0..l {
                j.set(i, n - 1 - i, Rational::one());
                j.set(l + i, l - 1 - i, -Rational::one());
            }
            Some(j)
        }
    };
    let ma = MatrixAlgebra {
        spec,
        n,
        cartan_basis,
        form,
    };
    if let Some(h) = ma.cartan_basis.iter().find(|h| !ma.contains(h)) {
        return Err(Error::Internal(format!("Cartan element {h} not in {}", spec.name())));
    }
    Ok(ma)
}

impl MatrixAlgebra {
    pub fn contains(&self, m: &QMatrix) -> bool {
        if m.rows() != self.n || m.cols() != self.n {
            return false;
        }
        match &self.form {
            None => m.trace().is_zero(),
            Some(f) => m.transpose().mul(f).add(&f.mul(m)).is_zero(),
        }
    }

    /// `β` in the orthonormal `L`-coordinates of the standard realization.
    pub fn l_vector(&self, beta: &Root) -> Vec<i64> {
        let l = self.spec.rank;
        let width = if self.spec.family == Family::A { l + 1 } else { l };
        let mut v = vec![0i64; width];
        for (i, &c) in beta.coeffs().iter().enumerate() {
            match (self.spec.family, i + 1 == l) {
                (Family::B, true) => v[i] += c,
                (Family::C, true) => v[i] += 2 * c,
                (Family::D, true) => {
                    v[i - 1] += c;
                    v[i] += c;
                }
                _ => {
                    v[i] += c;
                    v[i + 1] -= c;
                }
            }
        }
        v
    }

    /// `β(H_i)` for every Cartan basis element.
    pub fn root_values(&self, beta: &Root) -> Vec<Rational> {
        let lv = self.l_vector(beta);
        self.cartan_basis
            .iter()
            .map(|h| {
                lv.iter()
                    .enumerate()
                    .fold(Rational::zero(), |acc, (a, &c)| acc + h.get(a, a) * Rational::from_int(c))
            })
            .collect()
    }

    /// Eigenvalues of `ad H_i` on the matrix unit at 0-based `(a, b)`.
    fn unit_values(&self, a: usize, b: usize) -> Vec<Rational> {
        self.cartan_basis.iter().map(|h| h.get(a, a) - h.get(b, b)).collect()
    }

    /// Whether `m` is a simultaneous `ad H` eigenvector with eigenvalues `β(H_i)`.
    pub fn is_root_vector(&self, m: &QMatrix, beta: &Root) -> bool {
        if m.is_zero() || !self.contains(m) {
            return false;
        }
        let want = self.root_values(beta);
        m.support().iter().all(|(a, b, _)| self.unit_values(a - 1, b - 1) == want)
    }

    /// A basis matrix of the `β` root space, normalized so that its first
    /// nonzero entry in row-major order is 1.
    pub fn root_space(&self, beta: &Root) -> Result<QMatrix> {
        if beta.is_zero() {
            return Err(Error::NotARoot("zero".into()));
        }
        let want = self.root_values(beta);
        let cells: Vec<(usize, usize)> = (0..self.n)
            .flat_map(|a| (0..self.n).map(move |b| (a, b)))
            .filter(|&(a, b)| a != b && self.unit_values(a, b) == want)
            .collect();
        if cells.is_empty() {
            return Err(Error::NotARoot(format!("{beta:?} has no eigenvectors in {}", self.spec.name())));
        }
        let mut sys = QSystem::new(cells.iter().map(|(a, b)| format!("E{}{}", a + 1, b + 1)).collect());
        if let Some(f) = &self.form {
            // (X^t F + F X)_{ij} = Σ_k X_{ki} F_{kj} + F_{ik} X_{kj}
            for i in 0..self.n {
                for j in 0..self.n {
                    let row = cells.iter().enumerate().flat_map(|(u, &(a, b))| {
                        let mut out = Vec::new();
                        if b == i && !f.get(a, j).is_zero() {
                            out.push((u, f.get(a, j).clone()));
                        }
                        if b == j && !f.get(i, a).is_zero() {
                            out.push((u, f.get(i, a).clone()));
                        }
                        out
                    });
                    sys.add_row(row.collect::<Vec<_>>())?;
                }
            }
        }
        let null = sys.nullspace();
        if null.len() != 1 {
            return Err(Error::Internal(format!(
                "root space of {beta:?} in {} has dimension {}",
                self.spec.name(),
                null.len()
            )));
        }
        let v = &null[0];
        let mut m = QMatrix::zeros(self.n, self.n);
        for (u, &(a, b)) in cells.iter().enumerate() {
            m.set(a, b, v[u].clone());
        }
        let lead = m.support()[0].2.clone();
        Ok(m.scale(&(Rational::one() / lead)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::build_root_system;

    fn ma(f: Family, l: usize) -> MatrixAlgebra {
        build_matrix_algebra(AlgebraSpec::new(f, l).unwrap()).unwrap()
    }

    fn e(n: usize, i: usize, j: usize) -> QMatrix {
        QMatrix::unit(n, i, j)
    }

    #[test]
    fn sizes_and_cartan() {
        let a3 = ma(Family::A, 3);
        assert_eq!(a3.n, 4);
        assert_eq!(a3.cartan_basis[0], e(4, 1, 1).sub(&e(4, 2, 2)));
        assert_eq!(ma(Family::B, 3).n, 7);
        let c3 = ma(Family::C, 3);
        assert_eq!(c3.n, 6);
        assert_eq!(c3.form.as_ref().unwrap().get(3, 2), &-Rational::one());
        assert!(build_matrix_algebra(AlgebraSpec::new(Family::G, 2).unwrap()).is_err());
    }

    #[test]
    fn root_spaces_match_listed_matrices() {
        let a4 = ma(Family::A, 4);
        assert_eq!(a4.root_space(&Root(vec![0, -1, 0, 0])).unwrap(), e(5, 3, 2));
        let c4 = ma(Family::C, 4);
        assert_eq!(c4.root_space(&Root(vec![0, 0, 0, -1])).unwrap(), e(8, 5, 4));
        let b3 = ma(Family::B, 3);
        assert_eq!(
            b3.root_space(&Root(vec![-1, 0, 0])).unwrap(),
            e(7, 2, 1).sub(&e(7, 7, 6))
        );
    }

    #[test]
    fn every_root_space_is_a_line() {
        for (f, l) in [(Family::A, 4), (Family::B, 3), (Family::C, 3), (Family::D, 4), (Family::B, 2)] {
            let m = ma(f, l);
            let rs = build_root_system(m.spec).unwrap();
            for beta in rs.roots() {
                let x = m.root_space(&beta).unwrap();
                assert!(m.is_root_vector(&x, &beta), "{f:?}{l} {beta:?}");
            }
        }
    }
}
