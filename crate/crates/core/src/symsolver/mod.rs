//! Infinitesimal symmetries of the standard models.
//!
//! [`solve_symmetries`] handles first order Monge systems `ż^α = F^α_ij ẏ^i ẏ^j`
//! through their determining equations; [`pfaffian_symmetries`] handles any
//! weighted-homogeneous polynomial Pfaffian system by a bounded ansatz.

mod determining;
mod linpoly;
mod pfaffian;

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::cases::CaseId;
use crate::error::{Error, Result};
use crate::symalg::{CoordSpace, Space};
use crate::{Field1, Poly, QSystem, Rational};

pub use determining::{build_determining, build_symeq_system, solve_symmetries, solve_symmetries_with_degree, symeq_residual};
pub use linpoly::LinPoly;
pub use pfaffian::{kernel_growth, pfaffian_symmetries, pfaffian_symmetries_in_grades};

/// `ż^α = F^α_ij ẏ^i ẏ^j` with symmetric constant `F^α`.
#[derive(Clone, Debug)]
pub struct MongeSpec {
    pub name: String,
    pub ys: Vec<String>,
    pub zs: Vec<String>,
    /// `f[α][i][j]`, symmetric in `i, j`.
    pub f: Vec<Vec<Vec<Rational>>>,
}

impl MongeSpec {
    pub fn new(name: &str, ys: Vec<String>, zs: Vec<String>, f: Vec<Vec<Vec<Rational>>>) -> Result<Self> {
        let n = ys.len();
        if f.len() != zs.len() || f.iter().any(|m| m.len() != n || m.iter().any(|r| r.len() != n)) {
            return Err(Error::Invalid("F tensor has the wrong shape".into()));
        }
        for m in &f {
            for i in 0..n {
                for j in 0..n {
                    if m[i][j] != m[j][i] {
                        return Err(Error::Invalid("F tensor is not symmetric".into()));
                    }
                }
            }
        }
        Ok(MongeSpec {
            name: name.into(),
            ys,
            zs,
            f,
        })
    }

    /// `x, y…, z…`.
    pub fn base_names(&self) -> Vec<String> {
        let mut v = vec!["x".to_string()];
        v.extend(self.ys.iter().cloned());
        v.extend(self.zs.iter().cloned());
        v
    }

    /// `x, y…, z…, ẏ…` with `ẏ^i` written `y{i}_1`.
    pub fn jet_names(&self) -> Vec<String> {
        let mut v = self.base_names();
        v.extend(self.ys.iter().map(|y| format!("{y}_1")));
        v
    }

    pub fn jet_space(&self) -> Space {
        CoordSpace::new(self.jet_names())
    }

    /// Weights `x 1, y 2, z 3, ẏ 1` of the defining grading.
    pub fn weights(&self) -> Vec<i64> {
        let mut w = vec![1];
        w.extend(self.ys.iter().map(|_| 2));
        w.extend(self.zs.iter().map(|_| 3));
        w.extend(self.ys.iter().map(|_| 1));
        w
    }

    /// Weights of the grading by the leader alone: `x, y, z` all 1, `ẏ` 0.
    pub fn leader_weights(&self) -> Vec<i64> {
        let mut w = vec![1; 1 + self.ys.len() + self.zs.len()];
        w.extend(self.ys.iter().map(|_| 0));
        w
    }

    /// `F^α` as a polynomial on the jet space.
    pub fn rhs(&self, space: &Space, alpha: usize) -> Poly {
        let base = 1 + self.ys.len() + self.zs.len();
        let n = self.ys.len();
        let mut p = Poly::zero(space);
        for i in 0..n {
            for j in 0..n {
                let c = &self.f[alpha][i][j];
                if !c.is_zero() {
                    p = &p + &(&Poly::var(space, base + i) * &Poly::var(space, base + j)).scale(c);
                }
            }
        }
        p
    }
}

fn half() -> Rational {
    Rational::new(1.into(), 2.into())
}

/// The quadratic Monge system of Ia, IIa, IIIa or IVa. `signature` is `(r, s)` for the
/// `κ` of IIIa and IVa and is ignored otherwise; `κ = diag(+1 r times, −1 s times)`.
pub fn monge_spec(case: CaseId, l: usize, signature: Option<(usize, usize)>) -> Result<MongeSpec> {
    let (lo, _) = case.rank_range();
    if l < lo {
        return Err(Error::Invalid(format!("{case} needs rank ≥ {lo}, got {l}")));
    }
    let zero = |n: usize| vec![vec![Rational::zero(); n]; n];
    match case {
        CaseId::Ia => {
            let m = l - 2;
            let ys: Vec<String> = (0..=m).map(|i| format!("y{i}")).collect();
            let zs: Vec<String> = (1..=m).map(|i| format!("z{i}")).collect();
            let f = (1..=m)
                .map(|i| {
                    let mut t = zero(m + 1);
                    t[0][i] = half();
                    t[i][0] = half();
                    t
                })
                .collect();
            MongeSpec::new(&format!("Ia ℓ={l}"), ys, zs, f)
        }
        CaseId::IIa => {
            let m = l - 1;
            let ys: Vec<String> = (1..=m).map(|i| format!("y{i}")).collect();
            let mut zs = Vec::new();
            let mut f = Vec::new();
            for i in 0..m {
                for j in i..m {
                    zs.push(format!("z{}{}", i + 1, j + 1));
                    let mut t = zero(m);
                    if i == j {
                        t[i][i] = Rational::one();
                    } else {
                        t[i][j] = half();
                        t[j][i] = half();
                    }
                    f.push(t);
                }
            }
            MongeSpec::new(&format!("IIa ℓ={l}"), ys, zs, f)
        }
        CaseId::IIIa | CaseId::IVa => {
            let m = if case == CaseId::IIIa { 2 * l - 3 } else { 2 * l - 4 };
            let (r, s) = signature.unwrap_or((m - m / 2, m / 2));
            if r + s != m {
                return Err(Error::Invalid(format!("signature ({r}, {s}) must have r + s = {m}")));
            }
            let mut t = zero(m);
            for (i, row) in t.iter_mut().enumerate() {
                row[i] = if i < r { half() } else { -half() };
            }
            let ys = (1..=m).map(|i| format!("y{i}")).collect();
            MongeSpec::new(&format!("{case} ℓ={l} ({r},{s})"), ys, vec!["z".into()], vec![t])
        }
        _ => Err(Error::Unsupported(format!("{case} is not a first order quadratic Monge system"))),
    }
}

/// A finite-dimensional Lie algebra of polynomial vector fields.
#[derive(Clone, Debug)]
pub struct SymmetryAlgebra {
    pub name: String,
    pub space: Space,
    /// Indices of the point coordinates.
    pub base: Vec<usize>,
    pub weights: Vec<i64>,
    pub basis: Vec<Field1>,
    /// `[X_a, X_b] = Σ c X_c` for `a < b`, nonzero brackets only.
    pub brackets: BTreeMap<(usize, usize), Vec<(usize, Rational)>>,
}

impl SymmetryAlgebra {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Computes the bracket table; fails if a bracket leaves the span.
    pub fn close(mut self) -> Result<Self> {
        let n = self.basis.len();
        let mut table = BTreeMap::new();
        for a in 0..n {
            for b in a + 1..n {
                let br = self.basis[a].bracket(&self.basis[b]);
                if br.is_zero() {
                    continue;
                }
                let c = expand_in(&self.basis, &br).ok_or_else(|| {
                    Error::Internal(format!("{}: [X{a}, X{b}] leaves the span", self.name))
                })?;
                table.insert((a, b), c.into_iter().enumerate().filter(|(_, v)| !v.is_zero()).collect());
            }
        }
        self.brackets = table;
        Ok(self)
    }
}

/// Coordinates of `target` in the span of `fields`, if it lies there.
pub fn expand_in(fields: &[Field1], target: &Field1) -> Option<Vec<Rational>> {
    let n = fields.len();
    // unknowns c_0..c_{n-1}, t with Σ c_k v_k − t w = 0
    let mut rows: BTreeMap<(usize, crate::symalg::Monomial), Vec<(usize, Rational)>> = BTreeMap::new();
    for (k, v) in fields.iter().enumerate() {
        for (i, p) in v.coeffs().iter().enumerate() {
            for (m, c) in p.terms() {
                rows.entry((i, m.clone())).or_default().push((k, c.clone()));
            }
        }
    }
    for (i, p) in target.coeffs().iter().enumerate() {
        for (m, c) in p.terms() {
            rows.entry((i, m.clone())).or_default().push((n, -c.clone()));
        }
    }
    let mut sys = QSystem::new((0..=n).map(|k| format!("c{k}")).collect());
    for r in rows.into_values() {
        sys.add_row(r).ok()?;
    }
    let null = sys.nullspace();
    let v = null.iter().find(|v| !v[n].is_zero())?;
    if null.len() != 1 {
        return None;
    }
    let t = v[n].clone();
    Some(v[..n].iter().map(|c| c / &t).collect())
}

/// Rank of a set of fields over the rationals.
pub fn span_rank(fields: &[Field1]) -> usize {
    let mut rows: BTreeMap<(usize, crate::symalg::Monomial), Vec<(usize, Rational)>> = BTreeMap::new();
    for (k, v) in fields.iter().enumerate() {
        for (i, p) in v.coeffs().iter().enumerate() {
            for (m, c) in p.terms() {
                rows.entry((i, m.clone())).or_default().push((k, c.clone()));
            }
        }
    }
    // column rank of the coefficient matrix = row rank of its transpose
    let mut sys = QSystem::new((0..fields.len()).map(|k| format!("c{k}")).collect());
    for r in rows.into_values() {
        sys.add_row(r).expect("indices are in range");
    }
    fields.len() - sys.nullspace().len()
}

/// Dimension of each weighted-homogeneous component of the span.
pub fn grade_decomposition(sa: &SymmetryAlgebra, weights: &[i64]) -> BTreeMap<i64, usize> {
    let mut parts: BTreeMap<i64, Vec<Field1>> = BTreeMap::new();
    for v in &sa.basis {
        for (d, p) in v.homogeneous_parts(weights) {
            parts.entry(d).or_default().push(p);
        }
    }
    parts.into_iter().map(|(d, fs)| (d, span_rank(&fs))).filter(|(_, n)| *n > 0).collect()
}

/// Whether every field's point components depend on point coordinates only.
pub fn point_symmetry_check(sa: &SymmetryAlgebra) -> bool {
    projects_to(sa, &sa.base)
}

/// Whether every field descends along the projection onto `coords`.
pub fn projects_to(sa: &SymmetryAlgebra, coords: &[usize]) -> bool {
    let fiber: Vec<usize> = (0..sa.space.dim()).filter(|i| !coords.contains(i)).collect();
    sa.basis
        .iter()
        .all(|v| coords.iter().all(|&b| fiber.iter().all(|&f| !v.coeff(b).depends_on(f))))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn specs() {
        let ia = monge_spec(CaseId::Ia, 3, None).unwrap();
        assert_eq!(ia.ys, vec!["y0", "y1"]);
        assert_eq!(ia.f[0][0][1], half());
        let iii = monge_spec(CaseId::IIIa, 3, Some((2, 1))).unwrap();
        assert_eq!(iii.f[0][2][2], -half());
        let iia = monge_spec(CaseId::IIa, 3, None).unwrap();
        assert_eq!(iia.zs, vec!["z11", "z12", "z22"]);
        assert!(monge_spec(CaseId::IIIa, 3, Some((1, 1))).is_err());
    }

    #[test]
    fn contact_field_is_not_point() {
        let s = CoordSpace::new(["x", "y", "y_1"]);
        let v = Field1::from_coeffs(&s, vec![Poly::zero(&s), Poly::var(&s, 2), Poly::zero(&s)]);
        let sa = SymmetryAlgebra {
            name: "control".into(),
            space: s.clone(),
            base: vec![0, 1],
            weights: vec![1, 1, 0],
            basis: vec![v],
            brackets: BTreeMap::new(),
        };
        assert!(!point_symmetry_check(&sa));
    }
}
