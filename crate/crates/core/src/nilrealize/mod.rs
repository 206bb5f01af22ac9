//! Concrete negative parts `𝔤₋` of graded simple Lie algebras.
//!
//! A [`GradedNilpotent`] carries a labelled basis with degrees, optional
//! matrices, and structure constants `[e_a, e_b] = c^c_{ab} e_c`. The dual
//! coframe satisfies `dθ^c(e_a, e_b) = −θ^c([e_a, e_b])`, that is
//! `dθ^c = −Σ_{a<b} c^c_{ab} θ^a ∧ θ^b`.

mod g2;
mod matrix_algebra;
mod displayed;

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::grading::{grade, Sigma};
use crate::rootsys::{Root, RootSystem};
use crate::{QMatrix, QSystem, Rational};

pub use g2::{g2_chevalley, g2_table, G2_NEGATIVE_ROOTS};
pub use matrix_algebra::{antidiagonal, build_matrix_algebra, MatrixAlgebra};
pub use displayed::{
    displayed_algebra, displayed_bracket_table, displayed_structure_equations, realize_case, structure_equation_mismatches,
    verify_case_matrices, DisplayedBracket, DisplayedStructureEquation,
};

#[derive(Clone, Debug, PartialEq)]
pub struct BasisElement {
    pub label: String,
    /// Name of the dual coordinate.
    pub coord: String,
    pub degree: i64,
    pub matrix: Option<QMatrix>,
}

impl BasisElement {
    pub fn new(label: &str, coord: &str, degree: i64) -> Self {
        BasisElement {
            label: label.to_string(),
            coord: coord.to_string(),
            degree,
            matrix: None,
        }
    }

    pub fn with_matrix(mut self, m: QMatrix) -> Self {
        self.matrix = Some(m);
        self
    }
}

/// A linear combination `Σ c_k e_k` over basis indices, sorted, without zeros.
pub type Combination = Vec<(usize, Rational)>;

fn normalize(mut v: Combination) -> Combination {
    v.sort_by_key(|(i, _)| *i);
    let mut out: Combination = Vec::with_capacity(v.len());
    for (i, c) in v {
        match out.last_mut() {
            Some((j, d)) if *j == i => *d += c,
            _ => out.push((i, c)),
        }
    }
    out.retain(|(_, c)| !c.is_zero());
    out
}

#[derive(Clone, Debug, PartialEq)]
pub struct GradedNilpotent {
    pub name: String,
    pub basis: Vec<BasisElement>,
    /// `[e_a, e_b]` for `a < b`, nonzero entries only.
    brackets: BTreeMap<(usize, usize), Combination>,
}

impl GradedNilpotent {
    /// From brackets `[A, B] = c C` given by label. Repeated pairs add up.
    pub fn from_table(name: &str, basis: Vec<BasisElement>, table: &[(&str, &str, Rational, &str)]) -> Result<Self> {
        let mut g = GradedNilpotent {
            name: name.to_string(),
            basis,
            brackets: BTreeMap::new(),
        };
        let mut acc: BTreeMap<(usize, usize), Combination> = BTreeMap::new();
        for (a, b, c, t) in table {
            let (ia, ib, it) = (g.index_of(a)?, g.index_of(b)?, g.index_of(t)?);
            if ia == ib {
                return Err(Error::Invalid(format!("[{a}, {a}] listed")));
            }
            let (key, sign) = if ia < ib { ((ia, ib), c.clone()) } else { ((ib, ia), -c.clone()) };
            acc.entry(key).or_default().push((it, sign));
        }
        for (k, v) in acc {
            let v = normalize(v);
            if !v.is_empty() {
                g.brackets.insert(k, v);
            }
        }
        Ok(g)
    }

    /// Brackets by matrix commutator, re-expanded over the basis matrices of
    /// the expected degree.
    pub fn from_matrices(name: &str, basis: Vec<BasisElement>) -> Result<Self> {
        if basis.iter().any(|b| b.matrix.is_none()) {
            return Err(Error::Invalid("every basis element needs a matrix".into()));
        }
        let mut g = GradedNilpotent {
            name: name.to_string(),
            basis,
            brackets: BTreeMap::new(),
        };
        let n = g.basis.len();
        for a in 0..n {
            for b in a + 1..n {
                let ma = g.basis[a].matrix.as_ref().unwrap();
                let mb = g.basis[b].matrix.as_ref().unwrap();
                let c = ma.commutator(mb);
                if c.is_zero() {
                    continue;
                }
                let deg = g.basis[a].degree + g.basis[b].degree;
                let v = g.expand(&c, deg).map_err(|e| match e {
                    Error::Internal(m) => {
                        Error::Internal(format!("[{}, {}]: {m}", g.basis[a].label, g.basis[b].label))
                    }
                    e => e,
                })?;
                g.brackets.insert((a, b), v);
            }
        }
        Ok(g)
    }

    /// Coordinates of `m` over the basis matrices of degree `deg`.
    pub fn expand(&self, m: &QMatrix, deg: i64) -> Result<Combination> {
        let cand: Vec<usize> = (0..self.basis.len()).filter(|&k| self.basis[k].degree == deg).collect();
        let Some(first) = cand.first() else {
            return Err(Error::Internal(format!("no basis elements of degree {deg}")));
        };
        let size = self.basis[*first].matrix.as_ref().map_or(0, QMatrix::rows);
        // Σ c_k M_k − t m = 0 with unknowns c_k and t
        let mut names: Vec<String> = cand.iter().map(|&k| self.basis[k].label.clone()).collect();
        names.push("t".into());
        let t = cand.len();
        let mut sys = QSystem::new(names);
        for i in 0..size {
            for j in 0..size {
                let mut row: Vec<(usize, Rational)> = cand
                    .iter()
                    .enumerate()
                    .map(|(u, &k)| (u, self.basis[k].matrix.as_ref().unwrap().get(i, j).clone()))
                    .collect();
                row.push((t, -m.get(i, j).clone()));
                sys.add_row(row)?;
            }
        }
        let null = sys.nullspace();
        let hit: Vec<&Vec<Rational>> = null.iter().filter(|v| !v[t].is_zero()).collect();
        if null.len() != 1 || hit.len() != 1 {
            return Err(Error::Internal(format!("commutator not in the span of degree {deg}")));
        }
        let v = hit[0];
        let s = Rational::one() / v[t].clone();
        Ok(normalize(cand.iter().enumerate().map(|(u, &k)| (k, v[u].clone() * s.clone())).collect()))
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn depth(&self) -> i64 {
        self.basis.iter().map(|b| -b.degree).max().unwrap_or(0)
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.basis
            .iter()
            .position(|b| b.label == label)
            .ok_or_else(|| Error::Invalid(format!("no basis element {label} in {}", self.name)))
    }

    pub fn coords(&self) -> Vec<String> {
        self.basis.iter().map(|b| b.coord.clone()).collect()
    }

    /// Coordinate weights `−deg`.
    pub fn weights(&self) -> Vec<i64> {
        self.basis.iter().map(|b| -b.degree).collect()
    }

    pub fn degree_dims(&self) -> BTreeMap<i64, usize> {
        let mut out = BTreeMap::new();
        for b in &self.basis {
            *out.entry(b.degree).or_insert(0) += 1;
        }
        out
    }

    pub fn bracket(&self, a: usize, b: usize) -> Combination {
        match a.cmp(&b) {
            std::cmp::Ordering::Equal => Vec::new(),
            std::cmp::Ordering::Less => self.brackets.get(&(a, b)).cloned().unwrap_or_default(),
            std::cmp::Ordering::Greater => self
                .brackets
                .get(&(b, a))
                .map(|v| v.iter().map(|(k, c)| (*k, -c.clone())).collect())
                .unwrap_or_default(),
        }
    }

    pub fn bracket_combinations(&self, u: &Combination, v: &Combination) -> Combination {
        let mut out = Vec::new();
        for (a, ca) in u {
            for (b, cb) in v {
                for (k, c) in self.bracket(*a, *b) {
                    out.push((k, c * ca.clone() * cb.clone()));
                }
            }
        }
        normalize(out)
    }

    /// Matrix of `ad e_a` in the basis: column `b` holds `[e_a, e_b]`.
    pub fn ad_matrix(&self, a: usize) -> QMatrix {
        let n = self.dim();
        let mut m = QMatrix::zeros(n, n);
        for b in 0..n {
            for (k, c) in self.bracket(a, b) {
                m.set(k, b, c);
            }
        }
        m
    }

    /// `c^c_{ab}`.
    pub fn structure_constant(&self, c: usize, a: usize, b: usize) -> Rational {
        self.bracket(a, b)
            .into_iter()
            .find(|(k, _)| *k == c)
            .map_or_else(Rational::zero, |(_, v)| v)
    }

    /// Nonzero brackets `[e_a, e_b]`, `a < b`.
    pub fn nonzero_brackets(&self) -> impl Iterator<Item = (&(usize, usize), &Combination)> {
        self.brackets.iter()
    }

    pub fn check_jacobi(&self) -> Result<()> {
        let n = self.dim();
        let unit = |i: usize| vec![(i, Rational::one())];
        for a in 0..n {
            for b in a + 1..n {
                let ab = self.bracket(a, b);
                for c in b + 1..n {
                    let mut sum = self.bracket_combinations(&ab, &unit(c));
                    sum.extend(self.bracket_combinations(&self.bracket(b, c), &unit(a)));
                    sum.extend(self.bracket_combinations(&self.bracket(c, a), &unit(b)));
                    if !normalize(sum).is_empty() {
                        let l = |i: usize| self.basis[i].label.as_str();
                        return Err(Error::Internal(format!(
                            "Jacobi fails on ({}, {}, {}) in {}",
                            l(a),
                            l(b),
                            l(c),
                            self.name
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// `[𝔤_i, 𝔤_j] ⊂ 𝔤_{i+j}`, nothing below the deepest degree, and
    /// `𝔤₋₁` generates.
    pub fn check_graded(&self) -> Result<()> {
        for ((a, b), v) in &self.brackets {
            let d = self.basis[*a].degree + self.basis[*b].degree;
            if let Some((k, _)) = v.iter().find(|(k, _)| self.basis[*k].degree != d) {
                return Err(Error::Internal(format!(
                    "[{}, {}] has a component along {} of the wrong degree",
                    self.basis[*a].label, self.basis[*b].label, self.basis[*k].label
                )));
            }
        }
        // span of iterated brackets of 𝔤₋₁, degree by degree
        let mut level: Vec<Combination> = (0..self.dim())
            .filter(|&k| self.basis[k].degree == -1)
            .map(|k| vec![(k, Rational::one())])
            .collect();
        let g1 = level.clone();
        for j in 2..=self.depth() {
            let mut next = Vec::new();
            for u in &g1 {
                for v in &level {
                    let w = self.bracket_combinations(u, v);
                    if !w.is_empty() {
                        next.push(w);
                    }
                }
            }
            let want = self.basis.iter().filter(|b| b.degree == -j).count();
            if span_rank(&next, self.dim()) != want {
                return Err(Error::Internal(format!("𝔤₋₁ does not generate degree {} in {}", -j, self.name)));
            }
            level = next;
        }
        Ok(())
    }

    /// Whether `ad_X : 𝔶 → 𝔤₋₂` is a bijection.
    pub fn ad_bijection(&self, x: usize, y: &[usize]) -> bool {
        let target: Vec<usize> = (0..self.dim()).filter(|&k| self.basis[k].degree == -2).collect();
        if target.len() != y.len() {
            return false;
        }
        let images: Vec<Combination> = y.iter().map(|&b| self.bracket(x, b)).collect();
        span_rank(&images, self.dim()) == target.len()
    }

    pub fn dual_structure_equations(&self) -> Vec<StructureEquation> {
        (0..self.dim())
            .map(|c| {
                let mut terms = BTreeMap::new();
                for ((a, b), v) in &self.brackets {
                    if let Some((_, k)) = v.iter().find(|(i, _)| *i == c) {
                        terms.insert((*a, *b), -k.clone());
                    }
                }
                StructureEquation {
                    target: c,
                    terms,
                    names: self.coords(),
                }
            })
            .collect()
    }
}

/// Brackets `[A, B]` (by label, `A` before `B` in `left`) on which two
/// algebras with the same labelled basis differ.
pub fn bracket_mismatches(left: &GradedNilpotent, right: &GradedNilpotent) -> Result<Vec<String>> {
    let labels: Vec<&str> = left.basis.iter().map(|b| b.label.as_str()).collect();
    let others: Vec<&str> = right.basis.iter().map(|b| b.label.as_str()).collect();
    if labels != others {
        return Err(Error::Invalid(format!("{} and {} have different bases", left.name, right.name)));
    }
    let mut out = Vec::new();
    for a in 0..left.dim() {
        for b in a + 1..left.dim() {
            if left.bracket(a, b) != right.bracket(a, b) {
                out.push(format!("[{}, {}]", labels[a], labels[b]));
            }
        }
    }
    Ok(out)
}

fn span_rank(vs: &[Combination], n: usize) -> usize {
    let mut sys = QSystem::new((0..n).map(|i| i.to_string()).collect());
    for v in vs {
        sys.add_row(v.iter().cloned()).expect("indices in range");
    }
    sys.rank()
}

/// `dθ^target = Σ_{a<b} terms[(a,b)] θ^a ∧ θ^b`.
#[derive(Clone, Debug, PartialEq)]
pub struct StructureEquation {
    pub target: usize,
    pub terms: BTreeMap<(usize, usize), Rational>,
    /// Coordinate names of the coframe, for display.
    pub names: Vec<String>,
}

impl fmt::Display for StructureEquation {
    /// Each wedge is oriented so that its coefficient is positive, which is
    /// how the realizations are usually written: `dθ^y = θ^x ∧ θ^p`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let th = |i: usize| format!("θ^{}", self.names[i]);
        write!(f, "d{} = ", th(self.target))?;
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((a, b), c)| {
                let (first, second) = if c.is_positive() { (*a, *b) } else { (*b, *a) };
                let c = c.abs();
                let coef = if c.is_one() { String::new() } else { format!("{c} ") };
                format!("{coef}{} ∧ {}", th(first), th(second))
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// Root-vector basis of `𝔤₋` from the standard matrices, labelled `e[k]`
/// with coordinates `u{k}`, ordered by degree and then by root.
pub fn realize_negative_part(ma: &MatrixAlgebra, rs: &RootSystem, sigma: &Sigma) -> Result<GradedNilpotent> {
    let g = grade(rs, sigma)?;
    let mut basis = Vec::new();
    let mut roots: Vec<Root> = Vec::new();
    for j in 1..=g.depth {
        let mut level = g.level(j).to_vec();
        level.sort();
        for beta in level {
            let m = ma.root_space(&beta.neg())?;
            let k = basis.len() + 1;
            basis.push(BasisElement::new(&format!("e{k}"), &format!("u{k}"), -j).with_matrix(m));
            roots.push(beta.neg());
        }
    }
    let name = format!("{}{}", ma.spec.name(), sigma);
    GradedNilpotent::from_matrices(&name, basis)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{build_root_system, AlgebraSpec, Family};

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn table_and_structure_equations() {
        let basis = vec![
            BasisElement::new("P", "p", -1),
            BasisElement::new("X", "x", -1),
            BasisElement::new("Y", "y", -2),
        ];
        let g = GradedNilpotent::from_table("heis", basis, &[("P", "X", q(1), "Y")]).unwrap();
        assert_eq!(g.structure_constant(2, 1, 0), q(-1));
        g.check_jacobi().unwrap();
        g.check_graded().unwrap();
        let eq = g.dual_structure_equations();
        assert_eq!(eq[2].to_string(), "dθ^y = θ^x ∧ θ^p");
        assert_eq!(eq[0].to_string(), "dθ^p = 0");
        assert!(g.ad_bijection(1, &[0]));
    }

    #[test]
    fn generic_realizations_are_graded_lie_algebras() {
        for (f, l, s) in [
            (Family::A, 4, vec![1, 2, 3]),
            (Family::C, 3, vec![1, 2, 3]),
            (Family::B, 3, vec![2, 3]),
            (Family::D, 5, vec![1, 2]),
            (Family::B, 2, vec![2]),
        ] {
            let spec = AlgebraSpec::new(f, l).unwrap();
            let rs = build_root_system(spec).unwrap();
            let sigma = Sigma::one_based(l, &s).unwrap();
            let g = realize_negative_part(&build_matrix_algebra(spec).unwrap(), &rs, &sigma).unwrap();
            g.check_jacobi().unwrap();
            g.check_graded().unwrap();
            let info = grade(&rs, &sigma).unwrap();
            for (d, n) in g.degree_dims() {
                assert_eq!(n, info.dim(d), "{} degree {d}", g.name);
            }
        }
    }
}
