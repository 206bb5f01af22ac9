//! Root systems of the simple Lie algebras.
//!
//! Simple roots follow the Bourbaki numbering: `B_ℓ` has `α_ℓ` short,
//! `C_ℓ` has `α_ℓ` long, `D_ℓ` forks at `α_{ℓ-1}, α_ℓ`, `G_2` has `α_1`
//! short and `F_4` has `α_1, α_2` long. Indices are 0-based in code.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn parse(s: &str) -> Result<Family> {
        Ok(match s.trim().to_ascii_uppercase().as_str() {
            "A" => Family::A,
            "B" => Family::B,
            "C" => Family::C,
            "D" => Family::D,
            "E" => Family::E,
            "F" => Family::F,
            "G" => Family::G,
            other => return Err(Error::InvalidSpec(format!("unknown family {other}"))),
        })
    }

    pub const ALL: [Family; 7] = [Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G];
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AlgebraSpec {
    pub family: Family,
    pub rank: usize,
}

impl AlgebraSpec {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(AlgebraSpec { family, rank })
        } else {
            Err(Error::InvalidSpec(format!("{family}{rank} is not a simple Lie algebra")))
        }
    }

    /// Every valid spec with rank in `lo..=hi`.
    pub fn all_in_rank_range(lo: usize, hi: usize) -> Vec<AlgebraSpec> {
        let mut out = Vec::new();
        for fam in Family::ALL {
            for r in lo..=hi {
                if let Ok(s) = AlgebraSpec::new(fam, r) {
                    out.push(s);
                }
            }
        }
        out
    }

    pub fn cartan_matrix(&self) -> (Vec<Vec<i64>>, Vec<i64>) {
        let l = self.rank;
        let mut a = vec![vec![0i64; l]; l];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize, aij: i64, aji: i64| {
            a[i][j] = aij;
            a[j][i] = aji;
        };
        let mut d = vec![1i64; l];
        match self.family {
            Family::A => (0..l - 1).for_each(|i| link(i, i + 1, -1, -1)),
            Family::B => {
                (0..l - 2).for_each(|i| link(i, i + 1, -1, -1));
                link(l - 2, l - 1, -2, -1);
                d = vec![2; l];
                d[l - 1] = 1;
            }
            Family::C => {
                (0..l - 2).for_each(|i| link(i, i + 1, -1, -1));
                link(l - 2, l - 1, -1, -2);
                d[l - 1] = 2;
            }
            Family::D => {
                (0..l - 2).for_each(|i| link(i, i + 1, -1, -1));
                link(l - 3, l - 1, -1, -1);
            }
            Family::E => {
                for (i, j) in [(0, 2), (2, 3), (3, 4), (1, 3)] {
                    link(i, j, -1, -1);
                }
                (4..l - 1).for_each(|i| link(i, i + 1, -1, -1));
            }
            Family::F => {
                link(0, 1, -1, -1);
                link(1, 2, -2, -1);
                link(2, 3, -1, -1);
                d = vec![2, 2, 1, 1];
            }
            Family::G => {
                link(0, 1, -1, -3);
                d = vec![1, 3];
            }
        }
        (a, d)
    }

    pub fn name(&self) -> String {
        format!("{}{}", self.family, self.rank)
    }
}

impl fmt::Display for AlgebraSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

/// Integer coordinates over the simple roots.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Root(pub Vec<i64>);

impl Root {
    pub fn simple(rank: usize, i: usize) -> Root {
        let mut v = vec![0; rank];
        v[i] = 1;
        Root(v)
    }

    pub fn zero(rank: usize) -> Root {
        Root(vec![0; rank])
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn neg(&self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }

    pub fn add(&self, o: &Root) -> Root {
        Root(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, o: &Root) -> Root {
        Root(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }

    pub fn scaled(&self, k: i64) -> Root {
        Root(self.0.iter().map(|c| c * k).collect())
    }
}

impl fmt::Display for Root {
    /// `α1 + 2α2`, with 1-based indices.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mag = c.abs();
            let body = if mag == 1 { format!("α{}", i + 1) } else { format!("{mag}α{}", i + 1) };
            match (first, c < 0) {
                (true, false) => write!(f, "{body}")?,
                (true, true) => write!(f, "-{body}")?,
                (false, false) => write!(f, " + {body}")?,
                (false, true) => write!(f, " - {body}")?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    spec: Option<AlgebraSpec>,
    cartan: Vec<Vec<i64>>,
    sym: Vec<i64>,
    positive: Vec<Root>,
    index: HashMap<Vec<i64>, usize>,
    highest: Root,
}

pub fn build_root_system(spec: AlgebraSpec) -> Result<RootSystem> {
    let spec = AlgebraSpec::new(spec.family, spec.rank)?;
    let (a, d) = spec.cartan_matrix();
    let mut rs = RootSystem::from_cartan(a, d)?;
    rs.spec = Some(spec);
    Ok(rs)
}

impl RootSystem {
    /// Root system of a (possibly non-standard or decomposable) Cartan
    /// matrix with `cartan[i][j] = ⟨α_i, α_j⟩` and symmetrizer `d`
    /// proportional to squared lengths.
    pub fn from_cartan(cartan: Vec<Vec<i64>>, sym: Vec<i64>) -> Result<RootSystem> {
        let l = cartan.len();
        if l == 0 || sym.len() != l || cartan.iter().any(|r| r.len() != l) {
            return Err(Error::InvalidSpec("malformed Cartan matrix".into()));
        }
        for i in 0..l {
            if cartan[i][i] != 2 || sym[i] <= 0 {
                return Err(Error::InvalidSpec("Cartan diagonal must be 2".into()));
            }
            for j in 0..l {
                if cartan[i][j] * sym[j] != cartan[j][i] * sym[i] {
                    return Err(Error::InvalidSpec("Cartan matrix not symmetrizable by d".into()));
                }
            }
        }
        let mut positive: Vec<Root> = (0..l).map(|i| Root::simple(l, i)).collect();
        let mut index: HashMap<Vec<i64>, usize> =
            positive.iter().enumerate().map(|(k, r)| (r.0.clone(), k)).collect();
        let mut level: Vec<Root> = positive.clone();
        let pair = |v: &[i64], i: usize| -> i64 { (0..l).map(|j| v[j] * cartan[j][i]).sum() };
        while !level.is_empty() {
            let mut next: Vec<Root> = Vec::new();
            for beta in &level {
                for i in 0..l {
                    if beta.0 == Root::simple(l, i).0 {
                        continue;
                    }
                    // α_i-string through β: p steps down, q = p - ⟨β, α_i⟩ steps up.
                    let mut p = 0;
                    let mut down = beta.clone();
                    loop {
                        down.0[i] -= 1;
                        if down.0[i] >= 0 && index.contains_key(&down.0) {
                            p += 1;
                        } else {
                            break;
                        }
                    }
                    if p - pair(&beta.0, i) > 0 {
                        let mut up = beta.clone();
                        up.0[i] += 1;
                        if !index.contains_key(&up.0) {
                            index.insert(up.0.clone(), positive.len());
                            positive.push(up.clone());
                            next.push(up);
                        }
                    }
                }
            }
            level = next;
        }
        positive.sort_by(|a, b| (a.height(), &a.0).cmp(&(b.height(), &b.0)));
        let index: HashMap<Vec<i64>, usize> =
            positive.iter().enumerate().map(|(k, r)| (r.0.clone(), k)).collect();
        let max_h = positive.iter().map(Root::height).max().unwrap();
        // Unique for simple systems; for decomposable ones this is the first
        // maximal root.
        let highest = positive.iter().find(|r| r.height() == max_h).unwrap().clone();
        Ok(RootSystem {
            spec: None,
            cartan,
            sym,
            positive,
            index,
            highest,
        })
    }

    pub fn spec(&self) -> Option<AlgebraSpec> {
        self.spec
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn symmetrizer(&self) -> &[i64] {
        &self.sym
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    /// Positive roots followed by their negatives.
    pub fn roots(&self) -> Vec<Root> {
        let mut out = self.positive.clone();
        out.extend(self.positive.iter().map(Root::neg));
        out
    }

    pub fn highest_root(&self) -> &Root {
        &self.highest
    }

    pub fn dim(&self) -> usize {
        self.rank() + 2 * self.positive.len()
    }

    pub fn simple_root(&self, i: usize) -> Root {
        Root::simple(self.rank(), i)
    }

    pub fn is_root(&self, beta: &Root) -> bool {
        beta.0.len() == self.rank()
            && (self.index.contains_key(&beta.0) || self.index.contains_key(&beta.neg().0))
    }

    pub fn positive_index(&self, beta: &Root) -> Option<usize> {
        self.index.get(&beta.0).copied()
    }

    /// `⟨v, α_i⟩` for any vector of the root lattice.
    pub fn pairing(&self, v: &Root, i: usize) -> i64 {
        (0..self.rank()).map(|j| v.0[j] * self.cartan[j][i]).sum()
    }

    pub fn cartan_integer(&self, beta: &Root, i: usize) -> Result<i64> {
        if i >= self.rank() {
            return Err(Error::Invalid(format!("simple root index {i} out of range")));
        }
        if !self.is_root(beta) {
            return Err(Error::NotARoot(beta.to_string()));
        }
        Ok(self.pairing(beta, i))
    }

    /// `s_i(v) = v - ⟨v, α_i⟩ α_i`.
    pub fn reflect(&self, v: &Root, i: usize) -> Root {
        let mut out = v.clone();
        out.0[i] -= self.pairing(v, i);
        out
    }

    /// Apply the word `[i_1, …, i_k]` as `s_{i_1} ∘ ⋯ ∘ s_{i_k}`.
    pub fn weyl_apply(&self, word: &[usize], beta: &Root) -> Result<Root> {
        if !self.is_root(beta) {
            return Err(Error::NotARoot(beta.to_string()));
        }
        if let Some(&i) = word.iter().find(|&&i| i >= self.rank()) {
            return Err(Error::Invalid(format!("simple root index {i} out of range")));
        }
        Ok(word.iter().rev().fold(beta.clone(), |v, &i| self.reflect(&v, i)))
    }

    /// Squared length in units where the symmetrizer gives simple lengths.
    pub fn norm2(&self, v: &Root) -> i64 {
        let l = self.rank();
        let mut s = 0;
        for i in 0..l {
            for j in 0..l {
                // (α_i, α_j) = cartan[i][j] * d_j / 2
                s += v.0[i] * v.0[j] * self.cartan[i][j] * self.sym[j];
            }
        }
        s / 2
    }

    pub fn is_long(&self, beta: &Root) -> bool {
        let max = self.sym.iter().copied().max().unwrap();
        self.norm2(beta) == max
    }

    pub fn is_long_simple(&self, i: usize) -> bool {
        self.sym[i] == *self.sym.iter().max().unwrap()
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        i != j && self.cartan[i][j] != 0
    }

    pub fn neighbors(&self, i: usize) -> Vec<usize> {
        (0..self.rank()).filter(|&j| self.adjacent(i, j)).collect()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let l = self.rank();
        (0..l)
            .flat_map(|i| (i + 1..l).map(move |j| (i, j)))
            .filter(|&(i, j)| self.adjacent(i, j))
            .collect()
    }

    /// Connected components of the diagram restricted to `nodes`, each sorted.
    pub fn components(&self, nodes: &[usize]) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.rank()];
        let member: Vec<bool> = (0..self.rank()).map(|i| nodes.contains(&i)).collect();
        let mut out = Vec::new();
        for &start in nodes {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut k = 0;
            while k < comp.len() {
                let v = comp[k];
                for w in self.neighbors(v) {
                    if member[w] && !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
                k += 1;
            }
            comp.sort();
            out.push(comp);
        }
        out.sort();
        out
    }

    /// Root system of the subdiagram on `nodes` (in the given order).
    pub fn subsystem(&self, nodes: &[usize]) -> Result<RootSystem> {
        let cartan = nodes
            .iter()
            .map(|&i| nodes.iter().map(|&j| self.cartan[i][j]).collect())
            .collect();
        let sym = nodes.iter().map(|&i| self.sym[i]).collect();
        RootSystem::from_cartan(cartan, sym)
    }

    /// Cartan type of a connected subdiagram.
    pub fn component_type(&self, nodes: &[usize]) -> (Family, usize) {
        let m = nodes.len();
        let deg = |i: usize| nodes.iter().filter(|&&j| self.adjacent(i, j)).count();
        let mut max_bond = 1;
        for &i in nodes {
            for &j in nodes {
                if self.adjacent(i, j) {
                    max_bond = max_bond.max(self.cartan[i][j] * self.cartan[j][i]);
                }
            }
        }
        if max_bond == 3 {
            return (Family::G, 2);
        }
        if let Some(&branch) = nodes.iter().find(|&&i| deg(i) == 3) {
            let mut arms: Vec<usize> = nodes
                .iter()
                .filter(|&&j| self.adjacent(branch, j))
                .map(|&first| {
                    let (mut prev, mut cur, mut len) = (branch, first, 1);
                    loop {
                        let next = nodes.iter().copied().find(|&k| k != prev && self.adjacent(cur, k));
                        match next {
                            Some(k) => {
                                prev = cur;
                                cur = k;
                                len += 1;
                            }
                            None => break len,
                        }
                    }
                })
                .collect();
            arms.sort();
            return if arms[1] == 1 { (Family::D, m) } else { (Family::E, m) };
        }
        if max_bond == 2 {
            let longest = nodes.iter().map(|&i| self.sym[i]).max().unwrap();
            let n_short = nodes.iter().filter(|&&i| self.sym[i] < longest).count();
            if m == 4 && n_short == 2 {
                let ends_double = nodes.iter().any(|&i| {
                    deg(i) == 1 && nodes.iter().any(|&j| self.adjacent(i, j) && self.cartan[i][j] * self.cartan[j][i] == 2)
                });
                if !ends_double {
                    return (Family::F, 4);
                }
            }
            return if n_short == 1 { (Family::B, m) } else { (Family::C, m) };
        }
        (Family::A, m)
    }
}

/// `ℓ(ℓ+1)/2`, `ℓ²`, `ℓ(ℓ-1)` and the exceptional counts.
pub fn positive_root_count(spec: AlgebraSpec) -> usize {
    let l = spec.rank;
    match spec.family {
        Family::A => l * (l + 1) / 2,
        Family::B | Family::C => l * l,
        Family::D => l * (l - 1),
        Family::E => [36, 63, 120][l - 6],
        Family::F => 24,
        Family::G => 6,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(f: Family, l: usize) -> RootSystem {
        build_root_system(AlgebraSpec::new(f, l).unwrap()).unwrap()
    }

    #[test]
    fn small_examples() {
        assert_eq!(rs(Family::A, 3).positive_roots().len(), 6);
        let g2 = rs(Family::G, 2);
        assert_eq!(g2.positive_roots().len(), 6);
        assert_eq!(g2.highest_root(), &Root(vec![3, 2]));
        let b4 = rs(Family::B, 4);
        assert_eq!(b4.positive_roots().len(), 16);
        assert_eq!(b4.highest_root(), &Root(vec![1, 2, 2, 2]));
    }

    #[test]
    fn rank_bounds() {
        assert!(AlgebraSpec::new(Family::B, 1).is_err());
        assert!(AlgebraSpec::new(Family::D, 2).is_err());
        assert!(AlgebraSpec::new(Family::E, 5).is_err());
        assert!(AlgebraSpec::new(Family::F, 3).is_err());
        assert!(AlgebraSpec::new(Family::G, 3).is_err());
    }

    #[test]
    fn cartan_integers() {
        let g2 = rs(Family::G, 2);
        for i in 0..2 {
            assert_eq!(g2.cartan_integer(&g2.simple_root(i), i).unwrap(), 2);
        }
        // G2: ⟨θ, α2⟩ = 1, ⟨θ, α1⟩ = 0
        let theta = g2.highest_root().clone();
        assert_eq!(g2.cartan_integer(&theta, 1).unwrap(), 1);
        assert_eq!(g2.cartan_integer(&theta, 0).unwrap(), 0);
        assert!(matches!(g2.cartan_integer(&Root(vec![1, 1]).scaled(2), 0), Err(Error::NotARoot(_))));
    }

    #[test]
    fn reflections() {
        let a2 = rs(Family::A, 2);
        let a1 = a2.simple_root(0);
        assert_eq!(a2.weyl_apply(&[0], &a1).unwrap(), a1.neg());
        // s1 s2 (α1) = s1(α1 + α2) = α2
        assert_eq!(a2.weyl_apply(&[0, 1], &a1).unwrap(), a2.simple_root(1));
    }

    #[test]
    fn lengths_and_types() {
        let b3 = rs(Family::B, 3);
        assert!(b3.is_long_simple(0) && !b3.is_long_simple(2));
        assert!(b3.is_long(b3.highest_root()));
        assert_eq!(b3.component_type(&[1, 2]), (Family::B, 2));
        assert_eq!(b3.component_type(&[0, 1]), (Family::A, 2));
        let c4 = rs(Family::C, 4);
        assert_eq!(c4.component_type(&[1, 2, 3]), (Family::C, 3));
        let f4 = rs(Family::F, 4);
        assert_eq!(f4.component_type(&[0, 1, 2, 3]), (Family::F, 4));
        assert_eq!(f4.component_type(&[1, 2, 3]), (Family::C, 3));
        let e7 = rs(Family::E, 7);
        assert_eq!(e7.component_type(&[0, 1, 2, 3, 4, 5]), (Family::E, 6));
        assert_eq!(e7.component_type(&[1, 2, 3, 4, 5, 6]), (Family::D, 6));
        let d5 = rs(Family::D, 5);
        assert_eq!(d5.component_type(&[2, 3, 4]), (Family::A, 3));
    }

    #[test]
    fn closure_is_consistent() {
        for spec in AlgebraSpec::all_in_rank_range(1, 8) {
            let r = build_root_system(spec).unwrap();
            assert_eq!(r.positive_roots().len(), positive_root_count(spec), "{spec}");
            let theta = r.highest_root();
            assert!((0..r.rank()).all(|i| r.pairing(theta, i) >= 0), "{spec}");
            // every reflection permutes the roots
            for beta in r.roots() {
                for i in 0..r.rank() {
                    assert!(r.is_root(&r.reflect(&beta, i)));
                }
            }
        }
    }
}
