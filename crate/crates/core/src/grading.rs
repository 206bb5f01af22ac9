//! Gradings of a simple Lie algebra defined by a set Σ of simple roots.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::{Root, RootSystem};

/// A nonempty set of simple-root indices (0-based, sorted).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Sigma(Vec<usize>);

impl Sigma {
    pub fn new(rank: usize, mut idx: Vec<usize>) -> Result<Sigma> {
        idx.sort_unstable();
        idx.dedup();
        if idx.is_empty() {
            return Err(Error::InvalidSigma("Σ must be nonempty".into()));
        }
        if let Some(&i) = idx.iter().find(|&&i| i >= rank) {
            return Err(Error::InvalidSigma(format!("α{} out of range for rank {rank}", i + 1)));
        }
        Ok(Sigma(idx))
    }

    /// From the 1-based numbering used in the literature.
    pub fn one_based(rank: usize, idx: &[usize]) -> Result<Sigma> {
        if idx.contains(&0) {
            return Err(Error::InvalidSigma("indices are 1-based".into()));
        }
        Sigma::new(rank, idx.iter().map(|i| i - 1).collect())
    }

    pub fn parse(rank: usize, s: &str) -> Result<Sigma> {
        let idx = s
            .split(',')
            .filter(|t| !t.trim().is_empty())
            .map(|t| t.trim().parse::<usize>().map_err(|_| Error::InvalidSigma(format!("bad index {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Sigma::one_based(rank, &idx)
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.binary_search(&i).is_ok()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn one_based_indices(&self) -> Vec<usize> {
        self.0.iter().map(|i| i + 1).collect()
    }
}

impl fmt::Display for Sigma {
    /// `{α1, α2}`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|i| format!("α{}", i + 1)).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// `ht_Σ(β) = Σ_{α ∈ Σ} n_α`.
pub fn ht(sigma: &Sigma, beta: &Root) -> i64 {
    sigma.0.iter().map(|&i| beta.0[i]).sum()
}

#[derive(Clone, Debug)]
pub struct GradingInfo {
    pub sigma: Sigma,
    pub depth: i64,
    /// Roots of Σ-height `j` for `j ∈ [-k, k]`; `j = 0` holds both signs.
    pub components: BTreeMap<i64, Vec<Root>>,
    pub dims: BTreeMap<i64, usize>,
}

impl GradingInfo {
    pub fn dim(&self, j: i64) -> usize {
        self.dims.get(&j).copied().unwrap_or(0)
    }

    /// Positive roots of height `j ≥ 1`.
    pub fn level(&self, j: i64) -> &[Root] {
        self.components.get(&j).map(Vec::as_slice).unwrap_or(&[])
    }
}

pub fn grade(rs: &RootSystem, sigma: &Sigma) -> Result<GradingInfo> {
    if sigma.0.iter().any(|&i| i >= rs.rank()) {
        return Err(Error::InvalidSigma("index out of range".into()));
    }
    let depth = ht(sigma, rs.highest_root());
    let mut components: BTreeMap<i64, Vec<Root>> = (-depth..=depth).map(|j| (j, Vec::new())).collect();
    for beta in rs.positive_roots() {
        let h = ht(sigma, beta);
        components.get_mut(&h).unwrap().push(beta.clone());
        components.get_mut(&-h).unwrap().push(beta.neg());
    }
    let dims = components
        .iter()
        .map(|(&j, v)| (j, if j == 0 { v.len() + rs.rank() } else { v.len() }))
        .collect();
    Ok(GradingInfo {
        sigma: sigma.clone(),
        depth,
        components,
        dims,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{build_root_system, AlgebraSpec, Family};

    fn rs(f: Family, l: usize) -> RootSystem {
        build_root_system(AlgebraSpec::new(f, l).unwrap()).unwrap()
    }

    #[test]
    fn g2_short_root_grading() {
        let g = grade(&rs(Family::G, 2), &Sigma::one_based(2, &[1]).unwrap()).unwrap();
        assert_eq!(g.depth, 3);
        assert_eq!((g.dim(-1), g.dim(-2), g.dim(-3)), (2, 1, 2));
    }

    #[test]
    fn contact_grading_of_c3() {
        let g = grade(&rs(Family::C, 3), &Sigma::one_based(3, &[2, 3]).unwrap()).unwrap();
        assert_eq!(g.depth, 3);
        assert_eq!(g.dim(-1), 3);
        let total: usize = g.dims.values().sum();
        assert_eq!(total, 21);
    }

    #[test]
    fn symmetric_and_complete() {
        for spec in AlgebraSpec::all_in_rank_range(1, 6) {
            let r = build_root_system(spec).unwrap();
            for mask in 1u32..(1 << r.rank()) {
                let idx: Vec<usize> = (0..r.rank()).filter(|i| mask >> i & 1 == 1).collect();
                let g = grade(&r, &Sigma::new(r.rank(), idx).unwrap()).unwrap();
                for j in 1..=g.depth {
                    assert_eq!(g.dim(j), g.dim(-j));
                    assert!(g.dim(j) > 0);
                }
                assert_eq!(g.dims.values().sum::<usize>(), r.dim());
            }
        }
    }

    #[test]
    fn empty_sigma_rejected() {
        assert!(matches!(Sigma::new(3, vec![]), Err(Error::InvalidSigma(_))));
        assert!(Sigma::parse(3, "1,4").is_err());
        assert_eq!(Sigma::parse(3, "3, 1").unwrap().indices(), &[0, 2]);
    }
}
