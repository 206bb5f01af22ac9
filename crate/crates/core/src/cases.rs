//! The non-rigid Monge gradings, by case label, and the canonical form used
//! to recognise them up to diagram symmetry and low-rank coincidences.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grading::Sigma;
use crate::rootsys::{AlgebraSpec, Family};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CaseId {
    Ia,
    Ib,
    IIa,
    IIb,
    IIIa,
    IIIb,
    IIIc,
    IIId,
    IVa,
    Va,
    Vb,
}

impl CaseId {
    pub const ALL: [CaseId; 11] = [
        CaseId::Ia,
        CaseId::Ib,
        CaseId::IIa,
        CaseId::IIb,
        CaseId::IIIa,
        CaseId::IIIb,
        CaseId::IIIc,
        CaseId::IIId,
        CaseId::IVa,
        CaseId::Va,
        CaseId::Vb,
    ];

    pub fn parse(s: &str) -> Result<CaseId> {
        CaseId::ALL
            .into_iter()
            .find(|c| c.label().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::Invalid(format!("unknown case {s:?}")))
    }

    pub fn label(self) -> &'static str {
        match self {
            CaseId::Ia => "Ia",
            CaseId::Ib => "Ib",
            CaseId::IIa => "IIa",
            CaseId::IIb => "IIb",
            CaseId::IIIa => "IIIa",
            CaseId::IIIb => "IIIb",
            CaseId::IIIc => "IIIc",
            CaseId::IIId => "IIId",
            CaseId::IVa => "IVa",
            CaseId::Va => "Va",
            CaseId::Vb => "Vb",
        }
    }

    pub fn family(self) -> Family {
        match self {
            CaseId::Ia | CaseId::Ib => Family::A,
            CaseId::IIa | CaseId::IIb => Family::C,
            CaseId::IIIa | CaseId::IIIb | CaseId::IIIc | CaseId::IIId => Family::B,
            CaseId::IVa => Family::D,
            CaseId::Va | CaseId::Vb => Family::G,
        }
    }

    /// Smallest rank, and the largest if the case is a single algebra.
    pub fn rank_range(self) -> (usize, Option<usize>) {
        match self {
            CaseId::Ia => (3, None),
            CaseId::Ib => (2, None),
            CaseId::IIa => (3, None),
            CaseId::IIb => (3, Some(3)),
            CaseId::IIIa => (2, None),
            CaseId::IIIb => (2, Some(2)),
            CaseId::IIIc | CaseId::IIId => (3, Some(3)),
            CaseId::IVa => (4, None),
            CaseId::Va | CaseId::Vb => (2, Some(2)),
        }
    }

    /// A rank at which the case is realized: the fixed rank, or `hint` if allowed.
    pub fn rank_or(self, hint: usize) -> Result<usize> {
        let (lo, hi) = self.rank_range();
        match hi {
            Some(h) if h == lo => Ok(lo),
            _ if hint >= lo && hi.is_none_or(|h| hint <= h) => Ok(hint),
            _ => Err(Error::Invalid(format!("{} needs rank ≥ {lo}, got {hint}", self.label()))),
        }
    }

    /// Σ as 1-based indices at rank `l`.
    pub fn sigma_one_based(self, l: usize) -> Vec<usize> {
        match self {
            CaseId::Ia | CaseId::IIb | CaseId::IIId => vec![1, 2, 3],
            CaseId::Ib | CaseId::IIIa | CaseId::IVa | CaseId::Vb => vec![1, 2],
            CaseId::IIa => vec![l - 1, l],
            CaseId::IIIb => vec![2],
            CaseId::IIIc => vec![2, 3],
            CaseId::Va => vec![1],
        }
    }

    pub fn spec_and_sigma(self, l: usize) -> Result<(AlgebraSpec, Sigma)> {
        let l = self.rank_or(l)?;
        let spec = AlgebraSpec::new(self.family(), l)?;
        Ok((spec, Sigma::one_based(l, &self.sigma_one_based(l))?))
    }

    /// Cases whose first cohomology has a class of non-negative weight.
    pub fn has_h1_at_rank(self, l: usize) -> bool {
        matches!(self, CaseId::Ib | CaseId::IIIb) || (self == CaseId::IIIa && l == 2)
    }
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Diagram automorphisms as permutations of 0-based node indices.
fn automorphisms(spec: AlgebraSpec) -> Vec<Vec<usize>> {
    let l = spec.rank;
    let id: Vec<usize> = (0..l).collect();
    let mut out = vec![id.clone()];
    match spec.family {
        Family::A if l > 1 => out.push((0..l).rev().collect()),
        Family::D if l == 4 => {
            // center α2, leaves α1, α3, α4
            for p in [[0, 3, 2], [2, 0, 3], [2, 3, 0], [3, 0, 2], [3, 2, 0]] {
                out.push(vec![p[0], 1, p[1], p[2]]);
            }
        }
        Family::D if l > 4 => {
            let mut p = id;
            p.swap(l - 2, l - 1);
            out.push(p);
        }
        Family::E if l == 6 => out.push(vec![5, 1, 4, 3, 2, 0]),
        _ => {}
    }
    out
}

/// Canonical representative of (algebra, Σ): C2 is rewritten as B2, D3 as A3,
/// and Σ is the lexicographically least image under diagram automorphisms.
pub fn canonical_form(spec: AlgebraSpec, sigma: &Sigma) -> Result<(AlgebraSpec, Sigma)> {
    let (spec, idx): (AlgebraSpec, Vec<usize>) = match (spec.family, spec.rank) {
        (Family::C, 2) => (AlgebraSpec::new(Family::B, 2)?, sigma.indices().iter().map(|&i| 1 - i).collect()),
        (Family::D, 3) => {
            let to_a = [1, 0, 2];
            (AlgebraSpec::new(Family::A, 3)?, sigma.indices().iter().map(|&i| to_a[i]).collect())
        }
        _ => (spec, sigma.indices().to_vec()),
    };
    let best = automorphisms(spec)
        .into_iter()
        .map(|p| {
            let mut v: Vec<usize> = idx.iter().map(|&i| p[i]).collect();
            v.sort_unstable();
            v
        })
        .min()
        .unwrap();
    Ok((spec, Sigma::new(spec.rank, best)?))
}

/// The case label of (algebra, Σ), if it is one of the non-rigid Monge gradings.
pub fn classify(spec: AlgebraSpec, sigma: &Sigma) -> Result<Option<(CaseId, usize)>> {
    let (spec, sigma) = canonical_form(spec, sigma)?;
    let l = spec.rank;
    for case in CaseId::ALL {
        if case.family() != spec.family || case.rank_or(l).ok() != Some(l) {
            continue;
        }
        if sigma.one_based_indices() == case.sigma_one_based(l) {
            return Ok(Some((case, l)));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(f: Family, l: usize) -> AlgebraSpec {
        AlgebraSpec::new(f, l).unwrap()
    }

    #[test]
    fn reversed_a_labels() {
        let s = Sigma::one_based(6, &[4, 5, 6]).unwrap();
        assert_eq!(classify(sp(Family::A, 6), &s).unwrap(), Some((CaseId::Ia, 6)));
    }

    #[test]
    fn low_rank_coincidences() {
        let c2 = Sigma::one_based(2, &[1]).unwrap();
        assert_eq!(classify(sp(Family::C, 2), &c2).unwrap(), Some((CaseId::IIIb, 2)));
        let d3 = Sigma::one_based(3, &[1, 2]).unwrap();
        assert_eq!(classify(sp(Family::D, 3), &d3).unwrap(), Some((CaseId::Ib, 3)));
        let d4 = Sigma::one_based(4, &[2, 4]).unwrap();
        assert_eq!(classify(sp(Family::D, 4), &d4).unwrap(), Some((CaseId::IVa, 4)));
    }

    #[test]
    fn fixed_rank_cases() {
        assert!(CaseId::IIb.rank_or(5).is_ok());
        assert_eq!(CaseId::IIb.rank_or(5).unwrap(), 3);
        assert!(CaseId::IVa.rank_or(3).is_err());
        let (spec, sigma) = CaseId::IIa.spec_and_sigma(4).unwrap();
        assert_eq!((spec.name(), sigma.one_based_indices()), ("C4".to_string(), vec![3, 4]));
        assert_eq!(CaseId::parse("iiid").unwrap(), CaseId::IIId);
    }
}
