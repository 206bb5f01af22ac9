//! Gradings of Monge type.
//!
//! A grading is of Monge type when `𝔤₋₁` contains a codimension-one abelian
//! subalgebra `𝔶` with `dim 𝔤₋₂ = dim 𝔶`. The classifier below works on the
//! Dynkin diagram: rank-two gradings with `dim 𝔤₋₁ = 2` are decided by the
//! explicit list, all others by a leader `ζ ∈ Σ` with `Σ = {ζ} ∪ N(ζ)` whose
//! branches are `|1|`-graded.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::grading::{grade, Sigma};
use crate::rootsys::{Family, Root, RootSystem};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchComponent {
    /// The root `α ∈ Σ \ {ζ}` lying in this branch.
    pub root: usize,
    pub nodes: Vec<usize>,
    pub family: Family,
    pub rank: usize,
    pub one_graded: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MongeVerdict {
    pub is_monge: bool,
    pub leader: Option<usize>,
    pub branches: Vec<BranchComponent>,
    /// Roots `β` with `e_{-β}` spanning `𝔶`.
    pub y_roots: Vec<Root>,
    pub dim_g1: usize,
}

/// Branches of the diagram with `ζ` removed, if they correspond one-to-one
/// with `Σ \ {ζ}`.
pub fn branch_components(rs: &RootSystem, sigma: &Sigma, zeta: usize) -> Result<Option<Vec<BranchComponent>>> {
    let rest: Vec<usize> = (0..rs.rank()).filter(|&i| i != zeta).collect();
    let comps = rs.components(&rest);
    let others: Vec<usize> = sigma.indices().iter().copied().filter(|&i| i != zeta).collect();
    if comps.len() != others.len() {
        return Ok(None);
    }
    let mut out = Vec::new();
    for comp in comps {
        let inside: Vec<usize> = others.iter().copied().filter(|a| comp.contains(a)).collect();
        if inside.len() != 1 {
            return Ok(None);
        }
        let alpha = inside[0];
        let sub = rs.subsystem(&comp)?;
        let local = comp.iter().position(|&i| i == alpha).unwrap();
        let g = grade(&sub, &Sigma::new(comp.len(), vec![local])?)?;
        let (family, rank) = rs.component_type(&comp);
        out.push(BranchComponent {
            root: alpha,
            nodes: comp,
            family,
            rank,
            one_graded: g.depth == 1,
        });
    }
    Ok(Some(out))
}

fn rank_two_list(rs: &RootSystem, sigma: &Sigma) -> bool {
    let all: Vec<usize> = (0..rs.rank()).collect();
    if rs.rank() != 2 || rs.components(&all).len() != 1 {
        return false;
    }
    let (family, _) = rs.component_type(&all);
    let whole = sigma.len() == 2;
    let short_single = sigma.len() == 1 && !rs.is_long_simple(sigma.indices()[0]);
    match family {
        // A2{α1,α2}
        Family::A => whole,
        // B2{α2}, B2{α1,α2} (and their C2 relabelings), G2{α1}, G2{α1,α2}
        Family::B | Family::C | Family::G => whole || short_single,
        _ => false,
    }
}

pub fn is_monge(rs: &RootSystem, sigma: &Sigma) -> Result<MongeVerdict> {
    let g = grade(rs, sigma)?;
    let g1: Vec<Root> = g.level(1).to_vec();
    let mut verdict = MongeVerdict {
        is_monge: false,
        leader: None,
        branches: Vec::new(),
        y_roots: Vec::new(),
        dim_g1: g1.len(),
    };
    if g1.len() < 2 {
        return Ok(verdict);
    }
    if g1.len() == 2 {
        if rank_two_list(rs, sigma) {
            // 𝔶 is any line; take the root not equal to the first simple root of Σ.
            let zeta = sigma.indices()[0];
            verdict.is_monge = true;
            verdict.leader = Some(zeta);
            verdict.y_roots = g1.into_iter().filter(|r| *r != rs.simple_root(zeta)).collect();
        }
        return Ok(verdict);
    }
    for &zeta in sigma.indices() {
        let adjacent_to_all = sigma.indices().iter().all(|&a| a == zeta || rs.adjacent(a, zeta));
        if !adjacent_to_all {
            continue;
        }
        let Some(branches) = branch_components(rs, sigma, zeta)? else {
            continue;
        };
        if branches.iter().all(|b| b.one_graded) {
            verdict.is_monge = true;
            verdict.leader = Some(zeta);
            verdict.y_roots = g1.iter().filter(|r| **r != rs.simple_root(zeta)).cloned().collect();
            verdict.branches = branches;
            return Ok(verdict);
        }
    }
    Ok(verdict)
}

/// Monge gradings, found by running over leaders (and over all subsets in
/// rank two). Sorted by Σ.
pub fn enumerate_monge(rs: &RootSystem) -> Result<Vec<(Sigma, usize)>> {
    let l = rs.rank();
    let candidates: Vec<Sigma> = if l == 2 {
        vec![Sigma::new(2, vec![0])?, Sigma::new(2, vec![1])?, Sigma::new(2, vec![0, 1])?]
    } else {
        (0..l)
            .map(|z| {
                let mut s = rs.neighbors(z);
                s.push(z);
                Sigma::new(l, s)
            })
            .collect::<Result<_>>()?
    };
    let mut out: Vec<(Sigma, usize)> = Vec::new();
    for s in candidates {
        let v = is_monge(rs, &s)?;
        if v.is_monge && !out.iter().any(|(t, _)| *t == s) {
            out.push((s, v.leader.unwrap()));
        }
    }
    out.sort();
    Ok(out)
}

/// The leader condition together with the presence of a long root in Σ.
pub fn long_root_criterion(rs: &RootSystem, sigma: &Sigma) -> bool {
    let leader_ok = sigma.indices().iter().any(|&z| {
        let mut s = rs.neighbors(z);
        s.push(z);
        s.sort();
        s == sigma.indices()
    });
    leader_ok && sigma.indices().iter().any(|&i| rs.is_long_simple(i))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleResult {
    pub is_monge: bool,
    pub leader: Option<usize>,
    /// `|Δ²_Σ| = |𝔶|` for the accepted leader.
    pub dim_equality: bool,
    /// `ζ + β ∈ Δ` for every `β ∈ 𝔶` for the accepted leader.
    pub ad_isomorphism: bool,
}

/// Direct check of the definition over root-space decompositions
/// `𝔤₋₁ = 𝔤_{-ζ} ⊕ 𝔶` with `ζ ∈ Σ`.
pub fn structural_monge_oracle(rs: &RootSystem, sigma: &Sigma) -> Result<OracleResult> {
    let g = grade(rs, sigma)?;
    let d1 = g.level(1);
    let d2 = g.level(2);
    for &zeta in sigma.indices() {
        let z = rs.simple_root(zeta);
        let y: Vec<&Root> = d1.iter().filter(|r| **r != z).collect();
        if y.is_empty() {
            continue;
        }
        let abelian = y.iter().all(|a| y.iter().all(|b| !rs.is_root(&a.add(b))));
        let dim_equality = d2.len() == y.len();
        let ad_isomorphism = y.iter().all(|b| rs.is_root(&z.add(b)));
        if abelian && dim_equality {
            return Ok(OracleResult {
                is_monge: true,
                leader: Some(zeta),
                dim_equality,
                ad_isomorphism,
            });
        }
    }
    Ok(OracleResult {
        is_monge: false,
        leader: None,
        dim_equality: false,
        ad_isomorphism: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{build_root_system, AlgebraSpec};

    fn rs(f: Family, l: usize) -> RootSystem {
        build_root_system(AlgebraSpec::new(f, l).unwrap()).unwrap()
    }

    fn sig(l: usize, s: &[usize]) -> Sigma {
        Sigma::one_based(l, s).unwrap()
    }

    #[test]
    fn rank_two_list() {
        let cases = [
            (Family::A, vec![1, 2], true),
            (Family::A, vec![1], false),
            (Family::A, vec![2], false),
            (Family::B, vec![2], true),
            (Family::B, vec![1, 2], true),
            (Family::B, vec![1], false),
            (Family::G, vec![1], true),
            (Family::G, vec![1, 2], true),
            (Family::G, vec![2], false),
        ];
        for (f, s, expect) in cases {
            let r = rs(f, 2);
            assert_eq!(is_monge(&r, &sig(2, &s)).unwrap().is_monge, expect, "{f:?}{s:?}");
        }
    }

    #[test]
    fn c3_examples() {
        let r = rs(Family::C, 3);
        let v = is_monge(&r, &sig(3, &[1, 2, 3])).unwrap();
        assert!(v.is_monge);
        assert_eq!(v.leader, Some(1));
        assert!(v.branches.iter().all(|b| b.family == Family::A && b.rank == 1));
        let v = is_monge(&r, &sig(3, &[1, 2])).unwrap();
        assert!(!v.is_monge);
        let en: Vec<Vec<usize>> = enumerate_monge(&r)
            .unwrap()
            .into_iter()
            .map(|(s, _)| s.one_based_indices())
            .collect();
        assert_eq!(en, vec![vec![1, 2, 3], vec![2, 3]]);
    }

    #[test]
    fn a4_examples() {
        let r = rs(Family::A, 4);
        assert!(!is_monge(&r, &sig(4, &[2, 3])).unwrap().is_monge);
        let en: Vec<Vec<usize>> = enumerate_monge(&r)
            .unwrap()
            .into_iter()
            .map(|(s, _)| s.one_based_indices())
            .collect();
        assert_eq!(en, vec![vec![1, 2], vec![1, 2, 3], vec![2, 3, 4], vec![3, 4]]);
    }

    #[test]
    fn branch_types() {
        let r = rs(Family::C, 4);
        // leader α1: the branch is C3 graded at its short end, depth 2
        let b = branch_components(&r, &sig(4, &[1, 2]), 0).unwrap().unwrap();
        assert_eq!((b[0].family, b[0].rank, b[0].one_graded), (Family::C, 3, false));
        let f4 = rs(Family::F, 4);
        let b = branch_components(&f4, &sig(4, &[3, 4]), 3).unwrap().unwrap();
        assert_eq!((b[0].family, b[0].one_graded), (Family::B, false));
    }

    #[test]
    fn oracle_flags_agree() {
        for spec in AlgebraSpec::all_in_rank_range(2, 5) {
            let r = build_root_system(spec).unwrap();
            for mask in 1u32..(1 << r.rank()) {
                let idx: Vec<usize> = (0..r.rank()).filter(|i| mask >> i & 1 == 1).collect();
                let s = Sigma::new(r.rank(), idx).unwrap();
                let o = structural_monge_oracle(&r, &s).unwrap();
                let v = is_monge(&r, &s).unwrap();
                assert_eq!(o.is_monge, v.is_monge, "{spec} {s}");
                assert_eq!(o.dim_equality, o.ad_isomorphism, "{spec} {s}");
                if v.is_monge && v.dim_g1 > 2 {
                    assert!(long_root_criterion(&r, &s));
                    assert_eq!(o.leader, v.leader);
                }
            }
        }
    }
}
