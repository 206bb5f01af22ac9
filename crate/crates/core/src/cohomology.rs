//! Kostant weights for `H^q(𝔤₋, 𝔤)`, q = 1, 2.
//!
//! Elements of `W^2_Σ` are `σ_ij = s_i ∘ s_j` with `α_i ∈ Σ` and
//! `ht_Σ(s_i(α_j)) ≥ 1`; commuting pairs are listed once, as `i < j`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grading::{ht, Sigma};
use crate::rootsys::{Root, RootSystem};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeylElement {
    /// Simple reflections, 0-based; `[i, j]` is `s_i ∘ s_j`.
    pub word: Vec<usize>,
    pub delta: Vec<Root>,
}

impl WeylElement {
    pub fn length(&self) -> usize {
        self.word.len()
    }

    /// `σ12`, `s2`
    pub fn label(&self) -> String {
        let digits: Vec<String> = self.word.iter().map(|i| (i + 1).to_string()).collect();
        match self.word.len() {
            1 => format!("s{}", digits[0]),
            _ if self.word.iter().all(|&i| i < 9) => format!("σ{}", digits.concat()),
            _ => format!("σ{}", digits.join(",")),
        }
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// `Δ_σ = σ(Δ⁻) ∩ Δ⁺`, computed as the positive roots sent negative by `σ⁻¹`.
pub fn delta_sigma(rs: &RootSystem, word: &[usize]) -> Result<Vec<Root>> {
    let inverse: Vec<usize> = word.iter().rev().copied().collect();
    let mut out = Vec::new();
    for beta in rs.positive_roots() {
        if !rs.weyl_apply(&inverse, beta)?.is_positive() {
            out.push(beta.clone());
        }
    }
    Ok(out)
}

pub fn enumerate_w1(rs: &RootSystem, sigma: &Sigma) -> Vec<WeylElement> {
    sigma
        .indices()
        .iter()
        .map(|&i| WeylElement {
            word: vec![i],
            delta: vec![rs.simple_root(i)],
        })
        .collect()
}

pub fn enumerate_w2(rs: &RootSystem, sigma: &Sigma) -> Vec<WeylElement> {
    let mut out = Vec::new();
    for &i in sigma.indices() {
        for j in 0..rs.rank() {
            if i == j {
                continue;
            }
            let b2 = rs.reflect(&rs.simple_root(j), i);
            if ht(sigma, &b2) < 1 {
                continue;
            }
            if rs.cartan()[i][j] == 0 && j < i && sigma.contains(j) {
                continue;
            }
            out.push(WeylElement {
                word: vec![i, j],
                delta: vec![rs.simple_root(i), b2],
            });
        }
    }
    out.sort_by(|a, b| a.word.cmp(&b.word));
    out
}

/// Closed form for `σ_ij`:
/// `-ht(θ) + ⟨θ,α_i⟩ + 1 + (⟨θ,α_j⟩ + 1) ht(s_i(α_j))`.
pub fn closed_form_weight(rs: &RootSystem, sigma: &Sigma, i: usize, j: usize) -> i64 {
    let theta = rs.highest_root();
    let sij = rs.reflect(&rs.simple_root(j), i);
    -ht(sigma, theta) + rs.pairing(theta, i) + 1 + (rs.pairing(theta, j) + 1) * ht(sigma, &sij)
}

/// `-ht(σ(θ)) + Σ_{β ∈ Δ_σ} ht(β)`, checked against the closed form for q = 2.
pub fn homogeneity_weight(rs: &RootSystem, sigma: &Sigma, w: &WeylElement) -> Result<i64> {
    let st = rs.weyl_apply(&w.word, rs.highest_root())?;
    let general = -ht(sigma, &st) + w.delta.iter().map(|b| ht(sigma, b)).sum::<i64>();
    if w.length() == 2 {
        let closed = closed_form_weight(rs, sigma, w.word[0], w.word[1]);
        if closed != general {
            return Err(Error::Internal(format!("weight of {w}: {general} vs closed form {closed}")));
        }
    }
    Ok(general)
}

pub fn is_rigid(rs: &RootSystem, sigma: &Sigma) -> Result<bool> {
    for w in enumerate_w2(rs, sigma) {
        if homogeneity_weight(rs, sigma, &w)? >= 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `(-ht(σ(θ)), torsion)`.
pub fn torsion_or_curvature(rs: &RootSystem, sigma: &Sigma, w: &WeylElement) -> Result<(i64, bool)> {
    let st = rs.weyl_apply(&w.word, rs.highest_root())?;
    let weight = -ht(sigma, &st);
    Ok((weight, weight < 0))
}

/// `-σ(θ) + Σ_{β ∈ Δ_σ} β`. Its pairings with the simple roots outside Σ are
/// non-positive.
pub fn lowest_weight(rs: &RootSystem, sigma: &Sigma, w: &WeylElement) -> Result<Root> {
    let st = rs.weyl_apply(&w.word, rs.highest_root())?;
    let mut lam = st.neg();
    for b in &w.delta {
        lam = lam.add(b);
    }
    for k in (0..rs.rank()).filter(|k| !sigma.contains(*k)) {
        if rs.pairing(&lam, k) > 0 {
            return Err(Error::Internal(format!("lowest weight of {w} pairs positively with α{}", k + 1)));
        }
    }
    Ok(lam)
}

/// Reflect by `s_k` (k ∉ Σ) until dominant for the Levi factor, then report
/// `⟨λ, α_k⟩` for every `k ∉ Σ`.
pub fn highest_weight_pairings(rs: &RootSystem, sigma: &Sigma, lowest: &Root) -> BTreeMap<usize, i64> {
    let outside: Vec<usize> = (0..rs.rank()).filter(|k| !sigma.contains(*k)).collect();
    let mut lam = lowest.clone();
    while let Some(&k) = outside.iter().find(|&&k| rs.pairing(&lam, k) < 0) {
        lam = rs.reflect(&lam, k);
    }
    outside.into_iter().map(|k| (k, rs.pairing(&lam, k))).collect()
}

/// Connected components of the diagram outside Σ, i.e. the simple factors of `𝔤₀^ss`.
pub fn levi_factors(rs: &RootSystem, sigma: &Sigma) -> Vec<Vec<usize>> {
    let outside: Vec<usize> = (0..rs.rank()).filter(|k| !sigma.contains(*k)).collect();
    let mut comps = rs.components(&outside);
    for c in comps.iter_mut() {
        c.sort_unstable();
    }
    comps.sort();
    comps
}

/// `A1 ⊕ A1`, `B2`, `0`.
pub fn levi_label(rs: &RootSystem, sigma: &Sigma) -> String {
    let parts: Vec<String> = levi_factors(rs, sigma)
        .iter()
        .map(|c| {
            let (f, m) = rs.component_type(c);
            format!("{f}{m}")
        })
        .collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" ⊕ ")
    }
}

fn weight_expr(coeffs: &[(usize, i64)]) -> String {
    let terms: Vec<String> = coeffs
        .iter()
        .filter(|(_, c)| *c != 0)
        .map(|(k, c)| if *c == 1 { format!("ω{k}") } else { format!("{c}ω{k}") })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

/// Highest weight in the fundamental weights of each Levi factor, numbering
/// each factor's nodes in increasing order: `3ω1 + 2ω2`, `[3ω1, 3ω1]`, `0`.
pub fn highest_weight_label(rs: &RootSystem, sigma: &Sigma, pairings: &BTreeMap<usize, i64>) -> String {
    let factors = levi_factors(rs, sigma);
    if pairings.values().all(|&c| c == 0) {
        return "0".into();
    }
    let per: Vec<String> = factors
        .iter()
        .map(|c| {
            let coeffs: Vec<(usize, i64)> = c.iter().enumerate().map(|(n, k)| (n + 1, pairings[k])).collect();
            weight_expr(&coeffs)
        })
        .collect();
    if per.len() == 1 {
        per.into_iter().next().unwrap()
    } else {
        format!("[{}]", per.join(", "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyClass {
    pub sigma: WeylElement,
    pub q: usize,
    pub homogeneity_weight: i64,
    pub minus_sigma_theta: Root,
    pub minus_sigma_theta_weight: i64,
    pub torsion: bool,
    pub lowest_weight: Root,
    pub highest_weight_pairings: BTreeMap<usize, i64>,
    pub highest_weight: String,
}

pub fn cohomology_classes(rs: &RootSystem, sigma: &Sigma, q: usize) -> Result<Vec<CohomologyClass>> {
    let elems = match q {
        1 => enumerate_w1(rs, sigma),
        2 => enumerate_w2(rs, sigma),
        _ => return Err(Error::Unsupported(format!("cohomology degree {q}"))),
    };
    elems
        .into_iter()
        .map(|w| {
            let weight = homogeneity_weight(rs, sigma, &w)?;
            let (mst_weight, torsion) = torsion_or_curvature(rs, sigma, &w)?;
            let mst = rs.weyl_apply(&w.word, rs.highest_root())?.neg();
            let low = lowest_weight(rs, sigma, &w)?;
            let pairings = highest_weight_pairings(rs, sigma, &low);
            let label = highest_weight_label(rs, sigma, &pairings);
            Ok(CohomologyClass {
                sigma: w,
                q,
                homogeneity_weight: weight,
                minus_sigma_theta: mst,
                minus_sigma_theta_weight: mst_weight,
                torsion,
                lowest_weight: low,
                highest_weight_pairings: pairings,
                highest_weight: label,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{build_root_system, AlgebraSpec, Family};
    use std::collections::BTreeSet;

    fn rs(f: Family, l: usize) -> RootSystem {
        build_root_system(AlgebraSpec::new(f, l).unwrap()).unwrap()
    }

    fn sig(l: usize, s: &[usize]) -> Sigma {
        Sigma::one_based(l, s).unwrap()
    }

    fn labels_and_weights(r: &RootSystem, s: &Sigma) -> (Vec<String>, Vec<i64>) {
        let w2 = enumerate_w2(r, s);
        let ws = w2.iter().map(|w| homogeneity_weight(r, s, w).unwrap()).collect();
        (w2.iter().map(|w| w.label()).collect(), ws)
    }

    #[test]
    fn small_tables() {
        let (l, w) = labels_and_weights(&rs(Family::A, 2), &sig(2, &[1, 2]));
        assert_eq!((l, w), (vec!["σ12".to_string(), "σ21".into()], vec![4, 4]));
        let (l, w) = labels_and_weights(&rs(Family::A, 3), &sig(3, &[1, 2, 3]));
        assert_eq!(l, ["σ12", "σ13", "σ21", "σ23", "σ32"]);
        assert_eq!(w, [1, 1, 2, 2, 1]);
        let (_, w) = labels_and_weights(&rs(Family::B, 3), &sig(3, &[2, 3]));
        assert_eq!(w, [-1, 0, 3]);
    }

    #[test]
    fn delta_matches_word_length() {
        for spec in AlgebraSpec::all_in_rank_range(2, 6) {
            let r = build_root_system(spec).unwrap();
            for mask in 1u32..(1 << r.rank()) {
                let idx: Vec<usize> = (0..r.rank()).filter(|i| mask >> i & 1 == 1).collect();
                let s = Sigma::new(r.rank(), idx).unwrap();
                for w in enumerate_w2(&r, &s) {
                    let d: BTreeSet<Root> = delta_sigma(&r, &w.word).unwrap().into_iter().collect();
                    let e: BTreeSet<Root> = w.delta.iter().cloned().collect();
                    assert_eq!(d, e, "{spec} {s} {w}");
                    homogeneity_weight(&r, &s, &w).unwrap();
                    lowest_weight(&r, &s, &w).unwrap();
                }
            }
        }
    }

    /// Every element of the rank-two Weyl group, found by closing words under
    /// simple reflections and identifying elements by their action on simple roots.
    fn weyl_group(r: &RootSystem) -> Vec<Vec<usize>> {
        let key = |w: &[usize]| -> Vec<Root> {
            (0..r.rank()).map(|i| r.weyl_apply(w, &r.simple_root(i)).unwrap()).collect()
        };
        let mut seen: BTreeSet<Vec<Root>> = BTreeSet::new();
        let mut words: Vec<Vec<usize>> = vec![vec![]];
        seen.insert(key(&[]));
        let mut frontier = words.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for w in &frontier {
                for i in 0..r.rank() {
                    let mut v = vec![i];
                    v.extend(w);
                    if seen.insert(key(&v)) {
                        next.push(v);
                    }
                }
            }
            words.extend(next.iter().cloned());
            frontier = next;
        }
        words
    }

    #[test]
    fn rank_two_brute_force() {
        for (f, order) in [(Family::A, 6), (Family::B, 8), (Family::G, 12)] {
            let r = rs(f, 2);
            let group = weyl_group(&r);
            assert_eq!(group.len(), order);
            for s in [sig(2, &[1]), sig(2, &[2]), sig(2, &[1, 2])] {
                let mut brute: Vec<BTreeSet<Root>> = group
                    .iter()
                    .map(|w| delta_sigma(&r, w).unwrap())
                    .filter(|d| d.len() == 2 && d.iter().all(|b| ht(&s, b) >= 1))
                    .map(|d| d.into_iter().collect())
                    .collect();
                let mut ours: Vec<BTreeSet<Root>> =
                    enumerate_w2(&r, &s).into_iter().map(|w| w.delta.into_iter().collect()).collect();
                brute.sort();
                ours.sort();
                assert_eq!(brute, ours, "{f:?} {s}");
            }
        }
    }

    #[test]
    fn g2_curvature_class() {
        let r = rs(Family::G, 2);
        let s = sig(2, &[1]);
        let c = &cohomology_classes(&r, &s, 2).unwrap()[0];
        assert_eq!((c.homogeneity_weight, c.minus_sigma_theta_weight, c.torsion), (4, 0, false));
        assert_eq!(c.highest_weight, "4ω1");
    }
}
