//! Symmetries of a weighted-homogeneous polynomial Pfaffian system, one
//! grade at a time.
//!
//! A field `X = ξ^a ∂_a` of grade `j` has `ξ^a` homogeneous of weighted degree
//! `w_a + j`. The condition `L_X θ^r = λ^r_s θ^s` is linear in `ξ` and the
//! multipliers `λ`, which are carried as extra unknowns and dropped from the
//! kernel afterwards.

use std::collections::BTreeMap;

use super::linpoly::LinPoly;
use super::{span_rank, SymmetryAlgebra};
use crate::error::{Error, Result};
use crate::mcforms::PfaffianSystem;
use crate::symalg::Monomial;
use crate::{Field1, QSystem, Rational};

fn form_weight(ps: &PfaffianSystem, r: usize) -> Result<i64> {
    let w = &ps.weights;
    let mut deg = None;
    for a in 0..ps.space.dim() {
        let c = ps.generators[r].component(a);
        if c.is_zero() {
            continue;
        }
        let d = c
            .homogeneous_degree(w)
            .ok_or_else(|| Error::Invalid(format!("{}: generator {r} is not homogeneous", ps.name)))?
            + w[a];
        if deg.is_some_and(|e| e != d) {
            return Err(Error::Invalid(format!("{}: generator {r} is not homogeneous", ps.name)));
        }
        deg = Some(d);
    }
    deg.ok_or_else(|| Error::Invalid(format!("{}: generator {r} vanishes", ps.name)))
}

/// Symmetries of grade `j`.
fn grade_kernel(ps: &PfaffianSystem, j: i64) -> Result<Vec<Field1>> {
    let space = &ps.space;
    let w = &ps.weights;
    let n = space.dim();
    let gens = &ps.generators;
    let gw: Vec<i64> = (0..gens.len()).map(|r| form_weight(ps, r)).collect::<Result<_>>()?;
    let mut names = Vec::new();
    let mut xi = Vec::new();
    for a in 0..n {
        let mons = Monomial::all_of_weighted_degree(w, w[a] + j);
        xi.push(LinPoly::ansatz(space, names.len(), &mons));
        names.extend((0..mons.len()).map(|k| format!("xi_{a}[{k}]")));
    }
    let n_xi = names.len();
    if n_xi == 0 {
        return Ok(Vec::new());
    }
    let mut lambda: Vec<Vec<LinPoly>> = Vec::new();
    for (r, &wr) in gw.iter().enumerate() {
        let mut row = Vec::new();
        for (s, &ws) in gw.iter().enumerate() {
            let mons = Monomial::all_of_weighted_degree(w, wr - ws + j);
            row.push(LinPoly::ansatz(space, names.len(), &mons));
            names.extend((0..mons.len()).map(|k| format!("l_{r}_{s}[{k}]")));
        }
        lambda.push(row);
    }
    let mut sys = QSystem::new(names);
    let one = Rational::from_integer(1.into());
    let minus = -one.clone();
    for (r, th) in gens.iter().enumerate() {
        let comps: Vec<_> = (0..n).map(|c| th.component(c)).collect();
        for c in 0..n {
            // (L_X θ)_c = ξ^a ∂_a θ_c + θ_b ∂_c ξ^b
            let mut e = LinPoly::zero(space);
            for a in 0..n {
                let d = comps[c].deriv(a);
                if !d.is_zero() {
                    e.add_scaled(&one, &xi[a].mul_poly(&d));
                }
                if !comps[a].is_zero() {
                    e.add_scaled(&one, &xi[a].deriv(c).mul_poly(&comps[a]));
                }
            }
            for (s, ths) in gens.iter().enumerate() {
                let t = ths.component(c);
                if !t.is_zero() {
                    e.add_scaled(&minus, &lambda[r][s].mul_poly(&t));
                }
            }
            e.push_rows(&mut sys)?;
        }
    }
    let kernel = sys.nullspace();
    let fields: Vec<Field1> = kernel
        .iter()
        .map(|v| Field1::from_coeffs(space, xi.iter().map(|p| p.evaluate(space, v)).collect()))
        .filter(|f| !f.is_zero())
        .collect();
    if span_rank(&fields) != fields.len() {
        return Err(Error::Internal(format!("{}: multipliers not determined by the field at grade {j}", ps.name)));
    }
    Ok(fields)
}

/// Symmetry fields by grade, for the listed grades.
pub fn pfaffian_symmetries_in_grades(ps: &PfaffianSystem, grades: impl IntoIterator<Item = i64>) -> Result<BTreeMap<i64, Vec<Field1>>> {
    grades.into_iter().map(|j| Ok((j, grade_kernel(ps, j)?))).collect()
}

/// All symmetries of grade at most `bound`, closed into an algebra. The
/// system's own manifold is the base, so every coordinate counts as a point
/// coordinate; use [`super::projects_to`] to test a smaller base.
pub fn pfaffian_symmetries(ps: &PfaffianSystem, bound: i64) -> Result<SymmetryAlgebra> {
    let lowest = -ps.weights.iter().copied().max().unwrap_or(0);
    let by_grade = pfaffian_symmetries_in_grades(ps, lowest..=bound)?;
    let basis: Vec<Field1> = by_grade.into_values().flatten().collect();
    SymmetryAlgebra {
        name: ps.name.clone(),
        space: ps.space.clone(),
        base: (0..ps.space.dim()).collect(),
        weights: ps.weights.clone(),
        basis,
        brackets: BTreeMap::new(),
    }
    .close()
}

/// Dimension of the bounded solution space for each bound, without closing.
/// For systems with an infinite symmetry algebra this keeps growing.
pub fn kernel_growth(ps: &PfaffianSystem, bounds: &[i64]) -> Result<Vec<(i64, usize)>> {
    let lowest = -ps.weights.iter().copied().max().unwrap_or(0);
    let top = bounds.iter().copied().max().unwrap_or(lowest);
    let dims: BTreeMap<i64, usize> = pfaffian_symmetries_in_grades(ps, lowest..=top)?
        .into_iter()
        .map(|(j, f)| (j, f.len()))
        .collect();
    Ok(bounds
        .iter()
        .map(|&b| (b, dims.range(..=b).map(|(_, n)| n).sum()))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symsolver::{point_symmetry_check, projects_to};

    #[test]
    fn hilbert_cartan_is_fourteen() {
        let ps = PfaffianSystem::parse(
            "Va",
            &["x", "y", "p", "q", "z"],
            &[1, 3, 2, 1, 3],
            &["dy - p*dx", "dp - q*dx", "dz - 1/2*q^2*dx"],
        )
        .unwrap();
        let sa = pfaffian_symmetries(&ps, 3).unwrap();
        assert_eq!(sa.dim(), 14);
        let g = super::super::grade_decomposition(&sa, &ps.weights);
        assert_eq!(g.values().copied().collect::<Vec<_>>(), vec![2, 1, 2, 4, 2, 1, 2]);
        assert!(point_symmetry_check(&sa));
        // the G2 fields do not descend to (x, y, z)
        assert!(!projects_to(&sa, &[0, 1, 4]));
    }

    #[test]
    fn contact_plane_grows() {
        let ps = PfaffianSystem::parse("J1", &["x", "y", "p"], &[1, 2, 1], &["dy - p*dx"]).unwrap();
        let g = kernel_growth(&ps, &[1, 2, 3]).unwrap();
        assert!(g[0].1 < g[1].1 && g[1].1 < g[2].1, "{g:?}");
    }

    #[test]
    fn inhomogeneous_generator_rejected() {
        let ps = PfaffianSystem::parse("bad", &["x", "y", "p"], &[1, 2, 1], &["dy - x^2*dx"]).unwrap();
        assert!(pfaffian_symmetries(&ps, 1).is_err());
    }
}
