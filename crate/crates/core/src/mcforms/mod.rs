//! Maurer–Cartan coframes on the simply connected group of `𝔤₋`, and the
//! standard Pfaffian systems they define.
//!
//! Coordinates are exponential coordinates of the second kind:
//! `g = exp(u_1 B_1) ⋯ exp(u_N B_N)` for an ordering `B_1, …, B_N` of the
//! basis, and `θ = g⁻¹ dg`. Two independent routes compute `θ`: products of
//! matrix exponentials, and `Ad(exp(−u_N B_N) ⋯ exp(−u_{k+1} B_{k+1})) B_k`
//! from the structure constants alone.

mod normal_form;
mod displayed_forms;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::nilrealize::GradedNilpotent;
use crate::symalg::{CoordSpace, Space};
use crate::{Field1, Form, Poly, QMatrix, QPolyMatrix, QSystem, Rational};

pub use normal_form::{monge_normal_form, normal_form_defects, MongeEquation, MongeNormalForm};
pub use displayed_forms::{case_coframe, case_ordering, displayed_coframe, verify_displayed_forms, FormCheck, DisplayedCoframe, DisplayedForm};

#[derive(Clone, Debug)]
pub struct Coframe {
    pub name: String,
    pub space: Space,
    /// Coordinate weights, `−deg` of the dual basis element.
    pub weights: Vec<i64>,
    /// `θ^a` in basis order.
    pub forms: Vec<Form>,
}

impl Coframe {
    pub fn coords(&self) -> &[String] {
        self.space.names()
    }

    pub fn form(&self, coord: &str) -> Option<&Form> {
        self.space.index_of(coord).map(|i| &self.forms[i])
    }

    /// Whether `θ^a = du_a` at the origin.
    pub fn is_identity_at_origin(&self) -> bool {
        self.forms.iter().enumerate().all(|(a, f)| {
            (0..self.space.dim()).all(|i| {
                let c = f.component(i).constant_term();
                c == if i == a { Rational::one() } else { Rational::zero() }
            })
        })
    }

    /// `Σ_{b<c} k_{bc} θ^b ∧ θ^c` for the structure equation of `θ^a`.
    pub fn structure_form(&self, g: &GradedNilpotent, a: usize) -> Result<Form> {
        let eq = &g.dual_structure_equations()[a];
        let mut out = Form::zero(&self.space, 2);
        for ((b, c), k) in &eq.terms {
            out = out.add(&self.forms[*b].wedge(&self.forms[*c])?.scale(k));
        }
        Ok(out)
    }

    /// Coordinates whose `dθ` differs from the structure equation of `g`.
    pub fn structure_defects(&self, g: &GradedNilpotent) -> Result<Vec<String>> {
        if g.dim() != self.forms.len() {
            return Err(Error::Invalid("coframe and algebra have different dimensions".into()));
        }
        let mut bad = Vec::new();
        for (a, f) in self.forms.iter().enumerate() {
            if f.exterior_derivative()? != self.structure_form(g, a)? {
                bad.push(self.space.name(a).to_string());
            }
        }
        Ok(bad)
    }

    /// The dual frame `V_a` with `θ^b(V_a) = δ^b_a`.
    pub fn frame(&self) -> Result<Vec<Field1>> {
        let n = self.space.dim();
        let mut t = QPolyMatrix::zeros(&self.space, n, n);
        for (a, f) in self.forms.iter().enumerate() {
            for i in 0..n {
                t.set(a, i, f.component(i));
            }
        }
        // T = I + N with N nilpotent, so T⁻¹ = Σ (−N)^k
        let id = QPolyMatrix::identity(&self.space, n);
        let nil = t.sub(&id);
        let mut inv = id.clone();
        let mut power = id;
        for _ in 0..n {
            power = power.checked_mul(&nil)?;
            if power.is_zero() {
                break;
            }
            let neg = QPolyMatrix::zeros(&self.space, n, n).sub(&power);
            power = neg;
            inv = inv.add(&power);
        }
        if !t.checked_mul(&inv)?.sub(&QPolyMatrix::identity(&self.space, n)).is_zero() {
            return Err(Error::Internal(format!("{}: coframe is not unipotent", self.name)));
        }
        Ok((0..n)
            .map(|a| Field1::from_coeffs(&self.space, (0..n).map(|i| inv.get(i, a).clone()).collect()))
            .collect())
    }

    /// Checks `[V_a, V_b] = c^c_{ab} V_c` on the dual frame.
    pub fn frame_defects(&self, g: &GradedNilpotent) -> Result<Vec<String>> {
        let v = self.frame()?;
        let mut bad = Vec::new();
        for a in 0..v.len() {
            for b in a + 1..v.len() {
                let mut want = Field1::zero(&self.space);
                for (c, k) in g.bracket(a, b) {
                    want.add_scaled(&k, &v[c]);
                }
                if v[a].bracket(&v[b]) != want {
                    bad.push(format!("[V_{}, V_{}]", self.space.name(a), self.space.name(b)));
                }
            }
        }
        Ok(bad)
    }
}

fn coordinate_space(g: &GradedNilpotent) -> Space {
    CoordSpace::new(g.coords())
}

fn check_ordering(g: &GradedNilpotent, ordering: &[usize]) -> Result<()> {
    let mut seen = ordering.to_vec();
    seen.sort_unstable();
    if seen != (0..g.dim()).collect::<Vec<_>>() {
        return Err(Error::Invalid("ordering must be a permutation of the basis".into()));
    }
    Ok(())
}

/// `θ` from the structure constants: the `du_k` column is
/// `Ad(exp(−u_N B_N) ⋯ exp(−u_{k+1} B_{k+1})) B_k` with `B` in `ordering`.
pub fn compute_mc_forms_adjoint(g: &GradedNilpotent, ordering: &[usize]) -> Result<Coframe> {
    check_ordering(g, ordering)?;
    let space = coordinate_space(g);
    let n = g.dim();
    let mut cols: Vec<Vec<Poly>> = vec![Vec::new(); n];
    let mut acc = QPolyMatrix::identity(&space, n);
    for &k in ordering.iter().rev() {
        cols[k] = (0..n).map(|a| acc.get(a, k).clone()).collect();
        let u = Poly::var(&space, k);
        let step = QPolyMatrix::exp_nilpotent(&space, &g.ad_matrix(k), &-&u)?;
        acc = acc.checked_mul(&step)?;
    }
    let forms = (0..n)
        .map(|a| Form::one_form(&space, (0..n).map(|k| (k, cols[k][a].clone()))))
        .collect();
    Ok(Coframe {
        name: g.name.clone(),
        space,
        weights: g.weights(),
        forms,
    })
}

/// `θ = g⁻¹ dg` from matrix exponentials, expanded over the basis matrices.
pub fn compute_mc_forms_matrix(g: &GradedNilpotent, ordering: &[usize]) -> Result<Coframe> {
    check_ordering(g, ordering)?;
    let mats: Vec<&QMatrix> = g
        .basis
        .iter()
        .map(|b| b.matrix.as_ref().ok_or_else(|| Error::Unsupported(format!("{} has no matrix", b.label))))
        .collect::<Result<_>>()?;
    let space = coordinate_space(g);
    let n = g.dim();
    let size = mats[0].rows();
    let mut elem = QPolyMatrix::identity(&space, size);
    let mut inv = QPolyMatrix::identity(&space, size);
    for &k in ordering {
        let u = Poly::var(&space, k);
        elem = elem.checked_mul(&QPolyMatrix::exp_nilpotent(&space, mats[k], &u)?)?;
        inv = QPolyMatrix::exp_nilpotent(&space, mats[k], &-&u)?.checked_mul(&inv)?;
    }
    // left inverse of the basis: coefficient c_a = Σ_e L[a][e] M_e
    let cells = size * size;
    let mut basis_mat = QMatrix::zeros(cells, n);
    for (a, m) in mats.iter().enumerate() {
        for e in 0..cells {
            basis_mat.set(e, a, m.get(e / size, e % size).clone());
        }
    }
    let bt = basis_mat.transpose();
    let gram_inv = bt
        .mul(&basis_mat)
        .inverse()
        .ok_or_else(|| Error::Internal("basis matrices are linearly dependent".into()))?;
    let left = gram_inv.mul(&bt);
    let support: Vec<Vec<(usize, Rational)>> = (0..n)
        .map(|a| {
            (0..cells)
                .filter(|&e| !left.get(a, e).is_zero())
                .map(|e| (e, left.get(a, e).clone()))
                .collect()
        })
        .collect();
    let mut comps: Vec<Vec<(usize, Poly)>> = vec![Vec::new(); n];
    for i in 0..n {
        let d = inv.checked_mul(&elem.deriv(i))?;
        let coeffs: Vec<Poly> = support
            .iter()
            .map(|row| {
                row.iter().fold(Poly::zero(&space), |acc, (e, c)| {
                    &acc + &d.get(e / size, e % size).scale(c)
                })
            })
            .collect();
        // residue check: Σ c_a M_a must reproduce g⁻¹ ∂_i g
        let mut rebuilt = QPolyMatrix::zeros(&space, size, size);
        for (a, c) in coeffs.iter().enumerate() {
            rebuilt = rebuilt.add(&QPolyMatrix::from_constant(&space, mats[a], c));
        }
        if !rebuilt.sub(&d).is_zero() {
            return Err(Error::Internal(format!("g⁻¹∂g leaves 𝔤₋ in {}", g.name)));
        }
        for (a, c) in coeffs.into_iter().enumerate() {
            comps[a].push((i, c));
        }
    }
    Ok(Coframe {
        name: g.name.clone(),
        space: space.clone(),
        weights: g.weights(),
        forms: comps.into_iter().map(|c| Form::one_form(&space, c)).collect(),
    })
}

/// Coframe by the adjoint route, checked against the structure equations
/// and, when matrices are present, against the matrix route.
pub fn compute_mc_forms(g: &GradedNilpotent, ordering: &[usize]) -> Result<Coframe> {
    let cf = compute_mc_forms_adjoint(g, ordering)?;
    let bad = cf.structure_defects(g)?;
    if !bad.is_empty() {
        return Err(Error::Internal(format!("{}: dθ wrong for {}", g.name, bad.join(", "))));
    }
    if g.basis.iter().all(|b| b.matrix.is_some()) {
        let other = compute_mc_forms_matrix(g, ordering)?;
        if other.forms != cf.forms {
            return Err(Error::Internal(format!("{}: matrix and adjoint routes disagree", g.name)));
        }
    }
    Ok(cf)
}

/// Most negative degree first, `𝔤₋₁` last, with the leader (the element
/// labelled `X`) at the very end.
pub fn default_ordering(g: &GradedNilpotent) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..g.dim()).collect();
    idx.sort_by_key(|&k| (g.basis[k].degree, g.basis[k].label == "X", k));
    idx
}

#[derive(Clone, Debug)]
pub struct PfaffianSystem {
    pub name: String,
    pub space: Space,
    pub weights: Vec<i64>,
    pub labels: Vec<String>,
    pub generators: Vec<Form>,
}

impl PfaffianSystem {
    /// Fails if the generators are dependent at the origin.
    pub fn new(name: &str, space: Space, weights: Vec<i64>, labels: Vec<String>, generators: Vec<Form>) -> Result<Self> {
        if weights.len() != space.dim() || labels.len() != generators.len() {
            return Err(Error::Invalid("Pfaffian system shape mismatch".into()));
        }
        let mut sys = QSystem::new(space.names().to_vec());
        for f in &generators {
            sys.add_row((0..space.dim()).map(|i| (i, f.component(i).constant_term())))?;
        }
        if sys.rank() != generators.len() {
            return Err(Error::Invalid(format!("{name}: generators are dependent at the origin")));
        }
        Ok(PfaffianSystem {
            name: name.to_string(),
            space,
            weights,
            labels,
            generators,
        })
    }

    /// From textual 1-forms such as `dy - p*dx`.
    pub fn parse(name: &str, coords: &[&str], weights: &[i64], forms: &[&str]) -> Result<Self> {
        let space = CoordSpace::new(coords.iter().copied());
        let gens = forms
            .iter()
            .map(|s| crate::symalg::parse_one_form(&space, s))
            .collect::<Result<Vec<Form>>>()?;
        let labels = forms.iter().map(|s| s.to_string()).collect();
        PfaffianSystem::new(name, space, weights.to_vec(), labels, gens)
    }

    pub fn annihilates(&self, v: &Field1) -> bool {
        self.generators.iter().all(|f| v.pair(f).is_zero())
    }

    /// Whether `ω` is a pointwise combination of the generators, tested
    /// by evaluation on the given complementary fields.
    pub fn contains_on(&self, omega: &Form, complement: &[Field1]) -> bool {
        complement.iter().all(|v| v.pair(omega).is_zero())
    }
}

/// The forms dual to degrees `≤ −2`.
pub fn standard_pfaffian(cf: &Coframe) -> Result<PfaffianSystem> {
    let idx: Vec<usize> = (0..cf.forms.len()).filter(|&a| cf.weights[a] >= 2).collect();
    PfaffianSystem::new(
        &cf.name,
        cf.space.clone(),
        cf.weights.clone(),
        idx.iter().map(|&a| format!("θ^{}", cf.space.name(a))).collect(),
        idx.iter().map(|&a| cf.forms[a].clone()).collect(),
    )
}

/// The standard Pfaffian system of a case, in the coordinates of its
/// displayed coframe.
pub fn case_pfaffian(case: crate::cases::CaseId, l: usize) -> Result<PfaffianSystem> {
    standard_pfaffian(&case_coframe(case, l)?)
}

/// The IIIc system with `p2`'s jet dropped: seven coordinates, four forms.
pub fn iiic_restricted() -> PfaffianSystem {
    PfaffianSystem::parse(
        "IIIc restricted",
        &["x", "y1", "y2", "p1", "p2", "q1", "z"],
        &[1, 3, 3, 2, 2, 1, 4],
        &["dy1 - p1*dx", "dy2 - p2*dx", "dp1 - q1*dx", "dz - p2*q1*dx"],
    )
    .expect("the restricted IIIc system is well formed")
}

/// Frame fields dual to `𝔤₋₁`.
pub fn degree_one_fields(cf: &Coframe) -> Result<Vec<Field1>> {
    let frame = cf.frame()?;
    Ok(frame
        .into_iter()
        .enumerate()
        .filter(|(a, _)| cf.weights[*a] == 1)
        .map(|(_, v)| v)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cases::CaseId;
    use crate::nilrealize::realize_case;
    use crate::symalg::parse_one_form;

    fn by_labels(g: &GradedNilpotent, labels: &[&str]) -> Vec<usize> {
        labels.iter().map(|l| g.index_of(l).unwrap()).collect()
    }

    #[test]
    fn hilbert_cartan_forms() {
        let g = realize_case(CaseId::Va, 2).unwrap();
        let cf = compute_mc_forms(&g, &by_labels(&g, &["X", "P", "Q", "Y", "Z"])).unwrap();
        let want: Form = parse_one_form(&cf.space, "dz - q*dp + 1/2*q^2*dx").unwrap();
        assert_eq!(cf.form("z").unwrap(), &want);
        assert!(cf.is_identity_at_origin());
        assert!(cf.frame_defects(&g).unwrap().is_empty());
        let ps = standard_pfaffian(&cf).unwrap();
        assert_eq!(ps.generators.len(), 3);
        for v in degree_one_fields(&cf).unwrap() {
            assert!(ps.annihilates(&v));
        }
    }

    #[test]
    fn routes_agree_on_matrix_cases() {
        for (case, l) in [(CaseId::Ia, 4), (CaseId::IIb, 3), (CaseId::IIIc, 3), (CaseId::IIId, 3), (CaseId::IIa, 3)] {
            let g = realize_case(case, l).unwrap();
            let ord = default_ordering(&g);
            let cf = compute_mc_forms(&g, &ord).unwrap();
            assert!(cf.is_identity_at_origin());
            assert!(cf.frame_defects(&g).unwrap().is_empty(), "{case}");
        }
    }

    #[test]
    fn dependent_generators_rejected() {
        let err = PfaffianSystem::parse("bad", &["x", "y"], &[1, 1], &["dy - x*dx", "2*dy"]);
        assert!(err.is_err());
    }
}
