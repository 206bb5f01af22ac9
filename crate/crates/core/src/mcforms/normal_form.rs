//! Monge equations whose canonical systems are the standard Pfaffian systems.
//!
//! Jet variables are written `x`, `y1`, `y1_1` for `ẏ¹`, `y1_2` for `ÿ¹`;
//! with a single unknown the index is dropped (`y`, `y_1`, `y_2`).

use serde::Serialize;

use super::displayed_forms::displayed_coframe;
use super::{degree_one_fields, Coframe};
use crate::cases::CaseId;
use crate::error::{Error, Result};
use crate::nilrealize::realize_case;
use crate::symalg::{parse_one_form, parse_polynomial, CoordSpace};
use crate::{Form, Poly};

#[derive(Clone, Debug, Serialize)]
pub struct MongeEquation {
    /// Differentiated unknown, e.g. `z1`.
    pub unknown: String,
    /// Right-hand side in jet variables.
    pub rhs: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct MongeNormalForm {
    pub case: CaseId,
    pub rank: usize,
    /// As printed, one entry per displayed equation or family.
    pub printed: Vec<String>,
    pub equations: Vec<MongeEquation>,
    /// Jet variable to coframe coordinate expression.
    pub dictionary: Vec<(String, String)>,
    /// Set for the jet space cases, which carry no equation.
    pub jet_space: Option<String>,
}

fn eq(unknown: &str, rhs: String) -> MongeEquation {
    MongeEquation {
        unknown: unknown.into(),
        rhs,
    }
}

fn first_order(ys: &[String]) -> Vec<(String, String)> {
    let mut d: Vec<(String, String)> = vec![("x".into(), "x".into())];
    for y in ys {
        d.push((y.clone(), y.clone()));
        d.push((format!("{y}_1"), y.replacen('y', "p", 1)));
    }
    d
}

fn kappa_rhs(m: usize) -> String {
    (1..=m)
        .map(|i| format!("1/2*y{i}_1*y{}_1", m + 1 - i))
        .collect::<Vec<_>>()
        .join(" + ")
}

pub fn monge_normal_form(case: CaseId, l: usize) -> Result<MongeNormalForm> {
    let l = case.rank_or(l)?;
    let names = |r: std::ops::RangeInclusive<usize>| r.map(|i| format!("y{i}")).collect::<Vec<_>>();
    let mut printed = Vec::new();
    let mut eqs = Vec::new();
    let mut jet_space = None;
    let dictionary: Vec<(String, String)>;
    match case {
        CaseId::Ia => {
            printed.push("ż^i = ẏ^0 ẏ^i, 1 ≤ i ≤ ℓ−2".into());
            for i in 1..=l - 2 {
                eqs.push(eq(&format!("z{i}"), format!("y0_1*y{i}_1")));
            }
            let mut ys = vec!["y0".to_string()];
            ys.extend(names(1..=l - 2));
            dictionary = first_order(&ys);
        }
        CaseId::IIa => {
            printed.push("ż^{ij} = ẏ^i ẏ^j, 1 ≤ i ≤ j ≤ ℓ−1".into());
            for i in 1..l {
                for j in i..l {
                    eqs.push(eq(&format!("z{i}{j}"), format!("y{i}_1*y{j}_1")));
                }
            }
            dictionary = first_order(&names(1..=l - 1));
        }
        CaseId::IIIa | CaseId::IVa => {
            let m = if case == CaseId::IIIa { 2 * l - 3 } else { 2 * l - 4 };
            printed.push(format!("ż = 1/2 Σ_{{i,j=1}}^{{{}}} κ_ij ẏ^i ẏ^j", if case == CaseId::IIIa { "2ℓ−3" } else { "2ℓ−4" }));
            eqs.push(eq("z", kappa_rhs(m)));
            dictionary = first_order(&names(1..=m));
        }
        CaseId::IIb => {
            printed.extend(
                ["ż^1 = ẏ^1 ẏ^2", "ż^2 = x ẏ^2", "ż^3 = (y^1 + ẏ^1 x) ẏ^2", "ż^4 = y^1 ẏ^1 ẏ^2"].map(String::from),
            );
            eqs.push(eq("z1", "y1_1*y2_1".into()));
            eqs.push(eq("z2", "x*y2_1".into()));
            eqs.push(eq("z3", "(y1 + y1_1*x)*y2_1".into()));
            eqs.push(eq("z4", "y1*y1_1*y2_1".into()));
            dictionary = first_order(&names(1..=2));
        }
        CaseId::IIIc => {
            printed.push("ż = ÿ^1 ẏ^2".into());
            eqs.push(eq("z", "y1_2*y2_1".into()));
            let mut d = first_order(&names(1..=2));
            d.push(("y1_2".into(), "q1".into()));
            d.push(("y2_2".into(), "q2".into()));
            dictionary = d;
        }
        CaseId::IIId => {
            printed.extend(
                [
                    "ż^1 = ẏ^1 ẏ^2",
                    "ż^2 = 1/2 (ẏ^2)^2",
                    "ż^3 = 1/2 ẏ^1 (ẏ^2)^2",
                    "ż^4 = 1/2 ẏ^2 (x ẏ^1 ẏ^2 − y^1 ẏ^2 − 2 ẏ^1 y^2)",
                ]
                .map(String::from),
            );
            eqs.push(eq("z1", "y1_1*y2_1".into()));
            eqs.push(eq("z2", "1/2*y2_1^2".into()));
            eqs.push(eq("z3", "1/2*y1_1*y2_1^2".into()));
            eqs.push(eq("z4", "1/2*y2_1*(x*y1_1*y2_1 - y1*y2_1 - 2*y1_1*y2)".into()));
            dictionary = first_order(&names(1..=2));
        }
        CaseId::Va | CaseId::Vb => {
            printed.push("ż = (ÿ)^2".into());
            eqs.push(eq("z", "y_2^2".into()));
            let mut d: Vec<(String, String)> = [("x", "x"), ("y", "y"), ("y_1", "p"), ("y_2", "q"), ("z", "2*z")]
                .iter()
                .map(|&(a, b)| (a.into(), b.into()))
                .collect();
            if case == CaseId::Vb {
                d.push(("y_3".into(), "r".into()));
            }
            dictionary = d;
        }
        CaseId::Ib => {
            jet_space = Some(format!("J^1(R, R^{})", l - 1));
            dictionary = first_order(&names(1..=l - 1));
        }
        CaseId::IIIb => {
            jet_space = Some("J^1(R, R)".into());
            dictionary = vec![("x".into(), "x".into()), ("y".into(), "y".into()), ("y_1".into(), "p".into())];
        }
    }
    Ok(MongeNormalForm {
        case,
        rank: l,
        printed,
        equations: eqs,
        dictionary,
        jet_space,
    })
}

impl MongeNormalForm {
    fn jet_names(&self) -> Vec<String> {
        let mut v: Vec<String> = self.dictionary.iter().map(|(j, _)| j.clone()).collect();
        for e in &self.equations {
            if !v.contains(&e.unknown) {
                v.push(e.unknown.clone());
            }
        }
        v
    }

    fn translate(&self, cf: &Coframe, jet: &Poly) -> Result<Poly> {
        let mut out = Poly::zero(&cf.space);
        let subs = self
            .jet_names()
            .iter()
            .map(|j| match self.dictionary.iter().find(|(a, _)| a == j) {
                Some((_, e)) => parse_polynomial(&cf.space, e),
                None => parse_polynomial(&cf.space, j),
            })
            .collect::<Result<Vec<Poly>>>()?;
        for (m, c) in jet.terms() {
            let mut t = Poly::constant(&cf.space, c.clone());
            for (i, &e) in m.exps().iter().enumerate() {
                t = &t * &subs[i].pow(u32::from(e));
            }
            out = &out + &t;
        }
        Ok(out)
    }

    /// `d(unknown) − rhs dx` for each equation, and `dy − ẏ dx` for each
    /// dependent variable, written on the coframe's coordinates.
    pub fn contact_forms(&self, cf: &Coframe) -> Result<Vec<Form>> {
        let jet = CoordSpace::new(self.jet_names());
        let x = cf.space.index_of("x").ok_or_else(|| Error::Invalid("no x coordinate".into()))?;
        let dx = Form::dvar(&cf.space, x);
        let differential = |name: &str| -> Result<Form> {
            let p = self.translate(cf, &Poly::var_named(&jet, name)?)?;
            Ok(Form::one_form(&cf.space, (0..cf.space.dim()).map(|i| (i, p.deriv(i)))))
        };
        let mut out = Vec::new();
        for (j, _) in &self.dictionary {
            if let Some((base, order)) = j.rsplit_once('_').and_then(|(b, o)| Some((b, o.parse::<u32>().ok()?))) {
                let lower = if order == 1 { base.to_string() } else { format!("{base}_{}", order - 1) };
                let v = self.translate(cf, &Poly::var_named(&jet, j)?)?;
                out.push(differential(&lower)?.sub(&dx.mul_function(&v)));
            }
        }
        for e in &self.equations {
            let rhs = self.translate(cf, &parse_polynomial(&jet, &e.rhs)?)?;
            out.push(differential(&e.unknown)?.sub(&dx.mul_function(&rhs)));
        }
        Ok(out)
    }
}

/// Contact forms of the normal form that a degree −1 frame field of the
/// displayed coframe fails to annihilate. Empty when the equations define
/// the standard system.
pub fn normal_form_defects(case: CaseId, l: usize) -> Result<Vec<String>> {
    let nf = monge_normal_form(case, l)?;
    let pc = displayed_coframe(case, nf.rank)?;
    let g = realize_case(case, nf.rank)?;
    let space = CoordSpace::new(g.coords());
    let forms = g
        .coords()
        .iter()
        .map(|c| {
            let p = pc
                .forms
                .iter()
                .find(|p| &p.coord == c)
                .ok_or_else(|| Error::Internal(format!("{case}: no form for {c}")))?;
            parse_one_form(&space, p.effective())
        })
        .collect::<Result<Vec<Form>>>()?;
    let cf = Coframe {
        name: g.name.clone(),
        space,
        weights: g.weights(),
        forms,
    };
    let fields = degree_one_fields(&cf)?;
    let forms = nf.contact_forms(&cf)?;
    let want = cf.weights.iter().filter(|&&w| w >= 2).count();
    let mut bad: Vec<String> = forms
        .iter()
        .filter(|f| fields.iter().any(|v| !v.pair(f).is_zero()))
        .map(|f| f.to_string())
        .collect();
    if forms.len() != want {
        bad.push(format!("{} contact forms for {want} generators", forms.len()));
    }
    Ok(bad)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn equations_define_the_standard_systems() {
        for case in CaseId::ALL {
            for l in [4, 5] {
                let bad = normal_form_defects(case, l).unwrap();
                assert!(bad.is_empty(), "{case} {l}: {bad:?}");
            }
        }
    }

    #[test]
    fn printed_text() {
        let ia = monge_normal_form(CaseId::Ia, 4).unwrap();
        assert_eq!(ia.printed, vec!["ż^i = ẏ^0 ẏ^i, 1 ≤ i ≤ ℓ−2".to_string()]);
        assert_eq!(ia.equations.len(), 2);
        let d = monge_normal_form(CaseId::IIId, 3).unwrap();
        assert_eq!(d.printed[3], "ż^4 = 1/2 ẏ^2 (x ẏ^1 ẏ^2 − y^1 ẏ^2 − 2 ẏ^1 y^2)");
        assert_eq!(monge_normal_form(CaseId::Va, 2).unwrap().printed, vec!["ż = (ÿ)^2".to_string()]);
    }

    #[test]
    fn wrong_sign_is_detected() {
        let mut nf = monge_normal_form(CaseId::Va, 2).unwrap();
        let g = realize_case(CaseId::Va, 2).unwrap();
        let cf = super::super::compute_mc_forms(&g, &super::super::default_ordering(&g)).unwrap();
        nf.equations[0].rhs = "-y_2^2".into();
        let fields = degree_one_fields(&cf).unwrap();
        let forms = nf.contact_forms(&cf).unwrap();
        assert!(forms.iter().any(|f| fields.iter().any(|v| !v.pair(f).is_zero())));
    }
}
