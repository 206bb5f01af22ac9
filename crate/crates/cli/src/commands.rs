//! Dispatch from a [`Request`] to the core library, producing typed payloads.

use monge_core::cases::{classify, CaseId};
use monge_core::cohomology::{cohomology_classes, is_rigid, levi_label};
use monge_core::grading::{grade, Sigma};
use monge_core::mcforms::{
    case_coframe, case_pfaffian, iiic_restricted, monge_normal_form, standard_pfaffian, verify_displayed_forms, PfaffianSystem,
};
use monge_core::monge::{enumerate_monge, is_monge};
use monge_core::nilrealize::{bracket_mismatches, displayed_algebra, realize_case};
use monge_core::rootsys::{build_root_system, AlgebraSpec, Family, RootSystem};
use monge_core::symsolver::{
    grade_decomposition, kernel_growth, monge_spec, pfaffian_symmetries, point_symmetry_check, solve_symmetries_with_degree,
    SymmetryAlgebra,
};
use monge_core::tables::{self, TableCheck, TABLE_NAMES};
use monge_core::{Error, Result};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::request::Request;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Payload {
    Roots { algebras: Vec<RootsInfo> },
    Grade(GradeInfo),
    MongeOne(MongeOne),
    MongeList { algebras: Vec<MongeList> },
    Cohomology(CohomologyInfo),
    Realize(RealizeInfo),
    Mc(McInfo),
    Sym(SymInfo),
    SymGrowth(GrowthInfo),
    Tables { tables: Vec<TableCheck> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootsInfo {
    pub algebra: String,
    pub rank: usize,
    pub dim: usize,
    pub positive_roots: usize,
    pub highest_root: Vec<i64>,
    /// Nonzero `(i, ⟨θ, α_i⟩)`, i 1-based.
    pub theta_pairings: Vec<(usize, i64)>,
    pub cartan: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradeInfo {
    pub algebra: String,
    pub sigma: Vec<usize>,
    pub depth: i64,
    /// `(j, dim 𝔤_j)`, j ascending.
    pub dims: Vec<(i64, usize)>,
    pub levi: String,
    pub case: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MongeOne {
    pub algebra: String,
    pub sigma: Vec<usize>,
    pub is_monge: bool,
    /// 1-based.
    pub leader: Option<usize>,
    pub dim_g1: usize,
    pub rigid: Option<bool>,
    pub case: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MongeEntry {
    pub sigma: Vec<usize>,
    pub leader: usize,
    pub rigid: bool,
    pub case: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MongeList {
    pub algebra: String,
    pub gradings: Vec<MongeEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassInfo {
    pub sigma: String,
    pub homogeneity_weight: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub minus_sigma_theta_weight: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub torsion: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub highest_weight: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyInfo {
    pub algebra: String,
    pub sigma: Vec<usize>,
    pub q: usize,
    pub levi: String,
    pub classes: Vec<ClassInfo>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealizeInfo {
    pub case: String,
    pub rank: usize,
    pub basis: Vec<String>,
    pub degree_dims: Vec<(i64, usize)>,
    pub brackets: Vec<String>,
    pub structure_equations: Vec<String>,
    pub jacobi: bool,
    pub graded: bool,
    /// Entries where the displayed bracket table differs, if one is displayed.
    pub displayed_mismatches: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct McInfo {
    pub case: String,
    pub rank: usize,
    pub ordering: Vec<String>,
    pub forms: Vec<String>,
    pub structure_defects: Vec<String>,
    pub pfaffian: Vec<String>,
    pub displayed_check_passed: bool,
    pub errata: Vec<String>,
    pub normal_form: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymInfo {
    pub system: String,
    pub solver: String,
    pub coordinates: Vec<String>,
    pub weights: Vec<i64>,
    pub dim: usize,
    pub grades: Vec<(i64, usize)>,
    pub point_symmetries: bool,
    pub nonzero_brackets: usize,
    pub basis: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrowthInfo {
    pub system: String,
    /// `(bound, dimension of the bounded solution space)`.
    pub growth: Vec<(i64, usize)>,
}

fn need<T: Copy>(v: Option<T>, what: &str) -> Result<T> {
    v.ok_or_else(|| Error::Invalid(format!("missing --{what}")))
}

fn spec_of(req: &Request, rank: usize) -> Result<AlgebraSpec> {
    let f = need(req.family, "family")?;
    AlgebraSpec::new(Family::parse(&f.to_string())?, rank)
}

/// The requested ranks: `--rank`, or `--rank-min..=--rank-max`.
fn ranks(req: &Request) -> Result<Vec<usize>> {
    match (req.rank, req.rank_min, req.rank_max) {
        (Some(l), None, None) => Ok(vec![l]),
        (None, Some(a), Some(b)) if a <= b => Ok((a..=b).collect()),
        (None, None, None) => Err(Error::Invalid("missing --rank (or --rank-min and --rank-max)".into())),
        _ => Err(Error::Invalid("give --rank, or --rank-min ≤ --rank-max".into())),
    }
}

fn single(req: &Request) -> Result<(RootSystem, Sigma)> {
    let l = need(req.rank, "rank")?;
    let rs = build_root_system(spec_of(req, l)?)?;
    let idx = req.sigma.clone().ok_or_else(|| Error::Invalid("missing --sigma".into()))?;
    let sigma = Sigma::one_based(l, &idx)?;
    Ok((rs, sigma))
}

fn case_label(rs: &RootSystem, sigma: &Sigma) -> Result<Option<String>> {
    let spec = rs.spec().ok_or_else(|| Error::Internal("root system without a name".into()))?;
    Ok(classify(spec, sigma)?.map(|(c, l)| format!("{c} (ℓ={l})")))
}

fn roots(req: &Request) -> Result<Payload> {
    let specs: Vec<AlgebraSpec> = ranks(req)?.into_iter().map(|l| spec_of(req, l)).collect::<Result<_>>()?;
    let algebras = specs
        .par_iter()
        .map(|&spec| {
            let rs = build_root_system(spec)?;
            let theta = rs.highest_root();
            Ok(RootsInfo {
                algebra: spec.to_string(),
                rank: rs.rank(),
                dim: rs.dim(),
                positive_roots: rs.positive_roots().len(),
                highest_root: theta.coeffs().to_vec(),
                theta_pairings: (0..rs.rank())
                    .map(|i| (i + 1, rs.pairing(theta, i)))
                    .filter(|(_, p)| *p != 0)
                    .collect(),
                cartan: rs.cartan().to_vec(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Payload::Roots { algebras })
}

fn grading(req: &Request) -> Result<Payload> {
    let (rs, sigma) = single(req)?;
    let info = grade(&rs, &sigma)?;
    Ok(Payload::Grade(GradeInfo {
        algebra: rs.spec().map(|s| s.to_string()).unwrap_or_default(),
        sigma: sigma.one_based_indices(),
        depth: info.depth,
        dims: info.dims.iter().map(|(&j, &n)| (j, n)).collect(),
        levi: levi_label(&rs, &sigma),
        case: case_label(&rs, &sigma)?,
    }))
}

fn monge(req: &Request) -> Result<Payload> {
    if !req.enumerate {
        let (rs, sigma) = single(req)?;
        let v = is_monge(&rs, &sigma)?;
        return Ok(Payload::MongeOne(MongeOne {
            algebra: rs.spec().map(|s| s.to_string()).unwrap_or_default(),
            sigma: sigma.one_based_indices(),
            is_monge: v.is_monge,
            leader: v.leader.map(|i| i + 1),
            dim_g1: v.dim_g1,
            rigid: if v.is_monge { Some(is_rigid(&rs, &sigma)?) } else { None },
            case: case_label(&rs, &sigma)?,
        }));
    }
    let specs: Vec<AlgebraSpec> = ranks(req)?.into_iter().map(|l| spec_of(req, l)).collect::<Result<_>>()?;
    let algebras = specs
        .par_iter()
        .map(|&spec| {
            let rs = build_root_system(spec)?;
            let gradings = enumerate_monge(&rs)?
                .into_iter()
                .map(|(sigma, leader)| {
                    Ok(MongeEntry {
                        sigma: sigma.one_based_indices(),
                        leader: leader + 1,
                        rigid: is_rigid(&rs, &sigma)?,
                        case: case_label(&rs, &sigma)?,
                    })
                })
                .collect::<Result<_>>()?;
            Ok(MongeList {
                algebra: spec.to_string(),
                gradings,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Payload::MongeList { algebras })
}

fn cohomology(req: &Request) -> Result<Payload> {
    let (rs, sigma) = single(req)?;
    let q = req.q.unwrap_or(2);
    let classes = cohomology_classes(&rs, &sigma, q)?
        .into_iter()
        .map(|c| {
            let full = !req.weights;
            ClassInfo {
                sigma: c.sigma.label(),
                homogeneity_weight: c.homogeneity_weight,
                minus_sigma_theta_weight: full.then_some(c.minus_sigma_theta_weight),
                torsion: full.then_some(c.torsion),
                highest_weight: full.then(|| c.highest_weight.clone()),
            }
        })
        .collect();
    Ok(Payload::Cohomology(CohomologyInfo {
        algebra: rs.spec().map(|s| s.to_string()).unwrap_or_default(),
        sigma: sigma.one_based_indices(),
        q,
        levi: levi_label(&rs, &sigma),
        classes,
    }))
}

fn case_and_rank(req: &Request) -> Result<(CaseId, usize)> {
    let case = CaseId::parse(req.case.as_deref().ok_or_else(|| Error::Invalid("missing --case".into()))?)?;
    let (lo, hi) = case.rank_range();
    let l = case.rank_or(req.rank.unwrap_or(lo.max(3)))?;
    if req.rank.is_some_and(|r| r != l) || hi.is_some_and(|h| l > h) {
        return Err(Error::Invalid(format!("{} exists only at rank {l}", case.label())));
    }
    Ok((case, l))
}

fn realize(req: &Request) -> Result<Payload> {
    let (case, l) = case_and_rank(req)?;
    let g = realize_case(case, l)?;
    let brackets = g
        .nonzero_brackets()
        .map(|((a, b), comb)| {
            let rhs: Vec<String> = comb
                .iter()
                .map(|(c, k)| {
                    let name = &g.basis[*c].label;
                    if k == &monge_core::Rational::from_integer(1.into()) {
                        name.clone()
                    } else {
                        format!("{k} {name}")
                    }
                })
                .collect();
            format!("[{}, {}] = {}", g.basis[*a].label, g.basis[*b].label, rhs.join(" + "))
        })
        .collect();
    let displayed_mismatches = match displayed_algebra(case, l) {
        Ok(p) => Some(bracket_mismatches(&g, &p)?),
        Err(Error::Unsupported(_)) => None,
        Err(e) => return Err(e),
    };
    Ok(Payload::Realize(RealizeInfo {
        case: case.to_string(),
        rank: l,
        basis: g.basis.iter().map(|b| format!("{} (deg {})", b.label, b.degree)).collect(),
        degree_dims: g.degree_dims().into_iter().collect(),
        brackets,
        structure_equations: g.dual_structure_equations().iter().map(|e| e.to_string()).collect(),
        jacobi: g.check_jacobi().is_ok(),
        graded: g.check_graded().is_ok(),
        displayed_mismatches,
    }))
}

fn mc(req: &Request) -> Result<Payload> {
    let (case, l) = case_and_rank(req)?;
    let g = realize_case(case, l)?;
    let cf = case_coframe(case, l)?;
    let ps = standard_pfaffian(&cf)?;
    let check = verify_displayed_forms(case, l)?;
    let nf = monge_normal_form(case, l)?;
    Ok(Payload::Mc(McInfo {
        case: case.to_string(),
        rank: l,
        ordering: cf.coords().to_vec(),
        forms: cf.forms.iter().zip(cf.coords()).map(|(f, c)| format!("θ^{c} = {f}")).collect(),
        structure_defects: cf.structure_defects(&g)?,
        pfaffian: ps.generators.iter().zip(&ps.labels).map(|(f, n)| format!("{n} = {f}")).collect(),
        displayed_check_passed: check.passed(),
        errata: check.errata.clone(),
        normal_form: nf.printed.clone(),
    }))
}

fn sym_info(sa: &SymmetryAlgebra, solver: &str) -> SymInfo {
    SymInfo {
        system: sa.name.clone(),
        solver: solver.into(),
        coordinates: sa.space.names().to_vec(),
        weights: sa.weights.clone(),
        dim: sa.dim(),
        grades: grade_decomposition(sa, &sa.weights).into_iter().collect(),
        point_symmetries: point_symmetry_check(sa),
        nonzero_brackets: sa.brackets.len(),
        basis: sa.basis.iter().map(|v| v.to_string()).collect(),
    }
}

fn pfaffian_payload(ps: &PfaffianSystem, bound: i64) -> Result<Payload> {
    Ok(Payload::Sym(sym_info(&pfaffian_symmetries(ps, bound)?, "bounded weighted-degree ansatz")))
}

fn sym(req: &Request) -> Result<Payload> {
    if req.restricted {
        let ps = iiic_restricted();
        let depth = *ps.weights.iter().max().unwrap_or(&0);
        return pfaffian_payload(&ps, req.bound.unwrap_or(depth));
    }
    let (case, l) = case_and_rank(req)?;
    if case.has_h1_at_rank(l) {
        let ps = case_pfaffian(case, l)?;
        let top = req.bound.unwrap_or(4);
        let bounds: Vec<i64> = (0..=top).collect();
        return Ok(Payload::SymGrowth(GrowthInfo {
            system: format!("{case} ℓ={l}"),
            growth: kernel_growth(&ps, &bounds)?,
        }));
    }
    match case {
        CaseId::Ia | CaseId::IIa | CaseId::IIIa | CaseId::IVa => {
            let ms = monge_spec(case, l, req.signature)?;
            let sa = solve_symmetries_with_degree(&ms, req.degree.unwrap_or(2))?;
            Ok(Payload::Sym(sym_info(&sa, "determining equations")))
        }
        _ => {
            let ps = case_pfaffian(case, l)?;
            let depth = *ps.weights.iter().max().unwrap_or(&0);
            pfaffian_payload(&ps, req.bound.unwrap_or(depth))
        }
    }
}

fn reproduce(_req: &Request) -> Result<Payload> {
    let tables = TABLE_NAMES.par_iter().map(|n| tables::check(n)).collect::<Result<Vec<_>>>()?;
    Ok(Payload::Tables { tables })
}

pub fn run(req: &Request) -> Result<Payload> {
    match req.command.as_str() {
        "roots" => roots(req),
        "grade" => grading(req),
        "monge" => monge(req),
        "cohomology" => cohomology(req),
        "realize" => realize(req),
        "mc" => mc(req),
        "sym" => sym(req),
        "reproduce-tables" => reproduce(req),
        other => Err(Error::Invalid(format!("unknown command {other:?}"))),
    }
}

/// 0 success, 1 bad input or domain error, 2 internal invariant breach or
/// table mismatch.
pub fn exit_status(outcome: &Result<Payload>) -> u8 {
    match outcome {
        Ok(Payload::Tables { tables }) if tables.iter().any(|t| !t.passed) => 2,
        Ok(_) => 0,
        Err(e) if e.is_internal() => 2,
        Err(_) => 1,
    }
}
