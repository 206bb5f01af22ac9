//! The published tables, regenerated as Markdown and compared with the
//! checked-in golden copies under `golden/v1`.
//!
//! Rows valid for a range of ranks are computed at every rank of the range
//! up to 8 and must agree; indices that move with the rank are written
//! relative to `ℓ` (`σ_{ℓ-1,ℓ-2}`, `ω_{ℓ-2}`, `A_{ℓ-3}`).

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::ops::RangeInclusive;

use serde::{Deserialize, Serialize};

use crate::cases::CaseId;
use crate::cohomology::{cohomology_classes, enumerate_w2, homogeneity_weight, levi_factors, CohomologyClass};
use crate::error::{Error, Result};
use crate::grading::Sigma;
use crate::rootsys::{build_root_system, AlgebraSpec, Family, RootSystem};
use crate::symsolver::{grade_decomposition, monge_spec, solve_symmetries};

/// Largest rank at which generic rows are sampled.
pub const MAX_SAMPLE_RANK: usize = 8;

pub const TABLE_NAMES: [&str; 7] = ["w2_a", "w2_c", "w2_b", "w2_d", "w2_exceptional", "h2_final", "symmetry_grades"];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table {
    pub name: String,
    pub markdown: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableCheck {
    pub name: String,
    pub passed: bool,
    /// `-golden` / `+computed` lines that differ.
    pub diff: Vec<String>,
}

pub fn golden(name: &str) -> Option<&'static str> {
    Some(match name {
        "w2_a" => include_str!("../golden/v1/w2_a.md"),
        "w2_c" => include_str!("../golden/v1/w2_c.md"),
        "w2_b" => include_str!("../golden/v1/w2_b.md"),
        "w2_d" => include_str!("../golden/v1/w2_d.md"),
        "w2_exceptional" => include_str!("../golden/v1/w2_exceptional.md"),
        "h2_final" => include_str!("../golden/v1/h2_final.md"),
        "symmetry_grades" => include_str!("../golden/v1/symmetry_grades.md"),
        _ => return None,
    })
}

pub fn generate(name: &str) -> Result<Table> {
    let markdown = match name {
        "w2_a" => w2_table("A", &a_rows())?,
        "w2_c" => w2_table("C", &c_rows())?,
        "w2_b" => w2_table("B", &b_rows())?,
        "w2_d" => w2_table("D", &d_rows())?,
        "w2_exceptional" => w2_table("exceptional", &exceptional_rows())?,
        "h2_final" => h2_table()?,
        "symmetry_grades" => symmetry_table()?,
        _ => return Err(Error::Invalid(format!("unknown table {name:?}"))),
    };
    Ok(Table {
        name: name.into(),
        markdown,
    })
}

/// Line diff of a generated table against a reference text.
pub fn compare(table: &Table, reference: &str) -> TableCheck {
    let got: Vec<&str> = table.markdown.lines().collect();
    let want: Vec<&str> = reference.lines().collect();
    let mut diff = Vec::new();
    for k in 0..got.len().max(want.len()) {
        match (want.get(k), got.get(k)) {
            (Some(a), Some(b)) if a == b => {}
            (a, b) => {
                if let Some(a) = a {
                    diff.push(format!("-{a}"));
                }
                if let Some(b) = b {
                    diff.push(format!("+{b}"));
                }
            }
        }
    }
    TableCheck {
        name: table.name.clone(),
        passed: diff.is_empty() && table.markdown == reference,
        diff,
    }
}

pub fn check(name: &str) -> Result<TableCheck> {
    let reference = golden(name).ok_or_else(|| Error::Invalid(format!("unknown table {name:?}")))?;
    Ok(compare(&generate(name)?, reference))
}

struct Row {
    case: Option<CaseId>,
    label: &'static str,
    family: Family,
    ranks: RangeInclusive<usize>,
    sigma: fn(usize) -> Vec<usize>,
}

fn row(label: &'static str, family: Family, ranks: RangeInclusive<usize>, sigma: fn(usize) -> Vec<usize>) -> Row {
    Row {
        case: None,
        label,
        family,
        ranks,
        sigma,
    }
}

fn a_rows() -> Vec<Row> {
    vec![
        row("A2{α1, α2}", Family::A, 2..=2, |_| vec![1, 2]),
        row("A3{α1, α2}", Family::A, 3..=3, |_| vec![1, 2]),
        row("A_ℓ{α1, α2}, ℓ ≥ 4", Family::A, 4..=MAX_SAMPLE_RANK, |_| vec![1, 2]),
        row("A3{α1, α2, α3}", Family::A, 3..=3, |_| vec![1, 2, 3]),
        row("A4{α1, α2, α3}", Family::A, 4..=4, |_| vec![1, 2, 3]),
        row("A_ℓ{α1, α2, α3}, ℓ ≥ 5", Family::A, 5..=MAX_SAMPLE_RANK, |_| vec![1, 2, 3]),
    ]
}

fn c_rows() -> Vec<Row> {
    vec![
        row("C3{α1, α2, α3}", Family::C, 3..=3, |_| vec![1, 2, 3]),
        row("C3{α2, α3}", Family::C, 3..=3, |_| vec![2, 3]),
        row("C_ℓ{α_{ℓ-1}, α_ℓ}, ℓ ≥ 4", Family::C, 4..=MAX_SAMPLE_RANK, |l| vec![l - 1, l]),
    ]
}

fn b_rows() -> Vec<Row> {
    vec![
        row("B2{α1, α2}", Family::B, 2..=2, |_| vec![1, 2]),
        row("B2{α2}", Family::B, 2..=2, |_| vec![2]),
        row("B3{α1, α2}", Family::B, 3..=3, |_| vec![1, 2]),
        row("B3{α2, α3}", Family::B, 3..=3, |_| vec![2, 3]),
        row("B3{α1, α2, α3}", Family::B, 3..=3, |_| vec![1, 2, 3]),
        row("B_ℓ{α1, α2}, ℓ ≥ 4", Family::B, 4..=MAX_SAMPLE_RANK, |_| vec![1, 2]),
        row("B4{α3, α4}", Family::B, 4..=4, |_| vec![3, 4]),
        row("B_ℓ{α_{ℓ-1}, α_ℓ}, ℓ ≥ 5", Family::B, 5..=MAX_SAMPLE_RANK, |l| vec![l - 1, l]),
    ]
}

fn d_rows() -> Vec<Row> {
    vec![
        row("D4{α1, α2}", Family::D, 4..=4, |_| vec![1, 2]),
        row("D_ℓ{α1, α2}, ℓ ≥ 5", Family::D, 5..=MAX_SAMPLE_RANK, |_| vec![1, 2]),
        row("D5{α3, α5}", Family::D, 5..=5, |_| vec![3, 5]),
        row("D_ℓ{α_{ℓ-2}, α_ℓ}, ℓ ≥ 6", Family::D, 6..=MAX_SAMPLE_RANK, |l| vec![l - 2, l]),
    ]
}

fn exceptional_rows() -> Vec<Row> {
    vec![
        row("F4{α1, α2}", Family::F, 4..=4, |_| vec![1, 2]),
        row("E6{α5, α6}", Family::E, 6..=6, |_| vec![5, 6]),
        row("E7{α6, α7}", Family::E, 7..=7, |_| vec![6, 7]),
    ]
}

fn case_row(case: CaseId, label: &'static str, ranks: RangeInclusive<usize>) -> Row {
    Row {
        case: Some(case),
        label,
        family: case.family(),
        ranks,
        sigma: match case {
            CaseId::Ia | CaseId::IIb | CaseId::IIId => |_| vec![1, 2, 3],
            CaseId::IIIa | CaseId::IVa | CaseId::Vb => |_| vec![1, 2],
            CaseId::IIa => |l| vec![l - 1, l],
            CaseId::IIIc => |_| vec![2, 3],
            CaseId::Va => |_| vec![1],
            CaseId::Ib | CaseId::IIIb => |_| vec![1],
        },
    }
}

/// Rows of the final table. The generic IVa row is sampled from ℓ = 6 on,
/// where the Levi factor `D_{ℓ-2}` is not a low-rank coincidence.
fn h2_rows() -> Vec<Row> {
    vec![
        case_row(CaseId::Ia, "A3{α1, α2, α3}", 3..=3),
        case_row(CaseId::Ia, "A_ℓ{α1, α2, α3}, ℓ ≥ 4", 4..=MAX_SAMPLE_RANK),
        case_row(CaseId::IIa, "C3{α2, α3}", 3..=3),
        case_row(CaseId::IIa, "C_ℓ{α_{ℓ-1}, α_ℓ}, ℓ ≥ 4", 4..=MAX_SAMPLE_RANK),
        case_row(CaseId::IIb, "C3{α1, α2, α3}", 3..=3),
        case_row(CaseId::IIIa, "B3{α1, α2}", 3..=3),
        case_row(CaseId::IIIa, "B_ℓ{α1, α2}, ℓ ≥ 4", 4..=MAX_SAMPLE_RANK),
        case_row(CaseId::IIIc, "B3{α2, α3}", 3..=3),
        case_row(CaseId::IIId, "B3{α1, α2, α3}", 3..=3),
        case_row(CaseId::IVa, "D4{α1, α2}", 4..=4),
        case_row(CaseId::IVa, "D_ℓ{α1, α2}, ℓ ≥ 5", 6..=MAX_SAMPLE_RANK),
        case_row(CaseId::Va, "G2{α1}", 2..=2),
        case_row(CaseId::Vb, "G2{α1, α2}", 2..=2),
    ]
}

fn setup(r: &Row, l: usize) -> Result<(RootSystem, Sigma)> {
    let rs = build_root_system(AlgebraSpec::new(r.family, l)?)?;
    let sigma = Sigma::one_based(l, &(r.sigma)(l))?;
    Ok((rs, sigma))
}

/// An index that is the same at every sampled rank, or a fixed distance below it.
fn symbolic(samples: &[(usize, usize)]) -> Option<String> {
    let (_, v0) = samples[0];
    if samples.iter().all(|&(_, v)| v == v0) {
        return Some(v0.to_string());
    }
    let c = samples[0].0 as i64 - v0 as i64;
    if samples.iter().all(|&(l, v)| l as i64 - v as i64 == c) {
        return Some(if c == 0 { "ℓ".into() } else { format!("ℓ-{c}") });
    }
    None
}

fn is_digit(s: &str) -> bool {
    s.len() == 1 && s.chars().all(|c| c.is_ascii_digit())
}

fn subscript(base: &str, parts: &[String]) -> String {
    if parts.iter().all(|p| is_digit(p)) {
        format!("{base}{}", parts.concat())
    } else if parts.len() == 1 {
        format!("{base}_{{{}}}", parts[0])
    } else {
        format!("{base}_{{{}}}", parts.join(","))
    }
}

/// Symbolizes position `k` of each sample vector; all vectors have equal length.
fn symbolic_vec(label: &str, samples: &[(usize, Vec<usize>)]) -> Result<Vec<String>> {
    let n = samples[0].1.len();
    if samples.iter().any(|(_, v)| v.len() != n) {
        return Err(Error::Internal(format!("{label}: shape changes with the rank")));
    }
    (0..n)
        .map(|k| {
            let s: Vec<(usize, usize)> = samples.iter().map(|(l, v)| (*l, v[k])).collect();
            symbolic(&s).ok_or_else(|| Error::Internal(format!("{label}: index is neither fixed nor ℓ-relative")))
        })
        .collect()
}

fn uniform<T: PartialEq + Clone>(label: &str, values: &[T]) -> Result<T> {
    if values.windows(2).any(|w| w[0] != w[1]) {
        return Err(Error::Internal(format!("{label}: value changes with the rank")));
    }
    Ok(values[0].clone())
}

fn sigma_labels(label: &str, words: &[(usize, Vec<Vec<usize>>)]) -> Result<Vec<String>> {
    let n = words[0].1.len();
    if words.iter().any(|(_, w)| w.len() != n) {
        return Err(Error::Internal(format!("{label}: W² size changes with the rank")));
    }
    (0..n)
        .map(|k| {
            let s: Vec<(usize, Vec<usize>)> = words.iter().map(|(l, w)| (*l, w[k].iter().map(|i| i + 1).collect())).collect();
            Ok(subscript("σ", &symbolic_vec(label, &s)?))
        })
        .collect()
}

fn w2_table(title: &str, rows: &[Row]) -> Result<String> {
    let mut out = String::new();
    writeln!(out, "# W²_Σ and homogeneity weights, {title}").unwrap();
    writeln!(out).unwrap();
    writeln!(out, "| Monge system | W²_Σ | Weights of σ_ij |").unwrap();
    writeln!(out, "|---|---|---|").unwrap();
    for r in rows {
        let mut words = Vec::new();
        let mut weights = Vec::new();
        for l in r.ranks.clone() {
            let (rs, sigma) = setup(r, l)?;
            let w2 = enumerate_w2(&rs, &sigma);
            weights.push(w2.iter().map(|w| homogeneity_weight(&rs, &sigma, w)).collect::<Result<Vec<i64>>>()?);
            words.push((l, w2.into_iter().map(|w| w.word).collect::<Vec<_>>()));
        }
        let labels = sigma_labels(r.label, &words)?;
        let weights = uniform(r.label, &weights)?;
        let ws: Vec<String> = weights.iter().map(i64::to_string).collect();
        writeln!(out, "| {} | [{}] | [{}] |", r.label, labels.join(", "), ws.join(", ")).unwrap();
    }
    Ok(out)
}

fn family_letter(f: Family) -> &'static str {
    match f {
        Family::A => "A",
        Family::B => "B",
        Family::C => "C",
        Family::D => "D",
        Family::E => "E",
        Family::F => "F",
        Family::G => "G",
    }
}

/// Highest weight per Levi factor, as `(node, coefficient)` pairs.
type LocalWeights = Vec<Vec<(usize, i64)>>;

struct RankData {
    l: usize,
    factors: Vec<(Family, usize)>,
    /// Positive-homogeneity classes with their Levi-local highest weights.
    classes: Vec<(CohomologyClass, LocalWeights)>,
}

fn rank_data(r: &Row, l: usize) -> Result<RankData> {
    let (rs, sigma) = setup(r, l)?;
    let comps = levi_factors(&rs, &sigma);
    let factors = comps.iter().map(|c| rs.component_type(c)).collect();
    let classes = cohomology_classes(&rs, &sigma, 2)?
        .into_iter()
        .filter(|c| c.homogeneity_weight > 0)
        .map(|c| {
            let hw = comps
                .iter()
                .map(|nodes| {
                    nodes
                        .iter()
                        .enumerate()
                        .map(|(n, k)| (n + 1, c.highest_weight_pairings[k]))
                        .filter(|&(_, v)| v != 0)
                        .collect()
                })
                .collect();
            (c, hw)
        })
        .collect();
    Ok(RankData { l, factors, classes })
}

fn levi_cell(label: &str, data: &[RankData]) -> Result<String> {
    let fams = uniform(label, &data.iter().map(|d| d.factors.iter().map(|f| f.0).collect::<Vec<_>>()).collect::<Vec<_>>())?;
    if fams.is_empty() {
        return Ok("0".into());
    }
    let ranks: Vec<(usize, Vec<usize>)> = data.iter().map(|d| (d.l, d.factors.iter().map(|f| f.1).collect())).collect();
    let ms = symbolic_vec(label, &ranks)?;
    Ok(fams
        .iter()
        .zip(&ms)
        .map(|(f, m)| subscript(family_letter(*f), std::slice::from_ref(m)))
        .collect::<Vec<_>>()
        .join(" ⊕ "))
}

fn weight_cell(label: &str, data: &[RankData], k: usize) -> Result<String> {
    let per: Vec<&Vec<Vec<(usize, i64)>>> = data.iter().map(|d| &d.classes[k].1).collect();
    let nf = per[0].len();
    let mut parts = Vec::new();
    for f in 0..nf {
        let coeffs = uniform(label, &per.iter().map(|p| p[f].iter().map(|t| t.1).collect::<Vec<_>>()).collect::<Vec<_>>())?;
        let idx: Vec<(usize, Vec<usize>)> = data.iter().zip(&per).map(|(d, p)| (d.l, p[f].iter().map(|t| t.0).collect())).collect();
        let names = symbolic_vec(label, &idx)?;
        let terms: Vec<String> = coeffs
            .iter()
            .zip(&names)
            .map(|(c, n)| {
                let w = subscript("ω", std::slice::from_ref(n));
                if *c == 1 { w } else { format!("{c}{w}") }
            })
            .collect();
        parts.push(if terms.is_empty() { "0".to_string() } else { terms.join(" + ") });
    }
    Ok(match parts.len() {
        0 => "0".into(),
        _ if parts.iter().all(|p| p == "0") => "0".into(),
        1 => parts.remove(0),
        _ => format!("[{}]", parts.join(", ")),
    })
}

fn h2_table() -> Result<String> {
    let mut out = String::new();
    writeln!(out, "# H² with positive homogeneity").unwrap();
    writeln!(out).unwrap();
    writeln!(out, "| Case | Non-rigid parabolic Monge | 𝔤₀^ss | W²_Σ | Hom. wt | Wt of −σ(θ) | Highest weight |").unwrap();
    writeln!(out, "|---|---|---|---|---|---|---|").unwrap();
    for r in h2_rows() {
        let data: Vec<RankData> = r.ranks.clone().map(|l| rank_data(&r, l)).collect::<Result<_>>()?;
        let levi = levi_cell(r.label, &data)?;
        let words: Vec<(usize, Vec<Vec<usize>>)> =
            data.iter().map(|d| (d.l, d.classes.iter().map(|c| c.0.sigma.word.clone()).collect())).collect();
        let labels = sigma_labels(r.label, &words)?;
        for (k, sl) in labels.iter().enumerate() {
            let hom = uniform(r.label, &data.iter().map(|d| d.classes[k].0.homogeneity_weight).collect::<Vec<_>>())?;
            let mst = uniform(r.label, &data.iter().map(|d| d.classes[k].0.minus_sigma_theta_weight).collect::<Vec<_>>())?;
            let hw = weight_cell(r.label, &data, k)?;
            let case = r.case.map(|c| c.label()).unwrap_or("");
            writeln!(out, "| {case} | {} | {levi} | {sl} | {hom} | {mst} | {hw} |", r.label).unwrap();
        }
    }
    Ok(out)
}

/// Symmetry dims of the three quadratic models by leader grade (x, y, z of
/// weight 1, ẏ of weight 0), at ranks 3 and 4.
fn symmetry_table() -> Result<String> {
    let mut out = String::new();
    writeln!(out, "# Point symmetries of the quadratic Monge models by grade").unwrap();
    writeln!(out).unwrap();
    writeln!(out, "| Model | ℓ | grade −1 | grade 0 | grade 1 | total |").unwrap();
    writeln!(out, "|---|---|---|---|---|---|").unwrap();
    for (case, model) in [
        (CaseId::Ia, "ż^i = ẏ^0 ẏ^i"),
        (CaseId::IIIa, "ż = ½ κ_ij ẏ^i ẏ^j"),
        (CaseId::IIa, "ż^ij = ẏ^i ẏ^j"),
    ] {
        for l in [3, 4] {
            let ms = monge_spec(case, l, None)?;
            let sa = solve_symmetries(&ms)?;
            let g: BTreeMap<i64, usize> = grade_decomposition(&sa, &ms.leader_weights());
            if g.keys().any(|j| j.abs() > 1) {
                return Err(Error::Internal(format!("{}: grade outside −1..1", ms.name)));
            }
            let at = |j: i64| g.get(&j).copied().unwrap_or(0);
            writeln!(out, "| {model} | {l} | {} | {} | {} | {} |", at(-1), at(0), at(1), sa.dim()).unwrap();
        }
    }
    Ok(out)
}
