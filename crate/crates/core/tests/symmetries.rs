use monge_core::cases::CaseId;
use monge_core::grading::grade;
use monge_core::mcforms::{case_pfaffian, iiic_restricted};
use monge_core::rootsys::build_root_system;
use monge_core::symsolver::*;

fn root_dims(case: CaseId, l: usize, sa: &SymmetryAlgebra) {
    let (spec, sigma) = case.spec_and_sigma(l).unwrap();
    let info = grade(&build_root_system(spec).unwrap(), &sigma).unwrap();
    let gd = grade_decomposition(sa, &sa.weights);
    let expected: std::collections::BTreeMap<i64, usize> =
        info.dims.iter().filter(|(_, &n)| n > 0).map(|(&j, &n)| (j, n)).collect();
    assert_eq!(gd, expected, "{}", sa.name);
}

#[test]
fn monge_systems() {
    for (case, l, sig, dim) in [
        (CaseId::Ia, 3, None, 15),
        (CaseId::Ia, 4, None, 24),
        (CaseId::IIa, 3, None, 21),
        (CaseId::IIIa, 3, Some((3, 0)), 21),
        (CaseId::IIIa, 3, Some((2, 1)), 21),
        (CaseId::IVa, 4, None, 28),
    ] {
        let sa = solve_symmetries(&monge_spec(case, l, sig).unwrap()).unwrap();
        assert_eq!(sa.dim(), dim, "{}", sa.name);
        assert!(point_symmetry_check(&sa), "{}", sa.name);
        root_dims(case, l, &sa);
    }
}

#[test]
fn pfaffian_systems() {
    for (case, dim) in [(CaseId::IIb, 21), (CaseId::IIId, 21), (CaseId::Va, 14), (CaseId::Vb, 14), (CaseId::IIIc, 21)] {
        let l = case.rank_or(3).unwrap();
        let ps = case_pfaffian(case, l).unwrap();
        let depth = *ps.weights.iter().max().unwrap();
        let sa = pfaffian_symmetries(&ps, depth).unwrap();
        assert_eq!(sa.dim(), dim, "{case}");
        assert!(point_symmetry_check(&sa));
        root_dims(case, l, &sa);
        // nothing new one grade further up
        assert_eq!(kernel_growth(&ps, &[depth + 1]).unwrap()[0].1, dim, "{case}");
    }
}

#[test]
fn restricted_iiic_is_sixteen() {
    let ps = iiic_restricted();
    let sa = pfaffian_symmetries(&ps, 4).unwrap();
    assert_eq!(sa.dim(), 16);
    assert_eq!(kernel_growth(&ps, &[4, 6]).unwrap(), vec![(4, 16), (6, 16)]);
}

#[test]
fn cubic_ansatz_adds_nothing() {
    for (case, sig) in [(CaseId::Ia, None), (CaseId::IIa, None), (CaseId::IIIa, Some((2, 1)))] {
        let ms = monge_spec(case, 3, sig).unwrap();
        assert_eq!(
            solve_symmetries_with_degree(&ms, 3).unwrap().dim(),
            solve_symmetries_with_degree(&ms, 2).unwrap().dim()
        );
    }
}

#[test]
fn infinite_cases_keep_growing() {
    for (case, l) in [(CaseId::Ib, CaseId::Ib.rank_or(3).unwrap()), (CaseId::IIIb, CaseId::IIIb.rank_or(3).unwrap()), (CaseId::IIIa, 2)] {
        let ps = case_pfaffian(case, l).unwrap();
        let g = kernel_growth(&ps, &[2, 3, 4]).unwrap();
        assert!(g[0].1 < g[1].1 && g[1].1 < g[2].1, "{case} {g:?}");
    }
}

#[test]
fn leader_grading_matches_section_table() {
    let ms = monge_spec(CaseId::IIIa, 3, Some((2, 1))).unwrap();
    let sa = solve_symmetries(&ms).unwrap();
    let gd = grade_decomposition(&sa, &ms.leader_weights());
    assert_eq!(gd[&-1], 5);
    for (j, n) in &gd {
        assert_eq!(gd.get(&-j), Some(n));
    }
}
