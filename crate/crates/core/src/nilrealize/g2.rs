//! The Borel part of `𝔤₂` in a Chevalley basis, and the two Monge gradings
//! built from it.

use super::{BasisElement, GradedNilpotent};
use crate::error::{Error, Result};
use crate::grading::Sigma;
use crate::symalg::Field;
use crate::Rational;

fn q(n: i64) -> Rational {
    Rational::from_int(n)
}

/// `Y_k` spans the root space of the `k`-th negative root
/// `−α1, −α2, −α1−α2, −2α1−α2, −3α1−α2, −3α1−2α2`.
pub const G2_NEGATIVE_ROOTS: [[i64; 2]; 6] = [[-1, 0], [0, -1], [-1, -1], [-2, -1], [-3, -1], [-3, -2]];

/// `H1, H2, Y1, …, Y6` with the brackets of the Chevalley basis.
pub fn g2_table() -> GradedNilpotent {
    let mut basis = vec![BasisElement::new("H1", "h1", 0), BasisElement::new("H2", "h2", 0)];
    for (k, r) in G2_NEGATIVE_ROOTS.iter().enumerate() {
        let label = format!("Y{}", k + 1);
        basis.push(BasisElement::new(&label, &label.to_lowercase(), r[0] + r[1]));
    }
    let table: Vec<(&str, &str, Rational, &str)> = vec![
        ("H1", "Y1", q(-2), "Y1"),
        ("H1", "Y2", q(3), "Y2"),
        ("H1", "Y3", q(1), "Y3"),
        ("H1", "Y4", q(-1), "Y4"),
        ("H1", "Y5", q(-3), "Y5"),
        ("H2", "Y1", q(1), "Y1"),
        ("H2", "Y2", q(-2), "Y2"),
        ("H2", "Y3", q(-1), "Y3"),
        ("H2", "Y5", q(1), "Y5"),
        ("H2", "Y6", q(-1), "Y6"),
        ("Y1", "Y2", q(-1), "Y3"),
        ("Y1", "Y3", q(-2), "Y4"),
        ("Y1", "Y4", q(3), "Y5"),
        ("Y2", "Y5", q(1), "Y6"),
        ("Y3", "Y4", q(3), "Y6"),
    ];
    GradedNilpotent::from_table("g2 Borel", basis, &table).expect("labels are valid")
}

/// `(label, coordinate, Y index, scale)`: the element is `scale · Y_k`.
type Scaled = (&'static str, &'static str, usize, i64);

const VA: [Scaled; 5] = [("Q", "q", 3, 1), ("X", "x", 1, 1), ("P", "p", 4, 2), ("Y", "y", 5, -6), ("Z", "z", 6, 6)];
const VB: [Scaled; 6] = [
    ("R", "r", 2, 1),
    ("X", "x", 1, 1),
    ("Q", "q", 3, 1),
    ("P", "p", 4, 2),
    ("Y", "y", 5, -6),
    ("Z", "z", 6, 6),
];

/// `𝔤₋` for `G2{α1}` (basis Q, X, P, Y, Z) or `G2{α1, α2}` (R, X, Q, P, Y, Z).
pub fn g2_chevalley(sigma: &Sigma) -> Result<GradedNilpotent> {
    let (name, elems): (&str, &[Scaled]) = match sigma.indices() {
        [0] => ("G2{α1}", &VA),
        [0, 1] => ("G2{α1, α2}", &VB),
        _ => return Err(Error::Unsupported(format!("G2 grading {sigma} is not of Monge type"))),
    };
    let table = g2_table();
    let degree = |k: usize| {
        let r = G2_NEGATIVE_ROOTS[k - 1];
        sigma.indices().iter().map(|&i| r[i]).sum::<i64>()
    };
    let basis: Vec<BasisElement> = elems.iter().map(|&(l, c, k, _)| BasisElement::new(l, c, degree(k))).collect();
    let mut brackets: Vec<(&str, &str, Rational, &str)> = Vec::new();
    for (a, &(la, _, ka, sa)) in elems.iter().enumerate() {
        for &(lb, _, kb, sb) in &elems[a + 1..] {
            let ia = table.index_of(&format!("Y{ka}"))?;
            let ib = table.index_of(&format!("Y{kb}"))?;
            for (m, c) in table.bracket(ia, ib) {
                let ym = table.basis[m].label.clone();
                let &(lt, _, _, st) = elems
                    .iter()
                    .find(|e| format!("Y{}", e.2) == ym)
                    .ok_or_else(|| Error::Internal(format!("[{la}, {lb}] leaves 𝔤₋")))?;
                brackets.push((la, lb, c * q(sa * sb) / q(st), lt));
            }
        }
    }
    GradedNilpotent::from_table(name, basis, &brackets)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{build_root_system, AlgebraSpec, Family, Root};

    #[test]
    fn table_is_a_lie_algebra() {
        g2_table().check_jacobi().unwrap();
    }

    #[test]
    fn cartan_action_matches_roots() {
        let rs = build_root_system(AlgebraSpec::new(Family::G, 2).unwrap()).unwrap();
        let t = g2_table();
        for (k, r) in G2_NEGATIVE_ROOTS.iter().enumerate() {
            let y = t.index_of(&format!("Y{}", k + 1)).unwrap();
            for i in 0..2 {
                let want = rs.pairing(&Root(r.to_vec()), i);
                assert_eq!(t.structure_constant(y, i, y), q(want), "H{} Y{}", i + 1, k + 1);
            }
        }
    }

    #[test]
    fn chevalley_constants_are_p_plus_one() {
        let rs = build_root_system(AlgebraSpec::new(Family::G, 2).unwrap()).unwrap();
        let t = g2_table();
        let roots: Vec<Root> = G2_NEGATIVE_ROOTS.iter().map(|r| Root(r.to_vec())).collect();
        for a in 0..6 {
            for b in a + 1..6 {
                let sum = roots[a].add(&roots[b]);
                let br = t.bracket(a + 2, b + 2);
                let Some(c) = roots.iter().position(|r| *r == sum) else {
                    assert!(br.is_empty());
                    continue;
                };
                let mut p = 0;
                while rs.is_root(&roots[b].sub(&roots[a].scaled(p + 1))) {
                    p += 1;
                }
                let n = t.structure_constant(c + 2, a + 2, b + 2);
                assert_eq!(n.numer().magnitude().clone(), (p as u64 + 1).into(), "Y{} Y{}", a + 1, b + 1);
            }
        }
    }

    #[test]
    fn hilbert_cartan_brackets() {
        let g = g2_chevalley(&Sigma::one_based(2, &[1]).unwrap()).unwrap();
        let i = |s: &str| g.index_of(s).unwrap();
        assert_eq!(g.bracket(i("Q"), i("P")), vec![(i("Z"), q(1))]);
        assert_eq!(g.bracket(i("P"), i("X")), vec![(i("Y"), q(1))]);
        assert_eq!(g.bracket(i("Q"), i("X")), vec![(i("P"), q(1))]);
        g.check_jacobi().unwrap();
        g.check_graded().unwrap();
        let vb = g2_chevalley(&Sigma::one_based(2, &[1, 2]).unwrap()).unwrap();
        let j = |s: &str| vb.index_of(s).unwrap();
        assert_eq!(vb.bracket(j("Y"), j("R")), vec![(j("Z"), q(1))]);
        assert_eq!(vb.depth(), 5);
        assert!(g2_chevalley(&Sigma::one_based(2, &[2]).unwrap()).is_err());
    }
}
