//! Sparse homogeneous linear systems and their exact nullspaces.
//!
//! Two elimination routes are provided. [`LinearSystem::nullspace_by_division`]
//! works over any [`Field`] with normalized pivots. For rationals,
//! [`LinearSystem::nullspace`] clears denominators and eliminates over the
//! integers, dividing rows only by their content. Both return the reduced
//! row-echelon kernel basis for the same pivot rule (first nonzero column in
//! declared unknown order), so their outputs coincide.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use super::scalar::Field;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct LinearSystem<F: Field> {
    unknowns: Vec<String>,
    rows: Vec<Vec<(usize, F)>>,
}

impl<F: Field> LinearSystem<F> {
    pub fn new(unknowns: Vec<String>) -> Self {
        LinearSystem {
            unknowns,
            rows: Vec::new(),
        }
    }

    pub fn num_unknowns(&self) -> usize {
        self.unknowns.len()
    }

    pub fn unknowns(&self) -> &[String] {
        &self.unknowns
    }

    pub fn rows(&self) -> &[Vec<(usize, F)>] {
        &self.rows
    }

    /// Adds a row, merging repeated columns and dropping zeros. Rows that
    /// vanish identically are not stored.
    pub fn add_row(&mut self, entries: impl IntoIterator<Item = (usize, F)>) -> Result<()> {
        let mut row: Vec<(usize, F)> = entries.into_iter().collect();
        if let Some(&(c, _)) = row.iter().find(|(c, _)| *c >= self.unknowns.len()) {
            return Err(Error::Invalid(format!("row references undeclared unknown {c}")));
        }
        row.sort_by_key(|(c, _)| *c);
        let mut merged: Vec<(usize, F)> = Vec::with_capacity(row.len());
        for (c, v) in row {
            match merged.last_mut() {
                Some((lc, lv)) if *lc == c => *lv = lv.clone() + v,
                _ => merged.push((c, v)),
            }
        }
        merged.retain(|(_, v)| !v.is_zero());
        if !merged.is_empty() {
            self.rows.push(merged);
        }
        Ok(())
    }

    /// Residual of `v` against every row.
    pub fn residuals(&self, v: &[F]) -> Vec<F> {
        self.rows
            .iter()
            .map(|r| r.iter().fold(F::zero(), |acc, (c, a)| acc + a.clone() * v[*c].clone()))
            .collect()
    }

    pub fn nullspace_by_division(&self) -> Vec<Vec<F>> {
        let n = self.unknowns.len();
        let mut pivot_of: Vec<Option<usize>> = vec![None; n];
        let mut pivots: Vec<Vec<(usize, F)>> = Vec::new();
        for row in &self.rows {
            let mut r = row.clone();
            while let Some((lead, a)) = r.first().cloned() {
                match pivot_of[lead] {
                    Some(p) => r = axpy(&r, &-a, &pivots[p]),
                    None => {
                        let inv = F::one() / a;
                        for e in r.iter_mut() {
                            e.1 = e.1.clone() * inv.clone();
                        }
                        pivot_of[lead] = Some(pivots.len());
                        pivots.push(r);
                        break;
                    }
                }
            }
        }
        // Back substitution, highest pivot column first.
        let mut order: Vec<usize> = (0..pivots.len()).collect();
        order.sort_by_key(|&p| std::cmp::Reverse(pivots[p][0].0));
        for &p in &order {
            let col = pivots[p][0].0;
            for q in 0..pivots.len() {
                if q == p || pivots[q][0].0 > col {
                    continue;
                }
                if let Some(a) = lookup(&pivots[q], col) {
                    let neg = -a.clone();
                    pivots[q] = axpy(&pivots[q], &neg, &pivots[p]);
                }
            }
        }
        let mut basis = Vec::new();
        for f in 0..n {
            if pivot_of[f].is_some() {
                continue;
            }
            let mut v = vec![F::zero(); n];
            v[f] = F::one();
            for row in &pivots {
                if let Some(a) = lookup(row, f) {
                    v[row[0].0] = -a.clone();
                }
            }
            basis.push(v);
        }
        basis
    }

    pub fn rank_by_division(&self) -> usize {
        self.unknowns.len() - self.nullspace_by_division().len()
    }
}

fn lookup<T>(row: &[(usize, T)], col: usize) -> Option<&T> {
    row.binary_search_by_key(&col, |(c, _)| *c).ok().map(|i| &row[i].1)
}

/// `r + c * s` on sorted sparse rows.
fn axpy<F: Field>(r: &[(usize, F)], c: &F, s: &[(usize, F)]) -> Vec<(usize, F)> {
    let mut out = Vec::with_capacity(r.len() + s.len());
    let (mut i, mut j) = (0, 0);
    while i < r.len() || j < s.len() {
        let take_r = j == s.len() || (i < r.len() && r[i].0 < s[j].0);
        let take_s = i == r.len() || (j < s.len() && s[j].0 < r[i].0);
        if take_r {
            out.push(r[i].clone());
            i += 1;
        } else if take_s {
            out.push((s[j].0, c.clone() * s[j].1.clone()));
            j += 1;
        } else {
            let v = r[i].1.clone() + c.clone() * s[j].1.clone();
            if !v.is_zero() {
                out.push((r[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

type IntRow = Vec<(usize, BigInt)>;

fn primitive(mut r: IntRow) -> IntRow {
    let mut g = BigInt::zero();
    for (_, v) in &r {
        g = g.gcd(v);
        if g.is_one() {
            break;
        }
    }
    if !g.is_zero() && !g.is_one() {
        for (_, v) in r.iter_mut() {
            *v = &*v / &g;
        }
    }
    if r.first().is_some_and(|(_, v)| v.is_negative()) {
        for (_, v) in r.iter_mut() {
            *v = -&*v;
        }
    }
    r
}

/// `a*r - b*s`, made primitive.
fn combine(r: &IntRow, a: &BigInt, s: &IntRow, b: &BigInt) -> IntRow {
    let mut out = Vec::with_capacity(r.len() + s.len());
    let (mut i, mut j) = (0, 0);
    while i < r.len() || j < s.len() {
        let take_r = j == s.len() || (i < r.len() && r[i].0 < s[j].0);
        let take_s = i == r.len() || (j < s.len() && s[j].0 < r[i].0);
        if take_r {
            out.push((r[i].0, a * &r[i].1));
            i += 1;
        } else if take_s {
            out.push((s[j].0, -(b * &s[j].1)));
            j += 1;
        } else {
            let v = a * &r[i].1 - b * &s[j].1;
            if !v.is_zero() {
                out.push((r[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    primitive(out)
}

/// Eliminate column `col` of `target` using `pivot` (whose entry there is `p`).
fn eliminate(target: &IntRow, t: &BigInt, pivot: &IntRow, p: &BigInt) -> IntRow {
    let g = p.gcd(t);
    combine(target, &(p / &g), pivot, &(t / &g))
}

impl LinearSystem<Ratio<BigInt>> {
    fn integer_rows(&self) -> Vec<IntRow> {
        self.rows
            .iter()
            .map(|row| {
                let l = row.iter().fold(BigInt::one(), |acc, (_, v)| acc.lcm(v.denom()));
                primitive(row.iter().map(|(c, v)| (*c, v.numer() * (&l / v.denom()))).collect())
            })
            .collect()
    }

    /// Fraction-free reduced echelon form: pivot rows keyed by leading column.
    fn echelon(&self) -> (Vec<Option<usize>>, Vec<IntRow>) {
        let n = self.unknowns.len();
        let mut pivot_of: Vec<Option<usize>> = vec![None; n];
        let mut pivots: Vec<IntRow> = Vec::new();
        for mut r in self.integer_rows() {
            while let Some((lead, a)) = r.first().cloned() {
                match pivot_of[lead] {
                    Some(p) => {
                        let pr = &pivots[p];
                        r = eliminate(&r, &a, pr, &pr[0].1);
                    }
                    None => {
                        pivot_of[lead] = Some(pivots.len());
                        pivots.push(r);
                        break;
                    }
                }
            }
        }
        let mut order: Vec<usize> = (0..pivots.len()).collect();
        order.sort_by_key(|&p| std::cmp::Reverse(pivots[p][0].0));
        for &p in &order {
            let col = pivots[p][0].0;
            let pv = pivots[p][0].1.clone();
            for q in 0..pivots.len() {
                if q == p || pivots[q][0].0 > col {
                    continue;
                }
                if let Some(t) = lookup(&pivots[q], col).cloned() {
                    pivots[q] = eliminate(&pivots[q], &t, &pivots[p], &pv);
                }
            }
        }
        (pivot_of, pivots)
    }

    /// Kernel basis by fraction-free elimination.
    pub fn nullspace(&self) -> Vec<Vec<Ratio<BigInt>>> {
        let n = self.unknowns.len();
        let (pivot_of, pivots) = self.echelon();
        let mut basis = Vec::new();
        for f in 0..n {
            if pivot_of[f].is_some() {
                continue;
            }
            let mut v = vec![Ratio::zero(); n];
            v[f] = Ratio::one();
            for row in &pivots {
                if let Some(a) = lookup(row, f) {
                    v[row[0].0] = Ratio::new(-a.clone(), row[0].1.clone());
                }
            }
            basis.push(v);
        }
        basis
    }

    pub fn rank(&self) -> usize {
        self.echelon().1.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    type Q = Ratio<BigInt>;

    fn sys(n: usize, rows: &[&[(usize, i64)]]) -> LinearSystem<Q> {
        let mut s = LinearSystem::new((0..n).map(|i| format!("u{i}")).collect());
        for r in rows {
            s.add_row(r.iter().map(|&(c, v)| (c, Q::from_int(v)))).unwrap();
        }
        s
    }

    #[test]
    fn dependent_rows() {
        let s = sys(2, &[&[(0, 1), (1, 2)], &[(0, 2), (1, 4)]]);
        assert_eq!(s.nullspace(), vec![vec![Q::from_int(-2), Q::from_int(1)]]);
        assert_eq!(s.rank(), 1);
    }

    #[test]
    fn identity_has_trivial_kernel() {
        let s = sys(3, &[&[(0, 1)], &[(1, 1)], &[(2, 1)]]);
        assert!(s.nullspace().is_empty());
    }

    #[test]
    fn undeclared_unknown_rejected() {
        let mut s = LinearSystem::<Q>::new(vec!["a".into()]);
        assert!(s.add_row([(3, Q::from_int(1))]).is_err());
    }

    #[test]
    fn small_field_instance() {
        let mut s = LinearSystem::<Ratio<i64>>::new(vec!["a".into(), "b".into(), "c".into()]);
        s.add_row([(0, Ratio::from_int(3)), (2, Ratio::from_int(-1))]).unwrap();
        let k = s.nullspace_by_division();
        assert_eq!(k.len(), 2);
        assert_eq!(k[1], vec![Ratio::new(1, 3), Ratio::from_int(0), Ratio::from_int(1)]);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]
        #[test]
        fn kernel_properties(
            n in 1usize..9,
            raw in proptest::collection::vec(proptest::collection::vec((0usize..9, -4i64..5, 1i64..4), 0..5), 1..9)
        ) {
            let mut s = LinearSystem::<Q>::new((0..n).map(|i| format!("u{i}")).collect());
            for r in &raw {
                s.add_row(r.iter().filter(|(c, _, _)| *c < n).map(|&(c, a, b)| (c, Q::frac(a, b)))).unwrap();
            }
            let k = s.nullspace();
            for v in &k {
                prop_assert!(s.residuals(v).iter().all(|x| x.is_zero()));
            }
            prop_assert_eq!(k.len() + s.rank(), n);
            prop_assert_eq!(k, s.nullspace_by_division());
        }
    }
}
