//! Polynomials whose coefficients are linear forms in a set of unknowns,
//! used to assemble determining systems.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::Result;
use crate::symalg::{Monomial, Space};
use crate::{Poly, QSystem, Rational};

type Linear = BTreeMap<usize, Rational>;

#[derive(Clone, Debug)]
pub struct LinPoly {
    n: usize,
    terms: BTreeMap<Monomial, Linear>,
}

impl LinPoly {
    pub fn zero(space: &Space) -> Self {
        LinPoly {
            n: space.dim(),
            terms: BTreeMap::new(),
        }
    }

    /// `Σ_k u_{first+k} m_k` over the given monomials.
    pub fn ansatz(space: &Space, first: usize, monomials: &[Monomial]) -> Self {
        let mut p = LinPoly::zero(space);
        for (k, m) in monomials.iter().enumerate() {
            p.terms.entry(m.clone()).or_default().insert(first + k, Rational::from_integer(1.into()));
        }
        p
    }

    fn add_linear(&mut self, m: Monomial, lin: &Linear, scale: &Rational) {
        let slot = self.terms.entry(m).or_default();
        for (u, c) in lin {
            let e = slot.entry(*u).or_insert_with(Rational::zero);
            *e += c * scale;
        }
    }

    pub fn add_scaled(&mut self, c: &Rational, other: &LinPoly) {
        for (m, lin) in &other.terms {
            self.add_linear(m.clone(), lin, c);
        }
    }

    pub fn deriv(&self, i: usize) -> LinPoly {
        let mut out = LinPoly { n: self.n, terms: BTreeMap::new() };
        for (m, lin) in &self.terms {
            let e = m.exps()[i];
            if e == 0 {
                continue;
            }
            let mut d = m.exps().to_vec();
            d[i] -= 1;
            out.add_linear(Monomial::from_exps(d), lin, &Rational::from_integer(e.into()));
        }
        out
    }

    /// Product with a known polynomial.
    pub fn mul_poly(&self, p: &Poly) -> LinPoly {
        let mut out = LinPoly { n: self.n, terms: BTreeMap::new() };
        for (m, lin) in &self.terms {
            for (pm, c) in p.terms() {
                out.add_linear(m.mul(pm), lin, c);
            }
        }
        out
    }

    /// One row per monomial: every coefficient must vanish.
    pub fn push_rows(&self, sys: &mut QSystem) -> Result<()> {
        for lin in self.terms.values() {
            sys.add_row(lin.iter().map(|(u, c)| (*u, c.clone())))?;
        }
        Ok(())
    }

    /// Value at a given assignment of the unknowns.
    pub fn evaluate(&self, space: &Space, values: &[Rational]) -> Poly {
        let mut out = Poly::zero(space);
        for (m, lin) in &self.terms {
            let c = lin.iter().fold(Rational::zero(), |acc, (u, a)| acc + a * &values[*u]);
            out.add_term(m.clone(), c);
        }
        out
    }

    pub fn arity(&self) -> usize {
        self.n
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symalg::CoordSpace;

    #[test]
    fn derivative_and_rows() {
        let s = CoordSpace::new(["x", "y"]);
        let mons = Monomial::all_up_to_degree(2, 2);
        let p = LinPoly::ansatz(&s, 0, &mons);
        // ∂_x p = 0 forces every coefficient with an x to vanish
        let mut sys = QSystem::new((0..mons.len()).map(|i| format!("u{i}")).collect());
        p.deriv(0).push_rows(&mut sys).unwrap();
        assert_eq!(sys.nullspace().len(), 3);
        let x = Poly::var(&s, 0);
        let q = p.mul_poly(&x);
        let vals: Vec<Rational> = (0..mons.len()).map(|i| Rational::from_integer((i as i64).into())).collect();
        assert_eq!(q.evaluate(&s, &vals), &p.evaluate(&s, &vals) * &x);
    }
}
