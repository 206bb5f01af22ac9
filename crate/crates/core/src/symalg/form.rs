//! Differential forms of degree at most two with polynomial coefficients.

use std::collections::BTreeMap;
use std::fmt;

use super::poly::{same_space, Polynomial, Space};
use super::scalar::Field;
use crate::error::{Error, Result};

/// A 0-, 1- or 2-form. Degree-2 components are stored for `i < j` only;
/// [`PolyForm::component2`] supplies the antisymmetric extension.
#[derive(Clone, Debug)]
pub struct PolyForm<F: Field> {
    degree: u8,
    space: Space,
    comps: BTreeMap<Vec<usize>, Polynomial<F>>,
}

impl<F: Field> PartialEq for PolyForm<F> {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && same_space(&self.space, &other.space) && self.comps == other.comps
    }
}

impl<F: Field> PolyForm<F> {
    pub fn zero(space: &Space, degree: u8) -> Self {
        assert!(degree <= 2, "forms are capped at degree 2");
        PolyForm {
            degree,
            space: space.clone(),
            comps: BTreeMap::new(),
        }
    }

    pub fn function(f: Polynomial<F>) -> Self {
        let mut out = Self::zero(f.space(), 0);
        out.insert(vec![], f);
        out
    }

    /// `d x_i`.
    pub fn dvar(space: &Space, i: usize) -> Self {
        Self::one_form(space, [(i, Polynomial::one(space))])
    }

    pub fn one_form(space: &Space, comps: impl IntoIterator<Item = (usize, Polynomial<F>)>) -> Self {
        let mut out = Self::zero(space, 1);
        for (i, p) in comps {
            out.accumulate(vec![i], &p);
        }
        out
    }

    pub fn degree(&self) -> u8 {
        self.degree
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn is_zero(&self) -> bool {
        self.comps.is_empty()
    }

    pub fn components(&self) -> impl Iterator<Item = (&Vec<usize>, &Polynomial<F>)> {
        self.comps.iter()
    }

    fn insert(&mut self, key: Vec<usize>, p: Polynomial<F>) {
        if p.is_zero() {
            self.comps.remove(&key);
        } else {
            self.comps.insert(key, p);
        }
    }

    fn accumulate(&mut self, key: Vec<usize>, p: &Polynomial<F>) {
        if p.is_zero() {
            return;
        }
        let cur = self
            .comps
            .remove(&key)
            .unwrap_or_else(|| Polynomial::zero(&self.space));
        self.insert(key, &cur + p);
    }

    /// Add `sign * p` to the 2-form slot (i, j), normalizing to i < j.
    fn accumulate2(&mut self, i: usize, j: usize, p: &Polynomial<F>) {
        match i.cmp(&j) {
            std::cmp::Ordering::Less => self.accumulate(vec![i, j], p),
            std::cmp::Ordering::Greater => self.accumulate(vec![j, i], &-p),
            std::cmp::Ordering::Equal => {}
        }
    }

    pub fn as_function(&self) -> Polynomial<F> {
        assert_eq!(self.degree, 0);
        self.comps
            .get(&vec![])
            .cloned()
            .unwrap_or_else(|| Polynomial::zero(&self.space))
    }

    /// Coefficient of `dx_i` in a 1-form.
    pub fn component(&self, i: usize) -> Polynomial<F> {
        assert_eq!(self.degree, 1);
        self.comps
            .get(&vec![i])
            .cloned()
            .unwrap_or_else(|| Polynomial::zero(&self.space))
    }

    /// Coefficient of `dx_i ∧ dx_j` in a 2-form, antisymmetric in (i, j).
    pub fn component2(&self, i: usize, j: usize) -> Polynomial<F> {
        assert_eq!(self.degree, 2);
        let zero = || Polynomial::zero(&self.space);
        match i.cmp(&j) {
            std::cmp::Ordering::Less => self.comps.get(&vec![i, j]).cloned().unwrap_or_else(zero),
            std::cmp::Ordering::Greater => self.comps.get(&vec![j, i]).map(|p| -p).unwrap_or_else(zero),
            std::cmp::Ordering::Equal => zero(),
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if !same_space(&self.space, &other.space) {
            return Err(Error::MixedSpaces);
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        if self.degree != other.degree {
            return Err(Error::Invalid("adding forms of different degree".into()));
        }
        let mut out = self.clone();
        for (k, p) in &other.comps {
            out.accumulate(k.clone(), p);
        }
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Self {
        self.checked_add(other).expect("incompatible forms")
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.mul_function(&Polynomial::from_int(&self.space, -1))
    }

    pub fn scale(&self, c: &F) -> Self {
        let mut out = Self::zero(&self.space, self.degree);
        for (k, p) in &self.comps {
            out.insert(k.clone(), p.scale(c));
        }
        out
    }

    pub fn mul_function(&self, f: &Polynomial<F>) -> Self {
        let mut out = Self::zero(&self.space, self.degree);
        for (k, p) in &self.comps {
            out.insert(k.clone(), p * f);
        }
        out
    }

    pub fn wedge(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let degree = self.degree + other.degree;
        if degree > 2 {
            return Err(Error::Unsupported(format!("wedge product of degree {degree}")));
        }
        let mut out = Self::zero(&self.space, degree);
        for (ka, pa) in &self.comps {
            for (kb, pb) in &other.comps {
                let prod = pa * pb;
                let mut key = ka.clone();
                key.extend(kb);
                if key.len() == 2 {
                    out.accumulate2(key[0], key[1], &prod);
                } else {
                    out.accumulate(key, &prod);
                }
            }
        }
        Ok(out)
    }

    pub fn exterior_derivative(&self) -> Result<Self> {
        let n = self.space.dim();
        match self.degree {
            0 => {
                let f = self.as_function();
                Ok(Self::one_form(&self.space, (0..n).map(|i| (i, f.deriv(i)))))
            }
            1 => {
                let mut out = Self::zero(&self.space, 2);
                for (k, p) in &self.comps {
                    for j in 0..n {
                        out.accumulate2(j, k[0], &p.deriv(j));
                    }
                }
                Ok(out)
            }
            _ => Err(Error::Unsupported("exterior derivative of a 2-form".into())),
        }
    }

    pub fn rehome(&self, target: &Space) -> Result<Self> {
        let map: Vec<Option<usize>> = self.space.names().iter().map(|n| target.index_of(n)).collect();
        let mut out = Self::zero(target, self.degree);
        for (k, p) in &self.comps {
            let key: Vec<usize> = k
                .iter()
                .map(|&i| map[i].ok_or_else(|| Error::Invalid(format!("coordinate {} missing", self.space.name(i)))))
                .collect::<Result<_>>()?;
            let p = p.rehome(target)?;
            if key.len() == 2 {
                out.accumulate2(key[0], key[1], &p);
            } else {
                out.accumulate(key, &p);
            }
        }
        Ok(out)
    }
}

impl<F: Field> fmt::Display for PolyForm<F> {
    /// e.g. `dz - q*dp + 1/2*q^2*dx`, `dp∧dq + q*dq∧dx`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.comps.is_empty() {
            return write!(f, "0");
        }
        if self.degree == 0 {
            return write!(f, "{}", self.as_function());
        }
        // Print in reverse key order so that the top coordinate leads.
        let mut first = true;
        for (k, p) in self.comps.iter().rev() {
            let basis = k
                .iter()
                .map(|&i| format!("d{}", self.space.name(i)))
                .collect::<Vec<_>>()
                .join("∧");
            let s = p.to_string();
            let (neg, body) = if p.is_compound() {
                (false, format!("({s})*{basis}"))
            } else if let Some(rest) = s.strip_prefix('-') {
                (true, if rest == "1" { basis } else { format!("{rest}*{basis}") })
            } else if s == "1" {
                (false, basis)
            } else {
                (false, format!("{s}*{basis}"))
            };
            match (first, neg) {
                (true, false) => write!(f, "{body}")?,
                (true, true) => write!(f, "-{body}")?,
                (false, false) => write!(f, " + {body}")?,
                (false, true) => write!(f, " - {body}")?,
            }
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::super::poly::CoordSpace;
    use super::*;
    use num_bigint::BigInt;
    use num_rational::Ratio;
    use proptest::prelude::*;

    type Q = Ratio<BigInt>;
    type P = Polynomial<Q>;
    type W = PolyForm<Q>;

    #[test]
    fn d_of_coordinate() {
        let s = CoordSpace::new(["x", "y"]);
        let dx = W::function(P::var(&s, 0)).exterior_derivative().unwrap();
        assert_eq!(dx, W::dvar(&s, 0));
    }

    #[test]
    fn d_of_p_dx() {
        let s = CoordSpace::new(["x", "p"]);
        let pdx = W::dvar(&s, 0).mul_function(&P::var(&s, 1));
        let expected = W::dvar(&s, 1).wedge(&W::dvar(&s, 0)).unwrap();
        assert_eq!(pdx.exterior_derivative().unwrap(), expected);
    }

    #[test]
    fn wedge_rules() {
        let s = CoordSpace::new(["x", "y", "p"]);
        let dx = W::dvar(&s, 0);
        let dy = W::dvar(&s, 1);
        assert!(dx.wedge(&dx).unwrap().is_zero());
        assert_eq!(dx.wedge(&dy).unwrap(), dy.wedge(&dx).unwrap().neg());
        let p = P::var(&s, 2);
        let lhs = dx.mul_function(&p).wedge(&dy).unwrap();
        assert_eq!(lhs.component2(0, 1), p);
        assert_eq!(lhs.component2(1, 0), -&p);
        let two = dx.wedge(&dy).unwrap();
        assert!(matches!(two.wedge(&dx), Err(Error::Unsupported(_))));
        assert!(matches!(two.exterior_derivative(), Err(Error::Unsupported(_))));
    }

    #[test]
    fn hilbert_cartan_contact_form() {
        // d(dz - q dp + q^2/2 dx) = dp∧dq + q dq∧dx
        let s = CoordSpace::new(["x", "y", "p", "q", "z"]);
        let q = P::var(&s, 3);
        let theta = W::dvar(&s, 4)
            .sub(&W::dvar(&s, 2).mul_function(&q))
            .add(&W::dvar(&s, 0).mul_function(&(&q * &q).scale(&Q::frac(1, 2))));
        let d = theta.exterior_derivative().unwrap();
        let expected = W::dvar(&s, 2)
            .wedge(&W::dvar(&s, 3))
            .unwrap()
            .add(&W::dvar(&s, 3).wedge(&W::dvar(&s, 0)).unwrap().mul_function(&q));
        assert_eq!(d, expected);
        assert_eq!(theta.to_string(), "dz - q*dp + 1/2*q^2*dx");
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(128))]
        #[test]
        fn dd_is_zero(ts in proptest::collection::vec(((0u16..4, 0u16..4, 0u16..4), -9i64..10), 0..8)) {
            let s = CoordSpace::new(["x", "y", "z"]);
            let f = P::from_terms(&s, ts.into_iter().map(|((a, b, c), n)| {
                (super::super::poly::Monomial::from_exps(vec![a, b, c]), Q::from_int(n))
            }));
            let d1 = W::function(f).exterior_derivative().unwrap();
            prop_assert!(d1.exterior_derivative().unwrap().is_zero());
        }
    }
}
