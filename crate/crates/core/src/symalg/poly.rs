//! Multivariate polynomials over an exact field.
//!
//! Every polynomial is tied to a [`CoordSpace`]; mixing spaces is an error
//! for the checked operations and a panic for the operator overloads.
//! Terms are kept in a `BTreeMap` keyed by exponent vectors, so iteration
//! follows lexicographic order over the declared coordinate order.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::scalar::Field;
use crate::error::{Error, Result};

/// Ordered list of coordinate names.
#[derive(Debug, PartialEq, Eq, Hash)]
pub struct CoordSpace {
    names: Vec<String>,
}

pub type Space = Arc<CoordSpace>;

impl CoordSpace {
    pub fn new<I, S>(names: I) -> Space
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Arc::new(CoordSpace {
            names: names.into_iter().map(Into::into).collect(),
        })
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

pub fn same_space(a: &Space, b: &Space) -> bool {
    Arc::ptr_eq(a, b) || a.names == b.names
}

/// Exponent vector, one entry per coordinate.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u16>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn var(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Monomial(e)
    }

    pub fn from_exps(e: Vec<u16>) -> Self {
        Monomial(e)
    }

    pub fn exps(&self) -> &[u16] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn weighted_degree(&self, weights: &[i64]) -> i64 {
        self.0.iter().zip(weights).map(|(&e, &w)| e as i64 * w).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// All monomials in `n` variables of weighted degree exactly `target`.
    pub fn all_of_weighted_degree(weights: &[i64], target: i64) -> Vec<Monomial> {
        fn rec(w: &[i64], i: usize, left: i64, cur: &mut Vec<u16>, out: &mut Vec<Monomial>) {
            if i == w.len() {
                if left == 0 {
                    out.push(Monomial(cur.clone()));
                }
                return;
            }
            let mut e = 0u16;
            loop {
                let used = e as i64 * w[i];
                if used > left {
                    break;
                }
                cur[i] = e;
                rec(w, i + 1, left - used, cur, out);
                e += 1;
            }
            cur[i] = 0;
        }
        assert!(weights.iter().all(|&w| w > 0), "weights must be positive");
        let mut out = Vec::new();
        if target >= 0 {
            rec(weights, 0, target, &mut vec![0; weights.len()], &mut out);
        }
        out.sort();
        out
    }

    /// All monomials in `n` variables of total degree at most `max`.
    pub fn all_up_to_degree(n: usize, max: u32) -> Vec<Monomial> {
        let ones = vec![1i64; n];
        let mut out: Vec<Monomial> = (0..=max as i64)
            .flat_map(|d| Monomial::all_of_weighted_degree(&ones, d))
            .collect();
        out.sort();
        out
    }
}

#[derive(Clone, Debug)]
pub struct Polynomial<F: Field> {
    space: Space,
    terms: BTreeMap<Monomial, F>,
}

impl<F: Field> PartialEq for Polynomial<F> {
    fn eq(&self, other: &Self) -> bool {
        same_space(&self.space, &other.space) && self.terms == other.terms
    }
}

impl<F: Field> Polynomial<F> {
    pub fn zero(space: &Space) -> Self {
        Polynomial {
            space: space.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(space: &Space, c: F) -> Self {
        Self::term(space, Monomial::one(space.dim()), c)
    }

    pub fn from_int(space: &Space, n: i64) -> Self {
        Self::constant(space, F::from_int(n))
    }

    pub fn one(space: &Space) -> Self {
        Self::from_int(space, 1)
    }

    pub fn var(space: &Space, i: usize) -> Self {
        assert!(i < space.dim(), "coordinate index out of range");
        Self::term(space, Monomial::var(space.dim(), i), F::one())
    }

    pub fn var_named(space: &Space, name: &str) -> Result<Self> {
        space
            .index_of(name)
            .map(|i| Self::var(space, i))
            .ok_or_else(|| Error::Invalid(format!("unknown coordinate {name}")))
    }

    pub fn term(space: &Space, m: Monomial, c: F) -> Self {
        assert_eq!(m.0.len(), space.dim(), "monomial arity mismatch");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial {
            space: space.clone(),
            terms,
        }
    }

    pub fn from_terms(space: &Space, terms: impl IntoIterator<Item = (Monomial, F)>) -> Self {
        let mut p = Self::zero(space);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &F)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> F {
        self.terms.get(m).cloned().unwrap_or_else(F::zero)
    }

    pub fn constant_term(&self) -> F {
        self.coefficient(&Monomial::one(self.space.dim()))
    }

    /// `Some(c)` when the polynomial is the constant `c` (including zero).
    pub fn as_constant(&self) -> Option<F> {
        match self.terms.len() {
            0 => Some(F::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn add_term(&mut self, m: Monomial, c: F) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o.get().clone() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if same_space(&self.space, &other.space) {
            Ok(())
        } else {
            Err(Error::MixedSpaces)
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = Self::zero(&self.space);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1.clone() * c2.clone());
            }
        }
        Ok(out)
    }

    /// In-place `self += c * other`.
    pub fn add_scaled(&mut self, c: &F, other: &Self) {
        assert!(same_space(&self.space, &other.space), "mixed coordinate spaces");
        if c.is_zero() {
            return;
        }
        for (m, a) in &other.terms {
            self.add_term(m.clone(), c.clone() * a.clone());
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(&self.space);
        }
        Polynomial {
            space: self.space.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &F) -> Self {
        let mut out = Self::zero(&self.space);
        for (m1, a) in &self.terms {
            out.add_term(m1.mul(m), a.clone() * c.clone());
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one(&self.space);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Partial derivative with respect to coordinate `i`.
    pub fn deriv(&self, i: usize) -> Self {
        let mut out = Self::zero(&self.space);
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut d = m.clone();
            d.0[i] -= 1;
            out.add_term(d, c.clone() * F::from_int(e as i64));
        }
        out
    }

    pub fn depends_on(&self, i: usize) -> bool {
        self.terms.keys().any(|m| m.0[i] > 0)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Split into weighted-homogeneous components.
    pub fn homogeneous_parts(&self, weights: &[i64]) -> BTreeMap<i64, Self> {
        let mut out: BTreeMap<i64, Self> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.weighted_degree(weights))
                .or_insert_with(|| Self::zero(&self.space))
                .add_term(m.clone(), c.clone());
        }
        out
    }

    /// The common weighted degree if the polynomial is nonzero and homogeneous.
    pub fn homogeneous_degree(&self, weights: &[i64]) -> Option<i64> {
        let mut degs = self.terms.keys().map(|m| m.weighted_degree(weights));
        let d = degs.next()?;
        degs.all(|e| e == d).then_some(d)
    }

    /// Substitute polynomial `value` for coordinate `i`.
    pub fn substitute(&self, i: usize, value: &Self) -> Self {
        let mut out = Self::zero(&self.space);
        let mut powers: Vec<Self> = vec![Self::one(&self.space)];
        for (m, c) in &self.terms {
            let e = m.0[i] as usize;
            while powers.len() <= e {
                let next = powers.last().unwrap() * value;
                powers.push(next);
            }
            let mut rest = m.clone();
            rest.0[i] = 0;
            out = &out + &powers[e].mul_monomial(&rest, c);
        }
        out
    }

    /// Re-express in another space by coordinate name. Fails if a variable
    /// that actually occurs is missing from the target.
    pub fn rehome(&self, target: &Space) -> Result<Self> {
        let map: Vec<Option<usize>> = self
            .space
            .names
            .iter()
            .map(|n| target.index_of(n))
            .collect();
        let mut out = Self::zero(target);
        for (m, c) in &self.terms {
            let mut e = vec![0u16; target.dim()];
            for (i, &k) in m.0.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let j = map[i].ok_or_else(|| {
                    Error::Invalid(format!("coordinate {} not in target space", self.space.names[i]))
                })?;
                e[j] = k;
            }
            out.add_term(Monomial(e), c.clone());
        }
        Ok(out)
    }

    pub(crate) fn fmt_monomial(space: &CoordSpace, m: &Monomial) -> String {
        let mut parts = Vec::new();
        for (i, &e) in m.0.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(space.names[i].clone()),
                _ => parts.push(format!("{}^{}", space.names[i], e)),
            }
        }
        parts.join("*")
    }

    /// Whether the printed form needs parentheses when used as a factor.
    pub(crate) fn is_compound(&self) -> bool {
        self.terms.len() > 1
    }
}

fn fmt_coef<F: Field>(c: &F) -> (bool, String) {
    let s = c.to_string();
    match s.strip_prefix('-') {
        Some(rest) => (true, rest.to_string()),
        None => (false, s),
    }
}

impl<F: Field> fmt::Display for Polynomial<F> {
    /// Highest lexicographic term first, e.g. `x^2*y - 1/2*z + 3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let (neg, mag) = fmt_coef(c);
            let mono = Self::fmt_monomial(&self.space, m);
            let body = if mono.is_empty() {
                mag
            } else if mag == "1" {
                mono
            } else {
                format!("{mag}*{mono}")
            };
            match (k, neg) {
                (0, false) => write!(f, "{body}")?,
                (0, true) => write!(f, "-{body}")?,
                (_, false) => write!(f, " + {body}")?,
                (_, true) => write!(f, " - {body}")?,
            }
        }
        Ok(())
    }
}

impl<F: Field> Add for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn add(self, rhs: Self) -> Polynomial<F> {
        self.checked_add(rhs).expect("mixed coordinate spaces")
    }
}

impl<F: Field> Sub for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn sub(self, rhs: Self) -> Polynomial<F> {
        self.checked_sub(rhs).expect("mixed coordinate spaces")
    }
}

impl<F: Field> Mul for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn mul(self, rhs: Self) -> Polynomial<F> {
        self.checked_mul(rhs).expect("mixed coordinate spaces")
    }
}

impl<F: Field> Neg for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn neg(self) -> Polynomial<F> {
        self.scale(&-F::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::Ratio;
    use proptest::prelude::*;

    type Q = Ratio<BigInt>;
    type P = Polynomial<Q>;

    fn xyz() -> Space {
        CoordSpace::new(["x", "y", "z"])
    }

    #[test]
    fn derivative_examples() {
        let s = xyz();
        let x = P::var(&s, 0);
        let y = P::var(&s, 1);
        let x2y = &(&x * &x) * &y;
        assert_eq!(x2y.deriv(0), (&x * &y).scale(&Q::from_int(2)));
        assert!(x2y.deriv(2).is_zero());
    }

    #[test]
    fn difference_of_squares() {
        let s = xyz();
        let x = P::var(&s, 0);
        let y = P::var(&s, 1);
        let lhs = &(&x + &y) * &(&x - &y);
        let rhs = &(&x * &x) - &(&y * &y);
        assert_eq!(lhs, rhs);
        assert_eq!(lhs.to_string(), "x^2 - y^2");
    }

    #[test]
    fn mixed_spaces_rejected() {
        let a = P::var(&xyz(), 0);
        let b = P::var(&CoordSpace::new(["u"]), 0);
        assert_eq!(a.checked_add(&b), Err(Error::MixedSpaces));
        assert_eq!(a.checked_mul(&b), Err(Error::MixedSpaces));
    }

    #[test]
    fn display_order_and_signs() {
        let s = xyz();
        let p = P::from_terms(
            &s,
            [
                (Monomial::one(3), Q::from_int(3)),
                (Monomial::var(3, 2), Q::frac(-1, 2)),
                (Monomial::from_exps(vec![2, 1, 0]), Q::from_int(1)),
            ],
        );
        assert_eq!(p.to_string(), "x^2*y - 1/2*z + 3");
        assert_eq!((-&p).to_string(), "-x^2*y + 1/2*z - 3");
    }

    #[test]
    fn weighted_monomial_counts() {
        // 1 + t + 2t^2 + 2t^3 + 3t^4 ... for weights (1,2)
        let counts: Vec<usize> = (0..6)
            .map(|d| Monomial::all_of_weighted_degree(&[1, 2], d).len())
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 2, 3, 3]);
        assert_eq!(Monomial::all_up_to_degree(4, 2).len(), 15);
    }

    #[test]
    fn substitution() {
        let s = xyz();
        let x = P::var(&s, 0);
        let y = P::var(&s, 1);
        let p = &(&x * &x) + &y;
        let q = p.substitute(0, &(&y + &P::one(&s)));
        assert_eq!(q.to_string(), "y^2 + 3*y + 1");
    }

    fn arb_poly() -> impl Strategy<Value = P> {
        proptest::collection::vec(((0u16..3, 0u16..3, 0u16..3), -9i64..10, 1i64..5), 0..6).prop_map(
            |ts| {
                let s = CoordSpace::new(["x", "y", "z"]);
                P::from_terms(
                    &s,
                    ts.into_iter()
                        .map(|((a, b, c), n, d)| (Monomial::from_exps(vec![a, b, c]), Q::frac(n, d))),
                )
            },
        )
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(128))]
        #[test]
        fn leibniz(p in arb_poly(), q in arb_poly(), i in 0usize..3) {
            let q = q.rehome(p.space()).unwrap();
            let lhs = (&p * &q).deriv(i);
            let rhs = &(&p * &q.deriv(i)) + &(&q * &p.deriv(i));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn homogeneous_parts_recombine(p in arb_poly()) {
            let parts = p.homogeneous_parts(&[1, 2, 3]);
            let mut sum = P::zero(p.space());
            for (d, part) in &parts {
                prop_assert_eq!(part.homogeneous_degree(&[1, 2, 3]), Some(*d));
                sum = &sum + part;
            }
            prop_assert_eq!(sum, p);
        }
    }
}
