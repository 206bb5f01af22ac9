//! Polynomial vector fields.

use std::collections::BTreeMap;
use std::fmt;

use super::form::PolyForm;
use super::poly::{same_space, Polynomial, Space};
use super::scalar::Field;

#[derive(Clone, Debug)]
pub struct VectorField<F: Field> {
    space: Space,
    coeffs: Vec<Polynomial<F>>,
}

impl<F: Field> PartialEq for VectorField<F> {
    fn eq(&self, other: &Self) -> bool {
        same_space(&self.space, &other.space) && self.coeffs == other.coeffs
    }
}

impl<F: Field> VectorField<F> {
    pub fn zero(space: &Space) -> Self {
        VectorField {
            space: space.clone(),
            coeffs: (0..space.dim()).map(|_| Polynomial::zero(space)).collect(),
        }
    }

    pub fn from_coeffs(space: &Space, coeffs: Vec<Polynomial<F>>) -> Self {
        assert_eq!(coeffs.len(), space.dim());
        VectorField {
            space: space.clone(),
            coeffs,
        }
    }

    /// `∂/∂x_i`.
    pub fn partial(space: &Space, i: usize) -> Self {
        let mut v = Self::zero(space);
        v.coeffs[i] = Polynomial::one(space);
        v
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn coeff(&self, i: usize) -> &Polynomial<F> {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[Polynomial<F>] {
        &self.coeffs
    }

    pub fn set_coeff(&mut self, i: usize, p: Polynomial<F>) {
        self.coeffs[i] = p;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Polynomial::is_zero)
    }

    /// The derivation `f ↦ Σ ξ^i ∂_i f`.
    pub fn apply(&self, f: &Polynomial<F>) -> Polynomial<F> {
        let mut out = Polynomial::zero(&self.space);
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() || !f.depends_on(i) {
                continue;
            }
            out = &out + &(c * &f.deriv(i));
        }
        out
    }

    pub fn bracket(&self, other: &Self) -> Self {
        let coeffs = (0..self.space.dim())
            .map(|i| &self.apply(&other.coeffs[i]) - &other.apply(&self.coeffs[i]))
            .collect();
        Self::from_coeffs(&self.space, coeffs)
    }

    pub fn add(&self, other: &Self) -> Self {
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Self::from_coeffs(&self.space, coeffs)
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::from_coeffs(&self.space, self.coeffs.iter().map(|p| p.scale(c)).collect())
    }

    pub fn add_scaled(&mut self, c: &F, other: &Self) {
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            a.add_scaled(c, b);
        }
    }

    /// Contraction of a 1-form with this field.
    pub fn pair(&self, form: &PolyForm<F>) -> Polynomial<F> {
        assert_eq!(form.degree(), 1);
        let mut out = Polynomial::zero(&self.space);
        for (k, p) in form.components() {
            out = &out + &(p * &self.coeffs[k[0]]);
        }
        out
    }

    /// Weighted-homogeneous parts: `m ∂_i` has degree `deg(m) - w_i`.
    pub fn homogeneous_parts(&self, weights: &[i64]) -> BTreeMap<i64, Self> {
        let mut out: BTreeMap<i64, Self> = BTreeMap::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            for (d, part) in c.homogeneous_parts(weights) {
                out.entry(d - weights[i])
                    .or_insert_with(|| Self::zero(&self.space))
                    .coeffs[i] = part;
            }
        }
        out
    }

    pub fn homogeneous_degree(&self, weights: &[i64]) -> Option<i64> {
        let parts = self.homogeneous_parts(weights);
        (parts.len() == 1).then(|| *parts.keys().next().unwrap())
    }
}

impl<F: Field> fmt::Display for VectorField<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let s = c.to_string();
            let d = format!("∂{}", self.space.name(i));
            let (neg, body) = if c.is_compound() {
                (false, format!("({s}){d}"))
            } else if let Some(rest) = s.strip_prefix('-') {
                (true, if rest == "1" { d } else { format!("{rest}{d}") })
            } else if s == "1" {
                (false, d)
            } else {
                (false, format!("{s}{d}"))
            };
            match (first, neg) {
                (true, false) => write!(f, "{body}")?,
                (true, true) => write!(f, "-{body}")?,
                (false, false) => write!(f, " + {body}")?,
                (false, true) => write!(f, " - {body}")?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
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

    type Q = Ratio<BigInt>;
    type P = Polynomial<Q>;
    type V = VectorField<Q>;

    #[test]
    fn euler_field_brackets() {
        let s = CoordSpace::new(["x", "y"]);
        let x = P::var(&s, 0);
        let dx = V::partial(&s, 0);
        let mut e = V::zero(&s);
        e.set_coeff(0, x.clone());
        // [∂x, x∂x] = ∂x
        assert_eq!(dx.bracket(&e), dx);
        assert_eq!(e.bracket(&dx), dx.scale(&Q::from_int(-1)));
    }

    #[test]
    fn grading_of_fields() {
        let s = CoordSpace::new(["x", "y"]);
        let x = P::var(&s, 0);
        let mut v = V::partial(&s, 1);
        v.set_coeff(0, &x * &x);
        let parts = v.homogeneous_parts(&[1, 2]);
        assert_eq!(parts.keys().copied().collect::<Vec<_>>(), vec![-2, 1]);
        assert_eq!(v.to_string(), "x^2∂x + ∂y");
    }
}
