//! Dense polynomials over a [`FiniteField`], just enough for generator
//! polynomials: products of linear factors, exact division, evaluation.

use std::fmt;

use crate::field::{FieldElement, FiniteField};

/// A polynomial with coefficients in one field; no trailing zeros, the zero
/// polynomial has an empty coefficient list.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    field: FiniteField,
    coeffs: Vec<FieldElement>,
}

impl Poly {
    pub fn new(field: FiniteField, mut coeffs: Vec<FieldElement>) -> Self {
        while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            coeffs.pop();
        }
        for c in &coeffs {
            assert!(c.field() == &field, "coefficient from a different field");
        }
        Poly { field, coeffs }
    }

    pub fn zero(field: FiniteField) -> Self {
        Poly {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: FiniteField) -> Self {
        let one = field.one();
        Poly::new(field, vec![one])
    }

    pub fn constant(c: FieldElement) -> Self {
        Poly::new(c.field().clone(), vec![c])
    }

    /// x - root
    pub fn linear_from_root(root: &FieldElement) -> Self {
        let field = root.field().clone();
        Poly::new(field.clone(), vec![-root, field.one()])
    }

    /// x^n - c
    pub fn power_minus_constant(n: usize, c: &FieldElement) -> Self {
        let field = c.field().clone();
        let mut coeffs = vec![field.zero(); n + 1];
        coeffs[0] = -c;
        coeffs[n] = field.one();
        Poly::new(field, coeffs)
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    /// Coefficient of x^i (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn add(&self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        Poly::new(self.field.clone(), coeffs)
    }

    pub fn sub(&self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        Poly::new(self.field.clone(), coeffs)
    }

    pub fn mul(&self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(self.field.clone());
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Poly::new(self.field.clone(), out)
    }

    /// Quotient and remainder; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        assert!(!divisor.is_zero(), "polynomial division by zero");
        let dd = divisor.coeffs.len() - 1;
        if self.coeffs.len() < divisor.coeffs.len() {
            return (Poly::zero(self.field.clone()), self.clone());
        }
        // The leading coefficient of a trimmed nonzero polynomial is nonzero.
        let lead_inv = divisor.coeffs[dd].inverse().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![self.field.zero(); self.coeffs.len().saturating_sub(dd)];
        let mut d = rem.len();
        while d > dd {
            d -= 1;
            let c = &rem[d] * &lead_inv;
            if !c.is_zero() {
                quot[d - dd] = c.clone();
                for (k, dk) in divisor.coeffs.iter().enumerate() {
                    rem[d - dd + k] = &rem[d - dd + k] - &(&c * dk);
                }
            }
        }
        (
            Poly::new(self.field.clone(), quot),
            Poly::new(self.field.clone(), rem),
        )
    }

    pub fn eval(&self, x: &FieldElement) -> FieldElement {
        let mut acc = self.field.zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})x")?,
                _ => write!(f, "({c})x^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf9() -> FiniteField {
        FiniteField::new(3, 2).unwrap()
    }

    #[test]
    fn product_of_linear_factors_and_division() {
        let f = gf9();
        let g = f.generator();
        // (x - g)(x - g^3) ... over all odd powers: product of 4 factors.
        let roots: Vec<_> = [1u64, 3, 5, 7].iter().map(|&e| g.pow(e)).collect();
        let mut prod = Poly::one(f.clone());
        for r in &roots {
            prod = prod.mul(&Poly::linear_from_root(r));
        }
        assert_eq!(prod.degree(), Some(4));
        for r in &roots {
            assert!(prod.eval(r).is_zero());
        }
        // x^8 - 1 splits over all nonzero elements; our product divides it.
        let full = Poly::power_minus_constant(8, &f.one());
        let (q, rem) = full.div_rem(&prod);
        assert!(rem.is_zero());
        assert_eq!(q.mul(&prod), full);
    }

    #[test]
    fn division_with_remainder() {
        let f = gf9();
        let g = f.generator();
        let a = Poly::new(
            f.clone(),
            vec![g.pow(2), g.pow(5), f.one(), g.clone()],
        );
        let b = Poly::new(f.clone(), vec![g.pow(3), f.one()]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(r.degree() < b.degree());
    }

    #[test]
    fn degenerate_shapes() {
        let f = gf9();
        let z = Poly::zero(f.clone());
        assert!(z.is_zero());
        assert_eq!(z.degree(), None);
        let one = Poly::one(f.clone());
        assert_eq!(one.degree(), Some(0));
        let (q, r) = Poly::new(f.clone(), vec![f.generator()]).div_rem(&one);
        assert!(r.is_zero());
        assert_eq!(q.coeff(0), f.generator());
    }
}
