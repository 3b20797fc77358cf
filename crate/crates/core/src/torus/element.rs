use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use super::spec::PairingSpec;
use crate::error::{Error, Result};
use crate::lattice::Sublattice;
use crate::scalars::Scalar;

pub type Exponent = Vec<i64>;

/// A finite sum `Σ λ_a x̄^a` in the twisted group algebra. Zero
/// coefficients are never stored, so structural equality is algebra
/// equality.
#[derive(Clone)]
pub struct TorusElement {
    spec: Arc<PairingSpec>,
    terms: BTreeMap<Exponent, Scalar>,
}

impl PartialEq for TorusElement {
    fn eq(&self, other: &Self) -> bool {
        *self.spec == *other.spec && self.terms == other.terms
    }
}

impl fmt::Debug for TorusElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TorusElement({self})")
    }
}

impl fmt::Display for TorusElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::parse::format_element(self))
    }
}

impl TorusElement {
    pub fn zero(spec: &Arc<PairingSpec>) -> Self {
        TorusElement {
            spec: spec.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(spec: &Arc<PairingSpec>) -> Self {
        Self::constant(spec, Scalar::one(spec.field()))
    }

    pub fn constant(spec: &Arc<PairingSpec>, c: Scalar) -> Self {
        Self::monomial(spec, vec![0; spec.rank()], c)
    }

    /// `c · x̄^a`.
    pub fn monomial(spec: &Arc<PairingSpec>, a: Exponent, c: Scalar) -> Self {
        assert_eq!(a.len(), spec.rank(), "exponent vector has wrong length");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(a, c);
        }
        TorusElement {
            spec: spec.clone(),
            terms,
        }
    }

    /// `x̄^a` with coefficient one.
    pub fn basis(spec: &Arc<PairingSpec>, a: Exponent) -> Self {
        Self::monomial(spec, a, Scalar::one(spec.field()))
    }

    /// The generator `x_i`, 1-based.
    pub fn generator(spec: &Arc<PairingSpec>, i: usize) -> Self {
        let mut a = vec![0; spec.rank()];
        a[i - 1] = 1;
        Self::basis(spec, a)
    }

    pub fn spec(&self) -> &Arc<PairingSpec> {
        &self.spec
    }

    pub fn terms(&self) -> &BTreeMap<Exponent, Scalar> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, a: &[i64]) -> Option<&Scalar> {
        self.terms.get(a)
    }

    /// `supp(α)`: exponents with nonzero coefficient.
    pub fn support(&self) -> BTreeSet<Exponent> {
        self.terms.keys().cloned().collect()
    }

    /// The single term `(a, λ)` when the element is `λ x̄^a`.
    pub fn single_term(&self) -> Option<(&Exponent, &Scalar)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    /// Constant elements: support in `{0}`.
    pub fn as_constant(&self) -> Option<Scalar> {
        match self.single_term() {
            None if self.is_zero() => Some(Scalar::zero(self.spec.field())),
            Some((a, c)) if a.iter().all(|&x| x == 0) => Some(c.clone()),
            _ => None,
        }
    }

    /// Membership in the subalgebra `F∗B`: the support lies in `b`.
    pub fn in_subalgebra(&self, b: &Sublattice) -> bool {
        self.terms.keys().all(|a| b.contains_i64(a))
    }

    fn check(&self, other: &TorusElement) -> Result<()> {
        if Arc::ptr_eq(&self.spec, &other.spec) || *self.spec == *other.spec {
            Ok(())
        } else {
            Err(Error::SpecMismatch)
        }
    }

    fn add_term(terms: &mut BTreeMap<Exponent, Scalar>, a: Exponent, c: Scalar) {
        match terms.get_mut(&a) {
            Some(x) => {
                *x = x.add(&c);
                if x.is_zero() {
                    terms.remove(&a);
                }
            }
            None => {
                if !c.is_zero() {
                    terms.insert(a, c);
                }
            }
        }
    }

    pub fn add(&self, other: &TorusElement) -> Result<TorusElement> {
        self.check(other)?;
        let mut terms = self.terms.clone();
        for (a, c) in &other.terms {
            Self::add_term(&mut terms, a.clone(), c.clone());
        }
        Ok(TorusElement {
            spec: self.spec.clone(),
            terms,
        })
    }

    pub fn neg(&self) -> TorusElement {
        TorusElement {
            spec: self.spec.clone(),
            terms: self
                .terms
                .iter()
                .map(|(a, c)| (a.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &TorusElement) -> Result<TorusElement> {
        self.add(&other.neg())
    }

    /// Left scalar multiplication (scalars are central).
    pub fn scale(&self, s: &Scalar) -> TorusElement {
        if s.is_zero() {
            return TorusElement::zero(&self.spec);
        }
        TorusElement {
            spec: self.spec.clone(),
            terms: self
                .terms
                .iter()
                .map(|(a, c)| (a.clone(), c.mul(s)))
                .collect(),
        }
    }

    /// Product via `x̄^a · x̄^b = τ(a, b) x̄^{a+b}`.
    pub fn mul(&self, other: &TorusElement) -> Result<TorusElement> {
        self.check(other)?;
        let mut terms = BTreeMap::new();
        for (a, c) in &self.terms {
            for (b, d) in &other.terms {
                let tau = self.spec.cocycle(a, b);
                let sum: Exponent = a.iter().zip(b).map(|(x, y)| x + y).collect();
                Self::add_term(&mut terms, sum, c.mul(d).mul_unit(&tau));
            }
        }
        Ok(TorusElement {
            spec: self.spec.clone(),
            terms,
        })
    }

    /// Lie bracket `fg − gf`.
    pub fn lie_bracket(&self, other: &TorusElement) -> Result<TorusElement> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    /// Two-sided inverse of a single-term element `λ x̄^a`.
    pub fn inverse(&self) -> Result<TorusElement> {
        let Some((a, c)) = self.single_term() else {
            return Err(Error::NotInvertible(self.to_string()));
        };
        let neg: Exponent = a.iter().map(|x| -x).collect();
        // x̄^a x̄^{-a} = τ(a, -a)
        let tau = self.spec.cocycle(a, &neg);
        let coeff = c.mul_unit(&tau).inv()?;
        Ok(TorusElement::monomial(&self.spec, neg, coeff))
    }

    pub fn pow(&self, k: i64) -> Result<TorusElement> {
        let base = if k < 0 { self.inverse()? } else { self.clone() };
        let mut acc = TorusElement::one(&self.spec);
        for _ in 0..k.unsigned_abs() {
            acc = acc.mul(&base)?;
        }
        Ok(acc)
    }

    /// Rewrites each term with `f(a, λ)`; used for automorphisms that act
    /// diagonally on monomials.
    pub fn map_terms(&self, mut f: impl FnMut(&Exponent, &Scalar) -> Scalar) -> TorusElement {
        let terms = self
            .terms
            .iter()
            .map(|(a, c)| (a.clone(), f(a, c)))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        TorusElement {
            spec: self.spec.clone(),
            terms,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn generic2() -> Arc<PairingSpec> {
        PairingSpec::new(
            2,
            1,
            &[vec![0, 0], vec![0, 0]],
            &[vec![vec![0, 1], vec![0, 0]]],
        )
        .unwrap()
    }

    #[test]
    fn defining_relation() {
        let s = generic2();
        let x1 = TorusElement::generator(&s, 1);
        let x2 = TorusElement::generator(&s, 2);
        let q1 = Scalar::q(s.field(), 1);
        assert_eq!(x1.mul(&x2).unwrap(), x2.mul(&x1).unwrap().scale(&q1));
        let one = TorusElement::one(&s);
        assert_eq!(one.mul(&x2).unwrap(), x2);
    }

    #[test]
    fn difference_of_squares_expands() {
        let s = generic2();
        let x1 = TorusElement::generator(&s, 1);
        let x2 = TorusElement::generator(&s, 2);
        let lhs = x1.add(&x2).unwrap().mul(&x1.sub(&x2).unwrap()).unwrap();
        let rhs = x1
            .mul(&x1)
            .unwrap()
            .sub(&x1.mul(&x2).unwrap())
            .unwrap()
            .add(&x2.mul(&x1).unwrap())
            .unwrap()
            .sub(&x2.mul(&x2).unwrap())
            .unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn support_and_inverse() {
        let s = generic2();
        assert!(TorusElement::zero(&s).support().is_empty());
        let m = TorusElement::basis(&s, vec![2, -1]);
        assert_eq!(
            m.support().into_iter().collect::<Vec<_>>(),
            vec![vec![2, -1]]
        );
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), TorusElement::one(&s));
        assert_eq!(inv.mul(&m).unwrap(), TorusElement::one(&s));
        let two_terms = m.add(&TorusElement::one(&s)).unwrap();
        assert!(two_terms.inverse().is_err());
    }

    #[test]
    fn subalgebra_membership() {
        let s = generic2();
        let b = Sublattice::from_rows(2, &[vec![0, 1]]);
        assert!(TorusElement::constant(&s, Scalar::from_int(s.field(), 5)).in_subalgebra(&b));
        assert!(!TorusElement::generator(&s, 1).in_subalgebra(&b));
        assert!(TorusElement::generator(&s, 2).in_subalgebra(&b));
    }

    #[test]
    fn spec_mismatch() {
        let a = TorusElement::one(&generic2());
        let b = TorusElement::one(&PairingSpec::commutative(2, 1, 1));
        assert_eq!(a.mul(&b).unwrap_err(), Error::SpecMismatch);
    }
}
