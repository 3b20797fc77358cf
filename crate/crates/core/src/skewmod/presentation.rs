use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use serde::Serialize;

use crate::dimension::is_isotropic;
use crate::error::{Error, Result};
use crate::lattice::{IntMatrix, Sublattice};
use crate::scalars::UnitMonomial;
use crate::torus::{Exponent, PairingSpec, TorusElement};

/// `F∗A = (F∗C)[X^{±1}, σ]` for an isotropic saturated `C` of corank one,
/// with `X = x̄^p` for the last row `p` of a unimodular completion of `C`.
#[derive(Clone, Debug)]
pub struct SkewPresentation {
    spec: Arc<PairingSpec>,
    c: Sublattice,
    full: IntMatrix,
    inverse: IntMatrix,
    x_class: Exponent,
    sigma_units: Vec<UnitMonomial>,
}

#[derive(Serialize)]
struct PresentationView<'a> {
    c_basis: Vec<Vec<i64>>,
    x_class: &'a [i64],
    sigma_units: &'a [UnitMonomial],
}

impl Serialize for SkewPresentation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PresentationView {
            c_basis: self.c.basis_i64(),
            x_class: &self.x_class,
            sigma_units: &self.sigma_units,
        }
        .serialize(s)
    }
}

impl PartialEq for SkewPresentation {
    fn eq(&self, other: &Self) -> bool {
        *self.spec == *other.spec && self.full == other.full
    }
}

pub fn make_presentation(spec: &Arc<PairingSpec>, c: &Sublattice) -> Result<Arc<SkewPresentation>> {
    let n = spec.rank();
    if c.ambient_rank() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: c.ambient_rank(),
        });
    }
    if n == 0 || c.rank() != n - 1 {
        return Err(Error::NotCorankOne);
    }
    if !c.is_saturated() {
        return Err(Error::NotSaturated);
    }
    if !is_isotropic(spec, c) {
        return Err(Error::NotIsotropic);
    }
    let full = c.complete_basis()?;
    let inverse = full.unimodular_inverse().expect("completion is unimodular");
    let rows = full.to_i64_rows().expect("basis entries fit i64");
    let x_class = rows[n - 1].clone();
    let sigma_units = rows[..n - 1]
        .iter()
        .map(|ci| spec.chi(&x_class, ci))
        .collect();
    Ok(Arc::new(SkewPresentation {
        spec: spec.clone(),
        c: c.clone(),
        full,
        inverse,
        x_class,
        sigma_units,
    }))
}

impl SkewPresentation {
    pub fn spec(&self) -> &Arc<PairingSpec> {
        &self.spec
    }

    pub fn c(&self) -> &Sublattice {
        &self.c
    }

    pub fn c_basis(&self) -> Vec<Vec<i64>> {
        self.c.basis_i64()
    }

    pub fn x_class(&self) -> &[i64] {
        &self.x_class
    }

    /// `χ(p, c_i)` for each basis vector `c_i` of `C`.
    pub fn sigma_units(&self) -> &[UnitMonomial] {
        &self.sigma_units
    }

    /// Splits `a = c + k·p` with `c ∈ C`.
    pub fn split(&self, a: &[i64]) -> (Exponent, i64) {
        let ab: Vec<BigInt> = a.iter().map(|&x| BigInt::from(x)).collect();
        let y = self.inverse.vec_mul(&ab);
        let k = i64::try_from(&y[y.len() - 1]).expect("X-degree fits i64");
        let c = a
            .iter()
            .zip(&self.x_class)
            .map(|(x, p)| x - k * p)
            .collect();
        (c, k)
    }

    /// `σ^i(x̄^c) = χ(p, c)^i x̄^c`.
    pub fn sigma_unit(&self, c: &[i64], i: i64) -> UnitMonomial {
        self.spec.chi(&self.x_class, c).pow(i)
    }

    /// `σ^i(γ)` for `γ ∈ F∗C`.
    pub fn sigma(&self, gamma: &TorusElement, i: i64) -> TorusElement {
        if i == 0 {
            return gamma.clone();
        }
        gamma.map_terms(|c, lambda| lambda.mul_unit(&self.sigma_unit(c, i)))
    }

    /// `x̄^c · X^k = coupling(c, k) · x̄^{c + k·p}`.
    fn coupling(&self, c: &[i64], k: i64) -> UnitMonomial {
        let p = &self.x_class;
        let kp: Vec<i64> = p.iter().map(|x| k * x).collect();
        let power = self.spec.cocycle(p, p).pow(k * (k - 1) / 2);
        power.mul(&self.spec.cocycle(c, &kp))
    }
}

/// `Σ γ_i X^i` with each `γ_i ∈ F∗C`.
#[derive(Clone)]
pub struct SkewLaurentElement {
    pres: Arc<SkewPresentation>,
    coeffs: BTreeMap<i64, TorusElement>,
}

impl PartialEq for SkewLaurentElement {
    fn eq(&self, other: &Self) -> bool {
        *self.pres == *other.pres && self.coeffs == other.coeffs
    }
}

impl fmt::Debug for SkewLaurentElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SkewLaurentElement({self})")
    }
}

impl fmt::Display for SkewLaurentElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .rev()
            .map(|(i, g)| match i {
                0 => format!("({g})"),
                1 => format!("({g})*X"),
                _ => format!("({g})*X^{i}"),
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl SkewLaurentElement {
    pub fn zero(pres: &Arc<SkewPresentation>) -> Self {
        SkewLaurentElement {
            pres: pres.clone(),
            coeffs: BTreeMap::new(),
        }
    }

    /// `γ X^i`; `γ` must lie in `F∗C`.
    pub fn term(pres: &Arc<SkewPresentation>, gamma: TorusElement, i: i64) -> Self {
        debug_assert!(gamma.in_subalgebra(&pres.c));
        let mut coeffs = BTreeMap::new();
        if !gamma.is_zero() {
            coeffs.insert(i, gamma);
        }
        SkewLaurentElement {
            pres: pres.clone(),
            coeffs,
        }
    }

    /// `X^i`.
    pub fn x_pow(pres: &Arc<SkewPresentation>, i: i64) -> Self {
        Self::term(pres, TorusElement::one(&pres.spec), i)
    }

    pub fn presentation(&self) -> &Arc<SkewPresentation> {
        &self.pres
    }

    pub fn coeffs(&self) -> &BTreeMap<i64, TorusElement> {
        &self.coeffs
    }

    pub fn coeff(&self, i: i64) -> TorusElement {
        self.coeffs
            .get(&i)
            .cloned()
            .unwrap_or_else(|| TorusElement::zero(&self.pres.spec))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `(l, h)`: lowest and highest X-degree.
    pub fn window(&self) -> Option<(i64, i64)> {
        let lo = *self.coeffs.keys().next()?;
        let hi = *self.coeffs.keys().next_back()?;
        Some((lo, hi))
    }

    fn check(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.pres, &other.pres) || *self.pres == *other.pres {
            Ok(())
        } else {
            Err(Error::SpecMismatch)
        }
    }

    fn add_into(coeffs: &mut BTreeMap<i64, TorusElement>, i: i64, g: &TorusElement) {
        let merged = match coeffs.get(&i) {
            Some(x) => x.add(g).expect("coefficients share a spec"),
            None => g.clone(),
        };
        if merged.is_zero() {
            coeffs.remove(&i);
        } else {
            coeffs.insert(i, merged);
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut coeffs = self.coeffs.clone();
        for (i, g) in &other.coeffs {
            Self::add_into(&mut coeffs, *i, g);
        }
        Ok(SkewLaurentElement {
            pres: self.pres.clone(),
            coeffs,
        })
    }

    pub fn neg(&self) -> Self {
        SkewLaurentElement {
            pres: self.pres.clone(),
            coeffs: self.coeffs.iter().map(|(i, g)| (*i, g.neg())).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    /// `(γ X^i)(δ X^j) = γ σ^i(δ) X^{i+j}`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut coeffs = BTreeMap::new();
        for (i, g) in &self.coeffs {
            for (j, d) in &other.coeffs {
                let prod = g.mul(&self.pres.sigma(d, *i))?;
                Self::add_into(&mut coeffs, i + j, &prod);
            }
        }
        Ok(SkewLaurentElement {
            pres: self.pres.clone(),
            coeffs,
        })
    }

    /// Right multiplication by `X^k`: a degree shift.
    pub fn shift(&self, k: i64) -> Self {
        SkewLaurentElement {
            pres: self.pres.clone(),
            coeffs: self
                .coeffs
                .iter()
                .map(|(i, g)| (i + k, g.clone()))
                .collect(),
        }
    }
}

/// Rewrites `f ∈ F∗A` in skew form.
pub fn to_skew(f: &TorusElement, pres: &Arc<SkewPresentation>) -> Result<SkewLaurentElement> {
    if **f.spec() != *pres.spec {
        return Err(Error::SpecMismatch);
    }
    let mut out = SkewLaurentElement::zero(pres);
    for (a, lambda) in f.terms() {
        let (c, k) = pres.split(a);
        let coeff = lambda.mul_unit(&pres.coupling(&c, k).inverse());
        let gamma = TorusElement::monomial(&pres.spec, c, coeff);
        SkewLaurentElement::add_into(&mut out.coeffs, k, &gamma);
    }
    Ok(out)
}

pub fn from_skew(g: &SkewLaurentElement) -> TorusElement {
    let pres = &g.pres;
    let mut out = TorusElement::zero(&pres.spec);
    for (k, gamma) in &g.coeffs {
        for (c, lambda) in gamma.terms() {
            let a: Exponent = c
                .iter()
                .zip(&pres.x_class)
                .map(|(x, p)| x + k * p)
                .collect();
            let term =
                TorusElement::monomial(&pres.spec, a, lambda.mul_unit(&pres.coupling(c, *k)));
            out = out.add(&term).expect("same spec");
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::{random_element, random_element_in, seeded};
    use crate::scalars::Scalar;
    use crate::torus::parse_element;

    fn two_param3() -> Arc<PairingSpec> {
        let z = vec![vec![0; 3]; 3];
        let mut e1 = z.clone();
        e1[0][1] = 1;
        let mut e2 = z.clone();
        e2[0][2] = 1;
        PairingSpec::new(3, 1, &z, &[e1, e2]).unwrap()
    }

    fn c23() -> Sublattice {
        Sublattice::from_rows(3, &[vec![0, 1, 0], vec![0, 0, 1]])
    }

    #[test]
    fn sigma_units_for_the_two_parameter_example() {
        let s = two_param3();
        let p = make_presentation(&s, &c23()).unwrap();
        assert_eq!(p.x_class(), &[1, 0, 0]);
        assert_eq!(
            p.sigma_units(),
            &[
                UnitMonomial::new(1, 0, vec![1, 0]),
                UnitMonomial::new(1, 0, vec![0, 1])
            ]
        );
        let x2 = TorusElement::generator(&s, 2);
        let q1 = Scalar::q(s.field(), 1);
        assert_eq!(p.sigma(&x2, 1), x2.scale(&q1));
    }

    #[test]
    fn preconditions() {
        let s = two_param3();
        let line = Sublattice::from_rows(3, &[vec![0, 1, 0]]);
        assert_eq!(
            make_presentation(&s, &line).unwrap_err(),
            Error::NotCorankOne
        );
        let unsat = Sublattice::from_rows(3, &[vec![0, 2, 0], vec![0, 0, 1]]);
        assert_eq!(
            make_presentation(&s, &unsat).unwrap_err(),
            Error::NotSaturated
        );
        let bad = Sublattice::from_rows(3, &[vec![1, 0, 0], vec![0, 1, 0]]);
        assert_eq!(
            make_presentation(&s, &bad).unwrap_err(),
            Error::NotIsotropic
        );
    }

    #[test]
    fn basic_conversions() {
        let s = two_param3();
        let p = make_presentation(&s, &c23()).unwrap();
        let x1 = TorusElement::generator(&s, 1);
        assert_eq!(to_skew(&x1, &p).unwrap(), SkewLaurentElement::x_pow(&p, 1));
        let g = parse_element(&s, "x2 + 3*x3^-1").unwrap();
        let sk = to_skew(&g, &p).unwrap();
        assert_eq!(sk.window(), Some((0, 0)));
        assert_eq!(from_skew(&sk), g);
    }

    #[test]
    fn multiplication_paths_agree() {
        let s = two_param3();
        let p = make_presentation(&s, &c23()).unwrap();
        let mut rng = seeded(11);
        for _ in 0..30 {
            let f = random_element(&mut rng, &s, 3, 2);
            let g = random_element(&mut rng, &s, 3, 2);
            let fs = to_skew(&f, &p).unwrap();
            assert_eq!(from_skew(&fs), f);
            let prod = fs.mul(&to_skew(&g, &p).unwrap()).unwrap();
            assert_eq!(from_skew(&prod), f.mul(&g).unwrap());
        }
    }

    #[test]
    fn sigma_is_multiplicative() {
        let s = two_param3();
        let p = make_presentation(&s, &c23()).unwrap();
        let mut rng = seeded(5);
        for i in -2..=2 {
            let a = random_element_in(&mut rng, &s, p.c(), 3, 2);
            let b = random_element_in(&mut rng, &s, p.c(), 3, 2);
            assert_eq!(
                p.sigma(&a.mul(&b).unwrap(), i),
                p.sigma(&a, i).mul(&p.sigma(&b, i)).unwrap()
            );
        }
    }

    #[test]
    fn generic_plane_with_nonstandard_class() {
        let s = PairingSpec::new(
            2,
            5,
            &[vec![0, 2], vec![0, 0]],
            &[vec![vec![0, 1], vec![0, 0]]],
        )
        .unwrap();
        // every rank-one sublattice is isotropic
        let c = Sublattice::from_rows(2, &[vec![1, 1]]);
        let p = make_presentation(&s, &c).unwrap();
        let mut rng = seeded(3);
        for _ in 0..20 {
            let f = random_element(&mut rng, &s, 3, 3);
            let g = random_element(&mut rng, &s, 2, 3);
            let prod = to_skew(&f, &p)
                .unwrap()
                .mul(&to_skew(&g, &p).unwrap())
                .unwrap();
            assert_eq!(from_skew(&prod), f.mul(&g).unwrap());
        }
    }
}
