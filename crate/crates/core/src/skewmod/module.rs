use std::sync::{Arc, Mutex};

use super::presentation::{to_skew, SkewLaurentElement, SkewPresentation};
use crate::error::{Error, Result};
use crate::rng::{random_element_in, QtRng};
use crate::torus::TorusElement;

/// True iff the lowest and highest coefficients are unit monomials of `F∗C`.
pub fn is_unitary(r: &SkewLaurentElement) -> Result<bool> {
    let (lo, hi) = r.window().ok_or(Error::ZeroElement)?;
    Ok(r.coeff(lo).single_term().is_some() && r.coeff(hi).single_term().is_some())
}

/// Width-one unitary elements are linear in `X`, hence irreducible.
pub fn is_irreducible_linear(r: &SkewLaurentElement) -> Result<bool> {
    if !is_unitary(r)? {
        return Err(Error::NotUnitary);
    }
    let (lo, hi) = r.window().expect("nonzero");
    Ok(hi - lo == 1)
}

/// The cyclic right module `M(r) = F∗A / r·F∗A`, free over `F∗C` on the
/// classes of `X^0, …, X^{d−1}`.
pub struct CyclicModule {
    pres: Arc<SkewPresentation>,
    r: SkewLaurentElement,
    d: i64,
    gamma_low_inv: TorusElement,
    gamma_high_inv: TorusElement,
    pub(super) growth_cache: Mutex<Vec<usize>>,
}

impl std::fmt::Debug for CyclicModule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CyclicModule")
            .field("r", &self.r)
            .field("d", &self.d)
            .finish()
    }
}

impl CyclicModule {
    /// Normalizes `r` to the window `[0, d]` by right multiplication with
    /// `X^{-l}`, which does not change the right ideal.
    pub fn new(r: &SkewLaurentElement) -> Result<CyclicModule> {
        if !is_unitary(r)? {
            return Err(Error::NotUnitary);
        }
        let (lo, hi) = r.window().expect("nonzero");
        if hi == lo {
            return Err(Error::ZeroWidth);
        }
        let r = r.shift(-lo);
        let d = hi - lo;
        Ok(CyclicModule {
            pres: r.presentation().clone(),
            gamma_low_inv: r.coeff(0).inverse()?,
            gamma_high_inv: r.coeff(d).inverse()?,
            r,
            d,
            growth_cache: Mutex::new(Vec::new()),
        })
    }

    pub fn from_element(f: &TorusElement, pres: &Arc<SkewPresentation>) -> Result<CyclicModule> {
        Self::new(&to_skew(f, pres)?)
    }

    pub fn presentation(&self) -> &Arc<SkewPresentation> {
        &self.pres
    }

    /// The normalized generator, supported in degrees `[0, d]`.
    pub fn r(&self) -> &SkewLaurentElement {
        &self.r
    }

    /// Free rank over `F∗C`.
    pub fn width(&self) -> usize {
        self.d as usize
    }

    /// The representative of `f + r·F∗A` supported in degrees `[0, d−1]`.
    pub fn reduce(&self, f: &SkewLaurentElement) -> SkewLaurentElement {
        self.reduce_with_quotient(f).0
    }

    /// `(nf, quot)` with `f = r·quot + nf`.
    pub fn reduce_with_quotient(
        &self,
        f: &SkewLaurentElement,
    ) -> (SkewLaurentElement, SkewLaurentElement) {
        let pres = &self.pres;
        let mut rem = f.clone();
        let mut quot = SkewLaurentElement::zero(pres);
        let d = self.d;
        while let Some((_, hi)) = rem.window() {
            if hi < d {
                break;
            }
            // r·βX^{m−d} has top term γ_d σ^d(β) X^m = c X^m
            let c = rem.coeff(hi);
            let beta = pres.sigma(&self.gamma_high_inv.mul(&c).expect("same spec"), -d);
            let step = SkewLaurentElement::term(pres, beta, hi - d);
            rem = rem
                .sub(&self.r.mul(&step).expect("same presentation"))
                .expect("same presentation");
            quot = quot.add(&step).expect("same presentation");
        }
        while let Some((lo, _)) = rem.window() {
            if lo >= 0 {
                break;
            }
            let c = rem.coeff(lo);
            let beta = self.gamma_low_inv.mul(&c).expect("same spec");
            let step = SkewLaurentElement::term(pres, beta, lo);
            rem = rem
                .sub(&self.r.mul(&step).expect("same presentation"))
                .expect("same presentation");
            quot = quot.add(&step).expect("same presentation");
        }
        (rem, quot)
    }

    pub fn reduce_element(&self, f: &TorusElement) -> Result<SkewLaurentElement> {
        Ok(self.reduce(&to_skew(f, &self.pres)?))
    }

    /// Row `i` holds the coefficients of `reduce(X^i · g)` in degrees
    /// `0..d`.
    pub fn action_matrix(&self, g: &TorusElement) -> Result<Vec<Vec<TorusElement>>> {
        let gs = to_skew(g, &self.pres)?;
        (0..self.d)
            .map(|i| {
                let row = self.reduce(&SkewLaurentElement::x_pow(&self.pres, i).mul(&gs)?);
                Ok((0..self.d).map(|j| row.coeff(j)).collect())
            })
            .collect()
    }

    /// Samples random nonzero `γ ∈ F∗C` and checks that right
    /// multiplication by `γ` has nonzero determinant. A falsification test:
    /// passing is evidence, not proof, of torsion-freeness.
    pub fn torsion_free_check(&self, samples: usize, rng: &mut QtRng) -> Result<bool> {
        let spec = self.pres.spec();
        for _ in 0..samples {
            let gamma = random_element_in(rng, spec, self.pres.c(), 4, 2);
            if determinant(&self.action_matrix(&gamma)?)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Cofactor expansion along the first row; entries lie in the commutative
/// ring `F∗C`.
pub fn determinant(m: &[Vec<TorusElement>]) -> Result<TorusElement> {
    let n = m.len();
    match n {
        0 => Err(Error::InvalidArgument("empty matrix".into())),
        1 => Ok(m[0][0].clone()),
        _ => {
            let mut acc = TorusElement::zero(m[0][0].spec());
            for (j, entry) in m[0].iter().enumerate() {
                if entry.is_zero() {
                    continue;
                }
                let minor: Vec<Vec<TorusElement>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|(k, _)| *k != j)
                            .map(|(_, x)| x.clone())
                            .collect()
                    })
                    .collect();
                let term = entry.mul(&determinant(&minor)?)?;
                acc = if j % 2 == 0 {
                    acc.add(&term)?
                } else {
                    acc.sub(&term)?
                };
            }
            Ok(acc)
        }
    }
}
