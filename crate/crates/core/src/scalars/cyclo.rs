//! Exact arithmetic in `Q(ζ_N)`, realised as `Q[x] / Φ_N(x)`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Coefficients of a rational polynomial in `ζ`, low degree first, always
/// of length `φ(N)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cyclo(pub(crate) Vec<BigRational>);

impl Cyclo {
    pub fn coeffs(&self) -> &[BigRational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// `Some((c, k))` when the element is `c·ζ^k` with a single nonzero term.
    pub fn as_single_term(&self) -> Option<(&BigRational, usize)> {
        let mut found = None;
        for (k, c) in self.0.iter().enumerate() {
            if !c.is_zero() {
                if found.is_some() {
                    return None;
                }
                found = Some((c, k));
            }
        }
        found
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self.as_single_term() {
            Some((c, 0)) => Some(c),
            _ => None,
        }
    }
}

/// The field `Q(ζ_N)` together with its defining polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycloField {
    order: u64,
    /// Monic `Φ_N`, low degree first; length `φ(N) + 1`.
    modulus: Vec<BigInt>,
}

impl CycloField {
    pub fn new(order: u64) -> Self {
        assert!(order >= 1, "root of unity order must be positive");
        CycloField {
            order,
            modulus: cyclotomic_polynomial(order),
        }
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// `φ(N)`, the extension degree.
    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn modulus(&self) -> &[BigInt] {
        &self.modulus
    }

    pub fn zero(&self) -> Cyclo {
        Cyclo(vec![BigRational::zero(); self.degree()])
    }

    pub fn one(&self) -> Cyclo {
        self.rational(BigRational::one())
    }

    pub fn rational(&self, r: BigRational) -> Cyclo {
        let mut c = self.zero();
        c.0[0] = r;
        c
    }

    /// `ζ^k` for any integer `k`.
    pub fn zeta_pow(&self, k: i64) -> Cyclo {
        self.mul_zeta_pow(&self.one(), k)
    }

    pub fn add(&self, a: &Cyclo, b: &Cyclo) -> Cyclo {
        Cyclo(a.0.iter().zip(&b.0).map(|(x, y)| x + y).collect())
    }

    pub fn sub(&self, a: &Cyclo, b: &Cyclo) -> Cyclo {
        Cyclo(a.0.iter().zip(&b.0).map(|(x, y)| x - y).collect())
    }

    pub fn neg(&self, a: &Cyclo) -> Cyclo {
        Cyclo(a.0.iter().map(|x| -x).collect())
    }

    pub fn scale(&self, a: &Cyclo, r: &BigRational) -> Cyclo {
        Cyclo(a.0.iter().map(|x| x * r).collect())
    }

    pub fn mul(&self, a: &Cyclo, b: &Cyclo) -> Cyclo {
        let d = self.degree();
        if d == 1 {
            return Cyclo(vec![&a.0[0] * &b.0[0]]);
        }
        let mut prod = vec![BigRational::zero(); 2 * d - 1];
        for (i, x) in a.0.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.0.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        self.reduce(prod)
    }

    /// Multiplies by `ζ^k`.
    pub fn mul_zeta_pow(&self, a: &Cyclo, k: i64) -> Cyclo {
        let n = self.order as i64;
        let k = k.rem_euclid(n) as usize;
        if k == 0 || self.degree() == 0 {
            return a.clone();
        }
        let mut shifted = vec![BigRational::zero(); self.degree() + k];
        for (i, x) in a.0.iter().enumerate() {
            shifted[i + k] = x.clone();
        }
        self.reduce(shifted)
    }

    /// Inverse via the extended Euclidean algorithm against `Φ_N`.
    pub fn inv(&self, a: &Cyclo) -> Option<Cyclo> {
        if a.is_zero() {
            return None;
        }
        let modulus: Vec<BigRational> = self
            .modulus
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        // invariant: s·a ≡ r (mod Φ)
        let (mut r0, mut r1) = (modulus, trim(a.0.clone()));
        let (mut s0, mut s1) = (Vec::<BigRational>::new(), vec![BigRational::one()]);
        while !r1.is_empty() {
            let (q, r) = poly_divrem(&r0, &r1);
            let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
        }
        // r0 is a nonzero constant since Φ_N is irreducible
        debug_assert_eq!(r0.len(), 1);
        let c = r0[0].clone();
        let mut out = self.reduce(s0);
        out = self.scale(&out, &(BigRational::one() / c));
        Some(out)
    }

    fn reduce(&self, mut p: Vec<BigRational>) -> Cyclo {
        let d = self.degree();
        while p.len() > d {
            let top = p.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let shift = p.len() - d;
            for (i, m) in self.modulus[..d].iter().enumerate() {
                if !m.is_zero() {
                    p[shift + i] -= &top * BigRational::from_integer(m.clone());
                }
            }
        }
        p.resize(d, BigRational::zero());
        Cyclo(p)
    }
}

fn trim(mut p: Vec<BigRational>) -> Vec<BigRational> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(BigRational::zero);
            let y = b.get(i).cloned().unwrap_or_else(BigRational::zero);
            x - y
        })
        .collect();
    trim(out)
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn poly_divrem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let b = trim(b.to_vec());
    let mut r = trim(a.to_vec());
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let lead = b.last().unwrap().clone();
    let mut q = vec![BigRational::zero(); r.len() - b.len() + 1];
    while r.len() >= b.len() && !r.is_empty() {
        let shift = r.len() - b.len();
        let c = r.last().unwrap() / &lead;
        for (i, y) in b.iter().enumerate() {
            r[shift + i] -= &c * y;
        }
        q[shift] = c;
        r.pop();
        r = trim(r);
    }
    (trim(q), r)
}

/// Integer coefficients of `Φ_N`, low degree first.
pub fn cyclotomic_polynomial(n: u64) -> Vec<BigInt> {
    // x^n - 1 divided by Φ_d for every proper divisor d
    let mut p = vec![BigInt::zero(); n as usize + 1];
    p[0] = -BigInt::one();
    p[n as usize] = BigInt::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            p = exact_div_monic(&p, &cyclotomic_polynomial(d));
        }
    }
    p
}

fn exact_div_monic(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let mut q = vec![BigInt::zero(); a.len() - db];
    for k in (0..q.len()).rev() {
        let c = r[k + db].clone();
        for (i, y) in b.iter().enumerate() {
            r[k + i] -= &c * y;
        }
        q[k] = c;
    }
    debug_assert!(r.iter().all(Zero::is_zero), "inexact cyclotomic division");
    q
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), ints(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(2), ints(&[1, 1]));
        assert_eq!(cyclotomic_polynomial(3), ints(&[1, 1, 1]));
        assert_eq!(cyclotomic_polynomial(4), ints(&[1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(6), ints(&[1, -1, 1]));
        assert_eq!(cyclotomic_polynomial(8), ints(&[1, 0, 0, 0, 1]));
        assert_eq!(cyclotomic_polynomial(12), ints(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn zeta_squared_mod_phi6() {
        let f = CycloField::new(6);
        // ζ² = ζ - 1
        let z2 = f.zeta_pow(2);
        let expect = f.sub(&f.zeta_pow(1), &f.one());
        assert_eq!(z2, expect);
        assert_eq!(f.zeta_pow(6), f.one());
        assert_eq!(f.zeta_pow(-1), f.zeta_pow(5));
    }

    #[test]
    fn inverse_roundtrip() {
        let f = CycloField::new(12);
        let a = f.add(
            &f.zeta_pow(1),
            &f.rational(BigRational::from_integer(3.into())),
        );
        let inv = f.inv(&a).unwrap();
        assert_eq!(f.mul(&a, &inv), f.one());
        assert!(f.inv(&f.zero()).is_none());
    }

    #[test]
    fn phi_of_zeta_vanishes() {
        for n in [1u64, 2, 3, 4, 6, 8, 12] {
            let f = CycloField::new(n);
            let mut acc = f.zero();
            for (k, c) in f.modulus().iter().enumerate() {
                let term = f.scale(&f.zeta_pow(k as i64), &BigRational::from_integer(c.clone()));
                acc = f.add(&acc, &term);
            }
            assert!(acc.is_zero(), "Φ_{n}(ζ) != 0");
            assert_eq!(f.zeta_pow(n as i64), f.one());
        }
    }
}
