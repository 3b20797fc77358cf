use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::cyclo::{Cyclo, CycloField};
use super::unit::UnitMonomial;
use crate::error::{Error, Result};

/// The coefficient field `Q(ζ_N)(q_1, …, q_t)` with formal `q_k`.
#[derive(Debug, PartialEq, Eq)]
pub struct ScalarField {
    cyclo: CycloField,
    generic_count: usize,
}

impl ScalarField {
    pub fn new(root_order: u64, generic_count: usize) -> Arc<Self> {
        Arc::new(ScalarField {
            cyclo: CycloField::new(root_order),
            generic_count,
        })
    }

    pub fn root_order(&self) -> u64 {
        self.cyclo.order()
    }

    pub fn generic_count(&self) -> usize {
        self.generic_count
    }

    pub fn cyclo(&self) -> &CycloField {
        &self.cyclo
    }
}

/// Laurent polynomial in the `q_k` with cyclotomic coefficients; no stored zeros.
type QPoly = BTreeMap<Vec<i64>, Cyclo>;

/// An element of the coefficient field, kept as `num / den`.
///
/// Denominators that are a single term are always cleared, so the common
/// case is a Laurent polynomial with `den = 1`.
#[derive(Clone)]
pub struct Scalar {
    field: Arc<ScalarField>,
    num: QPoly,
    den: QPoly,
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({self})")
    }
}

fn qpoly_one(field: &ScalarField) -> QPoly {
    let mut p = QPoly::new();
    p.insert(vec![0; field.generic_count], field.cyclo.one());
    p
}

fn qpoly_add(field: &ScalarField, a: &QPoly, b: &QPoly) -> QPoly {
    let mut out = a.clone();
    for (e, c) in b {
        match out.get_mut(e) {
            Some(x) => {
                *x = field.cyclo.add(x, c);
                if x.is_zero() {
                    out.remove(e);
                }
            }
            None => {
                out.insert(e.clone(), c.clone());
            }
        }
    }
    out
}

fn qpoly_neg(field: &ScalarField, a: &QPoly) -> QPoly {
    a.iter()
        .map(|(e, c)| (e.clone(), field.cyclo.neg(c)))
        .collect()
}

fn qpoly_mul_term(field: &ScalarField, a: &QPoly, e: &[i64], c: &Cyclo) -> QPoly {
    a.iter()
        .map(|(k, x)| {
            let key: Vec<i64> = k.iter().zip(e).map(|(p, q)| p + q).collect();
            (key, field.cyclo.mul(x, c))
        })
        .collect()
}

fn qpoly_mul(field: &ScalarField, a: &QPoly, b: &QPoly) -> QPoly {
    let mut out = QPoly::new();
    for (e, c) in b {
        out = qpoly_add(field, &out, &qpoly_mul_term(field, a, e, c));
    }
    out
}

impl Scalar {
    pub fn zero(field: &Arc<ScalarField>) -> Self {
        Scalar {
            field: field.clone(),
            num: QPoly::new(),
            den: qpoly_one(field),
        }
    }

    pub fn one(field: &Arc<ScalarField>) -> Self {
        Self::from_cyclo(field, field.cyclo.one())
    }

    pub fn from_int(field: &Arc<ScalarField>, k: i64) -> Self {
        Self::from_rational(field, BigRational::from_integer(BigInt::from(k)))
    }

    pub fn from_rational(field: &Arc<ScalarField>, r: BigRational) -> Self {
        Self::from_cyclo(field, field.cyclo.rational(r))
    }

    pub fn from_cyclo(field: &Arc<ScalarField>, c: Cyclo) -> Self {
        let mut num = QPoly::new();
        if !c.is_zero() {
            num.insert(vec![0; field.generic_count], c);
        }
        Scalar {
            field: field.clone(),
            num,
            den: qpoly_one(field),
        }
    }

    /// Embeds a unit monomial `ζ^k ∏ q_i^{e_i}` multiplicatively.
    pub fn from_unit(field: &Arc<ScalarField>, u: &UnitMonomial) -> Self {
        assert_eq!(u.order(), field.root_order());
        assert_eq!(u.q_exps().len(), field.generic_count);
        let mut num = QPoly::new();
        num.insert(
            u.q_exps().to_vec(),
            field.cyclo.zeta_pow(u.zeta_exp() as i64),
        );
        Scalar {
            field: field.clone(),
            num,
            den: qpoly_one(field),
        }
    }

    pub fn zeta(field: &Arc<ScalarField>) -> Self {
        Self::from_cyclo(field, field.cyclo.zeta_pow(1))
    }

    /// The formal parameter `q_k`, 1-based.
    pub fn q(field: &Arc<ScalarField>, k: usize) -> Self {
        assert!(k >= 1 && k <= field.generic_count);
        let mut e = vec![0; field.generic_count];
        e[k - 1] = 1;
        Self::from_unit(field, &UnitMonomial::new(field.root_order(), 0, e))
    }

    pub fn field(&self) -> &Arc<ScalarField> {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    pub fn is_one(&self) -> bool {
        *self == Scalar::one(&self.field)
    }

    /// True when the value lies in `Q(ζ_N)[q^{±1}]` (denominator is 1).
    pub fn is_laurent(&self) -> bool {
        self.den == qpoly_one(&self.field)
    }

    fn normalized(mut self) -> Self {
        if self.num.is_empty() {
            self.den = qpoly_one(&self.field);
            return self;
        }
        if self.is_laurent() {
            return self;
        }
        let (e, c) = self.den.iter().next().expect("denominator is never zero");
        let inv_c = self
            .field
            .cyclo
            .inv(c)
            .expect("stored coefficients are nonzero");
        if self.den.len() == 1 {
            let neg_e: Vec<i64> = e.iter().map(|x| -x).collect();
            self.num = qpoly_mul_term(&self.field, &self.num, &neg_e, &inv_c);
            self.den = qpoly_one(&self.field);
        } else {
            let zero_e = vec![0; self.field.generic_count];
            self.num = qpoly_mul_term(&self.field, &self.num, &zero_e, &inv_c);
            self.den = qpoly_mul_term(&self.field, &self.den, &zero_e, &inv_c);
        }
        self
    }

    fn check_field(&self, other: &Scalar) {
        assert!(
            Arc::ptr_eq(&self.field, &other.field) || self.field == other.field,
            "scalars from different fields"
        );
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        self.check_field(other);
        let f = &self.field;
        if self.den == other.den {
            return Scalar {
                field: f.clone(),
                num: qpoly_add(f, &self.num, &other.num),
                den: self.den.clone(),
            }
            .normalized();
        }
        let num = qpoly_add(
            f,
            &qpoly_mul(f, &self.num, &other.den),
            &qpoly_mul(f, &other.num, &self.den),
        );
        Scalar {
            field: f.clone(),
            num,
            den: qpoly_mul(f, &self.den, &other.den),
        }
        .normalized()
    }

    pub fn neg(&self) -> Scalar {
        Scalar {
            field: self.field.clone(),
            num: qpoly_neg(&self.field, &self.num),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        self.check_field(other);
        if self.is_zero() || other.is_zero() {
            return Scalar::zero(&self.field);
        }
        let f = &self.field;
        Scalar {
            field: f.clone(),
            num: qpoly_mul(f, &self.num, &other.num),
            den: qpoly_mul(f, &self.den, &other.den),
        }
        .normalized()
    }

    /// Multiplication by a unit monomial without leaving the Laurent fast path.
    pub fn mul_unit(&self, u: &UnitMonomial) -> Scalar {
        if u.is_one() {
            return self.clone();
        }
        let f = &self.field;
        let c = f.cyclo.zeta_pow(u.zeta_exp() as i64);
        Scalar {
            field: f.clone(),
            num: qpoly_mul_term(f, &self.num, u.q_exps(), &c),
            den: self.den.clone(),
        }
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Scalar {
            field: self.field.clone(),
            num: self.den.clone(),
            den: self.num.clone(),
        }
        .normalized())
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, k: i64) -> Result<Scalar> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Scalar::one(&self.field);
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq);
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul(&sq);
            }
        }
        Ok(acc)
    }

    /// Splits the value into a sign and a multiplicative factor string such
    /// that `sign · factor` re-parses to the same scalar. An empty factor
    /// means magnitude one.
    pub(crate) fn signed_factor(&self) -> (bool, String) {
        if !self.is_laurent() {
            return (
                false,
                format!("({})/({})", fmt_qpoly(&self.num), fmt_qpoly(&self.den)),
            );
        }
        if self.num.len() == 1 {
            let (e, c) = self.num.iter().next().unwrap();
            if let Some((r, k)) = c.as_single_term() {
                let mut parts = Vec::new();
                let mag = r.abs();
                if !mag.is_one() {
                    parts.push(fmt_rational(&mag));
                }
                if k > 0 {
                    parts.push(fmt_power("z", k as i64));
                }
                parts.extend(q_parts(e));
                return (r.is_negative(), parts.join("*"));
            }
            let mut parts = vec![format!("({})", fmt_cyclo(c))];
            parts.extend(q_parts(e));
            return (false, parts.join("*"));
        }
        (false, format!("({})", fmt_qpoly(&self.num)))
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Scalar) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        let f = &self.field;
        qpoly_mul(f, &self.num, &other.den) == qpoly_mul(f, &other.num, &self.den)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let (neg, factor) = self.signed_factor();
        let body = if factor.is_empty() {
            "1".to_string()
        } else {
            factor
        };
        if neg {
            write!(f, "-{body}")
        } else {
            write!(f, "{body}")
        }
    }
}

fn fmt_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("({}/{})", r.numer(), r.denom())
    }
}

fn fmt_power(name: &str, k: i64) -> String {
    if k == 1 {
        name.to_string()
    } else {
        format!("{name}^{k}")
    }
}

fn q_parts(e: &[i64]) -> Vec<String> {
    e.iter()
        .enumerate()
        .filter(|(_, &x)| x != 0)
        .map(|(i, &x)| fmt_power(&format!("q{}", i + 1), x))
        .collect()
}

/// Writes signed terms `t_1 ± t_2 ± …`.
fn join_signed(terms: impl IntoIterator<Item = (bool, String)>) -> String {
    let mut out = String::new();
    for (i, (neg, body)) in terms.into_iter().enumerate() {
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&body);
    }
    out
}

fn fmt_cyclo(c: &Cyclo) -> String {
    let terms = c
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, r)| !r.is_zero())
        .map(|(k, r)| {
            let mag = r.abs();
            let body = match (mag.is_one(), k) {
                (_, 0) => fmt_rational(&mag),
                (true, _) => fmt_power("z", k as i64),
                (false, _) => format!("{}*{}", fmt_rational(&mag), fmt_power("z", k as i64)),
            };
            (r.is_negative(), body)
        });
    join_signed(terms)
}

fn fmt_qpoly(p: &QPoly) -> String {
    if p.is_empty() {
        return "0".into();
    }
    let terms = p.iter().map(|(e, c)| {
        let qs = q_parts(e);
        if let Some((r, k)) = c.as_single_term() {
            let mut parts = Vec::new();
            let mag = r.abs();
            if !mag.is_one() || (k == 0 && qs.is_empty()) {
                parts.push(fmt_rational(&mag));
            }
            if k > 0 {
                parts.push(fmt_power("z", k as i64));
            }
            parts.extend(qs);
            (r.is_negative(), parts.join("*"))
        } else {
            let mut parts = vec![format!("({})", fmt_cyclo(c))];
            parts.extend(qs);
            (false, parts.join("*"))
        }
    });
    join_signed(terms)
}

impl std::ops::Add<&Scalar> for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar::add(self, rhs)
    }
}

impl std::ops::Sub<&Scalar> for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar::sub(self, rhs)
    }
}

impl std::ops::Mul<&Scalar> for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        Scalar::mul(self, rhs)
    }
}

impl std::ops::Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zeta_powers_reduce() {
        let f = ScalarField::new(6, 0);
        let z = Scalar::zeta(&f);
        let z2 = z.mul(&z);
        assert_eq!(z2, z.sub(&Scalar::one(&f)));
        assert!(z.pow(6).unwrap().is_one());
    }

    #[test]
    fn inverse_pairs() {
        let f = ScalarField::new(6, 2);
        let a = Scalar::from_unit(&f, &UnitMonomial::new(6, 1, vec![1, 0]));
        let b = Scalar::from_unit(&f, &UnitMonomial::new(6, 5, vec![-1, 0]));
        assert!(a.mul(&b).is_one());
        assert_eq!(Scalar::zero(&f).inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn general_fractions() {
        let f = ScalarField::new(3, 1);
        let q = Scalar::q(&f, 1);
        let s = q.add(&Scalar::one(&f)); // 1 + q1
        let inv = s.inv().unwrap();
        assert!(!inv.is_laurent());
        assert!(s.mul(&inv).is_one());
        let x = inv.add(&inv);
        assert_eq!(x, Scalar::from_int(&f, 2).div(&s).unwrap());
    }

    #[test]
    fn display_forms() {
        let f = ScalarField::new(6, 1);
        let s = Scalar::from_rational(&f, BigRational::new(2.into(), 3.into()))
            .mul(&Scalar::zeta(&f).pow(2).unwrap())
            .mul(&Scalar::q(&f, 1).pow(-1).unwrap());
        // ζ² = ζ - 1 in Q(ζ_6)
        assert_eq!(s.to_string(), "(-(2/3) + (2/3)*z)*q1^-1");
        assert_eq!(Scalar::from_int(&f, -3).to_string(), "-3");
        assert_eq!(Scalar::zero(&f).to_string(), "0");
        assert_eq!(Scalar::one(&f).to_string(), "1");
    }
}
