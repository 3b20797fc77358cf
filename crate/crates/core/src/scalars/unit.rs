use serde::Serialize;

/// `ζ^k · q_1^{e_1} ⋯ q_t^{e_t}`: the multiplicative group in which every
/// commutator and cocycle value lives.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct UnitMonomial {
    #[serde(skip)]
    order: u64,
    #[serde(rename = "zeta_exp")]
    zeta: u64,
    #[serde(rename = "q_exps")]
    q: Vec<i64>,
}

impl UnitMonomial {
    /// Reduces `zeta` into `[0, order)`.
    pub fn new(order: u64, zeta: i64, q: Vec<i64>) -> Self {
        assert!(order >= 1);
        UnitMonomial {
            order,
            zeta: zeta.rem_euclid(order as i64) as u64,
            q,
        }
    }

    pub fn one(order: u64, generic_count: usize) -> Self {
        Self::new(order, 0, vec![0; generic_count])
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn zeta_exp(&self) -> u64 {
        self.zeta
    }

    pub fn q_exps(&self) -> &[i64] {
        &self.q
    }

    pub fn is_one(&self) -> bool {
        self.zeta == 0 && self.q.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &UnitMonomial) -> UnitMonomial {
        assert_eq!(self.order, other.order, "root of unity orders differ");
        assert_eq!(self.q.len(), other.q.len(), "parameter counts differ");
        UnitMonomial {
            order: self.order,
            zeta: (self.zeta + other.zeta) % self.order,
            q: self.q.iter().zip(&other.q).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn pow(&self, k: i64) -> UnitMonomial {
        let n = self.order as i128;
        let z = ((self.zeta as i128 * k as i128).rem_euclid(n)) as i64;
        UnitMonomial::new(self.order, z, self.q.iter().map(|e| e * k).collect())
    }

    pub fn inverse(&self) -> UnitMonomial {
        self.pow(-1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn is_one_cases() {
        assert!(UnitMonomial::new(6, 0, vec![0, 0]).is_one());
        assert!(!UnitMonomial::new(6, 3, vec![0, 0]).is_one());
        assert!(UnitMonomial::new(6, 6, vec![0, 0]).is_one());
        assert!(!UnitMonomial::new(6, 0, vec![0, 1]).is_one());
    }

    #[test]
    fn powers_and_inverses() {
        let u = UnitMonomial::new(3, 1, vec![2]);
        assert_eq!(u.pow(3), UnitMonomial::new(3, 0, vec![6]));
        assert!(u.mul(&u.inverse()).is_one());
        let v = UnitMonomial::new(6, 2, vec![1, 0]);
        assert_eq!(v.pow(-1), UnitMonomial::new(6, 4, vec![-1, 0]));
    }
}
