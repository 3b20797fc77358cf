use std::sync::Arc;

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::IntMatrix;
use crate::scalars::{ScalarField, UnitMonomial};

/// Commutation data of a quantum torus of rank `n`.
///
/// `q_ij = ζ^{zeta[i][j]} · ∏_k q_k^{generic[k][i][j]}` where `ζ` is a
/// primitive `N`-th root of unity and the `q_k` are independent
/// transcendentals. Both exponent matrices are stored antisymmetric; the
/// root-of-unity matrix keeps its upper triangle reduced into `[0, N)`.
#[derive(Debug, Serialize)]
pub struct PairingSpec {
    rank: usize,
    root_order: u64,
    zeta: Vec<Vec<i64>>,
    generic: Vec<Vec<Vec<i64>>>,
    #[serde(skip)]
    field: Arc<ScalarField>,
}

impl PartialEq for PairingSpec {
    fn eq(&self, other: &Self) -> bool {
        self.rank == other.rank
            && self.root_order == other.root_order
            && self.zeta == other.zeta
            && self.generic == other.generic
    }
}

impl Eq for PairingSpec {}

fn check_square(field: &str, m: &[Vec<i64>], n: usize) -> Result<()> {
    if m.len() != n {
        return Err(Error::InvalidSpec {
            field: field.to_string(),
            message: format!("expected {n} rows, found {}", m.len()),
        });
    }
    for (i, row) in m.iter().enumerate() {
        if row.len() != n {
            return Err(Error::InvalidSpec {
                field: format!("{field}[{i}]"),
                message: format!("expected {n} entries, found {}", row.len()),
            });
        }
    }
    Ok(())
}

/// Completes an upper-triangular exponent matrix to an antisymmetric one.
/// Lower entries may be zero or the negated upper entry (mod `modulus`
/// when given); anything else is rejected.
fn complete(field: &str, m: &[Vec<i64>], n: usize, modulus: Option<u64>) -> Result<Vec<Vec<i64>>> {
    check_square(field, m, n)?;
    let reduce = |x: i64| match modulus {
        Some(k) => x.rem_euclid(k as i64),
        None => x,
    };
    let mut out = vec![vec![0i64; n]; n];
    for i in 0..n {
        if reduce(m[i][i]) != 0 {
            return Err(Error::InvalidSpec {
                field: format!("{field}[{i}][{i}]"),
                message: "diagonal exponent must be zero".into(),
            });
        }
        for j in i + 1..n {
            let upper = reduce(m[i][j]);
            let lower = m[j][i];
            if lower != 0 && reduce(lower + m[i][j]) != 0 {
                return Err(Error::InvalidSpec {
                    field: format!("{field}[{j}][{i}]"),
                    message: format!(
                        "lower entry {lower} is inconsistent with upper entry {} (q_ij·q_ji must be 1)",
                        m[i][j]
                    ),
                });
            }
            out[i][j] = upper;
            out[j][i] = -upper;
        }
    }
    Ok(out)
}

impl PairingSpec {
    /// Builds a spec from upper-triangular exponent data.
    pub fn new(
        rank: usize,
        root_order: u64,
        zeta_upper: &[Vec<i64>],
        generic_upper: &[Vec<Vec<i64>>],
    ) -> Result<Arc<Self>> {
        if root_order == 0 {
            return Err(Error::InvalidSpec {
                field: "root_of_unity_order".into(),
                message: "must be at least 1".into(),
            });
        }
        let zeta = complete("zeta_exponents", zeta_upper, rank, Some(root_order))?;
        let generic = generic_upper
            .iter()
            .enumerate()
            .map(|(k, m)| complete(&format!("generic_exponents[{k}]"), m, rank, None))
            .collect::<Result<Vec<_>>>()?;
        Ok(Arc::new(PairingSpec {
            rank,
            root_order,
            zeta,
            field: ScalarField::new(root_order, generic.len()),
            generic,
        }))
    }

    /// Rank-`n` spec with all `q_ij = 1` (a commutative Laurent ring).
    pub fn commutative(rank: usize, root_order: u64, generic_count: usize) -> Arc<Self> {
        let z = vec![vec![0; rank]; rank];
        Self::new(rank, root_order, &z, &vec![z.clone(); generic_count]).unwrap()
    }

    /// Spec over an existing coefficient field, from antisymmetric data.
    pub(crate) fn with_field(
        field: Arc<ScalarField>,
        rank: usize,
        zeta: &[Vec<i64>],
        generic: &[Vec<Vec<i64>>],
    ) -> Result<Arc<Self>> {
        let n = field.root_order();
        let zeta = complete("zeta_exponents", zeta, rank, Some(n))?;
        let generic = generic
            .iter()
            .enumerate()
            .map(|(k, m)| complete(&format!("generic_exponents[{k}]"), m, rank, None))
            .collect::<Result<Vec<_>>>()?;
        Ok(Arc::new(PairingSpec {
            rank,
            root_order: n,
            zeta,
            generic,
            field,
        }))
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn root_order(&self) -> u64 {
        self.root_order
    }

    pub fn generic_count(&self) -> usize {
        self.generic.len()
    }

    pub fn field(&self) -> &Arc<ScalarField> {
        &self.field
    }

    pub fn zeta_rows(&self) -> &[Vec<i64>] {
        &self.zeta
    }

    pub fn generic_rows(&self) -> &[Vec<Vec<i64>>] {
        &self.generic
    }

    pub fn zeta_mat(&self) -> IntMatrix {
        IntMatrix::from_rows(self.rank, &self.zeta)
    }

    pub fn generic_mats(&self) -> Vec<IntMatrix> {
        self.generic
            .iter()
            .map(|m| IntMatrix::from_rows(self.rank, m))
            .collect()
    }

    /// All generic forms stacked row-wise (`t·n × n`).
    pub fn stacked_generic(&self) -> IntMatrix {
        let rows: Vec<Vec<i64>> = self.generic.iter().flatten().cloned().collect();
        IntMatrix::from_rows(self.rank, &rows)
    }

    pub fn unit_one(&self) -> UnitMonomial {
        UnitMonomial::one(self.root_order, self.generic.len())
    }

    /// `q_ij` for 0-based `i`, `j`.
    pub fn q_ij(&self, i: usize, j: usize) -> UnitMonomial {
        UnitMonomial::new(
            self.root_order,
            self.zeta[i][j],
            self.generic.iter().map(|m| m[i][j]).collect(),
        )
    }

    fn check_vec(&self, a: &[i64]) {
        assert_eq!(a.len(), self.rank, "exponent vector has wrong length");
    }

    /// The normal-ordering cocycle `τ(a, b) = ∏_{i>j} q_ij^{a_i b_j}`, so
    /// that `x̄^a x̄^b = τ(a, b) x̄^{a+b}` with `x̄^a = x_1^{a_1} ⋯ x_n^{a_n}`.
    pub fn cocycle(&self, a: &[i64], b: &[i64]) -> UnitMonomial {
        self.check_vec(a);
        self.check_vec(b);
        let lower_form = |m: &[Vec<i64>]| -> i64 {
            let mut acc = 0i64;
            for i in 0..self.rank {
                if a[i] == 0 {
                    continue;
                }
                for j in 0..i {
                    acc += m[i][j] * a[i] * b[j];
                }
            }
            acc
        };
        UnitMonomial::new(
            self.root_order,
            lower_form(&self.zeta),
            self.generic.iter().map(|m| lower_form(m)).collect(),
        )
    }

    /// The commutator `χ(a, b)` with `x̄^a x̄^b = χ(a, b) x̄^b x̄^a`; its
    /// exponents are the bilinear forms `aᵀ M b`.
    pub fn chi(&self, a: &[i64], b: &[i64]) -> UnitMonomial {
        self.check_vec(a);
        self.check_vec(b);
        let form = |m: &[Vec<i64>]| -> i64 {
            let mut acc = 0i64;
            for i in 0..self.rank {
                if a[i] == 0 {
                    continue;
                }
                for j in 0..self.rank {
                    acc += a[i] * m[i][j] * b[j];
                }
            }
            acc
        };
        UnitMonomial::new(
            self.root_order,
            form(&self.zeta),
            self.generic.iter().map(|m| form(m)).collect(),
        )
    }

    /// Commutation data of the subalgebra on the row span of `v`, in the
    /// basis given by those rows.
    pub fn restrict(&self, v: &IntMatrix) -> Result<Arc<PairingSpec>> {
        if v.cols() != self.rank {
            return Err(Error::DimensionMismatch {
                expected: self.rank,
                found: v.cols(),
            });
        }
        if v.rank() != v.rows() {
            return Err(Error::DependentRows);
        }
        let vt = v.transpose();
        let congruence = |m: IntMatrix| -> Result<Vec<Vec<i64>>> {
            v.mul(&m)
                .mul(&vt)
                .to_i64_rows()
                .ok_or_else(|| Error::InvalidSpec {
                    field: "restrict".into(),
                    message: "restricted exponents exceed machine integers".into(),
                })
        };
        let modulus = BigInt::from(self.root_order);
        let zeta = congruence(self.zeta_mat())?;
        let zeta: Vec<Vec<i64>> = IntMatrix::from_rows(v.rows(), &zeta)
            .reduce_mod(&modulus)
            .to_i64_rows()
            .expect("reduced entries fit");
        let generic = self
            .generic_mats()
            .into_iter()
            .map(congruence)
            .collect::<Result<Vec<_>>>()?;
        Self::with_field(self.field.clone(), v.rows(), &zeta, &generic)
    }

    /// True when every `q_ij` is trivial.
    pub fn is_commutative(&self) -> bool {
        self.zeta.iter().flatten().all(|&x| x == 0)
            && self.generic.iter().flatten().flatten().all(|&x| x == 0)
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
    fn cocycle_examples() {
        let s = generic2();
        assert!(s.cocycle(&[0, 0], &[3, -2]).is_one());
        // x2·x1 = q12^{-1} x1·x2
        assert_eq!(
            s.cocycle(&[0, 1], &[1, 0]),
            UnitMonomial::new(1, 0, vec![-1])
        );
        assert!(s.cocycle(&[1, 0], &[0, 1]).is_one());
    }

    #[test]
    fn chi_examples() {
        let s = generic2();
        assert_eq!(s.chi(&[1, 0], &[0, 1]), UnitMonomial::new(1, 0, vec![1]));
        assert!(s.chi(&[2, -3], &[2, -3]).is_one());
    }

    #[test]
    fn rejects_inconsistent_lower_triangle() {
        let err = PairingSpec::new(
            2,
            1,
            &[vec![0, 0], vec![0, 0]],
            &[vec![vec![0, 1], vec![1, 0]]],
        )
        .unwrap_err();
        assert!(
            matches!(err, Error::InvalidSpec { ref field, .. } if field == "generic_exponents[0][1][0]")
        );
        // antisymmetric input is accepted as-is
        assert!(PairingSpec::new(
            2,
            1,
            &[vec![0, 0], vec![0, 0]],
            &[vec![vec![0, 1], vec![-1, 0]]]
        )
        .is_ok());
        // mod N consistency: 1 and 2 are negatives mod 3
        assert!(PairingSpec::new(2, 3, &[vec![0, 1], vec![2, 0]], &[]).is_ok());
        let err = PairingSpec::new(2, 3, &[vec![0, 1], vec![1, 0]], &[]).unwrap_err();
        assert!(matches!(err, Error::InvalidSpec { .. }));
        let err = PairingSpec::new(2, 3, &[vec![1, 1], vec![0, 0]], &[]).unwrap_err();
        assert!(
            matches!(err, Error::InvalidSpec { ref field, .. } if field == "zeta_exponents[0][0]")
        );
    }

    #[test]
    fn restrict_examples() {
        let s = generic2();
        assert_eq!(*s.restrict(&IntMatrix::identity(2)).unwrap(), *s);

        let two = PairingSpec::new(
            3,
            1,
            &vec![vec![0; 3]; 3],
            &[
                vec![vec![0, 1, 0], vec![0, 0, 0], vec![0, 0, 0]],
                vec![vec![0, 0, 1], vec![0, 0, 0], vec![0, 0, 0]],
            ],
        )
        .unwrap();
        let r = two
            .restrict(&IntMatrix::from_i64(&[&[0, 1, 0], &[0, 0, 1]]))
            .unwrap();
        assert!(r.is_commutative());

        let root = PairingSpec::new(2, 3, &[vec![0, 1], vec![0, 0]], &[]).unwrap();
        let r = root.restrict(&IntMatrix::diagonal(&[3i64, 3])).unwrap();
        assert!(r.is_commutative());

        let dep = IntMatrix::from_i64(&[&[1, 0], &[2, 0]]);
        assert_eq!(s.restrict(&dep).unwrap_err(), Error::DependentRows);
    }
}
