use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::matrix::{hnf, snf, IntMatrix};
use crate::error::{Error, Result};

/// A subgroup of `Z^n`, stored as the nonzero rows of its Hermite normal
/// form. Two sublattices are equal iff their stored bases are equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Sublattice {
    ambient: usize,
    basis: IntMatrix,
}

impl fmt::Debug for Sublattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Sublattice(n={}, {:?})", self.ambient, self.basis)
    }
}

impl Serialize for Sublattice {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Sublattice", 3)?;
        st.serialize_field("ambient_rank", &self.ambient)?;
        st.serialize_field("rank", &self.rank())?;
        st.serialize_field("basis", &self.basis.to_i64_rows_lossy())?;
        st.end()
    }
}

/// Group index `[sup : sub]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Index {
    Finite(BigInt),
    Infinite,
}

impl Sublattice {
    /// Lattice generated by the rows of `gens` (dependent rows allowed).
    pub fn from_generators(ambient: usize, gens: &IntMatrix) -> Self {
        assert_eq!(
            gens.cols(),
            ambient,
            "generator length differs from ambient rank"
        );
        let (h, _) = hnf(gens);
        let nonzero: Vec<usize> = (0..h.rows())
            .filter(|&i| h.row(i).iter().any(|e| !e.is_zero()))
            .collect();
        Sublattice {
            ambient,
            basis: h.select_rows(nonzero),
        }
    }

    pub fn from_rows(ambient: usize, rows: &[Vec<i64>]) -> Self {
        Self::from_generators(ambient, &IntMatrix::from_rows(ambient, rows))
    }

    pub fn full(n: usize) -> Self {
        Sublattice {
            ambient: n,
            basis: IntMatrix::identity(n),
        }
    }

    pub fn zero(n: usize) -> Self {
        Sublattice {
            ambient: n,
            basis: IntMatrix::zeros(0, n),
        }
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    pub fn basis_i64(&self) -> Vec<Vec<i64>> {
        self.basis
            .to_i64_rows()
            .expect("sublattice basis entries exceed i64")
    }

    /// `k · L`.
    pub fn scaled(&self, k: i64) -> Self {
        Self::from_generators(self.ambient, &self.basis.scale(&BigInt::from(k)))
    }

    /// Coordinates of `v` in the stored basis, or `None` if `v ∉ L`.
    pub fn coordinates(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        assert_eq!(v.len(), self.ambient);
        let mut rest = v.to_vec();
        let mut coords = Vec::with_capacity(self.rank());
        let mut col = 0;
        for i in 0..self.rank() {
            let row = self.basis.row(i);
            let pivot = (0..self.ambient).find(|&j| !row[j].is_zero()).unwrap();
            if rest[col..pivot].iter().any(|e| !e.is_zero()) {
                return None;
            }
            let (q, r) = rest[pivot].div_rem(&row[pivot]);
            if !r.is_zero() {
                return None;
            }
            for (x, b) in rest.iter_mut().zip(row) {
                *x -= &q * b;
            }
            coords.push(q);
            col = pivot + 1;
        }
        if rest.iter().any(|e| !e.is_zero()) {
            return None;
        }
        Some(coords)
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains_i64(&self, v: &[i64]) -> bool {
        let big: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x)).collect();
        self.contains(&big)
    }

    pub fn contains_lattice(&self, other: &Sublattice) -> bool {
        other.basis.row_iter().all(|r| self.contains(r))
    }

    /// Smallest `L' ⊇ L` of the same rank with `Z^n / L'` torsion-free.
    pub fn saturate(&self) -> Sublattice {
        let perp = kernel(&self.basis);
        kernel(perp.basis())
    }

    pub fn is_saturated(&self) -> bool {
        self.saturate() == *self
    }

    pub fn intersect(&self, other: &Sublattice) -> Sublattice {
        assert_eq!(self.ambient, other.ambient, "ambient ranks differ");
        let r1 = self.rank();
        if r1 == 0 || other.rank() == 0 {
            return Sublattice::zero(self.ambient);
        }
        // x·B1 + y·B2 = 0  ⇒  x·B1 ∈ L1 ∩ L2
        let stacked = self.basis.vstack(&other.basis);
        let rel = kernel(&stacked.transpose());
        let gens: Vec<Vec<BigInt>> = rel
            .basis()
            .row_iter()
            .map(|coef| self.basis.vec_mul(&coef[..r1]))
            .collect();
        Sublattice::from_generators(self.ambient, &IntMatrix::from_rows(self.ambient, &gens))
    }

    /// Lattice sum `L1 + L2`.
    pub fn join(&self, other: &Sublattice) -> Sublattice {
        Sublattice::from_generators(self.ambient, &self.basis.vstack(&other.basis))
    }

    /// Unimodular `n × n` matrix whose first `rank` rows are the basis of a
    /// saturated lattice.
    pub fn complete_basis(&self) -> Result<IntMatrix> {
        if !self.is_saturated() {
            return Err(Error::NotSaturated);
        }
        let n = self.ambient;
        let mut rows: Vec<Vec<BigInt>> = self.basis.row_iter().map(|r| r.to_vec()).collect();
        // prefer standard unit vectors when they extend to a saturated lattice
        for i in 0..n {
            if rows.len() == n {
                break;
            }
            let mut e = vec![BigInt::zero(); n];
            e[i] = BigInt::one();
            let mut trial = rows.clone();
            trial.push(e);
            let m = IntMatrix::from_rows(n, &trial);
            if m.rank() == trial.len() && Sublattice::from_generators(n, &m).is_saturated() {
                rows = trial;
            }
        }
        if rows.len() < n {
            // generic completion: with u·B·v = [I | 0], rows r.. of v⁻¹ extend B
            let current = IntMatrix::from_rows(n, &rows);
            let (_, _, v) = snf(&current);
            let vinv = v.unimodular_inverse().expect("snf transform is unimodular");
            for i in rows.len()..n {
                rows.push(vinv.row_vec(i));
            }
        }
        let full = IntMatrix::from_rows(n, &rows);
        debug_assert!(full.is_unimodular());
        Ok(full)
    }
}

/// Saturated lattice `{a ∈ Z^n : m · a = 0}` where `n = m.cols()`.
pub fn kernel(m: &IntMatrix) -> Sublattice {
    let n = m.cols();
    let (h, u) = hnf(&m.transpose());
    let zero_rows: Vec<usize> = (0..h.rows())
        .filter(|&i| h.row(i).iter().all(Zero::is_zero))
        .collect();
    Sublattice::from_generators(n, &u.select_rows(zero_rows))
}

/// `{a ∈ Z^n : m · a ≡ 0 (mod modulus)}`. Always contains `modulus · Z^n`.
pub fn kernel_mod(m: &IntMatrix, modulus: u64) -> Sublattice {
    assert!(modulus >= 1, "modulus must be positive");
    let n = m.cols();
    let big_n = BigInt::from(modulus);
    // u·m·v = s: the condition becomes s·y ≡ 0 with a = v·y
    let (s, _, v) = snf(m);
    let gens: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            let d = if i < s.rows() {
                s[(i, i)].clone()
            } else {
                BigInt::zero()
            };
            let factor = &big_n / d.gcd(&big_n);
            v.column(i).into_iter().map(|e| e * &factor).collect()
        })
        .collect();
    Sublattice::from_generators(n, &IntMatrix::from_rows(n, &gens))
}

/// `[sup : sub]`. Errors when `sub ⊄ sup`.
pub fn index(sub: &Sublattice, sup: &Sublattice) -> Result<Index> {
    if sub.ambient_rank() != sup.ambient_rank() {
        return Err(Error::DimensionMismatch {
            expected: sup.ambient_rank(),
            found: sub.ambient_rank(),
        });
    }
    let mut coords = Vec::with_capacity(sub.rank());
    for row in sub.basis().row_iter() {
        match sup.coordinates(row) {
            Some(c) => coords.push(c),
            None => return Err(Error::NotContained),
        }
    }
    if sub.rank() != sup.rank() {
        return Ok(Index::Infinite);
    }
    let c = IntMatrix::from_rows(sup.rank(), &coords);
    Ok(Index::Finite(c.det().abs()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn kernel_examples() {
        let m = IntMatrix::from_i64(&[&[0, 1, 0], &[-1, 0, 0], &[0, 0, 0]]);
        assert_eq!(kernel(&m), Sublattice::from_rows(3, &[vec![0, 0, 1]]));
        assert_eq!(kernel(&IntMatrix::zeros(2, 3)), Sublattice::full(3));
        assert_eq!(kernel(&IntMatrix::identity(3)), Sublattice::zero(3));
        assert_eq!(kernel(&IntMatrix::zeros(0, 2)), Sublattice::full(2));
    }

    #[test]
    fn kernel_mod_examples() {
        let m = IntMatrix::from_i64(&[&[0, 1], &[-1, 0]]);
        assert_eq!(kernel_mod(&m, 3), Sublattice::full(2).scaled(3));
        assert_eq!(kernel_mod(&m, 1), Sublattice::full(2));
        assert_eq!(kernel_mod(&IntMatrix::zeros(2, 2), 5), Sublattice::full(2));
        // a ≡ 0 mod 2 on the first coordinate only
        let m = IntMatrix::from_i64(&[&[1, 0]]);
        assert_eq!(
            kernel_mod(&m, 2),
            Sublattice::from_rows(2, &[vec![2, 0], vec![0, 1]])
        );
    }

    #[test]
    fn saturate_examples() {
        let l = Sublattice::from_rows(2, &[vec![2, 0]]);
        assert_eq!(l.saturate(), Sublattice::from_rows(2, &[vec![1, 0]]));
        let s = Sublattice::from_rows(3, &[vec![0, 1, 0], vec![0, 0, 1]]);
        assert_eq!(s.saturate(), s);
        let l = Sublattice::from_rows(2, &[vec![2, 2], vec![0, 4]]);
        assert_eq!(l.saturate(), Sublattice::full(2));
        assert_eq!(Sublattice::zero(3).saturate(), Sublattice::zero(3));
    }

    #[test]
    fn intersect_examples() {
        let l = Sublattice::from_rows(2, &[vec![1, 2]]);
        assert_eq!(l.intersect(&Sublattice::full(2)), l);
        let a = Sublattice::from_rows(2, &[vec![1, 0]]);
        let b = Sublattice::from_rows(2, &[vec![0, 1]]);
        assert_eq!(a.intersect(&b), Sublattice::zero(2));
        let a = Sublattice::from_rows(2, &[vec![1, 1]]);
        let b = Sublattice::from_rows(2, &[vec![1, -1]]);
        assert_eq!(a.intersect(&b), Sublattice::zero(2));
        let a = Sublattice::from_rows(2, &[vec![2, 0], vec![0, 1]]);
        let b = Sublattice::from_rows(2, &[vec![1, 0], vec![0, 3]]);
        assert_eq!(
            a.intersect(&b),
            Sublattice::from_rows(2, &[vec![2, 0], vec![0, 3]])
        );
    }

    #[test]
    fn index_examples() {
        let full = Sublattice::full(2);
        assert_eq!(
            index(&full.scaled(3), &full).unwrap(),
            Index::Finite(BigInt::from(9))
        );
        assert_eq!(index(&full, &full).unwrap(), Index::Finite(BigInt::one()));
        let line = Sublattice::from_rows(2, &[vec![1, 0]]);
        assert_eq!(index(&line, &full).unwrap(), Index::Infinite);
        assert!(matches!(index(&full, &line), Err(Error::NotContained)));
    }

    #[test]
    fn complete_basis_examples() {
        let l = Sublattice::from_rows(3, &[vec![0, 1, 0], vec![0, 0, 1]]);
        let c = l.complete_basis().unwrap();
        assert!(c.det().abs().is_one());
        assert_eq!(c.row_vec(0), big(&[0, 1, 0]));
        assert_eq!(c.row_vec(1), big(&[0, 0, 1]));
        assert_eq!(c.row_vec(2), big(&[1, 0, 0]));

        assert_eq!(
            Sublattice::full(3).complete_basis().unwrap(),
            IntMatrix::identity(3)
        );
        assert_eq!(
            Sublattice::zero(3).complete_basis().unwrap(),
            IntMatrix::identity(3)
        );

        // no unit vector completes (2,3); falls back to the generic route
        let l = Sublattice::from_rows(2, &[vec![2, 3]]);
        let c = l.complete_basis().unwrap();
        assert!(c.det().abs().is_one());
        assert_eq!(c.row_vec(0), big(&[2, 3]));

        let bad = Sublattice::from_rows(2, &[vec![2, 0]]);
        assert!(matches!(bad.complete_basis(), Err(Error::NotSaturated)));
    }

    #[test]
    fn membership_and_coordinates() {
        let l = Sublattice::from_rows(3, &[vec![1, 1, 0], vec![0, 2, 4]]);
        let v = big(&[3, 7, 8]);
        let c = l.coordinates(&v).unwrap();
        assert_eq!(l.basis().vec_mul(&c), v);
        assert!(!l.contains(&big(&[0, 1, 0])));
        assert!(!l.contains(&big(&[0, 0, 1])));
    }
}
