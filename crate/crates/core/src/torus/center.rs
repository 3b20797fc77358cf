use num_bigint::BigInt;

use super::spec::PairingSpec;
use crate::error::{Error, Result};
use crate::lattice::{index, kernel, kernel_mod, Index, Sublattice};

/// The subgroup `Z = {a : χ(a, e_i) = 1 for all i}`; the center of `F∗A`
/// is exactly `F∗Z`.
pub fn center_lattice(spec: &PairingSpec) -> Sublattice {
    let n = spec.rank();
    let generic_part = if spec.generic_count() == 0 {
        Sublattice::full(n)
    } else {
        kernel(&spec.stacked_generic())
    };
    let zeta_part = kernel_mod(&spec.zeta_mat(), spec.root_order());
    generic_part.intersect(&zeta_part)
}

/// `F∗A` is simple iff its center is `F`, i.e. the center lattice is zero.
pub fn is_simple(spec: &PairingSpec) -> bool {
    center_lattice(spec).rank() == 0
}

/// True iff `a` is the exponent of a central monomial.
pub fn is_central(spec: &PairingSpec, a: &[i64]) -> bool {
    let n = spec.rank();
    (0..n).all(|i| {
        let mut e = vec![0; n];
        e[i] = 1;
        spec.chi(a, &e).is_one()
    })
}

/// Compares triviality of the center of `F∗A` with that of `F∗A_1` for a
/// finite-index subgroup `A_1`. The two always agree; a `false` result
/// indicates a defect in the center computation.
pub fn finite_index_center_agreement(spec: &PairingSpec, sub: &Sublattice) -> Result<bool> {
    let full = Sublattice::full(spec.rank());
    match index(sub, &full)? {
        Index::Infinite => Err(Error::InfiniteIndex),
        Index::Finite(_) => {
            let restricted = spec.restrict(sub.basis())?;
            Ok(is_simple(&restricted) == is_simple(spec))
        }
    }
}

/// `[Z^n : sub]` as a machine integer, `None` for infinite index.
pub fn finite_index(sub: &Sublattice) -> Option<BigInt> {
    match index(sub, &Sublattice::full(sub.ambient_rank())).ok()? {
        Index::Finite(k) => Some(k),
        Index::Infinite => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::Arc;

    fn two_param3() -> Arc<PairingSpec> {
        let z = vec![vec![0; 3]; 3];
        let mut e1 = z.clone();
        e1[0][1] = 1;
        let mut e2 = z.clone();
        e2[0][2] = 1;
        PairingSpec::new(3, 1, &z, &[e1, e2]).unwrap()
    }

    /// Brute-force oracle: central exponents with entries in [-5, 5].
    fn brute_central(spec: &PairingSpec) -> Vec<Vec<i64>> {
        let n = spec.rank();
        let mut out = Vec::new();
        let total = 11usize.pow(n as u32);
        for code in 0..total {
            let mut c = code;
            let a: Vec<i64> = (0..n)
                .map(|_| {
                    let d = (c % 11) as i64 - 5;
                    c /= 11;
                    d
                })
                .collect();
            if is_central(spec, &a) {
                out.push(a);
            }
        }
        out
    }

    #[test]
    fn generic_plane_has_trivial_center() {
        let s = PairingSpec::new(
            2,
            1,
            &[vec![0, 0], vec![0, 0]],
            &[vec![vec![0, 1], vec![0, 0]]],
        )
        .unwrap();
        assert_eq!(center_lattice(&s), Sublattice::zero(2));
        assert_eq!(brute_central(&s), vec![vec![0, 0]]);
        assert!(is_simple(&s));
    }

    #[test]
    fn root_of_unity_plane() {
        let s = PairingSpec::new(2, 3, &[vec![0, 1], vec![0, 0]], &[]).unwrap();
        let z = center_lattice(&s);
        assert_eq!(z, Sublattice::full(2).scaled(3));
        for a in brute_central(&s) {
            assert!(a.iter().all(|x| x % 3 == 0));
            assert!(z.contains_i64(&a));
        }
        assert!(!is_simple(&s));
    }

    #[test]
    fn two_parameter_rank_three() {
        let s = two_param3();
        assert_eq!(center_lattice(&s), Sublattice::zero(3));
        assert_eq!(brute_central(&s), vec![vec![0, 0, 0]]);
    }

    #[test]
    fn rank_one_is_commutative() {
        let s = PairingSpec::commutative(1, 1, 0);
        assert_eq!(center_lattice(&s).rank(), 1);
        assert!(!is_simple(&s));
    }

    #[test]
    fn finite_index_agreement_examples() {
        let s = two_param3();
        assert!(finite_index_center_agreement(&s, &Sublattice::full(3).scaled(2)).unwrap());
        let root = PairingSpec::new(2, 3, &[vec![0, 1], vec![0, 0]], &[]).unwrap();
        let sub = Sublattice::from_rows(2, &[vec![1, 1], vec![0, 5]]);
        assert!(finite_index_center_agreement(&root, &sub).unwrap());
        let line = Sublattice::from_rows(3, &[vec![1, 0, 0]]);
        assert_eq!(
            finite_index_center_agreement(&s, &line).unwrap_err(),
            Error::InfiniteIndex
        );
    }
}
