//! Seeded randomness.
//!
//! Every random choice in the crate flows from a single `u64` seed through
//! [`ChaCha8Rng`]. Case `i` of a suite draws from stream `i` of the seeded
//! generator, so any failing case can be replayed in isolation.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::lattice::{IntMatrix, Sublattice};
use crate::scalars::{Scalar, UnitMonomial};
use crate::torus::{PairingSpec, TorusElement};

pub type QtRng = ChaCha8Rng;

pub fn seeded(seed: u64) -> QtRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// The generator for case `case` of a run seeded with `seed`.
pub fn case_rng(seed: u64, case: u64) -> QtRng {
    let mut rng = seeded(seed);
    rng.set_stream(case);
    rng
}

/// Random pairing data with upper-triangular entries in `[-bound, bound]`
/// (root-of-unity entries in `[0, N)`).
pub fn random_spec(
    rng: &mut QtRng,
    rank: usize,
    root_order: u64,
    generic_count: usize,
    bound: i64,
) -> Arc<PairingSpec> {
    let mut zeta = vec![vec![0i64; rank]; rank];
    for (i, row) in zeta.iter_mut().enumerate() {
        for x in &mut row[i + 1..] {
            *x = rng.gen_range(0..root_order as i64);
        }
    }
    let generic: Vec<Vec<Vec<i64>>> = (0..generic_count)
        .map(|_| {
            let mut e = vec![vec![0i64; rank]; rank];
            for (i, row) in e.iter_mut().enumerate() {
                for x in &mut row[i + 1..] {
                    *x = rng.gen_range(-bound..=bound);
                }
            }
            e
        })
        .collect();
    PairingSpec::new(rank, root_order, &zeta, &generic).expect("random data is well formed")
}

pub fn random_exponent(rng: &mut QtRng, n: usize, bound: i64) -> Vec<i64> {
    (0..n).map(|_| rng.gen_range(-bound..=bound)).collect()
}

pub fn random_unit(rng: &mut QtRng, spec: &PairingSpec) -> UnitMonomial {
    let q = (0..spec.generic_count())
        .map(|_| rng.gen_range(-2..=2))
        .collect();
    UnitMonomial::new(
        spec.root_order(),
        rng.gen_range(0..spec.root_order() as i64),
        q,
    )
}

/// A nonzero scalar: a small integer times a unit monomial, sometimes plus
/// a second such term.
pub fn random_scalar(rng: &mut QtRng, spec: &PairingSpec) -> Scalar {
    let field = spec.field();
    loop {
        let mut s = Scalar::from_int(field, nonzero(rng, 3)).mul_unit(&random_unit(rng, spec));
        if rng.gen_bool(0.3) {
            let extra = Scalar::from_int(field, nonzero(rng, 3)).mul_unit(&random_unit(rng, spec));
            s = s.add(&extra);
        }
        if !s.is_zero() {
            return s;
        }
    }
}

fn nonzero(rng: &mut QtRng, bound: i64) -> i64 {
    let k = rng.gen_range(1..=bound);
    if rng.gen_bool(0.5) {
        k
    } else {
        -k
    }
}

/// A random element with between 1 and `max_terms` terms and exponents in
/// `[-bound, bound]`. Repeated exponents merge, so the result can be zero.
pub fn random_element(
    rng: &mut QtRng,
    spec: &Arc<PairingSpec>,
    max_terms: usize,
    bound: i64,
) -> TorusElement {
    let terms = rng.gen_range(1..=max_terms.max(1));
    let mut f = TorusElement::zero(spec);
    for _ in 0..terms {
        let a = random_exponent(rng, spec.rank(), bound);
        let c = random_scalar(rng, spec);
        f = f
            .add(&TorusElement::monomial(spec, a, c))
            .expect("same spec");
    }
    f
}

/// A random nonzero element of `F∗B` with coefficient vectors in
/// `[-bound, bound]` relative to the basis of `b`.
pub fn random_element_in(
    rng: &mut QtRng,
    spec: &Arc<PairingSpec>,
    b: &Sublattice,
    max_terms: usize,
    bound: i64,
) -> TorusElement {
    loop {
        let terms = rng.gen_range(1..=max_terms.max(1));
        let mut f = TorusElement::zero(spec);
        for _ in 0..terms {
            let y: Vec<num_bigint::BigInt> = random_exponent(rng, b.rank(), bound)
                .into_iter()
                .map(Into::into)
                .collect();
            let a: Vec<i64> = b
                .basis()
                .vec_mul(&y)
                .iter()
                .map(|x| i64::try_from(x).expect("small exponent"))
                .collect();
            let c = random_scalar(rng, spec);
            f = f
                .add(&TorusElement::monomial(spec, a, c))
                .expect("same spec");
        }
        if !f.is_zero() {
            return f;
        }
    }
}

/// A uniformly chosen Hermite basis of a finite-index sublattice of `Z^n`
/// with index at most `max_index`.
pub fn random_finite_index(rng: &mut QtRng, n: usize, max_index: u64) -> Sublattice {
    let mut remaining = max_index.max(1);
    let mut diag = vec![1u64; n];
    let mut order: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        order.swap(i, rng.gen_range(0..=i));
    }
    for &i in &order {
        let d = rng.gen_range(1..=remaining);
        diag[i] = d;
        remaining /= d;
    }
    let mut rows = vec![vec![0i64; n]; n];
    for i in 0..n {
        rows[i][i] = diag[i] as i64;
        for j in i + 1..n {
            rows[i][j] = rng.gen_range(0..diag[j] as i64);
        }
    }
    Sublattice::from_generators(n, &IntMatrix::from_rows(n, &rows))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::torus::finite_index;

    #[test]
    fn streams_are_reproducible_and_distinct() {
        let a: Vec<u32> = (0..4).map(|_| case_rng(7, 3).gen()).collect();
        let b: Vec<u32> = (0..4).map(|_| case_rng(7, 3).gen()).collect();
        assert_eq!(a, b);
        let c: u64 = case_rng(7, 4).gen();
        let d: u64 = case_rng(7, 3).gen();
        assert_ne!(c, d);
    }

    #[test]
    fn finite_index_sublattices_respect_the_bound() {
        let mut rng = seeded(1);
        for _ in 0..100 {
            let l = random_finite_index(&mut rng, 3, 64);
            let k = finite_index(&l).unwrap();
            assert!(k >= 1.into() && k <= 64.into());
        }
    }
}
