use std::sync::Arc;

use proptest::prelude::*;
use qtorus::lattice::{index, Index, Sublattice};
use qtorus::rng::{case_rng, random_element, random_scalar, random_spec};
use qtorus::scalars::{Scalar, UnitMonomial};
use qtorus::skewmod::{from_skew, make_presentation, to_skew, CyclicModule};
use qtorus::torus::{center_lattice, is_central, parse_element_with_class};
use qtorus::{corpus, PairingSpec};

fn spec_from(seed: u64, n: usize, order: u64, t: usize) -> Arc<PairingSpec> {
    random_spec(&mut case_rng(seed, 0), n, order, t, 3)
}

fn exponent(n: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-6i64..=6, n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn scalar_field_axioms(seed in any::<u64>(), order in prop::sample::select(vec![1u64, 3, 4, 6]), t in 0usize..=2) {
        let spec = PairingSpec::commutative(1, order, t);
        let mut rng = case_rng(seed, 1);
        let a = random_scalar(&mut rng, &spec);
        let b = random_scalar(&mut rng, &spec);
        let c = random_scalar(&mut rng, &spec);
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
        prop_assert!(a.mul(&a.inv().unwrap()).is_one());
        prop_assert_eq!(a.div(&b).unwrap().mul(&b), a);
    }

    #[test]
    fn units_embed_multiplicatively(z1 in 0i64..12, z2 in 0i64..12, q1 in exponent(2), q2 in exponent(2)) {
        let field = PairingSpec::commutative(1, 12, 2).field().clone();
        let u = UnitMonomial::new(12, z1, q1);
        let v = UnitMonomial::new(12, z2, q2);
        let lhs = Scalar::from_unit(&field, &u.mul(&v));
        let rhs = Scalar::from_unit(&field, &u).mul(&Scalar::from_unit(&field, &v));
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(Scalar::from_unit(&field, &u).is_one(), u.is_one());
    }

    #[test]
    fn multiplication_is_associative_and_distributive(seed in any::<u64>(), n in 1usize..=3, order in 1u64..=4, t in 0usize..=2) {
        let spec = spec_from(seed, n, order, t);
        let mut rng = case_rng(seed, 2);
        let f = random_element(&mut rng, &spec, 3, 2);
        let g = random_element(&mut rng, &spec, 3, 2);
        let h = random_element(&mut rng, &spec, 2, 2);
        prop_assert_eq!(f.mul(&g).unwrap().mul(&h).unwrap(), f.mul(&g.mul(&h).unwrap()).unwrap());
        prop_assert_eq!(
            f.mul(&g.add(&h).unwrap()).unwrap(),
            f.mul(&g).unwrap().add(&f.mul(&h).unwrap()).unwrap()
        );
    }

    #[test]
    fn chi_is_an_alternating_bicharacter(seed in any::<u64>(), a in exponent(3), b in exponent(3), c in exponent(3)) {
        let spec = spec_from(seed, 3, 6, 2);
        let sum = |x: &[i64], y: &[i64]| x.iter().zip(y).map(|(p, q)| p + q).collect::<Vec<_>>();
        let neg = |x: &[i64]| x.iter().map(|p| -p).collect::<Vec<_>>();
        prop_assert_eq!(spec.chi(&sum(&a, &b), &c), spec.chi(&a, &c).mul(&spec.chi(&b, &c)));
        prop_assert_eq!(spec.chi(&a, &neg(&b)), spec.chi(&a, &b).inverse());
        prop_assert_eq!(spec.chi(&a, &b), spec.chi(&b, &a).inverse());
        prop_assert!(spec.chi(&a, &a).is_one());
        prop_assert_eq!(spec.chi(&a, &b), spec.cocycle(&a, &b).mul(&spec.cocycle(&b, &a).inverse()));
    }

    #[test]
    fn center_lattice_is_exact(seed in any::<u64>(), n in 1usize..=4, order in 1u64..=6, t in 0usize..=2, a in exponent(4)) {
        let spec = spec_from(seed, n, order, t);
        let z = center_lattice(&spec);
        let a = &a[..n];
        prop_assert_eq!(is_central(&spec, a), z.contains_i64(a));
        for v in z.basis_i64() {
            prop_assert!(is_central(&spec, &v));
        }
    }

    #[test]
    fn finite_index_sublattices_have_positive_index(seed in any::<u64>()) {
        let mut rng = case_rng(seed, 3);
        let l = qtorus::rng::random_finite_index(&mut rng, 3, 64);
        let idx = index(&l, &Sublattice::full(3)).unwrap();
        prop_assert!(matches!(idx, Index::Finite(k) if k >= 1.into() && k <= 64.into()));
        prop_assert!(l.saturate() == Sublattice::full(3));
    }

    #[test]
    fn reduction_normal_forms(seed in any::<u64>()) {
        let spec = corpus::two_parameter_space();
        let c = Sublattice::from_rows(3, &[vec![0, 1, 0], vec![0, 0, 1]]);
        let p = make_presentation(&spec, &c).unwrap();
        let r = parse_element_with_class(&spec, p.x_class(), "x2*X^2 - X + 3*x3").unwrap();
        let m = CyclicModule::new(&to_skew(&r, &p).unwrap()).unwrap();
        let mut rng = case_rng(seed, 4);
        let f = to_skew(&random_element(&mut rng, &spec, 4, 3), &p).unwrap();
        let g = to_skew(&random_element(&mut rng, &spec, 2, 2), &p).unwrap();
        let nf = m.reduce(&f);
        prop_assert_eq!(m.reduce(&nf), nf.clone());
        prop_assert_eq!(m.reduce(&f.add(&m.r().mul(&g).unwrap()).unwrap()), nf.clone());
        let sum = f.add(&g).unwrap();
        prop_assert_eq!(m.reduce(&sum), nf.add(&m.reduce(&g)).unwrap());
        prop_assert_eq!(to_skew(&from_skew(&f), &p).unwrap(), f);
    }
}
