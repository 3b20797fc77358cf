//! Seeded property suites.
//!
//! Each suite is a pure function of `(cases, seed)`: case `i` draws from
//! [`case_rng`]`(seed, i)` and the report lists results in case order, so
//! two runs with the same arguments serialize to identical bytes.

use std::collections::BTreeMap;
use std::sync::Arc;

use rand::Rng;
use serde::Serialize;

use crate::corpus::{self, corpus};
use crate::dimension::{
    center_corank_remark, is_isotropic, krull_dimension, krull_upper_bound, KrullBudget,
};
use crate::error::Error;
use crate::lattice::Sublattice;
use crate::rng::{
    case_rng, random_element, random_element_in, random_exponent, random_finite_index, random_spec,
    QtRng,
};
use crate::skewmod::{from_skew, make_presentation, to_skew, CyclicModule, SkewPresentation};
use crate::torus::{center_lattice, finite_index_center_agreement, PairingSpec, TorusElement};

pub const SUITES: [&str; 5] = ["identities", "center", "finite-index", "krull", "skewmod"];

const MAX_LISTED_FAILURES: usize = 20;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub run: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub case: usize,
    pub check: &'static str,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: &'static str,
    pub seed: u64,
    pub cases: usize,
    pub checks: BTreeMap<&'static str, Tally>,
    pub failures: Vec<Failure>,
    pub failure_count: usize,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub seed: u64,
    pub cases: usize,
    pub suites: Vec<SuiteReport>,
    pub pass: bool,
}

struct Recorder {
    suite: &'static str,
    seed: u64,
    cases: usize,
    checks: BTreeMap<&'static str, Tally>,
    failures: Vec<Failure>,
    failure_count: usize,
}

impl Recorder {
    fn new(suite: &'static str, seed: u64, cases: usize) -> Self {
        Recorder {
            suite,
            seed,
            cases,
            checks: BTreeMap::new(),
            failures: Vec::new(),
            failure_count: 0,
        }
    }

    fn check(
        &mut self,
        case: usize,
        name: &'static str,
        ok: bool,
        detail: impl FnOnce() -> String,
    ) {
        let tally = self.checks.entry(name).or_default();
        tally.run += 1;
        if !ok {
            tally.failed += 1;
            self.failure_count += 1;
            if self.failures.len() < MAX_LISTED_FAILURES {
                self.failures.push(Failure {
                    case,
                    check: name,
                    detail: detail(),
                });
            }
        }
    }

    fn finish(self) -> SuiteReport {
        SuiteReport {
            suite: self.suite,
            seed: self.seed,
            cases: self.cases,
            pass: self.failure_count == 0,
            checks: self.checks,
            failures: self.failures,
            failure_count: self.failure_count,
        }
    }
}

/// Runs one suite by name, or every suite for `"all"`.
pub fn run_suite(name: &str, cases: usize, seed: u64) -> Result<VerifyReport, Error> {
    let suites: Vec<SuiteReport> = match name {
        "all" => SUITES.iter().map(|s| run_one(s, cases, seed)).collect(),
        s if SUITES.contains(&s) => vec![run_one(s, cases, seed)],
        other => return Err(Error::InvalidArgument(format!("unknown suite `{other}`"))),
    };
    Ok(VerifyReport {
        seed,
        cases,
        pass: suites.iter().all(|s| s.pass),
        suites,
    })
}

fn run_one(name: &str, cases: usize, seed: u64) -> SuiteReport {
    match name {
        "identities" => identities(cases, seed),
        "center" => center(cases, seed),
        "finite-index" => finite_index(cases, seed),
        "krull" => krull(cases, seed),
        "skewmod" => skewmod(cases, seed),
        _ => unreachable!("suite names are checked by run_suite"),
    }
}

/// The configurations swept by the identity suite: `N ∈ {1, 3, 6}`,
/// `t ∈ {0, 1, 2}`, `n ∈ {2, 3, 4}`.
pub fn identity_configs() -> Vec<(u64, usize, usize)> {
    let mut out = Vec::new();
    for n_order in [1u64, 3, 6] {
        for t in 0..=2 {
            for n in 2..=4 {
                out.push((n_order, t, n));
            }
        }
    }
    out
}

fn neg(a: &[i64]) -> Vec<i64> {
    a.iter().map(|x| -x).collect()
}

fn plus(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Commutator identities and the cocycle identity, `cases` triples per
/// configuration.
pub fn identities(cases: usize, seed: u64) -> SuiteReport {
    let mut rec = Recorder::new("identities", seed, cases);
    for (ci, (n_order, t, n)) in identity_configs().into_iter().enumerate() {
        let mut rng = case_rng(seed, ci as u64);
        let spec = random_spec(&mut rng, n, n_order, t, 3);
        for case in 0..cases {
            let label = ci * cases + case;
            let a = random_exponent(&mut rng, n, 4);
            let b = random_exponent(&mut rng, n, 4);
            let c = random_exponent(&mut rng, n, 4);
            let chi = |x: &[i64], y: &[i64]| spec.chi(x, y);
            let show = || format!("N={n_order} t={t} n={n} a={a:?} b={b:?} c={c:?}");
            rec.check(
                label,
                "product_left",
                chi(&plus(&a, &b), &c) == chi(&a, &c).mul(&chi(&b, &c)),
                show,
            );
            rec.check(
                label,
                "product_right",
                chi(&a, &plus(&b, &c)) == chi(&a, &b).mul(&chi(&a, &c)),
                show,
            );
            rec.check(
                label,
                "inverse_right",
                chi(&a, &neg(&b)) == chi(&a, &b).inverse(),
                show,
            );
            rec.check(
                label,
                "inverse_left",
                chi(&neg(&a), &b) == chi(&a, &b).inverse(),
                show,
            );
            let tau = |x: &[i64], y: &[i64]| spec.cocycle(x, y);
            rec.check(
                label,
                "cocycle",
                tau(&a, &b).mul(&tau(&plus(&a, &b), &c))
                    == tau(&b, &c).mul(&tau(&a, &plus(&b, &c))),
                show,
            );
            rec.check(label, "alternating", chi(&a, &a).is_one(), show);
            // χ is the group commutator of monomials
            let xa = TorusElement::basis(&spec, a.clone());
            let xb = TorusElement::basis(&spec, b.clone());
            let lhs = xa.mul(&xb).expect("same spec");
            let rhs = xb
                .mul(&xa)
                .expect("same spec")
                .scale(&crate::scalars::Scalar::from_unit(
                    spec.field(),
                    &chi(&a, &b),
                ));
            rec.check(label, "commutation", lhs == rhs, show);
        }
    }
    rec.finish()
}

/// Independent test of `χ(a, e_i) = 1` straight from the stored matrices.
fn commutes_with_generators(spec: &PairingSpec, a: &[i64]) -> bool {
    let n = spec.rank();
    let order = spec.root_order() as i64;
    (0..n).all(|i| {
        let z: i64 = (0..n).map(|j| a[j] * spec.zeta_rows()[j][i]).sum();
        z.rem_euclid(order) == 0
            && spec
                .generic_rows()
                .iter()
                .all(|e| (0..n).map(|j| a[j] * e[j][i]).sum::<i64>() == 0)
    })
}

fn small_spec(rng: &mut QtRng) -> Arc<PairingSpec> {
    let n = rng.gen_range(1..=4);
    let order = rng.gen_range(1..=6);
    let t = rng.gen_range(0..=2);
    random_spec(rng, n, order, t, 3)
}

/// Center lattice against generator brackets and an exhaustive search over
/// `[-5, 5]^n`.
pub fn center(cases: usize, seed: u64) -> SuiteReport {
    let mut rec = Recorder::new("center", seed, cases);
    for case in 0..cases {
        let mut rng = case_rng(seed, case as u64);
        let spec = small_spec(&mut rng);
        let n = spec.rank();
        let z = center_lattice(&spec);
        let gens: Vec<TorusElement> = (1..=n).map(|i| TorusElement::generator(&spec, i)).collect();
        for v in z.basis_i64() {
            let m = TorusElement::basis(&spec, v.clone());
            let ok = gens
                .iter()
                .all(|g| m.lie_bracket(g).expect("same spec").is_zero());
            rec.check(case, "basis_is_central", ok, || format!("{v:?}"));
        }
        let mut missed = None;
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
            let central = commutes_with_generators(&spec, &a);
            if central != z.contains_i64(&a) {
                missed = Some(a);
                break;
            }
        }
        rec.check(case, "brute_force_agrees", missed.is_none(), || {
            format!("disagreement at {missed:?}")
        });
    }
    rec.finish()
}

/// Center triviality of `F∗A` against `F∗A_1` for `cases` random
/// finite-index sublattices of each of ten random algebras.
pub fn finite_index(cases: usize, seed: u64) -> SuiteReport {
    let mut rec = Recorder::new("finite-index", seed, cases);
    for spec_idx in 0..10 {
        let mut rng = case_rng(seed, spec_idx as u64);
        let n = rng.gen_range(2..=4);
        let order = [1u64, 2, 3, 4, 6][rng.gen_range(0..5)];
        let t = rng.gen_range(0..=2);
        let spec = random_spec(&mut rng, n, order, t, 3);
        for case in 0..cases {
            let sub = random_finite_index(&mut rng, n, 64);
            let label = spec_idx * cases + case;
            let ok = finite_index_center_agreement(&spec, &sub);
            rec.check(label, "center_agreement", ok == Ok(true), || {
                format!("sublattice {:?}: {ok:?}", sub.basis_i64())
            });
        }
    }
    rec.finish()
}

/// Corpus regressions plus structural checks on random algebras.
pub fn krull(cases: usize, seed: u64) -> SuiteReport {
    let mut rec = Recorder::new("krull", seed, cases);
    for (i, entry) in corpus().into_iter().enumerate() {
        let report = krull_dimension(&entry.spec, KrullBudget::default());
        let ok = matches!(&report, Ok(r) if r.lower == entry.krull && r.exact == entry.exact);
        rec.check(i, "corpus_value", ok, || {
            format!("{}: {report:?}", entry.name)
        });
        if let Ok(r) = &report {
            if r.exact && r.lower + 1 == entry.spec.rank() {
                let remark = center_corank_remark(&entry.spec);
                rec.check(i, "center_corank", remark == Ok(true), || {
                    format!("{}: {remark:?}", entry.name)
                });
            }
        }
    }
    for case in 0..cases {
        let mut rng = case_rng(seed, case as u64);
        let spec = small_spec(&mut rng);
        let budget = KrullBudget {
            entry_bound: 2,
            node_limit: 2_000,
        };
        let report = match krull_dimension(&spec, budget) {
            Ok(r) => r,
            Err(e) => e.best,
        };
        let w = &report.witness.sublattice;
        rec.check(case, "witness_isotropic", is_isotropic(&spec, w), || {
            format!("{:?}", w.basis_i64())
        });
        rec.check(
            case,
            "bounds_ordered",
            report.lower <= report.upper && w.rank() == report.lower,
            || format!("{report:?}"),
        );
        if spec.generic_count() == 0 {
            rec.check(
                case,
                "root_of_unity_full",
                report.exact && report.lower == spec.rank(),
                || format!("{report:?}"),
            );
        }
        // an extra generic form can only lower the upper bound
        let extended = random_spec(&mut rng, spec.rank(), 1, 1, 3);
        let mut generic = spec.generic_rows().to_vec();
        generic.extend_from_slice(extended.generic_rows());
        let bigger = PairingSpec::new(spec.rank(), spec.root_order(), spec.zeta_rows(), &generic)
            .expect("valid");
        rec.check(
            case,
            "upper_monotone",
            krull_upper_bound(&bigger) <= krull_upper_bound(&spec),
            String::new,
        );
    }
    rec.finish()
}

fn skew_fixtures() -> Vec<(Arc<PairingSpec>, Sublattice, &'static str)> {
    let plane_c = Sublattice::from_rows(2, &[vec![0, 1]]);
    let space_c = Sublattice::from_rows(3, &[vec![0, 1, 0], vec![0, 0, 1]]);
    vec![
        (corpus::two_parameter_space(), space_c.clone(), "X - x2"),
        (corpus::generic_plane(), plane_c.clone(), "X - x2"),
        (corpus::mixed_plane(), plane_c, "z*x2*X^2 + X - q1*x2^-1"),
        (
            corpus::single_parameter_space(),
            space_c,
            "x3*X^2 + (x2 + x3)*X - x2",
        ),
    ]
}

/// Skew-Laurent ring isomorphism, reduction soundness and uniqueness, and
/// the diagonal action of `F∗C`.
pub fn skewmod(cases: usize, seed: u64) -> SuiteReport {
    let mut rec = Recorder::new("skewmod", seed, cases);
    let fixtures: Vec<(Arc<PairingSpec>, Arc<SkewPresentation>, CyclicModule)> = skew_fixtures()
        .into_iter()
        .map(|(s, c, r)| {
            let p = make_presentation(&s, &c).expect("valid presentation");
            let e = crate::torus::parse_element_with_class(&s, p.x_class(), r).expect("valid");
            let m = CyclicModule::new(&to_skew(&e, &p).expect("same spec")).expect("unitary");
            (s, p, m)
        })
        .collect();
    for case in 0..cases {
        let mut rng = case_rng(seed, case as u64);
        let (spec, pres, m) = &fixtures[case % fixtures.len()];
        let f = random_element(&mut rng, spec, 3, 2);
        let g = random_element(&mut rng, spec, 3, 2);
        let fs = to_skew(&f, pres).expect("same spec");
        let gs = to_skew(&g, pres).expect("same spec");
        rec.check(case, "round_trip", from_skew(&fs) == f, || format!("{f}"));
        let prod = fs.mul(&gs).expect("same presentation");
        rec.check(
            case,
            "ring_isomorphism",
            from_skew(&prod) == f.mul(&g).expect("same spec"),
            || format!("f={f} g={g}"),
        );
        let (nf, quot) = m.reduce_with_quotient(&fs);
        let rebuilt = m.r().mul(&quot).and_then(|x| x.add(&nf));
        let window_ok = nf
            .window()
            .is_none_or(|(lo, hi)| lo >= 0 && (hi as usize) < m.width());
        rec.check(
            case,
            "reduction_sound",
            window_ok && rebuilt.as_ref() == Ok(&fs),
            || format!("f={f}"),
        );
        let shifted = fs
            .add(&m.r().mul(&gs).expect("same presentation"))
            .expect("same presentation");
        rec.check(case, "reduction_unique", m.reduce(&shifted) == nf, || {
            format!("f={f} g={g}")
        });
        let gamma = random_element_in(&mut rng, spec, pres.c(), 3, 2);
        let action = m.action_matrix(&gamma).expect("same spec");
        let diagonal = action.iter().enumerate().all(|(i, row)| {
            row.iter().enumerate().all(|(j, x)| {
                if i == j {
                    *x == pres.sigma(&gamma, i as i64)
                } else {
                    x.is_zero()
                }
            })
        });
        rec.check(case, "diagonal_action", diagonal, || {
            format!("gamma={gamma}")
        });
    }
    rec.finish()
}
