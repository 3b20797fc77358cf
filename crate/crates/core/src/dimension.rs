//! Isotropic sublattices and the Krull dimension of `F∗A`.
//!
//! The Krull dimension equals the largest rank of a subgroup `B` with
//! `F∗B` commutative, i.e. of a sublattice on which the commutator `χ` is
//! trivial. The lower bound comes from a bounded depth-first search over
//! isotropic sublattices; the upper bound from the rank of each generic
//! form separately. Exactness is reported, never assumed.

use std::collections::HashSet;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{kernel, kernel_mod, solve_integer, IntMatrix, Sublattice};
use crate::torus::{center_lattice, is_central, PairingSpec};

/// Search limits for [`krull_dimension`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct KrullBudget {
    /// Candidate vectors use coefficients in `[-entry_bound, entry_bound]`.
    pub entry_bound: i64,
    /// Maximum number of sublattices expanded.
    pub node_limit: usize,
}

impl Default for KrullBudget {
    fn default() -> Self {
        KrullBudget {
            entry_bound: 3,
            node_limit: 20_000,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IsotropyWitness {
    pub sublattice: Sublattice,
    pub certified_rank: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct KrullReport {
    pub lower: usize,
    pub upper: usize,
    pub witness: IsotropyWitness,
    pub exact: bool,
    pub nodes: usize,
}

/// The node limit was hit; `best` is the report built from what was found.
#[derive(Clone, Debug, PartialEq)]
pub struct BudgetExhausted {
    pub best: KrullReport,
}

impl std::fmt::Display for BudgetExhausted {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "search budget exhausted after {} nodes (best lower bound {})",
            self.best.nodes, self.best.lower
        )
    }
}

impl std::error::Error for BudgetExhausted {}

fn gram(v: &IntMatrix, m: &IntMatrix) -> IntMatrix {
    v.mul(m).mul(&v.transpose())
}

/// `χ` is trivial on `l × l`: `V·Z·Vᵀ ≡ 0 (mod N)` and `V·E_k·Vᵀ = 0`.
pub fn is_isotropic(spec: &PairingSpec, l: &Sublattice) -> bool {
    is_generic_isotropic(spec, l) && is_zeta_isotropic(spec, l)
}

fn is_generic_isotropic(spec: &PairingSpec, l: &Sublattice) -> bool {
    spec.generic_mats()
        .iter()
        .all(|e| gram(l.basis(), e).is_zero())
}

fn is_zeta_isotropic(spec: &PairingSpec, l: &Sublattice) -> bool {
    let n = BigInt::from(spec.root_order());
    gram(l.basis(), &spec.zeta_mat()).reduce_mod(&n).is_zero()
}

/// `rank(l) − max_k rank(E_k|_l)/2`: no isotropic sublattice of `l` is larger.
fn isotropic_upper_bound(spec: &PairingSpec, l: &Sublattice) -> usize {
    let worst = spec
        .generic_mats()
        .iter()
        .map(|e| gram(l.basis(), e).rank().div_ceil(2))
        .max()
        .unwrap_or(0);
    l.rank() - worst
}

/// `n − max_k ⌈rank_Q(E_k)/2⌉`, or `n` without generic parameters.
pub fn krull_upper_bound(spec: &PairingSpec) -> usize {
    isotropic_upper_bound(spec, &Sublattice::full(spec.rank()))
}

/// `{a ∈ l : χ(a, v) = 1}`.
fn perp(spec: &PairingSpec, l: &Sublattice, v: &[i64]) -> Sublattice {
    let n = spec.rank();
    let vb: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x)).collect();
    let generic_rows: Vec<Vec<BigInt>> =
        spec.generic_mats().iter().map(|e| e.mul_vec(&vb)).collect();
    let generic = kernel(&IntMatrix::from_rows(n, &generic_rows));
    let zeta_row = spec.zeta_mat().mul_vec(&vb);
    let zeta = kernel_mod(&IntMatrix::from_rows(n, &[zeta_row]), spec.root_order());
    l.intersect(&generic).intersect(&zeta)
}

/// Primitive coefficient vectors in `[-b, b]^dim` with first nonzero entry
/// positive, ordered by ℓ1 norm and then lexicographically.
fn candidates(dim: usize, b: i64) -> Vec<Vec<i64>> {
    type Cache = std::sync::Mutex<std::collections::HashMap<(usize, i64), Vec<Vec<i64>>>>;
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(v) = cache.lock().unwrap().get(&(dim, b)) {
        return v.clone();
    }
    let width = (2 * b + 1) as usize;
    let total = width.pow(dim as u32);
    let mut out = Vec::new();
    for code in 0..total {
        let mut c = code;
        let v: Vec<i64> = (0..dim)
            .map(|_| {
                let d = (c % width) as i64 - b;
                c /= width;
                d
            })
            .collect();
        let Some(first) = v.iter().find(|&&x| x != 0) else {
            continue;
        };
        if *first < 0 {
            continue;
        }
        if v.iter().fold(0i64, |g, &x| g.gcd(&x)) != 1 {
            continue;
        }
        out.push(v);
    }
    out.sort_by(|a, b| {
        let la: i64 = a.iter().map(|x| x.abs()).sum();
        let lb: i64 = b.iter().map(|x| x.abs()).sum();
        la.cmp(&lb).then_with(|| a.cmp(b))
    });
    cache.lock().unwrap().insert((dim, b), out.clone());
    out
}

struct Search<'a> {
    spec: &'a PairingSpec,
    budget: KrullBudget,
    target: usize,
    nodes: usize,
    exhausted: bool,
    visited: HashSet<Sublattice>,
    best: Option<Sublattice>,
    accept: &'a dyn Fn(&Sublattice) -> bool,
    /// Leaves of maximal rank that `accept` rejected, in discovery order.
    rejected: Vec<Sublattice>,
}

impl Search<'_> {
    fn best_rank(&self) -> usize {
        self.best.as_ref().map_or(0, Sublattice::rank)
    }

    fn done(&self) -> bool {
        self.exhausted || self.best_rank() >= self.target
    }

    fn visit(&mut self, p: Sublattice) {
        if self.done() || !self.visited.insert(p.clone()) {
            return;
        }
        self.nodes += 1;
        if self.nodes > self.budget.node_limit {
            self.exhausted = true;
            return;
        }
        if isotropic_upper_bound(self.spec, &p) <= self.best_rank() && self.best.is_some() {
            return;
        }
        if is_generic_isotropic(self.spec, &p) {
            // N·P kills the root-of-unity part without changing rank
            let leaf = if is_zeta_isotropic(self.spec, &p) {
                p
            } else {
                p.scaled(self.spec.root_order() as i64)
            };
            if leaf.rank() > self.best_rank() || self.best.is_none() {
                if (self.accept)(&leaf) {
                    self.best = Some(leaf);
                } else {
                    self.rejected.push(leaf);
                }
            }
            return;
        }
        let basis = p.basis();
        let gens = self.spec.generic_mats();
        for c in candidates(p.rank(), self.budget.entry_bound) {
            if self.done() {
                return;
            }
            let cb: Vec<BigInt> = c.iter().map(|&x| BigInt::from(x)).collect();
            let v = basis.vec_mul(&cb);
            // radical vectors leave P unchanged
            let radical = gens.iter().all(|e| {
                basis
                    .mul_vec(&e.mul_vec(&v))
                    .iter()
                    .all(|x| x.sign() == num_bigint::Sign::NoSign)
            });
            if radical {
                continue;
            }
            let v64: Vec<i64> = v
                .iter()
                .map(|x| i64::try_from(x).expect("candidate fits i64"))
                .collect();
            let next = perp(self.spec, &p, &v64);
            self.visit(next);
        }
    }
}

fn run_search<'a>(
    spec: &'a PairingSpec,
    budget: KrullBudget,
    target: usize,
    accept: &'a dyn Fn(&Sublattice) -> bool,
) -> Search<'a> {
    let mut s = Search {
        spec,
        budget,
        target,
        nodes: 0,
        exhausted: false,
        visited: HashSet::new(),
        best: None,
        accept,
        rejected: Vec::new(),
    };
    s.visit(Sublattice::full(spec.rank()));
    s
}

/// Bounds the Krull dimension by isotropic search (lower) and generic form
/// ranks (upper).
pub fn krull_dimension(
    spec: &PairingSpec,
    budget: KrullBudget,
) -> std::result::Result<KrullReport, BudgetExhausted> {
    let upper = krull_upper_bound(spec);
    let search = run_search(spec, budget, upper, &|_| true);
    let witness = search
        .best
        .clone()
        .unwrap_or_else(|| Sublattice::zero(spec.rank()));
    let lower = witness.rank();
    let report = KrullReport {
        lower,
        upper,
        exact: lower == upper,
        witness: IsotropyWitness {
            certified_rank: lower,
            sublattice: witness,
        },
        nodes: search.nodes.min(budget.node_limit),
    };
    if search.exhausted && !report.exact {
        Err(BudgetExhausted { best: report })
    } else {
        Ok(report)
    }
}

/// The `ζ`-radical of `l`: elements pairing trivially with all of `l`
/// under the root-of-unity form. Contains `N·l`, so it has full rank in `l`.
fn zeta_radical(spec: &PairingSpec, l: &Sublattice) -> Sublattice {
    let n = spec.rank();
    let rows = l.basis().mul(&spec.zeta_mat());
    l.intersect(&kernel_mod(
        &IntMatrix::from_rows(n, &rows.row_iter().map(|r| r.to_vec()).collect::<Vec<_>>()),
        spec.root_order(),
    ))
}

/// A commutative subgroup `C` of corank one.
///
/// Saturated witnesses are preferred. When every corank-one witness found
/// loses root-of-unity isotropy on saturation, the `ζ`-radical of the
/// saturation is returned instead: isotropic and of rank `n − 1`, but of
/// finite index in a saturated lattice rather than saturated itself.
pub fn corank1_commutative_subgroup(spec: &PairingSpec) -> Option<Sublattice> {
    corank1_with_budget(spec, KrullBudget::default())
}

pub fn corank1_with_budget(spec: &PairingSpec, budget: KrullBudget) -> Option<Sublattice> {
    let n = spec.rank();
    if n == 0 || krull_upper_bound(spec) < n - 1 {
        return None;
    }
    let accept = |l: &Sublattice| l.rank() >= n - 1 && is_isotropic(spec, &l.saturate());
    let search = run_search(spec, budget, n - 1, &accept);
    if let Some(best) = &search.best {
        if best.rank() >= n - 1 {
            if best.rank() == n - 1 {
                return Some(best.saturate());
            }
            // fully commutative: any corank-one saturated sublattice works
            let sat = Sublattice::from_generators(n, &IntMatrix::identity(n).select_rows(1..n));
            if is_isotropic(spec, &sat) {
                return Some(sat);
            }
            return Some(zeta_radical(spec, &sat));
        }
    }
    search
        .rejected
        .iter()
        .find(|l| l.rank() == n - 1)
        .map(|l| zeta_radical(spec, &l.saturate()))
}

/// Output of [`commuting_monomials`]: `u_j = s·w_j + c_j` with `c_j ∈ C`
/// and `w_j` the complement rows of a unimodular completion of `C`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CommutingMonomials {
    pub s: i64,
    pub complement: Vec<Vec<i64>>,
    pub monomial_exponents: Vec<Vec<i64>>,
}

/// Finds the least `s ≤ s_max` and `c_j ∈ C` such that the monomials
/// `x̄^{u_j}`, `u_j = s·w_j + c_j`, commute pairwise.
///
/// Because `C` is isotropic the pairwise conditions are linear in the
/// unknown `c_j`, so each candidate `s` is an integer linear system with
/// congruences mod `N`, solved exactly.
pub fn commuting_monomials(
    spec: &PairingSpec,
    c: &Sublattice,
    s_max: i64,
) -> Result<Option<CommutingMonomials>> {
    if !is_isotropic(spec, c) {
        return Err(Error::NotIsotropic);
    }
    let n = spec.rank();
    let full = c.complete_basis()?;
    let r = c.rank();
    let m = n - r;
    let b = full.select_rows(0..r);
    let w = full.select_rows(r..n);
    let bt = b.transpose();
    let modulus = BigInt::from(spec.root_order());

    // g[form][j] = w_jᵀ·M·Bᵀ, mjk[form] = w·M·wᵀ
    let forms: Vec<(IntMatrix, bool)> = spec
        .generic_mats()
        .into_iter()
        .map(|e| (e, false))
        .chain(std::iter::once((spec.zeta_mat(), true)))
        .collect();

    let unknowns = m * r;
    for s in 1..=s_max.max(0) {
        let sb = BigInt::from(s);
        let mut rows: Vec<Vec<BigInt>> = Vec::new();
        let mut rhs: Vec<BigInt> = Vec::new();
        let mut congruence_rows: Vec<usize> = Vec::new();
        for (mat, is_zeta) in &forms {
            if *is_zeta && spec.root_order() == 1 {
                continue;
            }
            let g = w.mul(mat).mul(&bt); // m × r
            let mm = w.mul(mat).mul(&w.transpose()); // m × m
            for j in 0..m {
                for k in j + 1..m {
                    let mut row = vec![BigInt::from(0); unknowns];
                    // coefficient scale: s for congruences, 1 for exact equations
                    let scale = if *is_zeta {
                        sb.clone()
                    } else {
                        BigInt::from(1)
                    };
                    for i in 0..r {
                        row[k * r + i] += &scale * &g[(j, i)];
                        row[j * r + i] -= &scale * &g[(k, i)];
                    }
                    let constant = if *is_zeta {
                        &sb * &sb * &mm[(j, k)]
                    } else {
                        &sb * &mm[(j, k)]
                    };
                    if *is_zeta {
                        congruence_rows.push(rows.len());
                    }
                    rows.push(row);
                    rhs.push(-constant);
                }
            }
        }
        // slack columns turn congruences into equations
        let slack = congruence_rows.len();
        let total = unknowns + slack;
        let system: Vec<Vec<BigInt>> = rows
            .iter()
            .enumerate()
            .map(|(idx, row)| {
                let mut full_row = row.clone();
                full_row.resize(total, BigInt::from(0));
                if let Some(pos) = congruence_rows.iter().position(|&x| x == idx) {
                    full_row[unknowns + pos] = modulus.clone();
                }
                full_row
            })
            .collect();
        let solution = if system.is_empty() {
            Some(vec![BigInt::from(0); total])
        } else {
            solve_integer(&IntMatrix::from_rows(total, &system), &rhs)
        };
        let Some(y) = solution else { continue };
        let monomials: Vec<Vec<i64>> = (0..m)
            .map(|j| {
                let yj = &y[j * r..(j + 1) * r];
                let cj = b.vec_mul(yj);
                (0..n)
                    .map(|i| {
                        let v = &sb * &w[(j, i)] + &cj[i];
                        i64::try_from(&v).expect("monomial exponent fits i64")
                    })
                    .collect()
            })
            .collect();
        debug_assert!(monomials
            .iter()
            .enumerate()
            .all(|(j, u)| monomials[j + 1..].iter().all(|v| spec.chi(u, v).is_one())));
        return Ok(Some(CommutingMonomials {
            s,
            complement: w.to_i64_rows().expect("complement fits i64"),
            monomial_exponents: monomials,
        }));
    }
    Ok(None)
}

/// For each `u_j`, the least multiple `k·u_j` with `s | k` that is
/// central, when one exists.
pub fn centralizing_monomials(
    spec: &PairingSpec,
    w: &CommutingMonomials,
    c: &Sublattice,
) -> Vec<Vec<i64>> {
    debug_assert!(w
        .monomial_exponents
        .iter()
        .zip(&w.complement)
        .all(|(u, wj)| {
            let diff: Vec<i64> = u.iter().zip(wj).map(|(a, b)| a - w.s * b).collect();
            c.contains_i64(&diff)
        }));
    let n_order = spec.root_order() as i64;
    let mut out = Vec::new();
    for u in &w.monomial_exponents {
        let ub: Vec<BigInt> = u.iter().map(|&x| BigInt::from(x)).collect();
        let generic_free = spec.generic_mats().iter().all(|e| {
            e.mul_vec(&ub)
                .iter()
                .all(|x| x.sign() == num_bigint::Sign::NoSign)
        });
        if !generic_free || u.iter().all(|&x| x == 0) {
            continue;
        }
        let zu = spec.zeta_mat().mul_vec(&ub);
        let g = zu.iter().fold(BigInt::from(n_order), |g, x| g.gcd(x));
        let order = n_order / i64::try_from(&g).expect("gcd divides N");
        let k = w.s.lcm(&order);
        let v: Vec<i64> = u.iter().map(|x| x * k).collect();
        debug_assert!(is_central(spec, &v));
        out.push(v);
    }
    out
}

/// `rk(Z) ≤ n − 2` whenever the Krull dimension is certified as `n − 1`.
pub fn center_corank_remark(spec: &PairingSpec) -> Result<bool> {
    let n = spec.rank();
    let report = krull_dimension(spec, KrullBudget::default())
        .map_err(|e| Error::PreconditionUnmet(e.to_string()))?;
    if !(report.exact && n >= 1 && report.lower == n - 1) {
        return Err(Error::PreconditionUnmet(format!(
            "Krull dimension not certified as n - 1 = {} (bounds {}..={})",
            n.saturating_sub(1),
            report.lower,
            report.upper
        )));
    }
    Ok(center_lattice(spec).rank() + 2 <= n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::Arc;

    fn elementary(n: usize, i: usize, j: usize) -> Vec<Vec<i64>> {
        let mut m = vec![vec![0; n]; n];
        m[i][j] = 1;
        m
    }

    fn generic2() -> Arc<PairingSpec> {
        PairingSpec::new(2, 1, &vec![vec![0; 2]; 2], &[elementary(2, 0, 1)]).unwrap()
    }

    fn two_param3() -> Arc<PairingSpec> {
        PairingSpec::new(
            3,
            1,
            &vec![vec![0; 3]; 3],
            &[elementary(3, 0, 1), elementary(3, 0, 2)],
        )
        .unwrap()
    }

    fn root2(n: u64) -> Arc<PairingSpec> {
        PairingSpec::new(2, n, &elementary(2, 0, 1), &[]).unwrap()
    }

    fn mixed2() -> Arc<PairingSpec> {
        PairingSpec::new(2, 3, &elementary(2, 0, 1), &[elementary(2, 0, 1)]).unwrap()
    }

    fn hyperbolic4() -> Arc<PairingSpec> {
        PairingSpec::new(
            4,
            1,
            &vec![vec![0; 4]; 4],
            &[elementary(4, 0, 1), elementary(4, 2, 3)],
        )
        .unwrap()
    }

    #[test]
    fn isotropy_examples() {
        let s = two_param3();
        assert!(is_isotropic(
            &s,
            &Sublattice::from_rows(3, &[vec![1, 2, 3]])
        ));
        assert!(is_isotropic(
            &s,
            &Sublattice::from_rows(3, &[vec![0, 1, 0], vec![0, 0, 1]])
        ));
        assert!(!is_isotropic(
            &s,
            &Sublattice::from_rows(3, &[vec![1, 0, 0], vec![0, 1, 0]])
        ));
    }

    #[test]
    fn krull_regression_values() {
        let r = krull_dimension(&generic2(), KrullBudget::default()).unwrap();
        assert_eq!((r.lower, r.upper, r.exact), (1, 1, true));

        let r = krull_dimension(&root2(3), KrullBudget::default()).unwrap();
        assert_eq!((r.lower, r.upper, r.exact), (2, 2, true));
        assert_eq!(r.witness.sublattice, Sublattice::full(2).scaled(3));

        let r = krull_dimension(&two_param3(), KrullBudget::default()).unwrap();
        assert_eq!((r.lower, r.upper, r.exact), (2, 2, true));
        assert_eq!(
            r.witness.sublattice,
            Sublattice::from_rows(3, &[vec![0, 1, 0], vec![0, 0, 1]])
        );

        let r = krull_dimension(&mixed2(), KrullBudget::default()).unwrap();
        assert_eq!((r.lower, r.upper, r.exact), (1, 1, true));
    }

    #[test]
    fn hyperbolic_pair_is_not_exact() {
        let r = krull_dimension(&hyperbolic4(), KrullBudget::default()).unwrap();
        assert_eq!((r.lower, r.upper, r.exact), (2, 3, false));
        assert!(is_isotropic(&hyperbolic4(), &r.witness.sublattice));
        assert_eq!(corank1_commutative_subgroup(&hyperbolic4()), None);
    }

    #[test]
    fn corank_one_examples() {
        assert_eq!(
            corank1_commutative_subgroup(&two_param3()),
            Some(Sublattice::from_rows(3, &[vec![0, 1, 0], vec![0, 0, 1]]))
        );
        let c = corank1_commutative_subgroup(&generic2()).unwrap();
        assert_eq!(c.rank(), 1);
        assert!(c.is_saturated());
    }

    #[test]
    fn commuting_monomials_examples() {
        let s = two_param3();
        let c = Sublattice::from_rows(3, &[vec![0, 1, 0], vec![0, 0, 1]]);
        let w = commuting_monomials(&s, &c, 4).unwrap().unwrap();
        assert_eq!(w.s, 1);
        assert_eq!(w.monomial_exponents, vec![vec![1, 0, 0]]);

        let root = root2(3);
        let c = Sublattice::from_rows(2, &[vec![0, 1]]);
        let w = commuting_monomials(&root, &c, 4).unwrap().unwrap();
        assert_eq!(w.s, 1);
        assert_eq!(centralizing_monomials(&root, &w, &c), vec![vec![3, 0]]);

        let bad = Sublattice::from_rows(3, &[vec![1, 0, 0], vec![0, 1, 0]]);
        assert_eq!(
            commuting_monomials(&s, &bad, 4).unwrap_err(),
            Error::NotIsotropic
        );
    }

    #[test]
    fn commuting_monomials_need_a_correction() {
        // C = <e4> in a rank-4 torus where the complement e1, e2, e3 does not
        // commute until shifted by multiples of e4.
        let n = 4;
        let z = vec![vec![0; n]; n];
        let mut e = vec![vec![0; n]; n];
        e[0][1] = 2; // χ(e1, e2) = q^2
        e[1][3] = 1; // χ(e2, e4) = q
        let s = PairingSpec::new(n, 1, &z, &[e]).unwrap();
        let c = Sublattice::from_rows(n, &[vec![0, 0, 0, 1]]);
        let w = commuting_monomials(&s, &c, 3).unwrap().unwrap();
        for (j, u) in w.monomial_exponents.iter().enumerate() {
            for v in &w.monomial_exponents[j + 1..] {
                assert!(s.chi(u, v).is_one());
            }
        }
        assert_eq!(w.s, 1);
    }

    #[test]
    fn trivial_center_gives_no_centralizing_vectors() {
        let s = generic2();
        let c = Sublattice::from_rows(2, &[vec![0, 1]]);
        let w = commuting_monomials(&s, &c, 2).unwrap().unwrap();
        assert!(centralizing_monomials(&s, &w, &c).is_empty());
    }

    #[test]
    fn center_corank_examples() {
        assert!(center_corank_remark(&two_param3()).unwrap());
        assert!(center_corank_remark(&mixed2()).unwrap());
        let q12 = PairingSpec::new(3, 1, &vec![vec![0; 3]; 3], &[elementary(3, 0, 1)]).unwrap();
        assert_eq!(center_lattice(&q12).rank(), 1);
        assert!(center_corank_remark(&q12).unwrap());
        assert!(matches!(
            center_corank_remark(&root2(3)),
            Err(Error::PreconditionUnmet(_))
        ));
    }

    #[test]
    fn upper_bound_is_monotone() {
        let base = generic2();
        let more = PairingSpec::new(
            2,
            1,
            &vec![vec![0; 2]; 2],
            &[elementary(2, 0, 1), elementary(2, 0, 1)],
        )
        .unwrap();
        assert!(krull_upper_bound(&more) <= krull_upper_bound(&base));
        let t0 = PairingSpec::new(3, 6, &elementary(3, 1, 2), &[]).unwrap();
        let r = krull_dimension(&t0, KrullBudget::default()).unwrap();
        assert_eq!((r.lower, r.exact), (3, true));
        assert_eq!(r.witness.sublattice, Sublattice::full(3).scaled(6));
    }
}
