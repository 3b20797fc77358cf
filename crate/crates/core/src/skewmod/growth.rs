use std::collections::BTreeMap;

use serde::Serialize;

use super::module::CyclicModule;
use super::presentation::SkewLaurentElement;
use crate::error::{Error, Result};
use crate::scalars::Scalar;
use crate::torus::TorusElement;

/// Dimensions of the images of the ℓ1 monomial balls and the fitted
/// log-log slope.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GrowthReport {
    pub dims: Vec<usize>,
    pub k_range: (usize, usize),
    pub fitted_exponent: f64,
}

type Key = (i64, Vec<i64>);

/// Incremental row echelon form over `F` keyed by (X-degree, c-exponent).
#[derive(Default)]
struct Echelon {
    pivots: BTreeMap<Key, BTreeMap<Key, Scalar>>,
}

impl Echelon {
    fn insert(&mut self, mut v: BTreeMap<Key, Scalar>) -> bool {
        while let Some((lead, c)) = v.iter().next_back().map(|(k, c)| (k.clone(), c.clone())) {
            let Some(pivot) = self.pivots.get(&lead) else {
                let inv = c.inv().expect("nonzero leading coefficient");
                let row = v.into_iter().map(|(k, x)| (k, x.mul(&inv))).collect();
                self.pivots.insert(lead, row);
                return true;
            };
            for (k, x) in pivot {
                let updated = v
                    .get(k)
                    .map_or_else(|| x.mul(&c).neg(), |y| y.sub(&x.mul(&c)));
                if updated.is_zero() {
                    v.remove(k);
                } else {
                    v.insert(k.clone(), updated);
                }
            }
        }
        false
    }
}

fn coordinates(f: &SkewLaurentElement) -> BTreeMap<Key, Scalar> {
    let mut out = BTreeMap::new();
    for (i, gamma) in f.coeffs() {
        for (c, x) in gamma.terms() {
            out.insert((*i, c.clone()), x.clone());
        }
    }
    out
}

/// All exponent vectors of `Z^n` with ℓ1 norm exactly `k`.
fn shell(n: usize, k: usize) -> Vec<Vec<i64>> {
    fn rec(n: usize, k: usize, prefix: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if prefix.len() + 1 == n {
            prefix.push(k as i64);
            out.push(prefix.clone());
            prefix.pop();
            if k > 0 {
                prefix.push(-(k as i64));
                out.push(prefix.clone());
                prefix.pop();
            }
            return;
        }
        for used in 0..=k {
            for sign in [1i64, -1] {
                if used == 0 && sign < 0 {
                    continue;
                }
                prefix.push(sign * used as i64);
                rec(n, k - used, prefix, out);
                prefix.pop();
            }
        }
    }
    if n == 0 {
        return if k == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    rec(n, k, &mut Vec::new(), &mut out);
    out
}

impl CyclicModule {
    /// `dims[k]` for `k = 0..=k_max`: the dimension over `F` of the span of
    /// the classes of `x̄^a` with `Σ|a_i| ≤ k`.
    pub fn growth_dims(&self, k_max: usize) -> Vec<usize> {
        let mut cache = self.growth_cache.lock().expect("growth cache poisoned");
        if cache.len() <= k_max {
            // recompute from scratch: the echelon state is not cached
            let spec = self.presentation().spec().clone();
            let mut echelon = Echelon::default();
            let mut dims = Vec::with_capacity(k_max + 1);
            let mut rank = 0;
            for k in 0..=k_max {
                for a in shell(spec.rank(), k) {
                    let image = self
                        .reduce_element(&TorusElement::basis(&spec, a))
                        .expect("same spec");
                    if echelon.insert(coordinates(&image)) {
                        rank += 1;
                    }
                }
                dims.push(rank);
            }
            *cache = dims;
        }
        cache[..=k_max].to_vec()
    }

    pub fn growth_dimension(&self, k: usize) -> usize {
        self.growth_dims(k)[k]
    }

    /// Least-squares slope of `log dims[k]` against `log k` over
    /// `k ∈ [k_min, k_max]`.
    pub fn growth_exponent(&self, k_min: usize, k_max: usize) -> Result<GrowthReport> {
        if k_min < 2 || k_min >= k_max {
            return Err(Error::InvalidArgument(format!(
                "growth range needs 2 <= k_min < k_max, got [{k_min}, {k_max}]"
            )));
        }
        let dims = self.growth_dims(k_max);
        let window = &dims[k_min..=k_max];
        if window.iter().all(|&d| d == window[0]) {
            return Err(Error::DegenerateData);
        }
        let fitted_exponent = fit_slope(k_min, window);
        Ok(GrowthReport {
            dims,
            k_range: (k_min, k_max),
            fitted_exponent,
        })
    }
}

fn fit_slope(k_min: usize, window: &[usize]) -> f64 {
    let pts: Vec<(f64, f64)> = window
        .iter()
        .enumerate()
        .map(|(i, &d)| (((k_min + i) as f64).ln(), (d as f64).ln()))
        .collect();
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    sxy / sxx
}

/// The default fitting window `[max(2, k_max/2), k_max]`.
pub fn default_range(k_max: usize) -> (usize, usize) {
    ((k_max / 2).max(2), k_max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::Sublattice;
    use crate::skewmod::{make_presentation, to_skew};
    use crate::torus::{parse_element_with_class, PairingSpec};
    use std::collections::BTreeSet;
    use std::sync::Arc;

    fn two_param3() -> Arc<PairingSpec> {
        let z = vec![vec![0; 3]; 3];
        let mut e1 = z.clone();
        e1[0][1] = 1;
        let mut e2 = z.clone();
        e2[0][2] = 1;
        PairingSpec::new(3, 1, &z, &[e1, e2]).unwrap()
    }

    fn module(spec: &Arc<PairingSpec>, c: Sublattice, r: &str) -> CyclicModule {
        let p = make_presentation(spec, &c).unwrap();
        let e = parse_element_with_class(spec, p.x_class(), r).unwrap();
        CyclicModule::new(&to_skew(&e, &p).unwrap()).unwrap()
    }

    /// Distinct `(a1 + a2, a3)` over the ℓ1 ball: the classes of `x̄^a`
    /// modulo `X − x2` are scalar multiples of `x2^{a1+a2} x3^{a3}`.
    fn oracle_count(k: i64) -> usize {
        let mut seen = BTreeSet::new();
        for a1 in -k..=k {
            for a2 in -k..=k {
                for a3 in -k..=k {
                    if a1.abs() + a2.abs() + a3.abs() <= k {
                        seen.insert((a1 + a2, a3));
                    }
                }
            }
        }
        seen.len()
    }

    #[test]
    fn shells_partition_the_ball() {
        assert_eq!(shell(3, 0), vec![vec![0, 0, 0]]);
        assert_eq!(shell(2, 1).len(), 4);
        let ball: usize = (0..=3).map(|k| shell(3, k).len()).sum();
        assert_eq!(ball, 63);
    }

    #[test]
    fn three_variable_growth_matches_oracle() {
        let s = two_param3();
        let m = module(
            &s,
            Sublattice::from_rows(3, &[vec![0, 1, 0], vec![0, 0, 1]]),
            "X - x2",
        );
        let dims = m.growth_dims(6);
        let expected: Vec<usize> = (0..=6).map(oracle_count).collect();
        assert_eq!(dims, expected);
        assert_eq!(m.growth_dimension(0), 1);
        assert_eq!(m.growth_dimension(2), 13);
        let report = m.growth_exponent(6, 12).unwrap();
        assert!((report.fitted_exponent - 2.0).abs() <= 0.2, "{report:?}");
        assert!(report.dims.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn two_variable_growth() {
        let s = PairingSpec::new(
            2,
            1,
            &[vec![0, 0], vec![0, 0]],
            &[vec![vec![0, 1], vec![0, 0]]],
        )
        .unwrap();
        let m = module(&s, Sublattice::from_rows(2, &[vec![0, 1]]), "X - x2");
        assert_eq!(m.growth_dims(4), vec![1, 3, 5, 7, 9]);
        let report = m.growth_exponent(6, 12).unwrap();
        assert!((report.fitted_exponent - 1.0).abs() <= 0.2, "{report:?}");
    }

    #[test]
    fn degenerate_growth() {
        // rank one: C = 0 and M(r) is finite dimensional
        let s = PairingSpec::commutative(1, 1, 0);
        let m = module(&s, Sublattice::zero(1), "X^2 - 1");
        assert_eq!(m.growth_dims(5), vec![1, 2, 2, 2, 2, 2]);
        assert_eq!(m.growth_exponent(2, 5).unwrap_err(), Error::DegenerateData);
        assert!(matches!(
            m.growth_exponent(1, 5),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn wider_generator_counts_are_rank_based() {
        let s = two_param3();
        let m = module(
            &s,
            Sublattice::from_rows(3, &[vec![0, 1, 0], vec![0, 0, 1]]),
            "X^2 + (x2 + x3)*X - x3",
        );
        let dims = m.growth_dims(3);
        assert_eq!(dims[0], 1);
        assert!(dims.windows(2).all(|w| w[0] <= w[1]));
    }
}
