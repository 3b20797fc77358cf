//! Named regression algebras with known Krull dimension.

use std::sync::Arc;

use crate::torus::PairingSpec;

pub struct CorpusEntry {
    pub name: &'static str,
    pub spec: Arc<PairingSpec>,
    /// Expected Krull dimension and whether the bounds are expected to meet.
    pub krull: usize,
    pub exact: bool,
}

fn elementary(n: usize, i: usize, j: usize, k: i64) -> Vec<Vec<i64>> {
    let mut m = vec![vec![0; n]; n];
    m[i][j] = k;
    m
}

fn zeros(n: usize) -> Vec<Vec<i64>> {
    vec![vec![0; n]; n]
}

fn entry(name: &'static str, spec: Arc<PairingSpec>, krull: usize, exact: bool) -> CorpusEntry {
    CorpusEntry {
        name,
        spec,
        krull,
        exact,
    }
}

/// The generic quantum plane `x1 x2 = q1 x2 x1`.
pub fn generic_plane() -> Arc<PairingSpec> {
    PairingSpec::new(2, 1, &zeros(2), &[elementary(2, 0, 1, 1)]).expect("valid")
}

/// `x1 x2 = ζ_N x2 x1`.
pub fn root_of_unity_plane(order: u64) -> Arc<PairingSpec> {
    PairingSpec::new(2, order, &elementary(2, 0, 1, 1), &[]).expect("valid")
}

/// `x1 x2 = ζ_3 q1 x2 x1`.
pub fn mixed_plane() -> Arc<PairingSpec> {
    PairingSpec::new(2, 3, &elementary(2, 0, 1, 1), &[elementary(2, 0, 1, 1)]).expect("valid")
}

/// Rank three with `q12 = q1`, `q13 = q2`, `q23 = 1`.
pub fn two_parameter_space() -> Arc<PairingSpec> {
    PairingSpec::new(
        3,
        1,
        &zeros(3),
        &[elementary(3, 0, 1, 1), elementary(3, 0, 2, 1)],
    )
    .expect("valid")
}

/// Rank three with only `q12 = q1` nontrivial; the center is `F[x3^{±1}]`.
pub fn single_parameter_space() -> Arc<PairingSpec> {
    PairingSpec::new(3, 1, &zeros(3), &[elementary(3, 0, 1, 1)]).expect("valid")
}

/// Two hyperbolic pairs carried by separate parameters.
pub fn hyperbolic_pairs() -> Arc<PairingSpec> {
    PairingSpec::new(
        4,
        1,
        &zeros(4),
        &[elementary(4, 0, 1, 1), elementary(4, 2, 3, 1)],
    )
    .expect("valid")
}

pub fn corpus() -> Vec<CorpusEntry> {
    let mut zeta6 = zeros(3);
    zeta6[0][1] = 1;
    zeta6[0][2] = 2;
    zeta6[1][2] = 3;
    let mut mixed3 = zeros(3);
    mixed3[0][1] = 1;
    mixed3[1][2] = -2;
    vec![
        entry("generic_plane", generic_plane(), 1, true),
        entry("root_of_unity_plane_2", root_of_unity_plane(2), 2, true),
        entry("root_of_unity_plane_3", root_of_unity_plane(3), 2, true),
        entry("root_of_unity_plane_6", root_of_unity_plane(6), 2, true),
        entry("mixed_plane", mixed_plane(), 1, true),
        entry("two_parameter_space", two_parameter_space(), 2, true),
        entry("single_parameter_space", single_parameter_space(), 2, true),
        entry(
            "root_of_unity_space_6",
            PairingSpec::new(3, 6, &zeta6, &[]).expect("valid"),
            3,
            true,
        ),
        entry(
            "commutative_rank_four",
            PairingSpec::commutative(4, 1, 1),
            4,
            true,
        ),
        entry("rank_one", PairingSpec::commutative(1, 1, 0), 1, true),
        entry(
            "chain_space",
            PairingSpec::new(3, 1, &zeros(3), &[mixed3]).expect("valid"),
            2,
            true,
        ),
        // the search certifies 2 while the rank bound only gives 3
        entry("hyperbolic_pairs", hyperbolic_pairs(), 2, false),
    ]
}
