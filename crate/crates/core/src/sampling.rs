//! Seeded random point configurations with integer coordinates.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::PointConfiguration;
use crate::independence::{is_d_independent, is_general_linear_position, Verdict};
use crate::poly::{form_space_dim, ProjectivePoint};

pub const DEFAULT_BOUND: i64 = 50;
pub const MAX_ATTEMPTS: usize = 1000;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Requirement {
    pub glp: bool,
    /// Require a `yes` d-independence verdict for this `d`.
    pub d_independent: Option<u32>,
}

/// `size` points with coordinates uniform in `[−B, B]`, `B` =
/// [`DEFAULT_BOUND`], resampled until `require` holds.
pub fn random_configuration(
    n: usize,
    size: usize,
    seed: u64,
    require: Requirement,
) -> Result<PointConfiguration> {
    random_configuration_bounded(n, size, seed, require, DEFAULT_BOUND)
}

pub fn random_configuration_bounded(
    n: usize,
    size: usize,
    seed: u64,
    require: Requirement,
    bound: i64,
) -> Result<PointConfiguration> {
    if size == 0 {
        return Err(Error::EmptyConfiguration);
    }
    if n == 0 || bound < 1 {
        return Err(Error::OutOfRange(format!(
            "need n ≥ 1 and bound ≥ 1, got n = {n}, bound = {bound}"
        )));
    }
    if let Some(d) = require.d_independent {
        let limit = form_space_dim(n, d).saturating_sub(n);
        if d == 0 || size > limit {
            return Err(Error::Unattainable(format!(
                "{size} points cannot be {d}-independent in {n} variables (at most {limit})"
            )));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_ATTEMPTS {
        let points: Result<Vec<ProjectivePoint>> = (0..size)
            .map(|_| {
                let c: Vec<i64> = (0..n).map(|_| rng.random_range(-bound..=bound)).collect();
                ProjectivePoint::from_i64(&c)
            })
            .collect();
        let Ok(g) = points.and_then(PointConfiguration::new) else {
            continue;
        };
        if require.glp && !is_general_linear_position(&g) {
            continue;
        }
        if let Some(d) = require.d_independent {
            if is_d_independent(&g, d)?.verdict != Verdict::Yes {
                continue;
            }
        }
        return Ok(g);
    }
    Err(Error::Unattainable(format!(
        "no sample met the requirement in {MAX_ATTEMPTS} attempts"
    )))
}
