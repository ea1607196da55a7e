//! Naive dimension counts for `dim P(Γ) − dim Σ(Γ)` and the ternary gap
//! prediction.
//!
//! With `A = dim H_{n,d}` and `H = dim H_{n,2d}`, a d-independent set of `k`
//! points has `dim I^(2)_{2d} ≥ H − kn` and `dim I²_{2d} ≤ C(A−k+1, 2)`, so
//! the gap is at least `G(k) = H − kn − C(A−k+1, 2)`.

use num_integer::{Integer, Roots};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::binomial;

/// `(d, A, H)` after checking `n ≥ 2` and `two_d = 2d` with `d ≥ 2`.
fn params(n: usize, two_d: u32) -> Result<(u32, i64, i64)> {
    if n < 2 {
        return Err(Error::OutOfRange(format!("need n ≥ 2, got {n}")));
    }
    if !two_d.is_multiple_of(2) || two_d < 4 {
        return Err(Error::OutOfRange(format!(
            "two_d must be even and at least 4, got {two_d}"
        )));
    }
    let d = two_d / 2;
    let a = binomial(n + d as usize - 1, d as usize) as i64;
    let h = binomial(n + two_d as usize - 1, two_d as usize) as i64;
    Ok((d, a, h))
}

fn choose2(m: i64) -> i64 {
    if m < 2 {
        0
    } else {
        m * (m - 1) / 2
    }
}

fn gap_value(n: usize, a: i64, h: i64, k: i64) -> i64 {
    h - k * n as i64 - choose2(a - k + 1)
}

/// `G_{n,2d}(k)` for `1 ≤ k ≤ C(n+d−1,d) − n`.
pub fn naive_gap(n: usize, two_d: u32, k: usize) -> Result<i64> {
    let (_, a, h) = params(n, two_d)?;
    let k_hi = a - n as i64;
    if k == 0 || k as i64 > k_hi {
        return Err(Error::OutOfRange(format!("k = {k} outside 1..={k_hi}")));
    }
    Ok(gap_value(n, a, h, k as i64))
}

/// The maximizer `k = C(n+d−1,d) − n` of `G` and the maximum
/// `C(n+2d−1,2d) − n·C(n+d−1,d) + C(n,2)`.
pub fn max_gap(n: usize, two_d: u32) -> Result<(usize, i64)> {
    let (_, a, h) = params(n, two_d)?;
    let k = a - n as i64;
    let value = h - n as i64 * a + choose2(n as i64);
    debug_assert_eq!(value, gap_value(n, a, h, k));
    Ok((k as usize, value))
}

/// Smallest `k` with `G(k) > 0`, by scanning.
pub fn min_k_positive(n: usize, two_d: u32) -> Result<Option<usize>> {
    let (_, a, h) = params(n, two_d)?;
    let k_hi = a - n as i64;
    let found = (1..=k_hi)
        .find(|&k| gap_value(n, a, h, k) > 0)
        .map(|k| k as usize);
    debug_assert_eq!(found, min_k_closed_form(n, two_d)?);
    Ok(found)
}

/// Smallest integer strictly above `(N − √D)/2` with `N = 2A − 2n + 1` and
/// `D = (2n−1)² + 8H − 8nA`, clipped to the admissible range.
pub(crate) fn min_k_closed_form(n: usize, two_d: u32) -> Result<Option<usize>> {
    let (_, a, h) = params(n, two_d)?;
    let n_i = n as i64;
    let disc = (2 * n_i - 1).pow(2) + 8 * h - 8 * n_i * a;
    if disc <= 0 {
        return Ok(None);
    }
    let big_n = 2 * a - 2 * n_i + 1;
    let s = disc.sqrt();
    let floor = if s * s == disc {
        Integer::div_floor(&(big_n - s), &2)
    } else {
        Integer::div_floor(&(big_n - s - 1), &2)
    };
    let k = (floor + 1).max(1);
    if k > a - n_i || gap_value(n, a, h, k) <= 0 {
        return Ok(None);
    }
    Ok(Some(k as usize))
}

/// `max(0, C(n+2d−1, 2d) − n·k)`, the generic dimension of `I^(2)_{2d}` for
/// `k` points.
pub fn ah_count(n: usize, two_d: u32, k: usize) -> usize {
    binomial(n + two_d as usize - 1, two_d as usize).saturating_sub(n * k)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GapProfile {
    pub n: usize,
    pub two_d: u32,
    pub values: Vec<(usize, i64)>,
    pub k_max: usize,
    pub max_gap: i64,
    pub k_min_positive: Option<usize>,
    /// `C(n+d−1,d) − n`.
    pub max_independent_hint: usize,
}

/// `G` over `range` (inclusive, default the whole admissible range).
pub fn gap_profile(n: usize, two_d: u32, range: Option<(usize, usize)>) -> Result<GapProfile> {
    let (k_max, max_value) = max_gap(n, two_d)?;
    let (lo, hi) = range.unwrap_or((1, k_max));
    if lo == 0 || lo > hi || hi > k_max {
        return Err(Error::OutOfRange(format!(
            "k-range {lo}..{hi} outside 1..{k_max}"
        )));
    }
    let values = (lo..=hi)
        .map(|k| Ok((k, naive_gap(n, two_d, k)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(GapProfile {
        n,
        two_d,
        values,
        k_max,
        max_gap: max_value,
        k_min_positive: min_k_positive(n, two_d)?,
        max_independent_hint: k_max,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TernaryRelation {
    Equal,
    StrictGap,
    OutOfRange,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TernaryPrediction {
    pub d: u32,
    pub k: usize,
    pub relation: TernaryRelation,
    /// `dim I^(2)_{2d} − dim I²_{2d}` for a d-independent set of `k` points
    /// in `RP²`.
    pub predicted_gap: Option<i64>,
    /// The same difference with first term `C(d+2,2) − 3k` instead of
    /// `C(2d+2,2) − 3k`; reported for comparison only.
    pub literal_reading_gap: Option<i64>,
}

/// Gap predicted for `k` d-independent points in `RP²`: zero up to
/// `C(d+1,2)` points, `(C(2d+2,2) − 3k) − C(C(d+2,2) − k + 1, 2)` from there
/// to the largest d-independent size `C(d+2,2) − 3`.
pub fn ternary_prediction(d: u32, k: usize) -> Result<TernaryPrediction> {
    if d < 3 {
        return Err(Error::DegreeTooLow {
            required: 3,
            found: d,
        });
    }
    if k == 0 {
        return Err(Error::OutOfRange("k must be at least 1".into()));
    }
    let du = d as usize;
    let a = binomial(du + 2, 2) as i64;
    let threshold = binomial(du + 1, 2);
    let k_hi = a as usize - 3;
    let ki = k as i64;
    let tail = choose2(a - ki + 1);
    let (relation, predicted, literal) = if k > k_hi {
        (TernaryRelation::OutOfRange, None, None)
    } else if k <= threshold {
        (TernaryRelation::Equal, Some(0), None)
    } else {
        let corrected = binomial(2 * du + 2, 2) as i64 - 3 * ki - tail;
        (
            TernaryRelation::StrictGap,
            Some(corrected),
            Some(a - 3 * ki - tail),
        )
    };
    Ok(TernaryPrediction {
        d,
        k,
        relation,
        predicted_gap: predicted,
        literal_reading_gap: literal,
    })
}
