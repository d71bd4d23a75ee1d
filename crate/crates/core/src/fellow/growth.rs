use std::fmt;
use std::str::FromStr;

use super::SCurve;
use crate::error::{Error, Result};

/// Candidate bounding functions `f`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum GrowthModel {
    Const,
    /// `log₂(max(n, 1))`.
    Log,
    Sqrt,
    Pow(f64),
    Identity,
}

impl GrowthModel {
    pub fn eval(self, n: f64) -> f64 {
        match self {
            GrowthModel::Const => 1.0,
            GrowthModel::Log => n.max(1.0).log2(),
            GrowthModel::Sqrt => n.max(0.0).sqrt(),
            GrowthModel::Pow(alpha) => n.max(0.0).powf(alpha),
            GrowthModel::Identity => n,
        }
    }
}

impl fmt::Display for GrowthModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GrowthModel::Const => f.write_str("const"),
            GrowthModel::Log => f.write_str("log"),
            GrowthModel::Sqrt => f.write_str("sqrt"),
            GrowthModel::Pow(alpha) => write!(f, "pow({alpha})"),
            GrowthModel::Identity => f.write_str("identity"),
        }
    }
}

impl FromStr for GrowthModel {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let bad = || Error::InvalidParameter(format!("unknown growth model `{text}`"));
        Ok(match text {
            "const" => GrowthModel::Const,
            "log" => GrowthModel::Log,
            "sqrt" => GrowthModel::Sqrt,
            "identity" | "id" => GrowthModel::Identity,
            _ => {
                let alpha = text
                    .strip_prefix("pow(")
                    .and_then(|rest| rest.strip_suffix(')'))
                    .or_else(|| text.strip_prefix("pow:"))
                    .ok_or_else(bad)?;
                let alpha: f64 = alpha.trim().parse().map_err(|_| bad())?;
                if !(alpha > 0.0 && alpha.is_finite()) {
                    return Err(bad());
                }
                GrowthModel::Pow(alpha)
            }
        })
    }
}

/// Least `C` with `s(n) ≤ C·f(n) + C` on every sample `n ≥ 1`.
pub fn fit_bound(curve: &SCurve, model: GrowthModel) -> f64 {
    curve
        .samples()
        .skip(1)
        .map(|(n, s)| s as f64 / (model.eval(n as f64) + 1.0))
        .fold(0.0, f64::max)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoarseCheck {
    Pass,
    Witness(usize),
}

/// Checks `h(n) ≤ K·f(M·n)` for sampled `n ≥ N` (`h[n]`, `f[n]` index by
/// `n`). Only a finite-range witness search.
pub fn verify_coarse_leq(
    h: &[f64],
    f: &[f64],
    k: u64,
    m: u64,
    n_min: usize,
) -> Result<CoarseCheck> {
    let Some(max_n) = h.len().checked_sub(1) else {
        return Ok(CoarseCheck::Pass);
    };
    let needed = max_n * m as usize;
    if needed >= f.len() {
        return Err(Error::Range {
            needed,
            available: f.len(),
        });
    }
    let witness = (n_min..=max_n).find(|&n| h[n] > k as f64 * f[m as usize * n]);
    Ok(witness.map_or(CoarseCheck::Pass, CoarseCheck::Witness))
}

/// Breakpoints of a step function that is coarsely below the identity but
/// not above it: `n₀ = 0, n₁ = 1, n_{i+1} = n_i·2^{2i}`, stopping before
/// overflow.
pub fn example1_sequence() -> Vec<u64> {
    let mut seq = vec![0u64, 1];
    let mut i = 1u32;
    loop {
        let last = *seq.last().unwrap();
        match 1u64
            .checked_shl(2 * i)
            .and_then(|step| last.checked_mul(step))
        {
            Some(next) => seq.push(next),
            None => return seq,
        }
        i += 1;
    }
}

/// `f(n) = 2n_i` for `n_i ≤ n < n_{i+1}`.
pub fn example1_f(n: u64) -> u64 {
    let seq = example1_sequence();
    let i = seq.partition_point(|&x| x <= n) - 1;
    2 * seq[i]
}
