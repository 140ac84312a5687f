use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PipelineParams {
    pub k: usize,
    pub t: usize,
    /// `max(h_raw, k)`.
    pub h: usize,
    #[serde(rename = "hRaw")]
    pub h_raw: usize,
    pub i: usize,
    pub j: usize,
}

impl PipelineParams {
    /// Whether `h` was raised to `k`.
    pub fn floored(&self) -> bool {
        self.h != self.h_raw
    }

    /// Good-pair threshold test: `count >= 2^(j-1) / (h-k+1)`.
    pub fn is_good(&self, count: usize) -> bool {
        (count as u128) * ((self.h - self.k + 1) as u128) >= 1u128 << (self.j - 1)
    }
}

/// `i = floor(log2((k-1)(2h-2k+1))) + 1`, `j = ceil(t/2 + log2(h-k+1))`
/// with `h = max(h_raw, k)`, computed in exact integer arithmetic.
pub fn pipeline_params(k: usize, t: usize, h_raw: usize) -> Result<PipelineParams> {
    if k < 2 {
        return Err(Error::Precondition(format!("parameters need k >= 2, got {k}")));
    }
    if t < 3 {
        return Err(Error::Precondition(format!("parameters need t >= 3, got {t}")));
    }
    let h = h_raw.max(k);
    let base = ((k - 1) * (2 * h - 2 * k + 1)) as u128;
    let i = base.ilog2() as usize + 1;
    // Smallest j with 2j >= t and 2^(2j - t) >= (h-k+1)^2.
    let x = (h - k + 1) as u128;
    let mut j = t.div_ceil(2);
    while 2 * j - t >= 127 || (1u128 << (2 * j - t)) < x * x {
        j += 1;
    }
    Ok(PipelineParams { k, t, h, h_raw, i, j })
}
