//! Checked integer helpers shared by the Hilbert and Segre modules.
//!
//! Everything here is exact 64-bit arithmetic; overflow is an error,
//! never a wraparound.

use crate::error::{Error, Result};

/// Binomial coefficient with overflow checking. Returns 0 for k < 0 or
/// k > n, matching the combinatorial convention. Intermediates run in
/// i128 so any value that fits in i64 comes out exact.
pub fn binomial(n: i64, k: i64) -> Result<i64> {
    if k < 0 || k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for i in 0..k as i128 {
        acc = acc
            .checked_mul(n as i128 - i)
            .ok_or(Error::ArithmeticOverflow("binomial"))?;
        acc /= i + 1;
    }
    i64::try_from(acc).map_err(|_| Error::ArithmeticOverflow("binomial"))
}

/// `base^exp` with overflow checking.
pub fn checked_pow(base: i64, exp: u32) -> Result<i64> {
    base.checked_pow(exp)
        .ok_or(Error::ArithmeticOverflow("power"))
}
