//! Base-`p` digit machinery: p-adic expansions, the three-family partition
//! of `{1, ..., p^s - 1}`, and the digit-product Hamming weight of the
//! binomial powers `(x^n + c)^N`.
//!
//! Everything here is pure integer arithmetic; the weight of
//! `(x^n + c)^N` depends only on `N` and `p`, never on `n` or `c`.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PadicError {
    #[error("width {width} cannot hold {value} in base {p}")]
    WidthTooSmall { value: u64, p: u64, width: usize },
    #[error("exponent {i} outside [1, {top}]")]
    OutOfRange { i: u64, top: u64 },
    #[error("parameter overflow computing {0}")]
    Overflow(&'static str),
}

/// Base-`p` digits of a nonnegative integer, little-endian.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PadicExpansion {
    pub p: u64,
    pub digits: Vec<u64>,
}

impl PadicExpansion {
    /// Reassembles the expanded integer.
    pub fn value(&self) -> u64 {
        self.digits
            .iter()
            .rev()
            .fold(0u64, |acc, &d| acc * self.p + d)
    }
}

/// Which segment of the exponent partition an `i` in `[1, p^s - 1]` falls
/// in. `Low` is `1 <= i <= p^{s-1}`; `Beta(b)` is
/// `b*p^{s-1} + 1 <= i <= (b+1)*p^{s-1}` for `1 <= b <= p-2`; `TauK(k, t)`
/// is `p^s - p^{s-k} + (t-1)*p^{s-k-1} + 1 <= i <= p^s - p^{s-k} + t*p^{s-k-1}`
/// for `1 <= k <= s-1`, `1 <= t <= p-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PartitionClass {
    Low,
    Beta { beta: u64 },
    TauK { k: u32, tau: u64 },
}

pub(crate) fn checked_pow(base: u64, exp: u32) -> Option<u64> {
    base.checked_pow(exp)
}

/// `p^s`, failing loudly on overflow.
pub fn prime_power(p: u64, s: u32) -> Result<u64, PadicError> {
    checked_pow(p, s).ok_or(PadicError::Overflow("p^s"))
}

/// Base-`p` digits of `value`. With `width` given, the digit vector is
/// padded (or rejected) to exactly that many digits; otherwise it is
/// minimal, so zero expands to no digits at all.
pub fn expansion(value: u64, p: u64, width: Option<usize>) -> Result<PadicExpansion, PadicError> {
    debug_assert!(p >= 2);
    let mut digits = Vec::new();
    let mut v = value;
    while v > 0 {
        digits.push(v % p);
        v /= p;
    }
    if let Some(w) = width {
        if digits.len() > w {
            return Err(PadicError::WidthTooSmall { value, p, width: w });
        }
        digits.resize(w, 0);
    }
    Ok(PadicExpansion { p, digits })
}

/// Hamming weight of `(x^n + c)^exp` for any `n >= 1` and nonzero `c`:
/// the product of `digit + 1` over the base-`p` digits of `exp`. The
/// zeroth power is the constant polynomial, weight 1.
pub fn weight_of_power(exp: u64, p: u64) -> u64 {
    let mut w = 1u64;
    let mut v = exp;
    while v > 0 {
        w *= v % p + 1;
        v /= p;
    }
    w
}

/// Locates `i` in the exponent partition of `{1, ..., p^s - 1}`.
///
/// For `s = 1` the `TauK` family is empty, and for `p = 2` the `Beta`
/// family is empty; both degenerate shapes are still total.
pub fn classify_exponent(i: u64, p: u64, s: u32) -> Result<PartitionClass, PadicError> {
    let ps = prime_power(p, s)?;
    if i == 0 || i >= ps {
        return Err(PadicError::OutOfRange { i, top: ps - 1 });
    }
    let ps1 = ps / p;
    if i <= ps1 {
        return Ok(PartitionClass::Low);
    }
    if i <= (p - 1) * ps1 {
        return Ok(PartitionClass::Beta {
            beta: (i - 1) / ps1,
        });
    }
    // (p-1)p^{s-1} < i <= p^s - 1: the remainder r = p^s - i has between
    // 1 and s-1 base-p digits, and k is s minus that digit count.
    let r = ps - i;
    let mut len = 0u32;
    let mut v = r;
    while v > 0 {
        len += 1;
        v /= p;
    }
    let k = s - len;
    let block = prime_power(p, s - k - 1)?;
    let offset = i - (ps - prime_power(p, s - k)?);
    let tau = (offset - 1) / block + 1;
    Ok(PartitionClass::TauK { k, tau })
}

/// Weight-bound implication for the Beta ranges: whenever
/// `m < p^s - beta*p^{s-1} - 1`, the weight of
/// `(x^n + c)^{m + beta*p^{s-1} + 1}` is at least `beta + 2`. Returns true
/// vacuously when the hypothesis fails, so grids can be swept wholesale.
pub fn beta_bound_holds(m: u64, beta: u64, p: u64, s: u32) -> Result<bool, PadicError> {
    debug_assert!((1..=p.saturating_sub(2)).contains(&beta));
    let ps = prime_power(p, s)?;
    let ps1 = ps / p;
    let limit = ps - beta * ps1 - 1;
    if m >= limit {
        return Ok(true);
    }
    Ok(weight_of_power(m + beta * ps1 + 1, p) >= beta + 2)
}

/// Weight-bound implication for the TauK ranges, same vacuous-truth
/// convention: whenever
/// `m < p^{s-k} - (tau-1)*p^{s-k-1} - 1`, the weight of the power at
/// `m + p^s - p^{s-k} + (tau-1)*p^{s-k-1} + 1` is at least `(tau+1)*p^k`.
pub fn tauk_bound_holds(m: u64, tau: u64, k: u32, p: u64, s: u32) -> Result<bool, PadicError> {
    debug_assert!((1..=p - 1).contains(&tau));
    debug_assert!(k >= 1 && k < s);
    let ps = prime_power(p, s)?;
    let psk = prime_power(p, s - k)?;
    let block = prime_power(p, s - k - 1)?;
    let limit = psk - (tau - 1) * block - 1;
    if m >= limit {
        return Ok(true);
    }
    let exp = m + ps - psk + (tau - 1) * block + 1;
    Ok(weight_of_power(exp, p) >= (tau + 1) * prime_power(p, k)?)
}

/// The inclusive `[lo, hi]` exponent range covered by a class; the
/// counterpart of [`classify_exponent`] used to check that the partition
/// tiles `[1, p^s - 1]`.
pub fn class_range(class: PartitionClass, p: u64, s: u32) -> Result<(u64, u64), PadicError> {
    let ps = prime_power(p, s)?;
    let ps1 = ps / p;
    Ok(match class {
        PartitionClass::Low => (1, ps1),
        PartitionClass::Beta { beta } => (beta * ps1 + 1, (beta + 1) * ps1),
        PartitionClass::TauK { k, tau } => {
            let psk = prime_power(p, s - k)?;
            let block = prime_power(p, s - k - 1)?;
            (ps - psk + (tau - 1) * block + 1, ps - psk + tau * block)
        }
    })
}

/// Every class of the partition for given `(p, s)`, in ascending range
/// order: `Low`, then the `Beta` family, then `TauK` by increasing `k`.
pub fn all_classes(p: u64, s: u32) -> Vec<PartitionClass> {
    let mut out = vec![PartitionClass::Low];
    for beta in 1..=p.saturating_sub(2) {
        out.push(PartitionClass::Beta { beta });
    }
    for k in 1..s {
        for tau in 1..=p - 1 {
            out.push(PartitionClass::TauK { k, tau });
        }
    }
    out
}
