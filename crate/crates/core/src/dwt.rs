//! One-dimensional periodized analysis and synthesis.
//!
//! The boundary is always treated as circular, so a length-`N` signal yields
//! exactly `N / 2` approximation and `N / 2` detail coefficients. With a
//! filter of length `L`, analysis computes
//!
//! ```text
//! cA[k] = sum_j g[j] * x[(2k + L/2 - j) mod N]
//! ```
//!
//! and synthesis adds `g'[j] * cA[k]` at position `(2k + j + 1 - L/2) mod N`.
//! This phase makes the square periodized analysis and synthesis matrices
//! exact inverses of each other for every perfect-reconstruction bank.

use crate::error::{Error, Result};
use crate::filters::FilterBank;

/// Approximation and detail coefficients from a single analysis step.
#[derive(Debug, Clone, PartialEq)]
pub struct CoeffPair {
    pub approx: Vec<f64>,
    pub detail: Vec<f64>,
}

/// Output of [`dwt1d_multilevel`]: the coarsest approximation plus one
/// detail vector per level, finest first.
#[derive(Debug, Clone, PartialEq)]
pub struct MultiLevel {
    pub approx: Vec<f64>,
    pub details: Vec<Vec<f64>>,
}

pub fn dwt1d(x: &[f64], bank: &FilterBank) -> Result<CoeffPair> {
    check_signal_len(x.len())?;
    let half = x.len() / 2;
    let mut approx = vec![0.0; half];
    let mut detail = vec![0.0; half];
    analyze_into(x, &bank.dec_lo, &bank.dec_hi, &mut approx, &mut detail);
    Ok(CoeffPair { approx, detail })
}

pub fn idwt1d(coeffs: &CoeffPair, bank: &FilterBank) -> Result<Vec<f64>> {
    let (a, d) = (&coeffs.approx, &coeffs.detail);
    if a.len() != d.len() {
        return Err(Error::LengthMismatch {
            approx: a.len(),
            detail: d.len(),
        });
    }
    if a.is_empty() {
        return Err(Error::TooShort(0));
    }
    let mut out = vec![0.0; 2 * a.len()];
    synthesize_into(a, d, &bank.rec_lo, &bank.rec_hi, &mut out);
    Ok(out)
}

/// Repeatedly analyzes the running approximation `levels` times.
pub fn dwt1d_multilevel(x: &[f64], bank: &FilterBank, levels: u32) -> Result<MultiLevel> {
    if levels == 0 {
        return Ok(MultiLevel {
            approx: x.to_vec(),
            details: Vec::new(),
        });
    }
    check_divisible(x.len(), levels)?;
    let mut approx = x.to_vec();
    let mut details = Vec::with_capacity(levels as usize);
    for _ in 0..levels {
        let pair = dwt1d(&approx, bank)?;
        approx = pair.approx;
        details.push(pair.detail);
    }
    Ok(MultiLevel { approx, details })
}

/// Inverse of [`dwt1d_multilevel`].
pub fn idwt1d_multilevel(coeffs: &MultiLevel, bank: &FilterBank) -> Result<Vec<f64>> {
    let mut approx = coeffs.approx.clone();
    for detail in coeffs.details.iter().rev() {
        approx = idwt1d(
            &CoeffPair {
                approx,
                detail: detail.clone(),
            },
            bank,
        )?;
    }
    Ok(approx)
}

pub(crate) fn check_signal_len(n: usize) -> Result<()> {
    if n < 2 {
        Err(Error::TooShort(n))
    } else if !n.is_multiple_of(2) {
        Err(Error::OddLength(n))
    } else {
        Ok(())
    }
}

pub(crate) fn check_divisible(len: usize, levels: u32) -> Result<()> {
    let factor = 1usize.checked_shl(levels).filter(|f| *f != 0);
    match factor {
        Some(f) if len > 0 && len.is_multiple_of(f) => Ok(()),
        _ => Err(Error::NotDivisible { len, levels }),
    }
}

/// Periodized analysis of one fiber. `x.len()` must be even and both outputs
/// must have length `x.len() / 2`.
pub(crate) fn analyze_into(
    x: &[f64],
    lo: &[f64],
    hi: &[f64],
    out_lo: &mut [f64],
    out_hi: &mut [f64],
) {
    let n = x.len();
    let taps = lo.len();
    let offset = taps / 2;
    for k in 0..n / 2 {
        let base = 2 * k + offset;
        let (mut acc_lo, mut acc_hi) = (0.0, 0.0);
        if base >= taps - 1 && base < n {
            // Interior: the whole window lies inside the signal.
            let window = &x[base + 1 - taps..=base];
            for ((&g, &h), &v) in lo.iter().zip(hi).zip(window.iter().rev()) {
                acc_lo += g * v;
                acc_hi += h * v;
            }
        } else {
            for j in 0..taps {
                let idx = (base as isize - j as isize).rem_euclid(n as isize) as usize;
                acc_lo += lo[j] * x[idx];
                acc_hi += hi[j] * x[idx];
            }
        }
        out_lo[k] = acc_lo;
        out_hi[k] = acc_hi;
    }
}

/// Periodized synthesis of one fiber, overwriting `out` (length
/// `2 * approx.len()`).
pub(crate) fn synthesize_into(
    approx: &[f64],
    detail: &[f64],
    lo: &[f64],
    hi: &[f64],
    out: &mut [f64],
) {
    let n = out.len();
    let taps = lo.len();
    let offset = taps / 2;
    out.fill(0.0);
    for (k, (&a, &d)) in approx.iter().zip(detail).enumerate() {
        let start = 2 * k as isize + 1 - offset as isize;
        if start >= 0 && start as usize + taps <= n {
            let window = &mut out[start as usize..start as usize + taps];
            for ((slot, &g), &h) in window.iter_mut().zip(lo).zip(hi) {
                *slot += g * a + h * d;
            }
        } else {
            for j in 0..taps {
                let idx = (start + j as isize).rem_euclid(n as isize) as usize;
                out[idx] += lo[j] * a + hi[j] * d;
            }
        }
    }
}
