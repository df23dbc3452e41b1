//! Wavelet filter banks.
//!
//! Every supported family carries four embedded coefficient vectors: analysis
//! low/high-pass (`dec_lo`, `dec_hi`) and synthesis low/high-pass (`rec_lo`,
//! `rec_hi`). Tables are not trusted blindly; [`validate_bank`] runs a
//! perfect-reconstruction round trip plus the orthogonality identities.

mod tables;

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::dwt::{dwt1d, idwt1d};
use crate::error::{Error, Result};

/// Supported wavelet families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum WaveletFamily {
    #[default]
    Haar,
    Db2,
    Db4,
    Sym8,
    Coif3,
    Bior3_3,
    Bior4_4,
    Bior6_8,
    Rbio3_3,
    Dmey,
}

impl WaveletFamily {
    pub const ALL: [WaveletFamily; 10] = [
        WaveletFamily::Haar,
        WaveletFamily::Db2,
        WaveletFamily::Db4,
        WaveletFamily::Sym8,
        WaveletFamily::Coif3,
        WaveletFamily::Bior3_3,
        WaveletFamily::Bior4_4,
        WaveletFamily::Bior6_8,
        WaveletFamily::Rbio3_3,
        WaveletFamily::Dmey,
    ];

    pub fn name(self) -> &'static str {
        match self {
            WaveletFamily::Haar => "haar",
            WaveletFamily::Db2 => "db2",
            WaveletFamily::Db4 => "db4",
            WaveletFamily::Sym8 => "sym8",
            WaveletFamily::Coif3 => "coif3",
            WaveletFamily::Bior3_3 => "bior3.3",
            WaveletFamily::Bior4_4 => "bior4.4",
            WaveletFamily::Bior6_8 => "bior6.8",
            WaveletFamily::Rbio3_3 => "rbio3.3",
            WaveletFamily::Dmey => "dmey",
        }
    }

    pub fn is_orthogonal(self) -> bool {
        !matches!(
            self,
            WaveletFamily::Bior3_3
                | WaveletFamily::Bior4_4
                | WaveletFamily::Bior6_8
                | WaveletFamily::Rbio3_3
        )
    }

    /// Round-trip tolerance used for this family. The discrete Meyer filter
    /// is an FIR approximation and gets a looser bound.
    pub fn reconstruction_tolerance(self) -> f64 {
        match self {
            WaveletFamily::Dmey => 1e-6,
            _ => 1e-8,
        }
    }
}

impl fmt::Display for WaveletFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for WaveletFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        WaveletFamily::ALL
            .into_iter()
            .find(|family| family.name() == s)
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

/// Analysis and synthesis filters for one wavelet family.
#[derive(Debug, Clone, PartialEq)]
pub struct FilterBank {
    pub family: WaveletFamily,
    pub dec_lo: Vec<f64>,
    pub dec_hi: Vec<f64>,
    pub rec_lo: Vec<f64>,
    pub rec_hi: Vec<f64>,
    pub orthogonal: bool,
}

impl FilterBank {
    pub fn dec_len(&self) -> usize {
        self.dec_lo.len()
    }

    pub fn rec_len(&self) -> usize {
        self.rec_lo.len()
    }

    /// Quadrature-mirror high-pass built from this bank's low-pass filter.
    pub fn derive_highpass(&self) -> Result<Vec<f64>> {
        if !self.orthogonal {
            return Err(Error::NotOrthogonal(self.family.name()));
        }
        Ok(quadrature_mirror(&self.dec_lo))
    }
}

/// Returns the standard coefficient table for `family`.
pub fn get_filter_bank(family: WaveletFamily) -> FilterBank {
    use tables::*;

    let (dec_lo, dec_hi, rec_lo, rec_hi): (&[f64], &[f64], &[f64], &[f64]) = match family {
        WaveletFamily::Haar => (&HAAR_DEC_LO, &HAAR_DEC_HI, &HAAR_REC_LO, &HAAR_REC_HI),
        WaveletFamily::Db2 => (&DB2_DEC_LO, &DB2_DEC_HI, &DB2_REC_LO, &DB2_REC_HI),
        WaveletFamily::Db4 => (&DB4_DEC_LO, &DB4_DEC_HI, &DB4_REC_LO, &DB4_REC_HI),
        WaveletFamily::Sym8 => (&SYM8_DEC_LO, &SYM8_DEC_HI, &SYM8_REC_LO, &SYM8_REC_HI),
        WaveletFamily::Coif3 => (&COIF3_DEC_LO, &COIF3_DEC_HI, &COIF3_REC_LO, &COIF3_REC_HI),
        WaveletFamily::Bior3_3 => (
            &BIOR3_3_DEC_LO,
            &BIOR3_3_DEC_HI,
            &BIOR3_3_REC_LO,
            &BIOR3_3_REC_HI,
        ),
        WaveletFamily::Bior4_4 => (
            &BIOR4_4_DEC_LO,
            &BIOR4_4_DEC_HI,
            &BIOR4_4_REC_LO,
            &BIOR4_4_REC_HI,
        ),
        WaveletFamily::Bior6_8 => (
            &BIOR6_8_DEC_LO,
            &BIOR6_8_DEC_HI,
            &BIOR6_8_REC_LO,
            &BIOR6_8_REC_HI,
        ),
        WaveletFamily::Rbio3_3 => (
            &RBIO3_3_DEC_LO,
            &RBIO3_3_DEC_HI,
            &RBIO3_3_REC_LO,
            &RBIO3_3_REC_HI,
        ),
        WaveletFamily::Dmey => (&DMEY_DEC_LO, &DMEY_DEC_HI, &DMEY_REC_LO, &DMEY_REC_HI),
    };
    FilterBank {
        family,
        dec_lo: dec_lo.to_vec(),
        dec_hi: dec_hi.to_vec(),
        rec_lo: rec_lo.to_vec(),
        rec_hi: rec_hi.to_vec(),
        orthogonal: family.is_orthogonal(),
    }
}

/// Alternating flip: `h[n] = (-1)^n * g[L-1-n]`.
pub fn quadrature_mirror(lowpass: &[f64]) -> Vec<f64> {
    let len = lowpass.len();
    (0..len)
        .map(|n| {
            let v = lowpass[len - 1 - n];
            if n % 2 == 0 {
                v
            } else {
                -v
            }
        })
        .collect()
}

/// True when `a == b` or `a == -b` elementwise within `tol`.
pub fn equal_up_to_sign(a: &[f64], b: &[f64], tol: f64) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let same = a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol);
    let flipped = a.iter().zip(b).all(|(x, y)| (x + y).abs() <= tol);
    same || flipped
}

#[derive(Debug, Clone, PartialEq)]
pub struct CheckResult {
    pub passed: bool,
    pub detail: String,
}

impl CheckResult {
    fn new(passed: bool, detail: String) -> Self {
        CheckResult { passed, detail }
    }
}

/// Outcome of [`validate_bank`]. Failures are recorded, never raised.
#[derive(Debug, Clone, PartialEq)]
pub struct ValidationReport {
    pub family: WaveletFamily,
    pub reconstruction: CheckResult,
    pub max_reconstruction_error: f64,
    /// `None` for biorthogonal banks.
    pub orthogonal_identities: Option<CheckResult>,
    pub coefficient_counts: CheckResult,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.reconstruction.passed
            && self.coefficient_counts.passed
            && self
                .orthogonal_identities
                .as_ref()
                .is_none_or(|check| check.passed)
    }
}

const VALIDATION_SIGNALS: usize = 64;
const VALIDATION_LENGTH: usize = 16;
const IDENTITY_TOLERANCE: f64 = 1e-10;

/// Runs the perfect-reconstruction, orthogonality and coefficient-count
/// checks on `bank`.
pub fn validate_bank(bank: &FilterBank) -> ValidationReport {
    let counts_ok = !bank.dec_lo.is_empty()
        && !bank.rec_lo.is_empty()
        && bank.dec_lo.len() == bank.dec_hi.len()
        && bank.rec_lo.len() == bank.rec_hi.len()
        && bank.dec_lo.len().is_multiple_of(2)
        && bank.rec_lo.len().is_multiple_of(2);
    let coefficient_counts = CheckResult::new(
        counts_ok,
        format!(
            "dec {}/{}, rec {}/{}",
            bank.dec_lo.len(),
            bank.dec_hi.len(),
            bank.rec_lo.len(),
            bank.rec_hi.len()
        ),
    );

    let tolerance = bank.family.reconstruction_tolerance();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_f11e);
    let mut max_err = 0.0f64;
    let mut failure = None;
    if counts_ok {
        for _ in 0..VALIDATION_SIGNALS {
            let x: Vec<f64> = (0..VALIDATION_LENGTH)
                .map(|_| rng.gen_range(-1.0..1.0))
                .collect();
            let round_trip = dwt1d(&x, bank).and_then(|pair| idwt1d(&pair, bank));
            match round_trip {
                Ok(y) => {
                    let err = max_abs_diff(&x, &y);
                    max_err = max_err.max(if err.is_nan() { f64::INFINITY } else { err });
                }
                Err(e) => {
                    failure = Some(e.to_string());
                    break;
                }
            }
        }
    } else {
        failure = Some("inconsistent coefficient counts".to_string());
    }
    let reconstruction = match failure {
        Some(reason) => {
            max_err = f64::INFINITY;
            CheckResult::new(false, reason)
        }
        None => CheckResult::new(
            max_err <= tolerance,
            format!("max abs error {max_err:.3e} (tolerance {tolerance:.0e})"),
        ),
    };

    let orthogonal_identities = bank.orthogonal.then(|| {
        let sum_lo: f64 = bank.dec_lo.iter().sum();
        let sum_hi: f64 = bank.dec_hi.iter().sum();
        let energy: f64 = bank.dec_lo.iter().map(|v| v * v).sum();
        let dev_lo = (sum_lo - std::f64::consts::SQRT_2).abs();
        let dev_hi = sum_hi.abs();
        let dev_energy = (energy - 1.0).abs();
        CheckResult::new(
            dev_lo <= IDENTITY_TOLERANCE
                && dev_hi <= IDENTITY_TOLERANCE
                && dev_energy <= IDENTITY_TOLERANCE,
            format!(
                "|sum g - sqrt2| = {dev_lo:.1e}, |sum h| = {dev_hi:.1e}, |sum g^2 - 1| = {dev_energy:.1e}"
            ),
        )
    });

    ValidationReport {
        family: bank.family,
        reconstruction,
        max_reconstruction_error: max_err,
        orthogonal_identities,
        coefficient_counts,
    }
}

/// Text rendering used by the `filters` subcommand: one filter per line,
/// 17 significant digits per coefficient.
pub fn format_bank(bank: &FilterBank) -> String {
    let mut out = String::new();
    for (label, coeffs) in [
        ("dec_lo", &bank.dec_lo),
        ("dec_hi", &bank.dec_hi),
        ("rec_lo", &bank.rec_lo),
        ("rec_hi", &bank.rec_hi),
    ] {
        out.push_str(label);
        for c in coeffs {
            out.push(' ');
            out.push_str(&format!("{c:.16e}"));
        }
        out.push('\n');
    }
    out
}

fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_1_SQRT_2;

    #[test]
    fn haar_is_the_orthonormal_pair() {
        let bank = get_filter_bank(WaveletFamily::Haar);
        assert_eq!(bank.dec_lo.len(), 2);
        for v in &bank.dec_lo {
            assert!((v - FRAC_1_SQRT_2).abs() < 1e-15);
        }
        for v in &bank.dec_hi {
            assert!((v.abs() - FRAC_1_SQRT_2).abs() < 1e-15);
        }
        assert!(bank.dec_hi[0] * bank.dec_hi[1] < 0.0);
    }

    #[test]
    fn table_lengths() {
        let expect = [
            (WaveletFamily::Haar, 2),
            (WaveletFamily::Db2, 4),
            (WaveletFamily::Db4, 8),
            (WaveletFamily::Sym8, 16),
            (WaveletFamily::Coif3, 18),
            (WaveletFamily::Bior3_3, 8),
            (WaveletFamily::Bior4_4, 10),
            (WaveletFamily::Bior6_8, 18),
            (WaveletFamily::Rbio3_3, 8),
            (WaveletFamily::Dmey, 62),
        ];
        for (family, len) in expect {
            assert_eq!(get_filter_bank(family).dec_len(), len, "{family}");
        }
    }

    #[test]
    fn parse_round_trip_and_unknown() {
        for family in WaveletFamily::ALL {
            assert_eq!(family.name().parse::<WaveletFamily>().unwrap(), family);
        }
        let err = "db3".parse::<WaveletFamily>().unwrap_err();
        assert_eq!(err.code(), "UnknownFamily");
    }

    #[test]
    fn qmf_of_haar() {
        let h = quadrature_mirror(&[FRAC_1_SQRT_2, FRAC_1_SQRT_2]);
        assert!(equal_up_to_sign(
            &h,
            &[FRAC_1_SQRT_2, -FRAC_1_SQRT_2],
            1e-15
        ));
    }

    #[test]
    fn derive_highpass_matches_tables() {
        for family in WaveletFamily::ALL.into_iter().filter(|f| f.is_orthogonal()) {
            let bank = get_filter_bank(family);
            let h = bank.derive_highpass().unwrap();
            assert!(equal_up_to_sign(&h, &bank.dec_hi, 1e-12), "{family}");
        }
    }

    #[test]
    fn derive_highpass_rejects_biorthogonal() {
        let bank = get_filter_bank(WaveletFamily::Bior4_4);
        assert_eq!(bank.derive_highpass().unwrap_err().code(), "NotOrthogonal");
    }

    #[test]
    fn every_bank_validates() {
        for family in WaveletFamily::ALL {
            let report = validate_bank(&get_filter_bank(family));
            assert!(report.passed(), "{family}: {report:?}");
            assert_eq!(
                report.orthogonal_identities.is_some(),
                family.is_orthogonal()
            );
        }
    }

    #[test]
    fn zeroed_highpass_fails_reconstruction() {
        let mut bank = get_filter_bank(WaveletFamily::Haar);
        bank.dec_hi.iter_mut().for_each(|v| *v = 0.0);
        let report = validate_bank(&bank);
        assert!(!report.reconstruction.passed);
        assert!(!report.passed());
    }

    #[test]
    fn mismatched_counts_are_reported() {
        let mut bank = get_filter_bank(WaveletFamily::Db2);
        bank.dec_hi.pop();
        let report = validate_bank(&bank);
        assert!(!report.coefficient_counts.passed);
        assert!(!report.passed());
    }

    #[test]
    fn dmey_round_trip_within_loose_bound() {
        let report = validate_bank(&get_filter_bank(WaveletFamily::Dmey));
        assert!(report.max_reconstruction_error <= 1e-6);
    }

    #[test]
    fn format_has_four_lines_of_17_digits() {
        let text = format_bank(&get_filter_bank(WaveletFamily::Haar));
        let lines: Vec<_> = text.lines().collect();
        assert_eq!(lines.len(), 4);
        assert_eq!(
            lines[0],
            "dec_lo 7.0710678118654757e-1 7.0710678118654757e-1"
        );
    }
}
