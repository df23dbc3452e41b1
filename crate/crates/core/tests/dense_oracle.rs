//! The loop-based transforms against dense periodized operator matrices.

#![allow(clippy::needless_range_loop)]

mod common;

use common::*;
use wavescale::dwt::{dwt1d, idwt1d, CoeffPair};
use wavescale::filters::{get_filter_bank, WaveletFamily};

const LENGTHS: [usize; 4] = [8, 16, 32, 64];

#[test]
fn analysis_matches_matrix() {
    let mut rng = rng(1);
    for family in WaveletFamily::ALL {
        let bank = get_filter_bank(family);
        for (i, n) in LENGTHS.iter().cycle().take(100).enumerate() {
            let a = analysis_matrix(&bank, *n);
            let x = random_vec(&mut rng, *n);
            let c = dwt1d(&x, &bank).unwrap();
            let expect = mat_vec(&a, &x);
            let got: Vec<f64> = c.approx.iter().chain(&c.detail).copied().collect();
            assert!(max_abs_diff(&got, &expect) <= 1e-10, "{family} signal {i}");
        }
    }
}

#[test]
fn synthesis_matches_matrix() {
    let mut rng = rng(2);
    for family in WaveletFamily::ALL {
        let bank = get_filter_bank(family);
        for (i, n) in LENGTHS.iter().cycle().take(100).enumerate() {
            let s = synthesis_matrix(&bank, *n);
            let c = random_vec(&mut rng, *n);
            let got = idwt1d(
                &CoeffPair {
                    approx: c[..n / 2].to_vec(),
                    detail: c[n / 2..].to_vec(),
                },
                &bank,
            )
            .unwrap();
            assert!(
                max_abs_diff(&got, &mat_vec(&s, &c)) <= 1e-10,
                "{family} signal {i}"
            );
        }
    }
}

#[test]
fn synthesis_inverts_analysis() {
    for family in WaveletFamily::ALL {
        let bank = get_filter_bank(family);
        for n in LENGTHS {
            let a = analysis_matrix(&bank, n);
            let s = synthesis_matrix(&bank, n);
            for (i, row) in s.iter().enumerate() {
                for j in 0..n {
                    let v: f64 = (0..n).map(|k| row[k] * a[k][j]).sum();
                    let id = if i == j { 1.0 } else { 0.0 };
                    assert!((v - id).abs() <= 1e-10, "{family} n={n} ({i},{j}) {v}");
                }
            }
        }
    }
}

#[test]
fn orthogonal_analysis_is_orthonormal() {
    for family in WaveletFamily::ALL.into_iter().filter(|f| f.is_orthogonal()) {
        let bank = get_filter_bank(family);
        for n in LENGTHS {
            let a = analysis_matrix(&bank, n);
            for i in 0..n {
                for j in 0..n {
                    let v: f64 = (0..n).map(|k| a[i][k] * a[j][k]).sum();
                    let id = if i == j { 1.0 } else { 0.0 };
                    assert!((v - id).abs() <= 1e-10, "{family} n={n} ({i},{j})");
                }
            }
        }
    }
}
