//! Acceptance gate: one PASS/FAIL line per criterion, non-zero exit on any
//! failure. Runs without the libtest harness so the lines are never captured.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::panic::{self, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use common::*;
use wavescale::consolidate::{consolidate, deconsolidate, Arch, ConsolidatedModel, GroupPolicy};
use wavescale::container;
use wavescale::dwt::{dwt1d, idwt1d, CoeffPair};
use wavescale::filters::{equal_up_to_sign, get_filter_bank, WaveletFamily};
use wavescale::metrics::{flops_saving_ratio, MetricDirection, TrainingCurve};
use wavescale::nd::{dwt3d, idwt3d, LevelSpec};
use wavescale::transfer::{l2s_transfer, s2l_transfer, transfer, TransferOptions};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn dims_from(rng: &mut impl rand::Rng) -> [usize; 3] {
    std::array::from_fn(|_| [4, 8, 16][rng.gen_range(0..3)])
}

fn perfect_reconstruction() -> Outcome {
    let start = Instant::now();
    let mut rng = rng(100);
    let mut worst = 0.0f64;
    for family in WaveletFamily::ALL {
        let bank = get_filter_bank(family);
        let tol = if family == WaveletFamily::Dmey {
            1e-6
        } else {
            1e-8
        };
        for i in 0..20 {
            let dims = dims_from(&mut rng);
            let t = random_tensor(&mut rng, dims);
            let back = idwt3d(&dwt3d(&t, &bank).unwrap(), &bank).unwrap();
            let err = back.max_abs_diff(&t);
            ensure(err <= tol, || {
                format!("{family} tensor {i}: error {err:e} > {tol:e}")
            })?;
            worst = worst.max(err);
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(10), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!("200 tensors, max error {worst:.2e}, {elapsed:.2?}"))
}

fn oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let mut rng = rng(101);
    let mut worst = 0.0f64;
    for family in WaveletFamily::ALL {
        let bank = get_filter_bank(family);
        for (i, n) in [8usize, 16, 32, 64].iter().cycle().take(100).enumerate() {
            let (a, s) = (analysis_matrix(&bank, *n), synthesis_matrix(&bank, *n));
            let x = random_vec(&mut rng, *n);
            let c = dwt1d(&x, &bank).unwrap();
            let coeffs: Vec<f64> = c.approx.iter().chain(&c.detail).copied().collect();
            let e_a = max_abs_diff(&coeffs, &mat_vec(&a, &x));
            let y = random_vec(&mut rng, *n);
            let pair = CoeffPair {
                approx: y[..n / 2].to_vec(),
                detail: y[n / 2..].to_vec(),
            };
            let e_s = max_abs_diff(&idwt1d(&pair, &bank).unwrap(), &mat_vec(&s, &y));
            let err = e_a.max(e_s);
            ensure(err <= 1e-10, || format!("{family} signal {i}: {err:e}"))?;
            worst = worst.max(err);
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(30), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!(
        "1000 signals, max error {worst:.2e}, {elapsed:.2?}"
    ))
}

fn filter_identities() -> Outcome {
    let mut count = 0;
    for family in WaveletFamily::ALL.into_iter().filter(|f| f.is_orthogonal()) {
        let bank = get_filter_bank(family);
        let g = &bank.dec_lo;
        let sum_g: f64 = g.iter().sum();
        let sum_h: f64 = bank.dec_hi.iter().sum();
        let energy: f64 = g.iter().map(|v| v * v).sum();
        ensure((sum_g - std::f64::consts::SQRT_2).abs() <= 1e-10, || {
            format!("{family}: sum g = {sum_g}")
        })?;
        ensure(sum_h.abs() <= 1e-10, || {
            format!("{family}: sum h = {sum_h}")
        })?;
        ensure((energy - 1.0).abs() <= 1e-10, || {
            format!("{family}: sum g^2 = {energy}")
        })?;
        let derived = bank.derive_highpass().map_err(|e| e.to_string())?;
        ensure(equal_up_to_sign(&derived, &bank.dec_hi, 1e-10), || {
            format!("{family}: derived high-pass differs from table")
        })?;
        count += 1;
    }
    Ok(format!("{count} orthogonal families"))
}

/// Transfers a full-size synthetic checkpoint and compares its layout with
/// the layout expected for the target architecture.
fn shape_case(preset: &str, src: Arch, tgt: Arch, spec: Option<[u32; 3]>) -> Result<(), String> {
    let policy = GroupPolicy::preset(preset).unwrap();
    let ckpt = synthetic_checkpoint(&policy, &src, 1, 7);
    let (out, report) =
        transfer(&ckpt, &policy, &tgt, &TransferOptions::default()).map_err(|e| e.to_string())?;
    drop(ckpt);
    ensure(layout(&out) == synthetic_layout(&policy, &tgt, 1), || {
        format!("{preset} {src} -> {tgt}: layout differs")
    })?;
    ensure(report.src_arch == src && report.tgt_arch == tgt, || {
        format!(
            "{preset}: report arch {} -> {}",
            report.src_arch, report.tgt_arch
        )
    })?;
    if let Some(levels) = spec {
        let plan = report.plans.iter().find(|p| p.group == "W_q").unwrap();
        ensure(plan.spec == LevelSpec::new(levels), || {
            format!("{preset}: W_q levels {:?}", plan.spec.levels)
        })?;
    }
    Ok(())
}

fn shape_contracts() -> Outcome {
    let a = |l, h| Arch::new(l, h, None);
    let cases = [
        ("bert-like", a(12, 768), a(6, 384), None),
        ("bert-like", a(6, 384), a(12, 768), None),
        ("deit-like", a(12, 768), a(6, 384), None),
        ("deit-like", a(6, 384), a(12, 768), None),
        ("deit-like", a(12, 768), a(3, 192), Some([2, 2, 2])),
        ("deit-like", a(3, 192), a(12, 768), Some([2, 2, 2])),
        ("gpt-like", a(6, 384), a(12, 768), None),
        ("gpt-like", a(12, 768), a(6, 384), None),
    ];
    for (preset, src, tgt, spec) in cases {
        shape_case(preset, src, tgt, spec)?;
    }
    Ok(format!("{} full-size transfers", cases.len()))
}

fn toy_model(preset: &str, arch: Arch, seed: u64) -> ConsolidatedModel {
    let policy = GroupPolicy::preset(preset).unwrap();
    consolidate(&synthetic_checkpoint(&policy, &arch, 64, seed), &policy).unwrap()
}

fn module_error(a: &ConsolidatedModel, b: &ConsolidatedModel) -> f64 {
    assert_eq!(a.modules.len(), b.modules.len());
    a.modules
        .iter()
        .map(|(g, m)| m.tensor.max_abs_diff(&b.modules[g].tensor))
        .fold(0.0, f64::max)
}

fn projection_round_trip() -> Outcome {
    let cases = [
        ("bert-like", 2, 8, WaveletFamily::Haar),
        ("bert-like", 4, 16, WaveletFamily::Db2),
        ("gpt-like", 2, 8, WaveletFamily::Sym8),
        ("deit-like", 4, 8, WaveletFamily::Bior4_4),
        ("deit-like", 2, 16, WaveletFamily::Coif3),
    ];
    let (mut worst_rt, mut worst_idem) = (0.0f64, 0.0f64);
    for (i, (preset, layers, hidden, family)) in cases.into_iter().enumerate() {
        let opts = TransferOptions {
            family,
            ..Default::default()
        };
        let small = Arch::new(layers, hidden, None);
        let big = Arch::new(2 * layers, 2 * hidden, None);
        let fail = |e: wavescale::Error| format!("{preset} {family}: {e}");

        let model = toy_model(preset, small, i as u64);
        let grown = s2l_transfer(&model, &big, &opts).map_err(fail)?;
        let back = l2s_transfer(&grown, &small, &opts).map_err(fail)?;
        let err = module_error(&back, &model);
        ensure(err <= 1e-8, || {
            format!("{preset} {family}: round trip error {err:e}")
        })?;
        worst_rt = worst_rt.max(err);

        let large = toy_model(preset, big, 100 + i as u64);
        let project =
            |m: &ConsolidatedModel| s2l_transfer(&l2s_transfer(m, &small, &opts)?, &big, &opts);
        let once = project(&large).map_err(fail)?;
        let twice = project(&once).map_err(fail)?;
        let err = module_error(&once, &twice);
        ensure(err <= 1e-8, || {
            format!("{preset} {family}: idempotence error {err:e}")
        })?;
        worst_idem = worst_idem.max(err);
    }
    Ok(format!(
        "5 toy models, round trip {worst_rt:.2e}, idempotence {worst_idem:.2e}"
    ))
}

fn determinism() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let policy = GroupPolicy::preset("bert-like").unwrap();
    let src = dir.path().join("src.wgt");
    container::write_file(
        &synthetic_checkpoint(&policy, &Arch::new(4, 16, None), 64, 3),
        &src,
    )
    .map_err(|e| e.to_string())?;
    let run = |out: &str, padding: &str, layers: &str, hidden: &str| -> Result<Vec<u8>, String> {
        let path = dir.path().join(out);
        let status = Command::new(env!("CARGO_BIN_EXE_wavescale"))
            .args(["transfer", "--policy", "bert-like", "--seed", "7"])
            .args([
                "--padding",
                padding,
                "--target-layers",
                layers,
                "--target-hidden",
                hidden,
            ])
            .arg("--src")
            .arg(&src)
            .arg("--out")
            .arg(&path)
            .output()
            .map_err(|e| e.to_string())?;
        ensure(status.status.success(), || {
            String::from_utf8_lossy(&status.stderr).into_owned()
        })?;
        std::fs::read(path).map_err(|e| e.to_string())
    };
    for (padding, layers, hidden) in [
        ("gaussian", "8", "32"),
        ("uniform", "8", "32"),
        ("zero", "2", "8"),
    ] {
        let a = run("a.wgt", padding, layers, hidden)?;
        let b = run("b.wgt", padding, layers, hidden)?;
        ensure(a == b, || format!("{padding} outputs differ between runs"))?;
    }

    let base = Arch::new(12, 768, None);
    let ckpt = synthetic_checkpoint(&policy, &base, 1, 11);
    let model = consolidate(&ckpt, &policy).map_err(|e| e.to_string())?;
    let back = deconsolidate(&model, &policy).map_err(|e| e.to_string())?;
    ensure(back.bit_eq(&ckpt), || {
        "BERT-B consolidate round trip is not bit-exact".into()
    })?;
    Ok("3 repeated CLI transfers identical, BERT-B consolidate round trip bit-exact".into())
}

fn energy_conservation() -> Outcome {
    let mut rng = rng(102);
    let families: Vec<_> = WaveletFamily::ALL
        .into_iter()
        .filter(|f| f.is_orthogonal())
        .collect();
    let mut worst = 0.0f64;
    for i in 0..50 {
        let family = families[i % families.len()];
        let dims = dims_from(&mut rng);
        let t = random_tensor(&mut rng, dims);
        let e = t.norm_sq();
        let bands = dwt3d(&t, &get_filter_bank(family)).unwrap();
        let rel = (bands.norm_sq() - e).abs() / e;
        ensure(rel <= 1e-8, || {
            format!("{family} tensor {i}: relative error {rel:e}")
        })?;
        worst = worst.max(rel);
    }
    Ok(format!("50 tensors, max relative error {worst:.2e}"))
}

fn container_fuzz() -> Outcome {
    let streams = fuzz_streams(10_000, 103);
    let (valid, rejected) =
        run_fuzz(&streams).map_err(|i| format!("stream {i} crashed or failed to round trip"))?;
    Ok(format!(
        "10000 streams, {valid} valid, {rejected} structured errors"
    ))
}

fn metric_correctness() -> Outcome {
    let lower = MetricDirection::LowerIsBetter;
    let curve = |p: Vec<(f64, f64)>, d| TrainingCurve::new(p, d).map_err(|e| e.to_string());
    let scratch = curve(
        vec![(0.0, 8.0), (100.0, 6.0), (300.0, 3.0), (600.0, 1.0)],
        lower,
    )?;
    let method = curve(vec![(0.0, 5.0), (50.0, 4.5), (150.0, 2.0)], lower)?;
    let cases = [
        (scratch.first_crossing(4.0), 100.0 + 2.0 / 3.0 * 200.0),
        (method.first_crossing(4.0), 70.0),
        (scratch.first_crossing(6.0), 100.0),
        (
            flops_saving_ratio(&scratch, &method, 4.0),
            1.0 - 70.0 / (100.0 + 2.0 / 3.0 * 200.0),
        ),
        (flops_saving_ratio(&scratch, &scratch, 2.0), 0.0),
        (
            curve(vec![(0.0, 10.0), (100.0, 2.0)], lower)?.first_crossing(6.0),
            50.0,
        ),
    ];
    let count = cases.len() + 1;
    for (i, (got, want)) in cases.into_iter().enumerate() {
        let got = got.map_err(|e| format!("case {i}: {e}"))?;
        ensure((got - want).abs() <= 1e-12, || {
            format!("case {i}: {got} vs {want}")
        })?;
    }
    let unreachable = curve(vec![(0.0, 10.0), (100.0, 8.0)], lower)?.first_crossing(2.0);
    ensure(
        unreachable.is_err_and(|e| e.code() == "TargetNotReached"),
        || "unreachable target not reported".into(),
    )?;
    Ok(format!("{count} hand-computed values"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("perfect_reconstruction", perfect_reconstruction),
        ("oracle_equivalence", oracle_equivalence),
        ("filter_identities", filter_identities),
        ("shape_contracts", shape_contracts),
        ("projection_round_trip", projection_round_trip),
        ("determinism", determinism),
        ("energy_conservation", energy_conservation),
        ("container_fuzz", container_fuzz),
        ("metric_correctness", metric_correctness),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let outcome = panic::catch_unwind(AssertUnwindSafe(check))
            .unwrap_or_else(|_| Err("panicked".to_string()));
        match outcome {
            Ok(detail) => println!("PASS {name}: {detail}"),
            Err(reason) => {
                failed += 1;
                println!("FAIL {name}: {reason}");
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
