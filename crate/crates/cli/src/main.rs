use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use wavescale::checkpoint::Checkpoint;
use wavescale::consolidate::{consolidate, Arch, GroupPolicy};
use wavescale::container;
use wavescale::filters::{format_bank, get_filter_bank, validate_bank, WaveletFamily};
use wavescale::metrics::{flops_saving_ratio, MetricDirection, TrainingCurve};
use wavescale::nd::round_trip_error;
use wavescale::tensor::Tensor3;
use wavescale::transfer::{transfer, DetailPadding, PaddingStrategy, TransferOptions};
use wavescale::Error;

#[derive(Parser, Debug)]
#[command(name = "wavescale", version)]
#[command(about = "Resize transformer checkpoints with multi-level wavelet transforms")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Shrink or grow a checkpoint to a target architecture
    Transfer {
        #[arg(long)]
        src: PathBuf,
        /// Policy file, or the name of a built-in preset
        #[arg(long)]
        policy: String,
        #[arg(long)]
        target_layers: usize,
        #[arg(long)]
        target_hidden: usize,
        /// Defaults to 4 x target hidden
        #[arg(long)]
        target_ffn: Option<usize>,
        #[arg(long, default_value = "haar")]
        wavelet: String,
        #[arg(long, default_value = "zero")]
        padding: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1.0)]
        gain: f64,
        #[arg(long)]
        out: PathBuf,
    },
    /// List tensors, and with a policy the group of each and the architecture
    Inspect {
        #[arg(long)]
        src: PathBuf,
        #[arg(long)]
        policy: Option<String>,
    },
    /// Check one-level analysis/synthesis round trips on every module
    Verify {
        #[arg(long)]
        src: PathBuf,
        #[arg(long, default_value = "haar")]
        wavelet: String,
        /// Verify consolidated modules instead of individual tensors
        #[arg(long)]
        policy: Option<String>,
    },
    /// Print filter coefficients
    Filters {
        /// One family; all families when omitted
        #[arg(long)]
        family: Option<String>,
        /// Also run the perfect-reconstruction and orthogonality checks
        #[arg(long)]
        check: bool,
    },
    /// FLOPs saving ratio of a method run against a scratch run
    Flops {
        #[arg(long)]
        scratch: PathBuf,
        #[arg(long)]
        method: PathBuf,
        #[arg(long)]
        target: f64,
        /// `lower` for losses, `higher` for accuracies
        #[arg(long, default_value = "lower")]
        direction: String,
    },
}

/// Failure reported on stderr as `error: <code>: <reason>`.
#[derive(Debug)]
enum Failure {
    Lib(Error),
    Check { code: &'static str, reason: String },
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Lib(Error::Io(e))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Lib(e)) => {
            eprintln!("error: {}", single_line(&e.to_string()));
            ExitCode::from(1)
        }
        Err(Failure::Check { code, reason }) => {
            eprintln!("error: {code}: {}", single_line(&reason));
            ExitCode::from(1)
        }
    }
}

fn single_line(s: &str) -> String {
    s.split_whitespace().collect::<Vec<_>>().join(" ")
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Transfer {
            src,
            policy,
            target_layers,
            target_hidden,
            target_ffn,
            wavelet,
            padding,
            seed,
            gain,
            out,
        } => {
            let opts = TransferOptions {
                family: wavelet.parse()?,
                padding: DetailPadding {
                    strategy: padding.parse::<PaddingStrategy>()?,
                    seed,
                },
                gain,
            };
            let policy = GroupPolicy::load(&policy)?;
            let ckpt = container::read_file(&src)?;
            let tgt = Arch::new(target_layers, target_hidden, target_ffn);
            let (result, report) = transfer(&ckpt, &policy, &tgt, &opts)?;
            container::write_file(&result, &out)?;

            let mut err = std::io::stderr().lock();
            writeln!(
                err,
                "{} -> {} ({}, {}, {} padding)",
                report.src_arch, report.tgt_arch, report.direction, opts.family, padding
            )?;
            writeln!(
                err,
                "{:<16} {:>16} {:>8} {:>16} {:<9}",
                "group", "src", "levels", "tgt", "direction"
            )?;
            for plan in &report.plans {
                let l = plan.spec.levels;
                writeln!(
                    err,
                    "{:<16} {:>16} {:>8} {:>16} {:<9}",
                    plan.group,
                    dims_str(&plan.src_dims),
                    format!("{},{},{}", l[0], l[1], l[2]),
                    dims_str(&plan.tgt_dims),
                    plan.direction
                )?;
            }
            Ok(())
        }
        Command::Inspect { src, policy } => {
            let policy = policy.as_deref().map(GroupPolicy::load).transpose()?;
            let ckpt = container::read_file(&src)?;
            let mut out = std::io::stdout().lock();
            writeln!(out, "{} tensors", ckpt.len())?;
            for (name, entry) in ckpt.iter() {
                let group = policy
                    .as_ref()
                    .map(|p| match p.match_name(name) {
                        Some((rule, _)) => format!(" {}", rule.group),
                        None => " -".to_string(),
                    })
                    .unwrap_or_default();
                writeln!(
                    out,
                    "{name} {} {}{group}",
                    entry.dtype().name(),
                    dims_str(entry.shape())
                )?;
            }
            if let Some(policy) = &policy {
                let model = consolidate(&ckpt, policy)?;
                for (group, module) in &model.modules {
                    writeln!(out, "group {group} {}", dims_str(&module.tensor.dims()))?;
                }
                writeln!(out, "residual {} tensors", model.residual.len())?;
                writeln!(out, "{}", model.arch)?;
            }
            Ok(())
        }
        Command::Verify {
            src,
            wavelet,
            policy,
        } => {
            let family: WaveletFamily = wavelet.parse()?;
            let policy = policy.as_deref().map(GroupPolicy::load).transpose()?;
            let ckpt = container::read_file(&src)?;
            let bank = get_filter_bank(family);
            let tol = verify_tolerance(family);
            let targets = verify_targets(&ckpt, policy.as_ref())?;

            let mut out = std::io::stdout().lock();
            let (mut passed, mut skipped, mut failed) = (0, 0, 0);
            for (name, tensor) in &targets {
                match round_trip_error(tensor, &bank)? {
                    None => {
                        skipped += 1;
                        writeln!(out, "{name} skipped (odd dims)")?;
                    }
                    Some(e) if e <= tol => {
                        passed += 1;
                        writeln!(out, "{name} max_err={e:.3e} ok")?;
                    }
                    Some(e) => {
                        failed += 1;
                        writeln!(out, "{name} max_err={e:.3e} FAIL")?;
                    }
                }
            }
            writeln!(
                out,
                "{family}: {passed} passed, {skipped} skipped, {failed} failed (tol {tol:e})"
            )?;
            if failed > 0 {
                return Err(Failure::Check {
                    code: "ReconstructionError",
                    reason: format!("{failed} modules exceed {tol:e} with {family}"),
                });
            }
            Ok(())
        }
        Command::Filters { family, check } => {
            let families = match family {
                Some(f) => vec![f.parse::<WaveletFamily>()?],
                None => WaveletFamily::ALL.to_vec(),
            };
            let mut out = std::io::stdout().lock();
            let mut failed = Vec::new();
            for family in families {
                let bank = get_filter_bank(family);
                writeln!(out, "# {family}")?;
                write!(out, "{}", format_bank(&bank))?;
                if check {
                    let report = validate_bank(&bank);
                    writeln!(
                        out,
                        "check {} max_err={:.3e}",
                        if report.passed() { "ok" } else { "FAIL" },
                        report.max_reconstruction_error
                    )?;
                    if !report.passed() {
                        failed.push(family.name());
                    }
                }
            }
            if !failed.is_empty() {
                return Err(Failure::Check {
                    code: "FilterCheckFailed",
                    reason: failed.join(","),
                });
            }
            Ok(())
        }
        Command::Flops {
            scratch,
            method,
            target,
            direction,
        } => {
            let direction: MetricDirection = direction.parse()?;
            let scratch = TrainingCurve::from_csv_file(&scratch, direction)?;
            let method = TrainingCurve::from_csv_file(&method, direction)?;
            let r = flops_saving_ratio(&scratch, &method, target)?;
            println!("{r:.4}");
            Ok(())
        }
    }
}

/// Values are stored in f32 by most checkpoints; the near-orthogonal dmey
/// filter gets a looser bound.
fn verify_tolerance(family: WaveletFamily) -> f64 {
    if family == WaveletFamily::Dmey {
        1e-5
    } else {
        1e-6
    }
}

fn verify_targets(
    ckpt: &Checkpoint,
    policy: Option<&GroupPolicy>,
) -> Result<Vec<(String, Tensor3)>, Failure> {
    Ok(match policy {
        Some(policy) => consolidate(ckpt, policy)?
            .modules
            .into_iter()
            .map(|(group, module)| (group, module.tensor))
            .collect(),
        None => ckpt
            .iter()
            .map(|(name, entry)| (name.to_string(), entry.tensor().clone()))
            .collect(),
    })
}

fn dims_str(dims: &[usize]) -> String {
    dims.iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join("x")
}
