//! Resizing consolidated models.
//!
//! Shrinking keeps the all-low-pass band of a multi-level analysis of each
//! module. Growing uses the source module as the approximation band of a
//! multi-level synthesis whose detail bands come from a [`DetailPadding`]
//! strategy (all zeros by default).

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::checkpoint::Checkpoint;
use crate::consolidate::{
    consolidate, deconsolidate, infer_level_spec, Arch, ConsolidatedModel, DimRole, Direction,
    GroupPolicy, Module,
};
use crate::error::{Error, Result};
use crate::filters::{get_filter_bank, FilterBank, WaveletFamily};
use crate::nd::{analyze_to_approx, synthesize_from_approx, DetailSource, LevelSpec};
use crate::tensor::{Axis, Tensor3};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum PaddingStrategy {
    #[default]
    Zero,
    Gaussian,
    Uniform,
}

impl PaddingStrategy {
    pub fn name(self) -> &'static str {
        match self {
            PaddingStrategy::Zero => "zero",
            PaddingStrategy::Gaussian => "gaussian",
            PaddingStrategy::Uniform => "uniform",
        }
    }
}

impl fmt::Display for PaddingStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PaddingStrategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "zero" => Ok(PaddingStrategy::Zero),
            "gaussian" => Ok(PaddingStrategy::Gaussian),
            "uniform" => Ok(PaddingStrategy::Uniform),
            _ => Err(Error::InvalidOption(format!("unknown padding `{s}`"))),
        }
    }
}

/// How detail bands are filled when growing a module. Random strategies use
/// sigma = population standard deviation of the running low band.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct DetailPadding {
    pub strategy: PaddingStrategy,
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransferOptions {
    pub family: WaveletFamily,
    pub padding: DetailPadding,
    /// Multiplier on grown modules.
    pub gain: f64,
}

impl Default for TransferOptions {
    fn default() -> Self {
        TransferOptions {
            family: WaveletFamily::Haar,
            padding: DetailPadding::default(),
            gain: 1.0,
        }
    }
}

impl TransferOptions {
    fn validate(&self) -> Result<()> {
        if self.gain.is_finite() && self.gain > 0.0 {
            Ok(())
        } else {
            Err(Error::InvalidOption(format!(
                "gain must be positive, got {}",
                self.gain
            )))
        }
    }
}

/// Seed for one (group, level) stream. FNV-1a over the inputs keeps it
/// independent of scheduling.
fn sub_seed(seed: u64, group: &str, level: u32) -> u64 {
    let mut hash = 0xcbf2_9ce4_8422_2325u64;
    let bytes = seed
        .to_le_bytes()
        .into_iter()
        .chain(group.bytes())
        .chain([0xff])
        .chain(level.to_le_bytes());
    for b in bytes {
        hash ^= u64::from(b);
        hash = hash.wrapping_mul(0x0100_0000_01b3);
    }
    hash
}

/// `count` detail bands shaped like `low` for synthesis step `level` of
/// module `group`.
pub fn make_detail_bands(
    padding: &DetailPadding,
    group: &str,
    level: u32,
    low: &Tensor3,
    count: usize,
) -> Vec<Tensor3> {
    let dims = low.dims();
    let sigma = low.mean_std().1;
    if padding.strategy == PaddingStrategy::Zero || sigma == 0.0 {
        return vec![Tensor3::zeros(dims); count];
    }
    let mut rng = ChaCha8Rng::seed_from_u64(sub_seed(padding.seed, group, level));
    (0..count)
        .map(|_| match padding.strategy {
            PaddingStrategy::Gaussian => {
                Tensor3::from_fn(dims, |_| sigma * rng.sample::<f64, _>(StandardNormal))
            }
            PaddingStrategy::Uniform => Tensor3::from_fn(dims, |_| rng.gen_range(-sigma..=sigma)),
            PaddingStrategy::Zero => unreachable!(),
        })
        .collect()
}

struct PaddingSource<'a> {
    padding: &'a DetailPadding,
    group: &'a str,
}

impl DetailSource for PaddingSource<'_> {
    fn detail_bands(&mut self, step: u32, low: &Tensor3, count: usize) -> Vec<Tensor3> {
        make_detail_bands(self.padding, self.group, step, low, count)
    }
}

/// How one module will be resized.
#[derive(Debug, Clone, PartialEq)]
pub struct ModulePlan {
    pub group: String,
    pub src_dims: [usize; 3],
    pub tgt_dims: [usize; 3],
    pub spec: LevelSpec,
    pub direction: Direction,
}

/// Works out per-module level specs for resizing `model` to `tgt`, and
/// checks that residual tensors do not depend on a resized dimension.
pub fn plan_transfer(model: &ConsolidatedModel, tgt: &Arch) -> Result<Vec<ModulePlan>> {
    let src = &model.arch;
    let mut plans = Vec::with_capacity(model.modules.len());
    for (group, module) in &model.modules {
        let src_dims = module.tensor.dims();
        let tgt_dims = module.target_dims(src, tgt);
        for axis in Axis::ALL {
            let i = axis.index();
            if !module.transform_axes[i] && src_dims[i] != tgt_dims[i] {
                return Err(Error::ShapeInconsistent(format!(
                    "group `{group}` must resize axis {axis} ({} -> {}) but the policy does not transform it",
                    src_dims[i], tgt_dims[i]
                )));
            }
        }
        let (spec, direction) = infer_level_spec(src_dims, tgt_dims)?;
        plans.push(ModulePlan {
            group: group.clone(),
            src_dims,
            tgt_dims,
            spec,
            direction,
        });
    }
    for (name, entry) in model.residual.iter() {
        let resized = entry.shape().iter().any(|&d| {
            let role = DimRole::infer(d, src);
            role.size_in(tgt).is_some_and(|size| size != d)
        });
        if resized {
            return Err(Error::ResidualShapeMismatch {
                name: name.to_string(),
                dims: entry.shape().to_vec(),
            });
        }
    }
    Ok(plans)
}

/// Overall direction of a plan; mixing shrinking and growing modules is an
/// error.
pub fn plan_direction(plans: &[ModulePlan]) -> Result<Direction> {
    let mut overall = Direction::Neutral;
    for plan in plans {
        match (overall, plan.direction) {
            (_, Direction::Neutral) => {}
            (Direction::Neutral, d) => overall = d,
            (a, b) if a == b => {}
            _ => {
                return Err(Error::MixedDirection(format!(
                    "group `{}` goes {} while others go {}",
                    plan.group, plan.direction, overall
                )))
            }
        }
    }
    Ok(overall)
}

fn resize(
    model: &ConsolidatedModel,
    tgt: &Arch,
    opts: &TransferOptions,
    allowed: Direction,
) -> Result<ConsolidatedModel> {
    opts.validate()?;
    let plans = plan_transfer(model, tgt)?;
    for plan in &plans {
        if plan.direction != Direction::Neutral && plan.direction != allowed {
            return Err(Error::MixedDirection(format!(
                "group `{}` needs {} but this pipeline is {}",
                plan.group, plan.direction, allowed
            )));
        }
    }
    let bank = get_filter_bank(opts.family);
    let mut modules = BTreeMap::new();
    for plan in &plans {
        let module = &model.modules[&plan.group];
        let tensor = resize_module(module, plan, &bank, opts)?;
        debug_assert_eq!(tensor.dims(), plan.tgt_dims);
        modules.insert(
            plan.group.clone(),
            Module {
                tensor,
                ..module.clone()
            },
        );
    }
    Ok(ConsolidatedModel {
        modules,
        residual: model.residual.clone(),
        arch: *tgt,
    })
}

fn resize_module(
    module: &Module,
    plan: &ModulePlan,
    bank: &FilterBank,
    opts: &TransferOptions,
) -> Result<Tensor3> {
    match plan.direction {
        Direction::Neutral => Ok(module.tensor.clone()),
        Direction::LargeToSmall => analyze_to_approx(&module.tensor, plan.spec, bank),
        Direction::SmallToLarge => {
            let mut source = PaddingSource {
                padding: &opts.padding,
                group: &plan.group,
            };
            let grown = synthesize_from_approx(&module.tensor, plan.spec, bank, &mut source)?;
            Ok(if opts.gain == 1.0 {
                grown
            } else {
                grown.scaled(opts.gain)
            })
        }
    }
}

/// Shrinks every module of `src` to `tgt` by keeping its approximation band.
pub fn l2s_transfer(
    src: &ConsolidatedModel,
    tgt: &Arch,
    opts: &TransferOptions,
) -> Result<ConsolidatedModel> {
    resize(src, tgt, opts, Direction::LargeToSmall)
}

/// Grows every module of `src` to `tgt` by wavelet synthesis.
pub fn s2l_transfer(
    src: &ConsolidatedModel,
    tgt: &Arch,
    opts: &TransferOptions,
) -> Result<ConsolidatedModel> {
    resize(src, tgt, opts, Direction::SmallToLarge)
}

/// Summary of a completed checkpoint transfer.
#[derive(Debug, Clone)]
pub struct TransferReport {
    pub src_arch: Arch,
    pub tgt_arch: Arch,
    pub direction: Direction,
    pub plans: Vec<ModulePlan>,
}

/// Consolidates, picks the direction, resizes and splits back into a
/// checkpoint for `tgt`.
pub fn transfer(
    src: &Checkpoint,
    policy: &GroupPolicy,
    tgt: &Arch,
    opts: &TransferOptions,
) -> Result<(Checkpoint, TransferReport)> {
    let model = consolidate(src, policy)?;
    let plans = plan_transfer(&model, tgt)?;
    let direction = plan_direction(&plans)?;
    let resized = match direction {
        Direction::Neutral => {
            opts.validate()?;
            ConsolidatedModel {
                arch: *tgt,
                ..model.clone()
            }
        }
        Direction::LargeToSmall => l2s_transfer(&model, tgt, opts)?,
        Direction::SmallToLarge => s2l_transfer(&model, tgt, opts)?,
    };
    let out = deconsolidate(&resized, policy)?;
    Ok((
        out,
        TransferReport {
            src_arch: model.arch,
            tgt_arch: *tgt,
            direction,
            plans,
        },
    ))
}
