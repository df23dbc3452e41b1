//! Grouping per-layer weights into stacked 3D modules and back.
//!
//! A [`GroupPolicy`] is an ordered list of rules. A rule whose pattern
//! contains `{}` matches one tensor per layer (`{}` is the decimal layer
//! index) and stacks them along the layer axis; a rule without a placeholder
//! matches a single tensor that becomes its own module. The first matching
//! rule wins. Tensors matching no rule are either copied into the residual
//! checkpoint or rejected, depending on `passthrough`.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use ndarray::s;
use serde::Deserialize;

use crate::checkpoint::{Checkpoint, DType, TensorEntry};
use crate::error::{Error, Result};
use crate::nd::LevelSpec;
use crate::tensor::{Axis, Tensor3};

const PRESETS: [(&str, &str); 3] = [
    ("bert-like", include_str!("../presets/bert-like.toml")),
    ("gpt-like", include_str!("../presets/gpt-like.toml")),
    ("deit-like", include_str!("../presets/deit-like.toml")),
];

/// What happens to tensors that match no rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Passthrough {
    Copy,
    Error,
}

/// Which architecture size a module dimension tracks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DimRole {
    Layers,
    Hidden,
    Ffn,
    /// Fused query/key/value width, three times the hidden size.
    Qkv,
    /// Independent of model size (vocabulary, sequence length, ...).
    Fixed,
}

impl DimRole {
    fn parse(s: &str) -> Option<DimRole> {
        match s {
            "layers" => Some(DimRole::Layers),
            "hidden" => Some(DimRole::Hidden),
            "ffn" => Some(DimRole::Ffn),
            "qkv" => Some(DimRole::Qkv),
            "fixed" => Some(DimRole::Fixed),
            _ => None,
        }
    }

    /// Size this role takes in `arch`, or `None` for fixed dims.
    pub fn size_in(self, arch: &Arch) -> Option<usize> {
        match self {
            DimRole::Layers => Some(arch.layers),
            DimRole::Hidden => Some(arch.hidden),
            DimRole::Ffn => Some(arch.ffn),
            DimRole::Qkv => Some(3 * arch.hidden),
            DimRole::Fixed => None,
        }
    }

    /// Guesses the role of a dimension of size `value` in `arch`.
    pub fn infer(value: usize, arch: &Arch) -> DimRole {
        if value == 1 {
            DimRole::Fixed
        } else if value == arch.hidden {
            DimRole::Hidden
        } else if value == arch.ffn {
            DimRole::Ffn
        } else if value == 3 * arch.hidden {
            DimRole::Qkv
        } else {
            DimRole::Fixed
        }
    }
}

/// Transformer size: layer count, hidden width, feed-forward width.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Arch {
    pub layers: usize,
    pub hidden: usize,
    pub ffn: usize,
}

impl Arch {
    /// Feed-forward width defaults to four times the hidden width.
    pub fn new(layers: usize, hidden: usize, ffn: Option<usize>) -> Self {
        Arch {
            layers,
            hidden,
            ffn: ffn.unwrap_or(4 * hidden),
        }
    }
}

impl fmt::Display for Arch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "L={} hidden={} ffn={}",
            self.layers, self.hidden, self.ffn
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum NamePattern {
    Layered { prefix: String, suffix: String },
    Exact(String),
}

impl NamePattern {
    fn parse(pattern: &str) -> Result<Self> {
        match pattern.matches("{}").count() {
            0 => Ok(NamePattern::Exact(pattern.to_string())),
            1 => {
                let (prefix, suffix) = pattern.split_once("{}").expect("one placeholder");
                Ok(NamePattern::Layered {
                    prefix: prefix.to_string(),
                    suffix: suffix.to_string(),
                })
            }
            _ => Err(Error::InvalidPolicy(format!(
                "pattern `{pattern}` has more than one placeholder"
            ))),
        }
    }

    /// `Some(Some(layer))` for a layered match, `Some(None)` for an exact one.
    fn matches(&self, name: &str) -> Option<Option<usize>> {
        match self {
            NamePattern::Exact(exact) => (exact == name).then_some(None),
            NamePattern::Layered { prefix, suffix } => {
                let middle = name
                    .strip_prefix(prefix.as_str())?
                    .strip_suffix(suffix.as_str())?;
                let canonical = !middle.is_empty()
                    && middle.bytes().all(|b| b.is_ascii_digit())
                    && (middle == "0" || !middle.starts_with('0'));
                if !canonical {
                    return None;
                }
                middle.parse().ok().map(Some)
            }
        }
    }

    fn instantiate(&self, layer: Option<usize>) -> String {
        match (self, layer) {
            (NamePattern::Layered { prefix, suffix }, Some(i)) => format!("{prefix}{i}{suffix}"),
            (NamePattern::Layered { prefix, suffix }, None) => format!("{prefix}{{}}{suffix}"),
            (NamePattern::Exact(name), _) => name.clone(),
        }
    }

    fn is_layered(&self) -> bool {
        matches!(self, NamePattern::Layered { .. })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Rule {
    pattern: NamePattern,
    pub group: String,
    pub transform_axes: [bool; 3],
    /// Roles of the matched tensor's own dims, if given explicitly.
    pub dims: Option<Vec<DimRole>>,
}

impl Rule {
    pub fn pattern(&self) -> String {
        self.pattern.instantiate(None)
    }

    pub fn is_layered(&self) -> bool {
        self.pattern.is_layered()
    }
}

#[derive(Debug, Clone, PartialEq)]
struct ArchRef {
    group: String,
    axis: Axis,
}

/// Declarative grouping of checkpoint tensors into modules.
#[derive(Debug, Clone, PartialEq)]
pub struct GroupPolicy {
    pub rules: Vec<Rule>,
    pub passthrough: Passthrough,
    hidden_from: Option<ArchRef>,
    ffn_from: Option<ArchRef>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PolicyDoc {
    passthrough: Option<String>,
    #[serde(default)]
    arch: ArchDoc,
    #[serde(default)]
    rules: Vec<RuleDoc>,
}

#[derive(Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct ArchDoc {
    hidden: Option<ArchRefDoc>,
    ffn: Option<ArchRefDoc>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ArchRefDoc {
    group: String,
    axis: String,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RuleDoc {
    pattern: String,
    group: String,
    transform_axes: Option<Vec<String>>,
    dims: Option<Vec<String>>,
}

fn parse_axis(s: &str) -> Result<Axis> {
    Axis::parse(s).ok_or_else(|| Error::InvalidPolicy(format!("unknown axis `{s}`")))
}

impl GroupPolicy {
    pub fn from_toml_str(text: &str) -> Result<Self> {
        let doc: PolicyDoc =
            toml::from_str(text).map_err(|e| Error::InvalidPolicy(e.message().to_string()))?;
        let passthrough = match doc.passthrough.as_deref() {
            None | Some("copy") => Passthrough::Copy,
            Some("error") => Passthrough::Error,
            Some(other) => {
                return Err(Error::InvalidPolicy(format!(
                    "passthrough must be `copy` or `error`, got `{other}`"
                )))
            }
        };
        let mut rules: Vec<Rule> = Vec::with_capacity(doc.rules.len());
        for r in doc.rules {
            if rules.iter().any(|existing| existing.group == r.group) {
                return Err(Error::InvalidPolicy(format!(
                    "group `{}` defined twice",
                    r.group
                )));
            }
            let pattern = NamePattern::parse(&r.pattern)?;
            let mut transform_axes = [false; 3];
            match r.transform_axes {
                None => transform_axes = [true; 3],
                Some(axes) => {
                    for a in axes {
                        transform_axes[parse_axis(&a)?.index()] = true;
                    }
                }
            }
            let dims = r
                .dims
                .map(|roles| {
                    roles
                        .iter()
                        .map(|s| match DimRole::parse(s) {
                            Some(DimRole::Layers) | None => Err(Error::InvalidPolicy(format!(
                                "unknown dim role `{s}` in group `{}`",
                                r.group
                            ))),
                            Some(role) => Ok(role),
                        })
                        .collect::<Result<Vec<_>>>()
                })
                .transpose()?;
            if let Some(d) = &dims {
                let max_rank = if pattern.is_layered() { 2 } else { 3 };
                if d.is_empty() || d.len() > max_rank {
                    return Err(Error::InvalidPolicy(format!(
                        "group `{}` lists {} dims",
                        r.group,
                        d.len()
                    )));
                }
            }
            rules.push(Rule {
                pattern,
                group: r.group,
                transform_axes,
                dims,
            });
        }
        let arch_ref = |doc: Option<ArchRefDoc>| -> Result<Option<ArchRef>> {
            doc.map(|d| {
                Ok(ArchRef {
                    axis: parse_axis(&d.axis)?,
                    group: d.group,
                })
            })
            .transpose()
        };
        Ok(GroupPolicy {
            rules,
            passthrough,
            hidden_from: arch_ref(doc.arch.hidden)?,
            ffn_from: arch_ref(doc.arch.ffn)?,
        })
    }

    pub fn preset_names() -> impl Iterator<Item = &'static str> {
        PRESETS.iter().map(|(name, _)| *name)
    }

    pub fn preset(name: &str) -> Result<Self> {
        let (_, text) = PRESETS
            .iter()
            .find(|(n, _)| *n == name)
            .ok_or_else(|| Error::InvalidPolicy(format!("no preset named `{name}`")))?;
        Self::from_toml_str(text)
    }

    /// Loads a policy file, or a shipped preset when `source` names one and
    /// no such file exists.
    pub fn load(source: &str) -> Result<Self> {
        let path = Path::new(source);
        if !path.exists() && PRESETS.iter().any(|(n, _)| *n == source) {
            return Self::preset(source);
        }
        Self::from_toml_str(&std::fs::read_to_string(path)?)
    }

    fn rule_for_group(&self, group: &str) -> Option<&Rule> {
        self.rules.iter().find(|r| r.group == group)
    }

    /// First rule matching `name` and the layer index it captured.
    pub fn match_name(&self, name: &str) -> Option<(&Rule, Option<usize>)> {
        self.rules
            .iter()
            .find_map(|r| r.pattern.matches(name).map(|layer| (r, layer)))
    }
}

/// One consolidated weight module.
#[derive(Debug, Clone, PartialEq)]
pub struct Module {
    /// `L x Din x Dout` for layered modules, `1 x Din x Dout` otherwise.
    pub tensor: Tensor3,
    pub dtype: DType,
    /// Rank of each source tensor.
    pub rank: u8,
    pub layered: bool,
    pub transform_axes: [bool; 3],
    /// Explicit per-axis roles from the policy.
    pub roles: Option<[DimRole; 3]>,
}

impl Module {
    /// Per-axis roles, explicit ones first, otherwise inferred from `arch`.
    pub fn roles_in(&self, arch: &Arch) -> [DimRole; 3] {
        if let Some(roles) = self.roles {
            return roles;
        }
        let dims = self.tensor.dims();
        [
            if self.layered {
                DimRole::Layers
            } else {
                DimRole::Fixed
            },
            DimRole::infer(dims[1], arch),
            DimRole::infer(dims[2], arch),
        ]
    }

    /// Dims this module takes when the model is resized from `src` to `tgt`.
    pub fn target_dims(&self, src: &Arch, tgt: &Arch) -> [usize; 3] {
        let dims = self.tensor.dims();
        let roles = self.roles_in(src);
        std::array::from_fn(|i| match roles[i].size_in(tgt) {
            Some(size) if roles[i].size_in(src) == Some(dims[i]) => size,
            _ => dims[i],
        })
    }
}

/// Stacked modules plus everything left untouched.
#[derive(Debug, Clone, PartialEq)]
pub struct ConsolidatedModel {
    pub modules: BTreeMap<String, Module>,
    pub residual: Checkpoint,
    pub arch: Arch,
}

/// Module-axis roles for a tensor of `rank` matched by `rule`.
fn module_roles(rule: &Rule, rank: u8) -> Option<[DimRole; 3]> {
    let dims = rule.dims.as_ref()?;
    if dims.len() != rank as usize {
        return None;
    }
    let fixed = DimRole::Fixed;
    Some(match (rule.is_layered(), rank) {
        (true, 1) => [DimRole::Layers, dims[0], fixed],
        (true, _) => [DimRole::Layers, dims[0], dims[1]],
        (false, 1) => [fixed, dims[0], fixed],
        (false, 2) => [fixed, dims[0], dims[1]],
        (false, _) => [dims[0], dims[1], dims[2]],
    })
}

/// Module-axis dims for one source tensor (rank-1 data goes on `Din`).
fn module_slice_dims(shape: &[usize]) -> [usize; 3] {
    match shape {
        [a] => [1, *a, 1],
        [a, b] => [1, *a, *b],
        [a, b, c] => [*a, *b, *c],
        _ => unreachable!("entries have rank 1..=3"),
    }
}

fn shape_from_module_slice(rank: u8, dims: [usize; 3]) -> Option<Vec<usize>> {
    match rank {
        1 if dims[0] == 1 && dims[2] == 1 => Some(vec![dims[1]]),
        2 if dims[0] == 1 => Some(vec![dims[1], dims[2]]),
        3 => Some(dims.to_vec()),
        _ => None,
    }
}

/// Groups `ckpt` into modules according to `policy`.
pub fn consolidate(ckpt: &Checkpoint, policy: &GroupPolicy) -> Result<ConsolidatedModel> {
    let mut layered: BTreeMap<&str, (&Rule, BTreeMap<usize, &TensorEntry>)> = BTreeMap::new();
    let mut modules = BTreeMap::new();
    let mut residual = Checkpoint::new();

    for (name, entry) in ckpt.iter() {
        match policy.match_name(name) {
            Some((rule, Some(layer))) => {
                let (_, layers) = layered
                    .entry(rule.group.as_str())
                    .or_insert_with(|| (rule, BTreeMap::new()));
                layers.insert(layer, entry);
            }
            Some((rule, None)) => {
                let dims = module_slice_dims(entry.shape());
                let tensor = Tensor3::from_vec(dims, entry.values().to_vec())?;
                modules.insert(
                    rule.group.clone(),
                    Module {
                        tensor,
                        dtype: entry.dtype(),
                        rank: entry.rank(),
                        layered: false,
                        transform_axes: rule.transform_axes,
                        roles: module_roles(rule, entry.rank()),
                    },
                );
            }
            None => match policy.passthrough {
                Passthrough::Copy => residual.insert(name, entry.clone())?,
                Passthrough::Error => return Err(Error::UnmatchedTensor(name.to_string())),
            },
        }
    }

    let layer_count = layered
        .values()
        .filter_map(|(_, layers)| layers.keys().next_back())
        .max()
        .map_or(0, |max| max + 1);

    for (group, (rule, layers)) in layered {
        if let Some(missing) = (0..layer_count).find(|i| !layers.contains_key(i)) {
            return Err(Error::MissingLayer {
                group: group.to_string(),
                layer: missing,
            });
        }
        let first = layers[&0];
        if first.rank() == 3 {
            return Err(Error::ShapeInconsistent(format!(
                "group `{group}` matches rank-3 tensors, which cannot be stacked"
            )));
        }
        for (layer, entry) in &layers {
            if entry.shape() != first.shape() || entry.dtype() != first.dtype() {
                return Err(Error::ShapeInconsistent(format!(
                    "group `{group}` layer {layer} is {} {:?}, layer 0 is {} {:?}",
                    entry.dtype().name(),
                    entry.shape(),
                    first.dtype().name(),
                    first.shape()
                )));
            }
        }
        let slice = module_slice_dims(first.shape());
        let mut data = Vec::with_capacity(layer_count * slice[1] * slice[2]);
        for entry in layers.values() {
            data.extend_from_slice(entry.values());
        }
        let tensor = Tensor3::from_vec([layer_count, slice[1], slice[2]], data)?;
        modules.insert(
            group.to_string(),
            Module {
                tensor,
                dtype: first.dtype(),
                rank: first.rank(),
                layered: true,
                transform_axes: rule.transform_axes,
                roles: module_roles(rule, first.rank()),
            },
        );
    }

    let lookup = |r: &Option<ArchRef>, what: &str| -> Result<Option<usize>> {
        let Some(r) = r else { return Ok(None) };
        match modules.get(&r.group) {
            Some(m) => Ok(Some(m.tensor.dims()[r.axis.index()])),
            None if modules.is_empty() => Ok(None),
            None => Err(Error::InvalidPolicy(format!(
                "{what} size comes from group `{}`, which matched no tensors",
                r.group
            ))),
        }
    };
    let hidden = lookup(&policy.hidden_from, "hidden")?.unwrap_or(0);
    let ffn = lookup(&policy.ffn_from, "ffn")?;
    Ok(ConsolidatedModel {
        modules,
        residual,
        arch: Arch::new(layer_count, hidden, ffn),
    })
}

/// Splits modules back into per-layer tensors named by their rule.
pub fn deconsolidate(model: &ConsolidatedModel, policy: &GroupPolicy) -> Result<Checkpoint> {
    let mut out = Checkpoint::new();
    for (group, module) in &model.modules {
        let rule = policy
            .rule_for_group(group)
            .ok_or_else(|| Error::InvalidPolicy(format!("no rule produces group `{group}`")))?;
        let dims = module.tensor.dims();
        if rule.is_layered() != module.layered {
            return Err(Error::ShapeInconsistent(format!(
                "group `{group}` layering differs from its rule"
            )));
        }
        if module.layered {
            if dims[0] != model.arch.layers {
                return Err(Error::ShapeInconsistent(format!(
                    "group `{group}` has {} layers, model expects {}",
                    dims[0], model.arch.layers
                )));
            }
            let shape =
                shape_from_module_slice(module.rank, [1, dims[1], dims[2]]).ok_or_else(|| {
                    Error::ShapeInconsistent(format!(
                        "group `{group}` dims {dims:?} do not fit rank {}",
                        module.rank
                    ))
                })?;
            for layer in 0..dims[0] {
                let values: Vec<f64> = module
                    .tensor
                    .array()
                    .slice(s![layer, .., ..])
                    .iter()
                    .copied()
                    .collect();
                let entry = TensorEntry::new(module.dtype, &shape, values)?;
                out.insert(rule.pattern.instantiate(Some(layer)), entry)?;
            }
        } else {
            let shape = shape_from_module_slice(module.rank, dims).ok_or_else(|| {
                Error::ShapeInconsistent(format!(
                    "group `{group}` dims {dims:?} do not fit rank {}",
                    module.rank
                ))
            })?;
            let entry = TensorEntry::new(module.dtype, &shape, module.tensor.as_slice().to_vec())?;
            out.insert(rule.pattern.instantiate(None), entry)?;
        }
    }
    for (name, entry) in model.residual.iter() {
        out.insert(name, entry.clone())?;
    }
    Ok(out)
}

/// Whether a transfer shrinks, grows, or keeps a module.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    LargeToSmall,
    SmallToLarge,
    Neutral,
}

impl Direction {
    pub fn name(self) -> &'static str {
        match self {
            Direction::LargeToSmall => "L2S",
            Direction::SmallToLarge => "S2L",
            Direction::Neutral => "neutral",
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn power_of_two_exponent(big: usize, small: usize) -> Option<u32> {
    if small == 0 || !big.is_multiple_of(small) {
        return None;
    }
    let ratio = big / small;
    ratio.is_power_of_two().then(|| ratio.trailing_zeros())
}

/// Per-axis level counts mapping `src` dims onto `tgt` dims.
pub fn infer_level_spec(src: [usize; 3], tgt: [usize; 3]) -> Result<(LevelSpec, Direction)> {
    let mut levels = [0u32; 3];
    let mut direction = Direction::Neutral;
    for axis in Axis::ALL {
        let (s, t) = (src[axis.index()], tgt[axis.index()]);
        let (level, axis_dir) = if s == t {
            (0, Direction::Neutral)
        } else if let Some(k) = power_of_two_exponent(s, t) {
            (k, Direction::LargeToSmall)
        } else if let Some(k) = power_of_two_exponent(t, s) {
            (k, Direction::SmallToLarge)
        } else {
            return Err(Error::NotPowerOfTwoRatio {
                axis,
                src: s,
                tgt: t,
            });
        };
        levels[axis.index()] = level;
        if axis_dir != Direction::Neutral {
            if direction != Direction::Neutral && direction != axis_dir {
                return Err(Error::MixedDirection(format!(
                    "{src:?} -> {tgt:?} shrinks some axes and grows others"
                )));
            }
            direction = axis_dir;
        }
    }
    Ok((LevelSpec::new(levels), direction))
}
