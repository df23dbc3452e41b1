//! Named tensor collections.

use std::collections::btree_map::{self, BTreeMap};

use crate::error::{Error, Result};
use crate::tensor::Tensor3;

/// On-disk element type. Values are always held as `f64` in memory; `F32`
/// entries only ever hold values representable in `f32`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DType {
    F32,
    F64,
}

impl DType {
    pub fn code(self) -> u8 {
        match self {
            DType::F32 => 0,
            DType::F64 => 1,
        }
    }

    pub fn from_code(code: u8) -> Option<DType> {
        match code {
            0 => Some(DType::F32),
            1 => Some(DType::F64),
            _ => None,
        }
    }

    pub fn size(self) -> usize {
        match self {
            DType::F32 => 4,
            DType::F64 => 8,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            DType::F32 => "f32",
            DType::F64 => "f64",
        }
    }

    /// Rounds `v` to the nearest value of this dtype.
    pub fn round(self, v: f64) -> f64 {
        match self {
            DType::F32 => v as f32 as f64,
            DType::F64 => v,
        }
    }
}

/// One named tensor of rank 1 to 3.
#[derive(Debug, Clone, PartialEq)]
pub struct TensorEntry {
    dtype: DType,
    rank: u8,
    tensor: Tensor3,
}

impl TensorEntry {
    /// Builds an entry from its original shape. Values are rounded to `dtype`.
    pub fn new(dtype: DType, shape: &[usize], data: Vec<f64>) -> Result<Self> {
        let dims = padded_dims(shape)?;
        let data = match dtype {
            DType::F64 => data,
            DType::F32 => data.into_iter().map(|v| dtype.round(v)).collect(),
        };
        Ok(TensorEntry {
            dtype,
            rank: shape.len() as u8,
            tensor: Tensor3::from_vec(dims, data)?,
        })
    }

    /// Wraps a `Tensor3` whose leading `3 - rank` dims are 1.
    pub fn from_tensor(dtype: DType, rank: u8, tensor: Tensor3) -> Result<Self> {
        if !(1..=3).contains(&rank) {
            return Err(Error::ShapeMismatch(format!("rank {rank} is not in 1..=3")));
        }
        let dims = tensor.dims();
        if dims[..3 - rank as usize].iter().any(|d| *d != 1) {
            return Err(Error::ShapeMismatch(format!(
                "dims {dims:?} do not fit rank {rank}"
            )));
        }
        let shape: Vec<usize> = dims[3 - rank as usize..].to_vec();
        TensorEntry::new(dtype, &shape, tensor.into_vec())
    }

    pub fn dtype(&self) -> DType {
        self.dtype
    }

    pub fn rank(&self) -> u8 {
        self.rank
    }

    /// Original shape (length = rank).
    pub fn shape(&self) -> &[usize] {
        let dims = self.tensor.array().shape();
        &dims[3 - self.rank as usize..]
    }

    /// The values as a rank-3 tensor with leading singleton dims.
    pub fn tensor(&self) -> &Tensor3 {
        &self.tensor
    }

    pub fn values(&self) -> &[f64] {
        self.tensor.as_slice()
    }

    pub fn bit_eq(&self, other: &TensorEntry) -> bool {
        self.dtype == other.dtype
            && self.shape() == other.shape()
            && self
                .values()
                .iter()
                .zip(other.values())
                .all(|(a, b)| a.to_bits() == b.to_bits())
    }
}

fn padded_dims(shape: &[usize]) -> Result<[usize; 3]> {
    if !(1..=3).contains(&shape.len()) {
        return Err(Error::ShapeMismatch(format!(
            "rank {} is not in 1..=3",
            shape.len()
        )));
    }
    if shape.contains(&0) {
        return Err(Error::ShapeMismatch(format!(
            "shape {shape:?} has a zero dim"
        )));
    }
    let mut dims = [1; 3];
    dims[3 - shape.len()..].copy_from_slice(shape);
    Ok(dims)
}

/// Name-ordered tensor map. Iteration order is ascending bytewise by name.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Checkpoint {
    entries: BTreeMap<String, TensorEntry>,
}

impl Checkpoint {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, name: impl Into<String>, entry: TensorEntry) -> Result<()> {
        match self.entries.entry(name.into()) {
            btree_map::Entry::Occupied(e) => Err(Error::DuplicateName(e.key().clone())),
            btree_map::Entry::Vacant(e) => {
                e.insert(entry);
                Ok(())
            }
        }
    }

    pub fn get(&self, name: &str) -> Option<&TensorEntry> {
        self.entries.get(name)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &TensorEntry)> {
        self.entries.iter().map(|(k, v)| (k.as_str(), v))
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.entries.keys().map(String::as_str)
    }

    /// Same names, shapes, dtypes and bit patterns.
    pub fn bit_eq(&self, other: &Checkpoint) -> bool {
        self.len() == other.len()
            && self
                .iter()
                .zip(other.iter())
                .all(|((na, a), (nb, b))| na == nb && a.bit_eq(b))
    }
}

impl IntoIterator for Checkpoint {
    type Item = (String, TensorEntry);
    type IntoIter = btree_map::IntoIter<String, TensorEntry>;

    fn into_iter(self) -> Self::IntoIter {
        self.entries.into_iter()
    }
}
