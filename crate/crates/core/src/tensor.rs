use std::fmt;

use ndarray::{Array3, ShapeBuilder};

use crate::error::{Error, Result};

/// The three named axes of a consolidated weight module.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axis {
    /// Stacked layer index.
    Layers,
    DIn,
    DOut,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::Layers, Axis::DIn, Axis::DOut];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Axis::Layers => "L",
            Axis::DIn => "Din",
            Axis::DOut => "Dout",
        }
    }

    pub fn parse(s: &str) -> Option<Axis> {
        Axis::ALL.into_iter().find(|a| a.name() == s)
    }
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Dense row-major rank-3 array of `f64`. Lower-rank data uses leading
/// singleton dimensions.
#[derive(Debug, Clone, PartialEq)]
pub struct Tensor3(Array3<f64>);

impl Tensor3 {
    pub fn zeros(dims: [usize; 3]) -> Self {
        Tensor3(Array3::zeros(dims))
    }

    pub fn from_elem(dims: [usize; 3], value: f64) -> Self {
        Tensor3(Array3::from_elem(dims, value))
    }

    pub fn from_vec(dims: [usize; 3], data: Vec<f64>) -> Result<Self> {
        let expected = dims.iter().product::<usize>();
        if expected != data.len() {
            return Err(Error::ShapeMismatch(format!(
                "dims {dims:?} need {expected} values, got {}",
                data.len()
            )));
        }
        Array3::from_shape_vec(dims.into_shape_with_order(), data)
            .map(Tensor3)
            .map_err(|e| Error::ShapeMismatch(e.to_string()))
    }

    pub fn from_fn(dims: [usize; 3], mut f: impl FnMut([usize; 3]) -> f64) -> Self {
        Tensor3(Array3::from_shape_fn(dims, |(i, j, k)| f([i, j, k])))
    }

    pub fn dims(&self) -> [usize; 3] {
        let s = self.0.shape();
        [s[0], s[1], s[2]]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Row-major view of the values.
    pub fn as_slice(&self) -> &[f64] {
        self.0
            .as_slice()
            .expect("Tensor3 is always standard layout")
    }

    pub fn into_vec(self) -> Vec<f64> {
        let (v, offset) = self.0.into_raw_vec_and_offset();
        debug_assert_eq!(offset.unwrap_or(0), 0);
        v
    }

    pub fn get(&self, index: [usize; 3]) -> f64 {
        self.0[index]
    }

    pub fn array(&self) -> &Array3<f64> {
        &self.0
    }

    pub(crate) fn from_array(array: Array3<f64>) -> Self {
        if array.is_standard_layout() {
            Tensor3(array)
        } else {
            Tensor3(array.as_standard_layout().into_owned())
        }
    }

    pub fn scaled(&self, factor: f64) -> Tensor3 {
        Tensor3(&self.0 * factor)
    }

    pub fn norm_sq(&self) -> f64 {
        self.0.iter().map(|v| v * v).sum()
    }

    pub fn max_abs_diff(&self, other: &Tensor3) -> f64 {
        assert_eq!(self.dims(), other.dims(), "max_abs_diff on different dims");
        self.0
            .iter()
            .zip(other.0.iter())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    pub fn max_abs(&self) -> f64 {
        self.0.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    /// Mean and population standard deviation of all entries.
    pub fn mean_std(&self) -> (f64, f64) {
        let n = self.len() as f64;
        if n == 0.0 {
            return (0.0, 0.0);
        }
        let mean = self.0.iter().sum::<f64>() / n;
        let var = self.0.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / n;
        (mean, var.sqrt())
    }

    /// `a * self + b * other`.
    pub fn lin_comb(&self, a: f64, other: &Tensor3, b: f64) -> Tensor3 {
        assert_eq!(self.dims(), other.dims(), "lin_comb on different dims");
        Tensor3(&self.0 * a + &other.0 * b)
    }
}
