//! Separable multi-dimensional transforms over [`Tensor3`].
//!
//! Everything here is built from the 1D periodized kernel applied to every
//! fiber along one axis. Sub-bands are indexed by a bit mask over the axes
//! taking part in a step, most significant bit first; for a full 3D step the
//! mask is `(L << 2) | (Din << 1) | Dout` with `1` meaning high-pass, so mask
//! 1 is `LLH` and mask 7 is `HHH`.

use ndarray::{Array3, Zip};

use crate::dwt::{analyze_into, check_divisible, synthesize_into};
use crate::error::{Error, Result};
use crate::filters::FilterBank;
use crate::tensor::{Axis, Tensor3};

/// Labels of the seven 3D detail bands, in mask order 1..=7.
pub const DETAIL_LABELS: [&str; 7] = ["LLH", "LHL", "LHH", "HLL", "HLH", "HHL", "HHH"];

/// One approximation band and the seven detail bands of a 3D analysis step.
#[derive(Debug, Clone, PartialEq)]
pub struct SubbandSet {
    pub approx: Tensor3,
    /// Ordered as [`DETAIL_LABELS`].
    pub details: [Tensor3; 7],
}

impl SubbandSet {
    pub fn band(&self, label: &str) -> Option<&Tensor3> {
        if label == "LLL" {
            return Some(&self.approx);
        }
        DETAIL_LABELS
            .iter()
            .position(|l| *l == label)
            .map(|i| &self.details[i])
    }

    pub fn norm_sq(&self) -> f64 {
        self.approx.norm_sq() + self.details.iter().map(Tensor3::norm_sq).sum::<f64>()
    }

    fn from_masked(mut bands: Vec<Tensor3>) -> Self {
        debug_assert_eq!(bands.len(), 8);
        let details: Vec<Tensor3> = bands.drain(1..).collect();
        let approx = bands.pop().expect("eight bands");
        SubbandSet {
            approx,
            details: details.try_into().expect("seven detail bands"),
        }
    }

    fn into_masked(self) -> Vec<Tensor3> {
        std::iter::once(self.approx).chain(self.details).collect()
    }
}

/// Per-axis decomposition counts, indexed by [`Axis::index`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct LevelSpec {
    pub levels: [u32; 3],
}

impl LevelSpec {
    pub fn new(levels: [u32; 3]) -> Self {
        LevelSpec { levels }
    }

    pub fn uniform(level: u32) -> Self {
        LevelSpec { levels: [level; 3] }
    }

    pub fn get(&self, axis: Axis) -> u32 {
        self.levels[axis.index()]
    }

    pub fn max_level(&self) -> u32 {
        self.levels.iter().copied().max().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.levels == [0; 3]
    }

    /// Dims after analysis, or `NotDivisible` if an axis cannot be halved
    /// that many times.
    pub fn reduced_dims(&self, dims: [usize; 3]) -> Result<[usize; 3]> {
        let mut out = dims;
        for axis in Axis::ALL {
            let level = self.get(axis);
            if level > 0 {
                check_divisible(dims[axis.index()], level)?;
                out[axis.index()] = dims[axis.index()] >> level;
            }
        }
        Ok(out)
    }

    pub fn expanded_dims(&self, dims: [usize; 3]) -> [usize; 3] {
        let mut out = dims;
        for axis in Axis::ALL {
            out[axis.index()] = dims[axis.index()] << self.get(axis);
        }
        out
    }
}

/// Low-pass and high-pass analysis of every fiber along `axis`.
pub fn analyze_axis(t: &Tensor3, axis: Axis, bank: &FilterBank) -> Result<(Tensor3, Tensor3)> {
    let dims = t.dims();
    let n = dims[axis.index()];
    if !n.is_multiple_of(2) {
        return Err(Error::OddAxisLength { axis, len: n });
    }
    let mut half = dims;
    half[axis.index()] = n / 2;
    let mut low = Array3::<f64>::zeros(half);
    let mut high = Array3::<f64>::zeros(half);
    let ax = ndarray::Axis(axis.index());
    let mut fiber = vec![0.0; n];
    let mut lo_buf = vec![0.0; n / 2];
    let mut hi_buf = vec![0.0; n / 2];
    Zip::from(t.array().lanes(ax))
        .and(low.lanes_mut(ax))
        .and(high.lanes_mut(ax))
        .for_each(|src, mut lo, mut hi| {
            fiber.iter_mut().zip(src.iter()).for_each(|(d, s)| *d = *s);
            analyze_into(&fiber, &bank.dec_lo, &bank.dec_hi, &mut lo_buf, &mut hi_buf);
            lo.iter_mut().zip(&lo_buf).for_each(|(d, s)| *d = *s);
            hi.iter_mut().zip(&hi_buf).for_each(|(d, s)| *d = *s);
        });
    Ok((Tensor3::from_array(low), Tensor3::from_array(high)))
}

/// Inverse of [`analyze_axis`]: doubles `axis`.
pub fn synthesize_axis(
    low: &Tensor3,
    high: &Tensor3,
    axis: Axis,
    bank: &FilterBank,
) -> Result<Tensor3> {
    if low.dims() != high.dims() {
        return Err(Error::ShapeMismatch(format!(
            "low band {:?} vs high band {:?}",
            low.dims(),
            high.dims()
        )));
    }
    let dims = low.dims();
    let m = dims[axis.index()];
    if m == 0 {
        return Err(Error::NotPositiveShape(dims));
    }
    let mut full = dims;
    full[axis.index()] = 2 * m;
    let mut out = Array3::<f64>::zeros(full);
    let ax = ndarray::Axis(axis.index());
    let mut a_buf = vec![0.0; m];
    let mut d_buf = vec![0.0; m];
    let mut fiber = vec![0.0; 2 * m];
    Zip::from(out.lanes_mut(ax))
        .and(low.array().lanes(ax))
        .and(high.array().lanes(ax))
        .for_each(|mut dst, a, d| {
            a_buf.iter_mut().zip(a.iter()).for_each(|(x, s)| *x = *s);
            d_buf.iter_mut().zip(d.iter()).for_each(|(x, s)| *x = *s);
            synthesize_into(&a_buf, &d_buf, &bank.rec_lo, &bank.rec_hi, &mut fiber);
            dst.iter_mut().zip(&fiber).for_each(|(x, s)| *x = *s);
        });
    Ok(Tensor3::from_array(out))
}

/// Analyzes along each axis of `axes` in turn and returns all `2^axes.len()`
/// bands indexed by high-pass mask (first axis is the most significant bit).
pub fn analyze_axes(t: &Tensor3, axes: &[Axis], bank: &FilterBank) -> Result<Vec<Tensor3>> {
    let mut bands = vec![t.clone()];
    for &axis in axes {
        let mut next = Vec::with_capacity(bands.len() * 2);
        for band in &bands {
            let (lo, hi) = analyze_axis(band, axis, bank)?;
            next.push(lo);
            next.push(hi);
        }
        bands = next;
    }
    Ok(bands)
}

/// Inverse of [`analyze_axes`].
pub fn synthesize_axes(bands: Vec<Tensor3>, axes: &[Axis], bank: &FilterBank) -> Result<Tensor3> {
    if bands.len() != 1 << axes.len() {
        return Err(Error::ShapeMismatch(format!(
            "{} bands supplied for {} axes",
            bands.len(),
            axes.len()
        )));
    }
    let dims = bands[0].dims();
    if let Some(bad) = bands.iter().find(|b| b.dims() != dims) {
        return Err(Error::ShapeMismatch(format!(
            "band dims {:?} differ from {:?}",
            bad.dims(),
            dims
        )));
    }
    let mut bands = bands;
    for &axis in axes.iter().rev() {
        let mut merged = Vec::with_capacity(bands.len() / 2);
        let mut iter = bands.into_iter();
        while let (Some(lo), Some(hi)) = (iter.next(), iter.next()) {
            merged.push(synthesize_axis(&lo, &hi, axis, bank)?);
        }
        bands = merged;
    }
    Ok(bands.pop().expect("one band remains"))
}

/// Single-level 3D analysis along L, then Din, then Dout.
pub fn dwt3d(t: &Tensor3, bank: &FilterBank) -> Result<SubbandSet> {
    Ok(SubbandSet::from_masked(analyze_axes(t, &Axis::ALL, bank)?))
}

/// 3D analysis applying the axes in a caller-chosen order. Bands are still
/// labeled by the canonical (L, Din, Dout) pattern.
pub fn dwt3d_ordered(t: &Tensor3, bank: &FilterBank, order: [Axis; 3]) -> Result<SubbandSet> {
    let bands = analyze_axes(t, &order, bank)?;
    let mut canonical: Vec<Option<Tensor3>> = vec![None; 8];
    for (mask, band) in bands.into_iter().enumerate() {
        let mut label = 0usize;
        for (pos, axis) in order.iter().enumerate() {
            if mask & (1 << (2 - pos)) != 0 {
                label |= 1 << (2 - axis.index());
            }
        }
        canonical[label] = Some(band);
    }
    let bands = canonical
        .into_iter()
        .map(|b| b.ok_or_else(|| Error::ShapeMismatch("axis order repeats an axis".into())))
        .collect::<Result<Vec<_>>>()?;
    Ok(SubbandSet::from_masked(bands))
}

pub fn idwt3d(s: &SubbandSet, bank: &FilterBank) -> Result<Tensor3> {
    synthesize_axes(s.clone().into_masked(), &Axis::ALL, bank)
}

/// Keeps only the all-low-pass band after `spec` levels of analysis per
/// axis. Axes are processed one at a time to completion.
pub fn analyze_to_approx(t: &Tensor3, spec: LevelSpec, bank: &FilterBank) -> Result<Tensor3> {
    spec.reduced_dims(t.dims())?;
    let mut current = t.clone();
    for axis in Axis::ALL {
        for _ in 0..spec.get(axis) {
            current = analyze_axis(&current, axis, bank)?.0;
        }
    }
    Ok(current)
}

/// Supplies detail bands for each synthesis step of
/// [`synthesize_from_approx`].
pub trait DetailSource {
    /// Returns `count` detail bands, each shaped like `low`, for synthesis
    /// step `step` (0 is the first, coarsest step). Bands are in mask order
    /// 1..=count over the axes active in this step.
    fn detail_bands(&mut self, step: u32, low: &Tensor3, count: usize) -> Vec<Tensor3>;
}

/// All-zero detail bands.
#[derive(Debug, Clone, Copy, Default)]
pub struct ZeroDetails;

impl DetailSource for ZeroDetails {
    fn detail_bands(&mut self, _step: u32, low: &Tensor3, count: usize) -> Vec<Tensor3> {
        vec![Tensor3::zeros(low.dims()); count]
    }
}

/// Expands `approx` by `spec` synthesis levels per axis. Step `s` runs a
/// joint synthesis over every axis whose level exceeds `s`.
pub fn synthesize_from_approx(
    approx: &Tensor3,
    spec: LevelSpec,
    bank: &FilterBank,
    details: &mut dyn DetailSource,
) -> Result<Tensor3> {
    let dims = approx.dims();
    if dims.contains(&0) {
        return Err(Error::NotPositiveShape(dims));
    }
    let mut current = approx.clone();
    for step in 0..spec.max_level() {
        let axes: Vec<Axis> = Axis::ALL
            .into_iter()
            .filter(|a| spec.get(*a) > step)
            .collect();
        let count = (1usize << axes.len()) - 1;
        let supplied = details.detail_bands(step, &current, count);
        if supplied.len() != count {
            return Err(Error::ShapeMismatch(format!(
                "detail source returned {} bands, expected {count}",
                supplied.len()
            )));
        }
        let mut bands = Vec::with_capacity(count + 1);
        bands.push(current);
        bands.extend(supplied);
        current = synthesize_axes(bands, &axes, bank)?;
    }
    Ok(current)
}

/// Single-level analysis and synthesis over every axis longer than one.
/// Returns the max abs reconstruction error, or `None` when such an axis has
/// odd length.
pub fn round_trip_error(t: &Tensor3, bank: &FilterBank) -> Result<Option<f64>> {
    let dims = t.dims();
    let axes: Vec<Axis> = Axis::ALL
        .into_iter()
        .filter(|a| dims[a.index()] > 1)
        .collect();
    if axes.iter().any(|a| dims[a.index()] % 2 == 1) {
        return Ok(None);
    }
    let bands = analyze_axes(t, &axes, bank)?;
    let back = synthesize_axes(bands, &axes, bank)?;
    Ok(Some(back.max_abs_diff(t)))
}
