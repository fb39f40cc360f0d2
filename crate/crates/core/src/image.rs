//! Grey-level images over a finite rectangular domain.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::exec::{self, Exec};
use crate::lip::{GreyScale, GreyValue};

/// A row-major `width x height` grid of grey values sharing one grey scale.
///
/// Pixels are extended reals. Morphological results routinely leave the
/// displayable range `[0, M[` (classical dilation can exceed `M`, erosions
/// go negative) and the image carries them losslessly; only NaN is
/// rejected. Operators that work on the logarithmic lattice check the
/// `<= M` bound themselves. One-dimensional signals are images of height 1.
#[derive(Debug, Clone, PartialEq)]
pub struct Image {
    width: usize,
    height: usize,
    pixels: Vec<GreyValue>,
    scale: GreyScale,
}

impl Image {
    pub fn new(
        width: usize,
        height: usize,
        pixels: Vec<GreyValue>,
        scale: GreyScale,
    ) -> Result<Self> {
        if width == 0 || height == 0 {
            return Err(Error::EmptyImage { width, height });
        }
        if pixels.len() != width * height {
            return Err(Error::PixelCount {
                expected: width * height,
                got: pixels.len(),
            });
        }
        if pixels.iter().any(|v| v.is_nan()) {
            return Err(Error::NotANumber);
        }
        Ok(Image {
            width,
            height,
            pixels,
            scale,
        })
    }

    /// A one-row image.
    pub fn signal(values: Vec<GreyValue>, scale: GreyScale) -> Result<Self> {
        Image::new(values.len(), 1, values, scale)
    }

    pub fn constant(
        width: usize,
        height: usize,
        value: GreyValue,
        scale: GreyScale,
    ) -> Result<Self> {
        Image::new(width, height, vec![value; width * height], scale)
    }

    pub fn from_fn<F>(width: usize, height: usize, scale: GreyScale, mut f: F) -> Result<Self>
    where
        F: FnMut(usize, usize) -> GreyValue,
    {
        let mut pixels = Vec::with_capacity(width * height);
        for y in 0..height {
            for x in 0..width {
                pixels.push(f(x, y));
            }
        }
        Image::new(width, height, pixels, scale)
    }

    /// Wraps a buffer produced by a kernel from a valid image of the same shape.
    pub(crate) fn from_parts(template: &Image, pixels: Vec<GreyValue>) -> Image {
        debug_assert_eq!(pixels.len(), template.pixels.len());
        Image {
            width: template.width,
            height: template.height,
            pixels,
            scale: template.scale,
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn scale(&self) -> GreyScale {
        self.scale
    }

    pub fn pixels(&self) -> &[GreyValue] {
        &self.pixels
    }

    pub fn into_pixels(self) -> Vec<GreyValue> {
        self.pixels
    }

    pub fn get(&self, x: usize, y: usize) -> GreyValue {
        self.pixels[y * self.width + x]
    }

    /// The same pixels interpreted on another grey scale.
    pub fn with_scale(mut self, scale: GreyScale) -> Self {
        self.scale = scale;
        self
    }

    pub fn min(&self) -> GreyValue {
        self.pixels.iter().copied().fold(f64::INFINITY, f64::min)
    }

    pub fn max(&self) -> GreyValue {
        self.pixels
            .iter()
            .copied()
            .fold(f64::NEG_INFINITY, f64::max)
    }

    /// Every pixel lies in `[0, M[`.
    pub fn is_displayable(&self) -> bool {
        let m = self.scale.m();
        self.pixels.iter().all(|&v| (0.0..m).contains(&v))
    }

    /// Every pixel is an integer in `0..=255`, i.e. the image can be
    /// written to an 8-bit file as is.
    pub fn is_8bit(&self) -> bool {
        self.pixels.iter().all(|&v| is_8bit_value(v))
    }

    pub(crate) fn check_same_shape(&self, other: &Image) -> Result<()> {
        if self.width != other.width || self.height != other.height {
            return Err(Error::ShapeMismatch(
                self.width,
                self.height,
                other.width,
                other.height,
            ));
        }
        if self.scale != other.scale {
            return Err(Error::ScaleMismatch(self.scale.m(), other.scale.m()));
        }
        Ok(())
    }

    /// Fails unless every pixel is `<= M`, the bound of the logarithmic lattice.
    pub(crate) fn check_bounded(&self) -> Result<()> {
        let m = self.scale.m();
        match self.pixels.iter().find(|&&v| v > m) {
            Some(&v) => Err(Error::AboveScale(v, m)),
            None => Ok(()),
        }
    }

    pub(crate) fn map(&self, f: impl Fn(GreyValue) -> GreyValue + Sync + Send) -> Image {
        Image::from_parts(self, exec::map(&self.pixels, Exec::default(), f))
    }

    pub(crate) fn try_map(&self, f: impl Fn(GreyValue) -> Result<GreyValue>) -> Result<Image> {
        let pixels = self
            .pixels
            .iter()
            .map(|&v| f(v))
            .collect::<Result<Vec<_>>>()?;
        Ok(Image::from_parts(self, pixels))
    }

    /// Pixel-wise supremum of two images.
    pub fn sup(&self, other: &Image) -> Result<Image> {
        self.check_same_shape(other)?;
        let px = exec::zip_map(&self.pixels, &other.pixels, Exec::default(), |a, b| {
            if b > a {
                b
            } else {
                a
            }
        });
        Ok(Image::from_parts(self, px))
    }

    /// Pixel-wise infimum of two images.
    pub fn inf(&self, other: &Image) -> Result<Image> {
        self.check_same_shape(other)?;
        let px = exec::zip_map(&self.pixels, &other.pixels, Exec::default(), |a, b| {
            if b < a {
                b
            } else {
                a
            }
        });
        Ok(Image::from_parts(self, px))
    }

    /// `self <= other` at every pixel.
    pub fn le(&self, other: &Image) -> Result<bool> {
        self.check_same_shape(other)?;
        Ok(self.pixels.iter().zip(&other.pixels).all(|(a, b)| a <= b))
    }

    /// Largest absolute pixel difference. Equal infinities count as zero,
    /// any other pairing involving an infinity as `+inf`.
    pub fn max_abs_diff(&self, other: &Image) -> Result<f64> {
        self.check_same_shape(other)?;
        Ok(self
            .pixels
            .iter()
            .zip(&other.pixels)
            .map(|(&a, &b)| if a == b { 0.0 } else { (a - b).abs() })
            .fold(0.0, f64::max))
    }
}

fn is_8bit_value(v: f64) -> bool {
    (0.0..=255.0).contains(&v) && v.fract() == 0.0
}

/// Round half up, as used at save and display time.
pub(crate) fn round_half_up(v: f64) -> f64 {
    (v + 0.5).floor()
}

/// The complement `M - 1 - f`. Defined on images valued in `[0, M - 1]`,
/// where it is an involution exchanging bright and dark.
pub fn complement(img: &Image) -> Result<Image> {
    let top = img.scale.m() - 1.0;
    img.try_map(|v| {
        if (0.0..=top).contains(&v) {
            Ok(top - v)
        } else {
            Err(Error::ComplementRange(v))
        }
    })
}

/// Min-max rescale onto `0..=255` followed by round-half-up.
///
/// A constant image maps to constant `0`.
pub fn rescale_for_display(img: &Image) -> Result<Image> {
    if img.pixels.iter().any(|v| v.is_infinite()) {
        return Err(Error::Unbounded);
    }
    let lo = img.min();
    let hi = img.max();
    if lo == hi {
        return Ok(img.map(|_| 0.0));
    }
    let span = hi - lo;
    Ok(img.map(|v| round_half_up((v - lo) * 255.0 / span).clamp(0.0, 255.0)))
}

/// Round-half-up and clamp to `0..=255`, for saving results that were not
/// rescaled. Infinities clamp to the nearest end.
pub fn quantize_for_display(img: &Image) -> Image {
    img.map(|v| round_half_up(v.clamp(0.0, 255.0)).min(255.0))
}

/// Simulates a change of exposure time by LIP-adding the constant `c`
/// to every pixel: `c > 0` darkens (in LIP orientation), the opposite of
/// `c` brightens and undoes it.
pub fn exposure_change(img: &Image, c: GreyValue) -> Result<Image> {
    let s = img.scale;
    if c.is_nan() {
        return Err(Error::NotANumber);
    }
    if c >= s.m() {
        return Err(Error::AboveScale(c, s.m()));
    }
    img.try_map(|v| s.plus(v, c))
}

/// Parameters of the two-bump test signal.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoPeaksParams {
    pub baseline: f64,
    pub low_peak: f64,
    pub high_peak: f64,
}

impl Default for TwoPeaksParams {
    fn default() -> Self {
        TwoPeaksParams {
            baseline: 10.0,
            low_peak: 120.0,
            high_peak: 230.0,
        }
    }
}

pub const MIN_SIGNAL_LENGTH: usize = 16;

/// A deterministic 1-D signal made of two raised-cosine bumps on a flat
/// baseline: a low one centred at `length/4` and a high one at
/// `3 length/4`, each of half-width `length/8`.
pub fn synth_two_peaks_signal(
    length: usize,
    params: &TwoPeaksParams,
    scale: GreyScale,
) -> Result<Image> {
    if length < MIN_SIGNAL_LENGTH {
        return Err(Error::SignalTooShort {
            min: MIN_SIGNAL_LENGTH,
            got: length,
        });
    }
    let n = length as f64;
    let half_width = n / 8.0;
    let bump = |x: f64, centre: f64| {
        let t = (x - centre).abs() / half_width;
        if t < 1.0 {
            0.5 * (1.0 + (PI * t).cos())
        } else {
            0.0
        }
    };
    let TwoPeaksParams {
        baseline,
        low_peak,
        high_peak,
    } = *params;
    let values = (0..length)
        .map(|i| {
            let x = i as f64;
            baseline
                + (low_peak - baseline) * bump(x, n / 4.0)
                + (high_peak - baseline) * bump(x, 3.0 * n / 4.0)
        })
        .collect();
    Image::signal(values, scale)
}
