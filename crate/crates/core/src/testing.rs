//! Random inputs for property checks: images with a controlled mix of
//! finite and extreme values, and random structuring functions.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::image::Image;
use crate::lip::GreyScale;
use crate::sf::{SfKind, StructuringFunction};

/// Distribution of random pixel values.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ValueMix {
    /// Finite values are drawn uniformly from `[lo, hi)`.
    pub lo: f64,
    pub hi: f64,
    /// Round finite values to integers.
    pub integer: bool,
    /// Probability of a `-inf` pixel.
    pub p_bottom: f64,
    /// Probability of a pixel equal to `M`.
    pub p_top: f64,
}

impl ValueMix {
    pub fn finite(lo: f64, hi: f64) -> Self {
        ValueMix {
            lo,
            hi,
            integer: false,
            p_bottom: 0.0,
            p_top: 0.0,
        }
    }

    pub fn integers(lo: f64, hi: f64) -> Self {
        ValueMix {
            integer: true,
            ..ValueMix::finite(lo, hi)
        }
    }

    pub fn with_extremes(self, p_bottom: f64, p_top: f64) -> Self {
        ValueMix {
            p_bottom,
            p_top,
            ..self
        }
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R, scale: GreyScale) -> f64 {
        let u: f64 = rng.random();
        if u < self.p_bottom {
            f64::NEG_INFINITY
        } else if u < self.p_bottom + self.p_top {
            scale.m()
        } else {
            let v = rng.random_range(self.lo..self.hi);
            if self.integer {
                v.floor()
            } else {
                v
            }
        }
    }
}

pub fn random_image<R: Rng + ?Sized>(
    rng: &mut R,
    width: usize,
    height: usize,
    scale: GreyScale,
    mix: &ValueMix,
) -> Image {
    let pixels = (0..width * height)
        .map(|_| mix.sample(rng, scale))
        .collect();
    Image::new(width, height, pixels, scale).expect("valid random image")
}

/// Between 1 and `max_len` distinct offsets in `[-reach, reach]^2`.
pub fn random_offsets<R: Rng + ?Sized>(
    rng: &mut R,
    max_len: usize,
    reach: isize,
) -> Vec<(isize, isize)> {
    let mut all: Vec<(isize, isize)> = (-reach..=reach)
        .flat_map(|dy| (-reach..=reach).map(move |dx| (dx, dy)))
        .collect();
    all.shuffle(rng);
    let n = rng.random_range(1..=max_len.clamp(1, all.len()));
    all.truncate(n);
    all
}

/// A random structuring function of `kind` whose values are drawn from
/// the finite part of `values`. That range must be admissible for `kind`.
pub fn random_sf<R: Rng + ?Sized>(
    rng: &mut R,
    kind: SfKind,
    scale: GreyScale,
    max_len: usize,
    reach: isize,
    values: &ValueMix,
) -> StructuringFunction {
    let finite = ValueMix {
        p_bottom: 0.0,
        p_top: 0.0,
        ..*values
    };
    let entries = random_offsets(rng, max_len, reach)
        .into_iter()
        .map(|o| (o, finite.sample(rng, scale)))
        .collect();
    StructuringFunction::new(entries, kind, scale).expect("admissible random structuring function")
}
