//! Desk-scale experiments comparing classical and logarithmic morphology.
//!
//! * [`fig1_study`] runs erosion, dilation, opening and closing in both
//!   frameworks on the synthetic two-bump signal with a hemispheric
//!   structuring function.
//! * [`exposure_study`] darkens an image by a LIP-added constant, a
//!   stand-in for a shorter exposure time, and measures how much the
//!   classical and logarithmic gradients change. Both gradients are
//!   computed on complemented images, rescaled to `0..=255`, and compared
//!   with the Pearson correlation between the bright and dark results.

use crate::error::Result;
use crate::image::{self, Image, TwoPeaksParams};
use crate::lip::GreyScale;
use crate::logarithmic::Implementation;
use crate::ops::{apply, Mode, MorphOp};
use crate::sf::SfShape;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Fig1Config {
    pub length: usize,
    pub params: TwoPeaksParams,
    pub radius: f64,
    pub amplitude: f64,
    pub implementation: Implementation,
    pub scale: GreyScale,
}

impl Default for Fig1Config {
    fn default() -> Self {
        Fig1Config {
            length: 512,
            params: TwoPeaksParams::default(),
            radius: 20.0,
            amplitude: 64.0,
            implementation: Implementation::default(),
            scale: GreyScale::default(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Fig1Output {
    pub op: MorphOp,
    pub mode: Mode,
    pub result: Image,
}

#[derive(Debug, Clone)]
pub struct Fig1Run {
    pub signal: Image,
    pub outputs: Vec<Fig1Output>,
}

pub const FIG1_OPS: [MorphOp; 4] = [
    MorphOp::Erode,
    MorphOp::Dilate,
    MorphOp::Open,
    MorphOp::Close,
];

pub fn fig1_study(cfg: &Fig1Config) -> Result<Fig1Run> {
    let signal = image::synth_two_peaks_signal(cfg.length, &cfg.params, cfg.scale)?;
    let shape = SfShape::Hemisphere {
        radius: cfg.radius,
        amplitude: cfg.amplitude,
    };
    let mut outputs = Vec::with_capacity(8);
    for op in FIG1_OPS {
        for mode in [Mode::Classical, Mode::Log] {
            let result = apply(op, mode, &signal, &shape, cfg.implementation)?;
            outputs.push(Fig1Output { op, mode, result });
        }
    }
    Ok(Fig1Run { signal, outputs })
}

impl Fig1Run {
    pub fn get(&self, op: MorphOp, mode: Mode) -> Option<&Image> {
        self.outputs
            .iter()
            .find(|o| o.op == op && o.mode == mode)
            .map(|o| &o.result)
    }

    /// Mean `|opening - log opening|` over samples of the input above
    /// `3M/4` and below `M/4`, in that order.
    pub fn opening_disparity(&self) -> (f64, f64) {
        let (Some(g), Some(gl)) = (
            self.get(MorphOp::Open, Mode::Classical),
            self.get(MorphOp::Open, Mode::Log),
        ) else {
            return (f64::NAN, f64::NAN);
        };
        let m = self.signal.scale().m();
        let mean_where = |pred: &dyn Fn(f64) -> bool| {
            let (sum, n) = self
                .signal
                .pixels()
                .iter()
                .zip(g.pixels().iter().zip(gl.pixels()))
                .filter(|(&f, _)| pred(f))
                .fold((0.0, 0usize), |(s, n), (_, (a, b))| {
                    (s + (a - b).abs(), n + 1)
                });
            if n == 0 {
                f64::NAN
            } else {
                sum / n as f64
            }
        };
        (mean_where(&|f| f > 0.75 * m), mean_where(&|f| f < 0.25 * m))
    }
}

/// Pearson correlation of two equally long samples.
///
/// Identical samples score exactly `1`; a sample with zero variance
/// against a different one scores `0`.
pub fn pearson(a: &[f64], b: &[f64]) -> f64 {
    assert_eq!(a.len(), b.len(), "samples must have equal length");
    if a == b {
        return 1.0;
    }
    let n = a.len() as f64;
    let ma = a.iter().sum::<f64>() / n;
    let mb = b.iter().sum::<f64>() / n;
    let (mut sab, mut saa, mut sbb) = (0.0, 0.0, 0.0);
    for (&x, &y) in a.iter().zip(b) {
        let (dx, dy) = (x - ma, y - mb);
        sab += dx * dy;
        saa += dx * dx;
        sbb += dy * dy;
    }
    if saa == 0.0 || sbb == 0.0 {
        0.0
    } else {
        sab / (saa * sbb).sqrt()
    }
}

pub const DEFAULT_DARKENING: f64 = 192.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExposureConfig {
    /// Constant LIP-added to the complemented image to simulate the dark
    /// acquisition.
    pub darkening: f64,
    pub shape: SfShape,
    pub implementation: Implementation,
}

impl Default for ExposureConfig {
    fn default() -> Self {
        ExposureConfig {
            darkening: DEFAULT_DARKENING,
            shape: SfShape::Hemisphere {
                radius: 2.0,
                amplitude: 2.0,
            },
            implementation: Implementation::default(),
        }
    }
}

/// Rescaled gradients of the bright and simulated dark images, and the
/// stability score of each framework.
#[derive(Debug, Clone)]
pub struct ExposureStudy {
    pub bright_classical: Image,
    pub bright_log: Image,
    pub dark_classical: Image,
    pub dark_log: Image,
    pub classical_score: f64,
    pub log_score: f64,
}

/// `bright` is an ordinary display-oriented image valued in `[0, M - 1]`.
///
/// Its complement is the LIP-oriented image of the scene; the dark
/// variant is that complement LIP-plus the darkening constant, kept in
/// double precision.
pub fn exposure_study(bright: &Image, cfg: &ExposureConfig) -> Result<ExposureStudy> {
    let lit = image::complement(bright)?;
    let dark = image::exposure_change(&lit, cfg.darkening)?;
    let grad = |f: &Image, mode| -> Result<Image> {
        let g = apply(MorphOp::Gradient, mode, f, &cfg.shape, cfg.implementation)?;
        image::rescale_for_display(&g)
    };
    let bright_classical = grad(&lit, Mode::Classical)?;
    let bright_log = grad(&lit, Mode::Log)?;
    let dark_classical = grad(&dark, Mode::Classical)?;
    let dark_log = grad(&dark, Mode::Log)?;
    let classical_score = pearson(bright_classical.pixels(), dark_classical.pixels());
    let log_score = pearson(bright_log.pixels(), dark_log.pixels());
    Ok(ExposureStudy {
        bright_classical,
        bright_log,
        dark_classical,
        dark_log,
        classical_score,
        log_score,
    })
}
