//! Uniform dispatch over operators and frameworks, as used by the CLI and
//! the experiment drivers.

use std::fmt;
use std::str::FromStr;

use crate::classical;
use crate::error::{Error, Result};
use crate::image::Image;
use crate::logarithmic::{self, Implementation};
use crate::sf::{SfKind, SfShape};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MorphOp {
    Erode,
    Dilate,
    Open,
    Close,
    Gradient,
}

impl MorphOp {
    pub const ALL: [MorphOp; 5] = [
        MorphOp::Erode,
        MorphOp::Dilate,
        MorphOp::Open,
        MorphOp::Close,
        MorphOp::Gradient,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MorphOp::Erode => "erode",
            MorphOp::Dilate => "dilate",
            MorphOp::Open => "open",
            MorphOp::Close => "close",
            MorphOp::Gradient => "gradient",
        }
    }
}

/// Which morphology: additive structuring functions with `+`/`-`, or
/// logarithmic ones with the LIP laws.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Classical,
    Log,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Classical => "classical",
            Mode::Log => "log",
        }
    }

    pub fn sf_kind(self) -> SfKind {
        match self {
            Mode::Classical => SfKind::Additive,
            Mode::Log => SfKind::Logarithmic,
        }
    }
}

impl fmt::Display for MorphOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MorphOp {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        MorphOp::ALL
            .into_iter()
            .find(|op| op.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown operator '{s}'")))
    }
}

impl FromStr for Mode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "classical" => Ok(Mode::Classical),
            "log" => Ok(Mode::Log),
            _ => Err(Error::Parse(format!("unknown mode '{s}'"))),
        }
    }
}

/// Applies `op` in `mode` with the structuring function described by
/// `shape`. `imp` only matters in log mode.
pub fn apply(
    op: MorphOp,
    mode: Mode,
    f: &Image,
    shape: &SfShape,
    imp: Implementation,
) -> Result<Image> {
    let b = shape.build(mode.sf_kind(), f.scale())?;
    match mode {
        Mode::Classical => match op {
            MorphOp::Erode => classical::erode(f, &b),
            MorphOp::Dilate => classical::dilate(f, &b),
            MorphOp::Open => classical::open(f, &b),
            MorphOp::Close => classical::close(f, &b),
            MorphOp::Gradient => classical::gradient(f, &b),
        },
        Mode::Log => match op {
            MorphOp::Erode => logarithmic::log_erode(f, &b, imp),
            MorphOp::Dilate => logarithmic::log_dilate(f, &b, imp),
            MorphOp::Open => logarithmic::log_open(f, &b, imp),
            MorphOp::Close => logarithmic::log_close(f, &b, imp),
            MorphOp::Gradient => logarithmic::log_gradient(f, &b, imp),
        },
    }
}
