//! Grey-level mathematical morphology, classical and logarithmic.
//!
//! The logarithmic operators replace the `+`/`-` used to combine an image
//! with its structuring function by the addition and difference of the
//! Logarithmic Image Processing (LIP) model. They act on the lattice
//! `[-inf, M]^D`, never push values above the grey-scale bound `M`, and
//! respond to an exposure change (a LIP-added constant) by the same
//! LIP-added constant.
//!
//! * [`lip`]: scalar LIP arithmetic and the acute isomorphism.
//! * [`image`], [`sf`], [`io`]: images, structuring functions, files.
//! * [`classical`]: additive dilation, erosion, opening, closing, gradient.
//! * [`logarithmic`]: their logarithmic counterparts, with a direct and an
//!   isomorphism-based implementation.
//! * [`ops`], [`study`]: uniform dispatch and the comparison experiments.
//!
//! Kernels are data-parallel over output rows. The `parallel` feature
//! (on by default) runs them on the rayon pool; without it they run on the
//! calling thread. See [`Exec`].

pub mod classical;
pub mod error;
mod exec;
pub mod image;
pub mod io;
pub mod lip;
pub mod logarithmic;
pub mod ops;
pub mod sf;
pub mod study;
pub mod testing;

pub use error::{Error, Result};
pub use exec::Exec;
pub use image::Image;
pub use lip::{AcuteValue, GreyScale, GreyValue};
pub use logarithmic::Implementation;
pub use ops::{Mode, MorphOp};
pub use sf::{SfKind, SfShape, StructuringFunction};
