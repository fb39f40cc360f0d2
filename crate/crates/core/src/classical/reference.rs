//! Naive double-loop dilation and erosion.
//!
//! These are the oracles the optimized kernels are checked against. They
//! accept a structuring function of either kind and always combine with
//! ordinary `+`/`-`.

use crate::image::Image;
use crate::sf::StructuringFunction;

pub fn dilate(f: &Image, b: &StructuringFunction) -> Image {
    let (w, h) = (f.width() as isize, f.height() as isize);
    let mut out = Vec::with_capacity(f.pixels().len());
    for y in 0..h {
        for x in 0..w {
            let mut acc = f64::NEG_INFINITY;
            for (dx, dy, v) in b.taps() {
                let (sx, sy) = (x - dx, y - dy);
                if sx >= 0 && sx < w && sy >= 0 && sy < h {
                    let c = f.get(sx as usize, sy as usize) + v;
                    if c > acc {
                        acc = c;
                    }
                }
            }
            out.push(acc);
        }
    }
    Image::from_parts(f, out)
}

pub fn erode(f: &Image, b: &StructuringFunction) -> Image {
    let (w, h) = (f.width() as isize, f.height() as isize);
    let mut out = Vec::with_capacity(f.pixels().len());
    for y in 0..h {
        for x in 0..w {
            let mut acc = f64::INFINITY;
            for (dx, dy, v) in b.taps() {
                let (sx, sy) = (x + dx, y + dy);
                if sx >= 0 && sx < w && sy >= 0 && sy < h {
                    let c = f.get(sx as usize, sy as usize) - v;
                    if c < acc {
                        acc = c;
                    }
                }
            }
            out.push(acc);
        }
    }
    Image::from_parts(f, out)
}
