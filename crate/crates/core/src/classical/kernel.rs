//! Sup/inf kernels shared by the classical and logarithmic operators.
//!
//! A kernel reduces, for every output pixel `p`, the values
//! `combine(f(p + s), w)` over its taps `(s, w)` with max or min. Samples
//! outside the domain are skipped, which is the same as padding with the
//! neutral element of the reduction. Pixels with no in-domain sample keep
//! `init`.
//!
//! Two strategies are used:
//! * tap-major row sweeps: for each output row and each tap, one contiguous
//!   slice of the source row is combined into the accumulator row. Works
//!   for any taps and any monotone `combine`.
//! * van Herk/Gil-Werman running extrema, for flat taps whose source
//!   offsets form one contiguous run per row (discs, rectangles, lines).
//!   The cost per pixel is a few comparisons per row of the footprint,
//!   independent of its width. The flat value is applied by the caller.

use crate::exec::{self, Exec};
use crate::image::Image;

#[derive(Debug, Clone, Copy)]
pub(crate) struct Tap {
    /// Source offset: output pixel `(x, y)` reads `(x + sx, y + sy)`.
    pub sx: isize,
    pub sy: isize,
    pub w: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Extremum {
    Max,
    Min,
}

impl Extremum {
    #[inline(always)]
    fn pick(self, acc: f64, v: f64) -> f64 {
        match self {
            Extremum::Max if v > acc => v,
            Extremum::Min if v < acc => v,
            _ => acc,
        }
    }

    /// The value that never wins the reduction.
    pub fn neutral(self) -> f64 {
        match self {
            Extremum::Max => f64::NEG_INFINITY,
            Extremum::Min => f64::INFINITY,
        }
    }
}

/// Overlap of a row of length `width` shifted by `sx`: output columns
/// `[x0, x1)` read source columns `[x0 + sx, x1 + sx)`.
#[inline]
fn overlap(width: usize, sx: isize) -> Option<(usize, usize)> {
    let w = width as isize;
    let x0 = (-sx).max(0);
    let x1 = (w - sx).min(w);
    (x0 < x1).then_some((x0 as usize, x1 as usize))
}

pub(crate) fn reduce_taps<C>(
    img: &Image,
    taps: &[Tap],
    ext: Extremum,
    init: f64,
    combine: C,
    exec: Exec,
) -> Vec<f64>
where
    C: Fn(f64, f64) -> f64 + Sync + Send,
{
    let (width, height) = (img.width(), img.height());
    let src = img.pixels();
    let mut out = vec![0.0; src.len()];
    exec::for_each_row(&mut out, width, exec, |y, row| {
        row.fill(init);
        for t in taps {
            let yy = y as isize + t.sy;
            if yy < 0 || yy >= height as isize {
                continue;
            }
            let Some((x0, x1)) = overlap(width, t.sx) else {
                continue;
            };
            let base = yy as usize * width;
            let s0 = (x0 as isize + t.sx) as usize;
            let s = &src[base + s0..base + s0 + (x1 - x0)];
            for (acc, &v) in row[x0..x1].iter_mut().zip(s) {
                *acc = ext.pick(*acc, combine(v, t.w));
            }
        }
    });
    out
}

/// Per source row `sy`, the contiguous run `[lo, hi]` of source column
/// offsets. `None` when some row is not a single run.
pub(crate) fn row_runs(taps: &[Tap]) -> Option<Vec<(isize, isize, isize)>> {
    let mut rows: Vec<(isize, Vec<isize>)> = Vec::new();
    for t in taps {
        match rows.iter_mut().find(|(sy, _)| *sy == t.sy) {
            Some((_, xs)) => xs.push(t.sx),
            None => rows.push((t.sy, vec![t.sx])),
        }
    }
    rows.into_iter()
        .map(|(sy, mut xs)| {
            xs.sort_unstable();
            xs.dedup();
            let (lo, hi) = (xs[0], xs[xs.len() - 1]);
            ((hi - lo + 1) as usize == xs.len()).then_some((sy, lo, hi))
        })
        .collect()
}

/// Running extremum over windows of length `k` of `padded`:
/// `out[x] = ext(padded[x..x + k])`, for `x` in `0..out.len()`.
fn running_extremum(
    padded: &[f64],
    k: usize,
    ext: Extremum,
    out: &mut [f64],
    g: &mut Vec<f64>,
    h: &mut Vec<f64>,
) {
    let n = padded.len();
    g.clear();
    g.resize(n, 0.0);
    h.clear();
    h.resize(n, 0.0);
    for start in (0..n).step_by(k) {
        let end = (start + k).min(n);
        g[start] = padded[start];
        for j in start + 1..end {
            g[j] = ext.pick(g[j - 1], padded[j]);
        }
        h[end - 1] = padded[end - 1];
        for j in (start..end - 1).rev() {
            h[j] = ext.pick(h[j + 1], padded[j]);
        }
    }
    for (x, o) in out.iter_mut().enumerate() {
        *o = ext.pick(h[x], g[x + k - 1]);
    }
}

/// Extremum of `f` over a flat footprint given as row runs. Pixels with no
/// in-domain sample get the neutral element of `ext`.
pub(crate) fn flat_extremum(
    img: &Image,
    runs: &[(isize, isize, isize)],
    ext: Extremum,
    exec: Exec,
) -> Vec<f64> {
    let (width, height) = (img.width(), img.height());
    let src = img.pixels();
    let pad = ext.neutral();
    let mut out = vec![0.0; src.len()];
    exec::for_each_row(&mut out, width, exec, |y, row| {
        row.fill(pad);
        let mut padded = Vec::new();
        let mut window = vec![0.0; width];
        let (mut g, mut h) = (Vec::new(), Vec::new());
        for &(sy, lo, hi) in runs {
            let yy = y as isize + sy;
            if yy < 0 || yy >= height as isize {
                continue;
            }
            let line = &src[yy as usize * width..(yy as usize + 1) * width];
            let k = (hi - lo + 1) as usize;
            // padded[j] = line[j + lo], for window starts x in 0..width
            padded.clear();
            padded.extend((0..width + k - 1).map(|j| {
                let sx = j as isize + lo;
                if sx >= 0 && sx < width as isize {
                    line[sx as usize]
                } else {
                    pad
                }
            }));
            running_extremum(&padded, k, ext, &mut window, &mut g, &mut h);
            for (acc, &v) in row.iter_mut().zip(&window) {
                *acc = ext.pick(*acc, v);
            }
        }
    });
    out
}
